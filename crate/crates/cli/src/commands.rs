use anyhow::{anyhow, bail, Context, Result};
use serde::Serialize;
use zagreb::bounds::{
    check_common_upper, check_das_upper, check_m1_lower, check_m2_lower, check_subdivision_theorem,
    check_variable_m1_lower, check_variable_m2_lower, check_variable_upper, BoundCheck,
};
use zagreb::enumeration::{
    find_min_counterexample, scan as run_scan, ClassFilter, ScanConfig, ScanReport, ScanSource,
};
use zagreb::families::{subdivide as subdivision, threshold_a};
use zagreb::indices::{variable_first_zagreb, variable_second_zagreb};
use zagreb::io::write_graph6;
use zagreb::{classify, compare_indices, first_zagreb, second_zagreb, Graph, GraphClass, IndexReport};

use crate::output::{describe_check, fmt_real, rounded, sig12, Emitter, OutputFormat};
use crate::{BoundsArgs, IndexArgs, ScanArgs, SearchArgs, SubdivideArgs, ThresholdArgs};

#[derive(Serialize)]
struct VariableValues {
    lambda: f64,
    first: f64,
    second: f64,
}

#[derive(Serialize)]
struct IndexPayload {
    report: IndexReport,
    class: GraphClass,
    variable: Vec<VariableValues>,
}

fn describe_report(id: &str, r: &IndexReport) -> String {
    format!(
        "{id}: n={} m={} M1={} M2={} M2*n-M1*m={} verdict={:?}",
        r.n, r.m, r.m1, r.m2, r.comparison, r.verdict
    )
}

pub fn index(args: &IndexArgs, format: OutputFormat) -> Result<()> {
    let emitter = Emitter { format, command: "index" };
    for item in args.input.load()? {
        let g = &item.graph;
        let report = compare_indices(g).with_context(|| item.id.clone())?;
        let variable = args
            .lambdas
            .iter()
            .map(|&lambda| {
                Ok(VariableValues {
                    lambda,
                    first: sig12(variable_first_zagreb(g, lambda)?.value),
                    second: sig12(variable_second_zagreb(g, lambda)?.value),
                })
            })
            .collect::<Result<Vec<_>, zagreb::indices::IndexError>>()
            .with_context(|| item.id.clone())?;
        let payload = IndexPayload { report, class: classify(g), variable };
        emitter.emit(&item.id, &payload, || {
            let mut text = describe_report(&item.id, &payload.report);
            for v in &payload.variable {
                text.push_str(&format!(
                    "\n  lambda={}: variable M1={} variable M2={}",
                    v.lambda,
                    fmt_real(v.first),
                    fmt_real(v.second)
                ));
            }
            text
        })?;
    }
    Ok(())
}

#[derive(Serialize)]
struct BoundsPayload {
    checks: Vec<BoundCheck>,
    all_satisfied: bool,
    any_tight: bool,
}

fn bound_checks(g: &Graph, args: &BoundsArgs) -> Result<Vec<BoundCheck>> {
    let mut checks = vec![check_m1_lower(g)?, check_m2_lower(g)?];
    let upper = check_common_upper(g)?;
    checks.extend([upper.vertex_side, upper.edge_side]);
    if args.das {
        checks.push(check_das_upper(g)?);
    }
    for &lambda in &args.lambdas {
        if lambda >= 0.5 {
            checks.push(check_variable_m1_lower(g, lambda)?);
        }
        checks.push(check_variable_m2_lower(g, lambda)?);
        let (vertex, edge) = check_variable_upper(g, lambda)?;
        checks.extend([vertex, edge]);
    }
    Ok(checks.into_iter().map(rounded).collect())
}

pub fn bounds(args: &BoundsArgs, format: OutputFormat) -> Result<()> {
    let emitter = Emitter { format, command: "bounds" };
    for item in args.input.load()? {
        let checks = bound_checks(&item.graph, args).with_context(|| item.id.clone())?;
        let payload = BoundsPayload {
            all_satisfied: checks.iter().all(|c| c.satisfied),
            any_tight: checks.iter().any(|c| c.tight),
            checks,
        };
        emitter.emit(&item.id, &payload, || {
            let mut text = format!(
                "{}: all satisfied={} any tight={}",
                item.id, payload.all_satisfied, payload.any_tight
            );
            for c in &payload.checks {
                text.push('\n');
                text.push_str(&describe_check(c));
            }
            text
        })?;
    }
    Ok(())
}

fn parse_b_range(s: &str) -> Result<(u64, u64)> {
    let parse = |t: &str| t.trim().parse::<u64>().with_context(|| format!("bad b value {t:?}"));
    let (lo, hi) = match s.split_once("..").or_else(|| s.split_once('-')) {
        Some((lo, hi)) => (parse(lo)?, parse(hi.trim_start_matches('='))?),
        None => {
            let b = parse(s)?;
            (b, b)
        }
    };
    if lo > hi {
        bail!("empty b range {s:?}");
    }
    Ok((lo, hi))
}

pub fn threshold(args: &ThresholdArgs, format: OutputFormat) -> Result<()> {
    let emitter = Emitter { format, command: "threshold" };
    let (lo, hi) = parse_b_range(&args.b)?;
    for b in lo..=hi {
        let mut t = threshold_a(b)?;
        t.root = sig12(t.root);
        emitter.emit(&format!("b={b}"), &t, || {
            format!(
                "b={} D={} a_min={} root={}",
                t.b,
                t.discriminant,
                t.a_min.map_or("none".into(), |a| a.to_string()),
                fmt_real(t.root)
            )
        })?;
    }
    Ok(())
}

#[derive(Serialize)]
struct GraphOut {
    n: usize,
    m: usize,
    graph6: String,
    edges: Vec<[usize; 2]>,
}

impl GraphOut {
    fn new(g: &Graph) -> Result<Self> {
        Ok(Self {
            n: g.order(),
            m: g.size(),
            graph6: String::from_utf8(write_graph6(g)?)?,
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        })
    }
}

#[derive(Serialize)]
struct SubdividePayload {
    subdivided: GraphOut,
    degree_multiset: Vec<usize>,
    m1: u128,
    m1_subdivided: u128,
    m2_subdivided: u128,
    /// `M1(S) = M1 + 4m`
    m1_identity: bool,
    /// `M2(S) = 2·M1`
    m2_identity: bool,
    bipartite: bool,
    report: IndexReport,
    theorem: BoundCheck,
}

pub fn subdivide(args: &SubdivideArgs, format: OutputFormat) -> Result<()> {
    let emitter = Emitter { format, command: "subdivide" };
    for item in args.input.load()? {
        let g = &item.graph;
        let s = subdivision(g);
        let m1 = first_zagreb(g);
        let (m1_s, m2_s) = (first_zagreb(&s), second_zagreb(&s));
        let payload = SubdividePayload {
            subdivided: GraphOut::new(&s)?,
            degree_multiset: s.degree_multiset(),
            m1,
            m1_subdivided: m1_s,
            m2_subdivided: m2_s,
            m1_identity: m1_s == m1 + 4 * g.size() as u128,
            m2_identity: m2_s == 2 * m1,
            bipartite: s.is_bipartite(),
            report: compare_indices(&s).with_context(|| item.id.clone())?,
            theorem: check_subdivision_theorem(g).with_context(|| item.id.clone())?,
        };
        emitter.emit(&item.id, &payload, || {
            format!(
                "{}\n  S(G): n={} m={} graph6={} bipartite={}\n  M1(S)={} (M1+4m: {}) M2(S)={} (2*M1: {})\n  verdict on S(G): {:?}",
                describe_report(&format!("S({})", item.id), &payload.report),
                payload.subdivided.n,
                payload.subdivided.m,
                payload.subdivided.graph6,
                payload.bipartite,
                payload.m1_subdivided,
                payload.m1_identity,
                payload.m2_subdivided,
                payload.m2_identity,
                payload.report.verdict
            )
        })?;
    }
    Ok(())
}

fn scan_config(args: &ScanArgs) -> Result<ScanConfig> {
    let source = match (&args.corpus, args.n_max) {
        (Some(path), _) => ScanSource::Corpus { path: path.clone() },
        (None, Some(n_max)) => ScanSource::Exhaustive { n_max },
        (None, None) => bail!("either --n-max or --corpus is required"),
    };
    let class_filter = args
        .class
        .as_deref()
        .map(|c| c.parse::<ClassFilter>().map_err(|e| anyhow!(e)))
        .transpose()?;
    let mut config = ScanConfig::exhaustive(1);
    config.source = source;
    config.connected_only = !args.include_disconnected;
    config.class_filter = class_filter;
    config.checks.bounds = args.bounds;
    config.checks.subdivision = args.subdivision;
    config.checks.lambdas = args.lambdas.clone();
    config.jobs = args.jobs;
    config.list_cap = args.list_cap;
    Ok(config)
}

fn describe_scan(r: &ScanReport) -> String {
    let mut text = format!(
        "{} connected_only={} class={}\n  scanned={} skipped_edgeless={}\n  holds_strict={} holds_with_equality={} fails={}",
        r.source,
        r.connected_only,
        r.class_filter.as_deref().unwrap_or("any"),
        r.total_scanned,
        r.skipped_edgeless,
        r.verdicts.holds_strict,
        r.verdicts.holds_with_equality,
        r.verdicts.fails,
    );
    for (name, t) in &r.classes {
        text.push_str(&format!(
            "\n  {name:<12} scanned={} fails={} equality={} (stars {}/{}, cycles {}/{}, regular {}/{})",
            t.scanned,
            t.verdicts.fails,
            t.verdicts.holds_with_equality,
            t.equality_stars,
            t.stars,
            t.equality_cycles,
            t.cycles,
            t.equality_regular,
            t.regular
        ));
    }
    for (name, t) in &r.bounds {
        text.push_str(&format!(
            "\n  bound {name:<24} checked={} violations={} tight={} missed_equality={} unexplained_tight={}",
            t.checked, t.violations, t.tight, t.missed_equality, t.unexplained_tight
        ));
    }
    for g in r.failing_graphs.iter().take(10) {
        text.push_str(&format!("\n  fails: {} (n={} m={} M2*n-M1*m={})", g.graph6, g.n, g.m, g.comparison));
    }
    if r.failures > 10 {
        text.push_str(&format!("\n  ... {} failing graphs in total", r.failures));
    }
    text
}

pub fn scan(args: &ScanArgs, format: OutputFormat) -> Result<()> {
    let config = scan_config(args)?;
    let report = run_scan(&config)?;
    let emitter = Emitter { format, command: "scan" };
    let id = report.source.clone();
    emitter.emit(&id, &report, || describe_scan(&report))
}

pub fn search(args: &SearchArgs, format: OutputFormat) -> Result<()> {
    let found = find_min_counterexample(args.cycle_rank, args.n_cap, args.jobs)?;
    let emitter = Emitter { format, command: "search" };
    let id = format!("cycle_rank={}", args.cycle_rank);
    emitter.emit(&id, &found, || match (&found.graph, &found.origin) {
        (Some(g), Some(origin)) => format!(
            "{id}: n={} m={} graph6={} M1={} M2={} M2*n-M1*m={} via {:?} (exhaustive up to n={})",
            g.n, g.m, g.graph6, g.m1, g.m2, g.comparison, origin, found.exhaustive_limit
        ),
        _ => format!(
            "{id}: no counterexample with n <= {} (exhaustive up to n={})",
            found.n_cap, found.exhaustive_limit
        ),
    })
}
