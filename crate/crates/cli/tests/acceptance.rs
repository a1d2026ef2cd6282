//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line per
//! criterion and exits non-zero if any fails.
//!
//! cargo test -p zagreb-cli --test acceptance

use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zagreb::bounds::{
    check_common_upper, check_das_upper, check_m1_lower, check_m2_lower, check_subdivision_theorem,
    check_variable_m1_lower, check_variable_m2_lower, check_variable_upper,
};
use zagreb::enumeration::{enumerate_labeled, scan, ScanConfig, ScanReport};
use zagreb::families::{
    build_counterexample_family, discriminant, family_margin, root_floor_exact, subdivide, threshold_a,
};
use zagreb::io::{parse_graph6, write_graph6, Graph6Reader};
use zagreb::{classify, compare_indices, first_zagreb, second_zagreb, Graph, Verdict};

const SEED: u64 = 0x5a67_7265_6232;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Outcome { pass: true, detail: summary }
    } else {
        let shown: Vec<_> = failures.iter().take(5).cloned().collect();
        Outcome {
            pass: false,
            detail: format!("{summary}; {} problem(s): {}", failures.len(), shown.join("; ")),
        }
    }
}

macro_rules! expect {
    ($fails:expr, $cond:expr, $($msg:tt)+) => {
        if !$cond {
            $fails.push(format!($($msg)+));
        }
    };
}

// ---------------------------------------------------------------------------
// Independent oracles: everything below works from raw degree lists with
// plain integer arithmetic.

struct Degrees {
    n: i128,
    m: i128,
    deg: Vec<i128>,
    m1: i128,
    m2: i128,
    max: i128,
    min: i128,
}

impl Degrees {
    fn of(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut deg = vec![0i128; n];
        for &(u, v) in edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        let m1 = deg.iter().map(|d| d * d).sum();
        let m2 = edges.iter().map(|&(u, v)| deg[u] * deg[v]).sum();
        Self {
            n: n as i128,
            m: edges.len() as i128,
            max: deg.iter().copied().max().unwrap_or(0),
            min: deg.iter().copied().min().unwrap_or(0),
            deg,
            m1,
            m2,
        }
    }

    fn from_graph(g: &Graph) -> Self {
        Self::of(g.order(), g.edges())
    }

    fn regular(&self) -> bool {
        self.max == self.min
    }

    fn star(&self) -> bool {
        self.n >= 2 && self.m == self.n - 1 && self.max == self.n - 1
    }

    fn complete_plus_isolated(&self) -> bool {
        let active = self.deg.iter().filter(|&&d| d > 0).count() as i128;
        active == self.max + 1
            && self.deg.iter().all(|&d| d == 0 || d == self.max)
            && self.m == self.max * (self.max + 1) / 2
    }
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.02..0.9);
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Regular, star-like and complete-plus-isolated shapes, so that every
/// equality case shows up in the random sample.
fn structured_graph(rng: &mut ChaCha8Rng) -> Graph {
    let k = rng.gen_range(2..20usize);
    match rng.gen_range(0..6) {
        0 => Graph::new(k, (1..k).map(|i| (0, i))).unwrap(),
        1 => {
            let k = k.max(3);
            Graph::new(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap()
        }
        2 => {
            let iso = rng.gen_range(0..5);
            let edges = (0..k).flat_map(|j| (0..j).map(move |i| (i, j)));
            Graph::new(k + iso, edges).unwrap()
        }
        3 => {
            // circulant: i ~ i±1..=i±r
            let n = 2 * k + 1;
            let r = rng.gen_range(1..=k);
            let edges = (0..n).flat_map(|i| (1..=r).map(move |s| (i, (i + s) % n)));
            Graph::new(n, edges).unwrap()
        }
        4 => {
            let edges = (0..k).flat_map(|i| (0..k).map(move |j| (i, k + j)));
            Graph::new(2 * k, edges).unwrap()
        }
        _ => {
            let c = |n: usize| Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
            c(k.max(3)).disjoint_union(&c(rng.gen_range(3..12)))
        }
    }
}

fn random_connected(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(2..=60usize);
    let mut edges = std::collections::BTreeSet::new();
    for v in 1..n {
        edges.insert((rng.gen_range(0..v), v));
    }
    let extra = rng.gen_range(0..=2 * n);
    for _ in 0..extra {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u != v {
            edges.insert((u.min(v), u.max(v)));
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Compares every bound the library reports against the integer oracle.
fn audit_bounds(g: &Graph, label: &str, fails: &mut Vec<String>) {
    if g.size() == 0 {
        return;
    }
    let d = Degrees::from_graph(g);
    let (n, m, m1, m2, dmax, dmin) = (d.n, d.m, d.m1, d.m2, d.max, d.min);

    let c = check_m1_lower(g).unwrap();
    let (lhs, rhs) = (4 * m * m, n * m1);
    expect!(fails, c.satisfied == (lhs <= rhs), "{label}: m1_lower satisfied");
    expect!(fails, c.tight == (lhs == rhs), "{label}: m1_lower tight");
    expect!(fails, lhs <= rhs, "{label}: m1_lower violated");
    expect!(fails, (lhs == rhs) == d.regular(), "{label}: m1_lower tight but not regular or vice versa");

    let c = check_m2_lower(g).unwrap();
    let (lhs, rhs) = (4 * m * m * m, n * n * m2);
    expect!(fails, c.satisfied == (lhs <= rhs) && c.tight == (lhs == rhs), "{label}: m2_lower flags");
    expect!(fails, lhs <= rhs, "{label}: m2_lower violated");
    expect!(fails, (lhs == rhs) == d.regular(), "{label}: m2_lower characterization");

    let c = check_common_upper(g).unwrap();
    let vertex = (2 * m * m1, n * dmax * m1);
    let edge = (2 * m2, dmax * m1);
    let joint = vertex.0 == vertex.1 && edge.0 == edge.1;
    expect!(fails, vertex.0 <= vertex.1 && edge.0 <= edge.1, "{label}: common upper violated");
    expect!(fails, c.satisfied() == (vertex.0 <= vertex.1 && edge.0 <= edge.1), "{label}: common upper satisfied");
    expect!(fails, c.vertex_side.tight == (vertex.0 == vertex.1), "{label}: common upper vertex tight");
    expect!(fails, c.edge_side.tight == (edge.0 == edge.1), "{label}: common upper edge tight");
    expect!(fails, c.jointly_tight() == joint, "{label}: common upper joint tight");
    expect!(fails, joint == d.regular(), "{label}: common upper characterization");

    if n >= 2 {
        let c = check_das_upper(g).unwrap();
        let lhs = m1 * (n - 1);
        let rhs = m * (2 * m + (n - 2) * dmax + (dmax - dmin) * (n - 1 - dmax));
        let condition = d.star() || d.regular() || d.complete_plus_isolated();
        expect!(fails, c.satisfied == (lhs <= rhs) && c.tight == (lhs == rhs), "{label}: das flags");
        expect!(fails, lhs <= rhs, "{label}: das violated");
        expect!(fails, c.equality_condition_met == condition, "{label}: das condition");
        expect!(fails, (lhs == rhs) == condition, "{label}: das characterization");
    }
}

fn bound_keys_characterized(r: &ScanReport, keys: &[&str], fails: &mut Vec<String>) {
    for key in keys {
        match r.bounds.get(*key) {
            None => fails.push(format!("{key}: not tallied")),
            Some(t) => {
                expect!(fails, t.violations == 0, "{key}: {} violations", t.violations);
                expect!(fails, t.characterized(), "{key}: {} missed, {} unexplained", t.missed_equality, t.unexplained_tight);
            }
        }
    }
}

// ---------------------------------------------------------------------------

fn c1_family_arithmetic() -> Outcome {
    let mut fails = Vec::new();
    let g = build_counterexample_family(12, 2).unwrap();
    let r = compare_indices(&g).unwrap();
    let d = Degrees::from_graph(&g);
    expect!(fails, (r.n, r.m) == (19, 20), "n, m = {}, {}", r.n, r.m);
    expect!(fails, (r.m1, r.m2) == (198, 208), "M1, M2 = {}, {}", r.m1, r.m2);
    expect!(fails, (d.m1, d.m2) == (198, 208), "oracle M1, M2 = {}, {}", d.m1, d.m2);
    expect!(fails, r.comparison == -8 && d.m2 * d.n - d.m1 * d.m == -8, "M2*n - M1*m = {}", r.comparison);
    expect!(fails, r.verdict == Verdict::Fails, "verdict {:?}", r.verdict);
    // closed forms
    let (a, b) = (12i128, 2i128);
    expect!(fails, a + 3 * b + 1 == 19 && a + 4 * b == 20, "closed-form n, m");
    expect!(fails, a * a + a + 22 * b - 2 == 198 && a * a + a + 30 * b - 8 == 208, "closed-form M1, M2");
    expect!(fails, family_margin(a, b) == -8, "closed-form margin");
    outcome(fails, format!("C(12,2): n={} m={} M1={} M2={} M2*n-M1*m={} {:?}", r.n, r.m, r.m1, r.m2, r.comparison, r.verdict))
}

/// Exact sign of `a - ((7b-5) + sqrt(D)) / (2(b-1))`.
fn above_larger_root(a: i128, b: i128) -> bool {
    let t = 2 * (b - 1) * a - (7 * b - 5);
    t > 0 && t * t > discriminant(b)
}

fn c2_threshold() -> Outcome {
    let mut fails = Vec::new();
    let t2 = threshold_a(2).unwrap();
    expect!(fails, t2.a_min == Some(12), "threshold_a(2) = {:?}", t2.a_min);
    let v11 = compare_indices(&build_counterexample_family(11, 2).unwrap()).unwrap().verdict;
    let v12 = compare_indices(&build_counterexample_family(12, 2).unwrap()).unwrap().verdict;
    expect!(fails, v11.holds(), "C(11,2) verdict {v11:?}");
    expect!(fails, v12 == Verdict::Fails, "C(12,2) verdict {v12:?}");
    let mut printed_negative = 0;
    for b in 2..=20i128 {
        let t = threshold_a(b as u64).unwrap();
        let Some(a_min) = t.a_min else {
            fails.push(format!("b={b}: no a_min"));
            continue;
        };
        let a_min = a_min as i128;
        let dd = discriminant(b);
        expect!(fails, dd == 8 * b * b * b + 97 * b * b - 158 * b + 57, "b={b}: D");
        // the margin changes sign exactly at the larger real root
        for a in 3..=400 {
            let fails_here = family_margin(a, b) < 0;
            expect!(fails, fails_here == above_larger_root(a, b), "b={b} a={a}: sign mismatch");
            expect!(fails, fails_here == (a >= a_min), "b={b} a={a}: a_min={a_min}");
        }
        let root = ((7 * b - 5) as f64 + (dd as f64).sqrt()) / (2 * (b - 1)) as f64;
        expect!(fails, root.floor() as i128 + 1 == a_min, "b={b}: f64 root {root} vs a_min {a_min}");
        expect!(fails, root_floor_exact(b) + 1 == a_min, "b={b}: exact floor");
        expect!(fails, (t.root - root).abs() < 1e-9, "b={b}: reported root {}", t.root);
        // the expression with -(7b-5) over 2(1-b) is the other root
        let printed = (-((7 * b - 5) as f64) + (dd as f64).sqrt()) / (2 * (1 - b)) as f64;
        printed_negative += (printed < 0.0) as usize;
        // the built graph agrees with the closed form on both sides of a_min
        for a in [a_min - 1, a_min] {
            let g = build_counterexample_family(a as usize, b as usize).unwrap();
            let c = compare_indices(&g).unwrap().comparison;
            expect!(fails, c == family_margin(a, b), "b={b} a={a}: built comparison {c}");
        }
    }
    outcome(
        fails,
        format!(
            "a_min(2)=12, C(11,2) holds, C(12,2) fails; b=2..20 agree with the larger root; \
             the -(7b-5)/(2(1-b)) form is the negative root for {printed_negative}/19 b"
        ),
    )
}

fn c3_every_cycle_rank() -> Outcome {
    let mut fails = Vec::new();
    let mut sizes = Vec::new();
    for b in 2..=20usize {
        let a = threshold_a(b as u64).unwrap().a_min.unwrap() as usize;
        let g = build_counterexample_family(a, b).unwrap();
        let class = classify(&g);
        let d = Degrees::from_graph(&g);
        let rank = d.m - d.n + g.component_count() as i128;
        expect!(fails, g.is_connected() && class.connected, "b={b}: not connected");
        expect!(fails, class.cycle_rank == b && rank == b as i128, "b={b}: cycle rank {}", class.cycle_rank);
        expect!(fails, d.m2 * d.n - d.m1 * d.m < 0, "b={b}: oracle comparison");
        expect!(fails, compare_indices(&g).unwrap().verdict == Verdict::Fails, "b={b}: verdict");
        sizes.push(format!("{b}:{a}"));
    }
    outcome(fails, format!("C(a_min(b), b) fails with cycle rank b; a_min by b = {}", sizes.join(" ")))
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn c4_exhaustive() -> Outcome {
    let mut fails = Vec::new();
    let mut cfg = ScanConfig::exhaustive(7);
    cfg.jobs = 1;
    let t0 = Instant::now();
    let r = scan(&cfg).unwrap();
    let single = t0.elapsed();
    cfg.jobs = 8;
    let t0 = Instant::now();
    let r8 = scan(&cfg).unwrap();
    let eight = t0.elapsed();
    expect!(fails, r == r8, "reports differ between 1 and 8 workers");
    expect!(fails, single < Duration::from_secs(120), "single-threaded {single:?}");
    expect!(fails, eight < Duration::from_secs(30), "8 workers {eight:?}");

    // connected labeled counts from the recurrence
    let mut c = [0u64; 8];
    for n in 1..=7u64 {
        let mut total = 1u64 << binomial(n, 2);
        for k in 1..n {
            total -= binomial(n - 1, k - 1) * c[k as usize] * (1u64 << binomial(n - k, 2));
        }
        c[n as usize] = total;
    }
    let connected: u64 = c.iter().sum();
    expect!(fails, r.total_scanned + r.skipped_edgeless == connected, "scanned {} vs {connected}", r.total_scanned);

    let trees: u64 = (2..=7u64).map(|n| n.pow(n as u32 - 2)).sum();
    let stars: u64 = 1 + (3..=7u64).sum::<u64>();
    let cycles: u64 = (3..=7u64).map(|n| factorial(n - 1) / 2).sum();

    let t = &r.classes["tree"];
    expect!(fails, t.scanned == trees, "trees {} vs Cayley {trees}", t.scanned);
    expect!(fails, t.verdicts.fails == 0, "tree failures {}", t.verdicts.fails);
    expect!(fails, t.stars == stars, "stars {} vs {stars}", t.stars);
    expect!(
        fails,
        t.verdicts.holds_with_equality == stars && t.equality_stars == stars,
        "tree equality set {} (stars among them {})",
        t.verdicts.holds_with_equality,
        t.equality_stars
    );

    let u = &r.classes["unicyclic"];
    expect!(fails, u.verdicts.fails == 0, "unicyclic failures {}", u.verdicts.fails);
    expect!(fails, u.cycles == cycles, "cycles {} vs {cycles}", u.cycles);
    expect!(
        fails,
        u.verdicts.holds_with_equality == cycles && u.equality_cycles == cycles,
        "unicyclic equality set {} (cycles among them {})",
        u.verdicts.holds_with_equality,
        u.equality_cycles
    );

    let ch = &r.classes["chemical"];
    expect!(fails, ch.verdicts.fails == 0 && r.chemical_connected_failures == 0, "chemical failures {}", ch.verdicts.fails);

    let cores = std::thread::available_parallelism().map_or(1, |n| n.get());
    outcome(
        fails,
        format!(
            "{} connected graphs (trees {}, unicyclic {}, chemical {}), 0 failures, tree equality = {} stars, \
             unicyclic equality = {} cycles; {:.2}s with 1 worker, {:.2}s with 8 workers on {cores} core(s)",
            r.total_scanned,
            t.scanned,
            u.scanned,
            ch.scanned,
            t.equality_stars,
            u.equality_cycles,
            single.as_secs_f64(),
            eight.as_secs_f64()
        ),
    )
}

fn c5_bound_universality() -> Outcome {
    let mut fails = Vec::new();
    let mut cfg = ScanConfig::exhaustive(7);
    cfg.connected_only = false;
    cfg.checks.bounds = true;
    cfg.jobs = 8;
    let r = scan(&cfg).unwrap();
    bound_keys_characterized(&r, &["m1_lower", "m2_lower", "common_upper", "das_upper"], &mut fails);
    expect!(fails, r.bound_violations == 0, "scan bound violations {}", r.bound_violations);

    let mut audited = 0u64;
    for n in 1..=7 {
        for g in enumerate_labeled(n, false).unwrap() {
            audit_bounds(&g, &format!("n={n} {:?}", g.edges()), &mut fails);
            audited += 1;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut random = 0;
    let mut tight_regular = 0;
    while random < 10_000 {
        let g = if random % 10 == 9 {
            structured_graph(&mut rng)
        } else {
            let n = rng.gen_range(1..=60);
            random_graph(&mut rng, n)
        };
        if g.size() == 0 {
            continue;
        }
        let label = format!("random #{random} n={}", g.order());
        audit_bounds(&g, &label, &mut fails);
        tight_regular += check_m1_lower(&g).unwrap().tight as usize;
        random += 1;
    }
    fails.truncate(50);
    outcome(
        fails,
        format!(
            "{} exhaustive graphs (scan) + {audited} audited against integer oracle + {random} random (n<=60, {tight_regular} regular): \
             0 violations, tight exactly on the equality condition",
            r.total_scanned
        ),
    )
}

fn c6_subdivision() -> Outcome {
    let mut fails = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    let t0 = Instant::now();
    let mut regular = 0;
    for i in 0..1000 {
        let g = if i % 10 == 0 {
            let k = rng.gen_range(3..30usize);
            let r = rng.gen_range(1..=(k - 1) / 2);
            let edges = (0..k).flat_map(|v| (1..=r).map(move |s| (v, (v + s) % k)));
            Graph::new(k, edges).unwrap()
        } else {
            random_connected(&mut rng)
        };
        let d = Degrees::from_graph(&g);
        let s = subdivide(&g);
        let ds = Degrees::from_graph(&s);
        expect!(fails, s.order() == g.order() + g.size() && s.size() == 2 * g.size(), "#{i}: S(G) shape");
        expect!(fails, ds.m1 == d.m1 + 4 * d.m, "#{i}: M1(S) = {} vs {}", ds.m1, d.m1 + 4 * d.m);
        expect!(fails, ds.m2 == 2 * d.m1, "#{i}: M2(S) = {} vs {}", ds.m2, 2 * d.m1);
        expect!(fails, first_zagreb(&s) as i128 == ds.m1 && second_zagreb(&s) as i128 == ds.m2, "#{i}: library indices");
        expect!(fails, s.is_bipartite(), "#{i}: S(G) not bipartite");
        let diff = ds.m2 * ds.n - ds.m1 * ds.m;
        expect!(fails, diff >= 0, "#{i}: S(G) fails");
        expect!(fails, (diff == 0) == d.regular(), "#{i}: equality {} regular {}", diff == 0, d.regular());
        let c = check_subdivision_theorem(&g).unwrap();
        expect!(fails, c.satisfied && c.tight == (diff == 0) && c.characterized(), "#{i}: library check");
        regular += d.regular() as usize;
    }
    let took = t0.elapsed();
    expect!(fails, took < Duration::from_secs(5), "took {took:?}");
    outcome(
        fails,
        format!("1000 connected graphs ({regular} regular): identities exact, S(G) bipartite, never fails, equality iff regular; {:.2}s", took.as_secs_f64()),
    )
}

fn c7_convexity() -> Outcome {
    let mut fails = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 7);
    let sides = |x: &[f64]| {
        let s: f64 = x.iter().sum();
        let lhs: f64 = x.iter().map(|v| v * v.ln()).sum();
        let rhs = s * (s / x.len() as f64).ln();
        let tol = 1e-9 * lhs.abs().max(rhs.abs()).max(1.0);
        (lhs, rhs, tol)
    };
    let mut min_gap = f64::INFINITY;
    for i in 0..1000 {
        let len = rng.gen_range(2..=50);
        let x: Vec<f64> = (0..len).map(|_| 100.0 * (1.0 - rng.gen::<f64>())).collect();
        let (lhs, rhs, tol) = sides(&x);
        expect!(fails, lhs >= rhs - tol, "vector #{i}: {lhs} < {rhs}");
        // not constant, so not near-equal
        expect!(fails, lhs - rhs > tol, "vector #{i}: near-equal without being constant");
        min_gap = min_gap.min((lhs - rhs) / tol);
    }
    for i in 0..200 {
        let len = rng.gen_range(2..=50);
        let c = 100.0 * (1.0 - rng.gen::<f64>());
        let (lhs, rhs, tol) = sides(&vec![c; len]);
        expect!(fails, (lhs - rhs).abs() <= tol, "constant #{i}: gap {}", lhs - rhs);
    }
    outcome(fails, format!("1000 random vectors hold (smallest gap {min_gap:.3e} x tolerance), 200 constant vectors near-equal"))
}

fn c8_variable_bounds() -> Outcome {
    let mut fails = Vec::new();
    let lambdas = [0.5, 1.0, 1.5, 2.0, 3.0];
    let mut checked = 0;
    let mut regular = 0;
    for n in 1..=6 {
        for g in enumerate_labeled(n, false).unwrap() {
            let d = Degrees::from_graph(&g);
            if d.m == 0 || d.min == 0 {
                continue;
            }
            let deg: Vec<f64> = d.deg.iter().map(|&x| x as f64).collect();
            let (nf, mf) = (d.n as f64, d.m as f64);
            let avg = 2.0 * mf / nf;
            let dmax = d.max as f64;
            regular += d.regular() as usize;
            for &l in &lambdas {
                let vm1: f64 = deg.iter().map(|x| x.powf(2.0 * l)).sum();
                let vm2: f64 = g.edges().iter().map(|&(u, v)| (deg[u] * deg[v]).powf(l)).sum();
                let upper = dmax * vm1 / (2.0 * mf);
                let pairs = [
                    ("m1_lower", nf * avg.powf(2.0 * l), vm1, check_variable_m1_lower(&g, l).unwrap()),
                    ("m2_lower", mf * avg.powf(2.0 * l), vm2, check_variable_m2_lower(&g, l).unwrap()),
                    ("upper_vertex", vm1 / nf, upper, check_variable_upper(&g, l).unwrap().0),
                    ("upper_edge", vm2 / mf, upper, check_variable_upper(&g, l).unwrap().1),
                ];
                for (name, lhs, rhs, c) in pairs {
                    let tol = 1e-9 * lhs.abs().max(rhs.abs()).max(1e-3);
                    let label = format!("{name}@{l} {:?}", g.edges());
                    expect!(fails, lhs <= rhs + tol, "{label}: {lhs} > {rhs}");
                    expect!(fails, c.satisfied, "{label}: library says violated");
                    expect!(fails, (c.lhs.to_f64() - lhs).abs() <= tol && (c.rhs.to_f64() - rhs).abs() <= tol, "{label}: library sides");
                    if d.regular() {
                        expect!(fails, (lhs - rhs).abs() <= tol && c.tight, "{label}: regular but not tight");
                    }
                    checked += 1;
                }
            }
        }
    }
    let mut cfg = ScanConfig::exhaustive(6);
    cfg.connected_only = false;
    cfg.checks.lambdas = lambdas.to_vec();
    let r = scan(&cfg).unwrap();
    expect!(fails, r.bound_violations == 0, "scan violations {}", r.bound_violations);
    for (key, t) in &r.bounds {
        expect!(fails, t.missed_equality == 0, "{key}: regular but not tight in scan");
    }
    fails.truncate(50);
    outcome(fails, format!("{checked} bound checks on n<=6 graphs without isolated vertices, lambda in {lambdas:?}; all {regular} regular graphs tight"))
}

fn corpus_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data/corpus100.g6")
}

fn c9_graph6() -> Outcome {
    let mut fails = Vec::new();
    let mut count = 0u64;
    let empty = Graph::empty(0);
    expect!(fails, parse_graph6(&write_graph6(&empty).unwrap()).unwrap() == empty, "n=0 round trip");
    for n in 1..=7 {
        for g in enumerate_labeled(n, false).unwrap() {
            let back = parse_graph6(&write_graph6(&g).unwrap()).unwrap();
            let mut a = g.edges().to_vec();
            let mut b = back.edges().to_vec();
            a.sort_unstable();
            b.sort_unstable();
            expect!(fails, back.order() == g.order() && a == b, "n={n} {:?}", g.edges());
            count += 1;
        }
    }
    let text = std::fs::read(corpus_path()).unwrap();
    let lines: Vec<&[u8]> = text.split(|&c| c == b'\n').filter(|l| !l.is_empty()).collect();
    let records: Vec<_> = Graph6Reader::new(BufReader::new(File::open(corpus_path()).unwrap()))
        .collect::<Result<_, _>>()
        .unwrap();
    expect!(fails, lines.len() == 100 && records.len() == 100, "corpus has {} lines", lines.len());
    let mut largest = 0;
    for (line, rec) in lines.iter().zip(&records) {
        let out = write_graph6(&rec.graph).unwrap();
        expect!(fails, out.as_slice() == *line, "corpus line {} not byte-identical", rec.line_no);
        largest = largest.max(rec.graph.order());
    }
    fails.truncate(50);
    outcome(fails, format!("{count} graphs on n<=7 round-trip; 100 corpus lines re-encode byte-for-byte (largest n={largest})"))
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_zagreb")).args(args).output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(String::from_utf8_lossy(&out.stderr).into_owned());
    }
    Ok(out.stdout)
}

fn c10_determinism() -> Outcome {
    let mut fails = Vec::new();
    let corpus = corpus_path();
    let corpus = corpus.to_str().unwrap();
    let runs: [Vec<&str>; 3] = [
        vec!["scan", "--n-max", "7", "--include-disconnected", "--bounds", "--subdivision", "--variable", "1.5"],
        vec!["scan", "--n-max", "6", "--class", "k-cyclic:3", "--list-cap", "50"],
        vec!["scan", "--corpus", corpus, "--include-disconnected", "--bounds"],
    ];
    let mut bytes = 0;
    for args in &runs {
        let mut a1 = args.clone();
        a1.extend(["--jobs", "1", "--output", "json"]);
        let mut a8 = args.clone();
        a8.extend(["--jobs", "8", "--output", "json"]);
        match (run_cli(&a1), run_cli(&a8)) {
            (Ok(o1), Ok(o8)) => {
                expect!(fails, o1 == o8, "{}: output differs", args.join(" "));
                expect!(fails, serde_json::from_slice::<serde_json::Value>(&o1).is_ok(), "{}: not JSON", args.join(" "));
                bytes += o1.len();
            }
            (Err(e), _) | (_, Err(e)) => fails.push(format!("{}: {e}", args.join(" "))),
        }
    }
    outcome(fails, format!("3 scans byte-identical at --jobs 1 and --jobs 8 ({bytes} bytes each side)"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("counterexample arithmetic", c1_family_arithmetic),
        ("threshold reproduction", c2_threshold),
        ("counterexamples for every cycle rank >= 2", c3_every_cycle_rank),
        ("exhaustive verification n <= 7", c4_exhaustive),
        ("bound universality and equality cases", c5_bound_universality),
        ("subdivision identities and inequality", c6_subdivision),
        ("x ln x convexity inequality", c7_convexity),
        ("variable-index bounds", c8_variable_bounds),
        ("graph6 round trip", c9_graph6),
        ("scan determinism", c10_determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let o = run();
        let status = if o.pass { "PASS" } else { "FAIL" };
        failed += !o.pass as usize;
        println!("{status} [{:>2}] {name} ({:.2}s): {}", i + 1, t0.elapsed().as_secs_f64(), o.detail);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
