//! Exhaustive and corpus-driven scans.
//!
//! Labeled graphs on `n <= 8` vertices are enumerated as edge masks over the
//! graph6 column order `(0,1), (0,2), (1,2), (0,3), ...`; bit `k` of the mask
//! is edge `k`. Masks are visited in ascending order. Parallel scans split
//! the mask range into fixed partitions and merge partial reports in
//! partition order, so a report never depends on the worker count.

use std::collections::BTreeMap;
use std::fmt;
use std::io::BufRead;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{
    check_common_upper, check_das_upper, check_m1_lower, check_m2_lower,
    check_subdivision_theorem, check_variable_m1_lower, check_variable_m2_lower,
    check_variable_upper, BoundCheck, BoundError,
};
use crate::families::{threshold_a, build_counterexample_family};
use crate::graph::{classify, Graph, GraphClass};
use crate::indices::{compare_indices, IndexError, IndexReport, Verdict};
use crate::io::{write_graph6, CorpusError, Graph6Reader};

/// Largest order enumerated natively.
pub const MAX_EXHAUSTIVE_ORDER: usize = 8;
/// Default cap on stored failing / equality graphs; counts stay exact.
pub const DEFAULT_LIST_CAP: usize = 1000;
const PARTITION_BITS: u32 = 8;
const CORPUS_CHUNK: usize = 4096;

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("exhaustive enumeration supports 1 <= n <= {MAX_EXHAUSTIVE_ORDER}, got {0}")]
    NTooLarge(usize),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error("cannot open corpus {path}: {source}")]
    Open { path: String, source: std::io::Error },
    #[error("failed to start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error("graph at position {0}: {1}")]
    Index(usize, IndexError),
    #[error("graph at position {0}: {1}")]
    Bound(usize, BoundError),
}

/// Number of vertex pairs on `n` vertices.
fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Column-order pair table shared by every `n <= 8`.
fn edge_pairs() -> [(u8, u8); 28] {
    let mut pairs = [(0u8, 0u8); 28];
    let mut k = 0;
    for j in 1..8u8 {
        for i in 0..j {
            pairs[k] = (i, j);
            k += 1;
        }
    }
    pairs
}

/// Adjacency rows and degrees for a mask, plus connectivity by bitset BFS.
#[derive(Clone, Copy)]
struct MaskGraph {
    n: usize,
    rows: [u8; MAX_EXHAUSTIVE_ORDER],
    edges: u32,
}

impl MaskGraph {
    fn new(n: usize, mask: u32, pairs: &[(u8, u8); 28]) -> Self {
        let mut rows = [0u8; MAX_EXHAUSTIVE_ORDER];
        let mut bits = mask;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            let (i, j) = pairs[k];
            rows[i as usize] |= 1 << j;
            rows[j as usize] |= 1 << i;
            bits &= bits - 1;
        }
        Self { n, rows, edges: mask.count_ones() }
    }

    fn connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let all = ((1u16 << self.n) - 1) as u8;
        let mut seen = 1u8;
        let mut frontier = 1u8;
        while frontier != 0 {
            let mut next = 0u8;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                next |= self.rows[v];
                f &= f - 1;
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    fn to_graph(self, mask: u32, pairs: &[(u8, u8); 28]) -> Graph {
        let mut edges = Vec::with_capacity(self.edges as usize);
        let mut bits = mask;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            let (i, j) = pairs[k];
            edges.push((i as usize, j as usize));
            bits &= bits - 1;
        }
        Graph::from_normalized(self.n, edges)
    }
}

/// Every labeled simple graph on `n` vertices, in ascending edge-mask order.
pub fn enumerate_labeled(
    n: usize,
    connected_only: bool,
) -> Result<impl Iterator<Item = Graph>, ScanError> {
    if n == 0 || n > MAX_EXHAUSTIVE_ORDER {
        return Err(ScanError::NTooLarge(n));
    }
    let pairs = edge_pairs();
    let total = 1u32 << pair_count(n);
    Ok((0..total).filter_map(move |mask| {
        let mg = MaskGraph::new(n, mask, &pairs);
        if connected_only && !mg.connected() {
            return None;
        }
        Some(mg.to_graph(mask, &pairs))
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassFilter {
    Tree,
    Unicyclic,
    Chemical,
    KCyclic(usize),
}

impl ClassFilter {
    pub fn accepts(&self, class: &GraphClass) -> bool {
        match *self {
            ClassFilter::Tree => class.is_tree,
            ClassFilter::Unicyclic => class.is_unicyclic,
            ClassFilter::Chemical => class.is_chemical,
            ClassFilter::KCyclic(k) => class.cycle_rank == k,
        }
    }

    /// Edge count forced by the filter on a connected graph of order `n`.
    fn forced_edges(&self, n: usize) -> Option<usize> {
        match *self {
            ClassFilter::Tree => Some(n - 1),
            ClassFilter::Unicyclic => Some(n),
            ClassFilter::KCyclic(k) => Some(n - 1 + k),
            ClassFilter::Chemical => None,
        }
    }
}

impl FromStr for ClassFilter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "tree" | "trees" => Ok(ClassFilter::Tree),
            "unicyclic" => Ok(ClassFilter::Unicyclic),
            "chemical" => Ok(ClassFilter::Chemical),
            other => other
                .strip_prefix("k-cyclic:")
                .or_else(|| other.strip_prefix("k_cyclic:"))
                .and_then(|k| k.parse().ok())
                .map(ClassFilter::KCyclic)
                .ok_or_else(|| {
                    format!("unknown class {s:?} (expected tree, unicyclic, chemical or k-cyclic:K)")
                }),
        }
    }
}

impl fmt::Display for ClassFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassFilter::Tree => write!(f, "tree"),
            ClassFilter::Unicyclic => write!(f, "unicyclic"),
            ClassFilter::Chemical => write!(f, "chemical"),
            ClassFilter::KCyclic(k) => write!(f, "k-cyclic:{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanSource {
    /// All labeled graphs with `1 <= n <= n_max`.
    Exhaustive { n_max: usize },
    /// Newline-delimited graph6 file; `-` reads stdin.
    Corpus { path: String },
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct CheckSet {
    /// Lower bounds on `M1` and `M2`, the common upper bound and Das's bound.
    pub bounds: bool,
    /// Conjecture on the subdivision graph.
    pub subdivision: bool,
    /// λ values for the variable-index bounds.
    pub lambdas: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanConfig {
    pub source: ScanSource,
    pub connected_only: bool,
    pub class_filter: Option<ClassFilter>,
    pub checks: CheckSet,
    /// Worker threads; `0` uses every available core.
    pub jobs: usize,
    pub list_cap: usize,
}

impl ScanConfig {
    pub fn exhaustive(n_max: usize) -> Self {
        Self {
            source: ScanSource::Exhaustive { n_max },
            connected_only: true,
            class_filter: None,
            checks: CheckSet::default(),
            jobs: 1,
            list_cap: DEFAULT_LIST_CAP,
        }
    }

    pub fn corpus(path: impl Into<String>) -> Self {
        Self {
            source: ScanSource::Corpus { path: path.into() },
            ..Self::exhaustive(1)
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerdictCounts {
    pub holds_strict: u64,
    pub holds_with_equality: u64,
    pub fails: u64,
}

impl VerdictCounts {
    fn record(&mut self, v: Verdict) {
        match v {
            Verdict::HoldsStrict => self.holds_strict += 1,
            Verdict::HoldsWithEquality => self.holds_with_equality += 1,
            Verdict::Fails => self.fails += 1,
        }
    }

    fn merge(&mut self, o: &Self) {
        self.holds_strict += o.holds_strict;
        self.holds_with_equality += o.holds_with_equality;
        self.fails += o.fails;
    }

    pub fn total(&self) -> u64 {
        self.holds_strict + self.holds_with_equality + self.fails
    }
}

/// Verdicts within one class, plus how many equality cases are stars,
/// cycles or regular.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClassTally {
    pub scanned: u64,
    pub verdicts: VerdictCounts,
    pub stars: u64,
    pub cycles: u64,
    pub regular: u64,
    pub equality_stars: u64,
    pub equality_cycles: u64,
    pub equality_regular: u64,
}

impl ClassTally {
    fn record(&mut self, class: &GraphClass, v: Verdict) {
        let eq = v == Verdict::HoldsWithEquality;
        self.scanned += 1;
        self.verdicts.record(v);
        self.stars += class.is_star as u64;
        self.cycles += class.is_cycle as u64;
        self.regular += class.is_regular as u64;
        self.equality_stars += (eq && class.is_star) as u64;
        self.equality_cycles += (eq && class.is_cycle) as u64;
        self.equality_regular += (eq && class.is_regular) as u64;
    }

    fn merge(&mut self, o: &Self) {
        self.scanned += o.scanned;
        self.verdicts.merge(&o.verdicts);
        self.stars += o.stars;
        self.cycles += o.cycles;
        self.regular += o.regular;
        self.equality_stars += o.equality_stars;
        self.equality_cycles += o.equality_cycles;
        self.equality_regular += o.equality_regular;
    }
}

/// Outcomes of one bound across a scan.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct BoundTally {
    pub checked: u64,
    pub violations: u64,
    pub tight: u64,
    /// Equality condition holds but the bound is not tight.
    pub missed_equality: u64,
    /// Bound is tight but the equality condition does not hold.
    pub unexplained_tight: u64,
}

impl BoundTally {
    fn record(&mut self, satisfied: bool, tight: bool, condition: bool) {
        self.checked += 1;
        self.violations += !satisfied as u64;
        self.tight += tight as u64;
        self.missed_equality += (condition && !tight) as u64;
        self.unexplained_tight += (tight && !condition) as u64;
    }

    fn record_check(&mut self, c: &BoundCheck) {
        self.record(c.satisfied, c.tight, c.equality_condition_met);
    }

    fn merge(&mut self, o: &Self) {
        self.checked += o.checked;
        self.violations += o.violations;
        self.tight += o.tight;
        self.missed_equality += o.missed_equality;
        self.unexplained_tight += o.unexplained_tight;
    }

    /// Tight exactly when the equality condition holds.
    pub fn characterized(&self) -> bool {
        self.missed_equality == 0 && self.unexplained_tight == 0
    }
}

/// A graph recorded by a scan, in canonical (stored) edge order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FoundGraph {
    pub n: usize,
    pub m: usize,
    pub graph6: String,
    pub edges: Vec<[usize; 2]>,
    pub m1: u128,
    pub m2: u128,
    pub comparison: i128,
    pub cycle_rank: usize,
    pub max_degree: usize,
    pub connected: bool,
}

impl FoundGraph {
    pub fn new(g: &Graph, report: &IndexReport, class: &GraphClass) -> Self {
        let graph6 = write_graph6(g)
            .map(|b| String::from_utf8(b).expect("graph6 is ASCII"))
            .unwrap_or_default();
        Self {
            n: g.order(),
            m: g.size(),
            graph6,
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            m1: report.m1,
            m2: report.m2,
            comparison: report.comparison,
            cycle_rank: class.cycle_rank,
            max_degree: class.max_degree,
            connected: class.connected,
        }
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_normalized(self.n, self.edges.iter().map(|&[u, v]| (u, v)).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub source: String,
    pub connected_only: bool,
    pub class_filter: Option<String>,
    /// Graphs that passed the filters and have at least one edge.
    pub total_scanned: u64,
    /// Graphs that passed the filters but have no edges (ratios undefined).
    pub skipped_edgeless: u64,
    pub verdicts: VerdictCounts,
    /// Keys: `all`, `tree`, `unicyclic`, `chemical`, `disconnected`.
    pub classes: BTreeMap<String, ClassTally>,
    pub by_cycle_rank: BTreeMap<usize, ClassTally>,
    /// Exact number of failing graphs.
    pub failures: u64,
    pub failing_graphs: Vec<FoundGraph>,
    pub equalities: u64,
    pub equality_graphs: Vec<FoundGraph>,
    /// Failing graphs that are connected with Δ <= 4; expected 0.
    pub chemical_connected_failures: u64,
    pub bounds: BTreeMap<String, BoundTally>,
    /// Sum of violations over every bound; expected 0.
    pub bound_violations: u64,
}

impl ScanReport {
    fn empty(config: &ScanConfig) -> Self {
        let source = match &config.source {
            ScanSource::Exhaustive { n_max } => format!("exhaustive:n<={n_max}"),
            ScanSource::Corpus { path } => format!("corpus:{path}"),
        };
        Self {
            source,
            connected_only: config.connected_only,
            class_filter: config.class_filter.map(|c| c.to_string()),
            total_scanned: 0,
            skipped_edgeless: 0,
            verdicts: VerdictCounts::default(),
            classes: BTreeMap::new(),
            by_cycle_rank: BTreeMap::new(),
            failures: 0,
            failing_graphs: Vec::new(),
            equalities: 0,
            equality_graphs: Vec::new(),
            chemical_connected_failures: 0,
            bounds: BTreeMap::new(),
            bound_violations: 0,
        }
    }

    /// Appends `later`, which must cover graphs after every graph in `self`.
    fn merge(&mut self, later: ScanReport, cap: usize) {
        self.total_scanned += later.total_scanned;
        self.skipped_edgeless += later.skipped_edgeless;
        self.verdicts.merge(&later.verdicts);
        for (k, t) in &later.classes {
            self.classes.entry(k.clone()).or_default().merge(t);
        }
        for (k, t) in &later.by_cycle_rank {
            self.by_cycle_rank.entry(*k).or_default().merge(t);
        }
        self.failures += later.failures;
        self.equalities += later.equalities;
        self.chemical_connected_failures += later.chemical_connected_failures;
        for (k, t) in &later.bounds {
            self.bounds.entry(k.clone()).or_default().merge(t);
        }
        self.bound_violations += later.bound_violations;
        let room = cap.saturating_sub(self.failing_graphs.len());
        self.failing_graphs.extend(later.failing_graphs.into_iter().take(room));
        let room = cap.saturating_sub(self.equality_graphs.len());
        self.equality_graphs.extend(later.equality_graphs.into_iter().take(room));
    }

    fn tally(&mut self, key: impl Into<String>) -> &mut BoundTally {
        self.bounds.entry(key.into()).or_default()
    }

    /// Runs the conjecture and configured bound checks on one graph.
    fn examine(
        &mut self,
        g: &Graph,
        class: &GraphClass,
        config: &ScanConfig,
        position: usize,
    ) -> Result<(), ScanError> {
        if g.size() == 0 {
            self.skipped_edgeless += 1;
            return Ok(());
        }
        let report = compare_indices(g).map_err(|e| ScanError::Index(position, e))?;
        let verdict = report.verdict;
        self.total_scanned += 1;
        self.verdicts.record(verdict);
        self.classes.entry("all".into()).or_default().record(class, verdict);
        let memberships = [
            ("tree", class.is_tree),
            ("unicyclic", class.is_unicyclic),
            ("chemical", class.is_chemical),
            ("disconnected", !class.connected),
        ];
        for (name, member) in memberships {
            if member {
                self.classes.entry(name.into()).or_default().record(class, verdict);
            }
        }
        self.by_cycle_rank.entry(class.cycle_rank).or_default().record(class, verdict);

        match verdict {
            Verdict::Fails => {
                self.failures += 1;
                if class.connected && class.is_chemical {
                    self.chemical_connected_failures += 1;
                }
                if self.failing_graphs.len() < config.list_cap {
                    self.failing_graphs.push(FoundGraph::new(g, &report, class));
                }
            }
            Verdict::HoldsWithEquality => {
                self.equalities += 1;
                if self.equality_graphs.len() < config.list_cap {
                    self.equality_graphs.push(FoundGraph::new(g, &report, class));
                }
            }
            Verdict::HoldsStrict => {}
        }

        let bound_err = |e| ScanError::Bound(position, e);
        let mut violations = 0;
        if config.checks.bounds {
            for c in [check_m1_lower(g).map_err(bound_err)?, check_m2_lower(g).map_err(bound_err)?] {
                violations += !c.satisfied as u64;
                self.tally(c.name.key()).record_check(&c);
            }
            let upper = check_common_upper(g).map_err(bound_err)?;
            violations += !upper.satisfied() as u64;
            self.tally("common_upper").record(upper.satisfied(), upper.jointly_tight(), class.is_regular);
            if g.order() >= 2 {
                let das = check_das_upper(g).map_err(bound_err)?;
                violations += !das.satisfied as u64;
                self.tally("das_upper").record_check(&das);
            }
        }
        if config.checks.subdivision {
            let c = check_subdivision_theorem(g).map_err(bound_err)?;
            violations += !c.satisfied as u64;
            self.tally("subdivision").record_check(&c);
        }
        if !config.checks.lambdas.is_empty() && class.min_degree >= 1 {
            for &lambda in &config.checks.lambdas {
                if lambda >= 0.5 {
                    let c = check_variable_m1_lower(g, lambda).map_err(bound_err)?;
                    violations += !c.satisfied as u64;
                    self.tally(format!("variable_m1_lower@{lambda}")).record_check(&c);
                }
                if lambda >= 0.0 {
                    let c = check_variable_m2_lower(g, lambda).map_err(bound_err)?;
                    violations += !c.satisfied as u64;
                    self.tally(format!("variable_m2_lower@{lambda}")).record_check(&c);
                    let (vertex, edge) = check_variable_upper(g, lambda).map_err(bound_err)?;
                    let ok = vertex.satisfied && edge.satisfied;
                    violations += !ok as u64;
                    self.tally(format!("variable_upper@{lambda}")).record(
                        ok,
                        vertex.tight && edge.tight,
                        class.is_regular,
                    );
                }
            }
        }
        self.bound_violations += violations;
        Ok(())
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, ScanError> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?)
}

/// Mask ranges for one order, in ascending order.
fn partitions(n: usize) -> Vec<(u32, u32)> {
    let bits = pair_count(n) as u32;
    let parts = 1u32 << PARTITION_BITS.min(bits);
    let width = (1u64 << bits) / parts as u64;
    (0..parts)
        .map(|p| ((p as u64 * width) as u32, ((p as u64 + 1) * width - 1) as u32))
        .collect()
}

fn scan_masks(
    n: usize,
    (lo, hi): (u32, u32),
    config: &ScanConfig,
) -> Result<ScanReport, ScanError> {
    let pairs = edge_pairs();
    let mut report = ScanReport::empty(config);
    let forced = if config.connected_only {
        config.class_filter.and_then(|f| f.forced_edges(n))
    } else {
        None
    };
    for mask in lo..=hi {
        let edges = mask.count_ones() as usize;
        if forced.is_some_and(|m| m != edges) {
            continue;
        }
        if config.connected_only && edges + 1 < n {
            continue;
        }
        let mg = MaskGraph::new(n, mask, &pairs);
        if config.connected_only && !mg.connected() {
            continue;
        }
        let g = mg.to_graph(mask, &pairs);
        let class = classify(&g);
        if config.class_filter.is_some_and(|f| !f.accepts(&class)) {
            continue;
        }
        report.examine(&g, &class, config, mask as usize)?;
    }
    Ok(report)
}

fn merge_all(config: &ScanConfig, parts: Vec<ScanReport>) -> ScanReport {
    let mut total = ScanReport::empty(config);
    for p in parts {
        total.merge(p, config.list_cap);
    }
    total
}

fn examine_corpus(
    records: &[(usize, Graph)],
    config: &ScanConfig,
) -> Result<ScanReport, ScanError> {
    let mut report = ScanReport::empty(config);
    for (line, g) in records {
        let class = classify(g);
        if config.connected_only && !class.connected {
            continue;
        }
        if config.class_filter.is_some_and(|f| !f.accepts(&class)) {
            continue;
        }
        report.examine(g, &class, config, *line)?;
    }
    Ok(report)
}

fn scan_corpus<R: BufRead>(input: R, config: &ScanConfig) -> Result<ScanReport, ScanError> {
    let workers = pool(config.jobs)?;
    let mut total = ScanReport::empty(config);
    let mut reader = Graph6Reader::new(input);
    loop {
        let mut chunk = Vec::with_capacity(CORPUS_CHUNK);
        for rec in reader.by_ref().take(CORPUS_CHUNK) {
            let rec = rec?;
            chunk.push((rec.line_no, rec.graph));
        }
        if chunk.is_empty() {
            break;
        }
        let per_worker = chunk.len().div_ceil(workers.current_num_threads().max(1)).max(64);
        let parts: Vec<ScanReport> = workers.install(|| {
            chunk
                .par_chunks(per_worker)
                .map(|slice| examine_corpus(slice, config))
                .collect::<Result<_, _>>()
        })?;
        for p in parts {
            total.merge(p, config.list_cap);
        }
    }
    Ok(total)
}

/// Scans every graph from the configured source. The report is identical
/// for every worker count.
pub fn scan(config: &ScanConfig) -> Result<ScanReport, ScanError> {
    match &config.source {
        ScanSource::Exhaustive { n_max } => {
            if *n_max == 0 || *n_max > MAX_EXHAUSTIVE_ORDER {
                return Err(ScanError::NTooLarge(*n_max));
            }
            let workers = pool(config.jobs)?;
            let mut parts = Vec::new();
            for n in 1..=*n_max {
                let ranges = partitions(n);
                let reports: Vec<ScanReport> = workers.install(|| {
                    ranges
                        .par_iter()
                        .map(|&r| scan_masks(n, r, config))
                        .collect::<Result<_, _>>()
                })?;
                parts.extend(reports);
            }
            Ok(merge_all(config, parts))
        }
        ScanSource::Corpus { path } => {
            if path == "-" {
                scan_corpus(std::io::stdin().lock(), config)
            } else {
                let file = std::fs::File::open(path)
                    .map_err(|source| ScanError::Open { path: path.clone(), source })?;
                scan_corpus(std::io::BufReader::new(file), config)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum CounterexampleOrigin {
    Exhaustive,
    FamilyLadder { a: usize, b: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinCounterexample {
    pub cycle_rank: usize,
    pub n_cap: usize,
    /// Every connected graph of this cycle rank with at most this many
    /// vertices was examined.
    pub exhaustive_limit: usize,
    pub origin: Option<CounterexampleOrigin>,
    pub graph: Option<FoundGraph>,
}

/// Smallest-order failing connected graph of cycle rank `k` with at most
/// `n_cap` vertices. Orders up to [`MAX_EXHAUSTIVE_ORDER`] are searched
/// exhaustively (first failing mask at the smallest order); beyond that the
/// `C(a, k)` family supplies `C(a_min(k), k)` when it fits under the cap.
pub fn find_min_counterexample(
    k: usize,
    n_cap: usize,
    jobs: usize,
) -> Result<MinCounterexample, ScanError> {
    let exhaustive_limit = n_cap.min(MAX_EXHAUSTIVE_ORDER);
    let workers = pool(jobs)?;
    let pairs = edge_pairs();
    for n in 1..=exhaustive_limit {
        let m = n - 1 + k;
        if m > pair_count(n) {
            continue;
        }
        let hits: Vec<Option<u32>> = workers.install(|| {
            partitions(n)
                .par_iter()
                .map(|&(lo, hi)| {
                    (lo..=hi).find(|&mask| {
                        if mask.count_ones() as usize != m {
                            return false;
                        }
                        let mg = MaskGraph::new(n, mask, &pairs);
                        mg.connected()
                            && compare_indices(&mg.to_graph(mask, &pairs))
                                .is_ok_and(|r| r.verdict == Verdict::Fails)
                    })
                })
                .collect()
        });
        if let Some(mask) = hits.into_iter().flatten().next() {
            let g = MaskGraph::new(n, mask, &pairs).to_graph(mask, &pairs);
            let report = compare_indices(&g).map_err(|e| ScanError::Index(mask as usize, e))?;
            return Ok(MinCounterexample {
                cycle_rank: k,
                n_cap,
                exhaustive_limit,
                origin: Some(CounterexampleOrigin::Exhaustive),
                graph: Some(FoundGraph::new(&g, &report, &classify(&g))),
            });
        }
    }
    let none = MinCounterexample {
        cycle_rank: k,
        n_cap,
        exhaustive_limit,
        origin: None,
        graph: None,
    };
    if k < 2 {
        return Ok(none);
    }
    let a = threshold_a(k as u64)
        .ok()
        .and_then(|t| t.a_min)
        .expect("threshold exists for k >= 2") as usize;
    if a + 3 * k + 1 > n_cap {
        return Ok(none);
    }
    let g = build_counterexample_family(a, k).expect("a_min >= 3");
    let report = compare_indices(&g).map_err(|e| ScanError::Index(0, e))?;
    Ok(MinCounterexample {
        origin: Some(CounterexampleOrigin::FamilyLadder { a, b: k }),
        graph: Some(FoundGraph::new(&g, &report, &classify(&g))),
        ..none
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_vertex_graphs() {
        assert_eq!(enumerate_labeled(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_labeled(3, true).unwrap().count(), 4);
        assert_eq!(enumerate_labeled(1, false).unwrap().count(), 1);
    }

    #[test]
    fn order_bounds() {
        assert!(matches!(enumerate_labeled(9, false), Err(ScanError::NTooLarge(9))));
        assert!(matches!(enumerate_labeled(0, false), Err(ScanError::NTooLarge(0))));
        assert!(matches!(scan(&ScanConfig::exhaustive(9)), Err(ScanError::NTooLarge(9))));
    }

    #[test]
    fn enumeration_order_is_mask_order() {
        let graphs: Vec<_> = enumerate_labeled(3, false).unwrap().collect();
        assert_eq!(graphs[0].size(), 0);
        assert_eq!(graphs[1].edges(), &[(0, 1)]);
        assert_eq!(graphs[2].edges(), &[(0, 2)]);
        assert_eq!(graphs[3].edges(), &[(0, 1), (0, 2)]);
        assert_eq!(graphs[7].size(), 3);
    }

    #[test]
    fn partitions_cover_the_mask_space() {
        for n in 1..=8 {
            let parts = partitions(n);
            assert_eq!(parts[0].0, 0);
            assert_eq!(parts.last().unwrap().1 as u64, (1u64 << pair_count(n)) - 1);
            for w in parts.windows(2) {
                assert_eq!(w[0].1 + 1, w[1].0);
            }
        }
    }

    #[test]
    fn class_filter_parsing() {
        assert_eq!("tree".parse(), Ok(ClassFilter::Tree));
        assert_eq!("k-cyclic:3".parse(), Ok(ClassFilter::KCyclic(3)));
        assert!("bipartite".parse::<ClassFilter>().is_err());
        assert_eq!(ClassFilter::KCyclic(2).to_string(), "k-cyclic:2");
    }

    #[test]
    fn small_tree_scan() {
        let mut cfg = ScanConfig::exhaustive(5);
        cfg.class_filter = Some(ClassFilter::Tree);
        let r = scan(&cfg).unwrap();
        // Cayley: n^(n-2) labeled trees, n = 2..=5
        assert_eq!(r.total_scanned, 1 + 3 + 16 + 125);
        assert_eq!(r.skipped_edgeless, 1);
        assert_eq!(r.failures, 0);
        let trees = &r.classes["tree"];
        assert_eq!(trees.verdicts.holds_with_equality, trees.stars);
        assert_eq!(trees.equality_stars, trees.stars);
        assert_eq!(r.verdicts.total(), r.total_scanned);
    }

    #[test]
    fn low_rank_has_no_counterexample() {
        for k in [0, 1] {
            let found = find_min_counterexample(k, 100, 2).unwrap();
            assert!(found.graph.is_none());
        }
    }

    #[test]
    fn rank_two_ladder() {
        let found = find_min_counterexample(2, 19, 2).unwrap();
        let g = found.graph.unwrap();
        assert!(g.comparison < 0 && g.cycle_rank == 2 && g.connected);
        assert!(g.n <= 19);
    }
}
