//! Exhaustive sweeps over small connected signed graphs, one representative
//! per (isomorphism class of the underlying graph) × (switching class).

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::serialize_graph;
use crate::graph::{Sign, SignedGraph};
use crate::theorems::{
    bound_report, check_cycle_graph, check_rank2_lemma, check_theorem1, classify_with_report,
    BoundReport, Claim, CounterexampleCertificate, ExtremalCase, Lambda, Theorem1Case,
};

/// Largest order the generator accepts.
pub const MAX_ORDER: usize = 8;

/// Canonical code of an unsigned graph: degree sequence (descending) and the
/// smallest adjacency bit-string over all relabelings that list vertices in
/// that degree order. Bits run over pairs `(i, j)`, `i < j`, ordered by `j`
/// then `i`, first pair most significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    pub degrees: Vec<usize>,
    pub bits: u64,
}

fn adjacency_bits(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

struct Canonizer<'a> {
    n: usize,
    adj: &'a [Vec<bool>],
    /// `slots[k]`: vertices allowed at position `k`.
    slots: Vec<Vec<usize>>,
    used: Vec<bool>,
    order: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl Canonizer<'_> {
    fn search(&mut self, k: usize, prefix: u64) {
        if k == self.n {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, self.order.clone()));
            }
            return;
        }
        for idx in 0..self.slots[k].len() {
            let v = self.slots[k][idx];
            if self.used[v] {
                continue;
            }
            let mut bits = prefix;
            for i in 0..k {
                bits = (bits << 1) | self.adj[self.order[i]][v] as u64;
            }
            if let Some((best, _)) = &self.best {
                let remaining = pair_count(self.n) - pair_count(k + 1);
                if (bits << remaining) > *best {
                    continue;
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.search(k + 1, bits);
            self.order.pop();
            self.used[v] = false;
        }
    }
}

fn pair_count(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Canonical code and a relabeling `order` (new label `i` is old vertex
/// `order[i]`) that realizes it.
pub fn canonical_form(n: usize, edges: &[(usize, usize)]) -> (CanonicalCode, Vec<usize>) {
    let adj = adjacency_bits(n, edges);
    let degree: Vec<usize> = adj
        .iter()
        .map(|r| r.iter().filter(|&&b| b).count())
        .collect();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by(|&a, &b| degree[b].cmp(&degree[a]).then(a.cmp(&b)));
    let degrees: Vec<usize> = by_degree.iter().map(|&v| degree[v]).collect();
    let slots = degrees
        .iter()
        .map(|&d| (0..n).filter(|&v| degree[v] == d).collect())
        .collect();
    let mut c = Canonizer {
        n,
        adj: &adj,
        slots,
        used: vec![false; n],
        order: Vec::with_capacity(n),
        best: None,
    };
    c.search(0, 0);
    let (bits, order) = c.best.expect("at least one relabeling exists");
    (CanonicalCode { degrees, bits }, order)
}

fn relabel(edges: &[(usize, usize)], order: &[usize]) -> Vec<(usize, usize)> {
    let mut position = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut out: Vec<(usize, usize)> = edges
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (position[u], position[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    out.sort_unstable();
    out
}

/// One all-positive graph per isomorphism class of connected graphs on `n`
/// vertices, in canonical labeling, sorted by edge count then canonical code.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// the classes on `n` vertices are reached by attaching a new vertex to a
/// nonempty neighbor set in each class on `n − 1` vertices.
pub fn enumerate_underlying(n: usize) -> Result<Vec<SignedGraph>> {
    if n == 0 || n > MAX_ORDER {
        return Err(Error::InvalidOrder {
            n,
            reason: "enumeration supports 1 <= n <= 8",
        });
    }
    let mut level: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for k in 2..=n {
        let mut seen: HashSet<CanonicalCode> = HashSet::new();
        let mut next: Vec<(CanonicalCode, Vec<(usize, usize)>)> = Vec::new();
        for base in &level {
            for mask in 1u32..(1 << (k - 1)) {
                let mut edges = base.clone();
                edges.extend(
                    (0..k - 1)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| (i, k - 1)),
                );
                let (code, order) = canonical_form(k, &edges);
                if seen.insert(code.clone()) {
                    next.push((code, relabel(&edges, &order)));
                }
            }
        }
        next.sort_by(|a, b| a.1.len().cmp(&b.1.len()).then_with(|| a.0.cmp(&b.0)));
        level = next.into_iter().map(|(_, e)| e).collect();
    }
    level
        .into_iter()
        .map(|edges| SignedGraph::all_positive(n, edges))
        .collect()
}

/// One signing per switching class: spanning-tree edges positive, co-tree
/// edges (in sorted order) negative where the bit of `mask` is set, for
/// masks `0..2^(m − n + 1)` in increasing order.
pub fn enumerate_signatures(g: &SignedGraph) -> Result<Vec<SignedGraph>> {
    g.ensure_connected()?;
    let co_tree = co_tree_edges(g);
    (0u64..1 << co_tree.len())
        .map(|mask| signature_for_mask(g, &co_tree, mask))
        .collect()
}

fn co_tree_edges(g: &SignedGraph) -> Vec<(usize, usize)> {
    let tree: BTreeSet<(usize, usize)> = g.spanning_tree().into_iter().collect();
    g.underlying_edges()
        .into_iter()
        .filter(|e| !tree.contains(e))
        .collect()
}

fn signature_for_mask(
    g: &SignedGraph,
    co_tree: &[(usize, usize)],
    mask: u64,
) -> Result<SignedGraph> {
    let negative: BTreeSet<(usize, usize)> = co_tree
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    SignedGraph::new(
        g.n(),
        g.underlying_edges().into_iter().map(|e| {
            let sign = if negative.contains(&e) {
                Sign::Negative
            } else {
                Sign::Positive
            };
            (e.0, e.1, sign)
        }),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Bound,
    Theorem1,
    Theorem2,
    Cycles,
    Rank2,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::Bound,
        Check::Theorem1,
        Check::Theorem2,
        Check::Cycles,
        Check::Rank2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Bound => "bound",
            Check::Theorem1 => "theorem1",
            Check::Theorem2 => "theorem2",
            Check::Cycles => "cycles",
            Check::Rank2 => "rank2",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::InvalidConfig(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumConfig {
    pub min_n: usize,
    pub max_n: usize,
    pub jobs: usize,
    pub checks: BTreeSet<Check>,
}

impl EnumConfig {
    pub fn new(max_n: usize) -> EnumConfig {
        EnumConfig {
            min_n: 3,
            max_n,
            jobs: 1,
            checks: Check::ALL.into_iter().collect(),
        }
    }

    pub fn with_jobs(mut self, jobs: usize) -> EnumConfig {
        self.jobs = jobs;
        self
    }

    pub fn with_checks(mut self, checks: impl IntoIterator<Item = Check>) -> EnumConfig {
        self.checks = checks.into_iter().collect();
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.min_n < 3 || self.min_n > self.max_n {
            return Err(Error::InvalidConfig(format!(
                "need 3 <= min_n <= max_n, got min_n = {}, max_n = {}",
                self.min_n, self.max_n
            )));
        }
        if self.max_n > MAX_ORDER {
            return Err(Error::InvalidConfig(format!(
                "max_n must be at most {MAX_ORDER}"
            )));
        }
        if self.jobs == 0 {
            return Err(Error::InvalidConfig("jobs must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderCounts {
    pub n: usize,
    /// Connected underlying graphs up to isomorphism.
    pub graphs: usize,
    /// Switching classes over all of those graphs, trees included.
    pub switching_classes: usize,
    /// Underlying graphs that contain a cycle.
    pub with_cycles: usize,
    /// Switching classes that were checked (graphs with a cycle).
    pub instances: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EqualityRecord {
    #[serde(serialize_with = "serialize_graph")]
    pub graph: SignedGraph,
    pub case: ExtremalCase,
    pub lambdas: Vec<Lambda>,
    pub multiplicity: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NullityRecord {
    #[serde(serialize_with = "serialize_graph")]
    pub graph: SignedGraph,
    pub case: Option<Theorem1Case>,
}

/// Aggregate of a sweep. Everything except the wall time is a function of
/// the checked instances alone, so reports from different `jobs` values
/// serialize identically.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnumReport {
    pub min_n: usize,
    pub max_n: usize,
    pub checks: Vec<Check>,
    pub orders: Vec<OrderCounts>,
    pub instances_checked: usize,
    pub bound_violations: usize,
    pub equality_tally: BTreeMap<ExtremalCase, usize>,
    pub equalities: Vec<EqualityRecord>,
    pub nullity_equalities: Vec<NullityRecord>,
    /// Non-cycle instances whose minimum slack is 1.
    pub noncycle_slack_one: usize,
    pub certificates: Vec<CounterexampleCertificate>,
    #[serde(skip)]
    pub wall_time: Duration,
}

#[derive(Default)]
struct Outcome {
    bound_violation: bool,
    equality: Option<EqualityRecord>,
    nullity: Option<NullityRecord>,
    noncycle_slack_one: bool,
    certificates: Vec<CounterexampleCertificate>,
}

fn failure(g: &SignedGraph, err: &Error) -> CounterexampleCertificate {
    CounterexampleCertificate::new(g, Claim::CheckerFailure, err.to_string())
}

fn violation_certificate(g: &SignedGraph, report: &BoundReport) -> CounterexampleCertificate {
    let worst = report.rows.iter().filter(|r| r.slack < 0);
    let mut cert = CounterexampleCertificate::new(
        g,
        Claim::GirthBound,
        format!("multiplicity exceeds n - g + 2 = {}", report.limit),
    );
    cert.lambda = worst.clone().map(|r| r.lambda).collect();
    cert.multiplicity = worst.map(|r| r.multiplicity).max();
    cert
}

/// Runs the configured checkers on one instance. Checker errors become
/// certificates.
fn check_instance(g: &SignedGraph, checks: &BTreeSet<Check>) -> Outcome {
    let mut out = Outcome::default();
    let needs_report = checks.contains(&Check::Bound) || checks.contains(&Check::Theorem2);
    let report = if needs_report {
        match bound_report(g) {
            Ok(r) => Some(r),
            Err(e) => {
                out.certificates.push(failure(g, &e));
                return out;
            }
        }
    } else {
        None
    };

    if let (true, Some(r)) = (checks.contains(&Check::Bound), &report) {
        if r.min_slack < 0 {
            out.bound_violation = true;
            out.certificates.push(violation_certificate(g, r));
        }
    }

    if let (true, Some(r)) = (checks.contains(&Check::Theorem2), &report) {
        match classify_with_report(g, r) {
            Ok(v) => {
                let cycle = g.is_cycle();
                if !cycle && v.min_slack == 1 {
                    out.noncycle_slack_one = true;
                }
                if v.anomaly && v.min_slack >= 0 {
                    let claim = if cycle {
                        Claim::CycleDoubleEigenvalues
                    } else {
                        Claim::EqualityCharacterization
                    };
                    let mut cert = CounterexampleCertificate::new(
                        g,
                        claim,
                        format!("slack-0 instance classified as {}", v.case),
                    );
                    cert.lambda = v.lambdas.clone();
                    cert.multiplicity = v.multiplicity;
                    out.certificates.push(cert);
                }
                if v.min_slack == 0 {
                    out.equality = Some(EqualityRecord {
                        graph: g.clone(),
                        case: v.case,
                        lambdas: v.lambdas,
                        multiplicity: v.multiplicity,
                    });
                }
            }
            Err(e) => out.certificates.push(failure(g, &e)),
        }
    }

    if checks.contains(&Check::Theorem1) {
        match check_theorem1(g) {
            Ok(v) => {
                if !v.consistent {
                    let mut cert = CounterexampleCertificate::new(
                        g,
                        Claim::NullityCharacterization,
                        format!(
                            "nullity {} against limit {}, case {:?}",
                            v.nullity, v.limit, v.case
                        ),
                    );
                    cert.lambda = vec![Lambda::Exact(crate::linalg::Rational::integer(0))];
                    cert.multiplicity = Some(v.nullity);
                    out.certificates.push(cert);
                }
                if v.equality {
                    out.nullity = Some(NullityRecord {
                        graph: g.clone(),
                        case: v.case,
                    });
                }
            }
            Err(e) => out.certificates.push(failure(g, &e)),
        }
    }

    if checks.contains(&Check::Cycles) && g.is_cycle() {
        match check_cycle_graph(g) {
            Ok(v) if !v.consistent => out.certificates.push(CounterexampleCertificate::new(
                g,
                Claim::CycleMultiplicities,
                "cycle multiplicities differ from the closed forms",
            )),
            Ok(_) => {}
            Err(e) => out.certificates.push(failure(g, &e)),
        }
    }

    if checks.contains(&Check::Rank2) {
        match check_rank2_lemma(g) {
            Ok(v) if !v.consistent => out.certificates.push(CounterexampleCertificate::new(
                g,
                Claim::RankTwo,
                format!(
                    "rank {} but complete bipartite = {}",
                    v.rank, v.complete_bipartite
                ),
            )),
            Ok(_) => {}
            Err(e) => out.certificates.push(failure(g, &e)),
        }
    }
    out
}

/// Every checked instance of orders `min_n..=max_n` in sweep order: order,
/// then underlying graph, then signature mask.
pub fn sweep_instances(min_n: usize, max_n: usize) -> Result<Vec<SignedGraph>> {
    let mut all = Vec::new();
    for n in min_n..=max_n {
        for g in enumerate_underlying(n)? {
            if g.has_cycle() {
                all.extend(enumerate_signatures(&g)?);
            }
        }
    }
    Ok(all)
}

/// Masks per work item; keeps large graphs from serializing a sweep on one
/// thread while bounding memory.
const CHUNK: u64 = 1 << 12;

struct WorkItem<'a> {
    graph: &'a SignedGraph,
    co_tree: &'a [(usize, usize)],
    masks: std::ops::Range<u64>,
}

#[derive(Default)]
struct Summary {
    bound_violations: usize,
    noncycle_slack_one: usize,
    equalities: Vec<EqualityRecord>,
    nullity: Vec<NullityRecord>,
    certificates: Vec<CounterexampleCertificate>,
}

impl Summary {
    fn absorb(&mut self, o: Outcome) {
        self.bound_violations += o.bound_violation as usize;
        self.noncycle_slack_one += o.noncycle_slack_one as usize;
        self.equalities.extend(o.equality);
        self.nullity.extend(o.nullity);
        self.certificates.extend(o.certificates);
    }
}

fn run_item(item: &WorkItem<'_>, checks: &BTreeSet<Check>) -> Summary {
    let mut summary = Summary::default();
    for mask in item.masks.clone() {
        match signature_for_mask(item.graph, item.co_tree, mask) {
            Ok(g) => summary.absorb(check_instance(&g, checks)),
            Err(e) => summary.certificates.push(failure(item.graph, &e)),
        }
    }
    summary
}

pub fn run_sweep(cfg: &EnumConfig) -> Result<EnumReport> {
    cfg.validate()?;
    let start = Instant::now();
    let mut orders = Vec::new();
    let mut cyclic: Vec<(SignedGraph, Vec<(usize, usize)>)> = Vec::new();
    for n in cfg.min_n..=cfg.max_n {
        let graphs = enumerate_underlying(n)?;
        let mut counts = OrderCounts {
            n,
            graphs: graphs.len(),
            switching_classes: 0,
            with_cycles: 0,
            instances: 0,
        };
        for g in graphs {
            let classes = 1usize << (g.edge_count() + 1 - n);
            counts.switching_classes += classes;
            if g.has_cycle() {
                counts.with_cycles += 1;
                counts.instances += classes;
                let co_tree = co_tree_edges(&g);
                cyclic.push((g, co_tree));
            }
        }
        orders.push(counts);
    }
    let items: Vec<WorkItem<'_>> = cyclic
        .iter()
        .flat_map(|(graph, co_tree)| {
            let total = 1u64 << co_tree.len();
            (0..total.div_ceil(CHUNK)).map(move |c| WorkItem {
                graph,
                co_tree,
                masks: c * CHUNK..((c + 1) * CHUNK).min(total),
            })
        })
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;
    let summaries: Vec<Summary> = pool.install(|| {
        items
            .par_iter()
            .map(|item| run_item(item, &cfg.checks))
            .collect()
    });

    let mut report = EnumReport {
        min_n: cfg.min_n,
        max_n: cfg.max_n,
        checks: cfg.checks.iter().copied().collect(),
        instances_checked: orders.iter().map(|o| o.instances).sum(),
        orders,
        bound_violations: 0,
        equality_tally: BTreeMap::new(),
        equalities: Vec::new(),
        nullity_equalities: Vec::new(),
        noncycle_slack_one: 0,
        certificates: Vec::new(),
        wall_time: Duration::ZERO,
    };
    for s in summaries {
        report.bound_violations += s.bound_violations;
        report.noncycle_slack_one += s.noncycle_slack_one;
        for eq in &s.equalities {
            *report.equality_tally.entry(eq.case).or_insert(0) += 1;
        }
        report.equalities.extend(s.equalities);
        report.nullity_equalities.extend(s.nullity);
        report.certificates.extend(s.certificates);
    }
    report.wall_time = start.elapsed();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        assert_eq!(enumerate_underlying(1).unwrap().len(), 1);
        assert_eq!(enumerate_underlying(2).unwrap().len(), 1);
        let three = enumerate_underlying(3).unwrap();
        assert_eq!(three.len(), 2);
        assert_eq!(three[0].edge_count(), 2);
        assert!(three[1].is_complete());
        assert_eq!(enumerate_underlying(4).unwrap().len(), 6);
        assert!(enumerate_underlying(0).is_err());
        assert!(enumerate_underlying(9).is_err());
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let path_a = [(0, 1), (1, 2), (2, 3)];
        let path_b = [(2, 0), (0, 3), (3, 1)];
        assert_eq!(canonical_form(4, &path_a).0, canonical_form(4, &path_b).0);
        let star = [(0, 1), (0, 2), (0, 3)];
        assert_ne!(canonical_form(4, &path_a).0, canonical_form(4, &star).0);
    }

    #[test]
    fn signature_counts() {
        let tree = SignedGraph::path(5).unwrap();
        assert_eq!(enumerate_signatures(&tree).unwrap().len(), 1);
        let c6 = SignedGraph::cycle(6, true).unwrap();
        let sigs = enumerate_signatures(&c6).unwrap();
        assert_eq!(sigs.len(), 2);
        assert!(sigs[0].balance_class().unwrap().kind.is_balanced());
        assert!(!sigs[1].balance_class().unwrap().kind.is_balanced());
        let k4 = enumerate_signatures(&SignedGraph::complete(4).unwrap()).unwrap();
        assert_eq!(k4.len(), 8);
        for i in 0..k4.len() {
            for j in i + 1..k4.len() {
                assert_eq!(k4[i].switching_equivalent(&k4[j]).unwrap(), None);
            }
        }
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("nope".parse::<Check>().is_err());
    }

    #[test]
    fn config_validation() {
        assert!(EnumConfig::new(5).validate().is_ok());
        assert!(EnumConfig::new(9).validate().is_err());
        assert!(EnumConfig::new(2).validate().is_err());
        assert!(EnumConfig::new(5).with_jobs(0).validate().is_err());
    }
}
