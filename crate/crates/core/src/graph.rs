//! Signed graphs: validation, switching, balance, girth and structural
//! recognition. Nothing in here touches linear algebra.
//!
//! Vertices are `0..n`. Edges are stored once with `u < v`, sorted, which
//! makes the edge list itself a canonical form for a labelled signed graph.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sign carried by an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

/// A simple undirected graph with a ±1 label on every edge.
///
/// Immutable once built; every constructor goes through [`SignedGraph::new`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(usize, Sign)>>,
}

impl SignedGraph {
    /// Validates a raw edge list and normalizes it to `u < v`, sorted order.
    pub fn new<I>(n: usize, raw_edges: I) -> Result<SignedGraph>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut edges = Vec::new();
        for (a, b, sign) in raw_edges {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            edges.push(Edge { u, v, sign });
        }
        edges.sort();
        for pair in edges.windows(2) {
            if pair[0].u == pair[1].u && pair[0].v == pair[1].v {
                return Err(Error::DuplicateEdge(pair[0].u, pair[0].v));
            }
        }
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push((e.v, e.sign));
            adj[e.v].push((e.u, e.sign));
        }
        for list in &mut adj {
            list.sort();
        }
        Ok(SignedGraph { n, edges, adj })
    }

    /// Builds the all-positive signing of an unsigned edge list.
    pub fn all_positive<I>(n: usize, pairs: I) -> Result<SignedGraph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        SignedGraph::new(n, pairs.into_iter().map(|(u, v)| (u, v, Sign::Positive)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Neighbors of `v` with the sign of the connecting edge, ascending.
    pub fn neighbors(&self, v: usize) -> &[(usize, Sign)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        let list = self.adj.get(u)?;
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn underlying_edges(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.u, e.v)).collect()
    }

    /// Every edge sign flipped.
    pub fn negated(&self) -> SignedGraph {
        self.map_signs(|e| -e.sign)
    }

    fn map_signs(&self, f: impl Fn(&Edge) -> Sign) -> SignedGraph {
        let edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| Edge { sign: f(e), ..*e })
            .collect();
        let mut adj = vec![Vec::new(); self.n];
        for e in &edges {
            adj[e.u].push((e.v, e.sign));
            adj[e.v].push((e.u, e.sign));
        }
        for list in &mut adj {
            list.sort();
        }
        SignedGraph {
            n: self.n,
            edges,
            adj,
        }
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &(w, _) in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub fn ensure_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// True when the underlying graph is a single cycle `C_n`.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3
            && self.edges.len() == self.n
            && self.adj.iter().all(|l| l.len() == 2)
            && self.is_connected()
    }

    /// True when the connected underlying graph contains a cycle.
    pub fn has_cycle(&self) -> bool {
        self.edges.len() >= self.n
    }

    /// Product of the edge signs along a closed vertex sequence.
    pub fn cycle_sign(&self, cycle: &[usize]) -> Result<Sign> {
        let mut distinct = cycle.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() < 3 || distinct.len() != cycle.len() {
            return Err(Error::CycleTooShort);
        }
        let mut sign = Sign::Positive;
        for i in 0..cycle.len() {
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            if a >= self.n || b >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: a.max(b),
                    n: self.n,
                });
            }
            sign = sign * self.sign(a, b).ok_or(Error::NotAnEdge(a, b))?;
        }
        Ok(sign)
    }

    pub fn cycle_witness(&self, cycle: Vec<usize>) -> Result<CycleWitness> {
        let sign = self.cycle_sign(&cycle)?;
        Ok(CycleWitness {
            length: cycle.len(),
            vertices: cycle,
            sign,
        })
    }

    /// `σ^ζ(uv) = ζ(u) σ(uv) ζ(v)`.
    pub fn switch(&self, zeta: &SwitchingFunction) -> Result<SignedGraph> {
        if zeta.len() != self.n {
            return Err(Error::SwitchingSizeMismatch {
                expected: self.n,
                got: zeta.len(),
            });
        }
        Ok(self.map_signs(|e| zeta.get(e.u) * e.sign * zeta.get(e.v)))
    }

    /// Spanning-tree gauge: assigns ζ by breadth-first propagation from
    /// vertex 0 so that every tree edge takes the `target` sign after
    /// switching, then reports the first co-tree edge that disagrees.
    fn gauge_to(&self, target: impl Fn(usize, usize) -> Sign) -> Gauge {
        let mut zeta = vec![Sign::Positive; self.n];
        let mut parent = vec![None; self.n];
        let mut depth = vec![usize::MAX; self.n];
        depth[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            for &(w, s) in &self.adj[u] {
                if depth[w] == usize::MAX {
                    depth[w] = depth[u] + 1;
                    parent[w] = Some(u);
                    zeta[w] = zeta[u] * s * target(u, w);
                    queue.push_back(w);
                }
            }
        }
        let conflict = self
            .edges
            .iter()
            .find(|e| zeta[e.u] * e.sign * zeta[e.v] != target(e.u, e.v))
            .map(|e| (e.u, e.v));
        Gauge {
            zeta: SwitchingFunction(zeta),
            parent,
            depth,
            conflict,
        }
    }

    /// Tree path `u → lca → v` closed by the co-tree edge `uv`.
    fn fundamental_cycle(&self, gauge: &Gauge, u: usize, v: usize) -> CycleWitness {
        let (mut a, mut b) = (u, v);
        let mut left = vec![a];
        let mut right = vec![b];
        while gauge.depth[a] > gauge.depth[b] {
            a = gauge.parent[a].expect("non-root has a parent");
            left.push(a);
        }
        while gauge.depth[b] > gauge.depth[a] {
            b = gauge.parent[b].expect("non-root has a parent");
            right.push(b);
        }
        while a != b {
            a = gauge.parent[a].expect("non-root has a parent");
            b = gauge.parent[b].expect("non-root has a parent");
            left.push(a);
            right.push(b);
        }
        right.pop();
        left.extend(right.into_iter().rev());
        self.cycle_witness(canonical_rotation(left))
            .expect("fundamental cycle lies in the graph")
    }

    /// Classifies the switching class as balanced, antibalanced, both or
    /// neither, with witnesses for each half of the verdict.
    pub fn balance_class(&self) -> Result<BalanceClass> {
        self.ensure_connected()?;
        let to_pos = self.gauge_to(|_, _| Sign::Positive);
        let to_neg = self.gauge_to(|_, _| Sign::Negative);
        let balanced = to_pos.conflict.is_none();
        let antibalanced = to_neg.conflict.is_none();
        let kind = match (balanced, antibalanced) {
            (true, true) => BalanceKind::Both,
            (true, false) => BalanceKind::Balanced,
            (false, true) => BalanceKind::Antibalanced,
            (false, false) => BalanceKind::Neither,
        };
        let negative_cycle = to_pos
            .conflict
            .map(|(u, v)| self.fundamental_cycle(&to_pos, u, v));
        let parity_violation = to_neg
            .conflict
            .map(|(u, v)| self.fundamental_cycle(&to_neg, u, v));
        Ok(BalanceClass {
            kind,
            to_positive: balanced.then_some(to_pos.zeta),
            to_negative: antibalanced.then_some(to_neg.zeta),
            negative_cycle,
            parity_violation,
        })
    }

    /// Shortest cycle of the underlying graph. Among all shortest cycles the
    /// lexicographically smallest vertex sequence is returned (starting at
    /// its minimum vertex, oriented towards the smaller neighbor).
    pub fn girth(&self) -> Result<CycleWitness> {
        self.ensure_connected()?;
        let g = self.girth_length().ok_or(Error::AcyclicGraph)?;
        for start in 0..self.n {
            let dist = self.distances_from(start, start);
            let mut path = vec![start];
            let mut on_path = vec![false; self.n];
            on_path[start] = true;
            if self.extend_cycle(g, &dist, &mut path, &mut on_path) {
                return self.cycle_witness(path);
            }
        }
        unreachable!("a cycle of length {g} exists")
    }

    fn girth_length(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] >= b) {
                    break;
                }
                for &(w, _) in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// BFS distances to `source` using only vertices `>= floor`.
    fn distances_from(&self, source: usize, floor: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &(w, _) in &self.adj[u] {
                if w >= floor && dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    fn extend_cycle(
        &self,
        g: usize,
        dist: &[usize],
        path: &mut Vec<usize>,
        on_path: &mut [bool],
    ) -> bool {
        let start = path[0];
        let cur = *path.last().expect("path starts non-empty");
        if path.len() == g {
            return self.sign(cur, start).is_some();
        }
        let remaining = g - path.len();
        for &(w, _) in &self.adj[cur] {
            if w <= start || on_path[w] || dist[w] > remaining {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            if self.extend_cycle(g, dist, path, on_path) {
                return true;
            }
            on_path[w] = false;
            path.pop();
        }
        false
    }

    /// Edges of the breadth-first spanning tree rooted at vertex 0 (neighbors
    /// visited in ascending order), as `(min, max)` pairs sorted.
    pub fn spanning_tree(&self) -> Vec<(usize, usize)> {
        let gauge = self.gauge_to(|_, _| Sign::Positive);
        let mut tree: Vec<(usize, usize)> = (0..self.n)
            .filter_map(|v| gauge.parent[v].map(|p| (p.min(v), p.max(v))))
            .collect();
        tree.sort_unstable();
        tree
    }

    /// Finds ζ with `switch(self, ζ) == other`, normalized to ζ(0) = +1.
    pub fn switching_equivalent(&self, other: &SignedGraph) -> Result<Option<SwitchingFunction>> {
        if self.n != other.n || self.underlying_edges() != other.underlying_edges() {
            return Err(Error::UnderlyingMismatch);
        }
        self.ensure_connected()?;
        let gauge = self.gauge_to(|u, v| other.sign(u, v).expect("same underlying graph"));
        Ok(gauge.conflict.is_none().then_some(gauge.zeta))
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    /// The bipartition `(part containing 0, other part)` when the underlying
    /// graph is `K_{n1,n2}`.
    pub fn complete_bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        if self.n < 2 || !self.is_connected() {
            return None;
        }
        let mut side = vec![None; self.n];
        side[0] = Some(false);
        let mut queue = VecDeque::from([0]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].expect("queued vertices are colored");
            for &(w, _) in &self.adj[u] {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return None,
                    Some(_) => {}
                }
            }
        }
        let (left, right): (Vec<usize>, Vec<usize>) =
            (0..self.n).partition(|&v| side[v] == Some(false));
        (left.len() * right.len() == self.edges.len()).then_some((left, right))
    }

    /// Keeps exactly the edges with both endpoints in `vertices`; the kept
    /// vertices are renumbered `0..k` in ascending order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<SignedGraph> {
        let mut keep = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.u] != usize::MAX && index[e.v] != usize::MAX)
            .map(|e| (index[e.u], index[e.v], e.sign));
        SignedGraph::new(keep.len(), edges)
    }

    /// All-positive `K_n`.
    pub fn complete(n: usize) -> Result<SignedGraph> {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        SignedGraph::all_positive(n, pairs)
    }

    /// All-positive `K_{n1,n2}` with parts `0..n1` and `n1..n1+n2`.
    pub fn complete_bipartite(n1: usize, n2: usize) -> Result<SignedGraph> {
        let pairs = (0..n1).flat_map(|u| (n1..n1 + n2).map(move |v| (u, v)));
        SignedGraph::all_positive(n1 + n2, pairs)
    }

    /// `C_n` on `0, 1, …, n-1`; the unbalanced representative has the single
    /// negative edge `(0, n-1)`.
    pub fn cycle(n: usize, balanced: bool) -> Result<SignedGraph> {
        if n < 3 {
            return Err(Error::InvalidOrder {
                n,
                reason: "a cycle needs at least 3 vertices",
            });
        }
        let edges = (0..n).map(|i| {
            let (u, v) = (i, (i + 1) % n);
            let sign = if !balanced && i == n - 1 {
                Sign::Negative
            } else {
                Sign::Positive
            };
            (u, v, sign)
        });
        SignedGraph::new(n, edges)
    }

    /// All-positive `P_n`.
    pub fn path(n: usize) -> Result<SignedGraph> {
        SignedGraph::all_positive(n, (1..n).map(|i| (i - 1, i)))
    }
}

struct Gauge {
    zeta: SwitchingFunction,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    conflict: Option<(usize, usize)>,
}

/// Rotates a cycle to start at its minimum vertex and orients it towards the
/// smaller of the two neighbors of that vertex.
pub fn canonical_rotation(mut cycle: Vec<usize>) -> Vec<usize> {
    let Some(pos) = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| *v)
        .map(|(i, _)| i)
    else {
        return cycle;
    };
    cycle.rotate_left(pos);
    if cycle.len() > 2 && cycle[cycle.len() - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    cycle
}

/// A ±1 label per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SwitchingFunction(Vec<Sign>);

impl SwitchingFunction {
    pub fn identity(n: usize) -> SwitchingFunction {
        SwitchingFunction(vec![Sign::Positive; n])
    }

    pub fn from_signs(signs: Vec<Sign>) -> SwitchingFunction {
        SwitchingFunction(signs)
    }

    /// ζ that is −1 exactly on `flipped`.
    pub fn flipping(n: usize, flipped: &[usize]) -> Result<SwitchingFunction> {
        let mut signs = vec![Sign::Positive; n];
        for &v in flipped {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            signs[v] = Sign::Negative;
        }
        Ok(SwitchingFunction(signs))
    }

    pub fn get(&self, v: usize) -> Sign {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    /// Vertices labelled −1.
    pub fn flipped(&self) -> Vec<usize> {
        (0..self.0.len())
            .filter(|&v| self.0[v] == Sign::Negative)
            .collect()
    }

    /// −ζ; switching by ζ and by −ζ have the same effect.
    pub fn negated(&self) -> SwitchingFunction {
        SwitchingFunction(self.0.iter().map(|&s| -s).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BalanceKind {
    Balanced,
    Antibalanced,
    Both,
    Neither,
}

impl BalanceKind {
    pub fn is_balanced(self) -> bool {
        matches!(self, BalanceKind::Balanced | BalanceKind::Both)
    }

    pub fn is_antibalanced(self) -> bool {
        matches!(self, BalanceKind::Antibalanced | BalanceKind::Both)
    }
}

impl fmt::Display for BalanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Balance verdict with witnesses.
///
/// `to_positive` is present iff the graph is balanced, `negative_cycle` iff
/// it is not. Likewise `to_negative` / `parity_violation` for antibalance:
/// the parity witness is an odd positive or even negative cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceClass {
    pub kind: BalanceKind,
    pub to_positive: Option<SwitchingFunction>,
    pub to_negative: Option<SwitchingFunction>,
    pub negative_cycle: Option<CycleWitness>,
    pub parity_violation: Option<CycleWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
    pub length: usize,
    pub sign: Sign,
}
