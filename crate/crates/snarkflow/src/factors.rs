//! 1-factors, complementary 2-factors, oddness, and the odd-circuit cut
//! parameters.
//!
//! In a cubic graph the perfect matchings are in bijection with the
//! 2-factors (complementation), so a single enumerator serves both. All
//! enumeration is exhaustive with a configurable cap; truncation is always
//! reported, never silent.

use crate::bitset::{EdgeSet, VertexSet};
use crate::connectivity::min_edge_cut;
use crate::graph::{CubicGraph, EdgeId, Extent, Multigraph, VertexId};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FactorError {
    #[error("graph must be cubic and bridgeless for this invariant")]
    NotBridgelessCubic,
    #[error("matching enumeration exceeded the cap of {cap}")]
    EnumerationCapExceeded { cap: usize },
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("matching does not cover vertex {vertex}")]
    NotPerfect { vertex: VertexId },
    #[error("edge set is not a matching: edges {a} and {b} share a vertex")]
    NotAMatching { a: EdgeId, b: EdgeId },
    #[error("2-factor has {found} odd circuits; this operation needs at least 2")]
    TooFewOddCircuits { found: usize },
}

/// A matching given by its edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: EdgeSet,
}

impl Matching {
    /// Validate that `edges` is a matching of `g` (no loops, no shared
    /// vertices).
    pub fn new(g: &Multigraph, edges: EdgeSet) -> Result<Self, FactorError> {
        let mut owner: Vec<Option<EdgeId>> = vec![None; g.n()];
        for e in edges.iter() {
            let (a, b) = g.endpoints(e);
            for v in [a, b] {
                if let Some(prev) = owner[v] {
                    return Err(FactorError::NotAMatching { a: prev, b: e });
                }
                owner[v] = Some(e);
            }
        }
        Ok(Matching { edges })
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn size(&self) -> usize {
        self.edges.count()
    }

    pub fn is_perfect(&self, g: &Multigraph) -> bool {
        self.edges.count() * 2 == g.n()
    }

    pub fn intersection_size(&self, other: &Matching) -> usize {
        self.edges.intersection(&other.edges).count()
    }
}

/// One circuit of a 2-factor: `vertices[i]` and `vertices[i+1 mod len]` are
/// joined by `edges[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circuit {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Circuit {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_indices(n, self.vertices.iter().copied())
    }

    pub fn edge_set(&self, m: usize) -> EdgeSet {
        EdgeSet::from_indices(m, self.edges.iter().copied())
    }
}

/// A spanning union of vertex-disjoint circuits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFactor {
    pub circuits: Vec<Circuit>,
}

impl TwoFactor {
    pub fn odd_count(&self) -> usize {
        self.circuits.iter().filter(|c| c.is_odd()).count()
    }

    pub fn edge_set(&self, m: usize) -> EdgeSet {
        EdgeSet::from_indices(
            m,
            self.circuits.iter().flat_map(|c| c.edges.iter().copied()),
        )
    }

    /// Index of the circuit through `v`, if any.
    pub fn circuit_through(&self, v: VertexId) -> Option<usize> {
        self.circuits.iter().position(|c| c.vertices.contains(&v))
    }

    /// Indices of odd circuits.
    pub fn odd_circuits(&self) -> Vec<usize> {
        (0..self.circuits.len())
            .filter(|&i| self.circuits[i].is_odd())
            .collect()
    }
}

/// Result of perfect-matching enumeration: duplicate-free, in a fixed
/// search order, truncated at the cap with an explicit flag.
#[derive(Debug, Clone)]
pub struct MatchingList {
    pub matchings: Vec<Matching>,
    pub truncated: bool,
}

/// Enumerate all perfect matchings by always matching the lowest uncovered
/// vertex, branching over its incident edges in ascending id order. Each
/// matching is produced exactly once.
pub fn enumerate_perfect_matchings(g: &CubicGraph, cap: usize) -> MatchingList {
    let graph = g.graph();
    let n = graph.n();
    let mut covered = vec![false; n];
    let mut chosen: Vec<EdgeId> = Vec::new();
    let mut out = Vec::new();
    let mut truncated = false;

    fn rec(
        graph: &Multigraph,
        covered: &mut Vec<bool>,
        chosen: &mut Vec<EdgeId>,
        out: &mut Vec<Matching>,
        cap: usize,
        truncated: &mut bool,
    ) {
        if *truncated {
            return;
        }
        let Some(v) = covered.iter().position(|&c| !c) else {
            if out.len() == cap {
                *truncated = true;
                return;
            }
            out.push(Matching {
                edges: EdgeSet::from_indices(graph.m(), chosen.iter().copied()),
            });
            return;
        };
        for &(u, e) in graph.incident(v) {
            if u == v || covered[u] {
                continue;
            }
            covered[v] = true;
            covered[u] = true;
            chosen.push(e);
            rec(graph, covered, chosen, out, cap, truncated);
            chosen.pop();
            covered[v] = false;
            covered[u] = false;
        }
    }

    if n % 2 == 0 {
        rec(graph, &mut covered, &mut chosen, &mut out, cap, &mut truncated);
    }
    MatchingList { matchings: out, truncated }
}

/// Minimum size of the intersection of two perfect matchings, over all
/// ordered pairs (a matching paired with itself counts), with a witness
/// pair attaining the minimum.
///
/// Zero exactly when the graph is 3-edge-colorable: two disjoint perfect
/// matchings force the third color class.
pub fn mu2(g: &CubicGraph, cap: usize) -> Result<(usize, (Matching, Matching)), FactorError> {
    if !g.is_bridgeless() {
        return Err(FactorError::NotBridgelessCubic);
    }
    let list = enumerate_perfect_matchings(g, cap);
    if list.truncated {
        return Err(FactorError::EnumerationCapExceeded { cap });
    }
    let ms = &list.matchings;
    if ms.is_empty() {
        return Err(FactorError::NoPerfectMatching);
    }
    let mut best = usize::MAX;
    let mut pair = (0, 0);
    'outer: for i in 0..ms.len() {
        for j in i..ms.len() {
            let inter = ms[i].intersection_size(&ms[j]);
            if inter < best {
                best = inter;
                pair = (i, j);
                if best == 0 {
                    break 'outer;
                }
            }
        }
    }
    Ok((best, (ms[pair.0].clone(), ms[pair.1].clone())))
}

/// The 2-factor complementary to a perfect matching, decomposed into
/// circuits. Parallel edges may form 2-circuits; closed pairs are walked
/// deterministically from their lowest vertex along the lowest edge id.
pub fn complement_two_factor(g: &CubicGraph, m: &Matching) -> Result<TwoFactor, FactorError> {
    let graph = g.graph();
    if let Some(v) = (0..graph.n()).find(|&v| {
        !graph
            .incident(v)
            .iter()
            .any(|&(_, e)| m.edges.contains(e))
    }) {
        return Err(FactorError::NotPerfect { vertex: v });
    }

    let mut used_edge = vec![false; graph.m()];
    for e in m.edges.iter() {
        used_edge[e] = true;
    }
    let mut on_circuit = vec![false; graph.n()];
    let mut circuits = Vec::new();
    for start in 0..graph.n() {
        if on_circuit[start] {
            continue;
        }
        let mut vertices = vec![start];
        let mut edges = Vec::new();
        let mut at = start;
        on_circuit[start] = true;
        loop {
            let Some(&(u, e)) = graph
                .incident(at)
                .iter()
                .find(|&&(_, e)| !used_edge[e])
            else {
                break;
            };
            used_edge[e] = true;
            edges.push(e);
            let next = if u == at { at } else { u };
            if next == start {
                break;
            }
            vertices.push(next);
            on_circuit[next] = true;
            at = next;
        }
        circuits.push(Circuit { vertices, edges });
    }
    Ok(TwoFactor { circuits })
}

/// Oddness: the minimum number of odd circuits over all 2-factors, with a
/// witness attaining it (the first minimum in enumeration order).
pub fn oddness(g: &CubicGraph, cap: usize) -> Result<(usize, TwoFactor), FactorError> {
    if !g.is_bridgeless() {
        return Err(FactorError::NotBridgelessCubic);
    }
    let list = enumerate_perfect_matchings(g, cap);
    if list.truncated {
        return Err(FactorError::EnumerationCapExceeded { cap });
    }
    if list.matchings.is_empty() {
        return Err(FactorError::NoPerfectMatching);
    }
    let mut best: Option<(usize, TwoFactor)> = None;
    for m in &list.matchings {
        let tf = complement_two_factor(g, m)?;
        let odd = tf.odd_count();
        if best.as_ref().is_none_or(|(b, _)| odd < *b) {
            best = Some((odd, tf));
            if odd == 0 {
                break;
            }
        }
    }
    Ok(best.expect("at least one matching"))
}

/// The cut parameter of one 2-factor: the smallest edge cut separating two
/// of its odd circuits, with the witness cut and the separated pair.
#[derive(Debug, Clone)]
pub struct FactorCutReport {
    pub value: usize,
    pub witness_cut: EdgeSet,
    /// Indices into `f.circuits` of the two odd circuits the witness
    /// separates.
    pub separated_circuits: (usize, usize),
}

/// Smallest edge cut whose removal leaves two components each containing an
/// odd circuit of `f`: the minimum over unordered pairs of odd circuits of
/// the pairwise minimum cut (each circuit contracted to a terminal).
pub fn m_of_factor(g: &CubicGraph, f: &TwoFactor) -> Result<FactorCutReport, FactorError> {
    let odd = f.odd_circuits();
    if odd.len() < 2 {
        return Err(FactorError::TooFewOddCircuits { found: odd.len() });
    }
    let n = g.n();
    let mut best: Option<FactorCutReport> = None;
    for (i, &ci) in odd.iter().enumerate() {
        for &cj in &odd[i + 1..] {
            let a = f.circuits[ci].vertex_set(n);
            let b = f.circuits[cj].vertex_set(n);
            let cut = min_edge_cut(g.graph(), &a, &b)
                .expect("odd circuits are disjoint and non-empty");
            if best.as_ref().is_none_or(|r| cut.size() < r.value) {
                best = Some(FactorCutReport {
                    value: cut.size(),
                    witness_cut: cut.edges,
                    separated_circuits: (ci, cj),
                });
            }
        }
    }
    Ok(best.expect("at least one odd pair"))
}

/// The maximum of `m_of_factor` over all minimum 2-factors, or unbounded
/// when the oddness is zero. The witness is the first maximizing factor in
/// enumeration order.
pub fn m_star(
    g: &CubicGraph,
    cap: usize,
) -> Result<(Extent, Option<(TwoFactor, FactorCutReport)>), FactorError> {
    if !g.is_bridgeless() {
        return Err(FactorError::NotBridgelessCubic);
    }
    let (omega, _) = oddness(g, cap)?;
    if omega == 0 {
        return Ok((Extent::Unbounded, None));
    }
    let list = enumerate_perfect_matchings(g, cap);
    if list.truncated {
        return Err(FactorError::EnumerationCapExceeded { cap });
    }
    let mut best: Option<(usize, TwoFactor, FactorCutReport)> = None;
    for m in &list.matchings {
        let tf = complement_two_factor(g, m)?;
        if tf.odd_count() != omega {
            continue;
        }
        let report = m_of_factor(g, &tf)?;
        if best.as_ref().is_none_or(|(v, _, _)| report.value > *v) {
            best = Some((report.value, tf, report));
        }
    }
    let (v, tf, report) = best.expect("a minimum 2-factor exists");
    Ok((Extent::Finite(v), Some((tf, report))))
}
