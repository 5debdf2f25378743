//! Multigraph representation, structural predicates, and the
//! suppression/subdivision machinery.
//!
//! Vertices and edges carry dense integer ids (`0..n`, `0..m`); every
//! operation iterates them in ascending order, so all downstream searches
//! are reproducible run to run.

use crate::bitset::{EdgeSet, VertexSet};
use std::fmt;
use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("endpoint {vertex} of edge {edge} is out of range (n = {n})")]
    EndpointOutOfRange { edge: EdgeId, vertex: VertexId, n: usize },
    #[error("edge {edge} is a loop at vertex {vertex}, and loops are not allowed here")]
    LoopNotAllowed { edge: EdgeId, vertex: VertexId },
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: VertexId, degree: usize },
    #[error("graph is not connected")]
    NotConnected,
    #[error("vertex {vertex} has degree {degree}; suppression needs degree 2 or 3")]
    UnsuppressibleDegree { vertex: VertexId, degree: usize },
    #[error("component through vertex {vertex} is a circuit of bivalent vertices and cannot be suppressed to a cubic graph")]
    BivalentCircuit { vertex: VertexId },
}

/// A quantity that is either a finite count or unbounded.
///
/// Used for cut parameters (and girth) whose defining minimum can range
/// over an empty family. Kept as a dedicated sentinel so that hypothesis
/// arithmetic like `k >= 5*mu2 - 3` never touches a fake large integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extent {
    Finite(usize),
    Unbounded,
}

impl Extent {
    pub fn is_unbounded(&self) -> bool {
        matches!(self, Extent::Unbounded)
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            Extent::Finite(v) => Some(*v),
            Extent::Unbounded => None,
        }
    }

    /// `self >= rhs` where `rhs` may be negative.
    pub fn at_least(&self, rhs: i64) -> bool {
        match self {
            Extent::Unbounded => true,
            Extent::Finite(v) => *v as i64 >= rhs,
        }
    }
}

impl PartialOrd for Extent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Extent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (Extent::Unbounded, Extent::Unbounded) => std::cmp::Ordering::Equal,
            (Extent::Unbounded, _) => std::cmp::Ordering::Greater,
            (_, Extent::Unbounded) => std::cmp::Ordering::Less,
            (Extent::Finite(a), Extent::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Extent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extent::Finite(v) => write!(f, "{}", v),
            Extent::Unbounded => write!(f, "inf"),
        }
    }
}

/// An undirected multigraph: `n` vertices and a list of edges identified by
/// their position in the list. Parallel edges are permitted; loops only when
/// constructed through [`Multigraph::with_loops`] (or produced by
/// suppression).
#[derive(Clone, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
    loops_allowed: bool,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self, GraphError> {
        Self::build(n, edges, false)
    }

    pub fn with_loops(n: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self, GraphError> {
        Self::build(n, edges, true)
    }

    fn build(
        n: usize,
        edges: Vec<(VertexId, VertexId)>,
        loops_allowed: bool,
    ) -> Result<Self, GraphError> {
        for (e, &(a, b)) in edges.iter().enumerate() {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::EndpointOutOfRange { edge: e, vertex: v, n });
                }
            }
            if a == b && !loops_allowed {
                return Err(GraphError::LoopNotAllowed { edge: e, vertex: a });
            }
        }
        let mut adj = vec![Vec::new(); n];
        for (e, &(a, b)) in edges.iter().enumerate() {
            adj[a].push((b, e));
            if a != b {
                adj[b].push((a, e));
            } else {
                // a loop appears twice in its vertex's adjacency
                adj[a].push((a, e));
            }
        }
        Ok(Multigraph { n, edges, adj, loops_allowed })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let (a, b) = self.edges[e];
        a == b
    }

    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if v == a {
            b
        } else {
            debug_assert_eq!(v, b);
            a
        }
    }

    /// Neighbors of `v` as `(neighbor, edge)` pairs in ascending edge order.
    /// A loop at `v` appears twice.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn empty_edge_set(&self) -> EdgeSet {
        EdgeSet::new(self.m())
    }

    /// The edge boundary: edges with exactly one end in `s`.
    /// Loops never cross, so they are never part of a boundary.
    pub fn boundary(&self, s: &VertexSet) -> EdgeSet {
        let mut out = EdgeSet::new(self.m());
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if s.contains(a) != s.contains(b) {
                out.insert(e);
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &(u, _) in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n
    }

    /// Bridges by iterative lowpoint search. Parallel edges are handled by
    /// skipping only the entering edge id, so a doubled edge is never a
    /// bridge.
    pub fn bridges(&self) -> EdgeSet {
        let mut bridges = EdgeSet::new(self.m());
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![usize::MAX; self.n];
        let mut timer = 0;
        // stack entries: (vertex, entering edge, adjacency cursor)
        let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = Vec::new();
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, None, 0));
            while let Some(&mut (v, via, ref mut cursor)) = stack.last_mut() {
                if let Some(&(u, e)) = self.adj[v].get(*cursor) {
                    *cursor += 1;
                    if Some(e) == via || u == v {
                        continue;
                    }
                    if disc[u] == usize::MAX {
                        disc[u] = timer;
                        low[u] = timer;
                        timer += 1;
                        stack.push((u, Some(e), 0));
                    } else {
                        low[v] = low[v].min(disc[u]);
                    }
                } else {
                    stack.pop();
                    if let Some(&mut (p, _, _)) = stack.last_mut() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            if let Some(via) = via {
                                bridges.insert(via);
                            }
                        }
                    }
                }
            }
        }
        bridges
    }

    /// Girth as an [`Extent`]; `Unbounded` means the graph is acyclic.
    /// A loop is a circuit of length 1, a parallel pair a circuit of length 2.
    pub fn girth(&self) -> Extent {
        if self.edges.iter().any(|&(a, b)| a == b) {
            return Extent::Finite(1);
        }
        let mut sorted: Vec<(VertexId, VertexId)> = self
            .edges
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Extent::Finite(2);
        }
        // simple graph: BFS from each vertex, closing cycles on cross edges
        let mut best = usize::MAX;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut via = vec![usize::MAX; self.n];
            let mut queue = std::collections::VecDeque::new();
            dist[root] = 0;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                for &(u, e) in &self.adj[v] {
                    if e == via[v] {
                        continue;
                    }
                    if dist[u] == usize::MAX {
                        dist[u] = dist[v] + 1;
                        via[u] = e;
                        queue.push_back(u);
                    } else if dist[u] >= dist[v] {
                        best = best.min(dist[v] + dist[u] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Extent::Unbounded
        } else {
            Extent::Finite(best)
        }
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for root in 0..self.n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &(u, _) in &self.adj[v] {
                    if u == v {
                        return false; // loop
                    }
                    if color[u] == u8::MAX {
                        color[u] = 1 - color[v];
                        queue.push_back(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn structure_report(&self) -> StructureReport {
        StructureReport {
            is_cubic: (0..self.n).all(|v| self.degree(v) == 3),
            is_connected: self.is_connected(),
            bridges: self.bridges(),
            girth: self.girth(),
            is_bipartite: self.is_bipartite(),
        }
    }

    /// Delete the listed edges (vertex ids are preserved). Returns the new
    /// graph together with the map from new edge ids back to old ones.
    pub fn remove_edges(&self, removed: &[EdgeId]) -> (Multigraph, Vec<EdgeId>) {
        let drop = EdgeSet::from_indices(self.m(), removed.iter().copied());
        let mut edges = Vec::with_capacity(self.m() - drop.count());
        let mut map = Vec::with_capacity(edges.capacity());
        for (e, &pair) in self.edges.iter().enumerate() {
            if !drop.contains(e) {
                edges.push(pair);
                map.push(e);
            }
        }
        let g = Multigraph::build(self.n, edges, self.loops_allowed).expect("subgraph is valid");
        (g, map)
    }

    /// Replace every maximal path of degree-2 vertices by a single edge.
    ///
    /// Every vertex must have degree 2 or 3, and no component may be a bare
    /// circuit of bivalent vertices. The result is cubic; it may contain
    /// parallel edges and (when a suppressed path closes on one trivalent
    /// vertex) loops. The returned [`SuppressionMap`] records, per new edge,
    /// the ordered chain of original edges and the suppressed interior
    /// vertices it replaces.
    pub fn suppress_bivalent(&self) -> Result<(Multigraph, SuppressionMap), GraphError> {
        for v in 0..self.n {
            let d = self.degree(v);
            if d != 2 && d != 3 {
                return Err(GraphError::UnsuppressibleDegree { vertex: v, degree: d });
            }
        }

        let mut old_to_new = vec![None; self.n];
        let mut new_to_old = Vec::new();
        for v in 0..self.n {
            if self.degree(v) == 3 {
                old_to_new[v] = Some(new_to_old.len());
                new_to_old.push(v);
            }
        }

        let mut consumed = vec![false; self.m()];
        let mut edges = Vec::new();
        let mut chains = Vec::new();
        let mut interiors = Vec::new();

        // Walk each maximal chain starting from a trivalent endpoint, in
        // ascending order of the first edge id.
        for e in 0..self.m() {
            if consumed[e] {
                continue;
            }
            let (a, b) = self.edges[e];
            let start = if self.degree(a) == 3 {
                a
            } else if self.degree(b) == 3 {
                b
            } else {
                continue; // interior edge of a chain; reached from its end
            };
            let mut parts = Vec::new();
            let mut interior = Vec::new();
            let mut at = start;
            let mut edge = e;
            loop {
                consumed[edge] = true;
                let (ea, _) = self.edges[edge];
                parts.push(ChainPart { edge, reversed: at != ea });
                let next = self.other_end(edge, at);
                if self.degree(next) == 3 {
                    edges.push((
                        old_to_new[start].unwrap(),
                        old_to_new[next].unwrap(),
                    ));
                    chains.push(parts);
                    interiors.push(interior);
                    break;
                }
                interior.push(next);
                // the bivalent vertex's other incident edge
                let (_, cont) = self.adj[next]
                    .iter()
                    .copied()
                    .find(|&(_, f)| f != edge)
                    .expect("degree-2 vertex has a second edge");
                at = next;
                edge = cont;
            }
        }

        if let Some(stray) = consumed.iter().position(|&c| !c) {
            // only reachable when a whole component is bivalent
            return Err(GraphError::BivalentCircuit {
                vertex: self.edges[stray].0,
            });
        }

        let has_loop = edges.iter().any(|&(a, b)| a == b);
        let g = Multigraph::build(new_to_old.len(), edges, has_loop || self.loops_allowed)
            .expect("suppressed graph is valid");
        debug_assert!((0..g.n()).all(|v| g.degree(v) == 3));
        Ok((
            g,
            SuppressionMap {
                chains,
                interiors,
                vertex_to_old: new_to_old,
                old_n: self.n,
                old_m: self.m(),
            },
        ))
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(n={}, m={}, edges={:?})", self.n, self.m(), self.edges)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub is_cubic: bool,
    pub is_connected: bool,
    pub bridges: EdgeSet,
    pub girth: Extent,
    pub is_bipartite: bool,
}

/// One original edge inside a suppression chain. `reversed` is set when the
/// chain walks the edge from its stored head to its stored tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainPart {
    pub edge: EdgeId,
    pub reversed: bool,
}

/// Record of a [`Multigraph::suppress_bivalent`] call. Indexed by new edge
/// id; every original edge occurs in exactly one chain.
#[derive(Debug, Clone)]
pub struct SuppressionMap {
    chains: Vec<Vec<ChainPart>>,
    interiors: Vec<Vec<VertexId>>,
    vertex_to_old: Vec<VertexId>,
    old_n: usize,
    old_m: usize,
}

impl SuppressionMap {
    /// The ordered original edges replaced by new edge `e`, walked from the
    /// new edge's stored tail to its stored head.
    pub fn chain(&self, e: EdgeId) -> &[ChainPart] {
        &self.chains[e]
    }

    /// Suppressed interior vertices of new edge `e`, in walk order.
    pub fn interior(&self, e: EdgeId) -> &[VertexId] {
        &self.interiors[e]
    }

    pub fn new_edge_count(&self) -> usize {
        self.chains.len()
    }

    pub fn old_vertex(&self, new: VertexId) -> VertexId {
        self.vertex_to_old[new]
    }

    pub fn old_n(&self) -> usize {
        self.old_n
    }

    pub fn old_m(&self) -> usize {
        self.old_m
    }

    /// Map an original vertex to its new id, if it survived suppression.
    pub fn new_vertex(&self, old: VertexId) -> Option<VertexId> {
        self.vertex_to_old.iter().position(|&v| v == old)
    }

    /// The new edge whose chain contains original edge `old`, with the
    /// position inside that chain.
    pub fn covering_edge(&self, old: EdgeId) -> Option<(EdgeId, usize)> {
        for (e, chain) in self.chains.iter().enumerate() {
            if let Some(pos) = chain.iter().position(|p| p.edge == old) {
                return Some((e, pos));
            }
        }
        None
    }
}

/// A connected cubic multigraph. Bridges are found once at construction and
/// cached; nearly every invariant in this crate assumes bridgelessness, so
/// the check is always on hand.
#[derive(Debug, Clone)]
pub struct CubicGraph {
    graph: Multigraph,
    bridges: EdgeSet,
}

impl CubicGraph {
    pub fn new(graph: Multigraph) -> Result<Self, GraphError> {
        for v in 0..graph.n() {
            let d = graph.degree(v);
            if d != 3 {
                return Err(GraphError::NotCubic { vertex: v, degree: d });
            }
        }
        if !graph.is_connected() {
            return Err(GraphError::NotConnected);
        }
        let bridges = graph.bridges();
        Ok(CubicGraph { graph, bridges })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn bridges(&self) -> &EdgeSet {
        &self.bridges
    }

    pub fn is_bridgeless(&self) -> bool {
        self.bridges.is_empty()
    }

    pub fn into_inner(self) -> Multigraph {
        self.graph
    }
}

impl std::ops::Deref for CubicGraph {
    type Target = Multigraph;

    fn deref(&self) -> &Multigraph {
        &self.graph
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn k4() -> Multigraph {
        Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Multigraph::new(2, vec![(0, 2)]),
            Err(GraphError::EndpointOutOfRange { .. })
        ));
        assert!(matches!(
            Multigraph::new(2, vec![(1, 1)]),
            Err(GraphError::LoopNotAllowed { .. })
        ));
        assert!(Multigraph::with_loops(2, vec![(1, 1)]).is_ok());
    }

    #[test]
    fn boundary_of_singleton_is_degree() {
        let g = k4();
        for v in 0..4 {
            let s = VertexSet::from_indices(4, [v]);
            assert_eq!(g.boundary(&s).count(), g.degree(v));
        }
    }

    #[test]
    fn boundary_symmetric_and_trivial() {
        let g = k4();
        let s = VertexSet::from_indices(4, [0, 2]);
        assert_eq!(g.boundary(&s), g.boundary(&s.complement()));
        assert!(g.boundary(&g.vertex_set()).is_empty());
        assert!(g.boundary(&VertexSet::new(4)).is_empty());
    }

    #[test]
    fn petersen_two_factor_boundary_is_the_spoke_matching() {
        // outer 5-circuit against inner pentagram: the 5 spokes cross
        let g = named::petersen();
        let outer = VertexSet::from_indices(10, 0..5);
        let cut = g.boundary(&outer);
        assert_eq!(cut.count(), 5);
        for e in cut.iter() {
            let (a, b) = g.endpoints(e);
            assert_eq!(b, a + 5);
        }
    }

    #[test]
    fn structure_reports_on_fixtures() {
        let r = k4().structure_report();
        assert!(r.is_cubic && r.is_connected && r.bridges.is_empty());
        assert_eq!(r.girth, Extent::Finite(3));
        assert!(!r.is_bipartite);

        let r = named::k3_3().structure_report();
        assert!(r.is_cubic);
        assert_eq!(r.girth, Extent::Finite(4));
        assert!(r.is_bipartite);

        let r = named::petersen().structure_report();
        assert!(r.is_cubic && r.bridges.is_empty());
        assert_eq!(r.girth, Extent::Finite(5));
        assert!(!r.is_bipartite);
    }

    #[test]
    fn bridges_match_brute_force() {
        // brute-force oracle: an edge is a bridge iff deleting it disconnects
        // the component counts
        let mut graphs = vec![k4(), named::petersen().into_inner()];
        // a graph with a genuine bridge: two triangles joined by an edge
        graphs.push(
            Multigraph::new(
                6,
                vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)],
            )
            .unwrap(),
        );
        for g in graphs {
            let fast = g.bridges();
            for e in 0..g.m() {
                let (without, _) = g.remove_edges(&[e]);
                let disconnects = !without.is_connected();
                assert_eq!(fast.contains(e), disconnects, "edge {}", e);
            }
        }
    }

    #[test]
    fn girth_handles_multiedges() {
        let g = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(g.girth(), Extent::Finite(2));
        let g = Multigraph::with_loops(1, vec![(0, 0)]).unwrap();
        assert_eq!(g.girth(), Extent::Finite(1));
        let path = Multigraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.girth(), Extent::Unbounded);
    }

    #[test]
    fn suppress_single_subdivision_restores_k4_shape() {
        // K4 with edge (2,3) subdivided through a new vertex 4
        let g = Multigraph::new(
            5,
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (4, 3)],
        )
        .unwrap();
        let (s, map) = g.suppress_bivalent().unwrap();
        assert_eq!(s.n(), 4);
        assert_eq!(s.m(), 6);
        let merged = (0..map.new_edge_count())
            .find(|&e| map.chain(e).len() == 2)
            .unwrap();
        assert_eq!(map.interior(merged), &[4]);
        assert_eq!(map.chain(merged).len(), 2);
        // all other chains are single original edges
        assert_eq!(
            (0..map.new_edge_count()).filter(|&e| map.chain(e).len() == 1).count(),
            5
        );
    }

    #[test]
    fn suppress_petersen_minus_two_edges() {
        // Removing two independent edges makes 4 bivalent vertices;
        // suppressing them leaves a 6-vertex cubic multigraph.
        let g = named::petersen();
        // edge 0 = (0,1) on the outer cycle, edge 12 = (7,9) on the
        // pentagram; the four endpoints are pairwise nonadjacent afterwards
        let (reduced, _) = g.remove_edges(&[0, 12]);
        let (a, b) = g.endpoints(0);
        let (c, d) = g.endpoints(12);
        assert!([a, b, c, d].iter().collect::<std::collections::HashSet<_>>().len() == 4);
        let (s, map) = reduced.suppress_bivalent().unwrap();
        assert_eq!(s.n(), 6);
        assert_eq!(s.m(), 9);
        assert!((0..s.n()).all(|v| s.degree(v) == 3));
        // exactly four chains of length 2, one per suppressed vertex
        let long: Vec<_> = (0..map.new_edge_count())
            .filter(|&e| map.chain(e).len() > 1)
            .collect();
        assert_eq!(long.len(), 4);
        assert!(long.iter().all(|&e| map.interior(e).len() == 1));
    }

    #[test]
    fn suppress_rejects_bad_degrees_and_bivalent_circuits() {
        let path = Multigraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            path.suppress_bivalent(),
            Err(GraphError::UnsuppressibleDegree { degree: 1, .. })
        ));
        let square = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(matches!(
            square.suppress_bivalent(),
            Err(GraphError::BivalentCircuit { .. })
        ));
    }

    #[test]
    fn suppression_roundtrip_reproduces_input() {
        // re-subdividing each chain must reproduce the input graph up to
        // edge renaming
        let g = named::petersen();
        let (reduced, _) = g.remove_edges(&[0, 12]);
        let (s, map) = reduced.suppress_bivalent().unwrap();
        let mut rebuilt: Vec<(usize, usize)> = Vec::new();
        for e in 0..s.m() {
            let (na, _) = s.endpoints(e);
            let mut at = map.old_vertex(na);
            for part in map.chain(e) {
                let (pa, pb) = reduced.endpoints(part.edge);
                let (from, to) = if part.reversed { (pb, pa) } else { (pa, pb) };
                assert_eq!(from, at, "chain is connected in walk order");
                rebuilt.push((from.min(to), to.max(from)));
                at = to;
            }
            assert_eq!(at, map.old_vertex(s.endpoints(e).1));
        }
        let mut expect: Vec<(usize, usize)> = reduced
            .edges()
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        rebuilt.sort_unstable();
        expect.sort_unstable();
        assert_eq!(rebuilt, expect);
    }

    #[test]
    fn cubic_graph_validation() {
        assert!(CubicGraph::new(k4()).is_ok());
        let path = Multigraph::new(2, vec![(0, 1)]).unwrap();
        assert!(matches!(
            CubicGraph::new(path),
            Err(GraphError::NotCubic { .. })
        ));
        let two_k4 = Multigraph::new(
            8,
            vec![
                (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),
            ],
        )
        .unwrap();
        assert!(matches!(CubicGraph::new(two_k4), Err(GraphError::NotConnected)));
    }

    #[test]
    fn extent_ordering_and_display() {
        assert!(Extent::Unbounded > Extent::Finite(1000));
        assert!(Extent::Finite(5).at_least(5));
        assert!(Extent::Finite(0).at_least(-3));
        assert!(Extent::Unbounded.at_least(i64::MAX));
        assert_eq!(Extent::Unbounded.to_string(), "inf");
        assert_eq!(Extent::Finite(6).to_string(), "6");
    }
}
