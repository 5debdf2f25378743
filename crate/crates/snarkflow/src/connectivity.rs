//! Edge cuts, unit-capacity max-flow/min-cut, and cyclic edge-connectivity.

use crate::bitset::{EdgeSet, VertexSet};
use crate::graph::{CubicGraph, Extent, Multigraph, VertexId};
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CutError {
    #[error("terminal sets must be non-empty")]
    EmptyTerminal,
    #[error("terminal sets must be disjoint")]
    OverlappingTerminals,
}

/// A two-sided edge cut: `edges` is exactly the boundary of `side`, and
/// both `side` and its complement are non-empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutWitness {
    pub side: VertexSet,
    pub edges: EdgeSet,
}

impl CutWitness {
    pub fn size(&self) -> usize {
        self.edges.count()
    }
}

/// Minimum-cardinality edge set separating `a` from `b`, found by
/// contracting each terminal set and running unit-capacity max-flow.
///
/// The witness side is the set of vertices still reachable from `a` in the
/// final residual graph, so it is the unique source-minimal minimum cut and
/// deterministic.
pub fn min_edge_cut(
    g: &Multigraph,
    a: &VertexSet,
    b: &VertexSet,
) -> Result<CutWitness, CutError> {
    if a.is_empty() || b.is_empty() {
        return Err(CutError::EmptyTerminal);
    }
    if !a.is_disjoint(b) {
        return Err(CutError::OverlappingTerminals);
    }

    // contract: a -> node 0, b -> node 1, everything else keeps its own node
    let mut node = vec![usize::MAX; g.n()];
    let mut next = 2;
    for v in 0..g.n() {
        node[v] = if a.contains(v) {
            0
        } else if b.contains(v) {
            1
        } else {
            let id = next;
            next += 1;
            id
        };
    }

    // arcs in pairs: arc 2i and 2i+1 are mutual reverses, each capacity 1
    // (models one undirected unit edge)
    let mut arc_to = Vec::new();
    let mut head: Vec<Vec<usize>> = vec![Vec::new(); next];
    for &(x, y) in g.edges() {
        let (u, v) = (node[x], node[y]);
        if u == v {
            continue;
        }
        head[u].push(arc_to.len());
        arc_to.push(v);
        head[v].push(arc_to.len());
        arc_to.push(u);
    }
    let mut residual = vec![1i32; arc_to.len()];

    // Edmonds-Karp with unit capacities
    let mut total = 0usize;
    loop {
        let mut parent_arc = vec![usize::MAX; next];
        let mut seen = vec![false; next];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        'bfs: while let Some(u) = queue.pop_front() {
            for &arc in &head[u] {
                if residual[arc] == 0 {
                    continue;
                }
                let v = arc_to[arc];
                if !seen[v] {
                    seen[v] = true;
                    parent_arc[v] = arc;
                    if v == 1 {
                        break 'bfs;
                    }
                    queue.push_back(v);
                }
            }
        }
        if !seen[1] {
            break;
        }
        let mut v = 1;
        while v != 0 {
            let arc = parent_arc[v];
            residual[arc] -= 1;
            residual[arc ^ 1] += 1;
            v = arc_to[arc ^ 1];
        }
        total += 1;
    }

    // witness: residual-reachable side from the source
    let mut reach = vec![false; next];
    reach[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for &arc in &head[u] {
            if residual[arc] > 0 && !reach[arc_to[arc]] {
                reach[arc_to[arc]] = true;
                queue.push_back(arc_to[arc]);
            }
        }
    }

    let side = VertexSet::from_indices(g.n(), (0..g.n()).filter(|&v| reach[node[v]]));
    let edges = g.boundary(&side);
    debug_assert_eq!(edges.count(), total);
    Ok(CutWitness { side, edges })
}

/// Outcome of a cyclic edge-connectivity computation.
#[derive(Debug, Clone)]
pub struct CyclicCut {
    pub value: Extent,
    /// Present iff the value is finite. Removing `witness.edges`
    /// disconnects the graph and both sides contain a circuit.
    pub witness: Option<CutWitness>,
}

/// Minimum size of an edge cut whose removal leaves at least two components
/// that each contain a circuit.
///
/// Computed as the minimum, over pairs of vertex-disjoint chordless
/// circuits, of the minimum cut separating the pair: a smallest circuit on
/// either side of an optimal cut is chordless, so restricting to chordless
/// circuits loses nothing. Graphs with no two vertex-disjoint circuits get
/// the unbounded sentinel.
pub fn cyclic_edge_connectivity(g: &CubicGraph) -> CyclicCut {
    let circuits = chordless_circuits(g.graph());
    let mut best: Option<CutWitness> = None;
    for i in 0..circuits.len() {
        for j in i + 1..circuits.len() {
            if !circuits[i].is_disjoint(&circuits[j]) {
                continue;
            }
            let cut = min_edge_cut(g.graph(), &circuits[i], &circuits[j])
                .expect("circuit vertex sets are non-empty and disjoint");
            if best.as_ref().is_none_or(|b| cut.size() < b.size()) {
                best = Some(cut);
            }
        }
    }
    match best {
        Some(w) => CyclicCut {
            value: Extent::Finite(w.size()),
            witness: Some(w),
        },
        None => CyclicCut {
            value: Extent::Unbounded,
            witness: None,
        },
    }
}

/// Vertex sets of all chordless circuits (loops and parallel pairs count,
/// as circuits of length 1 and 2). Each circuit is reported once.
pub(crate) fn chordless_circuits(g: &Multigraph) -> Vec<VertexSet> {
    let n = g.n();
    let mut out = Vec::new();

    // length 1 and 2: loops and parallel pairs
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if a == b {
            out.push(VertexSet::from_indices(n, [a]));
            continue;
        }
        for &(c, d) in g.edges().iter().skip(e + 1) {
            if (c.min(d), c.max(d)) == (a.min(b), a.max(b)) {
                out.push(VertexSet::from_indices(n, [a, b]));
                break;
            }
        }
    }

    let adjacent = |u: VertexId, v: VertexId| g.incident(u).iter().any(|&(w, _)| w == v);

    // length >= 3 in the underlying simple graph: grow paths from each root
    // r (the minimum vertex of the circuit), keeping every new vertex
    // non-adjacent to all interior path vertices
    let mut path: Vec<VertexId> = Vec::new();
    fn grow(
        g: &Multigraph,
        adjacent: &dyn Fn(VertexId, VertexId) -> bool,
        path: &mut Vec<VertexId>,
        out: &mut Vec<VertexSet>,
    ) {
        let r = path[0];
        let last = *path.last().unwrap();
        let mut nbrs: Vec<VertexId> = g.incident(last).iter().map(|&(u, _)| u).collect();
        nbrs.sort_unstable();
        nbrs.dedup();
        for u in nbrs {
            if u <= r || path.contains(&u) {
                continue;
            }
            // chordlessness: u may touch the path only at its endpoint
            // (and at the root when closing)
            let interior_end = path.len().saturating_sub(1);
            if interior_end > 1 && path[1..interior_end].iter().any(|&p| adjacent(u, p)) {
                continue;
            }
            if path.len() >= 2 && adjacent(u, r) {
                if path[1] < u {
                    // record once per direction: second vertex below last
                    out.push(VertexSet::from_indices(
                        g.n(),
                        path.iter().copied().chain([u]),
                    ));
                }
                continue;
            }
            path.push(u);
            grow(g, adjacent, path, out);
            path.pop();
        }
    }
    for r in 0..n {
        path.clear();
        path.push(r);
        grow(g, &adjacent, &mut path, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::oracle;

    #[test]
    fn prism_triangle_cut_is_the_rungs() {
        let g = named::prism(3).unwrap();
        let top = VertexSet::from_indices(6, 0..3);
        let bottom = VertexSet::from_indices(6, 3..6);
        let cut = min_edge_cut(g.graph(), &top, &bottom).unwrap();
        assert_eq!(cut.size(), 3);
        assert_eq!(cut.size(), oracle::min_cut_brute(g.graph(), &top, &bottom));
        assert!(top.is_subset(&cut.side));
        assert_eq!(g.boundary(&cut.side), cut.edges);
    }

    #[test]
    fn petersen_pentagon_to_pentagram_cut_is_five() {
        let g = named::petersen();
        let outer = VertexSet::from_indices(10, 0..5);
        let inner = VertexSet::from_indices(10, 5..10);
        let cut = min_edge_cut(g.graph(), &outer, &inner).unwrap();
        assert_eq!(cut.size(), 5);
        assert_eq!(cut.size(), oracle::min_cut_brute(g.graph(), &outer, &inner));
    }

    #[test]
    fn k4_single_vertices() {
        let g = named::k4();
        let a = VertexSet::from_indices(4, [0]);
        let b = VertexSet::from_indices(4, [1]);
        assert_eq!(min_edge_cut(g.graph(), &a, &b).unwrap().size(), 3);
    }

    #[test]
    fn terminal_validation() {
        let g = named::k4();
        let empty = VertexSet::new(4);
        let a = VertexSet::from_indices(4, [0]);
        assert_eq!(
            min_edge_cut(g.graph(), &empty, &a),
            Err(CutError::EmptyTerminal)
        );
        assert_eq!(
            min_edge_cut(g.graph(), &a, &a),
            Err(CutError::OverlappingTerminals)
        );
    }

    #[test]
    fn min_cut_matches_brute_force_on_corpus() {
        for (name, g) in named::standard_corpus() {
            if g.n() > 12 {
                continue;
            }
            // several deterministic terminal pairs
            for (x, y) in [(0usize, 1usize), (0, g.n() - 1), (1, g.n() / 2)] {
                if x == y {
                    continue;
                }
                let a = VertexSet::from_indices(g.n(), [x]);
                let b = VertexSet::from_indices(g.n(), [y]);
                let fast = min_edge_cut(g.graph(), &a, &b).unwrap().size();
                let slow = oracle::min_cut_brute(g.graph(), &a, &b);
                assert_eq!(fast, slow, "{} terminals {}-{}", name, x, y);
            }
        }
    }

    #[test]
    fn chordless_circuit_counts() {
        // K4: four triangles, and every 4-circuit has a chord
        assert_eq!(chordless_circuits(named::k4().graph()).len(), 4);
        // parallel pair
        let twin = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(chordless_circuits(&twin).len(), 1);
        // Petersen's pentagons: exactly twelve chordless 5-circuits
        let circuits = chordless_circuits(named::petersen().graph());
        let pentagons = circuits.iter().filter(|c| c.count() == 5).count();
        assert_eq!(pentagons, 12);
    }

    #[test]
    fn cyclic_connectivity_values() {
        // prism: the 3 rungs; confirmed against the exhaustive oracle
        let prism = named::prism(3).unwrap();
        let cc = cyclic_edge_connectivity(&prism);
        assert_eq!(cc.value, Extent::Finite(3));
        assert_eq!(oracle::cycle_separating_cut_brute(prism.graph()), Some(3));

        let petersen = named::petersen();
        let cc = cyclic_edge_connectivity(&petersen);
        assert_eq!(cc.value, Extent::Finite(5));
        assert_eq!(
            oracle::cycle_separating_cut_brute(petersen.graph()),
            Some(5)
        );

        // K4 cannot host two vertex-disjoint circuits
        let cc = cyclic_edge_connectivity(&named::k4());
        assert_eq!(cc.value, Extent::Unbounded);
        assert_eq!(oracle::cycle_separating_cut_brute(named::k4().graph()), None);

        // K3,3 has 6 vertices and girth 4: still no two disjoint circuits
        assert_eq!(
            cyclic_edge_connectivity(&named::k3_3()).value,
            Extent::Unbounded
        );
    }

    #[test]
    fn cyclic_connectivity_matches_oracle_on_corpus() {
        for (name, g) in named::standard_corpus() {
            if g.n() > 12 {
                continue;
            }
            let fast = cyclic_edge_connectivity(&g);
            let slow = oracle::cycle_separating_cut_brute(g.graph());
            match (fast.value, slow) {
                (Extent::Finite(a), Some(b)) => assert_eq!(a, b, "{}", name),
                (Extent::Unbounded, None) => {}
                other => panic!("{}: mismatch {:?}", name, other),
            }
        }
    }

    #[test]
    fn witness_separates_with_circuits_on_both_sides() {
        for (name, g) in named::standard_corpus() {
            let cc = cyclic_edge_connectivity(&g);
            let Some(w) = cc.witness else { continue };
            assert_eq!(g.boundary(&w.side), w.edges, "{}", name);
            // a side with as many internal edges as vertices contains a
            // circuit (cubic graphs: check both sides)
            for side in [w.side.clone(), w.side.complement()] {
                let verts = side.count();
                let internal = g
                    .edges()
                    .iter()
                    .filter(|&&(a, b)| side.contains(a) && side.contains(b))
                    .count();
                assert!(internal >= verts, "{}: side without circuit", name);
            }
            // value <= girth whenever finite
            if let (Extent::Finite(v), Extent::Finite(girth)) = (cc.value, g.girth()) {
                assert!(v <= girth, "{}: cc {} > girth {}", name, v, girth);
            }
        }
    }
}
