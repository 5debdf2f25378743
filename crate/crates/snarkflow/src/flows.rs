//! Integer k-flows: representation, verification, the flow-sum operator,
//! canonical 4-flows from proper 3-edge-colorings, exhaustive nowhere-zero
//! flow search, and transport of flows through suppression maps.
//!
//! A flow is stored in the direction-plus-nonnegative-value form: an
//! orientation (head per edge) and a value in `0..k` per edge. The search
//! works internally with signed values on the reference orientation and
//! converts on output by flipping negative edges.

use crate::bitset::EdgeSet;
use crate::coloring::ProperEdgeColoring;
use crate::graph::{CubicGraph, EdgeId, Multigraph, SuppressionMap, VertexId};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FlowError {
    #[error("flow is defined on {found} edges but the graph has {expected}")]
    EdgeCountMismatch { found: usize, expected: usize },
    #[error("edge {edge}: head {head} is not an endpoint")]
    BadHead { edge: EdgeId, head: VertexId },
    #[error("edge {edge}: value {value} is out of range for a {k}-flow")]
    ValueOutOfRange { edge: EdgeId, value: i64, k: u32 },
    #[error("flows live on graphs of different sizes ({a} vs {b} edges)")]
    MismatchedGraphs { a: usize, b: usize },
    #[error("coloring must use palette {{1,2,3}}")]
    ExtendedColoring,
    #[error("flow violates conservation; first bad vertex {vertex}")]
    NotConserved { vertex: VertexId },
    #[error("suppression map covers {expected} edges, flow has {found}")]
    MapMismatch { expected: usize, found: usize },
}

/// An edge orientation: the head endpoint per edge. For a loop both ends
/// coincide and the orientation carries no information.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    head: Vec<VertexId>,
}

impl Orientation {
    pub fn new(g: &Multigraph, head: Vec<VertexId>) -> Result<Self, FlowError> {
        if head.len() != g.m() {
            return Err(FlowError::EdgeCountMismatch {
                found: head.len(),
                expected: g.m(),
            });
        }
        for (e, &h) in head.iter().enumerate() {
            let (a, b) = g.endpoints(e);
            if h != a && h != b {
                return Err(FlowError::BadHead { edge: e, head: h });
            }
        }
        Ok(Orientation { head })
    }

    /// Reference orientation: each edge points from its stored tail to its
    /// stored head.
    pub fn reference(g: &Multigraph) -> Self {
        Orientation {
            head: g.edges().iter().map(|&(_, b)| b).collect(),
        }
    }

    pub fn head(&self, e: EdgeId) -> VertexId {
        self.head[e]
    }

    pub fn tail(&self, g: &Multigraph, e: EdgeId) -> VertexId {
        let (a, b) = g.endpoints(e);
        if self.head[e] == b {
            a
        } else {
            b
        }
    }
}

/// An integer k-flow: orientation plus a value in `0..k` per edge,
/// conserved at every vertex. `nowhere_zero` holds when the support is the
/// whole edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerKFlow {
    pub k: u32,
    orientation: Orientation,
    values: Vec<u32>,
}

impl IntegerKFlow {
    pub fn new(
        g: &Multigraph,
        k: u32,
        orientation: Orientation,
        values: Vec<u32>,
    ) -> Result<Self, FlowError> {
        if values.len() != g.m() {
            return Err(FlowError::EdgeCountMismatch {
                found: values.len(),
                expected: g.m(),
            });
        }
        for (e, &v) in values.iter().enumerate() {
            if v >= k {
                return Err(FlowError::ValueOutOfRange { edge: e, value: v as i64, k });
            }
        }
        let flow = IntegerKFlow { k, orientation, values };
        if let Some(vertex) = flow.first_violation(g) {
            return Err(FlowError::NotConserved { vertex });
        }
        Ok(flow)
    }

    pub fn value(&self, e: EdgeId) -> u32 {
        self.values[e]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn head(&self, e: EdgeId) -> VertexId {
        self.orientation.head(e)
    }

    pub fn support(&self, m: usize) -> EdgeSet {
        EdgeSet::from_indices(
            m,
            self.values
                .iter()
                .enumerate()
                .filter(|&(_, &v)| v > 0)
                .map(|(e, _)| e),
        )
    }

    pub fn is_nowhere_zero(&self) -> bool {
        self.values.iter().all(|&v| v > 0)
    }

    /// Net outflow at each vertex; loops contribute nothing.
    fn net(&self, g: &Multigraph) -> Vec<i64> {
        let mut net = vec![0i64; g.n()];
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if a == b {
                continue;
            }
            let v = self.values[e] as i64;
            let head = self.orientation.head(e);
            let tail = if head == b { a } else { b };
            net[tail] += v;
            net[head] -= v;
        }
        net
    }

    fn first_violation(&self, g: &Multigraph) -> Option<VertexId> {
        self.net(g).iter().position(|&x| x != 0)
    }

    /// Reinterpret with a larger bound; values are unchanged.
    pub fn relax(&self, k: u32) -> IntegerKFlow {
        assert!(k >= self.k);
        IntegerKFlow {
            k,
            orientation: self.orientation.clone(),
            values: self.values.clone(),
        }
    }
}

/// Total verdict of flow verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowVerdict {
    pub conserved: bool,
    /// Vertices where conservation fails, ascending.
    pub violations: Vec<VertexId>,
    pub nowhere_zero: bool,
}

impl FlowVerdict {
    pub fn ok(&self) -> bool {
        self.conserved
    }
}

/// Check conservation at every vertex and report the support status.
pub fn verify_flow(g: &Multigraph, flow: &IntegerKFlow) -> FlowVerdict {
    let net = flow.net(g);
    let violations: Vec<VertexId> = net
        .iter()
        .enumerate()
        .filter(|&(_, &x)| x != 0)
        .map(|(v, _)| v)
        .collect();
    FlowVerdict {
        conserved: violations.is_empty(),
        violations,
        nowhere_zero: flow.is_nowhere_zero(),
    }
}

/// The flow sum: per edge, equal directions add values; opposite directions
/// leave the absolute difference flowing in the direction of the larger
/// summand (ties keep the first flow's direction). The result of summing a
/// k1-flow and a k2-flow is a (k1 + k2 - 1)-flow.
pub fn flow_sum(
    g: &Multigraph,
    f1: &IntegerKFlow,
    f2: &IntegerKFlow,
) -> Result<IntegerKFlow, FlowError> {
    if f1.values.len() != f2.values.len() || f1.values.len() != g.m() {
        return Err(FlowError::MismatchedGraphs {
            a: f1.values.len(),
            b: f2.values.len(),
        });
    }
    let k = f1.k + f2.k - 1;
    let mut head = Vec::with_capacity(g.m());
    let mut values = Vec::with_capacity(g.m());
    for e in 0..g.m() {
        let (v1, v2) = (f1.values[e], f2.values[e]);
        let (h1, h2) = (f1.head(e), f2.head(e));
        if h1 == h2 {
            head.push(h1);
            values.push(v1 + v2);
        } else if v1 >= v2 {
            head.push(h1);
            values.push(v1 - v2);
        } else {
            head.push(h2);
            values.push(v2 - v1);
        }
    }
    IntegerKFlow::new(g, k, Orientation { head }, values)
}

/// The canonical nowhere-zero 4-flow induced by a proper 3-edge-coloring:
/// the color-1/2 edges form disjoint even circuits carrying a unit flow,
/// the color-2/3 edges carry a doubled one, and the result is their sum.
/// Color-1 edges end up with value 1, color-3 edges with value 2, and
/// color-2 edges with 1 or 3.
///
/// Circuit orientations are a free choice; here each circuit is traversed
/// from its lowest vertex along its lowest incident circuit edge, with
/// `flips` optionally reversing individual circuits (bit i flips the i-th
/// circuit in discovery order, color-1/2 circuits first).
pub fn canonical_four_flow(
    g: &CubicGraph,
    c: &ProperEdgeColoring,
) -> Result<IntegerKFlow, FlowError> {
    canonical_four_flow_with_flips(g, c, 0)
}

pub fn canonical_four_flow_with_flips(
    g: &CubicGraph,
    c: &ProperEdgeColoring,
    flips: u64,
) -> Result<IntegerKFlow, FlowError> {
    if c.is_extended() {
        return Err(FlowError::ExtendedColoring);
    }
    let graph = g.graph();
    let mut circuit_index = 0;
    let f12 = pair_cycle_flow(graph, c, (1, 2), 1, flips, &mut circuit_index)?;
    let f23 = pair_cycle_flow(graph, c, (2, 3), 2, flips, &mut circuit_index)?;
    flow_sum(graph, &f12, &f23)
}

/// Number of circuits in the two color-pair subgraphs, for sizing
/// orientation retries.
pub fn canonical_circuit_count(g: &CubicGraph, c: &ProperEdgeColoring) -> usize {
    let graph = g.graph();
    let mut count = 0;
    for pair in [(1u8, 2u8), (2, 3)] {
        let member: Vec<bool> = (0..graph.m())
            .map(|e| c.color(e) == pair.0 || c.color(e) == pair.1)
            .collect();
        let mut seen = vec![false; graph.n()];
        for start in 0..graph.n() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            count += 1;
            let mut at = start;
            let mut via = usize::MAX;
            loop {
                let Some(&(u, e)) = graph
                    .incident(at)
                    .iter()
                    .find(|&&(_, e)| member[e] && e != via)
                else {
                    break;
                };
                if u == start {
                    break;
                }
                seen[u] = true;
                via = e;
                at = u;
            }
        }
    }
    count
}

/// Unit flow (value `unit`) on the disjoint circuits formed by two color
/// classes of a proper 3-edge-coloring of a cubic graph.
fn pair_cycle_flow(
    g: &Multigraph,
    c: &ProperEdgeColoring,
    pair: (u8, u8),
    unit: u32,
    flips: u64,
    circuit_index: &mut usize,
) -> Result<IntegerKFlow, FlowError> {
    let member: Vec<bool> = (0..g.m())
        .map(|e| c.color(e) == pair.0 || c.color(e) == pair.1)
        .collect();
    let mut head: Vec<VertexId> = g.edges().iter().map(|&(_, b)| b).collect();
    let mut values = vec![0u32; g.m()];
    let mut visited = vec![false; g.m()];

    // every vertex of a cubic graph lies on exactly one circuit of the pair
    // subgraph; walk each circuit from its lowest vertex
    for start in 0..g.n() {
        let first = g
            .incident(start)
            .iter()
            .copied()
            .filter(|&(_, e)| member[e] && !visited[e])
            .min_by_key(|&(_, e)| e);
        let Some((_, first_edge)) = first else { continue };
        // skip if this circuit was already walked from an earlier vertex
        if visited[first_edge] {
            continue;
        }
        let flip = flips >> *circuit_index & 1 == 1;
        *circuit_index += 1;
        let mut at = start;
        let mut edge = first_edge;
        loop {
            visited[edge] = true;
            values[edge] = unit;
            let next = g.other_end(edge, at);
            head[edge] = if flip { at } else { next };
            at = next;
            if at == start {
                break;
            }
            let cont = g
                .incident(at)
                .iter()
                .copied()
                .find(|&(_, e)| member[e] && e != edge)
                .expect("pair subgraph is 2-regular");
            edge = cont.1;
        }
    }
    IntegerKFlow::new(g, unit + 1, Orientation { head }, values)
}

/// Outcome of an exhaustive nowhere-zero flow search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(IntegerKFlow),
    /// The search space was exhausted: no nowhere-zero k-flow exists.
    Absent,
    /// The node budget ran out before the space was exhausted.
    Indeterminate,
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&IntegerKFlow> {
        match self {
            SearchOutcome::Found(f) => Some(f),
            _ => None,
        }
    }
}

/// Exhaustive search for a nowhere-zero k-flow.
///
/// A bridge forces absence, so bridged inputs short-circuit. Otherwise
/// cotree edges of a spanning forest take signed values in `±{1..k-1}`
/// (reference orientation) and unit propagation forces the rest: whenever a
/// vertex has one undecided incident edge, conservation fixes it, pruning
/// the subtree on any zero or out-of-range value. The budget bounds decision
/// nodes; exceeding it yields `Indeterminate`, distinct from `Absent`.
pub fn search_nowhere_zero_flow(g: &Multigraph, k: u32, budget: u64) -> SearchOutcome {
    assert!(k >= 2, "flows need k >= 2");
    if g.m() == 0 {
        return SearchOutcome::Found(IntegerKFlow {
            k,
            orientation: Orientation::reference(g),
            values: Vec::new(),
        });
    }
    if !g.bridges().is_empty() {
        return SearchOutcome::Absent;
    }

    // spanning forest by BFS; everything else is a cotree decision edge
    let mut in_tree = vec![false; g.m()];
    let mut seen = vec![false; g.n()];
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(u, e) in g.incident(v) {
                if !seen[u] {
                    seen[u] = true;
                    in_tree[e] = true;
                    queue.push_back(u);
                }
            }
        }
    }
    let decisions: Vec<EdgeId> = (0..g.m())
        .filter(|&e| !in_tree[e] && !g.is_loop(e))
        .collect();

    let max = (k - 1) as i64;
    let mut value: Vec<Option<i64>> = vec![None; g.m()];
    // loops: value free, fix at 1
    for e in 0..g.m() {
        if g.is_loop(e) {
            value[e] = Some(1);
        }
    }

    let mut nodes = 0u64;
    let result = assign(g, &decisions, 0, &mut value, max, budget, &mut nodes);
    match result {
        AssignOutcome::Done => {
            let mut head = Vec::with_capacity(g.m());
            let mut values = Vec::with_capacity(g.m());
            for (e, &(a, b)) in g.edges().iter().enumerate() {
                let v = value[e].expect("all edges decided");
                if v >= 0 {
                    head.push(b);
                    values.push(v as u32);
                } else {
                    head.push(a);
                    values.push((-v) as u32);
                }
            }
            let flow = IntegerKFlow::new(g, k, Orientation { head }, values)
                .expect("search output is a valid flow");
            SearchOutcome::Found(flow)
        }
        AssignOutcome::Exhausted => SearchOutcome::Absent,
        AssignOutcome::OverBudget => SearchOutcome::Indeterminate,
    }
}

enum AssignOutcome {
    Done,
    Exhausted,
    OverBudget,
}

fn assign(
    g: &Multigraph,
    decisions: &[EdgeId],
    next: usize,
    value: &mut Vec<Option<i64>>,
    max: i64,
    budget: u64,
    nodes: &mut u64,
) -> AssignOutcome {
    // propagate forced edges before deciding anything
    let mut forced: Vec<EdgeId> = Vec::new();
    loop {
        let mut progressed = false;
        for v in 0..g.n() {
            let mut undecided = None;
            let mut count = 0;
            let mut net = 0i64;
            for &(u, e) in g.incident(v) {
                if u == v {
                    continue; // loops conserve trivially
                }
                match value[e] {
                    Some(x) => {
                        let signed = if g.endpoints(e).0 == v { x } else { -x };
                        net += signed;
                    }
                    None => {
                        undecided = Some(e);
                        count += 1;
                    }
                }
            }
            match count {
                0 => {
                    if net != 0 {
                        for e in forced {
                            value[e] = None;
                        }
                        return AssignOutcome::Exhausted;
                    }
                }
                1 => {
                    let e = undecided.unwrap();
                    // out-value at v must cancel net
                    let x = if g.endpoints(e).0 == v { -net } else { net };
                    if x == 0 || x.abs() > max {
                        for e in forced {
                            value[e] = None;
                        }
                        return AssignOutcome::Exhausted;
                    }
                    value[e] = Some(x);
                    forced.push(e);
                    progressed = true;
                }
                _ => {}
            }
        }
        if !progressed {
            break;
        }
    }

    let undo = |value: &mut Vec<Option<i64>>, forced: &[EdgeId]| {
        for &e in forced {
            value[e] = None;
        }
    };

    // find the next undecided decision edge
    let mut i = next;
    while i < decisions.len() && value[decisions[i]].is_some() {
        i += 1;
    }
    if i == decisions.len() {
        if value.iter().all(|v| v.is_some()) {
            return AssignOutcome::Done;
        }
        // remaining undecided edges form zero-boundary cycles that
        // propagation cannot see; they are tree edges of some component,
        // impossible once all cotree edges are set
        unreachable!("tree edges are always forced once cotree edges are set");
    }

    let e = decisions[i];
    for mag in 1..=max {
        for sign in [1i64, -1] {
            *nodes += 1;
            if *nodes > budget {
                undo(value, &forced);
                return AssignOutcome::OverBudget;
            }
            value[e] = Some(sign * mag);
            match assign(g, decisions, i + 1, value, max, budget, nodes) {
                AssignOutcome::Done => return AssignOutcome::Done,
                AssignOutcome::OverBudget => {
                    value[e] = None;
                    undo(value, &forced);
                    return AssignOutcome::OverBudget;
                }
                AssignOutcome::Exhausted => {
                    value[e] = None;
                }
            }
        }
    }
    undo(value, &forced);
    AssignOutcome::Exhausted
}

/// Transport a flow on a suppressed graph back to the suppression input:
/// every edge of a chain inherits the replacing edge's value, directed
/// consistently along the chain, so conservation holds at the reinserted
/// bivalent vertices.
pub fn lift_flow(
    input: &Multigraph,
    suppressed: &Multigraph,
    smap: &SuppressionMap,
    flow: &IntegerKFlow,
) -> Result<IntegerKFlow, FlowError> {
    if flow.values().len() != smap.new_edge_count() || suppressed.m() != smap.new_edge_count() {
        return Err(FlowError::MapMismatch {
            expected: smap.new_edge_count(),
            found: flow.values().len(),
        });
    }
    let mut head = vec![usize::MAX; input.m()];
    let mut values = vec![0u32; input.m()];
    for e in 0..smap.new_edge_count() {
        // each chain is stored walking from the new edge's tail to its head;
        // the flow runs along that walk iff its head is the stored head
        let forward = flow.head(e) == suppressed.endpoints(e).1;
        for part in smap.chain(e) {
            let (a, b) = input.endpoints(part.edge);
            // walk exit endpoint of this part
            let walk_end = if part.reversed { a } else { b };
            let walk_start = if part.reversed { b } else { a };
            head[part.edge] = if forward { walk_end } else { walk_start };
            values[part.edge] = flow.value(e);
        }
    }
    if head.iter().any(|&h| h == usize::MAX) {
        return Err(FlowError::MapMismatch {
            expected: input.m(),
            found: head.iter().filter(|&&h| h != usize::MAX).count(),
        });
    }
    IntegerKFlow::new(input, flow.k, Orientation { head }, values)
}

/// Extend a flow on an edge-subgraph to the host graph: mapped edges keep
/// value and direction, missing edges carry value 0 on the reference
/// orientation.
pub fn embed_flow(
    host: &Multigraph,
    sub: &Multigraph,
    sub_to_host: &[EdgeId],
    flow: &IntegerKFlow,
) -> Result<IntegerKFlow, FlowError> {
    if sub_to_host.len() != sub.m() || flow.values().len() != sub.m() {
        return Err(FlowError::MapMismatch {
            expected: sub.m(),
            found: flow.values().len(),
        });
    }
    let mut head: Vec<VertexId> = host.edges().iter().map(|&(_, b)| b).collect();
    let mut values = vec![0u32; host.m()];
    for e in 0..sub.m() {
        let h = sub_to_host[e];
        head[h] = flow.head(e);
        values[h] = flow.value(e);
    }
    IntegerKFlow::new(host, flow.k, Orientation { head }, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;
    use crate::oracle;

    /// directed 4-circuit with a chord-free layout: 0->1->2->3->0
    fn circuit4() -> (Multigraph, IntegerKFlow) {
        let g = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let flow = IntegerKFlow::new(
            &g,
            2,
            Orientation::new(&g, vec![1, 2, 3, 0]).unwrap(),
            vec![1, 1, 1, 1],
        )
        .unwrap();
        (g, flow)
    }

    #[test]
    fn verify_accepts_directed_circuit() {
        let (g, flow) = circuit4();
        let verdict = verify_flow(&g, &flow);
        assert!(verdict.ok());
        assert!(verdict.nowhere_zero);
    }

    #[test]
    fn verify_flags_both_ends_of_a_bad_edge() {
        let (g, _) = circuit4();
        // constructor refuses non-conserved flows, so bypass it for the test
        let flow = IntegerKFlow {
            k: 3,
            orientation: Orientation::new(&g, vec![1, 2, 3, 0]).unwrap(),
            values: vec![2, 1, 1, 1],
        };
        let verdict = verify_flow(&g, &flow);
        assert!(!verdict.ok());
        assert_eq!(verdict.violations, vec![0, 1]);
    }

    #[test]
    fn flow_sum_definitional_cases() {
        let (g, f1) = circuit4();
        // same direction: values add
        let f2 = IntegerKFlow::new(
            &g,
            3,
            Orientation::new(&g, vec![1, 2, 3, 0]).unwrap(),
            vec![2, 2, 2, 2],
        )
        .unwrap();
        let sum = flow_sum(&g, &f1, &f2).unwrap();
        assert_eq!(sum.k, 4);
        for e in 0..4 {
            assert_eq!(sum.value(e), 3);
            assert_eq!(sum.head(e), f1.head(e));
        }
        assert!(verify_flow(&g, &sum).ok());

        // opposite directions: absolute difference, direction of the larger
        let back3 = IntegerKFlow::new(
            &g,
            4,
            Orientation::new(&g, vec![0, 1, 2, 3]).unwrap(),
            vec![3, 3, 3, 3],
        )
        .unwrap();
        let diff = flow_sum(&g, &f1, &back3).unwrap();
        assert_eq!(diff.k, 5);
        for e in 0..4 {
            assert_eq!(diff.value(e), 2, "edge {}", e);
            assert_eq!(diff.head(e), back3.head(e), "edge {}", e);
        }
        assert!(verify_flow(&g, &diff).ok());

        // exact cancellation empties the support
        let back1 = IntegerKFlow::new(
            &g,
            2,
            Orientation::new(&g, vec![0, 1, 2, 3]).unwrap(),
            vec![1, 1, 1, 1],
        )
        .unwrap();
        let cancelled = flow_sum(&g, &f1, &back1).unwrap();
        assert_eq!(cancelled.values(), &[0, 0, 0, 0]);
        assert!(!cancelled.is_nowhere_zero());
        assert!(verify_flow(&g, &cancelled).ok());
    }

    #[test]
    fn canonical_flow_on_k4_frozen_values() {
        // explicit coloring: class1 = {01, 23}, class2 = {02, 13},
        // class3 = {03, 12}; edge ids in k4(): 01=0, 02=1, 03=2, 12=3,
        // 13=4, 23=5. Circuit orientations then start at vertex 0 along the
        // lowest edge; the whole flow is forced and frozen here by hand.
        let g = named::k4();
        let c = ProperEdgeColoring::new(g.graph(), vec![1, 2, 3, 3, 2, 1], false).unwrap();
        let flow = canonical_four_flow(&g, &c).unwrap();
        assert_eq!(flow.k, 4);
        assert_eq!(flow.values(), &[1, 1, 2, 2, 3, 1]);
        let heads: Vec<usize> = (0..6).map(|e| flow.head(e)).collect();
        assert_eq!(heads, vec![1, 2, 0, 1, 3, 2]);
        assert!(verify_flow(g.graph(), &flow).ok());
        assert!(flow.is_nowhere_zero());
    }

    #[test]
    fn canonical_flow_value_table_on_colorable_corpus() {
        for (name, g) in named::standard_corpus() {
            let Some(c) = crate::coloring::three_edge_coloring(&g, None).unwrap() else {
                continue;
            };
            let flow = canonical_four_flow(&g, &c).unwrap();
            let verdict = verify_flow(g.graph(), &flow);
            assert!(verdict.ok() && verdict.nowhere_zero, "{}", name);
            for e in 0..g.m() {
                match c.color(e) {
                    1 => assert_eq!(flow.value(e), 1, "{} edge {}", name, e),
                    2 => assert!(
                        flow.value(e) == 1 || flow.value(e) == 3,
                        "{} edge {}",
                        name,
                        e
                    ),
                    3 => assert_eq!(flow.value(e), 2, "{} edge {}", name, e),
                    _ => unreachable!(),
                }
            }
        }
    }

    #[test]
    fn canonical_flow_flips_stay_valid() {
        let g = named::prism(3).unwrap();
        let c = crate::coloring::three_edge_coloring(&g, None).unwrap().unwrap();
        let circuits = canonical_circuit_count(&g, &c);
        assert!(circuits >= 2);
        for flips in 0..(1u64 << circuits.min(4)) {
            let flow = canonical_four_flow_with_flips(&g, &c, flips).unwrap();
            let verdict = verify_flow(g.graph(), &flow);
            assert!(verdict.ok() && verdict.nowhere_zero, "flips {:b}", flips);
        }
    }

    #[test]
    fn search_results_match_classical_facts() {
        let budget = 100_000_000;
        // Petersen has no nowhere-zero 4-flow but has a 5-flow
        let petersen = named::petersen();
        assert_eq!(
            search_nowhere_zero_flow(petersen.graph(), 4, budget),
            SearchOutcome::Absent
        );
        let found = search_nowhere_zero_flow(petersen.graph(), 5, budget);
        let flow = found.found().expect("5-flow exists");
        let verdict = verify_flow(petersen.graph(), flow);
        assert!(verdict.ok() && verdict.nowhere_zero);

        // bipartite cubic graphs have 3-flows; non-bipartite ones do not
        let k33 = named::k3_3();
        assert!(search_nowhere_zero_flow(k33.graph(), 3, budget)
            .found()
            .is_some());
        let prism = named::prism(3).unwrap();
        assert_eq!(
            search_nowhere_zero_flow(prism.graph(), 3, budget),
            SearchOutcome::Absent
        );
    }

    #[test]
    fn search_absence_matches_brute_oracle() {
        // cross-check Absent verdicts with the independent full-assignment
        // oracle on small graphs
        let k4 = named::k4();
        for k in [2i64, 3, 4] {
            let fast = search_nowhere_zero_flow(k4.graph(), k as u32, 1_000_000);
            let slow = oracle::nowhere_zero_flow_exists_brute(k4.graph(), k);
            assert_eq!(fast.found().is_some(), slow, "k4 k={}", k);
        }
        let prism = named::prism(3).unwrap();
        for k in [2i64, 3] {
            let fast = search_nowhere_zero_flow(prism.graph(), k as u32, 1_000_000);
            let slow = oracle::nowhere_zero_flow_exists_brute(prism.graph(), k);
            assert_eq!(fast.found().is_some(), slow, "prism k={}", k);
        }
    }

    #[test]
    fn search_success_is_monotone_in_k() {
        let g = named::k3_3();
        let f3 = search_nowhere_zero_flow(g.graph(), 3, 1_000_000)
            .found()
            .cloned()
            .unwrap();
        // the same values verify under any larger bound
        let relaxed = f3.relax(4);
        assert!(verify_flow(g.graph(), &relaxed).ok());
        assert!(search_nowhere_zero_flow(g.graph(), 4, 1_000_000)
            .found()
            .is_some());
    }

    #[test]
    fn bridges_short_circuit_search() {
        // two triangles joined by a bridge
        let g = Multigraph::new(
            6,
            vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)],
        )
        .unwrap();
        assert_eq!(search_nowhere_zero_flow(&g, 6, 1_000_000), SearchOutcome::Absent);
    }

    #[test]
    fn tiny_budget_reports_indeterminate() {
        let g = named::petersen();
        assert_eq!(
            search_nowhere_zero_flow(g.graph(), 5, 1),
            SearchOutcome::Indeterminate
        );
    }

    #[test]
    fn lift_through_single_subdivision() {
        // path 0 - 2 - 1 plus direct edges making everything trivalent is
        // overkill; use the doubled-circuit shape instead: a triangle with
        // one edge subdivided, flow value 3 on the circuit
        let g = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        // suppressing nothing (all degree 2) is invalid; instead exercise
        // the chain logic through a cubic host: K4 with edge (2,3)
        // subdivided through vertex 4
        let host = Multigraph::new(
            5,
            vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (4, 3)],
        )
        .unwrap();
        let (suppressed, smap) = host.suppress_bivalent().unwrap();
        // a 4-flow on the suppressed K4 via the frozen canonical one
        let cg = CubicGraph::new(suppressed.clone()).unwrap();
        let c = crate::coloring::three_edge_coloring(&cg, None).unwrap().unwrap();
        let flow = canonical_four_flow(&cg, &c).unwrap();
        let lifted = lift_flow(&host, &suppressed, &smap, &flow).unwrap();
        let verdict = verify_flow(&host, &lifted);
        assert!(verdict.ok() && verdict.nowhere_zero);
        // both halves of the subdivided edge carry the merged edge's value
        let (merged, _) = smap.covering_edge(5).unwrap();
        assert_eq!(lifted.value(5), flow.value(merged));
        assert_eq!(lifted.value(6), flow.value(merged));
        let _ = g;
    }

    #[test]
    fn lift_is_identity_without_bivalent_vertices() {
        let g = named::k4();
        let (suppressed, smap) = g.graph().suppress_bivalent().unwrap();
        assert_eq!(suppressed.m(), g.m());
        let c = crate::coloring::three_edge_coloring(&g, None).unwrap().unwrap();
        let flow = canonical_four_flow(&g, &c).unwrap();
        // identity chains map values straight through
        let sup = CubicGraph::new(suppressed.clone()).unwrap();
        let c2 = crate::coloring::three_edge_coloring(&sup, None).unwrap().unwrap();
        let f2 = canonical_four_flow(&sup, &c2).unwrap();
        let lifted = lift_flow(g.graph(), &suppressed, &smap, &f2).unwrap();
        assert_eq!(lifted.values(), f2.values());
        let _ = flow;
    }

    #[test]
    fn embed_adds_zero_edges() {
        let host = named::petersen();
        let (sub, map) = host.graph().remove_edges(&[0, 12]);
        // sub has bivalent vertices, but flows on it are still meaningful:
        // search one (it has even circuits only if bridgeless; just verify
        // embedding transports values and zeros the removed edges)
        if let SearchOutcome::Found(f) = search_nowhere_zero_flow(&sub, 6, 10_000_000) {
            let emb = embed_flow(host.graph(), &sub, &map, &f).unwrap();
            assert!(verify_flow(host.graph(), &emb).ok());
            assert_eq!(emb.value(0), 0);
            assert_eq!(emb.value(12), 0);
            assert_eq!(emb.support(host.m()).count(), host.m() - 2);
        } else {
            panic!("subgraph should carry a 6-flow");
        }
    }
}
