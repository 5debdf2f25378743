//! Balanced valuations with exact rational vertex weights.
//!
//! Weights are stored as tripled integers (the integer `3 f(v)`), so the
//! `5/3` comparisons stay exact; no floating point anywhere. A valuation is
//! balanced when `|sum of f over X| <= |boundary(X)|` for every vertex
//! subset X.

use crate::bitset::VertexSet;
use crate::flows::IntegerKFlow;
use crate::graph::{Multigraph, VertexId};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ValuationError {
    #[error("flow must be nowhere-zero to induce a valuation")]
    FlowNotNowhereZero,
    #[error("3k(2d+ - d)/(k - 2) is not an integer for k = {k}; only k with exact tripled weights are supported")]
    NotTripleRepresentable { k: u32 },
    #[error("exhaustive balance check is limited to {limit} vertices, graph has {n}")]
    TooLarge { n: usize, limit: usize },
    #[error("valuation is not two-valued: vertex {vertex} breaks the pattern")]
    NotTwoValued { vertex: VertexId },
    #[error("valuation covers {found} vertices, graph has {expected}")]
    SizeMismatch { found: usize, expected: usize },
}

/// A vertex weighting with all weights of equal magnitude, stored as
/// `3 f(v)` per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedValuation {
    thirds: Vec<i64>,
}

impl BalancedValuation {
    pub fn from_thirds(thirds: Vec<i64>) -> Self {
        BalancedValuation { thirds }
    }

    /// `3 f(v)`.
    pub fn third(&self, v: VertexId) -> i64 {
        self.thirds[v]
    }

    pub fn thirds(&self) -> &[i64] {
        &self.thirds
    }

    pub fn len(&self) -> usize {
        self.thirds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thirds.is_empty()
    }

    /// The common magnitude `3|f(v)|` when the valuation is two-valued.
    pub fn magnitude(&self) -> Result<i64, ValuationError> {
        let Some(&first) = self.thirds.first() else {
            return Ok(0);
        };
        let mag = first.abs();
        for (v, &t) in self.thirds.iter().enumerate() {
            if t.abs() != mag || t == 0 {
                return Err(ValuationError::NotTwoValued { vertex: v });
            }
        }
        Ok(mag)
    }

    pub fn sum_thirds(&self, set: &VertexSet) -> i64 {
        set.iter().map(|v| self.thirds[v]).sum()
    }
}

/// The valuation induced by a nowhere-zero k-flow:
/// `f(v) = k/(k-2) * (2 outdeg(v) - deg(v))` under the flow's orientation.
/// For cubic graphs this gives `±2` at k = 4 and `±5/3` at k = 5.
pub fn valuation_from_flow(
    g: &Multigraph,
    flow: &IntegerKFlow,
) -> Result<BalancedValuation, ValuationError> {
    if !flow.is_nowhere_zero() {
        return Err(ValuationError::FlowNotNowhereZero);
    }
    let k = flow.k as i64;
    let mut outdeg = vec![0i64; g.n()];
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        if a == b {
            // a loop contributes one in and one out; net orientation excess 0
            continue;
        }
        let head = flow.head(e);
        let tail = if head == b { a } else { b };
        outdeg[tail] += 1;
    }
    let mut thirds = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let loops = g
            .incident(v)
            .iter()
            .filter(|&&(u, _)| u == v)
            .count() as i64
            / 2;
        let excess = 2 * (outdeg[v] + loops) - g.degree(v) as i64;
        let numerator = 3 * k * excess;
        if numerator % (k - 2) != 0 {
            return Err(ValuationError::NotTripleRepresentable { k: flow.k });
        }
        thirds.push(numerator / (k - 2));
    }
    Ok(BalancedValuation { thirds })
}

/// A subset violating the balance inequality. `imbalance` is the absolute
/// difference between positive- and negative-weight vertices in the set;
/// for a two-valued valuation `±c` a violation means `c * imbalance`
/// exceeds the boundary size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationWitness {
    pub set: VertexSet,
    pub imbalance: usize,
    pub boundary_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BalanceVerdict {
    Balanced,
    Violated(ViolationWitness),
}

impl BalanceVerdict {
    pub fn is_balanced(&self) -> bool {
        matches!(self, BalanceVerdict::Balanced)
    }
}

/// Exhaustively test `|sum f(X)| <= |boundary(X)|` over all vertex subsets
/// in integer arithmetic (`|sum 3f| <= 3|boundary|`).
///
/// Subsets are scanned in increasing cardinality, within a cardinality in
/// increasing bitmask order, so the first violation found is a
/// cardinality-minimal witness with a deterministic tie-break.
pub fn check_balanced(
    g: &Multigraph,
    f: &BalancedValuation,
    limit: usize,
) -> Result<BalanceVerdict, ValuationError> {
    let n = g.n();
    if f.len() != n {
        return Err(ValuationError::SizeMismatch { found: f.len(), expected: n });
    }
    if n > limit || n >= 64 {
        return Err(ValuationError::TooLarge { n, limit });
    }

    // edge endpoints once, as bit positions
    let ends: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .filter(|&&(a, b)| a != b)
        .map(|&(a, b)| (a as u32, b as u32))
        .collect();

    for card in 0..=n {
        // Gosper's hack walks all n-bit masks of the given popcount in
        // ascending numeric order
        let mut mask: u64 = if card == 0 { 0 } else { (1u64 << card) - 1 };
        loop {
            let mut sum = 0i64;
            for v in 0..n {
                if mask >> v & 1 == 1 {
                    sum += f.thirds[v];
                }
            }
            let mut boundary = 0i64;
            for &(a, b) in &ends {
                if (mask >> a ^ mask >> b) & 1 == 1 {
                    boundary += 1;
                }
            }
            if sum.abs() > 3 * boundary {
                let set = VertexSet::from_indices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
                let imbalance = count_imbalance(f, mask);
                return Ok(BalanceVerdict::Violated(ViolationWitness {
                    set,
                    imbalance,
                    boundary_size: boundary as usize,
                }));
            }
            if card == 0 || card == n {
                break;
            }
            // Gosper: next mask with the same popcount
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
            if mask >= 1u64 << n {
                break;
            }
        }
    }
    Ok(BalanceVerdict::Balanced)
}

fn count_imbalance(f: &BalancedValuation, mask: u64) -> usize {
    let mut pos = 0usize;
    let mut neg = 0usize;
    for (v, &t) in f.thirds.iter().enumerate() {
        if mask >> v & 1 == 1 {
            if t > 0 {
                pos += 1;
            } else if t < 0 {
                neg += 1;
            }
        }
    }
    pos.abs_diff(neg)
}

/// Split a two-valued valuation into its positive and negative classes.
pub fn classes(f: &BalancedValuation) -> Result<(VertexSet, VertexSet), ValuationError> {
    f.magnitude()?;
    let n = f.len();
    let pos = VertexSet::from_indices(n, (0..n).filter(|&v| f.thirds[v] > 0));
    let neg = VertexSet::from_indices(n, (0..n).filter(|&v| f.thirds[v] < 0));
    Ok((pos, neg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::three_edge_coloring;
    use crate::flows::{canonical_four_flow, search_nowhere_zero_flow, Orientation};
    use crate::named;

    #[test]
    fn canonical_k4_valuation_is_plus_minus_two() {
        let g = named::k4();
        let c = three_edge_coloring(&g, None).unwrap().unwrap();
        let flow = canonical_four_flow(&g, &c).unwrap();
        let f = valuation_from_flow(g.graph(), &flow).unwrap();
        // 3 * (±2) = ±6
        assert!(f.thirds().iter().all(|&t| t == 6 || t == -6));
        // the orientation excess sums to zero, so the classes balance
        let (a, b) = classes(&f).unwrap();
        assert_eq!(a.count(), 2);
        assert_eq!(b.count(), 2);
        assert_eq!(
            check_balanced(g.graph(), &f, 24).unwrap(),
            BalanceVerdict::Balanced
        );
    }

    #[test]
    fn consistent_circuit_gives_zero_weights() {
        // a directed circuit with all values 1 is a nowhere-zero 3-flow on
        // the 2-regular triangle; every vertex has outdegree 1 = indegree
        let g = Multigraph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        let flow = IntegerKFlow::new(
            &g,
            3,
            Orientation::new(&g, vec![1, 2, 0]).unwrap(),
            vec![1, 1, 1],
        )
        .unwrap();
        let f = valuation_from_flow(&g, &flow).unwrap();
        assert_eq!(f.thirds(), &[0, 0, 0]);
    }

    #[test]
    fn petersen_five_flow_valuation() {
        let g = named::petersen();
        let flow = search_nowhere_zero_flow(g.graph(), 5, 100_000_000)
            .found()
            .cloned()
            .unwrap();
        let f = valuation_from_flow(g.graph(), &flow).unwrap();
        // 3 * (±5/3) = ±5
        assert!(f.thirds().iter().all(|&t| t == 5 || t == -5));
        let (a, b) = classes(&f).unwrap();
        assert_eq!(a.count(), 5);
        assert_eq!(b.count(), 5);
        assert_eq!(
            check_balanced(g.graph(), &f, 24).unwrap(),
            BalanceVerdict::Balanced
        );
    }

    #[test]
    fn rejects_zero_support_flows() {
        let g = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        let flow = IntegerKFlow::new(
            &g,
            2,
            Orientation::new(&g, vec![1, 1]).unwrap(),
            vec![0, 0],
        )
        .unwrap();
        assert!(matches!(
            valuation_from_flow(&g, &flow),
            Err(ValuationError::FlowNotNowhereZero)
        ));
    }

    #[test]
    fn planted_violation_has_minimal_witness() {
        // all-positive 5/3 weights on K4: the smallest violating set has
        // three vertices (5*3 > 3*3) and the scan returns {0,1,2}
        let g = named::k4();
        let f = BalancedValuation::from_thirds(vec![5, 5, 5, 5]);
        let BalanceVerdict::Violated(w) = check_balanced(g.graph(), &f, 24).unwrap() else {
            panic!("expected a violation");
        };
        assert_eq!(w.set.iter().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(w.boundary_size, 3);
        assert_eq!(w.imbalance, 3);
    }

    #[test]
    fn empty_and_full_sets_never_violate() {
        // the scan starts at cardinality 0 and ends at n; flow-derived
        // valuations sum to zero so the full set passes too
        let g = named::prism(3).unwrap();
        let c = three_edge_coloring(&g, None).unwrap().unwrap();
        let flow = canonical_four_flow(&g, &c).unwrap();
        let f = valuation_from_flow(g.graph(), &flow).unwrap();
        assert_eq!(f.sum_thirds(&g.vertex_set()), 0);
        assert!(check_balanced(g.graph(), &f, 24).unwrap().is_balanced());
    }

    #[test]
    fn size_limit_is_enforced() {
        let g = named::petersen();
        let f = BalancedValuation::from_thirds(vec![5; 10]);
        assert!(matches!(
            check_balanced(g.graph(), &f, 8),
            Err(ValuationError::TooLarge { n: 10, limit: 8 })
        ));
    }

    #[test]
    fn classes_reject_mixed_magnitudes() {
        let f = BalancedValuation::from_thirds(vec![5, -6]);
        assert!(matches!(
            classes(&f),
            Err(ValuationError::NotTwoValued { vertex: 1 })
        ));
        let f = BalancedValuation::from_thirds(vec![5, 0]);
        assert!(classes(&f).is_err());
    }

    #[test]
    fn parity_of_imbalance_matches_boundary_on_cubic_graphs() {
        // for a two-valued valuation on a cubic graph, the white/black
        // difference of any subset has the parity of its boundary
        let g = named::petersen();
        let flow = search_nowhere_zero_flow(g.graph(), 5, 100_000_000)
            .found()
            .cloned()
            .unwrap();
        let f = valuation_from_flow(g.graph(), &flow).unwrap();
        for mask in 0u64..(1 << 10) {
            let set = VertexSet::from_indices(10, (0..10).filter(|&v| mask >> v & 1 == 1));
            let imbalance = count_imbalance(&f, mask);
            let boundary = g.boundary(&set).count();
            assert_eq!(imbalance % 2, boundary % 2, "mask {:b}", mask);
        }
    }

    #[test]
    fn lemma_color12_edges_join_opposite_classes() {
        // edges colored 1 or 2 join a positive and a negative vertex of the
        // canonical valuation, on every 3-edge-colorable corpus graph
        for (name, g) in named::standard_corpus() {
            let Some(c) = three_edge_coloring(&g, None).unwrap() else {
                continue;
            };
            let flow = canonical_four_flow(&g, &c).unwrap();
            let f = valuation_from_flow(g.graph(), &flow).unwrap();
            for e in 0..g.m() {
                if c.color(e) == 3 {
                    continue;
                }
                let (x, y) = g.endpoints(e);
                assert!(
                    f.third(x) * f.third(y) < 0,
                    "{} edge {} joins same class",
                    name,
                    e
                );
            }
        }
    }
}
