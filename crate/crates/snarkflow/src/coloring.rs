//! Proper 3-edge-colorings, the chromatic-index dichotomy, and the
//! coloring-extension construction of a 2-factor through prescribed shared
//! matching edges.

use crate::bitset::EdgeSet;
use crate::factors::{complement_two_factor, Matching, TwoFactor};
use crate::graph::{ChainPart, CubicGraph, EdgeId, Multigraph, SuppressionMap};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("prescribed matchings must be perfect")]
    PrescribedNotPerfect,
    #[error("prescribed matchings must be disjoint")]
    PrescribedNotDisjoint,
    #[error("edge {edge} is not covered by the coloring")]
    Uncolored { edge: EdgeId },
    #[error("coloring is not proper: edges {a} and {b} share vertex {vertex} and color")]
    NotProper { a: EdgeId, b: EdgeId, vertex: usize },
    #[error("matchings share {found} edges; this construction needs exactly 2")]
    SharedPairSizeMismatch { found: usize },
    #[error("graph has a loop at vertex {vertex}; no proper edge coloring exists")]
    Loop { vertex: usize },
    #[error("special vertex {vertex} does not subdivide a color-3 edge")]
    SpecialOffColorThree { vertex: usize },
    #[error(transparent)]
    Factor(#[from] crate::factors::FactorError),
}

/// A proper edge coloring. The standard palette is `{1,2,3}`; the
/// `extended` flag admits the extra color `0` used by the coloring-extension
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperEdgeColoring {
    colors: Vec<u8>,
    extended: bool,
}

impl ProperEdgeColoring {
    pub fn new(g: &Multigraph, colors: Vec<u8>, extended: bool) -> Result<Self, ColoringError> {
        assert_eq!(colors.len(), g.m());
        let lo = if extended { 0 } else { 1 };
        for (e, &c) in colors.iter().enumerate() {
            if c < lo || c > 3 {
                return Err(ColoringError::Uncolored { edge: e });
            }
        }
        let c = ProperEdgeColoring { colors, extended };
        c.check_proper(g)?;
        Ok(c)
    }

    pub fn color(&self, e: EdgeId) -> u8 {
        self.colors[e]
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn is_extended(&self) -> bool {
        self.extended
    }

    pub fn class(&self, color: u8, m: usize) -> EdgeSet {
        EdgeSet::from_indices(
            m,
            self.colors
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c == color)
                .map(|(e, _)| e),
        )
    }

    pub fn check_proper(&self, g: &Multigraph) -> Result<(), ColoringError> {
        for v in 0..g.n() {
            let inc = g.incident(v);
            for i in 0..inc.len() {
                for j in i + 1..inc.len() {
                    let (a, b) = (inc[i].1, inc[j].1);
                    if a == b {
                        // a loop occupies two slots at its vertex
                        return Err(ColoringError::Loop { vertex: v });
                    }
                    if self.colors[a] == self.colors[b] {
                        return Err(ColoringError::NotProper { a, b, vertex: v });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Find a proper 3-edge-coloring.
///
/// With `prescribed = Some((m1, m2))` the two matchings must be disjoint
/// perfect matchings; class 1 is `m1`, class 2 is `m2`, and the remaining
/// edges are forced into class 3 (verified to be a matching — in a cubic
/// graph it always is). Without a prescription, a backtracking search over
/// edges in most-constrained-first order returns some proper coloring or
/// `None` if the graph is not 3-edge-colorable.
pub fn three_edge_coloring(
    g: &CubicGraph,
    prescribed: Option<(&Matching, &Matching)>,
) -> Result<Option<ProperEdgeColoring>, ColoringError> {
    let graph = g.graph();
    if let Some(v) = (0..graph.n()).find(|&v| graph.incident(v).iter().any(|&(u, _)| u == v)) {
        return Err(ColoringError::Loop { vertex: v });
    }

    if let Some((m1, m2)) = prescribed {
        if !m1.is_perfect(graph) || !m2.is_perfect(graph) {
            return Err(ColoringError::PrescribedNotPerfect);
        }
        if !m1.edges().is_disjoint(m2.edges()) {
            return Err(ColoringError::PrescribedNotDisjoint);
        }
        let mut colors = vec![3u8; graph.m()];
        for e in m1.edges().iter() {
            colors[e] = 1;
        }
        for e in m2.edges().iter() {
            colors[e] = 2;
        }
        let coloring = ProperEdgeColoring { colors, extended: false };
        coloring.check_proper(graph)?;
        return Ok(Some(coloring));
    }

    Ok(search_coloring(graph).map(|colors| ProperEdgeColoring { colors, extended: false }))
}

fn search_coloring(g: &Multigraph) -> Option<Vec<u8>> {
    let m = g.m();
    let mut colors = vec![0u8; m];

    fn forbidden(g: &Multigraph, colors: &[u8], e: EdgeId) -> u8 {
        let (a, b) = g.endpoints(e);
        let mut mask = 0u8;
        for v in [a, b] {
            for &(_, f) in g.incident(v) {
                if f != e && colors[f] != 0 {
                    mask |= 1 << colors[f];
                }
            }
        }
        mask
    }

    fn next_edge(g: &Multigraph, colors: &[u8]) -> Option<(EdgeId, u8)> {
        // most saturated uncolored edge first, ties by id
        let mut best: Option<(EdgeId, u8, u32)> = None;
        for e in 0..g.m() {
            if colors[e] != 0 {
                continue;
            }
            let mask = forbidden(g, colors, e);
            let options = 3 - mask.count_ones().min(3);
            if best.as_ref().is_none_or(|&(_, _, o)| options < o) {
                best = Some((e, mask, options));
                if options == 0 {
                    break;
                }
            }
        }
        best.map(|(e, mask, _)| (e, mask))
    }

    fn rec(g: &Multigraph, colors: &mut Vec<u8>) -> bool {
        let Some((e, mask)) = next_edge(g, colors) else {
            return true;
        };
        for c in 1..=3u8 {
            if mask >> c & 1 == 0 {
                colors[e] = c;
                if rec(g, colors) {
                    return true;
                }
                colors[e] = 0;
            }
        }
        false
    }

    if rec(g, &mut colors) {
        Some(colors)
    } else {
        None
    }
}

/// The chromatic index of a cubic graph: 3 when a proper 3-edge-coloring
/// exists, otherwise 4.
pub fn chromatic_index(g: &CubicGraph) -> u8 {
    match three_edge_coloring(g, None) {
        Ok(Some(_)) => 3,
        _ => 4,
    }
}

/// Pull a 3-edge-coloring of the suppressed graph back to a proper
/// 4-edge-coloring of the host graph with palette `{0,1,2,3}`.
///
/// `minus_to_host` maps each edge of the suppression input (the host minus
/// the two shared edges) to its host edge id, and `shared` lists the two
/// removed edges, which receive color 1. Edges along each suppressed chain
/// alternate colors 0 and 3, starting with 0, so bivalent interior vertices
/// see two distinct colors.
pub fn pull_back_coloring(
    host: &Multigraph,
    coloring: &ProperEdgeColoring,
    smap: &SuppressionMap,
    minus_to_host: &[EdgeId],
    shared: [EdgeId; 2],
) -> Result<ProperEdgeColoring, ColoringError> {
    let mut colors = vec![u8::MAX; host.m()];
    colors[shared[0]] = 1;
    colors[shared[1]] = 1;
    for e in 0..smap.new_edge_count() {
        let chain: &[ChainPart] = smap.chain(e);
        if chain.len() == 1 {
            colors[minus_to_host[chain[0].edge]] = coloring.color(e);
        } else {
            for (i, part) in chain.iter().enumerate() {
                colors[minus_to_host[part.edge]] = if i % 2 == 0 { 0 } else { 3 };
            }
        }
    }
    if let Some(e) = colors.iter().position(|&c| c == u8::MAX) {
        return Err(ColoringError::Uncolored { edge: e });
    }
    ProperEdgeColoring::new(host, colors, true)
}

/// Build the 2-factor of the host graph induced by color classes
/// `{0, 2, 3}` of the pulled-back coloring: the complement of `m1`, with
/// each prescribed shared-edge endpoint on one of its circuits.
///
/// Preconditions checked here: `m1` and `m2` share exactly two edges, the
/// suppressed-graph coloring puts the `m1` image in class 1 and the `m2`
/// image in class 2, and each bivalent endpoint of the shared edges
/// subdivides a color-3 edge of the suppressed graph.
#[allow(clippy::too_many_arguments)]
pub fn two_factor_from_extended_coloring(
    g: &CubicGraph,
    m1: &Matching,
    m2: &Matching,
    coloring_of_suppressed: &ProperEdgeColoring,
    smap: &SuppressionMap,
    minus_to_host: &[EdgeId],
) -> Result<TwoFactor, ColoringError> {
    let shared_set = m1.edges().intersection(m2.edges());
    if shared_set.count() != 2 {
        return Err(ColoringError::SharedPairSizeMismatch { found: shared_set.count() });
    }
    let shared: Vec<EdgeId> = shared_set.iter().collect();

    // each special vertex must sit inside a chain whose suppressed edge is
    // colored 3
    let mut specials = Vec::new();
    for &e in &shared {
        let (a, b) = g.endpoints(e);
        specials.push(a);
        specials.push(b);
    }
    for &v in &specials {
        let mut found = false;
        for e in 0..smap.new_edge_count() {
            if smap.interior(e).contains(&v) {
                if coloring_of_suppressed.color(e) != 3 {
                    return Err(ColoringError::SpecialOffColorThree { vertex: v });
                }
                found = true;
            }
        }
        if !found {
            return Err(ColoringError::SpecialOffColorThree { vertex: v });
        }
    }

    let extended = pull_back_coloring(
        g.graph(),
        coloring_of_suppressed,
        smap,
        minus_to_host,
        [shared[0], shared[1]],
    )?;

    // classes {0,2,3} are exactly the complement of m1; build the 2-factor
    // through the complement so circuits come out decomposed
    let factor_edges = EdgeSet::from_indices(
        g.m(),
        (0..g.m()).filter(|&e| extended.color(e) != 1),
    );
    debug_assert_eq!(factor_edges, m1.edges().complement());
    let tf = complement_two_factor(g, m1)?;
    debug_assert_eq!(tf.edge_set(g.m()), factor_edges);
    Ok(tf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factors::enumerate_perfect_matchings;
    use crate::named;

    const CAP: usize = 1_000_000;

    #[test]
    fn k4_is_class_one() {
        let g = named::k4();
        let c = three_edge_coloring(&g, None).unwrap().unwrap();
        c.check_proper(g.graph()).unwrap();
        for color in 1..=3 {
            assert_eq!(c.class(color, g.m()).count(), 2);
        }
        assert_eq!(chromatic_index(&g), 3);
    }

    #[test]
    fn petersen_is_a_snark() {
        // independent route: every perfect-matching complement has odd
        // circuits, so no partition into three matchings exists
        let g = named::petersen();
        for m in enumerate_perfect_matchings(&g, CAP).matchings {
            let tf = crate::factors::complement_two_factor(&g, &m).unwrap();
            assert!(tf.odd_count() > 0);
        }
        assert_eq!(three_edge_coloring(&g, None).unwrap(), None);
        assert_eq!(chromatic_index(&g), 4);
    }

    #[test]
    fn flower_snark_has_chromatic_index_four() {
        assert_eq!(chromatic_index(&named::flower_snark(5).unwrap()), 4);
    }

    #[test]
    fn blanusa_graphs_are_snarks() {
        assert_eq!(chromatic_index(&named::blanusa_1()), 4);
        assert_eq!(chromatic_index(&named::blanusa_2()), 4);
    }

    #[test]
    fn prescribed_coloring_on_prism() {
        let g = named::prism(3).unwrap();
        let all = enumerate_perfect_matchings(&g, CAP).matchings;
        let (m1, m2) = all
            .iter()
            .flat_map(|a| all.iter().map(move |b| (a, b)))
            .find(|(a, b)| a.intersection_size(b) == 0)
            .expect("prism has disjoint perfect matchings");
        let c = three_edge_coloring(&g, Some((m1, m2))).unwrap().unwrap();
        c.check_proper(g.graph()).unwrap();
        assert_eq!(c.class(1, g.m()), *m1.edges());
        assert_eq!(c.class(2, g.m()), *m2.edges());
        // third class is the forced remainder
        assert_eq!(
            c.class(3, g.m()),
            m1.edges().union(m2.edges()).complement()
        );
    }

    #[test]
    fn prescription_validation() {
        let g = named::prism(3).unwrap();
        let all = enumerate_perfect_matchings(&g, CAP).matchings;
        assert!(matches!(
            three_edge_coloring(&g, Some((&all[0], &all[0]))),
            Err(ColoringError::PrescribedNotDisjoint)
        ));
        let tiny = Matching::new(g.graph(), EdgeSet::new(g.m())).unwrap();
        assert!(matches!(
            three_edge_coloring(&g, Some((&tiny, &all[0]))),
            Err(ColoringError::PrescribedNotPerfect)
        ));
    }

    #[test]
    fn coloring_search_matches_mu2_on_corpus() {
        // chromatic index 3 iff two disjoint perfect matchings exist
        for (name, g) in named::standard_corpus() {
            let chi = chromatic_index(&g);
            let (mu, _) = crate::factors::mu2(&g, CAP).unwrap();
            assert_eq!(chi == 3, mu == 0, "{}", name);
        }
    }

    #[test]
    fn loops_are_uncolorable() {
        let g = CubicGraph::new(
            Multigraph::with_loops(2, vec![(0, 0), (0, 1), (1, 1)]).unwrap(),
        )
        .unwrap();
        assert!(matches!(
            three_edge_coloring(&g, None),
            Err(ColoringError::Loop { .. })
        ));
    }
}
