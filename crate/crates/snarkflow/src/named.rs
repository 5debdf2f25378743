//! Generators for the named cubic fixtures.
//!
//! Every generator uses a fixed, documented labeling so that results are
//! reproducible byte for byte.

use crate::graph::{CubicGraph, Multigraph, VertexId};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NamedError {
    #[error("unknown graph name {0:?}")]
    Unknown(String),
    #[error("{name} needs a parameter, e.g. {name}:{example}")]
    MissingParameter { name: String, example: usize },
    #[error("{name}: invalid parameter {value}: {reason}")]
    BadParameter { name: String, value: usize, reason: String },
}

/// The complete graph on 4 vertices.
pub fn k4() -> CubicGraph {
    cubic(Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap())
}

/// Complete bipartite graph with parts `{0,1,2}` and `{3,4,5}`.
pub fn k3_3() -> CubicGraph {
    let mut edges = Vec::new();
    for a in 0..3 {
        for b in 3..6 {
            edges.push((a, b));
        }
    }
    cubic(Multigraph::new(6, edges).unwrap())
}

/// The prism over an `n`-gon: outer cycle `0..n`, inner cycle `n..2n`,
/// rungs `i -- n+i`. Requires `n >= 3`.
pub fn prism(n: usize) -> Result<CubicGraph, NamedError> {
    if n < 3 {
        return Err(NamedError::BadParameter {
            name: "prism".into(),
            value: n,
            reason: "need n >= 3".into(),
        });
    }
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, (i + 1) % n));
    }
    for i in 0..n {
        edges.push((n + i, n + (i + 1) % n));
    }
    for i in 0..n {
        edges.push((i, n + i));
    }
    Ok(cubic(Multigraph::new(2 * n, edges).unwrap()))
}

/// The Moebius ladder on `2n` vertices: cycle `0..2n` plus the `n`
/// diameters `i -- i+n`. Requires `n >= 2` (`n = 2` gives K4, `n = 3`
/// gives K3,3).
pub fn moebius_ladder(n: usize) -> Result<CubicGraph, NamedError> {
    if n < 2 {
        return Err(NamedError::BadParameter {
            name: "moebius_ladder".into(),
            value: n,
            reason: "need n >= 2".into(),
        });
    }
    let mut edges = Vec::new();
    for i in 0..2 * n {
        edges.push((i, (i + 1) % (2 * n)));
    }
    for i in 0..n {
        edges.push((i, i + n));
    }
    Ok(cubic(Multigraph::new(2 * n, edges).unwrap()))
}

/// The Petersen graph: outer cycle `0..5`, spokes `i -- i+5`, inner
/// pentagram `5+i -- 5+(i+2 mod 5)`.
pub fn petersen() -> CubicGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    cubic(Multigraph::new(10, edges).unwrap())
}

/// The flower snark on `4k` vertices, odd `k >= 5`.
///
/// Labeling: hub `4i`, outer-cycle vertex `4i+1`, twisted-cycle vertices
/// `4i+2` and `4i+3`. The hub `4i` is joined to the other three vertices of
/// its block; the `4i+1` form a `k`-cycle; the `4i+2`/`4i+3` form a single
/// `2k`-cycle closed with a half twist.
pub fn flower_snark(k: usize) -> Result<CubicGraph, NamedError> {
    if k < 5 || k % 2 == 0 {
        return Err(NamedError::BadParameter {
            name: "flower_snark".into(),
            value: k,
            reason: "need odd k >= 5".into(),
        });
    }
    let hub = |i: usize| 4 * i;
    let outer = |i: usize| 4 * i + 1;
    let up = |i: usize| 4 * i + 2;
    let down = |i: usize| 4 * i + 3;
    let mut edges = Vec::new();
    for i in 0..k {
        edges.push((hub(i), outer(i)));
        edges.push((hub(i), up(i)));
        edges.push((hub(i), down(i)));
    }
    for i in 0..k {
        edges.push((outer(i), outer((i + 1) % k)));
    }
    for i in 0..k - 1 {
        edges.push((up(i), up(i + 1)));
        edges.push((down(i), down(i + 1)));
    }
    // the half twist
    edges.push((up(k - 1), down(0)));
    edges.push((down(k - 1), up(0)));
    Ok(cubic(Multigraph::new(4 * k, edges).unwrap()))
}

/// Dot product of two Petersen copies: in copy one delete the two
/// independent edges `e1`, `e2`; in copy two delete the adjacent vertices 0
/// and 1; join the four degree-2 vertices of copy one to the four of copy
/// two. Copy-two vertex `v` becomes `v + 8` here (its vertices 2..10 map to
/// 10..18).
fn petersen_dot_product(e1: (VertexId, VertexId), e2: (VertexId, VertexId)) -> CubicGraph {
    let base = petersen();
    let map2 = |v: VertexId| v + 8;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    for &(a, b) in base.edges() {
        if (a, b) != e1 && (a, b) != e2 && (b, a) != e1 && (b, a) != e2 {
            edges.push((a, b));
        }
    }
    for &(a, b) in base.edges() {
        if a > 1 && b > 1 {
            edges.push((map2(a), map2(b)));
        }
    }
    // copy-two stubs: the other neighbors of the deleted vertices 0 and 1
    // (0 ~ 4, 5 and 1 ~ 2, 6 in the Petersen labeling above)
    edges.push((e1.0, map2(4)));
    edges.push((e1.1, map2(5)));
    edges.push((e2.0, map2(2)));
    edges.push((e2.1, map2(6)));
    cubic(Multigraph::new(18, edges).unwrap())
}

/// First 18-vertex snark from the Petersen dot product, built with the two
/// deleted copy-one edges taken from the outer cycle at distance one:
/// `(0,1)` and `(2,3)`.
pub fn blanusa_1() -> CubicGraph {
    petersen_dot_product((0, 1), (2, 3))
}

/// Second 18-vertex snark from the Petersen dot product, built with the
/// deleted copy-one edges `(0,1)` (outer) and `(7,9)` (pentagram). Not
/// isomorphic to [`blanusa_1`].
pub fn blanusa_2() -> CubicGraph {
    petersen_dot_product((0, 1), (7, 9))
}

fn cubic(g: Multigraph) -> CubicGraph {
    CubicGraph::new(g).expect("generator output is cubic and connected")
}

/// All parameterless fixtures plus small parameterized ones, as
/// `(name, graph)` pairs in a fixed order. This is the standing corpus used
/// by tests and examples.
pub fn standard_corpus() -> Vec<(String, CubicGraph)> {
    vec![
        ("k4".into(), k4()),
        ("k3_3".into(), k3_3()),
        ("prism:3".into(), prism(3).unwrap()),
        ("prism:4".into(), prism(4).unwrap()),
        ("prism:5".into(), prism(5).unwrap()),
        ("moebius_ladder:4".into(), moebius_ladder(4).unwrap()),
        ("moebius_ladder:5".into(), moebius_ladder(5).unwrap()),
        ("petersen".into(), petersen()),
        ("flower_snark:5".into(), flower_snark(5).unwrap()),
        ("blanusa_1".into(), blanusa_1()),
        ("blanusa_2".into(), blanusa_2()),
    ]
}

/// Look a generator up by CLI-style name: `petersen`, `prism:4`,
/// `flower_snark:5`, ...
pub fn by_name(spec: &str) -> Result<CubicGraph, NamedError> {
    let (name, param) = match spec.split_once(':') {
        Some((n, p)) => {
            let v: usize = p.parse().map_err(|_| NamedError::BadParameter {
                name: n.into(),
                value: 0,
                reason: format!("cannot parse parameter {:?}", p),
            })?;
            (n, Some(v))
        }
        None => (spec, None),
    };
    let need = |example: usize| -> NamedError {
        NamedError::MissingParameter { name: name.into(), example }
    };
    match name {
        "k4" => Ok(k4()),
        "k3_3" => Ok(k3_3()),
        "petersen" => Ok(petersen()),
        "blanusa_1" => Ok(blanusa_1()),
        "blanusa_2" => Ok(blanusa_2()),
        "prism" => prism(param.ok_or_else(|| need(3))?),
        "moebius_ladder" => moebius_ladder(param.ok_or_else(|| need(4))?),
        "flower_snark" => flower_snark(param.ok_or_else(|| need(5))?),
        _ => Err(NamedError::Unknown(spec.into())),
    }
}
