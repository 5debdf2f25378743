//! graph6 and plain edge-list input/output.
//!
//! graph6 follows the published format (simple undirected graphs, upper
//! triangle packed column-major into 6-bit groups, printable offset 63);
//! reference: <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>.
//! Labels are preserved exactly — no canonization happens on either side.
//!
//! Multigraphs use a plain text edge list: a first line `n m`, then `m`
//! lines `a b` with 0-based endpoints; the edge id is the line index.

use crate::graph::Multigraph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("empty graph6 line")]
    Empty,
    #[error("graph6 byte {offset}: character {byte:#04x} out of range 63..=126")]
    BadChar { offset: usize, byte: u8 },
    #[error("graph6 header truncated at byte {offset}")]
    TruncatedHeader { offset: usize },
    #[error("graph6 bit vector too short: need {need} data bytes, found {found}")]
    TruncatedBits { need: usize, found: usize },
    #[error("graph6 cannot encode {0}")]
    Unencodable(String),
    #[error("edge list line {line}: {reason}")]
    BadEdgeList { line: usize, reason: String },
    #[error("graph is invalid: {0}")]
    Graph(#[from] crate::graph::GraphError),
}

/// Decode one graph6 line into a simple graph.
pub fn parse_graph6(text: &str) -> Result<Multigraph, FormatError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    let mut vals = Vec::with_capacity(bytes.len());
    for (offset, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(FormatError::BadChar { offset, byte: b });
        }
        vals.push((b - 63) as u64);
    }

    let (n, header_len) = if vals[0] < 63 {
        (vals[0] as usize, 1)
    } else if vals.len() >= 2 && vals[1] < 63 {
        if vals.len() < 4 {
            return Err(FormatError::TruncatedHeader { offset: vals.len() });
        }
        (((vals[1] << 12) | (vals[2] << 6) | vals[3]) as usize, 4)
    } else {
        if vals.len() < 8 {
            return Err(FormatError::TruncatedHeader { offset: vals.len() });
        }
        let mut n = 0u64;
        for &v in &vals[2..8] {
            n = (n << 6) | v;
        }
        (n as usize, 8)
    };

    let pairs = n.saturating_sub(1) * n / 2;
    let need = pairs.div_ceil(6);
    let data = &vals[header_len..];
    if data.len() < need {
        return Err(FormatError::TruncatedBits { need, found: data.len() });
    }

    let mut edges = Vec::new();
    let mut pos = 0usize;
    for col in 1..n {
        for row in 0..col {
            let bit = data[pos / 6] >> (5 - pos % 6) & 1;
            if bit == 1 {
                edges.push((row, col));
            }
            pos += 1;
        }
    }
    Ok(Multigraph::new(n, edges)?)
}

/// Encode a simple graph as one graph6 line. Fails on loops or parallel
/// edges — the format cannot represent them.
pub fn encode_graph6(g: &Multigraph) -> Result<String, FormatError> {
    let n = g.n();
    let mut upper = vec![vec![false; n]; n];
    for &(a, b) in g.edges() {
        if a == b {
            return Err(FormatError::Unencodable(format!("loop at vertex {}", a)));
        }
        let (lo, hi) = (a.min(b), a.max(b));
        if upper[lo][hi] {
            return Err(FormatError::Unencodable(format!(
                "parallel edge between {} and {}",
                lo, hi
            )));
        }
        upper[lo][hi] = true;
    }

    let mut vals: Vec<u8> = Vec::new();
    if n <= 62 {
        vals.push(n as u8);
    } else if n <= 258_047 {
        vals.push(63);
        vals.push((n >> 12) as u8 & 63);
        vals.push((n >> 6) as u8 & 63);
        vals.push(n as u8 & 63);
    } else if n <= 68_719_476_735 {
        vals.push(63);
        vals.push(63);
        for shift in (0..36).step_by(6).rev() {
            vals.push((n >> shift) as u8 & 63);
        }
    } else {
        return Err(FormatError::Unencodable(format!("{} vertices", n)));
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | upper[row][col] as u8;
            filled += 1;
            if filled == 6 {
                vals.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        vals.push(acc << (6 - filled));
    }

    Ok(vals.into_iter().map(|v| (v + 63) as char).collect())
}

/// Parse the multigraph edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Multigraph, FormatError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (lineno, header) = lines.next().ok_or(FormatError::BadEdgeList {
        line: 0,
        reason: "missing 'n m' header".into(),
    })?;
    let mut it = header.split_whitespace();
    let parse_usize = |tok: Option<&str>, line: usize| -> Result<usize, FormatError> {
        tok.ok_or(FormatError::BadEdgeList { line, reason: "expected integer".into() })?
            .parse()
            .map_err(|e| FormatError::BadEdgeList { line, reason: format!("{}", e) })
    };
    let n = parse_usize(it.next(), lineno + 1)?;
    let m = parse_usize(it.next(), lineno + 1)?;
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let mut it = line.split_whitespace();
        let a = parse_usize(it.next(), lineno + 1)?;
        let b = parse_usize(it.next(), lineno + 1)?;
        edges.push((a, b));
    }
    if edges.len() != m {
        return Err(FormatError::BadEdgeList {
            line: 0,
            reason: format!("header promised {} edges, found {}", m, edges.len()),
        });
    }
    Ok(Multigraph::with_loops(n, edges)?)
}

pub fn encode_edge_list(g: &Multigraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(a, b) in g.edges() {
        out.push_str(&format!("{} {}\n", a, b));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_k4() {
        // hand-decoded: 'C' = 4 vertices, '~' = 63 = all six upper-triangle bits
        let g = parse_graph6("C~").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 6);
        assert!((0..4).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn decodes_single_edge() {
        // 'A' = 2 vertices, '_' = 32 = bit for the only pair
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn rejects_malformed_lines() {
        assert_eq!(parse_graph6(""), Err(FormatError::Empty));
        assert!(matches!(
            parse_graph6("C\u{01}"),
            Err(FormatError::BadChar { offset: 1, .. })
        ));
        // 'E' = 6 vertices needs 15 bits = 3 data bytes
        assert!(matches!(
            parse_graph6("E~"),
            Err(FormatError::TruncatedBits { need: 3, found: 1 })
        ));
        assert!(matches!(
            parse_graph6("~A"),
            Err(FormatError::TruncatedHeader { .. })
        ));
    }

    #[test]
    fn encode_then_parse_preserves_labels() {
        let g = Multigraph::new(5, vec![(0, 4), (1, 2), (2, 3), (0, 2)]).unwrap();
        let text = encode_graph6(&g).unwrap();
        let back = parse_graph6(&text).unwrap();
        assert_eq!(back.n(), 5);
        let mut a: Vec<_> = g.edges().iter().map(|&(x, y)| (x.min(y), x.max(y))).collect();
        let mut b: Vec<_> = back.edges().iter().map(|&(x, y)| (x.min(y), x.max(y))).collect();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }

    #[test]
    fn refuses_multigraphs_in_graph6() {
        let g = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert!(matches!(encode_graph6(&g), Err(FormatError::Unencodable(_))));
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = Multigraph::new(3, vec![(0, 1), (0, 1), (1, 2)]).unwrap();
        let text = encode_edge_list(&g);
        assert_eq!(text, "3 3\n0 1\n0 1\n1 2\n");
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn edge_list_errors_name_lines() {
        assert!(matches!(
            parse_edge_list("2 1\n0 x\n"),
            Err(FormatError::BadEdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("2 2\n0 1\n"),
            Err(FormatError::BadEdgeList { .. })
        ));
    }
}
