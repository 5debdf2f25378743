//! Slow, independent reference implementations.
//!
//! Everything here recomputes a quantity by direct enumeration, sharing no
//! code with the production algorithms. The test suite uses these as
//! oracles before freezing expected values; they are exported because
//! independent re-derivation is part of what this crate is for. All of them
//! are exponential — keep inputs at desk scale.

use crate::bitset::VertexSet;
use crate::graph::{CubicGraph, Multigraph, VertexId};

/// All perfect matchings, found by scanning every edge subset of size n/2.
pub fn perfect_matchings_brute(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let m = g.m();
    if n % 2 != 0 {
        return Vec::new();
    }
    let want = n / 2;
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        g: &Multigraph,
        next: usize,
        want: usize,
        covered: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == want {
            out.push(chosen.clone());
            return;
        }
        if next >= g.m() || g.m() - next < want - chosen.len() {
            return;
        }
        rec(g, next + 1, want, covered, chosen, out);
        let (a, b) = g.endpoints(next);
        if a != b && !covered[a] && !covered[b] {
            covered[a] = true;
            covered[b] = true;
            chosen.push(next);
            rec(g, next + 1, want, covered, chosen, out);
            chosen.pop();
            covered[a] = false;
            covered[b] = false;
        }
    }
    let mut covered = vec![false; n];
    rec(g, 0, want, &mut covered, &mut chosen, &mut out);
    let _ = m;
    out.sort();
    out
}

/// Minimum number of edges whose removal separates `a` from `b`, as the
/// smallest boundary over all vertex sides containing `a` and avoiding `b`.
/// Only valid for n <= ~24.
pub fn min_cut_brute(g: &Multigraph, a: &VertexSet, b: &VertexSet) -> usize {
    let n = g.n();
    assert!(n <= 24, "brute-force cut oracle is limited to n <= 24");
    let mut best = usize::MAX;
    for mask in 0u64..(1 << n) {
        let side = mask_to_set(n, mask);
        if a.is_subset(&side) && b.is_disjoint(&side) {
            best = best.min(g.boundary(&side).count());
        }
    }
    best
}

/// Smallest boundary over all vertex sets whose two sides each contain a
/// circuit; `None` when no such split exists.
pub fn cycle_separating_cut_brute(g: &Multigraph) -> Option<usize> {
    let n = g.n();
    assert!(n <= 22, "brute-force cyclic cut oracle is limited to n <= 22");
    let mut best: Option<usize> = None;
    for mask in 1u64..(1 << n) - 1 {
        let side = mask_to_set(n, mask);
        if side_has_circuit(g, &side) && side_has_circuit(g, &side.complement()) {
            let c = g.boundary(&side).count();
            best = Some(best.map_or(c, |b: usize| b.min(c)));
        }
    }
    best
}

/// Does the subgraph induced by `side` contain a circuit? Checked per
/// component by comparing edge and vertex counts.
fn side_has_circuit(g: &Multigraph, side: &VertexSet) -> bool {
    let verts: Vec<VertexId> = side.iter().collect();
    let index: std::collections::HashMap<VertexId, usize> =
        verts.iter().copied().enumerate().map(|(i, v)| (v, i)).collect();
    let mut dsu: Vec<usize> = (0..verts.len()).collect();
    fn find(dsu: &mut Vec<usize>, x: usize) -> usize {
        if dsu[x] != x {
            let r = find(dsu, dsu[x]);
            dsu[x] = r;
        }
        dsu[x]
    }
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let _ = e;
        if side.contains(a) && side.contains(b) {
            if a == b {
                return true;
            }
            let (ra, rb) = (find(&mut dsu, index[&a]), find(&mut dsu, index[&b]));
            if ra == rb {
                return true;
            }
            dsu[ra] = rb;
        }
    }
    false
}

/// Exhaustive nowhere-zero k-flow existence by assigning every edge a signed
/// value in `±{1..k-1}` under the stored orientation. Only for tiny graphs.
pub fn nowhere_zero_flow_exists_brute(g: &Multigraph, k: i64) -> bool {
    let m = g.m();
    assert!(m <= 18, "brute-force flow oracle is limited to m <= 18");
    let mut values = vec![0i64; m];
    fn conserved(g: &Multigraph, values: &[i64]) -> bool {
        let mut net = vec![0i64; g.n()];
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if a != b {
                net[a] += values[e];
                net[b] -= values[e];
            }
        }
        net.iter().all(|&x| x == 0)
    }
    fn rec(g: &Multigraph, k: i64, e: usize, values: &mut Vec<i64>) -> bool {
        if e == g.m() {
            return conserved(g, values);
        }
        for mag in 1..k {
            for sign in [1, -1] {
                values[e] = sign * mag;
                if rec(g, k, e + 1, values) {
                    return true;
                }
            }
        }
        false
    }
    rec(g, k, 0, &mut values)
}

/// Graph isomorphism by backtracking over vertex maps with degree and
/// adjacency-multiset pruning. Fine for the desk-scale graphs here.
pub fn isomorphic(a: &CubicGraph, b: &CubicGraph) -> bool {
    isomorphic_multi(a.graph(), b.graph())
}

pub fn isomorphic_multi(a: &Multigraph, b: &Multigraph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let n = a.n();
    let adj = |g: &Multigraph| -> Vec<Vec<usize>> {
        let mut mat = vec![vec![0usize; n]; n];
        for &(x, y) in g.edges() {
            mat[x][y] += 1;
            if x != y {
                mat[y][x] += 1;
            }
        }
        mat
    };
    let ma = adj(a);
    let mb = adj(b);
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        v: usize,
        n: usize,
        ma: &[Vec<usize>],
        mb: &[Vec<usize>],
        dega: &dyn Fn(usize) -> usize,
        degb: &dyn Fn(usize) -> usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if v == n {
            return true;
        }
        'cand: for w in 0..n {
            if used[w] || dega(v) != degb(w) {
                continue;
            }
            for prev in 0..v {
                if ma[v][prev] != mb[w][map[prev]] {
                    continue 'cand;
                }
            }
            if ma[v][v] != mb[w][w] {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if rec(v + 1, n, ma, mb, dega, degb, map, used) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
        false
    }
    rec(
        0,
        n,
        &ma,
        &mb,
        &|v| a.degree(v),
        &|w| b.degree(w),
        &mut map,
        &mut used,
    )
}

/// Every connected cubic simple graph on `n` vertices, one representative
/// per isomorphism class, in a deterministic order.
///
/// Enumeration fixes vertex 0's neighborhood to `{1,2,3}` (every cubic
/// graph has such a labeling) and walks the remaining adjacency choices
/// vertex by vertex; representatives are kept through an invariant bucket
/// plus the exact isomorphism check above. Practical for n <= 12.
pub fn connected_cubic_graphs(n: usize) -> Vec<Multigraph> {
    if n < 4 || n % 2 != 0 {
        return Vec::new();
    }
    let mut found: Vec<(Vec<u64>, Multigraph)> = Vec::new();
    let mut adj = vec![vec![false; n]; n];
    let mut deg = vec![0usize; n];
    for v in 1..=3 {
        adj[0][v] = true;
        adj[v][0] = true;
        deg[0] += 1;
        deg[v] += 1;
    }

    fn extend(
        v: usize,
        n: usize,
        adj: &mut Vec<Vec<bool>>,
        deg: &mut Vec<usize>,
        found: &mut Vec<(Vec<u64>, Multigraph)>,
    ) {
        if v == n {
            finish(n, adj, found);
            return;
        }
        let missing = 3 - deg[v];
        if missing == 0 {
            extend(v + 1, n, adj, deg, found);
            return;
        }
        // choose the remaining neighbors of v among later vertices with
        // spare degree
        let candidates: Vec<usize> = (v + 1..n).filter(|&u| deg[u] < 3 && !adj[v][u]).collect();
        choose(v, n, &candidates, 0, missing, adj, deg, found);
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        v: usize,
        n: usize,
        candidates: &[usize],
        from: usize,
        left: usize,
        adj: &mut Vec<Vec<bool>>,
        deg: &mut Vec<usize>,
        found: &mut Vec<(Vec<u64>, Multigraph)>,
    ) {
        if left == 0 {
            extend(v + 1, n, adj, deg, found);
            return;
        }
        if candidates.len() - from < left {
            return;
        }
        for i in from..candidates.len() {
            let u = candidates[i];
            if deg[u] >= 3 {
                continue;
            }
            adj[v][u] = true;
            adj[u][v] = true;
            deg[v] += 1;
            deg[u] += 1;
            choose(v, n, candidates, i + 1, left - 1, adj, deg, found);
            adj[v][u] = false;
            adj[u][v] = false;
            deg[v] -= 1;
            deg[u] -= 1;
        }
    }

    fn finish(n: usize, adj: &[Vec<bool>], found: &mut Vec<(Vec<u64>, Multigraph)>) {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if adj[a][b] {
                    edges.push((a, b));
                }
            }
        }
        let g = Multigraph::new(n, edges).unwrap();
        if !g.is_connected() {
            return;
        }
        let key = invariant_key(&g);
        for (k, seen) in found.iter() {
            if *k == key && isomorphic_multi(seen, &g) {
                return;
            }
        }
        found.push((key, g));
    }

    extend(1, n, &mut adj, &mut deg, &mut found);
    found.into_iter().map(|(_, g)| g).collect()
}

/// Cheap isomorphism invariant: sorted per-vertex profiles of distance
/// multisets plus triangle membership counts.
fn invariant_key(g: &Multigraph) -> Vec<u64> {
    let n = g.n();
    let mut profiles: Vec<u64> = Vec::with_capacity(n);
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &(u, _) in g.incident(v) {
                if dist[u] == usize::MAX {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        let mut counts = [0u64; 8];
        for &d in &dist {
            counts[d.min(7)] += 1;
        }
        let mut triangles = 0u64;
        for &(u, _) in g.incident(root) {
            for &(w, _) in g.incident(root) {
                if u < w && g.incident(u).iter().any(|&(x, _)| x == w) {
                    triangles += 1;
                }
            }
        }
        let mut key = triangles;
        for c in counts {
            key = key * 64 + c;
        }
        profiles.push(key);
    }
    profiles.sort_unstable();
    profiles
}

fn mask_to_set(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1))
}
