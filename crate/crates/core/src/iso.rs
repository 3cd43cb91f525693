//! Isomorphism testing by backtracking with degree pruning.
//!
//! Intended for `n <= 10`; larger inputs work but may be slow on regular
//! graphs.

use crate::graph::Graph;

/// Per-vertex invariant: degree plus the sorted multiset of neighbour degrees.
fn signature(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let deg = g.degrees();
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| deg[u]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect()
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let sg = signature(g);
    let sh = signature(h);
    let mut a = sg.clone();
    let mut b = sh.clone();
    a.sort();
    b.sort();
    if a != b {
        return false;
    }
    // Map g's vertices most-constrained first: high degree, then index.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(sg[v].0));
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    extend(g, h, &sg, &sh, &order, 0, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    sg: &[(usize, Vec<usize>)],
    sh: &[(usize, Vec<usize>)],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..h.n() {
        if *used >> w & 1 == 1 || sg[v] != sh[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        *used |= 1 << w;
        if extend(g, h, sg, sh, order, depth + 1, map, used) {
            return true;
        }
        *used &= !(1 << w);
    }
    map[v] = usize::MAX;
    false
}
