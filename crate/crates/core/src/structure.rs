//! Classical structural primitives: reachability, degrees, cut vertices,
//! connectivity, circumference and shortest-path distances.

use crate::error::{Error, Result};
use crate::graph::{mask_below, Edge, ExtLength, Graph, Vertex, VertexSet};

/// Vertices reachable from `start` without leaving `within`.
pub(crate) fn reach(g: &Graph, start: Vertex, within: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in VertexSet::from_bits(frontier) {
            next |= g.row(v);
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// True iff the subgraph induced on `set` is connected (the empty set counts
/// as connected).
pub(crate) fn induces_connected(g: &Graph, set: u64) -> bool {
    set == 0 || reach(g, set.trailing_zeros() as usize, set) == set
}

pub fn is_connected(g: &Graph) -> bool {
    induces_connected(g, mask_below(g.n()))
}

/// Connected components, ordered by their smallest vertex.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let mut left = mask_below(g.n());
    let mut out = Vec::new();
    while left != 0 {
        let c = reach(g, left.trailing_zeros() as usize, left);
        out.push(VertexSet::from_bits(c));
        left &= !c;
    }
    out
}

pub fn min_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).min().unwrap_or(0)
}

pub fn max_degree(g: &Graph) -> usize {
    (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0)
}

pub fn is_complete(g: &Graph) -> bool {
    min_degree(g) + 1 == g.n()
}

pub fn is_tree(g: &Graph) -> bool {
    g.edge_count() + 1 == g.n() && is_connected(g)
}

/// Connected with maximum degree at most two and no cycle.
pub fn is_path(g: &Graph) -> bool {
    is_tree(g) && max_degree(g) <= 2
}

pub fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && is_connected(g) && (0..g.n()).all(|v| g.degree(v) == 2)
}

pub fn leaves(g: &Graph) -> VertexSet {
    (0..g.n()).filter(|&v| g.degree(v) == 1).collect()
}

/// Articulation points of a connected graph (lowpoint DFS).
pub fn cut_vertices(g: &Graph) -> Result<VertexSet> {
    if !is_connected(g) {
        return Err(Error::domain("cut_vertices requires a connected graph"));
    }
    let n = g.n();
    let mut disc = vec![0usize; n];
    let mut low = vec![0usize; n];
    let mut cuts = 0u64;
    let mut timer = 1;
    // (vertex, parent, unexplored neighbours)
    let mut stack: Vec<(Vertex, Option<Vertex>, u64)> = Vec::with_capacity(n);
    disc[0] = timer;
    low[0] = timer;
    stack.push((0, None, g.row(0)));
    let mut root_children = 0;
    while let Some(top) = stack.last_mut() {
        let (v, parent, pending) = *top;
        if pending != 0 {
            let w = pending.trailing_zeros() as usize;
            top.2 &= pending - 1;
            if disc[w] == 0 {
                timer += 1;
                disc[w] = timer;
                low[w] = timer;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((w, Some(v), g.row(w)));
            } else if Some(w) != parent {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(p) = parent {
                low[p] = low[p].min(low[v]);
                if p != 0 && low[v] >= disc[p] {
                    cuts |= 1 << p;
                }
            }
        }
    }
    if root_children > 1 {
        cuts |= 1;
    }
    Ok(VertexSet::from_bits(cuts))
}

/// Unit-capacity max-flow on a dense residual matrix.
struct FlowNetwork {
    size: usize,
    cap: Vec<u32>,
}

impl FlowNetwork {
    fn new(size: usize) -> Self {
        FlowNetwork {
            size,
            cap: vec![0; size * size],
        }
    }

    fn add(&mut self, from: usize, to: usize, c: u32) {
        self.cap[from * self.size + to] += c;
    }

    /// Augments until `limit` units flow or no augmenting path remains.
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let size = self.size;
        let mut flow = 0;
        let mut prev = vec![usize::MAX; size];
        let mut queue = Vec::with_capacity(size);
        while flow < limit {
            prev.iter_mut().for_each(|p| *p = usize::MAX);
            prev[source] = source;
            queue.clear();
            queue.push(source);
            let mut head = 0;
            while head < queue.len() && prev[sink] == usize::MAX {
                let u = queue[head];
                head += 1;
                for (w, p) in prev.iter_mut().enumerate() {
                    if *p == usize::MAX && self.cap[u * size + w] > 0 {
                        *p = u;
                        queue.push(w);
                    }
                }
            }
            if prev[sink] == usize::MAX {
                break;
            }
            let mut w = sink;
            while w != source {
                let u = prev[w];
                self.cap[u * size + w] -= 1;
                self.cap[w * size + u] += 1;
                w = u;
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths for
/// non-adjacent `s`, `t` (Menger), capped at `limit`.
fn local_vertex_connectivity(g: &Graph, s: Vertex, t: Vertex, limit: usize) -> usize {
    let n = g.n();
    let big = n as u32;
    // v_in = 2v, v_out = 2v + 1
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        net.add(2 * v, 2 * v + 1, c);
    }
    for (u, v) in g.edges() {
        net.add(2 * u + 1, 2 * v, big);
        net.add(2 * v + 1, 2 * u, big);
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// Vertex connectivity κ. Complete graphs get `n - 1`; disconnected graphs 0.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if is_complete(g) {
        return n - 1;
    }
    if !is_connected(g) {
        return 0;
    }
    let mut best = min_degree(g);
    for s in 0..n {
        for t in s + 1..n {
            if best == 0 {
                return 0;
            }
            if !g.has_edge(s, t) {
                best = best.min(local_vertex_connectivity(g, s, t, best));
            }
        }
    }
    best
}

/// Edge connectivity λ; 0 for disconnected graphs and for `K_1`.
pub fn edge_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n == 1 || !is_connected(g) {
        return 0;
    }
    let mut best = min_degree(g);
    for t in 1..n {
        let mut net = FlowNetwork::new(n);
        for (u, v) in g.edges() {
            net.add(u, v, 1);
            net.add(v, u, 1);
        }
        best = best.min(net.max_flow(0, t, best));
    }
    best
}

const CIRCUMFERENCE_DP_MAX: usize = 20;

/// Length of a longest cycle; 0 for acyclic graphs.
pub fn circumference(g: &Graph) -> usize {
    if g.edge_count() + components(g).len() == g.n() {
        return 0;
    }
    let mut best = 0;
    for s in 0..g.n() {
        let above = mask_below(g.n()) & !mask_below(s + 1);
        // cycles whose smallest vertex is `s`
        let room = above.count_ones() as usize + 1;
        if room <= best {
            break;
        }
        let len = if g.n() <= CIRCUMFERENCE_DP_MAX {
            longest_cycle_through_min_dp(g, s, above)
        } else {
            let mut best_here = 0;
            longest_cycle_dfs(g, s, s, 1 << s, above, 1, &mut best_here);
            best_here
        };
        best = best.max(len);
    }
    best
}

/// Subset DP: `ends[mask]` holds every `v` such that some path from `s`
/// covers exactly `mask ∪ {s}` and ends at `v`. Masks are compressed to the
/// vertices above `s`.
fn longest_cycle_through_min_dp(g: &Graph, s: Vertex, above: u64) -> usize {
    let verts: Vec<Vertex> = VertexSet::from_bits(above).to_vec();
    let m = verts.len();
    if m < 2 {
        return 0;
    }
    let mut local_row = vec![0u32; m];
    for (i, &u) in verts.iter().enumerate() {
        for (j, &w) in verts.iter().enumerate() {
            if g.has_edge(u, w) {
                local_row[i] |= 1 << j;
            }
        }
    }
    let closes: u32 = (0..m).filter(|&i| g.has_edge(s, verts[i])).fold(0, |a, i| a | 1 << i);
    let mut ends = vec![0u32; 1 << m];
    for i in 0..m {
        if closes >> i & 1 == 1 {
            ends[1 << i] = 1 << i;
        }
    }
    let mut best = 0;
    for mask in 1usize..1 << m {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        let size = mask.count_ones() as usize;
        if size >= 2 && e & closes != 0 {
            best = best.max(size + 1);
        }
        let mut rest = e;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut ext = local_row[i] & !(mask as u32);
            while ext != 0 {
                let j = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                ends[mask | 1 << j] |= 1 << j;
            }
        }
    }
    best
}

fn longest_cycle_dfs(
    g: &Graph,
    s: Vertex,
    v: Vertex,
    used: u64,
    above: u64,
    len: usize,
    best: &mut usize,
) {
    if len >= 3 && g.has_edge(v, s) {
        *best = (*best).max(len);
    }
    if *best == above.count_ones() as usize + 1 {
        return;
    }
    for w in VertexSet::from_bits(g.row(v) & above & !used) {
        longest_cycle_dfs(g, s, w, used | 1 << w, above, len + 1, best);
    }
}

/// Edges whose removal disconnects their component.
pub fn bridges(g: &Graph) -> Vec<Edge> {
    g.edges()
        .filter(|&(u, v)| {
            let mut seen = 1u64 << u;
            let mut frontier = seen;
            while frontier != 0 {
                let mut next = 0;
                for w in VertexSet::from_bits(frontier) {
                    let mut row = g.row(w);
                    if w == u {
                        row &= !(1 << v);
                    }
                    next |= row;
                }
                next &= !seen;
                seen |= next;
                frontier = next;
            }
            seen >> v & 1 == 0
        })
        .collect()
}

/// Shortest-path lengths between every pair of vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub const UNREACHABLE: u32 = u32::MAX;

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> ExtLength {
        match self.d[u * self.n + v] {
            Self::UNREACHABLE => ExtLength::Infinite,
            x => ExtLength::Finite(x as u64),
        }
    }

    /// Raw hop count, `UNREACHABLE` across components.
    pub fn raw(&self, u: Vertex, v: Vertex) -> u32 {
        self.d[u * self.n + v]
    }
}

/// All-pairs distances by layered breadth-first search.
pub fn pairwise_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![DistanceMatrix::UNREACHABLE; n * n];
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        let mut seen = 1u64 << s;
        let mut frontier = seen;
        let mut layer = 0;
        while frontier != 0 {
            for v in VertexSet::from_bits(frontier) {
                row[v] = layer;
            }
            let mut next = 0;
            for v in VertexSet::from_bits(frontier) {
                next |= g.row(v);
            }
            next &= !seen;
            seen |= next;
            frontier = next;
            layer += 1;
        }
    }
    DistanceMatrix { n, d }
}
