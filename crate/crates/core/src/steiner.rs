//! Exact Steiner distances and Steiner k-eccentricity, radius and diameter.
//!
//! Two engines share the same Dreyfus-Wagner recurrence over terminal
//! subsets:
//! - a per-query solver (any `n`, at most [`MAX_TERMINALS`] terminals) that
//!   can also rebuild an optimal tree, and
//! - [`SteinerTable`], which treats every vertex as a terminal and yields
//!   `d(S)` for all `2^n` subsets at once (`n <= 16`).
//!
//! [`steiner_distance_oracle`] is deliberately unrelated to both: it scans
//! vertex supersets of `S` for the smallest connected induced subgraph.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{k_subsets, Edge, ExtLength, Graph, Vertex, VertexSet};
use crate::structure::{induces_connected, is_connected, pairwise_distances, DistanceMatrix};

/// Largest terminal set accepted by the per-query solver.
pub const MAX_TERMINALS: usize = 16;
/// Largest order handled by [`SteinerTable`] and the superset oracle.
pub const TABLE_MAX_ORDER: usize = 16;

const INF: u32 = u32::MAX / 4;

#[derive(Clone, Debug)]
pub struct SteinerQuery<'g> {
    pub graph: &'g Graph,
    pub terminals: VertexSet,
}

impl<'g> SteinerQuery<'g> {
    pub fn new(graph: &'g Graph, terminals: VertexSet) -> Result<Self> {
        graph.check_set(terminals)?;
        Ok(SteinerQuery { graph, terminals })
    }

    pub fn distance(&self) -> Result<ExtLength> {
        steiner_distance(self.graph, self.terminals)
    }

    pub fn tree(&self) -> Result<Option<Vec<Edge>>> {
        steiner_tree(self.graph, self.terminals)
    }
}

/// Dreyfus-Wagner run for one terminal list. The last terminal is the root;
/// the final layer is evaluated only there.
struct DwRun<'a> {
    n: usize,
    q: usize,
    terms: &'a [Vertex],
    dp: Vec<u32>,
    via: Vec<u8>,
    split: Vec<u32>,
}

fn hop(dm: &DistanceMatrix, u: Vertex, v: Vertex) -> u32 {
    match dm.raw(u, v) {
        DistanceMatrix::UNREACHABLE => INF,
        d => d,
    }
}

impl<'a> DwRun<'a> {
    fn solve(dm: &DistanceMatrix, terms: &'a [Vertex], record: bool) -> (u32, DwRun<'a>) {
        let n = dm.n();
        let q = terms.len() - 1;
        let root = terms[q];
        let layers = 1usize << q;
        let mut run = DwRun {
            n,
            q,
            terms,
            dp: vec![INF; layers * n],
            via: if record { vec![0; layers * n] } else { Vec::new() },
            split: if record { vec![0; layers * n] } else { Vec::new() },
        };
        for (i, &t) in terms[..q].iter().enumerate() {
            for v in 0..n {
                run.dp[(1 << i) * n + v] = hop(dm, t, v);
            }
        }
        if q == 1 {
            return (run.dp[n + root], run);
        }
        let full = layers - 1;
        let mut merged = vec![INF; n];
        let mut msplit = vec![0u32; n];
        for d in 3..layers {
            if d.count_ones() < 2 {
                continue;
            }
            let low = d & d.wrapping_neg();
            let rest = d ^ low;
            merged.fill(INF);
            let mut sub = rest;
            loop {
                sub = (sub.wrapping_sub(1)) & rest;
                let e = sub | low;
                let f = d ^ e;
                let (pe, pf) = (&run.dp[e * n..(e + 1) * n], &run.dp[f * n..(f + 1) * n]);
                for u in 0..n {
                    let c = pe[u] + pf[u];
                    if c < merged[u] {
                        merged[u] = c;
                        msplit[u] = e as u32;
                    }
                }
                if sub == 0 {
                    break;
                }
            }
            if record {
                run.split[d * n..(d + 1) * n].copy_from_slice(&msplit);
            }
            let targets = if d == full { root..root + 1 } else { 0..n };
            for v in targets {
                let mut best = INF;
                let mut arg = 0;
                for (u, &m) in merged.iter().enumerate() {
                    let c = (m + hop(dm, u, v)).min(INF);
                    if c < best {
                        best = c;
                        arg = u;
                    }
                }
                run.dp[d * n + v] = best;
                if record {
                    run.via[d * n + v] = arg as u8;
                }
            }
        }
        (run.dp[full * n + root], run)
    }

    fn rebuild(&self, g: &Graph, dm: &DistanceMatrix, d: usize, v: Vertex, out: &mut BTreeSet<Edge>) {
        if d.count_ones() == 1 {
            shortest_path_edges(g, dm, self.terms[d.trailing_zeros() as usize], v, out);
            return;
        }
        let u = self.via[d * self.n + v] as usize;
        shortest_path_edges(g, dm, u, v, out);
        let e = self.split[d * self.n + u] as usize;
        self.rebuild(g, dm, e, u, out);
        self.rebuild(g, dm, d ^ e, u, out);
    }

    fn root(&self) -> Vertex {
        self.terms[self.q]
    }
}

/// Walks from `b` back to `a`, always stepping to the smallest neighbour one
/// layer closer to `a`.
fn shortest_path_edges(g: &Graph, dm: &DistanceMatrix, a: Vertex, b: Vertex, out: &mut BTreeSet<Edge>) {
    let mut cur = b;
    while cur != a {
        let want = dm.raw(a, cur) - 1;
        let next = g
            .neighbors(cur)
            .iter()
            .find(|&w| dm.raw(a, w) == want)
            .expect("a shortest path step exists");
        out.insert((cur.min(next), cur.max(next)));
        cur = next;
    }
}

fn trivial_or_disconnected(dm: &DistanceMatrix, s: VertexSet) -> Option<ExtLength> {
    let mut it = s.iter();
    let Some(first) = it.next() else {
        return Some(ExtLength::Finite(0));
    };
    let mut any = false;
    for v in it {
        any = true;
        if dm.raw(first, v) == DistanceMatrix::UNREACHABLE {
            return Some(ExtLength::Infinite);
        }
    }
    (!any).then_some(ExtLength::Finite(0))
}

fn check_terminal_count(s: VertexSet) -> Result<()> {
    if s.len() > MAX_TERMINALS {
        return Err(Error::capacity(format!(
            "{} terminals exceed the solver limit of {MAX_TERMINALS}",
            s.len()
        )));
    }
    Ok(())
}

/// `d(S)` with a precomputed distance matrix.
pub fn steiner_distance_with(dm: &DistanceMatrix, s: VertexSet) -> Result<ExtLength> {
    if let Some(v) = trivial_or_disconnected(dm, s) {
        return Ok(v);
    }
    if s.len() == 2 {
        let t = s.to_vec();
        return Ok(dm.get(t[0], t[1]));
    }
    check_terminal_count(s)?;
    let terms = s.to_vec();
    let (cost, _) = DwRun::solve(dm, &terms, false);
    Ok(ExtLength::Finite(cost as u64))
}

/// Steiner distance `d(S)`: the fewest edges in a connected subgraph whose
/// vertex set contains `S`. `|S| <= 1` gives 0; terminals spread over
/// several components give `Infinite`.
pub fn steiner_distance(g: &Graph, s: VertexSet) -> Result<ExtLength> {
    g.check_set(s)?;
    steiner_distance_with(&pairwise_distances(g), s)
}

/// An optimal Steiner tree for `S` as a sorted edge list, or `None` when the
/// terminals are not in one component. Ties between optimal trees are broken
/// by always taking the first minimiser in vertex and subset order, so the
/// output is deterministic.
pub fn steiner_tree(g: &Graph, s: VertexSet) -> Result<Option<Vec<Edge>>> {
    g.check_set(s)?;
    let dm = pairwise_distances(g);
    steiner_tree_with(g, &dm, s)
}

pub(crate) fn steiner_tree_with(g: &Graph, dm: &DistanceMatrix, s: VertexSet) -> Result<Option<Vec<Edge>>> {
    match trivial_or_disconnected(dm, s) {
        Some(ExtLength::Infinite) => return Ok(None),
        Some(_) => return Ok(Some(Vec::new())),
        None => {}
    }
    check_terminal_count(s)?;
    let terms = s.to_vec();
    let (cost, run) = DwRun::solve(dm, &terms, true);
    let mut edges = BTreeSet::new();
    run.rebuild(g, dm, (1 << run.q) - 1, run.root(), &mut edges);
    assert_eq!(edges.len(), cost as usize, "rebuilt tree size disagrees with its cost");
    Ok(Some(edges.into_iter().collect()))
}

/// Three-terminal distance via the median formula
/// `min_m d(m,a) + d(m,b) + d(m,c)`.
pub fn steiner_distance_3(g: &Graph, a: Vertex, b: Vertex, c: Vertex) -> Result<ExtLength> {
    for v in [a, b, c] {
        g.check_vertex(v)?;
    }
    Ok(median_distance(&pairwise_distances(g), a, b, c))
}

pub fn median_distance(dm: &DistanceMatrix, a: Vertex, b: Vertex, c: Vertex) -> ExtLength {
    (0..dm.n())
        .map(|m| dm.get(m, a) + dm.get(m, b) + dm.get(m, c))
        .min()
        .unwrap_or(ExtLength::Infinite)
}

/// Brute-force Steiner distance: the smallest `W` containing `S` whose
/// induced subgraph is connected has `d(S) = |W| - 1`.
pub fn steiner_distance_oracle(g: &Graph, s: VertexSet) -> Result<ExtLength> {
    let n = g.n();
    if n > TABLE_MAX_ORDER {
        return Err(Error::capacity(format!(
            "superset oracle supports n <= {TABLE_MAX_ORDER}, got {n}"
        )));
    }
    g.check_set(s)?;
    if s.len() <= 1 {
        return Ok(ExtLength::Finite(0));
    }
    let free: Vec<Vertex> = g.vertices().difference(s).to_vec();
    for extra in 0..=free.len() {
        for pick in k_subsets(free.len(), extra) {
            let w = pick.iter().fold(s.bits(), |acc, i| acc | 1 << free[i]);
            if induces_connected(g, w) {
                return Ok(ExtLength::Finite((s.len() + extra - 1) as u64));
            }
        }
    }
    Ok(ExtLength::Infinite)
}

type Lane = [u8; 16];
const INF8: u8 = 100;

/// Steiner distances for every vertex subset of a graph with `n <= 16`.
#[derive(Clone, Debug)]
pub struct SteinerTable {
    n: usize,
    /// `d(S)` indexed by the bitmask of `S`; [`INF8`] marks infinity.
    dist: Vec<u8>,
}

impl SteinerTable {
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.n();
        if n > TABLE_MAX_ORDER {
            return Err(Error::capacity(format!(
                "subset table supports n <= {TABLE_MAX_ORDER}, got {n}"
            )));
        }
        let dm = pairwise_distances(g);
        let mut drow = vec![[INF8; 16]; n];
        for (u, row) in drow.iter_mut().enumerate() {
            for (v, cell) in row.iter_mut().enumerate().take(n) {
                let d = dm.raw(u, v);
                if d != DistanceMatrix::UNREACHABLE {
                    *cell = d as u8;
                }
            }
        }
        let size = 1usize << n;
        let mut dp: Vec<Lane> = vec![[INF8; 16]; size];
        let mut dist = vec![0u8; size];
        for (i, row) in drow.iter().enumerate() {
            dp[1 << i] = *row;
        }
        for d in 3..size {
            if d & (d - 1) == 0 {
                continue;
            }
            let low = d & d.wrapping_neg();
            let rest = d ^ low;
            let mut merged: Lane = [u8::MAX; 16];
            let mut sub = rest;
            loop {
                sub = (sub.wrapping_sub(1)) & rest;
                let e = sub | low;
                let (a, b) = (&dp[e], &dp[d ^ e]);
                for i in 0..16 {
                    merged[i] = merged[i].min(a[i] + b[i]);
                }
                if sub == 0 {
                    break;
                }
            }
            let mut out: Lane = [INF8; 16];
            for (u, row) in drow.iter().enumerate() {
                let m = merged[u].min(INF8);
                for i in 0..16 {
                    out[i] = out[i].min(m + row[i]);
                }
            }
            dp[d] = out;
            dist[d] = out[low.trailing_zeros() as usize];
        }
        Ok(SteinerTable { n, dist })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn distance(&self, s: VertexSet) -> ExtLength {
        assert!(s.bits() >> self.n == 0, "terminal outside the table");
        match self.dist[s.bits() as usize] {
            INF8 => ExtLength::Infinite,
            d => ExtLength::Finite(d as u64),
        }
    }

    pub(crate) fn raw(&self, bits: usize) -> u8 {
        self.dist[bits]
    }
}

/// Steiner eccentricities, radii and diameters for every `k` in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinerProfile {
    n: usize,
    /// `ecc[k * n + v]`, with [`INF8`] marking infinity.
    ecc: Vec<u8>,
}

fn lift(x: u8) -> ExtLength {
    if x >= INF8 {
        ExtLength::Infinite
    } else {
        ExtLength::Finite(x as u64)
    }
}

impl SteinerProfile {
    pub fn from_table(t: &SteinerTable) -> Self {
        let n = t.n;
        let mut ecc = vec![0u8; (n + 1) * n];
        for s in 1..1usize << n {
            let k = s.count_ones() as usize;
            let d = t.raw(s);
            let row = &mut ecc[k * n..(k + 1) * n];
            let mut bits = s;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if d > row[v] {
                    row[v] = d;
                }
            }
        }
        SteinerProfile { n, ecc }
    }

    pub fn new(g: &Graph) -> Result<Self> {
        Ok(Self::from_table(&SteinerTable::new(g)?))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn row(&self, k: usize) -> &[u8] {
        assert!((1..=self.n).contains(&k), "k out of range");
        &self.ecc[k * self.n..(k + 1) * self.n]
    }

    pub fn ecc(&self, k: usize, v: Vertex) -> ExtLength {
        lift(self.row(k)[v])
    }

    pub fn eccentricities(&self, k: usize) -> Vec<ExtLength> {
        self.row(k).iter().map(|&x| lift(x)).collect()
    }

    pub fn sdiam(&self, k: usize) -> ExtLength {
        lift(self.row(k).iter().copied().max().unwrap_or(0))
    }

    pub fn srad(&self, k: usize) -> ExtLength {
        lift(self.row(k).iter().copied().min().unwrap_or(0))
    }
}

fn check_k(g: &Graph, k: usize) -> Result<()> {
    if !(1..=g.n()).contains(&k) {
        return Err(Error::domain(format!("k = {k} outside 1..={}", g.n())));
    }
    Ok(())
}

/// `e_k(v)`: the largest `d(S)` over `k`-sets `S` containing `v`.
pub fn steiner_ecc(g: &Graph, v: Vertex, k: usize) -> Result<ExtLength> {
    g.check_vertex(v)?;
    check_k(g, k)?;
    if g.n() <= TABLE_MAX_ORDER {
        return Ok(SteinerProfile::new(g)?.ecc(k, v));
    }
    let dm = pairwise_distances(g);
    let others: Vec<Vertex> = (0..g.n()).filter(|&u| u != v).collect();
    let mut best = ExtLength::Finite(0);
    for pick in k_subsets(others.len(), k - 1) {
        let s: VertexSet = pick.iter().map(|i| others[i]).collect::<VertexSet>().with(v);
        best = best.max(steiner_distance_with(&dm, s)?);
        if best == ExtLength::Infinite {
            break;
        }
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub terminals: VertexSet,
    pub edges: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SteinerReport {
    pub k: usize,
    pub per_vertex_ecc: Vec<ExtLength>,
    pub sdiam: ExtLength,
    pub srad: ExtLength,
    /// A tree realising `sdiam`; absent when `sdiam` is infinite.
    pub witness: Option<Witness>,
}

/// Full Steiner `k` report. The witness terminal set is the first `k`-set
/// in colex order attaining the diameter.
pub fn steiner_report(g: &Graph, k: usize) -> Result<SteinerReport> {
    check_k(g, k)?;
    let n = g.n();
    let dm = pairwise_distances(g);
    let (per_vertex_ecc, argmax) = if n <= TABLE_MAX_ORDER {
        let table = SteinerTable::new(g)?;
        let profile = SteinerProfile::from_table(&table);
        let sdiam = profile.sdiam(k);
        let arg = k_subsets(n, k).find(|&s| table.distance(s) == sdiam);
        (profile.eccentricities(k), arg)
    } else {
        let mut ecc = vec![ExtLength::Finite(0); n];
        let mut best: Option<(ExtLength, VertexSet)> = None;
        for s in k_subsets(n, k) {
            let d = steiner_distance_with(&dm, s)?;
            for v in s {
                ecc[v] = ecc[v].max(d);
            }
            if best.is_none_or(|(b, _)| d > b) {
                best = Some((d, s));
            }
        }
        (ecc, best.map(|(_, s)| s))
    };
    let sdiam = per_vertex_ecc.iter().copied().max().expect("n >= 1");
    let srad = per_vertex_ecc.iter().copied().min().expect("n >= 1");
    let witness = match (sdiam, argmax) {
        (ExtLength::Finite(_), Some(terminals)) => {
            let edges = steiner_tree_with(g, &dm, terminals)?.expect("finite distance has a tree");
            Some(Witness { terminals, edges })
        }
        _ => None,
    };
    Ok(SteinerReport {
        k,
        per_vertex_ecc,
        sdiam,
        srad,
        witness,
    })
}

/// Minimum distance from `v` to a vertex of the subtree given by `tree`.
pub fn distance_to_subtree(g: &Graph, v: Vertex, tree: &[Edge]) -> Result<ExtLength> {
    g.check_vertex(v)?;
    if tree.is_empty() {
        return Err(Error::domain("subtree must have at least one edge"));
    }
    let mut verts = VertexSet::EMPTY;
    let mut seen = BTreeSet::new();
    for &(a, b) in tree {
        g.check_vertex(a)?;
        g.check_vertex(b)?;
        if !g.has_edge(a, b) {
            return Err(Error::domain(format!("edge {a}-{b} is not in the graph")));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(Error::domain(format!("edge {a}-{b} listed twice")));
        }
        verts = verts.with(a).with(b);
    }
    let sub = Graph::from_edges(g.n(), &seen.iter().copied().collect::<Vec<_>>())?;
    if seen.len() + 1 != verts.len() || !induces_connected(&sub, verts.bits()) {
        return Err(Error::domain("edge list is not a tree"));
    }
    let dm = pairwise_distances(g);
    Ok(verts.iter().map(|u| dm.get(v, u)).min().expect("nonempty"))
}

/// Lazily computed Steiner diameters of one graph.
///
/// Graphs with `n <= 16` get a full [`SteinerProfile`]; larger graphs are
/// handled one `k` at a time by the per-query solver.
#[derive(Debug)]
pub struct Diameters {
    graph: Graph,
    connected: bool,
    profile: std::cell::OnceCell<(SteinerTable, SteinerProfile)>,
    by_k: std::cell::RefCell<std::collections::BTreeMap<usize, ExtLength>>,
}

impl Diameters {
    pub fn new(graph: Graph) -> Self {
        let connected = is_connected(&graph);
        Diameters {
            graph,
            connected,
            profile: Default::default(),
            by_k: Default::default(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    fn tables(&self) -> Option<&(SteinerTable, SteinerProfile)> {
        if self.graph.n() > TABLE_MAX_ORDER {
            return None;
        }
        Some(self.profile.get_or_init(|| {
            let t = SteinerTable::new(&self.graph).expect("order checked above");
            let p = SteinerProfile::from_table(&t);
            (t, p)
        }))
    }

    /// The full profile, or `None` for graphs above the table limit.
    pub fn profile(&self) -> Option<&SteinerProfile> {
        self.tables().map(|(_, p)| p)
    }

    /// All subset distances, or `None` for graphs above the table limit.
    pub fn table(&self) -> Option<&SteinerTable> {
        self.tables().map(|(t, _)| t)
    }

    pub fn sdiam(&self, k: usize) -> Result<ExtLength> {
        check_k(&self.graph, k)?;
        let n = self.graph.n();
        if k == 1 {
            return Ok(ExtLength::Finite(0));
        }
        if !self.connected {
            return Ok(ExtLength::Infinite);
        }
        if k == n {
            return Ok(ExtLength::Finite(n as u64 - 1));
        }
        if let Some(p) = self.profile() {
            return Ok(p.sdiam(k));
        }
        if let Some(&d) = self.by_k.borrow().get(&k) {
            return Ok(d);
        }
        let dm = pairwise_distances(&self.graph);
        let top = ExtLength::Finite(n as u64 - 1);
        let mut best = ExtLength::Finite(0);
        for s in k_subsets(n, k) {
            best = best.max(steiner_distance_with(&dm, s)?);
            if best == top {
                break;
            }
        }
        self.by_k.borrow_mut().insert(k, best);
        Ok(best)
    }
}
