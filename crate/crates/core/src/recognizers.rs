//! Structural tests that predict small Steiner diameters without running
//! the Steiner engine.
//!
//! Only [`lem1_necessary_condition`] and [`lem2_circumference_bound`] touch
//! the metric side, because their statements are implications about it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ExtLength, Graph, Vertex, VertexSet};
use crate::steiner::Diameters;
use crate::structure::{circumference, is_complete, is_connected, is_path, is_tree, leaves, max_degree, min_degree};

fn require_connected(g: &Graph, what: &str) -> Result<()> {
    if !is_connected(g) {
        return Err(Error::domain(format!("{what} needs a connected graph")));
    }
    Ok(())
}

fn require_order(g: &Graph, min: usize, what: &str) -> Result<()> {
    if g.n() < min {
        return Err(Error::domain(format!("{what} needs n >= {min}, got {}", g.n())));
    }
    Ok(())
}

/// Some edge `uv` dominates: every vertex is `u`, `v`, or adjacent to one of
/// them. Same as containing a spanning double star.
pub fn has_spanning_double_star(g: &Graph) -> bool {
    let all = g.vertices().bits();
    g.edges().any(|(u, v)| {
        let closed = g.neighbors(u).bits() | g.neighbors(v).bits() | 1 << u | 1 << v;
        closed == all
    })
}

/// Which classical diameter values the structure predicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Sdiam2Prediction {
    pub one: bool,
    pub two: bool,
    pub n_minus_1: bool,
}

impl Sdiam2Prediction {
    /// Whether the predictions agree with an actual diameter value.
    pub fn consistent_with(&self, n: usize, sdiam2: ExtLength) -> bool {
        self.one == (sdiam2 == 1)
            && self.two == (sdiam2 == 2)
            && self.n_minus_1 == (sdiam2 == n as u64 - 1)
    }
}

pub fn classify_sdiam2(g: &Graph) -> Result<Sdiam2Prediction> {
    require_connected(g, "classify_sdiam2")?;
    let gc = g.complement();
    Ok(Sdiam2Prediction {
        one: is_complete(g),
        two: gc.edge_count() > 0 && !has_spanning_double_star(&gc),
        n_minus_1: is_path(g),
    })
}

/// `sdiam_3 = 2` exactly when the minimum degree is at least `n - 2`.
pub fn sdiam3_is_2(g: &Graph) -> Result<bool> {
    require_order(g, 3, "sdiam3_is_2")?;
    require_connected(g, "sdiam3_is_2")?;
    Ok(min_degree(g) + 2 >= g.n())
}

/// The complement has a triangle dominating every other vertex.
pub fn complement_has_spanning_triple_star(g: &Graph) -> Result<bool> {
    require_order(g, 4, "complement_has_spanning_triple_star")?;
    let gc = g.complement();
    let n = gc.n();
    let all = gc.vertices().bits();
    for u in 0..n {
        for v in gc.neighbors(u).iter().filter(|&v| v > u) {
            let common = gc.neighbors(u).bits() & gc.neighbors(v).bits();
            for w in VertexSet::from_bits(common).iter().filter(|&w| w > v) {
                let closed = gc.neighbors(u).bits() | gc.neighbors(v).bits() | gc.neighbors(w).bits();
                if closed | 1 << u | 1 << v | 1 << w == all {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// The complement has a path `u - v - w` such that every other vertex is
/// adjacent to `v` or to both `u` and `w`. This is the union of the five
/// attachment patterns of the H2 family.
pub fn complement_has_spanning_h2(g: &Graph) -> Result<bool> {
    require_order(g, 4, "complement_has_spanning_h2")?;
    let gc = g.complement();
    let all = gc.vertices().bits();
    for v in 0..gc.n() {
        let nv = gc.neighbors(v);
        for u in nv {
            for w in nv.iter().filter(|&w| w > u) {
                let covered = nv.bits() | (gc.neighbors(u).bits() & gc.neighbors(w).bits());
                if covered | 1 << u | 1 << v | 1 << w == all {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

pub fn sdiam3_is_3(g: &Graph) -> Result<bool> {
    require_order(g, 4, "sdiam3_is_3")?;
    require_connected(g, "sdiam3_is_3")?;
    Ok(max_degree(&g.complement()) >= 2
        && !complement_has_spanning_triple_star(g)?
        && !complement_has_spanning_h2(g)?)
}

/// Leg lengths of a spider, sorted ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SpiderParams {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

/// Leg lengths of a triangle with pendant paths, sorted ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleSpiderParams {
    pub p: usize,
    pub q: usize,
    pub r: usize,
}

fn sorted3(mut x: [usize; 3]) -> [usize; 3] {
    x.sort_unstable();
    x
}

/// Length of the pendant path starting with the edge `from - first`.
fn leg_length(g: &Graph, from: Vertex, first: Vertex) -> usize {
    let (mut prev, mut cur, mut len) = (from, first, 1);
    loop {
        let next = g.neighbors(cur).without(prev);
        match next.first() {
            Some(w) if next.len() == 1 => {
                prev = cur;
                cur = w;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// A path, or a tree with one vertex of degree 3 and all others of degree at
/// most 2. Paths of order `n >= 3` are reported as `(0, (n-1)/2, n/2)`.
pub fn recognize_spider(g: &Graph) -> Option<SpiderParams> {
    let n = g.n();
    if n < 3 || !is_tree(g) {
        return None;
    }
    let deg = g.degrees();
    if deg.iter().all(|&d| d <= 2) {
        return Some(SpiderParams {
            a: 0,
            b: (n - 1) / 2,
            c: n / 2,
        });
    }
    let hubs: Vec<Vertex> = (0..n).filter(|&v| deg[v] >= 3).collect();
    if hubs.len() != 1 || deg[hubs[0]] != 3 {
        return None;
    }
    let centre = hubs[0];
    let legs: Vec<usize> = g.neighbors(centre).iter().map(|w| leg_length(g, centre, w)).collect();
    let [a, b, c] = sorted3([legs[0], legs[1], legs[2]]);
    Some(SpiderParams { a, b, c })
}

/// A unicyclic graph whose cycle is a triangle with a (possibly empty)
/// pendant path at each corner.
pub fn recognize_triangle_spider(g: &Graph) -> Option<TriangleSpiderParams> {
    let n = g.n();
    if n < 3 || g.edge_count() != n || !is_connected(g) {
        return None;
    }
    // Peel leaves; what remains of a unicyclic graph is its cycle.
    let mut deg = g.degrees();
    let mut alive = g.vertices().bits();
    let mut stack: Vec<Vertex> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        alive &= !(1 << v);
        for w in VertexSet::from_bits(g.neighbors(v).bits() & alive) {
            deg[w] -= 1;
            if deg[w] == 1 {
                stack.push(w);
            }
        }
    }
    if alive.count_ones() != 3 {
        return None;
    }
    let tri = VertexSet::from_bits(alive);
    let mut legs = [0usize; 3];
    for (i, t) in tri.iter().enumerate() {
        let out = g.neighbors(t).difference(tri);
        if out.len() > 1 {
            return None;
        }
        if let Some(w) = out.first() {
            if (0..n).any(|v| !tri.contains(v) && g.degree(v) > 2) {
                return None;
            }
            legs[i] = leg_length(g, t, w);
        }
    }
    let [p, q, r] = sorted3(legs);
    Some(TriangleSpiderParams { p, q, r })
}

pub fn sdiam3_is_n_minus_1(g: &Graph) -> Result<bool> {
    require_order(g, 3, "sdiam3_is_n_minus_1")?;
    require_connected(g, "sdiam3_is_n_minus_1")?;
    Ok(recognize_spider(g).is_some() || recognize_triangle_spider(g).is_some())
}

/// Predicts `sdiam_k(T) = n - 1` for a tree `T`: true iff `T` has at most
/// `k` leaves.
pub fn tree_leaf_criterion(t: &Graph, k: usize) -> Result<bool> {
    if !is_tree(t) {
        return Err(Error::domain("tree_leaf_criterion needs a tree"));
    }
    if !(2..=t.n()).contains(&k) {
        return Err(Error::domain(format!("k = {k} outside 2..={}", t.n())));
    }
    Ok(leaves(t).len() <= k)
}

/// `sdiam_k(G) = k - 1` implies `delta(G) >= n - k + 1`.
pub fn lem1_necessary_condition(g: &Graph, k: usize) -> Result<bool> {
    require_connected(g, "lem1_necessary_condition")?;
    let d = Diameters::new(g.clone()).sdiam(k)?;
    Ok(lem1_holds(g, k, d))
}

pub(crate) fn lem1_holds(g: &Graph, k: usize, sdiam_k: ExtLength) -> bool {
    sdiam_k != (k as u64 - 1) || min_degree(g) + k > g.n()
}

/// Circumference at least 4 implies `sdiam_3(G) <= n - 2`.
pub fn lem2_circumference_bound(g: &Graph) -> Result<bool> {
    require_order(g, 5, "lem2_circumference_bound")?;
    require_connected(g, "lem2_circumference_bound")?;
    let d = Diameters::new(g.clone()).sdiam(3)?;
    Ok(lem2_holds(g, d))
}

pub(crate) fn lem2_holds(g: &Graph, sdiam3: ExtLength) -> bool {
    circumference(g) < 4 || sdiam3 <= ExtLength::Finite(g.n() as u64 - 2)
}

/// Steiner 3-diameter class. When several labels fit (small `n`), the
/// earlier variant wins.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Sdiam3Class {
    Two,
    Three,
    NMinus1,
    Other(ExtLength),
}

impl Sdiam3Class {
    pub fn from_value(n: usize, sdiam3: ExtLength) -> Self {
        if sdiam3 == 2 {
            Sdiam3Class::Two
        } else if sdiam3 == 3 {
            Sdiam3Class::Three
        } else if sdiam3 == n as u64 - 1 {
            Sdiam3Class::NMinus1
        } else {
            Sdiam3Class::Other(sdiam3)
        }
    }
}

/// Recognizer that identified a class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sdiam3Recognition {
    pub class: Sdiam3Class,
    pub recognizer: &'static str,
    pub spider: Option<SpiderParams>,
    pub triangle_spider: Option<TriangleSpiderParams>,
}

/// Runs the structural tests in class order. `None` means no test fired,
/// which predicts a value outside `{2, 3, n-1}`.
pub fn recognize_sdiam3(g: &Graph) -> Result<Option<Sdiam3Recognition>> {
    require_order(g, 3, "recognize_sdiam3")?;
    require_connected(g, "recognize_sdiam3")?;
    let spider = recognize_spider(g);
    let triangle_spider = recognize_triangle_spider(g);
    let hit = |class, recognizer| {
        Some(Sdiam3Recognition {
            class,
            recognizer,
            spider,
            triangle_spider,
        })
    };
    if sdiam3_is_2(g)? {
        return Ok(hit(Sdiam3Class::Two, "min-degree"));
    }
    if g.n() >= 4 && sdiam3_is_3(g)? {
        return Ok(hit(Sdiam3Class::Three, "complement-forbidden-subgraphs"));
    }
    if spider.is_some() {
        return Ok(hit(Sdiam3Class::NMinus1, "spider"));
    }
    if triangle_spider.is_some() {
        return Ok(hit(Sdiam3Class::NMinus1, "triangle-spider"));
    }
    Ok(None)
}
