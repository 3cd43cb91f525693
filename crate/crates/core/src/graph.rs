//! Dense simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` row per vertex, so neighbourhood and
//! subset operations are single word operations.

use std::fmt;
use std::ops::{Add, Mul};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

pub type Vertex = usize;

/// An undirected edge, always stored with `.0 < .1`.
pub type Edge = (Vertex, Vertex);

pub(crate) fn mask_below(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertex indices below 64, backed by a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet(mask_below(n))
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: Vertex) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[must_use]
    pub fn with(self, v: Vertex) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    #[must_use]
    pub fn without(self, v: Vertex) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<Vertex> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl IntoIterator for VertexSet {
    type Item = Vertex;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Iterates all `k`-element subsets of `0..n` in colexicographic order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let limit = if n >= 64 { u64::MAX } else { 1u64 << n };
    let mut next = if k > n {
        None
    } else if k == 0 {
        Some(0u64)
    } else {
        Some(mask_below(k))
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let nxt = (((r ^ cur) >> 2) / c) | r;
                (n >= 64 || nxt < limit).then_some(nxt)
            }
        };
        Some(VertexSet(cur))
    })
}

/// A length that may be infinite. `Infinite` is greater than every finite
/// value and absorbs addition and multiplication.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtLength {
    Finite(u64),
    Infinite,
}

impl ExtLength {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtLength::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            ExtLength::Finite(v) => Some(v),
            ExtLength::Infinite => None,
        }
    }
}

impl From<u64> for ExtLength {
    fn from(v: u64) -> Self {
        ExtLength::Finite(v)
    }
}

impl Add for ExtLength {
    type Output = ExtLength;

    fn add(self, rhs: ExtLength) -> ExtLength {
        match (self, rhs) {
            (ExtLength::Finite(a), ExtLength::Finite(b)) => ExtLength::Finite(a + b),
            _ => ExtLength::Infinite,
        }
    }
}

impl Mul for ExtLength {
    type Output = ExtLength;

    fn mul(self, rhs: ExtLength) -> ExtLength {
        match (self, rhs) {
            (ExtLength::Finite(a), ExtLength::Finite(b)) => ExtLength::Finite(a * b),
            _ => ExtLength::Infinite,
        }
    }
}

impl PartialEq<u64> for ExtLength {
    fn eq(&self, other: &u64) -> bool {
        *self == ExtLength::Finite(*other)
    }
}

impl fmt::Display for ExtLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtLength::Finite(v) => write!(f, "{v}"),
            ExtLength::Infinite => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for ExtLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Finite values serialize as JSON numbers, `Infinite` as the string `"inf"`.
impl Serialize for ExtLength {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtLength::Finite(v) => s.serialize_u64(*v),
            ExtLength::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            n,
            rows: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self> {
        let mut b = GraphBuilder::new(n)?;
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Builds a graph from raw adjacency rows, validating symmetry and
    /// the absence of loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let valid = mask_below(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !valid != 0 {
                return Err(Error::param(format!("row {u} references a vertex >= {n}")));
            }
            if row >> u & 1 == 1 {
                return Err(Error::param(format!("loop at vertex {u}")));
            }
            for v in VertexSet(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::param(format!("asymmetric adjacency {u}-{v}")));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: Vertex) -> VertexSet {
        VertexSet(self.rows[v])
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.rows[u] & !mask_below(u + 1)).iter().map(move |v| (u, v))
        })
    }

    pub(crate) fn row(&self, v: Vertex) -> u64 {
        self.rows[v]
    }

    pub fn complement(&self) -> Graph {
        let all = mask_below(self.n);
        let rows = (0..self.n)
            .map(|v| !self.rows[v] & all & !(1 << v))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Subgraph induced on `keep`, relabelled to `0..keep.len()` in
    /// increasing order of the original labels.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let map: Vec<Vertex> = keep.to_vec();
        let rows = map
            .iter()
            .map(|&u| {
                map.iter()
                    .enumerate()
                    .filter(|&(_, &v)| self.has_edge(u, v))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Graph {
            n: map.len(),
            rows,
        }
    }

    /// Returns `Err` unless `v` is a vertex of this graph.
    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "vertex {v} out of range for graph of order {}",
                self.n
            )))
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "vertex set {s:?} not contained in 0..{}",
                self.n
            )))
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::param("graph must have at least one vertex"));
    }
    if n > MAX_VERTICES {
        return Err(Error::capacity(format!(
            "graph order {n} exceeds {MAX_VERTICES}"
        )));
    }
    Ok(())
}

/// Mutable staging area for constructing a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    rows: Vec<u64>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(GraphBuilder {
            n,
            rows: vec![0; n],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<&mut Self> {
        if u >= self.n || v >= self.n {
            return Err(Error::param(format!(
                "edge {u}-{v} out of range for order {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::param(format!("loop at vertex {u}")));
        }
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        Ok(self)
    }

    pub(crate) fn link(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            rows: self.rows,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_length_ordering_and_arithmetic() {
        let f = ExtLength::Finite;
        assert!(f(3) < f(4));
        assert!(f(u64::MAX) < ExtLength::Infinite);
        assert_eq!(f(2) + f(3), f(5));
        assert_eq!(f(2) * f(3), f(6));
        assert_eq!(f(2) + ExtLength::Infinite, ExtLength::Infinite);
        assert_eq!(ExtLength::Infinite * f(0), ExtLength::Infinite);
        assert_eq!(serde_json::to_string(&ExtLength::Infinite).unwrap(), "\"inf\"");
        assert_eq!(serde_json::to_string(&f(7)).unwrap(), "7");
    }

    #[test]
    fn k_subsets_counts() {
        assert_eq!(k_subsets(5, 0).count(), 1);
        assert_eq!(k_subsets(5, 2).count(), 10);
        assert_eq!(k_subsets(5, 5).count(), 1);
        assert_eq!(k_subsets(5, 6).count(), 0);
        assert_eq!(k_subsets(64, 1).count(), 64);
        assert_eq!(k_subsets(64, 64).count(), 1);
        let v: Vec<u64> = k_subsets(4, 2).map(VertexSet::bits).collect();
        assert_eq!(v, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
    }

    #[test]
    fn rejects_loops_and_asymmetry() {
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::empty(0).is_err());
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn complement_and_induced() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let c = p3.complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 2)]);
        assert_eq!(c.complement(), p3);
        let sub = p3.induced(VertexSet::from_iter([1, 2]));
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }
}
