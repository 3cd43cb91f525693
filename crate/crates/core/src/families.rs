//! Named graph families with fixed, documented vertex labellings.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, MAX_VERTICES};
use crate::graph6;

/// Attachment pattern of one extra vertex `x` in the H2 family, relative to
/// the base path `u - v - w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum H2Pattern {
    /// `x ~ u, v, w`
    Uvw,
    /// `x ~ u, v`
    Uv,
    /// `x ~ v, w`
    Vw,
    /// `x ~ u, w`
    Uw,
    /// `x ~ v`
    V,
}

impl H2Pattern {
    pub const ALL: [H2Pattern; 5] = [
        H2Pattern::Uvw,
        H2Pattern::Uv,
        H2Pattern::Vw,
        H2Pattern::Uw,
        H2Pattern::V,
    ];

    /// (to u, to v, to w)
    fn attachments(self) -> (bool, bool, bool) {
        match self {
            H2Pattern::Uvw => (true, true, true),
            H2Pattern::Uv => (true, true, false),
            H2Pattern::Vw => (false, true, true),
            H2Pattern::Uw => (true, false, true),
            H2Pattern::V => (false, true, false),
        }
    }
}

impl fmt::Display for H2Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            H2Pattern::Uvw => "UVW",
            H2Pattern::Uv => "UV",
            H2Pattern::Vw => "VW",
            H2Pattern::Uw => "UW",
            H2Pattern::V => "V",
        })
    }
}

impl FromStr for H2Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "UVW" => Ok(H2Pattern::Uvw),
            "UV" => Ok(H2Pattern::Uv),
            "VW" => Ok(H2Pattern::Vw),
            "UW" => Ok(H2Pattern::Uw),
            "V" => Ok(H2Pattern::V),
            other => Err(Error::param(format!("unknown H2 pattern {other:?}"))),
        }
    }
}

/// Parameterised graph families.
///
/// Labellings:
/// - `Path(n)`: `0 - 1 - ... - n-1`; `Cycle(n)` closes it with `n-1 - 0`.
/// - `CompleteBipartite(s, t)`: parts `0..s` and `s..s+t`.
/// - `Star(l)`: centre 0, leaves `1..=l`.
/// - `DoubleStar(s, t)`: centres 0 and 1, then `s` leaves on 0, then `t` on 1.
/// - `Spider(a, b, c)`: centre 0, then the legs of length `a`, `b`, `c` in
///   order, each listed outward from the centre.
/// - `TriangleSpider(p, q, r)`: triangle `0, 1, 2`; legs of length `p`, `q`,
///   `r` hang from 0, 1, 2 respectively.
/// - `TripleStar(a, b, c)`: triangle `0, 1, 2` carrying `a`, `b`, `c` leaves.
/// - `H2(patterns)`: path `u=0, v=1, w=2`, then one vertex per pattern.
/// - `StarPath(n)`: star centre 0 with leaves `1..=n-3`, then the path
///   `0 - (n-2) - (n-1)`.
/// - `Example2(inner)`: the inner graph on `0..m`, then `a=m, b=m+1, c=m+2,
///   d=m+3` forming the path `a-b-c-d`, with `a` and `d` joined to every
///   inner vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    DoubleStar(usize, usize),
    Spider(usize, usize, usize),
    TriangleSpider(usize, usize, usize),
    TripleStar(usize, usize, usize),
    H2(Vec<H2Pattern>),
    StarPath(usize),
    Example2(Graph),
}

impl FamilySpec {
    /// Order of the generated graph (assuming valid parameters).
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::StarPath(n) => *n,
            FamilySpec::CompleteBipartite(s, t) => s + t,
            FamilySpec::Star(l) => l + 1,
            FamilySpec::DoubleStar(s, t) => s + t + 2,
            FamilySpec::Spider(a, b, c) => a + b + c + 1,
            FamilySpec::TriangleSpider(p, q, r) | FamilySpec::TripleStar(p, q, r) => p + q + r + 3,
            FamilySpec::H2(p) => p.len() + 3,
            FamilySpec::Example2(inner) => inner.n() + 4,
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::param(msg));
        match *self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) if n == 0 => {
                return bad(format!("{self}: order must be >= 1"))
            }
            FamilySpec::Cycle(n) if n < 3 => return bad(format!("{self}: cycles need n >= 3")),
            FamilySpec::CompleteBipartite(s, t) if s == 0 || t == 0 => {
                return bad(format!("{self}: both parts must be nonempty"))
            }
            FamilySpec::Star(0) => return bad(format!("{self}: a star needs a leaf")),
            FamilySpec::Spider(a, b, c) if !(a <= b && b <= c && b >= 1) => {
                return bad(format!("{self}: need 0 <= a <= b <= c and b >= 1"))
            }
            FamilySpec::TriangleSpider(p, q, r) if !(p <= q && q <= r) => {
                return bad(format!("{self}: need 0 <= p <= q <= r"))
            }
            FamilySpec::TripleStar(a, b, c) if !(a <= b && b <= c && c >= 1) => {
                return bad(format!("{self}: need 0 <= a <= b <= c and c >= 1"))
            }
            FamilySpec::StarPath(n) if n < 4 => return bad(format!("{self}: need n >= 4")),
            _ => {}
        }
        let n = self.order();
        if n > MAX_VERTICES {
            return Err(Error::capacity(format!("{self}: order {n} exceeds {MAX_VERTICES}")));
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "P{n}"),
            FamilySpec::Cycle(n) => write!(f, "C{n}"),
            FamilySpec::Complete(n) => write!(f, "K{n}"),
            FamilySpec::CompleteBipartite(s, t) => write!(f, "K{s},{t}"),
            FamilySpec::Star(l) => write!(f, "K1,{l}"),
            FamilySpec::DoubleStar(s, t) => write!(f, "DoubleStar({s},{t})"),
            FamilySpec::Spider(a, b, c) => write!(f, "T({a},{b},{c})"),
            FamilySpec::TriangleSpider(p, q, r) => write!(f, "Tri({p},{q},{r})"),
            FamilySpec::TripleStar(a, b, c) => write!(f, "H1({a},{b},{c})"),
            FamilySpec::H2(p) => {
                let tags: Vec<String> = p.iter().map(ToString::to_string).collect();
                write!(f, "H2({})", tags.join(","))
            }
            FamilySpec::StarPath(n) => write!(f, "StarPath({n})"),
            FamilySpec::Example2(inner) => write!(f, "Example2({})", graph6::key(inner)),
        }
    }
}

fn attach_path(b: &mut GraphBuilder, from: usize, next: &mut usize, len: usize) {
    let mut prev = from;
    for _ in 0..len {
        b.link(prev, *next);
        prev = *next;
        *next += 1;
    }
}

fn attach_leaves(b: &mut GraphBuilder, centre: usize, next: &mut usize, count: usize) {
    for _ in 0..count {
        b.link(centre, *next);
        *next += 1;
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.order();
    let mut b = GraphBuilder::new(n)?;
    let mut next;
    match spec {
        FamilySpec::Path(n) => {
            for v in 1..*n {
                b.link(v - 1, v);
            }
        }
        FamilySpec::Cycle(n) => {
            for v in 1..*n {
                b.link(v - 1, v);
            }
            b.link(n - 1, 0);
        }
        FamilySpec::Complete(n) => {
            for u in 0..*n {
                for v in u + 1..*n {
                    b.link(u, v);
                }
            }
        }
        FamilySpec::CompleteBipartite(s, t) => {
            for u in 0..*s {
                for v in *s..s + t {
                    b.link(u, v);
                }
            }
        }
        FamilySpec::Star(l) => {
            next = 1;
            attach_leaves(&mut b, 0, &mut next, *l);
        }
        FamilySpec::DoubleStar(s, t) => {
            b.link(0, 1);
            next = 2;
            attach_leaves(&mut b, 0, &mut next, *s);
            attach_leaves(&mut b, 1, &mut next, *t);
        }
        FamilySpec::Spider(a, bb, c) => {
            next = 1;
            for len in [*a, *bb, *c] {
                attach_path(&mut b, 0, &mut next, len);
            }
        }
        FamilySpec::TriangleSpider(p, q, r) => {
            b.link(0, 1);
            b.link(1, 2);
            b.link(0, 2);
            next = 3;
            for (corner, len) in [(0, *p), (1, *q), (2, *r)] {
                attach_path(&mut b, corner, &mut next, len);
            }
        }
        FamilySpec::TripleStar(a, bb, c) => {
            b.link(0, 1);
            b.link(1, 2);
            b.link(0, 2);
            next = 3;
            for (corner, count) in [(0, *a), (1, *bb), (2, *c)] {
                attach_leaves(&mut b, corner, &mut next, count);
            }
        }
        FamilySpec::H2(patterns) => {
            b.link(0, 1);
            b.link(1, 2);
            for (i, p) in patterns.iter().enumerate() {
                let x = 3 + i;
                let (to_u, to_v, to_w) = p.attachments();
                for (hit, end) in [(to_u, 0), (to_v, 1), (to_w, 2)] {
                    if hit {
                        b.link(x, end);
                    }
                }
            }
        }
        FamilySpec::StarPath(n) => {
            next = 1;
            attach_leaves(&mut b, 0, &mut next, n - 3);
            b.link(0, n - 2);
            b.link(n - 2, n - 1);
        }
        FamilySpec::Example2(inner) => {
            let m = inner.n();
            for (u, v) in inner.edges() {
                b.link(u, v);
            }
            let (a, bb, c, d) = (m, m + 1, m + 2, m + 3);
            b.link(a, bb);
            b.link(bb, c);
            b.link(c, d);
            for x in 0..m {
                b.link(a, x);
                b.link(d, x);
            }
        }
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{is_connected, max_degree};

    #[test]
    fn small_examples() {
        let claw = generate(&FamilySpec::Spider(1, 1, 1)).unwrap();
        assert_eq!(claw, generate(&FamilySpec::Star(3)).unwrap());
        let paw = generate(&FamilySpec::TriangleSpider(0, 0, 1)).unwrap();
        assert_eq!(paw.n(), 4);
        assert_eq!(paw.edge_count(), 4);
        let ex = generate(&FamilySpec::Example2(generate(&FamilySpec::Complete(6)).unwrap())).unwrap();
        assert_eq!(ex.n(), 10);
        assert_eq!(ex.degree(6), 7);
        assert_eq!(ex.degree(9), 7);
        assert_eq!(max_degree(&ex), 7);
    }

    #[test]
    fn degree_sum_matches_edges() {
        let specs = vec![
            FamilySpec::Path(7),
            FamilySpec::Cycle(7),
            FamilySpec::Complete(7),
            FamilySpec::CompleteBipartite(3, 4),
            FamilySpec::Star(5),
            FamilySpec::DoubleStar(2, 3),
            FamilySpec::Spider(0, 2, 3),
            FamilySpec::TriangleSpider(1, 2, 3),
            FamilySpec::TripleStar(0, 1, 3),
            FamilySpec::H2(H2Pattern::ALL.to_vec()),
            FamilySpec::StarPath(8),
        ];
        for spec in specs {
            let g = generate(&spec).unwrap();
            assert_eq!(g.n(), spec.order(), "{spec}");
            assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count(), "{spec}");
            assert!(is_connected(&g), "{spec}");
        }
    }

    #[test]
    fn h2_patterns_attach_as_tagged() {
        let g = generate(&FamilySpec::H2(H2Pattern::ALL.to_vec())).unwrap();
        let nbrs = |x: usize| g.neighbors(x).to_vec();
        assert_eq!(nbrs(3), vec![0, 1, 2]);
        assert_eq!(nbrs(4), vec![0, 1]);
        assert_eq!(nbrs(5), vec![1, 2]);
        assert_eq!(nbrs(6), vec![0, 2]);
        assert_eq!(nbrs(7), vec![1]);
        assert_eq!("uvw".parse::<H2Pattern>().unwrap(), H2Pattern::Uvw);
        assert!("XY".parse::<H2Pattern>().is_err());
    }

    #[test]
    fn parameter_errors() {
        for spec in [
            FamilySpec::Spider(2, 1, 3),
            FamilySpec::Spider(0, 0, 3),
            FamilySpec::TriangleSpider(3, 2, 1),
            FamilySpec::TripleStar(0, 0, 0),
            FamilySpec::Cycle(2),
            FamilySpec::Path(0),
            FamilySpec::CompleteBipartite(0, 3),
            FamilySpec::StarPath(3),
            FamilySpec::Path(65),
        ] {
            assert!(generate(&spec).is_err(), "{spec} should be rejected");
        }
    }

    #[test]
    fn star_path_layout() {
        let g = generate(&FamilySpec::StarPath(6)).unwrap();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)]
        );
    }
}
