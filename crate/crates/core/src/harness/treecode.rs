//! Canonical codes for unlabelled trees (AHU encoding).
//!
//! The code of a rooted tree is `1`, then its children's codes in sorted
//! order, then `0`. Rooting at the centre (the smaller code of the two when
//! there are two centres) makes it an isomorphism invariant that is also
//! complete. A tree on `n` vertices needs `2n` bits, so trees up to 31
//! vertices fit in a `u64`.

use crate::graph::Graph;
use crate::structure::is_tree;

pub const TREE_CODE_MAX_ORDER: usize = 31;

/// Canonical code of `g`, or `None` if `g` is not a tree of order at most
/// [`TREE_CODE_MAX_ORDER`].
pub fn tree_code(g: &Graph) -> Option<u64> {
    let n = g.n();
    if n > TREE_CODE_MAX_ORDER || !is_tree(g) {
        return None;
    }
    if n == 1 {
        return Some(0b10);
    }
    let centres = centres(g);
    centres.iter().map(|&c| rooted_code(g, c)).min()
}

fn centres(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut deg: Vec<usize> = g.degrees();
    let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for w in g.neighbors(v) {
                if deg[w] > 1 {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(g: &Graph, root: usize) -> u64 {
    let n = g.n();
    let mut order = [0usize; TREE_CODE_MAX_ORDER];
    let mut parent = [usize::MAX; TREE_CODE_MAX_ORDER];
    order[0] = root;
    parent[root] = root;
    let mut len = 1;
    let mut i = 0;
    while i < len {
        let v = order[i];
        for w in g.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                order[len] = w;
                len += 1;
            }
        }
        i += 1;
    }
    // (bit length, bits) per vertex, filled leaves-first
    let mut code = [(0u32, 0u64); TREE_CODE_MAX_ORDER];
    let mut kids: Vec<(u32, u64)> = Vec::with_capacity(n);
    for &v in order[..n].iter().rev() {
        kids.clear();
        kids.extend(g.neighbors(v).iter().filter(|&w| parent[w] == v && w != v).map(|w| code[w]));
        kids.sort_unstable();
        let mut bits = 1u64;
        let mut width = 1;
        for &(l, b) in &kids {
            bits = bits << l | b;
            width += l;
        }
        code[v] = (width + 1, bits << 1);
    }
    code[root].1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::harness::corpus::enumerate_trees;
    use crate::iso::is_isomorphic;
    use std::collections::HashMap;

    #[test]
    fn unlabelled_tree_counts() {
        // OEIS A000055
        for (n, expect) in [(1, 1), (2, 1), (3, 1), (4, 2), (5, 3), (6, 6), (7, 11), (8, 23)] {
            let mut codes: Vec<u64> = enumerate_trees(n).unwrap().map(|t| tree_code(&t).unwrap()).collect();
            codes.sort_unstable();
            codes.dedup();
            assert_eq!(codes.len(), expect, "n={n}");
        }
    }

    #[test]
    fn codes_agree_with_isomorphism() {
        let mut reps: HashMap<u64, Graph> = HashMap::new();
        for t in enumerate_trees(7).unwrap() {
            let c = tree_code(&t).unwrap();
            let rep = reps.entry(c).or_insert_with(|| t.clone());
            assert!(is_isomorphic(rep, &t));
        }
        let vals: Vec<&Graph> = reps.values().collect();
        for (i, a) in vals.iter().enumerate() {
            for b in &vals[i + 1..] {
                assert!(!is_isomorphic(a, b));
            }
        }
    }

    #[test]
    fn non_trees_have_no_code() {
        assert_eq!(tree_code(&generate(&FamilySpec::Cycle(5)).unwrap()), None);
        assert!(tree_code(&generate(&FamilySpec::Path(31)).unwrap()).is_some());
        assert_eq!(tree_code(&generate(&FamilySpec::Path(32)).unwrap()), None);
    }
}
