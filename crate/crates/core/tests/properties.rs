//! Property tests. The oracles here are deliberately naive and share no
//! code with the library beyond the `Graph` type.

use proptest::prelude::*;

use sdiam_core::nordhaus_gaddum::pair_metrics;
use sdiam_core::recognizers::{recognize_spider, recognize_triangle_spider, SpiderParams, TriangleSpiderParams};
use sdiam_core::steiner::{median_distance, steiner_distance, steiner_report, steiner_tree, Diameters};
use sdiam_core::structure::{
    circumference, cut_vertices, edge_connectivity, is_connected, min_degree, pairwise_distances,
    vertex_connectivity,
};
use sdiam_core::{
    from_graph6, generate, k_subsets, to_graph6, ExtLength, FamilySpec, Graph, H2Pattern, VertexSet,
};

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |b| graph_from_bits(n, &b))
    })
}

fn connected_graphs(max_n: usize) -> impl Strategy<Value = Graph> {
    graphs(max_n).prop_filter("connected", is_connected)
}

fn adj(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n()).map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect()).collect()
}

/// Connectivity of the subgraph induced on `keep` by plain DFS.
fn induced_connected(a: &[Vec<bool>], keep: &[usize]) -> bool {
    if keep.is_empty() {
        return false;
    }
    let mut seen = vec![false; keep.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..keep.len() {
            if !seen[j] && a[keep[i]][keep[j]] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Smallest connected vertex set containing `s`, minus one, by scanning
/// every vertex subset.
fn naive_steiner(g: &Graph, s: &[usize]) -> Option<u64> {
    let a = adj(g);
    let n = g.n();
    let mut best: Option<usize> = None;
    for mask in 0u32..1 << n {
        if s.iter().any(|&v| mask >> v & 1 == 0) {
            continue;
        }
        let keep: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if best.is_some_and(|b| keep.len() >= b) {
            continue;
        }
        if induced_connected(&a, &keep) {
            best = Some(keep.len());
        }
    }
    best.map(|b| b as u64 - 1)
}

fn bfs_distances(g: &Graph, src: usize) -> Vec<Option<u64>> {
    let a = adj(g);
    let mut d = vec![None; g.n()];
    d[src] = Some(0);
    let mut queue = std::collections::VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        for v in 0..g.n() {
            if a[u][v] && d[v].is_none() {
                d[v] = Some(d[u].unwrap() + 1);
                queue.push_back(v);
            }
        }
    }
    d
}

/// Longest cycle by extending simple paths from their smallest vertex.
fn naive_circumference(g: &Graph) -> usize {
    fn walk(a: &[Vec<bool>], start: usize, path: &mut Vec<usize>, best: &mut usize) {
        let last = *path.last().unwrap();
        if path.len() >= 3 && a[last][start] {
            *best = (*best).max(path.len());
        }
        for v in start + 1..a.len() {
            if a[last][v] && !path.contains(&v) {
                path.push(v);
                walk(a, start, path, best);
                path.pop();
            }
        }
    }
    let a = adj(g);
    let mut best = 0;
    for s in 0..g.n() {
        walk(&a, s, &mut vec![s], &mut best);
    }
    best
}

fn subsets_up_to(n: usize, max_k: usize) -> Vec<VertexSet> {
    (2..=max_k.min(n)).flat_map(|k| k_subsets(n, k)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in graphs(62)) {
        let text = to_graph6(&g).unwrap();
        prop_assert_eq!(from_graph6(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graphs(20)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        prop_assert_eq!(g.edge_count() + g.complement().edge_count(), g.n() * (g.n() - 1) / 2);
    }

    #[test]
    fn whitney_chain(g in connected_graphs(9)) {
        let (k, l) = (vertex_connectivity(&g), edge_connectivity(&g));
        prop_assert!(k <= l);
        prop_assert!(l <= min_degree(&g));
        if g.n() >= 3 {
            prop_assert_eq!(cut_vertices(&g).unwrap().is_empty(), k >= 2);
        }
    }

    #[test]
    fn circumference_matches_search(g in graphs(8)) {
        prop_assert_eq!(circumference(&g), naive_circumference(&g));
    }

    #[test]
    fn steiner_distance_matches_subset_scan(g in graphs(8)) {
        for s in subsets_up_to(g.n(), 4) {
            let expect = naive_steiner(&g, &s.to_vec()).map_or(ExtLength::Infinite, ExtLength::Finite);
            prop_assert_eq!(steiner_distance(&g, s).unwrap(), expect, "S = {:?}", s);
        }
    }

    #[test]
    fn median_formula_matches(g in graphs(10)) {
        let dm = pairwise_distances(&g);
        for s in k_subsets(g.n(), 3) {
            let t = s.to_vec();
            prop_assert_eq!(median_distance(&dm, t[0], t[1], t[2]), steiner_distance(&g, s).unwrap());
        }
    }

    #[test]
    fn witness_trees_are_sound(g in connected_graphs(9), pick in any::<u64>()) {
        let n = g.n();
        if n >= 2 {
            let subsets = subsets_up_to(n, n);
            let s = subsets[(pick % subsets.len() as u64) as usize];
            let tree = steiner_tree(&g, s).unwrap().expect("connected");
            prop_assert_eq!(ExtLength::Finite(tree.len() as u64), steiner_distance(&g, s).unwrap());
            let mut verts: Vec<usize> = tree.iter().flat_map(|&(u, v)| [u, v]).collect();
            verts.extend(s.iter());
            verts.sort_unstable();
            verts.dedup();
            prop_assert!(tree.iter().all(|&(u, v)| g.has_edge(u, v)));
            prop_assert_eq!(verts.len(), tree.len() + 1);
            let t = Graph::from_edges(n, &tree).unwrap();
            prop_assert!(induced_connected(&adj(&t), &verts));
        }
    }

    #[test]
    fn report_bounds_and_classical_case(g in connected_graphs(9)) {
        let n = g.n();
        prop_assume!(n >= 2);
        let ecc: Vec<u64> = (0..n).map(|v| bfs_distances(&g, v).into_iter().map(Option::unwrap).max().unwrap()).collect();
        let r2 = steiner_report(&g, 2).unwrap();
        prop_assert_eq!(r2.sdiam, *ecc.iter().max().unwrap());
        prop_assert_eq!(r2.srad, *ecc.iter().min().unwrap());
        let mut prev = ExtLength::Finite(0);
        for k in 2..=n {
            let r = steiner_report(&g, k).unwrap();
            prop_assert!(r.srad <= r.sdiam);
            prop_assert!(r.sdiam >= ExtLength::Finite(k as u64 - 1));
            prop_assert!(r.sdiam <= ExtLength::Finite(n as u64 - 1));
            prop_assert!(prev <= r.sdiam, "not monotone in k");
            prev = r.sdiam;
        }
    }

    #[test]
    fn deleting_an_edge_never_shrinks_sdiam(g in connected_graphs(9), pick in any::<usize>()) {
        let edges: Vec<_> = g.edges().collect();
        prop_assume!(!edges.is_empty());
        let drop = edges[pick % edges.len()];
        let rest: Vec<_> = edges.iter().copied().filter(|&e| e != drop).collect();
        let h = Graph::from_edges(g.n(), &rest).unwrap();
        prop_assume!(is_connected(&h));
        let (dg, dh) = (Diameters::new(g.clone()), Diameters::new(h));
        for k in 2..=g.n() {
            prop_assert!(dg.sdiam(k).unwrap() <= dh.sdiam(k).unwrap());
        }
    }

    #[test]
    fn pair_arithmetic_absorbs_infinity(g in graphs(8)) {
        for k in 2..=g.n() {
            let m = pair_metrics(&g, k).unwrap();
            let finite = m.d_g.is_finite() && m.d_gc.is_finite();
            prop_assert_eq!(m.sum.is_finite(), finite);
            prop_assert_eq!(m.product.is_finite(), finite);
            if let (Some(a), Some(b)) = (m.d_g.finite(), m.d_gc.finite()) {
                prop_assert_eq!(m.sum, a + b);
                prop_assert_eq!(m.product, a * b);
            }
        }
    }

    #[test]
    fn spiders_round_trip(a in 1usize..5, b in 1usize..5, c in 1usize..5) {
        let mut p = [a, b, c];
        p.sort_unstable();
        let g = generate(&FamilySpec::Spider(p[0], p[1], p[2])).unwrap();
        prop_assert_eq!(recognize_spider(&g), Some(SpiderParams { a: p[0], b: p[1], c: p[2] }));
        let t = generate(&FamilySpec::TriangleSpider(p[0] - 1, p[1], p[2])).unwrap();
        prop_assert_eq!(
            recognize_triangle_spider(&t),
            Some(TriangleSpiderParams { p: p[0] - 1, q: p[1], r: p[2] })
        );
    }

    #[test]
    fn family_degree_sums(n in 4usize..14, s in 1usize..5, t in 1usize..5, pats in proptest::collection::vec(0usize..5, 0..5)) {
        let specs = vec![
            FamilySpec::Path(n), FamilySpec::Cycle(n), FamilySpec::Complete(n),
            FamilySpec::CompleteBipartite(s, t), FamilySpec::Star(s), FamilySpec::DoubleStar(s, t),
            FamilySpec::TripleStar(0, s, t.max(s)), FamilySpec::StarPath(n),
            FamilySpec::H2(pats.iter().map(|&i| H2Pattern::ALL[i]).collect()),
            FamilySpec::Example2(generate(&FamilySpec::Cycle(n)).unwrap()),
        ];
        for spec in specs {
            let g = generate(&spec).unwrap();
            prop_assert_eq!(g.n(), spec.order());
            prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count(), "{}", spec);
        }
    }
}
