use std::collections::BTreeMap;

use chibound::cut::{cut_diversity, cut_matrix, cut_rank};
use chibound::decomposition::outside_partition;
use chibound::gen::{gnp, random_decomposition, rng};
use chibound::oracles::is_proper;
use chibound::oracles::Coloring;
use chibound::{
    decomposition_diversity, decomposition_rank, edge_cut, exact_rank_width, piece_graph, restrict,
    star_decomposition, validate_rank_decomposition, Decomposition, VertexSet,
};
use rand::Rng;

#[test]
fn per_edge_diversity_is_sandwiched_by_rank() {
    let mut r = rng(200);
    for _ in 0..300 {
        let n = r.gen_range(1..=12);
        let p = r.gen_range(0.1..0.9);
        let g = gnp(&mut r, n, p);
        let nodes = r.gen_range(1..=8);
        let d = random_decomposition(&mut r, n, nodes);
        for &e in d.tree_edges() {
            let (a, _) = edge_cut(&g, &d, e).unwrap();
            let m = cut_matrix(&g, &a).unwrap();
            if m.is_empty() {
                continue;
            }
            let (rk, dv) = (cut_rank(&m), cut_diversity(&m));
            assert!(rk <= dv && dv <= 1 << rk, "rank {rk} diversity {dv}");
        }
        let rk = decomposition_rank(&g, &d).unwrap();
        let dv = decomposition_diversity(&g, &d).unwrap();
        assert!(rk <= dv && dv <= 1 << rk);
    }
}

#[test]
fn outside_classes_are_the_distinct_cut_rows() {
    let mut r = rng(201);
    for _ in 0..300 {
        let n = r.gen_range(1..=12);
        let g = gnp(&mut r, n, 0.4);
        let nodes = r.gen_range(1..=6);
        let d = random_decomposition(&mut r, n, nodes).root_normalized();
        let rt = d.rooted().unwrap();
        for v in 0..d.nodes() {
            if v == rt.root {
                assert!(outside_partition(&g, &d, v).is_err());
                continue;
            }
            let classes = outside_partition(&g, &d, v).unwrap();
            let inside = &rt.subtree[v];
            // group rows of the cut matrix (V_v, rest) by value
            let m = cut_matrix(&g, inside).unwrap();
            let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
            for (i, row) in m.rows.iter().enumerate() {
                groups
                    .entry(row.iter().collect())
                    .or_default()
                    .push(m.row_index[i]);
            }
            let zero = groups.remove(&Vec::new()).unwrap_or_default();
            assert_eq!(classes[0].iter().collect::<Vec<_>>(), zero);
            let mut expected: Vec<Vec<usize>> = groups.into_values().collect();
            expected.sort();
            let got: Vec<Vec<usize>> = classes[1..].iter().map(|c| c.iter().collect()).collect();
            assert_eq!(got, expected);
        }
    }
}

#[test]
fn restriction_never_increases_rank_or_diversity() {
    let mut r = rng(202);
    for _ in 0..300 {
        let n = r.gen_range(1..=12);
        let g = gnp(&mut r, n, 0.5);
        let nodes = r.gen_range(1..=8);
        let d = random_decomposition(&mut r, n, nodes);
        let s = VertexSet::from_iter(n, (0..n).filter(|_| r.gen_bool(0.6)));
        let (h, hd, map) = restrict(&g, &d, &s).unwrap();
        assert_eq!(h.n(), s.len());
        for (new, &old) in map.new_to_old.iter().enumerate() {
            assert_eq!(hd.tau()[new], d.tau()[old]);
        }
        assert!(decomposition_rank(&h, &hd).unwrap() <= decomposition_rank(&g, &d).unwrap());
        assert!(
            decomposition_diversity(&h, &hd).unwrap() <= decomposition_diversity(&g, &d).unwrap()
        );
    }
}

#[test]
fn piece_edges_are_the_edges_whose_tree_path_meets_the_node() {
    let mut r = rng(203);
    for _ in 0..100 {
        let n = r.gen_range(2..=10);
        let g = gnp(&mut r, n, 0.5);
        let nodes = r.gen_range(1..=7);
        let d = random_decomposition(&mut r, n, nodes);
        let adj = d.adjacency();
        let pieces: Vec<_> = (0..d.nodes())
            .map(|v| piece_graph(&g, &d, v).unwrap())
            .collect();
        for (u, w) in g.edges() {
            let on_path = tree_path(&adj, d.tau()[u], d.tau()[w]);
            for (v, piece) in pieces.iter().enumerate() {
                assert_eq!(piece.has_edge(u, w), on_path.contains(&v));
            }
        }
        for piece in &pieces {
            assert!(piece.edges().all(|(u, w)| g.has_edge(u, w)));
        }
    }
}

fn tree_path(adj: &[Vec<usize>], from: usize, to: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; adj.len()];
    prev[from] = from;
    let mut stack = vec![from];
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if prev[y] == usize::MAX {
                prev[y] = x;
                stack.push(y);
            }
        }
    }
    let mut path = vec![to];
    let mut x = to;
    while x != from {
        x = prev[x];
        path.push(x);
    }
    path
}

#[test]
fn stars_have_rank_at_most_one() {
    let mut r = rng(204);
    for _ in 0..100 {
        let n = r.gen_range(0..=12);
        let p = r.gen_range(0.0..1.0);
        let g = gnp(&mut r, n, p);
        let d = star_decomposition(&g);
        let rank = decomposition_rank(&g, &d).unwrap();
        assert!(rank <= 1);
        assert_eq!(rank == 0, g.m() == 0);
    }
}

/// Random cubic tree with the vertices on its leaves, built by repeatedly
/// subdividing a random edge and hanging the next vertex there.
fn random_cubic(r: &mut impl Rng, n: usize) -> Decomposition {
    assert!(n >= 3);
    let mut edges = vec![(0, n), (1, n), (2, n)];
    let mut next = n + 1;
    for leaf in 3..n {
        let i = r.gen_range(0..edges.len());
        let (a, b) = edges[i];
        let mid = next;
        next += 1;
        edges[i] = (a, mid);
        edges.push((mid, b));
        edges.push((mid, leaf));
    }
    Decomposition::new(next, edges, (0..n).collect(), None).unwrap()
}

#[test]
fn rank_decomposition_pieces_are_three_partite() {
    let mut r = rng(205);
    for _ in 0..100 {
        let n = r.gen_range(3..=10);
        let g = gnp(&mut r, n, 0.5);
        let d = random_cubic(&mut r, n);
        let rd = validate_rank_decomposition(&g, &d).unwrap();
        assert_eq!(rd.width(), decomposition_rank(&g, &d).unwrap());
        for v in 0..d.nodes() {
            let piece = piece_graph(&g, &d, v).unwrap();
            let comps = d.components_without(v);
            // color = 1 + component of T - v holding tau(u); only a leaf carries
            // a vertex itself, and then T - v has a single component
            let colors = (0..n)
                .map(|u| comps[d.tau()[u]].map_or(3, |c| c + 1))
                .collect();
            let c = Coloring::new(colors).unwrap();
            assert!(c.palette_size() <= 3);
            assert!(is_proper(&piece, &c).unwrap(), "node {v}");
        }
    }
}

#[test]
fn exact_rank_width_is_a_lower_bound_for_any_rank_decomposition() {
    let mut r = rng(206);
    for _ in 0..40 {
        let n = r.gen_range(3..=8);
        let g = gnp(&mut r, n, 0.5);
        let (w, witness) = exact_rank_width(&g).unwrap();
        assert_eq!(
            validate_rank_decomposition(&g, witness.decomposition())
                .unwrap()
                .width(),
            w
        );
        for _ in 0..5 {
            let d = random_cubic(&mut r, n);
            assert!(w <= decomposition_rank(&g, &d).unwrap());
        }
    }
}
