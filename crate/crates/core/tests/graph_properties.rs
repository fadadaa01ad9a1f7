use chibound::gen::{gnp, rng};
use chibound::graph::{complete, path};
use chibound::oracles::is_isomorphic;
use chibound::{Graph, VertexSet};
use rand::Rng;

#[test]
fn local_complement_is_an_involution() {
    let mut r = rng(100);
    for _ in 0..200 {
        let n = r.gen_range(1..=10);
        let g = gnp(&mut r, n, 0.5);
        let v = r.gen_range(0..n);
        let once = g.local_complement(v).unwrap();
        once.validate().unwrap();
        assert_eq!(once.neighbors(v), g.neighbors(v));
        assert_eq!(once.local_complement(v).unwrap(), g);
    }
}

#[test]
fn twin_classes_partition_into_independent_sets() {
    let mut r = rng(101);
    for _ in 0..200 {
        let n = r.gen_range(0..=10);
        let g = gnp(&mut r, n, 0.3);
        let classes = g.twin_classes();
        let mut seen = VertexSet::new(n);
        for class in &classes {
            for &u in class {
                assert!(!seen.contains(u));
                seen.insert(u);
                for &w in class {
                    assert!(!g.has_edge(u, w));
                    assert_eq!(g.neighbors(u), g.neighbors(w));
                }
            }
        }
        assert_eq!(seen.len(), n);
        // distinct classes have distinct neighborhoods
        for a in 0..classes.len() {
            for b in a + 1..classes.len() {
                assert_ne!(g.neighbors(classes[a][0]), g.neighbors(classes[b][0]));
            }
        }
    }
}

#[test]
fn one_join_is_symmetric_up_to_relabeling() {
    let mut r = rng(102);
    for _ in 0..200 {
        let (n1, n2) = (r.gen_range(1..=6), r.gen_range(1..=6));
        let (g1, g2) = (gnp(&mut r, n1, 0.5), gnp(&mut r, n2, 0.5));
        let (v1, v2) = (r.gen_range(0..n1), r.gen_range(0..n2));
        let (a, ma) = g1.one_join(v1, &g2, v2).unwrap();
        let (b, mb) = g2.one_join(v2, &g1, v1).unwrap();
        a.validate().unwrap();
        assert_eq!(a.n(), n1 + n2 - 2);
        // a's id for every vertex -> b's id for the same original vertex
        let mut perm = vec![0; a.n()];
        for (old, new) in ma.left.iter().enumerate() {
            if let Some(new) = new {
                perm[*new] = mb.right[old].unwrap();
            }
        }
        for (old, new) in ma.right.iter().enumerate() {
            if let Some(new) = new {
                perm[*new] = mb.left[old].unwrap();
            }
        }
        assert_eq!(a.permute(&perm), b);
        // cross edges are exactly N(v1) x N(v2)
        for (old1, new1) in ma.left.iter().enumerate() {
            for (old2, new2) in ma.right.iter().enumerate() {
                if let (Some(x), Some(y)) = (new1, new2) {
                    assert_eq!(
                        a.has_edge(*x, *y),
                        g1.has_edge(v1, old1) && g2.has_edge(v2, old2)
                    );
                }
            }
        }
    }
}

#[test]
fn one_join_at_an_isolated_marker_is_a_disjoint_union() {
    let g1 = Graph::empty(1).disjoint_union(&complete(3));
    let (j, _) = g1.one_join(0, &path(3), 1).unwrap();
    let expected = complete(3).disjoint_union(&Graph::empty(2));
    assert_eq!(j, expected);
}

#[test]
fn blow_up_then_quotient_recovers_the_graph() {
    let mut r = rng(103);
    for _ in 0..200 {
        let n = r.gen_range(1..=8);
        let g = gnp(&mut r, n, 0.5);
        let v = r.gen_range(0..n);
        let t = r.gen_range(1..=4);
        let b = g.blow_up(v, t).unwrap();
        b.validate().unwrap();
        assert_eq!(b.n(), n + t - 1);
        for copy in n..b.n() {
            assert_eq!(b.neighbors(copy).to_mask(), b.neighbors(v).to_mask());
        }
        // keep v and drop its copies
        let keep = VertexSet::from_iter(b.n(), 0..n);
        let (q, _) = b.induced_subgraph(&keep).unwrap();
        assert!(is_isomorphic(&q, &g));
        assert_eq!(q, g);
    }
}
