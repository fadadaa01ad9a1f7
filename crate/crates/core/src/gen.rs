//! Seeded random instances. Every generator draws only from the RNG it is
//! given; [`rng`] is the one place a seed becomes a generator (ChaCha8).

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chi::{JoinEdge, JoinTree};
use crate::decomposition::Decomposition;
use crate::graph::Graph;

pub type InstanceRng = ChaCha8Rng;

pub fn rng(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph: each pair independently with probability `p`.
pub fn gnp<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Edges of a uniformly attached random tree on `0..n`: node `i > 0` hangs off
/// a random earlier node, then labels are shuffled.
pub fn random_tree_edges<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<(usize, usize)> {
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    (1..n)
        .map(|i| (label[rng.gen_range(0..i)], label[i]))
        .collect()
}

/// A random spanning tree plus `gnp` noise; connected for `n >= 1`.
pub fn random_connected<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = gnp(rng, n, p);
    for (u, v) in random_tree_edges(rng, n) {
        g.add_edge(u, v);
    }
    g
}

/// A random tree on `nodes` nodes and a uniform map from `n` vertices onto it.
pub fn random_decomposition<R: Rng + ?Sized>(rng: &mut R, n: usize, nodes: usize) -> Decomposition {
    let nodes = nodes.max(1);
    let edges = random_tree_edges(rng, nodes);
    let tau = (0..n).map(|_| rng.gen_range(0..nodes)).collect();
    Decomposition::new(nodes, edges, tau, None).expect("generated tree is valid")
}

/// A join tree with `1..=max_pieces` pieces of at most `max_size` vertices.
/// Each piece keeps at least one non-marker vertex.
pub fn random_jointree<R: Rng + ?Sized>(
    rng: &mut R,
    max_pieces: usize,
    max_size: usize,
    p: f64,
) -> JoinTree {
    let k = rng.gen_range(1..=max_pieces.max(1));
    jointree_with_pieces(rng, k, max_size, p)
}

/// As [`random_jointree`] with exactly `k >= 1` pieces.
pub fn jointree_with_pieces<R: Rng + ?Sized>(
    rng: &mut R,
    k: usize,
    max_size: usize,
    p: f64,
) -> JoinTree {
    let k = k.max(1);
    let mut edges = random_tree_edges(rng, k);
    let mut degree = vec![0; k];
    for &(a, b) in &edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    // a star center needs degree + 1 vertices; grow max_size if it cannot fit
    let pieces: Vec<Graph> = degree
        .iter()
        .map(|&d| {
            let lo = d + 1;
            let n = rng.gen_range(lo..=max_size.max(lo));
            gnp(rng, n, p)
        })
        .collect();
    let mut free: Vec<Vec<usize>> = pieces
        .iter()
        .map(|g| {
            let mut v: Vec<usize> = (0..g.n()).collect();
            v.shuffle(rng);
            v
        })
        .collect();
    edges.shuffle(rng);
    let joins = edges
        .into_iter()
        .map(|(a, b)| JoinEdge {
            a,
            b,
            wa: free[a].pop().expect("piece has room for its markers"),
            wb: free[b].pop().expect("piece has room for its markers"),
        })
        .collect();
    JoinTree::new(pieces, joins).expect("generated join tree is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let a = gnp(&mut rng(5), 12, 0.4);
        let b = gnp(&mut rng(5), 12, 0.4);
        assert_eq!(a, b);
        assert_ne!(a, gnp(&mut rng(6), 12, 0.4));
        let j1 = random_jointree(&mut rng(9), 5, 6, 0.5);
        let j2 = random_jointree(&mut rng(9), 5, 6, 0.5);
        assert_eq!(j1, j2);
    }

    #[test]
    fn shapes() {
        let mut r = rng(1);
        for n in 1..15 {
            assert!(random_connected(&mut r, n, 0.1).is_connected());
            let d = random_decomposition(&mut r, n, 4);
            assert_eq!(d.nodes(), 4);
            assert_eq!(d.n_vertices(), n);
        }
        for _ in 0..100 {
            let jt = random_jointree(&mut r, 5, 6, 0.5);
            assert!(jt.pieces().len() <= 5);
            assert!(!jt.survivors().is_empty());
        }
    }
}
