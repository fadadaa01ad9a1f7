use crate::error::Result;
use crate::graph::Graph;

use super::clique::clique_number_with;
use super::{check_limit, Coloring, Limits};

/// Greedy DSatur: repeatedly colors the vertex seeing the most distinct colors
/// (ties by degree, then id) with the smallest free color. 0-based labels.
fn dsatur_labels(masks: &[u64]) -> Vec<usize> {
    let n = masks.len();
    let mut color = vec![usize::MAX; n];
    let mut seen = vec![0u64; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by_key(|&v| {
                (
                    seen[v].count_ones(),
                    masks[v].count_ones(),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        let c = (!seen[v]).trailing_zeros() as usize;
        color[v] = c;
        let mut nb = masks[v];
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            seen[u] |= 1 << c;
        }
    }
    color
}

pub fn dsatur_coloring(g: &Graph) -> Coloring {
    assert!(g.n() <= 64, "dsatur_coloring works on at most 64 vertices");
    Coloring::from_zero_based(&dsatur_labels(&g.masks()))
}

/// Exact `k`-colorability by DSatur-ordered backtracking; a fresh color is only
/// ever the next unused one, which removes color-permutation symmetry.
pub fn k_coloring(g: &Graph, k: usize) -> Option<Coloring> {
    assert!(g.n() <= 64);
    let masks = g.masks();
    let n = masks.len();
    if n == 0 {
        return Some(Coloring::new(Vec::new()).unwrap());
    }
    if k == 0 {
        return None;
    }
    let mut color = vec![usize::MAX; n];
    let mut seen = vec![0u64; n];
    if backtrack(&masks, k, 0, 0, &mut color, &mut seen) {
        Some(Coloring::from_zero_based(&color))
    } else {
        None
    }
}

fn backtrack(
    masks: &[u64],
    k: usize,
    colored: usize,
    used: usize,
    color: &mut [usize],
    seen: &mut [u64],
) -> bool {
    let n = masks.len();
    if colored == n {
        return true;
    }
    let v = (0..n)
        .filter(|&v| color[v] == usize::MAX)
        .max_by_key(|&v| {
            (
                seen[v].count_ones(),
                masks[v].count_ones(),
                std::cmp::Reverse(v),
            )
        })
        .unwrap();
    let limit = k.min(used + 1);
    for c in 0..limit {
        if seen[v] >> c & 1 == 1 {
            continue;
        }
        color[v] = c;
        let mut touched = Vec::new();
        let mut nb = masks[v];
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if seen[u] >> c & 1 == 0 {
                seen[u] |= 1 << c;
                touched.push(u);
            }
        }
        if backtrack(masks, k, colored + 1, used.max(c + 1), color, seen) {
            return true;
        }
        for u in touched {
            seen[u] &= !(1 << c);
        }
        color[v] = usize::MAX;
    }
    false
}

/// Exact chromatic number with a witness: clique lower bound, DSatur upper bound,
/// and backtracking for each budget in between.
pub fn chromatic_number(g: &Graph) -> Result<(usize, Coloring)> {
    chromatic_number_with(g, &Limits::default())
}

pub fn chromatic_number_with(g: &Graph, limits: &Limits) -> Result<(usize, Coloring)> {
    check_limit("chromatic number", g.n(), limits.chromatic)?;
    let lower = clique_number_with(
        g,
        &Limits {
            clique: 64,
            ..*limits
        },
    )?;
    let greedy = dsatur_coloring(g);
    let upper = greedy.palette_size();
    for k in lower..upper {
        if let Some(c) = k_coloring(g, k) {
            return Ok((k, c));
        }
    }
    Ok((upper, greedy))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};
    use crate::oracles::{clique_number, is_proper};

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).unwrap()
    }

    /// Tries every labeling with `k` colors.
    fn naive_colorable(g: &Graph, k: usize) -> bool {
        let n = g.n();
        let total = k.pow(n as u32);
        (0..total).any(|mut code| {
            let labels: Vec<usize> = (0..n)
                .map(|_| {
                    let c = code % k;
                    code /= k;
                    c
                })
                .collect();
            g.edges().all(|(u, v)| labels[u] != labels[v])
        })
    }

    #[test]
    fn examples() {
        assert_eq!(chromatic_number(&cycle(5)).unwrap().0, 3);
        for n in 1..=7 {
            assert_eq!(chromatic_number(&complete(n)).unwrap().0, n);
        }
        let (chi, c) = chromatic_number(&petersen()).unwrap();
        assert_eq!(chi, 3);
        assert!(is_proper(&petersen(), &c).unwrap());
        assert!(k_coloring(&petersen(), 2).is_none());
        assert_eq!(chromatic_number(&Graph::empty(0)).unwrap().0, 0);
        assert_eq!(chromatic_number(&path(4)).unwrap().0, 2);
    }

    #[test]
    fn optimal_and_proper_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let n = rng.gen_range(1..=8);
            let p = rng.gen_range(0.2..0.8);
            let g = crate::gen::gnp(&mut rng, n, p);
            let (chi, c) = chromatic_number(&g).unwrap();
            assert!(is_proper(&g, &c).unwrap());
            assert_eq!(c.palette_size(), chi);
            assert!(chi >= clique_number(&g).unwrap());
            assert!(naive_colorable(&g, chi));
            assert!(chi == 0 || !naive_colorable(&g, chi - 1));
        }
    }
}
