use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::Graph;

use super::{check_limit, Limits};

/// Bron-Kerbosch with Tomita pivoting, keeping only cliques of maximum size.
/// Branches that cannot reach the current best size are cut.
fn max_cliques_masks(masks: &[u64]) -> (usize, Vec<u64>) {
    let n = masks.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0usize;
    let mut found = Vec::new();
    expand(masks, 0, all, 0, &mut best, &mut found);
    if n == 0 {
        return (0, Vec::new());
    }
    (best, found)
}

fn expand(masks: &[u64], r: u64, mut p: u64, mut x: u64, best: &mut usize, found: &mut Vec<u64>) {
    let size = r.count_ones() as usize;
    if p == 0 {
        if x == 0 && size >= *best {
            if size > *best {
                *best = size;
                found.clear();
            }
            found.push(r);
        }
        return;
    }
    if size + (p.count_ones() as usize) < *best {
        return;
    }
    let mut px = p | x;
    let mut pivot = 0;
    let mut most = -1i32;
    while px != 0 {
        let u = px.trailing_zeros() as usize;
        px &= px - 1;
        let c = (p & masks[u]).count_ones() as i32;
        if c > most {
            most = c;
            pivot = u;
        }
    }
    let mut cand = p & !masks[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        let bit = 1u64 << v;
        expand(masks, r | bit, p & masks[v], x & masks[v], best, found);
        p &= !bit;
        x |= bit;
    }
}

pub fn clique_number(g: &Graph) -> Result<usize> {
    clique_number_with(g, &Limits::default())
}

pub fn clique_number_with(g: &Graph, limits: &Limits) -> Result<usize> {
    check_limit("clique enumeration", g.n(), limits.clique)?;
    Ok(max_cliques_masks(&g.masks()).0)
}

/// Every vertex set of size `omega(g)` inducing a complete graph, in discovery order.
pub fn maximum_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    maximum_cliques_with(g, &Limits::default())
}

pub fn maximum_cliques_with(g: &Graph, limits: &Limits) -> Result<Vec<VertexSet>> {
    check_limit("clique enumeration", g.n(), limits.clique)?;
    let n = g.n();
    Ok(max_cliques_masks(&g.masks())
        .1
        .into_iter()
        .map(|m| VertexSet::from_mask(n, m))
        .collect())
}
