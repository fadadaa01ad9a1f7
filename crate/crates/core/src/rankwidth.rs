//! Exact rank-width by exhaustive search over leaf-labeled cubic trees.
//!
//! Trees are grown by leaf insertion: the tree on leaves `0..k` gains leaf `k` by
//! subdividing one of its `2k - 3` edges, which reaches every cubic tree on `n`
//! leaves exactly once ((2n-5)!! in total). A partial tree's width lower-bounds
//! every completion, because each of its cuts is a submatrix of the corresponding
//! cut of the completed tree, so partial trees are pruned against the best width
//! found so far.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::cut::cut_rank_mask;
use crate::decomposition::{validate_rank_decomposition, Decomposition, RankDecomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::par;

pub const DEFAULT_LIMIT: usize = 9;

/// Leaves inserted before the search fans out (at most 105 frontier trees).
const SPLIT_LEAVES: usize = 6;

#[derive(Debug, Clone, Copy)]
pub struct RankWidthConfig {
    /// Largest vertex count accepted.
    pub limit: usize,
    /// Evaluate frontier subtrees in parallel (needs the `parallel` feature).
    pub parallel: bool,
}

impl Default for RankWidthConfig {
    fn default() -> Self {
        RankWidthConfig {
            limit: DEFAULT_LIMIT,
            parallel: true,
        }
    }
}

/// Cubic tree on leaves `0..k`; leaf `i` is node `i`, inner nodes are numbered
/// from `n`. Each edge `(a, b, mask)` records the leaves on `b`'s side.
#[derive(Debug, Clone)]
struct PartialTree {
    edges: Vec<(u8, u8, u64)>,
    next_inner: u8,
    leaves: usize,
}

impl PartialTree {
    fn tripod(n: usize) -> Self {
        let c = n as u8;
        PartialTree {
            edges: vec![(c, 0, 1), (c, 1, 2), (c, 2, 4)],
            next_inner: c + 1,
            leaves: 3,
        }
    }

    fn insert(&self, edge: usize, x: usize) -> PartialTree {
        let all = (1u64 << self.leaves) - 1;
        let bit = 1u64 << x;
        let (a, b, s) = self.edges[edge];
        let rest = all & !s;
        let m = self.next_inner;
        let mut edges = Vec::with_capacity(self.edges.len() + 2);
        for (i, &(c, d, t)) in self.edges.iter().enumerate() {
            if i == edge {
                edges.push((a, m, s | bit));
                continue;
            }
            let strict = |sub: u64| sub & !t == 0 && sub != t;
            let t = if strict(s) || strict(rest) {
                t | bit
            } else {
                t
            };
            edges.push((c, d, t));
        }
        edges.push((m, b, s));
        edges.push((m, x as u8, bit));
        PartialTree {
            edges,
            next_inner: m + 1,
            leaves: self.leaves + 1,
        }
    }

    fn width(&self, masks: &[u64]) -> usize {
        let all = (1u64 << self.leaves) - 1;
        self.edges
            .iter()
            .map(|&(_, _, t)| cut_rank_mask(masks, t, all))
            .max()
            .unwrap_or(0)
    }

    fn into_decomposition(self, n: usize) -> Decomposition {
        Decomposition::new(
            2 * n - 2,
            self.edges
                .iter()
                .map(|&(a, b, _)| (a as usize, b as usize))
                .collect(),
            (0..n).collect(),
            None,
        )
        .expect("leaf insertion yields a tree")
    }
}

pub fn exact_rank_width(g: &Graph) -> Result<(usize, RankDecomposition)> {
    exact_rank_width_with(g, &RankWidthConfig::default())
}

pub fn exact_rank_width_with(
    g: &Graph,
    cfg: &RankWidthConfig,
) -> Result<(usize, RankDecomposition)> {
    let n = g.n();
    if n > cfg.limit.min(64) {
        return Err(Error::Resource {
            what: "exact rank-width",
            size: n,
            limit: cfg.limit.min(64),
        });
    }
    let d = match n {
        0 | 1 => Decomposition::trivial(n),
        2 => Decomposition::new(2, vec![(0, 1)], vec![0, 1], None)?,
        _ => search(g, cfg.parallel).into_decomposition(n),
    };
    let rd = validate_rank_decomposition(g, &d)?;
    Ok((rd.width(), rd))
}

fn search(g: &Graph, parallel: bool) -> PartialTree {
    let n = g.n();
    let masks = g.masks();
    let mut frontier = vec![PartialTree::tripod(n)];
    for x in 3..n.min(SPLIT_LEAVES) {
        frontier = frontier
            .iter()
            .flat_map(|t| (0..t.edges.len()).map(move |e| t.insert(e, x)))
            .collect();
    }
    let global = AtomicUsize::new(usize::MAX);
    let results = par::map(&frontier, parallel, |t| {
        let mut best = None;
        let w = t.width(&masks);
        if w <= global.load(Ordering::Relaxed) {
            descend(t, w, &masks, n, &mut best, &global);
        }
        best
    });
    // smallest width, first frontier tree on ties
    results
        .into_iter()
        .flatten()
        .min_by_key(|(w, _)| *w)
        .map(|(_, t)| t)
        .expect("at least one completion survives pruning")
}

fn descend(
    tree: &PartialTree,
    width: usize,
    masks: &[u64],
    n: usize,
    best: &mut Option<(usize, PartialTree)>,
    global: &AtomicUsize,
) {
    if tree.leaves == n {
        if best.as_ref().is_none_or(|(b, _)| width < *b) {
            *best = Some((width, tree.clone()));
            global.fetch_min(width, Ordering::Relaxed);
        }
        return;
    }
    let x = tree.leaves;
    for e in 0..tree.edges.len() {
        let child = tree.insert(e, x);
        let w = child.width(masks).max(width);
        // strict against the shared bound, so every subtree reports its own first
        // optimum regardless of scheduling
        if w > global.load(Ordering::Relaxed) {
            continue;
        }
        if best.as_ref().is_some_and(|(b, _)| w >= *b) {
            continue;
        }
        descend(&child, w, masks, n, best, global);
    }
}

/// Number of leaf-labeled cubic trees on `n` leaves produced by leaf insertion.
pub fn count_cubic_trees(n: usize) -> usize {
    fn walk(t: &PartialTree, n: usize) -> usize {
        if t.leaves == n {
            return 1;
        }
        (0..t.edges.len())
            .map(|e| walk(&t.insert(e, t.leaves), n))
            .sum()
    }
    match n {
        0..=3 => 1,
        _ => walk(&PartialTree::tripod(n), n),
    }
}
