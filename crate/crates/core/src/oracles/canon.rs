//! Exact canonical labeling for small graphs.
//!
//! A labeling lists the vertices in some order; its code is the sequence of
//! `(invariant, row)` pairs where `row` records adjacency to the earlier
//! vertices. The canonical labeling is the one with the lexicographically largest
//! code. The search places one vertex per level, branching only over vertices that
//! extend the current prefix maximally, skips all but one of a set of twins
//! (swapping twins is an automorphism), and abandons prefixes that already
//! fall below the best code.

use crate::graph::Graph;

/// Adjacency masks of a graph relabeled into canonical order. Two graphs are
/// isomorphic iff their canonical forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    masks: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.masks.len()
    }

    pub fn to_graph(&self) -> Graph {
        Graph::from_masks(&self.masks)
    }
}

type Key = (u64, u64);

struct Search<'a> {
    masks: &'a [u64],
    inv: Vec<u64>,
    best: Option<(Vec<Key>, Vec<usize>)>,
}

impl Search<'_> {
    fn key(&self, placed: &[usize], v: usize) -> Key {
        let mut row = 0u64;
        for (i, &p) in placed.iter().enumerate() {
            if self.masks[v] >> p & 1 == 1 {
                row |= 1 << (63 - i);
            }
        }
        (self.inv[v], row)
    }

    fn twins(&self, a: usize, b: usize) -> bool {
        let strip = !((1u64 << a) | (1u64 << b));
        self.masks[a] & strip == self.masks[b] & strip
    }

    fn run(&mut self, placed: &mut Vec<usize>, code: &mut Vec<Key>, remaining: u64) {
        if remaining == 0 {
            if self.best.as_ref().is_none_or(|(b, _)| *code > *b) {
                self.best = Some((code.clone(), placed.clone()));
            }
            return;
        }
        let mut cands: Vec<usize> = Vec::new();
        let mut top: Option<Key> = None;
        let mut rest = remaining;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let k = self.key(placed, v);
            match top {
                Some(t) if k < t => {}
                Some(t) if k == t => cands.push(v),
                _ => {
                    top = Some(k);
                    cands.clear();
                    cands.push(v);
                }
            }
        }
        let top = top.unwrap();
        let pos = code.len();
        code.push(top);
        if let Some((b, _)) = &self.best {
            if code[..] < b[..=pos] {
                code.pop();
                return;
            }
        }
        let mut tried: Vec<usize> = Vec::new();
        for v in cands {
            if tried.iter().any(|&t| self.twins(t, v)) {
                continue;
            }
            tried.push(v);
            placed.push(v);
            self.run(placed, code, remaining & !(1 << v));
            placed.pop();
            // a better code found below may now dominate this prefix
            if let Some((b, _)) = &self.best {
                if code[..] < b[..=pos] {
                    break;
                }
            }
        }
        code.pop();
    }
}

/// Returns the canonical form and the canonical order (`order[i]` is the vertex
/// placed at position `i`). Requires `n <= 64`.
pub fn canonical_form(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.n();
    assert!(n <= 64, "canonical labeling supports at most 64 vertices");
    let masks = g.masks();
    let inv: Vec<u64> = (0..n)
        .map(|v| {
            let deg = masks[v].count_ones() as u64;
            let mut nb = masks[v];
            let mut nsum = 0u64;
            while nb != 0 {
                let u = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                nsum += masks[u].count_ones() as u64;
            }
            deg << 32 | nsum
        })
        .collect();
    let mut s = Search {
        masks: &masks,
        inv,
        best: None,
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    s.run(&mut Vec::with_capacity(n), &mut Vec::with_capacity(n), all);
    let order = s.best.map(|(_, o)| o).unwrap_or_default();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut out = vec![0u64; n];
    for (i, &v) in order.iter().enumerate() {
        let mut nb = masks[v];
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            out[i] |= 1 << pos[u];
        }
    }
    (CanonicalForm { masks: out }, order)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_form(a).0 == canonical_form(b).0
}
