//! Cut matrices of vertex bipartitions, their GF(2) rank and their diversity.

use std::collections::HashSet;

use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::Graph;

/// The 0/1 adjacency matrix between `W` (rows) and `V \ W` (columns).
///
/// Row `i` is a bitset over column positions; `row_index[i]` and `col_index[j]`
/// give the graph vertices, both in ascending id order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutMatrix {
    pub rows: Vec<VertexSet>,
    pub row_index: Vec<usize>,
    pub col_index: Vec<usize>,
}

impl CutMatrix {
    /// Builds a matrix directly from 0/1 rows of equal width.
    pub fn from_bits(bits: &[Vec<bool>]) -> Self {
        let width = bits.first().map_or(0, Vec::len);
        let rows = bits
            .iter()
            .map(|r| {
                assert_eq!(r.len(), width, "ragged matrix");
                VertexSet::from_iter(
                    width,
                    r.iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| j),
                )
            })
            .collect();
        CutMatrix {
            rows,
            row_index: (0..bits.len()).collect(),
            col_index: (bits.len()..bits.len() + width).collect(),
        }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.col_index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.n_rows() == 0 || self.n_cols() == 0
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn transpose(&self) -> CutMatrix {
        let mut rows = vec![VertexSet::new(self.n_rows()); self.n_cols()];
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.iter() {
                rows[j].insert(i);
            }
        }
        CutMatrix {
            rows,
            row_index: self.col_index.clone(),
            col_index: self.row_index.clone(),
        }
    }

    pub fn rank(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        gf2_rank(self.rows.iter().map(|r| r.words().to_vec()).collect())
    }

    /// `max(#distinct rows, #distinct columns)`; the zero vector counts as a row
    /// (or column) like any other. Degenerate cuts have diversity 0.
    pub fn diversity(&self) -> usize {
        if self.is_empty() {
            return 0;
        }
        let distinct_rows = self.rows.iter().collect::<HashSet<_>>().len();
        let t = self.transpose();
        let distinct_cols = t.rows.iter().collect::<HashSet<_>>().len();
        distinct_rows.max(distinct_cols)
    }
}

/// Rank over GF(2) of bit-packed rows, by row-major elimination scanning for a
/// pivot column per row.
pub fn gf2_rank(mut rows: Vec<Vec<u64>>) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let pivot = rows[i]
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(wi, &w)| (wi, w.trailing_zeros()));
        let Some((wi, bit)) = pivot else { continue };
        rank += 1;
        let pivot_row = std::mem::take(&mut rows[i]);
        for row in rows.iter_mut().skip(i + 1) {
            if row[wi] >> bit & 1 == 1 {
                for (a, b) in row.iter_mut().zip(&pivot_row) {
                    *a ^= b;
                }
            }
        }
    }
    rank
}

/// Rank of single-word rows via an XOR basis keyed by leading bit.
#[inline]
pub fn gf2_rank_u64(rows: impl IntoIterator<Item = u64>) -> usize {
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for mut x in rows {
        while x != 0 {
            let h = 63 - x.leading_zeros() as usize;
            if basis[h] == 0 {
                basis[h] = x;
                rank += 1;
                break;
            }
            x ^= basis[h];
        }
    }
    rank
}

/// Cut rank of `side` within `universe` for a graph given as neighbor masks.
#[inline]
pub fn cut_rank_mask(masks: &[u64], side: u64, universe: u64) -> usize {
    let other = universe & !side;
    if side == 0 || other == 0 {
        return 0;
    }
    // iterate the smaller side
    let (rows_of, cols) = if side.count_ones() <= other.count_ones() {
        (side, other)
    } else {
        (other, side)
    };
    let mut s = rows_of;
    gf2_rank_u64(std::iter::from_fn(move || {
        if s == 0 {
            return None;
        }
        let v = s.trailing_zeros() as usize;
        s &= s - 1;
        Some(masks[v] & cols)
    }))
}

pub fn cut_matrix(g: &Graph, w: &VertexSet) -> Result<CutMatrix> {
    g.check_set(w)?;
    let row_index: Vec<usize> = w.iter().collect();
    let col_index: Vec<usize> = w.complement().iter().collect();
    let rows = row_index
        .iter()
        .map(|&u| {
            VertexSet::from_iter(
                col_index.len(),
                col_index
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| g.has_edge(u, v))
                    .map(|(j, _)| j),
            )
        })
        .collect();
    Ok(CutMatrix {
        rows,
        row_index,
        col_index,
    })
}

pub fn cut_rank(m: &CutMatrix) -> usize {
    m.rank()
}

pub fn cut_diversity(m: &CutMatrix) -> usize {
    m.diversity()
}
