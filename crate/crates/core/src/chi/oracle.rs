use crate::error::Result;
use crate::graph::Graph;
use crate::oracles::{chromatic_number_with, dsatur_coloring, Coloring, Limits};

/// Supplies proper colorings of piece graphs. Implementations must return a
/// proper coloring; the colorers check the result and the color budget.
pub trait PieceColorer: Sync {
    fn color(&self, piece: &Graph) -> Result<Coloring>;
}

/// Optimal colorings via the exact chromatic-number search.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactColorer {
    pub limits: Limits,
}

impl PieceColorer for ExactColorer {
    fn color(&self, piece: &Graph) -> Result<Coloring> {
        Ok(chromatic_number_with(piece, &self.limits)?.1)
    }
}

/// DSatur greedy colorings; no optimality guarantee.
#[derive(Debug, Clone, Copy, Default)]
pub struct GreedyColorer;

impl PieceColorer for GreedyColorer {
    fn color(&self, piece: &Graph) -> Result<Coloring> {
        Ok(dsatur_coloring(piece))
    }
}

/// Exact within the chromatic-number limit, greedy beyond it.
#[derive(Debug, Clone, Copy, Default)]
pub struct DefaultColorer {
    pub limits: Limits,
}

impl PieceColorer for DefaultColorer {
    fn color(&self, piece: &Graph) -> Result<Coloring> {
        if piece.n() <= self.limits.chromatic {
            ExactColorer {
                limits: self.limits,
            }
            .color(piece)
        } else {
            GreedyColorer.color(piece)
        }
    }
}

impl<F> PieceColorer for F
where
    F: Fn(&Graph) -> Result<Coloring> + Sync,
{
    fn color(&self, piece: &Graph) -> Result<Coloring> {
        self(piece)
    }
}
