//! Proper coloring by recursion on the clique number.
//!
//! A key-lemma coloring splits the graph into color classes of strictly smaller
//! clique number. Each class, with the decomposition restricted to it, is colored
//! recursively, and a vertex receives the pair (class color, color inside its
//! class), flattened to one integer.

use crate::bitset::VertexSet;
use crate::decomposition::{decomposition_diversity, decomposition_rank, restrict, Decomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::{clique_number_with, Coloring, Limits};
use crate::par;

use super::bound::{color_bound, ChiBoundFn};
use super::key_lemma::{key_lemma_coloring_with, KeyLemmaOptions};
use super::oracle::PieceColorer;

#[derive(Debug, Clone, Copy)]
pub struct ChiColoringOptions {
    pub key_lemma: KeyLemmaOptions,
    /// Color independent classes and components in parallel.
    pub parallel: bool,
    pub limits: Limits,
}

impl Default for ChiColoringOptions {
    fn default() -> Self {
        ChiColoringOptions {
            key_lemma: KeyLemmaOptions::default(),
            parallel: true,
            limits: Limits::default(),
        }
    }
}

pub fn chi_bounded_coloring(
    g: &Graph,
    dec: &Decomposition,
    oracle: &dyn PieceColorer,
    bound: &ChiBoundFn,
) -> Result<Coloring> {
    chi_bounded_coloring_with(g, dec, oracle, bound, &ChiColoringOptions::default())
}

pub fn chi_bounded_coloring_with(
    g: &Graph,
    dec: &Decomposition,
    oracle: &dyn PieceColorer,
    bound: &ChiBoundFn,
    opts: &ChiColoringOptions,
) -> Result<Coloring> {
    dec.check_graph(g)?;
    let rank = decomposition_rank(g, dec)?;
    if rank > bound.r() {
        return Err(Error::RankExceeded {
            actual: rank,
            allowed: bound.r(),
        });
    }
    let ctx = Ctx {
        oracle,
        bound,
        opts,
    };
    ctx.color(g, dec)
}

struct Ctx<'a> {
    oracle: &'a dyn PieceColorer,
    bound: &'a ChiBoundFn,
    opts: &'a ChiColoringOptions,
}

impl Ctx<'_> {
    /// Components share one palette.
    fn color(&self, g: &Graph, dec: &Decomposition) -> Result<Coloring> {
        let n = g.n();
        let comps = g.components();
        let parts = par::map(&comps, self.opts.parallel, |comp| -> Result<Vec<usize>> {
            if comp.len() == 1 {
                return Ok(vec![1]);
            }
            let (h, hd, _) = restrict(g, dec, comp)?;
            Ok(self.color_connected(&h, &hd)?.colors().to_vec())
        });
        let mut colors = vec![0; n];
        for (comp, part) in comps.iter().zip(parts) {
            for (v, c) in comp.iter().zip(part?) {
                colors[v] = c;
            }
        }
        Coloring::new(colors)
    }

    fn color_connected(&self, g: &Graph, dec: &Decomposition) -> Result<Coloring> {
        let omega = clique_number_with(g, &self.opts.limits)?;
        if omega <= 1 {
            return Ok(Coloring::constant(g.n()));
        }
        let r = self.bound.r();
        let d = decomposition_diversity(g, dec)?.min(1 << r).max(1);
        let k = self.bound.f(omega);
        let phi =
            key_lemma_coloring_with(g, dec, self.oracle, d, k, &self.opts.key_lemma)?.coloring;

        let classes: Vec<VertexSet> = phi
            .classes()
            .into_iter()
            .filter(|c| !c.is_empty())
            .map(|c| VertexSet::from_iter(g.n(), c))
            .collect();
        let inner = par::map(&classes, self.opts.parallel, |class| -> Result<Coloring> {
            let (h, hd, _) = restrict(g, dec, class)?;
            let sub_omega = clique_number_with(&h, &self.opts.limits)?;
            if sub_omega >= omega {
                return Err(Error::Invariant(format!(
                    "a color class keeps clique number {sub_omega}"
                )));
            }
            self.color(&h, &hd)
        });
        let inner: Vec<Coloring> = inner.into_iter().collect::<Result<_>>()?;
        let stride = inner.iter().map(Coloring::palette_size).max().unwrap_or(1);

        let mut colors = vec![0; g.n()];
        for (class, sub) in classes.iter().zip(&inner) {
            for (v, c) in class.iter().zip(sub.colors()) {
                colors[v] = (phi.color(v) - 1) * stride + c;
            }
        }
        let coloring = Coloring::new(colors)?;
        let limit = color_bound(self.bound, omega)?;
        if coloring.palette_size() > limit {
            return Err(Error::Invariant(format!(
                "palette {} exceeds the bound {limit} for clique number {omega}",
                coloring.palette_size()
            )));
        }
        Ok(coloring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chi::oracle::ExactColorer;
    use crate::decomposition::star_decomposition;
    use crate::graph::{complete_bipartite, cycle};
    use crate::oracles::is_proper;
    use crate::rankwidth::exact_rank_width;

    #[test]
    fn edgeless_graph_gets_one_color() {
        let g = Graph::empty(5);
        let b = ChiBoundFn::constant(1, 0).unwrap();
        let c = chi_bounded_coloring(&g, &star_decomposition(&g), &ExactColorer::default(), &b)
            .unwrap();
        assert_eq!(c, Coloring::constant(5));
    }

    #[test]
    fn five_cycle_with_optimal_witness() {
        let g = cycle(5);
        let (w, rd) = exact_rank_width(&g).unwrap();
        assert_eq!(w, 2);
        let b = ChiBoundFn::constant(3, 2).unwrap();
        let c = chi_bounded_coloring(&g, rd.decomposition(), &ExactColorer::default(), &b).unwrap();
        assert!(is_proper(&g, &c).unwrap());
        assert!(c.palette_size() <= 16);
    }

    #[test]
    fn complete_bipartite_on_a_star() {
        let g = complete_bipartite(3, 3);
        let b = ChiBoundFn::constant(2, 1).unwrap();
        let c = chi_bounded_coloring(&g, &star_decomposition(&g), &ExactColorer::default(), &b)
            .unwrap();
        assert!(is_proper(&g, &c).unwrap());
        assert!(c.palette_size() <= 6);
    }

    #[test]
    fn rank_budget_is_enforced() {
        let g = cycle(5);
        let b = ChiBoundFn::constant(3, 0).unwrap();
        assert_eq!(
            chi_bounded_coloring(&g, &star_decomposition(&g), &ExactColorer::default(), &b),
            Err(Error::RankExceeded {
                actual: 1,
                allowed: 0
            })
        );
    }

    #[test]
    fn disconnected_inputs_share_a_palette() {
        let g = cycle(5).disjoint_union(&cycle(4));
        let b = ChiBoundFn::constant(3, 1).unwrap();
        let seq = ChiColoringOptions {
            parallel: false,
            ..Default::default()
        };
        let dec = star_decomposition(&g);
        let a = chi_bounded_coloring_with(&g, &dec, &ExactColorer::default(), &b, &seq).unwrap();
        let p = chi_bounded_coloring(&g, &dec, &ExactColorer::default(), &b).unwrap();
        assert_eq!(a, p);
        assert!(is_proper(&g, &a).unwrap());
    }
}
