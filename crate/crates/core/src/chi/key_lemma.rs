//! Coloring a connected graph with at most `d(k+1)` colors so that no maximum
//! clique is monochromatic, given a decomposition of diversity at most `d` whose
//! piece graphs are `k`-colorable.
//!
//! The tree is rooted at a leaf with empty preimage and processed top-down in BFS
//! order. When node `v` is reached, the vertices of `V_v` already colored are
//! exactly those with a neighbor outside `V_v`, and they use at most `d` colors
//! (one per outside-neighborhood class). The step colors the set `W` of
//! still-uncolored vertices of `V_v` that touch an edge of the piece at `v` or sit
//! on `v`, using fresh colors from outside those `d`. Two vertices of `W` share a
//! color iff they agree on the pair (twin-consistent proper color in the piece,
//! outside class inside their child subtree).

use std::collections::{BTreeMap, BTreeSet};

use crate::bitset::VertexSet;
use crate::decomposition::{
    decomposition_diversity, partition_by_outside, piece_graph, Decomposition, RootedTree,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracles::{is_proper, Coloring};

use super::oracle::PieceColorer;

#[derive(Debug, Clone, Copy)]
pub struct KeyLemmaOptions {
    /// Re-check the four inductive properties of the construction after every step.
    pub check_invariants: bool,
}

impl Default for KeyLemmaOptions {
    fn default() -> Self {
        KeyLemmaOptions {
            check_invariants: cfg!(debug_assertions),
        }
    }
}

/// Result of a key-lemma run with the bookkeeping needed to audit it.
#[derive(Debug, Clone)]
pub struct KeyLemmaRun {
    pub coloring: Coloring,
    /// The rooted decomposition actually processed.
    pub decomposition: Decomposition,
    /// Position in the processing order of the node whose step colored each vertex.
    pub colored_at: Vec<usize>,
    pub order: Vec<usize>,
}

pub fn key_lemma_coloring(
    g: &Graph,
    dec: &Decomposition,
    oracle: &dyn PieceColorer,
    d: usize,
    k: usize,
) -> Result<Coloring> {
    Ok(key_lemma_coloring_with(g, dec, oracle, d, k, &KeyLemmaOptions::default())?.coloring)
}

struct State<'a> {
    g: &'a Graph,
    rt: RootedTree,
    tau: &'a [usize],
    /// `class_of[x][u]`: index `j` with `u` in `V_x^j`, or `None` outside `V_x`.
    class_of: Vec<Vec<Option<usize>>>,
    phi: Vec<Option<usize>>,
    colored_at: Vec<usize>,
}

pub fn key_lemma_coloring_with(
    g: &Graph,
    dec: &Decomposition,
    oracle: &dyn PieceColorer,
    d: usize,
    k: usize,
    opts: &KeyLemmaOptions,
) -> Result<KeyLemmaRun> {
    dec.check_graph(g)?;
    if g.n() < 2 {
        return Err(Error::Input(
            "need a graph with at least two vertices".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if d == 0 || k == 0 {
        return Err(Error::Input("d and k must be positive".into()));
    }
    let dec = dec.root_normalized();
    let diversity = decomposition_diversity(g, &dec)?;
    if diversity > d {
        return Err(Error::DiversityExceeded {
            actual: diversity,
            allowed: d,
        });
    }
    let rt = dec.rooted()?;
    let n = g.n();
    let class_of = (0..dec.nodes())
        .map(|x| {
            let mut idx = vec![None; n];
            if x != rt.root {
                for (j, class) in partition_by_outside(g, &rt.subtree[x]).iter().enumerate() {
                    for u in class.iter() {
                        idx[u] = Some(j);
                    }
                }
            }
            idx
        })
        .collect();
    let mut st = State {
        g,
        rt,
        tau: dec.tau(),
        class_of,
        phi: vec![None; n],
        colored_at: vec![usize::MAX; n],
    };
    let palette = d * (k + 1);
    let order = st.rt.order.clone();
    for step in 1..order.len() {
        let before = opts.check_invariants.then(|| st.phi.clone());
        st.step(step, &dec, oracle, d, k, palette)?;
        if let Some(before) = before {
            st.check(step, &before)?;
        }
    }
    let colors: Vec<usize> = st
        .phi
        .iter()
        .enumerate()
        .map(|(u, c)| c.ok_or_else(|| Error::Invariant(format!("vertex {u} left uncolored"))))
        .collect::<Result<_>>()?;
    let coloring = Coloring::new(colors)?;
    if coloring.palette_size() > palette {
        return Err(Error::Invariant(format!(
            "palette {} exceeds d(k+1) = {palette}",
            coloring.palette_size()
        )));
    }
    Ok(KeyLemmaRun {
        coloring,
        colored_at: st.colored_at,
        order,
        decomposition: dec,
    })
}

/// Proper coloring of `piece` in which twins share a color: the oracle colors the
/// induced subgraph on one representative per twin class, and the colors are lifted.
fn twin_consistent_coloring(
    piece: &Graph,
    node: usize,
    oracle: &dyn PieceColorer,
    k: usize,
) -> Result<Vec<usize>> {
    let classes = piece.twin_classes();
    let reps = VertexSet::from_iter(piece.n(), classes.iter().map(|c| c[0]));
    let (quotient, _) = piece.induced_subgraph(&reps)?;
    let c = oracle.color(&quotient)?;
    if !is_proper(&quotient, &c)? {
        return Err(Error::OracleImproper { node });
    }
    if c.palette_size() > k {
        return Err(Error::OracleBudget {
            node,
            used: c.palette_size(),
            budget: k,
        });
    }
    let mut psi1 = vec![0; piece.n()];
    // representatives are listed in ascending order, matching the quotient ids
    for (i, class) in classes.iter().enumerate() {
        for &u in class {
            psi1[u] = c.color(i);
        }
    }
    Ok(psi1)
}

impl State<'_> {
    fn step(
        &mut self,
        step: usize,
        dec: &Decomposition,
        oracle: &dyn PieceColorer,
        d: usize,
        k: usize,
        palette: usize,
    ) -> Result<()> {
        let v = self.rt.order[step];
        let inside = &self.rt.subtree[v];
        let mut used = BTreeSet::new();
        for u in inside.iter() {
            match (self.phi[u], self.class_of[v][u]) {
                (Some(c), Some(j)) if j > 0 => {
                    used.insert(c);
                }
                (None, Some(0)) => {}
                _ => {
                    return Err(Error::Invariant(format!(
                        "at node {v}: vertex {u} colored state disagrees with its outside class"
                    )))
                }
            }
        }
        if used.len() > d {
            return Err(Error::Invariant(format!(
                "{} colors already on V_{v}, at most {d} expected",
                used.len()
            )));
        }

        let piece = piece_graph(self.g, dec, v)?;
        let psi1 = twin_consistent_coloring(&piece, v, oracle, k)?;

        let mut pairs: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for w in inside.iter() {
            if self.class_of[v][w] != Some(0) {
                continue;
            }
            let on_v = self.tau[w] == v;
            if !on_v && piece.degree(w) == 0 {
                continue;
            }
            let psi2 = if on_v {
                1
            } else {
                let child = self
                    .rt
                    .child_towards(v, self.tau[w])
                    .expect("vertex of V_v not on v lies below a child");
                match self.class_of[child][w] {
                    Some(j) if j > 0 => j,
                    _ => {
                        return Err(Error::Invariant(format!(
                            "vertex {w} has piece edges at {v} but no neighbor outside V_{child}"
                        )))
                    }
                }
            };
            pairs.entry((psi1[w], psi2)).or_default().push(w);
        }

        let mut fresh = (1..=palette).filter(|c| !used.contains(c));
        for members in pairs.values() {
            let c = fresh
                .next()
                .ok_or_else(|| Error::Invariant(format!("ran out of fresh colors at node {v}")))?;
            for &w in members {
                self.phi[w] = Some(c);
                self.colored_at[w] = step;
            }
        }
        Ok(())
    }

    /// Audits the four inductive properties after step `step`.
    fn check(&self, step: usize, before: &[Option<usize>]) -> Result<()> {
        let fail = |p: u8, msg: String| {
            Err(Error::Invariant(format!(
                "property {p} after step {step}: {msg}"
            )))
        };
        for (u, old) in before.iter().enumerate() {
            if old.is_some() && *old != self.phi[u] {
                return fail(1, format!("vertex {u} was recolored"));
            }
        }
        let order = &self.rt.order;
        let mut processed = vec![false; order.len()];
        for &x in &order[..=step] {
            processed[x] = true;
        }
        for (u, w) in self.g.edges() {
            let o = self.rt.origin(u, w);
            if processed[o] && (self.phi[u].is_none() || self.phi[w].is_none()) {
                return fail(
                    2,
                    format!("edge ({u}, {w}) with origin {o} has an uncolored end"),
                );
            }
        }
        for &x in &order[step + 1..] {
            let mut by_class: BTreeMap<usize, BTreeSet<Option<usize>>> = BTreeMap::new();
            for u in self.rt.subtree[x].iter() {
                let j = self.class_of[x][u].expect("member of V_x");
                by_class.entry(j).or_default().insert(self.phi[u]);
            }
            for (j, seen) in by_class {
                if seen.len() != 1 {
                    return fail(3, format!("class V_{x}^{j} is partly or mixed colored"));
                }
            }
        }
        for (u, w) in self.g.edges() {
            let (Some(a), Some(b)) = (self.phi[u], self.phi[w]) else {
                continue;
            };
            if a != b {
                continue;
            }
            let s = self.colored_at[u];
            let node = order[s];
            let shared = s == self.colored_at[w]
                && self.rt.children[node].iter().any(|&c| {
                    matches!((self.class_of[c][u], self.class_of[c][w]), (Some(i), Some(j)) if i == j && i > 0)
                });
            if !shared {
                return fail(
                    4,
                    format!("monochromatic edge ({u}, {w}) not inside a common V_c^j"),
                );
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chi::oracle::ExactColorer;
    use crate::decomposition::star_decomposition;
    use crate::graph::{complete, cycle};
    use crate::oracles::no_max_clique_monochromatic;

    fn checked() -> KeyLemmaOptions {
        KeyLemmaOptions {
            check_invariants: true,
        }
    }

    #[test]
    fn single_edge_on_one_node() {
        let g = complete(2);
        // node 0 carries both vertices, node 1 is the empty root leaf
        let d = Decomposition::new(2, vec![(0, 1)], vec![0, 0], Some(1)).unwrap();
        let run =
            key_lemma_coloring_with(&g, &d, &ExactColorer::default(), 1, 2, &checked()).unwrap();
        let c = run.coloring;
        assert_ne!(c.color(0), c.color(1));
        assert!(c.palette_size() <= 3);
        assert!(no_max_clique_monochromatic(&g, &c).unwrap());
    }

    #[test]
    fn complete_graph_on_a_star() {
        for n in 2..=7 {
            let g = complete(n);
            let d = star_decomposition(&g);
            let c = key_lemma_coloring_with(&g, &d, &ExactColorer::default(), 1, n, &checked())
                .unwrap()
                .coloring;
            assert!(no_max_clique_monochromatic(&g, &c).unwrap());
            assert!(c.palette_size() <= n + 1);
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let g = cycle(6);
        let d = star_decomposition(&g);
        let exact = ExactColorer::default();
        assert!(matches!(
            key_lemma_coloring(&g, &d, &exact, 1, 3),
            Err(Error::DiversityExceeded { .. })
        ));
        let two = complete(2).disjoint_union(&complete(2));
        assert_eq!(
            key_lemma_coloring(&two, &star_decomposition(&two), &exact, 2, 2).unwrap_err(),
            Error::Disconnected
        );
        // the center piece of a star decomposition of K4 is K4 itself
        let k4 = complete(4);
        assert!(matches!(
            key_lemma_coloring(&k4, &star_decomposition(&k4), &exact, 2, 3),
            Err(Error::OracleBudget { budget: 3, .. })
        ));
        let constant = |h: &Graph| Ok(Coloring::constant(h.n()));
        assert!(matches!(
            key_lemma_coloring(&k4, &star_decomposition(&k4), &constant, 2, 4),
            Err(Error::OracleImproper { .. })
        ));
        assert!(
            key_lemma_coloring(&Graph::empty(1), &Decomposition::trivial(1), &exact, 1, 1).is_err()
        );
    }

    #[test]
    fn single_node_tree_uses_unit_diversity() {
        let g = cycle(5);
        let run = key_lemma_coloring_with(
            &g,
            &Decomposition::trivial(5),
            &ExactColorer::default(),
            1,
            3,
            &checked(),
        )
        .unwrap();
        assert!(run.coloring.palette_size() <= 4);
        assert!(no_max_clique_monochromatic(&g, &run.coloring).unwrap());
    }
}
