use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{record, Lines};

use super::clique::maximum_cliques;

/// A total vertex coloring with colors `1..`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::Input(format!(
                "vertex {v} has color 0; colors start at 1"
            )));
        }
        Ok(Coloring { colors })
    }

    pub fn constant(n: usize) -> Self {
        Coloring { colors: vec![1; n] }
    }

    /// From 0-based labels.
    pub fn from_zero_based(labels: &[usize]) -> Self {
        Coloring {
            colors: labels.iter().map(|c| c + 1).collect(),
        }
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Largest color used (0 for an empty coloring).
    pub fn palette_size(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn distinct_colors(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    /// Vertices of each color `1..=palette_size`.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.palette_size()];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c - 1].push(v);
        }
        out
    }

    pub fn parse(text: &str, n: usize) -> Result<Coloring> {
        let mut lines = Lines::new(text);
        let mut colors = vec![0; n];
        while let Some((line, text)) = lines.next_record() {
            let f = record(line, text, "c", 2)?;
            let (v, c) = (f[0], f[1]);
            if v >= n {
                return Err(Error::Parse {
                    line,
                    message: format!("vertex {v} out of range for {n} vertices"),
                });
            }
            if c == 0 {
                return Err(Error::Parse {
                    line,
                    message: "colors start at 1".into(),
                });
            }
            if colors[v] != 0 {
                return Err(Error::Parse {
                    line,
                    message: format!("vertex {v} colored twice"),
                });
            }
            colors[v] = c;
        }
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::Input(format!(
                "partial coloring: vertex {v} has no color"
            )));
        }
        Ok(Coloring { colors })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (v, c) in self.colors.iter().enumerate() {
            writeln!(s, "c {v} {c}").unwrap();
        }
        s
    }
}

fn check_total(g: &Graph, c: &Coloring) -> Result<()> {
    if c.len() != g.n() {
        return Err(Error::Input(format!(
            "partial coloring: {} colors for {} vertices",
            c.len(),
            g.n()
        )));
    }
    Ok(())
}

pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    check_total(g, c)?;
    Ok(g.edges().all(|(u, v)| c.color(u) != c.color(v)))
}

/// True iff every maximum clique of `g` sees at least two colors. Graphs with
/// clique number at most 1 pass trivially.
pub fn no_max_clique_monochromatic(g: &Graph, c: &Coloring) -> Result<bool> {
    check_total(g, c)?;
    let cliques = maximum_cliques(g)?;
    if cliques.first().is_none_or(|k| k.len() <= 1) {
        return Ok(true);
    }
    Ok(cliques.iter().all(|k| {
        let first = c.color(k.first().unwrap());
        k.iter().any(|v| c.color(v) != first)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle};
    use crate::oracles::clique_number;
    use crate::VertexSet;
    use rand::{Rng, SeedableRng};

    #[test]
    fn properness_examples() {
        let g = cycle(6);
        assert!(is_proper(&g, &Coloring::new((1..=6).collect()).unwrap()).unwrap());
        assert!(!is_proper(&complete(2), &Coloring::constant(2)).unwrap());
        let alt = Coloring::new(vec![1, 2, 1, 2]).unwrap();
        assert!(is_proper(&cycle(4), &alt).unwrap());
        assert!(is_proper(&cycle(4), &Coloring::constant(3)).is_err());
        assert!(Coloring::new(vec![0, 1]).is_err());
    }

    #[test]
    fn monochromatic_clique_examples() {
        let g = cycle(7);
        let proper = Coloring::new(vec![1, 2, 1, 2, 1, 2, 3]).unwrap();
        assert!(no_max_clique_monochromatic(&g, &proper).unwrap());
        assert!(!no_max_clique_monochromatic(&complete(3), &Coloring::constant(3)).unwrap());
        // clique number 1
        assert!(no_max_clique_monochromatic(&Graph::empty(3), &Coloring::constant(3)).unwrap());
    }

    #[test]
    fn agrees_with_per_class_clique_number() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let n = rng.gen_range(1..=10);
            let g = crate::gen::gnp(&mut rng, n, 0.5);
            let k = rng.gen_range(1..=3);
            let c = Coloring::new((0..n).map(|_| rng.gen_range(1..=k)).collect()).unwrap();
            let omega = clique_number(&g).unwrap();
            let direct = omega <= 1
                || c.classes().iter().all(|class| {
                    let s = VertexSet::from_iter(n, class.iter().copied());
                    let (h, _) = g.induced_subgraph(&s).unwrap();
                    clique_number(&h).unwrap() < omega
                });
            assert_eq!(no_max_clique_monochromatic(&g, &c).unwrap(), direct);
        }
    }

    #[test]
    fn text_roundtrip() {
        let c = Coloring::new(vec![2, 1, 3]).unwrap();
        assert_eq!(Coloring::parse(&c.to_text(), 3).unwrap(), c);
        assert!(Coloring::parse("c 0 1\n", 2).is_err());
        assert!(Coloring::parse("c 0 1\nc 0 2\n", 1).is_err());
    }
}
