//! Simple undirected graphs over dense vertex ids, plus the surgery used by the
//! colorers: induced subgraphs, twins, local complementation, 1-joins and blow-ups.

use std::fmt::Write as _;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Undirected simple graph on vertices `0..n` with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// Id bookkeeping for operations that change the vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    /// `new_to_old[new]` is the source id of a result vertex.
    pub new_to_old: Vec<usize>,
    /// `old_to_new[old]` is the result id, or `None` if the vertex was dropped.
    pub old_to_new: Vec<Option<usize>>,
}

impl VertexMap {
    fn from_kept(old_n: usize, kept: impl IntoIterator<Item = usize>) -> Self {
        let new_to_old: Vec<usize> = kept.into_iter().collect();
        let mut old_to_new = vec![None; old_n];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        VertexMap {
            new_to_old,
            old_to_new,
        }
    }
}

/// Vertex maps for both operands of a 1-join.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinMap {
    pub left: Vec<Option<usize>>,
    pub right: Vec<Option<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(n); n],
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Input(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from per-vertex neighbor masks (`n <= 64`).
    pub fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        let g = Graph {
            adj: masks.iter().map(|&m| VertexSet::from_mask(n, m)).collect(),
        };
        g.debug_check();
        g
    }

    /// Per-vertex neighbor masks; requires `n <= 64`.
    pub fn masks(&self) -> Vec<u64> {
        self.adj.iter().map(VertexSet::to_mask).collect()
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    fn toggle_edge(&mut self, u: usize, v: usize) {
        if self.has_edge(u, v) {
            self.remove_edge(u, v);
        } else {
            self.add_edge(u, v);
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n() {
            return Err(Error::Input(format!(
                "vertex set over {} ids used with a graph on {} vertices",
                s.universe(),
                self.n()
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Checks symmetry, irreflexivity and row width.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        for u in 0..n {
            if self.adj[u].universe() != n {
                return Err(Error::Invariant(format!("row {u} has the wrong width")));
            }
            if self.adj[u].contains(u) {
                return Err(Error::Invariant(format!("self-loop at {u}")));
            }
            for v in self.adj[u].iter() {
                if !self.adj[v].contains(u) {
                    return Err(Error::Invariant(format!("asymmetric pair ({u}, {v})")));
                }
            }
        }
        Ok(())
    }

    #[inline]
    fn debug_check(&self) {
        debug_assert!(self.validate().is_ok(), "{:?}", self.validate());
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, VertexMap)> {
        self.check_set(s)?;
        let map = VertexMap::from_kept(self.n(), s.iter());
        let mut g = Graph::empty(map.new_to_old.len());
        for (nu, &u) in map.new_to_old.iter().enumerate() {
            for v in self.adj[u].intersection(s).iter() {
                let nv = map.old_to_new[v].expect("neighbor inside s");
                if nu < nv {
                    g.add_edge(nu, nv);
                }
            }
        }
        g.debug_check();
        Ok((g, map))
    }

    /// Graph with vertex `v` removed; ids above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut keep = self.vertices();
        keep.remove(v);
        Ok(self.induced_subgraph(&keep)?.0)
    }

    /// Partition of the vertices into classes of equal open neighborhood.
    /// Classes are ordered by their smallest member.
    pub fn twin_classes(&self) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut index: std::collections::HashMap<&VertexSet, usize> = Default::default();
        for v in 0..self.n() {
            match index.get(&self.adj[v]) {
                Some(&c) => classes[c].push(v),
                None => {
                    index.insert(&self.adj[v], classes.len());
                    classes.push(vec![v]);
                }
            }
        }
        classes
    }

    /// Complements the edge set inside `N(v)`.
    pub fn local_complement(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let mut g = self.clone();
        let nbrs: Vec<usize> = self.adj[v].iter().collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                g.toggle_edge(a, b);
            }
        }
        g.debug_check();
        Ok(g)
    }

    /// The 1-join of `(self, v1)` and `(other, v2)`: both markers are deleted and
    /// `N(v1) x N(v2)` is added. Survivors of `self` come first, in id order.
    pub fn one_join(&self, v1: usize, other: &Graph, v2: usize) -> Result<(Graph, JoinMap)> {
        self.check_vertex(v1)?;
        other.check_vertex(v2)?;
        let n1 = self.n() - 1;
        let n = n1 + other.n() - 1;
        let shift = |v: usize, marker: usize| if v < marker { v } else { v - 1 };
        let left: Vec<Option<usize>> = (0..self.n())
            .map(|v| (v != v1).then(|| shift(v, v1)))
            .collect();
        let right: Vec<Option<usize>> = (0..other.n())
            .map(|v| (v != v2).then(|| n1 + shift(v, v2)))
            .collect();
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            if let (Some(a), Some(b)) = (left[u], left[v]) {
                g.add_edge(a, b);
            }
        }
        for (u, v) in other.edges() {
            if let (Some(a), Some(b)) = (right[u], right[v]) {
                g.add_edge(a, b);
            }
        }
        for a in self.adj[v1].iter() {
            for b in other.adj[v2].iter() {
                g.add_edge(left[a].unwrap(), right[b].unwrap());
            }
        }
        g.debug_check();
        Ok((g, JoinMap { left, right }))
    }

    /// Replaces `v` by an independent set of `t` copies, each adjacent to `N(v)`.
    /// Copy 0 keeps id `v`; the others get ids `n..n+t-1`.
    pub fn blow_up(&self, v: usize, t: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        if t == 0 {
            return Err(Error::Input(
                "blow-up to zero copies is a vertex deletion".into(),
            ));
        }
        let n = self.n();
        let mut g = Graph::empty(n + t - 1);
        for (a, b) in self.edges() {
            g.add_edge(a, b);
        }
        for copy in n..n + t - 1 {
            for u in self.adj[v].iter() {
                g.add_edge(copy, u);
            }
        }
        g.debug_check();
        Ok(g)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n1 = self.n();
        let mut g = Graph::empty(n1 + other.n());
        for (a, b) in self.edges() {
            g.add_edge(a, b);
        }
        for (a, b) in other.edges() {
            g.add_edge(n1 + a, n1 + b);
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::new(n);
        let mut out = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::new(n);
            let mut stack = vec![s];
            seen.insert(s);
            while let Some(u) = stack.pop() {
                comp.insert(u);
                for w in self.adj[u].iter() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Relabels by `perm[old] = new`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut g = Graph::empty(self.n());
        for (a, b) in self.edges() {
            g.add_edge(perm[a], perm[b]);
        }
        g
    }

    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = crate::io::Lines::new(text);
        let g = crate::io::parse_graph_block(&mut lines)?;
        if let Some((line, rest)) = lines.next_record() {
            return Err(Error::Parse {
                line,
                message: format!("unexpected trailing record `{rest}`"),
            });
        }
        Ok(g)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "p {} {}", self.n(), self.m()).unwrap();
        for (u, v) in self.edges() {
            writeln!(s, "e {u} {v}").unwrap();
        }
        s
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// Fixed catalog of small graphs. Wheels put the hub last; the cube is `{0,1}^3`
/// with Hamming-distance-1 adjacency and `CubeMinus` drops vertex `0b111`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    W5,
    W7,
    Cube,
    CubeMinus,
    Cycle(usize),
    Path(usize),
    Complete(usize),
}

impl NamedGraph {
    pub fn build(self) -> Graph {
        match self {
            NamedGraph::W5 => wheel(5),
            NamedGraph::W7 => wheel(7),
            NamedGraph::Cube => cube(),
            NamedGraph::CubeMinus => cube().delete_vertex(7).expect("cube has vertex 7"),
            NamedGraph::Cycle(n) => cycle(n),
            NamedGraph::Path(n) => path(n),
            NamedGraph::Complete(n) => complete(n),
        }
    }
}

pub fn named_graph(name: NamedGraph) -> Graph {
    name.build()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

/// Cycle on `n` vertices in id order. Below 3 vertices this degenerates to a path.
pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(0, n - 1);
    }
    g
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g
}

fn wheel(rim: usize) -> Graph {
    let mut g = Graph::empty(rim + 1);
    for i in 0..rim {
        g.add_edge(i, (i + 1) % rim);
        g.add_edge(i, rim);
    }
    g
}

fn cube() -> Graph {
    let mut g = Graph::empty(8);
    for u in 0..8usize {
        for bit in 0..3 {
            let v = u ^ (1 << bit);
            if u < v {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, ids: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, ids.iter().copied())
    }

    #[test]
    fn induced_subgraph_examples() {
        let (g, map) = complete(4).induced_subgraph(&set(4, &[0, 1, 2])).unwrap();
        assert_eq!(g, complete(3));
        assert_eq!(map.new_to_old, vec![0, 1, 2]);
        assert_eq!(map.old_to_new[3], None);
        let c5 = cycle(5);
        assert_eq!(c5.induced_subgraph(&c5.vertices()).unwrap().0, c5);
        assert_eq!(c5.induced_subgraph(&set(5, &[0, 1, 2])).unwrap().0, path(3));
        assert!(c5.induced_subgraph(&VertexSet::new(6)).is_err());
    }

    #[test]
    fn twin_class_examples() {
        assert_eq!(complete(3).twin_classes(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(Graph::empty(4).twin_classes(), vec![vec![0, 1, 2, 3]]);
        assert_eq!(
            complete_bipartite(2, 3).twin_classes(),
            vec![vec![0, 1], vec![2, 3, 4]]
        );
    }

    #[test]
    fn local_complement_examples() {
        assert_eq!(path(3).local_complement(1).unwrap(), complete(3));
        let expected = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(complete(3).local_complement(1).unwrap(), expected);
        assert!(path(3).local_complement(3).is_err());
    }

    #[test]
    fn one_join_examples() {
        let (g, map) = path(3).one_join(1, &path(3), 1).unwrap();
        // survivors 0,2 | 3,4: cross edges all four pairs
        let expected = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(g, expected);
        assert_eq!(map.left, vec![Some(0), None, Some(1)]);
        assert_eq!(map.right, vec![Some(2), None, Some(3)]);

        let g1 = Graph::from_edges(3, [(1, 2)]).unwrap();
        let (g, _) = g1.one_join(0, &path(3), 0).unwrap();
        assert_eq!(g, Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap());

        let (g, _) = complete(2).one_join(0, &complete(2), 1).unwrap();
        assert_eq!(g, complete(2));
    }

    #[test]
    fn blow_up_examples() {
        assert_eq!(
            complete(2).blow_up(0, 2).unwrap(),
            Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
        );
        assert_eq!(cycle(5).blow_up(2, 1).unwrap(), cycle(5));
        let g = path(3).blow_up(1, 3).unwrap();
        assert_eq!(g.m(), 6);
        assert_eq!(g.twin_classes(), vec![vec![0, 2], vec![1, 3, 4]]);
        assert!(path(3).blow_up(0, 0).is_err());
    }

    #[test]
    fn catalog_shapes() {
        let w5 = named_graph(NamedGraph::W5);
        assert_eq!((w5.n(), w5.m(), w5.degree(5)), (6, 10, 5));
        let w7 = named_graph(NamedGraph::W7);
        assert_eq!((w7.n(), w7.m(), w7.degree(7)), (8, 14, 7));
        let cube = named_graph(NamedGraph::Cube);
        assert_eq!((cube.n(), cube.m()), (8, 12));
        assert!((0..8).all(|v| cube.degree(v) == 3));
        // bipartite by parity of the bit count
        assert!(cube
            .edges()
            .all(|(u, v)| (u.count_ones() + v.count_ones()) % 2 == 1));
        let cm = named_graph(NamedGraph::CubeMinus);
        assert_eq!((cm.n(), cm.m()), (7, 9));
    }

    #[test]
    fn text_roundtrip() {
        let g = named_graph(NamedGraph::W5);
        let text = format!("# wheel\n{}", g.to_text());
        assert_eq!(Graph::parse(&text).unwrap(), g);
        assert!(Graph::parse("p 2 1\ne 0 2\n").is_err());
        assert!(Graph::parse("p 2 2\ne 0 1\n").is_err());
    }
}
