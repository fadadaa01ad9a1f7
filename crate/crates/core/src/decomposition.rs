//! Tree decompositions `(T, tau)`: a tree plus a total map from graph vertices to
//! tree nodes. Each tree edge induces a cut of the graph; each node `v` induces the
//! piece graph `G_{T,v}` holding the edges whose endpoint images are separated by,
//! or sit on, `v`.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::bitset::VertexSet;
use crate::cut::cut_matrix;
use crate::error::{Error, RankDecompositionError, Result};
use crate::graph::{Graph, VertexMap};
use crate::io::{record, Lines};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    nodes: usize,
    tree_edges: Vec<(usize, usize)>,
    tau: Vec<usize>,
    root: Option<usize>,
}

impl Decomposition {
    /// Checks that `tree_edges` form a tree on `0..nodes`, that `tau` stays in
    /// range, and that a given root is a leaf with empty preimage.
    pub fn new(
        nodes: usize,
        tree_edges: Vec<(usize, usize)>,
        tau: Vec<usize>,
        root: Option<usize>,
    ) -> Result<Self> {
        if nodes == 0 {
            return Err(Error::Input("a decomposition tree needs a node".into()));
        }
        if tree_edges.len() != nodes - 1 {
            return Err(Error::Input(format!(
                "{} edges cannot form a tree on {nodes} nodes",
                tree_edges.len()
            )));
        }
        let check = |x: usize| {
            if x < nodes {
                Ok(())
            } else {
                Err(Error::NodeOutOfRange { node: x, nodes })
            }
        };
        for &(a, b) in &tree_edges {
            check(a)?;
            check(b)?;
            if a == b {
                return Err(Error::Input(format!("tree loop at node {a}")));
            }
        }
        for &t in &tau {
            check(t)?;
        }
        let d = Decomposition {
            nodes,
            tree_edges,
            tau,
            root: None,
        };
        let adj = d.adjacency();
        let mut seen = vec![false; nodes];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Input("tree edges do not connect all nodes".into()));
        }
        match root {
            Some(r) => d.with_root(r),
            None => Ok(d),
        }
    }

    /// The same decomposition rooted at `r`, which must be a leaf with empty preimage.
    pub fn with_root(mut self, r: usize) -> Result<Self> {
        if r >= self.nodes {
            return Err(Error::NodeOutOfRange {
                node: r,
                nodes: self.nodes,
            });
        }
        if self.degree(r) > 1 {
            return Err(Error::Input(format!("root {r} is not a leaf")));
        }
        if self.tau.contains(&r) {
            return Err(Error::Input(format!("root {r} has a nonempty preimage")));
        }
        self.root = Some(r);
        Ok(self)
    }

    /// Single-node tree carrying every vertex.
    pub fn trivial(n_vertices: usize) -> Self {
        Decomposition {
            nodes: 1,
            tree_edges: Vec::new(),
            tau: vec![0; n_vertices],
            root: None,
        }
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    pub fn tau(&self) -> &[usize] {
        &self.tau
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn n_vertices(&self) -> usize {
        self.tau.len()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes];
        for &(a, b) in &self.tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn degree(&self, node: usize) -> usize {
        self.tree_edges
            .iter()
            .filter(|&&(a, b)| a == node || b == node)
            .count()
    }

    pub fn preimage(&self, node: usize) -> Vec<usize> {
        (0..self.tau.len())
            .filter(|&u| self.tau[u] == node)
            .collect()
    }

    pub(crate) fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.tau.len() != g.n() {
            return Err(Error::Input(format!(
                "decomposition maps {} vertices, graph has {}",
                self.tau.len(),
                g.n()
            )));
        }
        Ok(())
    }

    /// Returns a rooted copy: the existing root, else the smallest leaf with empty
    /// preimage, else a fresh leaf attached to node 0.
    pub fn root_normalized(&self) -> Decomposition {
        if self.root.is_some() {
            return self.clone();
        }
        let mut used = vec![false; self.nodes];
        for &t in &self.tau {
            used[t] = true;
        }
        if self.nodes > 1 {
            if let Some(leaf) = (0..self.nodes).find(|&x| !used[x] && self.degree(x) == 1) {
                let mut d = self.clone();
                d.root = Some(leaf);
                return d;
            }
        }
        let mut d = self.clone();
        let fresh = d.nodes;
        d.nodes += 1;
        d.tree_edges.push((0, fresh));
        d.root = Some(fresh);
        d
    }

    pub fn rooted(&self) -> Result<RootedTree> {
        let root = self.root.ok_or(Error::Unrooted)?;
        Ok(RootedTree::new(self, root))
    }

    /// For each tree node, the component of `T - v` holding it, or `None` for `v`
    /// itself. Components are numbered in `adjacency()[v]` order.
    pub fn components_without(&self, v: usize) -> Vec<Option<usize>> {
        let adj = self.adjacency();
        let mut label = vec![None; self.nodes];
        for (c, &start) in adj[v].iter().enumerate() {
            label[start] = Some(c);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if y != v && label[y].is_none() {
                        label[y] = Some(c);
                        stack.push(y);
                    }
                }
            }
        }
        label
    }

    pub fn parse(text: &str) -> Result<Decomposition> {
        let mut lines = Lines::new(text);
        let (_, header) = lines.expect("d", 1)?;
        let nodes = header[0];
        let mut edges = Vec::new();
        let mut tau: HashMap<usize, usize> = HashMap::new();
        let mut root = None;
        while let Some((line, text)) = lines.next_record() {
            match text.split_whitespace().next() {
                Some("t") => {
                    let f = record(line, text, "t", 2)?;
                    edges.push((f[0], f[1]));
                }
                Some("m") => {
                    let f = record(line, text, "m", 2)?;
                    if tau.insert(f[0], f[1]).is_some() {
                        return Err(Error::Parse {
                            line,
                            message: format!("vertex {} mapped twice", f[0]),
                        });
                    }
                }
                Some("r") => {
                    let f = record(line, text, "r", 1)?;
                    root = Some(f[0]);
                }
                other => {
                    return Err(Error::Parse {
                        line,
                        message: format!("unknown record `{}`", other.unwrap_or("")),
                    })
                }
            }
        }
        let n = tau.len();
        let tau = (0..n)
            .map(|u| {
                tau.get(&u).copied().ok_or_else(|| Error::Parse {
                    line: 0,
                    message: format!("vertex {u} has no `m` record"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Decomposition::new(nodes, edges, tau, root)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "d {}", self.nodes).unwrap();
        for &(a, b) in &self.tree_edges {
            writeln!(s, "t {a} {b}").unwrap();
        }
        for (u, &t) in self.tau.iter().enumerate() {
            writeln!(s, "m {u} {t}").unwrap();
        }
        if let Some(r) = self.root {
            writeln!(s, "r {r}").unwrap();
        }
        s
    }
}

/// A decomposition tree hung from its root, with subtree preimages `V_v` cached.
#[derive(Debug, Clone)]
pub struct RootedTree {
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
    /// Breadth-first order from the root; every prefix is a connected subtree.
    pub order: Vec<usize>,
    pub depth: Vec<usize>,
    /// `V_v`: vertices whose image lies in the subtree rooted at `v`.
    pub subtree: Vec<VertexSet>,
    tau: Vec<usize>,
}

impl RootedTree {
    fn new(d: &Decomposition, root: usize) -> Self {
        let adj = d.adjacency();
        let mut parent = vec![None; d.nodes];
        let mut children = vec![Vec::new(); d.nodes];
        let mut depth = vec![0; d.nodes];
        let mut order = Vec::with_capacity(d.nodes);
        let mut seen = vec![false; d.nodes];
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(x) = queue.pop_front() {
            order.push(x);
            let mut next: Vec<usize> = adj[x].iter().copied().filter(|&y| !seen[y]).collect();
            next.sort_unstable();
            for y in next {
                seen[y] = true;
                parent[y] = Some(x);
                depth[y] = depth[x] + 1;
                children[x].push(y);
                queue.push_back(y);
            }
        }
        let n = d.tau.len();
        let mut subtree = vec![VertexSet::new(n); d.nodes];
        for (u, &t) in d.tau.iter().enumerate() {
            subtree[t].insert(u);
        }
        // reverse BFS is a valid post-order for accumulation
        for &x in order.iter().rev() {
            if let Some(p) = parent[x] {
                let s = subtree[x].clone();
                subtree[p].union_with(&s);
            }
        }
        RootedTree {
            root,
            parent,
            children,
            order,
            depth,
            subtree,
            tau: d.tau.clone(),
        }
    }

    pub fn lca(&self, mut a: usize, mut b: usize) -> usize {
        while self.depth[a] > self.depth[b] {
            a = self.parent[a].unwrap();
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b].unwrap();
        }
        while a != b {
            a = self.parent[a].unwrap();
            b = self.parent[b].unwrap();
        }
        a
    }

    /// The origin of edge `uu'`: nearest common ancestor of `tau(u)` and `tau(u')`.
    pub fn origin(&self, u: usize, u2: usize) -> usize {
        self.lca(self.tau[u], self.tau[u2])
    }

    pub fn is_ancestor(&self, anc: usize, mut x: usize) -> bool {
        loop {
            if x == anc {
                return true;
            }
            match self.parent[x] {
                Some(p) => x = p,
                None => return false,
            }
        }
    }

    /// The child of `v` whose subtree contains node `x`, if `x` lies strictly below `v`.
    pub fn child_towards(&self, v: usize, mut x: usize) -> Option<usize> {
        while let Some(p) = self.parent[x] {
            if p == v {
                return Some(x);
            }
            x = p;
        }
        None
    }
}

/// Origin of the edge `uu'` in a rooted decomposition.
pub fn origin(d: &Decomposition, u: usize, u2: usize) -> Result<usize> {
    let rt = d.rooted()?;
    for x in [u, u2] {
        if x >= d.n_vertices() {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                n: d.n_vertices(),
            });
        }
    }
    Ok(rt.origin(u, u2))
}

/// The two sides of the cut induced by tree edge `e = (a, b)`: the preimage of
/// `a`'s component of `T - e`, then that of `b`'s.
pub fn edge_cut(g: &Graph, d: &Decomposition, e: (usize, usize)) -> Result<(VertexSet, VertexSet)> {
    d.check_graph(g)?;
    let (a, b) = e;
    if !d
        .tree_edges
        .iter()
        .any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
    {
        return Err(Error::NotATreeEdge(format!("({a}, {b})")));
    }
    let labels = d.components_without(b);
    let a_label = labels[a];
    let mut side_a = VertexSet::new(g.n());
    for (u, &t) in d.tau.iter().enumerate() {
        if t != b && labels[t] == a_label {
            side_a.insert(u);
        }
    }
    let side_b = side_a.complement();
    Ok((side_a, side_b))
}

fn edge_sides(g: &Graph, d: &Decomposition) -> Vec<VertexSet> {
    d.tree_edges
        .iter()
        .map(|&e| edge_cut(g, d, e).expect("own edge").0)
        .collect()
}

pub fn decomposition_rank(g: &Graph, d: &Decomposition) -> Result<usize> {
    d.check_graph(g)?;
    Ok(edge_sides(g, d)
        .iter()
        .map(|w| cut_matrix(g, w).expect("sized").rank())
        .max()
        .unwrap_or(0))
}

pub fn decomposition_diversity(g: &Graph, d: &Decomposition) -> Result<usize> {
    d.check_graph(g)?;
    Ok(edge_sides(g, d)
        .iter()
        .map(|w| cut_matrix(g, w).expect("sized").diversity())
        .max()
        .unwrap_or(0))
}

/// `G_{T,v}`: spanning subgraph of `G` keeping edge `uu'` iff `v` lies on the tree
/// path from `tau(u)` to `tau(u')`, endpoints included.
pub fn piece_graph(g: &Graph, d: &Decomposition, v: usize) -> Result<Graph> {
    d.check_graph(g)?;
    if v >= d.nodes {
        return Err(Error::NodeOutOfRange {
            node: v,
            nodes: d.nodes,
        });
    }
    let labels = d.components_without(v);
    let side = |u: usize| labels[d.tau[u]];
    let mut piece = Graph::empty(g.n());
    for (u, w) in g.edges() {
        let (su, sw) = (side(u), side(w));
        if su.is_none() || sw.is_none() || su != sw {
            piece.add_edge(u, w);
        }
    }
    Ok(piece)
}

/// The partition `V_v^0, V_v^1, ...` of `V_v` by neighborhood outside `V_v`.
/// Class 0 collects vertices with no outside neighbor and may be empty; the
/// remaining classes are ordered by smallest member.
pub fn outside_partition(g: &Graph, d: &Decomposition, v: usize) -> Result<Vec<VertexSet>> {
    d.check_graph(g)?;
    let rt = d.rooted()?;
    if v >= d.nodes {
        return Err(Error::NodeOutOfRange {
            node: v,
            nodes: d.nodes,
        });
    }
    if v == rt.root {
        return Err(Error::Input("the root has no outside partition".into()));
    }
    Ok(partition_by_outside(g, &rt.subtree[v]))
}

pub(crate) fn partition_by_outside(g: &Graph, inside: &VertexSet) -> Vec<VertexSet> {
    let outside = inside.complement();
    let mut classes = vec![VertexSet::new(g.n())];
    let mut index: HashMap<VertexSet, usize> = HashMap::new();
    for u in inside.iter() {
        let key = g.neighbors(u).intersection(&outside);
        if key.is_empty() {
            classes[0].insert(u);
            continue;
        }
        let next = classes.len();
        let c = *index.entry(key).or_insert(next);
        if c == classes.len() {
            classes.push(VertexSet::new(g.n()));
        }
        classes[c].insert(u);
    }
    classes
}

/// Restricts `(G, D)` to the vertex set `s`: the induced subgraph with the same
/// tree and `tau` restricted through the id map.
pub fn restrict(
    g: &Graph,
    d: &Decomposition,
    s: &VertexSet,
) -> Result<(Graph, Decomposition, VertexMap)> {
    d.check_graph(g)?;
    let (h, map) = g.induced_subgraph(s)?;
    let tau = map.new_to_old.iter().map(|&old| d.tau[old]).collect();
    let restricted = Decomposition {
        nodes: d.nodes,
        tree_edges: d.tree_edges.clone(),
        tau,
        root: d.root,
    };
    Ok((h, restricted, map))
}

/// Star with an empty center (node 0) and vertex `u` alone on leaf `u + 1`.
pub fn star_decomposition(g: &Graph) -> Decomposition {
    let n = g.n();
    Decomposition {
        nodes: n + 1,
        tree_edges: (1..=n).map(|leaf| (0, leaf)).collect(),
        tau: (1..=n).collect(),
        root: None,
    }
}

/// A decomposition certified to have cubic inner nodes and a bijection from
/// vertices to leaves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankDecomposition {
    decomposition: Decomposition,
    width: usize,
}

impl RankDecomposition {
    pub fn decomposition(&self) -> &Decomposition {
        &self.decomposition
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn into_decomposition(self) -> Decomposition {
        self.decomposition
    }
}

pub fn validate_rank_decomposition(g: &Graph, d: &Decomposition) -> Result<RankDecomposition> {
    d.check_graph(g)?;
    let adj = d.adjacency();
    let is_leaf = |x: usize| adj[x].len() <= 1;
    if !(g.n() == 0 && d.nodes == 1) {
        for (x, nb) in adj.iter().enumerate() {
            if nb.len() >= 2 && nb.len() != 3 {
                return Err(RankDecompositionError::Degree {
                    node: x,
                    degree: nb.len(),
                }
                .into());
            }
        }
        let mut owner: Vec<Option<usize>> = vec![None; d.nodes];
        for (u, &t) in d.tau.iter().enumerate() {
            if !is_leaf(t) {
                return Err(RankDecompositionError::NonLeafImage { vertex: u, node: t }.into());
            }
            if let Some(first) = owner[t] {
                return Err(RankDecompositionError::NotInjective {
                    first,
                    second: u,
                    node: t,
                }
                .into());
            }
            owner[t] = Some(u);
        }
        if let Some(x) = (0..d.nodes).find(|&x| is_leaf(x) && owner[x].is_none()) {
            return Err(RankDecompositionError::UncoveredLeaf { node: x }.into());
        }
    }
    Ok(RankDecomposition {
        width: decomposition_rank(g, d)?,
        decomposition: d.clone(),
    })
}
