//! Graphs assembled from pieces by 1-joins along a tree, and the rank-1
//! decomposition that comes with them.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::decomposition::{decomposition_rank, Decomposition};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{parse_graph_block, record, Lines};

/// A 1-join between pieces `a` and `b`, consuming marker `wa` of piece `a` and
/// marker `wb` of piece `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JoinEdge {
    pub a: usize,
    pub b: usize,
    pub wa: usize,
    pub wb: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinTree {
    pieces: Vec<Graph>,
    joins: Vec<JoinEdge>,
    /// `marker_of[p][v]`: the join consuming vertex `v` of piece `p`, if any.
    marker_of: Vec<Vec<Option<usize>>>,
}

impl JoinTree {
    /// Checks that the joins form a tree over the pieces and that every marker is
    /// a vertex of its piece used by exactly one join.
    pub fn new(pieces: Vec<Graph>, joins: Vec<JoinEdge>) -> Result<Self> {
        let k = pieces.len();
        if k == 0 {
            return Err(Error::Input("a join tree needs at least one piece".into()));
        }
        let mut marker_of: Vec<Vec<Option<usize>>> =
            pieces.iter().map(|p| vec![None; p.n()]).collect();
        for (i, e) in joins.iter().enumerate() {
            for (p, w) in [(e.a, e.wa), (e.b, e.wb)] {
                if p >= k {
                    return Err(Error::Input(format!("join {i} names missing piece {p}")));
                }
                if w >= pieces[p].n() {
                    return Err(Error::Input(format!(
                        "join {i}: marker {w} out of range for piece {p}"
                    )));
                }
                if marker_of[p][w].is_some() {
                    return Err(Error::Input(format!(
                        "vertex {w} of piece {p} is a marker of two joins"
                    )));
                }
                marker_of[p][w] = Some(i);
            }
            if e.a == e.b {
                return Err(Error::Input(format!(
                    "join {i} joins piece {} to itself",
                    e.a
                )));
            }
        }
        Decomposition::new(
            k,
            joins.iter().map(|e| (e.a, e.b)).collect(),
            Vec::new(),
            None,
        )
        .map_err(|e| Error::Input(format!("joins do not form a tree: {e}")))?;
        Ok(JoinTree {
            pieces,
            joins,
            marker_of,
        })
    }

    pub fn pieces(&self) -> &[Graph] {
        &self.pieces
    }

    pub fn joins(&self) -> &[JoinEdge] {
        &self.joins
    }

    /// `(piece, local id)` of every non-marker vertex, in composed-graph order.
    pub fn survivors(&self) -> Vec<(usize, usize)> {
        self.pieces
            .iter()
            .enumerate()
            .flat_map(|(p, g)| {
                (0..g.n())
                    .filter(move |&v| self.marker_of[p][v].is_none())
                    .map(move |v| (p, v))
            })
            .collect()
    }

    /// The far end of join `j` seen from piece `p`: `(other piece, its marker)`.
    fn across(&self, j: usize, p: usize) -> (usize, usize) {
        let e = self.joins[j];
        if e.a == p {
            (e.b, e.wb)
        } else {
            (e.a, e.wa)
        }
    }

    pub fn parse(text: &str) -> Result<JoinTree> {
        let mut lines = Lines::new(text);
        let (_, header) = lines.expect("j", 1)?;
        let pieces = (0..header[0])
            .map(|_| parse_graph_block(&mut lines))
            .collect::<Result<Vec<_>>>()?;
        let mut joins = Vec::new();
        while let Some((line, text)) = lines.next_record() {
            let f = record(line, text, "J", 4)?;
            joins.push(JoinEdge {
                a: f[0],
                b: f[1],
                wa: f[2],
                wb: f[3],
            });
        }
        JoinTree::new(pieces, joins)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "j {}", self.pieces.len()).unwrap();
        for (i, p) in self.pieces.iter().enumerate() {
            writeln!(s, "# piece {i}").unwrap();
            s.push_str(&p.to_text());
        }
        for e in &self.joins {
            writeln!(s, "J {} {} {} {}", e.a, e.b, e.wa, e.wb).unwrap();
        }
        s
    }
}

/// Composes the pieces and returns the graph with the decomposition mapping each
/// surviving vertex to its piece.
///
/// A survivor `u` of piece `p` is adjacent to a survivor `x` of another piece
/// `q` iff, along the tree path `p = p0, ..., pm = q`, `u` is adjacent to the
/// marker toward `p1`, `x` is adjacent to the marker toward `p(m-1)`, and at each
/// intermediate piece the entry and exit markers are adjacent. This is what any
/// sequence of the pairwise 1-joins produces.
pub fn one_join_compose(jt: &JoinTree) -> Result<(Graph, Decomposition)> {
    let survivors = jt.survivors();
    let mut index: Vec<Vec<Option<usize>>> = jt.pieces.iter().map(|p| vec![None; p.n()]).collect();
    for (i, &(p, v)) in survivors.iter().enumerate() {
        index[p][v] = Some(i);
    }
    let mut g = Graph::empty(survivors.len());
    for (i, &(p, u)) in survivors.iter().enumerate() {
        let piece = &jt.pieces[p];
        for x in piece.neighbors(u).iter() {
            match (index[p][x], jt.marker_of[p][x]) {
                (Some(j), _) if j > i => g.add_edge(i, j),
                (None, Some(join)) => {
                    // walk outward through every marker reachable from u
                    let mut stack = vec![(join, p)];
                    while let Some((join, from)) = stack.pop() {
                        let (q, entry) = jt.across(join, from);
                        let piece_q = &jt.pieces[q];
                        for y in piece_q.neighbors(entry).iter() {
                            match (index[q][y], jt.marker_of[q][y]) {
                                (Some(j), _) if j > i => g.add_edge(i, j),
                                (None, Some(next)) => stack.push((next, q)),
                                _ => {}
                            }
                        }
                    }
                }
                _ => {}
            }
        }
    }
    let tau = survivors.iter().map(|&(p, _)| p).collect();
    let dec = Decomposition::new(
        jt.pieces.len(),
        jt.joins.iter().map(|e| (e.a, e.b)).collect(),
        tau,
        None,
    )?;
    let rank = decomposition_rank(&g, &dec)?;
    if rank > 1 {
        return Err(Error::Invariant(format!(
            "composed decomposition has rank {rank}"
        )));
    }
    if cfg!(debug_assertions) && jt.joins.len() > 1 {
        let mut order: Vec<usize> = (0..jt.joins.len()).collect();
        order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(0));
        for o in [order.clone(), order.into_iter().rev().collect()] {
            if compose_in_order(jt, &o)? != g {
                return Err(Error::Invariant(
                    "1-join composition depends on order".into(),
                ));
            }
        }
    }
    Ok((g, dec))
}

/// Composes by applying the pairwise 1-joins in the given order of join indices.
/// Vertex ids follow [`JoinTree::survivors`].
pub fn compose_in_order(jt: &JoinTree, order: &[usize]) -> Result<Graph> {
    let k = jt.pieces.len();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..jt.joins.len()).collect::<Vec<_>>() {
        return Err(Error::Input(
            "order must list every join exactly once".into(),
        ));
    }
    // each group is a partially composed graph with (piece, local) labels
    type Group = (Graph, Vec<(usize, usize)>);
    let mut groups: Vec<Option<Group>> = jt
        .pieces
        .iter()
        .enumerate()
        .map(|(p, g)| Some((g.clone(), (0..g.n()).map(|v| (p, v)).collect())))
        .collect();
    let mut group_of: Vec<usize> = (0..k).collect();
    for &j in order {
        let e = jt.joins[j];
        let (ga, gb) = (group_of[e.a], group_of[e.b]);
        let (left, left_labels) = groups[ga].take().expect("live group");
        let (right, right_labels) = groups[gb].take().expect("live group");
        let find = |labels: &[(usize, usize)], key| {
            labels
                .iter()
                .position(|&l| l == key)
                .expect("marker present")
        };
        let ma = find(&left_labels, (e.a, e.wa));
        let mb = find(&right_labels, (e.b, e.wb));
        let (joined, map) = left.one_join(ma, &right, mb)?;
        let mut labels = vec![(0, 0); joined.n()];
        for (old, new) in map.left.iter().enumerate() {
            if let Some(new) = new {
                labels[*new] = left_labels[old];
            }
        }
        for (old, new) in map.right.iter().enumerate() {
            if let Some(new) = new {
                labels[*new] = right_labels[old];
            }
        }
        for x in group_of.iter_mut() {
            if *x == gb {
                *x = ga;
            }
        }
        groups[ga] = Some((joined, labels));
    }
    let (g, labels) = groups[group_of[0]].take().expect("single group remains");
    let survivors = jt.survivors();
    let perm: Vec<usize> = labels
        .iter()
        .map(|l| survivors.iter().position(|s| s == l).expect("survivor"))
        .collect();
    Ok(g.permute(&perm))
}
