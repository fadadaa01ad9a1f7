//! Vertex-minor containment by exhaustive search over isomorphism classes.
//!
//! Deleting `v` commutes with local complementation at any other vertex, so every
//! vertex-minor of `G` on `k` vertices is an induced subgraph of a graph locally
//! equivalent to `G`. The search walks down one vertex at a time: close the
//! current level under local complementation, then delete each vertex, keeping one
//! representative per isomorphism class.

use std::collections::HashSet;

use crate::error::Result;
use crate::graph::Graph;

use super::canon::{canonical_form, CanonicalForm};
use super::{check_limit, Limits};

fn lc_closure(level: HashSet<CanonicalForm>) -> HashSet<CanonicalForm> {
    let mut seen = level.clone();
    let mut stack: Vec<CanonicalForm> = level.into_iter().collect();
    while let Some(form) = stack.pop() {
        let g = form.to_graph();
        for v in 0..g.n() {
            if g.degree(v) < 2 {
                continue;
            }
            let h = g.local_complement(v).expect("vertex in range");
            let c = canonical_form(&h).0;
            if seen.insert(c.clone()) {
                stack.push(c);
            }
        }
    }
    seen
}

pub fn has_vertex_minor(g: &Graph, h: &Graph) -> Result<bool> {
    has_vertex_minor_with(g, h, &Limits::default())
}

pub fn has_vertex_minor_with(g: &Graph, h: &Graph, limits: &Limits) -> Result<bool> {
    check_limit("vertex-minor search", g.n(), limits.vertex_minor)?;
    if h.n() > g.n() {
        return Ok(false);
    }
    let target = canonical_form(h).0;
    let mut level: HashSet<CanonicalForm> = HashSet::from([canonical_form(g).0]);
    let mut size = g.n();
    loop {
        if size == h.n() && level.contains(&target) {
            return Ok(true);
        }
        level = lc_closure(level);
        if size == h.n() {
            return Ok(level.contains(&target));
        }
        let mut next = HashSet::new();
        for form in &level {
            let f = form.to_graph();
            for v in 0..size {
                next.insert(canonical_form(&f.delete_vertex(v)?).0);
            }
        }
        level = next;
        size -= 1;
    }
}
