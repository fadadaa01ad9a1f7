//! Line-oriented text formats shared by graphs, decompositions, join trees and colorings.
//!
//! Every format is whitespace separated with 0-based ids; blank lines and lines
//! starting with `#` are ignored.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub(crate) struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
}

impl<'a> Lines<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate().peekable(),
        }
    }

    fn skip_blank(&mut self) {
        while let Some((_, l)) = self.inner.peek() {
            let t = l.trim();
            if t.is_empty() || t.starts_with('#') {
                self.inner.next();
            } else {
                break;
            }
        }
    }

    /// Next meaningful line as `(1-based line number, trimmed text)`.
    pub(crate) fn next_record(&mut self) -> Option<(usize, &'a str)> {
        self.skip_blank();
        self.inner.next().map(|(i, l)| (i + 1, l.trim()))
    }

    /// Next record, which must carry `tag` followed by exactly `arity` integers.
    pub(crate) fn expect(&mut self, tag: &str, arity: usize) -> Result<(usize, Vec<usize>)> {
        let (line, text) = self.next_record().ok_or_else(|| Error::Parse {
            line: 0,
            message: format!("unexpected end of input, expected `{tag}` record"),
        })?;
        let fields = record(line, text, tag, arity)?;
        Ok((line, fields))
    }
}

pub(crate) fn record(line: usize, text: &str, tag: &str, arity: usize) -> Result<Vec<usize>> {
    let mut parts = text.split_whitespace();
    let found = parts.next().unwrap_or("");
    if found != tag {
        return Err(Error::Parse {
            line,
            message: format!("expected `{tag}` record, found `{found}`"),
        });
    }
    let fields: Vec<usize> = parts
        .map(|p| {
            p.parse::<usize>().map_err(|_| Error::Parse {
                line,
                message: format!("`{p}` is not a non-negative integer"),
            })
        })
        .collect::<Result<_>>()?;
    if fields.len() != arity {
        return Err(Error::Parse {
            line,
            message: format!("`{tag}` takes {arity} fields, got {}", fields.len()),
        });
    }
    Ok(fields)
}

/// Parses a `p <n> <m>` header followed by exactly `m` `e <u> <v>` lines.
pub(crate) fn parse_graph_block(lines: &mut Lines<'_>) -> Result<Graph> {
    let (_, header) = lines.expect("p", 2)?;
    let (n, m) = (header[0], header[1]);
    let mut g = Graph::empty(n);
    for _ in 0..m {
        let (line, e) = lines.expect("e", 2)?;
        let (u, v) = (e[0], e[1]);
        if u >= n || v >= n {
            return Err(Error::Parse {
                line,
                message: format!("edge ({u}, {v}) out of range for {n} vertices"),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line,
                message: format!("self-loop at {u}"),
            });
        }
        if g.has_edge(u, v) {
            return Err(Error::Parse {
                line,
                message: format!("duplicate edge ({u}, {v})"),
            });
        }
        g.add_edge(u, v);
    }
    Ok(g)
}
