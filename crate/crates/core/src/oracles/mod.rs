//! Brute-force ground truth used to check every guarantee the colorers make.

mod canon;
mod chromatic;
mod clique;
mod coloring;
mod vertex_minor;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use chromatic::{chromatic_number, chromatic_number_with, dsatur_coloring, k_coloring};
pub use clique::{clique_number, clique_number_with, maximum_cliques, maximum_cliques_with};
pub use coloring::{is_proper, no_max_clique_monochromatic, Coloring};
pub use vertex_minor::{has_vertex_minor, has_vertex_minor_with};

/// Size limits for the exponential searches. `from_env` reads the
/// `CHIBOUND_CLIQUE_LIMIT`, `CHIBOUND_CHI_LIMIT`, `CHIBOUND_VMINOR_LIMIT` and
/// `CHIBOUND_RW_LIMIT` overrides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub clique: usize,
    pub chromatic: usize,
    pub vertex_minor: usize,
    pub rank_width: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            clique: 24,
            chromatic: 20,
            vertex_minor: 9,
            rank_width: crate::rankwidth::DEFAULT_LIMIT,
        }
    }
}

impl Limits {
    pub fn from_env() -> Self {
        let read = |key: &str, default: usize| {
            std::env::var(key)
                .ok()
                .and_then(|v| v.trim().parse().ok())
                .unwrap_or(default)
        };
        let d = Limits::default();
        Limits {
            clique: read("CHIBOUND_CLIQUE_LIMIT", d.clique),
            chromatic: read("CHIBOUND_CHI_LIMIT", d.chromatic),
            vertex_minor: read("CHIBOUND_VMINOR_LIMIT", d.vertex_minor),
            rank_width: read("CHIBOUND_RW_LIMIT", d.rank_width),
        }
    }
}

pub(crate) fn check_limit(what: &'static str, size: usize, limit: usize) -> crate::Result<()> {
    let limit = limit.min(64);
    if size > limit {
        Err(crate::Error::Resource { what, size, limit })
    } else {
        Ok(())
    }
}
