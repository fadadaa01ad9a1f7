mod bound;
mod join;
mod key_lemma;
mod oracle;
mod recursive;

pub use bound::{color_bound, ChiBoundFn, ChiFunction};
pub use join::{compose_in_order, one_join_compose, JoinEdge, JoinTree};
pub use key_lemma::{key_lemma_coloring, key_lemma_coloring_with, KeyLemmaOptions, KeyLemmaRun};
pub use oracle::{DefaultColorer, ExactColorer, GreedyColorer, PieceColorer};
pub use recursive::{chi_bounded_coloring, chi_bounded_coloring_with, ChiColoringOptions};
