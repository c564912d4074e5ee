//! Order embeddings of posets of regions into products of chains.

mod chromatic;
mod covering;
mod dimension;
mod eta;

pub use chromatic::{chromatic_number, ColoringResult, DEFAULT_NODE_BUDGET};
pub use covering::{acyclic_covering, AcyclicCovering, CoveringStrategy, EXACT_COVERING_LIMIT};
pub use dimension::{order_dimension_exact, subcritical_pairs_of, Dimension, MAX_ORACLE_SIZE};
pub use eta::{build_embedding, eta_map, verify_embedding, Embedding, EmbeddingReport};
