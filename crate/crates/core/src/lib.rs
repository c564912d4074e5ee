//! Exact computations on the poset of regions of a central hyperplane
//! arrangement: rank-two subarrangements, shards, subcritical pairs, order
//! embeddings, Coxeter root systems and zonotopal embeddings.
//!
//! All arithmetic is exact. Algorithms are generic over [`Scalar`], which is
//! implemented for the rationals and for `Q(sqrt 5)`.

pub mod arrangement;
pub mod coxeter;
pub mod embedding;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod irreducibles;
pub mod poset;
pub mod rank2;
pub mod sets;
pub mod zonotope;

pub use arrangement::{build_arrangement, enumerate_regions, Arrangement, Region, RegionPoset};
pub use error::{Error, Result};
pub use geometry::{QSqrt5, Scalar, Sign};
pub use sets::HyperplaneSet;

/// Exact rationals.
pub type Rational = num_rational::BigRational;
/// Exact elements of `Q(sqrt 5)`.
pub type Golden = QSqrt5;

pub type RationalArrangement = Arrangement<Rational>;
pub type GoldenArrangement = Arrangement<Golden>;
pub type RationalRegionPoset = RegionPoset<Rational>;
pub type GoldenRegionPoset = RegionPoset<Golden>;
