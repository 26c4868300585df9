//! 2-domination numbers of cylinders `P_m □ C_n`.
//!
//! Border columns are encoded as words over `{0, 1, 2, 3}`, admissible
//! successions form a labeled digraph, and (min,+) powers of its matrix give
//! the minimum wasted 2-domination `ω2(n)`. That yields the lower bound
//! `γ2 >= (mn + ω2(n)) / 3`, matched by an explicit construction when
//! `3 | n`. Exact oracles for small cases live in [`oracle`].

pub mod bounds;
pub mod cli;
pub mod cylinder;
pub mod error;
pub mod omega;
pub mod oracle;
pub mod transfer;
pub mod tropical;
pub mod words;

pub use bounds::{construct_2dominating, gamma2, lower_bound, BoundResult, BoundStatus};
pub use cylinder::{CylinderSpec, Vertex, VertexSet};
pub use error::{Error, Result};
pub use omega::{build_omega_table, omega2, OmegaTable};
pub use transfer::{build_transfer_digraph, build_transfer_matrix, TransferDigraph};
pub use tropical::{PeriodicityCertificate, TropicalMatrix, TropicalScalar, TropicalValue};
pub use words::{generate_word_table, Rules, Word, WordTable};

/// Tropical numbers over `i32`, the default carrier.
pub type Tropical = TropicalValue<i32>;
pub type Matrix = TropicalMatrix<i32>;
pub type Certificate = PeriodicityCertificate<i32>;
/// Exact rationals used for the lower bound.
pub type Rational = num_rational::Ratio<i64>;
