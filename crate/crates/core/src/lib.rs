//! Exact recognition of well-covered and well-dominated graphs, and of the
//! vector spaces of weight functions that make a graph weighted well-covered
//! (`WCW`) or weighted well-dominated (`WWD`).
//!
//! Two independent routes are provided for every question:
//!
//! * [`weightspace`] applies structural characterizations valid on graphs
//!   without short cycles (no `C4`/`C5`, and additionally no `C6` for the
//!   weight spaces);
//! * [`oracle`] enumerates maximal independent and minimal dominating sets
//!   exhaustively and solves the resulting linear systems exactly.
//!
//! The linear algebra in [`linalg`] is generic over the exact scalar; the
//! crate-level aliases below fix it to arbitrary-precision rationals.

pub mod error;
pub mod fixtures;
pub mod format;
pub mod generate;
pub mod graph;
pub mod linalg;
pub mod oracle;
pub mod report;
pub mod set;
pub mod structure;
pub mod suite;
pub mod weightspace;

pub use error::{Error, Result};
pub use format::{parse_graph, serialize_graph, Format};
pub use graph::Graph;
pub use oracle::Budget;
pub use set::VertexSet;

/// Arbitrary-precision rational scalar.
pub type Rational = num_rational::BigRational;
/// A weight function `V(G) -> Q`.
pub type RationalVector = Vec<Rational>;
pub type RationalMatrix = linalg::Matrix<Rational>;
/// Canonical basis of a space of rational weight functions.
pub type SubspaceBasis = linalg::Subspace<Rational>;
