//! Exact toric algebra of stable set polytopes.
//!
//! The crate pairs graph-side criteria (bipartite complements, the odd cycle
//! condition, perfectness, bridges between odd holes) with algebra-side
//! oracles (maximal minors, integer decomposition, elimination-computed toric
//! ideals, minimal generator degrees and Gröbner bases) so each can be checked
//! against the other. All arithmetic is exact.
//!
//! Modules:
//! - [`graph`]: simple and looped graphs, stable sets, induced cycles,
//!   clique sums and named families.
//! - [`polytope`]: point configurations, minors, exact LP, cone and
//!   semigroup membership, the IDP oracle and explicit witnesses.
//! - [`algebra`]: monomial orders, binomial Buchberger, toric ideals by
//!   elimination, minimal generators and quadratic Gröbner basis search.
//! - [`stable`]: walk binomials, the stability-number-two generator
//!   construction, normality and quadratic-generation checkers, reports.

pub mod algebra;
pub mod error;
pub mod graph;
pub mod polytope;
pub mod stable;
pub mod suites;

pub use algebra::{
    Binomial, GbOptions, GroebnerBasis, Monomial, MonomialOrder, OrderKind,
};
pub use error::{Error, Result};
pub use graph::{LoopGraph, SimpleGraph, StableSetFamily, Walk};
pub use polytope::{PointConfiguration, PointLabel, RationalCertificate};
pub use stable::report::AnalysisReport;

/// Version string embedded in every serialized report.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
