//! Graph-side criteria for the toric ring of `Q_G` and the checks that tie
//! them to the algebra and polytope oracles.

pub mod generators;
pub mod normality;
pub mod report;
pub mod walks;

pub use generators::{
    alpha2_generators, alpha2_generators_verified, keylemma_check, mu_bipartite_complement, star_variable_map,
};
pub use normality::{
    audit_witness, clique_sum_normality_check, no_quadratic_gb_certificate, nonnormality_witness,
    normality_necessary_audit, normality_verdict_alpha2, quadratic_necessary_audit, Alpha2Normality,
    CliqueSumCheck, NoQuadraticGb, Violation, ViolationKind,
};
pub use report::{analyze, AnalysisReport, AnalyzeOptions};
pub use walks::{edge_toric_generators, walk_binomial};
