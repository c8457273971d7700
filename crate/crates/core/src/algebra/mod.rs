//! Pure difference binomial ideals: monomial orders, Buchberger, toric
//! ideals by elimination, minimal generators and quadratic basis search.

pub mod binomial;
pub mod groebner;
pub mod monomial;
pub mod order;
pub mod search;
pub mod toric;

pub use binomial::{
    read_binomials, read_groebner_basis, write_binomials, write_groebner_basis, Binomial,
};
pub use groebner::{buchberger, buchberger_with, GbOptions, GroebnerBasis, InitialIdeal};
pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use search::{has_quadratic_gb, quadratic_gb_search, quadratic_gb_search_with, QuadraticGbSearch};
pub use toric::{
    ideal_contains, ideal_equal, minimal_generators, mu, toric_groebner_basis, toric_ideal,
    toric_ideal_with,
};

/// Minimal generators of the initial ideal of a basis.
pub fn initial_ideal(gb: &GroebnerBasis) -> InitialIdeal {
    gb.initial_ideal()
}

/// `compare` as a free function.
pub fn compare(order: &MonomialOrder, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    order.compare(a, b)
}
