//! Search for a monomial order with a quadratic Gröbner basis.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::groebner::{GbEngine, GbOptions};
use super::{Binomial, MonomialOrder, OrderKind};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuadraticGbSearch {
    /// The reduced basis under this order has degree at most 2.
    Found(MonomialOrder),
    /// No tried order worked; nothing is claimed about other orders.
    Unknown { tried: usize },
}

/// Is the reduced Gröbner basis of homogeneous `gens` under `order` of
/// degree at most two? The run stops at the first new element of degree
/// three or more: with homogeneous inputs processed degree by degree such an
/// element has a leading term outside the ideal of the quadratic leading
/// terms.
pub fn has_quadratic_gb(gens: &[Binomial], order: &MonomialOrder, opts: &GbOptions) -> Result<bool> {
    for b in gens {
        if !b.is_homogeneous() {
            return Err(Error::NotHomogeneous(b.to_string()));
        }
        if b.nvars() != order.nvars() {
            return Err(Error::DimensionMismatch { expected: order.nvars(), got: b.nvars() });
        }
    }
    let mut e = GbEngine::new(order.clone(), opts.clone());
    for b in gens {
        e.add_input(b.clone());
    }
    e.run(None, |h| h.degree() <= 2)
}

/// Variables sorted by how many generators mention them, most first; ties
/// by index.
fn occurrence_order(gens: &[Binomial], nvars: usize) -> Vec<usize> {
    let mut count = vec![0usize; nvars];
    for b in gens {
        for v in 0..nvars {
            if b.head().exps()[v] > 0 || b.tail().exps()[v] > 0 {
                count[v] += 1;
            }
        }
    }
    let mut perm: Vec<usize> = (0..nvars).collect();
    perm.sort_by_key(|&v| (std::cmp::Reverse(count[v]), v));
    perm
}

/// The fixed orders tried before any random one.
pub fn deterministic_orders(gens: &[Binomial], nvars: usize) -> Vec<MonomialOrder> {
    let by_count = occurrence_order(gens, nvars);
    let reversed: Vec<usize> = by_count.iter().rev().copied().collect();
    let identity: Vec<usize> = (0..nvars).collect();
    let mut out: Vec<MonomialOrder> = Vec::new();
    for perm in [identity, by_count, reversed] {
        for kind in [OrderKind::GradedRevLex, OrderKind::Lex] {
            let o = MonomialOrder::with_permutation(kind, perm.clone()).expect("permutation");
            if !out.contains(&o) {
                out.push(o);
            }
        }
    }
    out
}

/// Try the deterministic orders, then `budget` seeded random variable
/// permutations each with grevlex and lex.
pub fn quadratic_gb_search(gens: &[Binomial], budget: usize, seed: u64) -> Result<QuadraticGbSearch> {
    quadratic_gb_search_with(gens, budget, seed, &GbOptions::default())
}

pub fn quadratic_gb_search_with(
    gens: &[Binomial],
    budget: usize,
    seed: u64,
    opts: &GbOptions,
) -> Result<QuadraticGbSearch> {
    let nvars = gens.first().map_or(0, Binomial::nvars);
    if gens.iter().all(Binomial::is_zero) {
        return Ok(QuadraticGbSearch::Found(MonomialOrder::grevlex(nvars)));
    }
    let mut tried = 0;
    for o in deterministic_orders(gens, nvars) {
        tried += 1;
        if has_quadratic_gb(gens, &o, opts)? {
            return Ok(QuadraticGbSearch::Found(o));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..nvars).collect();
    for _ in 0..budget {
        perm.shuffle(&mut rng);
        for kind in [OrderKind::GradedRevLex, OrderKind::Lex] {
            let o = MonomialOrder::with_permutation(kind, perm.clone())?;
            tried += 1;
            if has_quadratic_gb(gens, &o, opts)? {
                return Ok(QuadraticGbSearch::Found(o));
            }
        }
    }
    Ok(QuadraticGbSearch::Unknown { tried })
}

/// `count` seeded random grevlex orders on `nvars` variables.
pub fn random_grevlex_orders(nvars: usize, count: usize, seed: u64) -> Vec<MonomialOrder> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..nvars).collect();
    (0..count)
        .map(|_| {
            perm.shuffle(&mut rng);
            MonomialOrder::with_permutation(OrderKind::GradedRevLex, perm.clone()).expect("permutation")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::buchberger;

    #[test]
    fn zero_ideal_is_vacuously_quadratic() {
        assert!(matches!(quadratic_gb_search(&[], 0, 1).unwrap(), QuadraticGbSearch::Found(_)));
    }

    #[test]
    fn twisted_cubic_is_quadratic_and_the_check_agrees_with_buchberger() {
        let gens = [
            Binomial::from_vector(&[1, -2, 1, 0]),
            Binomial::from_vector(&[0, 1, -2, 1]),
            Binomial::from_vector(&[1, -1, -1, 1]),
        ];
        let QuadraticGbSearch::Found(o) = quadratic_gb_search(&gens, 0, 0).unwrap() else { panic!() };
        assert_eq!(buchberger(&gens, &o).unwrap().max_degree(), 2);
        for o in random_grevlex_orders(4, 10, 3) {
            let full = buchberger(&gens, &o).unwrap().max_degree() <= 2;
            assert_eq!(has_quadratic_gb(&gens, &o, &GbOptions::default()).unwrap(), full);
        }
    }

    #[test]
    fn cubic_generator_is_never_quadratic() {
        let gens = [Binomial::from_vector(&[3, -1, -1, -1])];
        assert_eq!(quadratic_gb_search(&gens, 3, 9).unwrap(), QuadraticGbSearch::Unknown { tried: 10 });
    }
}
