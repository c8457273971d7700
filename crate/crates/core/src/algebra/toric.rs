//! Toric ideals by elimination, ideal comparison and minimal generators.

use super::groebner::{truncated_basis, unchecked_buchberger, GbEngine, GbOptions};
use super::{Binomial, GroebnerBasis, Monomial, MonomialOrder, OrderKind};
use crate::error::{Error, Result};
use crate::polytope::PointConfiguration;

/// Generators of the toric ideal of `p`, namely its reduced Gröbner basis
/// under grevlex on `y_1 > ... > y_m`.
///
/// In the ring `K[x_1..x_n, t, y_1..y_m]` (`t` only for homogenized
/// configurations) the ideal `<y_i - x^{a_i} t>` is eliminated with a block
/// order that puts `x_1 > ... > x_n > t` above the `y` block, grevlex inside
/// each block. That ideal is prime, so every new element may be divided by
/// the gcd of its terms.
pub fn toric_ideal(p: &PointConfiguration) -> Result<Vec<Binomial>> {
    toric_ideal_with(p, &GbOptions::default())
}

pub fn toric_ideal_with(p: &PointConfiguration, opts: &GbOptions) -> Result<Vec<Binomial>> {
    if !p.is_nonnegative() {
        return Err(Error::NegativeCoordinate);
    }
    let n = p.dim();
    let extra = usize::from(p.is_homogenized());
    let block = n + extra;
    let m = p.len();
    let nv = block + m;
    let gens: Vec<Binomial> = p
        .points()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let y = Monomial::var(nv, block + i);
            let mut exps = vec![0u32; nv];
            for (c, &x) in a.iter().enumerate() {
                exps[c] = x as u32;
            }
            if extra == 1 {
                exps[n] = 1;
            }
            Binomial::from_parts(y, Monomial::new(exps))
        })
        .collect();
    let order = MonomialOrder::elimination(OrderKind::GradedRevLex, nv, block)?;
    let opts = GbOptions { saturate: true, ..opts.clone() };
    let gb = unchecked_buchberger(&gens, &order, &opts)?;
    let ys: Vec<usize> = (block..nv).collect();
    Ok(gb
        .elements()
        .iter()
        .filter(|b| b.head().exps()[..block].iter().chain(&b.tail().exps()[..block]).all(|&e| e == 0))
        .map(|b| Binomial::from_parts(b.head().project(&ys), b.tail().project(&ys)))
        .collect())
}

fn max_degree(gens: &[Binomial]) -> u32 {
    gens.iter().map(Binomial::degree).max().unwrap_or(0)
}

/// Does every generator of `a` lie in the ideal of `b`? Homogeneous
/// generators are assumed; a basis of `b` is computed through the largest
/// degree in `a` only.
pub fn ideal_contains(b: &[Binomial], a: &[Binomial], order: &MonomialOrder) -> Result<bool> {
    let a: Vec<&Binomial> = a.iter().filter(|x| !x.is_zero()).collect();
    if a.is_empty() {
        return Ok(true);
    }
    let bound = a.iter().map(|x| x.degree()).max().unwrap_or(0);
    let gb = truncated_basis(b, order, bound)?;
    Ok(a.iter().all(|x| gb.reduces_to_zero(x)))
}

/// Do `a` and `b` generate the same ideal?
pub fn ideal_equal(a: &[Binomial], b: &[Binomial], order: &MonomialOrder) -> Result<bool> {
    Ok(ideal_contains(b, a, order)? && ideal_contains(a, b, order)?)
}

/// A minimal generating subset of homogeneous `gens` and the largest degree
/// in it (0 for the zero ideal). Generators are scanned by increasing
/// degree; one is kept unless it already lies in the ideal of those kept.
pub fn minimal_generators(gens: &[Binomial], order: &MonomialOrder) -> Result<(Vec<Binomial>, u32)> {
    for b in gens {
        if b.nvars() != order.nvars() {
            return Err(Error::DimensionMismatch { expected: order.nvars(), got: b.nvars() });
        }
        if !b.is_homogeneous() {
            return Err(Error::NotHomogeneous(b.to_string()));
        }
    }
    let mut sorted: Vec<&Binomial> = gens.iter().filter(|b| !b.is_zero()).collect();
    sorted.sort_by_key(|b| b.degree());
    let mut engine = GbEngine::new(order.clone(), GbOptions::default());
    let mut kept = Vec::new();
    for b in sorted {
        let d = b.degree();
        // The basis of the kept generators is then exact through degree `d`.
        engine.run(Some(d), |_| true)?;
        if engine.reduce(b).is_some() {
            kept.push(b.clone());
            engine.add_input(b.clone());
        }
    }
    let mu = max_degree(&kept);
    Ok((kept, mu))
}

/// `μ` of the ideal generated by `gens`.
pub fn mu(gens: &[Binomial], order: &MonomialOrder) -> Result<u32> {
    Ok(minimal_generators(gens, order)?.1)
}

/// Reduced basis of a toric ideal under `order`, starting from known
/// generators. Uses the saturated reduction, which is sound for prime ideals
/// not containing monomials.
pub fn toric_groebner_basis(gens: &[Binomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    super::groebner::buchberger_with(gens, order, &GbOptions { saturate: true, ..GbOptions::default() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{LoopGraph, SimpleGraph};
    use crate::polytope::{edge_polytope, stable_set_polytope};

    /// All u with |u+| = |u-| <= dmax, A u = 0, from the configuration's
    /// lifted points. Independent of any Gröbner computation.
    pub(crate) fn kernel_brute_force(p: &PointConfiguration, dmax: u32) -> Vec<Binomial> {
        let m = p.len();
        let lifted: Vec<Vec<i64>> = (0..m).map(|i| p.lifted_point(i)).collect();
        let mut monos: Vec<Vec<u32>> = vec![vec![0; m]];
        let mut by_degree: Vec<Vec<Vec<u32>>> = vec![monos.clone()];
        for _ in 1..=dmax {
            let mut next = Vec::new();
            for mono in &monos {
                let start = mono.iter().rposition(|&e| e > 0).unwrap_or(0);
                for v in start..m {
                    let mut x = mono.clone();
                    x[v] += 1;
                    next.push(x);
                }
            }
            by_degree.push(next.clone());
            monos = next;
        }
        let image = |e: &[u32]| -> Vec<i64> {
            (0..=p.dim()).map(|c| e.iter().zip(&lifted).map(|(&k, pt)| k as i64 * pt[c]).sum()).collect()
        };
        let mut out = Vec::new();
        for layer in &by_degree[1..] {
            let imgs: Vec<Vec<i64>> = layer.iter().map(|e| image(e)).collect();
            for i in 0..layer.len() {
                for j in i + 1..layer.len() {
                    let coprime = layer[i].iter().zip(&layer[j]).all(|(&a, &b)| a == 0 || b == 0);
                    if coprime && imgs[i] == imgs[j] {
                        out.push(Binomial::from_parts(
                            Monomial::new(layer[i].clone()),
                            Monomial::new(layer[j].clone()),
                        ));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn simplex_has_zero_ideal() {
        for n in 1..5 {
            let q = stable_set_polytope(&SimpleGraph::complete(n).unwrap());
            assert!(toric_ideal(&q).unwrap().is_empty());
        }
    }

    #[test]
    fn k4_minus_edge() {
        let mut g = SimpleGraph::complete(4).unwrap();
        g.remove_edge(0, 1);
        let q = stable_set_polytope(&g);
        let ideal = toric_ideal(&q).unwrap();
        // Variables: {}, {1}, {2}, {3}, {4}, {1,2}.
        let expect = Binomial::from_vector(&[1, -1, -1, 0, 0, 1]);
        assert_eq!(ideal.len(), 1);
        assert!(ideal[0].same_up_to_sign(&expect));
        let o = MonomialOrder::grevlex(6);
        assert_eq!(minimal_generators(&ideal, &o).unwrap().1, 2);
    }

    #[test]
    fn edge_polytope_of_square() {
        let h = LoopGraph::from_simple(&SimpleGraph::cycle(4).unwrap());
        // Edge order: 12, 14, 23, 34.
        let ideal = toric_ideal(&edge_polytope(&h)).unwrap();
        assert_eq!(ideal.len(), 1);
        assert!(ideal[0].same_up_to_sign(&Binomial::from_vector(&[1, -1, -1, 1])));
    }

    #[test]
    fn twisted_cubic_matches_kernel() {
        let p = PointConfiguration::from_points(1, vec![vec![0], vec![1], vec![2], vec![3]], true).unwrap();
        let ideal = toric_ideal(&p).unwrap();
        let o = MonomialOrder::grevlex(4);
        let kernel = kernel_brute_force(&p, 2);
        assert_eq!(kernel.len(), 3);
        assert!(ideal_equal(&ideal, &kernel, &o).unwrap());
    }

    #[test]
    fn small_configurations_match_kernel() {
        let graphs = [
            SimpleGraph::cycle(4).unwrap().complement(),
            SimpleGraph::cycle(5).unwrap().complement(),
            SimpleGraph::cycle(6).unwrap().complement(),
            SimpleGraph::path(4).unwrap(),
            SimpleGraph::empty(3).unwrap(),
        ];
        for g in graphs {
            let q = stable_set_polytope(&g);
            let ideal = toric_ideal(&q).unwrap();
            let o = MonomialOrder::grevlex(q.len());
            let kernel = kernel_brute_force(&q, 3);
            assert!(ideal_equal(&ideal, &kernel, &o).unwrap(), "{g:?}");
            for b in &ideal {
                assert!(b.is_homogeneous());
            }
        }
    }

    #[test]
    fn complement_of_hexagon_has_mu_three() {
        let g = SimpleGraph::cycle(6).unwrap().complement();
        let q = stable_set_polytope(&g);
        let ideal = toric_ideal(&q).unwrap();
        let o = MonomialOrder::grevlex(q.len());
        assert_eq!(mu(&ideal, &o).unwrap(), 3);
        assert_eq!(mu(&[], &o).unwrap(), 0);
    }

    #[test]
    fn ideal_equal_examples() {
        let o = MonomialOrder::grevlex(2);
        let a = vec![Binomial::from_vector(&[1, -1])];
        assert!(ideal_equal(&a, &a, &o).unwrap());
        assert!(!ideal_equal(&[], &a, &o).unwrap());
    }
}
