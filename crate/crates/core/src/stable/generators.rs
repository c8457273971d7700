//! Generators of the toric ideal of `Q_G` for stability number two, the
//! `μ` formula for bipartite complements, and the isomorphism with the edge
//! ring of the star graph of the complement.

use crate::algebra::{ideal_equal, toric_ideal, Binomial, Monomial, MonomialOrder};
use crate::error::{Error, Result};
use crate::graph::{bit, bits, induced_cycles, is_bipartite, LoopGraph, Parity, SimpleGraph, StableSetFamily};
use crate::polytope::{edge_polytope, stable_set_polytope};

use super::walks::edge_toric_generators;

/// Largest walk bound tried by [`alpha2_generators_verified`].
pub const WALK_BOUND_CAP: usize = 64;

pub(crate) fn require_alpha2(g: &SimpleGraph) -> Result<()> {
    match g.stability_number() {
        2 => Ok(()),
        a => Err(Error::StabilityNumberNotTwo(a)),
    }
}

fn var(family: &StableSetFamily, mask: u64) -> usize {
    family.index_of(mask).expect("stable set")
}

fn quadric(nvars: usize, a: (usize, usize), b: (usize, usize)) -> Binomial {
    let mut h = Monomial::var(nvars, a.0);
    h = h.mul(&Monomial::var(nvars, a.1));
    let mut t = Monomial::var(nvars, b.0);
    t = t.mul(&Monomial::var(nvars, b.1));
    Binomial::new(h, t).expect("same number of variables")
}

/// The binomials of the complement's even closed walks up to `len_bound`,
/// moved to the pair variables, followed by the quadrics
/// `y_{ij} y_k − y_{jk} y_i` for paths `i–j–k` of the complement (`i < k`)
/// and `y_{ij} y_∅ − y_i y_j` for its edges. Variables are the stable sets of
/// `g` in canonical order.
pub fn alpha2_generators(g: &SimpleGraph, len_bound: usize) -> Result<Vec<Binomial>> {
    require_alpha2(g)?;
    let gc = g.complement();
    let family = g.stable_sets();
    let nv = family.len();
    let pair = |i: usize, j: usize| var(&family, bit(i) | bit(j));
    let single = |i: usize| var(&family, bit(i));

    let h = LoopGraph::from_simple(&gc);
    let map: Vec<usize> = h.edges().iter().map(|&(i, j)| pair(i, j)).collect();
    let mut out: Vec<Binomial> =
        edge_toric_generators(&h, len_bound)?.iter().map(|b| b.relabel(&map, nv)).collect();

    for j in 0..g.n() {
        let nb: Vec<usize> = bits(gc.neighbors(j)).collect();
        for (a, &i) in nb.iter().enumerate() {
            for &k in &nb[a + 1..] {
                out.push(quadric(nv, (pair(i, j), single(k)), (pair(j, k), single(i))));
            }
        }
    }
    let empty = var(&family, 0);
    for (i, j) in gc.edges() {
        out.push(quadric(nv, (pair(i, j), empty), (single(i), single(j))));
    }
    Ok(out)
}

/// [`alpha2_generators`] with the walk bound doubled from
/// `max(2|E(Ḡ)|, 4)` until the result generates the elimination ideal.
/// Returns the generators and the bound that sufficed.
pub fn alpha2_generators_verified(g: &SimpleGraph) -> Result<(Vec<Binomial>, usize)> {
    require_alpha2(g)?;
    let ideal = toric_ideal(&stable_set_polytope(g))?;
    let order = MonomialOrder::grevlex(g.stable_sets().len());
    let mut bound = (2 * g.complement().edge_count()).max(4);
    loop {
        let gens = alpha2_generators(g, bound)?;
        if ideal_equal(&gens, &ideal, &order)? {
            return Ok((gens, bound));
        }
        if bound >= WALK_BOUND_CAP {
            return Err(Error::ResourceCap(format!(
                "walk binomials up to length {bound} do not generate the toric ideal"
            )));
        }
        bound = (bound * 2).min(WALK_BOUND_CAP);
    }
}

/// `μ` of the toric ideal of `Q_G` when the complement is bipartite: 0 for
/// an empty complement, half the longest chordless cycle of the complement
/// when it has a cycle, 2 otherwise.
pub fn mu_bipartite_complement(g: &SimpleGraph) -> Result<u32> {
    let gc = g.complement();
    if !is_bipartite(&gc).bipartite {
        return Err(Error::ComplementNotBipartite);
    }
    if gc.edge_count() == 0 {
        return Ok(0);
    }
    let longest = induced_cycles(&gc, 4, Parity::Even)?.iter().map(|c| c.len()).max();
    Ok(longest.map_or(2, |l| (l / 2) as u32))
}

/// The variable of `S(G)` matching each edge of the star graph of the
/// complement: the loop goes to `∅`, `{i, n}` to `{i}`, `{i, j}` to itself.
pub fn star_variable_map(g: &SimpleGraph) -> Result<Vec<usize>> {
    require_alpha2(g)?;
    let n = g.n();
    let family = g.stable_sets();
    let star = g.complement().star_graph()?;
    Ok(star
        .edges()
        .iter()
        .map(|&(i, j)| match (i == n, j == n) {
            (true, true) => var(&family, 0),
            (false, true) => var(&family, bit(i)),
            _ => var(&family, bit(i) | bit(j)),
        })
        .collect())
}

/// Do the toric ideal of `Q_G` and the edge ideal of the star graph of the
/// complement agree under [`star_variable_map`]?
pub fn keylemma_check(g: &SimpleGraph) -> Result<bool> {
    let map = star_variable_map(g)?;
    let nv = map.len();
    if nv != g.stable_sets().len() {
        return Ok(false);
    }
    let q = toric_ideal(&stable_set_polytope(g))?;
    let star = g.complement().star_graph()?;
    let e: Vec<Binomial> =
        toric_ideal(&edge_polytope(&star))?.iter().map(|b| b.relabel(&map, nv)).collect();
    ideal_equal(&q, &e, &MonomialOrder::grevlex(nv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::mu;

    fn complement_of(gc: SimpleGraph) -> SimpleGraph {
        gc.complement()
    }

    fn names(g: &SimpleGraph) -> Vec<String> {
        stable_set_polytope(g).labels().iter().map(|l| format!("y{l}")).collect()
    }

    #[test]
    fn single_complement_edge() {
        let g = complement_of(SimpleGraph::from_edges(4, &[(0, 1)]).unwrap());
        let gens = alpha2_generators(&g, 4).unwrap();
        let shown: Vec<String> = gens.iter().map(|b| b.display_with(&names(&g))).collect();
        assert_eq!(shown, vec!["y{}*y{1,2} - y{1}*y{2}"]);
    }

    #[test]
    fn complement_path_gives_both_types() {
        let g = complement_of(SimpleGraph::path(3).unwrap());
        let gens = alpha2_generators(&g, 4).unwrap();
        let shown: Vec<String> = gens.iter().map(|b| b.display_with(&names(&g))).collect();
        assert_eq!(
            shown,
            vec!["y{3}*y{1,2} - y{1}*y{2,3}", "y{}*y{1,2} - y{1}*y{2}", "y{}*y{2,3} - y{2}*y{3}"]
        );
    }

    #[test]
    fn two_disjoint_holes_have_no_walk_part() {
        let c5 = SimpleGraph::cycle(5).unwrap();
        let g = complement_of(c5.disjoint_union(&c5).unwrap());
        let gens = alpha2_generators(&g, 20).unwrap();
        // 10 type (i) quadrics (one per middle vertex) and 10 type (ii).
        assert_eq!(gens.len(), 20);
        assert!(gens.iter().all(|b| b.degree() == 2));
    }

    #[test]
    fn verified_generators_match_elimination() {
        for gc in [SimpleGraph::cycle(4).unwrap(), SimpleGraph::cycle(5).unwrap(), SimpleGraph::path(4).unwrap()] {
            let g = complement_of(gc);
            let (gens, bound) = alpha2_generators_verified(&g).unwrap();
            assert!(bound >= 4);
            let ideal = toric_ideal(&stable_set_polytope(&g)).unwrap();
            let o = MonomialOrder::grevlex(g.stable_sets().len());
            assert_eq!(mu(&gens, &o).unwrap(), mu(&ideal, &o).unwrap());
        }
    }

    #[test]
    fn rejects_other_stability_numbers() {
        let k3 = SimpleGraph::complete(3).unwrap();
        assert_eq!(alpha2_generators(&k3, 4), Err(Error::StabilityNumberNotTwo(1)));
        assert_eq!(keylemma_check(&SimpleGraph::empty(3).unwrap()), Err(Error::StabilityNumberNotTwo(3)));
    }

    #[test]
    fn mu_formula_examples() {
        assert_eq!(mu_bipartite_complement(&SimpleGraph::complete(4).unwrap()).unwrap(), 0);
        assert_eq!(mu_bipartite_complement(&complement_of(SimpleGraph::cycle(8).unwrap())).unwrap(), 4);
        assert_eq!(mu_bipartite_complement(&complement_of(SimpleGraph::path(5).unwrap())).unwrap(), 2);
        assert_eq!(
            mu_bipartite_complement(&complement_of(SimpleGraph::cycle(5).unwrap())),
            Err(Error::ComplementNotBipartite)
        );
    }

    #[test]
    fn keylemma_examples() {
        let kminus = complement_of(SimpleGraph::from_edges(4, &[(0, 1)]).unwrap());
        assert!(keylemma_check(&kminus).unwrap());
        for m in [4, 5] {
            assert!(keylemma_check(&complement_of(SimpleGraph::cycle(m).unwrap())).unwrap());
        }
    }

    #[test]
    fn star_map_is_a_bijection() {
        let g = complement_of(SimpleGraph::cycle(5).unwrap());
        let mut map = star_variable_map(&g).unwrap();
        map.sort_unstable();
        assert_eq!(map, (0..g.stable_sets().len()).collect::<Vec<_>>());
    }
}
