use proptest::prelude::*;

use stabletoric::algebra::{minimal_generators, quadratic_gb_search, toric_ideal, MonomialOrder, QuadraticGbSearch};
use stabletoric::graph::{induced_cycles, Family, LoopGraph, Parity, SimpleGraph, Walk};
use stabletoric::polytope::{edge_polytope, idp_check, semigroup_membership, stable_set_polytope};
use stabletoric::stable::{
    analyze, audit_witness, mu_bipartite_complement, normality_necessary_audit, normality_verdict_alpha2,
    walk_binomial, AnalyzeOptions,
};

fn mu_of(p: &stabletoric::PointConfiguration) -> u32 {
    let ideal = toric_ideal(p).unwrap();
    minimal_generators(&ideal, &MonomialOrder::grevlex(p.len())).unwrap().1
}

/// Bipartite graph on parts `0..a` and `a..a+b` from an edge mask.
fn bipartite(a: usize, b: usize, mask: u64) -> SimpleGraph {
    let mut g = SimpleGraph::empty(a + b).unwrap();
    for i in 0..a {
        for j in 0..b {
            if mask >> (i * b + j) & 1 == 1 {
                g.add_edge(i, a + j).unwrap();
            }
        }
    }
    g
}

fn bipartite_complement() -> impl Strategy<Value = SimpleGraph> {
    (1usize..=3, 1usize..=4, any::<u64>())
        .prop_map(|(a, b, m)| bipartite(a, b, m).complement())
        .prop_filter("at most 18 stable sets", |g| g.stable_sets().len() <= 18)
}

fn alpha2(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (2usize..=max_n, 0.2f64..0.8, any::<u64>())
        .prop_map(|(n, p, seed)| Family::RandomAlpha2 { n, p, seed }.build().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mu_formula_for_bipartite_complements(g in bipartite_complement()) {
        prop_assert_eq!(mu_bipartite_complement(&g).unwrap(), mu_of(&stable_set_polytope(&g)));
    }

    #[test]
    fn quadratic_basis_iff_mu_two_iff_only_four_cycles(g in bipartite_complement()) {
        let q = stable_set_polytope(&g);
        let ideal = toric_ideal(&q).unwrap();
        let mu = minimal_generators(&ideal, &MonomialOrder::grevlex(q.len())).unwrap().1;
        let found = matches!(quadratic_gb_search(&ideal, 4, 11).unwrap(), QuadraticGbSearch::Found(_));
        let cycles = induced_cycles(&g.complement(), 4, Parity::Any).unwrap();
        let only_four = cycles.iter().all(|c| c.len() == 4);
        prop_assert_eq!(found, mu <= 2);
        prop_assert_eq!(mu <= 2, only_four);
    }

    #[test]
    fn mu_clause_for_stability_two(g in alpha2(6)) {
        let gc = g.complement();
        let mu_q = mu_of(&stable_set_polytope(&g));
        let mu_e = mu_of(&edge_polytope(&LoopGraph::from_simple(&gc)));
        prop_assert_eq!(mu_q, mu_e.max(2));
    }

    #[test]
    fn reports_are_deterministic_and_consistent(g in alpha2(5), extra in any::<u64>()) {
        // Mix in graphs of other stability numbers by deleting edges.
        let mut h = g.clone();
        for (k, (i, j)) in g.edges().into_iter().enumerate() {
            if extra >> (k % 64) & 1 == 1 && k % 3 == 0 {
                h.remove_edge(i, j);
            }
        }
        let opts = AnalyzeOptions { dmax: 3, ..AnalyzeOptions::default() };
        let a = analyze(&h, &opts).unwrap();
        let b = analyze(&h, &opts).unwrap();
        prop_assert_eq!(a.to_json(), b.to_json());
        prop_assert!(a.inconsistencies().is_empty(), "{:?}", a.inconsistencies());
    }

    #[test]
    fn walk_binomials_have_half_the_walk_degree(steps in prop::collection::vec(0usize..4, 1..6)) {
        // Closed walks on K4 with a loop at vertex 1, built by going out and
        // retracing the steps in reverse around an even cycle.
        let h = LoopGraph::from_edges(4, &[(0, 0), (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let mut vs = vec![0usize];
        for s in &steps {
            let cur = *vs.last().unwrap();
            let next = if *s == cur && cur != 0 { (cur + 1) % 4 } else { *s };
            vs.push(next);
        }
        let back: Vec<usize> = vs.iter().rev().skip(1).copied().collect();
        vs.extend(back);
        let w = Walk::from_vertices(vs).unwrap();
        let b = walk_binomial(&w, &h).unwrap();
        prop_assert!(b.is_zero() || b.degree() as usize == w.len() / 2);
    }
}

#[test]
fn bridged_hole_pairs_agree_with_the_oracle() {
    // Two 5-holes with a varying set of bridges: nonnormal exactly when
    // there is no bridge. Checked up to degree 5, where the witness lives.
    let c5 = SimpleGraph::cycle(5).unwrap();
    let base = c5.disjoint_union(&c5).unwrap();
    let bridges = [vec![], vec![(0, 5)], vec![(0, 5), (2, 8)], vec![(1, 6), (1, 7)]];
    for bs in bridges {
        let mut gc = base.clone();
        for &(i, j) in &bs {
            gc.add_edge(i, j).unwrap();
        }
        let g = gc.complement();
        if g.stability_number() != 2 {
            continue;
        }
        let theorem = normality_verdict_alpha2(&g).unwrap().is_normal();
        let oracle = idp_check(&stable_set_polytope(&g), 5).unwrap().is_normal_up_to();
        assert_eq!(theorem, oracle, "bridges {bs:?}");
        assert_eq!(theorem, !bs.is_empty());
    }
}

#[test]
fn every_audit_violation_has_an_oracle_witness() {
    let graphs = [
        Family::TwoOddHoles(2, 2).build().unwrap(),
        Family::TwoAntiholes { m1: 7, m2: 7, shared: false }.build().unwrap(),
        Family::TwoAntiholes { m1: 7, m2: 7, shared: true }.build().unwrap(),
        Family::HoleAntihole(5, 7).build().unwrap(),
    ];
    for g in graphs {
        let vs = normality_necessary_audit(&g);
        assert!(!vs.is_empty());
        let q = stable_set_polytope(&g);
        for v in &vs {
            let (w, _) = audit_witness(&g, v).unwrap();
            assert_eq!(semigroup_membership(&w, &q).unwrap(), None);
            let level = *w.last().unwrap() as usize;
            let found = idp_check(&q, level).unwrap();
            assert!(!found.is_normal_up_to(), "{:?}", v.kind);
        }
    }
}
