//! Rational cone membership and exact semigroup membership.

use std::collections::HashSet;

use num_traits::Zero;

use super::lp::{feasibility, Feasibility};
use super::{PointConfiguration, RationalCertificate};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeMembership {
    pub member: bool,
    pub certificate: Option<RationalCertificate>,
}

/// Lifted columns `(a_i, 1)` as matrix rows.
pub(crate) fn lifted_rows(p: &PointConfiguration) -> Vec<Vec<i64>> {
    let mut rows: Vec<Vec<i64>> =
        (0..p.dim()).map(|c| p.points().iter().map(|x| x[c]).collect()).collect();
    rows.push(vec![1; p.len()]);
    rows
}

/// Is `target` (length `dim + 1`, level last) a nonnegative rational
/// combination of the lifted points?
pub fn cone_membership(target: &[i64], p: &PointConfiguration) -> Result<ConeMembership> {
    if target.len() != p.dim() + 1 {
        return Err(Error::DimensionMismatch { expected: p.dim() + 1, got: target.len() });
    }
    match feasibility(&lifted_rows(p), target) {
        Feasibility::Feasible(lambda) => {
            let terms = lambda.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
            Ok(ConeMembership { member: true, certificate: Some(RationalCertificate { terms }) })
        }
        Feasibility::Infeasible(_) => Ok(ConeMembership { member: false, certificate: None }),
    }
}

/// Is `target` a sum of exactly `d` lifted points, `d` its last coordinate?
/// Returns the point indices (nondecreasing, with repetition) when it is.
/// The search is exhaustive.
pub fn semigroup_membership(target: &[i64], p: &PointConfiguration) -> Result<Option<Vec<usize>>> {
    let n = p.dim();
    if target.len() != n + 1 {
        return Err(Error::DimensionMismatch { expected: n + 1, got: target.len() });
    }
    let d = target[n];
    if d < 0 {
        return Err(Error::NegativeCoordinate);
    }
    if !p.is_nonnegative() {
        return Err(Error::NegativeCoordinate);
    }
    if target[..n].iter().any(|&x| x < 0) {
        return Ok(None);
    }
    let mut rest = target[..n].to_vec();
    let mut chosen = Vec::with_capacity(d as usize);
    let mut failed = HashSet::new();
    if search(p.points(), &mut rest, d as usize, 0, &mut chosen, &mut failed) {
        Ok(Some(chosen))
    } else {
        Ok(None)
    }
}

fn search(
    pts: &[Vec<i64>],
    rest: &mut Vec<i64>,
    left: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    failed: &mut HashSet<(Vec<i64>, usize)>,
) -> bool {
    if left == 0 {
        return rest.iter().all(|&x| x == 0);
    }
    // Each remaining point contributes at most `max coordinate` per slot.
    let cap = pts[from..].iter().flat_map(|p| p.iter().copied()).max().unwrap_or(0);
    if rest.iter().any(|&x| x > cap * left as i64) {
        return false;
    }
    let key = (rest.clone(), from);
    if failed.contains(&key) {
        return false;
    }
    for i in from..pts.len() {
        if pts[i].iter().zip(rest.iter()).all(|(&a, &r)| a <= r) {
            for (r, &a) in rest.iter_mut().zip(&pts[i]) {
                *r -= a;
            }
            chosen.push(i);
            if search(pts, rest, left - 1, i, chosen, failed) {
                return true;
            }
            chosen.pop();
            for (r, &a) in rest.iter_mut().zip(&pts[i]) {
                *r += a;
            }
        }
    }
    failed.insert(key);
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;
    use crate::polytope::stable_set_polytope;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn two_c5() -> PointConfiguration {
        let c5 = SimpleGraph::cycle(5).unwrap();
        stable_set_polytope(&c5.disjoint_union(&c5).unwrap().complement())
    }

    #[test]
    fn every_point_is_in_the_cone() {
        let q = two_c5();
        for i in 0..q.len() {
            let t = q.lifted_point(i);
            let res = cone_membership(&t, &q).unwrap();
            assert!(res.member);
            assert!(res.certificate.unwrap().verify(&q, &t));
            assert_eq!(semigroup_membership(&t, &q).unwrap(), Some(vec![i]));
        }
    }

    #[test]
    fn two_holes_witness() {
        let q = two_c5();
        let mut t = vec![1; 10];
        t.push(5);
        let res = cone_membership(&t, &q).unwrap();
        assert!(res.member);
        assert!(res.certificate.unwrap().verify(&q, &t));
        // The half-weights on the ten cycle pairs, checked independently.
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let terms = q
            .labels()
            .iter()
            .enumerate()
            .filter(|(_, l)| matches!(l, crate::polytope::PointLabel::StableSet(s) if s.len() == 2))
            .map(|(i, _)| (i, half.clone()))
            .collect::<Vec<_>>();
        assert_eq!(terms.len(), 10);
        assert!(RationalCertificate { terms }.verify(&q, &t));
        assert_eq!(semigroup_membership(&t, &q).unwrap(), None);
    }

    #[test]
    fn negative_level_is_outside() {
        let q = two_c5();
        let mut t = vec![0; 10];
        t.push(-1);
        assert!(!cone_membership(&t, &q).unwrap().member);
        assert!(semigroup_membership(&t, &q).is_err());
    }

    #[test]
    fn sums_of_points_are_members() {
        let q = two_c5();
        for i in 0..q.len() {
            for j in i..q.len() {
                let t: Vec<i64> =
                    q.lifted_point(i).iter().zip(q.lifted_point(j)).map(|(a, b)| a + b).collect();
                let dec = semigroup_membership(&t, &q).unwrap().expect("sum of two points");
                let back: Vec<i64> = (0..=10)
                    .map(|c| dec.iter().map(|&k| q.lifted_point(k)[c]).sum())
                    .collect();
                assert_eq!(back, t);
            }
        }
    }
}
