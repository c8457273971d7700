//! Lattice point configurations of stable set and edge polytopes.

pub mod idp;
pub mod lp;
pub mod membership;
pub mod minors;
pub mod witness;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{bits, LoopGraph, SimpleGraph};

pub use idp::{idp_check, IdpVerdict};
pub use membership::{cone_membership, semigroup_membership, ConeMembership};
pub use minors::{bareiss_determinant, is_unimodular, RefutingMinor, Unimodularity};
pub use witness::{odd_holes_witness, proof_witness, read_witness, write_witness, WitnessKind};

/// What a point stands for.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PointLabel {
    /// Indicator vector of a stable set (sorted 0-based vertices).
    StableSet(Vec<usize>),
    Edge(usize, usize),
    Loop(usize),
    Index(usize),
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointLabel::StableSet(w) => {
                write!(f, "{{")?;
                for (k, v) in w.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", v + 1)?;
                }
                write!(f, "}}")
            }
            PointLabel::Edge(i, j) => write!(f, "{}{}", i + 1, j + 1),
            PointLabel::Loop(i) => write!(f, "{}{}", i + 1, i + 1),
            PointLabel::Index(k) => write!(f, "#{}", k + 1),
        }
    }
}

/// A finite list of integer points in `Z^dim`. When `homogenized` is set each
/// point carries an implicit extra coordinate equal to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    dim: usize,
    points: Vec<Vec<i64>>,
    labels: Vec<PointLabel>,
    homogenized: bool,
}

impl PointConfiguration {
    pub fn new(
        dim: usize,
        points: Vec<Vec<i64>>,
        labels: Vec<PointLabel>,
        homogenized: bool,
    ) -> Result<Self> {
        if labels.len() != points.len() {
            return Err(Error::DimensionMismatch { expected: points.len(), got: labels.len() });
        }
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, got: p.len() });
        }
        Ok(Self { dim, points, labels, homogenized })
    }

    /// Unlabeled configuration; labels are the point indices.
    pub fn from_points(dim: usize, points: Vec<Vec<i64>>, homogenized: bool) -> Result<Self> {
        let labels = (0..points.len()).map(PointLabel::Index).collect();
        Self::new(dim, points, labels, homogenized)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn labels(&self) -> &[PointLabel] {
        &self.labels
    }

    pub fn is_homogenized(&self) -> bool {
        self.homogenized
    }

    pub fn with_homogenization(mut self, on: bool) -> Self {
        self.homogenized = on;
        self
    }

    /// Rows of the configuration matrix: one per coordinate, plus the all-ones
    /// row when homogenized. Column `i` is point `i`.
    pub fn matrix_rows(&self) -> Vec<Vec<i64>> {
        let mut rows: Vec<Vec<i64>> =
            (0..self.dim).map(|c| self.points.iter().map(|p| p[c]).collect()).collect();
        if self.homogenized {
            rows.push(vec![1; self.points.len()]);
        }
        rows
    }

    /// Point `i` with the homogenizing 1 appended (always appended).
    pub fn lifted_point(&self, i: usize) -> Vec<i64> {
        let mut p = self.points[i].clone();
        p.push(1);
        p
    }

    pub fn is_nonnegative(&self) -> bool {
        self.points.iter().all(|p| p.iter().all(|&x| x >= 0))
    }

    pub fn is_zero_one(&self) -> bool {
        self.points.iter().all(|p| p.iter().all(|&x| x == 0 || x == 1))
    }

    /// Rank of the (homogenized, if flagged) matrix over the rationals.
    pub fn rank(&self) -> usize {
        rational_rank(&self.matrix_rows())
    }

    /// Points vanishing on every coordinate in `zero_coords`, with those
    /// coordinates dropped. Returns the configuration and the indices of the
    /// kept points in `self`.
    pub fn face_restriction(&self, zero_coords: &[usize]) -> Result<(PointConfiguration, Vec<usize>)> {
        if let Some(&c) = zero_coords.iter().find(|&&c| c >= self.dim) {
            return Err(Error::DimensionMismatch { expected: self.dim, got: c + 1 });
        }
        let keep_coords: Vec<usize> = (0..self.dim).filter(|c| !zero_coords.contains(c)).collect();
        let kept: Vec<usize> = (0..self.points.len())
            .filter(|&i| zero_coords.iter().all(|&c| self.points[i][c] == 0))
            .collect();
        // Relabel stable sets onto the surviving coordinates.
        let relabel = |v: usize| keep_coords.iter().position(|&c| c == v);
        let points = kept
            .iter()
            .map(|&i| keep_coords.iter().map(|&c| self.points[i][c]).collect())
            .collect();
        let labels = kept
            .iter()
            .map(|&i| match &self.labels[i] {
                PointLabel::StableSet(w) => {
                    PointLabel::StableSet(w.iter().filter_map(|&v| relabel(v)).collect())
                }
                PointLabel::Edge(a, b) => match (relabel(*a), relabel(*b)) {
                    (Some(x), Some(y)) => PointLabel::Edge(x, y),
                    _ => PointLabel::Index(i),
                },
                PointLabel::Loop(a) => relabel(*a).map_or(PointLabel::Index(i), PointLabel::Loop),
                PointLabel::Index(_) => PointLabel::Index(i),
            })
            .collect();
        let face = PointConfiguration::new(keep_coords.len(), points, labels, self.homogenized)?;
        Ok((face, kept))
    }
}

/// The stable set polytope `Q_G`: one 0/1 point per stable set, in the
/// canonical stable-set order, homogenized.
pub fn stable_set_polytope(g: &SimpleGraph) -> PointConfiguration {
    let family = g.stable_sets();
    let n = g.n();
    let mut points = Vec::with_capacity(family.len());
    let mut labels = Vec::with_capacity(family.len());
    for &mask in family.masks() {
        let mut p = vec![0i64; n];
        for v in bits(mask) {
            p[v] = 1;
        }
        points.push(p);
        labels.push(PointLabel::StableSet(bits(mask).collect()));
    }
    PointConfiguration { dim: n, points, labels, homogenized: true }
}

/// The edge polytope `P_H`: `e_i + e_j` per edge and `2 e_i` per loop, in the
/// canonical edge order of [`LoopGraph::edges`]. All coordinate sums are 2,
/// so the configuration is graded without an extra coordinate.
pub fn edge_polytope(h: &LoopGraph) -> PointConfiguration {
    let n = h.n();
    let mut points = Vec::new();
    let mut labels = Vec::new();
    for (i, j) in h.edges() {
        let mut p = vec![0i64; n];
        p[i] += 1;
        p[j] += 1;
        points.push(p);
        labels.push(if i == j { PointLabel::Loop(i) } else { PointLabel::Edge(i, j) });
    }
    PointConfiguration { dim: n, points, labels, homogenized: false }
}

/// Nonnegative rational weights on points of a configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCertificate {
    pub terms: Vec<(usize, BigRational)>,
}

impl RationalCertificate {
    /// Weighted sum of the lifted points `(a_i, 1)`.
    pub fn combination(&self, p: &PointConfiguration) -> Vec<BigRational> {
        let mut sum = vec![BigRational::zero(); p.dim() + 1];
        for (i, coef) in &self.terms {
            for (s, x) in sum.iter_mut().zip(p.lifted_point(*i)) {
                *s += coef * BigRational::from_integer(BigInt::from(x));
            }
        }
        sum
    }

    /// Coefficients nonnegative, indices valid and the combination equals
    /// `target` exactly.
    pub fn verify(&self, p: &PointConfiguration, target: &[i64]) -> bool {
        if target.len() != p.dim() + 1 {
            return false;
        }
        if self.terms.iter().any(|(i, c)| *i >= p.len() || c.is_negative()) {
            return false;
        }
        self.combination(p)
            .iter()
            .zip(target)
            .all(|(s, &t)| *s == BigRational::from_integer(BigInt::from(t)))
    }
}

pub(crate) fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                for k in c..cols {
                    let delta = &f * &m[rank][k];
                    m[r][k] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stable_set_polytope_examples() {
        let k3 = SimpleGraph::complete(3).unwrap();
        let q = stable_set_polytope(&k3);
        assert_eq!(q.points(), &[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);

        let two_k2 = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let q = stable_set_polytope(&two_k2);
        assert_eq!(q.len(), 9);
        assert!(q.points().contains(&vec![1, 0, 1, 0]));

        let q = stable_set_polytope(&SimpleGraph::empty(2).unwrap());
        assert_eq!(q.points(), &[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(q.rank(), 3);
    }

    #[test]
    fn edge_polytope_examples() {
        let tri = LoopGraph::from_simple(&SimpleGraph::cycle(3).unwrap());
        assert_eq!(edge_polytope(&tri).points(), &[vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]);
        let single = LoopGraph::from_edges(1, &[(0, 0)]).unwrap();
        assert_eq!(edge_polytope(&single).points(), &[vec![2]]);
        let star = SimpleGraph::from_edges(2, &[(0, 1)]).unwrap().star_graph().unwrap();
        assert_eq!(
            edge_polytope(&star).points(),
            &[vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1], vec![0, 0, 2]]
        );
    }

    #[test]
    fn face_restriction_examples() {
        let q3 = stable_set_polytope(&SimpleGraph::complete(3).unwrap());
        let (face, kept) = q3.face_restriction(&[2]).unwrap();
        assert_eq!(face.points(), stable_set_polytope(&SimpleGraph::complete(2).unwrap()).points());
        assert_eq!(kept, vec![0, 1, 2]);
        let (same, _) = q3.face_restriction(&[]).unwrap();
        assert_eq!(same, q3);
    }

    #[test]
    fn face_of_two_holes_is_a_single_hole() {
        let c5 = SimpleGraph::cycle(5).unwrap();
        let g = c5.disjoint_union(&c5).unwrap().complement();
        let q = stable_set_polytope(&g);
        let (face, _) = q.face_restriction(&[5, 6, 7, 8, 9]).unwrap();
        let direct = stable_set_polytope(&c5.complement());
        assert_eq!(face, direct);
    }

    #[test]
    fn certificate_verification() {
        let q = stable_set_polytope(&SimpleGraph::complete(2).unwrap());
        let half = BigRational::new(1.into(), 2.into());
        let cert = RationalCertificate { terms: vec![(1, half.clone()), (2, half)] };
        assert!(!cert.verify(&q, &[1, 1, 1]));
        let cert = RationalCertificate {
            terms: vec![(1, BigRational::from_integer(1.into())), (2, BigRational::from_integer(1.into()))],
        };
        assert!(cert.verify(&q, &[1, 1, 2]));
    }
}
