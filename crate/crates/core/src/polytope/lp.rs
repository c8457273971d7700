//! Exact feasibility of `A λ = b, λ ≥ 0` by a Phase I simplex over the
//! rationals with Bland's rule.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    /// A nonnegative solution.
    Feasible(Vec<BigRational>),
    /// A Farkas vector `z` with `zᵀA ≥ 0` and `zᵀb < 0`.
    Infeasible(Vec<BigRational>),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Decide `A λ = b, λ ≥ 0`. `a` is given by rows; every row has the same
/// length.
pub fn feasibility(a: &[Vec<i64>], b: &[i64]) -> Feasibility {
    let r = a.len();
    let m = a.first().map_or(0, Vec::len);
    assert_eq!(b.len(), r, "right-hand side length");
    let width = m + r + 1;
    let rhs = m + r;

    // Flip rows so that b ≥ 0; artificial variables form the initial basis.
    let flip: Vec<bool> = b.iter().map(|&x| x < 0).collect();
    let mut t: Vec<Vec<BigRational>> = (0..r)
        .map(|i| {
            let s = if flip[i] { -1 } else { 1 };
            let mut row = vec![BigRational::zero(); width];
            for j in 0..m {
                row[j] = q(s * a[i][j]);
            }
            row[m + i] = BigRational::one();
            row[rhs] = q(s * b[i]);
            row
        })
        .collect();
    let mut basis: Vec<usize> = (m..m + r).collect();

    // Reduced costs of the Phase I objective (sum of artificials).
    let mut cost = vec![BigRational::zero(); width];
    for row in &t {
        for j in 0..m {
            cost[j] -= &row[j];
        }
        cost[rhs] -= &row[rhs];
    }

    loop {
        let Some(enter) = (0..m + r).find(|&j| cost[j].is_negative()) else { break };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..r {
            if t[i][enter].is_positive() {
                let ratio = &t[i][rhs] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // Phase I is bounded below by zero, so some row always qualifies.
        let (pr, _) = leave.expect("phase one objective is bounded");
        let pivot = t[pr][enter].clone();
        for x in t[pr].iter_mut() {
            *x /= &pivot;
        }
        let pivot_row = t[pr].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != pr && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
        }
        let f = cost[enter].clone();
        for (x, p) in cost.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x -= &f * p;
            }
        }
        basis[pr] = enter;
    }

    // cost[rhs] holds minus the optimal objective value.
    if cost[rhs].is_zero() {
        let mut lambda = vec![BigRational::zero(); m];
        for (i, &bv) in basis.iter().enumerate() {
            if bv < m {
                lambda[bv] = t[i][rhs].clone();
            }
        }
        Feasibility::Feasible(lambda)
    } else {
        // y_k = 1 - reduced cost of artificial k solves the Phase I dual:
        // yᵀA' ≤ 0 and yᵀb' > 0 on the flipped system.
        let z = (0..r)
            .map(|k| {
                let y = BigRational::one() - &cost[m + k];
                if flip[k] {
                    y
                } else {
                    -y
                }
            })
            .collect();
        Feasibility::Infeasible(z)
    }
}

/// Check a claimed Farkas vector against the system.
pub fn is_farkas_certificate(a: &[Vec<i64>], b: &[i64], z: &[BigRational]) -> bool {
    let m = a.first().map_or(0, Vec::len);
    let col_ok = (0..m).all(|j| {
        let s: BigRational = a.iter().zip(z).map(|(row, zi)| zi * q(row[j])).sum();
        !s.is_negative()
    });
    let zb: BigRational = b.iter().zip(z).map(|(&bi, zi)| zi * q(bi)).sum();
    col_ok && zb.is_negative()
}

/// Check a claimed nonnegative solution.
pub fn is_solution(a: &[Vec<i64>], b: &[i64], lambda: &[BigRational]) -> bool {
    lambda.iter().all(|x| !x.is_negative())
        && a.iter().zip(b).all(|(row, &bi)| {
            let s: BigRational = row.iter().zip(lambda).map(|(&x, l)| l * q(x)).sum();
            s == q(bi)
        })
}
