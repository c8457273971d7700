//! Maximal minors by fraction-free (Bareiss) elimination and the
//! unimodularity test built on them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{PointConfiguration, PointLabel};
use crate::error::{Error, Result};
use crate::graph::{is_bipartite, SimpleGraph};

/// Exhaustive enumeration is attempted only up to this many maximal minors.
pub const EXHAUSTIVE_MINOR_LIMIT: u128 = 10_000_000;

/// Determinant of a square integer matrix by Bareiss elimination. Every
/// division is exact.
pub fn bareiss_determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = v.div_rem(&prev);
                debug_assert!(r.is_zero());
                m[i][j] = q;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Bareiss on machine integers; callers guarantee the Hadamard bound fits.
fn bareiss_i64(m: &mut [i64], n: usize) -> i64 {
    let mut sign = 1i64;
    let mut prev = 1i64;
    for k in 0..n.saturating_sub(1) {
        if m[k * n + k] == 0 {
            match (k + 1..n).find(|&r| m[r * n + k] != 0) {
                Some(r) => {
                    for c in 0..n {
                        m.swap(k * n + c, r * n + c);
                    }
                    sign = -sign;
                }
                None => return 0,
            }
        }
        let pivot = m[k * n + k];
        for i in k + 1..n {
            let lead = m[i * n + k];
            for j in k + 1..n {
                let v = m[i * n + j] as i128 * pivot as i128 - lead as i128 * m[k * n + j] as i128;
                m[i * n + j] = (v / prev as i128) as i64;
            }
        }
        prev = pivot;
    }
    if n == 0 {
        1
    } else {
        sign * m[n * n - 1]
    }
}

/// A maximal minor whose absolute value differs from another nonzero one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefutingMinor {
    pub columns: Vec<usize>,
    pub labels: Vec<PointLabel>,
    pub value: BigInt,
    /// A nonzero minor of a different absolute value and its columns.
    pub reference_columns: Vec<usize>,
    pub reference_value: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Unimodularity {
    /// All nonzero maximal minors share this absolute value.
    Unimodular { common_value: BigInt },
    NotUnimodular(RefutingMinor),
    /// Too many minors for exhaustive enumeration and no refuting minor was
    /// found by the targeted search.
    Infeasible { minors: u128 },
}

impl Unimodularity {
    pub fn verdict(&self) -> Option<bool> {
        match self {
            Unimodularity::Unimodular { .. } => Some(true),
            Unimodularity::NotUnimodular(_) => Some(false),
            Unimodularity::Infeasible { .. } => None,
        }
    }
}

pub(crate) fn binomial_coefficient(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

fn minor(rows: &[Vec<i64>], cols: &[usize]) -> BigInt {
    let m: Vec<Vec<BigInt>> =
        rows.iter().map(|r| cols.iter().map(|&c| BigInt::from(r[c])).collect()).collect();
    bareiss_determinant(&m)
}

/// Columns of the odd-cycle refutation: the cycle's pair points, the origin,
/// and the unit vectors off the cycle. Needs the origin, all singletons and
/// the pairs of some odd cycle among the stable-set labels.
fn targeted_refutation(p: &PointConfiguration, rows: &[Vec<i64>]) -> Option<RefutingMinor> {
    let n = p.dim();
    let find = |w: &[usize]| {
        p.labels().iter().position(|l| matches!(l, PointLabel::StableSet(s) if s == w))
    };
    let origin = find(&[])?;
    let singles: Vec<usize> = (0..n).map(|v| find(&[v])).collect::<Option<_>>()?;
    let mut pair_graph = SimpleGraph::empty(n).ok()?;
    for l in p.labels() {
        if let PointLabel::StableSet(s) = l {
            if s.len() == 2 {
                pair_graph.add_edge(s[0], s[1]).ok()?;
            }
        }
    }
    let cycle = is_bipartite(&pair_graph).odd_cycle?;
    let on_cycle = cycle.mask();
    let mut cols: Vec<usize> = cycle
        .edges()
        .into_iter()
        .map(|(a, b)| find(&[a, b]))
        .collect::<Option<_>>()?;
    cols.push(origin);
    cols.extend((0..n).filter(|&v| on_cycle & (1u64 << v) == 0).map(|v| singles[v]));
    let value = minor(rows, &cols);
    let mut reference_columns = vec![origin];
    reference_columns.extend(singles.iter().copied());
    let reference_value = minor(rows, &reference_columns);
    if value.is_zero() || value.abs() == reference_value.abs() {
        return None;
    }
    Some(RefutingMinor {
        labels: cols.iter().map(|&c| p.labels()[c].clone()).collect(),
        columns: cols,
        value,
        reference_columns,
        reference_value,
    })
}

/// True iff all nonzero maximal minors of the homogenized matrix share one
/// absolute value. Rank-deficient configurations are rejected.
pub fn is_unimodular(p: &PointConfiguration) -> Result<Unimodularity> {
    let rows = p.matrix_rows();
    let r = rows.len();
    let m = p.len();
    let rank = p.rank();
    if rank < r {
        return Err(Error::RankDeficient { rank, expected: r });
    }
    if let Some(refute) = targeted_refutation(p, &rows) {
        return Ok(Unimodularity::NotUnimodular(refute));
    }
    let total = binomial_coefficient(m, r);
    if total > EXHAUSTIVE_MINOR_LIMIT {
        return Ok(Unimodularity::Infeasible { minors: total });
    }

    // Hadamard bound on every minor decides whether machine integers suffice.
    let max_norm_sq = (0..m)
        .map(|c| rows.iter().map(|row| (row[c] as f64).powi(2)).sum::<f64>())
        .fold(1.0f64, f64::max);
    let fits_i64 = (r as f64) * max_norm_sq.log2() / 2.0 < 60.0;

    let mut cols: Vec<usize> = (0..r).collect();
    let mut buf = vec![0i64; r * r];
    let mut reference: Option<(BigInt, Vec<usize>)> = None;
    loop {
        let value = if fits_i64 {
            for (i, row) in rows.iter().enumerate() {
                for (j, &c) in cols.iter().enumerate() {
                    buf[i * r + j] = row[c];
                }
            }
            BigInt::from(bareiss_i64(&mut buf, r))
        } else {
            minor(&rows, &cols)
        };
        if !value.is_zero() {
            match &reference {
                None => reference = Some((value.abs(), cols.clone())),
                Some((abs, ref_cols)) if *abs != value.abs() => {
                    return Ok(Unimodularity::NotUnimodular(RefutingMinor {
                        labels: cols.iter().map(|&c| p.labels()[c].clone()).collect(),
                        columns: cols,
                        value,
                        reference_columns: ref_cols.clone(),
                        reference_value: abs.clone(),
                    }));
                }
                Some(_) => {}
            }
        }
        // Next combination in lexicographic order.
        let Some(i) = (0..r).rev().find(|&i| cols[i] < m - r + i) else { break };
        cols[i] += 1;
        for j in i + 1..r {
            cols[j] = cols[j - 1] + 1;
        }
    }
    let common_value = reference.map(|(v, _)| v).unwrap_or_default();
    Ok(Unimodularity::Unimodular { common_value })
}
