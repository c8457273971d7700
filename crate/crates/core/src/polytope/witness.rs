//! Explicit non-normality witnesses built from pairs of odd holes and odd
//! antiholes of the complement, and their text format.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{stable_set_polytope, RationalCertificate};
use crate::error::{Error, Result};
use crate::graph::{bit, SimpleGraph};

/// Which pair of cycles in the complement the witness comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessKind {
    /// Two disjoint odd antiholes.
    TwoAntiholes,
    /// Two odd antiholes of length at least 7 sharing their first vertex.
    SharedVertexAntiholes,
    /// A disjoint odd hole and odd antihole.
    HoleAntihole,
}

impl fmt::Display for WitnessKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WitnessKind::TwoAntiholes => "i",
            WitnessKind::SharedVertexAntiholes => "ii",
            WitnessKind::HoleAntihole => "iii",
        })
    }
}

impl FromStr for WitnessKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "i" | "two-antiholes" => Ok(WitnessKind::TwoAntiholes),
            "ii" | "shared-vertex-antiholes" => Ok(WitnessKind::SharedVertexAntiholes),
            "iii" | "hole-antihole" => Ok(WitnessKind::HoleAntihole),
            other => Err(Error::Precondition(format!("unknown witness kind `{other}`"))),
        }
    }
}

/// `c` (in cycle order) induces a chordless cycle of `h`.
fn is_induced_cycle(h: &SimpleGraph, c: &[usize]) -> bool {
    let m = c.len();
    if m < 3 || c.iter().any(|&v| v >= h.n()) {
        return false;
    }
    let mask = c.iter().fold(0u64, |acc, &v| acc | bit(v));
    if mask.count_ones() as usize != m {
        return false;
    }
    c.iter().enumerate().all(|(p, &v)| {
        let expect = bit(c[(p + 1) % m]) | bit(c[(p + m - 1) % m]);
        h.neighbors(v) & mask == expect
    })
}

fn mask_of(c: &[usize]) -> u64 {
    c.iter().fold(0u64, |acc, &v| acc | bit(v))
}

fn frac(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

/// Check that both cycles are odd of length at least `min_len`, induce the
/// expected structure, and that the complement has no edge between the
/// parts outside their common vertices.
fn check_pair(
    g: &SimpleGraph,
    gc: &SimpleGraph,
    c1: (&[usize], bool),
    c2: (&[usize], bool),
    min_len: usize,
) -> Result<()> {
    for (c, hole) in [c1, c2] {
        if c.len() % 2 == 0 || c.len() < min_len {
            return Err(precondition(format!(
                "cycles must be odd of length at least {min_len}, got length {}",
                c.len()
            )));
        }
        // A hole of the complement is given in complement order; an antihole
        // is given in the cycle order of the graph itself.
        let host = if hole { gc } else { g };
        if !is_induced_cycle(host, c) {
            let what = if hole { "odd hole of the complement" } else { "odd antihole of the complement" };
            return Err(precondition(format!("{:?} is not an {what}", labels(c))));
        }
    }
    let (m1, m2) = (mask_of(c1.0), mask_of(c2.0));
    let (only1, only2) = (m1 & !m2, m2 & !m1);
    if crate::graph::bits(only1).any(|v| gc.neighbors(v) & only2 != 0) {
        return Err(precondition("the complement has a bridge between the cycles"));
    }
    Ok(())
}

fn labels(c: &[usize]) -> Vec<usize> {
    c.iter().map(|v| v + 1).collect()
}

struct Builder {
    target: Vec<i64>,
    terms: Vec<(usize, BigRational)>,
    family: crate::graph::StableSetFamily,
}

impl Builder {
    fn new(g: &SimpleGraph) -> Self {
        Self { target: vec![0; g.n() + 1], terms: Vec::new(), family: g.stable_sets() }
    }

    fn add(&mut self, mask: u64, coef: BigRational) {
        if coef.is_zero() {
            return;
        }
        let idx = self.family.index_of(mask).expect("stable set");
        match self.terms.iter_mut().find(|(i, _)| *i == idx) {
            Some((_, c)) => *c += coef,
            None => self.terms.push((idx, coef)),
        }
    }

    /// Stable sets of size `size` inside `within` satisfying `keep`.
    fn add_sets(&mut self, within: u64, size: u32, coef: &BigRational, keep: impl Fn(u64) -> bool) {
        let masks: Vec<u64> = self
            .family
            .masks()
            .iter()
            .copied()
            .filter(|&w| w & !within == 0 && w.count_ones() == size && keep(w))
            .collect();
        for w in masks {
            self.add(w, coef.clone());
        }
    }

    fn finish(mut self, g: &SimpleGraph) -> Result<(Vec<i64>, RationalCertificate)> {
        self.terms.sort_by_key(|(i, _)| *i);
        let cert = RationalCertificate { terms: self.terms };
        if !cert.verify(&stable_set_polytope(g), &self.target) {
            return Err(precondition("the decomposition does not reproduce the witness"));
        }
        Ok((self.target, cert))
    }
}

/// The witness vector and its rational decomposition for `kind`.
///
/// Holes of the complement are given in complement cycle order. Antiholes of
/// the complement are given as chordless cycles of `g` in cycle order; for
/// the shared-vertex kind the common vertex comes first in both.
pub fn proof_witness(
    kind: WitnessKind,
    g: &SimpleGraph,
    c1: &[usize],
    c2: &[usize],
) -> Result<(Vec<i64>, RationalCertificate)> {
    let gc = g.complement();
    let n = g.n();
    let mut b = Builder::new(g);
    match kind {
        WitnessKind::TwoAntiholes => {
            check_pair(g, &gc, (c1, false), (c2, false), 5)?;
            if mask_of(c1) & mask_of(c2) != 0 {
                return Err(precondition("antiholes must be vertex-disjoint"));
            }
            let (k, l) = ((c1.len() / 2) as i64, (c2.len() / 2) as i64);
            b.add_sets(mask_of(c1), k as u32, &frac(1, k), |_| true);
            b.add_sets(mask_of(c2), l as u32, &frac(1, l), |_| true);
            b.add(0, frac(k * l - k - l, k * l));
            for &v in c1.iter().chain(c2) {
                b.target[v] = 1;
            }
            b.target[n] = 5;
        }
        WitnessKind::SharedVertexAntiholes => {
            if c1.len() < 7 || c2.len() < 7 {
                return Err(precondition("shared-vertex antiholes need k, l >= 3 (length at least 7)"));
            }
            check_pair(g, &gc, (c1, false), (c2, false), 7)?;
            if c1[0] != c2[0] || mask_of(c1) & mask_of(c2) != bit(c1[0]) {
                return Err(precondition("antiholes must share exactly their first vertex"));
            }
            let (k, l) = ((c1.len() / 2) as i64, (c2.len() / 2) as i64);
            let s = c1[0];
            for (c, size) in [(c1, k), (c2, l)] {
                let ends = bit(c[1]) | bit(c[c.len() - 1]);
                let keep = move |w: u64| w & bit(s) != 0 || w & ends == ends;
                b.add_sets(mask_of(c), size as u32, &frac(1, size - 1), keep);
            }
            let rest = BigRational::one() - frac(1, k - 1) - frac(1, l - 1);
            debug_assert!(!rest.is_negative());
            b.add(bit(s), rest);
            for &v in c1[1..].iter().chain(&c2[1..]) {
                b.target[v] = 1;
            }
            b.target[s] = 3;
            b.target[n] = 5;
        }
        WitnessKind::HoleAntihole => {
            check_pair(g, &gc, (c1, true), (c2, false), 5)?;
            if mask_of(c1) & mask_of(c2) != 0 {
                return Err(precondition("hole and antihole must be vertex-disjoint"));
            }
            let (k, l) = ((c1.len() / 2) as i64, (c2.len() / 2) as i64);
            b.add_sets(mask_of(c1), 2, &frac(1, 2), |_| true);
            b.add_sets(mask_of(c2), l as u32, &frac(1, l), |_| true);
            b.add(0, frac(l - 2, 2 * l));
            for &v in c1.iter().chain(c2) {
                b.target[v] = 1;
            }
            b.target[n] = k + 3;
        }
    }
    b.finish(g)
}

/// The witness for two disjoint odd holes of the complement with no bridge:
/// ones on both cycles at level half their total length, with weight 1/2 on
/// every cycle edge.
pub fn odd_holes_witness(
    g: &SimpleGraph,
    c1: &[usize],
    c2: &[usize],
) -> Result<(Vec<i64>, RationalCertificate)> {
    let gc = g.complement();
    check_pair(g, &gc, (c1, true), (c2, true), 5)?;
    if mask_of(c1) & mask_of(c2) != 0 {
        return Err(precondition("holes must be vertex-disjoint"));
    }
    let mut b = Builder::new(g);
    for c in [c1, c2] {
        for p in 0..c.len() {
            b.add(bit(c[p]) | bit(c[(p + 1) % c.len()]), frac(1, 2));
        }
    }
    for &v in c1.iter().chain(c2) {
        b.target[v] = 1;
    }
    b.target[g.n()] = ((c1.len() + c2.len()) / 2) as i64;
    b.finish(g)
}

/// One `w` line (level first) followed by one `λ` line per term, with
/// 1-based point indices.
pub fn write_witness(point: &[i64], certificate: Option<&RationalCertificate>) -> String {
    let mut out = String::new();
    let (level, coords) = point.split_last().expect("witness has a level coordinate");
    let _ = write!(out, "w {level}");
    for z in coords {
        let _ = write!(out, " {z}");
    }
    out.push('\n');
    if let Some(cert) = certificate {
        for (i, c) in &cert.terms {
            let _ = writeln!(out, "λ {} {}/{}", i + 1, c.numer(), c.denom());
        }
    }
    out
}

/// Parse witness records. Each `λ` line belongs to the preceding `w` line.
/// Blank lines and `c` comment lines are ignored.
pub fn read_witness(text: &str) -> Result<Vec<(Vec<i64>, RationalCertificate)>> {
    let mut out: Vec<(Vec<i64>, RationalCertificate)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |msg: &str| Error::Parse { line, msg: msg.to_string() };
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("w") => {
                let nums: Vec<i64> = toks
                    .map(|t| t.parse::<i64>().map_err(|_| err(&format!("bad integer `{t}`"))))
                    .collect::<Result<_>>()?;
                let Some((&level, coords)) = nums.split_first() else {
                    return Err(err("missing level"));
                };
                let mut point = coords.to_vec();
                point.push(level);
                out.push((point, RationalCertificate { terms: Vec::new() }));
            }
            Some("λ") => {
                let Some(last) = out.last_mut() else {
                    return Err(err("coefficient line before any witness"));
                };
                let idx: usize = toks
                    .next()
                    .and_then(|t| t.parse().ok())
                    .filter(|&i: &usize| i >= 1)
                    .ok_or_else(|| err("bad point index"))?;
                let coef = toks.next().ok_or_else(|| err("missing coefficient"))?;
                let (num, den) = coef.split_once('/').unwrap_or((coef, "1"));
                let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
                let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
                if den.is_zero() {
                    return Err(err("zero denominator"));
                }
                if toks.next().is_some() {
                    return Err(err("trailing tokens"));
                }
                last.1.terms.push((idx - 1, BigRational::new(num, den)));
            }
            Some(other) => return Err(err(&format!("unknown line type `{other}`"))),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::polytope::{cone_membership, semigroup_membership};

    fn antihole_pair(m1: usize, m2: usize) -> SimpleGraph {
        let a = SimpleGraph::cycle(m1).unwrap().complement();
        let b = SimpleGraph::cycle(m2).unwrap().complement();
        a.disjoint_union(&b).unwrap().complement()
    }

    #[test]
    fn kind_i_on_two_c5_antiholes() {
        let g = antihole_pair(5, 5);
        let c1: Vec<usize> = (0..5).collect();
        let c2: Vec<usize> = (5..10).collect();
        let (t, cert) = proof_witness(WitnessKind::TwoAntiholes, &g, &c1, &c2).unwrap();
        assert_eq!(t, [vec![1; 10], vec![5]].concat());
        let q = stable_set_polytope(&g);
        assert!(cert.verify(&q, &t));
        // Coefficients 1/2 on ten pairs, 0 on the empty set when k = l = 2.
        assert_eq!(cert.terms.len(), 10);
        assert!(cert.terms.iter().all(|(_, c)| *c == frac(1, 2)));
        assert!(semigroup_membership(&t, &q).unwrap().is_none());
    }

    #[test]
    fn kind_iii_level_is_k_plus_three() {
        let g = Family::HoleAntihole(5, 7).build().unwrap();
        let c1: Vec<usize> = (0..5).collect();
        let c2: Vec<usize> = (5..12).collect();
        let (t, cert) = proof_witness(WitnessKind::HoleAntihole, &g, &c1, &c2).unwrap();
        assert_eq!(t[12], 5);
        let q = stable_set_polytope(&g);
        assert!(cone_membership(&t, &q).unwrap().member);
        assert!(cert.verify(&q, &t));
        assert!(cert.terms.contains(&(0, frac(1, 6))));
        assert!(semigroup_membership(&t, &q).unwrap().is_none());
    }

    #[test]
    fn kind_ii_rejects_short_antiholes() {
        let g = antihole_pair(5, 5);
        let c1: Vec<usize> = (0..5).collect();
        let c2: Vec<usize> = (5..10).collect();
        assert!(matches!(
            proof_witness(WitnessKind::SharedVertexAntiholes, &g, &c1, &c2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn bridges_and_wrong_structure_are_rejected() {
        let mut gc = antihole_pair(5, 5).complement();
        gc.add_edge(0, 5).unwrap();
        let g = gc.complement();
        let c1: Vec<usize> = (0..5).collect();
        let c2: Vec<usize> = (5..10).collect();
        assert!(proof_witness(WitnessKind::TwoAntiholes, &g, &c1, &c2).is_err());
        // Holes passed where antiholes are expected.
        let c5 = SimpleGraph::cycle(5).unwrap();
        let two_holes = c5.disjoint_union(&c5).unwrap().complement();
        // The complement of C5 is again a 5-cycle, under a different order.
        assert!(proof_witness(WitnessKind::TwoAntiholes, &two_holes, &c1, &c2).is_err());
    }

    #[test]
    fn odd_holes_witness_matches_cone_certificate() {
        let c5 = SimpleGraph::cycle(5).unwrap();
        let g = c5.disjoint_union(&c5).unwrap().complement();
        let c1: Vec<usize> = (0..5).collect();
        let c2: Vec<usize> = (5..10).collect();
        let (t, cert) = odd_holes_witness(&g, &c1, &c2).unwrap();
        assert_eq!(t, [vec![1; 10], vec![5]].concat());
        assert!(cert.verify(&stable_set_polytope(&g), &t));
    }

    #[test]
    fn witness_text_round_trip() {
        let t = vec![1, 0, 2, 5];
        let cert = RationalCertificate { terms: vec![(0, frac(1, 2)), (3, frac(3, 1))] };
        let text = write_witness(&t, Some(&cert));
        assert_eq!(text, "w 5 1 0 2\nλ 1 1/2\nλ 4 3/1\n");
        assert_eq!(read_witness(&text).unwrap(), vec![(t, cert)]);
        assert!(matches!(read_witness("λ 1 1/2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(read_witness("w 2 1\nλ 0 1\n"), Err(Error::Parse { line: 2, .. })));
    }
}
