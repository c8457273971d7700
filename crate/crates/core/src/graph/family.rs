//! Named graph families used throughout the tests and the CLI.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{bit, SimpleGraph};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    Complete(usize),
    Empty(usize),
    Cycle(usize),
    Path(usize),
    /// `G` with complement `C_m`.
    ComplementOfCycle(usize),
    /// `G` with complement `C_{2k+1} ⊔ C_{2l+1}`.
    TwoOddHoles(usize, usize),
    KnMinusEdge(usize),
    /// `G` with complement `C_{m1} ⊔ complement(C_{m2})`.
    HoleAntihole(usize, usize),
    /// `G` whose complement is two antiholes of lengths `m1`, `m2`, either
    /// disjoint or sharing exactly one vertex, with no other edges.
    TwoAntiholes { m1: usize, m2: usize, shared: bool },
    /// Complement of a seeded random triangle-free graph with at least one
    /// edge, so the stability number is exactly two.
    RandomAlpha2 { n: usize, p: f64, seed: u64 },
}

fn antihole(m: usize) -> Result<SimpleGraph> {
    Ok(SimpleGraph::cycle(m)?.complement())
}

impl Family {
    pub fn build(&self) -> Result<SimpleGraph> {
        match *self {
            Family::Complete(n) => SimpleGraph::complete(n),
            Family::Empty(n) => SimpleGraph::empty(n),
            Family::Cycle(m) => SimpleGraph::cycle(m),
            Family::Path(m) => SimpleGraph::path(m),
            Family::ComplementOfCycle(m) => Ok(SimpleGraph::cycle(m)?.complement()),
            Family::TwoOddHoles(k, l) => {
                if k < 1 || l < 1 {
                    return Err(Error::InvalidFamily(format!(
                        "two_odd_holes needs k, l >= 1 (got {k}, {l})"
                    )));
                }
                let gbar = SimpleGraph::cycle(2 * k + 1)?.disjoint_union(&SimpleGraph::cycle(2 * l + 1)?)?;
                Ok(gbar.complement())
            }
            Family::KnMinusEdge(n) => {
                if n < 2 {
                    return Err(Error::InvalidFamily(format!("kn_minus_edge needs n >= 2 (got {n})")));
                }
                let mut g = SimpleGraph::complete(n)?;
                g.remove_edge(0, 1);
                Ok(g)
            }
            Family::HoleAntihole(m1, m2) => {
                if m1 < 3 || m2 < 5 {
                    return Err(Error::InvalidFamily(format!(
                        "hole_antihole needs m1 >= 3 and m2 >= 5 (got {m1}, {m2})"
                    )));
                }
                Ok(SimpleGraph::cycle(m1)?.disjoint_union(&antihole(m2)?)?.complement())
            }
            Family::TwoAntiholes { m1, m2, shared } => {
                if m1 < 5 || m2 < 5 {
                    return Err(Error::InvalidFamily(format!(
                        "two_antiholes needs lengths >= 5 (got {m1}, {m2})"
                    )));
                }
                let (a, b) = (antihole(m1)?, antihole(m2)?);
                let gbar = if shared {
                    let mut ident = vec![None; m2];
                    ident[0] = Some(0);
                    a.clique_sum(&b, &ident)?
                } else {
                    a.disjoint_union(&b)?
                };
                Ok(gbar.complement())
            }
            Family::RandomAlpha2 { n, p, seed } => {
                if n < 2 || !(0.0..=1.0).contains(&p) {
                    return Err(Error::InvalidFamily(format!(
                        "random_alpha2 needs n >= 2 and 0 <= p <= 1 (got {n}, {p})"
                    )));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut gbar = SimpleGraph::empty(n)?;
                for i in 0..n {
                    for j in i + 1..n {
                        if rng.gen_bool(p) && gbar.neighbors(i) & gbar.neighbors(j) == 0 {
                            gbar.add_edge(i, j)?;
                        }
                    }
                }
                if gbar.is_empty_graph() {
                    gbar.add_edge(0, 1)?;
                }
                debug_assert!((0..n).all(|v| gbar.neighbors(v) & bit(v) == 0));
                Ok(gbar.complement())
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Empty(n) => write!(f, "empty:{n}"),
            Family::Cycle(m) => write!(f, "cycle:{m}"),
            Family::Path(m) => write!(f, "path:{m}"),
            Family::ComplementOfCycle(m) => write!(f, "complement_of_cycle:{m}"),
            Family::TwoOddHoles(k, l) => write!(f, "two_odd_holes:{k},{l}"),
            Family::KnMinusEdge(n) => write!(f, "kn_minus_edge:{n}"),
            Family::HoleAntihole(a, b) => write!(f, "hole_antihole:{a},{b}"),
            Family::TwoAntiholes { m1, m2, shared } => {
                write!(f, "two_antiholes:{m1},{m2},{}", u8::from(*shared))
            }
            Family::RandomAlpha2 { n, p, seed } => write!(f, "random_alpha2:{n},{p},{seed}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `name:p1,p2,...` (also accepts `name(p1,p2,...)`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, rest) = match s.find([':', '(']) {
            Some(k) => (&s[..k], s[k + 1..].trim_end_matches(')')),
            None => (s, ""),
        };
        let params: Vec<&str> =
            rest.split(',').map(str::trim).filter(|p| !p.is_empty()).collect();
        let bad = |msg: &str| Error::InvalidFamily(format!("{name}: {msg}"));
        let int = |k: usize| -> Result<usize> {
            params
                .get(k)
                .ok_or_else(|| bad(&format!("missing parameter {}", k + 1)))?
                .parse()
                .map_err(|_| bad(&format!("parameter {} is not an integer", k + 1)))
        };
        let arity = |want: usize| -> Result<()> {
            if params.len() == want {
                Ok(())
            } else {
                Err(bad(&format!("expected {want} parameters, got {}", params.len())))
            }
        };
        let family = match name {
            "complete" => {
                arity(1)?;
                Family::Complete(int(0)?)
            }
            "empty" => {
                arity(1)?;
                Family::Empty(int(0)?)
            }
            "cycle" => {
                arity(1)?;
                Family::Cycle(int(0)?)
            }
            "path" => {
                arity(1)?;
                Family::Path(int(0)?)
            }
            "complement_of_cycle" => {
                arity(1)?;
                Family::ComplementOfCycle(int(0)?)
            }
            "two_odd_holes" => {
                arity(2)?;
                Family::TwoOddHoles(int(0)?, int(1)?)
            }
            "kn_minus_edge" => {
                arity(1)?;
                Family::KnMinusEdge(int(0)?)
            }
            "hole_antihole" => {
                arity(2)?;
                Family::HoleAntihole(int(0)?, int(1)?)
            }
            "two_antiholes" => {
                arity(3)?;
                let shared = match params[2] {
                    "1" | "true" | "shared" => true,
                    "0" | "false" | "disjoint" => false,
                    _ => return Err(bad("third parameter must be 0/1")),
                };
                Family::TwoAntiholes { m1: int(0)?, m2: int(1)?, shared }
            }
            "random_alpha2" => {
                arity(3)?;
                let p = params[1].parse().map_err(|_| bad("edge probability is not a number"))?;
                let seed = params[2].parse().map_err(|_| bad("seed is not an integer"))?;
                Family::RandomAlpha2 { n: int(0)?, p, seed }
            }
            _ => return Err(Error::InvalidFamily(format!("unknown family '{name}'"))),
        };
        Ok(family)
    }
}
