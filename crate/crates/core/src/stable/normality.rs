//! Normality of `Q_G`: the odd cycle criterion for stability number two,
//! the necessary conditions for normality and for quadratic generation, the
//! certificate that no quadratic Gröbner basis exists, and the clique-sum
//! consistency check.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::cycles::{count_bridges_masks, has_bridge_masks};
use crate::graph::{induced_cycles, is_perfect, odd_cycle_condition, Cycle, Parity, SimpleGraph};
use crate::polytope::{
    idp_check, odd_holes_witness, proof_witness, stable_set_polytope, IdpVerdict, RationalCertificate,
    WitnessKind,
};

use super::generators::require_alpha2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Alpha2Normality {
    Normal,
    /// Two disjoint induced odd cycles of the complement with no bridge.
    Nonnormal(Cycle, Cycle),
}

impl Alpha2Normality {
    pub fn is_normal(&self) -> bool {
        matches!(self, Alpha2Normality::Normal)
    }
}

/// Exact verdict for stability number two: normal iff the complement
/// satisfies the odd cycle condition.
pub fn normality_verdict_alpha2(g: &SimpleGraph) -> Result<Alpha2Normality> {
    require_alpha2(g)?;
    let occ = odd_cycle_condition(&g.complement());
    Ok(match occ.violation {
        None => Alpha2Normality::Normal,
        Some((a, b)) => Alpha2Normality::Nonnormal(a, b),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// Disjoint odd holes of the complement without a bridge.
    DisjointOddHoles,
    /// Disjoint odd antiholes of the complement without a bridge.
    DisjointOddAntiholes,
    /// Odd antiholes of length at least 7 sharing one vertex, no bridge.
    SharedVertexAntiholes,
    /// A disjoint odd hole and odd antihole without a bridge.
    HoleAntihole,
    /// A chordless even cycle of length at least 6 in the complement.
    ChordlessEvenCycle,
    /// Odd holes sharing exactly one vertex, no bridge.
    SharedVertexOddHoles,
    /// Disjoint odd holes with fewer than two bridges.
    FewBridgeOddHoles,
}

impl ViolationKind {
    pub fn name(self) -> &'static str {
        match self {
            ViolationKind::DisjointOddHoles => "disjoint-odd-holes",
            ViolationKind::DisjointOddAntiholes => "disjoint-odd-antiholes",
            ViolationKind::SharedVertexAntiholes => "shared-vertex-antiholes",
            ViolationKind::HoleAntihole => "hole-antihole",
            ViolationKind::ChordlessEvenCycle => "chordless-even-cycle",
            ViolationKind::SharedVertexOddHoles => "shared-vertex-odd-holes",
            ViolationKind::FewBridgeOddHoles => "few-bridge-odd-holes",
        }
    }
}

/// One failed condition. Holes are cycles of the complement; antiholes are
/// listed as chordless cycles of `G` itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub cycles: Vec<Cycle>,
    pub bridges: usize,
}

/// Odd holes of the complement and its odd antiholes of length at least 7.
/// An antihole of length 5 is a hole on the same vertices, so it is counted
/// once, as a hole.
fn holes_and_antiholes(g: &SimpleGraph) -> (SimpleGraph, Vec<Cycle>, Vec<Cycle>) {
    let gc = g.complement();
    let holes = induced_cycles(&gc, 5, Parity::Odd).expect("min_len 5");
    let antiholes = induced_cycles(g, 7, Parity::Odd).expect("min_len 7");
    (gc, holes, antiholes)
}

fn pairs<'a>(xs: &'a [Cycle]) -> impl Iterator<Item = (&'a Cycle, &'a Cycle)> {
    xs.iter().enumerate().flat_map(move |(a, x)| xs[a + 1..].iter().map(move |y| (x, y)))
}

/// Pairs in the complement whose presence forces `Q_G` to be nonnormal.
pub fn normality_necessary_audit(g: &SimpleGraph) -> Vec<Violation> {
    let (gc, holes, antiholes) = holes_and_antiholes(g);
    let mut out = Vec::new();
    let mut push = |kind, c1: &Cycle, c2: &Cycle| {
        out.push(Violation { kind, cycles: vec![c1.clone(), c2.clone()], bridges: 0 })
    };
    for (a, b) in pairs(&holes) {
        if a.mask() & b.mask() == 0 && !has_bridge_masks(&gc, a.mask(), b.mask()) {
            push(ViolationKind::DisjointOddHoles, a, b);
        }
    }
    for (a, b) in pairs(&antiholes) {
        let common = a.mask() & b.mask();
        if has_bridge_masks(&gc, a.mask(), b.mask()) {
            continue;
        }
        if common == 0 {
            push(ViolationKind::DisjointOddAntiholes, a, b);
        } else if common.count_ones() == 1 {
            push(ViolationKind::SharedVertexAntiholes, a, b);
        }
    }
    for h in &holes {
        for a in &antiholes {
            if h.mask() & a.mask() == 0 && !has_bridge_masks(&gc, h.mask(), a.mask()) {
                push(ViolationKind::HoleAntihole, h, a);
            }
        }
    }
    out
}

/// Structures in the complement whose presence forces the toric ideal of
/// `Q_G` to need generators of degree three or more.
pub fn quadratic_necessary_audit(g: &SimpleGraph) -> Vec<Violation> {
    let gc = g.complement();
    let mut out: Vec<Violation> = induced_cycles(&gc, 6, Parity::Even)
        .expect("min_len 6")
        .into_iter()
        .map(|c| Violation { kind: ViolationKind::ChordlessEvenCycle, cycles: vec![c], bridges: 0 })
        .collect();
    let holes = induced_cycles(&gc, 5, Parity::Odd).expect("min_len 5");
    for (a, b) in pairs(&holes) {
        let common = (a.mask() & b.mask()).count_ones();
        let bridges = count_bridges_masks(&gc, a.mask(), b.mask());
        let kind = match (common, bridges) {
            (0, 0 | 1) => ViolationKind::FewBridgeOddHoles,
            (1, 0) => ViolationKind::SharedVertexOddHoles,
            _ => continue,
        };
        out.push(Violation { kind, cycles: vec![a.clone(), b.clone()], bridges });
    }
    out
}

/// Rotate a cycle so that `v` comes first, keeping its direction.
fn rotate_to(c: &Cycle, v: usize) -> Vec<usize> {
    let k = c.vertices().iter().position(|&x| x == v).expect("vertex on cycle");
    let mut out = c.vertices()[k..].to_vec();
    out.extend_from_slice(&c.vertices()[..k]);
    out
}

/// The nonnormality witness and its decomposition attached to a violation
/// of [`normality_necessary_audit`].
pub fn audit_witness(g: &SimpleGraph, v: &Violation) -> Result<(Vec<i64>, RationalCertificate)> {
    let (a, b) = (&v.cycles[0], &v.cycles[1]);
    match v.kind {
        ViolationKind::DisjointOddHoles => odd_holes_witness(g, a.vertices(), b.vertices()),
        ViolationKind::DisjointOddAntiholes => {
            proof_witness(WitnessKind::TwoAntiholes, g, a.vertices(), b.vertices())
        }
        ViolationKind::SharedVertexAntiholes => {
            let s = (a.mask() & b.mask()).trailing_zeros() as usize;
            proof_witness(WitnessKind::SharedVertexAntiholes, g, &rotate_to(a, s), &rotate_to(b, s))
        }
        ViolationKind::HoleAntihole => proof_witness(WitnessKind::HoleAntihole, g, a.vertices(), b.vertices()),
        _ => Err(crate::Error::Precondition(format!("{} is not a normality violation", v.kind.name()))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoQuadraticGb {
    /// `Q_G` is nonnormal, so (being 0/1) no order gives a quadratic
    /// Gröbner basis.
    Certified { witness: Vec<i64>, route: &'static str },
    NotApplicable { reason: String },
}

impl NoQuadraticGb {
    pub fn is_certified(&self) -> bool {
        matches!(self, NoQuadraticGb::Certified { .. })
    }
}

/// A nonnormality witness for `Q_G` with the route that produced it: the
/// odd cycle criterion when `α = 2`, an audit violation, or the bounded
/// decomposition test up to `dmax`. `Ok(None)` when `Q_G` is normal by a
/// criterion or no witness exists up to `dmax`, with the reason.
pub fn nonnormality_witness(g: &SimpleGraph, dmax: usize) -> Result<std::result::Result<(Vec<i64>, &'static str), String>> {
    if g.stability_number() == 2 {
        return Ok(match normality_verdict_alpha2(g)? {
            Alpha2Normality::Normal => Err("normal: the complement satisfies the odd cycle condition".into()),
            Alpha2Normality::Nonnormal(a, b) => {
                Ok((odd_holes_witness(g, a.vertices(), b.vertices())?.0, "odd-cycle-condition"))
            }
        });
    }
    if is_perfect(g).perfect {
        return Ok(Err("normal: the graph is perfect".into()));
    }
    if let Some(v) = normality_necessary_audit(g).first() {
        return Ok(Ok((audit_witness(g, v)?.0, "audit")));
    }
    Ok(match idp_check(&stable_set_polytope(g), dmax)? {
        IdpVerdict::Nonnormal { witness, .. } => Ok((witness, "idp")),
        IdpVerdict::NormalUpTo(d) => Err(format!("no nonnormality witness up to degree {d}")),
    })
}

/// Certifies that no monomial order gives a quadratic Gröbner basis by
/// exhibiting a nonnormality witness of the 0/1 polytope `Q_G`.
pub fn no_quadratic_gb_certificate(g: &SimpleGraph, dmax: usize) -> Result<NoQuadraticGb> {
    Ok(match nonnormality_witness(g, dmax)? {
        Ok((witness, route)) => NoQuadraticGb::Certified { witness, route },
        Err(reason) => NoQuadraticGb::NotApplicable { reason },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueSumCheck {
    pub sum: SimpleGraph,
    pub parts: [IdpVerdict; 2],
    pub glued: IdpVerdict,
    /// `glued` has a witness iff one of the parts has one.
    pub consistent: bool,
}

/// Bounded normality of `g1`, `g2` and their clique sum, and whether "the
/// sum is normal iff both parts are" held up to `dmax`.
pub fn clique_sum_normality_check(
    g1: &SimpleGraph,
    g2: &SimpleGraph,
    identification: &[Option<usize>],
    dmax: usize,
) -> Result<CliqueSumCheck> {
    let sum = g1.clique_sum(g2, identification)?;
    let v1 = idp_check(&stable_set_polytope(g1), dmax)?;
    let v2 = idp_check(&stable_set_polytope(g2), dmax)?;
    let glued = idp_check(&stable_set_polytope(&sum), dmax)?;
    let consistent = glued.is_normal_up_to() == (v1.is_normal_up_to() && v2.is_normal_up_to());
    Ok(CliqueSumCheck { sum, parts: [v1, v2], glued, consistent })
}
