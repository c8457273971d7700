//! Verification suites: each runs one theorem-versus-oracle comparison over
//! a family of instances and records a verdict per instance.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::search::random_grevlex_orders;
use crate::algebra::{ideal_equal, minimal_generators, toric_groebner_basis, toric_ideal, MonomialOrder};
use crate::error::{Error, Result};
use crate::graph::iso::{graph_classes, labeled_graphs, triangle_free_classes};
use crate::graph::{is_bipartite, is_perfect, Family, LoopGraph, SimpleGraph};
use crate::polytope::{
    cone_membership, edge_polytope, idp_check, is_unimodular, semigroup_membership, stable_set_polytope, WitnessKind,
};
use crate::stable::{
    alpha2_generators, audit_witness, clique_sum_normality_check, edge_toric_generators, keylemma_check,
    mu_bipartite_complement, normality_necessary_audit, normality_verdict_alpha2, ViolationKind,
};

pub const SUITES: [&str; 9] =
    ["unimodularity", "mu", "generators", "normality", "keylemma", "witnesses", "cliquesum", "walks", "compressed"];

/// Scale parameters, given as `key=value` pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteParams {
    /// Vertex bound (exact count for `unimodularity`).
    pub n: Option<usize>,
    pub cycles: Vec<usize>,
    pub kind: Option<WitnessKind>,
    pub lengths: Vec<usize>,
    pub dmax: Option<usize>,
    pub count: Option<usize>,
    pub samples: Option<usize>,
    pub seed: u64,
    /// Every labeled graph instead of one per isomorphism class.
    pub labeled: Option<bool>,
}

impl Default for SuiteParams {
    fn default() -> Self {
        Self {
            n: None,
            cycles: Vec::new(),
            kind: None,
            lengths: Vec::new(),
            dmax: None,
            count: None,
            samples: None,
            seed: 0,
            labeled: None,
        }
    }
}

fn list(v: &str) -> Result<Vec<usize>> {
    v.split(',')
        .map(|x| x.trim().parse().map_err(|_| Error::Parse { line: 0, msg: format!("bad number {x:?}") }))
        .collect()
}

impl SuiteParams {
    pub fn parse<S: AsRef<str>>(args: &[S]) -> Result<Self> {
        let mut p = Self::default();
        for a in args {
            let a = a.as_ref();
            let (k, v) = a
                .split_once('=')
                .ok_or_else(|| Error::Parse { line: 0, msg: format!("expected key=value, got {a:?}") })?;
            let one = |v: &str| -> Result<usize> {
                v.parse().map_err(|_| Error::Parse { line: 0, msg: format!("bad value for {k}: {v:?}") })
            };
            match k {
                "n" => p.n = Some(one(v)?),
                "cycles" => p.cycles = list(v)?,
                "lengths" => p.lengths = list(v)?,
                "kind" => p.kind = Some(v.parse()?),
                "dmax" => p.dmax = Some(one(v)?),
                "count" => p.count = Some(one(v)?),
                "samples" => p.samples = Some(one(v)?),
                "seed" => p.seed = one(v)? as u64,
                "labeled" => {
                    p.labeled = Some(v.parse().map_err(|_| Error::Parse { line: 0, msg: format!("bad bool {v:?}") })?)
                }
                _ => return Err(Error::Parse { line: 0, msg: format!("unknown parameter {k:?}") }),
            }
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceResult {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

impl InstanceResult {
    fn new(label: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self { label: label.into(), pass, detail: detail.into() }
    }
}

impl fmt::Display for InstanceResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: {}", if self.pass { "PASS" } else { "FAIL" }, self.label, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub instances: Vec<InstanceResult>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        !self.instances.is_empty() && self.instances.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &InstanceResult> {
        self.instances.iter().filter(|r| !r.pass)
    }

    pub fn summary(&self) -> String {
        let bad = self.failures().count();
        format!(
            "{} {}: {} instances, {} failed",
            if self.passed() { "PASS" } else { "FAIL" },
            self.suite,
            self.instances.len(),
            bad
        )
    }
}

fn run_all<T, F>(items: &[T], f: F) -> Vec<InstanceResult>
where
    T: Sync,
    F: Fn(&T) -> Result<InstanceResult> + Sync + Send,
{
    let wrap = |t: &T, k: usize| f(t).unwrap_or_else(|e| InstanceResult::new(format!("#{}", k + 1), false, e.to_string()));
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().enumerate().map(|(k, t)| wrap(t, k)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().enumerate().map(|(k, t)| wrap(t, k)).collect()
    }
}

fn show(g: &SimpleGraph) -> String {
    let e: Vec<String> = g.edges().iter().map(|(i, j)| format!("{}-{}", i + 1, j + 1)).collect();
    format!("n={} [{}]", g.n(), e.join(" "))
}

/// Graphs on exactly `n` vertices, labeled or one per class.
fn graphs_on(n: usize, labeled: bool) -> Vec<SimpleGraph> {
    if labeled {
        labeled_graphs(n).collect()
    } else {
        graph_classes(n)
    }
}

/// Graphs of stability number two on `2..=n` vertices, given through their
/// triangle-free complements with at least one edge.
pub fn alpha2_graphs(n: usize, labeled: bool) -> Vec<SimpleGraph> {
    let mut out = Vec::new();
    for k in 2..=n {
        let comps: Vec<SimpleGraph> = if labeled {
            labeled_graphs(k).filter(|h| triangle_free(h)).collect()
        } else {
            triangle_free_classes(k)
        };
        out.extend(comps.into_iter().filter(|h| h.edge_count() > 0).map(|h| h.complement()));
    }
    out
}

fn triangle_free(h: &SimpleGraph) -> bool {
    h.edges().iter().all(|&(i, j)| h.neighbors(i) & h.neighbors(j) == 0)
}

fn grevlex_mu(gens: &[crate::Binomial], nvars: usize) -> Result<u32> {
    Ok(minimal_generators(gens, &MonomialOrder::grevlex(nvars))?.1)
}

pub fn run_suite(name: &str, p: &SuiteParams) -> Result<SuiteOutcome> {
    let instances = match name {
        "unimodularity" => unimodularity(p),
        "mu" => mu_suite(p)?,
        "generators" => generators(p),
        "normality" => normality(p),
        "keylemma" => keylemma(p)?,
        "witnesses" => witnesses(p)?,
        "cliquesum" => cliquesum(p)?,
        "walks" => walks(p),
        "compressed" => compressed(p),
        _ => return Err(Error::Precondition(format!("unknown suite {name:?}; expected one of {}", SUITES.join(", ")))),
    };
    Ok(SuiteOutcome { suite: name.into(), instances })
}

/// `Q_G` unimodular iff the complement is bipartite.
fn unimodularity(p: &SuiteParams) -> Vec<InstanceResult> {
    let graphs = graphs_on(p.n.unwrap_or(5), p.labeled.unwrap_or(true));
    run_all(&graphs, |g| {
        let bip = is_bipartite(&g.complement()).bipartite;
        let u = is_unimodular(&stable_set_polytope(g))?;
        let v = u.verdict().ok_or_else(|| Error::ResourceCap("too many minors".into()))?;
        Ok(InstanceResult::new(show(g), v == bip, format!("unimodular={v} complement_bipartite={bip}")))
    })
}

/// `μ` of the elimination ideal against the formula for bipartite
/// complements: cycles, trees and the complete graph.
fn mu_suite(p: &SuiteParams) -> Result<Vec<InstanceResult>> {
    let cycles = if p.cycles.is_empty() { vec![4, 6, 8] } else { p.cycles.clone() };
    let mut cases: Vec<(String, SimpleGraph, u32)> = Vec::new();
    for &m in &cycles {
        if m % 2 == 1 {
            return Err(Error::Precondition(format!("cycle length {m} is odd; the complement must be bipartite")));
        }
        cases.push((format!("complement C{m}"), SimpleGraph::cycle(m)?.complement(), (m / 2) as u32));
    }
    let trees = [
        ("complement P2", SimpleGraph::path(2)?),
        ("complement P4", SimpleGraph::path(4)?),
        ("complement P6", SimpleGraph::path(6)?),
        ("complement K1,3", SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)])?),
        ("complement spider", SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)])?),
    ];
    for (l, t) in trees {
        cases.push((l.into(), t.complement(), 2));
    }
    cases.push(("complete K5".into(), SimpleGraph::complete(5)?, 0));
    Ok(run_all(&cases, |(label, g, expect)| {
        let q = stable_set_polytope(g);
        let m = grevlex_mu(&toric_ideal(&q)?, q.len())?;
        let formula = mu_bipartite_complement(g)?;
        Ok(InstanceResult::new(label.clone(), m == *expect && formula == m, format!("mu={m} formula={formula} expected={expect}")))
    }))
}

/// The walk and path generators produce the elimination ideal, and `μ`
/// matches `max(μ of the complement's edge ideal, 2)`.
fn generators(p: &SuiteParams) -> Vec<InstanceResult> {
    let graphs = alpha2_graphs(p.n.unwrap_or(6), p.labeled.unwrap_or(true));
    run_all(&graphs, |g| {
        let gc = g.complement();
        let q = stable_set_polytope(g);
        let ideal = toric_ideal(&q)?;
        let gens = alpha2_generators(g, 2 * gc.edge_count())?;
        let equal = ideal_equal(&gens, &ideal, &MonomialOrder::grevlex(q.len()))?;
        let mu_q = grevlex_mu(&ideal, q.len())?;
        let pe = edge_polytope(&LoopGraph::from_simple(&gc));
        let mu_e = grevlex_mu(&toric_ideal(&pe)?, pe.len())?;
        let pass = equal && mu_q == mu_e.max(2);
        Ok(InstanceResult::new(show(g), pass, format!("ideal_equal={equal} mu={mu_q} mu_edge={mu_e}")))
    })
}

/// The odd cycle verdict against the bounded decomposition oracle.
fn normality(p: &SuiteParams) -> Vec<InstanceResult> {
    let dmax = p.dmax.unwrap_or(8);
    let graphs = alpha2_graphs(p.n.unwrap_or(7), p.labeled.unwrap_or(false));
    run_all(&graphs, |g| {
        let theorem = normality_verdict_alpha2(g)?.is_normal();
        let oracle = idp_check(&stable_set_polytope(g), dmax)?;
        let detail = match oracle.witness() {
            None => format!("theorem normal={theorem}, no witness up to {dmax}"),
            Some(w) => format!("theorem normal={theorem}, witness {w:?}"),
        };
        Ok(InstanceResult::new(show(g), theorem == oracle.is_normal_up_to(), detail))
    })
}

/// The star graph isomorphism on all stability-two graphs up to `n`
/// vertices and on complements of the listed cycles.
fn keylemma(p: &SuiteParams) -> Result<Vec<InstanceResult>> {
    let mut graphs = alpha2_graphs(p.n.unwrap_or(5), p.labeled.unwrap_or(true));
    let cycles = if p.cycles.is_empty() { vec![4, 5, 6] } else { p.cycles.clone() };
    for m in cycles {
        graphs.push(SimpleGraph::cycle(m)?.complement());
    }
    Ok(run_all(&graphs, |g| {
        let ok = keylemma_check(g)?;
        Ok(InstanceResult::new(show(g), ok, format!("isomorphic={ok}")))
    }))
}

/// Explicit witnesses: in the rational cone with the stated coefficients
/// and not a sum of lattice points.
fn witnesses(p: &SuiteParams) -> Result<Vec<InstanceResult>> {
    let kinds = match p.kind {
        Some(k) => vec![k],
        None => vec![WitnessKind::TwoAntiholes, WitnessKind::SharedVertexAntiholes, WitnessKind::HoleAntihole],
    };
    let mut cases = Vec::new();
    for kind in kinds {
        let (family, want) = match kind {
            WitnessKind::TwoAntiholes => {
                let (a, b) = lengths(&p.lengths, (7, 7))?;
                (Family::TwoAntiholes { m1: a, m2: b, shared: false }, ViolationKind::DisjointOddAntiholes)
            }
            WitnessKind::SharedVertexAntiholes => {
                let (a, b) = lengths(&p.lengths, (7, 7))?;
                (Family::TwoAntiholes { m1: a, m2: b, shared: true }, ViolationKind::SharedVertexAntiholes)
            }
            WitnessKind::HoleAntihole => {
                let (a, b) = lengths(&p.lengths, (5, 7))?;
                (Family::HoleAntihole(a, b), ViolationKind::HoleAntihole)
            }
        };
        cases.push((kind, family.build()?, want));
    }
    Ok(run_all(&cases, |(kind, g, want)| {
        let label = format!("kind {kind} {}", show(g));
        let Some(v) = normality_necessary_audit(g).into_iter().find(|v| v.kind == *want) else {
            return Ok(InstanceResult::new(label, false, "no violation of the expected kind"));
        };
        let q = stable_set_polytope(g);
        let (w, cert) = audit_witness(g, &v)?;
        let exact = cert.verify(&q, &w);
        let cone = cone_membership(&w, &q)?.member;
        let semigroup = semigroup_membership(&w, &q)?.is_some();
        Ok(InstanceResult::new(
            label,
            exact && cone && !semigroup,
            format!("witness {w:?} certificate={exact} cone={cone} semigroup={semigroup}"),
        ))
    }))
}

fn lengths(v: &[usize], default: (usize, usize)) -> Result<(usize, usize)> {
    match v {
        [] => Ok(default),
        [a, b] => Ok((*a, *b)),
        _ => Err(Error::Precondition("lengths takes two values".into())),
    }
}

/// Random clique sums of stability-two graphs on at most five vertices.
fn cliquesum(p: &SuiteParams) -> Result<Vec<InstanceResult>> {
    let count = p.count.unwrap_or(20);
    let dmax = p.dmax.unwrap_or(4);
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut cases = Vec::new();
    for _ in 0..count {
        let mut part = || -> Result<SimpleGraph> {
            let n = rng.gen_range(3..=p.n.unwrap_or(5).max(3));
            Family::RandomAlpha2 { n, p: 0.5, seed: rng.gen() }.build()
        };
        let (g1, g2) = (part()?, part()?);
        let mut ident = vec![None; g2.n()];
        let e1 = g1.edges();
        let e2 = g2.edges();
        if rng.gen_bool(0.5) && !e1.is_empty() && !e2.is_empty() {
            let (a, b) = e1[rng.gen_range(0..e1.len())];
            let (c, d) = e2[rng.gen_range(0..e2.len())];
            ident[c] = Some(a);
            ident[d] = Some(b);
        } else {
            ident[rng.gen_range(0..g2.n())] = Some(rng.gen_range(0..g1.n()));
        }
        cases.push((g1, g2, ident));
    }
    Ok(run_all(&cases, |(g1, g2, ident)| {
        let r = clique_sum_normality_check(g1, g2, ident, dmax)?;
        let glued = ident.iter().filter(|x| x.is_some()).count();
        let verdict = |v: &crate::polytope::IdpVerdict| if v.is_normal_up_to() { "normal" } else { "nonnormal" };
        Ok(InstanceResult::new(
            format!("{} + {} on {glued}", show(g1), show(g2)),
            r.consistent,
            format!(
                "parts {}/{} sum {} up to {dmax}",
                verdict(&r.parts[0]),
                verdict(&r.parts[1]),
                verdict(&r.glued)
            ),
        ))
    }))
}

/// Connected looped graphs with at most one loop: zero edge ideal iff at
/// most one cycle and that one odd (a loop counts as an odd cycle). On
/// graphs with at most seven edges the walk binomials also generate.
fn walks(p: &SuiteParams) -> Vec<InstanceResult> {
    let n_max = p.n.unwrap_or(6);
    let labeled = p.labeled.unwrap_or(false);
    let mut cases = Vec::new();
    for n in 1..=n_max {
        for g in graphs_on(n, labeled).into_iter().filter(SimpleGraph::is_connected) {
            let base = LoopGraph::from_simple(&g);
            cases.push(base.clone());
            for v in 0..n {
                let mut h = base.clone();
                h.add_loop(v).expect("vertex in range");
                cases.push(h);
            }
        }
    }
    run_all(&cases, |h| {
        let m = h.edges().len();
        let cyclomatic = m + 1 - h.n();
        let odd_only = match cyclomatic {
            0 => true,
            1 => h.loop_mask() != 0 || !is_bipartite(&h.underlying()).bipartite,
            _ => false,
        };
        let ideal = toric_ideal(&edge_polytope(h))?;
        let zero = ideal.is_empty();
        let mut pass = zero == odd_only;
        let mut detail = format!("zero_ideal={zero} at_most_one_odd_cycle={odd_only}");
        if m <= 7 {
            let gens = edge_toric_generators(h, 2 * m)?;
            let equal = ideal_equal(&gens, &ideal, &MonomialOrder::grevlex(m))?;
            pass &= equal;
            detail.push_str(&format!(" walks_generate={equal}"));
        }
        Ok(InstanceResult::new(format!("{h:?}"), pass, detail))
    })
}

/// Perfect graphs: sampled grevlex orders all give squarefree initial ideals.
fn compressed(p: &SuiteParams) -> Vec<InstanceResult> {
    let samples = p.samples.unwrap_or(50);
    let mut graphs = Vec::new();
    for n in 1..=p.n.unwrap_or(5) {
        graphs.extend(graphs_on(n, p.labeled.unwrap_or(false)).into_iter().filter(|g| is_perfect(g).perfect));
    }
    let seed = p.seed;
    run_all(&graphs, |g| {
        let q = stable_set_polytope(g);
        let ideal = toric_ideal(&q)?;
        let mut bad = 0;
        for o in random_grevlex_orders(q.len(), samples, seed) {
            if !toric_groebner_basis(&ideal, &o)?.initial_ideal().squarefree {
                bad += 1;
            }
        }
        Ok(InstanceResult::new(show(g), bad == 0, format!("{samples} orders, {bad} non-squarefree")))
    })
}

impl FromStr for SuiteParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split_whitespace().collect();
        Self::parse(&parts)
    }
}
