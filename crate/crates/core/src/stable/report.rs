//! One JSON-serializable summary of every verdict for a graph.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{
    minimal_generators, quadratic_gb_search_with, toric_groebner_basis, toric_ideal_with, Binomial, GbOptions,
    MonomialOrder, QuadraticGbSearch,
};
use crate::error::{Error, Result};
use crate::graph::{induced_cycles, is_bipartite, is_chordal, is_perfect, odd_cycle_condition, Cycle, Parity, SimpleGraph};
use crate::polytope::{is_unimodular, stable_set_polytope, Unimodularity};

use super::generators::alpha2_generators_verified;
use super::normality::{
    nonnormality_witness, normality_necessary_audit, quadratic_necessary_audit, Violation,
};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalyzeOptions {
    pub dmax: usize,
    /// Fixed walk bound for the generator construction; `None` doubles from
    /// the default until the result is verified.
    pub walk_bound: Option<usize>,
    pub order: Option<MonomialOrder>,
    pub budget: usize,
    pub seed: u64,
    pub cap: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self { dmax: 4, walk_bound: None, order: None, budget: 8, seed: 0, cap: GbOptions::default().cap }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub alpha: usize,
    pub perfect: bool,
    pub chordal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplementSummary {
    pub bipartite: bool,
    pub odd_holes: Vec<Vec<usize>>,
    /// Odd antiholes of the complement, as chordless cycles of the graph.
    pub odd_antiholes: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalSection {
    /// `normal`, `normal-up-to`, `nonnormal` or `skipped`.
    pub status: String,
    pub route: String,
    pub dmax: Option<usize>,
    pub witness: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerSection {
    pub order: String,
    pub maxdeg: u32,
    pub size: usize,
    pub degree_profile: Vec<usize>,
    pub squarefree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticSection {
    /// `found`, `certified-impossible` or `unknown`.
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationEntry {
    pub kind: String,
    pub cycles: Vec<Vec<usize>>,
    pub bridges: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub condition: String,
    pub holds: bool,
    pub violations: Vec<ViolationEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub version: String,
    pub graph: GraphSummary,
    pub alpha: usize,
    pub complement_bipartite: bool,
    pub complement: ComplementSummary,
    pub unimodular: Option<bool>,
    pub normal: NormalSection,
    pub mu: Option<u32>,
    pub generators: Vec<String>,
    pub walk_bound: Option<usize>,
    pub groebner: Option<GroebnerSection>,
    pub quadratic_gb: QuadraticSection,
    pub audits: Vec<AuditEntry>,
    /// Field name to the reason it was not computed.
    pub skipped: BTreeMap<String, String>,
}

fn labels(cs: &[Cycle]) -> Vec<Vec<usize>> {
    cs.iter().map(Cycle::labels).collect()
}

fn audit(condition: &str, vs: Vec<Violation>) -> AuditEntry {
    AuditEntry {
        condition: condition.into(),
        holds: vs.is_empty(),
        violations: vs
            .into_iter()
            .map(|v| ViolationEntry { kind: v.kind.name().into(), cycles: labels(&v.cycles), bridges: v.bridges })
            .collect(),
    }
}

/// Variable names `y{…}` after the stable sets, 1-based.
pub fn stable_set_names(g: &SimpleGraph) -> Vec<String> {
    stable_set_polytope(g).labels().iter().map(|l| format!("y{l}")).collect()
}

/// Errors that mark a field as skipped rather than failing the analysis.
fn skippable(e: &Error) -> bool {
    matches!(e, Error::ResourceCap(_) | Error::Precondition(_) | Error::RankDeficient { .. })
}

/// Runs every check on `g`. Resource-cap failures skip the affected fields
/// and say why; other errors are returned.
pub fn analyze(g: &SimpleGraph, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    if opts.dmax < 2 {
        return Err(Error::Precondition("dmax must be at least 2".into()));
    }
    let mut skipped = BTreeMap::new();
    let gc = g.complement();
    let alpha = g.stability_number();
    let perfect = is_perfect(g).perfect;
    let bipartite = is_bipartite(&gc).bipartite;
    let q = stable_set_polytope(g);
    let nv = q.len();

    let graph = GraphSummary {
        n: g.n(),
        edges: g.edges().iter().map(|&(i, j)| [i + 1, j + 1]).collect(),
        alpha,
        perfect,
        chordal: is_chordal(g),
    };
    let complement = ComplementSummary {
        bipartite,
        odd_holes: labels(&induced_cycles(&gc, 5, Parity::Odd)?),
        odd_antiholes: labels(&induced_cycles(g, 5, Parity::Odd)?),
    };

    let unimodular = match is_unimodular(&q) {
        Ok(u @ (Unimodularity::Unimodular { .. } | Unimodularity::NotUnimodular(_))) => u.verdict(),
        Ok(Unimodularity::Infeasible { minors }) => {
            skipped.insert("unimodular".into(), format!("{minors} maximal minors exceed the enumeration limit"));
            None
        }
        Err(e) if skippable(&e) => {
            skipped.insert("unimodular".into(), e.to_string());
            None
        }
        Err(e) => return Err(e),
    };

    let witness = nonnormality_witness(g, opts.dmax)?;
    let normal = match &witness {
        Ok((w, route)) => NormalSection {
            status: "nonnormal".into(),
            route: (*route).into(),
            dmax: (*route == "idp").then_some(opts.dmax),
            witness: Some(w.clone()),
        },
        Err(reason) if reason.starts_with("normal") => NormalSection {
            status: "normal".into(),
            route: if alpha == 2 { "odd-cycle-condition" } else { "perfect" }.into(),
            dmax: None,
            witness: None,
        },
        Err(_) => NormalSection { status: "normal-up-to".into(), route: "idp".into(), dmax: Some(opts.dmax), witness: None },
    };

    let gb_opts = GbOptions { cap: opts.cap, ..GbOptions::default() };
    let grevlex = MonomialOrder::grevlex(nv);
    let names = stable_set_names(g);
    let mut walk_bound = None;
    let ideal: Option<Vec<Binomial>> = (|| -> Result<Vec<Binomial>> {
        let gens = if alpha == 2 {
            match opts.walk_bound {
                Some(b) => super::generators::alpha2_generators(g, b)?,
                None => {
                    let (gens, b) = alpha2_generators_verified(g)?;
                    walk_bound = Some(b);
                    gens
                }
            }
        } else {
            toric_ideal_with(&q, &gb_opts)?
        };
        Ok(minimal_generators(&gens, &grevlex)?.0)
    })()
    .map_or_else(
        |e| {
            if skippable(&e) {
                skipped.insert("generators".into(), e.to_string());
                Ok(None)
            } else {
                Err(e)
            }
        },
        |v| Ok(Some(v)),
    )?;
    if alpha == 2 && opts.walk_bound.is_some() {
        walk_bound = opts.walk_bound;
    }

    let mu = ideal.as_ref().map(|gens| gens.iter().map(Binomial::degree).max().unwrap_or(0));
    let generators = ideal.as_ref().map_or_else(Vec::new, |gens| gens.iter().map(|b| b.display_with(&names)).collect());

    let order = opts.order.clone().unwrap_or_else(|| grevlex.clone());
    let groebner = match &ideal {
        Some(gens) if order.nvars() == nv => match toric_groebner_basis(gens, &order) {
            Ok(gb) => {
                let init = gb.initial_ideal();
                Some(GroebnerSection {
                    order: order.descriptor(),
                    maxdeg: gb.max_degree(),
                    size: gb.len(),
                    degree_profile: gb.degree_profile(),
                    squarefree: init.squarefree,
                })
            }
            Err(e) if skippable(&e) => {
                skipped.insert("groebner".into(), e.to_string());
                None
            }
            Err(e) => return Err(e),
        },
        Some(_) => {
            skipped.insert("groebner".into(), format!("order has {} variables, the ring has {nv}", order.nvars()));
            None
        }
        None => {
            skipped.insert("groebner".into(), "no generators".into());
            None
        }
    };

    let quadratic_gb = if let Ok((_, route)) = &witness {
        QuadraticSection {
            status: "certified-impossible".into(),
            order: None,
            reason: Some(format!("the 0/1 polytope is nonnormal ({route})")),
        }
    } else if let Some(gb) = groebner.as_ref().filter(|gb| gb.maxdeg <= 2) {
        QuadraticSection { status: "found".into(), order: Some(gb.order.clone()), reason: None }
    } else if mu.is_some_and(|m| m > 2) {
        QuadraticSection {
            status: "unknown".into(),
            order: None,
            reason: Some("minimal generators of degree above 2, so no order gives a quadratic basis".into()),
        }
    } else if let Some(gens) = &ideal {
        match quadratic_gb_search_with(gens, opts.budget, opts.seed, &gb_opts) {
            Ok(QuadraticGbSearch::Found(o)) => {
                QuadraticSection { status: "found".into(), order: Some(o.descriptor()), reason: None }
            }
            Ok(QuadraticGbSearch::Unknown { tried }) => QuadraticSection {
                status: "unknown".into(),
                order: None,
                reason: Some(format!("no quadratic basis among {tried} orders tried")),
            },
            Err(e) if skippable(&e) => {
                QuadraticSection { status: "unknown".into(), order: None, reason: Some(e.to_string()) }
            }
            Err(e) => return Err(e),
        }
    } else {
        QuadraticSection { status: "unknown".into(), order: None, reason: Some("no generators".into()) }
    };

    let occ = odd_cycle_condition(&gc);
    let audits = vec![
        AuditEntry {
            condition: "odd-cycle-condition".into(),
            holds: occ.holds,
            violations: occ
                .violation
                .into_iter()
                .map(|(a, b)| ViolationEntry {
                    kind: "bridgeless-odd-cycles".into(),
                    cycles: vec![a.labels(), b.labels()],
                    bridges: 0,
                })
                .collect(),
        },
        audit("normality-necessary", normality_necessary_audit(g)),
        audit("quadratic-necessary", quadratic_necessary_audit(g)),
    ];

    Ok(AnalysisReport {
        version: crate::VERSION.into(),
        graph,
        alpha,
        complement_bipartite: bipartite,
        complement,
        unimodular,
        normal,
        mu,
        generators,
        walk_bound,
        groebner,
        quadratic_gb,
        audits,
        skipped,
    })
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Checks the implications that must hold between fields. Returns the
    /// broken ones.
    pub fn inconsistencies(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.complement_bipartite && self.unimodular == Some(false) {
            out.push("bipartite complement but not unimodular".into());
        }
        if self.quadratic_gb.status == "certified-impossible" && self.normal.witness.is_none() {
            out.push("certified impossible without a nonnormality witness".into());
        }
        if self.quadratic_gb.status == "found" && self.normal.status == "nonnormal" {
            out.push("quadratic basis found for a nonnormal polytope".into());
        }
        if self.quadratic_gb.status == "found" && self.mu.is_some_and(|m| m > 2) {
            out.push("quadratic basis found but generators of higher degree".into());
        }
        if self.unimodular == Some(true) && self.normal.status == "nonnormal" {
            out.push("unimodular but nonnormal".into());
        }
        out
    }

    /// Plain `key: value` lines.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let mut line = |k: &str, v: String| {
            s.push_str(k);
            s.push_str(": ");
            s.push_str(&v);
            s.push('\n');
        };
        let opt = |x: Option<String>| x.unwrap_or_else(|| "skipped".into());
        line("version", self.version.clone());
        line("n", self.graph.n.to_string());
        line(
            "edges",
            self.graph.edges.iter().map(|[i, j]| format!("{i}-{j}")).collect::<Vec<_>>().join(" "),
        );
        line("alpha", self.alpha.to_string());
        line("perfect", self.graph.perfect.to_string());
        line("chordal", self.graph.chordal.to_string());
        line("complement_bipartite", self.complement_bipartite.to_string());
        line("odd_holes", format!("{:?}", self.complement.odd_holes));
        line("odd_antiholes", format!("{:?}", self.complement.odd_antiholes));
        line("unimodular", opt(self.unimodular.map(|b| b.to_string())));
        let mut normal = format!("{} ({})", self.normal.status, self.normal.route);
        if let Some(d) = self.normal.dmax {
            normal.push_str(&format!(" dmax={d}"));
        }
        if let Some(w) = &self.normal.witness {
            normal.push_str(&format!(" witness={w:?}"));
        }
        line("normal", normal);
        line("mu", opt(self.mu.map(|m| m.to_string())));
        if let Some(b) = self.walk_bound {
            line("walk_bound", b.to_string());
        }
        for g in &self.generators {
            line("generator", g.clone());
        }
        line(
            "groebner",
            opt(self.groebner.as_ref().map(|g| {
                format!("order={} maxdeg={} size={} squarefree={}", g.order, g.maxdeg, g.size, g.squarefree)
            })),
        );
        let mut q = self.quadratic_gb.status.clone();
        if let Some(o) = &self.quadratic_gb.order {
            q.push_str(&format!(" order={o}"));
        }
        if let Some(r) = &self.quadratic_gb.reason {
            q.push_str(&format!(" ({r})"));
        }
        line("quadratic_gb", q);
        for a in &self.audits {
            let mut v = if a.holds { "holds".to_string() } else { "violated".to_string() };
            for x in &a.violations {
                v.push_str(&format!(" [{} {:?} bridges={}]", x.kind, x.cycles, x.bridges));
            }
            line(&format!("audit {}", a.condition), v);
        }
        for (k, r) in &self.skipped {
            line(&format!("skipped {k}"), r.clone());
        }
        s
    }
}
