//! Binomials of even closed walks in graphs with loops.

use std::collections::{BTreeSet, HashSet};

use crate::algebra::{Binomial, Monomial};
use crate::error::{Error, Result};
use crate::graph::{bits, LoopGraph, Walk};

/// Largest multiplicity of one edge on each side of a generated binomial.
pub const EDGE_MULTIPLICITY_CAP: u8 = 2;

/// `f_Γ = Π y_{e_odd} − Π y_{e_even}` over the edge variables of `h` (in
/// the order of [`LoopGraph::edges`]). Zero when the two products agree.
pub fn walk_binomial(w: &Walk, h: &LoopGraph) -> Result<Binomial> {
    if !w.is_closed() {
        return Err(Error::InvalidWalk("walk is not closed".into()));
    }
    if !w.is_even() {
        return Err(Error::InvalidWalk(format!("walk has odd length {}", w.len())));
    }
    let m = h.edges().len();
    let mut odd = vec![0u32; m];
    let mut even = vec![0u32; m];
    for (k, (i, j)) in w.steps().enumerate() {
        let e = h.edge_index(i, j).ok_or_else(|| {
            Error::InvalidWalk(format!("step {} uses {{{},{}}} which is not an edge", k + 1, i + 1, j + 1))
        })?;
        if k % 2 == 0 {
            odd[e] += 1;
        } else {
            even[e] += 1;
        }
    }
    Binomial::new(Monomial::new(odd), Monomial::new(even))
}

/// Binomials of the even closed walks of `h` of length at most `len_bound`,
/// deduplicated up to sign, zero binomials dropped.
///
/// Walks are grown from their smallest vertex. A partial walk whose odd and
/// even edge multisets share an edge can only close to a binomial with a
/// common factor, and such binomials are multiples of shorter-support ones
/// in the (prime) ideal, so those walks are cut. Edges are also used at most
/// [`EDGE_MULTIPLICITY_CAP`] times per side. Completeness of the result
/// for a given bound is the caller's to verify.
pub fn edge_toric_generators(h: &LoopGraph, len_bound: usize) -> Result<Vec<Binomial>> {
    let edges = h.edges();
    let m = edges.len();
    let n = h.n();
    let mut found: BTreeSet<Binomial> = BTreeSet::new();
    for start in 0..n {
        // Vertices below `start` are never revisited.
        let allowed = !((1u64 << start) - 1);
        // State: current vertex and signed multiplicities (+ odd, − even).
        let mut layer: Vec<(usize, Vec<i8>)> = vec![(start, vec![0; m])];
        let mut seen: HashSet<(usize, Vec<i8>)> = HashSet::new();
        for step in 0..len_bound {
            let odd_step = step % 2 == 0;
            let mut next = Vec::new();
            for (cur, mult) in &layer {
                let mut nbrs = h.neighbors(*cur) & allowed;
                if h.has_loop(*cur) {
                    nbrs |= 1u64 << *cur;
                }
                for v in bits(nbrs) {
                    let e = h.edge_index(*cur, v).expect("neighbor edge");
                    let x = mult[e];
                    let ok = if odd_step {
                        x >= 0 && x < EDGE_MULTIPLICITY_CAP as i8
                    } else {
                        x <= 0 && -x < EDGE_MULTIPLICITY_CAP as i8
                    };
                    if !ok {
                        continue;
                    }
                    let mut nm = mult.clone();
                    nm[e] += if odd_step { 1 } else { -1 };
                    if !odd_step && v == start {
                        let b = Binomial::from_vector(&nm.iter().map(|&x| x as i64).collect::<Vec<_>>());
                        if !b.is_zero() {
                            found.insert(b.normalized());
                        }
                    }
                    let key = (v, nm);
                    if seen.insert(key.clone()) {
                        next.push(key);
                    }
                }
            }
            layer = next;
            if layer.is_empty() {
                break;
            }
        }
    }
    Ok(found.into_iter().collect())
}
