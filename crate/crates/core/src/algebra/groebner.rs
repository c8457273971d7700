//! Buchberger's algorithm restricted to pure difference binomials.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use super::{Binomial, Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// Default bound on the number of basis elements.
pub const DEFAULT_CAP: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbOptions {
    /// Divide every new element by the gcd of its terms. Only valid for
    /// ideals that are saturated with respect to every variable, such as
    /// toric ideals.
    pub saturate: bool,
    /// Abort with [`Error::ResourceCap`] beyond this many elements.
    pub cap: usize,
}

impl Default for GbOptions {
    fn default() -> Self {
        Self { saturate: false, cap: DEFAULT_CAP }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Task {
    Pair(usize, usize),
    Input(usize),
}

/// Incremental Buchberger state. Inputs and S-pairs share one queue ordered
/// by degree (the lcm degree for pairs), so that a run stopped after degree
/// `D` holds a basis that is correct in degrees up to `D` for homogeneous
/// inputs.
#[derive(Clone, Debug)]
pub(crate) struct GbEngine {
    order: MonomialOrder,
    opts: GbOptions,
    elems: Vec<Binomial>,
    masks: Vec<u128>,
    active: Vec<usize>,
    inputs: Vec<Binomial>,
    queue: BinaryHeap<Reverse<(u32, u64, Task)>>,
    seq: u64,
}

impl GbEngine {
    pub(crate) fn new(order: MonomialOrder, opts: GbOptions) -> Self {
        Self {
            order,
            opts,
            elems: Vec::new(),
            masks: Vec::new(),
            active: Vec::new(),
            inputs: Vec::new(),
            queue: BinaryHeap::new(),
            seq: 0,
        }
    }

    fn push(&mut self, degree: u32, task: Task) {
        self.seq += 1;
        self.queue.push(Reverse((degree, self.seq, task)));
    }

    pub(crate) fn add_input(&mut self, b: Binomial) {
        if b.is_zero() {
            return;
        }
        let d = b.degree();
        self.inputs.push(b);
        self.push(d, Task::Input(self.inputs.len() - 1));
    }

    /// Process every pending task of degree at most `bound` (all tasks when
    /// `None`). `on_new` sees each new element and may stop the run by
    /// returning false, in which case `Ok(false)` is returned.
    pub(crate) fn run(&mut self, bound: Option<u32>, mut on_new: impl FnMut(&Binomial) -> bool) -> Result<bool> {
        while let Some(&Reverse((d, _, task))) = self.queue.peek() {
            if bound.is_some_and(|b| d > b) {
                break;
            }
            self.queue.pop();
            let candidate = match task {
                Task::Pair(i, j) => self.s_binomial(i, j),
                Task::Input(k) => self.inputs[k].clone(),
            };
            if let Some(h) = self.reduce(&candidate) {
                if !on_new(&h) {
                    self.insert(h);
                    return Ok(false);
                }
                self.insert(h);
                if self.active.len() > self.opts.cap {
                    return Err(Error::ResourceCap(format!(
                        "Gröbner basis exceeded {} elements",
                        self.opts.cap
                    )));
                }
            }
        }
        Ok(true)
    }

    fn s_binomial(&self, i: usize, j: usize) -> Binomial {
        let (gi, gj) = (&self.elems[i], &self.elems[j]);
        let l = gi.head().lcm(gj.head());
        let a = l.div(gi.head()).mul(gi.tail());
        let b = l.div(gj.head()).mul(gj.tail());
        Binomial::from_parts(a, b)
    }

    /// Fully reduce a monomial by the active elements.
    pub(crate) fn normal_monomial(&self, m: &mut Monomial) {
        'outer: loop {
            let mask = m.support_mask();
            for &k in &self.active {
                if self.masks[k] & !mask == 0 && self.elems[k].head().divides(m) {
                    let g = &self.elems[k];
                    m.rewrite(g.head(), g.tail());
                    continue 'outer;
                }
            }
            return;
        }
    }

    /// Normal form of a binomial, oriented; `None` when it reduces to zero.
    pub(crate) fn reduce(&self, b: &Binomial) -> Option<Binomial> {
        let mut h = b.head().clone();
        let mut t = b.tail().clone();
        self.normal_monomial(&mut h);
        self.normal_monomial(&mut t);
        if h == t {
            return None;
        }
        if self.opts.saturate {
            let g = h.gcd(&t);
            if !g.is_one() {
                h = h.div(&g);
                t = t.div(&g);
                // Dividing may expose new reducible terms.
                return self.reduce(&Binomial::from_parts(h, t));
            }
        }
        Some(Binomial::from_parts(h, t).oriented(&self.order))
    }

    /// Add a reduced element and update the pair queue (Gebauer-Möller).
    fn insert(&mut self, h: Binomial) {
        let t = self.elems.len();
        let lt = h.head().clone();
        // New pairs, pruned by the chain criterion among themselves.
        let cands: Vec<(usize, Monomial, bool)> = self
            .active
            .iter()
            .map(|&g| {
                let lg = self.elems[g].head();
                (g, lt.lcm(lg), lt.is_coprime(lg))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (idx, (g, l, coprime)) in cands.iter().enumerate() {
            let dominated = cands[idx + 1..].iter().any(|(_, l2, _)| l2.divides(l))
                || kept.iter().any(|(_, l2, _)| l2.divides(l));
            if *coprime || !dominated {
                kept.push((*g, l.clone(), *coprime));
            }
        }
        // Old pairs made redundant by the new leading term.
        let elems = &self.elems;
        self.queue.retain(|Reverse((_, _, task))| match *task {
            Task::Pair(i, j) => {
                let (li, lj) = (elems[i].head(), elems[j].head());
                let l = li.lcm(lj);
                !(lt.divides(&l) && lt.lcm(li) != l && lt.lcm(lj) != l)
            }
            Task::Input(_) => true,
        });
        self.active.retain(|&g| !lt.divides(elems[g].head()));
        for (g, l, coprime) in kept {
            if !coprime {
                self.push(l.degree(), Task::Pair(g, t));
            }
        }
        self.masks.push(lt.support_mask());
        self.elems.push(h);
        self.active.push(t);
    }

    /// The current (not necessarily reduced) basis.
    pub(crate) fn current(&self) -> Vec<Binomial> {
        self.active.iter().map(|&k| self.elems[k].clone()).collect()
    }

    /// Inter-reduce the active elements into the reduced basis, sorted by
    /// increasing leading term.
    pub(crate) fn reduced(&self) -> Vec<Binomial> {
        let mut out: Vec<Binomial> = self
            .active
            .iter()
            .map(|&k| {
                let g = &self.elems[k];
                let mut tail = g.tail().clone();
                self.normal_monomial(&mut tail);
                Binomial::from_parts(g.head().clone(), tail)
            })
            .collect();
        out.sort_by(|a, b| self.order.compare(a.head(), b.head()).then_with(|| self.order.compare(a.tail(), b.tail())));
        out
    }
}

/// A Gröbner basis of a binomial ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    elements: Vec<Binomial>,
    reduced: bool,
}

/// Minimal generators of the initial ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InitialIdeal {
    pub generators: Vec<Monomial>,
    pub squarefree: bool,
    pub max_degree: u32,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Largest element degree; 0 for the zero ideal.
    pub fn max_degree(&self) -> u32 {
        self.elements.iter().map(Binomial::degree).max().unwrap_or(0)
    }

    /// Number of elements in each degree, indexed by degree.
    pub fn degree_profile(&self) -> Vec<usize> {
        let mut prof = vec![0; self.max_degree() as usize + 1];
        for b in &self.elements {
            prof[b.degree() as usize] += 1;
        }
        prof
    }

    fn engine(&self) -> GbEngine {
        let mut e = GbEngine::new(self.order.clone(), GbOptions::default());
        for b in &self.elements {
            let lt = b.head().clone();
            e.masks.push(lt.support_mask());
            e.elems.push(b.clone());
            e.active.push(e.elems.len() - 1);
        }
        e
    }

    /// Normal form of `b`; `None` when `b` reduces to zero.
    pub fn normal_form(&self, b: &Binomial) -> Option<Binomial> {
        self.engine().reduce(b)
    }

    pub fn reduces_to_zero(&self, b: &Binomial) -> bool {
        self.normal_form(b).is_none()
    }

    /// Leading terms of the basis. For a reduced basis these are the minimal
    /// generators of the initial ideal.
    pub fn initial_ideal(&self) -> InitialIdeal {
        let mut generators: Vec<Monomial> = self.elements.iter().map(|b| b.head().clone()).collect();
        if !self.reduced {
            let all = generators.clone();
            generators.retain(|m| !all.iter().any(|o| o != m && o.divides(m)));
            generators.dedup();
        }
        InitialIdeal {
            squarefree: generators.iter().all(Monomial::is_squarefree),
            max_degree: generators.iter().map(Monomial::degree).max().unwrap_or(0),
            generators,
        }
    }
}

fn check_inputs(gens: &[Binomial], order: &MonomialOrder) -> Result<()> {
    for b in gens {
        if b.nvars() != order.nvars() {
            return Err(Error::DimensionMismatch { expected: order.nvars(), got: b.nvars() });
        }
        if !b.is_homogeneous() {
            return Err(Error::NotHomogeneous(b.to_string()));
        }
    }
    Ok(())
}

/// The reduced Gröbner basis of the ideal generated by homogeneous `gens`.
pub fn buchberger(gens: &[Binomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with(gens, order, &GbOptions::default())
}

pub fn buchberger_with(gens: &[Binomial], order: &MonomialOrder, opts: &GbOptions) -> Result<GroebnerBasis> {
    check_inputs(gens, order)?;
    unchecked_buchberger(gens, order, opts)
}

/// Buchberger without the homogeneity check (used for elimination).
pub(crate) fn unchecked_buchberger(
    gens: &[Binomial],
    order: &MonomialOrder,
    opts: &GbOptions,
) -> Result<GroebnerBasis> {
    let mut e = GbEngine::new(order.clone(), opts.clone());
    for b in gens {
        e.add_input(b.clone());
    }
    e.run(None, |_| true)?;
    Ok(GroebnerBasis { order: order.clone(), elements: e.reduced(), reduced: true })
}

/// Basis correct through degree `bound` for homogeneous `gens`.
pub(crate) fn truncated_basis(gens: &[Binomial], order: &MonomialOrder, bound: u32) -> Result<GroebnerBasis> {
    check_inputs(gens, order)?;
    let mut e = GbEngine::new(order.clone(), GbOptions::default());
    for b in gens {
        e.add_input(b.clone());
    }
    e.run(Some(bound), |_| true)?;
    Ok(GroebnerBasis { order: order.clone(), elements: e.current(), reduced: false })
}

impl GroebnerBasis {
    /// Buchberger's criterion: every S-binomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let e = self.engine();
        let n = self.elements.len();
        (0..n).all(|i| (i + 1..n).all(|j| e.reduce(&e.s_binomial(i, j)).is_none()))
    }

    /// Leading terms pairwise non-dividing and no tail divisible by a
    /// leading term.
    pub fn check_reduced(&self) -> bool {
        let heads: Vec<&Monomial> = self.elements.iter().map(Binomial::head).collect();
        self.elements.iter().enumerate().all(|(i, b)| {
            self.order.compare(b.head(), b.tail()) == Ordering::Greater
                && heads.iter().enumerate().all(|(j, h)| {
                    !h.divides(b.tail()) && (i == j || !h.divides(b.head()))
                })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(u: &[i64]) -> Binomial {
        Binomial::from_vector(u)
    }

    #[test]
    fn trivial_inputs() {
        let o = MonomialOrder::grevlex(2);
        assert!(buchberger(&[], &o).unwrap().is_empty());
        let gb = buchberger(&[b(&[1, -1])], &o).unwrap();
        assert_eq!(gb.elements(), &[b(&[1, -1])]);
        assert!(matches!(buchberger(&[b(&[2, -1])], &o), Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn twisted_cubic_grevlex() {
        let o = MonomialOrder::grevlex(4);
        // The degree-2 kernel of (0,1),(1,1),(2,1),(3,1).
        let kernel = [b(&[1, -2, 1, 0]), b(&[0, 1, -2, 1]), b(&[1, -1, -1, 1])];
        let gb = buchberger(&kernel, &o).unwrap();
        // Leading terms under grevlex: y2^2, y2*y3, y3^2.
        let mut heads: Vec<Vec<u32>> = gb.elements().iter().map(|g| g.head().exps().to_vec()).collect();
        heads.sort();
        assert_eq!(heads, vec![vec![0, 0, 2, 0], vec![0, 1, 1, 0], vec![0, 2, 0, 0]]);
        assert!(gb.is_groebner());
        assert!(gb.check_reduced());
        for e in &kernel {
            assert!(gb.elements().iter().any(|g| g.same_up_to_sign(e)), "{e}");
        }
        assert!(!gb.initial_ideal().squarefree);
        // Lex has squarefree leading terms for the same ideal.
        let gb = buchberger(&kernel, &MonomialOrder::lex(4)).unwrap();
        assert!(gb.initial_ideal().squarefree);
    }

    #[test]
    fn two_quadrics_do_not_generate_the_twisted_cubic() {
        // Coprime leading terms: the two quadrics are already a basis, and
        // y1*y4 - y2*y3 is not in the ideal they generate.
        let o = MonomialOrder::grevlex(4);
        let gb = buchberger(&[b(&[1, -2, 1, 0]), b(&[0, 1, -2, 1])], &o).unwrap();
        assert_eq!(gb.len(), 2);
        assert!(!gb.reduces_to_zero(&b(&[1, -1, -1, 1])));
    }

    #[test]
    fn rerunning_is_the_identity() {
        let o = MonomialOrder::grevlex(4);
        let gb = buchberger(&[b(&[1, -2, 1, 0]), b(&[0, 1, -2, 1]), b(&[1, -1, -1, 1])], &o).unwrap();
        let again = buchberger(gb.elements(), &o).unwrap();
        assert_eq!(gb, again);
    }

    #[test]
    fn cap_is_enforced() {
        let o = MonomialOrder::grevlex(4);
        let opts = GbOptions { saturate: false, cap: 1 };
        let r = buchberger_with(&[b(&[1, -2, 1, 0]), b(&[0, 1, -2, 1]), b(&[1, -1, -1, 1])], &o, &opts);
        assert!(matches!(r, Err(Error::ResourceCap(_))));
    }
}
