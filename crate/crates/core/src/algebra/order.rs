use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Monomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    Lex,
    GradedLex,
    GradedRevLex,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::GradedLex => "glex",
            OrderKind::GradedRevLex => "grevlex",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "glex" | "deglex" | "graded-lex" => Ok(OrderKind::GradedLex),
            "grevlex" | "degrevlex" | "graded-reverse-lex" => Ok(OrderKind::GradedRevLex),
            other => Err(Error::Precondition(format!("unknown order kind `{other}`"))),
        }
    }
}

/// A monomial order: an optional weight row compared first, then an
/// optional elimination block (the first `block` variables of `perm`
/// dominate the rest), with `kind` applied inside each block. `perm` lists
/// the variables from largest to smallest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    kind: OrderKind,
    perm: Vec<usize>,
    block: Option<usize>,
    weights: Option<Vec<i64>>,
}

impl MonomialOrder {
    /// `kind` with `y1 > y2 > ... > ym`.
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        Self { kind, perm: (0..nvars).collect(), block: None, weights: None }
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::GradedRevLex, nvars)
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, nvars)
    }

    /// `perm[0] > perm[1] > ...`; `perm` must be a permutation.
    pub fn with_permutation(kind: OrderKind, perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &v in &perm {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Precondition(format!("not a permutation: {perm:?}")));
            }
        }
        Ok(Self { kind, perm, block: None, weights: None })
    }

    /// The first `block` variables (in natural order) are infinitely heavier
    /// than the rest.
    pub fn elimination(kind: OrderKind, nvars: usize, block: usize) -> Result<Self> {
        if block > nvars {
            return Err(Error::Precondition(format!("block {block} exceeds {nvars} variables")));
        }
        Ok(Self { kind, perm: (0..nvars).collect(), block: Some(block), weights: None })
    }

    /// Compare by `weights` first. Weights must be nonnegative so that the
    /// unit monomial stays minimal.
    pub fn with_weights(mut self, weights: Vec<i64>) -> Result<Self> {
        if weights.len() != self.perm.len() {
            return Err(Error::DimensionMismatch { expected: self.perm.len(), got: weights.len() });
        }
        if weights.iter().any(|&w| w < 0) {
            return Err(Error::Precondition("order weights must be nonnegative".into()));
        }
        self.weights = Some(weights);
        Ok(self)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn block(&self) -> Option<usize> {
        self.block
    }

    pub fn weights(&self) -> Option<&[i64]> {
        self.weights.as_deref()
    }

    pub fn nvars(&self) -> usize {
        self.perm.len()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exps(), b.exps());
        if let Some(w) = &self.weights {
            let wa: i64 = a.iter().zip(w).map(|(&e, &x)| e as i64 * x).sum();
            let wb: i64 = b.iter().zip(w).map(|(&e, &x)| e as i64 * x).sum();
            match wa.cmp(&wb) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        match self.block {
            Some(k) => compare_kind(self.kind, &self.perm[..k], a, b)
                .then_with(|| compare_kind(self.kind, &self.perm[k..], a, b)),
            None => compare_kind(self.kind, &self.perm, a, b),
        }
    }

    /// Parse `kind` or `kind:p1,p2,...` with 1-based variables listed from
    /// largest to smallest.
    pub fn parse(desc: &str, nvars: usize) -> Result<Self> {
        let (kind, perm) = desc.split_once(':').unwrap_or((desc, ""));
        let kind = OrderKind::parse(kind.trim())?;
        if perm.trim().is_empty() {
            return Ok(Self::new(kind, nvars));
        }
        let perm = parse_list(perm)?;
        if perm.len() != nvars {
            return Err(Error::DimensionMismatch { expected: nvars, got: perm.len() });
        }
        Self::with_permutation(kind, perm)
    }

    /// The descriptor line body `<kind> <perm> [<weights>]`, 1-based.
    pub fn descriptor(&self) -> String {
        let perm: Vec<String> = self.perm.iter().map(|v| (v + 1).to_string()).collect();
        let mut s = format!("{} {}", self.kind.name(), perm.join(","));
        if let Some(w) = &self.weights {
            let w: Vec<String> = w.iter().map(i64::to_string).collect();
            s.push(' ');
            s.push_str(&w.join(","));
        }
        if let Some(k) = self.block {
            s.push_str(&format!(" block={k}"));
        }
        s
    }

    /// Inverse of [`MonomialOrder::descriptor`].
    pub fn from_descriptor(body: &str) -> Result<Self> {
        let mut toks = body.split_whitespace();
        let kind = OrderKind::parse(toks.next().unwrap_or(""))?;
        let perm = parse_list(toks.next().ok_or_else(|| Error::Precondition("missing permutation".into()))?)?;
        let mut order = Self::with_permutation(kind, perm)?;
        for tok in toks {
            if let Some(k) = tok.strip_prefix("block=") {
                let k: usize = k.parse().map_err(|_| Error::Precondition(format!("bad block `{k}`")))?;
                if k > order.nvars() {
                    return Err(Error::Precondition(format!("block {k} exceeds variables")));
                }
                order.block = Some(k);
            } else {
                let w = tok
                    .split(',')
                    .map(|x| x.parse::<i64>().map_err(|_| Error::Precondition(format!("bad weight `{x}`"))))
                    .collect::<Result<Vec<_>>>()?;
                order = order.with_weights(w)?;
            }
        }
        Ok(order)
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| match x.trim().parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v - 1),
            _ => Err(Error::Precondition(format!("bad variable index `{x}`"))),
        })
        .collect()
}

fn compare_kind(kind: OrderKind, vars: &[usize], a: &[u32], b: &[u32]) -> Ordering {
    let lex = || {
        for &v in vars {
            match a[v].cmp(&b[v]) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        Ordering::Equal
    };
    let degree = |x: &[u32]| vars.iter().map(|&v| x[v]).sum::<u32>();
    match kind {
        OrderKind::Lex => lex(),
        OrderKind::GradedLex => degree(a).cmp(&degree(b)).then_with(lex),
        OrderKind::GradedRevLex => degree(a).cmp(&degree(b)).then_with(|| {
            for &v in vars.iter().rev() {
                match a[v].cmp(&b[v]) {
                    Ordering::Equal => {}
                    other => return other.reverse(),
                }
            }
            Ordering::Equal
        }),
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    /// Textbook grevlex by the definition: higher degree wins; otherwise the
    /// rightmost nonzero entry of `a - b` is negative.
    fn grevlex_by_definition(a: &[u32], b: &[u32]) -> Ordering {
        let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
        if da != db {
            return da.cmp(&db);
        }
        let diff: Vec<i64> = a.iter().zip(b).map(|(&x, &y)| x as i64 - y as i64).collect();
        match diff.iter().rev().find(|&&x| x != 0) {
            None => Ordering::Equal,
            Some(&x) if x < 0 => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    #[test]
    fn grevlex_pairwise_table_in_three_variables() {
        let all: Vec<Vec<u32>> = (0..3u32)
            .flat_map(|a| (0..3u32).flat_map(move |b| (0..3u32).map(move |c| vec![a, b, c])))
            .filter(|e| e.iter().sum::<u32>() <= 2)
            .collect();
        let o = MonomialOrder::grevlex(3);
        for a in &all {
            for b in &all {
                assert_eq!(o.compare(&m(a), &m(b)), grevlex_by_definition(a, b), "{a:?} {b:?}");
            }
        }
        // y2^2 > y1*y3 under grevlex with y1 > y2 > y3.
        assert_eq!(o.compare(&m(&[0, 2, 0]), &m(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn lex_ignores_degree() {
        let o = MonomialOrder::lex(2);
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 2])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[1, 1]), &m(&[1, 1])), Ordering::Equal);
    }

    #[test]
    fn elimination_block_dominates() {
        let o = MonomialOrder::elimination(OrderKind::GradedRevLex, 3, 1).unwrap();
        assert_eq!(o.compare(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    #[test]
    fn permutation_and_descriptor_round_trip() {
        let o = MonomialOrder::with_permutation(OrderKind::Lex, vec![2, 0, 1]).unwrap();
        assert_eq!(o.compare(&m(&[0, 0, 1]), &m(&[5, 0, 0])), Ordering::Greater);
        let o = o.with_weights(vec![1, 2, 0]).unwrap();
        assert_eq!(MonomialOrder::from_descriptor(&o.descriptor()).unwrap(), o);
        assert_eq!(MonomialOrder::parse("grevlex:3,1,2", 3).unwrap().permutation(), &[2, 0, 1]);
        assert!(MonomialOrder::with_permutation(OrderKind::Lex, vec![0, 0]).is_err());
        assert!(MonomialOrder::parse("foo", 2).is_err());
    }

    proptest! {
        #[test]
        fn orders_are_total_and_multiplicative(
            a in proptest::collection::vec(0u32..3, 4),
            b in proptest::collection::vec(0u32..3, 4),
            c in proptest::collection::vec(0u32..3, 4),
            kind in 0usize..3,
            perm_seed in 0usize..24,
        ) {
            let kind = [OrderKind::Lex, OrderKind::GradedLex, OrderKind::GradedRevLex][kind];
            let mut pool: Vec<usize> = (0..4).collect();
            let mut perm = Vec::new();
            let mut s = perm_seed;
            for k in (1..=4).rev() {
                perm.push(pool.remove(s % k));
                s /= k;
            }
            let o = MonomialOrder::with_permutation(kind, perm).unwrap();
            let (ma, mb, mc) = (m(&a), m(&b), m(&c));
            let ab = o.compare(&ma, &mb);
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(ab, o.compare(&mb, &ma).reverse());
            prop_assert_eq!(ab, o.compare(&ma.mul(&mc), &mb.mul(&mc)));
            prop_assert_ne!(o.compare(&Monomial::one(4), &mc), Ordering::Greater);
        }
    }
}
