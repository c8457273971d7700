use std::cmp::Ordering;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use super::monomial::default_names;
use super::{GroebnerBasis, Monomial, MonomialOrder};
use crate::error::{Error, Result};

/// A pure difference binomial `head - tail`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Binomial {
    head: Monomial,
    tail: Monomial,
}

impl Binomial {
    pub fn new(head: Monomial, tail: Monomial) -> Result<Self> {
        if head.nvars() != tail.nvars() {
            return Err(Error::DimensionMismatch { expected: head.nvars(), got: tail.nvars() });
        }
        Ok(Self { head, tail })
    }

    pub(crate) fn from_parts(head: Monomial, tail: Monomial) -> Self {
        debug_assert_eq!(head.nvars(), tail.nvars());
        Self { head, tail }
    }

    /// `y^{u+} - y^{u-}`.
    pub fn from_vector(u: &[i64]) -> Self {
        let pos = u.iter().map(|&x| x.max(0) as u32).collect();
        let neg = u.iter().map(|&x| (-x).max(0) as u32).collect();
        Self { head: Monomial::new(pos), tail: Monomial::new(neg) }
    }

    /// Exponent difference `head - tail`; common factors cancel.
    pub fn to_vector(&self) -> Vec<i64> {
        self.head.exps().iter().zip(self.tail.exps()).map(|(&a, &b)| a as i64 - b as i64).collect()
    }

    pub fn head(&self) -> &Monomial {
        &self.head
    }

    pub fn tail(&self) -> &Monomial {
        &self.tail
    }

    pub fn nvars(&self) -> usize {
        self.head.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.head == self.tail
    }

    pub fn degree(&self) -> u32 {
        self.head.degree().max(self.tail.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.head.degree() == self.tail.degree()
    }

    pub fn is_coprime(&self) -> bool {
        self.head.is_coprime(&self.tail)
    }

    /// Same binomial up to sign.
    pub fn same_up_to_sign(&self, other: &Binomial) -> bool {
        self == other || (self.head == other.tail && self.tail == other.head)
    }

    /// Swap terms so that the head is the larger one under `order`.
    pub fn oriented(self, order: &MonomialOrder) -> Self {
        if order.compare(&self.head, &self.tail) == Ordering::Less {
            Self { head: self.tail, tail: self.head }
        } else {
            self
        }
    }

    /// Sign-normalized representative: head is the larger term under the
    /// plain lexicographic comparison of exponent vectors.
    pub fn normalized(self) -> Self {
        if self.head < self.tail {
            Self { head: self.tail, tail: self.head }
        } else {
            self
        }
    }

    /// Rename variables: `map[i]` is the new index of variable `i`.
    pub fn relabel(&self, map: &[usize], nvars: usize) -> Self {
        Self { head: self.head.relabel(map, nvars), tail: self.tail.relabel(map, nvars) }
    }

    pub fn display_with(&self, names: &[String]) -> String {
        format!("{} - {}", self.head.display_with(names), self.tail.display_with(names))
    }

    /// `b <m> <u_1> ... <u_m>`.
    pub fn to_line(&self) -> String {
        let mut s = format!("b {}", self.nvars());
        for x in self.to_vector() {
            let _ = write!(s, " {x}");
        }
        s
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&default_names(self.nvars())))
    }
}

fn parse_error(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_b_line(line: usize, rest: &str) -> Result<Binomial> {
    let nums: Vec<i64> = rest
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| parse_error(line, format!("bad integer `{t}`"))))
        .collect::<Result<_>>()?;
    let Some((&m, u)) = nums.split_first() else {
        return Err(parse_error(line, "missing variable count"));
    };
    if m < 0 || u.len() != m as usize {
        return Err(parse_error(line, format!("expected {m} exponents, got {}", u.len())));
    }
    Ok(Binomial::from_vector(u))
}

/// Write binomials, one `b` line each.
pub fn write_binomials(bs: &[Binomial]) -> String {
    bs.iter().map(|b| b.to_line() + "\n").collect()
}

/// Read `b` lines; blank and `c` comment lines are skipped.
pub fn read_binomials(text: &str) -> Result<Vec<Binomial>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let t = raw.trim();
        if t.is_empty() || t == "c" || t.starts_with("c ") {
            continue;
        }
        match t.split_once(char::is_whitespace) {
            Some(("b", rest)) => out.push(parse_b_line(i + 1, rest)?),
            _ => return Err(parse_error(i + 1, format!("expected a `b` line, got `{t}`"))),
        }
    }
    Ok(out)
}

/// An order descriptor line `o ...` followed by the basis elements.
pub fn write_groebner_basis(gb: &GroebnerBasis) -> String {
    format!("o {}\n{}", gb.order().descriptor(), write_binomials(gb.elements()))
}

/// Parse a basis file. The elements are oriented under the stated order but
/// not otherwise checked.
pub fn read_groebner_basis(text: &str) -> Result<(MonomialOrder, Vec<Binomial>)> {
    let mut order = None;
    let mut elems = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let t = raw.trim();
        if t.is_empty() || t == "c" || t.starts_with("c ") {
            continue;
        }
        match t.split_once(char::is_whitespace) {
            Some(("o", rest)) if order.is_none() => {
                order = Some(
                    MonomialOrder::from_descriptor(rest).map_err(|e| parse_error(i + 1, e.to_string()))?,
                );
            }
            Some(("b", rest)) => {
                let o: &MonomialOrder =
                    order.as_ref().ok_or_else(|| parse_error(i + 1, "binomial before order line"))?;
                let b = parse_b_line(i + 1, rest)?;
                if b.nvars() != o.nvars() {
                    return Err(parse_error(i + 1, "variable count differs from the order"));
                }
                elems.push(b.oriented(o));
            }
            _ => return Err(parse_error(i + 1, format!("unexpected line `{t}`"))),
        }
    }
    let order = order.ok_or_else(|| parse_error(0, "missing order line"))?;
    Ok((order, elems))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn vector_form() {
        let b = Binomial::from_vector(&[1, -2, 1]);
        assert_eq!(b.to_string(), "y1*y3 - y2^2");
        assert!(b.is_homogeneous());
        assert_eq!(b.degree(), 2);
        assert_eq!(b.to_line(), "b 3 1 -2 1");
        assert!(Binomial::from_vector(&[0, 0]).is_zero());
        let o = MonomialOrder::grevlex(3);
        assert_eq!(b.oriented(&o).head(), &Monomial::new(vec![0, 2, 0]));
    }

    #[test]
    fn basis_file_errors_have_line_numbers() {
        assert!(matches!(read_binomials("b 2 1 -1\nb 3 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_groebner_basis("b 1 1\n"), Err(Error::Parse { line: 1, .. })));
        let (o, e) = read_groebner_basis("c twisted\no grevlex 1,2\nb 2 1 -1\n").unwrap();
        assert_eq!(o, MonomialOrder::grevlex(2));
        assert_eq!(e.len(), 1);
    }

    proptest! {
        #[test]
        fn coprime_binomials_round_trip(u in proptest::collection::vec(-3i64..4, 1..8)) {
            let b = Binomial::from_vector(&u);
            prop_assert_eq!(b.to_vector(), u.clone());
            let back = read_binomials(&write_binomials(std::slice::from_ref(&b))).unwrap();
            prop_assert_eq!(back, vec![b]);
        }
    }
}
