use std::fmt;

use serde::{Deserialize, Serialize};

/// A monomial `y^a` as its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Self { exps: vec![0; nvars] }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self { exps }
    }

    /// Product of the listed variables (with repetition).
    pub fn from_vars(nvars: usize, vars: &[usize]) -> Self {
        let mut exps = vec![0; nvars];
        for &v in vars {
            exps[v] += 1;
        }
        Self { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect() }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect() }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    /// `self / other`; the caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect() }
    }

    /// Replace `self` by `self / lead * tail` in place.
    pub(crate) fn rewrite(&mut self, lead: &Monomial, tail: &Monomial) {
        for ((e, l), t) in self.exps.iter_mut().zip(&lead.exps).zip(&tail.exps) {
            *e = *e - l + t;
        }
    }

    pub(crate) fn support_mask(&self) -> u128 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u128, |m, (i, _)| m | 1u128 << (i % 128))
    }

    /// Keep only the listed variables, in the given order.
    pub fn project(&self, vars: &[usize]) -> Monomial {
        Monomial { exps: vars.iter().map(|&v| self.exps[v]).collect() }
    }

    /// Rename variables: variable `i` becomes `map[i]` in a ring of `nvars`.
    pub fn relabel(&self, map: &[usize], nvars: usize) -> Monomial {
        let mut exps = vec![0; nvars];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[map[i]] += e;
        }
        Monomial { exps }
    }

    /// Render with the given variable names; `1` for the unit monomial.
    pub fn display_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{}", names[i], e) })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Default variable names `y1, y2, ...`.
pub fn default_names(nvars: usize) -> Vec<String> {
    (1..=nvars).map(|i| format!("y{i}")).collect()
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&default_names(self.nvars())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Monomial::new(vec![2, 0, 1]);
        let b = Monomial::new(vec![1, 1, 0]);
        assert_eq!(a.lcm(&b), Monomial::new(vec![2, 1, 1]));
        assert_eq!(a.gcd(&b), Monomial::new(vec![1, 0, 0]));
        assert!(!a.divides(&b));
        assert!(a.gcd(&b).divides(&a));
        assert_eq!(a.mul(&b).div(&b), a);
        assert_eq!(a.to_string(), "y1^2*y3");
        assert_eq!(Monomial::one(2).to_string(), "1");
        assert!(!a.is_squarefree());
        let mut c = a.clone();
        c.rewrite(&Monomial::new(vec![1, 0, 0]), &Monomial::new(vec![0, 2, 0]));
        assert_eq!(c, Monomial::new(vec![1, 2, 1]));
    }
}
