use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A monomial given by its exponent vector over a fixed set of variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_{var+1}` (0-based index).
    pub fn var(n: usize, var: usize) -> Self {
        let mut m = Monomial::one(n);
        m.exps[var] = 1;
        m
    }

    /// Product of variables given by 0-based indices, with repetition.
    pub fn from_vars(n: usize, vars: &[usize]) -> Self {
        let mut m = Monomial::one(n);
        for &v in vars {
            m.exps[v] += 1;
        }
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var]
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

    /// 0-based indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    fn check_len(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::LengthMismatch {
                expected: self.exps.len(),
                found: other.exps.len(),
            });
        }
        Ok(())
    }

    pub fn try_divides(&self, other: &Monomial) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.divides(other))
    }

    pub fn try_gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        Ok(self.gcd(other))
    }

    pub fn try_lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        Ok(self.lcm(other))
    }

    /// Divisibility; both monomials must live in the same ring.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect()))
    }

    /// `self / gcd(self, other)`: the colon generator `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Embed into a ring with more variables (new exponents zero).
    pub fn extend(&self, n: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.resize(n, 0);
        Monomial::new(exps)
    }

    /// Apply a variable relabeling: variable `i` becomes `new_of_old[i]`.
    pub fn permute(&self, new_of_old: &[usize]) -> Monomial {
        let mut exps = vec![0; self.exps.len()];
        for (old, &e) in self.exps.iter().enumerate() {
            exps[new_of_old[old]] = e;
        }
        Monomial::new(exps)
    }

    /// Canonical order: degree first, then lexicographic on exponent vectors
    /// with the first variable most significant (larger exponent first).
    pub fn canonical_cmp(&self, other: &Monomial) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }

    /// `x1*x2^2` style rendering with default names.
    pub fn render_default(&self) -> String {
        let names: Vec<String> = (1..=self.nvars()).map(|i| format!("x{i}")).collect();
        self.render(&names)
    }

    /// Render with the given variable names; juxtaposition when every name is
    /// a single character, `*`-separated otherwise. The unit renders as `1`.
    pub fn render(&self, names: &[String]) -> String {
        let juxtapose = names.iter().all(|s| s.chars().count() == 1);
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[i].clone()),
                _ => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        if parts.is_empty() {
            return "1".into();
        }
        if juxtapose {
            // a^2 followed by b must stay unambiguous: `a^2b` parses back fine
            parts.concat()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_default())
    }
}
