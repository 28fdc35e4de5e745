use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

use super::omega::OmegaGraph;

/// A pure difference `plus - minus` of two distinct monomials of `T`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Binomial {
    plus: Monomial,
    minus: Monomial,
}

/// Serialized form; `deg_x` and `deg_y` are taken from the leading side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialJson {
    pub plus: String,
    pub minus: String,
    pub deg_x: u32,
    pub deg_y: u32,
}

impl Binomial {
    pub fn new(plus: Monomial, minus: Monomial) -> Result<Self> {
        if plus.nvars() != minus.nvars() {
            return Err(Error::LengthMismatch {
                expected: plus.nvars(),
                found: minus.nvars(),
            });
        }
        if plus == minus {
            return Err(Error::input("a binomial needs two distinct terms"));
        }
        Ok(Binomial { plus, minus })
    }

    /// `x^{u+} - x^{u-}` for an integer vector `u`.
    pub fn from_vector(u: &[i64]) -> Result<Self> {
        let pos = u.iter().map(|&c| c.max(0) as u32).collect();
        let neg = u.iter().map(|&c| (-c).max(0) as u32).collect();
        Binomial::new(Monomial::new(pos), Monomial::new(neg))
    }

    pub fn plus(&self) -> &Monomial {
        &self.plus
    }

    pub fn minus(&self) -> &Monomial {
        &self.minus
    }

    pub fn negate(&self) -> Binomial {
        Binomial {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }

    /// The same binomial with the larger term first.
    pub fn oriented(&self, order: &TermOrder) -> Binomial {
        match order.cmp(&self.plus, &self.minus) {
            Ordering::Less => self.negate(),
            _ => self.clone(),
        }
    }

    /// Equality up to sign.
    pub fn same_up_to_sign(&self, other: &Binomial) -> bool {
        self == other || (self.plus == other.minus && self.minus == other.plus)
    }

    /// Largest degree in `x_1..x_n` over both terms.
    pub fn deg_x(&self, n: usize) -> u32 {
        let dx = |m: &Monomial| m.exps()[..n].iter().sum::<u32>();
        dx(&self.plus).max(dx(&self.minus))
    }

    pub fn deg_y(&self, n: usize) -> u32 {
        let dy = |m: &Monomial| m.exps()[n..].iter().sum::<u32>();
        dy(&self.plus).max(dy(&self.minus))
    }

    /// Membership in the toric ideal: both terms have the same image.
    pub fn in_toric_ideal(&self, omega: &OmegaGraph) -> bool {
        self.plus.nvars() == omega.nvars() && omega.pi(&self.plus) == omega.pi(&self.minus)
    }

    pub fn render(&self, names: &[String]) -> String {
        format!("{} - {}", self.plus.render(names), self.minus.render(names))
    }

    pub fn to_json(&self, omega: &OmegaGraph) -> BinomialJson {
        let names = omega.variable_names();
        BinomialJson {
            plus: self.plus.render(&names),
            minus: self.minus.render(&names),
            deg_x: self.deg_x(omega.n()),
            deg_y: self.deg_y(omega.n()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderKind {
    Lex,
    GrevLex,
}

/// A monomial order given by a ranking of the variables, largest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermOrder {
    kind: OrderKind,
    by_rank: Vec<usize>,
}

impl TermOrder {
    pub fn new(kind: OrderKind, by_rank: Vec<usize>) -> Result<Self> {
        let mut s = by_rank.clone();
        s.sort_unstable();
        if s != (0..by_rank.len()).collect::<Vec<_>>() {
            return Err(Error::input("variable ranking is not a permutation"));
        }
        Ok(TermOrder { kind, by_rank })
    }

    /// Variable `0` largest.
    pub fn natural(kind: OrderKind, nvars: usize) -> Self {
        TermOrder {
            kind,
            by_rank: (0..nvars).collect(),
        }
    }

    /// Lex with `y_{ij} > y_{pq}` iff `(min, max)` is smaller, all `y`
    /// above `x_1 > x_2 > ... > x_n`.
    pub fn rees_lex(omega: &OmegaGraph) -> Self {
        let n = omega.n();
        let mut by_rank: Vec<usize> = (n..omega.nvars()).collect();
        by_rank.extend(0..n);
        TermOrder {
            kind: OrderKind::Lex,
            by_rank,
        }
    }

    /// Reverse lexicographic on the natural ranking with `var` moved last.
    pub fn grevlex_with_last(nvars: usize, var: usize) -> Self {
        let mut by_rank: Vec<usize> = (0..nvars).filter(|&v| v != var).collect();
        by_rank.push(var);
        TermOrder {
            kind: OrderKind::GrevLex,
            by_rank,
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn ranking(&self) -> &[usize] {
        &self.by_rank
    }

    pub fn nvars(&self) -> usize {
        self.by_rank.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exps(), b.exps());
        match self.kind {
            OrderKind::Lex => {
                for &v in &self.by_rank {
                    match ea[v].cmp(&eb[v]) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::GrevLex => {
                let d = a.degree().cmp(&b.degree());
                if d != Ordering::Equal {
                    return d;
                }
                for &v in self.by_rank.iter().rev() {
                    match ea[v].cmp(&eb[v]) {
                        Ordering::Equal => {}
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}
