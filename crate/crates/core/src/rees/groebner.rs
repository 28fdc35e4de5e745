//! Buchberger's algorithm for ideals generated by pure differences.
//!
//! Reducing either term of `a - b` by `c - d` replaces a multiple `t c` by
//! `t d`, so every intermediate polynomial stays a pure difference and a
//! basis element is just a pair (leading term, trailing term).

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

use super::binomial::{Binomial, TermOrder};

/// Default cap on S-pair and reduction steps.
pub const DEFAULT_STEP_BUDGET: usize = 5_000_000;

#[derive(Debug, Clone)]
struct Element {
    lead: Monomial,
    trail: Monomial,
}

struct State<'a> {
    order: &'a TermOrder,
    basis: Vec<Element>,
    steps: usize,
    budget: usize,
}

impl State<'_> {
    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::ResourceLimit(format!(
                "Buchberger exceeded {} steps",
                self.budget
            )));
        }
        Ok(())
    }

    fn normal_form(&mut self, mut m: Monomial, skip: Option<usize>) -> Result<Monomial> {
        'outer: loop {
            for (k, g) in self.basis.iter().enumerate() {
                if Some(k) == skip {
                    continue;
                }
                if let Some(q) = m.div(&g.lead) {
                    m = q.mul(&g.trail);
                    self.tick()?;
                    continue 'outer;
                }
            }
            return Ok(m);
        }
    }

    /// Normal form of `a - b`, oriented; `None` when it reduces to zero.
    fn reduce(&mut self, a: Monomial, b: Monomial) -> Result<Option<Element>> {
        let a = self.normal_form(a, None)?;
        let b = self.normal_form(b, None)?;
        Ok(match self.order.cmp(&a, &b) {
            Ordering::Equal => None,
            Ordering::Greater => Some(Element { lead: a, trail: b }),
            Ordering::Less => Some(Element { lead: b, trail: a }),
        })
    }
}

/// The reduced Groebner basis of the ideal generated by `gens`, each
/// element written with its leading term first, sorted by leading term in
/// descending order.
pub fn reduced_groebner(gens: &[Binomial], order: &TermOrder, budget: usize) -> Result<Vec<Binomial>> {
    for g in gens {
        if g.plus().nvars() != order.nvars() {
            return Err(Error::LengthMismatch {
                expected: order.nvars(),
                found: g.plus().nvars(),
            });
        }
    }
    let mut st = State {
        order,
        basis: Vec::new(),
        steps: 0,
        budget,
    };
    // pairs are processed by degree of the lcm of leading terms
    let mut pairs: BinaryHeap<Reverse<(u32, usize, usize)>> = BinaryHeap::new();
    let add = |st: &mut State, e: Element, pairs: &mut BinaryHeap<Reverse<(u32, usize, usize)>>| {
        let k = st.basis.len();
        for (i, g) in st.basis.iter().enumerate() {
            pairs.push(Reverse((g.lead.lcm(&e.lead).degree(), i, k)));
        }
        st.basis.push(e);
    };
    for g in gens {
        if let Some(e) = st.reduce(g.plus().clone(), g.minus().clone())? {
            add(&mut st, e, &mut pairs);
        }
    }
    while let Some(Reverse((_, i, j))) = pairs.pop() {
        st.tick()?;
        let (gi, gj) = (&st.basis[i], &st.basis[j]);
        let g = gi.lead.gcd(&gj.lead);
        if g.is_one() {
            continue;
        }
        let l = gi.lead.lcm(&gj.lead);
        let a = l.div(&gi.lead).expect("lcm").mul(&gi.trail);
        let b = l.div(&gj.lead).expect("lcm").mul(&gj.trail);
        if let Some(e) = st.reduce(a, b)? {
            add(&mut st, e, &mut pairs);
        }
    }
    // minimal basis: drop elements whose leading term is divisible by another
    let mut keep: Vec<Element> = Vec::new();
    let mut basis = std::mem::take(&mut st.basis);
    basis.sort_by(|a, b| order.cmp(&a.lead, &b.lead));
    for e in basis {
        if !keep.iter().any(|k| k.lead.divides(&e.lead)) {
            keep.push(e);
        }
    }
    st.basis = keep;
    for k in 0..st.basis.len() {
        let t = st.basis[k].trail.clone();
        let t = st.normal_form(t, Some(k))?;
        debug_assert_eq!(order.cmp(&st.basis[k].lead, &t), Ordering::Greater);
        st.basis[k].trail = t;
    }
    let mut out: Vec<Binomial> = st
        .basis
        .into_iter()
        .map(|e| Binomial::new(e.lead, e.trail).expect("distinct terms"))
        .collect();
    out.sort_by(|a, b| order.cmp(b.plus(), a.plus()));
    Ok(out)
}
