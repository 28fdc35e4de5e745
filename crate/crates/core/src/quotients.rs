//! Linear quotients: verification for a given generator order, the
//! ordered divisibility condition (q), the explicit order for quadratic
//! ideals satisfying (*) and (**), and a backtracking search.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::conditions::{check_star, check_star_star};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Generator indices into `G(I)`, largest first: `f_1, f_2, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorOrder {
    pub indices: Vec<usize>,
}

/// Outcome of an order check; the witness is a pair of 1-based positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCheck {
    pub holds: bool,
    pub witness: Option<(usize, usize)>,
}

impl OrderCheck {
    fn pass() -> Self {
        OrderCheck {
            holds: true,
            witness: None,
        }
    }

    fn fail(i: usize, j: usize) -> Self {
        OrderCheck {
            holds: false,
            witness: Some((i, j)),
        }
    }
}

impl GeneratorOrder {
    pub fn from_monomials(ideal: &MonomialIdeal, order: &[Monomial]) -> Result<Self> {
        let indices = order
            .iter()
            .map(|m| {
                ideal
                    .position(m)
                    .ok_or_else(|| Error::input(format!("{m:?} is not a minimal generator")))
            })
            .collect::<Result<Vec<_>>>()?;
        let o = GeneratorOrder { indices };
        o.validate(ideal)?;
        Ok(o)
    }

    pub fn validate(&self, ideal: &MonomialIdeal) -> Result<()> {
        let mut s = self.indices.clone();
        s.sort_unstable();
        if s != (0..ideal.len()).collect::<Vec<_>>() {
            return Err(Error::input("order is not a permutation of the generators"));
        }
        Ok(())
    }

    pub fn monomials<'a>(&self, ideal: &'a MonomialIdeal) -> Vec<&'a Monomial> {
        self.indices.iter().map(|&i| &ideal.gens()[i]).collect()
    }
}

/// Whether `(earlier) : f` is generated by variables.
fn colon_is_linear(earlier: &[&Monomial], f: &Monomial) -> Option<usize> {
    let quotients: Vec<Monomial> = earlier.iter().map(|g| g.colon(f)).collect();
    let linear: Vec<&Monomial> = quotients.iter().filter(|q| q.degree() == 1).collect();
    quotients
        .iter()
        .position(|q| !linear.iter().any(|l| l.divides(q)))
}

/// Checks that `(f_1, ..., f_{i-1}) : f_i` is generated by variables for
/// every `i`. The witness `(i, j)` names a generator `f_j`, `j < i`, whose
/// quotient is not a multiple of a linear one.
pub fn has_linear_quotients(ideal: &MonomialIdeal, order: &GeneratorOrder) -> Result<OrderCheck> {
    ideal.equigenerated_degree()?;
    order.validate(ideal)?;
    let gens = order.monomials(ideal);
    for i in 1..gens.len() {
        if let Some(j) = colon_is_linear(&gens[..i], gens[i]) {
            return Ok(OrderCheck::fail(i + 1, j + 1));
        }
    }
    Ok(OrderCheck::pass())
}

/// Condition (q): for all `u > v` there is `w > v` with `w / gcd(w, v)` a
/// variable dividing `u / gcd(u, v)`. The witness is `(position of u,
/// position of v)`.
pub fn condition_q(ideal: &MonomialIdeal, order: &GeneratorOrder) -> Result<OrderCheck> {
    ideal.require_quadratic()?;
    order.validate(ideal)?;
    let gens = order.monomials(ideal);
    let mut result = OrderCheck::pass();
    'outer: for (pv, v) in gens.iter().enumerate() {
        for (pu, u) in gens[..pv].iter().enumerate() {
            let target = u.colon(v);
            let found = gens[..pv].iter().any(|w| {
                let q = w.colon(v);
                q.degree() == 1 && q.divides(&target)
            });
            if !found {
                result = OrderCheck::fail(pu + 1, pv + 1);
                break 'outer;
            }
        }
    }
    debug_assert!(!result.holds || has_linear_quotients(ideal, order)?.holds);
    Ok(result)
}

/// Sort key of a quadratic generator: `x_a x_b` with `a < b` maps to
/// `(b, a)`, and `x_i^2` to `(i, 0)`, so that descending keys give the
/// lexicographic order with `x_n > ... > x_1` on squarefree generators and
/// each square sits directly below the smallest `x_k x_i` with `k < i`.
fn lq_key(m: &Monomial) -> (usize, usize) {
    let s = m.support();
    match s.as_slice() {
        [i] => (i + 1, 0),
        [a, b] => (b + 1, a + 1),
        _ => unreachable!("quadratic generator"),
    }
}

/// The order used to show linear quotients for quadratic ideals satisfying
/// (*) and (**).
///
/// A square `x_i^2` without a generator `x_k x_i`, `k < i`, is placed
/// above every generator in variables below `x_i`.
pub fn construct_lq_order(ideal: &MonomialIdeal) -> Result<GeneratorOrder> {
    ideal.require_quadratic()?;
    let star = check_star(ideal)?;
    if let Some(witness) = star.witness {
        return Err(Error::ConditionViolated {
            condition: "(*)",
            witness,
        });
    }
    let star_star = check_star_star(ideal)?;
    if let Some(witness) = star_star.witness {
        return Err(Error::ConditionViolated {
            condition: "(**)",
            witness,
        });
    }
    let mut indices: Vec<usize> = (0..ideal.len()).collect();
    indices.sort_by_key(|&i| std::cmp::Reverse(lq_key(&ideal.gens()[i])));
    let order = GeneratorOrder { indices };
    let q = condition_q(ideal, &order)?;
    if let Some((u, v)) = q.witness {
        return Err(Error::Falsification(format!(
            "constructed order violates (q) at positions ({u}, {v})"
        )));
    }
    Ok(order)
}

/// Default node budget for [`find_lq_order`].
pub const DEFAULT_NODE_BUDGET: usize = 1_000_000;

/// Backtracking search for an order with linear quotients. `Ok(None)`
/// means no order exists; an exhausted budget is `Error::Inconclusive`.
pub fn find_lq_order(ideal: &MonomialIdeal, node_budget: usize) -> Result<Option<GeneratorOrder>> {
    ideal.equigenerated_degree()?;
    let m = ideal.len();
    if m > 128 {
        return Err(Error::ResourceLimit(format!("{m} generators exceed the search limit")));
    }
    let gens: Vec<&Monomial> = ideal.gens().iter().collect();
    let mut search = Search {
        gens: &gens,
        dead: HashSet::new(),
        nodes: 0,
        budget: node_budget,
        prefix: Vec::with_capacity(m),
    };
    let found = search.extend(0)?;
    Ok(found.then_some(GeneratorOrder {
        indices: search.prefix,
    }))
}

struct Search<'a> {
    gens: &'a [&'a Monomial],
    /// Sets of used generators from which no completion exists; the
    /// admissibility of the next generator depends only on this set.
    dead: HashSet<u128>,
    nodes: usize,
    budget: usize,
    prefix: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, used: u128) -> Result<bool> {
        if self.prefix.len() == self.gens.len() {
            return Ok(true);
        }
        if self.dead.contains(&used) {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::Inconclusive(format!(
                "linear-quotient search exceeded {} nodes",
                self.budget
            )));
        }
        let earlier: Vec<&Monomial> = self.prefix.iter().map(|&i| self.gens[i]).collect();
        for c in 0..self.gens.len() {
            if used >> c & 1 == 1 || colon_is_linear(&earlier, self.gens[c]).is_some() {
                continue;
            }
            self.prefix.push(c);
            if self.extend(used | 1 << c)? {
                return Ok(true);
            }
            self.prefix.pop();
        }
        self.dead.insert(used);
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::minimal_generators;

    fn ideal(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        let ms: Vec<Monomial> = gens
            .iter()
            .map(|g| Monomial::from_vars(n, &g.iter().map(|v| v - 1).collect::<Vec<_>>()))
            .collect();
        minimal_generators(&ms, n).unwrap()
    }

    fn mono(n: usize, vars: &[usize]) -> Monomial {
        Monomial::from_vars(n, &vars.iter().map(|v| v - 1).collect::<Vec<_>>())
    }

    fn order(i: &MonomialIdeal, vars: &[&[usize]]) -> GeneratorOrder {
        let ms: Vec<Monomial> = vars.iter().map(|v| mono(i.nvars(), v)).collect();
        GeneratorOrder::from_monomials(i, &ms).unwrap()
    }

    #[test]
    fn linear_quotients_examples() {
        let i = ideal(3, &[&[1, 2], &[1, 3]]);
        for o in [order(&i, &[&[1, 2], &[1, 3]]), order(&i, &[&[1, 3], &[1, 2]])] {
            assert!(has_linear_quotients(&i, &o).unwrap().holds);
        }
        let ci = ideal(4, &[&[1, 2], &[3, 4]]);
        for o in [order(&ci, &[&[1, 2], &[3, 4]]), order(&ci, &[&[3, 4], &[1, 2]])] {
            assert_eq!(has_linear_quotients(&ci, &o).unwrap().witness, Some((2, 1)));
        }
    }

    #[test]
    fn condition_q_examples() {
        let i = ideal(3, &[&[1, 2], &[1, 3]]);
        assert!(condition_q(&i, &order(&i, &[&[1, 3], &[1, 2]])).unwrap().holds);
        let ci = ideal(4, &[&[1, 2], &[3, 4]]);
        assert!(!condition_q(&ci, &order(&ci, &[&[3, 4], &[1, 2]])).unwrap().holds);
        assert!(!condition_q(&ci, &order(&ci, &[&[1, 2], &[3, 4]])).unwrap().holds);
    }

    #[test]
    fn constructed_orders() {
        let k3 = ideal(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let o = construct_lq_order(&k3).unwrap();
        assert_eq!(o, order(&k3, &[&[2, 3], &[1, 3], &[1, 2]]));

        let sq = ideal(2, &[&[1, 1], &[1, 2]]);
        assert_eq!(construct_lq_order(&sq).unwrap(), order(&sq, &[&[1, 2], &[1, 1]]));

        // x2^2 goes directly below x1x2, the smallest x_k x_2
        let i = ideal(3, &[&[1, 2], &[2, 2], &[1, 3], &[2, 3]]);
        let o = construct_lq_order(&i).unwrap();
        assert_eq!(o, order(&i, &[&[2, 3], &[1, 3], &[1, 2], &[2, 2]]));

        let ci = ideal(4, &[&[1, 2], &[3, 4]]);
        match construct_lq_order(&ci) {
            Err(Error::ConditionViolated { condition, witness }) => {
                assert_eq!(condition, "(*)");
                assert_eq!(witness, (1, 2, 3));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn isolated_square_position() {
        // no x_1 x_2 in I
        let i = ideal(3, &[&[2, 2], &[1, 3], &[2, 3]]);
        let o = construct_lq_order(&i).unwrap();
        assert_eq!(o, order(&i, &[&[2, 3], &[1, 3], &[2, 2]]));
    }

    #[test]
    fn search_examples() {
        let i = ideal(3, &[&[1, 2], &[1, 3]]);
        let o = find_lq_order(&i, DEFAULT_NODE_BUDGET).unwrap().unwrap();
        assert!(has_linear_quotients(&i, &o).unwrap().holds);
        let ci = ideal(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(find_lq_order(&ci, DEFAULT_NODE_BUDGET).unwrap(), None);
        assert!(matches!(find_lq_order(&ci, 1), Err(Error::Inconclusive(_))));
    }

    #[test]
    fn invalid_orders_are_rejected() {
        let i = ideal(3, &[&[1, 2], &[1, 3]]);
        let bad = GeneratorOrder { indices: vec![0, 0] };
        assert!(has_linear_quotients(&i, &bad).is_err());
        assert!(GeneratorOrder::from_monomials(&i, &[mono(3, &[2, 3])]).is_err());
    }
}
