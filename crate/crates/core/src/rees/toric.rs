//! Generators of the toric ideal `P` from an integer kernel basis.
//!
//! The binomials of a kernel basis generate a lattice ideal whose
//! saturation by the product of all variables is `P`. Saturation by one
//! variable `v` is read off a Groebner basis in reverse lexicographic order
//! with `v` smallest: dividing each element by its largest power of `v`
//! gives generators of `J : v^inf`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

use super::binomial::{Binomial, OrderKind, TermOrder};
use super::groebner::reduced_groebner;
use super::omega::OmegaGraph;

/// Degree up to which Hilbert functions are compared by default.
pub const DEFAULT_HILBERT_BOUND: u32 = 3;

fn overflow() -> Error {
    Error::ResourceLimit("integer overflow in kernel computation".into())
}

/// A basis of the integer kernel `{u : A u = 0}` of a matrix given by rows,
/// via unimodular column operations.
pub fn lattice_kernel(rows: &[Vec<i64>], ncols: usize) -> Result<Vec<Vec<i64>>> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| {
            if r.len() != ncols {
                return Err(Error::LengthMismatch {
                    expected: ncols,
                    found: r.len(),
                });
            }
            Ok(r.iter().map(|&x| x as i128).collect())
        })
        .collect::<Result<_>>()?;
    // u[c] is column c of the transform
    let mut u: Vec<Vec<i128>> = (0..ncols)
        .map(|c| (0..ncols).map(|r| i128::from(r == c)).collect())
        .collect();
    let col_sub = |a: &mut Vec<Vec<i128>>, u: &mut Vec<Vec<i128>>, dst: usize, src: usize, q: i128| -> Result<()> {
        for row in a.iter_mut() {
            row[dst] = row[dst]
                .checked_sub(q.checked_mul(row[src]).ok_or_else(overflow)?)
                .ok_or_else(overflow)?;
        }
        for r in 0..u[dst].len() {
            let s = u[src][r];
            u[dst][r] = u[dst][r]
                .checked_sub(q.checked_mul(s).ok_or_else(overflow)?)
                .ok_or_else(overflow)?;
        }
        Ok(())
    };
    let mut k = 0;
    for r in 0..a.len() {
        if k == ncols {
            break;
        }
        while let Some(p) = (k..ncols)
            .filter(|&c| a[r][c] != 0)
            .min_by_key(|&c| a[r][c].unsigned_abs())
        {
            if p != k {
                for row in a.iter_mut() {
                    row.swap(p, k);
                }
                u.swap(p, k);
            }
            let mut done = true;
            for c in k + 1..ncols {
                if a[r][c] != 0 {
                    let q = a[r][c].div_euclid(a[r][k]);
                    col_sub(&mut a, &mut u, c, k, q)?;
                    done &= a[r][c] == 0;
                }
            }
            if done {
                k += 1;
                break;
            }
        }
    }
    u[k..]
        .iter()
        .map(|col| {
            col.iter()
                .map(|&x| i64::try_from(x).map_err(|_| overflow()))
                .collect()
        })
        .collect()
}

fn divide_out(m: &Monomial, var: usize, k: u32) -> Monomial {
    let mut e = m.exps().to_vec();
    e[var] -= k;
    Monomial::new(e)
}

/// Generators of `P = ker pi`, returned as the reduced Groebner basis in
/// graded reverse lexicographic order and certified by [`certify_toric`].
#[allow(clippy::needless_range_loop)]
pub fn toric_ideal_gens(omega: &OmegaGraph, step_budget: usize) -> Result<Vec<Binomial>> {
    let nv = omega.nvars();
    let n = omega.n();
    let mut rows = vec![vec![0i64; nv]; n + 1];
    for v in 0..nv {
        let (a, b) = omega.edge_of_variable(v);
        rows[a - 1][v] += 1;
        rows[b - 1][v] += 1;
    }
    let kernel = lattice_kernel(&rows, nv)?;
    let mut gens: Vec<Binomial> = kernel
        .iter()
        .map(|u| Binomial::from_vector(u))
        .collect::<Result<_>>()?;
    if gens.is_empty() {
        return Ok(gens);
    }
    for v in 0..nv {
        let gb = reduced_groebner(&gens, &TermOrder::grevlex_with_last(nv, v), step_budget)?;
        gens = gb
            .into_iter()
            .map(|g| {
                let k = g.plus().exp(v).min(g.minus().exp(v));
                Binomial::new(divide_out(g.plus(), v, k), divide_out(g.minus(), v, k))
            })
            .collect::<Result<_>>()?;
    }
    let order = TermOrder::natural(OrderKind::GrevLex, nv);
    let gb = reduced_groebner(&gens, &order, step_budget)?;
    certify_toric(omega, &gb, &order, DEFAULT_HILBERT_BOUND)?;
    Ok(gb)
}

fn for_each_monomial(nvars: usize, degree: u32, f: &mut impl FnMut(&[u32])) {
    fn rec(e: &mut Vec<u32>, var: usize, left: u32, f: &mut impl FnMut(&[u32])) {
        if var + 1 == e.len() {
            e[var] = left;
            f(e);
            e[var] = 0;
            return;
        }
        for k in (0..=left).rev() {
            e[var] = k;
            rec(e, var + 1, left - k, f);
        }
        e[var] = 0;
    }
    if nvars == 0 {
        if degree == 0 {
            f(&[]);
        }
        return;
    }
    rec(&mut vec![0; nvars], 0, degree, f);
}

/// Checks that a Groebner basis for `order` generates `P` in degrees up to
/// `bound`: every element lies in `P`, and in each degree the standard
/// monomials are as many as the distinct images under `pi`.
pub fn certify_toric(omega: &OmegaGraph, gb: &[Binomial], order: &TermOrder, bound: u32) -> Result<()> {
    for g in gb {
        if !g.in_toric_ideal(omega) {
            return Err(Error::Falsification(format!(
                "{} does not lie in the toric ideal",
                g.render(&omega.variable_names())
            )));
        }
    }
    let leads: Vec<Monomial> = gb.iter().map(|g| g.oriented(order).plus().clone()).collect();
    let nv = omega.nvars();
    for d in 1..=bound {
        let mut standard = 0usize;
        let mut images: HashSet<Vec<u32>> = HashSet::new();
        for_each_monomial(nv, d, &mut |e| {
            let m = Monomial::new(e.to_vec());
            if !leads.iter().any(|l| l.divides(&m)) {
                standard += 1;
            }
            images.insert(omega.pi(&m));
        });
        if standard != images.len() {
            return Err(Error::Falsification(format!(
                "degree {d}: {standard} standard monomials but {} monomials in the image",
                images.len()
            )));
        }
    }
    Ok(())
}

/// Result of checking `deg_x(f) <= 1` on a Groebner basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct XDegreeReport {
    pub holds: bool,
    pub max_deg_x: u32,
    /// Index of the first element with `deg_x > 1`.
    pub witness: Option<usize>,
}

pub fn x_degree_check(gb: &[Binomial], n: usize) -> XDegreeReport {
    let degs: Vec<u32> = gb.iter().map(|g| g.deg_x(n)).collect();
    let witness = degs.iter().position(|&d| d > 1);
    XDegreeReport {
        holds: witness.is_none(),
        max_deg_x: degs.iter().copied().max().unwrap_or(0),
        witness,
    }
}
