//! Monomial ideals represented by their minimal generating sets.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Common degree of the minimal generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenDegree {
    /// The zero ideal has no generators.
    Zero,
    Equal(u32),
    Mixed,
}

/// A monomial ideal in `n` variables given by its unique minimal generating
/// set `G(I)`, stored in canonical order (degree, then lexicographic with
/// `x1` most significant).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Result of splitting a quadratic ideal into squares and squarefree part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeSplit {
    /// The ideal generated by the squarefree generators.
    pub part: MonomialIdeal,
    /// 1-based indices `i` with `x_i^2` among the minimal generators.
    pub squares: Vec<usize>,
}

/// Computes the minimal generating set of the ideal generated by `monomials`.
pub fn minimal_generators(monomials: &[Monomial], n: usize) -> Result<MonomialIdeal> {
    for m in monomials {
        if m.nvars() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: m.nvars(),
            });
        }
    }
    if monomials.iter().any(Monomial::is_one) {
        return Err(Error::input("the unit ideal is not supported"));
    }
    let mut sorted = monomials.to_vec();
    sorted.sort_by(Monomial::canonical_cmp);
    sorted.dedup();
    let mut gens: Vec<Monomial> = Vec::with_capacity(sorted.len());
    for m in sorted {
        // divisors have smaller degree, so they were kept earlier
        if !gens.iter().any(|g| g.divides(&m)) {
            gens.push(m);
        }
    }
    Ok(MonomialIdeal { n, gens })
}

/// Minimal generators of `I^k`, from all products of `k` generators taken
/// with repetition.
pub fn ideal_power(ideal: &MonomialIdeal, k: usize) -> Result<MonomialIdeal> {
    if k == 0 {
        return Err(Error::input("power 0 is the unit ideal, which is not supported"));
    }
    if k == 1 || ideal.is_zero() {
        return Ok(ideal.clone());
    }
    let m = ideal.gens.len();
    let mut products = Vec::new();
    let mut idx = vec![0usize; k];
    loop {
        let mut p = Monomial::one(ideal.n);
        for &i in &idx {
            p = p.mul(&ideal.gens[i]);
        }
        products.push(p);
        // next non-decreasing index tuple
        let Some(pos) = (0..k).rev().find(|&t| idx[t] + 1 < m) else {
            break;
        };
        let v = idx[pos] + 1;
        for t in idx.iter_mut().skip(pos) {
            *t = v;
        }
    }
    minimal_generators(&products, ideal.n)
}

/// Splits a quadratic ideal `I = (x_{i1}^2, ..., x_{ik}^2, J)`.
pub fn squarefree_part(ideal: &MonomialIdeal) -> Result<SquarefreeSplit> {
    ideal.require_quadratic()?;
    let mut squares = Vec::new();
    let mut part = Vec::new();
    for g in &ideal.gens {
        if g.is_squarefree() {
            part.push(g.clone());
        } else {
            squares.push(g.support()[0] + 1);
        }
    }
    Ok(SquarefreeSplit {
        part: MonomialIdeal {
            n: ideal.n,
            gens: part,
        },
        squares,
    })
}

/// Polarization of a quadratic ideal: the `j`-th square `x_i^2` (ascending
/// `i`) becomes `x_i * x_{n+j}`. Squarefree generators are unchanged.
pub fn polarize(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let split = squarefree_part(ideal)?;
    let n = ideal.n + split.squares.len();
    let mut gens: Vec<Monomial> = split.part.gens.iter().map(|g| g.extend(n)).collect();
    for (j, &i) in split.squares.iter().enumerate() {
        gens.push(Monomial::from_vars(n, &[i - 1, ideal.n + j]));
    }
    minimal_generators(&gens, n)
}

impl MonomialIdeal {
    /// The zero ideal in `n` variables.
    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn degree(&self) -> GenDegree {
        let mut it = self.gens.iter().map(Monomial::degree);
        let Some(d) = it.next() else {
            return GenDegree::Zero;
        };
        if it.all(|e| e == d) {
            GenDegree::Equal(d)
        } else {
            GenDegree::Mixed
        }
    }

    /// The common generator degree, or an input error.
    pub fn equigenerated_degree(&self) -> Result<u32> {
        match self.degree() {
            GenDegree::Equal(d) => Ok(d),
            GenDegree::Zero => Err(Error::input("the zero ideal has no generation degree")),
            GenDegree::Mixed => Err(Error::input("ideal is not equigenerated")),
        }
    }

    /// Checks that every generator has degree 2 (the zero ideal passes).
    pub fn require_quadratic(&self) -> Result<()> {
        match self.degree() {
            GenDegree::Zero | GenDegree::Equal(2) => Ok(()),
            _ => Err(Error::input("ideal must be generated by quadratic monomials")),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Ideal membership of a monomial.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Membership of `x_i x_j` (1-based, `i == j` allowed).
    pub fn contains_product(&self, i: usize, j: usize) -> bool {
        self.contains(&Monomial::from_vars(self.n, &[i - 1, j - 1]))
    }

    /// Index of a generator in `G(I)`.
    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.gens.iter().position(|g| g == m)
    }

    /// Least common multiple of all generators.
    pub fn lcm_all(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::one(self.n), |acc, g| acc.lcm(g))
    }

    /// Renumber variables: old variable `i` (0-based) becomes `new_of_old[i]`.
    pub fn permute_variables(&self, new_of_old: &[usize]) -> Result<MonomialIdeal> {
        if new_of_old.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: new_of_old.len(),
            });
        }
        let gens: Vec<Monomial> = self.gens.iter().map(|g| g.permute(new_of_old)).collect();
        minimal_generators(&gens, self.n)
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g:?}")?;
        }
        write!(f, ") in {} variables", self.n)
    }
}
