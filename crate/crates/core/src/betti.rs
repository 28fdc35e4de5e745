//! Graded Betti numbers of monomial ideals.
//!
//! [`koszul_betti`] computes the homology of the Koszul complex of
//! `x_1, ..., x_n` on `S/I` one multidegree at a time. A multidegree `a`
//! can only carry a nonzero Betti number when `x^a` is the lcm of the
//! generators dividing it, so every other multidegree is skipped.
//! [`hochster_oracle`] computes the same numbers for squarefree ideals from
//! reduced simplicial homology of induced subcomplexes of the
//! Stanley-Reisner complex; the two routes share nothing but the rank
//! routine.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ideal::{ideal_power, polarize, GenDegree, MonomialIdeal};
use crate::linalg::SparseMatrix;
use crate::monomial::Monomial;

/// Graded Betti numbers `beta_{i,j}(I)` over a field. Zero entries are
/// not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub field: FieldSpec,
    /// Common generator degree, if the ideal is equigenerated.
    pub degree: Option<u32>,
    entries: BTreeMap<(usize, u32), usize>,
    /// Internal degrees that were computed.
    pub window: (u32, u32),
    /// False when the window stopped short of the largest degree that can
    /// carry a Betti number.
    pub complete: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: u32,
    pub beta: usize,
}

/// Serialized form of a [`BettiTable`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub field: FieldSpec,
    pub entries: Vec<BettiEntry>,
    pub regularity: Option<u32>,
    pub linear: Option<bool>,
    pub complete: bool,
}

/// Limits for a Koszul computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiOptions {
    /// Internal degrees to compute; `None` computes every degree that can
    /// carry a Betti number.
    pub window: Option<RangeInclusive<u32>>,
    /// Largest admissible dimension of a single Koszul component.
    pub max_strand_dim: usize,
}

impl Default for BettiOptions {
    fn default() -> Self {
        BettiOptions {
            window: None,
            max_strand_dim: 1 << 16,
        }
    }
}

impl BettiTable {
    fn new(field: FieldSpec, degree: Option<u32>, window: (u32, u32), complete: bool) -> Self {
        BettiTable {
            field,
            degree,
            entries: BTreeMap::new(),
            window,
            complete,
        }
    }

    fn add(&mut self, i: usize, j: u32, beta: usize) {
        if beta > 0 {
            *self.entries.entry((i, j)).or_insert(0) += beta;
        }
    }

    pub fn get(&self, i: usize, j: u32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = BettiEntry> + '_ {
        self.entries.iter().map(|(&(i, j), &beta)| BettiEntry { i, j, beta })
    }

    /// Largest homological degree with a nonzero entry.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }

    /// `max { j - i : beta_{i,j} != 0 }`.
    pub fn regularity(&self) -> Result<u32> {
        if !self.complete {
            return Err(Error::Inconclusive(format!(
                "degree window {:?} too small to certify regularity",
                self.window
            )));
        }
        self.entries
            .keys()
            .map(|&(i, j)| j - i as u32)
            .max()
            .ok_or_else(|| Error::input("the zero ideal has no regularity"))
    }

    /// Whether `beta_{i,j} = 0` for all `j != i + d`.
    pub fn is_linear(&self) -> Result<bool> {
        let d = self
            .degree
            .ok_or_else(|| Error::input("linearity needs an equigenerated ideal"))?;
        if self.entries.keys().any(|&(i, j)| j != i as u32 + d) {
            return Ok(false);
        }
        if !self.complete {
            return Err(Error::Inconclusive(format!(
                "no non-linear entry within degree window {:?}",
                self.window
            )));
        }
        Ok(true)
    }

    /// Entries only, for comparing tables computed by different routes.
    pub fn same_numbers(&self, other: &BettiTable) -> bool {
        self.entries == other.entries
    }

    pub fn to_json(&self) -> BettiJson {
        BettiJson {
            field: self.field,
            entries: self.entries().collect(),
            regularity: self.regularity().ok(),
            linear: self.is_linear().ok(),
            complete: self.complete,
        }
    }

    /// Plain-text table in the usual `j - i` by `i` layout.
    pub fn render(&self) -> String {
        let Some(pd) = self.projective_dimension() else {
            return format!("{}: zero table\n", self.field);
        };
        let rows: Vec<u32> = {
            let mut r: Vec<u32> = self.entries.keys().map(|&(i, j)| j - i as u32).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let mut out = format!("{}\n", self.field);
        out.push_str("      ");
        for i in 0..=pd {
            out.push_str(&format!("{i:>5}"));
        }
        out.push('\n');
        for r in rows {
            out.push_str(&format!("{r:>4}: "));
            for i in 0..=pd {
                match self.get(i, r + i as u32) {
                    0 => out.push_str("    ."),
                    b => out.push_str(&format!("{b:>5}")),
                }
            }
            out.push('\n');
        }
        out
    }
}

fn ideal_degree(ideal: &MonomialIdeal) -> Option<u32> {
    match ideal.degree() {
        GenDegree::Equal(d) => Some(d),
        _ => None,
    }
}

/// Visits every exponent vector `0 <= a <= bound`.
fn for_each_below(bound: &[u32], mut f: impl FnMut(&[u32]) -> Result<()>) -> Result<()> {
    let mut a = vec![0u32; bound.len()];
    loop {
        f(&a)?;
        let mut p = 0;
        loop {
            if p == a.len() {
                return Ok(());
            }
            if a[p] < bound[p] {
                a[p] += 1;
                break;
            }
            a[p] = 0;
            p += 1;
        }
    }
}

/// Whether `x^a` is the lcm of the generators dividing it.
fn in_lcm_lattice(ideal: &MonomialIdeal, a: &Monomial) -> bool {
    let mut l = Monomial::one(ideal.nvars());
    let mut any = false;
    for g in ideal.gens() {
        if g.divides(a) {
            l = l.lcm(g);
            any = true;
        }
    }
    any && &l == a
}

/// Dimensions of `H_i(K(x; S/I))_a` for `i = 0..=|supp a|`.
fn koszul_homology_at(
    ideal: &MonomialIdeal,
    a: &Monomial,
    field: FieldSpec,
    max_dim: usize,
) -> Result<Vec<usize>> {
    let supp = a.support();
    let s = supp.len();
    // basis of K_i in multidegree a: subsets sigma of supp with x^{a - sigma} not in I
    let mut index: Vec<Option<usize>> = vec![None; 1 << s];
    let mut dims = vec![0usize; s + 1];
    let mut members: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
    for mask in 0u32..(1 << s) {
        let mut m = a.exps().to_vec();
        for (b, &v) in supp.iter().enumerate() {
            if mask >> b & 1 == 1 {
                m[v] -= 1;
            }
        }
        if !ideal.contains(&Monomial::new(m)) {
            let k = mask.count_ones() as usize;
            index[mask as usize] = Some(dims[k]);
            dims[k] += 1;
            members[k].push(mask);
        }
    }
    if let Some(&big) = dims.iter().max() {
        if big > max_dim {
            return Err(Error::ResourceLimit(format!(
                "Koszul component of dimension {big} at {a:?} exceeds cap {max_dim}"
            )));
        }
    }
    // rank of d_i : K_i -> K_{i-1}
    let mut ranks = vec![0usize; s + 2];
    for i in 1..=s {
        if dims[i] == 0 || dims[i - 1] == 0 {
            continue;
        }
        let mut mat = SparseMatrix::new(dims[i - 1], dims[i]);
        for &mask in &members[i] {
            let col = index[mask as usize].expect("basis element");
            let mut sign = 1i64;
            for b in 0..s {
                if mask >> b & 1 == 1 {
                    // e_sigma -> (-1)^pos e_{sigma - b} * x_b; zero when the image lies in I
                    if let Some(row) = index[(mask & !(1 << b)) as usize] {
                        mat.push(row, col, sign);
                    }
                    sign = -sign;
                }
            }
        }
        ranks[i] = field.rank(&mat)?;
    }
    Ok((0..=s)
        .map(|i| dims[i] - ranks[i] - ranks[i + 1])
        .collect())
}

/// Graded Betti numbers of a nonzero monomial ideal via Koszul homology.
pub fn koszul_betti(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    options: &BettiOptions,
) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::input("Betti numbers of the zero ideal are not defined here"));
    }
    let lcm = ideal.lcm_all();
    let top = lcm.degree();
    let min_deg = ideal.gens().iter().map(Monomial::degree).min().unwrap_or(0);
    let (lo, hi) = match &options.window {
        Some(w) => (*w.start(), *w.end()),
        None => (min_deg, top),
    };
    if lo > hi {
        return Err(Error::input(format!("empty degree window {lo}..={hi}")));
    }
    let complete = lo <= min_deg && hi >= top;
    let mut table = BettiTable::new(field, ideal_degree(ideal), (lo, hi), complete);
    for_each_below(lcm.exps(), |a| {
        let deg: u32 = a.iter().sum();
        if deg < lo || deg > hi {
            return Ok(());
        }
        let a = Monomial::new(a.to_vec());
        if !in_lcm_lattice(ideal, &a) {
            return Ok(());
        }
        let h = koszul_homology_at(ideal, &a, field, options.max_strand_dim)?;
        for (i, &dim) in h.iter().enumerate().skip(1) {
            table.add(i - 1, deg, dim);
        }
        Ok(())
    })?;
    Ok(table)
}

/// Reduced homology dimensions `dim H~_d(Delta_W)` for `d = -1..`, indexed
/// by `d + 1`. `faces` lists the faces of the Stanley-Reisner complex as
/// vertex bitmasks.
fn reduced_homology(faces: &[u64], field: FieldSpec) -> Result<Vec<usize>> {
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap_or(0);
    // by size: size 0 is the empty face in dimension -1
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        if by_size[k].is_empty() || by_size[k - 1].is_empty() {
            continue;
        }
        let lower: BTreeMap<u64, usize> =
            by_size[k - 1].iter().enumerate().map(|(r, &f)| (f, r)).collect();
        let mut mat = SparseMatrix::new(by_size[k - 1].len(), by_size[k].len());
        for (col, &f) in by_size[k].iter().enumerate() {
            let mut sign = 1i64;
            for v in 0..64 {
                if f >> v & 1 == 1 {
                    let row = lower[&(f & !(1 << v))];
                    mat.push(row, col, sign);
                    sign = -sign;
                }
            }
        }
        ranks[k] = field.rank(&mat)?;
    }
    Ok((0..=top)
        .map(|k| by_size[k].len() - ranks[k] - ranks[k + 1])
        .collect())
}

/// Betti numbers of a squarefree ideal from the Stanley-Reisner complex:
/// `beta_{i,W}(I) = dim H~_{|W| - i - 2}(Delta_W)` for vertex sets `W`.
pub fn hochster_oracle(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    if !ideal.is_squarefree() {
        return Err(Error::input("the Stanley-Reisner oracle needs a squarefree ideal"));
    }
    if ideal.is_zero() {
        return Err(Error::input("Betti numbers of the zero ideal are not defined here"));
    }
    let n = ideal.nvars();
    if n > 20 {
        return Err(Error::ResourceLimit(format!("{n} vertices is too many for the oracle")));
    }
    let gen_masks: Vec<u64> = ideal
        .gens()
        .iter()
        .map(|g| g.support().iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    let faces: Vec<u64> = (0u64..(1 << n))
        .filter(|&f| gen_masks.iter().all(|&g| g & f != g))
        .collect();
    let top = ideal.lcm_all().degree();
    let mut table = BettiTable::new(field, ideal_degree(ideal), (0, top), true);
    for w in 1u64..(1 << n) {
        let sub: Vec<u64> = faces.iter().copied().filter(|&f| f & w == f).collect();
        let h = reduced_homology(&sub, field)?;
        let size = w.count_ones() as usize;
        for (k, &dim) in h.iter().enumerate() {
            // homological degree i with |W| - i - 2 = k - 1
            if dim > 0 && size > k {
                table.add(size - k - 1, size as u32, dim);
            }
        }
    }
    Ok(table)
}

/// Whether an equigenerated ideal has a linear resolution over `field`.
///
/// Quadratic ideals with squares are also computed through their
/// polarization, and the two tables must agree.
pub fn is_linear_resolution(ideal: &MonomialIdeal, field: FieldSpec) -> Result<bool> {
    let d = ideal.equigenerated_degree()?;
    let table = koszul_betti(ideal, field, &BettiOptions::default())?;
    if d == 2 && !ideal.is_squarefree() {
        let polarized = koszul_betti(&polarize(ideal)?, field, &BettiOptions::default())?;
        if !polarized.same_numbers(&table) {
            return Err(Error::Falsification(format!(
                "polarization changed the Betti table of {ideal:?} over {field}"
            )));
        }
    }
    table.is_linear()
}

pub fn regularity(ideal: &MonomialIdeal, field: FieldSpec) -> Result<u32> {
    koszul_betti(ideal, field, &BettiOptions::default())?.regularity()
}

/// Linearity verdict for one power of an ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerVerdict {
    pub k: usize,
    pub generators: usize,
    pub degree: u32,
    pub linear: bool,
    pub regularity: u32,
    pub millis: u128,
}

/// Linearity of `I, I^2, ..., I^max_k` over `field`.
pub fn powers_linear_report(
    ideal: &MonomialIdeal,
    field: FieldSpec,
    max_k: usize,
    options: &BettiOptions,
) -> Result<Vec<PowerVerdict>> {
    ideal.equigenerated_degree()?;
    let mut out = Vec::with_capacity(max_k);
    for k in 1..=max_k {
        let start = Instant::now();
        let power = ideal_power(ideal, k)?;
        let table = koszul_betti(&power, field, options)?;
        out.push(PowerVerdict {
            k,
            generators: power.len(),
            degree: power.equigenerated_degree()?,
            linear: table.is_linear()?,
            regularity: table.regularity()?,
            millis: start.elapsed().as_millis(),
        });
    }
    Ok(out)
}
