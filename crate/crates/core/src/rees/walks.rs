//! Even closed walks in `Omega` and their binomials.
//!
//! A walk `(w_1, ..., w_{2m})` gives `f = prod y_{w_1 w_2} y_{w_3 w_4} ... -
//! prod y_{w_2 w_3} ... y_{w_{2m} w_1}` with `y_{i, n+1} = x_i`. The Graver
//! basis of `P` is the set of `f` for primitive walks, so every reduced
//! Groebner basis element must be realized by one.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

use super::binomial::Binomial;
use super::omega::OmegaGraph;

/// A cyclic vertex sequence of even length; consecutive vertices, and the
/// last and first, are adjacent in `Omega`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClosedWalk {
    pub vertices: Vec<usize>,
}

impl ClosedWalk {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    fn edge(&self, k: usize) -> (usize, usize) {
        let a = self.vertices[k];
        let b = self.vertices[(k + 1) % self.len()];
        (a.min(b), a.max(b))
    }

    /// Lexicographically least rotation or reflection.
    pub fn canonical(&self) -> ClosedWalk {
        let l = self.len();
        let mut best = self.vertices.clone();
        let rev: Vec<usize> = self.vertices.iter().rev().copied().collect();
        for seq in [&self.vertices, &rev] {
            for s in 0..l {
                let rot: Vec<usize> = (0..l).map(|k| seq[(s + k) % l]).collect();
                if rot < best {
                    best = rot;
                }
            }
        }
        ClosedWalk { vertices: best }
    }
}

/// The binomial of an even closed walk.
pub fn walk_to_binomial(omega: &OmegaGraph, walk: &ClosedWalk) -> Result<Binomial> {
    let l = walk.len();
    if l < 2 || l % 2 == 1 {
        return Err(Error::input(format!("walk of length {l} is not an even closed walk")));
    }
    let nv = omega.nvars();
    let mut sides = [vec![0u32; nv], vec![0u32; nv]];
    for k in 0..l {
        let (a, b) = walk.edge(k);
        let var = omega
            .variable_of_edge(a, b)
            .ok_or_else(|| Error::input(format!("{{{a},{b}}} is not an edge of Omega")))?;
        sides[k % 2][var] += 1;
    }
    let [plus, minus] = sides;
    let f = Binomial::new(Monomial::new(plus), Monomial::new(minus))
        .map_err(|_| Error::input("walk binomial is zero"))?;
    debug_assert!(f.in_toric_ideal(omega));
    Ok(f)
}

fn divisors(m: &Monomial) -> Vec<Monomial> {
    let mut out = vec![Monomial::one(m.nvars())];
    for (v, &e) in m.exps().iter().enumerate() {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            for k in 0..=e {
                let mut x = d.exps().to_vec();
                x[v] = k;
                next.push(Monomial::new(x));
            }
        }
        out = next;
    }
    out
}

/// Primitivity by definition: no binomial `a - b` of `P` other than `f`
/// itself has `a | f+` and `b | f-`.
pub fn is_primitive(omega: &OmegaGraph, f: &Binomial) -> bool {
    if !f.in_toric_ideal(omega) {
        return false;
    }
    let mut by_image: HashMap<Vec<u32>, Vec<Monomial>> = HashMap::new();
    for a in divisors(f.plus()) {
        if !a.is_one() {
            by_image.entry(omega.pi(&a)).or_default().push(a);
        }
    }
    for b in divisors(f.minus()) {
        if b.is_one() {
            continue;
        }
        if let Some(list) = by_image.get(&omega.pi(&b)) {
            for a in list {
                if a != &b && !(a == f.plus() && &b == f.minus()) {
                    return false;
                }
            }
        }
    }
    true
}

/// Result of [`enumerate_primitive_even_walks`]: one walk per binomial up
/// to sign, in canonical form, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkEnumeration {
    pub length_bound: usize,
    pub walks: Vec<(ClosedWalk, Binomial)>,
}

struct Dfs<'a> {
    omega: &'a OmegaGraph,
    bound: usize,
    path: Vec<usize>,
    first_pos: Vec<Option<usize>>,
    count: Vec<u8>,
    /// Parity at which each edge variable is used, with multiplicity.
    edge_use: HashMap<usize, (usize, usize)>,
    nodes: usize,
    budget: usize,
    found: BTreeMap<ClosedWalk, ()>,
}

impl Dfs<'_> {
    fn edge_allowed(&self, var: usize, parity: usize) -> bool {
        match self.edge_use.get(&var) {
            Some(&(p, c)) if c > 0 => p == parity,
            _ => true,
        }
    }

    fn use_edge(&mut self, var: usize, parity: usize, add: bool) {
        let e = self.edge_use.entry(var).or_insert((parity, 0));
        if add {
            e.0 = parity;
            e.1 += 1;
        } else {
            e.1 -= 1;
        }
    }

    fn visit_allowed(&self, v: usize, pos: usize) -> bool {
        match self.count[v] {
            0 => true,
            1 => (pos - self.first_pos[v].expect("visited")) % 2 == 1,
            _ => false,
        }
    }

    fn run(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::ResourceLimit(format!(
                "walk enumeration exceeded {} nodes",
                self.budget
            )));
        }
        let pos = self.path.len();
        let cur = *self.path.last().expect("start");
        let start = self.path[0];
        // close the walk with the edge at position pos - 1
        if pos.is_multiple_of(2) && pos >= 2 {
            if let Some(var) = self.omega.variable_of_edge(cur, start) {
                if self.edge_allowed(var, (pos - 1) % 2) {
                    self.found.insert(ClosedWalk { vertices: self.path.clone() }.canonical(), ());
                }
            }
        }
        if pos >= self.bound {
            return Ok(());
        }
        for next in self.omega.neighbors(cur) {
            // the least vertex of the walk is its start
            if next < start || !self.visit_allowed(next, pos) {
                continue;
            }
            let var = self.omega.variable_of_edge(cur, next).expect("neighbour");
            let parity = (pos - 1) % 2;
            if !self.edge_allowed(var, parity) {
                continue;
            }
            self.use_edge(var, parity, true);
            if self.count[next] == 0 {
                self.first_pos[next] = Some(pos);
            }
            self.count[next] += 1;
            self.path.push(next);
            self.run()?;
            self.path.pop();
            self.count[next] -= 1;
            if self.count[next] == 0 {
                self.first_pos[next] = None;
            }
            self.use_edge(var, parity, false);
        }
        Ok(())
    }
}

/// Default node budget for walk enumeration.
pub const DEFAULT_WALK_BUDGET: usize = 20_000_000;

/// Even closed walks of length at most `length_bound` with primitive
/// binomials.
///
/// The search only follows walks in which each vertex occurs at most twice,
/// with the two occurrences an odd distance apart, and no edge is used at
/// both parities; walks breaking these rules have binomials with a common
/// factor or a proper sub-walk. Primitivity of every candidate is then
/// checked by definition. Walks are therefore never longer than
/// `2 (n + 1)`, whatever the bound.
pub fn enumerate_primitive_even_walks(
    omega: &OmegaGraph,
    length_bound: usize,
) -> Result<WalkEnumeration> {
    if length_bound < 4 || length_bound % 2 == 1 {
        return Err(Error::input(format!(
            "walk length bound {length_bound} must be even and at least 4"
        )));
    }
    let nvert = omega.n() + 1;
    let mut dfs = Dfs {
        omega,
        bound: length_bound,
        path: Vec::new(),
        first_pos: vec![None; nvert + 1],
        count: vec![0; nvert + 1],
        edge_use: HashMap::new(),
        nodes: 0,
        budget: DEFAULT_WALK_BUDGET,
        found: BTreeMap::new(),
    };
    for s in 1..=nvert {
        dfs.path = vec![s];
        dfs.count[s] = 1;
        dfs.first_pos[s] = Some(0);
        dfs.run()?;
        dfs.count[s] = 0;
        dfs.first_pos[s] = None;
    }
    let mut walks: Vec<(ClosedWalk, Binomial)> = Vec::new();
    let mut seen: HashSet<Binomial> = HashSet::new();
    for walk in dfs.found.into_keys() {
        let Ok(f) = walk_to_binomial(omega, &walk) else {
            continue;
        };
        if seen.contains(&f) || seen.contains(&f.negate()) || !is_primitive(omega, &f) {
            continue;
        }
        seen.insert(f.clone());
        walks.push((walk, f));
    }
    Ok(WalkEnumeration {
        length_bound,
        walks,
    })
}

/// An even closed walk whose binomial is exactly `f`: the edges of `f+`
/// at even positions and those of `f-` at odd positions.
pub fn find_realizing_walk(omega: &OmegaGraph, f: &Binomial) -> Option<ClosedWalk> {
    let edges = |m: &Monomial| -> Vec<((usize, usize), u32)> {
        m.exps()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| (omega.edge_of_variable(v), e))
            .collect()
    };
    let mut left = [edges(f.plus()), edges(f.minus())];
    let total: u32 = left.iter().flatten().map(|(_, e)| e).sum();
    let ((a, b), _) = *left[0].first()?;
    left[0][0].1 -= 1;
    for (s, t) in [(a, b), (b, a)] {
        let mut path = vec![s, t];
        if extend_alternating(&mut left, &mut path, total as usize) {
            path.pop();
            return Some(ClosedWalk { vertices: path });
        }
        if a == b {
            break;
        }
    }
    None
}

fn extend_alternating(left: &mut [Vec<((usize, usize), u32)>; 2], path: &mut Vec<usize>, total: usize) -> bool {
    if path.len() == total + 1 {
        return path[0] == path[total];
    }
    let side = (path.len() - 1) % 2;
    let cur = *path.last().expect("nonempty");
    for k in 0..left[side].len() {
        let ((a, b), c) = left[side][k];
        if c == 0 || (a != cur && b != cur) {
            continue;
        }
        let next = if a == cur { b } else { a };
        left[side][k].1 -= 1;
        path.push(next);
        if extend_alternating(left, path, total) {
            return true;
        }
        path.pop();
        left[side][k].1 += 1;
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosscheckEntry {
    /// Index into the Groebner basis.
    pub index: usize,
    pub walk_length: usize,
    pub walk: Option<ClosedWalk>,
    pub primitive: bool,
    pub within_bound: bool,
}

/// Whether each reduced Groebner basis element is a primitive walk binomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosscheckReport {
    pub length_bound: usize,
    pub entries: Vec<CrosscheckEntry>,
    /// Some element needs a walk longer than the bound.
    pub insufficient_bound: bool,
    /// Every element within the bound is realized by a primitive walk.
    pub agrees: bool,
}

/// Realizes every Groebner basis element by a walk and checks primitivity.
/// Elements needing walks longer than `length_bound` are flagged rather
/// than searched.
pub fn graver_vs_groebner_crosscheck(
    omega: &OmegaGraph,
    gb: &[Binomial],
    length_bound: usize,
) -> CrosscheckReport {
    let entries: Vec<CrosscheckEntry> = gb
        .iter()
        .enumerate()
        .map(|(index, f)| {
            let walk_length = (f.plus().degree() + f.minus().degree()) as usize;
            let within_bound = walk_length <= length_bound;
            let walk = if within_bound {
                find_realizing_walk(omega, f)
            } else {
                None
            };
            if let Some(w) = &walk {
                debug_assert_eq!(walk_to_binomial(omega, w).as_ref(), Ok(f));
            }
            CrosscheckEntry {
                index,
                walk_length,
                walk,
                primitive: is_primitive(omega, f),
                within_bound,
            }
        })
        .collect();
    let insufficient_bound = entries.iter().any(|e| !e.within_bound);
    let agrees = entries
        .iter()
        .filter(|e| e.within_bound)
        .all(|e| e.walk.is_some() && e.primitive);
    CrosscheckReport {
        length_bound,
        entries,
        insufficient_bound,
        agrees,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{minimal_generators, MonomialIdeal};
    use crate::rees::{build_omega, reduced_groebner, toric_ideal_gens, TermOrder, DEFAULT_STEP_BUDGET};

    fn ideal(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        let ms: Vec<Monomial> = gens
            .iter()
            .map(|g| Monomial::from_vars(n, &g.iter().map(|v| v - 1).collect::<Vec<_>>()))
            .collect();
        minimal_generators(&ms, n).unwrap()
    }

    fn walk(v: &[usize]) -> ClosedWalk {
        ClosedWalk { vertices: v.to_vec() }
    }

    #[test]
    fn square_walk_binomial() {
        let c4 = ideal(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        let o = build_omega(&c4).unwrap();
        let f = walk_to_binomial(&o, &walk(&[1, 2, 3, 4])).unwrap();
        let names = o.variable_names();
        assert_eq!(f.plus().render(&names), "y1_2*y3_4");
        assert_eq!(f.minus().render(&names), "y1_4*y2_3");
        assert!(is_primitive(&o, &f));
        // exactly one primitive walk avoids the cone vertex
        let all = enumerate_primitive_even_walks(&o, 10).unwrap();
        let pure_y: Vec<_> = all.walks.iter().filter(|(_, f)| f.deg_x(4) == 0).collect();
        assert_eq!(pure_y.len(), 1);
        assert_eq!(pure_y[0].1.deg_y(4), 2);
    }

    #[test]
    fn cone_and_loop_conventions() {
        let o = build_omega(&ideal(3, &[&[1, 2], &[1, 3]])).unwrap();
        // 2 - 1 - 3 - 4(cone): y12 x3 - y13 x2
        let f = walk_to_binomial(&o, &walk(&[2, 1, 3, 4])).unwrap();
        assert_eq!(f.deg_x(3), 1);
        assert_eq!(f.plus().exps()[..3].iter().sum::<u32>(), 1);
        assert_eq!(f.minus().exps()[..3].iter().sum::<u32>(), 1);
        let o = build_omega(&ideal(2, &[&[1, 1], &[1, 2], &[2, 2]])).unwrap();
        // 1 -(loop)- 1 - 2 -(loop)- 2 - 1 ... : y11 y22 - y12^2
        let f = walk_to_binomial(&o, &walk(&[1, 1, 2, 2])).unwrap();
        let names = o.variable_names();
        assert_eq!(f.render(&names), "y1_1*y2_2 - y1_2^2");
        assert!(walk_to_binomial(&o, &walk(&[1, 2, 1])).is_err());
        assert!(walk_to_binomial(&o, &walk(&[1, 2, 1, 2])).is_err());
    }

    #[test]
    fn two_triangles_through_the_cone() {
        // triangles {1,2,5} and {3,4,5} meet at the cone vertex only
        let o = build_omega(&ideal(4, &[&[1, 2], &[3, 4]])).unwrap();
        let all = enumerate_primitive_even_walks(&o, 12).unwrap();
        let names = o.variable_names();
        // 1, 2, 5, 3, 4, 5
        let expected = "x3*x4*y1_2 - x1*x2*y3_4";
        let hits: Vec<&ClosedWalk> = all
            .walks
            .iter()
            .filter(|(_, f)| f.render(&names) == expected || f.negate().render(&names) == expected)
            .map(|(w, _)| w)
            .collect();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].len(), 6);
    }

    #[test]
    fn edgeless_base_graph() {
        // Omega is a star: no even closed walk has a nonzero binomial
        let o = build_omega(&MonomialIdeal::zero(3)).unwrap();
        assert!(enumerate_primitive_even_walks(&o, 8).unwrap().walks.is_empty());
        assert!(enumerate_primitive_even_walks(&o, 3).is_err());
    }

    #[test]
    fn enumeration_contains_the_groebner_basis() {
        for i in [
            ideal(2, &[&[1, 1], &[1, 2], &[2, 2]]),
            ideal(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]),
            ideal(4, &[&[1, 2], &[3, 4]]),
            ideal(3, &[&[1, 1], &[1, 2], &[1, 3], &[2, 3]]),
        ] {
            let o = build_omega(&i).unwrap();
            let p = toric_ideal_gens(&o, DEFAULT_STEP_BUDGET).unwrap();
            let gb = reduced_groebner(&p, &TermOrder::rees_lex(&o), DEFAULT_STEP_BUDGET).unwrap();
            let bound = 2 * o.edges().len();
            let all = enumerate_primitive_even_walks(&o, bound).unwrap();
            for g in &gb {
                assert!(all.walks.iter().any(|(_, f)| f.same_up_to_sign(g)), "{i:?}: {g:?}");
            }
            let report = graver_vs_groebner_crosscheck(&o, &gb, bound);
            assert!(report.agrees && !report.insufficient_bound);
        }
    }

    #[test]
    fn crosscheck_flags_short_bounds() {
        let o = build_omega(&ideal(2, &[&[1, 1], &[1, 2], &[2, 2]])).unwrap();
        let p = toric_ideal_gens(&o, DEFAULT_STEP_BUDGET).unwrap();
        let gb = reduced_groebner(&p, &TermOrder::rees_lex(&o), DEFAULT_STEP_BUDGET).unwrap();
        assert_eq!(gb.len(), 3);
        let report = graver_vs_groebner_crosscheck(&o, &gb, 2);
        assert!(report.insufficient_bound);
        assert!(report.entries.iter().all(|e| e.walk.is_none()));
    }

    #[test]
    fn non_primitive_binomials_are_detected() {
        let o = build_omega(&ideal(2, &[&[1, 1], &[1, 2], &[2, 2]])).unwrap();
        // x1 (y11 y22 - y12^2)
        let f = Binomial::new(Monomial::new(vec![1, 0, 1, 0, 1]), Monomial::new(vec![1, 0, 0, 2, 0])).unwrap();
        assert!(f.in_toric_ideal(&o));
        assert!(!is_primitive(&o, &f));
    }

    #[test]
    fn canonical_form() {
        assert_eq!(walk(&[3, 1, 2, 4]).canonical(), walk(&[1, 2, 4, 3]));
        assert_eq!(walk(&[2, 1, 4, 3]).canonical(), walk(&[1, 2, 3, 4]));
    }
}
