//! Simplicial complexes given by facets, leaves and leaf orders.

use serde::{Deserialize, Serialize};

use crate::chordal::verify_peo;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A simplicial complex on vertices `1..=n`, stored by its facets.
/// Facets are sorted vertex lists, kept in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Vec<usize>>,
}

/// Facet indices `F_1, ..., F_m` such that each `F_i` is a leaf of
/// `<F_1, ..., F_i>`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeafOrder {
    pub ordering: Vec<usize>,
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|v| b.binary_search(v).is_ok()).collect()
}

impl SimplicialComplex {
    /// The complex generated by `faces`; non-maximal faces are dropped.
    pub fn from_faces(n: usize, faces: &[Vec<usize>]) -> Result<Self> {
        let mut fs: Vec<Vec<usize>> = Vec::new();
        for f in faces {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            if f.iter().any(|&v| v == 0 || v > n) {
                return Err(Error::input(format!("face {f:?} outside 1..={n}")));
            }
            fs.push(f);
        }
        fs.sort();
        fs.dedup();
        let facets: Vec<Vec<usize>> = fs
            .iter()
            .filter(|f| !fs.iter().any(|g| g.len() > f.len() && is_subset(f, g)))
            .cloned()
            .collect();
        Ok(SimplicialComplex { n, facets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Graph of all edges contained in some facet.
    pub fn one_skeleton(&self) -> Graph {
        let mut adj = vec![vec![false; self.n + 1]; self.n + 1];
        let mut e = Vec::new();
        for f in &self.facets {
            for (a, &u) in f.iter().enumerate() {
                for &v in &f[a + 1..] {
                    if !adj[u][v] {
                        adj[u][v] = true;
                        e.push((u, v));
                    }
                }
            }
        }
        Graph::new(self.n, &e).expect("skeleton")
    }

    fn is_leaf_among(&self, subset: &[usize], f: usize) -> bool {
        if subset.len() == 1 {
            return subset[0] == f;
        }
        let face = &self.facets[f];
        let cuts: Vec<Vec<usize>> = subset
            .iter()
            .filter(|&&h| h != f)
            .map(|&h| intersect(&self.facets[h], face))
            .collect();
        subset.iter().filter(|&&g| g != f).any(|&g| {
            let branch = intersect(&self.facets[g], face);
            cuts.iter().all(|c| is_subset(c, &branch))
        })
    }

    /// Whether facet `f` is a leaf: it is the only facet, or some other
    /// facet contains every intersection of `f` with the remaining facets.
    pub fn is_leaf(&self, f: usize) -> bool {
        let all: Vec<usize> = (0..self.facets.len()).collect();
        f < self.facets.len() && self.is_leaf_among(&all, f)
    }

    /// Vertices of facet `f` that lie in no other facet.
    pub fn free_vertices(&self, f: usize) -> Vec<usize> {
        let all: Vec<usize> = (0..self.facets.len()).collect();
        self.free_vertices_among(&all, f)
    }

    fn free_vertices_among(&self, subset: &[usize], f: usize) -> Vec<usize> {
        self.facets[f]
            .iter()
            .copied()
            .filter(|v| {
                subset
                    .iter()
                    .all(|&h| h == f || self.facets[h].binary_search(v).is_err())
            })
            .collect()
    }

    /// A leaf order, found by repeatedly removing a leaf of the remaining
    /// subcomplex (the first leaf in facet order). `None` when the greedy
    /// removal gets stuck, i.e. the complex is not a quasi-tree.
    pub fn leaf_order(&self) -> Option<LeafOrder> {
        let mut remaining: Vec<usize> = (0..self.facets.len()).collect();
        let mut removed = Vec::with_capacity(remaining.len());
        while !remaining.is_empty() {
            let pos = remaining
                .iter()
                .position(|&f| self.is_leaf_among(&remaining, f))?;
            removed.push(remaining.remove(pos));
        }
        removed.reverse();
        let order = LeafOrder { ordering: removed };
        debug_assert!(self.is_leaf_order(&order));
        Some(order)
    }

    /// Checks the leaf property on every prefix of `order`.
    pub fn is_leaf_order(&self, order: &LeafOrder) -> bool {
        let mut seen = order.ordering.clone();
        seen.sort_unstable();
        if seen != (0..self.facets.len()).collect::<Vec<_>>() {
            return false;
        }
        (0..order.ordering.len()).all(|i| {
            let prefix = &order.ordering[..=i];
            self.is_leaf_among(prefix, order.ordering[i])
        })
    }

    /// Free vertices of facet `f` within the subcomplex generated by the
    /// facets in `subset`.
    pub fn free_vertices_in(&self, subset: &[usize], f: usize) -> Vec<usize> {
        self.free_vertices_among(subset, f)
    }
}

/// The clique complex of a chordal graph, from a perfect elimination
/// ordering: each vertex together with its later neighbours is a clique, and
/// every maximal clique arises this way.
pub fn clique_complex(g: &Graph, peo: &[usize]) -> Result<SimplicialComplex> {
    if verify_peo(g, peo).is_err() {
        return Err(Error::input("not a perfect elimination ordering"));
    }
    let mut pos = vec![0usize; g.n() + 1];
    for (p, &v) in peo.iter().enumerate() {
        pos[v] = p;
    }
    let cliques: Vec<Vec<usize>> = peo
        .iter()
        .map(|&v| {
            let mut c: Vec<usize> = g.neighbors(v).into_iter().filter(|&u| pos[u] > pos[v]).collect();
            c.push(v);
            c
        })
        .collect();
    SimplicialComplex::from_faces(g.n(), &cliques)
}

/// The complex of all cliques of any graph, from its maximal cliques
/// (Bron-Kerbosch with pivoting).
pub fn flag_complex(g: &Graph) -> SimplicialComplex {
    fn expand(g: &Graph, r: &mut Vec<usize>, mut p: Vec<usize>, mut x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| g.has_edge(u, v)).count())
            .expect("nonempty");
        let candidates: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
        for v in candidates {
            r.push(v);
            let np = p.iter().copied().filter(|&u| u != v && g.has_edge(u, v)).collect();
            let nx = x.iter().copied().filter(|&u| u != v && g.has_edge(u, v)).collect();
            expand(g, r, np, nx, out);
            r.pop();
            p.retain(|&u| u != v);
            x.push(v);
        }
    }
    let mut cliques = Vec::new();
    expand(g, &mut Vec::new(), (1..=g.n()).collect(), Vec::new(), &mut cliques);
    if g.n() == 0 {
        cliques.clear();
    }
    SimplicialComplex::from_faces(g.n(), &cliques).expect("cliques lie in 1..=n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chordal::{is_chordal, Chordality};
    use std::collections::HashMap;

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_faces(n, &facets.iter().map(|f| f.to_vec()).collect::<Vec<_>>())
            .unwrap()
    }

    /// Exhaustive over all orderings: memoized search on facet subsets.
    fn has_leaf_order_exhaustive(
        c: &SimplicialComplex,
        mask: u32,
        memo: &mut HashMap<u32, bool>,
    ) -> bool {
        if mask.count_ones() <= 1 {
            return true;
        }
        if let Some(&r) = memo.get(&mask) {
            return r;
        }
        let subset: Vec<usize> = (0..c.facets().len()).filter(|i| mask >> i & 1 == 1).collect();
        let r = subset.iter().any(|&f| {
            c.is_leaf_among(&subset, f) && has_leaf_order_exhaustive(c, mask & !(1 << f), memo)
        });
        memo.insert(mask, r);
        r
    }

    fn clique_complex_of(g: &Graph) -> Option<SimplicialComplex> {
        match is_chordal(g) {
            Chordality::Chordal { peo } => Some(clique_complex(g, &peo).unwrap()),
            Chordality::NotChordal { .. } => None,
        }
    }

    #[test]
    fn clique_complex_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(clique_complex_of(&k3).unwrap().facets(), &[vec![1, 2, 3]]);
        let p3 = Graph::new(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(clique_complex_of(&p3).unwrap().facets(), &[vec![1, 2], vec![2, 3]]);
        let e3 = Graph::empty(3);
        assert_eq!(
            clique_complex_of(&e3).unwrap().facets(),
            &[vec![1], vec![2], vec![3]]
        );
        assert!(clique_complex(&p3, &[2, 1, 3]).is_err());
    }

    #[test]
    fn leaf_examples() {
        assert!(cx(3, &[&[1, 2, 3]]).is_leaf(0));
        let path = cx(4, &[&[1, 2], &[2, 3], &[3, 4]]);
        assert_eq!(path.facets()[1], vec![2, 3]);
        // {2,3} meets {1,2} in {2} and {3,4} in {3}; neither branch absorbs both
        assert!(!path.is_leaf(1));
        assert!(path.is_leaf(0));
        assert!(path.leaf_order().is_some());
    }

    #[test]
    fn triangle_boundary_has_no_leaf_order() {
        let boundary = cx(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        assert!(boundary.leaf_order().is_none());
        // exhaustive check over all 3! orderings
        let mut memo = HashMap::new();
        assert!(!has_leaf_order_exhaustive(&boundary, 0b111, &mut memo));
        // each facet meets the other two in different vertices
        assert!((0..3).all(|f| !boundary.is_leaf(f)));
    }

    #[test]
    fn free_vertex_examples() {
        assert_eq!(cx(3, &[&[1, 2, 3]]).free_vertices(0), vec![1, 2, 3]);
        let c = cx(3, &[&[1, 2], &[2, 3]]);
        assert_eq!(c.free_vertices(0), vec![1]);
        assert_eq!(c.free_vertices(1), vec![3]);
    }

    #[test]
    fn single_facet_is_a_quasi_tree() {
        let c = cx(4, &[&[1, 2, 3, 4]]);
        assert_eq!(c.leaf_order().unwrap().ordering, vec![0]);
    }

    #[test]
    fn chordal_iff_clique_complex_has_leaf_order() {
        // both directions, all graphs on n <= 6; for non-chordal graphs the
        // complex of all cliques is built by brute force
        for n in 1..=6 {
            for g in Graph::all_simple(n) {
                let chordal = is_chordal(&g).is_chordal();
                let c = match clique_complex_of(&g) {
                    Some(c) => c,
                    None => flag_complex(&g),
                };
                assert_eq!(c.one_skeleton(), g);
                let greedy = c.leaf_order();
                let mut memo = HashMap::new();
                let full = (1u32 << c.facets().len()) - 1;
                let exhaustive = has_leaf_order_exhaustive(&c, full, &mut memo);
                assert_eq!(greedy.is_some(), exhaustive, "{g:?}");
                assert_eq!(greedy.is_some(), chordal, "{g:?}");
                if let Some(o) = greedy {
                    assert!(c.is_leaf_order(&o));
                }
            }
        }
    }

    fn brute_clique_complex(g: &Graph) -> SimplicialComplex {
        let n = g.n();
        let mut cliques = Vec::new();
        for mask in 1u32..(1 << n) {
            let vs: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            let clique = vs
                .iter()
                .enumerate()
                .all(|(a, &u)| vs[a + 1..].iter().all(|&v| g.has_edge(u, v)));
            if clique {
                cliques.push(vs);
            }
        }
        SimplicialComplex::from_faces(n, &cliques).unwrap()
    }

    #[test]
    fn flag_complex_matches_brute_force() {
        for n in 1..=6 {
            for g in Graph::all_simple(n) {
                assert_eq!(flag_complex(&g), brute_clique_complex(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn clique_complex_matches_brute_force() {
        for n in 1..=6 {
            for g in Graph::all_simple(n) {
                if let Some(c) = clique_complex_of(&g) {
                    assert_eq!(c, brute_clique_complex(&g));
                    assert!(c.facets().len() <= n);
                }
            }
        }
    }
}
