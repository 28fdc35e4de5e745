//! Vertex renumbering from leaf orders and the combinatorial conditions on
//! quadratic ideals that drive the linear-quotient and Groebner constructions.

use serde::{Deserialize, Serialize};

use crate::chordal::{is_chordal, Chordality};
use crate::complex::{clique_complex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{graph_of_ideal, Graph};
use crate::ideal::{squarefree_part, MonomialIdeal};

/// A bijective relabeling of `1..=n`: vertex `v` gets label `new_of_old[v-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexLabeling {
    pub new_of_old: Vec<usize>,
}

impl VertexLabeling {
    pub fn identity(n: usize) -> Self {
        VertexLabeling {
            new_of_old: (1..=n).collect(),
        }
    }

    pub fn is_bijective(&self) -> bool {
        let mut s = self.new_of_old.clone();
        s.sort_unstable();
        s == (1..=self.new_of_old.len()).collect::<Vec<_>>()
    }

    /// Renumber the variables of an ideal.
    pub fn apply(&self, ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
        let zero_based: Vec<usize> = self.new_of_old.iter().map(|v| v - 1).collect();
        ideal.permute_variables(&zero_based)
    }

    pub fn apply_graph(&self, g: &Graph) -> Result<Graph> {
        g.relabel(&self.new_of_old)
    }
}

/// Outcome of a combinatorial check; the witness is `(i, j, k)`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionCheck {
    pub holds: bool,
    pub witness: Option<(usize, usize, usize)>,
}

impl ConditionCheck {
    fn pass() -> Self {
        ConditionCheck {
            holds: true,
            witness: None,
        }
    }

    fn fail(i: usize, j: usize, k: usize) -> Self {
        ConditionCheck {
            holds: false,
            witness: Some((i, j, k)),
        }
    }
}

/// Clique complex of a chordal graph, or the chordless-cycle witness.
pub fn clique_complex_of_chordal(g: &Graph) -> Result<SimplicialComplex> {
    match is_chordal(g) {
        Chordality::Chordal { peo } => clique_complex(g, &peo),
        Chordality::NotChordal { cycle } => Err(Error::NotChordal { cycle }),
    }
}

/// Renumbering that makes the edge ideal of `g` satisfy condition (*).
///
/// The clique complex of the complement is peeled along a leaf order from
/// the last facet backwards; the free vertices of each facet receive the
/// largest labels not yet used, in ascending order of original index.
pub fn dirac_labeling(g: &Graph) -> Result<VertexLabeling> {
    let n = g.n();
    let complex = clique_complex_of_chordal(&g.complement()?)?;
    let order = complex.leaf_order().ok_or_else(|| {
        Error::Falsification("clique complex of a chordal graph has no leaf order".into())
    })?;
    let mut new_of_old = vec![0usize; n];
    let mut next = n;
    let facets = &order.ordering;
    for t in (0..facets.len()).rev() {
        let prefix = &facets[..=t];
        let free = complex.free_vertices_in(prefix, facets[t]);
        let block = free.len();
        for (offset, v) in free.into_iter().enumerate() {
            debug_assert_eq!(new_of_old[v - 1], 0);
            new_of_old[v - 1] = next + 1 - block + offset;
        }
        next -= block;
    }
    let labeling = VertexLabeling { new_of_old };
    if next != 0 || !labeling.is_bijective() {
        return Err(Error::Falsification(
            "peeling the leaf order did not label every vertex".into(),
        ));
    }
    Ok(labeling)
}

/// Condition (*): whenever `x_i x_j` is in `I` with `i != j` and `k > i, j`,
/// then `x_i x_k` or `x_j x_k` is in `I`.
pub fn check_star(ideal: &MonomialIdeal) -> Result<ConditionCheck> {
    ideal.require_quadratic()?;
    let n = ideal.nvars();
    for g in ideal.gens().iter().filter(|g| g.is_squarefree()) {
        let s = g.support();
        let (i, j) = (s[0] + 1, s[1] + 1);
        for k in j + 1..=n {
            if !ideal.contains_product(i, k) && !ideal.contains_product(j, k) {
                return Ok(ConditionCheck::fail(i, j, k));
            }
        }
    }
    Ok(ConditionCheck::pass())
}

/// Condition (**): whenever `x_i^2` is in `I` and `j > i` with `x_k x_j` in
/// `I` for some `k`, then `x_i x_j` or `x_i x_k` is in `I`.
pub fn check_star_star(ideal: &MonomialIdeal) -> Result<ConditionCheck> {
    let split = squarefree_part(ideal)?;
    for &i in &split.squares {
        for g in ideal.gens() {
            let s = g.support();
            let (a, b) = (s[0] + 1, *s.last().unwrap() + 1);
            let mut pairs = vec![(b, a)];
            if a != b {
                pairs.push((a, b));
            }
            for (j, k) in pairs {
                if j > i && !ideal.contains_product(i, j) && !ideal.contains_product(i, k) {
                    return Ok(ConditionCheck::fail(i, j, k));
                }
            }
        }
    }
    Ok(ConditionCheck::pass())
}

/// Why the free-vertex condition on squares failed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FreeVertexWitness {
    /// `x_i^2` is a generator but `i` lies in several facets.
    NotFree { vertex: usize, facets: usize },
    /// Two square indices lie in a common facet.
    SharedFacet { first: usize, second: usize, facet: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeVertexCheck {
    pub holds: bool,
    pub witness: Option<FreeVertexWitness>,
    /// Facets of the clique complex of the complement of the squarefree part.
    pub facets: Vec<Vec<usize>>,
}

/// For `I = (squares, J)`: each square index must be a free vertex of the
/// clique complex of the complement of the graph of `J`, and no two square
/// indices may share a facet.
pub fn check_free_vertex_squares(ideal: &MonomialIdeal) -> Result<FreeVertexCheck> {
    let split = squarefree_part(ideal)?;
    let g = graph_of_ideal(&split.part)?;
    let complex = clique_complex_of_chordal(&g.complement()?)?;
    let facets = complex.facets().to_vec();
    let containing = |v: usize| -> Vec<usize> {
        (0..facets.len())
            .filter(|&f| facets[f].binary_search(&v).is_ok())
            .collect()
    };
    let mut witness = None;
    'outer: for (a, &i) in split.squares.iter().enumerate() {
        let fi = containing(i);
        if fi.len() != 1 {
            witness = Some(FreeVertexWitness::NotFree {
                vertex: i,
                facets: fi.len(),
            });
            break;
        }
        for &j in &split.squares[a + 1..] {
            if facets[fi[0]].binary_search(&j).is_ok() {
                witness = Some(FreeVertexWitness::SharedFacet {
                    first: i,
                    second: j,
                    facet: facets[fi[0]].clone(),
                });
                break 'outer;
            }
        }
    }
    Ok(FreeVertexCheck {
        holds: witness.is_none(),
        witness,
        facets,
    })
}

/// Renumbers a quadratic ideal by the labeling computed from the graph of
/// its squarefree part.
pub fn relabel_by_dirac(ideal: &MonomialIdeal) -> Result<(VertexLabeling, MonomialIdeal)> {
    let split = squarefree_part(ideal)?;
    let labeling = dirac_labeling(&graph_of_ideal(&split.part)?)?;
    let relabeled = labeling.apply(ideal)?;
    Ok((labeling, relabeled))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge_ideal;
    use crate::ideal::minimal_generators;
    use crate::monomial::Monomial;

    fn ideal(n: usize, gens: &[&[usize]]) -> MonomialIdeal {
        let ms: Vec<Monomial> = gens
            .iter()
            .map(|g| Monomial::from_vars(n, &g.iter().map(|v| v - 1).collect::<Vec<_>>()))
            .collect();
        minimal_generators(&ms, n).unwrap()
    }

    #[test]
    fn dirac_examples() {
        let g = Graph::new(2, &[(1, 2)]).unwrap();
        let l = dirac_labeling(&g).unwrap();
        assert!(l.is_bijective());
        assert!(check_star(&l.apply(&edge_ideal(&g)).unwrap()).unwrap().holds);

        // complement is the path 1-2-3, so I = (x1x3)
        let g = Graph::new(3, &[(1, 3)]).unwrap();
        let l = dirac_labeling(&g).unwrap();
        let relabeled = l.apply(&edge_ideal(&g)).unwrap();
        assert!(check_star(&relabeled).unwrap().holds);

        // (x1x2) on n = 3 fails (*) as numbered; its complement is 1-3-2
        let g = Graph::new(3, &[(1, 2)]).unwrap();
        assert!(!check_star(&edge_ideal(&g)).unwrap().holds);
        let l = dirac_labeling(&g).unwrap();
        assert!(check_star(&l.apply(&edge_ideal(&g)).unwrap()).unwrap().holds);

        // complement of (x1x2, x3x4) is the 4-cycle 1-3-2-4
        let g = Graph::new(4, &[(1, 2), (3, 4)]).unwrap();
        match dirac_labeling(&g) {
            Err(Error::NotChordal { cycle }) => assert_eq!(cycle.len(), 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn dirac_labeling_always_yields_star() {
        for n in 1..=6 {
            for g in Graph::all_simple(n) {
                let chordal_complement = is_chordal(&g.complement().unwrap()).is_chordal();
                match dirac_labeling(&g) {
                    Ok(l) => {
                        assert!(chordal_complement);
                        let relabeled = l.apply(&edge_ideal(&g)).unwrap();
                        assert!(check_star(&relabeled).unwrap().holds, "{g:?} {l:?}");
                        // chordality of the complement survives relabeling
                        let h = l.apply_graph(&g).unwrap();
                        assert!(is_chordal(&h.complement().unwrap()).is_chordal());
                    }
                    Err(Error::NotChordal { .. }) => assert!(!chordal_complement),
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn star_examples() {
        let k3 = ideal(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert!(check_star(&k3).unwrap().holds);
        let c = check_star(&ideal(3, &[&[1, 2]])).unwrap();
        assert!(!c.holds);
        assert_eq!(c.witness, Some((1, 2, 3)));
    }

    #[test]
    fn star_star_examples() {
        assert!(check_star_star(&ideal(3, &[&[1, 2], &[2, 3]])).unwrap().holds);
        let c = check_star_star(&ideal(3, &[&[1, 1], &[2, 3]])).unwrap();
        assert!(!c.holds);
        assert_eq!(c.witness, Some((1, 3, 2)));
        assert!(check_star_star(&ideal(2, &[&[1, 1], &[1, 2], &[2, 2]])).unwrap().holds);
    }

    #[test]
    fn free_vertex_examples() {
        assert!(check_free_vertex_squares(&ideal(1, &[&[1, 1]])).unwrap().holds);
        let c = check_free_vertex_squares(&ideal(2, &[&[1, 1], &[2, 2]])).unwrap();
        assert!(!c.holds);
        assert_eq!(c.facets, vec![vec![1, 2]]);
        assert!(matches!(c.witness, Some(FreeVertexWitness::SharedFacet { first: 1, second: 2, .. })));
        let c = check_free_vertex_squares(&ideal(2, &[&[1, 1], &[1, 2]])).unwrap();
        assert!(c.holds);
        assert_eq!(c.facets, vec![vec![1], vec![2]]);
        assert!(matches!(
            check_free_vertex_squares(&ideal(4, &[&[1, 1], &[1, 2], &[3, 4]])),
            Err(Error::NotChordal { .. })
        ));
    }
}
