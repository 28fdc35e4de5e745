use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{graph_of_ideal, Graph};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// The graph of a quadratic ideal, with loops at squares, coned off by a
/// vertex `n + 1`.
///
/// Variables of `T` are indexed `0..n` for `x_1..x_n`, followed by one
/// `y` per base edge or loop in [`OmegaGraph::y_edges`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaGraph {
    base: Graph,
    /// Base edges and loops sorted by `(min, max)`; `y_edges[k]` is the
    /// variable with index `n + k`.
    y_edges: Vec<(usize, usize)>,
}

pub fn build_omega(ideal: &MonomialIdeal) -> Result<OmegaGraph> {
    Ok(OmegaGraph::from_base(graph_of_ideal(ideal)?))
}

/// Edge list of `Omega`, for serialization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmegaJson {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl OmegaGraph {
    pub fn from_base(base: Graph) -> Self {
        let mut y_edges: Vec<(usize, usize)> = base.edges().to_vec();
        y_edges.extend(base.loops().iter().map(|&v| (v, v)));
        y_edges.sort_unstable();
        OmegaGraph { base, y_edges }
    }

    /// Number of base vertices; the cone vertex is `n + 1`.
    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn y_edges(&self) -> &[(usize, usize)] {
        &self.y_edges
    }

    /// Number of variables of `T`.
    pub fn nvars(&self) -> usize {
        self.n() + self.y_edges.len()
    }

    /// All edges of `Omega` with `a <= b`: base edges, loops, cone edges.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut e = self.y_edges.clone();
        e.extend((1..=n).map(|i| (i, n + 1)));
        e.sort_unstable();
        e
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.variable_of_edge(a, b).is_some()
    }

    /// The variable of edge `{a, b}`: `x_i` for the cone edge `{i, n+1}`,
    /// `y_{ab}` otherwise.
    pub fn variable_of_edge(&self, a: usize, b: usize) -> Option<usize> {
        let n = self.n();
        let (a, b) = (a.min(b), a.max(b));
        if a == 0 || b > n + 1 {
            return None;
        }
        if b == n + 1 {
            return (a <= n).then(|| a - 1);
        }
        self.y_edges.binary_search(&(a, b)).ok().map(|k| n + k)
    }

    /// The edge of a variable.
    pub fn edge_of_variable(&self, var: usize) -> (usize, usize) {
        let n = self.n();
        if var < n {
            (var + 1, n + 1)
        } else {
            self.y_edges[var - n]
        }
    }

    /// Neighbours of `v` in `Omega`, including `v` itself when it has a loop.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (1..=self.n() + 1).filter(|&u| self.has_edge(v, u)).collect()
    }

    /// Image under `pi` as an exponent vector in `x_1..x_{n+1}`.
    pub fn pi(&self, m: &Monomial) -> Vec<u32> {
        let n = self.n();
        let mut out = vec![0u32; n + 1];
        for (var, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let (a, b) = self.edge_of_variable(var);
            out[a - 1] += e;
            out[b - 1] += e;
        }
        out
    }

    /// Names `x1..xn`, then `y<i>_<j>` per base edge or loop.
    pub fn variable_names(&self) -> Vec<String> {
        let mut names: Vec<String> = (1..=self.n()).map(|i| format!("x{i}")).collect();
        names.extend(self.y_edges.iter().map(|(a, b)| format!("y{a}_{b}")));
        names
    }

    pub fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.nvars() != self.nvars() {
            return Err(Error::LengthMismatch {
                expected: self.nvars(),
                found: m.nvars(),
            });
        }
        Ok(())
    }

    pub fn to_json(&self) -> OmegaJson {
        OmegaJson {
            vertices: self.n() + 1,
            edges: self.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        }
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

    #[test]
    fn omega_examples() {
        let o = build_omega(&ideal(2, &[&[1, 2]])).unwrap();
        assert_eq!(o.edges(), vec![(1, 2), (1, 3), (2, 3)]);
        let o = build_omega(&ideal(1, &[&[1, 1]])).unwrap();
        assert_eq!(o.edges(), vec![(1, 1), (1, 2)]);
        assert_eq!(o.neighbors(1), vec![1, 2]);
        let o = build_omega(&MonomialIdeal::zero(2)).unwrap();
        assert_eq!(o.edges(), vec![(1, 3), (2, 3)]);
        assert!(build_omega(&ideal(3, &[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn variables_and_images() {
        let o = build_omega(&ideal(2, &[&[1, 1], &[1, 2], &[2, 2]])).unwrap();
        assert_eq!(o.y_edges(), &[(1, 1), (1, 2), (2, 2)]);
        assert_eq!(o.variable_names(), vec!["x1", "x2", "y1_1", "y1_2", "y2_2"]);
        assert_eq!(o.variable_of_edge(3, 2), Some(1));
        assert_eq!(o.variable_of_edge(2, 1), Some(3));
        assert_eq!(o.variable_of_edge(1, 1), Some(2));
        assert_eq!(o.pi(&Monomial::new(vec![1, 0, 0, 0, 1])), vec![1, 2, 1]);
        assert_eq!(o.edge_of_variable(4), (2, 2));
    }
}
