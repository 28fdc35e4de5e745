//! Finite simple graphs on vertices `1..=n`, optionally with loops.

use crate::error::{Error, Result};
use crate::ideal::{minimal_generators, MonomialIdeal};
use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Sorted pairs `(i, j)` with `i < j`.
    edges: Vec<(usize, usize)>,
    /// Sorted loop vertices.
    loops: Vec<usize>,
    allows_loops: bool,
    adj: Vec<Vec<bool>>,
}

impl Graph {
    /// A simple graph; loops are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::with_loops(n, edges, false)
    }

    pub fn with_loops(n: usize, edges: &[(usize, usize)], allows_loops: bool) -> Result<Self> {
        let mut adj = vec![vec![false; n + 1]; n + 1];
        let mut simple = Vec::new();
        let mut loops = Vec::new();
        for &(a, b) in edges {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::input(format!("edge {{{a},{b}}} outside 1..={n}")));
            }
            if adj[a][b] {
                return Err(Error::input(format!("duplicate edge {{{a},{b}}}")));
            }
            if a == b {
                if !allows_loops {
                    return Err(Error::input(format!("loop at {a} in a simple graph")));
                }
                loops.push(a);
            } else {
                simple.push((a.min(b), a.max(b)));
            }
            adj[a][b] = true;
            adj[b][a] = true;
        }
        simple.sort_unstable();
        loops.sort_unstable();
        Ok(Graph {
            n,
            edges: simple,
            loops,
            allows_loops,
            adj,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, &[]).expect("edgeless graph")
    }

    pub fn complete(n: usize) -> Self {
        let mut e = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                e.push((i, j));
            }
        }
        Graph::new(n, &e).expect("complete graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn loops(&self) -> &[usize] {
        &self.loops
    }

    pub fn allows_loops(&self) -> bool {
        self.allows_loops
    }

    /// Adjacency, including loops when `i == j`.
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && i <= self.n && j <= self.n && self.adj[i][j]
    }

    /// Neighbours of `v` other than `v` itself, ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (1..=self.n).filter(|&u| u != v && self.adj[v][u]).collect()
    }

    /// Graph on the same vertices with edges the non-edges of `self`.
    pub fn complement(&self) -> Result<Graph> {
        if !self.loops.is_empty() {
            return Err(Error::input("complement of a graph with loops is undefined"));
        }
        let mut e = Vec::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if !self.adj[i][j] {
                    e.push((i, j));
                }
            }
        }
        Graph::new(self.n, &e)
    }

    /// Subgraph induced on the given vertices, relabeled `1..=k` in order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut e = Vec::new();
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a) {
                if self.adj[u][v] {
                    e.push((a + 1, b + 1));
                }
            }
        }
        Graph::with_loops(vertices.len(), &e, self.allows_loops).expect("induced subgraph")
    }

    /// Relabel vertices: `v` becomes `new_of_old[v - 1]`.
    pub fn relabel(&self, new_of_old: &[usize]) -> Result<Graph> {
        if new_of_old.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                found: new_of_old.len(),
            });
        }
        let mut e: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(a, b)| (new_of_old[a - 1], new_of_old[b - 1]))
            .collect();
        e.extend(self.loops.iter().map(|&v| (new_of_old[v - 1], new_of_old[v - 1])));
        Graph::with_loops(self.n, &e, self.allows_loops)
    }

    /// Every simple graph on `n` vertices, indexed by the bitmask of present
    /// pairs in lexicographic order.
    pub fn all_simple(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        let count = 1u64 << pairs.len();
        (0..count).map(move |mask| {
            let e: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            Graph::new(n, &e).expect("enumerated graph")
        })
    }
}

/// The graph of a quadratic monomial ideal: `{i,j}` is an edge iff
/// `x_i x_j` is a generator, with a loop at `i` iff `x_i^2` is.
pub fn graph_of_ideal(ideal: &MonomialIdeal) -> Result<Graph> {
    ideal.require_quadratic()?;
    let mut e = Vec::new();
    for g in ideal.gens() {
        let s = g.support();
        match s.as_slice() {
            [i] => e.push((i + 1, i + 1)),
            [i, j] => e.push((i + 1, j + 1)),
            _ => unreachable!("quadratic generator"),
        }
    }
    let has_loops = ideal.gens().iter().any(|g| !g.is_squarefree());
    Graph::with_loops(ideal.nvars(), &e, has_loops)
}

/// The edge ideal `I(G)`, with `x_i^2` for each loop.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let n = g.n();
    let mut gens: Vec<Monomial> = g
        .edges()
        .iter()
        .map(|&(i, j)| Monomial::from_vars(n, &[i - 1, j - 1]))
        .collect();
    gens.extend(g.loops().iter().map(|&i| Monomial::from_vars(n, &[i - 1, i - 1])));
    minimal_generators(&gens, n).expect("edge ideal generators")
}
