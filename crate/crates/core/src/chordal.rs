//! Chordality testing with certificates.
//!
//! Maximum cardinality search proposes an elimination ordering which is then
//! verified. A failed verification is turned into a chordless cycle of
//! length at least four. Loops are ignored.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Verdict of [`is_chordal`] together with its certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Chordality {
    /// A perfect elimination ordering: the later neighbours of each vertex
    /// form a clique.
    Chordal { peo: Vec<usize> },
    /// A chordless cycle of length at least four, as a vertex sequence.
    NotChordal { cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

pub fn is_chordal(g: &Graph) -> Chordality {
    let peo = mcs_elimination_order(g);
    match verify_peo(g, &peo) {
        Ok(()) => Chordality::Chordal { peo },
        Err((v, u, w)) => {
            let cycle = chordless_cycle_through(g, v, u, w)
                .or_else(|| find_chordless_cycle(g))
                .expect("non-chordal graph has a chordless cycle");
            Chordality::NotChordal { cycle }
        }
    }
}

/// Reverse of a maximum cardinality search visit order. Ties go to the
/// smallest vertex.
pub fn mcs_elimination_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n + 1];
    let mut numbered = vec![false; n + 1];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (1..=n)
            .filter(|&v| !numbered[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unnumbered vertex");
        numbered[v] = true;
        visit.push(v);
        for u in g.neighbors(v) {
            if !numbered[u] {
                weight[u] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

/// Checks that `order` is a perfect elimination ordering of `g`.
///
/// On failure returns `(v, u, w)` where `u` and `w` are non-adjacent later
/// neighbours of `v`.
pub fn verify_peo(g: &Graph, order: &[usize]) -> Result<(), (usize, usize, usize)> {
    let n = g.n();
    let mut pos = vec![usize::MAX; n + 1];
    for (p, &v) in order.iter().enumerate() {
        if v == 0 || v > n || pos[v] != usize::MAX {
            return Err((v, v, v));
        }
        pos[v] = p;
    }
    if order.len() != n {
        return Err((0, 0, 0));
    }
    for &v in order {
        let later: Vec<usize> = g.neighbors(v).into_iter().filter(|&u| pos[u] > pos[v]).collect();
        let Some(&parent) = later.iter().min_by_key(|&&u| pos[u]) else {
            continue;
        };
        for &u in &later {
            if u != parent && !g.has_edge(parent, u) {
                return Err((v, parent, u));
            }
        }
    }
    Ok(())
}

/// Looks for a chordless cycle `v, u, ..., w` where `u`, `w` are
/// non-adjacent neighbours of `v`, via a shortest `u`-`w` path avoiding the
/// rest of the closed neighbourhood of `v`.
fn chordless_cycle_through(g: &Graph, v: usize, u: usize, w: usize) -> Option<Vec<usize>> {
    if v == 0 || u == w || g.has_edge(u, w) || !g.has_edge(v, u) || !g.has_edge(v, w) {
        return None;
    }
    let n = g.n();
    let mut blocked = vec![false; n + 1];
    blocked[v] = true;
    for x in g.neighbors(v) {
        if x != u && x != w {
            blocked[x] = true;
        }
    }
    let mut prev = vec![0usize; n + 1];
    let mut seen = vec![false; n + 1];
    let mut queue = VecDeque::from([u]);
    seen[u] = true;
    while let Some(x) = queue.pop_front() {
        if x == w {
            break;
        }
        for y in g.neighbors(x) {
            if !seen[y] && !blocked[y] {
                seen[y] = true;
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    if !seen[w] {
        return None;
    }
    let mut path = vec![w];
    let mut x = w;
    while x != u {
        x = prev[x];
        path.push(x);
    }
    path.reverse();
    let mut cycle = vec![v];
    cycle.extend(path);
    Some(cycle)
}

/// Exhaustive search over centres and neighbour pairs.
fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    for v in 1..=g.n() {
        let nb = g.neighbors(v);
        for (a, &u) in nb.iter().enumerate() {
            for &w in &nb[a + 1..] {
                if let Some(c) = chordless_cycle_through(g, v, u, w) {
                    return Some(c);
                }
            }
        }
    }
    None
}

/// True if `cycle` is a cycle of length at least four in `g` without chords.
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 4 {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k {
        return false;
    }
    for a in 0..k {
        for b in a + 1..k {
            let consecutive = b == a + 1 || (a == 0 && b == k - 1);
            if g.has_edge(cycle[a], cycle[b]) != consecutive {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force: does any vertex subset of size >= 4 induce a cycle?
    fn has_chordless_cycle_brute(g: &Graph) -> bool {
        let n = g.n();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() < 4 {
                continue;
            }
            let vs: Vec<usize> = (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect();
            // induced subgraph is a cycle iff connected and 2-regular
            let two_regular = vs.iter().all(|&v| {
                vs.iter().filter(|&&u| u != v && g.has_edge(u, v)).count() == 2
            });
            if !two_regular {
                continue;
            }
            let mut seen = vec![vs[0]];
            let mut stack = vec![vs[0]];
            while let Some(x) = stack.pop() {
                for &y in &vs {
                    if g.has_edge(x, y) && x != y && !seen.contains(&y) {
                        seen.push(y);
                        stack.push(y);
                    }
                }
            }
            if seen.len() == vs.len() {
                return true;
            }
        }
        false
    }

    #[test]
    fn four_cycle_is_not_chordal() {
        let c4 = Graph::new(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        match is_chordal(&c4) {
            Chordality::NotChordal { cycle } => {
                assert!(is_chordless_cycle(&c4, &cycle));
                let mut s = cycle.clone();
                s.sort_unstable();
                assert_eq!(s, vec![1, 2, 3, 4]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn trees_are_chordal() {
        let star = Graph::new(5, &[(1, 2), (1, 3), (1, 4), (1, 5)]).unwrap();
        let path = Graph::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        for g in [star, path] {
            let c = is_chordal(&g);
            assert!(c.is_chordal());
            if let Chordality::Chordal { peo } = c {
                assert!(verify_peo(&g, &peo).is_ok());
            }
        }
    }

    #[test]
    fn skeleton_of_two_triangles_is_chordal() {
        // 1-skeleton of <{1,2,3},{2,3,4}>
        let g = Graph::new(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(is_chordal(&g).is_chordal());
    }

    #[test]
    fn verify_peo_rejects_bad_orders() {
        let p3 = Graph::new(3, &[(1, 2), (2, 3)]).unwrap();
        assert!(verify_peo(&p3, &[1, 2, 3]).is_ok());
        assert_eq!(verify_peo(&p3, &[2, 1, 3]), Err((2, 1, 3)));
        assert!(verify_peo(&p3, &[1, 2]).is_err());
        assert!(verify_peo(&p3, &[1, 1, 2]).is_err());
    }

    #[test]
    fn agrees_with_brute_force_up_to_seven_vertices() {
        for n in 1..=6 {
            for g in Graph::all_simple(n) {
                let c = is_chordal(&g);
                assert_eq!(c.is_chordal(), !has_chordless_cycle_brute(&g), "{g:?}");
                match c {
                    Chordality::Chordal { peo } => assert!(verify_peo(&g, &peo).is_ok()),
                    Chordality::NotChordal { cycle } => assert!(is_chordless_cycle(&g, &cycle)),
                }
            }
        }
        // n = 7 sampled: every 97th graph of the 2^21
        let pairs: Vec<(usize, usize)> =
            (1..=7).flat_map(|i| (i + 1..=7).map(move |j| (i, j))).collect();
        for mask in (0u64..1 << 21).step_by(97) {
            let e: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            let g = Graph::new(7, &e).unwrap();
            assert_eq!(is_chordal(&g).is_chordal(), !has_chordless_cycle_brute(&g));
        }
    }
}
