//! Sparse integer matrices and exact rank computation.

use num_integer::Integer;
use num_traits::{FromPrimitive, Num};

/// Integer matrix stored as a coordinate list.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, i64)>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, row: usize, col: usize, value: i64) {
        debug_assert!(row < self.rows && col < self.cols);
        if value != 0 {
            self.entries.push((row, col, value));
        }
    }

    pub fn from_dense(dense: &[Vec<i64>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        let mut m = SparseMatrix::new(rows, cols);
        for (i, row) in dense.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.push(i, j, v);
            }
        }
        m
    }

    /// Dense copy, summing duplicate coordinates.
    pub fn to_dense<T: Num + Clone + FromPrimitive>(&self) -> Vec<Vec<T>> {
        let mut d = vec![vec![T::zero(); self.cols]; self.rows];
        for &(i, j, v) in &self.entries {
            let add = T::from_i64(v).expect("scalar conversion");
            d[i][j] = d[i][j].clone() + add;
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.2 == 0)
    }
}

/// Rank by Gaussian elimination over a field.
#[allow(clippy::needless_range_loop)]
pub fn rank_over_field<F: Num + Clone + FromPrimitive>(m: &SparseMatrix) -> usize {
    if m.rows == 0 || m.cols == 0 || m.is_zero() {
        return 0;
    }
    let mut a = m.to_dense::<F>();
    let mut rank = 0;
    for c in 0..m.cols {
        let Some(p) = (rank..m.rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for r in rank + 1..m.rows {
            if a[r][c].is_zero() {
                continue;
            }
            let factor = a[r][c].clone() / pivot.clone();
            for j in c..m.cols {
                let t = factor.clone() * a[rank][j].clone();
                a[r][j] = a[r][j].clone() - t;
            }
        }
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    rank
}

/// Rank over the fraction field of an integral domain, by Bareiss
/// fraction-free elimination. Every division is exact.
#[allow(clippy::needless_range_loop)]
pub fn rank_fraction_free<Z: Integer + Clone + FromPrimitive>(m: &SparseMatrix) -> usize {
    if m.rows == 0 || m.cols == 0 || m.is_zero() {
        return 0;
    }
    let mut a = m.to_dense::<Z>();
    let mut prev = Z::one();
    let mut rank = 0;
    for c in 0..m.cols {
        let Some(p) = (rank..m.rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for r in rank + 1..m.rows {
            let lead = a[r][c].clone();
            for j in c + 1..m.cols {
                let num = pivot.clone() * a[r][j].clone() - lead.clone() * a[rank][j].clone();
                debug_assert!((num.clone() % prev.clone()).is_zero());
                a[r][j] = num / prev.clone();
            }
            a[r][c] = Z::zero();
        }
        prev = pivot;
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    rank
}

/// True when every intermediate value of fraction-free elimination on `m`
/// fits in an `i128`: the squared Hadamard bound is below 2^124, so each
/// minor is below 2^62 and each two-term product below 2^125.
pub fn hadamard_fits_i64(m: &SparseMatrix) -> bool {
    let mut norms = vec![0u128; m.rows];
    for &(i, _, v) in &m.entries {
        let sq = (v as i128 * v as i128) as u128;
        norms[i] = norms[i].saturating_add(sq);
    }
    let limit: u128 = 1 << 124;
    let mut bound: u128 = 1;
    for n in norms.into_iter().filter(|&n| n > 0) {
        bound = bound.saturating_mul(n);
        if bound >= limit {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use num_bigint::BigInt;

    /// Rank over GF(2) by brute force: the row space has 2^rank elements.
    fn gf2_rank_brute(d: &[Vec<i64>]) -> usize {
        let rows: Vec<Vec<u8>> = d
            .iter()
            .map(|r| r.iter().map(|v| v.rem_euclid(2) as u8).collect())
            .collect();
        let cols = rows.first().map_or(0, Vec::len);
        let mut span = std::collections::BTreeSet::new();
        for mask in 0u32..(1 << rows.len()) {
            let mut v = vec![0u8; cols];
            for (i, r) in rows.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    for j in 0..cols {
                        v[j] ^= r[j];
                    }
                }
            }
            span.insert(v);
        }
        span.len().trailing_zeros() as usize
    }

    #[test]
    fn ranks_of_small_matrices() {
        let m = SparseMatrix::from_dense(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, -1]]);
        assert_eq!(rank_fraction_free::<BigInt>(&m), 2);
        assert_eq!(rank_over_field::<Fp<2>>(&m), 2);
        // determinant 2: full rank over Q, rank 2 over GF(2)
        let m = SparseMatrix::from_dense(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(rank_fraction_free::<BigInt>(&m), 3);
        assert_eq!(rank_fraction_free::<i128>(&m), 3);
        assert_eq!(rank_over_field::<Fp<2>>(&m), 2);
        assert_eq!(rank_over_field::<Fp<3>>(&m), 3);
        assert_eq!(rank_fraction_free::<BigInt>(&SparseMatrix::new(0, 4)), 0);
        assert_eq!(rank_fraction_free::<BigInt>(&SparseMatrix::new(3, 4)), 0);
    }

    #[test]
    fn hadamard_guard() {
        let small = SparseMatrix::from_dense(&[vec![1, -1], vec![1, 1]]);
        assert!(hadamard_fits_i64(&small));
        let dense: Vec<Vec<i64>> = (0..40).map(|_| vec![1; 40]).collect();
        assert!(!hadamard_fits_i64(&SparseMatrix::from_dense(&dense)));
    }

    proptest::proptest! {
        #[test]
        fn rank_routes_agree(
            rows in 1usize..7,
            cols in 1usize..7,
            seed in proptest::collection::vec(-2i64..=2, 49),
        ) {
            let dense: Vec<Vec<i64>> = (0..rows)
                .map(|i| (0..cols).map(|j| seed[i * 7 + j]).collect())
                .collect();
            let m = SparseMatrix::from_dense(&dense);
            let q = rank_over_field::<num_rational::BigRational>(&m);
            proptest::prop_assert_eq!(rank_fraction_free::<BigInt>(&m), q);
            proptest::prop_assert_eq!(rank_fraction_free::<i128>(&m), q);
            proptest::prop_assert_eq!(rank_over_field::<Fp<2>>(&m), gf2_rank_brute(&dense));
            proptest::prop_assert!(rank_over_field::<Fp<3>>(&m) <= q);
        }
    }
}
