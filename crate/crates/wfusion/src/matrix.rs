//! Sparse square integer matrices with exact arithmetic.
//!
//! The generator actions are column-sparse (at most four entries per
//! column), so matrices are stored column-major and every computation that
//! would normally be a matrix product is done vector-by-vector instead.

use num_bigint::BigInt;
use num_traits::Zero;

/// A square integer matrix stored as sparse columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseIntMatrix {
    dim: usize,
    cols: Vec<Vec<(usize, BigInt)>>,
}

impl SparseIntMatrix {
    pub fn zero(dim: usize) -> Self {
        SparseIntMatrix {
            dim,
            cols: vec![Vec::new(); dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let cols = (0..dim).map(|j| vec![(j, BigInt::from(1))]).collect();
        SparseIntMatrix { dim, cols }
    }

    /// Builds a matrix from per-column entry lists. Rows within a column are
    /// merged and zeros dropped.
    pub fn from_columns(dim: usize, columns: Vec<Vec<(usize, BigInt)>>) -> Self {
        assert_eq!(columns.len(), dim);
        let cols = columns
            .into_iter()
            .map(|mut col| {
                col.sort_by_key(|(i, _)| *i);
                let mut merged: Vec<(usize, BigInt)> = Vec::with_capacity(col.len());
                for (i, v) in col {
                    assert!(i < dim, "row index out of range");
                    match merged.last_mut() {
                        Some((j, acc)) if *j == i => *acc += v,
                        _ => merged.push((i, v)),
                    }
                }
                merged.retain(|(_, v)| !v.is_zero());
                merged
            })
            .collect();
        SparseIntMatrix { dim, cols }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, j: usize) -> &[(usize, BigInt)] {
        &self.cols[j]
    }

    /// `self * v` for a dense vector.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        let mut out = vec![BigInt::zero(); self.dim];
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for (i, a) in &self.cols[j] {
                out[*i] += a * vj;
            }
        }
        out
    }

    /// Standard basis vector `e_j` as a dense vector.
    pub fn basis_vec(&self, j: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.dim];
        v[j] = BigInt::from(1);
        v
    }

    #[cfg(test)]
    pub(crate) fn set_column(&mut self, j: usize, col: Vec<(usize, BigInt)>) {
        self.cols[j] = col;
    }
}

pub fn dense_is_zero(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn dense_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn dense_add_assign(a: &mut [BigInt], b: &[BigInt]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
}

pub fn dense_scale(v: &[BigInt], k: &BigInt) -> Vec<BigInt> {
    v.iter().map(|x| x * k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_vec(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn mul_vec_matches_hand_computation() {
        // [[1,0],[2,3]] acting on (5,7): columns are (1,2) and (0,3)
        let m = SparseIntMatrix::from_columns(
            2,
            vec![
                vec![(0, BigInt::from(1)), (1, BigInt::from(2))],
                vec![(1, BigInt::from(3))],
            ],
        );
        assert_eq!(m.mul_vec(&int_vec(&[5, 7])), int_vec(&[5, 31]));
    }

    #[test]
    fn duplicate_entries_merge() {
        let m = SparseIntMatrix::from_columns(
            1,
            vec![vec![(0, BigInt::from(2)), (0, BigInt::from(-2))]],
        );
        assert!(m.column(0).is_empty());
    }
}
