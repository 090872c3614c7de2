//! Second-kind Chebyshev polynomials in the normalization
//! `U_0 = 1`, `U_1 = A`, `U_{n+1} = A U_n - U_{n-1}`, together with their
//! product expansion and an efficient evaluation of `U_n(op) . v` for
//! integer operators.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::matrix::SparseIntMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChebyshevError {
    #[error("Chebyshev index must be nonnegative")]
    NegativeIndex,
    #[error("operator dimension {op} does not match vector dimension {vec}")]
    DimensionMismatch { op: usize, vec: usize },
}

/// A dense integer polynomial; `coefficients[k]` multiplies degree `k`.
/// The zero polynomial has an empty coefficient list; otherwise the leading
/// coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coefficients: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial {
            coefficients: Vec::new(),
        }
    }

    pub fn from_coefficients(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        IntPolynomial { coefficients }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coefficients: vec![BigInt::from(1)],
        }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree of a nonzero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.coefficients.last()
    }

    pub fn add(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coefficients.len().max(other.coefficients.len());
        let mut out = vec![BigInt::zero(); n];
        for (k, c) in self.coefficients.iter().enumerate() {
            out[k] += c;
        }
        for (k, c) in other.coefficients.iter().enumerate() {
            out[k] += c;
        }
        IntPolynomial::from_coefficients(out)
    }

    pub fn sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let n = self.coefficients.len().max(other.coefficients.len());
        let mut out = vec![BigInt::zero(); n];
        for (k, c) in self.coefficients.iter().enumerate() {
            out[k] += c;
        }
        for (k, c) in other.coefficients.iter().enumerate() {
            out[k] -= c;
        }
        IntPolynomial::from_coefficients(out)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::from_coefficients(out)
    }

    /// Multiplication by the variable.
    fn shift(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = Vec::with_capacity(self.coefficients.len() + 1);
        out.push(BigInt::zero());
        out.extend(self.coefficients.iter().cloned());
        IntPolynomial { coefficients: out }
    }
}

/// The `n`-th Chebyshev polynomial of the recursion.
pub fn chebyshev_u(n: i64) -> Result<IntPolynomial, ChebyshevError> {
    if n < 0 {
        return Err(ChebyshevError::NegativeIndex);
    }
    let mut prev = IntPolynomial::one();
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = IntPolynomial::from_coefficients(vec![BigInt::zero(), BigInt::from(1)]);
    for _ in 1..n {
        let next = cur.shift().sub(&prev);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Indices of the expansion `U_k U_l = sum_{i} U_i`,
/// the arithmetic progression `|k-l|, |k-l|+2, ..., k+l`.
pub fn product_indices(k: u32, l: u32) -> Vec<u32> {
    let lo = k.abs_diff(l);
    let hi = k + l;
    (lo..=hi).step_by(2).collect()
}

/// `U_n(op) . v` by the two-term vector recursion
/// `u_{m+1} = op u_m - u_{m-1}`; `O(n)` operator applications instead of a
/// dense polynomial evaluation. Intermediate entries may be negative even
/// when the final vector is nonnegative.
pub fn apply_u(op: &SparseIntMatrix, n: u32, v: &[BigInt]) -> Result<Vec<BigInt>, ChebyshevError> {
    if op.dim() != v.len() {
        return Err(ChebyshevError::DimensionMismatch {
            op: op.dim(),
            vec: v.len(),
        });
    }
    let mut prev = v.to_vec();
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = op.mul_vec(v);
    for _ in 1..n {
        let mut next = op.mul_vec(&cur);
        for (x, p) in next.iter_mut().zip(&prev) {
            *x -= p;
        }
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Iterator-style evaluation of all `U_m(op) . v` for `m = 0..=n`, handing
/// each vector to `sink(m, &u_m)`. Used to batch Chebyshev sums.
pub fn apply_u_scan<F: FnMut(u32, &[BigInt])>(
    op: &SparseIntMatrix,
    n: u32,
    v: &[BigInt],
    mut sink: F,
) -> Result<(), ChebyshevError> {
    if op.dim() != v.len() {
        return Err(ChebyshevError::DimensionMismatch {
            op: op.dim(),
            vec: v.len(),
        });
    }
    let mut prev = v.to_vec();
    sink(0, &prev);
    if n == 0 {
        return Ok(());
    }
    let mut cur = op.mul_vec(v);
    sink(1, &cur);
    for m in 2..=n {
        let mut next = op.mul_vec(&cur);
        for (x, p) in next.iter_mut().zip(&prev) {
            *x -= p;
        }
        prev = cur;
        cur = next;
        sink(m, &cur);
    }
    Ok(())
}
