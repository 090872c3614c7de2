use num_bigint::BigInt;
use num_rational::BigRational;

use super::params::AlgebraParams;

/// Exact conformal weight `h_{r,s;n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConformalWeight {
    pub value: BigRational,
}

/// Computes `h_{r,s;n}` for arbitrary integers `r, s, n`.
///
/// Uses the index shift `h_{r,s;n} = h_{r - n p_plus, s}` and the closed
/// form `h_{r,s} = ((p_minus r - p_plus s)^2 - (p_minus - p_plus)^2) / (4 p_plus p_minus)`,
/// which agrees with evaluating `h_alpha = alpha (alpha - alpha_0) / 2` at
/// `alpha_{r,s;n}` once alpha is written as a rational multiple of
/// `sqrt(2 p_plus p_minus)`.
pub fn conformal_weight(params: &AlgebraParams, r: i64, s: i64, n: i64) -> ConformalWeight {
    let p_plus = params.p_plus() as i64;
    let p_minus = params.p_minus() as i64;
    let r_shifted = r - n * p_plus;
    let a = BigInt::from(p_minus * r_shifted - p_plus * s);
    let b = BigInt::from(p_minus - p_plus);
    let num = &a * &a - &b * &b;
    let den = BigInt::from(4 * p_plus * p_minus);
    ConformalWeight {
        value: BigRational::new(num, den),
    }
}
