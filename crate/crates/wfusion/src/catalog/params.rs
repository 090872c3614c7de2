use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use thiserror::Error;

/// Errors raised while validating a `(p_plus, p_minus)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("p_plus and p_minus must be coprime")]
    NotCoprime,
    #[error("p_plus must be strictly smaller than p_minus")]
    OrderViolation,
    #[error("p_plus must be at least 2")]
    RangeViolation,
}

/// A validated coprime pair `2 <= p_plus < p_minus` together with the
/// exact central charge `c = 1 - 6 (p_plus - p_minus)^2 / (p_plus p_minus)`.
///
/// All arithmetic on the pair is exact; no floating point anywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraParams {
    p_plus: u32,
    p_minus: u32,
    central_charge: BigRational,
}

impl AlgebraParams {
    pub fn p_plus(&self) -> u32 {
        self.p_plus
    }

    pub fn p_minus(&self) -> u32 {
        self.p_minus
    }

    pub fn central_charge(&self) -> &BigRational {
        &self.central_charge
    }

    /// `p_plus - r` for a row index.
    pub fn r_dual(&self, r: u32) -> u32 {
        self.p_plus - r
    }

    /// `p_minus - s` for a column index.
    pub fn s_dual(&self, s: u32) -> u32 {
        self.p_minus - s
    }
}

/// Validates a raw integer pair and computes the exact central charge.
pub fn validate_params(p_plus: i64, p_minus: i64) -> Result<AlgebraParams, ParamError> {
    if p_plus < 2 {
        return Err(ParamError::RangeViolation);
    }
    if p_minus <= p_plus {
        return Err(ParamError::OrderViolation);
    }
    if p_plus.gcd(&p_minus) != 1 {
        return Err(ParamError::NotCoprime);
    }
    let diff = BigInt::from(p_plus - p_minus);
    let num = BigInt::from(6) * (&diff * &diff);
    let den = BigInt::from(p_plus) * BigInt::from(p_minus);
    let central_charge = BigRational::from_integer(BigInt::from(1)) - BigRational::new(num, den);
    Ok(AlgebraParams {
        p_plus: p_plus as u32,
        p_minus: p_minus as u32,
        central_charge,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn central_charge_2_3_is_zero() {
        let params = validate_params(2, 3).unwrap();
        assert!(params.central_charge().is_zero());
    }

    #[test]
    fn central_charge_2_5() {
        // 1 - 6*9/10 = -22/5
        let params = validate_params(2, 5).unwrap();
        let expect = BigRational::new(BigInt::from(-22), BigInt::from(5));
        assert_eq!(*params.central_charge(), expect);
    }

    #[test]
    fn rejects_non_coprime() {
        assert_eq!(validate_params(2, 4), Err(ParamError::NotCoprime));
    }

    #[test]
    fn rejects_bad_order() {
        assert_eq!(validate_params(3, 2), Err(ParamError::OrderViolation));
        assert_eq!(validate_params(3, 3), Err(ParamError::OrderViolation));
    }

    #[test]
    fn rejects_small_p_plus() {
        assert_eq!(validate_params(1, 5), Err(ParamError::RangeViolation));
        assert_eq!(validate_params(-2, 5), Err(ParamError::RangeViolation));
    }
}
