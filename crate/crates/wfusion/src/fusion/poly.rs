use crate::catalog::{AlgebraParams, ModuleLabel, Sign};

use super::EngineError;

/// The Chebyshev-structured polynomial `f_M = Z^c (sum_a U_a(X)) (sum_b U_b(Y))`
/// with `f_M . e_{K[1,1]} = e_M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModulePolynomial {
    pub z_exponent: u8,
    pub x_indices: Vec<u32>,
    pub y_indices: Vec<u32>,
}

fn z_exp(sign: Sign) -> u8 {
    match sign {
        Sign::Plus => 0,
        Sign::Minus => 1,
    }
}

/// The polynomial presentation of a basis element:
///
/// - `[K_{r,s}] = U_{s-1}(X) U_{r-1}(Y)` (boundary X+ included via the
///   identifications `K_{r,p-} = X+_{r,p-}`, `K_{p+,s} = X+_{p+,s}`),
/// - `[X-_{r,s}] = Z U_{s-1}(X) U_{r-1}(Y)`,
/// - `[K*_{r,s}] = Z^2 U_{s-1}(X) U_{r-1}(Y)`,
/// - `[Q(X^e_{a,b})_{p+-a,b}] = Z^c (U_{2p+-a-1}(Y) + U_{a-1}(Y)) U_{b-1}(X)`,
/// - `[Q(X^e_{a,b})_{a,p--b}] = Z^c (U_{2p--b-1}(X) + U_{b-1}(X)) U_{a-1}(Y)`,
/// - `[P^e_{r,s}] = Z^c (U_{2p--s-1}(X) + U_{s-1}(X)) (U_{2p+-r-1}(Y) + U_{r-1}(Y))`,
///
/// with `c = 0` for `e = +` and `c = 1` for `e = -`.
pub fn module_polynomial(params: &AlgebraParams, label: &ModuleLabel) -> Result<ModulePolynomial, EngineError> {
    let p_plus = params.p_plus();
    let p_minus = params.p_minus();
    let poly = match *label {
        ModuleLabel::K(r, s) | ModuleLabel::SimplePlus(r, s) => ModulePolynomial {
            z_exponent: 0,
            x_indices: vec![s - 1],
            y_indices: vec![r - 1],
        },
        ModuleLabel::SimpleMinus(r, s) => ModulePolynomial {
            z_exponent: 1,
            x_indices: vec![s - 1],
            y_indices: vec![r - 1],
        },
        ModuleLabel::KStar(r, s) => ModulePolynomial {
            z_exponent: 2,
            x_indices: vec![s - 1],
            y_indices: vec![r - 1],
        },
        ModuleLabel::Q(sign, a, b, c, d) if c == params.r_dual(a) && d == b => ModulePolynomial {
            z_exponent: z_exp(sign),
            x_indices: vec![b - 1],
            y_indices: vec![a - 1, 2 * p_plus - a - 1],
        },
        ModuleLabel::Q(sign, a, b, _, _) => ModulePolynomial {
            z_exponent: z_exp(sign),
            x_indices: vec![b - 1, 2 * p_minus - b - 1],
            y_indices: vec![a - 1],
        },
        ModuleLabel::P(sign, r, s) => ModulePolynomial {
            z_exponent: z_exp(sign),
            x_indices: vec![s - 1, 2 * p_minus - s - 1],
            y_indices: vec![r - 1, 2 * p_plus - r - 1],
        },
        ModuleLabel::Minimal(_, _) => {
            return Err(EngineError::NotInPBasis(label.to_string()));
        }
    };
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::validate_params;

    #[test]
    fn k_and_p_polynomials() {
        let params = validate_params(3, 4).unwrap();
        let k = module_polynomial(&params, &ModuleLabel::K(2, 3)).unwrap();
        assert_eq!(k.z_exponent, 0);
        assert_eq!(k.x_indices, vec![2]);
        assert_eq!(k.y_indices, vec![1]);

        let p = module_polynomial(&params, &ModuleLabel::P(Sign::Plus, 2, 3)).unwrap();
        assert_eq!(p.z_exponent, 0);
        assert_eq!(p.x_indices, vec![2, 2 * 4 - 3 - 1]);
        assert_eq!(p.y_indices, vec![1, 2 * 3 - 2 - 1]);
    }

    #[test]
    fn boundary_x_minus_polynomial() {
        let params = validate_params(2, 3).unwrap();
        let m = module_polynomial(&params, &ModuleLabel::SimpleMinus(2, 3)).unwrap();
        assert_eq!((m.z_exponent, m.x_indices.clone(), m.y_indices.clone()), (1, vec![2], vec![1]));
    }

    #[test]
    fn minimal_rejected() {
        let params = validate_params(2, 3).unwrap();
        assert!(matches!(
            module_polynomial(&params, &ModuleLabel::Minimal(1, 1)),
            Err(EngineError::NotInPBasis(_))
        ));
    }
}
