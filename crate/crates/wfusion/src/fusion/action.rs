use num_bigint::BigInt;

use crate::catalog::{AlgebraParams, Basis, ModuleLabel, Sign};
use crate::matrix::SparseIntMatrix;

use super::EngineError;

/// The three commuting generator matrices: column `j` of `lx`, `ly`, `lz`
/// is the expansion of `K_{1,2} ⊠ M_j`, `K_{2,1} ⊠ M_j`, `X^-_{1,1} ⊠ M_j`
/// over the fixed basis.
#[derive(Debug, Clone)]
pub struct GeneratorAction {
    pub lx: SparseIntMatrix,
    pub ly: SparseIntMatrix,
    pub lz: SparseIntMatrix,
}

/// `K_{r,s}` with the boundary identifications `K_{r,p-} = X+_{r,p-}`,
/// `K_{p+,s} = X+_{p+,s}` applied.
fn k_collapse(params: &AlgebraParams, r: u32, s: u32) -> ModuleLabel {
    debug_assert!(r >= 1 && r <= params.p_plus() && s >= 1 && s <= params.p_minus());
    if s == params.p_minus() || r == params.p_plus() {
        ModuleLabel::SimplePlus(r, s)
    } else {
        ModuleLabel::K(r, s)
    }
}

/// `K*_{r,s}`; out-of-range indices collapse to the boundary simple, since
/// `K*_{1,1} ⊠ X+ = X+` on thin simples (two applications of
/// `X+_{1,1} ⊠ K_{r,s} = X+_{r,s}`).
fn kstar_collapse(params: &AlgebraParams, r: u32, s: u32) -> ModuleLabel {
    if s == params.p_minus() || r == params.p_plus() {
        ModuleLabel::SimplePlus(r, s)
    } else {
        ModuleLabel::KStar(r, s)
    }
}

fn simple(sign: Sign, r: u32, s: u32) -> ModuleLabel {
    match sign {
        Sign::Plus => ModuleLabel::SimplePlus(r, s),
        Sign::Minus => ModuleLabel::SimpleMinus(r, s),
    }
}

/// `Q(X^sign_{a,b})_{p+-a, b}`: thick row-reflected for `b < p-`, thin row
/// for `b = p-`. Requires `1 <= a <= p+ - 1`.
fn q_row(params: &AlgebraParams, sign: Sign, a: u32, b: u32) -> ModuleLabel {
    debug_assert!(a >= 1 && a < params.p_plus() && b >= 1 && b <= params.p_minus());
    ModuleLabel::Q(sign, a, b, params.r_dual(a), b)
}

/// `Q(X^sign_{a,b})_{a, p--b}`: thick column-reflected for `a < p+`, thin
/// column for `a = p+`. Requires `1 <= b <= p- - 1`.
fn q_col(params: &AlgebraParams, sign: Sign, a: u32, b: u32) -> ModuleLabel {
    debug_assert!(a >= 1 && a <= params.p_plus() && b >= 1 && b < params.p_minus());
    ModuleLabel::Q(sign, a, b, a, params.s_dual(b))
}

type Image = Vec<(ModuleLabel, u32)>;

fn one(label: ModuleLabel) -> Image {
    vec![(label, 1)]
}

fn two(a: ModuleLabel, b: ModuleLabel) -> Image {
    vec![(a, 1), (b, 1)]
}

/// `K_{1,2} ⊠ M` for every basis label `M`.
fn lx_image(params: &AlgebraParams, label: &ModuleLabel) -> Image {
    let p_minus = params.p_minus();
    match *label {
        // K_{1,2} ⊠ K_{r,1} = K_{r,2};  K_{1,2} ⊠ K_{r,s} = K_{r,s-1} ⊕ K_{r,s+1}
        ModuleLabel::K(r, s) | ModuleLabel::SimplePlus(r, s) if s < p_minus => {
            if s == 1 {
                one(k_collapse(params, r, 2))
            } else {
                two(k_collapse(params, r, s - 1), k_collapse(params, r, s + 1))
            }
        }
        // K_{1,2} ⊠ X±_{r,p-} = Q(X±_{r,p--1})_{r,1}
        ModuleLabel::SimplePlus(r, _) => one(q_col(params, Sign::Plus, r, p_minus - 1)),
        ModuleLabel::SimpleMinus(r, s) if s == p_minus => one(q_col(params, Sign::Minus, r, p_minus - 1)),
        // K_{1,2} ⊠ X-_{r,s}: same column shifts as K, staying within X-
        ModuleLabel::SimpleMinus(r, s) => {
            if s == 1 {
                one(ModuleLabel::SimpleMinus(r, 2))
            } else {
                two(ModuleLabel::SimpleMinus(r, s - 1), ModuleLabel::SimpleMinus(r, s + 1))
            }
        }
        // Derived: K* columns are Z^2 of the K columns; Z^2 fixes thin simples.
        ModuleLabel::KStar(r, s) => {
            if s == 1 {
                one(kstar_collapse(params, r, 2))
            } else {
                two(kstar_collapse(params, r, s - 1), kstar_collapse(params, r, s + 1))
            }
        }
        ModuleLabel::Q(sign, a, b, c, d) if c == params.r_dual(a) && d == b => {
            // row-reflected Q, including the thin row at b = p-
            if b == p_minus {
                one(ModuleLabel::P(sign, a, p_minus - 1))
            } else if b == 1 {
                one(q_row(params, sign, a, 2))
            } else {
                two(q_row(params, sign, a, b - 1), q_row(params, sign, a, b + 1))
            }
        }
        ModuleLabel::Q(sign, a, b, _, _) => {
            // column-reflected Q, including the thin column at a = p+
            if b == p_minus - 1 {
                vec![(simple(sign, a, p_minus), 2), (q_col(params, sign, a, p_minus - 2), 1)]
            } else if b == 1 {
                vec![(simple(sign.flip(), a, p_minus), 2), (q_col(params, sign, a, 2), 1)]
            } else {
                two(q_col(params, sign, a, b - 1), q_col(params, sign, a, b + 1))
            }
        }
        ModuleLabel::P(sign, r, s) => {
            if s == p_minus - 1 {
                vec![(q_row(params, sign, r, p_minus), 2), (ModuleLabel::P(sign, r, p_minus - 2), 1)]
            } else if s == 1 {
                vec![(q_row(params, sign.flip(), r, p_minus), 2), (ModuleLabel::P(sign, r, 2), 1)]
            } else {
                two(ModuleLabel::P(sign, r, s - 1), ModuleLabel::P(sign, r, s + 1))
            }
        }
        ModuleLabel::Minimal(_, _) => Vec::new(),
    }
}

/// `K_{2,1} ⊠ M` for every basis label `M`.
fn ly_image(params: &AlgebraParams, label: &ModuleLabel) -> Image {
    let p_plus = params.p_plus();
    match *label {
        // K_{2,1} ⊠ K_{1,s} = K_{2,s};  K_{2,1} ⊠ K_{r,s} = K_{r-1,s} ⊕ K_{r+1,s}
        ModuleLabel::K(r, s) | ModuleLabel::SimplePlus(r, s) if r < p_plus => {
            if r == 1 {
                one(k_collapse(params, 2, s))
            } else {
                two(k_collapse(params, r - 1, s), k_collapse(params, r + 1, s))
            }
        }
        // K_{2,1} ⊠ X±_{p+,s} = Q(X±_{p+-1,s})_{1,s}
        ModuleLabel::SimplePlus(_, s) => one(q_row(params, Sign::Plus, p_plus - 1, s)),
        ModuleLabel::SimpleMinus(r, s) if r == p_plus => one(q_row(params, Sign::Minus, p_plus - 1, s)),
        ModuleLabel::SimpleMinus(r, s) => {
            if r == 1 {
                one(ModuleLabel::SimpleMinus(2, s))
            } else {
                two(ModuleLabel::SimpleMinus(r - 1, s), ModuleLabel::SimpleMinus(r + 1, s))
            }
        }
        // Derived: K* columns are Z^2 of the K columns; Z^2 fixes thin simples.
        ModuleLabel::KStar(r, s) => {
            if r == 1 {
                one(kstar_collapse(params, 2, s))
            } else {
                two(kstar_collapse(params, r - 1, s), kstar_collapse(params, r + 1, s))
            }
        }
        ModuleLabel::Q(sign, a, b, c, d) if c == params.r_dual(a) && d == b => {
            // Row-reflected Q. At p+ = 2 the endpoint rules for a = 1 and
            // a = p+ - 1 overlap; the ring relation
            // U_3(Y) = 2 Z U_1(Y) on the unit forces the merged column
            // Y . [Q(X^e_{1,b})_{1,b}] = 2 [X^e_{2,b}] + 2 [X^-e_{2,b}],
            // i.e. both degenerate Q summands collapse to boundary simples.
            if p_plus == 2 {
                vec![(simple(sign, 2, b), 2), (simple(sign.flip(), 2, b), 2)]
            } else if a == p_plus - 1 {
                vec![(simple(sign, p_plus, b), 2), (q_row(params, sign, p_plus - 2, b), 1)]
            } else if a == 1 {
                vec![(simple(sign.flip(), p_plus, b), 2), (q_row(params, sign, 2, b), 1)]
            } else {
                two(q_row(params, sign, a - 1, b), q_row(params, sign, a + 1, b))
            }
        }
        ModuleLabel::Q(sign, a, b, _, _) => {
            // column-reflected Q, including the thin column at a = p+
            if a == p_plus {
                one(ModuleLabel::P(sign, p_plus - 1, b))
            } else if a == 1 {
                one(q_col(params, sign, 2, b))
            } else {
                two(q_col(params, sign, a - 1, b), q_col(params, sign, a + 1, b))
            }
        }
        ModuleLabel::P(sign, r, s) => {
            // Same p+ = 2 merge as for the row-reflected Q above:
            // Y . [P^e_{1,s}] = 2 [Q(X^e_{2,s})_{2,s'}] + 2 [Q(X^-e_{2,s})_{2,s'}].
            if p_plus == 2 {
                vec![(q_col(params, sign, 2, s), 2), (q_col(params, sign.flip(), 2, s), 2)]
            } else if r == p_plus - 1 {
                vec![(q_col(params, sign, p_plus, s), 2), (ModuleLabel::P(sign, p_plus - 2, s), 1)]
            } else if r == 1 {
                vec![(q_col(params, sign.flip(), p_plus, s), 2), (ModuleLabel::P(sign, 2, s), 1)]
            } else {
                two(ModuleLabel::P(sign, r - 1, s), ModuleLabel::P(sign, r + 1, s))
            }
        }
        ModuleLabel::Minimal(_, _) => Vec::new(),
    }
}

/// `X^-_{1,1} ⊠ M` for every basis label `M`.
fn lz_image(params: &AlgebraParams, label: &ModuleLabel) -> Image {
    let boundary = |r: u32, s: u32| r == params.p_plus() || s == params.p_minus();
    match *label {
        // X-_{1,1} ⊠ K_{r,s} = X-_{1,1} ⊠ X+_{r,s} = X-_{r,s}
        ModuleLabel::K(r, s) | ModuleLabel::SimplePlus(r, s) => one(ModuleLabel::SimpleMinus(r, s)),
        // Derived: from right-exactness applied to 0 -> L -> K* -> X+ -> 0,
        // X± ⊠ L = 0, and X-_{1,1} ⊠ X+_{r,s} = X-_{r,s}.
        ModuleLabel::KStar(r, s) => one(ModuleLabel::SimpleMinus(r, s)),
        ModuleLabel::SimpleMinus(r, s) => {
            if boundary(r, s) {
                // Derived: X-_{1,1} ⊠ X-_{r,s} = K*_{1,1} ⊠ K_{r,s}, which on
                // the boundary is the simple X+_{r,s} again.
                one(ModuleLabel::SimplePlus(r, s))
            } else {
                one(ModuleLabel::KStar(r, s))
            }
        }
        // X-_{1,1} ⊠ Q(X^e)_{c,d} = Q(X^-e)_{c,d};  X-_{1,1} ⊠ P^e = P^-e
        ModuleLabel::Q(sign, a, b, c, d) => one(ModuleLabel::Q(sign.flip(), a, b, c, d)),
        ModuleLabel::P(sign, r, s) => one(ModuleLabel::P(sign.flip(), r, s)),
        ModuleLabel::Minimal(_, _) => Vec::new(),
    }
}

fn build_matrix(
    params: &AlgebraParams,
    basis: &Basis,
    rule: impl Fn(&AlgebraParams, &ModuleLabel) -> Image,
    name: &str,
) -> Result<SparseIntMatrix, EngineError> {
    let mut columns = Vec::with_capacity(basis.len());
    for label in basis.labels() {
        let image = rule(params, label);
        if image.is_empty() {
            return Err(EngineError::InternalTableGap(format!("{name} column of {label}")));
        }
        let mut col = Vec::with_capacity(image.len());
        for (target, mult) in image {
            let idx = basis.index_of(&target).ok_or_else(|| {
                EngineError::InternalTableGap(format!("{name} column of {label} emits {target}, not a basis label"))
            })?;
            col.push((idx, BigInt::from(mult)));
        }
        columns.push(col);
    }
    Ok(SparseIntMatrix::from_columns(basis.len(), columns))
}

/// Builds the generator matrices for `params` over `basis`.
pub fn build_generator_action(params: &AlgebraParams, basis: &Basis) -> Result<GeneratorAction, EngineError> {
    Ok(GeneratorAction {
        lx: build_matrix(params, basis, lx_image, "Lx")?,
        ly: build_matrix(params, basis, ly_image, "Ly")?,
        lz: build_matrix(params, basis, lz_image, "Lz")?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::validate_params;

    fn column_labels(m: &SparseIntMatrix, basis: &Basis, label: &ModuleLabel) -> Vec<(String, BigInt)> {
        let j = basis.index_of(label).unwrap();
        m.column(j)
            .iter()
            .map(|(i, v)| (basis.label(*i).to_string(), v.clone()))
            .collect()
    }

    #[test]
    fn anchored_columns_at_2_3() {
        let params = validate_params(2, 3).unwrap();
        let basis = Basis::new(&params);
        let action = build_generator_action(&params, &basis).unwrap();

        assert_eq!(
            column_labels(&action.lx, &basis, &ModuleLabel::K(1, 1)),
            vec![("K[1,2]".to_string(), BigInt::from(1))]
        );
        assert_eq!(
            column_labels(&action.ly, &basis, &ModuleLabel::SimplePlus(2, 3)),
            vec![("Q(X+[1,3])[1,3]".to_string(), BigInt::from(1))]
        );
        assert_eq!(
            column_labels(&action.lz, &basis, &ModuleLabel::KStar(1, 1)),
            vec![("X-[1,1]".to_string(), BigInt::from(1))]
        );
    }

    #[test]
    fn every_column_has_at_most_four_targets_and_is_nonnegative() {
        for (p, q) in [(2, 3), (3, 4), (4, 5), (2, 7)] {
            let params = validate_params(p, q).unwrap();
            let basis = Basis::new(&params);
            let action = build_generator_action(&params, &basis).unwrap();
            for m in [&action.lx, &action.ly, &action.lz] {
                for j in 0..basis.len() {
                    let col = m.column(j);
                    assert!(col.len() <= 4, "column {} too wide", basis.label(j));
                    assert!(col.iter().all(|(_, v)| *v > BigInt::from(0)));
                }
            }
        }
    }

    #[test]
    fn p2_merged_rows_hit_both_signs() {
        // At p+ = 2 the Y action on Q(X^e_{1,b})_{1,b} lands on both
        // boundary simples with multiplicity two.
        let params = validate_params(2, 5).unwrap();
        let basis = Basis::new(&params);
        let action = build_generator_action(&params, &basis).unwrap();
        let got = column_labels(&action.ly, &basis, &ModuleLabel::Q(Sign::Plus, 1, 2, 1, 2));
        assert_eq!(
            got,
            vec![
                ("X+[2,2]".to_string(), BigInt::from(2)),
                ("X-[2,2]".to_string(), BigInt::from(2)),
            ]
        );
        let got = column_labels(&action.ly, &basis, &ModuleLabel::P(Sign::Minus, 1, 3));
        assert_eq!(
            got,
            vec![
                ("Q(X+[2,3])[2,2]".to_string(), BigInt::from(2)),
                ("Q(X-[2,3])[2,2]".to_string(), BigInt::from(2)),
            ]
        );
    }
}
