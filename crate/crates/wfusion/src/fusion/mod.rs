//! The non-semisimple fusion ring on the indecomposable basis: generator
//! matrices, Chebyshev presentations, fusion products, structure constants,
//! closed-form simple products, the minimal sector, the quotient that
//! identifies `K` with `K*`, and the verification suite.

pub mod action;
pub mod cache;
pub mod closed_form;
pub mod minimal;
pub mod poly;
pub mod pprime;
pub mod table;
pub mod vector;
pub mod verify;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::catalog::{AlgebraParams, Basis, ModuleLabel};
use crate::chebyshev::apply_u_scan;

pub use action::{build_generator_action, GeneratorAction};
pub use poly::{module_polynomial, ModulePolynomial};
pub use table::{structure_constants, StructureTable};
pub use vector::IntVector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("label {0} is not a fusion-ring basis element")]
    NotInPBasis(String),
    #[error("no fusion rule produced {0}; the rule table has a gap")]
    InternalTableGap(String),
    #[error("cache file is corrupt: {0}")]
    CacheCorruption(String),
}

/// The assembled engine: parameters, the fixed basis, and the three
/// generator matrices. Immutable after construction; all queries are pure.
#[derive(Debug, Clone)]
pub struct FusionEngine {
    params: AlgebraParams,
    basis: Basis,
    action: GeneratorAction,
}

impl FusionEngine {
    pub fn new(params: AlgebraParams) -> Result<Self, EngineError> {
        let basis = Basis::new(&params);
        let action = build_generator_action(&params, &basis)?;
        Ok(FusionEngine { params, basis, action })
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn action(&self) -> &GeneratorAction {
        &self.action
    }

    /// Index of the unit object `K[1,1]`.
    pub fn unit_index(&self) -> usize {
        self.basis
            .index_of(&ModuleLabel::K(1, 1))
            .expect("K[1,1] is always a basis element")
    }

    /// Evaluates `f(Lx, Ly, Lz) . v` for a module polynomial, applying the
    /// Y sum first, then the X sum, then the Z power. The result does not
    /// depend on the order because the generators commute; fixing it makes
    /// intermediates reproducible.
    pub fn apply_polynomial(&self, poly: &ModulePolynomial, v: &[BigInt]) -> Vec<BigInt> {
        let mut after_y = vec![BigInt::zero(); v.len()];
        let max_y = poly.y_indices.iter().copied().max().unwrap_or(0);
        apply_u_scan(&self.action.ly, max_y, v, |m, u| {
            let hits = poly.y_indices.iter().filter(|&&b| b == m).count();
            for _ in 0..hits {
                crate::matrix::dense_add_assign(&mut after_y, u);
            }
        })
        .expect("basis dimensions agree");

        let mut after_x = vec![BigInt::zero(); v.len()];
        let max_x = poly.x_indices.iter().copied().max().unwrap_or(0);
        apply_u_scan(&self.action.lx, max_x, &after_y, |m, u| {
            let hits = poly.x_indices.iter().filter(|&&a| a == m).count();
            for _ in 0..hits {
                crate::matrix::dense_add_assign(&mut after_x, u);
            }
        })
        .expect("basis dimensions agree");

        let mut out = after_x;
        for _ in 0..poly.z_exponent {
            out = self.action.lz.mul_vec(&out);
        }
        out
    }

    /// `m1 ⊠ m2` as a multiplicity vector: `f_{m1}(Lx,Ly,Lz) . e_{m2}`.
    pub fn fuse(&self, m1: &ModuleLabel, m2: &ModuleLabel) -> Result<IntVector, EngineError> {
        let poly = module_polynomial(&self.params, m1)?;
        let j = self
            .basis
            .index_of(m2)
            .ok_or_else(|| EngineError::NotInPBasis(m2.to_string()))?;
        let e = self.action.lx.basis_vec(j);
        Ok(IntVector::from_dense(&self.apply_polynomial(&poly, &e)))
    }

    /// `fuse` by basis indices.
    pub fn fuse_indices(&self, i: usize, j: usize) -> IntVector {
        let poly = module_polynomial(&self.params, &self.basis.label(i)).expect("basis labels are in the ring");
        let e = self.action.lx.basis_vec(j);
        IntVector::from_dense(&self.apply_polynomial(&poly, &e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{validate_params, Sign};

    #[test]
    fn unit_acts_as_identity() {
        let params = validate_params(2, 3).unwrap();
        let engine = FusionEngine::new(params).unwrap();
        for label in engine.basis().labels() {
            let out = engine.fuse(&ModuleLabel::K(1, 1), label).unwrap();
            let expect = IntVector::unit(engine.basis().index_of(label).unwrap());
            assert_eq!(out, expect, "unit row at {label}");
        }
    }

    #[test]
    fn x_minus_squares_to_k_star() {
        let params = validate_params(2, 3).unwrap();
        let engine = FusionEngine::new(params).unwrap();
        let out = engine
            .fuse(&ModuleLabel::SimpleMinus(1, 1), &ModuleLabel::SimpleMinus(1, 1))
            .unwrap();
        let expect = IntVector::unit(engine.basis().index_of(&ModuleLabel::KStar(1, 1)).unwrap());
        assert_eq!(out, expect);
    }

    #[test]
    fn boundary_square_at_2_3() {
        // X+_{2,1} ⊠ X+_{2,1} = Q(X+_{1,1})_{1,1} at (2,3)
        let params = validate_params(2, 3).unwrap();
        let engine = FusionEngine::new(params).unwrap();
        let out = engine
            .fuse(&ModuleLabel::SimplePlus(2, 1), &ModuleLabel::SimplePlus(2, 1))
            .unwrap();
        let expect = IntVector::unit(
            engine
                .basis()
                .index_of(&ModuleLabel::Q(Sign::Plus, 1, 1, 1, 1))
                .unwrap(),
        );
        assert_eq!(out, expect);
    }

    #[test]
    fn unit_fixes_projectives() {
        let params = validate_params(3, 4).unwrap();
        let engine = FusionEngine::new(params).unwrap();
        let p = ModuleLabel::P(Sign::Plus, 1, 1);
        let out = engine.fuse(&ModuleLabel::K(1, 1), &p).unwrap();
        assert_eq!(out, IntVector::unit(engine.basis().index_of(&p).unwrap()));
    }
}
