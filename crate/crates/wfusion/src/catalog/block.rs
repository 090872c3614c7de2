use std::fmt;

use super::label::{canonical_kac, ModuleLabel, Sign, SimpleLabel};
use super::params::AlgebraParams;

/// A block of the module category: thick blocks indexed by canonical Kac
/// labels, thin row/column blocks, and the two semisimple blocks.
///
/// There are exactly `(p+-1)(p--1)/2 + (p+-1) + (p--1) + 2` blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BlockId {
    Thick(u32, u32),
    ThinRow(u32),
    ThinCol(u32),
    SemiSimple(Sign),
}

impl fmt::Display for BlockId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BlockId::Thick(r, s) => write!(f, "thick[{r},{s}]"),
            BlockId::ThinRow(r) => write!(f, "thin-row[{r}]"),
            BlockId::ThinCol(s) => write!(f, "thin-col[{s}]"),
            BlockId::SemiSimple(sign) => write!(f, "semisimple[{}]", sign.symbol()),
        }
    }
}

/// All block identifiers, in a fixed order.
pub fn all_blocks(params: &AlgebraParams) -> Vec<BlockId> {
    let mut out = Vec::new();
    for r in 1..params.p_plus() {
        for s in 1..params.p_minus() {
            if canonical_kac(params, r, s) == (r, s) {
                out.push(BlockId::Thick(r, s));
            }
        }
    }
    for r in 1..params.p_plus() {
        out.push(BlockId::ThinRow(r));
    }
    for s in 1..params.p_minus() {
        out.push(BlockId::ThinCol(s));
    }
    out.push(BlockId::SemiSimple(Sign::Plus));
    out.push(BlockId::SemiSimple(Sign::Minus));
    out
}

/// Block containing the simple module `X^sign_{r,s}`.
///
/// A thick block `C_{r,s}` contains `X+_{r,s}`, `X+_{r',s'}`, `X-_{r',s}`,
/// `X-_{r,s'}` (primes denote duals) and `L(h_{r,s})`; a thin row block
/// `C_{r,p-}` contains `X+_{r,p-}` and `X-_{p+-r,p-}`; the column case is
/// symmetric; `X±_{p+,p-}` each span a semisimple block.
pub fn block_of_simple(params: &AlgebraParams, simple: &SimpleLabel) -> BlockId {
    let p_plus = params.p_plus();
    let p_minus = params.p_minus();
    let SimpleLabel { sign, r, s } = *simple;
    let boundary_row = s == p_minus;
    let boundary_col = r == p_plus;
    match (boundary_col, boundary_row) {
        (true, true) => BlockId::SemiSimple(sign),
        (false, true) => match sign {
            Sign::Plus => BlockId::ThinRow(r),
            Sign::Minus => BlockId::ThinRow(params.r_dual(r)),
        },
        (true, false) => match sign {
            Sign::Plus => BlockId::ThinCol(s),
            Sign::Minus => BlockId::ThinCol(params.s_dual(s)),
        },
        (false, false) => {
            let (cr, cs) = match sign {
                Sign::Plus => canonical_kac(params, r, s),
                Sign::Minus => canonical_kac(params, params.r_dual(r), s),
            };
            BlockId::Thick(cr, cs)
        }
    }
}

/// Block containing a basis label, by membership of its composition factors.
pub fn block_of(params: &AlgebraParams, label: &ModuleLabel) -> BlockId {
    match *label {
        ModuleLabel::K(r, s) | ModuleLabel::KStar(r, s) | ModuleLabel::Minimal(r, s) => {
            let (cr, cs) = canonical_kac(params, r, s);
            BlockId::Thick(cr, cs)
        }
        ModuleLabel::SimplePlus(r, s) => block_of_simple(params, &SimpleLabel::new(Sign::Plus, r, s)),
        ModuleLabel::SimpleMinus(r, s) => block_of_simple(params, &SimpleLabel::new(Sign::Minus, r, s)),
        // A Q or P module lies in the block of its socle X^sign_{a,b}.
        ModuleLabel::Q(sign, a, b, _, _) => block_of_simple(params, &SimpleLabel::new(sign, a, b)),
        ModuleLabel::P(sign, r, s) => block_of_simple(params, &SimpleLabel::new(sign, r, s)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::basis::{enumerate_minimal_basis, enumerate_p_basis};
    use crate::catalog::params::validate_params;
    use std::collections::BTreeMap;

    #[test]
    fn block_count_formula() {
        for (p, q) in [(2, 3), (3, 4), (4, 5), (3, 10)] {
            let params = validate_params(p, q).unwrap();
            let expect = (p - 1) * (q - 1) / 2 + (p - 1) + (q - 1) + 2;
            assert_eq!(all_blocks(&params).len(), expect as usize);
        }
    }

    #[test]
    fn spec_anchored_assignments_at_2_3() {
        let params = validate_params(2, 3).unwrap();
        assert_eq!(
            block_of(&params, &ModuleLabel::SimpleMinus(1, 1)),
            BlockId::Thick(1, 1)
        );
        assert_eq!(
            block_of(&params, &ModuleLabel::SimplePlus(2, 3)),
            BlockId::SemiSimple(Sign::Plus)
        );
        assert_eq!(block_of(&params, &ModuleLabel::SimpleMinus(2, 1)), BlockId::ThinCol(2));
    }

    #[test]
    fn block_fibers_partition_the_basis() {
        for (p, q) in [(2, 3), (3, 4), (4, 5)] {
            let params = validate_params(p, q).unwrap();
            let mut fibers: BTreeMap<BlockId, usize> = BTreeMap::new();
            let mut total = 0usize;
            for label in enumerate_p_basis(&params)
                .into_iter()
                .chain(enumerate_minimal_basis(&params))
            {
                *fibers.entry(block_of(&params, &label)).or_default() += 1;
                total += 1;
            }
            let blocks = all_blocks(&params);
            assert_eq!(fibers.len(), blocks.len(), "every block inhabited at ({p},{q})");
            assert_eq!(fibers.values().sum::<usize>(), total);
            for b in blocks {
                assert!(fibers.contains_key(&b), "block {b} empty at ({p},{q})");
            }
        }
    }

    #[test]
    fn thick_representative_is_canonical() {
        let params = validate_params(3, 4).unwrap();
        // X-_{2,3}: dual row index 1, canonical of (1,3) is min((1,3),(2,1)) = (1,3)
        assert_eq!(
            block_of(&params, &ModuleLabel::SimpleMinus(2, 3)),
            BlockId::Thick(1, 3)
        );
        // P-[1,1] lies in the block of X-_{1,1}, i.e. thick canonical of (2,1) => (1,3)
        assert_eq!(block_of(&params, &ModuleLabel::P(Sign::Minus, 1, 1)), BlockId::Thick(1, 3));
    }
}
