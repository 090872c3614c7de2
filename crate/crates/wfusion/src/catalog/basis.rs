use std::collections::HashMap;

use super::label::{ModuleLabel, Sign, SimpleLabel};
use super::params::AlgebraParams;

/// Which basis to enumerate: the fusion-ring basis of indecomposables,
/// the Grothendieck basis of simples, or the canonical Kac table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisKind {
    P,
    K,
    Minimal,
}

/// The ordered fusion-ring basis with its index lookup.
///
/// The order is fixed once and for all so that structure tables, cache
/// files, and golden outputs are stable:
/// K lex, K* lex, interior X- lex, X+[r,p-] (r = 1..p+), X-[r,p-],
/// X+[p+,s] (s = 1..p- - 1), X-[p+,s], thick Q by sign and reflection
/// shape, thin Q row then column, P+ lex, P- lex.
#[derive(Debug, Clone)]
pub struct Basis {
    labels: Vec<ModuleLabel>,
    index: HashMap<ModuleLabel, usize>,
}

impl Basis {
    pub fn new(params: &AlgebraParams) -> Self {
        let labels = enumerate_p_basis(params);
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (*l, i))
            .collect();
        Basis { labels, index }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[ModuleLabel] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> ModuleLabel {
        self.labels[i]
    }

    pub fn index_of(&self, label: &ModuleLabel) -> Option<usize> {
        self.index.get(label).copied()
    }
}

/// Enumerates the fusion-ring basis in the fixed order.
/// Length: `9 p+ p- - 5 p+ - 5 p- + 3`.
pub fn enumerate_p_basis(params: &AlgebraParams) -> Vec<ModuleLabel> {
    let p_plus = params.p_plus();
    let p_minus = params.p_minus();
    let mut out = Vec::new();

    let interior = |f: &mut dyn FnMut(u32, u32)| {
        for r in 1..p_plus {
            for s in 1..p_minus {
                f(r, s);
            }
        }
    };

    interior(&mut |r, s| out.push(ModuleLabel::K(r, s)));
    interior(&mut |r, s| out.push(ModuleLabel::KStar(r, s)));
    interior(&mut |r, s| out.push(ModuleLabel::SimpleMinus(r, s)));
    for r in 1..=p_plus {
        out.push(ModuleLabel::SimplePlus(r, p_minus));
    }
    for r in 1..=p_plus {
        out.push(ModuleLabel::SimpleMinus(r, p_minus));
    }
    for s in 1..p_minus {
        out.push(ModuleLabel::SimplePlus(p_plus, s));
    }
    for s in 1..p_minus {
        out.push(ModuleLabel::SimpleMinus(p_plus, s));
    }
    for sign in [Sign::Plus, Sign::Minus] {
        interior(&mut |a, b| out.push(ModuleLabel::Q(sign, a, b, p_plus - a, b)));
        interior(&mut |a, b| out.push(ModuleLabel::Q(sign, a, b, a, p_minus - b)));
    }
    for sign in [Sign::Plus, Sign::Minus] {
        for a in 1..p_plus {
            out.push(ModuleLabel::Q(sign, a, p_minus, p_plus - a, p_minus));
        }
    }
    for sign in [Sign::Plus, Sign::Minus] {
        for b in 1..p_minus {
            out.push(ModuleLabel::Q(sign, p_plus, b, p_plus, p_minus - b));
        }
    }
    for sign in [Sign::Plus, Sign::Minus] {
        interior(&mut |r, s| out.push(ModuleLabel::P(sign, r, s)));
    }
    out
}

/// Enumerates the canonical Kac-table labels, lexicographically.
/// Length: `(p+ - 1)(p- - 1) / 2`.
pub fn enumerate_minimal_basis(params: &AlgebraParams) -> Vec<ModuleLabel> {
    let mut out = Vec::new();
    for r in 1..params.p_plus() {
        for s in 1..params.p_minus() {
            if super::label::canonical_kac(params, r, s) == (r, s) {
                out.push(ModuleLabel::Minimal(r, s));
            }
        }
    }
    out
}

/// Enumerates the Grothendieck basis of simple modules:
/// `X+[r,s]` lexicographically, then `X-[r,s]`. Length `2 p+ p-`.
pub fn enumerate_simple_basis(params: &AlgebraParams) -> Vec<SimpleLabel> {
    let mut out = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        for r in 1..=params.p_plus() {
            for s in 1..=params.p_minus() {
                out.push(SimpleLabel::new(sign, r, s));
            }
        }
    }
    out
}

/// Number of basis elements of the requested kind.
pub fn basis_len(params: &AlgebraParams, kind: BasisKind) -> usize {
    let p = params.p_plus() as usize;
    let q = params.p_minus() as usize;
    match kind {
        BasisKind::P => 9 * p * q - 5 * p - 5 * q + 3,
        BasisKind::K => 2 * p * q,
        BasisKind::Minimal => (p - 1) * (q - 1) / 2,
    }
}

/// The basis of the requested kind, rendered as grammar strings.
pub fn basis_strings(params: &AlgebraParams, kind: BasisKind) -> Vec<String> {
    match kind {
        BasisKind::P => enumerate_p_basis(params).iter().map(|l| l.to_string()).collect(),
        BasisKind::K => enumerate_simple_basis(params).iter().map(|l| l.to_string()).collect(),
        BasisKind::Minimal => enumerate_minimal_basis(params).iter().map(|l| l.to_string()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::params::validate_params;

    #[test]
    fn cardinalities_2_3() {
        let params = validate_params(2, 3).unwrap();
        assert_eq!(enumerate_p_basis(&params).len(), 32);
        assert_eq!(enumerate_simple_basis(&params).len(), 12);
        assert_eq!(enumerate_minimal_basis(&params), vec![ModuleLabel::Minimal(1, 1)]);
    }

    #[test]
    fn formula_matches_enumeration() {
        for (p, q) in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5), (5, 6)] {
            let params = validate_params(p, q).unwrap();
            assert_eq!(enumerate_p_basis(&params).len(), basis_len(&params, BasisKind::P));
            assert_eq!(enumerate_simple_basis(&params).len(), basis_len(&params, BasisKind::K));
            assert_eq!(
                enumerate_minimal_basis(&params).len(),
                basis_len(&params, BasisKind::Minimal)
            );
        }
    }

    #[test]
    fn frozen_order_at_2_3() {
        let params = validate_params(2, 3).unwrap();
        let basis = Basis::new(&params);
        let strings: Vec<String> = basis.labels().iter().map(|l| l.to_string()).collect();
        assert_eq!(
            strings,
            vec![
                "K[1,1]", "K[1,2]", "K*[1,1]", "K*[1,2]", "X-[1,1]", "X-[1,2]", "X+[1,3]",
                "X+[2,3]", "X-[1,3]", "X-[2,3]", "X+[2,1]", "X+[2,2]", "X-[2,1]", "X-[2,2]",
                "Q(X+[1,1])[1,1]", "Q(X+[1,2])[1,2]", "Q(X+[1,1])[1,2]", "Q(X+[1,2])[1,1]",
                "Q(X-[1,1])[1,1]", "Q(X-[1,2])[1,2]", "Q(X-[1,1])[1,2]", "Q(X-[1,2])[1,1]",
                "Q(X+[1,3])[1,3]", "Q(X-[1,3])[1,3]",
                "Q(X+[2,1])[2,2]", "Q(X+[2,2])[2,1]", "Q(X-[2,1])[2,2]", "Q(X-[2,2])[2,1]",
                "P+[1,1]", "P+[1,2]", "P-[1,1]", "P-[1,2]",
            ]
        );
    }

    #[test]
    fn labels_round_trip_through_grammar() {
        let params = validate_params(3, 4).unwrap();
        for label in enumerate_p_basis(&params) {
            let text = label.to_string();
            let back = crate::catalog::label::parse_label(&params, &text).unwrap();
            assert_eq!(back, label, "{text}");
        }
        for label in enumerate_minimal_basis(&params) {
            let back = crate::catalog::label::parse_label(&params, &label.to_string()).unwrap();
            assert_eq!(back, label);
        }
    }

    #[test]
    fn kac_involution_fixes_canonical_reps() {
        let params = validate_params(4, 5).unwrap();
        for label in enumerate_minimal_basis(&params) {
            let ModuleLabel::Minimal(r, s) = label else { unreachable!() };
            let (dr, ds) = (params.r_dual(r), params.s_dual(s));
            assert_eq!(crate::catalog::label::canonical_kac(&params, dr, ds), (r, s));
        }
    }
}
