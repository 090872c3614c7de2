use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::catalog::{Basis, ModuleLabel};

/// An integer-multiplicity vector over the fixed fusion-ring basis,
/// sparse with zeros dropped. Indices refer to a [`Basis`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntVector {
    entries: BTreeMap<usize, BigInt>,
}

impl IntVector {
    pub fn new() -> Self {
        IntVector::default()
    }

    pub fn unit(index: usize) -> Self {
        let mut v = IntVector::new();
        v.entries.insert(index, BigInt::from(1));
        v
    }

    pub fn from_dense(dense: &[BigInt]) -> Self {
        let entries = dense
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect();
        IntVector { entries }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); dim];
        for (&i, v) in &self.entries {
            out[i] = v.clone();
        }
        out
    }

    pub fn add_assign(&mut self, index: usize, value: BigInt) {
        if value.is_zero() {
            return;
        }
        let slot = self.entries.entry(index).or_insert_with(BigInt::zero);
        *slot += value;
        if slot.is_zero() {
            self.entries.remove(&index);
        }
    }

    pub fn get(&self, index: usize) -> BigInt {
        self.entries.get(&index).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.entries.iter().map(|(&i, v)| (i, v))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|v| v.sign() != num_bigint::Sign::Minus)
    }

    /// The entries resolved against a basis, in basis order.
    pub fn terms<'a>(&'a self, basis: &'a Basis) -> impl Iterator<Item = (ModuleLabel, &'a BigInt)> + 'a {
        self.entries.iter().map(|(&i, v)| (basis.label(i), v))
    }

    /// Plain-text rendering, e.g. `K*[1,1]` or `2*X+[2,3] + Q(X+[1,1])[1,2]`.
    pub fn display(&self, basis: &Basis) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.entries.len());
        for (label, mult) in self.terms(basis) {
            if *mult == BigInt::from(1) {
                parts.push(label.to_string());
            } else {
                parts.push(format!("{mult}*{label}"));
            }
        }
        parts.join(" + ")
    }
}

impl FromIterator<(usize, BigInt)> for IntVector {
    fn from_iter<T: IntoIterator<Item = (usize, BigInt)>>(iter: T) -> Self {
        let mut v = IntVector::new();
        for (i, x) in iter {
            v.add_assign(i, x);
        }
        v
    }
}
