//! Parameter validation, the module-label grammar, basis enumeration,
//! block assignment, and exact conformal weights.

pub mod basis;
pub mod block;
pub mod label;
pub mod params;
pub mod weight;

pub use basis::{basis_len, basis_strings, enumerate_minimal_basis, enumerate_p_basis, enumerate_simple_basis, Basis, BasisKind};
pub use block::{all_blocks, block_of, block_of_simple, BlockId};
pub use label::{canonical_kac, format_label, parse_label, parse_simple_label, LabelError, ModuleLabel, Sign, SimpleLabel};
pub use params::{validate_params, AlgebraParams, ParamError};
pub use weight::{conformal_weight, ConformalWeight};
