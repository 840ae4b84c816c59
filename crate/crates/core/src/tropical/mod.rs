//! Min-plus matrices, tropical determinants and rank notions.

pub mod barvinok;
pub mod det;
pub mod matrix;
pub mod perm;
pub mod rank;

pub use barvinok::{barvinok_rank2, sym_barvinok_rank2, BarvinokResult, SymBarvinokResult};
pub use det::{sym_trop_det, trop_det, trop_det_value, SignedMonomialClass, TropDetResult, DEFAULT_ENUM_BOUND};
pub use matrix::{trop_mat_mul, TropMatrix};
pub use rank::{sym_trop_rank, trop_rank};
