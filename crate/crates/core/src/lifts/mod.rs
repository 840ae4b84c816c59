//! Explicit lifts of tropical matrices to Puiseux-series matrices, each
//! returned with a certificate that is rechecked from scratch.

pub mod cert;
pub mod corank;
mod labels;
pub mod rank2;
pub mod sym;
pub mod symbolic;

pub use cert::{positive_minor_signs, verify_lift, Check, Claim, Lift, LiftCertificate, Positivity};
pub use corank::{lift_corank1, lift_sym_corank1};
pub use rank2::{lift_from_factors, lift_rank2_positive, lift_rank2_positive_from_factors, lift_rank2_real};
pub use sym::{bordered_glue, lift_sym_caterpillar, lift_sym_from_factor, lift_sym_rank2_real, spine_recursion, Glue};
pub use symbolic::{leading_discriminant, symbolic_det, LeadingTerm};

use crate::error::Result;
use crate::exact::rational::Rational;
use crate::membership::{FieldMode, Variety};
use crate::tropical::matrix::TropMatrix;

/// Lift into `variety` over `mode`. `order` cuts series that are not exact
/// (only the symmetric corank-1 quadratic produces them).
pub fn lift(variety: Variety, a: &TropMatrix, mode: FieldMode, seed: u64, order: Option<Rational>) -> Result<LiftCertificate> {
    match (variety, mode.positive()) {
        (Variety::Rank2, false) => lift_rank2_real(a),
        (Variety::Rank2, true) => lift_rank2_positive(a),
        (Variety::SymRank2, false) => lift_sym_rank2_real(a),
        (Variety::SymRank2, true) => lift_sym_caterpillar(a),
        (Variety::Corank1, _) => lift_corank1(a, mode, seed),
        (Variety::SymCorank1, _) => lift_sym_corank1(a, mode, seed, order),
    }
}
