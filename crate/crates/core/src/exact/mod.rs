//! Exact arithmetic: rationals, one quadratic extension, sparse polynomials
//! and truncated Puiseux series.

pub mod coeff;
pub mod det;
pub mod mpoly;
pub mod quadratic;
pub mod rational;
pub mod series;

pub use coeff::{Coeff, QuadExt};
pub use det::{minor, ring_det, Ring};
pub use mpoly::{mpoly_det, MPoly};
pub use quadratic::{quad_roots, QuadRoots};
pub use rational::{frac, int, parse_rational, Rational, Sign};
pub use series::{PuiseuxSeries, QSeries};
