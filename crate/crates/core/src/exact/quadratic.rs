//! Real roots of `A x^2 + B x + C` over Puiseux series.

use super::coeff::QuadExt;
use super::rational::{int, Rational, Sign};
use super::series::{PuiseuxSeries, QSeries};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct QuadRoots {
    /// Both real roots when the discriminant is nonnegative.
    pub roots: Option<(QSeries, QSeries)>,
    pub disc_sign: Sign,
}

/// Solves `A x^2 + B x + C = 0` in the real closure.
///
/// The root `q / A` with `q = -(B + sgn(B) sqrt(disc)) / 2` never subtracts
/// leading terms, and the partner root is recovered as `C / q`. Series that
/// are not exact are cut at `order`.
pub fn quad_roots(
    a: &PuiseuxSeries,
    b: &PuiseuxSeries,
    c: &PuiseuxSeries,
    order: &Rational,
) -> Result<QuadRoots> {
    a.val_finite()?;
    let disc = &(b * b) - &(a * c).scale(&int(4));
    let disc_sign = disc.lead_sign()?;
    if disc_sign == Sign::Negative {
        return Ok(QuadRoots { roots: None, disc_sign });
    }
    let (aq, bq, cq) = (a.to_quad(), b.to_quad(), c.to_quad());
    let two = QuadExt::from(int(2));
    if disc_sign == Sign::Zero {
        let x = (-&bq).div(&aq.scale(&two), order)?;
        return Ok(QuadRoots { roots: Some((x.clone(), x)), disc_sign });
    }
    let root = disc.sqrt(order)?;
    let signed = if b.lead_sign()? == Sign::Negative { -&root } else { root };
    let half = QuadExt::from(Rational::new(1.into(), 2.into()));
    let q = (-&(&bq + &signed)).scale(&half);
    if q.is_zero_to_trunc() {
        let z = QSeries::zero();
        return Ok(QuadRoots { roots: Some((z.clone(), z)), disc_sign });
    }
    let x1 = q.div(&aq, order)?;
    let x2 = if cq.is_zero_to_trunc() && cq.is_exact() { QSeries::zero() } else { cq.div(&q, order)? };
    Ok(QuadRoots { roots: Some((x1, x2)), disc_sign })
}

/// Both roots of `A x^2 + B x + C = 0` over the complex closure. A negative
/// discriminant gives roots in an imaginary quadratic extension.
pub fn quad_roots_complex(
    a: &PuiseuxSeries,
    b: &PuiseuxSeries,
    c: &PuiseuxSeries,
    order: &Rational,
) -> Result<(QSeries, QSeries)> {
    let real = quad_roots(a, b, c, order)?;
    if let Some(r) = real.roots {
        return Ok(r);
    }
    let disc = &(a * c).scale(&int(4)) - &(b * b);
    let root = disc.sqrt(order)?;
    let terms: Option<Vec<(Rational, QuadExt)>> = root.terms().iter().map(|(e, x)| Some((e.clone(), x.times_i()?))).collect();
    let d = disc.terms()[0].1.clone();
    let root = QSeries::new(terms.ok_or(Error::NestedRadical(d.clone(), d))?, root.trunc().cloned());
    let (aq, bq, cq) = (a.to_quad(), b.to_quad(), c.to_quad());
    let q = (-&(&bq + &root)).scale(&QuadExt::from(Rational::new(1.into(), 2.into())));
    Ok((q.div(&aq, order)?, cq.div(&q, order)?))
}
