//! Rank-2 lifts of general matrices.

use crate::error::{Error, Result};
use crate::exact::coeff::QuadExt;
use crate::exact::rational::Rational;
use crate::exact::series::{PuiseuxSeries, QSeries};
use crate::trees::tree_from_rank2;
use crate::tropical::barvinok::barvinok_rank2;
use crate::tropical::matrix::TropMatrix;

use super::cert::{note, Claim, Lift, LiftCertificate, Positivity};
use super::labels::rooted_labels;

/// `t^B · t^C` for tropical factors `B` (`d x k`) and `C` (`k x n`): every
/// entry is a sum of monomials with coefficient 1, so nothing cancels.
pub fn lift_from_factors(b: &TropMatrix, c: &TropMatrix) -> Result<Lift> {
    if b.cols() != c.rows() {
        return Err(Error::DimensionMismatch(format!("{}x{} times {}x{}", b.rows(), b.cols(), c.rows(), c.cols())));
    }
    Ok((0..b.rows())
        .map(|i| {
            (0..c.cols())
                .map(|j| {
                    let terms = (0..b.cols()).map(|k| (b.get(i, k) + c.get(k, j), QuadExt::from(Rational::from_integer(1.into()))));
                    QSeries::exact(terms)
                })
                .collect()
        })
        .collect())
}

/// Positive rank-2 certificate for `A = B ⊙ C` with the given factors.
pub fn lift_rank2_positive_from_factors(a: &TropMatrix, b: &TropMatrix, c: &TropMatrix) -> Result<LiftCertificate> {
    let lift = lift_from_factors(b, c)?;
    let notes = vec![note("factorization", true, format!("inner dimension {}", b.cols()))];
    Ok(LiftCertificate::new(a, lift, Claim::Rank2, Positivity::AllPositive, "rank2_positive", None, notes))
}

/// Positive rank-2 lift of a matrix of Barvinok rank at most 2, read off the
/// caterpillar factorization.
pub fn lift_rank2_positive(a: &TropMatrix) -> Result<LiftCertificate> {
    let r = barvinok_rank2(a)?;
    let (b, c) = r.witness.ok_or(Error::NotBarvinok2)?;
    lift_rank2_positive_from_factors(a, &b, &c)
}

/// Rank-2 lift over the reals of any matrix of tropical rank at most 2.
///
/// With leaf coordinates from the rooted tree of `A`,
/// `Ã_ij = t^{s_i + u_j} (x(b_j) - x(r_i))`, a sum of two rank-1 matrices.
pub fn lift_rank2_real(a: &TropMatrix) -> Result<LiftCertificate> {
    let tree = tree_from_rank2(a)?.contracted();
    let rooted = rooted_labels(&tree, 0, None)?;
    let (d, n) = (a.rows(), a.cols());
    let u: Vec<Rational> = (0..n).map(|j| a.get(0, j) - rooted.meet(0, j)).collect();
    let s: Vec<Rational> = (0..d).map(|i| a.get(i, 0) - rooted.meet(i, 0) - &u[0]).collect();
    let lift: Lift = (0..d)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let diff: PuiseuxSeries = &rooted.blue_x[j] - &rooted.red_x[i];
                    diff.to_quad().shift(&(&s[i] + &u[j]))
                })
                .collect()
        })
        .collect();
    let notes = vec![note("tree", true, format!("{} internal nodes, rooted at node 0", tree.nodes))];
    Ok(LiftCertificate::new(a, lift, Claim::Rank2, Positivity::None, "rank2_real", None, notes))
}
