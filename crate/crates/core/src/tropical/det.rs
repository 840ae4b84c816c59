//! Tropical determinants by exhaustive enumeration, and the assignment
//! (Hungarian) value for sizes beyond the enumeration bound.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::TropMatrix;
use super::perm::{cycle_notation, cycle_type, cycles, sign, Perm};
use crate::error::{Error, Result};
use crate::exact::rational::{serde_str, Rational};

/// Default largest `n` for exhaustive enumeration over `S_n`.
pub const DEFAULT_ENUM_BOUND: usize = 8;

/// A monomial of the (symmetric) determinant.
///
/// In the symmetric case `exponent` is upper triangular: entry `(i, j)` with
/// `i <= j` counts how often `m_ij` occurs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedMonomialClass {
    pub exponent: Vec<Vec<u8>>,
    pub sign: i32,
    pub coefficient: u64,
    pub representative: Perm,
    pub cycle_type: Vec<usize>,
}

impl SignedMonomialClass {
    pub fn plain(p: &[usize]) -> SignedMonomialClass {
        let n = p.len();
        let mut exponent = vec![vec![0u8; n]; n];
        for (i, &j) in p.iter().enumerate() {
            exponent[i][j] = 1;
        }
        SignedMonomialClass {
            exponent,
            sign: sign(p),
            coefficient: 1,
            representative: p.to_vec(),
            cycle_type: cycle_type(p),
        }
    }

    pub fn symmetric(p: &[usize]) -> SignedMonomialClass {
        let long = cycles(p).iter().filter(|c| c.len() >= 3).count();
        SignedMonomialClass {
            exponent: sym_exponent(p),
            sign: sign(p),
            coefficient: 1 << long,
            representative: p.to_vec(),
            cycle_type: cycle_type(p),
        }
    }

    pub fn cycles(&self) -> String {
        cycle_notation(&self.representative)
    }
}

/// Upper-triangular exponent of the symmetric-determinant monomial of `p`.
pub fn sym_exponent(p: &[usize]) -> Vec<Vec<u8>> {
    let n = p.len();
    let mut e = vec![vec![0u8; n]; n];
    for (i, &j) in p.iter().enumerate() {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        e[a][b] += 1;
    }
    e
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TropDetResult {
    #[serde(with = "serde_str")]
    pub min_value: Rational,
    pub argmin: Vec<SignedMonomialClass>,
    pub tie: bool,
}

/// Entries scaled to a common denominator, as machine integers when they fit.
enum Scaled {
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

fn scale(a: &TropMatrix) -> (Scaled, BigInt) {
    let mut lcm = BigInt::one();
    for i in 0..a.rows() {
        for x in a.row(i) {
            lcm = lcm.lcm(x.denom());
        }
    }
    let big: Vec<BigInt> =
        (0..a.rows()).flat_map(|i| a.row(i).iter()).map(|x| x.numer() * (&lcm / x.denom())).collect();
    // sums of at most 64 entries must stay in range
    let limit = BigInt::from(i64::MAX >> 7);
    if big.iter().all(|x| x.abs() < limit) {
        (Scaled::Small(big.iter().map(|x| x.to_i64().expect("checked range")).collect()), lcm)
    } else {
        (Scaled::Big(big), lcm)
    }
}

/// Minimum of `sum_i w(i, p(i))` over all permutations, with every minimizer.
fn enumerate<T>(n: usize, w: &[T]) -> (T, Vec<Perm>)
where
    T: Clone + Ord + Zero + for<'a> std::ops::Add<&'a T, Output = T>,
{
    let mut best: Option<T> = None;
    let mut arg: Vec<Perm> = Vec::new();
    let mut p = vec![0usize; n];
    let mut used = vec![false; n];
    fn rec<T>(
        k: usize,
        n: usize,
        w: &[T],
        acc: T,
        p: &mut Vec<usize>,
        used: &mut Vec<bool>,
        best: &mut Option<T>,
        arg: &mut Vec<Perm>,
    ) where
        T: Clone + Ord + Zero + for<'a> std::ops::Add<&'a T, Output = T>,
    {
        if k == n {
            match best {
                Some(b) if acc > *b => {}
                Some(b) if acc == *b => arg.push(p.clone()),
                _ => {
                    *best = Some(acc);
                    arg.clear();
                    arg.push(p.clone());
                }
            }
            return;
        }
        for j in 0..n {
            if used[j] {
                continue;
            }
            used[j] = true;
            p[k] = j;
            rec(k + 1, n, w, acc.clone() + &w[k * n + j], p, used, best, arg);
            used[j] = false;
        }
    }
    rec(0, n, w, T::zero(), &mut p, &mut used, &mut best, &mut arg);
    (best.expect("n >= 1"), arg)
}

/// Minimizing permutations and the minimum, for a square matrix.
fn min_perms(a: &TropMatrix, bound: usize) -> Result<(Rational, Vec<Perm>)> {
    let n = a.require_square()?;
    if n > bound {
        return Err(Error::SizeLimit { size: n, bound });
    }
    let (scaled, lcm) = scale(a);
    let (v, perms) = match scaled {
        Scaled::Small(w) => {
            let (v, p) = enumerate(n, &w);
            (BigInt::from(v), p)
        }
        Scaled::Big(w) => enumerate(n, &w),
    };
    Ok((Rational::new(v, lcm), perms))
}

/// Tropical determinant `min_sigma sum_i a_{i sigma(i)}` with all minimizers.
pub fn trop_det(a: &TropMatrix) -> Result<TropDetResult> {
    trop_det_bounded(a, DEFAULT_ENUM_BOUND)
}

pub fn trop_det_bounded(a: &TropMatrix, bound: usize) -> Result<TropDetResult> {
    let (min_value, perms) = min_perms(a, bound)?;
    let argmin: Vec<SignedMonomialClass> = perms.iter().map(|p| SignedMonomialClass::plain(p)).collect();
    Ok(TropDetResult { min_value, tie: argmin.len() >= 2, argmin })
}

/// Symmetric tropical determinant: the minimum over monomials of the
/// determinant of a symmetric matrix of indeterminates. Permutations that
/// differ by reversing cycles give the same monomial and are grouped.
pub fn sym_trop_det(a: &TropMatrix) -> Result<TropDetResult> {
    sym_trop_det_bounded(a, DEFAULT_ENUM_BOUND)
}

pub fn sym_trop_det_bounded(a: &TropMatrix, bound: usize) -> Result<TropDetResult> {
    if !a.is_symmetric_valued() {
        return Err(Error::NotSymmetric);
    }
    let (min_value, perms) = min_perms(a, bound)?;
    let mut classes: BTreeMap<Vec<Vec<u8>>, SignedMonomialClass> = BTreeMap::new();
    for p in perms {
        let c = SignedMonomialClass::symmetric(&p);
        classes.entry(c.exponent.clone()).or_insert(c);
    }
    let argmin: Vec<SignedMonomialClass> = classes.into_values().collect();
    Ok(TropDetResult { min_value, tie: argmin.len() >= 2, argmin })
}

/// True if the minimum in the (plain) tropical determinant is attained twice.
pub fn is_trop_singular(a: &TropMatrix, bound: usize) -> Result<bool> {
    Ok(min_perms(a, bound)?.1.len() >= 2)
}

/// True if the minimum in the symmetric tropical determinant is attained by
/// two distinct monomials.
pub fn is_sym_trop_singular(a: &TropMatrix, bound: usize) -> Result<bool> {
    Ok(sym_trop_det_bounded(a, bound)?.tie)
}

/// The optimal assignment value, for any size (Hungarian method with potentials).
pub fn trop_det_value(a: &TropMatrix) -> Result<Rational> {
    let n = a.require_square()?;
    // 1-based arrays, column 0 is a sentinel
    let mut u = vec![Rational::zero(); n + 1];
    let mut v = vec![Rational::zero(); n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0usize;
        let mut minv: Vec<Option<Rational>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta: Option<Rational> = None;
            let mut j1 = 0usize;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = a.get(i0 - 1, j - 1) - &u[i0] - &v[j];
                if minv[j].as_ref().map_or(true, |m| cur < *m) {
                    minv[j] = Some(cur);
                    way[j] = j0;
                }
                let mj = minv[j].as_ref().expect("set above");
                if delta.as_ref().map_or(true, |d| mj < d) {
                    delta = Some(mj.clone());
                    j1 = j;
                }
            }
            let delta = delta.expect("an unused column remains");
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += &delta;
                    v[j] -= &delta;
                } else if let Some(m) = minv[j].as_mut() {
                    *m -= &delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    Ok((1..=n).map(|j| a.get(p[j] - 1, j - 1).clone()).fold(Rational::zero(), |s, x| s + x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn eq1(a: i64, b: i64, c: i64) -> TropMatrix {
        TropMatrix::from_ints(&[&[a, 0, 0], &[0, b, 0], &[0, 0, c]])
    }

    #[test]
    fn eq1_tie_with_equal_signs() {
        let r = trop_det(&eq1(1, 1, 1)).unwrap();
        assert_eq!(r.min_value, int(0));
        assert!(r.tie);
        let names: Vec<String> = r.argmin.iter().map(|c| c.cycles()).collect();
        assert_eq!(names, vec!["(123)", "(132)"]);
        assert!(r.argmin.iter().all(|c| c.sign == 1));
    }

    #[test]
    fn one_by_one() {
        let r = trop_det(&TropMatrix::from_ints(&[&[5]])).unwrap();
        assert_eq!(r.min_value, int(5));
        assert!(!r.tie);
    }

    #[test]
    fn symmetric_identity_is_nonsingular() {
        let r = sym_trop_det(&eq1(1, 1, 1)).unwrap();
        assert_eq!(r.min_value, int(0));
        assert!(!r.tie);
        assert_eq!(r.argmin[0].exponent, vec![vec![0, 1, 1], vec![0, 0, 1], vec![0, 0, 0]]);
        assert_eq!(r.argmin[0].coefficient, 2);
    }

    #[test]
    fn five_classes_for_n3() {
        let r = sym_trop_det(&TropMatrix::zeros(3, 3)).unwrap();
        assert_eq!(r.argmin.len(), 5);
    }

    #[test]
    fn size_limit() {
        assert_eq!(
            trop_det(&TropMatrix::zeros(9, 9)),
            Err(Error::SizeLimit { size: 9, bound: 8 })
        );
        assert_eq!(trop_det_value(&TropMatrix::zeros(9, 9)).unwrap(), int(0));
    }

    #[test]
    fn hungarian_small() {
        let a = TropMatrix::from_ints(&[&[4, 1, 3], &[2, 0, 5], &[3, 2, 2]]);
        assert_eq!(trop_det_value(&a).unwrap(), trop_det(&a).unwrap().min_value);
    }
}
