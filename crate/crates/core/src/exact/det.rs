//! Determinants over any commutative ring by Laplace expansion with
//! memoization over column subsets (`O(n 2^n)` ring multiplications).

use std::ops::{Add, Mul, Sub};

use super::coeff::Coeff;
use super::mpoly::MPoly;
use super::series::PuiseuxSeries;
use crate::error::{Error, Result};

/// The ring operations the subset expansion needs.
pub trait Ring: Clone {
    fn r_zero() -> Self;
    fn r_one() -> Self;
    fn r_add(&self, o: &Self) -> Self;
    fn r_sub(&self, o: &Self) -> Self;
    fn r_mul(&self, o: &Self) -> Self;
    fn r_is_zero(&self) -> bool;
}

impl<C: Coeff> Ring for PuiseuxSeries<C> {
    fn r_zero() -> Self {
        PuiseuxSeries::zero()
    }
    fn r_one() -> Self {
        PuiseuxSeries::one()
    }
    fn r_add(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn r_sub(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn r_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn r_is_zero(&self) -> bool {
        self.is_zero_to_trunc() && self.is_exact()
    }
}

impl Ring for MPoly {
    fn r_zero() -> Self {
        MPoly::zero()
    }
    fn r_one() -> Self {
        MPoly::one()
    }
    fn r_add(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn r_sub(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn r_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn r_is_zero(&self) -> bool {
        self.is_zero()
    }
}

/// Largest size accepted by [`ring_det`].
pub const RING_DET_MAX: usize = 16;

pub fn ring_det<T: Ring>(m: &[Vec<T>]) -> Result<T> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare(n, m.first().map_or(0, Vec::len)));
    }
    if n > RING_DET_MAX {
        return Err(Error::SizeLimit { size: n, bound: RING_DET_MAX });
    }
    // h[S] = det(rows 0..|S|, columns S), expanded along its last row
    let mut h: Vec<Option<T>> = vec![None; 1 << n];
    h[0] = Some(T::r_one());
    let mut masks: Vec<usize> = (1..1usize << n).collect();
    masks.sort_by_key(|s| s.count_ones());
    for s in masks {
        let k = s.count_ones() as usize;
        let row = &m[k - 1];
        let mut acc = T::r_zero();
        let mut pos = 0usize;
        for j in 0..n {
            if s & (1 << j) == 0 {
                continue;
            }
            if !row[j].r_is_zero() {
                if let Some(sub) = &h[s & !(1 << j)] {
                    let t = row[j].r_mul(sub);
                    acc = if (k - 1 + pos) % 2 == 0 { acc.r_add(&t) } else { acc.r_sub(&t) };
                }
            }
            pos += 1;
        }
        h[s] = Some(acc);
    }
    Ok(h[(1 << n) - 1].take().expect("full mask filled"))
}

/// All `k x k` minors indexed by (row subset, column subset).
pub fn minor<T: Ring>(m: &[Vec<T>], rows: &[usize], cols: &[usize]) -> Result<T> {
    let sub: Vec<Vec<T>> = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect()).collect();
    ring_det(&sub)
}
