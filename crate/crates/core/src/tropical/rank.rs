//! Tropical rank and symmetric tropical rank by enumerating square submatrices.

use super::det::{is_sym_trop_singular, is_trop_singular, DEFAULT_ENUM_BOUND};
use super::matrix::TropMatrix;
use crate::error::{Error, Result};

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// A `k x k` submatrix that is tropically nonsingular, if any.
pub fn nonsingular_minor(a: &TropMatrix, k: usize, bound: usize) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    for rows in subsets(a.rows(), k) {
        for cols in subsets(a.cols(), k) {
            if !is_trop_singular(&a.submatrix(&rows, &cols), bound)? {
                return Ok(Some((rows, cols)));
            }
        }
    }
    Ok(None)
}

/// Size of the largest tropically nonsingular square submatrix.
///
/// A nonsingular `k x k` submatrix always contains a nonsingular
/// `(k-1) x (k-1)` one (delete a row and its matched column from the unique
/// optimal permutation), so the search can stop at the first size with none.
pub fn trop_rank(a: &TropMatrix) -> Result<usize> {
    trop_rank_bounded(a, DEFAULT_ENUM_BOUND)
}

pub fn trop_rank_bounded(a: &TropMatrix, bound: usize) -> Result<usize> {
    let kmax = a.rows().min(a.cols());
    let mut r = 1;
    for k in 2..=kmax {
        if k > bound {
            return Err(Error::SizeLimit { size: k, bound });
        }
        if nonsingular_minor(a, k, bound)?.is_none() {
            break;
        }
        r = k;
    }
    Ok(r)
}

/// Whether the submatrix on `rows x cols` is nonsingular in the symmetric
/// sense: principal submatrices use the symmetric determinant, all others the
/// plain one.
fn sym_nonsingular(a: &TropMatrix, rows: &[usize], cols: &[usize], bound: usize) -> Result<bool> {
    let sub = a.submatrix(rows, cols);
    if rows == cols {
        Ok(!is_sym_trop_singular(&sub, bound)?)
    } else {
        Ok(!is_trop_singular(&sub, bound)?)
    }
}

/// Size of the largest submatrix that is nonsingular in the symmetric sense.
/// First `k x k` submatrix that is nonsingular in the symmetric sense
/// (principal ones through the symmetric determinant).
pub fn sym_nonsingular_minor(a: &TropMatrix, k: usize, bound: usize) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    if !a.is_symmetric_valued() {
        return Err(Error::NotSymmetric);
    }
    let sets = subsets(a.rows(), k);
    for rows in &sets {
        for cols in &sets {
            if sym_nonsingular(a, rows, cols, bound)? {
                return Ok(Some((rows.clone(), cols.clone())));
            }
        }
    }
    Ok(None)
}

pub fn sym_trop_rank(a: &TropMatrix) -> Result<usize> {
    sym_trop_rank_bounded(a, DEFAULT_ENUM_BOUND)
}

pub fn sym_trop_rank_bounded(a: &TropMatrix, bound: usize) -> Result<usize> {
    if !a.is_symmetric_valued() {
        return Err(Error::NotSymmetric);
    }
    let n = a.rows();
    if n > bound {
        return Err(Error::SizeLimit { size: n, bound });
    }
    for k in (2..=n).rev() {
        let sets = subsets(n, k);
        for rows in &sets {
            for cols in &sets {
                if sym_nonsingular(a, rows, cols, bound)? {
                    return Ok(k);
                }
            }
        }
    }
    Ok(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eq1_ranks() {
        let a = TropMatrix::from_ints(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        assert_eq!(trop_rank(&a).unwrap(), 2);
        assert_eq!(sym_trop_rank(&a).unwrap(), 3);
    }

    #[test]
    fn zeros_rank_one() {
        for n in 1..5 {
            assert_eq!(trop_rank(&TropMatrix::zeros(n, n)).unwrap(), 1);
            assert_eq!(sym_trop_rank(&TropMatrix::zeros(n, n)).unwrap(), 1);
        }
    }

    #[test]
    fn subset_counts() {
        assert_eq!(subsets(5, 2).len(), 10);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }
}
