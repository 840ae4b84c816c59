//! Sparse multivariate polynomials with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// Dense exponent vector with trailing zeros trimmed, so the derived `Ord`
/// on `Vec<u32>` is the lexicographic monomial order with variable 0 largest.
pub type Monomial = Vec<u32>;

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &[u32], b: &[u32]) -> Monomial {
    let n = a.len().max(b.len());
    (0..n).map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)).collect()
}

fn mono_div(a: &[u32], b: &[u32]) -> Option<Monomial> {
    if b.len() > a.len() {
        return None;
    }
    let mut out = a.to_vec();
    for (i, &e) in b.iter().enumerate() {
        out[i] = out[i].checked_sub(e)?;
    }
    Some(trim(out))
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero() -> MPoly {
        MPoly::default()
    }

    pub fn constant(c: Rational) -> MPoly {
        MPoly::from_terms([(Vec::new(), c)])
    }

    pub fn one() -> MPoly {
        MPoly::constant(Rational::one())
    }

    pub fn var(i: usize) -> MPoly {
        let mut m = vec![0; i + 1];
        m[i] = 1;
        MPoly::from_terms([(m, Rational::one())])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> MPoly {
        let mut p = MPoly::zero();
        for (m, c) in terms {
            p.add_term(trim(m), c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        MPoly::from_terms(self.terms.iter().map(|(m, x)| (m.clone(), x * c)))
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.get(v).copied().unwrap_or(0)).max().unwrap_or(0)
    }

    /// The coefficient of `x_v^k`, as a polynomial in the other variables.
    pub fn coeff_of(&self, v: usize, k: u32) -> MPoly {
        MPoly::from_terms(self.terms.iter().filter(|(m, _)| m.get(v).copied().unwrap_or(0) == k).map(
            |(m, c)| {
                let mut m = m.clone();
                if v < m.len() {
                    m[v] = 0;
                }
                (m, c.clone())
            },
        ))
    }

    /// Exact quotient `self / d`; errors if the division leaves a remainder.
    pub fn div_exact(&self, d: &MPoly) -> Result<MPoly> {
        let (lm, lc) = d.terms.iter().next_back().ok_or(Error::InversionOfZero)?;
        let mut r = self.clone();
        let mut q = MPoly::zero();
        while let Some((m, c)) = r.terms.iter().next_back() {
            let qm = mono_div(m, lm)
                .ok_or_else(|| Error::DimensionMismatch("polynomial division is not exact".into()))?;
            let t = MPoly::from_terms([(qm, c / lc)]);
            r = &r - &(&t * d);
            q = &q + &t;
        }
        Ok(q)
    }

    /// `B^2 - 4AC` for `p = A v^2 + B v + C`.
    pub fn disc(&self, v: usize) -> Result<MPoly> {
        if self.degree_in(v) > 2 {
            return Err(Error::NotQuadratic(v));
        }
        let a = self.coeff_of(v, 2);
        let b = self.coeff_of(v, 1);
        let c = self.coeff_of(v, 0);
        Ok(&(&b * &b) - &(&a * &c).scale(&int(4)))
    }

    /// Evaluates with `f` supplying the value of each variable.
    pub fn eval<T>(&self, zero: T, f: impl Fn(usize) -> T, from_rat: impl Fn(&Rational) -> T) -> T
    where
        T: Clone + for<'a> Add<&'a T, Output = T> + for<'a> Mul<&'a T, Output = T>,
    {
        let mut acc = zero;
        for (m, c) in &self.terms {
            let mut t = from_rat(c);
            for (i, &e) in m.iter().enumerate() {
                let x = f(i);
                for _ in 0..e {
                    t = t * &x;
                }
            }
            acc = acc + &t;
        }
        acc
    }
}

/// Index of the symmetric variable `m_{ij}` (`i <= j`) in an `n x n` matrix,
/// enumerating the upper triangle row by row.
pub fn sym_var(i: usize, j: usize, n: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * n - i * (i + 1) / 2 + j
}

/// The `n x n` symmetric matrix of indeterminates `m_{ij} = m_{ji}`.
pub fn symmetric_symbolic(n: usize) -> Vec<Vec<MPoly>> {
    (0..n).map(|i| (0..n).map(|j| MPoly::var(sym_var(i, j, n))).collect()).collect()
}

/// The `n x n` matrix of independent indeterminates, `m_{ij}` is variable `i*n + j`.
pub fn generic_symbolic(n: usize) -> Vec<Vec<MPoly>> {
    (0..n).map(|i| (0..n).map(|j| MPoly::var(i * n + j)).collect()).collect()
}

/// Deletes row and column `k`.
pub fn principal_minor_matrix<T: Clone>(m: &[Vec<T>], k: usize) -> Vec<Vec<T>> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != k)
        .map(|(_, row)| row.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, x)| x.clone()).collect())
        .collect()
}

/// Symbolic determinant: cofactor expansion up to `3 x 3`, fraction-free
/// Bareiss elimination beyond.
pub fn mpoly_det(m: &[Vec<MPoly>]) -> Result<MPoly> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare(n, m.first().map_or(0, Vec::len)));
    }
    if n <= 3 {
        return Ok(cofactor(m));
    }
    bareiss(m.to_vec())
}

fn cofactor(m: &[Vec<MPoly>]) -> MPoly {
    let n = m.len();
    match n {
        0 => MPoly::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = MPoly::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<MPoly>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let t = &m[0][j] * &cofactor(&sub);
                acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
            }
            acc
        }
    }
}

fn bareiss(mut a: Vec<Vec<MPoly>>) -> Result<MPoly> {
    let n = a.len();
    let mut sign = false;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(MPoly::zero());
            };
            a.swap(k, p);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign { -&d } else { d })
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, o: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, o: &MPoly) -> MPoly {
        self + &(-o)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, o: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                out.add_term(trim(mono_mul(ma, mb)), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let vars: Vec<String> = m
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
                    .collect();
                if vars.is_empty() {
                    c.to_string()
                } else {
                    format!("{c}*{}", vars.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_2x2() {
        let m = generic_symbolic(2);
        let want = &(&MPoly::var(0) * &MPoly::var(3)) - &(&MPoly::var(1) * &MPoly::var(2));
        assert_eq!(mpoly_det(&m).unwrap(), want);
    }

    #[test]
    fn bareiss_agrees_with_cofactor() {
        let m = generic_symbolic(4);
        let b = mpoly_det(&m).unwrap();
        // Laplace along the first row with 3x3 cofactors
        let mut c = MPoly::zero();
        for j in 0..4 {
            let sub: Vec<Vec<MPoly>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let t = &m[0][j] * &mpoly_det(&sub).unwrap();
            c = if j % 2 == 0 { &c + &t } else { &c - &t };
        }
        assert_eq!(b, c);
        assert_eq!(b.len(), 24);
    }

    #[test]
    fn discriminant_is_product_of_minors() {
        for n in 2..=4 {
            let m = symmetric_symbolic(n);
            let det = mpoly_det(&m).unwrap();
            for i in 0..n {
                for j in i + 1..n {
                    let lhs = det.disc(sym_var(i, j, n)).unwrap();
                    let mi = mpoly_det(&principal_minor_matrix(&m, i)).unwrap();
                    let mj = mpoly_det(&principal_minor_matrix(&m, j)).unwrap();
                    assert_eq!(lhs, (&mi * &mj).scale(&int(4)), "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn not_quadratic() {
        let x = MPoly::var(0);
        let p = &(&x * &x) * &x;
        assert_eq!(p.disc(0), Err(Error::NotQuadratic(0)));
    }
}
