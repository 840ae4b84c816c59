//! Symbolic discriminants of a symmetric determinant with generic
//! coefficients `c_ij t^{A_ij}`.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::mpoly::{mpoly_det, sym_var, MPoly};
use crate::tropical::matrix::TropMatrix;

/// Lowest `t`-degree part of a discriminant: `t^degree · coefficient`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingTerm {
    pub degree: u32,
    pub coefficient: MPoly,
    /// `n` of the matrix, for naming variables.
    pub n: usize,
}

impl LeadingTerm {
    /// Writes `c_ij` (1-based) for the coefficient variables.
    pub fn render(&self) -> String {
        let names: Vec<String> = (0..self.n)
            .flat_map(|i| (i..self.n).map(move |j| format!("c{}{}", i + 1, j + 1)))
            .collect();
        let mut parts = Vec::new();
        for (m, c) in self.coefficient.terms() {
            let mut s = c.to_string();
            for (v, &e) in m.iter().enumerate().filter(|(_, &e)| e > 0) {
                s.push('*');
                s.push_str(&names[v]);
                if e > 1 {
                    s.push_str(&format!("^{e}"));
                }
            }
            parts.push(s);
        }
        let t = match self.degree {
            0 => String::new(),
            1 => "*t".into(),
            d => format!("*t^{d}"),
        };
        let body = if parts.len() == 1 { parts.remove(0) } else { format!("({})", parts.join(" + ")) };
        format!("{body}{t}")
    }
}

/// Variable index of `t` after the `n(n+1)/2` coefficients.
pub fn t_var(n: usize) -> usize {
    n * (n + 1) / 2
}

/// `det(c_ij t^{A_ij})` for a symmetric matrix with nonnegative integer
/// entries.
pub fn symbolic_det(a: &TropMatrix) -> Result<MPoly> {
    let n = a.require_square()?;
    if !a.is_symmetric_valued() {
        return Err(Error::NotSymmetric);
    }
    let t = MPoly::var(t_var(n));
    let mut m = vec![vec![MPoly::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let e = a.get(i, j);
            let k = e
                .is_integer()
                .then(|| e.to_integer().to_u32())
                .flatten()
                .ok_or_else(|| Error::Parse(format!("entry {e} is not a nonnegative integer")))?;
            let mut x = MPoly::var(sym_var(i, j, n));
            for _ in 0..k {
                x = &x * &t;
            }
            m[i][j] = x.clone();
            m[j][i] = x;
        }
    }
    mpoly_det(&m)
}

/// Discriminant of the determinant as a quadratic in `c_pq` (`p != q`),
/// reduced to its lowest power of `t`.
pub fn leading_discriminant(a: &TropMatrix, p: usize, q: usize) -> Result<LeadingTerm> {
    let n = a.require_square()?;
    if p == q || p >= n || q >= n {
        return Err(Error::DimensionMismatch(format!("need an off-diagonal entry, got ({p}, {q})")));
    }
    let disc = symbolic_det(a)?.disc(sym_var(p.min(q), p.max(q), n))?;
    let tv = t_var(n);
    let degree = disc.terms().map(|(m, _)| m.get(tv).copied().unwrap_or(0)).min().ok_or(Error::InversionOfZero)?;
    Ok(LeadingTerm { degree, coefficient: disc.coeff_of(tv, degree), n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    #[test]
    fn ex52_leading_discriminant() {
        let a = TropMatrix::from_ints(&[&[2, 0, 1, 0], &[0, 2, 0, 2], &[1, 0, 2, 0], &[0, 2, 0, 1]]);
        let lead = leading_discriminant(&a, 0, 1).unwrap();
        assert_eq!(lead.degree, 2);
        let c = |i: usize, j: usize| MPoly::var(sym_var(i - 1, j - 1, 4));
        let want = [c(1, 3), c(1, 4), c(2, 3), c(2, 3), c(3, 4), c(4, 4)]
            .iter()
            .fold(MPoly::constant(int(-8)), |acc, x| &acc * x);
        assert_eq!(lead.coefficient, want);
        assert_eq!(lead.render(), "-8*c13*c14*c23^2*c34*c44*t^2");
    }
}
