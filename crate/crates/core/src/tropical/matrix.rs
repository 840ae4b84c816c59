use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::rational::{int, serde_matrix, Rational};

/// A `rows x cols` matrix over the min-plus semiring with finite rational entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
    symmetric: bool,
}

impl TropMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<TropMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(TropMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect(), symmetric: false })
    }

    /// Builds a matrix flagged symmetric; errors unless it really is.
    pub fn symmetric_from_rows(rows: Vec<Vec<Rational>>) -> Result<TropMatrix> {
        TropMatrix::from_rows(rows)?.into_symmetric()
    }

    pub fn from_ints(rows: &[&[i64]]) -> TropMatrix {
        TropMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .expect("well-formed integer matrix")
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> Rational) -> TropMatrix {
        let entries = (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).map(|(i, j)| f(i, j)).collect();
        TropMatrix { rows, cols, entries, symmetric: false }
    }

    pub fn zeros(rows: usize, cols: usize) -> TropMatrix {
        TropMatrix::from_fn(rows, cols, |_, _| Rational::zero())
    }

    pub fn into_symmetric(mut self) -> Result<TropMatrix> {
        if !self.is_symmetric_valued() {
            return Err(Error::NotSymmetric);
        }
        self.symmetric = true;
        Ok(self)
    }

    pub fn with_symmetric_flag(mut self, flag: bool) -> Result<TropMatrix> {
        if flag {
            return self.into_symmetric();
        }
        self.symmetric = false;
        Ok(self)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_symmetric_valued(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare(self.rows, self.cols))
        }
    }

    pub fn transpose(&self) -> TropMatrix {
        let mut t = TropMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone());
        t.symmetric = self.symmetric;
        t
    }

    /// The submatrix on the given rows and columns (never flagged symmetric).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> TropMatrix {
        TropMatrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Principal submatrix; keeps the symmetric flag.
    pub fn principal(&self, idx: &[usize]) -> TropMatrix {
        let mut m = self.submatrix(idx, idx);
        m.symmetric = self.symmetric;
        m
    }

    /// Adds `r_i + c_j` to every entry (tropical row and column scaling).
    pub fn scaled(&self, r: &[Rational], c: &[Rational]) -> TropMatrix {
        TropMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + &r[i] + &c[j])
    }

    /// Normal form with first row and first column zero.
    pub fn normalized(&self) -> TropMatrix {
        let a11 = self.get(0, 0).clone();
        TropMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - self.get(i, 0) - self.get(0, j) + &a11)
    }

    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> TropMatrix {
        let mut m = TropMatrix::from_fn(self.rows, self.cols, |i, j| f(self.get(i, j)));
        m.symmetric = self.symmetric;
        m
    }
}

/// `(B ⊙ C)_{ij} = min_k (B_{ik} + C_{kj})`.
pub fn trop_mat_mul(b: &TropMatrix, c: &TropMatrix) -> Result<TropMatrix> {
    if b.cols != c.rows {
        return Err(Error::DimensionMismatch(format!(
            "cannot multiply {}x{} by {}x{}",
            b.rows, b.cols, c.rows, c.cols
        )));
    }
    Ok(TropMatrix::from_fn(b.rows, c.cols, |i, j| {
        (0..b.cols).map(|k| b.get(i, k) + c.get(k, j)).min().expect("inner dimension is positive")
    }))
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    #[serde(default)]
    symmetric: bool,
    #[serde(with = "serde_matrix")]
    entries: Vec<Vec<Rational>>,
}

impl Serialize for TropMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson { symmetric: self.symmetric, entries: self.to_rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TropMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = MatrixJson::deserialize(d)?;
        TropMatrix::from_rows(j.entries)
            .and_then(|m| m.with_symmetric_flag(j.symmetric))
            .map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_string()).collect()).collect();
        let w = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in cells {
            let row: Vec<String> = row.iter().map(|c| format!("{c:>w$}")).collect();
            writeln!(f, "[ {} ]", row.join("  "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply() {
        let b = TropMatrix::from_ints(&[&[0], &[2], &[1]]);
        let c = b.transpose();
        assert_eq!(trop_mat_mul(&b, &c).unwrap(), TropMatrix::from_ints(&[&[0, 2, 1], &[2, 4, 3], &[1, 3, 2]]));
        let m1 = TropMatrix::from_ints(&[&[0, 2], &[2, 0], &[1, 0]]);
        let a = trop_mat_mul(&m1, &m1.transpose()).unwrap();
        assert_eq!(a, TropMatrix::from_ints(&[&[0, 2, 1], &[2, 0, 0], &[1, 0, 0]]));
        let rowmin = trop_mat_mul(&TropMatrix::from_ints(&[&[3, 1], &[0, 5]]), &TropMatrix::zeros(2, 1)).unwrap();
        assert_eq!(rowmin, TropMatrix::from_ints(&[&[1], &[0]]));
        assert!(trop_mat_mul(&m1, &m1).is_err());
    }

    #[test]
    fn json() {
        let m = TropMatrix::from_ints(&[&[0, 1], &[1, 0]]).into_symmetric().unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"symmetric":true,"entries":[["0","1"],["1","0"]]}"#);
        assert_eq!(serde_json::from_str::<TropMatrix>(&s).unwrap(), m);
        let bad = r#"{"symmetric":true,"entries":[["0","1"],["2","0"]]}"#;
        assert!(serde_json::from_str::<TropMatrix>(bad).is_err());
    }
}
