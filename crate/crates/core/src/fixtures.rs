//! Worked examples as ready-made inputs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::int;
use crate::newton::{table2_rows, Table2Row};
use crate::oracle::cocircuit_fixture;
use crate::tropical::matrix::{trop_mat_mul, TropMatrix};

pub const FIXTURE_NAMES: [&str; 8] = ["eq1", "fig2a", "fig3b", "fig3c", "fig4a", "ex52", "table2", "cocircuit-ag23"];

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Fixture {
    Matrix(TropMatrix),
    Table(Vec<Table2Row>),
}

/// The non-caterpillar rank-2 matrix `diag(a, b, c)` off a zero background.
pub fn eq1(a: i64, b: i64, c: i64) -> TropMatrix {
    TropMatrix::from_ints(&[&[a, 0, 0], &[0, b, 0], &[0, 0, c]])
}

/// Symbic caterpillar on three leaves with one fixed point.
pub fn fig2a(d2: i64, d3: i64) -> TropMatrix {
    sym(&[&[0, d2, d3], &[d2, 0, 0], &[d3, 0, 0]])
}

/// `M₁ ⊙ M₁ᵀ` for rows `(0, d)` or `(d, 0)`.
fn from_factor(rows: &[(i64, i64)]) -> TropMatrix {
    let m1 = TropMatrix::from_fn(rows.len(), 2, |i, k| int(if k == 0 { rows[i].0 } else { rows[i].1 }));
    trop_mat_mul(&m1, &m1.transpose()).expect("shapes agree").into_symmetric().expect("symmetric product")
}

/// Type (b) caterpillar with leaves 2, 3, 4 on the same side.
pub fn fig3b(d: [i64; 4]) -> TropMatrix {
    from_factor(&[(0, d[0]), (d[1], 0), (d[2], 0), (d[3], 0)])
}

/// Type (b) caterpillar with leaf 4 on the side of leaf 1.
pub fn fig3c(d: [i64; 4]) -> TropMatrix {
    from_factor(&[(0, d[0]), (d[1], 0), (d[2], 0), (0, d[3])])
}

/// Type (a) spine matrix: first row and column zero, `M_ij = d_max(i,j)`
/// otherwise, for `d₂ ≥ d₃ ≥ … ≥ d_n ≥ 0`.
pub fn fig4a(d: &[i64]) -> TropMatrix {
    let n = d.len() + 1;
    TropMatrix::from_fn(n, n, |i, j| if i == 0 || j == 0 { int(0) } else { int(d[i.max(j) - 1]) })
        .into_symmetric()
        .expect("symmetric by construction")
}

/// Symmetric matrix that is positive over `C` but not over `R`.
pub fn ex52() -> TropMatrix {
    sym(&[&[2, 0, 1, 0], &[0, 2, 0, 2], &[1, 0, 2, 0], &[0, 2, 0, 1]])
}

fn sym(rows: &[&[i64]]) -> TropMatrix {
    TropMatrix::from_ints(rows).into_symmetric().expect("symmetric fixture")
}

/// Looks up a fixture by name, with the default parameters.
pub fn fixture(name: &str) -> Result<Fixture> {
    Ok(Fixture::Matrix(match name {
        "eq1" => eq1(1, 1, 1),
        "fig2a" => fig2a(2, 1),
        "fig3b" => fig3b([3, 3, 2, 1]),
        "fig3c" => fig3c([3, 3, 2, 1]),
        "fig4a" => fig4a(&[3, 2, 1]),
        "ex52" => ex52(),
        "table2" => return Ok(Fixture::Table(table2_rows())),
        "cocircuit-ag23" => cocircuit_fixture(),
        _ => return Err(Error::UnknownFixture(name.into())),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropical::barvinok::sym_barvinok_rank2;

    #[test]
    fn every_name_resolves() {
        for name in FIXTURE_NAMES {
            assert!(fixture(name).is_ok(), "{name}");
        }
        assert_eq!(fixture("fig9"), Err(Error::UnknownFixture("fig9".into())));
    }

    #[test]
    fn caterpillar_fixtures_are_symmetric_barvinok() {
        for m in [fig2a(2, 1), fig3b([3, 3, 2, 1]), fig3c([3, 3, 2, 1])] {
            let r = sym_barvinok_rank2(&m).unwrap();
            assert!(r.sym_barvinok2, "{m}");
        }
        let r = sym_barvinok_rank2(&fig4a(&[3, 2, 1])).unwrap();
        assert!(r.caterpillar && !r.sym_barvinok2);
    }
}
