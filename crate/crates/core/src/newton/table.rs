//! The five sample monomials of the 4x4 symmetric determinant, regenerated
//! from their permutations.

use serde::{Deserialize, Serialize};

use super::{monomial_text, SemisimpleGraph};
use crate::exact::rational::{serde_matrix, Rational};
use crate::tropical::det::SignedMonomialClass;
use crate::tropical::perm::{cycles, parse_cycles, Perm};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table2Row {
    pub monomial: String,
    /// Every orientation of the long cycles, fixed points written out.
    pub permutations: Vec<String>,
    pub upper_triangular: Vec<Vec<u8>>,
    #[serde(with = "serde_matrix")]
    pub symmetric: Vec<Vec<Rational>>,
    /// Graph edges, 1-based; `(i, i)` is a loop.
    pub graph: Vec<(usize, usize)>,
    pub vertex: bool,
}

/// Cycle notation listing fixed points too, e.g. `(1)(2)(34)`.
fn full_notation(p: &[usize]) -> String {
    let mut parts: Vec<Vec<usize>> = (0..p.len()).filter(|&i| p[i] == i).map(|i| vec![i]).collect();
    parts.extend(cycles(p));
    parts.sort();
    parts.iter().map(|c| format!("({})", c.iter().map(|x| (x + 1).to_string()).collect::<String>())).collect()
}

/// All permutations giving the same monomial as `p`.
fn orientations(p: &[usize]) -> Vec<Perm> {
    let long: Vec<Vec<usize>> = cycles(p).into_iter().filter(|c| c.len() >= 3).collect();
    let mut out = Vec::new();
    for mask in 0..(1usize << long.len()) {
        let mut q = p.to_vec();
        for (k, c) in long.iter().enumerate() {
            if mask >> k & 1 == 1 {
                for w in 0..c.len() {
                    q[c[(w + 1) % c.len()]] = c[w];
                }
            }
        }
        out.push(q);
    }
    out
}

pub fn table_row(c: &SignedMonomialClass) -> Table2Row {
    let n = c.exponent.len();
    let half = |k: u8| Rational::new(k.into(), 2.into());
    let symmetric = (0..n)
        .map(|i| (0..n).map(|j| if i == j { half(2 * c.exponent[i][i]) } else { half(c.exponent[i.min(j)][i.max(j)]) }).collect())
        .collect();
    let g = SemisimpleGraph::of_class(c);
    Table2Row {
        monomial: monomial_text(c),
        permutations: orientations(&c.representative).iter().map(|p| full_notation(p)).collect(),
        upper_triangular: c.exponent.clone(),
        symmetric,
        graph: g.edges.iter().map(|&(a, b)| (a + 1, b + 1)).collect(),
        vertex: g.is_vertex_shaped(),
    }
}

/// Rows of the sample table: a 3-cycle, a transposition with two fixed points,
/// the two products of disjoint transpositions, and the 4-cycle.
pub fn table2_rows() -> Vec<Table2Row> {
    ["(123)", "(34)", "(12)(34)", "(14)(23)", "(1234)"]
        .iter()
        .map(|s| table_row(&SignedMonomialClass::symmetric(&parse_cycles(s, 4).expect("valid cycles"))))
        .collect()
}
