//! Barvinok rank at most 2, decided on the bicolored tree, with explicit
//! factorization witnesses.

use std::collections::HashMap;

use num_traits::Zero;

use super::matrix::{trop_mat_mul, TropMatrix};
use super::rank::nonsingular_minor;
use crate::error::{Error, Result};
use crate::exact::rational::{int, Rational};
use crate::trees::{symbic_info, tree_from_rank2, BicoloredTree, FixedSet, SymbicClass};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarvinokResult {
    pub barvinok2: bool,
    /// Rows and columns of a tropically nonsingular 3x3 submatrix when the
    /// tropical rank exceeds 2.
    pub rank_evidence: Option<(Vec<usize>, Vec<usize>)>,
    pub tree: Option<BicoloredTree>,
    /// `B` (`d x 2`) and `C` (`2 x n`) with `B ⊙ C = A`.
    pub witness: Option<(TropMatrix, TropMatrix)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymBarvinokResult {
    pub sym_barvinok2: bool,
    pub rank_evidence: Option<(Vec<usize>, Vec<usize>)>,
    pub tree: Option<BicoloredTree>,
    pub class: Option<SymbicClass>,
    pub caterpillar: bool,
    pub one_fixed_point: bool,
    /// `B` (`n x 2`) with `B ⊙ Bᵀ = A`.
    pub witness: Option<TropMatrix>,
}

/// Position of every spine node, when the tree is a caterpillar.
fn spine_positions(t: &BicoloredTree) -> Option<HashMap<usize, Rational>> {
    Some(t.spine()?.into_iter().collect())
}

/// Decides Barvinok rank at most 2: the tree of `a` must be a caterpillar.
/// Spine coordinates `x` then give `A_ij = min(x(r_i), x(b_j)) + u_i + v_j`.
pub fn barvinok_rank2(a: &TropMatrix) -> Result<BarvinokResult> {
    if let Some(ev) = nonsingular_minor(a, 3, 3)? {
        return Ok(BarvinokResult { barvinok2: false, rank_evidence: Some(ev), tree: None, witness: None });
    }
    let tree = tree_from_rank2(a)?;
    let Some(pos) = spine_positions(&tree) else {
        return Ok(BarvinokResult { barvinok2: false, rank_evidence: None, tree: Some(tree), witness: None });
    };
    let x: Vec<Rational> = tree.red.iter().map(|v| pos[v].clone()).collect();
    let y: Vec<Rational> = tree.blue.iter().map(|v| pos[v].clone()).collect();
    let u: Vec<Rational> = (0..a.rows()).map(|i| a.get(i, 0) - (&x[i]).min(&y[0])).collect();
    let v: Vec<Rational> = (0..a.cols()).map(|j| a.get(0, j) - (&x[0]).min(&y[j]) - &u[0]).collect();
    let b = TropMatrix::from_fn(a.rows(), 2, |i, k| if k == 0 { &x[i] + &u[i] } else { u[i].clone() });
    let c = TropMatrix::from_fn(2, a.cols(), |k, j| if k == 0 { v[j].clone() } else { &y[j] + &v[j] });
    if trop_mat_mul(&b, &c)?.to_rows() != a.to_rows() {
        return Err(Error::InvalidTree("caterpillar witness does not reproduce the matrix".into()));
    }
    Ok(BarvinokResult { barvinok2: true, rank_evidence: None, tree: Some(tree), witness: Some((b, c)) })
}

/// Decides symmetric Barvinok rank at most 2: the tree must be a symbic
/// caterpillar whose swap fixes a single point `O`. With `q_i` the position of
/// red leaf `i` relative to `O`, `A_ij = min(q_i + q_j, 0) + w_i + w_j`.
pub fn sym_barvinok_rank2(a: &TropMatrix) -> Result<SymBarvinokResult> {
    if !a.is_symmetric_valued() {
        return Err(Error::NotSymmetric);
    }
    let mut out = SymBarvinokResult {
        sym_barvinok2: false,
        rank_evidence: None,
        tree: None,
        class: None,
        caterpillar: false,
        one_fixed_point: false,
        witness: None,
    };
    if let Some(ev) = nonsingular_minor(a, 3, 3)? {
        out.rank_evidence = Some(ev);
        return Ok(out);
    }
    let tree = tree_from_rank2(a)?;
    let info = symbic_info(&tree);
    out.class = Some(info.class);
    out.caterpillar = tree.is_caterpillar();
    out.one_fixed_point = info.class == SymbicClass::Symbic && info.fixed.as_ref().is_some_and(FixedSet::is_single_point);
    out.tree = Some(tree);
    if !(out.caterpillar && out.one_fixed_point) {
        return Ok(out);
    }
    let t = &info.tree;
    let pos = spine_positions(t).expect("caterpillar");
    let origin = match info.fixed.as_ref().expect("symbic") {
        FixedSet::Node(v) => pos[v].clone(),
        FixedSet::Midpoint(u, v) => (&pos[u] + &pos[v]) / int(2),
        _ => unreachable!("single fixed point"),
    };
    let q: Vec<Rational> = t.red.iter().map(|v| &pos[v] - &origin).collect();
    let w: Vec<Rational> = (0..a.rows())
        .map(|i| (a.get(i, i) - (&q[i] * int(2)).min(Rational::zero())) / int(2))
        .collect();
    let b = TropMatrix::from_fn(a.rows(), 2, |i, k| if k == 0 { &q[i] + &w[i] } else { w[i].clone() });
    if trop_mat_mul(&b, &b.transpose())?.to_rows() != a.to_rows() {
        return Err(Error::InvalidTree("symmetric witness does not reproduce the matrix".into()));
    }
    out.sym_barvinok2 = true;
    out.witness = Some(b);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eq1_is_not_barvinok2() {
        let a = TropMatrix::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let r = barvinok_rank2(&a).unwrap();
        assert!(!r.barvinok2);
        assert!(r.rank_evidence.is_none());
        assert!(!r.tree.unwrap().is_caterpillar());
    }

    #[test]
    fn caterpillar_has_factorizations() {
        let a = TropMatrix::from_ints(&[&[0, 2, 1], &[2, 0, 0], &[1, 0, 0]]);
        let r = barvinok_rank2(&a).unwrap();
        let (b, c) = r.witness.unwrap();
        assert_eq!(trop_mat_mul(&b, &c).unwrap(), a);
        let s = sym_barvinok_rank2(&a).unwrap();
        assert!(s.sym_barvinok2);
        let b = s.witness.unwrap();
        assert_eq!(trop_mat_mul(&b, &b.transpose()).unwrap(), a);
    }

    #[test]
    fn spine_type_is_barvinok_but_not_symmetric_barvinok() {
        // A_ij = min(d_i, d_j) along a spine with pairs at each node
        let d = [0i64, 3, 2, 1];
        let a = TropMatrix::from_fn(4, 4, |i, j| int(d[i].min(d[j])));
        assert!(barvinok_rank2(&a).unwrap().barvinok2);
        let s = sym_barvinok_rank2(&a).unwrap();
        assert!(!s.sym_barvinok2);
        assert_eq!(s.class, Some(SymbicClass::Symbic));
        assert!(s.caterpillar);
    }

    #[test]
    fn rank_three_rejected_with_evidence() {
        let a = TropMatrix::from_ints(&[&[0, 5, 5], &[5, 0, 5], &[5, 5, 0]]);
        let r = barvinok_rank2(&a).unwrap();
        assert!(!r.barvinok2);
        assert_eq!(r.rank_evidence, Some((vec![0, 1, 2], vec![0, 1, 2])));
    }
}
