//! Symmetric rank-2 lifts: explicit positive lifts of caterpillar matrices,
//! real lifts of symbic trees, and the bordered glue of two symmetric blocks.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exact::coeff::QuadExt;
use crate::exact::det::ring_det;
use crate::exact::quadratic::quad_roots;
use crate::exact::rational::{int, Rational, Sign};
use crate::exact::series::{PuiseuxSeries, QSeries};
use crate::trees::{symbic_info, tree_from_rank2, FixedSet, SymbicClass};
use crate::tropical::barvinok::{barvinok_rank2, sym_barvinok_rank2};
use crate::tropical::matrix::TropMatrix;
use crate::tropical::rank::sym_nonsingular_minor;
use crate::tropical::DEFAULT_ENUM_BOUND;

use super::cert::{note, Claim, Lift, LiftCertificate, Positivity};
use super::labels::{rooted_labels, subdivide};
use super::rank2::lift_from_factors;

fn require_symmetric(a: &TropMatrix) -> Result<()> {
    a.require_square()?;
    if a.is_symmetric_valued() {
        Ok(())
    } else {
        Err(Error::NotSymmetric)
    }
}

/// `t^B · (t^B)ᵀ` for a symmetric tropical factorization `A = B ⊙ Bᵀ`.
pub fn lift_sym_from_factor(a: &TropMatrix, b: &TropMatrix) -> Result<LiftCertificate> {
    require_symmetric(a)?;
    let lift = lift_from_factors(b, &b.transpose())?;
    let notes = vec![note("factorization", true, format!("{}x{} symmetric factor", b.rows(), b.cols()))];
    Ok(LiftCertificate::new(a, lift, Claim::SymRank2, Positivity::AllPositive, "sym_caterpillar_product", None, notes))
}

/// Positive symmetric rank-2 lift of a symmetric matrix whose tree is a
/// symbic caterpillar.
///
/// A single fixed point gives a symmetric tropical factorization, lifted
/// as a product. A fixed spine is lifted by the row recursion
/// `M̃_i = t^{d_i} M̃_1 + M̃_2`, with `d_i` the spine position of leaf pair `i`.
pub fn lift_sym_caterpillar(a: &TropMatrix) -> Result<LiftCertificate> {
    require_symmetric(a)?;
    let r = sym_barvinok_rank2(a)?;
    if r.rank_evidence.is_some() {
        return Err(Error::NotRank2);
    }
    if let Some(b) = &r.witness {
        return lift_sym_from_factor(a, b);
    }
    if !r.caterpillar {
        return Err(Error::NotCaterpillar);
    }
    let info = symbic_info(r.tree.as_ref().expect("rank at most 2"));
    if !matches!(info.fixed, Some(FixedSet::Path(_))) {
        return Err(Error::NotCaterpillar);
    }
    let t = &info.tree;
    let pos: HashMap<usize, Rational> = t.spine().ok_or(Error::NotCaterpillar)?.into_iter().collect();
    let n = a.rows();
    let p: Vec<Rational> = t.red.iter().map(|v| pos[v].clone()).collect();
    if t.blue.iter().zip(&p).any(|(v, x)| &pos[v] != x) {
        return Err(Error::NotCaterpillar);
    }
    let lo = p.iter().min().cloned().unwrap_or_default();
    let d: Vec<Rational> = p.iter().map(|x| x - &lo).collect();
    let m = spine_recursion(&d);
    let w: Vec<Rational> = (0..n).map(|i| (a.get(i, i) - &d[i]) / int(2)).collect();
    let lift = (0..n).map(|i| (0..n).map(|j| m[i][j].shift(&(&w[i] + &w[j]))).collect()).collect();
    let notes = vec![note("spine", true, format!("pair offsets {}", d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))];
    Ok(LiftCertificate::new(a, lift, Claim::SymRank2, Positivity::AllPositive, "sym_caterpillar_spine", None, notes))
}

/// The spine lift: row `i1` (offset 0) and row `i2` (largest offset) are
/// `[1, 1]` and `[1, t^{d_2}]` on each other; every other row is
/// `t^{d_i}` times row `i1` plus row `i2`.
pub fn spine_recursion(d: &[Rational]) -> Lift {
    let n = d.len();
    if n == 0 {
        return Vec::new();
    }
    let i1 = (0..n).min_by_key(|&i| &d[i]).expect("nonempty");
    let i2 = (0..n).filter(|&i| i != i1).max_by_key(|&i| &d[i]);
    let one = QSeries::one();
    let Some(i2) = i2 else {
        return vec![vec![one]];
    };
    let base = [[one.clone(), one.clone()], [one.clone(), QSeries::t_pow(d[i2].clone())]];
    let coords: Vec<[QSeries; 2]> = (0..n)
        .map(|i| {
            if i == i1 {
                [one.clone(), QSeries::zero()]
            } else if i == i2 {
                [QSeries::zero(), one.clone()]
            } else {
                [QSeries::t_pow(d[i].clone()), one.clone()]
            }
        })
        .collect();
    (0..n)
        .map(|i| (0..n).map(|j| bilinear(&coords[i], &base, &coords[j])).collect())
        .collect()
}

fn bilinear<const K: usize>(u: &[QSeries; K], m: &[[QSeries; K]; K], v: &[QSeries; K]) -> QSeries {
    let mut acc = QSeries::zero();
    for k in 0..K {
        for l in 0..K {
            acc = &acc + &(&(&u[k] * &m[k][l]) * &v[l]);
        }
    }
    acc
}

/// Real symmetric rank-2 lift of a matrix of symmetric tropical rank at
/// most 2. Caterpillar inputs get the positive lift; otherwise the symbic
/// tree is rooted at a point fixed by the color swap, leaf labels are chosen
/// antisymmetric so that `x(r_i) = -x(b_i)`, and
/// `Ã_ij = t^{w_i + w_j} (x(b_i) + x(b_j))`.
pub fn lift_sym_rank2_real(a: &TropMatrix) -> Result<LiftCertificate> {
    require_symmetric(a)?;
    if sym_nonsingular_minor(a, 3, DEFAULT_ENUM_BOUND)?.is_some() {
        return Err(Error::NotRank2);
    }
    if barvinok_rank2(a)?.barvinok2 {
        if let Ok(cert) = lift_sym_caterpillar(a) {
            if cert.valid {
                return Ok(cert);
            }
        }
    }
    let info = symbic_info(&tree_from_rank2(a)?);
    if info.class != SymbicClass::Symbic {
        return Err(Error::NotRank2);
    }
    let mut inv = info.involution.clone().expect("symbic");
    let (t, root) = match info.fixed.clone().expect("symbic") {
        FixedSet::Node(v) => (info.tree.clone(), v),
        FixedSet::Midpoint(u, v) => {
            inv.push(info.tree.nodes);
            (subdivide(&info.tree, u, v), info.tree.nodes)
        }
        FixedSet::Path(p) => (info.tree.clone(), p[0]),
        FixedSet::Branched(_) => return Err(Error::NotRank2),
    };
    let rooted = rooted_labels(&t, root, Some(&inv))?;
    let n = a.rows();
    let anti = (0..n).all(|i| rooted.red_x[i] == -&rooted.blue_x[i]);
    let w: Vec<Rational> = (0..n).map(|i| (a.get(i, i) - rooted.meet(i, i)) / int(2)).collect();
    let lift = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let y: PuiseuxSeries = &rooted.blue_x[i] + &rooted.blue_x[j];
                    y.to_quad().shift(&(&w[i] + &w[j]))
                })
                .collect()
        })
        .collect();
    let notes = vec![note("antisymmetric labels", anti, format!("rooted at a fixed point of {} nodes", t.nodes))];
    Ok(LiftCertificate::new(a, lift, Claim::SymRank2, Positivity::None, "sym_rank2_real", None, notes))
}

/// Outcome of [`bordered_glue`].
#[derive(Clone, Debug, PartialEq)]
pub struct Glue {
    /// The bordered `3 x 3` block with the glue entry filled in (or left 0
    /// when no real root exists).
    pub m_tilde: Lift,
    /// Leading signs of the two `2 x 2` principal minors that contain the
    /// shared index.
    pub minor_signs: (Sign, Sign),
    pub disc_sign: Sign,
    /// The glue entry, a root of valuation 0.
    pub x: Option<QSeries>,
    /// The full symmetric completion, indexed as the rows of `b` without
    /// the shared one, then the shared index, then the rows of `c` without
    /// the shared one.
    pub lift: Option<Lift>,
}

pub(super) fn rational(s: &QSeries) -> Result<PuiseuxSeries> {
    s.to_rational().ok_or_else(|| {
        let d = s.radicand().unwrap_or_default();
        Error::NestedRadical(d.clone(), d)
    })
}

/// Coefficients `(α, β)` with `α g_0 + β g_1 = rhs` for the rows `g_0, g_1`.
fn coordinates(g: [[&QSeries; 2]; 2], rhs: [&QSeries; 2], order: &Rational) -> Result<[QSeries; 2]> {
    let det = &(g[0][0] * g[1][1]) - &(g[0][1] * g[1][0]);
    let alpha = (&(rhs[0] * g[1][1]) - &(rhs[1] * g[1][0])).div(&det, order)?;
    let beta = (&(g[0][0] * rhs[1]) - &(g[0][1] * rhs[0])).div(&det, order)?;
    Ok([alpha, beta])
}

/// Glues symmetric rank-2 lifts `b` of `[[B, 0], [0, 0]]` and `c` of
/// `[[0, 0], [0, C]]` along the shared index (last of `b`, first of `c`).
///
/// Both blocks are rescaled by the other's shared diagonal entry, the entry
/// linking the last row of `B` with the first row of `C` solves the
/// quadratic `det M̃ = 0` with the root of valuation 0, and the remaining
/// entries come from writing every row in terms of the three rows of `M̃`.
/// The discriminant is `4` times the product of the two `2 x 2` minors, so
/// the root is real when they share a sign.
pub fn bordered_glue(b: &Lift, c: &Lift, order: &Rational) -> Result<Glue> {
    let (m, r) = (b.len().saturating_sub(1), c.len().saturating_sub(1));
    if m == 0 || r == 0 {
        return Err(Error::DimensionMismatch("both blocks need at least two rows".into()));
    }
    let scale = |x: &Lift, s: &QSeries| -> Lift { x.iter().map(|row| row.iter().map(|e| e * s).collect()).collect() };
    let (zb, zc) = (b[m][m].clone(), c[0][0].clone());
    let b = scale(b, &zc);
    let c = scale(c, &zb);
    let z = b[m][m].clone();
    let p = m - 1;
    let block = |x: &QSeries| -> Lift {
        vec![
            vec![b[p][p].clone(), b[p][m].clone(), x.clone()],
            vec![b[p][m].clone(), z.clone(), c[0][1].clone()],
            vec![x.clone(), c[0][1].clone(), c[1][1].clone()],
        ]
    };
    let eval = |x: i64| ring_det(&block(&QSeries::constant(QuadExt::from(int(x)))));
    let (p0, p1, pm) = (rational(&eval(0)?)?, rational(&eval(1)?)?, rational(&eval(-1)?)?);
    let half = Rational::new(1.into(), 2.into());
    let qa = &(&p1 + &pm).scale(&half) - &p0;
    let qb = (&p1 - &pm).scale(&half);
    let upper = &(&b[p][p] * &z) - &(&b[p][m] * &b[p][m]);
    let lower = &(&z * &c[1][1]) - &(&c[0][1] * &c[0][1]);
    let minor_signs = (upper.lead_sign()?, lower.lead_sign()?);
    let roots = quad_roots(&qa, &qb, &p0, order)?;
    let x = roots.roots.and_then(|(x1, x2)| {
        [x1, x2].into_iter().find(|x| x.val().ok().flatten().is_some_and(|v| v == Rational::from_integer(0.into())))
    });
    let Some(x) = x else {
        return Ok(Glue { m_tilde: block(&QSeries::zero()), minor_signs, disc_sign: roots.disc_sign, x: None, lift: None });
    };
    let m_tilde = block(&x);

    let zero = QSeries::zero();
    let one = QSeries::one();
    let mut coords: Vec<[QSeries; 3]> = Vec::with_capacity(m + r + 1);
    for i in 0..m {
        if i == p {
            coords.push([one.clone(), zero.clone(), zero.clone()]);
        } else {
            let g = [[&b[p][p], &b[p][m]], [&b[m][p], &b[m][m]]];
            let [al, be] = coordinates(g, [&b[i][p], &b[i][m]], order)?;
            coords.push([al, be, zero.clone()]);
        }
    }
    coords.push([zero.clone(), one.clone(), zero.clone()]);
    for k in 1..=r {
        if k == 1 {
            coords.push([zero.clone(), zero.clone(), one.clone()]);
        } else {
            let g = [[&c[0][0], &c[0][1]], [&c[1][0], &c[1][1]]];
            let [ga, de] = coordinates(g, [&c[k][0], &c[k][1]], order)?;
            coords.push([zero.clone(), ga, de]);
        }
    }
    let mt: [[QSeries; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| m_tilde[i][j].clone()));
    let lift = coords.iter().map(|u| coords.iter().map(|v| bilinear(u, &mt, v)).collect()).collect();
    Ok(Glue { m_tilde, minor_signs, disc_sign: roots.disc_sign, x: Some(x), lift: Some(lift) })
}
