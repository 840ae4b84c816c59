//! Singular lifts: a tie in the (symmetric) tropical determinant is lifted
//! by solving `det = 0` for one entry.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact::coeff::QuadExt;
use crate::exact::det::ring_det;
use crate::exact::quadratic::{quad_roots, quad_roots_complex};
use crate::exact::rational::{frac, int, Rational, Sign};
use crate::exact::series::{PuiseuxSeries, QSeries};
use crate::membership::{argmin_edges, cycle_pair_reports, long_even_cycle, member_sym_corank1, FieldMode, ReasonKind};
use crate::newton::{birkhoff_edge, NewtonEdge};
use crate::tropical::det::{sym_trop_det, trop_det, SignedMonomialClass};
use crate::tropical::matrix::TropMatrix;

use super::sym::rational;
use super::cert::{note, Claim, Lift, LiftCertificate, Positivity};

/// Redraws of the generic coefficients before giving up.
pub const MAX_ATTEMPTS: usize = 32;

fn coefficient(rng: &mut ChaCha8Rng) -> Rational {
    frac(rng.gen_range(1..=97), rng.gen_range(1..=7))
}

fn factorial(n: usize) -> Rational {
    (1..=n as i64).map(int).fold(Rational::one(), |a, b| a * b)
}

fn term(c: Rational, e: Rational) -> QSeries {
    QSeries::monomial(QuadExt::from(c), e)
}

fn val_is(s: &QSeries, v: &Rational) -> bool {
    s.val().ok().flatten().as_ref() == Some(v)
}

/// Two argmin permutations joined by an edge of the Birkhoff polytope, of
/// opposite signs when `positive`.
fn adjacent_pair(argmin: &[SignedMonomialClass], positive: bool) -> Option<(Vec<usize>, Vec<usize>)> {
    for (k, x) in argmin.iter().enumerate() {
        for y in &argmin[k + 1..] {
            if (!positive || x.sign != y.sign) && birkhoff_edge(&x.representative, &y.representative) {
                return Some((x.representative.clone(), y.representative.clone()));
            }
        }
    }
    None
}

/// Singular lift of a square matrix whose tropical determinant has a tie;
/// in the positive modes the tie must join permutations of both signs and
/// the lift is all-positive.
///
/// Columns are shifted so that `σ₁` sits at valuation 0, entries on
/// `σ₁ ∪ σ₂` get generic coefficients and the rest are damped by a factor
/// small enough that `σ₁` and `σ₂` decide the leading terms. With
/// `det = α x + β` in the entry `(i, σ₁(i))`, row `i` is multiplied by
/// `±α` and that entry set to `∓β`, which makes the determinant vanish
/// exactly.
pub fn lift_corank1(a: &TropMatrix, mode: FieldMode, seed: u64) -> Result<LiftCertificate> {
    let n = a.require_square()?;
    let det = trop_det(a)?;
    if !det.tie {
        return Err(Error::NoTie);
    }
    let positive = mode.positive();
    let (s1, s2) = adjacent_pair(&det.argmin, positive).ok_or(if positive { Error::SameSigns } else { Error::NotOnEdge })?;
    let mut inv = vec![0; n];
    for (k, &j) in s1.iter().enumerate() {
        inv[j] = k;
    }
    let kappa: Vec<Rational> = (0..n).map(|j| a.get(inv[j], j).clone()).collect();
    let i = (0..n).find(|&k| s1[k] != s2[k]).expect("distinct permutations");
    let support: BTreeSet<(usize, usize)> = (0..n).flat_map(|k| [(k, s1[k]), (k, s2[k])]).collect();
    // a monomial with a damped entry stays below the σ₁ and σ₂ coefficients
    let eps = Rational::one() / (int(2) * factorial(n) * (0..n).map(|_| int(679)).fold(Rational::one(), |x, y| x * y));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..MAX_ATTEMPTS {
        let mut l: Lift = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let mut x = coefficient(&mut rng);
                        if !support.contains(&(r, c)) {
                            x *= &eps;
                        }
                        term(x, a.get(r, c) - &kappa[c])
                    })
                    .collect()
            })
            .collect();
        l[i][s1[i]] = QSeries::zero();
        let beta = ring_det(&l)?;
        l[i][s1[i]] = QSeries::one();
        let alpha = &ring_det(&l)? - &beta;
        let zero = Rational::zero();
        if !val_is(&alpha, &zero) || !val_is(&beta, &zero) {
            continue;
        }
        let (sa, sb) = (alpha.lead_sign()?, beta.lead_sign()?);
        if positive && sa == sb {
            continue;
        }
        let s = QSeries::constant(QuadExt::from(int(sa.as_i32() as i64)));
        let scale = &s * &alpha;
        for c in 0..n {
            l[i][c] = if c == s1[i] { -&(&s * &beta) } else { &scale * &l[i][c] };
        }
        let lift: Lift = l.iter().map(|row| row.iter().zip(&kappa).map(|(x, k)| x.shift(k)).collect()).collect();
        let notes = vec![
            note("tie", true, format!("{} and {}", cycle_str(&s1), cycle_str(&s2))),
            note("solve", true, format!("entry ({}, {}) after {} redraw(s)", i, s1[i], attempt)),
        ];
        let pos = if positive { Positivity::AllPositive } else { Positivity::None };
        return Ok(LiftCertificate::new(a, lift, Claim::Singular, pos, "corank1", Some(seed), notes));
    }
    Err(Error::DegenerateGeneric(MAX_ATTEMPTS))
}

fn cycle_str(p: &[usize]) -> String {
    crate::tropical::perm::cycle_notation(p)
}

/// The Newton polytope edge a symmetric lift is built on.
fn choose_edge(a: &TropMatrix, argmin: &[SignedMonomialClass], mode: FieldMode) -> Result<NewtonEdge> {
    let edges = argmin_edges(argmin);
    let four = |e: &&NewtonEdge| {
        e.lattice_length == 2 && e.midpoint.as_ref().and_then(long_even_cycle).is_some_and(|c| c.len() % 4 == 0)
    };
    let pick = if !mode.positive() {
        edges.iter().find(|e| e.lattice_length == 1).or_else(|| edges.first())
    } else if let Some(e) = edges.iter().find(|e| e.lattice_length == 1 && e.u.sign != e.v.sign) {
        Some(e)
    } else if mode == FieldMode::CPlus {
        edges.iter().find(four)
    } else {
        let mut found = None;
        for e in edges.iter().filter(four) {
            let cycle = long_even_cycle(e.midpoint.as_ref().expect("lattice 2")).expect("checked");
            if cycle_pair_reports(a, &cycle)?[0].agree {
                found = Some(e);
                break;
            }
        }
        found
    };
    pick.cloned().ok_or(Error::NotOnEdge)
}

fn key(p: usize, q: usize) -> (usize, usize) {
    (p.min(q), p.max(q))
}

fn multiplicity(c: &SignedMonomialClass, p: usize, q: usize) -> u8 {
    let (i, j) = key(p, q);
    c.exponent[i][j]
}

/// Singular symmetric lift for a symmetric matrix in the tropicalization
/// over `mode`.
///
/// A lattice-length-1 edge that differs in a loop `k` is solved exactly by
/// rescaling row and column `k` by the complementary principal minor. The
/// other edges are solved as a quadratic in one off-diagonal entry: the
/// entry where the two vertices differ by one, or the first edge of the
/// midpoint cycle for lattice length 2. Over `R` the quadratic has a real
/// root exactly when the two principal minors avoiding that entry share a
/// sign, which is reached by redrawing coefficients (and signs, in `R`
/// mode). Quadratic roots are cut at `order` (default: 10 above the
/// entry's valuation).
pub fn lift_sym_corank1(a: &TropMatrix, mode: FieldMode, seed: u64, order: Option<Rational>) -> Result<LiftCertificate> {
    let verdict = member_sym_corank1(a, mode)?;
    if !verdict.verdict {
        return Err(match verdict.reason.kind {
            ReasonKind::NoTie => Error::NoTie,
            ReasonKind::MinorSignsOpposed => Error::MinorSignsOpposed,
            ReasonKind::SameSigns => Error::SameSigns,
            _ => Error::NotOnEdge,
        });
    }
    let n = a.rows();
    let det = sym_trop_det(a)?;
    let edge = choose_edge(a, &det.argmin, mode)?;
    let positive = mode.positive();
    let support: BTreeSet<(usize, usize)> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .filter(|&(i, j)| edge.u.exponent[i][j] > 0 || edge.v.exponent[i][j] > 0)
        .collect();
    let loop_at = (0..n).find(|&k| edge.u.exponent[k][k] != edge.v.exponent[k][k]);
    let (p, q) = match (&edge.midpoint, loop_at) {
        (Some(m), _) => {
            let c = long_even_cycle(m).ok_or(Error::NotOnEdge)?;
            (c[0], c[1])
        }
        (None, Some(k)) => (k, k),
        (None, None) => (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| multiplicity(&edge.u, i, j).abs_diff(multiplicity(&edge.v, i, j)) == 1)
            .ok_or(Error::NotOnEdge)?,
    };
    let order = order.unwrap_or_else(|| a.get(p, q) + int(10));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..MAX_ATTEMPTS {
        let damp = if attempt % 2 == 1 { frac(1, 1000).pow(1 + attempt as i32 / 2) } else { Rational::one() };
        let flip_signs = !positive && attempt >= 2;
        let mut l: Lift = vec![vec![QSeries::zero(); n]; n];
        for i in 0..n {
            for j in i..n {
                let mut c = coefficient(&mut rng);
                if !support.contains(&(i, j)) {
                    c *= &damp;
                }
                if flip_signs && rng.gen_bool(0.5) {
                    c = -c;
                }
                let x = term(c, a.get(i, j).clone());
                l[i][j] = x.clone();
                l[j][i] = x;
            }
        }
        let notes = vec![
            note("edge", true, format!("{} - {} (lattice length {})", edge.u.cycles(), edge.v.cycles(), edge.lattice_length)),
            note("solve", true, format!("entry ({p}, {q}) after {attempt} redraw(s)")),
        ];
        let solved = if p == q { solve_loop(a, &mut l, p, positive)? } else { solve_pair(a, &mut l, p, q, mode, &order)? };
        if !solved {
            continue;
        }
        let pos = if positive { Positivity::AllPositive } else { Positivity::None };
        let cert = LiftCertificate::new(a, l, Claim::SymSingular, pos, "sym_corank1", Some(seed), notes);
        if cert.valid {
            return Ok(cert);
        }
    }
    Err(Error::DegenerateGeneric(MAX_ATTEMPTS))
}

/// `det = α y + β` in the diagonal entry `y` at `k`. Row and column `k` are
/// scaled by `s α` (after dividing them by `t^{val α}`) and the diagonal set
/// to `-α β`.
fn solve_loop(a: &TropMatrix, l: &mut Lift, k: usize, positive: bool) -> Result<bool> {
    let n = l.len();
    let keep: Vec<usize> = (0..n).filter(|&i| i != k).collect();
    let minor: Lift = keep.iter().map(|&i| keep.iter().map(|&j| l[i][j].clone()).collect()).collect();
    let alpha = if minor.is_empty() { QSeries::one() } else { ring_det(&minor)? };
    let Ok(Some(ell)) = alpha.val() else { return Ok(false) };
    let neg = -ell.clone();
    for j in 0..n {
        if j != k {
            l[k][j] = l[k][j].shift(&neg);
            l[j][k] = l[k][j].clone();
        }
    }
    l[k][k] = QSeries::zero();
    let beta = ring_det(l)?;
    let sa = alpha.lead_sign()?;
    let s = QSeries::constant(QuadExt::from(int(sa.as_i32() as i64)));
    let scale = &s * &alpha;
    for j in 0..n {
        if j != k {
            l[k][j] = &scale * &l[k][j];
            l[j][k] = l[k][j].clone();
        }
    }
    l[k][k] = -&(&alpha * &beta);
    let diag_ok = val_is(&l[k][k], a.get(k, k));
    let sign_ok = !positive || l[k][k].lead_sign().ok() == Some(Sign::Positive);
    Ok(diag_ok && sign_ok)
}

/// Quadratic `det = A x² + B x + C` in the symmetric pair of entries
/// `(p, q)`, `(q, p)`: takes a root of the right valuation (and positive
/// real lead in the positive modes). Roots are complex only in `C` and `C+`.
fn solve_pair(a: &TropMatrix, l: &mut Lift, p: usize, q: usize, mode: FieldMode, order: &Rational) -> Result<bool> {
    let mut eval = |x: i64| -> Result<PuiseuxSeries> {
        let v = QSeries::constant(QuadExt::from(int(x)));
        l[p][q] = v.clone();
        l[q][p] = v;
        rational(&ring_det(l)?)
    };
    let (c, p1, m1) = (eval(0)?, eval(1)?, eval(-1)?);
    let half = frac(1, 2);
    let qa = &(&p1 + &m1).scale(&half) - &c;
    let qb = (&p1 - &m1).scale(&half);
    let want = a.get(p, q);
    let candidates: Vec<QSeries> = if qa.is_zero_to_trunc() {
        if qb.is_zero_to_trunc() {
            return Ok(false);
        }
        vec![(-&c).div(&qb, order)?.to_quad()]
    } else {
        match mode {
            FieldMode::C | FieldMode::CPlus => {
                let (x1, x2) = quad_roots_complex(&qa, &qb, &c, order)?;
                vec![x1, x2]
            }
            _ => match quad_roots(&qa, &qb, &c, order)?.roots {
                Some((x1, x2)) => vec![x1, x2],
                None => return Ok(false),
            },
        }
    };
    let pick = candidates
        .into_iter()
        .find(|x| val_is(x, want) && (!mode.positive() || x.lead_positive_real()));
    let Some(x) = pick else { return Ok(false) };
    l[p][q] = x.clone();
    l[q][p] = x;
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropical::matrix::TropMatrix;

    fn ex52() -> TropMatrix {
        TropMatrix::from_ints(&[&[2, 0, 1, 0], &[0, 2, 0, 2], &[1, 0, 2, 0], &[0, 2, 0, 1]])
    }

    #[test]
    fn zero_two_by_two() {
        let a = TropMatrix::zeros(2, 2);
        for mode in [FieldMode::C, FieldMode::RPlus] {
            let cert = lift_corank1(&a, mode, 1).unwrap();
            assert!(cert.valid, "{:?}", cert.transcript);
            assert!(cert.reverify());
        }
    }

    #[test]
    fn unique_minimum_has_no_lift() {
        let a = TropMatrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(lift_corank1(&a, FieldMode::C, 0).unwrap_err(), Error::NoTie);
        assert_eq!(lift_sym_corank1(&a, FieldMode::R, 0, None).unwrap_err(), Error::NoTie);
    }

    #[test]
    fn same_sign_tie_is_not_positive() {
        // identity and the 3-cycle (even) tie
        let a = TropMatrix::from_ints(&[&[0, 0, 5], &[5, 0, 0], &[0, 5, 0]]);
        assert_eq!(lift_corank1(&a, FieldMode::RPlus, 0).unwrap_err(), Error::SameSigns);
        assert!(lift_corank1(&a, FieldMode::R, 0).unwrap().valid);
    }

    #[test]
    fn random_ties() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut lifted = 0;
        for _ in 0..40 {
            let rows: Vec<Vec<i64>> = (0..4).map(|_| (0..4).map(|_| rng.gen_range(0..3)).collect()).collect();
            let a = TropMatrix::from_fn(4, 4, |i, j| int(rows[i][j]));
            for mode in [FieldMode::R, FieldMode::RPlus] {
                match lift_corank1(&a, mode, 5) {
                    Ok(c) => {
                        assert!(c.valid, "{a:?} {:?}", c.transcript);
                        lifted += 1;
                    }
                    Err(Error::NoTie | Error::SameSigns | Error::NotOnEdge) => {}
                    Err(e) => panic!("{a:?}: {e}"),
                }
            }
        }
        assert!(lifted > 10);
    }

    #[test]
    fn ex52_over_r_but_not_r_plus() {
        let a = ex52();
        assert_eq!(lift_sym_corank1(&a, FieldMode::RPlus, 0, None).unwrap_err(), Error::MinorSignsOpposed);
        let cert = lift_sym_corank1(&a, FieldMode::R, 0, None).unwrap();
        assert!(cert.valid, "{:?}", cert.transcript);
        let cert = lift_sym_corank1(&a, FieldMode::CPlus, 0, None).unwrap();
        assert!(cert.valid, "{:?}", cert.transcript);
        let complex = cert.lift.iter().flatten().any(|s| s.terms().iter().any(|(_, c)| !c.is_real()));
        assert!(complex);
    }

    #[test]
    fn boundary_point_without_exact_lift() {
        // a 3-cycle ties with the 4-cycle edge; the initial form is a square
        // plus a positive monomial, so nothing positive cancels it
        let a = TropMatrix::from_ints(&[&[2, 1, 2, 0, 1], &[1, 2, 2, 0, 1], &[2, 2, 0, 0, 2], &[0, 0, 0, 0, 1], &[1, 1, 2, 1, 1]]);
        assert!(member_sym_corank1(&a, FieldMode::RPlus).unwrap().verdict);
        assert_eq!(lift_sym_corank1(&a, FieldMode::RPlus, 0, None).unwrap_err(), Error::DegenerateGeneric(MAX_ATTEMPTS));
        assert!(lift_sym_corank1(&a, FieldMode::R, 0, None).unwrap().valid);
    }

    #[test]
    fn symmetric_lattice_one() {
        // identity against the transposition (0 1): opposite signs
        let a = TropMatrix::from_ints(&[&[0, 0, 3], &[0, 0, 3], &[3, 3, 0]]);
        let cert = lift_sym_corank1(&a, FieldMode::RPlus, 2, None).unwrap();
        assert!(cert.valid, "{:?}", cert.transcript);
    }

    #[test]
    fn random_symmetric_ties() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let mut lifted = 0;
        for _ in 0..30 {
            let n = rng.gen_range(2..=4);
            let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..3)).collect()).collect();
            let a = TropMatrix::from_fn(n, n, |i, j| int(rows[i.min(j)][i.max(j)]));
            for mode in [FieldMode::R, FieldMode::CPlus, FieldMode::RPlus] {
                if !member_sym_corank1(&a, mode).unwrap().verdict {
                    continue;
                }
                match lift_sym_corank1(&a, mode, 3, None) {
                    Ok(c) => {
                        assert!(c.valid);
                        lifted += 1;
                    }
                    Err(Error::NotOnEdge) => {}
                    Err(e) => panic!("{a:?} {mode:?}: {e}"),
                }
            }
        }
        assert!(lifted > 5);
    }
}
