//! Seeded cross-checks of fast paths against the oracles.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{brute_barvinok2, brute_hull, brute_sym_barvinok2};
use crate::error::Result;
use crate::exact::rational::{int, Rational};
use crate::newton::{polytope_edges, polytope_vertices, sym_det_monomials};
use crate::tropical::barvinok::{barvinok_rank2, sym_barvinok_rank2};
use crate::tropical::matrix::TropMatrix;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleReport {
    pub subject: String,
    pub instance: Value,
    pub fast_result: Value,
    pub brute_result: Value,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub max_n: usize,
    pub total: usize,
    pub disagreements: usize,
    pub reports: Vec<OracleReport>,
}

fn report(subject: &str, instance: Value, fast: Value, brute: Value) -> OracleReport {
    let agree = fast == brute;
    OracleReport { subject: subject.into(), instance, fast_result: fast, brute_result: brute, agree }
}

fn exponent_point(e: &[Vec<u8>]) -> Vec<Rational> {
    let n = e.len();
    (0..n).flat_map(|i| (i..n).map(move |j| int(e[i][j] as i64))).collect()
}

/// Vertex and edge predicates of the symmetric-determinant polytope against
/// the exact hull.
pub fn newton_reports(n: usize) -> Result<Vec<OracleReport>> {
    let ms = sym_det_monomials(n)?;
    let points: Vec<Vec<Rational>> = ms.iter().map(|c| exponent_point(&c.exponent)).collect();
    let hull = brute_hull(&points)?;
    let vs = polytope_vertices(n)?;
    let index = |e: &Vec<Vec<u8>>| ms.iter().position(|c| &c.exponent == e).expect("a monomial");
    let mut fast_v: Vec<usize> = vs.iter().map(|c| index(&c.exponent)).collect();
    fast_v.sort_unstable();
    let mut fast_e: Vec<(usize, usize)> = polytope_edges(n)?
        .iter()
        .map(|e| {
            let (a, b) = (index(&e.u.exponent), index(&e.v.exponent));
            (a.min(b), a.max(b))
        })
        .collect();
    fast_e.sort_unstable();
    let inst = json!({ "n": n });
    Ok(vec![
        report("polytope_vertices", inst.clone(), json!(fast_v), json!(hull.vertices)),
        report("polytope_edges", inst, json!(fast_e), json!(hull.edges)),
    ])
}

fn random_matrix(rng: &mut ChaCha8Rng, d: usize, n: usize) -> TropMatrix {
    let v: Vec<i64> = (0..d * n).map(|_| rng.gen_range(0..=4)).collect();
    TropMatrix::from_fn(d, n, |i, j| int(v[i * n + j]))
}

/// A random matrix of tropical rank at most 2: `min` of two rank-1 terms.
fn random_rank2(rng: &mut ChaCha8Rng, d: usize, n: usize) -> TropMatrix {
    let g = |rng: &mut ChaCha8Rng, k: usize| -> Vec<i64> { (0..k).map(|_| rng.gen_range(0..=5)).collect() };
    let (b1, b2, c1, c2) = (g(rng, d), g(rng, d), g(rng, n), g(rng, n));
    TropMatrix::from_fn(d, n, |i, j| int((b1[i] + c1[j]).min(b2[i] + c2[j])))
}

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> TropMatrix {
    let mut a = vec![vec![Rational::from_integer(0.into()); n]; n];
    for i in 0..n {
        for j in i..n {
            let x = int(rng.gen_range(0..=4));
            a[i][j] = x.clone();
            a[j][i] = x;
        }
    }
    TropMatrix::symmetric_from_rows(a).expect("symmetric by construction")
}

/// Runs every cross-check with sizes up to `max_n` (capped at the oracle
/// limits).
pub fn verify_suite(seed: u64, max_n: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reports = Vec::new();
    for n in 1..=max_n.min(4) {
        reports.extend(newton_reports(n)?);
    }
    let side = max_n.clamp(1, super::BRUTE_MAX_SIDE);
    for k in 0..40 {
        let (d, n) = (rng.gen_range(1..=side), rng.gen_range(1..=side));
        let a = if k % 2 == 0 { random_rank2(&mut rng, d, n) } else { random_matrix(&mut rng, d, n) };
        let fast = barvinok_rank2(&a)?.barvinok2;
        reports.push(report("barvinok_rank2", json!(&a), json!(fast), json!(brute_barvinok2(&a)?)));
    }
    for k in 0..40 {
        let n = rng.gen_range(1..=side);
        let a = if k % 2 == 0 {
            let b = random_matrix(&mut rng, n, 2);
            crate::tropical::matrix::trop_mat_mul(&b, &b.transpose())?.into_symmetric()?
        } else {
            random_symmetric(&mut rng, n)
        };
        let fast = sym_barvinok_rank2(&a)?.sym_barvinok2;
        reports.push(report("sym_barvinok_rank2", json!(&a), json!(fast), json!(brute_sym_barvinok2(&a)?)));
    }
    let disagreements = reports.iter().filter(|r| !r.agree).count();
    Ok(SuiteReport { seed, max_n, total: reports.len(), disagreements, reports })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn newton_agrees_with_hull() {
        for n in 1..=4 {
            for r in newton_reports(n).unwrap() {
                assert!(r.agree, "{r:?}");
            }
        }
    }

    #[test]
    fn suite_agrees() {
        let s = verify_suite(11, 3).unwrap();
        assert_eq!(s.disagreements, 0, "{:?}", s.reports.iter().filter(|r| !r.agree).collect::<Vec<_>>());
    }
}
