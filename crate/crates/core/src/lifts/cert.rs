//! Lift certificates and their independent verification.

use serde::{Deserialize, Serialize};

use crate::exact::det::{minor, ring_det};
use crate::exact::rational::Rational;
use crate::exact::series::QSeries;
use crate::tropical::det::{trop_det, trop_det_value};
use crate::tropical::matrix::TropMatrix;
use crate::tropical::rank::subsets;

pub type Lift = Vec<Vec<QSeries>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    Rank2,
    SymRank2,
    Singular,
    SymSingular,
}

impl Claim {
    pub fn symmetric(self) -> bool {
        matches!(self, Claim::SymRank2 | Claim::SymSingular)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Positivity {
    None,
    AllPositive,
}

/// One verification step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Check {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LiftCertificate {
    pub target: TropMatrix,
    pub lift: Lift,
    pub claimed: Claim,
    pub positivity: Positivity,
    /// Name of the construction that produced the lift.
    pub construction: String,
    pub seed: Option<u64>,
    /// Construction notes followed by the verification steps.
    pub transcript: Vec<Check>,
    pub valid: bool,
}

impl LiftCertificate {
    /// Builds a certificate and runs [`verify_lift`] on it.
    pub fn new(
        target: &TropMatrix,
        lift: Lift,
        claimed: Claim,
        positivity: Positivity,
        construction: &str,
        seed: Option<u64>,
        notes: Vec<Check>,
    ) -> LiftCertificate {
        let mut cert = LiftCertificate {
            target: target.clone(),
            lift,
            claimed,
            positivity,
            construction: construction.into(),
            seed,
            transcript: notes,
            valid: false,
        };
        let checks = verify_lift(&cert);
        cert.valid = cert.transcript.iter().chain(&checks).all(|c| c.passed);
        cert.transcript.extend(checks);
        cert
    }

    /// Re-runs verification from scratch, ignoring the stored transcript.
    pub fn reverify(&self) -> bool {
        verify_lift(self).iter().all(|c| c.passed)
    }
}

/// A construction note recorded before verification.
pub fn note(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check::new(name, passed, detail)
}

/// `true` when `s` vanishes, exactly or up to a truncation that lies above
/// `lowest` (the order where cancellation has to happen).
fn vanishes(s: &QSeries, lowest: &Rational) -> (bool, String) {
    if !s.is_zero_to_trunc() {
        return (false, format!("nonzero term {s}"));
    }
    match s.trunc() {
        None => (true, "exactly zero".into()),
        Some(t) if t > lowest => (true, format!("zero up to t^{t}")),
        Some(t) => (false, format!("truncated at t^{t}, not above the leading order {lowest}")),
    }
}

/// Independently rechecks every claim of a certificate.
pub fn verify_lift(cert: &LiftCertificate) -> Vec<Check> {
    let mut out = Vec::new();
    let (d, n) = (cert.target.rows(), cert.target.cols());
    let shape_ok = cert.lift.len() == d && cert.lift.iter().all(|r| r.len() == n);
    out.push(Check::new("shape", shape_ok, format!("{d}x{n}")));
    if !shape_ok {
        return out;
    }

    let mut bad = Vec::new();
    for i in 0..d {
        for j in 0..n {
            match cert.lift[i][j].val() {
                Ok(Some(v)) if &v == cert.target.get(i, j) => {}
                Ok(v) => bad.push(format!("({i},{j}): val {} vs {}", v.map_or("inf".into(), |v| v.to_string()), cert.target.get(i, j))),
                Err(e) => bad.push(format!("({i},{j}): {e}")),
            }
        }
    }
    out.push(Check::new("valuations", bad.is_empty(), if bad.is_empty() { "all entries match".into() } else { bad.join("; ") }));

    if cert.positivity == Positivity::AllPositive {
        let neg: Vec<String> = (0..d)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !cert.lift[i][j].lead_positive_real())
            .map(|(i, j)| format!("({i},{j})"))
            .collect();
        out.push(Check::new("positivity", neg.is_empty(), if neg.is_empty() { "all leading coefficients positive".into() } else { neg.join(", ") }));
    }

    if cert.claimed.symmetric() {
        let sym = d == n && (0..n).all(|i| (0..i).all(|j| cert.lift[i][j] == cert.lift[j][i]));
        out.push(Check::new("symmetry", sym, "entrywise equal series"));
    }

    match cert.claimed {
        Claim::Rank2 | Claim::SymRank2 => {
            if d < 3 || n < 3 {
                out.push(Check::new("rank", true, "no 3x3 minors"));
            } else {
                let mut failures = Vec::new();
                let mut count = 0usize;
                let mut inexact = false;
                for rows in subsets(d, 3) {
                    for cols in subsets(n, 3) {
                        count += 1;
                        let lowest = match trop_det_value(&cert.target.submatrix(&rows, &cols)) {
                            Ok(v) => v,
                            Err(e) => {
                                failures.push(format!("{rows:?}x{cols:?}: {e}"));
                                continue;
                            }
                        };
                        match minor(&cert.lift, &rows, &cols) {
                            Ok(m) => {
                                inexact |= !m.is_exact();
                                let (ok, why) = vanishes(&m, &lowest);
                                if !ok {
                                    failures.push(format!("{rows:?}x{cols:?}: {why}"));
                                }
                            }
                            Err(e) => failures.push(format!("{rows:?}x{cols:?}: {e}")),
                        }
                    }
                }
                let detail = if failures.is_empty() {
                    format!("{count} 3x3 minors vanish{}", if inexact { " to truncation" } else { " exactly" })
                } else {
                    failures.join("; ")
                };
                out.push(Check::new("rank", failures.is_empty(), detail));
            }
        }
        Claim::Singular | Claim::SymSingular => {
            let check = match (ring_det(&cert.lift), trop_det(&cert.target)) {
                (Ok(det), Ok(t)) => {
                    let (ok, why) = vanishes(&det, &t.min_value);
                    Check::new("determinant", ok, why)
                }
                (Err(e), _) | (_, Err(e)) => Check::new("determinant", false, e.to_string()),
            };
            out.push(check);
        }
    }
    out
}

/// For a target with a verified positive rank-2 lift: every 3x3 tropical
/// minor attains its minimum at permutations of both signs. Returns the
/// offending minors.
pub fn positive_minor_signs(target: &TropMatrix) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for rows in subsets(target.rows(), 3) {
        for cols in subsets(target.cols(), 3) {
            let det = trop_det(&target.submatrix(&rows, &cols)).expect("3x3");
            let pos = det.argmin.iter().any(|c| c.sign > 0);
            let neg = det.argmin.iter().any(|c| c.sign < 0);
            if !(pos && neg) {
                out.push((rows.clone(), cols.clone()));
            }
        }
    }
    out
}
