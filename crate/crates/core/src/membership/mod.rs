//! Membership of a tropical matrix in the real, complex and positive
//! tropicalizations of four matrix varieties.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::newton::{edge_between, is_vertex, Component, NewtonEdge, SemisimpleGraph};
use crate::tropical::barvinok::barvinok_rank2;
use crate::tropical::det::{sym_trop_det, trop_det, SignedMonomialClass};
use crate::tropical::matrix::TropMatrix;
use crate::tropical::rank::{nonsingular_minor, sym_nonsingular_minor};
use crate::tropical::DEFAULT_ENUM_BOUND;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variety {
    /// `d x n` matrices of rank at most 2.
    Rank2,
    /// Symmetric `n x n` matrices of rank at most 2.
    SymRank2,
    /// Singular `n x n` matrices.
    Corank1,
    /// Singular symmetric `n x n` matrices.
    SymCorank1,
}

impl FromStr for Variety {
    type Err = Error;
    fn from_str(s: &str) -> Result<Variety> {
        match s {
            "rank2" => Ok(Variety::Rank2),
            "sym_rank2" => Ok(Variety::SymRank2),
            "corank1" => Ok(Variety::Corank1),
            "sym_corank1" => Ok(Variety::SymCorank1),
            _ => Err(Error::Parse(format!("unknown variety {s:?}"))),
        }
    }
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Variety::Rank2 => "rank2",
            Variety::SymRank2 => "sym_rank2",
            Variety::Corank1 => "corank1",
            Variety::SymCorank1 => "sym_corank1",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldMode {
    C,
    R,
    #[serde(rename = "C+")]
    CPlus,
    #[serde(rename = "R+")]
    RPlus,
}

impl FieldMode {
    pub const ALL: [FieldMode; 4] = [FieldMode::C, FieldMode::R, FieldMode::CPlus, FieldMode::RPlus];

    pub fn positive(self) -> bool {
        matches!(self, FieldMode::CPlus | FieldMode::RPlus)
    }
}

impl FromStr for FieldMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<FieldMode> {
        match s {
            "C" => Ok(FieldMode::C),
            "R" => Ok(FieldMode::R),
            "C+" => Ok(FieldMode::CPlus),
            "R+" => Ok(FieldMode::RPlus),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FieldMode::C => "C",
            FieldMode::R => "R",
            FieldMode::CPlus => "C+",
            FieldMode::RPlus => "R+",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReasonKind {
    TropRankAtMost2,
    NonsingularMinor,
    Caterpillar,
    NotCaterpillar,
    Tie,
    NoTie,
    OppositeSigns,
    SameSigns,
    CycleLengthDivisibleBy4,
    MinorSignsAgree,
    MinorSignsOpposed,
    NotOnEdge,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Reason {
    pub kind: ReasonKind,
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MembershipVerdict {
    pub variety: Variety,
    pub field_mode: FieldMode,
    pub verdict: bool,
    pub reason: Reason,
}

fn verdict(variety: Variety, mode: FieldMode, ok: bool, kind: ReasonKind, detail: Value) -> MembershipVerdict {
    MembershipVerdict { variety, field_mode: mode, verdict: ok, reason: Reason { kind, detail } }
}

pub fn member(variety: Variety, a: &TropMatrix, mode: FieldMode) -> Result<MembershipVerdict> {
    match variety {
        Variety::Rank2 => member_rank2(a, mode),
        Variety::SymRank2 => member_sym_rank2(a, mode),
        Variety::Corank1 => member_corank1(a, mode),
        Variety::SymCorank1 => member_sym_corank1(a, mode),
    }
}

/// Rank at most 2: tropical rank over `C` and `R`, Barvinok rank in the
/// positive modes.
pub fn member_rank2(a: &TropMatrix, mode: FieldMode) -> Result<MembershipVerdict> {
    let v = Variety::Rank2;
    if let Some((rows, cols)) = nonsingular_minor(a, 3, DEFAULT_ENUM_BOUND)? {
        return Ok(verdict(v, mode, false, ReasonKind::NonsingularMinor, json!({ "rows": rows, "cols": cols })));
    }
    if !mode.positive() {
        return Ok(verdict(v, mode, true, ReasonKind::TropRankAtMost2, Value::Null));
    }
    let r = barvinok_rank2(a)?;
    let tree = r.tree.as_ref().map(|t| json!(t.to_json()));
    if r.barvinok2 {
        let (b, c) = r.witness.expect("witness for Barvinok rank 2");
        Ok(verdict(v, mode, true, ReasonKind::Caterpillar, json!({ "tree": tree, "B": b, "C": c })))
    } else {
        Ok(verdict(v, mode, false, ReasonKind::NotCaterpillar, json!({ "tree": tree })))
    }
}

/// Symmetric rank at most 2: symmetric tropical rank over `C` and `R`,
/// (ordinary) Barvinok rank in the positive modes.
pub fn member_sym_rank2(a: &TropMatrix, mode: FieldMode) -> Result<MembershipVerdict> {
    let v = Variety::SymRank2;
    if let Some((rows, cols)) = sym_nonsingular_minor(a, 3, DEFAULT_ENUM_BOUND)? {
        return Ok(verdict(v, mode, false, ReasonKind::NonsingularMinor, json!({ "rows": rows, "cols": cols })));
    }
    if !mode.positive() {
        return Ok(verdict(v, mode, true, ReasonKind::TropRankAtMost2, Value::Null));
    }
    let r = barvinok_rank2(a)?;
    let tree = r.tree.as_ref().map(|t| json!(t.to_json()));
    if r.barvinok2 {
        Ok(verdict(v, mode, true, ReasonKind::Caterpillar, json!({ "tree": tree })))
    } else {
        Ok(verdict(v, mode, false, ReasonKind::NotCaterpillar, json!({ "tree": tree })))
    }
}

fn class_json(c: &SignedMonomialClass) -> Value {
    json!({ "cycles": c.cycles(), "sign": c.sign })
}

/// Singular matrices: a tie in the tropical determinant; in the positive
/// modes the tie must involve permutations of both signs.
pub fn member_corank1(a: &TropMatrix, mode: FieldMode) -> Result<MembershipVerdict> {
    let v = Variety::Corank1;
    let det = trop_det(a)?;
    let argmin: Vec<Value> = det.argmin.iter().map(class_json).collect();
    let detail = json!({ "min": det.min_value.to_string(), "argmin": argmin });
    if !det.tie {
        return Ok(verdict(v, mode, false, ReasonKind::NoTie, detail));
    }
    if !mode.positive() {
        return Ok(verdict(v, mode, true, ReasonKind::Tie, detail));
    }
    // the argmin face of the Birkhoff polytope is connected through edges,
    // so both signs present means some edge joins opposite signs
    let pos = det.argmin.iter().any(|c| c.sign > 0);
    let neg = det.argmin.iter().any(|c| c.sign < 0);
    if pos && neg {
        Ok(verdict(v, mode, true, ReasonKind::OppositeSigns, detail))
    } else {
        Ok(verdict(v, mode, false, ReasonKind::SameSigns, detail))
    }
}

/// Length of the unique even cycle of length at least 4 in a class.
pub(crate) fn long_even_cycle(c: &SignedMonomialClass) -> Option<Vec<usize>> {
    SemisimpleGraph::of_class(c).components.into_iter().find_map(|comp| match comp {
        Component::Cycle(cy) if cy.len() % 2 == 0 => Some(cy),
        _ => None,
    })
}

/// Signs of the monomials attaining the symmetric tropical determinant of
/// the principal minor deleting `i`.
pub fn minor_signs(a: &TropMatrix, i: usize) -> Result<Vec<i32>> {
    let keep: Vec<usize> = (0..a.rows()).filter(|&k| k != i).collect();
    let m = a.principal(&keep);
    let mut s: Vec<i32> = sym_trop_det(&m)?.argmin.iter().map(|c| c.sign).collect();
    s.sort_unstable();
    s.dedup();
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairReport {
    pub i: usize,
    pub j: usize,
    pub signs_i: Vec<i32>,
    pub signs_j: Vec<i32>,
    pub agree: bool,
}

/// Minor-sign reports for consecutive vertices of a cycle (0-based labels).
pub fn cycle_pair_reports(a: &TropMatrix, cycle: &[usize]) -> Result<Vec<PairReport>> {
    let mut out = Vec::with_capacity(cycle.len());
    for k in 0..cycle.len() {
        let (i, j) = (cycle[k], cycle[(k + 1) % cycle.len()]);
        let (si, sj) = (minor_signs(a, i)?, minor_signs(a, j)?);
        let agree = si.iter().any(|s| sj.contains(s));
        out.push(PairReport { i, j, signs_i: si, signs_j: sj, agree });
    }
    Ok(out)
}

/// The polytope edges spanned by argmin vertices.
pub fn argmin_edges(argmin: &[SignedMonomialClass]) -> Vec<NewtonEdge> {
    let vs: Vec<&SignedMonomialClass> = argmin.iter().filter(|c| is_vertex(c)).collect();
    let mut out = Vec::new();
    for a in 0..vs.len() {
        for b in a + 1..vs.len() {
            if let Some(e) = edge_between(vs[a], vs[b]) {
                out.push(e);
            }
        }
    }
    out
}

fn edge_json(e: &NewtonEdge) -> Value {
    json!({
        "u": class_json(&e.u),
        "v": class_json(&e.v),
        "lattice_length": e.lattice_length,
        "midpoint": e.midpoint.as_ref().map(class_json),
    })
}

/// Singular symmetric matrices. Over `C` and `R` a tie in the symmetric
/// tropical determinant suffices. The positive modes look for an edge of the
/// Newton polytope inside the argmin face: of lattice length 1 with opposite
/// signs, or of lattice length 2 whose midpoint carries a cycle of length
/// divisible by 4. Over `R+` the latter also needs the principal minors at
/// one adjacent pair of that cycle to share a sign.
pub fn member_sym_corank1(a: &TropMatrix, mode: FieldMode) -> Result<MembershipVerdict> {
    let v = Variety::SymCorank1;
    let det = sym_trop_det(a)?;
    let argmin: Vec<Value> = det.argmin.iter().map(class_json).collect();
    if !det.tie {
        let detail = json!({ "min": det.min_value.to_string(), "argmin": argmin });
        return Ok(verdict(v, mode, false, ReasonKind::NoTie, detail));
    }
    if !mode.positive() {
        let detail = json!({ "min": det.min_value.to_string(), "argmin": argmin });
        return Ok(verdict(v, mode, true, ReasonKind::Tie, detail));
    }
    let edges = argmin_edges(&det.argmin);
    if let Some(e) = edges.iter().find(|e| e.lattice_length == 1 && e.u.sign != e.v.sign) {
        let detail = json!({ "argmin": argmin, "edge": edge_json(e) });
        return Ok(verdict(v, mode, true, ReasonKind::OppositeSigns, detail));
    }
    let four: Vec<&NewtonEdge> = edges
        .iter()
        .filter(|e| e.lattice_length == 2 && e.midpoint.as_ref().and_then(long_even_cycle).is_some_and(|c| c.len() % 4 == 0))
        .collect();
    if four.is_empty() {
        let detail = json!({ "argmin": argmin, "edges": edges.iter().map(edge_json).collect::<Vec<_>>() });
        let kind = if edges.is_empty() { ReasonKind::NotOnEdge } else { ReasonKind::SameSigns };
        return Ok(verdict(v, mode, false, kind, detail));
    }
    if mode == FieldMode::CPlus {
        let detail = json!({ "argmin": argmin, "edge": edge_json(four[0]) });
        return Ok(verdict(v, mode, true, ReasonKind::CycleLengthDivisibleBy4, detail));
    }
    let mut all = Vec::new();
    for e in &four {
        let cycle = long_even_cycle(e.midpoint.as_ref().expect("lattice-2 edge")).expect("checked above");
        let pairs = cycle_pair_reports(a, &cycle)?;
        // the first adjacent pair decides
        let ok = pairs[0].agree;
        let detail = json!({ "argmin": argmin, "edge": edge_json(e), "pairs": pairs });
        if ok {
            return Ok(verdict(v, mode, true, ReasonKind::MinorSignsAgree, detail));
        }
        all.push(detail);
    }
    Ok(verdict(v, mode, false, ReasonKind::MinorSignsOpposed, json!({ "argmin": argmin, "edges": all })))
}
