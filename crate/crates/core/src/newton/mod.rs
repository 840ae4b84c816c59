//! Newton polytope of the symmetric determinant for small `n`.
//!
//! Monomials are kept in upper-triangular exponent coordinates, where every
//! entry is 0, 1 or 2.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::Rational;
use crate::tropical::det::{sym_exponent, SignedMonomialClass};
use crate::tropical::matrix::TropMatrix;
use crate::tropical::perm::{all_perms, compose, cycles, inverse, Perm};

mod table;

pub use table::{table2_rows, Table2Row};

/// Largest `n` for which monomials are enumerated.
pub const MONOMIAL_BOUND: usize = 7;

/// One connected component of the graph of a permutation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Component {
    Loop(usize),
    Edge(usize, usize),
    /// A cycle of length at least 3, starting at its smallest vertex.
    Cycle(Vec<usize>),
}

impl Component {
    pub fn len(&self) -> usize {
        match self {
            Component::Loop(_) => 1,
            Component::Edge(..) => 2,
            Component::Cycle(c) => c.len(),
        }
    }

    pub fn is_long_even_cycle(&self) -> bool {
        matches!(self, Component::Cycle(c) if c.len() % 2 == 0)
    }
}

/// The graph `G_sigma` on `[n]`: an edge `{i, sigma(i)}` for every `i`, with
/// loops at fixed points and a single edge for each transposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemisimpleGraph {
    pub n: usize,
    /// Edges `(i, j)` with `i <= j`; `(i, i)` is a loop.
    pub edges: BTreeSet<(usize, usize)>,
    pub components: Vec<Component>,
}

impl SemisimpleGraph {
    pub fn of_perm(p: &[usize]) -> SemisimpleGraph {
        let n = p.len();
        let mut edges = BTreeSet::new();
        for (i, &j) in p.iter().enumerate() {
            edges.insert((i.min(j), i.max(j)));
        }
        let mut components: Vec<Component> = (0..n).filter(|&i| p[i] == i).map(Component::Loop).collect();
        for c in cycles(p) {
            components.push(if c.len() == 2 { Component::Edge(c[0], c[1]) } else { Component::Cycle(c) });
        }
        components.sort();
        SemisimpleGraph { n, edges, components }
    }

    pub fn of_class(c: &SignedMonomialClass) -> SemisimpleGraph {
        SemisimpleGraph::of_perm(&c.representative)
    }

    /// No even cycle of length 4 or more.
    pub fn is_vertex_shaped(&self) -> bool {
        !self.components.iter().any(Component::is_long_even_cycle)
    }
}

/// All monomials of the `n x n` symmetric determinant, ordered by exponent.
pub fn sym_det_monomials(n: usize) -> Result<Vec<SignedMonomialClass>> {
    if n > MONOMIAL_BOUND {
        return Err(Error::SizeLimit { size: n, bound: MONOMIAL_BOUND });
    }
    let mut classes: BTreeMap<Vec<Vec<u8>>, SignedMonomialClass> = BTreeMap::new();
    for p in all_perms(n) {
        classes.entry(sym_exponent(&p)).or_insert_with(|| SignedMonomialClass::symmetric(&p));
    }
    Ok(classes.into_values().collect())
}

pub fn is_vertex(c: &SignedMonomialClass) -> bool {
    SemisimpleGraph::of_class(c).is_vertex_shaped()
}

/// Vertices of the Newton polytope: classes without even cycles of length
/// at least 4.
pub fn polytope_vertices(n: usize) -> Result<Vec<SignedMonomialClass>> {
    Ok(sym_det_monomials(n)?.into_iter().filter(is_vertex).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NewtonEdge {
    pub u: SignedMonomialClass,
    pub v: SignedMonomialClass,
    pub lattice_length: u8,
    pub midpoint: Option<SignedMonomialClass>,
    /// Length of the even cycle of length at least 4 in `G_u ∪ G_v`, if any.
    pub union_cycle_length: Option<usize>,
}

/// Lengths of all simple cycles (length at least 3) of a simple graph.
fn simple_cycle_lengths(n: usize, edges: &BTreeSet<(usize, usize)>) -> Vec<usize> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        if a != b {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mut out = Vec::new();
    // each cycle is found from its smallest vertex, in both directions
    fn walk(s: usize, x: usize, adj: &[Vec<usize>], on: &mut Vec<bool>, len: usize, out: &mut Vec<usize>) {
        for &y in &adj[x] {
            if y == s && len >= 3 {
                out.push(len);
            } else if y > s && !on[y] {
                on[y] = true;
                walk(s, y, adj, on, len + 1, out);
                on[y] = false;
            }
        }
    }
    for s in 0..n {
        let mut on = vec![false; n];
        on[s] = true;
        walk(s, s, &adj, &mut on, 1, &mut out);
    }
    out.sort_unstable();
    // every cycle was seen twice
    out.into_iter().step_by(2).collect()
}

/// Edge data for two vertices, or `None` if they do not span an edge.
pub fn edge_between(u: &SignedMonomialClass, v: &SignedMonomialClass) -> Option<NewtonEdge> {
    if u.exponent == v.exponent {
        return None;
    }
    let (gu, gv) = (SemisimpleGraph::of_class(u), SemisimpleGraph::of_class(v));
    let n = gu.n;
    let union: BTreeSet<(usize, usize)> = gu.edges.union(&gv.edges).copied().collect();
    if union.len() > n + 1 {
        return None;
    }
    let even: Vec<usize> = simple_cycle_lengths(n, &union).into_iter().filter(|l| l % 2 == 0).collect();
    if even.len() > 1 {
        return None;
    }
    let doubled = u
        .exponent
        .iter()
        .flatten()
        .zip(v.exponent.iter().flatten())
        .all(|(a, b)| (*a as i32 - *b as i32) % 2 == 0);
    let midpoint = if doubled {
        let mid: Vec<Vec<u8>> = u
            .exponent
            .iter()
            .zip(&v.exponent)
            .map(|(ra, rb)| ra.iter().zip(rb).map(|(a, b)| (a + b) / 2).collect())
            .collect();
        Some(class_with_exponent(&mid).expect("midpoint of a doubled edge is a monomial"))
    } else {
        None
    };
    Some(NewtonEdge {
        u: u.clone(),
        v: v.clone(),
        lattice_length: if doubled { 2 } else { 1 },
        midpoint,
        union_cycle_length: even.first().copied(),
    })
}

/// The monomial class with a given upper-triangular exponent, if any.
pub fn class_with_exponent(e: &[Vec<u8>]) -> Option<SignedMonomialClass> {
    let n = e.len();
    // rebuild a permutation by walking the graph of the exponent
    let mut p: Perm = vec![usize::MAX; n];
    let mut deg = vec![0u8; n];
    for i in 0..n {
        for j in i..n {
            let k = e[i][j];
            deg[i] += k;
            deg[j] += k;
        }
    }
    if deg.iter().any(|&d| d != 2) {
        return None;
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        if e[s][s] == 1 {
            p[s] = s;
            seen[s] = true;
            continue;
        }
        let (mut prev, mut x) = (usize::MAX, s);
        loop {
            seen[x] = true;
            let nb = (0..n).find(|&y| {
                let k = e[x.min(y)][x.max(y)];
                y != x && k > 0 && (y != prev || k == 2)
            })?;
            p[x] = nb;
            prev = x;
            x = nb;
            if x == s {
                break;
            }
        }
    }
    let c = SignedMonomialClass::symmetric(&p);
    (c.exponent == e).then_some(c)
}

/// All edges of the Newton polytope.
pub fn polytope_edges(n: usize) -> Result<Vec<NewtonEdge>> {
    let vs = polytope_vertices(n)?;
    let mut out = Vec::new();
    for a in 0..vs.len() {
        for b in a + 1..vs.len() {
            if let Some(e) = edge_between(&vs[a], &vs[b]) {
                out.push(e);
            }
        }
    }
    Ok(out)
}

/// Two distinct permutation matrices span an edge of the Birkhoff polytope
/// exactly when `s1 s2⁻¹` is a single cycle.
pub fn birkhoff_edge(s1: &[usize], s2: &[usize]) -> bool {
    s1.len() == s2.len() && cycles(&compose(s1, &inverse(s2))).len() == 1
}

/// `<exponent, w>` for an upper-triangular (symmetric) or square (plain)
/// exponent matrix.
pub fn weight_of(c: &SignedMonomialClass, w: &TropMatrix) -> Rational {
    let mut s = Rational::from_integer(0.into());
    for (i, row) in c.exponent.iter().enumerate() {
        for (j, &k) in row.iter().enumerate() {
            if k > 0 {
                s += w.get(i, j) * Rational::from_integer(k.into());
            }
        }
    }
    s
}

/// Classes attaining the minimum weight.
pub fn initial_form(monomials: &[SignedMonomialClass], w: &TropMatrix) -> Vec<SignedMonomialClass> {
    let weights: Vec<Rational> = monomials.iter().map(|c| weight_of(c, w)).collect();
    let Some(min) = weights.iter().min() else {
        return Vec::new();
    };
    monomials.iter().zip(&weights).filter(|(_, x)| *x == min).map(|(c, _)| c.clone()).collect()
}

/// Monomial text such as `2x12x13x23x44` or `-x11x22x34^2`.
pub fn monomial_text(c: &SignedMonomialClass) -> String {
    let n = c.exponent.len();
    let sep = if n >= 10 { "," } else { "" };
    let mut s = String::new();
    if c.sign < 0 {
        s.push('-');
    }
    if c.coefficient != 1 {
        s.push_str(&c.coefficient.to_string());
    }
    for i in 0..n {
        for j in i..n {
            match c.exponent[i][j] {
                0 => {}
                1 => s.push_str(&format!("x{}{sep}{}", i + 1, j + 1)),
                k => s.push_str(&format!("x{}{sep}{}^{k}", i + 1, j + 1)),
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropical::perm::parse_cycles;

    fn class(s: &str, n: usize) -> SignedMonomialClass {
        SignedMonomialClass::symmetric(&parse_cycles(s, n).unwrap())
    }

    #[test]
    fn counts() {
        let counts: Vec<usize> = (1..=6).map(|n| sym_det_monomials(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 17, 73, 388]);
        assert_eq!(polytope_vertices(4).unwrap().len(), 14);
        assert_eq!(polytope_vertices(1).unwrap().len(), 1);
        assert!(matches!(sym_det_monomials(8), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn representatives_account_for_all_permutations() {
        for n in 1..=6 {
            let total: u64 = sym_det_monomials(n).unwrap().iter().map(|c| c.coefficient).sum();
            assert_eq!(total, (1..=n as u64).product::<u64>());
        }
    }

    #[test]
    fn four_cycle_is_midpoint() {
        let e = edge_between(&class("(12)(34)", 4), &class("(14)(23)", 4)).unwrap();
        assert_eq!(e.lattice_length, 2);
        let m = e.midpoint.unwrap();
        assert_eq!(monomial_text(&m), "-2x12x14x23x34");
        assert!(!is_vertex(&m));
        assert_eq!(e.union_cycle_length, Some(4));
    }

    #[test]
    fn non_edge_and_length_one_edge() {
        assert!(edge_between(&class("(123)", 4), &class("(34)", 4)).is_none());
        let e = edge_between(&class("(34)", 4), &class("(12)(34)", 4)).unwrap();
        assert_eq!(e.lattice_length, 1);
        assert_eq!(e.midpoint, None);
    }

    #[test]
    fn exponent_round_trip() {
        for c in sym_det_monomials(5).unwrap() {
            assert_eq!(class_with_exponent(&c.exponent).unwrap().exponent, c.exponent);
        }
        assert!(class_with_exponent(&[vec![2, 0], vec![0, 0]]).is_none());
    }

    #[test]
    fn birkhoff() {
        let id = vec![0, 1, 2, 3];
        assert!(birkhoff_edge(&id, &[1, 0, 2, 3]));
        assert!(!birkhoff_edge(&id, &[1, 0, 3, 2]));
        assert!(!birkhoff_edge(&id, &id));
    }

    #[test]
    fn initial_form_at_zero_is_everything() {
        let ms = sym_det_monomials(4).unwrap();
        assert_eq!(initial_form(&ms, &TropMatrix::zeros(4, 4)).len(), 17);
    }
}
