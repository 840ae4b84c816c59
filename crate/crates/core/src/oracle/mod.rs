//! Slow, independent oracles used to validate the fast paths on small
//! instances.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::{int, Rational};
use crate::tropical::matrix::TropMatrix;

pub mod lp;
mod suite;

pub use suite::{verify_suite, OracleReport, SuiteReport};

use lp::{feasible, maximize, LpOutcome};

pub const HULL_MAX_POINTS: usize = 40;
pub const HULL_MAX_DIM: usize = 10;
pub const BRUTE_MAX_SIDE: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hull {
    /// Indices of the points that are vertices.
    pub vertices: Vec<usize>,
    /// Pairs of vertex indices spanning an edge, `a < b`.
    pub edges: Vec<(usize, usize)>,
}

/// True if `q` is a convex combination of `pts`.
pub fn in_hull(q: &[Rational], pts: &[&Vec<Rational>]) -> bool {
    if pts.is_empty() {
        return false;
    }
    let mut a: Vec<Vec<Rational>> = (0..q.len()).map(|c| pts.iter().map(|p| p[c].clone()).collect()).collect();
    a.push(vec![Rational::one(); pts.len()]);
    let mut b = q.to_vec();
    b.push(Rational::one());
    feasible(&a, &b)
}

pub fn is_hull_vertex(points: &[Vec<Rational>], k: usize) -> bool {
    // a repeated point only counts once, at its first index
    if points[..k].contains(&points[k]) {
        return false;
    }
    let others: Vec<&Vec<Rational>> = points.iter().filter(|p| **p != points[k]).collect();
    !in_hull(&points[k], &others)
}

fn on_segment(p: &[Rational], a: &[Rational], b: &[Rational]) -> bool {
    let Some(c) = (0..a.len()).find(|&c| a[c] != b[c]) else {
        return p == a;
    };
    let t = (&p[c] - &a[c]) / (&b[c] - &a[c]);
    if t < Rational::zero() || t > Rational::one() {
        return false;
    }
    (0..a.len()).all(|c| p[c] == &a[c] + &t * (&b[c] - &a[c]))
}

/// For two vertices `i` and `j`: the segment between them is an edge exactly
/// when its midpoint has no convex representation using a point off the
/// segment.
pub fn segment_is_edge(points: &[Vec<Rational>], i: usize, j: usize) -> bool {
    let (pi, pj) = (&points[i], &points[j]);
    let dim = pi.len();
    let mid: Vec<Rational> = (0..dim).map(|c| (&pi[c] + &pj[c]) / int(2)).collect();
    let mut a: Vec<Vec<Rational>> = (0..dim).map(|c| points.iter().map(|p| p[c].clone()).collect()).collect();
    a.push(vec![Rational::one(); points.len()]);
    let mut b = mid;
    b.push(Rational::one());
    let c: Vec<Rational> =
        points.iter().map(|p| if on_segment(p, pi, pj) { Rational::zero() } else { Rational::one() }).collect();
    match maximize(&a, &b, &c) {
        LpOutcome::Optimal(v) => v.is_zero(),
        other => panic!("midpoint LP is feasible and bounded, got {other:?}"),
    }
}

/// Exact vertices and edges of the convex hull of a small point set.
pub fn brute_hull(points: &[Vec<Rational>]) -> Result<Hull> {
    if points.len() > HULL_MAX_POINTS {
        return Err(Error::SizeLimit { size: points.len(), bound: HULL_MAX_POINTS });
    }
    let dim = points.first().map_or(0, Vec::len);
    if dim > HULL_MAX_DIM {
        return Err(Error::SizeLimit { size: dim, bound: HULL_MAX_DIM });
    }
    if points.iter().any(|p| p.len() != dim) {
        return Err(Error::DimensionMismatch("points of different dimensions".into()));
    }
    let vertices: Vec<usize> = (0..points.len()).filter(|&k| is_hull_vertex(points, k)).collect();
    let mut edges = Vec::new();
    for (x, &i) in vertices.iter().enumerate() {
        for &j in &vertices[x + 1..] {
            if segment_is_edge(points, i, j) {
                edges.push((i, j));
            }
        }
    }
    Ok(Hull { vertices, edges })
}

/// Integer entries of `a` after clearing denominators.
fn integer_entries(a: &TropMatrix) -> Option<Vec<Vec<i64>>> {
    let mut lcm = BigInt::one();
    for i in 0..a.rows() {
        for x in a.row(i) {
            lcm = lcm.lcm(x.denom());
        }
    }
    (0..a.rows())
        .map(|i| a.row(i).iter().map(|x| (x.numer() * (&lcm / x.denom())).to_i64().filter(|v| v.abs() < 1 << 40)).collect())
        .collect()
}

/// Feasibility of `z_i - y_j = a_ij` on `mask` cells and `>= a_ij` on the
/// rest, by Bellman-Ford on the constraint graph.
fn difference_layer(a: &[Vec<i64>], mask: u32) -> bool {
    let (d, n) = (a.len(), a[0].len());
    // nodes: z_0..z_{d-1}, y_0..y_{n-1}; edge (from, to, w) means x_to - x_from <= w
    let mut edges = Vec::with_capacity(2 * d * n);
    for i in 0..d {
        for j in 0..n {
            let (z, y) = (i, d + j);
            edges.push((z, y, -a[i][j]));
            if mask >> (i * n + j) & 1 == 1 {
                edges.push((y, z, a[i][j]));
            }
        }
    }
    let mut dist = vec![0i64; d + n];
    for _ in 0..d + n {
        let mut changed = false;
        for &(u, v, w) in &edges {
            if dist[u] + w < dist[v] {
                dist[v] = dist[u] + w;
                changed = true;
            }
        }
        if !changed {
            return true;
        }
    }
    false
}

/// Barvinok rank at most 2 by exhausting which of the two terms attains each
/// entry of `B ⊙ C`.
pub fn brute_barvinok2(a: &TropMatrix) -> Result<bool> {
    let (d, n) = (a.rows(), a.cols());
    let side = d.max(n);
    if side > BRUTE_MAX_SIDE {
        return Err(Error::SizeLimit { size: side, bound: BRUTE_MAX_SIDE });
    }
    let w = integer_entries(a).ok_or(Error::SizeLimit { size: side, bound: BRUTE_MAX_SIDE })?;
    let cells = d * n;
    let full: u32 = if cells == 32 { u32::MAX } else { (1u32 << cells) - 1 };
    let ok: Vec<bool> = (0..=full).map(|m| difference_layer(&w, m)).collect();
    Ok((0..=full).any(|m| ok[m as usize] && ok[(full & !m) as usize]))
}

/// Feasibility of `x_i + x_j = a_ij` on `mask` cells and `>= a_ij` on the rest.
fn sum_layer(a: &TropMatrix, cells: &[(usize, usize)], mask: u32) -> bool {
    let n = a.rows();
    // columns: p_0..p_{n-1}, q_0..q_{n-1} with x = p - q, then one slack per loose cell
    let loose: Vec<usize> = (0..cells.len()).filter(|&c| mask >> c & 1 == 0).collect();
    let width = 2 * n + loose.len();
    let mut rows = Vec::with_capacity(cells.len());
    let mut rhs = Vec::with_capacity(cells.len());
    for (c, &(i, j)) in cells.iter().enumerate() {
        let mut row = vec![Rational::zero(); width];
        row[i] += Rational::one();
        row[j] += Rational::one();
        row[n + i] -= Rational::one();
        row[n + j] -= Rational::one();
        if let Some(s) = loose.iter().position(|&x| x == c) {
            row[2 * n + s] = -Rational::one();
        }
        rows.push(row);
        rhs.push(a.get(i, j).clone());
    }
    feasible(&rows, &rhs)
}

/// Symmetric Barvinok rank at most 2 (`A = B ⊙ Bᵀ`) by exhausting which term
/// attains each entry on and above the diagonal.
pub fn brute_sym_barvinok2(a: &TropMatrix) -> Result<bool> {
    let n = a.require_square()?;
    if !a.is_symmetric_valued() {
        return Err(Error::NotSymmetric);
    }
    if n > BRUTE_MAX_SIDE {
        return Err(Error::SizeLimit { size: n, bound: BRUTE_MAX_SIDE });
    }
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let full: u32 = (1u32 << cells.len()) - 1;
    let ok: Vec<bool> = (0..=full).map(|m| sum_layer(a, &cells, m)).collect();
    Ok((0..=full).any(|m| ok[m as usize] && ok[(full & !m) as usize]))
}

/// The 12 lines of the affine plane over `F_3`, points numbered `3x + y`.
pub fn ag23_lines() -> Vec<Vec<usize>> {
    let dirs = [(0, 1), (1, 0), (1, 1), (1, 2)];
    let mut lines = Vec::new();
    for (dx, dy) in dirs {
        let mut seen: Vec<Vec<usize>> = Vec::new();
        for start in 0..9 {
            let (x, y) = (start / 3, start % 3);
            let mut line: Vec<usize> = (0..3).map(|t| 3 * ((x + t * dx) % 3) + (y + t * dy) % 3).collect();
            line.sort_unstable();
            if !seen.contains(&line) {
                seen.push(line);
            }
        }
        lines.extend(seen);
    }
    lines
}

/// Cocircuit matrix of AG(2,3): rows are the 9 points, columns the 12
/// cocircuits (complements of lines), entry 0 when the point lies in the
/// cocircuit and 1 otherwise. Its tropical rank is 3.
pub fn cocircuit_fixture() -> TropMatrix {
    let lines = ag23_lines();
    TropMatrix::from_fn(9, 12, |e, c| if lines[c].contains(&e) { int(1) } else { int(0) })
}
