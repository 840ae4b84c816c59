//! Exact two-phase simplex with Bland's rule, for small dense problems
//! `A x = b, x >= 0`.

use num_traits::{Signed, Zero};

use crate::exact::rational::Rational;

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
}

impl Tableau {
    fn width(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len() - 1)
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x /= &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
        self.basis[r] = c;
    }

    /// Minimizes `cost · x` over the columns allowed to enter. Returns
    /// `false` if the objective is unbounded below.
    fn minimize(&mut self, cost: &[Rational], allowed: &dyn Fn(usize) -> bool) -> bool {
        let w = self.width();
        loop {
            let reduced = |j: usize| -> Rational {
                let mut r = cost[j].clone();
                for (i, row) in self.rows.iter().enumerate() {
                    r -= &cost[self.basis[i]] * &row[j];
                }
                r
            };
            let Some(enter) = (0..w).find(|&j| allowed(j) && !self.basis.contains(&j) && reduced(j).is_negative())
            else {
                return true;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[w] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return false;
            };
            self.pivot(r, enter);
        }
    }

    fn value(&self, cost: &[Rational]) -> Rational {
        let w = self.width();
        self.rows.iter().zip(&self.basis).map(|(row, &j)| &cost[j] * &row[w]).sum()
    }
}

/// Outcome of [`maximize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal(Rational),
}

/// Maximizes `c · x` subject to `A x = b`, `x >= 0`.
pub fn maximize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    let mut rows = Vec::with_capacity(m);
    for (i, (ai, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.is_negative();
        let mut row: Vec<Rational> = ai.iter().map(|x| if flip { -x } else { x.clone() }).collect();
        row.extend((0..m).map(|k| if k == i { Rational::from_integer(1.into()) } else { Rational::zero() }));
        row.push(if flip { -bi } else { bi.clone() });
        rows.push(row);
    }
    let mut t = Tableau { rows, basis: (n..n + m).collect() };
    let mut phase1 = vec![Rational::zero(); n + m];
    for x in &mut phase1[n..] {
        *x = Rational::from_integer(1.into());
    }
    t.minimize(&phase1, &|_| true);
    if !t.value(&phase1).is_zero() {
        return LpOutcome::Infeasible;
    }
    // drive remaining artificial variables out of the basis where possible
    for r in 0..m {
        if t.basis[r] >= n {
            if let Some(c) = (0..n).find(|&j| !t.rows[r][j].is_zero()) {
                t.pivot(r, c);
            }
        }
    }
    let mut cost: Vec<Rational> = c.iter().map(|x| -x).collect();
    cost.extend((0..m).map(|_| Rational::zero()));
    if !t.minimize(&cost, &|j| j < n) {
        return LpOutcome::Unbounded;
    }
    LpOutcome::Optimal(-t.value(&cost))
}

/// True if `A x = b`, `x >= 0` has a solution.
pub fn feasible(a: &[Vec<Rational>], b: &[Rational]) -> bool {
    let n = a.first().map_or(0, Vec::len);
    maximize(a, b, &vec![Rational::zero(); n]) != LpOutcome::Infeasible
}
