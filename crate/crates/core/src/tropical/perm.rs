//! Permutations of `0..n` stored as images: `p[i] = sigma(i)`.

use serde::{Deserialize, Serialize};

pub type Perm = Vec<usize>;

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut p = identity(n);
    loop {
        out.push(p.clone());
        if !next_perm(&mut p) {
            return out;
        }
    }
}

fn next_perm(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).expect("successor exists");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Cycles of length at least two, each starting at its smallest element.
pub fn cycles(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        if seen[s] || p[s] == s {
            seen[s] = true;
            continue;
        }
        let mut c = vec![s];
        seen[s] = true;
        let mut x = p[s];
        while x != s {
            seen[x] = true;
            c.push(x);
            x = p[x];
        }
        out.push(c);
    }
    out
}

/// Cycle lengths including fixed points, sorted in decreasing order.
pub fn cycle_type(p: &[usize]) -> Vec<usize> {
    let mut t: Vec<usize> = cycles(p).iter().map(Vec::len).collect();
    let moved: usize = t.iter().sum();
    t.extend(std::iter::repeat(1).take(p.len() - moved));
    t.sort_unstable_by(|a, b| b.cmp(a));
    t
}

/// `+1` or `-1`.
pub fn sign(p: &[usize]) -> i32 {
    let transpositions: usize = cycles(p).iter().map(|c| c.len() - 1).sum();
    if transpositions % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn inverse(p: &[usize]) -> Perm {
    let mut q = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        q[j] = i;
    }
    q
}

/// `(p ∘ q)(i) = p(q(i))`.
pub fn compose(p: &[usize], q: &[usize]) -> Perm {
    q.iter().map(|&i| p[i]).collect()
}

/// Cycle notation with 1-based labels, e.g. `(123)` or `(12)(34)`; the
/// identity prints as `()`. Labels are space-separated once `n >= 10`.
pub fn cycle_notation(p: &[usize]) -> String {
    let cs = cycles(p);
    if cs.is_empty() {
        return "()".into();
    }
    let sep = if p.len() >= 10 { " " } else { "" };
    cs.iter()
        .map(|c| format!("({})", c.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(sep)))
        .collect()
}

/// Parses cycle notation (1-based) into a permutation of `0..n`.
pub fn parse_cycles(s: &str, n: usize) -> Option<Perm> {
    let mut p = identity(n);
    for chunk in s.split(')') {
        let chunk = chunk.trim().trim_start_matches('(');
        if chunk.is_empty() {
            continue;
        }
        let labels: Vec<usize> = if chunk.contains(' ') || chunk.contains(',') {
            chunk.split([' ', ',']).filter(|x| !x.is_empty()).map(|x| x.parse().ok()).collect::<Option<_>>()?
        } else {
            chunk.chars().map(|ch| ch.to_digit(10).map(|d| d as usize)).collect::<Option<_>>()?
        };
        if labels.iter().any(|&l| l == 0 || l > n) {
            return None;
        }
        for k in 0..labels.len() {
            p[labels[k] - 1] = labels[(k + 1) % labels.len()] - 1;
        }
    }
    Some(p)
}

/// A permutation with its cycle-notation rendering, for JSON output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermJson {
    pub images: Vec<usize>,
    pub cycles: String,
}

impl From<&[usize]> for PermJson {
    fn from(p: &[usize]) -> Self {
        PermJson { images: p.to_vec(), cycles: cycle_notation(p) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_and_signs() {
        let ps = all_perms(4);
        assert_eq!(ps.len(), 24);
        assert_eq!(ps.iter().filter(|p| sign(p) == 1).count(), 12);
        assert_eq!(all_perms(0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn notation_round_trip() {
        let p = parse_cycles("(1234)", 4).unwrap();
        assert_eq!(p, vec![1, 2, 3, 0]);
        assert_eq!(cycle_notation(&p), "(1234)");
        assert_eq!(cycle_type(&p), vec![4]);
        assert_eq!(sign(&p), -1);
        let q = parse_cycles("(12)(34)", 4).unwrap();
        assert_eq!(cycle_type(&q), vec![2, 2]);
        assert_eq!(compose(&q, &inverse(&q)), identity(4));
        assert_eq!(cycle_notation(&identity(3)), "()");
    }
}
