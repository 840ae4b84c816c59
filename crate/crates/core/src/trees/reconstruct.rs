//! Matrix ↔ tree conversion.
//!
//! Modulo tropical row and column scaling a rank-2 matrix is
//! `A_ij = -d(r_i, b_j) / 2`, where `d` is the path length in the internal
//! tree between the nodes carrying red leaf `i` and blue leaf `j`.

use num_traits::{Signed, Zero};

use super::{BicoloredTree, Edge};
use crate::error::{Error, Result};
use crate::exact::rational::{int, Rational};
use crate::tropical::matrix::TropMatrix;
use crate::tropical::rank::{nonsingular_minor, trop_rank_bounded};
use crate::tropical::DEFAULT_ENUM_BOUND;

/// Distances between all leaves, indexed in [`BicoloredTree::leaves`] order
/// (reds first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafMetric {
    pub d: usize,
    pub n: usize,
    pub dist: Vec<Vec<Rational>>,
}

impl LeafMetric {
    pub fn of_tree(t: &BicoloredTree) -> LeafMetric {
        let nm = t.node_metric();
        let nodes: Vec<usize> = t.leaves().iter().map(|l| t.node_of(*l)).collect();
        let dist = nodes.iter().map(|&a| nodes.iter().map(|&b| nm[a][b].clone()).collect()).collect();
        LeafMetric { d: t.d(), n: t.n(), dist }
    }

    pub fn red(&self, i: usize) -> usize {
        i
    }

    pub fn blue(&self, j: usize) -> usize {
        self.d + j
    }
}

/// Hilbert distance between columns `j` and `k`.
fn hilbert_cols(a: &TropMatrix, j: usize, k: usize) -> Rational {
    let diffs: Vec<Rational> = (0..a.rows()).map(|i| a.get(i, j) - a.get(i, k)).collect();
    diffs.iter().max().expect("rows") - diffs.iter().min().expect("rows")
}

fn hilbert_rows(a: &TropMatrix, i: usize, k: usize) -> Rational {
    hilbert_cols(&a.transpose(), i, k)
}

/// Recovers the leaf metric of the tree of a rank-2 matrix.
pub fn metric_from_matrix(a: &TropMatrix) -> LeafMetric {
    let (d, n) = (a.rows(), a.cols());
    let two = int(2);
    let half = |x: Rational| x / int(2);
    // row and column scalings relative to the first row/column
    let rho: Vec<Rational> = (0..d)
        .map(|i| {
            let up = (0..n).map(|j| a.get(i, j) - a.get(0, j)).max().expect("cols");
            let down = (0..n).map(|j| a.get(0, j) - a.get(i, j)).max().expect("cols");
            half(up - down)
        })
        .collect();
    let gamma: Vec<Rational> = (0..n)
        .map(|j| {
            let up = (0..d).map(|i| a.get(i, j) - a.get(i, 0)).max().expect("rows");
            let down = (0..d).map(|i| a.get(i, 0) - a.get(i, j)).max().expect("rows");
            half(up - down)
        })
        .collect();
    let hb: Vec<Vec<Rational>> = (0..n).map(|j| (0..n).map(|k| hilbert_cols(a, j, k)).collect()).collect();
    let hr: Vec<Vec<Rational>> = (0..d).map(|i| (0..d).map(|k| hilbert_rows(a, i, k)).collect()).collect();
    // red leaf 0 lies on a path between two blue leaves (or shares a node with
    // one), which pins down the remaining additive constant
    let base: Vec<Rational> = (0..n).map(|j| -(&two * a.get(0, j)) + &two * &gamma[j]).collect();
    let konst = if n == 1 {
        -base[0].clone()
    } else {
        let m = (0..n)
            .flat_map(|j| (0..n).filter(move |&k| k != j).map(move |k| (j, k)))
            .map(|(j, k)| &base[j] + &base[k] - &hb[j][k])
            .min()
            .expect("two columns");
        -half(m)
    };
    let cross = |i: usize, j: usize| -(&two * a.get(i, j)) + &two * &rho[i] + &two * &gamma[j] + &konst;
    let total = d + n;
    let mut dist = vec![vec![Rational::zero(); total]; total];
    for i in 0..d {
        for k in 0..d {
            dist[i][k] = hr[i][k].clone();
        }
        for j in 0..n {
            let x = cross(i, j);
            dist[i][d + j] = x.clone();
            dist[d + j][i] = x;
        }
    }
    for j in 0..n {
        for k in 0..n {
            dist[d + j][d + k] = hb[j][k].clone();
        }
    }
    LeafMetric { d, n, dist }
}

/// Working tree for incremental insertion.
struct Builder {
    adj: Vec<Vec<(usize, Rational)>>,
}

impl Builder {
    fn add_node(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    fn connect(&mut self, u: usize, v: usize, w: Rational) {
        self.adj[u].push((v, w.clone()));
        self.adj[v].push((u, w));
    }

    fn disconnect(&mut self, u: usize, v: usize) {
        self.adj[u].retain(|(x, _)| *x != v);
        self.adj[v].retain(|(x, _)| *x != u);
    }

    fn path(&self, a: usize, b: usize) -> Vec<(usize, Rational)> {
        // DFS returning nodes with edge lengths from the previous node
        let mut parent: Vec<Option<(usize, Rational)>> = vec![None; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[a] = true;
        let mut stack = vec![a];
        while let Some(u) = stack.pop() {
            for (v, w) in &self.adj[u] {
                if !seen[*v] {
                    seen[*v] = true;
                    parent[*v] = Some((u, w.clone()));
                    stack.push(*v);
                }
            }
        }
        let mut out = Vec::new();
        let mut x = b;
        while x != a {
            let (p, w) = parent[x].clone().expect("connected");
            out.push((x, w));
            x = p;
        }
        out.push((a, Rational::zero()));
        out.reverse();
        out
    }

    /// The node at distance `s` from `a` along the path to `b`, splitting an
    /// edge if needed.
    fn point_on_path(&mut self, a: usize, b: usize, s: &Rational) -> usize {
        let path = self.path(a, b);
        let mut pos = Rational::zero();
        for k in 0..path.len() {
            if &pos == s {
                return path[k].0;
            }
            if k + 1 < path.len() {
                let next = &pos + &path[k + 1].1;
                if &next > s {
                    let (u, v) = (path[k].0, path[k + 1].0);
                    let w = path[k + 1].1.clone();
                    let m = self.add_node();
                    self.disconnect(u, v);
                    self.connect(u, m, s - &pos);
                    self.connect(m, v, &pos + &w - s);
                    return m;
                }
                pos = next;
            }
        }
        path.last().expect("nonempty").0
    }
}

/// Builds the unique tree realizing a leaf metric in which every leaf sits at
/// an internal node.
pub fn tree_from_metric(m: &LeafMetric) -> BicoloredTree {
    let total = m.d + m.n;
    let mut b = Builder { adj: Vec::new() };
    let mut at = vec![usize::MAX; total];
    at[0] = b.add_node();
    let half = |x: Rational| x / int(2);
    for x in 1..total {
        let a = 0;
        // pendant length if x hangs off the path a - y
        let (mut best, mut arg) = (m.dist[x][a].clone(), a);
        for y in 1..x {
            let g = half(&m.dist[x][a] + &m.dist[x][y] - &m.dist[a][y]);
            if g < best {
                best = g;
                arg = y;
            }
        }
        let s = &m.dist[x][a] - &best;
        let p = b.point_on_path(at[a], at[arg], &s);
        if best.is_positive() {
            let q = b.add_node();
            b.connect(p, q, best);
            at[x] = q;
        } else {
            at[x] = p;
        }
    }
    let mut edges = Vec::new();
    for u in 0..b.adj.len() {
        for (v, w) in &b.adj[u] {
            if u < *v {
                edges.push(Edge { u, v: *v, len: w.clone() });
            }
        }
    }
    BicoloredTree { nodes: b.adj.len(), edges, red: at[..m.d].to_vec(), blue: at[m.d..].to_vec() }
}

/// The bicolored tree of a matrix of tropical rank at most 2. Rank-1
/// matrices give the star.
pub fn tree_from_rank2(a: &TropMatrix) -> Result<BicoloredTree> {
    if nonsingular_minor(a, 3, 3)?.is_some() {
        let r = trop_rank_bounded(a, DEFAULT_ENUM_BOUND).unwrap_or(3);
        return Err(Error::RankTooHigh(r));
    }
    if nonsingular_minor(a, 2, 2)?.is_none() {
        return Ok(BicoloredTree::star(a.rows(), a.cols()));
    }
    Ok(tree_from_metric(&metric_from_matrix(a)))
}

/// The normalized matrix of a tree (first row and column zero).
pub fn tree_to_matrix(t: &BicoloredTree) -> Result<TropMatrix> {
    t.validate()?;
    let nm = t.node_metric();
    let a = TropMatrix::from_fn(t.d(), t.n(), |i, j| -(nm[t.red[i]][t.blue[j]].clone()) / int(2));
    Ok(a.normalized())
}

/// Same leaf metric and same shape after contracting zero-length edges.
pub fn same_tree(a: &BicoloredTree, b: &BicoloredTree) -> bool {
    let (a, b) = (a.contracted(), b.contracted());
    a.nodes == b.nodes && a.edges.len() == b.edges.len() && LeafMetric::of_tree(&a) == LeafMetric::of_tree(&b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::three_arm_tree;

    #[test]
    fn eq1_gives_three_arm_tree() {
        let a = TropMatrix::from_ints(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        let t = tree_from_rank2(&a).unwrap();
        assert!(same_tree(&t, &three_arm_tree(int(1), int(2), int(3))));
        assert!(!t.is_caterpillar());
        let lens: Vec<Rational> = {
            let mut v: Vec<Rational> = t.edges.iter().map(|e| e.len.clone()).collect();
            v.sort();
            v
        };
        assert_eq!(lens, vec![int(1), int(2), int(3)]);
    }

    #[test]
    fn to_matrix_of_three_arm_tree() {
        let a = tree_to_matrix(&three_arm_tree(int(1), int(1), int(1))).unwrap();
        let eq1 = TropMatrix::from_ints(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(a, eq1.normalized());
    }

    #[test]
    fn star_and_rank_one() {
        assert_eq!(tree_to_matrix(&BicoloredTree::star(2, 3)).unwrap(), TropMatrix::zeros(2, 3));
        let a = TropMatrix::from_ints(&[&[1, 2], &[3, 4]]);
        assert_eq!(tree_from_rank2(&a).unwrap(), BicoloredTree::star(2, 2));
    }

    #[test]
    fn rank_three_rejected() {
        let a = TropMatrix::from_ints(&[&[0, 5, 5], &[5, 0, 5], &[5, 5, 0]]);
        assert_eq!(tree_from_rank2(&a), Err(Error::RankTooHigh(3)));
    }

    #[test]
    fn symbic_caterpillar_shape() {
        let a = TropMatrix::from_ints(&[&[0, 2, 1], &[2, 0, 0], &[1, 0, 0]]);
        let t = tree_from_rank2(&a).unwrap();
        assert!(t.is_caterpillar());
        assert_eq!(tree_to_matrix(&t).unwrap(), a.normalized());
    }

    #[test]
    fn random_round_trip() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let (d, n) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
            let t = crate::trees::random_tree(&mut rng, d, n);
            let a = tree_to_matrix(&t).unwrap();
            let back = tree_from_rank2(&a).unwrap();
            assert!(same_tree(&t, &back), "{t:?}\n{back:?}");
            assert_eq!(tree_to_matrix(&back).unwrap(), a);
        }
    }
}
