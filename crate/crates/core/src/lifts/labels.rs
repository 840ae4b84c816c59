//! Leaf coordinates from a rooted metric tree.
//!
//! Every branch leaving a node (child subtree or pendant leaf) carries a
//! rational label, distinct among the branches of that node. A leaf gets
//! `x = sum label(w, next) t^{h(w)}` over the nodes `w` on its root path, so
//! `val(x_a - x_b) = h(lca(a, b))`.

use std::collections::{HashMap, VecDeque};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::rational::{int, Rational};
use crate::exact::series::PuiseuxSeries;
use crate::trees::{BicoloredTree, Color, Edge, Leaf};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Branch {
    Child(usize),
    Pendant(Leaf),
}

pub(crate) struct Rooted {
    pub h: Vec<Rational>,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    pub red_x: Vec<PuiseuxSeries>,
    pub blue_x: Vec<PuiseuxSeries>,
    pub red: Vec<usize>,
    pub blue: Vec<usize>,
}

impl Rooted {
    pub fn lca(&self, mut a: usize, mut b: usize) -> usize {
        while self.depth[a] > self.depth[b] {
            a = self.parent[a].expect("not the root");
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b].expect("not the root");
        }
        while a != b {
            a = self.parent[a].expect("not the root");
            b = self.parent[b].expect("not the root");
        }
        a
    }

    /// Height of the meeting point of red leaf `i` and blue leaf `j`.
    pub fn meet(&self, i: usize, j: usize) -> &Rational {
        &self.h[self.lca(self.red[i], self.blue[j])]
    }
}

fn swap_leaf(l: Leaf) -> Leaf {
    let color = if l.color == Color::Red { Color::Blue } else { Color::Red };
    Leaf { color, index: l.index }
}

/// Labels `t` rooted at `root`. With an involution (which must fix `root`),
/// labels are antisymmetric: the mirror of a branch gets the negated label,
/// so the swap of a leaf gets the negated coordinate.
pub(crate) fn rooted_labels(t: &BicoloredTree, root: usize, inv: Option<&[usize]>) -> Result<Rooted> {
    let adj = t.adjacency();
    let mut h: Vec<Option<Rational>> = vec![None; t.nodes];
    let mut parent = vec![None; t.nodes];
    let mut depth = vec![0; t.nodes];
    let mut order = Vec::with_capacity(t.nodes);
    h[root] = Some(Rational::zero());
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for (v, len) in &adj[u] {
            if h[*v].is_none() {
                h[*v] = Some(h[u].as_ref().expect("visited") + len);
                parent[*v] = Some(u);
                depth[*v] = depth[u] + 1;
                queue.push_back(*v);
            }
        }
    }
    let h: Vec<Rational> = h.into_iter().map(|x| x.expect("tree is connected")).collect();
    let leaves_at = t.leaves_at();
    let branches = |w: usize| -> Vec<Branch> {
        let kids = adj[w].iter().filter(|(v, _)| parent[*v] == Some(w)).map(|(v, _)| Branch::Child(*v));
        kids.chain(leaves_at[w].iter().map(|l| Branch::Pendant(*l))).collect()
    };

    let mut label: HashMap<(usize, Branch), Rational> = HashMap::new();
    let mut done = vec![false; t.nodes];
    for &w in &order {
        let mirror = inv.map(|s| s[w]);
        match mirror {
            Some(m) if m == w => {
                let s = inv.expect("mirror");
                let mut k = 1;
                let mut zero_used = false;
                for b in branches(w) {
                    if label.contains_key(&(w, b)) {
                        continue;
                    }
                    let image = match b {
                        Branch::Child(c) => Branch::Child(s[c]),
                        Branch::Pendant(l) => Branch::Pendant(swap_leaf(l)),
                    };
                    if image == b {
                        if zero_used {
                            return Err(Error::InvalidTree("fixed set branches".into()));
                        }
                        zero_used = true;
                        label.insert((w, b), Rational::zero());
                    } else {
                        label.insert((w, b), int(k));
                        label.insert((w, image), int(-k));
                        k += 1;
                    }
                }
            }
            Some(m) if done[m] => {
                let s = inv.expect("mirror");
                for b in branches(w) {
                    let image = match b {
                        Branch::Child(c) => Branch::Child(s[c]),
                        Branch::Pendant(l) => Branch::Pendant(swap_leaf(l)),
                    };
                    let l = label.get(&(m, image)).ok_or_else(|| Error::InvalidTree("swap is not an automorphism".into()))?;
                    label.insert((w, b), -l.clone());
                }
            }
            _ => {
                for (k, b) in branches(w).into_iter().enumerate() {
                    label.insert((w, b), int(k as i64 + 1));
                }
            }
        }
        done[w] = true;
    }

    let coord = |leaf: Leaf| -> PuiseuxSeries {
        let node = t.node_of(leaf);
        let mut path = vec![node];
        while let Some(p) = parent[*path.last().expect("nonempty")] {
            path.push(p);
        }
        path.reverse();
        let mut terms: Vec<(Rational, Rational)> = path
            .windows(2)
            .map(|w| (h[w[0]].clone(), label[&(w[0], Branch::Child(w[1]))].clone()))
            .collect();
        terms.push((h[node].clone(), label[&(node, Branch::Pendant(leaf))].clone()));
        PuiseuxSeries::exact(terms)
    };
    let red_x = (0..t.d()).map(|index| coord(Leaf { color: Color::Red, index })).collect();
    let blue_x = (0..t.n()).map(|index| coord(Leaf { color: Color::Blue, index })).collect();
    Ok(Rooted { h, parent, depth, red_x, blue_x, red: t.red.clone(), blue: t.blue.clone() })
}

/// Splits edge `u - v` at its midpoint; the new node is the last one.
pub(crate) fn subdivide(t: &BicoloredTree, u: usize, v: usize) -> BicoloredTree {
    let mid = t.nodes;
    let mut edges = Vec::with_capacity(t.edges.len() + 1);
    for e in &t.edges {
        if (e.u == u && e.v == v) || (e.u == v && e.v == u) {
            let half = &e.len / int(2);
            edges.push(Edge { u, v: mid, len: half.clone() });
            edges.push(Edge { u: mid, v, len: half });
        } else {
            edges.push(e.clone());
        }
    }
    BicoloredTree { nodes: t.nodes + 1, edges, red: t.red.clone(), blue: t.blue.clone() }
}
