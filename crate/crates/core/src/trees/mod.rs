//! Bicolored metric trees and their correspondence with tropical rank-2 matrices.
//!
//! Red leaf `i` stands for row `i`, blue leaf `j` for column `j`. Leaves hang
//! off internal nodes by edges without length, so a tree is stored as its
//! internal tree (nodes and rational edge lengths) plus the node each leaf is
//! attached to.

mod random;
mod reconstruct;
mod symbic;

use std::collections::VecDeque;
use std::fmt::Write as _;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::{parse_rational, Rational};

pub use random::random_tree;
pub use reconstruct::{metric_from_matrix, same_tree, tree_from_metric, tree_from_rank2, tree_to_matrix, LeafMetric};
pub use symbic::{one_fixed_point, symbic_classify, symbic_info, FixedSet, SymbicClass, SymbicInfo};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Leaf {
    pub color: Color,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub len: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicoloredTree {
    /// Number of internal nodes.
    pub nodes: usize,
    pub edges: Vec<Edge>,
    /// `red[i]` is the node carrying red leaf `i`.
    pub red: Vec<usize>,
    /// `blue[j]` is the node carrying blue leaf `j`.
    pub blue: Vec<usize>,
}

impl BicoloredTree {
    /// A single internal node carrying every leaf.
    pub fn star(d: usize, n: usize) -> BicoloredTree {
        BicoloredTree { nodes: 1, edges: Vec::new(), red: vec![0; d], blue: vec![0; n] }
    }

    pub fn d(&self) -> usize {
        self.red.len()
    }

    pub fn n(&self) -> usize {
        self.blue.len()
    }

    pub fn node_of(&self, leaf: Leaf) -> usize {
        match leaf.color {
            Color::Red => self.red[leaf.index],
            Color::Blue => self.blue[leaf.index],
        }
    }

    /// Leaves in JSON order: reds then blues.
    pub fn leaves(&self) -> Vec<Leaf> {
        let reds = (0..self.d()).map(|index| Leaf { color: Color::Red, index });
        let blues = (0..self.n()).map(|index| Leaf { color: Color::Blue, index });
        reds.chain(blues).collect()
    }

    pub fn adjacency(&self) -> Vec<Vec<(usize, Rational)>> {
        let mut adj = vec![Vec::new(); self.nodes];
        for e in &self.edges {
            adj[e.u].push((e.v, e.len.clone()));
            adj[e.v].push((e.u, e.len.clone()));
        }
        adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.u == v || e.v == v).count()
    }

    /// Leaves attached to each node.
    pub fn leaves_at(&self) -> Vec<Vec<Leaf>> {
        let mut at = vec![Vec::new(); self.nodes];
        for l in self.leaves() {
            at[self.node_of(l)].push(l);
        }
        at
    }

    /// Distances from `s` to every node.
    pub fn distances_from(&self, s: usize) -> Vec<Rational> {
        let adj = self.adjacency();
        let mut dist: Vec<Option<Rational>> = vec![None; self.nodes];
        dist[s] = Some(Rational::zero());
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].clone().expect("visited");
            for (v, w) in &adj[u] {
                if dist[*v].is_none() {
                    dist[*v] = Some(&du + w);
                    queue.push_back(*v);
                }
            }
        }
        dist.into_iter().map(|d| d.expect("tree is connected")).collect()
    }

    /// All-pairs node distances.
    pub fn node_metric(&self) -> Vec<Vec<Rational>> {
        (0..self.nodes).map(|s| self.distances_from(s)).collect()
    }

    /// Nodes on the path from `a` to `b`, both included.
    pub fn path(&self, a: usize, b: usize) -> Vec<usize> {
        let adj = self.adjacency();
        let mut parent = vec![usize::MAX; self.nodes];
        parent[a] = a;
        let mut queue = VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            for (v, _) in &adj[u] {
                if parent[*v] == usize::MAX {
                    parent[*v] = u;
                    queue.push_back(*v);
                }
            }
        }
        let mut out = vec![b];
        let mut x = b;
        while x != a {
            x = parent[x];
            out.push(x);
        }
        out.reverse();
        out
    }

    /// Checks the structural invariants: a connected acyclic internal tree
    /// with nonnegative lengths, both colors on each side of every internal
    /// edge, and no leafless node of internal degree two or less (other than
    /// a lone node).
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidTree(m));
        if self.nodes == 0 {
            return bad("no internal nodes".into());
        }
        if self.red.is_empty() || self.blue.is_empty() {
            return bad("need at least one leaf of each color".into());
        }
        if self.red.iter().chain(&self.blue).any(|&v| v >= self.nodes) {
            return bad("leaf attached to a missing node".into());
        }
        if self.edges.len() + 1 != self.nodes {
            return bad(format!("{} nodes but {} edges", self.nodes, self.edges.len()));
        }
        for e in &self.edges {
            if e.u >= self.nodes || e.v >= self.nodes || e.u == e.v {
                return bad(format!("bad edge {}-{}", e.u, e.v));
            }
            if e.len.is_negative() {
                return bad(format!("negative length on edge {}-{}", e.u, e.v));
            }
        }
        // connectivity (with n-1 edges this also rules out cycles)
        let mut seen = vec![false; self.nodes];
        let adj = self.adjacency();
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for (v, _) in &adj[u] {
                if !seen[*v] {
                    seen[*v] = true;
                    stack.push(*v);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return bad("internal tree is disconnected".into());
        }
        let at = self.leaves_at();
        if self.nodes > 1 {
            for v in 0..self.nodes {
                if adj[v].len() <= 2 && at[v].is_empty() {
                    return bad(format!("node {v} has internal degree {} and no leaves", adj[v].len()));
                }
            }
        }
        for (k, e) in self.edges.iter().enumerate() {
            let side = self.side_of_edge(k);
            for part in [true, false] {
                let colors: Vec<Color> =
                    self.leaves().into_iter().filter(|l| side[self.node_of(*l)] == part).map(|l| l.color).collect();
                if !colors.contains(&Color::Red) || !colors.contains(&Color::Blue) {
                    return bad(format!("cutting edge {}-{} leaves one side without both colors", e.u, e.v));
                }
            }
        }
        Ok(())
    }

    /// `side[v]` is true for nodes on the `u` side of edge `k`.
    pub fn side_of_edge(&self, k: usize) -> Vec<bool> {
        let cut = &self.edges[k];
        let adj = self.adjacency();
        let mut side = vec![false; self.nodes];
        side[cut.u] = true;
        let mut stack = vec![cut.u];
        while let Some(x) = stack.pop() {
            for (y, _) in &adj[x] {
                if !side[*y] && !(x == cut.u && *y == cut.v) {
                    side[*y] = true;
                    stack.push(*y);
                }
            }
        }
        side
    }

    /// Merges the endpoints of every zero-length internal edge.
    pub fn contracted(&self) -> BicoloredTree {
        let mut rep: Vec<usize> = (0..self.nodes).collect();
        fn find(rep: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while rep[r] != r {
                r = rep[r];
            }
            rep[x] = r;
            r
        }
        for e in &self.edges {
            if e.len.is_zero() {
                let (a, b) = (find(&mut rep, e.u), find(&mut rep, e.v));
                rep[a.max(b)] = a.min(b);
            }
        }
        let roots: Vec<usize> = (0..self.nodes).filter(|&v| find(&mut rep, v) == v).collect();
        let mut index = vec![0; self.nodes];
        for (k, &r) in roots.iter().enumerate() {
            index[r] = k;
        }
        let mut map = |v: usize| index[find(&mut rep, v)];
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.len.is_zero())
            .map(|e| Edge { u: map(e.u), v: map(e.v), len: e.len.clone() })
            .collect();
        BicoloredTree {
            nodes: roots.len(),
            edges,
            red: self.red.iter().map(|&v| map(v)).collect(),
            blue: self.blue.iter().map(|&v| map(v)).collect(),
        }
    }

    /// True if, after contracting zero-length edges, every internal node
    /// lies on one path.
    pub fn is_caterpillar(&self) -> bool {
        let t = self.contracted();
        (0..t.nodes).all(|v| t.degree(v) <= 2)
    }

    /// Internal nodes of a caterpillar in path order, with their positions
    /// measured from the first node.
    pub fn spine(&self) -> Option<Vec<(usize, Rational)>> {
        if !self.is_caterpillar() || self.edges.iter().any(|e| e.len.is_zero()) {
            return None;
        }
        let start = (0..self.nodes).find(|&v| self.degree(v) <= 1)?;
        let adj = self.adjacency();
        let mut out = vec![(start, Rational::zero())];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = adj[cur].iter().find(|(v, _)| *v != prev);
            let Some((v, w)) = next else { break };
            let pos = &out.last().expect("nonempty").1 + w;
            out.push((*v, pos));
            prev = cur;
            cur = *v;
        }
        Some(out)
    }

    pub fn to_json(&self) -> TreeJson {
        let leaves = self.leaves();
        let off = leaves.len();
        let mut edges: Vec<EdgeJson> = leaves
            .iter()
            .enumerate()
            .map(|(k, l)| EdgeJson { u: k, v: off + self.node_of(*l), len: None })
            .collect();
        edges.extend(self.edges.iter().map(|e| EdgeJson { u: off + e.u, v: off + e.v, len: Some(e.len.to_string()) }));
        TreeJson { leaves, edges }
    }

    pub fn from_json(j: &TreeJson) -> Result<BicoloredTree> {
        let bad = |m: &str| Error::InvalidTree(m.to_string());
        let nl = j.leaves.len();
        let d = j.leaves.iter().filter(|l| l.color == Color::Red).count();
        let n = nl - d;
        let mut red = vec![usize::MAX; d];
        let mut blue = vec![usize::MAX; n];
        let max_vertex = j.edges.iter().flat_map(|e| [e.u, e.v]).max().unwrap_or(0);
        let nodes = (max_vertex + 1).saturating_sub(nl);
        let mut edges = Vec::new();
        for e in &j.edges {
            let (u, v) = (e.u.min(e.v), e.u.max(e.v));
            match (u < nl, v < nl) {
                (true, true) => return Err(bad("edge between two leaves")),
                (true, false) => {
                    if e.len.is_some() {
                        return Err(bad("leaf edges carry no length"));
                    }
                    let l = j.leaves[u];
                    let slot = match l.color {
                        Color::Red => red.get_mut(l.index),
                        Color::Blue => blue.get_mut(l.index),
                    }
                    .ok_or_else(|| bad("leaf index out of range"))?;
                    if *slot != usize::MAX {
                        return Err(bad("leaf attached twice"));
                    }
                    *slot = v - nl;
                }
                (false, false) => {
                    let len = e.len.as_deref().ok_or_else(|| bad("internal edge without length"))?;
                    edges.push(Edge { u: u - nl, v: v - nl, len: parse_rational(len)? });
                }
                (false, true) => unreachable!("u <= v"),
            }
        }
        if red.iter().chain(&blue).any(|&x| x == usize::MAX) {
            return Err(bad("unattached leaf"));
        }
        let t = BicoloredTree { nodes, edges, red, blue };
        t.validate()?;
        Ok(t)
    }

    /// Graphviz rendering with colored leaves and labelled edge lengths.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph bicolored {\n  node [shape=point];\n");
        for v in 0..self.nodes {
            let _ = writeln!(s, "  n{v};");
        }
        for l in self.leaves() {
            let (name, color, label) = match l.color {
                Color::Red => (format!("r{}", l.index), "red", format!("{}", l.index + 1)),
                Color::Blue => (format!("b{}", l.index), "blue", format!("{}", l.index + 1)),
            };
            let _ = writeln!(
                s,
                "  {name} [shape=circle, color={color}, fontcolor={color}, label=\"{label}\"];\n  {name} -- n{} [color={color}];",
                self.node_of(l)
            );
        }
        for e in &self.edges {
            let _ = writeln!(s, "  n{} -- n{} [label=\"{}\"];", e.u, e.v, e.len);
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub u: usize,
    pub v: usize,
    pub len: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub leaves: Vec<Leaf>,
    pub edges: Vec<EdgeJson>,
}

impl Serialize for BicoloredTree {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for BicoloredTree {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = TreeJson::deserialize(d)?;
        BicoloredTree::from_json(&j).map_err(serde::de::Error::custom)
    }
}

/// The tree of the three-armed star: a center with arms of lengths `a, b, c`,
/// each ending at a node carrying red and blue leaf `i`.
pub fn three_arm_tree(a: Rational, b: Rational, c: Rational) -> BicoloredTree {
    BicoloredTree {
        nodes: 4,
        edges: vec![Edge { u: 0, v: 1, len: a }, Edge { u: 0, v: 2, len: b }, Edge { u: 0, v: 3, len: c }],
        red: vec![1, 2, 3],
        blue: vec![1, 2, 3],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    #[test]
    fn json_round_trip() {
        let t = three_arm_tree(int(1), int(2), int(3));
        let s = serde_json::to_string(&t).unwrap();
        let back: BicoloredTree = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        assert!(s.contains(r#"{"color":"red","index":0}"#));
        assert!(s.contains(r#""len":null"#));
    }

    #[test]
    fn validation() {
        assert!(three_arm_tree(int(1), int(1), int(1)).validate().is_ok());
        let mut t = three_arm_tree(int(1), int(1), int(1));
        t.red = vec![1, 1, 1];
        assert!(matches!(t.validate(), Err(Error::InvalidTree(_))));
        assert!(BicoloredTree::star(2, 3).validate().is_ok());
    }

    #[test]
    fn caterpillar_checks() {
        assert!(!three_arm_tree(int(1), int(1), int(1)).is_caterpillar());
        assert!(three_arm_tree(int(0), int(1), int(1)).is_caterpillar());
        let two = BicoloredTree {
            nodes: 2,
            edges: vec![Edge { u: 0, v: 1, len: int(1) }],
            red: vec![0, 1],
            blue: vec![0, 1],
        };
        assert!(two.is_caterpillar());
        assert_eq!(two.spine().unwrap(), vec![(0, int(0)), (1, int(1))]);
        assert!(two.to_dot().contains("label=\"1\""));
    }
}
