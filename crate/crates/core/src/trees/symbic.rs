//! Color-swap symmetry of bicolored trees with `n` leaves of each color.

use serde::{Deserialize, Serialize};

use super::reconstruct::LeafMetric;
use super::BicoloredTree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymbicClass {
    NotSymmetricSwap,
    SwapNotAutomorphism,
    FixedSetNotPath,
    Symbic,
}

/// Fixed points of the swap automorphism on the internal tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FixedSet {
    /// A single fixed node.
    Node(usize),
    /// The midpoint of an edge whose endpoints are exchanged.
    Midpoint(usize, usize),
    /// Two or more fixed nodes forming a path, listed in path order.
    Path(Vec<usize>),
    /// Fixed nodes forming a subtree with a branch point.
    Branched(Vec<usize>),
}

impl FixedSet {
    pub fn is_single_point(&self) -> bool {
        matches!(self, FixedSet::Node(_) | FixedSet::Midpoint(..))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbicInfo {
    pub class: SymbicClass,
    /// Image of each node of the contracted tree under the swap.
    pub involution: Option<Vec<usize>>,
    pub fixed: Option<FixedSet>,
    /// The contracted tree that `involution` and `fixed` refer to.
    pub tree: BicoloredTree,
}

/// Full symmetry analysis (on the tree with zero-length edges contracted).
pub fn symbic_info(t: &BicoloredTree) -> SymbicInfo {
    let t = t.contracted();
    let mut info = SymbicInfo { class: SymbicClass::NotSymmetricSwap, involution: None, fixed: None, tree: t.clone() };
    let n = t.n();
    if t.d() != n {
        return info;
    }
    let swap = |l: usize| if l < n { l + n } else { l - n };
    let lm = LeafMetric::of_tree(&t);
    let invariant = (0..2 * n).all(|a| (0..2 * n).all(|b| lm.dist[a][b] == lm.dist[swap(a)][swap(b)]));
    if !invariant {
        info.class = SymbicClass::SwapNotAutomorphism;
        return info;
    }
    let nm = t.node_metric();
    let leaf_nodes: Vec<usize> = t.leaves().iter().map(|l| t.node_of(*l)).collect();
    let profile = |v: usize| -> Vec<_> { leaf_nodes.iter().map(|&x| nm[v][x].clone()).collect() };
    let profiles: Vec<_> = (0..t.nodes).map(profile).collect();
    let mut inv = Vec::with_capacity(t.nodes);
    for v in 0..t.nodes {
        let want: Vec<_> = (0..2 * n).map(|l| profiles[v][swap(l)].clone()).collect();
        match (0..t.nodes).find(|&w| profiles[w] == want) {
            Some(w) => inv.push(w),
            None => {
                info.class = SymbicClass::SwapNotAutomorphism;
                return info;
            }
        }
    }
    let fixed: Vec<usize> = (0..t.nodes).filter(|&v| inv[v] == v).collect();
    let set = if fixed.is_empty() {
        let e = t
            .edges
            .iter()
            .find(|e| inv[e.u] == e.v)
            .expect("an involution of a tree fixes a node or flips an edge");
        FixedSet::Midpoint(e.u.min(e.v), e.u.max(e.v))
    } else if fixed.len() == 1 {
        FixedSet::Node(fixed[0])
    } else {
        let deg = |v: usize| {
            t.edges.iter().filter(|e| (e.u == v && inv[e.v] == e.v) || (e.v == v && inv[e.u] == e.u)).count()
        };
        if fixed.iter().all(|&v| deg(v) <= 2) {
            let end = *fixed.iter().find(|&&v| deg(v) == 1).expect("a path has an end");
            let other = *fixed.iter().rev().find(|&&v| v != end && deg(v) == 1).expect("two ends");
            FixedSet::Path(t.path(end, other))
        } else {
            FixedSet::Branched(fixed)
        }
    };
    info.class = if matches!(set, FixedSet::Branched(_)) { SymbicClass::FixedSetNotPath } else { SymbicClass::Symbic };
    info.involution = Some(inv);
    info.fixed = Some(set);
    info
}

pub fn symbic_classify(t: &BicoloredTree) -> SymbicClass {
    symbic_info(t).class
}

/// True for symbic trees whose fixed set is a single point.
pub fn one_fixed_point(t: &BicoloredTree) -> bool {
    let info = symbic_info(t);
    info.class == SymbicClass::Symbic && info.fixed.as_ref().is_some_and(FixedSet::is_single_point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;
    use crate::trees::{three_arm_tree, tree_from_rank2, Edge};
    use crate::tropical::matrix::TropMatrix;

    #[test]
    fn three_arm_tree_is_not_symbic() {
        let t = three_arm_tree(int(1), int(1), int(1));
        assert_eq!(symbic_classify(&t), SymbicClass::FixedSetNotPath);
    }

    #[test]
    fn spine_of_pairs_is_fixed_path() {
        // red i and blue i share a node along a path
        let t = BicoloredTree {
            nodes: 3,
            edges: vec![Edge { u: 0, v: 1, len: int(1) }, Edge { u: 1, v: 2, len: int(2) }],
            red: vec![0, 2, 1],
            blue: vec![0, 2, 1],
        };
        let info = symbic_info(&t);
        assert_eq!(info.class, SymbicClass::Symbic);
        assert_eq!(info.fixed, Some(FixedSet::Path(vec![0, 1, 2])));
        assert!(!one_fixed_point(&t));
    }

    #[test]
    fn symmetric_caterpillar_has_one_fixed_point() {
        let a = TropMatrix::from_ints(&[&[0, 2, 1], &[2, 0, 0], &[1, 0, 0]]);
        let t = tree_from_rank2(&a).unwrap();
        assert_eq!(symbic_classify(&t), SymbicClass::Symbic);
        assert!(one_fixed_point(&t));
    }

    #[test]
    fn unequal_colors() {
        assert_eq!(symbic_classify(&BicoloredTree::star(2, 3)), SymbicClass::NotSymmetricSwap);
        let t = BicoloredTree {
            nodes: 2,
            edges: vec![Edge { u: 0, v: 1, len: int(1) }],
            red: vec![0, 0],
            blue: vec![1, 1],
        };
        assert!(t.validate().is_err());
        let t = BicoloredTree {
            nodes: 2,
            edges: vec![Edge { u: 0, v: 1, len: int(1) }],
            red: vec![0, 1],
            blue: vec![1, 1],
        };
        assert_eq!(symbic_classify(&t), SymbicClass::SwapNotAutomorphism);
    }
}
