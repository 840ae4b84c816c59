use std::collections::BTreeMap;

use troplift::exact::rational::{int, Rational};
use troplift::newton::{birkhoff_edge, polytope_edges, polytope_vertices, sym_det_monomials};
use troplift::oracle::{brute_hull, segment_is_edge};
use troplift::tropical::det::sym_exponent;
use troplift::tropical::perm::{all_perms, identity};

fn point(e: &[Vec<u8>]) -> Vec<Rational> {
    let n = e.len();
    (0..n).flat_map(|i| (i..n).map(move |j| int(e[i][j] as i64))).collect()
}

fn perm_point(p: &[usize]) -> Vec<Rational> {
    let n = p.len();
    (0..n * n).map(|v| int((p[v / n] == v % n) as i64)).collect()
}

#[test]
fn class_and_vertex_counts() {
    assert_eq!(sym_det_monomials(4).unwrap().len(), 17);
    assert_eq!(polytope_vertices(4).unwrap().len(), 14);
}

#[test]
fn predicates_match_exact_hull() {
    for n in 2..=4 {
        let ms = sym_det_monomials(n).unwrap();
        let pts: Vec<Vec<Rational>> = ms.iter().map(|c| point(&c.exponent)).collect();
        let hull = brute_hull(&pts).unwrap();
        let index = |e: &Vec<Vec<u8>>| ms.iter().position(|c| &c.exponent == e).unwrap();
        let mut vs: Vec<usize> = polytope_vertices(n).unwrap().iter().map(|c| index(&c.exponent)).collect();
        vs.sort_unstable();
        assert_eq!(vs, hull.vertices, "n = {n}");
        let mut es: Vec<(usize, usize)> = polytope_edges(n)
            .unwrap()
            .iter()
            .map(|e| {
                let (a, b) = (index(&e.u.exponent), index(&e.v.exponent));
                (a.min(b), a.max(b))
            })
            .collect();
        es.sort_unstable();
        assert_eq!(es, hull.edges, "n = {n}");
    }
}

#[test]
fn lattice_two_midpoints_are_monomials() {
    for n in 2..=5 {
        let ms = sym_det_monomials(n).unwrap();
        for e in polytope_edges(n).unwrap().iter().filter(|e| e.lattice_length == 2) {
            let mid: Vec<Vec<u8>> = (0..n).map(|i| (0..n).map(|j| (e.u.exponent[i][j] + e.v.exponent[i][j]) / 2).collect()).collect();
            let m = e.midpoint.as_ref().expect("lattice-2 edge carries its midpoint");
            assert_eq!(m.exponent, mid);
            assert!(ms.iter().any(|c| c.exponent == mid));
        }
    }
}

#[test]
fn coefficients_count_permutations() {
    for n in 1..=6 {
        let mut count: BTreeMap<Vec<Vec<u8>>, u64> = BTreeMap::new();
        for p in all_perms(n) {
            *count.entry(sym_exponent(&p)).or_default() += 1;
        }
        let ms = sym_det_monomials(n).unwrap();
        assert_eq!(ms.len(), count.len());
        for c in &ms {
            let long = c.cycle_type.iter().filter(|&&l| l >= 3).count() as u32;
            assert_eq!(count[&c.exponent], 1 << long, "{}", c.cycles());
            assert_eq!(c.coefficient, 1 << long);
        }
        assert_eq!(count.values().sum::<u64>(), (1..=n as u64).product::<u64>());
    }
}

#[test]
fn birkhoff_edges_small() {
    for n in 2..=4 {
        let perms = all_perms(n);
        let pts: Vec<Vec<Rational>> = perms.iter().map(|p| perm_point(p)).collect();
        for i in 0..perms.len() {
            for j in i + 1..perms.len() {
                assert_eq!(birkhoff_edge(&perms[i], &perms[j]), segment_is_edge(&pts, i, j), "{:?} {:?}", perms[i], perms[j]);
            }
        }
    }
}

#[test]
fn birkhoff_edges_from_identity_n5() {
    // the polytope is vertex-transitive, so edges at the identity suffice
    let perms = all_perms(5);
    let pts: Vec<Vec<Rational>> = perms.iter().map(|p| perm_point(p)).collect();
    let id = perms.iter().position(|p| *p == identity(5)).unwrap();
    for j in (0..perms.len()).filter(|&j| j != id) {
        assert_eq!(birkhoff_edge(&perms[id], &perms[j]), segment_is_edge(&pts, id, j), "{:?}", perms[j]);
    }
}
