use rand::seq::SliceRandom;
use rand::Rng;

use super::{BicoloredTree, Edge};
use crate::exact::rational::Rational;

fn random_length<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(1..=12).into(), rng.gen_range(1..=4).into())
}

/// A random valid bicolored tree with `d` red and `n` blue leaves and
/// positive rational edge lengths.
pub fn random_tree<R: Rng>(rng: &mut R, d: usize, n: usize) -> BicoloredTree {
    assert!(d >= 1 && n >= 1, "need leaves of both colors");
    loop {
        let m = rng.gen_range(1..=d.min(n).max(1) + 1);
        let mut edges = Vec::new();
        for v in 1..m {
            edges.push(Edge { u: rng.gen_range(0..v), v, len: random_length(rng) });
        }
        let deg: Vec<usize> = (0..m).map(|v| edges.iter().filter(|e| e.u == v || e.v == v).count()).collect();
        let tips: Vec<usize> = (0..m).filter(|&v| m > 1 && deg[v] == 1).collect();
        let middles: Vec<usize> = (0..m).filter(|&v| m > 1 && deg[v] == 2).collect();
        if tips.len() > d.min(n) || middles.len() + 2 * tips.len() > d + n {
            continue;
        }
        let mut red: Vec<usize> = tips.clone();
        let mut blue: Vec<usize> = tips.clone();
        for &v in &middles {
            if red.len() < d && (blue.len() >= n || rng.gen_bool(0.5)) {
                red.push(v);
            } else {
                blue.push(v);
            }
        }
        if red.len() > d || blue.len() > n {
            continue;
        }
        while red.len() < d {
            red.push(rng.gen_range(0..m));
        }
        while blue.len() < n {
            blue.push(rng.gen_range(0..m));
        }
        red.shuffle(rng);
        blue.shuffle(rng);
        let t = BicoloredTree { nodes: m, edges, red, blue };
        debug_assert!(t.validate().is_ok());
        return t;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_trees_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let d = rng.gen_range(1..=6);
            let n = rng.gen_range(1..=6);
            let t = random_tree(&mut rng, d, n);
            assert!(t.validate().is_ok(), "{t:?}");
        }
    }
}
