//! Seeded random instances per variety, checked against every field mode.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use troplift::exact::rational::int;
use troplift::lifts::{lift, LiftCertificate};
use troplift::membership::{argmin_edges, member, FieldMode, Variety};
use troplift::trees::{random_tree, tree_to_matrix};
use troplift::tropical::{sym_trop_det, trop_mat_mul, TropMatrix};

pub const SAMPLES: usize = 500;

fn uniform(rng: &mut ChaCha8Rng, d: usize, n: usize, hi: i64) -> TropMatrix {
    let rows: Vec<Vec<i64>> = (0..d).map(|_| (0..n).map(|_| rng.gen_range(0..=hi)).collect()).collect();
    TropMatrix::from_fn(d, n, |i, j| int(rows[i][j]))
}

fn symmetric(rng: &mut ChaCha8Rng, n: usize, hi: i64) -> TropMatrix {
    let a = uniform(rng, n, n, hi);
    TropMatrix::from_fn(n, n, |i, j| a.get(i.min(j), i.max(j)).clone()).into_symmetric().unwrap()
}

fn factor_product(rng: &mut ChaCha8Rng, n: usize, k: usize) -> TropMatrix {
    let b = uniform(rng, n, k, 4);
    trop_mat_mul(&b, &b.transpose()).unwrap().into_symmetric().unwrap()
}

fn sample(variety: Variety, rng: &mut ChaCha8Rng) -> TropMatrix {
    match variety {
        Variety::Rank2 => {
            let (d, n) = (rng.gen_range(2..=5), rng.gen_range(2..=5));
            if rng.gen_bool(0.5) {
                tree_to_matrix(&random_tree(rng, d, n)).unwrap()
            } else {
                uniform(rng, d, n, 3)
            }
        }
        Variety::SymRank2 => {
            let n = rng.gen_range(2..=5);
            match rng.gen_range(0..3) {
                0 => factor_product(rng, n, 2),
                1 => factor_product(rng, n, 3),
                _ => symmetric(rng, n.min(4), 3),
            }
        }
        Variety::Corank1 => {
            let n = rng.gen_range(2..=5);
            uniform(rng, n, n, 2)
        }
        Variety::SymCorank1 => {
            let n = rng.gen_range(2..=5);
            symmetric(rng, n, 2)
        }
    }
}

pub struct Tally {
    pub members: [usize; 4],
    pub lifted: usize,
    /// Positive symmetric corank-1 points off the interior of every maximal
    /// cone that got no lift; an exact-valuation lift need not exist there.
    pub boundary: usize,
    pub failures: Vec<String>,
    /// Verified certificates over `R+`.
    pub positive: Vec<LiftCertificate>,
}

/// Every argmin class lies on a single edge of the Newton polytope.
fn interior_of_edge_cone(a: &TropMatrix) -> bool {
    let det = sym_trop_det(a).unwrap();
    argmin_edges(&det.argmin).iter().any(|e| {
        det.argmin.iter().all(|c| {
            c.exponent == e.u.exponent || c.exponent == e.v.exponent || e.midpoint.as_ref().is_some_and(|m| m.exponent == c.exponent)
        })
    })
}

pub fn run(variety: Variety, seed: u64) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tally { members: [0; 4], lifted: 0, boundary: 0, failures: Vec::new(), positive: Vec::new() };
    for k in 0..SAMPLES {
        let a = sample(variety, &mut rng);
        let v: Vec<bool> = FieldMode::ALL.iter().map(|&m| member(variety, &a, m).unwrap().verdict).collect();
        let [c, r, cp, rp] = [v[0], v[1], v[2], v[3]];
        assert!(!rp || cp, "R+ without C+ on {a}");
        assert!(!cp || c, "C+ without C on {a}");
        assert!(!rp || r, "R+ without R on {a}");
        assert!(!r || c, "R without C on {a}");
        for (i, &x) in v.iter().enumerate() {
            t.members[i] += x as usize;
        }
        for (mode, ok) in [(FieldMode::R, r), (FieldMode::RPlus, rp)] {
            if !ok {
                continue;
            }
            let boundary = variety == Variety::SymCorank1 && mode.positive() && !interior_of_edge_cone(&a);
            match lift(variety, &a, mode, k as u64, None) {
                Ok(cert) if cert.valid && cert.reverify() => {
                    t.lifted += 1;
                    if mode == FieldMode::RPlus {
                        t.positive.push(cert);
                    }
                }
                Err(_) if boundary => t.boundary += 1,
                Ok(cert) => t.failures.push(format!("{mode:?} {a}: {:?}", cert.transcript)),
                Err(e) => t.failures.push(format!("{mode:?} {a}: {e}")),
            }
        }
    }
    println!(
        "{variety}: members C/R/C+/R+ = {:?}, lifts = {}, boundary = {}, failures = {}",
        t.members,
        t.lifted,
        t.boundary,
        t.failures.len()
    );
    t
}

