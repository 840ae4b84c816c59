use proptest::prelude::*;
use troplift::exact::rational::Sign;
use troplift::exact::series::QSeries;
use troplift::fixtures::{fig3b, fig4a};
use troplift::lifts::{lift, lift_sym_caterpillar, positive_minor_signs, LiftCertificate, Positivity};
use troplift::membership::{member, FieldMode, Variety};
use troplift::tropical::{sym_barvinok_rank2, trop_mat_mul, TropMatrix};

mod common;
use common::{matrix, seeded, sized, square, symmetric};

fn all_coefficients_positive(cert: &LiftCertificate) -> bool {
    cert.lift.iter().flatten().all(|s: &QSeries| s.terms().iter().all(|(_, c)| c.is_real() && troplift::exact::coeff::Coeff::sign(c) == Sign::Positive))
}

fn exact(cert: &LiftCertificate) -> bool {
    cert.lift.iter().flatten().all(QSeries::is_exact)
}

fn check(variety: Variety, a: &TropMatrix, seed: u64) -> Result<(), TestCaseError> {
    for mode in [FieldMode::R, FieldMode::RPlus] {
        if !member(variety, a, mode).unwrap().verdict {
            continue;
        }
        let cert = match lift(variety, a, mode, seed, None) {
            Ok(c) => c,
            // positive symmetric corank-1 points on lower-dimensional faces
            // may lack an exact-valuation lift
            Err(troplift::Error::DegenerateGeneric(_)) if variety == Variety::SymCorank1 && mode.positive() => continue,
            Err(e) => return Err(TestCaseError::fail(format!("{mode:?} {a}: {e}"))),
        };
        prop_assert!(cert.valid && cert.reverify(), "{:?}", cert.transcript);
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                prop_assert_eq!(cert.lift[i][j].val().unwrap(), Some(a.get(i, j).clone()));
            }
        }
        if mode == FieldMode::RPlus {
            prop_assert_eq!(cert.positivity, Positivity::AllPositive);
        }
        if mode == FieldMode::RPlus && matches!(variety, Variety::Rank2 | Variety::SymRank2) {
            prop_assert!(all_coefficients_positive(&cert));
        }
        if mode == FieldMode::RPlus && variety == Variety::SymRank2 {
            prop_assert!(positive_minor_signs(a).is_empty());
        }
        let again = lift(variety, a, mode, seed, None).unwrap();
        prop_assert_eq!(serde_json::to_string(&cert).unwrap(), serde_json::to_string(&again).unwrap());
    }
    Ok(())
}

fn sym_product() -> impl Strategy<Value = TropMatrix> {
    (2usize..=5).prop_flat_map(|n| matrix(n, 2, 4)).prop_map(|b| trop_mat_mul(&b, &b.transpose()).unwrap().into_symmetric().unwrap())
}

proptest! {
    #![proptest_config(seeded(100))]

    #[test]
    fn rank2(a in sized(5, 3), seed in 0u64..1000) {
        check(Variety::Rank2, &a, seed)?;
    }

    #[test]
    fn sym_rank2(a in prop_oneof![sym_product(), symmetric(4, 3)], seed in 0u64..1000) {
        check(Variety::SymRank2, &a, seed)?;
    }

    #[test]
    fn corank1(a in square(5, 2), seed in 0u64..1000) {
        check(Variety::Corank1, &a, seed)?;
    }

    #[test]
    fn sym_corank1(a in symmetric(5, 2), seed in 0u64..1000) {
        check(Variety::SymCorank1, &a, seed)?;
    }
}

/// Type (a) spine matrices and type (b) factor products over 20 seeded
/// draws each: exact, positive, symmetric rank-2 lifts.
#[test]
fn explicit_caterpillar_formulas() {
    use rand::{Rng, SeedableRng};
    for seed in 0..20u64 {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(3..=6);
        let mut d: Vec<i64> = (1..n).map(|_| rng.gen_range(0..=6)).collect();
        d.sort_unstable_by(|x, y| y.cmp(x));
        let a = fig4a(&d);
        let cert = lift_sym_caterpillar(&a).unwrap();
        assert_eq!(cert.construction, "sym_caterpillar_spine");
        assert!(cert.valid && exact(&cert) && all_coefficients_positive(&cert), "{a}");

        let mut e = [0i64; 4];
        e[0] = rng.gen_range(1..=6);
        e[1] = e[0];
        e[2] = rng.gen_range(0..=e[1]);
        e[3] = rng.gen_range(0..=e[2]);
        let b = fig3b(e);
        assert!(sym_barvinok_rank2(&b).unwrap().sym_barvinok2);
        let cert = lift_sym_caterpillar(&b).unwrap();
        assert!(cert.valid && exact(&cert) && all_coefficients_positive(&cert), "{b}");
        assert!(positive_minor_signs(&b).is_empty());
    }
}
