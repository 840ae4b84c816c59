use proptest::prelude::*;
use troplift::exact::rational::int;
use troplift::membership::{member, FieldMode, Variety};
use troplift::tropical::TropMatrix;

mod common;
use common::{seeded, sized, square, symmetric};

fn verdicts(v: Variety, a: &TropMatrix) -> Vec<bool> {
    FieldMode::ALL.iter().map(|&m| member(v, a, m).unwrap().verdict).collect()
}

fn monotone(v: &[bool]) -> bool {
    let [c, r, cp, rp] = [v[0], v[1], v[2], v[3]];
    (!rp || cp) && (!cp || c) && (!rp || r) && (!r || c)
}

fn scale(a: &TropMatrix, r: &[i64], c: &[i64]) -> TropMatrix {
    TropMatrix::from_fn(a.rows(), a.cols(), |i, j| a.get(i, j) + int(r[i] + c[j]))
}

/// Adds `c_k` to row `k` and column `k` at once.
fn sym_scale(a: &TropMatrix, c: &[i64]) -> TropMatrix {
    scale(a, c, c).into_symmetric().unwrap()
}

fn shifts() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 5)
}

proptest! {
    #![proptest_config(seeded(200))]

    #[test]
    fn rank2(a in sized(4, 3), r in shifts(), c in shifts()) {
        let v = verdicts(Variety::Rank2, &a);
        prop_assert!(monotone(&v));
        prop_assert_eq!(&v, &verdicts(Variety::Rank2, &scale(&a, &r, &c)));
    }

    #[test]
    fn corank1(a in square(5, 2), r in shifts(), c in shifts()) {
        let v = verdicts(Variety::Corank1, &a);
        prop_assert!(monotone(&v));
        prop_assert_eq!(&v, &verdicts(Variety::Corank1, &scale(&a, &r, &c)));
    }

    #[test]
    fn sym_rank2(a in symmetric(4, 3), c in shifts()) {
        let v = verdicts(Variety::SymRank2, &a);
        prop_assert!(monotone(&v));
        prop_assert_eq!(&v, &verdicts(Variety::SymRank2, &sym_scale(&a, &c)));
    }

    #[test]
    fn sym_corank1(a in symmetric(5, 2), c in shifts()) {
        let v = verdicts(Variety::SymCorank1, &a);
        prop_assert!(monotone(&v));
        prop_assert_eq!(&v, &verdicts(Variety::SymCorank1, &sym_scale(&a, &c)));
    }
}
