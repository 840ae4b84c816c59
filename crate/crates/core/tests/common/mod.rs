#![allow(dead_code)]

pub mod suite;

use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use troplift::exact::rational::int;
use troplift::tropical::TropMatrix;

/// Fixed seed so every run draws the same cases.
pub fn seeded(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, rng_seed: RngSeed::Fixed(20_240_601), failure_persistence: None, ..ProptestConfig::default() }
}

pub fn matrix(d: usize, n: usize, hi: i64) -> impl Strategy<Value = TropMatrix> {
    prop::collection::vec(0..=hi, d * n).prop_map(move |v| TropMatrix::from_fn(d, n, |i, j| int(v[i * n + j])))
}

pub fn square(max: usize, hi: i64) -> impl Strategy<Value = TropMatrix> {
    (1..=max).prop_flat_map(move |n| matrix(n, n, hi))
}

pub fn symmetric(max: usize, hi: i64) -> impl Strategy<Value = TropMatrix> {
    square(max, hi).prop_map(|a| {
        let n = a.rows();
        TropMatrix::from_fn(n, n, |i, j| a.get(i.min(j), i.max(j)).clone()).into_symmetric().expect("symmetric")
    })
}

pub fn sized(max: usize, hi: i64) -> impl Strategy<Value = TropMatrix> {
    (1..=max, 1..=max).prop_flat_map(move |(d, n)| matrix(d, n, hi))
}
