//! Randomised invariants. The seed is fixed; override it with `QBLOCKS_SEED`.

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use qblocks::abacus::{
    beta_number, e_core, e_quotient, e_weight, from_core_and_quotient, partition_from_beta, x_vector, y_vector,
    core_from_y,
};
use qblocks::blocks::{deparametrise, is_block, is_block_dp, parametrise, Limits, Multicharge};
use qblocks::bounds::{pair_weight, q_form, tuple_weight, CountVector, SubsetTuple};
use qblocks::partition::{charge_weight, residue_counts};
use qblocks::shift::{sigma_block, ShiftParam};
use qblocks::{BlockVector, Modulus, Partition};

fn config() -> Config {
    let seed = std::env::var("QBLOCKS_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(0x5eed);
    Config { cases: 256, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..Config::default() }
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1i64..=9, 0..=9).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn modulus(lo: u32, hi: u32) -> impl Strategy<Value = Modulus> {
    (lo..=hi).prop_map(|e| Modulus::new(e).unwrap())
}

fn element(e: u32, lo: i64, hi: i64) -> impl Strategy<Value = BlockVector> {
    prop::collection::vec(lo..=hi, e as usize)
        .prop_map(move |c| BlockVector::from_coeffs(Modulus::new(e).unwrap(), c).unwrap())
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn beta_round_trip(l in partition(), s in -5i64..=5) {
        prop_assert_eq!(partition_from_beta(&beta_number(&l, s)), (l, s));
    }

    #[test]
    fn core_quotient_round_trip(l in partition(), s in -4i64..=4, e in modulus(1, 7)) {
        let core = e_core(&l, e).unwrap();
        let q = e_quotient(&l, s, e).unwrap();
        prop_assert_eq!(core.size() + e.get() as i64 * q.size(), l.size());
        prop_assert_eq!(from_core_and_quotient(&core, &q, s, e).unwrap(), l);
    }

    #[test]
    fn quotient_rotates_with_charge(l in partition(), s in -4i64..=4, e in modulus(1, 6)) {
        let q0 = e_quotient(&l, s, e).unwrap().parts;
        let q1 = e_quotient(&l, s + 1, e).unwrap().parts;
        let n = q0.len();
        for i in 0..n {
            prop_assert_eq!(&q1[(i + 1) % n], &q0[i]);
        }
    }

    #[test]
    fn weights_agree(l in partition(), s in -4i64..=4, e in modulus(1, 9)) {
        prop_assert_eq!(charge_weight(&l, s, e), e_weight(&l, e));
    }

    #[test]
    fn y_core_round_trip(l in partition(), s in -4i64..=4, e in modulus(1, 6)) {
        let core = e_core(&l, e).unwrap();
        let y = y_vector(&core, s, e).unwrap();
        prop_assert_eq!(y.sum(), 0);
        prop_assert_eq!(core_from_y(&y, s).unwrap(), core.clone());
        // Σ x_i = s
        prop_assert_eq!(x_vector(&core, s, e).unwrap().iter().sum::<i64>(), s);
    }

    #[test]
    fn parametrisation_round_trip(l in partition(), s in -4i64..=4, e in modulus(1, 6)) {
        let a = residue_counts(&l, s, e);
        let (y, w) = parametrise(&a, s).unwrap();
        prop_assert_eq!(w, e_weight(&l, e));
        prop_assert_eq!(deparametrise(&y, w, s).unwrap(), a);
    }

    #[test]
    fn weight_of_translates(a in element(4, -5, 5), h in -4i64..=4, s0 in -3i64..=3, s1 in -3i64..=3) {
        let s = [s0, s1];
        prop_assert_eq!(a.add_ones(h).unwrap().weight(&s), a.weight(&s) + 2 * h);
    }

    #[test]
    fn weight_shift(a in element(6, -5, 5), ehat in 1u32..6) {
        let p = ShiftParam::new(Modulus::new(6).unwrap(), ehat).unwrap();
        let sa = sigma_block(&a, &p).unwrap();
        prop_assert_eq!(sa.weight(&[0]), a.weight(&[0]) + a.coeff(ehat as i64) - a.coeff(0));
    }

    #[test]
    fn membership_matches_reference(a in element(3, 0, 4), s1 in 0i64..=2) {
        let s = Multicharge::new(vec![0, s1]).unwrap();
        let lim = Limits::default();
        prop_assert_eq!(is_block(&a, &s, &lim).unwrap(), is_block_dp(&a, &s, &lim).unwrap());
    }

    #[test]
    fn subset_weights(sets in prop::collection::vec(0u64..32, 1..7)) {
        let t = SubsetTuple::new(5, sets.clone()).unwrap();
        prop_assert_eq!(q_form(&CountVector::from_tuple(&t)), tuple_weight(&t));
        let comp = SubsetTuple::new(5, sets.iter().map(|m| !m & 31).collect()).unwrap();
        prop_assert_eq!(tuple_weight(&comp), tuple_weight(&t));
        for &a in &sets {
            prop_assert!(pair_weight(a, a) == 0);
        }
    }
}
