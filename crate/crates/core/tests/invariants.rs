use bentforge_core::functions::{build_q, split_2adic};
use bentforge_core::qbf::{enumerate_all, is_qbf_set};
use bentforge_core::spectra::{check_split_identity, fourier_fwht, is_quaternary_bent};
use bentforge_core::verify::{verify_with, Checks};
use bentforge_core::{CoeffSet, Params, RingCtx};
use proptest::prelude::*;

/// `(n, e, k, mask, alpha_exp)` for a valid parameter set with `n ≤ n_max`.
fn arb_params(n_max: u32) -> impl Strategy<Value = Params> {
    (2..=n_max)
        .prop_flat_map(|n| {
            let divisors: Vec<u32> = (1..=n).filter(|e| n % e == 0).collect();
            (Just(n), proptest::sample::select(divisors))
        })
        .prop_flat_map(|(n, e)| {
            let m = n / e;
            let sets = 1u32 << CoeffSet::max_index(m);
            let choices = (1u32 << e) - 1;
            (Just(n), Just(e), 1..=m, 0..sets, 0..choices)
        })
        .prop_map(|(n, e, k, mask, j)| {
            let step = ((1u32 << n) - 1) / ((1u32 << e) - 1);
            Params::new(n, e, k, CoeffSet::from_mask(mask), j * step).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn verdicts_are_consistent(p in arb_params(14)) {
        let ring = RingCtx::new(p.n()).unwrap();
        let v = verify_with(&ring, &p, Checks::ALL, 14).unwrap();
        prop_assert!(v.consistent, "{:?}", v);
        prop_assert_eq!(v.spectrum_bent, Some(is_qbf_set(p.coeffs(), p.m(), p.k()).unwrap()));
    }

    #[test]
    fn constructed_q_satisfies_split_identity_and_parseval(p in arb_params(12)) {
        let ring = RingCtx::new(p.n()).unwrap();
        let q = build_q(&ring, &p).unwrap();
        prop_assert!(check_split_identity(&q));
        prop_assert!(fourier_fwht(ring.field(), &q).unwrap().parseval_holds());
        let (f0, _) = split_2adic(&q);
        prop_assert_eq!(f0.values()[0], 0);
    }

    #[test]
    fn orientation_does_not_change_bentness(p in arb_params(10)) {
        let ring = RingCtx::new(p.n()).unwrap();
        let q = build_q(&ring, &p).unwrap();
        prop_assert_eq!(is_quaternary_bent(&q), is_quaternary_bent(&q.negated()));
    }
}

#[test]
fn empty_set_is_bent_for_every_alpha_up_to_10() {
    for n in 1..=10 {
        let ring = RingCtx::new(n).unwrap();
        for e in (1..=n).filter(|e| n % e == 0) {
            let step = ring.order() / ((1 << e) - 1);
            for a in (0..ring.order()).step_by(step.max(1) as usize) {
                let p = Params::new(n, e, 1, CoeffSet::empty(), a).unwrap();
                assert!(is_quaternary_bent(&build_q(&ring, &p).unwrap()), "{p:?}");
            }
        }
    }
}

#[test]
fn enumeration_matches_verdicts_for_m_13() {
    let ring = RingCtx::new(13).unwrap();
    let qbf = enumerate_all(13, 1).unwrap();
    for mask in 0..1u32 << 6 {
        let c = CoeffSet::from_mask(mask);
        let p = Params::new(13, 1, 1, c.clone(), 0).unwrap();
        let bent = is_quaternary_bent(&build_q(&ring, &p).unwrap());
        assert_eq!(bent, qbf.contains(&c), "{c}");
    }
}
