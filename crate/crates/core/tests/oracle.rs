//! Engines against the test-side brute force, on a different seed than the
//! acceptance suite.

mod common;

use common::{brute_force, is_multiple, lift, pair};
use proptest::prelude::*;
use symbolpair::{analyze, full_enum, pair_weight, MethodChoice, SearchConfig};

const SEED: u64 = 0x0dd5_eed2;

#[test]
fn generators_match_the_oracle() {
    for code in common::suite(40, 100_000, SEED) {
        let g = lift(code.spec.generator().coeffs());
        assert_eq!(g, code.generator, "{}", code.label);
    }
}

#[test]
fn both_engines_match_brute_force() {
    let search = SearchConfig::default().with_method(MethodChoice::SupportSearch);
    let enumerate = SearchConfig::default();
    for code in common::suite(40, 100_000, SEED) {
        let spec = &code.spec;
        let (dh, dp) = brute_force(spec.p() as u64, spec.n(), &code.generator);
        let s = analyze(spec, &search).unwrap();
        let e = full_enum(spec, &enumerate).unwrap();
        assert_eq!((s.d_h, s.d_p), (dh, dp), "support search on {}", code.label);
        assert_eq!((e.d_h, e.d_p), (dh, dp), "enumeration on {}", code.label);
    }
}

#[test]
fn witnesses_are_codewords_of_the_reported_weight() {
    for code in common::suite(40, 100_000, SEED) {
        let r = analyze(&code.spec, &SearchConfig::default()).unwrap();
        let p = code.spec.p() as u64;
        for w in [&r.witness_h, &r.witness_p] {
            assert!(is_multiple(&lift(w.values()), &code.generator, p), "{}", code.label);
            assert_eq!(w.values().iter().find(|&&x| x != 0), Some(&1));
        }
        assert_eq!(r.witness_h.hamming_weight(), r.d_h);
        assert_eq!(pair(&lift(r.witness_p.values())), r.d_p);
    }
}

#[test]
fn worker_count_does_not_change_the_report() {
    for code in common::suite(12, 100_000, SEED) {
        let cfg = SearchConfig::default().with_method(MethodChoice::SupportSearch);
        let one = analyze(&code.spec, &cfg.clone().with_workers(1)).unwrap();
        let four = analyze(&code.spec, &cfg.with_workers(4)).unwrap();
        assert_eq!(
            (one.d_h, one.d_p, &one.witness_h, &one.witness_p, one.supports_examined),
            (four.d_h, four.d_p, &four.witness_h, &four.witness_p, four.supports_examined),
            "{}",
            code.label
        );
    }
}

proptest! {
    #[test]
    fn pair_weight_matches_the_oracle(v in prop::collection::vec(0u32..5, 2..40)) {
        prop_assert_eq!(pair_weight(&v).unwrap(), pair(&lift(&v)));
    }
}
