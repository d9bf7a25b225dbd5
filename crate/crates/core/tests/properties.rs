use num_bigint::BigUint;
use proptest::prelude::*;

use quatseq::adic::{base4_digits, complexity_report, gcd_split, s4_value};
use quatseq::constructions::QuaternarySequence;
use quatseq::correlation::{autocorrelation, full_profile};
use quatseq::gf2seq::{binary_autocorrelation, first_primitive_poly, msequence};
use quatseq::numtheory::{legendre_symbol, odd_primes, OddPrime};

fn small_prime() -> impl Strategy<Value = OddPrime> {
    let primes: Vec<OddPrime> = odd_primes(3, 400).collect();
    proptest::sample::select(primes)
}

fn quaternary(max_len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..4, 1..=max_len)
}

proptest! {
    #[test]
    fn legendre_is_multiplicative(p in small_prime(), a in -2000i64..2000, b in -2000i64..2000) {
        prop_assert_eq!(
            legendre_symbol(a * b, p),
            legendre_symbol(a, p) * legendre_symbol(b, p)
        );
    }

    #[test]
    fn s4_round_trips_through_base4(digits in quaternary(200)) {
        let value = s4_value(&digits);
        prop_assert_eq!(base4_digits(&value, digits.len()), digits);
    }

    #[test]
    fn autocorrelation_is_conjugate_symmetric(digits in quaternary(60), k in 0usize..60) {
        let n = digits.len();
        let tau = k % n;
        let s = QuaternarySequence::external(digits).unwrap();
        let forward = autocorrelation(&s, tau).unwrap();
        let backward = autocorrelation(&s, (n - tau) % n).unwrap();
        prop_assert_eq!(forward, backward.conj());
    }

    #[test]
    fn profile_counts_sum_to_period(digits in quaternary(80)) {
        let s = QuaternarySequence::external(digits).unwrap();
        let profile = full_profile(&s);
        let total: usize = profile.distribution.values().sum();
        prop_assert_eq!(total, s.period());
    }

    #[test]
    fn gcd_split_multiplies_to_full_gcd(half in quaternary(40), tail in quaternary(40)) {
        // force an even period
        let mut digits = half;
        digits.extend(tail);
        if digits.len() % 2 == 1 {
            digits.pop();
        }
        prop_assume!(!digits.is_empty());
        let s = QuaternarySequence::external(digits).unwrap();
        let (minus, plus) = gcd_split(&s).unwrap();
        prop_assert_eq!(minus * plus, complexity_report(&s).gcd);
    }

    #[test]
    fn shifted_msequence_stays_ideal(n in 2u32..=9, k in 0usize..600) {
        let m = msequence(&first_primitive_poly(n).unwrap()).unwrap();
        let shifted = m.rotate_left(k % m.period());
        for tau in 1..shifted.period() {
            prop_assert_eq!(binary_autocorrelation(&shifted, tau), -1);
        }
    }
}

#[test]
fn gcd_of_zero_sequence_is_full_modulus() {
    let s = QuaternarySequence::external(vec![0; 6]).unwrap();
    let r = complexity_report(&s);
    assert_eq!(r.gcd, (BigUint::from(1u32) << 12) - 1u32);
}
