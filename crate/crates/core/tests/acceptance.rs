//! Acceptance suite: one test per exit criterion, each printing a single
//! PASS/FAIL line. All integer comparisons are exact.
//!
//! Run with `cargo test -p quatseq --test acceptance -- --nocapture` to see
//! the verdict lines.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quatseq::adic::{
    check_g1_congruence, check_g2_congruence, check_g3_identity, complexity_report, gcd_split,
    predict_gcd, sweep_params, verify_theorem,
};
use quatseq::constructions::{build_g1, build_g2, build_g3, build_g3_degree, Family, QuaternarySequence};
use quatseq::correlation::{autocorrelation, full_profile, is_balanced, GaussianInt};
use quatseq::gf2seq::{
    first_primitive_poly, is_ideal_autocorrelation_binary, msequence, weight, BinarySequence, Gf2Poly,
};
use quatseq::numtheory::{check_lemma2, check_lemma3, check_lemma4, odd_primes, OddPrime};

fn op(p: u64) -> OddPrime {
    OddPrime::new(p).unwrap()
}

fn pow4(e: u64) -> BigUint {
    BigUint::one() << (2 * e as usize)
}

/// Prints the verdict line and fails the test on a miss or an overrun.
fn verdict(id: u32, name: &str, budget: Duration, run: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let outcome = run();
    let elapsed = start.elapsed();
    let within = elapsed <= budget;
    let status = if outcome.is_ok() && within { "PASS" } else { "FAIL" };
    println!(
        "criterion {id:>2} [{name}]: {status} ({:.3}s, budget {:.0}s)",
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
    if let Err(why) = &outcome {
        println!("    {why}");
    }
    assert!(outcome.is_ok(), "criterion {id}: {}", outcome.unwrap_err());
    assert!(within, "criterion {id}: {elapsed:?} exceeds {budget:?}");
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn digits_of(s: &QuaternarySequence) -> Vec<u8> {
    s.digits().to_vec()
}

#[test]
fn criterion_01_example_1() {
    verdict(1, "g1 p=5 example", secs(1), || {
        let s = build_g1(op(5)).map_err(|e| e.to_string())?;
        check(digits_of(&s) == [0, 1, 2, 3, 0, 3, 0, 3, 2, 1], || format!("digits {:?}", s.digits()))?;
        let g = complexity_report(&s).gcd;
        check(g == BigUint::from(3u32), || format!("gcd {g}"))
    });
}

#[test]
fn criterion_02_example_2() {
    verdict(2, "g1 p=13 example", secs(1), || {
        let s = build_g1(op(13)).map_err(|e| e.to_string())?;
        let expected = [
            0, 1, 2, 1, 0, 3, 2, 3, 2, 1, 0, 3, 0, 3, 0, 3, 0, 1, 2, 3, 2, 3, 0, 1, 2, 1,
        ];
        check(digits_of(&s) == expected, || format!("digits {:?}", s.digits()))?;
        let g = complexity_report(&s).gcd;
        check(g == BigUint::from(15u32), || format!("gcd {g}"))
    });
}

#[test]
fn criterion_03_example_3() {
    verdict(3, "g2 p=3 example", secs(1), || {
        let s = build_g2(op(3)).map_err(|e| e.to_string())?;
        check(digits_of(&s) == [1, 1, 2, 0, 0, 3], || format!("digits {:?}", s.digits()))?;
        let g = complexity_report(&s).gcd;
        check(g == BigUint::from(1u32), || format!("gcd {g}"))
    });
}

#[test]
fn criterion_04_example_4() {
    verdict(4, "g2 p=7 example", secs(1), || {
        let s = build_g2(op(7)).map_err(|e| e.to_string())?;
        let expected = [1, 1, 0, 3, 0, 3, 2, 0, 0, 1, 2, 1, 2, 3];
        check(digits_of(&s) == expected, || format!("digits {:?}", s.digits()))?;
        let g = complexity_report(&s).gcd;
        check(g == BigUint::from(5u32), || format!("gcd {g}"))
    });
}

#[test]
fn criterion_05_example_5() {
    verdict(5, "g3 n=4 example", secs(1), || {
        let poly: Gf2Poly = "4,1,0".parse().map_err(|e: quatseq::Error| e.to_string())?;
        let m = msequence(&poly).map_err(|e| e.to_string())?;
        check(
            m.bits() == [0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1],
            || format!("m-sequence {:?}", m.bits()),
        )?;
        let s = build_g3(&m).map_err(|e| e.to_string())?;
        let expected = [
            0, 1, 0, 3, 0, 1, 2, 3, 0, 3, 0, 3, 2, 3, 2, 1, 0, 1, 2, 1, 0, 3, 2, 1, 2, 1, 2, 3, 2,
            3,
        ];
        check(digits_of(&s) == expected, || format!("digits {:?}", s.digits()))?;
        let g = complexity_report(&s).gcd;
        check(g == BigUint::from(214_748_365u32), || format!("gcd {g}"))?;
        check(g == (pow4(15) + 1u32) / 5u32, || "gcd != (4^15+1)/5".into())
    });
}

#[test]
fn criterion_06_theorem_g1_sweep() {
    verdict(6, "g1 sweep p <= 541", secs(60), || {
        let params = sweep_params(Family::G1, 3, 541);
        check(params.len() == 47, || format!("{} primes = 1 mod 4 up to 541", params.len()))?;
        for p in params {
            let expected = if (p + 2) % 5 == 0 { 15u32 } else { 3 };
            let c = verify_theorem(Family::G1, p).map_err(|e| e.to_string())?;
            check(c.passed() && c.computed_gcd == BigUint::from(expected), || {
                format!("p = {p}: computed {}, predicted {expected}", c.computed_gcd)
            })?;
            let (minus, plus) = gcd_split(&build_g1(op(p)).unwrap()).unwrap();
            let plus_expected = if expected == 15 { 5u32 } else { 1 };
            check(minus == BigUint::from(3u32) && plus == BigUint::from(plus_expected), || {
                format!("p = {p}: split ({minus}, {plus})")
            })?;
        }
        Ok(())
    });
}

#[test]
fn criterion_07_theorem_g2_sweep() {
    verdict(7, "g2 sweep p <= 547", secs(60), || {
        let params = sweep_params(Family::G2, 3, 547);
        check(params.len() == 53, || format!("{} primes = 3 mod 4 up to 547", params.len()))?;
        for p in params {
            let expected = if p % 5 == 2 { 5u32 } else { 1 };
            let c = verify_theorem(Family::G2, p).map_err(|e| e.to_string())?;
            check(c.passed() && c.computed_gcd == BigUint::from(expected), || {
                format!("p = {p}: computed {}, predicted {expected}", c.computed_gcd)
            })?;
        }
        Ok(())
    });
}

#[test]
fn criterion_08_theorem_g3_sweep() {
    verdict(8, "g3 sweep n = 2..10", secs(60), || {
        for n in 2..=10u64 {
            let m = (1u64 << n) - 1;
            let c = verify_theorem(Family::G3, n).map_err(|e| e.to_string())?;
            let expected = (pow4(m) + 1u32) / 5u32;
            check(c.computed_gcd == expected, || format!("n = {n}: gcd mismatch"))?;
            check(c.quotient == (pow4(m) - 1u32) * 5u32, || format!("n = {n}: quotient mismatch"))?;
        }
        Ok(())
    });
}

/// The distribution as stated: `{N: 1, 0: N/2 - 1, -2: N/2}`.
fn stated_distribution(n: usize) -> BTreeMap<GaussianInt, usize> {
    BTreeMap::from([
        (GaussianInt::real(n as i64), 1),
        (GaussianInt::real(0), n / 2 - 1),
        (GaussianInt::real(-2), n / 2),
    ])
}

#[test]
fn criterion_09_ideal_distribution() {
    verdict(9, "ideal distribution and balance", secs(120), || {
        let mut sequences = Vec::new();
        for p in odd_primes(3, 103) {
            match p.class_mod4() {
                1 if p.get() <= 101 => sequences.push((format!("g1 p={p}"), build_g1(p).unwrap())),
                3 => sequences.push((format!("g2 p={p}"), build_g2(p).unwrap())),
                _ => {}
            }
        }
        for n in 2..=8 {
            sequences.push((format!("g3 n={n}"), build_g3_degree(n).unwrap()));
        }

        let mut misses = Vec::new();
        for (label, s) in &sequences {
            let balance = is_balanced(s.digits(), 4).unwrap();
            if !balance.balanced {
                misses.push(format!("{label}: unbalanced {:?}", balance.counts));
            }
            let profile = full_profile(s);
            if profile.distribution != stated_distribution(s.period()) {
                misses.push(format!("{label}: observed {}", profile.distribution_string()));
            }
        }
        check(misses.is_empty(), || {
            format!(
                "{} of {} sequences miss {{N: 1, 0: N/2-1, -2: N/2}}; first: {}",
                misses.len(),
                sequences.len(),
                misses[0]
            )
        })
    });
}

#[test]
fn criterion_10_lemma_oracles() {
    verdict(10, "lemma oracles", secs(30), || {
        for p in odd_primes(3, 199) {
            check(check_lemma2(p).holds, || format!("lemma 2 fails at {p}"))?;
            check(check_lemma3(p.get()) == Ok(true), || format!("lemma 3 fails at {p}"))?;
            check(check_lemma4(p).holds, || format!("lemma 4 fails at {p}"))?;
        }
        for n in 2..=10u32 {
            let s = msequence(&first_primitive_poly(n).unwrap()).unwrap();
            check(weight(&s) == 1 << (n - 1), || format!("n = {n}: weight {}", weight(&s)))?;
            check(is_ideal_autocorrelation_binary(&s), || format!("n = {n}: not ideal"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_11_proof_congruences() {
    verdict(11, "proof-step congruences", secs(60), || {
        for p in sweep_params(Family::G1, 3, 101) {
            let c = check_g1_congruence(op(p)).unwrap();
            check(c.holds, || format!("g1 congruence fails at p = {p}"))?;
        }
        for p in sweep_params(Family::G2, 3, 101) {
            let c = check_g2_congruence(op(p)).unwrap();
            check(c.holds, || format!("g2 congruence fails at p = {p}"))?;
        }
        for n in 2..=8 {
            let s = msequence(&first_primitive_poly(n).unwrap()).unwrap();
            check(check_g3_identity(&s).unwrap(), || format!("g3 identity fails at n = {n}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_12_security_margin() {
    verdict(12, "security margin", secs(60), || {
        let points = sweep_params(Family::G1, 3, 541)
            .into_iter()
            .map(|p| (Family::G1, p))
            .chain(sweep_params(Family::G2, 3, 547).into_iter().map(|p| (Family::G2, p)))
            .chain((2..=10).map(|n| (Family::G3, n)));
        for (family, param) in points {
            let c = verify_theorem(family, param).map_err(|e| e.to_string())?;
            let n = c.prediction.period;
            let exact = c.quotient.pow(6) > pow4((n as u64).saturating_sub(16)) || n < 16;
            check(c.threshold_ok && exact, || format!("{family} {param}: below margin"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_13_random_properties() {
    verdict(13, "random product law and conjugate symmetry", secs(60), || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x4ad1c);
        for case in 0..1000 {
            let half = rng.gen_range(1..=100);
            let digits: Vec<u8> = (0..2 * half).map(|_| rng.gen_range(0..4)).collect();
            let s = QuaternarySequence::external(digits).unwrap();
            let (minus, plus) = gcd_split(&s).unwrap();
            let full = complexity_report(&s).gcd;
            check(&minus * &plus == full, || format!("case {case}: product law"))?;
            let n = s.period();
            for tau in 1..n {
                let a = autocorrelation(&s, tau).unwrap();
                let b = autocorrelation(&s, n - tau).unwrap();
                check(b == a.conj(), || format!("case {case}: conjugate symmetry at {tau}"))?;
            }
        }
        Ok(())
    });
}

#[test]
fn predictions_divide_modulus() {
    // TheoremPrediction invariant across the sweep ranges.
    for p in sweep_params(Family::G1, 3, 541) {
        let pr = predict_gcd(Family::G1, p).unwrap();
        assert_eq!((pow4(pr.period as u64) - 1u32) % &pr.predicted_gcd, BigUint::from(0u32));
    }
    let _ = BinarySequence::new(vec![0, 1, 1]).unwrap();
}
