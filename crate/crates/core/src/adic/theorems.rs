//! Closed-form gcd predictions for the three families and the
//! computed-versus-predicted harness.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::complexity_report;
use crate::constructions::{build, Family};
use crate::error::{Error, Result};
use crate::numtheory::{odd_primes, pow4, OddPrime};

/// Which case of the prediction fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// g1 with `5 | p + 2`: gcd 15.
    G1FiveDividesPPlus2,
    /// g1 otherwise: gcd 3.
    G1Otherwise,
    /// g2 with `5 | p - 2`: gcd 5.
    G2FiveDividesPMinus2,
    /// g2 otherwise: gcd 1.
    G2Otherwise,
    /// g3: gcd `(4^(2^n - 1) + 1) / 5`.
    G3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremPrediction {
    pub family: Family,
    pub param: u64,
    pub period: usize,
    pub predicted_gcd: BigUint,
    pub branch: Branch,
}

fn odd_prime_in_class(p: u64, class: u64) -> Result<OddPrime> {
    let p = OddPrime::new(p)?;
    if p.class_mod4() != class {
        return Err(Error::ResidueClass {
            p: p.get(),
            expected: class,
        });
    }
    Ok(p)
}

/// Largest `n` accepted for g3 predictions; the period `2^(n+1) - 2` must
/// stay addressable.
const MAX_G3_DEGREE: u64 = 24;

pub fn predict_gcd(family: Family, param: u64) -> Result<TheoremPrediction> {
    let (predicted_gcd, branch, period) = match family {
        Family::G1 => {
            let p = odd_prime_in_class(param, 1)?.get();
            if (p + 2) % 5 == 0 {
                (BigUint::from(15u32), Branch::G1FiveDividesPPlus2, 2 * p)
            } else {
                (BigUint::from(3u32), Branch::G1Otherwise, 2 * p)
            }
        }
        Family::G2 => {
            let p = odd_prime_in_class(param, 3)?.get();
            if p % 5 == 2 {
                (BigUint::from(5u32), Branch::G2FiveDividesPMinus2, 2 * p)
            } else {
                (BigUint::from(1u32), Branch::G2Otherwise, 2 * p)
            }
        }
        Family::G3 => {
            if !(2..=MAX_G3_DEGREE).contains(&param) {
                return Err(Error::InvalidParameter(format!(
                    "g3 needs 2 <= n <= {MAX_G3_DEGREE}, got {param}"
                )));
            }
            let m = (1u64 << param) - 1;
            ((pow4(m) + 1u32) / 5u32, Branch::G3, 2 * m)
        }
        Family::External => {
            return Err(Error::InvalidParameter(
                "no closed form for external sequences".into(),
            ))
        }
    };
    Ok(TheoremPrediction {
        family,
        param,
        period: period as usize,
        predicted_gcd,
        branch,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremCheck {
    pub prediction: TheoremPrediction,
    pub computed_gcd: BigUint,
    pub quotient: BigUint,
    pub threshold_ok: bool,
}

impl TheoremCheck {
    pub fn passed(&self) -> bool {
        self.computed_gcd == self.prediction.predicted_gcd
    }
}

/// Builds the sequence, computes its gcd and compares with the prediction.
pub fn verify_theorem(family: Family, param: u64) -> Result<TheoremCheck> {
    let prediction = predict_gcd(family, param)?;
    let seq = build(family, param)?;
    let report = complexity_report(&seq);
    Ok(TheoremCheck {
        prediction,
        computed_gcd: report.gcd,
        quotient: report.quotient,
        threshold_ok: report.threshold_ok,
    })
}

/// Valid parameters of `family` in `lo..=hi`, ascending.
pub fn sweep_params(family: Family, lo: u64, hi: u64) -> Vec<u64> {
    match family {
        Family::G1 => odd_primes(lo, hi)
            .filter(|p| p.class_mod4() == 1)
            .map(OddPrime::get)
            .collect(),
        Family::G2 => odd_primes(lo, hi)
            .filter(|p| p.class_mod4() == 3)
            .map(OddPrime::get)
            .collect(),
        Family::G3 => (lo.max(2)..=hi.min(MAX_G3_DEGREE)).collect(),
        Family::External => Vec::new(),
    }
}

/// Verifies every parameter on `jobs` worker threads. Results come back in
/// ascending parameter order whatever the thread count.
pub fn sweep(family: Family, params: &[u64], jobs: usize) -> Result<Vec<TheoremCheck>> {
    if jobs <= 1 {
        return params.iter().map(|&p| verify_theorem(family, p)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    pool.install(|| {
        params
            .par_iter()
            .map(|&p| verify_theorem(family, p))
            .collect()
    })
}
