//! 4-adic complexity.
//!
//! For one period `s` of length `N`, `S(4) = sum s_i 4^i` and the complexity is
//! `log4 q` with `q = (4^N - 1) / gcd(4^N - 1, S(4))`. The shortest FCSR that
//! generates `s` has length `floor(log4(q + 1))`.

mod congruences;
mod theorems;

pub use congruences::{check_g1_congruence, check_g2_congruence, check_g3_identity, CongruenceCheck};
pub use theorems::{
    predict_gcd, sweep, sweep_params, verify_theorem, Branch, TheoremCheck, TheoremPrediction,
};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::constructions::QuaternarySequence;
use crate::error::{Error, Result};
use crate::numtheory::pow4;

/// Significant digits in [`AdicReport::phi4_log4`].
pub const LOG_DIGITS: usize = 30;

/// Exact `S(4)`, evaluated by Horner's rule from the top digit.
pub fn s4_value(digits: &[u8]) -> BigUint {
    digits.iter().rev().fold(BigUint::zero(), |acc, &d| (acc << 2u32) + d as u32)
}

/// `S(4) mod m` without materializing `S(4)`.
pub fn s4_residue(digits: &[u8], modulus: &BigUint) -> BigUint {
    digits
        .iter()
        .rev()
        .fold(BigUint::zero(), |acc, &d| ((acc << 2u32) + d as u32) % modulus)
}

/// Base-4 digits of `x`, least significant first, padded to `len`.
pub fn base4_digits(x: &BigUint, len: usize) -> Vec<u8> {
    let mut out: Vec<u8> = x.to_radix_le(4);
    if out == [0] {
        out.clear();
    }
    out.resize(len.max(out.len()), 0);
    out
}

/// `gcd(m, 0) = m`, so the all-zero sequence has complexity 0.
fn gcd_with(modulus: &BigUint, x: &BigUint) -> BigUint {
    if x.is_zero() {
        modulus.clone()
    } else {
        modulus.gcd(x)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdicReport {
    pub period: usize,
    pub s4: BigUint,
    pub modulus: BigUint,
    pub gcd: BigUint,
    pub quotient: BigUint,
    pub phi4_log4: String,
    pub fcsr_length: BigUint,
    pub threshold_ok: bool,
}

impl Serialize for AdicReport {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            period: usize,
            s4: String,
            gcd: String,
            quotient: String,
            phi4_log4: &'a str,
            fcsr_length: String,
            threshold_ok: bool,
        }
        Wire {
            period: self.period,
            s4: self.s4.to_string(),
            gcd: self.gcd.to_string(),
            quotient: self.quotient.to_string(),
            phi4_log4: &self.phi4_log4,
            fcsr_length: self.fcsr_length.to_string(),
            threshold_ok: self.threshold_ok,
        }
        .serialize(serializer)
    }
}

pub fn complexity_report(s: &QuaternarySequence) -> AdicReport {
    let period = s.period();
    let s4 = s4_value(s.digits());
    let modulus = pow4(period as u64) - 1u32;
    let gcd = gcd_with(&modulus, &s4);
    let quotient = &modulus / &gcd;
    let phi4_log4 = log4_decimal(&quotient, LOG_DIGITS);
    let fcsr_length = BigUint::from(floor_log4(&(&quotient + 1u32)));
    let threshold_ok = exceeds_security_margin(&quotient, period);
    AdicReport {
        period,
        s4,
        modulus,
        gcd,
        quotient,
        phi4_log4,
        fcsr_length,
        threshold_ok,
    }
}

/// `log4 q > (N - 16) / 6`, checked exactly as `q^6 * 4^16 > 4^N`.
pub fn exceeds_security_margin(quotient: &BigUint, period: usize) -> bool {
    quotient.pow(6) * pow4(16) > pow4(period as u64)
}

/// `floor(log4 x)` for `x >= 1`.
pub fn floor_log4(x: &BigUint) -> u64 {
    assert!(!x.is_zero(), "log of zero");
    (x.bits() - 1) / 2
}

/// `(gcd(S(4), 4^m - 1), gcd(S(4), 4^m + 1))` for even period `N = 2m`.
/// The two moduli are coprime, so the product is `gcd(S(4), 4^N - 1)`.
pub fn gcd_split(s: &QuaternarySequence) -> Result<(BigUint, BigUint)> {
    let n = s.period();
    if n % 2 == 1 {
        return Err(Error::InvalidPeriod {
            period: n,
            reason: "gcd split needs an even period",
        });
    }
    let half = pow4((n / 2) as u64);
    let minus = &half - 1u32;
    let plus = &half + 1u32;
    let g_minus = gcd_with(&minus, &s4_residue(s.digits(), &minus));
    let g_plus = gcd_with(&plus, &s4_residue(s.digits(), &plus));
    Ok((g_minus, g_plus))
}

/// Binary logarithm of `q >= 1` as a fixed-point integer with `frac_bits`
/// fractional bits, by repeated squaring of the normalized mantissa.
fn log2_fixed(q: &BigUint, frac_bits: usize) -> BigUint {
    let int_part = q.bits() - 1;
    let work = frac_bits + 64;
    let mut x = if int_part as usize >= work {
        q >> (int_part as usize - work)
    } else {
        q << (work - int_part as usize)
    };
    let two = BigUint::one() << (work + 1);
    let mut result = BigUint::from(int_part) << frac_bits;
    for bit in (0..frac_bits).rev() {
        x = (&x * &x) >> work;
        if x >= two {
            x >>= 1u32;
            result.set_bit(bit as u64, true);
        }
    }
    result
}

/// `log4 q` rounded to `digits` significant decimal digits.
pub fn log4_decimal(q: &BigUint, digits: usize) -> String {
    assert!(!q.is_zero(), "log of zero");
    if q.is_one() {
        return "0".to_string();
    }
    // log4 q = L / 2^(frac_bits + 1)
    let frac_bits = 4 * digits + 16;
    let l = log2_fixed(q, frac_bits);
    let shift = frac_bits + 1;
    let scaled = |k: usize| -> BigUint {
        let num = &l * BigUint::from(10u32).pow(k as u32);
        (num + (BigUint::one() << (shift - 1))) >> shift
    };
    let mut k = digits;
    let mut value = scaled(k);
    while value.to_string().len() > digits && k > 0 {
        k -= 1;
        value = scaled(k);
    }
    while value.to_string().len() < digits {
        k += 1;
        value = scaled(k);
    }
    let text = value.to_string();
    if k == 0 {
        return text;
    }
    let text = if text.len() <= k {
        format!("{}{}", "0".repeat(k + 1 - text.len()), text)
    } else {
        text
    };
    let (int, frac) = text.split_at(text.len() - k);
    format!("{int}.{frac}")
}
