//! Primes, Legendre symbols and the executable lemma oracles.
//!
//! The lemma checks evaluate both sides of each identity with arbitrary
//! precision integers and report the residues they compared, so a failing
//! prime can be inspected directly.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An odd prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OddPrime(u64);

impl OddPrime {
    pub fn new(value: u64) -> Result<Self> {
        if value > 2 && is_prime(value) {
            Ok(OddPrime(value))
        } else {
            Err(Error::NotOddPrime(value))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// `p mod 4`, either 1 or 3.
    pub fn class_mod4(self) -> u64 {
        self.0 % 4
    }
}

impl TryFrom<u64> for OddPrime {
    type Error = Error;

    fn try_from(value: u64) -> Result<Self> {
        OddPrime::new(value)
    }
}

impl fmt::Display for OddPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Value of a Legendre symbol `(a/p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LegendreValue {
    NonResidue,
    Zero,
    Residue,
}

impl LegendreValue {
    pub fn value(self) -> i32 {
        match self {
            LegendreValue::NonResidue => -1,
            LegendreValue::Zero => 0,
            LegendreValue::Residue => 1,
        }
    }
}

impl std::ops::Mul for LegendreValue {
    type Output = LegendreValue;

    fn mul(self, rhs: Self) -> Self {
        match self.value() * rhs.value() {
            1 => LegendreValue::Residue,
            -1 => LegendreValue::NonResidue,
            _ => LegendreValue::Zero,
        }
    }
}

/// Deterministic primality by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc = 1u128 % m;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Legendre symbol by Euler's criterion. Multiples of `p` map to `Zero`.
pub fn legendre_symbol(a: i64, p: OddPrime) -> LegendreValue {
    let p = p.get();
    let r = (a as i128).rem_euclid(p as i128) as u64;
    if r == 0 {
        return LegendreValue::Zero;
    }
    if pow_mod(r, (p - 1) / 2, p) == 1 {
        LegendreValue::Residue
    } else {
        LegendreValue::NonResidue
    }
}

/// Nonzero squares modulo `p`. The complement in `1..p` is the set of
/// non-residues.
pub fn quadratic_residues(p: OddPrime) -> BTreeSet<u64> {
    let p = p.get();
    (1..p).map(|x| (x as u128 * x as u128 % p as u128) as u64).collect()
}

/// Canonical residue of a signed integer in `[0, m)`.
pub(crate) fn residue(x: &BigInt, m: &BigUint) -> BigUint {
    let m = BigInt::from(m.clone());
    x.mod_floor(&m)
        .to_biguint()
        .expect("mod_floor with a positive modulus is nonnegative")
}

pub(crate) fn pow4(e: u64) -> BigUint {
    BigUint::one() << (2 * e as usize)
}

/// `sum_{t=1}^{p-1} (t/p) 4^t`, the Legendre-weighted base-4 sum that every
/// Legendre construction identity revolves around.
pub(crate) fn legendre_sum(p: OddPrime) -> BigInt {
    (1..p.get()).fold(BigInt::zero(), |acc, t| {
        acc + BigInt::from(legendre_symbol(t as i64, p).value()) * BigInt::from(pow4(t))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma2Check {
    pub holds: bool,
    pub modulus: BigUint,
    pub lhs: BigUint,
    pub rhs: BigUint,
}

/// Squared Legendre sum modulo `4^p - 1` against
/// `-(−1/p)(4^p−1)/3 + (−1/p)p`.
pub fn check_lemma2(p: OddPrime) -> Lemma2Check {
    let modulus = pow4(p.get()) - 1u32;
    let sum = legendre_sum(p);
    let lhs = residue(&(&sum * &sum), &modulus);

    let chi = BigInt::from(legendre_symbol(-1, p).value());
    let third = BigInt::from(&modulus / 3u32);
    let rhs = residue(&(-&chi * third + chi * BigInt::from(p.get())), &modulus);

    Lemma2Check {
        holds: lhs == rhs,
        modulus,
        lhs,
        rhs,
    }
}

/// `25 | 4^p + 1` exactly when `p = 5`. Accepts any prime.
pub fn check_lemma3(p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let divisible = (pow4(p) + 1u32).is_multiple_of(&BigUint::from(25u32));
    Ok(divisible == (p == 5))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma4Check {
    pub holds: bool,
    /// `T mod (4^p - 1)`.
    pub sum_mod_minus: BigUint,
    /// `2 sum_{t=1}^{p-1} (t/p) 4^t mod (4^p - 1)`.
    pub expected_mod_minus: BigUint,
    /// `T mod (4^p + 1)`, zero when the lemma holds.
    pub sum_mod_plus: BigUint,
}

/// The even/odd split of the Legendre sum used by the Legendre constructions:
/// `T = sum_{t=1}^{p-1} (2t/p) 4^{2t} + sum_{t != (p-1)/2} ((2t+1)/p) 4^{2t+1}`.
pub fn check_lemma4(p: OddPrime) -> Lemma4Check {
    let pv = p.get();
    let half = (pv - 1) / 2;
    let term = |idx: u64, exp: u64| {
        BigInt::from(legendre_symbol((idx % pv) as i64, p).value()) * BigInt::from(pow4(exp))
    };
    let even: BigInt = (1..pv).map(|t| term(2 * t, 2 * t)).sum();
    let odd: BigInt = (0..pv)
        .filter(|&t| t != half)
        .map(|t| term(2 * t + 1, 2 * t + 1))
        .sum();
    let total = even + odd;

    let minus = pow4(pv) - 1u32;
    let plus = pow4(pv) + 1u32;
    let sum_mod_minus = residue(&total, &minus);
    let expected_mod_minus = residue(&(legendre_sum(p) * 2), &minus);
    let sum_mod_plus = residue(&total, &plus);

    Lemma4Check {
        holds: sum_mod_minus == expected_mod_minus && sum_mod_plus.is_zero(),
        sum_mod_minus,
        expected_mod_minus,
        sum_mod_plus,
    }
}

/// Odd primes in `lo..=hi`.
pub fn odd_primes(lo: u64, hi: u64) -> impl Iterator<Item = OddPrime> {
    (lo.max(3)..=hi).filter_map(|n| OddPrime::new(n).ok())
}
