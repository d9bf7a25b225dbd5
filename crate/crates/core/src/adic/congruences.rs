//! Intermediate identities from the gcd derivations, checked numerically.
//!
//! Each check reduces `S(4)` of the constructed sequence straight from its
//! digits and compares it with a closed form built only from Legendre symbols
//! (g1, g2) or from the underlying binary sequence (g3).

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use super::s4_residue;
use crate::constructions::{build_g1, build_g2, build_g3};
use crate::error::Result;
use crate::gf2seq::BinarySequence;
use crate::numtheory::{legendre_sum, pow4, residue, OddPrime};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceCheck {
    pub holds: bool,
    /// `S(4) mod (4^p - 1)` and the closed form reduced the same way.
    pub minus: (BigUint, BigUint),
    /// `S(4) mod (4^p + 1)` and the closed form reduced the same way.
    pub plus: (BigUint, BigUint),
}

/// `sum_{t=0}^{p-1} 4^{2t}`.
fn even_power_sum(p: u64) -> BigInt {
    (0..p).map(|t| BigInt::from(pow4(2 * t))).sum()
}

fn compare(digits: &[u8], p: u64, closed_minus: BigInt, closed_plus: BigInt) -> CongruenceCheck {
    let m_minus = pow4(p) - 1u32;
    let m_plus = pow4(p) + 1u32;
    let minus = (s4_residue(digits, &m_minus), residue(&closed_minus, &m_minus));
    let plus = (s4_residue(digits, &m_plus), residue(&closed_plus, &m_plus));
    CongruenceCheck {
        holds: minus.0 == minus.1 && plus.0 == plus.1,
        minus,
        plus,
    }
}

/// For `p = 1 (mod 4)`:
/// `S(4) = 9A - 2L (mod 4^p - 1)` and `S(4) = 9A - 2 (mod 4^p + 1)`,
/// where `A = sum 4^{2t}` and `L = sum (t/p) 4^t`.
pub fn check_g1_congruence(p: OddPrime) -> Result<CongruenceCheck> {
    let seq = build_g1(p)?;
    let a9 = even_power_sum(p.get()) * 9;
    let l2 = legendre_sum(p) * 2;
    Ok(compare(seq.digits(), p.get(), &a9 - l2, a9 - 2))
}

/// For `p = 3 (mod 4)`:
/// `S(4) = 9A - 2L - 2 (mod 4^p - 1)` and `S(4) = 9A + 2 (mod 4^p + 1)`.
pub fn check_g2_congruence(p: OddPrime) -> Result<CongruenceCheck> {
    let seq = build_g2(p)?;
    let a9 = even_power_sum(p.get()) * 9;
    let l2 = legendre_sum(p) * 2;
    Ok(compare(seq.digits(), p.get(), &a9 - l2 - 2, a9 + 2))
}

/// Exact identity for `g3` with `M = 2^n - 1`:
/// `S(4) = 4 ((4^M + 1)/5) ((4^M - 1)/3) + 2 (1 + 4^M) sum_{t<M} s_t 4^t`.
pub fn check_g3_identity(s: &BinarySequence) -> Result<bool> {
    let seq = build_g3(s)?;
    let m = s.period() as u64;
    let big = pow4(m);
    let weighted: BigUint = s
        .bits()
        .iter()
        .enumerate()
        .filter(|(_, &b)| b == 1)
        .fold(BigUint::zero(), |acc, (t, _)| acc + pow4(t as u64));
    let closed = ((&big + 1u32) / 5u32) * ((&big - 1u32) / 3u32) * 4u32
        + weighted * (&big + 1u32) * 2u32;
    Ok(super::s4_value(seq.digits()) == closed)
}
