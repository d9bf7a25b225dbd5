//! GF(2) polynomials, m-sequences and the binary ideal-autocorrelation test.
//!
//! LFSRs run in Fibonacci form: `x^n + sum c_i x^i` drives
//! `s_{t+n} = sum c_i s_{t+i}` from the initial fill `(0, ..., 0, 1)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest degree accepted by [`Gf2Poly`]; keeps `2^n - 1` cheap to factor.
pub const MAX_DEGREE: u32 = 32;

/// Monic polynomial over GF(2); bit `i` of the mask is the coefficient of `x^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Gf2Poly {
    mask: u64,
}

impl Gf2Poly {
    pub fn from_mask(mask: u64) -> Result<Self> {
        if mask < 2 {
            return Err(Error::InvalidPoly(format!(
                "mask {mask:#b} has degree below 1"
            )));
        }
        let poly = Gf2Poly { mask };
        if poly.degree() > MAX_DEGREE {
            return Err(Error::InvalidPoly(format!(
                "degree {} exceeds {MAX_DEGREE}",
                poly.degree()
            )));
        }
        Ok(poly)
    }

    /// Builds a polynomial from its exponents, e.g. `[4, 1, 0]` for `x^4+x+1`.
    pub fn from_exponents(exponents: &[u32]) -> Result<Self> {
        let mut mask = 0u64;
        for &e in exponents {
            if e > MAX_DEGREE {
                return Err(Error::InvalidPoly(format!(
                    "exponent {e} exceeds {MAX_DEGREE}"
                )));
            }
            if mask & (1 << e) != 0 {
                return Err(Error::InvalidPoly(format!("repeated exponent {e}")));
            }
            mask |= 1 << e;
        }
        Gf2Poly::from_mask(mask)
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn degree(&self) -> u32 {
        63 - self.mask.leading_zeros()
    }

    pub fn has_constant_term(&self) -> bool {
        self.mask & 1 == 1
    }

    /// Exponents in descending order.
    pub fn exponents(&self) -> Vec<u32> {
        (0..=self.degree())
            .rev()
            .filter(|&e| self.mask >> e & 1 == 1)
            .collect()
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exponents().iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Gf2Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let exponents = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPoly(format!("bad exponent {part:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Gf2Poly::from_exponents(&exponents)
    }
}

/// Multiply `a * b mod poly`, all of degree below `n`.
fn mul_mod(mut a: u64, mut b: u64, poly: u64, n: u32) -> u64 {
    let top = 1u64 << n;
    let mut acc = 0u64;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & top != 0 {
            a ^= poly;
        }
    }
    acc
}

fn x_pow_mod(mut exp: u64, poly: u64, n: u32) -> u64 {
    let mut base = if n == 1 { 2 ^ poly } else { 2 };
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, poly, n);
        }
        base = mul_mod(base, base, poly, n);
        exp >>= 1;
    }
    acc
}

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// A polynomial is primitive when `x` has multiplicative order `2^n - 1`
/// modulo it. Reaching that order forces the quotient ring to be a field, so
/// irreducibility comes for free.
pub fn is_primitive_poly(poly: &Gf2Poly) -> Result<bool> {
    if !poly.has_constant_term() {
        return Err(Error::InvalidPoly(format!(
            "{poly} has zero constant term"
        )));
    }
    let n = poly.degree();
    let order = (1u64 << n) - 1;
    if x_pow_mod(order, poly.mask, n) != 1 {
        return Ok(false);
    }
    Ok(prime_factors(order)
        .into_iter()
        .all(|q| x_pow_mod(order / q, poly.mask, n) != 1))
}

/// First primitive polynomial of degree `n` in ascending mask order.
pub fn first_primitive_poly(n: u32) -> Result<Gf2Poly> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::InvalidParameter(format!(
            "degree {n} outside 1..={MAX_DEGREE}"
        )));
    }
    let lo = (1u64 << n) | 1;
    let hi = 1u64 << (n + 1);
    for mask in (lo..hi).step_by(2) {
        let poly = Gf2Poly::from_mask(mask)?;
        if is_primitive_poly(&poly)? {
            return Ok(poly);
        }
    }
    unreachable!("a primitive polynomial exists for every degree")
}

/// One period of a binary sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinarySequence {
    bits: Vec<u8>,
}

impl BinarySequence {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::InvalidPeriod {
                period: 0,
                reason: "a sequence needs at least one element",
            });
        }
        if let Some((position, &digit)) = bits.iter().enumerate().find(|(_, &b)| b > 1) {
            return Err(Error::DigitOutOfRange {
                digit,
                position,
                alphabet: 2,
            });
        }
        Ok(BinarySequence { bits })
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn period(&self) -> usize {
        self.bits.len()
    }

    /// Bit at `t`, read periodically.
    pub fn at(&self, t: usize) -> u8 {
        self.bits[t % self.bits.len()]
    }

    /// Positions of the 1-bits in one period.
    pub fn characteristic_set(&self) -> Vec<usize> {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b == 1)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn rotate_left(&self, k: usize) -> BinarySequence {
        let mut bits = self.bits.clone();
        let len = bits.len();
        bits.rotate_left(k % len);
        BinarySequence { bits }
    }
}

/// One period of the Fibonacci LFSR output for a primitive polynomial.
pub fn msequence(poly: &Gf2Poly) -> Result<BinarySequence> {
    let n = poly.degree() as usize;
    if n < 2 {
        return Err(Error::InvalidPoly(format!("{poly}: degree must be at least 2")));
    }
    if !is_primitive_poly(poly)? {
        return Err(Error::NotPrimitive(poly.to_string()));
    }
    let period = (1usize << n) - 1;
    let taps: Vec<usize> = (0..n).filter(|&i| poly.mask >> i & 1 == 1).collect();

    let mut bits = vec![0u8; period + n];
    bits[n - 1] = 1;
    for t in 0..period {
        bits[t + n] = taps.iter().fold(0, |acc, &i| acc ^ bits[t + i]);
    }
    bits.truncate(period);
    BinarySequence::new(bits)
}

/// Number of ones in one period.
pub fn weight(s: &BinarySequence) -> usize {
    s.bits.iter().filter(|&&b| b == 1).count()
}

/// `sum_i (-1)^{s_i + s_{i+tau}}` over one period.
pub fn binary_autocorrelation(s: &BinarySequence, tau: usize) -> i64 {
    let n = s.period();
    (0..n)
        .map(|i| if s.bits[i] == s.bits[(i + tau) % n] { 1 } else { -1 })
        .sum()
}

/// First shift whose autocorrelation differs from -1, with its value.
pub fn first_nonideal_shift(s: &BinarySequence) -> Option<(usize, i64)> {
    (1..s.period())
        .map(|tau| (tau, binary_autocorrelation(s, tau)))
        .find(|&(_, c)| c != -1)
}

pub fn is_ideal_autocorrelation_binary(s: &BinarySequence) -> bool {
    first_nonideal_shift(s).is_none()
}
