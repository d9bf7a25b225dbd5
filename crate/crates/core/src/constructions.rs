//! Legendre sequences, the Gray mapping and the three quaternary families.
//!
//! * `g1`, period `2p` for `p = 1 (mod 4)`, from the Legendre pair.
//! * `g2`, period `2p` for `p = 3 (mod 4)`, from the Legendre pair.
//! * `g3`, period `2(2^n - 1)`, from any binary sequence of period `2^n - 1`
//!   with ideal autocorrelation, through the CRT split `t -> (t mod 2, t mod 2^n-1)`.
//!
//! Indices into `b` and `c` are always reduced mod `p`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2seq::{self, BinarySequence};
use crate::numtheory::{legendre_symbol, LegendreValue, OddPrime};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    G1,
    G2,
    G3,
    External,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::G1 => "g1",
            Family::G2 => "g2",
            Family::G3 => "g3",
            Family::External => "external",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "g1" => Ok(Family::G1),
            "g2" => Ok(Family::G2),
            "g3" => Ok(Family::G3),
            "external" => Ok(Family::External),
            other => Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        }
    }
}

/// One period of a sequence over `Z/(4)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuaternarySequence {
    digits: Vec<u8>,
    family: Family,
}

impl QuaternarySequence {
    pub fn new(digits: Vec<u8>, family: Family) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::InvalidPeriod {
                period: 0,
                reason: "a sequence needs at least one element",
            });
        }
        if let Some((position, &digit)) = digits.iter().enumerate().find(|(_, &d)| d > 3) {
            return Err(Error::DigitOutOfRange {
                digit,
                position,
                alphabet: 4,
            });
        }
        Ok(QuaternarySequence { digits, family })
    }

    pub fn external(digits: Vec<u8>) -> Result<Self> {
        QuaternarySequence::new(digits, Family::External)
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn period(&self) -> usize {
        self.digits.len()
    }

    pub fn family(&self) -> Family {
        self.family
    }
}

/// Gray mapping `(a, e) -> {0, 1, 2, 3}`:
/// `(0,0) -> 0`, `(0,1) -> 1`, `(1,1) -> 2`, `(1,0) -> 3`.
pub fn gray_map(a: u8, e: u8) -> Result<u8> {
    match (a, e) {
        (0, 0) => Ok(0),
        (0, 1) => Ok(1),
        (1, 1) => Ok(2),
        (1, 0) => Ok(3),
        _ => Err(Error::InvalidParameter(format!(
            "gray map inputs must be bits, got ({a}, {e})"
        ))),
    }
}

fn gray(a: u8, e: u8) -> u8 {
    gray_map(a, e).expect("construction inputs are bits")
}

/// The two period-`p` Legendre sequences; they differ only at index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegendrePair {
    pub b: BinarySequence,
    pub c: BinarySequence,
}

pub fn legendre_sequences(p: OddPrime) -> LegendrePair {
    let b: Vec<u8> = (0..p.get())
        .map(|t| match legendre_symbol(t as i64, p) {
            LegendreValue::NonResidue => 1,
            _ => 0,
        })
        .collect();
    let mut c = b.clone();
    c[0] = 1;
    LegendrePair {
        b: BinarySequence::new(b).expect("bits"),
        c: BinarySequence::new(c).expect("bits"),
    }
}

fn require_class(p: OddPrime, expected: u64) -> Result<()> {
    if p.class_mod4() == expected {
        Ok(())
    } else {
        Err(Error::ResidueClass {
            p: p.get(),
            expected,
        })
    }
}

/// `g1_t = phi(b_t, b_t)` at even `t`, `phi(c_t, 1 - c_t)` at odd `t`.
pub fn build_g1(p: OddPrime) -> Result<QuaternarySequence> {
    require_class(p, 1)?;
    let LegendrePair { b, c } = legendre_sequences(p);
    let digits = (0..2 * p.get() as usize)
        .map(|t| {
            if t % 2 == 0 {
                gray(b.at(t), b.at(t))
            } else {
                gray(c.at(t), 1 - c.at(t))
            }
        })
        .collect();
    QuaternarySequence::new(digits, Family::G1)
}

/// `g2_t = phi(b_t, c_t)` at even `t`, `phi(b_t, 1 - c_t)` at odd `t`.
pub fn build_g2(p: OddPrime) -> Result<QuaternarySequence> {
    require_class(p, 3)?;
    let LegendrePair { b, c } = legendre_sequences(p);
    let digits = (0..2 * p.get() as usize)
        .map(|t| {
            let e = if t % 2 == 0 { c.at(t) } else { 1 - c.at(t) };
            gray(b.at(t), e)
        })
        .collect();
    QuaternarySequence::new(digits, Family::G2)
}

/// `h -> (h mod 2, h mod (2^n - 1))` on `0 <= h < 2(2^n - 1)`.
pub fn crt_index(h: u64, n: u32) -> Result<(u8, u64)> {
    if n == 0 || n > 62 {
        return Err(Error::InvalidParameter(format!("degree {n} outside 1..=62")));
    }
    let m = (1u64 << n) - 1;
    if h >= 2 * m {
        return Err(Error::IndexOutOfRange {
            index: h,
            bound: 2 * m,
        });
    }
    Ok(((h % 2) as u8, h % m))
}

/// Degree `n` with `period = 2^n - 1`, if any.
pub fn degree_of_period(period: usize) -> Option<u32> {
    let m = period.checked_add(1)?;
    m.is_power_of_two().then(|| m.trailing_zeros())
}

/// Builds `g3` from a binary sequence of period `2^n - 1`, `n >= 2`, with
/// ideal autocorrelation. The hypothesis is checked, not assumed.
pub fn build_g3(s: &BinarySequence) -> Result<QuaternarySequence> {
    let n = match degree_of_period(s.period()) {
        Some(n) if n >= 2 => n,
        _ => {
            return Err(Error::InvalidPeriod {
                period: s.period(),
                reason: "expected 2^n - 1 with n >= 2",
            })
        }
    };
    let w = gf2seq::weight(s);
    if w != 1 << (n - 1) {
        return Err(Error::WrongWeight {
            weight: w,
            expected: 1 << (n - 1),
        });
    }
    if let Some((tau, value)) = gf2seq::first_nonideal_shift(s) {
        return Err(Error::NotIdealAutocorrelation { tau, value });
    }

    let len = 2 * s.period() as u64;
    let digits = (0..len)
        .map(|t| {
            let (eps, r) = crt_index(t, n)?;
            let in_d0 = s.at(r as usize);
            let u = in_d0;
            let v = if eps == 0 { in_d0 } else { 1 - in_d0 };
            gray_map(u, v)
        })
        .collect::<Result<Vec<_>>>()?;
    QuaternarySequence::new(digits, Family::G3)
}

/// `g3` from the first primitive polynomial of degree `n`.
pub fn build_g3_degree(n: u32) -> Result<QuaternarySequence> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("g3 needs n >= 2, got {n}")));
    }
    let poly = gf2seq::first_primitive_poly(n)?;
    build_g3(&gf2seq::msequence(&poly)?)
}

/// Builds a family member from its single parameter (`p` for g1/g2, `n` for g3).
pub fn build(family: Family, param: u64) -> Result<QuaternarySequence> {
    match family {
        Family::G1 => build_g1(OddPrime::new(param)?),
        Family::G2 => build_g2(OddPrime::new(param)?),
        Family::G3 => {
            let n = u32::try_from(param)
                .map_err(|_| Error::InvalidParameter(format!("n = {param} too large")))?;
            build_g3_degree(n)
        }
        Family::External => Err(Error::InvalidParameter(
            "external sequences are read from files, not built".into(),
        )),
    }
}
