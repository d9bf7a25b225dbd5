//! Exact periodic autocorrelation over the Gaussian integers.
//!
//! With `zeta = i`, every term `i^{(s_j - s_{j+tau}) mod 4}` is one of
//! `1, i, -1, -i`, so counting the four differences gives the value exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::constructions::QuaternarySequence;
use crate::error::{Error, Result};

/// `re + im * i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

impl GaussianInt {
    pub const ZERO: GaussianInt = GaussianInt { re: 0, im: 0 };
    pub const ONE: GaussianInt = GaussianInt { re: 1, im: 0 };
    pub const I: GaussianInt = GaussianInt { re: 0, im: 1 };

    pub const fn new(re: i64, im: i64) -> Self {
        GaussianInt { re, im }
    }

    pub const fn real(re: i64) -> Self {
        GaussianInt { re, im: 0 }
    }

    /// `i^k`.
    pub fn i_pow(k: u32) -> Self {
        match k % 4 {
            0 => GaussianInt::ONE,
            1 => GaussianInt::I,
            2 => GaussianInt::new(-1, 0),
            _ => GaussianInt::new(0, -1),
        }
    }

    pub fn conj(self) -> Self {
        GaussianInt::new(self.re, -self.im)
    }

    pub fn is_real(self) -> bool {
        self.im == 0
    }

    pub fn norm(self) -> i64 {
        self.re * self.re + self.im * self.im
    }
}

impl Add for GaussianInt {
    type Output = GaussianInt;
    fn add(self, rhs: Self) -> Self {
        GaussianInt::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussianInt {
    type Output = GaussianInt;
    fn sub(self, rhs: Self) -> Self {
        GaussianInt::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Neg for GaussianInt {
    type Output = GaussianInt;
    fn neg(self) -> Self {
        GaussianInt::new(-self.re, -self.im)
    }
}

impl Mul for GaussianInt {
    type Output = GaussianInt;
    fn mul(self, rhs: Self) -> Self {
        GaussianInt::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl std::iter::Sum for GaussianInt {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(GaussianInt::ZERO, Add::add)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, im) => write!(f, "{im}i"),
            (re, im) if im < 0 => write!(f, "{re}-{}i", -im),
            (re, im) => write!(f, "{re}+{im}i"),
        }
    }
}

fn correlate(digits: &[u8], tau: usize) -> GaussianInt {
    let n = digits.len();
    let mut counts = [0i64; 4];
    for j in 0..n {
        let k = (4 + digits[j] - digits[(j + tau) % n]) % 4;
        counts[k as usize] += 1;
    }
    GaussianInt::new(counts[0] - counts[2], counts[1] - counts[3])
}

/// `C(tau) = sum_j i^{(s_j - s_{j+tau}) mod 4}`, indices mod `N`.
pub fn autocorrelation(s: &QuaternarySequence, tau: usize) -> Result<GaussianInt> {
    if tau >= s.period() {
        return Err(Error::ShiftOutOfRange {
            tau,
            period: s.period(),
        });
    }
    Ok(correlate(s.digits(), tau))
}

/// Autocorrelation at every shift together with the value multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutocorrProfile {
    pub values: Vec<GaussianInt>,
    pub distribution: BTreeMap<GaussianInt, usize>,
}

impl AutocorrProfile {
    pub fn period(&self) -> usize {
        self.values.len()
    }

    pub fn count(&self, value: GaussianInt) -> usize {
        self.distribution.get(&value).copied().unwrap_or(0)
    }

    /// `{value: count}` with real values as plain integers, for compact display.
    pub fn distribution_string(&self) -> String {
        let parts: Vec<String> = self
            .distribution
            .iter()
            .rev()
            .map(|(v, c)| format!("{v}: {c}"))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// Serialized as `{"period": N, "distribution": [{"re", "im", "count"}, ...]}`,
/// values ascending by `(re, im)`.
impl Serialize for AutocorrProfile {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            re: i64,
            im: i64,
            count: usize,
        }
        let entries: Vec<Entry> = self
            .distribution
            .iter()
            .map(|(v, &count)| Entry {
                re: v.re,
                im: v.im,
                count,
            })
            .collect();
        let mut st = serializer.serialize_struct("AutocorrProfile", 2)?;
        st.serialize_field("period", &self.period())?;
        st.serialize_field("distribution", &entries)?;
        st.end()
    }
}

pub fn full_profile(s: &QuaternarySequence) -> AutocorrProfile {
    let values: Vec<GaussianInt> = (0..s.period()).map(|tau| correlate(s.digits(), tau)).collect();
    let mut distribution = BTreeMap::new();
    for &v in &values {
        *distribution.entry(v).or_insert(0) += 1;
    }
    AutocorrProfile {
        values,
        distribution,
    }
}

/// Which way round the off-peak values of an ideal profile split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealShape {
    /// `0` occurs `N/2 - 1` times and `-2` occurs `N/2` times.
    MinusTwoHeavy,
    /// `0` occurs `N/2` times and `-2` occurs `N/2 - 1` times.
    ZeroHeavy,
}

/// Classifies an even-period profile whose off-peak values are all real and in
/// `{0, -2}`, split `N/2 - 1` / `N/2` in either order.
///
/// The sum of `C(tau)` over all shifts is `|sum_j i^{s_j}|^2`, so which
/// orientation occurs is fixed by the symbol counts: `MinusTwoHeavy` needs
/// `A_0 = A_2` and `A_1 = A_3`, `ZeroHeavy` needs that norm to be 2.
pub fn ideal_shape(profile: &AutocorrProfile) -> Option<IdealShape> {
    let n = profile.period();
    if n < 2 || n % 2 == 1 || profile.values[0] != GaussianInt::real(n as i64) {
        return None;
    }
    let zero = GaussianInt::ZERO;
    let minus_two = GaussianInt::real(-2);
    if profile.values[1..]
        .iter()
        .any(|&v| v != zero && v != minus_two)
    {
        return None;
    }
    let half = n / 2;
    match (profile.count(zero), profile.count(minus_two)) {
        (z, m) if z + 1 == half && m == half => Some(IdealShape::MinusTwoHeavy),
        (z, m) if z == half && m + 1 == half => Some(IdealShape::ZeroHeavy),
        _ => None,
    }
}

pub fn is_ideal_quaternary(profile: &AutocorrProfile) -> bool {
    ideal_shape(profile).is_some()
}

/// Symbol counts and the balance verdict `max |A_i - A_j| <= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Balance {
    pub balanced: bool,
    pub counts: Vec<usize>,
}

pub fn is_balanced(digits: &[u8], alphabet: u8) -> Result<Balance> {
    if alphabet < 2 {
        return Err(Error::InvalidParameter(format!(
            "alphabet size must be at least 2, got {alphabet}"
        )));
    }
    let mut counts = vec![0usize; alphabet as usize];
    for (position, &d) in digits.iter().enumerate() {
        if d >= alphabet {
            return Err(Error::DigitOutOfRange {
                digit: d,
                position,
                alphabet,
            });
        }
        counts[d as usize] += 1;
    }
    let max = *counts.iter().max().expect("alphabet is nonempty");
    let min = *counts.iter().min().expect("alphabet is nonempty");
    Ok(Balance {
        balanced: max - min <= 1,
        counts,
    })
}
