//! Balanced quaternary sequences with ideal autocorrelation and their
//! 4-adic complexity.
//!
//! The crate builds the three Gray-mapped families (two from Legendre
//! sequences of period `p`, one from binary ideal-autocorrelation sequences
//! of period `2^n - 1`), analyzes them exactly, and checks the closed-form
//! gcd values that determine their 4-adic complexity.

pub mod adic;
pub mod cli;
pub mod constructions;
pub mod correlation;
pub mod error;
pub mod gf2seq;
pub mod numtheory;
pub mod seqfile;

pub use adic::{complexity_report, gcd_split, predict_gcd, s4_value, verify_theorem, AdicReport};
pub use constructions::{build_g1, build_g2, build_g3, gray_map, Family, QuaternarySequence};
pub use correlation::{autocorrelation, full_profile, is_balanced, is_ideal_quaternary, GaussianInt};
pub use error::{Error, Result};
pub use gf2seq::{BinarySequence, Gf2Poly};
pub use numtheory::OddPrime;
