//! Error type shared by all modules.

use core::fmt;

/// Errors reported by the exact and floating wave pipelines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Requested the cyclotomic polynomial of modulus 0.
    ZeroModulus,
    /// Polynomial division by the zero polynomial.
    DivisionByZero,
    /// 1 - zeta^a is zero (f divides a) and has no inverse.
    NotInvertible { f: u64, a: u64 },
    /// Binary series operation on series of different truncation orders.
    OrderMismatch { left: usize, right: usize },
    /// Series logarithm requires constant term 1.
    ConstantTermNotOne,
    /// Series exponential requires constant term 0.
    ConstantTermNotZero,
    /// A scaling multiset contains 0.
    ZeroScale,
    /// Input sequence is empty.
    EmptySequence,
    /// Input sequence contains 0.
    ZeroEntry,
    /// Input sequence contains a repeated entry.
    DuplicateEntries,
    /// Input sequence has gcd > 1.
    GcdNotOne,
    /// Wave modulus divides no entry of the sequence.
    NoDivisibleEntry { f: u64 },
    /// Wave modulus outside the operation's domain (wave_f needs f >= 2).
    InvalidModulus { f: u64 },
    /// A combined quasi-polynomial period is too large to materialize.
    PeriodTooLarge,
    /// A floating evaluation produced a non-finite value.
    NonFiniteValue,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroModulus => write!(f, "cyclotomic modulus must be positive"),
            Error::DivisionByZero => write!(f, "division by the zero polynomial"),
            Error::NotInvertible { f: m, a } => {
                write!(f, "1 - zeta^{a} is not invertible modulo Phi_{m} ({m} divides {a})")
            }
            Error::OrderMismatch { left, right } => {
                write!(f, "series order mismatch: {left} vs {right}")
            }
            Error::ConstantTermNotOne => write!(f, "series logarithm needs constant term 1"),
            Error::ConstantTermNotZero => write!(f, "series exponential needs constant term 0"),
            Error::ZeroScale => write!(f, "scaling multiset entries must be nonzero"),
            Error::EmptySequence => write!(f, "sequence must be nonempty"),
            Error::ZeroEntry => write!(f, "sequence entries must be positive"),
            Error::DuplicateEntries => write!(f, "sequence entries must be distinct"),
            Error::GcdNotOne => write!(f, "gcd(a) must be 1"),
            Error::NoDivisibleEntry { f: m } => {
                write!(f, "{m} divides no entry of the sequence")
            }
            Error::InvalidModulus { f: m } => write!(f, "modulus {m} outside operation domain"),
            Error::PeriodTooLarge => write!(f, "combined period too large to materialize"),
            Error::NonFiniteValue => write!(f, "floating evaluation overflowed"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
