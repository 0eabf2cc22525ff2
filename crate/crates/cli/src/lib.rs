//! Library side of the `denum` binary: output rendering/parsing, the
//! bench harness, and the self-test suite, exposed so integration tests
//! can drive them directly.

pub mod bench;
pub mod output;
pub mod selftest;

use clap::ValueEnum;

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Backend {
    /// Exact rational arithmetic in cyclotomic quotient rings
    Exact,
    /// Complex double-precision roots of unity
    Float,
}
