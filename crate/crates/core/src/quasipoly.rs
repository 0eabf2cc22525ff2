//! Quasi-polynomials: period f plus component polynomials [P_1, ..., P_f].
//!
//! The value at t is P_i(t) where t = i (mod f), with t = 0 (mod f)
//! served by P_f. Addition lifts both operands to the lcm period.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::{rat_u64, Rat};

/// Hard cap on materialized periods; lcm's of divisor sets grow without
/// bound and a combined quasi-polynomial beyond this is not representable
/// component-by-component in memory.
pub const MAX_PERIOD: u64 = 1 << 22;

/// A quasi-polynomial of some period f with exact rational components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    period: u64,
    components: Vec<Poly>,
}

impl QuasiPolynomial {
    /// Build from components [P_1, ..., P_f]; their count is the period.
    pub fn new(components: Vec<Poly>) -> Self {
        assert!(!components.is_empty(), "period must be at least 1");
        QuasiPolynomial { period: components.len() as u64, components }
    }

    /// Period-1 constant.
    pub fn constant(c: Rat) -> Self {
        QuasiPolynomial::new(alloc::vec![Poly::constant(c)])
    }

    pub fn zero() -> Self {
        QuasiPolynomial::new(alloc::vec![Poly::zero()])
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    /// Component P_i for 1 <= i <= period.
    pub fn component(&self, i: u64) -> &Poly {
        assert!(1 <= i && i <= self.period, "component index out of range");
        &self.components[(i - 1) as usize]
    }

    /// All components, P_1 first.
    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    /// Largest component degree, or None if all components vanish.
    pub fn degree(&self) -> Option<usize> {
        self.components.iter().filter_map(Poly::degree).max()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Poly::is_zero)
    }

    /// Index (0-based) of the component serving t.
    fn slot(&self, t: u64) -> usize {
        ((t % self.period + self.period - 1) % self.period) as usize
    }

    /// Exact value at a nonnegative integer point.
    pub fn eval(&self, t: u64) -> Rat {
        self.components[self.slot(t)].eval(&rat_u64(t))
    }

    /// Re-express with a period that is a multiple of the current one;
    /// lifted component j equals original component ((j-1) mod f) + 1.
    pub fn lift(&self, new_period: u64) -> Result<QuasiPolynomial> {
        if new_period == 0 || !new_period.is_multiple_of(self.period) {
            return Err(Error::InvalidModulus { f: new_period });
        }
        if new_period > MAX_PERIOD {
            return Err(Error::PeriodTooLarge);
        }
        let f = self.period as usize;
        let components = (0..new_period as usize).map(|j| self.components[j % f].clone()).collect();
        Ok(QuasiPolynomial { period: new_period, components })
    }

    /// Componentwise sum after lifting both operands to lcm(periods).
    pub fn add(&self, other: &QuasiPolynomial) -> Result<QuasiPolynomial> {
        let period = self.period.lcm(&other.period);
        if period > MAX_PERIOD {
            return Err(Error::PeriodTooLarge);
        }
        let a = self.lift(period)?;
        let b = other.lift(period)?;
        let components = a
            .components
            .iter()
            .zip(&b.components)
            .map(|(p, q)| p + q)
            .collect();
        Ok(QuasiPolynomial { period, components })
    }
}

/// Sum a family of quasi-polynomials into one of period lcm over all.
pub fn qp_combine<'a, I>(waves: I) -> Result<QuasiPolynomial>
where
    I: IntoIterator<Item = &'a QuasiPolynomial>,
{
    let mut acc = QuasiPolynomial::zero();
    for w in waves {
        acc = acc.add(w)?;
    }
    Ok(acc)
}

impl fmt::Display for QuasiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", p.display("t"))?;
        }
        write!(f, "]")
    }
}
