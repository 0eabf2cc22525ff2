//! Exact rational scalars and small integer helpers.
//!
//! `Rat` is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator; all arithmetic on it is exact.

use alloc::vec::Vec;
use num_bigint::{BigInt, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact arbitrary-precision rational number.
pub type Rat = num_rational::BigRational;

/// Build n/d from machine integers. Panics if d == 0.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer n as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The nonnegative integer n as a rational.
pub fn rat_u64(n: u64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// b^k as a rational, exact for any magnitude.
pub fn rat_pow_i64(b: i64, k: usize) -> Rat {
    Rat::from_integer(num_traits::pow(BigInt::from(b), k))
}

/// Convert to the nearest f64, tolerating numerators/denominators far
/// beyond the f64 exponent range. Overflow maps to +-inf, underflow to 0.
pub fn rat_to_f64(r: &Rat) -> f64 {
    let num = r.numer();
    let den = r.denom();
    if num.is_zero() {
        return 0.0;
    }
    // Shift both parts below 2^512 so the individual conversions cannot
    // overflow, then restore the exponent difference with scalbn.
    let ns = num.bits().saturating_sub(512);
    let ds = den.bits().saturating_sub(512);
    let n = (num.magnitude() >> ns).to_f64().unwrap_or(f64::INFINITY);
    let d = (den.magnitude() >> ds).to_f64().unwrap_or(f64::INFINITY);
    let exp = (ns as i128 - ds as i128).clamp(-100_000, 100_000) as i32;
    let v = libm::scalbn(n / d, exp);
    if num.sign() == Sign::Minus {
        -v
    } else {
        v
    }
}

/// Bernoulli numbers B_0 .. B_{n-1} in the B_1 = -1/2 convention, via the
/// recurrence sum_{j<=m} C(m+1, j) B_j = 0.
pub fn bernoulli(n: usize) -> Vec<Rat> {
    let mut b: Vec<Rat> = Vec::with_capacity(n);
    if n == 0 {
        return b;
    }
    b.push(Rat::from_integer(BigInt::from(1)));
    for m in 1..n {
        // binom tracks C(m+1, j) incrementally across the inner sum
        let mut binom = BigInt::from(1);
        let mut sum = Rat::zero();
        for (j, bj) in b.iter().enumerate() {
            sum += bj * Rat::from_integer(binom.clone());
            binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-sum / rat_u64(m as u64 + 1));
    }
    b
}

/// Absolute value of a rational as f64 distance from another.
pub fn rat_abs_diff_f64(a: &Rat, b: &Rat) -> f64 {
    rat_to_f64(&(a - b).abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip_is_exact() {
        let a = rat(355, 113);
        let b = rat(-7, 12);
        assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(20), BigInt::from(2_432_902_008_176_640_000u64));
    }

    #[test]
    fn bernoulli_prefix() {
        let b = bernoulli(9);
        assert_eq!(b[0], rat_int(1));
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[3], rat_int(0));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[5], rat_int(0));
        assert_eq!(b[6], rat(1, 42));
        assert_eq!(b[7], rat_int(0));
        assert_eq!(b[8], rat(-1, 30));
    }

    #[test]
    fn rat_to_f64_ordinary_and_extreme() {
        assert_eq!(rat_to_f64(&rat(1, 2)), 0.5);
        assert_eq!(rat_to_f64(&rat(-3, 4)), -0.75);
        assert_eq!(rat_to_f64(&Rat::zero()), 0.0);
        // 10^400 / 10^398 = 100 even though both parts overflow f64
        let big = num_traits::pow(BigInt::from(10), 400);
        let small = num_traits::pow(BigInt::from(10), 398);
        let r = Rat::new(big.clone(), small);
        assert!((rat_to_f64(&r) - 100.0).abs() < 1e-9);
        // true overflow saturates instead of panicking
        assert_eq!(rat_to_f64(&Rat::from_integer(big)), f64::INFINITY);
    }
}
