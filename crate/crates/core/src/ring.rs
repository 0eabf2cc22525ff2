//! Coefficient rings for truncated power series.
//!
//! Ring contexts carry the structure (a quotient modulus, nothing for Q or
//! C) while elements stay plain data, so series code is generic over the
//! ring without elements dragging context around.

use core::fmt::Debug;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::rat::{rat_to_f64, rat_u64, Rat};

/// A commutative ring admitting rational scalars and exact (or floating)
/// division by nonzero integers.
#[allow(clippy::wrong_self_convention)]
pub trait Ring {
    type Elem: Clone + PartialEq + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Embed a rational scalar.
    fn from_rat(&self, r: &Rat) -> Self::Elem;
    /// Multiply by a rational scalar.
    fn scale_rat(&self, a: &Self::Elem, r: &Rat) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Divide by a positive integer.
    fn div_int(&self, a: &Self::Elem, k: u64) -> Self::Elem {
        self.scale_rat(a, &Rat::new(1.into(), k.into()))
    }

    /// The convolution term sum_{j = j_min..=k} a[j] * b[k - j], skipping
    /// out-of-range indices. Rings with expensive reduction override this
    /// to normalize once instead of per product.
    #[allow(clippy::needless_range_loop)]
    fn conv_term(&self, a: &[Self::Elem], b: &[Self::Elem], k: usize, j_min: usize) -> Self::Elem {
        let mut acc = self.zero();
        for j in j_min..=k.min(a.len().saturating_sub(1)) {
            let i = k - j;
            if i >= b.len() || self.is_zero(&a[j]) || self.is_zero(&b[i]) {
                continue;
            }
            acc = self.add(&acc, &self.mul(&a[j], &b[i]));
        }
        acc
    }
}

/// The rationals.
#[derive(Clone, Copy, Debug, Default)]
pub struct RationalField;

impl Ring for RationalField {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn from_rat(&self, r: &Rat) -> Rat {
        r.clone()
    }
    fn scale_rat(&self, a: &Rat, r: &Rat) -> Rat {
        a * r
    }
    fn is_zero(&self, a: &Rat) -> bool {
        Zero::is_zero(a)
    }
    #[allow(clippy::needless_range_loop)]
    fn conv_term(&self, a: &[Rat], b: &[Rat], k: usize, j_min: usize) -> Rat {
        let mut acc = Rat::zero();
        for j in j_min..=k.min(a.len().saturating_sub(1)) {
            let i = k - j;
            if i < b.len() {
                acc += &a[j] * &b[i];
            }
        }
        acc
    }
}

/// Double-precision complex numbers.
#[derive(Clone, Copy, Debug, Default)]
pub struct ComplexField;

impl Ring for ComplexField {
    type Elem = Complex64;

    fn zero(&self) -> Complex64 {
        Complex64::new(0.0, 0.0)
    }
    fn one(&self) -> Complex64 {
        Complex64::new(1.0, 0.0)
    }
    fn add(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a + b
    }
    fn sub(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a - b
    }
    fn neg(&self, a: &Complex64) -> Complex64 {
        -a
    }
    fn mul(&self, a: &Complex64, b: &Complex64) -> Complex64 {
        a * b
    }
    fn from_rat(&self, r: &Rat) -> Complex64 {
        Complex64::new(rat_to_f64(r), 0.0)
    }
    fn scale_rat(&self, a: &Complex64, r: &Rat) -> Complex64 {
        a * rat_to_f64(r)
    }
    fn is_zero(&self, a: &Complex64) -> bool {
        a.re == 0.0 && a.im == 0.0
    }
    fn div_int(&self, a: &Complex64, k: u64) -> Complex64 {
        a / k as f64
    }
}

/// Raise a ring element to a nonnegative power by repeated squaring.
pub fn ring_pow<R: Ring>(ring: &R, base: &R::Elem, mut exp: u64) -> R::Elem {
    let mut acc = ring.one();
    let mut b = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ring.mul(&acc, &b);
        }
        exp >>= 1;
        if exp > 0 {
            b = ring.mul(&b, &b);
        }
    }
    acc
}

/// k as a ring element.
pub fn ring_int<R: Ring>(ring: &R, k: u64) -> R::Elem {
    ring.from_rat(&rat_u64(k))
}
