//! Independent ground truth for the wave pipelines.
//!
//! [`dp_count`] realizes the generating function 1/prod(1 - q^{a_i}) by
//! convolution: the classic unbounded-knapsack table, with big-integer
//! counts so the oracle itself can never overflow. [`primroot_sum_check`]
//! evaluates both sides of the primitive-root summation identity with
//! complex floats.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::cyclotomic::CycCtx;
use crate::error::{Error, Result};
use crate::ring::ComplexField;

/// Exact counts d(0; a) .. d(T; a).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpTable {
    counts: Vec<BigUint>,
}

impl DpTable {
    /// d(t; a) for 0 <= t <= T.
    pub fn count(&self, t: u64) -> &BigUint {
        &self.counts[t as usize]
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn max_t(&self) -> u64 {
        self.counts.len() as u64 - 1
    }
}

/// Count nonnegative solutions of sum a_i x_i = t for every t up to t_max,
/// processing one part at a time: counts[t] += counts[t - a].
pub fn dp_count(seq: &[u64], t_max: u64) -> DpTable {
    assert!(seq.iter().all(|&a| a > 0), "parts must be positive");
    let len = t_max as usize + 1;
    let mut counts = vec![BigUint::zero(); len];
    counts[0] = BigUint::one();
    for &a in seq {
        let a = a as usize;
        for t in a..len {
            let (lo, hi) = counts.split_at_mut(t);
            hi[0] += &lo[t - a];
        }
    }
    DpTable { counts }
}

/// Evaluate both sides of
/// sum_{zeta primitive} F(zeta) = (1/f) sum_{zeta^f = 1} zeta F(zeta)
/// cofactor(zeta) Phi_f'(zeta) with complex floats and return (lhs, rhs).
pub fn primroot_sum_check<F>(f: u64, func: F) -> Result<(Complex64, Complex64)>
where
    F: Fn(Complex64) -> Complex64,
{
    let ctx = CycCtx::new(f)?;
    let field = ComplexField;
    let tau = 2.0 * core::f64::consts::PI / f as f64;
    let mut lhs = Complex64::new(0.0, 0.0);
    let mut rhs = Complex64::new(0.0, 0.0);
    for k in 0..f {
        let th = tau * k as f64;
        let zeta = Complex64::new(libm::cos(th), libm::sin(th));
        let fv = func(zeta);
        if !fv.re.is_finite() || !fv.im.is_finite() {
            return Err(Error::NonFiniteValue);
        }
        // the exponents of the primitive roots are 1 <= j <= f with
        // gcd(j, f) = 1; index k = 0 plays the role of j = f
        let is_primitive = if k == 0 { f == 1 } else { k.gcd(&f) == 1 };
        if is_primitive {
            lhs += fv;
        }
        let cof = ctx.cofactor().eval_in(&field, &zeta);
        let deriv = ctx.phi_deriv().eval_in(&field, &zeta);
        rhs += zeta * fv * cof * deriv;
    }
    rhs /= f as f64;
    if !rhs.re.is_finite() || !rhs.im.is_finite() {
        return Err(Error::NonFiniteValue);
    }
    Ok((lhs, rhs))
}
