//! The log-exponential pipeline for generalized Todd coefficient sequences.
//!
//! Computes the truncation of F(s) = e^{as} prod_{b in B0} g(bs)
//! prod_i prod_{b in B_i} g(bs, y_i), where g(s) = s/(e^s - 1) and
//! g(s, y) = 1/(1 - y(e^s - 1)), by summing the logarithms of the factors
//! and exponentiating once.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rat::Rat;
use crate::ring::Ring;
use crate::series::{
    h_series, h_y_series, ts_add, ts_exp, ts_lift, ts_sum_scaled, ts_zero, TruncSeries,
};

/// Input to [`gtodd_sequence`]: the exponential shift a, the plain scale
/// multiset B0, and (B_i, y_i) pairs with y_i in the coefficient ring.
#[derive(Clone, Debug)]
pub struct GtdSpec<C> {
    pub shift: Rat,
    pub plain: Vec<i64>,
    pub mixed: Vec<(Vec<i64>, C)>,
    pub order: usize,
}

impl<C> GtdSpec<C> {
    /// Plain product prod g(bs) at the given order, no shift, no y terms.
    pub fn plain_product(plain: Vec<i64>, order: usize) -> Self {
        GtdSpec { shift: Rat::zero(), plain, mixed: Vec::new(), order }
    }

    fn validate(&self) -> Result<()> {
        if self.plain.contains(&0)
            || self.mixed.iter().any(|(bs, _)| bs.contains(&0))
        {
            return Err(Error::ZeroScale);
        }
        Ok(())
    }
}

/// The coefficient sequence (gtd_0, ..., gtd_{d-1}) of F(s) mod s^d.
///
/// ln F = as + sum_b h(bs) + sum_i sum_b h(bs, y_i) is assembled termwise
/// and exponentiated once. The plain part is summed exactly over the
/// rationals and embedded into the ring afterwards; equal y values are
/// grouped so each distinct y costs one h(s, y) expansion.
pub fn gtodd_sequence<R: Ring>(ring: &R, spec: &GtdSpec<R::Elem>) -> Result<TruncSeries<R::Elem>> {
    spec.validate()?;
    let d = spec.order;
    let mut log_sum = ts_zero(ring, d);

    if !spec.shift.is_zero() && d > 1 {
        let mut shifted = ts_zero(ring, d);
        shifted.coeffs_mut()[1] = ring.from_rat(&spec.shift);
        log_sum = ts_add(ring, &log_sum, &shifted);
    }

    if !spec.plain.is_empty() {
        let h = h_series(d);
        let summed = ts_sum_scaled(&crate::ring::RationalField, &h, &spec.plain)?;
        log_sum = ts_add(ring, &log_sum, &ts_lift(ring, &summed));
    }

    // group equal y values, preserving first-seen order
    let mut groups: Vec<(Vec<i64>, &R::Elem)> = Vec::new();
    for (bs, y) in &spec.mixed {
        if bs.is_empty() || ring.is_zero(y) {
            continue;
        }
        match groups.iter_mut().find(|(_, gy)| *gy == y) {
            Some((gbs, _)) => gbs.extend_from_slice(bs),
            None => groups.push((bs.clone(), y)),
        }
    }
    for (bs, y) in groups {
        let hy = h_y_series(ring, y, d);
        let summed = ts_sum_scaled(ring, &hy, &bs)?;
        log_sum = ts_add(ring, &log_sum, &summed);
    }

    ts_exp(ring, &log_sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CycCtx;
    use crate::poly::Poly;
    use crate::rat::{rat, rat_int};
    use crate::ring::RationalField;
    use crate::series::ts_one;

    #[test]
    fn empty_product_is_one() {
        let f = RationalField;
        let spec = GtdSpec::plain_product(Vec::new(), 4);
        assert_eq!(gtodd_sequence(&f, &spec).unwrap(), ts_one(&f, 4));
    }

    #[test]
    fn example_quotient_ring_product() {
        // g(3s) g(6s) g(s, (zeta-1)/3) mod s^2 = 1 + (2 zeta - 29)/6 s
        let ctx = CycCtx::new(3).unwrap();
        let r = ctx.ring();
        let y = Poly::from_coeffs(vec![rat(-1, 3), rat(1, 3)]);
        let spec = GtdSpec {
            shift: Rat::zero(),
            plain: vec![3, 6],
            mixed: vec![(vec![1], y)],
            order: 2,
        };
        let got = gtodd_sequence(&r, &spec).unwrap();
        assert_eq!(got.coeff(0), &Poly::one());
        assert_eq!(got.coeff(1), &Poly::from_coeffs(vec![rat(-29, 6), rat(2, 6)]));
    }

    #[test]
    fn plain_product_136() {
        // direct truncated product of the three g(bs) factors gives
        // 1 - 5s + (127/12) s^2
        let f = RationalField;
        let spec = GtdSpec::plain_product(vec![1, 3, 6], 3);
        let got = gtodd_sequence(&f, &spec).unwrap();
        assert_eq!(got.coeff(0), &rat_int(1));
        assert_eq!(got.coeff(1), &rat_int(-5));
        assert_eq!(got.coeff(2), &rat(127, 12));
    }

    #[test]
    fn zero_scale_rejected() {
        let f = RationalField;
        let spec = GtdSpec::plain_product(vec![1, 0], 2);
        assert_eq!(gtodd_sequence(&f, &spec).unwrap_err(), Error::ZeroScale);
    }

    #[test]
    fn equal_y_values_share_one_expansion() {
        // two mixed groups with the same y must behave as one merged group
        let f = RationalField;
        let y = rat(1, 2);
        let split = GtdSpec {
            shift: Rat::zero(),
            plain: vec![2],
            mixed: vec![(vec![1, 3], y.clone()), (vec![5], y.clone())],
            order: 6,
        };
        let merged = GtdSpec {
            shift: Rat::zero(),
            plain: vec![2],
            mixed: vec![(vec![1, 3, 5], y)],
            order: 6,
        };
        assert_eq!(
            gtodd_sequence(&f, &split).unwrap(),
            gtodd_sequence(&f, &merged).unwrap()
        );
    }

    #[test]
    fn shift_enters_exponent() {
        // e^{as} alone: gtd_k = a^k / k!
        let f = RationalField;
        let spec = GtdSpec::<Rat> {
            shift: rat(2, 1),
            plain: Vec::new(),
            mixed: Vec::new(),
            order: 4,
        };
        let got = gtodd_sequence(&f, &spec).unwrap();
        assert_eq!(got.coeffs(), &[rat_int(1), rat_int(2), rat_int(2), rat(4, 3)]);
    }
}
