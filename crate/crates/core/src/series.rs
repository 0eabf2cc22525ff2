//! Truncated power series over a pluggable coefficient ring.
//!
//! All arithmetic is modulo s^d where d is the truncation order. The
//! logarithm integrates G'/G term by term; the exponential uses the
//! standard recurrence f_k = (1/k) sum_j j h_j f_{k-j}. Both need exact
//! division by small integers only, which every coefficient ring here
//! provides.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::error::{Error, Result};
use crate::rat::{bernoulli, rat_int, rat_u64, Rat};
use crate::ring::{Ring, RationalField};

/// Power series truncated to a fixed order d >= 1; coeffs[k] is the
/// coefficient of s^k for k < d.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Clone> TruncSeries<C> {
    /// Wrap explicit coefficients; the order is their count (must be >= 1).
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "series order must be at least 1");
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [C] {
        &mut self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }
}

/// The zero series at order d.
pub fn ts_zero<R: Ring>(ring: &R, d: usize) -> TruncSeries<R::Elem> {
    assert!(d >= 1);
    TruncSeries { coeffs: vec![ring.zero(); d] }
}

/// The constant series 1 at order d.
pub fn ts_one<R: Ring>(ring: &R, d: usize) -> TruncSeries<R::Elem> {
    let mut s = ts_zero(ring, d);
    s.coeffs[0] = ring.one();
    s
}

/// Sum; mixing orders truncates to the smaller.
pub fn ts_add<R: Ring>(
    ring: &R,
    p: &TruncSeries<R::Elem>,
    q: &TruncSeries<R::Elem>,
) -> TruncSeries<R::Elem> {
    let d = p.order().min(q.order());
    let coeffs = (0..d).map(|k| ring.add(&p.coeffs[k], &q.coeffs[k])).collect();
    TruncSeries { coeffs }
}

/// Difference; mixing orders truncates to the smaller.
pub fn ts_sub<R: Ring>(
    ring: &R,
    p: &TruncSeries<R::Elem>,
    q: &TruncSeries<R::Elem>,
) -> TruncSeries<R::Elem> {
    let d = p.order().min(q.order());
    let coeffs = (0..d).map(|k| ring.sub(&p.coeffs[k], &q.coeffs[k])).collect();
    TruncSeries { coeffs }
}

pub fn ts_neg<R: Ring>(ring: &R, p: &TruncSeries<R::Elem>) -> TruncSeries<R::Elem> {
    TruncSeries { coeffs: p.coeffs.iter().map(|c| ring.neg(c)).collect() }
}

/// Product truncated to the common order. The orders must match.
pub fn ts_mul<R: Ring>(
    ring: &R,
    p: &TruncSeries<R::Elem>,
    q: &TruncSeries<R::Elem>,
) -> Result<TruncSeries<R::Elem>> {
    if p.order() != q.order() {
        return Err(Error::OrderMismatch { left: p.order(), right: q.order() });
    }
    let d = p.order();
    let mut coeffs = vec![ring.zero(); d];
    for (i, pi) in p.coeffs.iter().enumerate() {
        if ring.is_zero(pi) {
            continue;
        }
        for (j, qj) in q.coeffs.iter().take(d - i).enumerate() {
            coeffs[i + j] = ring.add(&coeffs[i + j], &ring.mul(pi, qj));
        }
    }
    Ok(TruncSeries { coeffs })
}

/// ln g for a series with g(0) = 1, via H' = G'/G integrated termwise.
pub fn ts_log<R: Ring>(ring: &R, g: &TruncSeries<R::Elem>) -> Result<TruncSeries<R::Elem>> {
    if g.coeffs[0] != ring.one() {
        return Err(Error::ConstantTermNotOne);
    }
    let d = g.order();
    let mut h = ts_zero(ring, d);
    if d == 1 {
        return Ok(h);
    }
    // q = G'/G by forward substitution (G has unit constant term):
    // q_k = (k+1) g_{k+1} - sum_{j=1..k} g_j q_{k-j}
    let mut q: Vec<R::Elem> = Vec::with_capacity(d - 1);
    for k in 0..d - 1 {
        let lead = ring.scale_rat(&g.coeffs[k + 1], &rat_u64(k as u64 + 1));
        let c = ring.sub(&lead, &ring.conv_term(&g.coeffs, &q, k, 1));
        q.push(c);
    }
    for k in 1..d {
        h.coeffs[k] = ring.div_int(&q[k - 1], k as u64);
    }
    Ok(h)
}

/// e^h for a series with h(0) = 0.
pub fn ts_exp<R: Ring>(ring: &R, h: &TruncSeries<R::Elem>) -> Result<TruncSeries<R::Elem>> {
    if !ring.is_zero(&h.coeffs[0]) {
        return Err(Error::ConstantTermNotZero);
    }
    let d = h.order();
    let mut f = ts_one(ring, d);
    // f_k = (1/k) sum_{j=1..k} (j h_j) f_{k-j}
    let weighted: Vec<R::Elem> = h
        .coeffs
        .iter()
        .enumerate()
        .map(|(j, c)| ring.scale_rat(c, &rat_u64(j as u64)))
        .collect();
    for k in 1..d {
        let acc = ring.conv_term(&weighted, &f.coeffs, k, 1);
        f.coeffs[k] = ring.div_int(&acc, k as u64);
    }
    Ok(f)
}

/// Substitute s -> b s: coefficient k picks up a factor b^k.
pub fn ts_scale_arg<R: Ring>(ring: &R, p: &TruncSeries<R::Elem>, b: i64) -> TruncSeries<R::Elem> {
    let step = rat_int(b);
    let mut pw = Rat::one();
    let coeffs = p
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| {
            if k > 0 {
                pw *= &step;
            }
            ring.scale_rat(c, &pw)
        })
        .collect();
    TruncSeries { coeffs }
}

/// sum_{b in B} h(b s), via the power sums sum_{b in B} b^k computed
/// exactly over the integers. Entries of B must be nonzero.
pub fn ts_sum_scaled<R: Ring>(
    ring: &R,
    h: &TruncSeries<R::Elem>,
    bs: &[i64],
) -> Result<TruncSeries<R::Elem>> {
    if bs.contains(&0) {
        return Err(Error::ZeroScale);
    }
    let d = h.order();
    let mut out = ts_zero(ring, d);
    if bs.is_empty() {
        return Ok(out);
    }
    let steps: Vec<Rat> = bs.iter().map(|&b| rat_int(b)).collect();
    let mut powers: Vec<Rat> = bs.iter().map(|_| Rat::one()).collect();
    for k in 0..d {
        if k > 0 {
            for (pw, step) in powers.iter_mut().zip(&steps) {
                *pw *= step;
            }
        }
        if ring.is_zero(&h.coeffs[k]) {
            continue;
        }
        let psum: Rat = powers.iter().sum();
        out.coeffs[k] = ring.scale_rat(&h.coeffs[k], &psum);
    }
    Ok(out)
}

/// Map a rational series into another coefficient ring.
pub fn ts_lift<R: Ring>(ring: &R, p: &TruncSeries<Rat>) -> TruncSeries<R::Elem> {
    TruncSeries { coeffs: p.coeffs.iter().map(|c| ring.from_rat(c)).collect() }
}

/// The truncation of sum_k B_k s^k / k!, i.e. s/(e^s - 1).
pub fn todd_base_series(d: usize) -> TruncSeries<Rat> {
    assert!(d >= 1);
    let b = bernoulli(d);
    let mut fact = Rat::one();
    let coeffs = b
        .into_iter()
        .enumerate()
        .map(|(k, bk)| {
            if k > 0 {
                fact *= rat_u64(k as u64);
            }
            bk / &fact
        })
        .collect();
    TruncSeries { coeffs }
}

/// h(s) = ln(s/(e^s - 1)) truncated to order d.
///
/// Defined as the series logarithm of [`todd_base_series`], which pins the
/// Bernoulli sign convention to B_1 = -1/2.
pub fn h_series(d: usize) -> TruncSeries<Rat> {
    ts_log(&RationalField, &todd_base_series(d)).expect("todd base series has constant term 1")
}

/// h(s, y) = ln(1/(1 - y(e^s - 1))) = -ln(1 - sum_{i>=1} (y/i!) s^i),
/// truncated to order d, for y in the coefficient ring.
pub fn h_y_series<R: Ring>(ring: &R, y: &R::Elem, d: usize) -> TruncSeries<R::Elem> {
    assert!(d >= 1);
    let mut g = ts_one(ring, d);
    let mut fact = Rat::one();
    for k in 1..d {
        fact *= rat_u64(k as u64);
        g.coeffs[k] = ring.neg(&ring.scale_rat(y, &fact.recip()));
    }
    let log = ts_log(ring, &g).expect("1 - u has constant term 1");
    ts_neg(ring, &log)
}
