//! Floating-point Sylvester waves.
//!
//! Same decomposition as the exact pipeline, but each primitive f-th root
//! of unity is a Complex64 approximation eta^j, j coprime to f. One Todd
//! sequence is computed per j over the complex field and the results are
//! accumulated in a fixed order, so runs are reproducible. The true wave
//! coefficients are real; outputs keep the real parts and expose the
//! largest imaginary magnitude seen as a diagnostic.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::Zero;

use crate::cyclotomic::divisor_union;
use crate::error::{Error, Result};
use crate::gtodd::{gtodd_sequence, GtdSpec};
use crate::quasipoly::MAX_PERIOD;
use crate::rat::{rat_to_f64, Rat};
use crate::ring::ComplexField;
use crate::wave::{validate_sequence, WaveContext};

/// One wave with Complex-derived real coefficients.
#[derive(Clone, Debug)]
pub struct FloatWave {
    period: u64,
    /// components[i-1] holds the ascending t-coefficients of P_i.
    components: Vec<Vec<f64>>,
    max_imag_residual: f64,
}

impl FloatWave {
    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn components(&self) -> &[Vec<f64>] {
        &self.components
    }

    /// Ascending coefficients of P_i, 1 <= i <= period.
    pub fn component(&self, i: u64) -> &[f64] {
        &self.components[(i - 1) as usize]
    }

    /// Largest |Im| discarded when the coefficients were realified.
    pub fn max_imag_residual(&self) -> f64 {
        self.max_imag_residual
    }

    /// Approximate value at a nonnegative integer point.
    pub fn eval(&self, t: u64) -> f64 {
        let slot = ((t % self.period + self.period - 1) % self.period) as usize;
        let tf = t as f64;
        let mut acc = 0.0;
        for c in self.components[slot].iter().rev() {
            acc = acc * tf + c;
        }
        acc
    }
}

// eta^k for 0 <= k < f and 1/(1 - eta^k) for 1 <= k < f, each from the
// angle directly rather than by repeated multiplication.
struct RootTable {
    f: u64,
    powers: Vec<Complex64>,
    inv_one_minus: Vec<Complex64>,
}

impl RootTable {
    fn new(f: u64) -> Self {
        let tau = 2.0 * core::f64::consts::PI / f as f64;
        let powers: Vec<Complex64> = (0..f)
            .map(|k| {
                let th = tau * k as f64;
                Complex64::new(libm::cos(th), libm::sin(th))
            })
            .collect();
        let mut inv_one_minus = vec![Complex64::new(0.0, 0.0); f as usize];
        for k in 1..f as usize {
            inv_one_minus[k] = Complex64::new(1.0, 0.0) / (Complex64::new(1.0, 0.0) - powers[k]);
        }
        RootTable { f, powers, inv_one_minus }
    }

    fn power(&self, e: u64) -> Complex64 {
        self.powers[(e % self.f) as usize]
    }

    /// eta^{-e}.
    fn power_neg(&self, e: u64) -> Complex64 {
        self.power(self.f - e % self.f)
    }

    fn inv_one_minus(&self, e: u64) -> Complex64 {
        self.inv_one_minus[(e % self.f) as usize]
    }
}

/// W_f(t; a) with floating arithmetic; f = 1 is handled uniformly.
pub fn float_wave_f(seq: &[u64], f: u64) -> Result<FloatWave> {
    let wctx = WaveContext::new(seq, f)?;
    let n = wctx.n_div();
    let roots = RootTable::new(f);
    let field = ComplexField;

    let plain: Vec<i64> = wctx.div_idx.iter().map(|&i| seq[i] as i64).collect();

    // acc[m][i-1] accumulates eta^{-ij} A_{n-1-m}(f, j) prod_v(j) over j
    let mut acc = vec![vec![Complex64::new(0.0, 0.0); f as usize]; n];
    for j in 1..=f {
        if j.gcd(&f) != 1 {
            continue;
        }
        let mut groups: BTreeMap<u64, Vec<i64>> = BTreeMap::new();
        let mut prod_v = Complex64::new(1.0, 0.0);
        for &i in &wctx.nondiv_idx {
            let a = seq[i];
            let r = (j * a) % f;
            prod_v *= roots.inv_one_minus(r);
            groups.entry(r).or_default().push(a as i64);
        }
        let mixed = groups
            .into_iter()
            .map(|(r, bs)| (bs, roots.inv_one_minus(r) - Complex64::new(1.0, 0.0)))
            .collect();
        let spec = GtdSpec { shift: Rat::zero(), plain: plain.clone(), mixed, order: n };
        let todd = gtodd_sequence(&field, &spec)?;
        for (m, row) in acc.iter_mut().enumerate() {
            let base = todd.coeff(n - 1 - m) * prod_v;
            for (idx, slot) in row.iter_mut().enumerate() {
                let i = idx as u64 + 1;
                *slot += roots.power_neg(i * j) * base;
            }
        }
    }

    let mut components = vec![vec![0.0; n]; f as usize];
    let mut residual = 0.0f64;
    let mut mfact = BigInt::from(1);
    for (m, row) in acc.iter().enumerate() {
        if m > 0 {
            mfact *= BigInt::from(m);
        }
        let numer = if (n + m + 1) % 2 == 1 { BigInt::from(-1) } else { BigInt::from(1) };
        let scale = rat_to_f64(&Rat::new(numer, &mfact * &wctx.prod_div));
        for (idx, v) in row.iter().enumerate() {
            let c = v * scale;
            components[idx][m] = c.re;
            residual = residual.max(libm::fabs(c.im));
        }
    }
    if !residual.is_finite() {
        return Err(Error::NonFiniteValue);
    }
    Ok(FloatWave { period: f, components, max_imag_residual: residual })
}

/// The full floating wave list keyed by f.
pub fn float_all_waves(seq: &[u64]) -> Result<BTreeMap<u64, FloatWave>> {
    validate_sequence(seq)?;
    let mut out = BTreeMap::new();
    for f in divisor_union(seq) {
        out.insert(f, float_wave_f(seq, f)?);
    }
    Ok(out)
}

/// Approximate d(t; a) and the largest imaginary residual seen.
pub fn float_denumerant(seq: &[u64], t: u64) -> Result<(f64, f64)> {
    let waves = float_all_waves(seq)?;
    let value = waves.values().map(|w| w.eval(t)).sum();
    let residual = waves.values().map(FloatWave::max_imag_residual).fold(0.0, f64::max);
    Ok((value, residual))
}

/// Sum a family of float waves into one of period lcm over all.
pub fn float_combine<'a, I>(waves: I) -> Result<FloatWave>
where
    I: IntoIterator<Item = &'a FloatWave>,
{
    let mut period = 1u64;
    let mut collected: Vec<&FloatWave> = Vec::new();
    for w in waves {
        period = period.lcm(&w.period);
        if period > MAX_PERIOD {
            return Err(Error::PeriodTooLarge);
        }
        collected.push(w);
    }
    let mut components = vec![Vec::new(); period as usize];
    let mut residual = 0.0f64;
    for w in &collected {
        residual = residual.max(w.max_imag_residual);
        for (j, slot) in components.iter_mut().enumerate() {
            let src = &w.components[j % w.period as usize];
            if slot.len() < src.len() {
                slot.resize(src.len(), 0.0);
            }
            for (k, c) in src.iter().enumerate() {
                slot[k] += c;
            }
        }
    }
    Ok(FloatWave { period, components, max_imag_residual: residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{ring_pow, ComplexField};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn example_float_waves_136() {
        // reference approximations printed at 10 digits
        let w1 = float_wave_f(&[1, 3, 6], 1).unwrap();
        let c1 = w1.component(1);
        assert!(close(c1[2], 0.02777777778, 5e-9));
        assert!(close(c1[1], 0.2777777778, 5e-9));
        assert!(close(c1[0], 0.5879629633, 5e-9));

        let w2 = float_wave_f(&[1, 3, 6], 2).unwrap();
        assert!(close(w2.component(1)[0], -0.04166666667, 5e-9));
        assert!(close(w2.component(2)[0], 0.04166666667, 5e-9));

        let w6 = float_wave_f(&[1, 3, 6], 6).unwrap();
        let expect = [
            0.1666666667,
            0.08333333340,
            -0.08333333332,
            -0.1666666666,
            -0.08333333330,
            0.08333333328,
        ];
        for (i, &e) in expect.iter().enumerate() {
            assert!(close(w6.component(i as u64 + 1)[0], e, 5e-9), "P_{}", i + 1);
        }
    }

    #[test]
    fn float_w3_matches_exact() {
        let wf = float_wave_f(&[1, 3, 6], 3).unwrap();
        let we = crate::wave::wave_f(&[1, 3, 6], 3).unwrap();
        for i in 1..=3u64 {
            let exact = we.component(i);
            for (m, c) in wf.component(i).iter().enumerate() {
                let e = rat_to_f64(&exact.coeff(m));
                assert!(close(*c, e, 1e-8), "P_{i} coeff {m}: {c} vs {e}");
            }
        }
        assert!(wf.max_imag_residual() < 1e-12);
    }

    #[test]
    fn float_denumerant_at_14() {
        let (v, res) = float_denumerant(&[1, 3, 6], 14).unwrap();
        assert!(close(v, 9.0, 1e-8));
        // within the reference's own 10-digit rounding of the same value
        assert!(close(v, 9.000000001, 5e-8));
        assert!(res < 1e-10);
    }

    #[test]
    fn float_denumerant_large_t() {
        let (v, _) = float_denumerant(&[1, 3, 6], 1_789_682).unwrap();
        assert!(close(v, 88_971_554_961.0, 1.0), "{v}");
    }

    #[test]
    fn float_single_entry() {
        let waves = float_all_waves(&[1]).unwrap();
        assert_eq!(waves.len(), 1);
        assert!(close(waves[&1].eval(77), 1.0, 1e-12));
    }

    #[test]
    fn eta_power_f_returns_to_one() {
        for f in 2..=500u64 {
            let roots = RootTable::new(f);
            let eta = roots.power(1);
            let back = ring_pow(&ComplexField, &eta, f);
            assert!(
                (back - Complex64::new(1.0, 0.0)).norm() < 1e-12,
                "f={f}: {back}"
            );
        }
    }

    #[test]
    fn combine_matches_pointwise_sum() {
        let waves = float_all_waves(&[1, 3, 6]).unwrap();
        let combined = float_combine(waves.values()).unwrap();
        assert_eq!(combined.period(), 6);
        for t in 0..36 {
            let direct: f64 = waves.values().map(|w| w.eval(t)).sum();
            assert!(close(combined.eval(t), direct, 1e-12));
        }
    }
}
