//! Exact Sylvester wave computation.
//!
//! For a sequence a with gcd 1, the denumerant d(t; a) splits as
//! sum_f W_f(t; a) over the divisors f of the entries. W_1 comes from the
//! Todd coefficients of prod g(a_i s); W_f for f > 1 works in
//! Q[x]/<Phi_f>: the non-divisible entries contribute factors
//! g(a_i s, v_i - 1) with v_i the standard-form inverse of 1 - x^{a_i},
//! the Todd coefficients are multiplied by prod v_i, pushed back to
//! Q[x]/<x^f - 1> through the cofactor-derivative product, and the folded
//! coefficient rows c_{m, i} become the residue-class polynomials
//!
//!   P_i(t) = sum_m (-1)^{n+m+1} / (m! prod_{f | a_i} a_i) c_{m, i-1} t^m,
//!
//! where n counts the entries divisible by f.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::cyclotomic::{divisor_union, mod_xf_reduce, CycCtx};
use crate::error::{Error, Result};
use crate::gtodd::{gtodd_sequence, GtdSpec};
use crate::poly::Poly;
use crate::quasipoly::QuasiPolynomial;
use crate::rat::Rat;
use crate::ring::{RationalField, Ring};

/// Check the sequence contract: nonempty, positive, distinct, gcd 1.
pub fn validate_sequence(seq: &[u64]) -> Result<()> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    if seq.contains(&0) {
        return Err(Error::ZeroEntry);
    }
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DuplicateEntries);
    }
    let g = seq.iter().fold(0u64, |acc, a| acc.gcd(a));
    if g != 1 {
        return Err(Error::GcdNotOne);
    }
    Ok(())
}

/// Split of a sequence relative to one wave modulus f.
#[derive(Clone, Debug)]
pub struct WaveContext {
    pub f: u64,
    /// Indices of entries divisible by f.
    pub div_idx: Vec<usize>,
    /// The complement.
    pub nondiv_idx: Vec<usize>,
    /// Product of the divisible entries.
    pub prod_div: BigInt,
}

impl WaveContext {
    pub fn new(seq: &[u64], f: u64) -> Result<Self> {
        validate_sequence(seq)?;
        if f == 0 {
            return Err(Error::ZeroModulus);
        }
        let mut div_idx = Vec::new();
        let mut nondiv_idx = Vec::new();
        let mut prod_div = BigInt::from(1);
        for (i, &a) in seq.iter().enumerate() {
            if a % f == 0 {
                div_idx.push(i);
                prod_div *= BigInt::from(a);
            } else {
                nondiv_idx.push(i);
            }
        }
        if div_idx.is_empty() {
            return Err(Error::NoDivisibleEntry { f });
        }
        Ok(WaveContext { f, div_idx, nondiv_idx, prod_div })
    }

    /// n(f | a), the count of divisible entries; the wave degree bound is
    /// n(f | a) - 1.
    pub fn n_div(&self) -> usize {
        self.div_idx.len()
    }
}

/// The folded coefficient rows: rows[m][i] holds c_{m, i} for 0 <= i < f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    rows: Vec<Vec<Rat>>,
}

impl CoefficientTable {
    /// One row per 0 <= m < n(f | a).
    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn row(&self, m: usize) -> &[Rat] {
        &self.rows[m]
    }
}

/// Todd step plus reduction for f > 1: the inner machinery of wave_f,
/// exposed so the intermediate coefficient rows are testable on their own.
pub fn coefficient_table(seq: &[u64], f: u64) -> Result<(WaveContext, CoefficientTable)> {
    if f < 2 {
        return Err(Error::InvalidModulus { f });
    }
    let wctx = WaveContext::new(seq, f)?;
    let n = wctx.n_div();

    let mut ctx = CycCtx::new(f)?;
    ctx.precompute_inverses(wctx.nondiv_idx.iter().map(|&i| seq[i]));
    let ring = ctx.ring();

    // prod v_i over non-divisible entries, and the y = v - 1 groups keyed
    // by residue class (y depends on a_i mod f only)
    let mut prod_v = Poly::one();
    let mut groups: BTreeMap<u64, Vec<i64>> = BTreeMap::new();
    for &i in &wctx.nondiv_idx {
        let a = seq[i];
        let v = ctx.inverse_one_minus(a)?;
        prod_v = ring.mul(&prod_v, &v);
        groups.entry(a % f).or_default().push(a as i64);
    }
    let mixed = groups
        .into_iter()
        .map(|(r, bs)| {
            let v = ctx.inverse_one_minus(r)?;
            Ok((bs, ring.sub(&v, &ring.one())))
        })
        .collect::<Result<Vec<_>>>()?;

    let spec = GtdSpec {
        shift: Rat::zero(),
        plain: wctx.div_idx.iter().map(|&i| seq[i] as i64).collect(),
        mixed,
        order: n,
    };
    let todd = gtodd_sequence(&ring, &spec)?;

    // push each M_m = [[todd_{n-1-m} prod_v]] through the cofactor product
    // and fold modulo x^f - 1
    let cof_deriv = mod_xf_reduce(f, &(ctx.cofactor() * ctx.phi_deriv()));
    let mut rows = Vec::with_capacity(n);
    for m in 0..n {
        let mm = ring.mul(todd.coeff(n - 1 - m), &prod_v);
        let folded = mod_xf_reduce(f, &(&mm * &cof_deriv));
        let mut row = folded.coeffs().to_vec();
        row.resize(f as usize, Rat::zero());
        rows.push(row);
    }
    Ok((wctx, CoefficientTable { rows }))
}

fn sign_over(parity: usize, denom: BigInt) -> Rat {
    let numer = if parity % 2 == 1 { BigInt::from(-1) } else { BigInt::from(1) };
    Rat::new(numer, denom)
}

/// W_1(t; a): the single polynomial wave of degree N - 1.
pub fn wave_one(seq: &[u64]) -> Result<QuasiPolynomial> {
    validate_sequence(seq)?;
    let n = seq.len();
    let spec = GtdSpec::plain_product(seq.iter().map(|&a| a as i64).collect(), n);
    let todd = gtodd_sequence(&RationalField, &spec)?;
    let prod: BigInt = seq.iter().map(|&a| BigInt::from(a)).product();
    let mut coeffs = Vec::with_capacity(n);
    let mut mfact = BigInt::from(1);
    for m in 0..n {
        if m > 0 {
            mfact *= BigInt::from(m);
        }
        let c = sign_over(n + m + 1, &mfact * &prod);
        coeffs.push(todd.coeff(n - 1 - m) * c);
    }
    Ok(QuasiPolynomial::new(alloc::vec![Poly::from_coeffs(coeffs)]))
}

/// W_f(t; a) for f >= 2: period-f quasi-polynomial of degree < n(f | a).
pub fn wave_f(seq: &[u64], f: u64) -> Result<QuasiPolynomial> {
    let (wctx, table) = coefficient_table(seq, f)?;
    let n = wctx.n_div();
    let mut components = Vec::with_capacity(f as usize);
    for i in 1..=f as usize {
        let mut coeffs = Vec::with_capacity(n);
        let mut mfact = BigInt::from(1);
        for (m, row) in table.rows().iter().enumerate() {
            if m > 0 {
                mfact *= BigInt::from(m);
            }
            let c = sign_over(n + m + 1, &mfact * &wctx.prod_div);
            coeffs.push(&row[i - 1] * c);
        }
        components.push(Poly::from_coeffs(coeffs));
    }
    Ok(QuasiPolynomial::new(components))
}

/// The full wave list, one entry per divisor of some a_i, keyed by f.
pub fn all_waves(seq: &[u64]) -> Result<BTreeMap<u64, QuasiPolynomial>> {
    validate_sequence(seq)?;
    let mut out = BTreeMap::new();
    for f in divisor_union(seq) {
        let w = if f == 1 { wave_one(seq)? } else { wave_f(seq, f)? };
        out.insert(f, w);
    }
    Ok(out)
}

/// d(t; a) exactly, as the sum of all wave values at t.
pub fn denumerant(seq: &[u64], t: u64) -> Result<Rat> {
    let waves = all_waves(seq)?;
    Ok(waves.values().map(|w| w.eval(t)).fold(Rat::zero(), |acc, v| acc + v))
}
