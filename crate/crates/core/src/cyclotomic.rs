//! Cyclotomic polynomials and arithmetic in Q[x]/<Phi_f> and Q[x]/<x^f-1>.
//!
//! - [`cyclotomic_poly`]: exact Phi_f by iterative division
//! - [`CycCtx`]: per-modulus context (Phi_f, cofactor, derivative, inverses)
//! - [`CycCtx::standard_form`]: the canonical representative of degree < phi(f)
//! - [`CycCtx::inverse_one_minus`]: 1/(1 - zeta^a) as a standard-form polynomial
//! - [`CycRing`]: Q[x]/<Phi_f> as a series coefficient ring

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::{rat_u64, Rat};
use crate::ring::Ring;

/// All divisors of n, ascending. n must be positive.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1, "divisors of 0 are undefined");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Union of the divisor sets of all entries, ascending. Always contains 1.
pub fn divisor_union(seq: &[u64]) -> Vec<u64> {
    let mut set = BTreeSet::new();
    set.insert(1);
    for &a in seq {
        for d in divisors(a) {
            set.insert(d);
        }
    }
    set.into_iter().collect()
}

// Exact division of integer polynomials, divisor monic. Remainder is
// discarded; callers only use it where divisibility is guaranteed.
fn int_div_exact(num: &[BigInt], div: &[BigInt]) -> Vec<BigInt> {
    let dd = div.len() - 1;
    let mut work = num.to_vec();
    let mut quot = vec![BigInt::zero(); work.len() - dd];
    for k in (0..quot.len()).rev() {
        let q = work[k + dd].clone();
        if !q.is_zero() {
            for (j, c) in div.iter().enumerate() {
                work[k + j] -= c * &q;
            }
        }
        quot[k] = q;
    }
    quot
}

fn xn_minus_one(n: u64) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n as usize + 1];
    v[0] = BigInt::from(-1);
    v[n as usize] = BigInt::from(1);
    v
}

// Phi_d for every d | f, by the chain Phi_d = (x^d - 1) / prod_{e|d, e<d} Phi_e.
// Cyclotomic polynomials have integer coefficients, so the chain runs over
// BigInt and converts to rationals only at the boundary.
fn cyclotomic_chain(f: u64) -> BTreeMap<u64, Vec<BigInt>> {
    let mut memo: BTreeMap<u64, Vec<BigInt>> = BTreeMap::new();
    for d in divisors(f) {
        let mut num = xn_minus_one(d);
        for e in divisors(d) {
            if e < d {
                num = int_div_exact(&num, &memo[&e]);
            }
        }
        memo.insert(d, num);
    }
    memo
}

fn int_to_poly(v: &[BigInt]) -> Poly {
    Poly::from_coeffs(v.iter().map(|c| Rat::from_integer(c.clone())).collect())
}

/// The f-th cyclotomic polynomial, monic of degree phi(f).
pub fn cyclotomic_poly(f: u64) -> Result<Poly> {
    if f == 0 {
        return Err(Error::ZeroModulus);
    }
    let chain = cyclotomic_chain(f);
    Ok(int_to_poly(&chain[&f]))
}

/// Representative of p in Q[x]/<x^f - 1> of degree < f (exponent folding).
pub fn mod_xf_reduce(f: u64, p: &Poly) -> Poly {
    let f = f as usize;
    let mut acc = vec![Rat::zero(); f];
    for (e, c) in p.coeffs().iter().enumerate() {
        acc[e % f] += c;
    }
    Poly::from_coeffs(acc)
}

/// Precomputed context for one cyclotomic modulus f.
///
/// Holds Phi_f, its cofactor (x^f-1)/Phi_f, its derivative, the totient,
/// and a table of standard-form inverses of 1 - x^a keyed by a mod f. The
/// table is filled by [`CycCtx::precompute_inverses`]; afterwards the
/// context is immutable and can be shared across threads.
#[derive(Clone, Debug)]
pub struct CycCtx {
    f: u64,
    phi: Poly,
    cofactor: Poly,
    phi_deriv: Poly,
    totient: usize,
    inv: BTreeMap<u64, Poly>,
}

impl CycCtx {
    pub fn new(f: u64) -> Result<Self> {
        if f == 0 {
            return Err(Error::ZeroModulus);
        }
        let chain = cyclotomic_chain(f);
        let phi_int = &chain[&f];
        let cofactor_int = int_div_exact(&xn_minus_one(f), phi_int);
        let phi = int_to_poly(phi_int);
        let cofactor = int_to_poly(&cofactor_int);
        let phi_deriv = phi.derivative();
        let totient = phi.degree().expect("Phi_f is nonzero");
        Ok(CycCtx { f, phi, cofactor, phi_deriv, totient, inv: BTreeMap::new() })
    }

    pub fn modulus(&self) -> u64 {
        self.f
    }

    /// Phi_f.
    pub fn phi(&self) -> &Poly {
        &self.phi
    }

    /// (x^f - 1) / Phi_f.
    pub fn cofactor(&self) -> &Poly {
        &self.cofactor
    }

    /// Phi_f'.
    pub fn phi_deriv(&self) -> &Poly {
        &self.phi_deriv
    }

    /// Euler totient phi(f) = deg Phi_f.
    pub fn totient(&self) -> usize {
        self.totient
    }

    /// Canonical representative of p modulo Phi_f, of degree < phi(f):
    /// first reduce modulo x^f - 1, then take the remainder modulo Phi_f.
    pub fn standard_form(&self, p: &Poly) -> Poly {
        let folded = if p.degree().is_some_and(|d| d >= self.f as usize) {
            mod_xf_reduce(self.f, p)
        } else {
            p.clone()
        };
        if folded.degree().is_none_or(|d| d < self.totient) {
            return folded;
        }
        let (_, rem) = folded.divrem(&self.phi).expect("Phi_f is nonzero");
        rem
    }

    // -1/f * x^a * theta_f'(x^a) reduced mod x^f - 1, then mod Phi_f.
    // theta_f' has exponents folded on the fly, so no degree-f^2 blowup.
    fn compute_inverse(&self, r: u64) -> Poly {
        let f = self.f;
        let mut acc = vec![Rat::zero(); f as usize];
        for i in 1..f {
            let idx = (r * i % f) as usize;
            acc[idx] += rat_u64(i);
        }
        let scale = -Rat::new(1.into(), BigInt::from(f));
        let raw = Poly::from_coeffs(acc).scale(&scale);
        self.standard_form(&raw)
    }

    /// Standard-form inverse of 1 - x^a in Q[x]/<Phi_f>. Errors when f | a
    /// (1 - zeta^a vanishes). Served from the table when prepopulated.
    pub fn inverse_one_minus(&self, a: u64) -> Result<Poly> {
        let r = a % self.f;
        if r == 0 {
            return Err(Error::NotInvertible { f: self.f, a });
        }
        if let Some(v) = self.inv.get(&r) {
            return Ok(v.clone());
        }
        Ok(self.compute_inverse(r))
    }

    /// Fill the inverse table for the given residues (values are keyed and
    /// deduplicated mod f; residue 0 entries are ignored).
    pub fn precompute_inverses<I: IntoIterator<Item = u64>>(&mut self, residues: I) {
        let f = self.f;
        let targets: BTreeSet<u64> = residues.into_iter().map(|a| a % f).filter(|&r| r != 0).collect();
        for r in targets {
            if !self.inv.contains_key(&r) {
                let v = self.compute_inverse(r);
                self.inv.insert(r, v);
            }
        }
    }

    /// Number of cached inverses.
    pub fn cached_inverses(&self) -> usize {
        self.inv.len()
    }

    /// View this context as the series coefficient ring Q[x]/<Phi_f>.
    pub fn ring(&self) -> CycRing<'_> {
        CycRing { ctx: self }
    }
}

/// Q[x]/<Phi_f> as a coefficient ring; elements are standard-form [`Poly`]s.
#[derive(Clone, Copy, Debug)]
pub struct CycRing<'a> {
    ctx: &'a CycCtx,
}

impl<'a> CycRing<'a> {
    pub fn ctx(&self) -> &'a CycCtx {
        self.ctx
    }
}

impl Ring for CycRing<'_> {
    type Elem = Poly;

    fn zero(&self) -> Poly {
        Poly::zero()
    }
    fn one(&self) -> Poly {
        Poly::one()
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a + b
    }
    fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        a - b
    }
    fn neg(&self, a: &Poly) -> Poly {
        -a
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.ctx.standard_form(&(a * b))
    }
    fn from_rat(&self, r: &Rat) -> Poly {
        Poly::constant(r.clone())
    }
    fn scale_rat(&self, a: &Poly, r: &Rat) -> Poly {
        a.scale(r)
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }
    // accumulate the raw degree < 2 phi(f) - 1 products and run the
    // two-step reduction once for the whole term
    #[allow(clippy::needless_range_loop)]
    fn conv_term(&self, a: &[Poly], b: &[Poly], k: usize, j_min: usize) -> Poly {
        let width = 2 * self.ctx.totient.max(1) - 1;
        let mut acc = alloc::vec![Rat::zero(); width];
        for j in j_min..=k.min(a.len().saturating_sub(1)) {
            let i = k - j;
            if i >= b.len() || a[j].is_zero() || b[i].is_zero() {
                continue;
            }
            crate::poly::mul_acc_into(&mut acc, a[j].coeffs(), b[i].coeffs());
        }
        self.ctx.standard_form(&Poly::from_coeffs(acc))
    }
}
