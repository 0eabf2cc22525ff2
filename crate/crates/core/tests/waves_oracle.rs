//! Cross-checks of the wave pipelines against independent oracles: the
//! dynamic-programming counter, direct truncated products for the Todd
//! sequences, and complex-float evaluation of the primitive-root identity.

use denumerant::{
    all_waves, cyclotomic_poly, divisors, dp_count, float_all_waves, gtodd_sequence,
    primroot_sum_check, rat, rat_int, rat_to_f64, rat_u64, ts_mul, CycCtx, GtdSpec, Poly,
    Rat, RationalField, Ring, TruncSeries,
};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

// ---- direct-product oracle for Todd sequences (no log/exp involved) ----

// reciprocal of a unit series by forward substitution
fn recip<R: Ring>(ring: &R, g: &TruncSeries<R::Elem>) -> TruncSeries<R::Elem> {
    assert!(g.coeff(0) == &ring.one());
    let d = g.order();
    let mut q = vec![ring.one()];
    for k in 1..d {
        let mut acc = ring.zero();
        for j in 1..=k {
            acc = ring.add(&acc, &ring.mul(g.coeff(j), &q[k - j]));
        }
        q.push(ring.neg(&acc));
    }
    TruncSeries::from_coeffs(q)
}

// g(bs) = 1 / sum_k (bs)^k/(k+1)!
fn g_direct<R: Ring>(ring: &R, b: i64, d: usize) -> TruncSeries<R::Elem> {
    let mut denom = Vec::with_capacity(d);
    let mut fact = Rat::one(); // (k+1)!
    let mut pw = Rat::one(); // b^k
    for k in 0..d {
        fact *= rat_u64(k as u64 + 1);
        if k > 0 {
            pw *= rat_int(b);
        }
        denom.push(ring.from_rat(&(&pw / &fact)));
    }
    recip(ring, &TruncSeries::from_coeffs(denom))
}

// g(bs, y) = 1 / (1 - y sum_{k>=1} (bs)^k/k!)
fn g_y_direct<R: Ring>(ring: &R, b: i64, y: &R::Elem, d: usize) -> TruncSeries<R::Elem> {
    let mut denom = vec![ring.one()];
    let mut fact = Rat::one();
    let mut pw = Rat::one();
    for k in 1..d {
        fact *= rat_u64(k as u64);
        pw *= rat_int(b);
        denom.push(ring.neg(&ring.scale_rat(y, &(&pw / &fact))));
    }
    recip(ring, &TruncSeries::from_coeffs(denom))
}

// e^{as} summed directly
fn exp_direct<R: Ring>(ring: &R, a: &Rat, d: usize) -> TruncSeries<R::Elem> {
    let mut coeffs = Vec::with_capacity(d);
    let mut term = Rat::one();
    for k in 0..d {
        if k > 0 {
            term = &term * a / rat_u64(k as u64);
        }
        coeffs.push(ring.from_rat(&term));
    }
    TruncSeries::from_coeffs(coeffs)
}

fn gtodd_oracle<R: Ring>(ring: &R, spec: &GtdSpec<R::Elem>) -> TruncSeries<R::Elem> {
    let d = spec.order;
    let mut acc = exp_direct(ring, &spec.shift, d);
    for &b in &spec.plain {
        acc = ts_mul(ring, &acc, &g_direct(ring, b, d)).unwrap();
    }
    for (bs, y) in &spec.mixed {
        for &b in bs {
            acc = ts_mul(ring, &acc, &g_y_direct(ring, b, y, d)).unwrap();
        }
    }
    acc
}

#[test]
fn gtodd_matches_direct_product_over_rationals() {
    let field = RationalField;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..30 {
        let d = rng.gen_range(1..=16);
        let n_plain = rng.gen_range(0..=3);
        let n_groups = rng.gen_range(0..=2);
        let plain: Vec<i64> = (0..n_plain)
            .map(|_| {
                let b = rng.gen_range(1..=8i64);
                if rng.gen_bool(0.3) {
                    -b
                } else {
                    b
                }
            })
            .collect();
        let mixed: Vec<(Vec<i64>, Rat)> = (0..n_groups)
            .map(|_| {
                let bs: Vec<i64> =
                    (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(1..=6i64)).collect();
                (bs, rat(rng.gen_range(-5..=5), rng.gen_range(1..=4)))
            })
            .collect();
        let shift = rat(rng.gen_range(-3..=3), 1);
        let spec = GtdSpec { shift, plain, mixed, order: d };
        let fast = gtodd_sequence(&field, &spec).unwrap();
        let slow = gtodd_oracle(&field, &spec);
        assert_eq!(fast, slow, "spec {spec:?}");
        assert_eq!(fast.coeff(0), &Rat::one());
    }
}

#[test]
fn gtodd_matches_direct_product_over_quotient_rings() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for f in 2u64..=6 {
        let ctx = CycCtx::new(f).unwrap();
        let ring = ctx.ring();
        for _ in 0..8 {
            let d = rng.gen_range(1..=12);
            let plain: Vec<i64> = (0..rng.gen_range(0..=2)).map(|_| rng.gen_range(1..=6)).collect();
            let mixed: Vec<(Vec<i64>, Poly)> = (0..rng.gen_range(0..=2))
                .map(|_| {
                    let bs: Vec<i64> =
                        (0..rng.gen_range(1..=2)).map(|_| rng.gen_range(1..=5i64)).collect();
                    let y = Poly::from_coeffs(
                        (0..ctx.totient()).map(|_| rat(rng.gen_range(-3..=3), 2)).collect(),
                    );
                    (bs, y)
                })
                .collect();
            let spec = GtdSpec { shift: Rat::zero(), plain, mixed, order: d };
            let fast = gtodd_sequence(&ring, &spec).unwrap();
            let slow = gtodd_oracle(&ring, &spec);
            assert_eq!(fast, slow, "f={f} spec {spec:?}");
        }
    }
}

// ---- wave pipelines against the DP counter ----

fn lcm_of(seq: &[u64]) -> u64 {
    seq.iter().fold(1u64, |acc, a| acc.lcm(a))
}

fn random_sequence(rng: &mut ChaCha8Rng, max_n: usize, max_a: u64, max_lcm: u64) -> Vec<u64> {
    loop {
        let n = rng.gen_range(2..=max_n);
        let mut seq = Vec::with_capacity(n);
        while seq.len() < n {
            let a = rng.gen_range(1..=max_a);
            if !seq.contains(&a) {
                seq.push(a);
            }
        }
        let g = seq.iter().fold(0u64, |acc, a| acc.gcd(a));
        if g == 1 && lcm_of(&seq) <= max_lcm {
            return seq;
        }
    }
}

#[test]
fn wave_sum_equals_dp_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..25 {
        let seq = random_sequence(&mut rng, 5, 12, 3000);
        let t_max = 3 * lcm_of(&seq);
        let table = dp_count(&seq, t_max);
        let waves = all_waves(&seq).unwrap();
        for t in 0..=t_max {
            let total: Rat = waves.values().map(|w| w.eval(t)).sum();
            assert!(total.is_integer(), "seq {seq:?} t {t}: {total}");
            assert!(!total.is_negative(), "seq {seq:?} t {t}: {total}");
            assert_eq!(
                total.to_integer(),
                BigInt::from(table.count(t).clone()),
                "seq {seq:?} t {t}"
            );
        }
    }
    // the spec'd fixed case
    let waves = all_waves(&[2, 3]).unwrap();
    assert_eq!(waves.keys().copied().collect::<Vec<_>>(), vec![1, 2, 3]);
    let table = dp_count(&[2, 3], 50);
    for t in 0..=50 {
        let total: Rat = waves.values().map(|w| w.eval(t)).sum();
        assert_eq!(total.to_integer(), BigInt::from(table.count(t).clone()));
    }
}

#[test]
fn float_waves_track_exact_waves() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..15 {
        let seq = random_sequence(&mut rng, 6, 12, u64::MAX);
        let exact = all_waves(&seq).unwrap();
        let float = float_all_waves(&seq).unwrap();
        assert_eq!(exact.len(), float.len());
        for (f, fw) in &float {
            let ew = &exact[f];
            for i in 1..=*f {
                let fc = fw.component(i);
                let ec = ew.component(i);
                for (m, c) in fc.iter().enumerate() {
                    let e = rat_to_f64(&ec.coeff(m));
                    assert!((c - e).abs() < 1e-6, "seq {seq:?} f={f} i={i} m={m}: {c} vs {e}");
                }
            }
        }
    }
}

#[test]
fn float_tracks_exact_at_large_t() {
    // staircase sequences evaluated far out; absolute agreement is only
    // possible while the value is below the f64 integer range
    for k in 2u64..=20 {
        let seq: Vec<u64> = (1..=k).collect();
        let exact = denumerant::denumerant(&seq, 1_000_000).unwrap();
        let (approx, _) = denumerant::float_denumerant(&seq, 1_000_000).unwrap();
        let exact_f = rat_to_f64(&exact);
        let rel = ((approx - exact_f) / exact_f).abs();
        assert!(rel < 1e-9, "k={k}: {approx} vs {exact_f} (rel {rel:.2e})");
        // absolute agreement needs the value well inside 2^53
        if k <= 3 {
            assert!((approx - exact_f).abs() < 1.0, "k={k}: {approx} vs {exact_f}");
        }
    }
}

#[test]
fn float_imag_residuals_stay_small_for_large_periods() {
    // sequences whose divisor sets reach up to f = 50
    for seq in [vec![1u64, 50], vec![1, 47], vec![3, 49], vec![2, 45], vec![1, 44, 11]] {
        let float = float_all_waves(&seq).unwrap();
        for (f, w) in &float {
            assert!(
                w.max_imag_residual() < 1e-8,
                "seq {seq:?} f={f}: residual {}",
                w.max_imag_residual()
            );
        }
    }
}

// ---- cyclotomic identities ----

#[test]
fn cyclotomic_product_identity_small_range() {
    // the full n <= 200 sweep runs in the acceptance suite
    for n in 1u64..=60 {
        let mut prod = Poly::one();
        for d in divisors(n) {
            prod = &prod * &cyclotomic_poly(d).unwrap();
        }
        let mut want = vec![rat_int(0); n as usize + 1];
        want[0] = rat_int(-1);
        want[n as usize] = rat_int(1);
        assert_eq!(prod, Poly::from_coeffs(want), "n={n}");
    }
}

#[test]
fn inverse_identity_all_residues_up_to_100() {
    for f in 2u64..=100 {
        let mut ctx = CycCtx::new(f).unwrap();
        ctx.precompute_inverses(1..f);
        let ring = ctx.ring();
        for a in 1..f {
            let v = ctx.inverse_one_minus(a).unwrap();
            let one_minus = &Poly::one() - &Poly::monomial(Rat::one(), a as usize);
            assert!(ring.mul(&v, &one_minus).is_one(), "f={f} a={a}");
        }
    }
}

#[test]
fn primroot_sum_identity_numeric() {
    // three fixed rational functions, f = 1..12, both sides within 1e-9
    type TestFn = fn(Complex64) -> Complex64;
    let funcs: [(&str, TestFn); 3] = [
        ("1/(2-x)", |z| Complex64::new(1.0, 0.0) / (Complex64::new(2.0, 0.0) - z)),
        ("x^2/(x+3)", |z| z * z / (z + Complex64::new(3.0, 0.0))),
        ("(x^2+1)/(x-5)", |z| (z * z + Complex64::new(1.0, 0.0)) / (z - Complex64::new(5.0, 0.0))),
    ];
    for f in 1u64..=12 {
        for (name, func) in &funcs {
            let (lhs, rhs) = primroot_sum_check(f, func).unwrap();
            assert!((lhs - rhs).norm() < 1e-9, "f={f} F={name}: {lhs} vs {rhs}");
        }
    }
}
