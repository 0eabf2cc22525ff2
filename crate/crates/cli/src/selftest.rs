//! Built-in consistency checks behind the `selftest` subcommand: the
//! golden (1,3,6) wave values, the cyclotomic product identity, series
//! round trips, and random sequences cross-checked against the counting
//! oracle.

use denumerant::{
    all_waves, cyclotomic_poly, divisors, dp_count, rat, rat_int, ts_exp, ts_log, Poly, Rat,
    RationalField, TruncSeries,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

type Step = Box<dyn FnOnce(&mut ChaCha8Rng) -> Result<usize, String>>;

pub struct SelftestReport {
    pub checks_run: usize,
    pub failure: Option<String>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn golden_example_waves() -> Result<usize, String> {
    let waves = all_waves(&[1, 3, 6]).map_err(|e| e.to_string())?;
    let expect: &[(u64, Vec<Poly>)] = &[
        (1, vec![Poly::from_coeffs(vec![rat(127, 216), rat(5, 18), rat(1, 36)])]),
        (2, vec![Poly::constant(rat(-1, 24)), Poly::constant(rat(1, 24))]),
        (
            3,
            vec![
                Poly::constant(rat(-1, 54)),
                Poly::from_coeffs(vec![rat(-29, 108), rat(-1, 18)]),
                Poly::from_coeffs(vec![rat(31, 108), rat(1, 18)]),
            ],
        ),
        (
            6,
            vec![
                Poly::constant(rat(1, 6)),
                Poly::constant(rat(1, 12)),
                Poly::constant(rat(-1, 12)),
                Poly::constant(rat(-1, 6)),
                Poly::constant(rat(-1, 12)),
                Poly::constant(rat(1, 12)),
            ],
        ),
    ];
    let mut checks = 0;
    for (f, comps) in expect {
        let w = waves.get(f).ok_or_else(|| format!("golden waves: W_{f} missing"))?;
        for (k, p) in comps.iter().enumerate() {
            if w.component(k as u64 + 1) != p {
                return Err(format!("golden waves: W_{f} component {} mismatch", k + 1));
            }
            checks += 1;
        }
    }
    let total: Rat = waves.values().map(|w| w.eval(14)).sum();
    if total != rat_int(9) {
        return Err(format!("golden waves: d(14) = {total}, want 9"));
    }
    Ok(checks + 1)
}

/// The product identity prod_{d | n} Phi_d = x^n - 1, parameterized over
/// the Phi provider so corruption is detectable in tests.
pub fn cyclotomic_identity_check<F>(phi: F, max_n: u64) -> Result<usize, String>
where
    F: Fn(u64) -> Poly,
{
    for n in 1..=max_n {
        let mut prod = Poly::one();
        for d in divisors(n) {
            prod = &prod * &phi(d);
        }
        let mut want = vec![rat_int(0); n as usize + 1];
        want[0] = rat_int(-1);
        want[n as usize] = rat_int(1);
        if prod != Poly::from_coeffs(want) {
            return Err(format!("cyclotomic identity: prod over divisors of {n} != x^{n} - 1"));
        }
    }
    Ok(max_n as usize)
}

fn exp_log_round_trips(rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let field = RationalField;
    let mut checks = 0;
    for _ in 0..10 {
        let mut coeffs = vec![Rat::one()];
        for _ in 1..32 {
            coeffs.push(rat(rng.gen_range(-9..=9), rng.gen_range(1..=6)));
        }
        let p = TruncSeries::from_coeffs(coeffs);
        let h = ts_log(&field, &p).map_err(|e| e.to_string())?;
        let back = ts_exp(&field, &h).map_err(|e| e.to_string())?;
        if back != p {
            return Err("series round trip: exp(log(p)) != p".into());
        }
        checks += 1;
    }
    Ok(checks)
}

fn random_oracle_sequences(rng: &mut ChaCha8Rng) -> Result<usize, String> {
    let mut checks = 0;
    for _ in 0..25 {
        let seq = loop {
            let n = rng.gen_range(2..=5usize);
            let mut seq: Vec<u64> = Vec::new();
            while seq.len() < n {
                let a = rng.gen_range(1..=12u64);
                if !seq.contains(&a) {
                    seq.push(a);
                }
            }
            let g = seq.iter().fold(0u64, |acc, a| acc.gcd(a));
            let l = seq.iter().fold(1u64, |acc, a| acc.lcm(a));
            if g == 1 && l <= 1500 {
                break seq;
            }
        };
        let t_max = 3 * seq.iter().fold(1u64, |acc, a| acc.lcm(a));
        let table = dp_count(&seq, t_max);
        let waves = all_waves(&seq).map_err(|e| e.to_string())?;
        for t in 0..=t_max {
            let total: Rat = waves.values().map(|w| w.eval(t)).sum();
            if !total.is_integer() || total.to_integer() != BigInt::from(table.count(t).clone()) {
                return Err(format!(
                    "oracle equivalence: seq {seq:?} at t = {t}: waves give {total}, oracle {}",
                    table.count(t)
                ));
            }
        }
        checks += 1;
    }
    Ok(checks)
}

pub fn run() -> SelftestReport {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e1f);
    let mut checks_run = 0;
    let steps: Vec<Step> = vec![
        Box::new(|_| golden_example_waves()),
        Box::new(|_| cyclotomic_identity_check(|f| cyclotomic_poly(f).expect("f >= 1"), 50)),
        Box::new(exp_log_round_trips),
        Box::new(random_oracle_sequences),
    ];
    for step in steps {
        match step(&mut rng) {
            Ok(n) => checks_run += n,
            Err(msg) => return SelftestReport { checks_run, failure: Some(msg) },
        }
    }
    SelftestReport { checks_run, failure: None }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selftest_passes_on_healthy_build() {
        let report = run();
        assert!(report.passed(), "{:?}", report.failure);
        assert!(report.checks_run > 80, "only {} checks ran", report.checks_run);
    }

    #[test]
    fn corrupted_phi_table_is_detected() {
        // fault injection: Phi_6 deliberately wrong
        let corrupted = |f: u64| {
            if f == 6 {
                Poly::from_i64(&[1, 1, 1])
            } else {
                cyclotomic_poly(f).unwrap()
            }
        };
        let err = cyclotomic_identity_check(corrupted, 10).unwrap_err();
        assert!(err.contains("cyclotomic identity"), "{err}");
    }
}
