//! Text and JSON rendering of wave lists, plus the JSON parse side.
//!
//! Exact rationals are serialized as "num/den" strings so nothing is lost;
//! floats use scientific notation with 17 significant digits.

use std::collections::BTreeMap;

use denumerant::{
    float_combine, qp_combine, FloatWave, Poly, QuasiPolynomial, Rat,
};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// Combined quasi-polynomials beyond this many components are reported as
/// omitted instead of materialized.
pub const COMBINE_LIMIT: u64 = 100_000;

#[derive(Serialize, Deserialize, Debug)]
pub struct WavesDoc {
    pub sequence: Vec<u64>,
    pub backend: String,
    pub waves: Vec<WaveDto>,
    pub combined: Option<CombinedDto>,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct WaveDto {
    pub f: u64,
    pub period: u64,
    pub components: Vec<ComponentDto>,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct CombinedDto {
    pub period: u64,
    pub components: Vec<ComponentDto>,
}

#[derive(Serialize, Deserialize, Debug)]
pub struct ComponentDto {
    pub residue: u64,
    pub coeffs: Vec<String>,
}

pub fn rat_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rat(s: &str) -> Option<Rat> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let numer: BigInt = n.parse().ok()?;
    let denom: BigInt = d.parse().ok()?;
    if denom == BigInt::from(0) {
        return None;
    }
    Some(Rat::new(numer, denom))
}

pub fn float_string(v: f64) -> String {
    format!("{v:.16e}")
}

fn poly_coeff_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(rat_string).collect()
}

fn exact_components(qp: &QuasiPolynomial) -> Vec<ComponentDto> {
    qp.components()
        .iter()
        .enumerate()
        .map(|(k, p)| ComponentDto { residue: k as u64 + 1, coeffs: poly_coeff_strings(p) })
        .collect()
}

fn float_components(w: &FloatWave) -> Vec<ComponentDto> {
    w.components()
        .iter()
        .enumerate()
        .map(|(k, cs)| ComponentDto {
            residue: k as u64 + 1,
            coeffs: cs.iter().copied().map(float_string).collect(),
        })
        .collect()
}

fn combined_period(waves: impl Iterator<Item = u64>) -> Option<u64> {
    let mut period: u64 = 1;
    for f in waves {
        period = num_integer::lcm(period, f);
        if period > COMBINE_LIMIT {
            return None;
        }
    }
    Some(period)
}

/// Assemble the JSON document for the exact backend. The combined section
/// is omitted (with a stderr note) when its period exceeds the limit.
pub fn exact_doc(sequence: &[u64], waves: &BTreeMap<u64, QuasiPolynomial>) -> WavesDoc {
    let wave_dtos = waves
        .iter()
        .map(|(&f, w)| WaveDto { f, period: w.period(), components: exact_components(w) })
        .collect();
    let combined = match combined_period(waves.keys().copied()) {
        Some(_) => {
            let qp = qp_combine(waves.values()).expect("period under limit");
            Some(CombinedDto { period: qp.period(), components: exact_components(&qp) })
        }
        None => {
            eprintln!("note: combined period exceeds {COMBINE_LIMIT}; combined form omitted");
            None
        }
    };
    WavesDoc {
        sequence: sequence.to_vec(),
        backend: "exact".into(),
        waves: wave_dtos,
        combined,
    }
}

pub fn float_doc(sequence: &[u64], waves: &BTreeMap<u64, FloatWave>) -> WavesDoc {
    let wave_dtos = waves
        .iter()
        .map(|(&f, w)| WaveDto { f, period: w.period(), components: float_components(w) })
        .collect();
    let combined = match combined_period(waves.keys().copied()) {
        Some(_) => {
            let cw = float_combine(waves.values()).expect("period under limit");
            Some(CombinedDto { period: cw.period(), components: float_components(&cw) })
        }
        None => {
            eprintln!("note: combined period exceeds {COMBINE_LIMIT}; combined form omitted");
            None
        }
    };
    WavesDoc {
        sequence: sequence.to_vec(),
        backend: "float".into(),
        waves: wave_dtos,
        combined,
    }
}

/// Rebuild exact quasi-polynomials from a parsed document; None if any
/// coefficient fails to parse or the backend is not exact.
pub fn doc_to_exact_waves(doc: &WavesDoc) -> Option<BTreeMap<u64, QuasiPolynomial>> {
    if doc.backend != "exact" {
        return None;
    }
    let mut out = BTreeMap::new();
    for w in &doc.waves {
        let mut comps = Vec::with_capacity(w.components.len());
        for c in &w.components {
            let coeffs = c.coeffs.iter().map(|s| parse_rat(s)).collect::<Option<Vec<_>>>()?;
            comps.push(Poly::from_coeffs(coeffs));
        }
        if comps.len() as u64 != w.period {
            return None;
        }
        out.insert(w.f, QuasiPolynomial::new(comps));
    }
    Some(out)
}

// ---- text rendering ----

pub fn render_exact_text(waves: &BTreeMap<u64, QuasiPolynomial>) -> String {
    let mut out = String::new();
    for (f, w) in waves {
        out.push_str(&format!("W_{f} (period {}):\n", w.period()));
        for (k, p) in w.components().iter().enumerate() {
            out.push_str(&format!("  P_{}(t) = {}\n", k + 1, p.display("t")));
        }
    }
    match combined_period(waves.keys().copied()) {
        Some(_) => {
            let qp = qp_combine(waves.values()).expect("period under limit");
            out.push_str(&format!("combined (period {}):\n", qp.period()));
            for (k, p) in qp.components().iter().enumerate() {
                out.push_str(&format!("  P_{}(t) = {}\n", k + 1, p.display("t")));
            }
        }
        None => {
            eprintln!("note: combined period exceeds {COMBINE_LIMIT}; combined form omitted");
        }
    }
    out
}

fn float_poly_text(coeffs: &[f64]) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if *c == 0.0 && coeffs.len() > 1 {
            continue;
        }
        let term = match k {
            0 => format!("{c}"),
            1 => format!("{c}*t"),
            _ => format!("{c}*t^{k}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn render_float_text(waves: &BTreeMap<u64, FloatWave>) -> String {
    let mut out = String::new();
    for (f, w) in waves {
        out.push_str(&format!(
            "W_{f} (period {}, max imag residual {:.3e}):\n",
            w.period(),
            w.max_imag_residual()
        ));
        for (k, cs) in w.components().iter().enumerate() {
            out.push_str(&format!("  P_{}(t) = {}\n", k + 1, float_poly_text(cs)));
        }
    }
    match combined_period(waves.keys().copied()) {
        Some(_) => {
            let cw = float_combine(waves.values()).expect("period under limit");
            out.push_str(&format!("combined (period {}):\n", cw.period()));
            for (k, cs) in cw.components().iter().enumerate() {
                out.push_str(&format!("  P_{}(t) = {}\n", k + 1, float_poly_text(cs)));
            }
        }
        None => {
            eprintln!("note: combined period exceeds {COMBINE_LIMIT}; combined form omitted");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use denumerant::rat;

    #[test]
    fn rat_strings_round_trip() {
        for r in [rat(127, 216), rat(-1, 24), rat(0, 1), rat(5, 1)] {
            assert_eq!(parse_rat(&rat_string(&r)).unwrap(), r);
        }
        assert_eq!(parse_rat("9"), Some(rat(9, 1)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("x/2"), None);
    }

    #[test]
    fn float_strings_have_17_digits_and_round_trip() {
        for v in [0.5879629629629629, -1.0 / 24.0, 0.0, 88971554961.0] {
            let s = float_string(v);
            assert_eq!(s.parse::<f64>().unwrap(), v, "{s}");
        }
        assert!(float_string(0.5).starts_with("5.0000000000000000e-1"));
    }
}
