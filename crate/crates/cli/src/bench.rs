//! Wall-clock benchmark over the staircase sequences (1, 2, ..., k).

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::Backend;

#[derive(Serialize)]
pub struct BenchRow {
    pub k: u64,
    pub waves: usize,
    pub seconds: f64,
    pub status: String,
}

/// Compute the wave list of (1..k) for k = 2..=max_k with the selected
/// backend, timing each row. Rows over the limit are marked TIMEOUT but
/// the run continues.
pub fn run(max_k: u64, backend: Backend, time_limit: Duration) -> Vec<BenchRow> {
    let mut rows = Vec::new();
    for k in 2..=max_k {
        let seq: Vec<u64> = (1..=k).collect();
        let start = Instant::now();
        let waves = match backend {
            Backend::Exact => denumerant::all_waves(&seq).map(|w| w.len()),
            Backend::Float => denumerant::float_all_waves(&seq).map(|w| w.len()),
        };
        let elapsed = start.elapsed();
        let (waves, status) = match waves {
            Ok(n) if elapsed <= time_limit => (n, "OK".to_string()),
            Ok(n) => (n, "TIMEOUT".to_string()),
            Err(e) => (0, format!("ERROR: {e}")),
        };
        rows.push(BenchRow { k, waves, seconds: elapsed.as_secs_f64(), status });
    }
    rows
}

pub fn render_table(rows: &[BenchRow]) -> String {
    let mut out = String::from("    k  waves   seconds  status\n");
    for r in rows {
        out.push_str(&format!("{:>5}  {:>5}  {:>8.3}  {}\n", r.k, r.waves, r.seconds, r.status));
    }
    out
}
