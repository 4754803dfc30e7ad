//! Per-instance benchmark statistics.

use std::time::Duration;

use serde::Serialize;

/// Wall time in milliseconds, rounded up.
pub fn ceil_ms(d: Duration) -> u64 {
    d.as_nanos().div_ceil(1_000_000) as u64
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BenchRecord {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub lister: String,
    pub triangulation: Option<String>,
    /// Time spent listing separators, summed over rounds.
    pub t_list_ms: u64,
    pub t_total_ms: u64,
    /// Separators listed in the first round.
    pub num_acs: usize,
    pub num_max: Option<usize>,
    pub num_all: Option<usize>,
    pub rounds: usize,
    pub num_atoms: usize,
    pub max_atom: usize,
}

/// Heuristic against standard on one instance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioRecord {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub t_heuristic_ms: u64,
    pub t_standard_ms: u64,
    pub max_atom_heuristic: usize,
    pub max_atom_standard: usize,
    /// `t_heuristic / t_standard`; a zero denominator is treated as 1 ms.
    pub rho1: f64,
    pub rho2: f64,
}

impl RatioRecord {
    pub fn new(heuristic: &BenchRecord, standard: &BenchRecord) -> Self {
        let rho2 = if standard.max_atom == 0 { 1.0 } else { heuristic.max_atom as f64 / standard.max_atom as f64 };
        RatioRecord {
            instance: heuristic.instance.clone(),
            n: heuristic.n,
            m: heuristic.m,
            t_heuristic_ms: heuristic.t_list_ms,
            t_standard_ms: standard.t_list_ms,
            max_atom_heuristic: heuristic.max_atom,
            max_atom_standard: standard.max_atom,
            rho1: heuristic.t_list_ms as f64 / standard.t_list_ms.max(1) as f64,
            rho2,
        }
    }
}

/// Median of a non-empty sample; `None` when empty.
pub fn median(values: &mut [f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    values.sort_by(f64::total_cmp);
    let k = values.len() / 2;
    Some(if values.len() % 2 == 1 { values[k] } else { (values[k - 1] + values[k]) / 2.0 })
}
