//! Parity-density tables: the proportion delta_k(M) of indices 1..=M at
//! which the (4k, k)-singular overpartition count is even.

use serde::Serialize;

use crate::fps_gf2::{eta_power, BitSeries, SeriesError};

/// Default cap on expansion length for density runs.
pub const DEFAULT_BUDGET: usize = 200_000;

#[derive(Debug, thiserror::Error)]
pub enum DensityError {
    #[error("expansion budget exceeded: need {need} terms, budget {budget}")]
    Budget { need: usize, budget: usize },
    #[error("k must be positive")]
    ZeroK,
    #[error("M must be positive")]
    ZeroM,
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// One table cell: zeros out of `total` sampled indices, with an exact
/// decimal rendering when the denominator allows one.
#[derive(Debug, Clone, Serialize)]
pub struct DensitySample {
    pub m: u64,
    pub zeros: u64,
    pub total: u64,
    pub rendered: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct DensityReport {
    pub k: u64,
    /// The series whose parity is sampled.
    pub source: String,
    pub samples: Vec<DensitySample>,
}

/// The parity of the (4k, k) count as a series: f_k^3/f_1 mod 2, except
/// k = 1 where the generating function collapses to f_1^2.
pub fn parity_series(k: u64, n: usize) -> Result<BitSeries, DensityError> {
    if k == 0 {
        return Err(DensityError::ZeroK);
    }
    if k == 1 {
        return Ok(eta_power(1, 2, n)?);
    }
    Ok(eta_power(k as usize, 3, n)?.mul(&eta_power(1, -1, n)?)?)
}

pub fn source_label(k: u64) -> String {
    if k == 1 {
        "f1^2".to_string()
    } else {
        format!("f{k}^3/f1")
    }
}

/// Exact decimal rendering of zeros/m when m divides a power of ten,
/// with trailing zeros trimmed; otherwise six rounded digits.
pub fn render_delta(zeros: u64, m: u64) -> String {
    if zeros == m {
        return "1".to_string();
    }
    if zeros == 0 {
        return "0".to_string();
    }
    let mut pow = 1u64;
    for digits in 1..=9u32 {
        pow *= 10;
        if pow % m == 0 {
            let scaled = zeros * (pow / m);
            let mut s = format!("0.{:0width$}", scaled, width = digits as usize);
            while s.ends_with('0') {
                s.pop();
            }
            return s;
        }
    }
    // round half to even at six digits
    let num = zeros as u128 * 1_000_000;
    let (q, r) = (num / m as u128, num % m as u128);
    let scaled = match (2 * r).cmp(&(m as u128)) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal => q + (q & 1),
    };
    let mut s = format!("0.{:06}", scaled);
    while s.ends_with('0') {
        s.pop();
    }
    s
}

/// Density table for each k over the sample sizes in `ms`, expanding each
/// parity series once to max(ms) + 1 terms.
pub fn density_grid(
    ks: &[u64],
    ms: &[usize],
    budget: usize,
) -> Result<Vec<DensityReport>, DensityError> {
    let max_m = *ms.iter().max().ok_or(DensityError::ZeroM)?;
    if ms.iter().any(|&m| m == 0) {
        return Err(DensityError::ZeroM);
    }
    let need = max_m + 1;
    if need > budget {
        return Err(DensityError::Budget { need, budget });
    }
    ks.iter()
        .map(|&k| {
            let series = parity_series(k, need)?;
            let samples = ms
                .iter()
                .map(|&m| {
                    let (zeros, total) = series.zero_density(m)?;
                    Ok(DensitySample {
                        m: m as u64,
                        zeros,
                        total,
                        rendered: render_delta(zeros, total),
                    })
                })
                .collect::<Result<Vec<_>, DensityError>>()?;
            Ok(DensityReport {
                k,
                source: source_label(k),
                samples,
            })
        })
        .collect()
}

pub const REMARK_KS: [u64; 6] = [2, 6, 10, 14, 18, 22];
pub const REMARK_MS: [usize; 4] = [100, 1000, 10_000, 100_000];

/// The published 6 x 4 density grid: k = 2*ell for odd ell <= 11, sampled
/// at powers of ten up to 10^5.
pub fn remark_table() -> Result<Vec<DensityReport>, DensityError> {
    density_grid(&REMARK_KS, &REMARK_MS, DEFAULT_BUDGET)
}

/// Render a grid of reports as a plain text table, one row per sample
/// size, one column per k.
pub fn render_table(reports: &[DensityReport]) -> String {
    let mut out = String::new();
    out.push_str("M");
    for r in reports {
        out.push_str(&format!("\tdelta_{}", r.k));
    }
    out.push('\n');
    let rows = reports.first().map_or(0, |r| r.samples.len());
    for i in 0..rows {
        out.push_str(&reports[0].samples[i].m.to_string());
        for r in reports {
            out.push('\t');
            out.push_str(&r.samples[i].rendered);
        }
        out.push('\n');
    }
    out
}
