//! Timing harness for the longest-path table.
//!
//! For every `(size, seed)` the instance is generated and `σ = LDFS+(π)` is
//! computed untimed; then the table fill and the reconstruction are timed
//! separately. Records come out in `(size, seed)` order whether or not the
//! pool is used.

use std::ops::Range;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use cocomp_core::generators::{generate, Family, GenSpec};
use cocomp_core::graph::check_path;
use cocomp_core::longest_path::{build_dp, extract, AugmentedOrdering, DpOptions};
use cocomp_core::search::ldfs_plus;
use cocomp_core::{Error, Result};

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub family: Family,
    pub sizes: Vec<usize>,
    pub seeds: Range<u64>,
    pub p: f64,
    pub checks: bool,
    pub parallel: bool,
    pub max_n: usize,
}

/// One CSV row. Column order is the field order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub n: usize,
    pub family: &'static str,
    pub p: f64,
    pub seed: u64,
    pub dp_build_ns: u64,
    pub reconstruct_ns: u64,
    pub length: usize,
    pub checks: bool,
}

pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    if let Some(&n) = config.sizes.iter().find(|&&n| n > config.max_n) {
        return Err(Error::SizeLimit {
            limit_name: "table",
            n,
            limit: config.max_n,
        });
    }
    let jobs: Vec<(usize, u64)> = config
        .sizes
        .iter()
        .flat_map(|&n| config.seeds.clone().map(move |s| (n, s)))
        .collect();
    if config.parallel {
        jobs.par_iter().map(|&(n, s)| measure(config, n, s)).collect()
    } else {
        jobs.iter().map(|&(n, s)| measure(config, n, s)).collect()
    }
}

fn measure(config: &BenchConfig, n: usize, seed: u64) -> Result<BenchRecord> {
    let (g, pi) = generate(&GenSpec::new(config.family, n, config.p, seed))?;
    let sigma = ldfs_plus(&g, &pi)?;
    let aug = AugmentedOrdering::new(&g, sigma)?;
    let opts = DpOptions {
        verify: config.checks,
        max_n: config.max_n,
    };

    let t0 = Instant::now();
    let table = build_dp(&g, &aug, &opts)?;
    let t1 = Instant::now();
    let path = extract(&aug, &table)?;
    let t2 = Instant::now();

    if let Err(v) = check_path(&g, path.vertices()) {
        return Err(Error::Internal(format!("n={n} seed={seed}: {v}")));
    }
    Ok(BenchRecord {
        n,
        family: config.family.name(),
        p: config.p,
        seed,
        dp_build_ns: nanos(t1 - t0),
        reconstruct_ns: nanos(t2 - t1),
        length: path.len(),
        checks: config.checks,
    })
}

fn nanos(d: std::time::Duration) -> u64 {
    u64::try_from(d.as_nanos()).unwrap_or(u64::MAX)
}

pub fn to_csv(records: &[BenchRecord]) -> std::result::Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if records.is_empty() {
        w.write_record(["n", "family", "p", "seed", "dp_build_ns", "reconstruct_ns", "length", "checks"])?;
    }
    for r in records {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn median(xs: &mut [f64]) -> Option<f64> {
    if xs.is_empty() {
        return None;
    }
    xs.sort_by(f64::total_cmp);
    let m = xs.len() / 2;
    Some(if xs.len() % 2 == 1 {
        xs[m]
    } else {
        (xs[m - 1] + xs[m]) / 2.0
    })
}

/// `(n, median dp-build seconds)` per distinct size, in increasing `n`.
pub fn medians(records: &[BenchRecord]) -> Vec<(usize, f64)> {
    let mut sizes: Vec<usize> = records.iter().map(|r| r.n).collect();
    sizes.sort_unstable();
    sizes.dedup();
    sizes
        .into_iter()
        .filter_map(|n| {
            let mut t: Vec<f64> = records
                .iter()
                .filter(|r| r.n == n)
                .map(|r| r.dp_build_ns as f64 * 1e-9)
                .collect();
            median(&mut t).map(|m| (n, m))
        })
        .collect()
}

/// Least-squares slope of `ln t` against `ln n`. `None` with fewer than two
/// sizes or any non-positive value.
pub fn loglog_slope(points: &[(usize, f64)]) -> Option<f64> {
    if points.len() < 2 || points.iter().any(|&(n, t)| n == 0 || t <= 0.0) {
        return None;
    }
    let xs: Vec<f64> = points.iter().map(|&(n, _)| (n as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|&(_, t)| t.ln()).collect();
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// Human-readable summary: medians, consecutive ratios against `(n2/n1)^4`,
/// and the fitted slope when there are at least two sizes.
pub fn summary(records: &[BenchRecord]) -> Vec<String> {
    let med = medians(records);
    let mut lines: Vec<String> = med
        .iter()
        .map(|(n, t)| format!("median dp_build n={n} {t:.6}s"))
        .collect();
    for w in med.windows(2) {
        let ((n1, t1), (n2, t2)) = (w[0], w[1]);
        let theory = (n2 as f64 / n1 as f64).powi(4);
        lines.push(format!("ratio n={n1}->{n2} observed {:.2} theoretical {theory:.2}", t2 / t1));
    }
    if let Some(s) = loglog_slope(&med) {
        lines.push(format!("loglog slope {s:.3}"));
    }
    lines
}
