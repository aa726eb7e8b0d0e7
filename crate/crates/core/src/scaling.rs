//! Wall-clock measurements for the growth of the irreducible recursion and the
//! standard-context construction.

use std::hint::black_box;
use std::time::{Duration, Instant};

use crate::error::Result;
use crate::fca::standard_context_with;
use crate::irreducibles::join_irreducibles;
use crate::par::Execution;

/// Fastest of `repeats` runs of `f` (at least one).
pub fn min_time<T>(repeats: usize, mut f: impl FnMut() -> Result<T>) -> Result<Duration> {
    let mut best = Duration::MAX;
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        black_box(f()?);
        best = best.min(start.elapsed());
    }
    Ok(best)
}

pub fn time_join_irreducibles(n: u32, repeats: usize) -> Result<Duration> {
    min_time(repeats, || join_irreducibles(n))
}

pub fn time_standard_context(n: u32, repeats: usize, exec: Execution) -> Result<Duration> {
    min_time(repeats, || standard_context_with(n, exec))
}

/// Slope of `log t` against `log n` between two measurements.
pub fn loglog_slope(n1: u32, t1: Duration, n2: u32, t2: Duration) -> f64 {
    (t2.as_secs_f64() / t1.as_secs_f64()).ln() / (f64::from(n2) / f64::from(n1)).ln()
}

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub n: u32,
    pub join_irreducibles: Duration,
    pub standard_context: Duration,
    /// Slopes against the previous row, absent for the first.
    pub join_slope: Option<f64>,
    pub context_slope: Option<f64>,
}

/// Times both constructions for each `n` and fits slopes between consecutive sizes.
pub fn bench_table(ns: &[u32], repeats: usize, exec: Execution) -> Result<Vec<BenchRow>> {
    let mut rows: Vec<BenchRow> = Vec::with_capacity(ns.len());
    for &n in ns {
        let ji = time_join_irreducibles(n, repeats)?;
        let sc = time_standard_context(n, repeats, exec)?;
        let (join_slope, context_slope) = match rows.last() {
            Some(prev) => (
                Some(loglog_slope(prev.n, prev.join_irreducibles, n, ji)),
                Some(loglog_slope(prev.n, prev.standard_context, n, sc)),
            ),
            None => (None, None),
        };
        rows.push(BenchRow {
            n,
            join_irreducibles: ji,
            standard_context: sc,
            join_slope,
            context_slope,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_power_law() {
        let t1 = Duration::from_millis(10);
        let t2 = Duration::from_millis(80);
        assert!((loglog_slope(10, t1, 20, t2) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn single_size_has_no_slope() {
        let rows = bench_table(&[8], 1, Execution::Sequential).unwrap();
        assert_eq!(rows.len(), 1);
        assert!(rows[0].join_slope.is_none() && rows[0].context_slope.is_none());
        let rows = bench_table(&[8, 16], 1, Execution::Sequential).unwrap();
        assert!(rows[1].join_slope.is_some());
    }
}
