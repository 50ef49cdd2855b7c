//! Timing runs over generated planar graphs.

use std::time::Instant;

use crate::gen::{gen_planar, GenError};
use crate::solve::solve;
use crate::verify::verify;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub colors: u32,
    pub seconds: f64,
    /// `seconds / (n log2 n)`, scaled by 1e9.
    pub ratio: f64,
    pub verified: bool,
}

/// Generates, solves and verifies one graph per size. Only the solve is
/// timed.
pub fn run(sizes: &[usize], seed: u64, delta: usize) -> Result<Vec<BenchRow>, GenError> {
    let mut rows = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let g = gen_planar(n, delta, seed)?;
        let start = Instant::now();
        let sol = solve(&g);
        let seconds = start.elapsed().as_secs_f64();
        let (colors, verified) = match &sol {
            Ok(s) => (s.coloring.k(), verify(&g, &s.coloring).valid),
            Err(_) => (0, false),
        };
        let nlogn = n as f64 * (n as f64).log2().max(1.0);
        rows.push(BenchRow {
            n,
            m: g.edge_count(),
            delta: g.max_degree(),
            colors,
            seconds,
            ratio: seconds / nlogn * 1e9,
            verified,
        });
    }
    Ok(rows)
}
