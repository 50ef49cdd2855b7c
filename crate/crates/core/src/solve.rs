//! Engine selection by maximum degree.

use crate::bounded::{choose_k, solve_bounded};
use crate::graph::Graph;
use crate::highdeg::solve_highdegree;
use crate::reduce::{Solution, SolveError};

/// Maximum degree from which the high-degree engine is used by default.
pub const HIGH_DEGREE_THRESHOLD: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EngineChoice {
    #[default]
    Auto,
    Bounded,
    HighDegree,
}

/// Colors used by default for maximum degree `delta`.
pub fn default_k(delta: usize, engine: EngineChoice) -> u32 {
    let half = delta.div_ceil(2) as u32;
    match resolve(delta, engine) {
        EngineChoice::HighDegree => half.max(6),
        _ => choose_k(delta),
    }
}

fn resolve(delta: usize, engine: EngineChoice) -> EngineChoice {
    match engine {
        EngineChoice::Auto if delta >= HIGH_DEGREE_THRESHOLD => EngineChoice::HighDegree,
        EngineChoice::Auto => EngineChoice::Bounded,
        e => e,
    }
}

/// Colors `g` with `max(ceil(delta / 2), 5)` linear forests.
pub fn solve(g: &Graph) -> Result<Solution, SolveError> {
    solve_with(g, EngineChoice::Auto, None)
}

/// Runs the chosen engine with `k` colors, or its default palette.
pub fn solve_with(g: &Graph, engine: EngineChoice, k: Option<u32>) -> Result<Solution, SolveError> {
    let delta = g.max_degree();
    let k = k.unwrap_or_else(|| default_k(delta, engine));
    match resolve(delta, engine) {
        EngineChoice::HighDegree => solve_highdegree(g, k),
        _ => solve_bounded(g, k),
    }
}
