//! Graph surgery, the reduction trace and its replay.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::coloring::{Color, LinearColoring};
use crate::config::Configuration;
use crate::extend::{extend, ExtendError};
use crate::graph::{Edge, Graph, VertexId};

/// One reduction: the configuration it removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionStep {
    pub config: Configuration,
}

impl ReductionStep {
    pub fn removed_edges(&self) -> Vec<Edge> {
        self.config.removed_edges()
    }

    pub fn added_edges(&self) -> Vec<Edge> {
        self.config.added_edges()
    }
}

/// Reductions in the order they were applied.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
}

impl ReductionTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReduceError {
    #[error("configuration {0} does not match the graph")]
    StaleConfiguration(Configuration),
}

/// Removes (and for some shapes adds) the edges of `cfg` in `g`.
pub fn apply_reduction(
    g: &mut Graph,
    cfg: Configuration,
    k: u32,
) -> Result<ReductionStep, ReduceError> {
    if !cfg.holds_in(g, k) {
        return Err(ReduceError::StaleConfiguration(cfg));
    }
    for e in cfg.removed_edges() {
        g.remove_edge(e.u(), e.v())
            .expect("valid configuration has its edges");
    }
    for e in cfg.added_edges() {
        g.add_edge(e.u(), e.v())
            .expect("valid configuration lacks the added edge");
    }
    Ok(ReductionStep { config: cfg })
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("k = {k} is too small for maximum degree {delta}; need at least {min}")]
    InvalidK { k: u32, delta: usize, min: u32 },
    #[error("no reducible configuration left with {remaining} edges remaining\n{dump}")]
    NoConfigurationFound { remaining: usize, dump: String },
    #[error("both queues are empty with {remaining} edges remaining\n{dump}")]
    QueueExhausted { remaining: usize, dump: String },
    #[error("extending step {step} ({config}) failed: {source}")]
    ExtensionFailed {
        step: usize,
        config: Configuration,
        #[source]
        source: ExtendError,
    },
    #[error("extending step {step} ({config}) reached an impossible case: {case}")]
    UnreachableCase {
        step: usize,
        config: Configuration,
        case: &'static str,
    },
}

/// Counters collected while reducing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Configurations found only by a full rescan after the queues ran dry.
    pub rescan_misses: usize,
    /// Triangles recorded by the high-degree engine.
    pub triangles_stored: usize,
    /// Dequeued entries that were no longer valid.
    pub stale_entries: usize,
}

/// Which engine produced a solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Bounded,
    HighDegree,
}

#[derive(Debug)]
pub struct Solution {
    pub engine: Engine,
    pub coloring: LinearColoring,
    pub trace: ReductionTrace,
    /// How often each extension branch was taken.
    pub cases: BTreeMap<&'static str, usize>,
    pub stats: SolveStats,
}

/// Extends `col` over every step of `trace`, last step first.
pub fn replay(
    trace: &ReductionTrace,
    col: &mut LinearColoring,
) -> Result<BTreeMap<&'static str, usize>, SolveError> {
    let mut cases = BTreeMap::new();
    for (step, s) in trace.steps.iter().enumerate().rev() {
        match extend(col, &s.config) {
            Ok(label) => *cases.entry(label).or_default() += 1,
            Err(ExtendError::Unreachable(case)) => {
                return Err(SolveError::UnreachableCase {
                    step,
                    config: s.config,
                    case,
                })
            }
            Err(source) => {
                return Err(SolveError::ExtensionFailed {
                    step,
                    config: s.config,
                    source,
                })
            }
        }
    }
    Ok(cases)
}

/// Reduces and replays on a breadth-first relabeling of `g`, then reports
/// the trace, the coloring and any error in the caller's vertex names.
pub(crate) fn solve_relabeled(
    g: &Graph,
    k: u32,
    engine: Engine,
    reduce: impl FnOnce(&Graph, Vec<VertexId>) -> Result<(ReductionTrace, SolveStats), SolveError>,
) -> Result<Solution, SolveError> {
    let order = g.bfs_order();
    let mut names = vec![0; order.len()];
    for (x, &o) in order.iter().enumerate() {
        names[o as usize] = x as VertexId;
    }
    let h = g.relabeled(&order);
    let back = |c: Configuration| c.map_vertices(|x| names[x as usize]);
    let (trace, stats) = reduce(&h, names.clone())?;
    let mut inner = LinearColoring::new(h.vertex_count(), k);
    let cases = replay(&trace, &mut inner).map_err(|err| match err {
        SolveError::ExtensionFailed {
            step,
            config,
            source,
        } => SolveError::ExtensionFailed {
            step,
            config: back(config),
            source,
        },
        SolveError::UnreachableCase { step, config, case } => SolveError::UnreachableCase {
            step,
            config: back(config),
            case,
        },
        other => other,
    })?;
    let mut colored: Vec<(Edge, Color)> = inner
        .iter()
        .map(|(e, c)| (Edge::new(names[e.u() as usize], names[e.v() as usize]), c))
        .collect();
    drop(inner);
    colored.sort_unstable();
    let mut coloring = LinearColoring::new(g.vertex_count(), k);
    for (e, c) in colored {
        coloring
            .assign(e, c)
            .expect("renaming vertices keeps a coloring linear");
    }
    let trace = ReductionTrace {
        steps: trace
            .steps
            .into_iter()
            .map(|s| ReductionStep {
                config: back(s.config),
            })
            .collect(),
    };
    Ok(Solution {
        engine,
        coloring,
        trace,
        cases,
        stats,
    })
}

/// A short description of a graph that could not be reduced. Vertex `x` is
/// printed as `names[x]` when `names` is non-empty.
pub(crate) fn dump(g: &Graph, names: &[VertexId]) -> String {
    let name = |x: VertexId| names.get(x as usize).copied().unwrap_or(x);
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for v in g.non_isolated() {
        *hist.entry(g.degree(v)).or_default() += 1;
    }
    let mut s = String::new();
    let _ = write!(s, "degree histogram:");
    for (d, c) in &hist {
        let _ = write!(s, " {d}:{c}");
    }
    let _ = write!(s, "\nfirst edges:");
    for e in g.edges().take(20) {
        let _ = write!(s, " {}", Edge::new(name(e.u()), name(e.v())));
    }
    s
}
