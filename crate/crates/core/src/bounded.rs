//! The engine for bounded maximum degree: reduce any configuration found
//! near recently changed vertices, then replay the extensions.

use crate::config::{anchored_at, detect_at, light_edge_at, Configuration};
use crate::graph::{Graph, VertexId};
use crate::queue::VertexQueue;
use crate::reduce::{
    apply_reduction, dump, solve_relabeled, Engine, ReductionTrace, Solution, SolveError,
    SolveStats,
};

/// Every vertex of a configuration is within this distance of its anchor.
pub const RESCAN_RADIUS: usize = 2;

/// `max(ceil(delta / 2), 5)`.
pub fn choose_k(delta: usize) -> u32 {
    (delta.div_ceil(2) as u32).max(5)
}

/// Reduction state of the bounded-degree engine.
pub struct BoundedReducer {
    g: Graph,
    k: u32,
    light: VertexQueue,
    anchors: VertexQueue,
    dirty: Vec<VertexId>,
    dirty_mark: Vec<bool>,
    seen: Vec<u32>,
    epoch: u32,
    trace: ReductionTrace,
    stats: SolveStats,
    names: Vec<VertexId>,
}

impl BoundedReducer {
    pub fn new(g: &Graph, k: u32) -> Result<Self, SolveError> {
        let delta = g.max_degree();
        if k == 0 || delta > 2 * k as usize {
            return Err(SolveError::InvalidK {
                k,
                delta,
                min: (delta.div_ceil(2) as u32).max(1),
            });
        }
        let n = g.vertex_count();
        let mut r = BoundedReducer {
            g: g.clone(),
            k,
            light: VertexQueue::new(n),
            anchors: VertexQueue::new(n),
            dirty: Vec::new(),
            dirty_mark: vec![false; n],
            seen: vec![0; n],
            epoch: 0,
            trace: ReductionTrace::default(),
            stats: SolveStats::default(),
            names: Vec::new(),
        };
        for v in g.non_isolated() {
            r.light.push(v);
            if matches!(g.degree(v), 2 | 3) {
                r.anchors.push(v);
            }
        }
        Ok(r)
    }

    /// Vertex names for diagnostics: vertex `x` is reported as `names[x]`.
    pub(crate) fn report_names(mut self, names: Vec<VertexId>) -> Self {
        self.names = names;
        self
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn trace(&self) -> &ReductionTrace {
        &self.trace
    }

    pub fn stats(&self) -> &SolveStats {
        &self.stats
    }

    /// Finds and applies one reduction. Returns `Ok(None)` once the graph
    /// is edgeless.
    pub fn step(&mut self) -> Result<Option<Configuration>, SolveError> {
        while !self.g.is_empty() {
            let (cfg, anchor) = if let Some(v) = self.light.pop() {
                match light_edge_at(&self.g, v, self.k) {
                    Some(c) => (c, None),
                    None => continue,
                }
            } else if !self.dirty.is_empty() {
                self.expand_dirty();
                continue;
            } else if let Some(v) = self.anchors.pop() {
                match anchored_at(&self.g, v, self.k) {
                    Some(c) => (c, Some(v)),
                    None => continue,
                }
            } else {
                let n = self.g.vertex_count() as VertexId;
                match (0..n).find_map(|v| detect_at(&self.g, v, self.k)) {
                    Some(c) => {
                        self.stats.rescan_misses += 1;
                        (c, None)
                    }
                    None => {
                        return Err(SolveError::NoConfigurationFound {
                            remaining: self.g.edge_count(),
                            dump: dump(&self.g, &self.names),
                        })
                    }
                }
            };
            self.reduce(cfg);
            if let Some(v) = anchor {
                self.anchors.push(v);
            }
            return Ok(Some(cfg));
        }
        Ok(None)
    }

    fn reduce(&mut self, cfg: Configuration) {
        let step = apply_reduction(&mut self.g, cfg, self.k)
            .expect("detected configurations match the graph");
        for e in step.removed_edges().into_iter().chain(step.added_edges()) {
            for x in [e.u(), e.v()] {
                self.light.push(x);
                if !std::mem::replace(&mut self.dirty_mark[x as usize], true) {
                    self.dirty.push(x);
                }
            }
        }
        self.trace.steps.push(step);
    }

    /// Queues every 2- and 3-vertex near a changed vertex.
    fn expand_dirty(&mut self) {
        let dirty = std::mem::take(&mut self.dirty);
        let mut frontier = Vec::new();
        let mut next = Vec::new();
        for &d in &dirty {
            self.dirty_mark[d as usize] = false;
            self.epoch = self.epoch.wrapping_add(1);
            if self.epoch == 0 {
                self.seen.fill(0);
                self.epoch = 1;
            }
            frontier.clear();
            frontier.push(d);
            self.seen[d as usize] = self.epoch;
            for depth in 0..=RESCAN_RADIUS {
                next.clear();
                for &x in &frontier {
                    if matches!(self.g.degree(x), 2 | 3) {
                        self.anchors.push(x);
                    }
                    if depth == RESCAN_RADIUS {
                        continue;
                    }
                    for y in self.g.neighbors(x) {
                        if self.seen[y as usize] != self.epoch {
                            self.seen[y as usize] = self.epoch;
                            next.push(y);
                        }
                    }
                }
                std::mem::swap(&mut frontier, &mut next);
            }
        }
        self.dirty = dirty;
        self.dirty.clear();
    }

    /// Reduces until the graph is edgeless.
    pub fn run(mut self) -> Result<(ReductionTrace, SolveStats), SolveError> {
        while self.step()?.is_some() {}
        Ok((self.trace, self.stats))
    }
}

/// A `k`-linear coloring of `g`, for `max_degree(g) <= 2k`.
///
/// Succeeds on every planar graph when `k >= max(ceil(delta / 2), 5)`.
pub fn solve_bounded(g: &Graph, k: u32) -> Result<Solution, SolveError> {
    solve_relabeled(g, k, Engine::Bounded, |h, names| {
        BoundedReducer::new(h, k)?.report_names(names).run()
    })
}
