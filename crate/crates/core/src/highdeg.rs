//! The engine for large maximum degree. It needs only light edges, 2-vertex
//! contractions and pairs of 2-vertices, found through two queues and a
//! per-vertex triangle record.

use std::collections::VecDeque;

use rustc_hash::FxHashSet;

use crate::config::Configuration;
use crate::graph::{Edge, Graph, VertexId};
use crate::queue::VertexQueue;
use crate::reduce::{
    apply_reduction, dump, solve_relabeled, Engine, ReductionTrace, Solution, SolveError,
    SolveStats,
};

/// Nice edges: weight at most 13, or a 1-vertex end, or a 2-vertex end whose
/// other end has degree at most `2k - 1`.
pub fn is_nice(g: &Graph, e: Edge, k: u32) -> bool {
    let (a, b) = (g.degree(e.u()), g.degree(e.v()));
    let (lo, hi) = (a.min(b), a.max(b));
    a + b <= 13 || lo == 1 || (lo == 2 && hi < 2 * k as usize)
}

/// A triangle `owner - x - other` with `deg(x) = 2`, kept at `owner`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Triangle {
    x: VertexId,
    other: VertexId,
}

/// Reduction state of the high-degree engine.
pub struct HighDegreeReducer {
    g: Graph,
    k: u32,
    edges: VecDeque<Edge>,
    queued: FxHashSet<Edge>,
    twos: VertexQueue,
    triangles: Vec<Option<Triangle>>,
    trace: ReductionTrace,
    stats: SolveStats,
    names: Vec<VertexId>,
}

/// What one call to [`HighDegreeReducer::step`] did.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HighDegreeStep {
    Reduced(Configuration),
    StoredTriangle {
        x: VertexId,
        v: VertexId,
        w: VertexId,
    },
    Skipped,
}

impl HighDegreeReducer {
    pub fn new(g: &Graph, k: u32) -> Result<Self, SolveError> {
        let delta = g.max_degree();
        if k < 6 || delta > 2 * k as usize {
            return Err(SolveError::InvalidK {
                k,
                delta,
                min: (delta.div_ceil(2) as u32).max(6),
            });
        }
        let n = g.vertex_count();
        let mut r = HighDegreeReducer {
            g: g.clone(),
            k,
            edges: VecDeque::new(),
            queued: FxHashSet::default(),
            twos: VertexQueue::new(n),
            triangles: vec![None; n],
            trace: ReductionTrace::default(),
            stats: SolveStats::default(),
            names: Vec::new(),
        };
        for e in g.edges() {
            r.offer_edge(e);
        }
        for v in g.non_isolated() {
            r.offer_two(v);
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

    fn full(&self) -> usize {
        2 * self.k as usize
    }

    fn offer_edge(&mut self, e: Edge) {
        if is_nice(&self.g, e, self.k) && self.queued.insert(e) {
            self.edges.push_back(e);
        }
    }

    fn two_between_full(&self, x: VertexId) -> Option<(VertexId, VertexId)> {
        if self.g.degree(x) != 2 {
            return None;
        }
        let mut it = self.g.neighbors(x);
        let (v, w) = (it.next()?, it.next()?);
        let full = self.full();
        (self.g.degree(v) == full && self.g.degree(w) == full).then_some((v, w))
    }

    fn offer_two(&mut self, x: VertexId) {
        if self.two_between_full(x).is_some() {
            self.twos.push(x);
        }
    }

    /// Re-examines the surroundings of `z` after it lost an edge.
    fn touched(&mut self, z: VertexId) {
        let d = self.g.degree(z);
        if d <= 12 || d + 1 == self.full() {
            let around: Vec<VertexId> = self.g.neighbors(z).collect();
            for y in around {
                self.offer_edge(Edge::new(z, y));
            }
        }
        if d == 2 {
            self.offer_two(z);
        }
    }

    /// The triangle stored at `v`, if it is still present in the graph.
    fn stored(&self, v: VertexId) -> Option<Triangle> {
        let t = self.triangles[v as usize]?;
        let g = &self.g;
        let full = self.full();
        let ok = g.degree(v) == full
            && g.degree(t.other) == full
            && g.degree(t.x) == 2
            && g.adjacent(v, t.x)
            && g.adjacent(t.x, t.other)
            && g.adjacent(v, t.other);
        ok.then_some(t)
    }

    fn reduce(&mut self, cfg: Configuration) -> HighDegreeStep {
        let step = apply_reduction(&mut self.g, cfg, self.k)
            .expect("queued configurations match the graph");
        let removed = step.removed_edges();
        let contracted = !step.added_edges().is_empty();
        self.trace.steps.push(step);
        if !contracted {
            for e in removed {
                self.touched(e.u());
                self.touched(e.v());
            }
        }
        HighDegreeStep::Reduced(cfg)
    }

    /// Performs one queue operation. Returns `Ok(None)` once the graph is
    /// edgeless.
    pub fn step(&mut self) -> Result<Option<HighDegreeStep>, SolveError> {
        if self.g.is_empty() {
            return Ok(None);
        }
        if let Some(e) = self.edges.pop_front() {
            self.queued.remove(&e);
            if !self.g.contains_edge(e) || !is_nice(&self.g, e, self.k) {
                self.stats.stale_entries += 1;
                return Ok(Some(HighDegreeStep::Skipped));
            }
            let cfg = Configuration::LightEdge { u: e.u(), v: e.v() };
            return Ok(Some(self.reduce(cfg)));
        }
        let Some(x) = self.twos.pop() else {
            return Err(SolveError::QueueExhausted {
                remaining: self.g.edge_count(),
                dump: dump(&self.g, &self.names),
            });
        };
        let Some((v, w)) = self.two_between_full(x) else {
            self.stats.stale_entries += 1;
            return Ok(Some(HighDegreeStep::Skipped));
        };
        // Another 2-vertex on the same two neighbors.
        for (p, q) in [(v, w), (w, v)] {
            if let Some(t) = self.stored(p) {
                if t.other == q && t.x != x {
                    let cfg = Configuration::ConfigA {
                        u: p,
                        v: q,
                        w: x,
                        z: t.x,
                    };
                    return Ok(Some(self.reduce(cfg)));
                }
            }
        }
        if !self.g.adjacent(v, w) {
            let cfg = Configuration::TwoVertexNonadjacent { v: x, u: v, z: w };
            return Ok(Some(self.reduce(cfg)));
        }
        // Another 2-vertex sharing exactly one neighbor with `x`.
        for (p, q) in [(v, w), (w, v)] {
            if let Some(t) = self.stored(p) {
                if t.other != q && t.x != x {
                    let cfg = Configuration::ConfigB {
                        u: p,
                        v: q,
                        t: t.other,
                        w: x,
                        z: t.x,
                    };
                    return Ok(Some(self.reduce(cfg)));
                }
            }
        }
        self.triangles[v as usize] = Some(Triangle { x, other: w });
        self.triangles[w as usize] = Some(Triangle { x, other: v });
        self.stats.triangles_stored += 1;
        Ok(Some(HighDegreeStep::StoredTriangle { x, v, w }))
    }

    /// Every nice edge is queued, and every 2-vertex between two
    /// `2k`-vertices is queued or recorded at both neighbors.
    pub fn invariant_holds(&self) -> bool {
        let edges_ok = self
            .g
            .edges()
            .all(|e| !is_nice(&self.g, e, self.k) || self.queued.contains(&e));
        let twos_ok = self
            .g
            .non_isolated()
            .all(|x| match self.two_between_full(x) {
                None => true,
                Some((v, w)) => {
                    self.twos.contains(x)
                        || (self.stored(v) == Some(Triangle { x, other: w })
                            && self.stored(w) == Some(Triangle { x, other: v }))
                }
            });
        edges_ok && twos_ok
    }

    pub fn run(mut self) -> Result<(ReductionTrace, SolveStats), SolveError> {
        while self.step()?.is_some() {}
        Ok((self.trace, self.stats))
    }
}

/// A `k`-linear coloring of `g` for `k >= 6` and `max_degree(g) <= 2k`.
///
/// Succeeds on every planar graph under those bounds.
pub fn solve_highdegree(g: &Graph, k: u32) -> Result<Solution, SolveError> {
    solve_relabeled(g, k, Engine::HighDegree, |h, names| {
        HighDegreeReducer::new(h, k)?.report_names(names).run()
    })
}
