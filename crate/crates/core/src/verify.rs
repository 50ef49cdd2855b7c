//! Independent validity check for edge colorings.
//!
//! The checker only looks at the raw `(edge, color)` list. It recomputes
//! degrees and cycles with its own union-find and never reads the cached
//! profiles or path trees of [`LinearColoring`].

use std::collections::{BTreeMap, VecDeque};

use rustc_hash::{FxHashMap, FxHashSet};

use crate::coloring::{Color, LinearColoring};
use crate::graph::{Edge, Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// A graph edge without a color.
    UncoloredEdge,
    /// A colored pair that is not an edge of the graph.
    NotInGraph,
    /// A color outside `1..=k`.
    ColorOutOfRange,
    /// A vertex with three or more edges of one color.
    DegreeExceeded,
    /// A monochromatic cycle.
    MonochromaticCycle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub color: Option<Color>,
    pub vertex: Option<VertexId>,
    /// The offending edges: the edge itself, the edges at an overloaded
    /// vertex, or a witness cycle.
    pub edges: Vec<Edge>,
}

/// Shape of one color class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorClassStats {
    pub color: Color,
    pub edges: usize,
    pub paths: usize,
    /// Path length (in edges) to number of paths of that length.
    pub lengths: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    pub colors_used: usize,
    pub classes: Vec<ColorClassStats>,
    pub violations: Vec<Violation>,
}

pub fn verify(g: &Graph, col: &LinearColoring) -> VerificationReport {
    verify_assignment(g, col.k(), col.iter())
}

/// Checks that `assignment` colors every edge of `g` exactly once with
/// colors in `1..=k`, and that each color class is a linear forest.
pub fn verify_assignment<I>(g: &Graph, k: u32, assignment: I) -> VerificationReport
where
    I: IntoIterator<Item = (Edge, Color)>,
{
    let mut violations = Vec::new();
    let mut list: Vec<(Color, Edge)> = Vec::new();
    let mut seen: FxHashSet<Edge> = FxHashSet::default();
    for (e, c) in assignment {
        if !seen.insert(e) {
            continue;
        }
        if !g.contains_edge(e) {
            violations.push(Violation {
                kind: ViolationKind::NotInGraph,
                color: Some(c),
                vertex: None,
                edges: vec![e],
            });
            continue;
        }
        if c.get() > k {
            violations.push(Violation {
                kind: ViolationKind::ColorOutOfRange,
                color: Some(c),
                vertex: None,
                edges: vec![e],
            });
        }
        list.push((c, e));
    }
    for e in g.edges() {
        if !seen.contains(&e) {
            violations.push(Violation {
                kind: ViolationKind::UncoloredEdge,
                color: None,
                vertex: None,
                edges: vec![e],
            });
        }
    }
    list.sort_unstable();

    let mut dsu = Dsu::new(g.vertex_count());
    let mut classes = Vec::new();
    let mut start = 0;
    while start < list.len() {
        let color = list[start].0;
        let mut end = start;
        while end < list.len() && list[end].0 == color {
            end += 1;
        }
        let class: Vec<Edge> = list[start..end].iter().map(|&(_, e)| e).collect();
        classes.push(check_class(color, &class, &mut dsu, &mut violations));
        start = end;
    }

    VerificationReport {
        valid: violations.is_empty(),
        colors_used: classes.len(),
        classes,
        violations,
    }
}

fn check_class(
    color: Color,
    class: &[Edge],
    dsu: &mut Dsu,
    violations: &mut Vec<Violation>,
) -> ColorClassStats {
    let mut incident: FxHashMap<VertexId, Vec<Edge>> = FxHashMap::default();
    for &e in class {
        incident.entry(e.u()).or_default().push(e);
        incident.entry(e.v()).or_default().push(e);
    }
    let mut overloaded: Vec<_> = incident
        .iter()
        .filter(|(_, es)| es.len() > 2)
        .map(|(&v, es)| (v, es.clone()))
        .collect();
    overloaded.sort_unstable();
    for (v, es) in overloaded {
        violations.push(Violation {
            kind: ViolationKind::DegreeExceeded,
            color: Some(color),
            vertex: Some(v),
            edges: es,
        });
    }

    for &e in class {
        if !dsu.union(e.u(), e.v()) {
            violations.push(Violation {
                kind: ViolationKind::MonochromaticCycle,
                color: Some(color),
                vertex: None,
                edges: witness_cycle(&incident, e),
            });
        }
    }

    let mut sizes: FxHashMap<VertexId, usize> = FxHashMap::default();
    for &e in class {
        *sizes.entry(dsu.find(e.u())).or_default() += 1;
    }
    let mut lengths = BTreeMap::new();
    for &len in sizes.values() {
        *lengths.entry(len).or_default() += 1;
    }
    dsu.reset();
    ColorClassStats {
        color,
        edges: class.len(),
        paths: sizes.len(),
        lengths,
    }
}

/// A cycle through `closing`, found by a search that avoids `closing`.
fn witness_cycle(incident: &FxHashMap<VertexId, Vec<Edge>>, closing: Edge) -> Vec<Edge> {
    let (s, t) = closing.endpoints();
    let mut via: FxHashMap<VertexId, Edge> = FxHashMap::default();
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        if x == t {
            break;
        }
        for &e in &incident[&x] {
            if e == closing {
                continue;
            }
            let y = e.other(x);
            if y != s && !via.contains_key(&y) {
                via.insert(y, e);
                queue.push_back(y);
            }
        }
    }
    let mut cycle = vec![closing];
    let mut x = t;
    while x != s {
        let e = via[&x];
        cycle.push(e);
        x = e.other(x);
    }
    cycle
}

struct Dsu {
    parent: Vec<VertexId>,
    size: Vec<u32>,
    touched: Vec<VertexId>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n as VertexId).collect(),
            size: vec![1; n],
            touched: Vec::new(),
        }
    }

    fn find(&mut self, mut x: VertexId) -> VertexId {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    /// Returns `false` if `a` and `b` were already joined.
    fn union(&mut self, a: VertexId, b: VertexId) -> bool {
        self.touched.push(a);
        self.touched.push(b);
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        true
    }

    fn reset(&mut self) {
        for x in self.touched.drain(..) {
            self.parent[x as usize] = x;
            self.size[x as usize] = 1;
        }
    }
}
