//! Reducible configurations: their shapes, validity checks and detection.
//!
//! Each configuration names a few vertices of the graph. Removing the
//! configuration's edges (and sometimes adding one) gives a smaller graph
//! whose linear colorings can always be extended back, see [`crate::extend`].

use std::fmt;

use crate::graph::{Edge, Graph, VertexId};

/// A reducible configuration, with vertices labelled as in its extension rule.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub enum Configuration {
    /// Edge `uv` with `deg(u) + deg(v) <= 2k + 1`.
    LightEdge { u: VertexId, v: VertexId },
    /// 2-vertex `v` whose neighbors `u`, `z` are not adjacent.
    TwoVertexNonadjacent {
        v: VertexId,
        u: VertexId,
        z: VertexId,
    },
    /// 2-vertices `w`, `z` both adjacent to exactly `u` and `v`, with `uv` an edge.
    ConfigA {
        u: VertexId,
        v: VertexId,
        w: VertexId,
        z: VertexId,
    },
    /// 2-vertices `w` (on `u`, `v`) and `z` (on `u`, `t`) with `uv`, `ut` edges.
    ConfigB {
        u: VertexId,
        v: VertexId,
        t: VertexId,
        w: VertexId,
        z: VertexId,
    },
    /// 3-vertex `v` on `u`, `w`, `z` with `uz`, `zw` edges and `uw` missing.
    TwoPairs {
        v: VertexId,
        u: VertexId,
        w: VertexId,
        z: VertexId,
    },
    /// 4-cycle `v z u w` with chord `zw`, `deg(v) = 3`, `deg(u) = 2`.
    ChordedC4 {
        v: VertexId,
        z: VertexId,
        u: VertexId,
        w: VertexId,
    },
    /// 2-vertex `u` on the edge `vw`, and a 3-vertex `z` spanning a `K4`
    /// with `v`, `x`, `y`.
    TwoWithThree {
        u: VertexId,
        v: VertexId,
        w: VertexId,
        z: VertexId,
        x: VertexId,
        y: VertexId,
    },
    /// Vertex `v` of degree at most `2k - 1` with 3-neighbors `x`, `y`, where
    /// `x` has neighbors `v`, `x1`, `x2` and two of those are adjacent.
    CubicSmall {
        v: VertexId,
        x: VertexId,
        x1: VertexId,
        x2: VertexId,
        y: VertexId,
    },
    /// Two 3-vertices `v` (on `u`, `w`, `z`) and `x` (on `w`, `z`, `y`) with
    /// `u`, `w`, `z` and `y`, `w`, `z` forming triangles and `wz` an edge.
    TwoCubic {
        u: VertexId,
        v: VertexId,
        w: VertexId,
        z: VertexId,
        x: VertexId,
        y: VertexId,
    },
}

/// The kind of a [`Configuration`], without its vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConfigKind {
    LightEdge,
    TwoVertexNonadjacent,
    ConfigA,
    ConfigB,
    TwoPairs,
    ChordedC4,
    TwoWithThree,
    CubicSmall,
    TwoCubic,
}

impl ConfigKind {
    pub const ALL: [ConfigKind; 9] = [
        ConfigKind::LightEdge,
        ConfigKind::TwoVertexNonadjacent,
        ConfigKind::ConfigA,
        ConfigKind::ConfigB,
        ConfigKind::TwoPairs,
        ConfigKind::ChordedC4,
        ConfigKind::TwoWithThree,
        ConfigKind::CubicSmall,
        ConfigKind::TwoCubic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConfigKind::LightEdge => "light-edge",
            ConfigKind::TwoVertexNonadjacent => "two-vertex",
            ConfigKind::ConfigA => "config-a",
            ConfigKind::ConfigB => "config-b",
            ConfigKind::TwoPairs => "two-pairs",
            ConfigKind::ChordedC4 => "chorded-c4",
            ConfigKind::TwoWithThree => "two-with-three",
            ConfigKind::CubicSmall => "cubic-small",
            ConfigKind::TwoCubic => "two-cubic",
        }
    }
}

impl fmt::Display for ConfigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn e(a: VertexId, b: VertexId) -> Edge {
    Edge::new(a, b)
}

fn distinct(vs: &[VertexId]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, a)| vs[i + 1..].iter().all(|b| a != b))
}

impl Configuration {
    pub fn kind(&self) -> ConfigKind {
        match self {
            Configuration::LightEdge { .. } => ConfigKind::LightEdge,
            Configuration::TwoVertexNonadjacent { .. } => ConfigKind::TwoVertexNonadjacent,
            Configuration::ConfigA { .. } => ConfigKind::ConfigA,
            Configuration::ConfigB { .. } => ConfigKind::ConfigB,
            Configuration::TwoPairs { .. } => ConfigKind::TwoPairs,
            Configuration::ChordedC4 { .. } => ConfigKind::ChordedC4,
            Configuration::TwoWithThree { .. } => ConfigKind::TwoWithThree,
            Configuration::CubicSmall { .. } => ConfigKind::CubicSmall,
            Configuration::TwoCubic { .. } => ConfigKind::TwoCubic,
        }
    }

    /// The named vertices, in field order.
    pub fn vertices(&self) -> Vec<VertexId> {
        match *self {
            Configuration::LightEdge { u, v } => vec![u, v],
            Configuration::TwoVertexNonadjacent { v, u, z } => vec![v, u, z],
            Configuration::ConfigA { u, v, w, z } => vec![u, v, w, z],
            Configuration::ConfigB { u, v, t, w, z } => vec![u, v, t, w, z],
            Configuration::TwoPairs { v, u, w, z } => vec![v, u, w, z],
            Configuration::ChordedC4 { v, z, u, w } => vec![v, z, u, w],
            Configuration::TwoWithThree { u, v, w, z, x, y } => vec![u, v, w, z, x, y],
            Configuration::CubicSmall { v, x, x1, x2, y } => vec![v, x, x1, x2, y],
            Configuration::TwoCubic { u, v, w, z, x, y } => vec![u, v, w, z, x, y],
        }
    }

    /// The same shape with every vertex renamed by `f`.
    pub fn map_vertices(self, f: impl Fn(VertexId) -> VertexId) -> Configuration {
        use Configuration::*;
        match self {
            LightEdge { u, v } => LightEdge { u: f(u), v: f(v) },
            TwoVertexNonadjacent { v, u, z } => TwoVertexNonadjacent {
                v: f(v),
                u: f(u),
                z: f(z),
            },
            ConfigA { u, v, w, z } => ConfigA {
                u: f(u),
                v: f(v),
                w: f(w),
                z: f(z),
            },
            ConfigB { u, v, t, w, z } => ConfigB {
                u: f(u),
                v: f(v),
                t: f(t),
                w: f(w),
                z: f(z),
            },
            TwoPairs { v, u, w, z } => TwoPairs {
                v: f(v),
                u: f(u),
                w: f(w),
                z: f(z),
            },
            ChordedC4 { v, z, u, w } => ChordedC4 {
                v: f(v),
                z: f(z),
                u: f(u),
                w: f(w),
            },
            TwoWithThree { u, v, w, z, x, y } => TwoWithThree {
                u: f(u),
                v: f(v),
                w: f(w),
                z: f(z),
                x: f(x),
                y: f(y),
            },
            CubicSmall { v, x, x1, x2, y } => CubicSmall {
                v: f(v),
                x: f(x),
                x1: f(x1),
                x2: f(x2),
                y: f(y),
            },
            TwoCubic { u, v, w, z, x, y } => TwoCubic {
                u: f(u),
                v: f(v),
                w: f(w),
                z: f(z),
                x: f(x),
                y: f(y),
            },
        }
    }

    /// Edges deleted when the configuration is reduced.
    pub fn removed_edges(&self) -> Vec<Edge> {
        match *self {
            Configuration::LightEdge { u, v } => vec![e(u, v)],
            Configuration::TwoVertexNonadjacent { v, u, z } => vec![e(u, v), e(v, z)],
            Configuration::ConfigA { u, z, .. } | Configuration::ConfigB { u, z, .. } => {
                vec![e(u, z)]
            }
            Configuration::TwoPairs { v, u, w, z } => vec![e(u, v), e(v, w), e(v, z)],
            Configuration::ChordedC4 { z, u, .. } => vec![e(u, z)],
            Configuration::TwoWithThree { u, v, .. } => vec![e(u, v)],
            Configuration::CubicSmall { v, x, .. } => vec![e(v, x)],
            Configuration::TwoCubic { u, v, .. } => vec![e(u, v)],
        }
    }

    /// Edges inserted when the configuration is reduced.
    pub fn added_edges(&self) -> Vec<Edge> {
        match *self {
            Configuration::TwoVertexNonadjacent { u, z, .. } => vec![e(u, z)],
            Configuration::TwoPairs { u, w, .. } => vec![e(u, w)],
            _ => Vec::new(),
        }
    }

    /// Checks every degree and adjacency condition against `g`.
    pub fn holds_in(&self, g: &Graph, k: u32) -> bool {
        let n = g.vertex_count();
        if self.vertices().iter().any(|&x| x as usize >= n) {
            return false;
        }
        let adj = |a, b| g.adjacent(a, b);
        let deg = |a| g.degree(a);
        let k = k as usize;
        match *self {
            Configuration::LightEdge { u, v } => {
                u != v && adj(u, v) && deg(u) + deg(v) <= 2 * k + 1
            }
            Configuration::TwoVertexNonadjacent { v, u, z } => {
                distinct(&[v, u, z]) && deg(v) == 2 && adj(v, u) && adj(v, z) && !adj(u, z)
            }
            Configuration::ConfigA { u, v, w, z } => {
                distinct(&[u, v, w, z])
                    && deg(w) == 2
                    && deg(z) == 2
                    && adj(w, u)
                    && adj(w, v)
                    && adj(z, u)
                    && adj(z, v)
                    && adj(u, v)
            }
            Configuration::ConfigB { u, v, t, w, z } => {
                distinct(&[u, v, t, w, z])
                    && deg(w) == 2
                    && deg(z) == 2
                    && adj(w, u)
                    && adj(w, v)
                    && adj(z, u)
                    && adj(z, t)
                    && adj(u, v)
                    && adj(u, t)
            }
            Configuration::TwoPairs { v, u, w, z } => {
                distinct(&[v, u, w, z])
                    && deg(v) == 3
                    && adj(v, u)
                    && adj(v, w)
                    && adj(v, z)
                    && adj(u, z)
                    && adj(z, w)
                    && !adj(u, w)
            }
            Configuration::ChordedC4 { v, z, u, w } => {
                distinct(&[v, z, u, w])
                    && deg(v) == 3
                    && deg(u) == 2
                    && adj(v, z)
                    && adj(z, u)
                    && adj(u, w)
                    && adj(w, v)
                    && adj(z, w)
            }
            Configuration::TwoWithThree { u, v, w, z, x, y } => {
                distinct(&[u, v, w, z, x, y])
                    && deg(u) == 2
                    && adj(u, v)
                    && adj(u, w)
                    && adj(v, w)
                    && deg(z) == 3
                    && adj(z, v)
                    && adj(z, x)
                    && adj(z, y)
                    && adj(v, x)
                    && adj(v, y)
                    && adj(x, y)
            }
            Configuration::CubicSmall { v, x, x1, x2, y } => {
                distinct(&[v, x, x1, x2, y])
                    && deg(v) < 2 * k
                    && deg(x) == 3
                    && deg(y) == 3
                    && adj(v, x)
                    && adj(v, y)
                    && adj(x, x1)
                    && adj(x, x2)
                    && (adj(x1, v) || adj(x2, v) || adj(x1, x2))
            }
            Configuration::TwoCubic { u, v, w, z, x, y } => {
                distinct(&[u, v, w, z, x, y])
                    && deg(v) == 3
                    && deg(x) == 3
                    && [(u, v), (u, w), (u, z), (v, w), (v, z), (w, z)]
                        .into_iter()
                        .chain([(x, w), (x, z), (x, y), (y, w), (y, z)])
                        .all(|(a, b)| adj(a, b))
            }
        }
    }
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.kind(), self.vertices())
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.kind())?;
        for (i, x) in self.vertices().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// First configuration found around `v`, in priority order.
///
/// Light edges at `v` come first; then configurations anchored at `v`,
/// where the anchor is a vertex of degree 2 or 3 inside the configuration.
/// Every configuration lies within distance 2 of its anchor.
pub fn detect_at(g: &Graph, v: VertexId, k: u32) -> Option<Configuration> {
    light_edge_at(g, v, k).or_else(|| anchored_at(g, v, k))
}

/// A light edge incident to `v`, preferring the smallest neighbor.
pub fn light_edge_at(g: &Graph, v: VertexId, k: u32) -> Option<Configuration> {
    let limit = 2 * k as usize + 1;
    let dv = g.degree(v);
    if dv == 0 || dv + 1 > limit {
        return None;
    }
    g.neighbors(v)
        .find(|&y| dv + g.degree(y) <= limit)
        .map(|y| Configuration::LightEdge { u: v, v: y })
}

/// A configuration other than a light edge whose anchor is `v`.
pub fn anchored_at(g: &Graph, v: VertexId, k: u32) -> Option<Configuration> {
    let found = match g.degree(v) {
        2 => two_vertex(g, v)
            .or_else(|| config_a(g, v))
            .or_else(|| config_b(g, v))
            .or_else(|| chorded_c4(g, v)),
        3 => two_pairs(g, v)
            .or_else(|| two_with_three(g, v))
            .or_else(|| cubic_small(g, v, k))
            .or_else(|| two_cubic(g, v)),
        _ => None,
    };
    debug_assert!(found.is_none_or(|c| c.holds_in(g, k)), "{found:?}");
    found
}

fn pair(g: &Graph, v: VertexId) -> (VertexId, VertexId) {
    let mut it = g.neighbors(v);
    (it.next().unwrap(), it.next().unwrap())
}

fn triple(g: &Graph, v: VertexId) -> [VertexId; 3] {
    let mut it = g.neighbors(v);
    [it.next().unwrap(), it.next().unwrap(), it.next().unwrap()]
}

fn two_vertex(g: &Graph, v: VertexId) -> Option<Configuration> {
    let (u, z) = pair(g, v);
    (!g.adjacent(u, z)).then_some(Configuration::TwoVertexNonadjacent { v, u, z })
}

fn config_a(g: &Graph, w: VertexId) -> Option<Configuration> {
    let (u, v) = pair(g, w);
    if !g.adjacent(u, v) {
        return None;
    }
    g.neighbors(u)
        .find(|&z| z != w && g.degree(z) == 2 && g.adjacent(z, v))
        .map(|z| Configuration::ConfigA { u, v, w, z })
}

fn config_b(g: &Graph, w: VertexId) -> Option<Configuration> {
    let (p, q) = pair(g, w);
    if !g.adjacent(p, q) {
        return None;
    }
    for (u, v) in [(p, q), (q, p)] {
        for z in g.neighbors(u) {
            if z == w || z == v || g.degree(z) != 2 {
                continue;
            }
            let (a, b) = pair(g, z);
            let t = if a == u { b } else { a };
            if t != v && t != w && g.adjacent(u, t) {
                return Some(Configuration::ConfigB { u, v, t, w, z });
            }
        }
    }
    None
}

fn chorded_c4(g: &Graph, u: VertexId) -> Option<Configuration> {
    let (z, w) = pair(g, u);
    if !g.adjacent(z, w) {
        return None;
    }
    g.neighbors(z)
        .find(|&v| v != u && v != w && g.degree(v) == 3 && g.adjacent(v, w))
        .map(|v| Configuration::ChordedC4 { v, z, u, w })
}

fn two_pairs(g: &Graph, v: VertexId) -> Option<Configuration> {
    let n = triple(g, v);
    for i in 0..3 {
        let z = n[i];
        let (u, w) = (n[(i + 1) % 3], n[(i + 2) % 3]);
        if g.adjacent(u, z) && g.adjacent(z, w) && !g.adjacent(u, w) {
            return Some(Configuration::TwoPairs { v, u, w, z });
        }
    }
    None
}

fn is_triangle(g: &Graph, [a, b, c]: [VertexId; 3]) -> bool {
    g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)
}

fn two_with_three(g: &Graph, z: VertexId) -> Option<Configuration> {
    let n = triple(g, z);
    if !is_triangle(g, n) {
        return None;
    }
    for i in 0..3 {
        let v = n[i];
        let (x, y) = (n[(i + 1) % 3], n[(i + 2) % 3]);
        for u in g.neighbors(v) {
            if g.degree(u) != 2 {
                continue;
            }
            let (a, b) = pair(g, u);
            let w = if a == v { b } else { a };
            if w != x && w != y && w != z && g.adjacent(v, w) {
                return Some(Configuration::TwoWithThree { u, v, w, z, x, y });
            }
        }
    }
    None
}

fn cubic_small(g: &Graph, x: VertexId, k: u32) -> Option<Configuration> {
    let n = triple(g, x);
    for i in 0..3 {
        let v = n[i];
        if g.degree(v) >= 2 * k as usize {
            continue;
        }
        let (x1, x2) = (n[(i + 1) % 3], n[(i + 2) % 3]);
        if !(g.adjacent(x1, v) || g.adjacent(x2, v) || g.adjacent(x1, x2)) {
            continue;
        }
        if let Some(y) = g
            .neighbors(v)
            .find(|&y| y != x && y != x1 && y != x2 && g.degree(y) == 3)
        {
            return Some(Configuration::CubicSmall { v, x, x1, x2, y });
        }
    }
    None
}

fn two_cubic(g: &Graph, v: VertexId) -> Option<Configuration> {
    let n = triple(g, v);
    if !is_triangle(g, n) {
        return None;
    }
    for i in 0..3 {
        let u = n[i];
        let (w, z) = (n[(i + 1) % 3], n[(i + 2) % 3]);
        for x in g.neighbors(w) {
            if x == v || x == u || x == z || g.degree(x) != 3 || !g.adjacent(x, z) {
                continue;
            }
            let y = g
                .neighbors(x)
                .find(|&y| y != w && y != z)
                .expect("x has degree 3");
            if y != u && y != v && g.adjacent(y, w) && g.adjacent(y, z) {
                return Some(Configuration::TwoCubic { u, v, w, z, x, y });
            }
        }
    }
    None
}
