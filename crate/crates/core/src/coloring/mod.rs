//! Partial linear colorings with constant-time color profiles and
//! logarithmic path-connectivity queries.

mod path_forest;
mod pools;

use std::collections::BTreeSet;
use std::fmt;

use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::graph::{Edge, VertexId};
use path_forest::{NodeId, PathForest};
use pools::Pools;

/// A color in `1..=k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Color(u32);

impl Color {
    /// # Panics
    ///
    /// Panics if `c == 0`.
    pub fn new(c: u32) -> Self {
        assert!(c > 0, "colors start at 1");
        Color(c)
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Debug for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("color {color} is outside the palette 1..={k}")]
    ColorOutOfRange { color: u32, k: u32 },
    #[error("vertex {vertex} is out of range")]
    VertexOutOfRange { vertex: VertexId },
    #[error("edge {0} is already colored")]
    AlreadyColored(Edge),
    #[error("edge {0} is not colored")]
    NotColored(Edge),
    #[error("coloring {edge} with {color} gives vertex {vertex} three edges of that color")]
    WouldExceedDegree {
        edge: Edge,
        color: Color,
        vertex: VertexId,
    },
    #[error("coloring {edge} with {color} closes a monochromatic cycle")]
    WouldCloseCycle { edge: Edge, color: Color },
}

/// How often each color appears at one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VertexColorProfile {
    /// Colors absent at the vertex.
    pub unused: Vec<Color>,
    /// Colors on exactly one incident edge.
    pub single: Vec<Color>,
    /// Colors on two incident edges.
    pub double: Vec<Color>,
}

const EMPTY_SLOT: VertexId = VertexId::MAX;

/// Up to two neighbors per (vertex, color) pair.
enum Slots {
    Dense(Vec<[VertexId; 2]>),
    Sparse(FxHashMap<u64, [VertexId; 2]>),
}

/// Largest `n * k` stored in a flat table.
const DENSE_LIMIT: usize = 1 << 23;

#[derive(Clone, Copy)]
struct Assigned {
    color: Color,
    node: NodeId,
}

/// A partial edge coloring in which every color class is a linear forest.
///
/// Every mutation keeps the invariant: each vertex sees each color at most
/// twice and no color class contains a cycle.
pub struct LinearColoring {
    n: usize,
    k: u32,
    edges: FxHashMap<Edge, Assigned>,
    slots: Slots,
    pools: Pools,
    colored_degree: Vec<u32>,
    forest: PathForest,
}

impl LinearColoring {
    /// An empty coloring of a graph on `n` vertices with palette `1..=k`.
    pub fn new(n: usize, k: u32) -> Self {
        let slots = if n.saturating_mul(k as usize) <= DENSE_LIMIT {
            Slots::Dense(vec![[EMPTY_SLOT; 2]; n * k as usize])
        } else {
            Slots::Sparse(FxHashMap::default())
        };
        LinearColoring {
            n,
            k,
            edges: FxHashMap::default(),
            slots,
            pools: Pools::new(n, k),
            colored_degree: vec![0; n],
            forest: PathForest::new(),
        }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of colored edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn color(&self, e: Edge) -> Option<Color> {
        self.edges.get(&e).map(|a| a.color)
    }

    /// Color of the edge `{a, b}`, or `None` if it is uncolored or absent.
    pub fn color_of(&self, a: VertexId, b: VertexId) -> Option<Color> {
        if a == b {
            return None;
        }
        self.color(Edge::new(a, b))
    }

    /// Colored edges in unspecified order.
    pub fn iter(&self) -> impl Iterator<Item = (Edge, Color)> + '_ {
        self.edges.iter().map(|(&e, a)| (e, a.color))
    }

    /// Colored edges sorted by edge.
    pub fn snapshot(&self) -> Vec<(Edge, Color)> {
        let mut out: Vec<_> = self.iter().collect();
        out.sort_unstable();
        out
    }

    /// Number of distinct colors in use.
    pub fn colors_used(&self) -> usize {
        self.edges
            .values()
            .map(|a| a.color)
            .collect::<BTreeSet<_>>()
            .len()
    }

    pub fn colored_degree(&self, v: VertexId) -> u32 {
        self.colored_degree[v as usize]
    }

    fn slot_key(&self, v: VertexId, c: u32) -> usize {
        v as usize * self.k as usize + (c - 1) as usize
    }

    fn slot(&self, v: VertexId, c: u32) -> [VertexId; 2] {
        match &self.slots {
            Slots::Dense(t) => t[self.slot_key(v, c)],
            Slots::Sparse(m) => m
                .get(&((u64::from(v) << 32) | u64::from(c)))
                .copied()
                .unwrap_or([EMPTY_SLOT; 2]),
        }
    }

    fn set_slot(&mut self, v: VertexId, c: u32, s: [VertexId; 2]) {
        match &mut self.slots {
            Slots::Dense(t) => {
                let i = v as usize * self.k as usize + (c - 1) as usize;
                t[i] = s;
            }
            Slots::Sparse(m) => {
                let key = (u64::from(v) << 32) | u64::from(c);
                if s == [EMPTY_SLOT; 2] {
                    m.remove(&key);
                } else {
                    m.insert(key, s);
                }
            }
        }
    }

    fn slot_count(s: [VertexId; 2]) -> u8 {
        u8::from(s[0] != EMPTY_SLOT) + u8::from(s[1] != EMPTY_SLOT)
    }

    /// Number of edges of color `c` at `v` (0, 1 or 2).
    pub fn count(&self, v: VertexId, c: Color) -> u8 {
        if c.0 > self.k {
            return 0;
        }
        Self::slot_count(self.slot(v, c.0))
    }

    /// Whether `c` appears at most once at `v`.
    pub fn is_free(&self, v: VertexId, c: Color) -> bool {
        self.count(v, c) <= 1
    }

    /// Neighbors of `v` joined to it by an edge of color `c`.
    pub fn color_neighbors(&self, v: VertexId, c: Color) -> impl Iterator<Item = VertexId> {
        let s = if c.0 <= self.k {
            self.slot(v, c.0)
        } else {
            [EMPTY_SLOT; 2]
        };
        s.into_iter().filter(|&x| x != EMPTY_SLOT)
    }

    /// Smallest free color at `v` satisfying `pred`, scanning in increasing order.
    pub fn first_free_where(
        &self,
        v: VertexId,
        mut pred: impl FnMut(Color) -> bool,
    ) -> Option<Color> {
        match &self.pools {
            Pools::Mask(p) => {
                let mut m = p[v as usize].free;
                while m != 0 {
                    let c = Color(m.trailing_zeros() + 1);
                    if pred(c) {
                        return Some(c);
                    }
                    m &= m - 1;
                }
                None
            }
            Pools::Wide(p) => {
                let pool = &p[v as usize];
                for &c in &pool.free {
                    if pred(Color(c)) {
                        return Some(Color(c));
                    }
                }
                (pool.cap + 1..=self.k)
                    .map(Color)
                    .find(|&c| self.count(v, c) <= 1 && pred(c))
            }
        }
    }

    /// Smallest color absent at `v` satisfying `pred`.
    pub fn first_unused_where(
        &self,
        v: VertexId,
        mut pred: impl FnMut(Color) -> bool,
    ) -> Option<Color> {
        match &self.pools {
            Pools::Mask(p) => {
                let mut m = p[v as usize].zero;
                while m != 0 {
                    let c = Color(m.trailing_zeros() + 1);
                    if pred(c) {
                        return Some(c);
                    }
                    m &= m - 1;
                }
                None
            }
            Pools::Wide(p) => {
                let pool = &p[v as usize];
                for &c in &pool.zero {
                    if pred(Color(c)) {
                        return Some(Color(c));
                    }
                }
                (pool.cap + 1..=self.k)
                    .map(Color)
                    .find(|&c| self.count(v, c) == 0 && pred(c))
            }
        }
    }

    pub fn smallest_free(&self, v: VertexId) -> Option<Color> {
        self.first_free_where(v, |_| true)
    }

    pub fn smallest_unused(&self, v: VertexId) -> Option<Color> {
        self.first_unused_where(v, |_| true)
    }

    /// All free colors at `v` in increasing order.
    pub fn free_colors(&self, v: VertexId) -> Vec<Color> {
        (1..=self.k)
            .map(Color)
            .filter(|&c| self.count(v, c) <= 1)
            .collect()
    }

    pub fn profile(&self, v: VertexId) -> VertexColorProfile {
        let mut p = VertexColorProfile::default();
        for c in (1..=self.k).map(Color) {
            match self.count(v, c) {
                0 => p.unused.push(c),
                1 => p.single.push(c),
                _ => p.double.push(c),
            }
        }
        p
    }

    fn check_edge(&self, e: Edge) -> Result<(), ColoringError> {
        for x in [e.u(), e.v()] {
            if x as usize >= self.n {
                return Err(ColoringError::VertexOutOfRange { vertex: x });
            }
        }
        Ok(())
    }

    fn check_color(&self, c: Color) -> Result<(), ColoringError> {
        if c.0 > self.k {
            Err(ColoringError::ColorOutOfRange {
                color: c.0,
                k: self.k,
            })
        } else {
            Ok(())
        }
    }

    /// Some edge of color `c` at `v`.
    fn end_node(&self, v: VertexId, c: Color) -> Option<NodeId> {
        let s = self.slot(v, c.0);
        let w = if s[0] != EMPTY_SLOT { s[0] } else { s[1] };
        if w == EMPTY_SLOT {
            return None;
        }
        self.edges.get(&Edge::new(v, w)).map(|a| a.node)
    }

    /// Whether `x` and `y` lie on a common path of color `c`.
    ///
    /// Takes `&mut self` because queries restructure the splay trees.
    pub fn same_path(&mut self, c: Color, x: VertexId, y: VertexId) -> bool {
        if x == y {
            return true;
        }
        if c.0 > self.k || x as usize >= self.n || y as usize >= self.n {
            return false;
        }
        match (self.end_node(x, c), self.end_node(y, c)) {
            (Some(a), Some(b)) => self.forest.connected(a, b),
            _ => false,
        }
    }

    /// Whether `e` could receive color `c` without breaking linearity.
    pub fn can_assign(&mut self, e: Edge, c: Color) -> Result<(), ColoringError> {
        self.check_edge(e)?;
        self.check_color(c)?;
        if self.edges.contains_key(&e) {
            return Err(ColoringError::AlreadyColored(e));
        }
        let (u, v) = e.endpoints();
        for x in [u, v] {
            if self.count(x, c) >= 2 {
                return Err(ColoringError::WouldExceedDegree {
                    edge: e,
                    color: c,
                    vertex: x,
                });
            }
        }
        if self.same_path(c, u, v) {
            return Err(ColoringError::WouldCloseCycle { edge: e, color: c });
        }
        Ok(())
    }

    pub fn assign(&mut self, e: Edge, c: Color) -> Result<(), ColoringError> {
        self.can_assign(e, c)?;
        let (u, v) = e.endpoints();
        let before = self.end_node(u, c);
        let after = self.end_node(v, c);
        let node = self.forest.link(before, after);
        self.edges.insert(e, Assigned { color: c, node });
        self.attach(u, v, c);
        self.attach(v, u, c);
        Ok(())
    }

    fn attach(&mut self, x: VertexId, y: VertexId, c: Color) {
        let mut s = self.slot(x, c.0);
        if s[0] == EMPTY_SLOT {
            s[0] = y;
        } else {
            s[1] = y;
        }
        self.set_slot(x, c.0, s);
        self.pools.set_count(x, c.0, Self::slot_count(s));
        let d = &mut self.colored_degree[x as usize];
        *d += 1;
        let cap = (*d + 2).min(self.k);
        let LinearColoring {
            k, slots, pools, ..
        } = self;
        if let Pools::Wide(_) = pools {
            let k = *k as usize;
            pools.grow(x, cap, |col| {
                let s = match &*slots {
                    Slots::Dense(t) => t[x as usize * k + (col - 1) as usize],
                    Slots::Sparse(m) => m
                        .get(&((u64::from(x) << 32) | u64::from(col)))
                        .copied()
                        .unwrap_or([EMPTY_SLOT; 2]),
                };
                Self::slot_count(s)
            });
        }
    }

    fn detach(&mut self, x: VertexId, y: VertexId, c: Color) {
        let mut s = self.slot(x, c.0);
        if s[0] == y {
            s[0] = s[1];
        }
        s[1] = EMPTY_SLOT;
        self.set_slot(x, c.0, s);
        self.pools.set_count(x, c.0, Self::slot_count(s));
        self.colored_degree[x as usize] -= 1;
    }

    /// Removes the color of `e` and returns it.
    pub fn unassign(&mut self, e: Edge) -> Result<Color, ColoringError> {
        let a = self.edges.remove(&e).ok_or(ColoringError::NotColored(e))?;
        self.forest.cut(a.node);
        let (u, v) = e.endpoints();
        self.detach(u, v, a.color);
        self.detach(v, u, a.color);
        Ok(a.color)
    }

    /// Changes the color of an already colored edge. Leaves the coloring
    /// untouched on failure.
    pub fn recolor(&mut self, e: Edge, c: Color) -> Result<(), ColoringError> {
        let old = self.color(e).ok_or(ColoringError::NotColored(e))?;
        if old == c {
            return Ok(());
        }
        self.check_color(c)?;
        self.unassign(e)?;
        if let Err(err) = self.assign(e, c) {
            self.assign(e, old)
                .expect("restoring a previous color cannot fail");
            return Err(err);
        }
        Ok(())
    }

    /// Sets the colors of several edges at once.
    ///
    /// Every listed edge first loses its color; then the new colors are
    /// assigned in order (`None` leaves the edge uncolored). Only the final
    /// state has to be linear. On failure the previous state is restored.
    pub fn apply(&mut self, changes: &[(Edge, Option<Color>)]) -> Result<(), ColoringError> {
        debug_assert!(
            {
                let mut seen: Vec<Edge> = changes.iter().map(|c| c.0).collect();
                seen.sort_unstable();
                seen.windows(2).all(|w| w[0] != w[1])
            },
            "an edge is listed twice"
        );
        let old: Vec<(Edge, Option<Color>)> =
            changes.iter().map(|&(e, _)| (e, self.color(e))).collect();
        for &(e, prev) in &old {
            if prev.is_some() {
                self.unassign(e)?;
            }
        }
        for (i, &(e, c)) in changes.iter().enumerate() {
            let Some(c) = c else { continue };
            if let Err(err) = self.assign(e, c) {
                for &(done, c2) in &changes[..i] {
                    if c2.is_some() {
                        self.unassign(done).expect("edge was just colored");
                    }
                }
                for &(e2, prev) in &old {
                    if let Some(p) = prev {
                        self.assign(e2, p)
                            .expect("restoring a previous coloring cannot fail");
                    }
                }
                return Err(err);
            }
        }
        Ok(())
    }

    /// Scrambles the cached profile of `v`. Only used to show that the
    /// verifier does not trust the cache.
    #[cfg(test)]
    pub(crate) fn corrupt_profile(&mut self, v: VertexId) {
        for c in 1..=self.k {
            self.set_slot(v, c, [EMPTY_SLOT; 2]);
            self.pools.set_count(v, c, 0);
        }
    }
}

impl fmt::Debug for LinearColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearColoring")
            .field("k", &self.k)
            .field("edges", &self.snapshot())
            .finish()
    }
}
