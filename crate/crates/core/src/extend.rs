//! Extending a coloring of a reduced graph back over a configuration.
//!
//! Each function takes a linear coloring of the graph obtained by reducing
//! one configuration and recolors a bounded number of edges so that it
//! becomes a linear coloring of the graph before the reduction. The
//! returned label names the branch that was taken.

use thiserror::Error;

use crate::coloring::{Color, ColoringError, LinearColoring};
use crate::config::Configuration;
use crate::graph::{Edge, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtendError {
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("no suitable free color at vertex {0}")]
    NoFreeColor(VertexId),
    #[error("edge {0} should be colored but is not")]
    MissingColor(Edge),
    #[error("case analysis fell through at {0}")]
    Unreachable(&'static str),
}

type Change = (VertexId, VertexId, Option<Color>);

fn put(a: VertexId, b: VertexId, c: Color) -> Change {
    (a, b, Some(c))
}

fn clear(a: VertexId, b: VertexId) -> Change {
    (a, b, None)
}

fn get(col: &LinearColoring, a: VertexId, b: VertexId) -> Result<Color, ExtendError> {
    col.color_of(a, b)
        .ok_or(ExtendError::MissingColor(Edge::new(a, b)))
}

fn set(col: &mut LinearColoring, changes: &[Change]) -> Result<(), ColoringError> {
    let list: Vec<(Edge, Option<Color>)> = changes
        .iter()
        .map(|&(a, b, c)| (Edge::new(a, b), c))
        .collect();
    col.apply(&list)
}

fn smallest_free(col: &LinearColoring, v: VertexId) -> Result<Color, ExtendError> {
    col.smallest_free(v).ok_or(ExtendError::NoFreeColor(v))
}

/// Restores the edges removed by `cfg` and colors them.
///
/// `col` must color every edge of the reduced graph, including any edge the
/// reduction added; such edges end up uncolored.
pub fn extend(col: &mut LinearColoring, cfg: &Configuration) -> Result<&'static str, ExtendError> {
    match *cfg {
        Configuration::LightEdge { u, v } => light_edge(col, u, v),
        Configuration::TwoVertexNonadjacent { v, u, z } => two_vertex(col, v, u, z),
        Configuration::ConfigA { u, v, w, z } => config_a(col, u, v, w, z),
        Configuration::ConfigB { u, v, t, w, z } => config_b(col, u, v, t, w, z),
        Configuration::TwoPairs { v, u, w, z } => two_pairs(col, v, u, w, z),
        Configuration::ChordedC4 { v, z, u, w } => chorded_c4(col, v, z, u, w),
        Configuration::TwoWithThree { u, v, w, z, x, y } => two_with_three(col, u, v, w, z, x, y),
        Configuration::CubicSmall { v, x, x1, x2, y } => cubic_small(col, v, x, x1, x2, y),
        Configuration::TwoCubic { u, v, w, z, x, y } => two_cubic(col, u, v, w, z, x, y),
    }
}

/// Colors `uv` with the smallest color free at both ends and unused at one.
pub fn light_edge(
    col: &mut LinearColoring,
    u: VertexId,
    v: VertexId,
) -> Result<&'static str, ExtendError> {
    let c = col
        .first_free_where(u, |c| {
            let (cu, cv) = (col.count(u, c), col.count(v, c));
            cv <= 1 && (cu == 0 || cv == 0)
        })
        .ok_or(ExtendError::NoFreeColor(u))?;
    col.assign(Edge::new(u, v), c)?;
    Ok("light-edge")
}

/// Splits the colored edge `uz` into `uv`, `vz` of the same color.
pub fn two_vertex(
    col: &mut LinearColoring,
    v: VertexId,
    u: VertexId,
    z: VertexId,
) -> Result<&'static str, ExtendError> {
    let a = get(col, u, z)?;
    set(col, &[clear(u, z), put(u, v, a), put(v, z, a)])?;
    Ok("two-vertex")
}

pub fn config_a(
    col: &mut LinearColoring,
    u: VertexId,
    v: VertexId,
    w: VertexId,
    z: VertexId,
) -> Result<&'static str, ExtendError> {
    let a = smallest_free(col, u)?;
    if get(col, v, z)? != a || !col.same_path(a, u, v) {
        col.assign(Edge::new(u, z), a)?;
        return Ok("config-a/direct");
    }
    let mut label = "config-a/shift";
    if get(col, v, w)? == a || get(col, w, u)? == a {
        let b = get(col, u, v)?;
        set(col, &[put(v, w, b), put(w, u, b), put(u, v, a)])?;
        label = "config-a/turn-triangle";
    }
    let c = get(col, w, u)?;
    set(col, &[put(u, w, a), put(u, z, c)])?;
    Ok(label)
}

pub fn config_b(
    col: &mut LinearColoring,
    u: VertexId,
    v: VertexId,
    t: VertexId,
    w: VertexId,
    z: VertexId,
) -> Result<&'static str, ExtendError> {
    let a = smallest_free(col, u)?;
    if get(col, t, z)? != a || !col.same_path(a, t, u) {
        col.assign(Edge::new(u, z), a)?;
        return Ok("config-b/direct");
    }
    if get(col, u, w)? == a {
        let b = get(col, u, v)?;
        set(col, &[put(v, w, b), put(u, v, a), put(u, z, b)])?;
        Ok("config-b/through-w")
    } else {
        let b = get(col, u, w)?;
        set(col, &[put(u, w, a), put(u, z, b)])?;
        Ok("config-b/shift")
    }
}

/// The reduced graph lacks `v` and has the extra edge `uw`.
pub fn two_pairs(
    col: &mut LinearColoring,
    v: VertexId,
    u: VertexId,
    w: VertexId,
    z: VertexId,
) -> Result<&'static str, ExtendError> {
    let a = get(col, u, z)?;
    let b = get(col, z, w)?;
    let c = col.unassign(Edge::new(u, w))?;
    if let Some(d) = col.first_free_where(z, |d| d != c) {
        set(col, &[put(v, z, d), put(v, u, c), put(v, w, c)])?;
        return Ok("two-pairs/spare-color");
    }
    if !col.same_path(c, u, z) {
        set(
            col,
            &[put(u, z, c), put(u, v, a), put(v, z, a), put(v, w, c)],
        )?;
        Ok("two-pairs/via-u")
    } else {
        set(
            col,
            &[put(w, z, c), put(w, v, b), put(v, z, b), put(v, u, c)],
        )?;
        Ok("two-pairs/via-w")
    }
}

pub fn chorded_c4(
    col: &mut LinearColoring,
    v: VertexId,
    z: VertexId,
    u: VertexId,
    w: VertexId,
) -> Result<&'static str, ExtendError> {
    let a = smallest_free(col, z)?;
    if get(col, u, w)? != a || !col.same_path(a, w, z) {
        col.assign(Edge::new(u, z), a)?;
        return Ok("chorded-c4/direct");
    }
    let wz = get(col, w, z)?;
    let vz = get(col, v, z)?;
    let vw = get(col, v, w)?;
    if wz == a {
        set(col, &[put(v, z, a), put(u, z, vz)])?;
        return Ok("chorded-c4/chord-a");
    }
    let b = wz;
    match (vz == a, vw == a) {
        (false, false) => {
            set(col, &[put(v, z, a), put(u, z, vz)])?;
            Ok("chorded-c4/pass-vz")
        }
        (false, true) => {
            set(col, &[put(w, z, a), put(v, w, b), put(u, z, b)])?;
            Ok("chorded-c4/vw-a")
        }
        (true, false) => {
            set(
                col,
                &[put(u, z, a), put(w, z, a), put(v, z, b), put(u, w, b)],
            )?;
            Ok("chorded-c4/vz-a")
        }
        (true, true) => {
            let chord = Edge::new(w, z);
            col.unassign(chord)?;
            let w_side = col.same_path(b, v, w);
            col.assign(chord, b)?;
            if !w_side {
                set(col, &[put(w, z, a), put(v, w, b), put(u, z, b)])?;
                Ok("chorded-c4/both-a-w")
            } else {
                set(
                    col,
                    &[put(u, z, a), put(w, z, a), put(v, z, b), put(u, w, b)],
                )?;
                Ok("chorded-c4/both-a-z")
            }
        }
    }
}

const MAX_ROUNDS: usize = 8;

pub fn two_with_three(
    col: &mut LinearColoring,
    u: VertexId,
    v: VertexId,
    w: VertexId,
    z: VertexId,
    x0: VertexId,
    y0: VertexId,
) -> Result<&'static str, ExtendError> {
    for _ in 0..MAX_ROUNDS {
        let a = smallest_free(col, v)?;
        if get(col, u, w)? != a || !col.same_path(a, v, u) {
            col.assign(Edge::new(u, v), a)?;
            return Ok("two-with-three/direct");
        }
        let vz = get(col, v, z)?;
        if vz != a {
            let (zx, zy) = (get(col, z, x0)?, get(col, z, y0)?);
            if zx == a && zy == a {
                let f = get(col, x0, y0)?;
                set(
                    col,
                    &[
                        put(z, x0, f),
                        put(z, y0, f),
                        put(x0, y0, a),
                        put(u, v, vz),
                        put(v, z, a),
                    ],
                )?;
                return Ok("two-with-three/pass-vz-rotated");
            }
            set(col, &[put(u, v, vz), put(v, z, a)])?;
            return Ok("two-with-three/pass-vz");
        }
        let (x, y) = if get(col, z, x0)? == a {
            (x0, y0)
        } else if get(col, z, y0)? == a {
            (y0, x0)
        } else {
            return Err(ExtendError::Unreachable("two-with-three: no a-edge at z"));
        };
        let b = get(col, z, y)?;
        let f = get(col, x, v)?;
        if f != b {
            set(col, &[put(z, x, f), put(v, z, f), put(x, v, a)])?;
            continue;
        }
        let c = get(col, v, w)?;
        let blocked = c == b && {
            let vw = Edge::new(v, w);
            col.unassign(vw)?;
            let joined = col.same_path(b, x, y);
            col.assign(vw, c)?;
            joined
        };
        if !blocked {
            set(
                col,
                &[put(u, w, c), put(v, z, c), put(v, w, a), put(u, v, a)],
            )?;
            return Ok("two-with-three/swap-vw");
        }
        let d = get(col, v, y)?;
        set(
            col,
            &[
                put(v, x, a),
                put(v, y, b),
                put(x, z, b),
                put(u, v, d),
                put(y, z, d),
            ],
        )?;
        return Ok("two-with-three/fan");
    }
    Err(ExtendError::Unreachable("two-with-three: no progress"))
}

pub fn cubic_small(
    col: &mut LinearColoring,
    v: VertexId,
    x: VertexId,
    x1: VertexId,
    x2: VertexId,
    y: VertexId,
) -> Result<&'static str, ExtendError> {
    let vx = Edge::new(v, x);
    if let Some(a) = col.smallest_unused(v) {
        let (xx1, xx2) = (get(col, x, x1)?, get(col, x, x2)?);
        if xx1 != a || xx2 != a {
            col.assign(vx, a)?;
            return Ok("cubic-small/unused");
        }
        if let Some(e) = col.color_of(x1, v) {
            set(col, &[put(x, x1, e), put(v, x, e), put(x1, v, a)])?;
            return Ok("cubic-small/via-x1");
        }
        if let Some(e) = col.color_of(x2, v) {
            set(col, &[put(x, x2, e), put(v, x, e), put(x2, v, a)])?;
            return Ok("cubic-small/via-x2");
        }
        if let Some(f) = col.color_of(x1, x2) {
            set(
                col,
                &[put(x, x1, f), put(x, x2, f), put(v, x, a), put(x1, x2, a)],
            )?;
            return Ok("cubic-small/via-chord");
        }
        return Err(ExtendError::Unreachable("cubic-small: no triangle at x"));
    }
    let a = smallest_free(col, v)?;
    let b = col
        .first_free_where(v, |c| c != a)
        .ok_or(ExtendError::NoFreeColor(v))?;
    for c in [a, b] {
        if col.count(x, c) == 0 {
            col.assign(vx, c)?;
            return Ok("cubic-small/single");
        }
    }
    for c in [a, b] {
        if col.count(x, c) <= 1 && !col.same_path(c, v, x) {
            col.assign(vx, c)?;
            return Ok("cubic-small/no-path");
        }
    }
    let c = get(col, v, y)?;
    let second = if col.count(y, a) < 2 { a } else { b };
    set(col, &[put(v, x, c), put(v, y, second)])?;
    Ok("cubic-small/borrow-vy")
}

fn attempt(col: &mut LinearColoring, changes: &[Change]) -> bool {
    set(col, changes).is_ok()
}

pub fn two_cubic(
    col: &mut LinearColoring,
    u: VertexId,
    v: VertexId,
    w0: VertexId,
    z0: VertexId,
    x: VertexId,
    y: VertexId,
) -> Result<&'static str, ExtendError> {
    let uv = Edge::new(u, v);
    for _ in 0..MAX_ROUNDS {
        let a = smallest_free(col, u)?;
        let (cz, cw) = (get(col, v, z0)?, get(col, v, w0)?);
        if cz != a && cw != a {
            col.assign(uv, a)?;
            return Ok("two-cubic/direct");
        }
        if cz == a && cw == a {
            let b = get(col, z0, w0)?;
            set(
                col,
                &[put(v, z0, b), put(v, w0, b), put(z0, w0, a), put(u, v, a)],
            )?;
            return Ok("two-cubic/both-a");
        }
        // From here on vw has color a and vz does not.
        let (w, z) = if cw == a { (w0, z0) } else { (z0, w0) };
        let b = get(col, v, z)?;
        if !col.same_path(a, u, v) {
            col.assign(uv, a)?;
            return Ok("two-cubic/no-path");
        }
        let c = get(col, w, x)?;
        if c != a {
            if col.count(x, a) <= 1 {
                if attempt(col, &[put(v, w, c), put(w, x, a), put(u, v, a)]) {
                    return Ok("two-cubic/swap-at-w");
                }
                let xz = get(col, x, z)?;
                if c != b || xz == b {
                    return Err(ExtendError::Unreachable("two-cubic: swap at w blocked"));
                }
                set(
                    col,
                    &[
                        put(v, z, xz),
                        put(z, x, b),
                        put(v, w, b),
                        put(w, x, a),
                        put(u, v, a),
                    ],
                )?;
                return Ok("two-cubic/double-swap");
            }
            // Both zx and xy have color a.
            let zy = get(col, z, y)?;
            if zy != c {
                set(col, &[put(z, x, zy), put(x, y, zy), put(z, y, a)])?;
                continue;
            }
            if attempt(
                col,
                &[
                    put(v, w, c),
                    put(w, x, a),
                    put(z, y, a),
                    put(z, x, c),
                    put(x, y, c),
                    put(u, v, a),
                ],
            ) {
                return Ok("two-cubic/rotate-at-x");
            }
            if !col.same_path(a, u, x) {
                set(
                    col,
                    &[
                        put(v, z, a),
                        put(z, x, b),
                        put(v, w, b),
                        put(w, x, a),
                        put(u, v, a),
                    ],
                )?;
                return Ok("two-cubic/double-swap-off-x");
            }
            let zx = Edge::new(z, x);
            col.unassign(zx)?;
            let z_first = col.same_path(a, w, z);
            col.assign(zx, a)?;
            if z_first {
                let c2 = get(col, u, z)?;
                set(col, &[put(u, z, a), put(u, v, c2), put(z, x, c2)])?;
                return Ok("two-cubic/via-uz");
            }
            let c2 = get(col, u, w)?;
            if c2 != b {
                set(
                    col,
                    &[
                        put(u, w, a),
                        put(u, v, c2),
                        put(v, w, b),
                        put(v, z, a),
                        put(z, x, b),
                        put(w, x, c2),
                    ],
                )?;
                return Ok("two-cubic/via-uw");
            }
            let c3 = get(col, w, z)?;
            set(
                col,
                &[
                    put(u, w, a),
                    put(u, v, b),
                    put(v, w, c3),
                    put(v, z, a),
                    put(z, x, c3),
                    put(z, w, b),
                ],
            )?;
            return Ok("two-cubic/via-uw-wz");
        }
        // wx has color a as well, so x has a second a-edge.
        if get(col, x, y)? == a {
            let c = get(col, x, z)?;
            if c != b {
                let wy = get(col, w, y)?;
                if wy == c {
                    set(col, &[put(v, z, c), put(z, x, b)])?;
                } else {
                    set(col, &[put(w, x, wy), put(x, y, wy), put(w, y, a)])?;
                }
                continue;
            }
            let d = get(col, u, w)?;
            set(col, &[put(x, w, d), put(u, v, d), put(u, w, a)])?;
            return Ok("two-cubic/trade-uw");
        }
        if get(col, x, z)? != a {
            return Err(ExtendError::Unreachable("two-cubic: x has one a-edge"));
        }
        let c = get(col, w, z)?;
        if get(col, x, y)? != c {
            set(col, &[put(w, x, c), put(x, z, c), put(w, z, a)])?;
            continue;
        }
        if attempt(col, &[put(v, z, a), put(z, x, b)]) {
            continue;
        }
        let d = get(col, u, w)?;
        if attempt(col, &[put(u, v, d), put(w, x, d), put(u, w, a)]) {
            return Ok("two-cubic/trade-uw-wx");
        }
        if get(col, u, z)? == a {
            let c2 = get(col, w, y)?;
            set(
                col,
                &[
                    put(u, z, b),
                    put(u, w, a),
                    put(v, w, c2),
                    put(w, z, a),
                    put(w, x, b),
                    put(w, y, b),
                    put(x, y, c2),
                    put(u, v, a),
                ],
            )?;
            return Ok("two-cubic/eight-edge");
        }
        let c2 = get(col, u, z)?;
        set(
            col,
            &[
                put(u, z, b),
                put(z, v, a),
                put(z, x, c2),
                put(u, w, a),
                put(v, w, b),
                put(u, v, c2),
            ],
        )?;
        return Ok("two-cubic/five-edge");
    }
    Err(ExtendError::Unreachable("two-cubic: no progress"))
}
