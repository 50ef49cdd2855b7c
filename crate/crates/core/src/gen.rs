//! Seeded random planar graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
}

/// A random planar graph on `n` vertices with maximum degree at most
/// `target_delta`.
///
/// Builds a stacked triangulation by repeatedly splitting a random face,
/// then deletes random edges at every vertex whose degree exceeds the target.
/// The result is a deterministic function of the arguments.
pub fn gen_planar(n: usize, target_delta: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::InvalidParams(format!(
            "need at least 3 vertices, got {n}"
        )));
    }
    if n > VertexId::MAX as usize / 2 {
        return Err(GenError::InvalidParams(format!("too many vertices: {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    let mut faces: Vec<[VertexId; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    for (a, b) in [(0, 1), (1, 2), (0, 2)] {
        g.add_edge(a, b).expect("fresh triangle");
    }
    for x in 3..n as VertexId {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[i];
        faces[i] = [a, b, x];
        faces.push([b, c, x]);
        faces.push([c, a, x]);
        for y in [a, b, c] {
            g.add_edge(x, y).expect("new vertex has no edges yet");
        }
    }
    for x in 0..n as VertexId {
        while g.degree(x) > target_delta {
            let pick = rng.gen_range(0..g.degree(x));
            let y = g.neighbors(x).nth(pick).expect("index below degree");
            g.remove_edge(x, y).expect("edge exists");
        }
    }
    Ok(g)
}

/// A random 2-connected plane graph with maximum degree at most
/// `max_degree`, rich in vertices of degree 2 and 3 next to saturated
/// vertices.
///
/// Faces are tracked as vertex cycles. Each step either places a new vertex
/// inside a face joined to some of its corners, or adds a chord across a face.
/// Vertices that cannot be placed stay isolated.
pub fn gen_planar_dense(n: usize, max_degree: usize, seed: u64) -> Result<Graph, GenError> {
    if n < 3 {
        return Err(GenError::InvalidParams(format!(
            "need at least 3 vertices, got {n}"
        )));
    }
    if max_degree < 2 {
        return Err(GenError::InvalidParams(format!(
            "maximum degree must be at least 2, got {max_degree}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for (a, b) in [(0, 1), (1, 2), (0, 2)] {
        g.add_edge(a, b).expect("fresh triangle");
    }
    let mut faces: Vec<Vec<VertexId>> = vec![vec![0, 1, 2], vec![0, 2, 1]];
    let mut next: VertexId = 3;
    let mut failures = 0;
    while (next as usize) < n && failures < 200 {
        let fi = rng.gen_range(0..faces.len());
        let face = &faces[fi];
        let open: Vec<usize> = (0..face.len())
            .filter(|&i| g.degree(face[i]) < max_degree)
            .collect();
        let chord = rng.gen_bool(0.15);
        if chord {
            if let Some((i, j)) = pick_chord(&g, face, &open, &mut rng) {
                let (a, b) = (face[i], face[j]);
                g.add_edge(a, b).expect("chord endpoints are not adjacent");
                let first: Vec<_> = face[i..=j].to_vec();
                let mut second: Vec<_> = face[j..].to_vec();
                second.extend_from_slice(&face[..=i]);
                faces[fi] = first;
                faces.push(second);
                failures = 0;
            } else {
                failures += 1;
            }
            continue;
        }
        let want = match rng.gen_range(0..10) {
            0..=3 => 2,
            4..=7 => 3,
            _ => rng.gen_range(2..=6),
        };
        if open.len() < 2 {
            failures += 1;
            continue;
        }
        let mut chosen: Vec<usize> = open
            .choose_multiple(&mut rng, want.min(open.len()))
            .copied()
            .collect();
        chosen.sort_unstable();
        let x = next;
        next += 1;
        for &i in &chosen {
            g.add_edge(x, face[i]).expect("new vertex has no edges yet");
        }
        let mut new_faces = Vec::with_capacity(chosen.len());
        for w in 0..chosen.len() {
            let (s, t) = (chosen[w], chosen[(w + 1) % chosen.len()]);
            let mut f = vec![x];
            let mut i = s;
            loop {
                f.push(face[i]);
                if i == t {
                    break;
                }
                i = (i + 1) % face.len();
            }
            new_faces.push(f);
        }
        let mut new_faces = new_faces.into_iter();
        faces[fi] = new_faces.next().expect("at least two corners");
        faces.extend(new_faces);
        failures = 0;
    }
    Ok(g)
}

fn pick_chord(
    g: &Graph,
    face: &[VertexId],
    open: &[usize],
    rng: &mut ChaCha8Rng,
) -> Option<(usize, usize)> {
    let len = face.len();
    if len < 4 || open.len() < 2 {
        return None;
    }
    for _ in 0..8 {
        let i = open[rng.gen_range(0..open.len())];
        let j = open[rng.gen_range(0..open.len())];
        let (i, j) = (i.min(j), i.max(j));
        if j - i < 2 || (i == 0 && j == len - 1) {
            continue;
        }
        if !g.adjacent(face[i], face[j]) {
            return Some((i, j));
        }
    }
    None
}
