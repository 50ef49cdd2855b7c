//! Exact linear arboricity of small graphs by exhaustive search.

use thiserror::Error;

use crate::graph::{Edge, Graph, VertexId};

/// Largest edge count accepted by [`brute_force_la`].
pub const BRUTE_FORCE_EDGE_LIMIT: usize = 18;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {edges} edges; exhaustive search is limited to {limit}")]
    TooLarge { edges: usize, limit: usize },
}

/// The least `k` such that the edges of `g` split into `k` linear forests.
pub fn brute_force_la(g: &Graph) -> Result<u32, OracleError> {
    if g.edge_count() > BRUTE_FORCE_EDGE_LIMIT {
        return Err(OracleError::TooLarge {
            edges: g.edge_count(),
            limit: BRUTE_FORCE_EDGE_LIMIT,
        });
    }
    if g.edge_count() == 0 {
        return Ok(0);
    }
    let edges = search_order(g);
    let lower = g.max_degree().div_ceil(2) as u32;
    for k in lower.max(1).. {
        if Search::new(g.vertex_count(), k, &edges).run() {
            return Ok(k);
        }
    }
    unreachable!("one color per edge always works")
}

/// Edges in breadth-first order so that early choices constrain later ones.
fn search_order(g: &Graph) -> Vec<Edge> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(g.edge_count());
    let mut taken = std::collections::BTreeSet::new();
    for root in 0..n as VertexId {
        if seen[root as usize] {
            continue;
        }
        seen[root as usize] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x) {
                let e = Edge::new(x, y);
                if taken.insert(e) {
                    order.push(e);
                }
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    order
}

struct Search<'a> {
    k: usize,
    edges: &'a [Edge],
    /// `count[v * k + c]`: edges of color `c` at `v`.
    count: Vec<u8>,
    /// Union-find per color, without path compression so it can be undone.
    parent: Vec<VertexId>,
    n: usize,
}

impl<'a> Search<'a> {
    fn new(n: usize, k: u32, edges: &'a [Edge]) -> Self {
        let k = k as usize;
        Search {
            k,
            edges,
            count: vec![0; n * k],
            parent: (0..k).flat_map(|_| 0..n as VertexId).collect(),
            n,
        }
    }

    fn find(&self, c: usize, mut x: VertexId) -> VertexId {
        let base = c * self.n;
        while self.parent[base + x as usize] != x {
            x = self.parent[base + x as usize];
        }
        x
    }

    fn run(&mut self) -> bool {
        self.place(0, 0)
    }

    /// Colors edge `i` onward. Colors above `used` are interchangeable, so
    /// only the first of them is tried.
    fn place(&mut self, i: usize, used: usize) -> bool {
        if i == self.edges.len() {
            return true;
        }
        let (u, v) = self.edges[i].endpoints();
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            let (iu, iv) = (u as usize * self.k + c, v as usize * self.k + c);
            if self.count[iu] >= 2 || self.count[iv] >= 2 {
                continue;
            }
            let (ru, rv) = (self.find(c, u), self.find(c, v));
            if ru == rv {
                continue;
            }
            self.count[iu] += 1;
            self.count[iv] += 1;
            self.parent[c * self.n + ru as usize] = rv;
            if self.place(i + 1, used.max(c + 1)) {
                return true;
            }
            self.parent[c * self.n + ru as usize] = ru;
            self.count[iu] -= 1;
            self.count[iv] -= 1;
        }
        false
    }
}
