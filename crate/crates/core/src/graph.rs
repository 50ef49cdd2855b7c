//! Simple undirected graphs with ordered adjacency sets.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// Index of a vertex in a [`Graph`].
pub type VertexId = u32;

/// An undirected edge stored with its endpoints in increasing order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    /// Builds the edge `{a, b}`. The endpoints may be given in either order.
    ///
    /// # Panics
    ///
    /// Panics if `a == b`.
    pub fn new(a: VertexId, b: VertexId) -> Self {
        assert_ne!(a, b, "an edge needs two distinct endpoints");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    /// The smaller endpoint.
    pub fn u(self) -> VertexId {
        self.u
    }

    /// The larger endpoint.
    pub fn v(self) -> VertexId {
        self.v
    }

    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn has_endpoint(self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`.
    pub fn other(self, x: VertexId) -> VertexId {
        debug_assert!(self.has_endpoint(x));
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("edge {0} is not in the graph")]
    MissingEdge(Edge),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
}

/// A simple undirected graph on the vertex set `0..n`.
///
/// The vertex count is fixed at construction; edges can be added and removed.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<VertexId>>,
    edge_count: usize,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops and repeated edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Graph::new(n);
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.edge_count == 0
    }

    fn check_vertex(&self, x: VertexId) -> Result<(), GraphError> {
        if (x as usize) < self.adj.len() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: x,
                n: self.adj.len(),
            })
        }
    }

    fn check_pair(&self, a: VertexId, b: VertexId) -> Result<Edge, GraphError> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        Ok(Edge::new(a, b))
    }

    pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> Result<Edge, GraphError> {
        let e = self.check_pair(a, b)?;
        if !self.adj[a as usize].insert(b) {
            return Err(GraphError::DuplicateEdge(e));
        }
        self.adj[b as usize].insert(a);
        self.edge_count += 1;
        Ok(e)
    }

    pub fn remove_edge(&mut self, a: VertexId, b: VertexId) -> Result<Edge, GraphError> {
        let e = self.check_pair(a, b)?;
        if !self.adj[a as usize].remove(&b) {
            return Err(GraphError::MissingEdge(e));
        }
        self.adj[b as usize].remove(&a);
        self.edge_count -= 1;
        Ok(e)
    }

    /// Returns `false` for out-of-range vertices and for `a == b`.
    pub fn adjacent(&self, a: VertexId, b: VertexId) -> bool {
        self.adj.get(a as usize).is_some_and(|set| set.contains(&b))
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.adjacent(e.u(), e.v())
    }

    pub fn degree(&self, x: VertexId) -> usize {
        self.adj[x as usize].len()
    }

    /// Neighbors of `x` in increasing order.
    pub fn neighbors(&self, x: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[x as usize].iter().copied()
    }

    /// Sum of the endpoint degrees of the edge `ab`.
    pub fn edge_weight(&self, a: VertexId, b: VertexId) -> Result<usize, GraphError> {
        let e = self.check_pair(a, b)?;
        if !self.adjacent(a, b) {
            return Err(GraphError::MissingEdge(e));
        }
        Ok(self.degree(a) + self.degree(b))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// All edges, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(a, set)| {
            let a = a as VertexId;
            set.range(a + 1..).map(move |&b| Edge { u: a, v: b })
        })
    }

    /// A breadth-first numbering: `order[x]` is the new name of `x`.
    /// Neighbors get nearby names, which keeps later passes cache friendly.
    pub fn bfs_order(&self) -> Vec<VertexId> {
        let n = self.adj.len();
        let mut order = vec![VertexId::MAX; n];
        let mut queue = VecDeque::new();
        let mut next = 0;
        for s in 0..n as VertexId {
            if order[s as usize] != VertexId::MAX {
                continue;
            }
            order[s as usize] = next;
            next += 1;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x as usize] {
                    if order[y as usize] == VertexId::MAX {
                        order[y as usize] = next;
                        next += 1;
                        queue.push_back(y);
                    }
                }
            }
        }
        order
    }

    /// The graph with each vertex `x` renamed to `order[x]`.
    ///
    /// # Panics
    /// If `order` is not a permutation of `0..n`.
    pub fn relabeled(&self, order: &[VertexId]) -> Graph {
        assert_eq!(order.len(), self.adj.len(), "order must name every vertex");
        let mut adj = vec![BTreeSet::new(); self.adj.len()];
        for (x, set) in self.adj.iter().enumerate() {
            let slot = &mut adj[order[x] as usize];
            assert!(
                BTreeSet::is_empty(slot) || set.is_empty(),
                "order is not a permutation"
            );
            slot.extend(set.iter().map(|&y| order[y as usize]));
        }
        Graph {
            adj,
            edge_count: self.edge_count,
        }
    }

    /// Vertices with at least one incident edge.
    pub fn non_isolated(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.adj.len() as VertexId).filter(|&x| !self.adj[x as usize].is_empty())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
