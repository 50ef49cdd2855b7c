pub mod bench;
pub mod bounded;
pub mod coloring;
pub mod config;
pub mod extend;
pub mod gen;
pub mod graph;
pub mod highdeg;
pub mod oracle;
mod queue;
pub mod reduce;
pub mod solve;
pub mod verify;

pub use coloring::{Color, ColoringError, LinearColoring, VertexColorProfile};
pub use graph::{Edge, Graph, GraphError, VertexId};
pub use reduce::{Solution, SolveError};
pub use solve::{solve, solve_with, EngineChoice};
