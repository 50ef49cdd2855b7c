//! Text formats for graphs and colorings.
//!
//! Graphs: a `p <n> <m>` header followed by `m` lines `<u> <v>`.
//! Colorings: a `c <k>` header followed by one `<u> <v> <color>` line per
//! edge. Lines starting with `#` are ignored in both. Output is sorted by
//! edge so that equal inputs produce identical files.

use std::fmt::Write as _;

use linforest::{Color, Edge, Graph, GraphError, VertexId};
use rustc_hash::FxHashSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    NonSimpleInput {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("coloring does not match the graph: {0}")]
    EdgeSetMismatch(String),
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        message: message.into(),
    }
}

/// Non-comment lines with their 1-based line numbers.
fn content(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim_start().starts_with('#') && !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l.split_whitespace().collect()))
}

fn number<T: std::str::FromStr>(line: usize, field: &str, what: &str) -> Result<T, FormatError> {
    field
        .parse()
        .map_err(|_| parse_err(line, format!("invalid {what} {field:?}")))
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    tag: &str,
    arity: usize,
) -> Result<(usize, Vec<&'a str>), FormatError> {
    match lines.next() {
        Some((line, f)) if f.first() == Some(&tag) && f.len() == arity + 1 => Ok((line, f)),
        Some((line, _)) => Err(parse_err(line, format!("expected a {tag:?} header"))),
        None => Err(parse_err(0, format!("missing {tag:?} header"))),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = content(text);
    let (hl, h) = header(&mut lines, "p", 2)?;
    let n: usize = number(hl, h[1], "vertex count")?;
    let m: usize = number(hl, h[2], "edge count")?;
    if n > VertexId::MAX as usize {
        return Err(parse_err(hl, format!("too many vertices: {n}")));
    }
    let mut g = Graph::new(n);
    let mut seen = 0;
    for (line, f) in lines {
        if f.len() != 2 {
            return Err(parse_err(line, "expected \"<u> <v>\""));
        }
        let u: VertexId = number(line, f[0], "vertex")?;
        let v: VertexId = number(line, f[1], "vertex")?;
        g.add_edge(u, v)
            .map_err(|source| FormatError::NonSimpleInput { line, source })?;
        seen += 1;
    }
    if seen != m {
        return Err(parse_err(
            hl,
            format!("header promises {m} edges, found {seen}"),
        ));
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("p {} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(s, "{} {}", e.u(), e.v());
    }
    s
}

/// A parsed coloring file, sorted by edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringFile {
    pub k: u32,
    pub entries: Vec<(Edge, Color)>,
}

impl ColoringFile {
    pub fn new(k: u32, entries: impl IntoIterator<Item = (Edge, Color)>) -> Self {
        let mut entries: Vec<_> = entries.into_iter().collect();
        entries.sort_unstable();
        ColoringFile { k, entries }
    }

    /// Checks that the colored pairs are exactly the edges of `g`.
    pub fn check_edges(&self, g: &Graph) -> Result<(), FormatError> {
        let mut problems = Vec::new();
        let colored: FxHashSet<Edge> = self.entries.iter().map(|&(e, _)| e).collect();
        for &(e, _) in &self.entries {
            let inside = (e.v() as usize) < g.vertex_count() && g.contains_edge(e);
            if !inside {
                problems.push(format!("{e} is not an edge"));
            }
        }
        for e in g.edges() {
            if !colored.contains(&e) {
                problems.push(format!("{e} has no color"));
            }
        }
        if problems.is_empty() {
            return Ok(());
        }
        let more = problems.len().saturating_sub(5);
        problems.truncate(5);
        let mut msg = problems.join(", ");
        if more > 0 {
            let _ = write!(msg, " and {more} more");
        }
        Err(FormatError::EdgeSetMismatch(msg))
    }
}

pub fn parse_coloring(text: &str) -> Result<ColoringFile, FormatError> {
    let mut lines = content(text);
    let (hl, h) = header(&mut lines, "c", 1)?;
    let k: u32 = number(hl, h[1], "color count")?;
    let mut entries = Vec::new();
    let mut seen = FxHashSet::default();
    for (line, f) in lines {
        if f.len() != 3 {
            return Err(parse_err(line, "expected \"<u> <v> <color>\""));
        }
        let u: VertexId = number(line, f[0], "vertex")?;
        let v: VertexId = number(line, f[1], "vertex")?;
        let c: u32 = number(line, f[2], "color")?;
        if u == v {
            return Err(FormatError::NonSimpleInput {
                line,
                source: GraphError::SelfLoop(u),
            });
        }
        if c == 0 {
            return Err(parse_err(line, "colors start at 1"));
        }
        let e = Edge::new(u, v);
        if !seen.insert(e) {
            return Err(parse_err(line, format!("edge {e} colored twice")));
        }
        entries.push((e, Color::new(c)));
    }
    Ok(ColoringFile::new(k, entries))
}

pub fn write_coloring(col: &ColoringFile) -> String {
    let mut s = format!("c {}\n", col.k);
    for (e, c) in &col.entries {
        let _ = writeln!(s, "{} {} {}", e.u(), e.v(), c);
    }
    s
}
