//! Text formats: DIMACS `.col`, the compact edge list, and family files.
//!
//! DIMACS uses 1-based vertex numbers, the edge list and family files use
//! 0-based ids. Parsed graphs remember the external label of each vertex so
//! reports can be printed in the numbering of the input file.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dimacs,
    EdgeList,
}

/// A graph together with the external label of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub labels: Vec<usize>,
    pub format: GraphFormat,
}

impl ParsedGraph {
    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn relabel(&self, vertices: &[usize]) -> Vec<usize> {
        vertices.iter().map(|&v| self.labels[v]).collect()
    }
}

/// DIMACS if the first meaningful line starts with `c`, `p` or `e`;
/// otherwise the compact edge list.
pub fn detect_format(text: &str) -> GraphFormat {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first.and_then(|l| l.chars().next()) {
        Some('c' | 'p' | 'e') => GraphFormat::Dimacs,
        _ => GraphFormat::EdgeList,
    }
}

pub fn parse_graph(text: &str) -> Result<ParsedGraph, ParseError> {
    match detect_format(text) {
        GraphFormat::Dimacs => parse_dimacs(text),
        GraphFormat::EdgeList => parse_edge_list(text),
    }
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| ParseError::new(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| ParseError::new(line, format!("invalid {what} `{tok}`")))
}

fn graph_error(line: usize, e: GraphError) -> ParseError {
    ParseError::new(line, e.to_string())
}

pub fn parse_dimacs(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(ParseError::new(line, "duplicate problem line"));
                }
                match toks.next() {
                    Some("edge" | "col") => {}
                    other => {
                        return Err(ParseError::new(
                            line,
                            format!("expected `p edge`, found `p {}`", other.unwrap_or("")),
                        ))
                    }
                }
                let vertices = parse_usize(toks.next(), line, "vertex count")?;
                parse_usize(toks.next(), line, "edge count")?;
                if vertices > MAX_VERTICES {
                    return Err(graph_error(line, GraphError::TooManyVertices(vertices)));
                }
                n = Some(vertices);
            }
            Some("e") => {
                let n = n.ok_or_else(|| ParseError::new(line, "edge before problem line"))?;
                let u = parse_usize(toks.next(), line, "vertex")?;
                let v = parse_usize(toks.next(), line, "vertex")?;
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(ParseError::new(
                            line,
                            format!("vertex {w} out of range 1..={n}"),
                        ));
                    }
                }
                if u == v {
                    return Err(ParseError::new(line, format!("self-loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(tok) if tok.starts_with('c') => {}
            Some(tok) => {
                return Err(ParseError::new(line, format!("unexpected line type `{tok}`")))
            }
        }
    }
    let n = n.ok_or_else(|| ParseError::new(text.lines().count().max(1), "missing problem line"))?;
    // Range and loop checks already happened per line.
    let graph = Graph::from_edges(n, edges).map_err(|e| graph_error(0, e))?;
    Ok(ParsedGraph { graph, labels: (1..=n).collect(), format: GraphFormat::Dimacs })
}

pub fn parse_edge_list(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "empty input, expected vertex count"))?;
    let mut toks = header.split_whitespace();
    let n = parse_usize(toks.next(), first, "vertex count")?;
    if toks.next().is_some() {
        return Err(ParseError::new(first, "expected a single vertex count"));
    }
    if n > MAX_VERTICES {
        return Err(graph_error(first, GraphError::TooManyVertices(n)));
    }
    let mut graph = Graph::empty(n).map_err(|e| graph_error(first, e))?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let mut toks = l.split_whitespace();
        let u = parse_usize(toks.next(), line, "vertex")?;
        let v = parse_usize(toks.next(), line, "vertex")?;
        if toks.next().is_some() {
            return Err(ParseError::new(line, "expected exactly two vertex ids"));
        }
        // Validate each edge on its own line so errors point at it.
        Graph::from_edges(n, [(u, v)]).map_err(|e| graph_error(line, e))?;
        edges.push((u, v));
    }
    if !edges.is_empty() {
        graph = Graph::from_edges(n, edges).map_err(|e| graph_error(0, e))?;
    }
    Ok(ParsedGraph { graph, labels: (0..n).collect(), format: GraphFormat::EdgeList })
}

/// Splits a stream of edge-list blocks separated by blank lines.
pub fn parse_edge_list_stream(text: &str) -> Result<Vec<Graph>, ParseError> {
    let mut graphs = Vec::new();
    let mut block = String::new();
    let mut block_start = 1;
    for (i, l) in text.lines().chain(std::iter::once("")).enumerate() {
        if l.trim().is_empty() {
            if !block.is_empty() {
                let parsed = parse_edge_list(&block).map_err(|e| ParseError {
                    line: e.line + block_start - 1,
                    message: e.message,
                })?;
                graphs.push(parsed.graph);
                block.clear();
            }
            block_start = i + 2;
        } else {
            block.push_str(l);
            block.push('\n');
        }
    }
    Ok(graphs)
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{}", g.n()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses `q <j>: v1 v2 ...` lines into classes ordered by `j`.
///
/// Class indices must be exactly `1..=m`, each used once. Blank lines and
/// lines starting with `#` are ignored. Empty classes parse fine and are
/// rejected later by family validation.
pub fn parse_family(text: &str) -> Result<Vec<VertexSet>, ParseError> {
    let mut entries: Vec<(usize, usize, VertexSet)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let rest = l
            .strip_prefix('q')
            .ok_or_else(|| ParseError::new(line, "expected `q <j>: <vertices>`"))?;
        let (index, members) = rest
            .split_once(':')
            .ok_or_else(|| ParseError::new(line, "missing `:` after class index"))?;
        let j = parse_usize(Some(index.trim()), line, "class index")?;
        if j == 0 {
            return Err(ParseError::new(line, "class indices start at 1"));
        }
        let mut class = VertexSet::EMPTY;
        for tok in members.split_whitespace() {
            let v = parse_usize(Some(tok), line, "vertex")?;
            if v >= MAX_VERTICES {
                return Err(ParseError::new(line, format!("vertex {v} beyond the supported maximum")));
            }
            if class.contains(v) {
                return Err(ParseError::new(line, format!("vertex {v} repeated in class {j}")));
            }
            class.insert(v);
        }
        if let Some(&(prev, _, _)) = entries.iter().find(|e| e.1 == j) {
            return Err(ParseError::new(line, format!("class {j} already defined on line {prev}")));
        }
        entries.push((line, j, class));
    }
    entries.sort_by_key(|e| e.1);
    for (expected, &(line, j, _)) in entries.iter().enumerate() {
        if j != expected + 1 {
            return Err(ParseError::new(
                line,
                format!("class indices must be 1..=m without gaps; missing class {}", expected + 1),
            ));
        }
    }
    Ok(entries.into_iter().map(|e| e.2).collect())
}

pub fn write_family(classes: &[VertexSet]) -> String {
    let mut out = String::new();
    for (j, class) in classes.iter().enumerate() {
        write!(out, "q {}:", j + 1).unwrap();
        for v in class.iter() {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}
