//! Contraction of a pre-coloring (`G/Q`) and co-contraction of a
//! pre-co-coloring (`G^Q`), plus lifting colorings of the contracted graph
//! back to extensions of the family.
//!
//! New vertex ids: the uncontracted vertices come first, in increasing
//! order of their original ids, followed by `c_1, ..., c_m`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};
use crate::solve::Coloring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("class {0} is empty")]
    EmptyClass(usize),
    #[error("class {class} is not a stable set ({u} and {v} are adjacent)")]
    NotStable { class: usize, u: usize, v: usize },
    #[error("class {class} is not a clique ({u} and {v} are not adjacent)")]
    NotClique { class: usize, u: usize, v: usize },
    #[error("classes {a} and {b} share vertex {vertex}")]
    Overlap { a: usize, b: usize, vertex: usize },
    #[error("class {class}: {source}")]
    Vertex { class: usize, source: GraphError },
}

impl FamilyError {
    /// 1-based index of the offending class.
    pub fn class(&self) -> usize {
        match *self {
            FamilyError::EmptyClass(c) => c,
            FamilyError::NotStable { class, .. }
            | FamilyError::NotClique { class, .. }
            | FamilyError::Vertex { class, .. } => class,
            FamilyError::Overlap { b, .. } => b,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error("coloring covers {got} vertices, contracted graph has {expected}")]
    WrongSize { got: usize, expected: usize },
    #[error("coloring is not proper: {0} and {1} are adjacent and share a color")]
    Improper(usize, usize),
    #[error("class vertices c_{0} and c_{1} share a color, so no extension corresponds")]
    ClassColorClash(usize, usize),
}

/// Classes shared by both family kinds, with the checks they have in common.
fn check_classes(g: &Graph, classes: &[VertexSet]) -> Result<(), FamilyError> {
    let mut seen = VertexSet::EMPTY;
    for (i, &c) in classes.iter().enumerate() {
        let class = i + 1;
        if c.is_empty() {
            return Err(FamilyError::EmptyClass(class));
        }
        g.check_set(c).map_err(|source| FamilyError::Vertex { class, source })?;
        if let Some(vertex) = c.intersection(seen).first() {
            let a = classes.iter().position(|d| d.contains(vertex)).unwrap() + 1;
            return Err(FamilyError::Overlap { a, b: class, vertex });
        }
        seen = seen.union(c);
    }
    Ok(())
}

/// Disjoint stable sets `C_1..C_m`; class `j` is pre-assigned color `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct StableFamily {
    classes: Vec<VertexSet>,
}

impl StableFamily {
    pub fn new(g: &Graph, classes: Vec<VertexSet>) -> Result<Self, FamilyError> {
        let f = StableFamily { classes };
        f.validate(g)?;
        Ok(f)
    }

    pub fn empty() -> Self {
        StableFamily::default()
    }

    pub fn validate(&self, g: &Graph) -> Result<(), FamilyError> {
        check_classes(g, &self.classes)?;
        for (i, &c) in self.classes.iter().enumerate() {
            for u in c {
                if let Some(v) = g.neighbors(u).intersection(c).first() {
                    return Err(FamilyError::NotStable { class: i + 1, u: u.min(v), v: u.max(v) });
                }
            }
        }
        Ok(())
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn covered(&self) -> VertexSet {
        self.classes.iter().fold(VertexSet::EMPTY, |a, &c| a.union(c))
    }

    /// The same classes, read as cliques of the complement.
    pub fn into_clique_family(self) -> CliqueFamily {
        CliqueFamily { classes: self.classes }
    }
}

/// Disjoint cliques `C_1..C_m`, a pre-coloring of the complement.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CliqueFamily {
    classes: Vec<VertexSet>,
}

impl CliqueFamily {
    pub fn new(g: &Graph, classes: Vec<VertexSet>) -> Result<Self, FamilyError> {
        let f = CliqueFamily { classes };
        f.validate(g)?;
        Ok(f)
    }

    pub fn empty() -> Self {
        CliqueFamily::default()
    }

    /// Skips validation; for enumerators that only generate cliques.
    pub(crate) fn from_classes_unchecked(classes: Vec<VertexSet>) -> Self {
        CliqueFamily { classes }
    }

    pub fn validate(&self, g: &Graph) -> Result<(), FamilyError> {
        check_classes(g, &self.classes)?;
        for (i, &c) in self.classes.iter().enumerate() {
            for u in c {
                if let Some(v) = c.without(u).difference(g.neighbors(u)).first() {
                    return Err(FamilyError::NotClique { class: i + 1, u: u.min(v), v: u.max(v) });
                }
            }
        }
        Ok(())
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn covered(&self) -> VertexSet {
        self.classes.iter().fold(VertexSet::EMPTY, |a, &c| a.union(c))
    }

    /// The same classes, read as stable sets of the complement.
    pub fn into_stable_family(self) -> StableFamily {
        StableFamily { classes: self.classes }
    }
}

/// What a vertex of the contracted graph stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    /// An uncontracted vertex of the original graph.
    Vertex(usize),
    /// The vertex `c_j` (1-based `j`).
    Class(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionResult {
    pub graph: Graph,
    /// `class_vertex[j - 1]` is the id of `c_j` in `graph`.
    pub class_vertex: Vec<usize>,
    /// `origin[id]` for every vertex of `graph`.
    pub origin: Vec<Origin>,
    /// The classes that were contracted, in index order.
    pub classes: Vec<VertexSet>,
    /// Vertex count of the original graph.
    pub original_n: usize,
}

impl ContractionResult {
    pub fn class_vertices(&self) -> VertexSet {
        self.class_vertex.iter().copied().collect()
    }
}

/// `c_j` sees an uncontracted `v` iff `v` has a neighbour in `C_j`
/// (`any`), or iff `v` sees all of `C_j` (`!any`).
fn contracted_rows(g: &Graph, classes: &[VertexSet], any: bool, link_classes: bool) -> (Vec<u64>, Vec<usize>) {
    let covered = classes.iter().fold(VertexSet::EMPTY, |a, &c| a.union(c));
    let rest = g.vertices().difference(covered).to_vec();
    let r = rest.len();
    let n_new = r + classes.len();
    let mut rows = vec![0u64; n_new];
    for (i, &v) in rest.iter().enumerate() {
        for (k, &u) in rest.iter().enumerate() {
            if g.has_edge(v, u) {
                rows[i] |= 1 << k;
            }
        }
    }
    for (j, &c) in classes.iter().enumerate() {
        let cj = r + j;
        for (i, &v) in rest.iter().enumerate() {
            let nb = g.neighbors(v).intersection(c);
            let linked = if any { !nb.is_empty() } else { nb == c };
            if linked {
                rows[i] |= 1 << cj;
                rows[cj] |= 1 << i;
            }
        }
        if link_classes {
            for k in 0..classes.len() {
                if k != j {
                    rows[cj] |= 1 << (r + k);
                }
            }
        }
    }
    (rows, rest)
}

fn build(g: &Graph, classes: &[VertexSet], any: bool, link_classes: bool) -> ContractionResult {
    let (rows, rest) = contracted_rows(g, classes, any, link_classes);
    let r = rest.len();
    let origin = rest
        .iter()
        .map(|&v| Origin::Vertex(v))
        .chain((1..=classes.len()).map(Origin::Class))
        .collect();
    ContractionResult {
        graph: Graph::from_rows_unchecked(rows),
        class_vertex: (r..r + classes.len()).collect(),
        origin,
        classes: classes.to_vec(),
        original_n: g.n(),
    }
}

/// `G/Q`: each stable class becomes `c_j`, adjacent to every uncontracted
/// vertex with a neighbour in `C_j`; the `c_j` form a clique.
pub fn contract(g: &Graph, q: &StableFamily) -> Result<ContractionResult, FamilyError> {
    q.validate(g)?;
    let res = build(g, q.classes(), true, true);
    debug_assert!(res.graph.is_clique(res.class_vertices()));
    Ok(res)
}

/// `G^Q`: each clique becomes `c_j`, adjacent to every uncontracted vertex
/// that sees all of `C_j`; the `c_j` form a stable set.
pub fn cocontract(g: &Graph, q: &CliqueFamily) -> Result<ContractionResult, FamilyError> {
    q.validate(g)?;
    let res = build(g, q.classes(), false, false);
    debug_assert!(res.graph.is_stable(res.class_vertices()));
    Ok(res)
}

/// Only the co-contracted graph, for hot loops over already-valid families.
pub(crate) fn cocontract_graph(g: &Graph, classes: &[VertexSet]) -> Graph {
    Graph::from_rows_unchecked(contracted_rows(g, classes, false, false).0)
}

/// Turns a proper coloring of the contracted graph into a coloring of the
/// original graph that extends the family.
///
/// Colors are first permuted so that `c_j` gets color `j`; the remaining
/// colors keep their relative order and become `m+1, m+2, ...`. Members of
/// `C_j` then take color `j`.
pub fn lift_coloring(res: &ContractionResult, coloring: &Coloring) -> Result<Coloring, LiftError> {
    let g = &res.graph;
    let colors = coloring.colors();
    if colors.len() != g.n() {
        return Err(LiftError::WrongSize { got: colors.len(), expected: g.n() });
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| colors[u] == colors[v]) {
        return Err(LiftError::Improper(u, v));
    }
    let m = res.class_vertex.len();
    let max_color = colors.iter().copied().max().unwrap_or(0);
    let mut perm = vec![0u32; max_color as usize + 1];
    for (j, &cj) in res.class_vertex.iter().enumerate() {
        let c = colors[cj] as usize;
        if perm[c] != 0 {
            let other = res.class_vertex.iter().position(|&x| colors[x] as usize == c).unwrap();
            return Err(LiftError::ClassColorClash(other + 1, j + 1));
        }
        perm[c] = j as u32 + 1;
    }
    let mut next = m as u32;
    for slot in perm.iter_mut().skip(1) {
        if *slot == 0 {
            next += 1;
            *slot = next;
        }
    }
    let mut out = vec![0u32; res.original_n];
    for (id, origin) in res.origin.iter().enumerate() {
        let c = perm[colors[id] as usize];
        match *origin {
            Origin::Vertex(v) => out[v] = c,
            Origin::Class(j) => {
                for v in res.classes[j - 1] {
                    out[v] = c;
                }
            }
        }
    }
    Ok(Coloring::from_colors(out))
}
