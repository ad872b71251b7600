//! Exhaustive enumeration of labeled graphs and of vertex-set families.

use crate::contraction::{CliqueFamily, StableFamily};
use crate::graph::{Graph, VertexSet};

use super::HarnessError;

/// Largest `n` for exhaustive labeled enumeration (`2^21` graphs).
pub const EXHAUSTIVE_MAX_N: usize = 7;

/// Largest `n` for the public family enumerators.
pub const FAMILY_MAX_N: usize = 8;

/// Vertex pairs `(i, j)`, `i < j`, in lexicographic order; bit `k` of a
/// graph index decides whether pair `k` is an edge.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// The labeled graph on `n` vertices with the given index.
pub fn graph_from_index(n: usize, index: u64) -> Graph {
    let mut rows = vec![0u64; n];
    for (k, (i, j)) in pairs(n).into_iter().enumerate() {
        if index >> k & 1 == 1 {
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
    }
    Graph::from_rows_unchecked(rows)
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices, by increasing index.
pub fn enumerate_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, HarnessError> {
    if n > EXHAUSTIVE_MAX_N {
        return Err(HarnessError::Guard(format!(
            "exhaustive enumeration supports n <= {EXHAUSTIVE_MAX_N}, got {n}"
        )));
    }
    Ok((0..labeled_graph_count(n)).map(move |i| graph_from_index(n, i)))
}

/// Calls `visit` on every family of disjoint non-empty classes, each class a
/// clique (`cliques == true`) or a stable set. Classes are ordered by their
/// smallest member and each family is produced once.
pub(crate) fn for_each_family(g: &Graph, cliques: bool, visit: &mut impl FnMut(&[VertexSet])) {
    let mut classes = Vec::with_capacity(g.n());
    family_step(g, cliques, 0, &mut classes, visit);
}

fn family_step(
    g: &Graph,
    cliques: bool,
    v: usize,
    classes: &mut Vec<VertexSet>,
    visit: &mut impl FnMut(&[VertexSet]),
) {
    if v == g.n() {
        visit(classes);
        return;
    }
    family_step(g, cliques, v + 1, classes, visit);
    let nb = g.neighbors(v);
    for j in 0..classes.len() {
        let c = classes[j];
        let fits = if cliques { c.is_subset(nb) } else { c.is_disjoint(nb) };
        if fits {
            classes[j] = c.with(v);
            family_step(g, cliques, v + 1, classes, visit);
            classes[j] = c;
        }
    }
    classes.push(VertexSet::singleton(v));
    family_step(g, cliques, v + 1, classes, visit);
    classes.pop();
}

fn guard_family(g: &Graph) -> Result<(), HarnessError> {
    if g.n() > FAMILY_MAX_N {
        return Err(HarnessError::Guard(format!(
            "family enumeration supports n <= {FAMILY_MAX_N}, got {}",
            g.n()
        )));
    }
    Ok(())
}

/// Every pre-co-coloring of `g`, including the empty family.
pub fn enumerate_clique_families(g: &Graph) -> Result<impl Iterator<Item = CliqueFamily>, HarnessError> {
    guard_family(g)?;
    let mut out = Vec::new();
    for_each_family(g, true, &mut |c| out.push(CliqueFamily::from_classes_unchecked(c.to_vec())));
    Ok(out.into_iter())
}

/// Every pre-coloring of `g` up to the order of its classes.
pub fn enumerate_stable_families(g: &Graph) -> Result<impl Iterator<Item = StableFamily>, HarnessError> {
    guard_family(g)?;
    let mut out = Vec::new();
    for_each_family(g, false, &mut |c| {
        out.push(CliqueFamily::from_classes_unchecked(c.to_vec()).into_stable_family())
    });
    Ok(out.into_iter())
}

/// All non-empty cliques of `g`.
pub(crate) fn cliques(g: &Graph) -> Vec<VertexSet> {
    fn step(g: &Graph, current: VertexSet, cand: VertexSet, out: &mut Vec<VertexSet>) {
        for v in cand {
            let c = current.with(v);
            out.push(c);
            let above = VertexSet(cand.0 & !((2u64 << v) - 1));
            step(g, c, above.intersection(g.neighbors(v)), out);
        }
    }
    let mut out = Vec::new();
    step(g, VertexSet::EMPTY, g.vertices(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_counts() {
        assert_eq!(enumerate_labeled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(4).unwrap().count(), 64);
        assert_eq!(labeled_graph_count(6), 32768);
        assert!(enumerate_labeled_graphs(8).is_err());
        let all: std::collections::HashSet<_> = enumerate_labeled_graphs(4).unwrap().collect();
        assert_eq!(all.len(), 64);
    }

    #[test]
    fn clique_family_counts() {
        let k2 = Graph::complete(2).unwrap();
        let fams: Vec<_> = enumerate_clique_families(&k2).unwrap().map(|f| f.classes().to_vec()).collect();
        assert_eq!(fams.len(), 5);
        assert!(fams.contains(&vec![VertexSet(0b11)]));
        assert!(fams.contains(&vec![VertexSet(0b01), VertexSet(0b10)]));
        assert_eq!(enumerate_clique_families(&Graph::empty(2).unwrap()).unwrap().count(), 4);
        assert_eq!(enumerate_clique_families(&Graph::empty(1).unwrap()).unwrap().count(), 2);
        assert!(enumerate_clique_families(&Graph::empty(9).unwrap()).is_err());
    }

    #[test]
    fn families_are_canonical_and_valid() {
        let g = Graph::cycle(5).unwrap();
        for f in enumerate_clique_families(&g).unwrap() {
            f.validate(&g).unwrap();
            let firsts: Vec<_> = f.classes().iter().map(|c| c.first().unwrap()).collect();
            assert!(firsts.windows(2).all(|w| w[0] < w[1]));
        }
        for f in enumerate_stable_families(&g).unwrap() {
            f.validate(&g).unwrap();
        }
    }

    #[test]
    fn all_cliques() {
        assert_eq!(cliques(&Graph::complete(4).unwrap()).len(), 15);
        assert_eq!(cliques(&Graph::cycle(5).unwrap()).len(), 10);
    }
}
