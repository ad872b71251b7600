//! Deliberately naive reference implementations: subset enumeration and
//! full assignment enumeration, sharing no code with the library's search.
#![allow(dead_code)]

use std::collections::BTreeSet;

use prext::{Graph, VertexSet};
use proptest::prelude::*;

pub fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// A graph together with a per-vertex label in `0..=3` (0 = unassigned).
pub fn graph_with_labels(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(0..=3usize, n))
    })
}

/// Greedy family from labels: vertex `v` joins class `labels[v]` when it is
/// compatible with everything already there, else stays out.
pub fn family_from_labels(g: &Graph, labels: &[usize], cliques: bool) -> Vec<VertexSet> {
    let mut classes = vec![VertexSet::EMPTY; 3];
    for (v, &l) in labels.iter().enumerate() {
        if l == 0 {
            continue;
        }
        let c = classes[l - 1];
        let ok = c.iter().all(|u| g.has_edge(u, v) == cliques);
        if ok {
            classes[l - 1] = c.with(v);
        }
    }
    classes.into_iter().filter(|c| !c.is_empty()).collect()
}

fn members(s: u64) -> Vec<usize> {
    (0..64).filter(|&v| s >> v & 1 == 1).collect()
}

fn degree_in(g: &Graph, v: usize, s: u64) -> usize {
    members(s).into_iter().filter(|&u| g.has_edge(u, v)).count()
}

fn connected(g: &Graph, s: u64) -> bool {
    let vs = members(s);
    let Some(&start) = vs.first() else { return true };
    let mut seen = vec![start];
    let mut i = 0;
    while i < seen.len() {
        let v = seen[i];
        for &u in &vs {
            if g.has_edge(u, v) && !seen.contains(&u) {
                seen.push(u);
            }
        }
        i += 1;
    }
    seen.len() == vs.len()
}

/// `s` induces a chordless cycle on at least four vertices.
pub fn induces_hole(g: &Graph, s: u64) -> bool {
    s.count_ones() >= 4 && members(s).iter().all(|&v| degree_in(g, v, s) == 2) && connected(g, s)
}

/// Length of a shortest hole with the given parity (`None` = any) and at
/// least `min_len` vertices.
pub fn shortest_hole(g: &Graph, odd: Option<bool>, min_len: usize) -> Option<usize> {
    (0u64..1 << g.n())
        .filter(|&s| {
            let l = s.count_ones() as usize;
            l >= min_len && odd.is_none_or(|o| (l % 2 == 1) == o)
        })
        .filter(|&s| induces_hole(g, s))
        .map(|s| s.count_ones() as usize)
        .min()
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    Graph::from_edges(n, edges.filter(|&(i, j)| !g.has_edge(i, j)).collect::<Vec<_>>()).unwrap()
}

pub fn clique_number(g: &Graph) -> usize {
    (0u64..1 << g.n())
        .filter(|&s| {
            let vs = members(s);
            vs.iter().all(|&a| vs.iter().all(|&b| a == b || g.has_edge(a, b)))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn proper(g: &Graph, colors: &[usize]) -> bool {
    g.edges().all(|(u, v)| colors[u] != colors[v])
}

/// Calls `f` on every assignment of colors `1..=k` to the `n` vertices.
fn for_each_assignment(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    let mut colors = vec![1usize; n];
    if n == 0 {
        f(&colors);
        return;
    }
    if k == 0 {
        return;
    }
    loop {
        f(&colors);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if colors[i] < k {
                colors[i] += 1;
                break;
            }
            colors[i] = 1;
            i += 1;
        }
    }
}

/// Proper `k`-colorings of `g` with every vertex of class `j` colored `j + 1`.
pub fn count_extensions(g: &Graph, classes: &[VertexSet], k: usize) -> u64 {
    let mut count = 0;
    for_each_assignment(g.n(), k, &mut |c| {
        let extends = classes.iter().enumerate().all(|(j, cl)| cl.iter().all(|v| c[v] == j + 1));
        if extends && proper(g, c) {
            count += 1;
        }
    });
    count
}

pub fn chromatic_number(g: &Graph) -> usize {
    (0..=g.n()).find(|&k| count_extensions(g, &[], k) > 0).unwrap()
}

/// Fewest colors of an extension, by plain backtracking in id order.
pub fn min_extension(g: &Graph, classes: &[VertexSet]) -> usize {
    let n = g.n();
    let mut fixed = vec![0usize; n];
    for (j, c) in classes.iter().enumerate() {
        for v in c.iter() {
            fixed[v] = j + 1;
        }
    }
    fn extend(g: &Graph, fixed: &[usize], k: usize, colors: &mut Vec<usize>) -> bool {
        let v = colors.len();
        if v == g.n() {
            return true;
        }
        let options: Vec<usize> = if fixed[v] > 0 { vec![fixed[v]] } else { (1..=k).collect() };
        for c in options {
            if (0..v).all(|u| !g.has_edge(u, v) || colors[u] != c) {
                colors.push(c);
                if extend(g, fixed, k, colors) {
                    return true;
                }
                colors.pop();
            }
        }
        false
    }
    (classes.len()..=n.max(classes.len()))
        .find(|&k| extend(g, &fixed, k, &mut Vec::new()))
        .unwrap()
}

/// All induced `u`-`v` paths with at most `max_len` edges, each as a vertex
/// sequence starting at `u`.
pub fn chordless_paths(g: &Graph, u: usize, v: usize, max_len: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for s in 0u64..1 << g.n() {
        if s >> u & 1 == 0 || s >> v & 1 == 0 || s.count_ones() as usize > max_len + 1 {
            continue;
        }
        let vs = members(s);
        let ends_ok = degree_in(g, u, s) == 1 && degree_in(g, v, s) == 1;
        let inner_ok = vs.iter().filter(|&&w| w != u && w != v).all(|&w| degree_in(g, w, s) == 2);
        if !(ends_ok && inner_ok && connected(g, s)) {
            continue;
        }
        let mut path = vec![u];
        while *path.last().unwrap() != v {
            let last = *path.last().unwrap();
            let next = vs.iter().copied().find(|&w| g.has_edge(last, w) && !path.contains(&w)).unwrap();
            path.push(next);
        }
        out.insert(path);
    }
    out
}

/// Number of families of disjoint non-empty cliques, by labeling every
/// vertex with a class index or "none" and deduplicating.
pub fn clique_family_count(g: &Graph) -> usize {
    let n = g.n();
    let mut seen = BTreeSet::new();
    for_each_assignment(n, n + 1, &mut |labels| {
        let mut classes = vec![0u64; n + 1];
        for (v, &l) in labels.iter().enumerate() {
            classes[l - 1] |= 1 << v;
        }
        let fam: BTreeSet<u64> = classes[1..].iter().copied().filter(|&c| c != 0).collect();
        let all_cliques = fam.iter().all(|&c| {
            let vs = members(c);
            vs.iter().all(|&a| vs.iter().all(|&b| a == b || g.has_edge(a, b)))
        });
        if all_cliques {
            seen.insert(fam);
        }
    });
    seen.len()
}
