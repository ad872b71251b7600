//! Prism search.
//!
//! For every triangle `A = {u0 < v0 < w0}` the three paths are grown one
//! after another. A vertex may join path `i` only if its neighbours among
//! the already placed vertices are exactly its predecessor, plus, when it
//! ends the path, the endpoints of the earlier paths. That keeps the placed
//! set inducing a partial prism at every step.

use crate::graph::Graph;

/// The three paths of a prism, `P1 ++ P2 ++ P3` with their lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct PrismFound {
    pub vertices: Vec<usize>,
    pub lengths: [usize; 3],
}

struct Search<'a> {
    g: &'a Graph,
    paths: [Vec<usize>; 3],
    best: Option<PrismFound>,
    // Stop at the first prism instead of looking for the smallest.
    first_only: bool,
}

impl Search<'_> {
    fn placed_count(&self) -> usize {
        self.paths.iter().map(Vec::len).sum()
    }

    fn done(&self) -> bool {
        self.first_only && self.best.is_some()
    }

    fn record(&mut self) {
        let vertices: Vec<usize> = self.paths.iter().flatten().copied().collect();
        let lengths = [0, 1, 2].map(|i| self.paths[i].len() - 1);
        let better = match &self.best {
            None => true,
            Some(b) => (vertices.len(), &vertices) < (b.vertices.len(), &b.vertices),
        };
        if better {
            self.best = Some(PrismFound { vertices, lengths });
        }
    }

    fn grow(&mut self, i: usize, placed: u64, ends: u64) {
        if self.done() {
            return;
        }
        if let Some(b) = &self.best {
            // Each unfinished path still needs at least one more vertex.
            if self.placed_count() + (3 - i) > b.vertices.len() {
                return;
            }
        }
        let g = self.g;
        let last = *self.paths[i].last().unwrap();
        let mut cand = g.row(last) & !placed;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let seen = g.row(w) & placed;
            let prev = 1u64 << last;
            self.paths[i].push(w);
            if seen == prev | ends {
                // w closes path i; the endpoints so far must form a clique.
                if i == 2 {
                    self.record();
                } else {
                    self.grow(i + 1, placed | 1 << w, ends | 1 << w);
                }
            }
            // For the first path the two tests coincide and both branches run.
            if seen == prev {
                self.grow(i, placed | 1 << w, ends);
            }
            self.paths[i].pop();
            if self.done() {
                return;
            }
        }
    }
}

/// A prism in `g`, the smallest by vertex count and then lexicographically
/// by `P1 ++ P2 ++ P3`; or any prism when `first_only` is set.
pub(crate) fn search(g: &Graph, first_only: bool) -> Option<PrismFound> {
    let n = g.n();
    if n < 6 {
        return None;
    }
    let mut s = Search { g, paths: [vec![], vec![], vec![]], best: None, first_only };
    for a in 0..n {
        for b in (a + 1..n).filter(|&b| g.has_edge(a, b)) {
            for c in (b + 1..n).filter(|&c| g.has_edge(a, c) && g.has_edge(b, c)) {
                s.paths = [vec![a], vec![b], vec![c]];
                let placed = 1u64 << a | 1 << b | 1 << c;
                s.grow(0, placed, 0);
                if s.done() {
                    return s.best;
                }
            }
        }
    }
    s.best
}
