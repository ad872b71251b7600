//! Immutable simple graphs with one `u64` adjacency row per vertex.
//!
//! Vertices are dense ids `0..n`. Every operation that looks like a mutation
//! returns a new value, so graphs can be shared freely across threads.

use std::fmt;

use thiserror::Error;

/// Hard cap on the number of vertices: one machine word per adjacency row,
/// with the top bit left free so `1 << n` never overflows.
pub const MAX_VERTICES: usize = 63;

/// Default size limit for detectors and harness runs.
pub const DEFAULT_VERTEX_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices, more than the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric: {0} lists {1} but not the reverse")]
    Asymmetric(usize, usize),
}

/// A set of vertex ids stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All vertices `0..n`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        VertexSet((1u64 << n) - 1)
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    #[inline]
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Duplicate and reversed edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = Graph::empty(n)?.adj;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from raw adjacency rows, checking every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mask = VertexSet::full(n).0;
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                let vertex = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::SelfLoop(v));
            }
        }
        for (v, &row) in adj.iter().enumerate() {
            if let Some(u) = VertexSet(row).iter().find(|&u| adj[u] >> v & 1 == 0) {
                return Err(GraphError::Asymmetric(v, u));
            }
        }
        Ok(Graph { n, adj })
    }

    /// Rows are trusted: symmetric, irreflexive, in range.
    pub(crate) fn from_rows_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, &r)| r >> v & 1 == 0 && VertexSet(r).iter().all(|u| adj[u] >> v & 1 == 1)));
        Graph { n: adj.len(), adj }
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Graph::empty(n).map(|g| g.complement())
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u64 << u) - 1)).iter().map(move |v| (u, v))
        })
    }

    pub fn check_set(&self, s: VertexSet) -> Result<(), GraphError> {
        match s.difference(self.vertices()).first() {
            Some(vertex) => Err(GraphError::VertexOutOfRange { vertex, n: self.n }),
            None => Ok(()),
        }
    }

    /// Same vertex set; `uv` is an edge iff `u != v` and `uv` is not an edge here.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).0;
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &r)| !r & full & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `s`, relabeled `0..|s|` in increasing order of the
    /// original ids. The returned vector maps new ids to original ids.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_set(s)?;
        let map = s.to_vec();
        let adj = map
            .iter()
            .map(|&v| {
                map.iter()
                    .enumerate()
                    .filter(|&(_, &u)| self.has_edge(v, u))
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        Ok((Graph { n: map.len(), adj }, map))
    }

    /// Graph obtained by deleting the vertices in `s`; same relabeling rule as
    /// [`Graph::induced_subgraph`].
    pub fn remove_vertices(&self, s: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.induced_subgraph(self.vertices().difference(s))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.neighbors(v)))
    }

    pub fn is_stable(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.neighbors(v).is_disjoint(s))
    }

    /// Whether `s` induces a connected subgraph. The empty set and
    /// singletons count as connected.
    pub fn is_connected(&self, s: VertexSet) -> bool {
        let Some(start) = s.first() else {
            return true;
        };
        self.component_within(start, s) == s
    }

    /// Vertices of `s` reachable from `start` inside `s`.
    pub fn component_within(&self, start: usize, s: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = 0u64;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = VertexSet(next & s.0 & !seen.0);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter().map(|v| (self.adj[v] & s.0).count_ones() as usize).sum::<usize>() / 2
    }

    /// Whether `path` lists distinct vertices forming an induced path.
    pub fn is_induced_path(&self, path: &[usize]) -> bool {
        let set: VertexSet = path.iter().copied().collect();
        if set.len() != path.len() || path.iter().any(|&v| v >= self.n) {
            return false;
        }
        path.windows(2).all(|w| self.has_edge(w[0], w[1]))
            && self.edges_within(set) == path.len().saturating_sub(1)
    }

    /// Whether `cycle` lists distinct vertices (at least 3) forming an induced
    /// cycle in that cyclic order.
    pub fn is_induced_cycle(&self, cycle: &[usize]) -> bool {
        let len = cycle.len();
        let set: VertexSet = cycle.iter().copied().collect();
        if len < 3 || set.len() != len || cycle.iter().any(|&v| v >= self.n) {
            return false;
        }
        (0..len).all(|i| self.has_edge(cycle[i], cycle[(i + 1) % len])) && self.edges_within(set) == len
    }

    /// Induced paths from `u` to `v` with at most `max_len` edges, each
    /// yielded exactly once as `u, ..., v`.
    pub fn chordless_paths_between(&self, u: usize, v: usize, max_len: usize) -> ChordlessPaths<'_> {
        ChordlessPaths::new(self, u, v, max_len)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Depth-first enumeration of induced `u`–`v` paths.
///
/// A vertex may join the path only if its sole neighbour on the path is the
/// current endpoint. A neighbour of `v` can only be followed by `v` itself.
pub struct ChordlessPaths<'a> {
    g: &'a Graph,
    target: usize,
    max_len: usize,
    path: Vec<usize>,
    // Candidates still to try at each depth.
    pending: Vec<u64>,
    // Union of closed neighbourhoods of path[..len-1].
    blocked: Vec<u64>,
}

impl<'a> ChordlessPaths<'a> {
    fn new(g: &'a Graph, u: usize, v: usize, max_len: usize) -> Self {
        let mut it = ChordlessPaths {
            g,
            target: v,
            max_len,
            path: Vec::new(),
            pending: Vec::new(),
            blocked: Vec::new(),
        };
        if u != v && u < g.n && v < g.n && max_len >= 1 {
            it.path.push(u);
            it.blocked.push(0);
            it.pending.push(it.candidates());
        }
        it
    }

    fn candidates(&self) -> u64 {
        let last = *self.path.last().unwrap();
        let blocked = *self.blocked.last().unwrap();
        let mut on_path = 0u64;
        for &p in &self.path {
            on_path |= 1 << p;
        }
        if blocked >> self.target & 1 == 1 {
            return 0;
        }
        let next = self.g.adj[last] & !blocked & !on_path;
        if next >> self.target & 1 == 1 {
            // Every other continuation would leave a chord to the target.
            return 1 << self.target;
        }
        if self.path.len() >= self.max_len {
            0
        } else {
            next
        }
    }
}

impl Iterator for ChordlessPaths<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        while let Some(pending) = self.pending.last_mut() {
            if *pending == 0 {
                self.pending.pop();
                self.path.pop();
                self.blocked.pop();
                continue;
            }
            let w = pending.trailing_zeros() as usize;
            *pending &= *pending - 1;
            if w == self.target {
                let mut out = self.path.clone();
                out.push(w);
                debug_assert!(self.g.is_induced_path(&out));
                return Some(out);
            }
            let last = *self.path.last().unwrap();
            let blocked = self.blocked.last().unwrap() | self.g.adj[last] | 1 << last;
            self.path.push(w);
            self.blocked.push(blocked);
            let next = self.candidates();
            self.pending.push(next);
        }
        None
    }
}
