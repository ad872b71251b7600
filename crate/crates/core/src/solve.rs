//! Exact optimization: maximum clique, chromatic number, and pre-coloring
//! extension through contraction.
//!
//! Coloring is an exact DSATUR branch-and-bound seeded with a maximum
//! clique, so every answer here is optimal, not just polynomial on some
//! graph class.

use serde::Serialize;
use thiserror::Error;

use crate::contraction::{
    cocontract, contract, lift_coloring, CliqueFamily, ContractionResult, FamilyError, LiftError,
    StableFamily,
};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Size limit for the brute-force extension counter.
pub const COUNT_EXTENSIONS_MAX_N: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("search exceeded the node budget of {0}")]
    NodeBudget(u64),
    #[error("invalid family: {0}")]
    Family(#[from] FamilyError),
    #[error("{0}")]
    Guard(String),
    #[error("lifting failed: {0}")]
    Lift(#[from] LiftError),
}

/// A coloring with colors `1..=num_colors`, one entry per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<u32>,
    num_colors: usize,
}

impl Coloring {
    pub fn from_colors(colors: Vec<u32>) -> Self {
        let num_colors = colors.iter().copied().max().unwrap_or(0) as usize;
        Coloring { colors, num_colors }
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    /// Color classes; `classes()[i]` holds the vertices colored `i + 1`.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::EMPTY; self.num_colors];
        for (v, &c) in self.colors.iter().enumerate() {
            if c >= 1 {
                out[c as usize - 1].insert(v);
            }
        }
        out
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && self.colors.iter().all(|&c| c >= 1)
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    /// Proper, and every color in `1..=num_colors` is used.
    pub fn is_valid(&self, g: &Graph) -> bool {
        self.is_proper(g) && self.classes().iter().all(|c| !c.is_empty())
    }

    /// Whether class `j` of the coloring contains `C_j` for every `j`.
    pub fn extends(&self, classes: &[VertexSet]) -> bool {
        classes
            .iter()
            .enumerate()
            .all(|(j, c)| c.iter().all(|v| self.colors[v] as usize == j + 1))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub node_budget: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { node_budget: DEFAULT_NODE_BUDGET }
    }
}

/// A maximum clique, found by branch-and-bound with a greedy coloring bound.
pub fn max_clique(g: &Graph) -> VertexSet {
    let mut search = CliqueSearch { g, best: VertexSet::EMPTY };
    // Seed with a greedy clique so the bound prunes from the start.
    let mut greedy = VertexSet::EMPTY;
    let mut cand = g.vertices();
    while let Some(v) = cand.iter().max_by_key(|&v| (g.neighbors(v).intersection(cand).len(), std::cmp::Reverse(v))) {
        greedy.insert(v);
        cand = cand.intersection(g.neighbors(v));
    }
    search.best = greedy;
    search.expand(VertexSet::EMPTY, g.vertices());
    debug_assert!(g.is_clique(search.best));
    search.best
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    best: VertexSet,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, current: VertexSet, cand: VertexSet) {
        if cand.is_empty() {
            if current.len() > self.best.len() {
                self.best = current;
            }
            return;
        }
        let (order, bounds) = self.color_bound(cand);
        let mut cand = cand;
        for i in (0..order.len()).rev() {
            if current.len() + bounds[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            self.expand(current.with(v), cand.intersection(self.g.neighbors(v)));
            cand.remove(v);
        }
    }

    /// Greedy sequential coloring of `cand`; `bounds[i]` is the color of
    /// `order[i]`, an upper bound on the clique size within `order[..=i]`.
    fn color_bound(&self, cand: VertexSet) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(cand.len());
        let mut bounds = Vec::with_capacity(cand.len());
        let mut uncolored = cand;
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut avail = uncolored;
            while let Some(v) = avail.first() {
                order.push(v);
                bounds.push(color);
                uncolored.remove(v);
                avail = avail.without(v).difference(self.g.neighbors(v));
            }
        }
        (order, bounds)
    }
}

/// Clique number of `g`.
pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// Exact chromatic number with a witnessing coloring, default budget.
pub fn chromatic_number(g: &Graph) -> Result<(usize, Coloring), SolveError> {
    chromatic_number_with(g, &SolverConfig::default())
}

pub fn chromatic_number_with(g: &Graph, config: &SolverConfig) -> Result<(usize, Coloring), SolveError> {
    let n = g.n();
    if n == 0 {
        return Ok((0, Coloring::from_colors(Vec::new())));
    }
    let clique = max_clique(g);
    let lower = clique.len();
    let mut best = dsatur_greedy(g);
    if best.num_colors() > lower {
        let mut search = ColorSearch::new(g, lower, best.clone(), config.node_budget);
        // Clique vertices must all differ, so fix them up front.
        for (i, v) in clique.iter().enumerate() {
            search.assign(v, i as u32 + 1);
        }
        search.used = lower as u32;
        search.run()?;
        best = search.best;
    }
    debug_assert!(best.is_valid(g));
    Ok((best.num_colors(), best))
}

/// Greedy DSATUR; ties by degree, then smallest id.
fn dsatur_greedy(g: &Graph) -> Coloring {
    let n = g.n();
    let mut colors = vec![0u32; n];
    let mut sat = vec![0u64; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == 0)
            .max_by_key(|&v| (sat[v].count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (!sat[v] & !1).trailing_zeros();
        colors[v] = c;
        for u in g.neighbors(v) {
            sat[u] |= 1 << c;
        }
    }
    Coloring::from_colors(colors)
}

struct ColorSearch<'a> {
    g: &'a Graph,
    lower: usize,
    colors: Vec<u32>,
    // Bit c set when some colored neighbour has color c.
    sat: Vec<u64>,
    uncolored: u64,
    used: u32,
    best: Coloring,
    nodes: u64,
    budget: u64,
}

impl<'a> ColorSearch<'a> {
    fn new(g: &'a Graph, lower: usize, best: Coloring, budget: u64) -> Self {
        ColorSearch {
            g,
            lower,
            colors: vec![0; g.n()],
            sat: vec![0; g.n()],
            uncolored: g.vertices().0,
            used: 0,
            best,
            nodes: 0,
            budget,
        }
    }

    fn assign(&mut self, v: usize, c: u32) {
        self.colors[v] = c;
        self.uncolored &= !(1 << v);
        for u in self.g.neighbors(v) {
            self.sat[u] |= 1 << c;
        }
    }

    fn run(&mut self) -> Result<(), SolveError> {
        if self.best.num_colors() <= self.lower {
            return Ok(());
        }
        if self.uncolored == 0 {
            self.best = Coloring::from_colors(self.colors.clone());
            return Ok(());
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SolveError::NodeBudget(self.budget));
        }
        let g = self.g;
        let v = VertexSet(self.uncolored)
            .iter()
            .max_by_key(|&v| (self.sat[v].count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        // Only colors that beat the incumbent; at most one fresh color.
        let limit = (self.used + 1).min(self.best.num_colors() as u32 - 1);
        for c in 1..=limit {
            if self.sat[v] >> c & 1 == 1 {
                continue;
            }
            let saved: Vec<(usize, u64)> = g.neighbors(v).iter().map(|u| (u, self.sat[u])).collect();
            let prev_used = self.used;
            self.assign(v, c);
            self.used = self.used.max(c);
            let r = self.run();
            self.colors[v] = 0;
            self.uncolored |= 1 << v;
            for (u, s) in saved {
                self.sat[u] = s;
            }
            self.used = prev_used;
            r?;
            if self.best.num_colors() <= self.lower {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// Number of proper `k`-colorings of `g` whose class `j` contains `C_j`,
/// by plain backtracking over vertices in id order.
pub fn count_extensions(g: &Graph, q: &StableFamily, k: usize) -> Result<u64, SolveError> {
    let n = g.n();
    if n > COUNT_EXTENSIONS_MAX_N {
        return Err(SolveError::Guard(format!(
            "count_extensions supports at most {COUNT_EXTENSIONS_MAX_N} vertices, got {n}"
        )));
    }
    if k > n.max(1) {
        return Err(SolveError::Guard(format!("count_extensions requires k <= n, got k = {k}, n = {n}")));
    }
    q.validate(g)?;
    if q.len() > k {
        return Ok(0);
    }
    let mut fixed = vec![0u32; n];
    for (j, c) in q.classes().iter().enumerate() {
        for v in c.iter() {
            fixed[v] = j as u32 + 1;
        }
    }
    let mut colors = vec![0u32; n];
    Ok(count_from(g, &fixed, k as u32, &mut colors, 0))
}

fn count_from(g: &Graph, fixed: &[u32], k: u32, colors: &mut [u32], v: usize) -> u64 {
    if v == g.n() {
        return 1;
    }
    let choices = if fixed[v] != 0 { fixed[v]..=fixed[v] } else { 1..=k };
    let mut total = 0;
    for c in choices {
        if g.neighbors(v).iter().take_while(|&u| u < v).all(|u| colors[u] != c) {
            colors[v] = c;
            total += count_from(g, fixed, k, colors, v + 1);
        }
    }
    colors[v] = 0;
    total
}

/// Outcome of a pre-coloring extension query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrextAnswer {
    pub feasible: bool,
    pub extension: Option<Coloring>,
    pub colors_used: Option<usize>,
    pub contracted: ContractionResult,
}

#[derive(Serialize)]
struct PrextAnswerJson {
    feasible: bool,
    colors_used: Option<usize>,
    assignment: Vec<[usize; 2]>,
    contracted_size: usize,
}

impl Serialize for PrextAnswer {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let assignment = self
            .extension
            .iter()
            .flat_map(|c| c.colors().iter().enumerate().map(|(v, &c)| [v, c as usize]))
            .collect();
        PrextAnswerJson {
            feasible: self.feasible,
            colors_used: self.colors_used,
            assignment,
            contracted_size: self.contracted.graph.n(),
        }
        .serialize(s)
    }
}

/// Is there a `k`-coloring of `g` extending `q`? Decided as `χ(G/Q) <= k`.
pub fn prext_decide(g: &Graph, q: &StableFamily, k: usize, config: &SolverConfig) -> Result<PrextAnswer, SolveError> {
    let contracted = contract(g, q)?;
    if k < q.len() {
        return Ok(PrextAnswer { feasible: false, extension: None, colors_used: None, contracted });
    }
    let (chi, coloring) = chromatic_number_with(&contracted.graph, config)?;
    if chi > k {
        return Ok(PrextAnswer { feasible: false, extension: None, colors_used: None, contracted });
    }
    let extension = lift_coloring(&contracted, &coloring)?;
    debug_assert!(extension.is_proper(g) && extension.extends(q.classes()));
    Ok(PrextAnswer { feasible: true, extension: Some(extension), colors_used: Some(chi), contracted })
}

/// A minimum extension of `q`; it uses exactly `χ(G/Q)` colors.
pub fn prext_optimize(g: &Graph, q: &StableFamily, config: &SolverConfig) -> Result<PrextAnswer, SolveError> {
    let contracted = contract(g, q)?;
    let (chi, coloring) = chromatic_number_with(&contracted.graph, config)?;
    let extension = lift_coloring(&contracted, &coloring)?;
    debug_assert!(extension.is_proper(g) && extension.extends(q.classes()));
    Ok(PrextAnswer { feasible: true, extension: Some(extension), colors_used: Some(chi), contracted })
}

/// A minimum partition of `V(g)` into cliques in which class `j` contains
/// the pre-assigned clique `C_j`.
///
/// Solved as `prext_optimize` on the complement; the audit field holds the
/// co-contraction `G^Q`, whose complement is the graph actually colored.
pub fn co_prext_optimize(g: &Graph, q: &CliqueFamily, config: &SolverConfig) -> Result<PrextAnswer, SolveError> {
    let co_contracted = cocontract(g, q)?;
    let stable = q.clone().into_stable_family();
    let answer = prext_optimize(&g.complement(), &stable, config)?;
    debug_assert_eq!(answer.contracted.graph.complement(), co_contracted.graph);
    Ok(PrextAnswer { contracted: co_contracted, ..answer })
}

/// `ω(G/Q)`, the lower bound in the clique condition. On a perfect `G/Q` it
/// equals the minimum number of colors of an extension.
pub fn contracted_clique_number(g: &Graph, q: &StableFamily) -> Result<usize, FamilyError> {
    Ok(clique_number(&contract(g, q)?.graph))
}

/// The clique condition for `k` colors: `ω(G/Q) <= k`. Necessary for a
/// `k`-extension, and sufficient whenever `G/Q` is perfect.
pub fn clique_condition(g: &Graph, q: &StableFamily, k: usize) -> Result<bool, FamilyError> {
    Ok(contracted_clique_number(g, q)? <= k)
}
