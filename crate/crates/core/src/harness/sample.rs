//! Seeded rejection sampling of random graphs.
//!
//! Graph `i` of a batch is drawn from its own generator, seeded from the
//! master seed and `i`, so parallel and serial runs produce the same list.
//! Each draw starts from edge density 1/2; every `ADAPT_EVERY` rejections
//! the density moves toward the side where the class is common (sparser for
//! Meyniel, denser for co-Meyniel).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::detect::is_meyniel;
use crate::graph::{Graph, MAX_VERTICES};

use super::HarnessError;

const ADAPT_EVERY: u64 = 16;
const ADAPT_FACTOR: f64 = 0.85;

/// Attempts allowed per requested graph before giving up on it.
pub const MAX_ATTEMPTS_PER_GRAPH: u64 = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SampleClass {
    Any,
    Meyniel,
    CoMeyniel,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleOutcome {
    pub graphs: Vec<Graph>,
    pub requested: usize,
    pub attempts: u64,
}

impl SampleOutcome {
    /// Requested graphs that could not be drawn within the attempt budget.
    pub fn shortfall(&self) -> usize {
        self.requested - self.graphs.len()
    }
}

pub(crate) fn item_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (index + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> Graph {
    let mut rows = vec![0u64; n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    Graph::from_rows_unchecked(rows)
}

fn accepts(class: SampleClass, g: &Graph) -> bool {
    match class {
        SampleClass::Any => true,
        SampleClass::Meyniel => is_meyniel(g).0,
        SampleClass::CoMeyniel => is_meyniel(&g.complement()).0,
    }
}

fn draw_one(class: SampleClass, n: usize, seed: u64, index: u64) -> (Option<Graph>, u64) {
    let mut rng = item_rng(seed, index);
    let mut density = 0.5f64;
    for attempt in 1..=MAX_ATTEMPTS_PER_GRAPH {
        let g = random_graph(&mut rng, n, density);
        if accepts(class, &g) {
            return (Some(g), attempt);
        }
        if attempt % ADAPT_EVERY == 0 {
            density = match class {
                SampleClass::Any => density,
                SampleClass::Meyniel => density * ADAPT_FACTOR,
                SampleClass::CoMeyniel => 1.0 - (1.0 - density) * ADAPT_FACTOR,
            };
        }
    }
    (None, MAX_ATTEMPTS_PER_GRAPH)
}

pub fn sample_graphs(class: SampleClass, n: usize, count: usize, seed: u64) -> Result<SampleOutcome, HarnessError> {
    if n > MAX_VERTICES {
        return Err(HarnessError::Guard(format!("cannot sample graphs on {n} vertices")));
    }
    let drawn: Vec<(Option<Graph>, u64)> = (0..count as u64)
        .into_par_iter()
        .map(|i| draw_one(class, n, seed, i))
        .collect();
    let attempts = drawn.iter().map(|d| d.1).sum();
    let graphs = drawn.into_iter().filter_map(|d| d.0).collect();
    Ok(SampleOutcome { graphs, requested: count, attempts })
}

pub fn sample_meyniel(n: usize, count: usize, seed: u64) -> Result<SampleOutcome, HarnessError> {
    sample_graphs(SampleClass::Meyniel, n, count, seed)
}

pub fn sample_co_meyniel(n: usize, count: usize, seed: u64) -> Result<SampleOutcome, HarnessError> {
    sample_graphs(SampleClass::CoMeyniel, n, count, seed)
}
