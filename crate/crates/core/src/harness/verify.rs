//! Report-producing runs: pick a population of graphs, check every graph
//! independently (in parallel), merge the tallies in population order.

use rayon::prelude::*;

use crate::contraction::{cocontract_graph, CliqueFamily};
use crate::detect::{holes_of_len, is_meyniel};
use crate::graph::{Graph, VertexSet};

use super::checks::{self, Check};
use super::enumerate::{cliques, for_each_family, graph_from_index, labeled_graph_count};
use super::sample::{sample_graphs, SampleClass};
use super::{encode_graph, Certificate, ExhaustiveScope, HarnessError, SampledScope, Scope, Tally, VerificationReport};

pub const THEOREM1_MAX_N: usize = 6;
pub const LEMMA1_MAX_N: usize = 5;
pub const CLOSURE_MAX_N: usize = 6;
/// Exhaustive part of the sampled checks stops here; larger `n` is sampled.
const EXHAUSTIVE_PART_MAX_N: usize = 6;
/// Sampled checks still enumerate every clique family of each graph.
pub const SAMPLED_FAMILY_MAX_N: usize = 10;

fn guard(name: &str, n_max: usize, max: usize) -> Result<(), HarnessError> {
    if n_max > max {
        return Err(HarnessError::Guard(format!("{name} supports n_max <= {max}, got {n_max}")));
    }
    Ok(())
}

fn exhaustive(n_max: usize, meyniel_only: bool) -> (Vec<Graph>, ExhaustiveScope) {
    let mut graphs = Vec::new();
    for n in 1..=n_max {
        let batch: Vec<Graph> = (0..labeled_graph_count(n))
            .into_par_iter()
            .map(|i| graph_from_index(n, i))
            .filter(|g| !meyniel_only || is_meyniel(g).0)
            .collect();
        graphs.extend(batch);
    }
    let scope = ExhaustiveScope {
        n_min: 1,
        n_max,
        class: if meyniel_only { "meyniel" } else { "all" }.to_string(),
        graphs: graphs.len() as u64,
    };
    (graphs, scope)
}

/// Exhaustive Meyniel graphs up to `min(n_max, 6)`, plus `sample_budget`
/// sampled Meyniel graphs on exactly `n_max` vertices when `n_max > 6`.
fn meyniel_population(n_max: usize, sample_budget: usize, seed: u64) -> Result<(Vec<Graph>, Scope), HarnessError> {
    let (mut graphs, ex) = exhaustive(n_max.min(EXHAUSTIVE_PART_MAX_N), true);
    let mut scope = Scope { exhaustive: Some(ex), sampled: None };
    if n_max > EXHAUSTIVE_PART_MAX_N && sample_budget > 0 {
        guard("sampled verification", n_max, SAMPLED_FAMILY_MAX_N)?;
        let out = sample_graphs(SampleClass::Meyniel, n_max, sample_budget, seed)?;
        scope.sampled = Some(SampledScope {
            class: SampleClass::Meyniel,
            n: n_max,
            seed,
            requested: sample_budget,
            obtained: out.graphs.len(),
            attempts: out.attempts,
        });
        graphs.extend(out.graphs);
    }
    Ok((graphs, scope))
}

fn run(graphs: &[Graph], per_graph: impl Fn(&Graph) -> Tally + Sync + Send) -> Tally {
    let parts: Vec<Tally> = graphs.par_iter().map(per_graph).collect();
    let mut total = Tally::default();
    for t in parts {
        total.merge(t);
    }
    total
}

fn theorem1_graph(g: &Graph) -> Tally {
    let mut t = Tally::default();
    if is_meyniel(g).0 {
        for_each_family(g, true, &mut |classes| {
            let outcome = checks::cocontraction_berge(&cocontract_graph(g, classes));
            t.add("forward", outcome, g, classes, || Check::Theorem1Forward);
        });
    } else {
        let q = checks::imperfection_witness(g).expect("non-Meyniel graph has a witness");
        t.add("reverse", checks::theorem1_reverse(g), g, q.classes(), || Check::Theorem1Reverse);
    }
    t
}

/// Theorem 1 over all graphs on at most `n_max` vertices: Meyniel graphs
/// have only Berge co-contractions, every other graph has an imperfect one
/// given by [`checks::imperfection_witness`].
pub fn verify_theorem1(n_max: usize) -> Result<VerificationReport, HarnessError> {
    guard("verify_theorem1", n_max, THEOREM1_MAX_N)?;
    let (graphs, ex) = exhaustive(n_max, false);
    let tally = run(&graphs, theorem1_graph);
    Ok(tally.into_report("theorem1", Scope { exhaustive: Some(ex), sampled: None }, vec![]))
}

/// Theorem 2: every co-contraction of a Meyniel graph is Artemis.
pub fn verify_theorem2(n_max: usize, sample_budget: usize, seed: u64) -> Result<VerificationReport, HarnessError> {
    let (graphs, scope) = meyniel_population(n_max, sample_budget, seed)?;
    let tally = run(&graphs, |g| {
        let mut t = Tally::default();
        for_each_family(g, true, &mut |classes| {
            let outcome = checks::cocontraction_artemis(&cocontract_graph(g, classes));
            t.add("theorem2", outcome, g, classes, || Check::Theorem2);
        });
        t
    });
    Ok(tally.into_report("theorem2", scope, vec![]))
}

/// Lemma 1 counts for every graph, stable family and `k` in `1..=n`.
pub fn verify_lemma1(n_max: usize) -> Result<VerificationReport, HarnessError> {
    guard("verify_lemma1", n_max, LEMMA1_MAX_N)?;
    let (graphs, ex) = exhaustive(n_max, false);
    let tally = run(&graphs, |g| {
        let mut t = Tally::default();
        for_each_family(g, false, &mut |classes| {
            let q = CliqueFamily::from_classes_unchecked(classes.to_vec()).into_stable_family();
            for k in 1..=g.n() {
                let outcome = checks::lemma1(g, &q, k).expect("sizes are within guards");
                t.add("lemma1", outcome, g, classes, || Check::Lemma1 { k });
            }
        });
        t
    });
    Ok(tally.into_report("lemma1", Scope { exhaustive: Some(ex), sampled: None }, vec![]))
}

fn lemma_meyniel_all(g: &Graph, t: &mut Tally) {
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            for path in g.chordless_paths_between(u, v, n) {
                let on_path: VertexSet = path.iter().copied().collect();
                let xs = g.neighbors(u).intersection(g.neighbors(v)).difference(on_path);
                for x in xs {
                    let outcome = checks::lemma_meyniel(g, &path, x);
                    t.add("meyniel", outcome, g, &[], || Check::LemmaMeyniel { path: path.clone(), x });
                }
            }
        }
    }
}

fn lemma_consecutive_all(g: &Graph, t: &mut Tally) {
    for len in (4..=g.n()).step_by(2) {
        for hole in holes_of_len(g, len) {
            let on_hole: VertexSet = hole.iter().copied().collect();
            for x in g.vertices().difference(on_hole) {
                let outcome = checks::lemma_consecutive(g, &hole, x);
                t.add("consecutive", outcome, g, &[], || Check::LemmaConsecutive { hole: hole.clone(), x });
            }
        }
    }
}

fn lemma_pqz_all(g: &Graph, cliques: &[VertexSet], t: &mut Tally) {
    let n = g.n();
    for u in 0..n {
        for v in (0..n).filter(|&v| v != u) {
            for path in g.chordless_paths_between(u, v, n) {
                let on_path: VertexSet = path.iter().copied().collect();
                let (p0, p1) = (path[0], path[1]);
                for &q in cliques {
                    if !q.is_disjoint(on_path) || !q.is_subset(g.neighbors(p0)) {
                        continue;
                    }
                    let zs = g
                        .vertices()
                        .difference(q.union(on_path).union(g.neighbors(p0)).union(g.neighbors(p1)))
                        .into_iter()
                        .filter(|&z| q.is_subset(g.neighbors(z)));
                    for z in zs {
                        let outcome = checks::lemma_pqz(g, q, &path, z);
                        t.add("pqz", outcome, g, &[], || Check::LemmaPqz {
                            clique: q.to_vec(),
                            path: path.clone(),
                            z,
                        });
                    }
                }
            }
        }
    }
}

fn lemma_notadj_all(g: &Graph, cliques: &[VertexSet], t: &mut Tally) {
    for &q in cliques {
        // Only vertices missing some member of Q may belong to X.
        let allowed: VertexSet = g
            .vertices()
            .difference(q)
            .into_iter()
            .filter(|&x| !q.is_subset(g.neighbors(x)))
            .collect();
        let common = g.vertices().difference(q).into_iter().filter(|&z| q.is_subset(g.neighbors(z)));
        let zs: Vec<usize> = common.collect();
        let mut sub = allowed.0;
        while sub != 0 {
            let x = VertexSet(sub);
            if g.is_connected(x) {
                for &z in zs.iter().filter(|&&z| !x.contains(z) && g.neighbors(z).is_disjoint(x)) {
                    let outcome = checks::lemma_notadj(g, q, x, z);
                    t.add("notadj", outcome, g, &[], || Check::LemmaNotadj {
                        clique: q.to_vec(),
                        set: x.to_vec(),
                        z,
                    });
                }
            }
            sub = (sub - 1) & allowed.0;
        }
    }
}

fn cocontraction_lemmas(g: &Graph, t: &mut Tally) {
    for_each_family(g, true, &mut |classes| {
        let h = cocontract_graph(g, classes);
        t.add("antihole", checks::cocontraction_no_big_antihole(&h), g, classes, || Check::LemmaAntihole);
        t.add("oddhole", checks::cocontraction_no_odd_hole(&h), g, classes, || Check::LemmaOddhole);
        t.add("prism", checks::cocontraction_no_prism(&h), g, classes, || Check::LemmaPrism);
    });
}

/// The seven structural lemmas on Meyniel graphs: four about paths, holes
/// and cliques of the graph itself, three about all its co-contractions.
pub fn verify_structural_lemmas(
    n_max: usize,
    sample_budget: usize,
    seed: u64,
) -> Result<VerificationReport, HarnessError> {
    let (graphs, scope) = meyniel_population(n_max, sample_budget, seed)?;
    let tally = run(&graphs, |g| {
        let mut t = Tally::default();
        let cl = cliques(g);
        lemma_meyniel_all(g, &mut t);
        lemma_consecutive_all(g, &mut t);
        lemma_pqz_all(g, &cl, &mut t);
        lemma_notadj_all(g, &cl, &mut t);
        cocontraction_lemmas(g, &mut t);
        t
    });
    Ok(tally.into_report("structural_lemmas", scope, vec![]))
}

/// Checks that "every co-contraction is Berge" singles out exactly the
/// Meyniel graphs, and certifies two separating examples: the triangular
/// prism (Berge, not Artemis) and `C5` (in neither class).
pub fn closure_probe(n_max: usize) -> Result<VerificationReport, HarnessError> {
    guard("closure_probe", n_max, CLOSURE_MAX_N)?;
    let (graphs, ex) = exhaustive(n_max, false);
    let tally = run(&graphs, |g| {
        let mut t = Tally::default();
        t.add("membership", checks::closure_membership(g), g, &[], || Check::ClosureMembership);
        t
    });

    let prism = Graph::cycle(6).expect("small cycle").complement();
    let (holds, witness) = checks::spanning_prism_strictness(&prism);
    let c5 = Graph::cycle(5).expect("small cycle");
    let c5_outside = !is_meyniel(&c5).0 && checks::theorem1_reverse(&c5) == checks::Outcome::Holds;
    let certificates = vec![
        Certificate {
            claim: "triangular prism is Berge but not Artemis, so it is perfect and not a co-contraction of a Meyniel graph"
                .to_string(),
            graph: encode_graph(&prism),
            holds,
            witness,
        },
        Certificate {
            claim: "C5 is not Meyniel and has a co-contraction (itself) that is not Berge".to_string(),
            graph: encode_graph(&c5),
            holds: c5_outside,
            witness: is_meyniel(&c5).1,
        },
    ];
    Ok(tally.into_report("closure", Scope { exhaustive: Some(ex), sampled: None }, certificates))
}
