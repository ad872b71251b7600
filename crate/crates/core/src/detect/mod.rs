//! Forbidden induced structures and the graph classes defined by them.
//!
//! Every detector is exhaustive for graphs within the vertex cap and returns
//! a [`Witness`] that can be re-checked against the host graph on its own.
//! Among qualifying structures the smallest is reported, ties broken by the
//! lexicographically smallest vertex list.

mod holes;
mod prism;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub(crate) use holes::holes_of_len;

/// Size limit for [`is_meyniel_definitional`], which enumerates every cycle.
pub const DEFINITIONAL_MAX_N: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetectError {
    #[error("graph has {n} vertices, the definitional check supports at most {max}")]
    TooLarge { n: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum WitnessKind {
    OddHole,
    EvenHole,
    House,
    Antihole,
    Prism,
    OddCycleFewChords,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WitnessExtra {
    /// The single chord of a house, `p1 p3`.
    Chord { chord: [usize; 2] },
    /// Triangles `A`, `B` and path lengths `r, s, t` of a prism.
    Prism { triangles: [[usize; 3]; 2], path_lengths: [usize; 3] },
}

/// A forbidden structure found in a graph.
///
/// `vertices` is in cyclic order for holes, antiholes (order of the hole in
/// the complement) and odd cycles; `p1, p2, ..., pL` with chord `p1 p3` for a
/// house; `P1 ++ P2 ++ P3` for a prism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub vertices: Vec<usize>,
    pub extra: Option<WitnessExtra>,
}

impl Witness {
    fn hole(cycle: Vec<usize>) -> Self {
        let kind = if cycle.len() % 2 == 1 { WitnessKind::OddHole } else { WitnessKind::EvenHole };
        Witness { kind, vertices: cycle, extra: None }
    }

    fn house(vertices: Vec<usize>) -> Self {
        let chord = [vertices[0], vertices[2]];
        Witness { kind: WitnessKind::House, vertices, extra: Some(WitnessExtra::Chord { chord }) }
    }

    fn prism(found: prism::PrismFound) -> Self {
        let [r, s, _] = found.lengths;
        let v = &found.vertices;
        let starts = [0, r + 1, r + s + 2];
        let ends = [r, r + s + 1, v.len() - 1];
        let triangles = [starts.map(|i| v[i]), ends.map(|i| v[i])];
        Witness {
            kind: WitnessKind::Prism,
            vertices: found.vertices,
            extra: Some(WitnessExtra::Prism { triangles, path_lengths: found.lengths }),
        }
    }

    /// The same structure with every vertex id passed through `f`.
    pub fn map_vertices(&self, f: impl Fn(usize) -> usize) -> Witness {
        let extra = self.extra.as_ref().map(|e| match e {
            WitnessExtra::Chord { chord } => WitnessExtra::Chord { chord: chord.map(&f) },
            WitnessExtra::Prism { triangles, path_lengths } => WitnessExtra::Prism {
                triangles: triangles.map(|t| t.map(&f)),
                path_lengths: *path_lengths,
            },
        });
        Witness { kind: self.kind, vertices: self.vertices.iter().map(|&v| f(v)).collect(), extra }
    }

    /// Re-checks the structure against `g` from scratch.
    pub fn verify(&self, g: &Graph) -> bool {
        let v = &self.vertices;
        let len = v.len();
        if v.iter().any(|&x| x >= g.n()) {
            return false;
        }
        let set: VertexSet = v.iter().copied().collect();
        if set.len() != len {
            return false;
        }
        let cyclic = || (0..len).all(|i| g.has_edge(v[i], v[(i + 1) % len]));
        match self.kind {
            WitnessKind::OddHole => len >= 5 && len % 2 == 1 && g.is_induced_cycle(v),
            WitnessKind::EvenHole => len >= 4 && len.is_multiple_of(2) && g.is_induced_cycle(v),
            WitnessKind::Antihole => len >= 5 && g.complement().is_induced_cycle(v),
            WitnessKind::House => {
                len >= 5
                    && cyclic()
                    && g.has_edge(v[0], v[2])
                    && g.edges_within(set) == len + 1
                    && match &self.extra {
                        Some(WitnessExtra::Chord { chord }) => {
                            let mut c = *chord;
                            c.sort_unstable();
                            let mut e = [v[0], v[2]];
                            e.sort_unstable();
                            c == e
                        }
                        _ => false,
                    }
            }
            WitnessKind::OddCycleFewChords => {
                len >= 5 && len % 2 == 1 && cyclic() && g.edges_within(set) <= len + 1
            }
            WitnessKind::Prism => {
                let Some(WitnessExtra::Prism { triangles, path_lengths }) = &self.extra else {
                    return false;
                };
                let [r, s, t] = *path_lengths;
                if r == 0 || s == 0 || t == 0 || r + s + t + 3 != len {
                    return false;
                }
                let paths = [&v[..=r], &v[r + 1..r + s + 2], &v[r + s + 2..]];
                let a = paths.map(|p| p[0]);
                let b = paths.map(|p| *p.last().unwrap());
                let sorted = |mut x: [usize; 3]| {
                    x.sort_unstable();
                    x
                };
                paths.iter().all(|p| p.windows(2).all(|w| g.has_edge(w[0], w[1])))
                    && g.is_clique(a.iter().copied().collect())
                    && g.is_clique(b.iter().copied().collect())
                    && g.edges_within(set) == r + s + t + 6
                    && sorted(triangles[0]) == sorted(a)
                    && sorted(triangles[1]) == sorted(b)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
    Any,
}

impl Parity {
    fn admits(self, len: usize) -> bool {
        match self {
            Parity::Odd => len % 2 == 1,
            Parity::Even => len.is_multiple_of(2),
            Parity::Any => true,
        }
    }
}

/// A shortest hole of the given parity with at least `min_len` vertices
/// (values below 4 are treated as 4).
pub fn find_hole(g: &Graph, parity: Parity, min_len: usize) -> Option<Witness> {
    (min_len.max(4)..=g.n())
        .filter(|&len| parity.admits(len))
        .find_map(|len| holes::first_hole(g, len))
        .map(Witness::hole)
}

/// A shortest house: a cycle of length at least 5 whose only chord joins
/// two vertices at distance 2 on it.
pub fn find_house(g: &Graph) -> Option<Witness> {
    (5..=g.n())
        .find_map(|len| holes::houses_of_len(g, len).into_iter().min())
        .map(Witness::house)
}

/// A smallest antihole on at least `min_size` vertices (values below 5 are
/// treated as 5), reported in cyclic order of the hole in the complement.
pub fn find_antihole(g: &Graph, min_size: usize) -> Option<Witness> {
    find_antihole_in(g, &g.complement(), min_size, Parity::Any)
}

fn find_antihole_in(g: &Graph, co: &Graph, min_size: usize, parity: Parity) -> Option<Witness> {
    debug_assert_eq!(g.n(), co.n());
    find_hole(co, parity, min_size.max(5))
        .map(|w| Witness { kind: WitnessKind::Antihole, vertices: w.vertices, extra: None })
}

/// A smallest prism.
pub fn find_prism(g: &Graph) -> Option<Witness> {
    prism::search(g, false).map(Witness::prism)
}

/// Meyniel: no odd hole and no house.
pub fn is_meyniel(g: &Graph) -> (bool, Option<Witness>) {
    let w = find_hole(g, Parity::Odd, 5).or_else(|| find_house(g));
    (w.is_none(), w)
}

/// Meyniel by definition: every odd cycle of length at least 5 has at
/// least two chords. Enumerates all cycles, so it is kept small.
pub fn is_meyniel_definitional(g: &Graph) -> Result<bool, DetectError> {
    Ok(odd_cycle_with_few_chords(g)?.is_none())
}

/// An odd cycle of length at least 5 with at most one chord, if any.
pub fn odd_cycle_with_few_chords(g: &Graph) -> Result<Option<Witness>, DetectError> {
    if g.n() > DEFINITIONAL_MAX_N {
        return Err(DetectError::TooLarge { n: g.n(), max: DEFINITIONAL_MAX_N });
    }
    let mut path = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        path.push(s);
        if let Some(c) = cycle_search(g, &mut path, 1 << s) {
            return Ok(Some(Witness { kind: WitnessKind::OddCycleFewChords, vertices: c, extra: None }));
        }
        path.pop();
    }
    Ok(None)
}

/// Simple paths from `path[0]` through larger vertices, closing every odd
/// cycle of length at least 5 and counting its chords.
fn cycle_search(g: &Graph, path: &mut Vec<usize>, on_path: u64) -> Option<Vec<usize>> {
    let s = path[0];
    let last = *path.last().unwrap();
    let len = path.len();
    if len >= 5 && len % 2 == 1 && g.has_edge(last, s) && path[1] < last {
        let chords = g.edges_within(VertexSet(on_path)) - len;
        if chords < 2 {
            return Some(path.clone());
        }
    }
    let mut cand = g.row(last) & !on_path & !((2u64 << s) - 1);
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(w);
        let found = cycle_search(g, path, on_path | 1 << w);
        path.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Artemis: no odd hole, no antihole on at least five vertices, no prism.
/// Checked in that order except that prisms are searched before antiholes.
pub fn is_artemis(g: &Graph) -> (bool, Option<Witness>) {
    // Prisms before antiholes: the smallest prism is also a 6-antihole and
    // should be reported as a prism.
    let w = find_hole(g, Parity::Odd, 5)
        .or_else(|| find_prism(g))
        .or_else(|| find_antihole(g, 5));
    (w.is_none(), w)
}

/// Artemis test that stops at the first prism instead of the smallest.
pub(crate) fn is_artemis_fast(g: &Graph) -> bool {
    holes_absent(g, Parity::Odd, 5)
        && holes_absent(&g.complement(), Parity::Any, 5)
        && prism::search(g, true).is_none()
}

pub(crate) fn holes_absent(g: &Graph, parity: Parity, min_len: usize) -> bool {
    (min_len..=g.n())
        .filter(|&l| parity.admits(l))
        .all(|l| holes::first_hole(g, l).is_none())
}

/// Berge: no odd hole and no odd antihole (on at least five vertices).
/// By the strong perfect graph theorem this is exactly perfection.
pub fn is_berge(g: &Graph) -> (bool, Option<Witness>) {
    let w = find_hole(g, Parity::Odd, 5)
        .or_else(|| find_antihole_in(g, &g.complement(), 5, Parity::Odd));
    (w.is_none(), w)
}

pub(crate) fn has_prism(g: &Graph) -> bool {
    prism::search(g, true).is_some()
}

/// Berge test without witness minimization.
pub(crate) fn is_berge_fast(g: &Graph) -> bool {
    holes_absent(g, Parity::Odd, 5) && holes_absent(&g.complement(), Parity::Odd, 5)
}

/// Flags for the four classes with a witness for every failed flag.
///
/// The co-Meyniel witness is a structure of the complement graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub is_meyniel: bool,
    pub is_artemis: bool,
    pub is_berge: bool,
    pub is_co_meyniel: bool,
    pub meyniel_witness: Option<Witness>,
    pub artemis_witness: Option<Witness>,
    pub berge_witness: Option<Witness>,
    pub co_meyniel_witness: Option<Witness>,
}

impl ClassReport {
    /// Every false flag carries a witness that re-verifies.
    pub fn verify(&self, g: &Graph) -> bool {
        let co = g.complement();
        let check = |flag: bool, w: &Option<Witness>, host: &Graph| match (flag, w) {
            (true, None) => true,
            (false, Some(w)) => w.verify(host),
            _ => false,
        };
        check(self.is_meyniel, &self.meyniel_witness, g)
            && check(self.is_artemis, &self.artemis_witness, g)
            && check(self.is_berge, &self.berge_witness, g)
            && check(self.is_co_meyniel, &self.co_meyniel_witness, &co)
    }

    pub fn map_vertices(&self, f: impl Fn(usize) -> usize + Copy) -> ClassReport {
        let m = |w: &Option<Witness>| w.as_ref().map(|w| w.map_vertices(f));
        ClassReport {
            meyniel_witness: m(&self.meyniel_witness),
            artemis_witness: m(&self.artemis_witness),
            berge_witness: m(&self.berge_witness),
            co_meyniel_witness: m(&self.co_meyniel_witness),
            ..*self
        }
    }
}

pub fn classify(g: &Graph) -> ClassReport {
    let (meyniel, meyniel_witness) = is_meyniel(g);
    let (artemis, artemis_witness) = is_artemis(g);
    let (berge, berge_witness) = is_berge(g);
    let (co_meyniel, co_meyniel_witness) = is_meyniel(&g.complement());
    ClassReport {
        is_meyniel: meyniel,
        is_artemis: artemis,
        is_berge: berge,
        is_co_meyniel: co_meyniel,
        meyniel_witness,
        artemis_witness,
        berge_witness,
        co_meyniel_witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn house() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap()
    }

    fn prism() -> Graph {
        Graph::cycle(6).unwrap().complement()
    }

    fn c6_short_chord() -> Graph {
        Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2)]).unwrap()
    }

    /// Prism with r = s = 1, t = 3: triangles {0,1,2} and {3,4,5},
    /// paths 0-3, 1-4, 2-6-7-5.
    fn prism_113() -> Graph {
        Graph::from_edges(
            8,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 6), (6, 7), (7, 5)],
        )
        .unwrap()
    }

    #[test]
    fn holes() {
        let c5 = Graph::cycle(5).unwrap();
        let w = find_hole(&c5, Parity::Odd, 5).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(w.kind, WitnessKind::OddHole);
        assert!(w.verify(&c5));
        assert_eq!(find_hole(&Graph::cycle(4).unwrap(), Parity::Odd, 4), None);
        let w = find_hole(&prism(), Parity::Any, 4).unwrap();
        assert_eq!(w.kind, WitnessKind::EvenHole);
        assert_eq!(w.vertices.len(), 4);
        assert!(w.verify(&prism()));
    }

    #[test]
    fn houses() {
        let w = find_house(&house()).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(w.extra, Some(WitnessExtra::Chord { chord: [0, 2] }));
        assert!(w.verify(&house()));
        assert_eq!(find_house(&Graph::cycle(5).unwrap()), None);
        let w = find_house(&c6_short_chord()).unwrap();
        assert_eq!(w.vertices.len(), 6);
        assert!(w.verify(&c6_short_chord()));
    }

    #[test]
    fn antiholes() {
        let co_c6 = prism();
        let w = find_antihole(&co_c6, 6).unwrap();
        assert_eq!(w.vertices.len(), 6);
        assert!(w.verify(&co_c6));
        let c5 = Graph::cycle(5).unwrap();
        assert!(find_antihole(&c5, 5).unwrap().verify(&c5));
        assert_eq!(find_antihole(&Graph::cycle(6).unwrap(), 6), None);
    }

    #[test]
    fn prisms() {
        let w = find_prism(&prism()).unwrap();
        assert_eq!(
            w.extra,
            Some(WitnessExtra::Prism { triangles: [[0, 2, 4], [3, 5, 1]], path_lengths: [1, 1, 1] })
        );
        assert!(w.verify(&prism()));
        assert_eq!(find_prism(&Graph::complete(4).unwrap()), None);
        let g = prism_113();
        let w = find_prism(&g).unwrap();
        assert_eq!(w.vertices.len(), 8);
        assert!(w.verify(&g));
    }

    #[test]
    fn witness_verification_rejects_tampering() {
        let c5 = Graph::cycle(5).unwrap();
        let mut w = find_hole(&c5, Parity::Odd, 5).unwrap();
        w.vertices.swap(1, 2);
        assert!(!w.verify(&c5));
        let mut h = find_house(&house()).unwrap();
        h.extra = None;
        assert!(!h.verify(&house()));
        let mut p = find_prism(&prism()).unwrap();
        p.extra = Some(WitnessExtra::Prism { triangles: [[0, 2, 4], [3, 5, 1]], path_lengths: [2, 1, 0] });
        assert!(!p.verify(&prism()));
    }

    #[test]
    fn meyniel_recognition() {
        assert!(is_meyniel(&Graph::cycle(6).unwrap()).0);
        let (ok, w) = is_meyniel(&house());
        assert!(!ok);
        assert_eq!(w.unwrap().kind, WitnessKind::House);
        let (ok, w) = is_meyniel(&Graph::cycle(7).unwrap());
        assert!(!ok);
        assert_eq!(w.unwrap().kind, WitnessKind::OddHole);
    }

    #[test]
    fn meyniel_by_definition() {
        assert!(!is_meyniel_definitional(&Graph::cycle(5).unwrap()).unwrap());
        assert!(is_meyniel_definitional(&Graph::complete(5).unwrap()).unwrap());
        assert!(!is_meyniel_definitional(&house()).unwrap());
        let w = odd_cycle_with_few_chords(&house()).unwrap().unwrap();
        assert!(w.verify(&house()));
        assert!(matches!(
            is_meyniel_definitional(&Graph::empty(11).unwrap()),
            Err(DetectError::TooLarge { n: 11, .. })
        ));
    }

    #[test]
    fn artemis_and_berge() {
        let (ok, w) = is_artemis(&prism());
        assert!(!ok);
        let w = w.unwrap();
        assert_eq!(w.kind, WitnessKind::Prism);
        assert!(is_artemis(&Graph::cycle(6).unwrap()).0);
        assert!(is_artemis_fast(&Graph::cycle(6).unwrap()));
        assert!(!is_artemis_fast(&prism()));
        assert!(!is_berge(&Graph::cycle(5).unwrap()).0);
        assert!(is_berge(&prism()).0);
        let (ok, w) = is_berge(&Graph::cycle(7).unwrap().complement());
        assert!(!ok);
        assert_eq!(w.unwrap().kind, WitnessKind::Antihole);
    }

    #[test]
    fn classify_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let r = classify(&c5);
        assert!(!r.is_meyniel && !r.is_artemis && !r.is_berge && !r.is_co_meyniel);
        assert_eq!(r.artemis_witness.as_ref().unwrap().kind, WitnessKind::OddHole);
        assert!(r.verify(&c5));
        let k4 = Graph::complete(4).unwrap();
        let r = classify(&k4);
        assert!(r.is_meyniel && r.is_artemis && r.is_berge && r.is_co_meyniel);
        let c6 = Graph::cycle(6).unwrap();
        let r = classify(&c6);
        assert!(r.is_meyniel && r.is_artemis && r.is_berge && !r.is_co_meyniel);
        assert_eq!(r.co_meyniel_witness.as_ref().unwrap().kind, WitnessKind::House);
        assert!(r.verify(&c6));
    }

    #[test]
    fn witness_json() {
        let w = find_house(&house()).unwrap();
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"{"kind":"House","vertices":[0,1,2,3,4],"extra":{"chord":[0,2]}}"#);
        let back: Witness = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
    }
}
