//! Induced cycles by chordless-path extension.
//!
//! A hole of length `len` is enumerated once, as `s, p1, ..., p_{len-1}`
//! with `s` its smallest vertex and `p1 < p_{len-1}`. The search visits
//! candidates in increasing id order, so holes of a fixed length come out
//! in lexicographic order.

use std::ops::ControlFlow;

use crate::graph::Graph;

#[inline]
fn above(v: usize) -> u64 {
    !((2u64 << v) - 1)
}

/// Calls `visit` on every hole of exactly `len` vertices (`len >= 4`).
pub(crate) fn for_each_hole<B>(
    g: &Graph,
    len: usize,
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if len < 4 || len > g.n() {
        return ControlFlow::Continue(());
    }
    let mut path = Vec::with_capacity(len);
    for s in 0..g.n() {
        // s must have two neighbours above it.
        if (g.row(s) & above(s)).count_ones() < 2 {
            continue;
        }
        path.push(s);
        extend(g, len, &mut path, 0, visit)?;
        path.pop();
    }
    ControlFlow::Continue(())
}

fn extend<B>(
    g: &Graph,
    len: usize,
    path: &mut Vec<usize>,
    // Closed neighbourhoods of p_1..p_{i-2}.
    blocked: u64,
    visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let i = path.len();
    let s = path[0];
    let last = path[i - 1];
    let mut cand = g.row(last) & above(s) & !blocked;
    if i == len - 1 {
        cand &= g.row(s) & above(path[1]);
    } else if i >= 2 {
        cand &= !g.row(s);
    }
    let next_blocked = if i >= 2 { blocked | g.row(last) | 1 << last } else { blocked };
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(w);
        let r = if i == len - 1 {
            debug_assert!(g.is_induced_cycle(path));
            visit(path)
        } else {
            extend(g, len, path, next_blocked, visit)
        };
        path.pop();
        r?;
    }
    ControlFlow::Continue(())
}

/// Lexicographically first hole of exactly `len` vertices.
pub(crate) fn first_hole(g: &Graph, len: usize) -> Option<Vec<usize>> {
    match for_each_hole(g, len, &mut |h| ControlFlow::Break(h.to_vec())) {
        ControlFlow::Break(h) => Some(h),
        ControlFlow::Continue(()) => None,
    }
}

/// All holes of exactly `len` vertices.
pub(crate) fn holes_of_len(g: &Graph, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let _ = for_each_hole::<()>(g, len, &mut |h| {
        out.push(h.to_vec());
        ControlFlow::Continue(())
    });
    out
}

/// House candidates built on the holes of length `len - 1`, in the form
/// `p1, p2, p3, ..., p_len` with chord `p1 p3` and `p1 < p3`.
pub(crate) fn houses_of_len(g: &Graph, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if len < 5 {
        return out;
    }
    let k = len - 1;
    let _ = for_each_hole::<()>(g, k, &mut |hole| {
        let mask = hole.iter().fold(0u64, |m, &v| m | 1 << v);
        for x in 0..g.n() {
            if mask >> x & 1 == 1 {
                continue;
            }
            let seen = g.row(x) & mask;
            if seen.count_ones() != 2 {
                continue;
            }
            let a = seen.trailing_zeros() as usize;
            let b = 63 - seen.leading_zeros() as usize;
            if !g.has_edge(a, b) {
                continue;
            }
            // a < b; walk the hole from b away from a.
            let ib = hole.iter().position(|&v| v == b).unwrap();
            let step = if hole[(ib + k - 1) % k] == a { 1 } else { k - 1 };
            let mut house = Vec::with_capacity(len);
            house.push(a);
            house.push(x);
            let mut idx = ib;
            for _ in 0..k - 1 {
                house.push(hole[idx]);
                idx = (idx + step) % k;
            }
            out.push(house);
        }
        ControlFlow::Continue(())
    });
    out
}
