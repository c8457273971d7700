//! Ring-graph recognition.
//!
//! A ring graph is read here as a clique sum of trees and cycles: the graph is
//! split along clique separators of size at most two (cut vertices, separating
//! edges, and the empty clique between components) until every atom is a
//! single vertex, a single edge or a chordless cycle. Gluing two cycles along
//! an edge is the "edge sum" step.

use super::{bit, bits, SimpleGraph};

fn components_within(g: &SimpleGraph, mask: u64) -> Vec<u64> {
    let mut rest = mask;
    let mut out = Vec::new();
    while rest != 0 {
        let s = rest.trailing_zeros() as usize;
        let mut comp = bit(s);
        let mut frontier = bit(s);
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= g.neighbors(v);
            }
            next &= mask;
            frontier = next & !comp;
            comp |= next;
        }
        rest &= !comp;
        out.push(comp);
    }
    out
}

fn is_chordless_cycle(g: &SimpleGraph, mask: u64) -> bool {
    mask.count_ones() >= 3
        && bits(mask).all(|v| (g.neighbors(v) & mask).count_ones() == 2)
        && components_within(g, mask).len() == 1
}

fn decomposes(g: &SimpleGraph, mask: u64) -> bool {
    let comps = components_within(g, mask);
    if comps.len() > 1 {
        return comps.into_iter().all(|c| decomposes(g, c));
    }
    if mask.count_ones() <= 2 || is_chordless_cycle(g, mask) {
        return true;
    }
    for v in bits(mask) {
        let parts = components_within(g, mask & !bit(v));
        if parts.len() > 1 {
            return parts.into_iter().all(|c| decomposes(g, c | bit(v)));
        }
    }
    for u in bits(mask) {
        for w in bits(g.neighbors(u) & mask) {
            if w < u {
                continue;
            }
            let sep = bit(u) | bit(w);
            let parts = components_within(g, mask & !sep);
            if parts.len() > 1 {
                return parts.into_iter().all(|c| decomposes(g, c | sep));
            }
        }
    }
    false
}

pub fn is_ring_graph(g: &SimpleGraph) -> bool {
    decomposes(g, g.vertex_mask())
}
