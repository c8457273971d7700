//! Isomorphism classes of small graphs, for exhaustive sweeps.
//!
//! Canonical codes minimize the edge bitset over all labelings that list the
//! vertices by nonincreasing degree. Practical up to about 9 vertices.

use std::collections::HashSet;

use super::{bit, bits, SimpleGraph};

fn pair_index(i: usize, j: usize) -> usize {
    let (a, b) = if i < j { (i, j) } else { (j, i) };
    b * (b - 1) / 2 + a
}

/// Canonical code of `g` (an isomorphism invariant that determines `g` up to
/// relabeling). Requires `n <= 11`.
pub fn canonical_code(g: &SimpleGraph) -> u64 {
    canonical_labeling(g).0
}

/// Canonical code together with the relabeling `perm` (vertex `v` goes to
/// `perm[v]`) that attains it.
pub fn canonical_labeling(g: &SimpleGraph) -> (u64, Vec<usize>) {
    let n = g.n();
    assert!(n <= 11, "canonical codes are limited to 11 vertices");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    // Blocks of equal degree; positions inside a block are free.
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match blocks.last_mut() {
            Some(b) if g.degree(b[0]) == g.degree(v) => b.push(v),
            _ => blocks.push(vec![v]),
        }
    }
    let mut best: Option<(u64, Vec<usize>)> = None;
    let mut assignment: Vec<usize> = Vec::with_capacity(n);
    fn rec(
        g: &SimpleGraph,
        blocks: &[Vec<usize>],
        block: usize,
        used: u64,
        assignment: &mut Vec<usize>,
        best: &mut Option<(u64, Vec<usize>)>,
    ) {
        if block == blocks.len() {
            // assignment[pos] = vertex
            let mut code = 0u64;
            for (p, &u) in assignment.iter().enumerate() {
                for (q, &w) in assignment.iter().enumerate().take(p) {
                    if g.has_edge(u, w) {
                        code |= 1u64 << pair_index(p, q);
                    }
                }
            }
            if best.as_ref().map_or(true, |(b, _)| code < *b) {
                let mut perm = vec![0; assignment.len()];
                for (p, &v) in assignment.iter().enumerate() {
                    perm[v] = p;
                }
                *best = Some((code, perm));
            }
            return;
        }
        let members = &blocks[block];
        let placed_in_block = members.iter().filter(|&&v| used & bit(v) != 0).count();
        if placed_in_block == members.len() {
            rec(g, blocks, block + 1, used, assignment, best);
            return;
        }
        for &v in members {
            if used & bit(v) == 0 {
                assignment.push(v);
                rec(g, blocks, block, used | bit(v), assignment, best);
                assignment.pop();
            }
        }
    }
    rec(g, &blocks, 0, 0, &mut assignment, &mut best);
    best.unwrap_or((0, Vec::new()))
}

/// The canonical representative of the class of `g`.
pub fn canonical_form(g: &SimpleGraph) -> SimpleGraph {
    let (_, perm) = canonical_labeling(g);
    g.permuted(&perm)
}

/// One representative per isomorphism class of graphs on `n` vertices whose
/// every induced subgraph satisfies `hereditary`. `extend(g, nbhd)` says
/// whether adding a vertex adjacent to `nbhd` keeps the property.
fn hereditary_classes<F>(n: usize, extend: F) -> Vec<SimpleGraph>
where
    F: Fn(&SimpleGraph, u64) -> bool,
{
    let mut level = vec![SimpleGraph::empty(0).unwrap()];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nbhd in 0u64..(1u64 << (k - 1)) {
                if !extend(g, nbhd) {
                    continue;
                }
                let mut h = SimpleGraph::empty(k).unwrap();
                for (i, j) in g.edges() {
                    h.add_edge(i, j).unwrap();
                }
                for v in bits(nbhd) {
                    h.add_edge(v, k - 1).unwrap();
                }
                let h = canonical_form(&h);
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        next.sort_by_key(canonical_code);
        level = next;
    }
    level
}

/// Representatives of all graphs on `n` vertices up to isomorphism.
pub fn graph_classes(n: usize) -> Vec<SimpleGraph> {
    hereditary_classes(n, |_, _| true)
}

/// Representatives of triangle-free graphs on `n` vertices.
pub fn triangle_free_classes(n: usize) -> Vec<SimpleGraph> {
    hereditary_classes(n, |g, nbhd| g.is_stable(nbhd))
}

/// Every labeled graph on `n` vertices (`2^(n choose 2)` of them).
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = SimpleGraph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    assert!(pairs.len() < 40, "too many labeled graphs");
    (0u64..(1u64 << pairs.len())).map(move |mask| {
        let edges: Vec<_> = bits(mask).map(|k| pairs[k]).collect();
        SimpleGraph::from_edges(n, &edges).unwrap()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_sequences() {
        // Graphs: 1, 1, 2, 4, 11, 34, 156.
        let counts: Vec<usize> = (0..=6).map(|n| graph_classes(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
        // Triangle-free graphs: 1, 1, 2, 3, 7, 14, 38, 107.
        let counts: Vec<usize> = (0..=7).map(|n| triangle_free_classes(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 7, 14, 38, 107]);
    }

    #[test]
    fn canonical_code_is_invariant() {
        let g = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        let code = canonical_code(&g);
        let perms = [[5, 4, 3, 2, 1, 0], [1, 2, 3, 4, 5, 0], [2, 0, 1, 5, 3, 4]];
        for p in perms {
            assert_eq!(canonical_code(&g.permuted(&p)), code);
        }
        assert_ne!(canonical_code(&SimpleGraph::path(6).unwrap()), code);
    }

    #[test]
    fn labeled_count() {
        assert_eq!(labeled_graphs(4).count(), 64);
    }
}
