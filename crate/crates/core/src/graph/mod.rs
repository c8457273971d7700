//! Simple graphs, looped graphs, stable sets and walks.
//!
//! Vertices are `0..n` inside the library. Text I/O and reports use the
//! 1-based labels `1..=n`; the conversion happens in [`io`] and in the report
//! serializers only.

pub mod cycles;
pub mod family;
pub mod io;
pub mod iso;
pub mod ring;

use std::fmt;

use crate::error::{Error, Result};

pub use cycles::{
    bridges_between, induced_cycles, is_bipartite, is_chordal, is_perfect, odd_cycle_condition,
    Bipartiteness, Cycle, OddCycleCondition, Parity, Perfectness,
};
pub use family::Family;
pub use ring::is_ring_graph;

/// Largest supported vertex count; adjacency rows are `u64` bitsets.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Undirected loopless graph on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

impl SimpleGraph {
    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { got: n, max: MAX_VERTICES });
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let all = full_mask(n);
        for v in 0..n {
            g.adj[v] = all & !bit(v);
        }
        Ok(g)
    }

    /// Builds a graph from 0-based edges. Duplicate edges are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    /// The cycle `0-1-...-(m-1)-0`.
    pub fn cycle(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidFamily(format!("cycle length {m} < 3")));
        }
        let edges: Vec<_> = (0..m).map(|i| (i, (i + 1) % m)).collect();
        Self::from_edges(m, &edges)
    }

    pub fn path(m: usize) -> Result<Self> {
        let edges: Vec<_> = (1..m).map(|i| (i - 1, i)).collect();
        Self::from_edges(m, &edges)
    }

    pub(crate) fn from_adjacency(n: usize, adj: Vec<u64>) -> Self {
        debug_assert_eq!(adj.len(), n);
        Self { n, adj }
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        for v in [i, j] {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v + 1, n: self.n });
            }
        }
        if i == j {
            return Err(Error::LoopNotAllowed(i + 1));
        }
        self.adj[i] |= bit(j);
        self.adj[j] |= bit(i);
        Ok(())
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) {
        if i < self.n && j < self.n {
            self.adj[i] &= !bit(j);
            self.adj[j] &= !bit(i);
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n && j < self.n && self.adj[i] & bit(j) != 0
    }

    /// Neighborhood of `v` as a bitset.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            for j in bits(self.adj[i] & !full_mask(i + 1)) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn is_empty_graph(&self) -> bool {
        self.adj.iter().all(|&a| a == 0)
    }

    /// True iff the vertices of `mask` are pairwise adjacent.
    pub fn is_clique(&self, mask: u64) -> bool {
        bits(mask).all(|v| (mask & !bit(v)) & !self.adj[v] == 0)
    }

    /// True iff no two vertices of `mask` are adjacent.
    pub fn is_stable(&self, mask: u64) -> bool {
        bits(mask).all(|v| self.adj[v] & mask == 0)
    }

    pub fn complement(&self) -> SimpleGraph {
        let all = self.vertex_mask();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect();
        SimpleGraph { n: self.n, adj }
    }

    /// All stable sets in canonical order: by cardinality, then
    /// lexicographically by sorted vertex list. Includes the empty set.
    pub fn stable_sets(&self) -> StableSetFamily {
        let mut sets = Vec::new();
        fn rec(g: &SimpleGraph, v: usize, current: u64, forbidden: u64, out: &mut Vec<u64>) {
            if v == g.n {
                out.push(current);
                return;
            }
            rec(g, v + 1, current, forbidden, out);
            if forbidden & bit(v) == 0 {
                rec(g, v + 1, current | bit(v), forbidden | g.adj[v], out);
            }
        }
        rec(self, 0, 0, 0, &mut sets);
        sort_canonical(&mut sets);
        StableSetFamily { n: self.n, sets }
    }

    /// The stability number: size of a largest stable set.
    pub fn stability_number(&self) -> usize {
        // Maximum clique of the complement by simple branch and bound.
        fn rec(comp: &[u64], candidates: u64, size: usize, best: &mut usize) {
            if candidates == 0 {
                *best = (*best).max(size);
                return;
            }
            if size + candidates.count_ones() as usize <= *best {
                return;
            }
            let v = candidates.trailing_zeros() as usize;
            rec(comp, candidates & comp[v], size + 1, best);
            rec(comp, candidates & !bit(v), size, best);
        }
        let comp = self.complement();
        let mut best = 0;
        rec(&comp.adj, self.vertex_mask(), 0, &mut best);
        best
    }

    /// Subgraph induced on `vs` (in the given order). Vertex `vs[k]` of `self`
    /// becomes vertex `k`; the returned map is `vs` itself, deduplicated and
    /// sorted.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<(SimpleGraph, Vec<usize>)> {
        let mut map: Vec<usize> = vs.to_vec();
        map.sort_unstable();
        map.dedup();
        if let Some(&v) = map.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v + 1, n: self.n });
        }
        let mut sub = SimpleGraph::empty(map.len())?;
        for (a, &u) in map.iter().enumerate() {
            for (b, &w) in map.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, w) {
                    sub.add_edge(a, b)?;
                }
            }
        }
        Ok((sub, map))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<SimpleGraph> {
        let mut g = SimpleGraph::empty(self.n + other.n)?;
        for (i, j) in self.edges() {
            g.add_edge(i, j)?;
        }
        for (i, j) in other.edges() {
            g.add_edge(i + self.n, j + self.n)?;
        }
        Ok(g)
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let mut comp = bit(s);
            let mut frontier = bit(s);
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> SimpleGraph {
        let mut adj = vec![0u64; self.n];
        for (i, j) in self.edges() {
            adj[perm[i]] |= bit(perm[j]);
            adj[perm[j]] |= bit(perm[i]);
        }
        SimpleGraph { n: self.n, adj }
    }

    /// The looped graph on `n + 1` vertices: this graph's edges, every vertex
    /// joined to the new vertex `n`, and a loop at `n`. Applied to the
    /// complement of `G` it realizes the toric ring of the stable set
    /// polytope of `G` when the stability number is two.
    pub fn star_graph(&self) -> Result<LoopGraph> {
        let n = self.n;
        let mut h = LoopGraph::empty(n + 1)?;
        for (i, j) in self.edges() {
            h.add_edge(i, j)?;
        }
        for i in 0..n {
            h.add_edge(i, n)?;
        }
        h.add_loop(n)?;
        Ok(h)
    }

    /// Clique sum. `identification[k] = Some(v)` glues vertex `k` of `other`
    /// onto vertex `v` of `self`; unglued vertices of `other` get fresh labels
    /// `self.n(), self.n()+1, ...` in order. The glued vertices must form a
    /// clique in both graphs.
    pub fn clique_sum(
        &self,
        other: &SimpleGraph,
        identification: &[Option<usize>],
    ) -> Result<SimpleGraph> {
        if identification.len() != other.n {
            return Err(Error::DimensionMismatch { expected: other.n, got: identification.len() });
        }
        let mut overlap_self = 0u64;
        let mut overlap_other = 0u64;
        for (k, m) in identification.iter().enumerate() {
            if let Some(v) = *m {
                if v >= self.n {
                    return Err(Error::VertexOutOfRange { vertex: v + 1, n: self.n });
                }
                if overlap_self & bit(v) != 0 {
                    return Err(Error::Precondition(format!(
                        "vertex {} identified twice",
                        v + 1
                    )));
                }
                overlap_self |= bit(v);
                overlap_other |= bit(k);
            }
        }
        if !self.is_clique(overlap_self) {
            return Err(Error::OverlapNotClique("the first graph"));
        }
        if !other.is_clique(overlap_other) {
            return Err(Error::OverlapNotClique("the second graph"));
        }
        let mut label = vec![0; other.n];
        let mut next = self.n;
        for (k, m) in identification.iter().enumerate() {
            label[k] = match *m {
                Some(v) => v,
                None => {
                    next += 1;
                    next - 1
                }
            };
        }
        let mut g = SimpleGraph::empty(next)?;
        for (i, j) in self.edges() {
            g.add_edge(i, j)?;
        }
        for (i, j) in other.edges() {
            g.add_edge(label[i], label[j])?;
        }
        Ok(g)
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges=[", self.n)?;
        for (k, (i, j)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", i + 1, j + 1)?;
        }
        write!(f, "])")
    }
}

fn sort_canonical(sets: &mut [u64]) {
    sets.sort_by(|&a, &b| {
        a.count_ones().cmp(&b.count_ones()).then_with(|| {
            // Lexicographic on sorted vertex lists: the smallest element of
            // the symmetric difference decides.
            let diff = a ^ b;
            if diff == 0 {
                std::cmp::Ordering::Equal
            } else if a & (diff & diff.wrapping_neg()) != 0 {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        })
    });
}

/// The stable sets of a graph in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableSetFamily {
    n: usize,
    sets: Vec<u64>,
}

impl StableSetFamily {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Member masks in canonical order.
    pub fn masks(&self) -> &[u64] {
        &self.sets
    }

    /// Members as sorted 0-based vertex lists.
    pub fn sets(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|&m| bits(m).collect()).collect()
    }

    /// Index of a stable set given as a mask.
    pub fn index_of(&self, mask: u64) -> Option<usize> {
        self.sets.iter().position(|&m| m == mask)
    }
}

/// Undirected graph allowing at most one loop per vertex and no multiple
/// edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LoopGraph {
    n: usize,
    adj: Vec<u64>,
    loops: u64,
}

impl LoopGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { got: n, max: MAX_VERTICES });
        }
        Ok(Self { n, adj: vec![0; n], loops: 0 })
    }

    pub fn from_simple(g: &SimpleGraph) -> Self {
        Self { n: g.n, adj: g.adj.clone(), loops: 0 }
    }

    /// Builds from 0-based edges; pairs `(i, i)` are loops.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut h = Self::empty(n)?;
        for &(i, j) in edges {
            if i == j {
                h.add_loop(i)?;
            } else {
                h.add_edge(i, j)?;
            }
        }
        Ok(h)
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        for v in [i, j] {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v + 1, n: self.n });
            }
        }
        if i == j {
            return self.add_loop(i);
        }
        self.adj[i] |= bit(j);
        self.adj[j] |= bit(i);
        Ok(())
    }

    pub fn add_loop(&mut self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v + 1, n: self.n });
        }
        self.loops |= bit(v);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.loops & bit(v) != 0
    }

    pub fn loop_mask(&self) -> u64 {
        self.loops
    }

    /// True iff `{i, j}` is an edge, or a loop when `i == j`.
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        if i >= self.n || j >= self.n {
            return false;
        }
        if i == j {
            self.has_loop(i)
        } else {
            self.adj[i] & bit(j) != 0
        }
    }

    /// Neighbors of `v` not counting a loop.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Edges and loops as pairs `(i, j)` with `i <= j`, lexicographically
    /// sorted. This is the canonical generator order of the edge polytope.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            if self.has_loop(i) {
                out.push((i, i));
            }
            for j in bits(self.adj[i] & !full_mask(i + 1)) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn edge_index(&self, i: usize, j: usize) -> Option<usize> {
        let key = (i.min(j), i.max(j));
        self.edges().iter().position(|&e| e == key)
    }

    /// Graph without its loops.
    pub fn underlying(&self) -> SimpleGraph {
        SimpleGraph::from_adjacency(self.n, self.adj.clone())
    }

    pub fn components(&self) -> Vec<u64> {
        self.underlying().components()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

impl fmt::Debug for LoopGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LoopGraph(n={}, edges=[", self.n)?;
        for (k, (i, j)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", i + 1, j + 1)?;
        }
        write!(f, "])")
    }
}

/// A walk `({v1,v2}, {v2,v3}, ..., {vq,vq+1})`; a loop step repeats a vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    vertices: Vec<usize>,
}

impl Walk {
    /// Walk through the given vertex sequence (`q + 1` vertices for length q).
    pub fn from_vertices(vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::InvalidWalk("a walk needs at least one step".into()));
        }
        Ok(Self { vertices })
    }

    /// Walk given by its steps; consecutive steps must share the declared
    /// vertex (the second endpoint of one step is the first of the next).
    pub fn from_steps(steps: &[(usize, usize)]) -> Result<Self> {
        let first = steps
            .first()
            .ok_or_else(|| Error::InvalidWalk("empty walk".into()))?;
        let mut vertices = vec![first.0, first.1];
        for (k, &(a, b)) in steps.iter().enumerate().skip(1) {
            if a != *vertices.last().unwrap() {
                return Err(Error::InvalidWalk(format!(
                    "step {} starts at {} but previous step ends at {}",
                    k + 1,
                    a + 1,
                    vertices.last().unwrap() + 1
                )));
            }
            vertices.push(b);
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }

    pub fn is_even(&self) -> bool {
        self.len() % 2 == 0
    }

    /// Steps as unordered pairs `(min, max)`.
    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> SimpleGraph {
        SimpleGraph::cycle(5).unwrap()
    }

    #[test]
    fn complement_examples() {
        let k4 = SimpleGraph::complete(4).unwrap();
        assert!(k4.complement().is_empty_graph());
        // 1-based 13,14,24,25,35
        let expect =
            SimpleGraph::from_edges(5, &[(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]).unwrap();
        assert_eq!(c5().complement(), expect);
        let p3 = SimpleGraph::path(3).unwrap();
        assert_eq!(p3.complement().edges(), vec![(0, 2)]);
    }

    #[test]
    fn stable_set_examples() {
        let k3 = SimpleGraph::complete(3).unwrap();
        assert_eq!(k3.stable_sets().sets(), vec![vec![], vec![0], vec![1], vec![2]]);

        let two_k2 = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let expect: Vec<Vec<usize>> = vec![
            vec![],
            vec![0],
            vec![1],
            vec![2],
            vec![3],
            vec![0, 2],
            vec![0, 3],
            vec![1, 2],
            vec![1, 3],
        ];
        assert_eq!(two_k2.stable_sets().sets(), expect);

        let e3 = SimpleGraph::empty(3).unwrap();
        let fam = e3.stable_sets();
        assert_eq!(fam.len(), 8);
        assert_eq!(fam.sets()[4..], [vec![0, 1], vec![0, 2], vec![1, 2], vec![0, 1, 2]]);
    }

    #[test]
    fn stability_number_examples() {
        for n in 1..7 {
            assert_eq!(SimpleGraph::complete(n).unwrap().stability_number(), 1);
            assert_eq!(SimpleGraph::empty(n).unwrap().stability_number(), n);
        }
        assert_eq!(c5().stability_number(), 2);
        assert_eq!(SimpleGraph::empty(0).unwrap().stability_number(), 0);
    }

    #[test]
    fn induced_subgraph_examples() {
        let (p, map) = c5().induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(p, SimpleGraph::path(3).unwrap());
        assert_eq!(map, vec![0, 1, 2]);
        let g = c5();
        assert_eq!(g.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap().0, g);
        let (k2, _) = SimpleGraph::complete(4).unwrap().induced_subgraph(&[0, 1]).unwrap();
        assert_eq!(k2, SimpleGraph::complete(2).unwrap());
    }

    #[test]
    fn star_graph_examples() {
        let gbar = SimpleGraph::from_edges(2, &[(0, 1)]).unwrap();
        let h = gbar.star_graph().unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (0, 2), (1, 2), (2, 2)]);

        let h = SimpleGraph::empty(3).unwrap().star_graph().unwrap();
        assert_eq!(h.edges(), vec![(0, 3), (1, 3), (2, 3), (3, 3)]);

        let h = c5().star_graph().unwrap();
        assert_eq!(h.n(), 6);
        assert_eq!(h.edges().len(), 11);
        assert!(h.has_loop(5));
        assert!((0..5).all(|v| h.has_edge(v, 5)));
    }

    #[test]
    fn clique_sum_examples() {
        let k3 = SimpleGraph::complete(3).unwrap();
        let diamond = k3.clique_sum(&k3, &[Some(0), Some(1), None]).unwrap();
        let mut k4e = SimpleGraph::complete(4).unwrap();
        k4e.remove_edge(2, 3);
        assert_eq!(diamond, k4e);

        let union = k3.clique_sum(&c5(), &[None; 5]).unwrap();
        assert_eq!(union, k3.disjoint_union(&c5()).unwrap());

        let bowtie = k3.clique_sum(&k3, &[Some(0), None, None]).unwrap();
        assert_eq!(bowtie.n(), 5);
        assert_eq!(bowtie.edge_count(), 6);
        assert_eq!(bowtie.degree(0), 4);

        let p3 = SimpleGraph::path(3).unwrap();
        assert_eq!(
            k3.clique_sum(&p3, &[Some(0), None, Some(1)]),
            Err(Error::OverlapNotClique("the second graph"))
        );
    }

    #[test]
    fn walk_construction() {
        let w = Walk::from_steps(&[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(w.is_closed() && w.is_even());
        assert_eq!(w.len(), 4);
        assert!(Walk::from_steps(&[(0, 1), (2, 3)]).is_err());
    }
}
