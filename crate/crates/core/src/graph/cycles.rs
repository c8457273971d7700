//! Chordless cycles and the criteria built on them: bipartiteness,
//! perfectness, chordality, bridges and the odd cycle condition.

use std::fmt;
use std::ops::ControlFlow;

use super::{bit, bits, SimpleGraph};
use crate::error::{Error, Result};

/// A cycle given by its vertex sequence. Cycles produced by this module are
/// in canonical form: the smallest vertex first and the second vertex smaller
/// than the last one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(pub Vec<usize>);

impl Cycle {
    /// Rotates and reflects into canonical form.
    pub fn canonical(vertices: &[usize]) -> Cycle {
        let len = vertices.len();
        if len == 0 {
            return Cycle(Vec::new());
        }
        let start = (0..len).min_by_key(|&k| vertices[k]).unwrap();
        let forward: Vec<usize> = (0..len).map(|k| vertices[(start + k) % len]).collect();
        if len > 2 && forward[1] > forward[len - 1] {
            let mut rev = vec![forward[0]];
            rev.extend(forward[1..].iter().rev());
            Cycle(rev)
        } else {
            Cycle(forward)
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.0.len() % 2 == 1
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | bit(v))
    }

    /// Cycle edges `(min, max)` in traversal order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let len = self.0.len();
        (0..len)
            .map(|k| {
                let (a, b) = (self.0[k], self.0[(k + 1) % len]);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    /// 1-based labels, for reports.
    pub fn labels(&self) -> Vec<usize> {
        self.0.iter().map(|v| v + 1).collect()
    }
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cycle{:?}", self.labels())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
    Any,
}

impl Parity {
    fn accepts(self, len: usize) -> bool {
        match self {
            Parity::Odd => len % 2 == 1,
            Parity::Even => len % 2 == 0,
            Parity::Any => true,
        }
    }
}

/// Depth-first extension of chordless paths. Each chordless cycle is visited
/// exactly once, rooted at its smallest vertex with `path[1] < last`.
fn visit_chordless_cycles<F>(g: &SimpleGraph, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn extend<F>(
        g: &SimpleGraph,
        s: usize,
        path: &mut Vec<usize>,
        path_mask: u64,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let u = *path.last().unwrap();
        let internal = path_mask & !bit(s) & !bit(u);
        let allowed = !((1u64 << s) | ((1u64 << s) - 1)) & !path_mask;
        for v in bits(g.neighbors(u) & allowed) {
            if g.neighbors(v) & internal != 0 {
                continue;
            }
            if path.len() >= 2 && g.has_edge(v, s) {
                if path[1] < v {
                    path.push(v);
                    let flow = visit(path);
                    path.pop();
                    flow?;
                }
                continue;
            }
            path.push(v);
            let flow = extend(g, s, path, path_mask | bit(v), visit);
            path.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    for s in 0..g.n() {
        let mut path = vec![s];
        if extend(g, s, &mut path, bit(s), &mut visit).is_break() {
            return;
        }
    }
}

/// All chordless cycles of length at least `min_len` with the given parity,
/// each once up to rotation and reflection, in canonical form and sorted.
pub fn induced_cycles(g: &SimpleGraph, min_len: usize, parity: Parity) -> Result<Vec<Cycle>> {
    if min_len < 3 {
        return Err(Error::Precondition(format!("min_len must be at least 3, got {min_len}")));
    }
    let mut out = Vec::new();
    visit_chordless_cycles(g, |c| {
        if c.len() >= min_len && parity.accepts(c.len()) {
            out.push(Cycle(c.to_vec()));
        }
        ControlFlow::Continue(())
    });
    out.sort();
    Ok(out)
}

fn first_induced_cycle(g: &SimpleGraph, min_len: usize, parity: Parity) -> Option<Cycle> {
    let mut found = None;
    visit_chordless_cycles(g, |c| {
        if c.len() >= min_len && parity.accepts(c.len()) {
            found = Some(Cycle(c.to_vec()));
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartiteness {
    pub bipartite: bool,
    /// Side of each vertex when bipartite.
    pub coloring: Option<Vec<bool>>,
    /// An odd cycle when not bipartite.
    pub odd_cycle: Option<Cycle>,
}

pub fn is_bipartite(g: &SimpleGraph) -> Bipartiteness {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in bits(g.neighbors(u)) {
                match color[v] {
                    None => {
                        color[v] = Some(!color[u].unwrap());
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    }
                    Some(c) if c == color[u].unwrap() => {
                        // Same side: climb to the common ancestor.
                        let (mut a, mut b) = (u, v);
                        let mut left = vec![a];
                        let mut right = vec![b];
                        while depth[a] > depth[b] {
                            a = parent[a];
                            left.push(a);
                        }
                        while depth[b] > depth[a] {
                            b = parent[b];
                            right.push(b);
                        }
                        while a != b {
                            a = parent[a];
                            b = parent[b];
                            left.push(a);
                            right.push(b);
                        }
                        right.pop();
                        left.extend(right.into_iter().rev());
                        return Bipartiteness {
                            bipartite: false,
                            coloring: None,
                            odd_cycle: Some(Cycle::canonical(&left)),
                        };
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Bipartiteness {
        bipartite: true,
        coloring: Some(color.into_iter().map(|c| c.unwrap_or(false)).collect()),
        odd_cycle: None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perfectness {
    pub perfect: bool,
    pub odd_hole: Option<Cycle>,
    /// Vertex sequence of an odd hole of the complement.
    pub odd_antihole: Option<Cycle>,
}

/// Perfectness through the hole/antihole characterization: no chordless odd
/// cycle of length at least 5 in the graph or in its complement.
pub fn is_perfect(g: &SimpleGraph) -> Perfectness {
    let odd_hole = first_induced_cycle(g, 5, Parity::Odd);
    let odd_antihole = if odd_hole.is_none() {
        first_induced_cycle(&g.complement(), 5, Parity::Odd)
    } else {
        None
    };
    Perfectness { perfect: odd_hole.is_none() && odd_antihole.is_none(), odd_hole, odd_antihole }
}

/// True iff every chordless cycle is a triangle.
pub fn is_chordal(g: &SimpleGraph) -> bool {
    first_induced_cycle(g, 4, Parity::Any).is_none()
}

fn check_cycle(g: &SimpleGraph, c: &[usize]) -> Result<()> {
    let len = c.len();
    let mut mask = 0u64;
    for &v in c {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v + 1, n: g.n() });
        }
        if mask & bit(v) != 0 {
            return Err(Error::NotACycle(format!("vertex {} repeats", v + 1)));
        }
        mask |= bit(v);
    }
    if len < 3 {
        return Err(Error::NotACycle(format!("length {len} < 3")));
    }
    for k in 0..len {
        let (a, b) = (c[k], c[(k + 1) % len]);
        if !g.has_edge(a, b) {
            return Err(Error::NotACycle(format!("{}-{} is not an edge", a + 1, b + 1)));
        }
    }
    Ok(())
}

fn bridges_by_mask(g: &SimpleGraph, m1: u64, m2: u64) -> Vec<(usize, usize)> {
    let (only1, only2) = (m1 & !m2, m2 & !m1);
    let mut out = Vec::new();
    for i in bits(only1) {
        for j in bits(g.neighbors(i) & only2) {
            out.push((i, j));
        }
    }
    out
}

pub(crate) fn has_bridge_masks(g: &SimpleGraph, m1: u64, m2: u64) -> bool {
    let (only1, only2) = (m1 & !m2, m2 & !m1);
    bits(only1).any(|i| g.neighbors(i) & only2 != 0)
}

pub(crate) fn count_bridges_masks(g: &SimpleGraph, m1: u64, m2: u64) -> usize {
    bridges_by_mask(g, m1, m2).len()
}

/// Edges `(i, j)` of `g` with `i` on `c1` but not `c2` and `j` on `c2` but
/// not `c1`.
pub fn bridges_between(g: &SimpleGraph, c1: &[usize], c2: &[usize]) -> Result<Vec<(usize, usize)>> {
    check_cycle(g, c1)?;
    check_cycle(g, c2)?;
    let mask = |c: &[usize]| c.iter().fold(0u64, |m, &v| m | bit(v));
    Ok(bridges_by_mask(g, mask(c1), mask(c2)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCycleCondition {
    pub holds: bool,
    /// Two vertex-disjoint induced odd cycles without a bridge.
    pub violation: Option<(Cycle, Cycle)>,
}

/// Every two induced odd cycles (triangles included) share a vertex or are
/// joined by a bridge.
pub fn odd_cycle_condition(g: &SimpleGraph) -> OddCycleCondition {
    let cycles = induced_cycles(g, 3, Parity::Odd).expect("min_len 3");
    let masks: Vec<u64> = cycles.iter().map(Cycle::mask).collect();
    for a in 0..cycles.len() {
        for b in a + 1..cycles.len() {
            if masks[a] & masks[b] == 0 && !has_bridge_masks(g, masks[a], masks[b]) {
                return OddCycleCondition {
                    holds: false,
                    violation: Some((cycles[a].clone(), cycles[b].clone())),
                };
            }
        }
    }
    OddCycleCondition { holds: true, violation: None }
}
