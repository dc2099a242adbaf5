//! Degree-exact b-matching gadget.
//!
//! Vertex `v` becomes `b(v)` copies. Edge `e = uv` (u < v) becomes `k` pairs
//! `(x, y)` joined by an edge, with `x` adjacent to every copy of `u` and `y`
//! adjacent to every copy of `v`. In a matching, a pair is *active* when both
//! `x` and `y` are matched to copies; `h(e)` is the number of active pairs of
//! `e`. Perfect matchings of the auxiliary graph correspond to assignments
//! with vertex sums exactly `b`, and in general
//! `ν(aux) = k|E| + max Σ h(e)` over assignments with sums at most `b`.

use crate::graph::Graph;
use crate::matching::{max_matching_mate, NONE};

#[derive(Clone, Debug)]
pub struct GadgetGraph {
    pub aux: Graph,
    /// Copy ids of each original (local) vertex.
    pub vertex_copies: Vec<Vec<usize>>,
    /// For each original edge, in `Graph::edges` order, its `k` pairs `(x, y)`.
    pub edge_gadgets: Vec<Vec<(usize, usize)>>,
    pub b: Vec<u32>,
    pub k: u32,
}

/// `deficient` is a local vertex index whose target drops to `k - 1`.
pub fn build_gadget(g: &Graph, k: u32, deficient: Option<usize>) -> GadgetGraph {
    assert!(k >= 1, "k must be positive");
    let b: Vec<u32> = (0..g.n()).map(|v| if Some(v) == deficient { k - 1 } else { k }).collect();
    let mut next = 0usize;
    let vertex_copies: Vec<Vec<usize>> = b
        .iter()
        .map(|&bv| {
            let ids: Vec<usize> = (next..next + bv as usize).collect();
            next += bv as usize;
            ids
        })
        .collect();
    let k = k as usize;
    let copies_total = next;
    let total = copies_total + 2 * k * g.m();
    let mut edges = Vec::with_capacity(g.m() * k * (1 + 2 * k));
    let mut edge_gadgets = Vec::with_capacity(g.m());
    for &(u, v) in g.edges() {
        let mut pairs = Vec::with_capacity(k);
        for _ in 0..k {
            let (x, y) = (next, next + 1);
            next += 2;
            edges.push((x, y));
            edges.extend(vertex_copies[u].iter().map(|&c| (c, x)));
            edges.extend(vertex_copies[v].iter().map(|&c| (c, y)));
            pairs.push((x, y));
        }
        edge_gadgets.push(pairs);
    }
    debug_assert_eq!(next, total);
    edges.sort_unstable();
    GadgetGraph { aux: Graph::from_sorted((0..total).collect(), edges), vertex_copies, edge_gadgets, b, k: k as u32 }
}

impl GadgetGraph {
    pub(crate) fn solve(&self) -> Vec<usize> {
        max_matching_mate(self.aux.adjacency())
    }

    /// Turns a maximum matching into canonical form: every pair is either
    /// matched internally or active, and exposed vertices are copies.
    /// Matching size is unchanged.
    pub(crate) fn normalize(&self, mate: &mut [usize]) {
        for pairs in &self.edge_gadgets {
            for &(x, y) in pairs {
                let half = match (mate[x], mate[y]) {
                    (a, b) if a == y && b == x => continue,
                    (NONE, NONE) => None,
                    (NONE, c) => Some(c),
                    (c, NONE) => Some(c),
                    _ => continue,
                };
                if let Some(c) = half {
                    mate[c] = NONE;
                }
                mate[x] = y;
                mate[y] = x;
            }
        }
    }

    /// Per-edge values of a normalized matching.
    pub(crate) fn edge_values(&self, mate: &[usize]) -> Vec<u32> {
        self.edge_gadgets
            .iter()
            .map(|pairs| {
                pairs.iter().filter(|&&(x, y)| mate[x] != y && mate[x] != NONE && mate[y] != NONE).count() as u32
            })
            .collect()
    }

    /// Original vertices with an exposed copy, with multiplicity.
    pub(crate) fn exposed_originals(&self, mate: &[usize]) -> Vec<usize> {
        let mut out = Vec::new();
        for (v, copies) in self.vertex_copies.iter().enumerate() {
            for &c in copies {
                if mate[c] == NONE {
                    out.push(v);
                }
            }
        }
        out
    }

    pub(crate) fn pair_count(&self) -> usize {
        self.edge_gadgets.len() * self.k as usize
    }
}

pub(crate) fn matching_size(mate: &[usize]) -> usize {
    mate.iter().filter(|&&w| w != NONE).count() / 2
}
