//! Maximum cardinality matching (Edmonds' blossom algorithm) and the perfect
//! fractional matching test via the bipartite double cover.

use std::collections::VecDeque;

use crate::graph::Graph;

pub(crate) const NONE: usize = usize::MAX;

/// A matching given by local vertex pairs `(u, v)`, `u < v`, sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    pub(crate) fn from_mate(mate: &[usize]) -> Self {
        let pairs = mate.iter().enumerate().filter(|&(v, &w)| w != NONE && v < w).map(|(v, &w)| (v, w)).collect();
        Matching { pairs }
    }
}

/// |V| - 2μ(G) together with the vertices a maximum matching leaves exposed
/// (as labels).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deficiency {
    pub value: usize,
    pub unmatched: Vec<usize>,
}

pub fn max_matching(g: &Graph) -> Matching {
    Matching::from_mate(&max_matching_mate(g.adjacency()))
}

pub fn deficiency(g: &Graph) -> Deficiency {
    let mate = max_matching_mate(g.adjacency());
    let unmatched: Vec<usize> = (0..g.n()).filter(|&v| mate[v] == NONE).map(|v| g.label(v)).collect();
    Deficiency { value: unmatched.len(), unmatched }
}

pub fn matching_number(g: &Graph) -> usize {
    max_matching(g).size()
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.is_even() && deficiency(g).value == 0
}

pub fn has_almost_perfect_matching(g: &Graph) -> bool {
    !g.is_even() && deficiency(g).value == 1
}

/// True iff there is a fractional matching with every vertex sum equal to 1.
/// Decided as a perfect matching of the bipartite double cover, in which every
/// edge `uv` becomes `u'v''` and `v'u''`.
pub fn has_perfect_fractional_matching(g: &Graph) -> bool {
    let n = g.n();
    let mut right_mate = vec![NONE; n];
    let mut stamp = vec![0usize; n];
    for (round, u) in (0..n).enumerate() {
        if !kuhn_augment(g.adjacency(), u, round + 1, &mut stamp, &mut right_mate) {
            return false;
        }
    }
    true
}

fn kuhn_augment(adj: &[Vec<usize>], u: usize, round: usize, stamp: &mut [usize], right_mate: &mut [usize]) -> bool {
    for &w in &adj[u] {
        if stamp[w] == round {
            continue;
        }
        stamp[w] = round;
        if right_mate[w] == NONE || kuhn_augment(adj, right_mate[w], round, stamp, right_mate) {
            right_mate[w] = u;
            return true;
        }
    }
    false
}

/// Maximum matching on an adjacency list; returns `mate[v]` (`NONE` when
/// exposed). Starts from a greedy matching, then grows one augmenting path per
/// exposed vertex, visiting roots and neighbors in increasing id order.
pub(crate) fn max_matching_mate(adj: &[Vec<usize>]) -> Vec<usize> {
    let mut solver = Blossom::new(adj);
    solver.run();
    solver.mate
}

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    lca_mark: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            lca_mark: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn run(&mut self) {
        let n = self.adj.len();
        for v in 0..n {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(&w) = self.adj[v].iter().find(|&&w| self.mate[w] == NONE) {
                self.mate[v] = w;
                self.mate[w] = v;
            }
        }
        for root in 0..n {
            if self.mate[root] == NONE && !self.adj[root].is_empty() {
                if let Some(end) = self.find_path(root) {
                    self.augment(end);
                }
            }
        }
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.lca_mark.fill(false);
        loop {
            a = self.base[a];
            self.lca_mark[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.lca_mark[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.in_tree.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.in_tree[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let to = self.adj[v][idx];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.in_tree[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }
}
