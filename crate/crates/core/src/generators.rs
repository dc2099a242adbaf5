//! Graph families: complete graphs, paths, cycles, (random) bipartite graphs,
//! G(n, p) random graphs and arrangement graphs.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}

/// K_n
pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(param("complete graph needs n >= 1"));
    }
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// P_n
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(param("path needs n >= 1"));
    }
    Graph::new(n, (1..n).map(|v| (v - 1, v)))
}

/// C_n
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(param("cycle needs n >= 3"));
    }
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

/// K_{a,b}; left side is `0..a`, right side `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    random_bipartite(a, b, 1.0, 0)
}

/// Bipartite graph with sides `0..a` and `a..a+b`, each cross pair kept
/// independently with probability `p`.
pub fn random_bipartite(a: usize, b: usize, p: f64, seed: u64) -> Result<Graph> {
    if a + b < 1 {
        return Err(param("bipartite graph needs a + b >= 1"));
    }
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..a {
        for v in a..a + b {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(a + b, edges)
}

/// Erdős–Rényi G(n, p).
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(param(format!("probability {p} outside [0, 1]")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArrangementSpec {
    pub n: usize,
    pub s: usize,
}

impl ArrangementSpec {
    pub fn new(n: usize, s: usize) -> Result<Self> {
        if n < 2 || s < 1 || s >= n {
            return Err(param(format!("arrangement graph needs n >= 2 and 1 <= s <= n-1, got ({n},{s})")));
        }
        Ok(ArrangementSpec { n, s })
    }

    /// n!/(n-s)!
    pub fn order(&self) -> usize {
        falling(self.n, self.s)
    }

    pub fn degree(&self) -> usize {
        self.s * (self.n - self.s)
    }

    /// (n-1)!/(n-s)!
    pub fn block_order(&self) -> usize {
        falling(self.n - 1, self.s - 1)
    }

    /// (n-2)!/(n-s-1)!, the number of cross edges between two blocks.
    pub fn cross_edges_per_pair(&self) -> usize {
        falling(self.n - 2, self.s - 1)
    }
}

/// n (n-1) ... (n-r+1)
fn falling(n: usize, r: usize) -> usize {
    (0..r).map(|i| n - i).product()
}

#[derive(Clone, Debug)]
pub struct ArrangementGraph {
    pub spec: ArrangementSpec,
    pub graph: Graph,
    /// Injective s-tuple over `1..=n` for each vertex, in lexicographic order.
    pub labels: Vec<Vec<usize>>,
    /// `blocks[i - 1]` holds the vertices whose last coordinate is `i`.
    pub blocks: Vec<Vec<usize>>,
}

impl ArrangementGraph {
    pub fn block_of(&self, v: usize) -> usize {
        *self.labels[v].last().expect("s >= 1")
    }

    /// Edges joining the blocks with last coordinate `i` and `j` (1-based).
    pub fn cross_edges(&self, i: usize, j: usize) -> Vec<(usize, usize)> {
        self.graph
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| {
                let (bu, bv) = (self.block_of(u), self.block_of(v));
                (bu, bv) == (i, j) || (bu, bv) == (j, i)
            })
            .collect()
    }

    /// `{"0":[1,2],"1":[1,3],...}`
    pub fn label_json(&self) -> String {
        // keys in numeric order, not string order
        let body: Vec<String> = self
            .labels
            .iter()
            .enumerate()
            .map(|(v, t)| format!("\"{v}\":{}", serde_json::to_string(t).expect("tuple")))
            .collect();
        format!("{{{}}}", body.join(","))
    }
}

/// A_{n,s}: vertices are injective s-tuples over {1..n}, adjacent iff they
/// differ in exactly one position.
pub fn arrangement(spec: ArrangementSpec) -> Result<ArrangementGraph> {
    let spec = ArrangementSpec::new(spec.n, spec.s)?;
    let mut labels = Vec::with_capacity(spec.order());
    let mut cur = Vec::with_capacity(spec.s);
    let mut used = vec![false; spec.n + 1];
    tuples(spec, &mut cur, &mut used, &mut labels);

    let index: HashMap<&[usize], usize> = labels.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let mut edges = Vec::with_capacity(spec.order() * spec.degree() / 2);
    let mut buf = vec![0; spec.s];
    for (u, t) in labels.iter().enumerate() {
        for pos in 0..spec.s {
            for x in 1..=spec.n {
                if t.contains(&x) {
                    continue;
                }
                buf.copy_from_slice(t);
                buf[pos] = x;
                let v = index[buf.as_slice()];
                if u < v {
                    edges.push((u, v));
                }
            }
        }
    }
    let graph = Graph::new(labels.len(), edges)?;
    let mut blocks = vec![Vec::new(); spec.n];
    for (v, t) in labels.iter().enumerate() {
        blocks[t[spec.s - 1] - 1].push(v);
    }
    Ok(ArrangementGraph { spec, graph, labels, blocks })
}

fn tuples(spec: ArrangementSpec, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
    if cur.len() == spec.s {
        out.push(cur.clone());
        return;
    }
    for x in 1..=spec.n {
        if !used[x] {
            used[x] = true;
            cur.push(x);
            tuples(spec, cur, used, out);
            cur.pop();
            used[x] = false;
        }
    }
}

/// The Petersen graph (outer 5-cycle 0..5, inner pentagram 5..10).
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, edges).expect("petersen")
}
