//! Immutable simple undirected graphs.
//!
//! Vertices carry a label (their id in the graph they were derived from). A
//! freshly built graph on `n` vertices has labels `0..n`; deleting vertices
//! compacts the internal indices but keeps the labels, so anything reported
//! back to the user names the original ids.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<usize>,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph on vertices `0..n`. Edges may be given in either
    /// orientation; self-loops and duplicates are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u, v));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted((0..n).collect(), list))
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted((0..n).collect(), Vec::new())
    }

    /// `edges` must be local, sorted, deduplicated, with `u < v`.
    pub(crate) fn from_sorted(labels: Vec<usize>, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); labels.len()];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Graph { labels, adj, edges }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as local index pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of edge `(u, v)` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).ok()
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn index_of(&self, label: usize) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    /// Edges as label pairs, sorted.
    pub fn labeled_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(|&(u, v)| (self.labels[u], self.labels[v]))
    }

    pub fn is_even(&self) -> bool {
        self.n().is_multiple_of(2)
    }

    /// Minimum degree δ(G).
    pub fn min_degree(&self) -> Result<usize> {
        self.adj.iter().map(Vec::len).min().ok_or(Error::EmptyGraph)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `G - F`. Vertices of the result keep their labels.
    pub fn delete(&self, f: &FaultSet) -> Result<Graph> {
        let mut gone = vec![false; self.n()];
        for &label in &f.vertices {
            let v = self.index_of(label).ok_or(Error::UnknownVertex(label))?;
            gone[v] = true;
        }
        let mut dropped = Vec::with_capacity(f.edges.len());
        for &(a, b) in &f.edges {
            let e = match (self.index_of(a), self.index_of(b)) {
                (Some(u), Some(v)) => self.edge_index(u, v),
                _ => None,
            };
            dropped.push(e.ok_or(Error::UnknownEdge(a, b))?);
        }
        dropped.sort_unstable();
        Ok(self.remove_local(&gone, &dropped))
    }

    /// Deletes local vertices flagged in `gone` and the edges whose indices
    /// are listed (sorted) in `dropped`. No validation.
    pub(crate) fn remove_local(&self, gone: &[bool], dropped: &[usize]) -> Graph {
        let mut remap = vec![usize::MAX; self.n()];
        let mut labels = Vec::with_capacity(self.n());
        for v in 0..self.n() {
            if !gone[v] {
                remap[v] = labels.len();
                labels.push(self.labels[v]);
            }
        }
        let mut skip = dropped.iter().peekable();
        let mut edges = Vec::with_capacity(self.m());
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if skip.peek() == Some(&&i) {
                while skip.peek() == Some(&&i) {
                    skip.next();
                }
                continue;
            }
            if gone[u] || gone[v] {
                continue;
            }
            edges.push((remap[u], remap[v]));
        }
        Graph::from_sorted(labels, edges)
    }

    /// Subgraph induced by the given local vertices (labels kept).
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut keep = vec![false; self.n()];
        for &v in vertices {
            keep[v] = true;
        }
        let gone: Vec<bool> = keep.iter().map(|k| !k).collect();
        self.remove_local(&gone, &[])
    }

    /// Copy of the graph with one extra edge between local vertices.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n() {
            return Err(Error::UnknownVertex(u));
        }
        if v >= self.n() {
            return Err(Error::UnknownVertex(v));
        }
        if u == v {
            return Err(Error::SelfLoop(u, v));
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge(u, v));
        }
        let mut edges = self.edges.clone();
        edges.push((u.min(v), u.max(v)));
        edges.sort_unstable();
        Ok(Graph::from_sorted(self.labels.clone(), edges))
    }

    /// Connected components as lists of local vertices, each sorted, ordered
    /// by smallest member.
    pub fn component_indices(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> ComponentReport {
        let comps = self.component_indices();
        let isolated_count = comps.iter().filter(|c| c.len() == 1).count();
        let odd_nontrivial_count = comps.iter().filter(|c| c.len() >= 3 && c.len() % 2 == 1).count();
        ComponentReport {
            components: comps.into_iter().map(|c| c.into_iter().map(|v| self.labels[v]).collect()).collect(),
            isolated_count,
            odd_nontrivial_count,
            odd_total: isolated_count + odd_nontrivial_count,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.component_indices().len() == 1
    }

    /// BFS 2-coloring; `None` if the graph has an odd cycle.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n()];
        let mut queue = VecDeque::new();
        for s in 0..self.n() {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Text form: `p <n> <m>` then one `e <u> <v>` line per edge, sorted.
    /// Labels are written as-is, so only graphs with labels `0..n` round-trip.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(16 + 12 * self.m());
        let _ = writeln!(s, "p {} {}", self.n(), self.m());
        for (u, v) in self.labeled_edges() {
            let _ = writeln!(s, "e {u} {v}");
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Graph> {
        let mut header = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = i + 1;
            if line.is_empty() || line.starts_with('c') || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| Error::Parse { line: lineno, msg: msg.to_string() };
            let mut parts = line.split_whitespace();
            let tag = parts.next().unwrap_or_default();
            let nums: Vec<usize> = parts
                .map(|p| p.parse::<usize>().map_err(|_| err(&format!("bad integer {p:?}"))))
                .collect::<Result<_>>()?;
            match tag {
                "p" => {
                    if header.is_some() {
                        return Err(err("duplicate header"));
                    }
                    if nums.len() != 2 {
                        return Err(err("expected `p <n> <m>`"));
                    }
                    header = Some((nums[0], nums[1]));
                }
                "e" => {
                    if header.is_none() {
                        return Err(err("edge before header"));
                    }
                    if nums.len() != 2 {
                        return Err(err("expected `e <u> <v>`"));
                    }
                    edges.push((nums[0], nums[1]));
                }
                _ => return Err(err(&format!("unknown line tag {tag:?}"))),
            }
        }
        let (n, m) = header.ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
        if edges.len() != m {
            return Err(Error::Parse { line: 0, msg: format!("header declares {m} edges, found {}", edges.len()) });
        }
        Graph::new(n, edges)
    }
}

/// Connected-component statistics. Vertex sets are given by label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub components: Vec<Vec<usize>>,
    /// i(G)
    pub isolated_count: usize,
    /// odd(G): odd components with at least three vertices
    pub odd_nontrivial_count: usize,
    /// c_o(G)
    pub odd_total: usize,
}

/// A mixed set of vertices and edges to delete, addressed by label.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFaultSet")]
pub struct FaultSet {
    pub vertices: BTreeSet<usize>,
    pub edges: BTreeSet<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawFaultSet {
    #[serde(default)]
    vertices: Vec<usize>,
    #[serde(default)]
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawFaultSet> for FaultSet {
    type Error = String;

    fn try_from(raw: RawFaultSet) -> std::result::Result<Self, String> {
        let mut f = FaultSet::default();
        for v in raw.vertices {
            if !f.vertices.insert(v) {
                return Err(format!("duplicate vertex {v}"));
            }
        }
        for (u, v) in raw.edges {
            if u >= v {
                return Err(format!("edge [{u},{v}] must satisfy u < v"));
            }
            if !f.edges.insert((u, v)) {
                return Err(format!("duplicate edge [{u},{v}]"));
            }
        }
        Ok(f)
    }
}

impl FaultSet {
    pub fn from_edges(edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        FaultSet { vertices: BTreeSet::new(), edges: edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect() }
    }

    pub fn from_vertices(vertices: impl IntoIterator<Item = usize>) -> Self {
        FaultSet { vertices: vertices.into_iter().collect(), edges: BTreeSet::new() }
    }

    /// |F|, counting vertices and edges alike.
    pub fn size(&self) -> usize {
        self.vertices.len() + self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Checks that every element exists in `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        for &v in &self.vertices {
            g.index_of(v).ok_or(Error::UnknownVertex(v))?;
        }
        for &(a, b) in &self.edges {
            match (g.index_of(a), g.index_of(b)) {
                (Some(u), Some(v)) if g.has_edge(u, v) => {}
                _ => return Err(Error::UnknownEdge(a, b)),
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("fault set serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}
