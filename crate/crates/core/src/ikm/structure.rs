//! Odd-cycle-tree recognition and the support structure of an assignment.

use serde::Serialize;

use super::assignment::IntegerKMatching;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Blocks (biconnected components, bridges included) as edge lists of local
/// vertex pairs.
pub fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<Vec<(usize, usize)>>,
    }

    fn dfs(st: &mut State, u: usize, parent: usize) {
        st.time += 1;
        st.disc[u] = st.time;
        st.low[u] = st.time;
        for i in 0..st.g.degree(u) {
            let w = st.g.neighbors(u)[i];
            if st.disc[w] == 0 {
                st.stack.push((u, w));
                dfs(st, w, u);
                st.low[u] = st.low[u].min(st.low[w]);
                if st.low[w] >= st.disc[u] {
                    let mut block = Vec::new();
                    while let Some(e) = st.stack.pop() {
                        block.push((e.0.min(e.1), e.0.max(e.1)));
                        if e == (u, w) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    st.out.push(block);
                }
            } else if w != parent && st.disc[w] < st.disc[u] {
                st.stack.push((u, w));
                st.low[u] = st.low[u].min(st.disc[w]);
            }
        }
    }

    let mut st = State { g, disc: vec![0; g.n()], low: vec![0; g.n()], time: 0, stack: Vec::new(), out: Vec::new() };
    for v in 0..g.n() {
        if st.disc[v] == 0 {
            dfs(&mut st, v, usize::MAX);
        }
    }
    st.out
}

fn block_vertices(block: &[(usize, usize)]) -> Vec<usize> {
    let mut vs: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

/// A connected graph whose blocks are odd cycles or K_2, with δ >= 2 and no
/// two odd cycles sharing a vertex.
pub fn is_odd_cycle_tree(h: &Graph) -> Result<bool> {
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    if h.n() == 0 || h.min_degree()? < 2 {
        return Ok(false);
    }
    let mut on_cycle = vec![false; h.n()];
    for block in blocks(h) {
        if block.len() == 1 {
            continue;
        }
        let vs = block_vertices(&block);
        // a 2-connected block with as many edges as vertices is a cycle
        if vs.len() != block.len() || vs.len().is_multiple_of(2) {
            return Ok(false);
        }
        for v in vs {
            if on_cycle[v] {
                return Ok(false);
            }
            on_cycle[v] = true;
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SupportKind {
    SingleEdge,
    OddCycleTree,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportComponent {
    /// Labels.
    pub vertices: Vec<usize>,
    pub kind: SupportKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportReport {
    pub components: Vec<SupportComponent>,
    /// Every component is a single edge or an odd-cycle-tree graph.
    pub conforms: bool,
}

/// Classifies the components of the subgraph formed by the non-zero edges
/// of `m` (vertices not touched by such an edge are ignored).
pub fn support_structure(g: &Graph, m: &IntegerKMatching) -> Result<SupportReport> {
    let mut edges = Vec::new();
    for (a, b) in m.support() {
        match (g.index_of(a), g.index_of(b)) {
            (Some(u), Some(v)) if g.has_edge(u, v) => edges.push((u, v)),
            _ => return Err(Error::UnknownEdge(a, b)),
        }
    }
    let mut touched = vec![false; g.n()];
    for &(u, v) in &edges {
        touched[u] = true;
        touched[v] = true;
    }
    let support = Graph::from_sorted(g.labels().to_vec(), edges);
    let mut components = Vec::new();
    for comp in support.component_indices() {
        if !touched[comp[0]] {
            continue;
        }
        let sub = support.induced(&comp);
        let kind = if sub.n() == 2 {
            SupportKind::SingleEdge
        } else if is_odd_cycle_tree(&sub)? {
            SupportKind::OddCycleTree
        } else {
            SupportKind::Other
        };
        components.push(SupportComponent { vertices: sub.labels().to_vec(), kind });
    }
    let conforms = components.iter().all(|c| c.kind != SupportKind::Other);
    Ok(SupportReport { components, conforms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    fn bowtie() -> Graph {
        Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn recognizer() {
        assert!(is_odd_cycle_tree(&cycle(5).unwrap()).unwrap());
        assert!(!is_odd_cycle_tree(&cycle(4).unwrap()).unwrap());
        assert!(!is_odd_cycle_tree(&bowtie()).unwrap());
        assert!(!is_odd_cycle_tree(&path(4).unwrap()).unwrap());
        assert!(!is_odd_cycle_tree(&complete(4).unwrap()).unwrap());
        // two triangles joined by a bridge
        let g = Graph::new(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(is_odd_cycle_tree(&g).unwrap());
        assert!(matches!(is_odd_cycle_tree(&Graph::empty(2)), Err(Error::Disconnected)));
    }

    #[test]
    fn block_count() {
        assert_eq!(blocks(&bowtie()).len(), 2);
        assert_eq!(blocks(&path(4).unwrap()).len(), 3);
    }

    #[test]
    fn support_of_assignments() {
        let g = cycle(5).unwrap();
        let h = IntegerKMatching::from_edge_values(&g, 2, &[1; 5]);
        let rep = support_structure(&g, &h).unwrap();
        assert!(rep.conforms);
        assert_eq!(rep.components[0].kind, SupportKind::OddCycleTree);

        let g = path(4).unwrap();
        let h = IntegerKMatching::from_edge_values(&g, 3, &[3, 0, 3]);
        let rep = support_structure(&g, &h).unwrap();
        assert_eq!(rep.components.len(), 2);
        assert!(rep.components.iter().all(|c| c.kind == SupportKind::SingleEdge));

        let h = IntegerKMatching::from_edge_values(&g, 3, &[2, 1, 2]);
        assert!(!support_structure(&g, &h).unwrap().conforms);
    }
}
