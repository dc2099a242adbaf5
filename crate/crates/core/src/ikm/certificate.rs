//! Vertex sets violating `odd(G-S) + k·i(G-S) <= k|S| + 1`.
//!
//! Every graph with an almost perfect integer k-matching satisfies the
//! inequality for all `S`, so a violating set proves that none exists.

use serde::Serialize;

use crate::graph::Graph;
use crate::preclusion::combin::Combinations;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma41Certificate {
    /// S, as labels.
    pub s: Vec<usize>,
    pub odd_count: usize,
    pub isolated_count: usize,
    /// k|S| + 1 - odd(G-S) - k·i(G-S); always negative.
    pub slack: i64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CertBudget {
    /// Exhaustive up to 20 vertices, else |S| <= 4.
    #[default]
    Auto,
    Exhaustive,
    MaxSize(usize),
}

impl CertBudget {
    fn max_size(self, n: usize) -> usize {
        match self {
            CertBudget::Auto if n <= 20 => n,
            CertBudget::Auto => 4,
            CertBudget::Exhaustive => n,
            CertBudget::MaxSize(s) => s.min(n),
        }
    }
}

/// Smallest violating `S` (ties broken lexicographically), if one exists
/// within the budget. `None` proves nothing.
pub fn lemma41_certificate(g: &Graph, k: u32, budget: CertBudget) -> Option<Lemma41Certificate> {
    let n = g.n();
    let k = k as i64;
    let mut gone = vec![false; n];
    for size in 0..=budget.max_size(n) {
        for s in Combinations::new(n, size) {
            for &v in &s {
                gone[v] = true;
            }
            let rest = g.remove_local(&gone, &[]);
            for &v in &s {
                gone[v] = false;
            }
            let rep = rest.components();
            let slack = k * size as i64 + 1 - rep.odd_nontrivial_count as i64 - k * rep.isolated_count as i64;
            if slack < 0 {
                return Some(Lemma41Certificate {
                    s: s.iter().map(|&v| g.label(v)).collect(),
                    odd_count: rep.odd_nontrivial_count,
                    isolated_count: rep.isolated_count,
                    slack,
                });
            }
        }
    }
    None
}
