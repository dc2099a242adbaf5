use serde::Serialize;

use super::assignment::IntegerKMatching;
use super::certificate::{lemma41_certificate, CertBudget, Lemma41Certificate};
use super::gadget::{build_gadget, matching_size};
use crate::graph::Graph;
use crate::matching::{max_matching, max_matching_mate, NONE};

/// Existence verdict with a positive or (when found) negative certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub exists: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assignment: Option<IntegerKMatching>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Lemma41Certificate>,
}

impl Decision {
    fn yes(h: IntegerKMatching) -> Self {
        Decision { exists: true, assignment: Some(h), certificate: None }
    }

    fn no(certificate: Option<Lemma41Certificate>) -> Self {
        Decision { exists: false, assignment: None, certificate }
    }
}

fn odd_total(g: &Graph, k: u32) -> bool {
    (k as usize * g.n()) % 2 == 1
}

/// k on a perfect matching, 0 elsewhere.
fn from_perfect_matching(g: &Graph, k: u32) -> Option<IntegerKMatching> {
    if !g.is_even() {
        return None;
    }
    let m = max_matching(g);
    if 2 * m.size() != g.n() {
        return None;
    }
    let mut h = IntegerKMatching::zero(g, k);
    for &(u, v) in &m.pairs {
        h.values.insert((g.label(u), g.label(v)), k);
    }
    Some(h)
}

/// Perfect integer k-matching: all vertex sums equal k.
pub fn decide_perfect_ikm(g: &Graph, k: u32) -> Decision {
    assert!(k >= 1, "k must be positive");
    if odd_total(g, k) {
        return Decision::no(None);
    }
    if let Some(h) = from_perfect_matching(g, k) {
        return Decision::yes(h);
    }
    let gad = build_gadget(g, k, None);
    let mut mate = gad.solve();
    if 2 * matching_size(&mate) != gad.aux.n() {
        return Decision::no(None);
    }
    gad.normalize(&mut mate);
    Decision::yes(IntegerKMatching::from_edge_values(g, k, &gad.edge_values(&mate)))
}

/// Almost perfect integer k-matching: one vertex at k - 1, the rest at k.
pub fn decide_almost_perfect_ikm(g: &Graph, k: u32) -> Decision {
    assert!(k >= 1, "k must be positive");
    if !odd_total(g, k) {
        return Decision::no(None);
    }
    let gad = build_gadget(g, k, None);
    let mut mate = gad.solve();
    if 2 * matching_size(&mate) + 1 != gad.aux.n() {
        return Decision::no(lemma41_certificate(g, k, CertBudget::Auto));
    }
    gad.normalize(&mut mate);
    debug_assert_eq!(gad.exposed_originals(&mate).len(), 1);
    Decision::yes(IntegerKMatching::from_edge_values(g, k, &gad.edge_values(&mate)))
}

/// μ_k(G): the maximum total weight of an integer k-matching.
pub fn mu_k(g: &Graph, k: u32) -> u64 {
    assert!(k >= 1, "k must be positive");
    let gad = build_gadget(g, k, None);
    (matching_size(&gad.solve()) - gad.pair_count()) as u64
}

/// A maximum integer k-matching (total weight μ_k).
pub fn max_ikm(g: &Graph, k: u32) -> IntegerKMatching {
    let gad = build_gadget(g, k, None);
    let mut mate = gad.solve();
    gad.normalize(&mut mate);
    IntegerKMatching::from_edge_values(g, k, &gad.edge_values(&mate))
}

/// Existence only, without recovering an assignment.
pub fn has_perfect_ikm(g: &Graph, k: u32) -> bool {
    if odd_total(g, k) {
        return false;
    }
    if g.n() == 0 {
        return true;
    }
    if g.adjacency().iter().any(Vec::is_empty) {
        return false;
    }
    let mate = max_matching_mate(g.adjacency());
    if mate.iter().all(|&w| w != NONE) {
        return true;
    }
    if k == 1 {
        return false;
    }
    let gad = build_gadget(g, k, None);
    2 * matching_size(&gad.solve()) == gad.aux.n()
}

/// Existence only, without recovering an assignment.
pub fn has_almost_perfect_ikm(g: &Graph, k: u32) -> bool {
    if !odd_total(g, k) {
        return false;
    }
    // an isolated vertex has sum 0, which must equal k - 1, and only one may
    let isolated = g.adjacency().iter().filter(|a| a.is_empty()).count();
    if isolated > 1 || (isolated == 1 && k > 1) {
        return false;
    }
    if k == 1 {
        let mate = max_matching_mate(g.adjacency());
        return mate.iter().filter(|&&w| w == NONE).count() == 1;
    }
    let gad = build_gadget(g, k, None);
    2 * matching_size(&gad.solve()) + 1 == gad.aux.n()
}

/// G has a perfect or an almost perfect integer k-matching. Only the
/// variant allowed by the parity of k|V| is tested.
pub fn has_perfect_or_almost(g: &Graph, k: u32) -> bool {
    if odd_total(g, k) {
        has_almost_perfect_ikm(g, k)
    } else {
        has_perfect_ikm(g, k)
    }
}
