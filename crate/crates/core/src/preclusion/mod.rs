//! (Strong) integer k-matching preclusion numbers by fault-set enumeration.
//!
//! Fault sets are r-subsets of a fixed element list: the edges in sorted
//! order, followed (for strong queries) by the vertices. Sizes are tried in
//! ascending order and, within a size, subsets in lexicographic order, so the
//! reported witness is the lexicographically smallest minimum preclusion set
//! regardless of how many workers take part.

pub mod combin;
mod exec;

use std::time::Instant;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{FaultSet, Graph};
use crate::ikm::has_perfect_or_almost;
use crate::matching::has_perfect_fractional_matching;
use combin::{binomial, next_combination, unrank};
pub use exec::Workers;

pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// Decides whether a graph left after deleting a fault set still has the
/// structure the preclusion number is about.
pub trait Survival: Sync {
    fn survives(&self, g: &Graph) -> bool;

    /// An isolated vertex always destroys the structure.
    fn isolated_kills(&self) -> bool;
}

/// Perfect or almost perfect integer k-matching.
#[derive(Clone, Copy, Debug)]
pub struct IkmSurvival {
    pub k: u32,
}

impl Survival for IkmSurvival {
    fn survives(&self, g: &Graph) -> bool {
        has_perfect_or_almost(g, self.k)
    }

    fn isolated_kills(&self) -> bool {
        self.k >= 2
    }
}

/// Perfect fractional matching.
#[derive(Clone, Copy, Debug)]
pub struct FractionalSurvival;

impl Survival for FractionalSurvival {
    fn survives(&self, g: &Graph) -> bool {
        has_perfect_fractional_matching(g)
    }

    fn isolated_kills(&self) -> bool {
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    /// Check that all fault sets of size `m - 1` survive and exhibit one of
    /// size `m` that does not.
    Verify(usize),
    /// Exhibit a size-`m` preclusion set and test `count` random fault sets
    /// of size `m - 1`.
    Sample {
        m: usize,
        count: usize,
        seed: u64,
    },
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Verify(_) => "verify",
            Mode::Sample { .. } => "sample",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PreclusionQuery {
    pub k: u32,
    /// Vertices and edges (true) or edges only (false).
    pub strong: bool,
    pub mode: Mode,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub budget: u128,
    pub workers: Workers,
}

impl Default for Options {
    fn default() -> Self {
        Options { budget: DEFAULT_BUDGET, workers: Workers::default() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Proved,
    /// A preclusion set is known but the lower bound is not established (or
    /// was refuted by a smaller one).
    UpperBoundOnly,
    /// All smaller fault sets survive but no preclusion set of the claimed
    /// size was found.
    LowerBoundOnly,
    SampledNoCounterexample,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PreclusionResult {
    pub value: Option<usize>,
    pub witness: Option<FaultSet>,
    /// Number of fault sets accounted for. In exact mode this counts every
    /// set preceding the witness in enumeration order, plus the witness.
    pub survivors_checked: u128,
    pub status: Status,
}

/// The enumeration universe for one graph and query kind.
struct Universe<'a> {
    g: &'a Graph,
    strong: bool,
}

impl Universe<'_> {
    fn len(&self) -> usize {
        self.g.m() + if self.strong { self.g.n() } else { 0 }
    }

    /// Residual graph for a sorted element subset; `None` if some element is
    /// an edge incident to a deleted vertex.
    fn residual(&self, subset: &[usize], allow_dominated: bool) -> Option<Graph> {
        let m = self.g.m();
        let split = subset.partition_point(|&i| i < m);
        let (edges, vertices) = subset.split_at(split);
        let mut gone = vec![false; self.g.n()];
        for &i in vertices {
            gone[i - m] = true;
        }
        if !allow_dominated {
            let edge_list = self.g.edges();
            if edges.iter().any(|&e| gone[edge_list[e].0] || gone[edge_list[e].1]) {
                return None;
            }
        }
        Some(self.g.remove_local(&gone, edges))
    }

    fn fault_set(&self, subset: &[usize]) -> FaultSet {
        let m = self.g.m();
        let mut f = FaultSet::default();
        for &i in subset {
            if i < m {
                let (u, v) = self.g.edges()[i];
                f.edges.insert((self.g.label(u), self.g.label(v)));
            } else {
                f.vertices.insert(self.g.label(i - m));
            }
        }
        f
    }

    fn subset_of(&self, f: &FaultSet) -> Vec<usize> {
        let m = self.g.m();
        let mut out: Vec<usize> = f
            .edges
            .iter()
            .map(|&(a, b)| {
                let (u, v) = (self.g.index_of(a).unwrap(), self.g.index_of(b).unwrap());
                self.g.edge_index(u, v).unwrap()
            })
            .chain(f.vertices.iter().map(|&v| m + self.g.index_of(v).unwrap()))
            .collect();
        out.sort_unstable();
        out
    }

    /// True when deleting the subset destroys the structure.
    /// `exhaustive_below` marks that every smaller fault set is known to
    /// survive, which settles dominated subsets without a solver call.
    fn precludes(&self, survival: &dyn Survival, subset: &[usize], exhaustive_below: bool) -> bool {
        let Some(rest) = self.residual(subset, !exhaustive_below) else {
            return false;
        };
        if survival.isolated_kills() && rest.adjacency().iter().any(Vec::is_empty) {
            return true;
        }
        !survival.survives(&rest)
    }
}

/// Chunk sizes for splitting `total` combinations among workers.
fn chunking(total: u128, workers: &Workers) -> (u128, usize) {
    let target = (workers.count() as u128 * 64).max(1);
    let chunk = total.div_ceil(target).clamp(16, 1 << 16);
    (chunk, total.div_ceil(chunk) as usize)
}

/// First subset of size `r` (in lexicographic order) that precludes,
/// with its rank.
fn first_precluding(
    uni: &Universe,
    survival: &dyn Survival,
    r: usize,
    exhaustive_below: bool,
    workers: &Workers,
) -> Option<(u128, Vec<usize>)> {
    let n = uni.len();
    let total = binomial(n, r);
    if total == 0 {
        return None;
    }
    let (chunk, chunks) = chunking(total, workers);
    let hit = workers.find_first(chunks, |c| {
        let start = c as u128 * chunk;
        let end = (start + chunk).min(total);
        let mut cur = unrank(n, r, start);
        let mut rank = start;
        loop {
            if uni.precludes(survival, &cur, exhaustive_below) {
                return Some((rank, cur));
            }
            rank += 1;
            if rank == end || !next_combination(&mut cur, n) {
                return None;
            }
        }
    });
    hit.map(|(_, found)| found)
}

/// Exact minimum by ascending-size enumeration.
pub fn minimum_by_enumeration(
    g: &Graph,
    survival: &dyn Survival,
    strong: bool,
    opts: &Options,
) -> Result<PreclusionResult> {
    let uni = Universe { g, strong };
    let n = uni.len();
    let cap = search_cap(&uni, survival);
    let needed = (0..=cap).fold(0u128, |acc, r| acc.saturating_add(binomial(n, r)));
    if needed > opts.budget {
        return Err(Error::BudgetExceeded { needed, budget: opts.budget });
    }
    let mut checked: u128 = 0;
    opts.workers.install(|| {
        for r in 0..=cap {
            if let Some((rank, subset)) = first_precluding(&uni, survival, r, true, &opts.workers) {
                return Ok(PreclusionResult {
                    value: Some(r),
                    witness: Some(uni.fault_set(&subset)),
                    survivors_checked: checked + rank + 1,
                    status: Status::Proved,
                });
            }
            checked += binomial(n, r);
        }
        Err(Error::NoPreclusionSet)
    })
}

/// Largest size the exact search can need: δ(G) when the edge star of a
/// minimum-degree vertex precludes, otherwise every element.
fn search_cap(uni: &Universe, survival: &dyn Survival) -> usize {
    let g = uni.g;
    let Some(v) = (0..g.n()).min_by_key(|&v| g.degree(v)) else {
        return uni.len();
    };
    let mut star: Vec<usize> = g.neighbors(v).iter().map(|&w| g.edge_index(v, w).unwrap()).collect();
    star.sort_unstable();
    if uni.precludes(survival, &star, false) {
        star.len()
    } else {
        uni.len()
    }
}

/// Every fault set of size `r` survives; returns the first one that does not
/// (lexicographically), or `None`.
fn all_survive(uni: &Universe, survival: &dyn Survival, r: usize, workers: &Workers) -> Option<(u128, Vec<usize>)> {
    first_precluding(uni, survival, r, false, workers)
}

/// Stars Γ(v) with exactly `m` edges that preclude, smallest vertex first.
fn star_of_size(uni: &Universe, survival: &dyn Survival, m: usize) -> Option<Vec<usize>> {
    let g = uni.g;
    (0..g.n()).filter(|&v| g.degree(v) == m).find_map(|v| {
        let mut subset: Vec<usize> = g.neighbors(v).iter().map(|&w| g.edge_index(v, w).unwrap()).collect();
        subset.sort_unstable();
        uni.precludes(survival, &subset, false).then_some(subset)
    })
}

/// A preclusion set of size exactly `m`: a star if one fits, else the
/// lexicographically first one when the budget allows full enumeration.
fn witness_of_size(
    uni: &Universe,
    survival: &dyn Survival,
    m: usize,
    budget_left: u128,
    workers: &Workers,
) -> (Option<Vec<usize>>, u128) {
    if let Some(s) = star_of_size(uni, survival, m) {
        return (Some(s), 1);
    }
    let total = binomial(uni.len(), m);
    if total > budget_left {
        return (None, 0);
    }
    match first_precluding(uni, survival, m, false, workers) {
        Some((rank, s)) => (Some(s), rank + 1),
        None => (None, total),
    }
}

fn sample_subsets(n: usize, r: usize, count: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut s = index::sample(&mut rng, n, r).into_vec();
            s.sort_unstable();
            s
        })
        .collect()
}

pub fn preclusion_number_with(
    g: &Graph,
    survival: &dyn Survival,
    strong: bool,
    mode: Mode,
    opts: &Options,
) -> Result<PreclusionResult> {
    let uni = Universe { g, strong };
    let n = uni.len();
    match mode {
        Mode::Exact => minimum_by_enumeration(g, survival, strong, opts),
        Mode::Verify(m) => {
            if m > n {
                return Err(Error::Parameter(format!("verify size {m} exceeds {n} elements")));
            }
            opts.workers.install(|| {
                let mut checked = 0u128;
                if m > 0 {
                    let total = binomial(n, m - 1);
                    if total > opts.budget {
                        return Err(Error::BudgetExceeded { needed: total, budget: opts.budget });
                    }
                    if let Some((rank, s)) = all_survive(&uni, survival, m - 1, &opts.workers) {
                        return Ok(PreclusionResult {
                            value: None,
                            witness: Some(uni.fault_set(&s)),
                            survivors_checked: rank + 1,
                            status: Status::UpperBoundOnly,
                        });
                    }
                    checked = total;
                    // re-run a 1% subsample of the lower bound
                    let count = (total / 100).max(1) as usize;
                    for s in sample_subsets(n, m - 1, count, 0x5eed ^ m as u64) {
                        if uni.precludes(survival, &s, false) {
                            return Err(Error::Inconsistent(format!(
                                "fault set {} passed enumeration but fails re-check",
                                uni.fault_set(&s).to_json()
                            )));
                        }
                    }
                }
                let (witness, used) = witness_of_size(&uni, survival, m, opts.budget - checked, &opts.workers);
                checked += used;
                Ok(match witness {
                    Some(s) => PreclusionResult {
                        value: Some(m),
                        witness: Some(uni.fault_set(&s)),
                        survivors_checked: checked,
                        status: Status::Proved,
                    },
                    None => PreclusionResult {
                        value: None,
                        witness: None,
                        survivors_checked: checked,
                        status: Status::LowerBoundOnly,
                    },
                })
            })
        }
        Mode::Sample { m, count, seed } => {
            if m == 0 || m > n {
                return Err(Error::Parameter(format!("sample size {m} must be in 1..={n}")));
            }
            if count == 0 {
                return Err(Error::Parameter("sample count must be at least 1".into()));
            }
            opts.workers.install(|| {
                let samples = sample_subsets(n, m - 1, count, seed);
                let bad = opts
                    .workers
                    .find_first(samples.len(), |i| uni.precludes(survival, &samples[i], false).then_some(()));
                if let Some((i, ())) = bad {
                    return Ok(PreclusionResult {
                        value: None,
                        witness: Some(uni.fault_set(&samples[i])),
                        survivors_checked: i as u128 + 1,
                        status: Status::UpperBoundOnly,
                    });
                }
                let (witness, _) = witness_of_size(&uni, survival, m, opts.budget, &opts.workers);
                Ok(PreclusionResult {
                    value: None,
                    witness: witness.map(|s| uni.fault_set(&s)),
                    survivors_checked: count as u128,
                    status: Status::SampledNoCounterexample,
                })
            })
        }
    }
}

/// mp^k (edges only) or smp^k (strong).
pub fn preclusion_number(g: &Graph, q: &PreclusionQuery, opts: &Options) -> Result<PreclusionResult> {
    if q.k == 0 {
        return Err(Error::Parameter("k must be positive".into()));
    }
    preclusion_number_with(g, &IkmSurvival { k: q.k }, q.strong, q.mode, opts)
}

/// G - F has neither a perfect nor an almost perfect integer k-matching.
pub fn is_preclusion_set(g: &Graph, k: u32, strong: bool, f: &FaultSet) -> Result<bool> {
    if !strong {
        if let Some(&v) = f.vertices.iter().next() {
            return Err(Error::VertexInEdgeQuery(v));
        }
    }
    let rest = g.delete(f)?;
    Ok(!has_perfect_or_almost(&rest, k))
}

/// Γ(v) as a fault set, checked to be a preclusion set. `v` is a label.
pub fn star_witness(g: &Graph, k: u32, v: usize, strong: bool) -> Result<FaultSet> {
    if k < 2 {
        return Err(Error::Parameter("star witnesses need k >= 2".into()));
    }
    let i = g.index_of(v).ok_or(Error::UnknownVertex(v))?;
    let f = FaultSet::from_edges(g.neighbors(i).iter().map(|&w| (v, g.label(w))));
    if !is_preclusion_set(g, k, strong, &f)? {
        return Err(Error::StarWitness(v));
    }
    Ok(f)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecializedNumbers {
    pub mp: usize,
    pub smp: usize,
    /// Through integer 2-matchings.
    pub fmp: usize,
    /// Through perfect fractional matchings directly.
    pub fmp_direct: usize,
}

/// mp, smp and fmp; fmp is computed both via k = 2 and directly, and the two
/// must agree.
pub fn specialized_numbers(g: &Graph, opts: &Options) -> Result<SpecializedNumbers> {
    let value = |r: PreclusionResult| r.value.expect("exact mode sets a value");
    let exact = |k, strong| preclusion_number(g, &PreclusionQuery { k, strong, mode: Mode::Exact }, opts).map(value);
    let mp = exact(1, false)?;
    let smp = exact(1, true)?;
    let fmp = exact(2, false)?;
    let fmp_direct = value(minimum_by_enumeration(g, &FractionalSurvival, false, opts)?);
    if fmp != fmp_direct {
        return Err(Error::Inconsistent(format!("fmp via k=2 is {fmp}, directly {fmp_direct}")));
    }
    Ok(SpecializedNumbers { mp, smp, fmp, fmp_direct })
}

/// JSON report for one query.
#[derive(Clone, Debug, Serialize)]
pub struct PreclusionReport<'a> {
    pub graph: &'a str,
    pub k: u32,
    pub strong: bool,
    pub mode: &'static str,
    pub value: Option<usize>,
    pub witness: Option<&'a FaultSet>,
    pub checked: u128,
    pub status: Status,
    pub elapsed_ms: u128,
}

impl PreclusionResult {
    pub fn report<'a>(&'a self, graph: &'a str, q: &PreclusionQuery, started: Instant) -> PreclusionReport<'a> {
        PreclusionReport {
            graph,
            k: q.k,
            strong: q.strong,
            mode: q.mode.name(),
            value: self.value,
            witness: self.witness.as_ref(),
            checked: self.survivors_checked,
            status: self.status,
            elapsed_ms: started.elapsed().as_millis(),
        }
    }
}

/// Index form of a fault set in the enumeration order used here.
pub fn element_indices(g: &Graph, strong: bool, f: &FaultSet) -> Vec<usize> {
    Universe { g, strong }.subset_of(f)
}
