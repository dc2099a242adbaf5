mod common;

use common::*;
use kmatch::generators::{complete, cycle, path, random_graph};
use kmatch::preclusion::{is_preclusion_set, preclusion_number, Mode, Options, PreclusionQuery, Status, Workers};
use kmatch::Graph;

fn exact(g: &Graph, k: u32, strong: bool) -> usize {
    let q = PreclusionQuery { k, strong, mode: Mode::Exact };
    let r = preclusion_number(g, &q, &Options::default()).unwrap();
    assert_eq!(r.status, Status::Proved);
    let w = r.witness.unwrap();
    assert_eq!(w.size(), r.value.unwrap());
    assert!(is_preclusion_set(g, k, strong, &w).unwrap());
    r.value.unwrap()
}

#[test]
fn agrees_with_brute_force_on_tiny_graphs() {
    let mut graphs = vec![cycle(4).unwrap(), path(5).unwrap(), path(3).unwrap(), complete(4).unwrap()];
    graphs.extend(
        (0..40u64).map(|s| random_graph(3 + (s as usize % 4), 0.5, s).unwrap()).filter(|g| g.m() + g.n() <= 13),
    );
    for g in &graphs {
        let p = Plain::of(g);
        for k in 1..=3 {
            for strong in [false, true] {
                assert_eq!(
                    exact(g, k, strong),
                    brute_preclusion_number(&p, k, strong),
                    "k={k} strong={strong}\n{}",
                    g.to_text()
                );
            }
        }
    }
}

#[test]
fn strong_never_exceeds_edge_only_and_both_respect_min_degree() {
    for seed in 0..60u64 {
        let g = random_graph(4 + (seed as usize % 5), 0.6, seed).unwrap();
        for k in [2, 3] {
            let mp = exact(&g, k, false);
            let smp = exact(&g, k, true);
            assert!(smp <= mp);
            assert!(mp <= g.min_degree().unwrap());
            assert!(smp <= g.min_degree().unwrap());
        }
    }
}

#[test]
fn worker_count_does_not_change_value_or_witness() {
    for seed in 0..10u64 {
        let g = random_graph(7, 0.7, seed).unwrap();
        for strong in [false, true] {
            let q = PreclusionQuery { k: 3, strong, mode: Mode::Exact };
            let one =
                preclusion_number(&g, &q, &Options { workers: Workers::sequential(), ..Default::default() }).unwrap();
            let many =
                preclusion_number(&g, &q, &Options { workers: Workers::with_jobs(4), ..Default::default() }).unwrap();
            assert_eq!(one, many);
        }
    }
}

#[test]
fn verify_mode_matches_exact() {
    for seed in 0..20u64 {
        let g = random_graph(6, 0.6, seed).unwrap();
        let v = exact(&g, 3, true);
        let q = PreclusionQuery { k: 3, strong: true, mode: Mode::Verify(v) };
        let r = preclusion_number(&g, &q, &Options::default()).unwrap();
        assert_eq!((r.value, r.status), (Some(v), Status::Proved));
        if v > 0 {
            let q = PreclusionQuery { k: 3, strong: true, mode: Mode::Verify(v + 1) };
            let r = preclusion_number(&g, &q, &Options::default()).unwrap();
            assert_eq!(r.status, Status::UpperBoundOnly);
            assert_eq!(r.witness.unwrap().size(), v);
        }
    }
}

#[test]
fn sampling_is_deterministic_per_seed() {
    let g = complete(7).unwrap();
    let q = PreclusionQuery { k: 3, strong: true, mode: Mode::Sample { m: 6, count: 300, seed: 42 } };
    let a = preclusion_number(&g, &q, &Options::default()).unwrap();
    let b = preclusion_number(&g, &q, &Options { workers: Workers::sequential(), ..Default::default() }).unwrap();
    assert_eq!(a, b);
}

#[test]
fn invalid_mode_parameters() {
    let g = complete(4).unwrap();
    let opts = Options::default();
    let bad = [Mode::Sample { m: 0, count: 10, seed: 0 }, Mode::Sample { m: 3, count: 0, seed: 0 }, Mode::Verify(100)];
    for mode in bad {
        assert!(preclusion_number(&g, &PreclusionQuery { k: 3, strong: false, mode }, &opts).is_err());
    }
    assert!(preclusion_number(&g, &PreclusionQuery { k: 0, strong: false, mode: Mode::Exact }, &opts).is_err());
}
