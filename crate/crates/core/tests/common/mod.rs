//! Brute-force oracles. Nothing here calls into the solver paths it checks:
//! graphs are read as plain vertex counts and edge lists.

#![allow(dead_code)]

use kmatch::Graph;

pub struct Plain {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Plain {
    pub fn of(g: &Graph) -> Self {
        Plain { n: g.n(), edges: g.edges().to_vec() }
    }
}

/// Everything the exhaustive integer k-matching enumeration learns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IkmFacts {
    pub mu_k: u64,
    pub perfect: bool,
    pub almost_perfect: bool,
    /// Among maximum assignments, one with the most zero edges.
    pub sparsest_max: Vec<u32>,
}

/// Enumerates every h: E -> {0..k} with vertex sums <= k.
pub fn ikm_facts(p: &Plain, k: u32) -> IkmFacts {
    struct St<'a> {
        p: &'a Plain,
        k: u32,
        sums: Vec<u32>,
        vals: Vec<u32>,
        best: (u64, usize, Vec<u32>),
        perfect: bool,
        almost: bool,
    }
    fn rec(st: &mut St, i: usize) {
        if i == st.p.edges.len() {
            let total: u64 = st.vals.iter().map(|&x| x as u64).sum();
            let zeros = st.vals.iter().filter(|&&x| x == 0).count();
            if (total, zeros) > (st.best.0, st.best.1) {
                st.best = (total, zeros, st.vals.clone());
            }
            let short: Vec<u32> = st.sums.iter().filter(|&&s| s != st.k).copied().collect();
            if short.is_empty() {
                st.perfect = true;
            }
            if short.len() == 1 && short[0] + 1 == st.k {
                st.almost = true;
            }
            return;
        }
        let (u, v) = st.p.edges[i];
        for x in 0..=st.k {
            if st.sums[u] + x > st.k || st.sums[v] + x > st.k {
                break;
            }
            st.sums[u] += x;
            st.sums[v] += x;
            st.vals[i] = x;
            rec(st, i + 1);
            st.sums[u] -= x;
            st.sums[v] -= x;
        }
        st.vals[i] = 0;
    }
    let mut st = St {
        p,
        k,
        sums: vec![0; p.n],
        vals: vec![0; p.edges.len()],
        best: (0, 0, vec![0; p.edges.len()]),
        perfect: false,
        almost: false,
    };
    st.best.1 = p.edges.len();
    rec(&mut st, 0);
    IkmFacts { mu_k: st.best.0, perfect: st.perfect, almost_perfect: st.almost, sparsest_max: st.best.2 }
}

/// Maximum matching size by trying every edge subset.
pub fn brute_matching_number(p: &Plain) -> usize {
    let m = p.edges.len();
    assert!(m <= 20);
    let mut best = 0;
    for mask in 0u32..(1 << m) {
        let mut used = vec![false; p.n];
        let mut ok = true;
        for (i, &(u, v)) in p.edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if used[u] || used[v] {
                    ok = false;
                    break;
                }
                used[u] = true;
                used[v] = true;
            }
        }
        if ok {
            best = best.max(mask.count_ones() as usize);
        }
    }
    best
}

/// Perfect fractional matching by searching values in {0, 1/2, 1}.
pub fn brute_perfect_half_integral(p: &Plain) -> bool {
    let mut last = vec![usize::MAX; p.n];
    for (i, &(u, v)) in p.edges.iter().enumerate() {
        last[u] = i;
        last[v] = i;
    }
    if last.contains(&usize::MAX) {
        return p.n == 0;
    }
    fn rec(p: &Plain, last: &[usize], sums: &mut [u8], i: usize) -> bool {
        if i == p.edges.len() {
            return sums.iter().all(|&s| s == 2);
        }
        let (u, v) = p.edges[i];
        for x in 0..=2u8 {
            if sums[u] + x > 2 || sums[v] + x > 2 {
                break;
            }
            sums[u] += x;
            sums[v] += x;
            let closed_ok = (last[u] != i || sums[u] == 2) && (last[v] != i || sums[v] == 2);
            if closed_ok && rec(p, last, sums, i + 1) {
                return true;
            }
            sums[u] -= x;
            sums[v] -= x;
        }
        false
    }
    rec(p, &last, &mut vec![0; p.n], 0)
}

/// Component sizes of the graph restricted to vertices not in `removed`.
pub fn component_sizes(p: &Plain, removed: u64) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..p.n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for &(u, v) in &p.edges {
        if removed >> u & 1 == 0 && removed >> v & 1 == 0 {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a] = b;
        }
    }
    let mut size = vec![0; p.n];
    for v in 0..p.n {
        if removed >> v & 1 == 0 {
            let r = find(&mut parent, v);
            size[r] += 1;
        }
    }
    size.into_iter().filter(|&s| s > 0).collect()
}

/// All S with odd(G-S) + k i(G-S) > k|S| + 1, as bitmasks.
pub fn lemma41_violations(p: &Plain, k: u32) -> Vec<u64> {
    assert!(p.n <= 24);
    let k = k as i64;
    (0u64..(1 << p.n))
        .filter(|&s| {
            let sizes = component_sizes(p, s);
            let odd = sizes.iter().filter(|&&c| c >= 3 && c % 2 == 1).count() as i64;
            let iso = sizes.iter().filter(|&&c| c == 1).count() as i64;
            odd + k * iso > k * s.count_ones() as i64 + 1
        })
        .collect()
}

/// max over S of c_o(G - S) - |S|.
pub fn tutte_berge_deficiency(p: &Plain) -> usize {
    (0u64..(1 << p.n))
        .map(|s| {
            let odd = component_sizes(p, s).iter().filter(|&&c| c % 2 == 1).count() as i64;
            odd - s.count_ones() as i64
        })
        .max()
        .unwrap_or(0)
        .max(0) as usize
}

/// Residual graph after deleting the vertices in `vmask` and the edges in
/// `emask` (bit i = edge i), relabelled to 0..n'.
pub fn residual(p: &Plain, vmask: u64, emask: u64) -> Plain {
    let mut map = vec![usize::MAX; p.n];
    let mut n = 0;
    for (v, slot) in map.iter_mut().enumerate() {
        if vmask >> v & 1 == 0 {
            *slot = n;
            n += 1;
        }
    }
    let edges = p
        .edges
        .iter()
        .enumerate()
        .filter(|&(i, &(u, v))| emask >> i & 1 == 0 && map[u] != usize::MAX && map[v] != usize::MAX)
        .map(|(_, &(u, v))| (map[u], map[v]))
        .collect();
    Plain { n, edges }
}

/// Minimum preclusion set size by brute force over every fault set, with
/// the decision made by [`ikm_facts`]. Tiny graphs only.
pub fn brute_preclusion_number(p: &Plain, k: u32, strong: bool) -> usize {
    let m = p.edges.len();
    let universe = m + if strong { p.n } else { 0 };
    assert!(universe <= 24);
    let mut best = usize::MAX;
    for mask in 0u64..(1 << universe) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let emask = mask & ((1 << m) - 1);
        let vmask = mask >> m;
        let facts = ikm_facts(&residual(p, vmask, emask), k);
        if !facts.perfect && !facts.almost_perfect {
            best = size;
        }
    }
    best
}

/// The stored corpus of small graphs.
pub fn corpus() -> Vec<Graph> {
    include_str!("../data/corpus.txt")
        .split("\n\n")
        .filter(|b| b.trim_start().starts_with('p'))
        .map(|b| Graph::parse_text(b).expect("corpus graph parses"))
        .collect()
}
