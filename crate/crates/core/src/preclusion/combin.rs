//! Lexicographic r-subsets of `0..n`: counting, ranking, unranking and
//! iteration.

/// C(n, r), saturating at `u128::MAX`.
pub fn binomial(n: usize, r: usize) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        // acc * (n - i) / (i + 1) stays integral at every step
        acc = match acc.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// The `rank`-th r-subset of `0..n` in lexicographic order.
pub fn unrank(n: usize, r: usize, mut rank: u128) -> Vec<usize> {
    debug_assert!(rank < binomial(n, r));
    let mut out = Vec::with_capacity(r);
    let mut next = 0;
    for slot in 0..r {
        let left = r - slot - 1;
        loop {
            // subsets starting with `next` at this slot
            let count = binomial(n - next - 1, left);
            if rank < count {
                break;
            }
            rank -= count;
            next += 1;
        }
        out.push(next);
        next += 1;
    }
    out
}

/// Position of a sorted r-subset in lexicographic order.
pub fn rank(n: usize, subset: &[usize]) -> u128 {
    let r = subset.len();
    let mut acc = 0;
    let mut prev = 0;
    for (slot, &c) in subset.iter().enumerate() {
        for skipped in prev..c {
            acc += binomial(n - skipped - 1, r - slot - 1);
        }
        prev = c + 1;
    }
    acc
}

/// Advances `c` to the next r-subset of `0..n`; false when `c` was last.
pub fn next_combination(c: &mut [usize], n: usize) -> bool {
    let r = c.len();
    let mut i = r;
    while i > 0 {
        i -= 1;
        if c[i] < n - r + i {
            c[i] += 1;
            for j in i + 1..r {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Iterator over r-subsets of `0..n` in lexicographic order.
pub struct Combinations {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, r: usize) -> Self {
        Combinations { n, cur: (r <= n).then(|| (0..r).collect()) }
    }

    pub fn starting_at(n: usize, r: usize, rank: u128) -> Self {
        Combinations { n, cur: (rank < binomial(n, r)).then(|| unrank(n, r, rank)) }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.clone()?;
        let cur = self.cur.as_mut().expect("checked above");
        if !next_combination(cur, self.n) {
            self.cur = None;
        }
        Some(out)
    }
}
