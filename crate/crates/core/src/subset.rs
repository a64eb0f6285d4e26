//! Subsets of a ground set `{0, .., n-1}` encoded as bitmasks.
//!
//! Everything user-facing numbers elements from 1; internally element `i` is bit `i - 1`.

/// A subset of the ground set, one bit per element.
pub type Mask = u32;

/// Hard cap on the ground set size.
pub const MAX_GROUND: usize = 12;

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn full(n: usize) -> Mask {
    if n == 0 {
        0
    } else {
        Mask::MAX >> (32 - n)
    }
}

pub fn size(mask: Mask) -> usize {
    mask.count_ones() as usize
}

pub fn contains(mask: Mask, e: usize) -> bool {
    mask & (1 << e) != 0
}

/// Elements of `mask` in increasing order.
pub fn elements(mask: Mask) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let e = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(e)
        }
    })
}

pub fn to_vec(mask: Mask) -> Vec<usize> {
    elements(mask).collect()
}

pub fn from_slice(items: &[usize]) -> Mask {
    items.iter().fold(0, |m, &e| m | (1 << e))
}

/// All `k`-subsets of `{0, .., n-1}`, ordered lexicographically as sorted tuples.
pub fn k_subsets(n: usize, k: usize) -> Vec<Mask> {
    fn go(start: usize, n: usize, left: usize, acc: Mask, out: &mut Vec<Mask>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for e in start..=(n - left) {
            go(e + 1, n, left - 1, acc | (1 << e), out);
        }
    }
    let mut out = Vec::with_capacity(binomial(n, k));
    if k <= n {
        go(0, n, k, 0, &mut out);
    }
    out
}

/// Position of a `k`-subset in the order produced by [`k_subsets`].
pub fn lex_rank(mask: Mask, n: usize) -> usize {
    let k = size(mask);
    let mut rank = 0;
    let mut next = 0;
    for (i, c) in elements(mask).enumerate() {
        for v in next..c {
            rank += binomial(n - 1 - v, k - 1 - i);
        }
        next = c + 1;
    }
    rank
}

/// Number of elements of `mask` strictly below `e`.
pub fn count_below(mask: Mask, e: usize) -> usize {
    size(mask & ((1 << e) - 1))
}

/// Parity of the sorting permutation of `items`, or `None` when an entry repeats.
pub fn sort_parity(items: &[usize]) -> Option<bool> {
    let mut odd = false;
    for i in 0..items.len() {
        for j in (i + 1)..items.len() {
            if items[i] == items[j] {
                return None;
            }
            if items[i] > items[j] {
                odd = !odd;
            }
        }
    }
    Some(odd)
}

/// Parity of the permutation sorting the concatenation `a ++ b` of two disjoint sets.
pub fn shuffle_parity(a: Mask, b: Mask) -> bool {
    let mut inversions = 0;
    for x in elements(a) {
        inversions += count_below(b, x);
    }
    inversions % 2 == 1
}

/// Re-index `mask` after removing the elements of `removed` from the ground set,
/// keeping the relative order of the survivors.
pub fn compress(mask: Mask, removed: Mask) -> Mask {
    let mut out = 0;
    let mut j = 0;
    for e in 0..32 {
        if contains(removed, e) {
            continue;
        }
        if contains(mask, e) {
            out |= 1 << j;
        }
        j += 1;
    }
    out
}

/// Inverse of [`compress`]: lift a mask on the reduced ground set back to the original one.
pub fn expand(mask: Mask, removed: Mask, n: usize) -> Mask {
    let mut out = 0;
    let mut j = 0;
    for e in 0..n {
        if contains(removed, e) {
            continue;
        }
        if contains(mask, j) {
            out |= 1 << e;
        }
        j += 1;
    }
    out
}

/// Format as the 1-based comma list used in JSON keys, e.g. `1,3`.
pub fn format_key(mask: Mask) -> String {
    elements(mask)
        .map(|e| (e + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}
