//! Binomial coefficients, colexicographic ranking and fixed-size subset
//! iteration over bitmasks.
//!
//! Subsets of `{1..n}` are bitmasks with bit `v-1` standing for vertex `v`.
//! For two distinct sets of equal size, numeric order of the masks coincides
//! with colexicographic order of the sets, so iterating masks in increasing
//! numeric order is colex iteration.

/// Hard cap on the number of vertices; a vertex set is one machine word.
pub const MAX_VERTICES: u32 = 64;

const fn binom_table() -> [[u64; 65]; 65] {
    let mut t = [[0u64; 65]; 65];
    let mut n = 0;
    while n <= 64 {
        t[n][0] = 1;
        let mut k = 1;
        while k <= n {
            t[n][k] = t[n - 1][k - 1] + if k < n { t[n - 1][k] } else { 0 };
            k += 1;
        }
        n += 1;
    }
    t
}

static BINOM: [[u64; 65]; 65] = binom_table();

/// C(n, k); zero when k > n. Both arguments must be at most 64.
pub fn binomial(n: u32, k: u32) -> u64 {
    debug_assert!(n <= 64 && k <= 64);
    if k > n {
        0
    } else {
        BINOM[n as usize][k as usize]
    }
}

/// Colexicographic rank of a k-set given as a bitmask: the number of k-sets
/// with a strictly smaller mask.
pub fn colex_rank(mask: u64) -> u64 {
    let mut rank = 0u64;
    let mut rest = mask;
    let mut i = 0u32;
    while rest != 0 {
        let pos = rest.trailing_zeros();
        rank += binomial(pos, i + 1);
        rest &= rest - 1;
        i += 1;
    }
    rank
}

/// Inverse of [`colex_rank`] for sets of size `k`.
pub fn colex_unrank(rank: u64, k: u32) -> u64 {
    let mut mask = 0u64;
    let mut rem = rank;
    let mut p = MAX_VERTICES - 1;
    for i in (1..=k).rev() {
        // largest p with C(p, i) <= rem
        while binomial(p, i) > rem {
            p -= 1;
        }
        mask |= 1u64 << p;
        rem -= binomial(p, i);
    }
    mask
}

/// Iterator over all k-subsets of the low `n` bit positions, as masks in
/// increasing (colex) order.
pub fn subsets(n: u32, k: u32) -> FixedWeightSubsets {
    debug_assert!(n <= MAX_VERTICES);
    if k > n {
        return FixedWeightSubsets { cur: None, last: 0 };
    }
    if k == 0 {
        return FixedWeightSubsets {
            cur: Some(0),
            last: 0,
        };
    }
    let first = (1u64 << k) - 1;
    let last = first << (n - k);
    FixedWeightSubsets {
        cur: Some(first),
        last,
    }
}

pub struct FixedWeightSubsets {
    cur: Option<u64>,
    last: u64,
}

impl Iterator for FixedWeightSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let v = self.cur?;
        self.cur = if v == self.last {
            None
        } else {
            Some(gosper(v))
        };
        Some(v)
    }
}

// Next mask with the same popcount (Gosper's hack). Caller guarantees a
// successor exists, so the intermediate adds cannot overflow.
fn gosper(v: u64) -> u64 {
    let t = v | (v - 1);
    (t + 1) | (((!t & (t + 1)) - 1) >> (v.trailing_zeros() + 1))
}

/// Iterator over all k-subsets of an arbitrary mask, in colex order.
pub fn subsets_of(mask: u64, k: u32) -> SubsetsOfMask {
    let positions: Vec<u32> = bit_positions(mask);
    let inner = subsets(positions.len() as u32, k);
    SubsetsOfMask { positions, inner }
}

pub struct SubsetsOfMask {
    positions: Vec<u32>,
    inner: FixedWeightSubsets,
}

impl Iterator for SubsetsOfMask {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let idx = self.inner.next()?;
        let mut out = 0u64;
        let mut rest = idx;
        while rest != 0 {
            let i = rest.trailing_zeros();
            out |= 1u64 << self.positions[i as usize];
            rest &= rest - 1;
        }
        Some(out)
    }
}

/// Set bit positions of a mask, ascending.
pub fn bit_positions(mask: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros());
        rest &= rest - 1;
    }
    out
}
