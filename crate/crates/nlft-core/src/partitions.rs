//! Exact combinatorics of ordered alternating partitions.
//!
//! `AQ_N(l, d)` counts strictly decreasing tuples `N-1 >= l_1 > ... > l_d >= 0`
//! with alternating sum `l_1 - l_2 + l_3 - ... = l`; `AP_N(l, d)` counts the
//! weakly decreasing analogue. Both brute-force enumerations, the closed
//! binomial form for `AQ`, the auxiliary shifted count and its recursion, and
//! the `alt`/`odd`/parity functions on multiplicity vectors live here.
//!
//! Counts are exact big integers throughout: `C(N+d-1, d)` outgrows 64 bits
//! quickly and exactness is the whole point of the oracle.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Binomial coefficient with the convention that a negative top argument
/// gives 0 (so `C(-1, 0) = 0`, not 1). Also 0 for `k < 0` or `k > top`.
pub fn binomial(top: i64, k: i64) -> BigUint {
    if top < 0 || k < 0 || k > top {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for j in 0..k {
        num *= BigUint::from((top - j) as u64);
        den *= BigUint::from((j + 1) as u64);
    }
    num / den
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, j| acc * BigUint::from(j))
}

/// Multinomial coefficient `d! / (k_0! k_1! ... )` for `sum(k) = d`.
///
/// # Panics
///
/// Panics when the multiplicities do not sum to `d`.
pub fn multinomial(d: u64, k: &[u64]) -> BigUint {
    assert_eq!(
        k.iter().sum::<u64>(),
        d,
        "multinomial multiplicities must sum to d"
    );
    k.iter()
        .fold(factorial(d), |acc, &kj| acc / factorial(kj))
}

/// Strictly decreasing tuples `(v_1 > v_2 > ... > v_r)` with values in
/// `{min_val..=max_val}` and leading-sign-positive alternating sum equal to
/// `target`. Prunes on the bracket `floor(r/2) + [r odd]*min_val <= sum <=
/// max_val` satisfied by every such tuple.
fn count_strict_desc(max_val: i64, min_val: i64, r: usize, target: i64) -> BigUint {
    if r == 0 {
        return if target == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    if max_val < min_val || (max_val - min_val + 1) < r as i64 {
        return BigUint::zero();
    }
    let lo = (r / 2) as i64 + if r % 2 == 1 { min_val } else { 0 };
    if target < lo || target > max_val {
        return BigUint::zero();
    }
    let mut total = BigUint::zero();
    // First (largest) part v carries sign +; the rest has leading sign -,
    // i.e. its leading-positive alternating sum must equal v - target.
    for v in (min_val + r as i64 - 1)..=max_val {
        total += count_strict_desc(v - 1, min_val, r - 1, v - target);
    }
    total
}

/// Weakly decreasing tuples `(v_1 >= ... >= v_r)` with values in
/// `{0..=max_val}` and leading-sign-positive alternating sum `target`.
fn count_weak_desc(max_val: i64, r: usize, target: i64) -> BigUint {
    if r == 0 {
        return if target == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    if max_val < 0 || target < 0 || target > max_val {
        return BigUint::zero();
    }
    let mut total = BigUint::zero();
    for v in 0..=max_val {
        total += count_weak_desc(v, r - 1, v - target);
    }
    total
}

/// `AQ_N(l, d)`: ordered alternating partitions of `l` into `d` distinct
/// parts taken from `{0..N-1}`, by exhaustive enumeration.
///
/// # Panics
///
/// Panics unless `1 <= d <= n` and `l <= n - 1`.
pub fn aq_brute(n: usize, l: usize, d: usize) -> BigUint {
    assert!(d >= 1 && d <= n, "aq requires 1 <= d <= N");
    assert!(l < n, "aq requires 0 <= l <= N-1");
    count_strict_desc(n as i64 - 1, 0, d, l as i64)
}

/// `AQ_N(l, d)` in closed form:
/// `C(l-1, floor((d-1)/2)) * C(N-l, floor(d/2))` for even `d` and
/// `C(l, floor((d-1)/2)) * C(N-l-1, floor(d/2))` for odd `d`, with binomials
/// of negative top equal to 0.
///
/// # Panics
///
/// Same bounds as [`aq_brute`].
pub fn aq_closed(n: usize, l: usize, d: usize) -> BigUint {
    assert!(d >= 1 && d <= n, "aq requires 1 <= d <= N");
    assert!(l < n, "aq requires 0 <= l <= N-1");
    let (n, l, d) = (n as i64, l as i64, d as i64);
    let half_up = (d - 1) / 2;
    let half_down = d / 2;
    if d % 2 == 0 {
        binomial(l - 1, half_up) * binomial(n - l, half_down)
    } else {
        binomial(l, half_up) * binomial(n - l - 1, half_down)
    }
}

/// The shifted count over parts `N >= l_1 > ... > l_d >= 1`. Satisfies the
/// recursion `hat(N, l, d) = hat(N-1, l, d) + hat(N-1, N-l, d-1)` and the
/// identities `AQ_N(l, d) = hat(N, l, d)` for even `d`,
/// `AQ_N(l, d) = hat(N, l+1, d)` for odd `d`.
///
/// # Panics
///
/// Panics unless `1 <= d <= n`.
pub fn aq_hat(n: usize, l: i64, d: usize) -> BigUint {
    assert!(d >= 1 && d <= n, "aq_hat requires 1 <= d <= N");
    count_strict_desc(n as i64, 1, d, l)
}

/// `AP_N(l, d)`: ordered alternating partitions of `l` into `d` weakly
/// decreasing (non-distinct) parts from `{0..N-1}`, by enumeration.
///
/// # Panics
///
/// Panics unless `d >= 1` and `l <= n - 1`.
pub fn ap_brute(n: usize, l: usize, d: usize) -> BigUint {
    assert!(d >= 1, "ap requires d >= 1");
    assert!(l < n, "ap requires 0 <= l <= N-1");
    count_weak_desc(n as i64 - 1, d, l as i64)
}

/// Alternating sum of the weakly decreasing tuple encoded by the
/// multiplicity vector `k` (entry `k[j]` = number of copies of part `j`),
/// read from the largest index down with globally alternating signs.
///
/// Groups of even multiplicity cancel pairwise and leave the running sign
/// unchanged; a group of odd multiplicity contributes its index once and
/// flips the sign.
pub fn alt(k: &[u64]) -> u64 {
    let mut sum: i64 = 0;
    let mut sign: i64 = 1;
    for (j, &count) in k.iter().enumerate().rev() {
        if count % 2 == 1 {
            sum += sign * j as i64;
            sign = -sign;
        }
    }
    debug_assert!(sum >= 0, "alternating sum of a sorted tuple is nonnegative");
    sum as u64
}

/// Number of odd components of the multiplicity vector.
pub fn odd_count(k: &[u64]) -> usize {
    k.iter().filter(|&&kj| kj % 2 == 1).count()
}

/// `p(k) = k mod 2`.
pub fn parity(k: u64) -> u64 {
    k % 2
}

/// Visits every multiplicity vector with `slots` entries summing to `total`
/// (the L1 sphere of radius `total` in N nonnegative coordinates).
pub fn for_each_composition<F: FnMut(&[u64])>(slots: usize, total: u64, mut f: F) {
    fn rec<F: FnMut(&[u64])>(buf: &mut Vec<u64>, slots: usize, left: u64, f: &mut F) {
        if buf.len() + 1 == slots {
            buf.push(left);
            f(buf);
            buf.pop();
            return;
        }
        for v in 0..=left {
            buf.push(v);
            rec(buf, slots, left - v, f);
            buf.pop();
        }
    }
    assert!(slots >= 1, "composition needs at least one slot");
    let mut buf = Vec::with_capacity(slots);
    rec(&mut buf, slots, total, &mut f);
}

/// `AP_N(l, d)` recomputed through the `alt` function: the number of
/// multiplicity vectors on `N` slots with `|k|_1 = d` and `alt(k) = l`.
///
/// # Panics
///
/// Same bounds as [`ap_brute`].
pub fn ap_via_alt(n: usize, l: usize, d: usize) -> BigUint {
    assert!(d >= 1, "ap requires d >= 1");
    assert!(l < n, "ap requires 0 <= l <= N-1");
    let mut count: u64 = 0;
    for_each_composition(n, d as u64, |k| {
        if alt(k) == l as u64 {
            count += 1;
        }
    });
    BigUint::from(count)
}

/// Which family a [`PartitionTable`] counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionKind {
    /// Strictly decreasing parts (`AQ`).
    Distinct,
    /// Weakly decreasing parts (`AP`).
    NonDistinct,
}

/// Counts for all shifts `l` in `{0..N-1}` at fixed `(N, d)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionTable {
    pub n: usize,
    pub d: usize,
    pub kind: PartitionKind,
    pub counts: Vec<BigUint>,
}

impl PartitionTable {
    /// Builds the table by brute-force enumeration.
    pub fn brute(n: usize, d: usize, kind: PartitionKind) -> Self {
        let counts = (0..n)
            .map(|l| match kind {
                PartitionKind::Distinct => aq_brute(n, l, d),
                PartitionKind::NonDistinct => ap_brute(n, l, d),
            })
            .collect();
        Self { n, d, kind, counts }
    }

    /// Builds the distinct-parts table from the closed binomial form.
    pub fn closed(n: usize, d: usize) -> Self {
        Self {
            n,
            d,
            kind: PartitionKind::Distinct,
            counts: (0..n).map(|l| aq_closed(n, l, d)).collect(),
        }
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// `C(N, d)` for distinct parts, `C(N+d-1, d)` for non-distinct: the
    /// count of all tuples regardless of alternating sum.
    pub fn expected_total(&self) -> BigUint {
        match self.kind {
            PartitionKind::Distinct => binomial(self.n as i64, self.d as i64),
            PartitionKind::NonDistinct => {
                binomial(self.n as i64 + self.d as i64 - 1, self.d as i64)
            }
        }
    }
}
