//! Integer primitives: factorization, totient, 2-adic splitting and partitions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Prime factorization `n = ∏ p_i^r_i` with primes strictly increasing.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(p, r)` pairs, primes ascending. Empty for `n = 1`.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Smallest prime divisor `q`, `None` for `n = 1`.
    pub fn smallest_prime(&self) -> Option<u64> {
        self.factors.first().map(|&(p, _)| p)
    }

    /// Largest prime divisor `p`, `None` for `n = 1`.
    pub fn largest_prime(&self) -> Option<u64> {
        self.factors.last().map(|&(p, _)| p)
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, r)| r)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, r)| r == 1)
    }
}

/// Factorizes `n` by trial division. Intended for `n` up to about `10^12`.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut push = |p: u64, rest: &mut u64| {
        let mut r = 0;
        while rest.is_multiple_of(p) {
            *rest /= p;
            r += 1;
        }
        if r > 0 {
            factors.push((p, r));
        }
    };
    push(2, &mut rest);
    push(3, &mut rest);
    // 6k ± 1 wheel
    let mut d = 5u64;
    while d.saturating_mul(d) <= rest {
        push(d, &mut rest);
        push(d + 2, &mut rest);
        d += 6;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    factorize(n).is_ok_and(|f| f.factors == [(n, 1)])
}

/// Euler's totient `∏ (p - 1) p^(r - 1)`; `φ(1) = 1`.
pub fn euler_phi(f: &Factorization) -> u64 {
    f.factors
        .iter()
        .map(|&(p, r)| (p - 1) * p.pow(r - 1))
        .product()
}

/// `n = 2^t · l` with `l` odd.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct TwoAdicSplit {
    pub t: u32,
    pub l: u64,
}

/// Splits off the power of two. Panics on `n = 0`, which has no such split.
pub fn two_adic_split(n: u64) -> TwoAdicSplit {
    assert!(n > 0, "two_adic_split(0)");
    let t = n.trailing_zeros();
    TwoAdicSplit { t, l: n >> t }
}

/// A partition in canonical (non-increasing) form.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts `parts` into non-increasing order. Returns `None` if any part is zero.
    pub fn new(mut parts: Vec<u32>) -> Option<Partition> {
        if parts.contains(&0) {
            return None;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(Partition(parts))
    }

    pub fn single(k: u32) -> Partition {
        assert!(k > 0);
        Partition(vec![k])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    /// Multiset union of the parts.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }
}

impl Ord for Partition {
    /// Reverse-lexicographic: `[4] < [3,1] < [2,2] < [2,1,1] < [1,1,1,1]`.
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        other.0.cmp(&self.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// All partitions of `k` in reverse-lexicographic order. `partitions(0)` is
/// the single empty partition.
pub fn partitions(k: u32) -> Vec<Partition> {
    fn fill(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            fill(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    fill(k, k, &mut Vec::new(), &mut out);
    out
}

/// Number of partitions of `k`, saturating at `u64::MAX`.
pub fn partition_count(k: u32) -> u64 {
    let k = k as usize;
    let mut ways = vec![0u64; k + 1];
    ways[0] = 1;
    for part in 1..=k {
        for total in part..=k {
            ways[total] = ways[total].saturating_add(ways[total - part]);
        }
    }
    ways[k]
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(n: u64) -> Vec<(u64, u32)> {
        factorize(n).unwrap().factors().to_vec()
    }

    #[test]
    fn factorize_examples() {
        assert!(pairs(1).is_empty());
        assert_eq!(pairs(12), [(2, 2), (3, 1)]);
        assert_eq!(pairs(9999), [(3, 2), (11, 1), (101, 1)]);
        assert_eq!(pairs(999_983), [(999_983, 1)]);
        assert_eq!(pairs(1 << 40), [(2, 40)]);
        assert_eq!(factorize(0), Err(Error::Zero));
    }

    #[test]
    fn factorization_accessors() {
        let f = factorize(360).unwrap();
        assert_eq!(f.smallest_prime(), Some(2));
        assert_eq!(f.largest_prime(), Some(5));
        assert_eq!(f.exponent_of(3), 2);
        assert_eq!(f.exponent_of(7), 0);
        assert!(!f.is_squarefree());
        assert_eq!(factorize(1).unwrap().largest_prime(), None);
    }

    #[test]
    fn phi_examples() {
        let phi = |n| euler_phi(&factorize(n).unwrap());
        assert_eq!(phi(1), 1);
        assert_eq!(phi(12), 4);
        // brute-force count of units mod 100
        let units = (1..=100u64).filter(|&k| gcd(k, 100) == 1).count() as u64;
        assert_eq!(units, 40);
        assert_eq!(phi(100), units);
    }

    #[test]
    fn two_adic_examples() {
        assert_eq!(two_adic_split(7), TwoAdicSplit { t: 0, l: 7 });
        assert_eq!(two_adic_split(8), TwoAdicSplit { t: 3, l: 1 });
        assert_eq!(two_adic_split(12), TwoAdicSplit { t: 2, l: 3 });
        assert_eq!(two_adic_split(1), TwoAdicSplit { t: 0, l: 1 });
    }

    #[test]
    fn partition_examples() {
        assert_eq!(partitions(0), [Partition::default()]);
        let four: Vec<Vec<u32>> = partitions(4).into_iter().map(|p| p.0).collect();
        assert_eq!(
            four,
            [vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        assert_eq!(partitions(10).len(), 42);
    }

    #[test]
    fn partitions_are_sorted_and_canonical() {
        let ps = partitions(9);
        assert!(ps.windows(2).all(|w| w[0] < w[1]));
        for p in &ps {
            assert_eq!(p.total(), 9);
            assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn partition_new_rejects_zero() {
        assert_eq!(Partition::new(vec![1, 0]), None);
        assert_eq!(Partition::new(vec![1, 3, 2]).unwrap().parts(), [3, 2, 1]);
        assert_eq!(Partition::single(2).merge(&Partition::single(5)).parts(), [5, 2]);
    }
}
