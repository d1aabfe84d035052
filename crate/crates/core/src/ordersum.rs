//! Element-order statistics: `m(G)`, `ψ(G)` and the full order distribution.
//!
//! Everything here factors through the Sylow components. In
//! `Z_{p^a_1} × … × Z_{p^a_k}` the elements killed by `p^j` number
//! `p^(Σ min(a_i, j))`, so the count of elements of order exactly `p^j` is a
//! difference of two such powers. Orders coprime across primes multiply.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::abelian::AbelianGroup;
use crate::numtheory::{gcd, lcm, Factorization, Partition};
use crate::{Error, Rational, Result};

/// Multiset of element orders: order `d` ↦ number of elements of order `d`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderDistribution {
    entries: BTreeMap<u64, u64>,
}

impl OrderDistribution {
    pub fn entries(&self) -> &BTreeMap<u64, u64> {
        &self.entries
    }

    pub fn count(&self, order: u64) -> u64 {
        self.entries.get(&order).copied().unwrap_or(0)
    }

    /// Sum of the counts, i.e. the group order.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Largest element order.
    pub fn exponent(&self) -> u64 {
        self.entries.keys().next_back().copied().unwrap_or(1)
    }

    /// `Σ count(d) / d`.
    pub fn harmonic_sum(&self) -> Rational {
        self.entries
            .iter()
            .map(|(&d, &c)| Rational::new(c, d))
            .sum()
    }

    /// `Σ d · count(d)`.
    pub fn order_sum(&self) -> u128 {
        self.entries
            .iter()
            .map(|(&d, &c)| d as u128 * c as u128)
            .sum()
    }
}

impl core::fmt::Display for OrderDistribution {
    /// `{1:1,2:3,4:4}`
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("{")?;
        for (i, (d, c)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}:{c}")?;
        }
        f.write_str("}")
    }
}

/// Counts of elements of order `p^j`, `j = 0..=max part`, in the p-group `λ`.
fn sylow_counts(p: u64, lambda: &Partition) -> Vec<u64> {
    let killed_by = |j: u32| -> u64 {
        let e: u32 = lambda.parts().iter().map(|&a| a.min(j)).sum();
        p.pow(e)
    };
    let mut counts = Vec::with_capacity(lambda.largest() as usize + 1);
    counts.push(1);
    for j in 1..=lambda.largest() {
        counts.push(killed_by(j) - killed_by(j - 1));
    }
    counts
}

/// `m` of the p-group `λ`: `Σ_j count(p^j) / p^j`.
fn sylow_m(p: u64, lambda: &Partition) -> Rational {
    let counts = sylow_counts(p, lambda);
    // common denominator p^max
    let top = counts.len() as u32 - 1;
    let numer: u128 = counts
        .iter()
        .enumerate()
        .map(|(j, &c)| c as u128 * (p as u128).pow(top - j as u32))
        .sum();
    Rational::new(numer, (p as u128).pow(top))
}

pub fn order_distribution(group: &AbelianGroup) -> OrderDistribution {
    let mut entries = BTreeMap::from([(1u64, 1u64)]);
    for (p, lambda) in group.components() {
        let counts = sylow_counts(*p, lambda);
        let mut next = BTreeMap::new();
        for (&d, &c) in &entries {
            let mut pj = 1u64;
            for &cj in &counts {
                next.insert(d * pj, c * cj);
                pj *= p;
            }
        }
        entries = next;
    }
    OrderDistribution { entries }
}

/// `m(Z_n) = ∏ (1 + r_i (p_i - 1) / p_i)`.
pub fn m_cyclic(f: &Factorization) -> Rational {
    f.factors()
        .iter()
        .map(|&(p, r)| Rational::new(p + r as u64 * (p - 1), p))
        .product()
}

/// `m(G) = Σ_{a ∈ G} 1/o(a)`, computed as the product over Sylow
/// components. Debug builds cross-check against the order distribution.
pub fn m_group(group: &AbelianGroup) -> Rational {
    let m: Rational = group
        .components()
        .iter()
        .map(|(p, lambda)| sylow_m(*p, lambda))
        .product();
    debug_assert_eq!(m, order_distribution(group).harmonic_sum());
    m
}

/// `ψ(G) = Σ_{a ∈ G} o(a)`.
pub fn psi_group(group: &AbelianGroup) -> u128 {
    order_distribution(group).order_sum()
}

/// Brute-force `m(Z_{d_1} × … × Z_{d_k})`: walks every tuple and takes the
/// order of each as the lcm of its coordinate orders `d_i / gcd(v_i, d_i)`.
pub fn m_bruteforce_factors(factors: &[u64], element_cap: u64) -> Result<Rational> {
    Ok(bruteforce_distribution(factors, element_cap)?.harmonic_sum())
}

/// Brute-force order distribution of `Z_{d_1} × … × Z_{d_k}`.
pub fn bruteforce_distribution(factors: &[u64], element_cap: u64) -> Result<OrderDistribution> {
    if factors.contains(&0) {
        return Err(Error::Zero);
    }
    let order = factors
        .iter()
        .try_fold(1u64, |acc, &d| acc.checked_mul(d))
        .ok_or(Error::Overflow)?;
    if order > element_cap {
        return Err(Error::ElementCapExceeded { order, cap: element_cap });
    }
    let mut entries = BTreeMap::new();
    let mut tuple = alloc::vec![0u64; factors.len()];
    loop {
        let o = tuple
            .iter()
            .zip(factors)
            .fold(1, |acc, (&v, &d)| lcm(acc, d / gcd(v, d)));
        *entries.entry(o).or_insert(0) += 1;
        let mut i = 0;
        loop {
            if i == factors.len() {
                return Ok(OrderDistribution { entries });
            }
            tuple[i] += 1;
            if tuple[i] < factors[i] {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
    }
}

/// Brute-force oracle for [`m_group`], walking the invariant-factor form.
pub fn m_bruteforce(group: &AbelianGroup, element_cap: u64) -> Result<Rational> {
    m_bruteforce_factors(&group.invariant_factors(), element_cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::factorize;

    fn g(sig: &str) -> AbelianGroup {
        sig.parse().unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn dist(group: &AbelianGroup) -> Vec<(u64, u64)> {
        order_distribution(group).entries().iter().map(|(&a, &b)| (a, b)).collect()
    }

    #[test]
    fn m_cyclic_examples() {
        let mc = |n| m_cyclic(&factorize(n).unwrap());
        assert_eq!(mc(1), Rational::one());
        // 1 + 2(q-1)/q at q = 2, 3, 5
        for q in [2i64, 3, 5] {
            assert_eq!(mc((q * q) as u64), Rational::one() + r(2 * (q - 1), q));
        }
        assert_eq!(mc(4), Rational::from(2));
        // Z_12: 1 + 1/2 + 2/3 + 2/4 + 2/6 + 4/12
        let by_hand = [r(1, 1), r(1, 2), r(2, 3), r(2, 4), r(2, 6), r(4, 12)];
        assert_eq!(mc(12), by_hand.into_iter().sum());
        assert_eq!(mc(12), r(10, 3));
    }

    #[test]
    fn distribution_examples() {
        assert_eq!(dist(&AbelianGroup::trivial()), [(1, 1)]);
        assert_eq!(dist(&g("2:[2,1]")), [(1, 1), (2, 3), (4, 4)]);
        assert_eq!(dist(&g("2:[1];3:[1]")), [(1, 1), (2, 1), (3, 2), (6, 2)]);
        assert_eq!(dist(&g("2:[1,1];3:[1]")), [(1, 1), (2, 3), (3, 2), (6, 6)]);
    }

    #[test]
    fn distribution_matches_bruteforce_small() {
        for sig in ["2:[2,1]", "2:[1];3:[1]", "2:[3,1,1];3:[2]", "5:[1,1];7:[1]"] {
            let group = g(sig);
            let brute = bruteforce_distribution(&group.invariant_factors(), 100_000).unwrap();
            assert_eq!(order_distribution(&group), brute, "{sig}");
        }
    }

    #[test]
    fn m_group_examples() {
        // 1 + (q² - 1)/q
        for q in [2i64, 3, 7] {
            let pp = AbelianGroup::from_cyclic_factors(&[q as u64, q as u64]).unwrap();
            assert_eq!(m_group(&pp), Rational::one() + r(q * q - 1, q));
        }
        assert_eq!(m_group(&g("2:[1,1]")), r(5, 2));
        assert_eq!(m_group(&g("2:[2,1]")), r(7, 2));
        assert_eq!(m_group(&g("2:[1,1];3:[1]")), r(25, 6));
        for n in 1..=300 {
            let f = factorize(n).unwrap();
            assert_eq!(m_group(&AbelianGroup::cyclic(n).unwrap()), m_cyclic(&f));
        }
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi_group(&AbelianGroup::trivial()), 1);
        assert_eq!(psi_group(&AbelianGroup::cyclic(4).unwrap()), 11);
        assert_eq!(psi_group(&g("2:[1,1]")), 7);
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(m_bruteforce(&AbelianGroup::trivial(), 10).unwrap(), Rational::one());
        assert_eq!(m_bruteforce_factors(&[2, 2], 10).unwrap(), r(5, 2));
        assert_eq!(m_bruteforce_factors(&[4, 2], 10).unwrap(), r(7, 2));
        assert_eq!(
            m_bruteforce_factors(&[4, 4], 10),
            Err(Error::ElementCapExceeded { order: 16, cap: 10 })
        );
        assert_eq!(m_bruteforce_factors(&[0], 10), Err(Error::Zero));
    }

    #[test]
    fn large_orders_are_closed_form() {
        // order 2^20 · 3^12 · 5^2, far beyond any brute force
        let group = AbelianGroup::from_cyclic_factors(&[1 << 10, 1 << 10, 531_441, 25]).unwrap();
        let d = order_distribution(&group);
        assert_eq!(d.total(), group.order());
        assert_eq!(d.harmonic_sum(), m_group(&group));
        assert_eq!(d.count(1), 1);
    }
}
