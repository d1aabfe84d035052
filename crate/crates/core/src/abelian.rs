//! Finite abelian groups in primary (Sylow) decomposition.
//!
//! A group is stored as one partition per prime dividing its order: the
//! partition `λ = (a_1 ≥ a_2 ≥ …)` at prime `p` stands for the Sylow
//! subgroup `Z_{p^a_1} × Z_{p^a_2} × …`. This form is canonical, so
//! structural equality is isomorphism.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::{self, Write};
use core::str::FromStr;

use crate::numtheory::{factorize, is_prime, partition_count, partitions, Partition};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct AbelianGroup {
    components: Vec<(u64, Partition)>,
}

impl AbelianGroup {
    pub fn trivial() -> AbelianGroup {
        AbelianGroup::default()
    }

    /// `Z_n`.
    pub fn cyclic(n: u64) -> Result<AbelianGroup> {
        let f = factorize(n)?;
        Ok(AbelianGroup {
            components: f
                .factors()
                .iter()
                .map(|&(p, r)| (p, Partition::single(r)))
                .collect(),
        })
    }

    /// Builds a group from its Sylow components. Primes must be distinct
    /// primes and partitions non-empty; the order of the input does not matter.
    pub fn from_sylow(mut components: Vec<(u64, Partition)>) -> Result<AbelianGroup> {
        components.sort_by_key(|&(p, _)| p);
        for (i, (p, lambda)) in components.iter().enumerate() {
            if !is_prime(*p) {
                return Err(Error::Parse { pos: i, msg: "component key is not prime" });
            }
            if lambda.is_empty() {
                return Err(Error::Parse { pos: i, msg: "empty partition" });
            }
            if i > 0 && components[i - 1].0 == *p {
                return Err(Error::Parse { pos: i, msg: "repeated prime" });
            }
        }
        let g = AbelianGroup { components };
        g.checked_order().ok_or(Error::Overflow)?;
        Ok(g)
    }

    /// Canonical form of `Z_{d_1} × … × Z_{d_k}`. Factors equal to 1 are
    /// ignored; a zero factor is rejected.
    pub fn from_cyclic_factors(orders: &[u64]) -> Result<AbelianGroup> {
        let mut g = AbelianGroup::trivial();
        for &d in orders {
            g = g.direct_product(&AbelianGroup::cyclic(d)?);
        }
        g.checked_order().ok_or(Error::Overflow)?;
        Ok(g)
    }

    /// `(p, λ_p)` pairs, primes ascending.
    pub fn components(&self) -> &[(u64, Partition)] {
        &self.components
    }

    pub fn sylow(&self, p: u64) -> Option<&Partition> {
        self.components.iter().find(|(q, _)| *q == p).map(|(_, l)| l)
    }

    pub fn is_trivial(&self) -> bool {
        self.components.is_empty()
    }

    /// Cyclic iff every Sylow subgroup is cyclic. The trivial group counts.
    pub fn is_cyclic(&self) -> bool {
        self.components.iter().all(|(_, l)| l.len() == 1)
    }

    /// Panics if the order overflows `u64`; constructors reject such groups.
    pub fn order(&self) -> u64 {
        self.checked_order().expect("group order overflows u64")
    }

    fn checked_order(&self) -> Option<u64> {
        self.components.iter().try_fold(1u64, |acc, (p, l)| {
            acc.checked_mul(p.checked_pow(l.total())?)
        })
    }

    /// Largest element order.
    pub fn exponent(&self) -> u64 {
        self.components
            .iter()
            .map(|(p, l)| p.pow(l.largest()))
            .product()
    }

    /// `G × H` in canonical form.
    pub fn direct_product(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut components = Vec::with_capacity(self.components.len() + other.components.len());
        let (mut a, mut b) = (self.components.iter().peekable(), other.components.iter().peekable());
        loop {
            let next = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => a.next().cloned(),
                (None, Some(_)) => b.next().cloned(),
                (Some((p, lp)), Some((q, lq))) => match p.cmp(q) {
                    Ordering::Less => a.next().cloned(),
                    Ordering::Greater => b.next().cloned(),
                    Ordering::Equal => {
                        let merged = (*p, lp.merge(lq));
                        a.next();
                        b.next();
                        Some(merged)
                    }
                },
            };
            components.extend(next);
        }
        AbelianGroup { components }
    }

    /// Invariant factors, largest first, each a multiple of the next.
    /// The trivial group has none.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let rank = self.components.iter().map(|(_, l)| l.len()).max().unwrap_or(0);
        (0..rank)
            .map(|i| {
                self.components
                    .iter()
                    .filter_map(|(p, l)| l.parts().get(i).map(|&a| p.pow(a)))
                    .product()
            })
            .collect()
    }

    /// Textual key such as `2:[2,1];3:[1]`. The trivial group is `1`.
    pub fn signature(&self) -> String {
        if self.is_trivial() {
            return String::from("1");
        }
        let mut s = String::new();
        for (i, (p, l)) in self.components.iter().enumerate() {
            if i > 0 {
                s.push(';');
            }
            let _ = write!(s, "{p}:{l}");
        }
        s
    }

    /// Display form such as `Z12 x Z2`.
    pub fn invariant_form(&self) -> String {
        let factors = self.invariant_factors();
        if factors.is_empty() {
            return String::from("Z1");
        }
        let mut s = String::new();
        for (i, d) in factors.iter().enumerate() {
            if i > 0 {
                s.push_str(" x ");
            }
            let _ = write!(s, "Z{d}");
        }
        s
    }
}

impl Ord for AbelianGroup {
    /// Enumeration order: component by component, comparing the prime then
    /// the partition in reverse-lexicographic order. Among groups of the
    /// same order the cyclic group is least.
    fn cmp(&self, other: &Self) -> Ordering {
        self.components.cmp(&other.components)
    }
}

impl PartialOrd for AbelianGroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.signature())
    }
}

impl FromStr for AbelianGroup {
    type Err = Error;

    /// Parses a signature produced by [`AbelianGroup::signature`].
    fn from_str(s: &str) -> Result<AbelianGroup> {
        let s = s.trim();
        if s == "1" {
            return Ok(AbelianGroup::trivial());
        }
        let mut components = Vec::new();
        let mut offset = 0;
        for chunk in s.split(';') {
            let err = |msg| Error::Parse { pos: offset, msg };
            let (p, rest) = chunk.split_once(':').ok_or(err("expected `p:[...]`"))?;
            let p: u64 = p.trim().parse().map_err(|_| err("bad prime"))?;
            let inner = rest
                .trim()
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or(err("expected bracketed partition"))?;
            let parts = inner
                .split(',')
                .map(|x| x.trim().parse::<u32>())
                .collect::<core::result::Result<Vec<_>, _>>()
                .map_err(|_| err("bad partition part"))?;
            let lambda = Partition::new(parts).ok_or(err("zero partition part"))?;
            components.push((p, lambda));
            offset += chunk.len() + 1;
        }
        AbelianGroup::from_sylow(components)
    }
}

/// Number of abelian groups of order `n` up to isomorphism, `∏ p(r_i)`.
pub fn class_count(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.factors()
        .iter()
        .fold(1u64, |acc, &(_, r)| acc.saturating_mul(partition_count(r))))
}

/// One representative per isomorphism class of abelian groups of order `n`,
/// in canonical order (the cyclic group first).
pub fn enumerate_abelian_groups(n: u64, class_cap: u64) -> Result<Vec<AbelianGroup>> {
    let f = factorize(n)?;
    let classes = class_count(n)?;
    if classes > class_cap {
        return Err(Error::ClassCapExceeded { n, classes, cap: class_cap });
    }
    let per_prime: Vec<(u64, Vec<Partition>)> = f
        .factors()
        .iter()
        .map(|&(p, r)| (p, partitions(r)))
        .collect();
    let mut out = Vec::with_capacity(classes as usize);
    // mixed-radix counter, last prime varying fastest
    let mut idx = alloc::vec![0usize; per_prime.len()];
    loop {
        out.push(AbelianGroup {
            components: per_prime
                .iter()
                .zip(&idx)
                .map(|((p, ps), &i)| (*p, ps[i].clone()))
                .collect(),
        });
        let mut pos = per_prime.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < per_prime[pos].1.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn g(sig: &str) -> AbelianGroup {
        sig.parse().unwrap()
    }

    #[test]
    fn cyclic_examples() {
        assert_eq!(AbelianGroup::cyclic(1).unwrap(), AbelianGroup::trivial());
        assert_eq!(AbelianGroup::cyclic(12).unwrap().signature(), "2:[2];3:[1]");
        assert_eq!(AbelianGroup::cyclic(360).unwrap().signature(), "2:[3];3:[2];5:[1]");
        assert_eq!(AbelianGroup::cyclic(0), Err(Error::Zero));
    }

    #[test]
    fn from_cyclic_factors_examples() {
        let sig = |fs: &[u64]| AbelianGroup::from_cyclic_factors(fs).unwrap().signature();
        assert_eq!(sig(&[6, 2]), "2:[1,1];3:[1]");
        assert_eq!(sig(&[4, 4]), "2:[2,2]");
        assert_eq!(sig(&[12, 18]), "2:[2,1];3:[2,1]");
        assert_eq!(sig(&[]), "1");
        assert_eq!(AbelianGroup::from_cyclic_factors(&[12, 18]).unwrap().order(), 216);
    }

    #[test]
    fn is_cyclic_examples() {
        assert!(AbelianGroup::cyclic(12).unwrap().is_cyclic());
        assert!(!g("2:[1,1]").is_cyclic());
        assert!(AbelianGroup::trivial().is_cyclic());
    }

    #[test]
    fn direct_product_examples() {
        let a = g("2:[2];3:[1]");
        assert_eq!(a.direct_product(&AbelianGroup::trivial()), a);
        assert_eq!(g("2:[1]").direct_product(&g("2:[1]")), g("2:[1,1]"));
        assert_eq!(a.direct_product(&g("2:[1];5:[1]")), g("2:[2,1];3:[1];5:[1]"));
    }

    #[test]
    fn order_examples() {
        assert_eq!(AbelianGroup::trivial().order(), 1);
        assert_eq!(g("2:[2,1]").order(), 8);
        assert_eq!(g("2:[1,1];3:[1]").order(), 12);
    }

    #[test]
    fn invariant_form() {
        assert_eq!(g("2:[2,1];3:[1]").invariant_factors(), [12, 2]);
        assert_eq!(g("2:[1,1];3:[1]").invariant_form(), "Z6 x Z2");
        assert_eq!(g("2:[2,1];3:[2,1]").invariant_form(), "Z36 x Z6");
        assert_eq!(AbelianGroup::trivial().invariant_form(), "Z1");
    }

    #[test]
    fn signature_parse_errors() {
        assert!("4:[1]".parse::<AbelianGroup>().is_err());
        assert!("2:[1];2:[1]".parse::<AbelianGroup>().is_err());
        assert!("2:[0]".parse::<AbelianGroup>().is_err());
        assert!("2:1".parse::<AbelianGroup>().is_err());
        assert!("2:[2,1];3:[x]".parse::<AbelianGroup>().is_err());
        // component order in the input does not matter
        assert_eq!(g("3:[1];2:[1,1]"), g("2:[1,1];3:[1]"));
    }

    #[test]
    fn enumerate_examples() {
        let sigs = |n| -> Vec<String> {
            enumerate_abelian_groups(n, 1_000_000)
                .unwrap()
                .iter()
                .map(AbelianGroup::signature)
                .collect()
        };
        assert_eq!(sigs(12), ["2:[2];3:[1]", "2:[1,1];3:[1]"]);
        assert_eq!(sigs(8), ["2:[3]", "2:[2,1]", "2:[1,1,1]"]);
        assert_eq!(sigs(144).len(), 10);
        assert_eq!(sigs(1), ["1"]);
    }

    #[test]
    fn enumeration_is_sorted() {
        let groups = enumerate_abelian_groups(7200, 1_000_000).unwrap();
        assert!(groups.windows(2).all(|w| w[0] < w[1]));
        assert!(groups[0].is_cyclic());
    }

    #[test]
    fn enumeration_cap() {
        // 2^10 · 3^10 has 42 · 42 classes
        let n = 1024 * 59049;
        assert_eq!(class_count(n).unwrap(), 1764);
        assert_eq!(
            enumerate_abelian_groups(n, 1000),
            Err(Error::ClassCapExceeded { n, classes: 1764, cap: 1000 })
        );
        assert_eq!(enumerate_abelian_groups(n, 1764).unwrap().len(), 1764);
    }

    #[test]
    fn from_sylow_rejects_overflow() {
        let huge = vec![(2, Partition::single(70))];
        assert_eq!(AbelianGroup::from_sylow(huge), Err(Error::Overflow));
    }
}
