use ordsum_core::abelian::{class_count, AbelianGroup};
use ordsum_core::numtheory::{euler_phi, factorize, gcd, partitions, two_adic_split, Partition};
use ordsum_core::ordersum::{bruteforce_distribution, m_cyclic, m_group, order_distribution, psi_group};
use ordsum_core::{enumerate_abelian_groups, Rational};
use proptest::prelude::*;

/// Partition numbers via Euler's pentagonal recurrence, independent of the
/// generator and of the coin-change count used by the library.
fn pentagonal_partition_numbers(max: usize) -> Vec<u64> {
    let mut p = vec![0i64; max + 1];
    p[0] = 1;
    for n in 1..=max {
        let mut acc = 0i64;
        for k in 1i64.. {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[n - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                acc += sign * p[n - g2];
            }
        }
        p[n] = acc;
    }
    p.into_iter().map(|x| x as u64).collect()
}

fn all_groups_up_to(max: u64) -> Vec<AbelianGroup> {
    (1..=max)
        .flat_map(|n| enumerate_abelian_groups(n, 1_000_000).unwrap())
        .collect()
}

#[test]
fn factorization_reconstructs() {
    for n in 1..=100_000u64 {
        let f = factorize(n).unwrap();
        let mut product = 1u64;
        let mut last = 1u64;
        for &(p, r) in f.factors() {
            assert!(p > last && r >= 1);
            assert!((2..p).take_while(|d| d * d <= p).all(|d| p % d != 0));
            product *= p.pow(r);
            last = p;
        }
        assert_eq!(product, n);
    }
}

#[test]
fn phi_is_multiplicative() {
    let phi: Vec<u64> = (0..=1000u64)
        .map(|n| if n == 0 { 0 } else { euler_phi(&factorize(n).unwrap()) })
        .collect();
    for a in 1..=1000u64 {
        for b in 1..=1000u64 {
            if gcd(a, b) == 1 {
                assert_eq!(euler_phi(&factorize(a * b).unwrap()), phi[a as usize] * phi[b as usize]);
            }
        }
    }
}

#[test]
fn partition_counts_match_pentagonal_recurrence() {
    let expected = pentagonal_partition_numbers(25);
    for k in 0..=25u32 {
        assert_eq!(partitions(k).len() as u64, expected[k as usize], "k = {k}");
    }
    assert_eq!(expected[10], 42);
}

#[test]
fn class_counts_and_unique_cyclic() {
    let pn = pentagonal_partition_numbers(12);
    for n in 1..=3000u64 {
        let groups = enumerate_abelian_groups(n, 1_000_000).unwrap();
        let expected: u64 = factorize(n)
            .unwrap()
            .factors()
            .iter()
            .map(|&(_, r)| pn[r as usize])
            .product();
        assert_eq!(groups.len() as u64, expected, "n = {n}");
        assert_eq!(class_count(n).unwrap(), expected);
        assert_eq!(groups.iter().filter(|g| g.is_cyclic()).count(), 1);
        assert!(groups.iter().all(|g| g.order() == n));
    }
}

#[test]
fn lemma_product_inequality_on_small_pairs() {
    let groups = all_groups_up_to(64);
    let ms: Vec<Rational> = groups.iter().map(m_group).collect();
    for (a, ma) in groups.iter().zip(&ms) {
        for (b, mb) in groups.iter().zip(&ms) {
            let prod = a.direct_product(b);
            let m_prod = m_group(&prod);
            let product_of_m = ma * mb;
            if gcd(a.order(), b.order()) == 1 {
                assert_eq!(m_prod, product_of_m, "{a} x {b}");
            } else {
                assert!(m_prod > product_of_m, "{a} x {b}");
            }
            // direct factors only increase m, strictly unless the cofactor is trivial
            assert!(*ma <= m_prod);
            assert_eq!(*ma == m_prod, b.is_trivial(), "{a} x {b}");
        }
    }
}

#[test]
fn distribution_sanity() {
    for g in all_groups_up_to(300) {
        let d = order_distribution(&g);
        assert_eq!(d.total(), g.order());
        assert_eq!(d.count(1), 1);
        assert_eq!(d.exponent(), g.exponent());
        assert!(d.entries().keys().all(|&k| d.exponent().is_multiple_of(k)));
        assert_eq!(d.harmonic_sum(), m_group(&g));
        assert_eq!(d.order_sum(), psi_group(&g));
        if g.order() <= 128 {
            assert_eq!(d, bruteforce_distribution(&g.invariant_factors(), 1 << 20).unwrap());
        }
    }
}

#[test]
fn m_range_and_equality_cases() {
    for g in all_groups_up_to(200) {
        let m = m_group(&g);
        let order = Rational::from(g.order());
        assert!(m >= Rational::one());
        assert!(m <= order);
        assert_eq!(m == Rational::one(), g.is_trivial());
        assert_eq!(m == order, g.is_trivial());
    }
}

#[test]
fn m_cyclic_is_multiplicative_on_coprime_pairs() {
    let mc: Vec<Rational> = (0..=1000u64)
        .map(|n| if n == 0 { Rational::zero() } else { m_cyclic(&factorize(n).unwrap()) })
        .collect();
    for u in 1..=1000u64 {
        for v in u..=1000u64 {
            if gcd(u, v) == 1 {
                let uv = m_cyclic(&factorize(u * v).unwrap());
                assert_eq!(uv, &mc[u as usize] * &mc[v as usize], "{u} {v}");
            }
        }
    }
}

fn arb_group() -> impl Strategy<Value = AbelianGroup> {
    prop::collection::vec(prop::sample::select(vec![2u64, 3, 4, 5, 6, 8, 9, 10, 12, 25, 49]), 0..5)
        .prop_map(|fs| AbelianGroup::from_cyclic_factors(&fs).unwrap())
}

proptest! {
    #[test]
    fn two_adic_split_recombines(n in 1u64..u64::MAX / 2) {
        let s = two_adic_split(n);
        prop_assert_eq!(s.l % 2, 1);
        prop_assert_eq!(s.l << s.t, n);
    }

    #[test]
    fn cyclic_factor_order_is_irrelevant(
        fs in prop::collection::vec(2u64..60, 0..6).prop_shuffle(),
        seed in any::<u64>(),
    ) {
        let mut shuffled = fs.clone();
        let k = shuffled.len().max(1);
        shuffled.rotate_left((seed as usize) % k);
        shuffled.reverse();
        let a = AbelianGroup::from_cyclic_factors(&fs).unwrap();
        let b = AbelianGroup::from_cyclic_factors(&shuffled).unwrap();
        prop_assert_eq!(a.order(), fs.iter().product::<u64>());
        prop_assert_eq!(a, b);
    }

    #[test]
    fn direct_product_monoid_laws(a in arb_group(), b in arb_group(), c in arb_group()) {
        prop_assert_eq!(a.direct_product(&b), b.direct_product(&a));
        prop_assert_eq!(
            a.direct_product(&b).direct_product(&c),
            a.direct_product(&b.direct_product(&c))
        );
        prop_assert_eq!(a.direct_product(&AbelianGroup::trivial()), a.clone());
        prop_assert_eq!(a.direct_product(&b).order(), a.order() * b.order());
    }

    #[test]
    fn signature_round_trips(g in arb_group()) {
        prop_assert_eq!(g.signature().parse::<AbelianGroup>().unwrap(), g.clone());
        let from_invariants = AbelianGroup::from_cyclic_factors(&g.invariant_factors()).unwrap();
        prop_assert_eq!(from_invariants, g);
    }

    #[test]
    fn invariant_factors_divide(g in arb_group()) {
        let fs = g.invariant_factors();
        for w in fs.windows(2) {
            prop_assert_eq!(w[0] % w[1], 0);
        }
    }

    #[test]
    fn partition_new_is_canonical(mut parts in prop::collection::vec(1u32..9, 0..8)) {
        let a = Partition::new(parts.clone()).unwrap();
        parts.reverse();
        prop_assert_eq!(Partition::new(parts).unwrap(), a);
    }
}
