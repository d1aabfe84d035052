//! Per-`n` checks of the inequalities relating `m(G)` to `m(Z_n)`.
//!
//! Every check runs in report mode: it returns a [`BoundReport`] carrying
//! both operands and the verdict instead of asserting. Several of the
//! statements checked here are known to fail for some small `n`; the
//! reports say exactly where.
//!
//! Operands per check, with `n = 2^t · l`, `q`/`p` the smallest/largest
//! prime of `n`, and `G` ranging over the non-cyclic abelian groups of
//! order `n`:
//!
//! | check       | lhs                       | rhs                      | holds iff |
//! |-------------|---------------------------|--------------------------|-----------|
//! | INITIAL     | min m(G)                  | m(Z_n)                   | lhs > rhs |
//! | MAIN        | min m(G)/m(Z_n)           | (3+t)/(2+t)              | lhs ≥ rhs |
//! | SHARPNESS   | m(Z_{2l} × Z_{2^(t-1)})   | (3+t)/2 · m(Z_l)         | lhs = rhs |
//! | SQRT        | a²(3+t)²                  | b²(2+t)²n, m(Z_n) = a/b  | lhs < rhs |
//! | PHI_RATIO   | m(Z_n)                    | φ(n)/n                   | lhs > rhs |
//! | PHI_FLOOR   | φ(n)/n                    | (q-1)/p                  | lhs ≥ rhs |
//! | M_FLOOR     | m(Z_n)                    | (q-1)/p                  | lhs ≥ rhs |
//! | INV_P_FLOOR | m(Z_n)                    | 1/p                      | lhs > rhs |
//! | ODD_LOWER   | m(Z_n)                    | max m(G)/(p-1)           | lhs > rhs |
//! | COROLLARY   | min m(Z_n)/m(G)           | max m(Z_n)/m(G)          | 1/(p-1) < lhs and rhs ≤ (2+t)/(3+t) |
//!
//! A check over `G` with no non-cyclic class of order `n` is vacuous.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::abelian::{enumerate_abelian_groups, AbelianGroup};
use crate::numtheory::{euler_phi, factorize, two_adic_split};
use crate::ordersum::{m_cyclic, m_group};
use crate::{Error, Limits, Rational, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CheckId {
    Initial,
    Main,
    Sharpness,
    Sqrt,
    PhiRatio,
    PhiFloor,
    MFloor,
    InvPFloor,
    OddLower,
    Corollary,
}

impl CheckId {
    pub const ALL: [CheckId; 10] = [
        CheckId::Initial,
        CheckId::Main,
        CheckId::Sharpness,
        CheckId::Sqrt,
        CheckId::PhiRatio,
        CheckId::PhiFloor,
        CheckId::MFloor,
        CheckId::InvPFloor,
        CheckId::OddLower,
        CheckId::Corollary,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::Initial => "INITIAL",
            CheckId::Main => "MAIN",
            CheckId::Sharpness => "SHARPNESS",
            CheckId::Sqrt => "SQRT",
            CheckId::PhiRatio => "PHI_RATIO",
            CheckId::PhiFloor => "PHI_FLOOR",
            CheckId::MFloor => "M_FLOOR",
            CheckId::InvPFloor => "INV_P_FLOOR",
            CheckId::OddLower => "ODD_LOWER",
            CheckId::Corollary => "COROLLARY",
        }
    }

    /// Whether `n` is in the domain of this check.
    pub fn applies_to(self, n: u64) -> bool {
        match self {
            CheckId::Initial | CheckId::Sqrt => n >= 1,
            CheckId::Sharpness => n > 0 && n.trailing_zeros() >= 2,
            CheckId::OddLower => n >= 3 && n % 2 == 1,
            _ => n >= 2,
        }
    }

    /// Smallest `n` the check applies to.
    pub fn min_n(self) -> u64 {
        match self {
            CheckId::Initial | CheckId::Sqrt => 1,
            CheckId::Sharpness => 4,
            CheckId::OddLower => 3,
            _ => 2,
        }
    }

    /// Whether the check quantifies over all abelian groups of order `n`.
    pub fn needs_enumeration(self) -> bool {
        matches!(
            self,
            CheckId::Initial | CheckId::Main | CheckId::OddLower | CheckId::Corollary
        )
    }

    /// Recomputes the verdict from stored operands; `n` supplies `t` and `p`.
    pub fn holds_for(self, n: u64, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            CheckId::Initial
            | CheckId::PhiRatio
            | CheckId::InvPFloor
            | CheckId::OddLower => lhs > rhs,
            CheckId::Main | CheckId::PhiFloor | CheckId::MFloor => lhs >= rhs,
            CheckId::Sharpness => lhs == rhs,
            CheckId::Sqrt => lhs < rhs,
            CheckId::Corollary => {
                let t = two_adic_split(n).t as u64;
                let p = factorize(n)
                    .ok()
                    .and_then(|f| f.largest_prime())
                    .expect("COROLLARY needs n >= 2");
                &Rational::new(1, p - 1) < lhs && rhs <= &Rational::new(2 + t, 3 + t)
            }
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = UnknownCheck;

    /// Case-insensitive; `-` may stand in for `_`.
    fn from_str(s: &str) -> core::result::Result<CheckId, UnknownCheck> {
        let wanted = s.trim().to_ascii_uppercase().replace('-', "_");
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str() == wanted)
            .ok_or_else(|| UnknownCheck(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownCheck(pub String);

impl fmt::Display for UnknownCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown check id `{}`", self.0)
    }
}

impl core::error::Error for UnknownCheck {}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Verdict {
    Holds,
    Fails,
    /// No non-cyclic abelian group of order `n` exists.
    Vacuous,
    /// The check could not be run, e.g. a cap was hit.
    Error(String),
}

/// Outcome of one check at one `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundReport {
    pub n: u64,
    pub t: u32,
    pub l: u64,
    pub check: CheckId,
    pub lhs: Option<Rational>,
    pub rhs: Option<Rational>,
    pub verdict: Verdict,
    pub tight: bool,
    /// Signature of the extremal group, when the check has one.
    pub witness: Option<String>,
    /// `|lhs - rhs|` when both are present.
    pub gap: Option<Rational>,
}

impl BoundReport {
    fn blank(n: u64, check: CheckId) -> BoundReport {
        let split = two_adic_split(n);
        BoundReport {
            n,
            t: split.t,
            l: split.l,
            check,
            lhs: None,
            rhs: None,
            verdict: Verdict::Vacuous,
            tight: false,
            witness: None,
            gap: None,
        }
    }

    fn compared(
        n: u64,
        check: CheckId,
        lhs: Rational,
        rhs: Rational,
        witness: Option<&AbelianGroup>,
    ) -> BoundReport {
        let holds = check.holds_for(n, &lhs, &rhs);
        let tight = match check {
            CheckId::Corollary => rhs == upper_ratio(two_adic_split(n).t),
            _ => lhs == rhs,
        };
        BoundReport {
            verdict: if holds { Verdict::Holds } else { Verdict::Fails },
            tight,
            witness: witness.map(AbelianGroup::signature),
            gap: Some(lhs.distance(&rhs)),
            lhs: Some(lhs),
            rhs: Some(rhs),
            ..BoundReport::blank(n, check)
        }
    }

    fn vacuous(n: u64, check: CheckId, rhs: Option<Rational>, witness: Option<&AbelianGroup>) -> BoundReport {
        BoundReport {
            rhs,
            witness: witness.map(AbelianGroup::signature),
            ..BoundReport::blank(n, check)
        }
    }

    /// Report standing in for a check that could not be run.
    pub fn error(n: u64, check: CheckId, message: impl Into<String>) -> BoundReport {
        BoundReport {
            verdict: Verdict::Error(message.into()),
            ..BoundReport::blank(n, check)
        }
    }

    /// True for both real and vacuous holds.
    pub fn holds(&self) -> bool {
        matches!(self.verdict, Verdict::Holds | Verdict::Vacuous)
    }

    /// Verdict recomputed from the stored operands alone, if both are present.
    pub fn recheck(&self) -> Option<bool> {
        Some(self.check.holds_for(self.n, self.lhs.as_ref()?, self.rhs.as_ref()?))
    }
}

/// `(3+t)/(2+t)`
pub fn main_bound(t: u32) -> Rational {
    Rational::new(3 + t as u64, 2 + t as u64)
}

/// `(2+t)/(3+t)`
fn upper_ratio(t: u32) -> Rational {
    Rational::new(2 + t as u64, 3 + t as u64)
}

/// All abelian groups of order `n` with their `m` values, split into the
/// cyclic group and the rest. Shared by the enumeration-based checks.
#[derive(Clone, Debug)]
pub struct OrderClasses {
    pub n: u64,
    pub cyclic: AbelianGroup,
    pub m_cyclic: Rational,
    /// Non-cyclic classes in canonical order.
    pub non_cyclic: Vec<(AbelianGroup, Rational)>,
}

impl OrderClasses {
    pub fn new(n: u64, limits: &Limits) -> Result<OrderClasses> {
        let mut groups = enumerate_abelian_groups(n, limits.class_cap)?.into_iter();
        let cyclic = groups.next().expect("enumeration starts with Z_n");
        let m_cyclic = m_cyclic(&factorize(n)?);
        debug_assert_eq!(m_group(&cyclic), m_cyclic);
        let non_cyclic = groups
            .map(|g| {
                let m = m_group(&g);
                (g, m)
            })
            .collect();
        Ok(OrderClasses { n, cyclic, m_cyclic, non_cyclic })
    }

    /// First class minimizing `key` (ties go to the canonically smaller group).
    fn argmin_by<K: Ord>(&self, key: impl Fn(&Rational) -> K) -> Option<&(AbelianGroup, Rational)> {
        let mut best: Option<(&(AbelianGroup, Rational), K)> = None;
        for entry in &self.non_cyclic {
            let k = key(&entry.1);
            if best.as_ref().is_none_or(|(_, b)| k < *b) {
                best = Some((entry, k));
            }
        }
        best.map(|(e, _)| e)
    }

    fn min_m(&self) -> Option<&(AbelianGroup, Rational)> {
        self.argmin_by(|m| m.clone())
    }

    fn max_m(&self) -> Option<&(AbelianGroup, Rational)> {
        self.argmin_by(|m| core::cmp::Reverse(m.clone()))
    }
}

fn ensure(check: CheckId, n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::Zero)
    } else if check.applies_to(n) {
        Ok(())
    } else {
        Err(Error::NotApplicable { check, n })
    }
}

fn largest_prime(n: u64) -> Result<u64> {
    factorize(n)?.largest_prime().ok_or(Error::NotApplicable { check: CheckId::Corollary, n })
}

/// `m(G) ≥ m(Z_n)` with equality only for the cyclic group.
pub fn check_initial(n: u64, limits: &Limits) -> Result<BoundReport> {
    ensure(CheckId::Initial, n)?;
    Ok(initial_from(&OrderClasses::new(n, limits)?))
}

fn initial_from(c: &OrderClasses) -> BoundReport {
    let check = CheckId::Initial;
    match c.min_m() {
        None => BoundReport::vacuous(c.n, check, Some(c.m_cyclic.clone()), Some(&c.cyclic)),
        Some((g, m)) => {
            let argmin = if *m > c.m_cyclic { &c.cyclic } else { g };
            BoundReport::compared(c.n, check, m.clone(), c.m_cyclic.clone(), Some(argmin))
        }
    }
}

/// `m(G) ≥ (3+t)/(2+t) · m(Z_n)` for every non-cyclic `G`.
pub fn check_main(n: u64, limits: &Limits) -> Result<BoundReport> {
    ensure(CheckId::Main, n)?;
    Ok(main_from(&OrderClasses::new(n, limits)?))
}

fn main_from(c: &OrderClasses) -> BoundReport {
    let check = CheckId::Main;
    let bound = main_bound(two_adic_split(c.n).t);
    match c.min_m() {
        None => BoundReport::vacuous(c.n, check, Some(bound), None),
        Some((g, m)) => BoundReport::compared(c.n, check, m / &c.m_cyclic, bound, Some(g)),
    }
}

/// `(m(Z_n), (2+t)/2 · m(Z_l))`; the two are always equal.
pub fn cyclic_two_adic_identity(n: u64) -> Result<(Rational, Rational)> {
    let split = two_adic_split(n);
    let lhs = m_cyclic(&factorize(n)?);
    let rhs = Rational::new(2 + split.t as u64, 2) * m_cyclic(&factorize(split.l)?);
    Ok((lhs, rhs))
}

/// `m(Z_{2l} × Z_{2^(t-1)}) = (3+t)/2 · m(Z_l)`, for `t ≥ 2`.
pub fn check_sharpness(n: u64) -> Result<BoundReport> {
    let check = CheckId::Sharpness;
    ensure(check, n)?;
    let (mz, mz_split) = cyclic_two_adic_identity(n)?;
    if mz != mz_split {
        return Err(Error::IdentityViolated { check, n });
    }
    let split = two_adic_split(n);
    let group = AbelianGroup::from_cyclic_factors(&[2 * split.l, 1 << (split.t - 1)])?;
    let lhs = m_group(&group);
    let rhs = Rational::new(3 + split.t as u64, 2) * m_cyclic(&factorize(split.l)?);
    Ok(BoundReport::compared(n, check, lhs, rhs, Some(&group)))
}

/// `m(Z_n) < (2+t)/(3+t) · √n`, compared exactly after squaring.
pub fn check_sqrt(n: u64) -> Result<BoundReport> {
    let check = CheckId::Sqrt;
    ensure(check, n)?;
    let t = BigInt::from(two_adic_split(n).t);
    let m = m_cyclic(&factorize(n)?);
    let (a, b) = (m.numer(), m.denom());
    let three_t = &t + 3u32;
    let two_t = &t + 2u32;
    let lhs = a * a * &three_t * &three_t;
    let rhs = b * b * &two_t * &two_t * BigInt::from(n);
    Ok(BoundReport::compared(
        n,
        check,
        Rational::from_integer(lhs),
        Rational::from_integer(rhs),
        None,
    ))
}

/// The four closed-form bounds PHI_RATIO, PHI_FLOOR, M_FLOOR, INV_P_FLOOR.
pub fn check_phi_bounds(n: u64) -> Result<[BoundReport; 4]> {
    ensure(CheckId::PhiRatio, n)?;
    let f = factorize(n)?;
    let (q, p) = (f.smallest_prime().unwrap(), f.largest_prime().unwrap());
    let m = m_cyclic(&f);
    let phi_ratio = Rational::new(euler_phi(&f), n);
    let floor = Rational::new(q - 1, p);
    Ok([
        BoundReport::compared(n, CheckId::PhiRatio, m.clone(), phi_ratio.clone(), None),
        BoundReport::compared(n, CheckId::PhiFloor, phi_ratio, floor.clone(), None),
        BoundReport::compared(n, CheckId::MFloor, m.clone(), floor, None),
        BoundReport::compared(n, CheckId::InvPFloor, m, Rational::new(1, p), None),
    ])
}

/// `m(Z_n) > m(G)/(p-1)` for every non-cyclic `G` of odd order `n`.
pub fn check_odd_lower(n: u64, limits: &Limits) -> Result<BoundReport> {
    ensure(CheckId::OddLower, n)?;
    odd_lower_from(&OrderClasses::new(n, limits)?)
}

fn odd_lower_from(c: &OrderClasses) -> Result<BoundReport> {
    let check = CheckId::OddLower;
    let p = largest_prime(c.n)?;
    Ok(match c.max_m() {
        None => BoundReport::vacuous(c.n, check, None, None),
        Some((g, m)) => {
            let rhs = m / &Rational::from(p - 1);
            BoundReport::compared(c.n, check, c.m_cyclic.clone(), rhs, Some(g))
        }
    })
}

/// `1/(p-1) < m(Z_n)/m(G) ≤ (2+t)/(3+t)` for every non-cyclic `G`.
pub fn check_corollary(n: u64, limits: &Limits) -> Result<BoundReport> {
    ensure(CheckId::Corollary, n)?;
    Ok(corollary_from(&OrderClasses::new(n, limits)?))
}

fn corollary_from(c: &OrderClasses) -> BoundReport {
    let check = CheckId::Corollary;
    match (c.max_m(), c.min_m()) {
        (Some((g_lo, m_hi)), Some((_, m_lo))) => {
            let lo = &c.m_cyclic / m_hi;
            let hi = &c.m_cyclic / m_lo;
            BoundReport::compared(c.n, check, lo, hi, Some(g_lo))
        }
        _ => BoundReport::vacuous(c.n, check, None, None),
    }
}

/// Verdict of a per-group inequality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupVerdict {
    pub group: AbelianGroup,
    /// The group-dependent side of the inequality.
    pub value: Rational,
    pub holds: bool,
}

/// Per-group form of ODD_LOWER: `value = m(G)/(p-1)`, holds iff `m(Z_n) > value`.
pub fn odd_lower_per_group(n: u64, limits: &Limits) -> Result<Vec<GroupVerdict>> {
    ensure(CheckId::OddLower, n)?;
    let c = OrderClasses::new(n, limits)?;
    let p1 = Rational::from(largest_prime(n)? - 1);
    Ok(c.non_cyclic
        .into_iter()
        .map(|(group, m)| {
            let value = m / &p1;
            GroupVerdict { holds: c.m_cyclic > value, group, value }
        })
        .collect())
}

/// Per-group form of COROLLARY.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CorollaryVerdict {
    pub group: AbelianGroup,
    /// `m(Z_n)/m(G)`.
    pub ratio: Rational,
    /// `1/(p-1) < ratio`
    pub lower_holds: bool,
    /// `ratio ≤ (2+t)/(3+t)`
    pub upper_holds: bool,
}

pub fn corollary_per_group(n: u64, limits: &Limits) -> Result<Vec<CorollaryVerdict>> {
    ensure(CheckId::Corollary, n)?;
    let c = OrderClasses::new(n, limits)?;
    let lower = Rational::new(1, largest_prime(n)? - 1);
    let upper = upper_ratio(two_adic_split(n).t);
    Ok(c.non_cyclic
        .into_iter()
        .map(|(group, m)| {
            let ratio = &c.m_cyclic / &m;
            CorollaryVerdict {
                lower_holds: lower < ratio,
                upper_holds: ratio <= upper,
                group,
                ratio,
            }
        })
        .collect())
}

/// The non-cyclic abelian group of order `n` with the least `m`, ties going
/// to the canonically smaller group.
pub fn extremal(n: u64, limits: &Limits) -> Result<(AbelianGroup, Rational)> {
    if n == 0 {
        return Err(Error::Zero);
    }
    OrderClasses::new(n, limits)?
        .min_m()
        .cloned()
        .ok_or(Error::NoNonCyclicClass { n })
}

/// Runs every applicable check in `checks` at `n`, in check order. Checks
/// whose domain excludes `n` are skipped; failures to run become
/// [`Verdict::Error`] reports.
pub fn check_n(n: u64, checks: &[CheckId], limits: &Limits) -> Vec<BoundReport> {
    let mut wanted: Vec<CheckId> = checks.iter().copied().filter(|c| c.applies_to(n)).collect();
    wanted.sort_unstable();
    wanted.dedup();

    let classes = if wanted.iter().any(|c| c.needs_enumeration()) {
        Some(OrderClasses::new(n, limits))
    } else {
        None
    };
    let mut phi: Option<Result<[BoundReport; 4]>> = None;

    let mut out = Vec::with_capacity(wanted.len());
    for check in wanted {
        let report = match check {
            CheckId::Sharpness => check_sharpness(n),
            CheckId::Sqrt => check_sqrt(n),
            CheckId::PhiRatio | CheckId::PhiFloor | CheckId::MFloor | CheckId::InvPFloor => {
                let all = phi.get_or_insert_with(|| check_phi_bounds(n));
                match all {
                    Ok(reports) => Ok(reports.iter().find(|r| r.check == check).unwrap().clone()),
                    Err(e) => Err(e.clone()),
                }
            }
            _ => match classes.as_ref().unwrap() {
                Err(e) => Err(e.clone()),
                Ok(c) => match check {
                    CheckId::Initial => Ok(initial_from(c)),
                    CheckId::Main => Ok(main_from(c)),
                    CheckId::OddLower => odd_lower_from(c),
                    CheckId::Corollary => Ok(corollary_from(c)),
                    _ => unreachable!(),
                },
            },
        };
        out.push(report.unwrap_or_else(|e| BoundReport::error(n, check, e.to_string())));
    }
    out
}

/// Runs `checks` over every `n` in `range`, sorted by `(n, check)`.
pub fn sweep(range: RangeInclusive<u64>, checks: &[CheckId], limits: &Limits) -> Vec<BoundReport> {
    range.flat_map(|n| check_n(n, checks, limits)).collect()
}

#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
pub struct Tally {
    pub holds: u64,
    pub fails: u64,
    pub vacuous: u64,
    pub errors: u64,
}

impl Tally {
    pub fn add(&mut self, verdict: &Verdict) {
        match verdict {
            Verdict::Holds => self.holds += 1,
            Verdict::Fails => self.fails += 1,
            Verdict::Vacuous => self.vacuous += 1,
            Verdict::Error(_) => self.errors += 1,
        }
    }
}

pub fn summarize(reports: &[BoundReport]) -> BTreeMap<CheckId, Tally> {
    let mut tallies = BTreeMap::new();
    for r in reports {
        tallies.entry(r.check).or_insert_with(Tally::default).add(&r.verdict);
    }
    tallies
}
