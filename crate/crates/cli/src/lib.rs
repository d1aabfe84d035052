//! Report formats, the expected-failure registry, group-spec parsing and
//! parallel sweeps on top of `ordsum-core`.

pub mod groupspec;
pub mod registry;
pub mod report;

use std::ops::RangeInclusive;

use ordsum_core::bounds::{check_n, BoundReport, CheckId};
use ordsum_core::Limits;
use rayon::prelude::*;

/// Parallel [`ordsum_core::bounds::sweep`]. Output order is `(n, check)`
/// regardless of scheduling.
pub fn par_sweep(range: RangeInclusive<u64>, checks: &[CheckId], limits: &Limits) -> Vec<BoundReport> {
    let mut reports: Vec<BoundReport> = range
        .into_par_iter()
        .flat_map_iter(|n| check_n(n, checks, limits))
        .collect();
    reports.sort_by_key(|r| (r.n, r.check));
    reports
}

/// Parses an inclusive range written `A..B` (or a single `A`).
pub fn parse_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (a, b) = s.split_once("..").unwrap_or((s, s));
    let b = b.strip_prefix('=').unwrap_or(b);
    let parse = |x: &str| {
        x.trim()
            .parse::<u64>()
            .map_err(|_| format!("invalid range `{s}`: expected A..B with non-negative integers"))
    };
    let (a, b) = (parse(a)?, parse(b)?);
    if a > b {
        return Err(format!("invalid range `{s}`: start exceeds end"));
    }
    Ok(a..=b)
}

/// Six significant digits, for display next to an exact value.
pub fn approx(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-4..6).contains(&magnitude) {
        return format!("{x:.5e}");
    }
    let decimals = (5 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}
