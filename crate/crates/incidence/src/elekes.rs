//! The Elekes lattice constructions.
//!
//! The main generator builds Elekes(k, m): the k x km grid together with
//! every non-vertical line that contains exactly k of its points. Every
//! such line has integer slope and intercept (a line through k points of a
//! width-k grid meets every column), so the family is enumerated exactly as
//! y = ax + b with 0 <= b <= km-1 and 0 <= a(k-1) + b <= km-1, giving
//! I = l*k incidences and a constant of at least 1.
//!
//! The classic variant puts P = {1..k} x {1..2km} and L = {y = ax + b :
//! a in 1..m, b in 1..km}; its constant is exactly 2^{-2/3}.

use crate::analysis::incidence_stats;
use crate::error::{checked_add_u64, checked_mul_u64, Error, Result};
use crate::geom::{
    canonicalize_line, Configuration, Construction, IncidenceStats, LatticePoint, Provenance,
};

/// Validated parameters for the Elekes(k, m) construction.
///
/// k is the grid width and the number of points on every line; m controls
/// the grid height km. k = 1 is rejected because a width-1 grid admits
/// infinitely many one-point lines (and the line enumeration divides by
/// k - 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElekesParams {
    k: u64,
    m: u64,
}

impl ElekesParams {
    pub fn new(k: u64, m: u64) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParams(format!(
                "k must be >= 2 for the Elekes construction, got {k}"
            )));
        }
        if m < 1 {
            return Err(Error::InvalidParams(format!(
                "m must be >= 1 for the Elekes construction, got {m}"
            )));
        }
        // k^2 m points, at least k m^2 lines, and coordinates up to km - 1
        // must all stay in i64 range.
        let fits = |v: Option<u64>| v.is_some_and(|v| v <= i64::MAX as u64);
        let k2m = k.checked_mul(k).and_then(|v| v.checked_mul(m));
        let km2 = k.checked_mul(m).and_then(|v| v.checked_mul(m));
        if !fits(k2m) || !fits(km2) {
            return Err(Error::Overflow("Elekes parameter validation"));
        }
        Ok(Self { k, m })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn m(&self) -> u64 {
        self.m
    }
}

/// Builds the Elekes(k, m) configuration.
///
/// Points are the k x km grid {0..k-1} x {0..km-1} in (x, y) order; lines
/// are every y = ax + b whose k column values stay inside the grid, in
/// lexicographic (a, b) order. Every emitted line is incident to exactly k
/// points, and the family equals the set of non-vertical lines through
/// exactly k points of the grid.
pub fn generate_elekes(params: &ElekesParams) -> Result<Configuration> {
    let k = params.k as i64;
    let height = (params.k * params.m) as i64 - 1; // km - 1, fits by validation
    let den = k - 1;

    let mut points = Vec::with_capacity((params.k * params.k * params.m) as usize);
    for x in 0..k {
        for y in 0..=height {
            points.push(LatticePoint::new(x, y));
        }
    }

    let mut lines = Vec::new();
    let a_max = height / den;
    for a in -a_max..=a_max {
        let shift = a * den; // |a| <= height / den, so |shift| <= height
        let b_lo = 0.max(-shift);
        let b_hi = height.min(height - shift);
        for b in b_lo..=b_hi {
            lines.push(canonicalize_line(a, -1, -b)?);
        }
    }

    Ok(Configuration::new(
        points,
        lines,
        Provenance {
            construction: Construction::Elekes,
            k: params.k,
            m: params.m,
        },
    ))
}

/// Exact number of lines of Elekes(k, m):
/// sum over b in 0..km of the number of integer slopes a with
/// 0 <= a(k-1) + b <= km-1. Always at least k m^2.
pub fn exact_elekes_line_count(params: &ElekesParams) -> Result<u64> {
    let km = params.k * params.m;
    let den = params.k - 1;
    let mut total: u64 = 0;
    for b in 0..km {
        // floor((km-1-b)/(k-1)) slopes above zero, floor(b/(k-1)) below,
        // plus a = 0 itself.
        let per_b = (km - 1 - b) / den + b / den + 1;
        total = checked_add_u64(total, per_b, "exact_elekes_line_count")?;
    }
    Ok(total)
}

/// Exact statistics of Elekes(k, m): n = k^2 m, l from
/// [`exact_elekes_line_count`], and I = l*k since each line meets exactly
/// k points. The resulting constant is always >= 1.
pub fn elekes_stats(params: &ElekesParams) -> Result<IncidenceStats> {
    let n = params.k * params.k * params.m;
    let l = exact_elekes_line_count(params)?;
    let incidences = checked_mul_u64(l, params.k, "elekes_stats incidences")?;
    Ok(incidence_stats(n, l, incidences))
}

fn validate_classic(k: u64, m: u64) -> Result<()> {
    if k < 1 {
        return Err(Error::InvalidParams(format!(
            "k must be >= 1 for the classic Elekes construction, got {k}"
        )));
    }
    if m < 2 {
        return Err(Error::InvalidParams(format!(
            "m must be >= 2 for the classic Elekes construction, got {m}"
        )));
    }
    let fits = |v: Option<u64>| v.is_some_and(|v| v <= i64::MAX as u64);
    let n = k
        .checked_mul(k)
        .and_then(|v| v.checked_mul(m))
        .and_then(|v| v.checked_mul(2));
    let l = k.checked_mul(m).and_then(|v| v.checked_mul(m));
    let i = k
        .checked_mul(k)
        .and_then(|v| v.checked_mul(m))
        .and_then(|v| v.checked_mul(m));
    if !fits(n) || !fits(l) || !fits(i) {
        return Err(Error::Overflow("classic Elekes parameter validation"));
    }
    Ok(())
}

/// Builds the classic Elekes configuration: P = {1..k} x {1..2km} and
/// L = {y = ax + b : a in 1..m, b in 1..km}. Each line is incident to
/// exactly k points, so I = k^2 m^2 and the constant is exactly 2^{-2/3}.
pub fn generate_classic_elekes(k: u64, m: u64) -> Result<Configuration> {
    validate_classic(k, m)?;
    let ki = k as i64;
    let height = (2 * k * m) as i64;

    let mut points = Vec::with_capacity((2 * k * k * m) as usize);
    for x in 1..=ki {
        for y in 1..=height {
            points.push(LatticePoint::new(x, y));
        }
    }

    let mut lines = Vec::with_capacity((k * m * m) as usize);
    for a in 1..=(m as i64) {
        for b in 1..=((k * m) as i64) {
            lines.push(canonicalize_line(a, -1, -b)?);
        }
    }

    Ok(Configuration::new(
        points,
        lines,
        Provenance {
            construction: Construction::ClassicElekes,
            k,
            m,
        },
    ))
}

/// Closed-form statistics of the classic construction: n = 2 k^2 m,
/// l = k m^2, I = k^2 m^2.
pub fn classic_elekes_stats(k: u64, m: u64) -> Result<IncidenceStats> {
    validate_classic(k, m)?;
    Ok(incidence_stats(2 * k * k * m, k * m * m, k * k * m * m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::CanonicalLine;
    use std::collections::BTreeSet;

    fn params(k: u64, m: u64) -> ElekesParams {
        ElekesParams::new(k, m).unwrap()
    }

    #[test]
    fn rejects_degenerate_parameters() {
        assert!(ElekesParams::new(1, 4).is_err());
        assert!(ElekesParams::new(0, 4).is_err());
        assert!(ElekesParams::new(5, 0).is_err());
        assert!(ElekesParams::new(u64::MAX, 2).is_err());
    }

    #[test]
    fn figure_one_counts() {
        let p = params(5, 4);
        let config = generate_elekes(&p).unwrap();
        assert_eq!(config.n(), 100);
        assert_eq!(config.l(), 100);
        assert_eq!(exact_elekes_line_count(&p).unwrap(), 100);
        let stats = elekes_stats(&p).unwrap();
        assert_eq!((stats.n, stats.l, stats.incidences), (100, 100, 500));
        assert!((stats.constant - 1.077_217_345_015_942).abs() < 1e-9);
        assert!(stats.regime_ok);
    }

    #[test]
    fn two_by_two_grid_has_four_lines() {
        let p = params(2, 1);
        let config = generate_elekes(&p).unwrap();
        assert_eq!(config.n(), 4);
        assert_eq!(config.l(), 4);
        let stats = elekes_stats(&p).unwrap();
        assert_eq!((stats.n, stats.l, stats.incidences), (4, 4, 8));
        assert!((stats.constant - 8.0 / 4f64.powf(4.0 / 3.0)).abs() < 1e-12);
        // y = 0, y = 1, y = x, y = -x + 1.
        let expected: BTreeSet<CanonicalLine> = [
            canonicalize_line(0, -1, 0).unwrap(),
            canonicalize_line(0, -1, -1).unwrap(),
            canonicalize_line(1, -1, 0).unwrap(),
            canonicalize_line(-1, -1, -1).unwrap(),
        ]
        .into();
        assert_eq!(
            config.lines.iter().copied().collect::<BTreeSet<_>>(),
            expected
        );
    }

    #[test]
    fn three_by_six_counts() {
        let p = params(3, 2);
        let config = generate_elekes(&p).unwrap();
        assert_eq!(config.n(), 18);
        assert_eq!(config.l(), 18);
        assert_eq!(exact_elekes_line_count(&p).unwrap(), 18);
    }

    #[test]
    fn diagonal_parameters_balance_points_and_lines() {
        for k in 3..=6u64 {
            let p = params(k, k - 1);
            assert_eq!(exact_elekes_line_count(&p).unwrap(), k * k * (k - 1));
            let stats = elekes_stats(&p).unwrap();
            assert_eq!(stats.n, stats.l);
            assert_eq!(stats.incidences, k * k * k * (k - 1));
        }
    }

    #[test]
    fn line_count_formula_matches_generator() {
        for k in 2..=8u64 {
            for m in 1..=6u64 {
                let p = params(k, m);
                let config = generate_elekes(&p).unwrap();
                assert_eq!(
                    config.l(),
                    exact_elekes_line_count(&p).unwrap(),
                    "k={k} m={m}"
                );
                config.validate().unwrap();
            }
        }
    }

    #[test]
    fn line_count_dominates_k_m_squared() {
        for k in 2..=50u64 {
            for m in 1..=50u64 {
                let p = params(k, m);
                assert!(
                    exact_elekes_line_count(&p).unwrap() >= k * m * m,
                    "k={k} m={m}"
                );
            }
        }
    }

    #[test]
    fn lines_are_emitted_in_slope_intercept_order() {
        let config = generate_elekes(&params(3, 2)).unwrap();
        // Recover (a, b) of y = ax + b from the canonical form and check
        // lexicographic order.
        let keys: Vec<(i64, i64)> = config
            .lines
            .iter()
            .map(|l| {
                // canonical form of (a, -1, -b) is (a, -1, -b) for a > 0,
                // (0, 1, b) for a = 0, and (-a, 1, b) for a < 0.
                if l.b() < 0 {
                    (l.a(), -l.c())
                } else {
                    (-l.a(), l.c())
                }
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn classic_examples() {
        let stats = classic_elekes_stats(2, 2).unwrap();
        assert_eq!((stats.n, stats.l, stats.incidences), (16, 8, 16));
        assert!((stats.constant - 2f64.powf(-2.0 / 3.0)).abs() < 1e-15);

        let stats = classic_elekes_stats(3, 2).unwrap();
        assert_eq!((stats.n, stats.l, stats.incidences), (36, 12, 36));

        // k = 1: every line passes through exactly one point.
        let stats = classic_elekes_stats(1, 2).unwrap();
        assert_eq!((stats.n, stats.l, stats.incidences), (4, 4, 4));
        let config = generate_classic_elekes(1, 2).unwrap();
        assert_eq!((config.n(), config.l()), (4, 4));
    }

    #[test]
    fn classic_rejects_m_below_two() {
        assert!(generate_classic_elekes(3, 1).is_err());
        assert!(classic_elekes_stats(3, 1).is_err());
        assert!(classic_elekes_stats(0, 2).is_err());
    }

    #[test]
    fn classic_generator_matches_closed_form() {
        for (k, m) in [(1u64, 2u64), (2, 2), (3, 2), (4, 3)] {
            let config = generate_classic_elekes(k, m).unwrap();
            let stats = classic_elekes_stats(k, m).unwrap();
            assert_eq!(config.n(), stats.n);
            assert_eq!(config.l(), stats.l);
            config.validate().unwrap();
        }
    }
}
