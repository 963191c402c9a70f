//! Independent incidence-counting engines and the all-lines-through-pairs
//! oracle used to validate the generators.
//!
//! The brute-force counter and the direction-bucketed counter share no code
//! path; their agreement on every configuration is the error-detection
//! mechanism for the whole crate. Deduplication everywhere is canonical-line
//! equality, never an epsilon comparison.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;

use crate::error::{checked_add, checked_add_u64, checked_mul, Error, Result};
use crate::geom::{canonicalize_line, point_on_line, CanonicalLine, Configuration, LatticePoint};

/// Default cap on the number of points accepted by
/// [`all_lines_through_pairs`], bounding its O(n^2) pair scan.
pub const ORACLE_POINT_CAP: usize = 5_000;

/// A line together with its exact number of incident points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LineIncidenceProfile {
    pub line: CanonicalLine,
    pub count: u64,
}

/// Reference incidence count: the sum of [`crate::point_on_line`] over all
/// (point, line) pairs, O(n*l).
pub fn count_incidences_bruteforce(config: &Configuration) -> Result<u64> {
    config
        .lines
        .par_iter()
        .map(|&line| {
            let mut on_line: u64 = 0;
            for &p in &config.points {
                if point_on_line(p, line)? {
                    on_line += 1;
                }
            }
            Ok(on_line)
        })
        .try_reduce(
            || 0,
            |x, y| checked_add_u64(x, y, "count_incidences_bruteforce"),
        )
}

/// Incidence count exploiting the pencil structure: lines are grouped by
/// direction (a, b) into a lookup of present c values, and each point
/// contributes one membership query per direction. O(n*D + l) for D
/// distinct directions; returns the same value as
/// [`count_incidences_bruteforce`] on every input.
pub fn count_incidences_bucketed(config: &Configuration) -> Result<u64> {
    let mut buckets: HashMap<(i64, i64), HashMap<i64, u64>> = HashMap::new();
    for line in &config.lines {
        *buckets
            .entry((line.a(), line.b()))
            .or_default()
            .entry(line.c())
            .or_insert(0) += 1;
    }
    config
        .points
        .par_iter()
        .map(|&p| {
            let mut acc: u64 = 0;
            for (&(a, b), cs) in &buckets {
                let value = checked_add(
                    checked_mul(a, p.x, "count_incidences_bucketed a*x")?,
                    checked_mul(b, p.y, "count_incidences_bucketed b*y")?,
                    "count_incidences_bucketed a*x + b*y",
                )?;
                if let Some(&multiplicity) = cs.get(&value) {
                    acc += multiplicity;
                }
            }
            Ok(acc)
        })
        .try_reduce(
            || 0,
            |x, y| checked_add_u64(x, y, "count_incidences_bucketed"),
        )
}

/// Exact incidence count for each line of the configuration, in the
/// configuration's line order. Uses the same direction-bucket layout as
/// [`count_incidences_bucketed`].
pub fn line_incidence_profiles(config: &Configuration) -> Result<Vec<LineIncidenceProfile>> {
    let mut buckets: HashMap<(i64, i64), HashMap<i64, Vec<usize>>> = HashMap::new();
    for (index, line) in config.lines.iter().enumerate() {
        buckets
            .entry((line.a(), line.b()))
            .or_default()
            .entry(line.c())
            .or_default()
            .push(index);
    }
    let mut counts = vec![0u64; config.lines.len()];
    for &p in &config.points {
        for (&(a, b), cs) in &buckets {
            let value = checked_add(
                checked_mul(a, p.x, "line_incidence_profiles a*x")?,
                checked_mul(b, p.y, "line_incidence_profiles b*y")?,
                "line_incidence_profiles a*x + b*y",
            )?;
            if let Some(indices) = cs.get(&value) {
                for &i in indices {
                    counts[i] += 1;
                }
            }
        }
    }
    Ok(config
        .lines
        .iter()
        .zip(counts)
        .map(|(&line, count)| LineIncidenceProfile { line, count })
        .collect())
}

/// Distribution of per-line incidence counts: count -> number of lines.
/// The weighted sum over the histogram equals the total incidence count.
pub fn incidence_histogram(config: &Configuration) -> Result<BTreeMap<u64, u64>> {
    let mut histogram = BTreeMap::new();
    for profile in line_incidence_profiles(config)? {
        *histogram.entry(profile.count).or_insert(0) += 1;
    }
    Ok(histogram)
}

/// [`all_lines_through_pairs_with_cap`] at the default
/// [`ORACLE_POINT_CAP`].
pub fn all_lines_through_pairs(points: &[LatticePoint]) -> Result<Vec<LineIncidenceProfile>> {
    all_lines_through_pairs_with_cap(points, ORACLE_POINT_CAP)
}

/// The exhaustive oracle: enumerates the canonical line through every pair
/// of distinct points and reports each distinct line with its exact
/// incidence count (always >= 2), sorted by canonical line.
///
/// Duplicate input points are ignored. A line through t collinear points is
/// produced by exactly t(t-1)/2 pairs, which is how the count is recovered
/// without a second scan.
pub fn all_lines_through_pairs_with_cap(
    points: &[LatticePoint],
    cap: usize,
) -> Result<Vec<LineIncidenceProfile>> {
    let points: Vec<LatticePoint> = points
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if points.len() > cap {
        return Err(Error::OracleCapExceeded {
            n: points.len(),
            cap,
        });
    }

    let mut pair_counts: HashMap<CanonicalLine, u64> = HashMap::new();
    for (i, &p) in points.iter().enumerate() {
        for &q in &points[i + 1..] {
            let dx = q.x.checked_sub(p.x).ok_or(Error::Overflow("oracle dx"))?;
            let dy = q.y.checked_sub(p.y).ok_or(Error::Overflow("oracle dy"))?;
            // The line through p and q: dy*x - dx*y = dy*p.x - dx*p.y.
            let c = checked_mul(dy, p.x, "oracle dy*x")?
                .checked_sub(checked_mul(dx, p.y, "oracle dx*y")?)
                .ok_or(Error::Overflow("oracle c"))?;
            let neg_dx = dx.checked_neg().ok_or(Error::Overflow("oracle -dx"))?;
            let line = canonicalize_line(dy, neg_dx, c)?;
            *pair_counts.entry(line).or_insert(0) += 1;
        }
    }

    let mut profiles: Vec<LineIncidenceProfile> = pair_counts
        .into_iter()
        .map(|(line, pairs)| {
            let count = (1 + 8 * pairs).isqrt().div_ceil(2);
            assert_eq!(
                count * (count - 1) / 2,
                pairs,
                "pair multiplicity {pairs} is not triangular for {line}"
            );
            LineIncidenceProfile { line, count }
        })
        .collect();
    profiles.sort_unstable_by_key(|p| p.line);
    Ok(profiles)
}
