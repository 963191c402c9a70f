//! The Erdos lattice construction: the k x k grid {0..k-1}^2 together with
//! every line ax + by = c in a canonical coprime direction of L1 norm at
//! most m that meets the solid bounding square [0, k-1]^2.
//!
//! Per direction (a, b) exactly (|a|+|b|)(k-1) + 1 integer values of c meet
//! the square, and each grid point lies on exactly one line of every
//! direction, so n = k^2, l = S(m)(k-1) + |D(m)| and I = k^2 |D(m)| are all
//! exact. The family is an approximation of the l richest lines: it keeps
//! lines with 0 or 1 incidences (such as 2x + 3y = 1 and x + y = 0) by
//! design.

use crate::analysis::incidence_stats;
use crate::error::{checked_add, checked_add_u64, checked_mul, checked_mul_u64, Error, Result};
use crate::geom::{
    canonicalize_line, Configuration, Construction, Direction, IncidenceStats, LatticePoint,
    Provenance,
};
use crate::numtheory::gcd_u64;

/// Validated parameters for the Erdos(k, m) construction: a k x k grid and
/// directions of L1 norm at most m.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ErdosParams {
    k: u64,
    m: u64,
}

impl ErdosParams {
    pub fn new(k: u64, m: u64) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidParams(format!(
                "k must be >= 1 for the Erdos construction, got {k}"
            )));
        }
        if m < 1 {
            return Err(Error::InvalidParams(format!(
                "m must be >= 1 for the Erdos construction, got {m}"
            )));
        }
        // k^2 points, c values up to m(k-1), and direction sums of order
        // m^3 must stay in range.
        let fits = |v: Option<u64>| v.is_some_and(|v| v <= i64::MAX as u64);
        let k2 = k.checked_mul(k);
        let mk = m.checked_mul(k);
        let m3 = m.checked_mul(m).and_then(|v| v.checked_mul(m));
        if !fits(k2) || !fits(mk) || !fits(m3) {
            return Err(Error::Overflow("Erdos parameter validation"));
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

/// Enumerates the canonical direction set D(m): (0, 1) together with every
/// (a, b) such that a >= 1, gcd(a, |b|) = 1 and a + |b| <= m, sorted
/// lexicographically.
///
/// No two returned directions describe the same pencil: the raw condition
/// "a >= 0" would admit both (0, 1) and (0, -1), which generate identical
/// lines, so a = 0 is collapsed to the single direction (0, 1).
pub fn enumerate_directions(m: u64) -> Result<Vec<Direction>> {
    if m < 1 {
        return Err(Error::InvalidParams("m must be >= 1".into()));
    }
    let m = i64::try_from(m).map_err(|_| Error::Overflow("enumerate_directions"))?;
    let mut directions = vec![Direction::new_unchecked(0, 1)];
    for a in 1..=m {
        for b in -(m - a)..=(m - a) {
            if gcd_u64(a as u64, b.unsigned_abs()) == 1 {
                directions.push(Direction::new_unchecked(a, b));
            }
        }
    }
    Ok(directions)
}

/// Size of D(m) and the sum of L1 norms over D(m), the two quantities the
/// exact line count is built from.
pub fn direction_sums(m: u64) -> Result<(u64, u64)> {
    let directions = enumerate_directions(m)?;
    let count = directions.len() as u64;
    let mut norm_sum: u64 = 0;
    for d in &directions {
        norm_sum = checked_add_u64(norm_sum, d.norm(), "direction_sums")?;
    }
    Ok((count, norm_sum))
}

/// Inclusive range of c for which ax + by = c meets the solid square
/// [0, side]^2, for a canonical direction (a, b).
fn c_range(direction: Direction, side: i64) -> Result<(i64, i64)> {
    let (a, b) = (direction.a(), direction.b());
    if b >= 0 {
        // minimum at (0, 0), maximum at (side, side)
        let hi = checked_mul(checked_add(a, b, "c_range a+b")?, side, "c_range span")?;
        Ok((0, hi))
    } else {
        // a >= 1 and b < 0: minimum at (0, side), maximum at (side, 0)
        Ok((
            checked_mul(b, side, "c_range b*(k-1)")?,
            checked_mul(a, side, "c_range a*(k-1)")?,
        ))
    }
}

/// Builds the Erdos(k, m) configuration.
///
/// Points are the grid {0..k-1}^2 in (x, y) order; lines are emitted
/// direction-major in D(m) order with c ascending, which makes the output
/// deterministic. Every line meets the bounding square, and for each
/// direction exactly (|a|+|b|)(k-1) + 1 lines are emitted.
pub fn generate_erdos(params: &ErdosParams) -> Result<Configuration> {
    let k = params.k as i64;
    let side = k - 1;

    let mut points = Vec::with_capacity((params.k * params.k) as usize);
    for x in 0..k {
        for y in 0..k {
            points.push(LatticePoint::new(x, y));
        }
    }

    let mut lines = Vec::new();
    for direction in enumerate_directions(params.m)? {
        let (lo, hi) = c_range(direction, side)?;
        for c in lo..=hi {
            lines.push(canonicalize_line(direction.a(), direction.b(), c)?);
        }
    }

    Ok(Configuration::new(
        points,
        lines,
        Provenance {
            construction: Construction::Erdos,
            k: params.k,
            m: params.m,
        },
    ))
}

/// Exact statistics of Erdos(k, m) from closed forms: n = k^2,
/// l = S(m)(k-1) + |D(m)| summed over the per-direction counts
/// (|a|+|b|)(k-1) + 1, and I = k^2 |D(m)| since each point is incident to
/// exactly one line of each direction.
pub fn exact_erdos_counts(params: &ErdosParams) -> Result<IncidenceStats> {
    let (count, norm_sum) = direction_sums(params.m)?;
    let n = params.k * params.k;
    let l = checked_add_u64(
        checked_mul_u64(norm_sum, params.k - 1, "exact_erdos_counts lines")?,
        count,
        "exact_erdos_counts lines",
    )?;
    let incidences = checked_mul_u64(n, count, "exact_erdos_counts incidences")?;
    Ok(incidence_stats(n, l, incidences))
}

/// The asymptotic line count 4 m^3 (k-1) / pi^2 + 6 m^2 / pi^2.
///
/// A documentation-level approximation of the exact l; the ratio
/// exact/approximate tends to 1 as k and m grow.
pub fn asymptotic_erdos_line_count(params: &ErdosParams) -> f64 {
    let k = params.k as f64;
    let m = params.m as f64;
    let pi2 = std::f64::consts::PI * std::f64::consts::PI;
    4.0 * m.powi(3) * (k - 1.0) / pi2 + 6.0 * m.powi(2) / pi2
}

/// The exact limit of the Erdos(k, m) constant as k grows with m fixed:
/// |D(m)| / S(m)^{2/3}, where S(m) is the sum of L1 norms over D(m).
///
/// Tends to 3 / (2^{1/3} pi^{2/3}) ~ 1.1101 as m grows.
pub fn limit_constant(m: u64) -> Result<f64> {
    let (count, norm_sum) = direction_sums(m)?;
    let root = (norm_sum as f64).cbrt();
    Ok(count as f64 / (root * root))
}
