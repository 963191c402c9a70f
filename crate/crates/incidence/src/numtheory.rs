//! Coprimality utilities and the empirical check of the 6/pi^2 coprime
//! density that drives the asymptotic direction counts.
//!
//! The density is computed by exact pair enumeration, not Mobius summation:
//! desk scale is fast enough and it keeps one fewer algorithm to validate.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// The limit density of coprime pairs, 6/pi^2.
pub const COPRIME_DENSITY_LIMIT: f64 = 6.0 / (std::f64::consts::PI * std::f64::consts::PI);

/// Largest N accepted by the exact pair-scan routines.
pub const DENSITY_SCAN_CAP: u64 = 100_000;

/// Greatest common divisor with the convention gcd(0, n) = |n|.
pub fn gcd(a: i64, b: i64) -> u64 {
    gcd_u64(a.unsigned_abs(), b.unsigned_abs())
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Exact number of coprime pairs (a, b) in [1, N]^2.
pub fn coprime_pair_count(n: u64) -> Result<u64> {
    if n < 1 {
        return Err(Error::InvalidParams("N must be >= 1".into()));
    }
    if n > DENSITY_SCAN_CAP {
        return Err(Error::InvalidParams(format!(
            "N = {n} exceeds the pair-scan cap of {DENSITY_SCAN_CAP}"
        )));
    }
    let count = (1..=n)
        .into_par_iter()
        .map(|a| (1..=n).filter(|&b| gcd_u64(a, b) == 1).count() as u64)
        .sum();
    Ok(count)
}

/// Fraction of coprime pairs in [1, N]^2: an exact count divided once at
/// the end, so `coprime_density(N) * N^2` is always an integer. Tends to
/// 6/pi^2 ~ 0.60793 as N grows.
pub fn coprime_density(n: u64) -> Result<f64> {
    let count = coprime_pair_count(n)?;
    Ok(count as f64 / (n * n) as f64)
}

/// For each norm j in 1..=m, the exact number of canonical directions
/// (a, b) with |a| + |b| = j.
///
/// Entry j-1 of the result holds the count for norm j; the total over all
/// entries equals the size of the direction set D(m). The per-j value over
/// 2j tracks the coprime density on average, though individual norms
/// fluctuate with phi(j).
pub fn coprime_count_norm(m: u64) -> Result<Vec<u64>> {
    if m < 1 {
        return Err(Error::InvalidParams("m must be >= 1".into()));
    }
    let counts = (1..=m)
        .map(|j| {
            // (0, 1) is the single a = 0 canonical direction, norm 1.
            let mut count = u64::from(j == 1);
            for a in 1..=j {
                let b = j - a;
                if b == 0 {
                    count += u64::from(a == 1);
                } else if gcd_u64(a, b) == 1 {
                    count += 2; // (a, b) and (a, -b)
                }
            }
            count
        })
        .collect();
    Ok(counts)
}
