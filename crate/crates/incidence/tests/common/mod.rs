use std::collections::BTreeSet;

use incidence::{canonicalize_line, CanonicalLine, Configuration, LatticePoint};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

/// Deterministic ad-hoc configuration: up to `max_points` distinct lattice
/// points and `max_lines` distinct canonical lines with coordinates and
/// coefficients bounded by `coord`.
pub fn random_configuration(
    seed: u64,
    max_points: usize,
    max_lines: usize,
    coord: i64,
) -> Configuration {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_points);
    let l = rng.gen_range(1..=max_lines);

    let mut points: BTreeSet<LatticePoint> = BTreeSet::new();
    while points.len() < n {
        points.insert(LatticePoint::new(
            rng.gen_range(-coord..=coord),
            rng.gen_range(-coord..=coord),
        ));
    }

    let mut lines: BTreeSet<CanonicalLine> = BTreeSet::new();
    while lines.len() < l {
        let a = rng.gen_range(-coord..=coord);
        let b = rng.gen_range(-coord..=coord);
        if (a, b) == (0, 0) {
            continue;
        }
        // Reduce (a, b) to a coprime direction, then any integer c is valid.
        let direction = canonicalize_line(a, b, 0).unwrap();
        let c = rng.gen_range(-coord..=coord);
        lines.insert(canonicalize_line(direction.a(), direction.b(), c).unwrap());
    }

    Configuration::adhoc(points.into_iter().collect(), lines.into_iter().collect())
}
