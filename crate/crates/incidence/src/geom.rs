//! Core domain types shared by every module: lattice points, lines in a
//! unique integer canonical form, pencil directions, and assembled
//! configurations with their incidence statistics.
//!
//! All values here are immutable and all operations are pure, so everything
//! is safe to share between concurrent workers.

use std::fmt;
use std::str::FromStr;

use crate::error::{checked_add, checked_mul, Error, Result};
use crate::numtheory::gcd;

/// An integer point (x, y) of a configuration.
///
/// Coordinates are plain `i64`; construction parameters are validated
/// upstream so that no in-domain coordinate overflows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A line ax + by = c in its unique integer canonical form.
///
/// Invariants: (a, b) != (0, 0); gcd(|a|, |b|) = 1; and a > 0, or a = 0 and
/// b > 0. Canonical form turns line equality into value equality, which is
/// what deduplication and the oracle comparisons rely on. Construct via
/// [`canonicalize_line`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalLine {
    a: i64,
    b: i64,
    c: i64,
}

impl CanonicalLine {
    /// Canonicalizes (a, b, c); same as [`canonicalize_line`].
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        canonicalize_line(a, b, c)
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    /// The direction (a, b) of the pencil of parallel lines this line
    /// belongs to. For a canonical line this is already a canonical
    /// direction.
    pub fn direction(&self) -> Direction {
        Direction {
            a: self.a,
            b: self.b,
        }
    }

    /// A vertical line has b = 0, i.e. it cannot be written as y = ax + b.
    pub fn is_vertical(&self) -> bool {
        self.b == 0
    }

    /// True iff `p` lies exactly on this line; same as [`point_on_line`].
    pub fn contains(&self, p: LatticePoint) -> Result<bool> {
        point_on_line(p, *self)
    }
}

impl fmt::Display for CanonicalLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == 0 {
            return write!(f, "x = {}", self.c);
        }
        if self.a == 0 {
            return write!(f, "y = {}", self.c);
        }
        if self.a == 1 {
            write!(f, "x")?;
        } else {
            write!(f, "{}x", self.a)?;
        }
        let sign = if self.b < 0 { '-' } else { '+' };
        let mag = self.b.unsigned_abs();
        if mag == 1 {
            write!(f, " {} y = {}", sign, self.c)
        } else {
            write!(f, " {} {}y = {}", sign, mag, self.c)
        }
    }
}

/// Returns the unique canonical representative of the line ax + by = c.
///
/// The input is divided by g = gcd(|a|, |b|) and the sign is normalized so
/// that a > 0, or a = 0 and b > 0. The returned line has the same solution
/// set as the input. Inputs where g does not divide c do not describe an
/// integer-canonical line and are rejected.
pub fn canonicalize_line(a: i64, b: i64, c: i64) -> Result<CanonicalLine> {
    if a == 0 && b == 0 {
        return Err(Error::DegenerateLine);
    }
    let g = i64::try_from(gcd(a, b)).map_err(|_| Error::Overflow("canonicalize_line gcd"))?;
    if c % g != 0 {
        return Err(Error::NonIntegralLine { a, b, c, g });
    }
    let (mut a, mut b, mut c) = (a / g, b / g, c / g);
    if a < 0 || (a == 0 && b < 0) {
        a = a
            .checked_neg()
            .ok_or(Error::Overflow("canonicalize_line sign"))?;
        b = b
            .checked_neg()
            .ok_or(Error::Overflow("canonicalize_line sign"))?;
        c = c
            .checked_neg()
            .ok_or(Error::Overflow("canonicalize_line sign"))?;
    }
    Ok(CanonicalLine { a, b, c })
}

/// True iff a*p.x + b*p.y = c exactly.
///
/// The products are evaluated with checked 64-bit arithmetic; an
/// out-of-range intermediate is an [`Error::Overflow`], never a silent
/// wraparound.
pub fn point_on_line(p: LatticePoint, line: CanonicalLine) -> Result<bool> {
    let ax = checked_mul(line.a, p.x, "point_on_line a*x")?;
    let by = checked_mul(line.b, p.y, "point_on_line b*y")?;
    let lhs = checked_add(ax, by, "point_on_line a*x + b*y")?;
    Ok(lhs == line.c)
}

/// A canonical coprime pair (a, b) naming a pencil of parallel lines
/// ax + by = c.
///
/// Invariants: gcd(|a|, |b|) = 1, and a > 0, or (a, b) = (0, 1). The sign
/// rule makes (a, b) and (-a, -b), which generate identical pencils, a
/// single value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Direction {
    a: i64,
    b: i64,
}

impl Direction {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        let canonical = (a > 0 && gcd(a, b) == 1) || (a == 0 && b == 1);
        if canonical {
            Ok(Self { a, b })
        } else {
            Err(Error::InvalidParams(format!(
                "({a}, {b}) is not a canonical direction"
            )))
        }
    }

    pub(crate) fn new_unchecked(a: i64, b: i64) -> Self {
        debug_assert!((a > 0 && gcd(a, b) == 1) || (a == 0 && b == 1));
        Self { a, b }
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// The L1 norm |a| + |b| of the direction.
    pub fn norm(&self) -> u64 {
        self.a.unsigned_abs() + self.b.unsigned_abs()
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// Which construction produced a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    Elekes,
    ClassicElekes,
    Erdos,
}

impl Construction {
    pub fn name(&self) -> &'static str {
        match self {
            Construction::Elekes => "elekes",
            Construction::ClassicElekes => "classic-elekes",
            Construction::Erdos => "erdos",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "elekes" => Ok(Construction::Elekes),
            "classic-elekes" => Ok(Construction::ClassicElekes),
            "erdos" => Ok(Construction::Erdos),
            other => Err(Error::InvalidParams(format!(
                "unknown construction '{other}' (expected elekes, classic-elekes, or erdos)"
            ))),
        }
    }
}

/// Construction name and parameters that produced a configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Provenance {
    pub construction: Construction,
    pub k: u64,
    pub m: u64,
}

/// A point set P and line family L, with provenance when produced by one of
/// the named constructions.
///
/// Generators emit points and lines in a deterministic order and never emit
/// duplicates; [`Configuration::validate`] re-checks both invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub points: Vec<LatticePoint>,
    pub lines: Vec<CanonicalLine>,
    pub provenance: Option<Provenance>,
}

impl Configuration {
    pub fn new(
        points: Vec<LatticePoint>,
        lines: Vec<CanonicalLine>,
        provenance: Provenance,
    ) -> Self {
        Self {
            points,
            lines,
            provenance: Some(provenance),
        }
    }

    /// A configuration assembled outside the named constructions, e.g. a
    /// randomized test fixture.
    pub fn adhoc(points: Vec<LatticePoint>, lines: Vec<CanonicalLine>) -> Self {
        Self {
            points,
            lines,
            provenance: None,
        }
    }

    /// Number of points, n.
    pub fn n(&self) -> u64 {
        self.points.len() as u64
    }

    /// Number of lines, l.
    pub fn l(&self) -> u64 {
        self.lines.len() as u64
    }

    /// Checks the no-duplicate invariants for points and lines.
    pub fn validate(&self) -> Result<()> {
        let mut points = self.points.clone();
        points.sort_unstable();
        points.dedup();
        if points.len() != self.points.len() {
            return Err(Error::InvalidParams(
                "configuration contains duplicate points".into(),
            ));
        }
        let mut lines = self.lines.clone();
        lines.sort_unstable();
        lines.dedup();
        if lines.len() != self.lines.len() {
            return Err(Error::InvalidParams(
                "configuration contains duplicate lines".into(),
            ));
        }
        Ok(())
    }
}

/// Exact counts for one configuration together with the constant of
/// proportionality c = I / (n^{2/3} l^{2/3}) and the flag for the regime
/// sqrt(n) <= l <= n^2 in which the n^{2/3} l^{2/3} term dominates the
/// incidence bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IncidenceStats {
    pub n: u64,
    pub l: u64,
    pub incidences: u64,
    pub constant: f64,
    pub regime_ok: bool,
}
