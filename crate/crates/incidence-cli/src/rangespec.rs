//! Parameter range specifications for sweeps: comma-separated values and
//! inclusive ranges such as `3..10,20,50..52`, or the literal `diag` which
//! pairs every k with m = k - 1.

use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RangeSpec {
    /// m = k - 1 row per k (only meaningful as an m specification).
    Diag,
    /// Explicit values, in specification order.
    Values(Vec<u64>),
}

impl RangeSpec {
    pub fn values(&self) -> Option<&[u64]> {
        match self {
            RangeSpec::Diag => None,
            RangeSpec::Values(v) => Some(v),
        }
    }
}

impl FromStr for RangeSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "diag" {
            return Ok(RangeSpec::Diag);
        }
        let mut values = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            if token.is_empty() {
                return Err(format!("empty entry in range specification '{s}'"));
            }
            match token.split_once("..") {
                Some((lo, hi)) => {
                    let lo: u64 = lo
                        .trim()
                        .parse()
                        .map_err(|_| format!("bad range start in '{token}'"))?;
                    let hi: u64 = hi
                        .trim()
                        .parse()
                        .map_err(|_| format!("bad range end in '{token}'"))?;
                    // lo > hi is an empty range, not an error.
                    values.extend(lo..=hi);
                }
                None => values.push(
                    token
                        .parse()
                        .map_err(|_| format!("bad value '{token}' in range specification"))?,
                ),
            }
        }
        Ok(RangeSpec::Values(values))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_values_and_lists() {
        assert_eq!("7".parse(), Ok(RangeSpec::Values(vec![7])));
        assert_eq!("100,1000".parse(), Ok(RangeSpec::Values(vec![100, 1000])));
    }

    #[test]
    fn parses_inclusive_ranges() {
        assert_eq!("3..10".parse(), Ok(RangeSpec::Values((3..=10).collect())));
        assert_eq!(
            "1..3,9,20..21".parse(),
            Ok(RangeSpec::Values(vec![1, 2, 3, 9, 20, 21]))
        );
    }

    #[test]
    fn empty_range_is_allowed() {
        assert_eq!("4..3".parse(), Ok(RangeSpec::Values(vec![])));
    }

    #[test]
    fn parses_diag() {
        assert_eq!("diag".parse(), Ok(RangeSpec::Diag));
    }

    #[test]
    fn rejects_garbage() {
        assert!("".parse::<RangeSpec>().is_err());
        assert!("3..x".parse::<RangeSpec>().is_err());
        assert!("a,b".parse::<RangeSpec>().is_err());
        assert!("-3".parse::<RangeSpec>().is_err());
    }
}
