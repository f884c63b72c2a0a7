//! Completeness checks: parametric enumeration against exhaustive search.

mod scan;

pub use scan::{
    brute_force_bisector_family, brute_force_family, naive_bisector_family, naive_family,
};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::family::{enumerate_bisector_family, enumerate_family};
use crate::triangle::Triangle;

/// Which parametric family a comparison targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    /// All triangles with B = 2A.
    Result1,
    /// The subfamily whose bisector of B is integral.
    Result2,
}

impl fmt::Display for Which {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Which::Result1 => "result1",
            Which::Result2 => "result2",
        })
    }
}

impl FromStr for Which {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "result1" => Ok(Which::Result1),
            "result2" => Ok(Which::Result2),
            other => Err(format!(
                "unknown family {other:?}, expected result1 or result2"
            )),
        }
    }
}

/// Search strategy for the brute-force side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchMode {
    /// Solve for `b` from each `(a, c)`.
    #[default]
    Quadratic,
    /// Try every triple.
    Naive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub bound: u64,
    pub which: Which,
    /// Brute-force result, sorted.
    pub found: Vec<Triangle>,
    pub missing_from_parametric: Vec<Triangle>,
    pub extra_in_parametric: Vec<Triangle>,
}

impl OracleReport {
    pub fn verified(&self) -> bool {
        self.missing_from_parametric.is_empty() && self.extra_in_parametric.is_empty()
    }
}

pub fn compare(bound: u64, which: Which) -> OracleReport {
    compare_with(bound, which, SearchMode::Quadratic)
}

pub fn compare_with(bound: u64, which: Which, mode: SearchMode) -> OracleReport {
    let found = match (which, mode) {
        (Which::Result1, SearchMode::Quadratic) => brute_force_family(bound),
        (Which::Result2, SearchMode::Quadratic) => brute_force_bisector_family(bound),
        (Which::Result1, SearchMode::Naive) => naive_family(bound),
        (Which::Result2, SearchMode::Naive) => naive_bisector_family(bound),
    };
    let members = match which {
        Which::Result1 => enumerate_family(bound, false),
        Which::Result2 => enumerate_bisector_family(bound, false),
    };
    let parametric: BTreeSet<Triangle> = members.iter().map(|m| m.triangle).collect();
    let brute: BTreeSet<Triangle> = found.iter().copied().collect();
    OracleReport {
        bound,
        which,
        missing_from_parametric: brute.difference(&parametric).copied().collect(),
        extra_in_parametric: parametric.difference(&brute).copied().collect(),
        found,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn desk_scale_agreement() {
        for which in [Which::Result1, Which::Result2] {
            let report = compare(100, which);
            assert!(report.verified(), "{report:?}");
        }
        let report = compare(15, Which::Result1);
        assert_eq!(report.found, vec![Triangle::new(4, 6, 5).unwrap()]);
        assert!(report.verified());
    }

    #[test]
    fn naive_mode_agrees() {
        let report = compare_with(150, Which::Result1, SearchMode::Naive);
        assert!(report.verified());
        assert_eq!(report.found, compare(150, Which::Result1).found);
    }

    #[test]
    fn which_parses() {
        assert_eq!("result1".parse(), Ok(Which::Result1));
        assert_eq!("result2".parse(), Ok(Which::Result2));
        assert!("result3".parse::<Which>().is_err());
        assert_eq!(Which::Result2.to_string(), "result2");
    }
}
