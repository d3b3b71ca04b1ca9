use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use thiserror::Error;

/// Largest admissible accumulated path weight, 2^62 - 1. Graph ingest rejects
/// inputs with (n + 1) * bound > W_MAX, so every relaxation candidate (a path
/// weight plus one edge) stays strictly below 2 * W_MAX < i64::MAX and the
/// kernels can add finite parts without per-step checks.
pub const W_MAX: i64 = (1 << 62) - 1;

/// Extended edge or distance weight: a finite i64 or positive infinity.
///
/// The derived ordering puts `Finite` values in numeric order below
/// `Infinity`, which is exactly the order the relaxation kernels need.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Weight {
    Finite(i64),
    Infinity,
}

impl Weight {
    pub const ZERO: Weight = Weight::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, Weight::Finite(_))
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Weight::Infinity)
    }

    /// The finite value, if any.
    pub fn finite(self) -> Option<i64> {
        match self {
            Weight::Finite(v) => Some(v),
            Weight::Infinity => None,
        }
    }
}

impl Add for Weight {
    type Output = Weight;

    /// Saturating-at-infinity addition. Panics if two finite parts overflow
    /// i64 or leave [-W_MAX, W_MAX]; with the ingest bound in force that
    /// indicates a caller bug, not bad input.
    fn add(self, rhs: Weight) -> Weight {
        match (self, rhs) {
            (Weight::Finite(a), Weight::Finite(b)) => {
                let sum = a.checked_add(b).expect("weight addition overflowed i64");
                assert!(
                    sum.abs() <= W_MAX,
                    "weight sum {sum} escapes [-W_MAX, W_MAX]; the ingest bound was bypassed"
                );
                Weight::Finite(sum)
            }
            _ => Weight::Infinity,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Finite(v) => write!(f, "{v}"),
            Weight::Infinity => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid weight token {token:?} (expected a signed decimal or \"inf\")")]
pub struct ParseWeightError {
    pub token: String,
}

impl FromStr for Weight {
    type Err = ParseWeightError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            return Ok(Weight::Infinity);
        }
        s.parse::<i64>()
            .map(Weight::Finite)
            .map_err(|_| ParseWeightError {
                token: s.to_string(),
            })
    }
}
