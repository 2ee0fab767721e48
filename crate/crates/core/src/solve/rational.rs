//! Exact rational values compared by cross-multiplication.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A nonnegative rational stored reduced, with positive denominator.
/// Comparison and equality never touch floating point.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct RationalValue {
    num: u64,
    den: u64,
}

impl RationalValue {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "denominator must be positive");
        let g = gcd(num, den).max(1);
        RationalValue {
            num: num / g,
            den: den / g,
        }
    }

    pub fn integer(n: u64) -> Self {
        RationalValue { num: n, den: 1 }
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    pub fn ceil(&self) -> u64 {
        self.num.div_ceil(self.den)
    }
}

impl Ord for RationalValue {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for RationalValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RationalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for RationalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for RationalValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<u64>().map_err(|e| e.to_string())?,
                d.trim().parse::<u64>().map_err(|e| e.to_string())?,
            ),
            None => (s.trim().parse::<u64>().map_err(|e| e.to_string())?, 1),
        };
        if den == 0 {
            return Err("denominator must be positive".into());
        }
        Ok(RationalValue::new(num, den))
    }
}

impl From<RationalValue> for String {
    fn from(r: RationalValue) -> String {
        r.to_string()
    }
}

impl TryFrom<String> for RationalValue {
    type Error = String;

    fn try_from(s: String) -> Result<Self, String> {
        s.parse()
    }
}
