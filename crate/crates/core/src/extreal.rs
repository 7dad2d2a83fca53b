//! Extended nonnegative rationals `[0, +inf]`, the value domain of every
//! pseudometric in this crate.
//!
//! All comparisons are exact; `+inf` absorbs addition. Values are constructed
//! through the checked constructors so negativity cannot sneak in.

use num::{BigInt, BigRational, Signed, Zero};
use serde::{Serialize, Serializer};
use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::Add;

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ExtReal {
    Finite(BigRational),
    Infinite,
}

impl ExtReal {
    pub fn zero() -> Self {
        ExtReal::Finite(BigRational::zero())
    }

    /// Wrap a rational, which must be nonnegative.
    pub fn finite(q: BigRational) -> Self {
        assert!(!q.is_negative(), "ExtReal requires nonnegative values, got {q}");
        ExtReal::Finite(q)
    }

    pub fn from_int(n: u64) -> Self {
        ExtReal::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        ExtReal::Finite(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtReal::Finite(q) if q.is_zero())
    }

    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            ExtReal::Finite(q) => Some(q),
            ExtReal::Infinite => None,
        }
    }

    /// |a - b| as an ExtReal (always finite).
    pub fn abs_diff(a: &BigRational, b: &BigRational) -> Self {
        let d = a - b;
        ExtReal::Finite(if d.is_negative() { -d } else { d })
    }

    /// Multiply by a positive rational scalar; `inf` stays `inf`.
    pub fn scale(&self, c: &BigRational) -> Self {
        assert!(c.is_positive(), "scale factor must be positive");
        match self {
            ExtReal::Finite(q) => ExtReal::Finite(q * c),
            ExtReal::Infinite => ExtReal::Infinite,
        }
    }
}

impl Ord for ExtReal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => a.cmp(b),
            (ExtReal::Finite(_), ExtReal::Infinite) => Ordering::Less,
            (ExtReal::Infinite, ExtReal::Finite(_)) => Ordering::Greater,
            (ExtReal::Infinite, ExtReal::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for ExtReal {
    type Output = ExtReal;
    fn add(self, rhs: ExtReal) -> ExtReal {
        match (self, rhs) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => ExtReal::Finite(a + b),
            _ => ExtReal::Infinite,
        }
    }
}

impl<'a> Add<&'a ExtReal> for &'a ExtReal {
    type Output = ExtReal;
    fn add(self, rhs: &'a ExtReal) -> ExtReal {
        match (self, rhs) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => ExtReal::Finite(a + b),
            _ => ExtReal::Infinite,
        }
    }
}

impl Sum for ExtReal {
    fn sum<I: Iterator<Item = ExtReal>>(iter: I) -> ExtReal {
        iter.fold(ExtReal::zero(), |a, b| a + b)
    }
}

/// Exact decimal-free rendering: integers without a denominator, otherwise `p/q`.
pub fn ratio_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::Finite(q) => write!(f, "{}", ratio_string(q)),
            ExtReal::Infinite => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for ExtReal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn infinity_absorbs_addition() {
        let x = ExtReal::from_int(3) + ExtReal::Infinite;
        assert_eq!(x, ExtReal::Infinite);
        assert_eq!(ExtReal::Infinite + ExtReal::Infinite, ExtReal::Infinite);
    }

    #[test]
    fn comparisons_are_total() {
        assert!(ExtReal::from_int(2) < ExtReal::from_ratio(5, 2));
        assert!(ExtReal::from_ratio(5, 2) < ExtReal::Infinite);
        assert_eq!(
            ExtReal::from_ratio(4, 2),
            ExtReal::Finite(BigRational::from_integer(BigInt::from(2)))
        );
    }

    #[test]
    fn abs_diff_and_display() {
        assert_eq!(ExtReal::abs_diff(&q(1, 2), &q(2, 1)), ExtReal::from_ratio(3, 2));
        assert_eq!(ExtReal::from_ratio(3, 2).to_string(), "3/2");
        assert_eq!(ExtReal::from_int(7).to_string(), "7");
        assert_eq!(ExtReal::Infinite.to_string(), "inf");
    }

    #[test]
    fn min_max_via_ord() {
        let a = ExtReal::from_int(1);
        let b = ExtReal::from_ratio(1, 2);
        assert_eq!(a.clone().min(b.clone()), b);
        assert_eq!(a.clone().max(ExtReal::Infinite), ExtReal::Infinite);
        assert_eq!(a.scale(&BigRational::one()), ExtReal::from_int(1));
    }

    #[test]
    #[should_panic(expected = "nonnegative")]
    fn negative_rejected() {
        let _ = ExtReal::finite(q(-1, 2));
    }
}
