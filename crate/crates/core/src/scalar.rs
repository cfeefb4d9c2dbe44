//! Scalar types shared by every monoid in the crate.
//!
//! Monoid elements live in `N_0^n`, so all element arithmetic is generic over
//! an unsigned integer type implementing [`Weight`]. Machine integers are the
//! fast path; [`num_bigint::BigUint`] gives arbitrary precision. Ratios that
//! come out of length sets and semi-length envelopes use [`Rational`].

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_rational::Ratio;
use num_traits::{CheckedSub, FromPrimitive, NumAssignOps, ToPrimitive, Unsigned};

/// Nonnegative integer coordinate of a monoid element.
pub trait Weight:
    Clone
    + Ord
    + Hash
    + Debug
    + Display
    + Unsigned
    + NumAssignOps
    + CheckedSub
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// Converts a small count into a weight.
    ///
    /// Every `Weight` type can hold the counts used inside this crate
    /// (multiplicities, degrees, box bounds), so this never fails in practice.
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count does not fit the weight type")
    }

    /// Lossy conversion used only for reporting sizes; saturates.
    fn to_count(&self) -> usize {
        self.to_usize().unwrap_or(usize::MAX)
    }
}

impl<T> Weight for T where
    T: Clone
        + Ord
        + Hash
        + Debug
        + Display
        + Unsigned
        + NumAssignOps
        + CheckedSub
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Exact rational used for elasticities and semi-length optimisation.
pub type Rational = Ratio<i64>;

/// Formats a rational as `p/q` in lowest terms with the sign on `p`.
///
/// Integers keep their denominator (`2/1`), so every rational in the JSON
/// outputs has the same shape.
pub fn format_rational(r: &Rational) -> String {
    let r = r.reduced();
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses the `p/q` (or bare integer) form produced by [`format_rational`].
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().ok()?;
            let q: i64 = q.trim().parse().ok()?;
            if q == 0 {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => s.parse::<i64>().ok().map(Rational::from_integer),
    }
}

pub(crate) mod serde_rational {
    use super::{format_rational, Rational};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_print_in_lowest_terms() {
        assert_eq!(format_rational(&Rational::new(14, 8)), "7/4");
        assert_eq!(format_rational(&Rational::new(-3, 6)), "-1/2");
        assert_eq!(format_rational(&Rational::new(3, -6)), "-1/2");
        assert_eq!(format_rational(&Rational::from_integer(2)), "2/1");
    }

    #[test]
    fn rationals_round_trip() {
        for (p, q) in [(7, 4), (5, 2), (-1, 3), (0, 1)] {
            let r = Rational::new(p, q);
            assert_eq!(parse_rational(&format_rational(&r)), Some(r));
        }
        assert_eq!(parse_rational("3"), Some(Rational::from_integer(3)));
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn counts_convert_for_big_weights() {
        let w = <num_bigint::BigUint as Weight>::from_count(42);
        assert_eq!(w.to_count(), 42);
        assert_eq!(<u32 as Weight>::from_count(7), 7);
    }
}
