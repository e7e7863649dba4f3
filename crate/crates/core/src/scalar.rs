//! Exact coefficient fields.
//!
//! Everything in this crate is an exact polynomial identity, so the scalar
//! abstraction is deliberately narrow: it is implemented for `Ratio<T>` over
//! signed integer types and nothing else. Floating point types do not
//! implement [`Scalar`].

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

/// An exact field of characteristic zero, represented as fractions over an
/// integer type.
pub trait Scalar:
    Clone + fmt::Debug + fmt::Display + Eq + Ord + Hash + Num + Signed + Send + Sync + 'static
{
    type Int: Clone + fmt::Debug + fmt::Display + Integer + Signed + Hash;

    fn from_int(n: i64) -> Self;
    fn from_integer(n: Self::Int) -> Self;
    fn numer(&self) -> &Self::Int;
    fn denom(&self) -> &Self::Int;
    /// Parse a non-negative decimal integer literal.
    fn parse_integer(digits: &str) -> Option<Self::Int>;
    /// Small-magnitude integer view, used by bounded searches.
    fn to_i64(&self) -> Option<i64>;
    fn int_to_i64(n: &Self::Int) -> Option<i64>;
}

macro_rules! impl_scalar_for_ratio {
    ($int:ty) => {
        impl Scalar for Ratio<$int> {
            type Int = $int;

            fn from_int(n: i64) -> Self {
                Ratio::from_integer(<$int>::from_i64(n).expect("integer fits"))
            }
            fn from_integer(n: $int) -> Self {
                Ratio::from_integer(n)
            }
            fn numer(&self) -> &$int {
                Ratio::numer(self)
            }
            fn denom(&self) -> &$int {
                Ratio::denom(self)
            }
            fn parse_integer(digits: &str) -> Option<$int> {
                <$int>::from_str_radix(digits, 10).ok()
            }
            fn to_i64(&self) -> Option<i64> {
                if self.is_integer() {
                    Ratio::numer(self).to_i64()
                } else {
                    None
                }
            }
            fn int_to_i64(n: &$int) -> Option<i64> {
                n.to_i64()
            }
        }
    };
}

impl_scalar_for_ratio!(BigInt);
impl_scalar_for_ratio!(i64);
impl_scalar_for_ratio!(i128);

/// `n!` as a scalar.
pub fn factorial<C: Scalar>(n: u32) -> C {
    (1..=n).fold(C::one(), |acc, i| acc * C::from_int(i as i64))
}

/// Binomial coefficient as a scalar.
pub fn binomial<C: Scalar>(n: u32, k: u32) -> C {
    if k > n {
        return C::zero();
    }
    factorial::<C>(n) / (factorial::<C>(k) * factorial::<C>(n - k))
}

/// Least common multiple of the denominators and gcd of the numerators,
/// returned as the scale that makes `coeffs` a primitive integer vector.
pub fn primitive_scale<'a, C: Scalar, I>(coeffs: I) -> C
where
    I: IntoIterator<Item = &'a C>,
{
    let mut den = C::Int::one();
    let mut num = C::Int::zero();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        den = den.lcm(c.denom());
        num = num.gcd(c.numer());
    }
    if num.is_zero() {
        return C::one();
    }
    C::from_integer(den) / C::from_integer(num)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(factorial::<Rational>(5), Rational::from_int(120));
        assert_eq!(binomial::<Rational>(5, 2), Rational::from_int(10));
        assert_eq!(binomial::<Rational>(3, 4), Rational::zero());
    }

    #[test]
    fn primitive_scale_clears_denominators() {
        let v = [
            Rational::new(1.into(), 2.into()),
            Rational::new((-3).into(), 4.into()),
        ];
        let s = primitive_scale(v.iter());
        assert_eq!(&v[0] * &s, Rational::from_int(2));
        assert_eq!(&v[1] * &s, Rational::from_int(-3));
    }

    #[test]
    fn small_ratio_types_are_scalars() {
        let a = Ratio::<i64>::from_int(3) / Ratio::<i64>::from_int(6);
        assert_eq!(a, Ratio::new(1, 2));
        assert_eq!(Ratio::<i128>::parse_integer("12"), Some(12));
    }
}
