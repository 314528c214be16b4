//! Exact rationals in canonical reduced form.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{MathError, Result};

/// An arbitrary-precision fraction.
///
/// The denominator is always positive and coprime to the numerator; zero is
/// stored as `0/1`. Structural equality is therefore numeric equality.
#[derive(Clone)]
pub struct Rational(Repr);

// Values whose reduced numerator and denominator both fit in an i64 are always
// `Small`; everything else is `Big`. Arithmetic on two `Small`s runs in i128
// and is promoted when the reduced result does not fit.
#[derive(Clone)]
enum Repr {
    Small { numer: i64, denom: i64 },
    Big(BigRational),
}

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(MathError::DivisionByZero);
        }
        Ok(Rational::from_i128(numer.into(), denom.into()))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(MathError::DivisionByZero);
        }
        Ok(Rational::from_big(BigRational::new(numer, denom)))
    }

    pub fn integer(value: i64) -> Self {
        Rational(Repr::Small { numer: value, denom: 1 })
    }

    pub fn zero() -> Self {
        Rational::integer(0)
    }

    pub fn one() -> Self {
        Rational::integer(1)
    }

    /// Reduces `numer/denom` (`denom != 0`).
    fn from_i128(numer: i128, denom: i128) -> Self {
        let g = numer.gcd(&denom);
        let (mut n, mut d) = (numer / g, denom / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(numer), Ok(denom)) => Rational(Repr::Small { numer, denom }),
            _ => Rational(Repr::Big(BigRational::new(n.into(), d.into()))),
        }
    }

    /// Takes an already reduced big rational.
    fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(numer), Some(denom)) => Rational(Repr::Small { numer, denom }),
            _ => Rational(Repr::Big(r)),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { numer, denom } => BigRational::new_raw((*numer).into(), (*denom).into()),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { numer: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small { numer: 1, denom: 1 })
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small { denom, .. } => *denom == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small { numer, .. } => *numer < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small { numer, .. } => (*numer).into(),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small { denom, .. } => (*denom).into(),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    /// The value as an `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small { numer, denom: 1 } => Some(*numer),
            _ => None,
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Result<Self> {
        match &self.0 {
            Repr::Small { numer: 0, .. } => Err(MathError::DivisionByZero),
            Repr::Small { numer, denom } => Ok(Rational::from_i128((*denom).into(), (*numer).into())),
            Repr::Big(r) => Ok(Rational::from_big(r.recip())),
        }
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    /// Integer power; `0^0` is `1`.
    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Rational::one(), |acc, _| &acc * self)
    }

    fn add_ref(&self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small { numer: a, denom: b }, Repr::Small { numer: c, denom: d }) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rational::from_i128(a * d + c * b, b * d)
            }
            _ => Rational::from_big(self.to_big() + rhs.to_big()),
        }
    }

    fn mul_ref(&self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small { numer: a, denom: b }, Repr::Small { numer: c, denom: d }) => {
                Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rational::from_big(self.to_big() * rhs.to_big()),
        }
    }

    fn neg_ref(&self) -> Rational {
        match &self.0 {
            Repr::Small { numer, denom } => match numer.checked_neg() {
                Some(numer) => Rational(Repr::Small { numer, denom: *denom }),
                None => Rational::from_i128(-(*numer as i128), (*denom).into()),
            },
            Repr::Big(r) => Rational::from_big(-r),
        }
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small { numer: a, denom: b }, Repr::Small { numer: c, denom: d }) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small { numer, denom } => {
                numer.hash(state);
                denom.hash(state);
            }
            Repr::Big(r) => r.hash(state),
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { numer: a, denom: b }, Repr::Small { numer: c, denom: d }) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $body(self, rhs)
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $body(&self, &rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, Rational::add_ref);
forward_binop!(Sub, sub, |a: &Rational, b: &Rational| a.add_ref(&b.neg_ref()));
forward_binop!(Mul, mul, Rational::mul_ref);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.neg_ref()
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        self.neg_ref()
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::integer(value)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { numer, denom: 1 } => write!(f, "{numer}"),
            Repr::Small { numer, denom } => write!(f, "{numer}/{denom}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `p` or `p/q` where `p` may carry a leading sign and `q` is a
/// positive integer.
impl FromStr for Rational {
    type Err = MathError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || MathError::InvalidRational(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let digits = num.strip_prefix(['-', '+']).unwrap_or(num);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let numer: BigInt = num.parse().map_err(|_| bad())?;
        let denom: BigInt = match den {
            None => BigInt::one(),
            Some(d) => {
                if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad());
                }
                d.parse().map_err(|_| bad())?
            }
        };
        Rational::from_bigints(numer, denom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn assert_canonical(r: &Rational) {
        assert!(r.denom() > BigInt::zero(), "{r:?} has non-positive denominator");
        assert!(r.numer().gcd(&r.denom()).is_one(), "{r:?} not reduced");
    }

    #[test]
    fn fraction_arithmetic() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
        assert_eq!(q(7, 2) * q(2, 7), Rational::one());
        let denominator = Rational::integer(3) - Rational::integer(2);
        assert_eq!(
            Rational::integer(3).checked_div(&denominator).unwrap(),
            Rational::integer(3)
        );
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(q(1, 2).checked_div(&Rational::zero()), Err(MathError::DivisionByZero));
        assert_eq!(Rational::zero().recip(), Err(MathError::DivisionByZero));
        assert_eq!(Rational::new(1, 0), Err(MathError::DivisionByZero));
        assert!("3/0".parse::<Rational>().is_err());
    }

    #[test]
    fn zero_is_unique() {
        let z = q(0, -5);
        assert_eq!(z, Rational::zero());
        assert_eq!(z.denom(), BigInt::one());
        assert_eq!(q(3, 4) - q(3, 4), Rational::zero());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("7/2".parse::<Rational>().unwrap(), q(7, 2));
        assert_eq!("-4/6".parse::<Rational>().unwrap(), q(-2, 3));
        assert_eq!(q(-2, 3).to_string(), "-2/3");
        assert_eq!(q(6, 3).to_string(), "2");
        for bad in ["", "/2", "1/", "1/-2", "a", "1.5", "--1", "1/2/3"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn canonical_after_every_operation() {
        // exhaustive over a small grid of numerators and denominators
        let values: Vec<Rational> = (-6..=6)
            .flat_map(|n| (-6..=6).filter(|d| *d != 0).map(move |d| q(n, d)))
            .collect();
        for a in &values {
            assert_canonical(a);
            for b in &values {
                assert_canonical(&(a + b));
                assert_canonical(&(a - b));
                assert_canonical(&(a * b));
                if !b.is_zero() {
                    assert_canonical(&a.checked_div(b).unwrap());
                }
            }
        }
    }

    #[test]
    fn no_overflow_at_word_boundaries() {
        let big = Rational::integer(i64::MAX);
        let sum = &big + &big;
        assert_eq!(sum.to_string(), "18446744073709551614");
        assert_eq!(sum.to_i64(), None);
        // demotes back to the small representation once it fits again
        assert_eq!(&sum - &big, big);
        let min = Rational::integer(i64::MIN);
        assert_eq!((-&min).to_string(), "9223372036854775808");
        assert_eq!(-(-&min), min);
        let tiny = Rational::new(1, i64::MAX).unwrap();
        let product = &tiny * &tiny;
        assert_eq!(product.denom(), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        assert_eq!(product.recip().unwrap().recip().unwrap(), product);
        assert!(product < tiny && Rational::zero() < product);
        assert_eq!(
            "123456789012345678901234567890/2"
                .parse::<Rational>()
                .unwrap()
                .to_string(),
            "61728394506172839450617283945"
        );
    }

    #[test]
    fn ordering_is_numeric() {
        let mut v = [
            q(1, 2),
            q(-3, 4),
            Rational::integer(i64::MAX) + Rational::one(),
            q(1, 3),
            Rational::zero(),
        ];
        v.sort();
        let text: Vec<String> = v.iter().map(ToString::to_string).collect();
        assert_eq!(text, ["-3/4", "0", "1/3", "1/2", "9223372036854775808"]);
    }
}
