//! Scalar field abstraction.
//!
//! Every inversion path in this crate is generic over [`Scalar`], so the same
//! algorithm code runs over exact rationals (the reference semantics) and over
//! `f64` (the benchmarking / residual semantics). [`Rational`] is an
//! arbitrary-precision rational kept in canonical form: fully reduced,
//! denominator strictly positive, zero represented as `0/1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use thiserror::Error;

/// Identifies which arithmetic backs a [`Scalar`] implementation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldTag {
    /// Arbitrary-precision rational arithmetic; every operation is exact.
    Exact,
    /// IEEE-754 double precision.
    Float64,
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Exact => write!(f, "exact"),
            FieldTag::Float64 => write!(f, "f64"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("ParseError: {0}")]
    Parse(String),
    #[error("DivisionByZero")]
    DivisionByZero,
    #[error("ZeroDenominator")]
    ZeroDenominator,
}

/// The arithmetic interface shared by the exact and float paths.
///
/// `Zero`/`One` supply the identities and `is_zero`; the operator bounds give
/// full field arithmetic by value. Division by zero is the caller's
/// responsibility: algorithm code checks `is_zero()` on every data-dependent
/// divisor first (that is where the typed breakdown errors come from), or uses
/// [`Scalar::checked_div`].
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    const FIELD: FieldTag;

    fn from_int(v: i64) -> Self;

    /// Nearest-double conversion (exact for `f64` itself).
    fn to_f64(&self) -> f64;

    fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        if rhs.is_zero() {
            Err(ScalarError::DivisionByZero)
        } else {
            Ok(self.clone() / rhs.clone())
        }
    }

    fn recip(&self) -> Result<Self, ScalarError> {
        Self::one().checked_div(self)
    }
}

/// Arbitrary-precision rational in canonical form.
///
/// Canonical means gcd(num, den) = 1, den > 0, and zero is `0/1`. Every
/// constructor and arithmetic operation restores this form, so structural
/// equality is value equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den`, rejecting a zero denominator.
    pub fn new(num: i64, den: i64) -> Result<Self, ScalarError> {
        if den == 0 {
            return Err(ScalarError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    pub fn from_int(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }
}

impl fmt::Display for Rational {
    /// `num/den`, with the `/den` omitted for integers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = ScalarError;

    /// Accepts `num`, `num/den`, and decimal forms with an optional exponent
    /// (`-2.5`, `1.25e-3`); decimals parse exactly.
    fn from_str(s: &str) -> Result<Self, ScalarError> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ScalarError::Parse("empty scalar".into()));
        }
        if let Some((num, den)) = s.split_once('/') {
            let num: BigInt = num
                .trim()
                .parse()
                .map_err(|_| ScalarError::Parse(format!("bad numerator in {s:?}")))?;
            let den: BigInt = den
                .trim()
                .parse()
                .map_err(|_| ScalarError::Parse(format!("bad denominator in {s:?}")))?;
            return Rational::from_big(num, den);
        }
        // Decimal / integer, optional exponent.
        let (mantissa, exp) = match s.split_once(['e', 'E']) {
            Some((m, e)) => {
                let exp: i64 = e
                    .parse()
                    .map_err(|_| ScalarError::Parse(format!("bad exponent in {s:?}")))?;
                (m, exp)
            }
            None => (s, 0),
        };
        let (int_part, frac_part) = match mantissa.split_once('.') {
            Some((i, f)) => (i, f),
            None => (mantissa, ""),
        };
        if frac_part.contains(['+', '-']) {
            return Err(ScalarError::Parse(format!("bad decimal {s:?}")));
        }
        let digits = format!("{int_part}{frac_part}");
        if digits.is_empty() || digits == "-" || digits == "+" {
            return Err(ScalarError::Parse(format!("bad scalar {s:?}")));
        }
        let num: BigInt = digits
            .parse()
            .map_err(|_| ScalarError::Parse(format!("bad scalar {s:?}")))?;
        let scale = exp - frac_part.len() as i64;
        let ten = BigInt::from(10);
        if scale >= 0 {
            Ok(Rational(BigRational::from_integer(num * ten.pow(scale as u32))))
        } else {
            Rational::from_big(num, ten.pow((-scale) as u32))
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(BigRational::one())
    }
}

impl Scalar for Rational {
    const FIELD: FieldTag = FieldTag::Exact;

    fn from_int(v: i64) -> Self {
        Rational::from_int(v)
    }

    fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            // Out-of-range magnitudes saturate through the sign.
            if self.0.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        })
    }
}

impl Scalar for f64 {
    const FIELD: FieldTag = FieldTag::Float64;

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Serialize for Rational {
    /// Integers that fit in `i64` serialize as JSON numbers, everything else
    /// as a `"num/den"` string.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.is_integer() {
            if let Some(v) = self.numer().to_i64() {
                return serializer.serialize_i64(v);
            }
        }
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    /// Accepts JSON integers and `"num/den"` / decimal strings. JSON floats
    /// are rejected: their decimal rendering hides rounding, and this type
    /// promises exactness.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl serde::de::Visitor<'_> for V {
            type Value = Rational;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "an integer or a \"num/den\" string")
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<Rational, E> {
                Ok(Rational::from_int(v))
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<Rational, E> {
                Ok(Rational(BigRational::from_integer(BigInt::from(v))))
            }
            fn visit_f64<E: serde::de::Error>(self, _: f64) -> Result<Rational, E> {
                Err(E::custom(
                    "floating-point literals are not accepted for exact scalars; \
                     use an integer or a \"num/den\" string",
                ))
            }
            fn visit_str<E: serde::de::Error>(self, s: &str) -> Result<Rational, E> {
                s.parse().map_err(|e| E::custom(format!("{e}")))
            }
        }
        deserializer.deserialize_any(V)
    }
}

/// Renders a double with 17 significant digits (enough to round-trip).
pub fn format_f64_full(x: f64) -> String {
    format!("{x:.16e}")
}
