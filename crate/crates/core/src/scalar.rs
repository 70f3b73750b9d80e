//! Arithmetic backends for the grid kernel.
//!
//! Every quantity the stepping kernel touches is computed in one of two
//! interchangeable scalar types: plain `f64`, or arbitrary-precision
//! rationals ([`BigRational`]) when a trace has to be verified digit for
//! digit (a grid width like 0.1 has no finite binary representation, so
//! float traces can only match a hand-computed table approximately).
//!
//! The trait exposes exactly the operations the kernel needs; everything
//! else stays out so the two backends cannot drift apart.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Relative snap width for float grid comparisons.
///
/// Grid quantities are products of a handful of factors, so their relative
/// rounding error stays within a few ulp (~1e-15), while genuine decision
/// margins in a non-degenerate trace are many orders of magnitude larger.
/// 1e-9 sits safely between the two regimes.
pub const GRID_EPSILON: f64 = 1e-9;

/// Failed to read a numeric literal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecimalParseError {
    #[error("empty numeric literal")]
    Empty,
    #[error("invalid numeric literal `{0}`")]
    Invalid(String),
}

/// A scalar the stepping kernel can run on.
///
/// Implemented for `f64` (fast, approximate) and [`BigRational`] (exact).
pub trait GridScalar:
    Clone
    + PartialEq
    + PartialOrd
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    fn zero() -> Self;

    fn from_u64(n: u64) -> Self;

    /// Exact division by two.
    fn half(&self) -> Self;

    fn abs(&self) -> Self;

    /// Strictly below zero. Decision branches treat `p >= 0` as the
    /// complement, so signed zeros fall on the non-negative side.
    fn is_negative_value(&self) -> bool;

    /// Rejects NaN and infinities; always true for rationals.
    fn is_finite_value(&self) -> bool;

    fn to_f64(&self) -> f64;

    /// Number of whole grid steps of width `step` that fit in `len`,
    /// i.e. floor(len/step), snapped so that float noise cannot lose the
    /// last step when `len` is an exact multiple (6.0/0.1 must be 60).
    fn whole_steps(len: &Self, step: &Self) -> u64;

    /// Compares two grid quantities, treating values within the float
    /// snap width as equal. Exact for rationals.
    fn grid_cmp(&self, other: &Self) -> Ordering;

    /// Parses a plain decimal literal such as `8`, `-0.25` or `6.5`.
    fn parse_decimal(text: &str) -> Result<Self, DecimalParseError>;

    /// Decimal rendering: shortest round-trip form for floats, exact
    /// expansion for rationals.
    fn to_decimal_string(&self) -> String;
}

impl GridScalar for f64 {
    fn zero() -> Self {
        0.0
    }

    fn from_u64(n: u64) -> Self {
        n as f64
    }

    fn half(&self) -> Self {
        self / 2.0
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn is_negative_value(&self) -> bool {
        *self < 0.0
    }

    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn whole_steps(len: &Self, step: &Self) -> u64 {
        let q = len / step;
        let r = q.round();
        if (q - r).abs() <= GRID_EPSILON * r.abs().max(1.0) {
            r as u64
        } else {
            q.floor() as u64
        }
    }

    fn grid_cmp(&self, other: &Self) -> Ordering {
        let scale = f64::abs(*self).max(f64::abs(*other)).max(1.0);
        if f64::abs(self - other) <= GRID_EPSILON * scale {
            Ordering::Equal
        } else if self < other {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    fn parse_decimal(text: &str) -> Result<Self, DecimalParseError> {
        if text.is_empty() {
            return Err(DecimalParseError::Empty);
        }
        text.parse::<f64>()
            .map_err(|_| DecimalParseError::Invalid(text.to_owned()))
    }

    fn to_decimal_string(&self) -> String {
        format!("{self}")
    }
}

impl GridScalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }

    fn from_u64(n: u64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn half(&self) -> Self {
        self / BigRational::from_integer(BigInt::from(2))
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn is_negative_value(&self) -> bool {
        Signed::is_negative(self)
    }

    fn is_finite_value(&self) -> bool {
        true
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn whole_steps(len: &Self, step: &Self) -> u64 {
        (len / step)
            .floor()
            .to_integer()
            .to_u64()
            .expect("grid span fits in u64")
    }

    fn grid_cmp(&self, other: &Self) -> Ordering {
        Ord::cmp(self, other)
    }

    fn parse_decimal(text: &str) -> Result<Self, DecimalParseError> {
        parse_decimal_rational(text)
    }

    fn to_decimal_string(&self) -> String {
        format_exact_decimal(self)
    }
}

fn parse_decimal_rational(text: &str) -> Result<BigRational, DecimalParseError> {
    if text.is_empty() {
        return Err(DecimalParseError::Empty);
    }
    let invalid = || DecimalParseError::Invalid(text.to_owned());

    // `n/d` form, emitted only as a fallback for non-decimal rationals.
    if let Some((n, d)) = text.split_once('/') {
        let numer: BigInt = n.parse().map_err(|_| invalid())?;
        let denom: BigInt = d.parse().map_err(|_| invalid())?;
        if denom.is_zero() {
            return Err(invalid());
        }
        return Ok(BigRational::new(numer, denom));
    }

    let (negative, digits) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(invalid());
    }
    if !int_part.bytes().all(|b| b.is_ascii_digit())
        || !frac_part.bytes().all(|b| b.is_ascii_digit())
    {
        return Err(invalid());
    }

    let mut numer: BigInt = if int_part.is_empty() {
        Zero::zero()
    } else {
        int_part.parse().map_err(|_| invalid())?
    };
    let scale = BigInt::from(10u8).pow(frac_part.len() as u32);
    numer *= &scale;
    if !frac_part.is_empty() {
        numer += frac_part.parse::<BigInt>().map_err(|_| invalid())?;
    }
    if negative {
        numer = -numer;
    }
    Ok(BigRational::new(numer, scale))
}

/// Renders a rational exactly. Values reachable from decimal inputs always
/// have 2^s*5^t denominators and print as finite decimals; anything else
/// falls back to `n/d`, which `parse_decimal` also accepts.
fn format_exact_decimal(value: &BigRational) -> String {
    let two = BigInt::from(2u8);
    let five = BigInt::from(5u8);
    let mut denom = value.denom().clone();
    let mut twos = 0u32;
    let mut fives = 0u32;
    while (&denom % &two).is_zero() {
        denom /= &two;
        twos += 1;
    }
    while (&denom % &five).is_zero() {
        denom /= &five;
        fives += 1;
    }
    if !denom.is_one() {
        return format!("{}/{}", value.numer(), value.denom());
    }

    let places = twos.max(fives);
    let scaled = value.numer() * BigInt::from(10u8).pow(places) / value.denom();
    let negative = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let places = places as usize;

    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if places == 0 {
        out.push_str(&digits);
        return out;
    }
    if digits.len() > places {
        let (int_digits, frac_digits) = digits.split_at(digits.len() - places);
        out.push_str(int_digits);
        out.push('.');
        out.push_str(frac_digits);
    } else {
        out.push_str("0.");
        for _ in 0..(places - digits.len()) {
            out.push('0');
        }
        out.push_str(&digits);
    }
    out
}
