//! Exact number types shared by every module: nonnegative big counts, exact
//! rationals and base-2 logarithms of positive quantities.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Count(BigUint);

impl Count {
    pub fn zero() -> Self {
        Count(BigUint::zero())
    }

    pub fn one() -> Self {
        Count(BigUint::one())
    }

    /// `2^k`.
    pub fn pow2(k: u64) -> Self {
        Count(BigUint::one() << k)
    }

    pub fn pow(base: u64, exp: u32) -> Self {
        Count(BigUint::from(base).pow(exp))
    }

    pub fn from_biguint(v: BigUint) -> Self {
        Count(v)
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn bits(&self) -> u64 {
        self.0.bits()
    }

    /// `⌊log₂ x⌋`, or `None` for zero.
    pub fn floor_log2(&self) -> Option<u64> {
        if self.is_zero() {
            None
        } else {
            Some(self.0.bits() - 1)
        }
    }

    pub fn checked_sub(&self, rhs: &Count) -> Result<Count> {
        if rhs.0 > self.0 {
            Err(Error::Underflow)
        } else {
            Ok(Count(&self.0 - &rhs.0))
        }
    }

    /// Exact division; `None` if `rhs` is zero or does not divide `self`.
    pub fn exact_div(&self, rhs: &Count) -> Option<Count> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.0.div_rem(&rhs.0);
        r.is_zero().then_some(Count(q))
    }

    pub fn div_ceil(&self, rhs: &Count) -> Count {
        Count(Integer::div_ceil(&self.0, &rhs.0))
    }

    pub fn div_floor(&self, rhs: &Count) -> Count {
        Count(&self.0 / &rhs.0)
    }

    pub fn rem(&self, rhs: &Count) -> Count {
        Count(&self.0 % &rhs.0)
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from_biguint(Sign::Plus, self.0.clone())
    }

    pub fn log2(&self) -> LogValue {
        LogValue::of_count(self)
    }
}

/// Serialized as a decimal string so that no precision is lost in JSON.
impl serde::Serialize for Count {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl From<u64> for Count {
    fn from(v: u64) -> Self {
        Count(BigUint::from(v))
    }
}

impl From<u32> for Count {
    fn from(v: u32) -> Self {
        Count(BigUint::from(v))
    }
}

impl From<usize> for Count {
    fn from(v: usize) -> Self {
        Count(BigUint::from(v))
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl std::str::FromStr for Count {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.parse::<BigUint>()
            .map(Count)
            .map_err(|_| Error::InvalidParams(format!("not a nonnegative integer: {s}")))
    }
}

impl Add for Count {
    type Output = Count;
    fn add(self, rhs: Count) -> Count {
        Count(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Count> for &'a Count {
    type Output = Count;
    fn add(self, rhs: &Count) -> Count {
        Count(&self.0 + &rhs.0)
    }
}

impl AddAssign for Count {
    fn add_assign(&mut self, rhs: Count) {
        self.0 += rhs.0;
    }
}

impl AddAssign<&Count> for Count {
    fn add_assign(&mut self, rhs: &Count) {
        self.0 += &rhs.0;
    }
}

impl Mul for Count {
    type Output = Count;
    fn mul(self, rhs: Count) -> Count {
        Count(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a Count> for &'a Count {
    type Output = Count;
    fn mul(self, rhs: &Count) -> Count {
        Count(&self.0 * &rhs.0)
    }
}

impl Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Count> for Count {
    fn sum<I: Iterator<Item = &'a Count>>(iter: I) -> Count {
        let mut acc = Count::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

/// Exact rational in lowest terms with a positive denominator. The numerator
/// carries a sign so that arguments like `-3/2` can be represented.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::Domain("rational with zero denominator".into()));
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    /// `numer / denom` for counts; the denominator must be positive.
    pub fn from_counts(numer: &Count, denom: &Count) -> Result<Self> {
        Rational::new(numer.to_bigint(), denom.to_bigint())
    }

    pub fn from_count(c: &Count) -> Self {
        Rational(BigRational::from_integer(c.to_bigint()))
    }

    pub fn from_i64(n: i64, d: i64) -> Result<Self> {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    /// The exact dyadic value of a finite double.
    pub fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(Rational)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// `⌊x⌋` clamped at zero.
    pub fn floor_nonneg(&self) -> Count {
        let f = self.floor();
        match f.to_biguint() {
            Some(v) if f.sign() != Sign::Minus => Count(v),
            _ => Count::zero(),
        }
    }

    pub fn log2(&self) -> LogValue {
        LogValue::of_rational(self)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

/// Serialized as the string `num/den`.
impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    /// Panics on division by zero, like the underlying big rational.
    fn div(self, rhs: &Rational) -> Rational {
        Rational(&self.0 / &rhs.0)
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

/// Smallest nonnegative integer `m` with `m ≥ x`.
pub fn ceil_plus(x: &Rational) -> Count {
    let c = x.0.ceil().to_integer();
    if c.sign() == Sign::Minus {
        Count::zero()
    } else {
        Count(c.magnitude().clone())
    }
}

/// `⌈(a)/2⌉⁺` for a signed integer numerator, the index shape that appears in
/// every degree sum.
pub fn ceil_half_plus(a: i64) -> u64 {
    if a <= 0 {
        0
    } else {
        (a as u64).div_ceil(2)
    }
}

/// Base-2 logarithm of a positive quantity. Zero maps to `-inf`, the only
/// non-finite value a `LogValue` takes.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct LogValue(f64);

impl LogValue {
    pub const NEG_INFINITY: LogValue = LogValue(f64::NEG_INFINITY);

    pub fn new(log2: f64) -> Self {
        LogValue(log2)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    /// Bit length plus the leading 64-bit word as mantissa; relative error is
    /// dominated by the `u64 → f64` rounding (about 2⁻⁵³).
    pub fn of_biguint(x: &BigUint) -> Self {
        if x.is_zero() {
            return LogValue::NEG_INFINITY;
        }
        let bits = x.bits();
        if bits <= 64 {
            return LogValue((x.to_u64().unwrap() as f64).log2());
        }
        let shift = bits - 64;
        let top = (x >> shift).to_u64().unwrap();
        LogValue((top as f64).log2() + shift as f64)
    }

    pub fn of_count(c: &Count) -> Self {
        Self::of_biguint(&c.0)
    }

    /// `-inf` for zero; `NaN` for negative rationals.
    pub fn of_rational(r: &Rational) -> Self {
        if r.numer().is_zero() {
            return LogValue::NEG_INFINITY;
        }
        if r.is_negative() {
            return LogValue(f64::NAN);
        }
        let n = Self::of_biguint(r.numer().magnitude()).0;
        let d = Self::of_biguint(r.denom().magnitude()).0;
        LogValue(n - d)
    }
}

impl PartialEq<f64> for LogValue {
    fn eq(&self, other: &f64) -> bool {
        self.0 == *other
    }
}

impl PartialOrd<f64> for LogValue {
    fn partial_cmp(&self, other: &f64) -> Option<Ordering> {
        self.0.partial_cmp(other)
    }
}

/// Finite values as numbers, `-inf` as `null`.
impl serde::Serialize for LogValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            s.serialize_f64(self.0)
        } else {
            s.serialize_none()
        }
    }
}

impl fmt::Display for LogValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_sig(self.0, 9))
    }
}

/// Render a double with `sig` significant digits, `%g` style: fixed notation
/// for decimal exponents in `[-4, sig)`, scientific otherwise, trailing zeros
/// removed.
pub fn fmt_sig(x: f64, sig: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sig = sig.max(1);
    let sci = format!("{:.*e}", sig - 1, x);
    let (mantissa, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    if exp < -4 || exp >= sig as i32 {
        let m = trim_zeros(mantissa);
        format!("{m}e{exp}")
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
