//! Exact field arithmetic: arbitrary-precision rationals and prime fields GF(p).
//!
//! A [`Scalar`] always knows which field it lives in. Mixing scalars from two
//! different fields is a bug in the caller: the `checked_*` methods report it
//! as [`Error::FieldMismatch`], the operator impls panic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest modulus accepted for prime fields. Residue products are formed in
/// `u128`, so anything below 2^63 would work; desk-scale work never needs more.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

/// The coefficient field: rationals (characteristic 0) or GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// GF(p), rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::Invalid(format!("modulus {p} exceeds {MAX_PRIME}")));
        }
        if !is_prime(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.into())),
            FieldSpec::PrimeField(p) => Scalar::Mod(Residue::new(n.rem_euclid(p as i64) as u64, p)),
        }
    }

    pub fn from_u64(self, n: u64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.into())),
            FieldSpec::PrimeField(p) => Scalar::Mod(Residue::new(n % p, p)),
        }
    }

    /// The image of the integer `n` in this field.
    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::PrimeField(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                Scalar::Mod(Residue::new(r.to_u64().expect("residue fits"), p))
            }
        }
    }

    /// `num / den` as a field element.
    pub fn from_ratio(self, num: i64, den: i64) -> Result<Scalar> {
        self.from_i64(num).checked_div(&self.from_i64(den))
    }

    /// Binomial coefficient C(n, k) reduced into the field.
    pub fn binomial(self, n: u64, k: u64) -> Scalar {
        if k > n {
            return self.zero();
        }
        let k = k.min(n - k);
        let mut acc = BigInt::one();
        for i in 0..k {
            acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        self.from_bigint(&acc)
    }

    /// `1/k!`, or `None` when k! vanishes in the field.
    pub fn inverse_factorial(self, k: u64) -> Option<Scalar> {
        let mut f = BigInt::one();
        for i in 2..=k {
            f *= BigInt::from(i);
        }
        self.from_bigint(&f).inverse().ok()
    }

    /// Parse a scalar literal in this field. See [`Scalar::parse`].
    pub fn parse(self, text: &str) -> Result<Scalar> {
        Scalar::parse(text, self)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        match s.strip_prefix("Fp:") {
            Some(p) => {
                let p: u64 = p
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad field modulus in {s:?}")))?;
                FieldSpec::prime(p)
            }
            None => Err(Error::Parse(format!(
                "unknown field {s:?} (expected \"Q\" or \"Fp:<p>\")"
            ))),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of GF(p), stored canonically in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    fn new(value: u64, modulus: u64) -> Self {
        debug_assert!(value < modulus);
        Residue { value, modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    fn mul(self, other: Residue) -> Residue {
        let v = (self.value as u128 * other.value as u128) % self.modulus as u128;
        Residue::new(v as u64, self.modulus)
    }

    fn pow(self, mut e: u64) -> Residue {
        let mut base = self;
        let mut acc = Residue::new(1 % self.modulus, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }
}

/// An exact field element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// Reduced fraction with positive denominator.
    Rational(BigRational),
    Mod(Residue),
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Mod(r) => FieldSpec::PrimeField(r.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Mod(r) => r.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Mod(r) => r.value == 1,
        }
    }

    fn mismatch(&self, other: &Scalar) -> Error {
        Error::FieldMismatch {
            left: self.field(),
            right: other.field(),
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (Scalar::Mod(a), Scalar::Mod(b)) if a.modulus == b.modulus => {
                let v = (a.value + b.value) % a.modulus;
                Ok(Scalar::Mod(Residue::new(v, a.modulus)))
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Mod(a), Scalar::Mod(b)) if a.modulus == b.modulus => Ok(Scalar::Mod(a.mul(*b))),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        if self.field() != other.field() {
            return Err(self.mismatch(other));
        }
        self.checked_mul(&other.inverse()?)
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            // Fermat: a^(p-2) = a^-1
            Scalar::Mod(r) => Scalar::Mod(r.pow(r.modulus - 2)),
        })
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Mod(r) => Scalar::Mod(Residue::new((r.modulus - r.value) % r.modulus, r.modulus)),
        }
    }

    pub fn pow(&self, e: u64) -> Scalar {
        match self {
            Scalar::Rational(q) => {
                let mut acc = BigRational::one();
                for _ in 0..e {
                    acc *= q;
                }
                Scalar::Rational(acc)
            }
            Scalar::Mod(r) => Scalar::Mod(r.pow(e)),
        }
    }

    /// Parse `<int>` or `<int>/<int>` into the given field. A leading `-`
    /// (or U+2212) is accepted on the numerator; fractions are accepted in
    /// GF(p) whenever the denominator is invertible there.
    pub fn parse(text: &str, field: FieldSpec) -> Result<Scalar> {
        let t = text.trim().replace('\u{2212}', "-");
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (t.as_str(), None),
        };
        let num = parse_int(num, text)?;
        let den = match den {
            Some(d) => {
                let d = parse_int(d, text)?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {text:?}")));
                }
                d
            }
            None => BigInt::one(),
        };
        match field {
            FieldSpec::Rationals => Ok(Scalar::Rational(BigRational::new(num, den))),
            FieldSpec::PrimeField(_) => {
                let d = field.from_bigint(&den);
                if d.is_zero() {
                    return Err(Error::Parse(format!(
                        "denominator of {text:?} vanishes in {field}"
                    )));
                }
                field.from_bigint(&num).checked_div(&d)
            }
        }
    }

    /// Numerator and denominator when this is a rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Mod(_) => None,
        }
    }
}

fn parse_int(s: &str, whole: &str) -> Result<BigInt> {
    let digits = s.strip_prefix('+').unwrap_or(s);
    let body = digits.strip_prefix('-').unwrap_or(digits);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("malformed scalar {whole:?}")));
    }
    BigInt::from_str(digits).map_err(|_| Error::Parse(format!("malformed scalar {whole:?}")))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Mod(r) => write!(f, "{}", r.value),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Scalar {
        Scalar::parse(s, FieldSpec::Rationals).unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(q("1/2") + q("1/3"), q("5/6"));
    }

    #[test]
    fn gf2_one_plus_one() {
        let f = FieldSpec::prime(2).unwrap();
        assert!((f.one() + f.one()).is_zero());
    }

    #[test]
    fn gf7_inverse_of_three() {
        let f = FieldSpec::prime(7).unwrap();
        assert_eq!(f.from_i64(3).inverse().unwrap(), f.from_i64(5));
    }

    #[test]
    fn characteristic_values() {
        assert_eq!(FieldSpec::Rationals.characteristic(), 0);
        assert_eq!(FieldSpec::prime(2).unwrap().characteristic(), 2);
        assert_eq!(FieldSpec::prime(7).unwrap().characteristic(), 7);
    }

    #[test]
    fn parse_examples() {
        assert_eq!(q("\u{2212}3/6").to_string(), "-1/2");
        assert_eq!(q("-3/6").to_string(), "-1/2");
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(Scalar::parse("9", f7).unwrap().to_string(), "2");
        assert_eq!(q("0").to_string(), "0");
        assert!(q("0").is_zero());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Scalar::parse("1/0", FieldSpec::Rationals), Err(Error::Parse(_))));
        assert!(matches!(Scalar::parse("abc", FieldSpec::Rationals), Err(Error::Parse(_))));
        assert!(matches!(Scalar::parse("", FieldSpec::Rationals), Err(Error::Parse(_))));
        assert!(matches!(Scalar::parse("1/-", FieldSpec::Rationals), Err(Error::Parse(_))));
        let f7 = FieldSpec::prime(7).unwrap();
        assert!(Scalar::parse("1/7", f7).is_err());
        assert_eq!(Scalar::parse("1/2", f7).unwrap(), f7.from_i64(4));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(q("1").checked_div(&q("0")), Err(Error::DivisionByZero));
        let f = FieldSpec::prime(5).unwrap();
        assert_eq!(f.zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixed_fields_do_not_combine() {
        let f5 = FieldSpec::prime(5).unwrap();
        let f7 = FieldSpec::prime(7).unwrap();
        assert!(matches!(f5.one().checked_add(&f7.one()), Err(Error::FieldMismatch { .. })));
        assert!(matches!(q("1").checked_mul(&f7.one()), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn field_spec_text() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("Fp:7".parse::<FieldSpec>().unwrap(), FieldSpec::PrimeField(7));
        assert!("Fp:8".parse::<FieldSpec>().is_err());
        assert!("R".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::PrimeField(7).to_string(), "Fp:7");
        assert_eq!(serde_json::to_string(&FieldSpec::Rationals).unwrap(), "\"Q\"");
    }

    #[test]
    fn binomials_reduce() {
        assert_eq!(FieldSpec::Rationals.binomial(4, 2), q("6"));
        assert!(FieldSpec::PrimeField(2).binomial(4, 2).is_zero());
        assert!(FieldSpec::PrimeField(2).inverse_factorial(2).is_none());
        assert_eq!(FieldSpec::Rationals.inverse_factorial(3), Some(q("1/6")));
    }
}
