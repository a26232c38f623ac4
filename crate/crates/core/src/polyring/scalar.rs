//! Exact scalars: arbitrary precision rationals and prime field residues.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default prime used for sampling and surveys.
pub const DEFAULT_PRIME: u32 = 32003;

/// The coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// A prime field `GF(p)`. The modulus must be an odd prime.
    pub fn prime(p: u32) -> Result<Field> {
        if p < 3 || !is_prime(p) {
            return Err(Error::InvalidField(format!(
                "GF({p}): modulus must be an odd prime"
            )));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(v))),
            Field::Prime(p) => Scalar::Mod(Fp::new(v.rem_euclid(p as i64) as u32, p)),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(v.clone())),
            Field::Prime(p) => {
                let r = v.mod_floor(&BigInt::from(p));
                Scalar::Mod(Fp::new(r.to_u32().expect("residue fits"), p))
            }
        }
    }

    /// `num/den` in this field; fails when `den` vanishes in the field.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::NotInField(format!("{num}/{den}")));
        }
        match *self {
            Field::Rational => Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(_) => {
                let d = self.from_bigint(den);
                let d = d
                    .inv()
                    .ok_or_else(|| Error::NotInField(format!("{num}/{den} in {self}")))?;
                Ok(&self.from_bigint(num) * &d)
            }
        }
    }

    /// Maps a scalar of another field into this one (identity, or reduction mod p).
    pub fn convert(&self, s: &Scalar) -> Result<Scalar> {
        match (self, s) {
            (Field::Rational, Scalar::Rational(_)) => Ok(s.clone()),
            (Field::Prime(p), Scalar::Mod(x)) if x.modulus == *p => Ok(s.clone()),
            (Field::Prime(_), Scalar::Rational(q)) => self.from_fraction(q.numer(), q.denom()),
            _ => Err(Error::NotInField(format!("{s} cannot be lifted to {self}"))),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("QQ") || t == "Q" {
            return Ok(Field::Rational);
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix("GF"))
            .or_else(|| t.strip_prefix("ZZ/"));
        match inner.map(|x| x.trim().parse::<u32>()) {
            Some(Ok(p)) => Field::prime(p),
            _ => Err(Error::InvalidField(format!("unrecognized field `{t}`"))),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Residue class modulo an odd prime, `value` kept in `[0, modulus)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    pub fn new(value: u32, modulus: u32) -> Fp {
        debug_assert!(value < modulus);
        Fp { value, modulus }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Representative in `(-p/2, p/2]`.
    pub fn symmetric(&self) -> i64 {
        let v = self.value as i64;
        let p = self.modulus as i64;
        if v > p / 2 {
            v - p
        } else {
            v
        }
    }

    fn inv(&self) -> Option<Fp> {
        if self.value == 0 {
            return None;
        }
        // Fermat: a^(p-2).
        let p = self.modulus as u64;
        let mut base = self.value as u64;
        let mut e = p - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Some(Fp::new(acc as u32, self.modulus))
    }
}

/// An element of [`Field`]. Arithmetic between scalars of different fields panics.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod(Fp),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Mod(x) => Field::Prime(x.modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Mod(x) => x.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Mod(x) => x.value == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(q) if q.is_zero() => None,
            Scalar::Rational(q) => Some(Scalar::Rational(q.recip())),
            Scalar::Mod(x) => x.inv().map(Scalar::Mod),
        }
    }

    pub fn div(&self, other: &Scalar) -> Option<Scalar> {
        other.inv().map(|i| self * &i)
    }

    /// True for a rational with denominator 1 or for any residue.
    pub fn is_integral(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_integer(),
            Scalar::Mod(_) => true,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Mod(_) => None,
        }
    }

    /// Reduction modulo `p`; `None` when the denominator is divisible by `p`.
    pub fn reduce_mod(&self, p: u32) -> Option<Scalar> {
        Field::Prime(p).convert(self).ok()
    }

    /// Small integer value, when this scalar is one.
    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Scalar::Rational(q) if q.is_integer() => q.numer().to_i64(),
            Scalar::Rational(_) => None,
            Scalar::Mod(x) => Some(x.symmetric()),
        }
    }

    /// Display as a signed value: returns (negative, magnitude text).
    pub(crate) fn sign_split(&self) -> (bool, String) {
        match self {
            Scalar::Rational(q) => {
                let neg = q.is_negative();
                let a = q.abs();
                if a.is_integer() {
                    (neg, a.numer().to_string())
                } else {
                    (neg, format!("{}/{}", a.numer(), a.denom()))
                }
            }
            Scalar::Mod(x) => {
                let s = x.symmetric();
                (s < 0, s.abs().to_string())
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (neg, mag) = self.sign_split();
        if neg {
            write!(f, "-{mag}")
        } else {
            write!(f, "{mag}")
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Mod(a), Scalar::Mod(b)) if a.modulus == b.modulus => {
                let s = a.value as u64 + b.value as u64;
                let p = a.modulus as u64;
                Scalar::Mod(Fp::new(if s >= p { s - p } else { s } as u32, a.modulus))
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Mod(a), Scalar::Mod(b)) if a.modulus == b.modulus => {
                let v = if a.value >= b.value {
                    a.value - b.value
                } else {
                    a.modulus - (b.value - a.value)
                };
                Scalar::Mod(Fp::new(v, a.modulus))
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Mod(a), Scalar::Mod(b)) if a.modulus == b.modulus => {
                let v = (a.value as u64 * b.value as u64) % a.modulus as u64;
                Scalar::Mod(Fp::new(v as u32, a.modulus))
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod(a) => {
                let v = if a.value == 0 { 0 } else { a.modulus - a.value };
                Scalar::Mod(Fp::new(v, a.modulus))
            }
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}
