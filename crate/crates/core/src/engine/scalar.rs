//! Exact scalars: rationals with an `i64` fast path that promote to
//! arbitrary precision on overflow, and elements of a prime field.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::EngineError;

/// Default modulus for the prime-field mode.
pub const DEFAULT_PRIME: u32 = 32003;

/// The coefficient field of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u32),
}

impl Field {
    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar(Repr::Small(0, 1)),
            Field::Prime(p) => Scalar(Repr::Mod(0, p)),
        }
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self {
            Field::Rational => Scalar(Repr::Small(v, 1)),
            Field::Prime(p) => Scalar(Repr::Mod(v.rem_euclid(p as i64) as u32, p)),
        }
    }

    /// Parse `"p/q"` or `"p"` into this field.
    pub fn parse_scalar(self, text: &str) -> Result<Scalar, EngineError> {
        let bad = || EngineError::Parse(format!("invalid scalar {text:?}"));
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (text, "1"),
        };
        let num = BigInt::from_str(num).map_err(|_| bad())?;
        let den = BigInt::from_str(den).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        match self {
            Field::Rational => Ok(Scalar::from_big(BigRational::new(num, den))),
            Field::Prime(p) => {
                let reduce = |x: &BigInt| {
                    let r = x.mod_floor(&BigInt::from(p));
                    r.to_u32().expect("residue fits")
                };
                let n = Scalar(Repr::Mod(reduce(&num), p));
                let d = Scalar(Repr::Mod(reduce(&den), p));
                if d.is_zero() {
                    return Err(EngineError::Parse(format!("denominator of {text:?} vanishes mod {p}")));
                }
                Ok(n.div(&d))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("Q"),
            Field::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = EngineError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" {
            return Ok(Field::Rational);
        }
        let p = s
            .strip_prefix("Fp:")
            .or_else(|| (s == "Fp").then_some(""))
            .ok_or_else(|| EngineError::Parse(format!("unknown field {s:?}")))?;
        let p: u32 =
            if p.is_empty() { DEFAULT_PRIME } else { p.parse().map_err(|_| EngineError::Parse(format!("invalid modulus {p:?}")))? };
        if !is_prime(p) || p >= 1 << 31 {
            return Err(EngineError::Parse(format!("modulus {p} must be a prime below 2^31")));
        }
        Ok(Field::Prime(p))
    }
}

impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Debug)]
enum Repr {
    /// Reduced fraction with positive denominator.
    Small(i64, i64),
    /// Only used when the value does not fit `Small`.
    Big(Box<BigRational>),
    Mod(u32, u32),
}

/// An exact field element.
#[derive(Clone, Debug)]
pub struct Scalar(Repr);

impl Scalar {
    fn from_i128(num: i128, den: i128) -> Scalar {
        debug_assert!(den != 0);
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(Box::new(BigRational::new(n.into(), d.into())))),
        }
    }

    fn from_big(r: BigRational) -> Scalar {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Scalar(Repr::Small(n, d)),
            _ => Scalar(Repr::Big(Box::new(r))),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
            Repr::Mod(..) => panic!("prime-field scalar used as a rational"),
        }
    }

    pub fn field(&self) -> Field {
        match self.0 {
            Repr::Mod(_, p) => Field::Prime(p),
            _ => Field::Rational,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n == 0,
            Repr::Big(b) => b.is_zero(),
            Repr::Mod(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Small(n, d) => *n == 1 && *d == 1,
            Repr::Big(b) => b.is_one(),
            Repr::Mod(v, _) => *v == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_add(*c) {
                        return Scalar(Repr::Small(s, 1));
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Scalar::from_i128(a * d + c * b, b * d)
            }
            (Repr::Mod(a, p), Repr::Mod(b, q)) => {
                debug_assert_eq!(p, q);
                Scalar(Repr::Mod(((*a as u64 + *b as u64) % *p as u64) as u32, *p))
            }
            _ => Scalar::from_big(self.to_big() + other.to_big()),
        }
    }

    pub fn neg(&self) -> Scalar {
        match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Scalar(Repr::Small(m, *d)),
                None => Scalar::from_big(-self.to_big()),
            },
            Repr::Big(b) => Scalar::from_big(-(**b).clone()),
            Repr::Mod(v, p) => Scalar(Repr::Mod((*p - *v) % *p, *p)),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_mul(*c) {
                        return Scalar(Repr::Small(s, 1));
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                match (a.checked_mul(c), b.checked_mul(d)) {
                    (Some(n), Some(m)) => Scalar::from_i128(n, m),
                    _ => Scalar::from_big(self.to_big() * other.to_big()),
                }
            }
            (Repr::Mod(a, p), Repr::Mod(b, q)) => {
                debug_assert_eq!(p, q);
                Scalar(Repr::Mod(((*a as u64 * *b as u64) % *p as u64) as u32, *p))
            }
            _ => Scalar::from_big(self.to_big() * other.to_big()),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match &self.0 {
            Repr::Small(n, d) => {
                if *n < 0 {
                    match (d.checked_neg(), n.checked_neg()) {
                        (Some(a), Some(b)) => Scalar(Repr::Small(a, b)),
                        _ => Scalar::from_big(self.to_big().recip()),
                    }
                } else {
                    Scalar(Repr::Small(*d, *n))
                }
            }
            Repr::Big(b) => Scalar::from_big(b.recip()),
            Repr::Mod(v, p) => {
                let (p64, mut base, mut exp, mut acc) = (*p as u64, *v as u64, *p as u64 - 2, 1u64);
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p64;
                    }
                    base = base * base % p64;
                    exp >>= 1;
                }
                Scalar(Repr::Mod(acc as u32, *p))
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Mod(a, p), Repr::Mod(b, q)) => a == b && p == q,
            (Repr::Mod(..), _) | (_, Repr::Mod(..)) => false,
            _ => self.to_big() == other.to_big(),
        }
    }
}

impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) => write!(f, "{b}"),
            Repr::Mod(v, _) => write!(f, "{v}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Scalar {
        Scalar::from_i128(n as i128, d as i128)
    }

    #[test]
    fn rational_basics() {
        let a = q(1, 2);
        let b = q(1, 3);
        assert_eq!(a.add(&b), q(5, 6));
        assert_eq!(a.sub(&b), q(1, 6));
        assert_eq!(a.mul(&b), q(1, 6));
        assert_eq!(a.div(&b), q(3, 2));
        assert_eq!(q(-2, 4).inv(), q(-2, 1));
        assert_eq!(q(3, 6).to_string(), "1/2");
    }

    #[test]
    fn overflow_promotes() {
        let big = Field::Rational.from_i64(i64::MAX);
        let sq = big.mul(&big);
        assert!(matches!(sq.0, Repr::Big(_)));
        let back = sq.div(&big);
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(..)));
        let min = Field::Rational.from_i64(i64::MIN);
        assert_eq!(min.neg().neg(), min);
    }

    #[test]
    fn prime_field() {
        let f: Field = "Fp:7".parse().unwrap();
        let three = f.from_i64(3);
        assert_eq!(three.mul(&three.inv()), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert_eq!(f.parse_scalar("1/2").unwrap(), f.from_i64(4));
        assert!("Fp:8".parse::<Field>().is_err());
        assert_eq!("Fp".parse::<Field>().unwrap(), Field::Prime(DEFAULT_PRIME));
    }

    #[test]
    fn parse_rational() {
        let f = Field::Rational;
        assert_eq!(f.parse_scalar("-6/4").unwrap(), q(-3, 2));
        assert!(f.parse_scalar("1/0").is_err());
        assert!(f.parse_scalar("x").is_err());
        let huge = f.parse_scalar("123456789012345678901234567890").unwrap();
        assert_eq!(huge.to_string(), "123456789012345678901234567890");
    }

    proptest! {
        #[test]
        fn field_axioms(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let x = q(a, b);
            let y = q(c, d);
            let expected = BigRational::new(a.into(), b.into()) * BigRational::new(c.into(), d.into())
                + BigRational::new(c.into(), d.into());
            prop_assert_eq!(x.mul(&y).add(&y).to_big(), expected);
            if !y.is_zero() {
                prop_assert_eq!(x.div(&y).mul(&y), x);
            }
        }
    }
}
