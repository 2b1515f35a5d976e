//! Exact coefficient fields: the rationals and prime fields `Z/p`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default characteristic used when no field is requested.
pub const DEFAULT_PRIME: u32 = 32003;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Default for Field {
    fn default() -> Self {
        Field::Prime(DEFAULT_PRIME)
    }
}

impl Field {
    /// Builds a prime field, rejecting composite or oversized moduli.
    pub fn prime(p: u32) -> Result<Field> {
        if p < 2 || p >= 1 << 31 || !is_prime(p) {
            return Err(Error::Input(format!("{p} is not a prime below 2^31")));
        }
        Ok(Field::Prime(p))
    }

    /// Parses `q` (rationals) or `p:<prime>`.
    pub fn parse(s: &str) -> Result<Field> {
        let s = s.trim();
        if s == "q" || s == "Q" || s == "rational" {
            return Ok(Field::Rational);
        }
        if let Some(rest) = s.strip_prefix("p:") {
            let p: u32 = rest
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("bad characteristic in field `{s}`")))?;
            return Field::prime(p);
        }
        Err(Error::Input(format!("unknown field `{s}` (expected q or p:<prime>)")))
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

    pub fn from_i64(&self, x: i64) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(x))),
            Field::Prime(p) => Scalar::Modular {
                value: x.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_bigint(&self, x: &BigInt) -> Scalar {
        match *self {
            Field::Rational => Scalar::Rational(BigRational::from_integer(x.clone())),
            Field::Prime(p) => {
                let r = (x % BigInt::from(p) + BigInt::from(p)) % BigInt::from(p);
                Scalar::Modular {
                    value: r.to_u32().expect("residue fits"),
                    modulus: p,
                }
            }
        }
    }

    /// Maps a rational number into the field; fails when the denominator vanishes mod p.
    pub fn from_ratio(&self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rational => Ok(Scalar::Rational(q.clone())),
            Field::Prime(p) => {
                let den = self.from_bigint(q.denom());
                if den.is_zero() {
                    return Err(Error::Input(format!(
                        "denominator {} vanishes in characteristic {p}",
                        q.denom()
                    )));
                }
                Ok(&self.from_bigint(q.numer()) * &den.inv())
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "p:{p}"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if p as u64 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element. Both operands of a binary operation must come from the same field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: pow_mod(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                modulus: *modulus,
            },
        }
    }

    /// Signed integer value for printing: rationals as is, residues in the symmetric range.
    fn display_parts(&self) -> (bool, String) {
        match self {
            Scalar::Rational(q) => {
                let neg = q.is_negative();
                let a = q.abs();
                let s = if a.is_integer() {
                    a.numer().to_string()
                } else {
                    format!("{}/{}", a.numer(), a.denom())
                };
                (neg, s)
            }
            Scalar::Modular { value, modulus } => {
                if *value > modulus / 2 {
                    (true, (modulus - value).to_string())
                } else {
                    (false, value.to_string())
                }
            }
        }
    }

    pub(crate) fn is_negative_for_display(&self) -> bool {
        self.display_parts().0
    }

    pub(crate) fn abs_string(&self) -> String {
        self.display_parts().1
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (neg, s) = self.display_parts();
        if neg {
            write!(f, "-{s}")
        } else {
            write!(f, "{s}")
        }
    }
}

macro_rules! modular_op {
    ($a:expr, $b:expr, |$x:ident, $y:ident, $m:ident| $body:expr, $qop:tt) => {
        match ($a, $b) {
            (Scalar::Rational(p), Scalar::Rational(q)) => Scalar::Rational(p $qop q),
            (
                Scalar::Modular { value: $x, modulus: $m },
                Scalar::Modular { value: $y, modulus: m2 },
            ) => {
                debug_assert_eq!($m, m2, "mixed characteristics");
                let ($x, $y, $m) = (*$x as u64, *$y as u64, *$m as u64);
                Scalar::Modular { value: ($body) as u32, modulus: $m as u32 }
            }
            _ => panic!("arithmetic between different fields"),
        }
    };
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        modular_op!(self, rhs, |x, y, m| (x + y) % m, +)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        modular_op!(self, rhs, |x, y, m| (x + m - y) % m, -)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        modular_op!(self, rhs, |x, y, m| x * y % m, *)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Modular { value, modulus } => Scalar::Modular {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::Prime(7);
        let a = f.from_i64(3);
        let b = f.from_i64(-2);
        assert_eq!(&a + &b, f.from_i64(1));
        assert_eq!(&a * &a.inv(), f.one());
        assert_eq!(-&a, f.from_i64(4));
        assert_eq!(&b - &a, f.from_i64(2));
    }

    #[test]
    fn rational_from_ratio() {
        let q = BigRational::new(BigInt::from(3), BigInt::from(6));
        let f = Field::Prime(5);
        let s = f.from_ratio(&q).unwrap();
        assert_eq!(&s * &f.from_i64(2), f.one());
        assert!(f.from_ratio(&BigRational::new(1.into(), 5.into())).is_err());
        assert_eq!(Field::Rational.from_ratio(&q).unwrap().to_string(), "1/2");
    }

    #[test]
    fn parse_fields() {
        assert_eq!(Field::parse("q").unwrap(), Field::Rational);
        assert_eq!(Field::parse("p:32003").unwrap(), Field::Prime(32003));
        assert!(Field::parse("p:32004").is_err());
        assert!(Field::parse("r").is_err());
    }

    #[test]
    fn symmetric_display() {
        let f = Field::Prime(11);
        assert_eq!(f.from_i64(-3).to_string(), "-3");
        assert_eq!(f.from_i64(4).to_string(), "4");
    }
}
