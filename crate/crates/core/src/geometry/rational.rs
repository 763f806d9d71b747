use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational number, always in lowest terms with a positive
/// denominator. Serialized as `[numerator, denominator]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Self(BigRational::new(num.into(), den.into()))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Option<Self> {
        (!den.is_zero()).then(|| Self(BigRational::new(num, den)))
    }

    pub fn int(n: i64) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn signum(&self) -> i32 {
        if self.0.is_positive() {
            1
        } else if self.0.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn abs(&self) -> Self {
        Self(self.0.abs())
    }

    /// Midpoint of `self` and `other`.
    pub fn mid(&self, other: &Self) -> Self {
        (self + other) / Self::int(2)
    }

    /// Lossy; for rendering only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Rational {
    type Err = String;

    /// `p` or `p/q`.
    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<BigInt>().map_err(|e| format!("`{s}`: {e}"));
        match s.split_once('/') {
            None => Ok(Self(BigRational::from_integer(parse(s)?))),
            Some((p, q)) => Self::from_big(parse(p)?, parse(q)?).ok_or_else(|| format!("`{s}`: zero denominator")),
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Integers within `i64` become JSON numbers, larger ones decimal strings.
fn int_to_json(n: &BigInt) -> serde_json::Value {
    match n.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(n.to_string()),
    }
}

fn int_from_json(v: &serde_json::Value) -> Result<BigInt, String> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .or_else(|| n.as_u64().map(BigInt::from))
            .ok_or_else(|| format!("{n} is not an integer")),
        serde_json::Value::String(s) => s.parse().map_err(|e| format!("`{s}`: {e}")),
        other => Err(format!("expected an integer, found {other}")),
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [int_to_json(self.numer()), int_to_json(self.denom())].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [num, den] = <[serde_json::Value; 2]>::deserialize(d)?;
        let num = int_from_json(&num).map_err(D::Error::custom)?;
        let den = int_from_json(&den).map_err(D::Error::custom)?;
        Rational::from_big(num, den).ok_or_else(|| D::Error::custom("zero denominator"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalized() {
        let r = Rational::new(4, -6);
        assert_eq!(r, Rational::new(-2, 3));
        assert_eq!(r.denom(), &BigInt::from(3));
        assert_eq!(r.to_string(), "-2/3");
    }

    #[test]
    fn arithmetic() {
        let a = Rational::new(1, 3);
        let b = Rational::new(1, 6);
        assert_eq!(&a + &b, Rational::new(1, 2));
        assert_eq!(&a - &b, b);
        assert_eq!(&a * &b, Rational::new(1, 18));
        assert_eq!(&a / &b, Rational::int(2));
        assert_eq!(-a.clone(), Rational::new(-1, 3));
        assert_eq!(a.mid(&b), Rational::new(1, 4));
        assert!(a > b);
    }

    #[test]
    fn json() {
        let r = Rational::new(5, 3);
        assert_eq!(serde_json::to_string(&r).unwrap(), "[5,3]");
        assert_eq!(serde_json::from_str::<Rational>("[10,6]").unwrap(), r);
        assert_eq!(serde_json::from_str::<Rational>(r#"["5","3"]"#).unwrap(), r);
        assert!(serde_json::from_str::<Rational>("[1,0]").is_err());
        assert!(serde_json::from_str::<Rational>("[1.5,2]").is_err());

        let huge: Rational = "1208925819614629174706176/7".parse().unwrap();
        let text = serde_json::to_string(&huge).unwrap();
        assert_eq!(text, r#"["1208925819614629174706176",7]"#);
        assert_eq!(serde_json::from_str::<Rational>(&text).unwrap(), huge);
    }

    #[test]
    fn parse() {
        assert_eq!("3/9".parse::<Rational>().unwrap(), Rational::new(1, 3));
        assert_eq!("-4".parse::<Rational>().unwrap(), Rational::int(-4));
        assert!("1/0".parse::<Rational>().is_err());
    }
}
