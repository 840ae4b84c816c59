//! Coefficient fields for Puiseux series: the rationals and a single quadratic
//! extension `Q(sqrt(d))`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::rational::{int, parse_rational, rational_sqrt, split_square, Rational, Sign};
use crate::error::{Error, Result};

/// Field operations needed by [`PuiseuxSeries`](super::PuiseuxSeries).
pub trait Coeff:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn inverse(&self) -> Option<Self>;
    fn sign(&self) -> Sign;
    fn from_rational(r: Rational) -> Self;
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;
}

impl Coeff for Rational {
    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn sign(&self) -> Sign {
        Sign::of(self)
    }

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => parse_rational(s),
            _ => Err(Error::Parse(format!("expected a rational string, got {v}"))),
        }
    }
}

/// `a + b*sqrt(d)` with `d > 0` not a rational square whenever `b != 0`.
///
/// A value with `b == 0` is an ordinary rational and carries `d == 0`; it
/// combines with any radicand. Combining two irrational values with different
/// radicands is a logic error and panics: the constructions in this crate only
/// ever adjoin one square root per certificate, and [`QuadExt::sqrt_of`] callers
/// check radicand compatibility up front.
#[derive(Clone, Debug)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
    pub d: Rational,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, d: Rational) -> QuadExt {
        let q = QuadExt { a, b, d };
        q.normalized()
    }

    pub fn rational(a: Rational) -> QuadExt {
        QuadExt { a, b: Rational::zero(), d: Rational::zero() }
    }

    /// The nonnegative square root of a nonnegative rational.
    pub fn sqrt_of(r: &Rational) -> Result<QuadExt> {
        if r.is_negative() {
            return Err(Error::NegativeLeading);
        }
        if let Some(s) = rational_sqrt(r) {
            return Ok(QuadExt::rational(s));
        }
        let (s, d) = split_square(r);
        Ok(QuadExt::new(Rational::zero(), s, Rational::from_integer(d)))
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// `false` for values `a + b√d` with `b ≠ 0` and `d < 0`.
    pub fn is_real(&self) -> bool {
        self.b.is_zero() || self.d.is_positive()
    }

    /// `i` times a rational or a square root of a positive rational.
    pub(crate) fn times_i(&self) -> Option<QuadExt> {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => Some(QuadExt::new(Rational::zero(), self.a.clone(), int(-1))),
            (true, false) if self.d.is_positive() => Some(QuadExt::new(Rational::zero(), self.b.clone(), -self.d.clone())),
            _ => None,
        }
    }

    /// The radicand, if this value is irrational.
    pub fn radicand(&self) -> Option<&Rational> {
        (!self.b.is_zero()).then_some(&self.d)
    }

    fn normalized(mut self) -> QuadExt {
        if self.b.is_zero() {
            self.d = Rational::zero();
        } else if let Some(s) = rational_sqrt(&self.d) {
            self.a += &self.b * s;
            self.b = Rational::zero();
            self.d = Rational::zero();
        }
        self
    }

    fn common_radicand(&self, o: &QuadExt) -> Rational {
        match (self.radicand(), o.radicand()) {
            (Some(x), Some(y)) => {
                assert_eq!(x, y, "mixed radicands in quadratic extension arithmetic");
                x.clone()
            }
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => Rational::zero(),
        }
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, o: &Self) -> bool {
        self.a == o.a && self.b == o.b && (self.b.is_zero() || self.d == o.d)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "({} + {}*sqrt({}))", self.a, self.b, self.d)
        }
    }
}

impl From<Rational> for QuadExt {
    fn from(r: Rational) -> Self {
        QuadExt::rational(r)
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, o: QuadExt) -> QuadExt {
        let d = self.common_radicand(&o);
        QuadExt::new(self.a + o.a, self.b + o.b, d)
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, o: QuadExt) -> QuadExt {
        self + (-o)
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt { a: -self.a, b: -self.b, d: self.d }
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, o: QuadExt) -> QuadExt {
        let d = self.common_radicand(&o);
        let a = &self.a * &o.a + &self.b * &o.b * &d;
        let b = &self.a * &o.b + &self.b * &o.a;
        QuadExt::new(a, b, d)
    }
}

impl Zero for QuadExt {
    fn zero() -> Self {
        QuadExt::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadExt {
    fn one() -> Self {
        QuadExt::rational(Rational::one())
    }
}

impl Coeff for QuadExt {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // (a - b√d) / (a² - b²d); the norm is nonzero since d is not a square
        let norm = &self.a * &self.a - &self.b * &self.b * &self.d;
        Some(QuadExt::new(&self.a / &norm, -(&self.b / &norm), self.d.clone()))
    }

    /// For non-real values, the sign of the real part.
    fn sign(&self) -> Sign {
        if !self.is_real() {
            return Sign::of(&self.a);
        }
        let sa = Sign::of(&self.a);
        let sb = Sign::of(&self.b);
        if sb == Sign::Zero || sa == sb {
            return if sa == Sign::Zero { sb } else { sa };
        }
        if sa == Sign::Zero {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * &self.d;
        match a2.cmp(&b2d) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => Sign::Zero,
        }
    }

    fn from_rational(r: Rational) -> Self {
        QuadExt::rational(r)
    }

    fn to_json(&self) -> Value {
        if self.b.is_zero() {
            Value::String(self.a.to_string())
        } else {
            json!({"a": self.a.to_string(), "b": self.b.to_string(), "d": self.d.to_string()})
        }
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::String(s) => Ok(QuadExt::rational(parse_rational(s)?)),
            Value::Object(m) => {
                let get = |k: &str| -> Result<Rational> {
                    match m.get(k) {
                        Some(Value::String(s)) => parse_rational(s),
                        _ => Err(Error::Parse(format!("quadratic coefficient missing `{k}`"))),
                    }
                };
                Ok(QuadExt::new(get("a")?, get("b")?, get("d")?))
            }
            _ => Err(Error::Parse(format!("bad coefficient {v}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, int};

    fn sqrt2() -> QuadExt {
        QuadExt::sqrt_of(&int(2)).unwrap()
    }

    #[test]
    fn field_ops() {
        let s = sqrt2();
        assert_eq!(s.clone() * s.clone(), QuadExt::rational(int(2)));
        let x = QuadExt::rational(int(3)) + s.clone();
        let y = x.inverse().unwrap();
        assert_eq!(x * y, QuadExt::one());
        assert_eq!(QuadExt::sqrt_of(&frac(9, 4)).unwrap(), QuadExt::rational(frac(3, 2)));
    }

    #[test]
    fn sign_rules() {
        let s = sqrt2();
        // 1 - sqrt2 < 0, 2 - sqrt2 > 0, -3 + 2 sqrt2 < 0 (8 < 9)
        assert_eq!((QuadExt::one() - s.clone()).sign(), Sign::Negative);
        assert_eq!((QuadExt::rational(int(2)) - s.clone()).sign(), Sign::Positive);
        let z = QuadExt::new(int(-3), int(2), int(2));
        assert_eq!(z.sign(), Sign::Negative);
        assert_eq!(QuadExt::zero().sign(), Sign::Zero);
    }

    #[test]
    fn json_forms() {
        let s = sqrt2();
        assert_eq!(QuadExt::from_json(&s.to_json()).unwrap(), s);
        assert_eq!(QuadExt::rational(frac(1, 2)).to_json(), Value::String("1/2".into()));
    }
}
