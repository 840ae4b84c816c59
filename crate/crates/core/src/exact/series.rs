//! Truncated Puiseux series in `t` with rational exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use super::coeff::{Coeff, QuadExt};
use super::rational::{int, parse_rational, Rational, Sign};
use crate::error::{Error, Result};

/// A series `sum c_k t^{e_k}` known exactly below `trunc`.
///
/// `trunc == None` means the series is exact (a finite sum). Terms are kept
/// sorted by exponent, with no zero coefficients and every exponent below
/// `trunc`.
#[derive(Clone, Debug, PartialEq)]
pub struct PuiseuxSeries<C: Coeff = Rational> {
    terms: Vec<(Rational, C)>,
    trunc: Option<Rational>,
}

pub type QSeries = PuiseuxSeries<QuadExt>;

fn min_opt(a: &Option<Rational>, b: &Option<Rational>) -> Option<Rational> {
    match (a, b) {
        (None, x) | (x, None) => x.clone(),
        (Some(x), Some(y)) => Some(x.min(y).clone()),
    }
}

fn add_opt(a: &Option<Rational>, b: &Rational) -> Option<Rational> {
    a.as_ref().map(|x| x + b)
}

fn below(e: &Rational, limit: &Option<Rational>) -> bool {
    limit.as_ref().map_or(true, |l| e < l)
}

impl<C: Coeff> PuiseuxSeries<C> {
    /// Builds a series from unordered terms; like exponents are merged and
    /// terms at or above `trunc` are dropped.
    pub fn new(terms: impl IntoIterator<Item = (Rational, C)>, trunc: Option<Rational>) -> Self {
        let mut map: BTreeMap<Rational, C> = BTreeMap::new();
        for (e, c) in terms {
            if !below(&e, &trunc) {
                continue;
            }
            match map.remove(&e) {
                Some(old) => {
                    let s = old + c;
                    if !s.is_zero() {
                        map.insert(e, s);
                    }
                }
                None => {
                    if !c.is_zero() {
                        map.insert(e, c);
                    }
                }
            }
        }
        PuiseuxSeries { terms: map.into_iter().collect(), trunc }
    }

    pub fn exact(terms: impl IntoIterator<Item = (Rational, C)>) -> Self {
        Self::new(terms, None)
    }

    pub fn zero() -> Self {
        PuiseuxSeries { terms: Vec::new(), trunc: None }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::exact([(Rational::zero(), c)])
    }

    /// `c * t^e`.
    pub fn monomial(c: C, e: Rational) -> Self {
        Self::exact([(e, c)])
    }

    /// `t^e`.
    pub fn t_pow(e: Rational) -> Self {
        Self::monomial(C::one(), e)
    }

    pub fn terms(&self) -> &[(Rational, C)] {
        &self.terms
    }

    pub fn trunc(&self) -> Option<&Rational> {
        self.trunc.as_ref()
    }

    pub fn is_exact(&self) -> bool {
        self.trunc.is_none()
    }

    /// True if no nonzero term is known (exactly zero, or zero up to truncation).
    pub fn is_zero_to_trunc(&self) -> bool {
        self.terms.is_empty()
    }

    /// Drops every term at or above `order` (keeps the tighter truncation).
    pub fn truncate(&self, order: &Rational) -> Self {
        let trunc = min_opt(&self.trunc, &Some(order.clone()));
        Self::new(self.terms.iter().cloned(), trunc)
    }

    /// Valuation; `None` stands for `+inf` (the exact zero series).
    pub fn val(&self) -> Result<Option<Rational>> {
        match (self.terms.first(), &self.trunc) {
            (Some((e, _)), _) => Ok(Some(e.clone())),
            (None, None) => Ok(None),
            (None, Some(t)) => Err(Error::ValuationUnknown(t.clone())),
        }
    }

    /// Finite valuation, erroring on the zero series.
    pub fn val_finite(&self) -> Result<Rational> {
        match self.val()? {
            Some(v) => Ok(v),
            None => Err(Error::InversionOfZero),
        }
    }

    pub fn lead_coeff(&self) -> Result<C> {
        self.val()?;
        self.terms.first().map(|(_, c)| c.clone()).ok_or(Error::InversionOfZero)
    }

    /// Sign of the leading coefficient; `Sign::Zero` for the exact zero series.
    pub fn lead_sign(&self) -> Result<Sign> {
        self.val()?;
        Ok(self.terms.first().map_or(Sign::Zero, |(_, c)| c.sign()))
    }

    /// Lowest exponent about which something is known, used for truncation bookkeeping.
    fn order_hint(&self) -> Option<Rational> {
        match self.terms.first() {
            Some((e, _)) => Some(e.clone()),
            None => self.trunc.clone(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.terms.iter().map(|(e, x)| (e.clone(), x.clone() * c.clone())), self.trunc.clone())
    }

    /// Multiplies by `t^e`.
    pub fn shift(&self, e: &Rational) -> Self {
        PuiseuxSeries {
            terms: self.terms.iter().map(|(x, c)| (x + e, c.clone())).collect(),
            trunc: add_opt(&self.trunc, e),
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> PuiseuxSeries<D> {
        PuiseuxSeries::new(self.terms.iter().map(|(e, c)| (e.clone(), f(c))), self.trunc.clone())
    }

    fn product(&self, o: &Self) -> Self {
        if (self.terms.is_empty() && self.is_exact()) || (o.terms.is_empty() && o.is_exact()) {
            return Self::zero();
        }
        let trunc = match (self.order_hint(), o.order_hint()) {
            (Some(vx), Some(vy)) => min_opt(&add_opt(&self.trunc, &vy), &add_opt(&o.trunc, &vx)),
            _ => unreachable!("nonzero or truncated series always has an order"),
        };
        Self::new(mul_terms(&self.terms, &o.terms, &trunc), trunc)
    }

    /// Multiplicative inverse. An exact multi-term series has an infinite
    /// inverse; the result is then cut at `order`.
    pub fn inv(&self, order: &Rational) -> Result<Self> {
        let Some((v, c)) = self.terms.first().cloned() else {
            return Err(Error::InversionOfZero);
        };
        let cinv = c.inverse().ok_or(Error::InversionOfZero)?;
        if self.terms.len() == 1 && self.is_exact() {
            return Ok(Self::monomial(cinv, -v));
        }
        // x = c t^v (1 + u); 1/x = c^-1 t^-v sum (-u)^k
        let trunc = min_opt(&self.trunc.as_ref().map(|t| t - &v - &v), &Some(order.clone()));
        let rel = add_opt(&trunc, &v);
        let neg_u: Vec<(Rational, C)> = self.terms[1..]
            .iter()
            .map(|(e, x)| (e - &v, -(x.clone() * cinv.clone())))
            .filter(|(e, _)| below(e, &rel))
            .collect();
        let sum = geometric_like(&neg_u, &rel, |_| C::one());
        let out = sum.into_iter().map(|(e, x)| (e - &v, x * cinv.clone()));
        Ok(Self::new(out, trunc))
    }

    pub fn div(&self, o: &Self, order: &Rational) -> Result<Self> {
        Ok(self * &o.inv(order)?)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// True if `self - o` has no known nonzero term.
    pub fn eq_to_trunc(&self, o: &Self) -> bool {
        (self - o).is_zero_to_trunc()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> =
            self.terms.iter().map(|(e, c)| json!({"exp": e.to_string(), "coef": c.to_json()})).collect();
        let trunc = match &self.trunc {
            Some(t) => Value::String(t.to_string()),
            None => Value::String("inf".into()),
        };
        json!({"terms": terms, "trunc": trunc})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("series: {m}"));
        let terms = v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("missing `terms`"))?;
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            let e = t.get("exp").and_then(Value::as_str).ok_or_else(|| bad("term missing `exp`"))?;
            let c = t.get("coef").ok_or_else(|| bad("term missing `coef`"))?;
            out.push((parse_rational(e)?, C::from_json(c)?));
        }
        let trunc = match v.get("trunc") {
            None | Some(Value::Null) => None,
            Some(Value::String(s)) if s == "inf" => None,
            Some(Value::String(s)) => Some(parse_rational(s)?),
            Some(_) => return Err(bad("`trunc` must be a string")),
        };
        Ok(Self::new(out, trunc))
    }
}

/// `sum_k a(k) w^k` for `w` with positive exponents, cut at `limit`.
fn geometric_like<C: Coeff>(
    w: &[(Rational, C)],
    limit: &Option<Rational>,
    a: impl Fn(u32) -> C,
) -> Vec<(Rational, C)> {
    let mut acc: Vec<(Rational, C)> = vec![(Rational::zero(), a(0))];
    if w.is_empty() {
        return acc;
    }
    let limit = limit.clone().expect("a series with a tail needs a finite cut");
    let mut power: Vec<(Rational, C)> = vec![(Rational::zero(), C::one())];
    let mut k = 0u32;
    loop {
        power = mul_terms(&power, w, &Some(limit.clone()));
        k += 1;
        if power.is_empty() {
            break;
        }
        let ak = a(k);
        acc.extend(power.iter().map(|(e, c)| (e.clone(), c.clone() * ak.clone())));
    }
    PuiseuxSeries::new(acc, Some(limit)).terms
}

fn mul_terms<C: Coeff>(x: &[(Rational, C)], y: &[(Rational, C)], limit: &Option<Rational>) -> Vec<(Rational, C)> {
    let mut map: BTreeMap<Rational, C> = BTreeMap::new();
    for (ex, cx) in x {
        for (ey, cy) in y {
            let e = ex + ey;
            if !below(&e, limit) {
                // y is sorted, so later terms only get larger
                break;
            }
            let c = cx.clone() * cy.clone();
            match map.get_mut(&e) {
                Some(old) => *old = old.clone() + c,
                None => {
                    map.insert(e, c);
                }
            }
        }
    }
    map.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl PuiseuxSeries<Rational> {
    /// Series with rational coefficients from `(exponent, coefficient)` integer pairs.
    pub fn from_ints(terms: &[(i64, i64)], trunc: Option<i64>) -> Self {
        Self::new(terms.iter().map(|&(e, c)| (int(e), int(c))), trunc.map(int))
    }

    pub fn to_quad(&self) -> QSeries {
        self.map_coeffs(|c| QuadExt::rational(c.clone()))
    }

    /// Real square root. The leading coefficient becomes `sqrt(lead)`, which
    /// may adjoin one quadratic irrationality; the tail comes from the
    /// binomial series of `sqrt(1 + u)`, cut at `order` when it is infinite.
    pub fn sqrt(&self, order: &Rational) -> Result<QSeries> {
        let Some((v, c)) = self.terms.first().cloned() else {
            return match &self.trunc {
                None => Ok(QSeries::zero()),
                Some(t) => Err(Error::ValuationUnknown(t.clone())),
            };
        };
        if c.is_negative() {
            return Err(Error::NegativeLeading);
        }
        let root = QuadExt::sqrt_of(&c)?;
        let half_v = &v / int(2);
        if self.terms.len() == 1 && self.is_exact() {
            return Ok(QSeries::monomial(root, half_v));
        }
        // relative cut for sqrt(1+u) is the cut of u itself
        let trunc = min_opt(&self.trunc.as_ref().map(|t| t - &half_v), &Some(order.clone()));
        let rel = trunc.as_ref().map(|t| t - &half_v);
        let cinv = c.recip();
        let u: Vec<(Rational, Rational)> = self.terms[1..]
            .iter()
            .map(|(e, x)| (e - &v, x * &cinv))
            .filter(|(e, _)| below(e, &rel))
            .collect();
        let tail = geometric_like(&u, &rel, binom_half);
        let out = tail.into_iter().map(|(e, x)| (e + &half_v, root.clone() * QuadExt::rational(x)));
        Ok(QSeries::new(out, trunc))
    }
}

/// `binom(1/2, k)`.
fn binom_half(k: u32) -> Rational {
    let half = Rational::new(1.into(), 2.into());
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * (&half - int(i as i64)) / int(i as i64 + 1);
    }
    acc
}

impl PuiseuxSeries<QuadExt> {
    /// Square root of a series whose coefficients are all rational; an
    /// irrational coefficient would need a nested radical.
    pub fn sqrt(&self, order: &Rational) -> Result<QSeries> {
        if let Some(c) = self.terms.iter().map(|(_, c)| c).find(|c| !c.is_rational()) {
            let d = c.radicand().cloned().unwrap_or_default();
            return Err(Error::NestedRadical(d, self.terms[0].1.a.clone()));
        }
        let r: PuiseuxSeries<Rational> = self.map_coeffs(|c| c.a.clone());
        r.sqrt(order)
    }

    /// Leading coefficient is real and positive.
    pub fn lead_positive_real(&self) -> bool {
        self.val().is_ok_and(|v| v.is_some()) && self.terms[0].1.is_real() && self.terms[0].1.sign() == Sign::Positive
    }

    /// The same series over the rationals, if no coefficient is irrational.
    pub fn to_rational(&self) -> Option<PuiseuxSeries<Rational>> {
        self.terms.iter().all(|(_, c)| c.is_rational()).then(|| self.map_coeffs(|c| c.a.clone()))
    }

    /// The common radicand of this series, if any coefficient is irrational.
    pub fn radicand(&self) -> Option<Rational> {
        self.terms.iter().find_map(|(_, c)| c.radicand().cloned())
    }
}

impl<C: Coeff> Add for &PuiseuxSeries<C> {
    type Output = PuiseuxSeries<C>;
    fn add(self, o: &PuiseuxSeries<C>) -> PuiseuxSeries<C> {
        let trunc = min_opt(&self.trunc, &o.trunc);
        PuiseuxSeries::new(self.terms.iter().chain(o.terms.iter()).cloned(), trunc)
    }
}

impl<C: Coeff> Sub for &PuiseuxSeries<C> {
    type Output = PuiseuxSeries<C>;
    fn sub(self, o: &PuiseuxSeries<C>) -> PuiseuxSeries<C> {
        self + &(-o)
    }
}

impl<C: Coeff> Neg for &PuiseuxSeries<C> {
    type Output = PuiseuxSeries<C>;
    fn neg(self) -> PuiseuxSeries<C> {
        PuiseuxSeries {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
            trunc: self.trunc.clone(),
        }
    }
}

impl<C: Coeff> Mul for &PuiseuxSeries<C> {
    type Output = PuiseuxSeries<C>;
    fn mul(self, o: &PuiseuxSeries<C>) -> PuiseuxSeries<C> {
        self.product(o)
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr for PuiseuxSeries<C> {
            type Output = PuiseuxSeries<C>;
            fn $m(self, o: PuiseuxSeries<C>) -> PuiseuxSeries<C> {
                (&self).$m(&o)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl<C: Coeff> Neg for PuiseuxSeries<C> {
    type Output = PuiseuxSeries<C>;
    fn neg(self) -> PuiseuxSeries<C> {
        -&self
    }
}

impl<C: Coeff> fmt::Display for PuiseuxSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| if e.is_zero() { format!("{c}") } else { format!("{c}*t^{e}") })
            .collect();
        if let Some(t) = &self.trunc {
            parts.push(format!("O(t^{t})"));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" + "))
    }
}

impl<C: Coeff> Serialize for PuiseuxSeries<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de, C: Coeff> Deserialize<'de> for PuiseuxSeries<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        Self::from_json(&v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::frac;

    type S = PuiseuxSeries<Rational>;

    fn s(terms: &[(i64, i64)], trunc: Option<i64>) -> S {
        S::from_ints(terms, trunc)
    }

    #[test]
    fn add_cancels_lead() {
        let x = s(&[(0, 1), (1, 1)], None) + s(&[(0, -1), (2, 1)], None);
        assert_eq!(x, s(&[(1, 1), (2, 1)], None));
        let h = S::t_pow(frac(1, 2));
        assert_eq!(&h + &h, S::monomial(int(2), frac(1, 2)));
        assert_eq!(&h + &S::zero(), h);
    }

    #[test]
    fn mul_and_inv() {
        let a = s(&[(0, 1), (1, 1)], None);
        let b = s(&[(0, 1), (1, -1)], None);
        assert_eq!(&a * &b, s(&[(0, 1), (2, -1)], None));
        assert_eq!(&S::t_pow(frac(1, 3)) * &S::t_pow(frac(2, 3)), S::t_pow(int(1)));
        let inv = a.inv(&int(5)).unwrap();
        assert_eq!(inv, s(&[(0, 1), (1, -1), (2, 1), (3, -1), (4, 1)], Some(5)));
        assert!((&inv * &a).eq_to_trunc(&S::one()));
        assert_eq!(S::zero().inv(&int(5)), Err(Error::InversionOfZero));
    }

    #[test]
    fn valuation_and_sign() {
        let x = s(&[(2, 3), (5, 1)], None);
        assert_eq!(x.val().unwrap(), Some(int(2)));
        assert_eq!(x.lead_sign().unwrap(), Sign::Positive);
        let y = s(&[(2, -8), (3, 1)], Some(10));
        assert_eq!(y.lead_sign().unwrap(), Sign::Negative);
        let z = &s(&[(1, 1)], Some(10)) - &s(&[(1, 1)], None);
        assert_eq!(z.val(), Err(Error::ValuationUnknown(int(10))));
        assert_eq!(S::zero().val().unwrap(), None);
    }

    #[test]
    fn sqrt_cases() {
        assert_eq!(s(&[(2, 1)], None).sqrt(&int(10)).unwrap(), S::t_pow(int(1)).to_quad());
        let r = s(&[(0, 4), (1, 4)], None).sqrt(&int(3)).unwrap();
        let want = PuiseuxSeries::new(
            [(int(0), int(2)), (int(1), int(1)), (int(2), frac(-1, 4))],
            Some(int(3)),
        );
        assert_eq!(r, want.to_quad());
        let r2 = s(&[(4, 2)], None).sqrt(&int(10)).unwrap();
        assert_eq!(r2, QSeries::monomial(QuadExt::sqrt_of(&int(2)).unwrap(), int(2)));
        assert_eq!(r2.radicand(), Some(int(2)));
        assert_eq!(s(&[(0, -1)], None).sqrt(&int(5)), Err(Error::NegativeLeading));
    }

    #[test]
    fn sqrt_squares_back() {
        let x = s(&[(0, 2), (1, 3), (3, -1)], Some(9));
        let y = x.sqrt(&int(20)).unwrap();
        assert!((&y * &y).eq_to_trunc(&x.to_quad()));
        let bad = QSeries::monomial(QuadExt::sqrt_of(&int(3)).unwrap(), int(0));
        assert!(matches!(bad.sqrt(&int(5)), Err(Error::NestedRadical(..))));
    }

    #[test]
    fn json_round_trip() {
        let x = s(&[(0, 1), (3, -2)], Some(7));
        let v = x.to_json();
        assert_eq!(v["trunc"], "7");
        assert_eq!(S::from_json(&v).unwrap(), x);
        let e: S = serde_json::from_str(r#"{"terms":[{"exp":"1/2","coef":"3"}],"trunc":"inf"}"#).unwrap();
        assert_eq!(e, S::monomial(int(3), frac(1, 2)));
    }
}
