//! Expressions in the umbral shift symbol c and their evaluation through a
//! coefficient functional.
//!
//! A term a c^mu x^k contributes a * phi(mu) to the coefficient of x^k,
//! where phi is the functional (for instance mu -> 1/Gamma(1+mu)).

use crate::series::{Scalar, TruncatedSeries};
use crate::special::gamma::{factorial, rgamma};
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use thiserror::Error;

pub type Rational = Ratio<i64>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum UmbralError {
    #[error("functional '{functional}' is undefined at c^{mu} (term {coeff} c^{mu} x^{x_exp})")]
    OutOfDomain { functional: String, mu: Rational, x_exp: usize, coeff: Scalar },
    #[error("unknown functional '{0}' (expected 'laguerre' or 'hermite:y=<real>')")]
    UnknownFunctional(String),
    #[error("c exponent denominator must be nonzero")]
    ZeroDenominator,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UmbralTerm {
    pub coeff: Scalar,
    pub c_exp: Rational,
    pub x_exp: usize,
}

/// Finite sum of terms, merged on (c exponent, x exponent), cut at `max_x_exp`.
#[derive(Clone, Debug, PartialEq)]
pub struct UmbralExpression {
    terms: BTreeMap<(Rational, usize), Scalar>,
    max_x_exp: usize,
}

impl UmbralExpression {
    pub fn empty(max_x_exp: usize) -> Self {
        Self { terms: BTreeMap::new(), max_x_exp }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = UmbralTerm>, max_x_exp: usize) -> Self {
        let mut e = Self::empty(max_x_exp);
        for t in terms {
            e.push(t);
        }
        e
    }

    /// Adds a term, merging with an existing (c, x) slot; terms past the cutoff are dropped.
    pub fn push(&mut self, t: UmbralTerm) {
        if t.x_exp > self.max_x_exp {
            return;
        }
        *self.terms.entry((t.c_exp, t.x_exp)).or_default() += t.coeff;
    }

    pub fn max_x_exp(&self) -> usize {
        self.max_x_exp
    }

    pub fn terms(&self) -> Vec<UmbralTerm> {
        self.terms.iter().map(|(&(c_exp, x_exp), &coeff)| UmbralTerm { coeff, c_exp, x_exp }).collect()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Self::empty(self.max_x_exp.min(other.max_x_exp));
        for t in self.terms().into_iter().chain(other.terms()) {
            out.push(t);
        }
        out
    }

    /// Product using c^a c^b = c^{a+b}.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::empty(self.max_x_exp.min(other.max_x_exp));
        for a in self.terms() {
            for b in other.terms() {
                out.push(UmbralTerm { coeff: a.coeff * b.coeff, c_exp: a.c_exp + b.c_exp, x_exp: a.x_exp + b.x_exp });
            }
        }
        out
    }

    pub fn scale(&self, s: Scalar) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * s)).collect(),
            max_x_exp: self.max_x_exp,
        }
    }
}

/// sum_r a^r / r! c^{r p} x^{r q}, generated while r q <= order.
pub fn umbral_exp(a: Scalar, c_power: Rational, x_power: usize, order: usize) -> UmbralExpression {
    let mut e = UmbralExpression::empty(order);
    let mut r = 0usize;
    loop {
        let x_exp = r * x_power;
        if x_exp > order || (x_power == 0 && r > order) {
            break;
        }
        let coeff = a.powu(r as u32) / factorial(r);
        e.push(UmbralTerm { coeff, c_exp: c_power * Rational::from_integer(r as i64), x_exp });
        r += 1;
    }
    e
}

/// e^{-scale c x^2}: terms ((-scale)^r / r!, c^r, x^{2r}).
pub fn umbral_exp_gaussian(scale: Scalar, order: usize) -> UmbralExpression {
    if scale == Scalar::default() {
        return UmbralExpression::from_terms(
            [UmbralTerm { coeff: Scalar::new(1.0, 0.0), c_exp: Rational::zero(), x_exp: 0 }],
            order,
        );
    }
    umbral_exp(-scale, Rational::one(), 2, order)
}

/// Binomial shapes with an umbral slot.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BinomialForm {
    /// (x + c)^n: terms C(n,k) c^k x^{n-k}.
    Shift,
    /// (y - c x)^n: terms C(n,r) (-1)^r y^{n-r} c^r x^r.
    Scaled { y: Scalar },
}

pub fn umbral_binomial(form: BinomialForm, n: usize) -> UmbralExpression {
    let mut e = UmbralExpression::empty(n);
    for k in 0..=n {
        let b = crate::special::gamma::binomial(n, k);
        let t = match form {
            BinomialForm::Shift => UmbralTerm {
                coeff: Scalar::new(b, 0.0),
                c_exp: Rational::from_integer(k as i64),
                x_exp: n - k,
            },
            BinomialForm::Scaled { y } => UmbralTerm {
                coeff: y.powu((n - k) as u32) * b * if k % 2 == 0 { 1.0 } else { -1.0 },
                c_exp: Rational::from_integer(k as i64),
                x_exp: k,
            },
        };
        e.push(t);
    }
    e
}

/// 1/(1 + sign c^p x) expanded: terms ((-sign)^r, c^{r p}, x^r).
pub fn umbral_geometric(c_power: Rational, sign: i8, order: usize) -> UmbralExpression {
    let q = -(sign as f64);
    UmbralExpression::from_terms(
        (0..=order).map(|r| UmbralTerm {
            coeff: Scalar::new(q.powi(r as i32), 0.0),
            c_exp: c_power * Rational::from_integer(r as i64),
            x_exp: r,
        }),
        order,
    )
}

/// Generalized binomial (1 + a c^p x^q)^nu = sum_r C(nu, r) a^r c^{r p} x^{r q}.
pub fn umbral_power(a: Scalar, nu: f64, c_power: Rational, x_power: usize, order: usize) -> UmbralExpression {
    let mut e = UmbralExpression::empty(order);
    let mut coeff = Scalar::new(1.0, 0.0);
    for r in 0.. {
        let x_exp = r * x_power;
        if x_exp > order || (x_power == 0 && r > order) {
            break;
        }
        e.push(UmbralTerm { coeff, c_exp: c_power * Rational::from_integer(r as i64), x_exp });
        coeff = coeff * a * (nu - r as f64) / (r + 1) as f64;
    }
    e
}

/// A coefficient functional: c^mu -> weight(mu).
pub trait UmbralFunctional {
    fn name(&self) -> String;
    /// None when mu lies outside the functional's domain.
    fn weight(&self, mu: Rational) -> Option<f64>;
}

/// mu -> 1/Gamma(1 + mu), zero at the reciprocal-gamma poles.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LaguerreFunctional;

impl UmbralFunctional for LaguerreFunctional {
    fn name(&self) -> String {
        "laguerre".into()
    }

    fn weight(&self, mu: Rational) -> Option<f64> {
        if mu.is_integer() {
            let m = *mu.numer();
            return Some(if m < 0 { 0.0 } else { 1.0 / factorial(m as usize) });
        }
        Some(rgamma(1.0 + mu.to_f64()?))
    }
}

/// Integer k -> (2 sqrt y)^k Gamma((1+k)/2) |cos(k pi/2)| / sqrt(pi):
/// zero for odd k, y^r (2r)!/r! for k = 2r.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HermiteFunctional {
    pub y: f64,
}

impl UmbralFunctional for HermiteFunctional {
    fn name(&self) -> String {
        format!("hermite:y={}", self.y)
    }

    fn weight(&self, mu: Rational) -> Option<f64> {
        if !mu.is_integer() || mu.is_negative() {
            return None;
        }
        let k = *mu.numer() as usize;
        if k % 2 == 1 {
            return Some(0.0);
        }
        let r = k / 2;
        // (2r)!/r! = prod_{j=r+1}^{2r} j
        let ratio: f64 = ((r + 1)..=(2 * r)).map(|j| j as f64).product();
        Some(self.y.powi(r as i32) * ratio)
    }
}

/// The two shipped functionals, addressable by name.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BuiltinFunctional {
    Laguerre,
    Hermite { y: f64 },
}

impl BuiltinFunctional {
    pub fn parse(s: &str) -> Result<Self, UmbralError> {
        let s = s.trim();
        if s == "laguerre" {
            return Ok(Self::Laguerre);
        }
        if let Some(rest) = s.strip_prefix("hermite:y=") {
            if let Ok(y) = rest.parse::<f64>() {
                if y.is_finite() {
                    return Ok(Self::Hermite { y });
                }
            }
        }
        Err(UmbralError::UnknownFunctional(s.to_string()))
    }
}

impl UmbralFunctional for BuiltinFunctional {
    fn name(&self) -> String {
        match self {
            Self::Laguerre => LaguerreFunctional.name(),
            Self::Hermite { y } => HermiteFunctional { y: *y }.name(),
        }
    }

    fn weight(&self, mu: Rational) -> Option<f64> {
        match self {
            Self::Laguerre => LaguerreFunctional.weight(mu),
            Self::Hermite { y } => HermiteFunctional { y: *y }.weight(mu),
        }
    }
}

/// Replaces every c^mu by the functional's weight and collects powers of x.
pub fn umbral_eval(
    expr: &UmbralExpression,
    f: &dyn UmbralFunctional,
    order: usize,
) -> Result<TruncatedSeries, UmbralError> {
    let mut c = vec![Scalar::default(); order + 1];
    for t in expr.terms() {
        if t.x_exp > order {
            continue;
        }
        let w = f.weight(t.c_exp).ok_or_else(|| UmbralError::OutOfDomain {
            functional: f.name(),
            mu: t.c_exp,
            x_exp: t.x_exp,
            coeff: t.coeff,
        })?;
        c[t.x_exp] += t.coeff * w;
    }
    Ok(TruncatedSeries::new(c).expect("finite weights give finite coefficients"))
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: [f64; 2],
    c: [i64; 2],
    x: usize,
}

#[derive(Serialize, Deserialize)]
struct ExprRepr {
    terms: Vec<TermRepr>,
}

impl Serialize for UmbralExpression {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ExprRepr {
            terms: self
                .terms()
                .into_iter()
                .map(|t| TermRepr { coeff: [t.coeff.re, t.coeff.im], c: [*t.c_exp.numer(), *t.c_exp.denom()], x: t.x_exp })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for UmbralExpression {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = ExprRepr::deserialize(d)?;
        let max = repr.terms.iter().map(|t| t.x).max().unwrap_or(0);
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            if t.c[1] == 0 {
                return Err(serde::de::Error::custom(UmbralError::ZeroDenominator));
            }
            terms.push(UmbralTerm {
                coeff: Scalar::new(t.coeff[0], t.coeff[1]),
                c_exp: Rational::new(t.c[0], t.c[1]),
                x_exp: t.x,
            });
        }
        Ok(UmbralExpression::from_terms(terms, max))
    }
}
