//! Truncated power series with complex coefficients.

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Complex double scalar used for every coefficient.
pub type Scalar = Complex64;

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 64;

/// Per-coefficient absolute tolerance for series equality.
pub const COEFF_ABS_TOL: f64 = 1e-12;
/// Per-coefficient relative tolerance for series equality.
pub const COEFF_REL_TOL: f64 = 1e-10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SeriesError {
    #[error("cannot differentiate constant-only series")]
    ConstantOnly,
    #[error("non-finite coefficient at index {0}")]
    NonFinite(usize),
    #[error("coefficient list has {got} entries but order {order} needs {}", order + 1)]
    LengthMismatch { order: usize, got: usize },
    #[error(
        "series has zero estimated radius and its terms at |x|={x} start growing after index {turn}; \
         pass an explicit policy to sum it anyway"
    )]
    Divergent { x: f64, turn: usize },
}

/// Finite list of coefficients for x^0..x^N.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Scalar>,
}

/// Rough classification of the radius of convergence.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Radius {
    Zero,
    Finite(f64),
    Infinite,
    /// Too few nonzero coefficients to tell (polynomials land here).
    Unknown,
}

/// What `eval_with` does with a series whose terms turn around.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalPolicy {
    /// Error out when a zero-radius series starts growing inside the truncation.
    Refuse,
    /// Stop just before the smallest term (optimal truncation).
    SmallestTerm,
    /// Sum every stored term regardless.
    SumAll,
}

/// Value of a series at a point plus a tail diagnostic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Evaluation {
    pub value: Scalar,
    /// Magnitude of the last term included (or the first term left out
    /// under `SmallestTerm`).
    pub tail: f64,
    pub terms_used: usize,
}

impl TruncatedSeries {
    /// Builds a series; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Scalar>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::LengthMismatch { order: 0, got: 0 });
        }
        if let Some(i) = coeffs.iter().position(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(SeriesError::NonFinite(i));
        }
        Ok(Self { coeffs })
    }

    /// Real coefficients; panics on non-finite input, which only internal
    /// constructors with known-finite coefficients should use.
    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Scalar::new(c, 0.0)).collect())
            .expect("finite real coefficients")
    }

    /// Builds from a closure on the index, real-valued.
    pub fn from_fn(order: usize, f: impl Fn(usize) -> f64) -> Result<Self, SeriesError> {
        Self::new((0..=order).map(|k| Scalar::new(f(k), 0.0)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Scalar::new(0.0, 0.0); order + 1] }
    }

    pub fn constant(c: Scalar, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Coefficient k, zero past the order.
    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn real_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.re).collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.resize(order + 1, Scalar::default());
        Self { coeffs: c }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self { coeffs: (0..=n).map(|k| self.coeffs[k] + other.coeffs[k]).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Scalar::new(-1.0, 0.0)))
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let coeffs = (0..=n)
            .map(|k| (0..=k).map(|j| self.coeffs[j] * other.coeffs[k - j]).sum())
            .collect();
        Self { coeffs }
    }

    pub fn scale(&self, s: Scalar) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        self.scale(Scalar::new(s, 0.0))
    }

    pub fn differentiate(&self) -> Result<Self, SeriesError> {
        if self.order() == 0 {
            return Err(SeriesError::ConstantOnly);
        }
        Ok(Self {
            coeffs: (1..=self.order()).map(|k| self.coeffs[k] * k as f64).collect(),
        })
    }

    /// Primitive vanishing at 0; the order grows by one.
    pub fn antidifferentiate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Scalar::default());
        coeffs.extend(self.coeffs.iter().enumerate().map(|(k, c)| c / (k + 1) as f64));
        Self { coeffs }
    }

    /// Substitutes x -> s x.
    pub fn compose_linear(&self, s: Scalar) -> Self {
        let mut p = Scalar::new(1.0, 0.0);
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let v = c * p;
                p *= s;
                v
            })
            .collect();
        Self { coeffs }
    }

    /// Substitutes x -> x^k, giving a series of order k * N.
    pub fn stretch(&self, k: usize) -> Self {
        assert!(k >= 1, "stretch factor must be positive");
        let mut out = Self::zero(self.order() * k);
        for (j, c) in self.coeffs.iter().enumerate() {
            out.coeffs[j * k] = *c;
        }
        out
    }

    /// Multiplies by x^k, keeping the order fixed (top coefficients drop).
    pub fn shift_up(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order());
        for j in 0..=self.order() {
            if j + k <= self.order() {
                out.coeffs[j + k] = self.coeffs[j];
            }
        }
        out
    }

    /// Horner value, no divergence guard.
    pub fn horner(&self, x: Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::default(), |acc, c| acc * x + c)
    }

    /// Plain forward summation of a_k x^k; used to cross-check `horner`.
    pub fn naive_sum(&self, x: Scalar) -> Scalar {
        let mut p = Scalar::new(1.0, 0.0);
        let mut acc = Scalar::default();
        for c in &self.coeffs {
            acc += c * p;
            p *= x;
        }
        acc
    }

    /// Guarded evaluation with the `Refuse` policy.
    pub fn eval(&self, x: Scalar) -> Result<Evaluation, SeriesError> {
        self.eval_with(x, EvalPolicy::Refuse)
    }

    pub fn eval_real(&self, x: f64) -> Result<f64, SeriesError> {
        Ok(self.eval(Scalar::new(x, 0.0))?.value.re)
    }

    pub fn eval_with(&self, x: Scalar, policy: EvalPolicy) -> Result<Evaluation, SeriesError> {
        let n = self.order();
        let last_term = |upto: usize| (self.coeffs[upto] * x.powu(upto as u32)).norm();
        let full = |s: &Self| Evaluation { value: s.horner(x), tail: last_term(n), terms_used: n + 1 };
        if policy == EvalPolicy::SumAll || x.norm() == 0.0 {
            return Ok(full(self));
        }
        if self.radius() != Radius::Zero {
            return Ok(full(self));
        }
        let turn = match self.smallest_term_index(x) {
            Some(t) => t,
            None => return Ok(full(self)),
        };
        match policy {
            EvalPolicy::Refuse => Err(SeriesError::Divergent { x: x.norm(), turn }),
            _ => {
                let head = self.truncate(turn.saturating_sub(1));
                let used = if turn == 0 { 0 } else { turn };
                let value = if used == 0 { Scalar::default() } else { head.horner(x) };
                Ok(Evaluation { value, tail: last_term(turn), terms_used: used })
            }
        }
    }

    /// Index of the smallest nonzero term before the terms start growing,
    /// or `None` if they never grow within the stored order.
    fn smallest_term_index(&self, x: Scalar) -> Option<usize> {
        let mags: Vec<(usize, f64)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.norm() > 0.0)
            .map(|(k, c)| (k, (c * x.powu(k as u32)).norm()))
            .collect();
        let mut best = 0usize;
        for i in 1..mags.len() {
            if mags[i].1 > mags[best].1 {
                if mags[best].0 < self.order() && best + 1 < mags.len() {
                    return Some(mags[best].0);
                }
            } else {
                best = i;
            }
        }
        None
    }

    /// Heuristic radius estimate from the growth of |a_k|^{-1/k}.
    ///
    /// Needs at least eight nonzero coefficients; fits the log-log slope of
    /// |a_k|^{-1/k} against k over the upper half of them.
    pub fn radius(&self) -> Radius {
        let pts: Vec<(f64, f64)> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, c)| c.norm() > 0.0)
            .map(|(k, c)| ((k as f64).ln(), -c.norm().ln() / k as f64))
            .collect();
        if pts.len() < 8 {
            return Radius::Unknown;
        }
        let upper = &pts[pts.len() / 2..];
        let m = upper.len() as f64;
        let mx = upper.iter().map(|p| p.0).sum::<f64>() / m;
        let my = upper.iter().map(|p| p.1).sum::<f64>() / m;
        let sxx: f64 = upper.iter().map(|p| (p.0 - mx).powi(2)).sum();
        let sxy: f64 = upper.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let slope = sxy / sxx;
        if slope < -0.25 {
            Radius::Zero
        } else if slope > 0.25 {
            Radius::Infinite
        } else {
            Radius::Finite(my.exp())
        }
    }

    /// Equality with the default per-coefficient tolerances.
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.approx_eq_tol(other, COEFF_ABS_TOL, COEFF_REL_TOL)
    }

    /// Orders must match; each coefficient within `abs` OR within `rel`.
    pub fn approx_eq_tol(&self, other: &Self, abs: f64, rel: f64) -> bool {
        self.order() == other.order()
            && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| {
                let d = (a - b).norm();
                d <= abs || d <= rel * a.norm().max(b.norm())
            })
    }

    /// Largest per-coefficient relative difference (absolute where both vanish).
    pub fn max_rel_diff(&self, other: &Self) -> f64 {
        let n = self.order().min(other.order());
        (0..=n)
            .map(|k| {
                let (a, b) = (self.coeffs[k], other.coeffs[k]);
                let d = (a - b).norm();
                let s = a.norm().max(b.norm());
                if s == 0.0 {
                    0.0
                } else {
                    d / s
                }
            })
            .fold(0.0, f64::max)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    order: usize,
    coeffs: Vec<[f64; 2]>,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SeriesRepr {
            order: self.order(),
            coeffs: self.coeffs.iter().map(|c| [c.re, c.im]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(d)?;
        if repr.coeffs.len() != repr.order + 1 {
            return Err(serde::de::Error::custom(SeriesError::LengthMismatch {
                order: repr.order,
                got: repr.coeffs.len(),
            }));
        }
        TruncatedSeries::new(repr.coeffs.iter().map(|c| Scalar::new(c[0], c[1])).collect())
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::gamma::{factorial, gamma};
    use proptest::prelude::*;

    fn c(re: f64) -> Scalar {
        Scalar::new(re, 0.0)
    }

    fn exp_series(n: usize, sign: f64) -> TruncatedSeries {
        TruncatedSeries::from_fn(n, |k| sign.powi(k as i32) / factorial(k)).unwrap()
    }

    fn j0_series(n: usize) -> TruncatedSeries {
        TruncatedSeries::from_fn(n, |k| {
            if k % 2 == 1 {
                0.0
            } else {
                let r = k / 2;
                (-1f64).powi(r as i32) / (4f64.powi(r as i32) * factorial(r).powi(2))
            }
        })
        .unwrap()
    }

    #[test]
    fn add_takes_min_order() {
        let a = TruncatedSeries::from_real(&[1.0, 1.0]);
        let b = TruncatedSeries::from_real(&[1.0, -1.0, 5.0]);
        assert_eq!(a.add(&b), TruncatedSeries::from_real(&[2.0, 0.0]));
        let e = exp_series(8, 1.0);
        assert!(e.add(&e.scale_real(-1.0)).coeffs().iter().all(|c| c.norm() == 0.0));
        assert_eq!(e.add(&TruncatedSeries::zero(3)), e.truncate(3));
    }

    #[test]
    fn mul_examples() {
        let a = TruncatedSeries::from_real(&[1.0, 1.0, 0.0]);
        let b = TruncatedSeries::from_real(&[1.0, -1.0, 0.0]);
        assert_eq!(a.mul(&b), TruncatedSeries::from_real(&[1.0, 0.0, -1.0]));
        let one = exp_series(20, 1.0).mul(&exp_series(20, -1.0));
        assert!(one.approx_eq(&TruncatedSeries::constant(c(1.0), 20)));
    }

    #[test]
    fn gaussian_times_erfi_is_sn_half() {
        let n = 12;
        let gauss = TruncatedSeries::from_fn(n, |k| {
            if k % 2 == 1 { 0.0 } else { (-1f64).powi((k / 2) as i32) / factorial(k / 2) }
        })
        .unwrap();
        // erfi(x) = (2/sqrt(pi)) sum x^{2r+1} / (r! (2r+1))
        let erfi = TruncatedSeries::from_fn(n, |k| {
            if k % 2 == 0 {
                0.0
            } else {
                let r = k / 2;
                2.0 / std::f64::consts::PI.sqrt() / (factorial(r) * (2 * r + 1) as f64)
            }
        })
        .unwrap();
        let sn = TruncatedSeries::from_fn(n, |k| {
            if k % 2 == 0 { 0.0 } else { (-1f64).powi((k / 2) as i32) / gamma(k as f64 / 2.0 + 1.0) }
        })
        .unwrap();
        assert!(gauss.mul(&erfi).approx_eq(&sn));
    }

    #[test]
    fn scale_examples() {
        let a = TruncatedSeries::from_real(&[1.0, 1.0]);
        assert_eq!(a.scale_real(2.0), TruncatedSeries::from_real(&[2.0, 2.0]));
        assert_eq!(a.scale_real(0.0), TruncatedSeries::zero(1));
        assert_eq!(a.scale_real(1.0), a);
    }

    #[test]
    fn differentiate_examples() {
        let a = TruncatedSeries::from_real(&[1.0, 1.0, 1.0]);
        assert_eq!(a.differentiate().unwrap(), TruncatedSeries::from_real(&[1.0, 2.0]));
        assert_eq!(
            TruncatedSeries::from_real(&[3.0]).differentiate(),
            Err(SeriesError::ConstantOnly)
        );
        let e = exp_series(10, 1.0);
        assert!(e.differentiate().unwrap().approx_eq(&e.truncate(9)));
        // d/dx J0 = -J1 = -sum (-1)^r (x/2)^{2r+1} / (r! (r+1)!)
        let dj0 = j0_series(20).differentiate().unwrap();
        let minus_j1 = TruncatedSeries::from_fn(19, |k| {
            if k % 2 == 0 {
                0.0
            } else {
                let r = k / 2;
                -(-1f64).powi(r as i32) / (2f64.powi(k as i32) * factorial(r) * factorial(r + 1))
            }
        })
        .unwrap();
        assert!(dj0.approx_eq(&minus_j1));
    }

    #[test]
    fn antidifferentiate_examples() {
        assert_eq!(
            TruncatedSeries::from_real(&[1.0]).antidifferentiate(),
            TruncatedSeries::from_real(&[0.0, 1.0])
        );
        let a = TruncatedSeries::from_real(&[4.0, 1.0, -2.0, 0.5]);
        let back = a.differentiate().unwrap().antidifferentiate();
        assert_eq!(back, TruncatedSeries::from_real(&[0.0, 1.0, -2.0, 0.5]));
        let v = j0_series(40).antidifferentiate().eval_real(1.0).unwrap();
        assert!((v - 0.919_730_410_089_760_239).abs() < 1e-15);
    }

    #[test]
    fn eval_examples() {
        let a = TruncatedSeries::from_real(&[1.0, 1.0, 1.0]);
        assert_eq!(a.eval_real(2.0).unwrap(), 7.0);
        let e = exp_series(30, 1.0).eval(c(1.0)).unwrap();
        assert!((e.value.re - std::f64::consts::E).abs() < 1e-12);
        assert!(e.tail < 1e-30);
        let j = j0_series(40).eval_real(2.0).unwrap();
        assert!((j - 0.223_890_779_141_235_668).abs() < 1e-15);
    }

    #[test]
    fn compose_linear_examples() {
        let a = TruncatedSeries::from_real(&[1.0, 1.0]);
        assert_eq!(a.compose_linear(c(2.0)), TruncatedSeries::from_real(&[1.0, 2.0]));
        assert_eq!(a.compose_linear(c(1.0)), a);
        assert!(exp_series(12, 1.0).compose_linear(c(-1.0)).approx_eq(&exp_series(12, -1.0)));
    }

    #[test]
    fn radius_classification() {
        assert_eq!(exp_series(64, 1.0).radius(), Radius::Infinite);
        assert_eq!(j0_series(64).radius(), Radius::Infinite);
        let fact = TruncatedSeries::from_fn(64, |k| (-1f64).powi(k as i32) * factorial(k)).unwrap();
        assert_eq!(fact.radius(), Radius::Zero);
        match TruncatedSeries::from_fn(64, |k| 0.5f64.powi(k as i32)).unwrap().radius() {
            Radius::Finite(r) => assert!((r - 2.0).abs() < 1e-9),
            other => panic!("{other:?}"),
        }
        assert_eq!(TruncatedSeries::from_real(&[1.0, 2.0]).radius(), Radius::Unknown);
    }

    #[test]
    fn divergent_series_guard() {
        let fact = TruncatedSeries::from_fn(64, |k| (-1f64).powi(k as i32) * factorial(k)).unwrap();
        assert!(matches!(fact.eval(c(0.5)), Err(SeriesError::Divergent { .. })));
        // terms k! 0.15^k shrink until k = 6
        let opt = fact.eval_with(c(0.15), EvalPolicy::SmallestTerm).unwrap();
        assert_eq!(opt.terms_used, 6);
        assert!((opt.value.re - 0.877_787_5).abs() < 1e-15);
        // within one smallest term of the Borel sum int e^{-t}/(1+0.15t) dt
        assert!((opt.value.re - 0.881_932_794_556_067).abs() < opt.tail);
        assert!(fact.eval_with(c(0.5), EvalPolicy::SumAll).is_ok());
        // tiny arguments never turn around within 64 terms
        assert!(fact.eval(c(0.001)).is_ok());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let a = TruncatedSeries::new(vec![Scalar::new(1.0, -2.0), Scalar::new(0.5, 0.0)]).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"order":1,"coeffs":[[1.0,-2.0],[0.5,0.0]]}"#);
        assert_eq!(serde_json::from_str::<TruncatedSeries>(&s).unwrap(), a);
        assert!(serde_json::from_str::<TruncatedSeries>(r#"{"order":2,"coeffs":[[1,0]]}"#).is_err());
    }

    #[test]
    fn equality_tolerance_modes() {
        let a = TruncatedSeries::from_real(&[1e20, 1e-13]);
        let b = TruncatedSeries::from_real(&[1e20 * (1.0 + 1e-11), 0.0]);
        assert!(a.approx_eq(&b));
        assert!(!a.approx_eq(&TruncatedSeries::from_real(&[1e20 * (1.0 + 1e-9), 0.0])));
        assert!(!a.approx_eq(&a.truncate(0)));
    }

    fn arb_series(n: usize) -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec((-2.0f64..2.0, -2.0f64..2.0), n + 1).prop_map(|v| {
            TruncatedSeries::new(v.into_iter().map(|(r, i)| Scalar::new(r, i)).collect()).unwrap()
        })
    }

    fn close(a: &TruncatedSeries, b: &TruncatedSeries, rel: f64) -> bool {
        a.coeffs().iter().zip(b.coeffs()).all(|(x, y)| (x - y).norm() <= rel * (1.0 + x.norm().max(y.norm())))
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_series(16), b in arb_series(16), cc in arb_series(16)) {
            prop_assert!(close(&a.mul(&b).mul(&cc), &a.mul(&b.mul(&cc)), 1e-12));
            prop_assert!(close(&a.mul(&b.add(&cc)), &a.mul(&b).add(&a.mul(&cc)), 1e-12));
            prop_assert!(close(&a.mul(&b), &b.mul(&a), 1e-14));
        }

        #[test]
        fn differentiate_inverts_antidifferentiate(a in arb_series(24)) {
            let back = a.antidifferentiate().differentiate().unwrap();
            prop_assert_eq!(back.order(), a.order());
            for (x, y) in back.coeffs().iter().zip(a.coeffs()) {
                prop_assert!((x - y).norm() <= 2.0 * f64::EPSILON * y.norm());
            }
        }

        #[test]
        fn compose_linear_inverse(a in arb_series(20), idx in 0usize..3) {
            let s = [2.0, -3.0, 0.5][idx];
            let back = a.compose_linear(c(s)).compose_linear(c(1.0 / s));
            prop_assert!(close(&back, &a, 1e-12));
        }

        #[test]
        fn horner_matches_naive_sum(a in arb_series(30), x in -1.5f64..1.5, y in -1.5f64..1.5) {
            let z = Scalar::new(x, y);
            let h = a.horner(z);
            let n = a.naive_sum(z);
            let scale: f64 = a.coeffs().iter().enumerate().map(|(k, cf)| cf.norm() * z.norm().powi(k as i32)).sum();
            prop_assert!((h - n).norm() <= 1e-13 * scale.max(1e-300));
        }
    }
}
