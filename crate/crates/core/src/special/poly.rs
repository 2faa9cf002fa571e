//! Two-variable Hermite and Laguerre polynomials and the Bessel truncated
//! polynomials, all as series in x with y a scalar parameter.

use super::gamma::{binomial, factorial};
use crate::series::TruncatedSeries;

/// Which variable a Hermite derivative acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// H_n(x, y) = n! sum_r x^{n-2r} y^r / ((n-2r)! r!), order n.
pub fn hermite2(n: usize, y: f64) -> TruncatedSeries {
    hermite2_padded(n, y, n)
}

/// H_n(x, y) as a series of the given order (>= n keeps every term).
pub fn hermite2_padded(n: usize, y: f64, order: usize) -> TruncatedSeries {
    let mut c = vec![0.0; order + 1];
    for r in 0..=n / 2 {
        let k = n - 2 * r;
        if k <= order {
            c[k] = factorial(n) * y.powi(r as i32) / (factorial(k) * factorial(r));
        }
    }
    TruncatedSeries::from_real(&c)
}

/// H_n(x, y) by the recurrence H_{k+1} = x H_k + 2 k y H_{k-1}.
pub fn hermite2_value(n: usize, x: f64, y: f64) -> f64 {
    let (mut prev, mut cur) = (1.0, x);
    if n == 0 {
        return 1.0;
    }
    for k in 1..n {
        let next = x * cur + 2.0 * k as f64 * y * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// s-th partial derivative of H_n(x, y) in x or y, as a series of order n.
///
/// d^s/dx^s H_n = n!/(n-s)! H_{n-s}; d^s/dy^s H_n = n!/(n-2s)! H_{n-2s};
/// zero once the degree is exhausted.
pub fn hermite2_derivative_rules(n: usize, s: usize, wrt: Var, y: f64) -> TruncatedSeries {
    let step = match wrt {
        Var::X => s,
        Var::Y => 2 * s,
    };
    if step > n {
        return TruncatedSeries::zero(n);
    }
    let m = n - step;
    hermite2_padded(m, y, n).scale_real(factorial(n) / factorial(m))
}

/// L_n(x, y) = sum_r C(n, r) (-x)^r y^{n-r} / r!, order n.
pub fn laguerre2(n: usize, y: f64) -> TruncatedSeries {
    let c: Vec<f64> = (0..=n)
        .map(|r| binomial(n, r) * (-1f64).powi(r as i32) * y.powi((n - r) as i32) / factorial(r))
        .collect();
    TruncatedSeries::from_real(&c)
}

/// L_n(x, y) by the three-term recurrence
/// (k+1) L_{k+1} = ((2k+1) y - x) L_k - k y^2 L_{k-1}.
pub fn laguerre2_value(n: usize, x: f64, y: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let (mut prev, mut cur) = (1.0, y - x);
    for k in 1..n {
        let kf = k as f64;
        let next = (((2.0 * kf + 1.0) * y - x) * cur - kf * y * y * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Classical Laguerre polynomial L_n(x) = L_n(x, 1).
pub fn laguerre_classical(n: usize, x: f64) -> f64 {
    laguerre2_value(n, x, 1.0)
}

/// b_n(x, y) = n! sum_r (-x)^r y^{n-r} / (r!)^2, order n.
pub fn bessel_truncated(n: usize, y: f64) -> TruncatedSeries {
    let c: Vec<f64> = (0..=n)
        .map(|r| {
            factorial(n) * (-1f64).powi(r as i32) * y.powi((n - r) as i32) / factorial(r).powi(2)
        })
        .collect();
    TruncatedSeries::from_real(&c)
}

/// Pointwise b_n(x, y).
pub fn bessel_truncated_value(n: usize, x: f64, y: f64) -> f64 {
    bessel_truncated(n, y).horner(crate::series::Scalar::new(x, 0.0)).re
}

/// e^{y d^2/dx^2} applied to a polynomial series: sum_k y^k/k! D^{2k}.
pub fn heat_propagate(p: &TruncatedSeries, y: f64) -> TruncatedSeries {
    let n = p.order();
    let mut out = p.clone();
    let mut d = p.clone();
    let mut k = 1usize;
    while 2 * k <= n {
        d = d
            .differentiate()
            .and_then(|q| q.differentiate())
            .expect("order checked above");
        let term = d.scale_real(y.powi(k as i32) / factorial(k));
        let padded = term.truncate(n);
        out = out.add(&padded);
        k += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Scalar;
    use num_rational::Ratio;

    type Q = Ratio<i128>;

    fn fact_q(n: usize) -> Q {
        Q::from_integer((1..=n as i128).product::<i128>().max(1))
    }

    fn hermite_q(n: usize, y: Q) -> Vec<Q> {
        let mut c = vec![Q::from_integer(0); n + 1];
        for r in 0..=n / 2 {
            c[n - 2 * r] = fact_q(n) * y.pow(r as i32) / (fact_q(n - 2 * r) * fact_q(r));
        }
        c
    }

    fn to_f(q: &Q) -> f64 {
        *q.numer() as f64 / *q.denom() as f64
    }

    fn matches(s: &TruncatedSeries, q: &[Q]) -> bool {
        (0..=s.order()).all(|k| {
            let e = q.get(k).map(to_f).unwrap_or(0.0);
            (s.coeff(k).re - e).abs() <= 1e-15 * e.abs().max(1.0)
        })
    }

    #[test]
    fn hermite_examples() {
        assert_eq!(hermite2(0, 3.0), TruncatedSeries::from_real(&[1.0]));
        assert_eq!(hermite2(2, 1.5), TruncatedSeries::from_real(&[3.0, 0.0, 1.0]));
        // e^{y D^2} x^6 at y = -1, x = 1
        let x6 = TruncatedSeries::from_real(&[0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
        let v = heat_propagate(&x6, -1.0).eval_real(1.0).unwrap();
        assert_eq!(v, hermite2(6, -1.0).eval_real(1.0).unwrap());
        assert_eq!(v, hermite2_value(6, 1.0, -1.0));
        // 1 - 30 + 180 - 120
        assert_eq!(v, 31.0);
    }

    #[test]
    fn hermite_derivative_examples() {
        assert_eq!(
            hermite2_derivative_rules(2, 1, Var::X, 0.7),
            TruncatedSeries::from_real(&[0.0, 2.0, 0.0])
        );
        let y = 0.5;
        let expect = hermite2_padded(2, y, 4).scale_real(12.0);
        assert_eq!(hermite2_derivative_rules(4, 1, Var::Y, y), expect);
        assert_eq!(hermite2_derivative_rules(3, 2, Var::Y, y), TruncatedSeries::zero(3));
    }

    #[test]
    fn hermite_rules_exact_in_rationals() {
        for &(yn, yd) in &[(-1i128, 1i128), (1, 1), (5, 2)] {
            let yq = Q::new(yn, yd);
            let yf = to_f(&yq);
            for n in 0..=12usize {
                assert!(matches(&hermite2(n, yf), &hermite_q(n, yq)));
                for s in 0..=n {
                    // x-derivative: differentiate the rational coefficients s times
                    let mut q = hermite_q(n, yq);
                    for _ in 0..s {
                        q = (1..q.len()).map(|k| q[k] * Q::from_integer(k as i128)).collect();
                    }
                    assert!(matches(&hermite2_derivative_rules(n, s, Var::X, yf), &q));
                    // y-derivative: d/dy of y^r
                    let dq: Vec<Q> = (0..=n)
                        .map(|k| {
                            if (n - k) % 2 == 1 || k > n {
                                return Q::from_integer(0);
                            }
                            let r = (n - k) / 2;
                            if r < s {
                                return Q::from_integer(0);
                            }
                            let falling: i128 = (0..s as i128).map(|j| r as i128 - j).product();
                            fact_q(n) * Q::from_integer(falling) * yq.pow((r - s) as i32)
                                / (fact_q(k) * fact_q(r))
                        })
                        .collect();
                    assert!(matches(&hermite2_derivative_rules(n, s, Var::Y, yf), &dq), "n={n} s={s}");
                }
            }
        }
    }

    #[test]
    fn laguerre_examples() {
        let y = 0.3;
        let l1 = laguerre2(1, y);
        assert!((l1.coeff(0).re - y).abs() < 1e-16 && l1.coeff(1).re == -1.0);
        assert_eq!(laguerre2(2, 1.0), TruncatedSeries::from_real(&[1.0, -2.0, 0.5]));
        // L_3(1, 2) = 8 L_3(1/2) with L_3(1/2) = -0.1458333...
        let v = laguerre2(3, 2.0).eval_real(1.0).unwrap();
        assert!((v - 8.0 * laguerre_classical(3, 0.5)).abs() < 1e-14);
        assert!((v + 1.166_666_666_666_666_7).abs() < 1e-14);
    }

    #[test]
    fn laguerre_homogeneity() {
        for n in 0..=10usize {
            for &y in &[0.5, -1.5, 2.0, 3.0] {
                for &x in &[-1.0, 0.3, 2.2] {
                    let lhs = laguerre2(n, y).eval_real(x).unwrap();
                    let rhs = y.powi(n as i32) * laguerre2(n, 1.0).eval_real(x / y).unwrap();
                    assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0), "n={n} y={y} x={x}");
                    let rec = laguerre2_value(n, x, y);
                    assert!((lhs - rec).abs() <= 1e-12 * lhs.abs().max(1.0));
                }
            }
        }
    }

    #[test]
    fn bessel_truncated_examples() {
        assert_eq!(bessel_truncated(0, 2.0), TruncatedSeries::from_real(&[1.0]));
        assert_eq!(bessel_truncated(1, 2.0), TruncatedSeries::from_real(&[2.0, -1.0]));
        let v = bessel_truncated_value(3, 0.4, 1.0);
        assert_eq!(v, bessel_truncated(3, 1.0).horner(Scalar::new(0.4, 0.0)).re);
    }
}
