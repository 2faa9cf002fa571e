//! Gauss-Laguerre rules for the weight t^{gamma-1} e^{-t} on [0, inf).
//!
//! Nodes start from the eigenvalues of the Jacobi matrix and are polished
//! by Newton steps on the generalized Laguerre recurrence; weights come
//! from the derivative formula evaluated in log space.

use super::QuadratureError;
use crate::special::gamma::ln_gamma;
use nalgebra::{DMatrix, SymmetricEigen};

/// Nodes and weights of an n-point rule.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    /// sum_i w_i g(x_i) in node order.
    pub fn apply(&self, g: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| if w == 0.0 { 0.0 } else { w * g(x) }).sum()
    }
}

/// (L_n^{(a)}(x), L_{n-1}^{(a)}(x), log scale) with rescaling against overflow.
fn laguerre_pair(n: usize, a: f64, x: f64) -> (f64, f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = 1.0 + a - x;
    let mut scale = 0.0;
    if n == 0 {
        return (1.0, 0.0, 0.0);
    }
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + 1.0 + a - x) * p1 - (kf + a) * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
        if p1.abs() > 1e150 {
            p0 *= 1e-150;
            p1 *= 1e-150;
            scale += 150.0 * std::f64::consts::LN_10;
        }
    }
    (p1, p0, scale)
}

/// n-point rule for the weight t^{gamma-1} e^{-t}.
pub fn gauss_laguerre_nodes(n: usize, gamma: f64) -> Result<GaussRule, QuadratureError> {
    if n == 0 || !(gamma > 0.0) {
        return Err(QuadratureError::InvalidRule { n, gamma });
    }
    let a = gamma - 1.0;
    let mut jac = DMatrix::<f64>::zeros(n, n);
    for k in 0..n {
        jac[(k, k)] = 2.0 * k as f64 + a + 1.0;
        if k + 1 < n {
            let off = ((k + 1) as f64 * (k as f64 + 1.0 + a)).sqrt();
            jac[(k, k + 1)] = off;
            jac[(k + 1, k)] = off;
        }
    }
    let eig = SymmetricEigen::try_new(jac, f64::EPSILON, 10_000).ok_or(QuadratureError::EigenFailure)?;
    let mut nodes: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    nodes.sort_by(f64::total_cmp);

    let nf = n as f64;
    let ln_norm = ln_gamma(nf + a + 1.0) - ln_gamma(nf + 1.0);
    let mut weights = Vec::with_capacity(n);
    for x in nodes.iter_mut() {
        for _ in 0..4 {
            let (p, q, _) = laguerre_pair(n, a, *x);
            // x L_n' = n L_n - (n + a) L_{n-1}
            let dp = (nf * p - (nf + a) * q) / *x;
            let step = p / dp;
            *x -= step;
            if step.abs() <= 4.0 * f64::EPSILON * x.abs() {
                break;
            }
        }
        let (p, q, scale) = laguerre_pair(n, a, *x);
        let dp = (nf * p - (nf + a) * q) / *x;
        let ln_w = ln_norm - x.ln() - 2.0 * (dp.abs().ln() + scale);
        weights.push(ln_w.exp());
    }
    if nodes.iter().chain(&weights).any(|v| !v.is_finite()) {
        return Err(QuadratureError::EigenFailure);
    }
    Ok(GaussRule { nodes, weights })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::gamma::gamma;
    use proptest::prelude::*;

    #[test]
    fn total_weight_matches_gamma() {
        let r = gauss_laguerre_nodes(64, 1.0).unwrap();
        assert!((r.apply(|_| 1.0) - 1.0).abs() < 1e-14);
        let r3 = gauss_laguerre_nodes(64, 3.0).unwrap();
        assert!((r3.apply(|_| 1.0) - 2.0).abs() < 1e-13);
        assert!((r.apply(|t| t.powi(5)) - 120.0).abs() < 1e-11);
        let rh = gauss_laguerre_nodes(40, 0.5).unwrap();
        assert!((rh.apply(|_| 1.0) - gamma(0.5)).abs() < 1e-14);
    }

    #[test]
    fn small_rule_known_values() {
        // two-point rule for e^{-t}: nodes 2 -+ sqrt 2
        let r = gauss_laguerre_nodes(2, 1.0).unwrap();
        assert!((r.nodes[0] - (2.0 - 2f64.sqrt())).abs() < 1e-15);
        assert!((r.weights[0] - (2.0 + 2f64.sqrt()) / 4.0).abs() < 1e-15);
    }

    #[test]
    fn invalid_rules_rejected() {
        assert!(gauss_laguerre_nodes(0, 1.0).is_err());
        assert!(gauss_laguerre_nodes(4, 0.0).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn exact_for_polynomials(
            coeffs in proptest::collection::vec(-1.0f64..1.0, 1..128),
            which in 0usize..2,
            gam in 0.5f64..3.0,
        ) {
            let n = [32usize, 64][which];
            let deg = (coeffs.len() - 1).min(2 * n - 1);
            let rule = gauss_laguerre_nodes(n, gam).unwrap();
            // int t^{k+gam-1} e^{-t} = Gamma(k + gam); compare monomial by monomial scale
            let exact: f64 = (0..=deg).map(|k| coeffs[k] * gamma(k as f64 + gam)).sum();
            let scale: f64 = (0..=deg).map(|k| coeffs[k].abs() * gamma(k as f64 + gam)).sum();
            let approx = rule.apply(|t| (0..=deg).rev().fold(0.0, |acc, k| acc * t + coeffs[k]));
            prop_assert!((approx - exact).abs() <= 1e-11 * scale, "{approx} {exact}");
        }
    }
}
