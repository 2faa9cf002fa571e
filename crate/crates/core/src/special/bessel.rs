//! Pointwise Bessel-type evaluators on the real line.
//!
//! J_n uses the power series for moderate arguments, Miller's backward
//! recurrence in the transition region and the Hankel expansion far out.

use super::gamma::{factorial, rgamma};
use std::f64::consts::PI;

const SERIES_LIMIT: f64 = 8.0;

/// Bessel J_n(x) for integer n >= 0.
pub fn bessel_j(n: usize, x: f64) -> f64 {
    if x < 0.0 {
        let v = bessel_j(n, -x);
        return if n % 2 == 0 { v } else { -v };
    }
    if x == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    if x <= SERIES_LIMIT {
        return bessel_j_series(n, x).0;
    }
    let nf = n as f64;
    if x >= 25.0_f64.max(nf * nf) {
        return bessel_j_hankel(n, x);
    }
    bessel_j_miller(n, x)
}

/// J_n(x) from the power series, with the magnitude of the last term kept.
pub fn bessel_j_series(n: usize, x: f64) -> (f64, f64) {
    let h = 0.5 * x;
    let mut term = h.powi(n as i32) / factorial(n);
    let mut sum = term;
    let q = -h * h;
    let mut k = 0usize;
    loop {
        k += 1;
        term *= q / (k as f64 * (k + n) as f64);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs().max(1e-300) || k > 500 {
            break;
        }
    }
    (sum, term.abs())
}

fn bessel_j_miller(n: usize, x: f64) -> f64 {
    let top = (n as f64).max(x);
    let mut m = (top + 20.0 + (40.0 * top).sqrt()) as usize;
    m += m % 2;
    let mut jp1 = 0.0;
    let mut j = 1e-300;
    let mut norm = 0.0;
    let mut result = 0.0;
    for k in (1..=m).rev() {
        let jm1 = 2.0 * k as f64 / x * j - jp1;
        jp1 = j;
        j = jm1;
        if (k - 1) % 2 == 0 && k - 1 > 0 {
            norm += 2.0 * j;
        }
        if k - 1 == n {
            result = j;
        }
        if j.abs() > 1e250 {
            j *= 1e-250;
            jp1 *= 1e-250;
            norm *= 1e-250;
            result *= 1e-250;
        }
    }
    norm += j;
    result / norm
}

fn bessel_j_hankel(n: usize, x: f64) -> f64 {
    let mu = 4.0 * (n * n) as f64;
    let mut p = 0.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut prev = f64::INFINITY;
    for k in 0..200usize {
        if k > 0 {
            let odd = (2 * k - 1) as f64;
            term *= (mu - odd * odd) / (k as f64 * 8.0 * x);
        }
        if term.abs() > prev && k > 2 {
            break;
        }
        prev = term.abs();
        match k % 4 {
            0 => p += term,
            1 => q += term,
            2 => p -= term,
            _ => q -= term,
        }
        if term.abs() < 1e-17 {
            break;
        }
    }
    let chi = x - (0.5 * n as f64 + 0.25) * PI;
    (2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}

/// R_n(x) = (x/2)^{-n} J_n(x), with the limit 1/n! at the origin.
pub fn bessel_r(n: usize, x: f64) -> f64 {
    if x.abs() <= SERIES_LIMIT {
        let h = 0.5 * x;
        let q = -h * h;
        let mut term = 1.0 / factorial(n);
        let mut sum = term;
        for k in 1..500usize {
            term *= q / (k as f64 * (k + n) as f64);
            sum += term;
            if term.abs() <= 1e-17 * sum.abs() {
                break;
            }
        }
        return sum;
    }
    bessel_j(n, x) / (0.5 * x).powi(n as i32)
}

/// Modified Bessel I_0(x) from its (all-positive) series.
pub fn bessel_i0(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..1000usize {
        term *= q / (k * k) as f64;
        sum += term;
        if term <= 1e-17 * sum {
            break;
        }
    }
    sum
}

/// e^{-x} I_0(x) for x >= 0, finite for arguments where I_0 overflows.
pub fn bessel_i0_scaled(x: f64) -> f64 {
    let x = x.abs();
    if x <= 700.0 {
        return bessel_i0(x) * (-x).exp();
    }
    // asymptotic series, terms ((2k-1)!!)^2 / (k! (8x)^k)
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..30usize {
        let m = (2 * k - 1) as f64;
        term *= m * m / (8.0 * k as f64 * x);
        sum += term;
        if term < 1e-17 * sum {
            break;
        }
    }
    sum / (2.0 * std::f64::consts::PI * x).sqrt()
}

/// Tricomi function C_s(z) = sum (-z)^r / (r! (r+s)!), real s >= 0 allowed.
///
/// Uses the series near the origin and on the negative axis (no
/// cancellation there), the Bessel route z^{-s/2} J_s(2 sqrt z) otherwise.
pub fn tricomi_c(s: f64, z: f64) -> f64 {
    let integer = s == s.floor() && s >= 0.0;
    if z <= 16.0 || !integer {
        let mut term = rgamma(s + 1.0);
        let mut sum = term;
        for r in 1..2000usize {
            term *= -z / (r as f64 * (r as f64 + s));
            sum += term;
            if term.abs() <= 1e-17 * sum.abs().max(1e-300) {
                break;
            }
        }
        return sum;
    }
    let n = s as usize;
    let w = 2.0 * z.sqrt();
    bessel_j(n, w) / z.powf(0.5 * s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        // 30-digit references
        assert!((bessel_j(0, 2.0) - 0.223_890_779_141_235_668).abs() < 1e-15);
        assert!((bessel_j(1, 2.0) - 0.576_724_807_756_873_387).abs() < 1e-15);
        assert!((bessel_j(1, 1.0) - 0.440_050_585_744_933_516).abs() < 1e-15);
        assert_eq!(bessel_j(0, 0.0), 1.0);
        assert_eq!(bessel_j(3, 0.0), 0.0);
    }

    #[test]
    fn scaled_i0_is_continuous_across_the_switch() {
        // slope is about -f/(2x), so a 1e-9 step moves f by 7e-13 relative
        let below = bessel_i0_scaled(700.0);
        let above = bessel_i0_scaled(700.0 + 1e-9);
        assert!((below - above).abs() < 1e-12 * below);
        // mpmath: besseli(0, 700) * exp(-700)
        assert!((below - 0.015_081_295_651_531_357_6).abs() < 1e-16);
        // mpmath: besseli(0, 1000) * exp(-1000)
        assert!((bessel_i0_scaled(1000.0) - 0.012_617_240_455_891_257).abs() < 1e-16);
    }

    #[test]
    fn regimes_agree_at_their_boundaries() {
        for n in 0..6 {
            for &x in &[7.9, 8.1, 12.0, 24.9, 25.1, 40.0] {
                let miller = bessel_j_miller(n, x);
                let other = if x <= SERIES_LIMIT {
                    bessel_j_series(n, x).0
                } else {
                    bessel_j_hankel(n, x.max(25.0))
                };
                if x <= SERIES_LIMIT || x >= 25.0 {
                    assert!((miller - other).abs() < 2e-14, "n={n} x={x} {miller} {other}");
                }
            }
        }
    }

    #[test]
    fn odd_order_is_odd() {
        assert!((bessel_j(1, -2.0) + bessel_j(1, 2.0)).abs() < 1e-16);
        assert_eq!(bessel_j(2, -3.0), bessel_j(2, 3.0));
    }

    #[test]
    fn r_limit_and_i0() {
        assert_eq!(bessel_r(2, 0.0), 0.5);
        assert!((bessel_r(1, 2.0) - 0.576_724_807_756_873_387).abs() < 1e-15);
        assert!((bessel_i0(1.0) - 1.266_065_877_752_008_4).abs() < 1e-15);
    }

    #[test]
    fn tricomi_matches_bessel_route() {
        // C_1(1) = J_1(2)
        assert!((tricomi_c(1.0, 1.0) - 0.576_724_807_756_873_387).abs() < 1e-15);
        for &z in &[10.0, 20.0, 100.0] {
            let series = {
                let mut term = 1.0;
                let mut sum = 1.0;
                for r in 1..400usize {
                    term *= -z / (r * r) as f64;
                    sum += term;
                }
                sum
            };
            assert!((tricomi_c(0.0, z) - bessel_j(0, 2.0 * z.sqrt())).abs() < 1e-14);
            if z <= 20.0 {
                assert!((series - tricomi_c(0.0, z)).abs() < 1e-10);
            }
        }
        assert!((tricomi_c(0.0, -1.0) - bessel_i0(2.0)).abs() < 1e-14);
    }
}
