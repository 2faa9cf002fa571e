//! Real gamma, log-gamma, beta and Pochhammer symbols.
//!
//! Integer and half-integer arguments take exact product paths so that
//! coefficient maps built on factorials reproduce them to the last bit.

use std::f64::consts::PI;

const SQRT_PI: f64 = 1.772_453_850_905_516;
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Largest n with n! representable as a finite f64.
pub const MAX_FACTORIAL: usize = 170;

/// n! as f64; `inf` past 170.
pub fn factorial(n: usize) -> f64 {
    if n > MAX_FACTORIAL {
        return f64::INFINITY;
    }
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// ln(n!) without overflow.
pub fn ln_factorial(n: usize) -> f64 {
    if n <= MAX_FACTORIAL {
        factorial(n).ln()
    } else {
        ln_gamma(n as f64 + 1.0)
    }
}

/// Binomial coefficient C(n, k) as f64.
pub fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for j in 0..k {
        acc = acc * (n - j) as f64 / (j + 1) as f64;
    }
    acc.round()
}

/// sin(pi x) with argument reduction so integers give exact zeros.
pub fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).floor();
    if r == 0.0 || r == 1.0 {
        return 0.0;
    }
    if r == 0.5 {
        return 1.0;
    }
    if r == 1.5 {
        return -1.0;
    }
    (PI * r).sin()
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

fn is_half_integer(x: f64) -> bool {
    let d = x - 0.5;
    d == d.floor()
}

fn lanczos_core(x: f64) -> f64 {
    // valid for x >= 0.5
    let z = x - 1.0;
    let mut a = LANCZOS[0];
    let t = z + LANCZOS_G + 0.5;
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    (2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * a
}

/// Gamma function on the real line; `inf`/NaN at poles.
pub fn gamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if is_nonpositive_integer(x) {
        return f64::NAN;
    }
    if x == x.floor() && x >= 1.0 {
        return factorial(x as usize - 1);
    }
    if is_half_integer(x) && x.abs() < 170.0 {
        return half_integer_gamma(x);
    }
    if x < 0.5 {
        return PI / (sin_pi(x) * gamma(1.0 - x));
    }
    if x > 171.7 {
        return f64::INFINITY;
    }
    if x > 20.0 {
        return ln_gamma(x).exp();
    }
    lanczos_core(x)
}

fn half_integer_gamma(x: f64) -> f64 {
    // Gamma(1/2 + n) = sqrt(pi) * prod_{k=1..n} (k - 1/2), and the reflection for n < 0
    let n = (x - 0.5).round() as i64;
    if n >= 0 {
        let mut acc = SQRT_PI;
        for k in 1..=n {
            acc *= k as f64 - 0.5;
        }
        acc
    } else {
        let mut acc = SQRT_PI;
        for k in 0..(-n) {
            acc /= -(k as f64) - 0.5;
        }
        acc
    }
}

/// 1 / Gamma(x), zero at the poles.
pub fn rgamma(x: f64) -> f64 {
    if is_nonpositive_integer(x) {
        return 0.0;
    }
    if x > 171.0 {
        return (-ln_gamma(x)).exp();
    }
    if x < -170.0 {
        // reflection: 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
        let (lg, _) = ln_gamma_abs(1.0 - x);
        return sin_pi(x) * (lg - PI.ln()).exp();
    }
    1.0 / gamma(x)
}

/// ln Gamma(x) for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    ln_gamma_abs(x).0
}

/// (ln |Gamma(x)|, sign of Gamma(x)). Poles give (inf, 0).
pub fn ln_gamma_abs(x: f64) -> (f64, f64) {
    if is_nonpositive_integer(x) {
        return (f64::INFINITY, 0.0);
    }
    if x < 0.5 {
        let s = sin_pi(x);
        let (lg, _) = ln_gamma_abs(1.0 - x);
        return (PI.ln() - s.abs().ln() - lg, s.signum());
    }
    if x == x.floor() && x <= (MAX_FACTORIAL + 1) as f64 {
        return (factorial(x as usize - 1).ln(), 1.0);
    }
    if x < 15.0 {
        return (lanczos_core(x).ln(), 1.0);
    }
    // Stirling series with Bernoulli corrections
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let series = inv
        * (1.0 / 12.0
            - inv2
                * (1.0 / 360.0
                    - inv2 * (1.0 / 1260.0 - inv2 * (1.0 / 1680.0 - inv2 * (1.0 / 1188.0)))));
    ((x - 0.5) * x.ln() - x + LN_SQRT_2PI + series, 1.0)
}

/// Euler beta function B(a, b) for positive arguments.
pub fn beta(a: f64, b: f64) -> f64 {
    if a + b < 170.0 && a > 0.0 && b > 0.0 {
        return gamma(a) * gamma(b) / gamma(a + b);
    }
    let (la, sa) = ln_gamma_abs(a);
    let (lb, sb) = ln_gamma_abs(b);
    let (lab, sab) = ln_gamma_abs(a + b);
    sa * sb * sab * (la + lb - lab).exp()
}

/// ln B(a, b) for positive arguments.
pub fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)
}

/// Rising factorial (a)_k.
pub fn pochhammer(a: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (a + j as f64))
}

/// sqrt(pi).
pub fn sqrt_pi() -> f64 {
    SQRT_PI
}
