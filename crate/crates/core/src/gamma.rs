//! Gamma-function family: log-gamma with sign, digamma, Pochhammer symbols
//! and binomial coefficients.

use std::f64::consts::PI;

use crate::constants::{BERNOULLI_2J, EULER_GAMMA, ZETA_MINUS_ONE};
use crate::error::{domain, Result};

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// True when `x` is a pole of Γ (zero or a negative integer).
#[inline]
pub fn is_gamma_pole(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// ln Γ(x) for x > 0.
///
/// Relative error is below 1e-13 on [1e-3, 1e6] away from the zeros at 1 and 2,
/// where both values are returned exactly.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("log_gamma requires x > 0, got {x}"));
    }
    Ok(ln_gamma_pos(x))
}

/// Taylor expansion of ln Γ(1+ε) for |ε| ≤ 1/2, with the ζ(k) = 1 part of
/// every coefficient resummed into ε − ln(1+ε).
fn ln_gamma_1p(eps: f64) -> f64 {
    let mut tail = 0.0;
    let mut k = ZETA_MINUS_ONE.len() - 1;
    // Horner over Σ_{k≥2} (−1)^k (ζ(k)−1) ε^k / k.
    while k >= 2 {
        let c = if k.is_multiple_of(2) { 1.0 } else { -1.0 } * ZETA_MINUS_ONE[k] / k as f64;
        tail = tail * eps + c;
        k -= 1;
    }
    tail *= eps * eps;
    (1.0 - EULER_GAMMA) * eps - eps.ln_1p() + tail
}

fn stirling(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut pow = inv;
    for (j, &b) in BERNOULLI_2J.iter().enumerate().take(9).skip(1) {
        corr += b / ((2 * j) as f64 * (2 * j - 1) as f64) * pow;
        pow *= inv2;
    }
    (x - 0.5) * x.ln() - x + LN_SQRT_2PI + corr
}

pub(crate) fn ln_gamma_pos(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x < 0.5 {
        return ln_gamma_1p(x) - x.ln();
    }
    if x <= 1.5 {
        return ln_gamma_1p(x - 1.0);
    }
    if x <= 2.5 {
        let eps = x - 2.0;
        return eps.ln_1p() + ln_gamma_1p(eps);
    }
    if x < 10.0 {
        let mut y = x;
        let mut prod = 1.0;
        while y > 2.5 {
            y -= 1.0;
            prod *= y;
        }
        let eps = y - 2.0;
        return prod.ln() + eps.ln_1p() + ln_gamma_1p(eps);
    }
    stirling(x)
}

/// sin(πx) with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).floor();
    if r == 0.0 || r == 1.0 {
        return 0.0;
    }
    if r <= 0.5 {
        (PI * r).sin()
    } else if r <= 1.5 {
        -(PI * (r - 1.0)).sin()
    } else {
        (PI * (r - 2.0)).sin()
    }
}

/// (ln |Γ(x)|, sign Γ(x)) for any real x. At a pole returns (+∞, 0).
pub fn ln_gamma_signed(x: f64) -> (f64, f64) {
    if x > 0.0 {
        return (ln_gamma_pos(x), 1.0);
    }
    if is_gamma_pole(x) {
        return (f64::INFINITY, 0.0);
    }
    // Γ(x)Γ(1−x) = π / sin(πx)
    let s = sin_pi(x);
    let ln = PI.ln() - s.abs().ln() - ln_gamma_pos(1.0 - x);
    let sign = if (x.floor() as i64).rem_euclid(2) == 1 { -1.0 } else { 1.0 };
    (ln, sign)
}

/// Γ(x) for real x; `Err` at a pole.
pub fn gamma(x: f64) -> Result<f64> {
    let (ln, sign) = ln_gamma_signed(x);
    if sign == 0.0 {
        return domain(format!("gamma has a pole at {x}"));
    }
    Ok(sign * ln.exp())
}

/// 1/Γ(x), zero at the poles of Γ.
pub fn rgamma(x: f64) -> f64 {
    let (ln, sign) = ln_gamma_signed(x);
    if sign == 0.0 {
        0.0
    } else {
        sign * (-ln).exp()
    }
}

/// ln B(a, b) for a, b > 0.
pub fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma_pos(a) + ln_gamma_pos(b) - ln_gamma_pos(a + b)
}

/// Digamma ψ(x) for x > 0.
pub fn digamma(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    let mut acc = 0.0;
    let mut y = x;
    while y < 10.0 {
        acc -= 1.0 / y;
        y += 1.0;
    }
    let inv2 = 1.0 / (y * y);
    let mut pow = inv2;
    let mut series = 0.0;
    for (j, &b) in BERNOULLI_2J.iter().enumerate().take(9).skip(1) {
        series += b / (2 * j) as f64 * pow;
        pow *= inv2;
    }
    acc + y.ln() - 0.5 / y - series
}

/// Pochhammer symbol (τ)_k = τ(τ+1)…(τ+k−1).
pub fn pochhammer(tau: f64, k: usize) -> f64 {
    if k <= 64 || is_gamma_pole(tau) {
        let mut p = 1.0;
        for i in 0..k {
            p *= tau + i as f64;
            if p == 0.0 {
                break;
            }
        }
        return p;
    }
    let top = tau + k as f64;
    if is_gamma_pole(top) {
        return 0.0;
    }
    let (l1, s1) = ln_gamma_signed(top);
    let (l0, s0) = ln_gamma_signed(tau);
    s1 * s0 * (l1 - l0).exp()
}

/// Generalized binomial coefficient Γ(λ+1) / (Γ(μ+1) Γ(λ−μ+1)).
///
/// Nonnegative integer μ uses the falling-factorial form. When λ+1 and μ+1
/// are both poles the ratio Γ(λ+1)/Γ(μ+1) is replaced by its limit
/// (−1)^{μ−λ} Γ(−μ)/Γ(−λ).
pub fn gen_binom(lambda: f64, mu: f64) -> Result<f64> {
    if mu >= 0.0 && mu == mu.floor() {
        let n = mu as usize;
        let mut c = 1.0;
        for i in 0..n {
            c *= (lambda - i as f64) / (i + 1) as f64;
        }
        return Ok(c);
    }
    let l1 = lambda + 1.0;
    let m1 = mu + 1.0;
    let d1 = lambda - mu + 1.0;
    if is_gamma_pole(l1) {
        if !is_gamma_pole(m1) {
            return domain(format!(
                "gen_binom({lambda}, {mu}): numerator pole without a cancelling denominator pole"
            ));
        }
        if is_gamma_pole(d1) {
            return Ok(0.0);
        }
        let parity = ((m1 - l1) as i64).rem_euclid(2);
        let sign = if parity == 0 { 1.0 } else { -1.0 };
        let ratio = sign * (ln_gamma_pos(1.0 - m1) - ln_gamma_pos(1.0 - l1)).exp();
        return Ok(ratio * rgamma(d1));
    }
    if is_gamma_pole(m1) || is_gamma_pole(d1) {
        return Ok(0.0);
    }
    let (a, sa) = ln_gamma_signed(l1);
    let (b, sb) = ln_gamma_signed(m1);
    let (c, sc) = ln_gamma_signed(d1);
    Ok(sa * sb * sc * (a - b - c).exp())
}

/// C(λ+k−1, k) = Γ(λ+k)/(Γ(λ) k!) by the recurrence c_{k+1} = c_k (λ+k)/(k+1).
pub fn binom_coeff_shifted(lambda: f64, k: usize) -> f64 {
    let mut c = 1.0;
    for i in 0..k {
        c *= (lambda + i as f64) / (i + 1) as f64;
    }
    c
}

/// Iterator over C(λ+k−1, k) for k = 0, 1, 2, ….
pub fn binom_coeffs_shifted(lambda: f64) -> impl Iterator<Item = f64> {
    let mut c = 1.0;
    let mut k = 0usize;
    std::iter::from_fn(move || {
        let out = c;
        c *= (lambda + k as f64) / (k + 1) as f64;
        k += 1;
        Some(out)
    })
}
