//! Truncated Taylor expansions g(N+h) = Σ g_m h^m and the tail sums
//! Σ_{j≥0} w^j g(N+j) they determine.
//!
//! For w ≠ 1 the tail equals Σ_m G_m m! g_m with 1/(1 − w e^h) = Σ G_m h^m
//! (Apostol-Bernoulli numbers); for w = 1 the regular part of 1/(1 − e^h)
//! gives the Euler-Maclaurin corrections and the caller adds ∫_N^∞ g.
//! Both expansions are asymptotic and are cut at their smallest term.

use num_complex::Complex64;

use crate::constants::BERNOULLI_2J;
use crate::gamma::digamma;
use crate::zeta::hurwitz_zeta_unchecked;

/// Default expansion order.
pub const JET_ORDER: usize = 30;

/// Coefficients of ln(x0 + h) from h¹ on; entry 0 is zero.
pub fn ln_jet(x0: f64, order: usize) -> Vec<f64> {
    let mut c = vec![0.0; order + 1];
    let mut pow = 1.0;
    for (m, cm) in c.iter_mut().enumerate().skip(1) {
        pow /= x0;
        let sign = if m % 2 == 1 { 1.0 } else { -1.0 };
        *cm = sign * pow / m as f64;
    }
    c
}

/// Coefficients of ln Γ(x0 + w h) from h¹ on; entry 0 is zero.
///
/// The h^m coefficient is ψ(x0)·w for m = 1 and (−w)^m ζ(m, x0)/m beyond.
pub fn ln_gamma_jet(x0: f64, w: f64, order: usize) -> Vec<f64> {
    let mut c = vec![0.0; order + 1];
    if order == 0 || w == 0.0 {
        return c;
    }
    c[1] = w * digamma(x0);
    let mut wp = -w;
    for (m, cm) in c.iter_mut().enumerate().skip(2) {
        wp *= -w;
        *cm = wp * hurwitz_zeta_unchecked(m as f64, x0) / m as f64;
    }
    c
}

/// Coefficients of exp(L(h)) / exp(L(0)) given the coefficients of L.
pub fn exp_jet(l: &[f64]) -> Vec<f64> {
    let n = l.len();
    let mut g = vec![0.0; n];
    if n == 0 {
        return g;
    }
    g[0] = 1.0;
    for m in 1..n {
        let mut acc = 0.0;
        for j in 1..=m {
            acc += j as f64 * l[j] * g[m - j];
        }
        g[m] = acc / m as f64;
    }
    g
}

/// Coefficients of (x0 + h)^{−s}.
pub fn inv_pow_jet(x0: f64, s: f64, order: usize) -> Vec<f64> {
    let mut c = vec![0.0; order + 1];
    c[0] = x0.powf(-s);
    for m in 1..=order {
        c[m] = c[m - 1] * (-s - (m - 1) as f64) / (m as f64 * x0);
    }
    c
}

/// Coefficients G_m of 1/(1 − w e^h), w ≠ 1.
pub fn apostol_coefficients(w: Complex64, order: usize) -> Vec<Complex64> {
    let d0 = Complex64::new(1.0, 0.0) - w;
    let mut d = vec![Complex64::new(0.0, 0.0); order + 1];
    let mut fact = 1.0;
    for (m, dm) in d.iter_mut().enumerate().skip(1) {
        fact *= m as f64;
        *dm = -w / fact;
    }
    let mut g = vec![Complex64::new(0.0, 0.0); order + 1];
    g[0] = 1.0 / d0;
    for m in 1..=order {
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 1..=m {
            acc += d[j] * g[m - j];
        }
        g[m] = -acc / d0;
    }
    g
}

/// Result of a jet-based tail: value and the magnitude of the smallest
/// retained term, which bounds the truncation error.
#[derive(Debug, Clone, Copy)]
pub struct TailSum<T> {
    pub value: T,
    pub error: f64,
}

/// Σ_{j≥0} w^j g(N+j) for w ≠ 1, from the coefficients g_m of g at N.
pub fn weighted_tail(w: Complex64, g: &[f64]) -> TailSum<Complex64> {
    let order = g.len().saturating_sub(1);
    let coeffs = apostol_coefficients(w, order);
    let mut cut = AsymptoticCut::new();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut fact = 1.0;
    for m in 0..=order {
        if m > 0 {
            fact *= m as f64;
        }
        let t = coeffs[m] * (fact * g[m]);
        if !cut.accept(t.norm()) {
            break;
        }
        sum += t;
    }
    TailSum { value: sum, error: cut.error() }
}

/// Euler-Maclaurin part of Σ_{j≥0} g(N+j) excluding ∫_N^∞ g:
/// g(N)/2 − Σ_j B_{2j}/(2j) · g_{2j−1}.
pub fn euler_maclaurin_correction(g: &[f64]) -> TailSum<f64> {
    let mut cut = AsymptoticCut::new();
    let mut sum = 0.5 * g[0];
    cut.accept(sum.abs());
    let jmax = g.len() / 2;
    for j in 1..=jmax.min(BERNOULLI_2J.len() - 1) {
        let t = -BERNOULLI_2J[j] / (2 * j) as f64 * g[2 * j - 1];
        if !cut.accept(t.abs()) {
            break;
        }
        sum += t;
    }
    TailSum { value: sum, error: cut.error() }
}

/// Stops an asymptotic series once the sum of two consecutive term
/// magnitudes starts to grow; pairing keeps isolated zero coefficients from
/// ending the sum early.
struct AsymptoticCut {
    seen: usize,
    prev: f64,
    best_pair: f64,
}

impl AsymptoticCut {
    fn new() -> Self {
        Self { seen: 0, prev: 0.0, best_pair: f64::INFINITY }
    }

    fn accept(&mut self, mag: f64) -> bool {
        let pair = mag + self.prev;
        self.seen += 1;
        if self.seen > 3 && pair > self.best_pair {
            return false;
        }
        if self.seen > 1 {
            self.best_pair = self.best_pair.min(pair);
        }
        self.prev = mag;
        true
    }

    fn error(&self) -> f64 {
        if self.best_pair.is_finite() {
            self.best_pair
        } else {
            self.prev
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn exp_of_ln_jet_is_power() {
        let x0 = 3.5;
        let s = 1.7;
        let l: Vec<f64> = ln_jet(x0, 12).iter().map(|c| -s * c).collect();
        let g = exp_jet(&l);
        let want = inv_pow_jet(x0, s, 12);
        for m in 0..=12 {
            assert_relative_eq!(g[m] * want[0], want[m], max_relative = 1e-13);
        }
    }

    #[test]
    fn ln_gamma_jet_matches_finite_difference() {
        // d/dx ln Γ(x) at x0 with weight w, against a central difference
        let (x0, w) = (7.25, 0.5);
        let c = ln_gamma_jet(x0, w, 4);
        let f = |h: f64| crate::gamma::ln_gamma_pos(x0 + w * h);
        let h = 1e-4;
        let d1 = (f(h) - f(-h)) / (2.0 * h);
        let d2 = (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h);
        assert_relative_eq!(c[1], d1, max_relative = 1e-8);
        assert_relative_eq!(c[2], d2 / 2.0, max_relative = 1e-5);
    }

    #[test]
    fn geometric_weighting_of_constant() {
        // Σ w^j = 1/(1−w)
        let w = Complex64::from_polar(1.0, 1.1);
        let mut g = vec![0.0; 10];
        g[0] = 1.0;
        let t = weighted_tail(w, &g);
        let want = 1.0 / (Complex64::new(1.0, 0.0) - w);
        assert!((t.value - want).norm() < 1e-15);
    }

    #[test]
    fn alternating_zeta_tail() {
        // Σ_{n≥1} (−1)^{n+1} n^{−2} = π²/12, so Σ_{j≥0} (−1)^j (30+j)^{−2}
        // equals the partial sum through n = 29 minus π²/12.
        let g = inv_pow_jet(30.0, 2.0, JET_ORDER);
        let t = weighted_tail(Complex64::new(-1.0, 0.0), &g);
        let partial: f64 = (1..30).map(|n| if n % 2 == 1 { 1.0 } else { -1.0 } / (n * n) as f64).sum();
        let want = partial - std::f64::consts::PI.powi(2) / 12.0;
        assert_relative_eq!(t.value.re, want, max_relative = 1e-12);
        assert!(t.value.im.abs() < 1e-18);
    }
}
