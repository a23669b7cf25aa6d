//! Riemann and Hurwitz zeta, polylogarithm, Hurwitz-Lerch Φ and its
//! extension with gamma-ratio weights.
//!
//! Φ(z, s, a) = Σ_{n≥0} z^n (n+a)^{−s}. For |z| > 1/2 the sum runs directly to
//! an index N with N·|ln z| ≥ 45 and the remainder z^N Σ_j z^j (N+j+a)^{−s}
//! is taken from the Taylor expansion of (N+a+h)^{−s}; see [`crate::jets`].
//! The Lipschitz-Lerch function L(ξ, a, s) is `lerch_phi(e^{2iπξ}, s, a)`.

use num_complex::Complex64;

use crate::constants::BERNOULLI_2J;
use crate::error::{domain, Error, Result};
use crate::foxwright::{FoxWrightParams, LN_MAX};
use crate::gamma::{ln_gamma_signed, sin_pi};
use crate::jets::{
    euler_maclaurin_correction, exp_jet, inv_pow_jet, ln_gamma_jet, ln_jet, weighted_tail, JET_ORDER,
};
use crate::quadrature::{integrate_semi_infinite_detailed, QuadratureSpec};
use crate::series::{sum_series, SeriesResult, TruncationPolicy};
use crate::sum::{Neumaier, NeumaierComplex};

/// Direct terms before the Euler-Maclaurin remainder in ζ(s, a).
const HURWITZ_DIRECT: usize = 20;
/// Bernoulli terms B₂ … B₁₂ in the remainder.
const HURWITZ_EM_TERMS: usize = 6;
/// Required N·|ln w| before the jet tail is used.
const TAIL_DECAY: f64 = 45.0;
/// Largest direct-summation length accepted near w = 1.
const MAX_DIRECT: usize = 5_000_000;
/// Slack when deciding |z| = 1 or Δ₁ = −1.
const EDGE_EPS: f64 = 1e-12;

fn hurwitz_parts(s: f64, a: f64) -> (f64, f64) {
    let mut acc = Neumaier::new();
    for n in (0..HURWITZ_DIRECT).rev() {
        acc.add((n as f64 + a).powf(-s));
    }
    let x = HURWITZ_DIRECT as f64 + a;
    let xs = x.powf(-s);
    acc.add(x * xs / (s - 1.0));
    acc.add(0.5 * xs);
    // B_{2j}/(2j)! · (s)_{2j−1} · x^{−s−2j+1}
    let mut poch_over_fact = s / 2.0; // (s)_1 / 2!
    let mut pow = xs / x;
    let mut last = 0.0;
    for (j, &b) in BERNOULLI_2J.iter().enumerate().take(HURWITZ_EM_TERMS + 2).skip(1) {
        let t = b * poch_over_fact * pow;
        if j <= HURWITZ_EM_TERMS {
            acc.add(t);
        }
        last = t.abs();
        let m = (2 * j) as f64;
        poch_over_fact *= (s + m - 1.0) * (s + m) / ((m + 1.0) * (m + 2.0));
        pow /= x * x;
    }
    (acc.value(), last)
}

/// ζ(s, a) without argument checks; s > 1, a > 0 assumed.
pub(crate) fn hurwitz_zeta_unchecked(s: f64, a: f64) -> f64 {
    hurwitz_parts(s, a).0
}

/// Hurwitz zeta ζ(s, a) = Σ_{n≥0} (n+a)^{−s}, s > 1, a > 0.
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<f64> {
    hurwitz_zeta_series(s, a).map(|r| r.value)
}

/// [`hurwitz_zeta`] with term count and the first omitted
/// Euler-Maclaurin term as tail estimate.
pub fn hurwitz_zeta_series(s: f64, a: f64) -> Result<SeriesResult> {
    if !(s > 1.0) || !s.is_finite() {
        return domain(format!("hurwitz_zeta requires s > 1, got {s}"));
    }
    if !(a > 0.0) || !a.is_finite() {
        return domain(format!("hurwitz_zeta requires a > 0, got {a}"));
    }
    let (value, tail) = hurwitz_parts(s, a);
    if !value.is_finite() {
        return Err(Error::Overflow { k: 0 });
    }
    Ok(SeriesResult {
        value,
        terms_used: HURWITZ_DIRECT + HURWITZ_EM_TERMS,
        tail_estimate: tail,
        converged: tail <= 1e-12 * value.abs().max(1.0),
        abs_sum: value.abs(),
    })
}

/// Riemann zeta ζ(s), s > 1.
pub fn riemann_zeta(s: f64) -> Result<f64> {
    if !(s > 1.0) {
        return domain(format!("riemann_zeta requires s > 1, got {s}"));
    }
    hurwitz_zeta(s, 1.0)
}

/// e^{2iπξ} with exact values at multiples of 1/4.
pub fn unit_root(xi: f64) -> Complex64 {
    let x = 2.0 * xi;
    Complex64::new(sin_pi(x + 0.5), sin_pi(x))
}

fn realify(z: Complex64, v: Complex64) -> Complex64 {
    if z.im == 0.0 {
        Complex64::new(v.re, 0.0)
    } else {
        v
    }
}

/// Φ(z, s, a) with diagnostics. Requires |z| < 1, or |z| = 1 with s > 1.
pub fn lerch_phi_series(
    z: Complex64,
    s: f64,
    a: f64,
    policy: &TruncationPolicy,
) -> Result<SeriesResult<Complex64>> {
    if !(a > 0.0) || !a.is_finite() {
        return domain(format!("lerch_phi requires a > 0, got {a}"));
    }
    if !s.is_finite() || !z.re.is_finite() || !z.im.is_finite() {
        return domain("lerch_phi arguments must be finite");
    }
    let r = z.norm();
    if r > 1.0 + EDGE_EPS {
        return domain(format!("lerch_phi requires |z| ≤ 1, got |z| = {r}"));
    }
    if r >= 1.0 - EDGE_EPS && !(s > 1.0) {
        return domain(format!("lerch_phi on |z| = 1 requires s > 1, got s = {s}"));
    }
    if r == 0.0 {
        return Ok(SeriesResult {
            value: Complex64::new(a.powf(-s), 0.0),
            terms_used: 1,
            tail_estimate: 0.0,
            converged: true,
            abs_sum: a.powf(-s),
        });
    }
    if (z - 1.0).norm() <= EDGE_EPS {
        return hurwitz_zeta_series(s, a).map(|h| h.map(|v| Complex64::new(v, 0.0)));
    }
    let term = |n: usize| z.powu(n as u32) * (n as f64 + a).powf(-s);
    if r <= 0.5 {
        let out = sum_series(policy, |n| Ok(term(n)))?;
        return Ok(out.map(|v| realify(z, v)));
    }
    let decay = z.ln().norm();
    let min_n = (2.0 * a.abs()).ceil() as usize + 20;
    let n0 = ((TAIL_DECAY / decay).ceil() as usize).max(min_n);
    if n0 > MAX_DIRECT {
        return Err(Error::Accuracy { estimate: f64::NAN, bound: f64::INFINITY });
    }
    let mut acc = NeumaierComplex::new();
    for n in 0..n0 {
        acc.add(term(n));
    }
    let g = inv_pow_jet(n0 as f64 + a, s, JET_ORDER);
    let tail = weighted_tail(z, &g);
    let zn = z.powu(n0 as u32);
    acc.add(zn * tail.value);
    let value = realify(z, acc.value());
    let tail_estimate = tail.error * zn.norm() + f64::EPSILON * acc.abs_sum();
    Ok(SeriesResult {
        value,
        terms_used: n0,
        tail_estimate,
        converged: tail_estimate <= policy.rel_tol.max(1e-13) * value.norm().max(1.0),
        abs_sum: acc.abs_sum(),
    })
}

/// Hurwitz-Lerch Φ(z, s, a).
pub fn lerch_phi(z: Complex64, s: f64, a: f64) -> Result<Complex64> {
    let r = lerch_phi_series(z, s, a, &TruncationPolicy::default())?;
    if !r.converged {
        return Err(Error::Accuracy { estimate: r.value.norm(), bound: r.tail_estimate });
    }
    Ok(r.value)
}

/// Lipschitz-Lerch L(ξ, a, s) = Φ(e^{2iπξ}, s, a).
pub fn lipschitz_lerch(xi: f64, a: f64, s: f64) -> Result<Complex64> {
    lerch_phi(unit_root(xi), s, a)
}

/// Li_s(z) = z Φ(z, s, 1) with diagnostics.
pub fn polylog_series(s: f64, z: Complex64, policy: &TruncationPolicy) -> Result<SeriesResult<Complex64>> {
    if z == Complex64::new(0.0, 0.0) {
        return Ok(SeriesResult {
            value: z,
            terms_used: 0,
            tail_estimate: 0.0,
            converged: true,
            abs_sum: 0.0,
        });
    }
    let phi = lerch_phi_series(z, s, 1.0, policy)?;
    Ok(SeriesResult {
        value: realify(z, z * phi.value),
        terms_used: phi.terms_used,
        tail_estimate: phi.tail_estimate * z.norm(),
        converged: phi.converged,
        abs_sum: phi.abs_sum * z.norm(),
    })
}

/// Polylogarithm Li_s(z) = Σ_{n≥1} z^n n^{−s}.
pub fn polylog(s: f64, z: Complex64) -> Result<Complex64> {
    let r = polylog_series(s, z, &TruncationPolicy::default())?;
    if !r.converged {
        return Err(Error::Accuracy { estimate: r.value.norm(), bound: r.tail_estimate });
    }
    Ok(r.value)
}

/// Parameters of the extended Hurwitz-Lerch function
///
/// Φ(z, s, a) = ∏Γ(μ_j)/∏Γ(λ_j) · Σ_k ∏Γ(λ_j+kρ_j)/∏Γ(μ_j+kσ_j) · z^k / (k! (k+a)^s).
#[derive(Debug, Clone, PartialEq)]
pub struct LerchParams {
    lambdas: Vec<(f64, f64)>,
    mus: Vec<(f64, f64)>,
    pub s: f64,
    pub a: f64,
}

/// Δ₁, ∇* and Ξ of an extended Lerch parameter set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LerchConvergence {
    pub delta1: f64,
    pub nabla_star: f64,
    pub xi: f64,
}

impl LerchParams {
    pub fn new(lambdas: Vec<(f64, f64)>, mus: Vec<(f64, f64)>, s: f64, a: f64) -> Result<Self> {
        if lambdas.iter().any(|&(_, r)| !(r > 0.0)) {
            return domain("extended Lerch weights ρ_j must be positive");
        }
        if mus.iter().any(|&(m, w)| !(m > 0.0) || !(w > 0.0)) {
            return domain("extended Lerch parameters μ_j and σ_j must be positive");
        }
        if !(a > 0.0) || !a.is_finite() || !s.is_finite() {
            return domain(format!("extended Lerch requires a > 0 and finite s, got a = {a}, s = {s}"));
        }
        FoxWrightParams::new(lambdas.clone(), mus.clone())?;
        Ok(Self { lambdas, mus, s, a })
    }

    pub fn lambdas(&self) -> &[(f64, f64)] {
        &self.lambdas
    }

    pub fn mus(&self) -> &[(f64, f64)] {
        &self.mus
    }

    fn fox_wright(&self) -> FoxWrightParams {
        FoxWrightParams::new(self.lambdas.clone(), self.mus.clone()).expect("validated at construction")
    }

    /// (ln |∏Γ(μ_j)/∏Γ(λ_j)|, sign).
    fn log_prefactor(&self) -> (f64, f64) {
        let mut ln = 0.0;
        let mut sign = 1.0;
        for &(m, _) in &self.mus {
            let (l, s) = ln_gamma_signed(m);
            ln += l;
            sign *= s;
        }
        for &(l0, _) in &self.lambdas {
            let (l, s) = ln_gamma_signed(l0);
            ln -= l;
            sign *= s;
        }
        (ln, sign)
    }
}

/// Δ₁ = Σσ − Σρ, ∇* = ∏ρ^{−ρ}·∏σ^{σ}, Ξ = s + Σμ − Σλ + (p−q)/2.
pub fn lerch_convergence(params: &LerchParams) -> LerchConvergence {
    let p = params.lambdas.len() as f64;
    let q = params.mus.len() as f64;
    LerchConvergence {
        delta1: params.mus.iter().map(|m| m.1).sum::<f64>() - params.lambdas.iter().map(|l| l.1).sum::<f64>(),
        nabla_star: params.lambdas.iter().map(|l| l.1.powf(-l.1)).product::<f64>()
            * params.mus.iter().map(|m| m.1.powf(m.1)).product::<f64>(),
        xi: params.s + params.mus.iter().map(|m| m.0).sum::<f64>() - params.lambdas.iter().map(|l| l.0).sum::<f64>()
            + (p - q) / 2.0,
    }
}

/// Where a point sits relative to the convergence region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LerchRegion {
    /// Δ₁ > −1, or Δ₁ = −1 with |z| < ∇*.
    Interior,
    /// Δ₁ = −1, |z| = ∇* and Ξ > 1/2.
    Boundary,
}

/// Classifies z for `params`; `Err` outside the convergence region.
pub fn lerch_region(params: &LerchParams, z: Complex64) -> Result<LerchRegion> {
    let c = lerch_convergence(params);
    if z.norm() == 0.0 || c.delta1 > -1.0 + EDGE_EPS {
        return Ok(LerchRegion::Interior);
    }
    if c.delta1 < -1.0 - EDGE_EPS {
        return Err(Error::Divergent(format!("extended Lerch: Δ₁ = {} < −1", c.delta1)));
    }
    let r = z.norm() / c.nabla_star;
    if r < 1.0 - EDGE_EPS {
        return Ok(LerchRegion::Interior);
    }
    if r <= 1.0 + EDGE_EPS {
        if c.xi > 0.5 {
            return Ok(LerchRegion::Boundary);
        }
        return Err(Error::Divergent(format!("extended Lerch: |z| = ∇* requires Ξ > 1/2, got Ξ = {}", c.xi)));
    }
    Err(Error::Divergent(format!("extended Lerch: |z| = {} exceeds ∇* = {}", z.norm(), c.nabla_star)))
}

/// Σ ±ln Γ(c + r x) over the gamma weights of the extended Lerch terms,
/// including the 1/x! factor, on the boundary Σ ±r = 0.
///
/// Beyond `cutoff` the Stirling series is used with its x·ln x and x terms
/// dropped, since they cancel exactly there and would otherwise swamp the
/// O(ln x) remainder in floating point.
struct BoundaryLogWeight {
    terms: Vec<(f64, f64, f64)>,
    constant: f64,
    power: f64,
    inverse_powers: Vec<f64>,
    cutoff: f64,
}

const STIRLING_ORDER: usize = 12;

impl BoundaryLogWeight {
    fn new(params: &LerchParams) -> Self {
        let mut terms: Vec<(f64, f64, f64)> = params.lambdas.iter().map(|&(c, r)| (c, r, 1.0)).collect();
        terms.extend(params.mus.iter().map(|&(c, r)| (c, r, -1.0)));
        terms.push((1.0, 1.0, -1.0));
        let half_ln_2pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
        let mut constant = 0.0;
        let mut power = 0.0;
        let mut inverse_powers = vec![0.0; STIRLING_ORDER + 1];
        let mut cutoff = 200.0f64;
        for &(c, r, sign) in &terms {
            constant += sign * ((c - 0.5) * r.ln() + half_ln_2pi);
            power += sign * (c - 0.5);
            for (k, d) in inverse_powers.iter_mut().enumerate().skip(1) {
                let alt = if k % 2 == 1 { 1.0 } else { -1.0 };
                *d += sign * alt * bernoulli_poly(k + 1, c) / ((k * (k + 1)) as f64 * r.powi(k as i32));
            }
            cutoff = cutoff.max(60.0 * (1.0 + c.abs()) / r);
        }
        Self { terms, constant, power, inverse_powers, cutoff }
    }

    fn eval(&self, x: f64, ln_nabla: f64) -> f64 {
        if x <= self.cutoff {
            let gammas: f64 = self.terms.iter().map(|&(c, r, sign)| sign * ln_gamma_signed(c + r * x).0).sum();
            return gammas + x * ln_nabla;
        }
        let mut series = 0.0;
        for &d in self.inverse_powers.iter().skip(1).rev() {
            series = (series + d) / x;
        }
        self.constant + self.power * x.ln() + series
    }
}

/// Bernoulli polynomial B_n(c).
fn bernoulli_poly(n: usize, c: f64) -> f64 {
    let bernoulli = |k: usize| match k {
        1 => -0.5,
        _ if k % 2 == 1 => 0.0,
        _ => BERNOULLI_2J[k / 2],
    };
    let mut binom = 1.0;
    let mut acc = 0.0;
    for k in 0..=n {
        acc += binom * bernoulli(k) * c.powi((n - k) as i32);
        binom = binom * (n - k) as f64 / (k + 1) as f64;
    }
    acc
}

/// Extended Hurwitz-Lerch function with diagnostics.
///
/// With one upper pair (1, 1) and otherwise matched pairs it reduces to
/// Φ(z, s, a); with empty arrays it is Σ z^k/(k!(k+a)^s).
pub fn extended_lerch_phi(
    params: &LerchParams,
    z: Complex64,
    policy: &TruncationPolicy,
) -> Result<SeriesResult<Complex64>> {
    lerch_region(params, z)?;
    let fw = params.fox_wright();
    let (ln_pre, sign_pre) = params.log_prefactor();
    let (s, a) = (params.s, params.a);
    // real weight of the k-th term without z^k
    let coef = |k: usize| -> Result<f64> {
        let (ln, sign) = fw.log_coefficient(k);
        let ln = ln + ln_pre - s * (k as f64 + a).ln();
        if ln > LN_MAX {
            return Err(Error::Overflow { k });
        }
        Ok(sign * sign_pre * ln.exp())
    };
    let conv = lerch_convergence(params);
    let w = if conv.delta1 > -1.0 + EDGE_EPS { Complex64::new(0.0, 0.0) } else { z / conv.nabla_star };
    if w.norm() <= 0.5 {
        let out = sum_series(policy, |k| Ok(coef(k)? * z.powu(k as u32)))?;
        return Ok(out.map(|v| realify(z, v)));
    }

    let decay = w.ln().norm();
    let scale = params
        .lambdas
        .iter()
        .chain(&params.mus)
        .map(|&(c, r)| c.abs() / r)
        .fold(a, f64::max);
    let mut n0 = (2.0 * scale).ceil() as usize + 32;
    if decay > EDGE_EPS {
        n0 = n0.max((TAIL_DECAY / decay).ceil() as usize);
    }
    if n0 > MAX_DIRECT {
        return Err(Error::Accuracy { estimate: f64::NAN, bound: f64::INFINITY });
    }
    let mut acc = NeumaierComplex::new();
    for k in 0..n0 {
        acc.add(coef(k)? * z.powu(k as u32));
    }

    // g(x) = coef(x)·∇*^x, smooth and algebraic in x
    let nf = n0 as f64;
    let mut l = vec![0.0; JET_ORDER + 1];
    for &(c, r) in &params.lambdas {
        for (li, v) in l.iter_mut().zip(ln_gamma_jet(c + r * nf, r, JET_ORDER)) {
            *li += v;
        }
    }
    for &(c, r) in &params.mus {
        for (li, v) in l.iter_mut().zip(ln_gamma_jet(c + r * nf, r, JET_ORDER)) {
            *li -= v;
        }
    }
    for (li, v) in l.iter_mut().zip(ln_gamma_jet(nf + 1.0, 1.0, JET_ORDER)) {
        *li -= v;
    }
    for (li, v) in l.iter_mut().zip(ln_jet(nf + a, JET_ORDER)) {
        *li -= s * v;
    }
    l[1] += conv.nabla_star.ln();
    let g0 = coef(n0)? * conv.nabla_star.powf(nf);
    let g: Vec<f64> = exp_jet(&l).into_iter().map(|c| c * g0).collect();
    let wn = w.powu(n0 as u32);

    let (tail, err) = if decay > EDGE_EPS {
        let t = weighted_tail(w, &g);
        (t.value, t.error)
    } else {
        let em = euler_maclaurin_correction(&g);
        let weight = BoundaryLogWeight::new(params);
        let ln_g = |x: f64| ln_pre - s * (x + a).ln() + weight.eval(x, conv.nabla_star.ln());
        let sign = g0.signum();
        let spec = QuadratureSpec::default();
        let q = integrate_semi_infinite_detailed(|u| sign * ln_g(nf + u).exp(), &spec)?;
        (Complex64::new(q.value + em.value, 0.0), em.error + q.error_estimate)
    };
    acc.add(wn * tail);
    let value = realify(z, acc.value());
    let tail_estimate = err * wn.norm() + f64::EPSILON * acc.abs_sum();
    Ok(SeriesResult {
        value,
        terms_used: n0,
        tail_estimate,
        converged: tail_estimate <= policy.rel_tol.max(1e-13) * value.norm().max(1.0),
        abs_sum: acc.abs_sum(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn riemann_values() {
        assert_relative_eq!(riemann_zeta(2.0).unwrap(), PI * PI / 6.0, max_relative = 1e-14);
        assert_relative_eq!(riemann_zeta(4.0).unwrap(), PI.powi(4) / 90.0, max_relative = 1e-14);
        assert_relative_eq!(riemann_zeta(3.0).unwrap(), 1.2020569031595942854, max_relative = 1e-14);
        assert!(riemann_zeta(1.0).is_err());
    }

    #[test]
    fn hurwitz_shift_relation() {
        assert_relative_eq!(hurwitz_zeta(2.0, 2.0).unwrap(), PI * PI / 6.0 - 1.0, max_relative = 1e-14);
        assert_relative_eq!(hurwitz_zeta(4.0, 2.0).unwrap(), (PI.powi(4) - 90.0) / 90.0, max_relative = 1e-13);
        // ζ(s, 1/2) = (2^s − 1) ζ(s)
        for &s in &[1.5, 2.5, 7.0, 19.0] {
            let want = (2f64.powf(s) - 1.0) * riemann_zeta(s).unwrap();
            assert_relative_eq!(hurwitz_zeta(s, 0.5).unwrap(), want, max_relative = 1e-13);
        }
        assert!(hurwitz_zeta(2.0, 0.0).is_err());
    }

    #[test]
    fn lerch_basic_values() {
        let p = TruncationPolicy::default();
        assert_relative_eq!(lerch_phi(c(0.0), 2.0, 0.7).unwrap().re, 0.7f64.powi(-2), max_relative = 1e-15);
        let li = polylog(2.0, c(0.4)).unwrap();
        let phi = lerch_phi(c(0.4), 2.0, 1.0).unwrap();
        assert_relative_eq!(li.re, 0.4 * phi.re, max_relative = 1e-14);
        assert_relative_eq!(polylog(1.0, c(0.5)).unwrap().re, 2f64.ln(), max_relative = 1e-14);
        let two_li2 = 2.0 * polylog(2.0, c(0.5)).unwrap().re;
        assert_relative_eq!(two_li2, PI * PI / 6.0 - 2f64.ln().powi(2), max_relative = 1e-14);
        assert_eq!(polylog(2.0, c(0.0)).unwrap(), c(0.0));
        assert!(lerch_phi_series(c(1.0), 1.0, 1.0, &p).is_err());
        assert!(lerch_phi_series(c(1.1), 3.0, 1.0, &p).is_err());
    }

    #[test]
    fn lerch_unit_circle_against_alternating_oracle() {
        // Φ(−1, 2, 1) = η(2) = π²/12; Φ(−1, 3, 1/2)·(1/8) = β-like sum, use η(3) = 3ζ(3)/4
        assert_relative_eq!(lerch_phi(c(-1.0), 2.0, 1.0).unwrap().re, PI * PI / 12.0, max_relative = 1e-14);
        assert_relative_eq!(
            lerch_phi(c(-1.0), 3.0, 1.0).unwrap().re,
            0.75 * riemann_zeta(3.0).unwrap(),
            max_relative = 1e-14
        );
        // Catalan: Im Li₂(i) = G
        let g = polylog(2.0, Complex64::new(0.0, 1.0)).unwrap();
        assert_relative_eq!(g.im, 0.915_965_594_177_219, max_relative = 1e-14);
        assert_relative_eq!(g.re, -PI * PI / 48.0, max_relative = 1e-14);
    }

    #[test]
    fn lerch_hurwitz_limit_and_conjugation() {
        assert_relative_eq!(lerch_phi(c(1.0), 2.5, 1.5).unwrap().re, hurwitz_zeta(2.5, 1.5).unwrap(), max_relative = 1e-14);
        let z = Complex64::from_polar(0.93, 0.4);
        let a = lerch_phi(z, 1.7, 0.6).unwrap();
        let b = lerch_phi(z.conj(), 1.7, 0.6).unwrap();
        assert_relative_eq!(a.re, b.re, max_relative = 1e-14);
        assert_relative_eq!(a.im, -b.im, max_relative = 1e-14);
    }

    #[test]
    fn convergence_data() {
        let p = LerchParams::new(vec![(1.0, 1.0)], vec![(1.0, 1.0)], 2.0, 1.0).unwrap();
        let c = lerch_convergence(&p);
        assert_eq!((c.delta1, c.nabla_star), (0.0, 1.0));
        let p = LerchParams::new(vec![], vec![], 2.0, 1.0).unwrap();
        assert_eq!(lerch_convergence(&p).xi, 2.0);
        let p = LerchParams::new(vec![(1.0, 2.0)], vec![(1.0, 3.0)], 2.0, 1.0).unwrap();
        assert_relative_eq!(lerch_convergence(&p).nabla_star, 6.75, max_relative = 1e-15);
    }

    #[test]
    fn extended_reduces_to_lerch() {
        let pol = TruncationPolicy::default();
        let p = LerchParams::new(vec![(1.0, 1.0), (0.7, 0.5)], vec![(0.7, 0.5)], 2.0, 1.3).unwrap();
        for &zr in &[0.3, 0.8, -0.95] {
            let e = extended_lerch_phi(&p, c(zr), &pol).unwrap();
            assert!(e.converged);
            assert_relative_eq!(e.value.re, lerch_phi(c(zr), 2.0, 1.3).unwrap().re, max_relative = 1e-12);
        }
        // boundary |z| = ∇* = 1, Ξ = s − 1/2 + … > 1/2
        let p = LerchParams::new(vec![(1.0, 1.0)], vec![], 3.0, 0.5).unwrap();
        let z = unit_root(0.3);
        let e = extended_lerch_phi(&p, z, &pol).unwrap();
        let l = lerch_phi(z, 3.0, 0.5).unwrap();
        assert!((e.value - l).norm() < 1e-13 * l.norm());
        // w = 1 on the boundary uses the integral remainder
        let e = extended_lerch_phi(&p, c(1.0), &pol).unwrap();
        assert_relative_eq!(e.value.re, hurwitz_zeta(3.0, 0.5).unwrap(), max_relative = 1e-11);
    }

    #[test]
    fn extended_without_arrays_keeps_factorial() {
        let p = LerchParams::new(vec![], vec![], 2.0, 1.0).unwrap();
        let v = extended_lerch_phi(&p, c(0.5), &TruncationPolicy::default()).unwrap().value.re;
        let mut brute = 0.0;
        let mut f = 1.0;
        for k in 0..40 {
            if k > 0 {
                f *= k as f64;
            }
            brute += 0.5f64.powi(k) / (f * ((k + 1) as f64).powi(2));
        }
        assert_relative_eq!(v, brute, max_relative = 1e-14);
    }

    #[test]
    fn boundary_weight_expansion_matches_direct() {
        let p = LerchParams::new(vec![(1.3, 1.5)], vec![(0.4, 0.5)], 2.0, 1.0).unwrap();
        let w = BoundaryLogWeight::new(&p);
        let ln_nabla = -(1.5 * 1.5f64.ln() - 0.5 * 0.5f64.ln());
        let x = w.cutoff * 1.01;
        let direct = ln_gamma_signed(1.3 + 1.5 * x).0 - ln_gamma_signed(0.4 + 0.5 * x).0
            - ln_gamma_signed(x + 1.0).0
            + x * ln_nabla;
        let expanded = w.eval(x, ln_nabla);
        assert!((direct - expanded).abs() < 1e-9, "{direct} vs {expanded}");
    }

    #[test]
    fn bernoulli_polynomials() {
        assert_relative_eq!(bernoulli_poly(2, 0.3), 0.09 - 0.3 + 1.0 / 6.0, max_relative = 1e-14);
        assert_relative_eq!(bernoulli_poly(3, 0.25), 0.25f64.powi(3) - 1.5 * 0.0625 + 0.5 * 0.25, max_relative = 1e-14);
    }

}
