//! Double-exponential quadrature, the p = q = 1 H-kernel and the finite
//! Laplace transform.
//!
//! Finite intervals use tanh-sinh, (0, ∞) uses exp-sinh. Integrands on
//! finite intervals receive the distances to both endpoints so that factors
//! like (1 − ξ)^c can be formed without cancellation. The declared endpoint
//! exponents fix how far the node window reaches; the mass left beyond the
//! outermost node is added as f(x_end)·gap/(e+1).

use std::f64::consts::FRAC_PI_2;

use crate::error::{domain, Error, Result};
use crate::foxwright::FoxWrightParams;
use crate::gamma::ln_gamma_pos;
use crate::sum::Neumaier;

/// Tolerances and endpoint behaviour of one integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_levels: usize,
    /// f ~ (x − lo)^e near the left endpoint (near 0 on the half line).
    pub left_exponent: f64,
    /// f ~ (hi − x)^e near the right endpoint; unused on the half line.
    pub right_exponent: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self { abs_tol: 1e-15, rel_tol: 1e-12, max_levels: 10, left_exponent: 0.0, right_exponent: 0.0 }
    }
}

impl QuadratureSpec {
    pub fn with_exponents(self, left: f64, right: f64) -> Self {
        Self { left_exponent: left, right_exponent: right, ..self }
    }

    pub fn with_rel_tol(self, rel_tol: f64) -> Self {
        Self { rel_tol, ..self }
    }

    fn validate(&self) -> Result<()> {
        if !(self.left_exponent > -1.0) || !(self.right_exponent > -1.0) {
            return domain(format!(
                "endpoint exponents must exceed −1, got {} and {}",
                self.left_exponent, self.right_exponent
            ));
        }
        if !(self.abs_tol > 0.0) || !(self.rel_tol > 0.0) || self.max_levels == 0 {
            return domain("quadrature tolerances must be positive and max_levels ≥ 1");
        }
        Ok(())
    }
}

/// Value of an integration with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub error_estimate: f64,
    pub levels: usize,
    pub evaluations: usize,
}

/// Step of the coarsest level in the transformed variable.
const H0: f64 = 0.5;

/// Relative gap below which an endpoint region is dropped for exponent e.
fn min_relative_gap(e: f64, scale: f64) -> f64 {
    let by_mass = 10f64.powf(-20.0 / (e + 1.0));
    by_mass.max(safe_gap(scale))
}

/// Smallest relative gap whose nodes stay representable.
fn safe_gap(scale: f64) -> f64 {
    (1e-300 / scale.max(1e-300)).max(1e-300)
}

/// Window end on the H0 grid: past `t_mass` if possible, never past `t_safe`.
fn window(t_mass: f64, t_safe: f64) -> f64 {
    let up = (t_mass / H0).ceil() * H0;
    let cap = (t_safe / H0).floor() * H0;
    up.min(cap).max(H0)
}

fn check(v: f64, x: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        domain(format!("integrand is not finite at x = {x:e}"))
    }
}

/// tanh-sinh over [lo, hi]; `f(x, x − lo, hi − x)`.
pub fn integrate_finite_detailed<F>(f: F, lo: f64, hi: f64, spec: &QuadratureSpec) -> Result<QuadResult>
where
    F: Fn(f64, f64, f64) -> f64,
{
    spec.validate()?;
    if !(hi > lo) || !lo.is_finite() || !hi.is_finite() {
        return domain(format!("integration interval [{lo}, {hi}] is empty or unbounded"));
    }
    let half = 0.5 * (hi - lo);
    let t_of_gap = |g: f64| (0.5 * (2.0 / g).ln() / FRAC_PI_2).asinh();
    let t_max_for = |e: f64| window(t_of_gap(min_relative_gap(e, half)), t_of_gap(safe_gap(half)));
    let t_hi = t_max_for(spec.right_exponent);
    let t_lo = t_max_for(spec.left_exponent);

    // (x, gap to lo, gap to hi, dx/dt)
    let node = |t: f64| -> (f64, f64, f64, f64) {
        let u = FRAC_PI_2 * t.sinh();
        let e = (-2.0 * u.abs()).exp();
        let small = half * 2.0 * e / (1.0 + e);
        let w = half * FRAC_PI_2 * t.cosh() * 4.0 * e / ((1.0 + e) * (1.0 + e));
        if t >= 0.0 {
            (hi - small, 2.0 * half - small, small, w)
        } else {
            (lo + small, small, 2.0 * half - small, w)
        }
    };
    let eval = |t: f64| -> Result<f64> {
        let (x, gl, gh, w) = node(t);
        if w == 0.0 {
            return Ok(0.0);
        }
        Ok(w * check(f(x, gl, gh), x)?)
    };

    let mut acc = Neumaier::new();
    let mut evaluations = 0usize;
    let n_hi = (t_hi / H0).round() as i64;
    let n_lo = (t_lo / H0).round() as i64;
    for k in -n_lo..=n_hi {
        acc.add(eval(k as f64 * H0)?);
        evaluations += 1;
    }
    // endpoint mass beyond the outermost nodes
    let (xl, gl, _, _) = node(-t_lo);
    let (xh, _, gh, _) = node(t_hi);
    let edge = check(f(xl, gl, 2.0 * half - gl), xl)? * gl / (spec.left_exponent + 1.0)
        + check(f(xh, 2.0 * half - gh, gh), xh)? * gh / (spec.right_exponent + 1.0);
    evaluations += 2;

    let mut h = H0;
    let mut prev = acc.value() * h + edge;
    let mut err = f64::INFINITY;
    for level in 1..=spec.max_levels {
        h *= 0.5;
        let mut t = -t_lo + h;
        while t < t_hi {
            acc.add(eval(t)?);
            evaluations += 1;
            t += 2.0 * h;
        }
        let cur = acc.value() * h + edge;
        err = (cur - prev).abs();
        if level >= 2 && err <= spec.abs_tol.max(spec.rel_tol * cur.abs()) {
            return Ok(QuadResult { value: cur, error_estimate: err, levels: level, evaluations });
        }
        prev = cur;
    }
    Err(Error::Accuracy { estimate: prev, bound: err })
}

/// ∫_lo^hi f(x) dx by tanh-sinh.
pub fn integrate_finite<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, spec: &QuadratureSpec) -> Result<f64> {
    integrate_finite_detailed(|x, _, _| f(x), lo, hi, spec).map(|r| r.value)
}

/// exp-sinh over (0, ∞). The right end of the node window is found by
/// scanning until the weighted integrand is negligible.
pub fn integrate_semi_infinite_detailed<F>(f: F, spec: &QuadratureSpec) -> Result<QuadResult>
where
    F: Fn(f64) -> f64,
{
    spec.validate()?;
    let x_min = min_relative_gap(spec.left_exponent, 1.0);
    let t_of = |x: f64| (x.ln() / FRAC_PI_2).asinh().abs();
    let t_lo = window(t_of(x_min), t_of(safe_gap(1.0)));
    let node = |t: f64| -> (f64, f64) {
        let u = FRAC_PI_2 * t.sinh();
        let x = u.exp();
        (x, x * FRAC_PI_2 * t.cosh())
    };
    let eval = |t: f64| -> Result<f64> {
        let (x, w) = node(t);
        Ok(w * check(f(x), x)?)
    };

    let mut acc = Neumaier::new();
    let mut evaluations = 0usize;
    let n_lo = (t_lo / H0).round() as i64;
    for k in -n_lo..=0 {
        acc.add(eval(k as f64 * H0)?);
        evaluations += 1;
    }
    // scan right until three consecutive weighted values are negligible
    let mut k = 1i64;
    let mut quiet = 0;
    let mut peak = acc.value().abs();
    loop {
        let t = k as f64 * H0;
        let (x, _) = node(t);
        if x > 1e300 {
            k -= 1;
            break;
        }
        let v = eval(t)?;
        evaluations += 1;
        acc.add(v);
        peak = peak.max(v.abs());
        if v.abs() <= 1e-22 * peak {
            quiet += 1;
            if quiet >= 3 {
                break;
            }
        } else {
            quiet = 0;
        }
        k += 1;
    }
    let t_hi = k as f64 * H0;
    let (x0, _) = node(-t_lo);
    let edge = check(f(x0), x0)? * x0 / (spec.left_exponent + 1.0);
    evaluations += 1;

    let mut h = H0;
    let mut prev = acc.value() * h + edge;
    let mut err = f64::INFINITY;
    for level in 1..=spec.max_levels {
        h *= 0.5;
        let mut t = -t_lo + h;
        while t < t_hi {
            acc.add(eval(t)?);
            evaluations += 1;
            t += 2.0 * h;
        }
        let cur = acc.value() * h + edge;
        err = (cur - prev).abs();
        if level >= 2 && err <= spec.abs_tol.max(spec.rel_tol * cur.abs()) {
            return Ok(QuadResult { value: cur, error_estimate: err, levels: level, evaluations });
        }
        prev = cur;
    }
    Err(Error::Accuracy { estimate: prev, bound: err })
}

/// ∫_0^∞ f(x) dx by exp-sinh.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(f: F, spec: &QuadratureSpec) -> Result<f64> {
    integrate_semi_infinite_detailed(f, spec).map(|r| r.value)
}

/// Finite Laplace transform ∫_0^T e^{−sξ} f(ξ) dξ; `f(ξ, ξ, T − ξ)`.
pub fn finite_laplace_detailed<F>(f: F, t_end: f64, s: f64, spec: &QuadratureSpec) -> Result<QuadResult>
where
    F: Fn(f64, f64, f64) -> f64,
{
    if !(t_end > 0.0) {
        return domain(format!("finite Laplace transform needs T > 0, got {t_end}"));
    }
    integrate_finite_detailed(|x, gl, gh| (-s * x).exp() * f(x, gl, gh), 0.0, t_end, spec)
}

/// Finite Laplace transform ∫_0^T e^{−sξ} f(ξ) dξ.
pub fn finite_laplace<F: Fn(f64) -> f64>(f: F, t_end: f64, s: f64, spec: &QuadratureSpec) -> Result<f64> {
    finite_laplace_detailed(|x, _, _| f(x), t_end, s, spec).map(|r| r.value)
}

/// Closed-form representing kernel of ₁Ψ₁[(α, A); (β, A)]:
/// H(ξ) = ξ^{α/A} (1 − ξ^{1/A})^{β−α−1} / (A Γ(β−α)) on (0, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelPQ11 {
    pub a_weight: f64,
    pub alpha: f64,
    pub beta: f64,
}

impl KernelPQ11 {
    pub fn new(a_weight: f64, alpha: f64, beta: f64) -> Result<Self> {
        if !(a_weight > 0.0) || !(alpha > 0.0) || !(beta > alpha) {
            return domain(format!(
                "kernel requires A > 0 and β > α > 0, got A = {a_weight}, α = {alpha}, β = {beta}"
            ));
        }
        Ok(Self { a_weight, alpha, beta })
    }

    /// Kernel of a p = q = 1 set with equal weights.
    pub fn from_params(params: &FoxWrightParams) -> Result<Self> {
        match (params.upper(), params.lower()) {
            ([(a, wa)], [(b, wb)]) if wa == wb => Self::new(*wa, *a, *b),
            _ => domain("kernel needs p = q = 1 with equal weights"),
        }
    }

    /// ln(A Γ(β−α)).
    fn ln_norm(&self) -> f64 {
        self.a_weight.ln() + ln_gamma_pos(self.beta - self.alpha)
    }

    /// H(ξ) given ξ and 1 − ξ.
    pub fn eval_with_gap(&self, xi: f64, one_minus_xi: f64) -> f64 {
        let inv_a = 1.0 / self.a_weight;
        let ln_xi = if xi < 0.5 { xi.ln() } else { (-one_minus_xi).ln_1p() };
        let factor = -(ln_xi * inv_a).exp_m1();
        let ln = self.alpha * inv_a * ln_xi + (self.beta - self.alpha - 1.0) * factor.ln() - self.ln_norm();
        ln.exp()
    }

    /// Endpoint exponents of H at 0 and 1.
    pub fn exponents(&self) -> (f64, f64) {
        (self.alpha / self.a_weight, self.beta - self.alpha - 1.0)
    }
}

/// H(ξ) for the p = q = 1 kernel; ξ must lie in (0, 1).
pub fn h_kernel_pq11(k: &KernelPQ11, xi: f64) -> Result<f64> {
    if !(xi > 0.0 && xi < 1.0) {
        return domain(format!("kernel argument must lie in (0, 1), got {xi}"));
    }
    Ok(k.eval_with_gap(xi, 1.0 - xi))
}

/// (1/(1−t))^λ ∫_0^1 ξ^{τ−1} (1 − ξ)^{−λ} H(ξ) dξ for the p = q = 1 kernel,
/// where ρ = 1.
pub fn normalized_gf_integral(
    kernel: &KernelPQ11,
    lambda: f64,
    tau: f64,
    t: f64,
    spec: &QuadratureSpec,
) -> Result<QuadResult> {
    if !(lambda > 0.0) || !(tau >= 0.0) {
        return domain(format!("need λ > 0 and τ ≥ 0, got λ = {lambda}, τ = {tau}"));
    }
    if !(t > 0.0 && t < 1.0) {
        return domain(format!("need 1 − t < ρ = 1 with t < 1, got t = {t}"));
    }
    let (e0, e1) = kernel.exponents();
    let left = tau - 1.0 + e0;
    let right = e1 - lambda;
    if !(left > -1.0) {
        return domain(format!("exponent τ − 1 + α/A = {left} at ξ = 0 must exceed −1"));
    }
    if !(right > -1.0) {
        return domain(format!("exponent β − α − 1 − λ = {right} at ξ = 1 must exceed −1 (needs λ < β − α)"));
    }
    let s = spec.with_exponents(left, right);
    let q = integrate_finite_detailed(
        |x, _, gh| ((tau - 1.0) * x.ln() - lambda * gh.ln()).exp() * kernel.eval_with_gap(x, gh),
        0.0,
        1.0,
        &s,
    )?;
    let pre = (1.0 - t).powf(-lambda);
    Ok(QuadResult { value: q.value * pre, error_estimate: q.error_estimate * pre, ..q })
}
