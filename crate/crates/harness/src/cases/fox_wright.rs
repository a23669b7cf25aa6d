//! Generating functions of shifted Fox-Wright functions: the finite Laplace
//! form and its bounds at p = q = 1, the normalized-function series against
//! their kernel integrals, and the (λ+k, A) over (λ, A) family.

use foxwright::error::{Error, Result};
use foxwright::foxwright::{fox_wright, fox_wright_normalized, pfq, FoxWrightParams};
use foxwright::gamma::{gamma, ln_gamma_signed, log_gamma};
use foxwright::quadrature::{finite_laplace_detailed, normalized_gf_integral, KernelPQ11, QuadratureSpec};
use foxwright::series::{sum_series, SeriesResult, TruncationPolicy};
use foxwright::sum::Neumaier;

use crate::case::{Evaluation, IdentityCase, IdentityReport, Kind, Point, SuiteConfig, Tolerance};
use crate::tailfit::PowerTail;

/// Hard cap on outer generating-function terms.
pub const OUTER_CAP: usize = 2000;

pub(crate) fn outer_policy(config: &SuiteConfig) -> TruncationPolicy {
    config.policy.with_max_terms(config.policy.max_terms.min(OUTER_CAP))
}

pub(crate) fn converged<T>(r: SeriesResult<T>, what: &str) -> Result<SeriesResult<T>> {
    if r.converged {
        Ok(r)
    } else {
        Err(Error::Domain(format!(
            "{what} did not converge within {} terms (tail estimate {:.3e})",
            r.terms_used, r.tail_estimate
        )))
    }
}

/// ψ₀,₀ and ψ₀,₁ of a parameter set, the constants of the Luke-type bounds
/// on the normalized function with (λ, 1) prepended.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LukeBounds {
    pub psi00: f64,
    pub psi01: f64,
}

impl LukeBounds {
    pub fn new(params: &FoxWrightParams) -> Self {
        Self { psi00: params.gamma_ratio(0), psi01: params.gamma_ratio(1) }
    }

    /// ψ₀,₀ / (1 − (ψ₀,₁/ψ₀,₀) t)^λ.
    pub fn lower(&self, lambda: f64, t: f64) -> f64 {
        self.psi00 / (1.0 - self.psi01 / self.psi00 * t).powf(lambda)
    }

    /// ψ₀,₀ − (ψ₀,₁/ρ)(1 − (1 − ρt)^{−λ}).
    pub fn upper(&self, lambda: f64, rho: f64, t: f64) -> f64 {
        self.psi00 - self.psi01 / rho * (1.0 - (1.0 - rho * t).powf(-lambda))
    }
}

fn pq11(a_weight: f64, alpha: f64, beta: f64) -> Result<FoxWrightParams> {
    FoxWrightParams::new(vec![(alpha, a_weight)], vec![(beta, a_weight)])
}

/// Σ_k C(λ+k−1, k) ₚΨ_q[(a + kA, A); (b + kB, B) | z] t^k.
pub fn shifted_generating_sum(
    params: &FoxWrightParams,
    lambda: f64,
    z: f64,
    t: f64,
    inner: &TruncationPolicy,
    outer: &TruncationPolicy,
) -> Result<SeriesResult> {
    let mut weight = 1.0;
    sum_series(outer, |k| {
        if k > 0 {
            weight *= (lambda + (k - 1) as f64) / k as f64 * t;
        }
        let psi = converged(fox_wright(&params.shifted(k), z, inner)?, "inner Fox-Wright series")?;
        Ok(weight * psi.value)
    })
}

/// ∫_0^1 e^{zξ} (1 − tξ)^{−λ} H(ξ) dξ/ξ for the p = q = 1 kernel.
fn laplace_side(kernel: &KernelPQ11, lambda: f64, z: f64, t: f64) -> Result<(f64, usize)> {
    let (e0, e1) = kernel.exponents();
    let spec = QuadratureSpec::default().with_exponents(e0 - 1.0, e1);
    let q = finite_laplace_detailed(
        |x, _, gap| ((1.0 - t) + t * gap).powf(-lambda) * kernel.eval_with_gap(x, gap) / x,
        1.0,
        -z,
        &spec,
    )?;
    Ok((q.value, q.levels))
}

fn laplace_gf_hypotheses(p: &Point) -> std::result::Result<(), String> {
    let (a, alpha, beta, lambda, t) = (p.get("A"), p.get("alpha"), p.get("beta"), p.get("lambda"), p.get("t"));
    if !(a > 0.0 && alpha >= a && beta > alpha) {
        return Err(format!("needs β > α ≥ A > 0, got A={a}, α={alpha}, β={beta}"));
    }
    if !(lambda > 0.0) || !(t.abs() < 1.0) {
        return Err(format!("needs λ > 0 and |t| < 1, got λ={lambda}, t={t}"));
    }
    Ok(())
}

fn eval_laplace_gf(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let (a, alpha, beta, lambda, z, t) =
        (p.get("A"), p.get("alpha"), p.get("beta"), p.get("lambda"), p.get("z"), p.get("t"));
    let g = gamma(lambda)?;
    let sum = shifted_generating_sum(&pq11(a, alpha, beta)?, lambda, z, t, &config.policy, &outer_policy(config))?;
    let sum = converged(sum, "outer k-sum")?;
    let (integral, levels) = laplace_side(&KernelPQ11::new(a, alpha, beta)?, lambda, z, t)?;
    Ok(Evaluation::real(
        g * sum.value,
        g * integral,
        format!("outer terms {}, quadrature levels {levels}", sum.terms_used),
    ))
}

/// Double sum Σ_k Σ_n Γ(λ+k)Γ(α+(k+n)A)/Γ(β+(k+n)A) zⁿtᵏ/(n!k!) against
/// Γ(λ) ∫_0^1 e^{zξ}(1 − tξ)^{−λ} H(ξ) dξ/ξ.
pub fn laplace_gf_case() -> IdentityCase {
    let mut grid = vec![
        Point::new(&[("A", 1.0), ("alpha", 1.0), ("beta", 3.0), ("lambda", 1.0), ("z", 0.0), ("t", 0.5)]),
        Point::new(&[("A", 1.0), ("alpha", 1.5), ("beta", 4.0), ("lambda", 0.7), ("z", 0.3), ("t", -0.4)]),
    ];
    for &(a, alpha, beta) in &[(0.5, 1.0, 2.5), (1.0, 1.5, 4.0), (2.0, 2.0, 3.5)] {
        for &lambda in &[0.7, 1.5] {
            for &z in &[0.3, -0.8] {
                for &t in &[-0.4, 0.5] {
                    grid.push(Point::new(&[
                        ("A", a),
                        ("alpha", alpha),
                        ("beta", beta),
                        ("lambda", lambda),
                        ("z", z),
                        ("t", t),
                    ]));
                }
            }
        }
    }
    IdentityCase {
        id: "laplace-gf-p1q1",
        anchor: "generating function of shifted Fox-Wright functions as a finite Laplace transform, p = q = 1 double sum",
        description: "Double sum over k and n with denominator index k + n against the finite Laplace transform of the \
                      closed-form kernel ξ^{α/A}(1 − ξ^{1/A})^{β−α−1}/(AΓ(β−α)); requires β > α ≥ A",
        kind: Kind::Equality,
        tolerance: Tolerance::new(1e-14, 1e-7),
        grid,
        hypotheses: laplace_gf_hypotheses,
        evaluate: eval_laplace_gf,
    }
}

fn eval_laplace_gf_printed(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let (a, alpha, beta, lambda, z, t) =
        (p.get("A"), p.get("alpha"), p.get("beta"), p.get("lambda"), p.get("z"), p.get("t"));
    let g = gamma(lambda)?;
    let sum = shifted_generating_sum(&pq11(a, alpha, beta)?, lambda, z, t, &config.policy, &outer_policy(config))?;
    let sum = converged(sum, "outer k-sum")?;
    // (1 − ξ) in place of (1 − ξ^{1/A})
    let spec = QuadratureSpec::default().with_exponents(alpha / a - 1.0, beta - alpha - 1.0);
    let q = finite_laplace_detailed(
        |x, _, gap| {
            ((alpha / a - 1.0) * x.ln() + (beta - alpha - 1.0) * gap.ln()).exp() * ((1.0 - t) + t * gap).powf(-lambda)
        },
        1.0,
        -z,
        &spec,
    )?;
    let pre = g / (a * gamma(beta - alpha)?);
    Ok(Evaluation::real(
        g * sum.value,
        pre * q.value,
        format!("kernel with (1 − ξ) instead of (1 − ξ^{{1/A}}); outer terms {}", sum.terms_used),
    ))
}

/// The same double sum against the kernel written with (1 − ξ), which is
/// only correct for A = 1.
pub fn laplace_gf_printed_case() -> IdentityCase {
    let grid = vec![
        Point::new(&[("A", 2.0), ("alpha", 2.0), ("beta", 3.5), ("lambda", 0.7), ("z", 0.3), ("t", 0.5)]),
        Point::new(&[("A", 0.5), ("alpha", 1.0), ("beta", 2.5), ("lambda", 1.5), ("z", -0.8), ("t", -0.4)]),
    ];
    IdentityCase {
        id: "laplace-gf-p1q1-printed-kernel",
        anchor: "generating function of shifted Fox-Wright functions as a finite Laplace transform, printed kernel for A ≠ 1",
        description: "Audit: the finite Laplace transform with (1 − ξ)^{β−α−1} differs from the double sum when A ≠ 1",
        kind: Kind::Audit,
        tolerance: Tolerance::new(1e-9, 1e-7),
        grid,
        hypotheses: laplace_gf_hypotheses,
        evaluate: eval_laplace_gf_printed,
    }
}

fn bounds_hypotheses(p: &Point) -> std::result::Result<(), String> {
    let (a, alpha, beta, lambda, t, z) =
        (p.get("A"), p.get("alpha"), p.get("beta"), p.get("lambda"), p.get("t"), p.get("z"));
    if !(a > 0.0 && beta - alpha > 0.0 && alpha / a >= 1.0) {
        return Err(format!("needs β − α > 0 and α/A ≥ 1, got A={a}, α={alpha}, β={beta}"));
    }
    if !(lambda > 0.0 && t > 0.0 && t < 1.0 && z > 0.0) {
        return Err(format!("needs λ > 0, 0 < t < 1, z > 0, got λ={lambda}, t={t}, z={z}"));
    }
    Ok(())
}

fn eval_bounds(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let (a, alpha, beta, lambda, t, z) =
        (p.get("A"), p.get("alpha"), p.get("beta"), p.get("lambda"), p.get("t"), p.get("z"));
    let params = pq11(a, alpha, beta)?;
    let rho = params.convergence().rho;
    let luke = LukeBounds::new(&params);
    let normalized = converged(fox_wright_normalized(lambda, &params, t, &config.policy)?, "normalized function")?;
    let sum = converged(
        shifted_generating_sum(&params, lambda, z, t, &config.policy, &outer_policy(config))?,
        "outer k-sum",
    )?;
    let grow = (rho * z).exp();
    Ok(Evaluation::Chain {
        links: vec![
            ("luke-lower", luke.lower(lambda, t)),
            ("normalized", normalized.value),
            ("generating-sum", sum.value),
            ("scaled-normalized", grow * normalized.value),
            ("scaled-luke-upper", grow * luke.upper(lambda, rho, t)),
        ],
        diagnostics: format!("ψ00={:.6e}, ψ01={:.6e}, ρ={rho}", luke.psi00, luke.psi01),
    })
}

/// Luke-type lower bound ≤ normalized function ≤ generating sum ≤
/// e^{ρz}·normalized function ≤ e^{ρz}·Luke-type upper bound, with σ = λ.
pub fn laplace_gf_bounds_case() -> IdentityCase {
    let mut grid = vec![Point::new(&[
        ("A", 1.0),
        ("alpha", 2.0),
        ("beta", 3.0),
        ("lambda", 1.0),
        ("t", 0.3),
        ("z", 0.5),
    ])];
    for &(a, alpha, beta) in &[(1.0, 1.0, 2.0), (1.0, 1.5, 4.0), (2.0, 2.0, 3.0), (2.0, 3.0, 5.5)] {
        for &lambda in &[0.5, 1.5] {
            for &(t, z) in &[(0.3, 0.5), (0.7, 1.2)] {
                grid.push(Point::new(&[
                    ("A", a),
                    ("alpha", alpha),
                    ("beta", beta),
                    ("lambda", lambda),
                    ("t", t),
                    ("z", z),
                ]));
            }
        }
    }
    IdentityCase {
        id: "laplace-gf-bounds",
        anchor: "two-sided bounds on the Fox-Wright generating function and the Luke-type chain",
        description: "p = q = 1 with A = B, β − α > 0 and α/A ≥ 1; z > 0 and 0 < t < 1; σ = λ",
        kind: Kind::InequalityChain,
        tolerance: Tolerance::new(1e-10, 1e-10),
        grid,
        hypotheses: bounds_hypotheses,
        evaluate: eval_bounds,
    }
}

/// Leading decay exponent of the normalized-function series terms.
fn normalized_series_exponent(alpha: f64, beta: f64, lambda: f64) -> f64 {
    1.0 + beta - alpha - lambda
}

/// Σ_k C(λ+k−1, k) Ψ̌_{λ+k}[(α+τA, A); (β+τA, A) | 1 − t] t^k; the terms
/// decay like k^{−(1+β−α−λ)} and the remainder is fitted.
pub fn normalized_gf_sum(
    a: f64,
    alpha: f64,
    beta: f64,
    lambda: f64,
    tau: f64,
    t: f64,
    policy: &TruncationPolicy,
) -> Result<crate::tailfit::TailedSum> {
    let params = pq11(a, alpha + tau * a, beta + tau * a)?;
    let x = 1.0 - t;
    let ln_t = t.ln();
    let ln_g = log_gamma(lambda)?;
    let tail = PowerTail { exponent: normalized_series_exponent(alpha, beta, lambda), last: 240, order: 5, window: 120 };
    tail.sum(|k| {
        let kf = k as f64;
        let weight = (ln_gamma_signed(lambda + kf).0 - ln_g - ln_gamma_signed(kf + 1.0).0 + kf * ln_t).exp();
        let psi = converged(fox_wright_normalized(lambda + kf, &params, x, policy)?, "normalized function")?;
        Ok(weight * psi.value)
    })
}

fn normalized_hypotheses(p: &Point) -> std::result::Result<(), String> {
    let (a, alpha, beta, lambda, tau, t) =
        (p.get("A"), p.get("alpha"), p.get("beta"), p.get("lambda"), p.get("tau"), p.get("t"));
    if !(a > 0.0 && beta > alpha && alpha / a >= 1.0) {
        return Err(format!("needs β > α and α/A ≥ 1, got A={a}, α={alpha}, β={beta}"));
    }
    if !(lambda > 0.0 && lambda < 1.0f64.min(beta - alpha)) {
        return Err(format!("needs 0 < λ < min(1, β − α), got λ={lambda}"));
    }
    if !(tau >= 0.0 && t > 0.0 && t < 1.0) {
        return Err(format!("needs τ ≥ 0 and 0 < t < 1, got τ={tau}, t={t}"));
    }
    Ok(())
}

fn eval_normalized(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let (a, alpha, beta, lambda, tau, t) =
        (p.get("A"), p.get("alpha"), p.get("beta"), p.get("lambda"), p.get("tau"), p.get("t"));
    let lhs = normalized_gf_sum(a, alpha, beta, lambda, tau, t, &config.policy)?;
    let rhs = normalized_gf_integral(&KernelPQ11::new(a, alpha, beta)?, lambda, tau, t, &QuadratureSpec::default())?;
    Ok(Evaluation::real(
        lhs.value,
        rhs.value,
        format!("fitted remainder {:.3e} ± {:.1e}, quadrature levels {}", lhs.remainder, lhs.error, rhs.levels),
    ))
}

/// Σ_k C(λ+k−1, k) Ψ̌ t^k against (1 − t)^{−λ} ∫_0^1 ξ^{τ−1}(1 − ξ)^{−λ} H(ξ) dξ,
/// the integral both generating functions reduce to before the two-variable
/// H-function appears.
pub fn normalized_gf_case() -> IdentityCase {
    let mut grid = vec![
        Point::new(&[("A", 1.0), ("alpha", 1.0), ("beta", 3.0), ("lambda", 0.5), ("tau", 0.0), ("t", 0.2)]),
        Point::new(&[("A", 1.0), ("alpha", 1.2), ("beta", 3.5), ("lambda", 0.4), ("tau", 0.5), ("t", 0.3)]),
    ];
    for &(a, alpha, beta, lambda) in &[(1.0, 1.0, 3.0, 0.5), (2.0, 2.0, 4.5, 0.7)] {
        for &tau in &[0.0, 0.5, 1.0] {
            for &t in &[0.25, 0.5] {
                grid.push(Point::new(&[
                    ("A", a),
                    ("alpha", alpha),
                    ("beta", beta),
                    ("lambda", lambda),
                    ("tau", tau),
                    ("t", t),
                ]));
            }
        }
    }
    IdentityCase {
        id: "normalized-gf-integral",
        anchor: "generating function of normalized Fox-Wright functions at (1 − t)/ρ, integral form with the ξ^τ shift",
        description: "Series over k of C(λ+k−1, k)·Ψ̌[(λ+k, 1), (α+τA, A); (β+τA, A) | 1 − t]·t^k with a fitted \
                      power-law remainder, against the kernel integral; ρ = 1 here, so 1 − t < ρ holds but ρ < 1 does not",
        kind: Kind::Equality,
        tolerance: Tolerance::new(1e-14, 1e-6),
        grid,
        hypotheses: normalized_hypotheses,
        evaluate: eval_normalized,
    }
}

/// t^k/k! · ₁Ψ₁[(λ+k, A); (λ, A) | z] summed over k.
///
/// ₁Ψ₁ grows like Γ(λ+k) and its alternating series cancels for z < 0, so
/// the terms come from (λ + nA)_k/k! = Σ_j d_{k,j} A^j n(n−1)…(n−j+1),
/// which gives ₁Ψ₁/k! = e^z Σ_j d_{k,j}(Az)^j with
/// d_{k+1,j} = ((λ+k+Aj) d_{k,j} + d_{k,j−1}) / (k+1).
pub fn exponential_gf_sum(lambda: f64, a: f64, z: f64, t: f64, config: &SuiteConfig) -> Result<SeriesResult> {
    let outer = outer_policy(config);
    let az = a * z;
    let ez = z.exp();
    let mut d = vec![1.0];
    let mut tk = 1.0;
    sum_series(&outer, |k| {
        if k > 0 {
            let km = (k - 1) as f64;
            let mut next = vec![0.0; k + 1];
            for (j, slot) in next.iter_mut().enumerate() {
                let stay = if j < k { (lambda + km + a * j as f64) * d[j] } else { 0.0 };
                let up = if j > 0 { d[j - 1] } else { 0.0 };
                *slot = (stay + up) / k as f64;
            }
            d = next;
            tk *= t;
        }
        let mut acc = Neumaier::new();
        let mut pw = 1.0;
        for &dj in &d {
            acc.add(dj * pw);
            pw *= az;
        }
        Ok(ez * tk * acc.value())
    })
}

fn exponential_hypotheses(p: &Point) -> std::result::Result<(), String> {
    let (lambda, a, t) = (p.get("lambda"), p.get("A"), p.get("t"));
    if lambda > 0.0 && a > 0.0 && t.abs() < 1.0 {
        Ok(())
    } else {
        Err(format!("needs λ > 0, A > 0, |t| < 1, got λ={lambda}, A={a}, t={t}"))
    }
}

fn eval_exponential(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let (lambda, a, z, t) = (p.get("lambda"), p.get("A"), p.get("z"), p.get("t"));
    let lhs = converged(exponential_gf_sum(lambda, a, z, t, config)?, "outer k-sum")?;
    let rhs = (1.0 - t).powf(-lambda) * (z / (1.0 - t).powf(a)).exp();
    Ok(Evaluation::real(lhs.value, rhs, format!("outer terms {}", lhs.terms_used)))
}

/// Σ_k ₁Ψ₁[(λ+k, A); (λ, A) | z] t^k/k! = (1 − t)^{−λ} exp(z/(1 − t)^A).
pub fn exponential_gf_case() -> IdentityCase {
    let mut grid = Vec::new();
    for &lambda in &[0.5, 1.0, 2.0] {
        for &a in &[0.5, 1.0, 2.0] {
            for &z in &[-0.5, 0.5] {
                for &t in &[-0.5, 0.25, 0.75] {
                    grid.push(Point::new(&[("lambda", lambda), ("A", a), ("z", z), ("t", t)]));
                }
            }
        }
    }
    IdentityCase {
        id: "shifted-gamma-gf-exponential",
        anchor: "generating function with (λ+k, A) over (λ, A), p = q = 1 exponential closed form",
        description: "Truncated k-sum of ₁Ψ₁[(λ+k, A); (λ, A) | z]·t^k/k! against (1 − t)^{−λ} exp(z/(1 − t)^A)",
        kind: Kind::Equality,
        tolerance: Tolerance::new(1e-14, 1e-9),
        grid,
        hypotheses: exponential_hypotheses,
        evaluate: eval_exponential,
    }
}

fn general_hypotheses(p: &Point) -> std::result::Result<(), String> {
    let (lambda, a, a2, w2, b2, v2, t) =
        (p.get("lambda"), p.get("A"), p.get("a2"), p.get("A2"), p.get("b2"), p.get("B2"), p.get("t"));
    if !(lambda > 0.0 && a > 0.0 && a2 > 0.0 && w2 > 0.0 && b2 > 0.0 && v2 > 0.0 && t.abs() < 1.0) {
        return Err("needs positive parameters and |t| < 1".into());
    }
    if !(v2 - w2 > -1.0) {
        return Err(format!("reduced function needs Δ = B2 − A2 > −1, got {}", v2 - w2));
    }
    Ok(())
}

fn eval_general(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let (lambda, a, a2, w2, b2, v2, z, t) = (
        p.get("lambda"),
        p.get("A"),
        p.get("a2"),
        p.get("A2"),
        p.get("b2"),
        p.get("B2"),
        p.get("z"),
        p.get("t"),
    );
    let ln_t = t.abs().ln();
    let lhs = sum_series(&outer_policy(config), |k| {
        let kf = k as f64;
        let params = FoxWrightParams::new(vec![(lambda + kf, a), (a2, w2)], vec![(lambda, a), (b2, v2)])?;
        let psi = converged(fox_wright(&params, z, &config.policy)?, "inner Fox-Wright series")?;
        let w = if t == 0.0 {
            if k == 0 { 1.0 } else { 0.0 }
        } else {
            t.signum().powi(k as i32) * (kf * ln_t - ln_gamma_signed(kf + 1.0).0).exp()
        };
        Ok(w * psi.value)
    })?;
    let lhs = converged(lhs, "outer k-sum")?;
    let reduced = FoxWrightParams::new(vec![(a2, w2)], vec![(b2, v2)])?;
    let rhs = (1.0 - t).powf(-lambda) * converged(fox_wright(&reduced, z / (1.0 - t).powf(a), &config.policy)?, "reduced")?.value;
    Ok(Evaluation::real(lhs.value, rhs, format!("outer terms {}", lhs.terms_used)))
}

/// Σ_k ₂Ψ₂[(λ+k, A), (a₂, A₂); (λ, A), (b₂, B₂) | z] t^k/k! =
/// (1 − t)^{−λ} ₁Ψ₁[(a₂, A₂); (b₂, B₂) | z/(1 − t)^A].
pub fn shifted_gamma_gf_case() -> IdentityCase {
    let mut grid = Vec::new();
    for &(lambda, a) in &[(1.0, 1.0), (0.6, 0.5), (1.5, 2.0)] {
        for &(a2, w2, b2, v2) in &[(1.5, 1.0, 2.5, 1.0), (0.8, 0.5, 1.7, 1.5)] {
            for &(z, t) in &[(0.4, 0.3), (1.2, -0.5), (-0.3, 0.6)] {
                grid.push(Point::new(&[
                    ("lambda", lambda),
                    ("A", a),
                    ("a2", a2),
                    ("A2", w2),
                    ("b2", b2),
                    ("B2", v2),
                    ("z", z),
                    ("t", t),
                ]));
            }
        }
    }
    IdentityCase {
        id: "shifted-gamma-gf",
        anchor: "generating function with (λ+k, A) over (λ, A) reducing p, q by one",
        description: "Truncated k-sum of ₂Ψ₂[(λ+k, A), (a₂, A₂); (λ, A), (b₂, B₂) | z]·t^k/k! against the reduced \
                      ₁Ψ₁ at z/(1 − t)^A",
        kind: Kind::Equality,
        tolerance: Tolerance::new(1e-14, 1e-9),
        grid,
        hypotheses: general_hypotheses,
        evaluate: eval_general,
    }
}

fn hypergeometric_hypotheses(p: &Point) -> std::result::Result<(), String> {
    let (a1, a2, b2, q, z, t) = (p.get("a1"), p.get("a2"), p.get("b2"), p.get("q"), p.get("z"), p.get("t"));
    if !(a1 > 0.0 && a2 > 0.0 && b2 > 0.0) {
        return Err("needs a₁, a₂, b₂ > 0".into());
    }
    match q as i64 {
        1 if z.abs() + t.abs() < 1.0 => Ok(()),
        2 if t.abs() < 1.0 => Ok(()),
        1 => Err(format!("₂F₁ form needs |z| + |t| < 1, got z={z}, t={t}")),
        _ => Err(format!("q must be 1 or 2 with |t| < 1, got q={q}, t={t}")),
    }
}

fn eval_hypergeometric(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let (a1, a2, b2, q, z, t) = (p.get("a1"), p.get("a2"), p.get("b2"), p.get("q"), p.get("z"), p.get("t"));
    let two_lower = q as i64 == 2;
    let ln_t = t.abs().ln();
    let lhs = sum_series(&outer_policy(config), |k| {
        let kf = k as f64;
        let upper = [a1 + kf, a2];
        let f = if two_lower { pfq(&upper, &[a1, b2], z, &config.policy)? } else { pfq(&upper, &[a1], z, &config.policy)? };
        let f = converged(f, "inner hypergeometric series")?;
        let w = if t == 0.0 {
            if k == 0 { gamma(a1)? } else { 0.0 }
        } else {
            t.signum().powi(k as i32) * (ln_gamma_signed(a1 + kf).0 - ln_gamma_signed(kf + 1.0).0 + kf * ln_t).exp()
        };
        Ok(w * f.value)
    })?;
    let lhs = converged(lhs, "outer k-sum")?;
    let x = z / (1.0 - t);
    let reduced = if two_lower { pfq(&[a2], &[b2], x, &config.policy)? } else { pfq(&[a2], &[], x, &config.policy)? };
    let rhs = gamma(a1)? * (1.0 - t).powf(-a1) * converged(reduced, "reduced hypergeometric series")?.value;
    Ok(Evaluation::real(lhs.value, rhs, format!("outer terms {}", lhs.terms_used)))
}

/// Σ_k ₚF_q[a₁+k, a₂; a₁, (b₂) | z] Γ(a₁+k) t^k/k! =
/// Γ(a₁)(1 − t)^{−a₁} ₚ₋₁F_{q−1}[a₂; (b₂) | z/(1 − t)].
pub fn hypergeometric_gf_case() -> IdentityCase {
    let mut grid = vec![Point::new(&[("a1", 1.5), ("a2", 2.0), ("b2", 1.0), ("q", 1.0), ("z", 0.3), ("t", 0.4)])];
    for &(a1, a2, b2) in &[(1.5, 2.0, 3.0), (0.7, 1.2, 0.5)] {
        for &(z, t) in &[(0.8, 0.5), (-1.5, -0.6), (2.0, 0.3)] {
            grid.push(Point::new(&[("a1", a1), ("a2", a2), ("b2", b2), ("q", 2.0), ("z", z), ("t", t)]));
        }
        for &(z, t) in &[(0.3, -0.4), (-0.5, 0.2)] {
            grid.push(Point::new(&[("a1", a1), ("a2", a2), ("b2", b2), ("q", 1.0), ("z", z), ("t", t)]));
        }
    }
    IdentityCase {
        id: "shifted-gamma-gf-hypergeometric",
        anchor: "generating function with (λ+k, A) over (λ, A), unit-weight hypergeometric form",
        description: "q = 1: ₂F₁[a₁+k, a₂; a₁] against ₁F₀[a₂;; z/(1 − t)]; q = 2: ₂F₂[a₁+k, a₂; a₁, b₂] against \
                      ₁F₁[a₂; b₂; z/(1 − t)]; the lower list carries a₁ in place of the printed labels",
        kind: Kind::Equality,
        tolerance: Tolerance::new(1e-14, 1e-9),
        grid,
        hypotheses: hypergeometric_hypotheses,
        evaluate: eval_hypergeometric,
    }
}

/// Runs the finite-Laplace double-sum case at one point.
#[allow(clippy::too_many_arguments)]
pub fn check_laplace_gf(a: f64, alpha: f64, beta: f64, lambda: f64, z: f64, t: f64, config: &SuiteConfig) -> IdentityReport {
    let p = Point::new(&[("A", a), ("alpha", alpha), ("beta", beta), ("lambda", lambda), ("z", z), ("t", t)]);
    laplace_gf_case().run(&p, config)
}

/// Runs the bound chain at one point.
#[allow(clippy::too_many_arguments)]
pub fn check_laplace_gf_bounds(
    a: f64,
    alpha: f64,
    beta: f64,
    lambda: f64,
    z: f64,
    t: f64,
    config: &SuiteConfig,
) -> IdentityReport {
    let p = Point::new(&[("A", a), ("alpha", alpha), ("beta", beta), ("lambda", lambda), ("t", t), ("z", z)]);
    laplace_gf_bounds_case().run(&p, config)
}

/// Runs the normalized-function series against its integral at one point.
pub fn check_normalized_gf(
    kernel: &KernelPQ11,
    lambda: f64,
    tau: f64,
    t: f64,
    config: &SuiteConfig,
) -> IdentityReport {
    let p = Point::new(&[
        ("A", kernel.a_weight),
        ("alpha", kernel.alpha),
        ("beta", kernel.beta),
        ("lambda", lambda),
        ("tau", tau),
        ("t", t),
    ]);
    normalized_gf_case().run(&p, config)
}

/// Runs the exponential closed form at one point.
pub fn check_exponential_gf(lambda: f64, a: f64, z: f64, t: f64, config: &SuiteConfig) -> IdentityReport {
    exponential_gf_case().run(&Point::new(&[("lambda", lambda), ("A", a), ("z", z), ("t", t)]), config)
}
