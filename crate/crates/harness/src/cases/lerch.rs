//! Generating functions of extended Hurwitz-Lerch functions, the double
//! series they collapse to and the polylogarithm rows.

use num_complex::Complex64;

use foxwright::error::Result;
use foxwright::gamma::{gamma, ln_gamma_signed};
use foxwright::series::{sum_series, SeriesResult, TruncationPolicy};
use foxwright::sum::NeumaierComplex;
use foxwright::zeta::{
    extended_lerch_phi, lerch_phi, lerch_phi_series, lerch_region, lipschitz_lerch, polylog, riemann_zeta, unit_root,
    LerchParams,
};

use super::fox_wright::{converged, outer_policy};
use crate::case::{Evaluation, IdentityCase, IdentityReport, Kind, Point, SuiteConfig, Tolerance};

/// Γ(λ+k) t^k/k! with the sign of t^k.
fn gamma_weight(lambda: f64, k: usize, t: f64) -> f64 {
    if t == 0.0 {
        return if k == 0 { ln_gamma_signed(lambda).0.exp() } else { 0.0 };
    }
    let kf = k as f64;
    t.signum().powi(k as i32) * (ln_gamma_signed(lambda + kf).0 - ln_gamma_signed(kf + 1.0).0 + kf * t.abs().ln()).exp()
}

/// Bound on the weighted inner truncation and rounding error, relative to
/// the outer sum.
const INNER_REL_ERROR: f64 = 1e-11;

/// Σ_k Φ^{(ρ₁, rest; ρ₁, rest)}_{λ₁+k, rest; λ₁, rest}(z, s, a) Γ(λ₁+k) t^k/k!
/// over at most `cap` outer terms, or until converged when `cap` is `None`.
///
/// For large k the inner series cancel heavily when z is not positive, so
/// their error estimates are weighted by |Γ(λ₁+k) t^k/k!| and bounded on the
/// total rather than per term.
#[allow(clippy::too_many_arguments)]
pub fn lerch_gf_sum(
    lead: (f64, f64),
    upper_rest: &[(f64, f64)],
    lower_rest: &[(f64, f64)],
    s: f64,
    a: f64,
    z: Complex64,
    t: f64,
    config: &SuiteConfig,
    cap: Option<usize>,
) -> Result<SeriesResult<Complex64>> {
    let (lambda1, rho1) = lead;
    let mut inner_error = 0.0;
    let mut term = |k: usize| -> Result<Complex64> {
        let mut upper = vec![(lambda1 + k as f64, rho1)];
        upper.extend_from_slice(upper_rest);
        let mut lower = vec![(lambda1, rho1)];
        lower.extend_from_slice(lower_rest);
        let params = LerchParams::new(upper, lower, s, a)?;
        let phi = extended_lerch_phi(&params, z, &config.policy)?;
        let w = gamma_weight(lambda1, k, t);
        inner_error += w.abs() * phi.tail_estimate;
        Ok(phi.value * w)
    };
    let mut out = match cap {
        None => sum_series(&outer_policy(config), &mut term)?,
        Some(n) => {
            let mut acc = NeumaierComplex::new();
            let mut last = 0.0;
            for k in 0..n {
                let v = term(k)?;
                last = v.norm();
                acc.add(v);
            }
            SeriesResult { value: acc.value(), terms_used: n, tail_estimate: last, converged: true, abs_sum: acc.abs_sum() }
        }
    };
    if inner_error > INNER_REL_ERROR * out.value.norm() {
        out.converged = false;
        out.tail_estimate = out.tail_estimate.max(inner_error);
    }
    Ok(out)
}

fn lerch_gf_hypotheses(p: &Point) -> std::result::Result<(), String> {
    let (rho1, rho2, sigma2, s, a, z, t) =
        (p.get("rho1"), p.get("rho2"), p.get("sigma2"), p.get("s"), p.get("a"), p.get("z"), p.get("t"));
    if !(t > -1.0 && t < 0.0) {
        return Err(format!("grid keeps −1 < t < 0, got t={t}"));
    }
    let reduced = LerchParams::new(vec![(p.get("lambda2"), rho2)], vec![(p.get("mu2"), sigma2)], s, a)
        .map_err(|e| e.to_string())?;
    if !(rho1 > 0.0 && p.get("lambda1") > 0.0) {
        return Err("needs λ₁, ρ₁ > 0".into());
    }
    let w = Complex64::new(z * (1.0 - t).powf(-rho1), 0.0);
    lerch_region(&reduced, w).map(|_| ()).map_err(|e| format!("reduced function at z(1 − t)^{{−ρ₁}}: {e}"))
}

fn eval_lerch_gf(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let (lambda1, rho1, lambda2, rho2, mu2, sigma2, s, a, z, t) = (
        p.get("lambda1"),
        p.get("rho1"),
        p.get("lambda2"),
        p.get("rho2"),
        p.get("mu2"),
        p.get("sigma2"),
        p.get("s"),
        p.get("a"),
        p.get("z"),
        p.get("t"),
    );
    let zc = Complex64::new(z, 0.0);
    let lhs = lerch_gf_sum((lambda1, rho1), &[(lambda2, rho2)], &[(mu2, sigma2)], s, a, zc, t, config, None)?;
    let lhs = converged(lhs, "outer k-sum")?;
    let reduced = LerchParams::new(vec![(lambda2, rho2)], vec![(mu2, sigma2)], s, a)?;
    let w = zc * (1.0 - t).powf(-rho1);
    let phi = converged(extended_lerch_phi(&reduced, w, &config.policy)?, "reduced extended Lerch series")?;
    let rhs = gamma(lambda1)? * (1.0 - t).powf(-lambda1) * phi.value;
    Ok(Evaluation::complex(lhs.value, rhs, format!("outer terms {}", lhs.terms_used)))
}

/// Σ_k Φ^{(ρ₁, ρ₂; ρ₁, σ₂)}_{λ₁+k, λ₂; λ₁, μ₂}(z, s, a) Γ(λ₁+k) t^k/k! =
/// Γ(λ₁)(1 − t)^{−λ₁} Φ^{(ρ₂; σ₂)}_{λ₂; μ₂}(z(1 − t)^{−ρ₁}, s, a).
pub fn lerch_gf_case() -> IdentityCase {
    let mut grid = Vec::new();
    for &(lambda1, rho1) in &[(1.0, 1.0), (0.6, 0.5), (1.8, 1.5)] {
        for &(lambda2, rho2, mu2, sigma2) in &[(1.5, 1.0, 2.0, 1.0), (0.7, 0.5, 1.3, 1.2)] {
            for &(z, t) in &[(0.8, -0.4), (-1.5, -0.7)] {
                grid.push(Point::new(&[
                    ("lambda1", lambda1),
                    ("rho1", rho1),
                    ("lambda2", lambda2),
                    ("rho2", rho2),
                    ("mu2", mu2),
                    ("sigma2", sigma2),
                    ("s", 2.5),
                    ("a", 0.7),
                    ("z", z),
                    ("t", t),
                ]));
            }
        }
    }
    IdentityCase {
        id: "lerch-gf",
        anchor: "generating function of extended Hurwitz-Lerch functions with (λ₁+k, ρ₁) over (λ₁, ρ₁)",
        description: "p = q = 2 extended Lerch per k against the p = q = 1 function at z(1 − t)^{−ρ₁}",
        kind: Kind::Equality,
        tolerance: Tolerance::new(1e-14, 1e-8),
        grid,
        hypotheses: lerch_gf_hypotheses,
        evaluate: eval_lerch_gf,
    }
}

/// Radius of convergence in t of the Φ-reduced generating function: the
/// right side is singular where z(1 − t)^{−ρ₁} = 1.
pub fn outer_radius(z_abs: f64, rho1: f64) -> f64 {
    1.0 - z_abs.powf(1.0 / rho1)
}

fn phi_hypotheses(p: &Point) -> std::result::Result<(), String> {
    let (lambda1, rho1, s, a, z, t) = (p.get("lambda1"), p.get("rho1"), p.get("s"), p.get("a"), p.get("z"), p.get("t"));
    if !(lambda1 > 0.0 && rho1 > 0.0 && a > 0.0) {
        return Err("needs λ₁, ρ₁, a > 0".into());
    }
    if !(t > -1.0 && t < 0.0) {
        return Err(format!("needs −1 < t < 0, got t={t}"));
    }
    if !(z.abs() < 1.0 && t.abs() < outer_radius(z.abs(), rho1)) {
        return Err(format!("needs |z| < 1 and |t| < 1 − |z|^{{1/ρ₁}}, got z={z}, t={t}"));
    }
    if !s.is_finite() {
        return Err("needs finite s".into());
    }
    Ok(())
}

fn eval_phi(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let (lambda1, rho1, s, a, z, t) = (p.get("lambda1"), p.get("rho1"), p.get("s"), p.get("a"), p.get("z"), p.get("t"));
    let zc = Complex64::new(z, 0.0);
    let lhs = converged(lerch_gf_sum((lambda1, rho1), &[(1.0, 1.0)], &[], s, a, zc, t, config, None)?, "outer k-sum")?;
    let rhs = gamma(lambda1)? * (1.0 - t).powf(-lambda1) * lerch_phi(zc * (1.0 - t).powf(-rho1), s, a)?;
    Ok(Evaluation::complex(lhs.value, rhs, format!("outer terms {}", lhs.terms_used)))
}

/// Σ_k Φ^{(ρ₁, 1; ρ₁)}_{λ₁+k, 1; λ₁}(z, s, a) Γ(λ₁+k) t^k/k! =
/// Γ(λ₁)(1 − t)^{−λ₁} Φ(z(1 − t)^{−ρ₁}, s, a).
pub fn lerch_gf_phi_case() -> IdentityCase {
    let mut grid = vec![Point::new(&[
        ("lambda1", 1.0),
        ("rho1", 1.0),
        ("s", 2.0),
        ("a", 1.0),
        ("z", 0.4),
        ("t", -0.5),
    ])];
    for &(lambda1, rho1) in &[(1.0, 1.0), (0.5, 2.0), (2.5, 0.5)] {
        for &(s, a) in &[(2.0, 0.3), (0.5, 1.7)] {
            for &(z, t) in &[(0.5, -0.2), (-0.6, -0.1), (0.2, -0.4)] {
                grid.push(Point::new(&[
                    ("lambda1", lambda1),
                    ("rho1", rho1),
                    ("s", s),
                    ("a", a),
                    ("z", z),
                    ("t", t),
                ]));
            }
        }
    }
    IdentityCase {
        id: "lerch-gf-phi",
        anchor: "generating function of extended Hurwitz-Lerch functions reducing to Φ(z(1 − t)^{−ρ₁}, s, a)",
        description: "p = 2, q = 1 with λ₂ = ρ₂ = 1, for −1 < t < 0",
        kind: Kind::Equality,
        tolerance: Tolerance::new(1e-14, 1e-8),
        grid,
        hypotheses: phi_hypotheses,
        evaluate: eval_phi,
    }
}

/// Largest outer index kept on |z| = 1, where the k-th function needs
/// s − k > 1.
pub fn unit_circle_outer_terms(s: f64) -> usize {
    (s - 1.0).ceil().max(0.0) as usize
}

fn unit_circle_hypotheses(p: &Point) -> std::result::Result<(), String> {
    let (lambda1, rho1, radius, s, a, t) =
        (p.get("lambda1"), p.get("rho1"), p.get("radius"), p.get("s"), p.get("a"), p.get("t"));
    if !(lambda1 > 0.0 && rho1 > 0.0 && a > 0.0 && a <= 1.0) {
        return Err("needs λ₁, ρ₁ > 0 and 0 < a ≤ 1".into());
    }
    if !(t > -1.0 && t < 0.0) {
        return Err(format!("needs −1 < t < 0, got t={t}"));
    }
    if !(radius > 0.0 && radius <= 1.0) {
        return Err(format!("needs 0 < |z| ≤ 1, got {radius}"));
    }
    if radius < 1.0 && !(t.abs() < outer_radius(radius, rho1)) {
        return Err(format!("needs |t| < 1 − |z|^{{1/ρ₁}}, got |z|={radius}, t={t}"));
    }
    if radius == 1.0 && !(s > 2.0) {
        return Err(format!("on |z| = 1 the k-th function needs s > k + 1, so s > 2 for any t ≠ 0, got s={s}"));
    }
    Ok(())
}

fn unit_circle_z(p: &Point) -> Complex64 {
    unit_root(p.get("xi")) * p.get("radius")
}

fn eval_unit_circle(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let (lambda1, rho1, radius, s, a, t) =
        (p.get("lambda1"), p.get("rho1"), p.get("radius"), p.get("s"), p.get("a"), p.get("t"));
    let z = unit_circle_z(p);
    let cap = (radius == 1.0).then(|| unit_circle_outer_terms(s));
    let lhs = converged(lerch_gf_sum((lambda1, rho1), &[(1.0, 1.0)], &[], s, a, z, t, config, cap)?, "outer k-sum")?;
    let rhs = gamma(lambda1)? * (1.0 - t).powf(-lambda1) * lerch_phi(z * (1.0 - t).powf(-rho1), s, a)?;
    Ok(Evaluation::complex(
        lhs.value,
        rhs,
        format!("outer terms {}, last outer term {:.3e}", lhs.terms_used, lhs.tail_estimate),
    ))
}

fn eval_unit_circle_printed(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let (lambda1, rho1, s, a, t) = (p.get("lambda1"), p.get("rho1"), p.get("s"), p.get("a"), p.get("t"));
    let z = unit_circle_z(p);
    let cap = Some(unit_circle_outer_terms(s));
    let lhs = converged(lerch_gf_sum((lambda1, rho1), &[(1.0, 1.0)], &[], s, a, z, t, config, cap)?, "outer k-sum")?;
    let rhs = gamma(lambda1)? * (1.0 - t).powf(-lambda1) * lipschitz_lerch(p.get("xi"), a, s)?;
    Ok(Evaluation::complex(lhs.value, rhs, format!("outer terms {}", lhs.terms_used)))
}

fn unit_circle_grid(radius: f64) -> Vec<Point> {
    let mut grid = Vec::new();
    for &(lambda1, rho1) in &[(1.0, 1.0), (0.7, 1.0)] {
        for &xi in &[0.25, 0.4] {
            for &t in &[-0.1, -0.2] {
                grid.push(Point::new(&[
                    ("lambda1", lambda1),
                    ("rho1", rho1),
                    ("xi", xi),
                    ("radius", radius),
                    ("s", if radius == 1.0 { 16.0 } else { 2.0 }),
                    ("a", 0.8),
                    ("t", t),
                ]));
            }
        }
    }
    grid
}

/// The Φ-reduced generating function at z = r e^{2iπξ}: on the unit circle
/// the right side is Φ(e^{2iπξ}(1 − t)^{−ρ₁}, s, a), and the k-th function
/// exists only for k < s − 1, so the outer sum stops there.
pub fn lerch_gf_unit_circle_case() -> IdentityCase {
    let mut grid = unit_circle_grid(1.0);
    grid.extend(unit_circle_grid(0.7));
    IdentityCase {
        id: "lerch-gf-unit-circle",
        anchor: "generating function of extended Hurwitz-Lerch functions at z = e^{2iπξ}, Lipschitz-Lerch form",
        description: "Complex comparison for z = e^{2iπξ} with s = 16 and outer terms k ≤ 14, and for interior \
                      points 0.7e^{2iπξ}; the right side keeps the factor (1 − t)^{−ρ₁} inside Φ",
        kind: Kind::Equality,
        tolerance: Tolerance::new(1e-14, 1e-8),
        grid,
        hypotheses: unit_circle_hypotheses,
        evaluate: eval_unit_circle,
    }
}

/// The same sum against Γ(λ₁)(1 − t)^{−λ₁} L(ξ, a, s) with z left at e^{2iπξ}.
pub fn lerch_gf_unit_circle_printed_case() -> IdentityCase {
    let grid = vec![
        Point::new(&[
            ("lambda1", 1.0),
            ("rho1", 1.0),
            ("xi", 0.25),
            ("radius", 1.0),
            ("s", 16.0),
            ("a", 1.0),
            ("t", -0.2),
        ]),
        Point::new(&[
            ("lambda1", 0.7),
            ("rho1", 1.0),
            ("xi", 0.4),
            ("radius", 1.0),
            ("s", 16.0),
            ("a", 1.0),
            ("t", -0.1),
        ]),
    ];
    IdentityCase {
        id: "lerch-gf-unit-circle-printed",
        anchor: "generating function of extended Hurwitz-Lerch functions at z = e^{2iπξ} against L(ξ, a, s) unscaled",
        description: "Audit: dropping (1 − t)^{−ρ₁} from the argument of Φ changes every term with n ≥ 1",
        kind: Kind::Audit,
        tolerance: Tolerance::new(1e-14, 1e-8),
        grid,
        hypotheses: unit_circle_hypotheses,
        evaluate: eval_unit_circle_printed,
    }
}

/// Largest cancellation factor ((1 + |t|)/(1 − |t|))^{n+1} accepted in a
/// term-by-term inner sum.
const RAW_CANCELLATION: f64 = 1e6;

/// Term-by-term rows never exceed this, which bounds the work as t → 0.
const MAX_RAW_ROWS: usize = 400;

/// Σ_n Σ_k C(n+k, k)(1 − t)^{n+1} t^k z^n/(n + a)^s.
///
/// Rows with cancellation factor up to 1e6, at most 400 of them, run their
/// alternating k-sums term by term; later rows, whose k-sums are (1 − t)^{−(n+1)}, are summed
/// as z^{N}Φ(z, s, a + N).
pub fn lerch_double_series(z: Complex64, s: f64, a: f64, t: f64, policy: &TruncationPolicy) -> Result<(Complex64, usize)> {
    let q = (1.0 + t.abs()) / (1.0 - t.abs());
    let raw_rows = ((RAW_CANCELLATION.ln() / q.ln()).floor() as usize).min(MAX_RAW_ROWS);
    let mut acc = NeumaierComplex::new();
    let mut zn = Complex64::new(1.0, 0.0);
    for n in 0..raw_rows {
        let nf = n as f64;
        let mut c = 1.0;
        let row = converged(
            sum_series(policy, |k| {
                if k > 0 {
                    c *= (nf + k as f64) / k as f64 * t;
                }
                Ok(c)
            })?,
            "inner binomial series",
        )?;
        acc.add(zn * (row.value * (1.0 - t).powi(n as i32 + 1) * (nf + a).powf(-s)));
        zn *= z;
    }
    acc.add(zn * lerch_phi(z, s, a + raw_rows as f64)?);
    Ok((acc.value(), raw_rows))
}

fn double_hypotheses(p: &Point) -> std::result::Result<(), String> {
    let (radius, s, a, t) = (p.get("radius"), p.get("s"), p.get("a"), p.get("t"));
    if !(t > -1.0 && t < 0.0) {
        return Err(format!("needs −1 < t < 0, got t={t}"));
    }
    if !(a > 0.0) {
        return Err(format!("needs a > 0, got {a}"));
    }
    if radius > 1.0 || (radius == 1.0 && !(s > 1.0)) {
        return Err(format!("needs |z| < 1, or |z| = 1 with s > 1, got |z|={radius}, s={s}"));
    }
    Ok(())
}

fn eval_double(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let z = unit_root(p.get("xi")) * p.get("radius");
    let (s, a, t) = (p.get("s"), p.get("a"), p.get("t"));
    let (lhs, rows) = lerch_double_series(z, s, a, t, &config.policy)?;
    Ok(Evaluation::complex(lhs, lerch_phi(z, s, a)?, format!("term-by-term rows {rows}")))
}

fn eval_double_collapsed(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let z = unit_root(p.get("xi")) * p.get("radius");
    let (s, a, t) = (p.get("s"), p.get("a"), p.get("t"));
    // each row: (1 − t)^{n+1} · (1 − t)^{−(n+1)} z^n/(n + a)^s
    let lhs = sum_series(&config.policy.with_max_terms(200_000), |n| {
        let e = n as i32 + 1;
        Ok(z.powu(n as u32) * ((1.0 - t).powi(e) * (1.0 - t).powi(-e) * (n as f64 + a).powf(-s)))
    })?;
    let lhs = converged(lhs, "collapsed double series")?;
    let rhs = lerch_phi_series(z, s, a, &config.policy)?.value;
    Ok(Evaluation::complex(lhs.value, rhs, format!("rows {}", lhs.terms_used)))
}

fn eval_double_unit_circle(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let (xi, s, a, t) = (p.get("xi"), p.get("s"), p.get("a"), p.get("t"));
    let (lhs, rows) = lerch_double_series(unit_root(xi), s, a, t, &config.policy)?;
    Ok(Evaluation::complex(lhs, lipschitz_lerch(xi, a, s)?, format!("term-by-term rows {rows}")))
}

fn double_grid(radii: &[f64]) -> Vec<Point> {
    let mut grid = Vec::new();
    for &radius in radii {
        for &xi in &[0.0, 0.3] {
            for &(s, a) in &[(2.0, 0.5), (1.5, 1.0)] {
                for &t in &[-0.25, -0.6] {
                    grid.push(Point::new(&[("radius", radius), ("xi", xi), ("s", s), ("a", a), ("t", t)]));
                }
            }
        }
    }
    grid
}

/// Σ_n Σ_k C(n+k, k)(1 − t)^{n+1} z^n t^k/(n + a)^s = Φ(z, s, a).
pub fn lerch_double_series_case() -> IdentityCase {
    IdentityCase {
        id: "lerch-double-series",
        anchor: "double series Σ_n Σ_k (n+k)!/n! (1 − t)^{n+1} z^n t^k/(n + a)^s for Φ(z, s, a)",
        description: "Inner weights C(n+k, k), i.e. (n+k)!/(n! k!); the weight without 1/k! makes the k-sum diverge",
        kind: Kind::Equality,
        tolerance: Tolerance::new(1e-14, 1e-8),
        grid: double_grid(&[0.5, 0.9]),
        hypotheses: double_hypotheses,
        evaluate: eval_double,
    }
}

/// The same double series with each inner sum replaced by (1 − t)^{−(n+1)}.
pub fn lerch_double_series_collapsed_case() -> IdentityCase {
    IdentityCase {
        id: "lerch-double-series-collapsed",
        anchor: "double series for Φ(z, s, a) after the binomial collapse Σ_k C(n+k, k)t^k = (1 − t)^{−(n+1)}",
        description: "Residual of the collapsed series against Φ(z, s, a)",
        kind: Kind::Equality,
        tolerance: Tolerance::new(1e-12, 1e-12),
        grid: double_grid(&[0.5]),
        hypotheses: double_hypotheses,
        evaluate: eval_double_collapsed,
    }
}

/// The double series at z = e^{2iπξ} against L(ξ, a, s).
pub fn lerch_double_series_unit_circle_case() -> IdentityCase {
    let mut grid = Vec::new();
    for &xi in &[0.25, 0.4, 0.7] {
        for &(s, a) in &[(2.0, 0.8), (3.5, 1.0)] {
            for &t in &[-0.3, -0.7] {
                grid.push(Point::new(&[("radius", 1.0), ("xi", xi), ("s", s), ("a", a), ("t", t)]));
            }
        }
    }
    IdentityCase {
        id: "lerch-double-series-unit-circle",
        anchor: "double series at z = e^{2iπξ} for the Lipschitz-Lerch function L(ξ, a, s)",
        description: "Inner weights C(n+k, k); s > 1 and 0 < a ≤ 1",
        kind: Kind::Equality,
        tolerance: Tolerance::new(1e-14, 1e-8),
        grid,
        hypotheses: double_hypotheses,
        evaluate: eval_double_unit_circle,
    }
}

fn polylog_hypotheses(p: &Point) -> std::result::Result<(), String> {
    let (z, t) = (p.get("z"), p.get("t"));
    if !(t > -1.0 && t < 0.0) {
        return Err(format!("needs −1 < t < 0, got t={t}"));
    }
    if !(z > 0.0 && z < 1.0) {
        return Err(format!("needs 0 < z < 1, got z={z}"));
    }
    Ok(())
}

/// Σ_n Σ_k C(n+k, k)(1 − t)^{n+1} z^n t^k/(n + 1)^s.
fn polylog_row(p: &Point, config: &SuiteConfig, s: f64) -> Result<(f64, usize)> {
    let z = Complex64::new(p.get("z"), 0.0);
    let (v, rows) = lerch_double_series(z, s, 1.0, p.get("t"), &config.policy)?;
    Ok((v.re, rows))
}

fn eval_log_row(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let z = p.get("z");
    let (lhs, rows) = polylog_row(p, config, 1.0)?;
    Ok(Evaluation::real(lhs, -(-z).ln_1p() / z, format!("term-by-term rows {rows}")))
}

fn eval_2log2(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let (lhs, rows) = polylog_row(p, config, 1.0)?;
    Ok(Evaluation::real(lhs, 2.0 * 2f64.ln(), format!("term-by-term rows {rows}")))
}

fn eval_pi2_log2(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let (lhs, rows) = polylog_row(p, config, 2.0)?;
    let pi = std::f64::consts::PI;
    Ok(Evaluation::real(lhs, pi * pi / 6.0 - 2f64.ln().powi(2), format!("term-by-term rows {rows}")))
}

fn eval_li3(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let (lhs, rows) = polylog_row(p, config, 3.0)?;
    let oracle = 2.0 * polylog(3.0, Complex64::new(0.5, 0.0))?.re;
    Ok(Evaluation::real(lhs, oracle, format!("term-by-term rows {rows}; right side 2·Li₃(1/2)")))
}

/// log³2/3 − (π²/6)log 2 − (π²/6)log 2 + (7/8)ζ(3), the printed Li₃ row.
pub fn printed_li3_row() -> Result<f64> {
    let (pi, l2) = (std::f64::consts::PI, 2f64.ln());
    Ok(l2.powi(3) / 3.0 - 2.0 * pi * pi / 6.0 * l2 + 0.875 * riemann_zeta(3.0)?)
}

fn eval_li3_printed(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let (lhs, rows) = polylog_row(p, config, 3.0)?;
    let printed = printed_li3_row()?;
    Ok(Evaluation::real(
        lhs,
        printed,
        format!("term-by-term rows {rows}; 2·Li₃(1/2) = 7ζ(3)/4 − (π²/6)log 2 + log³2/3, printed {printed:.10}"),
    ))
}

fn half_grid() -> Vec<Point> {
    [-0.25, -0.5, -0.75].iter().map(|&t| Point::new(&[("z", 0.5), ("t", t)])).collect()
}

fn polylog_case(id: &'static str, anchor: &'static str, description: &'static str, evaluate: crate::case::Evaluator) -> IdentityCase {
    IdentityCase {
        id,
        anchor,
        description,
        kind: Kind::DoubleSeriesClosedForm,
        tolerance: Tolerance::new(1e-9, 1e-12),
        grid: half_grid(),
        hypotheses: polylog_hypotheses,
        evaluate,
    }
}

/// Polylogarithm rows of the double series at a = 1, where Φ(z, s, 1) = Li_s(z)/z.
pub fn polylog_cases() -> Vec<IdentityCase> {
    let mut log_row = polylog_case(
        "polylog-log-row",
        "double series with (n+1)! in the denominator equal to −log(1 − z)/z",
        "s = 1 row for 0 < z < 1",
        eval_log_row,
    );
    log_row.grid = [(0.2, -0.25), (0.5, -0.5), (0.9, -0.3), (0.7, -0.8)]
        .iter()
        .map(|&(z, t)| Point::new(&[("z", z), ("t", t)]))
        .collect();
    let mut li3_printed = polylog_case(
        "polylog-li3-printed",
        "double series with (n+1)!(n+1)² 2^n in the denominator against the printed Li₃ closed form",
        "Audit: the printed row repeats −(π²/6)log 2 and carries 7/8 on ζ(3); it differs from 2·Li₃(1/2)",
        eval_li3_printed,
    );
    li3_printed.kind = Kind::Audit;
    vec![
        log_row,
        polylog_case(
            "polylog-2log2",
            "double series with (n+1)! 2^n in the denominator equal to 2 log 2",
            "s = 1, z = 1/2",
            eval_2log2,
        ),
        polylog_case(
            "polylog-pi2-log2",
            "double series with (n+1)!(n+1) 2^n in the denominator equal to π²/6 − log²2",
            "s = 2, z = 1/2",
            eval_pi2_log2,
        ),
        polylog_case(
            "polylog-li3",
            "double series with (n+1)!(n+1)² 2^n in the denominator equal to 2·Li₃(1/2)",
            "s = 3, z = 1/2, against the numerical polylogarithm",
            eval_li3,
        ),
        li3_printed,
    ]
}

/// Runs the Φ-reduced generating function at one point.
#[allow(clippy::too_many_arguments)]
pub fn check_lerch_gf(lambda1: f64, rho1: f64, s: f64, a: f64, z: f64, t: f64, config: &SuiteConfig) -> IdentityReport {
    let p = Point::new(&[("lambda1", lambda1), ("rho1", rho1), ("s", s), ("a", a), ("z", z), ("t", t)]);
    lerch_gf_phi_case().run(&p, config)
}

/// Runs the Φ double series at z = r e^{2iπξ}.
pub fn check_lerch_double_series(radius: f64, xi: f64, s: f64, a: f64, t: f64, config: &SuiteConfig) -> IdentityReport {
    let p = Point::new(&[("radius", radius), ("xi", xi), ("s", s), ("a", a), ("t", t)]);
    lerch_double_series_case().run(&p, config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn li3_oracle_constant() {
        let v = 2.0 * polylog(3.0, Complex64::new(0.5, 0.0)).unwrap().re;
        assert!((v - 1.0744263872160804).abs() < 1e-14);
        assert!((printed_li3_row().unwrap() + 1.1175548136914).abs() < 1e-12);
    }

    #[test]
    fn outer_terms_on_the_circle() {
        assert_eq!(unit_circle_outer_terms(16.0), 15);
        assert_eq!(unit_circle_outer_terms(3.5), 3);
    }
}
