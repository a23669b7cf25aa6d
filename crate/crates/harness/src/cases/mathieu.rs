//! Mathieu-type generating functions and the double series they imply.

use foxwright::error::Result;
use foxwright::gamma::{gamma, ln_gamma_signed};
use foxwright::jets::{euler_maclaurin_correction, inv_pow_jet, JET_ORDER};
use foxwright::mathieu::{mathieu_integral_form, mathieu_series, MathieuSpec};
use foxwright::series::{sum_series, SeriesResult};
use foxwright::sum::Neumaier;
use foxwright::zeta::{hurwitz_zeta, riemann_zeta};

use super::fox_wright::{converged, outer_policy};
use crate::case::{Evaluation, IdentityCase, IdentityReport, Kind, Point, SuiteConfig, Tolerance};

/// Σ_k Γ(μ+k) S_{μ+k}^{(α, kα)}(r; {n^{1/α}}) t^k/k!.
pub fn mathieu_gf_sum(mu: f64, alpha: f64, r: f64, t: f64, config: &SuiteConfig) -> Result<SeriesResult> {
    let ln_t = t.abs().ln();
    sum_series(&outer_policy(config), |k| {
        let kf = k as f64;
        let spec = MathieuSpec::new(mu + kf, alpha, kf * alpha, r)?;
        let s = mathieu_series(&spec, &config.policy)?;
        let w = if t == 0.0 {
            if k == 0 { gamma(mu)? } else { 0.0 }
        } else {
            t.signum().powi(k as i32) * (ln_gamma_signed(mu + kf).0 - ln_gamma_signed(kf + 1.0).0 + kf * ln_t).exp()
        };
        Ok(w * s.value)
    })
}

fn gf_hypotheses(p: &Point) -> std::result::Result<(), String> {
    let (mu, alpha, r, t) = (p.get("mu"), p.get("alpha"), p.get("r"), p.get("t"));
    if mu > 1.0 && alpha > 0.0 && r > 0.0 && t.abs() < 1.0 {
        Ok(())
    } else {
        Err(format!("needs μ > 1, α > 0, r > 0, |t| < 1, got μ={mu}, α={alpha}, r={r}, t={t}"))
    }
}

fn eval_gf(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let (mu, alpha, r, t) = (p.get("mu"), p.get("alpha"), p.get("r"), p.get("t"));
    let lhs = converged(mathieu_gf_sum(mu, alpha, r, t, config)?, "outer k-sum")?;
    let rhs = 2.0 * gamma(mu)? * (1.0 - t).powf(-mu) * hurwitz_zeta(mu, 1.0 + r * r / (1.0 - t))?;
    Ok(Evaluation::real(lhs.value, rhs, format!("outer terms {}", lhs.terms_used)))
}

/// Σ_k Γ(μ+k) S_{μ+k}^{(α, kα)}(r) t^k/k! = 2Γ(μ)(1 − t)^{−μ} ζ(μ, 1 + r²/(1 − t)).
pub fn mathieu_gf_case() -> IdentityCase {
    let mut grid = Vec::new();
    for &mu in &[1.5, 2.0, 3.0] {
        for &alpha in &[0.5, 1.0, 2.0] {
            for &r in &[0.5, 1.0, 2.0] {
                for &t in &[0.25, 0.5, 0.75] {
                    grid.push(Point::new(&[("mu", mu), ("alpha", alpha), ("r", r), ("t", t)]));
                }
            }
        }
    }
    IdentityCase {
        id: "mathieu-gf",
        anchor: "generating function of Mathieu-type series S_{μ+k}^{(α, kα)} as a Hurwitz zeta value",
        description: "Truncated k-sum with one Mathieu-type series per term against 2Γ(μ)(1 − t)^{−μ} ζ(μ, 1 + r²/(1 − t)); \
                      the stated x > 0 is the integration variable",
        kind: Kind::Equality,
        tolerance: Tolerance::new(1e-14, 1e-8),
        grid,
        hypotheses: gf_hypotheses,
        evaluate: eval_gf,
    }
}

fn zeta2_hypotheses(p: &Point) -> std::result::Result<(), String> {
    let (mu, alpha, t) = (p.get("mu"), p.get("alpha"), p.get("t"));
    if mu > 1.0 && alpha > 0.0 && t.abs() < 1.0 {
        Ok(())
    } else {
        Err(format!("needs μ > 1, α > 0, |t| < 1, got μ={mu}, α={alpha}, t={t}"))
    }
}

fn eval_zeta2(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let (mu, alpha, t) = (p.get("mu"), p.get("alpha"), p.get("t"));
    let lhs = converged(mathieu_gf_sum(mu, alpha, (1.0 - t).sqrt(), t, config)?, "outer k-sum")?;
    let rhs = 2.0 * gamma(mu)? * (1.0 - t).powf(-mu) * (riemann_zeta(mu)? - 1.0);
    Ok(Evaluation::real(lhs.value, rhs, format!("outer terms {}", lhs.terms_used)))
}

/// The Mathieu generating function at r = √(1 − t), where the Hurwitz
/// argument is 2 and ζ(μ, 2) = ζ(μ) − 1.
pub fn mathieu_gf_zeta2_case() -> IdentityCase {
    let mut grid = vec![Point::new(&[("mu", 2.0), ("alpha", 1.0), ("t", 0.5)])];
    for &mu in &[1.5, 3.0] {
        for &alpha in &[0.5, 2.0] {
            for &t in &[-0.75, -0.3, 0.3, 0.75] {
                grid.push(Point::new(&[("mu", mu), ("alpha", alpha), ("t", t)]));
            }
        }
    }
    IdentityCase {
        id: "mathieu-gf-zeta2",
        anchor: "Mathieu generating function at r = √(1 − t), reducing to ζ(μ, 2) for all |t| < 1",
        description: "Truncated k-sum at r = √(1 − t) against 2Γ(μ)(1 − t)^{−μ}(ζ(μ) − 1)",
        kind: Kind::Equality,
        tolerance: Tolerance::new(1e-14, 1e-8),
        grid,
        hypotheses: zeta2_hypotheses,
        evaluate: eval_zeta2,
    }
}

fn series_integral_hypotheses(p: &Point) -> std::result::Result<(), String> {
    let (mu, alpha, beta, r) = (p.get("mu"), p.get("alpha"), p.get("beta"), p.get("r"));
    if !(alpha > 0.0 && beta >= 0.0 && r > 0.0) {
        return Err(format!("needs α > 0, β ≥ 0, r > 0, got α={alpha}, β={beta}, r={r}"));
    }
    if !(mu - beta / alpha >= 1.25) {
        return Err(format!("grid keeps μ − β/α ≥ 1.25, got {}", mu - beta / alpha));
    }
    Ok(())
}

fn eval_series_integral(p: &Point, config: &SuiteConfig) -> Result<Evaluation> {
    let spec = MathieuSpec::new(p.get("mu"), p.get("alpha"), p.get("beta"), p.get("r"))?;
    let series = mathieu_series(&spec, &config.policy)?;
    let integral = mathieu_integral_form(&spec, &config.policy)?;
    Ok(Evaluation::real(
        series.value,
        integral.value,
        format!("direct terms {}, quadrature levels {}", series.terms_used, integral.levels),
    ))
}

/// Direct Mathieu-type summation against its ₁F₁ integral representation.
pub fn mathieu_series_integral_case() -> IdentityCase {
    let grid = [
        (2.0, 1.0, 0.0, 1.0),
        (2.5, 2.0, 1.0, 1.3),
        (3.0, 1.0, 1.0, 2.0),
        (2.0, 2.0, 0.0, 1.0),
        (1.8, 0.5, 0.2, 0.5),
        (4.0, 1.0, 2.0, 0.7),
        (3.5, 1.5, 0.5, 3.0),
    ]
    .iter()
    .map(|&(mu, alpha, beta, r)| Point::new(&[("mu", mu), ("alpha", alpha), ("beta", beta), ("r", r)]))
    .collect();
    IdentityCase {
        id: "mathieu-series-integral",
        anchor: "integral representation of the Mathieu-type series over the Bose kernel 1/(e^x − 1)",
        description: "S_μ^{(α,β)}(r; {k^{1/α}}) by summation with an integral-comparison tail against \
                      (2/Γ(c))∫ x^{c−1}/(e^x − 1) ₁F₁(μ; c; −r²x) dx, c = μ − β/α",
        kind: Kind::Equality,
        tolerance: Tolerance::new(1e-14, 1e-7),
        grid,
        hypotheses: series_integral_hypotheses,
        evaluate: eval_series_integral,
    }
}

/// Outer index up to which the inner sums are taken term by term.
const RAW_OUTER: usize = 2000;

/// Σ_{n≥1} Σ_k w_k x_n^k/(1 + mn)^μ with x_n = (m − 1)n/(1 + mn).
///
/// Inner sums run term by term for n ≤ 2000; beyond, the binomial series
/// Σ_k C(k+μ−1, k) x^k = (1 − x)^{−μ} turns each row into (1 + n)^{−μ},
/// whose remainder is an integral plus Euler-Maclaurin corrections.
/// `scale` multiplies every row: 1 for the binomial weights, Γ(μ) for
/// Γ(μ+k)/k!.
pub fn double_series(m: f64, mu: f64, scale: f64) -> (f64, usize) {
    let mut outer = Neumaier::new();
    let mut inner_terms = 0;
    for n in 1..=RAW_OUTER {
        let nf = n as f64;
        let x = (m - 1.0) * nf / (1.0 + m * nf);
        let mut row = Neumaier::new();
        let mut term = scale * (1.0 + m * nf).powf(-mu);
        let mut k = 0usize;
        loop {
            row.add(term);
            k += 1;
            term *= (k as f64 + mu - 1.0) / k as f64 * x;
            if term <= f64::EPSILON * 1e-3 * row.value() {
                break;
            }
        }
        inner_terms += k;
        outer.add(row.value());
    }
    let start = (RAW_OUTER + 2) as f64;
    let jet = inv_pow_jet(start, mu, JET_ORDER);
    let tail = start.powf(1.0 - mu) / (mu - 1.0) + euler_maclaurin_correction(&jet).value;
    outer.add(scale * tail);
    (outer.value(), inner_terms)
}

fn double_series_hypotheses(p: &Point) -> std::result::Result<(), String> {
    let m = p.get("m");
    if m >= 2.0 && m.fract() == 0.0 {
        Ok(())
    } else {
        Err(format!("needs an integer m ≥ 2, got {m}"))
    }
}

fn eval_pi2(p: &Point, _: &SuiteConfig) -> Result<Evaluation> {
    let (lhs, inner) = double_series(p.get("m"), 2.0, 1.0);
    let pi = std::f64::consts::PI;
    Ok(Evaluation::real(lhs, (pi * pi - 6.0) / 6.0, format!("inner terms {inner}")))
}

fn eval_zeta3(p: &Point, _: &SuiteConfig) -> Result<Evaluation> {
    let (lhs, inner) = double_series(p.get("m"), 3.0, 1.0);
    Ok(Evaluation::real(lhs, riemann_zeta(3.0)? - 1.0, format!("inner terms {inner}, binomial weights C(k+2, 2)")))
}

fn eval_zeta4(p: &Point, _: &SuiteConfig) -> Result<Evaluation> {
    let (lhs, inner) = double_series(p.get("m"), 4.0, 1.0);
    let pi = std::f64::consts::PI;
    Ok(Evaluation::real(lhs, (pi.powi(4) - 90.0) / 90.0, format!("inner terms {inner}, binomial weights C(k+3, 3)")))
}

/// 0.202056903, the value printed for ζ(3) − 1.
pub const PRINTED_ZETA3_MINUS_ONE: f64 = 0.202056903;

fn eval_zeta3_printed(p: &Point, _: &SuiteConfig) -> Result<Evaluation> {
    let (lhs, inner) = double_series(p.get("m"), 3.0, 2.0);
    Ok(Evaluation::real(lhs, PRINTED_ZETA3_MINUS_ONE, format!("inner terms {inner}, weights (k+1)(k+2)")))
}

fn eval_zeta4_printed(p: &Point, _: &SuiteConfig) -> Result<Evaluation> {
    let (lhs, inner) = double_series(p.get("m"), 4.0, 6.0);
    let pi = std::f64::consts::PI;
    Ok(Evaluation::real(lhs, (pi.powi(4) - 90.0) / 90.0, format!("inner terms {inner}, weights (k+1)(k+2)(k+3)")))
}

fn single_m(m: f64) -> Vec<Point> {
    vec![Point::new(&[("m", m)])]
}

fn all_m() -> Vec<Point> {
    [2.0, 3.0, 4.0].iter().map(|&m| Point::new(&[("m", m)])).collect()
}

const DOUBLE_TOL: Tolerance = Tolerance::new(1e-9, 1e-12);

fn pi2_case(id: &'static str, m: f64) -> IdentityCase {
    IdentityCase {
        id,
        anchor: "double series Σ_k Σ_n (k+1)/(1+mn)² ((m−1)n/(1+mn))^k = (π² − 6)/6",
        description: "Mathieu generating function at μ = 2, t = 1 − 1/m, r = m^{−1/2}; inner k-sums term by term",
        kind: Kind::DoubleSeriesClosedForm,
        tolerance: DOUBLE_TOL,
        grid: single_m(m),
        hypotheses: double_series_hypotheses,
        evaluate: eval_pi2,
    }
}

/// The (π² − 6)/6 double series at m = 2, 3 and 4.
pub fn double_series_cases() -> Vec<IdentityCase> {
    vec![
        pi2_case("double-series-pi2-m2", 2.0),
        pi2_case("double-series-pi2-m3", 3.0),
        pi2_case("double-series-pi2-m4", 4.0),
        IdentityCase {
            id: "double-series-zeta3",
            anchor: "double series at μ = 3 with binomial weights C(k+2, 2) equal to ζ(3) − 1",
            description: "Σ_k Σ_n C(k+2, 2)/(1+mn)³ ((m−1)n/(1+mn))^k = ζ(3) − 1",
            kind: Kind::DoubleSeriesClosedForm,
            tolerance: DOUBLE_TOL,
            grid: all_m(),
            hypotheses: double_series_hypotheses,
            evaluate: eval_zeta3,
        },
        IdentityCase {
            id: "double-series-zeta4",
            anchor: "double series at μ = 4 with binomial weights C(k+3, 3) equal to (π⁴ − 90)/90",
            description: "Σ_k Σ_n C(k+3, 3)/(1+mn)⁴ ((m−1)n/(1+mn))^k = ζ(4) − 1",
            kind: Kind::DoubleSeriesClosedForm,
            tolerance: DOUBLE_TOL,
            grid: all_m(),
            hypotheses: double_series_hypotheses,
            evaluate: eval_zeta4,
        },
        IdentityCase {
            id: "double-series-zeta3-printed",
            anchor: "double series at μ = 3 with weights (k+1)(k+2) against the printed ζ(3) − 1 ≈ 0.202056903",
            description: "Audit: the weights Γ(3+k)/k! give 2(ζ(3) − 1), a factor Γ(μ) away from the printed value",
            kind: Kind::Audit,
            tolerance: DOUBLE_TOL,
            grid: all_m(),
            hypotheses: double_series_hypotheses,
            evaluate: eval_zeta3_printed,
        },
        IdentityCase {
            id: "double-series-zeta4-printed",
            anchor: "double series at μ = 4 with weights (k+1)(k+2)(k+3) against the printed (π⁴ − 90)/90",
            description: "Audit: the weights Γ(4+k)/k! give 6(ζ(4) − 1), a factor Γ(μ) away from the printed value",
            kind: Kind::Audit,
            tolerance: DOUBLE_TOL,
            grid: all_m(),
            hypotheses: double_series_hypotheses,
            evaluate: eval_zeta4_printed,
        },
    ]
}

/// Runs the Mathieu generating function at one point.
pub fn check_mathieu_gf(mu: f64, alpha: f64, r: f64, t: f64, config: &SuiteConfig) -> IdentityReport {
    mathieu_gf_case().run(&Point::new(&[("mu", mu), ("alpha", alpha), ("r", r), ("t", t)]), config)
}

/// Runs the (π² − 6)/6 double series for an integer m ≥ 2.
pub fn check_double_series_pi(m: u32, config: &SuiteConfig) -> IdentityReport {
    pi2_case("double-series-pi2", m as f64).run(&Point::new(&[("m", m as f64)]), config)
}
