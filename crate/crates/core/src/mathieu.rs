//! Generalized Mathieu-type series S_μ^{(α,β)}(r; a) = Σ_{k≥1} 2a_k^β/(r² + a_k^α)^μ.
//!
//! For the default sequence a_k = k^{1/α} the terms are g(k) = 2k^p/(r² + k)^μ
//! with p = β/α. The sum runs directly below N and the remainder is
//! ∫_N^∞ g (a binomial series in r²/N) plus the Euler-Maclaurin corrections.

use std::sync::Arc;

use crate::error::{domain, Error, Result};
use crate::foxwright::hyp1f1;
use crate::gamma::log_gamma;
use crate::jets::{euler_maclaurin_correction, exp_jet, ln_jet, JET_ORDER};
use crate::quadrature::{integrate_semi_infinite_detailed, QuadResult, QuadratureSpec};
use crate::series::{sum_series, SeriesResult, TruncationPolicy};
use crate::sum::Neumaier;

/// Smallest split point between direct summation and the remainder.
const MIN_SPLIT: f64 = 64.0;

/// Term generator `k ↦ a_k` for k ≥ 1.
pub type SequenceFn = Arc<dyn Fn(usize) -> f64 + Send + Sync>;
/// Bound on Σ_{k>n} of the series terms, given n.
pub type TailBoundFn = Arc<dyn Fn(usize) -> f64 + Send + Sync>;

/// The positive divergent sequence a_k.
#[derive(Clone)]
pub enum Sequence {
    /// a_k = k^{1/α}.
    Power,
    Custom { a: SequenceFn, tail_bound: Option<TailBoundFn> },
}

impl std::fmt::Debug for Sequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sequence::Power => f.write_str("Power"),
            Sequence::Custom { tail_bound, .. } => {
                f.debug_struct("Custom").field("tail_bound", &tail_bound.is_some()).finish()
            }
        }
    }
}

/// Parameters of one Mathieu-type series.
#[derive(Debug, Clone)]
pub struct MathieuSpec {
    mu: f64,
    alpha: f64,
    beta: f64,
    r: f64,
    sequence: Sequence,
}

impl MathieuSpec {
    /// Default sequence a_k = k^{1/α}; requires μ − β/α > 1.
    pub fn new(mu: f64, alpha: f64, beta: f64, r: f64) -> Result<Self> {
        let spec = Self::checked(mu, alpha, beta, r, Sequence::Power)?;
        if !(mu - beta / alpha > 1.0) {
            return Err(Error::Divergent(format!(
                "Mathieu series needs μ − β/α > 1, got {}",
                mu - beta / alpha
            )));
        }
        Ok(spec)
    }

    /// Caller-supplied sequence. Positivity of a_k is checked as terms are
    /// generated; without `tail_bound` the result is never reported converged.
    pub fn with_sequence(
        mu: f64,
        alpha: f64,
        beta: f64,
        r: f64,
        a: SequenceFn,
        tail_bound: Option<TailBoundFn>,
    ) -> Result<Self> {
        Self::checked(mu, alpha, beta, r, Sequence::Custom { a, tail_bound })
    }

    fn checked(mu: f64, alpha: f64, beta: f64, r: f64, sequence: Sequence) -> Result<Self> {
        if !(mu > 0.0) || !(alpha > 0.0) || !(beta >= 0.0) || !(r > 0.0) {
            return domain(format!("Mathieu series needs μ, α, r > 0 and β ≥ 0, got μ = {mu}, α = {alpha}, β = {beta}, r = {r}"));
        }
        if !(mu.is_finite() && alpha.is_finite() && beta.is_finite() && r.is_finite()) {
            return domain("Mathieu parameters must be finite");
        }
        Ok(Self { mu, alpha, beta, r, sequence })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn sequence(&self) -> &Sequence {
        &self.sequence
    }

    fn term_from(&self, a: f64) -> f64 {
        2.0 * a.powf(self.beta) / (self.r * self.r + a.powf(self.alpha)).powf(self.mu)
    }
}

/// S_μ^{(α,β)}(r; a).
///
/// Default sequence: `Err(Accuracy)` if the remainder cannot be bounded to
/// the policy tolerance. Custom sequence: summed under `policy`; with a tail
/// bound an unmet bound is `Err(Accuracy)`, without one `converged = false`.
pub fn mathieu_series(spec: &MathieuSpec, policy: &TruncationPolicy) -> Result<SeriesResult> {
    match &spec.sequence {
        Sequence::Power => power_series(spec, policy),
        Sequence::Custom { a, tail_bound } => {
            let mut out = sum_series(policy, |i| {
                let k = i + 1;
                let ak = a(k);
                if !(ak > 0.0) || !ak.is_finite() {
                    return domain(format!("sequence value a_{k} = {ak} is not positive"));
                }
                Ok(spec.term_from(ak))
            })?;
            match tail_bound {
                None => out.converged = false,
                Some(bound) => {
                    let tail = bound(out.terms_used);
                    out.tail_estimate = tail;
                    out.converged = tail <= policy.rel_tol * out.value.abs();
                    if !out.converged {
                        return Err(Error::Accuracy { estimate: out.value, bound: tail });
                    }
                }
            }
            Ok(out)
        }
    }
}

fn power_series(spec: &MathieuSpec, policy: &TruncationPolicy) -> Result<SeriesResult> {
    let (mu, p, r2) = (spec.mu, spec.beta / spec.alpha, spec.r * spec.r);
    // (x/(r² + x))^p keeps large p from overflowing
    let g = |x: f64| 2.0 * (x / (r2 + x)).powf(p) * (r2 + x).powf(p - mu);
    let split = MIN_SPLIT.max((8.0 * r2).ceil()).max((2.0 * mu * r2).ceil());
    let n = split as usize;

    let mut acc = Neumaier::new();
    for k in (1..n).rev() {
        acc.add(g(k as f64));
    }

    // ∫_N^∞ 2x^{p−μ}(1 + r²/x)^{−μ} dx, expanded in r²/N
    let mut integral = Neumaier::new();
    let mut binom = 1.0;
    let mut ratio_pow = 1.0;
    let lead = 2.0 * split.powf(p - mu + 1.0);
    let mut last = f64::INFINITY;
    for j in 0..400 {
        let t = lead * binom * ratio_pow / (mu + j as f64 - p - 1.0);
        integral.add(t);
        last = t.abs();
        if last <= f64::EPSILON * 1e-3 * integral.value().abs() {
            break;
        }
        binom *= -(mu + j as f64) / (j + 1) as f64;
        ratio_pow *= r2 / split;
    }
    acc.add(integral.value());

    let mut l = vec![0.0; JET_ORDER + 1];
    for (li, (a, b)) in l.iter_mut().zip(ln_jet(split, JET_ORDER).into_iter().zip(ln_jet(split + r2, JET_ORDER))) {
        *li = p * a - mu * b;
    }
    let g0 = g(split);
    let jet: Vec<f64> = exp_jet(&l).into_iter().map(|c| c * g0).collect();
    let em = euler_maclaurin_correction(&jet);
    acc.add(em.value);

    let value = acc.value();
    let tail_estimate = em.error + last + f64::EPSILON * acc.abs_sum();
    let converged = tail_estimate <= policy.rel_tol.max(1e-13) * value.abs();
    if !converged {
        return Err(Error::Accuracy { estimate: value, bound: tail_estimate });
    }
    Ok(SeriesResult { value, terms_used: n - 1, tail_estimate, converged, abs_sum: acc.abs_sum() })
}

/// Integral representation for a_k = k^{1/α}:
/// (2/Γ(c)) ∫_0^∞ x^{c−1}/(e^x − 1) · ₁F₁(μ; c; −r²x) dx with c = μ − β/α,
/// which is the ₁Ψ₁ form with its gamma ratio taken out.
pub fn mathieu_integral_form(spec: &MathieuSpec, policy: &TruncationPolicy) -> Result<QuadResult> {
    if !matches!(spec.sequence, Sequence::Power) {
        return domain("the integral form needs the default sequence a_k = k^{1/α}");
    }
    let mu = spec.mu;
    let c = mu - spec.beta / spec.alpha;
    let r2 = spec.r * spec.r;
    let ln_norm = (2.0f64).ln() - log_gamma(c)?;
    let inner = policy.with_max_terms(policy.max_terms.max(100_000));
    let f = |x: f64| -> f64 {
        if x > 700.0 {
            return 0.0;
        }
        let kummer = match hyp1f1(mu, c, -r2 * x, &inner) {
            Ok(v) => v.value,
            Err(_) => return f64::NAN,
        };
        (ln_norm + (c - 1.0) * x.ln()).exp() / x.exp_m1() * kummer
    };
    let qspec = QuadratureSpec::default().with_exponents(c - 2.0, 0.0);
    integrate_semi_infinite_detailed(f, &qspec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::hurwitz_zeta;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn pol() -> TruncationPolicy {
        TruncationPolicy::default()
    }

    #[test]
    fn basel_shift() {
        let s = mathieu_series(&MathieuSpec::new(2.0, 1.0, 0.0, 1.0).unwrap(), &pol()).unwrap();
        assert!(s.converged);
        assert_relative_eq!(s.value, 2.0 * (PI * PI / 6.0 - 1.0), max_relative = 1e-14);
        assert_relative_eq!(s.value, 2.0 * hurwitz_zeta(2.0, 2.0).unwrap(), max_relative = 1e-14);
    }

    #[test]
    fn reparametrization_invariance() {
        let a = mathieu_series(&MathieuSpec::new(2.0, 1.0, 0.0, 1.0).unwrap(), &pol()).unwrap();
        let b = mathieu_series(&MathieuSpec::new(2.0, 2.0, 0.0, 1.0).unwrap(), &pol()).unwrap();
        assert_relative_eq!(a.value, b.value, max_relative = 1e-15);
    }

    #[test]
    fn brute_force_oracle() {
        // Σ 2k/(4 + k)³ by 10⁶ terms plus the integral-comparison midpoint tail
        let spec = MathieuSpec::new(3.0, 1.0, 1.0, 2.0).unwrap();
        let got = mathieu_series(&spec, &pol()).unwrap().value;
        let n = 1_000_000usize;
        let mut acc = Neumaier::new();
        for k in (1..=n).rev() {
            let k = k as f64;
            acc.add(2.0 * k / (4.0 + k).powi(3));
        }
        // ∫_{N+1/2}^∞ 2x/(4+x)³ dx = 2/(4+y) − 4/(4+y)², y = N + 1/2
        let y = n as f64 + 0.5 + 4.0;
        acc.add(2.0 / y - 4.0 / (y * y));
        assert_relative_eq!(got, acc.value(), max_relative = 1e-11);
    }

    #[test]
    fn hurwitz_form_for_integer_weights() {
        // α = 1, β = 0: Σ 2/(r² + k)^μ = 2ζ(μ, 1 + r²)
        for &(mu, r) in &[(1.5, 0.5), (3.0, 2.0), (2.5, 7.0)] {
            let s = mathieu_series(&MathieuSpec::new(mu, 1.0, 0.0, r).unwrap(), &pol()).unwrap();
            assert_relative_eq!(s.value, 2.0 * hurwitz_zeta(mu, 1.0 + r * r).unwrap(), max_relative = 1e-13);
        }
    }

    #[test]
    fn divergence_rejected() {
        assert!(matches!(MathieuSpec::new(2.0, 1.0, 1.0, 1.0), Err(Error::Divergent(_))));
        assert!(MathieuSpec::new(2.0, 0.0, 0.0, 1.0).is_err());
        assert!(MathieuSpec::new(2.0, 1.0, -0.5, 1.0).is_err());
    }

    #[test]
    fn custom_sequence_without_bound_is_unconverged() {
        let a: SequenceFn = Arc::new(|k| k as f64);
        let spec = MathieuSpec::with_sequence(2.0, 1.0, 0.0, 1.0, a.clone(), None).unwrap();
        let out = mathieu_series(&spec, &pol().with_max_terms(2000)).unwrap();
        assert!(!out.converged);
        let bound: TailBoundFn = Arc::new(|n| 2.0 / (n as f64 + 1.0));
        let spec = MathieuSpec::with_sequence(2.0, 1.0, 0.0, 1.0, a, Some(bound)).unwrap();
        assert!(matches!(mathieu_series(&spec, &pol().with_max_terms(2000)), Err(Error::Accuracy { .. })));
        let spec = MathieuSpec::with_sequence(2.0, 1.0, 0.0, 1.0, Arc::new(|k| 2f64.powi(k as i32)), Some(Arc::new(|_| 0.0)))
            .unwrap();
        assert!(mathieu_series(&spec, &pol()).unwrap().converged);
    }

    #[test]
    fn integral_form_agrees_with_series() {
        for &(mu, alpha, beta, r) in &[(2.0, 1.0, 0.0, 1.0), (2.5, 2.0, 1.0, 1.3), (3.0, 1.0, 1.0, 0.4)] {
            let spec = MathieuSpec::new(mu, alpha, beta, r).unwrap();
            let s = mathieu_series(&spec, &pol()).unwrap().value;
            let i = mathieu_integral_form(&spec, &pol()).unwrap().value;
            assert_relative_eq!(s, i, max_relative = 1e-9);
        }
    }
}
