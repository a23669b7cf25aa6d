//! Fox-Wright ₚΨ_q and generalized hypergeometric ₚF_q series.
//!
//! ₚΨ_q[(a,A);(b,B)|z] = Σ_k ∏Γ(a_i+kA_i) / ∏Γ(b_j+kB_j) · z^k/k!

use crate::error::{domain, Error, Result};
use crate::gamma::{is_gamma_pole, ln_gamma_pos, ln_gamma_signed};
use crate::series::{sum_series, SeriesResult, TruncationPolicy};

/// Largest ln|term| that still exponentiates to a finite double.
pub(crate) const LN_MAX: f64 = 709.7;

/// Relative slack when comparing Δ with −1 and |z| with ρ.
const BOUNDARY_EPS: f64 = 1e-12;

/// Parameter arrays ((a_i, A_i); (b_j, B_j)) of a Fox-Wright function.
#[derive(Debug, Clone, PartialEq)]
pub struct FoxWrightParams {
    upper: Vec<(f64, f64)>,
    lower: Vec<(f64, f64)>,
}

/// Convergence data Δ, ρ, μ and γ of a parameter set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceInfo {
    pub delta: f64,
    pub rho: f64,
    pub mu: f64,
    /// min a_i/A_i; `None` unless every upper weight is positive.
    pub gamma_min: Option<f64>,
}

/// First index k ≥ 0 with c + kw a pole of Γ, if any.
fn first_pole(c: f64, w: f64) -> Option<usize> {
    if w == 0.0 {
        return is_gamma_pole(c).then_some(0);
    }
    let mut k = 0usize;
    loop {
        let x = c + k as f64 * w;
        if x > 0.0 {
            return None;
        }
        if is_gamma_pole(x) {
            return Some(k);
        }
        k += 1;
    }
}

impl FoxWrightParams {
    /// Validates weights (finite, ≥ 0) and rejects arrays whose gamma
    /// arguments a_i + kA_i or b_j + kB_j meet a pole.
    pub fn new(upper: Vec<(f64, f64)>, lower: Vec<(f64, f64)>) -> Result<Self> {
        for (side, list) in [("upper", &upper), ("lower", &lower)] {
            for &(c, w) in list.iter() {
                if !c.is_finite() || !w.is_finite() {
                    return domain(format!("{side} parameter ({c}, {w}) is not finite"));
                }
                if w < 0.0 {
                    return domain(format!("{side} weight {w} is negative"));
                }
                if let Some(k) = first_pole(c, w) {
                    return domain(format!(
                        "{side} gamma argument {c} + {k}·{w} is a pole"
                    ));
                }
            }
        }
        Ok(Self { upper, lower })
    }

    /// All weights equal to one.
    pub fn unit_weights(upper: &[f64], lower: &[f64]) -> Result<Self> {
        Self::new(
            upper.iter().map(|&a| (a, 1.0)).collect(),
            lower.iter().map(|&b| (b, 1.0)).collect(),
        )
    }

    pub fn upper(&self) -> &[(f64, f64)] {
        &self.upper
    }

    pub fn lower(&self) -> &[(f64, f64)] {
        &self.lower
    }

    pub fn p(&self) -> usize {
        self.upper.len()
    }

    pub fn q(&self) -> usize {
        self.lower.len()
    }

    pub fn convergence(&self) -> ConvergenceInfo {
        convergence_params(self)
    }

    /// (a_i + kA_i, A_i; b_j + kB_j, B_j).
    pub fn shifted(&self, k: usize) -> Self {
        let kf = k as f64;
        Self {
            upper: self.upper.iter().map(|&(a, w)| (a + kf * w, w)).collect(),
            lower: self.lower.iter().map(|&(b, w)| (b + kf * w, w)).collect(),
        }
    }

    /// The set with `(sigma, 1)` prepended to the upper list.
    pub fn prepend_upper(&self, pair: (f64, f64)) -> Result<Self> {
        let mut upper = Vec::with_capacity(self.upper.len() + 1);
        upper.push(pair);
        upper.extend_from_slice(&self.upper);
        Self::new(upper, self.lower.clone())
    }

    /// (ln |c_k|, sign c_k) for c_k = ∏Γ(a_i+kA_i)/∏Γ(b_j+kB_j)/k!.
    pub fn log_coefficient(&self, k: usize) -> (f64, f64) {
        let kf = k as f64;
        let mut ln = -ln_gamma_pos(kf + 1.0);
        let mut sign = 1.0;
        for &(a, w) in &self.upper {
            let (l, s) = ln_gamma_signed(a + kf * w);
            ln += l;
            sign *= s;
        }
        for &(b, w) in &self.lower {
            let (l, s) = ln_gamma_signed(b + kf * w);
            ln -= l;
            sign *= s;
        }
        (ln, sign)
    }

    /// ∏Γ(a_i+A_i·k) / ∏Γ(b_j+B_j·k) at k = 0, i.e. ψ₀,₀ for k = 0 and
    /// ψ₀,₁ for k = 1.
    pub fn gamma_ratio(&self, k: usize) -> f64 {
        let (ln, sign) = self.log_coefficient(k);
        sign * (ln + ln_gamma_pos(k as f64 + 1.0)).exp()
    }
}

/// Δ = ΣB − ΣA, ρ = ∏A^{−A}·∏B^{B} (0⁰ = 1), μ = Σb − Σa + (p−q)/2,
/// γ = min a/A.
pub fn convergence_params(params: &FoxWrightParams) -> ConvergenceInfo {
    let pow_self = |w: f64| if w == 0.0 { 1.0 } else { w.powf(w) };
    let sum_a: f64 = params.upper.iter().map(|p| p.0).sum();
    let sum_aw: f64 = params.upper.iter().map(|p| p.1).sum();
    let sum_b: f64 = params.lower.iter().map(|p| p.0).sum();
    let sum_bw: f64 = params.lower.iter().map(|p| p.1).sum();
    let rho = params.upper.iter().map(|p| 1.0 / pow_self(p.1)).product::<f64>()
        * params.lower.iter().map(|p| pow_self(p.1)).product::<f64>();
    let gamma_min = if !params.upper.is_empty() && params.upper.iter().all(|p| p.1 > 0.0) {
        Some(params.upper.iter().map(|p| p.0 / p.1).fold(f64::INFINITY, f64::min))
    } else {
        None
    };
    ConvergenceInfo {
        delta: sum_bw - sum_aw,
        rho,
        mu: sum_b - sum_a + (params.p() as f64 - params.q() as f64) / 2.0,
        gamma_min,
    }
}

/// Alias of [`FoxWrightParams::shifted`].
pub fn fox_wright_shifted(params: &FoxWrightParams, k: usize) -> FoxWrightParams {
    params.shifted(k)
}

/// Accepts Δ > −1; Δ = −1 with |z| < ρ, or |z| = ρ and μ > 1/2.
pub(crate) fn check_region(info: &ConvergenceInfo, z: f64, what: &str) -> Result<()> {
    if z == 0.0 || info.delta > -1.0 + BOUNDARY_EPS {
        return Ok(());
    }
    if info.delta < -1.0 - BOUNDARY_EPS {
        return Err(Error::Divergent(format!("{what}: Δ = {} < −1", info.delta)));
    }
    let az = z.abs();
    if az < info.rho * (1.0 - BOUNDARY_EPS) {
        return Ok(());
    }
    if az <= info.rho * (1.0 + BOUNDARY_EPS) {
        if info.mu > 0.5 {
            return Ok(());
        }
        return Err(Error::Divergent(format!(
            "{what}: |z| = ρ = {} requires μ > 1/2, got μ = {}",
            info.rho, info.mu
        )));
    }
    Err(Error::Divergent(format!("{what}: |z| = {az} exceeds ρ = {}", info.rho)))
}

fn sum_log_terms(
    params: &FoxWrightParams,
    z: f64,
    log_prefactor: f64,
    policy: &TruncationPolicy,
) -> Result<SeriesResult> {
    let ln_z = z.abs().ln();
    let neg = z < 0.0;
    sum_series(policy, |k| {
        if z == 0.0 && k > 0 {
            return Ok(0.0);
        }
        let (mut ln, mut sign) = params.log_coefficient(k);
        if k > 0 {
            ln += k as f64 * ln_z;
            if neg && k % 2 == 1 {
                sign = -sign;
            }
        }
        ln += log_prefactor;
        if ln > LN_MAX {
            return Err(Error::Overflow { k });
        }
        Ok(sign * ln.exp())
    })
}

/// ₚΨ_q[(a,A);(b,B)|z] for real z.
pub fn fox_wright(params: &FoxWrightParams, z: f64, policy: &TruncationPolicy) -> Result<SeriesResult> {
    check_region(&params.convergence(), z, "fox_wright")?;
    sum_log_terms(params, z, 0.0, policy)
}

/// Ψ̌ = (1/Γ(σ)) · ₚ₊₁Ψ_q with (σ, 1) prepended to the upper list.
pub fn fox_wright_normalized(
    sigma: f64,
    params: &FoxWrightParams,
    z: f64,
    policy: &TruncationPolicy,
) -> Result<SeriesResult> {
    if !(sigma > 0.0) {
        return domain(format!("normalized Fox-Wright requires σ > 0, got {sigma}"));
    }
    let full = params.prepend_upper((sigma, 1.0))?;
    check_region(&full.convergence(), z, "fox_wright_normalized")?;
    sum_log_terms(&full, z, -ln_gamma_pos(sigma), policy)
}

fn is_nonpositive_integer(x: f64) -> bool {
    is_gamma_pole(x)
}

/// ₚF_q(a; b; z) = Σ ∏(a)_k/∏(b)_k · z^k/k!, summed by the term-ratio
/// recurrence.
pub fn pfq(upper: &[f64], lower: &[f64], z: f64, policy: &TruncationPolicy) -> Result<SeriesResult> {
    if let Some(b) = lower.iter().find(|&&b| is_nonpositive_integer(b)) {
        return domain(format!("pfq lower parameter {b} is a nonpositive integer"));
    }
    if upper.iter().chain(lower).any(|x| !x.is_finite()) || !z.is_finite() {
        return domain("pfq parameters must be finite");
    }
    let terminating = upper.iter().any(|&a| is_nonpositive_integer(a));
    if !terminating {
        let (p, q) = (upper.len() as f64, lower.len() as f64);
        let info = ConvergenceInfo {
            delta: q - p,
            rho: 1.0,
            mu: lower.iter().sum::<f64>() - upper.iter().sum::<f64>() + (p - q) / 2.0,
            gamma_min: None,
        };
        check_region(&info, z, "pfq")?;
    }
    let mut t = 1.0;
    sum_series(policy, |k| {
        if k > 0 {
            let km = (k - 1) as f64;
            let mut ratio = z / k as f64;
            for &a in upper {
                ratio *= a + km;
            }
            for &b in lower {
                ratio /= b + km;
            }
            t *= ratio;
        }
        Ok(t)
    })
}

/// Kummer ₁F₁(a; b; x). Negative x uses e^x ₁F₁(b−a; b; −x) with the
/// exponential folded into each term, so large |x| does not overflow.
pub fn hyp1f1(a: f64, b: f64, x: f64, policy: &TruncationPolicy) -> Result<SeriesResult> {
    if is_nonpositive_integer(b) {
        return domain(format!("hyp1f1 lower parameter {b} is a nonpositive integer"));
    }
    if x >= 0.0 {
        return pfq(&[a], &[b], x, policy);
    }
    let c = b - a;
    let y = -x;
    let ln_y = y.ln();
    let mut ln_c = 0.0;
    let mut sign_c = 1.0;
    let mut ln_b = 0.0;
    let mut sign_b = 1.0;
    sum_series(policy, |k| {
        if k > 0 {
            let km = (k - 1) as f64;
            let ck = c + km;
            if ck == 0.0 {
                sign_c = 0.0;
            } else {
                ln_c += ck.abs().ln();
                if ck < 0.0 {
                    sign_c = -sign_c;
                }
            }
            let bk = b + km;
            ln_b += bk.abs().ln();
            if bk < 0.0 {
                sign_b = -sign_b;
            }
        }
        if sign_c == 0.0 {
            return Ok(0.0);
        }
        let kf = k as f64;
        let ln = ln_c - ln_b + kf * ln_y - ln_gamma_pos(kf + 1.0) + x;
        Ok(sign_c * sign_b * ln.exp())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn pol() -> TruncationPolicy {
        TruncationPolicy::default()
    }

    #[test]
    fn convergence_examples() {
        let p = FoxWrightParams::new(vec![(0.7, 1.0)], vec![(2.1, 1.0)]).unwrap();
        let c = convergence_params(&p);
        assert_eq!(c.delta, 0.0);
        assert_eq!(c.rho, 1.0);
        assert_relative_eq!(c.mu, 1.4, max_relative = 1e-15);
        let p = FoxWrightParams::new(vec![(1.0, 2.0)], vec![]).unwrap();
        assert_eq!(convergence_params(&p).delta, -2.0);
        let p = FoxWrightParams::new(vec![(1.0, 2.0)], vec![(1.0, 3.0)]).unwrap();
        assert_relative_eq!(convergence_params(&p).rho, 6.75, max_relative = 1e-15);
        let p = FoxWrightParams::new(vec![(1.0, 0.0)], vec![(1.0, 1.0)]).unwrap();
        assert_eq!(convergence_params(&p).rho, 1.0);
        assert_eq!(convergence_params(&p).gamma_min, None);
    }

    #[test]
    fn construction_rejects_poles_and_negative_weights() {
        assert!(FoxWrightParams::new(vec![(1.0, -1.0)], vec![]).is_err());
        assert!(FoxWrightParams::new(vec![], vec![(-2.0, 0.0)]).is_err());
        assert!(FoxWrightParams::new(vec![], vec![(-2.0, 0.5)]).is_err());
        assert!(FoxWrightParams::new(vec![(-1.5, 1.0)], vec![(-0.5, 0.5)]).is_err());
        assert!(FoxWrightParams::new(vec![(-1.5, 1.0)], vec![(-0.25, 0.5)]).is_ok());
    }

    #[test]
    fn elementary_values() {
        let empty = FoxWrightParams::new(vec![], vec![]).unwrap();
        let r = fox_wright(&empty, 1.25, &pol()).unwrap();
        assert!(r.converged);
        assert_relative_eq!(r.value, 1.25f64.exp(), max_relative = 1e-14);
        let p = FoxWrightParams::unit_weights(&[1.0], &[1.0]).unwrap();
        assert_relative_eq!(fox_wright(&p, 0.7, &pol()).unwrap().value, 0.7f64.exp(), max_relative = 1e-14);
        let p = FoxWrightParams::unit_weights(&[1.0, 1.0], &[2.0]).unwrap();
        assert_relative_eq!(fox_wright(&p, 0.5, &pol()).unwrap().value, 2.0 * 2f64.ln(), max_relative = 1e-13);
    }

    #[test]
    fn divergent_regions_rejected() {
        let p = FoxWrightParams::new(vec![(1.0, 2.0)], vec![]).unwrap();
        assert!(matches!(fox_wright(&p, 0.1, &pol()), Err(Error::Divergent(_))));
        let p = FoxWrightParams::unit_weights(&[1.0, 1.0], &[1.0]).unwrap();
        assert!(matches!(fox_wright(&p, 1.5, &pol()), Err(Error::Divergent(_))));
        // boundary with μ = 1/2
        let p = FoxWrightParams::unit_weights(&[1.0, 1.0], &[2.0]).unwrap();
        assert!(matches!(fox_wright(&p, 1.0, &pol()), Err(Error::Divergent(_))));
        // boundary with μ = 3/2 accepted; sums to ζ(2)
        let p = FoxWrightParams::unit_weights(&[1.0, 1.0, 1.0], &[2.0, 2.0]).unwrap();
        let r = fox_wright(&p, 1.0, &pol()).unwrap();
        assert!(!r.converged);
        assert!((r.value - std::f64::consts::PI.powi(2) / 6.0).abs() < 2e-4);
    }

    #[test]
    fn overflow_reports_index() {
        let p = FoxWrightParams::new(vec![(1.0, 3.0)], vec![(1.0, 2.0)]).unwrap();
        match fox_wright(&p, 1e-300, &pol()) {
            Ok(_) | Err(Error::Overflow { .. }) => {}
            Err(e) => panic!("unexpected {e}"),
        }
        let p = FoxWrightParams::new(vec![(200.0, 1.0)], vec![]).unwrap();
        assert!(matches!(fox_wright(&p, 0.0, &pol()), Err(Error::Overflow { k: 0 })));
    }

    #[test]
    fn normalized_form() {
        let p = FoxWrightParams::new(vec![(1.3, 0.5)], vec![(2.0, 0.5)]).unwrap();
        let a = fox_wright_normalized(1.0, &p, 0.4, &pol()).unwrap().value;
        let b = fox_wright(&p.prepend_upper((1.0, 1.0)).unwrap(), 0.4, &pol()).unwrap().value;
        assert_relative_eq!(a, b, max_relative = 1e-15);
        let empty = FoxWrightParams::new(vec![], vec![]).unwrap();
        assert_eq!(fox_wright_normalized(2.0, &empty, 0.0, &pol()).unwrap().value, 1.0);
        // σ = 1.5, brute sum of Γ(σ+n)Γ(1.2+n)/(Γ(σ)Γ(2.7+n)) zⁿ/n!
        let p = FoxWrightParams::unit_weights(&[1.2], &[2.7]).unwrap();
        let z: f64 = -0.6;
        let mut brute = 0.0;
        for n in 0..80 {
            let nf = n as f64;
            let lc = ln_gamma_pos(1.5 + nf) - ln_gamma_pos(1.5) + ln_gamma_pos(1.2 + nf)
                - ln_gamma_pos(2.7 + nf)
                - ln_gamma_pos(nf + 1.0);
            brute += lc.exp() * z.powi(n);
        }
        assert_relative_eq!(fox_wright_normalized(1.5, &p, z, &pol()).unwrap().value, brute, max_relative = 1e-13);
    }

    #[test]
    fn pfq_examples() {
        assert_relative_eq!(pfq(&[], &[], 1.0, &pol()).unwrap().value, std::f64::consts::E, max_relative = 1e-15);
        assert_relative_eq!(pfq(&[2.0], &[], 0.25, &pol()).unwrap().value, 16.0 / 9.0, max_relative = 1e-14);
        assert!(pfq(&[1.0], &[-2.0], 0.1, &pol()).is_err());
        // terminating: ₂F₁(−3, 2; 1; 3) = 1 − 18 + 81 − 108
        let v = pfq(&[-3.0, 2.0], &[1.0], 3.0, &pol()).unwrap().value;
        let exact = -44.0;
        assert_relative_eq!(v, exact, max_relative = 1e-14);
    }

    #[test]
    fn bridge_with_unit_weights() {
        let a = [0.7, 1.9];
        let b = [2.3];
        let p = FoxWrightParams::unit_weights(&a, &b).unwrap();
        let pre = (ln_gamma_pos(0.7) + ln_gamma_pos(1.9) - ln_gamma_pos(2.3)).exp();
        for &z in &[-0.8, -0.3, 0.2, 0.75] {
            let psi = fox_wright(&p, z, &pol()).unwrap().value;
            let f = pfq(&a, &b, z, &pol()).unwrap().value;
            assert_relative_eq!(psi, pre * f, max_relative = 1e-12);
        }
    }

    #[test]
    fn kummer_branch_matches_direct_sum() {
        for &(a, b, x) in &[(0.5, 1.7, -2.0), (2.5, 1.25, -0.3), (1.0, 3.5, -12.0)] {
            let k = hyp1f1(a, b, x, &pol()).unwrap().value;
            let d = pfq(&[a], &[b], x, &pol()).unwrap().value;
            assert_relative_eq!(k, d, max_relative = 1e-10);
        }
        // ₁F₁(1; 2; x) = (e^x − 1)/x
        let x: f64 = -40.0;
        assert_relative_eq!(hyp1f1(1.0, 2.0, x, &pol()).unwrap().value, x.exp_m1() / x, max_relative = 1e-13);
        // large |x| stays finite: ₁F₁(a; b; −y) ~ Γ(b)/Γ(b−a) y^{−a}
        let v = hyp1f1(0.5, 1.5, -3000.0, &pol()).unwrap().value;
        assert_relative_eq!(v, 0.5 * (std::f64::consts::PI / 3000.0).sqrt(), max_relative = 1e-10);
    }
}
