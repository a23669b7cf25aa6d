//! Randomized invariants of the series, quadrature, zeta and Mathieu modules.

use num_complex::Complex64;
use proptest::prelude::*;

use foxwright::foxwright::{fox_wright, pfq, FoxWrightParams};
use foxwright::gamma::{binom_coeff_shifted, gamma, ln_beta};
use foxwright::mathieu::{mathieu_series, MathieuSpec};
use foxwright::quadrature::{finite_laplace, integrate_finite_detailed, KernelPQ11, QuadratureSpec};
use foxwright::series::{sum_series, TruncationPolicy};
use foxwright::zeta::{extended_lerch_phi, hurwitz_zeta, lerch_phi, polylog, LerchParams};

fn policy() -> TruncationPolicy {
    TruncationPolicy::default()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // unit-weight Fox-Wright = ∏Γ(a)/∏Γ(b) · pFq
    #[test]
    fn bridge_identity(
        a in prop::collection::vec(0.2f64..4.0, 1..3),
        b in prop::collection::vec(0.2f64..4.0, 1..3),
        frac in -0.8f64..0.8,
    ) {
        let params = FoxWrightParams::unit_weights(&a, &b).unwrap();
        let rho = params.convergence().rho;
        let z = if params.convergence().delta > -1.0 { 3.0 * frac } else { frac * rho };
        let psi = fox_wright(&params, z, &policy()).unwrap();
        let f = pfq(&a, &b, z, &policy()).unwrap();
        let ratio: f64 = a.iter().map(|&x| gamma(x).unwrap()).product::<f64>()
            / b.iter().map(|&x| gamma(x).unwrap()).product::<f64>();
        let scale = psi.abs_sum.max(psi.value.abs());
        prop_assert!((psi.value - ratio * f.value).abs() <= 1e-12 * scale, "{} vs {}", psi.value, ratio * f.value);
    }

    // c_{k+1}/c_k from log-gamma terms against the Pochhammer recurrence
    #[test]
    fn term_ratio_consistency(
        a in prop::collection::vec(0.2f64..6.0, 1..4),
        b in prop::collection::vec(0.2f64..6.0, 0..3),
        k in 0usize..50,
    ) {
        let params = FoxWrightParams::unit_weights(&a, &b).unwrap();
        let (l0, s0) = params.log_coefficient(k);
        let (l1, s1) = params.log_coefficient(k + 1);
        let kf = k as f64;
        let direct = a.iter().map(|x| x + kf).product::<f64>() / b.iter().map(|x| x + kf).product::<f64>() / (kf + 1.0);
        prop_assert!(rel(s0 * s1 * (l1 - l0).exp(), direct) < 1e-10);
    }

    // Σ C(λ+k−1, k) t^k = (1 − t)^{−λ}
    #[test]
    fn binomial_expansion(lambda in 0.1f64..4.0, t in -0.9f64..0.9) {
        let s = sum_series(&policy(), |k| Ok(binom_coeff_shifted(lambda, k) * t.powi(k as i32))).unwrap();
        prop_assert!(s.converged);
        prop_assert!(rel(s.value, (1.0 - t).powf(-lambda)) < 1e-12);
    }

    // shifting parameters leaves Δ and ρ alone and moves μ by kΔ
    #[test]
    fn shift_keeps_convergence_data(
        a in 0.5f64..3.0, wa in 0.2f64..2.0, b in 0.5f64..3.0, wb in 0.2f64..2.0, k in 0usize..20,
    ) {
        let params = FoxWrightParams::new(vec![(a, wa)], vec![(b, wb)]).unwrap();
        let c0 = params.convergence();
        let ck = params.shifted(k).convergence();
        prop_assert!((c0.delta - ck.delta).abs() < 1e-14);
        prop_assert!(rel(ck.rho, c0.rho) < 1e-14);
        prop_assert!((ck.mu - (c0.mu + k as f64 * c0.delta)).abs() < 1e-12);
    }

    // extended Lerch with a (1, 1) upper pair and matched pairs is Φ
    #[test]
    fn extended_lerch_reduction(
        lam in 0.3f64..3.0, rho in 0.3f64..2.0, z in 0.05f64..0.9, s in 1.1f64..3.5, a in 0.3f64..2.5,
    ) {
        let params = LerchParams::new(vec![(lam, rho), (1.0, 1.0)], vec![(lam, rho)], s, a).unwrap();
        let ext = extended_lerch_phi(&params, Complex64::new(z, 0.0), &policy()).unwrap();
        let phi = lerch_phi(Complex64::new(z, 0.0), s, a).unwrap();
        prop_assert!(rel(ext.value.re, phi.re) < 1e-11);
        // Li_s(z) = zΦ(z, s, 1) and Φ(1, s, a) = ζ(s, a)
        let li = polylog(s, Complex64::new(z, 0.0)).unwrap();
        let phi1 = lerch_phi(Complex64::new(z, 0.0), s, 1.0).unwrap();
        prop_assert!(rel(li.re, z * phi1.re) < 1e-13);
        let at_one = lerch_phi(Complex64::new(1.0, 0.0), s, a).unwrap();
        prop_assert!(rel(at_one.re, hurwitz_zeta(s, a).unwrap()) < 1e-10);
    }

    #[test]
    fn lerch_conjugate_symmetry(r in 0.05f64..0.99, th in 0.0f64..std::f64::consts::TAU, s in 0.5f64..3.0, a in 0.2f64..3.0) {
        let z = Complex64::from_polar(r, th);
        let p = lerch_phi(z, s, a).unwrap();
        let q = lerch_phi(z.conj(), s, a).unwrap();
        prop_assert!((p - q.conj()).norm() <= 1e-13 * p.norm());
    }

    // ∫ ξ^{a−1}(1 − ξ)^{b−1} = B(a, b), including strong endpoint singularities
    #[test]
    fn beta_oracle(a in 0.05f64..4.0, b in 0.05f64..4.0) {
        let spec = QuadratureSpec::default().with_exponents(a - 1.0, b - 1.0);
        let v = integrate_finite_detailed(|_, gl, gh| gl.powf(a - 1.0) * gh.powf(b - 1.0), 0.0, 1.0, &spec).unwrap();
        prop_assert!(rel(v.value, ln_beta(a, b).exp()) < 1e-9, "B({a}, {b}): {}", v.value);
        // a tighter tolerance never moves the result away from the oracle
        let tight = integrate_finite_detailed(
            |_, gl, gh| gl.powf(a - 1.0) * gh.powf(b - 1.0), 0.0, 1.0, &spec.with_rel_tol(0.5 * spec.rel_tol),
        ).unwrap();
        let oracle = ln_beta(a, b).exp();
        prop_assert!((tight.value - oracle).abs() <= (v.value - oracle).abs() + 4.0 * f64::EPSILON * oracle);
    }

    // ∫ H(ξ)/ξ = Γ(α)/Γ(β) for A = 1; the kernel is positive
    #[test]
    fn kernel_normalization(alpha in 1.0f64..3.0, gap in 0.3f64..3.0, xi in 0.01f64..0.99) {
        let beta = alpha + gap;
        let k = KernelPQ11::new(1.0, alpha, beta).unwrap();
        prop_assert!(k.eval_with_gap(xi, 1.0 - xi) > 0.0);
        let (e0, e1) = k.exponents();
        let spec = QuadratureSpec::default().with_exponents(e0 - 1.0, e1);
        let v = integrate_finite_detailed(|x, _, gh| k.eval_with_gap(x, gh) / x, 0.0, 1.0, &spec).unwrap();
        prop_assert!(rel(v.value, gamma(alpha).unwrap() / gamma(beta).unwrap()) < 1e-9);
    }

    #[test]
    fn finite_laplace_decreases_in_s(s1 in -3.0f64..3.0, ds in 0.01f64..2.0, c in 0.2f64..2.0) {
        let spec = QuadratureSpec::default();
        let f = |x: f64| x.powf(c);
        let l1 = finite_laplace(f, 1.0, s1, &spec).unwrap();
        let l2 = finite_laplace(f, 1.0, s1 + ds, &spec).unwrap();
        prop_assert!(l1 >= l2);
    }

    #[test]
    fn mathieu_decreases_in_r(mu in 1.5f64..4.0, alpha in 0.5f64..2.0, r1 in 0.1f64..3.0, dr in 0.01f64..1.0) {
        let beta = 0.25 * alpha;
        let s1 = mathieu_series(&MathieuSpec::new(mu, alpha, beta, r1).unwrap(), &policy()).unwrap();
        let s2 = mathieu_series(&MathieuSpec::new(mu, alpha, beta, r1 + dr).unwrap(), &policy()).unwrap();
        prop_assert!(s1.value > s2.value);
    }

    // S_{μ+k}^{(α, kα)}(r; {n^{1/α}}) has terms 2n^k/(r² + n)^{μ+k}
    #[test]
    fn mathieu_shift_terms(mu in 1.5f64..3.0, alpha in 0.5f64..2.0, r in 0.2f64..2.0, k in 0usize..6) {
        let kf = k as f64;
        let spec = MathieuSpec::new(mu + kf, alpha, kf * alpha, r).unwrap();
        let v = mathieu_series(&spec, &policy()).unwrap().value;
        let r2 = r * r;
        // direct terms to 10⁵ plus the midpoint integral of the remainder
        let n_max = 100_000;
        let direct: f64 = (1..=n_max).rev().map(|n| {
            let n = n as f64;
            2.0 * (n / (r2 + n)).powf(kf) * (r2 + n).powf(-mu)
        }).sum();
        let x0 = n_max as f64 + 0.5;
        // ∫ 2x^{−μ}(1 + r²/x)^{−μ−k} dx to first order in r²/x
        let tail = 2.0 * (x0.powf(1.0 - mu) / (mu - 1.0) - (mu + kf) * r2 * x0.powf(-mu) / mu);
        prop_assert!(rel(direct + tail, v) < 1e-8, "{} vs {v}", direct + tail);
    }
}
