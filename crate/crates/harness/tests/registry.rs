//! Registry-wide properties of the identity suite.

use num_complex::Complex64;

use foxwright::foxwright::{fox_wright, FoxWrightParams};
use foxwright::gamma::gamma;
use foxwright::mathieu::{mathieu_series, MathieuSpec};
use foxwright::zeta::lerch_phi;
use foxwright_harness::case::{errors, verdict};
use foxwright_harness::{registry, run_suite, IdentityCase, Kind, Outcome, Point, SuiteConfig};

/// Statements every build must cover, matched against anchors and descriptions.
const IN_SCOPE: &[&str] = &[
    "finite Laplace transform",
    "two-sided bounds",
    "Luke-type chain",
    "normalized Fox-Wright",
    "reducing p, q by one",
    "exponential closed form",
    "hypergeometric form",
    "Hurwitz zeta value",
    "ζ(μ, 2)",
    "Bose kernel",
    "(π² − 6)/6",
    "ζ(3) − 1",
    "(π⁴ − 90)/90",
    "extended Hurwitz-Lerch",
    "Φ(z(1 − t)^{−ρ₁}, s, a)",
    "Lipschitz-Lerch form",
    "binomial collapse",
    "L(ξ, a, s)",
    "2 log 2",
    "π²/6 − log²2",
    "2·Li₃(1/2)",
    "printed Li₃",
];

#[test]
fn every_in_scope_statement_has_a_case() {
    let cases = registry();
    let missing: Vec<&&str> = IN_SCOPE
        .iter()
        .filter(|topic| !cases.iter().any(|c| c.anchor.contains(**topic) || c.description.contains(**topic)))
        .collect();
    assert!(missing.is_empty(), "no case covers {missing:?}");
}

#[test]
fn every_case_reports_and_the_suite_passes() {
    let reports = run_suite(None, &SuiteConfig::default()).unwrap();
    for case in registry() {
        let n = reports.iter().filter(|r| r.id == case.id).count();
        assert_eq!(n, case.grid.len(), "{}", case.id);
    }
    let failed: Vec<String> = reports.iter().filter(|r| !r.pass()).map(|r| format!("{} {}", r.id, r.point)).collect();
    assert!(failed.is_empty(), "{failed:?}");
}

#[test]
fn reports_are_bit_identical_across_runs() {
    let config = SuiteConfig::default();
    let a = run_suite(None, &config).unwrap();
    let b = run_suite(None, &config).unwrap();
    assert_eq!(format!("{a:?}"), format!("{b:?}"));
}

#[test]
fn verdicts_follow_from_stored_values() {
    let config = SuiteConfig::default();
    let cases = registry();
    for r in run_suite(None, &config).unwrap() {
        let case = cases.iter().find(|c| c.id == r.id).unwrap();
        let tol = config.tolerance_for(case);
        if case.kind != Kind::InequalityChain {
            let (abs_err, rel_err) = errors(r.lhs, r.rhs);
            assert_eq!(abs_err.to_bits(), r.abs_err.to_bits(), "{}", r.id);
            assert_eq!(rel_err.to_bits(), r.rel_err.to_bits(), "{}", r.id);
        } else {
            assert_eq!(r.abs_err, (-r.lhs.re).max(0.0));
        }
        assert_eq!(verdict(case.kind, tol, r.abs_err, r.rel_err), r.outcome == Outcome::Pass, "{}", r.id);
    }
}

#[test]
fn glob_filters_select_by_id() {
    let config = SuiteConfig::default();
    let pi2 = run_suite(Some("double-series-pi2-*"), &config).unwrap();
    assert!(pi2.len() >= 3 && pi2.iter().all(|r| r.pass()));
    assert!(run_suite(Some("nothing-matches-this"), &config).unwrap().is_empty());
    let single = run_suite(Some("double-series-pi2-m2"), &config).unwrap();
    assert_eq!(single.len(), 1);
}

/// The first grid point moved to t = 0, or just inside the admissible side.
fn near_zero(case: &IdentityCase) -> Option<Point> {
    let p = case.grid.first()?;
    let t = p.try_get("t")?;
    [0.0, 1e-6f64.copysign(t)].into_iter().map(|t0| p.with("t", t0)).find(|q| (case.hypotheses)(q).is_ok())
}

#[test]
fn generating_functions_reduce_at_t_zero() {
    let config = SuiteConfig::default();
    let mut checked = 0;
    // the inner argument 1 − t of this case reaches the convergence boundary at t = 0
    let boundary = ["normalized-gf-integral"];
    for case in registry().iter().filter(|c| c.kind != Kind::Audit && !boundary.contains(&c.id)) {
        let Some(point) = near_zero(case) else { continue };
        let r = case.run(&point, &config);
        assert!(r.pass(), "{} at {}: {:?} {}", case.id, point, r.outcome, r.diagnostics);
        checked += 1;
    }
    assert!(checked >= 15, "only {checked} cases carry t");
}

/// Left side of `id` at its first grid point with `overrides` applied.
fn lhs_at_zero(id: &str, overrides: Point) -> (Point, Complex64) {
    let case = registry().into_iter().find(|c| c.id == id).unwrap();
    let point = overrides.0.iter().fold(case.grid[0].clone(), |p, &(k, v)| p.with(k, v));
    let r = case.run(&point, &SuiteConfig::default());
    assert!(r.pass(), "{id}: {}", r.diagnostics);
    (point, r.lhs)
}

#[test]
fn t_zero_left_sides_are_single_functions() {
    let policy = SuiteConfig::default().policy;

    let (p, lhs) = lhs_at_zero("laplace-gf-p1q1", Point::new(&[("z", 0.4), ("t", 0.0)]));
    let params = FoxWrightParams::new(vec![(p.get("alpha"), p.get("A"))], vec![(p.get("beta"), p.get("A"))]).unwrap();
    let single = gamma(p.get("lambda")).unwrap() * fox_wright(&params, p.get("z"), &policy).unwrap().value;
    assert!((lhs.re - single).abs() <= 1e-12 * single.abs());

    let (p, lhs) = lhs_at_zero("shifted-gamma-gf-exponential", Point::new(&[("z", 0.5), ("t", 0.0)]));
    assert!((lhs.re - p.get("z").exp()).abs() <= 1e-13);

    let (p, lhs) = lhs_at_zero("mathieu-gf", Point::new(&[("t", 0.0)]));
    let spec = MathieuSpec::new(p.get("mu"), p.get("alpha"), 0.0, p.get("r")).unwrap();
    let single = gamma(p.get("mu")).unwrap() * mathieu_series(&spec, &policy).unwrap().value;
    assert!((lhs.re - single).abs() <= 1e-12 * single);

    let (p, lhs) = lhs_at_zero("lerch-gf-phi", Point::new(&[("t", -1e-9)]));
    let single = lerch_phi(Complex64::new(p.get("z"), 0.0), p.get("s"), p.get("a")).unwrap();
    assert!((lhs - single).norm() <= 1e-8 * single.norm());
}
