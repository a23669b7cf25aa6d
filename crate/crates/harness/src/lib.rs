//! Numerical checks of generating-function identities, double-series closed
//! forms and inequality chains built on the `foxwright` library.
//!
//! Every case pairs a left-hand side and a right-hand side computed along
//! independent paths (series against quadrature, truncated sums against
//! closed forms) over a fixed grid of hypothesis-respecting points.

pub mod case;
pub mod cases;
pub mod tailfit;

use rayon::prelude::*;

pub use case::{
    Evaluation, IdentityCase, IdentityReport, Kind, Outcome, Point, SuiteConfig, Summary, Tolerance,
};

/// All registered cases in a fixed order.
pub fn registry() -> Vec<IdentityCase> {
    use cases::{fox_wright as fw, lerch, mathieu};
    let mut out = vec![
        fw::laplace_gf_case(),
        fw::laplace_gf_printed_case(),
        fw::laplace_gf_bounds_case(),
        fw::normalized_gf_case(),
        fw::shifted_gamma_gf_case(),
        fw::exponential_gf_case(),
        fw::hypergeometric_gf_case(),
        mathieu::mathieu_gf_case(),
        mathieu::mathieu_gf_zeta2_case(),
        mathieu::mathieu_series_integral_case(),
    ];
    out.extend(mathieu::double_series_cases());
    out.extend([
        lerch::lerch_gf_case(),
        lerch::lerch_gf_phi_case(),
        lerch::lerch_gf_unit_circle_case(),
        lerch::lerch_gf_unit_circle_printed_case(),
        lerch::lerch_double_series_case(),
        lerch::lerch_double_series_collapsed_case(),
        lerch::lerch_double_series_unit_circle_case(),
    ]);
    out.extend(lerch::polylog_cases());
    out
}

/// Grid points that violate their own case's hypotheses, as
/// (id, point, reason).
pub fn invalid_grid_points(cases: &[IdentityCase]) -> Vec<(&'static str, Point, String)> {
    cases
        .iter()
        .flat_map(|c| {
            c.grid.iter().filter_map(move |p| (c.hypotheses)(p).err().map(|e| (c.id, p.clone(), e)))
        })
        .collect()
}

/// Cases whose id matches a shell-style glob.
pub fn select(pattern: &str) -> Result<Vec<IdentityCase>, glob::PatternError> {
    let pattern = glob::Pattern::new(pattern)?;
    Ok(registry().into_iter().filter(|c| pattern.matches(c.id)).collect())
}

/// Runs every grid point of every case matching `filter` (all cases when
/// `None`). Points run in parallel; reports keep registry and grid order.
pub fn run_suite(filter: Option<&str>, config: &SuiteConfig) -> Result<Vec<IdentityReport>, glob::PatternError> {
    let cases = select(filter.unwrap_or("*"))?;
    Ok(run_cases(&cases, config))
}

pub fn run_cases(cases: &[IdentityCase], config: &SuiteConfig) -> Vec<IdentityReport> {
    let jobs: Vec<(&IdentityCase, &Point)> = cases.iter().flat_map(|c| c.grid.iter().map(move |p| (c, p))).collect();
    jobs.par_iter().map(|(c, p)| c.run(p, config)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_grids_nonempty() {
        let cases = registry();
        let mut ids: Vec<&str> = cases.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        assert_eq!(before, ids.len());
        assert!(cases.iter().all(|c| !c.grid.is_empty() && !c.anchor.is_empty()));
        assert!(cases.iter().all(|c| c.tolerance.abs > 0.0 && c.tolerance.rel > 0.0));
    }

    #[test]
    fn every_grid_point_satisfies_its_hypotheses() {
        let bad = invalid_grid_points(&registry());
        assert!(bad.is_empty(), "{bad:?}");
    }

    #[test]
    fn filter_matching_nothing_is_empty() {
        assert!(run_suite(Some("no-such-case-*"), &SuiteConfig::default()).unwrap().is_empty());
        assert!(run_suite(Some("[unclosed"), &SuiteConfig::default()).is_err());
    }
}
