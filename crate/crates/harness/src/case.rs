//! Identity cases, their evaluations and the reports built from them.

use num_complex::Complex64;
use serde::ser::{Serialize, SerializeMap, Serializer};

use foxwright::series::TruncationPolicy;

/// Named parameter values of one grid point, in declaration order.
#[derive(Debug, Clone, PartialEq)]
pub struct Point(pub Vec<(&'static str, f64)>);

impl Point {
    pub fn new(pairs: &[(&'static str, f64)]) -> Self {
        Self(pairs.to_vec())
    }

    /// Value of `name`; panics if absent, since grids and evaluators are
    /// declared together.
    pub fn get(&self, name: &str) -> f64 {
        self.try_get(name).unwrap_or_else(|| panic!("grid point has no parameter {name}"))
    }

    pub fn try_get(&self, name: &str) -> Option<f64> {
        self.0.iter().find(|(k, _)| *k == name).map(|&(_, v)| v)
    }

    pub fn with(&self, name: &'static str, value: f64) -> Self {
        let mut out = self.clone();
        match out.0.iter_mut().find(|(k, _)| *k == name) {
            Some(slot) => slot.1 = value,
            None => out.0.push((name, value)),
        }
        out
    }
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

/// How a case turns an evaluation into a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// LHS and RHS agree within tolerance.
    Equality,
    /// A closed constant is approached by a double series.
    DoubleSeriesClosedForm,
    /// An ascending chain of bounds; every link must hold.
    InequalityChain,
    /// A printed closed form is compared with an independent oracle; the
    /// case passes when the disagreement exceeds tolerance.
    Audit,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Equality => "equality",
            Kind::DoubleSeriesClosedForm => "double-series-closed-form",
            Kind::InequalityChain => "inequality-chain",
            Kind::Audit => "audit",
        }
    }
}

/// Acceptance thresholds of a case.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Tolerance {
    pub const fn new(abs: f64, rel: f64) -> Self {
        Self { abs, rel }
    }

    pub fn accepts(&self, abs_err: f64, rel_err: f64) -> bool {
        abs_err <= self.abs || rel_err <= self.rel
    }
}

/// Knobs shared by every case in a suite run.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SuiteConfig {
    pub policy: TruncationPolicy,
    /// Replaces the absolute tolerance of every case.
    pub abs_tol: Option<f64>,
    /// Replaces the relative tolerance of every case.
    pub rel_tol: Option<f64>,
}

impl SuiteConfig {
    pub fn tolerance_for(&self, case: &IdentityCase) -> Tolerance {
        Tolerance {
            abs: self.abs_tol.unwrap_or(case.tolerance.abs),
            rel: self.rel_tol.unwrap_or(case.tolerance.rel),
        }
    }
}

/// Raw output of a case evaluator.
#[derive(Debug, Clone, PartialEq)]
pub enum Evaluation {
    Values { lhs: Complex64, rhs: Complex64, diagnostics: String },
    /// Values expected in ascending order, with a label per link.
    Chain { links: Vec<(&'static str, f64)>, diagnostics: String },
}

impl Evaluation {
    pub fn real(lhs: f64, rhs: f64, diagnostics: impl Into<String>) -> Self {
        Self::Values { lhs: Complex64::new(lhs, 0.0), rhs: Complex64::new(rhs, 0.0), diagnostics: diagnostics.into() }
    }

    pub fn complex(lhs: Complex64, rhs: Complex64, diagnostics: impl Into<String>) -> Self {
        Self::Values { lhs, rhs, diagnostics: diagnostics.into() }
    }
}

pub type Evaluator = fn(&Point, &SuiteConfig) -> foxwright::Result<Evaluation>;
pub type Hypotheses = fn(&Point) -> Result<(), String>;

/// One registered identity or inequality.
#[derive(Debug, Clone)]
pub struct IdentityCase {
    pub id: &'static str,
    /// The mathematical statement being checked.
    pub anchor: &'static str,
    pub description: &'static str,
    pub kind: Kind,
    pub tolerance: Tolerance,
    pub grid: Vec<Point>,
    pub hypotheses: Hypotheses,
    pub evaluate: Evaluator,
}

impl IdentityCase {
    /// Evaluates one point; failures become non-passing reports.
    pub fn run(&self, point: &Point, config: &SuiteConfig) -> IdentityReport {
        let nan = Complex64::new(f64::NAN, f64::NAN);
        if let Err(reason) = (self.hypotheses)(point) {
            return IdentityReport {
                id: self.id.to_string(),
                point: point.clone(),
                lhs: nan,
                rhs: nan,
                abs_err: f64::NAN,
                rel_err: f64::NAN,
                outcome: Outcome::Skipped(reason),
                diagnostics: String::new(),
            };
        }
        let tol = config.tolerance_for(self);
        match (self.evaluate)(point, config) {
            Ok(eval) => IdentityReport::from_evaluation(self.id, point.clone(), self.kind, tol, eval),
            Err(e) => IdentityReport {
                id: self.id.to_string(),
                point: point.clone(),
                lhs: nan,
                rhs: nan,
                abs_err: f64::NAN,
                rel_err: f64::NAN,
                outcome: Outcome::Fail,
                diagnostics: format!("evaluation failed: {e}"),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Pass,
    Fail,
    Skipped(String),
}

/// Result of one case at one grid point.
///
/// For inequality chains `lhs` is the smallest link slack, `rhs` is zero and
/// `abs_err` is the violation max(0, −slack).
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityReport {
    pub id: String,
    pub point: Point,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub outcome: Outcome,
    pub diagnostics: String,
}

impl IdentityReport {
    pub fn pass(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn from_evaluation(id: &str, point: Point, kind: Kind, tol: Tolerance, eval: Evaluation) -> Self {
        let (lhs, rhs, abs_err, rel_err, diagnostics) = match eval {
            Evaluation::Values { lhs, rhs, diagnostics } => {
                let (abs_err, rel_err) = errors(lhs, rhs);
                (lhs, rhs, abs_err, rel_err, diagnostics)
            }
            Evaluation::Chain { links, diagnostics } => {
                let mut slack = f64::INFINITY;
                let mut worst = "";
                for pair in links.windows(2) {
                    let s = pair[1].1 - pair[0].1;
                    if !(s >= slack) {
                        slack = s;
                        worst = pair[0].0;
                    }
                }
                let scale = links.iter().fold(0.0f64, |m, &(_, v)| m.max(v.abs()));
                let abs_err = (-slack).max(0.0);
                let rel_err = if abs_err == 0.0 { 0.0 } else { abs_err / scale };
                let values: Vec<String> = links.iter().map(|(k, v)| format!("{k}={v:.12e}")).collect();
                let diagnostics = format!("{}; tightest link after {worst}; {diagnostics}", values.join(" ≤ "));
                (Complex64::new(slack, 0.0), Complex64::new(0.0, 0.0), abs_err, rel_err, diagnostics)
            }
        };
        let pass = verdict(kind, tol, abs_err, rel_err);
        Self {
            id: id.to_string(),
            point,
            lhs,
            rhs,
            abs_err,
            rel_err,
            outcome: if pass { Outcome::Pass } else { Outcome::Fail },
            diagnostics,
        }
    }
}

/// |lhs − rhs| and the same relative to |rhs| (zero when both vanish).
pub fn errors(lhs: Complex64, rhs: Complex64) -> (f64, f64) {
    let abs_err = (lhs - rhs).norm();
    let rel_err = if abs_err == 0.0 { 0.0 } else { abs_err / rhs.norm() };
    (abs_err, rel_err)
}

/// Pass verdict of a report given its kind, tolerance and errors.
pub fn verdict(kind: Kind, tol: Tolerance, abs_err: f64, rel_err: f64) -> bool {
    match kind {
        Kind::Audit => !tol.accepts(abs_err, rel_err) && abs_err.is_finite(),
        // slack is absolute; the relative threshold does not apply to chains
        Kind::InequalityChain => abs_err <= tol.abs,
        _ => tol.accepts(abs_err, rel_err),
    }
}

/// Pass, fail and skip counts of a suite run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(reports: &[IdentityReport]) -> Self {
        let mut s = Self::default();
        for r in reports {
            match r.outcome {
                Outcome::Pass => s.passed += 1,
                Outcome::Fail => s.failed += 1,
                Outcome::Skipped(_) => s.skipped += 1,
            }
        }
        s
    }
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "passed {} / failed {} / skipped {}", self.passed, self.failed, self.skipped)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_slack_and_violation() {
        let tol = Tolerance::new(1e-10, 1e-10);
        let ok = Evaluation::Chain { links: vec![("a", 1.0), ("b", 2.0), ("c", 2.5)], diagnostics: String::new() };
        let r = IdentityReport::from_evaluation("x", Point::new(&[]), Kind::InequalityChain, tol, ok);
        assert!(r.pass());
        assert_eq!(r.lhs.re, 0.5);
        let bad = Evaluation::Chain { links: vec![("a", 1.0), ("b", 0.9)], diagnostics: String::new() };
        let r = IdentityReport::from_evaluation("x", Point::new(&[]), Kind::InequalityChain, tol, bad);
        assert!(!r.pass());
        assert!((r.abs_err - 0.1).abs() < 1e-15);
    }

    #[test]
    fn audit_inverts_the_verdict() {
        let tol = Tolerance::new(1e-9, 1e-9);
        assert!(verdict(Kind::Audit, tol, 0.5, 0.5));
        assert!(!verdict(Kind::Audit, tol, 0.0, 0.0));
        assert!(!verdict(Kind::Audit, tol, f64::NAN, f64::NAN));
        assert!(verdict(Kind::Equality, tol, 1e-12, 1.0));
    }

    #[test]
    fn point_lookup_and_override() {
        let p = Point::new(&[("a", 1.0), ("t", 0.5)]);
        assert_eq!(p.get("t"), 0.5);
        assert_eq!(p.with("t", 0.0).get("t"), 0.0);
        assert_eq!(p.with("z", 2.0).try_get("z"), Some(2.0));
        assert_eq!(p.to_string(), "a=1,t=0.5");
    }
}
