//! Truncation policy, series results and the generic summation driver.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::sum::{Neumaier, NeumaierComplex};

/// Stopping rule for truncated series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy {
    pub rel_tol: f64,
    pub consecutive_small: usize,
    pub max_terms: usize,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self { rel_tol: 1e-14, consecutive_small: 3, max_terms: 10_000 }
    }
}

impl TruncationPolicy {
    pub fn new(rel_tol: f64, consecutive_small: usize, max_terms: usize) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol < 1.0) {
            return Err(Error::Domain(format!("rel_tol must lie in (0, 1), got {rel_tol}")));
        }
        if consecutive_small == 0 || max_terms < consecutive_small {
            return Err(Error::Domain(format!(
                "need 1 ≤ consecutive_small ≤ max_terms, got {consecutive_small} and {max_terms}"
            )));
        }
        Ok(Self { rel_tol, consecutive_small, max_terms })
    }

    pub fn with_max_terms(self, max_terms: usize) -> Self {
        Self { max_terms: max_terms.max(self.consecutive_small), ..self }
    }

    pub fn with_rel_tol(self, rel_tol: f64) -> Self {
        Self { rel_tol, ..self }
    }
}

/// Outcome of a truncated series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult<T = f64> {
    pub value: T,
    pub terms_used: usize,
    pub tail_estimate: f64,
    pub converged: bool,
    /// Sum of the magnitudes of all terms; `abs_sum / |value|` bounds the
    /// cancellation loss.
    pub abs_sum: f64,
}

impl<T> SeriesResult<T> {
    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SeriesResult<U> {
        SeriesResult {
            value: f(self.value),
            terms_used: self.terms_used,
            tail_estimate: self.tail_estimate,
            converged: self.converged,
            abs_sum: self.abs_sum,
        }
    }
}

impl SeriesResult<f64> {
    pub fn scaled(self, c: f64) -> Self {
        Self {
            value: self.value * c,
            tail_estimate: self.tail_estimate * c.abs(),
            abs_sum: self.abs_sum * c.abs(),
            ..self
        }
    }
}

/// Scalar types the driver can accumulate.
pub trait SeriesValue: Copy {
    type Acc: Default;
    fn push(acc: &mut Self::Acc, x: Self);
    fn total(acc: &Self::Acc) -> Self;
    fn abs_total(acc: &Self::Acc) -> f64;
    fn magnitude(self) -> f64;
}

impl SeriesValue for f64 {
    type Acc = Neumaier;
    fn push(acc: &mut Neumaier, x: f64) {
        acc.add(x)
    }
    fn total(acc: &Neumaier) -> f64 {
        acc.value()
    }
    fn abs_total(acc: &Neumaier) -> f64 {
        acc.abs_sum()
    }
    fn magnitude(self) -> f64 {
        self.abs()
    }
}

impl SeriesValue for Complex64 {
    type Acc = NeumaierComplex;
    fn push(acc: &mut NeumaierComplex, x: Complex64) {
        acc.add(x)
    }
    fn total(acc: &NeumaierComplex) -> Complex64 {
        acc.value()
    }
    fn abs_total(acc: &NeumaierComplex) -> f64 {
        acc.abs_sum()
    }
    fn magnitude(self) -> f64 {
        self.norm()
    }
}

/// Sums `term(0) + term(1) + …` under `policy`.
///
/// Stops once `consecutive_small` successive terms satisfy
/// |term| ≤ rel_tol·|partial sum| and the geometric tail |t_K|·r/(1−r),
/// r = |t_K/t_{K−1}| < 1, is within rel_tol·max(1, |partial sum|).
/// Terms are never counted as small while the partial sum is still zero.
/// Exhausting `max_terms` yields `converged = false`.
pub fn sum_series<T, F>(policy: &TruncationPolicy, mut term: F) -> Result<SeriesResult<T>>
where
    T: SeriesValue,
    F: FnMut(usize) -> Result<T>,
{
    let mut acc = T::Acc::default();
    let mut small_run = 0usize;
    let mut prev_mag = f64::NAN;
    let mut tail = f64::INFINITY;
    for k in 0..policy.max_terms {
        let t = term(k)?;
        let mag = t.magnitude();
        if !mag.is_finite() {
            return Err(Error::Overflow { k });
        }
        T::push(&mut acc, t);
        let s = T::total(&acc).magnitude();
        if s > 0.0 && mag <= policy.rel_tol * s {
            small_run += 1;
        } else {
            small_run = 0;
        }
        let r = if k == 0 {
            f64::NAN
        } else if mag == 0.0 {
            0.0
        } else {
            mag / prev_mag
        };
        tail = if r < 1.0 { mag * r / (1.0 - r) } else { f64::INFINITY };
        prev_mag = mag;
        if small_run >= policy.consecutive_small && tail <= policy.rel_tol * s.max(1.0) {
            return Ok(SeriesResult {
                value: T::total(&acc),
                terms_used: k + 1,
                tail_estimate: tail,
                converged: true,
                abs_sum: T::abs_total(&acc),
            });
        }
    }
    Ok(SeriesResult {
        value: T::total(&acc),
        terms_used: policy.max_terms,
        tail_estimate: tail,
        converged: false,
        abs_sum: T::abs_total(&acc),
    })
}
