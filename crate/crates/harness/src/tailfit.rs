//! Sums of slowly decaying sequences whose terms follow an asymptotic
//! power law T_k ~ Σ_j c_j k^{−(p+j)}.
//!
//! Terms up to K are summed directly; the c_j are fitted by least squares on
//! the last terms and the remainder is Σ_j c_j ζ(p+j, K+1).

use nalgebra::{DMatrix, DVector};

use foxwright::error::{Error, Result};
use foxwright::sum::Neumaier;
use foxwright::zeta::hurwitz_zeta;

/// Layout of a power-law tail fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerTail {
    /// Leading decay exponent p > 1.
    pub exponent: f64,
    /// Last directly summed index K.
    pub last: usize,
    /// Number of fitted terms in the expansion.
    pub order: usize,
    /// Number of trailing terms used by the fit.
    pub window: usize,
}

/// Sum with its remainder and an error estimate from refitting at one lower
/// order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailedSum {
    pub value: f64,
    pub remainder: f64,
    pub error: f64,
}

impl PowerTail {
    pub fn sum(&self, mut term: impl FnMut(usize) -> Result<f64>) -> Result<TailedSum> {
        if !(self.exponent > 1.0) || self.order == 0 || self.window <= self.order + 1 || self.window > self.last {
            return Err(Error::Domain(format!("invalid power-law tail layout {self:?}")));
        }
        let mut acc = Neumaier::new();
        let mut terms = Vec::with_capacity(self.last + 1);
        for k in 0..=self.last {
            let t = term(k)?;
            acc.add(t);
            terms.push(t);
        }
        let remainder = self.remainder(&terms, self.order)?;
        let coarse = self.remainder(&terms, self.order - 1).unwrap_or(f64::INFINITY);
        let error = if self.order > 1 { (remainder - coarse).abs() } else { remainder.abs() };
        Ok(TailedSum { value: acc.value() + remainder, remainder, error })
    }

    fn remainder(&self, terms: &[f64], order: usize) -> Result<f64> {
        if order == 0 {
            return Ok(0.0);
        }
        let k_last = self.last as f64;
        let first = self.last + 1 - self.window;
        // basis (k/K)^{−(p+j)} keeps the columns of comparable size
        let a = DMatrix::from_fn(self.window, order, |i, j| {
            ((first + i) as f64 / k_last).powf(-(self.exponent + j as f64))
        });
        let b = DVector::from_fn(self.window, |i, _| terms[first + i]);
        let svd = a.svd(true, true);
        let c = svd.solve(&b, 1e-14).map_err(|e| Error::Domain(format!("tail fit failed: {e}")))?;
        let mut tail = Neumaier::new();
        for j in 0..order {
            let p = self.exponent + j as f64;
            tail.add(c[j] * k_last.powf(p) * hurwitz_zeta(p, k_last + 1.0)?);
        }
        Ok(tail.value())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn recovers_shifted_zeta() {
        // Σ_{k≥0} (k+2)^{−2.5} = ζ(2.5, 2); terms expand in k^{−2.5−j}
        let tail = PowerTail { exponent: 2.5, last: 200, order: 5, window: 80 };
        let s = tail.sum(|k| Ok((k as f64 + 2.0).powf(-2.5))).unwrap();
        assert_relative_eq!(s.value, hurwitz_zeta(2.5, 2.0).unwrap(), max_relative = 1e-10);
        assert!(s.error < 1e-8);
    }

    #[test]
    fn rejects_bad_layout() {
        let tail = PowerTail { exponent: 1.0, last: 10, order: 2, window: 5 };
        assert!(tail.sum(|_| Ok(0.0)).is_err());
    }
}
