//! Compensated (Neumaier) accumulation.

use num_complex::Complex64;

/// Neumaier's improvement of Kahan summation; also correct when an addend
/// exceeds the running sum in magnitude.
#[derive(Debug, Clone, Copy, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
    abs: f64,
}

impl Neumaier {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
        self.abs += x.abs();
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    /// Sum of absolute values of all addends.
    #[inline]
    pub fn abs_sum(&self) -> f64 {
        self.abs
    }
}

/// Componentwise [`Neumaier`] accumulation of complex addends.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierComplex {
    re: Neumaier,
    im: Neumaier,
    abs: f64,
}

impl NeumaierComplex {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: Complex64) {
        self.re.add(x.re);
        self.im.add(x.im);
        self.abs += x.norm();
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }

    #[inline]
    pub fn abs_sum(&self) -> f64 {
        self.abs
    }
}

/// Compensated sum of a slice.
pub fn neumaier_sum(xs: &[f64]) -> f64 {
    let mut acc = Neumaier::new();
    for &x in xs {
        acc.add(x);
    }
    acc.value()
}
