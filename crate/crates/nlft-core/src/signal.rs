//! Sampled signals and matrix-valued spectral sequences.

use crate::mat2::Mat2;
use crate::{Error, Result};
use num_complex::Complex64 as C64;

/// A length-`N` vector of samples `u_0..u_{N-1}`.
///
/// The `real` flag records that every imaginary part is exactly zero; the
/// series-expansion operations require it because their sign bookkeeping
/// (collecting all copies of `J` to the right) only holds for real samples.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    samples: Vec<C64>,
    real: bool,
}

impl Signal {
    /// A real-valued signal.
    pub fn real(samples: Vec<f64>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptySignal);
        }
        Ok(Self {
            samples: samples.into_iter().map(|x| C64::new(x, 0.0)).collect(),
            real: true,
        })
    }

    /// A complex signal; the real flag is set when every imaginary part is
    /// exactly zero.
    pub fn complex(samples: Vec<C64>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptySignal);
        }
        let real = samples.iter().all(|z| z.im == 0.0);
        Ok(Self { samples, real })
    }

    /// The constant signal `u_j = u` on `n` samples.
    ///
    /// # Panics
    ///
    /// Panics when `n == 0`.
    pub fn constant(u: f64, n: usize) -> Self {
        assert!(n > 0, "constant signal needs at least one sample");
        Self::real(vec![u; n]).expect("n > 0")
    }

    /// Left-endpoint samples `u_l = f(l/N)` of a profile on `[0, 1]`.
    ///
    /// # Panics
    ///
    /// Panics when `n == 0`.
    pub fn sample_profile(f: impl Fn(f64) -> f64, n: usize) -> Self {
        assert!(n > 0, "profile needs at least one sample");
        Self::real((0..n).map(|l| f(l as f64 / n as f64)).collect()).expect("n > 0")
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees at least one sample
    }

    pub fn is_real(&self) -> bool {
        self.real
    }

    pub fn samples(&self) -> &[C64] {
        &self.samples
    }

    /// Real parts of the samples.
    ///
    /// # Panics
    ///
    /// Panics when the signal is not real-valued.
    pub fn real_samples(&self) -> Vec<f64> {
        assert!(self.real, "signal is not real-valued");
        self.samples.iter().map(|z| z.re).collect()
    }

    /// The sample of the associated step function at `x` in `[0, 1]`:
    /// `u(x) = u_l` for `x` in `[l/N, (l+1)/N)`, with `u(1) = u_{N-1}`.
    pub fn step_value(&self, x: f64) -> C64 {
        let idx = ((x * self.len() as f64).floor() as usize).min(self.len() - 1);
        self.samples[idx]
    }

    /// Checks that the samples are a probability vector: real, non-negative,
    /// summing to 1 within `tol`.
    pub fn check_simplex(&self, tol: f64) -> Result<()> {
        let mut deviation: f64 = 0.0;
        let mut sum = 0.0;
        for z in &self.samples {
            deviation = deviation.max(z.im.abs()).max((-z.re).max(0.0));
            sum += z.re;
        }
        deviation = deviation.max((sum - 1.0).abs());
        if deviation > tol {
            return Err(Error::NotSimplex { deviation });
        }
        Ok(())
    }
}

/// A transform evaluated at every spectral index `n` in `{0..N-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralSequence {
    values: Vec<Mat2>,
}

impl SpectralSequence {
    /// # Panics
    ///
    /// Panics on an empty value list.
    pub fn new(values: Vec<Mat2>) -> Self {
        assert!(!values.is_empty(), "spectral sequence cannot be empty");
        Self { values }
    }

    pub fn grid(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, n: usize) -> &Mat2 {
        &self.values[n]
    }

    pub fn values(&self) -> &[Mat2] {
        &self.values
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_signal_rejected() {
        assert_eq!(Signal::real(vec![]), Err(Error::EmptySignal));
        assert_eq!(Signal::complex(vec![]), Err(Error::EmptySignal));
    }

    #[test]
    fn real_flag_tracks_imaginary_parts() {
        let s = Signal::complex(vec![C64::new(1.0, 0.0), C64::new(0.5, 0.0)]).unwrap();
        assert!(s.is_real());
        let s = Signal::complex(vec![C64::new(1.0, 1e-300)]).unwrap();
        assert!(!s.is_real());
    }

    #[test]
    fn step_value_selects_cells() {
        let s = Signal::real(vec![10.0, 20.0, 30.0, 40.0]).unwrap();
        assert_eq!(s.step_value(0.0).re, 10.0);
        assert_eq!(s.step_value(0.26).re, 20.0);
        assert_eq!(s.step_value(0.999).re, 40.0);
        assert_eq!(s.step_value(1.0).re, 40.0, "right endpoint clamps");
    }

    #[test]
    fn simplex_check() {
        let u = Signal::real(vec![0.25; 4]).unwrap();
        assert!(u.check_simplex(1e-12).is_ok());
        let bad = Signal::real(vec![0.5, 0.6]).unwrap();
        assert!(matches!(
            bad.check_simplex(1e-12),
            Err(Error::NotSimplex { .. })
        ));
        let neg = Signal::real(vec![-0.1, 1.1]).unwrap();
        assert!(neg.check_simplex(1e-12).is_err());
    }
}
