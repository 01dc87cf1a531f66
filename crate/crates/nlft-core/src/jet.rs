//! Truncated univariate Taylor arithmetic with scalar and 2×2-matrix
//! coefficients. Products truncate at a fixed order cap, which turns
//! high-order derivative extraction into exact (up to rounding) algebra:
//! the `d`-th derivative at 0 is `d!` times coefficient `d`.

use crate::mat2::Mat2;
use num_complex::Complex64 as C64;

/// A real Taylor polynomial `f_0 + f_1 s + ... + f_D s^D` truncated at
/// order `D`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarJet {
    coeffs: Vec<f64>,
}

impl ScalarJet {
    pub fn constant(value: f64, order: usize) -> Self {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = value;
        Self { coeffs }
    }

    /// The jet of `s ↦ a·s`.
    pub fn linear(a: f64, order: usize) -> Self {
        let mut coeffs = vec![0.0; order + 1];
        if order >= 1 {
            coeffs[1] = a;
        }
        Self { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<f64>) -> Self {
        assert!(!coeffs.is_empty(), "a jet has at least the constant term");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs[k]
    }

    /// Truncated product.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![0.0; order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        Self { coeffs }
    }

    /// Cosine and sine of the jet, computed jointly through the derivative
    /// recurrence `cos(f)' = -f' sin(f)`, `sin(f)' = f' cos(f)`:
    ///
    /// `(k+1) c_{k+1} = -Σ_{i+j=k} (i+1) f_{i+1} s_j` and symmetrically for
    /// `s`, starting from `c_0 = cos(f_0)`, `s_0 = sin(f_0)`.
    pub fn cos_sin(&self) -> (Self, Self) {
        let order = self.order();
        let mut c = vec![0.0; order + 1];
        let mut s = vec![0.0; order + 1];
        c[0] = self.coeffs[0].cos();
        s[0] = self.coeffs[0].sin();
        for k in 0..order {
            let mut dc = 0.0;
            let mut ds = 0.0;
            for i in 0..=k {
                let df = (i + 1) as f64 * self.coeffs.get(i + 1).copied().unwrap_or(0.0);
                dc -= df * s[k - i];
                ds += df * c[k - i];
            }
            c[k + 1] = dc / (k + 1) as f64;
            s[k + 1] = ds / (k + 1) as f64;
        }
        (Self { coeffs: c }, Self { coeffs: s })
    }
}

/// A Taylor polynomial with `Mat2` coefficients, truncated at a fixed order.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixJet {
    coeffs: Vec<Mat2>,
}

impl MatrixJet {
    pub fn identity(order: usize) -> Self {
        Self::constant(Mat2::identity(), order)
    }

    pub fn constant(m: Mat2, order: usize) -> Self {
        let mut coeffs = vec![Mat2::zero(); order + 1];
        coeffs[0] = m;
        Self { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Mat2>) -> Self {
        assert!(!coeffs.is_empty(), "a jet has at least the constant term");
        Self { coeffs }
    }

    /// The jet `Σ_k f_k M s^k` of a scalar jet times a constant matrix.
    pub fn from_scalar(f: &ScalarJet, m: &Mat2) -> Self {
        Self {
            coeffs: (0..=f.order())
                .map(|k| m.scale(C64::new(f.coeff(k), 0.0)))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Mat2 {
        &self.coeffs[k]
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.order(), rhs.order(), "jet orders must match");
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| *a + *b)
                .collect(),
        }
    }

    /// Truncated product; coefficient order follows the matrix product
    /// (`self` on the left).
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Mat2::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] = coeffs[i + j] + *a * *b;
            }
        }
        Self { coeffs }
    }

    pub fn scale(&self, s: C64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|m| m.scale(s)).collect(),
        }
    }

    /// Horner evaluation at a scalar point.
    pub fn eval(&self, x: C64) -> Mat2 {
        let mut acc = Mat2::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(x) + *c;
        }
        acc
    }
}
