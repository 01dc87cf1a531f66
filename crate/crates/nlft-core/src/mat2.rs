//! 2×2 complex matrix algebra: diagonal phase matrices `E(x, n)`, the
//! rotation generator `J`, planar rotations `R(θ)`, and a closed-form
//! exponential for traceless matrices.
//!
//! Matrices are plain `Copy` values; every operation returns a fresh value,
//! so they can be shared and sent across threads freely.

use num_complex::Complex64 as C64;
use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

/// A 2×2 complex matrix with `f64` components, stored row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub m: [[C64; 2]; 2],
}

impl Mat2 {
    pub const fn new(a11: C64, a12: C64, a21: C64, a22: C64) -> Self {
        Self {
            m: [[a11, a12], [a21, a22]],
        }
    }

    pub fn identity() -> Self {
        Self::diag(C64::ONE, C64::ONE)
    }

    pub fn zero() -> Self {
        Self::diag(C64::ZERO, C64::ZERO)
    }

    pub fn diag(a: C64, d: C64) -> Self {
        Self::new(a, C64::ZERO, C64::ZERO, d)
    }

    pub fn trace(&self) -> C64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn det(&self) -> C64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::new(
            self.m[0][0].conj(),
            self.m[1][0].conj(),
            self.m[0][1].conj(),
            self.m[1][1].conj(),
        )
    }

    /// Entry-wise scaling.
    pub fn scale(&self, s: C64) -> Self {
        Self::new(
            s * self.m[0][0],
            s * self.m[0][1],
            s * self.m[1][0],
            s * self.m[1][1],
        )
    }

    /// Largest entry modulus (max norm).
    pub fn max_norm(&self) -> f64 {
        self.m
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Max norm of the entry-wise difference.
    pub fn max_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_norm()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_diff(other) <= tol
    }

    /// Splits the matrix as `s·I + D` with `s` the mean diagonal entry and
    /// returns `(s, max-norm of D)`. A small second component certifies the
    /// matrix is a scalar multiple of the identity.
    pub fn scalar_identity_part(&self) -> (C64, f64) {
        let s = (self.m[0][0] + self.m[1][1]) / 2.0;
        let dev = (*self - Self::diag(s, s)).max_norm();
        (s, dev)
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.m[0][0] + rhs.m[0][0],
            self.m[0][1] + rhs.m[0][1],
            self.m[1][0] + rhs.m[1][0],
            self.m[1][1] + rhs.m[1][1],
        )
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.m[0][0] - rhs.m[0][0],
            self.m[0][1] - rhs.m[0][1],
            self.m[1][0] - rhs.m[1][0],
            self.m[1][1] - rhs.m[1][1],
        )
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self.scale(-C64::ONE)
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let a = &self.m;
        let b = &rhs.m;
        Mat2::new(
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        )
    }
}

/// `E(x, n) = diag(e^{iπxn}, e^{-iπxn})`.
pub fn e_matrix(x: f64, n: i64) -> Mat2 {
    let phase = PI * x * n as f64;
    Mat2::diag(C64::cis(phase), C64::cis(-phase))
}

/// `E_δ(l, n) = E(l, n/N) = diag(e^{iπln/N}, e^{-iπln/N})` on a grid of size
/// `N`. The shift `l` may be negative (the transforms use `-2l`).
///
/// # Panics
///
/// Panics when `grid == 0`.
pub fn e_delta(l: i64, n: i64, grid: usize) -> Mat2 {
    assert!(grid > 0, "e_delta requires a positive grid size");
    let phase = PI * l as f64 * n as f64 / grid as f64;
    Mat2::diag(C64::cis(phase), C64::cis(-phase))
}

/// `J = [[0, 1], [-1, 0]]`.
pub fn j_matrix() -> Mat2 {
    Mat2::new(C64::ZERO, C64::ONE, -C64::ONE, C64::ZERO)
}

/// `J^d` for any integer `d` (negative powers are inverses). `J` has period
/// four: `J^0 = I`, `J^1 = J`, `J^2 = -I`, `J^3 = -J`.
pub fn j_power(d: i64) -> Mat2 {
    match d.rem_euclid(4) {
        0 => Mat2::identity(),
        1 => j_matrix(),
        2 => -Mat2::identity(),
        _ => -j_matrix(),
    }
}

/// `R(θ) = [[cos θ, sin θ], [-sin θ, cos θ]] = cos θ · I + sin θ · J`.
pub fn rotation(theta: f64) -> Mat2 {
    let (s, c) = theta.sin_cos();
    let (s, c) = (C64::new(s, 0.0), C64::new(c, 0.0));
    Mat2::new(c, s, -s, c)
}

/// `sin(ω)/ω`, by a 4-term Taylor series near zero to avoid cancellation.
fn sinc(omega: C64) -> C64 {
    if omega.norm() < 1e-4 {
        let w2 = omega * omega;
        C64::ONE - w2 / 6.0 + w2 * w2 / 120.0 - w2 * w2 * w2 / 5040.0
    } else {
        omega.sin() / omega
    }
}

/// Exponential of a traceless 2×2 matrix in closed form:
/// `exp(A) = cos(ω) I + (sin(ω)/ω) A` with `ω = sqrt(det A)`.
///
/// Cayley-Hamilton gives `A² = -det(A) I` for traceless `A`, which collapses
/// the exponential series to the two terms above. For `det A < 0` (or
/// complex) the principal square root continues `cos`/`sinc` analytically;
/// real-representable inputs still produce real results through
/// `cos(iy) = cosh(y)` and `sin(iy)/(iy) = sinh(y)/y`.
///
/// # Panics
///
/// Panics when `|trace A| > 1e-12`.
pub fn exp_traceless(a: &Mat2) -> Mat2 {
    let tr = a.trace().norm();
    assert!(
        tr <= 1e-12,
        "exp_traceless requires a traceless matrix (|trace| = {tr:.3e})"
    );
    let omega = a.det().sqrt();
    let c = omega.cos();
    Mat2::diag(c, c) + a.scale(sinc(omega))
}

/// True when `|det A - 1| <= tol` and `‖A*A - I‖_max <= tol`.
///
/// # Panics
///
/// Panics when `tol <= 0`.
pub fn is_su2(a: &Mat2, tol: f64) -> bool {
    assert!(tol > 0.0, "is_su2 requires a positive tolerance");
    let det_err = (a.det() - C64::ONE).norm();
    let unit_err = (a.adjoint() * *a).max_diff(&Mat2::identity());
    det_err <= tol && unit_err <= tol
}
