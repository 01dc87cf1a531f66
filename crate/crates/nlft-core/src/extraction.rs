//! Coefficient extraction: recovering exact partition counts and multinomial
//! probabilities from the discretized transforms.
//!
//! The Euler product `f_n[u_c](n)` is a polynomial in the constant amplitude
//! `u` whose degree-`d` coefficient is `(1/N^d) Σ_l AQ_N(l, d) E_δ(-2l, n) J^d`;
//! an inverse DFT over `n` then isolates one shift `l` and `J^{-d}` reduces
//! the coefficient to a scalar multiple of the identity, which rescales to
//! the integer count. The splitting product `g_n` plays the same role for
//! non-distinct counts through its multivariate expansion: the monomial
//! `u^k` carries the phase `E_δ(-2 alt(k), n)`, so mixed partials at zero
//! weighted by `Π k_j!` collapse the degree-`d` shell onto `AP_N(l, d)`, and
//! on the probability simplex the same contraction evaluated at `u` yields
//! the multinomial mass of `{alt(k) = l}`.
//!
//! Two bookkeeping conventions are fixed here once and for all. First, the
//! inverse DFT carries the `1/N` normalization; with a plain sum every
//! recovered count would come out `N` times too large, and the enumeration
//! oracles are the authority on the constant. Second, `g_n` carries the
//! collected gauge phase `E_δ(N, n) = (-1)^n I`, which is constant in `u`
//! but not in `n`; it is divided back out before the inverse DFT, otherwise
//! the orthogonality sum lands on a shifted frequency.
//!
//! Derivatives are computed algebraically (jets and truncated polynomials),
//! never by floating-point differencing; finite differences appear only as
//! test oracles.

use crate::jet::{MatrixJet, ScalarJet};
use crate::mat2::{e_delta, j_matrix, j_power, Mat2};
use crate::multipoly::MultiPoly;
use crate::partitions::{alt, binomial, factorial, multinomial};
use crate::signal::{Signal, SpectralSequence};
use crate::{par, Error, Result};
use num_bigint::BigUint;
use num_complex::Complex64 as C64;
use num_traits::ToPrimitive;

/// An extracted count must sit this close to an integer after rescaling.
pub const RESIDUE_LIMIT: f64 = 1e-6;
/// The `J^{-d}`-adjusted coefficient must be scalar·identity to within this.
pub const SCALAR_DEVIATION_LIMIT: f64 = 1e-9;
/// Largest number of monomials a multivariate expansion may allocate.
pub const TERM_BUDGET: u128 = 1_000_000;

fn sign_of(n: usize) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn factorial_f64(k: u64) -> f64 {
    factorial(k).to_f64().expect("small factorial")
}

/// The `1/N`-normalized inverse discrete Fourier transform of a
/// matrix-valued sequence at shift `l`:
/// `(1/N) Σ_{n=0}^{N-1} E_δ(2l, n) · seq(n)`.
pub fn idft_matrix(seq: &SpectralSequence, l: i64) -> Mat2 {
    let grid = seq.grid();
    let mut sum = Mat2::zero();
    for n in 0..grid {
        sum = sum + e_delta(2 * l, n as i64, grid) * *seq.value(n);
    }
    sum.scale(C64::new(1.0 / grid as f64, 0.0))
}

/// The Euler product `Π_{k=N-1}^{0} (I + (u/N) E_δ(-2k, n) J)` for a
/// constant real amplitude `u`, expanded as a truncated polynomial in `u`.
///
/// # Panics
///
/// Panics when `n >= grid`.
pub fn f_n_poly(grid: usize, n: usize, cap: usize) -> MatrixJet {
    assert!(n < grid, "spectral index out of range");
    let mut acc = MatrixJet::identity(cap);
    for k in (0..grid).rev() {
        let step = (e_delta(-2 * (k as i64), n as i64, grid) * j_matrix())
            .scale(C64::new(1.0 / grid as f64, 0.0));
        let mut coeffs = vec![Mat2::zero(); cap + 1];
        coeffs[0] = Mat2::identity();
        if cap >= 1 {
            coeffs[1] = step;
        }
        acc = acc.mul(&MatrixJet::from_coeffs(coeffs));
    }
    acc
}

/// Divides out `J^d`, certifies the result is scalar·identity, rescales by
/// `N^d`, and rounds to the nearest integer.
fn read_count(coeff: &Mat2, grid: usize, l: usize, d: usize) -> Result<BigUint> {
    let value = read_scaled_scalar(coeff, grid, d)?;
    let rounded = value.re.round();
    let residue = (value.re - rounded).abs().max(value.im.abs());
    if residue >= RESIDUE_LIMIT {
        return Err(Error::RoundingResidue {
            grid,
            shift: l,
            degree: d,
            residue,
            limit: RESIDUE_LIMIT,
        });
    }
    Ok(BigUint::from(rounded.max(0.0) as u64))
}

/// Divides out `J^d`, certifies scalar·identity, and rescales by `N^d`.
fn read_scaled_scalar(coeff: &Mat2, grid: usize, d: usize) -> Result<C64> {
    let adjusted = *coeff * j_power(-(d as i64));
    let (scalar, deviation) = adjusted.scalar_identity_part();
    if deviation > SCALAR_DEVIATION_LIMIT {
        return Err(Error::NonScalarCoefficient { deviation });
    }
    Ok(scalar * (grid as f64).powi(d as i32))
}

fn aq_coefficient_sequence(grid: usize, d: usize) -> SpectralSequence {
    SpectralSequence::new(par::map_indices(grid, |n| {
        *f_n_poly(grid, n, d).coeff(d)
    }))
}

/// `AQ_N(l, d)` recovered from the Euler product: inverse DFT of the
/// degree-`d` coefficient sequence at shift `l`, reduced by `J^{-d}` and
/// rescaled by `N^d`.
///
/// # Errors
///
/// [`Error::NonScalarCoefficient`] or [`Error::RoundingResidue`] signal a
/// normalization or indexing bug rather than an input problem.
///
/// # Panics
///
/// Panics unless `1 <= d <= N` and `l < N`.
pub fn extract_aq(grid: usize, l: usize, d: usize) -> Result<BigUint> {
    assert!(d >= 1 && d <= grid, "extract_aq requires 1 <= d <= N");
    assert!(l < grid, "extract_aq requires l < N");
    let seq = aq_coefficient_sequence(grid, d);
    read_count(&idft_matrix(&seq, l as i64), grid, l, d)
}

/// [`extract_aq`] for every shift at once (one expansion pass per `n`).
pub fn extract_aq_table(grid: usize, d: usize) -> Result<Vec<BigUint>> {
    assert!(d >= 1 && d <= grid, "extract_aq requires 1 <= d <= N");
    let seq = aq_coefficient_sequence(grid, d);
    (0..grid)
        .map(|l| read_count(&idft_matrix(&seq, l as i64), grid, l, d))
        .collect()
}

/// The splitting product `g_n[s·u](n)` expanded as a jet in `s` up to the
/// given order, gauge prefactor `(-1)^n` included.
fn g_n_jet(u: &Signal, n: usize, cap: usize) -> MatrixJet {
    let grid = u.len();
    assert!(n < grid, "spectral index out of range");
    assert!(u.is_real(), "jet expansion requires a real-valued signal");
    let mut acc = MatrixJet::identity(cap);
    for (l, sample) in u.samples().iter().enumerate().rev() {
        let (cos_jet, sin_jet) = ScalarJet::linear(sample.re / grid as f64, cap).cos_sin();
        let rotated = e_delta(-2 * (l as i64), n as i64, grid) * j_matrix();
        let factor = MatrixJet::from_scalar(&cos_jet, &Mat2::identity())
            .add(&MatrixJet::from_scalar(&sin_jet, &rotated));
        acc = acc.mul(&factor);
    }
    acc.scale(C64::new(sign_of(n), 0.0))
}

/// `D^d g_n[u](n) = (d/ds)^d|_{s=0} g_n[s·u](n)`, computed in jet
/// arithmetic: `d!` times the order-`d` jet coefficient.
///
/// # Panics
///
/// Panics when `n >= N` or the signal is not real-valued.
pub fn d_jet(u: &Signal, n: usize, d: usize) -> Mat2 {
    g_n_jet(u, n, d)
        .coeff(d)
        .scale(C64::new(factorial_f64(d as u64), 0.0))
}

/// The splitting product expanded as a truncated multivariate polynomial in
/// the samples `u_0..u_{N-1}`, total degree at most `cap`, gauge prefactor
/// `(-1)^n` included. Coefficients are raw Taylor coefficients: the monomial
/// `u^k` on the degree-`d` shell carries
/// `(-1)^n (1/(Π k_j!)) (1/N^d) E_δ(-2 alt(k), n) J^d`.
///
/// # Errors
///
/// [`Error::TermBudget`] when the expansion would exceed [`TERM_BUDGET`]
/// monomials (`C(N+d, d)` of them exist below the cap).
///
/// # Panics
///
/// Panics when `n >= grid`.
pub fn g_n_multipoly(grid: usize, n: usize, cap: usize) -> Result<MultiPoly> {
    assert!(n < grid, "spectral index out of range");
    let required = binomial(grid as i64 + cap as i64, cap as i64)
        .to_u128()
        .unwrap_or(u128::MAX);
    if required > TERM_BUDGET {
        return Err(Error::TermBudget {
            grid,
            degree: cap,
            required,
            budget: TERM_BUDGET,
        });
    }
    let scale = grid as f64;
    let mut acc = MultiPoly::constant(
        Mat2::identity().scale(C64::new(sign_of(n), 0.0)),
        grid,
        cap,
    );
    for l in (0..grid).rev() {
        let rotated = e_delta(-2 * (l as i64), n as i64, grid) * j_matrix();
        let mut factor = MultiPoly::zero(grid, cap);
        for j in 0..=cap {
            // cos/sin series of u_l/N in the single variable u_l.
            let magnitude = 1.0 / (scale.powi(j as i32) * factorial_f64(j as u64));
            let signed = if (j / 2) % 2 == 0 { magnitude } else { -magnitude };
            let coeff = if j % 2 == 0 {
                Mat2::identity().scale(C64::new(signed, 0.0))
            } else {
                rotated.scale(C64::new(signed, 0.0))
            };
            let mut k = vec![0u16; grid];
            k[l] = j as u16;
            factor.insert(k, coeff);
        }
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

/// The mixed-partial contraction `Σ_{|k|_1 = d} (Π k_j!) · coeff(k)` of a
/// multivariate expansion, with the `(-1)^n` gauge divided back out.
fn ap_contraction(grid: usize, n: usize, d: usize) -> Result<Mat2> {
    let poly = g_n_multipoly(grid, n, d)?;
    let mut sum = Mat2::zero();
    for (k, m) in poly.terms() {
        let degree: usize = k.iter().map(|&e| e as usize).sum();
        if degree != d {
            continue;
        }
        let weight: f64 = k.iter().map(|&e| factorial_f64(u64::from(e))).product();
        sum = sum + m.scale(C64::new(weight, 0.0));
    }
    Ok(sum.scale(C64::new(sign_of(n), 0.0)))
}

/// `AP_N(l, d)` recovered from the splitting product: mixed partials at
/// zero over the degree-`d` shell, inverse DFT at shift `l`, `J^{-d}`, and
/// rescaling by `N^d`.
///
/// # Errors
///
/// As [`extract_aq`], plus [`Error::TermBudget`].
///
/// # Panics
///
/// Panics unless `d >= 1` and `l < N`.
pub fn extract_ap(grid: usize, l: usize, d: usize) -> Result<BigUint> {
    assert!(d >= 1, "extract_ap requires d >= 1");
    assert!(l < grid, "extract_ap requires l < N");
    let seq = SpectralSequence::new(par::try_map_indices(grid, |n| ap_contraction(grid, n, d))?);
    read_count(&idft_matrix(&seq, l as i64), grid, l, d)
}

/// [`extract_ap`] for every shift at once.
pub fn extract_ap_table(grid: usize, d: usize) -> Result<Vec<BigUint>> {
    assert!(d >= 1, "extract_ap requires d >= 1");
    let seq = SpectralSequence::new(par::try_map_indices(grid, |n| ap_contraction(grid, n, d))?);
    (0..grid)
        .map(|l| read_count(&idft_matrix(&seq, l as i64), grid, l, d))
        .collect()
}

/// `P_alt(l)`: the probability that `d` multinomial draws with cell
/// probabilities `u` produce a multiplicity vector with `alt(k) = l`,
/// computed through the transform route
/// `N^d · (idft of D^d g_n at l) · J^{-d}`.
///
/// # Errors
///
/// [`Error::NotSimplex`] when `u` is not a probability vector; the scalar
/// certification errors as in [`extract_aq`].
///
/// # Panics
///
/// Panics when `l >= N`.
pub fn p_alt(u: &Signal, d: usize, l: usize) -> Result<f64> {
    u.check_simplex(1e-12)?;
    let grid = u.len();
    assert!(l < grid, "p_alt requires l < N");
    let derivatives = par::map_indices(grid, |n| d_jet(u, n, d).scale(C64::new(sign_of(n), 0.0)));
    let seq = SpectralSequence::new(derivatives);
    let value = read_scaled_scalar(&idft_matrix(&seq, l as i64), grid, d)?;
    Ok(value.re)
}

/// `P_alt(l)` by direct enumeration of the degree-`d` shell:
/// `Σ_{alt(k) = l} multinomial(d; k) Π u_j^{k_j}`.
///
/// # Errors
///
/// [`Error::NotSimplex`] when `u` is not a probability vector.
///
/// # Panics
///
/// Panics when `l >= N`.
pub fn p_alt_direct(u: &Signal, d: usize, l: usize) -> Result<f64> {
    u.check_simplex(1e-12)?;
    let grid = u.len();
    assert!(l < grid, "p_alt requires l < N");
    let probs: Vec<f64> = u.samples().iter().map(|z| z.re).collect();
    let mut total = 0.0;
    crate::partitions::for_each_composition(grid, d as u64, |k| {
        if alt(k) == l as u64 {
            let weight = multinomial(d as u64, k).to_f64().expect("small multinomial");
            let mass: f64 = probs
                .iter()
                .zip(k)
                .map(|(&p, &kj)| p.powi(kj as i32))
                .product();
            total += weight * mass;
        }
    });
    Ok(total)
}
