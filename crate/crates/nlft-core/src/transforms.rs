//! The periodic nonlinear Fourier transform and its two discretizations.
//!
//! The continuous transform `F[u](n)` is `(-1)^n Φ(1, n)` where `Φ` solves
//! `Φ_x = L(x, n) Φ`, `Φ(0) = I`, with coefficient matrix
//! `L = [[iπn, u(x)], [-conj(u(x)), -iπn]]`. Four evaluation routes are
//! implemented: the closed form for constant signals, the exact product of
//! exponentials for step signals, the gauged Dyson series by Picard
//! iteration, and (for constant signals) the expansion over polytope-slice
//! volumes. The two discretizations are the Euler-type product `f_n`
//! (N factors `I + L_N/N`) and the SU(2)-valued exponential-splitting
//! product `g_n`.
//!
//! The `(-1)^n` gauge factor lives with `nlft_constant`, `nlft_step`, and
//! `g_n`: the diagonal gauge satisfies `G(1, n) = (-1)^n I`, so the gauged
//! routes (`nlft_dyson`, `nlft_volume_expansion`) need no prefactor and all
//! routes agree at integer `n`.

use crate::distributions::vol_formula;
use crate::mat2::{e_delta, e_matrix, exp_traceless, j_matrix, j_power, rotation, Mat2};
use crate::par;
use crate::signal::{Signal, SpectralSequence};
use num_complex::Complex64 as C64;
use std::f64::consts::PI;

fn sign_of(n: i64) -> f64 {
    if n.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// The gauged coefficient matrix
/// `L^G(x, n) = [[0, e^{-2πinx} u(x)], [-e^{2πinx} conj(u(x)), 0]]`.
fn l_gauge(u: C64, x: f64, n: i64) -> Mat2 {
    let phase = C64::cis(-2.0 * PI * n as f64 * x);
    Mat2::new(C64::ZERO, phase * u, -(phase * u).conj(), C64::ZERO)
}

/// `F[u_c](n)` for the constant signal `u_c ≡ u`, in closed form:
/// `(-1)^n (cos ω I + (sin ω / ω) L)` with `L = [[iπn, u], [-u, -iπn]]`
/// and `ω = sqrt(π²n² + u²)`.
pub fn nlft_constant(u: f64, n: i64) -> Mat2 {
    let l = Mat2::new(
        C64::new(0.0, PI * n as f64),
        C64::new(u, 0.0),
        C64::new(-u, 0.0),
        C64::new(0.0, -PI * n as f64),
    );
    exp_traceless(&l).scale(C64::new(sign_of(n), 0.0))
}

/// `F[u_s](n)` for the step signal with the given samples: the exact product
/// `(-1)^n · Π_{l=N-1}^{0} exp((1/N) [[iπn, u_l], [-conj(u_l), -iπn]])`.
pub fn nlft_step(u: &Signal, n: i64) -> Mat2 {
    let big_n = u.len() as f64;
    let diag = C64::new(0.0, PI * n as f64 / big_n);
    let mut product = Mat2::identity();
    for sample in u.samples().iter().rev() {
        let step = Mat2::new(diag, sample / big_n, -(sample / big_n).conj(), -diag);
        product = product * exp_traceless(&step);
    }
    product.scale(C64::new(sign_of(n), 0.0))
}

/// Per-order terms of the gauged Dyson series, evaluated by Picard iteration
/// on an `m_quad`-point uniform grid with cumulative trapezoid quadrature.
///
/// `terms[0] = I` and `terms[d]` is the `d`-fold ordered-simplex integral of
/// `L^G(x_1, n) ... L^G(x_d, n)` over `1 >= x_1 >= ... >= x_d >= 0`, so the
/// amplitude bookkeeping is exact per order and only the quadrature is
/// approximate. The signal is read as a step function.
///
/// # Panics
///
/// Panics when `m_quad < 2`.
pub fn dyson_terms(u: &Signal, n: i64, d_max: usize, m_quad: usize) -> Vec<Mat2> {
    assert!(m_quad >= 2, "picard grid needs at least two points");
    let h = 1.0 / (m_quad - 1) as f64;
    let coeff: Vec<Mat2> = (0..m_quad)
        .map(|j| l_gauge(u.step_value(j as f64 * h), j as f64 * h, n))
        .collect();

    let mut terms = Vec::with_capacity(d_max + 1);
    terms.push(Mat2::identity());
    let mut prev = vec![Mat2::identity(); m_quad];
    let half_h = C64::new(h / 2.0, 0.0);
    for _ in 1..=d_max {
        let mut cur = vec![Mat2::zero(); m_quad];
        let mut acc = Mat2::zero();
        for j in 1..m_quad {
            let left = coeff[j - 1] * prev[j - 1];
            let right = coeff[j] * prev[j];
            acc = acc + (left + right).scale(half_h);
            cur[j] = acc;
        }
        terms.push(acc);
        prev = cur;
    }
    terms
}

/// Gauged Dyson series truncated at order `d_max`:
/// `I + Σ_{d=1}^{d_max}` iterated ordered-simplex integrals of `L^G`.
/// Converges to [`nlft_step`] as `d_max, m_quad → ∞`.
pub fn nlft_dyson(u: &Signal, n: i64, d_max: usize, m_quad: usize) -> Mat2 {
    dyson_terms(u, n, d_max, m_quad)
        .into_iter()
        .fold(Mat2::zero(), |acc, t| acc + t)
}

/// `F[u_c](n)` through the volume expansion
/// `I + Σ_{d=1}^{d_max} u^d ∫_0^1 Vol(D_d(l)) E(-2l, n) J^d dl`,
/// with the integral by composite Simpson on `m_quad` panels.
///
/// # Panics
///
/// Panics when `d_max < 1` or `m_quad` is odd or less than 2.
pub fn nlft_volume_expansion(u: f64, n: i64, d_max: usize, m_quad: usize) -> Mat2 {
    assert!(d_max >= 1, "volume expansion needs d_max >= 1");
    assert!(
        m_quad >= 2 && m_quad % 2 == 0,
        "composite simpson needs an even panel count"
    );
    let h = 1.0 / m_quad as f64;
    let mut result = Mat2::identity();
    let mut amplitude = 1.0;
    for d in 1..=d_max {
        amplitude *= u;
        let mut integral = Mat2::zero();
        for j in 0..=m_quad {
            let l = j as f64 * h;
            let w = if j == 0 || j == m_quad {
                1.0
            } else if j % 2 == 1 {
                4.0
            } else {
                2.0
            };
            let weight = w * h / 3.0 * vol_formula(d, l);
            integral = integral + e_matrix(-2.0 * l, n).scale(C64::new(weight, 0.0));
        }
        result = result + (integral * j_power(d as i64)).scale(C64::new(amplitude, 0.0));
    }
    result
}

/// The Euler-type discretization: `Π_{k=N-1}^{0} (I + (1/N) L_N(k, n))` with
/// `L_N(k, n) = [[0, e^{-2πikn/N} u_k], [-e^{2πikn/N} conj(u_k), 0]]`.
///
/// # Panics
///
/// Panics when `n >= N`.
pub fn f_n(u: &Signal, n: usize) -> Mat2 {
    let big_n = u.len();
    assert!(n < big_n, "spectral index out of range");
    let scale = big_n as f64;
    let mut product = Mat2::identity();
    for (k, sample) in u.samples().iter().enumerate().rev() {
        let phase = C64::cis(-2.0 * PI * k as f64 * n as f64 / scale);
        let a12 = phase * sample / scale;
        let factor = Mat2::new(C64::ONE, a12, -a12.conj(), C64::ONE);
        product = product * factor;
    }
    product
}

/// The exponential-splitting discretization
/// `g_n = E_δ(1,n) R(u_{N-1}/N) ... E_δ(1,n) R(u_0/N)`.
///
/// Telescoping the phases gives the equivalent product form
/// `(-1)^n Π_{l=N-1}^{0} (cos(u_l/N) I + sin(u_l/N) E_δ(-2l, n) J)`;
/// the prefactor is the collected `E_δ(N, n) = (-1)^n I`. Both forms are
/// evaluated and checked against each other to 1e-12. The result is SU(2).
///
/// # Panics
///
/// Panics when `n >= N`, when the signal is not real-valued, or when the two
/// product forms disagree beyond 1e-12.
pub fn g_n(u: &Signal, n: usize) -> Mat2 {
    let big_n = u.len();
    assert!(n < big_n, "spectral index out of range");
    assert!(u.is_real(), "g_n requires a real-valued signal");
    let phase_step = e_delta(1, n as i64, big_n);
    let mut by_definition = Mat2::identity();
    let mut by_product = Mat2::identity();
    for sample in u.samples().iter().rev() {
        let theta = sample.re / big_n as f64;
        by_definition = by_definition * phase_step * rotation(theta);
    }
    for (l, sample) in u.samples().iter().enumerate().rev() {
        let theta = sample.re / big_n as f64;
        let (s, c) = theta.sin_cos();
        let factor = Mat2::identity().scale(C64::new(c, 0.0))
            + (e_delta(-2 * l as i64, n as i64, big_n) * j_matrix()).scale(C64::new(s, 0.0));
        by_product = by_product * factor;
    }
    by_product = by_product.scale(C64::new(sign_of(n as i64), 0.0));
    let gap = by_definition.max_diff(&by_product);
    assert!(
        gap <= 1e-12,
        "g_n product forms disagree by {gap:.3e} at n={n}"
    );
    by_definition
}

/// `C[u] = Π_l cos(u_l / N)`, the scale factor relating the two
/// discretizations: `g_n[u](n) = (-1)^n C[u] f_n[N tan(u/N)](n)`.
///
/// # Panics
///
/// Panics when the signal is not real-valued.
pub fn cos_product(u: &Signal) -> f64 {
    assert!(u.is_real(), "cos_product requires a real-valued signal");
    let big_n = u.len() as f64;
    u.samples().iter().map(|z| (z.re / big_n).cos()).product()
}

/// The companion signal `N tan(u/N)` of the tangent relation.
///
/// # Panics
///
/// Panics when the signal is not real-valued.
pub fn tan_rescaled(u: &Signal) -> Signal {
    assert!(u.is_real(), "tan_rescaled requires a real-valued signal");
    let big_n = u.len() as f64;
    Signal::real(
        u.samples()
            .iter()
            .map(|z| big_n * (z.re / big_n).tan())
            .collect(),
    )
    .expect("same length as input")
}

/// Which transform a spectral table evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformKind {
    /// Euler product `f_n`.
    Euler,
    /// Exponential-splitting product `g_n`.
    Splitting,
    /// Exact step-signal transform [`nlft_step`].
    Step,
}

/// Evaluates the chosen transform at every `n` in `{0..N-1}`. The per-index
/// evaluations are independent and fan out across threads when the
/// `parallel` feature is on.
pub fn spectral_table(kind: TransformKind, u: &Signal) -> SpectralSequence {
    let values = par::map_indices(u.len(), |n| match kind {
        TransformKind::Euler => f_n(u, n),
        TransformKind::Splitting => g_n(u, n),
        TransformKind::Step => nlft_step(u, n as i64),
    });
    SpectralSequence::new(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat2::is_su2;
    use crate::partitions::aq_brute;
    use num_traits::ToPrimitive;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn constant_trivials() {
        for n in 0..6 {
            assert!(nlft_constant(0.0, n).approx_eq(&Mat2::identity(), 1e-15));
        }
        assert!(nlft_constant(0.9, 0).approx_eq(&rotation(0.9), 1e-15));
    }

    #[test]
    fn constant_matches_step_product() {
        let u = Signal::constant(0.5, 4096);
        let diff = nlft_constant(0.5, 2).max_diff(&nlft_step(&u, 2));
        assert!(diff < 1e-6, "diff {diff:.3e}");
    }

    #[test]
    fn step_is_exact_for_constant_signals() {
        // Identical factors commute, so the product equals the closed form
        // up to rounding at every N.
        for &n_steps in &[4usize, 16, 64] {
            let u = Signal::constant(0.8, n_steps);
            for n in -3..=3 {
                let diff = nlft_step(&u, n).max_diff(&nlft_constant(0.8, n));
                assert!(diff < 1e-13, "N={n_steps}, n={n}: diff {diff:.3e}");
            }
        }
    }

    #[test]
    fn step_trivials() {
        // The (-1)^n prefactor cancels the accumulated diagonal phase.
        let zero = Signal::constant(0.0, 5);
        for n in 0..5 {
            assert!(nlft_step(&zero, n).approx_eq(&Mat2::identity(), 1e-14));
        }
        // A single step is a constant signal.
        let single = Signal::real(vec![0.7]).unwrap();
        for n in 0..4 {
            assert!(nlft_step(&single, n).approx_eq(&nlft_constant(0.7, n), 1e-15));
        }
    }

    #[test]
    fn step_self_convergence_is_first_order() {
        // Left-endpoint sampling of a smooth profile: doubling N should
        // roughly halve the drift between consecutive resolutions.
        let profile = |x: f64| (2.0 * PI * x).sin();
        let n = 1i64;
        let drift = |coarse: usize| {
            let a = nlft_step(&Signal::sample_profile(profile, coarse), n);
            let b = nlft_step(&Signal::sample_profile(profile, 2 * coarse), n);
            a.max_diff(&b)
        };
        let d64 = drift(64);
        let d128 = drift(128);
        let ratio = d64 / d128;
        assert!(
            (1.6..=2.4).contains(&ratio),
            "drift ratio {ratio:.3} outside first-order window (d64={d64:.3e}, d128={d128:.3e})"
        );
    }

    #[test]
    fn dyson_zero_order_is_identity() {
        let u = Signal::constant(0.4, 8);
        assert!(nlft_dyson(&u, 2, 0, 16).approx_eq(&Mat2::identity(), 0.0));
    }

    #[test]
    fn dyson_matches_closed_form_for_constant_signal() {
        let u = Signal::constant(0.3, 1);
        let got = nlft_dyson(&u, 1, 12, 2048);
        let expect = nlft_constant(0.3, 1);
        let diff = got.max_diff(&expect);
        assert!(diff < 1e-6, "diff {diff:.3e}");
    }

    #[test]
    fn dyson_terms_obey_simplex_volume_bound() {
        // For |u| ≡ u the d-th term is bounded by u^d Vol(Δ_d) = u^d / d!.
        let amp = 0.9;
        let u = Signal::constant(amp, 1);
        let terms = dyson_terms(&u, 2, 8, 512);
        let mut bound = 1.0;
        for (d, term) in terms.iter().enumerate().skip(1) {
            bound *= amp / d as f64;
            assert!(
                term.max_norm() <= bound * (1.0 + 1e-6),
                "order {d}: {:.3e} > {bound:.3e}",
                term.max_norm()
            );
        }
    }

    #[test]
    fn dyson_converges_to_step_for_varying_signal() {
        let u = Signal::real(vec![0.4, -0.2, 0.9, 0.1]).unwrap();
        // Grid size is a multiple of N so the nodes land on the step jumps.
        let got = nlft_dyson(&u, 1, 14, 4096);
        let expect = nlft_step(&u, 1);
        let diff = got.max_diff(&expect);
        assert!(diff < 1e-4, "diff {diff:.3e}");
    }

    #[test]
    fn volume_expansion_trivials() {
        assert!(nlft_volume_expansion(0.0, 3, 6, 64).approx_eq(&Mat2::identity(), 1e-14));
        // d = 1 term at n = 0 is u ∫ Vol(D_1) dl · J = u J.
        let first = nlft_volume_expansion(0.5, 0, 1, 64) - Mat2::identity();
        assert!(first.approx_eq(&j_matrix().scale(C64::new(0.5, 0.0)), 1e-12));
    }

    #[test]
    fn volume_expansion_matches_closed_form() {
        for n in 0..4 {
            let got = nlft_volume_expansion(0.5, n, 14, 2000);
            let expect = nlft_constant(0.5, n);
            let diff = got.max_diff(&expect);
            assert!(diff < 1e-6, "n={n}: diff {diff:.3e}");
        }
    }

    #[test]
    fn f_n_trivials() {
        let zero = Signal::constant(0.0, 6);
        for n in 0..6 {
            assert!(f_n(&zero, n).approx_eq(&Mat2::identity(), 0.0));
        }
        let single = Signal::complex(vec![C64::new(0.3, 0.4)]).unwrap();
        let got = f_n(&single, 0);
        let expect = Mat2::new(
            C64::ONE,
            C64::new(0.3, 0.4),
            -C64::new(0.3, -0.4),
            C64::ONE,
        );
        assert!(got.approx_eq(&expect, 1e-15));
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn f_n_rejects_out_of_range_index() {
        f_n(&Signal::constant(0.1, 4), 4);
    }

    #[test]
    fn f_n_power_series_matches_brute_force_counts() {
        // For constant real u the product is the exact polynomial
        // I + Σ_{d=1}^{N} (u/N)^d Σ_l AQ_N(l, d) E_δ(-2l, n) J^d,
        // including the full-degree d = N term.
        let big_n = 6usize;
        let amp = 0.3f64;
        let u = Signal::constant(amp, big_n);
        for n in 0..big_n {
            let mut series = Mat2::identity();
            for d in 1..=big_n {
                let mut shell = Mat2::zero();
                for l in 0..big_n {
                    let count = aq_brute(big_n, l, d).to_f64().unwrap();
                    shell = shell
                        + e_delta(-2 * l as i64, n as i64, big_n).scale(C64::new(count, 0.0));
                }
                let coeff = (amp / big_n as f64).powi(d as i32);
                series = series + (shell * j_power(d as i64)).scale(C64::new(coeff, 0.0));
            }
            let diff = f_n(&u, n).max_diff(&series);
            assert!(diff < 1e-12, "n={n}: diff {diff:.3e}");
        }
    }

    #[test]
    fn f_n_determinant_factorizes() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..20 {
            let samples: Vec<C64> = (0..8)
                .map(|_| C64::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)))
                .collect();
            let u = Signal::complex(samples.clone()).unwrap();
            let expect: f64 = samples.iter().map(|z| 1.0 + z.norm_sqr() / 64.0).product();
            for n in 0..8 {
                let det = f_n(&u, n).det();
                assert!(
                    (det - C64::new(expect, 0.0)).norm() < 1e-12,
                    "n={n}: det {det}"
                );
            }
        }
    }

    #[test]
    fn g_n_zero_signal_gives_alternating_identity() {
        let zero = Signal::constant(0.0, 7);
        for n in 0..7 {
            let expect = Mat2::identity().scale(C64::new(sign_of(n as i64), 0.0));
            assert!(g_n(&zero, n).approx_eq(&expect, 1e-14), "n={n}");
        }
    }

    #[test]
    fn g_n_lands_in_su2() {
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..20 {
            let u = Signal::real((0..16).map(|_| rng.random_range(-3.0..3.0)).collect()).unwrap();
            for n in 0..16 {
                assert!(is_su2(&g_n(&u, n), 1e-10), "n={n}");
            }
        }
    }

    #[test]
    #[should_panic(expected = "real-valued")]
    fn g_n_rejects_complex_signals() {
        let u = Signal::complex(vec![C64::new(0.1, 0.2); 4]).unwrap();
        g_n(&u, 0);
    }

    #[test]
    fn tangent_relation_connects_discretizations() {
        let mut rng = StdRng::seed_from_u64(17);
        let u = Signal::real((0..12).map(|_| rng.random_range(-2.0..2.0)).collect()).unwrap();
        let rescaled = tan_rescaled(&u);
        let c = cos_product(&u);
        for n in 0..12 {
            let lhs = g_n(&u, n);
            let rhs = f_n(&rescaled, n).scale(C64::new(sign_of(n as i64) * c, 0.0));
            let diff = lhs.max_diff(&rhs);
            assert!(diff < 1e-12, "n={n}: diff {diff:.3e}");
        }
    }

    #[test]
    fn euler_and_splitting_agree_to_first_order() {
        // Compared in matched gauge: g_n carries the collected phase
        // E_δ(N, n) = (-1)^n I, f_n does not.
        let profile = |x: f64| 0.8 * (2.0 * PI * x).cos();
        let gap = |n_steps: usize| {
            let u = Signal::sample_profile(profile, n_steps);
            (0..4)
                .map(|n| {
                    let matched = g_n(&u, n).scale(C64::new(sign_of(n as i64), 0.0));
                    f_n(&u, n).max_diff(&matched)
                })
                .fold(0.0, f64::max)
        };
        let ratio = gap(32) / gap(64);
        assert!(
            (1.6..=2.4).contains(&ratio),
            "ratio {ratio:.3} outside first-order window"
        );
    }

    #[test]
    fn spectral_table_matches_per_index_calls() {
        let zero = Signal::constant(0.0, 6);
        let table = spectral_table(TransformKind::Euler, &zero);
        for n in 0..6 {
            assert!(table.value(n).approx_eq(&Mat2::identity(), 0.0));
        }
        let u = Signal::sample_profile(|x| (2.0 * PI * x).sin(), 16);
        for kind in [
            TransformKind::Euler,
            TransformKind::Splitting,
            TransformKind::Step,
        ] {
            let table = spectral_table(kind, &u);
            for n in 0..16 {
                let direct = match kind {
                    TransformKind::Euler => f_n(&u, n),
                    TransformKind::Splitting => g_n(&u, n),
                    TransformKind::Step => nlft_step(&u, n as i64),
                };
                assert_eq!(*table.value(n), direct, "{kind:?} n={n}");
            }
        }
    }

    #[test]
    fn spectral_table_perf_smoke() {
        let u = Signal::sample_profile(|x| (2.0 * PI * x).sin(), 256);
        let start = std::time::Instant::now();
        let table = spectral_table(TransformKind::Splitting, &u);
        assert_eq!(table.grid(), 256);
        assert!(
            start.elapsed() < std::time::Duration::from_secs(1),
            "table took {:?}",
            start.elapsed()
        );
    }
}
