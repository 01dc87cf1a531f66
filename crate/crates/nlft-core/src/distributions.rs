//! Beta machinery: the Euler beta function, the continuous beta density,
//! volumes of alternating-sum slices of the ordered simplex, a seeded Monte
//! Carlo estimator for those volumes, and the discrete beta distribution
//! built from two binomial coefficients.
//!
//! Two shape conventions appear in the source material: the standard
//! `Beta(α, β)` density `x^{α-1}(1-x)^{β-1}/B(α, β)`, and a parametrization
//! by the exponents themselves, `x^a (1-x)^b / B(a+1, b+1)`. Everything here
//! uses the standard convention internally; [`BetaShape::from_exponents`] is
//! the explicit adapter for the exponent form, which prevents silent
//! off-by-one shape bugs.

use crate::partitions::{aq_closed, binomial, factorial};
use crate::{par, Error, Result};
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::function::gamma::ln_gamma;

/// Shape parameters of a beta distribution in the standard convention
/// (density proportional to `x^{alpha-1} (1-x)^{beta-1}`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaShape {
    pub alpha: f64,
    pub beta: f64,
}

impl BetaShape {
    /// # Panics
    ///
    /// Panics unless both parameters are positive.
    pub fn new(alpha: f64, beta: f64) -> Self {
        assert!(
            alpha > 0.0 && beta > 0.0,
            "beta shape parameters must be positive"
        );
        Self { alpha, beta }
    }

    /// Adapter for the exponent parametrization: the density
    /// `x^a (1-x)^b / B(a+1, b+1)` is `Beta(a+1, b+1)` in the standard
    /// convention.
    pub fn from_exponents(a: u32, b: u32) -> Self {
        Self::new(f64::from(a) + 1.0, f64::from(b) + 1.0)
    }
}

/// Euler beta function `B(a, b)`, via an exact factorial route for integer
/// arguments up to 20 and log-gamma otherwise.
///
/// # Panics
///
/// Panics unless both arguments are positive.
pub fn beta_fn(a: f64, b: f64) -> f64 {
    assert!(a > 0.0 && b > 0.0, "beta function needs positive arguments");
    let is_small_int = |x: f64| x.fract() == 0.0 && x <= 20.0;
    if is_small_int(a) && is_small_int(b) {
        // B(a, b) = (a-1)! (b-1)! / (a+b-1)! = 1 / (a * C(a+b-1, a))
        let (ia, ib) = (a as i64, b as i64);
        let denom = binomial(ia + ib - 1, ia).to_f64().expect("small binomial");
        1.0 / (a * denom)
    } else {
        (ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)).exp()
    }
}

/// Beta density `x^{α-1} (1-x)^{β-1} / B(α, β)` on `[0, 1]`, with the
/// convention `0^0 = 1` at the endpoints.
///
/// # Panics
///
/// Panics when `x` is outside `[0, 1]`.
pub fn beta_pdf(x: f64, shape: &BetaShape) -> f64 {
    assert!((0.0..=1.0).contains(&x), "beta density needs x in [0, 1]");
    x.powf(shape.alpha - 1.0) * (1.0 - x).powf(shape.beta - 1.0) / beta_fn(shape.alpha, shape.beta)
}

/// The beta shape attached to dimension `d` by the volume identity:
/// `(d/2, d/2 + 1)` for even `d` and `((d+1)/2, (d+1)/2)` for odd `d`,
/// standard convention.
pub fn vol_shape(d: usize) -> BetaShape {
    assert!(d >= 1, "volume shape needs d >= 1");
    if d % 2 == 0 {
        BetaShape::new(d as f64 / 2.0, d as f64 / 2.0 + 1.0)
    } else {
        let half = (d as f64 + 1.0) / 2.0;
        BetaShape::new(half, half)
    }
}

fn factorial_f64(d: usize) -> f64 {
    (1..=d).map(|j| j as f64).product()
}

/// `Vol(D_d(l))`: the (d-1)-volume of the projection of the slice of the
/// ordered unit simplex where the alternating coordinate sum equals `l`.
/// Equals `p_β(l; shape(d)) / d!` with the shape from [`vol_shape`].
///
/// # Panics
///
/// Panics when `d < 1` or `l` is outside `[0, 1]`.
pub fn vol_formula(d: usize, l: f64) -> f64 {
    beta_pdf(l, &vol_shape(d)) / factorial_f64(d)
}

/// A Monte Carlo estimate of `Vol(D_d(l))` from one histogram bin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VolumeEstimate {
    /// Estimated `Vol(D_d(l))` at the bin center.
    pub volume: f64,
    /// Binomial standard error of `volume`.
    pub stderr: f64,
    /// Raw density estimate of the alternating sum, `count/(samples·width)`.
    pub density: f64,
    /// Bin hit count.
    pub count: u64,
    /// Total sample count.
    pub samples: u64,
}

const MC_BATCH: u64 = 100_000;

/// Estimates `Vol(D_d(l))` by sampling the ordered simplex uniformly
/// (sorted uniforms), histogramming the alternating coordinate sum into the
/// bin `center ± width/2`, and applying the density identity
/// `d! · Vol(D_d(l)) = density of the alternating sum`.
///
/// Sampling is split into fixed-size batches on independent, seeded RNG
/// streams, so results are reproducible regardless of thread count.
///
/// # Errors
///
/// `DegenerateDimension` for `d < 2` (the `d = 1` slice is a point: the
/// alternating sum is a single uniform with density 1, not a volume to
/// estimate), and `EmptyBin` when no sample lands in the bin.
///
/// # Panics
///
/// Panics when `samples < 10_000` or the bin does not fit inside `[0, 1]`.
pub fn vol_mc(
    d: usize,
    bin_center: f64,
    bin_width: f64,
    samples: u64,
    seed: u64,
) -> Result<VolumeEstimate> {
    if d < 2 {
        return Err(Error::DegenerateDimension(d));
    }
    assert!(samples >= 10_000, "need at least 10^4 samples");
    assert!(bin_width > 0.0, "bin width must be positive");
    let lo = bin_center - bin_width / 2.0;
    let hi = bin_center + bin_width / 2.0;
    assert!(
        (0.0..=1.0).contains(&lo) && (0.0..=1.0).contains(&hi),
        "bin must lie inside [0, 1]"
    );

    let batches = samples.div_ceil(MC_BATCH);
    let counts = par::map_indices(batches as usize, |batch| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(batch as u64);
        let batch_samples = MC_BATCH.min(samples - batch as u64 * MC_BATCH);
        let mut point = vec![0.0f64; d];
        let mut hits = 0u64;
        for _ in 0..batch_samples {
            for x in point.iter_mut() {
                *x = rng.random::<f64>();
            }
            point.sort_unstable_by(|a, b| b.partial_cmp(a).unwrap());
            let alt_sum: f64 = point
                .iter()
                .enumerate()
                .map(|(j, x)| if j % 2 == 0 { *x } else { -*x })
                .sum();
            if alt_sum >= lo && alt_sum < hi {
                hits += 1;
            }
        }
        hits
    });
    let count: u64 = counts.iter().sum();
    if count == 0 {
        return Err(Error::EmptyBin {
            center: bin_center,
            half_width: bin_width / 2.0,
        });
    }
    let total = samples as f64;
    let p_hat = count as f64 / total;
    let density = p_hat / bin_width;
    let density_stderr = (p_hat * (1.0 - p_hat) / total).sqrt() / bin_width;
    let d_fact = factorial_f64(d);
    Ok(VolumeEstimate {
        volume: density / d_fact,
        stderr: density_stderr / d_fact,
        density,
        count,
        samples,
    })
}

/// The discrete beta distribution on `{0, 1/N, ..., (N-1)/N}` with weights
/// `P_N(l/N; a, b) = c(N) ((a+b+1)!/N^{a+b}) C(l-1, a) C(N-l, b)`,
/// normalized so that `(1/N) Σ_l P_N(l/N) = 1`. Binomials with negative top
/// are zero, so the point `λ = 0` always carries no mass.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteBeta {
    grid: usize,
    a: u32,
    b: u32,
    norm: f64,
}

impl DiscreteBeta {
    /// Computes and caches the normalization `c(N)`.
    ///
    /// # Errors
    ///
    /// `ZeroMass` when every weight vanishes (which happens whenever
    /// `N <= a + b`).
    ///
    /// # Panics
    ///
    /// Panics when `grid == 0`.
    pub fn new(grid: usize, a: u32, b: u32) -> Result<Self> {
        assert!(grid > 0, "discrete beta needs a positive grid size");
        let mut dist = Self {
            grid,
            a,
            b,
            norm: 1.0,
        };
        let total: f64 = (0..grid).map(|l| dist.unnormalized(l)).sum::<f64>() / grid as f64;
        if total <= 0.0 {
            return Err(Error::ZeroMass { grid, a, b });
        }
        dist.norm = 1.0 / total;
        Ok(dist)
    }

    pub fn grid(&self) -> usize {
        self.grid
    }

    /// The normalizing constant `c(N)`; equals `1 + O(1/N)`.
    pub fn c_norm(&self) -> f64 {
        self.norm
    }

    /// The unnormalized weight `Q_N(l/N; a, b)`.
    fn unnormalized(&self, l: usize) -> f64 {
        let n = self.grid as f64;
        let lead = factorial(u64::from(self.a) + u64::from(self.b) + 1)
            .to_f64()
            .expect("small factorial")
            / n.powi(self.a as i32 + self.b as i32);
        let left = binomial(l as i64 - 1, i64::from(self.a))
            .to_f64()
            .expect("binomial fits f64");
        let right = binomial(self.grid as i64 - l as i64, i64::from(self.b))
            .to_f64()
            .expect("binomial fits f64");
        lead * left * right
    }

    /// `P_N(l/N; a, b)`, normalized. This is a density against the counting
    /// measure scaled by `1/N`; the mass of the point `l/N` is
    /// [`Self::point_mass`].
    ///
    /// # Panics
    ///
    /// Panics when `l >= N`.
    pub fn pmf(&self, l: usize) -> f64 {
        assert!(l < self.grid, "index out of range");
        self.norm * self.unnormalized(l)
    }

    /// The probability of the point `l/N`, i.e. `pmf(l) / N`.
    pub fn point_mass(&self, l: usize) -> f64 {
        self.pmf(l) / self.grid as f64
    }
}

/// The normalization `c(N)` of the discrete beta distribution.
pub fn c_norm(grid: usize, a: u32, b: u32) -> Result<f64> {
    Ok(DiscreteBeta::new(grid, a, b)?.c_norm())
}

/// One row of a discrete-to-continuous beta comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub grid: usize,
    /// `l_N = round(λN)` clamped to `{0..N-1}`.
    pub l: usize,
    /// Discrete density `P_N(l_N/N; a, b)`.
    pub p_discrete: f64,
    /// Continuous density `p_β` at the grid point `l_N/N`, exponent form.
    pub p_density: f64,
    pub abs_err: f64,
    /// `|c(N) - 1|`, which decays like `1/N`.
    pub c_gap: f64,
}

/// Tabulates `P_N(l_N; a, b)` against the continuous density for each grid
/// size, with `l_N = round(λN)` clamped to the grid. The density is read at
/// the realized grid point `l_N/N` (both columns share an abscissa, so the
/// `O(1/N)` error decay is visible without rounding noise).
///
/// # Errors
///
/// Propagates `ZeroMass` from the normalization.
pub fn convergence_table(a: u32, b: u32, lambda: f64, sizes: &[usize]) -> Result<Vec<ConvergenceRow>> {
    assert!(
        (0.0..=1.0).contains(&lambda),
        "lambda must lie in [0, 1]"
    );
    let shape = BetaShape::from_exponents(a, b);
    sizes
        .iter()
        .map(|&grid| {
            let dist = DiscreteBeta::new(grid, a, b)?;
            let l = ((lambda * grid as f64).round() as usize).min(grid - 1);
            let p_discrete = dist.pmf(l);
            let p_density = beta_pdf(l as f64 / grid as f64, &shape);
            Ok(ConvergenceRow {
                grid,
                l,
                p_discrete,
                p_density,
                abs_err: (p_discrete - p_density).abs(),
                c_gap: (dist.c_norm() - 1.0).abs(),
            })
        })
        .collect()
}

/// One row of the scaled-count-to-volume comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AqLimitRow {
    pub grid: usize,
    pub l: usize,
    /// `(d!/N^{d-1}) AQ_N(l_N, d)`.
    pub scaled_aq: f64,
    /// `d! Vol(D_d(λ))`, the beta density the scaled counts approach.
    pub density_target: f64,
    /// `Vol(D_d(λ))` itself, approached by `(1/N^{d-1}) AQ_N(l_N, d)`.
    pub vol_target: f64,
    pub abs_err: f64,
}

/// Checks the limit `(d!/N^{d-1}) AQ_N(round(λN), d) → p_β(λ; shape(d))`,
/// equivalently `(1/N^{d-1}) AQ_N → Vol(D_d(λ))`, over the given grid sizes.
///
/// # Panics
///
/// Panics when some grid size is smaller than `d`.
pub fn aq_beta_limit_check(d: usize, lambda: f64, sizes: &[usize]) -> Vec<AqLimitRow> {
    assert!(
        (0.0..=1.0).contains(&lambda),
        "lambda must lie in [0, 1]"
    );
    let vol_target = vol_formula(d, lambda);
    let d_fact = factorial_f64(d);
    sizes
        .iter()
        .map(|&grid| {
            assert!(grid >= d, "grid size must be at least d");
            let l = ((lambda * grid as f64).round() as usize).min(grid - 1);
            let count = aq_closed(grid, l, d).to_f64().expect("count fits f64");
            let scaled_aq = d_fact * count / (grid as f64).powi(d as i32 - 1);
            AqLimitRow {
                grid,
                l,
                scaled_aq,
                density_target: d_fact * vol_target,
                vol_target,
                abs_err: (scaled_aq - d_fact * vol_target).abs(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn simpson<F: Fn(f64) -> f64>(f: F, panels: usize) -> f64 {
        assert!(panels % 2 == 0);
        let h = 1.0 / panels as f64;
        (0..=panels)
            .map(|j| {
                let w = if j == 0 || j == panels {
                    1.0
                } else if j % 2 == 1 {
                    4.0
                } else {
                    2.0
                };
                w * f(j as f64 * h)
            })
            .sum::<f64>()
            * h
            / 3.0
    }

    #[test]
    fn beta_fn_values() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        assert!((beta_fn(1.0, 1.0) - 1.0).abs() < 1e-15);
        // 1! 2! / 4! = 2/24
        assert!((beta_fn(2.0, 3.0) - 1.0 / 12.0).abs() < 1e-16);
        let mut rng = StdRng::seed_from_u64(8);
        for _ in 0..50 {
            let x = rng.random_range(0.1..10.0);
            let y = rng.random_range(0.1..10.0);
            let rel = (beta_fn(x, y) - beta_fn(y, x)).abs() / beta_fn(x, y);
            assert!(rel < 1e-14, "symmetry failed at ({x}, {y})");
        }
    }

    #[test]
    fn beta_fn_integer_and_gamma_routes_agree() {
        for a in 1..=20u32 {
            for b in 1..=20u32 {
                let exact = beta_fn(f64::from(a), f64::from(b));
                let via_gamma = (ln_gamma(f64::from(a)) + ln_gamma(f64::from(b))
                    - ln_gamma(f64::from(a + b)))
                .exp();
                let rel = (exact - via_gamma).abs() / exact;
                assert!(rel < 1e-12, "a={a}, b={b}: rel {rel:.3e}");
            }
        }
    }

    #[test]
    fn beta_pdf_values() {
        let uniform = BetaShape::new(1.0, 1.0);
        for x in [0.0, 0.25, 0.7, 1.0] {
            assert!((beta_pdf(x, &uniform) - 1.0).abs() < 1e-15);
        }
        assert!((beta_pdf(0.5, &BetaShape::new(2.0, 2.0)) - 1.5).abs() < 1e-15);
    }

    #[test]
    fn beta_pdf_integrates_to_one() {
        for (a, b) in [(2.0, 3.0), (3.0, 3.0), (1.0, 2.0)] {
            let shape = BetaShape::new(a, b);
            let integral = simpson(|x| beta_pdf(x, &shape), 2000);
            assert!((integral - 1.0).abs() < 1e-8, "shape ({a}, {b})");
        }
    }

    #[test]
    fn exponent_adapter_matches_written_density() {
        for (a, b) in [(0u32, 0u32), (1, 1), (2, 3), (4, 1)] {
            let shape = BetaShape::from_exponents(a, b);
            for j in 0..=50 {
                let x = j as f64 / 50.0;
                let written = x.powi(a as i32) * (1.0 - x).powi(b as i32)
                    / beta_fn(f64::from(a) + 1.0, f64::from(b) + 1.0);
                assert!(
                    (beta_pdf(x, &shape) - written).abs() < 1e-12,
                    "(a,b)=({a},{b}), x={x}"
                );
            }
        }
    }

    #[test]
    fn vol_formula_small_dimensions() {
        for l in [0.0, 0.3, 0.5, 0.9, 1.0] {
            assert!((vol_formula(1, l) - 1.0).abs() < 1e-15, "d=1 is constant");
            assert!((vol_formula(2, l) - (1.0 - l)).abs() < 1e-14, "d=2 is 1-l");
            assert!(
                (vol_formula(3, l) - l * (1.0 - l)).abs() < 1e-14,
                "d=3 is l(1-l)"
            );
        }
    }

    #[test]
    fn vol_formula_endpoint_behaviour() {
        for d in (4..=10).step_by(2) {
            assert_eq!(vol_formula(d, 0.0), 0.0);
            assert_eq!(vol_formula(d, 1.0), 0.0);
        }
        for d in (3..=9).step_by(2) {
            assert_eq!(vol_formula(d, 0.0), 0.0);
            assert_eq!(vol_formula(d, 1.0), 0.0);
        }
    }

    #[test]
    fn scaled_volume_is_a_probability_density() {
        for d in 1..=10 {
            let d_fact: f64 = (1..=d).map(|j| j as f64).product();
            let integral = simpson(|l| d_fact * vol_formula(d, l), 2000);
            assert!((integral - 1.0).abs() < 1e-8, "d={d}: {integral}");
        }
    }

    #[test]
    fn vol_mc_matches_interval_length_in_dim_two() {
        let est = vol_mc(2, 0.5, 0.02, 1_000_000, 1).unwrap();
        // Vol(D_2(l)) = 1 - l = 0.5
        assert!(
            (est.volume - 0.5).abs() < 3.0 * est.stderr,
            "estimate {} +/- {}",
            est.volume,
            est.stderr
        );
    }

    #[test]
    fn vol_mc_matches_formula_in_dim_four() {
        for center in [0.25, 0.5, 0.75] {
            let est = vol_mc(4, center, 0.02, 1_000_000, 7).unwrap();
            let expect = vol_formula(4, center);
            assert!(
                (est.volume - expect).abs() < 3.0 * est.stderr,
                "center {center}: {} vs {expect} (se {})",
                est.volume,
                est.stderr
            );
        }
    }

    #[test]
    fn vol_mc_rejects_degenerate_dimension() {
        assert_eq!(
            vol_mc(1, 0.5, 0.02, 10_000, 1),
            Err(Error::DegenerateDimension(1))
        );
    }

    #[test]
    fn vol_mc_flags_empty_bins() {
        // The d=3 density l(1-l) vanishes at the left edge; a sliver bin
        // there catches nothing at desk-scale sample counts.
        let r = vol_mc(3, 5e-7, 1e-6, 10_000, 3);
        assert!(matches!(r, Err(Error::EmptyBin { .. })), "got {r:?}");
    }

    #[test]
    fn vol_mc_is_reproducible() {
        let a = vol_mc(3, 0.5, 0.05, 200_000, 99).unwrap();
        let b = vol_mc(3, 0.5, 0.05, 200_000, 99).unwrap();
        assert_eq!(a, b);
        let c = vol_mc(3, 0.5, 0.05, 200_000, 100).unwrap();
        assert_ne!(a.count, c.count, "different seeds should differ");
    }

    #[test]
    fn discrete_beta_flat_case() {
        // a = b = 0: unnormalized weight 1 on {1..N-1}, 0 at l = 0,
        // hence c(N) = N/(N-1).
        for n in [2usize, 5, 50, 512] {
            let dist = DiscreteBeta::new(n, 0, 0).unwrap();
            let expect = n as f64 / (n as f64 - 1.0);
            assert!((dist.c_norm() - expect).abs() < 1e-12, "N={n}");
            assert_eq!(dist.pmf(0), 0.0);
        }
    }

    #[test]
    fn discrete_beta_mass_vanishes_at_zero() {
        for (a, b) in [(0u32, 0u32), (1, 1), (2, 3), (0, 4)] {
            let dist = DiscreteBeta::new(32, a, b).unwrap();
            assert_eq!(dist.pmf(0), 0.0, "(a,b)=({a},{b})");
        }
    }

    #[test]
    fn discrete_beta_normalizes() {
        for (a, b) in [(1u32, 1u32), (2, 3)] {
            let dist = DiscreteBeta::new(50, a, b).unwrap();
            let total: f64 = (0..50).map(|l| dist.pmf(l)).sum::<f64>() / 50.0;
            assert!((total - 1.0).abs() < 1e-12, "(a,b)=({a},{b})");
        }
    }

    #[test]
    fn discrete_beta_zero_mass_is_an_error() {
        // N <= a + b kills every weight: C(l-1, a) C(N-l, b) needs
        // l-1 >= a and N-l >= b.
        assert!(matches!(
            DiscreteBeta::new(3, 2, 1),
            Err(Error::ZeroMass { .. })
        ));
        assert!(c_norm(8, 2, 1).is_ok());
    }

    #[test]
    fn c_norm_gap_halves_as_grid_doubles() {
        let gaps: Vec<f64> = [64usize, 128, 256, 512]
            .iter()
            .map(|&n| (c_norm(n, 2, 3).unwrap() - 1.0).abs())
            .collect();
        for w in gaps.windows(2) {
            let ratio = w[1] / w[0];
            assert!(
                (0.3..=0.7).contains(&ratio),
                "c(N) gap ratio {ratio:.3} outside halving window: {gaps:?}"
            );
        }
        assert!(c_norm(64, 2, 3).unwrap() > 0.0);
    }

    #[test]
    fn convergence_table_reaches_uniform_density_value() {
        let rows = convergence_table(1, 1, 0.5, &[50, 100, 200, 400]).unwrap();
        // p_β(1/2; 1, 1) in exponent form is 6·(1/2)(1/2) = 1.5.
        let last = rows.last().unwrap();
        assert!((last.p_density - 1.5).abs() < 1e-12);
        assert!(last.abs_err < 0.02);
        for w in rows.windows(2) {
            assert!(w[1].abs_err < w[0].abs_err, "errors must shrink: {rows:?}");
        }
    }

    #[test]
    fn convergence_table_halves_errors() {
        let rows = convergence_table(2, 3, 0.3, &[64, 128, 256, 512]).unwrap();
        for w in rows.windows(2) {
            let ratio = w[1].abs_err / w[0].abs_err;
            assert!(
                (0.3..=0.7).contains(&ratio),
                "ratio {ratio:.3} outside halving window: {rows:?}"
            );
        }
    }

    #[test]
    fn convergence_table_endpoint_zero() {
        for (a, b) in [(1u32, 1u32), (2, 3)] {
            let rows = convergence_table(a, b, 0.0, &[32, 64]).unwrap();
            for row in rows {
                assert_eq!(row.p_discrete, 0.0);
                assert_eq!(row.p_density, 0.0);
            }
        }
    }

    #[test]
    fn aq_limit_exact_in_dim_two() {
        // d = 2: (2/N) AQ_N(λN, 2) = 2(1 - λ) exactly when λN is integral.
        let rows = aq_beta_limit_check(2, 0.5, &[50, 100, 200]);
        for row in &rows {
            assert!((row.scaled_aq - 1.0).abs() < 1e-12, "{row:?}");
            assert!((row.density_target - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn aq_limit_dim_three_approaches_density() {
        let rows = aq_beta_limit_check(3, 0.5, &[50, 100, 200, 400]);
        assert!((rows[0].density_target - 1.5).abs() < 1e-15);
        for w in rows.windows(2) {
            assert!(w[1].abs_err <= w[0].abs_err + 1e-15, "{rows:?}");
        }
        assert!(rows.last().unwrap().abs_err < 0.05);
    }

    #[test]
    fn aq_limit_dim_one_is_constant() {
        let rows = aq_beta_limit_check(1, 0.3, &[10, 100, 400]);
        for row in rows {
            assert!((row.scaled_aq - 1.0).abs() < 1e-15);
            assert_eq!(row.abs_err, 0.0);
        }
    }
}
