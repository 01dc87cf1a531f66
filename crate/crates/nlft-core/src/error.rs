use thiserror::Error;

/// Errors reported by fallible operations.
///
/// Contract violations that indicate a caller bug (index out of range,
/// non-traceless input to the closed-form exponential, zero grid size)
/// panic instead; see the individual function docs.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A signal must contain at least one sample.
    #[error("signal must contain at least one sample")]
    EmptySignal,

    /// The operation is only defined for real-valued signals.
    #[error("operation requires a real-valued signal")]
    ComplexSignal,

    /// Samples must be non-negative and sum to 1.
    #[error("samples do not lie on the probability simplex (deviation {deviation:.3e})")]
    NotSimplex { deviation: f64 },

    /// A coefficient matrix expected to be a scalar multiple of the identity
    /// was not; indicates a normalization or indexing bug.
    #[error("extracted coefficient is not scalar * identity (off-scalar norm {deviation:.3e})")]
    NonScalarCoefficient { deviation: f64 },

    /// An extracted count failed to land on an integer.
    #[error(
        "extraction residue {residue:.3e} at (N={grid}, l={shift}, d={degree}) exceeds {limit:.0e}"
    )]
    RoundingResidue {
        grid: usize,
        shift: usize,
        degree: usize,
        residue: f64,
        limit: f64,
    },

    /// Multivariate expansion would exceed the term budget.
    #[error("term budget exceeded: {required} > {budget} monomials for N={grid}, d={degree}")]
    TermBudget {
        grid: usize,
        degree: usize,
        required: u128,
        budget: u128,
    },

    /// Monte Carlo histogram bin received no samples.
    #[error("no samples fell in the bin at {center} +/- {half_width}")]
    EmptyBin { center: f64, half_width: f64 },

    /// Monte Carlo volume estimation needs dimension at least 2; the d = 1
    /// slice is a single point and carries no density to estimate.
    #[error("monte carlo volume estimation requires d >= 2 (got {0})")]
    DegenerateDimension(usize),

    /// The discrete beta weights sum to zero, so no normalization exists.
    #[error("discrete beta distribution has zero total mass for N={grid}, a={a}, b={b}")]
    ZeroMass { grid: usize, a: u32, b: u32 },
}
