//! Command implementations: each builds a [`Table`] and reports whether the
//! run exposed an internal consistency failure (oracle disagreement), which
//! maps to exit code 2.

use crate::table::{Cell, Table};
use nlft_core::distributions::{aq_beta_limit_check, convergence_table, vol_formula, vol_mc};
use nlft_core::extraction::{extract_ap_table, extract_aq_table, p_alt, p_alt_direct};
use nlft_core::mat2::{is_su2, Mat2};
use nlft_core::partitions::{PartitionKind, PartitionTable};
use nlft_core::transforms::{
    f_n, g_n, nlft_constant, nlft_dyson, nlft_step, nlft_volume_expansion,
};
use nlft_core::Signal;
use num_complex::Complex64 as C64;
use std::path::Path;

/// Errors with their exit-code class: usage problems exit 1, internal
/// consistency failures (an oracle disagreeing with itself) exit 2.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Consistency(String),
}

impl From<nlft_core::Error> for CliError {
    fn from(e: nlft_core::Error) -> Self {
        match e {
            nlft_core::Error::RoundingResidue { .. }
            | nlft_core::Error::NonScalarCoefficient { .. } => Self::Consistency(e.to_string()),
            _ => Self::Usage(e.to_string()),
        }
    }
}

/// A rendered table plus an optional consistency failure to report after
/// the table has been emitted.
pub struct Outcome {
    pub table: Table,
    pub failure: Option<String>,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Reads a signal file: one sample per line, `re` or `re im`, blank lines
/// ignored; the grid size is the line count.
pub fn load_signal(path: &Path) -> Result<Signal, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let mut samples = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<f64>()
                .map_err(|_| usage(format!("{}:{}: bad number {s:?}", path.display(), lineno + 1)))
        };
        match fields.as_slice() {
            [] => continue,
            [re] => samples.push(C64::new(parse(re)?, 0.0)),
            [re, im] => samples.push(C64::new(parse(re)?, parse(im)?)),
            _ => {
                return Err(usage(format!(
                    "{}:{}: expected `re` or `re im`",
                    path.display(),
                    lineno + 1
                )))
            }
        }
    }
    Signal::complex(samples).map_err(|e| usage(e.to_string()))
}

/// `aq-table`: distinct-parts counts by closed form, enumeration, and
/// transform extraction, with a row-sum checksum.
pub fn aq_table(size: usize, degree: usize) -> Result<Outcome, CliError> {
    if size == 0 || degree == 0 || degree > size {
        return Err(usage("aq-table requires 1 <= degree <= size"));
    }
    let closed = PartitionTable::closed(size, degree);
    let brute = PartitionTable::brute(size, degree, PartitionKind::Distinct);
    let extracted = extract_aq_table(size, degree)?;

    let mut table = Table::new("aq-table", &["l", "aq_closed", "aq_brute", "extract_aq", "agree"]);
    table.param("size", size);
    table.param("degree", degree);
    let mut failure = None;
    for l in 0..size {
        let agree = closed.counts[l] == brute.counts[l] && brute.counts[l] == extracted[l];
        record_disagreement(agree, &mut failure, size, l, degree);
        table.push_row(vec![
            Cell::Int(l as i64),
            Cell::Count(closed.counts[l].clone()),
            Cell::Count(brute.counts[l].clone()),
            Cell::Count(extracted[l].clone()),
            Cell::Bool(agree),
        ]);
    }
    table.footer("sum", Cell::Count(closed.total()));
    table.footer("binomial_total", Cell::Count(closed.expected_total()));
    if closed.total() != closed.expected_total() {
        failure = Some(format!(
            "row sum != C({size}, {degree}) in aq-table"
        ));
    }
    Ok(Outcome { table, failure })
}

/// Keeps the first offending `(N, l, d)` for the exit-2 report.
fn record_disagreement(agree: bool, slot: &mut Option<String>, n: usize, l: usize, d: usize) {
    if !agree && slot.is_none() {
        *slot = Some(format!("disagreement at (N={n}, l={l}, d={d})"));
    }
}

/// `ap-table`: non-distinct counts by enumeration, the alt-function route,
/// and transform extraction.
pub fn ap_table(size: usize, degree: usize) -> Result<Outcome, CliError> {
    if size == 0 || degree == 0 {
        return Err(usage("ap-table requires size >= 1 and degree >= 1"));
    }
    let brute = PartitionTable::brute(size, degree, PartitionKind::NonDistinct);
    let via_alt: Vec<_> = (0..size)
        .map(|l| nlft_core::partitions::ap_via_alt(size, l, degree))
        .collect();
    let extracted = extract_ap_table(size, degree)?;

    let mut table = Table::new(
        "ap-table",
        &["l", "ap_brute", "ap_via_alt", "extract_ap", "agree"],
    );
    table.param("size", size);
    table.param("degree", degree);
    let mut failure = None;
    for l in 0..size {
        let agree = brute.counts[l] == via_alt[l] && via_alt[l] == extracted[l];
        record_disagreement(agree, &mut failure, size, l, degree);
        table.push_row(vec![
            Cell::Int(l as i64),
            Cell::Count(brute.counts[l].clone()),
            Cell::Count(via_alt[l].clone()),
            Cell::Count(extracted[l].clone()),
            Cell::Bool(agree),
        ]);
    }
    table.footer("sum", Cell::Count(brute.total()));
    table.footer("binomial_total", Cell::Count(brute.expected_total()));
    if brute.total() != brute.expected_total() {
        failure = Some(format!("row sum != C({}+{}-1, {}) in ap-table", size, degree, degree));
    }
    Ok(Outcome { table, failure })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TransformChoice {
    /// Closed form for a constant signal.
    #[value(name = "constant-closed-form")]
    ConstantClosedForm,
    /// Exact product of exponentials for the step signal.
    Step,
    /// Gauged Dyson series (Picard iteration, trapezoid quadrature).
    Dyson,
    /// Expansion over polytope-slice volumes (constant signal).
    #[value(name = "volume-expansion")]
    VolumeExpansion,
    /// Euler-type discrete transform.
    #[value(name = "f-n")]
    Euler,
    /// Exponential-splitting discrete transform (SU(2)-valued).
    #[value(name = "g-n")]
    Splitting,
}

pub struct NlftArgs {
    pub kind: TransformChoice,
    pub amplitude: Option<f64>,
    pub size: Option<usize>,
    pub signal: Option<Signal>,
    pub d_max: Option<usize>,
}

const DYSON_QUAD: usize = 2048;
const VOLUME_QUAD: usize = 2000;

/// `nlft`: evaluates the chosen transform at every `n` in `{0..N-1}` and
/// reports matrix entries with unitarity/determinant diagnostics. For the
/// series kinds on a constant signal a `diff_closed_form` column compares
/// against the exact constant-signal transform.
pub fn nlft(args: NlftArgs) -> Result<Outcome, CliError> {
    use TransformChoice::*;
    let constant_only = matches!(args.kind, ConstantClosedForm | VolumeExpansion);
    if constant_only && args.signal.is_some() {
        return Err(usage("this kind takes --amplitude, not --signal"));
    }
    if args.signal.is_some() && args.amplitude.is_some() {
        return Err(usage("give either --signal or --amplitude, not both"));
    }
    let (signal, amplitude) = match (&args.signal, args.amplitude) {
        (Some(s), None) => (s.clone(), None),
        (None, Some(u)) => {
            let size = args.size.ok_or_else(|| usage("--amplitude needs --size"))?;
            if size == 0 {
                return Err(usage("--size must be at least 1"));
            }
            (Signal::constant(u, size), Some(u))
        }
        (None, None) => return Err(usage("give a signal source: --signal or --amplitude")),
        (Some(_), Some(_)) => unreachable!(),
    };
    if matches!(args.kind, Splitting) && !signal.is_real() {
        return Err(usage("g-n requires a real-valued signal"));
    }
    let grid = signal.len();
    let d_max = args.d_max.unwrap_or(match args.kind {
        Dyson => 12,
        VolumeExpansion => 14,
        _ => 0,
    });
    if matches!(args.kind, VolumeExpansion) && d_max == 0 {
        return Err(usage("volume-expansion needs --dmax >= 1"));
    }

    let diff_column = amplitude.is_some() && matches!(args.kind, Dyson | VolumeExpansion);
    let mut columns = vec![
        "n", "a11_re", "a11_im", "a12_re", "a12_im", "a21_re", "a21_im", "a22_re", "a22_im",
        "det_err", "unitarity_err", "su2",
    ];
    if diff_column {
        columns.push("diff_closed_form");
    }
    let mut table = Table::new("nlft", &columns);
    table.param("kind", format!("{:?}", args.kind));
    table.param("size", grid);
    if let Some(u) = amplitude {
        table.param("amplitude", u);
    }
    if matches!(args.kind, Dyson | VolumeExpansion) {
        table.param("dmax", d_max);
        table.param(
            "quad_points",
            if matches!(args.kind, Dyson) {
                DYSON_QUAD
            } else {
                VOLUME_QUAD
            },
        );
    }

    for n in 0..grid {
        let value = match args.kind {
            ConstantClosedForm => nlft_constant(amplitude.expect("validated"), n as i64),
            Step => nlft_step(&signal, n as i64),
            Dyson => nlft_dyson(&signal, n as i64, d_max, DYSON_QUAD),
            VolumeExpansion => {
                nlft_volume_expansion(amplitude.expect("validated"), n as i64, d_max, VOLUME_QUAD)
            }
            Euler => f_n(&signal, n),
            Splitting => g_n(&signal, n),
        };
        let det_err = (value.det() - C64::ONE).norm();
        let unit_err = (value.adjoint() * value).max_diff(&Mat2::identity());
        let mut row = vec![Cell::Int(n as i64)];
        for r in 0..2 {
            for c in 0..2 {
                row.push(Cell::Float(value.m[r][c].re));
                row.push(Cell::Float(value.m[r][c].im));
            }
        }
        row.push(Cell::Float(det_err));
        row.push(Cell::Float(unit_err));
        row.push(Cell::Bool(is_su2(&value, 1e-10)));
        if diff_column {
            let closed = nlft_constant(amplitude.expect("validated"), n as i64);
            row.push(Cell::Float(value.max_diff(&closed)));
        }
        table.push_row(row);
    }
    Ok(Outcome {
        table,
        failure: None,
    })
}

/// `beta`: discrete beta density against the continuous one over a list of
/// grid sizes.
pub fn beta(a: u32, b: u32, lambda: f64, sizes: &[usize]) -> Result<Outcome, CliError> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(usage("--lambda must lie in [0, 1]"));
    }
    if sizes.is_empty() {
        return Err(usage("--sizes must list at least one grid size"));
    }
    let rows = convergence_table(a, b, lambda, sizes)?;
    // P_N is a density against counting measure over 1/N; the probability
    // of the point l/N itself is P_N / N, reported alongside.
    let mut table = Table::new(
        "beta",
        &["N", "l", "P_N", "point_mass", "p_beta", "abs_err", "c_gap"],
    );
    table.param("a", a);
    table.param("b", b);
    table.param("lambda", lambda);
    for row in rows {
        table.push_row(vec![
            Cell::Int(row.grid as i64),
            Cell::Int(row.l as i64),
            Cell::Float(row.p_discrete),
            Cell::Float(row.p_discrete / row.grid as f64),
            Cell::Float(row.p_density),
            Cell::Float(row.abs_err),
            Cell::Float(row.c_gap),
        ]);
    }
    Ok(Outcome {
        table,
        failure: None,
    })
}

/// `aq-limit`: scaled distinct-parts counts against the beta density.
pub fn aq_limit(degree: usize, lambda: f64, sizes: &[usize]) -> Result<Outcome, CliError> {
    if degree == 0 {
        return Err(usage("--degree must be at least 1"));
    }
    if !(0.0..=1.0).contains(&lambda) {
        return Err(usage("--lambda must lie in [0, 1]"));
    }
    if sizes.is_empty() || sizes.iter().any(|&n| n < degree) {
        return Err(usage("every grid size must be at least the degree"));
    }
    let rows = aq_beta_limit_check(degree, lambda, sizes);
    let mut table = Table::new(
        "aq-limit",
        &["N", "l", "scaled_aq", "density_target", "vol_target", "abs_err"],
    );
    table.param("degree", degree);
    table.param("lambda", lambda);
    for row in rows {
        table.push_row(vec![
            Cell::Int(row.grid as i64),
            Cell::Int(row.l as i64),
            Cell::Float(row.scaled_aq),
            Cell::Float(row.density_target),
            Cell::Float(row.vol_target),
            Cell::Float(row.abs_err),
        ]);
    }
    Ok(Outcome {
        table,
        failure: None,
    })
}

pub struct VolumeArgs {
    pub degree: usize,
    pub grid_points: usize,
    pub lambda: Option<f64>,
    pub samples: Option<u64>,
    pub seed: Option<u64>,
}

/// `volume`: closed-form volumes on a grid, or a seeded Monte Carlo
/// estimate at one bin compared against the formula.
pub fn volume(args: VolumeArgs) -> Result<Outcome, CliError> {
    if args.degree == 0 {
        return Err(usage("--degree must be at least 1"));
    }
    match args.samples {
        None => {
            if args.lambda.is_some() || args.seed.is_some() {
                return Err(usage("--lambda/--seed are Monte Carlo flags; add --samples"));
            }
            let points = args.grid_points;
            if points == 0 {
                return Err(usage("--size must be at least 1"));
            }
            let mut table = Table::new("volume", &["l", "vol_formula"]);
            table.param("degree", args.degree);
            table.param("grid_points", points);
            for i in 0..=points {
                let l = i as f64 / points as f64;
                table.push_row(vec![Cell::Float(l), Cell::Float(vol_formula(args.degree, l))]);
            }
            Ok(Outcome {
                table,
                failure: None,
            })
        }
        Some(samples) => {
            let seed = args
                .seed
                .ok_or_else(|| usage("--seed is mandatory for Monte Carlo runs"))?;
            if samples < 10_000 {
                return Err(usage("--samples must be at least 10000"));
            }
            let lambda = args
                .lambda
                .ok_or_else(|| usage("Monte Carlo mode needs --lambda (bin center)"))?;
            const BIN_WIDTH: f64 = 0.02;
            if !(BIN_WIDTH / 2.0..=1.0 - BIN_WIDTH / 2.0).contains(&lambda) {
                return Err(usage("bin must fit inside [0, 1]"));
            }
            let est = vol_mc(args.degree, lambda, BIN_WIDTH, samples, seed)?;
            let expect = vol_formula(args.degree, lambda);
            let sigmas = (est.volume - expect).abs() / est.stderr;
            let mut table = Table::new(
                "volume",
                &[
                    "lambda",
                    "vol_formula",
                    "vol_mc",
                    "stderr",
                    "sigmas",
                    "within_3_sigma",
                    "count",
                    "seed",
                ],
            );
            table.param("degree", args.degree);
            table.param("samples", samples);
            table.param("seed", seed);
            table.param("bin_width", BIN_WIDTH);
            table.push_row(vec![
                Cell::Float(lambda),
                Cell::Float(expect),
                Cell::Float(est.volume),
                Cell::Float(est.stderr),
                Cell::Float(sigmas),
                Cell::Bool(sigmas <= 3.0),
                Cell::Count(est.count.into()),
                Cell::Count(seed.into()),
            ]);
            Ok(Outcome {
                table,
                failure: None,
            })
        }
    }
}

/// `multinomial`: the alt-class probabilities by the transform route and by
/// direct enumeration, with the total-mass checksum.
pub fn multinomial(
    signal: &Signal,
    degree: usize,
    shift: Option<usize>,
    declared_size: Option<usize>,
) -> Result<Outcome, CliError> {
    if degree == 0 {
        return Err(usage("--degree must be at least 1"));
    }
    let grid = signal.len();
    if let Some(declared) = declared_size {
        if declared != grid {
            return Err(usage(format!(
                "--size {declared} does not match the {grid} samples in the signal file"
            )));
        }
    }
    if let Some(l) = shift {
        if l >= grid {
            return Err(usage("--shift must be below the grid size"));
        }
    }
    signal
        .check_simplex(1e-12)
        .map_err(|e| usage(e.to_string()))?;

    let mut table = Table::new(
        "multinomial",
        &["l", "p_alt", "p_alt_direct", "abs_diff"],
    );
    table.param("size", grid);
    table.param("degree", degree);
    let mut failure = None;
    let mut total = 0.0;
    for l in 0..grid {
        let transform_route = p_alt(signal, degree, l)?;
        let direct = p_alt_direct(signal, degree, l)?;
        let diff = (transform_route - direct).abs();
        total += transform_route;
        if diff > 1e-9 && failure.is_none() {
            failure = Some(format!(
                "p_alt routes disagree by {diff:.3e} at (N={grid}, l={l}, d={degree})"
            ));
        }
        if shift.is_none_or(|s| s == l) {
            table.push_row(vec![
                Cell::Int(l as i64),
                Cell::Float(transform_route),
                Cell::Float(direct),
                Cell::Float(diff),
            ]);
        }
    }
    table.footer("sum_p_alt", Cell::Float(total));
    Ok(Outcome { table, failure })
}
