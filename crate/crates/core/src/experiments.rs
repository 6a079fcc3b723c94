//! Monte Carlo sweeps over `(n, α)` grids.
//!
//! Every trial is seeded independently by
//!
//! ```text
//! trial_seed = mix_words([base_seed, n, round(α · 10^6), t])
//! ```
//!
//! (see [`crate::rng::mix_words`]), where `t` is the 0-based trial index and
//! `round(α · 10^6)` is taken as a signed 64-bit integer reinterpreted as
//! unsigned. Records are therefore a pure function of the configuration,
//! whatever the number of worker threads.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analytic::wilson_interval;
use crate::classify::{is_as, is_cfs};
use crate::error::{Error, Result};
use crate::graph::{generate_gnp, GenSpec};
use crate::rng::mix_words;
use crate::squares::square_components;

/// Confidence level of the per-cell intervals.
pub const CONFIDENCE: f64 = 0.95;

pub const DEFAULT_TRIALS_PER_CELL: u64 = 400;

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "ASCFS_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Property {
    #[serde(rename = "AS", alias = "as")]
    As,
    #[serde(rename = "CFS", alias = "cfs")]
    Cfs,
    #[serde(rename = "CONNECTED", alias = "connected")]
    Connected,
}

/// How a grid value `α` becomes an edge probability at `n` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DensityRule {
    /// `α (ln n / n)^(1/3)`
    #[serde(alias = "as")]
    AlphaCubeRootLogOverN,
    /// `α / sqrt(n)`
    #[serde(alias = "inv-sqrt")]
    AlphaInvSqrt,
    /// `α ln n / n`
    #[serde(alias = "log-over-n")]
    AlphaLogOverN,
    /// `α`
    #[serde(alias = "absolute")]
    Absolute,
}

impl DensityRule {
    /// Edge probability, clamped to `[0, 1]`. Rules involving `ln n` give 0
    /// below two vertices.
    pub fn density(&self, n: usize, alpha: f64) -> f64 {
        let nf = n as f64;
        let raw = match self {
            DensityRule::AlphaCubeRootLogOverN if n < 2 => 0.0,
            DensityRule::AlphaLogOverN if n < 2 => 0.0,
            DensityRule::AlphaCubeRootLogOverN => alpha * (nf.ln() / nf).cbrt(),
            DensityRule::AlphaInvSqrt if n == 0 => 0.0,
            DensityRule::AlphaInvSqrt => alpha / nf.sqrt(),
            DensityRule::AlphaLogOverN => alpha * nf.ln() / nf,
            DensityRule::Absolute => alpha,
        };
        raw.clamp(0.0, 1.0)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Metrics {
    pub support_fraction: bool,
    pub blocks_examined: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub property: Property,
    pub density_rule: DensityRule,
    pub n_values: Vec<usize>,
    pub alpha_values: Vec<f64>,
    #[serde(default = "default_trials")]
    pub trials_per_cell: u64,
    #[serde(default)]
    pub base_seed: u64,
    #[serde(default)]
    pub metrics: Metrics,
}

fn default_trials() -> u64 {
    DEFAULT_TRIALS_PER_CELL
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_values.is_empty() || self.alpha_values.is_empty() {
            return Err(Error::InvalidInput("n_values and alpha_values must be nonempty".into()));
        }
        if self.trials_per_cell == 0 {
            return Err(Error::InvalidInput("trials_per_cell must be at least 1".into()));
        }
        if let Some(a) = self.alpha_values.iter().find(|a| !a.is_finite()) {
            return Err(Error::InvalidInput(format!("alpha {a} is not finite")));
        }
        Ok(())
    }

    /// Grid cells in emission order: `n` outer, `α` inner.
    pub fn cells(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.n_values
            .iter()
            .flat_map(move |&n| self.alpha_values.iter().map(move |&a| (n, a)))
    }
}

/// `count` values `start + k·step`, each rounded to 9 decimals so that
/// accumulated float error never leaks into seeds or output.
pub fn arithmetic_grid(start: f64, step: f64, count: usize) -> Vec<f64> {
    (0..count)
        .map(|k| ((start + k as f64 * step) * 1e9).round() / 1e9)
        .collect()
}

/// Integer key of `α` used in seeding.
pub fn alpha_key(alpha: f64) -> i64 {
    (alpha * 1e6).round() as i64
}

pub fn trial_seed(base_seed: u64, n: usize, alpha: f64, trial: u64) -> u64 {
    mix_words(&[base_seed, n as u64, alpha_key(alpha) as u64, trial])
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct TrialOutcome {
    pub success: bool,
    pub support_fraction: Option<f64>,
    pub blocks_examined: Option<u64>,
}

/// Samples one graph and evaluates `property` on it.
///
/// CFS trials with a negative verdict also run the AS decider and fail with
/// [`Error::Invariant`] if it succeeds, since AS implies CFS.
pub fn run_trial(
    property: Property,
    n: usize,
    p: f64,
    seed: u64,
    metrics: Metrics,
) -> Result<TrialOutcome> {
    let g = generate_gnp(GenSpec::new(n, p, seed))?;
    let mut out = TrialOutcome::default();
    match property {
        Property::Connected => {
            out.success = g.is_connected();
            if metrics.blocks_examined {
                out.blocks_examined = Some(is_as(&g).blocks_examined);
            }
        }
        Property::As => {
            let a = is_as(&g);
            out.success = a.verdict;
            if metrics.blocks_examined {
                out.blocks_examined = Some(a.blocks_examined);
            }
        }
        Property::Cfs => {
            let cfs = is_cfs(&g);
            out.success = cfs.verdict;
            if !cfs.verdict || metrics.blocks_examined {
                let a = is_as(&g);
                if a.verdict && !cfs.verdict {
                    return Err(Error::Invariant(format!(
                        "AS but not CFS at n = {n}, p = {p}, seed = {seed}"
                    )));
                }
                if metrics.blocks_examined {
                    out.blocks_examined = Some(a.blocks_examined);
                }
            }
            if metrics.support_fraction {
                let fraction = match &cfs.complex {
                    Some(cx) => cx.largest_support_fraction(),
                    None => square_components(&g).largest_support_fraction(),
                };
                out.support_fraction = Some(fraction);
            }
        }
    }
    if metrics.support_fraction && out.support_fraction.is_none() {
        out.support_fraction = Some(square_components(&g).largest_support_fraction());
    }
    Ok(out)
}

/// One grid cell of a sweep. Serializes to one CSV row.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub property: Property,
    pub n: usize,
    pub alpha: f64,
    pub p: f64,
    pub trials: u64,
    pub successes: u64,
    pub p_hat: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
    pub mean_support_fraction: Option<f64>,
    pub mean_blocks_examined: Option<f64>,
    pub base_seed: u64,
}

pub const CSV_HEADER: &str = "property,n,alpha,p,trials,successes,p_hat,ci_lo,ci_hi,mean_support_fraction,mean_blocks_examined,base_seed";

/// A sweep that stopped early, with the cells finished before the failure.
#[derive(Debug)]
pub struct SweepError {
    pub completed: Vec<SweepRecord>,
    pub error: Error,
}

impl std::fmt::Display for SweepError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "sweep aborted after {} cells: {}", self.completed.len(), self.error)
    }
}

impl std::error::Error for SweepError {}

/// Worker count from `ASCFS_THREADS`, if set to a positive integer.
pub fn threads_from_env() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(k) if k > 0 => Ok(Some(k)),
            _ => Err(Error::InvalidInput(format!(
                "{THREADS_ENV} must be a positive integer, got {s:?}"
            ))),
        },
    }
}

pub fn run_cell(config: &SweepConfig, n: usize, alpha: f64) -> Result<SweepRecord> {
    let p = config.density_rule.density(n, alpha);
    let outcomes = (0..config.trials_per_cell)
        .into_par_iter()
        .map(|t| {
            run_trial(
                config.property,
                n,
                p,
                trial_seed(config.base_seed, n, alpha, t),
                config.metrics,
            )
        })
        .collect::<Result<Vec<_>>>()?;

    let trials = config.trials_per_cell;
    let successes = outcomes.iter().filter(|o| o.success).count() as u64;
    let (ci_lo, ci_hi) = wilson_interval(successes, trials, CONFIDENCE)?;
    // Sequential sums in trial order keep float results thread-independent.
    let mean = |xs: Vec<f64>| xs.iter().sum::<f64>() / trials as f64;
    let mean_support_fraction = config
        .metrics
        .support_fraction
        .then(|| mean(outcomes.iter().map(|o| o.support_fraction.unwrap_or(0.0)).collect()));
    let mean_blocks_examined = config.metrics.blocks_examined.then(|| {
        mean(
            outcomes
                .iter()
                .map(|o| o.blocks_examined.unwrap_or(0) as f64)
                .collect(),
        )
    });
    Ok(SweepRecord {
        property: config.property,
        n,
        alpha,
        p,
        trials,
        successes,
        p_hat: successes as f64 / trials as f64,
        ci_lo,
        ci_hi,
        mean_support_fraction,
        mean_blocks_examined,
        base_seed: config.base_seed,
    })
}

/// Runs every cell in grid order, calling `on_record` as each completes.
pub fn run_sweep_with(
    config: &SweepConfig,
    threads: Option<usize>,
    mut on_record: impl FnMut(&SweepRecord),
) -> std::result::Result<Vec<SweepRecord>, SweepError> {
    let fail = |completed, error| SweepError { completed, error };
    if let Err(e) = config.validate() {
        return Err(fail(Vec::new(), e));
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(k) = threads {
        builder = builder.num_threads(k);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => return Err(fail(Vec::new(), Error::Resource(e.to_string()))),
    };
    let mut done = Vec::new();
    for (n, alpha) in config.cells() {
        match pool.install(|| run_cell(config, n, alpha)) {
            Ok(rec) => {
                on_record(&rec);
                done.push(rec);
            }
            Err(e) => return Err(fail(done, e)),
        }
    }
    Ok(done)
}

/// Runs a sweep with the worker count taken from `ASCFS_THREADS`.
pub fn run_sweep(config: &SweepConfig) -> std::result::Result<Vec<SweepRecord>, SweepError> {
    let threads = threads_from_env().map_err(|error| SweepError {
        completed: Vec::new(),
        error,
    })?;
    run_sweep_with(config, threads, |_| {})
}

/// Writes records as CSV with the fixed header; absent metrics are empty.
pub fn write_csv<W: std::io::Write>(records: &[SweepRecord], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_HEADER.split(','))
        .map_err(|e| Error::Io(e.into()))?;
    for r in records {
        w.serialize(r).map_err(|e| Error::Io(e.into()))?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: std::io::Read>(input: R) -> Result<Vec<SweepRecord>> {
    let mut r = csv::Reader::from_reader(input);
    let header: Vec<String> = r
        .headers()
        .map_err(|e| Error::parse(1, e.to_string()))?
        .iter()
        .map(str::to_owned)
        .collect();
    if header.join(",") != CSV_HEADER {
        return Err(Error::parse(1, format!("unexpected header {:?}", header.join(","))));
    }
    r.deserialize()
        .enumerate()
        .map(|(i, row)| row.map_err(|e| Error::parse(i + 2, e.to_string())))
        .collect()
}
