//! Command-line front end. [`run`] parses arguments, performs one command,
//! and returns the process exit status.
//!
//! Exit codes are stable: 0 success, 1 property does not hold (`check`
//! only), 2 usage or parse error, 3 resource limit or aborted sweep.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::analytic::{threshold, ThresholdKind};
use crate::classify::{is_as, is_cfs, is_nontrivial_join, CoxeterLabel};
use crate::codec::{read_graph, write_graph};
use crate::error::Error;
use crate::experiments::{
    arithmetic_grid, run_sweep_with, threads_from_env, DensityRule, Metrics, Property,
    SweepConfig, CSV_HEADER, DEFAULT_TRIALS_PER_CELL,
};
use crate::graph::{generate_gnp_capped, GenSpec, Graph, DEFAULT_MEMORY_CAP_BYTES};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    PropertyFalse = 1,
    Usage = 2,
    Resource = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    fn for_error(e: &Error) -> Self {
        match e {
            Error::Resource(_) | Error::Invariant(_) => ExitStatus::Resource,
            _ => ExitStatus::Usage,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "ascfs", version, about = "Decide AS / CFS for graphs and sweep random-graph thresholds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sample a G(n, p) graph and write it in the text format.
    Gen(GenArgs),
    /// Decide a property of a graph file.
    Check(CheckArgs),
    /// Run a Monte Carlo sweep and write CSV.
    Sweep(SweepArgs),
    /// Print the threshold curves at n.
    Thresholds(ThresholdArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RuleArg {
    /// alpha (ln n / n)^(1/3)
    As,
    /// alpha / sqrt(n)
    InvSqrt,
    /// alpha ln n / n
    LogOverN,
    /// alpha
    Absolute,
}

impl From<RuleArg> for DensityRule {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::As => DensityRule::AlphaCubeRootLogOverN,
            RuleArg::InvSqrt => DensityRule::AlphaInvSqrt,
            RuleArg::LogOverN => DensityRule::AlphaLogOverN,
            RuleArg::Absolute => DensityRule::Absolute,
        }
    }
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, conflicts_with_all = ["alpha", "rule"], required_unless_present = "alpha")]
    p: Option<f64>,
    #[arg(long, requires = "rule")]
    alpha: Option<f64>,
    #[arg(long, value_enum, requires = "alpha")]
    rule: Option<RuleArg>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Adjacency memory cap in bytes.
    #[arg(long, default_value_t = DEFAULT_MEMORY_CAP_BYTES)]
    mem_cap: u64,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CheckProperty {
    As,
    Cfs,
    Join,
    Coxeter,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum)]
    property: CheckProperty,
    /// Print a single-line JSON report.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PropertyArg {
    As,
    Cfs,
    Connected,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// JSON configuration; excludes the inline grid flags.
    #[arg(long, conflicts_with_all = ["property", "rule", "n", "alpha", "trials", "seed", "metrics"])]
    config: Option<PathBuf>,
    #[arg(long, value_enum, required_unless_present = "config")]
    property: Option<PropertyArg>,
    #[arg(long, value_enum, required_unless_present = "config")]
    rule: Option<RuleArg>,
    /// Vertex counts: `300,400` or `start:step:end`.
    #[arg(long, required_unless_present = "config")]
    n: Option<String>,
    /// Grid values: `0.8,0.9` or `start:step:end`.
    #[arg(long, required_unless_present = "config")]
    alpha: Option<String>,
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
    /// Comma list of `support_fraction`, `blocks_examined`.
    #[arg(long)]
    metrics: Option<String>,
    /// Output CSV; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ThresholdArgs {
    #[arg(long)]
    n: usize,
}

/// Runs the CLI on `args` (program name first).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let informational = !e.use_stderr();
            let _ = if informational {
                write!(stdout, "{e}")
            } else {
                write!(stderr, "{e}")
            };
            return if informational {
                ExitStatus::Success
            } else {
                ExitStatus::Usage
            };
        }
    };
    let result = match cli.command {
        Command::Gen(a) => cmd_gen(a, stdout, stderr),
        Command::Check(a) => cmd_check(a, stdout),
        Command::Sweep(a) => cmd_sweep(a, stdout, stderr),
        Command::Thresholds(a) => cmd_thresholds(a, stdout),
    };
    match result {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            ExitStatus::for_error(&e)
        }
    }
}

fn write_output(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_gen(a: GenArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<ExitStatus, Error> {
    let p = match (a.p, a.alpha, a.rule) {
        (Some(p), None, None) => p,
        (None, Some(alpha), Some(rule)) => DensityRule::from(rule).density(a.n, alpha),
        _ => return Err(Error::InvalidInput("give either --p or both --alpha and --rule".into())),
    };
    let g = generate_gnp_capped(GenSpec::new(a.n, p, a.seed), a.mem_cap)?;
    writeln!(stderr, "p = {p}")?;
    write_output(&a.out, &write_graph(&g), stdout)?;
    Ok(ExitStatus::Success)
}

fn load_graph(path: &PathBuf) -> Result<Graph, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    read_graph(&text)
}

fn check_report(g: &Graph, property: CheckProperty) -> (bool, Value) {
    match property {
        CheckProperty::As => {
            let out = is_as(g);
            let witness = out.witness.as_ref().map(|b| {
                json!({
                    "ends": [b.ends.lo(), b.ends.hi()],
                    "core": b.core.to_vec(),
                })
            });
            (
                out.verdict,
                json!({
                    "property": "as",
                    "verdict": out.verdict,
                    "witness": witness,
                    "blocks_examined": out.blocks_examined,
                }),
            )
        }
        CheckProperty::Cfs => {
            let mut out = is_cfs(g);
            let component = out.witness_component(g);
            let cx = out.complex.get_or_insert_with(|| crate::squares::square_components(g));
            let witness = component.map(|id| {
                json!({
                    "id": [id.0.lo(), id.0.hi()],
                    "support": cx.component(id).map(|c| c.support.clone()).unwrap_or_default(),
                })
            });
            let reason = if out.verdict {
                None
            } else if cx.squares().is_empty() || out.clique_factor.len() == g.vertex_count() {
                Some("no induced 4-cycles outside clique factor")
            } else {
                Some("no square component covers all vertices outside the clique factor")
            };
            (
                out.verdict,
                json!({
                    "property": "cfs",
                    "verdict": out.verdict,
                    "clique_factor": out.clique_factor.to_vec(),
                    "witness": witness,
                    "square_count": cx.squares().len(),
                    "component_count": cx.components().len(),
                    "largest_support_fraction": cx.largest_support_fraction(),
                    "reason": reason,
                }),
            )
        }
        CheckProperty::Join => {
            let join = is_nontrivial_join(g);
            let verdict = join.is_some();
            (
                verdict,
                json!({
                    "property": "join",
                    "verdict": verdict,
                    "witness": join.map(|b| json!({"a": b.a, "b": b.b})),
                }),
            )
        }
        CheckProperty::Coxeter => {
            let join = is_nontrivial_join(g);
            let cfs = join.is_none() && is_cfs(g).verdict;
            let label = if join.is_some() {
                CoxeterLabel::NontrivialJoin
            } else if cfs {
                CoxeterLabel::ThickOfOrderExactly1
            } else {
                CoxeterLabel::Inconclusive
            };
            (
                true,
                json!({
                    "property": "coxeter",
                    "verdict": true,
                    "label": label.as_str(),
                    "witness": join.map(|b| json!({"a": b.a, "b": b.b})),
                }),
            )
        }
    }
}

fn human_report(report: &Value) -> String {
    let mut s = String::new();
    if let Value::Object(map) = report {
        for (k, v) in map {
            if v.is_null() {
                continue;
            }
            let shown = match v {
                Value::String(t) => t.clone(),
                other => other.to_string(),
            };
            s.push_str(&format!("{k}: {shown}\n"));
        }
    }
    s
}

fn cmd_check(a: CheckArgs, stdout: &mut dyn Write) -> Result<ExitStatus, Error> {
    let g = load_graph(&a.input)?;
    let (holds, body) = check_report(&g, a.property);
    let mut report = json!({
        "schema_version": REPORT_SCHEMA_VERSION,
        "n": g.vertex_count(),
        "m": g.edge_count(),
    });
    if let (Value::Object(dst), Value::Object(src)) = (&mut report, body) {
        dst.extend(src);
    }
    if a.json {
        writeln!(stdout, "{}", serde_json::to_string(&report).expect("json"))?;
    } else {
        write!(stdout, "{}", human_report(&report))?;
    }
    Ok(if holds {
        ExitStatus::Success
    } else {
        ExitStatus::PropertyFalse
    })
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, Error> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::InvalidInput(format!("bad {what} value {t:?}")))
        })
        .collect()
}

/// `a,b,c` or inclusive `start:step:end`.
fn parse_grid(s: &str, what: &str) -> Result<Vec<f64>, Error> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [_] => parse_list(s, what),
        [start, step, end] => {
            let [start, step, end]: [f64; 3] = [start, step, end]
                .map(|t| t.trim().parse::<f64>().unwrap_or(f64::NAN));
            if !(start.is_finite() && end.is_finite() && step > 0.0 && end >= start) {
                return Err(Error::InvalidInput(format!("bad {what} range {s:?}")));
            }
            let count = ((end - start) / step + 1e-9).floor() as usize + 1;
            Ok(arithmetic_grid(start, step, count))
        }
        _ => Err(Error::InvalidInput(format!("bad {what} grid {s:?}"))),
    }
}

fn inline_config(a: &SweepArgs) -> Result<SweepConfig, Error> {
    let property = match a.property.expect("required by clap") {
        PropertyArg::As => Property::As,
        PropertyArg::Cfs => Property::Cfs,
        PropertyArg::Connected => Property::Connected,
    };
    let n_values = parse_grid(a.n.as_deref().unwrap_or_default(), "n")?
        .into_iter()
        .map(|x| {
            if x >= 0.0 && x.fract() == 0.0 {
                Ok(x as usize)
            } else {
                Err(Error::InvalidInput(format!("n must be a non-negative integer, got {x}")))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let mut metrics = Metrics::default();
    if let Some(m) = &a.metrics {
        for flag in m.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match flag {
                "support_fraction" => metrics.support_fraction = true,
                "blocks_examined" => metrics.blocks_examined = true,
                other => return Err(Error::InvalidInput(format!("unknown metric {other:?}"))),
            }
        }
    }
    Ok(SweepConfig {
        property,
        density_rule: a.rule.expect("required by clap").into(),
        n_values,
        alpha_values: parse_grid(a.alpha.as_deref().unwrap_or_default(), "alpha")?,
        trials_per_cell: a.trials.unwrap_or(DEFAULT_TRIALS_PER_CELL),
        base_seed: a.seed.unwrap_or(0),
        metrics,
    })
}

fn cmd_sweep(a: SweepArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<ExitStatus, Error> {
    let config = match &a.config {
        Some(path) => {
            let text = fs::read_to_string(path)?;
            serde_json::from_str(&text)
                .map_err(|e| Error::parse(e.line(), format!("config: {e}")))?
        }
        None => inline_config(&a)?,
    };
    config.validate()?;
    let threads = threads_from_env()?;

    let mut sink: Box<dyn Write> = match &a.out {
        Some(path) => Box::new(fs::File::create(path)?),
        None => Box::new(&mut *stdout),
    };
    writeln!(sink, "{CSV_HEADER}")?;
    let mut write_failed = None;
    let total = config.n_values.len() * config.alpha_values.len();
    let mut done = 0;
    let result = run_sweep_with(&config, threads, |rec| {
        done += 1;
        let _ = writeln!(
            stderr,
            "[{done}/{total}] n={} alpha={} p_hat={}",
            rec.n, rec.alpha, rec.p_hat
        );
        if write_failed.is_none() {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
            let row = w
                .serialize(rec)
                .map_err(|e| Error::Io(e.into()))
                .and_then(|_| w.into_inner().map_err(|e| Error::Io(e.into_error())));
            match row.and_then(|bytes| {
                sink.write_all(&bytes)?;
                sink.flush()?;
                Ok(())
            }) {
                Ok(()) => {}
                Err(e) => write_failed = Some(e),
            }
        }
    });
    if let Some(e) = write_failed {
        return Err(e);
    }
    match result {
        Ok(_) => Ok(ExitStatus::Success),
        Err(e) => {
            writeln!(stderr, "error: {e}")?;
            Ok(ExitStatus::Resource)
        }
    }
}

/// Six significant digits in fixed notation.
fn six_significant(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn cmd_thresholds(a: ThresholdArgs, stdout: &mut dyn Write) -> Result<ExitStatus, Error> {
    let mut rows = Vec::new();
    for kind in ThresholdKind::ALL {
        rows.push((kind.name(), threshold(kind, a.n)?));
    }
    writeln!(stdout, "{:<16}p", "kind")?;
    for (name, value) in rows {
        writeln!(stdout, "{:<16}{}", name, six_significant(value))?;
    }
    Ok(ExitStatus::Success)
}
