//! Command-line harness: argument definitions, result writers and run
//! manifests. The `trendpaa` binary is a thin wrapper around [`run`].

mod tables;

use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

pub use tables::{
    bench_table, classify_table, detect_table, reconstruct_table, tightness_table, BenchRow,
    ClassifyRow, DetectRow, ReconstructTable, TightnessRow, BENCH_MEASURES,
};

use crate::dataset::{DatasetPair, LabeledDataset};
use crate::distance::NtCountPolicy;
use crate::error::Error;
use crate::mining::{Measure, ANOMALY_PROTOCOL, F1_AVERAGING};
use crate::synthetic::gaussian_walks;
use crate::ucr::{load_ucr_file, Delimiter};

#[derive(Debug, Parser)]
#[command(
    name = "trendpaa",
    version,
    about = "Trend-augmented PAA experiments on UCR-format data"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// k-NN classification with s chosen by leave-one-out on the training split.
    Classify(ClassifyArgs),
    /// LOF anomaly detection on a two-class test split.
    Detect(DetectArgs),
    /// Mean PAA and NT_PAA tightness against Euclidean distance per s.
    Tightness(TightnessArgs),
    /// PAA step reconstructions of one series at several segment counts.
    Reconstruct(ReconstructArgs),
    /// Median wall-clock time of PAA, BT_PAA and NT_PAA anomaly runs per s.
    Bench(BenchArgs),
    /// Class count, split sizes and series length of a train/test pair.
    Summary(SummaryArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct DataArgs {
    #[arg(long)]
    pub train: PathBuf,
    #[arg(long)]
    pub test: PathBuf,
    /// Dataset name used in output rows (defaults to the train file stem
    /// without its `_TRAIN` suffix).
    #[arg(long)]
    pub name: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub delimiter: Delimiter,
    /// z-normalize every series before use.
    #[arg(long)]
    pub normalize: bool,
}

#[derive(Debug, Args)]
pub struct SRangeArgs {
    /// Fixed reduction ratio; overrides the sweep.
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long, default_value_t = 2)]
    pub s_min: usize,
    #[arg(long, default_value_t = 19)]
    pub s_max: usize,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Result file; a `<out>.manifest.json` sidecar is written next to it.
    /// Without it results go to stdout and the manifest to stderr.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub data: DataArgs,
    /// Measures to evaluate (comma separated); all five by default.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub measure: Vec<Measure>,
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[command(flatten)]
    pub s: SRangeArgs,
    #[arg(long, value_enum, default_value_t)]
    pub nt_policy: NtCountPolicy,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct DetectArgs {
    #[command(flatten)]
    pub data: DataArgs,
    #[arg(long, value_enum, value_delimiter = ',')]
    pub measure: Vec<Measure>,
    #[command(flatten)]
    pub s: SRangeArgs,
    /// Smallest LOF neighbour count tried.
    #[arg(long, default_value_t = 2)]
    pub k_min: usize,
    /// Largest LOF neighbour count tried.
    #[arg(long, default_value_t = 10)]
    pub k_max: usize,
    #[arg(long, value_enum, default_value_t)]
    pub nt_policy: NtCountPolicy,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct TightnessArgs {
    /// Use the series of this UCR file instead of random walks.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    #[arg(long, default_value_t = 150)]
    pub length: usize,
    #[arg(long, default_value_t = 1)]
    pub s_min: usize,
    #[arg(long, default_value_t = 15)]
    pub s_max: usize,
    #[arg(long, value_enum, default_value_t)]
    pub nt_policy: NtCountPolicy,
    #[arg(long)]
    pub normalize: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ReconstructArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub row: usize,
    /// Segment counts (comma separated).
    #[arg(long, value_delimiter = ',', default_values_t = [2, 8, 16, 24])]
    pub w: Vec<usize>,
    #[arg(long)]
    pub normalize: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Two-class UCR files; each is scored as a whole.
    #[arg(long = "data", required = true)]
    pub data: Vec<PathBuf>,
    #[arg(long, default_value_t = 2)]
    pub s_min: usize,
    #[arg(long, default_value_t = 10)]
    pub s_max: usize,
    #[arg(long, default_value_t = 2)]
    pub k_min: usize,
    #[arg(long, default_value_t = 10)]
    pub k_max: usize,
    #[arg(long, default_value_t = 5)]
    pub repeats: usize,
    /// Worker threads for the timed runs.
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    #[arg(long)]
    pub normalize: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SummaryArgs {
    #[command(flatten)]
    pub data: DataArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Everything needed to rerun a command, written next to its results.
#[derive(Debug, Clone, Default, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub version: String,
    pub datasets: Vec<String>,
    pub inputs: Vec<PathBuf>,
    pub measures: Vec<Measure>,
    pub s_range: Option<(usize, usize)>,
    pub k: Option<usize>,
    pub k_range: Option<(usize, usize)>,
    pub nt_policy: Option<NtCountPolicy>,
    pub seed: u64,
    pub normalize: bool,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub notes: Vec<String>,
    /// Excluded from any determinism guarantee.
    pub wall_clock_secs: f64,
}

impl RunManifest {
    fn new(command: &str, output: &OutputArgs) -> Self {
        Self {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed: output.seed,
            output: output.out.clone(),
            format: output.format,
            ..Self::default()
        }
    }
}

/// Failure of a CLI run, carrying its exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Input(#[from] Error),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

fn internal(e: impl std::fmt::Display) -> CliError {
    CliError::Internal(e.to_string())
}

/// Parses nothing; executes an already-parsed command line.
pub fn run(cli: Cli) -> ExitCode {
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

pub fn execute(command: Command) -> Result<(), CliError> {
    match command {
        Command::Classify(a) => cmd_classify(&a),
        Command::Detect(a) => cmd_detect(&a),
        Command::Tightness(a) => cmd_tightness(&a),
        Command::Reconstruct(a) => cmd_reconstruct(&a),
        Command::Bench(a) => cmd_bench(&a),
        Command::Summary(a) => cmd_summary(&a),
    }
}

fn load(path: &Path, delimiter: Delimiter, normalize: bool) -> Result<LabeledDataset, CliError> {
    let ds = load_ucr_file(path, delimiter)?;
    Ok(if normalize { ds.z_normalized() } else { ds })
}

fn dataset_name(path: &Path) -> String {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    stem.strip_suffix("_TRAIN")
        .or_else(|| stem.strip_suffix("_TEST"))
        .unwrap_or(&stem)
        .to_string()
}

fn load_pair(data: &DataArgs) -> Result<DatasetPair, CliError> {
    let train = load(&data.train, data.delimiter, data.normalize)?;
    let test = load(&data.test, data.delimiter, data.normalize)?;
    let name = data
        .name
        .clone()
        .unwrap_or_else(|| dataset_name(&data.train));
    Ok(DatasetPair::new(name, train, test)?)
}

fn s_range(args: &SRangeArgs) -> Result<RangeInclusive<usize>, CliError> {
    let r = match args.s {
        Some(s) => s..=s,
        None => args.s_min..=args.s_max,
    };
    check_range("s", &r)?;
    Ok(r)
}

fn check_range(what: &str, r: &RangeInclusive<usize>) -> Result<(), CliError> {
    if *r.start() == 0 || r.is_empty() {
        return Err(CliError::Usage(format!(
            "{what} range {}..={} must be non-empty and start at 1 or more",
            r.start(),
            r.end()
        )));
    }
    Ok(())
}

fn measures(requested: &[Measure]) -> Vec<Measure> {
    if requested.is_empty() {
        return Measure::ALL.to_vec();
    }
    Measure::ALL
        .into_iter()
        .filter(|m| requested.contains(m))
        .collect()
}

fn bounds(r: &RangeInclusive<usize>) -> (usize, usize) {
    (*r.start(), *r.end())
}

/// Writes serializable rows as CSV or JSON, then the manifest.
fn emit_rows<T: Serialize>(
    rows: &[T],
    output: &OutputArgs,
    manifest: &RunManifest,
) -> Result<(), CliError> {
    let mut buf = Vec::new();
    match output.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut buf);
            for r in rows {
                w.serialize(r).map_err(internal)?;
            }
            w.flush().map_err(internal)?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut buf, rows).map_err(internal)?;
            buf.push(b'\n');
        }
    }
    emit_bytes(&buf, output, manifest)
}

fn emit_bytes(bytes: &[u8], output: &OutputArgs, manifest: &RunManifest) -> Result<(), CliError> {
    let manifest_json = serde_json::to_string_pretty(manifest).map_err(internal)?;
    match &output.out {
        Some(path) => {
            fs::write(path, bytes).map_err(|e| internal(format!("{}: {e}", path.display())))?;
            let sidecar = manifest_path(path);
            fs::write(&sidecar, manifest_json + "\n")
                .map_err(|e| internal(format!("{}: {e}", sidecar.display())))?;
        }
        None => {
            io::stdout().write_all(bytes).map_err(internal)?;
            eprintln!("{manifest_json}");
        }
    }
    Ok(())
}

/// `results.csv` -> `results.csv.manifest.json`.
pub fn manifest_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".manifest.json");
    PathBuf::from(s)
}

fn cmd_classify(a: &ClassifyArgs) -> Result<(), CliError> {
    let start = Instant::now();
    let range = s_range(&a.s)?;
    if a.k == 0 {
        return Err(CliError::Usage("k must be at least 1".into()));
    }
    let pair = load_pair(&a.data)?;
    let ms = measures(&a.measure);
    let rows = classify_table(&pair, &ms, a.k, range.clone(), a.nt_policy)?;

    let mut m = RunManifest::new("classify", &a.output);
    m.datasets = vec![pair.name.clone()];
    m.inputs = vec![a.data.train.clone(), a.data.test.clone()];
    m.measures = ms;
    m.s_range = Some(bounds(&range));
    m.k = Some(a.k);
    m.nt_policy = Some(a.nt_policy);
    m.normalize = a.data.normalize;
    m.notes.push(format!("f1 averaging: {F1_AVERAGING}"));
    m.notes.push(
        "s chosen by leave-one-out k-NN error on the training split; ties -> smaller s".into(),
    );
    m.notes
        .push("k-NN ties: smaller summed neighbour distance, then smaller label".into());
    m.wall_clock_secs = start.elapsed().as_secs_f64();
    emit_rows(&rows, &a.output, &m)
}

fn cmd_detect(a: &DetectArgs) -> Result<(), CliError> {
    let start = Instant::now();
    let range = s_range(&a.s)?;
    let k_range = a.k_min..=a.k_max;
    check_range("k", &k_range)?;
    let pair = load_pair(&a.data)?;
    let ms = measures(&a.measure);
    let rows = detect_table(&pair, &ms, range.clone(), k_range.clone(), a.nt_policy)?;

    let mut m = RunManifest::new("detect", &a.output);
    m.datasets = vec![pair.name.clone()];
    m.inputs = vec![a.data.train.clone(), a.data.test.clone()];
    m.measures = ms;
    m.s_range = Some(bounds(&range));
    m.k_range = Some(bounds(&k_range));
    m.nt_policy = Some(a.nt_policy);
    m.normalize = a.data.normalize;
    m.notes.push(format!("protocol: {ANOMALY_PROTOCOL}"));
    m.notes
        .push("s chosen by best test AUC; ties -> smaller s, then smaller k".into());
    m.notes
        .push("train split not used as LOF reference context".into());
    m.wall_clock_secs = start.elapsed().as_secs_f64();
    emit_rows(&rows, &a.output, &m)
}

fn cmd_tightness(a: &TightnessArgs) -> Result<(), CliError> {
    let start = Instant::now();
    let range = a.s_min..=a.s_max;
    check_range("s", &range)?;
    let mut m = RunManifest::new("tightness", &a.output);
    let series = match &a.input {
        Some(path) => {
            m.inputs = vec![path.clone()];
            m.datasets = vec![dataset_name(path)];
            load(path, Delimiter::Auto, a.normalize)?.series().to_vec()
        }
        None => {
            if a.count < 2 || a.length == 0 {
                return Err(CliError::Usage(
                    "need --count >= 2 and --length >= 1".into(),
                ));
            }
            m.datasets = vec![format!(
                "gaussian-walks(count={}, length={})",
                a.count, a.length
            )];
            let walks = gaussian_walks(a.count, a.length, a.output.seed);
            if a.normalize {
                walks.iter().map(crate::series::z_normalize).collect()
            } else {
                walks
            }
        }
    };
    let rows = tightness_table(&series, range.clone(), a.nt_policy)?;
    m.measures = vec![Measure::Paa, Measure::NtPaa];
    m.s_range = Some(bounds(&range));
    m.nt_policy = Some(a.nt_policy);
    m.normalize = a.normalize;
    m.notes.push(
        "mean over all pairs with non-zero Euclidean distance; w = max(1, floor(n / s))".into(),
    );
    m.wall_clock_secs = start.elapsed().as_secs_f64();
    emit_rows(&rows, &a.output, &m)
}

fn cmd_reconstruct(a: &ReconstructArgs) -> Result<(), CliError> {
    let start = Instant::now();
    let ds = load(&a.input, Delimiter::Auto, a.normalize)?;
    let Some(ts) = ds.series().get(a.row) else {
        return Err(CliError::Usage(format!(
            "row {} out of range: {} has {} series",
            a.row,
            a.input.display(),
            ds.len()
        )));
    };
    let table = reconstruct_table(ts, &a.w)?;

    let mut buf = Vec::new();
    match a.output.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut buf);
            w.write_record(table.header()).map_err(internal)?;
            for (j, row) in table.rows().enumerate() {
                let mut rec = vec![j.to_string()];
                rec.extend(row[1..].iter().map(f64::to_string));
                w.write_record(&rec).map_err(internal)?;
            }
            w.flush().map_err(internal)?;
        }
        Format::Json => {
            let header = table.header();
            let rows: Vec<serde_json::Map<String, serde_json::Value>> = table
                .rows()
                .map(|row| {
                    header
                        .iter()
                        .zip(row)
                        .map(|(h, v)| (h.clone(), serde_json::json!(v)))
                        .collect()
                })
                .collect();
            serde_json::to_writer_pretty(&mut buf, &rows).map_err(internal)?;
            buf.push(b'\n');
        }
    }

    let mut m = RunManifest::new("reconstruct", &a.output);
    m.inputs = vec![a.input.clone()];
    m.datasets = vec![dataset_name(&a.input)];
    m.measures = vec![Measure::Paa];
    m.normalize = a.normalize;
    m.notes
        .push(format!("row {}; segment counts {:?}", a.row, a.w));
    m.wall_clock_secs = start.elapsed().as_secs_f64();
    emit_bytes(&buf, &a.output, &m)
}

fn cmd_bench(a: &BenchArgs) -> Result<(), CliError> {
    let start = Instant::now();
    let range = a.s_min..=a.s_max;
    check_range("s", &range)?;
    let k_range = a.k_min..=a.k_max;
    check_range("k", &k_range)?;
    if a.repeats == 0 || a.threads == 0 {
        return Err(CliError::Usage(
            "--repeats and --threads must be at least 1".into(),
        ));
    }
    let datasets = a
        .data
        .iter()
        .map(|p| Ok((dataset_name(p), load(p, Delimiter::Auto, a.normalize)?)))
        .collect::<Result<Vec<_>, CliError>>()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.threads)
        .build()
        .map_err(internal)?;
    let rows =
        pool.install(|| bench_table(&datasets, range.clone(), k_range.clone(), a.repeats))?;

    let mut m = RunManifest::new("bench", &a.output);
    m.inputs = a.data.clone();
    m.datasets = datasets.iter().map(|(n, _)| n.clone()).collect();
    m.measures = BENCH_MEASURES.to_vec();
    m.s_range = Some(bounds(&range));
    m.k_range = Some(bounds(&k_range));
    m.normalize = a.normalize;
    m.notes.push(format!(
        "median of {} repeats on {} thread(s); absolute times are hardware-specific",
        a.repeats, a.threads
    ));
    m.wall_clock_secs = start.elapsed().as_secs_f64();
    emit_rows(&rows, &a.output, &m)
}

fn cmd_summary(a: &SummaryArgs) -> Result<(), CliError> {
    let start = Instant::now();
    let pair = load_pair(&a.data)?;
    let mut m = RunManifest::new("summary", &a.output);
    m.datasets = vec![pair.name.clone()];
    m.inputs = vec![a.data.train.clone(), a.data.test.clone()];
    m.normalize = a.data.normalize;
    m.wall_clock_secs = start.elapsed().as_secs_f64();
    emit_rows(&[pair.summary()], &a.output, &m)
}
