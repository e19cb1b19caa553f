//! Command-line surface: argument parsing, single jobs, the batch runner and
//! its result cache.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::bounds::{self, BoundsError};
use crate::derham::{self, DerhamError, SweepConfig};
use crate::koszul::{self, KoszulError};
use crate::parse::{parse_poly, ParseError};
use crate::polyring::Weights;
use crate::quotient::{self, HilbertFn, Hypersurface, QuotientError};
use crate::report::table;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad input: unparsable flags, non-homogeneous `f`, failed
    /// preconditions. Exit code 2.
    #[error("{0}")]
    Precondition(String),
    #[error("--f: {0}")]
    Parse(#[from] ParseError),
    /// Exit code 1.
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Precondition(_) | CliError::Parse(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

impl From<QuotientError> for CliError {
    fn from(e: QuotientError) -> Self {
        match e {
            QuotientError::Poly(_) | QuotientError::ZeroModulus | QuotientError::EmptyWindow { .. } => {
                CliError::Precondition(e.to_string())
            }
        }
    }
}

impl From<KoszulError> for CliError {
    fn from(e: KoszulError) -> Self {
        match e {
            KoszulError::Quotient(q) => q.into(),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<DerhamError> for CliError {
    fn from(e: DerhamError) -> Self {
        match e {
            DerhamError::Quotient(q) => q.into(),
            DerhamError::Koszul(k) => k.into(),
            DerhamError::CapOrder { .. } | DerhamError::RunTooShort(_) => {
                CliError::Precondition(format!("--caps: {e}"))
            }
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::NotIsolated { .. } | BoundsError::BadFamily { .. } => {
                CliError::Precondition(e.to_string())
            }
            BoundsError::Unstable { .. } => CliError::Precondition(format!("--caps: {e}")),
            BoundsError::Quotient(q) => q.into(),
            BoundsError::Koszul(k) => k.into(),
            BoundsError::Derham(d) => d.into(),
            BoundsError::Linalg(l) => CliError::Internal(l.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommandKind {
    Hilbert,
    KoszulH1,
    Isolated,
    Bound,
    Derham,
    Concentration,
    Example01,
}

impl CommandKind {
    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Hilbert => "hilbert",
            CommandKind::KoszulH1 => "koszul-h1",
            CommandKind::Isolated => "isolated",
            CommandKind::Bound => "bound",
            CommandKind::Derham => "derham",
            CommandKind::Concentration => "concentration",
            CommandKind::Example01 => "example01",
        }
    }
}

/// One unit of work, as read from a corpus line or assembled from flags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<String>,
    pub command: CommandKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caps: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<i64>>,
}

impl JobSpec {
    pub fn new(command: CommandKind) -> Self {
        JobSpec {
            weights: None,
            f: None,
            command,
            n: None,
            m: None,
            window: None,
            caps: None,
            degrees: None,
        }
    }

    pub fn hypersurface(&self) -> Result<Hypersurface, CliError> {
        let w = self
            .weights
            .clone()
            .ok_or_else(|| CliError::Precondition("--weights is required".into()))?;
        let weights = Weights::new(w).map_err(|e| CliError::Precondition(format!("--weights: {e}")))?;
        let text = self
            .f
            .as_deref()
            .ok_or_else(|| CliError::Precondition("--f is required".into()))?;
        let f = parse_poly(text, weights.nvars())?;
        Hypersurface::new(f, weights).map_err(|e| CliError::Precondition(format!("--f: {e}")))
    }
}

/// `cz:cb:cmax`. Cycles capped at `cz` and boundaries at `cb` for single
/// slices; sweeps use slack `cb - cz` up to `cmax`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CapsSpec {
    pub c_z: u32,
    pub c_b: u32,
    pub c_max: u32,
}

impl Default for CapsSpec {
    fn default() -> Self {
        let cfg = SweepConfig::default();
        CapsSpec {
            c_z: 1,
            c_b: 1 + cfg.slack,
            c_max: cfg.c_max,
        }
    }
}

impl CapsSpec {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        let bad = || CliError::Precondition(format!("--caps: expected cz:cb:cmax, got {s:?}"));
        let parts: Vec<u32> = s
            .split(':')
            .map(|p| p.trim().parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        let [c_z, c_b, c_max] = parts[..] else {
            return Err(bad());
        };
        if c_z == 0 || c_b < c_z || c_max == 0 {
            return Err(CliError::Precondition(format!(
                "--caps: need 1 <= cz <= cb and cmax >= 1, got {s:?}"
            )));
        }
        Ok(CapsSpec { c_z, c_b, c_max })
    }

    pub fn sweep(&self) -> SweepConfig {
        SweepConfig {
            c_max: self.c_max,
            slack: self.c_b - self.c_z,
            run: SweepConfig::default().run,
        }
    }
}

pub fn parse_weights(s: &str) -> Result<Vec<u32>, CliError> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| CliError::Precondition(format!("--weights: bad entry {:?}", p.trim())))
        })
        .collect()
}

pub fn parse_degrees(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| CliError::Precondition(format!("--degrees: bad entry {:?}", p.trim())))
        })
        .collect()
}

fn window_of(job: &JobSpec, h: &Hypersurface) -> Result<(i64, i64), CliError> {
    match &job.window {
        Some(w) => quotient::parse_window(w)
            .ok_or_else(|| CliError::Precondition(format!("--window: expected lo:hi with lo <= hi, got {w:?}"))),
        None => Ok((0, 2 * h.deg_f + h.omega())),
    }
}

fn caps_of(job: &JobSpec) -> Result<CapsSpec, CliError> {
    job.caps.as_deref().map_or(Ok(CapsSpec::default()), CapsSpec::parse)
}

/// File cache of Hilbert functions keyed by a content hash.
pub struct Cache {
    dir: PathBuf,
    hits: AtomicUsize,
    misses: AtomicUsize,
}

impl Cache {
    pub fn open(dir: &Path) -> Result<Self, CliError> {
        fs::create_dir_all(dir).map_err(|e| CliError::Precondition(format!("--cache-dir: {e}")))?;
        Ok(Cache {
            dir: dir.to_path_buf(),
            hits: AtomicUsize::new(0),
            misses: AtomicUsize::new(0),
        })
    }

    pub fn key(command: CommandKind, weights: &[u32], f: &str, window: (i64, i64)) -> String {
        let canonical = json!({
            "command": command.name(),
            "weights": weights,
            "f": f,
            "window": [window.0, window.1],
        });
        hex::encode(Sha256::digest(canonical.to_string().as_bytes()))
    }

    pub fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Option<HilbertFn> {
        let found = fs::read(self.path(key))
            .ok()
            .and_then(|bytes| serde_json::from_slice(&bytes).ok());
        match found {
            Some(_) => self.hits.fetch_add(1, Ordering::Relaxed),
            None => self.misses.fetch_add(1, Ordering::Relaxed),
        };
        found
    }

    /// Writes through a temporary file in the same directory and renames it
    /// into place.
    pub fn put(&self, key: &str, value: &HilbertFn) -> Result<(), CliError> {
        let io = |e: std::io::Error| CliError::Internal(format!("cache write: {e}"));
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(io)?;
        tmp.write_all(serde_json::to_string(value).expect("serializable").as_bytes())
            .map_err(io)?;
        tmp.persist(self.path(key)).map_err(|e| io(e.error))?;
        Ok(())
    }

    pub fn hits(&self) -> usize {
        self.hits.load(Ordering::Relaxed)
    }

    pub fn misses(&self) -> usize {
        self.misses.load(Ordering::Relaxed)
    }
}

/// Result of one job: the JSON report, a text table, and the two CSV cells.
#[derive(Debug, Clone, PartialEq)]
pub struct JobOutput {
    pub json: Value,
    pub table: String,
    pub result: String,
    pub detail: String,
}

fn support_string(hf: &HilbertFn) -> String {
    let s: Vec<String> = hf.support().iter().map(|(d, k)| format!("{d}:{k}")).collect();
    if s.is_empty() {
        "0".into()
    } else {
        s.join(" ")
    }
}

fn hilbert_job(job: &JobSpec, cache: Option<&Cache>) -> Result<JobOutput, CliError> {
    let h = job.hypersurface()?;
    let (lo, hi) = window_of(job, &h)?;
    let key = Cache::key(job.command, h.weights.as_slice(), &h.f.to_string(), (lo, hi));
    let cached = cache.and_then(|c| c.get(&key));
    let hf = match cached {
        Some(hf) => hf,
        None => {
            let hf = match job.command {
                CommandKind::Hilbert => quotient::hilbert_function(&h, lo, hi)?,
                _ => koszul::h1_hilbert(&h, lo, hi)?,
            };
            if let Some(c) = cache {
                c.put(&key, &hf)?;
            }
            hf
        }
    };
    let support: serde_json::Map<String, Value> =
        hf.support().iter().map(|(d, k)| (d.to_string(), json!(k))).collect();
    let rows: Vec<Vec<String>> = (lo..=hi)
        .zip(&hf.dims)
        .map(|(d, k)| vec![d.to_string(), k.to_string()])
        .collect();
    Ok(JobOutput {
        json: json!({
            "f": h.f.to_string(),
            "weights": h.weights.as_slice(),
            "lo": hf.lo,
            "hi": hf.hi,
            "dims": hf.dims,
            "support": support,
        }),
        table: table(&["degree", "dim"], &rows),
        result: support_string(&hf),
        detail: format!("window {lo}:{hi}"),
    })
}

fn isolated_job(job: &JobSpec) -> Result<JobOutput, CliError> {
    let h = job.hypersurface()?;
    let bound = quotient::default_scan_bound(&h);
    let verdict = quotient::isolated_singularity_check(&h, bound)?;
    let (result, detail) = match verdict {
        quotient::SingularityVerdict::Isolated { top_degree } => (
            "isolated",
            format!("residue top degree {}", top_degree.map_or("none".into(), |d| d.to_string())),
        ),
        quotient::SingularityVerdict::Inconclusive { scanned_to } => {
            ("inconclusive", format!("scanned to {scanned_to}"))
        }
    };
    let mut json = serde_json::to_value(verdict).expect("serializable");
    json["f"] = json!(h.f.to_string());
    json["weights"] = json!(h.weights.as_slice());
    json["scan_bound"] = json!(bound);
    Ok(JobOutput {
        table: table(&["verdict", "detail"], &[vec![result.into(), detail.clone()]]),
        json,
        result: result.into(),
        detail,
    })
}

fn bound_job(job: &JobSpec) -> Result<JobOutput, CliError> {
    let h = job.hypersurface()?;
    let caps = caps_of(job)?;
    let r = bounds::theorem2_bound(&h, Some(caps.sweep()))?;
    let estimate = r
        .truncated_estimate
        .as_ref()
        .and_then(|t| t.outcome.value())
        .map_or("unstable".to_string(), |v| v.to_string());
    let divergence = r.divergence.map_or("unknown".to_string(), |d| d.to_string());
    let mut rows: Vec<Vec<String>> = r
        .rows
        .iter()
        .map(|row| vec![row.nu.to_string(), row.degree.to_string(), row.h1dim.to_string()])
        .collect();
    rows.push(vec!["bound".into(), String::new(), r.bound.to_string()]);
    rows.push(vec!["estimate".into(), (-h.omega()).to_string(), estimate.clone()]);
    Ok(JobOutput {
        json: serde_json::to_value(&r).expect("serializable"),
        table: format!(
            "{}divergence: {divergence}\n",
            table(&["nu", "degree", "h1dim"], &rows)
        ),
        result: r.bound.to_string(),
        detail: format!("estimate {estimate} divergence {divergence}"),
    })
}

fn degrees_of(job: &JobSpec, h: &Hypersurface, around: bool) -> Vec<i64> {
    let omega = h.omega();
    match &job.degrees {
        Some(d) => d.clone(),
        None if around => (-omega - 6..=-omega + 6).collect(),
        None => vec![-omega],
    }
}

fn derham_job(job: &JobSpec) -> Result<JobOutput, CliError> {
    let h = job.hypersurface()?;
    let caps = caps_of(job)?;
    let mut entries = Vec::new();
    let mut rows = Vec::new();
    let mut cells = Vec::new();
    for d in degrees_of(job, &h, false) {
        let t = derham::truncated_h1(&h, d, caps.c_z, caps.c_b)?;
        let sweep = derham::stabilized_h1(&h, d, caps.sweep())?;
        let est = sweep.value().map_or("unstable".to_string(), |v| v.to_string());
        rows.push(vec![d.to_string(), t.dim.to_string(), est.clone()]);
        cells.push(format!("{d}:{est}"));
        entries.push(json!({ "degree": d, "truncated": t, "sweep": sweep }));
    }
    Ok(JobOutput {
        json: json!({
            "f": h.f.to_string(),
            "weights": h.weights.as_slice(),
            "omega": h.omega(),
            "caps": caps,
            "degrees": entries,
        }),
        table: table(&["degree", "truncated", "stabilized"], &rows),
        result: cells.join(" "),
        detail: format!("caps {}:{}:{}", caps.c_z, caps.c_b, caps.c_max),
    })
}

fn concentration_job(job: &JobSpec) -> Result<JobOutput, CliError> {
    let h = job.hypersurface()?;
    let caps = caps_of(job)?;
    let degrees = degrees_of(job, &h, true);
    let r = derham::concentration_check(&h, &degrees, caps.sweep())?;
    let rows: Vec<Vec<String>> = r
        .entries
        .iter()
        .map(|e| {
            vec![
                e.degree.to_string(),
                e.outcome.value().map_or("unstable".into(), |v| v.to_string()),
                if e.expect_zero { "0" } else { "-" }.into(),
                if e.ok { "ok" } else { "FAIL" }.into(),
            ]
        })
        .collect();
    let at_top = r
        .entries
        .iter()
        .find(|e| !e.expect_zero)
        .and_then(|e| e.outcome.value())
        .map_or("-".to_string(), |v| v.to_string());
    Ok(JobOutput {
        json: serde_json::to_value(&r).expect("serializable"),
        table: table(&["degree", "stabilized", "expected", "verdict"], &rows),
        result: if r.all_ok { "concentrated" } else { "not-concentrated" }.into(),
        detail: format!("{} degrees; value at -omega {at_top}", r.entries.len()),
    })
}

fn example01_job(job: &JobSpec) -> Result<JobOutput, CliError> {
    let n = job
        .n
        .ok_or_else(|| CliError::Precondition("--n is required".into()))?;
    let m = job
        .m
        .ok_or_else(|| CliError::Precondition("--m is required".into()))?;
    let r = bounds::example01(n, m)?;
    let mut rows: Vec<Vec<String>> = r
        .trace
        .iter()
        .map(|t| {
            vec![
                t.nu.to_string(),
                t.degree.to_string(),
                t.closed_form.to_string(),
                t.h1dim.to_string(),
            ]
        })
        .collect();
    rows.push(vec!["bound".into(), String::new(), String::new(), r.bound.to_string()]);
    let nus: Vec<String> = r.contributing_nu.iter().map(u32::to_string).collect();
    Ok(JobOutput {
        json: serde_json::to_value(&r).expect("serializable"),
        table: format!(
            "{}verdict: {} (predicted {})\n",
            table(&["nu", "degree", "(2nu-n+3)m-2", "h1dim"], &rows),
            r.verdict,
            r.predicted
        ),
        result: r.verdict.into(),
        detail: format!(
            "bound {} nu [{}] predicted {}",
            r.bound,
            nus.join(" "),
            r.predicted
        ),
    })
}

/// Runs one job.
pub fn run(job: &JobSpec, cache: Option<&Cache>) -> Result<JobOutput, CliError> {
    match job.command {
        CommandKind::Hilbert | CommandKind::KoszulH1 => hilbert_job(job, cache),
        CommandKind::Isolated => isolated_job(job),
        CommandKind::Bound => bound_job(job),
        CommandKind::Derham => derham_job(job),
        CommandKind::Concentration => concentration_job(job),
        CommandKind::Example01 => example01_job(job),
    }
}

#[derive(Debug, Clone, Default)]
pub struct BatchOptions {
    pub jobs: Option<usize>,
    pub cache_dir: Option<PathBuf>,
    /// Fill the `ms` column. Off by default so reruns are byte-identical.
    pub timing: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BatchSummary {
    pub jobs: usize,
    pub ok: usize,
    pub failed: usize,
    pub cache_hits: usize,
    pub cache_misses: usize,
    pub csv: PathBuf,
    pub reports: PathBuf,
}

struct Row {
    f: String,
    weights: String,
    command: String,
    result: String,
    detail: String,
    ms: String,
    report: Value,
}

fn run_line(line: &str, cache: Option<&Cache>, timing: bool) -> (Row, bool) {
    let start = Instant::now();
    let parsed: Result<JobSpec, CliError> =
        serde_json::from_str(line).map_err(|e| CliError::Precondition(format!("corpus line: {e}")));
    let outcome = parsed.as_ref().map_err(|e| e.to_string()).and_then(|job| {
        run(job, cache).map_err(|e| e.to_string())
    });
    let ms = if timing {
        start.elapsed().as_millis().to_string()
    } else {
        String::new()
    };
    let (f, weights, command) = match &parsed {
        Ok(job) => (
            job.f.clone().unwrap_or_else(|| match (job.n, job.m) {
                (Some(n), Some(m)) => format!("example01 n={n} m={m}"),
                _ => String::new(),
            }),
            job.weights
                .as_ref()
                .map(|w| w.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
                .unwrap_or_default(),
            job.command.name().to_string(),
        ),
        Err(_) => (String::new(), String::new(), String::new()),
    };
    match outcome {
        Ok(out) => (
            Row {
                f,
                weights,
                command,
                result: out.result,
                detail: out.detail,
                ms,
                report: out.json,
            },
            true,
        ),
        Err(message) => (
            Row {
                f,
                weights,
                command,
                result: "error".into(),
                detail: message.clone(),
                ms,
                report: json!({ "error": message }),
            },
            false,
        ),
    }
}

/// Path of the JSON-lines report file written beside `out_csv`.
pub fn reports_path(out_csv: &Path) -> PathBuf {
    out_csv.with_extension("jsonl")
}

/// Runs every corpus line, writing one CSV row per job and the full JSON
/// reports to [`reports_path`]. Job failures become rows; only I/O problems
/// abort the batch.
pub fn batch(corpus: &Path, out_csv: &Path, opts: &BatchOptions) -> Result<BatchSummary, CliError> {
    let text = fs::read_to_string(corpus)
        .map_err(|e| CliError::Precondition(format!("corpus {}: {e}", corpus.display())))?;
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    let cache = opts.cache_dir.as_deref().map(Cache::open).transpose()?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = opts.jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let results: Vec<(Row, bool)> = pool.install(|| {
        lines
            .par_iter()
            .map(|l| run_line(l, cache.as_ref(), opts.timing))
            .collect()
    });

    let io = |e: std::io::Error| CliError::Internal(format!("writing output: {e}"));
    let mut w = csv::Writer::from_path(out_csv).map_err(|e| CliError::Internal(e.to_string()))?;
    w.write_record(["f", "weights", "command", "result", "detail", "ms"])
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let mut reports = String::new();
    for (row, _) in &results {
        w.write_record([&row.f, &row.weights, &row.command, &row.result, &row.detail, &row.ms])
            .map_err(|e| CliError::Internal(e.to_string()))?;
        reports.push_str(&row.report.to_string());
        reports.push('\n');
    }
    w.flush().map_err(io)?;
    let reports_file = reports_path(out_csv);
    fs::write(&reports_file, reports).map_err(io)?;

    let ok = results.iter().filter(|(_, ok)| *ok).count();
    Ok(BatchSummary {
        jobs: results.len(),
        ok,
        failed: results.len() - ok,
        cache_hits: cache.as_ref().map_or(0, Cache::hits),
        cache_misses: cache.as_ref().map_or(0, Cache::misses),
        csv: out_csv.to_path_buf(),
        reports: reports_file,
    })
}

/// The `example01` grid for `n, m` in `range`, one job per line.
pub fn example_corpus(range: std::ops::RangeInclusive<u32>) -> String {
    let mut out = String::new();
    for n in range.clone() {
        for m in range.clone() {
            let mut job = JobSpec::new(CommandKind::Example01);
            job.n = Some(n as usize);
            job.m = Some(m);
            out.push_str(&serde_json::to_string(&job).expect("serializable"));
            out.push('\n');
        }
    }
    out
}

#[derive(Debug, Parser)]
#[command(name = "derham-graded", version, about = "Graded invariants of weighted-homogeneous hypersurfaces")]
pub struct Cli {
    /// Variable weights, comma separated.
    #[arg(long, global = true)]
    pub weights: Option<String>,
    /// The polynomial, e.g. "x1^2 + x2^2".
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub f: Option<String>,
    /// Print a text table instead of JSON.
    #[arg(long, global = true)]
    pub table: bool,
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads for batch runs.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct WindowArg {
    /// Degree window lo:hi.
    #[arg(long, allow_hyphen_values = true)]
    pub window: Option<String>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Comma-separated degrees.
    #[arg(long, allow_hyphen_values = true)]
    pub degrees: Option<String>,
    /// Pole caps cz:cb:cmax.
    #[arg(long)]
    pub caps: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert function of R/(f).
    Hilbert(WindowArg),
    /// Hilbert function of H_1 of the Koszul complex of R/(f) on the partials.
    KoszulH1(WindowArg),
    /// Isolated-singularity test.
    Isolated,
    /// Dimension bound with a truncated De Rham estimate beside it.
    Bound {
        #[arg(long)]
        caps: Option<String>,
    },
    /// Truncated De Rham H_1 per degree.
    Derham(SweepArgs),
    /// Vanishing of truncated H_1 away from degree -omega.
    Concentration(SweepArgs),
    /// The family x1^2 + ... + x_(n-1)^2 + x_n^m.
    Example01 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
    },
    /// Run a JSON-lines corpus and write a CSV summary.
    Batch {
        corpus: PathBuf,
        out_csv: PathBuf,
        /// Record wall time in the ms column.
        #[arg(long)]
        timing: bool,
    },
}

impl Cli {
    fn job(&self, command: CommandKind) -> Result<JobSpec, CliError> {
        let mut job = JobSpec::new(command);
        job.weights = self.weights.as_deref().map(parse_weights).transpose()?;
        job.f = self.f.clone();
        Ok(job)
    }
}

/// Executes parsed arguments and returns the text to print.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let mut job = match &cli.command {
        Command::Batch {
            corpus,
            out_csv,
            timing,
        } => {
            let opts = BatchOptions {
                jobs: cli.jobs,
                cache_dir: cli.cache_dir.clone(),
                timing: *timing,
            };
            let summary = batch(corpus, out_csv, &opts)?;
            return Ok(serde_json::to_string_pretty(&summary).expect("serializable"));
        }
        Command::Hilbert(w) => {
            let mut job = cli.job(CommandKind::Hilbert)?;
            job.window = w.window.clone();
            job
        }
        Command::KoszulH1(w) => {
            let mut job = cli.job(CommandKind::KoszulH1)?;
            job.window = w.window.clone();
            job
        }
        Command::Isolated => cli.job(CommandKind::Isolated)?,
        Command::Bound { caps } => {
            let mut job = cli.job(CommandKind::Bound)?;
            job.caps = caps.clone();
            job
        }
        Command::Derham(a) | Command::Concentration(a) => {
            let kind = if matches!(cli.command, Command::Derham(_)) {
                CommandKind::Derham
            } else {
                CommandKind::Concentration
            };
            let mut job = cli.job(kind)?;
            job.caps = a.caps.clone();
            job.degrees = a.degrees.as_deref().map(parse_degrees).transpose()?;
            job
        }
        Command::Example01 { n, m } => {
            let mut job = JobSpec::new(CommandKind::Example01);
            job.n = Some(*n);
            job.m = Some(*m);
            job
        }
    };
    if job.command == CommandKind::Example01 {
        job.weights = None;
    }
    let cache = cli.cache_dir.as_deref().map(Cache::open).transpose()?;
    let out = run(&job, cache.as_ref())?;
    Ok(if cli.table {
        out.table
    } else {
        serde_json::to_string_pretty(&out.json).expect("serializable")
    })
}
