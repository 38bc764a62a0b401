//! Command-line front end: `extract`, `render`, `evaluate` and `config`.
//!
//! Exit status is 0 on success, 1 for usage or parameter errors, 2 for I/O,
//! decoding and parse errors, and 3 when an internal consistency check
//! fails. Batch runs keep going past failing files and exit with the most
//! severe status seen.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::config::PipelineConfig;
use crate::error::{Error, Result};
use crate::evaluate::evaluate_dirs;
use crate::ink_io::{render, to_pixel_space, Format, InkDocument};
use crate::pipeline::{extract_with_stages, load_gray, write_debug};

#[derive(Debug, Parser)]
#[command(name = "strokex", version, about = "Recover ordered pen strokes from images of handwritten math")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Extract strokes from an image, or from every PNG in a directory.
    Extract(ExtractArgs),
    /// Render InkML or JSON ink to PNG.
    Render(RenderArgs),
    /// Score extracted strokes against ground truth, pairing files by stem.
    Evaluate(EvaluateArgs),
    /// Print the effective configuration as TOML.
    Config(CommonArgs),
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// TOML configuration file.
    #[arg(long, env = "STROKEX_CONFIG")]
    config: Option<PathBuf>,
    /// Worker threads for batch runs; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Sauvola window side (odd); chosen from the image size when unset.
    #[arg(long)]
    window: Option<usize>,
    /// Sauvola sensitivity k.
    #[arg(long)]
    k: Option<f64>,
    /// Edges shorter than this many average stroke widths are contracted.
    #[arg(long)]
    short_edge_multiplier: Option<f64>,
    /// Isolated blobs narrower than this many average stroke widths are
    /// dropped rather than kept as dots.
    #[arg(long)]
    dot_width_multiplier: Option<f64>,
    /// Pixels used to estimate a segment's direction at its ends.
    #[arg(long)]
    direction_window: Option<usize>,
    /// Retracing is refused when a joint is this close to a right angle;
    /// in radians.
    #[arg(long)]
    double_trace_angle_margin: Option<f64>,
    /// Splice closed loops into touching strokes.
    #[arg(long)]
    eulerian: bool,
    /// Projection gap, in average stroke widths, that separates groups.
    #[arg(long)]
    gap_multiplier: Option<f64>,
    /// Rendered canvas side in pixels.
    #[arg(long)]
    size: Option<u32>,
    /// Rendering pen diameter in pixels.
    #[arg(long)]
    pen_width: Option<f64>,
}

#[derive(Debug, Args)]
struct ExtractArgs {
    /// Image file or directory of PNG images.
    #[arg(long)]
    input: PathBuf,
    /// Output file (.json or .inkml) or directory; stdout when omitted for a
    /// single image.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Directory for intermediate images and graph dumps.
    #[arg(long)]
    debug_dir: Option<PathBuf>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct RenderArgs {
    /// Ink file or directory of .inkml/.json files.
    #[arg(long)]
    input: PathBuf,
    /// PNG file or directory.
    #[arg(long)]
    output: PathBuf,
    /// Also write the strokes in rendered pixel coordinates (JSON file or
    /// directory).
    #[arg(long)]
    truth_out: Option<PathBuf>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct EvaluateArgs {
    #[arg(long)]
    truth: PathBuf,
    #[arg(long)]
    extracted: PathBuf,
    /// Hausdorff distance in pixels under which strokes match.
    #[arg(long, default_value_t = 10.0)]
    threshold: f64,
    /// Write the full report as JSON here.
    #[arg(long)]
    report: Option<PathBuf>,
    #[command(flatten)]
    common: CommonArgs,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidParams(_) | Error::Config(_) => 1,
        Error::Consistency(_) => 3,
        _ => 2,
    }
}

impl CommonArgs {
    fn config(&self) -> Result<PipelineConfig> {
        let mut c = match &self.config {
            Some(p) => PipelineConfig::load(p)?,
            None => PipelineConfig::default(),
        };
        if let Some(v) = self.window {
            c.binarization.window = Some(v);
        }
        if let Some(v) = self.k {
            c.binarization.k = v;
        }
        if let Some(v) = self.short_edge_multiplier {
            c.simplify.short_edge_multiplier = v;
        }
        if let Some(v) = self.dot_width_multiplier {
            c.simplify.dot_width_multiplier = v;
        }
        if let Some(v) = self.direction_window {
            c.trace.direction_window = v;
        }
        if let Some(v) = self.double_trace_angle_margin {
            c.trace.double_trace_angle_margin = v;
        }
        if self.eulerian {
            c.trace.eulerian_mode = true;
        }
        if let Some(v) = self.gap_multiplier {
            c.order.gap_multiplier = v;
        }
        if let Some(v) = self.size {
            c.render.size = v;
        }
        if let Some(v) = self.pen_width {
            c.render.pen_width = v;
        }
        c.validate()?;
        Ok(c)
    }

    fn pool(&self) -> Result<rayon::ThreadPool> {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(|e| Error::InvalidParams(format!("cannot start {} workers: {e}", self.jobs)))
    }
}

/// Files in `dir` whose extension is one of `exts`, sorted by name.
fn list(dir: &Path, exts: &[&str]) -> Result<Vec<PathBuf>> {
    let mut out: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::io(dir, e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.is_file()
                && p.extension()
                    .and_then(|e| e.to_str())
                    .is_some_and(|e| exts.iter().any(|x| e.eq_ignore_ascii_case(x)))
        })
        .collect();
    out.sort();
    Ok(out)
}

fn stem(p: &Path) -> String {
    p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn create_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))
}

/// Runs `job` over all items in parallel, reporting failures on stderr.
/// Returns the most severe exit status.
fn run_batch<T: Sync>(pool: &rayon::ThreadPool, items: &[T], name: impl Fn(&T) -> String + Sync, job: impl Fn(&T) -> Result<()> + Sync) -> i32 {
    let results: Vec<Result<()>> = pool.install(|| items.par_iter().map(&job).collect());
    let mut code = 0;
    let mut failed = 0;
    for (item, r) in items.iter().zip(&results) {
        if let Err(e) = r {
            eprintln!("error: {}: {e}", name(item));
            code = code.max(exit_code(e));
            failed += 1;
        }
    }
    if items.len() > 1 {
        eprintln!("{} of {} files processed, {failed} failed", items.len() - failed, items.len());
    }
    code
}

fn extract_one(input: &Path, output: Option<&Path>, debug: Option<&Path>, config: &PipelineConfig) -> Result<()> {
    let gray = load_gray(input, config)?;
    let (extraction, stages) = extract_with_stages(&gray, config)?;
    for w in &extraction.warnings {
        eprintln!("warning: {}: {w}", input.display());
    }
    if let Some(d) = debug {
        write_debug(d, &stages, &extraction)?;
    }
    let doc = extraction.to_document();
    match output {
        Some(p) => doc.write(p),
        None => {
            println!("{}", doc.serialize(Format::Json));
            Ok(())
        }
    }
}

fn cmd_extract(a: &ExtractArgs) -> Result<i32> {
    let config = a.common.config()?;
    if !a.input.is_dir() {
        extract_one(&a.input, a.output.as_deref(), a.debug_dir.as_deref(), &config)?;
        return Ok(0);
    }
    let out = a
        .output
        .as_deref()
        .ok_or_else(|| Error::InvalidParams("--output directory is required for a directory input".into()))?;
    create_dir(out)?;
    let inputs = list(&a.input, &["png"])?;
    let pool = a.common.pool()?;
    Ok(run_batch(
        &pool,
        &inputs,
        |p| p.display().to_string(),
        |p| {
            let s = stem(p);
            let debug = a.debug_dir.as_ref().map(|d| d.join(&s));
            extract_one(p, Some(&out.join(format!("{s}.json"))), debug.as_deref(), &config)
        },
    ))
}

fn render_one(input: &Path, output: &Path, truth: Option<&Path>, config: &PipelineConfig) -> Result<()> {
    let doc = InkDocument::read(input)?;
    let img = render(&doc, &config.render)?;
    img.to_image().save(output)?;
    if let Some(t) = truth {
        to_pixel_space(&doc, &config.render)?.write(t)?;
    }
    Ok(())
}

fn cmd_render(a: &RenderArgs) -> Result<i32> {
    let config = a.common.config()?;
    if !a.input.is_dir() {
        render_one(&a.input, &a.output, a.truth_out.as_deref(), &config)?;
        return Ok(0);
    }
    create_dir(&a.output)?;
    if let Some(t) = &a.truth_out {
        create_dir(t)?;
    }
    let inputs = list(&a.input, &["inkml", "json"])?;
    let pool = a.common.pool()?;
    Ok(run_batch(
        &pool,
        &inputs,
        |p| p.display().to_string(),
        |p| {
            let s = stem(p);
            let truth = a.truth_out.as_ref().map(|t| t.join(format!("{s}.json")));
            render_one(p, &a.output.join(format!("{s}.png")), truth.as_deref(), &config)
        },
    ))
}

fn cmd_evaluate(a: &EvaluateArgs) -> Result<i32> {
    let config = a.common.config()?;
    let report = evaluate_dirs(&a.truth, &a.extracted, a.threshold, &config.render)?;
    print!("{}", report.table());
    if let Some(p) = &a.report {
        let text = serde_json::to_string_pretty(&report)?;
        std::fs::write(p, text).map_err(|e| Error::io(p, e))?;
    }
    Ok(0)
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let result = match &cli.command {
        Command::Extract(a) => cmd_extract(a),
        Command::Render(a) => cmd_render(a),
        Command::Evaluate(a) => cmd_evaluate(a),
        Command::Config(a) => a.config().map(|c| {
            print!("{}", c.to_toml());
            0
        }),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
