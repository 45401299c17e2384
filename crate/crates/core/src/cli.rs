//! Command-line front end. Exit codes: 0 when everything checked holds,
//! 1 on a mathematical discrepancy, 2 on usage or I/O errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{rat, BigRational};
use crate::hypersurface::classification_table;
use crate::report::{self, EmitOptions, SweepSummary};
use crate::sweep::run_sweep;
use crate::system::{Curvature, InstanceParams, TranscriptionKind};
use crate::verify::{run_instance, verify_case_b, RunOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISCREPANCY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "biharm", version, about = "Exact audit of the biharmonic hypersurface elimination argument")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CSelect {
    #[value(name = "1")]
    One,
    #[value(name = "0")]
    Zero,
    #[value(name = "-1")]
    MinusOne,
    All,
    Symbolic,
}

impl CSelect {
    pub fn curvatures(self) -> Vec<Curvature> {
        match self {
            CSelect::One => vec![Curvature::from_int(1)],
            CSelect::Zero => vec![Curvature::from_int(0)],
            CSelect::MinusOne => vec![Curvature::from_int(-1)],
            CSelect::All => vec![Curvature::from_int(1), Curvature::from_int(0), Curvature::from_int(-1)],
            CSelect::Symbolic => vec![Curvature::Symbolic],
        }
    }

    fn rationals(self) -> Vec<BigRational> {
        self.curvatures().iter().filter_map(|c| c.value().cloned()).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TranscriptionArg {
    Printed,
    Reconciled,
}

impl From<TranscriptionArg> for TranscriptionKind {
    fn from(t: TranscriptionArg) -> Self {
        match t {
            TranscriptionArg::Printed => TranscriptionKind::Printed,
            TranscriptionArg::Reconciled => TranscriptionKind::Reconciled,
        }
    }
}

#[derive(Debug, Clone, clap::Args)]
pub struct Output {
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Keep measured timings in the report.
    #[arg(long)]
    pub timestamps: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify one instance.
    Verify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, allow_hyphen_values = true)]
        c: CSelect,
        /// Include the named polynomials and the elimination trace.
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, value_enum, default_value = "printed")]
        transcription: TranscriptionArg,
        #[command(flatten)]
        output: Output,
    },
    /// Verify every admissible instance with n in a range.
    Sweep {
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long, value_enum, default_value = "all", allow_hyphen_values = true)]
        c: CSelect,
        #[arg(long, env = "BIHARM_WORKERS", default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long, value_enum, default_value = "printed")]
        transcription: TranscriptionArg,
        /// No heartbeat on standard error.
        #[arg(long)]
        quiet: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Classification table of hyperspheres and Clifford products.
    Examples {
        #[arg(long, value_enum, default_value = "all", allow_hyphen_values = true)]
        c: CSelect,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// The n - p = 1 contradiction chain.
    Caseb {
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
}

fn emit(doc: &str, output: &Output, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), i32> {
    let written = match &output.out {
        Some(path) => std::fs::write(path, doc).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout.write_all(doc.as_bytes()).map_err(|e| format!("cannot write output: {e}")),
    };
    written.map_err(|msg| {
        let _ = writeln!(stderr, "error: {msg}");
        EXIT_USAGE
    })
}

fn usage(stderr: &mut dyn Write, msg: impl std::fmt::Display) -> i32 {
    let _ = writeln!(stderr, "error: {msg}");
    EXIT_USAGE
}

fn unsupported(stderr: &mut dyn Write, cmd: &str, f: Format) -> i32 {
    usage(stderr, format!("{cmd} does not support --format {f:?}").to_lowercase())
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
            } else {
                let _ = stdout.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match cli.command {
        Command::Verify { n, p, c, trace, format, transcription, output } => {
            let cs = c.curvatures();
            if cs.len() != 1 {
                return usage(stderr, "verify takes a single curvature: 1, 0, -1 or symbolic");
            }
            let params = match InstanceParams::new(n, p, cs[0].clone()) {
                Ok(p) => p,
                Err(e) => return usage(stderr, e),
            };
            let opts = RunOptions { transcription: transcription.into(), trace, eliminate: true };
            let r = run_instance(&params, &opts);
            let emit_opts = EmitOptions { timestamps: output.timestamps };
            let doc = match format {
                Format::Json => report::to_json_string(&report::instance_json(&r, &[], emit_opts)),
                Format::Text => report::instance_text(&r),
                Format::Csv => report::to_csv(std::slice::from_ref(&r), emit_opts),
            };
            if let Err(code) = emit(&doc, &output, stdout, stderr) {
                return code;
            }
            if r.overall.is_pass() {
                EXIT_OK
            } else {
                EXIT_DISCREPANCY
            }
        }
        Command::Sweep { n_min, n_max, c, workers, format, transcription, quiet, output } => {
            if workers == 0 {
                return usage(stderr, "worker count must be at least 1");
            }
            if n_min > n_max {
                return usage(stderr, format!("empty range: n-min {n_min} > n-max {n_max}"));
            }
            let grid = match InstanceParams::grid(n_min, n_max, &c.curvatures()) {
                Ok(g) => g,
                Err(e) => return usage(stderr, e),
            };
            let opts = RunOptions { transcription: transcription.into(), trace: false, eliminate: true };
            let start = Instant::now();
            let reports = match run_sweep(&grid, &opts, workers, !quiet) {
                Ok(r) => r,
                Err(e) => return usage(stderr, e),
            };
            let summary = SweepSummary::from_reports(&reports, start.elapsed().as_millis() as u64);
            let emit_opts = EmitOptions { timestamps: output.timestamps };
            let doc = match format {
                Format::Csv => report::to_csv(&reports, emit_opts),
                Format::Json => report::to_json_string(&report::sweep_json(&reports, &summary, emit_opts)),
                Format::Text => {
                    let mut s: String = reports.iter().map(report::instance_text).collect();
                    s.push_str(&summary.text());
                    s.push('\n');
                    s
                }
            };
            if let Err(code) = emit(&doc, &output, stdout, stderr) {
                return code;
            }
            if !quiet {
                let _ = writeln!(stderr, "{}", summary.text());
            }
            if summary.failures == 0 {
                EXIT_OK
            } else {
                EXIT_DISCREPANCY
            }
        }
        Command::Examples { c, format, output } => {
            if c == CSelect::Symbolic {
                return usage(stderr, "examples need a concrete curvature");
            }
            let rows = match classification_table(&c.rationals()) {
                Ok(r) => r,
                Err(e) => return usage(stderr, e),
            };
            let doc = match format {
                Format::Json => report::to_json_string(&report::examples_json(&rows)),
                Format::Text => report::examples_text(&rows),
                Format::Csv => return unsupported(stderr, "examples", format),
            };
            if let Err(code) = emit(&doc, &output, stdout, stderr) {
                return code;
            }
            let bad: Vec<_> = rows.iter().filter(|r| !r.matches).collect();
            for r in &bad {
                let _ = writeln!(stderr, "mismatch: {} at c = {}: {}", r.spec, crate::algebra::format_rational(&r.c), r.witness);
            }
            if bad.is_empty() {
                EXIT_OK
            } else {
                EXIT_DISCREPANCY
            }
        }
        Command::Caseb { n_min, n_max, format, output } => {
            if n_min > n_max {
                return usage(stderr, format!("empty range: n-min {n_min} > n-max {n_max}"));
            }
            let mut results = Vec::new();
            for n in n_min..=n_max {
                match verify_case_b(n, Curvature::Value(rat(1, 1))) {
                    Ok(r) => results.push(r),
                    Err(e) => return usage(stderr, e),
                }
            }
            let emit_opts = EmitOptions { timestamps: output.timestamps };
            let doc = match format {
                Format::Json => report::to_json_string(&report::caseb_json(&results, emit_opts)),
                Format::Text => report::caseb_text(&results),
                Format::Csv => return unsupported(stderr, "caseb", format),
            };
            if let Err(code) = emit(&doc, &output, stdout, stderr) {
                return code;
            }
            if results.iter().all(|r| r.step.status.is_pass()) {
                EXIT_OK
            } else {
                EXIT_DISCREPANCY
            }
        }
    }
}
