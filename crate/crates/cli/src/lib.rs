//! The `stablepairs` command-line tool, callable in-process through [`run`].

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use stablepairs_core::corpus::{generate, CorpusSpec, IdentityShape};
use stablepairs_core::degeneration::{find_degeneration, DegenerationProblem};
use stablepairs_core::instance::{InstanceFile, Mode, ValidatedInstance};
use stablepairs_core::numeric::slope_along;
use stablepairs_core::stability::{verdict, weight, StabilityVerdict, Witness};
use stablepairs_core::{Error, OneParamSubgroup};

pub const EXIT_STABLE: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SEMISTABLE_ONLY: i32 = 3;
pub const EXIT_UNSTABLE: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "stablepairs", version, about = "Decide stability of pairs of torus representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full verdict: semistability, stability, least uniform constant, witness.
    /// Exit code 0 = stable, 3 = semistable only, 4 = unstable.
    Check(FileArgs),
    /// Least m for uniform stability, or "none".
    MinM(FileArgs),
    /// A one-parameter subgroup violating a stability clause, or "none".
    Witness(FileArgs),
    /// A one-parameter subgroup whose limit keeps exactly the chosen weights.
    Degenerate(DegenerateArgs),
    /// Numeric slope of log ‖λ(t)·w‖² − log ‖λ(t)·v‖² beside the exact weight difference.
    Slope(SlopeArgs),
    /// Generate seeded random instance files.
    Corpus(CorpusArgs),
}

#[derive(Args, Debug)]
struct FileArgs {
    /// Instance file (JSON).
    path: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct DegenerateArgs {
    #[command(flatten)]
    file: FileArgs,
    /// 1-based positions of the weights to keep, e.g. `--keep 1,3`.
    #[arg(long, value_delimiter = ',', required = true)]
    keep: Vec<usize>,
    /// 0-based frame index.
    #[arg(long, default_value_t = 0)]
    frame: usize,
    #[arg(long, value_enum, default_value_t = Side::V)]
    support: Side,
}

#[derive(Args, Debug)]
struct SlopeArgs {
    #[command(flatten)]
    file: FileArgs,
    /// Integer coordinates of λ, e.g. `--lambda 0,1`.
    #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    lambda: Vec<i64>,
    /// 0-based frame index.
    #[arg(long, default_value_t = 0)]
    frame: usize,
}

#[derive(Args, Debug)]
struct CorpusArgs {
    /// Rank (free mode) or matrix size (sl mode).
    #[arg(long)]
    dim: usize,
    #[arg(long)]
    max_coord: i64,
    #[arg(long)]
    count: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = CliMode::Free)]
    mode: CliMode,
    /// Identity polytope shape in free mode; drawn per instance when absent.
    #[arg(long, value_enum)]
    identity: Option<Shape>,
    /// Write `instance-NNNN.json` files here instead of JSON lines on stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Side {
    V,
    W,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CliMode {
    Free,
    Sl,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Shape {
    Cube,
    Simplex,
    Cross,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Internal(_) | Error::Overflow(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

type CmdResult = std::result::Result<(i32, String), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_STABLE };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let result = match &cli.command {
        Command::Check(a) => cmd_check(a),
        Command::MinM(a) => cmd_min_m(a),
        Command::Witness(a) => cmd_witness(a),
        Command::Degenerate(a) => cmd_degenerate(a),
        Command::Slope(a) => cmd_slope(a),
        Command::Corpus(a) => cmd_corpus(a),
    };
    match result {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(f) => Outcome { code: f.code, stdout: String::new(), stderr: format!("error: {}\n", f.message) },
    }
}

fn load(path: &Path) -> Result<ValidatedInstance, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    let file = InstanceFile::parse(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    file.validate().map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn lattice_strings(lam: &OneParamSubgroup) -> Vec<String> {
    lam.coords().iter().map(i64::to_string).collect()
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct VerdictJson {
    semistable: bool,
    stable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    uniform_m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    clause: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    frame_index: Option<usize>,
}

fn witness_text(w: &Witness, frame: Option<usize>) -> String {
    format!("{} ({} clause, frame {})", w.lambda, w.clause, frame.unwrap_or(0))
}

fn cmd_check(a: &FileArgs) -> CmdResult {
    let inst = load(&a.path)?;
    let v = verdict(&inst.family)?;
    let code = if v.stable {
        EXIT_STABLE
    } else if v.semistable {
        EXIT_SEMISTABLE_ONLY
    } else {
        EXIT_UNSTABLE
    };
    Ok((code, render_verdict(&v, a.format)))
}

fn render_verdict(v: &StabilityVerdict, format: Format) -> String {
    match format {
        Format::Json => json_line(&VerdictJson {
            semistable: v.semistable,
            stable: v.stable,
            uniform_m: v.uniform_m,
            witness: v.witness.as_ref().map(|w| lattice_strings(&w.lambda)),
            clause: v.witness.as_ref().map(|w| w.clause.to_string()),
            frame_index: v.witness.as_ref().and(v.frame_index),
        }),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "semistable: {}", v.semistable).unwrap();
            writeln!(s, "stable: {}", v.stable).unwrap();
            match v.uniform_m {
                Some(m) => writeln!(s, "uniform m: {m}").unwrap(),
                None => writeln!(s, "uniform m: none").unwrap(),
            }
            if let Some(w) = &v.witness {
                writeln!(s, "witness: {}", witness_text(w, v.frame_index)).unwrap();
            }
            s
        }
    }
}

fn cmd_min_m(a: &FileArgs) -> CmdResult {
    let inst = load(&a.path)?;
    let m = verdict(&inst.family)?.uniform_m;
    let out = match a.format {
        Format::Json => json_line(&serde_json::json!({ "uniform_m": m })),
        Format::Text => m.map_or_else(|| "none\n".to_string(), |m| format!("{m}\n")),
    };
    Ok((EXIT_STABLE, out))
}

fn cmd_witness(a: &FileArgs) -> CmdResult {
    let inst = load(&a.path)?;
    let v = verdict(&inst.family)?;
    let out = match (a.format, &v.witness) {
        (Format::Json, Some(w)) => json_line(&serde_json::json!({
            "witness": lattice_strings(&w.lambda),
            "clause": w.clause.to_string(),
            "frame_index": v.frame_index,
        })),
        (Format::Json, None) => json_line(&serde_json::json!({ "witness": null })),
        (Format::Text, Some(w)) => format!("{}\n", witness_text(w, v.frame_index)),
        (Format::Text, None) => "none\n".to_string(),
    };
    Ok((EXIT_STABLE, out))
}

fn frame_of(inst: &ValidatedInstance, k: usize) -> Result<&stablepairs_core::PairInstance, Failure> {
    let frames = inst.family.frames();
    frames
        .get(k)
        .ok_or_else(|| Failure::usage(format!("--frame {k} is out of range (the file has {} frames)", frames.len())))
}

fn cmd_degenerate(a: &DegenerateArgs) -> CmdResult {
    let inst = load(&a.file.path)?;
    let frame = frame_of(&inst, a.frame)?;
    let support = match a.support {
        Side::V => frame.v(),
        Side::W => frame.w(),
    };
    let mut keep = Vec::with_capacity(a.keep.len());
    for &i in &a.keep {
        if i == 0 || i > support.len() {
            return Err(Failure::usage(format!(
                "--keep index {i} is out of range (positions run from 1 to {})",
                support.len()
            )));
        }
        keep.push(i - 1);
    }
    let lam = find_degeneration(&DegenerationProblem::new(support.clone(), keep)?)?;
    let out = match (a.file.format, lam) {
        (Format::Json, Some(l)) => json_line(&serde_json::json!({ "lambda": lattice_strings(&l) })),
        (Format::Json, None) => json_line(&serde_json::json!({ "lambda": null })),
        (Format::Text, Some(l)) => format!("{l}\n"),
        (Format::Text, None) => "unreachable\n".to_string(),
    };
    Ok((EXIT_STABLE, out))
}

fn cmd_slope(a: &SlopeArgs) -> CmdResult {
    let inst = load(&a.file.path)?;
    let frame = frame_of(&inst, a.frame)?;
    let lam = OneParamSubgroup::new(a.lambda.clone());
    inst.context.check_subgroup(&lam)?;
    if lam.is_zero() {
        return Err(Failure::usage("--lambda must be nonzero"));
    }
    let (cv, cw) = &inst.coefficients[a.frame];
    let slope = slope_along(&lam, cv, cw)?;
    let exact = weight(&lam, frame.w())? - weight(&lam, frame.v())?;
    let out = match a.file.format {
        Format::Json => json_line(&serde_json::json!({ "slope": slope, "exact": exact.to_string() })),
        Format::Text => format!("slope ≈ {slope:.6}; exact {exact}\n"),
    };
    Ok((EXIT_STABLE, out))
}

fn cmd_corpus(a: &CorpusArgs) -> CmdResult {
    let mode = match a.mode {
        CliMode::Free => Mode::Free,
        CliMode::Sl => Mode::Sl,
    };
    if a.identity.is_some() && mode == Mode::Sl {
        return Err(Failure::usage("--identity only applies to --mode free"));
    }
    let mut spec = CorpusSpec::new(mode, a.dim, a.max_coord, a.count, a.seed);
    spec.identity = a.identity.map(|s| match s {
        Shape::Cube => IdentityShape::Cube,
        Shape::Simplex => IdentityShape::Simplex,
        Shape::Cross => IdentityShape::Cross,
    });
    let files = generate(&spec)?;
    match &a.out {
        None => Ok((EXIT_STABLE, files.iter().map(json_line).collect())),
        Some(dir) => {
            let io = |e: std::io::Error| Failure::usage(format!("{}: {e}", dir.display()));
            std::fs::create_dir_all(dir).map_err(io)?;
            let mut listing = String::new();
            for (i, f) in files.iter().enumerate() {
                let path = dir.join(format!("instance-{i:04}.json"));
                std::fs::write(&path, f.to_json()).map_err(io)?;
                writeln!(listing, "{}", path.display()).unwrap();
            }
            Ok((EXIT_STABLE, listing))
        }
    }
}
