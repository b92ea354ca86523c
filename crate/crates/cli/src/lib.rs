//! Argument handling for the `g2cluster` binary.
//!
//! Exit codes: 0 when every non-flagged check passes, 1 on a failing check,
//! 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use verify::report::{any_failure, to_json, to_text};
use verify::seeds::{named_seed, SeedWithFunctions};
use verify::{infer_degrees, run_suite, Config, Mode, Options, Suite, Target};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest |r| accepted by `--range` and `--r`.
pub const MAX_R: i64 = 40;

#[derive(Parser, Debug)]
#[command(name = "g2cluster", version, about = "Cluster structures on G2 flag varieties, checked exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a suite of checks and print the report.
    Verify(VerifyArgs),
    /// Print a named seed with the functions on its initial cluster.
    Seed(SeedArgs),
    /// Apply a mutation sequence to a named seed and print the result.
    Mutate(MutateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct Output {
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    pub suite: Suite,
    /// Restrict the belt suite to one case.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub case: Option<u8>,
    /// Belt range, e.g. -12..12.
    #[arg(long, default_value = "-12..12", value_parser = parse_range, allow_hyphen_values = true)]
    pub range: (i64, i64),
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    #[arg(long, default_value_t = 1)]
    pub rng_seed: u64,
    #[arg(long, default_value = "randomized", value_parser = parse_mode)]
    pub mode: Mode,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct SeedArgs {
    /// sigma, underline-sigma, underline-sigma-0, gls or belt, optionally with the case appended.
    #[arg(long)]
    pub name: String,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub case: u8,
    /// Belt index.
    #[arg(long, default_value_t = 0, value_parser = parse_r, allow_hyphen_values = true)]
    pub r: i64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct MutateArgs {
    #[command(flatten)]
    pub seed: SeedArgs,
    /// Comma-separated vertex labels, applied leftmost first.
    #[arg(long, default_value = "", value_parser = parse_sequence, allow_hyphen_values = true)]
    pub seq: Sequence,
    /// Read the sequence as a composition: rightmost applied first.
    #[arg(long = "paper-order")]
    pub composition: bool,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

fn parse_r(s: &str) -> Result<i64, String> {
    let r: i64 = s.trim().parse().map_err(|_| format!("{s:?} is not an integer"))?;
    if r.abs() > MAX_R {
        return Err(format!("|r| must be at most {MAX_R}"));
    }
    Ok(r)
}

pub fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("{s:?} is not of the form A..B"))?;
    let (a, b) = (parse_r(a)?, parse_r(b)?);
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

/// A mutation sequence as given on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequence(pub Vec<i32>);

fn parse_sequence(s: &str) -> Result<Sequence, String> {
    parse_seq(s).map(Sequence)
}

pub fn parse_seq(s: &str) -> Result<Vec<i32>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| format!("{t:?} is not a vertex label")))
        .collect()
}

#[derive(Serialize)]
struct SeedView {
    name: String,
    case: u8,
    seed: mutation::SeedJson,
    functions: Vec<(i32, String)>,
    /// Degrees of the current mutable variables, for seeds of the partial flag varieties.
    degrees: Option<Vec<(i32, String)>>,
    notes: Vec<String>,
}

fn seed_view(s: &SeedWithFunctions, seed: &mutation::Seed) -> Result<SeedView, verify::VerifyError> {
    let mut notes = Vec::new();
    if s.name.starts_with("underline-sigma1") {
        notes.push("b33 is printed as 1 in the source table; 0 is used so the matrix is skew-symmetrizable".into());
    }
    let degrees = if s.name.starts_with("sigma") {
        None
    } else {
        let labels = seed.matrix().mutable_labels().to_vec();
        let targets: Vec<Target> = labels
            .iter()
            .map(|&l| seed.variable(l).map(|p| Target::bridged(p, &s.assignment)))
            .collect::<Result<_, _>>()?;
        let refs: Vec<&Target> = targets.iter().collect();
        let ds = infer_degrees(&refs, s.case, &Config::default(), &format!("cli.seed.{}", s.name));
        Some(
            labels
                .into_iter()
                .zip(ds)
                .map(|(l, d)| (l, d.map_or_else(|e| format!("not homogeneous: {e}"), |d| d.to_string())))
                .collect(),
        )
    };
    Ok(SeedView {
        name: s.name.clone(),
        case: s.case,
        seed: seed.to_json(),
        functions: s.assignment.listing(),
        degrees,
        notes,
    })
}

fn seed_text(v: &SeedView) -> String {
    let mut out = format!("seed {} (case {})\nmatrix:\n", v.name, v.case);
    for (l, row) in v.seed.labels.iter().zip(&v.seed.matrix) {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        out.push_str(&format!("  {l:>3} | {}\n", cells.join(" ")));
    }
    out.push_str("cluster:\n");
    for (l, c) in v.seed.labels.iter().zip(&v.seed.cluster) {
        out.push_str(&format!("  x{l} = {c}\n"));
    }
    out.push_str("functions:\n");
    for (l, f) in &v.functions {
        out.push_str(&format!("  x{l} -> {f}\n"));
    }
    if let Some(ds) = &v.degrees {
        out.push_str("degrees:\n");
        for (l, d) in ds {
            out.push_str(&format!("  vertex {l}: {d}\n"));
        }
    }
    if !v.history().is_empty() {
        out.push_str(&format!("history: {:?}\n", v.history()));
    }
    for n in &v.notes {
        out.push_str(&format!("note: {n}\n"));
    }
    out
}

impl SeedView {
    fn history(&self) -> &[i32] {
        &self.seed.history
    }
}

fn emit(o: &Output, text: &str, err: &mut dyn Write) -> i32 {
    let res = match &o.out {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    match res {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: cannot write output: {e}");
            EXIT_USAGE
        }
    }
}

fn cmd_verify(a: &VerifyArgs, err: &mut dyn Write) -> i32 {
    let config = Config { trials: a.trials as usize, rng_seed: a.rng_seed, mode: a.mode };
    let opts = Options { config, case: a.case, range: a.range };
    let run = || run_suite(a.suite, &opts);
    let reports = match a.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j as usize).build() {
            Ok(pool) => pool.install(run),
            Err(e) => {
                let _ = writeln!(err, "error: cannot start {j} workers: {e}");
                return EXIT_USAGE;
            }
        },
        None => run(),
    };
    let text = match a.output.format {
        Format::Json => to_json(&reports) + "\n",
        Format::Text => to_text(&reports),
    };
    let code = emit(&a.output, &text, err);
    if code != EXIT_OK {
        code
    } else if any_failure(&reports) {
        EXIT_FAIL
    } else {
        EXIT_OK
    }
}

fn show(s: &SeedWithFunctions, seed: &mutation::Seed, o: &Output, err: &mut dyn Write) -> i32 {
    match seed_view(s, seed) {
        Ok(v) => {
            let text = match o.format {
                Format::Json => serde_json::to_string_pretty(&v).expect("view serializes") + "\n",
                Format::Text => seed_text(&v),
            };
            emit(o, &text, err)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn lookup(a: &SeedArgs, err: &mut dyn Write) -> Option<SeedWithFunctions> {
    match named_seed(&a.name, a.case, a.r) {
        Ok(s) => Some(s),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            None
        }
    }
}

fn cmd_seed(a: &SeedArgs, err: &mut dyn Write) -> i32 {
    match lookup(a, err) {
        Some(s) => show(&s, &s.seed, &a.output, err),
        None => EXIT_USAGE,
    }
}

fn cmd_mutate(a: &MutateArgs, err: &mut dyn Write) -> i32 {
    let Some(s) = lookup(&a.seed, err) else { return EXIT_USAGE };
    let result = if a.composition { s.seed.apply_composition(&a.seq.0) } else { s.seed.apply_sequence(&a.seq.0) };
    match result {
        Ok(m) => show(&s, &m, &a.seed.output, err),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Parse and run; returns the exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let mut err = std::io::stderr();
    match &cli.command {
        Command::Verify(a) => cmd_verify(a, &mut err),
        Command::Seed(a) => cmd_seed(a, &mut err),
        Command::Mutate(a) => cmd_mutate(a, &mut err),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_and_sequences() {
        assert_eq!(parse_range("-12..12"), Ok((-12, 12)));
        assert!(parse_range("3..1").is_err());
        assert!(parse_range("-41..0").is_err());
        assert!(parse_range("5").is_err());
        assert_eq!(parse_seq("4, 2"), Ok(vec![4, 2]));
        assert_eq!(parse_seq(""), Ok(vec![]));
        assert!(parse_seq("1,x").is_err());
    }

    #[test]
    fn flags_parse() {
        let c = Cli::try_parse_from(["g2cluster", "verify", "--suite", "belt", "--case", "2", "--range", "-3..4"]).unwrap();
        let Command::Verify(a) = c.command else { panic!() };
        assert_eq!((a.suite, a.case, a.range), (Suite::Belt, Some(2), (-3, 4)));
        assert!(Cli::try_parse_from(["g2cluster", "verify", "--trials", "0"]).is_err());
        assert!(Cli::try_parse_from(["g2cluster", "verify", "--mode", "exact"]).is_err());
    }
}
