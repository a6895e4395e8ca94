//! Argument handling for the `atilde` binary, kept in a library so it can be
//! driven from tests with in-memory streams.

use std::io::Write;
use std::path::{Path, PathBuf};

use atilde_core::class::seed_dynkin_a;
use atilde_core::classify::ClassifyReport;
use atilde_core::counting::{a_tilde, d_n_count, derived_class_count, format_table, refined_realization_count};
use atilde_core::verify::{self, VerifyConfig};
use atilde_core::{classify, enumerate_class, seed_cycle, seed_dynkin_d, ClassError, ExchangeQuiver};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP_EXCEEDED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "atilde", version, about = "Mutation classes of quivers of type Ã and D")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form counts.
    ///
    /// With only --r and --s: quivers in the class of the (r, s) cycle (r = 0
    /// gives D_s). With --r2 and --s2 as well: realizations with those numbers
    /// of oriented 3-cycles. With --r1 --r2 --s1 --s2: quivers with those
    /// parameters.
    Count(CountArgs),
    /// Breadth-first enumeration of a mutation class.
    Enumerate(EnumerateArgs),
    /// Recognise a quiver of type Ã and report its parameters as JSON.
    Classify {
        #[arg(long)]
        file: PathBuf,
    },
    /// Counts of quivers of type Ã_{n-1}, one row per n.
    Table {
        #[arg(long, default_value_t = 10)]
        n_max: u64,
    },
    /// Cross-check enumeration, classification, closed forms and series.
    Verify {
        #[arg(long, default_value_t = 8)]
        n_max: u64,
        #[arg(long, default_value_t = 10)]
        degree: u32,
        #[arg(long, default_value_t = 2)]
        cap: u32,
    },
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub r: Option<u64>,
    #[arg(long)]
    pub s: Option<u64>,
    #[arg(long)]
    pub r1: Option<u64>,
    #[arg(long)]
    pub r2: Option<u64>,
    #[arg(long)]
    pub s1: Option<u64>,
    #[arg(long)]
    pub s2: Option<u64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    /// Seed: the cycle with R arrows one way and S the other.
    #[arg(long, num_args = 2, value_names = ["R", "S"], group = "seed_kind")]
    pub cycle: Option<Vec<usize>>,
    /// Seed: an orientation of the Dynkin diagram D_N.
    #[arg(long, value_name = "N", group = "seed_kind")]
    pub dynkin_d: Option<usize>,
    /// Seed: an orientation of the Dynkin diagram A_N.
    #[arg(long, value_name = "N", group = "seed_kind")]
    pub dynkin_a: Option<usize>,
    /// Seed read from a quiver file.
    #[arg(long, value_name = "FILE", group = "seed_kind")]
    pub seed: Option<PathBuf>,
    /// Largest number of parallel arrows tolerated before giving up.
    #[arg(long, default_value_t = 2)]
    pub cap: u32,
    /// Directory receiving `class.json` and one quiver file per member.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

/// Failure of a subcommand, mapped onto an exit code.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    CapExceeded(String),
    Verification(String),
    Io(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Io(_) => EXIT_USAGE,
            Failure::CapExceeded(_) => EXIT_CAP_EXCEEDED,
            Failure::Verification(_) => EXIT_VERIFY_FAILED,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::CapExceeded(m) | Failure::Verification(m) | Failure::Io(m) => m,
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn io_err(e: std::io::Error) -> Failure {
    Failure::Io(e.to_string())
}

impl From<ClassError> for Failure {
    fn from(e: ClassError) -> Self {
        match e {
            ClassError::CapExceeded { .. } => Failure::CapExceeded(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Parses `argv` (including the program name), runs the subcommand and
/// returns the exit code.
pub fn run<I, T>(argv: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.exit_code()
        }
    }
}

pub fn execute(cmd: &Command, out: &mut impl Write) -> Result<(), Failure> {
    match cmd {
        Command::Count(args) => count(args, out),
        Command::Enumerate(args) => enumerate(args, out),
        Command::Classify { file } => {
            let q = read_quiver(file)?;
            let report = ClassifyReport::from(&classify(&q));
            let text = serde_json::to_string_pretty(&report).expect("report serialises");
            writeln!(out, "{text}").map_err(io_err)
        }
        Command::Table { n_max } => {
            if *n_max < 2 {
                return Err(usage("--n-max must be at least 2"));
            }
            let table = format_table(*n_max).map_err(|e| usage(e.to_string()))?;
            write!(out, "{table}").map_err(io_err)
        }
        Command::Verify { n_max, degree, cap } => verify_suite(*n_max, *degree, *cap, out),
    }
}

fn count(args: &CountArgs, out: &mut impl Write) -> Result<(), Failure> {
    let CountArgs { r, s, r1, r2, s1, s2, json } = *args;
    let (what, value) = match (r, s, r1, r2, s1, s2) {
        (r, s, Some(r1), Some(r2), Some(s1), Some(s2)) => {
            if r.is_some_and(|r| r != r1 + 2 * r2) || s.is_some_and(|s| s != s1 + 2 * s2) {
                return Err(usage("--r and --s must equal r1 + 2 r2 and s1 + 2 s2"));
            }
            ("class_count", derived_class_count(r1, r2, s1, s2))
        }
        (Some(r), Some(s), None, Some(r2), None, Some(s2)) => {
            if 2 * r2 > r || 2 * s2 > s {
                return Err(usage("need 2 r2 <= r and 2 s2 <= s"));
            }
            ("realizations", refined_realization_count(r, r2, s, s2))
        }
        (Some(r), Some(s), None, None, None, None) => match (r.min(s), r.max(s)) {
            (0, n) if n < 3 => return Err(usage("the oriented cycle needs at least 3 vertices")),
            (0, 3) => ("quivers", a_tilde(r, s)),
            (0, n) => ("quivers", d_n_count(n)),
            _ => ("quivers", a_tilde(r, s)),
        },
        _ => {
            return Err(usage(
                "count takes --r --s, optionally with --r2 --s2, or --r1 --r2 --s1 --s2",
            ))
        }
    };
    let value = value.map_err(|e| usage(e.to_string()))?;
    if json {
        let doc = json!({ "kind": what, "value": value.to_string() });
        writeln!(out, "{doc}").map_err(io_err)
    } else {
        writeln!(out, "{value}").map_err(io_err)
    }
}

fn read_quiver(path: &Path) -> Result<ExchangeQuiver, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    ExchangeQuiver::parse_text(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn enumerate(args: &EnumerateArgs, out: &mut impl Write) -> Result<(), Failure> {
    if args.cap < 2 {
        return Err(usage("--cap must be at least 2"));
    }
    let (label, seed) = if let Some(c) = &args.cycle {
        (format!("cycle {} {}", c[0], c[1]), seed_cycle(c[0], c[1])?)
    } else if let Some(n) = args.dynkin_d {
        (format!("D{n}"), seed_dynkin_d(n)?)
    } else if let Some(n) = args.dynkin_a {
        (format!("A{n}"), seed_dynkin_a(n)?)
    } else if let Some(path) = &args.seed {
        (path.display().to_string(), read_quiver(path)?)
    } else {
        return Err(usage("enumerate needs one of --cycle, --dynkin-d, --dynkin-a, --seed"));
    };

    let class = enumerate_class(&seed, args.cap)?;
    if let Some(dir) = &args.out {
        std::fs::create_dir_all(dir).map_err(io_err)?;
        std::fs::write(dir.join("class.json"), class.to_json() + "\n").map_err(io_err)?;
        let width = class.size().to_string().len();
        for (i, m) in class.members().enumerate() {
            std::fs::write(dir.join(format!("{i:0width$}.quiver")), m.quiver.to_text()).map_err(io_err)?;
        }
    }
    if args.json {
        let doc = json!({
            "seed": label,
            "vertices": seed.n(),
            "size": class.size(),
            "max_depth": class.max_depth(),
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("summary serialises")).map_err(io_err)
    } else {
        writeln!(out, "{label}: {} quivers, largest mutation distance {}", class.size(), class.max_depth())
            .map_err(io_err)
    }
}

fn verify_suite(n_max: u64, degree: u32, cap: u32, out: &mut impl Write) -> Result<(), Failure> {
    if n_max < 2 {
        return Err(usage("--n-max must be at least 2"));
    }
    if degree < 2 {
        return Err(usage("--degree must be at least 2"));
    }
    if cap < 2 {
        return Err(usage("--cap must be at least 2"));
    }
    let cfg = VerifyConfig { n_max, degree, multiplicity_cap: cap };
    let outcomes = verify::run(&cfg, |o| {
        let _ = match &o.result {
            Ok(()) => writeln!(out, "ok   {}", o.name),
            Err(detail) => writeln!(out, "FAIL {}: {detail}", o.name),
        };
    });
    let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed()).collect();
    let _ = writeln!(out, "{} checks, {} failed", outcomes.len(), failed.len());
    match failed.first() {
        None => Ok(()),
        Some(first) => {
            let detail = first.result.as_ref().unwrap_err();
            Err(Failure::Verification(format!("first failing check: {} ({detail})", first.name)))
        }
    }
}
