//! Command-line front end: argument and config parsing, job setup, and the
//! three subcommands.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::dynkin::{adapted_word, build_diagram, AdaptedWord, Quiver, TypeLetter};
use crate::error::{Error, Result};
use crate::field::is_prime;
use crate::hall::{Guards, PrimeSource, DEFAULT_MAX_TOTAL_DIM};
use crate::orbits::OrbitCatalog;

mod report;
mod verify;

pub use report::{
    cmd_orbits, cmd_poset, render_orbits, render_poset, render_verify, CheckRecord, OrbitRecord, OrbitsReport,
    PosetNode, PosetReport, Status, SuiteReport, VerifyReport,
};
pub use verify::cmd_verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Dot,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Main,
    Geometric,
    Bongartz,
    Riedtmann,
    All,
}

impl Suite {
    /// The concrete suites this one stands for.
    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Main, Suite::Geometric, Suite::Bongartz, Suite::Riedtmann],
            s => vec![s],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Main => "main",
            Suite::Geometric => "geometric",
            Suite::Bongartz => "bongartz",
            Suite::Riedtmann => "riedtmann",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "dynkin-orbits", version, about = "Orbit catalogs and Hall-polynomial checks for Dynkin quivers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orbit catalog with dimensions, supports, smoothness and χ.
    Orbits(JobArgs),
    /// Hasse diagram of the degeneration order.
    Poset(JobArgs),
    /// Run a verification suite over the catalog.
    Verify {
        #[command(flatten)]
        job: JobArgs,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
}

#[derive(Debug, Default, Args)]
pub struct JobArgs {
    /// TOML file with the same keys as the flags; flags win.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Diagram type: A, D or E.
    #[arg(long = "type")]
    pub type_letter: Option<String>,
    #[arg(long)]
    pub rank: Option<usize>,
    /// Comma-separated 1-based arrows, e.g. `1>2,2>3`. Defaults to i>j for every edge i<j.
    #[arg(long)]
    pub arrows: Option<String>,
    /// Dimension vector, e.g. `1,2,1`.
    #[arg(long)]
    pub dim: Option<String>,
    /// Primes used for interpolation, e.g. `2,3,5,7,11,13`. Defaults to consecutive primes.
    #[arg(long)]
    pub primes: Option<String>,
    /// Largest total dimension whose subrepresentations are enumerated.
    #[arg(long = "max-dim")]
    pub max_dim: Option<usize>,
    /// Largest polynomial degree tried by interpolation.
    #[arg(long = "max-degree")]
    pub max_degree: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Seed for generic sampling.
    #[arg(long)]
    pub seed: Option<u64>,
}

/// Contents of a `--config` file. Every key is optional.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    #[serde(rename = "type")]
    pub type_letter: Option<String>,
    pub rank: Option<usize>,
    pub arrows: Option<String>,
    pub dim: Option<Vec<i64>>,
    pub primes: Option<Vec<u64>>,
    pub max_dim: Option<usize>,
    pub max_degree: Option<usize>,
    pub format: Option<Format>,
    pub seed: Option<u64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Usage(format!("cannot read config {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| Error::Usage(format!("config {}: {e}", path.display())))
    }
}

/// A validated job. Built before any computation starts.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JobConfig {
    pub type_letter: TypeLetter,
    pub rank: usize,
    /// 0-based `(tail, head)` pairs.
    pub arrows: Vec<(usize, usize)>,
    pub dim: Vec<i64>,
    /// `None` means consecutive primes from 2.
    pub primes: Option<Vec<u64>>,
    pub guards: Guards,
    pub format: Option<Format>,
    pub seed: u64,
}

impl JobConfig {
    /// Merge flags over the config file over defaults, and validate.
    pub fn resolve(args: &JobArgs) -> Result<Self> {
        let file = match &args.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        let letter = args
            .type_letter
            .clone()
            .or(file.type_letter)
            .ok_or_else(|| Error::Usage("--type is required".into()))?;
        let type_letter = TypeLetter::from_str(&letter).map_err(|e| Error::Usage(e.to_string()))?;
        let rank = args
            .rank
            .or(file.rank)
            .ok_or_else(|| Error::Usage("--rank is required".into()))?;
        let diagram = build_diagram(type_letter, rank).map_err(|e| Error::Usage(e.to_string()))?;
        let arrows = match args.arrows.as_ref().or(file.arrows.as_ref()) {
            Some(text) => parse_arrows(text)?,
            None => diagram.default_quiver().arrows().to_vec(),
        };
        let dim = match (&args.dim, file.dim) {
            (Some(text), _) => parse_list::<i64>("--dim", text)?,
            (None, Some(d)) => d,
            (None, None) => return Err(Error::Usage("--dim is required".into())),
        };
        if dim.len() != rank {
            return Err(Error::Usage(format!(
                "--dim has {} entries, rank is {rank}",
                dim.len()
            )));
        }
        if let Some(i) = dim.iter().position(|&x| x < 0) {
            return Err(Error::Usage(format!("--dim entry {} is negative", i + 1)));
        }
        let primes = match (&args.primes, file.primes) {
            (Some(text), _) => Some(parse_list::<u64>("--primes", text)?),
            (None, p) => p,
        };
        if let Some(ps) = &primes {
            if let Some(p) = ps.iter().find(|&&p| !is_prime(p)) {
                return Err(Error::Usage(format!("--primes: {p} is not prime")));
            }
            if ps.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Usage("--primes must be strictly increasing".into()));
            }
        }
        let mut guards = Guards::default();
        if let Some(m) = args.max_dim.or(file.max_dim) {
            guards.max_total_dim = m;
        }
        if let Some(m) = args.max_degree.or(file.max_degree) {
            guards.max_degree = m;
        }
        let cfg = Self {
            type_letter,
            rank,
            arrows,
            dim,
            primes,
            guards,
            format: args.format.or(file.format),
            seed: args.seed.or(file.seed).unwrap_or(0),
        };
        cfg.quiver()?;
        Ok(cfg)
    }

    pub fn quiver(&self) -> Result<Quiver> {
        let diagram = build_diagram(self.type_letter, self.rank)?;
        Quiver::new(diagram, &self.arrows).map_err(|e| Error::Usage(e.to_string()))
    }

    pub fn prime_source(&self) -> PrimeSource {
        match &self.primes {
            Some(ps) => PrimeSource::fixed(ps.clone()),
            None => PrimeSource::consecutive(),
        }
    }
}

/// A config together with the word and catalog it describes.
#[derive(Clone, Debug)]
pub struct Job {
    pub config: JobConfig,
    pub word: AdaptedWord,
    pub catalog: OrbitCatalog,
}

impl Job {
    pub fn new(config: JobConfig) -> Result<Self> {
        let word = adapted_word(&config.quiver()?);
        let catalog = OrbitCatalog::new(&word, &config.dim)?;
        Ok(Self { config, word, catalog })
    }

    pub fn from_args(args: &JobArgs) -> Result<Self> {
        Self::new(JobConfig::resolve(args)?)
    }
}

/// Parse `1>2,2>3` into 0-based pairs. Errors name the 1-based character
/// position of the offending token.
pub fn parse_arrows(text: &str) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    if text.trim().is_empty() {
        return Ok(out);
    }
    let mut pos = 1;
    for token in text.split(',') {
        let bad = |why: &str| Error::Usage(format!("--arrows: {why} {:?} at position {pos}", token));
        let (t, h) = token.trim().split_once('>').ok_or_else(|| bad("expected i>j, got"))?;
        let t: usize = t.trim().parse().map_err(|_| bad("bad tail vertex in"))?;
        let h: usize = h.trim().parse().map_err(|_| bad("bad head vertex in"))?;
        if t == 0 || h == 0 {
            return Err(bad("vertices are 1-based in"));
        }
        out.push((t - 1, h - 1));
        pos += token.chars().count() + 1;
    }
    Ok(out)
}

fn parse_list<T: FromStr>(flag: &str, text: &str) -> Result<Vec<T>> {
    let mut out = Vec::new();
    let mut pos = 1;
    for token in text.split(',') {
        let v = token
            .trim()
            .parse()
            .map_err(|_| Error::Usage(format!("{flag}: bad entry {token:?} at position {pos}")))?;
        out.push(v);
        pos += token.chars().count() + 1;
    }
    Ok(out)
}

/// Exit code for an error that aborted a whole command.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Usage(_)
        | Error::InvalidDiagram(_)
        | Error::InvalidQuiver(_)
        | Error::InvalidField(_)
        | Error::DimensionMismatch(_)
        | Error::VertexOutOfRange { .. }
        | Error::Io(_) => EXIT_USAGE,
        Error::Guard(_) | Error::Interpolation(_) => EXIT_GUARD,
        _ => EXIT_FAILED,
    }
}

/// Parse `args` (program name first), run, and return the exit code.
/// Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(&cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn load(args: &JobArgs, err: &mut dyn Write) -> Result<Job> {
    let job = Job::from_args(args)?;
    let m = job.config.guards.max_total_dim;
    if m > DEFAULT_MAX_TOTAL_DIM {
        writeln!(
            err,
            "warning: --max-dim {m} is above the default {DEFAULT_MAX_TOTAL_DIM}; submodule enumeration grows quickly"
        )?;
    }
    Ok(job)
}

fn dispatch(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Orbits(args) => {
            let job = load(args, err)?;
            let report = cmd_orbits(&job)?;
            out.write_all(render_orbits(&report, job.config.format.unwrap_or(Format::Table))?.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Poset(args) => {
            let job = load(args, err)?;
            let report = cmd_poset(&job)?;
            out.write_all(render_poset(&report, job.config.format.unwrap_or(Format::Dot))?.as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Verify { job, suite } => {
            let job = load(job, err)?;
            let format = job.config.format.unwrap_or(Format::Table);
            if format == Format::Dot {
                return Err(Error::Usage("verify has no dot output; use json or table".into()));
            }
            let report = cmd_verify(&job, *suite);
            out.write_all(render_verify(&report, format)?.as_bytes())?;
            Ok(report.exit_code())
        }
    }
}
