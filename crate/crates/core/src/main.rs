use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use lindefect::exact_linalg::{Field, FieldSpec, PrimeField, Rationals};
use lindefect::lab::{full_check, scan, ScanConfig};
use lindefect::local_algebra::FiniteLocalAlgebra;
use lindefect::presentation::{
    build_algebra, load_structure_constants, parse_presentation, parse_table_document, GroebnerLimits, RingPresentation, TableDocument,
};
use lindefect::resolution::{resolve_with, RModule, ResolutionLimits};
use lindefect::tor_ladder::upsilon;

#[derive(Parser)]
#[command(name = "lindefect", version, about = "Minimal resolutions, linear parts and linearity defect over Artinian local algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for the residue field
    Analyze {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 6)]
        horizon: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = ResolutionLimits::default().max_entries)]
        max_entries: usize,
    },
    /// Betti numbers and differentials of a minimal resolution
    Resolve {
        #[command(flatten)]
        input: Input,
        /// module to resolve; only the residue field `k` is supported
        #[arg(long, default_value = "k", value_parser = ["k"])]
        module: String,
        #[arg(long, default_value_t = 5)]
        horizon: usize,
        /// print the differentials
        #[arg(long)]
        verbose: bool,
    },
    /// The map Tor_i(k, R/m^{n+1}) -> Tor_i(k, R/m^n)
    Upsilon {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'i', long = "index")]
        index: usize,
        #[arg(short = 'n', long = "power")]
        power: usize,
    },
    /// Random algebras with m^c = 0, one JSON record per line
    Scan(ScanArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// ring presentation file
    #[arg(long)]
    ring: Option<PathBuf>,
    /// structure-constant table (JSON)
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long, default_value_t = 2)]
    vars: usize,
    #[arg(long = "char", default_value_t = 101)]
    characteristic: u64,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(3..=5))]
    nilpotency: u32,
    #[arg(long, default_value_t = 50)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 6)]
    horizon: usize,
    #[arg(long)]
    out: PathBuf,
    /// number of random generators besides the degree-c monomials
    #[arg(long, default_value_t = 2)]
    extras: usize,
    #[arg(long, default_value_t = 2)]
    min_degree: u32,
    #[arg(long, default_value_t = 3)]
    max_degree: u32,
    #[arg(long, default_value_t = 20)]
    max_dim: usize,
    #[arg(long, default_value_t = ScanConfig::default().max_entries)]
    max_entries: usize,
    /// record wall-clock time (or SOURCE_DATE_EPOCH) in each record
    #[arg(long)]
    timestamp: bool,
}

enum Source {
    Ring(RingPresentation),
    Table(TableDocument),
}

impl Source {
    fn read(input: &Input) -> Result<Self> {
        let (path, is_ring) = match (&input.ring, &input.table) {
            (Some(p), None) => (p, true),
            (None, Some(p)) => (p, false),
            _ => bail!("give exactly one of --ring and --table"),
        };
        let text = read(path)?;
        Ok(if is_ring {
            Source::Ring(parse_presentation(&text).with_context(|| path.display().to_string())?)
        } else {
            Source::Table(parse_table_document(&text).with_context(|| path.display().to_string())?)
        })
    }

    fn field(&self) -> Result<FieldSpec> {
        Ok(match self {
            Source::Ring(p) => p.field,
            Source::Table(t) => t.field()?,
        })
    }

    fn algebra<F: Field>(&self, field: &F) -> Result<Arc<FiniteLocalAlgebra<F>>> {
        Ok(Arc::new(match self {
            Source::Ring(p) => build_algebra(field, p, &GroebnerLimits::default())?,
            Source::Table(t) => load_structure_constants(field, t)?,
        }))
    }

    fn presentation(&self) -> Option<&RingPresentation> {
        match self {
            Source::Ring(p) => Some(p),
            Source::Table(_) => None,
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

/// Runs `$body` with `$field` bound to the concrete field of `$spec`.
macro_rules! over_field {
    ($spec:expr, |$field:ident| $body:expr) => {
        match $spec {
            FieldSpec::Prime(p) => {
                let $field = PrimeField::new(p)?;
                $body
            }
            FieldSpec::Rationals => {
                let $field = Rationals;
                $body
            }
        }
    };
}

const EXIT_INPUT: u8 = 1;
const EXIT_VIOLATION: u8 = 2;

fn analyze<F: Field>(field: &F, src: &Source, horizon: usize, format: Format, max_entries: usize) -> Result<ExitCode> {
    let alg = src.algebra(field)?;
    let report = full_check(&alg, src.presentation(), horizon, &ResolutionLimits { max_entries })?;
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!("{}", report.to_text()),
    }
    Ok(if report.flags.any_violation() {
        ExitCode::from(EXIT_VIOLATION)
    } else {
        ExitCode::SUCCESS
    })
}

fn resolve_cmd<F: Field>(field: &F, src: &Source, horizon: usize, verbose: bool) -> Result<ExitCode> {
    let alg = src.algebra(field)?;
    let res = resolve_with(&RModule::residue_field(&alg), horizon, &ResolutionLimits::default())?;
    let betti: Vec<String> = res.betti().iter().map(usize::to_string).collect();
    println!("betti {}", betti.join(","));
    for (i, b) in res.betti().iter().enumerate() {
        println!("  b_{i} = {b}");
    }
    if verbose {
        for (k, diff) in res.differentials().iter().enumerate() {
            println!("∂_{} ({} x {}):", k + 1, diff.rows(), diff.cols());
            for r in 0..diff.rows() {
                let row: Vec<String> = (0..diff.cols()).map(|c| alg.format_element(diff.entry(r, c))).collect();
                println!("  [{}]", row.join(", "));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn upsilon_cmd<F: Field>(field: &F, src: &Source, i: usize, n: usize) -> Result<ExitCode> {
    if n == 0 {
        bail!("-n must be at least 1");
    }
    let alg = src.algebra(field)?;
    let res = resolve_with(&RModule::residue_field(&alg), i + 1, &ResolutionLimits::default())?;
    let map = upsilon(&res, n, i)?;
    println!("dim Tor_{i}(k, R/m^{}) = {}", n + 1, map.source_dim);
    println!("dim Tor_{i}(k, R/m^{n}) = {}", map.target_dim);
    println!("matrix ({} x {}):", map.matrix.rows(), map.matrix.cols());
    for r in 0..map.matrix.rows() {
        let row: Vec<String> = map.matrix.row(r).iter().map(|x| field.format(x)).collect();
        println!("  [{}]", row.join(", "));
    }
    println!("rank {}", map.rank);
    if i >= 1 && n + 1 >= alg.nilpotency_index() {
        println!("m^{} = 0, so R/m^{} = R is free and Tor_{i}(k, R) = 0", n + 1, n + 1);
    }
    Ok(ExitCode::SUCCESS)
}

fn scan_cmd(a: &ScanArgs) -> Result<ExitCode> {
    let cfg = ScanConfig {
        vars: a.vars,
        characteristic: a.characteristic,
        nilpotency: a.nilpotency,
        extra_generators: a.extras,
        min_degree: a.min_degree,
        max_degree: a.max_degree,
        horizon: a.horizon,
        count: a.count,
        seed: a.seed,
        max_dim: a.max_dim,
        max_entries: a.max_entries,
        timestamp: a.timestamp,
        ..ScanConfig::default()
    };
    cfg.validate()?;
    let file = fs::File::create(&a.out).with_context(|| format!("cannot create {}", a.out.display()))?;
    let mut out = BufWriter::new(file);
    let summary = scan(&cfg, &mut out)?;
    out.flush()?;
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    serde_json::to_writer_pretty(&mut lock, &summary)?;
    writeln!(lock)?;
    Ok(if summary.has_violations() {
        ExitCode::from(EXIT_VIOLATION)
    } else {
        ExitCode::SUCCESS
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze {
            input,
            horizon,
            format,
            max_entries,
        } => {
            let src = Source::read(&input)?;
            over_field!(src.field()?, |f| analyze(&f, &src, horizon, format, max_entries))
        }
        Command::Resolve {
            input, horizon, verbose, ..
        } => {
            let src = Source::read(&input)?;
            over_field!(src.field()?, |f| resolve_cmd(&f, &src, horizon, verbose))
        }
        Command::Upsilon { input, index, power } => {
            let src = Source::read(&input)?;
            over_field!(src.field()?, |f| upsilon_cmd(&f, &src, index, power))
        }
        Command::Scan(args) => scan_cmd(&args),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_INPUT) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
