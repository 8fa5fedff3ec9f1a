//! `symbolpair`: build repeated-root cyclic codes, compute their Hamming
//! and symbol-pair distances, check the known tables, and sweep the
//! length-`3p` family.

mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use symbolpair::catalog::{self, RowStatus, Table};
use symbolpair::{CodeSpec, CodeSpecInput, FactorSpec, MethodChoice, SearchConfig};

#[derive(Parser, Debug)]
#[command(name = "symbolpair", version, about = "Symbol-pair distances of repeated-root cyclic codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for support partitions and registry rows.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,

    /// Largest p^k that full enumeration accepts.
    #[arg(long, global = true, default_value_t = 10_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    enum_cap: u64,

    /// Largest projective nullspace walked at one support.
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    nullspace_cap: u64,

    #[arg(long, global = true, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Accepted for forward compatibility; no engine is randomized.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a code and print p, l, n, k and the generator.
    Construct(SpecArgs),
    /// Compute d_H and d_p with witnesses and classify.
    Analyze {
        #[command(flatten)]
        spec: SpecArgs,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Check every registry row; exit 1 if any gating row fails.
    VerifyPaper {
        #[arg(long)]
        table: Option<Table>,
        /// Prime for the length-3p tables (must be 1 mod 3). Other rows keep their own primes.
        #[arg(long, default_value_t = 7)]
        p: u32,
    },
    /// Analyze every normalized (r1 >= r2 >= r3) generator of length 3p.
    Scan {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 3)]
        l: u32,
        #[arg(long, default_value_t = 10)]
        max_deg: u32,
    },
}

/// A code either from a JSON file or inline: `--mults a,b,...` gives the
/// multiplicity of `(x - ω^i)` for `i = 0, 1, ...`.
#[derive(Args, Debug)]
struct SpecArgs {
    #[arg(long, conflicts_with_all = ["p", "l", "mults", "omega"])]
    spec: Option<PathBuf>,
    #[arg(long, requires_all = ["l", "mults"])]
    p: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long, value_delimiter = ',')]
    mults: Option<Vec<u32>>,
    #[arg(long)]
    omega: Option<u32>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum MethodArg {
    Auto,
    FullEnum,
    SupportSearch,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Plain,
    Json,
    Csv,
}

/// Everything a command needs besides its own arguments.
struct RunConfig {
    search: SearchConfig,
    format: Format,
    out: Option<PathBuf>,
}

impl RunConfig {
    fn emit(&self, text: &str) -> Result<()> {
        match &self.out {
            Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
            None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
        }
    }
}

impl SpecArgs {
    fn load(&self) -> Result<CodeSpec> {
        if let Some(path) = &self.spec {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            return Ok(CodeSpec::from_json(&text)?);
        }
        let (Some(p), Some(l), Some(mults)) = (self.p, self.l, &self.mults) else {
            bail!("give either --spec FILE or --p, --l and --mults");
        };
        if mults.len() > l as usize {
            bail!("--mults has {} entries but x^{l}-1 has only {l} roots", mults.len());
        }
        let factors: Vec<FactorSpec> =
            mults.iter().enumerate().filter(|(_, &m)| m > 0).map(|(i, &m)| FactorSpec::unity(i as u32, m)).collect();
        let mut input = CodeSpecInput::new(p, l, &factors);
        input.omega = self.omega;
        Ok(CodeSpec::build(&input)?)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let _ = cli.seed;
    let default_format = match cli.command {
        Command::Scan { .. } => Format::Csv,
        _ => Format::Plain,
    };
    let method = match cli.method {
        MethodArg::Auto => MethodChoice::Auto,
        MethodArg::FullEnum => MethodChoice::FullEnum,
        MethodArg::SupportSearch => MethodChoice::SupportSearch,
    };
    let cfg = RunConfig {
        search: SearchConfig {
            enum_cap: cli.enum_cap,
            nullspace_cap: cli.nullspace_cap,
            workers: cli.workers.map(|w| w as usize),
            method,
        },
        format: cli.format.unwrap_or(default_format),
        out: cli.out,
    };
    match cli.command {
        Command::Construct(args) => {
            let spec = args.load()?;
            let text = match cfg.format {
                Format::Plain => render::construct_plain(&spec),
                Format::Json => spec.to_json() + "\n",
                Format::Csv => bail!("construct has no csv output"),
            };
            cfg.emit(&text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze { spec, timing } => {
            let spec = spec.load()?;
            let report = symbolpair::analyze(&spec, &cfg.search)?;
            let text = match cfg.format {
                Format::Plain => render::report_plain(&report, timing),
                Format::Json => render::report_json(&report, timing)?,
                Format::Csv => bail!("analyze has no csv output"),
            };
            cfg.emit(&text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { table, p } => {
            let rows: Vec<_> =
                catalog::registry_at(p)?.into_iter().filter(|r| table.is_none_or(|t| r.table == t)).collect();
            let outcomes = catalog::verify_registry(&rows, &cfg.search)?;
            let text = match cfg.format {
                Format::Plain => render::outcomes_plain(&outcomes),
                Format::Json => serde_json::to_string_pretty(&outcomes)? + "\n",
                Format::Csv => {
                    let mut buf = Vec::new();
                    catalog::write_outcomes_csv(&mut buf, &outcomes)?;
                    String::from_utf8(buf)?
                }
            };
            cfg.emit(&text)?;
            let failed = outcomes.iter().any(|o| o.status == RowStatus::Fail);
            Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Command::Scan { p, l, max_deg } => {
            let summary = catalog::scan(p, l, max_deg, &cfg.search)?;
            let text = match cfg.format {
                Format::Plain => render::scan_plain(&summary),
                Format::Json => serde_json::to_string_pretty(&summary)? + "\n",
                Format::Csv => {
                    let mut buf = Vec::new();
                    catalog::write_scan_csv(&mut buf, &summary)?;
                    eprint!("{}", render::scan_summary(&summary));
                    String::from_utf8(buf)?
                }
            };
            cfg.emit(&text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
