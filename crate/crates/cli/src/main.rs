//! `setdev`: run the claim suite and inspect single constructions.
//!
//! Exit status: 0 when every verdict matches its expected verdict, 1 on a
//! verdict mismatch, 2 on a usage or input error.

mod render;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use setdev::abgroup::GroupHom;
use setdev::finset::{FiniteSet, Mapping};
use setdev::verifier::{self, ClaimKind, Universe};

#[derive(Parser)]
#[command(
    name = "setdev",
    version,
    about = "Deviations of finite mappings from bijectivity"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check registered claims over a bounded universe.
    Verify(VerifyArgs),
    /// Deviation, classification and factorization of a mapping.
    Dev(MappingArgs),
    /// Canonical factorization of a mapping, component by component.
    Factor(MappingArgs),
    /// Group deviation of a homomorphism of finite abelian groups.
    Group(GroupArgs),
    /// The e-space embedding of a mapping, or the deviation of e_X.
    Chu(ChuArgs),
    /// Run only the existential and report-only claims and show witnesses.
    Counterexamples(SuiteArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Args)]
struct Output {
    /// Output format; machine is one JSON object per line.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Bounds {
    /// Load the universe from a JSON file; flags below override it.
    #[arg(long)]
    universe: Option<PathBuf>,
    /// Carrier bound for mapping claims; also caps the triple and powerset bounds.
    #[arg(long)]
    max_size: Option<usize>,
    #[arg(long)]
    max_triple_size: Option<usize>,
    #[arg(long)]
    max_powerset_base: Option<usize>,
    #[arg(long)]
    max_group_order: Option<u64>,
    #[arg(long)]
    max_pair_group_order: Option<u64>,
    #[arg(long)]
    max_oracle_group_order: Option<u64>,
    #[arg(long)]
    max_embed_group_order: Option<u64>,
}

impl Bounds {
    fn universe(&self) -> Result<Universe, String> {
        let mut u = match &self.universe {
            Some(path) => {
                let text =
                    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?
            }
            None => Universe::default(),
        };
        if let Some(n) = self.max_size {
            u.max_set_size = n;
            u.max_triple_size = u.max_triple_size.min(n);
            u.max_powerset_base = u.max_powerset_base.min(n);
        }
        let set = |slot: &mut usize, v: Option<usize>| {
            if let Some(v) = v {
                *slot = v;
            }
        };
        set(&mut u.max_triple_size, self.max_triple_size);
        set(&mut u.max_powerset_base, self.max_powerset_base);
        let set = |slot: &mut u64, v: Option<u64>| {
            if let Some(v) = v {
                *slot = v;
            }
        };
        set(&mut u.max_group_order, self.max_group_order);
        set(&mut u.max_pair_group_order, self.max_pair_group_order);
        set(&mut u.max_oracle_group_order, self.max_oracle_group_order);
        set(&mut u.max_embed_group_order, self.max_embed_group_order);
        u.validate().map_err(|e| e.to_string())?;
        Ok(u)
    }
}

#[derive(Args)]
struct SuiteArgs {
    #[command(flatten)]
    bounds: Bounds,
    #[command(flatten)]
    output: Output,
    /// Include elapsed milliseconds; makes reports differ between runs.
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated claim ids; all claims when absent.
    #[arg(long, value_delimiter = ',')]
    claims: Vec<String>,
    /// List the registered claims and exit.
    #[arg(long)]
    list: bool,
    #[command(flatten)]
    suite: SuiteArgs,
}

#[derive(Args)]
struct MappingArgs {
    /// Mapping literal, e.g. '{"dom":3,"cod":2,"table":[0,0,1]}'.
    mapping: String,
    /// Emit a DOT graph of the mapping and its kernel blocks instead.
    #[arg(long)]
    dot: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct GroupArgs {
    /// Homomorphism literal, e.g. '{"dom":[4],"cod":[4],"matrix":[[2]]}'.
    hom: String,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct ChuArgs {
    /// Mapping literal to embed as (f, f^-1) between e-spaces.
    mapping: Option<String>,
    /// Instead, show the deviation of e_X for |X| = N.
    #[arg(long, value_name = "N", conflicts_with = "mapping")]
    e_deviation: Option<usize>,
    #[command(flatten)]
    output: Output,
}

/// A failure that maps to exit status 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    match cli.command {
        Command::Verify(args) => verify(args),
        Command::Counterexamples(args) => counterexamples(args),
        Command::Dev(args) => {
            let f = parse_mapping(&args.mapping)?;
            let text = if args.dot {
                render::dot(&f)
            } else {
                render::dev(&f, args.output.format == Format::Machine)
            };
            emit(&args.output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Factor(args) => {
            let f = parse_mapping(&args.mapping)?;
            let text = if args.dot {
                render::dot(&f)
            } else {
                render::factor(&f, args.output.format == Format::Machine)
            };
            emit(&args.output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Group(args) => {
            let hom: GroupHom = serde_json::from_str(&args.hom)
                .map_err(|e| UsageError(format!("invalid homomorphism literal: {e}")))?;
            emit(
                &args.output,
                &render::group(&hom, args.output.format == Format::Machine),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Chu(args) => {
            let machine = args.output.format == Format::Machine;
            let text = match (&args.mapping, args.e_deviation) {
                (Some(lit), None) => render::chu_embedding(&parse_mapping(lit)?, machine)?,
                (None, Some(n)) => render::e_deviation(&FiniteSet::new(n), machine)?,
                _ => {
                    return Err(UsageError(
                        "give a mapping literal or --e-deviation N".into(),
                    ))
                }
            };
            emit(&args.output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_mapping(lit: &str) -> Result<Mapping, UsageError> {
    serde_json::from_str(lit).map_err(|e| UsageError(format!("invalid mapping literal: {e}")))
}

fn emit(out: &Output, text: &str) -> Result<(), UsageError> {
    match &out.output {
        Some(path) => {
            fs::write(path, text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn verify(args: VerifyArgs) -> Result<ExitCode, UsageError> {
    if args.list {
        let mut text = String::new();
        for c in verifier::claims() {
            text.push_str(&format!(
                "{:<24} {:<12} {}\n",
                c.id,
                kind_name(c.kind),
                c.description
            ));
        }
        emit(&args.suite.output, &text)?;
        return Ok(ExitCode::SUCCESS);
    }
    let ids: Vec<&str> = if args.claims.is_empty() {
        verifier::claims().iter().map(|c| c.id).collect()
    } else {
        args.claims.iter().map(String::as_str).collect()
    };
    if let Some(bad) = ids.iter().find(|id| verifier::claim(id).is_none()) {
        return Err(UsageError(format!(
            "unknown claim id {bad:?}; see `setdev verify --list`"
        )));
    }
    run_suite(&ids, &args.suite)
}

fn counterexamples(args: SuiteArgs) -> Result<ExitCode, UsageError> {
    let ids: Vec<&str> = verifier::claims()
        .iter()
        .filter(|c| c.kind != ClaimKind::Universal)
        .map(|c| c.id)
        .collect();
    run_suite(&ids, &args)
}

fn run_suite(ids: &[&str], args: &SuiteArgs) -> Result<ExitCode, UsageError> {
    let universe = args.bounds.universe().map_err(UsageError)?;
    let reports = verifier::check_claims(ids, &universe)?;
    let text = match args.output.format {
        Format::Text => verifier::render_text(&reports, args.timings),
        Format::Machine => verifier::render_machine(&reports, args.timings),
    };
    emit(&args.output, &text)?;
    Ok(if reports.iter().any(|r| r.is_mismatch()) {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn kind_name(k: ClaimKind) -> &'static str {
    match k {
        ClaimKind::Universal => "universal",
        ClaimKind::Existential => "existential",
        ClaimKind::ReportOnly => "report-only",
    }
}
