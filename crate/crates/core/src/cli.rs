//! The `overpart` command-line interface.
//!
//! Exit status is 0 on success, 1 when a `verify` run finds a mismatch, and
//! 2 for usage or parse errors. Output is deterministic for identical
//! arguments.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::enumerate::{overpartitions_of, partitions_of, pentagonal};
use crate::error::Error;
use crate::homs::{is_member, overlength, overnorm, oversize, quotient_image, SubgroupSpec};
use crate::lattice::lattice_levels;
use crate::notation::parse_literal;
use crate::overpartition::Overpartition;
use crate::supernorm::{factor_to_overpartition, supernorm_over, BigRat};
use crate::verify::{self, Identity, AXIOM_NAMES};
use crate::{count_size_kernel_pairs_formula, partition_count, Part};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `n` accepted by `enumerate` for the exhaustive streams.
pub const MAX_ENUMERATE_N: u32 = 60;
/// Largest `n` accepted by `enumerate` for the counting sequences.
pub const MAX_COUNT_N: u32 = 10_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    #[default]
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "overpart", version, about = "Group theory of partitions and overpartitions")]
pub struct Cli {
    /// Output format; each subcommand supports a subset.
    #[arg(long, value_enum, default_value_t = OutputMode::Text, global = true)]
    pub output: OutputMode,

    /// Seed for sampled property runs.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiply overpartitions: `mul "<1^2 2^-3>" "~3,2,1"`.
    Mul {
        #[arg(required = true, allow_hyphen_values = true)]
        literals: Vec<String>,
    },
    /// Group inverse.
    Inv {
        #[arg(allow_hyphen_values = true)]
        literal: String,
    },
    /// Supernorm as a reduced positive rational.
    Supernorm {
        #[arg(allow_hyphen_values = true)]
        literal: String,
    },
    /// Overpartition whose supernorm is the given rational `num/den`.
    Factor { rational: String },
    /// Oversize, overlength, overnorm and related statistics.
    Stats {
        #[arg(allow_hyphen_values = true)]
        literal: String,
    },
    /// Subgroup membership. SUBGROUP is a kind name followed by its
    /// parameter (`parts-in 1,3`, `length-mod 5`) or a JSON object.
    Member {
        #[arg(allow_hyphen_values = true)]
        literal: String,
        #[arg(num_args = 1..=2, required = true)]
        subgroup: Vec<String>,
    },
    /// Image under the homomorphism whose kernel is the subgroup.
    Quotient {
        #[arg(allow_hyphen_values = true)]
        literal: String,
        #[arg(num_args = 1..=2, required = true)]
        subgroup: Vec<String>,
    },
    /// List partitions or overpartitions of n, or tabulate a counting sequence up to n.
    Enumerate { kind: EnumerateKind, n: u32 },
    /// Check an identity for every n up to N (or on N samples for `axioms`).
    Verify { identity: IdentityArg, n: u32 },
    /// Inclusion lattice of partitions with parts at most MAX_PART, up to DEPTH parts.
    Lattice {
        depth: usize,
        #[arg(default_value_t = 3)]
        max_part: Part,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EnumerateKind {
    Partitions,
    Overpartitions,
    Pn,
    Corteel,
    Pentagonal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdentityArg {
    Corteel,
    Pn,
    Overcount,
    Axioms,
}

impl From<IdentityArg> for Identity {
    fn from(value: IdentityArg) -> Self {
        match value {
            IdentityArg::Corteel => Identity::Corteel,
            IdentityArg::Pn => Identity::Pn,
            IdentityArg::Overcount => Identity::Overcount,
            IdentityArg::Axioms => Identity::Axioms,
        }
    }
}

/// JSON schema of `stats`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsReport {
    pub overpartition: String,
    pub multiplicities: Overpartition,
    pub oversize: i128,
    pub overlength: i128,
    pub overnorm: BigRat,
    pub supernorm: BigRat,
    pub size: u128,
    pub length: u128,
    pub distinct_parts: usize,
}

impl StatsReport {
    pub fn new(a: &Overpartition) -> Result<Self, Error> {
        Ok(Self {
            overpartition: a.to_string(),
            multiplicities: a.clone(),
            oversize: oversize(a),
            overlength: overlength(a),
            overnorm: overnorm(a),
            supernorm: supernorm_over(a)?,
            size: a.size(),
            length: a.length(),
            distinct_parts: a.distinct_parts(),
        })
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Mismatch,
}

impl From<Error> for Failure {
    fn from(value: Error) -> Self {
        Failure::Usage(value.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(value: std::io::Error) -> Self {
        Failure::Usage(format!("write failed: {value}"))
    }
}

type CmdResult = Result<(), Failure>;

fn literal(text: &str) -> Result<Overpartition, Failure> {
    parse_literal(text).map_err(|e| Failure::Usage(format!("'{text}': {e}")))
}

/// Parses `kind [param]` or a JSON object.
pub fn parse_subgroup(args: &[String]) -> Result<SubgroupSpec, Error> {
    let first = args.first().map(String::as_str).unwrap_or_default();
    if first.trim_start().starts_with('{') {
        if args.len() > 1 {
            return Err(Error::InvalidSubgroup("unexpected argument after JSON".into()));
        }
        return serde_json::from_str(first).map_err(|e| Error::InvalidSubgroup(e.to_string()));
    }
    let param = args.get(1).map(String::as_str);
    let bad = |what: &str| Error::InvalidSubgroup(format!("bad {what} '{}'", param.unwrap_or("")));
    match first {
        "size-kernel" | "length-kernel" if param.is_some() => Err(Error::InvalidSubgroup(format!(
            "{first} takes no parameter"
        ))),
        "parts-in" | "parts-avoiding" => {
            let set = match param {
                Some(text) if !text.trim().is_empty() => Some(
                    text.split(',')
                        .map(|s| s.trim().parse::<Part>())
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|_| bad("set"))?,
                ),
                _ => Some(Vec::new()),
            };
            SubgroupSpec::from_parts(first, set, None)
        }
        "length-mod" => {
            let m = param.map(|t| t.parse::<u64>().map_err(|_| bad("modulus"))).transpose()?;
            SubgroupSpec::from_parts(first, None, m)
        }
        _ => SubgroupSpec::from_parts(first, None, None),
    }
}

fn unsupported(command: &str, mode: OutputMode) -> Failure {
    Failure::Usage(format!("{command} does not support --output {mode:?}").to_lowercase())
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> CmdResult {
    writeln!(out, "{}", serde_json::to_string(value).expect("serializable"))?;
    Ok(())
}

fn emit_overpartition(out: &mut dyn Write, mode: OutputMode, command: &str, a: &Overpartition) -> CmdResult {
    match mode {
        OutputMode::Text => writeln!(out, "{a}")?,
        OutputMode::Json => json_line(out, a)?,
        other => return Err(unsupported(command, other)),
    }
    Ok(())
}

fn run_command(cli: &Cli, out: &mut dyn Write) -> CmdResult {
    let mode = cli.output;
    match &cli.command {
        Command::Mul { literals } => {
            let mut product = Overpartition::empty();
            for text in literals {
                product = product.checked_multiply(&literal(text)?)?;
            }
            emit_overpartition(out, mode, "mul", &product)
        }
        Command::Inv { literal: text } => emit_overpartition(out, mode, "inv", &literal(text)?.inverse()),
        Command::Supernorm { literal: text } => {
            let value = supernorm_over(&literal(text)?)?;
            match mode {
                OutputMode::Text => writeln!(out, "{value}")?,
                OutputMode::Json => json_line(out, &value)?,
                other => return Err(unsupported("supernorm", other)),
            }
            Ok(())
        }
        Command::Factor { rational } => {
            let q: BigRat = rational.trim().parse()?;
            emit_overpartition(out, mode, "factor", &factor_to_overpartition(&q)?)
        }
        Command::Stats { literal: text } => {
            let report = StatsReport::new(&literal(text)?)?;
            match mode {
                OutputMode::Text => {
                    writeln!(out, "overpartition: {}", report.overpartition)?;
                    writeln!(out, "oversize: {}", report.oversize)?;
                    writeln!(out, "overlength: {}", report.overlength)?;
                    writeln!(out, "overnorm: {}", report.overnorm)?;
                    writeln!(out, "supernorm: {}", report.supernorm)?;
                    writeln!(out, "size: {}", report.size)?;
                    writeln!(out, "length: {}", report.length)?;
                    writeln!(out, "distinct parts: {}", report.distinct_parts)?;
                    for (part, mult) in report.multiplicities.iter() {
                        writeln!(out, "multiplicity {part}: {mult}")?;
                    }
                }
                OutputMode::Json => json_line(out, &report)?,
                other => return Err(unsupported("stats", other)),
            }
            Ok(())
        }
        Command::Member { literal: text, subgroup } => {
            let a = literal(text)?;
            let g = parse_subgroup(subgroup)?;
            let member = is_member(&a, &g);
            match mode {
                OutputMode::Text => writeln!(out, "{member}")?,
                OutputMode::Json => json_line(
                    out,
                    &serde_json::json!({ "overpartition": a.to_string(), "subgroup": g, "member": member }),
                )?,
                other => return Err(unsupported("member", other)),
            }
            Ok(())
        }
        Command::Quotient { literal: text, subgroup } => {
            let a = literal(text)?;
            let g = parse_subgroup(subgroup)?;
            let image = quotient_image(&a, &g);
            match mode {
                OutputMode::Text => writeln!(out, "{image}")?,
                OutputMode::Json => json_line(out, &image)?,
                other => return Err(unsupported("quotient", other)),
            }
            Ok(())
        }
        Command::Enumerate { kind, n } => enumerate(out, mode, *kind, *n),
        Command::Verify { identity, n } => verify_identity(out, mode, (*identity).into(), *n, cli.seed),
        Command::Lattice { depth, max_part } => {
            let lattice = lattice_levels(*depth, *max_part)?;
            match mode {
                OutputMode::Text | OutputMode::Dot => write!(out, "{}", lattice.to_dot())?,
                OutputMode::Json => {
                    let nodes: Vec<_> = lattice
                        .nodes
                        .iter()
                        .map(|n| {
                            serde_json::json!({
                                "partition": n.partition.to_string(),
                                "supernorm": n.supernorm,
                                "level": n.level,
                            })
                        })
                        .collect();
                    json_line(out, &serde_json::json!({ "nodes": nodes, "edges": lattice.edges }))?;
                }
                OutputMode::Csv => return Err(unsupported("lattice", OutputMode::Csv)),
            }
            Ok(())
        }
    }
}

fn enumerate(out: &mut dyn Write, mode: OutputMode, kind: EnumerateKind, n: u32) -> CmdResult {
    let streaming = matches!(kind, EnumerateKind::Partitions | EnumerateKind::Overpartitions);
    let limit = if streaming { MAX_ENUMERATE_N } else { MAX_COUNT_N };
    if n > limit {
        return Err(Failure::Usage(format!("n = {n} exceeds the limit {limit}")));
    }
    if streaming {
        let items: Box<dyn Iterator<Item = Overpartition>> = match kind {
            EnumerateKind::Partitions => Box::new(partitions_of(n).map(Overpartition::from)),
            _ => Box::new(overpartitions_of(n)),
        };
        match mode {
            OutputMode::Text => {
                for item in items {
                    writeln!(out, "{item}")?;
                }
            }
            OutputMode::Csv => {
                writeln!(out, "index,overpartition")?;
                for (i, item) in items.enumerate() {
                    writeln!(out, "{i},{item}")?;
                }
            }
            OutputMode::Json => {
                let all: Vec<String> = items.map(|a| a.to_string()).collect();
                json_line(out, &all)?;
            }
            OutputMode::Dot => return Err(unsupported("enumerate", mode)),
        }
        return Ok(());
    }
    let value = |i: u32| -> String {
        match kind {
            EnumerateKind::Pn => partition_count(i as i64).to_string(),
            EnumerateKind::Corteel => count_size_kernel_pairs_formula(i).to_string(),
            _ => pentagonal(i as u64).to_string(),
        }
    };
    // Pentagonal numbers are indexed from 1; the others from 0.
    let start = u32::from(kind == EnumerateKind::Pentagonal);
    match mode {
        OutputMode::Text | OutputMode::Csv => {
            if mode == OutputMode::Csv {
                writeln!(out, "n,value")?;
            }
            for i in start..=n {
                writeln!(out, "{i},{}", value(i))?;
            }
        }
        OutputMode::Json => {
            let rows: Vec<_> = (start..=n)
                .map(|i| serde_json::json!({ "n": i, "value": value(i) }))
                .collect();
            json_line(out, &rows)?;
        }
        OutputMode::Dot => return Err(unsupported("enumerate", mode)),
    }
    Ok(())
}

fn verify_identity(out: &mut dyn Write, mode: OutputMode, identity: Identity, n: u32, seed: u64) -> CmdResult {
    if n > identity.limit() {
        return Err(Failure::Usage(format!(
            "n = {n} exceeds the limit {} for this identity",
            identity.limit()
        )));
    }
    let rows = verify::rows(identity, n, seed);
    let label = |r: &verify::Row| -> String {
        if identity == Identity::Axioms {
            AXIOM_NAMES[r.n as usize].to_string()
        } else {
            r.n.to_string()
        }
    };
    let status = |ok: bool| if ok { "MATCH" } else { "MISMATCH" };
    let first = if identity == Identity::Axioms { "law" } else { "n" };
    let (formula, oracle) = if identity == Identity::Axioms {
        ("samples", "held")
    } else {
        ("formula", "bruteforce")
    };
    match mode {
        OutputMode::Text => {
            writeln!(out, "{first:>13} {formula:>24} {oracle:>24}  status")?;
            for r in &rows {
                writeln!(out, "{:>13} {:>24} {:>24}  {}", label(r), r.formula, r.oracle, status(r.matches))?;
            }
        }
        OutputMode::Csv => {
            writeln!(out, "{first},{formula},{oracle},status")?;
            for r in &rows {
                writeln!(out, "{},{},{},{}", label(r), r.formula, r.oracle, status(r.matches))?;
            }
        }
        OutputMode::Json => json_line(out, &rows)?,
        OutputMode::Dot => return Err(unsupported("verify", mode)),
    }
    let failures = rows.iter().filter(|r| !r.matches).count();
    if mode == OutputMode::Text {
        if failures == 0 {
            writeln!(out, "all {} rows match", rows.len())?;
        } else {
            writeln!(out, "{failures} of {} rows mismatch", rows.len())?;
        }
    }
    if failures > 0 {
        Err(Failure::Mismatch)
    } else {
        Ok(())
    }
}

/// Runs a parsed command, writing results to `out` and diagnostics to `err`.
/// Returns the process exit status.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match run_command(cli, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Mismatch) => EXIT_MISMATCH,
        Err(Failure::Usage(message)) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_USAGE
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            code
        }
    }
}
