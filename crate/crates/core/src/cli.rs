//! Command-line front end. Every subcommand is a thin wrapper over one
//! library call; this module only parses arguments and formats results.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::factor::{self, LengthTable};
use crate::mcnugget;
use crate::monoid::NumericalMonoid;
use crate::omega;
use crate::verify;
use crate::Error;

#[derive(Debug, Parser)]
#[command(
    name = "nummon",
    version,
    about = "Factorization invariants of numerical monoids"
)]
struct Cli {
    /// Comma-separated generators.
    #[arg(
        long,
        global = true,
        value_delimiter = ',',
        default_value = "6,9,20",
        allow_hyphen_values = true
    )]
    gens: Vec<i64>,

    /// Emit a JSON object instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Membership test.
    Member { x: i64 },
    /// All gaps.
    Gaps,
    /// Frobenius number.
    Frobenius,
    /// Complete factorization set.
    Factor { x: i64 },
    /// Length set with its minimum and maximum.
    Lengths { x: i64 },
    /// Elasticity of an element, or of the monoid when no element is given.
    Elasticity { x: Option<i64> },
    /// Delta set of an element.
    Delta { x: i64 },
    /// Delta set of the whole monoid.
    DeltaMonoid,
    /// ω-primality of a nonzero element.
    Omega { x: i64 },
    /// All bullets of a nonzero element, longest first.
    Bullets { x: i64 },
    /// Uniquely factorable elements up to a limit.
    Unique { limit: i64 },
    /// Witness that an element is not prime.
    Witness { x: i64 },
    /// Reproduce the reference tables for <6,9,20> (1: expansions, 2: lengths).
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=2))]
        which: u8,
    },
    /// CSV data behind the elasticity and ω plots.
    PlotData {
        #[arg(value_enum)]
        kind: PlotKind,
        #[arg(long)]
        max: i64,
    },
    /// Run the property scans and report one line per check.
    Verify,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PlotKind {
    Elasticity,
    Omega,
}

/// Structured form of a result, as printed with `--json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub gens: Vec<i64>,
    pub input: Value,
    pub result: Value,
}

struct Rendered {
    input: Value,
    result: Value,
    text: String,
}

fn render(input: Value, result: Value, text: impl Into<String>) -> Rendered {
    Rendered {
        input,
        result,
        text: text.into(),
    }
}

fn joined<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

/// Runs the CLI on `args` (program name first). Returns the process exit
/// code: 0 on success, 1 on a domain error, 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let m = match NumericalMonoid::new(&cli.gens) {
        Ok(m) => m,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    };

    if let Command::PlotData { kind, max } = cli.command {
        return plot_data(&m, kind, max, out, err);
    }
    if let Command::Verify = cli.command {
        return run_verify(&m, cli.json, &cli.gens, out);
    }

    let name = command_name(&cli.command);
    match execute(&m, &cli.command) {
        Ok(r) => {
            let written = if cli.json {
                let record = OutputRecord {
                    command: name.to_string(),
                    gens: cli.gens.clone(),
                    input: r.input,
                    result: r.result,
                };
                writeln!(out, "{}", serde_json::to_string(&record).unwrap())
            } else {
                writeln!(out, "{}", r.text)
            };
            if written.is_err() {
                return 1;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Member { .. } => "member",
        Command::Gaps => "gaps",
        Command::Frobenius => "frobenius",
        Command::Factor { .. } => "factor",
        Command::Lengths { .. } => "lengths",
        Command::Elasticity { .. } => "elasticity",
        Command::Delta { .. } => "delta",
        Command::DeltaMonoid => "delta-monoid",
        Command::Omega { .. } => "omega",
        Command::Bullets { .. } => "bullets",
        Command::Unique { .. } => "unique",
        Command::Witness { .. } => "witness",
        Command::Table { .. } => "table",
        Command::PlotData { .. } => "plot-data",
        Command::Verify => "verify",
    }
}

fn execute(m: &NumericalMonoid, command: &Command) -> Result<Rendered, Error> {
    let r = match *command {
        Command::Member { x } => {
            let b = m.contains(x);
            render(json!(x), json!(b), b.to_string())
        }
        Command::Gaps => {
            let gaps = m.gaps();
            render(Value::Null, json!(gaps), joined(&gaps))
        }
        Command::Frobenius => {
            let f = m.frobenius();
            render(Value::Null, json!(f), f.to_string())
        }
        Command::Factor { x } => {
            let z = factor::factorizations(m, x)?;
            render(json!(x), json!(z.factorizations), z.to_string())
        }
        Command::Lengths { x } => {
            let s = factor::length_set(m, x)?;
            let text = format!("{s} min {} max {}", s.min(), s.max());
            let result = json!({ "lengths": s.lengths, "min": s.min(), "max": s.max() });
            render(json!(x), result, text)
        }
        Command::Elasticity { x } => {
            let rho = match x {
                Some(x) => factor::elasticity(m, x)?,
                None => factor::monoid_elasticity(m),
            };
            let result = json!({ "num": rho.numer(), "den": rho.denom() });
            render(json!(x), result, rho.to_string())
        }
        Command::Delta { x } => {
            let d = factor::delta_set(m, x)?;
            render(json!(x), json!(d), d.to_string())
        }
        Command::DeltaMonoid => {
            let d = factor::monoid_delta_set(m);
            render(Value::Null, json!(d), d.to_string())
        }
        Command::Omega { x } => {
            let w = if m.generators() == mcnugget::GENERATORS.map(|g| g as u64) {
                mcnugget::omega(x)?
            } else {
                omega::omega(m, x)?
            };
            render(json!(x), json!(w), w.to_string())
        }
        Command::Bullets { x } => {
            let bs = omega::bullets(m, x)?;
            let text = bs
                .iter()
                .map(|b| format!("{} {}", b.coords, b.length()))
                .collect::<Vec<_>>()
                .join("\n");
            let result: Vec<Value> = bs
                .iter()
                .map(|b| json!({ "coords": b.coords, "length": b.length() }))
                .collect();
            render(json!(x), json!(result), text)
        }
        Command::Unique { limit } => {
            let xs = factor::unique_factorization_elements(m, limit);
            render(json!(limit), json!(xs), joined(&xs))
        }
        Command::Witness { x } => {
            let (y, z) = omega::prime_witness(m, x)?;
            render(json!(x), json!([y, z]), format!("{y} {z}"))
        }
        Command::Table { which } => table(which),
        Command::PlotData { .. } | Command::Verify => unreachable!(),
    };
    Ok(r)
}

/// Plain-text reproduction of the expansion table (`1`) or length table (`2`).
pub fn table_text(which: u8) -> String {
    let mut s = String::new();
    if which == 1 {
        for (x, z) in mcnugget::table_expansions() {
            s.push_str(&format!("{x}: {z}\n"));
        }
    } else {
        for (x, row) in mcnugget::table_length_sets() {
            let set = row
                .lengths
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(",");
            s.push_str(&format!("{x}: {{{set}}} {} {}\n", row.min, row.max));
        }
    }
    s
}

fn table(which: u8) -> Rendered {
    let result = if which == 1 {
        json!(mcnugget::table_expansions()
            .into_iter()
            .map(|(x, z)| json!({ "x": x, "factorizations": z.factorizations }))
            .collect::<Vec<_>>())
    } else {
        json!(mcnugget::table_length_sets()
            .into_iter()
            .map(|(x, r)| json!({ "x": x, "lengths": r.lengths, "min": r.min, "max": r.max }))
            .collect::<Vec<_>>())
    };
    let text = table_text(which);
    render(json!(which), result, text.trim_end())
}

fn plot_data(
    m: &NumericalMonoid,
    kind: PlotKind,
    max: i64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let mut csv = String::new();
    match kind {
        PlotKind::Elasticity => {
            csv.push_str("n,rho_num,rho_den\n");
            let table = LengthTable::new(m, max);
            for n in table.members() {
                let rho = table.elasticity(n).unwrap();
                csv.push_str(&format!("{n},{},{}\n", rho.numer(), rho.denom()));
            }
        }
        PlotKind::Omega => {
            csv.push_str("n,omega\n");
            for n in (1..=max).filter(|&n| m.contains(n)) {
                match omega::omega(m, n) {
                    Ok(w) => csv.push_str(&format!("{n},{w}\n")),
                    Err(e) => {
                        let _ = writeln!(err, "error: {e}");
                        return 1;
                    }
                }
            }
        }
    }
    if out.write_all(csv.as_bytes()).is_err() {
        return 1;
    }
    0
}

fn run_verify(m: &NumericalMonoid, as_json: bool, gens: &[i64], out: &mut dyn Write) -> i32 {
    let checks = verify::run_suite(m);
    let all_passed = checks.iter().all(|c| c.passed);
    let _ = if as_json {
        let result: Vec<Value> = checks
            .iter()
            .map(|c| json!({ "check": c.name, "passed": c.passed, "detail": c.detail }))
            .collect();
        let record = OutputRecord {
            command: "verify".into(),
            gens: gens.to_vec(),
            input: Value::Null,
            result: json!(result),
        };
        writeln!(out, "{}", serde_json::to_string(&record).unwrap())
    } else {
        checks.iter().try_for_each(|c| {
            if c.passed {
                writeln!(out, "PASS {}", c.name)
            } else {
                writeln!(out, "FAIL {}: {}", c.name, c.detail)
            }
        })
    };
    if all_passed {
        0
    } else {
        1
    }
}
