//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or input
//! error, 3 extension enumeration truncated by `--cap`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::classify::{classify, parse_k3_list};
use crate::extension::enumerate_extensions_capped;
use crate::group::AbelianGroup;
use crate::lr::lr_product;
use crate::notation::parse_group;
use crate::partition::Partition;
use crate::verify::{render_table, run_checks, CHECK_NAMES};

pub const SCHEMA_VERSION: u64 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TRUNCATED: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "abelian-cremona",
    version,
    about = "Finite abelian groups in low-rank Cremona groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate every classification predicate on a group.
    Classify {
        #[arg(value_parser = parse_group_arg)]
        group: AbelianGroup,
        /// File of K3 groups, one per line, `#` comments.
        #[arg(long)]
        k3_list: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// List the middle groups G of 0 -> H -> G -> K -> 0.
    Extensions {
        #[arg(value_parser = parse_group_arg)]
        sub: AbelianGroup,
        #[arg(value_parser = parse_group_arg)]
        quot: AbelianGroup,
        #[arg(long)]
        json: bool,
        /// Stop after this many middles (exit code 3 if more exist).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Littlewood-Richardson product of two partitions.
    Lr {
        #[arg(value_parser = parse_partition_arg)]
        mu: Partition,
        #[arg(value_parser = parse_partition_arg)]
        nu: Partition,
        #[arg(long)]
        json: bool,
    },
    /// Run verification checks (all of them by default).
    Verify {
        #[arg(long = "check", value_parser = clap::builder::PossibleValuesParser::new(CHECK_NAMES))]
        checks: Vec<String>,
        /// Bound applied to every selected check instead of its default.
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long)]
        json: bool,
        /// Also write the JSON report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_group_arg(s: &str) -> Result<AbelianGroup, String> {
    parse_group(s).map_err(|e| e.to_string())
}

fn parse_partition_arg(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

fn with_schema(mut v: Value) -> Value {
    if let Value::Object(map) = &mut v {
        map.insert("schema".into(), json!(SCHEMA_VERSION));
    }
    v
}

fn to_json<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("serializable report")
}

/// Runs the CLI on `args` (including the program name), writing to the given
/// streams, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, String> {
    let io = |e: std::io::Error| e.to_string();
    match command {
        Command::Classify {
            group,
            k3_list,
            json,
        } => {
            let list = match k3_list {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                    Some(parse_k3_list(&text).map_err(|e| format!("{}: {e}", path.display()))?)
                }
                None => None,
            };
            let verdict = classify(&group, list.as_deref()).map_err(|e| e.to_string())?;
            if json {
                let v = with_schema(to_json(&verdict));
                writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).map_err(io)?;
            } else {
                writeln!(out, "{verdict}").map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Extensions {
            sub,
            quot,
            json,
            cap,
        } => {
            let res = enumerate_extensions_capped(&sub, &quot, cap);
            if json {
                let v = with_schema(to_json(&res));
                writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).map_err(io)?;
            } else {
                writeln!(out, "0 -> {sub} -> G -> {quot} -> 0").map_err(io)?;
                for m in &res.middles {
                    let tag = if m.split { "  (split)" } else { "" };
                    writeln!(out, "  {}{tag}", m.group).map_err(io)?;
                }
                if res.truncated {
                    writeln!(out, "  ... truncated at {} middles", res.middles.len())
                        .map_err(io)?;
                }
            }
            Ok(if res.truncated {
                EXIT_TRUNCATED
            } else {
                EXIT_OK
            })
        }
        Command::Lr { mu, nu, json } => {
            let product = lr_product(&mu, &nu);
            if json {
                let terms: Vec<Value> = product
                    .iter()
                    .map(|(p, c)| json!({"partition": p.to_string(), "coefficient": c}))
                    .collect();
                let v = with_schema(
                    json!({"mu": mu.to_string(), "nu": nu.to_string(), "terms": terms}),
                );
                writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")).map_err(io)?;
            } else {
                writeln!(out, "{mu}·{nu} = {product}").map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            checks,
            bound,
            json,
            out: path,
        } => {
            let reports = run_checks(&checks, bound).map_err(|e| e.to_string())?;
            let all_pass = reports.iter().all(|r| r.passed());
            let v = with_schema(json!({"reports": to_json(&reports), "passed": all_pass}));
            let text = serde_json::to_string_pretty(&v).expect("json");
            if let Some(path) = path {
                std::fs::write(&path, format!("{text}\n"))
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            if json {
                writeln!(out, "{text}").map_err(io)?;
            } else {
                write!(out, "{}", render_table(&reports)).map_err(io)?;
            }
            Ok(if all_pass { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
    }
}
