//! Command-line front end.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::lie::{build_space, validate, SpaceName};
use crate::obstruction::killing_check;
use crate::report::{
    branch_entries, branch_entry, casimir_rows, delta_entry, obstruction_report, reproduce_all, ALL_SPACES,
};
use crate::rep::IrrepLabel;
use crate::stability::coindex;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "gray-stability", version, about = "Exact stability and rigidity computations for homogeneous nearly Kähler 6-manifolds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write the output to a file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Casimir constants of all irreps up to a bound.
    Casimir {
        #[arg(long)]
        space: SpaceName,
        #[arg(long, default_value = "12")]
        max: String,
    },
    /// Restriction of irreps to the isotropy group.
    Branch {
        #[arg(long)]
        space: SpaceName,
        /// A single label such as `1,1,0`; all labels up to `--max` otherwise.
        #[arg(long)]
        gamma: Option<String>,
        #[arg(long, default_value = "12")]
        max: String,
    },
    /// Dimension of the hom space into primitive (1,1)-forms.
    Homdim {
        #[arg(long)]
        space: SpaceName,
        #[arg(long)]
        gamma: String,
    },
    /// The prototypical codifferential on the hom space.
    Delta {
        #[arg(long)]
        space: SpaceName,
        #[arg(long)]
        gamma: String,
    },
    /// Coindex of the Einstein metric and its destabilizing directions.
    Coindex {
        #[arg(long)]
        space: SpaceName,
    },
    /// The second-order obstruction on the flag manifold.
    Obstruction,
    /// Killing equation for a canonical variation `t₁,t₂,t₃`.
    Killing {
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// Structural checks of the catalog spaces.
    Validate {
        #[arg(long)]
        space: Option<SpaceName>,
    },
    /// Every table, report and verdict in one run.
    ReproduceAll,
}

/// Rendered output and exit status.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub status: i32,
}

fn usage(e: &Error) -> bool {
    matches!(
        e,
        Error::UnknownSpace(_)
            | Error::InvalidLabel { .. }
            | Error::UnsupportedLabel(_)
            | Error::Parse(_)
            | Error::NotTraceFree(_)
            | Error::SubgroupMismatch(..)
    )
}

fn parse_rational(s: &str) -> crate::Result<BigRational> {
    s.trim().parse::<BigRational>().map_err(|e| Error::Parse(format!("{s}: {e}")))
}

fn render(format: Format, value: &Value, table: String, status: i32) -> Outcome {
    let text = match format {
        Format::Json => serde_json::to_string_pretty(value).expect("serializable") + "\n",
        Format::Table => table,
    };
    Outcome { text, status }
}

fn label(space: SpaceName, gamma: &str) -> crate::Result<IrrepLabel> {
    IrrepLabel::parse(build_space(space).group, gamma)
}

fn branch_table(rows: &[Value]) -> String {
    let mut out = format!("{:<10} {:>8} {:>6} {:>8}  branching\n", "gamma", "Cas", "dim", "hom_dim");
    for r in rows {
        let parts: Vec<String> = r["branching"]
            .as_array()
            .into_iter()
            .flatten()
            .map(|p| {
                let m = p["mult"].as_u64().unwrap_or(0);
                let l = p["h_label"].as_str().unwrap_or("");
                if m == 1 { l.to_string() } else { format!("{m}{l}") }
            })
            .collect();
        let _ = writeln!(
            out,
            "{:<10} {:>8} {:>6} {:>8}  {}",
            r["gamma"].as_str().unwrap_or(""),
            plain(&r["casimir"]),
            r["dim"],
            r["hom_dim"],
            parts.join(" + ")
        );
    }
    out
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Runs one parsed command.
pub fn run(cli: &Cli) -> crate::Result<Outcome> {
    let f = cli.format;
    match &cli.command {
        Command::Casimir { space, max } => {
            let rows = casimir_rows(&build_space(*space), &parse_rational(max)?)?;
            let mut table = format!("{:<10} {:>6} {:>8}\n", "label", "dim", "Cas");
            for r in &rows {
                let _ = writeln!(table, "{:<10} {:>6} {:>8}", r.label, r.dim, r.casimir);
            }
            Ok(render(f, &json!(rows), table, 0))
        }
        Command::Branch { space, gamma, max } => {
            let s = build_space(*space);
            let rows = match gamma {
                Some(g) => vec![branch_entry(&s, &label(*space, g)?)?],
                None => branch_entries(&s, &parse_rational(max)?)?,
            };
            let conserved = rows.iter().all(|r| r["dim"] == r["restricted_dim"]);
            let table = branch_table(&rows);
            Ok(render(f, &json!(rows), table, if conserved { 0 } else { 1 }))
        }
        Command::Homdim { space, gamma } => {
            let e = branch_entry(&build_space(*space), &label(*space, gamma)?)?;
            let value = json!({"space": space.as_str(), "gamma": e["gamma"], "hom_dim": e["hom_dim"]});
            let table = format!("dim Hom_H(V{}, Λ^{{1,1}}_0 m) = {}\n", plain(&e["gamma"]), e["hom_dim"]);
            Ok(render(f, &value, table, 0))
        }
        Command::Delta { space, gamma } => {
            let e = delta_entry(&build_space(*space), &label(*space, gamma)?)?;
            let mut table = format!(
                "{} gamma={}: hom_dim = {}, coclosed_dim = {}\n",
                space,
                plain(&e["gamma"]),
                e["hom_dim"],
                e["coclosed_dim"]
            );
            for (n, m) in e["delta_matrix"].as_array().into_iter().flatten().enumerate() {
                let _ = writeln!(table, "delta(F{}) in the basis m+ ++ m-:", n + 1);
                for row in m.as_array().into_iter().flatten() {
                    let cells: Vec<String> = row.as_array().into_iter().flatten().map(plain).collect();
                    let _ = writeln!(table, "  [{}]", cells.join(", "));
                }
            }
            Ok(render(f, &e, table, 0))
        }
        Command::Coindex { space } => {
            let r = coindex(&build_space(*space))?;
            let mut table = format!("{}: coindex {}, IED dimension {}\n", r.space, r.coindex, r.ied_dim);
            for d in &r.destabilizing {
                let _ = writeln!(table, "  lambda = {} x{} ({})", d.lambda, d.mult, d.source);
            }
            let text = match f {
                Format::Json => serde_json::to_string(&r).expect("serializable") + "\n",
                Format::Table => table,
            };
            Ok(Outcome { text, status: 0 })
        }
        Command::Obstruction => {
            let r = obstruction_report()?;
            let status = if r.verdict.rigid { 0 } else { 1 };
            Ok(render(f, &r.to_json(), r.to_table(), status))
        }
        Command::Killing { t } => {
            let parts = t.split(',').map(parse_rational).collect::<crate::Result<Vec<_>>>()?;
            let triple: [BigRational; 3] = parts
                .try_into()
                .map_err(|_| Error::Parse(format!("{t}: expected three comma-separated rationals")))?;
            let shown: Vec<String> = triple.iter().map(ToString::to_string).collect();
            let ok = killing_check(triple)?;
            let value = json!({"t": shown, "killing": ok});
            let table = format!("t = ({}): killing = {ok}\n", shown.join(", "));
            Ok(render(f, &value, table, if ok { 0 } else { 1 }))
        }
        Command::Validate { space } => {
            let names: Vec<SpaceName> = space.map(|s| vec![s]).unwrap_or_else(|| ALL_SPACES.to_vec());
            let reports: Vec<_> = names.iter().map(|n| validate(&build_space(*n))).collect();
            let mut table = String::new();
            for r in &reports {
                for c in &r.checks {
                    let _ = writeln!(table, "{} {}: {}", r.space, c.name, if c.pass { "ok" } else { "FAILED" });
                }
            }
            let status = if reports.iter().all(|r| r.all_pass()) { 0 } else { 1 };
            Ok(render(f, &json!(reports), table, status))
        }
        Command::ReproduceAll => {
            let r = reproduce_all()?;
            let mut table = String::new();
            for c in &r.invariants {
                let _ = writeln!(table, "{}: {}", c.name, if c.pass { "ok" } else { "FAILED" });
            }
            if let Some(reports) = r.json["coindex"].as_array() {
                for rep in reports {
                    let _ = writeln!(table, "{}: coindex {}, IED {}", plain(&rep["space"]), rep["coindex"], rep["ied_dim"]);
                }
            }
            let o = &r.json["obstruction"];
            let _ = writeln!(
                table,
                "pairing = {}, rigid = {}",
                plain(&o["pairing"]["total"]),
                o["verdict"]["rigid"]
            );
            Ok(render(f, &r.json, table, if r.all_pass() { 0 } else { 1 }))
        }
    }
}

/// Parses arguments, runs, writes output and returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(n) = std::env::var("GRAY_STABILITY_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.text).map_err(|e| e.to_string()),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            match written {
                Ok(()) => out.status,
                Err(e) => {
                    eprintln!("error: {e}");
                    2
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if usage(&e) {
                2
            } else {
                1
            }
        }
    }
}
