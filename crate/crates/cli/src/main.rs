mod args;
mod report;
mod reproduce;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use rayon::prelude::*;
use schur_core::cayley::{export_cayley_colour_graph, export_colour_graph, Method, OracleConfig};
use schur_core::construct::{certify, check_spec, table_primes, table_row};
use schur_core::{closure, Error, Group, GroupElement, SchurPartition};
use serde::Serialize;

use args::{Cli, Command, Format, GroupArgs, Mode};
use report::{CertificateText, ClosureReport, TableReport, TableRow};

const ERRATUM_67: &str =
    "the reference table lists the p = 67 connecting set as {ab^22, ab^38, a}; \
                          its columns (22, 33, 0) give {a*b^22, a*b^33, a}, used here";

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) | Failure::Io(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    if cli.oracle_limit < 4 {
        return Err(Failure::Usage(format!(
            "--oracle-limit must be at least 4, got {}",
            cli.oracle_limit
        )));
    }
    let config = OracleConfig {
        vertex_limit: cli.oracle_limit,
    };
    let is_export = matches!(cli.command, Command::Export { .. });
    let format = match (cli.output, is_export) {
        (None, true) | (Some(Format::Dot), true) => Format::Dot,
        (None, false) => Format::Text,
        (Some(Format::Dot), false) => {
            return Err(Failure::Usage(
                "--output dot is only valid for export".into(),
            ))
        }
        (Some(f), true) => {
            return Err(Failure::Usage(
                format!("export writes DOT, not {f:?}").to_lowercase(),
            ))
        }
        (Some(f), false) => f,
    };

    match &cli.command {
        Command::Closure { group, set, .. } => {
            let group = make_group(group)?;
            let c = parse_set(group, set)?;
            let p = closure(group, &c)?;
            let report = ClosureReport {
                group: group.to_string(),
                order: group.order(),
                set: names(&c),
                generated_order: group.generated_order(&c),
                basic_sets: p.to_names(),
                rank: p.rank(),
                trivial: p.is_trivial(),
            };
            emit(format, &report, &report)?;
            Ok(true)
        }
        Command::Certify { n, rst, rule, mode } => {
            let &[r, s, t] = rst.as_slice() else {
                return Err(Failure::Usage(format!(
                    "--rst needs exactly three values, got {}",
                    rst.len()
                )));
            };
            let spec = check_spec(*n, r, s, t, (*rule).into())
                .map_err(|v| Failure::Domain(format!("hypothesis violated: {v}")))?;
            let mode = mode.unwrap_or(if *n <= 32 { Mode::Both } else { Mode::Closure });
            let cert = certify(&spec, mode.into(), &config).map_err(|e| match e {
                Error::ResourceLimit { .. } => {
                    Failure::Domain(format!("{e}; use --mode closure or raise --oracle-limit"))
                }
                other => other.into(),
            })?;
            emit(format, &cert, &CertificateText(&cert))?;
            Ok(cert.certificate.is_grr)
        }
        Command::Table {
            max,
            certify: run_certify,
        } => table(*max, *run_certify, &config, format),
        Command::Export {
            group,
            set,
            by_closure,
            partition,
            allow_nongenerating,
            out,
        } => {
            let group = make_group(group)?;
            let dot = match (set, partition) {
                (_, Some(text)) => {
                    let p = SchurPartition::parse(group, text)
                        .map_err(|e| Failure::Usage(e.to_string()))?;
                    p.validate()
                        .map_err(|v| Failure::Domain(format!("not a Schur ring: {v}")))?;
                    export_colour_graph(&p)
                }
                (Some(list), None) => {
                    let s = parse_set(group, list)?;
                    if *by_closure {
                        export_colour_graph(&closure(group, &s)?)
                    } else {
                        let reached = group.generated_order(&s);
                        if !allow_nongenerating && reached != group.order() {
                            return Err(Failure::Domain(format!(
                                "connecting set generates a proper subgroup of order {reached} in {group}; \
                                 pass --allow-nongenerating to draw it anyway"
                            )));
                        }
                        export_cayley_colour_graph(group, &s)?
                    }
                }
                (None, None) => unreachable!("clap requires --set or --partition"),
            };
            match out {
                Some(path) => std::fs::write(path, dot)
                    .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display())))?,
                None => write_stdout(&dot)?,
            }
            Ok(true)
        }
        Command::Reproduce { only, max_n } => {
            if let Some(bad) = only
                .iter()
                .find(|g| !reproduce::GROUPS.contains(&g.as_str()))
            {
                return Err(Failure::Usage(format!(
                    "unknown item group {bad:?}; expected one of {}",
                    reproduce::GROUPS.join(", ")
                )));
            }
            let report = reproduce::run(only, *max_n, &config);
            emit(format, &report, &report)?;
            Ok(report.failed.is_empty())
        }
    }
}

fn table(max: u32, run_certify: bool, config: &OracleConfig, format: Format) -> Outcome {
    if max < 7 {
        return Err(Failure::Usage(format!(
            "--max must be at least 7, got {max}"
        )));
    }
    let specs = table_primes(max)
        .into_iter()
        .map(table_row)
        .collect::<Result<Vec<_>, _>>()?;
    let rows: Vec<TableRow> = specs
        .par_iter()
        .map(|spec| {
            // the oracle also runs whenever the graph fits under its limit
            let (certified, aut_order) = if run_certify {
                let method = if spec.group().order() <= config.vertex_limit {
                    Method::Both
                } else {
                    Method::Closure
                };
                let c = certify(spec, method, config)?.certificate;
                (Some(c.is_grr), c.aut_order)
            } else {
                (None, None)
            };
            Ok(TableRow {
                p: spec.n,
                r: spec.r,
                s: spec.s,
                t: spec.t,
                connecting_set: names(&spec.connecting_set()),
                certified,
                aut_order,
            })
        })
        .collect::<Result<_, Error>>()?;
    let mut notes = Vec::new();
    if max >= 67 {
        notes.push(ERRATUM_67.to_string());
    }
    let failed: Vec<u32> = rows
        .iter()
        .filter(|r| r.certified == Some(false))
        .map(|r| r.p)
        .collect();
    let report = TableReport { rows, notes };
    emit(format, &report, &report)?;
    if !failed.is_empty() {
        eprintln!("not certified: p = {failed:?}");
    }
    Ok(failed.is_empty())
}

fn make_group(args: &GroupArgs) -> Result<Group, Failure> {
    let group = match (args.dihedral, args.cyclic) {
        (Some(n), None) => Group::dihedral(n),
        (None, Some(n)) => Group::cyclic(n),
        _ => unreachable!("clap enforces exactly one group flag"),
    };
    group.map_err(|e| Failure::Usage(e.to_string()))
}

fn parse_set(group: Group, list: &str) -> Result<Vec<GroupElement>, Failure> {
    let set = group
        .parse_elements(list)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    if set.is_empty() {
        return Err(Failure::Usage("--set is empty".into()));
    }
    if set.iter().any(GroupElement::is_identity) {
        return Err(Failure::Domain(
            "1 cannot belong to a connecting set".into(),
        ));
    }
    Ok(set)
}

fn names(set: &[GroupElement]) -> Vec<String> {
    set.iter().map(ToString::to_string).collect()
}

fn emit<T: Serialize, D: std::fmt::Display>(
    format: Format,
    value: &T,
    text: &D,
) -> Result<(), Failure> {
    let body = match format {
        Format::Json => serde_json::to_string_pretty(value).expect("serialisable"),
        _ => text.to_string(),
    };
    write_stdout(&body)?;
    write_stdout("\n")
}

fn write_stdout(s: &str) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    out.write_all(s.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Failure::Io(format!("cannot write to stdout: {e}")))
}
