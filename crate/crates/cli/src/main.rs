//! Command-line front end for the synchronizing-automata workbench.
//!
//! Exit codes: 0 success (for `verify`, additionally all rows match),
//! 1 parse/domain errors, 2 automaton not synchronizing, 3 resource cap
//! exceeded.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use synchro_core::coloring::enumerate_colorings;
use synchro_core::explore::reset_threshold_census;
use synchro_core::families::{
    build_cerny, build_dm, build_wielandt, dm_tuples, verify_one, wielandt_tuples, DmVariant,
    FamilyParams, FormulaReport,
};
use synchro_core::frobenius::frobenius;
use synchro_core::json::{dfa_from_json, dfa_to_json, digraph_from_json};
use synchro_core::primitive::exponent;
use synchro_core::quotient::{factor, sigma_congruence};
use synchro_core::solver::{check_reset_word, reset_threshold_with_cap};
use synchro_core::{Error, Word};

#[derive(Parser)]
#[command(name = "synchro", version, about = "Workbench for synchronizing automata")]
struct Cli {
    /// State cap for the exact subset-lattice solver.
    #[arg(long, global = true, default_value_t = 24)]
    cap: usize,

    /// Seed for randomized corpora (reserved; current subcommands are
    /// deterministic).
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Wielandt,
    DmAa,
    DmAb,
    Cerny,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family automaton and emit its JSON.
    Build {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        /// State count for wielandt (defaults to q) and cerny.
        #[arg(long)]
        n: Option<usize>,
        /// Branch offset for the dm families.
        #[arg(long)]
        k: Option<usize>,
        /// Path stretch for the dm families.
        #[arg(long, default_value_t = 0)]
        lambda: usize,
    },
    /// Exact reset threshold, shortest witness and reset targets.
    Rt {
        #[arg(long)]
        input: PathBuf,
    },
    /// Apply a word to the full state set and report the reset state.
    CheckWord {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        word: String,
    },
    /// Sweep a family, comparing closed-form thresholds with the solver.
    Verify {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        max_q: usize,
        #[arg(long, default_value_t = 0)]
        max_lambda: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Factor an automaton by its row congruence.
    Quotient {
        #[arg(long)]
        input: PathBuf,
    },
    /// Exponent of a primitive digraph.
    Exponent {
        #[arg(long)]
        input: PathBuf,
    },
    /// All colorings of a digraph, up to isomorphism.
    Colorings {
        #[arg(long)]
        input: PathBuf,
        /// Keep only synchronizing colorings.
        #[arg(long)]
        sync_only: bool,
    },
    /// Exhaustive census of attainable reset thresholds (n <= 5).
    ExploreRn {
        #[arg(long)]
        n: usize,
    },
    /// Largest integer not representable by two coprime coin values.
    Frobenius {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotSynchronizing => 2,
        Error::ResourceLimit(_) => 3,
        _ => 1,
    }
}

fn run(cli: &Cli) -> Result<(), Error> {
    match &cli.command {
        Command::Build {
            family,
            q,
            p,
            n,
            k,
            lambda,
        } => {
            let dfa = build_family(*family, *q, *p, *n, *k, *lambda)?;
            emit(cli, &dfa_to_json(&dfa))
        }
        Command::Rt { input } => {
            let dfa = dfa_from_json(&read(input)?)?;
            let result = reset_threshold_with_cap(&dfa, cli.cap)?;
            let out = json!({
                "threshold": result.threshold,
                "witness": result.witness.to_string(),
                "targets": result.targets.iter().collect::<Vec<_>>(),
            });
            emit(cli, &out.to_string())
        }
        Command::CheckWord { input, word } => {
            let dfa = dfa_from_json(&read(input)?)?;
            let word = Word::from_str(word)?;
            let target = check_reset_word(&dfa, &word)?;
            let out = json!({
                "word_length": word.len(),
                "synchronizes": target.is_some(),
                "target": target,
            });
            emit(cli, &out.to_string())
        }
        Command::Verify {
            family,
            max_q,
            max_lambda,
            format,
        } => run_verify(cli, *family, *max_q, *max_lambda, *format),
        Command::Quotient { input } => {
            let dfa = dfa_from_json(&read(input)?)?;
            let part = sigma_congruence(&dfa);
            let quotient = factor(&dfa, &part)?;
            let classes: Vec<Vec<usize>> = part
                .classes()
                .iter()
                .map(|c| c.iter().collect())
                .collect();
            let out = json!({
                "automaton": embed(&dfa_to_json(&quotient)),
                "partition": classes,
            });
            emit(cli, &out.to_string())
        }
        Command::Exponent { input } => {
            let g = digraph_from_json(&read(input)?)?;
            let out = json!({ "exponent": exponent(&g)? });
            emit(cli, &out.to_string())
        }
        Command::Colorings { input, sync_only } => {
            let g = digraph_from_json(&read(input)?)?;
            let colorings = enumerate_colorings(&g)?;
            let entries: Vec<Value> = colorings
                .iter()
                .filter(|c| !sync_only || c.synchronizing)
                .map(|c| {
                    json!({
                        "automaton": embed(&dfa_to_json(&c.dfa)),
                        "synchronizing": c.synchronizing,
                    })
                })
                .collect();
            let out = json!({ "count": entries.len(), "colorings": entries });
            emit(cli, &out.to_string())
        }
        Command::ExploreRn { n } => {
            let census = reset_threshold_census(*n)?;
            let counts: serde_json::Map<String, Value> = census
                .counts
                .iter()
                .map(|(t, c)| (t.to_string(), json!(c)))
                .collect();
            let out = json!({
                "n": census.num_states,
                "thresholds": census.thresholds(),
                "max_threshold": census.max_threshold(),
                "counts": counts,
                "synchronizing_tables": census.synchronizing_tables,
                "total_tables": census.total_tables,
            });
            emit(cli, &out.to_string())
        }
        Command::Frobenius { p, q } => {
            let out = json!({ "p": p, "q": q, "frobenius": frobenius(*p, *q)? });
            emit(cli, &out.to_string())
        }
    }
}

fn build_family(
    family: Family,
    q: Option<usize>,
    p: Option<usize>,
    n: Option<usize>,
    k: Option<usize>,
    lambda: usize,
) -> Result<synchro_core::Dfa, Error> {
    let need = |name: &str, v: Option<usize>| {
        v.ok_or_else(|| Error::Domain(format!("--{name} is required for this family")))
    };
    match family {
        Family::Wielandt => {
            let q = need("q", q)?;
            let p = need("p", p)?;
            build_wielandt(n.unwrap_or(q), q, p)
        }
        Family::DmAa | Family::DmAb => {
            let variant = if family == Family::DmAa {
                DmVariant::Aa
            } else {
                DmVariant::Ab
            };
            build_dm(variant, need("q", q)?, need("p", p)?, need("k", k)?, lambda)
        }
        Family::Cerny => build_cerny(need("n", n)?),
    }
}

/// One verification row; the report is an error when the tuple failed
/// outright (for example the solver cap was exceeded).
struct Row {
    params: FamilyParams,
    report: Result<FormulaReport, Error>,
}

fn run_verify(
    cli: &Cli,
    family: Family,
    max_q: usize,
    max_lambda: usize,
    format: Format,
) -> Result<(), Error> {
    if max_q < 3 {
        return Err(Error::Domain("--max-q must be at least 3".into()));
    }
    let rows: Vec<Row> = match family {
        Family::Wielandt => sweep(wielandt_tuples(max_q), cli.cap),
        Family::DmAa => sweep(dm_tuples(DmVariant::Aa, max_q, max_lambda), cli.cap),
        Family::DmAb => sweep(dm_tuples(DmVariant::Ab, max_q, max_lambda), cli.cap),
        Family::Cerny => {
            // The baseline series: the solver against (n-1)^2 directly.
            return run_verify_cerny(cli, max_q, format);
        }
    };
    let all_match = rows
        .iter()
        .all(|r| r.report.as_ref().map(|rep| rep.matches && rep.witness_ok).unwrap_or(false));
    let text = match format {
        Format::Csv => rows_to_csv(&rows),
        Format::Json => rows_to_json(&rows, all_match),
    };
    emit(cli, &text)?;
    if all_match {
        Ok(())
    } else {
        Err(Error::Domain("verification found mismatching rows".into()))
    }
}

fn sweep(tuples: Vec<FamilyParams>, cap: usize) -> Vec<Row> {
    tuples
        .into_iter()
        .map(|params| Row {
            params,
            report: verify_one(&params, cap),
        })
        .collect()
}

const CSV_HEADER: &str = "family,variant,q,p,n,k,lambda,formula,solver,witness_len,targets,match";

fn csv_cells(row: &Row) -> Vec<String> {
    let blank = String::new();
    let (family, variant, q, p, n, k, lambda) = match row.params {
        FamilyParams::Wielandt { n, q, p } => (
            "wielandt".to_string(),
            blank.clone(),
            q.to_string(),
            p.to_string(),
            n.to_string(),
            blank.clone(),
            blank.clone(),
        ),
        FamilyParams::Dm {
            variant,
            q,
            p,
            k,
            lambda,
        } => (
            "dm".to_string(),
            variant.name().to_string(),
            q.to_string(),
            p.to_string(),
            (q + 2 * lambda).to_string(),
            k.to_string(),
            lambda.to_string(),
        ),
    };
    let (formula, solver, witness_len, targets, matched) = match &row.report {
        Ok(rep) => (
            rep.formula_value.to_string(),
            rep.solver_value.to_string(),
            rep.witness_len.to_string(),
            rep.targets
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(";"),
            if rep.matches && rep.witness_ok {
                "true".to_string()
            } else {
                "false".to_string()
            },
        ),
        Err(_) => (
            blank.clone(),
            blank.clone(),
            blank.clone(),
            blank,
            "error".to_string(),
        ),
    };
    vec![
        family,
        variant,
        q,
        p,
        n,
        k,
        lambda,
        formula,
        solver,
        witness_len,
        targets,
        matched,
    ]
}

fn rows_to_csv(rows: &[Row]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&csv_cells(row).join(","));
        out.push('\n');
    }
    out
}

fn rows_to_json(rows: &[Row], all_match: bool) -> String {
    let entries: Vec<Value> = rows
        .iter()
        .map(|row| {
            let cells = csv_cells(row);
            let names = CSV_HEADER.split(',');
            let mut obj = serde_json::Map::new();
            for (name, cell) in names.zip(cells) {
                obj.insert(name.to_string(), json!(cell));
            }
            if let Err(e) = &row.report {
                obj.insert("error".into(), json!(e.to_string()));
            }
            Value::Object(obj)
        })
        .collect();
    json!({ "all_match": all_match, "rows": entries }).to_string()
}

fn run_verify_cerny(cli: &Cli, max_n: usize, format: Format) -> Result<(), Error> {
    let mut lines = Vec::new();
    let mut all_match = true;
    for n in 2..=max_n {
        let dfa = build_cerny(n)?;
        let formula = (n - 1) * (n - 1);
        let (solver, witness_len, targets, matched) = match reset_threshold_with_cap(&dfa, cli.cap)
        {
            Ok(result) => {
                let matched = result.threshold == formula;
                (
                    result.threshold.to_string(),
                    result.witness.len().to_string(),
                    result.targets.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(";"),
                    if matched { "true" } else { "false" }.to_string(),
                )
            }
            Err(_) => (String::new(), String::new(), String::new(), "error".to_string()),
        };
        all_match &= matched == "true";
        lines.push(vec![
            "cerny".to_string(),
            String::new(),
            String::new(),
            String::new(),
            n.to_string(),
            String::new(),
            String::new(),
            formula.to_string(),
            solver,
            witness_len,
            targets,
            matched,
        ]);
    }
    let text = match format {
        Format::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for cells in &lines {
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let entries: Vec<Value> = lines
                .iter()
                .map(|cells| {
                    let mut obj = serde_json::Map::new();
                    for (name, cell) in CSV_HEADER.split(',').zip(cells) {
                        obj.insert(name.to_string(), json!(cell));
                    }
                    Value::Object(obj)
                })
                .collect();
            json!({ "all_match": all_match, "rows": entries }).to_string()
        }
    };
    emit(cli, &text)?;
    if all_match {
        Ok(())
    } else {
        Err(Error::Domain("verification found mismatching rows".into()))
    }
}

fn read(path: &PathBuf) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn embed(jsontext: &str) -> Value {
    serde_json::from_str(jsontext).expect("library emits valid JSON")
}

fn emit(cli: &Cli, text: &str) -> Result<(), Error> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Parse(format!("writing {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
