//! Command-line surface: validation, structure reports, cohomology, the
//! classifier and the identity verifiers, over algebra files or catalog
//! entries.
//!
//! Input paths are JSON files; `catalog:NAME` loads a built-in entry. JSON
//! output is deterministic: fields are ordered alphabetically and rationals
//! are reduced "p/q" strings, so identical invocations emit identical bytes.
//! Exit codes: 0 success, 1 invalid input, 2 broken internal invariant.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::catalog;
use crate::cohomology::{cohomology, CocycleFile, CohomologyResult};
use crate::error::{Error, Result};
use crate::exactlin::rat_to_string;
use crate::liealg::{LieAlgebra, Subspace};
use crate::rep::Representation;
use crate::structure::{
    codim1_ideal_containing_derived, derived_series, is_abelian, is_nilpotent, is_semisimple,
    is_solvable, killing, levi, lower_central_series, radical,
};
use crate::theorems::{
    check_nilpotent_h2, classify, first_whitehead_probe, verify_dixmier, verify_hs_degeneration,
    verify_kunneth, whitehead_battery, IdentityReport, VerdictCase,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "liecoh",
    version,
    about = "Exact rational Chevalley-Eilenberg cohomology and 2-triviality classification"
)]
pub struct Cli {
    /// Output format: human text or deterministic JSON.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Jacobi identity of an algebra file.
    Validate { algebra: String },
    /// Structure report: series, radical, Levi decomposition, Killing form.
    Invariants { algebra: String },
    /// Cohomology in one degree; the module defaults to the trivial line.
    Cohomology {
        /// Degree n of H^n.
        #[arg(short = 'n', long = "degree")]
        degree: usize,
        algebra: String,
        module: Option<String>,
    },
    /// Classify as 2-trivial or emit a re-verified witness certificate.
    Classify { algebra: String },
    /// Independent verifiers for the identities behind the classification.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Built-in example algebras.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Codimension-1 ideal identity over trivial and adjoint coefficients.
    Dixmier {
        algebra: String,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Degree-2 degeneration of the radical filtration at the Levi split.
    Hs { algebra: String },
    /// Direct-sum Kunneth identity; modules default to trivial lines.
    Kunneth {
        left: String,
        right: String,
        #[arg(long)]
        module_left: Option<String>,
        #[arg(long)]
        module_right: Option<String>,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Whitehead battery on a semisimple input, H^1 probe otherwise.
    Whitehead {
        algebra: String,
        #[arg(long, default_value_t = 16)]
        max_module_dim: usize,
    },
    /// Trivial-coefficient H^2 report for a nilpotent algebra.
    NilpotentH2 { algebra: String },
}

#[derive(Subcommand, Debug)]
pub enum CatalogCommand {
    /// Names of the built-in algebras.
    List,
    /// Emit one entry as an algebra JSON file.
    Show { name: String },
}

pub fn main_entry() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.exit_code() == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn load_algebra(path: &str) -> Result<LieAlgebra> {
    if let Some(name) = path.strip_prefix("catalog:") {
        return Ok(catalog::get(name)?.algebra);
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {path}: {e}")))?;
    LieAlgebra::from_json(&text)
}

/// Load and validate; every command except `validate` requires a real Lie
/// algebra as input.
fn load_valid_algebra(path: &str) -> Result<LieAlgebra> {
    let l = load_algebra(path)?;
    if let Err(v) = l.validate() {
        return Err(Error::Invalid(format!("{}: not a Lie algebra: {v}", l.name())));
    }
    Ok(l)
}

fn load_module(l: &LieAlgebra, path: &str) -> Result<Representation> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {path}: {e}")))?;
    let rep = Representation::from_json(l, &text)?;
    if let Err(v) = rep.validate_rep() {
        return Err(Error::Invalid(format!("module file {path}: {v}")));
    }
    Ok(rep)
}

/// Write a line, swallowing broken-pipe errors so truncated consumers do not
/// turn a successful run into a panic.
fn print_line(s: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{s}");
}

fn emit(format: Format, value: &Value, text: String) {
    match format {
        Format::Json => {
            print_line(&serde_json::to_string_pretty(value).expect("report serializes"));
        }
        Format::Text => print_line(&text),
    }
}

fn basis_strings(s: &Subspace) -> Vec<Vec<String>> {
    s.basis().iter().map(|row| row.iter().map(rat_to_string).collect()).collect()
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Validate { algebra } => cmd_validate(cli.format, algebra),
        Command::Invariants { algebra } => cmd_invariants(cli.format, algebra),
        Command::Cohomology { degree, algebra, module } => {
            cmd_cohomology(cli.format, *degree, algebra, module.as_deref())
        }
        Command::Classify { algebra } => cmd_classify(cli.format, algebra),
        Command::Verify(v) => cmd_verify(cli.format, v),
        Command::Catalog(c) => cmd_catalog(cli.format, c),
    }
}

fn cmd_validate(format: Format, path: &str) -> Result<ExitCode> {
    let l = load_algebra(path)?;
    match l.validate() {
        Ok(()) => {
            let value = json!({ "dim": l.dim(), "name": l.name(), "valid": true });
            emit(format, &value, format!("{}: valid Lie algebra of dimension {}", l.name(), l.dim()));
            Ok(ExitCode::SUCCESS)
        }
        Err(v) => {
            let value = json!({
                "dim": l.dim(),
                "name": l.name(),
                "valid": false,
                "violation": {
                    "coordinate": v.coordinate,
                    "triple": [v.triple.0, v.triple.1, v.triple.2],
                    "value": rat_to_string(&v.value),
                },
            });
            emit(format, &value, format!("{}: {v}", l.name()));
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_invariants(format: Format, path: &str) -> Result<ExitCode> {
    let l = load_valid_algebra(path)?;
    let derived: Vec<usize> = derived_series(&l).iter().map(Subspace::dim).collect();
    let lower: Vec<usize> = lower_central_series(&l).iter().map(Subspace::dim).collect();
    let rad = radical(&l);
    let levi = levi(&l)?;
    let kappa = killing(&l);
    let value = json!({
        "derived_series": derived,
        "dim": l.dim(),
        "is_abelian": is_abelian(&l),
        "is_nilpotent": is_nilpotent(&l),
        "is_semisimple": is_semisimple(&l),
        "is_solvable": is_solvable(&l),
        "killing_det": rat_to_string(&kappa.determinant()),
        "levi_semisimple": basis_strings(&levi.s),
        "name": l.name(),
        "radical": basis_strings(&rad),
    });
    let text = format!(
        "{}: dim {}\n  derived series dims: {:?}\n  lower central series dims: {:?}\n  radical dim: {} | Levi dim: {}\n  Killing det: {}\n  abelian: {} | nilpotent: {} | solvable: {} | semisimple: {}",
        l.name(),
        l.dim(),
        derived,
        lower,
        rad.dim(),
        levi.s.dim(),
        rat_to_string(&kappa.determinant()),
        is_abelian(&l),
        is_nilpotent(&l),
        is_solvable(&l),
        is_semisimple(&l),
    );
    emit(format, &value, text);
    Ok(ExitCode::SUCCESS)
}

fn cohomology_value(l: &LieAlgebra, v: &Representation, r: &CohomologyResult) -> Value {
    let reps: Vec<CocycleFile> =
        r.representatives.iter().map(|w| CocycleFile::from_cochain(l, v, w)).collect();
    json!({
        "degree": r.degree,
        "dim_b": r.dim_b,
        "dim_h": r.dim_h,
        "dim_z": r.dim_z,
        "representatives": reps,
    })
}

fn cmd_cohomology(
    format: Format,
    degree: usize,
    algebra: &str,
    module: Option<&str>,
) -> Result<ExitCode> {
    let l = load_valid_algebra(algebra)?;
    let v = match module {
        Some(path) => load_module(&l, path)?,
        None => Representation::trivial(&l, 1),
    };
    let r = cohomology(&l, &v, degree)?;
    let text = format!(
        "{}: dim H^{}(L, V) = {} (cocycles {}, coboundaries {}, module dim {})",
        l.name(),
        degree,
        r.dim_h,
        r.dim_z,
        r.dim_b,
        v.dim(),
    );
    emit(format, &cohomology_value(&l, &v, &r), text);
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(format: Format, path: &str) -> Result<ExitCode> {
    let l = load_algebra(path)?;
    let verdict = classify(&l)?;
    let value = serde_json::to_value(verdict.to_file()).expect("verdict serializes");
    let text = match verdict.case {
        VerdictCase::Witness => {
            let w = verdict.witness.as_ref().expect("witness case carries a certificate");
            format!(
                "{}: witness — module dim {} ({}), dim H^2(L,V) = {}",
                l.name(),
                w.module.dim(),
                w.provenance,
                w.h2_dim,
            )
        }
        VerdictCase::SemisimplePlusLine => {
            let d = verdict.decomposition.as_ref().expect("split case carries a decomposition");
            format!(
                "{}: 2-trivial — semisimple (dim {}) plus central line",
                l.name(),
                d.semisimple.dim(),
            )
        }
        other => format!("{}: 2-trivial — {}", l.name(), other.as_str()),
    };
    emit(format, &value, text);
    Ok(ExitCode::SUCCESS)
}

fn report_lines(runs: &[(String, IdentityReport)]) -> String {
    let mut lines = Vec::with_capacity(runs.len());
    for (tag, r) in runs {
        lines.push(format!(
            "  [{}] {}: lhs {} vs rhs {} ({})",
            if r.holds { "ok" } else { "FAIL" },
            tag,
            r.lhs,
            r.rhs,
            r.identity,
        ));
    }
    lines.join("\n")
}

fn identity_runs_value(runs: &[(String, IdentityReport)]) -> Value {
    let all_hold = runs.iter().all(|(_, r)| r.holds);
    let entries: Vec<Value> = runs
        .iter()
        .map(|(tag, r)| {
            json!({ "report": serde_json::to_value(r).expect("report serializes"), "run": tag })
        })
        .collect();
    json!({ "all_hold": all_hold, "runs": entries })
}

fn cmd_verify(format: Format, command: &VerifyCommand) -> Result<ExitCode> {
    match command {
        VerifyCommand::Dixmier { algebra, max_degree } => {
            let l = load_valid_algebra(algebra)?;
            let (ideal, x) = codim1_ideal_containing_derived(&l).ok_or_else(|| {
                Error::Invalid("algebra is perfect: no codimension-1 ideal exists".into())
            })?;
            let mut runs = Vec::new();
            for (tag, v) in
                [("trivial", Representation::trivial(&l, 1)), ("adjoint", Representation::adjoint(&l))]
            {
                for n in 0..=*max_degree {
                    let r = verify_dixmier(&l, &ideal, &x, &v, n)?;
                    runs.push((format!("{tag} n={n}"), r));
                }
            }
            let text = format!("{}: codimension-1 identity\n{}", l.name(), report_lines(&runs));
            emit(format, &identity_runs_value(&runs), text);
            Ok(ExitCode::SUCCESS)
        }
        VerifyCommand::Hs { algebra } => {
            let l = load_valid_algebra(algebra)?;
            let rad = radical(&l);
            let levi = levi(&l)?;
            let mut runs = Vec::new();
            for (tag, v) in
                [("trivial", Representation::trivial(&l, 1)), ("adjoint", Representation::adjoint(&l))]
            {
                let r = verify_hs_degeneration(&l, &levi.s, &rad, &v)?;
                runs.push((tag.to_string(), r));
            }
            let text = format!("{}: degree-2 degeneration at the Levi split\n{}", l.name(), report_lines(&runs));
            emit(format, &identity_runs_value(&runs), text);
            Ok(ExitCode::SUCCESS)
        }
        VerifyCommand::Kunneth { left, right, module_left, module_right, max_degree } => {
            let a = load_valid_algebra(left)?;
            let b = load_valid_algebra(right)?;
            let va = match module_left {
                Some(p) => load_module(&a, p)?,
                None => Representation::trivial(&a, 1),
            };
            let vb = match module_right {
                Some(p) => load_module(&b, p)?,
                None => Representation::trivial(&b, 1),
            };
            let mut runs = Vec::new();
            for n in 0..=*max_degree {
                let r = verify_kunneth(&a, &b, &va, &vb, n)?;
                runs.push((format!("n={n}"), r));
            }
            let text = format!(
                "{} (+) {}: Kunneth identity\n{}",
                a.name(),
                b.name(),
                report_lines(&runs),
            );
            emit(format, &identity_runs_value(&runs), text);
            Ok(ExitCode::SUCCESS)
        }
        VerifyCommand::Whitehead { algebra, max_module_dim } => {
            let l = load_valid_algebra(algebra)?;
            if *max_module_dim == 0 {
                return Err(Error::Invalid("max_module_dim must be at least 1".into()));
            }
            if l.dim() == 0 || is_semisimple(&l) {
                let r = whitehead_battery(&l, *max_module_dim)?;
                let value = json!({
                    "battery": serde_json::to_value(&r).expect("report serializes"),
                    "mode": "battery",
                });
                let rows: Vec<String> = r
                    .rows
                    .iter()
                    .map(|row| {
                        format!(
                            "  [{}] {} (dim {}): H^1 = {}, H^2 = {}",
                            if row.h1 == 0 && row.h2 == 0 { "ok" } else { "FAIL" },
                            row.label,
                            row.dim,
                            row.h1,
                            row.h2,
                        )
                    })
                    .collect();
                let text = format!(
                    "{}: Whitehead battery ({} modules, cap {})\n{}",
                    l.name(),
                    r.rows.len(),
                    max_module_dim,
                    rows.join("\n"),
                );
                emit(format, &value, text);
                Ok(ExitCode::SUCCESS)
            } else {
                let outcome = first_whitehead_probe(&l, *max_module_dim)?;
                let file = outcome.to_file();
                let value = json!({
                    "mode": "probe",
                    "probe": serde_json::to_value(&file).expect("report serializes"),
                });
                let text = if file.found {
                    format!(
                        "{}: probe found module {} with dim H^1 = {}",
                        l.name(),
                        file.label.as_deref().unwrap_or("?"),
                        file.h1_dim.unwrap_or(0),
                    )
                } else {
                    format!(
                        "{}: probe exhausted {} modules without a nonzero H^1 (cap {})",
                        l.name(),
                        file.tried.as_ref().map_or(0, Vec::len),
                        max_module_dim,
                    )
                };
                emit(format, &value, text);
                Ok(ExitCode::SUCCESS)
            }
        }
        VerifyCommand::NilpotentH2 { algebra } => {
            let l = load_valid_algebra(algebra)?;
            let r = check_nilpotent_h2(&l)?;
            let value = serde_json::to_value(&r).expect("report serializes");
            let bounds: Vec<String> = r
                .bound_at_least_two
                .iter()
                .enumerate()
                .map(|(k, b)| format!("H^{} >= 2: {}", k + 1, b))
                .collect();
            let text = format!(
                "{}: dim H^2(L,K) = {} (all degrees {:?}); {}",
                l.name(),
                r.h2_dim,
                r.h_dims,
                bounds.join(", "),
            );
            emit(format, &value, text);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_catalog(format: Format, command: &CatalogCommand) -> Result<ExitCode> {
    match command {
        CatalogCommand::List => {
            let names = catalog::list();
            emit(format, &json!({ "names": names }), names.join("\n"));
            Ok(ExitCode::SUCCESS)
        }
        CatalogCommand::Show { name } => {
            let entry = catalog::get(name)?;
            match format {
                Format::Json => print_line(&entry.algebra.to_json()),
                Format::Text => {
                    print_line(&format!(
                        "{}: dim {}, basis [{}]",
                        entry.algebra.name(),
                        entry.algebra.dim(),
                        entry.algebra.basis_names().join(", "),
                    ));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
