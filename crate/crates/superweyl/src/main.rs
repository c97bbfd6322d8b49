//! Command-line front end for the verification suites. Every subcommand
//! prints a machine-readable JSON report on stdout (or to `--out`) and a
//! human summary on stderr. Exit codes: 0 when every check passes, 1 on
//! a verification failure, 2 on usage errors.

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use superweyl::error::SuperweylError;
use superweyl::realizations::Algebra;
use superweyl::scalar::GaussianRational;
use superweyl::verify::axioms::{
    self, associativity_check, clifford_relations_check, grading_check, super_jacobi_matrix_check,
    super_jacobi_symbol_check, weyl_relation_check,
};
use superweyl::verify::consistency::{
    module_consistency, sp_symbol_consistency, symbol_structure_consistency,
};
use superweyl::verify::export::{export_table_csv, export_table_json};
use superweyl::verify::generate::generate_closure;
use superweyl::verify::suites::{
    ck6_identity_check, cocycle_check, odd_generator_field_check, spo_relations_check,
    virasoro_check,
};
use superweyl::verify::table::{bracket_table, closure_check};

#[derive(Parser)]
#[command(
    name = "superweyl",
    version,
    about = "Exact verification of the matrix and symbol realizations of K(2), K'(4)-hat and CK6"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Mode window: checks run over |n|, |k| <= window.
    #[arg(long, default_value_t = 3)]
    window: i64,
    /// Wave depth of the generation search.
    #[arg(long, default_value_t = 6)]
    depth: u32,
    /// Truncation floor for tau-exponents in the deformed symbol product.
    #[arg(long, default_value_t = -8, allow_hyphen_values = true)]
    tau_floor: i64,
    /// Module weight, as a rational such as 1/2 or 0.
    #[arg(long, default_value = "1/2")]
    mu: String,
    /// Write the JSON report (or exported table) to this file instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Output format for exported tables.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Clone)]
enum Command {
    /// Check the foundational algebraic laws on exhaustive and random inputs.
    VerifyAxioms(Common),
    /// Check the K(2) realization: family closure, the Virasoro law, and
    /// the symbol-picture homomorphism.
    VerifyK2(Common),
    /// Check the K'(4)-hat realization: family closure and central values.
    VerifyK4hat(Common),
    /// Check the CK6 realization: family closure, the odd-generator field
    /// expressions, and the loop-action identities.
    VerifyCk6(Common),
    /// Check every central value against the expected two-cocycle.
    VerifyCocycle(Common),
    /// Check the representation law on the Laurent modules of both
    /// extended algebras at the configured weight.
    VerifyModules(Common),
    /// Check the sl(2) and sp(2|2N) relations and the symbol images of the
    /// odd symplectic generators.
    VerifySpo(Common),
    /// Run the banded generation search from the symplectic seeds.
    Generate {
        #[command(flatten)]
        common: Common,
        /// Number of xi/eta generator pairs.
        #[arg(long = "N", default_value_t = 4)]
        n: u32,
    },
    /// Export the structure-constant table of one algebra.
    ExportTables {
        #[command(flatten)]
        common: Common,
        /// Which algebra's table to export: K2, K4hat or CK6.
        #[arg(long)]
        algebra: String,
    },
}

#[derive(Serialize)]
struct Check {
    name: String,
    passed: bool,
    failures: Vec<String>,
}

#[derive(Serialize)]
struct ReportConfig {
    window: i64,
    depth: u32,
    tau_floor: i64,
    mu: String,
    threads: usize,
}

#[derive(Serialize)]
struct Report {
    command: String,
    config: ReportConfig,
    passed: bool,
    checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    generation: Option<superweyl::verify::generate::GenerationReport>,
}

fn parse_mu(text: &str) -> Result<GaussianRational, String> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num: i64 = num.trim().parse().map_err(|_| format!("invalid mu: {text}"))?;
    let den: i64 = den.trim().parse().map_err(|_| format!("invalid mu: {text}"))?;
    if den == 0 {
        return Err(format!("invalid mu: {text}"));
    }
    Ok(GaussianRational::from_ratio(num, den))
}

fn thread_cap() -> Result<usize, String> {
    match std::env::var("SUPERWEYL_THREADS") {
        Err(_) => Ok(1),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t >= 1 => Ok(t),
            _ => Err(format!("SUPERWEYL_THREADS must be a positive integer, got {v:?}")),
        },
    }
}

fn check(name: &str, failures: Vec<String>) -> Check {
    Check {
        name: name.to_string(),
        passed: failures.is_empty(),
        failures,
    }
}

fn closure_as_check(algebra: Algebra, window: i64) -> Result<Check, SuperweylError> {
    let table = closure_check(algebra, window)?;
    Ok(Check {
        name: format!("{} family closure and structure-constant fits", algebra.label()),
        passed: table.passed,
        failures: table.failures,
    })
}

/// Number of randomized trials per axiom law.
const TRIALS: usize = 1000;

fn run(
    command: &Command,
    common: &Common,
    mu: &GaussianRational,
    threads: usize,
) -> Result<Report, SuperweylError> {
    let w = common.window;
    let mut checks = Vec::new();
    let mut generation = None;
    let name;
    match command {
        Command::VerifyAxioms(_) => {
            name = "verify-axioms";
            let mut rng = axioms::Rng::new(0x5eed_0001);
            checks.push(check("Weyl commutation relation", weyl_relation_check()));
            checks.push(check(
                "Weyl product associativity",
                associativity_check(&mut rng, TRIALS.min(300)),
            ));
            checks.push(check("Clifford relations", clifford_relations_check(4)));
            checks.push(check(
                "graded Jacobi identity, matrix picture",
                super_jacobi_matrix_check(&mut rng, TRIALS)?,
            ));
            checks.push(check(
                "graded Jacobi identity, symbol picture",
                super_jacobi_symbol_check(&mut rng, TRIALS),
            ));
            checks.push(check(
                "bracket degree additivity and degree-0 closure",
                grading_check(&mut rng, TRIALS),
            ));
        }
        Command::VerifyK2(_) => {
            name = "verify-k2";
            checks.push(closure_as_check(Algebra::K2, w.max(2))?);
            checks.push(check("Virasoro law", virasoro_check(Algebra::K2, w)?));
            checks.push(check(
                "symbol bracket matches matrix structure constants",
                symbol_structure_consistency(Algebra::K2, w, common.tau_floor)?,
            ));
        }
        Command::VerifyK4hat(_) => {
            name = "verify-k4hat";
            checks.push(closure_as_check(Algebra::K4hat, w.max(2))?);
            checks.push(check("central values", cocycle_check(w)?));
        }
        Command::VerifyCk6(_) => {
            name = "verify-ck6";
            checks.push(closure_as_check(Algebra::CK6, w.max(2))?);
            checks.push(check(
                "odd symplectic generators as field combinations",
                odd_generator_field_check(Algebra::CK6)?,
            ));
            checks.push(check(
                "loop action generates the remaining odd families",
                ck6_identity_check(w)?,
            ));
        }
        Command::VerifyCocycle(_) => {
            name = "verify-cocycle";
            checks.push(check("central values", cocycle_check(w)?));
        }
        Command::VerifyModules(_) => {
            name = "verify-modules";
            for algebra in [Algebra::K4hat, Algebra::CK6] {
                checks.push(check(
                    &format!("{} module representation law", algebra.label()),
                    module_consistency(algebra, mu, w.min(2))?,
                ));
            }
        }
        Command::VerifySpo(_) => {
            name = "verify-spo";
            checks.push(check(
                "sl(2) relations and orthosymplectic closure",
                spo_relations_check(4)?,
            ));
            for algebra in [Algebra::K4hat, Algebra::CK6] {
                checks.push(check(
                    &format!("{} odd symplectic generators as field combinations", algebra.label()),
                    odd_generator_field_check(algebra)?,
                ));
            }
            for n in 1..=3 {
                checks.push(check(
                    &format!("symbol and matrix structure constants agree for {n} pairs"),
                    sp_symbol_consistency(n)?,
                ));
            }
        }
        Command::Generate { n, .. } => {
            name = "generate";
            let report = generate_closure(*n, common.depth, w)?;
            let mut failures = Vec::new();
            if !report.passed {
                failures = report.missing.clone();
                if failures.is_empty() {
                    failures.push("generation search did not reach its target span".into());
                }
            }
            checks.push(Check {
                name: format!("generation search for {n} pairs"),
                passed: report.passed,
                failures,
            });
            generation = Some(report);
        }
        Command::ExportTables { algebra, .. } => {
            name = "export-tables";
            let algebra = Algebra::parse(algebra)?;
            let table = bracket_table(algebra, w.max(2))?;
            let document = match common.format {
                Format::Json => export_table_json(&table)?,
                Format::Csv => export_table_csv(&table),
            };
            match &common.out {
                Some(path) => std::fs::write(path, document)?,
                None => println!("{document}"),
            }
            checks.push(Check {
                name: format!("{} table export", table.algebra),
                passed: table.passed,
                failures: table.failures,
            });
        }
    }
    Ok(Report {
        command: name.to_string(),
        config: ReportConfig {
            window: w,
            depth: common.depth,
            tau_floor: common.tau_floor,
            mu: common.mu.clone(),
            threads,
        },
        passed: checks.iter().all(|c| c.passed),
        checks,
        generation,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = match &cli.command {
        Command::VerifyAxioms(c)
        | Command::VerifyK2(c)
        | Command::VerifyK4hat(c)
        | Command::VerifyCk6(c)
        | Command::VerifyCocycle(c)
        | Command::VerifyModules(c)
        | Command::VerifySpo(c) => c.clone(),
        Command::Generate { common, .. } | Command::ExportTables { common, .. } => common.clone(),
    };

    let usage_error = |msg: &str| {
        eprintln!("error: {msg}");
        ExitCode::from(2)
    };
    if common.window < 1 {
        return usage_error("--window must be at least 1");
    }
    if common.depth < 1 {
        return usage_error("--depth must be at least 1");
    }
    if common.tau_floor > -2 {
        return usage_error("--tau-floor must be at most -2");
    }
    let mu = match parse_mu(&common.mu) {
        Ok(mu) => mu,
        Err(msg) => return usage_error(&msg),
    };
    let threads = match thread_cap() {
        Ok(t) => t,
        Err(msg) => return usage_error(&msg),
    };
    if let Command::Generate { n, .. } = &cli.command {
        if *n < 1 {
            return usage_error("--N must be at least 1");
        }
    }

    let report = match run(&cli.command, &common, &mu, threads) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };

    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    let exporting = matches!(cli.command, Command::ExportTables { .. });
    if !exporting {
        match &common.out {
            Some(path) => {
                if let Err(e) = std::fs::write(path, &json) {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            }
            None => println!("{json}"),
        }
    }

    let mut summary = std::io::stderr().lock();
    for c in &report.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(summary, "[{status}] {}", c.name);
        for f in c.failures.iter().take(5) {
            let _ = writeln!(summary, "       {f}");
        }
    }
    let _ = writeln!(
        summary,
        "{}: {}",
        report.command,
        if report.passed { "all checks passed" } else { "FAILED" }
    );

    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
