//! Command-line front end: the verification corpus plus direct access to
//! the constructors and the K₀ calculator.
//!
//! Exit codes: 0 all checks pass, 1 verification failure, 2 input error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use sdot_claims::corpus::{verify_corpus, CorpusOptions, VerificationReport};
use sdot_claims::Verdict;
use sdot_core::fincat::{classify_inclusion, comma, FinCat, FinCatJson, Functor, FunctorJson};
use sdot_core::grothendieck::{k0_group, K0Presentation};
use sdot_core::label::Label;
use sdot_core::simplicial::{cylinder, nerve, sub2, SSet, SSetJson};

#[derive(Parser)]
#[command(name = "sdot")]
#[command(about = "Construct and verify the finite index categories of the S-construction")]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Run the verification corpus and print one line per claim.
    Verify {
        /// Largest level n for the per-level claim families (n >= 2).
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Only run claims whose id starts with this prefix.
        #[arg(long)]
        filter: Option<String>,
        /// Write the machine-readable report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Seed for the randomized composite checks.
        #[arg(long, default_value_t = 0x5d07)]
        seed: u64,
        /// Worker threads for claim execution.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Compute K₀ of a presentation file.
    K0 { file: PathBuf },
    /// Nerve of a category file, truncated at --dim.
    Nerve {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
    },
    /// Two-fold edgewise subdivision of a simplicial-set file.
    Sub2 {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
    },
    /// Cylinder of a simplicial-set file, with its ends and projection.
    Cylinder {
        file: PathBuf,
        #[arg(long)]
        dim: usize,
    },
    /// Comma category of a functor file over an object of its target.
    Comma {
        file: PathBuf,
        /// Object label, e.g. '1', '(0,1)', '3_0', or JSON like '[0,1]'.
        #[arg(long)]
        object: String,
    },
    /// Classify a functor file as sieve/cosieve/fully faithful.
    Classify { file: PathBuf },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {}", message);
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Commands::Verify {
            max_n,
            filter,
            report,
            seed,
            jobs,
        } => {
            let opts = CorpusOptions {
                max_n,
                filter,
                seed,
                jobs,
            };
            let outcome = verify_corpus(&opts).map_err(|e| e.to_string())?;
            print_report(&outcome);
            if let Some(path) = report {
                let json = serde_json::to_string_pretty(&outcome).map_err(|e| e.to_string())?;
                fs::write(&path, json).map_err(|e| e.to_string())?;
            }
            Ok(if outcome.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Commands::K0 { file } => {
            let pres: K0Presentation = read_json(&file)?;
            let group = k0_group(&pres).map_err(|e| e.to_string())?;
            println!(
                "{}",
                serde_json::to_string_pretty(&group.to_json()).map_err(|e| e.to_string())?
            );
            Ok(ExitCode::SUCCESS)
        }
        Commands::Nerve { file, dim } => {
            let cat_json: FinCatJson = read_json(&file)?;
            let cat = FinCat::from_json(&cat_json).map_err(|e| e.to_string())?;
            let sset = nerve(&cat, dim);
            print_json(&sset.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Commands::Sub2 { file, dim } => {
            let sset_json: SSetJson = read_json(&file)?;
            let x = SSet::from_json(&sset_json).map_err(|e| e.to_string())?;
            let s = sub2(&x, dim).map_err(|e| e.to_string())?;
            print_json(&s.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Commands::Cylinder { file, dim } => {
            let sset_json: SSetJson = read_json(&file)?;
            let x = Arc::new(SSet::from_json(&sset_json).map_err(|e| e.to_string())?);
            let c = cylinder(&x, dim).map_err(|e| e.to_string())?;
            let bundle = serde_json::json!({
                "cylinder": c.ix.to_json(),
                "e0": c.e0.to_json(),
                "e1": c.e1.to_json(),
                "proj": c.proj.to_json(),
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&bundle).map_err(|e| e.to_string())?
            );
            Ok(ExitCode::SUCCESS)
        }
        Commands::Comma { file, object } => {
            let functor_json: FunctorJson = read_json(&file)?;
            let u = Functor::from_json(&functor_json).map_err(|e| e.to_string())?;
            let label = parse_label(&object)?;
            let result = comma(&u, &label).map_err(|e| e.to_string())?;
            let bundle = serde_json::json!({
                "comma": result.cat.to_json(),
                "projection": result.proj.to_json(),
                "alpha": (0..result.cat.object_count())
                    .map(|x| {
                        let f = result.alpha.component(x);
                        (
                            result.cat.object_label(x).clone(),
                            u.target().mor_label(f),
                        )
                    })
                    .collect::<Vec<_>>(),
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&bundle).map_err(|e| e.to_string())?
            );
            Ok(ExitCode::SUCCESS)
        }
        Commands::Classify { file } => {
            let functor_json: FunctorJson = read_json(&file)?;
            let u = Functor::from_json(&functor_json).map_err(|e| e.to_string())?;
            let class = classify_inclusion(&u);
            println!(
                "{}",
                serde_json::to_string_pretty(&class).map_err(|e| e.to_string())?
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {}", path.display(), e))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {}", path.display(), e))
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), String> {
    println!(
        "{}",
        serde_json::to_string_pretty(value).map_err(|e| e.to_string())?
    );
    Ok(())
}

fn parse_label(text: &str) -> Result<Label, String> {
    if let Ok(label) = serde_json::from_str::<Label>(text) {
        return Ok(label);
    }
    Label::parse(text)
}

fn print_report(report: &VerificationReport) {
    let width = report.claims.iter().map(|c| c.id.len()).max().unwrap_or(0);
    for claim in &report.claims {
        let status = match claim.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "FAIL",
        };
        println!(
            "{status}  {id:width$}  {loc}",
            status = status,
            id = claim.id,
            width = width,
            loc = claim.location
        );
        if let Some(witness) = &claim.witness {
            println!("      witness: {}", witness);
        }
    }
    println!(
        "{} claims: {} passed, {} failed",
        report.summary.total, report.summary.passed, report.summary.failed
    );
}
