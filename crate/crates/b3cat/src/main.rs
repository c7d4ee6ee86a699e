//! Command-line front end: build Coxeter complexes and Artin-complex balls,
//! run the six-condition CAT(1) checker, print the short-loop tables, and run
//! the full verification suite.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use b3complex::artin::{build_ball, BallComplex};
use b3complex::checker::{
    check_cat1_criteria, enumerate_short_triples, reduce_triples, CheckOptions, CheckReport,
    ConditionStatus,
};
use b3complex::complex::TypedComplex;
use b3complex::coxeter::{build_coxeter_complex, CoxeterDiagram, CoxeterGroup, DEFAULT_GROUP_CAP};
use b3complex::garside::ArtinSystem;
use b3complex::sphere::b3_constants;
use b3complex::verify::{render_text, run_verification, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "b3cat",
    version,
    about = "B3 simplicial complexes, Coxeter/Artin machinery and the CAT(1) criterion checker"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the 23-row and 15-row short-loop type tables.
    Tables {
        #[arg(long)]
        json: bool,
    },
    /// Build the Coxeter complex of a built-in diagram (A1..A5, B2, B3).
    Coxeter {
        diagram: String,
        /// Output path for the complex file; rank-3 diagrams also get a
        /// `.coords` sidecar with unit-sphere coordinates.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the six-condition checker on a complex file.
    /// Exit codes: 0 pass, 1 fail, 2 inconclusive, 3 invalid input.
    Check {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Match pattern cycles as induced (chord-free) cycles.
        #[arg(long)]
        induced: bool,
        /// Ball mode: truncation-sensitive defects become inconclusive.
        #[arg(long)]
        ball: bool,
        /// Cap on embedded-cycle enumeration per pattern.
        #[arg(long, default_value_t = 10_000)]
        limit: usize,
    },
    /// Build a chamber ball of the Artin complex of B3 or A5.
    Ball {
        /// Group: B3 (typed complex output) or A5 (poset-only output).
        group: String,
        radius: usize,
        /// Output path; B3 balls get the complex file plus a `.words`
        /// sidecar mapping vertex classes to representative words.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the full verification suite and print an aggregate report.
    VerifyPaper {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        radius_b3: usize,
        #[arg(long, default_value_t = 2)]
        radius_a5: usize,
        /// Word-length bound for bounded coset searches.
        #[arg(long, default_value_t = 4)]
        search_radius: usize,
        /// Word-length bound for the rewriting-closure sweep.
        #[arg(long, default_value_t = 6)]
        oracle_len: usize,
        /// Word-length bound for fraction parts in the injectivity sample.
        #[arg(long, default_value_t = 3)]
        injectivity_len: usize,
        #[arg(long, default_value_t = 100)]
        join_sets: usize,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Tables { json } => cmd_tables(json),
        Command::Coxeter { diagram, output } => cmd_coxeter(&diagram, output.as_deref()),
        Command::Check {
            file,
            json,
            induced,
            ball,
            limit,
        } => cmd_check(&file, json, induced, ball, limit),
        Command::Ball {
            group,
            radius,
            output,
        } => cmd_ball(&group, radius, output.as_deref()),
        Command::VerifyPaper {
            seed,
            radius_b3,
            radius_a5,
            search_radius,
            oracle_len,
            injectivity_len,
            join_sets,
            json,
        } => {
            let config = VerifyConfig {
                seed,
                radius_b3,
                radius_a5,
                search_radius,
                oracle_len,
                injectivity_len,
                join_sets,
            };
            cmd_verify_paper(&config, json)
        }
    }
}

fn meta(input: Option<&str>) -> serde_json::Value {
    json!({
        "tool": "b3cat",
        "version": env!("CARGO_PKG_VERSION"),
        "input": input,
    })
}

fn cmd_tables(as_json: bool) -> Result<ExitCode> {
    let shape = b3_constants();
    let table1 = enumerate_short_triples();
    let table2 = reduce_triples(&table1);
    if as_json {
        let rows = |list: &[b3complex::checker::Triple]| -> Vec<serde_json::Value> {
            list.iter()
                .map(|t| {
                    json!({
                        "n_alpha": t.n_alpha,
                        "n_beta": t.n_beta,
                        "n_delta": t.n_delta,
                        "weighted_sum": t.weighted_sum(&shape),
                    })
                })
                .collect()
        };
        let doc = json!({
            "schema_version": 1,
            "tables": { "short": rows(&table1), "reduced": rows(&table2) },
            "meta": meta(None),
        });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!("short triples (n_alpha, n_beta, n_delta) with loop length < 2 pi:");
        for t in &table1 {
            println!(
                "  ({}, {}, {})  half-length {:.6}",
                t.n_alpha,
                t.n_beta,
                t.n_delta,
                t.weighted_sum(&shape)
            );
        }
        println!("{} triples", table1.len());
        println!("reduced triples (no adjacent 2s1/2s3 segments, no two-segment loops):");
        for t in &table2 {
            println!(
                "  ({}, {}, {})  half-length {:.6}",
                t.n_alpha,
                t.n_beta,
                t.n_delta,
                t.weighted_sum(&shape)
            );
        }
        println!("{} triples", table2.len());
    }
    Ok(ExitCode::SUCCESS)
}

fn group_cap() -> usize {
    std::env::var("B3CAT_GROUP_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_GROUP_CAP)
}

fn cmd_coxeter(name: &str, output: Option<&Path>) -> Result<ExitCode> {
    let diagram = CoxeterDiagram::builtin(name).map_err(|e| anyhow!("{e}"))?;
    let group = CoxeterGroup::enumerate_with_cap(&diagram, group_cap()).map_err(|e| anyhow!("{e}"))?;
    match diagram.rank() {
        3 => {
            let (complex, _, geometry) =
                build_coxeter_complex(&group).map_err(|e| anyhow!("{e}"))?;
            println!(
                "C({name}): {} vertices, {} edges, {} chambers",
                complex.vertex_count(),
                complex.edge_count(),
                complex.triangle_count()
            );
            if let Some(path) = output {
                fs::write(path, complex.to_file_string())
                    .with_context(|| format!("writing {}", path.display()))?;
                let mut coords = String::new();
                for (id, p) in complex.vertex_ids().iter().zip(&geometry.coords) {
                    coords.push_str(&format!("{id} {:.17} {:.17} {:.17}\n", p.x, p.y, p.z));
                }
                let sidecar = sidecar_path(path, "coords");
                fs::write(&sidecar, coords)
                    .with_context(|| format!("writing {}", sidecar.display()))?;
                println!("wrote {} and {}", path.display(), sidecar.display());
            }
        }
        2 => {
            // The Coxeter complex of a dihedral group is a polygon.
            let order = group.order();
            println!("C({name}): a {order}-gon with vertices alternating two types");
            if let Some(path) = output {
                let mut text = format!("# C({name}): {order}-gon; edges listed as comments\n");
                for k in 0..order {
                    text.push_str(&format!("v v{k} s{}\n", k % 2 + 1));
                }
                for k in 0..order {
                    text.push_str(&format!("# e v{} v{}\n", k, (k + 1) % order));
                }
                fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
                println!("wrote {}", path.display());
            }
        }
        _ => bail!("diagram {name} has rank {}, only ranks 2 and 3 have complex output", diagram.rank()),
    }
    Ok(ExitCode::SUCCESS)
}

fn sidecar_path(path: &Path, ext: &str) -> PathBuf {
    let mut os = path.as_os_str().to_owned();
    os.push(".");
    os.push(ext);
    PathBuf::from(os)
}

fn report_json(report: &CheckReport, input: &str) -> serde_json::Value {
    let mut condition = serde_json::Map::new();
    for (i, c) in report.conditions.iter().enumerate() {
        condition.insert(
            (i + 1).to_string(),
            json!({
                "status": c.status,
                "witnesses": {
                    "vertices": c.witness_vertices,
                    "cycles": c.witness_cycles,
                },
                "notes": c.notes,
            }),
        );
    }
    json!({
        "schema_version": 1,
        "valid": report.valid,
        "violations": report.violations,
        "condition": condition,
        "verdict": report.verdict,
        "options": report.options,
        "meta": meta(Some(input)),
    })
}

fn cmd_check(
    file: &Path,
    as_json: bool,
    induced: bool,
    ball: bool,
    limit: usize,
) -> Result<ExitCode> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let complex = match TypedComplex::parse(&text) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("invalid input: {e}");
            return Ok(ExitCode::from(3));
        }
    };
    let opts = CheckOptions {
        induced,
        cycle_limit: limit,
        ball_mode: ball,
    };
    let report = check_cat1_criteria(&complex, &opts);
    if as_json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report_json(&report, &file.display().to_string()))?
        );
    } else {
        render_check_text(&report);
    }
    let code = if !report.valid {
        3
    } else {
        match report.verdict {
            ConditionStatus::Pass => 0,
            ConditionStatus::Fail => 1,
            ConditionStatus::Inconclusive => 2,
        }
    };
    Ok(ExitCode::from(code))
}

fn render_check_text(report: &CheckReport) {
    if !report.valid {
        println!("invalid complex:");
        for v in &report.violations {
            println!("  {v:?}");
        }
        return;
    }
    for (i, c) in report.conditions.iter().enumerate() {
        let status = match c.status {
            ConditionStatus::Pass => "pass",
            ConditionStatus::Fail => "FAIL",
            ConditionStatus::Inconclusive => "inconclusive",
        };
        println!("condition ({}): {status}", i + 1);
        for note in &c.notes {
            println!("    {note}");
        }
    }
    match report.verdict {
        ConditionStatus::Pass => println!("verdict: pass — the B3 metric on this complex is CAT(1)"),
        ConditionStatus::Fail => {
            println!("verdict: fail — the complex is not claimed CAT(1) by this theorem")
        }
        ConditionStatus::Inconclusive => {
            println!("verdict: inconclusive — boundary effects prevent a verdict")
        }
    }
}

fn cmd_ball(group: &str, radius: usize, output: Option<&Path>) -> Result<ExitCode> {
    match group {
        "B3" => {
            let sys = ArtinSystem::b3();
            let ball = build_ball(&sys, radius);
            let complex = ball.to_typed_complex();
            println!(
                "D(B3) ball radius {radius}: {} chambers, {} vertex classes, {} triangles",
                ball.chambers.len(),
                ball.classes.len(),
                complex.triangle_count()
            );
            if let Some(path) = output {
                fs::write(path, complex.to_file_string())
                    .with_context(|| format!("writing {}", path.display()))?;
                let sidecar = sidecar_path(path, "words");
                fs::write(&sidecar, words_sidecar(&sys, &ball))
                    .with_context(|| format!("writing {}", sidecar.display()))?;
                println!("wrote {} and {}", path.display(), sidecar.display());
            }
        }
        "A5" => {
            let sys = ArtinSystem::a5();
            let ball = build_ball(&sys, radius);
            println!(
                "D(A5) ball radius {radius}: {} chambers, {} vertex classes (poset-only export)",
                ball.chambers.len(),
                ball.classes.len()
            );
            if let Some(path) = output {
                fs::write(path, words_sidecar(&sys, &ball))
                    .with_context(|| format!("writing {}", path.display()))?;
                println!("wrote {}", path.display());
            }
        }
        other => bail!("unknown group {other:?}: expected B3 or A5"),
    }
    Ok(ExitCode::SUCCESS)
}

fn words_sidecar(sys: &ArtinSystem, ball: &BallComplex) -> String {
    let mut out = String::new();
    for (c, class) in ball.classes.iter().enumerate() {
        out.push_str(&format!(
            "{} t{} {}\n",
            ball.class_name(c),
            class.type_index,
            sys.display_word(&class.rep)
        ));
    }
    out
}

fn cmd_verify_paper(config: &VerifyConfig, as_json: bool) -> Result<ExitCode> {
    let mut report = run_verification(config);
    // Reports must be byte-identical across reruns, so timings are dropped.
    for section in &mut report.sections {
        section.elapsed_ms = 0.0;
    }
    if as_json {
        let doc = json!({
            "schema_version": 1,
            "report": report,
            "meta": meta(None),
        });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        print!("{}", render_text(&report));
    }
    Ok(if report.all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
