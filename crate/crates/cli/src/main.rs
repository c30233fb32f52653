//! Command-line surface for twisted-cube polytopes, standard tableaux,
//! Demazure characters, and Newton-Okounkov bodies.
//!
//! Exit codes: 0 success, 1 verification failure, 2 paper-hypothesis unmet,
//! 3 malformed input.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use twistcube_core::characters::{cube_character, generalized_demazure_character, path_character};
use twistcube_core::cube::TwistedCube;
use twistcube_core::rat::{self, Rat};
use twistcube_core::rootsys::{CartanMatrix, MultList, Word};
use twistcube_core::tableaux::{condition_p_prime, enumerate_tableaux, verify_bijection};

#[derive(Parser)]
#[command(
    name = "twistcube",
    version,
    about = "Twisted-cube polytopes, standard tableaux, and Newton-Okounkov bodies"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Report reducedness of the word and conditions (P) and (P').
    Check {
        #[command(flatten)]
        job: JobArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Emit the polytope P(i, m): inequalities, vertices, lattice points.
    Polytope {
        #[command(flatten)]
        job: JobArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Reverse the coordinate ordering.
        #[arg(long)]
        opposite: bool,
    },
    /// Emit the standard tableaux T(i, m).
    Tableaux {
        #[command(flatten)]
        job: JobArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Emit a character of (i, m) by one of three routes.
    Character {
        #[command(flatten)]
        job: JobArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long, value_enum)]
        method: CharacterMethod,
    },
    /// Run the full cross-validation pipeline.
    Verify {
        #[command(flatten)]
        job: JobArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Dilation factors for the scaling checks.
        #[arg(long, value_delimiter = ',', default_values_t = vec![1, 2, 3])]
        dilations: Vec<i64>,
    },
    /// Emit the Newton-Okounkov body P(i, m)^op.
    Nobody {
        #[command(flatten)]
        job: JobArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Keep the original coordinate ordering instead of the reversed one.
        #[arg(long)]
        no_opposite: bool,
    },
    /// Run check-style reports for a JSON array of jobs.
    Batch {
        /// JSON file holding an array of {"type"|"cartan", "word", "mult"} jobs.
        file: PathBuf,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct JobArgs {
    /// Built-in Cartan type, e.g. A2, B3, G2.
    #[arg(long = "type", conflicts_with = "cartan")]
    builtin: Option<String>,
    /// JSON file {"rank": r, "matrix": [[..]]} with a custom Cartan matrix.
    #[arg(long)]
    cartan: Option<PathBuf>,
    /// Word letters, comma separated, 1-based.
    #[arg(long, value_delimiter = ',', required = true)]
    word: Vec<usize>,
    /// Multiplicities, comma separated, non-negative.
    #[arg(long, value_delimiter = ',', required = true)]
    mult: Vec<i64>,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Json,
    Text,
    Hrep,
}

#[derive(Copy, Clone, ValueEnum)]
enum CharacterMethod {
    Path,
    Demazure,
    Cube,
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let kind = e.kind();
            let _ = e.print();
            return if matches!(kind, ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(InputError(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(3)
        }
    }
}

fn build_cube(job: &JobArgs) -> Result<TwistedCube, InputError> {
    let cartan = match (&job.builtin, &job.cartan) {
        (Some(name), None) => CartanMatrix::builtin(name)?,
        (None, Some(path)) => CartanMatrix::from_json(&fs::read_to_string(path)?)?,
        _ => {
            return Err(InputError(
                "exactly one of --type or --cartan is required".into(),
            ))
        }
    };
    let rank = cartan.rank();
    let word = Word::new(job.word.clone(), rank)?;
    let mults = MultList::new(job.mult.clone())?;
    Ok(TwistedCube::new(cartan, word, mults)?)
}

fn emit(output: &OutputArgs, text: String) -> Result<(), InputError> {
    match &output.out {
        None => {
            println!("{}", text.trim_end_matches('\n'));
            Ok(())
        }
        Some(path) => {
            fs::write(path, text)?;
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8, InputError> {
    match cli.cmd {
        Cmd::Check { job, output } => {
            let cube = build_cube(&job)?;
            let report = check_report(&cube);
            let text = match output.format {
                Format::Json => to_json(&report)?,
                Format::Text | Format::Hrep => format!(
                    "reduced: {}\ncondition_P: {}\ncondition_P_prime: {}\n",
                    report.reduced, report.condition_p, report.condition_p_prime
                ),
            };
            emit(&output, text)?;
            Ok(0)
        }
        Cmd::Polytope {
            job,
            output,
            opposite,
        } => {
            let cube = build_cube(&job)?;
            let text = render_polytope(&cube, opposite, output.format)?;
            emit(&output, text)?;
            Ok(0)
        }
        Cmd::Tableaux { job, output } => {
            let cube = build_cube(&job)?;
            let ts = enumerate_tableaux(&cube);
            let text = match output.format {
                Format::Json => to_json(&ts.to_json())?,
                Format::Text | Format::Hrep => {
                    let mut s = format!("{} tableaux\n", ts.len());
                    for t in ts.to_json() {
                        s.push_str(&format!(
                            "exponents {:?} weight {:?}\n",
                            t.exponents, t.weight
                        ));
                    }
                    s
                }
            };
            emit(&output, text)?;
            Ok(0)
        }
        Cmd::Character {
            job,
            output,
            method,
        } => {
            let cube = build_cube(&job)?;
            let (name, ch) = match method {
                CharacterMethod::Path => ("path", path_character(&enumerate_tableaux(&cube))),
                CharacterMethod::Demazure => ("demazure", generalized_demazure_character(&cube)),
                CharacterMethod::Cube => ("cube", cube_character(&cube)),
            };
            let text = match output.format {
                Format::Json => to_json(&CharacterReport {
                    method: name.to_string(),
                    dimension: ch.coefficient_sum(),
                    terms: ch.to_json(),
                })?,
                Format::Text | Format::Hrep => {
                    let mut s = format!("method: {}\ndimension: {}\n", name, ch.coefficient_sum());
                    for t in ch.to_json() {
                        s.push_str(&format!("{:?}: {}\n", t.weight, t.coeff));
                    }
                    s
                }
            };
            emit(&output, text)?;
            Ok(0)
        }
        Cmd::Verify {
            job,
            output,
            dilations,
        } => {
            if dilations.iter().any(|&r| r < 1) {
                return Err(InputError("dilation factors must be >= 1".into()));
            }
            let cube = build_cube(&job)?;
            let report = run_verify(&cube, &dilations);
            let all_passed = report.checks.iter().all(|c| c.passed);
            let text = match output.format {
                Format::Json => to_json(&report)?,
                Format::Text | Format::Hrep => {
                    let mut s = String::new();
                    for c in &report.checks {
                        let status = if c.skipped {
                            "SKIP"
                        } else if c.passed {
                            "PASS"
                        } else {
                            "FAIL"
                        };
                        s.push_str(&format!("{} {}: {}\n", status, c.name, c.detail));
                    }
                    s
                }
            };
            emit(&output, text)?;
            Ok(if all_passed { 0 } else { 1 })
        }
        Cmd::Nobody {
            job,
            output,
            no_opposite,
        } => {
            let cube = build_cube(&job)?;
            let opposite = !no_opposite;
            let reduced = cube.cartan().is_reduced(cube.word());
            let cond_p = cube.condition_p();
            let hypotheses_met = reduced && cond_p;
            let warning = if hypotheses_met {
                None
            } else {
                Some(format!(
                    "hypotheses unmet (reduced: {}, condition_P: {}); the emitted polytope is \
                     P(i,m)^op but is not certified as the Newton-Okounkov body",
                    reduced, cond_p
                ))
            };
            let text = match output.format {
                Format::Json => to_json(&NobodyReport {
                    name: "newton_okounkov_body".to_string(),
                    opposite,
                    hypotheses_met,
                    warning: warning.clone(),
                    polytope: cube.polytope_json(opposite),
                })?,
                Format::Text => {
                    let mut s = String::new();
                    if let Some(w) = &warning {
                        s.push_str(&format!("warning: {}\n", w));
                    }
                    s.push_str(&render_polytope(&cube, opposite, Format::Text)?);
                    s
                }
                Format::Hrep => {
                    let mut s = String::new();
                    if let Some(w) = &warning {
                        s.push_str(&format!("# warning: {}\n", w));
                    }
                    s.push_str(&cube.hrep(opposite));
                    s
                }
            };
            emit(&output, text)?;
            Ok(if hypotheses_met { 0 } else { 2 })
        }
        Cmd::Batch { file, output } => {
            let jobs: Vec<BatchJob> = serde_json::from_str(&fs::read_to_string(&file)?)?;
            let mut reports = Vec::with_capacity(jobs.len());
            for job in &jobs {
                let cartan = match (&job.builtin, &job.cartan) {
                    (Some(name), None) => CartanMatrix::builtin(name)?,
                    (None, Some(value)) => CartanMatrix::from_json(&value.to_string())?,
                    _ => {
                        return Err(InputError(
                            "each batch job needs exactly one of \"type\" or \"cartan\"".into(),
                        ))
                    }
                };
                let rank = cartan.rank();
                let word = Word::new(job.word.clone(), rank)?;
                let mults = MultList::new(job.mult.clone())?;
                let cube = TwistedCube::new(cartan, word, mults)?;
                reports.push(BatchReport {
                    word: job.word.clone(),
                    mult: job.mult.clone(),
                    report: check_report(&cube),
                    lattice_count: cube.lattice_points().len(),
                    tableau_count: enumerate_tableaux(&cube).len(),
                });
            }
            let text = match output.format {
                Format::Json => to_json(&reports)?,
                Format::Text | Format::Hrep => {
                    let mut s = String::new();
                    for r in &reports {
                        s.push_str(&format!(
                            "word {:?} mult {:?}: reduced {} P {} P' {} lattice {} tableaux {}\n",
                            r.word,
                            r.mult,
                            r.report.reduced,
                            r.report.condition_p,
                            r.report.condition_p_prime,
                            r.lattice_count,
                            r.tableau_count
                        ));
                    }
                    s
                }
            };
            emit(&output, text)?;
            Ok(0)
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String, InputError> {
    Ok(serde_json::to_string_pretty(v)?)
}

fn render_polytope(
    cube: &TwistedCube,
    opposite: bool,
    format: Format,
) -> Result<String, InputError> {
    Ok(match format {
        Format::Json => to_json(&cube.polytope_json(opposite))?,
        Format::Hrep => cube.hrep(opposite),
        Format::Text => {
            let pj = cube.polytope_json(opposite);
            let mut s = format!(
                "n: {}\ncondition_P: {}\nis_lattice: {}\n",
                pj.n, pj.condition_p, pj.is_lattice
            );
            s.push_str(&format!("vertices ({}):\n", pj.vertices.len()));
            for v in &pj.vertices {
                s.push_str(&format!("  ({})\n", v.join(", ")));
            }
            s.push_str(&format!("lattice points ({}):\n", pj.lattice_points.len()));
            for p in &pj.lattice_points {
                s.push_str(&format!("  {:?}\n", p));
            }
            s
        }
    })
}

#[derive(Serialize)]
struct CheckReport {
    reduced: bool,
    #[serde(rename = "condition_P")]
    condition_p: bool,
    #[serde(rename = "condition_P_prime")]
    condition_p_prime: bool,
}

fn check_report(cube: &TwistedCube) -> CheckReport {
    CheckReport {
        reduced: cube.cartan().is_reduced(cube.word()),
        condition_p: cube.condition_p(),
        condition_p_prime: condition_p_prime(cube),
    }
}

#[derive(Serialize)]
struct CharacterReport {
    method: String,
    dimension: i64,
    terms: Vec<twistcube_core::characters::CharacterTermJson>,
}

#[derive(Serialize)]
struct NobodyReport {
    name: String,
    opposite: bool,
    hypotheses_met: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    warning: Option<String>,
    polytope: twistcube_core::cube::PolytopeJson,
}

#[derive(Deserialize)]
struct BatchJob {
    #[serde(rename = "type")]
    builtin: Option<String>,
    cartan: Option<serde_json::Value>,
    word: Vec<usize>,
    mult: Vec<i64>,
}

#[derive(Serialize)]
struct BatchReport {
    word: Vec<usize>,
    mult: Vec<i64>,
    #[serde(flatten)]
    report: CheckReport,
    lattice_count: usize,
    tableau_count: usize,
}

#[derive(Serialize)]
struct VerifyCheck {
    name: String,
    passed: bool,
    skipped: bool,
    detail: String,
}

#[derive(Serialize)]
struct VerifyReport {
    reduced: bool,
    #[serde(rename = "condition_P")]
    condition_p: bool,
    checks: Vec<VerifyCheck>,
}

/// The cross-validation pipeline: bound-formula agreement, the lattice-point /
/// tableau bijection, three-way character equality, lattice-polytope and
/// dilation checks. Checks whose hypotheses fail are reported as skipped and
/// count as passing.
fn run_verify(cube: &TwistedCube, dilations: &[i64]) -> VerifyReport {
    let reduced = cube.cartan().is_reduced(cube.word());
    let cond_p = cube.condition_p();
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, skipped: bool, detail: String| {
        checks.push(VerifyCheck {
            name: name.to_string(),
            passed,
            skipped,
            detail,
        });
    };

    // (a) The two A_k formulas agree on suffix vertices and rational samples.
    let mut formula_ok = true;
    let mut tested = 0usize;
    for k in 1..=cube.n() {
        let len = cube.n() - k;
        let mut suffixes: Vec<Vec<Rat>> = if k < cube.n() {
            cube.suffix(k + 1).vertices()
        } else {
            vec![vec![]]
        };
        // Deterministic off-vertex rational samples.
        suffixes.push(vec![Rat::new(1, 2); len]);
        suffixes.push(vec![Rat::new(-3, 2); len]);
        suffixes.push((0..len).map(|t| Rat::new(t as i64 + 1, 3)).collect());
        for s in &suffixes {
            tested += 1;
            if cube.bound_a(k, s) != cube.bound_a_closed(k, s) {
                formula_ok = false;
            }
        }
    }
    push(
        "bound_formula_agreement",
        formula_ok,
        false,
        format!("{} suffix evaluations", tested),
    );

    // (b) Bijection between lattice points and tableaux (needs condition (P)).
    if cond_p {
        let r = verify_bijection(cube);
        push(
            "lattice_tableau_bijection",
            r.bijective,
            false,
            format!(
                "lattice {} vs tableaux {}{}",
                r.lattice_count,
                r.tableau_count,
                r.counterexample
                    .map(|c| format!("; {}", c))
                    .unwrap_or_default()
            ),
        );
    } else {
        push(
            "lattice_tableau_bijection",
            true,
            true,
            "skipped: condition (P) fails".to_string(),
        );
    }

    // (c) Character identities.
    let demazure = generalized_demazure_character(cube);
    let from_paths = path_character(&enumerate_tableaux(cube));
    push(
        "path_character_equals_demazure",
        from_paths == demazure,
        false,
        format!("dimension {}", demazure.coefficient_sum()),
    );
    if cond_p && reduced {
        let from_cube = cube_character(cube);
        push(
            "cube_character_equals_demazure",
            from_cube == demazure,
            false,
            format!("dimension {}", demazure.coefficient_sum()),
        );
    } else {
        push(
            "cube_character_equals_demazure",
            true,
            true,
            "skipped: needs a reduced word and condition (P)".to_string(),
        );
    }

    // (d) Lattice polytope (needs condition (P)).
    if cond_p {
        push(
            "lattice_polytope",
            cube.is_lattice_polytope(),
            false,
            "all vertices integral".to_string(),
        );
    } else {
        push(
            "lattice_polytope",
            true,
            true,
            "skipped: condition (P) fails".to_string(),
        );
    }

    // (e) Dilation: vertex scaling always; counting identities under (P).
    for &r in dilations {
        let scaled = cube.scaled(r);
        let expect: Vec<Vec<Rat>> = {
            let mut vs: Vec<Vec<Rat>> = cube
                .vertices()
                .into_iter()
                .map(|v| v.iter().map(|c| c * rat::rat(r)).collect())
                .collect();
            vs.sort();
            vs
        };
        let got = scaled.vertices();
        push(
            &format!("dilation_vertices_r{}", r),
            got == expect,
            false,
            format!("{} vertices", got.len()),
        );
        if cond_p {
            let lattice = scaled.lattice_points().len();
            let tabs = enumerate_tableaux(&scaled).len();
            let dim = generalized_demazure_character(&scaled).coefficient_sum();
            push(
                &format!("dilation_counts_r{}", r),
                lattice as i64 == dim && tabs as i64 == dim,
                false,
                format!("lattice {} tableaux {} oracle {}", lattice, tabs, dim),
            );
        } else {
            push(
                &format!("dilation_counts_r{}", r),
                true,
                true,
                "skipped: condition (P) fails".to_string(),
            );
        }
    }

    VerifyReport {
        reduced,
        condition_p: cond_p,
        checks,
    }
}
