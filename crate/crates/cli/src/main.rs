//! Command-line front end. Exit status partitions outcomes: 0 for success
//! (mathematical negatives included), 1 for a negative under --strict, 2 for
//! usage or format errors, 3 for exceeded budgets.

mod report;

use clap::error::ErrorKind;
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use report::Render;
use semikit::algebra::Semigroup;
use semikit::classify::{classify, survey, EnumerationMode, Verdict};
use semikit::io::{parse_cayley, parse_rees_json};
use semikit::power::{counterexample_chain, reduce_to_finite, solve_power, PowerStructure};
use semikit::relational::{
    compile_words, parse_equations, parse_words, predicatize_group, predicatize_semigroup,
    project_solutions, solve, Budget, EquationSystem, Language, RelationalStructure,
};
use semikit::Error;
use serde::Serialize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "semikit",
    version,
    about = "Finite semigroup toolkit: quasi-identity classification, Rees \
             constructions, equation solving over direct powers, and \
             exhaustive small-order surveys"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Exit with status 1 when the mathematical answer is negative.
    #[arg(long, global = true)]
    strict: bool,

    /// Budget: most variables a solve may carry.
    #[arg(long, global = true, default_value_t = 6)]
    max_vars: usize,

    /// Budget: largest universe a solve accepts.
    #[arg(long, global = true, default_value_t = 8)]
    max_universe: usize,

    /// Budget: largest power exponent.
    #[arg(long, global = true, default_value_t = 4)]
    max_exponent: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a table by the two direct-power quasi-identities.
    Check {
        /// Cayley table file.
        table: PathBuf,
    },
    /// Build a Rees matrix semigroup from a JSON specification.
    Rees {
        /// JSON file with group_table, lambda_size, i_size, sandwich.
        spec: PathBuf,
    },
    /// Report the kernel and the reducible set of a table.
    Kernel {
        /// Cayley table file.
        table: PathBuf,
    },
    /// Print the relational form of a semigroup or group table.
    Predicatize {
        /// Cayley table file.
        table: PathBuf,
        /// Use the group vocabulary (adds the I and E relations).
        #[arg(long)]
        group: bool,
    },
    /// Solve an equation system over a structure or one of its powers.
    #[command(group(ArgGroup::new("equations").required(true).args(["system", "words"])))]
    Solve {
        /// Cayley table of the base structure.
        #[arg(long)]
        structure: PathBuf,
        /// Treat the table as a group and use the group vocabulary.
        #[arg(long)]
        group: bool,
        /// Relational equation file.
        #[arg(long)]
        system: Option<PathBuf>,
        /// Word equation file, compiled before solving.
        #[arg(long)]
        words: Option<PathBuf>,
        /// Solve over the N-th direct power instead of the base.
        #[arg(long = "N")]
        n: Option<usize>,
        /// Project solutions onto these comma-separated variables.
        #[arg(long, value_delimiter = ',')]
        project: Option<Vec<String>>,
        /// Print the count only, no sample points.
        #[arg(long)]
        count: bool,
    },
    /// Reduce a system over the N-th power to a finite equivalent subsystem.
    Reduce {
        /// Cayley table of the base structure.
        #[arg(long)]
        structure: PathBuf,
        /// Relational equation file.
        #[arg(long)]
        system: PathBuf,
        /// Power exponent.
        #[arg(long = "N")]
        n: usize,
        /// Use the group vocabulary for the predicatization.
        #[arg(long)]
        group: bool,
    },
    /// Build the strictly descending counterexample chain of a hard table.
    Chain {
        /// Cayley table file.
        table: PathBuf,
        /// Power exponent, the chain length.
        #[arg(long = "N")]
        n: usize,
    },
    /// Enumerate every table of one order and re-check the structural claims.
    Survey {
        /// Semigroup order to enumerate.
        #[arg(long)]
        order: usize,
        /// Keep one representative per isomorphism class.
        #[arg(long)]
        iso: bool,
        /// Largest order the enumeration will attempt.
        #[arg(long, default_value_t = 4)]
        max_order: usize,
    },
}

struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::BudgetExceeded { .. }) {
            3
        } else {
            2
        };
        Failure {
            message: e.to_string(),
            code,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(negative) => {
            if negative && cli.strict {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit<T: Render + Serialize>(format: Format, payload: &T) {
    match format {
        Format::Text => print!("{}", payload.text()),
        Format::Json => {
            let rendered =
                serde_json::to_string_pretty(payload).expect("reports serialize infallibly");
            println!("{rendered}");
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

/// Positioned core errors keep their message but gain the file name.
fn located(path: &Path, e: Error) -> Failure {
    Failure::usage(format!("{}: {e}", path.display()))
}

fn load_semigroup(path: &Path) -> Result<Semigroup, Failure> {
    parse_cayley(&read_file(path)?).map_err(|e| located(path, e))
}

fn load_system(path: &Path) -> Result<EquationSystem, Failure> {
    parse_equations(&read_file(path)?).map_err(|e| located(path, e))
}

/// The base as a relational structure, group vocabulary on demand.
fn base_structure(
    s: &Semigroup,
    group: bool,
    path: &Path,
) -> Result<RelationalStructure, Failure> {
    if group {
        let view = s.as_group().map_err(|e| located(path, e))?;
        Ok(predicatize_group(&view))
    } else {
        Ok(predicatize_semigroup(s))
    }
}

fn require_positive(n: usize) -> Result<(), Failure> {
    if n == 0 {
        Err(Failure::usage("--N must be at least 1"))
    } else {
        Ok(())
    }
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    let budget = Budget {
        max_variables: cli.max_vars,
        max_universe: cli.max_universe,
        max_exponent: cli.max_exponent,
    };
    match &cli.command {
        Command::Check { table } => {
            let s = load_semigroup(table)?;
            let classification = classify(&s);
            let negative = classification.verdict == Verdict::Hard;
            emit(
                cli.format,
                &report::CheckReport {
                    command: "check",
                    order: s.order(),
                    classification,
                },
            );
            Ok(negative)
        }
        Command::Rees { spec } => {
            let parsed = parse_rees_json(&read_file(spec)?).map_err(|e| located(spec, e))?;
            let labeled = parsed.construct();
            emit(cli.format, &report::rees_report(&parsed, &labeled));
            Ok(false)
        }
        Command::Kernel { table } => {
            let s = load_semigroup(table)?;
            let kernel = s.kernel().members;
            let reducible = s.reducible().members;
            let homogroup = s.homogroup_check();
            emit(
                cli.format,
                &report::KernelReport {
                    command: "kernel",
                    order: s.order(),
                    kernel_equals_reducible: kernel == reducible,
                    kernel,
                    reducible,
                    is_homogroup: homogroup.is_homogroup,
                    kernel_identity: homogroup.kernel_identity,
                },
            );
            Ok(false)
        }
        Command::Predicatize { table, group } => {
            let s = load_semigroup(table)?;
            let structure = base_structure(&s, *group, table)?;
            let relations = structure
                .relations()
                .map(|(name, rel)| report::RelationDump {
                    name: name.to_string(),
                    arity: rel.arity(),
                    tuples: rel.tuples().map(|t| t.to_vec()).collect(),
                })
                .collect();
            emit(
                cli.format,
                &report::PredicatizeReport {
                    command: "predicatize",
                    universe: structure.universe_size(),
                    relations,
                },
            );
            Ok(false)
        }
        Command::Solve {
            structure,
            group,
            system,
            words,
            n,
            project,
            count,
        } => {
            let s = load_semigroup(structure)?;
            let base = base_structure(&s, *group, structure)?;
            let language = if *group {
                Language::Group
            } else {
                Language::Semigroup
            };
            let sys = match (system, words) {
                (Some(path), None) => load_system(path)?,
                (None, Some(path)) => {
                    let equations =
                        parse_words(&read_file(path)?).map_err(|e| located(path, e))?;
                    compile_words(&equations, language)?
                }
                _ => unreachable!("clap enforces exactly one equation source"),
            };
            let payload = match n {
                None => {
                    let sol = solve(&base, &sys, &budget)?;
                    let sol = match project {
                        Some(vars) => project_solutions(&sol, vars)?,
                        None => sol,
                    };
                    report::SolveReport::from_base(&sol, *count)
                }
                Some(k) => {
                    require_positive(*k)?;
                    let power = PowerStructure::new(base, *k);
                    let sol = solve_power(&power, &sys, &budget)?;
                    let sol = match project {
                        Some(vars) => sol.project(vars)?,
                        None => sol,
                    };
                    report::SolveReport::from_power(&sol, *count)
                }
            };
            let negative = payload.count == 0;
            emit(cli.format, &payload);
            Ok(negative)
        }
        Command::Reduce {
            structure,
            system,
            n,
            group,
        } => {
            require_positive(*n)?;
            let s = load_semigroup(structure)?;
            let sys = load_system(system)?;
            let base = base_structure(&s, *group, structure)?;
            let power = PowerStructure::new(base, *n);
            let mut payload = report::ReduceReport {
                command: "reduce",
                exponent: *n,
                original_atoms: sys.len(),
                reduced: None,
                qi_violated: None,
                inconsistent: None,
            };
            let negative = match reduce_to_finite(&s, &power, &sys, &budget) {
                Ok(subsystem) => {
                    payload.reduced =
                        Some(subsystem.atoms().iter().map(|a| a.to_string()).collect());
                    false
                }
                Err(Error::QiViolated { a, b, alpha, beta }) => {
                    payload.qi_violated = Some(report::QiQuad { a, b, alpha, beta });
                    true
                }
                Err(Error::Inconsistent {
                    coordinate,
                    witness,
                }) => {
                    payload.inconsistent = Some(report::Inconsistency {
                        coordinate,
                        witness: witness.atoms().iter().map(|a| a.to_string()).collect(),
                    });
                    true
                }
                Err(e) => return Err(e.into()),
            };
            emit(cli.format, &payload);
            Ok(negative)
        }
        Command::Chain { table, n } => {
            require_positive(*n)?;
            let s = load_semigroup(table)?;
            match counterexample_chain(&s, *n, &budget) {
                Ok(chain) => {
                    emit(cli.format, &report::ChainJson::from_report(&chain));
                    Ok(false)
                }
                Err(Error::QiHolds) => {
                    emit(
                        cli.format,
                        &report::ChainAbsent {
                            command: "chain",
                            qi_holds: true,
                        },
                    );
                    Ok(true)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Survey {
            order,
            iso,
            max_order,
        } => {
            let mode = if *iso {
                EnumerationMode::UpToIsomorphism
            } else {
                EnumerationMode::Labeled
            };
            let outcome = survey(*order, mode, *max_order)?;
            let negative = !outcome.homogroup_identity_violations.is_empty()
                || !outcome.qi_kernel_violations.is_empty()
                || !outcome.homogroup_qi_violations.is_empty();
            emit(
                cli.format,
                &report::SurveyReport {
                    command: "survey",
                    iso: *iso,
                    outcome,
                },
            );
            Ok(negative)
        }
    }
}
