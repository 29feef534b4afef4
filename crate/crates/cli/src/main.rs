use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pseff_cli::report::{self, bound_text};
use pseff_cli::{run_claims, Registry, RunOptions};
use pseff_core::expr::{evaluate_expr, parse_expr};
use pseff_core::rational::format_short;
use pseff_core::schur::{schur_dim, Partition};
use pseff_core::surface::{conic_classes, minus_one_curves, surface_lattice};
use pseff_core::threefold::{vmrt_table, vmrt_table_json};
use pseff_core::{catalog, BaseProfile};

/// Exact intersection numbers on projectivized tangent bundles.
#[derive(Parser)]
#[command(name = "pseff", version)]
struct Cli {
    /// Claim registry to use instead of the built-in one.
    #[arg(long, global = true, value_name = "PATH")]
    registry: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Subcommand)]
enum Command {
    /// Run registry claims and print a report.
    Verify {
        /// Only claims whose id starts with this prefix.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Record per-claim wall time (makes output non-deterministic).
        #[arg(long)]
        timings: bool,
    },
    /// Evaluate an expression in z and the divisor symbols of a profile.
    Eval {
        /// Catalog label or path to a profile JSON document.
        #[arg(long)]
        profile: String,
        #[arg(long)]
        expr: String,
        /// Print the expanded class instead of its degree.
        #[arg(long)]
        class: bool,
    },
    /// Print a catalog profile as JSON, or list the catalog.
    Profile { label: Option<String> },
    /// Curve classes on del Pezzo surfaces.
    Surface {
        #[command(subcommand)]
        command: SurfaceCommand,
    },
    /// Dual VMRT classes of del Pezzo threefolds.
    Vmrt {
        #[command(subcommand)]
        command: VmrtCommand,
    },
    /// Schur functor dimensions.
    Schur {
        #[command(subcommand)]
        command: SchurCommand,
    },
}

#[derive(Subcommand)]
enum SurfaceCommand {
    /// (-1)-curves, or conic classes with --conics.
    Curves {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        conics: bool,
    },
}

#[derive(Subcommand)]
enum VmrtCommand {
    Table {
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Subcommand)]
enum SchurCommand {
    Dim {
        /// Comma-separated parts, e.g. 2,2,1.
        #[arg(long)]
        partition: Partition,
        #[arg(long)]
        dim: usize,
    },
}

/// Usage or input errors exit with status 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn load_profile(spec: &str) -> Result<BaseProfile, UsageError> {
    if let Ok(p) = catalog::by_label(spec) {
        return Ok(p);
    }
    let path = PathBuf::from(spec);
    if path.exists() {
        let text = std::fs::read_to_string(&path)?;
        return Ok(BaseProfile::from_json(&text)?);
    }
    Err(UsageError(format!(
        "`{spec}` is neither a catalog label nor a readable file (try `pseff profile` for the catalog)"
    )))
}

fn load_registry(path: Option<&PathBuf>) -> Result<Registry, UsageError> {
    match path {
        Some(p) => Ok(Registry::parse(&std::fs::read_to_string(p)?)?),
        None => Ok(Registry::builtin()),
    }
}

fn run(cli: Cli) -> Result<ExitCode, UsageError> {
    match cli.command {
        Command::Verify {
            filter,
            format,
            timings,
        } => {
            let registry = load_registry(cli.registry.as_ref())?;
            let report = run_claims(&registry, filter.as_deref(), RunOptions { timings });
            match format {
                Format::Json => print!("{}", report::to_json(&report)),
                Format::Markdown => print!("{}", report::to_markdown(&report)),
            }
            Ok(if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Eval {
            profile,
            expr,
            class,
        } => {
            let p = load_profile(&profile)?;
            if class {
                println!("{}", parse_expr(&p, &expr)?);
            } else {
                println!("{}", format_short(&evaluate_expr(&p, &expr)?));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Profile { label } => {
            match label {
                Some(l) => println!("{}", load_profile(&l)?.to_json()),
                None => {
                    for l in catalog::standard_labels() {
                        println!("{l}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Surface {
            command: SurfaceCommand::Curves { degree, conics },
        } => {
            let lattice = surface_lattice(degree)?;
            let classes = if conics {
                conic_classes(&lattice)?
            } else {
                minus_one_curves(&lattice)
            };
            let rows: Vec<String> = classes
                .iter()
                .map(|c| serde_json::to_string(c).expect("vectors serialize"))
                .collect();
            if rows.is_empty() {
                println!("[]");
            } else {
                println!("[\n  {}\n]", rows.join(",\n  "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Vmrt {
            command: VmrtCommand::Table { format },
        } => {
            let rows = vmrt_table()?;
            match format {
                Format::Json => println!("{}", vmrt_table_json(&rows)),
                Format::Markdown => {
                    print!(
                        "{}",
                        report::vmrt_markdown(&rows.values().collect::<Vec<_>>())
                    );
                    for row in rows.values().filter(|r| r.is_interval()) {
                        println!("\nd = {}: {} ({})", row.d, bound_text(row), row.provenance);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Schur {
            command: SchurCommand::Dim { partition, dim },
        } => {
            println!("{}", schur_dim(&partition, dim));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
