//! Command-line surface over the invariant computations: exact Betti data,
//! barcodes, contour shifts, stabilized ranks, min-rank instances and the
//! graph hardness benchmark.
//!
//! Exit codes: 0 success, 1 parse error, 2 precondition violation,
//! 3 enumeration budget exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use stablerank_core::error::{Error, SEARCH_BUDGET};
use stablerank_core::io;
use stablerank_core::stablerank::fingerprint_csv;
use stablerank_core::{
    band_functor, euler_characteristic, fingerprint_r1, graph_to_minrank, hardness_pipeline,
    minrank_solve, noise_contains, shift, stable_rank_bruteforce, stable_rank_r1, Contour,
    Rational, TameModule,
};

#[derive(Parser)]
#[command(name = "stablerank", version, about = "Exact invariants of multi-parameter persistence modules", long_about = None)]
struct Cli {
    /// Worker threads for the parallel-capable solvers (output is identical
    /// for any value).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Enumeration budget; also settable through STABLERANK_BUDGET.
    #[arg(long, global = true)]
    budget: Option<u128>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ModuleInput {
    /// Frame file.
    file: PathBuf,

    /// Resolution of the tame module represented by the frame.
    #[arg(long, default_value = "1")]
    alpha: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print the n-th Betti diagram of a frame.
    Betti {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        module: ModuleInput,
    },
    /// Print the Euler characteristic of a frame.
    Euler {
        file: PathBuf,
    },
    /// Decompose a one-parameter frame into bars.
    Barcode {
        #[command(flatten)]
        module: ModuleInput,
    },
    /// Shift a module along a contour and print the resulting frame.
    Shift {
        #[arg(long)]
        contour: String,
        #[arg(long)]
        tau: String,
        #[command(flatten)]
        module: ModuleInput,
    },
    /// Test membership of a module in the noise system of a contour.
    #[command(name = "noise-test")]
    NoiseTest {
        #[arg(long)]
        contour: String,
        #[arg(long)]
        eps: String,
        #[command(flatten)]
        module: ModuleInput,
    },
    /// Stabilized rank: a single value, or the full step function for
    /// one-parameter modules with --sweep.
    #[command(name = "stable-rank")]
    StableRank {
        #[arg(long)]
        contour: String,
        #[arg(long, conflicts_with = "sweep")]
        tau: Option<String>,
        #[arg(long)]
        sweep: bool,
        #[command(flatten)]
        module: ModuleInput,
    },
    /// Stabilized-rank table of a one-parameter module under truncated
    /// standard contours, on the product of the given tau and u lists.
    Fingerprint {
        #[arg(long, default_value = "1")]
        direction: String,
        #[arg(long)]
        taus: String,
        #[arg(long)]
        us: String,
        #[command(flatten)]
        module: ModuleInput,
    },
    /// Minimum rank of the matrix family of a graph.
    Minrank {
        file: PathBuf,
    },
    /// Build a band functor from a band spec file and print its frame.
    Band {
        file: PathBuf,
    },
    /// Run the hardness pipeline over every graph file in a directory and
    /// print a CSV report.
    Bench {
        #[arg(long)]
        graphs: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: could not configure {jobs} worker threads: {e}");
            return ExitCode::from(2);
        }
    }
    let budget = cli
        .budget
        .or_else(|| std::env::var("STABLERANK_BUDGET").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(SEARCH_BUDGET);
    match run(cli.command, budget) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parse(_) => 1,
                Error::BudgetExceeded { .. } => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn load_module(input: &ModuleInput) -> Result<TameModule, Error> {
    let frame = io::parse_frame(&read_file(&input.file)?)?;
    let alpha: Rational = input.alpha.parse()?;
    TameModule::new(frame, alpha)
}

fn format_point(coords: &[Rational]) -> String {
    let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(","))
}

fn run(command: Command, budget: u128) -> Result<(), Error> {
    match command {
        Command::Betti { n, module } => {
            let module = load_module(&module)?;
            for (point, value) in module.betti_diagram(n)? {
                println!("{n}: {value} @ {}", format_point(&point));
            }
        }
        Command::Euler { file } => {
            let frame = io::parse_frame(&read_file(&file)?)?;
            println!("{}", euler_characteristic(&frame)?);
        }
        Command::Barcode { module } => {
            let module = load_module(&module)?;
            print!("{}", io::write_barcode(&module.barcode()?));
        }
        Command::Shift { contour, tau, module } => {
            let module = load_module(&module)?;
            let contour = Contour::parse(&contour)?;
            let tau: Rational = tau.parse()?;
            let result = shift(&module, &contour, &tau)?;
            eprintln!("alpha: {}", result.ambient.alpha());
            for (source, target) in &result.generators {
                match target {
                    Some(t) => eprintln!(
                        "generator {} -> {}",
                        format_point(source),
                        format_point(t)
                    ),
                    None => eprintln!("generator {} -> dropped", format_point(source)),
                }
            }
            print!("{}", io::write_frame(&result.sub.frame));
        }
        Command::NoiseTest { contour, eps, module } => {
            let module = load_module(&module)?;
            let contour = Contour::parse(&contour)?;
            let eps: Rational = eps.parse()?;
            println!("{}", noise_contains(&module, &contour, &eps)?);
        }
        Command::StableRank { contour, tau, sweep, module } => {
            let module = load_module(&module)?;
            let contour = Contour::parse(&contour)?;
            if sweep {
                let function = stable_rank_r1(&module, &contour)?;
                print!("{}", function.step().to_csv());
            } else {
                let tau: Rational = tau
                    .ok_or_else(|| Error::Precondition("stable-rank needs --tau or --sweep".into()))?
                    .parse()?;
                let value = if module.r() == 1 {
                    stable_rank_r1(&module, &contour)?.eval(&tau) as usize
                } else {
                    stable_rank_bruteforce(&module, &contour, &tau, budget)?
                };
                println!("{value}");
            }
        }
        Command::Fingerprint { direction, taus, us, module } => {
            let module = load_module(&module)?;
            let direction: Rational = direction.parse()?;
            let taus = parse_list(&taus)?;
            let us = parse_list(&us)?;
            let mut grid = Vec::new();
            for tau in &taus {
                for u in &us {
                    grid.push((*tau, *u));
                }
            }
            let table = fingerprint_r1(&module, &direction, &grid)?;
            print!("{}", fingerprint_csv(&table));
        }
        Command::Minrank { file } => {
            let (graph, p) = io::parse_graph(&read_file(&file)?)?;
            let instance = graph_to_minrank(&graph, p)?;
            println!("{}", minrank_solve(&instance, budget)?);
        }
        Command::Band { file } => {
            let spec = io::parse_band_spec(&read_file(&file)?)?;
            let module = band_functor(&spec)?;
            print!("{}", io::write_frame(module.frame()));
        }
        Command::Bench { graphs } => {
            let mut paths: Vec<PathBuf> = fs::read_dir(&graphs)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", graphs.display())))?
                .filter_map(|entry| entry.ok().map(|e| e.path()))
                .filter(|p| p.is_file())
                .collect();
            paths.sort();
            println!("graph,n,stable_rank,minrank,agree,time_ms_brute,time_ms_minrank,budget_hit");
            for path in paths {
                let (graph, p) = io::parse_graph(&read_file(&path)?)?;
                let report = hardness_pipeline(&graph, p, budget)?;
                let name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
                let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
                let agree = report
                    .agree
                    .map(|a| a.to_string())
                    .unwrap_or_default();
                println!(
                    "{name},{},{},{},{agree},{},{},{}",
                    report.vertices,
                    opt(report.stable_rank),
                    opt(report.minrank),
                    report.time_brute_ms,
                    report.time_minrank_ms,
                    report.budget_flag()
                );
            }
        }
    }
    Ok(())
}

fn parse_list(text: &str) -> Result<Vec<Rational>, Error> {
    text.split(',').map(|tok| tok.trim().parse()).collect()
}
