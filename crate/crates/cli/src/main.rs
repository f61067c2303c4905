mod render;

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pirates_core::algebra::{extract_tree, negate_instance};
use pirates_core::engine::Position;
use pirates_core::graph_model::{
    make_grid, parse_graph, parse_instance, random_instance, serialize_instance, GridSpec,
    Instance, RandomParams,
};
use pirates_core::solver::{classify, final_scores, solve};
use pirates_core::theory_lab::{
    check_distinguishing_contexts, check_no_n_positions, check_no_p_positions, check_outcome_table,
    check_self_sum_tie, convention_comparison_sum, hampath_oracle, reduce_from_hampath,
    verify_reduction, SweepConfig,
};
use pirates_core::{Error, Player, Rational, Score, SolverConfig};

use render::First;

/// Exact analysis of Pirates and Treasure positions.
#[derive(Debug, Parser)]
#[command(name = "pirates", version)]
struct Cli {
    /// Node budget for every search.
    #[arg(long, global = true, default_value_t = SolverConfig::default().max_nodes)]
    max_nodes: u64,
    /// Read treasure values as exact fractions such as 3/2.
    #[arg(long, global = true)]
    rational: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Final scores, class, best first moves and principal lines.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = First::Both)]
        first: First,
        /// key=value lines
        #[arg(long)]
        kv: bool,
    },
    /// Outcome class: L, R, N, P or TIE.
    Classify { file: PathBuf },
    /// Solve the disjoint sum of several instances.
    Sum {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = First::Both)]
        first: First,
        #[arg(long)]
        kv: bool,
    },
    /// Game tree in bracket form.
    Tree { file: PathBuf },
    /// The instance with Left and Right exchanged.
    Negate { file: PathBuf },
    /// Hamiltonian-path reduction of a graph, Left on vertex `--at`.
    Reduce {
        graph: PathBuf,
        #[arg(long)]
        at: usize,
    },
    /// Does the graph have a Hamiltonian path (from `--start` if given)?
    Oracle {
        graph: PathBuf,
        #[arg(long)]
        start: Option<usize>,
    },
    /// Run a verification sweep.
    Verify(VerifyArgs),
    /// Best first moves under scoring, normal and misere play.
    Compare {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Print a generated instance.
    #[command(subcommand)]
    Generate(Generate),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepKind {
    /// No P positions with all weights 1.
    PtX,
    /// No N positions with all weights -1.
    PtNegx,
    /// Outcome table membership and cell witnesses.
    Table,
    /// A game plus its negation is a tie.
    SelfSum,
    /// Reduction against the Hamiltonian path oracle.
    Reduction,
    /// Single-edge distinguishing contexts.
    Contexts,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    kind: SweepKind,
    /// Largest vertex count for exhaustive enumeration.
    #[arg(long)]
    max_n: Option<usize>,
    /// Number of random instances.
    #[arg(long)]
    seeds: Option<usize>,
    /// Largest vertex count of random instances.
    #[arg(long)]
    random_max_n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (results do not depend on it).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Generate {
    /// Random graph with random integer weights.
    Random {
        #[arg(long, default_value_t = 6)]
        vertices: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        min_weight: i64,
        #[arg(long, default_value_t = 4, allow_negative_numbers = true)]
        max_weight: i64,
        #[arg(long, default_value_t = 1)]
        left: usize,
        #[arg(long, default_value_t = 1)]
        right: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Grid graph with one value everywhere; cells are `x,y`, 1-based.
    Grid {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        weight: i64,
        #[arg(long = "left", value_parser = parse_cell)]
        left: Vec<(usize, usize)>,
        #[arg(long = "right", value_parser = parse_cell)]
        right: Vec<(usize, usize)>,
    },
}

fn parse_cell(s: &str) -> Result<(usize, usize), String> {
    let (x, y) = s.split_once(',').ok_or("expected x,y")?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((num(x)?, num(y)?))
}

enum Status {
    Ok,
    Violation,
}

fn read(path: &Path) -> Result<String, Error> {
    let mut text = String::new();
    let result = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn load<S: Score>(path: &Path) -> Result<Instance<S>, Error> {
    let inst = parse_instance(&read(path)?).map_err(|e| match e {
        Error::Syntax { line, message } => Error::Syntax {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })?;
    for warning in inst.warnings() {
        eprintln!("warning: {}: {warning}", path.display());
    }
    Ok(inst)
}

fn print_report<S: Score>(
    inst: &Instance<S>,
    config: SolverConfig,
    first: First,
    kv: bool,
) -> Result<(), Error> {
    let r = solve(inst, config)?;
    if kv {
        print!("{}", render::report_kv(&r, first));
    } else {
        print!("{}", render::report(inst, &r, first));
    }
    Ok(())
}

fn run_scored<S: Score>(command: &Command, config: SolverConfig) -> Result<Status, Error> {
    match command {
        Command::Solve { file, first, kv } => {
            print_report(&load::<S>(file)?, config, *first, *kv)?;
        }
        Command::Sum { files, first, kv } => {
            let parts = files
                .iter()
                .map(|f| load::<S>(f))
                .collect::<Result<Vec<_>, _>>()?;
            let refs: Vec<&Instance<S>> = parts.iter().collect();
            print_report(&Instance::disjoint_union(&refs)?, config, *first, *kv)?;
        }
        Command::Classify { file } => {
            let inst = load::<S>(file)?;
            println!("{}", classify(&final_scores(&inst, config)?));
        }
        Command::Tree { file } => {
            let inst = load::<S>(file)?;
            println!(
                "{}",
                extract_tree(&Position::initial(&inst, Player::Left), config)?
            );
        }
        Command::Negate { file } => {
            print!(
                "{}",
                serialize_instance(&negate_instance(&load::<S>(file)?))
            );
        }
        Command::Compare { files } => {
            let parts = files
                .iter()
                .map(|f| load::<S>(f))
                .collect::<Result<Vec<_>, _>>()?;
            let refs: Vec<&Instance<S>> = parts.iter().collect();
            print!("{}", convention_comparison_sum(&refs, config)?);
        }
        _ => unreachable!("not a scored command"),
    }
    Ok(Status::Ok)
}

fn sweep_config(args: &VerifyArgs, solver: SolverConfig) -> SweepConfig {
    let (max_n, seeds, random_max_n) = match args.kind {
        SweepKind::PtX | SweepKind::PtNegx => (5, 10_000, 9),
        SweepKind::Table => (4, 1000, 6),
        SweepKind::SelfSum => (4, 1000, 7),
        SweepKind::Reduction => (6, 0, 0),
        SweepKind::Contexts => (0, 1000, 8),
    };
    SweepConfig {
        max_n: args.max_n.unwrap_or(max_n),
        random_count: args.seeds.unwrap_or(seeds),
        random_max_n: args.random_max_n.unwrap_or(random_max_n),
        seed: args.seed,
        solver,
    }
}

fn verify(args: &VerifyArgs, solver: SolverConfig) -> Result<Status, Error> {
    let config = sweep_config(args, solver);
    let run = || match args.kind {
        SweepKind::PtX => check_no_p_positions(&config),
        SweepKind::PtNegx => check_no_n_positions(&config),
        SweepKind::Table => check_outcome_table(&config),
        SweepKind::SelfSum => check_self_sum_tie(&config),
        SweepKind::Reduction => verify_reduction(&config),
        SweepKind::Contexts => check_distinguishing_contexts(&config),
    };
    let report = match args.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    println!("{report}");
    Ok(if report.passed() {
        Status::Ok
    } else {
        Status::Violation
    })
}

fn generate(g: &Generate) -> Result<Status, Error> {
    let inst: Instance<i64> = match g {
        Generate::Random {
            vertices,
            p,
            min_weight,
            max_weight,
            left,
            right,
            connected,
            seed,
        } => random_instance(
            &RandomParams {
                vertex_count: *vertices,
                edge_probability: *p,
                weight_range: *min_weight..=*max_weight,
                left_ships: *left,
                right_ships: *right,
                connected: *connected,
            },
            *seed,
        )?,
        Generate::Grid {
            n,
            m,
            weight,
            left,
            right,
        } => make_grid(
            &GridSpec {
                n: *n,
                m: *m,
                weight: *weight,
            },
            left,
            right,
        )?,
    };
    print!("{}", serialize_instance(&inst));
    Ok(Status::Ok)
}

fn run(cli: &Cli) -> Result<Status, Error> {
    let config = SolverConfig {
        max_nodes: cli.max_nodes,
    };
    match &cli.command {
        Command::Reduce { graph, at } => {
            let g = parse_graph(&read(graph)?)?;
            print!(
                "{}",
                serialize_instance(&reduce_from_hampath::<i64>(&g, *at)?.instance)
            );
            Ok(Status::Ok)
        }
        Command::Oracle { graph, start } => {
            let g = parse_graph(&read(graph)?)?;
            println!("{}", hampath_oracle(&g, *start)?);
            Ok(Status::Ok)
        }
        Command::Verify(args) => verify(args, config),
        Command::Generate(g) => generate(g),
        scored if cli.rational => run_scored::<Rational>(scored, config),
        scored => run_scored::<i64>(scored, config),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Violation) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::BudgetExceeded { .. } => 3,
                _ => 2,
            })
        }
    }
}
