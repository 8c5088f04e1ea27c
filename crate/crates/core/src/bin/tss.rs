//! Command-line front end. Results go to stdout, timings to stderr.
//! Exit codes: 0 success or YES, 1 NO or infeasible, 2 usage or format error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};

use tss::baseline::{brute_force_tss_until, greedy_tss, DEFAULT_CAP};
use tss::bench::{format_table, run_bench, BenchSpec, Engine, Family};
use tss::cover::{approx_vertex_cover, best_cover, DEFAULT_NODE_LIMIT};
use tss::diffusion::{diffuse, influence};
use tss::error::Error;
use tss::fpt::{rebuild_guess, solve_decision, solve_optimal, DiscardRule, SolveOptions};
use tss::generate::{generate_bounded_vc, generate_setcover, ThresholdMode};
use tss::instance::{SolveResult, TssInstance, VertexSet};
use tss::io;
use tss::mhs::DpTable;
use tss::reductions::{
    greedy_set_cover, normalize_bipartite_solution, setcover_to_tss, subdivide_to_bipartite,
};

#[derive(Parser)]
#[command(
    name = "tss",
    version,
    about = "Target set selection under threshold diffusion"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a minimum target set, or decide one of size at most --k.
    Solve(SolveArgs),
    /// Print the diffusion trace of a seed set, one `r` line per round.
    Simulate { instance: PathBuf, seed: PathBuf },
    /// Re-simulate a witness and report whether it activates everything.
    Verify { instance: PathBuf, witness: PathBuf },
    #[command(subcommand)]
    Reduce(Reduce),
    /// Move a bipartite target set onto the right side without growing it.
    Normalize { instance: PathBuf, witness: PathBuf },
    #[command(subcommand)]
    Generate(Generate),
    /// Greedy set cover; prints 1-based subset indices in pick order.
    GreedySc { instance: PathBuf },
    /// Print a vertex cover as a `w` line.
    Cover {
        instance: PathBuf,
        /// Matching-based 2-approximation instead of the exact search.
        #[arg(long)]
        approx: bool,
    },
    /// Run engines over a generated size grid.
    Bench(BenchArgs),
}

#[derive(Args)]
struct SolveArgs {
    instance: PathBuf,
    #[arg(long, default_value = "fpt")]
    engine: Engine,
    /// Decision mode: look for a target set of size at most k.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    strict_discard: bool,
    #[arg(long)]
    no_reduce: bool,
    /// Worker threads for guess enumeration (0 = all cores).
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Vertex cover to use as the parameter, as a `w` line.
    #[arg(long)]
    cover: Option<PathBuf>,
    /// Stop at the first guess that meets the trivial lower bound.
    #[arg(long)]
    early_exit: bool,
    /// Largest instance the brute-force engine accepts.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    timeout: Option<f64>,
    /// Print per-layer occupancy of the winning guess's table to stderr.
    #[arg(long)]
    dump_mhs: bool,
}

#[derive(Subcommand)]
enum Reduce {
    /// Set cover instance to bipartite TSS instance.
    Sc2tss {
        instance: PathBuf,
        /// Reject empty subsets instead of giving them threshold 1.
        #[arg(long)]
        strict: bool,
    },
    /// Subdivide every edge once, giving a bipartite instance.
    Subdivide { instance: PathBuf },
}

#[derive(Subcommand)]
enum Generate {
    /// Instance whose first t vertices form a vertex cover.
    Tss {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        /// uniform, majority or const:<c>
        #[arg(long, default_value = "uniform")]
        mode: ThresholdMode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random feasible set cover instance.
    Sc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated engines.
    #[arg(long, value_delimiter = ',', default_value = "fpt")]
    engines: Vec<Engine>,
    /// Fix the cover size and sweep n over the grid.
    #[arg(long, conflicts_with = "fix_n")]
    fix_t: Option<usize>,
    /// Fix n and sweep the cover size over the grid.
    #[arg(long)]
    fix_n: Option<usize>,
    #[arg(long, value_delimiter = ',', required = true)]
    grid: Vec<usize>,
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    #[arg(long, default_value = "uniform")]
    mode: ThresholdMode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Per-run wall-clock limit in seconds.
    #[arg(long, default_value_t = 60.0)]
    timeout: f64,
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    brute_cap: usize,
    /// Only print the `B ...` lines.
    #[arg(long)]
    machine: bool,
}

/// Failure carrying its exit code.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotATargetSet | Error::Uncoverable(_) | Error::Timeout => 1,
            _ => 2,
        };
        Fail(code, e.to_string())
    }
}

type CliResult = Result<ExitCode, Fail>;

fn read(path: &Path) -> Result<String, Fail> {
    let text = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    };
    text.map_err(|e| Fail(2, format!("{}: {e}", path.display())))
}

fn load_tss(path: &Path) -> Result<TssInstance, Fail> {
    io::parse_tss(&read(path)?).map_err(|e| Fail(2, format!("{}: {e}", path.display())))
}

fn load_set(path: &Path) -> Result<VertexSet, Fail> {
    io::parse_vertex_list(&read(path)?).map_err(|e| Fail(2, format!("{}: {e}", path.display())))
}

fn yes_no(yes: bool) -> ExitCode {
    if yes {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn solve(args: SolveArgs) -> CliResult {
    let instance = load_tss(&args.instance)?;
    let start = Instant::now();
    let deadline = args.timeout.map(|s| start + Duration::from_secs_f64(s));
    let cover = args.cover.as_deref().map(load_set).transpose()?;
    let options = SolveOptions {
        discard_rule: if args.strict_discard {
            DiscardRule::Strict
        } else {
            DiscardRule::Relaxed
        },
        no_reduce: args.no_reduce,
        threads: args.threads,
        cover,
        early_exit: args.early_exit,
        deadline,
        cover_node_limit: DEFAULT_NODE_LIMIT,
    };

    if let (Engine::Fpt, Some(k)) = (args.engine, args.k) {
        let cover = match &options.cover {
            Some(c) => c.clone(),
            None => best_cover(&instance, DEFAULT_NODE_LIMIT),
        };
        let decision = solve_decision(&instance, &cover, k, &options)?;
        eprintln!("solve: {:.3} ms", start.elapsed().as_secs_f64() * 1e3);
        return Ok(match decision.witness {
            Some(w) => {
                let mut result = SolveResult::new(w);
                result.stats = decision.stats;
                print!("{}", io::write_result(&result));
                ExitCode::SUCCESS
            }
            None => {
                println!("c no target set of size at most {k}");
                ExitCode::from(1)
            }
        });
    }

    let result = match args.engine {
        Engine::Fpt => solve_optimal(&instance, &options)?,
        Engine::Brute => brute_force_tss_until(&instance, args.cap, deadline)?,
        Engine::Greedy => SolveResult::new(greedy_tss(&instance)),
    };
    eprintln!("solve: {:.3} ms", start.elapsed().as_secs_f64() * 1e3);
    if args.dump_mhs && args.engine == Engine::Fpt {
        match rebuild_guess(&instance, &options, result.stat("best_guess"))? {
            Some(gi) => {
                let table = DpTable::build(&gi.mhs)?;
                for (j, count) in table.occupancy().iter().enumerate() {
                    eprintln!("layer {j}: {count}");
                }
            }
            None => eprintln!("winning guess has no table"),
        }
    }
    if let Some(k) = args.k {
        if result.optimum_size > k {
            println!("c no target set of size at most {k} found");
            return Ok(ExitCode::from(1));
        }
    }
    print!("{}", io::write_result(&result));
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Solve(args) => solve(args),
        Command::Simulate { instance, seed } => {
            let g = load_tss(&instance)?;
            let trace = diffuse(&g, &load_set(&seed)?)?;
            print!("{}", io::write_trace(&trace));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { instance, witness } => {
            let g = load_tss(&instance)?;
            let active = influence(&g, &load_set(&witness)?)?;
            let ok = active.len() == g.vertex_count();
            println!(
                "{} {}/{}",
                if ok { "feasible" } else { "infeasible" },
                active.len(),
                g.vertex_count()
            );
            Ok(yes_no(ok))
        }
        Command::Reduce(Reduce::Sc2tss { instance, strict }) => {
            let sc = io::parse_setcover(&read(&instance)?)
                .map_err(|e| Fail(2, format!("{}: {e}", instance.display())))?;
            let g = setcover_to_tss(&sc, strict)?;
            for j in &g.empty_subsets {
                eprintln!("warning: subset {} is empty, given threshold 1", j + 1);
            }
            print!("{}", io::write_tss(&g.instance));
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce(Reduce::Subdivide { instance }) => {
            print!(
                "{}",
                io::write_tss(&subdivide_to_bipartite(&load_tss(&instance)?))
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Normalize { instance, witness } => {
            let g = load_tss(&instance)?;
            let out = normalize_bipartite_solution(&g, &load_set(&witness)?)?;
            print!("{}", io::write_vertex_list(&out));
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate(Generate::Tss {
            t,
            n,
            density,
            mode,
            seed,
        }) => {
            print!(
                "{}",
                io::write_tss(&generate_bounded_vc(t, n, density, mode, seed)?)
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate(Generate::Sc {
            n,
            m,
            density,
            seed,
        }) => {
            print!(
                "{}",
                io::write_setcover(&generate_setcover(n, m, density, seed)?)
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::GreedySc { instance } => {
            let sc = io::parse_setcover(&read(&instance)?)
                .map_err(|e| Fail(2, format!("{}: {e}", instance.display())))?;
            let chosen = greedy_set_cover(&sc)?;
            println!("s {}", chosen.len());
            let ids: Vec<String> = chosen.iter().map(|j| (j + 1).to_string()).collect();
            println!("w {}", ids.join(" "));
            Ok(ExitCode::SUCCESS)
        }
        Command::Cover { instance, approx } => {
            let g = load_tss(&instance)?;
            let c = if approx {
                approx_vertex_cover(&g)
            } else {
                best_cover(&g, DEFAULT_NODE_LIMIT)
            };
            print!("{}", io::write_vertex_list(&c));
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench(args) => {
            let family = match (args.fix_t, args.fix_n) {
                (_, Some(n)) => Family::ScalingT { n },
                (t, None) => Family::ScalingN { t: t.unwrap_or(3) },
            };
            let spec = BenchSpec {
                engines: args.engines,
                family,
                grid: args.grid,
                density: args.density,
                mode: args.mode,
                seed: args.seed,
                timeout: Duration::from_secs_f64(args.timeout),
                threads: args.threads,
                brute_cap: args.brute_cap,
            };
            let rows = run_bench(&spec)?;
            if !args.machine {
                print!("{}", format_table(&rows));
            }
            for r in &rows {
                println!("{}", r.machine_line());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
