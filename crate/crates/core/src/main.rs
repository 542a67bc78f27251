use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use owrn::connectivity::{boundary_forms_cycle, boundary_tuple, strongly_connected_components};
use owrn::io;
use owrn::kinematics::{conflict_graph_of, detect_collisions};
use owrn::model::{parse_rational, VertexId};
use owrn::reduction::{reduce, verify_reduction, ReductionParams};
use owrn::shortest_path::{dijkstra_shortest, turn_bounded_shortest};
use owrn::solver::{max_collision_free_subset_with, Strategy};
use owrn::Error;

/// Exit code for a well-formed input whose answer is negative.
const NEGATIVE: u8 = 2;

#[derive(Parser)]
#[command(name = "owrn", version, about = "One-way road network toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a scenario parses and every path follows the network.
    Validate(ScenarioArg),
    /// Report strong connectivity and the boundary direction tuple.
    Connectivity(ScenarioArg),
    /// List all collisions between vehicles.
    Simulate {
        #[command(flatten)]
        input: ScenarioArg,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        /// Print the conflict graph in DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Largest collision-free subset of the vehicles.
    Solve {
        #[command(flatten)]
        input: ScenarioArg,
        #[arg(long, group = "strategy")]
        exact: bool,
        #[arg(long, group = "strategy")]
        bipartite: bool,
        #[arg(long, group = "strategy")]
        auto: bool,
        #[arg(long)]
        json: bool,
    },
    /// Build the collision scenario encoding a graph.
    Reduce(ReduceArgs),
    /// Shortest path between two vertices, optionally turn-bounded.
    Shortest {
        #[command(flatten)]
        input: ScenarioArg,
        #[arg(long, value_parser = parse_vertex)]
        from: VertexId,
        #[arg(long, value_parser = parse_vertex)]
        to: VertexId,
        #[arg(long)]
        max_turns: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Network (or conflict graph) as DOT.
    ExportDot {
        #[command(flatten)]
        input: ScenarioArg,
        #[arg(long)]
        conflicts: bool,
    },
}

#[derive(Args)]
struct ScenarioArg {
    /// Scenario JSON file.
    scenario: PathBuf,
}

#[derive(Args)]
struct ReduceArgs {
    /// Graph JSON file: {"n": 3, "edges": [[1, 2]]}.
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value_t = 5)]
    delta: i64,
    #[arg(long, default_value = "1", value_parser = parse_positive_rational)]
    omega: owrn::model::Rational,
    /// Check the construction and print a report to stderr.
    #[arg(long)]
    verify: bool,
    #[arg(long)]
    json: bool,
    /// Write the scenario here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_vertex(text: &str) -> Result<VertexId, String> {
    let (i, j) = text.split_once(',').ok_or("expected i,j")?;
    let i = i.trim().parse().map_err(|_| format!("bad row `{i}`"))?;
    let j = j.trim().parse().map_err(|_| format!("bad column `{j}`"))?;
    Ok(VertexId::new(i, j))
}

fn parse_positive_rational(text: &str) -> Result<owrn::model::Rational, String> {
    parse_rational(text).ok_or_else(|| format!("`{text}` is not a rational"))
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load(arg: &ScenarioArg) -> Result<owrn::model::TrafficConfig, String> {
    let text = read(&arg.scenario)?;
    io::parse_scenario(&text).map_err(|e| describe(&arg.scenario, e))
}

fn describe(path: &Path, err: Error) -> String {
    format!("{}: {err}", path.display())
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Validate(input) => {
            let tc = load(&input)?;
            let net = tc.network();
            println!(
                "ok: {}x{} network, {} vehicles",
                net.rows(),
                net.columns(),
                tc.len()
            );
            Ok(0)
        }
        Command::Connectivity(input) => {
            let text = read(&input.scenario)?;
            let net = io::parse_network(&text).map_err(|e| describe(&input.scenario, e))?;
            let components = strongly_connected_components(&net);
            let tuple = boundary_tuple(&net);
            println!("boundary tuple: {tuple:?}");
            println!("boundary cycle: {}", boundary_forms_cycle(&net));
            println!("components: {}", components.len());
            let connected = components.len() == 1;
            println!("strongly connected: {connected}");
            Ok(if connected { 0 } else { NEGATIVE })
        }
        Command::Simulate { input, json, dot } => {
            let tc = load(&input)?;
            let events = detect_collisions(&tc);
            if dot {
                print!("{}", io::conflict_dot(&conflict_graph_of(tc.len(), &events)));
            } else if json {
                print!("{}", io::events_json(tc.len(), &events));
            } else {
                print!("{}", io::events_text(tc.len(), &events));
            }
            Ok(0)
        }
        Command::Solve {
            input,
            exact,
            bipartite,
            auto: _,
            json,
        } => {
            let tc = load(&input)?;
            let strategy = if exact {
                Strategy::Exact
            } else if bipartite {
                Strategy::Bipartite
            } else {
                Strategy::Auto
            };
            let solution = max_collision_free_subset_with(&tc, strategy).map_err(|e| describe(&input.scenario, e))?;
            if json {
                print!("{}", io::solution_json(&solution));
            } else {
                let cars: Vec<String> = solution.selected.iter().map(|c| format!("c{}", c + 1)).collect();
                println!("{} of {} cars ({})", solution.size, tc.len(), solution.method.as_str());
                println!("{}", cars.join(" "));
            }
            Ok(0)
        }
        Command::Reduce(args) => {
            let text = read(&args.graph)?;
            let graph = io::parse_graph(&text).map_err(|e| describe(&args.graph, e))?;
            let params = ReductionParams::new(args.delta, args.omega).map_err(|e| e.to_string())?;
            let inst = reduce(&graph, &params).map_err(|e| e.to_string())?;
            let scenario = io::write_scenario(&inst.tc);
            match &args.out {
                Some(path) => fs::write(path, scenario).map_err(|e| format!("{}: {e}", path.display()))?,
                None => print!("{scenario}"),
            }
            if !args.verify {
                return Ok(0);
            }
            let report = verify_reduction(&inst);
            if args.json {
                eprint!("{}", io::verification_json(&report));
            } else {
                eprint!("{}", io::verification_text(&report));
            }
            Ok(if report.passed() { 0 } else { NEGATIVE })
        }
        Command::Shortest {
            input,
            from,
            to,
            max_turns,
            json,
        } => {
            let text = read(&input.scenario)?;
            let net = io::parse_network(&text).map_err(|e| describe(&input.scenario, e))?;
            for v in [from, to] {
                net.check_vertex(v).map_err(|e| e.to_string())?;
            }
            let found = match max_turns {
                Some(k) => turn_bounded_shortest(&net, from, to, k),
                None => dijkstra_shortest(&net, from, to),
            };
            let Some(path) = found else {
                println!("no path from {from} to {to}");
                return Ok(NEGATIVE);
            };
            if json {
                print!("{}", io::turn_path_json(&path));
            } else {
                let vertices: Vec<String> = path.path.vertices().iter().map(|v| v.to_string()).collect();
                println!("length {} with {} turns", path.length, path.turns.len());
                println!("{}", vertices.join(" -> "));
            }
            Ok(0)
        }
        Command::ExportDot { input, conflicts } => {
            if conflicts {
                let tc = load(&input)?;
                print!("{}", io::conflict_dot(&conflict_graph_of(tc.len(), &detect_collisions(&tc))));
            } else {
                let text = read(&input.scenario)?;
                let net = io::parse_network(&text).map_err(|e| describe(&input.scenario, e))?;
                print!("{}", io::network_dot(&net));
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
