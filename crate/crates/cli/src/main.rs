//! Command-line front end for module-composed graph recognition and the
//! class census.
//!
//! Exit codes: 0 success, 1 negative verdict (or census violations),
//! 2 usage or input error, 3 oracle size limit exceeded.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use modcomp::bdh::check_bdh_from;
use modcomp::census::{run_census, CensusConfig, CensusMode, Restrict};
use modcomp::generate::{random_bipartite_dh_with, random_cograph, random_graph, random_module_composed};
use modcomp::sequence::first_violation;
use modcomp::{
    classify, independent_module_sequence, lex_bfs, recognize, ClassId, Error, Graph, ModuleSequence, NamedGraph,
    TieBreak,
};

#[derive(Parser)]
#[command(name = "modcomp", version, about = "Module-composed graphs: recognition, verification and class census")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph is module-composed and print a module-sequence.
    Recognize {
        /// Edge-list file (`-` for standard input).
        file: PathBuf,
    },
    /// Check a module-sequence against a graph.
    Verify {
        file: PathBuf,
        /// Vertex indices in insertion order (may be given as one quoted string).
        #[arg(required = true, num_args = 1..)]
        sequence: Vec<String>,
        /// Also require every inserted neighbourhood to be independent.
        #[arg(long)]
        independent: bool,
    },
    /// Bipartite distance-hereditary test with an independent module-sequence.
    Bdh {
        file: PathBuf,
        /// Start vertex for the level test (default: smallest per component).
        #[arg(long)]
        start: Option<usize>,
    },
    /// Lexicographic breadth-first search order.
    Lexbfs {
        file: PathBuf,
        start: usize,
        /// Break ties randomly under this seed instead of by smallest index.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run class oracles and print a JSON report.
    Classify {
        file: PathBuf,
        /// Comma-separated class names (default: all that admit the graph size).
        #[arg(long, value_delimiter = ',')]
        classes: Vec<ClassId>,
    },
    /// Write a named or random graph in edge-list format.
    Generate(GenerateArgs),
    /// Tally class inclusions over exhaustive or random graph families.
    Census(CensusArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// Named graph such as `house`, `gem`, `C5`, `co-C6`, `P4`, `K5`, `domino`,
    /// `co-K33-e`, `sun4`, `complete-sun3`, `co-2C4`, `star3`.
    name: Option<NamedGraph>,
    /// Random family, used when no name is given.
    #[arg(long, value_enum, conflicts_with = "name")]
    family: Option<Family>,
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edge probability (gnp) or pendant probability (bipartite-dh).
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Output file (default: standard output).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    ModuleComposed,
    BipartiteDh,
    Cograph,
    Gnp,
}

#[derive(Args)]
struct CensusArgs {
    /// Every labeled graph on N vertices, or on MIN..MAX vertices.
    #[arg(long, value_name = "N", conflicts_with = "random")]
    exhaustive: Option<String>,
    /// Number of random graphs.
    #[arg(long, value_name = "COUNT", requires = "n")]
    random: Option<usize>,
    /// Vertex range MIN..MAX for random graphs.
    #[arg(long, value_name = "MIN..MAX")]
    n: Option<String>,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_delimiter = ',')]
    classes: Vec<ClassId>,
    /// Only graphs of this family are in scope: all, bipartite, cograph.
    #[arg(long, default_value = "all")]
    restrict: Restrict,
    #[arg(long, default_value_t = 5)]
    max_counterexamples: usize,
    /// JSON report path.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    jobs: Option<usize>,
}

enum Failure {
    Usage(String),
    Guard(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeGuard { .. } => Failure::Guard(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Recognize { file } => {
            let g = read_graph(&file)?;
            Ok(match recognize(&g).into_sequence() {
                Some(seq) => {
                    println!("YES\n{seq}");
                    true
                }
                None => {
                    println!("NO");
                    false
                }
            })
        }
        Command::Verify { file, sequence, independent } => {
            let g = read_graph(&file)?;
            let seq = ModuleSequence::parse(&sequence.join(" "))?;
            match first_violation(&g, &seq, independent)? {
                None => {
                    println!("valid");
                    Ok(true)
                }
                Some(i) => {
                    println!("invalid: vertex {} at position {i}", seq.order()[i]);
                    Ok(false)
                }
            }
        }
        Command::Bdh { file, start } => {
            let g = read_graph(&file)?;
            if let Some(u) = start {
                if !check_bdh_from(&g, u)? {
                    println!("NO");
                    return Ok(false);
                }
            }
            Ok(match independent_module_sequence(&g) {
                Some(seq) => {
                    println!("YES\n{seq}");
                    true
                }
                None => {
                    println!("NO");
                    false
                }
            })
        }
        Command::Lexbfs { file, start, seed } => {
            let g = read_graph(&file)?;
            let tie = seed.map_or(TieBreak::Smallest, TieBreak::Seeded);
            println!("{}", lex_bfs(&g, start, tie)?);
            Ok(true)
        }
        Command::Classify { file, classes } => {
            let g = read_graph(&file)?;
            let classes = if classes.is_empty() {
                ClassId::ALL.into_iter().filter(|c| c.admits(g.n())).collect()
            } else {
                classes
            };
            let report = classify(&g, &classes)?;
            println!("{}", serde_json::to_string_pretty(&report).expect("report is serializable"));
            Ok(true)
        }
        Command::Generate(args) => generate(args),
        Command::Census(args) => census(args),
    }
}

fn generate(args: GenerateArgs) -> Outcome {
    let g = match (args.name, args.family) {
        (Some(name), _) => name.build()?,
        (None, Some(Family::ModuleComposed)) => random_module_composed(args.n, args.seed).0,
        (None, Some(Family::BipartiteDh)) => random_bipartite_dh_with(args.n, args.p, args.seed)?,
        (None, Some(Family::Cograph)) => random_cograph(args.n, args.seed),
        (None, Some(Family::Gnp)) => random_graph(args.n, args.p, args.seed)?,
        (None, None) => return Err(Failure::Usage("give a graph name or --family".into())),
    };
    write_output(args.out.as_deref(), &g.to_edge_list())?;
    Ok(true)
}

fn census(args: CensusArgs) -> Outcome {
    let mode = match (&args.exhaustive, args.random) {
        (Some(range), None) => {
            let (min_n, max_n) = parse_range(range)?;
            CensusMode::Exhaustive { min_n, max_n }
        }
        (None, Some(count)) => {
            let (min_n, max_n) = parse_range(args.n.as_deref().unwrap_or_default())?;
            CensusMode::Random { count, min_n, max_n, p: args.p, seed: args.seed }
        }
        _ => return Err(Failure::Usage("give exactly one of --exhaustive N or --random COUNT".into())),
    };
    let cfg = CensusConfig {
        mode,
        classes: args.classes,
        restrict: args.restrict,
        max_counterexamples: args.max_counterexamples,
        jobs: args.jobs,
    };
    let started = Instant::now();
    let report = run_census(&cfg)?;
    if let Some(path) = &args.out {
        write_output(Some(path), &(report.to_json() + "\n"))?;
    }
    print!("{}", report.summary());
    println!("elapsed: {:.2?}", started.elapsed());
    Ok(report.is_clean())
}

/// `N` or `MIN..MAX` (inclusive).
fn parse_range(range: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::Usage(format!("bad vertex range `{range}`, expected N or MIN..MAX"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match range.split_once("..") {
        Some((a, b)) => Ok((num(a)?, num(b.trim_start_matches('='))?)),
        None => {
            let n = num(range)?;
            Ok((n, n))
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
    };
    Graph::parse_edge_list(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => io::stdout().write_all(text.as_bytes()).map_err(|e| Failure::Usage(format!("stdout: {e}"))),
    }
}
