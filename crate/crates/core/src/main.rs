use std::fs;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use domgame::census::{census_detail, conjecture_scan, CensusCache, CensusRow, TreeValues};
use domgame::constructions::{bridge_graph, cartesian_product, hat_construction};
use domgame::game::{apply_move, is_finished, legal_moves, DEFAULT_MEMO_CAP};
use domgame::graph::{complete, generate, Family};
use domgame::io::{parse_auto, serialize_graph, Format};
use domgame::verifier::{run_suite, Status, Suite};
use domgame::{Error, GameState, Graph, Player, Solver, Variant, VertexSet};

#[derive(Parser)]
#[command(
    name = "domgame",
    version,
    about = "Exact solver for domination-type games on small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Dom,
    Total,
    Z,
    L,
    Ll,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Dom => Variant::Dom,
            VariantArg::Total => Variant::Total,
            VariantArg::Z => Variant::Z,
            VariantArg::L => Variant::L,
            VariantArg::Ll => Variant::LL,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FirstArg {
    D,
    S,
}

impl From<FirstArg> for Player {
    fn from(f: FirstArg) -> Player {
        match f {
            FirstArg::D => Player::Dominator,
            FirstArg::S => Player::Staller,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Dominator,
    Staller,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileFormat {
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Structure,
    Products,
    Theorems,
    Spotvalues,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Optimal game length.
    Value {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value = "d")]
        first: FirstArg,
        /// File path, or a graph6 literal when no such file exists.
        #[arg(long)]
        graph: String,
        /// Comma-separated vertices already dominated.
        #[arg(long)]
        covered: Option<String>,
        #[arg(long, default_value_t = DEFAULT_MEMO_CAP)]
        memo_cap: usize,
    },
    /// γ, γ_t and all ten game values as one flat record.
    Profile {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value = "json")]
        format: ProfileFormat,
    },
    /// Writes a graph from a standard family.
    Generate {
        /// path, cycle, complete, star, empty, cycle_power, hamming, bridge or hat.
        #[arg(long)]
        family: String,
        #[arg(long = "N")]
        big_n: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Base graph for `hat`.
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GraphFormat,
    },
    /// Tree census table, one TSV row per order.
    Census {
        #[arg(long, default_value_t = 4)]
        min: usize,
        #[arg(long, default_value_t = 12)]
        max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Per-tree values (including L- and LL-game) written here.
        #[arg(long)]
        detail: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Directory holding cached rows.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Runs a claim-checking suite; JSON lines, one object per check.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Where the first failing report is written.
        #[arg(long, default_value = "counterexample.json")]
        counterexample: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Checks γ_Zg(T) < γ_Lg(T) on every tree up to the given order.
    Conjecture {
        #[arg(long, default_value_t = 14)]
        max_order: usize,
        /// Full JSON report written here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Plays a game against the optimal engine; moves are read from stdin.
    Play {
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long = "as", value_enum)]
        side: SideArg,
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value = "d")]
        first: FirstArg,
    },
}

enum Failure {
    Lib(Error),
    Eof,
    /// A claim did not hold; the message has already been printed.
    Claim,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Lib(e.into())
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::TooManyVertices(_)
        | Error::VertexOutOfRange { .. }
        | Error::UniverseMismatch { .. }
        | Error::Loop(_)
        | Error::IllegalMove(_)
        | Error::GameFinished => 2,
        Error::IsolatedVertex(_) => 3,
        Error::MemoCapExceeded(_) => 4,
        Error::InvalidParameter(_) | Error::Disconnected => 6,
        Error::Io(_) => 7,
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn load_graph(arg: &str) -> CliResult<Graph> {
    let path = Path::new(arg);
    if path.is_file() {
        Ok(parse_auto(&fs::read(path)?)?)
    } else {
        Ok(parse_auto(arg.as_bytes())?)
    }
}

fn parse_vertex_list(n: usize, text: &str) -> CliResult<VertexSet> {
    let mut vs = Vec::new();
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        vs.push(
            part.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad vertex {part:?}")))?,
        );
    }
    Ok(VertexSet::from_vertices(n, vs)?)
}

fn set_jobs(jobs: Option<usize>) {
    if let Some(j) = jobs {
        // only fails if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
}

fn output(path: &Option<PathBuf>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(io::BufWriter::new(fs::File::create(p)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn cmd_generate(
    family: &str,
    big_n: Option<usize>,
    n: Option<usize>,
    m: Option<usize>,
    base: Option<&str>,
) -> CliResult<Graph> {
    let need = |x: Option<usize>, name: &str| {
        x.ok_or_else(|| Error::InvalidParameter(format!("family {family} needs --{name}")))
    };
    Ok(match family {
        "hamming" => cartesian_product(&complete(need(m, "m")?)?, &complete(need(n, "n")?)?)?,
        "bridge" => bridge_graph(need(m, "m")?, need(n, "n")?)?,
        "hat" => {
            let base = base.ok_or_else(|| Error::InvalidParameter("family hat needs --graph".into()))?;
            hat_construction(&load_graph(base)?)?
        }
        "cycle_power" => generate(Family::CyclePower, &[need(big_n, "N")?, need(n, "n")?])?,
        other => generate(other.parse()?, &[need(n, "n")?])?,
    })
}

fn cmd_census(
    min: usize,
    max: usize,
    out: &Option<PathBuf>,
    detail: &Option<PathBuf>,
    cache: &Option<PathBuf>,
) -> CliResult {
    let cache = cache.as_ref().map(CensusCache::new).transpose()?;
    let mut rows = Vec::new();
    let mut details: Vec<TreeValues> = Vec::new();
    for n in min..=max {
        let cached = cache.as_ref().and_then(|c| c.get(n));
        let row = match cached {
            Some(row) if detail.is_none() => row,
            _ => {
                let (row, values) = census_detail(n, detail.is_some())?;
                if let Some(c) = &cache {
                    c.put(&row)?;
                }
                details.extend(values);
                row
            }
        };
        rows.push(row);
    }
    let mut w = output(out)?;
    writeln!(w, "{}", CensusRow::TSV_HEADER)?;
    for r in &rows {
        writeln!(w, "{}", r.to_tsv())?;
    }
    w.flush()?;
    if let Some(path) = detail {
        let mut d = io::BufWriter::new(fs::File::create(path)?);
        writeln!(d, "{}", TreeValues::TSV_HEADER)?;
        for t in &details {
            writeln!(d, "{}", t.to_tsv())?;
        }
        d.flush()?;
    }
    Ok(())
}

fn cmd_verify(suite: SuiteArg, max_order: Option<usize>, out: &Option<PathBuf>, cex: &Path) -> CliResult {
    let suites = match suite {
        SuiteArg::Structure => vec![Suite::Structure],
        SuiteArg::Products => vec![Suite::Products],
        SuiteArg::Theorems => vec![Suite::Theorems],
        SuiteArg::Spotvalues => vec![Suite::SpotValues],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    let mut w = output(out)?;
    for s in suites {
        let outcome = run_suite(s, max_order, DEFAULT_MEMO_CAP)?;
        outcome.write_jsonl(&mut w)?;
        w.flush()?;
        eprintln!(
            "{}: {} pass, {} vacuous, {} fail",
            s.name(),
            outcome.count(Status::Pass),
            outcome.count(Status::Vacuous),
            outcome.count(Status::Fail)
        );
        if let Some(r) = &outcome.first_failure {
            outcome.write_counterexample(cex)?;
            eprintln!(
                "FAIL {} on {}; counterexample written to {}",
                r.claim,
                r.graph,
                cex.display()
            );
            return Err(Failure::Claim);
        }
    }
    Ok(())
}

fn cmd_conjecture(max_order: usize, out: &Option<PathBuf>) -> CliResult {
    let report = conjecture_scan(max_order)?;
    if let Some(path) = out {
        fs::write(
            path,
            serde_json::to_string(&report).map_err(|e| Error::Io(e.to_string()))? + "\n",
        )?;
    }
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    println!("{verdict} {} counterexamples", report.counterexamples.len());
    for g6 in &report.counterexamples {
        println!("{g6}");
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Claim)
    }
}

fn cmd_play(g: &Graph, variant: Variant, human: Player, first: Player) -> CliResult {
    let mut solver = Solver::new(g, variant)?;
    let mut state = GameState::new(g.n(), first);
    let mut moves = 0;
    let stdin = io::stdin();
    let mut lines = stdin.lock().lines();
    let mut out = io::stdout().lock();
    writeln!(out, "{variant} game on {} vertices; you are {:?}", g.n(), human)?;
    while !is_finished(g, variant, &state) {
        writeln!(out, "dominated: {}", state.covered)?;
        let v = if state.to_move == human {
            let legal = legal_moves(g, variant, &state)?;
            loop {
                write!(out, "your move {}> ", legal)?;
                out.flush()?;
                let line = lines.next().ok_or(Failure::Eof)??;
                match line.trim().parse::<usize>() {
                    Ok(v) if v < g.n() && legal.contains(v) => break v,
                    _ => writeln!(out, "illegal move {:?}", line.trim())?,
                }
            }
        } else {
            let v = solver.optimal_move(&state)?;
            writeln!(out, "engine plays {v}")?;
            v
        };
        state = apply_move(g, variant, &state, v)?;
        moves += 1;
    }
    writeln!(out, "dominated: {}", state.covered)?;
    writeln!(out, "game over after {moves} moves")?;
    Ok(())
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Value {
            variant,
            first,
            graph,
            covered,
            memo_cap,
        } => {
            let g = load_graph(&graph)?;
            let state = match covered {
                Some(list) => GameState::with_covered(parse_vertex_list(g.n(), &list)?, first.into()),
                None => GameState::new(g.n(), first.into()),
            };
            let value = Solver::new(&g, variant.into())?
                .with_memo_cap(memo_cap)
                .value_from(&state)?;
            println!("{value}");
        }
        Command::Profile { graph, format } => {
            let p = domgame::profile(&load_graph(&graph)?)?;
            match format {
                ProfileFormat::Json => {
                    println!("{}", serde_json::to_string(&p).map_err(|e| Error::Io(e.to_string()))?)
                }
                ProfileFormat::Tsv => {
                    let entries = p.entries();
                    let keys: Vec<&str> = entries.iter().map(|(k, _)| k.as_str()).collect();
                    let vals: Vec<String> = entries.iter().map(|(_, v)| v.to_string()).collect();
                    println!("{}\n{}", keys.join("\t"), vals.join("\t"));
                }
            }
        }
        Command::Generate {
            family,
            big_n,
            n,
            m,
            graph,
            format,
        } => {
            let g = cmd_generate(&family, big_n, n, m, graph.as_deref())?;
            let fmt = match format {
                GraphFormat::Graph6 => Format::Graph6,
                GraphFormat::Edgelist => Format::EdgeList,
            };
            let mut bytes = serialize_graph(&g, fmt);
            if fmt == Format::Graph6 {
                bytes.push(b'\n');
            }
            io::stdout().write_all(&bytes)?;
        }
        Command::Census {
            min,
            max,
            out,
            detail,
            jobs,
            cache,
        } => {
            set_jobs(jobs);
            cmd_census(min, max, &out, &detail, &cache)?;
        }
        Command::Verify {
            suite,
            max_order,
            out,
            counterexample,
            jobs,
        } => {
            set_jobs(jobs);
            cmd_verify(suite, max_order, &out, &counterexample)?;
        }
        Command::Conjecture { max_order, out, jobs } => {
            set_jobs(jobs);
            cmd_conjecture(max_order, &out)?;
        }
        Command::Play {
            variant,
            side,
            graph,
            first,
        } => {
            let human = match side {
                SideArg::Dominator => Player::Dominator,
                SideArg::Staller => Player::Staller,
            };
            cmd_play(&load_graph(&graph)?, variant.into(), human, first.into())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Eof) => {
            eprintln!("error: input ended before the game finished");
            ExitCode::from(5)
        }
        Err(Failure::Claim) => ExitCode::from(1),
    }
}
