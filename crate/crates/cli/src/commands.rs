//! Subcommands of the `c123` binary.
//!
//! Exit status: 0 when a query is decided (and "yes"/"true" for decision
//! queries), 1 for "no"/"false" answers of `hom`, `qcsp eval`, `edp` and
//! `verify`, 2 for unreadable or malformed input and engine refusals.

use std::io::{BufRead, Write};
use std::net::SocketAddr;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use c123::corpus::{edp_corpus, prefixes, qbf_corpus, qcsp_corpus, RandomCorpus};
use c123::dichotomy::theorem1_classify;
use c123::edp::{edp_solve, edp_solve_bounded_depth, EdpInstance};
use c123::format::{parse_decomposition, parse_graph, write_decomposition, write_graph};
use c123::hom::{hom_exists, hom_exists_pw, HomMode};
use c123::quantified::{
    alternating_roles, qcsp_eval_with, GameState, GameStatus, Player, QbfInstance, QcspInstance, QcspOptions,
    QnaeInstance, DEFAULT_QCSP_CAP,
};
use c123::reductions::{
    c5_chain_reduce, local_hom_subdivision_pair, reduce_3col_by_subdivision, reduce_edp_to_long_edp,
    reduce_pik_qnae_to_list_qcsp, reduce_qbf_to_qnae, reduce_qnae_to_qcsp, verify_reduction, Suite,
};
use c123::subgraph::{all_graphs_up_to, connected_graphs_up_to};
use c123::width::{
    lift_decomposition_phi2, min_vertex_separation_with_cap, pathwidth_with_cap, primal_graph,
    treedepth_with_cap, treewidth_with_cap, VertexOrder, DEFAULT_VERTEX_CAP,
};
use c123::{Graph, Vertex};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use thiserror::Error;

use crate::server;
use crate::session::Store;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {reason}")]
    Input { path: String, reason: String },
    #[error("{0}")]
    Engine(#[from] c123::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

/// What a successful command answered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
}

impl Answer {
    fn of(b: bool) -> Self {
        if b {
            Answer::Yes
        } else {
            Answer::No
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Answer::Yes => 0,
            Answer::No => 1,
        }
    }
}

type Outcome = Result<Answer, CliError>;

#[derive(Parser, Debug)]
#[command(name = "c123", version, about = "Colouring, width and quantified-game tools")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether G maps to H.
    Hom {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        h: PathBuf,
        #[arg(long, value_enum, default_value = "plain")]
        mode: ModeArg,
        /// Use the path decomposition dynamic programme with this decomposition of G.
        #[arg(long)]
        decomposition: Option<PathBuf>,
    },
    /// Exact width parameter with a certificate.
    Width {
        #[arg(long)]
        g: PathBuf,
        #[arg(long, value_enum)]
        measure: Measure,
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        cap: usize,
        /// Write the certificate here (bag format for `pw`, JSON otherwise).
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Quantified 3-colouring sentences.
    Qcsp {
        #[command(subcommand)]
        command: QcspCommand,
    },
    /// The sequential colouring game.
    Game {
        #[command(subcommand)]
        command: GameCommand,
    },
    /// Apply a reduction to an instance file.
    Reduce(ReduceArgs),
    /// Check a reduction over an exhaustive corpus.
    Verify(VerifyArgs),
    /// Classify the class of graphs excluding every given graph as a subgraph.
    Classify {
        #[arg(long = "h", required = true)]
        hs: Vec<PathBuf>,
    },
    /// Edge-disjoint paths.
    Edp(EdpArgs),
    /// Print a corpus as JSON lines.
    Generate {
        #[command(subcommand)]
        corpus: Corpus,
    },
    /// Serve the game session API.
    Serve {
        #[arg(long, env = "C123_PORT", default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        bind: std::net::IpAddr,
        /// Append-only session log (JSON lines).
        #[arg(long)]
        log: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Plain,
    Injective,
    Bijective,
    Surjective,
}

impl From<ModeArg> for HomMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Plain => HomMode::Plain,
            ModeArg::Injective => HomMode::LocallyInjective,
            ModeArg::Bijective => HomMode::LocallyBijective,
            ModeArg::Surjective => HomMode::LocallySurjective,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Measure {
    Pw,
    Tw,
    Td,
    Vsn,
}

#[derive(Subcommand, Debug)]
pub enum QcspCommand {
    /// Evaluate a sentence given as JSON.
    Eval {
        #[arg(long = "in")]
        input: PathBuf,
        /// Accept any non-empty list atom, not only {1,2} and {1,3}.
        #[arg(long)]
        any_lists: bool,
        #[arg(long, default_value_t = DEFAULT_QCSP_CAP)]
        cap: usize,
    },
}

#[derive(Args, Debug)]
pub struct GameArgs {
    #[arg(long)]
    g: PathBuf,
    /// Comma-separated play order; defaults to 0..n.
    #[arg(long, value_delimiter = ',')]
    order: Option<Vec<Vertex>>,
    #[arg(long)]
    k: u8,
    /// Player of each position as a string over E and U; defaults to EUEU...
    #[arg(long)]
    roles: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum GameCommand {
    /// Winner under optimal play and the winning first moves.
    Solve(GameArgs),
    /// Play against the engine on stdin, one colour per line.
    Play {
        #[command(flatten)]
        game: GameArgs,
        #[arg(long, value_enum)]
        human: PlayerArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PlayerArg {
    Existential,
    Universal,
}

impl From<PlayerArg> for Player {
    fn from(p: PlayerArg) -> Self {
        match p {
            PlayerArg::Existential => Player::Existential,
            PlayerArg::Universal => Player::Universal,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ReduceKind {
    /// QBF (JSON) to quantified NAE (JSON).
    QbfToQnae,
    /// Quantified NAE (JSON) to QCSP on K3 (JSON).
    QnaeToQcsp,
    /// QBF (JSON) to QCSP on K3, with a lifted path decomposition.
    QbfToQcsp,
    /// Graph to its (5^r - 1)-subdivision, for colouring into C_{3·5^r}.
    #[value(name = "3col-subdivision")]
    ThreeColSubdivision,
    /// Graph to its subcubic C5 chain image.
    C5Chain,
    /// Subcubic graph to its r-subdivision, for local maps into K4^r.
    LocalHom,
    /// Positive quantified NAE (JSON) to list QCSP (JSON).
    ListGadget,
    /// Classic EDP (JSON) to long EDP (JSON).
    EdpToLong,
}

#[derive(Args, Debug)]
pub struct ReduceArgs {
    #[arg(value_enum)]
    kind: ReduceKind,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    /// Also write the image graph in the line format.
    #[arg(long)]
    emit_graph: Option<PathBuf>,
    /// Also write the lifted decomposition (qbf-to-qcsp).
    #[arg(long)]
    emit_decomposition: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    r: u32,
    #[arg(long, default_value_t = 1)]
    p: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SuiteKind {
    QbfToQcsp,
    #[value(name = "reduction-3col")]
    Reduction3col,
    C5Chain,
    LocalHom,
    ListGadget,
    EdpLong,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    suite: SuiteKind,
    /// Largest vertex count (graph suites).
    #[arg(long, default_value_t = 4)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    r: u32,
    #[arg(long, default_value_t = 1)]
    p: usize,
    #[arg(long, default_value_t = 2)]
    vars: usize,
    #[arg(long, default_value_t = 2)]
    clauses: usize,
    #[arg(long, default_value_t = 3)]
    width: usize,
    #[arg(long, default_value_t = 2)]
    triples: usize,
    #[arg(long, default_value_t = 2)]
    pairs: usize,
    #[arg(long, value_enum, default_value = "bijective")]
    mode: ModeArg,
    /// Print the report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
pub struct EdpArgs {
    /// Instance as JSON; alternatively give --g and --pairs.
    #[arg(long = "in", conflicts_with_all = ["g", "pairs"])]
    input: Option<PathBuf>,
    #[arg(long, requires = "pairs")]
    g: Option<PathBuf>,
    /// Terminal pairs as `s-t,s-t`.
    #[arg(long, requires = "g")]
    pairs: Option<String>,
    #[arg(long, default_value_t = 0)]
    min_length: usize,
    /// Use the bounded-depth search, valid on graphs without a path of m vertices.
    #[arg(long)]
    bounded_depth: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Corpus {
    /// Non-isomorphic graphs with at most n vertices.
    Graphs {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
    },
    /// Every quantifier prefix over n variables.
    Prefixes {
        #[arg(long)]
        n: usize,
    },
    /// Every QBF up to the given shape.
    Qbf {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        clauses: usize,
        #[arg(long)]
        width: usize,
    },
    /// QCSP sentences: exhaustive up to n variables, or seeded random.
    Qcsp {
        #[arg(long)]
        n: usize,
        /// Random stream with this seed instead of the exhaustive corpus.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0.4)]
        edge_probability: f64,
    },
    /// Classic EDP instances.
    Edp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pairs: usize,
    },
}

fn input_error(path: &Path, reason: impl ToString) -> CliError {
    CliError::Input {
        path: path.display().to_string(),
        reason: reason.to_string(),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| input_error(path, e))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| input_error(path, e))
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map_err(|e| input_error(path, e))
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    serde_json::from_str(&read(path)?).map_err(|e| input_error(path, e))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes") + "\n"
}

fn read_qbf(path: &Path) -> Result<QbfInstance, CliError> {
    let f: QbfInstance = read_json(path)?;
    f.validate().map_err(|e| input_error(path, e))?;
    Ok(f)
}

fn read_qnae(path: &Path) -> Result<QnaeInstance, CliError> {
    let inst: QnaeInstance = read_json(path)?;
    inst.validate().map_err(|e| input_error(path, e))?;
    Ok(inst)
}

fn read_edp(path: &Path) -> Result<EdpInstance, CliError> {
    let inst: EdpInstance = read_json(path)?;
    inst.validate().map_err(|e| input_error(path, e))?;
    Ok(inst)
}

fn parse_pairs(text: &str) -> Result<Vec<(Vertex, Vertex)>, CliError> {
    let bad = |reason: String| CliError::Input {
        path: "--pairs".into(),
        reason,
    };
    text.split(',')
        .map(|pair| {
            let (s, t) = pair.split_once('-').ok_or_else(|| bad(format!("`{pair}` is not of the form s-t")))?;
            let parse = |x: &str| x.trim().parse().map_err(|_| bad(format!("`{x}` is not a vertex")));
            Ok((parse(s)?, parse(t)?))
        })
        .collect()
}

fn parse_roles(text: &str, n: usize) -> Result<Vec<Player>, CliError> {
    let bad = |reason: String| CliError::Input {
        path: "--roles".into(),
        reason,
    };
    let roles: Vec<Player> = text
        .chars()
        .map(|c| match c {
            'E' | 'e' => Ok(Player::Existential),
            'U' | 'u' | 'A' | 'a' => Ok(Player::Universal),
            other => Err(bad(format!("unknown player `{other}`, use E or U"))),
        })
        .collect::<Result<_, _>>()?;
    if roles.len() != n {
        return Err(bad(format!("{} roles for {n} vertices", roles.len())));
    }
    Ok(roles)
}

fn game_state(args: &GameArgs) -> Result<GameState, CliError> {
    let g = read_graph(&args.g)?;
    let n = g.vertex_count();
    let order = match &args.order {
        Some(o) => VertexOrder::new(o.clone()).map_err(|e| input_error(Path::new("--order"), e))?,
        None => VertexOrder::identity(n),
    };
    let roles = match &args.roles {
        Some(r) => parse_roles(r, n)?,
        None => alternating_roles(n),
    };
    Ok(GameState::new(g, order, args.k, Some(roles))?)
}

fn colours(set: c123::ColourSet) -> String {
    let list: Vec<String> = set.iter().map(|c| c.to_string()).collect();
    format!("{{{}}}", list.join(","))
}

fn hom(g: &Path, h: &Path, mode: ModeArg, decomposition: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let (g_graph, h_graph) = (read_graph(g)?, read_graph(h)?);
    if let Some(path) = decomposition {
        let d = parse_decomposition(&read(path)?).map_err(|e| input_error(path, e))?;
        if !matches!(mode, ModeArg::Plain) {
            return Err(input_error(Path::new("--mode"), "the decomposition engine supports plain only"));
        }
        let yes = hom_exists_pw(&g_graph, &h_graph, &d)?;
        writeln!(out, "{}", if yes { "yes" } else { "no" })?;
        return Ok(Answer::of(yes));
    }
    match hom_exists(&g_graph, &h_graph, mode.into())? {
        Some(w) => {
            writeln!(out, "yes")?;
            let pairs: Vec<String> = w.mapping.iter().enumerate().map(|(v, t)| format!("{v}->{t}")).collect();
            writeln!(out, "mapping {}", pairs.join(" "))?;
            Ok(Answer::Yes)
        }
        None => {
            writeln!(out, "no")?;
            Ok(Answer::No)
        }
    }
}

fn width(g: &Path, measure: Measure, cap: usize, certificate: Option<&Path>, out: &mut dyn Write) -> Outcome {
    let graph = read_graph(g)?;
    let (name, value, text) = match measure {
        Measure::Pw => {
            let c = pathwidth_with_cap(&graph, cap)?;
            ("pw", c.value, write_decomposition(&c.certificate))
        }
        Measure::Tw => {
            let c = treewidth_with_cap(&graph, cap)?;
            ("tw", c.value, to_json(&c.certificate))
        }
        Measure::Td => {
            let c = treedepth_with_cap(&graph, cap)?;
            ("td", c.value, to_json(&c.certificate))
        }
        Measure::Vsn => {
            let c = min_vertex_separation_with_cap(&graph, cap)?;
            ("vsn", c.value, to_json(&c.certificate))
        }
    };
    writeln!(out, "{name} {value}")?;
    if let Some(path) = certificate {
        write_file(path, &text)?;
    }
    Ok(Answer::Yes)
}

fn qcsp_eval(input: &Path, any_lists: bool, cap: usize, out: &mut dyn Write) -> Outcome {
    let inst: QcspInstance = read_json(input)?;
    inst.validate(any_lists).map_err(|e| input_error(input, e))?;
    let truth = qcsp_eval_with(&inst, QcspOptions { any_lists, cap })?;
    writeln!(out, "{truth}")?;
    Ok(Answer::of(truth))
}

fn game_solve(args: &GameArgs, out: &mut dyn Write) -> Outcome {
    let state = game_state(args)?;
    let analysis = state.analyse();
    writeln!(out, "winner {:?}", analysis.winner)?;
    if let Some(v) = state.next_vertex() {
        writeln!(
            out,
            "first mover {:?} on vertex {v}, winning colours {}",
            state.turn().expect("in progress"),
            colours(analysis.non_losing)
        )?;
    }
    Ok(Answer::Yes)
}

fn game_play(args: &GameArgs, human: Player, input: &mut dyn BufRead, out: &mut dyn Write) -> Outcome {
    let mut state = game_state(args)?;
    let mut lines = input.lines();
    while state.status() == GameStatus::InProgress {
        let mover = state.turn().expect("in progress");
        let v = state.next_vertex().expect("in progress");
        if mover == human {
            writeln!(out, "vertex {v}: your move ({mover:?}), legal {}", colours(state.legal_moves()))?;
            out.flush()?;
            let Some(line) = lines.next() else {
                writeln!(out, "input closed")?;
                return Ok(Answer::Yes);
            };
            let line = line?;
            let Ok(colour) = line.trim().parse::<u8>() else {
                writeln!(out, "not a colour: {}", line.trim())?;
                continue;
            };
            match state.apply_move(colour) {
                Ok(next) => state = next,
                Err(e) => writeln!(out, "rejected: {e}")?,
            }
        } else {
            let analysis = state.analyse();
            let colour = analysis
                .non_losing
                .iter()
                .next()
                .or_else(|| state.legal_moves().iter().next())
                .expect("a stuck mover has already lost");
            writeln!(out, "vertex {v}: engine ({mover:?}) plays {colour}")?;
            state = state.apply_move(colour).map_err(c123::Error::from)?;
        }
    }
    writeln!(out, "{:?}", state.status())?;
    Ok(Answer::Yes)
}

fn reduce(args: &ReduceArgs, out: &mut dyn Write) -> Outcome {
    let input = args.input.as_path();
    let mut graph_out: Option<Graph> = None;
    let text = match args.kind {
        ReduceKind::QbfToQnae => to_json(&reduce_qbf_to_qnae(&read_qbf(input)?)?.instance),
        ReduceKind::QnaeToQcsp => {
            let image = reduce_qnae_to_qcsp(&read_qnae(input)?)?;
            graph_out = Some(image.graph);
            to_json(&image.instance)
        }
        ReduceKind::QbfToQcsp => {
            let f = read_qbf(input)?;
            let primal = primal_graph(f.var_count(), &f.clauses);
            let d = pathwidth_with_cap(&primal, DEFAULT_VERTEX_CAP)?;
            let lift = lift_decomposition_phi2(&f, &d.certificate)?;
            writeln!(
                out,
                "primal pathwidth {}, image certificate width {} (9w+2 = {})",
                lift.source_width,
                lift.width(),
                lift.bound()
            )?;
            if let Some(path) = &args.emit_decomposition {
                write_file(path, &write_decomposition(&lift.decomposition))?;
            }
            graph_out = Some(lift.image.graph);
            to_json(&lift.image.instance)
        }
        ReduceKind::ThreeColSubdivision => {
            let out_graph = reduce_3col_by_subdivision(&read_graph(input)?, args.r)?;
            writeln!(
                out,
                "target C{}{}",
                out_graph.target.vertex_count(),
                if out_graph.augmented { ", input triangle-augmented" } else { "" }
            )?;
            write_graph(&out_graph.graph)
        }
        ReduceKind::C5Chain => write_graph(&c5_chain_reduce(&read_graph(input)?)),
        ReduceKind::LocalHom => {
            let (gr, k4r) = local_hom_subdivision_pair(&read_graph(input)?, args.r as usize)?;
            graph_out = Some(k4r);
            write_graph(&gr)
        }
        ReduceKind::ListGadget => {
            let image = reduce_pik_qnae_to_list_qcsp(&read_qnae(input)?, args.p)?;
            graph_out = Some(image.graph);
            to_json(&image.instance)
        }
        ReduceKind::EdpToLong => to_json(&reduce_edp_to_long_edp(&read_edp(input)?)?),
    };
    write_file(&args.out, &text)?;
    if let (Some(path), Some(g)) = (&args.emit_graph, graph_out) {
        write_file(path, &write_graph(&g))?;
    }
    Ok(Answer::Yes)
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Outcome {
    let suite = match args.suite {
        SuiteKind::QbfToQcsp => Suite::QbfToQcsp {
            max_vars: args.vars,
            max_clauses: args.clauses,
            max_width: args.width,
        },
        SuiteKind::Reduction3col => Suite::ThreeColSubdivision { max_n: args.n, r: args.r },
        SuiteKind::C5Chain => Suite::C5Chain { max_n: args.n },
        SuiteKind::LocalHom => Suite::LocalHom {
            max_n: args.n,
            r: args.r as usize,
            mode: args.mode.into(),
        },
        SuiteKind::ListGadget => Suite::ListGadget {
            max_vars: args.vars,
            max_triples: args.triples,
            p: args.p,
        },
        SuiteKind::EdpLong => Suite::EdpToLongEdp {
            max_n: args.n,
            max_pairs: args.pairs,
        },
    };
    let report = verify_reduction(suite)?;
    if args.json {
        write!(out, "{}", to_json(&report))?;
    } else {
        writeln!(out, "{report}")?;
    }
    Ok(Answer::of(report.agrees))
}

fn classify(hs: &[PathBuf], out: &mut dyn Write) -> Outcome {
    let graphs = hs.iter().map(|p| read_graph(p)).collect::<Result<Vec<_>, _>>()?;
    let verdict = theorem1_classify(&graphs)?;
    match verdict.witness {
        Some(i) => writeln!(out, "{:?} (witness {})", verdict.verdict, hs[i].display())?,
        None => writeln!(out, "{:?}", verdict.verdict)?,
    }
    Ok(Answer::Yes)
}

fn edp(args: &EdpArgs, out: &mut dyn Write) -> Outcome {
    let inst = match (&args.input, &args.g, &args.pairs) {
        (Some(path), _, _) => read_edp(path)?,
        (None, Some(g), Some(pairs)) => EdpInstance::new(read_graph(g)?, parse_pairs(pairs)?, args.min_length)
            .map_err(|e| input_error(Path::new("--pairs"), e))?,
        _ => return Err(input_error(Path::new("edp"), "give --in, or --g with --pairs")),
    };
    let paths = match args.bounded_depth {
        Some(m) => edp_solve_bounded_depth(&inst, m)?,
        None => edp_solve(&inst)?,
    };
    match paths {
        Some(paths) => {
            writeln!(out, "yes")?;
            for (p, (s, t)) in paths.iter().zip(&inst.pairs) {
                let walk: Vec<String> = p.iter().map(|v| v.to_string()).collect();
                writeln!(out, "{s}-{t}: {}", walk.join(" "))?;
            }
            Ok(Answer::Yes)
        }
        None => {
            writeln!(out, "no")?;
            Ok(Answer::No)
        }
    }
}

fn json_lines<T: Serialize>(items: impl IntoIterator<Item = T>, out: &mut dyn Write) -> Result<usize, CliError> {
    let mut count = 0;
    for item in items {
        writeln!(out, "{}", serde_json::to_string(&item).expect("plain data serializes"))?;
        count += 1;
    }
    Ok(count)
}

fn generate(corpus: &Corpus, out: &mut dyn Write) -> Outcome {
    let count = match *corpus {
        Corpus::Graphs { n, connected } => {
            let graphs = if connected { connected_graphs_up_to(n) } else { all_graphs_up_to(n) };
            json_lines(graphs, out)?
        }
        Corpus::Prefixes { n } => json_lines(prefixes(n), out)?,
        Corpus::Qbf { vars, clauses, width } => json_lines(qbf_corpus(vars, clauses, width), out)?,
        Corpus::Qcsp {
            n,
            seed: Some(seed),
            count,
            edge_probability,
        } => {
            let mut random = RandomCorpus::new(seed);
            json_lines((0..count).map(|_| random.qcsp(n, edge_probability)), out)?
        }
        Corpus::Qcsp { n, seed: None, .. } => json_lines(qcsp_corpus(n), out)?,
        Corpus::Edp { n, pairs } => json_lines(edp_corpus(n, pairs), out)?,
    };
    eprintln!("{count} instances");
    Ok(Answer::Yes)
}

fn serve(port: u16, bind: std::net::IpAddr, log: Option<&Path>) -> Outcome {
    let store = match log {
        Some(path) => Store::with_log(path).map_err(|e| input_error(path, e))?,
        None => Store::new(),
    };
    let runtime = tokio::runtime::Runtime::new()?;
    runtime.block_on(server::serve(Arc::new(store), SocketAddr::new(bind, port)))?;
    Ok(Answer::Yes)
}

pub fn run(cli: &Cli, input: &mut dyn BufRead, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Hom {
            g,
            h,
            mode,
            decomposition,
        } => hom(g, h, *mode, decomposition.as_deref(), out),
        Command::Width {
            g,
            measure,
            cap,
            certificate,
        } => width(g, *measure, *cap, certificate.as_deref(), out),
        Command::Qcsp {
            command: QcspCommand::Eval { input, any_lists, cap },
        } => qcsp_eval(input, *any_lists, *cap, out),
        Command::Game {
            command: GameCommand::Solve(args),
        } => game_solve(args, out),
        Command::Game {
            command: GameCommand::Play { game, human },
        } => game_play(game, (*human).into(), input, out),
        Command::Reduce(args) => reduce(args, out),
        Command::Verify(args) => verify(args, out),
        Command::Classify { hs } => classify(hs, out),
        Command::Edp(args) => edp(args, out),
        Command::Generate { corpus } => generate(corpus, out),
        Command::Serve { port, bind, log } => serve(*port, *bind, log.as_deref()),
    }
}
