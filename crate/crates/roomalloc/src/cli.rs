//! Subcommands of the `roomalloc` binary.
//!
//! Exit codes: 0 success, 1 bad input, 2 infeasible request, 3 `eval` found
//! constraint violations.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use roomalloc_core::instances::{
    build_networks, extract_relations, gen_planted, gen_scale_free, planted_p_out_for_degree,
    Gender, KindCounts, Network, RelationEdge,
};
use roomalloc_core::{
    capacity_for, curve, exact_with_bound, hfa, lga, objective, random_baseline, stats, validate,
    AdjustPlan, Assignment, Error as CoreError, Graph, MoveRecord, SolverConfig, StopReason,
    DEFAULT_EXACT_BOUND,
};
use serde::Serialize;

use crate::formats::{
    assignment::{read_assignment, write_assignment},
    dot::write_dot,
    edgelist::write_edge_list,
    graphml::write_graphml,
    moves::{write_curve, write_moves},
    parse_graph,
    records::parse_records,
    FormatError,
};
use crate::manifest::{FileDigest, RunManifest};
use crate::presets::PlantedPreset;
use crate::report::{to_json, CountsJson, ObjectiveJson, StatsJson};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT: u8 = 1;
pub const EXIT_INFEASIBLE: u8 = 2;
pub const EXIT_VIOLATIONS: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn core(context: &str, e: CoreError) -> Self {
        let code = match e {
            CoreError::TooManyRooms { .. } | CoreError::InstanceTooLarge { .. } => EXIT_INFEASIBLE,
            _ => EXIT_INPUT,
        };
        CliError {
            code,
            message: format!("{context}: {e}"),
        }
    }

    fn format(context: &Path, e: FormatError) -> Self {
        match e {
            FormatError::Core(core) => CliError::core(&context.display().to_string(), core),
            other => CliError::input(format!("{}: {other}", context.display())),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "roomalloc",
    version,
    about = "Allocate people to rooms so that few related people share one"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the male and female relation networks from a record CSV.
    Extract(ExtractArgs),
    /// Generate a synthetic network as an edge list.
    Generate(GenerateArgs),
    /// Assign every node to a room.
    Allocate(AllocateArgs),
    /// Improve an assignment with at most M single-node relocations.
    Adjust(AdjustArgs),
    /// Objective after each of up to M relocations, as CSV.
    Curve(CurveArgs),
    /// Check an assignment and report its objective.
    Eval(EvalArgs),
    /// Write the graph with rooms as DOT or GraphML.
    Export(ExportArgs),
}

#[derive(Debug, Args)]
pub struct ExtractArgs {
    /// Record CSV.
    pub records: PathBuf,
    #[arg(long)]
    pub out_dir: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Planted,
    Scalefree,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum, default_value = "planted")]
    pub model: Model,
    /// Planted-partition setting matching a reference network: am, af, bm or
    /// bf. Explicit flags override its values.
    #[arg(long)]
    pub preset: Option<String>,
    #[arg(long)]
    pub nodes: Option<usize>,
    #[arg(long)]
    pub blocks: Option<usize>,
    #[arg(long)]
    pub p_in: Option<f64>,
    #[arg(long, conflicts_with = "avg_degree")]
    pub p_out: Option<f64>,
    /// Derive `p_out` from this expected average degree.
    #[arg(long)]
    pub avg_degree: Option<f64>,
    /// Links added per new node (scale-free).
    #[arg(long, default_value_t = 3)]
    pub attach: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub output: PathBuf,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Hfa,
    Exact,
    Random,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Hfa => "hfa",
            Method::Exact => "exact",
            Method::Random => "random",
        }
    }
}

#[derive(Debug, Args)]
pub struct AllocateArgs {
    /// Edge list, or GraphML with a `.graphml` extension.
    pub graph: PathBuf,
    #[arg(long, required_unless_present = "from", conflicts_with = "from")]
    pub rooms: Option<usize>,
    /// Take the room count from an existing assignment.
    #[arg(long)]
    pub from: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "hfa")]
    pub method: Method,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Largest node count `exact` accepts.
    #[arg(long, default_value_t = DEFAULT_EXACT_BOUND)]
    pub exact_bound: usize,
    #[arg(long)]
    pub out_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct AdjustArgs {
    pub graph: PathBuf,
    pub assignment: PathBuf,
    /// Relocation budget.
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Let a moved node be queued again.
    #[arg(long)]
    pub allow_reentry: bool,
    /// Keep moving even when the best relocation does not lower the objective.
    #[arg(long)]
    pub no_stop: bool,
    #[arg(long)]
    pub out_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    pub graph: PathBuf,
    pub assignment: PathBuf,
    #[arg(long)]
    pub m_max: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Defaults to stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    pub graph: PathBuf,
    pub assignment: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Graphml,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    pub graph: PathBuf,
    pub assignment: PathBuf,
    #[arg(long, value_enum)]
    pub format: ExportFormat,
    /// Defaults to stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Runs a parsed command, writing its report to `stdout`. Returns the exit
/// code for completed runs.
pub fn run(cli: Cli, stdout: &mut dyn std::io::Write) -> CliResult<u8> {
    match cli.command {
        Command::Extract(a) => extract(a, stdout),
        Command::Generate(a) => generate(a, stdout),
        Command::Allocate(a) => allocate(a, stdout),
        Command::Adjust(a) => adjust(a, stdout),
        Command::Curve(a) => curve_cmd(a, stdout),
        Command::Eval(a) => eval(a, stdout),
        Command::Export(a) => export(a, stdout),
    }
}

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path, m: &mut RunManifest) -> CliResult<Graph> {
    let text = read_text(path)?;
    m.inputs
        .push(FileDigest::of(path.display().to_string(), text.as_bytes()));
    parse_graph(path, &text).map_err(|e| CliError::format(path, e))
}

fn load_assignment(path: &Path, m: &mut RunManifest) -> CliResult<Assignment> {
    let text = read_text(path)?;
    m.inputs
        .push(FileDigest::of(path.display().to_string(), text.as_bytes()));
    read_assignment(&text).map_err(|e| CliError::format(path, e))
}

fn write_file(path: &Path, contents: &str, m: Option<&mut RunManifest>) -> CliResult<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent)
            .map_err(|e| CliError::input(format!("{}: {e}", parent.display())))?;
    }
    fs::write(path, contents).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    if let Some(m) = m {
        // Outputs are named relative to their directory so that reruns into
        // another directory produce the same manifest.
        let name = path.file_name().map_or_else(
            || path.display().to_string(),
            |f| f.to_string_lossy().into_owned(),
        );
        m.outputs.push(FileDigest::of(name, contents.as_bytes()));
    }
    Ok(())
}

fn finish_manifest(mut m: RunManifest, path: &Path) -> CliResult<()> {
    m.finish();
    write_file(path, &to_json(&m), None)
}

fn emit(stdout: &mut dyn std::io::Write, text: &str) -> CliResult<()> {
    stdout
        .write_all(text.as_bytes())
        .map_err(|e| CliError::input(format!("stdout: {e}")))
}

fn resolve_seed(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(|| {
        let s = rand::random();
        log::info!("no --seed given, using {s}");
        s
    })
}

// ---- extract ----

#[derive(Serialize)]
struct ExtractionReport {
    source: String,
    records: usize,
    warnings: Vec<String>,
    relation_counts: CountsJson,
    male: NetworkReport,
    female: NetworkReport,
}

#[derive(Serialize)]
struct NetworkReport {
    edge_list: String,
    stats: StatsJson,
    relation_counts: CountsJson,
    /// Assignment built from the recorded room labels, when complete.
    manual_assignment: Option<String>,
    room_labels: Option<Vec<String>>,
    manual_objective: Option<ObjectiveJson>,
}

fn extract(args: ExtractArgs, stdout: &mut dyn std::io::Write) -> CliResult<u8> {
    let mut m = RunManifest::start("extract");
    let text = read_text(&args.records)?;
    m.inputs.push(FileDigest::of(
        args.records.display().to_string(),
        text.as_bytes(),
    ));
    let (records, warnings) =
        parse_records(text.as_bytes()).map_err(|e| CliError::format(&args.records, e))?;
    for w in &warnings {
        log::warn!("{w}");
    }
    let edges = extract_relations(&records);
    let source = args.records.file_name().map_or_else(
        || args.records.display().to_string(),
        |f| f.to_string_lossy().into_owned(),
    );
    let bundle = build_networks(&source, &records, &edges);

    let mut network_report = |gender: Gender, stem: &str| -> CliResult<NetworkReport> {
        let net: &Network = bundle.network(gender);
        let edge_list = format!("{stem}.tsv");
        let body = write_edge_list(&net.graph).map_err(|e| CliError::format(&args.records, e))?;
        write_file(&args.out_dir.join(&edge_list), &body, Some(&mut m))?;
        let own: Vec<RelationEdge> = edges
            .iter()
            .filter(
                |e| match (net.graph.index_of(&e.a), net.graph.index_of(&e.b)) {
                    (Some(x), Some(y)) => net.graph.has_edge(x, y),
                    _ => false,
                },
            )
            .cloned()
            .collect();
        let mut report = NetworkReport {
            edge_list,
            stats: StatsJson::from(&stats(&net.graph)),
            relation_counts: KindCounts::of(&own).into(),
            manual_assignment: None,
            room_labels: None,
            manual_objective: None,
        };
        if let Some(manual) = &net.manual {
            let file = format!("{stem}_manual.json");
            write_file(
                &args.out_dir.join(&file),
                &write_assignment(&manual.assignment),
                Some(&mut m),
            )?;
            let obj = objective(&net.graph, &manual.assignment)
                .map_err(|e| CliError::core("manual assignment", e))?;
            report.manual_assignment = Some(file);
            report.room_labels = Some(manual.labels.clone());
            report.manual_objective = Some(ObjectiveJson::from(&obj));
        }
        Ok(report)
    };
    let male = network_report(Gender::Male, "male")?;
    let female = network_report(Gender::Female, "female")?;

    let report = ExtractionReport {
        source: bundle.provenance.source.clone(),
        records: bundle.provenance.records,
        warnings: warnings.iter().map(ToString::to_string).collect(),
        relation_counts: bundle.provenance.counts.into(),
        male,
        female,
    };
    let json = to_json(&report);
    write_file(&args.out_dir.join("extraction.json"), &json, Some(&mut m))?;
    finish_manifest(m, &args.out_dir.join("manifest.json"))?;
    emit(stdout, &json)?;
    Ok(EXIT_OK)
}

// ---- generate ----

fn generate(args: GenerateArgs, stdout: &mut dyn std::io::Write) -> CliResult<u8> {
    let mut m = RunManifest::start("generate");
    let seed = resolve_seed(args.seed);
    m.seed = Some(seed);
    let preset = match &args.preset {
        Some(name) => Some(
            PlantedPreset::by_name(name)
                .ok_or_else(|| CliError::input(format!("unknown preset `{name}`")))?,
        ),
        None => None,
    };
    let graph = match args.model {
        Model::Planted => {
            let nodes = args.nodes.or(preset.map(|p| p.nodes));
            let blocks = args.blocks.or(preset.map(|p| p.blocks));
            let p_in = args.p_in.or(preset.map(|p| p.p_in));
            let (Some(nodes), Some(blocks), Some(p_in)) = (nodes, blocks, p_in) else {
                return Err(CliError::input(
                    "planted model needs --nodes, --blocks and --p-in (or --preset)",
                ));
            };
            let avg_degree = args.avg_degree.or(if args.p_out.is_none() {
                preset.map(|p| p.avg_degree)
            } else {
                None
            });
            let p_out = match (args.p_out, avg_degree) {
                (Some(p), _) => p,
                (None, Some(d)) => planted_p_out_for_degree(nodes, blocks, p_in, d)
                    .map_err(|e| CliError::core("calibration", e))?,
                (None, None) => {
                    return Err(CliError::input(
                        "planted model needs --p-out or --avg-degree",
                    ))
                }
            };
            m.param("model", "planted");
            m.param("nodes", nodes);
            m.param("blocks", blocks);
            m.param("p_in", p_in);
            m.param("p_out", p_out);
            if let Some(p) = preset {
                m.param("preset", p.name);
            }
            gen_planted(nodes, blocks, p_in, p_out, seed)
        }
        Model::Scalefree => {
            let nodes = args
                .nodes
                .ok_or_else(|| CliError::input("scale-free model needs --nodes"))?;
            m.param("model", "scalefree");
            m.param("nodes", nodes);
            m.param("attach", args.attach);
            gen_scale_free(nodes, args.attach, seed)
        }
    }
    .map_err(|e| CliError::core("generate", e))?;

    let body = write_edge_list(&graph).map_err(|e| CliError::format(&args.output, e))?;
    write_file(&args.output, &body, Some(&mut m))?;
    if let Some(path) = &args.manifest {
        finish_manifest(m, path)?;
    }
    emit(stdout, &to_json(&StatsJson::from(&stats(&graph))))?;
    Ok(EXIT_OK)
}

// ---- allocate ----

#[derive(Serialize)]
struct AllocationReport {
    method: &'static str,
    rooms: usize,
    capacity: usize,
    seed: u64,
    objective: ObjectiveJson,
    stats: StatsJson,
}

fn allocate(args: AllocateArgs, stdout: &mut dyn std::io::Write) -> CliResult<u8> {
    let mut m = RunManifest::start("allocate");
    let g = load_graph(&args.graph, &mut m)?;
    let rooms = match (&args.from, args.rooms) {
        (Some(path), _) => load_assignment(path, &mut m)?.room_count(),
        (None, Some(k)) => k,
        (None, None) => unreachable!("clap requires --rooms or --from"),
    };
    let seed = resolve_seed(args.seed);
    m.rooms = Some(rooms);
    m.seed = Some(seed);
    m.method = Some(args.method.name().to_string());
    if args.method == Method::Exact {
        m.param("exact_bound", args.exact_bound);
    }

    let (assignment, moves): (Assignment, Vec<MoveRecord>) = match args.method {
        Method::Hfa => {
            let out =
                hfa(&g, &SolverConfig::new(rooms, seed)).map_err(|e| CliError::core("hfa", e))?;
            (out.assignment, out.moves)
        }
        Method::Exact => {
            let out = exact_with_bound(&g, rooms, args.exact_bound)
                .map_err(|e| CliError::core("exact", e))?;
            (out.assignment, Vec::new())
        }
        Method::Random => {
            let a = random_baseline(&g, rooms, seed).map_err(|e| CliError::core("random", e))?;
            (a, Vec::new())
        }
    };
    m.capacity = Some(assignment.capacity());
    let obj = objective(&g, &assignment).map_err(|e| CliError::core("objective", e))?;
    let report = AllocationReport {
        method: args.method.name(),
        rooms,
        capacity: assignment.capacity(),
        seed,
        objective: ObjectiveJson::from(&obj),
        stats: StatsJson::from(&stats(&g)),
    };
    let dir = &args.out_dir;
    write_file(
        &dir.join("assignment.json"),
        &write_assignment(&assignment),
        Some(&mut m),
    )?;
    write_file(&dir.join("moves.json"), &write_moves(&moves), Some(&mut m))?;
    write_file(&dir.join("report.json"), &to_json(&report), Some(&mut m))?;
    finish_manifest(m, &dir.join("manifest.json"))?;
    emit(stdout, &format!("{}\n", obj.intra_links))?;
    Ok(EXIT_OK)
}

// ---- adjust ----

#[derive(Serialize)]
struct AdjustReport {
    budget: usize,
    seed: u64,
    allow_reentry: bool,
    stop_on_no_gain: bool,
    moves: usize,
    before: ObjectiveJson,
    after: ObjectiveJson,
    stop_reason: &'static str,
    note: Option<&'static str>,
}

fn stop_name(s: StopReason) -> &'static str {
    match s {
        StopReason::BudgetExhausted => "budget_exhausted",
        StopReason::NoImprovingMove => "no_improving_move",
        StopReason::NoFeasibleMove => "no_feasible_move",
        StopReason::QueueEmpty => "queue_empty",
    }
}

fn check_feasible(g: &Graph, a: &Assignment, path: &Path) -> CliResult<()> {
    let violations = validate(g, a);
    if violations.is_empty() {
        return Ok(());
    }
    let list: Vec<String> = violations.iter().map(ToString::to_string).collect();
    Err(CliError::input(format!(
        "{}: infeasible assignment: {}",
        path.display(),
        list.join("; ")
    )))
}

fn adjust(args: AdjustArgs, stdout: &mut dyn std::io::Write) -> CliResult<u8> {
    let mut m = RunManifest::start("adjust");
    let g = load_graph(&args.graph, &mut m)?;
    let start = load_assignment(&args.assignment, &mut m)?;
    check_feasible(&g, &start, &args.assignment)?;
    let seed = resolve_seed(args.seed);
    let plan = AdjustPlan {
        budget: args.m,
        stop_on_no_gain: !args.no_stop,
        allow_reentry: args.allow_reentry,
    };
    m.rooms = Some(start.room_count());
    m.capacity = Some(start.capacity());
    m.seed = Some(seed);
    m.method = Some("lga".into());
    m.budget = Some(args.m);
    m.param("allow_reentry", args.allow_reentry);
    m.param("stop_on_no_gain", plan.stop_on_no_gain);

    let before = objective(&g, &start).map_err(|e| CliError::core("objective", e))?;
    let out = lga(&g, &start, &plan, seed).map_err(|e| CliError::core("adjust", e))?;
    let after = objective(&g, &out.assignment).map_err(|e| CliError::core("objective", e))?;
    let early = matches!(
        out.stop,
        StopReason::NoImprovingMove | StopReason::NoFeasibleMove
    );
    let note = early.then_some("no improving feasible move");
    if let Some(n) = note {
        log::info!("stopped after {} of {} moves: {n}", out.moves.len(), args.m);
    }
    let report = AdjustReport {
        budget: args.m,
        seed,
        allow_reentry: args.allow_reentry,
        stop_on_no_gain: plan.stop_on_no_gain,
        moves: out.moves.len(),
        before: ObjectiveJson::from(&before),
        after: ObjectiveJson::from(&after),
        stop_reason: stop_name(out.stop),
        note,
    };
    let json = to_json(&report);
    let dir = &args.out_dir;
    write_file(
        &dir.join("assignment.json"),
        &write_assignment(&out.assignment),
        Some(&mut m),
    )?;
    write_file(
        &dir.join("moves.json"),
        &write_moves(&out.moves),
        Some(&mut m),
    )?;
    write_file(&dir.join("report.json"), &json, Some(&mut m))?;
    finish_manifest(m, &dir.join("manifest.json"))?;
    emit(stdout, &json)?;
    Ok(EXIT_OK)
}

// ---- curve ----

fn curve_cmd(args: CurveArgs, stdout: &mut dyn std::io::Write) -> CliResult<u8> {
    let mut m = RunManifest::start("curve");
    let g = load_graph(&args.graph, &mut m)?;
    let start = load_assignment(&args.assignment, &mut m)?;
    check_feasible(&g, &start, &args.assignment)?;
    let seed = resolve_seed(args.seed);
    m.rooms = Some(start.room_count());
    m.capacity = Some(start.capacity());
    m.seed = Some(seed);
    m.method = Some("lga".into());
    m.budget = Some(args.m_max);
    let points = curve(&g, &start, args.m_max, seed).map_err(|e| CliError::core("curve", e))?;
    let csv = write_curve(&points);
    match &args.output {
        Some(path) => write_file(path, &csv, Some(&mut m))?,
        None => {
            m.outputs.push(FileDigest::of("-", csv.as_bytes()));
            emit(stdout, &csv)?;
        }
    }
    if let Some(path) = &args.manifest {
        finish_manifest(m, path)?;
    }
    Ok(EXIT_OK)
}

// ---- eval ----

#[derive(Serialize)]
struct EvalReport {
    feasible: bool,
    rooms: usize,
    capacity: usize,
    violations: Vec<String>,
    room_sizes: Vec<usize>,
    objective: Option<ObjectiveJson>,
    stats: StatsJson,
}

fn eval(args: EvalArgs, stdout: &mut dyn std::io::Write) -> CliResult<u8> {
    let mut m = RunManifest::start("eval");
    let g = load_graph(&args.graph, &mut m)?;
    let a = load_assignment(&args.assignment, &mut m)?;
    let violations = validate(&g, &a);
    // The objective is defined whenever every node has a valid room, even if
    // some room is over capacity.
    let obj = objective(&g, &a).ok();
    let report = EvalReport {
        feasible: violations.is_empty(),
        rooms: a.room_count(),
        capacity: a.capacity(),
        violations: violations.iter().map(ToString::to_string).collect(),
        room_sizes: a.room_sizes(),
        objective: obj.as_ref().map(ObjectiveJson::from),
        stats: StatsJson::from(&stats(&g)),
    };
    emit(stdout, &to_json(&report))?;
    if violations.is_empty() {
        Ok(EXIT_OK)
    } else {
        for v in &violations {
            log::warn!("{v}");
        }
        Ok(EXIT_VIOLATIONS)
    }
}

// ---- export ----

fn export(args: ExportArgs, stdout: &mut dyn std::io::Write) -> CliResult<u8> {
    let mut m = RunManifest::start("export");
    let g = load_graph(&args.graph, &mut m)?;
    let a = load_assignment(&args.assignment, &mut m)?;
    let expected = capacity_for(g.node_count(), a.room_count()).ok();
    if expected.is_some_and(|s| s != a.capacity()) {
        log::warn!(
            "assignment capacity {} differs from ceil(|V|/K)",
            a.capacity()
        );
    }
    let text = match args.format {
        ExportFormat::Dot => write_dot(&g, &a),
        ExportFormat::Graphml => write_graphml(&g, &a),
    };
    match &args.output {
        Some(path) => write_file(path, &text, None)?,
        None => emit(stdout, &text)?,
    }
    Ok(EXIT_OK)
}

/// Entry point shared by the binary: parses `args`, runs, and returns the
/// process exit code. Errors go to stderr.
pub fn main_with_args<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let code = match run(cli, &mut lock) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    };
    let _ = lock.flush();
    code
}
