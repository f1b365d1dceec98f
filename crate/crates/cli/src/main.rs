//! planext: build and certify extremal planar graph constructions, audit
//! the supporting inequalities on embeddings, and run exact extremal
//! searches.
//!
//! Exit codes: 0 success, 1 a mathematical check failed, 2 usage or input
//! error, 3 search budget exhausted.

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::Rational64;
use planext_core::audit::{audit_c4, audit_c5, AuditReport};
use planext_core::bounds::{floor_of, BoundForm};
use planext_core::constructions as cons;
use planext_core::embedding::{face_profile, PlaneGraph};
use planext_core::graph::AbstractGraph;
use planext_core::io as gio;
use planext_core::patterns::{find_pattern, ForbiddenPattern};
use planext_core::reduce::{reduce_k4_centers, reduce_prime};
use planext_core::search::{extremal_search, SearchConfig};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "planext", version, about = "extremal planar graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    G6,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum InFormat {
    Json,
    G6,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceMode {
    Prime,
    K4centers,
}

#[derive(Subcommand)]
enum Command {
    /// Generate one of the named graph families
    Construct {
        /// icosidodecahedron | c4-family | complete-bipartite-2 |
        /// double-wheel | figure5 | triangulation-t | c5-family |
        /// diamond-holder | snowflake
        family: String,
        /// family index for c4-family, triangulation-t, c5-family
        #[arg(long)]
        k: Option<usize>,
        /// vertex count for complete-bipartite-2 and double-wheel
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
        /// output path; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Test a graph for freeness of a forbidden pattern
    Check {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        format: Option<InFormat>,
        /// c<k>, k<r>, or custom:<graph6 file>
        #[arg(long)]
        free: String,
        /// also require a valid sphere embedding (JSON input only)
        #[arg(long)]
        embedding: bool,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the proof inequalities on an embedded graph
    Audit {
        #[arg(long)]
        input: PathBuf,
        /// c4 or c5
        #[arg(long)]
        forbid: String,
        #[arg(long)]
        json: bool,
    },
    /// Apply an embedding reduction
    Reduce {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        mode: ReduceMode,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: OutFormat,
        #[arg(long)]
        json: bool,
    },
    /// Exact extremal number by exhaustive search
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        forbid: String,
        #[arg(long)]
        workers: Option<usize>,
        /// wall-clock budget in seconds
        #[arg(long)]
        budget: Option<f64>,
        #[arg(long, default_value = "100")]
        witness_cap: usize,
        /// restrict to 2-connected graphs of minimum degree 3
        #[arg(long)]
        restricted: bool,
        /// also count disconnected graphs
        #[arg(long)]
        allow_disconnected: bool,
        /// key=value file supplying defaults for workers and budget only
        #[arg(long)]
        config: Option<PathBuf>,
        /// zero out timing fields for byte-stable output
        #[arg(long)]
        deterministic: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print the applicable closed-form edge bounds exactly
    Bounds {
        #[arg(long)]
        n: usize,
        /// c3, c4, c5, or k4
        #[arg(long)]
        forbid: String,
        #[arg(long)]
        json: bool,
    },
}

/// Outcome of a command: exit code 0/1/2/3 per the contract above.
enum Outcome {
    Ok,
    CheckFailed,
    Usage(String),
    BudgetExhausted,
}

impl Outcome {
    fn code(self) -> ExitCode {
        match self {
            Outcome::Ok => ExitCode::from(0),
            Outcome::CheckFailed => ExitCode::from(1),
            Outcome::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            Outcome::BudgetExhausted => ExitCode::from(3),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    run(cli.command).code()
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Construct {
            family,
            k,
            n,
            format,
            out,
            json,
        } => cmd_construct(&family, k, n, format, out.as_deref(), json),
        Command::Check {
            input,
            format,
            free,
            embedding,
            json,
        } => cmd_check(&input, format, &free, embedding, json),
        Command::Audit {
            input,
            forbid,
            json,
        } => cmd_audit(&input, &forbid, json),
        Command::Reduce {
            input,
            mode,
            out,
            format,
            json,
        } => cmd_reduce(&input, mode, out.as_deref(), format, json),
        Command::Search {
            n,
            forbid,
            workers,
            budget,
            witness_cap,
            restricted,
            allow_disconnected,
            config,
            deterministic,
            json,
        } => cmd_search(
            n,
            &forbid,
            workers,
            budget,
            witness_cap,
            restricted,
            allow_disconnected,
            config.as_deref(),
            deterministic,
            json,
        ),
        Command::Bounds { n, forbid, json } => cmd_bounds(n, &forbid, json),
    }
}

fn rat_str(r: Rational64) -> String {
    if *r.denom() == 1 {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rat_json(r: Rational64) -> serde_json::Value {
    json!({"num": *r.numer(), "den": *r.denom()})
}

fn parse_pattern(spec: &str) -> Result<ForbiddenPattern, String> {
    if let Some(path) = spec.strip_prefix("custom:") {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read pattern file {path}: {e}"))?;
        let g = planext_core::read_graph6(text.trim())
            .map_err(|e| format!("pattern file {path}: {e}"))?;
        return ForbiddenPattern::custom(g).map_err(|e| e.to_string());
    }
    ForbiddenPattern::parse_named(spec).map_err(|e| e.to_string())
}

enum LoadedGraph {
    Embedded(PlaneGraph),
    Abstract(AbstractGraph),
}

fn load_input(path: &Path, format: Option<InFormat>) -> Result<LoadedGraph, String> {
    let inferred = match format {
        Some(f) => f,
        None => match path.extension().and_then(|e| e.to_str()) {
            Some("g6") => InFormat::G6,
            Some("json") => InFormat::Json,
            Some("dot") => return Err("dot files are output-only".into()),
            other => {
                return Err(format!(
                    "cannot infer input format from extension {other:?}; use --format"
                ))
            }
        },
    };
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    match inferred {
        InFormat::G6 => planext_core::read_graph6(text.trim())
            .map(LoadedGraph::Abstract)
            .map_err(|e| e.to_string()),
        InFormat::Json => gio::read_embedding_json(&text)
            .map(LoadedGraph::Embedded)
            .map_err(|e| e.to_string()),
    }
}

fn emit(content: &str, out: Option<&Path>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

fn render(pg: &PlaneGraph, format: OutFormat, name: &str) -> String {
    match format {
        OutFormat::Json => gio::write_embedding_json(pg),
        OutFormat::G6 => planext_core::write_graph6(pg.graph()),
        OutFormat::Dot => gio::write_dot(pg.graph(), name),
    }
}

fn face_summary(pg: &PlaneGraph) -> String {
    match face_profile(pg) {
        Ok(profile) => {
            let parts: Vec<String> = profile
                .f_i
                .iter()
                .map(|(size, count)| format!("f{size}={count}"))
                .collect();
            parts.join(" ")
        }
        Err(_) => "euler-invalid".into(),
    }
}

fn cmd_construct(
    family: &str,
    k: Option<usize>,
    n: Option<usize>,
    format: OutFormat,
    out: Option<&Path>,
    json: bool,
) -> Outcome {
    let need_k = || k.ok_or_else(|| format!("family {family} needs --k"));
    let need_n = || n.ok_or_else(|| format!("family {family} needs --n"));
    let built: Result<PlaneGraph, String> = (|| {
        Ok(match family {
            "icosidodecahedron" => cons::icosidodecahedron().pg,
            "c4-family" => cons::c4_family(need_k()?),
            "complete-bipartite-2" => cons::complete_bipartite_2(need_n()?)
                .map_err(|e| e.to_string())?,
            "double-wheel" => cons::double_wheel(need_n()?).map_err(|e| e.to_string())?,
            "figure5" => cons::figure5_graph(),
            "triangulation-t" => cons::triangulation_t(need_k()?)
                .map_err(|e| e.to_string())?
                .pg,
            "c5-family" => cons::c5_family(need_k()?).map_err(|e| e.to_string())?,
            "diamond-holder" => cons::diamond_holder().pg,
            "snowflake" => cons::snowflake().pg,
            other => return Err(format!("unknown family {other:?}")),
        })
    })();
    let pg = match built {
        Ok(pg) => pg,
        Err(msg) => return Outcome::Usage(msg),
    };
    let content = render(&pg, format, family);
    if let Err(msg) = emit(&content, out) {
        return Outcome::Usage(msg);
    }
    if json {
        let report = json!({
            "schema_version": SCHEMA_VERSION,
            "family": family,
            "k": k,
            "requested_n": n,
            "n": pg.n(),
            "e": pg.edge_count(),
            "faces": face_summary(&pg),
        });
        println!("{report}");
    } else {
        println!("n={} e={} {}", pg.n(), pg.edge_count(), face_summary(&pg));
    }
    Outcome::Ok
}

fn cmd_check(
    path: &Path,
    format: Option<InFormat>,
    free: &str,
    embedding: bool,
    json: bool,
) -> Outcome {
    let pattern = match parse_pattern(free) {
        Ok(p) => p,
        Err(msg) => return Outcome::Usage(msg),
    };
    let loaded = match load_input(path, format) {
        Ok(l) => l,
        Err(msg) => return Outcome::Usage(msg),
    };
    let (graph, euler) = match &loaded {
        LoadedGraph::Embedded(pg) => (pg.graph().clone(), Some(pg.euler_check())),
        LoadedGraph::Abstract(g) => {
            if embedding {
                return Outcome::Usage(
                    "--embedding needs an embedding JSON input, not graph6".into(),
                );
            }
            (g.clone(), None)
        }
    };
    let witness = find_pattern(&graph, &pattern);
    let euler_ok = !embedding || euler == Some(true);
    let free_ok = witness.is_none();
    if json {
        let report = json!({
            "schema_version": SCHEMA_VERSION,
            "pattern": pattern.label(),
            "pattern_free": free_ok,
            "witness": witness,
            "euler_checked": embedding,
            "euler_ok": euler,
        });
        println!("{report}");
    } else if let Some(w) = &witness {
        println!("contains {}: witness {:?}", pattern.label(), w);
    } else {
        println!("free of {}", pattern.label());
        if embedding {
            println!("euler check: {}", if euler_ok { "ok" } else { "FAILED" });
        }
    }
    if free_ok && euler_ok {
        Outcome::Ok
    } else {
        Outcome::CheckFailed
    }
}

fn report_to_json(report: &AuditReport) -> serde_json::Value {
    let entries: Vec<serde_json::Value> = report
        .entries
        .iter()
        .map(|e| {
            json!({
                "id": e.id,
                "description": e.description,
                "lhs": rat_json(e.lhs),
                "relation": e.relation.symbol(),
                "rhs": rat_json(e.rhs),
                "applicable": e.applicable,
                "holds": e.holds,
                "tight": e.tight,
            })
        })
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "entries": entries,
        "all_applicable_hold": report.all_applicable_hold(),
    })
}

fn print_report(report: &AuditReport) {
    for e in &report.entries {
        let status = if !e.applicable {
            "inapplicable"
        } else if !e.holds {
            "VIOLATED"
        } else if e.tight {
            "holds (tight)"
        } else {
            "holds"
        };
        println!(
            "{:28} {:>8} {} {:<8} {}",
            e.id,
            rat_str(e.lhs),
            e.relation.symbol(),
            rat_str(e.rhs),
            status
        );
    }
}

fn cmd_audit(path: &Path, forbid: &str, json: bool) -> Outcome {
    let pg = match load_input(path, None) {
        Ok(LoadedGraph::Embedded(pg)) => pg,
        Ok(LoadedGraph::Abstract(_)) => {
            return Outcome::Usage("audit needs an embedding JSON input".into())
        }
        Err(msg) => return Outcome::Usage(msg),
    };
    let result = match forbid {
        "c4" => audit_c4(&pg),
        "c5" => audit_c5(&pg),
        other => return Outcome::Usage(format!("audit supports c4 or c5, got {other:?}")),
    };
    match result {
        Ok(report) => {
            if json {
                println!("{}", report_to_json(&report));
            } else {
                print_report(&report);
            }
            if report.all_applicable_hold() {
                Outcome::Ok
            } else {
                Outcome::CheckFailed
            }
        }
        Err(err) => Outcome::Usage(format!("audit inapplicable: {err}")),
    }
}

fn cmd_reduce(
    path: &Path,
    mode: ReduceMode,
    out: Option<&Path>,
    format: OutFormat,
    json: bool,
) -> Outcome {
    let pg = match load_input(path, None) {
        Ok(LoadedGraph::Embedded(pg)) => pg,
        Ok(LoadedGraph::Abstract(_)) => {
            return Outcome::Usage("reduce needs an embedding JSON input".into())
        }
        Err(msg) => return Outcome::Usage(msg),
    };
    let reduced = match mode {
        ReduceMode::Prime => reduce_prime(&pg),
        ReduceMode::K4centers => reduce_k4_centers(&pg),
    };
    let reduced = match reduced {
        Ok(r) => r,
        Err(e) => return Outcome::Usage(format!("reduce failed: {e}")),
    };
    let name = match mode {
        ReduceMode::Prime => "gprime",
        ReduceMode::K4centers => "k4reduced",
    };
    let content = render(&reduced, format, name);
    if let Err(msg) = emit(&content, out) {
        return Outcome::Usage(msg);
    }
    let np = reduced.n() as i64;
    let ep = reduced.edge_count() as i64;
    let edge_cap_ok = ep <= 2 * np - 4;
    if json {
        let report = json!({
            "schema_version": SCHEMA_VERSION,
            "before": {"n": pg.n(), "e": pg.edge_count()},
            "after": {"n": reduced.n(), "e": reduced.edge_count()},
            "edge_cap_2n_minus_4": 2 * np - 4,
            "edge_cap_holds": edge_cap_ok,
        });
        println!("{report}");
    } else {
        println!(
            "before: n={} e={}  after: n={} e={}  e' <= 2n'-4: {}",
            pg.n(),
            pg.edge_count(),
            reduced.n(),
            reduced.edge_count(),
            if edge_cap_ok { "yes" } else { "NO" }
        );
    }
    Outcome::Ok
}

fn read_config(path: &Path) -> Result<(Option<usize>, Option<f64>), String> {
    let text =
        std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let mut workers = None;
    let mut budget = None;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("{}:{}: expected key=value", path.display(), lineno + 1))?;
        match key.trim() {
            "workers" => {
                workers = Some(value.trim().parse().map_err(|e| {
                    format!("{}:{}: bad workers value: {e}", path.display(), lineno + 1)
                })?)
            }
            "budget" => {
                budget = Some(value.trim().parse().map_err(|e| {
                    format!("{}:{}: bad budget value: {e}", path.display(), lineno + 1)
                })?)
            }
            other => {
                return Err(format!(
                    "{}:{}: config only sets workers/budget defaults, got {other:?}",
                    path.display(),
                    lineno + 1
                ))
            }
        }
    }
    Ok((workers, budget))
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    n: usize,
    forbid: &str,
    workers: Option<usize>,
    budget: Option<f64>,
    witness_cap: usize,
    restricted: bool,
    allow_disconnected: bool,
    config: Option<&Path>,
    deterministic: bool,
    json: bool,
) -> Outcome {
    let pattern = match parse_pattern(forbid) {
        Ok(p) => p,
        Err(msg) => return Outcome::Usage(msg),
    };
    let (cfg_workers, cfg_budget) = match config {
        Some(path) => match read_config(path) {
            Ok(pair) => pair,
            Err(msg) => return Outcome::Usage(msg),
        },
        None => (None, None),
    };
    let env_workers = std::env::var("PLANEXT_WORKERS")
        .ok()
        .and_then(|v| v.parse().ok());
    let mut cfg = SearchConfig::new(n, pattern);
    cfg.workers = workers.or(cfg_workers).or(env_workers).unwrap_or(1);
    cfg.max_seconds = budget.or(cfg_budget);
    cfg.witness_cap = witness_cap;
    cfg.restricted = restricted;
    cfg.connected_only = !allow_disconnected;
    eprintln!(
        "searching n={n} pattern={} workers={} ...",
        cfg.pattern.label(),
        cfg.workers
    );
    let mut result = match extremal_search(&cfg) {
        Ok(r) => r,
        Err(e) => return Outcome::Usage(e.to_string()),
    };
    if deterministic {
        result.elapsed_seconds = 0.0;
    }
    if json {
        println!(
            "{}",
            serde_json::to_string(&result).expect("result serializes")
        );
    } else {
        match result.max_edges {
            Some(e) => println!("ex={e} witnesses={}", result.witness_count),
            None => println!("no graph satisfies the side conditions"),
        }
        for w in &result.witnesses {
            println!("  {w}");
        }
        println!(
            "nodes={} elapsed={:.3}s complete={}",
            result.nodes_explored, result.elapsed_seconds, result.complete
        );
    }
    if result.complete {
        Outcome::Ok
    } else {
        Outcome::BudgetExhausted
    }
}

fn cmd_bounds(n: usize, forbid: &str, json: bool) -> Outcome {
    let forms: Vec<BoundForm> = match forbid {
        "c3" | "k3" => vec![BoundForm::TriangleFree],
        "c4" => vec![BoundForm::C4],
        "c5" => {
            if n >= 11 {
                vec![BoundForm::C5Full, BoundForm::C5Simple]
            } else {
                vec![BoundForm::C5Simple]
            }
        }
        "k4" => vec![BoundForm::K4Free],
        other => return Outcome::Usage(format!("bounds supports c3|c4|c5|k4, got {other:?}")),
    };
    let mut evaluated = Vec::new();
    for form in &forms {
        match form.evaluate(n) {
            Ok(v) => evaluated.push((form, v)),
            Err(e) => return Outcome::Usage(e.to_string()),
        }
    }
    if json {
        let items: Vec<serde_json::Value> = evaluated
            .iter()
            .map(|(form, v)| {
                json!({
                    "form": form.name(),
                    "value": rat_json(*v),
                    "floor": floor_of(*v),
                })
            })
            .collect();
        let report = json!({
            "schema_version": SCHEMA_VERSION,
            "n": n,
            "pattern": forbid,
            "bounds": items,
        });
        println!("{report}");
    } else {
        for (form, v) in &evaluated {
            println!("{} = {} (floor {})", form.name(), rat_str(*v), floor_of(*v));
        }
        if forbid == "c5" && n < 11 {
            println!("note: the (12n-33)/5 bound applies from n = 11");
        }
    }
    Outcome::Ok
}
