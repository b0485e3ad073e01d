//! `kgraph`: batch front-end to the k-graph toolkit.
//!
//! Exit codes: 0 on success or when the checked property holds, 1 when it
//! fails (the report carries the certificate), 2 on usage or input errors.

mod text;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kgraph_core::report::{
    AperiodicityDto, BoundaryReport, CertificateReport, CoreReport, FnReportDto, LambdaMinReport,
    PathSetReport, PiClosureReport, PrefixReport,
};
use kgraph_core::{
    boundary_representation, check_ck_family, check_classical_relations, check_generator_family,
    check_variant_relations, fixture, omega, product_skeleton, restrict, validate_skeleton,
    AperiodicityVerdict, CheckOptions, Degree, FamilyDocument, KGraph, OperatorFamily, Skeleton,
    Variant,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "kgraph",
    version,
    about = "Combinatorics of finite higher-rank graphs"
)]
struct Cli {
    /// Emit the structured JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// Graph document (JSON file), or a fixture name such as G_SQUARE or OMEGA(2,(1,1)).
    graph: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum PathMode {
    /// `vΛ^n`
    Range,
    /// `Λ^n v`
    Source,
    /// `vΛ^{≤n}`
    Leq,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a graph document.
    Validate(GraphArg),
    /// List the paths of a given degree at a vertex.
    Paths {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        degree: String,
        #[arg(long, value_enum, default_value = "range")]
        mode: PathMode,
    },
    /// Minimal common extensions of two paths.
    Lmin {
        #[command(flatten)]
        g: GraphArg,
        lambda: String,
        mu: String,
    },
    /// Decide whether a finite set of paths is exhaustive at a vertex.
    Exhaustive {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        vertex: String,
        /// Comma-separated paths in dot syntax.
        #[arg(long)]
        set: String,
    },
    /// The closure ΠE of a finite set of paths.
    Pi {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        set: String,
    },
    /// Block decomposition of the core approximation for ΠE.
    Core {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        set: String,
    },
    /// Blocks of F_n.
    Fn {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        degree: String,
        /// Restrict to paths with this range.
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Boundary paths (acyclic graphs), or a prefix trace with --steps.
    Boundary {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        vertex: Option<String>,
        /// Run the prefix construction for this many steps (needs --vertex).
        #[arg(long)]
        steps: Option<usize>,
    },
    /// The boundary-path representation as a family document.
    BoundaryRep(GraphArg),
    /// Aperiodicity condition (B).
    Aperiodicity {
        #[command(flatten)]
        g: GraphArg,
        /// Sampling depth on cyclic graphs.
        #[arg(long, default_value = "2")]
        depth: String,
    },
    /// Check the Cuntz-Krieger relations (or a rejected variant).
    Check {
        #[command(flatten)]
        g: GraphArg,
        #[command(flatten)]
        opts: CheckArgs,
        /// Replace relation (iv) by a variant.
        #[arg(long)]
        variant: Option<String>,
    },
    /// Check the generator form of the relations.
    CheckGenerators {
        #[command(flatten)]
        g: GraphArg,
        #[command(flatten)]
        opts: CheckArgs,
    },
    /// Check the classical relations.
    CheckClassical {
        #[command(flatten)]
        g: GraphArg,
        #[command(flatten)]
        opts: CheckArgs,
    },
    /// Emit the graph document of Ω_{k,m}.
    Omega { k: usize, m: String },
    /// Emit the cartesian product of two graph documents.
    Product { a: String, b: String },
    /// Emit a named fixture, or list them.
    Fixture { name: Option<String> },
}

#[derive(Args)]
struct CheckArgs {
    /// Family document; defaults to the boundary representation. For
    /// `check-generators` only the vertex and edge entries are used.
    #[arg(long)]
    family: Option<PathBuf>,
    /// Degree bound for the checked paths.
    #[arg(long)]
    bound: Option<String>,
    /// Extra set for the exhaustive-set relations, as `vertex:p1,p2`.
    #[arg(long = "extra")]
    extra: Vec<String>,
}

enum Verdict {
    Holds,
    Fails,
}

type Run = Result<Verdict, String>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Verdict::Holds) => ExitCode::SUCCESS,
        Ok(Verdict::Fails) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn read_skeleton(arg: &str) -> Result<Skeleton, String> {
    match fs::read_to_string(arg) {
        Ok(text) => Skeleton::from_json(&text).map_err(|e| format!("{arg}: {e}")),
        Err(io) => fixture(arg).map_err(|_| format!("{arg}: {io}")),
    }
}

fn load(arg: &GraphArg) -> Result<KGraph, String> {
    KGraph::new(read_skeleton(&arg.graph)?).map_err(err)
}

/// Prints `report` as JSON, or `text` otherwise.
fn emit<T: Serialize>(json: bool, report: &T, text: impl FnOnce() -> String) -> Result<(), String> {
    let out = if json {
        serde_json::to_string_pretty(report).map_err(err)?
    } else {
        text()
    };
    let mut stdout = io::stdout().lock();
    writeln!(stdout, "{out}").map_err(err)
}

fn holds(ok: bool) -> Verdict {
    if ok {
        Verdict::Holds
    } else {
        Verdict::Fails
    }
}

fn run(cli: Cli) -> Run {
    let json = cli.json;
    match cli.command {
        Command::Validate(g) => {
            let sk = read_skeleton(&g.graph)?;
            let report = validate_skeleton(&sk);
            emit(json, &report, || text::validation(&report))?;
            Ok(holds(report.ok))
        }
        Command::Paths {
            g,
            vertex,
            degree,
            mode,
        } => {
            let g = load(&g)?;
            let v = g.vertex(&vertex).map_err(err)?;
            let n = g.parse_degree(&degree).map_err(err)?;
            let (label, paths) = match mode {
                PathMode::Range => ("range", g.paths_with_range(v, &n)),
                PathMode::Source => ("source", g.paths_with_source(v, &n)),
                PathMode::Leq => ("leq", g.paths_leq(v, &n)),
            };
            let report = PathSetReport::new(&g, &vertex, &n, label, &paths);
            emit(json, &report, || report.paths.join("\n"))?;
            Ok(Verdict::Holds)
        }
        Command::Lmin { g, lambda, mu } => {
            let g = load(&g)?;
            let l = g.parse_path(&lambda).map_err(err)?;
            let m = g.parse_path(&mu).map_err(err)?;
            let report = LambdaMinReport::new(&g, &l, &m, &g.lambda_min(&l, &m));
            emit(json, &report, || text::lambda_min(&report))?;
            Ok(Verdict::Holds)
        }
        Command::Exhaustive { g, vertex, set } => {
            let g = load(&g)?;
            let v = g.vertex(&vertex).map_err(err)?;
            let set = g.parse_path_set(&set).map_err(err)?;
            let cert = g.is_exhaustive(v, &set).map_err(err)?;
            let report = CertificateReport::new(&g, &cert);
            emit(json, &report, || text::certificate(&report))?;
            Ok(holds(cert.verdict))
        }
        Command::Pi { g, set } => {
            let g = load(&g)?;
            let pc = g
                .pi_closure(&g.parse_path_set(&set).map_err(err)?)
                .map_err(err)?;
            let report = PiClosureReport::new(&g, &pc);
            emit(json, &report, || report.closed.join("\n"))?;
            Ok(Verdict::Holds)
        }
        Command::Core { g, set } => {
            let g = load(&g)?;
            let pc = g
                .pi_closure(&g.parse_path_set(&set).map_err(err)?)
                .map_err(err)?;
            let support = g.theta_support(&pc).map_err(err)?;
            let report = CoreReport::new(&g, &pc, &support);
            emit(json, &report, || text::core(&report))?;
            Ok(Verdict::Holds)
        }
        Command::Fn { g, degree, vertex } => {
            let g = load(&g)?;
            let n = g.parse_degree(&degree).map_err(err)?;
            let range = vertex
                .as_deref()
                .map(|v| g.vertex(v))
                .transpose()
                .map_err(err)?;
            let rep = g.f_n_report(&n, range).map_err(err)?;
            let report = FnReportDto::new(&g, &rep, vertex.as_deref());
            emit(json, &report, || text::f_n(&report))?;
            Ok(Verdict::Holds)
        }
        Command::Boundary { g, vertex, steps } => {
            let g = load(&g)?;
            match (steps, vertex) {
                (Some(steps), Some(name)) => {
                    let v = g.vertex(&name).map_err(err)?;
                    let report = PrefixReport::new(&g, &name, &g.boundary_prefix(v, steps));
                    emit(json, &report, || text::prefix(&report))?;
                }
                (Some(_), None) => return Err("--steps needs --vertex".into()),
                (None, vertex) => {
                    let paths = match vertex {
                        Some(name) => g.boundary_paths_at(g.vertex(&name).map_err(err)?),
                        None => g.boundary_paths(),
                    }
                    .map_err(err)?;
                    let report = BoundaryReport::new(&g, &paths);
                    emit(json, &report, || text::boundary(&report))?;
                }
            }
            Ok(Verdict::Holds)
        }
        Command::BoundaryRep(g) => {
            let g = load(&g)?;
            let doc = boundary_representation(&g).map_err(err)?.to_document(&g);
            emit(true, &doc, String::new)?;
            Ok(Verdict::Holds)
        }
        Command::Aperiodicity { g, depth } => {
            let g = load(&g)?;
            let depth = parse_bound(&g, &depth)?;
            let rep = g.aperiodicity_report(&depth).map_err(err)?;
            let report = AperiodicityDto::new(&g, &rep);
            emit(json, &report, || text::aperiodicity(&report))?;
            Ok(holds(rep.verdict != AperiodicityVerdict::ExactFails))
        }
        Command::Check { g, opts, variant } => {
            let g = load(&g)?;
            let (fam, o) = family_and_options(&g, &opts)?;
            let report = match variant {
                None => check_ck_family(&g, &fam, &o),
                Some(v) => {
                    check_variant_relations(&g, &fam, v.parse::<Variant>().map_err(err)?, &o)
                }
            }
            .map_err(err)?;
            emit(json, &report, || text::check(&report))?;
            Ok(holds(report.passed))
        }
        Command::CheckClassical { g, opts } => {
            let g = load(&g)?;
            let (fam, o) = family_and_options(&g, &opts)?;
            let report = check_classical_relations(&g, &fam, &o).map_err(err)?;
            emit(json, &report, || text::check(&report))?;
            Ok(holds(report.passed))
        }
        Command::CheckGenerators { g, opts } => {
            let g = load(&g)?;
            let o = options(&g, &opts)?;
            let gen = match &opts.family {
                Some(p) => {
                    let fam = OperatorFamily::from_document(&g, &read_family(p)?).map_err(err)?;
                    restrict(&g, &fam).map_err(err)?
                }
                None => restrict(&g, &boundary_representation(&g).map_err(err)?).map_err(err)?,
            };
            let report = check_generator_family(&g, &gen, &o).map_err(err)?;
            emit(json, &report, || text::check(&report))?;
            Ok(holds(report.passed))
        }
        Command::Omega { k, m } => {
            let m: Degree = m.parse().map_err(err)?;
            if m.rank() != k {
                return Err(format!("degree {m} does not have {k} coordinates"));
            }
            emit(true, &omega(&m), String::new)?;
            Ok(Verdict::Holds)
        }
        Command::Product { a, b } => {
            let sk = product_skeleton(&read_skeleton(&a)?, &read_skeleton(&b)?).map_err(err)?;
            emit(true, &sk, String::new)?;
            Ok(Verdict::Holds)
        }
        Command::Fixture { name: None } => {
            let names = kgraph_core::fixtures::FIXTURE_NAMES;
            emit(json, &names, || format!("{}\nOMEGA(k,m)", names.join("\n")))?;
            Ok(Verdict::Holds)
        }
        Command::Fixture { name: Some(name) } => {
            emit(true, &fixture(&name).map_err(err)?, String::new)?;
            Ok(Verdict::Holds)
        }
    }
}

fn parse_bound(g: &KGraph, text: &str) -> Result<Degree, String> {
    let d: Degree = text.parse().map_err(err)?;
    if d.rank() == 1 && g.rank() > 1 {
        return Ok(Degree::from_vec(vec![d.coords()[0]; g.rank()]));
    }
    g.parse_degree(text).map_err(err)
}

fn read_family(path: &PathBuf) -> Result<FamilyDocument, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn options(g: &KGraph, args: &CheckArgs) -> Result<CheckOptions, String> {
    let mut o = CheckOptions::for_graph(g).map_err(err)?;
    if let Some(b) = &args.bound {
        o.bound = parse_bound(g, b)?;
    }
    for entry in &args.extra {
        let (v, set) = entry
            .split_once(':')
            .ok_or_else(|| format!("--extra {entry}: expected vertex:p1,p2"))?;
        let v = g.vertex(v.trim()).map_err(err)?;
        o.extra_sets.push((v, g.parse_path_set(set).map_err(err)?));
    }
    Ok(o)
}

fn family_and_options(
    g: &KGraph,
    args: &CheckArgs,
) -> Result<(OperatorFamily, CheckOptions), String> {
    let o = options(g, args)?;
    let fam = match &args.family {
        Some(p) => OperatorFamily::from_document(g, &read_family(p)?).map_err(err)?,
        None => boundary_representation(g).map_err(err)?,
    };
    Ok((fam, o))
}
