//! Command-line front end.
//!
//! Structured output is JSON. Without `--out` it goes to standard output;
//! with `--out FILE` it is written to the file and a human summary goes to
//! standard output. Exit codes: 0 success, 1 a relation failed, 2 usage or
//! input error.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::action::{generator_twist, run_script, Program};
use crate::error::{Error, Result};
use crate::graph::{face_count, faces, genus, standard_form, torus, RibbonGraph, StandardGraph};
use crate::group::{show_labeling, Biinvariants, FiniteGroup, GroupJson, Labeling, DEFAULT_MAX_STATES};
use crate::hopf::{FinHopf, Tensor, DEFAULT_MAX_DIM, Q};
use crate::verify::{
    bene_suite, closed_surface_suite, default_instances, equivariance_suite, gervais_suite, hopf_suite, lemma_suite,
    torus_suite, Evaluator, SuiteReport,
};

#[derive(Parser, Debug)]
#[command(name = "ribbon-mcg", version, about = "Edge slides and Dehn twists on ciliated ribbon graphs")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build and inspect ribbon graphs.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Apply a slide/twist script to a graph, optionally to a state.
    Act(ActArgs),
    /// Run a verification suite.
    Verify {
        suite: Suite,
        #[command(flatten)]
        opts: VerifyArgs,
    },
    /// Coinvariants and orbit space of a finite group on a standard graph.
    Biinv(BiinvArgs),
}

#[derive(Subcommand, Debug)]
enum GraphCommand {
    /// Print a graph as JSON: the standard graph (g, n), the torus, or
    /// explicit vertex orders.
    New {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        genus: Option<u64>,
        #[arg(long, default_value_t = 0)]
        boundaries: usize,
        /// The one-vertex torus with edges a, b.
        #[arg(long, conflicts_with_all = ["genus", "orders"])]
        torus: bool,
        /// One vertex per flag, e.g. "st(a) st(b) ta(a) ta(b)".
        #[arg(long = "order", id = "orders")]
        orders: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the faces of a graph file.
    Faces {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Genus and Euler data of a graph file.
    Genus {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reduce a graph file to the standard chord diagram.
    Standardize {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Hopf,
    Bene,
    Lemmas,
    Gervais,
    Torus,
    Closed,
    Equivariance,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BackendArg {
    Symbolic,
    Linear,
    Group,
}

/// Algebraic data shared by `act` and `verify`.
#[derive(Args, Debug, Clone)]
struct AlgebraArgs {
    /// Evaluation backend; defaults to symbolic, or to group/linear when
    /// only --group/--instance is given.
    #[arg(long, value_enum)]
    backend: Option<BackendArg>,
    /// Finite group for the group backend: a name (Z2, Z3, S3, D4, …) or a
    /// JSON table file {"elements", "name", "table"}.
    #[arg(long)]
    group: Option<String>,
    /// Hopf algebra for the linear backend (sweedler4, F[Z2], F[S3], …).
    #[arg(long)]
    instance: Option<String>,
    /// Pivot: a central group element or a basis element of the instance.
    #[arg(long)]
    pivot: Option<String>,
    #[arg(long, default_value_t = DEFAULT_MAX_STATES)]
    max_states: u128,
    #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
    max_dim: usize,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    genus: u64,
    #[arg(long, default_value_t = 0)]
    boundaries: usize,
    #[command(flatten)]
    algebra: AlgebraArgs,
    /// Write the JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ActArgs {
    /// Graph JSON file; defaults to the standard graph (--genus, --boundaries).
    #[arg(long)]
    graph: Option<PathBuf>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    genus: Option<u64>,
    #[arg(long, default_value_t = 0)]
    boundaries: usize,
    /// Script text, e.g. "D_b" or "slide L b ta(a); twist D_a".
    #[arg(long, conflicts_with = "script_file")]
    script: Option<String>,
    #[arg(long)]
    script_file: Option<PathBuf>,
    /// Input state: group elements or basis elements per edge, "a=r, b=s".
    #[arg(long)]
    state: Option<String>,
    #[command(flatten)]
    algebra: AlgebraArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BiinvArgs {
    /// A group name or a JSON table file.
    #[arg(long)]
    group: String,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    genus: u64,
    #[arg(long, default_value_t = 0)]
    boundaries: usize,
    #[arg(long)]
    pivot: Option<String>,
    #[arg(long, default_value_t = DEFAULT_MAX_STATES)]
    max_states: u128,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parse arguments, run, and return the process exit code.
pub fn main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// Run a parsed command.
pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Graph(cmd) => graph_command(cmd),
        Command::Act(args) => act(args),
        Command::Verify { suite, opts } => verify(suite, opts),
        Command::Biinv(args) => biinv(args),
    }
}

/// Write JSON to `out` (printing `summary`), or print the JSON.
fn emit(out: Option<&Path>, value: &Value, summary: &str) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    let shown = match out {
        Some(path) => {
            std::fs::write(path, text + "\n")?;
            summary.trim_end().to_string()
        }
        None => text,
    };
    match writeln!(std::io::stdout(), "{shown}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn read_graph(path: &Path) -> Result<RibbonGraph> {
    RibbonGraph::parse_json(&std::fs::read_to_string(path)?)
}

fn usize_of(x: u64) -> usize {
    x as usize
}

fn graph_command(cmd: GraphCommand) -> Result<i32> {
    match cmd {
        GraphCommand::New { genus, boundaries, torus: is_torus, orders, out } => {
            let g = if is_torus {
                torus()
            } else if !orders.is_empty() {
                let refs: Vec<&str> = orders.iter().map(String::as_str).collect();
                RibbonGraph::from_orders(&refs)?
            } else {
                let genus = genus.ok_or_else(|| Error::Precondition("give --genus, --torus or --order".into()))?;
                StandardGraph::new(usize_of(genus), boundaries)?.graph
            };
            let value = serde_json::to_value(g.to_json())?;
            emit(out.as_deref(), &value, &g.describe())?;
        }
        GraphCommand::Faces { file, out } => {
            let g = read_graph(&file)?;
            let fs: Vec<String> = faces(&g).iter().map(|f| f.display(&g)).collect();
            let summary = format!("{} faces\n{}", fs.len(), fs.join("\n"));
            emit(out.as_deref(), &json!({ "count": fs.len(), "faces": fs }), &summary)?;
        }
        GraphCommand::Genus { file, out } => {
            let g = read_graph(&file)?;
            let k = genus(&g)?;
            let value = json!({
                "edges": g.num_edges(),
                "faces": face_count(&g),
                "genus": k,
                "vertices": g.num_vertices(),
            });
            emit(out.as_deref(), &value, &format!("genus {k}"))?;
        }
        GraphCommand::Standardize { file, out } => {
            let g = read_graph(&file)?;
            let form = standard_form(&g)?;
            let moves: Vec<String> = {
                // Each move is displayed on the graph it acts on.
                let mut cur = g.clone();
                let mut shown = Vec::new();
                for m in &form.moves {
                    shown.push(m.display(&cur));
                    cur = match m {
                        crate::graph::Move::Slide(s) => cur.slide(s)?.0,
                        crate::graph::Move::Reverse(e) => cur.reversed(*e)?,
                    };
                }
                shown
            };
            let roles: BTreeMap<String, String> =
                form.roles.iter().map(|(e, r)| (form.graph.edge_name(*e), r.clone())).collect();
            let value = json!({
                "boundaries": form.boundaries,
                "genus": form.genus,
                "graph": form.graph.to_json(),
                "moves": moves,
                "roles": roles,
            });
            emit(out.as_deref(), &value, &form.to_string())?;
        }
    }
    Ok(0)
}

fn group_pivot(group: &FiniteGroup, pivot: Option<&str>) -> Result<usize> {
    let Some(p) = pivot else { return Ok(group.identity()) };
    let x = group.element(p)?;
    if !group.is_central(x) {
        return Err(Error::Precondition(format!("{p} is not a central element of {}", group.name())));
    }
    Ok(x)
}

/// A built-in group by name, or a group table from a JSON file.
fn load_group(spec: &str) -> Result<FiniteGroup> {
    if spec.ends_with(".json") || Path::new(spec).is_file() {
        let table: GroupJson = serde_json::from_str(&std::fs::read_to_string(spec)?)?;
        return FiniteGroup::from_json(&table);
    }
    FiniteGroup::by_name(spec)
}

/// The instance with the requested pivot, or the unit if it is a pivot,
/// or the first pivot found.
fn hopf_instance(name: &str, pivot: Option<&str>) -> Result<FinHopf<Q>> {
    let h = FinHopf::<Q>::by_name(name)?;
    if let Some(p) = pivot {
        return h.with_pivot_named(p);
    }
    let pivots = h.find_pivots();
    let p = pivots
        .iter()
        .find(|p| p.as_slice() == h.unit())
        .or_else(|| pivots.first())
        .cloned()
        .ok_or_else(|| Error::Precondition(format!("{name} has no pivot")))?;
    h.with_pivot(p)
}

/// A resolved backend owning its algebra.
enum Resolved {
    Symbolic,
    Group(FiniteGroup, usize),
    Linear(Box<FinHopf<Q>>),
}

impl Resolved {
    fn new(a: &AlgebraArgs, default: BackendArg) -> Result<Self> {
        let kind = a.backend.unwrap_or(if a.group.is_some() {
            BackendArg::Group
        } else if a.instance.is_some() {
            BackendArg::Linear
        } else {
            default
        });
        Ok(match kind {
            BackendArg::Symbolic => Resolved::Symbolic,
            BackendArg::Group => {
                let group = load_group(a.group.as_deref().unwrap_or("S3"))?;
                let p = group_pivot(&group, a.pivot.as_deref())?;
                Resolved::Group(group, p)
            }
            BackendArg::Linear => {
                Resolved::Linear(Box::new(hopf_instance(a.instance.as_deref().unwrap_or("sweedler4"), a.pivot.as_deref())?))
            }
        })
    }

    fn evaluator(&self, a: &AlgebraArgs) -> Evaluator<'_> {
        match self {
            Resolved::Symbolic => Evaluator::Symbolic,
            Resolved::Group(group, pivot) => Evaluator::Group { group, pivot: *pivot, max_states: a.max_states },
            Resolved::Linear(hopf) => Evaluator::Linear { hopf, max_dim: a.max_dim },
        }
    }
}

fn verify(suite: Suite, opts: VerifyArgs) -> Result<i32> {
    let (g, n) = (usize_of(opts.genus), opts.boundaries);
    let a = &opts.algebra;
    let default = if suite == Suite::Closed { BackendArg::Group } else { BackendArg::Symbolic };
    let report: SuiteReport = if suite == Suite::Hopf {
        let instances = match &a.instance {
            Some(name) => vec![FinHopf::<Q>::by_name(name)?],
            None => default_instances()?,
        };
        hopf_suite(&instances)
    } else {
        let backend = Resolved::new(a, default)?;
        let evals = [backend.evaluator(a)];
        match suite {
            Suite::Hopf => unreachable!("handled above"),
            Suite::Bene => bene_suite(&evals)?,
            Suite::Lemmas => lemma_suite(&evals)?,
            Suite::Gervais => gervais_suite(&[(g, n)], &evals)?,
            Suite::Torus => torus_suite(&evals)?,
            Suite::Closed => closed_surface_suite(g, n, &evals, a.max_states)?,
            Suite::Equivariance => equivariance_suite(g, n, &evals)?,
        }
    };
    let mut summary = report.summary();
    for c in report.failures() {
        summary.push_str(&format!("\nFAIL {}: {}", c.case, c.witness.as_deref().unwrap_or("")));
    }
    for c in report.silent_controls() {
        summary.push_str(&format!("\nCONTROL DID NOT FAIL {}", c.case));
    }
    emit(opts.out.as_deref(), &serde_json::to_value(&report.cases)?, &summary)?;
    Ok(if report.failures().is_empty() { 0 } else { 1 })
}

/// Split `a=r, b=s` into (edge name, value) pairs.
fn parse_state(text: &str) -> Result<Vec<(String, String)>> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (k, v) = t.split_once('=').ok_or_else(|| Error::Parse(format!("state entry {t:?} is not edge=value")))?;
            Ok((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

fn group_state(g: &RibbonGraph, group: &FiniteGroup, text: &str) -> Result<Labeling> {
    let mut s = Labeling::new();
    for (k, v) in parse_state(text)? {
        let e = g.edge_by_name(&k).ok_or_else(|| Error::Unknown(format!("edge {k}")))?;
        s.insert(e, group.element(&v)?);
    }
    if s.len() != g.num_edges() {
        return Err(Error::Precondition("the state must label every edge of the graph".into()));
    }
    Ok(s)
}

fn basis_state(g: &RibbonGraph, h: &FinHopf<Q>, text: &str) -> Result<Tensor<Q>> {
    let mut key: BTreeMap<_, u16> = BTreeMap::new();
    for (k, v) in parse_state(text)? {
        let e = g.edge_by_name(&k).ok_or_else(|| Error::Unknown(format!("edge {k}")))?;
        let i = h.basis.iter().position(|b| *b == v).ok_or_else(|| Error::Unknown(format!("basis element {v}")))?;
        key.insert(e, i as u16);
    }
    if key.len() != g.num_edges() {
        return Err(Error::Precondition("the state must label every edge of the graph".into()));
    }
    Ok(Tensor::basis(key.keys().copied().collect(), key.values().copied().collect()))
}

fn act(args: ActArgs) -> Result<i32> {
    let g = match (&args.graph, args.genus) {
        (Some(path), _) => read_graph(path)?,
        (None, Some(genus)) => StandardGraph::new(usize_of(genus), args.boundaries)?.graph,
        (None, None) => torus(),
    };
    let script = match (&args.script, &args.script_file) {
        (Some(s), _) => s.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)?,
        (None, None) => String::new(),
    };
    let p: Program = run_script(&g, &script)?;
    let codomain = serde_json::to_value(p.codomain.to_json())?;
    let (value, summary) = match Resolved::new(&args.algebra, BackendArg::Symbolic)? {
        Resolved::Symbolic => {
            let images = p.relabeling().named(&p.domain, &p.codomain);
            let summary = images.iter().map(|(k, v)| format!("{k} ↦ {v}")).collect::<Vec<_>>().join("\n");
            (json!({ "codomain": codomain, "images": images }), summary)
        }
        Resolved::Group(group, pivot) => {
            let text = args.state.as_deref().ok_or_else(|| Error::Precondition("the group backend needs --state".into()))?;
            let s = group_state(&g, &group, text)?;
            let t = p.apply_labeling(&group, pivot, &s);
            let named = |g: &RibbonGraph, s: &Labeling| -> BTreeMap<String, String> {
                s.iter().map(|(e, x)| (g.edge_name(*e), group.element_name(*x).to_string())).collect()
            };
            let summary = format!("{} ↦ {}", show_labeling(&g, &group, &s), show_labeling(&p.codomain, &group, &t));
            (json!({ "codomain": codomain, "input": named(&g, &s), "output": named(&p.codomain, &t) }), summary)
        }
        Resolved::Linear(h) => {
            let text = args.state.as_deref().ok_or_else(|| Error::Precondition("the linear backend needs --state".into()))?;
            let x = basis_state(&g, &h, text)?;
            let y = p.apply_tensor(&h, &x)?;
            let shown = y.show(&p.codomain, &h);
            (json!({ "codomain": codomain, "input": x.show(&g, &h), "output": shown }), shown.clone())
        }
    };
    emit(args.out.as_deref(), &value, &summary)?;
    Ok(0)
}

fn biinv(args: BiinvArgs) -> Result<i32> {
    let group = load_group(&args.group)?;
    let pivot = group_pivot(&group, args.pivot.as_deref())?;
    let s = StandardGraph::new(usize_of(args.genus), args.boundaries)?;
    let b = Biinvariants::compute(&s.graph, s.base, &group, pivot, args.max_states)?;
    let mut generators = BTreeMap::new();
    for name in s.generator_names() {
        let p = generator_twist(&s, name, false)?;
        let perm = b.induced_map(&b, |x| Ok(p.apply_labeling(&group, pivot, x)))?;
        generators.insert(format!("D_{{{name}}}"), perm);
    }
    let reps: Vec<String> = (0..b.num_orbits()).map(|o| show_labeling(&s.graph, &group, b.representative(o))).collect();
    let value = json!({
        "boundaries": args.boundaries,
        "coinvariants": b.coinvariants.len(),
        "generators": generators,
        "genus": args.genus,
        "group": group.name(),
        "orbits": b.num_orbits(),
        "pivot": group.element_name(pivot),
        "representatives": reps,
    });
    let summary = format!("{} coinvariants, {} orbits", b.coinvariants.len(), b.num_orbits());
    emit(args.out.as_deref(), &value, &summary)?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("ribbon-mcg").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn usage_errors() {
        assert!(Cli::try_parse_from(["ribbon-mcg", "verify", "gervais", "--genus", "0"]).is_err());
        assert!(Cli::try_parse_from(["ribbon-mcg", "verify", "nonsense"]).is_err());
        assert!(Cli::try_parse_from(["ribbon-mcg", "graph", "new", "--torus", "--genus", "1"]).is_err());
    }

    #[test]
    fn non_central_pivot_is_rejected() {
        let r = run(parse(&["biinv", "--group", "S3", "--genus", "2", "--pivot", "r"]));
        assert!(matches!(r, Err(Error::Precondition(_))));
    }

    #[test]
    fn default_pivot_of_sweedler_is_g() {
        let h = hopf_instance("sweedler4", None).unwrap();
        assert_eq!(h.pivot().unwrap(), h.basis_vec(h.basis.iter().position(|b| b == "g").unwrap()).as_slice());
    }

    #[test]
    fn state_parsing() {
        let g = torus();
        let s3 = FiniteGroup::by_name("S3").unwrap();
        let s = group_state(&g, &s3, "a=r, b=s").unwrap();
        assert_eq!(show_labeling(&g, &s3, &s), "a=r, b=s");
        assert!(group_state(&g, &s3, "a=r").is_err());
        assert!(parse_state("a").is_err());
    }
}
