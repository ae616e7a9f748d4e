//! Command-line front end. JSON goes to standard output (or `-o`), short
//! human-readable summaries to standard error.
//!
//! Exit codes: 0 success or "yes", 1 "no", 2 error, 3 budget exceeded.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::budget::Budget;
use crate::certificate::{Category, Certificate};
use crate::error::{Error, Result};
use crate::functors::{self, Object};
use crate::graph::{self, Graph};
use crate::hom;
use crate::hom_complex::{self, Side};
use crate::label::Label;
use crate::poset::{self, Mode};
use crate::simplicial;
use crate::text;

#[derive(Debug, Parser)]
#[command(name = "dismantle", version, about = "Dismantlability of graphs, posets and simplicial complexes")]
pub struct Cli {
    #[command(flatten)]
    pub options: Options,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Options {
    #[arg(long, global = true, default_value_t = Budget::default().max_cliques)]
    pub max_cliques: u64,
    #[arg(long, global = true, default_value_t = Budget::default().max_morphisms)]
    pub max_morphisms: u64,
    #[arg(long, global = true, default_value_t = Budget::default().max_iso_nodes)]
    pub max_iso_nodes: u64,
    /// Randomize tie-breaking in `core` with this seed.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write the JSON report here instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
}

/// Input objects. Graph inputs may also be names such as `P3`, `C5°` or `K4o`.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Inputs {
    #[arg(long, num_args = 1..)]
    pub graph: Vec<String>,
    #[arg(long, num_args = 1..)]
    pub poset: Vec<PathBuf>,
    #[arg(long, num_args = 1..)]
    pub complex: Vec<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Strict,
    Weak,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Strict => Mode::Strict,
            ModeArg::Weak => Mode::Weak,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SideArg {
    Source,
    Target,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dismantle to a core and print the certificate.
    Core {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_enum, default_value = "strict")]
        mode: ModeArg,
    },
    /// Decide whether the input dismantles onto the sub-object on `--keep`
    /// or on the vertices of `--target`.
    Onto {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_delimiter = ',')]
        keep: Vec<String>,
        #[arg(long)]
        target: Option<String>,
        #[arg(long, value_enum, default_value = "weak")]
        mode: ModeArg,
    },
    /// Decide whether two graphs have the same d-homotopy type.
    Equiv {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Apply a functor: comp, clique-poset, clique-complex, face-graph,
    /// face-poset, order-complex, rub, atoms-graph, reflexive-closure, bd.
    Functor {
        name: String,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// The graph of morphisms between two graphs.
    HomGraph {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// The cells of the Hom complex between two graphs.
    HomComplex {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Dismantle the clique poset of hom(G, H) onto the cells of Hom(G, H),
    /// or, with `--side`, the face graph of Hom(G, H) along a fold.
    HomDismantle {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_enum, requires_all = ["vertex", "witness"])]
        side: Option<SideArg>,
        /// Vertex to fold away.
        #[arg(long)]
        vertex: Option<String>,
        /// Vertex it folds onto.
        #[arg(long)]
        witness: Option<String>,
    },
    /// Replay a certificate against its starting object.
    Verify {
        #[command(flatten)]
        inputs: Inputs,
        certificate: PathBuf,
    },
    /// Replay the built-in worked examples.
    #[command(name = "paper-demo")]
    Demo,
}

/// The result of one command.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: Value,
    pub summary: String,
}

impl Outcome {
    fn yes(report: Value, summary: impl Into<String>) -> Self {
        Outcome { code: 0, report, summary: summary.into() }
    }

    fn answer(yes: bool, report: Value, summary: impl Into<String>) -> Self {
        Outcome { code: if yes { 0 } else { 1 }, report, summary: summary.into() }
    }

    fn error(e: &Error) -> Self {
        let mut err = json!({ "code": e.code(), "message": e.to_string() });
        if let Error::IllegalStep { step, .. } = e {
            err["step"] = json!(step);
        }
        let code = if matches!(e, Error::Budget { .. }) { 3 } else { 2 };
        Outcome { code, report: json!({ "ok": false, "error": err }), summary: format!("error: {e}") }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn load_graph(arg: &str) -> Result<Graph> {
    let path = Path::new(arg);
    if path.exists() {
        return text::parse_graph(&read(path)?);
    }
    Graph::named(arg).map_err(|_| Error::Input(format!("`{arg}` is neither a readable file nor a graph name")))
}

fn load(inputs: &Inputs) -> Result<Vec<Object>> {
    if !inputs.graph.is_empty() {
        inputs.graph.iter().map(|s| load_graph(s).map(Object::Graph)).collect()
    } else if !inputs.poset.is_empty() {
        inputs.poset.iter().map(|p| text::parse_poset(&read(p)?).map(Object::Poset)).collect()
    } else {
        inputs.complex.iter().map(|p| text::parse_complex(&read(p)?).map(Object::Complex)).collect()
    }
}

fn exactly<const N: usize>(objects: Vec<Object>) -> Result<[Object; N]> {
    let n = objects.len();
    objects.try_into().map_err(|_| Error::Input(format!("expected {N} input(s), got {n}")))
}

fn two_graphs(inputs: &Inputs) -> Result<(Graph, Graph)> {
    match exactly::<2>(load(inputs)?)? {
        [Object::Graph(g), Object::Graph(h)] => Ok((g, h)),
        _ => Err(Error::WrongCategory { expected: "graph".into(), found: "other".into() }),
    }
}

fn labels_json(labels: &[Label]) -> Value {
    json!(labels.iter().map(|l| l.as_str()).collect::<Vec<_>>())
}

fn cert_json(cert: &Certificate) -> Value {
    serde_json::to_value(cert).expect("certificate serializes")
}

fn run_core(object: Object, mode: Mode, seed: Option<u64>) -> Result<Outcome> {
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    let mut choose = move |c: &[(usize, usize)]| rng.as_mut().map_or(0, |r| r.gen_range(0..c.len()));
    let (core, cert) = match &object {
        Object::Graph(g) => {
            let (c, cert) = graph::dismantle_core_by(g, &mut choose);
            (Object::Graph(c), cert)
        }
        Object::Poset(p) => {
            let (c, cert) = poset::poset_core_by(p, mode, &mut choose);
            (Object::Poset(c), cert)
        }
        Object::Complex(k) => {
            let (c, cert) = simplicial::strong_collapse_core_by(k, &mut choose);
            (Object::Complex(c), cert)
        }
    };
    let summary = format!("core: {} of {} elements kept, {} deletions", core.labels().len(), object.labels().len(), cert.len());
    Ok(Outcome::yes(
        json!({
            "ok": true,
            "category": cert.category,
            "core": core.to_text(),
            "core_elements": labels_json(core.labels()),
            "certificate": cert_json(&cert),
        }),
        summary,
    ))
}

fn run_onto(object: Object, keep: &[String], target: Option<&str>, mode: Mode) -> Result<Outcome> {
    let target_labels = |t: &str| -> Result<Vec<String>> {
        let labels = match &object {
            Object::Graph(_) => load_graph(t)?.labels().to_vec(),
            Object::Poset(_) => text::parse_poset(&read(Path::new(t))?)?.labels().to_vec(),
            Object::Complex(_) => text::parse_complex(&read(Path::new(t))?)?.labels().to_vec(),
        };
        Ok(labels.iter().map(|l| l.to_string()).collect())
    };
    let keep: Vec<String> = match (target, keep.is_empty()) {
        (Some(t), true) => target_labels(t)?,
        (None, false) => keep.to_vec(),
        _ => return Err(Error::Input("give exactly one of --keep and --target".into())),
    };
    let cert = match &object {
        Object::Graph(g) => {
            if let Some(t) = target {
                if g.induced(&keep)? != load_graph(t)? {
                    return Err(Error::Input("target is not an induced subgraph".into()));
                }
            }
            graph::dismantles_onto(g, &keep)?
        }
        Object::Poset(p) => {
            if mode == Mode::Strict {
                return Err(Error::Input("dismantling a poset onto a target is only supported with --mode weak".into()));
            }
            if let Some(t) = target {
                if p.induced(&keep)? != text::parse_poset(&read(Path::new(t))?)? {
                    return Err(Error::Input("target is not an induced subposet".into()));
                }
            }
            poset::weak_dismantles_onto(p, &keep)?
        }
        Object::Complex(k) => simplicial::strong_collapse_onto(k, &k.induced(&keep)?)?,
    };
    let yes = cert.is_some();
    Ok(Outcome::answer(
        yes,
        json!({ "ok": true, "dismantles": yes, "certificate": cert.as_ref().map(cert_json) }),
        if yes { "dismantles onto the target" } else { "does not dismantle onto the target" },
    ))
}

fn run_verify(object: Object, cert_path: &Path) -> Result<Outcome> {
    let cert = Certificate::from_json(&read(cert_path)?)?;
    let residual: Vec<Label> = match (&object, cert.category) {
        (Object::Graph(g), Category::Graph) => graph::replay_certificate(g, &cert)?.labels().to_vec(),
        (Object::Poset(p), Category::Poset | Category::PosetWeak) => poset::replay_certificate(p, &cert)?.labels().to_vec(),
        (Object::Complex(k), Category::Complex) => simplicial::replay_certificate(k, &cert)?.labels().to_vec(),
        (o, c) => return Err(Error::WrongCategory { expected: o.category_name().into(), found: c.to_string() }),
    };
    Ok(Outcome::yes(
        json!({ "ok": true, "valid": true, "steps": cert.len(), "residual": labels_json(&residual) }),
        format!("certificate valid: {} steps, {} elements remain", cert.len(), residual.len()),
    ))
}

/// Executes a parsed command.
pub fn execute(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(o) => o,
        Err(e) => Outcome::error(&e),
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let o = &cli.options;
    let budget = Budget { max_cliques: o.max_cliques, max_morphisms: o.max_morphisms, max_iso_nodes: o.max_iso_nodes };
    match &cli.command {
        Command::Core { inputs, mode } => {
            let [object] = exactly::<1>(load(inputs)?)?;
            run_core(object, (*mode).into(), o.seed)
        }
        Command::Onto { inputs, keep, target, mode } => {
            let [object] = exactly::<1>(load(inputs)?)?;
            run_onto(object, keep, target.as_deref(), (*mode).into())
        }
        Command::Equiv { inputs } => {
            let (g, h) = two_graphs(inputs)?;
            let (cg, _) = graph::dismantle_core(&g);
            let (ch, _) = graph::dismantle_core(&h);
            let iso = graph::are_isomorphic(&cg, &ch, &budget)?;
            let yes = iso.is_some();
            let reason = if yes { "cores isomorphic" } else { "cores non-isomorphic" };
            Ok(Outcome::answer(
                yes,
                json!({
                    "ok": true,
                    "equivalent": yes,
                    "reason": reason,
                    "cores": [cg.to_text(), ch.to_text()],
                }),
                reason,
            ))
        }
        Command::Functor { name, inputs } => {
            let [object] = exactly::<1>(load(inputs)?)?;
            let image = functors::apply(name, &object, &budget)?;
            let members: Vec<Value> = image
                .members
                .iter()
                .map(|(l, m)| json!({ "element": l.as_str(), "members": labels_json(m) }))
                .collect();
            Ok(Outcome::yes(
                json!({
                    "ok": true,
                    "category": image.object.category_name(),
                    "text": image.object.to_text(),
                    "correspondence": members,
                }),
                format!("{name}: {} elements", image.object.labels().len()),
            ))
        }
        Command::HomGraph { inputs } => {
            let (g, h) = two_graphs(inputs)?;
            let hg = hom::hom_graph(&g, &h, &budget)?;
            let edges: Vec<Value> = hg
                .graph
                .edges()
                .filter(|(u, v)| u != v)
                .map(|(u, v)| json!([hg.graph.label(u).as_str(), hg.graph.label(v).as_str()]))
                .collect();
            Ok(Outcome::yes(
                json!({ "ok": true, "morphisms": labels_json(hg.graph.labels()), "edges": edges }),
                format!("{} morphisms, {} edges between distinct morphisms", hg.graph.len(), edges.len()),
            ))
        }
        Command::HomComplex { inputs } => {
            let (g, h) = two_graphs(inputs)?;
            let cells = hom_complex::hom_cells(&g, &h, &budget)?;
            let top = cells.iter().map(|c| c.dimension()).max();
            let by_dim: Vec<usize> = match top {
                Some(t) => (0..=t).map(|d| cells.iter().filter(|c| c.dimension() == d).count()).collect(),
                None => Vec::new(),
            };
            let names: Vec<Label> = cells.iter().map(|c| c.name(&g, &h)).collect();
            Ok(Outcome::yes(
                json!({ "ok": true, "cells": labels_json(&names), "by_dimension": by_dim }),
                format!("{} cells, by dimension {:?}", cells.len(), by_dim),
            ))
        }
        Command::HomDismantle { inputs, side, vertex, witness } => {
            let (g, h) = two_graphs(inputs)?;
            let cert = match (side, vertex, witness) {
                (Some(s), Some(x), Some(a)) => {
                    let side = match s {
                        SideArg::Source => Side::Source,
                        SideArg::Target => Side::Target,
                    };
                    hom_complex::fold_induced_hom_dismantle(&g, &h, side, x, a, &budget)?
                }
                (None, None, None) => hom_complex::clique_to_cell_dismantle(&g, &h, &budget)?,
                _ => return Err(Error::Input("--side, --vertex and --witness go together".into())),
            };
            Ok(Outcome::yes(
                json!({ "ok": true, "certificate": cert_json(&cert) }),
                format!("{} deletions", cert.len()),
            ))
        }
        Command::Verify { inputs, certificate } => {
            let [object] = exactly::<1>(load(inputs)?)?;
            run_verify(object, certificate)
        }
        Command::Demo => {
            let items = crate::demo::run(&budget);
            let passed = items.iter().filter(|i| i.pass).count();
            let all = passed == items.len();
            let table: Vec<String> =
                items.iter().map(|i| format!("{} {}", if i.pass { "PASS" } else { "FAIL" }, i.item)).collect();
            Ok(Outcome::answer(
                all,
                json!({ "ok": true, "passed": passed, "total": items.len(), "items": items }),
                table.join("\n"),
            ))
        }
    }
}

/// Parses `args` (including the program name), runs the command, prints the
/// report and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = execute(&cli);
    eprintln!("{}", outcome.summary);
    let body = serde_json::to_string_pretty(&outcome.report).expect("report serializes");
    match &cli.options.output {
        Some(path) => {
            if let Err(e) = fs::write(path, body + "\n") {
                eprintln!("error: {}: {e}", path.display());
                return 2;
            }
        }
        None => println!("{body}"),
    }
    outcome.code
}
