//! `agglom`: factorization invariants of graph agglomerations from the shell.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use agglom_core::bassring::{self, BassError, Family};
use agglom_core::diophantine::{dedup_columns, DiophantineError, DiophantineMonoid, DEFAULT_BASIS_CAP};
use agglom_core::divisor_theory::{self, coordinates, DivisorError};
use agglom_core::dot::{agglomeration_to_dot, graph_to_dot};
use agglom_core::elasticity::DEFAULT_SEARCH_DEPTH;
use agglom_core::engine::LengthMemo;
use agglom_core::factorization::{Catenary, Factorization};
use agglom_core::io::{self as aio, IoError};
use agglom_core::{
    atoms, catenary_degree, class_group_rank, davenport, elasticity, format_rational, is_factorial, is_half_factorial,
    omega_bounded, parse_graph, phi, rho_k, Agg, AggMonoid, AgglomerationError, BassRingSpec, FactorizationError,
    GraphError, LengthSet, Matrix, Multigraph, SpecError, Subgraph,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use thiserror::Error;

/// Default enumeration cap for factorizations.
const DEFAULT_FACTORIZATION_CAP: u64 = 100_000;

#[derive(Parser)]
#[command(name = "agglom", version, about = "Factorization invariants of graph agglomeration monoids")]
struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Enumeration cap (factorizations) or coordinate cap (Hilbert bases).
    #[arg(long, global = true, env = "AGGLOM_CAP")]
    cap: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Args)]
struct GraphArg {
    /// Graph file (JSON or text); `-` or absent reads stdin.
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Args)]
struct ElementArgs {
    #[command(flatten)]
    graph: GraphArg,
    /// Element file: `{id: weight}` for graphs, `[..]` for matrices.
    #[arg(long)]
    element: PathBuf,
}

#[derive(Args)]
struct MonoidElementArgs {
    /// Graph file; exclusive with `--matrix`.
    #[arg(long, conflicts_with = "matrix")]
    graph: Option<PathBuf>,
    /// Matrix file defining `ker(B) ∩ N_0^n`.
    #[arg(long)]
    matrix: Option<PathBuf>,
    #[arg(long)]
    element: PathBuf,
}

#[derive(Args)]
struct MatrixArg {
    /// Matrix file; `-` or absent reads stdin.
    #[arg(long)]
    matrix: Option<PathBuf>,
}

#[derive(Args)]
struct SpecArg {
    /// Ring spec file; `-` or absent reads stdin.
    #[arg(long)]
    spec: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Atoms of A(G): indicators of connected subgraphs.
    Atoms(GraphArg),
    /// All factorizations of an element.
    Factorize(MonoidElementArgs),
    /// Set of lengths, its gaps, and the element's elasticity.
    Lengths(MonoidElementArgs),
    /// Elasticity bounds of A(G).
    Elasticity {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long, default_value_t = DEFAULT_SEARCH_DEPTH)]
        search_depth: usize,
    },
    /// ρ_k of A(G).
    RhoK {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_SEARCH_DEPTH)]
        search_depth: usize,
    },
    /// Davenport constant: largest sequence length of an atom.
    Davenport(GraphArg),
    /// Divisor theory coordinates, or the image of an element.
    DivisorTheory {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        element: Option<PathBuf>,
    },
    /// Rank of the divisor class group.
    ClassgroupRank(GraphArg),
    /// Half-factoriality and factoriality.
    Check(GraphArg),
    /// Catenary degree of an element.
    Catenary(ElementArgs),
    /// ω of an atom over the weight box.
    Omega {
        #[command(flatten)]
        args: ElementArgs,
        /// Largest weight of the scanned box.
        #[arg(long, default_value_t = 3)]
        bound: usize,
    },
    /// Hilbert basis of ker(B) ∩ N_0^n.
    HilbertBasis(MatrixArg),
    /// Merge identical columns; prints the target matrix and column groups.
    Dedup(MatrixArg),
    /// Bass ring spectrum data.
    #[command(subcommand)]
    Ring(RingCommand),
    /// Graphviz rendering of a graph or an agglomeration.
    ExportDot {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        element: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum RingCommand {
    /// Prime-ideal intersection graph.
    Graph(SpecArg),
    /// Matrix B.
    MatrixB(SpecArg),
    /// Matrix C.
    MatrixC(SpecArg),
    /// Check ker(C) ∩ N_0^n ≅ A(G_R) over a weight box.
    Iso {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long, default_value_t = 3)]
        bound: usize,
    },
    /// Krull–Remak–Schmidt–Azumaya property.
    Krsa {
        #[command(flatten)]
        spec: SpecArg,
        /// Whether the Picard group is trivial.
        #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
        pic_trivial: bool,
    },
    /// A spec whose intersection graph is the given graph.
    Realize(GraphArg),
    /// A named family spec.
    Family {
        #[arg(long, value_enum)]
        name: FamilyName,
        /// Ngon size.
        #[arg(long)]
        m: Option<usize>,
        /// Banana edge count.
        #[arg(long)]
        k: Option<usize>,
        /// Complete graph order.
        #[arg(long)]
        n: Option<usize>,
        /// Domain: number of singular ideals.
        #[arg(long, default_value_t = 1)]
        ideals: usize,
        /// Domain: indecomposables per ideal.
        #[arg(long, default_value_t = 2)]
        indecomposables: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Domain,
    Ngon,
    Banana,
    Complete,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: io::Error },
    #[error("malformed JSON in {path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Agglomeration(#[from] AgglomerationError),
    #[error(transparent)]
    Factorization(#[from] FactorizationError),
    #[error(transparent)]
    Divisor(#[from] DivisorError),
    #[error(transparent)]
    Diophantine(#[from] DiophantineError),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Bass(#[from] BassError),
}

/// A result in every representation the subcommand supports.
struct Doc {
    json: Value,
    text: Option<String>,
    dot: Option<String>,
    default: Format,
}

impl Doc {
    fn json(json: Value) -> Self {
        Self { json, text: None, dot: None, default: Format::Json }
    }

    fn graph(g: &Multigraph) -> Self {
        Self {
            json: aio::graph_to_json(g),
            text: Some(aio::graph_to_text(g)),
            dot: Some(graph_to_dot(g)),
            default: Format::Json,
        }
    }

    fn render(self, format: Option<Format>) -> Result<String, CliError> {
        match format.unwrap_or(self.default) {
            Format::Json => Ok(format!("{}\n", self.json)),
            Format::Text => Ok(self.text.unwrap_or_else(|| text_of(&self.json))),
            Format::Dot => self.dot.ok_or_else(|| CliError::Usage("this subcommand has no DOT output".into())),
        }
    }
}

/// `key: value` lines; strings are printed bare.
fn text_of(v: &Value) -> String {
    let scalar = |v: &Value| match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    match v {
        Value::Object(m) => m.iter().map(|(k, v)| format!("{k}: {}\n", scalar(v))).collect(),
        Value::Array(items) => items.iter().map(|v| format!("{}\n", scalar(v))).collect(),
        other => format!("{}\n", scalar(other)),
    }
}

fn read_input(path: Option<&PathBuf>) -> Result<String, CliError> {
    let mut s = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            s = fs::read_to_string(p).map_err(|source| CliError::Read { path: p.display().to_string(), source })?
        }
        _ => {
            io::stdin().read_to_string(&mut s).map_err(|source| CliError::Read { path: "stdin".into(), source })?;
        }
    }
    Ok(s)
}

fn label(path: Option<&PathBuf>) -> String {
    path.map_or_else(|| "stdin".into(), |p| p.display().to_string())
}

fn read_graph(path: Option<&PathBuf>) -> Result<Arc<Multigraph>, CliError> {
    Ok(Arc::new(parse_graph(&read_input(path)?)?))
}

fn read_element(graph: &Arc<Multigraph>, path: &PathBuf) -> Result<Agg, CliError> {
    Ok(aio::agglomeration_from_json(graph.clone(), &read_input(Some(path))?)?)
}

fn read_vector(path: &PathBuf) -> Result<Vec<u64>, CliError> {
    let text = read_input(Some(path))?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: label(Some(path)), source })
}

fn read_matrix(path: Option<&PathBuf>) -> Result<Matrix, CliError> {
    Ok(aio::matrix_from_json(&read_input(path)?)?)
}

fn read_spec(path: Option<&PathBuf>) -> Result<BassRingSpec, CliError> {
    Ok(aio::spec_from_json(&read_input(path)?)?)
}

fn subgraph_json(g: &Multigraph, s: &Subgraph) -> Value {
    json!({
        "vertices": s.vertices.iter().map(|&v| g.vertex_name(v)).collect::<Vec<_>>(),
        "edges": s.edges.iter().map(|&e| g.edge_name(e)).collect::<Vec<_>>(),
    })
}

fn factorization_json(g: &Multigraph, z: &Factorization) -> Value {
    Value::Array(z.atoms.iter().map(|s| subgraph_json(g, s)).collect())
}

fn lengths_json(l: &LengthSet) -> Value {
    json!({
        "lengths": l.as_slice(),
        "delta": l.delta(),
        "elasticity": format_rational(&l.elasticity()),
    })
}

fn enumeration_cap(cap: Option<u64>) -> usize {
    cap.unwrap_or(DEFAULT_FACTORIZATION_CAP) as usize
}

fn diophantine(matrix: &PathBuf, cap: Option<u64>) -> Result<DiophantineMonoid, CliError> {
    let m = DiophantineMonoid::with_cap(read_matrix(Some(matrix))?, cap.unwrap_or(DEFAULT_BASIS_CAP));
    if !m.hilbert_basis().complete {
        return Err(DiophantineError::IncompleteBasis { cap: m.cap() }.into());
    }
    Ok(m)
}

fn member(m: &DiophantineMonoid, x: &[u64]) -> Result<(), CliError> {
    let xi: Vec<i64> = x.iter().map(|&v| v as i64).collect();
    if m.membership(&xi)? {
        Ok(())
    } else {
        Err(DiophantineError::NotAMember.into())
    }
}

fn run(cli: Cli) -> Result<Doc, CliError> {
    let cap = cli.cap;
    Ok(match cli.command {
        Command::Atoms(a) => {
            let g = read_graph(a.graph.as_ref())?;
            let list = atoms::<u64>(&g)?;
            let text = list.iter().map(|a| format!("{}\n", a.support().describe(&g))).collect();
            let items: Vec<Value> = list.iter().map(aio::agglomeration_to_json).collect();
            Doc { text: Some(text), ..Doc::json(json!({ "count": items.len(), "atoms": items })) }
        }
        Command::Factorize(a) => match (&a.matrix, &a.graph) {
            (Some(mp), _) => {
                let m = diophantine(mp, None)?;
                let x = read_vector(&a.element)?;
                member(&m, &x)?;
                let list = m.factorizations(&x, Some(enumeration_cap(cap)))?;
                let basis = &m.hilbert_basis().elements;
                let zs: Vec<Value> =
                    list.items.iter().map(|z| json!(z.iter().map(|&i| &basis[i]).collect::<Vec<_>>())).collect();
                Doc::json(json!({
                    "factorizations": zs,
                    "complete": list.complete,
                    "cap": enumeration_cap(cap),
                }))
            }
            (None, gp) => {
                let g = read_graph(gp.as_ref())?;
                let x = read_element(&g, &a.element)?;
                let m = AggMonoid::<u64>::new(g.clone())?;
                let fs = m.factorizations(&x, Some(enumeration_cap(cap)))?;
                let text = fs
                    .items
                    .iter()
                    .map(|z| {
                        let parts: Vec<String> = z.atoms.iter().map(|s| s.describe(&g)).collect();
                        format!("{}\n", parts.join(" + "))
                    })
                    .collect();
                let zs: Vec<Value> = fs.items.iter().map(|z| factorization_json(&g, z)).collect();
                let doc = json!({ "factorizations": zs, "complete": fs.complete, "cap": enumeration_cap(cap) });
                Doc { text: Some(text), ..Doc::json(doc) }
            }
        },
        Command::Lengths(a) => match (&a.matrix, &a.graph) {
            (Some(mp), _) => {
                let m = diophantine(mp, None)?;
                let x = read_vector(&a.element)?;
                member(&m, &x)?;
                Doc::json(lengths_json(&m.length_set(&x, &mut LengthMemo::default())?))
            }
            (None, gp) => {
                let g = read_graph(gp.as_ref())?;
                let x = read_element(&g, &a.element)?;
                let m = AggMonoid::<u64>::new(g)?;
                Doc::json(lengths_json(&m.length_set(&x, &mut LengthMemo::default())?))
            }
        },
        Command::Elasticity { graph, search_depth } => {
            let g = read_graph(graph.graph.as_ref())?;
            let r = elasticity(&g, search_depth)?;
            Doc::json(json!({
                "lower": format_rational(&r.lower),
                "upper": format_rational(&r.upper),
                "exact": r.exact,
            }))
        }
        Command::RhoK { graph, k, search_depth } => {
            let g = read_graph(graph.graph.as_ref())?;
            Doc::json(serde_json::to_value(rho_k(&g, k, search_depth)?).expect("reports serialize"))
        }
        Command::Davenport(a) => {
            let g = read_graph(a.graph.as_ref())?;
            Doc::json(json!({ "davenport": davenport(&g)? }))
        }
        Command::DivisorTheory { graph, element } => {
            let g = read_graph(graph.graph.as_ref())?;
            match element {
                Some(p) => {
                    let x = read_element(&g, &p)?;
                    let image = phi(&x);
                    Doc::json(json!({
                        "image": serde_json::to_value(&image).expect("images serialize"),
                        "in_image": image.satisfies_image_equations(),
                    }))
                }
                None => {
                    let coords = coordinates(&g);
                    let mut witnesses = Map::new();
                    for &c in &coords {
                        let (a, b) = divisor_theory::basis_witnesses::<u64>(&g, c)?;
                        witnesses.insert(
                            c.label(&g),
                            json!([aio::agglomeration_to_json(&a), aio::agglomeration_to_json(&b)]),
                        );
                    }
                    Doc::json(json!({
                        "coordinates": coords.iter().map(|c| c.label(&g)).collect::<Vec<_>>(),
                        "prime_divisors": coords.len(),
                        "class_group_rank": class_group_rank(&g),
                        "witnesses": witnesses,
                    }))
                }
            }
        }
        Command::ClassgroupRank(a) => {
            let g = read_graph(a.graph.as_ref())?;
            Doc::json(json!({ "rank": class_group_rank(&g) }))
        }
        Command::Check(a) => {
            let g = read_graph(a.graph.as_ref())?;
            let hf = is_half_factorial::<u64>(&g)?;
            let mut doc = json!({ "half_factorial": hf.half_factorial, "factorial": is_factorial(&g) });
            if let Some(w) = hf.witness {
                doc["witness"] = json!({
                    "element": aio::agglomeration_to_json(&w.element),
                    "short": factorization_json(&g, &w.short),
                    "long": factorization_json(&g, &w.long),
                    "lengths": w.lengths.as_ref().map(LengthSet::as_slice),
                });
            }
            Doc::json(doc)
        }
        Command::Catenary(a) => {
            let g = read_graph(a.graph.graph.as_ref())?;
            let x = read_element(&g, &a.element)?;
            match catenary_degree(&x, Some(enumeration_cap(cap)))? {
                Catenary::Exact(c) => Doc::json(json!({ "catenary": c, "complete": true })),
                Catenary::Unknown { cap } => Doc::json(json!({ "catenary": null, "complete": false, "cap": cap })),
            }
        }
        Command::Omega { args, bound } => {
            let g = read_graph(args.graph.graph.as_ref())?;
            let b = read_element(&g, &args.element)?;
            let w = omega_bounded(&b, bound, Some(enumeration_cap(cap)))?;
            let mut doc = json!({ "omega": w.value, "bound": w.bound, "complete": w.complete });
            if !w.complete {
                doc["cap"] = json!(enumeration_cap(cap));
            }
            Doc::json(doc)
        }
        Command::HilbertBasis(a) => {
            let m = read_matrix(a.matrix.as_ref())?;
            let cap = cap.unwrap_or(DEFAULT_BASIS_CAP);
            let hb = agglom_core::diophantine::hilbert_basis(&m, cap);
            let text = hb.elements.iter().map(|v| format!("{v:?}\n")).collect();
            let doc = json!({ "basis": hb.elements, "complete": hb.complete, "cap": cap });
            Doc { text: Some(text), ..Doc::json(doc) }
        }
        Command::Dedup(a) => {
            let m = read_matrix(a.matrix.as_ref())?;
            let (target, groups) = dedup_columns(&m);
            let mut doc = aio::matrix_to_json(&target);
            doc["groups"] = json!(groups);
            Doc::json(doc)
        }
        Command::Ring(r) => ring(r)?,
        Command::ExportDot { graph, element } => {
            let g = read_graph(graph.graph.as_ref())?;
            let dot = match element {
                Some(p) => agglomeration_to_dot(&read_element(&g, &p)?),
                None => graph_to_dot(&g),
            };
            Doc { json: json!({ "dot": dot }), text: Some(dot.clone()), dot: Some(dot), default: Format::Dot }
        }
    })
}

fn ring(r: RingCommand) -> Result<Doc, CliError> {
    let spec_doc = |s: &BassRingSpec| Doc::json(aio::spec_to_json(s));
    Ok(match r {
        RingCommand::Graph(a) => Doc::graph(&bassring::intersection_graph(&read_spec(a.spec.as_ref())?)?),
        RingCommand::MatrixB(a) => Doc::json(aio::matrix_to_json(&bassring::matrix_b(&read_spec(a.spec.as_ref())?)?)),
        RingCommand::MatrixC(a) => Doc::json(aio::matrix_to_json(&bassring::matrix_c(&read_spec(a.spec.as_ref())?)?)),
        RingCommand::Iso { spec, bound } => {
            let report = bassring::iso_to_agglomerations(&read_spec(spec.spec.as_ref())?, bound)?;
            Doc::json(serde_json::to_value(report).expect("reports serialize"))
        }
        RingCommand::Krsa { spec, pic_trivial } => {
            Doc::json(json!({ "krsa": bassring::krsa_check(&read_spec(spec.spec.as_ref())?, pic_trivial)? }))
        }
        RingCommand::Realize(a) => spec_doc(&bassring::realize(&*read_graph(a.graph.as_ref())?)),
        RingCommand::Family { name, m, k, n, ideals, indecomposables } => {
            let need = |v: Option<usize>, flag: &str| {
                v.ok_or_else(|| CliError::Usage(format!("family {name:?} requires --{flag}").to_lowercase()))
            };
            let f = match name {
                FamilyName::Domain => Family::Domain { ideals, indecomposables },
                FamilyName::Ngon => Family::Ngon { m: need(m, "m")? },
                FamilyName::Banana => Family::Banana { k: need(k, "k")? },
                FamilyName::Complete => Family::Complete { n: need(n, "n")? },
            };
            spec_doc(&bassring::family(f)?)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli).and_then(|doc| doc.render(format)) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if matches!(e, CliError::Usage(_)) { 2 } else { 1 })
        }
    }
}
