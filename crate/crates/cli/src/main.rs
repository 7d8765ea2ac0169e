//! Command-line front end for the Gallai pipeline.
//!
//! Every subcommand prints a stable, sorted text rendering so that output
//! can be diffed, piped, and pinned in golden tests. Exit status is 0 on
//! success, 1 on a domain error (reported as `error: <code>: <message>` on
//! stderr), and 2 on a usage error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gallai_core::gallai::{gallai, gallai_complex, gallai_labeling, GallaiLabeling};
use gallai_core::generators;
use gallai_core::ideal::{is_f_gallai, is_f_graph, is_f_ideal};
use gallai_core::oracle;
use gallai_core::{Error, Graph, MonomialIdeal, SimplicialComplex};

#[derive(Parser)]
#[command(
    name = "gallai",
    version,
    about = "Gallai graphs, Gallai-simplicial complexes, and f-ideal checks"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit a generated graph (edge list, JSON, or DOT) or complex (facet document)
    Generate {
        /// Family name, e.g. path, cycle, prism, triangular-ladder, simplex-complex
        family: String,
        /// Family parameters; joined-complete takes l plus an optional odd/even
        params: Vec<String>,
        /// Output format; graph families only
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Gallai graph of the input graph plus its vertex labeling table
    Gallai {
        #[command(flatten)]
        input: Input,
        /// Output format; DOT carries the labeling in node labels
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Facet document of the Gallai complex of the input graph
    Complex {
        #[command(flatten)]
        input: Input,
    },
    /// f-vector and Euler characteristic of the input graph's Gallai complex
    Fvector {
        #[command(flatten)]
        input: Input,
    },
    /// Same report as fvector; the Euler characteristic is the final field
    Chi {
        #[command(flatten)]
        input: Input,
    },
    /// f-ideal, f-graph, and f-Gallai verdicts
    #[command(subcommand)]
    Check(CheckCmd),
    /// Closed-form Gallai index families and f-vectors for ladder-like families
    Oracle {
        #[arg(value_enum)]
        name: OracleName,
        n: u32,
    },
    /// Whether two edge-list files describe isomorphic graphs
    Isomorphic {
        /// First edge-list file
        #[arg(long)]
        a: PathBuf,
        /// Second edge-list file
        #[arg(long)]
        b: PathBuf,
    },
}

// Variant names mirror the f-ideal / f-graph / f-gallai subcommands.
#[allow(clippy::enum_variant_names)]
#[derive(Subcommand)]
enum CheckCmd {
    /// Whether the ideal in FILE is an f-ideal; prints both f-vectors
    #[command(name = "f-ideal")]
    FIdeal {
        /// Ideal document file ("nvars q" header plus one generator per line)
        #[arg(long, value_name = "FILE")]
        ideal: PathBuf,
    },
    /// Whether the input graph's edge ideal is an f-ideal
    #[command(name = "f-graph")]
    FGraph {
        #[command(flatten)]
        input: Input,
    },
    /// Whether the input graph's Gallai graph is an f-graph
    #[command(name = "f-gallai")]
    FGallai {
        #[command(flatten)]
        input: Input,
    },
}

/// Graph input: either an edge-list file or a generator family.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Edge-list file ("n m" header plus one "u v" line per edge)
    #[arg(long = "in", value_name = "FILE")]
    infile: Option<PathBuf>,
    /// Family name followed by its parameters, e.g. --family prism 3
    #[arg(long, num_args = 1.., value_name = "NAME PARAMS")]
    family: Option<Vec<String>>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Edgelist,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleName {
    OmegaTriangularLadder,
    OmegaPrism,
    FvecTriangularLadder,
    FvecPrism,
}

#[derive(Serialize)]
struct GraphDoc {
    n: u32,
    edges: Vec<(u32, u32)>,
}

#[derive(Serialize)]
struct GallaiDoc {
    n: u32,
    edges: Vec<(u32, u32)>,
    labels: Vec<String>,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<String, String> {
    match cli.cmd {
        Cmd::Generate {
            family,
            params,
            format,
        } => generate(&family, &params, format),
        Cmd::Gallai { input, format } => {
            let g = input.graph()?;
            let labeling = gallai_labeling(&g).map_err(domain)?;
            let gg = gallai(&g).map_err(domain)?;
            match format.unwrap_or(Format::Edgelist) {
                Format::Edgelist => {
                    let mut out = gg.to_edge_list();
                    let _ = writeln!(out, "labels {}", labeling.edges().len());
                    for (k, e) in labeling.edges().iter().enumerate() {
                        let _ = writeln!(out, "{} {}", k + 1, e);
                    }
                    Ok(out)
                }
                Format::Json => {
                    let doc = GallaiDoc {
                        n: gg.n(),
                        edges: edge_pairs(&gg),
                        labels: labeling.edges().iter().map(|e| e.to_string()).collect(),
                    };
                    Ok(json_line(&doc))
                }
                Format::Dot => Ok(to_dot(&gg, Some(&labeling))),
            }
        }
        Cmd::Complex { input } => {
            let g = input.graph()?;
            let c = gallai_complex(&g).map_err(domain)?;
            Ok(c.to_document())
        }
        Cmd::Fvector { input } | Cmd::Chi { input } => {
            let g = input.graph()?;
            let c = gallai_complex(&g).map_err(domain)?;
            let fv = c.f_vector().map_err(domain)?;
            Ok(format!("{}\n", fv.report_line()))
        }
        Cmd::Check(check) => match check {
            CheckCmd::FIdeal { ideal } => {
                let text = read(&ideal)?;
                let parsed = MonomialIdeal::parse_document(&text).map_err(domain)?;
                let report = is_f_ideal(&parsed).map_err(domain)?;
                Ok(format!("{report}\n"))
            }
            CheckCmd::FGraph { input } => {
                let g = input.graph()?;
                Ok(format!("{}\n", is_f_graph(&g).map_err(domain)?))
            }
            CheckCmd::FGallai { input } => {
                let g = input.graph()?;
                Ok(format!("{}\n", is_f_gallai(&g).map_err(domain)?))
            }
        },
        Cmd::Oracle { name, n } => match name {
            OracleName::OmegaTriangularLadder => Ok(face_lines(
                oracle::omega_triangular_ladder(n).map_err(domain)?,
            )),
            OracleName::OmegaPrism => Ok(face_lines(oracle::omega_prism(n).map_err(domain)?)),
            OracleName::FvecTriangularLadder => {
                let fv = oracle::fvec_triangular_ladder(n).map_err(domain)?;
                Ok(format!("{}\n", fv.report_line()))
            }
            OracleName::FvecPrism => {
                let fv = oracle::fvec_prism(n).map_err(domain)?;
                Ok(format!("{}\n", fv.report_line()))
            }
        },
        Cmd::Isomorphic { a, b } => {
            let ga = Graph::parse_edge_list(&read(&a)?).map_err(domain)?;
            let gb = Graph::parse_edge_list(&read(&b)?).map_err(domain)?;
            Ok(format!("{}\n", ga.is_isomorphic(&gb)))
        }
    }
}

fn generate(family: &str, params: &[String], format: Option<Format>) -> Result<String, String> {
    if let Some(complex) = complex_family(family, params) {
        if format.is_some() {
            return Err(domain(Error::InvalidParameter(format!(
                "--format does not apply to complex family {family}"
            ))));
        }
        return Ok(complex?.to_document());
    }
    let g = graph_family(family, params).map_err(domain)?;
    Ok(match format.unwrap_or(Format::Edgelist) {
        Format::Edgelist => g.to_edge_list(),
        Format::Json => json_line(&GraphDoc {
            n: g.n(),
            edges: edge_pairs(&g),
        }),
        Format::Dot => to_dot(&g, None),
    })
}

/// Complex-valued families; `None` means the name is not one of them.
fn complex_family(name: &str, params: &[String]) -> Option<Result<SimplicialComplex, String>> {
    let build = match name {
        "simplex-complex" => generators::simplex_complex as fn(u32) -> _,
        "boundary-complex" => generators::boundary_complex,
        _ => return None,
    };
    Some(one_u32(name, params).and_then(build).map_err(domain))
}

fn graph_family(name: &str, params: &[String]) -> Result<Graph, Error> {
    match name {
        "path" => generators::path(one_u32(name, params)?),
        "cycle" => generators::cycle(one_u32(name, params)?),
        "complete" => generators::complete(one_u32(name, params)?),
        "star" => generators::star(one_u32(name, params)?),
        "ladder" => generators::ladder(one_u32(name, params)?),
        "triangular-ladder" => generators::triangular_ladder(one_u32(name, params)?),
        "prism" => generators::prism(one_u32(name, params)?),
        "double-star-even" => generators::double_star_even(one_u32(name, params)?),
        "double-star-odd" => generators::double_star_odd(one_u32(name, params)?),
        "joined-complete" => {
            if params.is_empty() || params.len() > 2 {
                return Err(Error::InvalidParameter(
                    "joined-complete takes l and an optional odd/even".into(),
                ));
            }
            let l = parse_u32(&params[0])?;
            let odd = match params.get(1).map(String::as_str) {
                None | Some("even") => false,
                Some("odd") => true,
                Some(other) => {
                    return Err(Error::InvalidParameter(format!(
                        "expected odd or even, got {other}"
                    )))
                }
            };
            generators::joined_complete(l, odd)
        }
        _ => Err(Error::InvalidParameter(format!("unknown family: {name}"))),
    }
}

fn one_u32(name: &str, params: &[String]) -> Result<u32, Error> {
    match params {
        [p] => parse_u32(p),
        _ => Err(Error::InvalidParameter(format!(
            "family {name} takes exactly one integer parameter"
        ))),
    }
}

fn parse_u32(s: &str) -> Result<u32, Error> {
    s.parse()
        .map_err(|_| Error::InvalidParameter(format!("expected a non-negative integer, got {s}")))
}

impl Input {
    fn graph(&self) -> Result<Graph, String> {
        if let Some(path) = &self.infile {
            return Graph::parse_edge_list(&read(path)?).map_err(domain);
        }
        let spec = self
            .family
            .as_ref()
            .expect("clap group guarantees one source");
        graph_family(&spec[0], &spec[1..]).map_err(domain)
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("Io: {}: {e}", path.display()))
}

fn domain(e: Error) -> String {
    format!("{}: {e}", e.code())
}

fn edge_pairs(g: &Graph) -> Vec<(u32, u32)> {
    g.edges().iter().map(|e| (e.u(), e.v())).collect()
}

fn json_line<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string(doc).expect("serialization cannot fail");
    s.push('\n');
    s
}

fn face_lines(faces: std::collections::BTreeSet<gallai_core::Face>) -> String {
    let mut out = String::new();
    for f in faces {
        let _ = writeln!(out, "{f}");
    }
    out
}

fn to_dot(g: &Graph, labeling: Option<&GallaiLabeling>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 1..=g.n() {
        match labeling.map(|l| l.edge_of(v)) {
            Some(Ok(e)) => {
                let _ = writeln!(out, "  {v} [label=\"{e}\"];");
            }
            _ => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for e in g.edges() {
        let _ = writeln!(out, "  {} -- {};", e.u(), e.v());
    }
    out.push_str("}\n");
    out
}
