use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cliffordinkra::code::{
    enumerate_doubly_even_with_limit, max_code_family, max_doubly_even_dimension, MaxMode,
};
use cliffordinkra::cohomology;
use cliffordinkra::construct::{
    clpq_cube, clpq_matrices, clpq_validate, cube, minimal_representation, quotient, recover_code,
    QuotientSpec,
};
use cliffordinkra::geometry::{geometrize_with_faces, Rainbow};
use cliffordinkra::graph::{to_dot, validate_raw, RawGraph};
use cliffordinkra::iso::is_isomorphic;
use cliffordinkra::matrix::{
    default_order, from_matrices_with_signature, to_matrices, MatrixFile, SignedPermMatrix,
};
use cliffordinkra::{Cliffordinkra, Error};

#[derive(Parser)]
#[command(name = "cinkra", version, about = "Build, check and classify Cliffordinkras")]
struct Cli {
    #[command(flatten)]
    io: IoArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IoArgs {
    /// Input file (default: standard input)
    #[arg(short, long, global = true)]
    input: Option<PathBuf>,
    /// Output file (default: standard output)
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    /// Reserved for randomized operations; no current command draws randomness
    #[arg(long = "seed", global = true)]
    _seed: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// The n-cube, or the signature cube with --signature p,q
    Cube {
        n: usize,
        #[arg(long, value_parser = parse_signature)]
        signature: Option<(usize, usize)>,
    },
    /// Quotient of the cube by a code spec {"n", "code", "signs"}
    Quotient,
    /// Check the Cliffordinkra rules and report every violation
    Validate {
        #[arg(long, value_parser = parse_signature)]
        signature: Option<(usize, usize)>,
    },
    /// Toggle the dashes on edges leaving a vertex set
    Switch {
        /// Comma-separated vertex indices
        #[arg(long, value_delimiter = ',')]
        vertices: Vec<usize>,
    },
    /// Generator matrices, bosons first
    Matrices {
        #[arg(long, value_parser = parse_signature)]
        signature: Option<(usize, usize)>,
    },
    /// Check a matrix file and rebuild its graph
    #[command(name = "from-matrices", alias = "verify")]
    FromMatrices,
    /// The code of a connected graph
    RecoverCode,
    /// Isomorphism up to vertex switching
    Iso { first: PathBuf, second: PathBuf },
    /// Cohomology dimensions and dashing counts
    Cohomology,
    /// Surface statistics for a rainbow
    Geometrize {
        /// Comma-separated cyclic color order (default 0,1,...,n-1)
        #[arg(long)]
        rainbow: Option<String>,
        #[arg(long)]
        faces: bool,
    },
    /// Minimal representation for n colors
    Minrep {
        n: usize,
        #[arg(long)]
        matrices: bool,
    },
    /// Doubly even codes of length n
    Codes {
        n: usize,
        #[arg(long, conflicts_with = "max")]
        enumerate: bool,
        #[arg(long)]
        max: bool,
        /// Largest length allowed for exhaustive work
        #[arg(long, default_value_t = 8)]
        limit_n: usize,
    },
    /// Graphviz rendering of a graph
    ExportDot,
}

fn parse_signature(s: &str) -> Result<(usize, usize), String> {
    let (p, q) = s
        .split_once(',')
        .ok_or_else(|| format!("expected p,q, got {s:?}"))?;
    let p = p.trim().parse().map_err(|_| format!("bad p in {s:?}"))?;
    let q = q.trim().parse().map_err(|_| format!("bad q in {s:?}"))?;
    Ok((p, q))
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Lib(Error::Json(e))
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Io(_) | Failure::Lib(Error::Parse(_) | Error::Json(_) | Error::Structure(_)) => 2,
            Failure::Lib(Error::BudgetExceeded(_)) => 4,
            Failure::Lib(_) => 3,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Io(m) => m.clone(),
        }
    }
}

type Outcome<T> = Result<T, Failure>;

enum Payload {
    Graph(Cliffordinkra),
    Json(Value),
    Text(String),
}

fn read_text(path: Option<&PathBuf>) -> Outcome<String> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn read_graph(path: Option<&PathBuf>) -> Outcome<Cliffordinkra> {
    Ok(Cliffordinkra::from_json(&read_text(path)?)?)
}

fn matrix_rows(m: &SignedPermMatrix) -> String {
    m.to_dense()
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| format!("{x:>2}"))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn run(cli: &Cli) -> Outcome<Payload> {
    let input = cli.io.input.as_ref();
    let text_mode = cli.io.format == Format::Text;
    Ok(match &cli.command {
        Command::Cube { n, signature } => match signature {
            None => Payload::Graph(cube(*n)?),
            Some((p, q)) => {
                if p + q != *n {
                    return Err(Error::DimensionMismatch(format!("signature ({p},{q}) for n={n}")).into());
                }
                Payload::Graph(clpq_cube(*p, *q)?)
            }
        },
        Command::Quotient => {
            let spec = QuotientSpec::from_json(&read_text(input)?)?;
            Payload::Graph(quotient(&spec)?)
        }
        Command::Validate { signature } => {
            let text = read_text(input)?;
            let report = match signature {
                None => validate_raw(&RawGraph::from_json(&text)?),
                Some((p, q)) => clpq_validate(&Cliffordinkra::from_json(&text)?, *p, *q)?,
            };
            if text_mode {
                Payload::Text(report.summary())
            } else {
                Payload::Json(serde_json::to_value(&report)?)
            }
        }
        Command::Switch { vertices } => Payload::Graph(read_graph(input)?.vertex_switch(vertices)?),
        Command::Matrices { signature } => {
            let g = read_graph(input)?;
            let mats = match signature {
                None => to_matrices(&g, None)?,
                Some((p, q)) => clpq_matrices(&g, *p, *q, None)?,
            };
            if text_mode {
                Payload::Text(
                    mats.iter()
                        .enumerate()
                        .map(|(i, m)| format!("Gamma_{i}\n{}", matrix_rows(m)))
                        .collect::<Vec<_>>()
                        .join("\n\n"),
                )
            } else {
                let order = default_order(&g);
                let parity = order.iter().map(|&v| g.parity(v)).collect();
                Payload::Json(serde_json::to_value(MatrixFile::new(&mats, parity, *signature))?)
            }
        }
        Command::FromMatrices => {
            let file: MatrixFile = serde_json::from_str(&read_text(input)?)?;
            let mats = file.parse()?;
            let sig = file.signature.unwrap_or((0, mats.len()));
            Payload::Graph(from_matrices_with_signature(&mats, &file.parity, sig)?)
        }
        Command::RecoverCode => {
            let code = recover_code(&read_graph(input)?)?;
            Payload::Json(json!({
                "code": code.to_strings(),
                "dimension": code.dimension(),
                "doubly_even": code.is_doubly_even(),
                "n": code.length(),
            }))
        }
        Command::Iso { first, second } => {
            let a = read_graph(Some(first))?;
            let b = read_graph(Some(second))?;
            let wit = is_isomorphic(&a, &b)?;
            if text_mode {
                Payload::Text(if wit.is_some() { "isomorphic" } else { "not isomorphic" }.into())
            } else {
                Payload::Json(json!({ "isomorphic": wit.is_some(), "witness": wit }))
            }
        }
        Command::Cohomology => {
            let r = cohomology::report(&read_graph(input)?)?;
            if text_mode {
                let dashings = match r.dashings {
                    Some(d) => format!(
                        "totally odd dashings 2^{}, classes mod switching 2^{}",
                        d.total_log2, d.classes_log2
                    ),
                    None => "no totally odd dashing".into(),
                };
                Payload::Text(format!("H^0={} H^1={} H^2={}; {dashings}", r.h0, r.h1, r.h2))
            } else {
                Payload::Json(serde_json::to_value(&r)?)
            }
        }
        Command::Geometrize { rainbow, faces } => {
            let g = read_graph(input)?;
            let r = match rainbow {
                Some(s) => s.parse::<Rainbow>()?,
                None => Rainbow::standard(g.n()),
            };
            let surface = geometrize_with_faces(&g, &r)?;
            let s = surface.stats;
            if text_mode {
                Payload::Text(format!(
                    "V={} E={} F={} chi={} genus={}",
                    s.v, s.e, s.f, s.euler, s.genus
                ))
            } else {
                let mut v = serde_json::to_value(s)?;
                v["rainbow"] = json!(r.canonical());
                if *faces {
                    v["faces"] = serde_json::to_value(&surface.faces)?;
                }
                Payload::Json(v)
            }
        }
        Command::Minrep { n, matrices } => {
            let m = minimal_representation(*n)?;
            if text_mode {
                Payload::Text(format!("n={} code={} dimension={}", m.n, m.family, m.dimension))
            } else {
                let mut v = serde_json::to_value(&m)?;
                if *matrices {
                    v["matrices"] = json!(m.matrices.iter().map(|x| x.to_dense()).collect::<Vec<_>>());
                }
                Payload::Json(v)
            }
        }
        Command::Codes {
            n,
            enumerate,
            max,
            limit_n,
        } => {
            if *enumerate {
                let codes = enumerate_doubly_even_with_limit(*n, *limit_n)?;
                Payload::Json(json!({
                    "codes": codes.iter().map(|c| c.to_strings()).collect::<Vec<_>>(),
                    "count": codes.len(),
                    "n": n,
                }))
            } else {
                let mode = if *max && *n <= *limit_n {
                    MaxMode::Exhaustive
                } else {
                    MaxMode::Constructive
                };
                let (k, witness) = max_doubly_even_dimension(*n, mode)?;
                Payload::Json(json!({
                    "dimension": k,
                    "family": max_code_family(*n).to_string(),
                    "mode": if mode == MaxMode::Exhaustive { "exhaustive" } else { "constructive" },
                    "n": n,
                    "witness": witness.to_strings(),
                }))
            }
        }
        Command::ExportDot => Payload::Text(to_dot(&read_graph(input)?)),
    })
}

fn render(payload: Payload, format: Format) -> String {
    let mut out = match payload {
        Payload::Graph(g) => match format {
            Format::Dot => to_dot(&g),
            _ => g.to_json(),
        },
        Payload::Json(v) => v.to_string(),
        Payload::Text(t) => t,
    };
    if !out.ends_with('\n') {
        out.push('\n');
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|payload| {
        let text = render(payload, cli.io.format);
        match &cli.io.output {
            Some(p) => fs::write(p, text).map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
            None => io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Io(format!("stdout: {e}"))),
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("cinkra: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
