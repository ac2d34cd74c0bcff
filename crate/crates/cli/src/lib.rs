//! The `catgeo` command line.
//!
//! Everything runs through [`run_command`], which returns the exit status and
//! the text destined for stdout and stderr, so the binary is a thin wrapper.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use catgeo_core::document::{builtin_example, parse_document, EXAMPLE_NAMES};
use catgeo_core::dot::{export_dot, DotOptions};
use catgeo_core::embed::export_embedding;
use catgeo_core::geometry::{blade_area, CatMultivector};
use catgeo_core::real_line::{
    interval_add, interval_anticommutator, interval_norm, interval_products, IntervalMultivector,
    IntervalVector, RealLine,
};
use catgeo_core::vector::{distance, vector_name};
use catgeo_core::{CatAlgebra, Error, FiniteCategory, IntervalArrow, Vector};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_SEMANTIC: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            status: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(status: i32, stderr: String) -> Self {
        Outcome {
            status,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "catgeo", version, about = "Norms and geometric products on the arrows of finite categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct FileArgs {
    /// Category document (JSON)
    file: PathBuf,
    /// Machine-readable output
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the category axioms
    Validate(FileArgs),
    /// List the atomic basis
    Basis(FileArgs),
    /// Print the norm of every vector
    Norms(FileArgs),
    /// Anticommutator fg + gf for every ordered pair of arrows
    Table(FileArgs),
    /// Check e² = 1 on the basis and fg = -gf on orthogonal pairs
    Clifford(FileArgs),
    /// 3-D layout of objects and arrows (JSON)
    Embed(FileArgs),
    /// Graphviz export
    Dot {
        #[command(flatten)]
        args: FileArgs,
        /// Only draw basis arrows
        #[arg(long)]
        basis_only: bool,
    },
    /// Products of two arrows (`O` is the zero vector)
    Product {
        file: PathBuf,
        f: String,
        g: String,
        #[arg(long)]
        json: bool,
    },
    /// Emit a built-in document
    Example {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Real-line intervals, written LO:HI (decimals or fractions) or O
    Interval {
        #[command(subcommand)]
        op: IntervalOp,
    },
}

#[derive(Subcommand, Debug)]
enum IntervalOp {
    /// hi - lo
    Norm {
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// f ⊕ g
    Add {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long)]
        json: bool,
    },
    /// Inner, outer, geometric products and the anticommutator
    Product {
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[arg(long)]
        json: bool,
    },
}

struct Failure {
    status: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse(_) => EXIT_USAGE,
            Error::RealLine(catgeo_core::RealLineError::BadNumber(_))
            | Error::RealLine(catgeo_core::RealLineError::EmptyInterval { .. }) => EXIT_USAGE,
            _ => EXIT_SEMANTIC,
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<String, Failure>;

/// Runs `catgeo` with `argv` (program name first).
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome::fail(EXIT_USAGE, text)
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(stdout) => Outcome::ok(stdout),
        Err(f) => Outcome::fail(f.status, format!("error: {}\n", f.message)),
    }
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure {
        status: EXIT_USAGE,
        message: format!("cannot read {}: {e}", path.display()),
    })
}

fn load(path: &PathBuf) -> Result<FiniteCategory, Failure> {
    let text = read(path)?;
    let doc = parse_document(&text).map_err(Error::from)?;
    Ok(doc.build()?)
}

fn algebra(path: &PathBuf) -> Result<CatAlgebra, Failure> {
    Ok(CatAlgebra::new(load(path)?).map_err(Error::from)?)
}

fn pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json value");
    s.push('\n');
    s
}

fn dispatch(command: Command) -> CmdResult {
    match command {
        Command::Validate(a) => validate(&a),
        Command::Basis(a) => basis(&a),
        Command::Norms(a) => norms(&a),
        Command::Table(a) => table(&a),
        Command::Clifford(a) => clifford(&a),
        Command::Embed(a) => {
            let c = load(&a.file)?;
            Ok(pretty(&serde_json::to_value(export_embedding(&c)).expect("embedding")))
        }
        Command::Dot { args, basis_only } => {
            let alg = algebra(&args.file)?;
            let text = export_dot(alg.category(), Some(alg.norms()), DotOptions { basis_only });
            if args.json {
                Ok(pretty(&json!({ "dot": text })))
            } else {
                Ok(text)
            }
        }
        Command::Product { file, f, g, json } => product(&file, &f, &g, json),
        Command::Example { name, out } => example(&name, out),
        Command::Interval { op } => interval(op),
    }
}

fn validate(a: &FileArgs) -> CmdResult {
    let text = read(&a.file)?;
    let doc = parse_document(&text).map_err(Error::from)?;
    let c = doc.build_unvalidated()?;
    let violations = c.validate_axioms();
    let out = if a.json {
        pretty(&json!({
            "mode": c.mode().as_str(),
            "objects": c.object_count(),
            "arrows": c.arrow_count(),
            "non_identity_arrows": c.non_identity_count(),
            "violations": violations,
        }))
    } else {
        let mut s = format!(
            "mode: {}\nobjects: {}\narrows: {} ({} non-identity)\nviolations: {}\n",
            c.mode(),
            c.object_count(),
            c.arrow_count(),
            c.non_identity_count(),
            violations.len()
        );
        for v in &violations {
            writeln!(s, "  {v}").unwrap();
        }
        s
    };
    if violations.is_empty() {
        Ok(out)
    } else {
        Err(Failure {
            status: EXIT_SEMANTIC,
            message: format!("{} axiom violation(s)\n{out}", violations.len()),
        })
    }
}

fn basis(a: &FileArgs) -> CmdResult {
    let alg = algebra(&a.file)?;
    let ids = alg.basis().ids(alg.category());
    Ok(if a.json {
        pretty(&json!({ "basis": ids }))
    } else {
        ids.iter().map(|id| format!("{id}\n")).collect()
    })
}

fn norms(a: &FileArgs) -> CmdResult {
    let alg = algebra(&a.file)?;
    let c = alg.category();
    let entries: Vec<(&str, u32)> = alg
        .norms()
        .entries()
        .map(|(arrow, n)| (c.arrow_id(arrow), n))
        .collect();
    Ok(if a.json {
        let map: serde_json::Map<String, Value> =
            entries.iter().map(|(id, n)| (id.to_string(), json!(n))).collect();
        pretty(&json!({ "norms": map, "zero": 0 }))
    } else {
        let mut s = String::from("O = 0\n");
        for (id, n) in entries {
            writeln!(s, "{id} = {n}").unwrap();
        }
        s
    })
}

fn multivector_json(alg: &CatAlgebra, m: &CatMultivector) -> Value {
    let c = alg.category();
    let blades: Vec<Value> = m
        .blades()
        .map(|(b, k)| {
            json!({
                "first": c.arrow_id(*b.first()),
                "second": c.arrow_id(*b.second()),
                "coefficient": k,
                "area": blade_area(alg, b),
            })
        })
        .collect();
    json!({ "scalar": m.scalar_part(), "blades": blades })
}

fn product(file: &PathBuf, f: &str, g: &str, as_json: bool) -> CmdResult {
    let alg = algebra(file)?;
    let (vf, vg) = (alg.vector_named(f)?, alg.vector_named(g)?);
    let c = alg.category();
    let (fg, gf) = (alg.geometric(vf, vg), alg.geometric(vg, vf));
    let outer = alg.outer(vf, vg);
    let anti = alg.anticommutator(vf, vg);
    let dist = |x: Vector, y: Vector| distance(c, alg.norms(), x, y).ok();
    let (f, g) = (vector_name(c, vf), vector_name(c, vg));
    Ok(if as_json {
        pretty(&json!({
            "f": f,
            "g": g,
            "norm_f": alg.norms().norm(vf),
            "norm_g": alg.norms().norm(vg),
            "inner_fg": alg.inner(vf, vg),
            "inner_gf": alg.inner(vg, vf),
            "outer_fg": multivector_json(&alg, &outer),
            "geometric_fg": multivector_json(&alg, &fg),
            "geometric_gf": multivector_json(&alg, &gf),
            "anticommutator": multivector_json(&alg, &anti),
            "orthogonal": alg.is_orthogonal(vf, vg),
            "parallel": alg.is_parallel(vf, vg),
            "distance_fg": dist(vf, vg),
        }))
    } else {
        let mut s = String::new();
        writeln!(s, "f = {f}, g = {g}").unwrap();
        writeln!(s, "||f|| = {}, ||g|| = {}", alg.norms().norm(vf), alg.norms().norm(vg)).unwrap();
        writeln!(s, "f·g = {}", alg.inner(vf, vg)).unwrap();
        writeln!(s, "g·f = {}", alg.inner(vg, vf)).unwrap();
        writeln!(s, "f∧g = {}", alg.render(&outer)).unwrap();
        writeln!(s, "fg = {}", alg.render(&fg)).unwrap();
        writeln!(s, "gf = {}", alg.render(&gf)).unwrap();
        writeln!(s, "fg + gf = {}", alg.render(&anti)).unwrap();
        writeln!(s, "orthogonal: {}", alg.is_orthogonal(vf, vg)).unwrap();
        writeln!(s, "parallel: {}", alg.is_parallel(vf, vg)).unwrap();
        match dist(vf, vg) {
            Some(d) => writeln!(s, "d(f, g) = {d}").unwrap(),
            None => writeln!(s, "d(f, g) undefined").unwrap(),
        }
        s
    })
}

fn table(a: &FileArgs) -> CmdResult {
    let alg = algebra(&a.file)?;
    let c = alg.category();
    let arrows: Vec<Vector> = c.non_identity_arrows().map(Vector::Arrow).collect();
    let mut rows = Vec::new();
    let mut s = String::new();
    for &f in &arrows {
        for &g in &arrows {
            let m = alg.anticommutator(f, g);
            let (fname, gname) = (vector_name(c, f), vector_name(c, g));
            if a.json {
                rows.push(json!({ "f": fname, "g": gname, "anticommutator": multivector_json(&alg, &m) }));
            } else {
                writeln!(s, "{fname} {gname} : {}", alg.render(&m)).unwrap();
            }
        }
    }
    Ok(if a.json { pretty(&json!({ "entries": rows })) } else { s })
}

fn clifford(a: &FileArgs) -> CmdResult {
    let alg = algebra(&a.file)?;
    let report = alg.clifford_report();
    let out = if a.json {
        pretty(&json!({ "holds": report.holds(), "report": report }))
    } else {
        let mut s = String::new();
        writeln!(
            s,
            "e² = 1 on the basis: {} ({} checked)",
            if report.square_failures.is_empty() { "holds" } else { "FAILS" },
            report.basis_checked
        )
        .unwrap();
        for e in &report.square_failures {
            writeln!(s, "  counterexample: {e}").unwrap();
        }
        writeln!(
            s,
            "fg = -gf on orthogonal pairs: {} ({} checked)",
            if report.anticommutation_failures.is_empty() { "holds" } else { "FAILS" },
            report.orthogonal_pairs_checked
        )
        .unwrap();
        for (f, g) in &report.anticommutation_failures {
            writeln!(s, "  counterexample: {f}, {g}").unwrap();
        }
        s
    };
    if report.holds() {
        Ok(out)
    } else {
        Err(Failure {
            status: EXIT_SEMANTIC,
            message: format!("Clifford conditions fail\n{out}"),
        })
    }
}

fn example(name: &str, out: Option<PathBuf>) -> CmdResult {
    let doc = builtin_example(name).ok_or_else(|| Failure {
        status: EXIT_USAGE,
        message: format!("unknown example {name:?}; available: {}", EXAMPLE_NAMES.join(", ")),
    })?;
    let text = doc.to_json();
    match out {
        None => Ok(text),
        Some(path) => {
            fs::write(&path, text).map_err(|e| Failure {
                status: EXIT_USAGE,
                message: format!("cannot write {}: {e}", path.display()),
            })?;
            Ok(String::new())
        }
    }
}

fn parse_interval(text: &str) -> Result<IntervalVector, Failure> {
    if text == "O" {
        return Ok(Vector::Zero);
    }
    let (lo, hi) = text.split_once(':').ok_or_else(|| Failure {
        status: EXIT_USAGE,
        message: format!("expected LO:HI or O, got {text:?}"),
    })?;
    Ok(Vector::Arrow(IntervalArrow::parse(lo, hi).map_err(Error::from)?))
}

fn interval_vector_text(v: &IntervalVector) -> String {
    match v {
        Vector::Zero => "O".into(),
        Vector::Arrow(a) => a.to_string(),
    }
}

fn interval_mv_json(m: &IntervalMultivector) -> Value {
    let blades: Vec<Value> = m
        .blades()
        .map(|(b, k)| {
            json!({
                "first": b.first(),
                "second": b.second(),
                "coefficient": k,
                "area": blade_area(&RealLine, b),
            })
        })
        .collect();
    json!({ "scalar": m.scalar_part(), "blades": blades })
}

fn interval(op: IntervalOp) -> CmdResult {
    match op {
        IntervalOp::Norm { f } => match parse_interval(&f)? {
            Vector::Zero => Ok("0\n".into()),
            Vector::Arrow(a) => Ok(format!("{}\n", interval_norm(&a))),
        },
        IntervalOp::Add { f, g, json } => {
            let sum = interval_add(&parse_interval(&f)?, &parse_interval(&g)?).map_err(Error::from)?;
            Ok(if json {
                pretty(&match &sum {
                    Vector::Zero => json!("O"),
                    Vector::Arrow(a) => json!(a),
                })
            } else {
                format!("{}\n", interval_vector_text(&sum))
            })
        }
        IntervalOp::Product { f, g, json } => {
            let (f, g) = (parse_interval(&f)?, parse_interval(&g)?);
            let fg = interval_products(&f, &g);
            let gf = interval_products(&g, &f);
            let anti = interval_anticommutator(&f, &g);
            Ok(if json {
                pretty(&json!({
                    "inner_fg": fg.inner,
                    "inner_gf": gf.inner,
                    "outer_fg": interval_mv_json(&fg.outer),
                    "geometric_fg": interval_mv_json(&fg.geometric),
                    "geometric_gf": interval_mv_json(&gf.geometric),
                    "anticommutator": interval_mv_json(&anti),
                }))
            } else {
                let mut s = String::new();
                writeln!(s, "f = {}, g = {}", interval_vector_text(&f), interval_vector_text(&g)).unwrap();
                writeln!(s, "f·g = {}", fg.inner).unwrap();
                writeln!(s, "g·f = {}", gf.inner).unwrap();
                writeln!(s, "f∧g = {}", fg.outer).unwrap();
                writeln!(s, "fg = {}", fg.geometric).unwrap();
                writeln!(s, "gf = {}", gf.geometric).unwrap();
                writeln!(s, "fg + gf = {}", anti).unwrap();
                s
            })
        }
    }
}
