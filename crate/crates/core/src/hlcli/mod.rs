//! Command-line front end: `homlie <command> [--json] …`.
//!
//! Exit codes: 0 on success or when every reported verdict holds, 1 when a
//! verdict fails, 2 on errors.

pub mod format;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

pub use format::{
    parse_algebra, parse_certificate, parse_matrix, parse_representation,
    parse_representation_with, read_algebra, read_certificate, read_representation,
    read_representation_lenient, serialize_algebra, serialize_certificate, serialize_matrix,
    serialize_representation, Resolver,
};

use crate::adopipe::{ado, verify_representation, AdoOptions, AdoPath, DEFAULT_MAX_FREE_DIM};
use crate::error::Result;
use crate::exactla::{format_scalar, format_vector, Scalar};
use crate::freehl::{free_multiplicative_nilpotent, present_as_quotient};
use crate::homassoc::check_hom_associative;
use crate::homcore::{
    center, check_anticommutative, check_hom_lie, check_multiplicative, check_nondegenerate,
    current_algebra, lower_central_series, nilindex, untwist, yau_twist, Flavor, HomAlgebra,
};
use crate::homrep::tensor_rep;
use crate::verdict::Verdict;
use crate::Poly;

#[derive(Parser, Debug)]
#[command(
    name = "homlie",
    version,
    about = "Exact computations with Hom-Lie and Hom-associative algebras"
)]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms of an algebra.
    Check { file: PathBuf },
    /// Center, lower central series, nilindex and axiom checks.
    Info { file: PathBuf },
    /// Compose the twist with an endomorphism of the underlying Lie algebra.
    YauTwist {
        file: PathBuf,
        /// Matrix file with the endomorphism.
        #[arg(long)]
        endo: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recover the underlying Lie algebra of a multiplicative algebra.
    Untwist {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The current algebra `L ⊗ tK[t]/(t^n)`.
    Current {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The free multiplicative nilpotent algebra on `gens` generators.
    Free {
        #[arg(long)]
        gens: usize,
        #[arg(long)]
        class: usize,
        /// Monic polynomial in T annihilating the twist, e.g. "T^2-2".
        #[arg(long)]
        poly: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Present an algebra as a quotient of a free one.
    Present {
        file: PathBuf,
        /// Where to write the free algebra.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a faithful nilpotent multiplicative nondegenerate representation.
    Ado {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        tensor_bound: usize,
        /// Largest free algebra the general construction may present through.
        #[arg(long, default_value_t = DEFAULT_MAX_FREE_DIM)]
        max_free_dim: usize,
        /// Skip the graded construction.
        #[arg(long, conflicts_with = "graded")]
        general: bool,
        /// Fail instead of falling back to the general construction.
        #[arg(long)]
        graded: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Recompute every law of a representation or certificate.
    VerifyRep { algebra: PathBuf, rep: PathBuf },
    /// Tensor product of two multiplicative representations.
    TensorRep {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Report {
    json: Value,
    text: String,
    ok: bool,
}

impl Report {
    fn new(json: Value, text: String) -> Self {
        Self {
            json,
            text,
            ok: true,
        }
    }
}

fn scalars(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(format_scalar(x))).collect())
}

fn verdict_json(v: &Verdict) -> Value {
    match v.witness() {
        None => json!({ "holds": true }),
        Some(w) => json!({
            "holds": false,
            "witness": { "law": w.law, "indices": w.indices, "residual": scalars(&w.residual) },
        }),
    }
}

fn verdict_text(name: &str, v: &Verdict) -> String {
    match v.witness() {
        None => format!("{name}: true\n"),
        Some(w) => format!("{name}: false ({w})\n"),
    }
}

fn axiom_checks(a: &HomAlgebra) -> Vec<(&'static str, Verdict)> {
    let mut out = Vec::new();
    match a.flavor() {
        Flavor::Lie => {
            out.push(("anticommutative", check_anticommutative(a)));
            out.push(("hom-lie", check_hom_lie(a)));
        }
        Flavor::Associative => out.push(("hom-associative", check_hom_associative(a))),
        Flavor::Plain => {}
    }
    out.push(("multiplicative", check_multiplicative(a)));
    out.push(("nondegenerate", check_nondegenerate(a)));
    out
}

fn checks_report(
    checks: &[(&'static str, Verdict)],
) -> (serde_json::Map<String, Value>, String, bool) {
    let mut map = serde_json::Map::new();
    let mut text = String::new();
    for (name, v) in checks {
        map.insert((*name).to_string(), verdict_json(v));
        text.push_str(&verdict_text(name, v));
    }
    (map, text, checks.iter().all(|(_, v)| v.holds()))
}

fn write_or_inline(
    out: &Option<PathBuf>,
    contents: String,
    json: &mut Value,
    key: &str,
) -> Result<String> {
    match out {
        Some(path) => {
            std::fs::write(path, &contents)?;
            json["written"] = Value::String(path.display().to_string());
            Ok(format!("written to {}\n", path.display()))
        }
        None => {
            json[key] = Value::String(contents.clone());
            Ok(contents)
        }
    }
}

fn algebra_output(a: &HomAlgebra, out: &Option<PathBuf>, command: &str) -> Result<Report> {
    let mut j = json!({ "command": command, "dim": a.dim(), "flavor": a.flavor().name() });
    let text = write_or_inline(out, serialize_algebra(a), &mut j, "algebra")?;
    Ok(Report::new(j, text))
}

fn subspace_json(s: &crate::Subspace) -> Value {
    Value::Array(s.basis().iter().map(|v| scalars(v)).collect())
}

fn subspace_text(s: &crate::Subspace) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = s.basis().iter().map(|v| format_vector(v)).collect();
    format!("span{{{}}}", parts.join(", "))
}

fn check(file: &Path) -> Result<Report> {
    let a = read_algebra(file)?;
    let (map, text, ok) = checks_report(&axiom_checks(&a));
    let json = json!({ "command": "check", "dim": a.dim(), "flavor": a.flavor().name(), "checks": map, "holds": ok });
    Ok(Report { json, text, ok })
}

fn info(file: &Path) -> Result<Report> {
    let a = read_algebra(file)?;
    let (map, checks_text, _) = checks_report(&axiom_checks(&a));
    let c = center(&a);
    let lcs = lower_central_series(&a);
    let dims: Vec<usize> = lcs.iter().map(crate::Subspace::dim).collect();
    let nil = nilindex(&a);
    let char_poly = a.twist().char_poly().to_string();
    let min_poly = a.twist().min_poly().to_string();
    let json = json!({
        "command": "info",
        "dim": a.dim(),
        "flavor": a.flavor().name(),
        "center": subspace_json(&c),
        "lower_central_series": dims,
        "nilindex": nil,
        "twist_char_poly": char_poly,
        "twist_min_poly": min_poly,
        "checks": map,
    });
    let dims_text: Vec<String> = dims.iter().map(ToString::to_string).collect();
    let text = format!(
        "dim: {}\nflavor: {}\ncenter: {}\nlower central series dims: {}\nnilindex: {}\ntwist char poly: {char_poly}\ntwist min poly: {min_poly}\n{checks_text}",
        a.dim(),
        a.flavor(),
        subspace_text(&c),
        dims_text.join(" > "),
        nil.map_or("none".to_string(), |n| n.to_string()),
    );
    Ok(Report::new(json, text))
}

fn free(gens: usize, class: usize, poly: &str, out: &Option<PathBuf>) -> Result<Report> {
    let f = Poly::parse(poly)?;
    let m = free_multiplicative_nilpotent(gens, class, &f)?;
    let words: Vec<String> = m.words.iter().map(ToString::to_string).collect();
    let degree_dims: Vec<usize> = (1..class).map(|d| m.degree_range(d).len()).collect();
    let mut j = json!({
        "command": "free",
        "dim": m.algebra.dim(),
        "degree_dims": degree_dims,
        "words": words,
        "poly": f.to_string(),
    });
    let mut text = format!("dim: {}\n", m.algebra.dim());
    for (k, w) in words.iter().enumerate() {
        text.push_str(&format!("e{}: {w}\n", k + 1));
    }
    if let Some(path) = out {
        std::fs::write(path, serialize_algebra(&m.algebra))?;
        j["written"] = Value::String(path.display().to_string());
        text.push_str(&format!("written to {}\n", path.display()));
    }
    Ok(Report::new(j, text))
}

fn present(file: &Path, out: &Option<PathBuf>) -> Result<Report> {
    let l = read_algebra(file)?;
    let p = present_as_quotient(&l)?;
    let mut j = json!({
        "command": "present",
        "generators": p.free.generators,
        "class": p.free.class,
        "poly": p.free.poly.to_string(),
        "free_dim": p.free.algebra.dim(),
        "kernel_dim": p.kernel.dim(),
        "kernel": subspace_json(&p.kernel),
    });
    let mut text = format!(
        "generators: {}\nclass: {}\npoly: {}\nfree algebra dim: {}\nkernel dim: {}\nkernel: {}\n",
        p.free.generators,
        p.free.class,
        p.free.poly,
        p.free.algebra.dim(),
        p.kernel.dim(),
        subspace_text(&p.kernel)
    );
    if let Some(path) = out {
        std::fs::write(path, serialize_algebra(&p.free.algebra))?;
        j["written"] = Value::String(path.display().to_string());
        text.push_str(&format!("written to {}\n", path.display()));
    }
    Ok(Report::new(j, text))
}

#[allow(clippy::too_many_arguments)]
fn run_ado(
    file: &Path,
    tensor_bound: usize,
    max_free_dim: usize,
    general: bool,
    graded: bool,
    out: &Option<PathBuf>,
    cert_path: &Option<PathBuf>,
) -> Result<Report> {
    let l = read_algebra(file)?;
    let path = match (general, graded) {
        (true, _) => AdoPath::GeneralOnly,
        (_, true) => AdoPath::GradedOnly,
        _ => AdoPath::Auto,
    };
    let options = AdoOptions {
        tensor_bound,
        path,
        max_free_dim,
        ..AdoOptions::default()
    };
    let cert = ado(&l, &options)?;
    let v = &cert.verdicts;
    let trace: Vec<Value> = cert
        .trace
        .iter()
        .map(|s| json!({ "step": s.label, "dimension": s.dimension }))
        .collect();
    let mut j = json!({
        "command": "ado",
        "module_dim": cert.representation.module_dim(),
        "verdicts": {
            "faithful": v.faithful,
            "nilpotent": v.nilindex.is_some(),
            "multiplicative": v.multiplicative,
            "nondegenerate": v.nondegenerate,
        },
        "nilindex": v.nilindex,
        "trace": trace,
        "valid": cert.is_valid(),
    });
    let mut text = format!(
        "module dim: {}\nfaithful: {}\nnilpotent: {}\nmultiplicative: {}\nnondegenerate: {}\nnilindex: {}\n",
        cert.representation.module_dim(),
        v.faithful,
        v.nilindex.is_some(),
        v.multiplicative,
        v.nondegenerate,
        v.nilindex.map_or("none".to_string(), |n| n.to_string()),
    );
    for s in &cert.trace {
        text.push_str(&format!("trace: {} {}\n", s.label, s.dimension));
    }
    if let Some(p) = out {
        std::fs::write(p, serialize_representation(&cert.representation))?;
        j["written"] = Value::String(p.display().to_string());
        text.push_str(&format!("representation written to {}\n", p.display()));
    }
    if let Some(p) = cert_path {
        std::fs::write(p, serialize_certificate(&cert))?;
        j["certificate"] = Value::String(p.display().to_string());
        text.push_str(&format!("certificate written to {}\n", p.display()));
    }
    Ok(Report {
        json: j,
        text,
        ok: cert.is_valid(),
    })
}

fn verify_rep(algebra: &Path, rep: &Path) -> Result<Report> {
    let l = read_algebra(algebra)?;
    let rho = read_representation_lenient(rep)?;
    let report = verify_representation(&l, &rho);
    let mut map = serde_json::Map::new();
    for (name, v) in &report.laws {
        map.insert((*name).to_string(), verdict_json(v));
    }
    let ok = report.passed();
    let json = json!({
        "command": "verify-rep",
        "module_dim": rho.module_dim(),
        "laws": map,
        "nilindex": report.nilindex,
        "passed": ok,
    });
    Ok(Report {
        json,
        text: format!("{report}\n"),
        ok,
    })
}

fn tensor(left: &Path, right: &Path, out: &Option<PathBuf>) -> Result<Report> {
    let a = read_representation_lenient(left)?;
    let b = read_representation_lenient(right)?;
    let t = tensor_rep(&a, &b)?;
    let mut j = json!({ "command": "tensor-rep", "module_dim": t.module_dim() });
    let text = write_or_inline(out, serialize_representation(&t), &mut j, "representation")?;
    Ok(Report::new(j, text))
}

fn dispatch(command: &Command) -> Result<Report> {
    match command {
        Command::Check { file } => check(file),
        Command::Info { file } => info(file),
        Command::YauTwist { file, endo, out } => {
            let l = read_algebra(file)?;
            let phi = parse_matrix(&std::fs::read_to_string(endo)?)?;
            algebra_output(&yau_twist(&l, &phi)?, out, "yau-twist")
        }
        Command::Untwist { file, out } => {
            algebra_output(&untwist(&read_algebra(file)?)?, out, "untwist")
        }
        Command::Current { file, n, out } => {
            algebra_output(&current_algebra(&read_algebra(file)?, *n)?, out, "current")
        }
        Command::Free {
            gens,
            class,
            poly,
            out,
        } => free(*gens, *class, poly, out),
        Command::Present { file, out } => present(file, out),
        Command::Ado {
            file,
            tensor_bound,
            max_free_dim,
            general,
            graded,
            out,
            cert,
        } => run_ado(
            file,
            *tensor_bound,
            *max_free_dim,
            *general,
            *graded,
            out,
            cert,
        ),
        Command::VerifyRep { algebra, rep } => verify_rep(algebra, rep),
        Command::TensorRep { left, right, out } => tensor(left, right, out),
    }
}

/// Runs the command line `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok(report) => {
            let _ = if cli.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("json values serialize")
                )
            } else {
                write!(out, "{}", report.text)
            };
            if report.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = if cli.json {
                let j = json!({ "error": { "code": e.code(), "message": e.to_string() } });
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&j).expect("json values serialize")
                )
            } else {
                writeln!(err, "error[{}]: {e}", e.code())
            };
            2
        }
    }
}
