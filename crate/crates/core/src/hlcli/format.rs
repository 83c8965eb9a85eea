//! Line-oriented text formats.
//!
//! Algebra (`.hla`):
//!
//! ```text
//! # Heisenberg algebra
//! dim 3
//! basis e1 e2 e3
//! flavor lie
//! bracket e1 e2 = 1 e3
//! twist e1 = 1 e1
//! ```
//!
//! Without any `twist` line the twist is the identity; once one is present,
//! undeclared columns are zero. `bracket` and `product` are synonyms. For
//! `flavor lie` each unordered pair may be declared once and the opposite
//! bracket is filled in with the opposite sign.
//!
//! Representation (`.rep`): `algebra inline` followed by algebra lines and
//! `end`, or `algebra <path>`; then `module_dim <m>`, optional
//! `orientation left|right`, `action <basis> row <r> = <m coefficients>` and
//! `beta row <r> = <m coefficients>` (rows are 1-based, missing rows are
//! zero; without `beta` lines the module twist is the identity).
//!
//! Certificate (`.cert`): a representation followed by
//! `verdict <law> = true|false`, `nilindex <n>|none` and
//! `trace <label> <dimension>` lines.
//!
//! Matrix (`.mat`): `matrix <rows> <cols>` then `row <r> = <coefficients>`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use num_traits::{One, Zero};

use crate::adopipe::{AdoCertificate, CertificateVerdicts, TraceStep};
use crate::error::{Error, Result};
use crate::exactla::{format_scalar, parse_scalar, Matrix, Scalar};
use crate::homcore::{sparse, Flavor, HomAlgebra, SparseVec};
use crate::homrep::{HomRepresentation, Orientation};

#[derive(Clone, Copy, Debug)]
struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn tokenize(text: &str, first_line: usize) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (i, ch) in content
            .char_indices()
            .chain(std::iter::once((content.len(), ' ')))
        {
            match (ch.is_whitespace(), start) {
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &content[s..i],
                        column: content[..s].chars().count() + 1,
                    });
                    start = None;
                }
                (false, None) => start = Some(i),
                _ => {}
            }
        }
        if !tokens.is_empty() {
            out.push(Line {
                number: first_line + k,
                tokens,
            });
        }
    }
    out
}

impl<'a> Line<'a> {
    fn end_column(&self) -> usize {
        self.tokens
            .last()
            .map_or(1, |t| t.column + t.text.chars().count())
    }

    fn get(&self, i: usize, what: &str) -> Result<Token<'a>> {
        self.tokens
            .get(i)
            .copied()
            .ok_or_else(|| parse_err(self.number, self.end_column(), format!("expected {what}")))
    }

    fn expect(&self, i: usize, text: &str) -> Result<()> {
        let t = self.get(i, &format!("'{text}'"))?;
        if t.text != text {
            return Err(parse_err(
                self.number,
                t.column,
                format!("expected '{text}', found '{}'", t.text),
            ));
        }
        Ok(())
    }

    fn usize_at(&self, i: usize, what: &str) -> Result<usize> {
        let t = self.get(i, what)?;
        t.text.parse().map_err(|_| {
            parse_err(
                self.number,
                t.column,
                format!("expected {what}, found '{}'", t.text),
            )
        })
    }

    fn scalar_at(&self, i: usize) -> Result<Scalar> {
        let t = self.get(i, "a coefficient")?;
        parse_scalar(t.text).ok_or_else(|| {
            parse_err(
                self.number,
                t.column,
                format!("expected a coefficient, found '{}'", t.text),
            )
        })
    }

    fn no_more(&self, i: usize) -> Result<()> {
        match self.tokens.get(i) {
            None => Ok(()),
            Some(t) => Err(parse_err(
                self.number,
                t.column,
                format!("unexpected '{}'", t.text),
            )),
        }
    }

    /// `r1 r2 … rm` from token `i` on.
    fn row_at(&self, i: usize, m: usize) -> Result<Vec<Scalar>> {
        let row = (i..i + m)
            .map(|k| self.scalar_at(k))
            .collect::<Result<Vec<_>>>()?;
        self.no_more(i + m)?;
        Ok(row)
    }
}

struct Names {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Names {
    fn new(names: Vec<String>) -> Self {
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        Self { names, index }
    }

    fn default_for(dim: usize) -> Self {
        Self::new((1..=dim).map(|i| format!("e{i}")).collect())
    }

    fn lookup(&self, line: &Line, i: usize) -> Result<usize> {
        let t = line.get(i, "a basis element")?;
        self.index.get(t.text).copied().ok_or_else(|| {
            parse_err(
                line.number,
                t.column,
                format!("unknown basis element '{}'", t.text),
            )
        })
    }

    /// `c₁ b₁ ± c₂ b₂ …` or `0` from token `i` to the end of the line; a
    /// missing coefficient means 1.
    fn terms(&self, line: &Line, mut i: usize) -> Result<SparseVec> {
        let first = line.get(i, "a linear combination")?;
        if first.text == "0" && line.tokens.len() == i + 1 {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut sign = Scalar::one();
        loop {
            let t = line.get(i, "a term")?;
            let (coeff, name_at) = if self.index.contains_key(t.text) {
                (Scalar::one(), i)
            } else {
                (line.scalar_at(i)?, i + 1)
            };
            let b = self.lookup(line, name_at)?;
            out.push((b, &sign * &coeff));
            i = name_at + 1;
            match line.tokens.get(i) {
                None => break,
                Some(t) if t.text == "+" => sign = Scalar::one(),
                Some(t) if t.text == "-" => sign = -Scalar::one(),
                Some(t) => {
                    return Err(parse_err(
                        line.number,
                        t.column,
                        format!("expected '+' or '-', found '{}'", t.text),
                    ))
                }
            }
            i += 1;
        }
        Ok(sparse::normalize(out))
    }
}

struct NamedAlgebra {
    algebra: HomAlgebra,
    names: Names,
}

fn parse_algebra_lines(lines: &[Line]) -> Result<NamedAlgebra> {
    let mut dim: Option<usize> = None;
    let mut names: Option<Names> = None;
    let mut flavor = Flavor::Lie;
    let mut products: Vec<(usize, usize, usize, SparseVec)> = Vec::new();
    let mut twists: Vec<(usize, usize, SparseVec)> = Vec::new();

    let need_names = |dim: Option<usize>, names: &mut Option<Names>, line: &Line| -> Result<()> {
        if names.is_none() {
            let d = dim.ok_or_else(|| parse_err(line.number, 1, "'dim' must come first"))?;
            *names = Some(Names::default_for(d));
        }
        Ok(())
    };

    for line in lines {
        let head = line.tokens[0];
        match head.text {
            "dim" => {
                if dim.is_some() {
                    return Err(parse_err(line.number, head.column, "'dim' declared twice"));
                }
                dim = Some(line.usize_at(1, "a dimension")?);
                line.no_more(2)?;
            }
            "basis" => {
                let d = dim
                    .ok_or_else(|| parse_err(line.number, head.column, "'dim' must come first"))?;
                let list: Vec<String> = line.tokens[1..]
                    .iter()
                    .map(|t| t.text.to_string())
                    .collect();
                if list.len() != d {
                    return Err(Error::DimensionMismatch(format!(
                        "line {}: {} basis names for dimension {d}",
                        line.number,
                        list.len()
                    )));
                }
                let n = Names::new(list);
                if n.index.len() != d {
                    return Err(parse_err(
                        line.number,
                        head.column,
                        "basis names must be distinct",
                    ));
                }
                if n.names
                    .iter()
                    .any(|s| s == "+" || s == "-" || s == "=" || parse_scalar(s).is_some())
                {
                    return Err(parse_err(
                        line.number,
                        head.column,
                        "basis names must not be numbers or operators",
                    ));
                }
                names = Some(n);
            }
            "flavor" => {
                let t = line.get(1, "a flavor")?;
                flavor = match t.text {
                    "lie" => Flavor::Lie,
                    "assoc" => Flavor::Associative,
                    "plain" => Flavor::Plain,
                    other => {
                        return Err(parse_err(
                            line.number,
                            t.column,
                            format!("unknown flavor '{other}'"),
                        ))
                    }
                };
                line.no_more(2)?;
            }
            "bracket" | "product" => {
                need_names(dim, &mut names, line)?;
                let n = names.as_ref().expect("set above");
                let i = n.lookup(line, 1)?;
                let j = n.lookup(line, 2)?;
                line.expect(3, "=")?;
                products.push((line.number, i, j, n.terms(line, 4)?));
            }
            "twist" => {
                need_names(dim, &mut names, line)?;
                let n = names.as_ref().expect("set above");
                let i = n.lookup(line, 1)?;
                line.expect(2, "=")?;
                twists.push((line.number, i, n.terms(line, 3)?));
            }
            other => {
                return Err(parse_err(
                    line.number,
                    head.column,
                    format!("unknown declaration '{other}'"),
                ))
            }
        }
    }

    let d = dim.ok_or_else(|| parse_err(1, 1, "missing 'dim'"))?;
    let names = names.unwrap_or_else(|| Names::default_for(d));
    let mut table: Vec<Option<SparseVec>> = vec![None; d * d];
    let mut declared: HashMap<(usize, usize), usize> = HashMap::new();
    for (line, i, j, v) in products {
        let key = if flavor == Flavor::Lie {
            (i.min(j), i.max(j))
        } else {
            (i, j)
        };
        if declared.insert(key, line).is_some() {
            return Err(Error::AntisymmetryConflict {
                line,
                left: names.names[i].clone(),
                right: names.names[j].clone(),
            });
        }
        if flavor == Flavor::Lie {
            if i == j && !v.is_empty() {
                return Err(Error::NotAnticommutative(i, j));
            }
            table[j * d + i] = Some(sparse::scale(&v, &-Scalar::one()));
        }
        table[i * d + j] = Some(v);
    }
    let products: Vec<SparseVec> = table.into_iter().map(Option::unwrap_or_default).collect();

    let twist = if twists.is_empty() {
        Matrix::identity(d)
    } else {
        let mut m = Matrix::zeros(d, d);
        let mut seen = vec![false; d];
        for (line, i, v) in twists {
            if std::mem::replace(&mut seen[i], true) {
                return Err(parse_err(
                    line,
                    1,
                    format!("twist of {} declared twice", names.names[i]),
                ));
            }
            for (k, c) in v {
                m[(k, i)] = c;
            }
        }
        m
    };
    let algebra = HomAlgebra::from_sparse(flavor, d, products, twist)?;
    Ok(NamedAlgebra { algebra, names })
}

pub fn parse_algebra(text: &str) -> Result<HomAlgebra> {
    parse_algebra_lines(&tokenize(text, 1)).map(|n| n.algebra)
}

fn format_terms(v: &[(usize, Scalar)], names: &[String]) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (i, c)) in v.iter().enumerate() {
        let negative = c < &Scalar::zero();
        let abs = if negative { -c } else { c.clone() };
        match (k, negative) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        let _ = write!(s, "{} {}", format_scalar(&abs), names[*i]);
    }
    s
}

pub fn serialize_algebra(a: &HomAlgebra) -> String {
    let d = a.dim();
    let names = Names::default_for(d).names;
    let mut s = String::new();
    let _ = writeln!(s, "dim {d}");
    if d > 0 {
        let _ = writeln!(s, "basis {}", names.join(" "));
    }
    let _ = writeln!(s, "flavor {}", a.flavor().name());
    let keyword = if a.flavor() == Flavor::Lie {
        "bracket"
    } else {
        "product"
    };
    for i in 0..d {
        let start = if a.flavor() == Flavor::Lie { i + 1 } else { 0 };
        for j in start..d {
            let v = a.basis_product(i, j);
            if !v.is_empty() {
                let _ = writeln!(
                    s,
                    "{keyword} {} {} = {}",
                    names[i],
                    names[j],
                    format_terms(v, &names)
                );
            }
        }
    }
    for i in 0..d {
        let _ = writeln!(
            s,
            "twist {} = {}",
            names[i],
            format_terms(a.twist_column(i), &names)
        );
    }
    s
}

fn format_row(row: &[Scalar]) -> String {
    row.iter().map(format_scalar).collect::<Vec<_>>().join(" ")
}

pub fn serialize_matrix(m: &Matrix) -> String {
    let mut s = format!("matrix {} {}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        let _ = writeln!(s, "row {} = {}", r + 1, format_row(m.row(r)));
    }
    s
}

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let lines = tokenize(text, 1);
    let header = lines
        .first()
        .ok_or_else(|| parse_err(1, 1, "missing 'matrix' header"))?;
    header.expect(0, "matrix")?;
    let rows = header.usize_at(1, "a row count")?;
    let cols = header.usize_at(2, "a column count")?;
    header.no_more(3)?;
    let mut m = Matrix::zeros(rows, cols);
    for line in &lines[1..] {
        line.expect(0, "row")?;
        let r = row_index(line, 1, rows)?;
        line.expect(2, "=")?;
        for (c, x) in line.row_at(3, cols)?.into_iter().enumerate() {
            m[(r, c)] = x;
        }
    }
    Ok(m)
}

fn row_index(line: &Line, i: usize, rows: usize) -> Result<usize> {
    let r = line.usize_at(i, "a row number")?;
    if r == 0 || r > rows {
        let t = line.get(i, "a row number")?;
        return Err(parse_err(
            line.number,
            t.column,
            format!("row {r} outside 1..={rows}"),
        ));
    }
    Ok(r - 1)
}

/// Loads the text of an `algebra <path>` reference.
pub type Resolver<'r> = &'r dyn Fn(&str) -> Result<String>;

struct RepPayload {
    rep: HomRepresentation,
    verdicts: Vec<(String, bool, usize)>,
    nilindex: Option<Option<usize>>,
    trace: Vec<TraceStep>,
}

fn parse_rep_payload(
    text: &str,
    resolver: Option<Resolver>,
    allow_cert: bool,
) -> Result<RepPayload> {
    let lines = tokenize(text, 1);
    let mut k = 0;
    let first = lines
        .first()
        .ok_or_else(|| parse_err(1, 1, "missing 'algebra' declaration"))?;
    first.expect(0, "algebra")?;
    let src = first.get(1, "'inline' or a path")?;
    let named = if src.text == "inline" {
        first.no_more(2)?;
        let end = lines
            .iter()
            .position(|l| l.tokens[0].text == "end")
            .ok_or_else(|| parse_err(first.number, src.column, "inline algebra without 'end'"))?;
        k = end + 1;
        parse_algebra_lines(&lines[1..end])?
    } else {
        first.no_more(2)?;
        let resolve = resolver.ok_or_else(|| {
            parse_err(
                first.number,
                src.column,
                "algebra references need a file location",
            )
        })?;
        k += 1;
        parse_algebra_lines(&tokenize(&resolve(src.text)?, 1))?
    };
    let algebra = named.algebra;
    let names = named.names;

    let mut module_dim: Option<usize> = None;
    let mut orientation = Orientation::Left;
    let mut actions: Option<Vec<Matrix>> = None;
    let mut beta: Option<Matrix> = None;
    let mut verdicts = Vec::new();
    let mut nilindex = None;
    let mut trace = Vec::new();
    for line in &lines[k..] {
        let head = line.tokens[0];
        let m = || {
            module_dim
                .ok_or_else(|| parse_err(line.number, head.column, "'module_dim' must come first"))
        };
        match head.text {
            "module_dim" => {
                let v = line.usize_at(1, "a module dimension")?;
                line.no_more(2)?;
                module_dim = Some(v);
                actions = Some(vec![Matrix::zeros(v, v); algebra.dim()]);
            }
            "orientation" => {
                let t = line.get(1, "'left' or 'right'")?;
                orientation = match t.text {
                    "left" => Orientation::Left,
                    "right" => Orientation::Right,
                    other => {
                        return Err(parse_err(
                            line.number,
                            t.column,
                            format!("unknown orientation '{other}'"),
                        ))
                    }
                };
                line.no_more(2)?;
            }
            "action" => {
                let m = m()?;
                let b = names.lookup(line, 1)?;
                line.expect(2, "row")?;
                let r = row_index(line, 3, m)?;
                line.expect(4, "=")?;
                let row = line.row_at(5, m)?;
                let target = &mut actions.as_mut().expect("set with module_dim")[b];
                for (c, x) in row.into_iter().enumerate() {
                    target[(r, c)] = x;
                }
            }
            "beta" => {
                let m = m()?;
                line.expect(1, "row")?;
                let r = row_index(line, 2, m)?;
                line.expect(3, "=")?;
                let row = line.row_at(4, m)?;
                let target = beta.get_or_insert_with(|| Matrix::zeros(m, m));
                for (c, x) in row.into_iter().enumerate() {
                    target[(r, c)] = x;
                }
            }
            "verdict" if allow_cert => {
                let law = line.get(1, "a law")?;
                line.expect(2, "=")?;
                let t = line.get(3, "'true' or 'false'")?;
                let value = match t.text {
                    "true" => true,
                    "false" => false,
                    other => {
                        return Err(parse_err(
                            line.number,
                            t.column,
                            format!("expected a boolean, found '{other}'"),
                        ))
                    }
                };
                line.no_more(4)?;
                verdicts.push((law.text.to_string(), value, line.number));
            }
            "nilindex" if allow_cert => {
                let t = line.get(1, "a nilindex")?;
                nilindex = Some(if t.text == "none" {
                    None
                } else {
                    Some(line.usize_at(1, "a nilindex")?)
                });
                line.no_more(2)?;
            }
            "trace" if allow_cert => {
                let label = line.get(1, "a label")?;
                let dim = line.usize_at(2, "a dimension")?;
                line.no_more(3)?;
                trace.push(TraceStep::new(label.text, dim));
            }
            other => {
                return Err(parse_err(
                    line.number,
                    head.column,
                    format!("unknown declaration '{other}'"),
                ))
            }
        }
    }
    let m = module_dim.ok_or_else(|| {
        parse_err(
            lines.last().map_or(1, |l| l.number),
            1,
            "missing 'module_dim'",
        )
    })?;
    let beta = beta.unwrap_or_else(|| Matrix::identity(m));
    let actions = actions.expect("set with module_dim");
    let rep = HomRepresentation::with_orientation(algebra, actions, beta, orientation)?;
    Ok(RepPayload {
        rep,
        verdicts,
        nilindex,
        trace,
    })
}

pub fn parse_representation(text: &str) -> Result<HomRepresentation> {
    parse_rep_payload(text, None, false).map(|p| p.rep)
}

pub fn parse_representation_with(text: &str, resolver: Resolver) -> Result<HomRepresentation> {
    parse_rep_payload(text, Some(resolver), false).map(|p| p.rep)
}

fn file_resolver(dir: &Path) -> impl Fn(&str) -> Result<String> + '_ {
    move |p: &str| Ok(std::fs::read_to_string(dir.join(p))?)
}

/// Reads a representation; `algebra <path>` is resolved next to the file.
pub fn read_representation(path: &Path) -> Result<HomRepresentation> {
    let text = std::fs::read_to_string(path)?;
    let dir = path.parent().unwrap_or(Path::new("."));
    parse_representation_with(&text, &file_resolver(dir))
}

pub fn serialize_representation(rep: &HomRepresentation) -> String {
    let mut s = String::from("algebra inline\n");
    s.push_str(&serialize_algebra(rep.algebra()));
    s.push_str("end\n");
    let m = rep.module_dim();
    let _ = writeln!(s, "module_dim {m}");
    if rep.orientation() != Orientation::Left {
        let _ = writeln!(s, "orientation {}", rep.orientation().name());
    }
    for (i, a) in rep.actions().iter().enumerate() {
        for r in 0..m {
            if a.row(r).iter().any(|x| !x.is_zero()) {
                let _ = writeln!(
                    s,
                    "action e{} row {} = {}",
                    i + 1,
                    r + 1,
                    format_row(a.row(r))
                );
            }
        }
    }
    for r in 0..m {
        let _ = writeln!(s, "beta row {} = {}", r + 1, format_row(rep.beta().row(r)));
    }
    s
}

const LAWS: [&str; 4] = ["faithful", "nilpotent", "multiplicative", "nondegenerate"];

pub fn serialize_certificate(cert: &AdoCertificate) -> String {
    let mut s = serialize_representation(&cert.representation);
    let v = &cert.verdicts;
    let values = [
        v.faithful,
        v.nilindex.is_some(),
        v.multiplicative,
        v.nondegenerate,
    ];
    for (law, value) in LAWS.iter().zip(values) {
        let _ = writeln!(s, "verdict {law} = {value}");
    }
    match v.nilindex {
        Some(n) => {
            let _ = writeln!(s, "nilindex {n}");
        }
        None => s.push_str("nilindex none\n"),
    }
    for step in &cert.trace {
        let _ = writeln!(s, "trace {} {}", step.label, step.dimension);
    }
    s
}

fn certificate_from(payload: RepPayload) -> Result<AdoCertificate> {
    let mut values = [None; 4];
    for (law, value, line) in payload.verdicts {
        let k = LAWS
            .iter()
            .position(|l| *l == law)
            .ok_or_else(|| parse_err(line, 9, format!("unknown law '{law}'")))?;
        values[k] = Some(value);
    }
    let missing = |k: usize| parse_err(1, 1, format!("missing verdict for {}", LAWS[k]));
    let nilindex = payload
        .nilindex
        .ok_or_else(|| parse_err(1, 1, "missing 'nilindex'"))?;
    let nilpotent = values[1].ok_or_else(|| missing(1))?;
    if nilpotent != nilindex.is_some() {
        return Err(parse_err(
            1,
            1,
            "nilpotent verdict disagrees with the nilindex line",
        ));
    }
    Ok(AdoCertificate {
        representation: payload.rep,
        verdicts: CertificateVerdicts {
            faithful: values[0].ok_or_else(|| missing(0))?,
            nilindex,
            multiplicative: values[2].ok_or_else(|| missing(2))?,
            nondegenerate: values[3].ok_or_else(|| missing(3))?,
        },
        trace: payload.trace,
    })
}

pub fn parse_certificate(text: &str) -> Result<AdoCertificate> {
    certificate_from(parse_rep_payload(text, None, true)?)
}

pub fn read_certificate(path: &Path) -> Result<AdoCertificate> {
    let text = std::fs::read_to_string(path)?;
    let dir = path.parent().unwrap_or(Path::new("."));
    certificate_from(parse_rep_payload(&text, Some(&file_resolver(dir)), true)?)
}

/// Reads either a representation or a certificate, keeping only the
/// representation.
pub fn read_representation_lenient(path: &Path) -> Result<HomRepresentation> {
    let text = std::fs::read_to_string(path)?;
    let dir = path.parent().unwrap_or(Path::new("."));
    parse_rep_payload(&text, Some(&file_resolver(dir)), true).map(|p| p.rep)
}

pub fn read_algebra(path: &Path) -> Result<HomAlgebra> {
    parse_algebra(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{frac, int};
    use crate::fixtures;
    use crate::homrep::adjoint_rep;

    #[test]
    fn minimal_and_heisenberg_files() {
        let a = parse_algebra("dim 1\nbasis e1\ntwist e1 = 1 e1\n").unwrap();
        assert_eq!(a, fixtures::abelian(1));
        let h3 =
            parse_algebra("# heisenberg\ndim 3\nbasis e1 e2 e3\nbracket e1 e2 = 1 e3\n").unwrap();
        assert_eq!(h3.structure_constant(0, 1, 2), int(1));
        assert_eq!(h3.structure_constant(1, 0, 2), int(-1));
        assert_eq!(h3, fixtures::h3());
    }

    #[test]
    fn conflicts_and_errors() {
        let both = "dim 3\nbracket e1 e2 = 1 e3\nbracket e2 e1 = 1 e3\n";
        assert!(matches!(
            parse_algebra(both),
            Err(Error::AntisymmetryConflict { line: 3, .. })
        ));
        assert!(matches!(
            parse_algebra("dim 2\nbracket e1 e3 = 1 e2\n"),
            Err(Error::Parse {
                line: 2,
                column: 12,
                ..
            })
        ));
        assert!(matches!(
            parse_algebra("dim 2\nbasis a\n"),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            parse_algebra("dim 2\nbracket e1 e2 = x e2\n"),
            Err(Error::Parse { column: 17, .. })
        ));
    }

    #[test]
    fn terms_with_signs_and_fractions() {
        let a = parse_algebra("dim 3\nbasis x y z\nbracket x y = -3/2 z - x + 2 y\ntwist x = x\ntwist y = y\ntwist z = z\n").unwrap();
        assert_eq!(
            a.basis_product(0, 1),
            &vec![(0, int(-1)), (1, int(2)), (2, frac(-3, 2))]
        );
        let text = serialize_algebra(&a);
        assert!(text.contains("bracket e1 e2 = -1 e1 + 2 e2 - 3/2 e3"));
        assert_eq!(parse_algebra(&text).unwrap(), a);
    }

    #[test]
    fn round_trips() {
        for (_, a) in fixtures::catalog() {
            assert_eq!(parse_algebra(&serialize_algebra(&a)).unwrap(), a);
            let rep = adjoint_rep(&a);
            assert_eq!(
                parse_representation(&serialize_representation(&rep)).unwrap(),
                rep
            );
        }
        let m = Matrix::from_rows(vec![vec![frac(1, 3), int(0)], vec![int(-2), int(5)]]);
        assert_eq!(parse_matrix(&serialize_matrix(&m)).unwrap(), m);
    }

    #[test]
    fn representation_references() {
        let text = "algebra h3.hla\nmodule_dim 1\n";
        assert!(parse_representation(text).is_err());
        let resolver = |_: &str| Ok(serialize_algebra(&fixtures::h3()));
        let rep = parse_representation_with(text, &resolver).unwrap();
        assert_eq!(rep.module_dim(), 1);
        assert!(rep.beta().is_identity());
    }
}
