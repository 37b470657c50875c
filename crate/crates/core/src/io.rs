//! Plain-text file formats.
//!
//! All formats are line oriented. Blank lines and lines whose first
//! non-space character is `#` are ignored everywhere. The first remaining
//! line is a header: a keyword followed by `key=value` tokens, in any order.
//! Complex numbers are written `re,im` with no spaces.
//!
//! Code file:
//!
//! ```text
//! code m=<int> n=<int> kind=stabilizer
//! <a,b> <a,b> ... (n pairs) [phase=<int>]      one generator per line
//! ```
//!
//! ```text
//! code m=<int> n=<int> kind=basis
//! <re,im> ... (m^n entries)                    one basis vector per line
//! ```
//!
//! Generator pairs are the X and Z exponents of each coordinate. The optional
//! phase token multiplies the generator by `exp(i pi phase / m)`.
//!
//! Element file (unlisted indices are zero):
//!
//! ```text
//! element m=<int> n=<int>
//! <index> <re,im>
//! ```
//!
//! Error basis file, `m^2` blocks of `m` rows with `m` entries each:
//!
//! ```text
//! basis m=<int> order=<canonical|row-major>
//! <re,im> ... (m entries)                      m rows per matrix
//! ```
//!
//! With `order=canonical` the blocks follow the library's group ordering;
//! with `order=row-major` block `a*m + b` holds `E_(a,b)`.

use std::collections::HashMap;
use std::fmt::Write as _;

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

use crate::code_analysis::{CodeBody, CodeError, CodeSpec, Generator};
use crate::error_basis::{BasisError, ErrorLabel, GroupElement, GroupOrdering, PhaseSystem};
use crate::group_algebra::{dense_len, AlgebraElement, AlgebraError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing header line")]
    MissingHeader,
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Basis(#[from] BasisError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// A parsed input: either a code or a bare algebra element.
#[derive(Debug, Clone, PartialEq)]
pub enum InputFile {
    Code(CodeSpec),
    Element(AlgebraElement),
}

impl InputFile {
    pub fn m(&self) -> usize {
        match self {
            InputFile::Code(c) => c.m(),
            InputFile::Element(e) => e.m(),
        }
    }

    pub fn into_code(self) -> Option<CodeSpec> {
        match self {
            InputFile::Code(c) => Some(c),
            InputFile::Element(_) => None,
        }
    }

    pub fn into_element(self) -> Option<AlgebraElement> {
        match self {
            InputFile::Element(e) => Some(e),
            InputFile::Code(_) => None,
        }
    }
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Iterator for Lines<'a> {
    type Item = (usize, &'a str);

    fn next(&mut self) -> Option<Self::Item> {
        for (i, raw) in self.inner.by_ref() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            return Some((i + 1, line));
        }
        None
    }
}

fn lines(text: &str) -> Lines<'_> {
    Lines {
        inner: text.lines().enumerate(),
    }
}

struct Header<'a> {
    line: usize,
    keyword: &'a str,
    fields: HashMap<&'a str, &'a str>,
}

impl<'a> Header<'a> {
    fn parse(line: usize, text: &'a str) -> Result<Self, ParseError> {
        let mut tokens = text.split_whitespace();
        let keyword = tokens.next().ok_or_else(|| syntax(line, "empty header"))?;
        let mut fields = HashMap::new();
        for tok in tokens {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| syntax(line, format!("expected key=value, found `{tok}`")))?;
            if fields.insert(k, v).is_some() {
                return Err(syntax(line, format!("duplicate header key `{k}`")));
            }
        }
        Ok(Header {
            line,
            keyword,
            fields,
        })
    }

    fn allow_only(&self, keys: &[&str]) -> Result<(), ParseError> {
        for k in self.fields.keys() {
            if !keys.contains(k) {
                return Err(syntax(self.line, format!("unknown header key `{k}`")));
            }
        }
        Ok(())
    }

    fn get(&self, key: &str) -> Result<&'a str, ParseError> {
        self.fields
            .get(key)
            .copied()
            .ok_or_else(|| syntax(self.line, format!("header is missing `{key}=`")))
    }

    fn usize(&self, key: &str) -> Result<usize, ParseError> {
        let v = self.get(key)?;
        v.parse()
            .map_err(|_| syntax(self.line, format!("`{key}` must be a non-negative integer, found `{v}`")))
    }
}

fn parse_complex(line: usize, tok: &str) -> Result<Complex64, ParseError> {
    let (re, im) = tok
        .split_once(',')
        .ok_or_else(|| syntax(line, format!("expected re,im, found `{tok}`")))?;
    let re: f64 = re
        .parse()
        .map_err(|_| syntax(line, format!("bad real part `{re}`")))?;
    let im: f64 = im
        .parse()
        .map_err(|_| syntax(line, format!("bad imaginary part `{im}`")))?;
    if !re.is_finite() || !im.is_finite() {
        return Err(syntax(line, format!("non-finite value `{tok}`")));
    }
    Ok(Complex64::new(re, im))
}

fn format_complex(out: &mut String, z: Complex64) {
    let _ = write!(out, "{:?},{:?}", z.re, z.im);
}

fn check_shape(header: &Header<'_>, m: usize, n: usize) -> Result<(), ParseError> {
    if m < 2 {
        return Err(syntax(header.line, "m must be at least 2"));
    }
    if n == 0 {
        return Err(syntax(header.line, "n must be at least 1"));
    }
    if dense_len(m, n).is_none() {
        return Err(syntax(header.line, format!("m={m}, n={n} is too large for dense storage")));
    }
    Ok(())
}

/// Parses a code or element file, dispatching on the header keyword.
pub fn parse_input(text: &str) -> Result<InputFile, ParseError> {
    let mut it = lines(text);
    let (line, head) = it.next().ok_or(ParseError::MissingHeader)?;
    let header = Header::parse(line, head)?;
    match header.keyword {
        "code" => parse_code_body(header, it).map(InputFile::Code),
        "element" => parse_element_body(header, it).map(InputFile::Element),
        other => Err(syntax(
            line,
            format!("expected `code` or `element` header, found `{other}`"),
        )),
    }
}

pub fn parse_code(text: &str) -> Result<CodeSpec, ParseError> {
    match parse_input(text)? {
        InputFile::Code(c) => Ok(c),
        InputFile::Element(_) => Err(syntax(1, "expected a code file, found an element file")),
    }
}

pub fn parse_element(text: &str) -> Result<AlgebraElement, ParseError> {
    match parse_input(text)? {
        InputFile::Element(e) => Ok(e),
        InputFile::Code(_) => Err(syntax(1, "expected an element file, found a code file")),
    }
}

fn parse_code_body(header: Header<'_>, rows: Lines<'_>) -> Result<CodeSpec, ParseError> {
    header.allow_only(&["m", "n", "kind"])?;
    let m = header.usize("m")?;
    let n = header.usize("n")?;
    check_shape(&header, m, n)?;
    match header.get("kind")? {
        "stabilizer" => {
            let mut generators = Vec::new();
            for (line, text) in rows {
                generators.push(parse_generator(line, text, m, n)?);
            }
            Ok(CodeSpec::from_generators(m, n, generators)?)
        }
        "basis" => {
            let dim = m.pow(n as u32);
            let mut vectors = Vec::new();
            for (line, text) in rows {
                let v = text
                    .split_whitespace()
                    .map(|tok| parse_complex(line, tok))
                    .collect::<Result<Vec<_>, _>>()?;
                if v.len() != dim {
                    return Err(syntax(line, format!("expected {dim} entries, found {}", v.len())));
                }
                vectors.push(v);
            }
            Ok(CodeSpec::from_basis(m, n, vectors)?)
        }
        other => Err(syntax(
            header.line,
            format!("kind must be `stabilizer` or `basis`, found `{other}`"),
        )),
    }
}

fn parse_generator(line: usize, text: &str, m: usize, n: usize) -> Result<Generator, ParseError> {
    let mut coords = Vec::with_capacity(n);
    let mut phase = None;
    for tok in text.split_whitespace() {
        if let Some(p) = tok.strip_prefix("phase=") {
            if phase.is_some() {
                return Err(syntax(line, "duplicate phase"));
            }
            phase = Some(
                p.parse::<i64>()
                    .map_err(|_| syntax(line, format!("bad phase `{p}`")))?,
            );
            continue;
        }
        if phase.is_some() {
            return Err(syntax(line, "phase must come after the label"));
        }
        let (a, b) = tok
            .split_once(',')
            .ok_or_else(|| syntax(line, format!("expected a,b, found `{tok}`")))?;
        let parse = |s: &str| {
            s.parse::<usize>()
                .ok()
                .filter(|&v| v < m)
                .ok_or_else(|| syntax(line, format!("exponent `{s}` is not in 0..{m}")))
        };
        coords.push(GroupElement::new(parse(a)?, parse(b)?));
    }
    if coords.len() != n {
        return Err(syntax(line, format!("expected {n} pairs, found {}", coords.len())));
    }
    Ok(Generator {
        label: ErrorLabel(coords),
        phase,
    })
}

fn parse_element_body(header: Header<'_>, rows: Lines<'_>) -> Result<AlgebraElement, ParseError> {
    header.allow_only(&["m", "n"])?;
    let m = header.usize("m")?;
    let n = header.usize("n")?;
    check_shape(&header, m, n)?;
    let mut el = AlgebraElement::zero(m, n)?.into_coeffs();
    let mut seen = vec![false; el.len()];
    for (line, text) in rows {
        let mut toks = text.split_whitespace();
        let (Some(idx), Some(val), None) = (toks.next(), toks.next(), toks.next()) else {
            return Err(syntax(line, "expected `<index> <re,im>`"));
        };
        let idx: usize = idx
            .parse()
            .map_err(|_| syntax(line, format!("bad index `{idx}`")))?;
        if idx >= el.len() {
            return Err(syntax(line, format!("index {idx} out of range 0..{}", el.len())));
        }
        if seen[idx] {
            return Err(syntax(line, format!("index {idx} listed twice")));
        }
        seen[idx] = true;
        el[idx] = parse_complex(line, val)?;
    }
    Ok(AlgebraElement::from_coeffs(m, n, el)?)
}

/// Writes nonzero coefficients only; values round-trip exactly.
pub fn write_element(el: &AlgebraElement) -> String {
    let mut out = format!("element m={} n={}\n", el.m(), el.n());
    for (i, c) in el.coeffs().iter().enumerate() {
        if c.re == 0.0 && c.im == 0.0 {
            continue;
        }
        let _ = write!(out, "{i} ");
        format_complex(&mut out, *c);
        out.push('\n');
    }
    out
}

pub fn write_code(code: &CodeSpec) -> String {
    let mut out = String::new();
    match code.body() {
        CodeBody::Stabilizer(generators) => {
            let _ = writeln!(out, "code m={} n={} kind=stabilizer", code.m(), code.n());
            for g in generators {
                out.push_str(&g.label.to_string());
                if let Some(p) = g.phase {
                    let _ = write!(out, " phase={p}");
                }
                out.push('\n');
            }
        }
        CodeBody::BasisVectors(vectors) => {
            let _ = writeln!(out, "code m={} n={} kind=basis", code.m(), code.n());
            for v in vectors {
                for (i, z) in v.iter().enumerate() {
                    if i > 0 {
                        out.push(' ');
                    }
                    format_complex(&mut out, *z);
                }
                out.push('\n');
            }
        }
    }
    out
}

/// Parses and validates a user-supplied nice error basis.
pub fn parse_basis(text: &str) -> Result<PhaseSystem, ParseError> {
    let mut it = lines(text);
    let (line, head) = it.next().ok_or(ParseError::MissingHeader)?;
    let header = Header::parse(line, head)?;
    if header.keyword != "basis" {
        return Err(syntax(line, format!("expected `basis` header, found `{}`", header.keyword)));
    }
    header.allow_only(&["m", "order"])?;
    let m = header.usize("m")?;
    if m < 2 {
        return Err(syntax(line, "m must be at least 2"));
    }
    let row_major = match header.fields.get("order").copied().unwrap_or("canonical") {
        "canonical" => false,
        "row-major" => true,
        other => {
            return Err(syntax(
                line,
                format!("order must be `canonical` or `row-major`, found `{other}`"),
            ))
        }
    };

    let q = m * m;
    let mut entries = Vec::with_capacity(q * m * m);
    let mut last_line = line;
    for (line, text) in it {
        let row = text
            .split_whitespace()
            .map(|tok| parse_complex(line, tok))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != m {
            return Err(syntax(line, format!("expected {m} entries per row, found {}", row.len())));
        }
        entries.extend(row);
        last_line = line;
    }
    if entries.len() != q * m * m {
        return Err(syntax(
            last_line,
            format!("expected {} rows ({q} matrices of {m} rows), found {}", q * m, entries.len() / m),
        ));
    }
    let blocks: Vec<DMatrix<Complex64>> = entries
        .chunks(m * m)
        .map(|block| DMatrix::from_row_slice(m, m, block))
        .collect();
    let matrices = if row_major {
        let ordering = GroupOrdering::new(m)?;
        ordering
            .elements()
            .iter()
            .map(|g| blocks[g.a * m + g.b].clone())
            .collect()
    } else {
        blocks
    };
    Ok(PhaseSystem::from_matrices(m, matrices)?)
}

/// Writes the single-system operators of `sys` in canonical order.
pub fn write_basis(sys: &PhaseSystem) -> String {
    let m = sys.m();
    let mut out = format!("basis m={m} order=canonical\n");
    for (digit, op) in sys.operators().iter().enumerate() {
        let _ = writeln!(out, "# E_{}", sys.ordering().element(digit));
        for r in 0..m {
            for c in 0..m {
                if c > 0 {
                    out.push(' ');
                }
                format_complex(&mut out, op[(r, c)]);
            }
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_stabilizer_code() {
        let text = "# four qubits\ncode m=2 n=4 kind=stabilizer\n1,0 1,0 1,0 1,0\n\n0,1 0,1 0,1 0,1 phase=0\n";
        let code = parse_code(text).unwrap();
        let gens = code.generators().unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[0].phase, None);
        assert_eq!(gens[1].phase, Some(0));
        assert_eq!(parse_code(&write_code(&code)).unwrap(), code);
    }

    #[test]
    fn parse_basis_code() {
        let text = "code kind=basis n=1 m=2\n1,0 0,0\n0,0 1,0\n";
        let code = parse_code(text).unwrap();
        assert_eq!(code.basis_vectors().unwrap().len(), 2);
        assert_eq!(parse_code(&write_code(&code)).unwrap(), code);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "code m=2 n=2 kind=stabilizer\n1,0 0,1\n1,0 2,0\n";
        let err = parse_code(text).unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 3, .. }), "{err}");
        assert!(err.to_string().starts_with("line 3:"));

        let err = parse_code("code m=2 n=2 kind=stabilizer\n1,0\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }));

        let err = parse_input("codex m=2").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 1, .. }));
        assert_eq!(parse_input("# nothing\n"), Err(ParseError::MissingHeader));
        assert!(parse_code("code m=2 kind=basis\n").is_err());
        assert!(parse_code("code m=2 n=1 kind=basis extra=1\n1,0 0,0\n").is_err());
    }

    #[test]
    fn element_roundtrip() {
        let coeffs: Vec<Complex64> = (0..16)
            .map(|i| Complex64::new(1.0 / (i as f64 + 3.0), -(i as f64).sqrt()))
            .collect();
        let el = AlgebraElement::from_coeffs(2, 2, coeffs).unwrap();
        let back = parse_element(&write_element(&el)).unwrap();
        assert_eq!(back.coeffs(), el.coeffs());
    }

    #[test]
    fn element_errors() {
        assert!(parse_element("element m=2 n=1\n4 1,0\n").is_err());
        assert!(parse_element("element m=2 n=1\n0 1,0\n0 1,0\n").is_err());
        assert!(parse_element("element m=2 n=1\n0 1;0\n").is_err());
        assert!(parse_element("element m=2 n=1\n0 nan,0\n").is_err());
        let el = parse_element("element m=2 n=1\n3 2.5,0\n").unwrap();
        assert_eq!(el.coeff(3), Complex64::new(2.5, 0.0));
    }

    #[test]
    fn basis_roundtrip() {
        for m in [2, 3] {
            let sys = PhaseSystem::pauli(m).unwrap();
            let back = parse_basis(&write_basis(&sys)).unwrap();
            for (a, b) in sys.omega_table().iter().zip(back.omega_table()) {
                assert!((a - b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn basis_row_major_order() {
        // For m = 3 the canonical order differs from row-major; write the
        // Pauli matrices in row-major order and check they land correctly.
        let sys = PhaseSystem::pauli(3).unwrap();
        let mut text = String::from("basis m=3 order=row-major\n");
        for a in 0..3 {
            for b in 0..3 {
                let op = sys.operator(sys.ordering().digit(GroupElement::new(a, b)));
                for r in 0..3 {
                    let row: Vec<String> = (0..3)
                        .map(|c| format!("{:?},{:?}", op[(r, c)].re, op[(r, c)].im))
                        .collect();
                    text.push_str(&row.join(" "));
                    text.push('\n');
                }
            }
        }
        let back = parse_basis(&text).unwrap();
        for (a, b) in sys.omega_table().iter().zip(back.omega_table()) {
            assert!((a - b).norm() < 1e-12);
        }
        // Same data declared canonical breaks closure.
        let wrong = text.replace("row-major", "canonical");
        assert!(matches!(
            parse_basis(&wrong),
            Err(ParseError::Basis(BasisError::ClosureViolation { .. }))
        ));
    }
}
