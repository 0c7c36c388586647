//! Plain-text arrangement files.
//!
//! ```text
//! # comment lines start with '#'
//! field: quadratic-tau
//! 1 0 0 0
//! 0+1*t 1 0 0
//! 2+3*t 2+4*t 1+3*t 1+1*t
//! ```
//!
//! The header names the field (`rational` or `quadratic-tau`); each further
//! line holds four coordinates. A rational coordinate is `p` or `p/q` with
//! `q > 0`; over ℚ(τ) a coordinate is `a`, `a+b*t` or `a-b*t` with rational
//! `a`, `b` and `t` standing for τ.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::algebra::{Field, Rational, Scalar};
use crate::arrangement::{Arrangement, ArrangementError};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// One-based; zero for problems with the file as a whole.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        Self { line, message: message.into() }
    }
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Invalid(#[from] ArrangementError),
}

fn parse_rational(s: &str) -> Option<Rational> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let digits = |t: &str| {
        let body = t.strip_prefix(['-', '+']).unwrap_or(t);
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits(p) || !q.bytes().all(|b| b.is_ascii_digit()) || q.is_empty() {
        return None;
    }
    let (p, q) = (BigInt::from_str(p).ok()?, BigInt::from_str(q).ok()?);
    (!q.is_zero()).then(|| Rational::new(p, q))
}

/// Parses one coordinate; `None` if malformed.
pub fn parse_coordinate(s: &str, field: Field) -> Option<Scalar> {
    let Some(head) = s.strip_suffix('t') else {
        return parse_rational(s).map(Scalar::from);
    };
    if field == Field::Rational {
        return None;
    }
    let (head, starred) = match head.strip_suffix('*') {
        Some(h) => (h, true),
        None => (head, false),
    };
    // the sign separating a from b is the last one not at the start
    let split = head.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(i, _)| i).last();
    let (a, b) = match split {
        Some(i) => (&head[..i], &head[i..]),
        None => ("0", head),
    };
    let b = match b {
        "" | "+" if !starred => Rational::from_integer(1.into()),
        "-" if !starred => Rational::from_integer((-1).into()),
        b => parse_rational(b)?,
    };
    Some(Scalar::from_parts(parse_rational(a)?, b))
}

/// Parses arrangement-file text into normals, without validating them.
pub fn parse_normals(text: &str) -> Result<(Field, Vec<[Scalar; 4]>), ParseError> {
    let mut field = None;
    let mut normals = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some(f) = field else {
            let value = line
                .strip_prefix("field:")
                .ok_or_else(|| ParseError::new(line_no, "expected header `field: rational` or `field: quadratic-tau`"))?;
            field = Some(match value.trim() {
                "rational" => Field::Rational,
                "quadratic-tau" => Field::QuadraticTau,
                other => return Err(ParseError::new(line_no, format!("unknown field `{other}`"))),
            });
            continue;
        };
        let coords: Vec<&str> = line.split_whitespace().collect();
        if coords.len() != 4 {
            return Err(ParseError::new(line_no, format!("expected 4 coordinates, found {}", coords.len())));
        }
        let mut v: [Scalar; 4] = Default::default();
        for (slot, c) in v.iter_mut().zip(&coords) {
            *slot = parse_coordinate(c, f)
                .ok_or_else(|| ParseError::new(line_no, format!("malformed {} coordinate `{c}`", f.name())))?;
        }
        normals.push(v);
    }
    let field = field.ok_or_else(|| ParseError::new(0, "missing `field:` header"))?;
    Ok((field, normals))
}

/// Parses and validates an arrangement file.
pub fn parse_arrangement(text: &str) -> Result<Arrangement, LoadError> {
    let (field, normals) = parse_normals(text)?;
    Ok(Arrangement::with_field(field, normals)?)
}

pub fn read_arrangement(path: impl AsRef<Path>) -> Result<Arrangement, LoadError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|source| LoadError::Io { path: path.display().to_string(), source })?;
    parse_arrangement(&text)
}

fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical file syntax of one coordinate.
pub fn format_coordinate(x: &Scalar, field: Field) -> String {
    let (a, b) = x.parts();
    if field == Field::Rational || b.is_zero() {
        return format_rational(&a);
    }
    let sign = if b.is_negative() { '-' } else { '+' };
    format!("{}{sign}{}*t", format_rational(&a), format_rational(&b.abs()))
}

/// Canonical file text: normals in canonical form, sorted.
pub fn emit_arrangement(a: &Arrangement) -> String {
    let sorted = a.sorted();
    let mut out = format!("field: {}\n", a.field().name());
    for v in sorted.normals() {
        let coords: Vec<String> = v.iter().map(|x| format_coordinate(x, a.field())).collect();
        let _ = writeln!(out, "{}", coords.join(" "));
    }
    out
}

pub fn write_arrangement(a: &Arrangement, path: impl AsRef<Path>) -> std::io::Result<()> {
    std::fs::write(path, emit_arrangement(a))
}
