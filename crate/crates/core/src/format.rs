//! Text and JSON forms of ideals and complexes, and the Macaulay2
//! `simplicialComplex` syntax.
//!
//! Ideal text: `n=8; x1*x2, x2^2*x3`, 1-based variables, `0` for the zero
//! ideal and `1` for the unit ideal. `#` starts a comment.

use serde::{Deserialize, Serialize};

use crate::complex::{Kind, SimplicialComplex};
use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::vertex::VertexSet;

fn monomial_text(g: &ExponentVector) -> String {
    let factors: Vec<String> = g
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
        .collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// `n=4; x1*x2, x2*x3`.
pub fn ideal_to_text(ideal: &MonomialIdeal) -> String {
    let body = if ideal.is_zero() {
        "0".to_string()
    } else {
        ideal.generators().iter().map(monomial_text).collect::<Vec<_>>().join(", ")
    };
    format!("n={}; {}", ideal.n(), body)
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col0: usize,
}

impl Cursor {
    fn new(src: &str, line: usize) -> Self {
        Cursor { chars: src.chars().collect(), pos: 0, line, col0: 1 }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { line: self.line, column: self.col0 + self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| Error::Parse { line: self.line, column: self.col0 + start, message: "number too large".into() })
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

/// One factor list `x1*x2^3` as `(column, variable, exponent)` triples, or a
/// bare constant `1`.
enum Term {
    Constant(u64, usize),
    Factors(Vec<(usize, usize, u64)>),
}

fn parse_term(c: &mut Cursor) -> Result<Term> {
    match c.peek() {
        Some(d) if d.is_ascii_digit() => {
            let col = c.col0 + c.pos;
            Ok(Term::Constant(c.number()?, col))
        }
        Some('x') => {
            let mut factors = Vec::new();
            loop {
                c.skip_ws();
                let col = c.col0 + c.pos;
                if !c.eat('x') {
                    return Err(c.err("expected a variable `xK`"));
                }
                let var = c.number()? as usize;
                let exp = if c.eat('^') { c.number()? } else { 1 };
                if exp == 0 {
                    return Err(Error::Parse { line: c.line, column: col, message: "exponent must be at least 1".into() });
                }
                factors.push((col, var, exp));
                if !c.eat('*') {
                    break;
                }
            }
            Ok(Term::Factors(factors))
        }
        Some(other) => Err(c.err(format!("unexpected character `{other}`"))),
        None => Err(c.err("expected a monomial")),
    }
}

/// Parses a single ideal written on one line; `line` numbers the errors.
fn parse_ideal_line(src: &str, line: usize) -> Result<MonomialIdeal> {
    let mut c = Cursor::new(src, line);
    let mut n: Option<usize> = None;
    let mut header_col = 1;
    if c.peek() == Some('n') {
        header_col = c.col0 + c.pos;
        c.pos += 1;
        if !c.eat('=') {
            return Err(c.err("expected `=` after `n`"));
        }
        n = Some(c.number()? as usize);
        if !c.eat(';') {
            return Err(c.err("expected `;` after the variable count"));
        }
    }
    let mut terms = Vec::new();
    loop {
        terms.push(parse_term(&mut c)?);
        if !c.eat(',') {
            break;
        }
    }
    if !c.at_end() {
        return Err(c.err("expected `,` or end of input"));
    }
    let max_var = terms
        .iter()
        .filter_map(|t| match t {
            Term::Factors(f) => f.iter().map(|&(_, v, _)| v).max(),
            Term::Constant(..) => None,
        })
        .max()
        .unwrap_or(0);
    let n = match n {
        Some(n) => n,
        None if max_var > 0 => max_var,
        None => return Err(Error::Parse { line, column: 1, message: "constant ideal needs an `n=` header".into() }),
    };
    if n > crate::MAX_VARS {
        return Err(Error::Parse { line, column: header_col, message: Error::TooManyVariables(n).to_string() });
    }
    let mut gens = Vec::new();
    let mut zero_seen = false;
    for t in &terms {
        match t {
            Term::Constant(0, _) => zero_seen = true,
            Term::Constant(1, _) => gens.push(ExponentVector::zeros(n)),
            Term::Constant(_, col) => {
                return Err(Error::Parse { line, column: *col, message: "only the constants 0 and 1 are allowed".into() })
            }
            Term::Factors(f) => {
                let mut e = vec![0i32; n];
                for &(col, v, x) in f {
                    if v == 0 || v > n {
                        return Err(Error::Parse { line, column: col, message: format!("variable x{v} outside x1..x{n}") });
                    }
                    let total = e[v - 1] as u64 + x;
                    if total > i32::MAX as u64 {
                        return Err(Error::Parse { line, column: col, message: "exponent too large".into() });
                    }
                    e[v - 1] = total as i32;
                }
                gens.push(ExponentVector::new(e));
            }
        }
    }
    if zero_seen && terms.len() > 1 {
        return Err(Error::Parse { line, column: 1, message: "`0` must stand alone".into() });
    }
    MonomialIdeal::minimalize(n, gens)
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Every nonblank line of `text` as an ideal.
pub fn parse_ideals(text: &str) -> Result<Vec<MonomialIdeal>> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_ideal_line(l, i))
        .collect()
}

/// Exactly one ideal.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut all = parse_ideals(text)?;
    match all.len() {
        1 => Ok(all.remove(0)),
        0 => Err(Error::Parse { line: 1, column: 1, message: "no ideal found".into() }),
        _ => Err(Error::Parse { line: 1, column: 1, message: format!("expected one ideal, found {}", all.len()) }),
    }
}

/// A comma-separated integer list such as `0,2,-1`, checked against `n`.
pub fn parse_degree(text: &str, n: usize) -> Result<ExponentVector> {
    let mut entries = Vec::new();
    for (idx, part) in text.split(',').enumerate() {
        let v: i32 = part.trim().parse().map_err(|_| Error::Parse {
            line: 1,
            column: text.split(',').take(idx).map(|p| p.len() + 1).sum::<usize>() + 1,
            message: format!("`{}` is not an integer", part.trim()),
        })?;
        entries.push(v);
    }
    if entries.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: entries.len() });
    }
    Ok(ExponentVector::new(entries))
}

/// JSON shape of a complex, fields in sorted order.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexJson {
    facets: Vec<Vec<usize>>,
    kind: Kind,
    n: usize,
}

pub fn complex_to_value(c: &SimplicialComplex) -> serde_json::Value {
    serde_json::to_value(ComplexJson { facets: c.facets().iter().map(|f| f.labels()).collect(), kind: c.kind(), n: c.n() })
        .expect("complex serializes")
}

/// `{"facets":[[2,4]],"kind":"proper","n":4}`.
pub fn complex_to_json(c: &SimplicialComplex) -> String {
    complex_to_value(c).to_string()
}

pub fn complex_from_json(text: &str) -> Result<SimplicialComplex> {
    let raw: ComplexJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut facets = Vec::with_capacity(raw.facets.len());
    for f in &raw.facets {
        if f.iter().any(|&v| v == 0 || v > raw.n) {
            return Err(Error::domain(format!("facet {f:?} outside 1..{}", raw.n)));
        }
        facets.push(VertexSet::from_labels(f.iter().copied()));
    }
    SimplicialComplex::from_parts(raw.n, raw.kind, facets)
}

/// The ring line and constructor call, e.g.
/// `S = QQ[x_1..x_4];` then `simplicialComplex {x_2*x_4}`.
pub fn complex_to_m2(c: &SimplicialComplex) -> String {
    let ring = format!("S = QQ[x_1..x_{}];", c.n());
    let body = match c.kind() {
        Kind::Void => "simplicialComplex monomialIdeal 1_S".to_string(),
        Kind::Irrelevant => "simplicialComplex {1_S}".to_string(),
        Kind::Proper => format!("simplicialComplex {{{}}}", m2_face_list(c.facets())),
    };
    format!("{ring}\n{body}")
}

/// `x_2*x_4, x_1*x_3`.
pub fn m2_face_list(faces: &[VertexSet]) -> String {
    faces
        .iter()
        .map(|f| f.labels().iter().map(|v| format!("x_{v}")).collect::<Vec<_>>().join("*"))
        .collect::<Vec<_>>()
        .join(", ")
}

/// Facets named in a `simplicialComplex {...}` call. `1` and `1_S` denote the
/// empty face and are dropped; `monomialIdeal 1_S` yields no facets.
pub fn facets_from_m2(text: &str) -> Result<Vec<VertexSet>> {
    let Some(start) = text.find("simplicialComplex") else {
        return Err(Error::Parse { line: 1, column: 1, message: "no simplicialComplex call".into() });
    };
    let rest = &text[start + "simplicialComplex".len()..];
    if rest.trim_start().starts_with("monomialIdeal") {
        return Ok(Vec::new());
    }
    let open = rest.find('{').ok_or_else(|| Error::Parse { line: 1, column: start + 1, message: "expected `{`".into() })?;
    let close = rest.rfind('}').ok_or_else(|| Error::Parse { line: 1, column: start + 1, message: "expected `}`".into() })?;
    let mut out = Vec::new();
    for item in rest[open + 1..close].split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if item == "1" || item == "1_S" {
            continue;
        }
        let mut face = VertexSet::EMPTY;
        for factor in item.split('*').map(str::trim) {
            let idx: usize = factor
                .strip_prefix("x_")
                .and_then(|d| d.parse().ok())
                .filter(|v| (1..=crate::MAX_VARS).contains(v))
                .ok_or_else(|| Error::Parse { line: 1, column: 1, message: format!("bad factor `{factor}`") })?;
            face.insert(idx - 1);
        }
        out.push(face);
    }
    Ok(out)
}
