//! Line-oriented spec files:
//!
//! ```text
//! # comment
//! type: hyperbolic
//! A: 0 0 0 1 0      # a0 .. a4, z^4 coefficient first
//! B: 0 0 0 1 0
//! p: 0 0 1          # optional, p0 p1 p2 with p(z) = p0 z^2 + 2 p1 z + p2
//! ```
//!
//! `q: q0 q1 q2` is required for `type: general` and must be the canonical
//! quadratic otherwise. Coefficients are integers or fractions `n/d`.

use std::fmt;

use ambitoric::algebra::{parse_scalar, ExactScalar};
use ambitoric::binary_forms::{BinaryForm, QuadraticForm};
use ambitoric::builder::{AmbitoricSpec, FormType};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

struct Field {
    line: usize,
    column: usize,
    values: Vec<ExactScalar>,
}

fn parse_values(text: &str, line: usize, offset: usize, want: usize, key: &str) -> Result<Vec<ExactScalar>, ParseError> {
    let mut out = Vec::new();
    let mut pos = 0;
    for tok in text.split_whitespace() {
        let start = pos + text[pos..].find(tok).unwrap_or(0);
        pos = start + tok.len();
        let v = parse_scalar(tok).map_err(|_| err(line, offset + start + 1, format!("invalid rational `{tok}`")))?;
        out.push(v);
    }
    if out.len() != want {
        return Err(err(line, offset + 1, format!("`{key}` needs {want} coefficients, found {}", out.len())));
    }
    Ok(out)
}

pub fn parse_spec(text: &str) -> Result<AmbitoricSpec, ParseError> {
    let mut form_type: Option<(FormType, usize)> = None;
    let (mut q, mut a, mut b, mut p): (Option<Field>, Option<Field>, Option<Field>, Option<Field>) =
        (None, None, None, None);
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        let Some((key, rest)) = content.split_once(':') else {
            return Err(err(line, indent + 1, "expected `key: value`"));
        };
        let key = key.trim();
        let offset = key.len() + indent + 1;
        let slot = match key {
            "type" => {
                if form_type.is_some() {
                    return Err(err(line, indent + 1, "duplicate key `type`"));
                }
                let name = rest.trim();
                let t = name
                    .parse::<FormType>()
                    .map_err(|_| err(line, offset + rest.find(name).unwrap_or(0) + 1, format!("unknown type `{name}`")))?;
                form_type = Some((t, line));
                continue;
            }
            "q" => &mut q,
            "A" => &mut a,
            "B" => &mut b,
            "p" => &mut p,
            other => return Err(err(line, indent + 1, format!("unknown key `{other}`"))),
        };
        if slot.is_some() {
            return Err(err(line, indent + 1, format!("duplicate key `{key}`")));
        }
        let want = if key == "A" || key == "B" { 5 } else { 3 };
        let values = parse_values(rest, line, offset, want, key)?;
        *slot = Some(Field { line, column: indent + 1, values });
    }
    let end = last_line + 1;
    let (t, _) = form_type.ok_or_else(|| err(end, 1, "missing key `type`"))?;
    let quartic = |f: Field| BinaryForm::quartic([
        f.values[0].clone(),
        f.values[1].clone(),
        f.values[2].clone(),
        f.values[3].clone(),
        f.values[4].clone(),
    ]);
    let quad = |f: &Field| QuadraticForm::new(f.values[0].clone(), f.values[1].clone(), f.values[2].clone());
    let a = quartic(a.ok_or_else(|| err(end, 1, "missing key `A`"))?);
    let b = quartic(b.ok_or_else(|| err(end, 1, "missing key `B`"))?);
    let q_value = match (t, &q) {
        (FormType::General, None) => return Err(err(end, 1, "type `general` requires `q`")),
        (FormType::General, Some(f)) => quad(f),
        (_, Some(f)) => {
            let given = quad(f);
            if Some(&given) != t.canonical_q().as_ref() {
                return Err(err(f.line, f.column, format!("q must be the canonical {t} quadratic")));
            }
            given
        }
        (_, None) => t.canonical_q().expect("named type"),
    };
    let mut spec = AmbitoricSpec { form_type: t, q: q_value, a, b, p: None };
    if let Some(f) = p {
        spec.p = Some(quad(&f));
    }
    Ok(spec)
}

fn join(v: &[ExactScalar]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

/// Serialize a spec in the file format accepted by [`parse_spec`].
pub fn to_spec_text(spec: &AmbitoricSpec) -> String {
    let mut out = format!("type: {}\n", spec.form_type);
    let q = &spec.q;
    if spec.form_type == FormType::General {
        out.push_str(&format!("q: {}\n", join(&[q.q0.clone(), q.q1.clone(), q.q2.clone()])));
    }
    out.push_str(&format!("A: {}\n", join(&spec.a_coeffs())));
    out.push_str(&format!("B: {}\n", join(&spec.b_coeffs())));
    if let Some(p) = &spec.p {
        out.push_str(&format!("p: {}\n", join(&[p.q0.clone(), p.q1.clone(), p.q2.clone()])));
    }
    out
}

/// Comma separated rationals, as in `--params 1,0,2/3`.
pub fn parse_list(text: &str, want: usize) -> Result<Vec<ExactScalar>, ParseError> {
    let mut out = Vec::new();
    let mut col = 1;
    for tok in text.split(',') {
        out.push(parse_scalar(tok).map_err(|_| err(1, col, format!("invalid rational `{}`", tok.trim())))?);
        col += tok.len() + 1;
    }
    if out.len() != want {
        return Err(err(1, 1, format!("expected {want} comma separated values, found {}", out.len())));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "type: elliptic\nA: 0 1 0 0 0\nB: 0 0 0 1 0\np: -1 0 1\n";
        let spec = parse_spec(text).unwrap();
        assert_eq!(to_spec_text(&spec), text);
        assert_eq!(parse_spec(&to_spec_text(&spec)).unwrap(), spec);
    }

    #[test]
    fn error_positions() {
        let e = parse_spec("type: parabolic\nA: 1 0 1//2 0 0\nB: 1 0 0 0 0\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 8));
        let e = parse_spec("type: parabolic\n  C: 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_spec("type: parabolic\nA: 1 0 0 0 0\n").unwrap_err();
        assert!(e.message.contains("`B`"));
        let e = parse_spec("type: hyperbolic\nq: 1 0 1\nA: 1 0 0 0 0\nB: 1 0 0 0 0\n").unwrap_err();
        assert_eq!(e.line, 2);
    }
}
