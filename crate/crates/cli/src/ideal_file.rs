//! The JSON ideal file format.
//!
//! ```json
//! {"vars":2,"kind":"monomial","generators":[[6,0],[0,2]]}
//! {"vars":2,"kind":"polynomial","generators":[[{"coeff":"1","exp":[6,0]}],
//!                                            [{"coeff":"1","exp":[0,2]},{"coeff":"1","exp":[2,1]}]]}
//! ```
//!
//! A file may also hold a JSON array of such documents (a corpus).

use std::collections::BTreeMap;

use monomial_lct::algebra::{format_rational, parse_rational};
use monomial_lct::{Exponent, MonomialIdeal, PolyIdeal, Rational, RationalPolynomial};
use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Field { path: String, message: String },
}

fn field(path: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError::Field {
        path: path.into(),
        message: message.into(),
    }
}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        ParseError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

/// A parsed ideal, canonicalized: monomial ideals are minimalized, polynomial terms
/// are merged into canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealFile {
    Monomial(MonomialIdeal),
    Polynomial(PolyIdeal),
}

impl IdealFile {
    pub fn vars(&self) -> usize {
        match self {
            IdealFile::Monomial(m) => m.n(),
            IdealFile::Polynomial(p) => p.n(),
        }
    }

    /// The monomial ideal, also when a polynomial file lists only monomials.
    pub fn as_monomial(&self) -> Option<MonomialIdeal> {
        match self {
            IdealFile::Monomial(m) => Some(m.clone()),
            IdealFile::Polynomial(p) => p.as_monomial(),
        }
    }

    pub fn to_poly_ideal(&self) -> PolyIdeal {
        match self {
            IdealFile::Monomial(m) => PolyIdeal::from_monomial(m),
            IdealFile::Polynomial(p) => p.clone(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            IdealFile::Monomial(m) => json!({
                "vars": m.n(),
                "kind": "monomial",
                "generators": m.generators().iter().map(|g| json!(g.coords())).collect::<Vec<_>>(),
            }),
            IdealFile::Polynomial(p) => json!({
                "vars": p.n(),
                "kind": "polynomial",
                "generators": p.generators().iter().map(polynomial_json).collect::<Vec<_>>(),
            }),
        }
    }

    /// Canonical compact serialization.
    pub fn serialize(&self) -> String {
        self.to_json().to_string()
    }
}

fn polynomial_json(p: &RationalPolynomial) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| json!({"coeff": format_rational(c), "exp": e.coords()}))
            .collect(),
    )
}

/// Parses one ideal document or an array of them.
pub fn parse_documents(text: &str) -> Result<Vec<IdealFile>, ParseError> {
    let value: Value = serde_json::from_str(text)?;
    match &value {
        Value::Array(items) => items
            .iter()
            .enumerate()
            .map(|(i, v)| parse_value(v, &format!("[{i}]")))
            .collect(),
        _ => Ok(vec![parse_value(&value, "")?]),
    }
}

/// Parses exactly one ideal document.
pub fn parse_ideal_file(text: &str) -> Result<IdealFile, ParseError> {
    let value: Value = serde_json::from_str(text)?;
    parse_value(&value, "")
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_string()
    } else {
        format!("{prefix}.{key}")
    }
}

fn parse_value(value: &Value, at: &str) -> Result<IdealFile, ParseError> {
    let obj: &Map<String, Value> = value
        .as_object()
        .ok_or_else(|| field(if at.is_empty() { "document" } else { at }, "expected an object"))?;
    if let Some(extra) = obj.keys().find(|k| !matches!(k.as_str(), "vars" | "kind" | "generators")) {
        return Err(field(join(at, extra), "unknown field"));
    }
    let vars_path = join(at, "vars");
    let vars = obj
        .get("vars")
        .ok_or_else(|| field(&vars_path, "missing"))?
        .as_u64()
        .filter(|&v| v >= 1)
        .ok_or_else(|| field(&vars_path, "expected a positive integer"))? as usize;
    let kind_path = join(at, "kind");
    let kind = obj
        .get("kind")
        .ok_or_else(|| field(&kind_path, "missing"))?
        .as_str()
        .ok_or_else(|| field(&kind_path, "expected a string"))?;
    let gens_path = join(at, "generators");
    let gens = obj
        .get("generators")
        .ok_or_else(|| field(&gens_path, "missing"))?
        .as_array()
        .ok_or_else(|| field(&gens_path, "expected an array"))?;
    if gens.is_empty() {
        return Err(field(&gens_path, "empty generator list (zero ideal)"));
    }
    match kind {
        "monomial" => {
            let exps = gens
                .iter()
                .enumerate()
                .map(|(i, g)| parse_exponent(g, vars, &format!("{gens_path}[{i}]")))
                .collect::<Result<Vec<_>, _>>()?;
            let ideal = MonomialIdeal::new(vars, exps).map_err(|e| field(&gens_path, e.to_string()))?;
            Ok(IdealFile::Monomial(ideal))
        }
        "polynomial" => {
            let polys = gens
                .iter()
                .enumerate()
                .map(|(i, g)| parse_polynomial(g, vars, &format!("{gens_path}[{i}]")))
                .collect::<Result<Vec<_>, _>>()?;
            let ideal = PolyIdeal::new(vars, polys).map_err(|e| field(&gens_path, e.to_string()))?;
            Ok(IdealFile::Polynomial(ideal))
        }
        other => Err(field(
            &kind_path,
            format!("expected \"monomial\" or \"polynomial\", got {other:?}"),
        )),
    }
}

fn parse_exponent(value: &Value, vars: usize, path: &str) -> Result<Exponent, ParseError> {
    let items = value
        .as_array()
        .ok_or_else(|| field(path, "expected an array of exponents"))?;
    if items.len() != vars {
        return Err(field(path, format!("has {} entries, expected {vars}", items.len())));
    }
    let coords = items
        .iter()
        .enumerate()
        .map(|(k, v)| {
            v.as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| field(format!("{path}[{k}]"), "expected a nonnegative integer"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Exponent::new(coords))
}

fn parse_polynomial(value: &Value, vars: usize, path: &str) -> Result<RationalPolynomial, ParseError> {
    let terms = value
        .as_array()
        .ok_or_else(|| field(path, "expected an array of terms"))?;
    if terms.is_empty() {
        return Err(field(path, "zero polynomial"));
    }
    let mut seen: BTreeMap<Exponent, Rational> = BTreeMap::new();
    for (k, term) in terms.iter().enumerate() {
        let tpath = format!("{path}[{k}]");
        let obj = term
            .as_object()
            .ok_or_else(|| field(&tpath, "expected an object with coeff and exp"))?;
        if let Some(extra) = obj.keys().find(|k| !matches!(k.as_str(), "coeff" | "exp")) {
            return Err(field(format!("{tpath}.{extra}"), "unknown field"));
        }
        let cpath = format!("{tpath}.coeff");
        let coeff = parse_coefficient(obj.get("coeff"), &cpath)?;
        let epath = format!("{tpath}.exp");
        let exp = parse_exponent(
            obj.get("exp").ok_or_else(|| field(&epath, "missing"))?,
            vars,
            &epath,
        )?;
        if seen.insert(exp.clone(), coeff).is_some() {
            return Err(field(&epath, format!("exponent {exp} repeated")));
        }
    }
    Ok(RationalPolynomial::try_from_terms(vars, seen).expect("exponent lengths checked"))
}

fn parse_coefficient(value: Option<&Value>, path: &str) -> Result<Rational, ParseError> {
    let text = value
        .ok_or_else(|| field(path, "missing"))?
        .as_str()
        .ok_or_else(|| field(path, "expected a string \"p\" or \"p/q\""))?;
    let c = parse_rational(text).ok_or_else(|| field(path, format!("{text:?} is not a rational")))?;
    if c.is_zero() {
        return Err(field(path, "zero coefficient"));
    }
    if let Some((_, den)) = text.split_once('/') {
        let den = parse_rational(den).ok_or_else(|| field(path, "bad denominator"))?;
        if !den.is_positive() || den.to_integer() != *c.denom() {
            return Err(field(path, format!("{text:?} is not in lowest terms")));
        }
    }
    Ok(c)
}
