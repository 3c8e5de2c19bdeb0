//! Report documents: one JSON object per run, or a TSV table with the same values.

use monomial_lct::algebra::format_rational;
use monomial_lct::suite::{Codim2Report, Comparison, ZeroDimReport};
use monomial_lct::{MonomialIdeal, Rational};
use serde_json::{json, Map, Value};

pub const SCHEMA: &str = "monlct-report";
pub const SCHEMA_VERSION: u32 = 1;

pub type Record = Map<String, Value>;

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub input: Value,
    pub records: Vec<Record>,
    /// Counterexample dumps; nonempty means some check failed.
    pub failures: Vec<Value>,
}

impl Report {
    pub fn new(command: &str, input: Value) -> Self {
        Report {
            command: command.to_string(),
            input,
            records: Vec::new(),
            failures: Vec::new(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "schema_version": SCHEMA_VERSION,
            "tool_version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "input": self.input,
            "records": self.records,
            "failures": self.failures,
        })
    }

    pub fn render_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.to_json()).expect("values serialize");
        text.push('\n');
        text
    }

    /// Header row with every key in order of first appearance, then one row per record.
    pub fn render_tsv(&self) -> String {
        let mut columns: Vec<&str> = Vec::new();
        for r in &self.records {
            for k in r.keys() {
                if !columns.contains(&k.as_str()) {
                    columns.push(k);
                }
            }
        }
        let mut out = columns.join("\t");
        out.push('\n');
        for r in &self.records {
            let row: Vec<String> = columns
                .iter()
                .map(|c| r.get(*c).map(cell).unwrap_or_default())
                .collect();
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        out
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn rational(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn generators(ideal: &MonomialIdeal) -> Value {
    Value::Array(ideal.generators().iter().map(|g| json!(g.coords())).collect())
}

fn comparison(record: &mut Record, name: &str, c: &Comparison) {
    record.insert(format!("{name}_lhs"), rational(&c.lhs));
    record.insert(format!("{name}_rhs"), rational(&c.rhs));
    record.insert(format!("{name}_slack"), rational(&c.slack()));
    record.insert(format!("{name}_holds"), json!(c.holds()));
}

pub fn zero_dim_record(r: &ZeroDimReport) -> Record {
    let mut rec = Record::new();
    rec.insert("ideal".into(), generators(&r.ideal));
    rec.insert("n".into(), json!(r.ideal.n()));
    rec.insert("mu".into(), rational(&r.mu));
    rec.insert("length".into(), json!(r.length));
    rec.insert("covolume".into(), rational(&r.covol));
    rec.insert("multiplicity".into(), rational(&r.mult));
    comparison(&mut rec, "covolume_bound", &r.covolume_bound);
    comparison(&mut rec, "length_bound", &r.length_bound);
    comparison(&mut rec, "multiplicity_bound", &r.multiplicity_bound);
    rec.insert("multiplicity_equality".into(), json!(r.multiplicity_equality));
    rec.insert("closure_power_q".into(), json!(r.closure_power_q));
    rec.insert("passed".into(), json!(r.passed()));
    rec
}

pub fn codim2_record(r: &Codim2Report) -> Record {
    let mut rec = Record::new();
    rec.insert("ideal".into(), generators(&r.ideal));
    rec.insert("b".into(), json!(r.b.coords()));
    rec.insert("b1".into(), json!(r.b1));
    rec.insert("b2".into(), json!(r.b2));
    rec.insert("mult_f".into(), json!(r.mult_f));
    rec.insert("mu".into(), rational(&r.mu));
    rec.insert("primitive".into(), generators(&r.primitive));
    rec.insert("length_a".into(), json!(r.length_a));
    rec.insert("e_a".into(), rational(&r.e_a));
    comparison(&mut rec, "primitive_length_bound", &r.primitive_length_bound);
    comparison(&mut rec, "codim2_bound", &r.codim2_bound);
    comparison(&mut rec, "sharp_codim2_bound", &r.sharp_codim2_bound);
    rec.insert("sharp_equality".into(), json!(r.sharp_equality));
    rec.insert("boundary_closure_ok".into(), json!(r.boundary_closure_ok));
    rec.insert("passed".into(), json!(r.passed()));
    rec
}
