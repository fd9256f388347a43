//! The single output record type and its two renderings.
//!
//! Machine mode writes one JSON object per line:
//!
//! ```text
//! {"command":"verify","ok":true,"params":{...},"result":{...}}
//! ```
//!
//! Exact numbers are JSON strings (`"-691/2730"`, `"3628799"`); small counts
//! and valuation exponents are JSON numbers, with `"inf"` for the valuation of
//! zero. Keys are sorted.

use fsum_core::{BigInt, BigRational, IntPoly, PadicExpansion, SumCertificate, ValExponent};
use serde::Serialize;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputRecord {
    pub command: String,
    pub ok: bool,
    pub params: Map<String, Value>,
    pub result: Map<String, Value>,
    /// Preferred human line; when absent the result fields are listed.
    #[serde(skip)]
    pub human: Option<String>,
}

impl OutputRecord {
    pub fn new(command: &str, params: Value, result: Value, ok: bool) -> Self {
        OutputRecord {
            command: command.to_string(),
            ok,
            params: into_map(params),
            result: into_map(result),
            human: None,
        }
    }

    pub fn with_human(mut self, line: String) -> Self {
        self.human = Some(line);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Machine => serde_json::to_string(self).expect("records serialize"),
            Format::Human => self.human_line(),
        }
    }

    fn human_line(&self) -> String {
        if let Some(h) = &self.human {
            return h.clone();
        }
        let fields: Vec<String> = self
            .result
            .iter()
            .map(|(k, v)| format!("{}={}", k, plain(v)))
            .collect();
        let status = if self.ok { "ok" } else { "FAIL" };
        format!("{} {} {}", self.command, fields.join(" "), status)
    }
}

fn into_map(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        Value::Null => Map::new(),
        other => {
            let mut m = Map::new();
            m.insert("value".into(), other);
            m
        }
    }
}

/// Value text without JSON quoting, for human lines.
pub fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!(
            "[{}]",
            items.iter().map(plain).collect::<Vec<_>>().join(",")
        ),
        other => other.to_string(),
    }
}

pub fn rat(q: &BigRational) -> Value {
    Value::String(q.to_string())
}

pub fn int(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

pub fn exponent(v: ValExponent) -> Value {
    match v {
        ValExponent::Finite(e) => json!(e),
        ValExponent::Infinite => json!("inf"),
    }
}

/// Little-endian coefficient array.
pub fn coeffs(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(int).collect())
}

pub fn certificate(c: &SumCertificate) -> Value {
    json!({
        "k": c.k,
        "N": c.n_terms,
        "x": c.x.as_ref().map(rat).unwrap_or(Value::Null),
        "p": c.p.get(),
        "partial": rat(&c.partial),
        "target": rat(&c.target),
        "tail": rat(&c.tail),
        "achieved_exponent": exponent(c.distance_exponent),
        "bound_exponent": c.bound_exponent,
        "ok": c.ok(),
    })
}

pub fn expansion(e: &PadicExpansion) -> Value {
    json!({
        "p": e.p.get(),
        "valuation": if e.is_zero() { json!("inf") } else { json!(e.valuation) },
        "digits": e.digits,
        "precision": e.precision(),
    })
}
