//! Output documents and their JSON and text renderings.
//!
//! Every number is emitted as a string: integers in decimal, other
//! rationals as `p/q`. Keys come out sorted because `serde_json::Map` is
//! ordered.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};
use symcurve_core::cone_volume::Ray;
use symcurve_core::ns_ring::{CycleClass, DivisorClass};
use symcurve_core::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// `{command, inputs, result, provenance}`.
#[derive(Clone, Debug, PartialEq)]
pub struct OutputDocument {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub result: Value,
    pub provenance: Vec<String>,
}

impl OutputDocument {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            inputs: Map::new(),
            result: Value::Null,
            provenance: Vec::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn to_value(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "result": self.result,
            "provenance": self.provenance,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.to_value()).expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut s = String::new();
                text(&mut s, 0, &self.to_value());
                s
            }
        }
    }
}

fn text(out: &mut String, indent: usize, v: &Value) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                if is_leaf(v) {
                    let _ = writeln!(out, "{pad}{k}: {}", leaf(v));
                } else {
                    let _ = writeln!(out, "{pad}{k}:");
                    text(out, indent + 1, v);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_leaf(item) {
                    let _ = writeln!(out, "{pad}- {}", leaf(item));
                } else {
                    let _ = writeln!(out, "{pad}-");
                    text(out, indent + 1, item);
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", leaf(other));
        }
    }
}

fn is_leaf(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.is_empty(),
        Value::Object(m) => m.is_empty(),
        _ => true,
    }
}

fn leaf(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(_) => "[]".into(),
        Value::Object(_) => "{}".into(),
        other => other.to_string(),
    }
}

pub fn q(r: &Rational) -> Value {
    Value::String(r.to_string())
}

/// Label of the `k`-th basis monomial `x^k θ^(c-k)` in codimension `c`.
pub fn monomial_label(c: usize, k: usize) -> String {
    let part = |name: &str, e: usize| match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    };
    let parts: Vec<String> = [part("x", k), part("theta", c - k)]
        .into_iter()
        .flatten()
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn class_value(c: &CycleClass) -> Value {
    let codim = c.codim();
    let basis: Vec<String> = (0..=codim).map(|k| monomial_label(codim, k)).collect();
    let coefficients: Vec<Value> = c.coeffs().iter().map(q).collect();
    let mut v = json!({
        "space": { "g": c.genus().to_string(), "d": c.dim().to_string() },
        "codim": codim.to_string(),
        "basis": basis,
        "coefficients": coefficients,
        "class": c.to_string(),
    });
    if codim == 1 {
        let d = DivisorClass::try_from(c.clone()).expect("codimension one");
        v["divisor"] = divisor_value(&d);
    }
    v
}

/// `aθ - bx` data of a divisor, with its slope `b/a` when `a ≠ 0`.
pub fn divisor_value(d: &DivisorClass) -> Value {
    let mut v = json!({
        "theta": q(&d.theta_coeff()),
        "x": q(&d.x_coeff()),
        "a": q(&d.a()),
        "b": q(&d.b()),
    });
    if let Some(s) = d.slope() {
        v["slope"] = q(&s);
    }
    v
}

pub fn ray_value(r: &Ray) -> Value {
    json!({
        "theta": r.theta().to_string(),
        "x": r.x().to_string(),
        "class": r.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        assert_eq!(monomial_label(0, 0), "1");
        assert_eq!(monomial_label(1, 0), "theta");
        assert_eq!(monomial_label(1, 1), "x");
        assert_eq!(monomial_label(3, 1), "x*theta^2");
        assert_eq!(monomial_label(3, 3), "x^3");
    }

    #[test]
    fn keys_are_sorted_and_text_is_indented() {
        let mut doc = OutputDocument::new("volume")
            .input("t", "1/2")
            .input("g", "4");
        doc.result = json!({ "value": "73/8", "domain": ["0", "12/11"] });
        doc.provenance.push("p".into());
        let s = doc.render(Format::Json);
        let order: Vec<usize> = ["\"command\"", "\"inputs\"", "\"provenance\"", "\"result\""]
            .iter()
            .map(|k| s.find(k).unwrap())
            .collect();
        assert!(order.windows(2).all(|w| w[0] < w[1]));
        assert!(s.find("\"g\"").unwrap() < s.find("\"t\"").unwrap());
        assert_eq!(
            doc.render(Format::Text),
            "command: volume\ninputs:\n  g: 4\n  t: 1/2\nprovenance:\n  - p\nresult:\n  domain:\n    - 0\n    - 12/11\n  value: 73/8\n"
        );
    }
}
