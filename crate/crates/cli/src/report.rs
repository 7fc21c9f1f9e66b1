//! Report assembly and serialization.
//!
//! Every command emits exactly one object on standard output.  In JSON
//! mode that object always carries the same top-level keys; exact numbers
//! (big integers, rationals, cyclotomic coefficients) are decimal strings
//! so no consumer ever coerces them through floats.  CSV mode is available
//! for polynomial-valued commands only and prints a fixed header plus one
//! row per coefficient.

use serde_json::{json, Map, Value};

use ramsey_formulas::exact::{BivariatePolynomial, IntPolynomial, Rational, ScaledCyclotomic};
use ramsey_formulas::trig::{FormulaResult, FormulaValue, RestrictedSumResult};

/// Everything a command hands back for emission.
pub struct Report {
    pub command: &'static str,
    pub n: Option<u32>,
    pub k: Option<u32>,
    pub params: Value,
    pub result: Value,
    pub is_zero: Option<bool>,
    pub implies: Option<String>,
    pub terms: Option<u64>,
    pub mode: &'static str,
    /// CSV body when the result supports it; `None` forbids `--output csv`.
    pub csv: Option<String>,
}

impl Report {
    pub fn to_json(&self, config: &Value, elapsed_ms: u128) -> Value {
        json!({
            "command": self.command,
            "n": self.n,
            "k": self.k,
            "params": self.params,
            "result": self.result,
            "is_zero": self.is_zero,
            "implies": self.implies,
            "terms": self.terms,
            "elapsed_ms": elapsed_ms as u64,
            "mode": self.mode,
            "config": config,
        })
    }
}

pub fn rational_json(r: &Rational) -> Value {
    json!({
        "kind": "rational",
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
    })
}

pub fn cyclotomic_json(v: &ScaledCyclotomic) -> Value {
    let coeffs: Vec<String> = v.numerator().coeffs().iter().map(|c| c.to_string()).collect();
    json!({
        "kind": "cyclotomic",
        "order": v.order(),
        "coeffs": coeffs,
        "log2_denom": v.log2_denom(),
    })
}

pub fn formula_json(r: &FormulaResult) -> Value {
    match &r.value {
        FormulaValue::Exact(v) => cyclotomic_json(v),
        FormulaValue::Float {
            value,
            zero_tolerance,
        } => json!({
            "kind": "float",
            "value": value,
            "zero_tolerance": zero_tolerance,
        }),
    }
}

pub fn restricted_json(r: &RestrictedSumResult) -> Value {
    json!({
        "kind": "restricted",
        "sign": r.sign,
        "quotient": r.quotient.to_string(),
        "value": formula_json(&r.formula),
    })
}

pub fn polynomial_json(p: &IntPolynomial) -> Value {
    let mut coeffs = Map::new();
    for (d, c) in p.iter() {
        coeffs.insert(d.to_string(), Value::String(c.to_string()));
    }
    json!({ "kind": "polynomial", "coeffs": coeffs })
}

pub fn bivariate_json(p: &BivariatePolynomial) -> Value {
    let mut coeffs = Map::new();
    for ((dz, dw), c) in p.iter() {
        coeffs.insert(format!("{dz},{dw}"), Value::String(c.to_string()));
    }
    json!({ "kind": "bivariate", "coeffs": coeffs })
}

pub fn polynomial_csv(p: &IntPolynomial) -> String {
    let mut out = String::from("degree,coefficient\n");
    for (d, c) in p.iter() {
        out.push_str(&format!("{d},{c}\n"));
    }
    out
}

pub fn bivariate_csv(p: &BivariatePolynomial) -> String {
    let mut out = String::from("z_degree,w_degree,coefficient\n");
    for ((dz, dw), c) in p.iter() {
        out.push_str(&format!("{dz},{dw},{c}\n"));
    }
    out
}

/// Versioned checkpoint payload: the shard partial sums of an exact
/// formula evaluation, self-contained enough to resume or audit a run.
pub fn checkpoint_json(command: &str, n: u32, k: u32, result: &FormulaResult) -> Value {
    let shards: Vec<Value> = result
        .shards
        .iter()
        .map(|s| {
            json!({
                "index": s.index,
                "lo": s.lo,
                "hi": s.hi,
                "order": s.partial.order(),
                "log2_denom": s.partial.log2_denom(),
                "coeffs": s
                    .partial
                    .numerator()
                    .coeffs()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "version": 1,
        "command": command,
        "n": n,
        "k": k,
        "shards": shards,
    })
}
