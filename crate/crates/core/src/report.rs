//! Machine-readable run reports shared by the CLI and the C API.

use crate::series::Rat;
use serde::Serialize;
use serde_json::{Map, Value};

/// Exponent of a regularized product: always a float, plus the exact
/// rational "p/q" whenever one exists.
#[derive(Debug, Clone, Serialize)]
pub struct ExponentOut {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    pub float: f64,
}

impl ExponentOut {
    pub fn from_float(x: f64) -> Self {
        ExponentOut {
            exact: None,
            float: x,
        }
    }

    pub fn from_exact(r: &Rat) -> Self {
        use num_traits::{One, ToPrimitive};
        let exact = if r.denom().is_one() {
            format!("{}", r.numer())
        } else {
            format!("{}/{}", r.numer(), r.denom())
        };
        ExponentOut {
            exact: Some(exact),
            float: r.to_f64().unwrap_or(f64::NAN),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Diagnostics {
    pub precision_bits: u32,
    /// named residuals gathered during the run (imaginary parts,
    /// re-multiplication defects, Weil deviations, ...)
    pub residuals: Map<String, Value>,
}

impl Diagnostics {
    pub fn new(precision_bits: u32) -> Self {
        Diagnostics {
            precision_bits,
            residuals: Map::new(),
        }
    }

    pub fn push(&mut self, key: &str, value: f64) {
        self.residuals.insert(key.to_string(), json_f64(value));
    }
}

/// One complete run report. Field order is the serialization order.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub exponent: ExponentOut,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weil: Option<String>,
    pub breakdown: Value,
    pub diagnostics: Diagnostics,
    pub status: String,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command:   {}\n", self.command));
        for (k, v) in &self.inputs {
            out.push_str(&format!("input:     {k} = {v}\n"));
        }
        match &self.exponent.exact {
            Some(e) => out.push_str(&format!("exponent:  {e} (= {:.15})\n", self.exponent.float)),
            None => out.push_str(&format!("exponent:  {:.15}\n", self.exponent.float)),
        }
        out.push_str(&format!("value:     {:.15e}\n", self.value));
        if let Some(w) = &self.weil {
            out.push_str(&format!("weil:      {w}\n"));
        }
        if !self.breakdown.is_null() {
            out.push_str(&format!(
                "breakdown: {}\n",
                serde_json::to_string(&self.breakdown).unwrap()
            ));
        }
        for (k, v) in &self.diagnostics.residuals {
            out.push_str(&format!("residual:  {k} = {v}\n"));
        }
        out.push_str(&format!(
            "precision: {} bits\n",
            self.diagnostics.precision_bits
        ));
        out.push_str(&format!("status:    {}\n", self.status));
        out
    }
}

/// Serialize a float through serde_json's shortest-roundtrip formatting.
pub fn json_f64(x: f64) -> Value {
    serde_json::Number::from_f64(x)
        .map(Value::Number)
        .unwrap_or(Value::Null)
}
