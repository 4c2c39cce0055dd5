//! Gate-spec file format.
//!
//! A gate document is JSON of the form
//!
//! ```json
//! {"label": "cnot", "N": 2,
//!  "unitaries": [[[[re,im],[re,im]], [[re,im],[re,im]]], ...],
//!  "reference": [[re,im],[re,im]]}
//! ```
//!
//! Complex numbers are always two-element `[re, im]` arrays and matrices are
//! row-major nested arrays. `reference` is optional. The writer emits every
//! real with 17 significant digits, which round-trips f64 exactly.

use num_complex::Complex64;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::gate::ControlledGate;
use crate::matrix::{ComplexMatrix, ComplexVector};

/// Format a real with 17 significant digits (lossless for f64).
pub fn format_sig17(x: f64) -> String {
    assert!(x.is_finite(), "cannot serialize a non-finite real");
    format!("{:.16e}", x)
}

fn complex_json(z: Complex64) -> String {
    format!("[{},{}]", format_sig17(z.re), format_sig17(z.im))
}

fn vector_json(v: &ComplexVector) -> String {
    let parts: Vec<String> = v.entries().iter().map(|&z| complex_json(z)).collect();
    format!("[{}]", parts.join(","))
}

fn matrix_json(m: &ComplexMatrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let cells: Vec<String> = (0..m.cols()).map(|j| complex_json(m.get(i, j))).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

/// Serialize a gate to the gate-spec document text.
pub fn save_gate(gate: &ControlledGate) -> String {
    let unitaries: Vec<String> = gate.unitaries().iter().map(matrix_json).collect();
    let mut doc = format!(
        "{{\"label\":{},\"N\":{},\"unitaries\":[{}]",
        serde_json::to_string(gate.label()).expect("label serializes"),
        gate.cardinality(),
        unitaries.join(",")
    );
    if let Some(r) = gate.reference() {
        doc.push_str(",\"reference\":");
        doc.push_str(&vector_json(r));
    }
    doc.push('}');
    doc
}

#[derive(Deserialize)]
struct GateDocument {
    #[serde(default)]
    label: Option<String>,
    #[serde(rename = "N")]
    n: usize,
    unitaries: Vec<Vec<Vec<[f64; 2]>>>,
    #[serde(default)]
    reference: Option<Vec<[f64; 2]>>,
}

fn to_complex(pair: [f64; 2]) -> Result<Complex64> {
    if !pair[0].is_finite() || !pair[1].is_finite() {
        return Err(Error::Validation("non-finite entry in document".into()));
    }
    Ok(Complex64::new(pair[0], pair[1]))
}

/// Parse and validate a gate-spec document. Parse errors carry the position
/// reported by the JSON parser; validation errors name the offending field.
pub fn load_gate(document: &str, tol: f64) -> Result<ControlledGate> {
    let doc: GateDocument =
        serde_json::from_str(document).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.n == 0 {
        return Err(Error::Validation("N must be at least 1".into()));
    }
    if doc.unitaries.len() != doc.n {
        return Err(Error::Validation(format!(
            "document declares N={} but lists {} unitaries",
            doc.n,
            doc.unitaries.len()
        )));
    }
    let mut unitaries = Vec::with_capacity(doc.n);
    for (idx, rows) in doc.unitaries.iter().enumerate() {
        if rows.len() != doc.n || rows.iter().any(|r| r.len() != doc.n) {
            return Err(Error::Dimension(format!(
                "unitary {} is not {}x{} (Bob's dimension must equal N)",
                idx, doc.n, doc.n
            )));
        }
        let mut m = ComplexMatrix::zeros(doc.n, doc.n);
        for (i, row) in rows.iter().enumerate() {
            for (j, &pair) in row.iter().enumerate() {
                m.set(i, j, to_complex(pair)?);
            }
        }
        unitaries.push(m);
    }
    let reference = match &doc.reference {
        Some(entries) => {
            if entries.len() != doc.n {
                return Err(Error::Dimension(format!(
                    "reference has {} entries, expected {}",
                    entries.len(),
                    doc.n
                )));
            }
            let mut v = ComplexVector::zeros(doc.n);
            for (i, &pair) in entries.iter().enumerate() {
                v.set(i, to_complex(pair)?);
            }
            Some(v)
        }
        None => None,
    };
    ControlledGate::new(
        doc.label.unwrap_or_else(|| "unlabeled".into()),
        unitaries,
        reference,
        tol,
    )
}
