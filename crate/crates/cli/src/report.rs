//! Deterministic JSON assembly for report documents.
//!
//! Objects keep insertion order and every real is written with 17
//! significant digits, so identical inputs render byte-identical output.

use num_complex::Complex64;
use orthogate::io::format_sig17;
use orthogate::matrix::{ComplexMatrix, ComplexVector};
use orthogate::protocol::{Direction, ProtocolTranscript};

#[derive(Debug, Clone)]
pub enum Json {
    Null,
    Bool(bool),
    Int(i64),
    Real(f64),
    Str(String),
    Array(Vec<Json>),
    Object(Vec<(&'static str, Json)>),
}

impl Json {
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.write(&mut out);
        out
    }

    fn write(&self, out: &mut String) {
        match self {
            Json::Null => out.push_str("null"),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Int(i) => out.push_str(&i.to_string()),
            Json::Real(x) => out.push_str(&format_sig17(*x)),
            Json::Str(s) => {
                out.push_str(&serde_json::to_string(s).expect("string serializes"))
            }
            Json::Array(items) => {
                out.push('[');
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    item.write(out);
                }
                out.push(']');
            }
            Json::Object(fields) => {
                out.push('{');
                for (i, (key, value)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push_str(&serde_json::to_string(key).expect("key serializes"));
                    out.push(':');
                    value.write(out);
                }
                out.push('}');
            }
        }
    }
}

pub fn complex(z: Complex64) -> Json {
    Json::Array(vec![Json::Real(z.re), Json::Real(z.im)])
}

pub fn state(v: &ComplexVector) -> Json {
    Json::Array(v.entries().iter().map(|&z| complex(z)).collect())
}

pub fn opt_state(v: &Option<ComplexVector>) -> Json {
    match v {
        Some(v) => state(v),
        None => Json::Null,
    }
}

pub fn states(vs: &[ComplexVector]) -> Json {
    Json::Array(vs.iter().map(state).collect())
}

pub fn matrix(m: &ComplexMatrix) -> Json {
    Json::Array(
        (0..m.rows())
            .map(|i| Json::Array((0..m.cols()).map(|j| complex(m.get(i, j))).collect()))
            .collect(),
    )
}

pub fn reals(xs: &[f64]) -> Json {
    Json::Array(xs.iter().map(|&x| Json::Real(x)).collect())
}

pub fn real_table(rows: &[Vec<f64>]) -> Json {
    Json::Array(rows.iter().map(|r| reals(r)).collect())
}

pub fn indices_one_based(xs: &[usize]) -> Json {
    Json::Array(xs.iter().map(|&i| Json::Int(i as i64 + 1)).collect())
}

pub fn opt_index_one_based(x: Option<usize>) -> Json {
    match x {
        Some(i) => Json::Int(i as i64 + 1),
        None => Json::Str("ambiguous".into()),
    }
}

pub fn transcript(t: &ProtocolTranscript) -> Json {
    Json::Object(vec![
        (
            "direction",
            Json::Str(
                match t.direction {
                    Direction::Forward => "forward",
                    Direction::Reverse => "reverse",
                }
                .into(),
            ),
        ),
        ("message", Json::Int(t.message as i64 + 1)),
        ("decoded", opt_index_one_based(t.decoded)),
        ("factorized", Json::Bool(t.factorized)),
        (
            "eta",
            match &t.eta {
                Some(e) => reals(e),
                None => Json::Null,
            },
        ),
        ("alice_input", state(t.input.alice())),
        ("bob_input", state(t.input.bob())),
        ("alice_output", opt_state(&t.alice_output)),
        ("bob_output", opt_state(&t.bob_output)),
        ("joint_output", state(&t.joint_output)),
    ])
}

/// Standard document head shared by every command.
pub fn head(command: &str, tol: f64, label: Option<&str>, n: Option<usize>) -> Vec<(&'static str, Json)> {
    let mut fields = vec![
        ("command", Json::Str(command.into())),
        ("tool_version", Json::Str(env!("CARGO_PKG_VERSION").into())),
        ("tol", Json::Real(tol)),
    ];
    fields.push((
        "gate_label",
        match label {
            Some(l) => Json::Str(l.into()),
            None => Json::Null,
        },
    ));
    fields.push((
        "cardinality",
        match n {
            Some(n) => Json::Int(n as i64),
            None => Json::Null,
        },
    ));
    fields
}
