//! Command results as canonical JSON.

use std::time::Duration;

use bihom_core::cochain_complex::CohomologyReport;
use bihom_core::{Check, Error, ErrorKind, Witness};
use serde_json::{json, Value};

use crate::format::{to_canonical_string, vector_value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Ok,
    Witness,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Witness => "witness",
            Status::Error => "error",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Witness => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub witness: Option<Value>,
    pub error: Option<String>,
    pub result: Value,
    pub timing: Option<Duration>,
}

impl Report {
    pub fn ok(command: &str, result: Value) -> Report {
        Report { command: command.into(), status: Status::Ok, witness: None, error: None, result, timing: None }
    }

    pub fn error(command: &str, message: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            status: Status::Error,
            witness: None,
            error: Some(message.into()),
            result: Value::Null,
            timing: None,
        }
    }

    pub fn from_core_error(command: &str, e: &Error) -> Report {
        let mut r = Report::error(command, e.to_string());
        if e.kind == ErrorKind::Internal {
            r.result = json!({ "internal": true });
        }
        r
    }

    /// Ok unless `check` failed, in which case the witness is attached.
    pub fn checked(command: &str, check: &Check, result: Value) -> Report {
        let mut r = Report::ok(command, result);
        if let Err(w) = check {
            r.status = Status::Witness;
            r.witness = Some(witness_value(w));
        }
        r
    }

    pub fn to_value(&self) -> Value {
        let mut v = json!({
            "command": self.command,
            "result": self.result,
            "status": self.status.as_str(),
        });
        if let Some(w) = &self.witness {
            v["witness"] = w.clone();
        }
        if let Some(e) = &self.error {
            v["error"] = Value::String(e.clone());
        }
        if let Some(t) = self.timing {
            v["timing"] = json!({ "elapsed_ms": t.as_millis() as u64 });
        }
        v
    }

    pub fn render(&self) -> String {
        to_canonical_string(&self.to_value())
    }
}

pub fn witness_value(w: &Witness) -> Value {
    json!({
        "basis": w.basis,
        "equation": w.equation,
        "lhs": vector_value(&w.lhs),
        "omega": w.omega,
        "rhs": vector_value(&w.rhs),
    })
}

pub fn check_value(c: &Check) -> Value {
    match c {
        Ok(()) => json!({ "ok": true }),
        Err(w) => json!({ "ok": false, "witness": witness_value(w) }),
    }
}

pub fn cohomology_value(r: &CohomologyReport) -> Value {
    Value::Array(
        r.degrees
            .iter()
            .map(|d| {
                json!({
                    "coboundaries": d.coboundaries,
                    "cochains": d.cochains,
                    "cocycles": d.cocycles,
                    "cohomology": d.cohomology,
                    "degree": d.degree,
                })
            })
            .collect(),
    )
}
