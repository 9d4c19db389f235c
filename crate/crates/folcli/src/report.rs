//! The report document: inputs, invariants, verdicts, certificates.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use folinv::exactalg::rat::render;
use folinv::exactalg::Rat;
use folinv::folocal::{IdentityVerdict, Relation, Status};

/// An exact rational, written `a/b` (or `a` when integral).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exact(pub Rat);

impl From<Rat> for Exact {
    fn from(r: Rat) -> Self {
        Exact(r)
    }
}

impl From<i64> for Exact {
    fn from(v: i64) -> Self {
        Exact(Rat::from_integer(v.into()))
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.0))
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&render(&self.0))
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Rat::from_str(&s)
            .map(Exact)
            .map_err(|_| serde::de::Error::custom(format!("`{s}` is not a rational")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    pub value: Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictStatus {
    Holds,
    Fails,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub name: String,
    pub status: VerdictStatus,
    pub lhs: Exact,
    pub relation: String,
    pub rhs: Exact,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<&IdentityVerdict> for VerdictDoc {
    fn from(v: &IdentityVerdict) -> Self {
        VerdictDoc {
            name: v.name.clone(),
            status: match v.status {
                Status::Holds => VerdictStatus::Holds,
                Status::Fails => VerdictStatus::Fails,
                Status::NotApplicable => VerdictStatus::NotApplicable,
            },
            lhs: Exact(v.lhs.clone()),
            relation: match v.relation {
                Relation::Eq => "=",
                Relation::Lt => "<",
                Relation::Le => "<=",
            }
            .to_string(),
            rhs: Exact(v.rhs.clone()),
            note: v.note.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificates {
    pub degree_cap: u32,
    pub precision_cap: usize,
    pub seed: u64,
    /// Truncation degrees at which colengths were certified, and similar.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<Entry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErrorKind {
    Input,
    Limit,
    Internal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorDoc {
    pub kind: ErrorKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub command: String,
    /// Inputs echoed as `(name, canonical form)`.
    pub inputs: Vec<(String, String)>,
    pub invariants: Vec<Entry>,
    pub verdicts: Vec<VerdictDoc>,
    pub certificates: Certificates,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<ErrorDoc>,
    pub exit_code: i32,
    pub timing: Timing,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

impl ReportDoc {
    pub fn new(command: &str, certificates: Certificates) -> Self {
        ReportDoc {
            command: command.to_string(),
            inputs: Vec::new(),
            invariants: Vec::new(),
            verdicts: Vec::new(),
            certificates,
            errors: Vec::new(),
            exit_code: EXIT_OK,
            timing: Timing { elapsed_ms: 0.0 },
        }
    }

    pub fn input(&mut self, name: &str, value: impl fmt::Display) {
        self.inputs.push((name.to_string(), value.to_string()));
    }

    pub fn invariant(&mut self, name: &str, value: impl Into<Exact>) {
        self.invariants.push(Entry {
            name: name.to_string(),
            value: value.into(),
        });
    }

    pub fn certificate(&mut self, name: &str, value: impl Into<Exact>) {
        self.certificates.details.push(Entry {
            name: name.to_string(),
            value: value.into(),
        });
    }

    pub fn verdict(&mut self, v: &IdentityVerdict) {
        self.verdicts.push(v.into());
    }

    pub fn get(&self, name: &str) -> Option<&Rat> {
        self.invariants.iter().find(|e| e.name == name).map(|e| &e.value.0)
    }

    pub fn verdict_named(&self, name: &str) -> Option<&VerdictDoc> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    /// Sets the exit code from the errors and verdicts.
    pub fn settle(&mut self) {
        self.exit_code = if self.errors.iter().any(|e| e.kind == ErrorKind::Input) {
            EXIT_INPUT
        } else if self.errors.iter().any(|e| e.kind == ErrorKind::Limit) {
            EXIT_LIMIT
        } else if self.errors.iter().any(|e| e.kind == ErrorKind::Internal)
            || self.verdicts.iter().any(|v| v.status == VerdictStatus::Fails)
        {
            EXIT_FAILED
        } else {
            EXIT_OK
        };
    }

    /// The document with timing zeroed, for comparisons.
    pub fn without_timing(&self) -> ReportDoc {
        let mut r = self.clone();
        r.timing.elapsed_ms = 0.0;
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<ReportDoc> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "command: {}", self.command);
        for (k, v) in &self.inputs {
            let _ = writeln!(s, "input {k} = {v}");
        }
        for e in &self.invariants {
            let _ = writeln!(s, "{} = {}", e.name, e.value);
        }
        for v in &self.verdicts {
            let status = match v.status {
                VerdictStatus::Holds => "holds",
                VerdictStatus::Fails => "FAILS",
                VerdictStatus::NotApplicable => "not applicable",
            };
            let _ = write!(s, "check {}: {} {} {} ({status})", v.name, v.lhs, v.relation, v.rhs);
            if let Some(n) = &v.note {
                let _ = write!(s, " [{n}]");
            }
            s.push('\n');
        }
        let c = &self.certificates;
        let _ = writeln!(
            s,
            "limits: degree_cap {}, precision_cap {}, seed {}",
            c.degree_cap, c.precision_cap, c.seed
        );
        for e in &c.details {
            let _ = writeln!(s, "certificate {} = {}", e.name, e.value);
        }
        for e in &self.errors {
            let kind = match e.kind {
                ErrorKind::Input => "input",
                ErrorKind::Limit => "limit",
                ErrorKind::Internal => "internal",
            };
            let _ = writeln!(s, "error [{kind}]: {}", e.message);
        }
        let _ = writeln!(s, "exit code {} ({:.1} ms)", self.exit_code, self.timing.elapsed_ms);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use folinv::exactalg::rat::rat;

    fn sample() -> ReportDoc {
        let mut r = ReportDoc::new(
            "example run",
            Certificates {
                degree_cap: 10,
                precision_cap: 20,
                seed: 3,
                details: Vec::new(),
            },
        );
        r.input("P", "x^2");
        r.invariant("ratio", rat(5, 3));
        r.invariant("mu", 7);
        r.verdict(&IdentityVerdict::evaluate("b", rat(-1, 2), rat(1, 3), Relation::Lt));
        r.timing.elapsed_ms = 1.5;
        r
    }

    #[test]
    fn rationals_render_as_fractions() {
        let r = sample();
        let j = r.to_json();
        assert!(j.contains("\"5/3\""));
        assert!(j.contains("\"-1/2\""));
        assert!(j.contains("\"7\""));
    }

    #[test]
    fn round_trip() {
        let r = sample();
        assert_eq!(ReportDoc::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn exit_codes() {
        let mut r = sample();
        r.settle();
        assert_eq!(r.exit_code, EXIT_OK);
        r.verdict(&IdentityVerdict::ints("bad", 1, 2, Relation::Eq));
        r.settle();
        assert_eq!(r.exit_code, EXIT_FAILED);
        r.errors.push(ErrorDoc {
            kind: ErrorKind::Limit,
            field: None,
            message: "cap".into(),
        });
        r.settle();
        assert_eq!(r.exit_code, EXIT_LIMIT);
        r.errors.push(ErrorDoc {
            kind: ErrorKind::Input,
            field: Some("P".into()),
            message: "bad".into(),
        });
        r.settle();
        assert_eq!(r.exit_code, EXIT_INPUT);
    }
}
