//! Job descriptions as read from `--input` files and assembled from flags.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use folinv::exactalg::{parse_poly2, parse_poly3, Poly2, Poly3, Rat};
use folinv::projplane::ProjPoint;
use folinv::Limits;

use crate::InputError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum JobKind {
    LocalInvariants,
    LocalCheck,
    GlobalCheck,
    Example,
}

impl JobKind {
    pub fn command(self) -> &'static str {
        match self {
            JobKind::LocalInvariants => "local invariants",
            JobKind::LocalCheck => "local check",
            JobKind::GlobalCheck => "global check",
            JobKind::Example => "example run",
        }
    }
}

/// One component of a divisor of separatrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DivisorTerm {
    pub f: String,
    pub coeff: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigOverrides {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_cap: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precision_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl ConfigOverrides {
    /// `other` wins where it is set.
    pub fn merged(&self, other: &ConfigOverrides) -> ConfigOverrides {
        ConfigOverrides {
            degree_cap: other.degree_cap.or(self.degree_cap),
            precision_cap: other.precision_cap.or(self.precision_cap),
            seed: other.seed.or(self.seed),
        }
    }

    pub fn limits(&self) -> Limits {
        let d = Limits::default();
        Limits {
            degree_cap: self.degree_cap.unwrap_or(d.degree_cap),
            precision_cap: self.precision_cap.unwrap_or(d.precision_cap),
            seed: self.seed.unwrap_or(d.seed),
        }
    }
}

/// Everything a run needs. Polynomials are kept as source strings and
/// parsed by [`JobSpec::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<JobKind>,
    /// Names standing for `x, y` (local) or `x, y, z` (global).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
    #[serde(rename = "P", default, skip_serializing_if = "Option::is_none")]
    pub p: Option<String>,
    #[serde(rename = "Q", default, skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub divisor: Vec<DivisorTerm>,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(rename = "C", default, skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub curve: Option<String>,
    /// Points as `x:y:z`, brackets optional.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub irreducible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub example: Option<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<String>,
    #[serde(default)]
    pub config: ConfigOverrides,
}

pub const LOCAL_CURVE_CHECKS: [&str; 12] = [
    "gsv_difference",
    "milnor_minus_tjurina",
    "gsv_tjurina_bound",
    "milnor_adjunction",
    "multiplicity_adjunction",
    "gsv_adjunction",
    "tjurina_adjunction",
    "foliated_tjurina_adjunction",
    "piece_sum",
    "tjurina_positive",
    "milnor_order_bound",
    "milnor_tjurina_quarter",
];

pub const LOCAL_DIVISOR_CHECKS: [&str; 5] = [
    "divisor_split",
    "chi_nonnegative",
    "balanced_identity",
    "balanced_equivalence",
    "ratio_bound",
];

pub const GLOBAL_CHECKS: [&str; 7] = [
    "cerveau_linsneto",
    "soares",
    "global_tjurina",
    "global_tjurina_upper",
    "global_tjurina_lower",
    "gsv_sum",
    "ploski",
];

/// Local job with its sources parsed.
#[derive(Clone, Debug)]
pub struct LocalInput {
    pub p: Poly2,
    pub q: Poly2,
    pub f: Option<Poly2>,
    pub divisor: Vec<(Poly2, i64)>,
}

#[derive(Clone, Debug)]
pub struct GlobalInput {
    pub a: Poly3,
    pub b: Poly3,
    pub c: Poly3,
    pub curve: Poly3,
    pub points: Vec<ProjPoint>,
    pub irreducible: bool,
}

#[derive(Clone, Debug)]
pub enum Parsed {
    Local(LocalInput),
    Global(GlobalInput),
    Example { name: String, params: Vec<(String, Rat)> },
}

/// Rewrites the identifiers of `src` through `vars`, so that `vars[i]`
/// becomes the `i`-th standard variable.
fn rename(src: &str, vars: &[String], standard: &[&str]) -> String {
    let mut out = String::with_capacity(src.len());
    let mut chars = src.char_indices().peekable();
    while let Some((i, ch)) = chars.next() {
        if ch.is_ascii_alphabetic() || ch == '_' {
            let mut end = i + ch.len_utf8();
            while let Some(&(j, c)) = chars.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    end = j + c.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            let word = &src[i..end];
            match vars.iter().position(|v| v == word) {
                Some(k) => out.push_str(standard[k]),
                None => out.push_str(word),
            }
        } else {
            out.push(ch);
        }
    }
    out
}

pub fn parse_rat(field: &str, s: &str) -> Result<Rat, InputError> {
    Rat::from_str(s.trim()).map_err(|_| InputError::Value {
        field: field.to_string(),
        message: format!("`{s}` is not a rational number"),
    })
}

pub fn parse_point(field: &str, s: &str) -> Result<ProjPoint, InputError> {
    let body = s.trim().trim_start_matches('[').trim_end_matches(']');
    let parts: Vec<&str> = body.split([':', ',']).collect();
    if parts.len() != 3 {
        return Err(InputError::Value {
            field: field.to_string(),
            message: format!("`{s}` is not a point x:y:z"),
        });
    }
    let mut coords = Vec::with_capacity(3);
    for p in parts {
        coords.push(parse_rat(field, p)?);
    }
    let coords: [Rat; 3] = coords.try_into().expect("three coordinates");
    ProjPoint::new(coords).map_err(|e| InputError::Value {
        field: field.to_string(),
        message: e.to_string(),
    })
}

impl JobSpec {
    pub fn from_json(text: &str) -> Result<JobSpec, InputError> {
        serde_json::from_str(text).map_err(|e| InputError::Document(e.to_string()))
    }

    fn local_poly(&self, field: &str, src: &str) -> Result<Poly2, InputError> {
        let src = match &self.vars {
            Some(v) => rename(src, v, &["x", "y"]),
            None => src.to_string(),
        };
        parse_poly2(&src).map_err(|e| InputError::polynomial(field, &src, e))
    }

    fn global_poly(&self, field: &str, src: &str) -> Result<Poly3, InputError> {
        let src = match &self.vars {
            Some(v) => rename(src, v, &["x", "y", "z"]),
            None => src.to_string(),
        };
        parse_poly3(&src).map_err(|e| InputError::polynomial(field, &src, e))
    }

    fn required<'a>(&self, field: &str, v: &'a Option<String>) -> Result<&'a str, InputError> {
        v.as_deref().ok_or_else(|| InputError::Missing(field.to_string()))
    }

    fn check_names(&self, allowed: &[&str]) -> Result<(), InputError> {
        for c in &self.checks {
            if c != "all" && !allowed.contains(&c.as_str()) {
                return Err(InputError::UnknownCheck(c.clone()));
            }
        }
        Ok(())
    }

    /// Checks the job and parses its sources.
    pub fn validate(&self) -> Result<(JobKind, Parsed), InputError> {
        let kind = self.kind.ok_or_else(|| InputError::Missing("kind".into()))?;
        if let Some(v) = &self.vars {
            let want = if kind == JobKind::GlobalCheck { 3 } else { 2 };
            if v.len() != want {
                return Err(InputError::Value {
                    field: "vars".into(),
                    message: format!("expected {want} names, got {}", v.len()),
                });
            }
        }
        let parsed = match kind {
            JobKind::LocalInvariants | JobKind::LocalCheck => {
                let p = self.local_poly("P", self.required("P", &self.p)?)?;
                let q = self.local_poly("Q", self.required("Q", &self.q)?)?;
                let f = match &self.f {
                    Some(s) => Some(self.local_poly("f", s)?),
                    None => None,
                };
                let mut divisor = Vec::with_capacity(self.divisor.len());
                for (i, t) in self.divisor.iter().enumerate() {
                    divisor.push((self.local_poly(&format!("divisor[{i}].f"), &t.f)?, t.coeff));
                }
                if kind == JobKind::LocalCheck {
                    let mut allowed: Vec<&str> = LOCAL_CURVE_CHECKS.to_vec();
                    allowed.extend(LOCAL_DIVISOR_CHECKS);
                    self.check_names(&allowed)?;
                    if f.is_none() && divisor.is_empty() {
                        return Err(InputError::Missing("f or divisor".into()));
                    }
                }
                Parsed::Local(LocalInput { p, q, f, divisor })
            }
            JobKind::GlobalCheck => {
                self.check_names(&GLOBAL_CHECKS)?;
                let a = self.global_poly("A", self.required("A", &self.a)?)?;
                let b = self.global_poly("B", self.required("B", &self.b)?)?;
                let c = self.global_poly("C", self.required("C", &self.c)?)?;
                let curve = self.global_poly("curve", self.required("curve", &self.curve)?)?;
                if self.points.is_empty() {
                    return Err(InputError::Missing("points".into()));
                }
                let points = self
                    .points
                    .iter()
                    .enumerate()
                    .map(|(i, s)| parse_point(&format!("points[{i}]"), s))
                    .collect::<Result<Vec<_>, _>>()?;
                Parsed::Global(GlobalInput {
                    a,
                    b,
                    c,
                    curve,
                    points,
                    irreducible: self.irreducible,
                })
            }
            JobKind::Example => {
                let name = self.required("example", &self.example)?.to_string();
                let params = self
                    .params
                    .iter()
                    .map(|(k, v)| Ok((k.clone(), parse_rat(k, v)?)))
                    .collect::<Result<Vec<_>, InputError>>()?;
                Parsed::Example { name, params }
            }
        };
        Ok((kind, parsed))
    }
}
