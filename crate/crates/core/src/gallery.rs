//! Named worked examples with their published values.

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::exactalg::parse::{parse_poly2, parse_poly3};
use crate::exactalg::rat::{int, rat, render};
use crate::exactalg::{Poly2, Poly3, Rat};
use crate::folocal::{
    curve_checks, divisor_checks, divisor_profile, profile, theta_residual, IdentityVerdict, LocalFoliation,
    Relation, SepDivisor,
};
use crate::localring::{milnor_foliation, tjurina_foliation};
use crate::projplane::{
    alcantara_family, analyze, global_checks, verify_alcantara, ProjPoint, ProjectiveFoliation,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExampleJob {
    Suzuki,
    Fk { k: u32, lambda: Rat },
    Alcantara { n: u32, zeta: Rat, lambda2: Rat },
    CuspidalCubic,
    Pencil,
}

impl ExampleJob {
    /// Looks up `name` with `key=value` parameters (`k`, `lambda`, `n`,
    /// `zeta`, `lambda2`).
    pub fn from_name(name: &str, params: &[(String, Rat)]) -> Result<Self> {
        let get = |key: &str, default: Rat| -> Rat {
            params.iter().find(|(k, _)| k == key).map_or(default, |(_, v)| v.clone())
        };
        let whole = |key: &str, default: i64, min: i64| -> Result<u32> {
            let v = get(key, int(default));
            if !v.is_integer() || v < int(min) || v > int(64) {
                return Err(Error::InvalidArgument(format!("{key} must be an integer in [{min}, 64]")));
            }
            Ok(v.to_integer().try_into().unwrap())
        };
        let known = |keys: &[&str]| -> Result<()> {
            match params.iter().find(|(k, _)| !keys.contains(&k.as_str())) {
                Some((k, _)) => Err(Error::InvalidArgument(format!("{name} has no parameter {k}"))),
                None => Ok(()),
            }
        };
        match name {
            "suzuki" => known(&[]).map(|_| ExampleJob::Suzuki),
            "fk" => {
                known(&["k", "lambda"])?;
                Ok(ExampleJob::Fk {
                    k: whole("k", 3, 3)?,
                    lambda: get("lambda", int(1)),
                })
            }
            "alcantara" => {
                known(&["n", "zeta", "lambda2"])?;
                Ok(ExampleJob::Alcantara {
                    n: whole("n", 2, 2)?,
                    zeta: get("zeta", int(1)),
                    lambda2: get("lambda2", int(1)),
                })
            }
            "cuspidal-cubic" => known(&[]).map(|_| ExampleJob::CuspidalCubic),
            "pencil" => known(&[]).map(|_| ExampleJob::Pencil),
            _ => Err(Error::InvalidArgument(format!("unknown example {name}"))),
        }
    }
}

/// Published values for the job, as `(invariant, value)`.
pub fn expected_values(job: &ExampleJob) -> Vec<(&'static str, Rat)> {
    match job {
        ExampleJob::Suzuki => vec![
            ("milnor_foliation", int(5)),
            ("milnor_b0", int(17)),
            ("mult_binf", int(3)),
            ("tjurina_foliation_b0", int(5)),
            ("chi", int(0)),
            ("ratio", rat(5, 3)),
        ],
        ExampleJob::Fk { k, .. } => {
            let k = *k as i64;
            vec![
                ("milnor_foliation", int(k * (2 * k - 1))),
                ("tjurina_foliation_b1", int(k)),
                ("tjurina_foliation_b2", int(2 * k - 1)),
                ("tjurina_foliation_b", int(3 * k - 2)),
                ("theta", int(0)),
                ("chi", int(2 * (k - 1) * (k - 1))),
                ("ratio", rat(k * (2 * k - 1), 3 * k - 2 + 2 * (k - 1) * (k - 1))),
            ]
        }
        ExampleJob::Alcantara { n, .. } => {
            let n = *n as i64;
            vec![
                ("degree", int(n)),
                ("milnor_foliation", int(n * n + n + 1)),
                ("milnor_curve", int(n * n + n + 1)),
                ("gsv_sum", int(0)),
            ]
        }
        ExampleJob::CuspidalCubic => vec![
            ("milnor_total", int(7)),
            ("tjurina_foliation_curve", int(5)),
            ("genus", int(0)),
        ],
        ExampleJob::Pencil => vec![("pencil_milnor", int(1)), ("corners_gsv_sum", int(2))],
    }
}

/// One invocation of an example with its published values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleCase {
    /// As typed after `example run`, e.g. `fk --k 4`.
    pub invocation: String,
    pub expected: Vec<(String, Rat)>,
}

/// A catalog entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleInfo {
    pub name: &'static str,
    pub summary: &'static str,
    pub parameters: &'static str,
    pub cases: Vec<ExampleCase>,
}

fn case(name: &str, params: &[(&str, i64)]) -> ExampleCase {
    let owned: Vec<(String, Rat)> = params.iter().map(|(k, v)| (k.to_string(), int(*v))).collect();
    let job = ExampleJob::from_name(name, &owned).expect("built-in example");
    let mut invocation = name.to_string();
    for (k, v) in params {
        invocation.push_str(&format!(" --{k} {v}"));
    }
    ExampleCase {
        invocation,
        expected: expected_values(&job).into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
    }
}

pub fn list_examples() -> Vec<ExampleInfo> {
    vec![
        ExampleInfo {
            name: "suzuki",
            summary: "Suzuki's dicritical germ (2y^2 + x^3) dx - 2xy dy, of second type",
            parameters: "",
            cases: vec![case("suzuki", &[])],
        },
        ExampleInfo {
            name: "fk",
            summary: "the family F_k, dicritical and not of second type, with B = xy",
            parameters: "k >= 3 (default 3), lambda (default 1)",
            cases: (3..=6).map(|k| case("fk", &[("k", k)])).collect(),
        },
        ExampleInfo {
            name: "alcantara",
            summary: "logarithmic foliations of degree n on the plane with one singular point",
            parameters: "n >= 2 (default 2), zeta (default 1), lambda2 (default 1)",
            cases: (2..=5).map(|n| case("alcantara", &[("n", n)])).collect(),
        },
        ExampleInfo {
            name: "cuspidal-cubic",
            summary: "3G dz - z dG for the cuspidal cubic G = y^2 z - x^3, degree 2",
            parameters: "",
            cases: vec![case("cuspidal-cubic", &[])],
        },
        ExampleInfo {
            name: "pencil",
            summary: "the pencil y dx - x dy and the degree one form yz dx + xz dy - 2xy dz",
            parameters: "",
            cases: vec![case("pencil", &[])],
        },
    ]
}

/// Computed numbers and verdicts of one example.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleOutcome {
    pub invariants: Vec<(String, Rat)>,
    pub verdicts: Vec<IdentityVerdict>,
}

impl ExampleOutcome {
    fn new() -> Self {
        ExampleOutcome {
            invariants: Vec::new(),
            verdicts: Vec::new(),
        }
    }

    fn put(&mut self, name: &str, v: impl Into<Rat>) {
        self.invariants.push((name.to_string(), v.into()));
    }

    fn get(&self, name: &str) -> Option<&Rat> {
        self.invariants.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }

    /// Adds a verdict comparing the stored invariant with the expected value.
    fn expect(&mut self, name: &str, expected: Rat) {
        let got = self.get(name).cloned().unwrap_or_else(|| int(-1));
        self.verdicts.push(IdentityVerdict::evaluate(&format!("expected_{name}"), got, expected, Relation::Eq));
    }

    fn prefixed(&mut self, prefix: &str, vs: Vec<IdentityVerdict>) {
        self.verdicts.extend(vs.into_iter().map(|mut v| {
            v.name = format!("{prefix}{}", v.name);
            v
        }));
    }

    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| !v.failed())
    }
}

fn p2(s: &str) -> Poly2 {
    parse_poly2(s).expect("built-in polynomial")
}

fn p3(s: &str) -> Poly3 {
    parse_poly3(s).expect("built-in polynomial")
}

pub fn suzuki_foliation() -> LocalFoliation {
    LocalFoliation::new(p2("2*y^2 + x^3"), p2("-2*x*y")).expect("saturated")
}

/// `B_0`, its three curves through the origin, and `B_inf`.
pub fn suzuki_divisor() -> SepDivisor {
    SepDivisor::new(vec![
        (p2("x"), 1),
        (p2("y^2 - x^3"), 1),
        (p2("y^2 - x^2 - x^3"), 1),
        (p2("y^2 - 2*x^2 - x^3"), -1),
    ])
    .expect("valid divisor")
}

pub fn fk_foliation(k: u32, lambda: &Rat) -> Result<LocalFoliation> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!("k = {k}, need k >= 3")));
    }
    let l1 = lambda + int(1);
    let m = |c: Rat, i: u32, j: u32| Poly2::monomial(c, [i, j]);
    let p = &(&m(int(2), 2 * k - 2, 1) + &m(&l1 * int(2), 2, k - 1)) - &m(int(1), 0, k);
    let q = &(&m(int(1), 1, k - 1) - &m(l1, 3, k - 2)) - &m(int(1), 2 * k - 1, 0);
    LocalFoliation::new(p, q)
}

fn run_suzuki(limits: &Limits) -> Result<ExampleOutcome> {
    let fol = suzuki_foliation();
    let b = suzuki_divisor();
    let dp = divisor_profile(&fol, &b, limits)?;
    let (mb, tb, tfb) = dp.positive.expect("B_0 is nonempty");
    let mut out = ExampleOutcome::new();
    out.put("milnor_foliation", int(dp.milnor as i64));
    out.put("milnor_b0", int(mb as i64));
    out.put("tjurina_b0", int(tb as i64));
    out.put("tjurina_foliation_b0", int(tfb as i64));
    out.put("mult_b0", int(dp.mult_positive));
    out.put("mult_binf", int(dp.mult_negative));
    out.put("mult_b", int(dp.mult));
    out.put("chi", int(dp.chi));
    let checks = divisor_checks(&dp);
    let ratio = checks.iter().find(|v| v.name == "ratio_bound").unwrap().clone();
    out.put("ratio", ratio.lhs.clone());
    let pr = profile(&fol, &b.positive().support(), limits)?;
    out.put("gsv_b0", int(pr.gsv()));
    out.prefixed("b0.", curve_checks(&pr));
    out.verdicts.extend(checks);
    let na = ratio.status == crate::folocal::Status::NotApplicable;
    out.verdicts.push(IdentityVerdict::ints("expected_ratio_not_applicable", na as i64, 1, Relation::Eq));
    Ok(out)
}

fn run_fk(k: u32, lambda: &Rat, limits: &Limits) -> Result<ExampleOutcome> {
    let fol = fk_foliation(k, lambda)?;
    let b = SepDivisor::of_curve(p2("x*y"))?;
    let dp = divisor_profile(&fol, &b, limits)?;
    let pr = profile(&fol, &p2("x*y"), limits)?;
    let mut out = ExampleOutcome::new();
    out.put("milnor_foliation", int(dp.milnor as i64));
    out.put("tjurina_foliation_b1", int(tjurina_foliation(&fol, &p2("x"), limits)? as i64));
    out.put("tjurina_foliation_b2", int(tjurina_foliation(&fol, &p2("y"), limits)? as i64));
    out.put("tjurina_foliation_b", int(pr.tjurina as i64));
    out.put("theta", int(theta_residual(&p2("x*y"), limits)?));
    out.put("mult_b", int(dp.mult));
    out.put("chi", int(dp.chi));
    out.put("gsv_b", int(pr.gsv()));
    let checks = divisor_checks(&dp);
    let ratio = checks.iter().find(|v| v.name == "ratio_bound").unwrap().lhs.clone();
    out.put("ratio", ratio);
    out.prefixed("b.", curve_checks(&pr));
    out.verdicts.extend(checks);
    Ok(out)
}

fn run_alcantara(n: u32, zeta: &Rat, lambda2: &Rat, limits: &Limits) -> Result<ExampleOutcome> {
    let ex = alcantara_family(n, zeta.clone(), lambda2.clone())?;
    let mut out = ExampleOutcome::new();
    let p = ProjPoint::from_ints(0, 0, 1)?;
    let full = analyze(&ex.foliation, &ex.curve, std::slice::from_ref(&p), false, limits)?;
    let at = full.points[0].on_curve.clone().expect("the curve passes through [0:0:1]");
    out.put("degree", int(ex.foliation.degree() as i64));
    out.put("milnor_foliation", int(full.points[0].milnor_foliation as i64));
    out.put("milnor_curve", int(at.milnor as i64));
    out.put("tjurina_curve", int(at.tjurina as i64));
    out.put("gsv_sum", int(full.sum_gsv()));
    out.prefixed("family.", verify_alcantara(&ex, limits)?);
    let g = analyze(&ex.foliation, &ex.component, std::slice::from_ref(&p), false, limits)?;
    out.put("component_branch_mult", int(g.sum_branch_mult()));
    out.prefixed("component.", global_checks(&g));
    out.prefixed("curve.", global_checks(&full));
    Ok(out)
}

pub fn cubic_foliation() -> ProjectiveFoliation {
    ProjectiveFoliation::new(p3("3*x^2*z"), p3("-2*y*z^2"), p3("2*y^2*z - 3*x^3")).expect("valid form")
}

fn run_cubic(limits: &Limits) -> Result<ExampleOutcome> {
    let pf = cubic_foliation();
    let pts = [ProjPoint::from_ints(0, 0, 1)?, ProjPoint::from_ints(0, 1, 0)?];
    let r = analyze(&pf, &p3("y^2*z - x^3"), &pts, false, limits)?;
    let mut out = ExampleOutcome::new();
    out.put("degree", int(pf.degree() as i64));
    out.put("milnor_total", int(r.certification.total as i64));
    out.put("tjurina_foliation_curve", int(r.tjurina_foliation()));
    out.put("genus", int(r.genus.unwrap_or(-1)));
    out.put("branch_mult_sum", int(r.sum_branch_mult()));
    out.prefixed("cubic.", global_checks(&r));
    let line = analyze(&pf, &p3("z"), &pts, false, limits)?;
    out.put("line_branch_mult_sum", int(line.sum_branch_mult()));
    out.prefixed("line_z.", global_checks(&line));
    Ok(out)
}

pub fn pencil_foliation() -> ProjectiveFoliation {
    ProjectiveFoliation::new(p3("y"), p3("-x"), p3("0")).expect("valid form")
}

pub fn corners_foliation() -> ProjectiveFoliation {
    ProjectiveFoliation::new(p3("y*z"), p3("x*z"), p3("-2*x*y")).expect("valid form")
}

fn run_pencil(limits: &Limits) -> Result<ExampleOutcome> {
    let mut out = ExampleOutcome::new();
    let o = ProjPoint::from_ints(0, 0, 1)?;
    let r = analyze(&pencil_foliation(), &p3("y"), std::slice::from_ref(&o), false, limits)?;
    out.put("pencil_milnor", int(r.certification.total as i64));
    out.prefixed("pencil_y.", global_checks(&r));
    let corners = [o, ProjPoint::from_ints(1, 0, 0)?, ProjPoint::from_ints(0, 1, 0)?];
    let pf = corners_foliation();
    for (tag, c) in [("corners_y.", "y"), ("corners_xy.", "x*y"), ("corners_xyz.", "x*y*z")] {
        let r = analyze(&pf, &p3(c), &corners, false, limits)?;
        if c == "x*y" {
            out.put("corners_gsv_sum", int(r.sum_gsv()));
        }
        out.prefixed(tag, global_checks(&r));
    }
    out.put("corners_milnor", int(milnor_foliation(&crate::projplane::chart(&pf, 2, &corners[0])?, limits)? as i64));
    Ok(out)
}

pub fn run_example(job: &ExampleJob, limits: &Limits) -> Result<ExampleOutcome> {
    let mut out = match job {
        ExampleJob::Suzuki => run_suzuki(limits),
        ExampleJob::Fk { k, lambda } => run_fk(*k, lambda, limits),
        ExampleJob::Alcantara { n, zeta, lambda2 } => run_alcantara(*n, zeta, lambda2, limits),
        ExampleJob::CuspidalCubic => run_cubic(limits),
        ExampleJob::Pencil => run_pencil(limits),
    }?;
    for (name, v) in expected_values(job) {
        out.expect(name, v);
    }
    Ok(out)
}

/// `name: value` lines, for logs.
pub fn render_invariants(o: &ExampleOutcome) -> Vec<String> {
    o.invariants.iter().map(|(k, v)| format!("{k} = {}", render(v))).collect()
}
