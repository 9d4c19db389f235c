//! Executing a job into a report.

use std::time::Instant;

use folinv::exactalg::Poly2;
use folinv::folocal::{
    curve_checks, divisor_checks, divisor_profile, profile, IdentityVerdict, LocalFoliation, SepDivisor,
};
use folinv::gallery::{run_example, ExampleJob};
use folinv::localring::{colength_of, Colength};
use folinv::projplane::{analyze, global_checks, ProjectiveFoliation};
use folinv::{Error, Limits};

use crate::job::{GlobalInput, JobKind, JobSpec, LocalInput, Parsed};
use crate::report::{Certificates, ErrorDoc, ErrorKind, ReportDoc};
use crate::InputError;

fn error_doc(e: &Error) -> ErrorDoc {
    let kind = if e.is_limit() {
        ErrorKind::Limit
    } else if matches!(e, Error::Inconsistent(_)) {
        ErrorKind::Internal
    } else {
        ErrorKind::Input
    };
    ErrorDoc {
        kind,
        field: None,
        message: e.to_string(),
    }
}

pub(crate) fn input_error_doc(e: &InputError) -> ErrorDoc {
    ErrorDoc {
        kind: ErrorKind::Input,
        field: e.field().map(str::to_string),
        message: e.diagnostic(),
    }
}

fn wanted(checks: &[String], v: &IdentityVerdict) -> bool {
    checks.is_empty() || checks.iter().any(|c| c == "all" || *c == v.name)
}

fn push_verdicts(doc: &mut ReportDoc, checks: &[String], vs: &[IdentityVerdict]) {
    for v in vs.iter().filter(|v| wanted(checks, v)) {
        doc.verdict(v);
    }
}

/// Colength of `gens` with its certificate degree.
fn certified(doc: &mut ReportDoc, name: &str, gens: &[Poly2], limits: &Limits) -> folinv::Result<u64> {
    match colength_of(gens, limits)? {
        Colength::Finite {
            value,
            certificate_degree,
        } => {
            doc.certificate(&format!("{name}_degree"), certificate_degree as i64);
            Ok(value)
        }
        Colength::Infinite { .. } => Err(Error::NonIsolated),
    }
}

fn local(doc: &mut ReportDoc, kind: JobKind, input: &LocalInput, checks: &[String], limits: &Limits) -> folinv::Result<()> {
    doc.input("P", &input.p);
    doc.input("Q", &input.q);
    if let Some(f) = &input.f {
        doc.input("f", f);
    }
    for (g, c) in &input.divisor {
        doc.input("divisor", format!("{c} * ({g})"));
    }
    let fol = LocalFoliation::new(input.p.clone(), input.q.clone())?;
    let mu = certified(doc, "milnor_foliation", &[fol.p().clone(), fol.q().clone()], limits)?;
    doc.invariant("milnor_foliation", mu as i64);
    let check = kind == JobKind::LocalCheck;

    if let Some(f) = &input.f {
        let pr = profile(&fol, f, limits)?;
        let c = &pr.curve;
        doc.invariant("milnor_curve", c.milnor as i64);
        doc.invariant("tjurina_curve", c.tjurina as i64);
        doc.invariant("order_curve", c.order as i64);
        doc.invariant("branches", c.branch_count() as i64);
        doc.invariant("pieces", c.pieces.len() as i64);
        doc.invariant("piece_intersections", c.pair_sum as i64);
        doc.invariant("theta", c.theta());
        let r = c.branch_count() as i64;
        if (c.milnor as i64 + r - 1) % 2 == 0 {
            doc.invariant("delta", (c.milnor as i64 + r - 1) / 2);
        }
        for (i, piece) in c.pieces.iter().enumerate() {
            doc.invariant(&format!("piece{}_size", i + 1), piece.size as i64);
            if let Some(pf) = &piece.foliation {
                doc.invariant(&format!("piece{}_branch_mult", i + 1), pf.branch_mult as i64);
            }
        }
        doc.invariant("mult_curve", pr.mult);
        doc.invariant("tjurina_foliation_curve", pr.tjurina as i64);
        doc.invariant("gsv", pr.gsv());
        if check {
            push_verdicts(doc, checks, &curve_checks(&pr));
        }
    }

    if !input.divisor.is_empty() {
        let d = SepDivisor::new(input.divisor.clone())?;
        let dp = divisor_profile(&fol, &d, limits)?;
        doc.invariant("mult_divisor", dp.mult);
        doc.invariant("mult_positive", dp.mult_positive);
        doc.invariant("mult_negative", dp.mult_negative);
        doc.invariant("chi", dp.chi);
        if let Some((mb, tb, tfb)) = dp.positive {
            doc.invariant("milnor_b0", mb as i64);
            doc.invariant("tjurina_b0", tb as i64);
            doc.invariant("tjurina_foliation_b0", tfb as i64);
        }
        if check {
            push_verdicts(doc, checks, &divisor_checks(&dp));
        }
    }
    Ok(())
}

fn global(doc: &mut ReportDoc, input: &GlobalInput, checks: &[String], limits: &Limits) -> folinv::Result<()> {
    doc.input("A", &input.a);
    doc.input("B", &input.b);
    doc.input("C", &input.c);
    doc.input("curve", &input.curve);
    for p in &input.points {
        doc.input("point", p);
    }
    let (pf, common) = ProjectiveFoliation::saturated(input.a.clone(), input.b.clone(), input.c.clone())?;
    if !common.is_constant() {
        doc.input("removed_common_factor", &common);
    }
    let r = analyze(&pf, &input.curve, &input.points, input.irreducible, limits)?;
    doc.invariant("degree", pf.degree() as i64);
    doc.invariant("curve_degree", r.curve_degree as i64);
    doc.invariant("milnor_total", r.certification.total as i64);
    doc.invariant("milnor_expected", r.certification.expected as i64);
    for rec in &r.points {
        let tag = rec.point.to_string();
        doc.invariant(&format!("{tag}.milnor_foliation"), rec.milnor_foliation as i64);
        if let Some(c) = &rec.on_curve {
            doc.invariant(&format!("{tag}.milnor_curve"), c.milnor as i64);
            doc.invariant(&format!("{tag}.tjurina_curve"), c.tjurina as i64);
            doc.invariant(&format!("{tag}.branches"), c.branches as i64);
            doc.invariant(&format!("{tag}.order"), c.order as i64);
            doc.invariant(&format!("{tag}.branch_mult_sum"), c.branch_mult_sum);
            doc.invariant(&format!("{tag}.tjurina_foliation"), c.tjurina_foliation as i64);
            doc.invariant(&format!("{tag}.gsv"), c.gsv);
        }
    }
    doc.invariant("branch_mult_sum", r.sum_branch_mult());
    doc.invariant("gsv_sum", r.sum_gsv());
    doc.invariant("tjurina_foliation", r.tjurina_foliation());
    if let Some(irr) = r.irreducible {
        doc.invariant("irreducible_certified", irr as i64);
    }
    if let Some(g) = r.genus {
        doc.invariant("genus", g);
    }
    push_verdicts(doc, checks, &global_checks(&r));
    Ok(())
}

fn example(doc: &mut ReportDoc, name: &str, params: &[(String, folinv::exactalg::Rat)], checks: &[String], limits: &Limits) -> folinv::Result<()> {
    doc.input("example", name);
    for (k, v) in params {
        doc.input(k, folinv::exactalg::rat::render(v));
    }
    let job = ExampleJob::from_name(name, params)?;
    let out = run_example(&job, limits)?;
    for (k, v) in &out.invariants {
        doc.invariant(k, v.clone());
    }
    push_verdicts(doc, checks, &out.verdicts);
    Ok(())
}

/// Runs `job` with its own config section.
pub fn run(job: &JobSpec) -> ReportDoc {
    run_with(job, &job.config.limits())
}

/// Runs `job` under `limits`.
pub fn run_with(job: &JobSpec, limits: &Limits) -> ReportDoc {
    let start = Instant::now();
    let command = job.kind.map_or("unknown", |k| k.command());
    let mut doc = ReportDoc::new(
        command,
        Certificates {
            degree_cap: limits.degree_cap,
            precision_cap: limits.precision_cap,
            seed: limits.seed,
            details: Vec::new(),
        },
    );
    match job.validate() {
        Err(e) => doc.errors.push(input_error_doc(&e)),
        Ok((kind, parsed)) => {
            let r = match &parsed {
                Parsed::Local(input) => local(&mut doc, kind, input, &job.checks, limits),
                Parsed::Global(input) => global(&mut doc, input, &job.checks, limits),
                Parsed::Example { name, params } => example(&mut doc, name, params, &job.checks, limits),
            };
            if let Err(e) = r {
                doc.errors.push(error_doc(&e));
            }
            if !job.checks.is_empty() && !job.checks.iter().any(|c| c == "all") && doc.verdicts.is_empty() && doc.errors.is_empty() {
                doc.errors.push(ErrorDoc {
                    kind: ErrorKind::Input,
                    field: Some("checks".into()),
                    message: "none of the requested checks applies to this input".into(),
                });
            }
        }
    }
    doc.settle();
    doc.timing.elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    doc
}

/// Value of an integer invariant, for tests and scripts.
pub fn integer(doc: &ReportDoc, name: &str) -> Option<i64> {
    doc.get(name).filter(|r| r.is_integer()).and_then(|r| r.to_integer().try_into().ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::{EXIT_INPUT, EXIT_OK};
    use crate::DivisorTerm;
    use folinv::catalog::samples;
    use folinv::folocal::curve_checks as core_checks;

    fn suzuki_job(kind: JobKind) -> JobSpec {
        JobSpec {
            kind: Some(kind),
            p: Some("2*y^2 + x^3".into()),
            q: Some("-2*x*y".into()),
            f: Some("x*(y^2 - x^3)".into()),
            divisor: vec![
                DivisorTerm { f: "x".into(), coeff: 1 },
                DivisorTerm { f: "y^2 - x^3".into(), coeff: 1 },
                DivisorTerm { f: "y^2 - x^2 - x^3".into(), coeff: 1 },
                DivisorTerm { f: "y^2 - 2*x^2 - x^3".into(), coeff: -1 },
            ],
            ..Default::default()
        }
    }

    #[test]
    fn local_numbers() {
        let doc = run(&suzuki_job(JobKind::LocalInvariants));
        assert_eq!(doc.exit_code, EXIT_OK, "{}", doc.to_text());
        assert_eq!(integer(&doc, "milnor_foliation"), Some(5));
        assert_eq!(integer(&doc, "milnor_b0"), Some(17));
        assert_eq!(integer(&doc, "mult_negative"), Some(3));
        assert_eq!(integer(&doc, "chi"), Some(0));
        assert!(doc.verdicts.is_empty());
    }

    #[test]
    fn local_checks_filter() {
        let mut job = suzuki_job(JobKind::LocalCheck);
        job.checks = vec!["ratio_bound".into()];
        let doc = run(&job);
        assert_eq!(doc.verdicts.len(), 1);
        assert_eq!(doc.exit_code, EXIT_OK);
        job.checks = vec!["all".into()];
        let doc = run(&job);
        assert!(doc.verdicts.len() > 10);
    }

    #[test]
    fn curve_check_names_are_listed() {
        let l = Limits::default();
        let s = &samples(5, 1, &l)[0];
        let pr = profile(&s.foliation, &s.curve.f, &l).unwrap();
        let names: Vec<String> = core_checks(&pr).into_iter().map(|v| v.name).collect();
        assert_eq!(names, crate::job::LOCAL_CURVE_CHECKS.map(String::from).to_vec());
    }

    #[test]
    fn bad_polynomial() {
        let job = JobSpec {
            kind: Some(JobKind::LocalInvariants),
            p: Some("x^^2".into()),
            q: Some("y".into()),
            ..Default::default()
        };
        let doc = run(&job);
        assert_eq!(doc.exit_code, EXIT_INPUT);
        assert_eq!(doc.errors[0].field.as_deref(), Some("P"));
        assert!(doc.errors[0].message.contains("parse error"));
    }

    #[test]
    fn engine_errors_are_input_errors() {
        let job = JobSpec {
            kind: Some(JobKind::LocalInvariants),
            p: Some("x".into()),
            q: Some("y".into()),
            f: Some("x + y^2".into()),
            ..Default::default()
        };
        let doc = run(&job);
        assert_eq!(doc.exit_code, EXIT_INPUT, "{}", doc.to_text());
    }
}
