//! Acceptance suite. Prints one `PASS`/`FAIL` line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::Instant;

use folcli::report::VerdictStatus;
use folcli::{run, JobKind, JobSpec, ReportDoc};
use folinv::catalog::{pairs, samples};
use folinv::exactalg::parse::parse_poly2;
use folinv::exactalg::rat::{int, rat};
use folinv::exactalg::{Poly2, Rat};
use folinv::folocal::{curve_checks, profile};
use folinv::localring::{colength_of, generic_shears, milnor_curve, resultant_order, tjurina_curve, Colength};
use folinv::projplane::alcantara_family;
use folinv::puiseux::{gap_count, order_along, with_branches, Order};
use folinv::Limits;

type Outcome = Result<String, String>;

fn example(name: &str, params: &[(&str, &str)]) -> JobSpec {
    JobSpec {
        kind: Some(JobKind::Example),
        example: Some(name.to_string()),
        params: params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect::<BTreeMap<_, _>>(),
        ..JobSpec::default()
    }
}

fn global(a: &str, b: &str, c: &str, curve: &str, points: &[&str]) -> JobSpec {
    JobSpec {
        kind: Some(JobKind::GlobalCheck),
        a: Some(a.to_string()),
        b: Some(b.to_string()),
        c: Some(c.to_string()),
        curve: Some(curve.to_string()),
        points: points.iter().map(|p| p.to_string()).collect(),
        checks: vec!["all".to_string()],
        ..JobSpec::default()
    }
}

fn value(doc: &ReportDoc, name: &str) -> Result<Rat, String> {
    doc.get(name).cloned().ok_or_else(|| format!("{}: no invariant {name}", doc.command))
}

fn expect(doc: &ReportDoc, name: &str, want: Rat, tag: &str) -> Result<(), String> {
    let got = value(doc, name)?;
    if got == want {
        Ok(())
    } else {
        Err(format!("{tag}: {name} = {got}, expected {want}"))
    }
}

fn status(doc: &ReportDoc, name: &str) -> Result<VerdictStatus, String> {
    doc.verdict_named(name)
        .map(|v| v.status)
        .ok_or_else(|| format!("no verdict {name}"))
}

fn no_failures(doc: &ReportDoc, tag: &str) -> Result<(), String> {
    if !doc.errors.is_empty() {
        return Err(format!("{tag}: {}", doc.errors[0].message));
    }
    match doc.verdicts.iter().find(|v| v.status == VerdictStatus::Fails) {
        Some(v) => Err(format!("{tag}: {} fails ({} {} {})", v.name, v.lhs, v.relation, v.rhs)),
        None if doc.exit_code != 0 => Err(format!("{tag}: exit code {}", doc.exit_code)),
        None => Ok(()),
    }
}

fn holds_all(doc: &ReportDoc, names: &[String], tag: &str) -> Result<(), String> {
    for n in names {
        let s = status(doc, n).map_err(|e| format!("{tag}: {e}"))?;
        if s != VerdictStatus::Holds {
            return Err(format!("{tag}: {n} is {s:?}"));
        }
    }
    Ok(())
}

const GLOBAL: [&str; 7] = [
    "cerveau_linsneto",
    "soares",
    "global_tjurina",
    "global_tjurina_upper",
    "global_tjurina_lower",
    "gsv_sum",
    "ploski",
];

fn prefixed(prefix: &str, names: &[&str]) -> Vec<String> {
    names.iter().map(|n| format!("{prefix}{n}")).collect()
}

fn suzuki() -> Outcome {
    let doc = run(&example("suzuki", &[]));
    for (name, v) in [
        ("milnor_foliation", 5),
        ("milnor_b0", 17),
        ("mult_binf", 3),
        ("tjurina_foliation_b0", 5),
        ("chi", 0),
    ] {
        expect(&doc, name, int(v), "suzuki")?;
    }
    expect(&doc, "ratio", rat(5, 3), "suzuki")?;
    let r = doc.verdict_named("ratio_bound").ok_or("no ratio verdict")?;
    if r.status != VerdictStatus::NotApplicable || r.lhs.0 != rat(5, 3) {
        return Err(format!("ratio verdict {:?} with lhs {}", r.status, r.lhs));
    }
    no_failures(&doc, "suzuki")?;
    Ok("mu 5, mu(B0) 17, mu(F,Binf) 3, tau(F,B0) 5, chi 0, ratio 5/3 not applicable".into())
}

fn fk_suite() -> Outcome {
    for k in 3..=6i64 {
        let doc = run(&example("fk", &[("k", &k.to_string()), ("lambda", "1")]));
        let tag = format!("k = {k}");
        let chi = 2 * (k - 1) * (k - 1);
        let mu = k * (2 * k - 1);
        for (name, v) in [
            ("tjurina_foliation_b1", k),
            ("tjurina_foliation_b2", 2 * k - 1),
            ("tjurina_foliation_b", 3 * k - 2),
            ("theta", 0),
            ("milnor_foliation", mu),
            ("chi", chi),
        ] {
            expect(&doc, name, int(v), &tag)?;
        }
        let ratio = rat(mu, 3 * k - 2 + chi);
        expect(&doc, "ratio", ratio.clone(), &tag)?;
        if ratio >= rat(4, 3) {
            return Err(format!("{tag}: ratio {ratio} not below 4/3"));
        }
        no_failures(&doc, &tag)?;
    }
    Ok("k = 3..6: tau(F,B1) = k, tau(F,B2) = 2k-1, tau(F,B) = 3k-2, theta 0, chi 2(k-1)^2, ratio < 4/3".into())
}

fn alcantara_suite() -> Outcome {
    let props = [
        "euler_terms",
        "degree",
        "curve_invariant",
        "logarithmic_form",
        "singular_set_complete",
        "milnor_foliation",
        "milnor_curve",
        "tjurina_curve",
        "non_dicritical",
        "gsv_sum",
    ];
    let mut runs = 0;
    for n in 2..=5i64 {
        for (zeta, l2) in [("1", "1"), ("2", "5")] {
            let doc = run(&example("alcantara", &[("n", &n.to_string()), ("zeta", zeta), ("lambda2", l2)]));
            let tag = format!("n = {n}, zeta = {zeta}, lambda2 = {l2}");
            expect(&doc, "degree", int(n), &tag)?;
            expect(&doc, "milnor_foliation", int(n * n + n + 1), &tag)?;
            expect(&doc, "milnor_curve", int(n * n + n + 1), &tag)?;
            expect(&doc, "tjurina_curve", int(n * n + n + 1), &tag)?;
            expect(&doc, "gsv_sum", int(0), &tag)?;
            holds_all(&doc, &prefixed("family.", &props), &tag)?;
            no_failures(&doc, &tag)?;
            runs += 1;
        }
    }
    Ok(format!("{runs} members: Euler relation, degree, invariance, mu = tau = n^2+n+1, unique singularity, non-dicritical, GSV sum 0"))
}

fn identity_suite() -> Outcome {
    let limits = Limits::default();
    let all = samples(2024, 200, &limits);
    let mut verdicts = 0;
    let mut strict = 0;
    for s in &all {
        let pr = profile(&s.foliation, &s.curve.f, &limits).map_err(|e| format!("{s}: {e}"))?;
        let singular = milnor_curve(&s.curve.f, &limits).map_err(|e| format!("{s}: {e}"))? > 0;
        for v in curve_checks(&pr) {
            if v.failed() {
                return Err(format!("{s}: {v}"));
            }
            if v.name == "gsv_tjurina_bound" && singular {
                if !v.holds() {
                    return Err(format!("{s}: strict bound not evaluated on a singular curve: {v}"));
                }
                strict += 1;
            }
            verdicts += 1;
        }
    }
    Ok(format!("{} samples, {verdicts} verdicts, {strict} strict bounds on singular curves, 0 failures", all.len()))
}

fn branch_sum(f: &Poly2, g: &Poly2, limits: &Limits) -> folinv::Result<(u64, bool)> {
    with_branches(f, limits, |bs| {
        let mut total = 0;
        for b in bs {
            match order_along(b, g, limits)? {
                Order::Finite(o) => total += b.bundle_size as u64 * o,
                Order::Infinite => return Err(folinv::Error::CommonComponent(g.to_string())),
            }
        }
        Ok((total, bs.iter().any(|b| b.is_bundle())))
    })
}

fn oracle_suite() -> Outcome {
    let limits = Limits::default();
    let shears = generic_shears(limits.seed, 6);
    let mut bundles = 0;
    let mut largest = 0;
    for (i, (f, g)) in pairs(77, 100, 6).iter().enumerate() {
        let tag = format!("pair {i}: f = {f}, g = {g}");
        let c = match colength_of(&[f.clone(), g.clone()], &limits).map_err(|e| format!("{tag}: {e}"))? {
            Colength::Finite { value, .. } => value,
            Colength::Infinite { .. } => return Err(format!("{tag}: infinite colength")),
        };
        let res = shears
            .iter()
            .filter_map(|a| resultant_order(f, g, a))
            .min()
            .ok_or_else(|| format!("{tag}: every resultant vanishes"))?;
        let (sum, bundle) = branch_sum(f, g, &limits).map_err(|e| format!("{tag}: {e}"))?;
        if c != res || c != sum {
            return Err(format!("{tag}: colength {c}, resultant order {res}, branch sum {sum}"));
        }
        bundles += bundle as usize;
        largest = largest.max(c);
    }
    Ok(format!("100 pairs agree on all three paths (largest I = {largest}, {bundles} with bundled branches)"))
}

fn gap_suite() -> Outcome {
    let limits = Limits::default();
    let mut parts = Vec::new();
    for s in ["y^2 - x^3", "y^3 - x^7", "y^3 - x^7 + x^5*y", "y^2 - x^3 + x^4"] {
        let f = parse_poly2(s).map_err(|e| e.to_string())?;
        let gaps = with_branches(&f, &limits, |bs| {
            if bs.len() != 1 || bs[0].is_bundle() {
                return Err(folinv::Error::Unsupported(format!("{s} is not one explicit branch")));
            }
            gap_count(&bs[0], &f)
        })
        .map_err(|e| format!("{s}: {e}"))?;
        let mu = milnor_curve(&f, &limits).map_err(|e| e.to_string())?;
        let tau = tjurina_curve(&f, &limits).map_err(|e| e.to_string())?;
        if gaps != mu - tau {
            return Err(format!("{s}: {gaps} gaps, mu - tau = {mu} - {tau}"));
        }
        parts.push(format!("{s}: {gaps}"));
    }
    Ok(format!("gaps = mu - tau ({})", parts.join(", ")))
}

fn global_suite() -> Outcome {
    let mut cases = 0;
    for n in [2u32, 3] {
        let ex = alcantara_family(n, int(1), int(1)).map_err(|e| e.to_string())?;
        let [a, b, c] = ex.foliation.coefficients();
        let doc = run(&global(
            &a.to_string(),
            &b.to_string(),
            &c.to_string(),
            &ex.component.to_string(),
            &["0:0:1"],
        ));
        let tag = format!("Omega n = {n}");
        no_failures(&doc, &tag)?;
        holds_all(&doc, &prefixed("", &GLOBAL), &tag)?;
        cases += 1;
    }

    // the cuspidal cubic with a degree 2 hamiltonian-type form
    let doc = run(&global("3*x^2*z", "-2*y*z^2", "2*y^2*z - 3*x^3", "y^2*z - x^3", &["0:0:1", "0:1:0"]));
    no_failures(&doc, "cuspidal cubic")?;
    holds_all(&doc, &prefixed("", &GLOBAL), "cuspidal cubic")?;
    expect(&doc, "milnor_total", int(7), "cuspidal cubic")?;
    expect(&doc, "tjurina_foliation", int(5), "cuspidal cubic")?;
    cases += 1;

    // pencil of lines through a point and the line y, degree 0 after saturation
    let doc = run(&global("y*z", "-x*z", "0", "y", &["0:0:1"]));
    no_failures(&doc, "pencil")?;
    expect(&doc, "degree", int(0), "pencil")?;
    holds_all(&doc, &prefixed("", &["cerveau_linsneto", "gsv_sum", "ploski"]), "pencil")?;
    for name in ["soares", "global_tjurina", "global_tjurina_upper", "global_tjurina_lower"] {
        if status(&doc, name)? != VerdictStatus::NotApplicable {
            return Err(format!("pencil: {name} should be out of range (d < 2)"));
        }
    }
    cases += 1;

    let doc = run(&example("pencil", &[]));
    no_failures(&doc, "pencil example")?;
    let cubic = run(&example("cuspidal-cubic", &[]));
    no_failures(&cubic, "cuspidal cubic example")?;
    holds_all(&cubic, &prefixed("cubic.", &GLOBAL), "cuspidal cubic example")?;
    cases += 2;
    Ok(format!(
        "{cases} cases: Cerveau-Lins Neto, Soares, GSV sum, three Tjurina clauses hold; pencil/line clauses with d < 2 not applicable"
    ))
}

fn strip(doc: &ReportDoc) -> String {
    doc.without_timing().to_json()
}

fn binary(args: &[&str]) -> Result<ReportDoc, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_folcli"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ReportDoc::from_json(&String::from_utf8_lossy(&out.stdout)).map_err(|e| format!("{args:?}: {e}"))
}

fn determinism() -> Outcome {
    let mut jobs = vec![
        example("suzuki", &[]),
        example("fk", &[("k", "4")]),
        global("3*x^2*z", "-2*y*z^2", "2*y^2*z - 3*x^3", "y^2*z - x^3", &["0:0:1", "0:1:0"]),
    ];
    jobs.push(JobSpec {
        kind: Some(JobKind::LocalCheck),
        p: Some("2*y^2 + x^3".into()),
        q: Some("-2*x*y".into()),
        f: Some("x*(y^2 - x^3)".into()),
        ..JobSpec::default()
    });
    for job in &jobs {
        let (a, b) = (run(job), run(job));
        if strip(&a) != strip(&b) {
            return Err(format!("{}: reports differ", a.command));
        }
    }
    let limits = Limits::default();
    if samples(limits.seed, 20, &limits) != samples(limits.seed, 20, &limits) {
        return Err("sample stream differs".into());
    }
    let args = ["--format", "structured", "example", "run", "alcantara", "--n", "3"];
    let (a, b) = (binary(&args)?, binary(&args)?);
    if strip(&a) != strip(&b) {
        return Err("binary reports differ".into());
    }
    Ok(format!("{} library jobs, the sample stream and a binary run repeat exactly", jobs.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("suzuki suite", suzuki),
        ("F_k suite", fk_suite),
        ("Alcantara family", alcantara_suite),
        ("identity properties", identity_suite),
        ("intersection oracles", oracle_suite),
        ("gap count", gap_suite),
        ("global suite", global_suite),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let r = f();
        let secs = start.elapsed().as_secs_f64();
        match r {
            Ok(msg) => println!("PASS {} {name}: {msg} ({secs:.1} s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg} ({secs:.1} s)", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
