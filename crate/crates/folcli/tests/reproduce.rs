use folcli::{run, JobKind, JobSpec};
use folinv::catalog::samples;
use folinv::exactalg::rat::int;
use folinv::exactalg::Rat;
use folinv::folocal::{gsv, mult_along_curve};
use folinv::localring::{milnor_curve, milnor_foliation, tjurina_curve, tjurina_foliation};
use folinv::Limits;
use proptest::prelude::*;

fn local_job(p: String, q: String, f: String) -> JobSpec {
    JobSpec {
        kind: Some(JobKind::LocalInvariants),
        p: Some(p),
        q: Some(q),
        f: Some(f),
        ..JobSpec::default()
    }
}

fn num(v: i64) -> Option<Rat> {
    Some(int(v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn report_numbers_come_from_the_library(seed in any::<u64>()) {
        let l = Limits::default();
        let s = samples(seed, 1, &l).remove(0);
        let (fol, f) = (&s.foliation, &s.curve.f);
        let doc = run(&local_job(fol.p().to_string(), fol.q().to_string(), f.to_string()));
        prop_assert_eq!(doc.exit_code, 0);
        prop_assert_eq!(doc.get("milnor_foliation").cloned(), num(milnor_foliation(fol, &l).unwrap() as i64));
        prop_assert_eq!(doc.get("milnor_curve").cloned(), num(milnor_curve(f, &l).unwrap() as i64));
        prop_assert_eq!(doc.get("tjurina_curve").cloned(), num(tjurina_curve(f, &l).unwrap() as i64));
        prop_assert_eq!(
            doc.get("tjurina_foliation_curve").cloned(),
            num(tjurina_foliation(fol, f, &l).unwrap() as i64)
        );
        prop_assert_eq!(doc.get("mult_curve").cloned(), num(mult_along_curve(fol, f, &l).unwrap()));
        prop_assert_eq!(doc.get("gsv").cloned(), num(gsv(fol, f, &l).unwrap()));
    }

    #[test]
    fn repeated_runs_agree(seed in any::<u64>()) {
        let l = Limits::default();
        let s = samples(seed, 1, &l).remove(0);
        let mut job = local_job(s.foliation.p().to_string(), s.foliation.q().to_string(), s.curve.f.to_string());
        job.kind = Some(JobKind::LocalCheck);
        job.config.seed = Some(seed);
        prop_assert_eq!(run(&job).without_timing().to_json(), run(&job).without_timing().to_json());
    }
}
