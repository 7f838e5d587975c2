//! One test per acceptance criterion; each prints a single pass/fail line.

use std::io::Write;
use std::time::{Duration, Instant};

use racah_bi::kernel::{ParamPoly, RatFunc, Scalar, Symbol};
use racah_bi::pbw::{self, bannai_ito_casimir, racah_casimir, AlgebraKind, PbwElement};
use racah_bi::shift::{build_standard_bi, casimir_scalar, fit_bi, BiParams, Realization};
use racah_bi::verifier::{render_report, run_suite, CheckReport, Format, Suite, SuiteConfig};

fn criterion(n: u32, name: &str, limit: Duration, f: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let verdict = match (&result, elapsed <= limit) {
        (Ok(()), true) => "PASS".to_string(),
        (Ok(()), false) => format!("FAIL (over the {:.0} s limit)", limit.as_secs_f64()),
        (Err(e), _) => format!("FAIL ({e})"),
    };
    let line = format!(
        "criterion {n} [PRIMARY] {name}: {verdict} in {:.2} s (limit {:.0} s)\n",
        elapsed.as_secs_f64(),
        limit.as_secs_f64()
    );
    std::io::stdout().write_all(line.as_bytes()).unwrap();
    assert!(verdict == "PASS", "{line}");
}

fn suite(suite: Suite) -> SuiteConfig {
    SuiteConfig {
        suite,
        ..SuiteConfig::default()
    }
}

fn all_pass(reports: &[CheckReport], expected: usize) -> Result<(), String> {
    if reports.len() < expected {
        return Err(format!("{} checks, expected at least {expected}", reports.len()));
    }
    match reports.iter().find(|r| !r.passed()) {
        None => Ok(()),
        Some(r) => Err(format!("{} is {}: {}", r.check_id, r.status, r.residual.as_deref().unwrap_or(""))),
    }
}

fn ids(reports: &[CheckReport]) -> Vec<&str> {
    reports.iter().map(|r| r.check_id.as_str()).collect()
}

#[test]
fn criterion_1_abstract_embedding() {
    criterion(1, "abstract equitable embedding in the Bannai-Ito algebra", Duration::from_secs(10), || {
        let reports = run_suite(&suite(Suite::EmbeddingAbstract));
        let expected = [
            "embedding.abstract.central.a-i",
            "embedding.abstract.central.b-i",
            "embedding.abstract.central.c-i",
            "embedding.abstract.delta.bc",
            "embedding.abstract.delta.ca",
            "embedding.abstract.relations.a-delta",
            "embedding.abstract.relations.b-delta",
            "embedding.abstract.relations.c-delta",
            "embedding.abstract.sum.casimir",
        ];
        if ids(&reports) != expected {
            return Err(format!("unexpected checks {:?}", ids(&reports)));
        }
        if reports.iter().any(|r| r.params.values().any(|v| v != "symbolic")) {
            return Err("structure constants must stay symbolic".into());
        }
        all_pass(&reports, expected.len())
    });
}

#[test]
fn criterion_2_casimir_centrality() {
    criterion(2, "Casimir centrality in both abstract algebras", Duration::from_secs(5), || {
        for (kind, c) in [(AlgebraKind::Racah, racah_casimir()), (AlgebraKind::BannaiIto, bannai_ito_casimir())] {
            for g in 0..3 {
                let r = pbw::commutator(&c, &PbwElement::generator(kind, g));
                if !r.is_zero() {
                    return Err(format!("{kind:?} generator {g}: {r}"));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_3_standard_realizations() {
    criterion(3, "standard realizations and their structure constants", Duration::from_secs(30), || {
        let reports = run_suite(&suite(Suite::RacahStandard));
        all_pass(&reports, 6)?;

        let v = |s| ParamPoly::var(s);
        let (p1, p2, r1, r2) = (v(Symbol::RHO1), v(Symbol::RHO2), v(Symbol::R1), v(Symbol::R2));
        let k = |n: i64| Scalar::from_int(n);
        let wx = (&(&p1 * &p2) + &(&r1 * &r2)).scale(&k(4));
        let wy = (&(&(&p1 * &p1) + &(&p2 * &p2)) - &(&(&r1 * &r1) + &(&r2 * &r2))).scale(&k(2));
        let wz = (&(&p1 * &p2) - &(&r1 * &r2)).scale(&k(4));
        let squares = &(&(&p1 * &p1) + &(&p2 * &p2)) + &(&(&r1 * &r1) + &(&r2 * &r2));
        let u = &squares.scale(&k(2)) - &ParamPoly::ratio(1, 4);

        let r = build_standard_bi(BiParams::symbolic());
        let fit = fit_bi(&r).map_err(|e| e.to_string())?;
        let c = &fit.constants;
        for (name, got, want) in [("ωX", &c.omega_x, wx), ("ωY", &c.omega_y, wy), ("ωZ", &c.omega_z, wz)] {
            if *got != RatFunc::from_poly(want.clone()) {
                return Err(format!("{name} = {got}, expected {want}"));
            }
        }
        let got = casimir_scalar(&Realization::BannaiIto(r)).map_err(|e| e.to_string())?;
        if got != RatFunc::from_poly(u.clone()) {
            return Err(format!("u = {got}, expected {u}"));
        }

        let mut cfg = suite(Suite::BiStandard);
        for (s, q) in [(Symbol::RHO1, Scalar::from_int(1)), (Symbol::RHO2, Scalar::ratio(3, 2)), (Symbol::R1, Scalar::ratio(1, 2)), (Symbol::R2, Scalar::from_int(2))] {
            cfg.params.insert(s, q);
        }
        let reports = run_suite(&cfg);
        all_pass(&reports, 9)?;
        let casimir = reports.iter().find(|r| r.check_id == "bi.casimir.scalar").ok_or("missing bi.casimir.scalar")?;
        if casimir.value.as_deref() != Some("59/4") {
            return Err(format!("u = {:?}, expected 59/4", casimir.value));
        }
        let symbolic = run_suite(&suite(Suite::BiStandard));
        all_pass(&symbolic, 9)
    });
}

fn bispectral_family(family: &str) -> Result<(), String> {
    let cfg = SuiteConfig {
        suite: Suite::Bispectral,
        degree: 10,
        trials: 5,
        ..SuiteConfig::default()
    };
    let reports: Vec<CheckReport> = run_suite(&cfg)
        .into_iter()
        .filter(|r| r.check_id.starts_with(&format!("bispectral.{family}.")))
        .collect();
    let mut sets: Vec<_> = reports.iter().map(|r| r.params.clone()).collect();
    sets.dedup();
    if sets.len() < 5 {
        return Err(format!("only {} distinct parameter sets", sets.len()));
    }
    all_pass(&reports, 5)
}

#[test]
fn criterion_4_bispectrality() {
    criterion(4, "bispectrality of both realizations at M = 10", Duration::from_secs(120), || {
        for family in ["racah", "bi"] {
            let start = Instant::now();
            bispectral_family(family)?;
            if start.elapsed() > Duration::from_secs(60) {
                return Err(format!("{family} family over the 60 s limit"));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_5_single_variable_presentations() {
    criterion(5, "su(1,1) and osp(1|2) single-variable presentations", Duration::from_secs(10), || {
        let mut reports = run_suite(&suite(Suite::Su11));
        reports.extend(run_suite(&suite(Suite::Osp12)));
        all_pass(&reports, 20)
    });
}

#[test]
fn criterion_6_racah_problem() {
    criterion(6, "Racah algebra from the su(1,1) Racah problem", Duration::from_secs(60), || {
        all_pass(&run_suite(&suite(Suite::RacahProblem)), 15)
    });
}

#[test]
fn criterion_7_bi_problem() {
    criterion(7, "Bannai-Ito algebra from the osp(1|2) Racah problem", Duration::from_secs(60), || {
        all_pass(&run_suite(&suite(Suite::BiProblem)), 15)
    });
}

#[test]
fn criterion_8_dunkl_embedding() {
    criterion(8, "Racah algebra inside the Dunkl Bannai-Ito algebra", Duration::from_secs(120), || {
        all_pass(&run_suite(&suite(Suite::EmbeddingDunkl)), 25)
    });
}

#[test]
fn criterion_9_engine_health() {
    criterion(9, "engine associativity and deterministic full run", Duration::from_secs(300), || {
        for (s, id) in [
            (Suite::RacahAbstract, "pbw.racah.associativity"),
            (Suite::BiAbstract, "pbw.bi.associativity"),
            (Suite::BiStandard, "shift.engine.associativity"),
            (Suite::Osp12, "dunkl.engine.associativity"),
        ] {
            let cfg = SuiteConfig {
                suite: s,
                trials: 200,
                ..SuiteConfig::default()
            };
            let reports = run_suite(&cfg);
            let r = reports.iter().find(|r| r.check_id == id).ok_or(format!("missing {id}"))?;
            all_pass(std::slice::from_ref(r), 1)?;
            if r.value.as_deref() != Some("200") {
                return Err(format!("{id} ran {:?} triples", r.value));
            }
        }
        let cfg = SuiteConfig {
            format: Format::Json,
            ..SuiteConfig::default()
        };
        let first = run_suite(&cfg);
        all_pass(&first, 200)?;
        let again = run_suite(&cfg);
        if render_report(&first, &cfg) != render_report(&again, &cfg) {
            return Err("JSON differs between runs".into());
        }
        Ok(())
    });
}
