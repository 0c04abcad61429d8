use qloc_core::harness::{
    check_filt1, check_filt2_separation, check_mu_nu, mu_reference, run_suite, CheckReport, Config, Filt2Part,
    Status,
};
use qloc_core::oq_dq::Oq;
use qloc_core::{CoreError, RootDatum, Uq, Weight, WeightCharacter};

#[test]
fn mu_reference_is_the_odd_numbers() {
    assert_eq!(&mu_reference()[..4], &[1, 3, 5, 7]);
}

#[test]
fn mu_nu_examples() {
    let oq = Oq::new();
    let r = check_mu_nu(&oq, &Weight::ZERO, 3);
    assert_eq!(r.status, Status::Pass, "{}", r.witness);
    assert_eq!(r.witness["nu"], serde_json::json!([1, 3, 5, 7]));
    let r2 = check_mu_nu(&oq, &Weight::new(2, 0), 3);
    assert_eq!(r2.witness["nu"], r.witness["nu"]);
    let r0 = check_mu_nu(&oq, &Weight::new(4, 0), 0);
    assert_eq!(r0.witness["nu"], serde_json::json!([1]));
    // beyond the shipped table: unknown, with the window recorded
    let far = check_mu_nu(&oq, &Weight::ZERO, 40);
    assert!(matches!(far.status, Status::UnknownAtWindow(_)));
}

#[test]
fn filt1_examples() {
    let oq = Oq::new();
    for dim in [1, 2] {
        let r = check_filt1(&oq, dim, 1, 2);
        assert!(r.ok(), "{}", r.witness);
    }
    let r = check_filt1(&oq, 2, 1, 3);
    assert_eq!(r.witness["factor_sign"], 1);
    // the opposite sign fails on some weight for μ = ±ω
    assert!(!r.witness["opposite_sign_failures"].as_array().unwrap().is_empty());
}

#[test]
fn filt2_examples() {
    let uq = Uq::new(RootDatum::a1());
    let d = uq.datum().clone();
    let rho = WeightCharacter::Integral(d.rho());
    let v2 = Weight::new(1, 0);
    for part in [Filt2Part::A, Filt2Part::B] {
        let r = check_filt2_separation(&uq, &rho, &v2, part);
        assert!(r.ok(), "{}", r.witness);
    }
    let zero = WeightCharacter::Integral(Weight::ZERO);
    let r = check_filt2_separation(&uq, &zero, &v2, Filt2Part::B);
    assert_eq!(r.status, Status::Fail);
    assert!(!r.witness["precondition_holds"].as_bool().unwrap());
    assert!(r.clone().negative().ok());
    let trivial = check_filt2_separation(&uq, &zero, &Weight::ZERO, Filt2Part::A);
    assert_eq!(trivial.status, Status::Pass);
    let a2 = Uq::new(RootDatum::a2());
    let rho2 = WeightCharacter::Integral(a2.datum().rho());
    for v in [Weight::new(1, 0), Weight::new(0, 1), Weight::new(1, 1)] {
        for part in [Filt2Part::A, Filt2Part::B] {
            let r = check_filt2_separation(&a2, &rho2, &v, part);
            assert!(r.ok(), "{}", r.witness);
        }
    }
}

#[test]
fn config_diagnostics() {
    let e = Config::parse("type = A1\nseed = 3\nbogus = 1\n").unwrap_err();
    assert_eq!(
        e,
        CoreError::Config {
            line: 3,
            msg: "unknown key `bogus`".into()
        }
    );
    let e = Config::parse("# comment\n\nseed = x").unwrap_err();
    assert!(matches!(e, CoreError::Config { line: 3, .. }));
    let e = Config::parse("type = B2").unwrap_err();
    assert!(matches!(e, CoreError::Config { line: 1, .. }));
    let e = Config::parse("type = A2\nfilt2.lambdas = 1").unwrap_err();
    assert!(matches!(e, CoreError::Config { line: 2, .. }), "{e}");
    let e = Config::parse("checks = relations, nope").unwrap_err();
    assert!(e.to_string().contains("nope"));
    let c = Config::parse("type = A2\nfilt2.negative = 0,0/b; -1,-1/a\nq_eval = 3/2").unwrap();
    assert_eq!(c.filt2_negative.len(), 2);
    assert_eq!(c.q_eval.unwrap().to_string(), "3/2");
}

#[test]
fn empty_check_list_gives_empty_report() {
    let c = Config::parse("checks =").unwrap();
    let r = run_suite(&c);
    assert!(r.reports.is_empty());
    assert!(r.passed());
}

#[test]
fn reports_are_reproducible() {
    let text = "type = A2\nseed = 9\nworkers = 3\nchecks = relations, hopf, braided, filt2\n\
                confluence_trials = 20\nhopf.samples = 5\nbraided.samples = 5\nbraided.degree = 2\n";
    let c = Config::parse(text).unwrap();
    let a = run_suite(&c);
    let mut c1 = c.clone();
    c1.workers = 1;
    let b = run_suite(&c1);
    assert_eq!(a.to_json(), b.to_json());
    assert!(a.passed(), "{}", a.summary());
}

#[test]
fn negative_control_for_part_a() {
    // λ = −ρ is not dominant: part (a) must find a coincidence
    let c = Config::parse("checks = filt2\nfilt2.lambdas =\nfilt2.negative = -1/a").unwrap();
    let r = run_suite(&c);
    assert_eq!(r.reports.len(), 2);
    assert!(r.reports.iter().all(|x: &CheckReport| x.expect_failure && x.status == Status::Fail));
    assert!(r.passed());
}

#[test]
fn specialization_flags_roots_of_unity() {
    let c = Config::parse("checks = specialize\nq_eval = -1").unwrap();
    let r = run_suite(&c);
    assert_eq!(r.reports.len(), 1);
    assert_eq!(r.reports[0].status, Status::Fail);
    let c = Config::parse("checks = specialize\nq_eval = 3/2").unwrap();
    let r = run_suite(&c);
    assert_eq!(r.reports[0].status, Status::Pass, "{}", r.reports[0].witness);
}

#[test]
fn verma_check_covers_every_weight_space() {
    let a1 = qloc_core::harness::check_verma(&Uq::new(RootDatum::a1()), 8);
    let a2 = qloc_core::harness::check_verma(&Uq::new(RootDatum::a2()), 5);
    // four highest weights; 9 and 21 weight spaces respectively
    assert_eq!(a1.witness["weight_spaces"], 36);
    assert_eq!(a2.witness["weight_spaces"], 84);
    assert!(a1.ok() && a2.ok());
}

#[test]
fn default_a1_suite_passes() {
    let r = run_suite(&Config::default_for(RootDatum::a1()));
    println!("{}", r.summary());
    assert!(r.passed(), "{}", r.summary());
}
