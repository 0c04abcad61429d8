//! Acceptance criteria, run in order with one PASS/FAIL line each.
//!
//! Run with `cargo test -p qloc-core --test acceptance -- --nocapture` to see
//! the lines.

use std::time::{Duration, Instant};

use qloc_core::flag_proj::{check_braided_commutativity, check_braided_commutativity_exhaustive, RepRing};
use qloc_core::harness::{
    check_chi_symmetry, check_dominance, check_filt1, check_filt2_separation, check_hopf, check_mu_nu,
    check_relations, check_sections, check_smash_product, check_verma, CheckReport, Filt2Part, Status,
};
use qloc_core::oq_dq::{Dq, Oq};
use qloc_core::{RootDatum, Uq, Weight, WeightCharacter};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Outcome {
    passed: bool,
    detail: String,
}

fn all_ok(reports: &[CheckReport]) -> Outcome {
    let bad: Vec<&str> = reports.iter().filter(|r| !r.ok()).map(|r| r.id.as_str()).collect();
    Outcome {
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("{} checks", reports.len())
        } else {
            format!("failing: {}", bad.join(", "))
        },
    }
}

fn uqs() -> [Uq; 2] {
    [Uq::new(RootDatum::a1()), Uq::new(RootDatum::a2())]
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn presentation() -> Outcome {
    let mut r = rng(1);
    all_ok(&uqs().map(|uq| check_relations(&uq, 200, &mut r)))
}

fn hopf() -> Outcome {
    let mut r = rng(2);
    all_ok(&uqs().map(|uq| check_hopf(&uq, 50, 3, &mut r)))
}

fn verma() -> Outcome {
    let [a1, a2] = uqs();
    all_ok(&[check_verma(&a1, 8), check_verma(&a2, 5)])
}

fn harish_chandra() -> Outcome {
    all_ok(&uqs().map(|uq| check_chi_symmetry(&uq, 5)))
}

fn dominance() -> Outcome {
    all_ok(&uqs().map(|uq| check_dominance(&uq, 5, 6)))
}

fn kempf() -> Outcome {
    let ns: Vec<i64> = (-4..=6).collect();
    all_ok(&[check_sections(&Oq::new(), &ns, None)])
}

fn filt1() -> Outcome {
    let oq = Oq::new();
    let mut reports = Vec::new();
    for dim in [2, 3] {
        for n in [-1, 0, 1, 2] {
            reports.push(check_filt1(&oq, dim, n, 2));
        }
    }
    all_ok(&reports)
}

fn mu_nu() -> Outcome {
    let oq = Oq::new();
    let reports: Vec<CheckReport> = [0, 2, 4].iter().map(|&l| check_mu_nu(&oq, &Weight::new(l, 0), 3)).collect();
    let mut out = all_ok(&reports);
    let nus: Vec<&serde_json::Value> = reports.iter().map(|r| &r.witness["nu"]).collect();
    let independent = nus.iter().all(|n| *n == nus[0]);
    let expected = serde_json::json!([1, 3, 5, 7]);
    out.passed &= independent && *nus[0] == expected;
    out.detail = format!("ν = {} for λ ∈ {{0, 2ω, 4ω}}, λ-independent: {independent}", nus[0]);
    out
}

fn filt2() -> Outcome {
    let [a1, a2] = uqs();
    let mut reports = Vec::new();
    let cases: [(&Uq, Vec<Weight>); 2] = [
        (&a1, vec![Weight::new(1, 0), Weight::new(2, 0)]),
        (&a2, vec![Weight::new(1, 0), Weight::new(0, 1), Weight::new(1, 1)]),
    ];
    for (uq, modules) in &cases {
        let rho = WeightCharacter::Integral(uq.datum().rho());
        for v in modules {
            for part in [Filt2Part::A, Filt2Part::B] {
                reports.push(check_filt2_separation(uq, &rho, v, part));
            }
        }
    }
    let zero = WeightCharacter::Integral(Weight::ZERO);
    reports.push(check_filt2_separation(&a1, &zero, &Weight::new(1, 0), Filt2Part::B).negative());
    let mut out = all_ok(&reports);
    let control = reports.last().unwrap();
    out.passed &= control.status == Status::Fail;
    out.detail = format!("{}; negative control coincidences: {}", out.detail, control.witness["coincidences"]);
    out
}

fn braided() -> Outcome {
    let ring = RepRing::standard(RootDatum::a1(), 10).unwrap();
    let a1 = check_braided_commutativity_exhaustive(&ring, 5).unwrap();
    let again = check_braided_commutativity_exhaustive(&RepRing::standard(RootDatum::a1(), 10).unwrap(), 5).unwrap();
    let ring2 = RepRing::standard(RootDatum::a2(), 3).unwrap();
    let a2 = check_braided_commutativity(&ring2, 50, &mut rng(10)).unwrap();
    let stable = a1.relation.is_some() && a1.relation == again.relation;
    Outcome {
        passed: a1.passed() && a2.passed() && stable && a2.pairs_checked == 50,
        detail: format!(
            "A1 pairs {}, A2 pairs {}, relation {} (stable: {stable})",
            a1.pairs_checked,
            a2.pairs_checked,
            a1.relation.as_deref().unwrap_or("none")
        ),
    }
}

fn smash() -> Outcome {
    let lams = [Weight::ZERO, Weight::new(1, 0), Weight::new(2, 0), Weight::new(-3, 0)];
    all_ok(&[check_smash_product(&Dq::new(), 100, &lams, &mut rng(11))])
}

#[test]
fn acceptance_criteria() {
    type Criterion = (u32, &'static str, fn() -> Outcome, Option<Duration>);
    let criteria: [Criterion; 11] = [
        (1, "presentation soundness", presentation, Some(Duration::from_secs(10))),
        (2, "Hopf axioms", hopf, Some(Duration::from_secs(30))),
        (3, "Verma multiplicities", verma, None),
        (4, "Harish-Chandra symmetry", harish_chandra, None),
        (5, "dominance equivalence", dominance, None),
        (6, "sections of line bundles", kempf, None),
        (7, "trivializations of V ⊗ O_q(n)", filt1, None),
        (8, "μ/ν identity", mu_nu, Some(Duration::from_secs(120))),
        (9, "Filt2 separations", filt2, None),
        (10, "braided commutativity", braided, None),
        (11, "smash product", smash, None),
    ];
    let start = Instant::now();
    let mut failed = Vec::new();
    for (n, name, run, budget) in criteria {
        let t = Instant::now();
        let mut out = run();
        let elapsed = t.elapsed();
        if let Some(b) = budget {
            if elapsed > b {
                out.passed = false;
                out.detail = format!("{} (over budget {b:?})", out.detail);
            }
        }
        let verdict = if out.passed { "PASS" } else { "FAIL" };
        println!("criterion {n:2} {verdict} {name}: {} [{elapsed:.2?}]", out.detail);
        if !out.passed {
            failed.push(n);
        }
    }
    let total = start.elapsed();
    let within = total < Duration::from_secs(600);
    println!(
        "full run {} in {total:.2?} (budget 10 min)",
        if within { "PASS" } else { "FAIL" }
    );
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
    assert!(within);
}
