use rand::Rng;
use serde_json::json;

use super::report::CheckReport;
use crate::flag_proj::{check_braided_commutativity, check_braided_commutativity_exhaustive, RepRing};
use crate::oq_dq::{section_row, Dq, DqElement, Oq};
use crate::root_datum::{Weight, WeightCharacter};
use crate::scalars::QScalar;
use crate::uq_algebra::{Strategy, Uq};
use crate::weight_modules::{ChiContext, VermaModule};

fn label(uq: &Uq) -> String {
    uq.datum().ty.to_string()
}

/// Defining relations reduce to zero under both engines, and random words
/// rewrite to the same normal form under every strategy.
pub fn check_relations<R: Rng>(uq: &Uq, trials: usize, rng: &mut R) -> CheckReport {
    let report = CheckReport::new("relations", label(uq)).param("trials", trials);
    let mut failures = Vec::new();
    for (name, rel) in uq.defining_relations() {
        let mut ok = uq.normal_form_sum(&rel).is_zero();
        for s in [Strategy::Leftmost, Strategy::Rightmost] {
            ok &= uq.rewrite_normal_form(&rel, s).is_zero();
        }
        if !ok {
            failures.push(json!({ "relation": name }));
        }
    }
    for trial in 0..trials {
        let len = rng.random_range(0..=6);
        let w = uq.random_word(rng, len);
        let base = uq.normal_form(&w);
        let words = vec![(w.clone(), QScalar::one())];
        for s in [Strategy::Leftmost, Strategy::Rightmost, Strategy::Random(trial as u64)] {
            if uq.rewrite_normal_form(&words, s) != base {
                failures.push(json!({ "word": format!("{w:?}"), "strategy": format!("{s:?}") }));
                break;
            }
        }
    }
    report.with(failures.is_empty(), json!({ "failures": failures }))
}

/// Coassociativity, counit and antipode axioms on generators and random
/// elements built from words of length ≤ `max_len`.
pub fn check_hopf<R: Rng>(uq: &Uq, samples: usize, max_len: usize, rng: &mut R) -> CheckReport {
    let report = CheckReport::new("hopf", label(uq))
        .param("samples", samples)
        .param("max_len", max_len);
    let mut xs = uq.generators();
    for _ in 0..samples {
        xs.push(uq.random_element(rng, 2, max_len));
    }
    let mut failures = Vec::new();
    for x in &xs {
        for (axiom, ok) in [
            ("coassociativity", uq.coassociative_on(x)),
            ("counit", uq.counit_axiom(x)),
            ("antipode", uq.antipode_axiom(x)),
        ] {
            if !ok {
                failures.push(json!({ "axiom": axiom, "element": uq.render(x) }));
            }
        }
    }
    report.with(failures.is_empty(), json!({ "elements": xs.len(), "failures": failures }))
}

/// Weight-space dimensions of truncated Verma modules against the Kostant
/// partition function.
pub fn check_verma(uq: &Uq, depth: u32) -> CheckReport {
    let d = uq.datum();
    let report = CheckReport::new("verma", label(uq)).param("depth", depth);
    let f = uq.field();
    let generic = WeightCharacter::Formal((0..d.rank).map(|i| &f.q_pow(3 + i as i64) + &QScalar::from_int(2)).collect());
    let lambdas = [
        WeightCharacter::Integral(Weight::ZERO),
        WeightCharacter::Integral(d.rho()),
        WeightCharacter::Integral(-d.rho()),
        generic,
    ];
    let mut failures = Vec::new();
    let mut spaces = 0;
    for lam in lambdas {
        let dims = match VermaModule::new(uq, lam.clone(), depth).weight_space_dims() {
            Ok(x) => x,
            Err(e) => return report.with(false, json!({ "error": e.to_string() })),
        };
        for (beta, dim) in dims {
            spaces += 1;
            let expected = d.kostant_partition(&beta);
            if dim as u64 != expected {
                failures.push(json!({ "lambda": lam, "beta": d.coords(&beta), "dim": dim, "kostant": expected }));
            }
        }
    }
    report.with(failures.is_empty(), json!({ "weight_spaces": spaces, "failures": failures }))
}

/// Integral weights with every ω-coordinate in [−bound, bound].
pub fn weight_box(uq: &Uq, bound: i64) -> Vec<Weight> {
    let rank = uq.datum().rank;
    let mut out = Vec::new();
    for a in -bound..=bound {
        if rank == 1 {
            out.push(Weight::new(a, 0));
            continue;
        }
        for b in -bound..=bound {
            out.push(Weight::new(a, b));
        }
    }
    out
}

/// χ_λ = χ_{wλ} for every Weyl group element and every λ in the box.
pub fn check_chi_symmetry(uq: &Uq, bound: i64) -> CheckReport {
    let d = uq.datum();
    let ctx = ChiContext::new(uq);
    let report = CheckReport::new("chi-symmetry", label(uq)).param("bound", bound);
    let mut failures = Vec::new();
    let mut pairs = 0;
    for lam in weight_box(uq, bound) {
        let base = ctx.chi(&WeightCharacter::Integral(lam));
        for w in d.weyl_group() {
            pairs += 1;
            let wl = d.weyl_act_weight(w, &lam);
            if ctx.chi(&WeightCharacter::Integral(wl)) != base {
                failures.push(json!({ "lambda": d.coords(&lam), "w": w.to_string() }));
            }
        }
    }
    report.with(failures.is_empty(), json!({ "pairs": pairs, "failures": failures }))
}

/// The χ-based dominance search agrees with the classical criterion.
pub fn check_dominance(uq: &Uq, bound: i64, search: u32) -> CheckReport {
    let d = uq.datum();
    let ctx = ChiContext::new(uq);
    let report = CheckReport::new("dominance", label(uq))
        .param("bound", bound)
        .param("search", search);
    let mut failures = Vec::new();
    let mut checked = 0;
    for mu in weight_box(uq, bound) {
        checked += 1;
        let chi_based = ctx.dominance_search(&WeightCharacter::Integral(mu), search);
        if chi_based.holds() != d.is_dominant_classical(&mu) {
            failures.push(json!({ "mu": d.coords(&mu), "decision": chi_based }));
        }
    }
    report.with(failures.is_empty(), json!({ "weights": checked, "failures": failures }))
}

/// dim Γ(O_q(n)) = n + 1 for n ≥ 0 and 0 below, each certified.
pub fn check_sections(oq: &Oq, ns: &[i64], window: Option<u32>) -> CheckReport {
    let report = CheckReport::new("sections", "A1").param("n", ns).param("window", window);
    let mut rows = Vec::new();
    let mut ok = true;
    for &n in ns {
        let w = window.unwrap_or_else(|| crate::oq_dq::default_window(n));
        match section_row(oq, n, w) {
            Ok(row) => {
                let expected = if n >= 0 { n as usize + 1 } else { 0 };
                ok &= row.dim == expected && row.certified;
                rows.push(json!({ "row": row, "expected": expected }));
            }
            Err(e) => {
                ok = false;
                rows.push(json!({ "n": n, "error": e.to_string() }));
            }
        }
    }
    report.with(ok, json!({ "rows": rows }))
}

/// m∘σ = m: exhaustively up to `max_deg` in A1, on `samples` random pairs
/// otherwise. The witness records the derived relation.
pub fn check_braided<R: Rng>(uq: &Uq, max_deg: u32, samples: usize, rng: &mut R) -> CheckReport {
    let datum = uq.datum().clone();
    let report = CheckReport::new("braided", label(uq))
        .param("max_deg", max_deg)
        .param("samples", samples);
    let bound = if datum.rank == 1 { 2 * max_deg } else { max_deg };
    let ring = match RepRing::standard(datum.clone(), bound) {
        Ok(r) => r,
        Err(e) => return report.with(false, json!({ "error": e.to_string() })),
    };
    let rep = if datum.rank == 1 {
        check_braided_commutativity_exhaustive(&ring, max_deg)
    } else {
        check_braided_commutativity(&ring, samples, rng)
    };
    match rep {
        Ok(rep) => report.with(rep.passed(), serde_json::to_value(&rep).unwrap_or_default()),
        Err(e) => report.with(false, json!({ "error": e.to_string() })),
    }
}

/// Associativity of the smash product on random triples, and the reduction
/// to D_q^λ on 1⊗E and 1⊗K.
pub fn check_smash_product<R: Rng>(dq: &Dq, triples: usize, lambdas: &[Weight], rng: &mut R) -> CheckReport {
    let report = CheckReport::new("smash-product", "A1").param("triples", triples);
    let uq = dq.oq().uq();
    let d = uq.datum();
    let mut failures = Vec::new();
    for t in 0..triples {
        let x = dq.random_element(rng, 2);
        let y = dq.random_element(rng, 2);
        let z = dq.random_element(rng, 2);
        if dq.multiply(&dq.multiply(&x, &y), &z) != dq.multiply(&x, &dq.multiply(&y, &z)) {
            failures.push(json!({ "triple": t, "x": dq.render(&x), "y": dq.render(&y), "z": dq.render(&z) }));
        }
    }
    let one = ([0u32; 4], [0u32; 3]);
    for lam in lambdas {
        let lc = WeightCharacter::Integral(*lam);
        if !dq.dlambda_reduce(&DqElement::from_uq(&uq.e(0)), &lc).is_empty() {
            failures.push(json!({ "lambda": d.coords(lam), "reduce": "1⊗E" }));
        }
        for mu in [d.alpha(0), d.omega(0), -d.omega(0)] {
            let r = dq.dlambda_reduce(&DqElement::from_uq(&uq.k(mu)), &lc);
            if r.get(&one).cloned().unwrap_or_default() != d.char_value(&lc, &mu) || r.len() != 1 {
                failures.push(json!({ "lambda": d.coords(lam), "reduce": format!("1⊗K{}", d.fmt_weight(&mu)) }));
            }
        }
    }
    report.with(failures.is_empty(), json!({ "failures": failures }))
}
