use serde::Deserialize;
use serde_json::json;

use super::report::{CheckReport, Status};
use crate::oq_dq::{
    check_conjugation_factor, check_pullback_trivialization, check_tensor_trivialization, gamma_dlambda_graded_dim,
    GComodule, Oq,
};
use crate::root_datum::{Weight, WeightCharacter};
use crate::uq_algebra::Uq;
use crate::weight_modules::ChiContext;

const MU_REFERENCE: &str = include_str!("../../data/mu_reference_a1.json");

#[derive(Deserialize)]
struct MuReference {
    mu: Vec<usize>,
}

/// dim gr_j(U/Ann M_0) at q = 1 for A1, from the shipped table.
pub fn mu_reference() -> Vec<usize> {
    serde_json::from_str::<MuReference>(MU_REFERENCE)
        .expect("shipped reference table parses")
        .mu
}

/// Compares ν_j(q) = dim Γ(gr_j D^λ) with the classical μ_j(1) for j ≤ J.
pub fn check_mu_nu(oq: &Oq, lambda: &Weight, j_max: u32) -> CheckReport {
    let d = oq.uq().datum();
    let reference = mu_reference();
    let report = CheckReport::new(format!("mu-nu/lambda={}", lambda.0[0]), "A1")
        .param("lambda", d.coords(lambda))
        .param("J", j_max);
    if j_max as usize >= reference.len() {
        let mut r = report;
        r.status = Status::UnknownAtWindow(reference.len() as u32 - 1);
        r.witness = json!({ "reason": "reference table too short", "reference": reference });
        return r;
    }
    if !d.is_dominant_classical(lambda) {
        return report.with(false, json!({ "reason": "λ is not dominant" }));
    }
    let lam = WeightCharacter::Integral(*lambda);
    let mut nu = Vec::new();
    for j in 0..=j_max {
        match gamma_dlambda_graded_dim(oq, &lam, j) {
            Ok(n) => nu.push(n),
            Err(e) => return report.with(false, json!({ "j": j, "error": e.to_string() })),
        }
    }
    let mu = &reference[..=j_max as usize];
    let mismatches: Vec<usize> = (0..nu.len()).filter(|&j| nu[j] != mu[j]).collect();
    report.with(mismatches.is_empty(), json!({ "nu": nu, "mu": mu, "mismatch_at": mismatches }))
}

/// Checks the two trivializations of V ⊗ F and the identification of the
/// subquotients k_μ ⊗ F with twisted line bundles.
///
/// `dim` selects the simple A1 comodule of that dimension, `n` the line
/// bundle O_q(n) and `window` the monomial degree bound.
pub fn check_filt1(oq: &Oq, dim: u32, n: i64, window: u32) -> CheckReport {
    let report = CheckReport::new(format!("filt1/dim={dim}/n={n}"), "A1")
        .param("dim", dim)
        .param("n", n)
        .param("window", window);
    if dim == 0 {
        return report.with(true, json!({ "reason": "zero module" }));
    }
    let v = if dim == 1 {
        GComodule::trivial()
    } else {
        GComodule::simple(oq, dim - 1)
    };
    let pull = check_pullback_trivialization(oq, &v, n, window);
    let tensor = check_tensor_trivialization(oq, &v, n, window);
    let weights: Vec<i64> = (0..dim as i64).map(|t| dim as i64 - 1 - 2 * t).collect();
    let mut conj = Vec::new();
    let mut conj_ok = true;
    let mut literal_failures = Vec::new();
    for &mu in &weights {
        let pos = check_conjugation_factor(oq, n, mu, 1, window);
        let neg = check_conjugation_factor(oq, n, mu, -1, window);
        conj_ok &= pos.failing_weights.is_empty();
        if !neg.failing_weights.is_empty() {
            literal_failures.push(json!({ "mu": mu, "phi": neg.failing_weights }));
        }
        conj.push(pos);
    }
    let passed = pull.passed() && tensor.passed() && conj_ok;
    report.with(
        passed,
        json!({
            "pullback": pull,
            "tensor": tensor,
            "factor_sign": 1,
            "conjugation": conj,
            "opposite_sign_failures": literal_failures,
        }),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filt2Part {
    /// χ_{−λ} ≠ χ_{−λ−μ_0+μ_i} for i ≠ 0.
    A,
    /// χ_{−λ+μ_n} ≠ χ_{−λ+μ_i} for i ≠ n.
    B,
}

impl Filt2Part {
    pub fn label(self) -> &'static str {
        match self {
            Filt2Part::A => "a",
            Filt2Part::B => "b",
        }
    }
}

/// Weights of V_ν with multiplicity, highest first, so that μ_0 spans the
/// bottom of the B-stable filtration and μ_n the top quotient.
pub fn filtration_weights(uq: &Uq, nu: &Weight) -> Vec<Weight> {
    let d = uq.datum();
    let mut ws: Vec<Weight> = Vec::new();
    for (w, m) in d.simple_weights(nu).unwrap_or_default() {
        ws.extend(std::iter::repeat_n(w, m as usize));
    }
    ws.sort_by(|x, y| d.height(y).cmp(&d.height(x)).then(y.cmp(x)));
    ws
}

/// Central-character separations that force the splittings of Filt2.
pub fn check_filt2_separation(uq: &Uq, lambda: &WeightCharacter, v: &Weight, part: Filt2Part) -> CheckReport {
    let d = uq.datum();
    let ctx = ChiContext::new(uq);
    let lam_label = match lambda {
        WeightCharacter::Integral(w) => d.fmt_weight(w),
        WeightCharacter::Formal(vals) => format!("{vals:?}"),
    };
    let report = CheckReport::new(
        format!("filt2/{}/lambda={lam_label}/V={}", part.label(), d.fmt_weight(v)),
        d.ty.to_string(),
    )
    .param("part", part.label())
    .param("lambda", lambda)
    .param("V", d.coords(v));
    let ws = filtration_weights(uq, v);
    if ws.is_empty() {
        return report.with(false, json!({ "reason": "V is not a dominant highest weight" }));
    }
    let pre = match part {
        Filt2Part::A => ctx.is_dominant(lambda, 6),
        Filt2Part::B => ctx.is_regular_dominant(lambda, 6),
    };
    let neg = d.char_inverse(lambda);
    let n = ws.len() - 1;
    let (base_idx, base) = match part {
        Filt2Part::A => (0, neg.clone()),
        Filt2Part::B => (n, d.char_shift(&neg, &ws[n])),
    };
    let target = ctx.chi(&base);
    let mut coincidences = Vec::new();
    for (i, mu) in ws.iter().enumerate() {
        if i == base_idx {
            continue;
        }
        let other = match part {
            Filt2Part::A => d.char_shift(&neg, &(*mu - ws[0])),
            Filt2Part::B => d.char_shift(&neg, mu),
        };
        if ctx.chi(&other) == target {
            coincidences.push(json!({ "i": i, "mu_i": d.coords(mu), "character": other }));
        }
    }
    report.with(
        coincidences.is_empty(),
        json!({
            "weights": ws.iter().map(|w| d.coords(w)).collect::<Vec<_>>(),
            "precondition_holds": pre.holds(),
            "coincidences": coincidences,
        }),
    )
}
