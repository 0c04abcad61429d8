//! Windowed equivariant modules O_q ⊗ V, their B-invariants, and the
//! isomorphisms trading a tensor coaction for a coaction on one factor.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::CoreError;
use crate::linalg::{kernel, SparseVec};
use crate::root_datum::{RootDatum, Weight};
use crate::scalars::QScalar;
use crate::uq_algebra::push;

use super::borel::{grouplike, BComodule, BElement, BMono, CoactTensor, GComodule};
use super::oq::{column_weight, monomials_of_weight, monomials_up_to, Oq, OqElement, OqMono};

/// Element of O_q ⊗ V: coefficients of x ⊗ v_j.
pub type ModElem = BTreeMap<(OqMono, usize), QScalar>;
/// Element of O_q ⊗ V ⊗ O_q(B).
pub type ModCoact = BTreeMap<(OqMono, usize, BMono), QScalar>;

/// p̄*V = O_q ⊗ V with O_q acting on the left and the tensor coaction,
/// truncated to O_q-monomials of degree ≤ `window`.
#[derive(Clone, Debug)]
pub struct EquivariantModule {
    pub fiber: BComodule,
    pub window: u32,
}

/// A basis of B-invariants together with the window it was computed in.
#[derive(Clone, Debug)]
pub struct Invariants {
    pub basis: Vec<ModElem>,
    pub window: u32,
    /// The dimension did not change when the window grew by two.
    pub certified: bool,
}

impl Invariants {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SectionRow {
    pub lambda: i64,
    pub dim: usize,
    pub window: u32,
    pub certified: bool,
}

impl EquivariantModule {
    /// The line bundle O_q(n) = p̄*k_{−nω}.
    pub fn line_bundle(n: i64, window: u32) -> Self {
        EquivariantModule {
            fiber: BComodule::character(-n),
            window,
        }
    }

    pub fn pullback(fiber: BComodule, window: u32) -> Self {
        EquivariantModule { fiber, window }
    }

    /// Window basis: x ⊗ v_j with total torus weight zero or, when
    /// `all_weights`, every monomial of degree ≤ window.
    pub fn basis(&self, all_weights: bool) -> Result<Vec<(OqMono, usize)>, CoreError> {
        let mut out = Vec::new();
        for j in 0..self.fiber.dim() {
            let ms = if all_weights {
                monomials_up_to(self.window)
            } else {
                monomials_of_weight(-self.fiber.weight(j)?, self.window)
            };
            out.extend(ms.into_iter().map(|m| (m, j)));
        }
        Ok(out)
    }

    pub fn coact(&self, oq: &Oq, x: &ModElem) -> ModCoact {
        let mut out = ModCoact::new();
        for ((m, j), c) in x {
            let dx = oq.coact_b(&OqElement::monomial(*m, QScalar::one()));
            for (i, cij) in self.fiber.coeffs.iter().map(|row| &row[*j]).enumerate() {
                if cij.is_empty() {
                    continue;
                }
                for ((m0, b), d) in &dx {
                    for (b2, e) in oq.b_mul(&BElement::from([(*b, QScalar::one())]), cij) {
                        push(&mut out, (*m0, i, b2), &(c * d) * &e);
                    }
                }
            }
        }
        out
    }

    /// Left action of O_q on the first factor.
    pub fn act(&self, oq: &Oq, y: &OqElement, x: &ModElem) -> ModElem {
        let mut out = ModElem::new();
        for ((m, j), c) in x {
            let p = oq.multiply(y, &OqElement::monomial(*m, QScalar::one()));
            for (n, d) in p.terms() {
                push(&mut out, (*n, *j), c * d);
            }
        }
        out
    }

    /// The action map is a comodule map: coact(y·x) = Δ_B(y)·coact(x), for
    /// y ∈ {a, b, c, d} and x in the window basis.
    pub fn action_is_comodule_map(&self, oq: &Oq) -> Result<bool, CoreError> {
        for (m, j) in self.basis(true)? {
            let x = ModElem::from([((m, j), QScalar::one())]);
            let cx = self.coact(oq, &x);
            for y in [oq.a(), oq.b(), oq.c(), oq.d()] {
                let lhs = self.coact(oq, &self.act(oq, &y, &x));
                let dy = oq.coact_b(&y);
                let mut rhs = ModCoact::new();
                for ((ym, yb), c) in &dy {
                    for ((xm, i, xb), d) in &cx {
                        let l = oq.multiply(&OqElement::monomial(*ym, QScalar::one()), &OqElement::monomial(*xm, QScalar::one()));
                        let r = oq.b_mul(&BElement::from([(*yb, QScalar::one())]), &BElement::from([(*xb, QScalar::one())]));
                        for (n, e) in l.terms() {
                            for (bb, f) in &r {
                                push(&mut rhs, (*n, *i, *bb), &(&(c * d) * e) * f);
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn invariants_at(&self, oq: &Oq, window: u32) -> Result<Vec<ModElem>, CoreError> {
        let m = EquivariantModule {
            fiber: self.fiber.clone(),
            window,
        };
        let basis = m.basis(false)?;
        let images: Vec<SparseVec<(OqMono, usize, BMono)>> = basis
            .iter()
            .map(|(mono, j)| {
                let mut img = m.coact(oq, &ModElem::from([((*mono, *j), QScalar::one())]));
                push(&mut img, (*mono, *j, (0, 0)), -QScalar::one());
                img
            })
            .collect();
        Ok(kernel(&images)
            .into_iter()
            .map(|rel| rel.into_iter().map(|(t, c)| (basis[t], c)).collect())
            .collect())
    }

    /// Γ(M) = {x : coact(x) = x ⊗ 1} inside the window, certified when the
    /// dimension is unchanged at window + 2.
    pub fn invariants(&self, oq: &Oq) -> Result<Invariants, CoreError> {
        let basis = self.invariants_at(oq, self.window)?;
        let wider = self.invariants_at(oq, self.window + 2)?;
        Ok(Invariants {
            certified: wider.len() == basis.len(),
            basis,
            window: self.window,
        })
    }
}

/// Default window for a line bundle of degree n.
pub fn default_window(n: i64) -> u32 {
    n.unsigned_abs() as u32 + 2
}

/// Γ(O_q(n)) for A1.
pub fn sections(oq: &Oq, n: i64, window: u32) -> Result<Invariants, CoreError> {
    EquivariantModule::line_bundle(n, window).invariants(oq)
}

pub fn section_row(oq: &Oq, n: i64, window: u32) -> Result<SectionRow, CoreError> {
    let inv = sections(oq, n, window)?;
    Ok(SectionRow {
        lambda: n,
        dim: inv.dim(),
        window,
        certified: inv.certified,
    })
}

/// Ind(V) = (O_q ⊗ V)^B inside the window.
pub fn induction(oq: &Oq, v: &BComodule, window: u32) -> Result<Invariants, CoreError> {
    EquivariantModule::pullback(v.clone(), window).invariants(oq)
}

/// Dimension of Γ(O_q(λ)) through character data: Weyl's formula for
/// dominant λ and zero otherwise. Used for A2 where O_q is not modelled.
pub fn sections_dim_from_characters(d: &RootDatum, lambda: &Weight) -> u64 {
    if d.is_dominant_classical(lambda) {
        d.weyl_dim(lambda).unwrap_or(0)
    } else {
        0
    }
}

/// Outcome of checking a pair of mutually inverse maps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoCheck {
    pub basis_size: usize,
    pub left_inverse: bool,
    pub right_inverse: bool,
    pub intertwines: bool,
}

impl IsoCheck {
    pub fn passed(&self) -> bool {
        self.left_inverse && self.right_inverse && self.intertwines
    }
}

fn apply_right_factor(oq: &Oq, v: &GComodule, x: &ModElem, f: impl Fn(&OqElement) -> OqElement) -> ModElem {
    // x ⊗ v_j ↦ Σ_i x·f(coeffs[i][j]) ⊗ v_i
    let mut out = ModElem::new();
    for ((m, j), c) in x {
        let xm = OqElement::monomial(*m, QScalar::one());
        for i in 0..v.dim() {
            let cij = &v.coeffs[i][*j];
            if cij.is_zero() {
                continue;
            }
            for (n, d) in oq.multiply(&xm, &f(cij)).terms() {
                push(&mut out, (*n, i), c * d);
            }
        }
    }
    out
}

fn apply_left_factor(oq: &Oq, v: &GComodule, x: &ModElem, f: impl Fn(&OqElement) -> OqElement) -> ModElem {
    // v_j ⊗ x ↦ Σ_i v_i ⊗ f(coeffs[i][j])·x, stored as (x, i)
    let mut out = ModElem::new();
    for ((m, j), c) in x {
        let xm = OqElement::monomial(*m, QScalar::one());
        for i in 0..v.dim() {
            let cij = &v.coeffs[i][*j];
            if cij.is_zero() {
                continue;
            }
            for (n, d) in oq.multiply(&f(cij), &xm).terms() {
                push(&mut out, (*n, i), c * d);
            }
        }
    }
    out
}

fn coact_tensor(oq: &Oq, v: &BComodule, x: &ModElem, twist: i64) -> ModCoact {
    let m = EquivariantModule::pullback(v.twist(oq, twist), 0);
    m.coact(oq, x)
}

fn coact_first(oq: &Oq, dim: usize, x: &ModElem, twist: i64) -> ModCoact {
    let m = EquivariantModule::pullback(BComodule::trivial().twist(oq, twist), 0);
    let mut out = ModCoact::new();
    for ((mono, j), c) in x {
        let t = m.coact(oq, &ModElem::from([((*mono, 0), c.clone())]));
        for ((n, _, b), d) in t {
            debug_assert!(*j < dim);
            push(&mut out, (n, *j, b), d);
        }
    }
    out
}

fn map_coact(t: &ModCoact, f: impl Fn(&ModElem) -> ModElem) -> ModCoact {
    let mut by_b: BTreeMap<BMono, ModElem> = BTreeMap::new();
    for ((m, j, b), c) in t {
        by_b.entry(*b).or_default().insert((*m, *j), c.clone());
    }
    let mut out = ModCoact::new();
    for (b, x) in by_b {
        for ((m, j), c) in f(&x) {
            push(&mut out, (m, j, b), c);
        }
    }
    out
}

/// x ⊗ v ↦ x v_{(1)} ⊗ v_{(0)} from O_q ⊗ V|B (tensor coaction) to
/// O_q ⊗ V^triv (coaction on O_q only), with inverse
/// x ⊗ v ↦ x S⁻¹(v_{(1)}) ⊗ v_{(0)}. Both sides twisted by k_{−nω}.
pub fn check_pullback_trivialization(oq: &Oq, v: &GComodule, n: i64, window: u32) -> IsoCheck {
    let vb = v.restrict(oq);
    let phi = |x: &ModElem| apply_right_factor(oq, v, x, |c| c.clone());
    let psi = |x: &ModElem| apply_right_factor(oq, v, x, |c| oq.antipode_inv(c));
    let basis: Vec<(OqMono, usize)> = monomials_up_to(window)
        .into_iter()
        .flat_map(|m| (0..v.dim()).map(move |j| (m, j)))
        .collect();
    let mut check = IsoCheck {
        basis_size: basis.len(),
        left_inverse: true,
        right_inverse: true,
        intertwines: true,
    };
    for (m, j) in &basis {
        let x = ModElem::from([((*m, *j), QScalar::one())]);
        check.left_inverse &= psi(&phi(&x)) == x;
        check.right_inverse &= phi(&psi(&x)) == x;
        let lhs = coact_first(oq, v.dim(), &phi(&x), -n);
        let rhs = map_coact(&coact_tensor(oq, &vb, &x, -n), phi);
        check.intertwines &= lhs == rhs;
    }
    check
}

/// v ⊗ f ↦ v_{(0)} ⊗ v_{(1)} f from V ⊗ F (diagonal coaction) to
/// V^triv ⊗ F, with inverse v ⊗ f ↦ v_{(0)} ⊗ S(v_{(1)}) f, for the line
/// bundle F = O_q(n). Elements are stored as (f, j) for v_j ⊗ f.
pub fn check_tensor_trivialization(oq: &Oq, v: &GComodule, n: i64, window: u32) -> IsoCheck {
    let vb = v.restrict(oq);
    let phi = |x: &ModElem| apply_left_factor(oq, v, x, |c| c.clone());
    let psi = |x: &ModElem| apply_left_factor(oq, v, x, |c| oq.antipode(c));
    let g = grouplike(-n);
    let diag = |x: &ModElem| {
        // v_j ⊗ f ↦ Σ v_i ⊗ f_0 ⊗ π(c_ij) π(f_1) a^{−n}
        let mut out = ModCoact::new();
        for ((m, j), c) in x {
            let df = oq.coact_times(&oq.coact_b(&OqElement::monomial(*m, QScalar::one())), &g);
            for i in 0..vb.dim() {
                let cij = &vb.coeffs[i][*j];
                for ((f0, fb), d) in &df {
                    for (b, e) in oq.b_mul(cij, &BElement::from([(*fb, QScalar::one())])) {
                        push(&mut out, (*f0, i, b), &(c * d) * &e);
                    }
                }
            }
        }
        out
    };
    let basis: Vec<(OqMono, usize)> = monomials_up_to(window)
        .into_iter()
        .flat_map(|m| (0..v.dim()).map(move |j| (m, j)))
        .collect();
    let mut check = IsoCheck {
        basis_size: basis.len(),
        left_inverse: true,
        right_inverse: true,
        intertwines: true,
    };
    for (m, j) in &basis {
        let x = ModElem::from([((*m, *j), QScalar::one())]);
        check.left_inverse &= psi(&phi(&x)) == x;
        check.right_inverse &= phi(&psi(&x)) == x;
        let lhs = coact_first(oq, v.dim(), &phi(&x), -n);
        let rhs = map_coact(&diag(&x), phi);
        check.intertwines &= lhs == rhs;
    }
    check
}

/// Per-weight outcome of the identification k_μ ⊗ F ⊗ k_{−μ} ≅ F given by
/// f ↦ q^{s<μ,φ>} 1⊗f⊗1 on F^φ, for the exponent sign s.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugationCheck {
    pub sign: i64,
    pub weights_checked: Vec<i64>,
    pub failing_weights: Vec<i64>,
}

/// B-weight of a monomial in O_q(n), in units of ω.
pub fn b_weight(m: &OqMono, n: i64) -> i64 {
    column_weight(m) - n
}

pub fn check_conjugation_factor(oq: &Oq, n: i64, mu: i64, sign: i64, window: u32) -> ConjugationCheck {
    let d = RootDatum::a1();
    let om = d.omega(0);
    let factor = |phi: i64| oq.uq().qp(d.pairing(&(mu * om), &(phi * om)) * sign);
    let g = grouplike(-n);
    let conj = |b: &BMono| {
        let x = oq.b_mul(&grouplike(mu), &BElement::from([(*b, QScalar::one())]));
        oq.b_mul(&x, &grouplike(-mu))
    };
    let mut weights: BTreeMap<i64, bool> = BTreeMap::new();
    for m in monomials_up_to(window) {
        let phi = b_weight(&m, n);
        let df: CoactTensor = oq.coact_times(&oq.coact_b(&OqElement::monomial(m, QScalar::one())), &g);
        // (π ⊗ id) ∘ coaction
        let mut lhs = CoactTensor::new();
        for ((f0, b), c) in &df {
            push(&mut lhs, (*f0, *b), c * &factor(b_weight(f0, n)));
        }
        // coaction ∘ π on k_μ ⊗ F ⊗ k_{−μ}
        let mut rhs = CoactTensor::new();
        for ((f0, b), c) in &df {
            for (b2, e) in conj(b) {
                push(&mut rhs, (*f0, b2), &(c * &e) * &factor(phi));
            }
        }
        let ok = weights.entry(phi).or_insert(true);
        *ok &= lhs == rhs;
    }
    ConjugationCheck {
        sign,
        weights_checked: weights.keys().copied().collect(),
        failing_weights: weights.iter().filter(|(_, ok)| !**ok).map(|(w, _)| *w).collect(),
    }
}
