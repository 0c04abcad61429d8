//! The smash product D_q = O_q ⋆ U_q and its twisted quotients D_q^λ.

use std::collections::BTreeMap;

use rand::Rng;

use crate::error::CoreError;
use crate::root_datum::WeightCharacter;
use crate::scalars::QScalar;
use crate::uq_algebra::{push, Exps, Monomial, UqElement};
use crate::weight_modules::VermaModule;

use super::borel::BComodule;
use super::oq::{Oq, OqElement, OqMono};
use super::sections::{default_window, induction};

/// Σ c · (x ⊗ u) with x a normal O_q monomial and u a PBW monomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DqElement {
    terms: BTreeMap<(OqMono, Monomial), QScalar>,
}

impl DqElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::pure(&OqElement::one(), &UqElement::one())
    }

    /// x ⊗ u.
    pub fn pure(x: &OqElement, u: &UqElement) -> Self {
        let mut out = Self::zero();
        for (m, c) in x.terms() {
            for (n, d) in u.terms() {
                out.add_term(*m, *n, c * d);
            }
        }
        out
    }

    pub fn from_oq(x: &OqElement) -> Self {
        Self::pure(x, &UqElement::one())
    }

    pub fn from_uq(u: &UqElement) -> Self {
        Self::pure(&OqElement::one(), u)
    }

    pub fn add_term(&mut self, x: OqMono, u: Monomial, c: QScalar) {
        push(&mut self.terms, (x, u), c);
    }

    pub fn add_scaled(&mut self, o: &DqElement, c: &QScalar) {
        for ((x, u), d) in &o.terms {
            self.add_term(*x, *u, c * d);
        }
    }

    pub fn add(&self, o: &DqElement) -> DqElement {
        let mut out = self.clone();
        out.add_scaled(o, &QScalar::one());
        out
    }

    pub fn scale(&self, c: &QScalar) -> DqElement {
        let mut out = DqElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(OqMono, Monomial), &QScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// A class in D_q^λ = O_q ⊗ U_q/U_q I: coefficients of x ⊗ F^a 1_λ.
pub type DLambdaClass = BTreeMap<(OqMono, Exps), QScalar>;

/// D_q for type A1.
#[derive(Clone, Debug, Default)]
pub struct Dq {
    oq: Oq,
}

impl Dq {
    pub fn new() -> Self {
        Dq { oq: Oq::new() }
    }

    pub fn oq(&self) -> &Oq {
        &self.oq
    }

    fn mono_u(m: &Monomial) -> UqElement {
        UqElement::monomial(*m, QScalar::one())
    }

    fn mono_o(m: &OqMono) -> OqElement {
        OqElement::monomial(*m, QScalar::one())
    }

    /// (x ⊗ u)(y ⊗ v) = Σ x (u_1 ▷ y) ⊗ u_2 v.
    pub fn multiply(&self, a: &DqElement, b: &DqElement) -> DqElement {
        let uq = self.oq.uq();
        let mut out = DqElement::zero();
        for ((x, u), c) in a.terms() {
            let du = uq.coproduct(&Self::mono_u(u));
            for ((y, v), d) in b.terms() {
                let cd = c * d;
                for ((u1, u2), e) in &du.terms {
                    let acted = self.oq.left_act(&Self::mono_u(u1), &Self::mono_o(y));
                    if acted.is_zero() {
                        continue;
                    }
                    let left = self.oq.multiply(&Self::mono_o(x), &acted);
                    let right = uq.multiply(&Self::mono_u(u2), &Self::mono_u(v));
                    let mut piece = DqElement::pure(&left, &right);
                    piece = piece.scale(&(&cd * e));
                    out = out.add(&piece);
                }
            }
        }
        out
    }

    pub fn product(&self, factors: &[DqElement]) -> DqElement {
        factors.iter().fold(DqElement::one(), |acc, f| self.multiply(&acc, f))
    }

    /// u · (x ⊗ v) = Σ (u_1 ▷ x) ⊗ ad(u_2)(v) for u in the Borel part.
    pub fn equivariant_act(&self, u: &UqElement, a: &DqElement) -> Result<DqElement, CoreError> {
        if !u.is_borel() {
            return Err(CoreError::NotBorel);
        }
        let uq = self.oq.uq();
        let du = uq.coproduct(u);
        let mut out = DqElement::zero();
        for ((x, v), c) in a.terms() {
            for ((u1, u2), e) in &du.terms {
                let l = self.oq.left_act(&Self::mono_u(u1), &Self::mono_o(x));
                let r = uq.adjoint_act(&Self::mono_u(u2), &Self::mono_u(v));
                out.add_scaled(&DqElement::pure(&l, &r), &(c * e));
            }
        }
        Ok(out)
    }

    /// Class in D_q^λ: terms with an E-part vanish, K_μ becomes λ(K_μ).
    pub fn dlambda_reduce(&self, a: &DqElement, lambda: &WeightCharacter) -> DLambdaClass {
        let d = self.oq.uq().datum();
        let mut out = DLambdaClass::new();
        for ((x, u), c) in a.terms() {
            if u.e != [0; 3] {
                continue;
            }
            push(&mut out, (*x, u.f), c * &d.char_value(lambda, &u.k));
        }
        out
    }

    /// Filtration degree: that of the U_q leg.
    pub fn filtration_degree(&self, a: &DqElement) -> Option<i64> {
        let uq = self.oq.uq();
        a.terms().map(|((_, u), _)| uq.monomial_degree(u)).max()
    }

    /// A random element with up to `terms` summands, each an O_q monomial of
    /// degree ≤ 2 times a PBW monomial with exponents ≤ 1 and K_{±α}.
    pub fn random_element<R: Rng>(&self, rng: &mut R, terms: usize) -> DqElement {
        let uq = self.oq.uq();
        let alpha = uq.datum().alpha(0);
        let mut out = DqElement::zero();
        for _ in 0..terms {
            let mut x = [0u32; 4];
            for _ in 0..rng.random_range(0..=2) {
                x[rng.random_range(0..4)] += 1;
            }
            if x[0] > 0 && x[3] > 0 {
                x[3] = 0;
            }
            let u = Monomial {
                f: [rng.random_range(0..=1), 0, 0],
                k: rng.random_range(-1..=1) * alpha,
                e: [rng.random_range(0..=1), 0, 0],
            };
            out.add_term(x, u, QScalar::from_int(rng.random_range(1..=3)));
        }
        out
    }

    pub fn render(&self, a: &DqElement) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let uq = self.oq.uq();
        a.terms()
            .map(|((x, u), c)| {
                let xs = self.oq.render(&OqElement::monomial(*x, QScalar::one()));
                let us = uq.fmt_monomial(u);
                format!("({c})*[{xs} ⊗ {us}]")
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// dim Γ(Ind(gr_j M_λ ⊗ k_{−λ})) for integral λ in type A1.
///
/// The graded piece is the line spanned by F^j 1_λ; its weight is read off
/// the action of K_ω in the Verma module and the one-dimensional comodule is
/// induced in a window.
pub fn gamma_dlambda_graded_dim(oq: &Oq, lambda: &WeightCharacter, j: u32) -> Result<usize, CoreError> {
    let WeightCharacter::Integral(lam) = lambda else {
        return Err(CoreError::Invalid("λ must be integral".into()));
    };
    let uq = oq.uq();
    let d = uq.datum();
    let verma = VermaModule::new(uq, lambda.clone(), j + 1);
    let mut v = verma.highest();
    for _ in 0..j {
        v = verma.act(&uq.f(0), &v)?;
    }
    let om = d.omega(0);
    let kv = verma.act(&uq.k(om), &v)?;
    let (key, val) = kv.iter().next().ok_or(CoreError::ZeroDegree)?;
    let eigen = val / &v[key];
    let top = lam.0[0] + 2 * j as i64 + 2;
    let m = (-top..=top)
        .find(|m| uq.qp(d.pairing(&om, &(*m * om))) == eigen)
        .ok_or_else(|| CoreError::Invalid("weight not found".into()))?;
    let twisted = m - lam.0[0];
    let inv = induction(oq, &BComodule::character(twisted), default_window(twisted))?;
    Ok(inv.dim())
}
