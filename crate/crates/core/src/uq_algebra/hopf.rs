//! Coproduct, antipode, counit and the adjoint action.
//!
//! Convention: Δ(E_i) = E_i⊗1 + K_i⊗E_i, Δ(F_i) = F_i⊗K_i⁻¹ + 1⊗F_i,
//! Δ(K_μ) = K_μ⊗K_μ, S(E_i) = −K_i⁻¹E_i, S(F_i) = −F_iK_i, S(K_μ) = K_{−μ}.

use std::collections::BTreeMap;

use super::{push, Gen, Monomial, Uq, UqElement};
use crate::scalars::QScalar;

pub const COPRODUCT_CONVENTION: &str =
    "D(E_i)=E_i(x)1+K_i(x)E_i; D(F_i)=F_i(x)K_i^-1+1(x)F_i; D(K)=K(x)K; S(E_i)=-K_i^-1E_i; S(F_i)=-F_iK_i; S(K_mu)=K_-mu";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UqTensor {
    pub terms: BTreeMap<(Monomial, Monomial), QScalar>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UqTensor3 {
    pub terms: BTreeMap<(Monomial, Monomial, Monomial), QScalar>,
}

impl UqTensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn pure(a: &UqElement, b: &UqElement) -> Self {
        let mut t = Self::zero();
        for (m, c) in a.terms() {
            for (n, d) in b.terms() {
                push(&mut t.terms, (*m, *n), c * d);
            }
        }
        t
    }

    pub fn add_scaled(&mut self, o: &UqTensor, c: &QScalar) {
        for (k, x) in &o.terms {
            push(&mut self.terms, *k, c * x);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Applies linear maps to each leg and sums the products of the results.
    pub fn contract<F, G>(&self, mut f: F, mut g: G, uq: &Uq) -> UqElement
    where
        F: FnMut(&Monomial) -> UqElement,
        G: FnMut(&Monomial) -> UqElement,
    {
        let mut out = UqElement::zero();
        for ((a, b), c) in &self.terms {
            out.add_scaled(&uq.multiply(&f(a), &g(b)), c);
        }
        out
    }

    /// Swaps the two legs.
    pub fn flip(&self) -> UqTensor {
        UqTensor {
            terms: self.terms.iter().map(|((a, b), c)| ((*b, *a), c.clone())).collect(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub(super) struct HopfTables {
    delta_e: Vec<UqTensor>,
    delta_f: Vec<UqTensor>,
    s_e: Vec<UqElement>,
    s_f: Vec<UqElement>,
}

impl HopfTables {
    pub(super) fn build(uq: &Uq) -> Self {
        let n = uq.n_roots;
        let mut t = HopfTables {
            delta_e: vec![UqTensor::zero(); n],
            delta_f: vec![UqTensor::zero(); n],
            s_e: vec![UqElement::zero(); n],
            s_f: vec![UqElement::zero(); n],
        };
        let one = UqElement::one();
        for i in 0..uq.datum.rank {
            let r = uq.simple[i];
            let a = uq.datum.alpha(i);
            let (e, f) = (uq.e_root(r), uq.f_root(r));
            let mut de = UqTensor::pure(&e, &one);
            de.add_scaled(&UqTensor::pure(&uq.k(a), &e), &QScalar::one());
            let mut df = UqTensor::pure(&f, &uq.k(-a));
            df.add_scaled(&UqTensor::pure(&one, &f), &QScalar::one());
            t.delta_e[r] = de;
            t.delta_f[r] = df;
            t.s_e[r] = uq.multiply(&uq.k(-a), &e).neg();
            t.s_f[r] = uq.multiply(&f, &uq.k(a)).neg();
        }
        if let Some(c) = uq.composite() {
            let (a, b) = (uq.simple[0], uq.simple[1]);
            let qi = -uq.field.q_pow(-1);
            let mut de = uq.tensor_mul(&t.delta_e[a], &t.delta_e[b]);
            de.add_scaled(&uq.tensor_mul(&t.delta_e[b], &t.delta_e[a]), &qi);
            let mut df = uq.tensor_mul(&t.delta_f[a], &t.delta_f[b]);
            df.add_scaled(&uq.tensor_mul(&t.delta_f[b], &t.delta_f[a]), &qi);
            // S is an anti-homomorphism
            let mut se = uq.multiply(&t.s_e[b], &t.s_e[a]);
            se.add_scaled(&uq.multiply(&t.s_e[a], &t.s_e[b]), &qi);
            let mut sf = uq.multiply(&t.s_f[b], &t.s_f[a]);
            sf.add_scaled(&uq.multiply(&t.s_f[a], &t.s_f[b]), &qi);
            t.delta_e[c] = de;
            t.delta_f[c] = df;
            t.s_e[c] = se;
            t.s_f[c] = sf;
        }
        t
    }
}

impl Uq {
    pub fn tensor_mul(&self, x: &UqTensor, y: &UqTensor) -> UqTensor {
        let mut out = UqTensor::zero();
        for ((a, b), c) in &x.terms {
            for ((a2, b2), d) in &y.terms {
                let l = self.multiply(&UqElement::monomial(*a, QScalar::one()), &UqElement::monomial(*a2, QScalar::one()));
                let r = self.multiply(&UqElement::monomial(*b, QScalar::one()), &UqElement::monomial(*b2, QScalar::one()));
                out.add_scaled(&UqTensor::pure(&l, &r), &(c * d));
            }
        }
        out
    }

    fn delta_gen(&self, g: &Gen) -> UqTensor {
        match g {
            Gen::K(mu) => UqTensor::pure(&self.k(*mu), &self.k(*mu)),
            Gen::E(r) => self.hopf.delta_e[*r].clone(),
            Gen::F(r) => self.hopf.delta_f[*r].clone(),
        }
    }

    pub fn coproduct_monomial(&self, m: &Monomial) -> UqTensor {
        let mut cur = UqTensor::pure(&UqElement::one(), &UqElement::one());
        for g in self.letters(m) {
            cur = self.tensor_mul(&cur, &self.delta_gen(&g));
        }
        cur
    }

    pub fn coproduct(&self, x: &UqElement) -> UqTensor {
        let mut out = UqTensor::zero();
        for (m, c) in x.terms() {
            out.add_scaled(&self.coproduct_monomial(m), c);
        }
        out
    }

    fn antipode_gen(&self, g: &Gen) -> UqElement {
        match g {
            Gen::K(mu) => self.k(-*mu),
            Gen::E(r) => self.hopf.s_e[*r].clone(),
            Gen::F(r) => self.hopf.s_f[*r].clone(),
        }
    }

    pub fn antipode_monomial(&self, m: &Monomial) -> UqElement {
        let mut cur = UqElement::one();
        for g in self.letters(m) {
            cur = self.multiply(&self.antipode_gen(&g), &cur);
        }
        cur
    }

    pub fn antipode(&self, x: &UqElement) -> UqElement {
        let mut out = UqElement::zero();
        for (m, c) in x.terms() {
            out.add_scaled(&self.antipode_monomial(m), c);
        }
        out
    }

    pub fn counit(&self, x: &UqElement) -> QScalar {
        x.terms()
            .filter(|(m, _)| m.is_cartan())
            .map(|(_, c)| c.clone())
            .sum()
    }

    /// ad(u)(v) = u₁ v S(u₂).
    pub fn adjoint_act(&self, u: &UqElement, v: &UqElement) -> UqElement {
        let d = self.coproduct(u);
        let mut out = UqElement::zero();
        for ((a, b), c) in &d.terms {
            let left = self.multiply(&UqElement::monomial(*a, QScalar::one()), v);
            out.add_scaled(&self.multiply(&left, &self.antipode_monomial(b)), c);
        }
        out
    }

    /// (Δ⊗id)∘Δ.
    pub fn coassoc_left(&self, x: &UqElement) -> UqTensor3 {
        let mut out = UqTensor3::default();
        for ((a, b), c) in &self.coproduct(x).terms {
            for ((a1, a2), d) in &self.coproduct_monomial(a).terms {
                push(&mut out.terms, (*a1, *a2, *b), c * d);
            }
        }
        out
    }

    /// (id⊗Δ)∘Δ.
    pub fn coassoc_right(&self, x: &UqElement) -> UqTensor3 {
        let mut out = UqTensor3::default();
        for ((a, b), c) in &self.coproduct(x).terms {
            for ((b1, b2), d) in &self.coproduct_monomial(b).terms {
                push(&mut out.terms, (*a, *b1, *b2), c * d);
            }
        }
        out
    }

    /// Checks (ε⊗id)Δ = id = (id⊗ε)Δ on x.
    pub fn counit_axiom(&self, x: &UqElement) -> bool {
        let d = self.coproduct(x);
        let mut left = UqElement::zero();
        let mut right = UqElement::zero();
        for ((a, b), c) in &d.terms {
            if a.is_cartan() {
                left.add_term(*b, c.clone());
            }
            if b.is_cartan() {
                right.add_term(*a, c.clone());
            }
        }
        left == *x && right == *x
    }

    /// Checks m(S⊗id)Δ = ηε = m(id⊗S)Δ on x.
    pub fn antipode_axiom(&self, x: &UqElement) -> bool {
        let d = self.coproduct(x);
        let eps = UqElement::scalar(self.counit(x));
        let id = |m: &Monomial| UqElement::monomial(*m, QScalar::one());
        let l = d.contract(|m| self.antipode_monomial(m), id, self);
        let r = d.contract(id, |m| self.antipode_monomial(m), self);
        l == eps && r == eps
    }

    pub fn coassociative_on(&self, x: &UqElement) -> bool {
        self.coassoc_left(x) == self.coassoc_right(x)
    }
}
