use std::collections::BTreeMap;

use crate::error::CoreError;
use crate::linalg::Echelon;
use crate::root_datum::{Weight, WeightCharacter};
use crate::scalars::QScalar;
use crate::uq_algebra::{Exps, Gen, Monomial, Uq, UqElement};

/// A vector of a truncated Verma module: coefficients of F^a·1_λ.
pub type ModVec = BTreeMap<Exps, QScalar>;

/// M_λ truncated at F-height `depth`.
#[derive(Clone, Debug)]
pub struct VermaModule<'a> {
    uq: &'a Uq,
    pub lambda: WeightCharacter,
    pub depth: u32,
}

impl<'a> VermaModule<'a> {
    pub fn new(uq: &'a Uq, lambda: WeightCharacter, depth: u32) -> Self {
        VermaModule { uq, lambda, depth }
    }

    pub fn highest(&self) -> ModVec {
        ModVec::from([([0; 3], QScalar::one())])
    }

    pub fn basis(&self) -> Vec<Exps> {
        self.uq.exps_up_to_height(self.depth)
    }

    /// β such that F^a·1_λ has weight λ − β.
    pub fn depth_weight(&self, a: &Exps) -> Weight {
        self.uq.exps_weight(a)
    }

    pub fn act(&self, u: &UqElement, v: &ModVec) -> Result<ModVec, CoreError> {
        let mut out = ModVec::new();
        for (a, c) in v {
            let fa = UqElement::monomial(Monomial { f: *a, ..Monomial::ONE }, QScalar::one());
            for (m, d) in self.uq.multiply(u, &fa).terms() {
                if m.e != [0; 3] {
                    continue;
                }
                let h = self.uq.exps_height(&m.f);
                if h > self.depth {
                    return Err(CoreError::DepthOverflow { height: h, depth: self.depth });
                }
                let val = &(c * d) * &self.uq.datum().char_value(&self.lambda, &m.k);
                crate::uq_algebra::push(&mut out, m.f, val);
            }
        }
        Ok(out)
    }

    pub fn act_gen(&self, g: &Gen, v: &ModVec) -> Result<ModVec, CoreError> {
        self.act(&self.uq.gen(g), v)
    }

    /// Dimensions of the weight spaces λ − β for ht(β) ≤ depth, computed as
    /// ranks of spans of F_i-words applied to 1_λ.
    pub fn weight_space_dims(&self) -> Result<BTreeMap<Weight, usize>, CoreError> {
        let rank = self.uq.datum().rank;
        let mut spaces: BTreeMap<Weight, Vec<ModVec>> = BTreeMap::new();
        spaces.insert(Weight::ZERO, vec![self.highest()]);
        let mut frontier = vec![Weight::ZERO];
        for _ in 0..self.depth {
            let mut next: BTreeMap<Weight, Echelon<Exps>> = BTreeMap::new();
            for beta in &frontier {
                for v in &spaces[beta] {
                    for i in 0..rank {
                        let w = self.act(&self.uq.f(i), v)?;
                        let key = *beta + self.uq.datum().alpha(i);
                        next.entry(key).or_default().insert(w);
                    }
                }
            }
            frontier = next.keys().copied().collect();
            for (k, ech) in next {
                spaces.insert(k, ech.basis_vectors());
            }
        }
        Ok(spaces.into_iter().map(|(k, v)| (k, v.len())).collect())
    }
}

/// The simple quotient of M_{q^λ}: weights with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleQuotient {
    pub highest: Weight,
    pub weights: Vec<(Weight, usize)>,
}

impl SimpleQuotient {
    pub fn dim(&self) -> usize {
        self.weights.iter().map(|(_, m)| m).sum()
    }
}

/// τ(x) for the anti-involution E_i ↔ F_i fixing K, on an F-monomial.
fn tau_of_f(uq: &Uq, a: &Exps) -> UqElement {
    let m = Monomial { f: *a, ..Monomial::ONE };
    let mut cur = UqElement::one();
    for g in uq.letters(&m) {
        let Gen::F(r) = g else { unreachable!() };
        let t = if (0..uq.datum().rank).any(|i| uq.simple_index(i) == r) {
            uq.e_root(r)
        } else {
            // τ(F1F2 − q⁻¹F2F1) = E2E1 − q⁻¹E1E2
            let (e1, e2) = (uq.e(0), uq.e(1));
            uq.multiply(&e2, &e1)
                .sub(&uq.multiply(&e1, &e2).scale(&uq.field().q_pow(-1)))
        };
        cur = uq.multiply(&t, &cur);
    }
    cur
}

/// Simple quotient of the Verma module with integral dominant highest
/// weight λ: the contravariant form's rank on each weight space up to `depth`.
pub fn simple_quotient(uq: &Uq, lambda: &Weight, depth: u32) -> Result<SimpleQuotient, CoreError> {
    let d = uq.datum();
    if !d.is_dominant_classical(lambda) {
        return Err(CoreError::NotDominant(d.fmt_weight(lambda)));
    }
    let verma = VermaModule::new(uq, WeightCharacter::Integral(*lambda), depth);
    let mut by_weight: BTreeMap<Weight, Vec<Exps>> = BTreeMap::new();
    for a in verma.basis() {
        by_weight.entry(uq.exps_weight(&a)).or_default().push(a);
    }
    let mut weights = Vec::new();
    for (beta, basis) in &by_weight {
        let mut ech: Echelon<usize> = Echelon::new();
        for x in basis {
            let t = tau_of_f(uq, x);
            let mut row = crate::linalg::SparseVec::new();
            for (j, y) in basis.iter().enumerate() {
                let v = verma.act(&t, &ModVec::from([(*y, QScalar::one())]))?;
                if let Some(c) = v.get(&[0; 3]) {
                    row.insert(j, c.clone());
                }
            }
            ech.insert(row);
        }
        let r = ech.rank();
        if r > 0 {
            let h = uq.exps_height(&basis[0]);
            if h == depth {
                return Err(CoreError::DepthTooSmall { depth });
            }
            weights.push((*lambda - *beta, r));
        }
    }
    Ok(SimpleQuotient {
        highest: *lambda,
        weights,
    })
}
