//! Central elements of U_q and central characters.

use serde::{Deserialize, Serialize};

use crate::error::CoreError;
use crate::linalg::kernel;
use crate::root_datum::{CartanType, Weight, WeightCharacter};
use crate::scalars::QScalar;
use crate::uq_algebra::{Monomial, Uq, UqElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralElementSet {
    pub names: Vec<String>,
    pub elements: Vec<UqElement>,
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    f: [u32; 3],
    k: [i64; 2],
    e: [u32; 3],
    c: QScalar,
}

#[derive(Serialize, Deserialize)]
struct ElementRecord {
    name: String,
    terms: Vec<TermRecord>,
}

#[derive(Serialize, Deserialize)]
struct CentralFile {
    datum: String,
    elements: Vec<ElementRecord>,
}

const A2_DATA: &str = include_str!("../../data/central_a2.json");

impl CentralElementSet {
    /// The quantum Casimir for A1 and the shipped pair for A2.
    pub fn standard(uq: &Uq) -> Self {
        match uq.datum().ty {
            CartanType::A1 => {
                let f = uq.field();
                let a = uq.datum().alpha(0);
                let fe = uq.multiply(&uq.f(0), &uq.e(0));
                let mut cartan = uq.k(a).scale(&f.q());
                cartan.add_scaled(&uq.k(-a), &f.q_pow(-1));
                let d = f.q_diff().pow(-2);
                CentralElementSet {
                    names: vec!["casimir".into()],
                    elements: vec![fe.add(&cartan.scale(&d))],
                }
            }
            CartanType::A2 => Self::from_json(A2_DATA).expect("shipped central elements parse"),
        }
    }

    pub fn from_json(s: &str) -> Result<Self, CoreError> {
        let file: CentralFile = serde_json::from_str(s).map_err(|e| CoreError::Parse(e.to_string()))?;
        let mut names = Vec::new();
        let mut elements = Vec::new();
        for rec in file.elements {
            let mut x = UqElement::zero();
            for t in rec.terms {
                x.add_term(
                    Monomial {
                        f: t.f,
                        k: Weight(t.k),
                        e: t.e,
                    },
                    t.c,
                );
            }
            names.push(rec.name);
            elements.push(x);
        }
        Ok(CentralElementSet { names, elements })
    }

    pub fn to_json(&self, datum: &str) -> String {
        let file = CentralFile {
            datum: datum.to_string(),
            elements: self
                .names
                .iter()
                .zip(&self.elements)
                .map(|(n, x)| ElementRecord {
                    name: n.clone(),
                    terms: x
                        .terms()
                        .map(|(m, c)| TermRecord {
                            f: m.f,
                            k: m.k.0,
                            e: m.e,
                            c: c.clone(),
                        })
                        .collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("serializable")
    }

    /// Exact check that every element commutes with E_i, F_i, K_{ω_i}.
    pub fn all_central(&self, uq: &Uq) -> bool {
        self.elements
            .iter()
            .all(|z| uq.generators().iter().all(|g| uq.commutator(g, z).is_zero()))
    }
}

/// Searches for central elements among combinations of F^a K_μ E^b with
/// equal-weight F- and E-parts of height at most `h_max`, K_μ in the box
/// |coordinates| ≤ `k_max`, excluding the unit. Returns a kernel basis.
pub fn search_central(uq: &Uq, h_max: u32, k_max: i64) -> Vec<UqElement> {
    let exps = uq.exps_up_to_height(h_max);
    let ks = uq.weight_box(k_max);
    let mut unknowns = Vec::new();
    for a in &exps {
        for b in &exps {
            if uq.exps_weight(a) != uq.exps_weight(b) {
                continue;
            }
            for k in &ks {
                let m = Monomial { f: *a, k: *k, e: *b };
                if m != Monomial::ONE {
                    unknowns.push(m);
                }
            }
        }
    }
    let rank = uq.datum().rank;
    let mut gens = Vec::new();
    for i in 0..rank {
        gens.push(uq.e(i));
        gens.push(uq.f(i));
    }
    // image of each unknown: the concatenated commutators with all generators
    let images: Vec<_> = unknowns
        .iter()
        .map(|m| {
            let x = UqElement::monomial(*m, QScalar::one());
            let mut img = std::collections::BTreeMap::new();
            for (gi, g) in gens.iter().enumerate() {
                for (n, c) in uq.commutator(g, &x).terms() {
                    img.insert((gi, *n), c.clone());
                }
            }
            img
        })
        .collect();
    kernel(&images)
        .into_iter()
        .map(|rel| {
            let mut z = UqElement::zero();
            for (j, c) in rel {
                z.add_term(unknowns[j], c);
            }
            z
        })
        .collect()
}

/// Harish-Chandra part: the U^0 component of a weight-zero element.
pub fn cartan_part(z: &UqElement) -> Vec<(Weight, QScalar)> {
    z.terms()
        .filter(|(m, _)| m.is_cartan())
        .map(|(m, c)| (m.k, c.clone()))
        .collect()
}

/// Eigenvalues of the central elements on the highest weight vector of
/// M_{λ−ρ}.
pub fn central_character(uq: &Uq, lambda: &WeightCharacter, z: &CentralElementSet) -> Vec<QScalar> {
    let d = uq.datum();
    let shifted = d.char_shift(lambda, &-d.rho());
    z.elements
        .iter()
        .map(|x| {
            cartan_part(x)
                .iter()
                .map(|(mu, c)| c * &d.char_value(&shifted, mu))
                .sum()
        })
        .collect()
}
