use serde::Serialize;

use super::central::{central_character, CentralElementSet};
use crate::root_datum::{Weight, WeightCharacter};
use crate::scalars::QScalar;
use crate::uq_algebra::Uq;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tri {
    True,
    False,
    UnknownAtBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    /// Decided by the classical criterion on ω-coordinates.
    Classical,
    /// A coincidence χ_{λ+φ} = χ_{λ+ψ} (ψ = 0 for the dominance test).
    Witness { phi: Weight, psi: Weight },
    /// No coincidence among the candidates up to this bound.
    SearchedUpTo(u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub status: Tri,
    pub certificate: Certificate,
}

impl Decision {
    /// Unknown collapses to true: no counterexample within the bound.
    pub fn holds(&self) -> bool {
        self.status != Tri::False
    }
}

/// Computes central characters with a fixed central element set.
#[derive(Clone, Debug)]
pub struct ChiContext<'a> {
    pub uq: &'a Uq,
    pub z: CentralElementSet,
}

impl<'a> ChiContext<'a> {
    pub fn new(uq: &'a Uq) -> Self {
        ChiContext {
            uq,
            z: CentralElementSet::standard(uq),
        }
    }

    pub fn chi(&self, lambda: &WeightCharacter) -> Vec<QScalar> {
        central_character(self.uq, lambda, &self.z)
    }

    pub fn chi_shifted(&self, lambda: &WeightCharacter, mu: &Weight) -> Vec<QScalar> {
        self.chi(&self.uq.datum().char_shift(lambda, mu))
    }

    pub fn chi_equal(&self, a: &WeightCharacter, b: &WeightCharacter) -> bool {
        self.chi(a) == self.chi(b)
    }

    /// Whether b lies in the linear W-orbit of a (integral arguments only).
    pub fn same_orbit(&self, a: &Weight, b: &Weight) -> bool {
        let d = self.uq.datum();
        d.weyl_group().iter().any(|w| d.weyl_act_weight(w, a) == *b)
    }

    /// Elements of Q_+ \ {0} of height at most `bound`.
    pub fn positive_root_lattice(&self, bound: u32) -> Vec<Weight> {
        let d = self.uq.datum();
        let mut out = Vec::new();
        for a in 0..=bound as i64 {
            for b in 0..=bound as i64 {
                if (d.rank == 1 && b > 0) || a + b == 0 || a + b > bound as i64 {
                    continue;
                }
                let mut phi = a * d.alpha(0);
                if d.rank > 1 {
                    phi += b * d.alpha(1);
                }
                out.push(phi);
            }
        }
        out
    }

    /// Dominant weights with coordinate sum at most `bound`.
    pub fn dominant_weights(&self, bound: u32) -> Vec<Weight> {
        let d = self.uq.datum();
        let mut out = Vec::new();
        for a in 0..=bound as i64 {
            for b in 0..=bound as i64 {
                if (d.rank == 1 && b > 0) || a + b > bound as i64 {
                    continue;
                }
                out.push(Weight::new(a, b));
            }
        }
        out
    }

    /// χ-based dominance: search φ ∈ Q_+ \ {0} with ht(φ) ≤ bound for
    /// χ_λ = χ_{λ+φ}.
    pub fn dominance_search(&self, lambda: &WeightCharacter, bound: u32) -> Decision {
        let base = self.chi(lambda);
        for phi in self.positive_root_lattice(bound) {
            if self.chi_shifted(lambda, &phi) == base {
                return Decision {
                    status: Tri::False,
                    certificate: Certificate::Witness { phi, psi: Weight::ZERO },
                };
            }
        }
        Decision {
            status: Tri::UnknownAtBound,
            certificate: Certificate::SearchedUpTo(bound),
        }
    }

    /// χ-based regularity: search φ ∈ P_+ and weights ψ ≠ φ of V_φ for
    /// χ_{λ+φ} = χ_{λ+ψ}.
    pub fn regularity_search(&self, lambda: &WeightCharacter, bound: u32) -> Decision {
        let d = self.uq.datum();
        for phi in self.dominant_weights(bound) {
            let top = self.chi_shifted(lambda, &phi);
            for (psi, _) in d.simple_weights(&phi).expect("dominant") {
                if psi != phi && self.chi_shifted(lambda, &psi) == top {
                    return Decision {
                        status: Tri::False,
                        certificate: Certificate::Witness { phi, psi },
                    };
                }
            }
        }
        Decision {
            status: Tri::UnknownAtBound,
            certificate: Certificate::SearchedUpTo(bound),
        }
    }

    pub fn is_dominant(&self, lambda: &WeightCharacter, bound: u32) -> Decision {
        match lambda {
            WeightCharacter::Integral(mu) => Decision {
                status: tri(self.uq.datum().is_dominant_classical(mu)),
                certificate: Certificate::Classical,
            },
            WeightCharacter::Formal(_) => self.dominance_search(lambda, bound),
        }
    }

    pub fn is_regular_dominant(&self, lambda: &WeightCharacter, bound: u32) -> Decision {
        match lambda {
            WeightCharacter::Integral(mu) => Decision {
                status: tri(self.uq.datum().is_regular_dominant_classical(mu)),
                certificate: Certificate::Classical,
            },
            WeightCharacter::Formal(_) => self.regularity_search(lambda, bound),
        }
    }
}

fn tri(b: bool) -> Tri {
    if b {
        Tri::True
    } else {
        Tri::False
    }
}
