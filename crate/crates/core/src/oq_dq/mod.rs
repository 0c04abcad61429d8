//! Quantum coordinate ring of SL2, Borel comodules, sections of equivariant
//! modules and the smash product with U_q.

mod borel;
mod dq;
mod oq;
mod sections;

pub use borel::{b_coproduct, b_one, grouplike, BComodule, BElement, BMono, CoactTensor, GComodule};
pub use dq::{gamma_dlambda_graded_dim, DLambdaClass, Dq, DqElement};
pub use oq::{
    column_weight, letter, mono_letters, monomials_of_weight, monomials_up_to, row_weight, Oq, OqElement, OqMono,
    OqTensor, A, B, C, D,
};
pub use sections::{
    b_weight, check_conjugation_factor, check_pullback_trivialization, check_tensor_trivialization, default_window,
    induction, section_row, sections, sections_dim_from_characters, ConjugationCheck, EquivariantModule, Invariants,
    IsoCheck, ModCoact, ModElem, SectionRow,
};
