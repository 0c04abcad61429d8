//! Desk-scale verification checks, the suite runner and its config format.

mod checks;
mod config;
mod invariants;
mod report;
mod suite;

pub use checks::{
    check_filt1, check_filt2_separation, check_mu_nu, filtration_weights, mu_reference, Filt2Part,
};
pub use config::{parse_rational, Config, ALL_CHECKS};
pub use invariants::{
    check_braided, check_chi_symmetry, check_dominance, check_hopf, check_relations, check_sections,
    check_smash_product, check_verma, weight_box,
};
pub use report::{timed, CheckReport, Status};
pub use suite::{check_specialization, default_suite, run_suite, SuiteReport};
