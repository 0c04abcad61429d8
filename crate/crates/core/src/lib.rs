//! Exact symbolic engine for U_q, O_q(SL2), Verma modules, the smash product
//! D_q and the graded representation ring of the quantum flag variety.

pub mod error;
pub mod expr;
pub mod flag_proj;
pub mod fd_module;
pub mod harness;
pub mod linalg;
pub mod oq_dq;
pub mod root_datum;
pub mod scalars;
pub mod uq_algebra;
pub mod weight_modules;

pub use error::CoreError;
pub use num_rational::BigRational;
pub use scalars::{Evaluation, QField, QScalar};
pub use root_datum::{CartanType, RootDatum, Weight, WeightCharacter, WeylElement};
pub use uq_algebra::{Gen, Monomial, Strategy, Uq, UqElement, UqTensor};
pub use fd_module::{FdModule, Mat};
