//! Verma modules, central characters, dominance and simple quotients.

mod central;
mod dominance;
mod verma;

pub use central::{cartan_part, central_character, search_central, CentralElementSet};
pub use dominance::{Certificate, ChiContext, Decision, Tri};
pub use verma::{simple_quotient, ModVec, SimpleQuotient, VermaModule};
