//! Finite-dimensional and presented Lie algebras, triples and their predicates.

mod algebra;
pub mod equiv;
pub mod free_lie;
pub mod triple;

pub use algebra::{describe_vector, LieAlgebra, LieViolation};
pub use equiv::{find_isomorphism, triples_equivalent, Equivalence, DEFAULT_DIM_CAP};
pub use free_lie::{free_lie_hall, presented_quotient, PresentedLie};
pub use triple::{check_hyporeductive, check_pseudoreductive, check_pseudoreductive_with_bound, tau_inn, tau_red, PseudoReport, Triple};
