//! Arrow-diagram calculus for links under the Hopf fibration.
//!
//! The crate models knot and link diagrams in a disk decorated with arrows,
//! the six Reidemeister-type moves acting on them, the tangle constructions
//! that produce small witness diagrams for Hopf crossing number upper
//! bounds, the closed-form bound calculators, a Kauffman bracket / Jones
//! oracle for arrowless diagrams, and bounded search over the move graph.

pub mod diagram;
pub mod fixtures;
pub mod invariants;
pub mod poly;
pub mod tangles;

pub use diagram::{ArrowDiagram, Dart, DiagramStats, ValidationReport};
pub use poly::LaurentPolynomial;
