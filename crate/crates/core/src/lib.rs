//! Initial ideals and initial algebras over the rationals.
//!
//! The crate computes reduced Groebner bases and Sagbi bases with exact
//! arithmetic, represents monomial orders by integral weight vectors, builds
//! the homogenized flat family `S/hom_a(I)` over `K[t]`, and compares the
//! invariants (Hilbert functions, Krull dimension, graded Betti numbers) of
//! an ideal or algebra with those of its initial object.

pub mod betti;
pub mod error;
pub mod family;
pub mod groebner;
pub mod hilbert;
pub mod linalg;
pub mod lp;
pub mod monomial_ideal;
pub mod order;
pub mod poly;
pub mod sagbi;
pub mod weight;

pub use error::{Error, Result};
pub use order::{BaseKind, OrderSpec};
pub use poly::{Coeff, Monomial, PolyRing, Polynomial, Ring, Term, WeightVector};
pub use groebner::{IdealGens, ReducedGroebnerBasis};
pub use monomial_ideal::MonomialIdeal;
pub use sagbi::{SagbiState, SagbiStatus, SubalgebraGens};
pub use family::HomogenizedFamily;
pub use hilbert::{HilbertFunctionTable, HilbertSeries};
pub use betti::BettiTable;
