//! Exact combinatorial and geometric machinery for `B_3` simplicial complexes.
//!
//! The crate builds finite Coxeter groups from Coxeter-Dynkin diagrams, realizes
//! the spherical Coxeter complex `C(B_3)` on the unit 2-sphere, implements Garside
//! normal forms for the spherical Artin groups of types `B_3` and `A_5`, constructs
//! finite balls of the corresponding Artin complexes, and checks the six-condition
//! combinatorial CAT(1) criterion for typed complexes built out of the spherical
//! `B_3` simplex.

pub mod artin;
pub mod checker;
pub mod complex;
pub mod coxeter;
pub mod develop;
pub mod garside;
pub mod sphere;
pub mod verify;

pub use complex::TypedComplex;
pub use coxeter::{CoxeterDiagram, CoxeterGroup};
pub use sphere::{b3_constants, SimplexShape, SpherePoint};
