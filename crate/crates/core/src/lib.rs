//! Exact computations with type-A monomial crystals, Demazure crystals,
//! generalized minors on reduced double Bruhat cells, lattice paths and
//! cluster seed matrices.

pub mod bruhat;
pub mod cli;
pub mod cluster;
pub mod crystal;
pub mod laurent;
pub mod paths;
pub mod verify;

pub use laurent::{LaurentError, LaurentPoly, Monomial, Rational, VarId};
