//! Lattices of flats of finite simplicial complexes.
//!
//! The crate computes flats and closures of abstract simplicial complexes,
//! decides boolean representability, and decides whether a finite lattice
//! is the lattice of flats of a boolean representable complex, either
//! through the canonical transversal complex `T_L` or, for lattices of
//! height 3, through supercliques of the atom graph `Γ_L`.

pub mod complex;
pub mod error;
pub mod flats;
pub mod graph;
pub mod io;
pub mod lattice;
pub mod realize;
pub mod set;

pub use complex::{ComplexIso, SimplicialComplex};
pub use error::{Error, Limits, Result};
pub use flats::{FlatFamily, TransversalWitness};
pub use graph::SimpleGraph;
pub use lattice::{FiniteLattice, LatticeIso};
pub use set::IndexSet;
