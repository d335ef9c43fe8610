//! Schur-ring closures over dihedral and cyclic groups, Cayley graph
//! automorphisms, and parametric constructions of cubic graphical regular
//! representations (GRRs) of dihedral groups.
//!
//! The closure `<<C>>` of a connecting set is computed by Schur-Wielandt
//! refinement ([`schur::closure`]); a trivial closure certifies that
//! `Cay(G, C)` is a GRR. An independent backtracking automorphism oracle
//! ([`cayley::automorphism_order`]) cross-checks the certificates on small
//! graphs.

pub mod cayley;
pub mod construct;
pub mod error;
pub mod group;
pub mod ring;
pub mod schur;

pub use error::{Error, Result};
pub use group::{Group, GroupElement, GroupKind, GroupTable};
pub use ring::RingElement;
pub use schur::{closure, SchurPartition, SchurViolation, StructureConstants};
