//! Tableau models of crystal bases.
//!
//! The crate provides:
//!
//! * letter crystals, weights and Cartan data for the families
//!   `A_n`, `B_n`, `C_n`, `D_{n+1}` and `G_2` ([`lie`]);
//! * Young tableaux with Kashiwara operators computed through the
//!   far-eastern reading and the signature rule, and breadth-first
//!   generation of highest-weight crystals ([`tableau`]);
//! * the crystal `B(∞)` realized by marginally large tableaux ([`binfty`]);
//! * the tensor-product realization of `B(∞)` by integer tuples, and the
//!   explicit bijections with marginally large tableaux ([`cliff`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod binfty;
pub mod cliff;
mod error;
pub mod graph;
pub mod lie;
pub mod tableau;

pub use binfty::{InfinityCrystal, MarginallyLarge};
pub use cliff::{CliffElement, CliffModel};
pub use error::Error;
pub use graph::{Crystal, CrystalGraph, Edge, Node};
pub use lie::{Direction, Family, Letter, TypeSpec, Weight};
pub use tableau::{HighestWeightCrystal, Tableau};

pub type Result<T, E = Error> = core::result::Result<T, E>;
