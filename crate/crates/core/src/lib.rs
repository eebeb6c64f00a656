//! Excitons and cavity polaritons of ultracold atoms in a two-dimensional
//! optical lattice.
//!
//! Atoms sit one per site of a square lattice (Mott insulator). Resonant
//! dipole-dipole transfer turns the localized excitations into an exciton
//! band; placing the lattice inside a planar cavity mixes excitons and cavity
//! photons into upper and lower polaritons, observed through the linear
//! transmission, reflection and absorption of a weak probe.
//!
//! All quantities are SI internally, with energies as angular frequencies
//! (rad/s); see [`units`].

pub mod cavity;
pub mod error;
pub mod exciton;
pub mod interactions;
pub mod lattice;
pub mod peaks;
pub mod polariton;
pub mod scenario;
pub mod spectra;
pub mod units;

pub use error::{Error, Result};
