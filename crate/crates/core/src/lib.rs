//! Simulation and design toolkit for a microwave-to-optical photon converter
//! built from an erbium-doped crystal inside a microwave and an optical
//! resonator.
//!
//! The library is organized around the stages of the device model:
//!
//! - [`units`] / [`model`]: unit-annotated configuration ingestion and the
//!   validated domain types shared by every other module.
//! - [`adiabatic`]: the effective photon-photon coupling obtained by
//!   eliminating the atomic excited states, plus ensemble sampling and
//!   adiabaticity diagnostics.
//! - [`scattering`]: the frequency-domain two-port solution — scattering
//!   matrix, conversion efficiency, impedance matching and bandwidth.
//! - [`broadening`]: the spectroscopic prefactor integrated over the
//!   inhomogeneous detuning distributions.
//! - [`geometry`]: mode functions, mode volumes and the triple-overlap
//!   filling factor.
//! - [`design`]: the impedance-matching ratio, feasibility sweeps and
//!   constrained drive optimization.
//! - [`oracle`]: brute-force single-excitation diagonalization of the full
//!   Hamiltonian, used to validate the effective model.

pub mod adiabatic;
pub mod broadening;
pub mod constants;
pub mod design;
pub mod geometry;
pub mod model;
pub mod numerics;
pub mod oracle;
pub mod scattering;
pub mod units;

pub use model::{DeviceConfig, ModelError};
