//! Non-adiabatic holonomic gate synthesis for four-level block Hamiltonians.
//!
//! The core objects are a 2x2 off-diagonal coupling block `T` (wrapped in
//! [`holonomy::ControlBlock`]), the closed-form cyclic evolution it generates,
//! and the pair of holonomic gates acting on the two code subspaces. Three
//! device builders (tight-binding ring, spin ring, single-molecule magnet)
//! map physical parameters to coupling blocks, and a small state-vector
//! register composes the resulting two-qubit gates.

pub mod error;
pub mod holonomy;
pub mod matkit;
pub mod platforms;
pub mod propagator;
pub mod register;
pub mod verify;

pub use error::{Error, Result};
pub use holonomy::{ControlBlock, Encoding, Gate4, GateRecord, HolonomyClass, Pulse, PulseShape};
pub use matkit::CMat;
pub use platforms::{DeviceSpec, FidelityGrid};
pub use propagator::HBAR_MEV_PS;
pub use register::{Schedule, StateVector};
