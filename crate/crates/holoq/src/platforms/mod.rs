//! Builders for the three physical realizations, each mapping device
//! parameters to a coupling block, plus brute-force oracles for the subspace
//! and gauge claims and the SMM fidelity machinery.

mod fidelity;
mod smm;
mod spin_ring;
mod tight_binding;

pub use fidelity::{gate_fidelity, linspace, smm_fidelity_sweep, smm_perturbed_gate, FidelityGrid};
pub use smm::{smm_assemble_eq10, smm_build, SmmSpec};
pub use spin_ring::{spin_block, spin_build, spin_project, sz_sector, SpinRingSpec, SUBSPACE_INDICES};
pub use tight_binding::{gauge_gammas, tb_build, tb_gauge_transform, TightBindingSpec};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::holonomy::ControlBlock;

/// Parameters of one physical realization, as read from a device JSON file.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum DeviceSpec {
    TightBinding(TightBindingSpec),
    SpinRing(SpinRingSpec),
    Smm(SmmSpec),
}

impl DeviceSpec {
    /// Map the device parameters to its coupling block.
    pub fn control_block(&self) -> Result<ControlBlock> {
        match self {
            Self::TightBinding(spec) => tb_build(spec).map(|(_, cb)| cb),
            Self::SpinRing(spec) => spin_project(&spin_build(spec)).map(|(cb, _)| cb),
            Self::Smm(spec) => smm_build(spec).map(|(cb, _)| cb),
        }
    }
}
