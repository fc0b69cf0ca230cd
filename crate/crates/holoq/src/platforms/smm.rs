//! Triangular single-molecule magnet: effective four-level Hamiltonian on the
//! chirality/spin ground-state manifold, in the ordered basis
//! (|+1,+1/2>, |-1,-1/2>, |+1,-1/2>, |-1,+1/2>).

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::holonomy::ControlBlock;
use crate::matkit::CMat;
use crate::propagator::HBAR_MEV_PS;

fn default_hbar() -> f64 {
    HBAR_MEV_PS
}

/// SMM drive parameters: dimensionless field scale factors
/// B_k = g_par B_k / (hbar Omega) and E_k = d E_k / (hbar Omega), the
/// spin-orbit splitting Delta_SO in meV, and hbar in meV ps.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SmmSpec {
    pub b_x: f64,
    pub b_y: f64,
    pub e_x: f64,
    pub e_y: f64,
    pub delta_so: f64,
    #[serde(default = "default_hbar")]
    pub hbar: f64,
}

impl SmmSpec {
    /// Fig. 1 drive: g_par (B_x - i B_y) = 3 hbar Omega and
    /// d (E_x - i E_y) = -(i/2) hbar Omega, giving T = [[3/2, -i/2], [i/2, 3/2]].
    pub fn fig1(delta_so: f64) -> Self {
        Self {
            b_x: 3.0,
            b_y: 0.0,
            e_x: 0.0,
            e_y: 0.5,
            delta_so,
            hbar: HBAR_MEV_PS,
        }
    }

    /// The dimensionless coupling block: T11 = T22* = (B_x - i B_y)/2,
    /// T12 = T21* = E_x - i E_y.
    pub fn coupling(&self) -> CMat {
        let t11 = C64::new(self.b_x / 2.0, -self.b_y / 2.0);
        let t12 = C64::new(self.e_x, -self.e_y);
        CMat::two([[t11, t12], [t12.conj(), t11.conj()]])
    }

    /// Static perturbation (Delta_SO / 2) diag(1, 1, -1, -1) in meV.
    pub fn perturbation(&self) -> CMat {
        let mut p = CMat::zeros(4);
        for i in 0..4 {
            let sign = if i < 2 { 1.0 } else { -1.0 };
            p[(i, i)] = C64::new(sign * self.delta_so / 2.0, 0.0);
        }
        p
    }
}

/// Build the coupling block and the static spin-orbit perturbation.
pub fn smm_build(spec: &SmmSpec) -> Result<(ControlBlock, CMat)> {
    Ok((ControlBlock::new(spec.coupling())?, spec.perturbation()))
}

/// Independent assembly of the effective Hamiltonian from its operator form
/// Delta_SO C_z S_z + E . C_par + B . S (dimensionless, divided by hbar Omega
/// at Omega = 1), re-ordered from the chirality x spin product basis into the
/// block basis. Used as an oracle against the block form.
pub fn smm_assemble_eq10(spec: &SmmSpec) -> CMat {
    let id = CMat::identity(2);
    let half = C64::new(0.5, 0.0);
    // chirality is the first tensor factor (Pauli operators), spin the second
    // (spin-1/2 operators); product order (+1,+1/2), (+1,-1/2), (-1,+1/2), (-1,-1/2)
    let cz_sz = CMat::pauli_z().kron(&CMat::pauli_z().scale(half));
    let cx = CMat::pauli_x().kron(&id);
    let cy = CMat::pauli_y().kron(&id);
    let sx = id.kron(&CMat::pauli_x().scale(half));
    let sy = id.kron(&CMat::pauli_y().scale(half));
    let delta = spec.delta_so / spec.hbar;
    let h = cz_sz
        .scale(C64::new(delta, 0.0))
        .add(&cx.scale(C64::new(spec.e_x, 0.0)))
        .add(&cy.scale(C64::new(spec.e_y, 0.0)))
        .add(&sx.scale(C64::new(spec.b_x, 0.0)))
        .add(&sy.scale(C64::new(spec.b_y, 0.0)));
    // re-order into (|+1,+1/2>, |-1,-1/2>, |+1,-1/2>, |-1,+1/2>)
    h.permuted(&[0, 3, 1, 2])
}
