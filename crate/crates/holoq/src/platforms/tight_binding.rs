//! Four-dot tight-binding ring with Peierls phases.
//!
//! Single-electron Hamiltonian in the ordered spin-polarized basis
//! (site 1, site 3, site 2, site 4); the uniform Zeeman shift is a global
//! phase on this basis and is subtracted rather than simulated.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::holonomy::ControlBlock;
use crate::matkit::CMat;

/// Tight-binding ring parameters. Bond index k couples sites k+1 and k+2
/// (1-based, ring order 1-2-3-4-1). Peierls phases are in radians with the
/// e/hbar factor pre-applied; hop magnitudes and the Zeeman shift are in meV.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TightBindingSpec {
    pub hop_mag: [f64; 4],
    pub peierls: [f64; 4],
    pub flux: f64,
    #[serde(default)]
    pub zeeman_shift: f64,
}

impl TightBindingSpec {
    /// Complex hopping J_{k,k+1} = |t| e^{-i alpha} for bond index k (0-based).
    pub fn hopping(&self, k: usize) -> C64 {
        C64::from_polar(self.hop_mag[k], -self.peierls[k])
    }

    fn check_flux(&self) -> Result<()> {
        let sum: f64 = self.peierls.iter().sum();
        if (sum - self.flux).abs() > 1e-12 {
            return Err(Error::FluxMismatch {
                sum,
                flux: self.flux,
            });
        }
        Ok(())
    }
}

/// Assemble the single-electron ring Hamiltonian in basis order
/// (site 1, site 3, site 2, site 4) and extract the coupling block
/// T = [[J12, J41*], [J23*, J34]].
pub fn tb_build(spec: &TightBindingSpec) -> Result<(CMat, ControlBlock)> {
    spec.check_flux()?;
    let j12 = spec.hopping(0);
    let j23 = spec.hopping(1);
    let j34 = spec.hopping(2);
    let j41 = spec.hopping(3);
    let t = CMat::two([[j12, j41.conj()], [j23.conj(), j34]]);
    let cb = ControlBlock::new(t)?;
    let zero = CMat::zeros(2);
    let h4 = CMat::from_blocks2(&zero, cb.t(), &cb.t().adjoint(), &zero);
    Ok((h4, cb))
}

/// Gauge transformation: peierls_k <- peierls_k + lambda_{k+1} - lambda_k
/// (ring order, indices mod 4); the flux is unchanged.
pub fn tb_gauge_transform(spec: &TightBindingSpec, lambda: [f64; 4]) -> TightBindingSpec {
    let mut peierls = spec.peierls;
    for k in 0..4 {
        peierls[k] += lambda[(k + 1) % 4] - lambda[k];
    }
    TightBindingSpec {
        hop_mag: spec.hop_mag,
        peierls,
        flux: spec.flux,
        zeeman_shift: spec.zeeman_shift,
    }
}

/// Gauge matrices relating holonomies before and after `tb_gauge_transform`:
/// U'(C_l) = Gamma_l U(C_l) Gamma_l^dag with Gamma_0 acting on sites (1, 3)
/// and Gamma_1 on sites (2, 4).
pub fn gauge_gammas(lambda: [f64; 4]) -> (CMat, CMat) {
    let g = |a: f64, b: f64| {
        CMat::two([
            [C64::from_polar(1.0, a), C64::new(0.0, 0.0)],
            [C64::new(0.0, 0.0), C64::from_polar(1.0, b)],
        ])
    };
    (g(lambda[0], lambda[2]), g(lambda[1], lambda[3]))
}
