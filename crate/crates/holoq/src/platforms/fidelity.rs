//! Gate fidelity and the SMM fidelity sweep over (Delta_SO, tau).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::holonomy::{block_hamiltonian, closed_form_evolution, Pulse, PulseShape};
use crate::matkit::{self, CMat};
use crate::propagator::{self, DrivenHamiltonian};

use super::smm::{smm_build, SmmSpec};

/// Phase-sensitive fidelity F = 1/2 + (1/8) Re Tr(w^dag v) between 4x4 gates.
pub fn gate_fidelity(w: &CMat, v: &CMat) -> Result<f64> {
    for u in [w, v] {
        if !u.is_unitary(1e-8) {
            let resid = u
                .adjoint()
                .mul(u)
                .sub(&CMat::identity(u.dim()))
                .max_abs();
            return Err(Error::NotUnitary(resid));
        }
    }
    Ok(0.5 + w.adjoint().mul(v).trace().re / 8.0)
}

/// Sampled F(Delta_SO, tau) surface with the pulse and target-gate provenance.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FidelityGrid {
    pub spec: SmmSpec,
    pub pulse_shape: PulseShape,
    pub area: f64,
    /// Ideal (Delta_SO = 0) gate, row-major [re, im] pairs.
    pub target: Vec<[f64; 2]>,
    pub delta_so_mev: Vec<f64>,
    pub tau_ps: Vec<f64>,
    /// Row-major over (delta_so, tau).
    pub fidelity: Vec<f64>,
}

impl FidelityGrid {
    pub fn value(&self, i_dso: usize, i_tau: usize) -> f64 {
        self.fidelity[i_dso * self.tau_ps.len() + i_tau]
    }

    /// CSV with header `delta_so_mev,tau_ps,fidelity`, rows ordered by
    /// delta_so then tau, 12 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("delta_so_mev,tau_ps,fidelity\n");
        for (i, &dso) in self.delta_so_mev.iter().enumerate() {
            for (j, &tau) in self.tau_ps.iter().enumerate() {
                out.push_str(&format!(
                    "{},{},{:.12}\n",
                    fmt_sig(dso),
                    fmt_sig(tau),
                    self.value(i, j)
                ));
            }
        }
        out
    }
}

fn fmt_sig(x: f64) -> String {
    let s = format!("{:.12e}", x);
    // prefer plain notation when it is exact enough
    let plain = format!("{}", x);
    if plain.parse::<f64>() == Ok(x) {
        plain
    } else {
        s
    }
}

/// Gate realized by the perturbed Hamiltonian
/// H(t) = hbar Omega(t) H0 + (Delta_SO/2) diag(I, -I) over [0, tau].
/// Square pulses reduce to a single exponential; other shapes use the
/// time-ordered oracle.
pub fn smm_perturbed_gate(
    spec: &SmmSpec,
    shape: PulseShape,
    area: f64,
    delta_so: f64,
    tau: f64,
) -> Result<CMat> {
    let perturbed = SmmSpec {
        delta_so,
        ..spec.clone()
    };
    let (cb, pert) = smm_build(&perturbed)?;
    let h0 = block_hamiltonian(&cb);
    match shape {
        PulseShape::Square => {
            let omega = area / tau;
            let htot = h0
                .scale(omega.into())
                .add(&pert.scale((1.0 / spec.hbar).into()));
            matkit::expi(&htot, tau)
        }
        _ => {
            let pulse = Pulse::new(shape, tau, area)?;
            let mut dh = DrivenHamiltonian::new(h0, pert, pulse)?;
            dh.hbar = spec.hbar;
            propagator::evolve(&dh, 1e-10)
        }
    }
}

/// Sweep the fidelity surface F(Delta_SO, tau) for an SMM device. The ideal
/// gate W is the exact Delta_SO = 0 gate at the same pulse area, overall sign
/// included.
pub fn smm_fidelity_sweep(
    spec: &SmmSpec,
    shape: PulseShape,
    area: f64,
    delta_so_grid: &[f64],
    tau_grid: &[f64],
) -> Result<FidelityGrid> {
    let (cb, _) = smm_build(spec)?;
    let target = closed_form_evolution(&cb, area);
    let mut fidelity = Vec::with_capacity(delta_so_grid.len() * tau_grid.len());
    for &dso in delta_so_grid {
        for &tau in tau_grid {
            if !(tau > 0.0) {
                return Err(Error::InvalidInput(format!("tau = {tau} must be positive")));
            }
            let v = smm_perturbed_gate(spec, shape, area, dso, tau)?;
            fidelity.push(gate_fidelity(&target, &v)?);
        }
    }
    Ok(FidelityGrid {
        spec: spec.clone(),
        pulse_shape: shape,
        area,
        target: target.entries().iter().map(|e| [e.re, e.im]).collect(),
        delta_so_mev: delta_so_grid.to_vec(),
        tau_ps: tau_grid.to_vec(),
        fidelity,
    })
}

/// Evenly spaced grid, inclusive of both endpoints.
pub fn linspace(start: f64, stop: f64, count: usize) -> Vec<f64> {
    match count {
        0 => vec![],
        1 => vec![start],
        _ => (0..count)
            .map(|i| start + (stop - start) * i as f64 / (count - 1) as f64)
            .collect(),
    }
}
