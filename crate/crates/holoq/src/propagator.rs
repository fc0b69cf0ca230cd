//! Independent time-ordered evolution oracle for Hamiltonians of the form
//! H(t) = hbar Omega(t) H0 + H1, used to validate the closed-form evolution
//! and to compute perturbed gates.

use crate::error::{Error, Result};
use crate::holonomy::{simpson, Pulse};
use crate::matkit::{self, CMat, TOL_HERMITIAN};

/// CODATA hbar expressed in meV ps.
pub const HBAR_MEV_PS: f64 = 0.6582119569;

/// A driven Hamiltonian hbar Omega(t) h0 + h1 with h0 dimensionless and h1 in
/// meV. `hbar` converts the static term into the same angular-frequency units
/// (meV ps by default).
#[derive(Clone, Debug)]
pub struct DrivenHamiltonian {
    pub h0: CMat,
    pub h1: CMat,
    pub pulse: Pulse,
    pub hbar: f64,
}

impl DrivenHamiltonian {
    pub fn new(h0: CMat, h1: CMat, pulse: Pulse) -> Result<Self> {
        if h0.dim() != h1.dim() {
            return Err(Error::InvalidDimension(format!(
                "h0 has dimension {} but h1 has dimension {}",
                h0.dim(),
                h1.dim()
            )));
        }
        for h in [&h0, &h1] {
            let asym = h.sub(&h.adjoint()).max_abs();
            if asym > TOL_HERMITIAN {
                return Err(Error::NotHermitian(asym));
            }
        }
        Ok(Self {
            h0,
            h1,
            pulse,
            hbar: HBAR_MEV_PS,
        })
    }
}

fn product_integrate(dh: &DrivenHamiltonian, steps: usize) -> Result<CMat> {
    let tau = dh.pulse.tau();
    let dt = tau / steps as f64;
    let static_term = dh.h1.scale((1.0 / dh.hbar).into());
    let mut u = CMat::identity(dh.h0.dim());
    for k in 0..steps {
        let t_mid = (k as f64 + 0.5) * dt;
        let h = dh.h0.scale(dh.pulse.omega_at(t_mid).into()).add(&static_term);
        u = matkit::expi(&h, dt)?.mul(&u);
    }
    Ok(u)
}

/// Time-ordered propagator over [0, tau] by a midpoint exponential-product
/// rule, doubling the step count until successive results agree within `tol`.
pub fn evolve(dh: &DrivenHamiltonian, tol: f64) -> Result<CMat> {
    const MAX_DOUBLINGS: u32 = 22;
    let mut steps = 16usize;
    let mut prev = product_integrate(dh, steps)?;
    let mut residual = f64::INFINITY;
    for _ in 0..MAX_DOUBLINGS {
        steps *= 2;
        let next = product_integrate(dh, steps)?;
        residual = next.sub(&prev).fro_norm();
        if residual < tol {
            return Ok(next);
        }
        prev = next;
        if steps >= (1 << 22) {
            break;
        }
    }
    Err(Error::NoConvergence {
        doublings: MAX_DOUBLINGS,
        residual,
    })
}

/// Composite Simpson quadrature of Omega over [0, tau].
pub fn pulse_area(pulse: &Pulse, steps: usize) -> f64 {
    simpson(|t| pulse.omega_at(t), 0.0, pulse.tau(), steps.max(16))
}
