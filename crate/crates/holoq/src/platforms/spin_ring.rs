//! Four-spin-1/2 ring with XY exchange and z-axis Dzialoshinski-Moriya
//! coupling, plus the brute-force 16x16 oracle and the projection onto the
//! S^z_total = 1 invariant subspace.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::holonomy::ControlBlock;
use crate::matkit::CMat;

/// Spin-ring parameters in meV. Bond index k couples sites k+1 and k+2
/// (1-based, ring order 1-2-3-4-1).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpinRingSpec {
    pub j: [f64; 4],
    pub dz: [f64; 4],
}

/// Ordered invariant-subspace basis: down spin at sites 1, 3, 2, 4 with all
/// other spins up. Site 1 is the most significant bit, up = 0.
pub const SUBSPACE_INDICES: [usize; 4] = [8, 2, 4, 1];

fn spin_op(site: usize, op: &CMat) -> CMat {
    let id = CMat::identity(2);
    let mut out: Option<CMat> = None;
    for s in 0..4 {
        let factor = if s == site { op } else { &id };
        out = Some(match out {
            None => factor.clone(),
            Some(acc) => acc.kron(factor),
        });
    }
    out.unwrap()
}

fn sx() -> CMat {
    CMat::pauli_x().scale(C64::new(0.5, 0.0))
}

fn sy() -> CMat {
    CMat::pauli_y().scale(C64::new(0.5, 0.0))
}

/// Full four-spin Hamiltonian
/// sum_k [ J_k (sx_k sx_{k+1} + sy_k sy_{k+1}) + Dz_k (sx_k sy_{k+1} - sy_k sx_{k+1}) ]
/// on the 16-dimensional product space.
pub fn spin_build(spec: &SpinRingSpec) -> CMat {
    let mut h = CMat::zeros(16);
    for k in 0..4 {
        let a = k;
        let b = (k + 1) % 4;
        let (sxa, sya) = (spin_op(a, &sx()), spin_op(a, &sy()));
        let (sxb, syb) = (spin_op(b, &sx()), spin_op(b, &sy()));
        let xy = sxa.mul(&sxb).add(&sya.mul(&syb));
        let dm = sxa.mul(&syb).sub(&sya.mul(&sxb));
        h = h
            .add(&xy.scale(C64::new(spec.j[k], 0.0)))
            .add(&dm.scale(C64::new(spec.dz[k], 0.0)));
    }
    h
}

/// Number of up spins determines the S^z_total sector of a basis state.
pub fn sz_sector(index: usize) -> i32 {
    // bits set mean down spins
    4 - 2 * (index.count_ones() as i32)
}

/// Extract the 4x4 block on the ordered invariant-subspace basis together with
/// the largest matrix element connecting the subspace to its complement.
pub fn spin_block(h16: &CMat) -> (CMat, f64) {
    let in_subspace = |i: usize| SUBSPACE_INDICES.contains(&i);
    let mut leakage: f64 = 0.0;
    for &m in &SUBSPACE_INDICES {
        for i in 0..16 {
            if !in_subspace(i) {
                leakage = leakage.max(h16[(m, i)].norm()).max(h16[(i, m)].norm());
            }
        }
    }
    let mut block = CMat::zeros(4);
    for (r, &m) in SUBSPACE_INDICES.iter().enumerate() {
        for (c, &n) in SUBSPACE_INDICES.iter().enumerate() {
            block[(r, c)] = h16[(m, n)];
        }
    }
    (block, leakage)
}

/// Project onto the S^z_total = 1 subspace and build the coupling block.
/// Fails with LeakageDetected if the subspace is not invariant, and with
/// SingularT if the projected coupling is not gate-capable.
pub fn spin_project(h16: &CMat) -> Result<(ControlBlock, f64)> {
    let (block, leakage) = spin_block(h16);
    if leakage >= 1e-13 {
        return Err(Error::LeakageDetected(leakage));
    }
    let t = block.block2(0, 1);
    Ok((ControlBlock::new(t)?, leakage))
}
