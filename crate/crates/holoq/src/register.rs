//! Minimal n-qubit statevector simulator: sequentially applied pairwise
//! four-level holonomic gates on a multi-qubit register.
//!
//! Bit-order convention: qubit 0 is the most significant bit of the amplitude
//! index.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::holonomy::{Gate4, GateRecord};
#[cfg(test)]
use crate::holonomy::Encoding;

const MAX_QUBITS: usize = 12;

/// Normalized state of an n-qubit register (1 <= n <= 12).
#[derive(Clone, Debug)]
pub struct StateVector {
    n: usize,
    amps: Vec<C64>,
}

impl StateVector {
    /// |0...0>
    pub fn zero_state(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS {
            return Err(Error::InvalidDimension(format!(
                "register size {n} outside 1..={MAX_QUBITS}"
            )));
        }
        let mut amps = vec![C64::new(0.0, 0.0); 1 << n];
        amps[0] = C64::new(1.0, 0.0);
        Ok(Self { n, amps })
    }

    pub fn from_amplitudes(n: usize, amps: Vec<C64>) -> Result<Self> {
        if n == 0 || n > MAX_QUBITS || amps.len() != 1 << n {
            return Err(Error::InvalidDimension(format!(
                "{} amplitudes for {n} qubits",
                amps.len()
            )));
        }
        let sv = Self { n, amps };
        let norm = sv.norm();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::InvalidInput(format!("state norm {norm} != 1")));
        }
        Ok(sv)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Bit of qubit `j` in amplitude index `idx` (qubit 0 is the MSB).
    fn bit(&self, idx: usize, j: usize) -> usize {
        (idx >> (self.n - 1 - j)) & 1
    }

    /// Von Neumann entropy (nats) of the reduced state of one qubit.
    pub fn entanglement_entropy(&self, qubit: usize) -> Result<f64> {
        if qubit >= self.n {
            return Err(Error::IndexOutOfRange {
                index: qubit,
                n: self.n,
            });
        }
        // 2x2 reduced density matrix
        let mut rho = [[C64::new(0.0, 0.0); 2]; 2];
        for (idx, amp) in self.amps.iter().enumerate() {
            let b = self.bit(idx, qubit);
            for bp in 0..2 {
                let idx2 = idx ^ ((b ^ bp) << (self.n - 1 - qubit));
                rho[b][bp] += amp * self.amps[idx2].conj();
            }
        }
        let tr = rho[0][0].re + rho[1][1].re;
        let det = (rho[0][0] * rho[1][1] - rho[0][1] * rho[1][0]).re;
        let disc = (tr * tr - 4.0 * det).max(0.0).sqrt();
        let mut s = 0.0;
        for lam in [(tr + disc) / 2.0, (tr - disc) / 2.0] {
            if lam > 1e-15 {
                s -= lam * lam.ln();
            }
        }
        Ok(s)
    }
}

/// Apply a 4x4 gate to qubits (p, q). For the ab_cd encoding p is the control
/// and q the target; p is the more significant bit of the gate index either
/// way, so a control_target_swapped gate on (p, q) acts like the ab_cd gate
/// on (q, p).
pub fn apply_gate(sv: &StateVector, p: usize, q: usize, gate: &Gate4) -> Result<StateVector> {
    let n = sv.n;
    for &idx in [p, q].iter() {
        if idx >= n {
            return Err(Error::IndexOutOfRange { index: idx, n });
        }
    }
    if p == q {
        return Err(Error::InvalidInput(format!("gate on identical qubits ({p}, {q})")));
    }
    let bp = 1usize << (n - 1 - p);
    let bq = 1usize << (n - 1 - q);
    let mut amps = sv.amps.clone();
    for idx in 0..amps.len() {
        if idx & bp != 0 || idx & bq != 0 {
            continue;
        }
        let idxs = [idx, idx | bq, idx | bp, idx | bp | bq];
        let old = idxs.map(|i| sv.amps[i]);
        for (r, &i) in idxs.iter().enumerate() {
            let mut acc = C64::new(0.0, 0.0);
            for (c, &a) in old.iter().enumerate() {
                acc += gate.u[(r, c)] * a;
            }
            amps[i] = acc;
        }
    }
    Ok(StateVector { n, amps })
}

/// One schedule step: a pairwise gate on qubits (p, q).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScheduleStep {
    pub p: usize,
    pub q: usize,
    pub gate_ref: GateRef,
}

/// A gate referenced either inline or by file path.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GateRef {
    Path(String),
    Inline(GateRecord),
}

impl GateRef {
    pub fn resolve(&self) -> Result<Gate4> {
        match self {
            Self::Inline(rec) => rec.gate4(),
            Self::Path(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    Error::InvalidInput(format!("cannot read gate file {path}: {e}"))
                })?;
                let rec: GateRecord = serde_json::from_str(&text)
                    .map_err(|e| Error::InvalidInput(format!("bad gate JSON in {path}: {e}")))?;
                rec.gate4()
            }
        }
    }
}

/// Ordered list of pairwise gates; exactly one pair is active per step.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Schedule {
    pub n: usize,
    pub steps: Vec<ScheduleStep>,
}

/// Apply the schedule steps in order.
pub fn run_schedule(sv: &StateVector, schedule: &Schedule) -> Result<StateVector> {
    if schedule.n != sv.n {
        return Err(Error::InvalidDimension(format!(
            "schedule is for {} qubits, state has {}",
            schedule.n, sv.n
        )));
    }
    let mut state = sv.clone();
    for step in &schedule.steps {
        let gate = step.gate_ref.resolve()?;
        state = apply_gate(&state, step.p, step.q, &gate)?;
    }
    Ok(state)
}
