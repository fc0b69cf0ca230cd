//! Browser bindings: a small JSON-in/JSON-out surface over the core library
//! for the static demo page. Every function returns a JSON string with either
//! the result or an `{"error": ...}` object, so the page never throws.

use std::f64::consts::PI;
use wasm_bindgen::prelude::*;

use holoq::holonomy::{
    conditional_gate, holonomy_pair, schmidt_rank, synth_entangling, synth_one_qubit, Encoding,
    GateRecord, PulseShape,
};
use holoq::matkit::CMat;
use holoq::platforms::{linspace, smm_fidelity_sweep, SmmSpec};

fn err_json(kind: &str, message: String) -> String {
    serde_json::json!({"error": {"kind": kind, "message": message}}).to_string()
}

fn gate_json(cb: &holoq::ControlBlock, a_tau: f64) -> String {
    match holonomy_pair(cb, a_tau) {
        Ok(hr) => {
            let gate = conditional_gate(&hr, Encoding::AbCd);
            let record = GateRecord::new(cb, a_tau, &gate);
            let rank = schmidt_rank(&gate);
            serde_json::json!({
                "T": record.t,
                "a_tau": record.a_tau,
                "encoding": record.encoding,
                "gate": record.gate,
                "class": format!("{:?}", hr.class),
                "parity": hr.parity,
                "schmidt_rank": rank,
                "entangling": rank > 1,
            })
            .to_string()
        }
        Err(e) => err_json("not_cyclic", e.to_string()),
    }
}

/// One-qubit holonomic gate for a rotation axis (theta, phi) in radians.
#[wasm_bindgen]
pub fn synthesize_axis(theta: f64, phi: f64) -> String {
    let (cb, a_tau) = synth_one_qubit(theta, phi);
    gate_json(&cb, a_tau)
}

/// Conditional two-qubit gate from two named unitaries
/// (I, X, Y, Z, expYquarter) acting as the subspace frames.
#[wasm_bindgen]
pub fn synthesize_entangler(u0: &str, u1: &str) -> String {
    let named = |name: &str| -> Option<CMat> {
        let s = 1.0 / 2.0_f64.sqrt();
        match name {
            "I" => Some(CMat::identity(2)),
            "X" => Some(CMat::pauli_x()),
            "Y" => Some(CMat::pauli_y()),
            "Z" => Some(CMat::pauli_z()),
            "expYquarter" => Some(CMat::from_real(2, &[s, -s, s, s])),
            _ => None,
        }
    };
    let (u0, u1) = match (named(u0), named(u1)) {
        (Some(a), Some(b)) => (a, b),
        _ => return err_json("invalid_input", "unknown unitary name".into()),
    };
    match synth_entangling(&u0, &u1) {
        Ok((cb, a_tau)) => gate_json(&cb, a_tau),
        Err(e) => err_json("synthesis_failed", e.to_string()),
    }
}

/// Fidelity surface of the reference magnet drive under a square pi pulse,
/// over [0, dso_max] meV x [tau_min, tau_max] ps. Row-major over dso then tau.
#[wasm_bindgen]
pub fn fidelity_surface(
    dso_max: f64,
    tau_min: f64,
    tau_max: f64,
    n_dso: usize,
    n_tau: usize,
) -> String {
    if !(dso_max >= 0.0) || !(tau_min > 0.0) || !(tau_max >= tau_min) {
        return err_json("invalid_input", "need dso_max >= 0 and 0 < tau_min <= tau_max".into());
    }
    if n_dso == 0 || n_tau == 0 || n_dso * n_tau > 40_000 {
        return err_json("invalid_input", "grid must be nonempty and at most 40000 cells".into());
    }
    let spec = SmmSpec::fig1(0.0);
    let dso = linspace(0.0, dso_max, n_dso);
    let tau = linspace(tau_min, tau_max, n_tau);
    match smm_fidelity_sweep(&spec, PulseShape::Square, PI, &dso, &tau) {
        Ok(grid) => serde_json::json!({
            "delta_so_mev": grid.delta_so_mev,
            "tau_ps": grid.tau_ps,
            "fidelity": grid.fidelity,
        })
        .to_string(),
        Err(e) => err_json("sweep_failed", e.to_string()),
    }
}
