//! Runtime verification suite: every cross-module invariant as a named,
//! seedable check. The CLI `verify` command runs all of them; the acceptance
//! test target asserts them one by one.

use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

use crate::holonomy::{
    axis_gate, axis_unit, block_hamiltonian, closed_form_evolution, conditional_gate,
    find_cycle_area, holonomy_pair, plan_su2, schmidt_rank, synth_entangling, synth_one_qubit,
    ControlBlock, Encoding, Pulse, PulseShape,
};
use crate::matkit::{self, CMat};
use crate::platforms::{
    gate_fidelity, gauge_gammas, smm_fidelity_sweep, spin_block, spin_build, tb_build,
    tb_gauge_transform, SmmSpec, SpinRingSpec, TightBindingSpec,
};
use crate::propagator::{evolve, DrivenHamiltonian};
use crate::register::{apply_gate, StateVector};

/// Outcome of one named invariant check.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn report(name: &'static str, passed: bool, detail: String) -> CheckReport {
    CheckReport {
        name,
        passed,
        detail,
    }
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn random_control_block(rng: &mut impl Rng) -> ControlBlock {
    loop {
        let t = CMat::new(
            2,
            (0..4)
                .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect(),
        )
        .unwrap();
        if let Ok(cb) = ControlBlock::new(t) {
            return cb;
        }
    }
}

pub fn random_unitary2(rng: &mut impl Rng) -> CMat {
    let n = axis_unit(rng.gen_range(0.0..PI), rng.gen_range(0.0..2.0 * PI));
    let lam = rng.gen_range(0.0..2.0 * PI);
    CMat::identity(2)
        .scale(c((lam / 2.0).cos(), 0.0))
        .sub(&axis_gate(n).scale(c(0.0, (lam / 2.0).sin())))
}

/// A control block whose singular-value ratio is rational by construction,
/// hence cyclic at a_tau = q pi / beta.
pub fn random_cyclic_control_block(rng: &mut impl Rng) -> (ControlBlock, f64) {
    let p = rng.gen_range(1..=4u32);
    let q = rng.gen_range(1..=4u32);
    let (hi, lo) = if p >= q { (p, q) } else { (q, p) };
    let u0 = random_unitary2(rng);
    let u1 = random_unitary2(rng);
    let scale = rng.gen_range(0.5..2.0);
    let d = CMat::from_real(2, &[hi as f64 * scale, 0.0, 0.0, lo as f64 * scale]);
    let t = u0.mul(&d).mul(&u1.adjoint());
    let cb = ControlBlock::new(t).expect("positive diagonal is invertible");
    let g = gcd(hi as u64, lo as u64);
    let a_tau = (lo as u64 / g) as f64 * PI / (lo as f64 * scale);
    (cb, a_tau)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Eq-2 closed form against the exponential oracle, 200 random couplings.
pub fn check_closed_form_oracle(seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..200 {
        let cb = random_control_block(&mut rng);
        let a = rng.gen_range(0.0..4.0 * PI);
        let u = closed_form_evolution(&cb, a);
        let oracle = matkit::expi(&block_hamiltonian(&cb), a).unwrap();
        worst = worst.max(u.sub(&oracle).fro_norm());
    }
    report(
        "closed_form_oracle_equivalence",
        worst < 1e-9,
        format!("worst Frobenius residual {worst:.3e} (tol 1e-9, 200 samples)"),
    )
}

/// One-qubit recipe: synthesized conditional gate equals I x (n.R).
pub fn check_one_qubit_universality(seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let theta = rng.gen_range(0.0..PI);
        let phi = rng.gen_range(0.0..2.0 * PI);
        let (cb, a_tau) = synth_one_qubit(theta, phi);
        let hr = holonomy_pair(&cb, a_tau).unwrap();
        let gate = conditional_gate(&hr, Encoding::AbCd);
        let want = CMat::identity(2).kron(&axis_gate(axis_unit(theta, phi)));
        worst = worst.max(gate.u.sub(&want).max_abs());
    }
    report(
        "one_qubit_universality",
        worst < 1e-10,
        format!("worst entry deviation {worst:.3e} (tol 1e-10, 100 samples)"),
    )
}

/// Two-gate SU(2) plan reproduces random targets up to global phase.
pub fn check_su2_plan(seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let target = random_unitary2(&mut rng);
        let (n, m) = plan_su2(&target).unwrap();
        // realize both axes as holonomic gates and compose on the target qubit
        let gate = |axis: [f64; 3]| {
            let theta = axis[2].clamp(-1.0, 1.0).acos();
            let phi = axis[1].atan2(axis[0]);
            let (cb, a_tau) = synth_one_qubit(theta, phi);
            holonomy_pair(&cb, a_tau).unwrap().u_c0
        };
        let product = gate(m).mul(&gate(n));
        // strip a possible global phase before comparing
        let mut phase = c(1.0, 0.0);
        'outer: for i in 0..2 {
            for j in 0..2 {
                if target[(i, j)].norm() > 0.5 {
                    phase = product[(i, j)] / target[(i, j)];
                    break 'outer;
                }
            }
        }
        let resid = product.sub(&target.scale(phase)).fro_norm();
        worst = worst.max(resid);
    }
    report(
        "su2_two_gate_plan",
        worst < 1e-10,
        format!("worst residual up to phase {worst:.3e} (tol 1e-10, 100 samples)"),
    )
}

/// Entangling construction and the Schmidt-rank certifier.
pub fn check_entangling_certifier(_seed: u64) -> CheckReport {
    let (cb, a_tau) = synth_entangling(
        &CMat::identity(2),
        &CMat::identity(2)
            .scale(c((PI / 4.0).cos(), 0.0))
            .sub(&CMat::pauli_y().scale(c(0.0, (PI / 4.0).sin()))),
    )
    .unwrap();
    let zx = conditional_gate(&holonomy_pair(&cb, a_tau).unwrap(), Encoding::AbCd);
    let rank_zx = schmidt_rank(&zx);

    let (cb2, a2) = synth_entangling(&CMat::identity(2), &CMat::pauli_x()).unwrap();
    let zz = conditional_gate(&holonomy_pair(&cb2, a2).unwrap(), Encoding::AbCd);
    let rank_zz = schmidt_rank(&zz);
    report(
        "entangling_certifier",
        rank_zx == 2 && rank_zz == 1,
        format!("block-diag(Z,X) rank {rank_zx} (want 2), Z x Z rank {rank_zz} (want 1)"),
    )
}

/// Tight-binding structure, the singular zero-flux case, and gauge covariance
/// over 50 random gauges.
pub fn check_tb_gauge_covariance(seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let singular = TightBindingSpec {
        hop_mag: [1.0; 4],
        peierls: [0.0; 4],
        flux: 0.0,
        zeeman_shift: 0.0,
    };
    if tb_build(&singular).is_ok() {
        return report(
            "tb_structure_gauge_covariance",
            false,
            "zero-flux uniform hopping was not rejected as singular".into(),
        );
    }
    let spec = TightBindingSpec {
        hop_mag: [1.5, 0.5, 1.5, 0.5],
        peierls: [0.0; 4],
        flux: 0.0,
        zeeman_shift: 0.0,
    };
    let (h4, cb) = tb_build(&spec).unwrap();
    if h4.block2(0, 0).max_abs() != 0.0 || h4.block2(1, 1).max_abs() != 0.0 {
        return report(
            "tb_structure_gauge_covariance",
            false,
            "assembled Hamiltonian is not block-off-diagonal".into(),
        );
    }
    let cy = find_cycle_area(&cb, 64).unwrap();
    let hr = holonomy_pair(&cb, cy.a_tau).unwrap();
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let lambda = [(); 4].map(|_| rng.gen_range(-PI..PI));
        let gauged = tb_gauge_transform(&spec, lambda);
        let (_, cbg) = tb_build(&gauged).unwrap();
        let hrg = holonomy_pair(&cbg, cy.a_tau).unwrap();
        let (g0, g1) = gauge_gammas(lambda);
        let r0 = hrg
            .u_c0
            .sub(&g0.mul(&hr.u_c0).mul(&g0.adjoint()))
            .max_abs();
        let r1 = hrg
            .u_c1
            .sub(&g1.mul(&hr.u_c1).mul(&g1.adjoint()))
            .max_abs();
        worst = worst.max(r0).max(r1);
    }
    report(
        "tb_structure_gauge_covariance",
        worst < 1e-10,
        format!("worst covariance residual {worst:.3e} (tol 1e-10, 50 gauges)"),
    )
}

/// Spin-ring sector conservation and the projected coupling convention.
pub fn check_spin_ring_projection(seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let spec = SpinRingSpec {
            j: [(); 4].map(|_| rng.gen_range(-1.5..1.5)),
            dz: [(); 4].map(|_| rng.gen_range(-1.5..1.5)),
        };
        let h = spin_build(&spec);
        // cross-sector matrix elements
        for i in 0..16usize {
            for jdx in 0..16usize {
                let si = 4 - 2 * (i.count_ones() as i32);
                let sj = 4 - 2 * (jdx.count_ones() as i32);
                if si != sj {
                    worst = worst.max(h[(i, jdx)].norm());
                }
            }
        }
        let (block, leakage) = spin_block(&h);
        worst = worst.max(leakage);
        worst = worst.max(block.block2(0, 0).max_abs());
        worst = worst.max(block.block2(1, 1).max_abs());
        let t = block.block2(0, 1);
        let want = CMat::two([
            [
                c(spec.j[0] / 2.0, -spec.dz[0] / 2.0),
                c(spec.j[3] / 2.0, spec.dz[3] / 2.0),
            ],
            [
                c(spec.j[1] / 2.0, spec.dz[1] / 2.0),
                c(spec.j[2] / 2.0, -spec.dz[2] / 2.0),
            ],
        ]);
        worst = worst.max(t.sub(&want).max_abs());
    }
    report(
        "spin_ring_sector_and_projection",
        worst < 1e-13,
        format!("worst deviation {worst:.3e} (tol 1e-13, 20 random rings)"),
    )
}

/// Eq-10 operator assembly equals the block form for 100 random SMM specs.
pub fn check_smm_assembly(seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let spec = SmmSpec {
            b_x: rng.gen_range(-2.0..2.0),
            b_y: rng.gen_range(-2.0..2.0),
            e_x: rng.gen_range(-2.0..2.0),
            e_y: rng.gen_range(-2.0..2.0),
            delta_so: rng.gen_range(0.0..0.1),
            hbar: crate::propagator::HBAR_MEV_PS,
        };
        let oracle = crate::platforms::smm_assemble_eq10(&spec);
        let t = spec.coupling();
        let zero = CMat::zeros(2);
        let block = CMat::from_blocks2(&zero, &t, &t.adjoint(), &zero)
            .add(&spec.perturbation().scale(c(1.0 / spec.hbar, 0.0)));
        worst = worst.max(oracle.sub(&block).max_abs());
        worst = worst.max((t[(0, 0)] - t[(1, 1)].conj()).norm());
        worst = worst.max((t[(0, 1)] - t[(1, 0)].conj()).norm());
    }
    report(
        "smm_assembly_equivalence",
        worst < 1e-13,
        format!("worst entry deviation {worst:.3e} (tol 1e-13, 100 specs)"),
    )
}

/// Fidelity functional fixed points and bounds on random unitary pairs.
pub fn check_fidelity_functional(seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w = CMat::identity(4);
    let mut ok = (gate_fidelity(&w, &w).unwrap() - 1.0).abs() < 1e-14;
    ok &= gate_fidelity(&w, &w.scale(c(-1.0, 0.0))).unwrap().abs() < 1e-14;
    let mut d = CMat::identity(4);
    d[(3, 3)] = c(-1.0, 0.0);
    ok &= (gate_fidelity(&w, &d).unwrap() - 0.75).abs() < 1e-14;
    let mut worst_lo: f64 = 1.0;
    let mut worst_hi: f64 = 0.0;
    for _ in 0..1000 {
        let h = random_hermitian4(&mut rng);
        let u = matkit::expi(&h, rng.gen_range(0.0..8.0)).unwrap();
        let h2 = random_hermitian4(&mut rng);
        let v = matkit::expi(&h2, rng.gen_range(0.0..8.0)).unwrap();
        let f = gate_fidelity(&u, &v).unwrap();
        worst_lo = worst_lo.min(f);
        worst_hi = worst_hi.max(f);
    }
    ok &= worst_lo >= -1e-12 && worst_hi <= 1.0 + 1e-12;
    report(
        "fidelity_functional",
        ok,
        format!("fixed points ok; random-pair range [{worst_lo:.6}, {worst_hi:.6}]"),
    )
}

fn random_hermitian4(rng: &mut impl Rng) -> CMat {
    let mut m = CMat::zeros(4);
    for i in 0..4 {
        m[(i, i)] = c(rng.gen_range(-1.0..1.0), 0.0);
        for j in (i + 1)..4 {
            let e = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            m[(i, j)] = e;
            m[(j, i)] = e.conj();
        }
    }
    m
}

/// Fig. 1 reproduction: unit fidelity at Delta_SO = 0, the 98% point, and the
/// square-pulse product-scaling law. Also reports the minimum over the
/// 10-100 ps band at 0.02 meV.
pub fn check_fig1_fidelity(_seed: u64) -> CheckReport {
    let spec = SmmSpec::fig1(0.02);
    let grid = smm_fidelity_sweep(&spec, PulseShape::Square, PI, &[0.0], &[1.0, 10.0, 100.0])
        .unwrap();
    let mut ok = (0..3).all(|j| (grid.value(0, j) - 1.0).abs() < 1e-12);

    let point = smm_fidelity_sweep(&spec, PulseShape::Square, PI, &[0.02], &[10.0])
        .unwrap()
        .value(0, 0);
    ok &= point >= 0.98;

    // scaling law on a 3x3 subgrid
    let mut worst_scale: f64 = 0.0;
    for &dso in &[0.02, 0.05, 0.08] {
        for &tau in &[5.0, 20.0, 60.0] {
            let f1 = smm_fidelity_sweep(&spec, PulseShape::Square, PI, &[dso], &[tau])
                .unwrap()
                .value(0, 0);
            let f2 = smm_fidelity_sweep(&spec, PulseShape::Square, PI, &[2.0 * dso], &[tau / 2.0])
                .unwrap()
                .value(0, 0);
            worst_scale = worst_scale.max((f1 - f2).abs());
        }
    }
    ok &= worst_scale < 1e-10;

    // full band report at 0.02 meV
    let band: Vec<f64> = (0..91).map(|i| 10.0 + i as f64).collect();
    let band_grid = smm_fidelity_sweep(&spec, PulseShape::Square, PI, &[0.02], &band).unwrap();
    let min_band = band_grid
        .fidelity
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min);
    report(
        "fig1_reproduction",
        ok,
        format!(
            "F(0, tau) = 1 ok; F(0.02 meV, 10 ps) = {point:.6} (>= 0.98); \
             scaling-law residual {worst_scale:.3e}; min F over 10-100 ps band = {min_band:.6}"
        ),
    )
}

/// Register dense-oracle equivalence (n <= 4) and disjoint-pair commutation.
pub fn check_register(seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for n in 2..=4usize {
        for _ in 0..5 {
            let p = rng.gen_range(0..n);
            let q = loop {
                let q = rng.gen_range(0..n);
                if q != p {
                    break q;
                }
            };
            let u0 = random_unitary2(&mut rng);
            let u1 = random_unitary2(&mut rng);
            let (cb, a_tau) = synth_entangling(&u0, &u1).unwrap();
            let gate = conditional_gate(&holonomy_pair(&cb, a_tau).unwrap(), Encoding::AbCd);
            let mut amps: Vec<C64> = (0..1usize << n)
                .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
            for a in &mut amps {
                *a /= norm;
            }
            let sv = StateVector::from_amplitudes(n, amps.clone()).unwrap();
            let fast = apply_gate(&sv, p, q, &gate).unwrap();
            // dense embedding oracle
            let bit = |idx: usize, j: usize| (idx >> (n - 1 - j)) & 1;
            for row in 0..1usize << n {
                let mut acc = c(0.0, 0.0);
                for (col, &a) in amps.iter().enumerate() {
                    let mut ok = true;
                    for j in 0..n {
                        if j != p && j != q && bit(row, j) != bit(col, j) {
                            ok = false;
                            break;
                        }
                    }
                    if ok {
                        let r = (bit(row, p) << 1) | bit(row, q);
                        let s = (bit(col, p) << 1) | bit(col, q);
                        acc += gate.u[(r, s)] * a;
                    }
                }
                worst = worst.max((acc - fast.amplitudes()[row]).norm());
            }
        }
    }
    // disjoint-pair commutation
    let g1 = {
        let (cb, a) = synth_entangling(&random_unitary2(&mut rng), &random_unitary2(&mut rng))
            .unwrap();
        conditional_gate(&holonomy_pair(&cb, a).unwrap(), Encoding::AbCd)
    };
    let g2 = {
        let (cb, a) = synth_entangling(&random_unitary2(&mut rng), &random_unitary2(&mut rng))
            .unwrap();
        conditional_gate(&holonomy_pair(&cb, a).unwrap(), Encoding::AbCd)
    };
    let sv = StateVector::zero_state(4).unwrap();
    let sv = apply_gate(&sv, 0, 2, &g1).unwrap();
    let ab = apply_gate(&apply_gate(&sv, 0, 1, &g1).unwrap(), 2, 3, &g2).unwrap();
    let ba = apply_gate(&apply_gate(&sv, 2, 3, &g2).unwrap(), 0, 1, &g1).unwrap();
    let comm = ab
        .amplitudes()
        .iter()
        .zip(ba.amplitudes())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max);
    // Bell preparation: Hadamard-equivalent on qubit 0, then block-diag(Z, X)
    let (cbh, ah) = synth_one_qubit(PI / 4.0, 0.0);
    let hadamard = conditional_gate(
        &holonomy_pair(&cbh, ah).unwrap(),
        Encoding::ControlTargetSwapped,
    );
    let s = 1.0 / 2.0_f64.sqrt();
    let (cbe, ae) =
        synth_entangling(&CMat::identity(2), &CMat::from_real(2, &[s, -s, s, s])).unwrap();
    let entangler = conditional_gate(&holonomy_pair(&cbe, ae).unwrap(), Encoding::AbCd);
    let bell = apply_gate(
        &apply_gate(&StateVector::zero_state(2).unwrap(), 0, 1, &hadamard).unwrap(),
        0,
        1,
        &entangler,
    )
    .unwrap();
    let entropy = bell.entanglement_entropy(0).unwrap();
    let entropy_err = (entropy - 2.0_f64.ln()).abs();
    report(
        "register_dense_oracle",
        worst < 1e-12 && comm < 1e-12 && entropy_err < 1e-9,
        format!(
            "dense-oracle residual {worst:.3e}, commutation residual {comm:.3e}, \
             Bell entropy deviation from ln 2: {entropy_err:.3e}"
        ),
    )
}

/// Zero-dynamics condition: P_l(t) H P_l(t) = 0 along cyclic evolutions.
pub fn check_zero_dynamics(seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let (cb, a_tau) = random_cyclic_control_block(&mut rng);
        let h0 = block_hamiltonian(&cb);
        for _ in 0..20 {
            let a = rng.gen_range(0.0..a_tau);
            let u = closed_form_evolution(&cb, a);
            for l in 0..2 {
                let mut p = CMat::zeros(4);
                p[(2 * l, 2 * l)] = c(1.0, 0.0);
                p[(2 * l + 1, 2 * l + 1)] = c(1.0, 0.0);
                let pt = u.mul(&p).mul(&u.adjoint());
                let resid = pt.mul(&h0).mul(&pt).max_abs();
                worst = worst.max(resid);
            }
        }
    }
    report(
        "zero_dynamics_condition",
        worst < 1e-10,
        format!("worst ||P_l(t) H P_l(t)|| {worst:.3e} (tol 1e-10)"),
    )
}

/// Off-diagonal blocks vanish at cyclic areas.
pub fn check_cyclicity(seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let (cb, a_tau) = random_cyclic_control_block(&mut rng);
        let u = closed_form_evolution(&cb, a_tau);
        worst = worst.max(u.block2(0, 1).max_abs()).max(u.block2(1, 0).max_abs());
    }
    report(
        "cyclicity_offdiagonal_vanish",
        worst < 1e-8,
        format!("worst off-diagonal block {worst:.3e} (tol 1e-8)"),
    )
}

/// Equal-area pulses of different shapes give the same gate when h1 = 0.
pub fn check_pulse_shape_independence(_seed: u64) -> CheckReport {
    let spec = SmmSpec::fig1(0.0);
    let (cb, _) = crate::platforms::smm_build(&spec).unwrap();
    let h0 = block_hamiltonian(&cb);
    let mut gates = Vec::new();
    for shape in [PulseShape::Square, PulseShape::Sin2, PulseShape::GaussTruncated] {
        let pulse = Pulse::new(shape, 10.0, PI).unwrap();
        let dh = DrivenHamiltonian::new(h0.clone(), CMat::zeros(4), pulse).unwrap();
        gates.push(evolve(&dh, 1e-10).unwrap());
    }
    let mut worst: f64 = 0.0;
    for g in &gates[1..] {
        worst = worst.max(g.sub(&gates[0]).fro_norm());
    }
    report(
        "pulse_shape_independence",
        worst < 1e-9,
        format!("worst cross-shape residual {worst:.3e} (tol 1e-9)"),
    )
}

/// Equal-parity couplings give trivial +-identity holonomies.
pub fn check_equal_parity_trivial(seed: u64) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ok = true;
    for _ in 0..20 {
        let u0 = random_unitary2(&mut rng);
        let u1 = random_unitary2(&mut rng);
        // D = diag(3, 1): both parities odd at a_tau = pi
        let d = CMat::from_real(2, &[3.0, 0.0, 0.0, 1.0]);
        let t = u0.mul(&d).mul(&u1.adjoint());
        let cb = ControlBlock::new(t).unwrap();
        let hr = holonomy_pair(&cb, PI).unwrap();
        let minus = CMat::identity(2).scale(c(-1.0, 0.0));
        ok &= hr.u_c0.sub(&minus).max_abs() < 1e-10;
        ok &= hr.u_c1.sub(&minus).max_abs() < 1e-10;
        ok &= !hr.class.is_nontrivial();
    }
    report(
        "equal_parity_trivial_holonomy",
        ok,
        "odd/odd parity couplings all gave -identity holonomies".into(),
    )
}

/// Run every check with one base seed.
pub fn run_all(seed: u64) -> Vec<CheckReport> {
    vec![
        check_closed_form_oracle(seed),
        check_one_qubit_universality(seed.wrapping_add(1)),
        check_su2_plan(seed.wrapping_add(2)),
        check_entangling_certifier(seed.wrapping_add(3)),
        check_tb_gauge_covariance(seed.wrapping_add(4)),
        check_spin_ring_projection(seed.wrapping_add(5)),
        check_smm_assembly(seed.wrapping_add(6)),
        check_fidelity_functional(seed.wrapping_add(7)),
        check_fig1_fidelity(seed.wrapping_add(8)),
        check_register(seed.wrapping_add(9)),
        check_zero_dynamics(seed.wrapping_add(10)),
        check_cyclicity(seed.wrapping_add(11)),
        check_pulse_shape_independence(seed.wrapping_add(12)),
        check_equal_parity_trivial(seed.wrapping_add(13)),
    ]
}
