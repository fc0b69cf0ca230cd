//! Small dense complex-matrix kernel: Hermitian eigendecomposition (cyclic
//! Jacobi), closed-form 2x2 singular value decomposition, matrix exponentials,
//! and unitarity/hermiticity predicates. Sized for dimensions up to 16.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Hermiticity tolerance for accepted inputs.
pub const TOL_HERMITIAN: f64 = 1e-12;
/// Unitarity tolerance for produced outputs.
pub const TOL_UNITARY: f64 = 1e-11;
/// Relative singularity threshold: |det T| must exceed this times ||T||_F^2.
pub const TOL_SINGULAR: f64 = 1e-10;

/// Dense complex matrix, row-major storage.
#[derive(Clone, Debug, PartialEq)]
pub struct CMat {
    dim: usize,
    entries: Vec<C64>,
}

impl CMat {
    pub fn new(dim: usize, entries: Vec<C64>) -> Result<Self> {
        if !(2..=16).contains(&dim) {
            return Err(Error::InvalidDimension(format!(
                "dimension {dim} outside supported range 2..=16"
            )));
        }
        if entries.len() != dim * dim {
            return Err(Error::InvalidDimension(format!(
                "{} entries for dimension {dim}",
                entries.len()
            )));
        }
        Ok(Self { dim, entries })
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![C64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    /// Build a 2x2 matrix from real/imag parts listed row-major.
    pub fn two(rows: [[C64; 2]; 2]) -> Self {
        Self {
            dim: 2,
            entries: vec![rows[0][0], rows[0][1], rows[1][0], rows[1][1]],
        }
    }

    pub fn from_real(dim: usize, re: &[f64]) -> Self {
        Self {
            dim,
            entries: re.iter().map(|&x| C64::new(x, 0.0)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[C64] {
        &self.entries
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m[(j, i)] = self[(i, j)].conj();
            }
        }
        m
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.dim;
        assert_eq!(n, rhs.dim, "dimension mismatch in matrix product");
        let mut m = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    m[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        m
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a + b)
            .collect();
        Self {
            dim: self.dim,
            entries,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim);
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a - b)
            .collect();
        Self {
            dim: self.dim,
            entries,
        }
    }

    pub fn scale(&self, c: C64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|&e| c * e).collect(),
        }
    }

    pub fn fro_norm(&self) -> f64 {
        self.entries.iter().map(|e| e.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|e| e.norm()).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn det2(&self) -> C64 {
        assert_eq!(self.dim, 2);
        self[(0, 0)] * self[(1, 1)] - self[(0, 1)] * self[(1, 0)]
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.sub(&self.adjoint()).max_abs() <= tol
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.adjoint()
            .mul(self)
            .sub(&Self::identity(self.dim))
            .max_abs()
            <= tol
    }

    pub fn kron(&self, rhs: &Self) -> Self {
        let n = self.dim;
        let m = rhs.dim;
        let dim = n * m;
        let mut out = Self::zeros(dim);
        for i in 0..n {
            for j in 0..n {
                let a = self[(i, j)];
                for k in 0..m {
                    for l in 0..m {
                        out[(i * m + k, j * m + l)] = a * rhs[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Assemble a 4x4 matrix from four 2x2 blocks.
    pub fn from_blocks2(ul: &Self, ur: &Self, ll: &Self, lr: &Self) -> Self {
        let mut m = Self::zeros(4);
        for i in 0..2 {
            for j in 0..2 {
                m[(i, j)] = ul[(i, j)];
                m[(i, j + 2)] = ur[(i, j)];
                m[(i + 2, j)] = ll[(i, j)];
                m[(i + 2, j + 2)] = lr[(i, j)];
            }
        }
        m
    }

    /// Extract the 2x2 block at block-row `bi`, block-column `bj` of a 4x4 matrix.
    pub fn block2(&self, bi: usize, bj: usize) -> Self {
        assert_eq!(self.dim, 4);
        let mut m = Self::zeros(2);
        for i in 0..2 {
            for j in 0..2 {
                m[(i, j)] = self[(bi * 2 + i, bj * 2 + j)];
            }
        }
        m
    }

    /// Reorder basis states: entry (i, j) of the result is entry (perm[i], perm[j]).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.dim);
        let mut m = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[(i, j)] = self[(perm[i], perm[j])];
            }
        }
        m
    }

    pub fn pauli_x() -> Self {
        Self::from_real(2, &[0.0, 1.0, 1.0, 0.0])
    }

    pub fn pauli_y() -> Self {
        Self::two([
            [C64::new(0.0, 0.0), C64::new(0.0, -1.0)],
            [C64::new(0.0, 1.0), C64::new(0.0, 0.0)],
        ])
    }

    pub fn pauli_z() -> Self {
        Self::from_real(2, &[1.0, 0.0, 0.0, -1.0])
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.entries[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.entries[i * self.dim + j]
    }
}

/// Singular value decomposition of an invertible 2x2 matrix: t = u0 diag(alpha, beta) u1^dag.
#[derive(Clone, Debug)]
pub struct Svd2 {
    pub u0: CMat,
    pub alpha: f64,
    pub beta: f64,
    pub u1: CMat,
}

impl Svd2 {
    pub fn reconstruct(&self) -> CMat {
        let d = CMat::two([
            [C64::new(self.alpha, 0.0), C64::new(0.0, 0.0)],
            [C64::new(0.0, 0.0), C64::new(self.beta, 0.0)],
        ]);
        self.u0.mul(&d).mul(&self.u1.adjoint())
    }
}

/// Hermitian eigendecomposition by cyclic Jacobi. Eigenvalues ascending,
/// columns of the returned matrix are the matching orthonormal eigenvectors.
pub fn eig_hermitian(h: &CMat) -> Result<(Vec<f64>, CMat)> {
    let asym = h.sub(&h.adjoint()).max_abs();
    if asym > TOL_HERMITIAN {
        return Err(Error::NotHermitian(asym));
    }
    let n = h.dim;
    let mut a = h.clone();
    // enforce exact hermiticity so the iteration sees a symmetric problem
    for i in 0..n {
        a[(i, i)] = C64::new(a[(i, i)].re, 0.0);
        for j in (i + 1)..n {
            let avg = (a[(i, j)] + a[(j, i)].conj()) * 0.5;
            a[(i, j)] = avg;
            a[(j, i)] = avg.conj();
        }
    }
    let mut v = CMat::identity(n);
    let scale = a.fro_norm().max(1.0);
    for _sweep in 0..60 {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += a[(p, q)].norm_sqr();
            }
        }
        if off.sqrt() <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag <= 1e-18 * scale {
                    continue;
                }
                // phase factor turning the (p,q) block real symmetric
                let phase = apq / mag;
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let theta = 0.5 * (2.0 * mag).atan2(app - aqq);
                let c = theta.cos();
                let s = theta.sin();
                // G restricted to (p,q): [[c, -s*phase], [s*conj(phase)... built below
                let gpp = C64::new(c, 0.0);
                let gpq = -phase * s;
                let gqp = phase.conj() * s;
                let gqq = C64::new(c, 0.0);
                // a <- G^dag a G (update columns then rows)
                for i in 0..n {
                    let aip = a[(i, p)];
                    let aiq = a[(i, q)];
                    a[(i, p)] = aip * gpp + aiq * gqp;
                    a[(i, q)] = aip * gpq + aiq * gqq;
                }
                for j in 0..n {
                    let apj = a[(p, j)];
                    let aqj = a[(q, j)];
                    a[(p, j)] = gpp.conj() * apj + gqp.conj() * aqj;
                    a[(q, j)] = gpq.conj() * apj + gqq.conj() * aqj;
                }
                for i in 0..n {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)];
                    v[(i, p)] = vip * gpp + viq * gqp;
                    v[(i, q)] = vip * gpq + viq * gqq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.partial_cmp(&a[(j, j)].re).unwrap());
    let eigenvalues: Vec<f64> = order.iter().map(|&i| a[(i, i)].re).collect();
    let mut vs = CMat::zeros(n);
    for (col, &src) in order.iter().enumerate() {
        for i in 0..n {
            vs[(i, col)] = v[(i, src)];
        }
    }
    Ok((eigenvalues, vs))
}

/// exp(-i s h) for Hermitian h, via eigendecomposition. Unitary by construction.
pub fn expi(h: &CMat, s: f64) -> Result<CMat> {
    let (vals, v) = eig_hermitian(h)?;
    let n = h.dim;
    let mut d = CMat::zeros(n);
    for (i, &lam) in vals.iter().enumerate() {
        d[(i, i)] = C64::from_polar(1.0, -s * lam);
    }
    Ok(v.mul(&d).mul(&v.adjoint()))
}

/// Closed-form SVD of an invertible 2x2 complex matrix with a deterministic
/// column-phase gauge: each column of u0 has its largest-magnitude entry real
/// positive, and u1 is re-phased so the reconstruction is preserved.
pub fn svd2(t: &CMat) -> Result<Svd2> {
    assert_eq!(t.dim, 2, "svd2 is defined for 2x2 matrices");
    let fro2 = t.fro_norm().powi(2);
    let det = t.det2().norm();
    let threshold = TOL_SINGULAR * fro2;
    if det <= threshold {
        return Err(Error::SingularT { det, threshold });
    }

    // t^dag t is Hermitian positive definite; diagonalize it in closed form.
    let m = t.adjoint().mul(t);
    let a = m[(0, 0)].re;
    let b = m[(1, 1)].re;
    let h = m[(0, 1)];
    let mag = h.norm();
    let disc = ((a - b).powi(2) + 4.0 * mag * mag).sqrt();
    let lam_hi = 0.5 * (a + b + disc);
    let lam_lo = 0.5 * (a + b - disc);
    let alpha = lam_hi.sqrt();
    let beta = lam_lo.max(0.0).sqrt();

    let scale = a.max(b).max(1e-300);
    let mut u1 = if disc <= 1e-15 * scale {
        // degenerate singular values: any orthonormal basis works; fix identity
        CMat::identity(2)
    } else if mag <= 1e-15 * scale {
        if a >= b {
            CMat::identity(2)
        } else {
            CMat::from_real(2, &[0.0, 1.0, 1.0, 0.0])
        }
    } else {
        // eigenvector for lam_hi: (h, lam_hi - a); for lam_lo: orthogonal complement
        let v0 = h;
        let v1 = C64::new(lam_hi - a, 0.0);
        let norm = (v0.norm_sqr() + v1.norm_sqr()).sqrt();
        let (v0, v1) = (v0 / norm, v1 / norm);
        CMat::two([[v0, -v1.conj()], [v1, v0.conj()]])
    };

    let inv_d = CMat::two([
        [C64::new(1.0 / alpha, 0.0), C64::new(0.0, 0.0)],
        [C64::new(0.0, 0.0), C64::new(1.0 / beta, 0.0)],
    ]);
    let mut u0 = t.mul(&u1).mul(&inv_d);

    // column-phase gauge
    for col in 0..2 {
        let pick = if u0[(0, col)].norm() >= u0[(1, col)].norm() {
            0
        } else {
            1
        };
        let e = u0[(pick, col)];
        if e.norm() > 0.0 {
            let ph = (e / e.norm()).conj();
            for row in 0..2 {
                u0[(row, col)] *= ph;
                u1[(row, col)] *= ph;
            }
        }
    }

    Ok(Svd2 {
        u0,
        alpha,
        beta,
        u1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    pub(crate) fn random_hermitian(dim: usize, rng: &mut impl Rng) -> CMat {
        let mut m = CMat::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = c(rng.gen_range(-1.0..1.0), 0.0);
            for j in (i + 1)..dim {
                let e = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                m[(i, j)] = e;
                m[(j, i)] = e.conj();
            }
        }
        m
    }

    #[test]
    fn eig_diagonal_is_identity_basis() {
        let h = CMat::from_real(2, &[1.0, 0.0, 0.0, 2.0]);
        let (vals, v) = eig_hermitian(&h).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-14);
        assert!((vals[1] - 2.0).abs() < 1e-14);
        assert!(v.sub(&CMat::identity(2)).max_abs() < 1e-14);
    }

    #[test]
    fn eig_pauli_x() {
        let (vals, v) = eig_hermitian(&CMat::pauli_x()).unwrap();
        assert!((vals[0] + 1.0).abs() < 1e-14);
        assert!((vals[1] - 1.0).abs() < 1e-14);
        // columns are (1,-1)/sqrt(2) and (1,1)/sqrt(2) up to phase
        for col in 0..2 {
            let sign = if col == 0 { -1.0 } else { 1.0 };
            let ratio = v[(1, col)] / v[(0, col)];
            assert!((ratio - c(sign, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn eig_reconstructs_random_4x4() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let h = random_hermitian(4, &mut rng);
            let (vals, v) = eig_hermitian(&h).unwrap();
            let mut d = CMat::zeros(4);
            for (i, &lam) in vals.iter().enumerate() {
                d[(i, i)] = c(lam, 0.0);
            }
            let resid = v.mul(&d).mul(&v.adjoint()).sub(&h).fro_norm();
            assert!(resid < 1e-11, "residual {resid}");
            assert!(v.is_unitary(1e-11));
            assert!(vals.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = CMat::from_real(2, &[0.0, 1.0, 0.0, 0.0]);
        assert!(matches!(eig_hermitian(&m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn expi_at_zero_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let h = random_hermitian(4, &mut rng);
        let u = expi(&h, 0.0).unwrap();
        assert!(u.sub(&CMat::identity(4)).max_abs() < 1e-13);
    }

    #[test]
    fn expi_pauli_z_pi() {
        let u = expi(&CMat::pauli_z(), std::f64::consts::PI).unwrap();
        let minus_i4 = CMat::identity(2).scale(c(-1.0, 0.0));
        assert!(u.sub(&minus_i4).max_abs() < 1e-12);
    }

    #[test]
    fn expi_group_law() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..10 {
            let h = random_hermitian(4, &mut rng);
            let s = rng.gen_range(-2.0..2.0);
            let t = rng.gen_range(-2.0..2.0);
            let lhs = expi(&h, s).unwrap().mul(&expi(&h, t).unwrap());
            let rhs = expi(&h, s + t).unwrap();
            assert!(lhs.sub(&rhs).fro_norm() < 1e-11);
        }
    }

    #[test]
    fn svd2_identity_and_diag() {
        let s = svd2(&CMat::identity(2)).unwrap();
        assert!((s.alpha - 1.0).abs() < 1e-14 && (s.beta - 1.0).abs() < 1e-14);
        assert!(s.u0.sub(&CMat::identity(2)).max_abs() < 1e-13);
        assert!(s.u1.sub(&CMat::identity(2)).max_abs() < 1e-13);

        let s = svd2(&CMat::from_real(2, &[2.0, 0.0, 0.0, 1.0])).unwrap();
        assert!((s.alpha - 2.0).abs() < 1e-14 && (s.beta - 1.0).abs() < 1e-14);
        assert!(s.u0.sub(&CMat::identity(2)).max_abs() < 1e-13);
    }

    #[test]
    fn svd2_fig1_coupling() {
        // T = (3/2) I + Y/2: singular values (2, 1), factors in the Y eigenbasis
        let t = CMat::two([
            [c(1.5, 0.0), c(0.0, -0.5)],
            [c(0.0, 0.5), c(1.5, 0.0)],
        ]);
        let s = svd2(&t).unwrap();
        assert!((s.alpha - 2.0).abs() < 1e-12);
        assert!((s.beta - 1.0).abs() < 1e-12);
        assert!(s.reconstruct().sub(&t).fro_norm() < 1e-12);
        // first column of u0 is the +1 eigenvector of Pauli Y up to phase
        let y = CMat::pauli_y();
        for col in 0..2 {
            let sign = if col == 0 { 1.0 } else { -1.0 };
            let v = CMat::two([
                [s.u0[(0, col)], c(0.0, 0.0)],
                [s.u0[(1, col)], c(0.0, 0.0)],
            ]);
            let yv = y.mul(&v);
            assert!(yv.sub(&v.scale(c(sign, 0.0))).max_abs() < 1e-12);
        }
    }

    #[test]
    fn svd2_rejects_singular() {
        let t = CMat::from_real(2, &[1.0, 1.0, 1.0, 1.0]);
        assert!(matches!(svd2(&t), Err(Error::SingularT { .. })));
    }

    #[test]
    fn svd2_deterministic() {
        let t = CMat::two([
            [c(0.3, -0.4), c(1.1, 0.2)],
            [c(-0.5, 0.9), c(0.7, 0.1)],
        ]);
        let s1 = svd2(&t).unwrap();
        let s2 = svd2(&t).unwrap();
        assert_eq!(s1.u0, s2.u0);
        assert_eq!(s1.u1, s2.u1);
        assert!(s1.alpha == s2.alpha && s1.beta == s2.beta);
    }

    #[test]
    fn svd2_positive_definite_shares_projectors() {
        // Hermitian T > 0: u1 and u0 define the same projectors
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..20 {
            let h = random_hermitian(2, &mut rng);
            // shift to positive definite
            let t = h.add(&CMat::identity(2).scale(c(4.0, 0.0)));
            let s = svd2(&t).unwrap();
            for col in 0..2 {
                let mut p0 = CMat::zeros(2);
                let mut p1 = CMat::zeros(2);
                for i in 0..2 {
                    for j in 0..2 {
                        p0[(i, j)] = s.u0[(i, col)] * s.u0[(j, col)].conj();
                        p1[(i, j)] = s.u1[(i, col)] * s.u1[(j, col)].conj();
                    }
                }
                assert!(p0.sub(&p1).max_abs() < 1e-10);
            }
        }
    }

    proptest! {
        #[test]
        fn svd2_reconstructs_random(entries in proptest::collection::vec(-2.0f64..2.0, 8)) {
            let t = CMat::two([
                [c(entries[0], entries[1]), c(entries[2], entries[3])],
                [c(entries[4], entries[5]), c(entries[6], entries[7])],
            ]);
            if let Ok(s) = svd2(&t) {
                prop_assert!(s.reconstruct().sub(&t).fro_norm() < 1e-12);
                prop_assert!(s.u0.is_unitary(1e-12));
                prop_assert!(s.u1.is_unitary(1e-12));
                prop_assert!(s.alpha >= s.beta && s.beta > 0.0);
            }
        }

        #[test]
        fn expi_is_unitary(seed in 0u64..1000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let h = random_hermitian(4, &mut rng);
            let s = rng.gen_range(0.0..12.0);
            let u = expi(&h, s).unwrap();
            prop_assert!(u.is_unitary(1e-11));
        }
    }
}
