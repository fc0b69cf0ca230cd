use thiserror::Error;

/// Errors surfaced by the gate-synthesis and simulation kernels.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian within tolerance (max asymmetry {0:.3e})")]
    NotHermitian(f64),
    #[error("matrix is not unitary within tolerance (residual {0:.3e})")]
    NotUnitary(f64),
    #[error("coupling matrix T is singular: |det| = {det:.3e} below threshold {threshold:.3e}")]
    SingularT { det: f64, threshold: f64 },
    #[error("target is not special unitary (|det - 1| = {0:.3e})")]
    NotSU2(f64),
    #[error("evolution is not cyclic at the given area: |sin(a alpha)| = {0:.3e}, |sin(a beta)| = {1:.3e}")]
    NotCyclic(f64, f64),
    #[error("singular value ratio {ratio} admits no rational approximation with denominator <= {max_denominator} (best residual {residual:.3e})")]
    IncommensurateRatio {
        ratio: f64,
        max_denominator: u64,
        residual: f64,
    },
    #[error("Peierls phases sum to {sum} but declared flux is {flux}")]
    FluxMismatch { sum: f64, flux: f64 },
    #[error("spin Hamiltonian leaks out of the invariant subspace (max coupling {0:.3e})")]
    LeakageDetected(f64),
    #[error("propagator failed to converge after {doublings} step doublings (residual {residual:.3e})")]
    NoConvergence { doublings: u32, residual: f64 },
    #[error("qubit index out of range: {index} on a {n}-qubit register")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
