//! Density operators and the hypothesis pair `(rho, sigma)`.

use crate::error::{Error, Result};
use crate::linalg::{spectral_decompose, HermitianMatrix, SpectralDecomposition, SPECTRAL_EPS};

/// Minimum eigenvalue required for a state to count as full rank.
pub const FULL_RANK_EPS: f64 = 1e-10;

const TRACE_TOL: f64 = 1e-12;

/// Hermitian, positive semidefinite, unit trace.
#[derive(Debug, Clone)]
pub struct DensityOperator {
    matrix: HermitianMatrix,
    spectrum: SpectralDecomposition,
}

impl DensityOperator {
    pub fn new(matrix: HermitianMatrix) -> Result<Self> {
        Self::with_trace_tol(matrix, TRACE_TOL)
    }

    pub(crate) fn with_trace_tol(matrix: HermitianMatrix, trace_tol: f64) -> Result<Self> {
        let tr = matrix.trace();
        if (tr - 1.0).abs() > trace_tol {
            return Err(Error::validation(
                "trace must equal 1: |Tr - 1|",
                (tr - 1.0).abs(),
            ));
        }
        let spectrum = spectral_decompose(&matrix)?;
        let min = spectrum.min_eigenvalue();
        if min < -SPECTRAL_EPS {
            return Err(Error::validation(
                "density operator must be positive semidefinite: min eigenvalue",
                min,
            ));
        }
        Ok(Self { matrix, spectrum })
    }

    pub fn diagonal(probs: &[f64]) -> Result<Self> {
        Self::new(HermitianMatrix::from_real_diagonal(probs)?)
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self::new(HermitianMatrix::identity(dim).scale(1.0 / dim as f64))
            .expect("maximally mixed state is valid")
    }

    pub fn matrix(&self) -> &HermitianMatrix {
        &self.matrix
    }

    pub fn spectrum(&self) -> &SpectralDecomposition {
        &self.spectrum
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn is_full_rank(&self) -> bool {
        self.spectrum.min_eigenvalue() > FULL_RANK_EPS
    }

    /// `(1 - eps) self + eps I/d`.
    pub fn mix_with_identity(&self, eps: f64) -> Result<Self> {
        let d = self.dim();
        let m = self
            .matrix
            .scale(1.0 - eps)
            .add(&HermitianMatrix::identity(d).scale(eps / d as f64));
        Self::new(m)
    }
}

/// Null hypothesis `rho` and alternative `sigma` on the same space.
#[derive(Debug, Clone)]
pub struct StatePair {
    rho: DensityOperator,
    sigma: DensityOperator,
    full_rank: bool,
}

impl StatePair {
    pub fn new(rho: DensityOperator, sigma: DensityOperator) -> Result<Self> {
        if rho.dim() != sigma.dim() {
            return Err(Error::validation(
                format!("state dimensions differ: {} vs {}", rho.dim(), sigma.dim()),
                (rho.dim() as f64 - sigma.dim() as f64).abs(),
            ));
        }
        let full_rank = rho.is_full_rank() && sigma.is_full_rank();
        Ok(Self {
            rho,
            sigma,
            full_rank,
        })
    }

    pub fn rho(&self) -> &DensityOperator {
        &self.rho
    }

    pub fn sigma(&self) -> &DensityOperator {
        &self.sigma
    }

    pub fn dim(&self) -> usize {
        self.rho.dim()
    }

    /// Both states have every eigenvalue above [`FULL_RANK_EPS`].
    pub fn is_full_rank(&self) -> bool {
        self.full_rank
    }

    /// The pair with roles exchanged, `(sigma, rho)`.
    pub fn swapped(&self) -> Self {
        Self {
            rho: self.sigma.clone(),
            sigma: self.rho.clone(),
            full_rank: self.full_rank,
        }
    }

    pub(crate) fn require_full_rank(&self, what: &str) -> Result<()> {
        if self.full_rank {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "{what} requires full-rank states (min eigenvalues {:e}, {:e})",
                self.rho.spectrum().min_eigenvalue(),
                self.sigma.spectrum().min_eigenvalue()
            )))
        }
    }

    /// `rho` and `sigma` commute within `tol` (max entry of the commutator).
    pub fn commutes(&self, tol: f64) -> bool {
        let a = self.rho.matrix().matrix();
        let b = self.sigma.matrix().matrix();
        let comm = a * b - b * a;
        comm.iter().all(|z| z.norm() <= tol)
    }
}
