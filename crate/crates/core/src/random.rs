//! Seeded random states, Hermitian matrices and tests.
//!
//! All sampling goes through [`rand_chacha::ChaCha8Rng`] so a seed reproduces
//! the same objects on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::Result;
use crate::helstrom::TestOperator;
use crate::linalg::{c, spectral_decompose, CMatrix, HermitianMatrix};
use crate::state::{DensityOperator, StatePair};
use num_complex::Complex64;

pub type SeededRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Matrix of i.i.d. standard complex Gaussians (variance 1/2 per component).
pub fn complex_gaussian<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> CMatrix {
    let k = std::f64::consts::FRAC_1_SQRT_2;
    CMatrix::from_fn(rows, cols, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(k * re, k * im)
    })
}

/// GUE-like Hermitian matrix `(G + G^dagger) / 2`.
pub fn random_hermitian<R: Rng>(dim: usize, rng: &mut R) -> HermitianMatrix {
    let g = complex_gaussian(dim, dim, rng);
    HermitianMatrix::from_hermitian_unchecked(&g + g.adjoint())
}

/// Full-rank state `G G^dagger / Tr` from a square Ginibre matrix.
pub fn random_state<R: Rng>(dim: usize, rng: &mut R) -> Result<DensityOperator> {
    let g = complex_gaussian(dim, dim, rng);
    let w = &g * g.adjoint();
    let tr: f64 = w.diagonal().iter().map(|z| z.re).sum();
    DensityOperator::new(HermitianMatrix::from_hermitian_unchecked(w * c(1.0 / tr)))
}

/// Full-rank state with every eigenvalue at least `floor / dim`, by mixing a
/// Ginibre state with the maximally mixed state.
pub fn random_well_conditioned_state<R: Rng>(
    dim: usize,
    floor: f64,
    rng: &mut R,
) -> Result<DensityOperator> {
    random_state(dim, rng)?.mix_with_identity(floor)
}

pub fn random_pair<R: Rng>(dim: usize, rng: &mut R) -> Result<StatePair> {
    let rho = random_well_conditioned_state(dim, 0.05, rng)?;
    let sigma = random_well_conditioned_state(dim, 0.05, rng)?;
    StatePair::new(rho, sigma)
}

/// Random commuting pair: both states diagonal in the computational basis.
pub fn random_diagonal_pair<R: Rng>(dim: usize, rng: &mut R) -> Result<StatePair> {
    let mut draw = || {
        let w: Vec<f64> = (0..dim).map(|_| rng.random_range(0.05..1.0)).collect();
        let total: f64 = w.iter().sum();
        w.into_iter().map(|x| x / total).collect::<Vec<_>>()
    };
    let p = draw();
    let q = draw();
    StatePair::new(
        DensityOperator::diagonal(&p)?,
        DensityOperator::diagonal(&q)?,
    )
}

/// A test `0 <= T <= I` obtained by clipping the spectrum of
/// `I/2 + H/2` (`H` GUE-like) into `[0, 1]`; mixes projective and
/// non-projective tests.
pub fn random_test<R: Rng>(dim: usize, rng: &mut R) -> Result<TestOperator> {
    let h = HermitianMatrix::identity(dim)
        .scale(0.5)
        .add(&random_hermitian(dim, rng).scale(0.5 / (dim as f64).sqrt()));
    let clipped = spectral_decompose(&h)?.apply(|l| l.clamp(0.0, 1.0));
    TestOperator::new(clipped)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_sampling_is_reproducible() {
        let a = random_pair(3, &mut rng_from_seed(9)).unwrap();
        let b = random_pair(3, &mut rng_from_seed(9)).unwrap();
        assert_eq!(a.rho().matrix(), b.rho().matrix());
        assert!(a.is_full_rank());
    }

    #[test]
    fn random_tests_are_valid() {
        let mut rng = rng_from_seed(1);
        for _ in 0..20 {
            let t = random_test(4, &mut rng).unwrap();
            let dec = spectral_decompose(t.matrix()).unwrap();
            assert!(dec.min_eigenvalue() >= -1e-12 && dec.max_eigenvalue() <= 1.0 + 1e-12);
        }
    }
}
