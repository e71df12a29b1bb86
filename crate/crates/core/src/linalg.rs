//! Dense complex Hermitian linear algebra.
//!
//! Everything downstream goes through [`HermitianMatrix`] and its
//! [`SpectralDecomposition`]: matrix functions are applied eigenvalue-wise,
//! tensor powers are plain Kronecker products and the projections `{A > 0}`
//! and `{A <= 0}` are assembled from eigenvectors.

use std::cmp::Ordering;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Eigenvalues at or below this magnitude count as zero: they are excluded
/// from positive parts and from supports.
pub const SPECTRAL_EPS: f64 = 1e-12;

/// Largest tolerated entrywise asymmetry `|A - A^dagger|`, relative to `max(1, max |A_ij|)`.
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Default cap on the dimension produced by [`tensor_power`].
pub const DEFAULT_DIM_CAP: usize = 4096;

const EIGEN_EPS: f64 = 1e-15;
const EIGEN_MAX_ITER: usize = 100_000;
const PHASE_EPS: f64 = 1e-10;

pub type CMatrix = DMatrix<Complex64>;

#[inline]
pub(crate) fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// A square complex matrix equal to its conjugate transpose.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    inner: CMatrix,
}

impl HermitianMatrix {
    /// Validates hermiticity and stores the symmetrized matrix `(A + A^dagger)/2`.
    pub fn new(m: CMatrix) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::validation(
                format!("matrix must be square, got {}x{}", m.nrows(), m.ncols()),
                (m.nrows() as f64 - m.ncols() as f64).abs(),
            ));
        }
        if m.nrows() == 0 {
            return Err(Error::validation("matrix dimension must be positive", 0.0));
        }
        if let Some(bad) = m.iter().find(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::validation(
                "matrix entries must be finite",
                if bad.re.is_finite() { bad.im } else { bad.re },
            ));
        }
        let asym = max_asymmetry(&m);
        let scale = m.iter().map(|z| z.norm()).fold(1.0_f64, f64::max);
        if asym > HERMITIAN_TOL * scale {
            return Err(Error::validation(
                "matrix is not Hermitian: max |A_ij - conj(A_ji)|",
                asym,
            ));
        }
        let adj = m.adjoint();
        Ok(Self {
            inner: (m + adj) * c(0.5),
        })
    }

    /// Wraps a matrix known to be Hermitian up to rounding, symmetrizing it.
    pub(crate) fn from_hermitian_unchecked(m: CMatrix) -> Self {
        let adj = m.adjoint();
        Self {
            inner: (m + adj) * c(0.5),
        }
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Result<Self> {
        let d = DVector::from_iterator(diag.len(), diag.iter().map(|&x| c(x)));
        Self::new(CMatrix::from_diagonal(&d))
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            inner: CMatrix::identity(dim, dim),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            inner: CMatrix::zeros(dim, dim),
        }
    }

    /// Builds a matrix from row-major real and imaginary parts.
    pub fn from_rows(re: &[Vec<f64>], im: &[Vec<f64>]) -> Result<Self> {
        Self::new(matrix_from_parts(re, im)?)
    }

    pub fn dim(&self) -> usize {
        self.inner.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.inner
    }

    pub fn into_matrix(self) -> CMatrix {
        self.inner
    }

    pub fn trace(&self) -> f64 {
        self.inner.diagonal().iter().map(|z| z.re).sum()
    }

    /// `Tr[self * other]` without forming the product.
    pub fn trace_product(&self, other: &HermitianMatrix) -> f64 {
        trace_product(&self.inner, &other.inner)
    }

    pub fn scale(&self, k: f64) -> Self {
        Self {
            inner: &self.inner * c(k),
        }
    }

    pub fn add(&self, other: &HermitianMatrix) -> Self {
        Self {
            inner: &self.inner + &other.inner,
        }
    }

    pub fn sub(&self, other: &HermitianMatrix) -> Self {
        Self {
            inner: &self.inner - &other.inner,
        }
    }

    /// Largest entrywise modulus.
    pub fn max_abs(&self) -> f64 {
        self.inner.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &HermitianMatrix) -> f64 {
        max_abs_diff(&self.inner, &other.inner)
    }
}

/// Row-major real/imaginary parts to a complex matrix; the imaginary part may be empty.
pub fn matrix_from_parts(re: &[Vec<f64>], im: &[Vec<f64>]) -> Result<CMatrix> {
    let rows = re.len();
    let cols = re.first().map_or(0, Vec::len);
    if re.iter().any(|r| r.len() != cols) {
        return Err(Error::validation(
            "real part rows have unequal lengths",
            0.0,
        ));
    }
    if !im.is_empty() && (im.len() != rows || im.iter().any(|r| r.len() != cols)) {
        return Err(Error::validation(
            "imaginary part shape does not match real part",
            0.0,
        ));
    }
    Ok(CMatrix::from_fn(rows, cols, |i, j| {
        let imag = if im.is_empty() { 0.0 } else { im[i][j] };
        Complex64::new(re[i][j], imag)
    }))
}

pub(crate) fn max_asymmetry(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0_f64;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

pub(crate) fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Real part of `Tr[a * b]`.
pub(crate) fn trace_product(a: &CMatrix, b: &CMatrix) -> f64 {
    let n = a.nrows();
    let mut acc = 0.0;
    for k in 0..n {
        for l in 0..n {
            let x = a[(k, l)];
            let y = b[(l, k)];
            acc += x.re * y.re - x.im * y.im;
        }
    }
    acc
}

/// Eigenvalues sorted in descending order with orthonormal eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    eigenvalues: Vec<f64>,
    eigenvectors: CMatrix,
}

impl SpectralDecomposition {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Eigenvectors as columns, aligned with [`Self::eigenvalues`].
    pub fn eigenvectors(&self) -> &CMatrix {
        &self.eigenvectors
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    /// `sum_i f(lambda_i) |x_i><x_i|`.
    pub fn apply<F: Fn(f64) -> f64>(&self, f: F) -> HermitianMatrix {
        let weights: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        HermitianMatrix::from_hermitian_unchecked(self.weighted_outer(&weights))
    }

    fn weighted_outer(&self, weights: &[f64]) -> CMatrix {
        let v = &self.eigenvectors;
        let mut scaled = v.clone();
        for (j, &w) in weights.iter().enumerate() {
            scaled.column_mut(j).scale_mut(w);
        }
        scaled * v.adjoint()
    }

    /// Reassembles the decomposed matrix.
    pub fn reconstruct(&self) -> HermitianMatrix {
        self.apply(|l| l)
    }

    /// Sum over eigenvectors selected by `keep` of `<x_i| m |x_i>`.
    pub fn expectation_sum<P: Fn(f64) -> bool>(&self, m: &CMatrix, keep: P) -> f64 {
        let mut acc = 0.0;
        for (j, &l) in self.eigenvalues.iter().enumerate() {
            if !keep(l) {
                continue;
            }
            let x = self.eigenvectors.column(j);
            let mx = m * x;
            acc += x
                .iter()
                .zip(mx.iter())
                .map(|(a, b)| (a.conj() * b).re)
                .sum::<f64>();
        }
        acc
    }
}

/// Spectral decomposition with deterministic ordering.
///
/// Eigenvalues are sorted descending. Each eigenvector is phase-normalized so
/// that its first entry of modulus above `1e-10` is real and positive; within
/// a group of tied eigenvalues the vectors are ordered lexicographically by
/// `(re, im)` of their components.
pub fn spectral_decompose(a: &HermitianMatrix) -> Result<SpectralDecomposition> {
    let dim = a.dim();
    let eig = SymmetricEigen::try_new(a.matrix().clone(), EIGEN_EPS, EIGEN_MAX_ITER).ok_or_else(
        || Error::NumericalConsistency {
            what: format!("eigensolver did not converge (dim {dim})"),
            discrepancy: f64::NAN,
        },
    )?;

    let mut pairs: Vec<(f64, Vec<Complex64>)> = (0..dim)
        .map(|j| {
            let mut v: Vec<Complex64> = eig.eigenvectors.column(j).iter().copied().collect();
            normalize_phase(&mut v);
            (eig.eigenvalues[j], v)
        })
        .collect();

    pairs.sort_by(|x, y| y.0.total_cmp(&x.0));
    let scale = pairs.iter().map(|p| p.0.abs()).fold(1.0_f64, f64::max);
    let tie = 1e-12 * scale;
    let mut start = 0;
    while start < pairs.len() {
        let mut end = start + 1;
        while end < pairs.len() && pairs[end - 1].0 - pairs[end].0 <= tie {
            end += 1;
        }
        if end - start > 1 {
            pairs[start..end].sort_by(|x, y| lexicographic(&x.1, &y.1));
        }
        start = end;
    }

    let eigenvalues = pairs.iter().map(|p| p.0).collect();
    let eigenvectors = CMatrix::from_fn(dim, dim, |i, j| pairs[j].1[i]);
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

fn normalize_phase(v: &mut [Complex64]) {
    if let Some(first) = v.iter().find(|z| z.norm() > PHASE_EPS).copied() {
        let phase = first.conj() / first.norm();
        for z in v.iter_mut() {
            *z *= phase;
        }
    }
}

fn lexicographic(a: &[Complex64], b: &[Complex64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        let ord = y.re.total_cmp(&x.re).then(y.im.total_cmp(&x.im));
        if ord != Ordering::Equal {
            return ord;
        }
    }
    Ordering::Equal
}

fn check_psd(dec: &SpectralDecomposition) -> Result<()> {
    let min = dec.min_eigenvalue();
    if min < -SPECTRAL_EPS {
        return Err(Error::validation(
            "matrix is not positive semidefinite: min eigenvalue",
            min,
        ));
    }
    Ok(())
}

/// `lambda^t` under the support convention: eigenvalues at or below
/// [`SPECTRAL_EPS`] map to zero for every `t >= 0`, including `t = 0`.
#[inline]
pub fn support_power(lambda: f64, t: f64) -> f64 {
    if lambda <= SPECTRAL_EPS {
        0.0
    } else if t == 1.0 {
        lambda
    } else {
        lambda.powf(t)
    }
}

/// `A^t` for positive semidefinite `A`, taken on the support of `A`.
pub fn matrix_power(a: &HermitianMatrix, t: f64) -> Result<HermitianMatrix> {
    let dec = spectral_decompose(a)?;
    power_from_decomposition(&dec, t)
}

pub(crate) fn power_from_decomposition(
    dec: &SpectralDecomposition,
    t: f64,
) -> Result<HermitianMatrix> {
    if !t.is_finite() {
        return Err(Error::domain(format!("exponent must be finite, got {t}")));
    }
    check_psd(dec)?;
    if t < 0.0 && dec.min_eigenvalue() <= SPECTRAL_EPS {
        return Err(Error::domain(format!(
            "negative power {t} of a singular matrix (min eigenvalue {:e})",
            dec.min_eigenvalue()
        )));
    }
    Ok(dec.apply(|l| support_power(l, t)))
}

/// Natural logarithm of a positive definite matrix.
pub fn matrix_log(a: &HermitianMatrix) -> Result<HermitianMatrix> {
    let dec = spectral_decompose(a)?;
    log_from_decomposition(&dec)
}

pub(crate) fn log_from_decomposition(dec: &SpectralDecomposition) -> Result<HermitianMatrix> {
    let min = dec.min_eigenvalue();
    if min <= SPECTRAL_EPS {
        return Err(Error::domain(format!(
            "matrix logarithm requires full rank, min eigenvalue {min:e}"
        )));
    }
    Ok(dec.apply(f64::ln))
}

pub fn matrix_exp(a: &HermitianMatrix) -> Result<HermitianMatrix> {
    Ok(spectral_decompose(a)?.apply(f64::exp))
}

/// Kronecker product `a (x) b`.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (ar, ac) = a.shape();
    let (br, bc) = b.shape();
    let mut out = CMatrix::zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let aij = a[(i, j)];
            if aij == Complex64::new(0.0, 0.0) {
                continue;
            }
            let mut block = out.view_mut((i * br, j * bc), (br, bc));
            block.zip_apply(b, |o, x| *o = aij * x);
        }
    }
    out
}

/// Dimension of the `n`-fold tensor power, or a resource error above `cap`.
pub fn tensor_power_dim(dim: usize, n: usize, cap: usize) -> Result<usize> {
    let required = (dim as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if n == 0 || required > cap as u128 {
        return Err(Error::Resource {
            what: "tensor power dimension",
            required,
            cap: cap as u128,
        });
    }
    Ok(required as usize)
}

/// `A^{(x) n}`, the `n`-fold Kronecker power.
pub fn tensor_power(a: &HermitianMatrix, n: usize, cap: usize) -> Result<HermitianMatrix> {
    tensor_power_dim(a.dim(), n, cap)?;
    let mut acc = a.matrix().clone();
    for _ in 1..n {
        acc = kron(&acc, a.matrix());
    }
    Ok(HermitianMatrix { inner: acc })
}

/// The projection `{A > 0}` onto eigenvectors with eigenvalue above [`SPECTRAL_EPS`].
pub fn positive_part_projection(a: &HermitianMatrix) -> Result<HermitianMatrix> {
    let dec = spectral_decompose(a)?;
    Ok(positive_projector(&dec))
}

/// `{A <= 0}`, defined as `I - {A > 0}` so the two partition the identity.
pub fn nonpositive_part_projection(a: &HermitianMatrix) -> Result<HermitianMatrix> {
    let p = positive_part_projection(a)?;
    Ok(HermitianMatrix::identity(a.dim()).sub(&p))
}

pub(crate) fn positive_projector(dec: &SpectralDecomposition) -> HermitianMatrix {
    dec.apply(|l| if l > SPECTRAL_EPS { 1.0 } else { 0.0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn herm(re: &[&[f64]], im: &[&[f64]]) -> HermitianMatrix {
        let re: Vec<Vec<f64>> = re.iter().map(|r| r.to_vec()).collect();
        let im: Vec<Vec<f64>> = im.iter().map(|r| r.to_vec()).collect();
        HermitianMatrix::from_rows(&re, &im).unwrap()
    }

    fn pauli_x() -> HermitianMatrix {
        herm(&[&[0.0, 1.0], &[1.0, 0.0]], &[])
    }

    #[test]
    fn diagonal_decomposes_to_standard_basis() {
        let a = HermitianMatrix::from_real_diagonal(&[2.0, -1.0]).unwrap();
        let dec = spectral_decompose(&a).unwrap();
        assert_eq!(dec.eigenvalues(), &[2.0, -1.0]);
        assert_abs_diff_eq!(dec.eigenvectors()[(0, 0)].re, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(dec.eigenvectors()[(1, 1)].re, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(dec.eigenvectors()[(1, 0)].norm(), 0.0, epsilon = 1e-14);
    }

    #[test]
    fn identity_has_unit_spectrum() {
        let dec = spectral_decompose(&HermitianMatrix::identity(3)).unwrap();
        for &l in dec.eigenvalues() {
            assert_abs_diff_eq!(l, 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn pauli_x_eigenpairs_match_hand_solution() {
        // det([[-l, 1], [1, -l]]) = l^2 - 1, so l = +-1 with (1, +-1)/sqrt(2).
        let dec = spectral_decompose(&pauli_x()).unwrap();
        assert_abs_diff_eq!(dec.eigenvalues()[0], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(dec.eigenvalues()[1], -1.0, epsilon = 1e-14);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let v = dec.eigenvectors();
        // first entries are phase-normalized to be real positive
        assert_abs_diff_eq!(v[(0, 0)].re, h, epsilon = 1e-12);
        assert_abs_diff_eq!(v[(1, 0)].re, h, epsilon = 1e-12);
        assert_abs_diff_eq!(v[(0, 1)].re, h, epsilon = 1e-12);
        assert_abs_diff_eq!(v[(1, 1)].re, -h, epsilon = 1e-12);
    }

    #[test]
    fn rejects_non_hermitian_and_reports_asymmetry() {
        let m = matrix_from_parts(&[vec![1.0, 0.5], vec![0.0, 1.0]], &[]).unwrap();
        match HermitianMatrix::new(m) {
            Err(Error::Validation { magnitude, .. }) => assert_abs_diff_eq!(magnitude, 0.5),
            other => panic!("expected validation error, got {other:?}"),
        }
    }

    #[test]
    fn tiny_asymmetry_is_symmetrized() {
        let m = matrix_from_parts(&[vec![1.0, 0.5 + 1e-13], vec![0.5, 1.0]], &[]).unwrap();
        let h = HermitianMatrix::new(m).unwrap();
        assert_eq!(h.matrix()[(0, 1)], h.matrix()[(1, 0)].conj());
    }

    #[test]
    fn rejects_non_square_and_non_finite() {
        assert!(HermitianMatrix::new(CMatrix::zeros(2, 3)).is_err());
        let mut m = CMatrix::identity(2, 2);
        m[(0, 0)] = Complex64::new(f64::NAN, 0.0);
        assert!(HermitianMatrix::new(m).is_err());
    }

    #[test]
    fn matrix_power_examples() {
        let half = HermitianMatrix::identity(2).scale(0.5);
        let r = matrix_power(&half, 0.5).unwrap();
        assert!(r.max_abs_diff(&HermitianMatrix::identity(2).scale(0.5_f64.sqrt())) < 1e-14);

        let d = HermitianMatrix::from_real_diagonal(&[4.0, 1.0]).unwrap();
        let r = matrix_power(&d, 0.5).unwrap();
        assert!(r.max_abs_diff(&HermitianMatrix::from_real_diagonal(&[2.0, 1.0]).unwrap()) < 1e-14);

        let plus = herm(&[&[0.5, 0.5], &[0.5, 0.5]], &[]);
        let r = matrix_power(&plus, 0.3).unwrap();
        assert!(r.max_abs_diff(&plus) < 1e-12);
        // 0^0 = 0 keeps the support projection
        let r = matrix_power(&plus, 0.0).unwrap();
        assert!(r.max_abs_diff(&plus) < 1e-12);
    }

    #[test]
    fn negative_power_of_singular_is_domain_error() {
        let d = HermitianMatrix::from_real_diagonal(&[1.0, 0.0]).unwrap();
        assert!(matches!(matrix_power(&d, -0.5), Err(Error::Domain(_))));
        let neg = HermitianMatrix::from_real_diagonal(&[1.0, -0.1]).unwrap();
        assert!(matches!(
            matrix_power(&neg, 0.5),
            Err(Error::Validation { .. })
        ));
    }

    #[test]
    fn log_and_exp_examples() {
        let l = matrix_log(&HermitianMatrix::identity(3)).unwrap();
        assert!(l.max_abs() < 1e-15);
        let e = matrix_exp(&HermitianMatrix::zeros(3)).unwrap();
        assert!(e.max_abs_diff(&HermitianMatrix::identity(3)) < 1e-15);
        let e1 = std::f64::consts::E;
        let d = HermitianMatrix::from_real_diagonal(&[e1, e1 * e1]).unwrap();
        let l = matrix_log(&d).unwrap();
        assert!(l.max_abs_diff(&HermitianMatrix::from_real_diagonal(&[1.0, 2.0]).unwrap()) < 1e-14);
        let singular = HermitianMatrix::from_real_diagonal(&[1.0, 0.0]).unwrap();
        assert!(matches!(matrix_log(&singular), Err(Error::Domain(_))));
    }

    #[test]
    fn exp_inverts_log() {
        let a = herm(&[&[0.7, 0.1], &[0.1, 0.3]], &[&[0.0, 0.05], &[-0.05, 0.0]]);
        let back = matrix_exp(&matrix_log(&a).unwrap()).unwrap();
        assert!(back.max_abs_diff(&a) < 1e-9);
    }

    #[test]
    fn tensor_power_examples() {
        let half = HermitianMatrix::identity(2).scale(0.5);
        let t = tensor_power(&half, 2, DEFAULT_DIM_CAP).unwrap();
        assert!(t.max_abs_diff(&HermitianMatrix::identity(4).scale(0.25)) < 1e-15);

        let p = HermitianMatrix::from_real_diagonal(&[1.0, 0.0]).unwrap();
        let t = tensor_power(&p, 3, DEFAULT_DIM_CAP).unwrap();
        let mut expect = vec![0.0; 8];
        expect[0] = 1.0;
        assert!(t.max_abs_diff(&HermitianMatrix::from_real_diagonal(&expect).unwrap()) < 1e-15);
    }

    #[test]
    fn tensor_power_cap_reports_required_dimension() {
        let a = HermitianMatrix::identity(2);
        match tensor_power(&a, 13, DEFAULT_DIM_CAP) {
            Err(Error::Resource { required, cap, .. }) => {
                assert_eq!(required, 8192);
                assert_eq!(cap, 4096);
            }
            other => panic!("expected resource error, got {other:?}"),
        }
    }

    #[test]
    fn positive_part_examples() {
        let d = HermitianMatrix::from_real_diagonal(&[2.0, -1.0, 0.0]).unwrap();
        let p = positive_part_projection(&d).unwrap();
        assert!(
            p.max_abs_diff(&HermitianMatrix::from_real_diagonal(&[1.0, 0.0, 0.0]).unwrap()) < 1e-15
        );

        let p = positive_part_projection(&HermitianMatrix::zeros(3)).unwrap();
        assert!(p.max_abs() < 1e-15);

        let p = positive_part_projection(&pauli_x()).unwrap();
        let plus = herm(&[&[0.5, 0.5], &[0.5, 0.5]], &[]);
        assert!(p.max_abs_diff(&plus) < 1e-12);

        let q = nonpositive_part_projection(&pauli_x()).unwrap();
        assert!(p.add(&q).max_abs_diff(&HermitianMatrix::identity(2)) < 1e-15);
    }

    #[test]
    fn degenerate_ties_are_ordered_deterministically() {
        let a = herm(&[&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0], &[0.0, 0.0, 3.0]], &[]);
        let d1 = spectral_decompose(&a).unwrap();
        let d2 = spectral_decompose(&a).unwrap();
        assert_eq!(d1.eigenvectors(), d2.eigenvectors());
        assert_abs_diff_eq!(d1.eigenvalues()[0], 3.0, epsilon = 1e-14);
        let v = d1.eigenvectors();
        // within the tied pair the lexicographically larger vector comes first
        assert!(v[(0, 1)].re >= v[(0, 2)].re);
    }
}
