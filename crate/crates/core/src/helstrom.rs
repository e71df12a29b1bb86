//! Finite-n quantum tests on `rho^{(x)n}` versus `sigma^{(x)n}`.

use crate::error::{Error, Result};
use crate::functionals::Legendre;
use crate::iid::{iid_tails, lower_bound_from_tails, DEFAULT_TYPE_CAP};
use crate::linalg::{
    positive_projector, spectral_decompose, tensor_power, HermitianMatrix, SPECTRAL_EPS,
};
use crate::ns::ns_distributions;
use crate::state::{DensityOperator, StatePair};

const TEST_TOL: f64 = 1e-10;

/// Hermitian `T` with `0 <= T <= I`.
#[derive(Debug, Clone)]
pub struct TestOperator {
    matrix: HermitianMatrix,
}

impl TestOperator {
    pub fn new(matrix: HermitianMatrix) -> Result<Self> {
        let dec = spectral_decompose(&matrix)?;
        let (lo, hi) = (dec.min_eigenvalue(), dec.max_eigenvalue());
        if lo < -TEST_TOL {
            return Err(Error::validation(
                "test must satisfy T >= 0: min eigenvalue",
                lo,
            ));
        }
        if hi > 1.0 + TEST_TOL {
            return Err(Error::validation(
                "test must satisfy T <= I: max eigenvalue",
                hi,
            ));
        }
        Ok(Self { matrix })
    }

    /// Projections assembled from eigenvectors are valid tests by construction.
    pub(crate) fn from_projection(matrix: HermitianMatrix) -> Self {
        Self { matrix }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_projection(HermitianMatrix::identity(dim))
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_projection(HermitianMatrix::zeros(dim))
    }

    pub fn matrix(&self) -> &HermitianMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }
}

/// Type I and type II errors of a test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorProbabilities {
    /// `1 - Tr[rho T]`.
    pub alpha: f64,
    /// `Tr[sigma T]`.
    pub beta: f64,
    /// Either raw value fell outside `[0, 1]` by rounding and was clamped.
    pub clamped: bool,
}

impl ErrorProbabilities {
    /// `alpha + delta beta`.
    pub fn risk(&self, delta: f64) -> f64 {
        self.alpha + delta * self.beta
    }
}

pub fn error_probabilities(
    rho_n: &DensityOperator,
    sigma_n: &DensityOperator,
    test: &TestOperator,
) -> Result<ErrorProbabilities> {
    error_probabilities_raw(rho_n.matrix(), sigma_n.matrix(), test)
}

fn error_probabilities_raw(
    rho_n: &HermitianMatrix,
    sigma_n: &HermitianMatrix,
    test: &TestOperator,
) -> Result<ErrorProbabilities> {
    if rho_n.dim() != sigma_n.dim() || rho_n.dim() != test.dim() {
        return Err(Error::validation(
            format!(
                "dimension mismatch: rho {}, sigma {}, test {}",
                rho_n.dim(),
                sigma_n.dim(),
                test.dim()
            ),
            0.0,
        ));
    }
    let alpha = 1.0 - rho_n.trace_product(test.matrix());
    let beta = sigma_n.trace_product(test.matrix());
    let clamped = !(0.0..=1.0).contains(&alpha) || !(0.0..=1.0).contains(&beta);
    Ok(ErrorProbabilities {
        alpha: alpha.clamp(0.0, 1.0),
        beta: beta.clamp(0.0, 1.0),
        clamped,
    })
}

/// The Helstrom projection `{rho_n - delta sigma_n > 0}`.
pub fn helstrom_test(
    rho_n: &DensityOperator,
    sigma_n: &DensityOperator,
    delta: f64,
) -> Result<TestOperator> {
    helstrom_raw(rho_n.matrix(), sigma_n.matrix(), delta)
}

fn helstrom_raw(
    rho_n: &HermitianMatrix,
    sigma_n: &HermitianMatrix,
    delta: f64,
) -> Result<TestOperator> {
    check_delta(delta)?;
    if rho_n.dim() != sigma_n.dim() {
        return Err(Error::validation("dimension mismatch between states", 0.0));
    }
    let diff = rho_n.sub(&sigma_n.scale(delta));
    Ok(TestOperator::from_projection(positive_projector(
        &spectral_decompose(&diff)?,
    )))
}

fn check_delta(delta: f64) -> Result<()> {
    if delta > 0.0 && delta.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "delta must be positive, got {delta}"
        )))
    }
}

/// The `n`-fold tensor powers of both states.
#[derive(Debug, Clone)]
pub struct NFoldPair {
    pub n: usize,
    pub rho: HermitianMatrix,
    pub sigma: HermitianMatrix,
}

impl NFoldPair {
    pub fn new(pair: &StatePair, n: usize, cap: usize) -> Result<Self> {
        Ok(Self {
            n,
            rho: tensor_power(pair.rho().matrix(), n, cap)?,
            sigma: tensor_power(pair.sigma().matrix(), n, cap)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.rho.dim()
    }

    pub fn error_probabilities(&self, test: &TestOperator) -> Result<ErrorProbabilities> {
        error_probabilities_raw(&self.rho, &self.sigma, test)
    }

    pub fn helstrom_test(&self, delta: f64) -> Result<TestOperator> {
        helstrom_raw(&self.rho, &self.sigma, delta)
    }

    /// `F_n(a)` and `G_n(a)` from one eigendecomposition of `rho_n - e^{-na} sigma_n`.
    pub fn spectral_tails(&self, a: f64) -> Result<SpectralTails> {
        if !a.is_finite() {
            return Err(Error::domain(format!("a must be finite, got {a}")));
        }
        let weight = (-(self.n as f64) * a).exp();
        let diff = self.rho.sub(&self.sigma.scale(weight));
        let dec = spectral_decompose(&diff)?;
        let f = dec.expectation_sum(self.rho.matrix(), |l| l <= SPECTRAL_EPS);
        let g = dec.expectation_sum(self.sigma.matrix(), |l| l > SPECTRAL_EPS);
        Ok(SpectralTails {
            n: self.n,
            a,
            f: f.clamp(0.0, 1.0),
            g: g.clamp(0.0, 1.0),
        })
    }
}

/// `F_n(a) = Tr[rho_n {rho_n - e^{-na} sigma_n <= 0}]` and
/// `G_n(a) = Tr[sigma_n {rho_n - e^{-na} sigma_n > 0}]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralTails {
    pub n: usize,
    pub a: f64,
    pub f: f64,
    pub g: f64,
}

impl SpectralTails {
    pub fn rate_f(&self) -> f64 {
        -self.f.ln() / self.n as f64
    }

    pub fn rate_g(&self) -> f64 {
        -self.g.ln() / self.n as f64
    }
}

pub fn spectral_tails(pair: &StatePair, n: usize, a: f64, cap: usize) -> Result<SpectralTails> {
    NFoldPair::new(pair, n, cap)?.spectral_tails(a)
}

/// Both sides of the inequality `alpha + delta beta >= min_overlap(p^n, q^n, delta)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemmaCheck {
    pub alpha: f64,
    pub beta: f64,
    pub risk: f64,
    pub lower_bound: f64,
    /// `risk - lower_bound`, nonnegative when the inequality holds.
    pub slack: f64,
}

/// Compares the risk of `test` on the n-fold space against the classical
/// minimum overlap of the n-fold Nussbaum–Szkola pair.
pub fn lemma_check(
    pair: &StatePair,
    n: usize,
    test: &TestOperator,
    delta: f64,
    cap: usize,
) -> Result<LemmaCheck> {
    check_delta(delta)?;
    let nfold = NFoldPair::new(pair, n, cap)?;
    let errs = nfold.error_probabilities(test)?;
    let cp = ns_distributions(pair)?;
    let b = -delta.ln() / n as f64;
    let tails = iid_tails(&cp, n, b, DEFAULT_TYPE_CAP)?;
    let lower_bound = lower_bound_from_tails(&tails)?;
    let risk = errs.risk(delta);
    Ok(LemmaCheck {
        alpha: errs.alpha,
        beta: errs.beta,
        risk,
        lower_bound,
        slack: risk - lower_bound,
    })
}

/// One row of the finite-n rate table against the conjectured limits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbeRow {
    pub n: usize,
    pub a: f64,
    pub rate_f: f64,
    pub rate_g: f64,
    pub phi: f64,
    pub psi: f64,
}

impl ProbeRow {
    pub fn gap_f(&self) -> f64 {
        self.rate_f - self.phi
    }

    pub fn gap_g(&self) -> f64 {
        self.rate_g - self.psi
    }
}

/// `-(1/n) log F_n(a)` and `-(1/n) log G_n(a)` for `n = 1..=n_max`, next to
/// `Phi(a)` and `Psi(a)`. Purely diagnostic: no limit is asserted.
pub fn conjecture_probe(
    pair: &StatePair,
    a: f64,
    n_max: usize,
    cap: usize,
) -> Result<Vec<ProbeRow>> {
    let leg = Legendre::quantum(pair)?;
    let (lo, hi) = leg.domain();
    if !(a > lo && a < hi) {
        return Err(Error::domain(format!(
            "a = {a} outside the open interval ({lo}, {hi})"
        )));
    }
    if n_max == 0 {
        return Err(Error::domain("n_max must be positive"));
    }
    crate::linalg::tensor_power_dim(pair.dim(), n_max, cap)?;
    let phi = leg.capital_phi(a)?;
    let psi = phi - a;
    (1..=n_max)
        .map(|n| {
            let t = spectral_tails(pair, n, a, cap)?;
            Ok(ProbeRow {
                n,
                a,
                rate_f: t.rate_f(),
                rate_g: t.rate_g(),
                phi,
                psi,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::DEFAULT_DIM_CAP;

    fn orthogonal() -> (DensityOperator, DensityOperator) {
        (
            DensityOperator::diagonal(&[1.0, 0.0]).unwrap(),
            DensityOperator::diagonal(&[0.0, 1.0]).unwrap(),
        )
    }

    #[test]
    fn trivial_tests() {
        let (rho, sigma) = orthogonal();
        let e = error_probabilities(&rho, &sigma, &TestOperator::identity(2)).unwrap();
        assert_eq!((e.alpha, e.beta), (0.0, 1.0));
        let e = error_probabilities(&rho, &sigma, &TestOperator::zero(2)).unwrap();
        assert_eq!((e.alpha, e.beta), (1.0, 0.0));
        let t =
            TestOperator::new(HermitianMatrix::from_real_diagonal(&[1.0, 0.0]).unwrap()).unwrap();
        let e = error_probabilities(&rho, &sigma, &t).unwrap();
        assert_eq!((e.alpha, e.beta), (0.0, 0.0));
        assert!(!e.clamped);
    }

    #[test]
    fn test_operator_bounds() {
        assert!(
            TestOperator::new(HermitianMatrix::from_real_diagonal(&[1.5, 0.0]).unwrap()).is_err()
        );
        assert!(
            TestOperator::new(HermitianMatrix::from_real_diagonal(&[0.5, -0.1]).unwrap()).is_err()
        );
        assert!(
            TestOperator::new(HermitianMatrix::from_real_diagonal(&[0.5, 0.2]).unwrap()).is_ok()
        );
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let (rho, sigma) = orthogonal();
        assert!(error_probabilities(&rho, &sigma, &TestOperator::identity(3)).is_err());
    }

    #[test]
    fn helstrom_on_identical_states_is_zero() {
        let m = DensityOperator::maximally_mixed(2);
        let t = helstrom_test(&m, &m, 1.0).unwrap();
        assert!(t.matrix().max_abs() < 1e-15);
        let e = error_probabilities(&m, &m, &t).unwrap();
        assert_eq!(e.risk(1.0), 1.0);
    }

    #[test]
    fn helstrom_on_orthogonal_states_is_perfect() {
        let (rho, sigma) = orthogonal();
        let t = helstrom_test(&rho, &sigma, 1.0).unwrap();
        let e = error_probabilities(&rho, &sigma, &t).unwrap();
        assert_eq!(e.risk(1.0), 0.0);
        assert!(helstrom_test(&rho, &sigma, -1.0).is_err());
    }

    #[test]
    fn tails_for_identical_states() {
        let m = DensityOperator::maximally_mixed(2);
        let pair = StatePair::new(m.clone(), m).unwrap();
        for n in 1..4 {
            let t = spectral_tails(&pair, n, 0.0, DEFAULT_DIM_CAP).unwrap();
            assert!((t.f - 1.0).abs() < 1e-14);
            assert_eq!(t.g, 0.0);
        }
    }

    #[test]
    fn probe_rejects_degenerate_interval() {
        let m = DensityOperator::maximally_mixed(2);
        let pair = StatePair::new(m.clone(), m).unwrap();
        assert!(matches!(
            conjecture_probe(&pair, 0.0, 3, DEFAULT_DIM_CAP),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn lemma_on_identical_states() {
        let m = DensityOperator::maximally_mixed(2);
        let pair = StatePair::new(m.clone(), m.clone()).unwrap();
        let t = helstrom_test(&m, &m, 1.0).unwrap();
        let chk = lemma_check(&pair, 1, &t, 1.0, DEFAULT_DIM_CAP).unwrap();
        assert!((chk.slack - 0.5).abs() < 1e-14);
    }

    #[test]
    fn lemma_on_orthogonal_states_is_tight() {
        let (rho, sigma) = orthogonal();
        let pair = StatePair::new(rho.clone(), sigma.clone()).unwrap();
        let t = helstrom_test(&rho, &sigma, 1.0).unwrap();
        let chk = lemma_check(&pair, 1, &t, 1.0, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(chk.risk, 0.0);
        assert_eq!(chk.lower_bound, 0.0);
        assert_eq!(chk.slack, 0.0);
    }
}
