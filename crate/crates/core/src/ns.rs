//! Quantum-to-classical reduction of a state pair.
//!
//! With `rho = sum_i lambda_i |x_i><x_i|` and `sigma = sum_j gamma_j |y_j><y_j|`,
//! the distributions
//!
//! ```text
//! p(i, j) = lambda_i |<x_i|y_j>|^2,      q(i, j) = gamma_j |<x_i|y_j>|^2
//! ```
//!
//! reproduce the quantum log-overlap exactly: `phi(s | rho||sigma) = phi(s | p||q)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functionals::{log_sum_exp, Legendre, OverlapCurve};
use crate::linalg::SPECTRAL_EPS;
use crate::state::StatePair;

/// Entries at or below this floor (in both `p` and `q`) are pruned from the support.
pub const SUPPORT_FLOOR: f64 = 1e-15;

const NORMALIZATION_TOL: f64 = 1e-10;

/// Two probability vectors on a shared support of index pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ClassicalPairRepr")]
pub struct ClassicalPair {
    support: Vec<(usize, usize)>,
    p: Vec<f64>,
    q: Vec<f64>,
}

#[derive(Deserialize)]
struct ClassicalPairRepr {
    support: Vec<(usize, usize)>,
    p: Vec<f64>,
    q: Vec<f64>,
}

impl TryFrom<ClassicalPairRepr> for ClassicalPair {
    type Error = Error;

    fn try_from(r: ClassicalPairRepr) -> Result<Self> {
        ClassicalPair::new(r.support, r.p, r.q)
    }
}

impl ClassicalPair {
    pub fn new(support: Vec<(usize, usize)>, p: Vec<f64>, q: Vec<f64>) -> Result<Self> {
        if support.len() != p.len() || p.len() != q.len() {
            return Err(Error::validation(
                format!(
                    "support, p and q lengths differ: {}, {}, {}",
                    support.len(),
                    p.len(),
                    q.len()
                ),
                0.0,
            ));
        }
        if support.is_empty() {
            return Err(Error::validation("support must be nonempty", 0.0));
        }
        for (name, v) in [("p", &p), ("q", &q)] {
            if let Some(&x) = v.iter().find(|x| !(x.is_finite() && **x >= 0.0)) {
                return Err(Error::validation(
                    format!("{name} entries must be finite and nonnegative"),
                    x,
                ));
            }
            let sum: f64 = v.iter().sum();
            if (sum - 1.0).abs() > NORMALIZATION_TOL {
                return Err(Error::validation(
                    format!("{name} must sum to 1: |sum - 1|"),
                    (sum - 1.0).abs(),
                ));
            }
        }
        let mut sorted = support.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::validation("support entries must be unique", 0.0));
        }
        Ok(Self { support, p, q })
    }

    /// Plain distributions on `{0..m}`, with support labels `(i, i)`.
    pub fn from_probabilities(p: Vec<f64>, q: Vec<f64>) -> Result<Self> {
        let support = (0..p.len()).map(|i| (i, i)).collect();
        Self::new(support, p, q)
    }

    pub fn support(&self) -> &[(usize, usize)] {
        &self.support
    }

    pub fn p(&self) -> &[f64] {
        &self.p
    }

    pub fn q(&self) -> &[f64] {
        &self.q
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    /// The pair with `p` and `q` exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            support: self.support.clone(),
            p: self.q.clone(),
            q: self.p.clone(),
        }
    }

    /// `D(p||q)`, the slope at 0, and `D(q||p)` packaged with the classical `phi`.
    pub fn legendre(&self) -> Result<Legendre<&ClassicalPair>> {
        let fwd = classical_relative_entropy(self)?;
        let bwd = classical_relative_entropy(&self.swapped())?;
        Ok(Legendre::new(self, fwd, bwd))
    }
}

impl OverlapCurve for ClassicalPair {
    fn log_overlap(&self, s: f64) -> f64 {
        let terms = self
            .p
            .iter()
            .zip(&self.q)
            .filter(|(&p, &q)| p > 0.0 && q > 0.0)
            .map(move |(&p, &q)| (1.0 - s) * p.ln() + s * q.ln());
        log_sum_exp(terms)
    }
}

/// Builds `(p, q)` from the spectral decompositions of the pair.
pub fn ns_distributions(pair: &StatePair) -> Result<ClassicalPair> {
    let rho = pair.rho().spectrum();
    let sigma = pair.sigma().spectrum();
    let clamp = |l: f64| if l > SPECTRAL_EPS { l } else { 0.0 };
    let overlaps = rho.eigenvectors().adjoint() * sigma.eigenvectors();
    let mut support = Vec::new();
    let mut p = Vec::new();
    let mut q = Vec::new();
    for (i, &l) in rho.eigenvalues().iter().enumerate() {
        for (j, &g) in sigma.eigenvalues().iter().enumerate() {
            let ov = overlaps[(i, j)].norm_sqr();
            let pij = clamp(l) * ov;
            let qij = clamp(g) * ov;
            if pij > SUPPORT_FLOOR || qij > SUPPORT_FLOOR {
                support.push((i, j));
                p.push(pij);
                q.push(qij);
            }
        }
    }
    ClassicalPair::new(support, p, q)
}

fn check_s(s: f64) -> Result<()> {
    if (0.0..=1.0).contains(&s) {
        Ok(())
    } else {
        Err(Error::domain(format!("s must lie in [0, 1], got {s}")))
    }
}

/// `log sum_w p(w)^{1-s} q(w)^s`; outcomes with `p = 0` or `q = 0` contribute nothing.
pub fn classical_phi(cp: &ClassicalPair, s: f64) -> Result<f64> {
    check_s(s)?;
    Ok(cp.log_overlap(s))
}

/// `(1/2) [ p{p <= delta q} + delta q{p > delta q} ]`, ties on the `p` side.
pub fn min_overlap(cp: &ClassicalPair, delta: f64) -> Result<f64> {
    if !delta.is_finite() || delta <= 0.0 {
        return Err(Error::domain(format!(
            "delta must be positive, got {delta}"
        )));
    }
    let (mut p_side, mut q_side) = (0.0, 0.0);
    for (&p, &q) in cp.p.iter().zip(&cp.q) {
        if p <= delta * q {
            p_side += p;
        } else {
            q_side += q;
        }
    }
    Ok(0.5 * (p_side + delta * q_side))
}

/// `D(p||q) = sum p log(p/q)` in nats.
pub fn classical_relative_entropy(cp: &ClassicalPair) -> Result<f64> {
    let mut d = 0.0;
    for (&p, &q) in cp.p.iter().zip(&cp.q) {
        if p == 0.0 {
            continue;
        }
        if q == 0.0 {
            return Err(Error::domain(format!(
                "relative entropy is infinite: p = {p:e} where q = 0"
            )));
        }
        d += p * (p / q).ln();
    }
    Ok(d.max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::DensityOperator;

    fn bernoulli() -> ClassicalPair {
        ClassicalPair::from_probabilities(vec![0.5, 0.5], vec![0.25, 0.75]).unwrap()
    }

    #[test]
    fn commuting_pair_recovers_diagonals() {
        let pair = StatePair::new(
            DensityOperator::diagonal(&[0.7, 0.2, 0.1]).unwrap(),
            DensityOperator::diagonal(&[0.1, 0.3, 0.6]).unwrap(),
        )
        .unwrap();
        let cp = ns_distributions(&pair).unwrap();
        assert_eq!(cp.len(), 3);
        // eigenvalues are sorted per state, so locate each support point by label
        for (k, &(i, j)) in cp.support().iter().enumerate() {
            let li = pair.rho().spectrum().eigenvalues()[i];
            let gj = pair.sigma().spectrum().eigenvalues()[j];
            assert!((cp.p()[k] - li).abs() < 1e-14);
            assert!((cp.q()[k] - gj).abs() < 1e-14);
        }
        let mut ps: Vec<f64> = cp.p().to_vec();
        ps.sort_by(f64::total_cmp);
        assert!((ps[2] - 0.7).abs() < 1e-14);
    }

    #[test]
    fn identical_maximally_mixed_gives_two_points() {
        let m = DensityOperator::maximally_mixed(2);
        let cp = ns_distributions(&StatePair::new(m.clone(), m).unwrap()).unwrap();
        assert_eq!(cp.len(), 2);
        for k in 0..2 {
            assert!((cp.p()[k] - 0.5).abs() < 1e-14);
            assert!((cp.q()[k] - 0.5).abs() < 1e-14);
        }
    }

    #[test]
    fn classical_phi_examples() {
        let cp = bernoulli();
        let expect = (0.5_f64.sqrt() * (0.25_f64.sqrt() + 0.75_f64.sqrt())).ln();
        assert!((classical_phi(&cp, 0.5).unwrap() - expect).abs() < 1e-15);
        assert!((expect + 0.03466).abs() < 1e-5);
        let same = ClassicalPair::from_probabilities(vec![0.2, 0.8], vec![0.2, 0.8]).unwrap();
        for s in [0.0, 0.3, 1.0] {
            assert!(classical_phi(&same, s).unwrap().abs() < 1e-15);
        }
        assert!(classical_phi(&cp, 1.5).is_err());
    }

    #[test]
    fn min_overlap_examples() {
        let same = ClassicalPair::from_probabilities(vec![0.2, 0.8], vec![0.2, 0.8]).unwrap();
        assert_eq!(min_overlap(&same, 1.0).unwrap(), 0.5);
        let disjoint = ClassicalPair::from_probabilities(vec![1.0, 0.0], vec![0.0, 1.0]).unwrap();
        for delta in [0.1, 1.0, 7.0] {
            assert_eq!(min_overlap(&disjoint, delta).unwrap(), 0.0);
        }
        assert_eq!(min_overlap(&bernoulli(), 1.0).unwrap(), 0.375);
        assert!(min_overlap(&bernoulli(), 0.0).is_err());
    }

    #[test]
    fn relative_entropy_examples() {
        let same = ClassicalPair::from_probabilities(vec![0.2, 0.8], vec![0.2, 0.8]).unwrap();
        assert_eq!(classical_relative_entropy(&same).unwrap(), 0.0);
        let d = classical_relative_entropy(&bernoulli()).unwrap();
        assert!((d - 0.5 * (4.0_f64 / 3.0).ln()).abs() < 1e-15);
        let point = ClassicalPair::from_probabilities(vec![1.0, 0.0], vec![0.5, 0.5]).unwrap();
        assert!((classical_relative_entropy(&point).unwrap() - 2.0_f64.ln()).abs() < 1e-15);
        assert!(classical_relative_entropy(&point.swapped()).is_err());
    }

    #[test]
    fn validation_errors() {
        assert!(ClassicalPair::from_probabilities(vec![0.5, 0.6], vec![0.5, 0.5]).is_err());
        assert!(ClassicalPair::from_probabilities(vec![1.5, -0.5], vec![0.5, 0.5]).is_err());
        assert!(ClassicalPair::new(vec![(0, 0), (0, 0)], vec![0.5, 0.5], vec![0.5, 0.5]).is_err());
        assert!(ClassicalPair::new(vec![(0, 0)], vec![0.5, 0.5], vec![0.5, 0.5]).is_err());
    }

    #[test]
    fn json_shape() {
        let cp = bernoulli();
        let s = serde_json::to_string(&cp).unwrap();
        assert_eq!(
            s,
            r#"{"support":[[0,0],[1,1]],"p":[0.5,0.5],"q":[0.25,0.75]}"#
        );
        let back: ClassicalPair = serde_json::from_str(&s).unwrap();
        assert_eq!(back, cp);
        assert!(serde_json::from_str::<ClassicalPair>(
            r#"{"support":[[0,0]],"p":[2.0],"q":[1.0]}"#
        )
        .is_err());
    }
}
