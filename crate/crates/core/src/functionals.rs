//! Scalar exponent functionals of a state pair.
//!
//! The Rényi log-overlap `phi(s) = log Tr[rho^{1-s} sigma^s]` is convex on
//! `[0, 1]` with slopes `-D(rho||sigma)` at `s = 0` and `D(sigma||rho)` at
//! `s = 1`. Its Legendre pair
//!
//! ```text
//! Phi(a) = max_{0<=s<=1} (a s - phi(s)),      Psi(a) = Phi(a) - a,
//! ```
//!
//! on `[-D(rho||sigma), D(sigma||rho)]` parametrizes the Hoeffding bound
//! `b(r) = max_{0<=s<1} (-s r - phi(s)) / (1 - s)` through `r = Psi(a)`,
//! `b(r) = Phi(a)`. [`Legendre`] implements this machinery once for any
//! convex log-overlap curve; the quantum `phi`, the Golden–Thompson variant
//! `phi_tilde` and the classical `phi` of a distribution pair all plug into it.
//!
//! All logarithms are natural.

use nalgebra::SymmetricEigen;

use crate::error::{Error, Result};
use crate::linalg::{
    log_from_decomposition, support_power, trace_product, HermitianMatrix, SPECTRAL_EPS,
};
use crate::optimize::{bisect_decreasing, golden_section_max, Maximum};
use crate::state::StatePair;

/// Upper end of the direct Hoeffding search in `s`.
pub const HOEFFDING_S_CAP: f64 = 1.0 - 1e-8;
/// Direct and dual Hoeffding routes are expected to agree to this level.
pub const HOEFFDING_AGREE_TOL: f64 = 1e-6;
/// Disagreement above this level is reported as an optimizer failure.
pub const HOEFFDING_FAIL_TOL: f64 = 1e-4;
/// Slack allowed when checking that `a` or `r` lies in its closed domain.
pub const DOMAIN_TOL: f64 = 1e-10;

/// A convex log-overlap function on `[0, 1]`.
pub trait OverlapCurve {
    /// Value at `s`; callers keep `s` inside `[0, 1]` unless the curve is
    /// known to extend (full-rank pairs).
    fn log_overlap(&self, s: f64) -> f64;
}

impl<C: OverlapCurve + ?Sized> OverlapCurve for &C {
    fn log_overlap(&self, s: f64) -> f64 {
        (**self).log_overlap(s)
    }
}

/// `phi(s) = log Tr[rho^{1-s} sigma^s]`, formed as a matrix product of the two
/// spectral powers.
#[derive(Debug, Clone, Copy)]
pub struct PhiCurve<'a> {
    pair: &'a StatePair,
}

impl<'a> PhiCurve<'a> {
    pub fn new(pair: &'a StatePair) -> Self {
        Self { pair }
    }

    /// `Tr[rho^{1-s} sigma^s]` with the support convention `0^t = 0`.
    pub fn overlap(&self, s: f64) -> f64 {
        let rho_pow = self
            .pair
            .rho()
            .spectrum()
            .apply(|l| support_power(l, 1.0 - s));
        let sigma_pow = self.pair.sigma().spectrum().apply(|l| support_power(l, s));
        trace_product(rho_pow.matrix(), sigma_pow.matrix())
    }
}

impl OverlapCurve for PhiCurve<'_> {
    fn log_overlap(&self, s: f64) -> f64 {
        let t = self.overlap(s);
        if t > 0.0 {
            t.ln()
        } else {
            f64::NEG_INFINITY
        }
    }
}

/// `phi_tilde(s) = log Tr exp((1-s) log rho + s log sigma)`; full rank only.
#[derive(Debug, Clone)]
pub struct GoldenThompsonCurve {
    log_rho: HermitianMatrix,
    log_sigma: HermitianMatrix,
}

impl GoldenThompsonCurve {
    pub fn new(pair: &StatePair) -> Result<Self> {
        pair.require_full_rank("phi_tilde")?;
        Ok(Self {
            log_rho: log_from_decomposition(pair.rho().spectrum())?,
            log_sigma: log_from_decomposition(pair.sigma().spectrum())?,
        })
    }
}

impl OverlapCurve for GoldenThompsonCurve {
    fn log_overlap(&self, s: f64) -> f64 {
        let h = self.log_rho.scale(1.0 - s).add(&self.log_sigma.scale(s));
        let eig = SymmetricEigen::new(h.into_matrix()).eigenvalues;
        log_sum_exp(eig.iter().copied())
    }
}

pub(crate) fn log_sum_exp<I: Iterator<Item = f64> + Clone>(xs: I) -> f64 {
    let m = xs.clone().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return m;
    }
    m + xs.map(|x| (x - m).exp()).sum::<f64>().ln()
}

fn check_s(s: f64) -> Result<()> {
    if (0.0..=1.0).contains(&s) {
        Ok(())
    } else {
        Err(Error::domain(format!("s must lie in [0, 1], got {s}")))
    }
}

/// `log Tr[rho^{1-s} sigma^s]` for `s` in `[0, 1]`.
pub fn phi(pair: &StatePair, s: f64) -> Result<f64> {
    check_s(s)?;
    Ok(PhiCurve::new(pair).log_overlap(s))
}

/// `log Tr exp((1-s) log rho + s log sigma)`; never exceeds [`phi`].
pub fn phi_tilde(pair: &StatePair, s: f64) -> Result<f64> {
    check_s(s)?;
    Ok(GoldenThompsonCurve::new(pair)?.log_overlap(s))
}

/// Quantum relative entropy `D(rho||sigma) = Tr[rho (log rho - log sigma)]` in nats.
///
/// Requires `supp rho` inside `supp sigma`; otherwise returns a domain error.
pub fn relative_entropy(pair: &StatePair) -> Result<f64> {
    let rho = pair.rho().spectrum();
    let sigma = pair.sigma().spectrum();
    let entropy_term: f64 = rho
        .eigenvalues()
        .iter()
        .filter(|&&l| l > SPECTRAL_EPS)
        .map(|&l| l * l.ln())
        .sum();
    let rho_m = pair.rho().matrix().matrix();
    let mut cross = 0.0;
    for (j, &g) in sigma.eigenvalues().iter().enumerate() {
        let y = sigma.eigenvectors().column(j);
        let weight: f64 = (y.adjoint() * rho_m * y)[(0, 0)].re;
        if g > SPECTRAL_EPS {
            cross += weight * g.ln();
        } else if weight > SPECTRAL_EPS {
            return Err(Error::domain(format!(
                "relative entropy is infinite: rho has weight {weight:e} outside the support of sigma"
            )));
        }
    }
    Ok((entropy_term - cross).max(0.0))
}

/// `D(rho||sigma)` and `D(sigma||rho)`.
pub fn relative_entropies(pair: &StatePair) -> Result<(f64, f64)> {
    Ok((relative_entropy(pair)?, relative_entropy(&pair.swapped())?))
}

/// Both evaluation routes of the Hoeffding bound at one rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HoeffdingBound {
    pub r: f64,
    /// Duality value `a* + r`; authoritative.
    pub value: f64,
    /// Direct maximization of `(-s r - phi(s)) / (1 - s)`.
    pub direct: f64,
    /// Maximizing `s` of the direct route.
    pub s_star: f64,
    /// `a*` with `Psi(a*) = r`.
    pub a_star: f64,
}

impl HoeffdingBound {
    pub fn discrepancy(&self) -> f64 {
        (self.direct - self.value).abs()
    }

    pub fn routes_agree(&self) -> bool {
        self.discrepancy() <= HOEFFDING_AGREE_TOL
    }
}

/// Legendre-transform machinery for a convex log-overlap curve with slopes
/// `-d_forward` at 0 and `d_backward` at 1.
#[derive(Debug, Clone)]
pub struct Legendre<C> {
    curve: C,
    d_forward: f64,
    d_backward: f64,
}

impl<'a> Legendre<PhiCurve<'a>> {
    /// Machinery for the quantum `phi` of a pair with mutually finite relative entropies.
    pub fn quantum(pair: &'a StatePair) -> Result<Self> {
        let (fwd, bwd) = relative_entropies(pair)?;
        Ok(Self::new(PhiCurve::new(pair), fwd, bwd))
    }
}

impl Legendre<GoldenThompsonCurve> {
    /// Machinery for `phi_tilde`; its endpoint slopes are the same relative entropies.
    pub fn golden_thompson(pair: &StatePair) -> Result<Self> {
        let (fwd, bwd) = relative_entropies(pair)?;
        Ok(Self::new(GoldenThompsonCurve::new(pair)?, fwd, bwd))
    }
}

impl<C: OverlapCurve> Legendre<C> {
    pub fn new(curve: C, d_forward: f64, d_backward: f64) -> Self {
        Self {
            curve,
            d_forward,
            d_backward,
        }
    }

    pub fn curve(&self) -> &C {
        &self.curve
    }

    /// `D(rho||sigma)`, minus the slope at `s = 0`.
    pub fn d_forward(&self) -> f64 {
        self.d_forward
    }

    /// `D(sigma||rho)`, the slope at `s = 1`.
    pub fn d_backward(&self) -> f64 {
        self.d_backward
    }

    /// The closed domain `[-D(rho||sigma), D(sigma||rho)]` of `Phi` and `Psi`.
    pub fn domain(&self) -> (f64, f64) {
        (-self.d_forward, self.d_backward)
    }

    fn check_a(&self, a: f64) -> Result<f64> {
        let (lo, hi) = self.domain();
        if !a.is_finite() || a < lo - DOMAIN_TOL || a > hi + DOMAIN_TOL {
            return Err(Error::domain(format!(
                "a = {a} outside the valid interval [{lo}, {hi}]"
            )));
        }
        Ok(a.clamp(lo, hi))
    }

    /// `Phi(a)` together with the maximizing `s`.
    pub fn capital_phi_argmax(&self, a: f64) -> Result<Maximum> {
        let a = self.check_a(a)?;
        Ok(golden_section_max(
            |s| a * s - self.curve.log_overlap(s),
            0.0,
            1.0,
        ))
    }

    /// `Phi(a) = max_{0<=s<=1} (a s - phi(s))`.
    pub fn capital_phi(&self, a: f64) -> Result<f64> {
        Ok(self.capital_phi_argmax(a)?.value)
    }

    /// `Psi(a) = Phi(a) - a`.
    pub fn capital_psi(&self, a: f64) -> Result<f64> {
        Ok(self.capital_phi(a)? - a)
    }

    /// The unique `a` with `Psi(a) = r` for `r` in `[0, D(rho||sigma)]`.
    pub fn invert_psi(&self, r: f64) -> Result<f64> {
        let d = self.d_forward;
        if !r.is_finite() || r < -DOMAIN_TOL || r > d + DOMAIN_TOL {
            return Err(Error::domain(format!(
                "r = {r} outside [0, D(rho||sigma)] = [0, {d}]"
            )));
        }
        let (lo, hi) = self.domain();
        if r >= d {
            return Ok(lo);
        }
        if r <= 0.0 {
            return Ok(hi);
        }
        let psi =
            |a: f64| golden_section_max(|s| a * s - self.curve.log_overlap(s), 0.0, 1.0).value - a;
        Ok(bisect_decreasing(psi, r, lo, hi))
    }

    fn check_rate(&self, r: f64) -> Result<()> {
        let d = self.d_forward;
        if d <= 0.0 {
            return Err(Error::domain(
                "degenerate pair: D(rho||sigma) = 0, the rate range (0, D] is empty",
            ));
        }
        if !r.is_finite() || r <= 0.0 || r > d + DOMAIN_TOL {
            return Err(Error::domain(format!(
                "r = {r} outside (0, D(rho||sigma)] = (0, {d}]"
            )));
        }
        Ok(())
    }

    /// Direct route: `max_{0<=s<=1-1e-8} (-s r - phi(s)) / (1 - s)`.
    pub fn hoeffding_direct(&self, r: f64) -> Result<Maximum> {
        self.check_rate(r)?;
        Ok(golden_section_max(
            |s| (-s * r - self.curve.log_overlap(s)) / (1.0 - s),
            0.0,
            HOEFFDING_S_CAP,
        ))
    }

    /// Hoeffding bound `b(r)` by both routes; errors if they disagree beyond
    /// [`HOEFFDING_FAIL_TOL`].
    pub fn hoeffding(&self, r: f64) -> Result<HoeffdingBound> {
        let direct = self.hoeffding_direct(r)?;
        let a_star = self.invert_psi(r.min(self.d_forward))?;
        let out = HoeffdingBound {
            r,
            value: a_star + r.min(self.d_forward),
            direct: direct.value,
            s_star: direct.arg,
            a_star,
        };
        if out.discrepancy().is_nan() || out.discrepancy() > HOEFFDING_FAIL_TOL {
            return Err(Error::NumericalConsistency {
                what: format!("Hoeffding bound routes disagree at r = {r}"),
                discrepancy: out.discrepancy(),
            });
        }
        Ok(out)
    }

    /// The `r -> 0+` limit `b(0+) = Phi(D(sigma||rho)) = D(sigma||rho)`.
    pub fn hoeffding_at_zero(&self) -> Result<f64> {
        self.capital_phi(self.d_backward)
    }

    /// `xi(t) = (t + 1) phi(t / (t + 1))` for `t >= 0`.
    pub fn xi(&self, t: f64) -> Result<f64> {
        if !t.is_finite() || t < 0.0 {
            return Err(Error::domain(format!("t must be finite and >= 0, got {t}")));
        }
        Ok((t + 1.0) * self.curve.log_overlap(t / (t + 1.0)))
    }

    /// Reconstructs `phi` from the Hoeffding bound,
    /// `phi(s) = max_r (-s r - (1 - s) b(r))`, and returns the worst absolute
    /// residual over `s_grid`.
    pub fn conversion_residual(&self, s_grid: &[f64], r_grid: &[f64]) -> Result<f64> {
        if r_grid.is_empty() {
            return Err(Error::domain("empty r grid"));
        }
        let bounds = r_grid
            .iter()
            .map(|&r| self.hoeffding(r).map(|b| (r, b.value)))
            .collect::<Result<Vec<_>>>()?;
        let mut worst = 0.0_f64;
        for &s in s_grid {
            check_s(s)?;
            let rebuilt = bounds
                .iter()
                .map(|&(r, b)| -s * r - (1.0 - s) * b)
                .fold(f64::NEG_INFINITY, f64::max);
            worst = worst.max((rebuilt - self.curve.log_overlap(s)).abs());
        }
        Ok(worst)
    }
}

/// `Phi(a)` for the quantum `phi` of `pair`.
pub fn capital_phi(pair: &StatePair, a: f64) -> Result<f64> {
    Legendre::quantum(pair)?.capital_phi(a)
}

/// `Psi(a) = Phi(a) - a`.
pub fn capital_psi(pair: &StatePair, a: f64) -> Result<f64> {
    Legendre::quantum(pair)?.capital_psi(a)
}

pub fn invert_psi(pair: &StatePair, r: f64) -> Result<f64> {
    Legendre::quantum(pair)?.invert_psi(r)
}

/// Hoeffding bound `b(r)` for `r` in `(0, D(rho||sigma)]`.
pub fn hoeffding_bound(pair: &StatePair, r: f64) -> Result<f64> {
    Ok(Legendre::quantum(pair)?.hoeffding(r)?.value)
}

/// The Hoeffding-type bound built from `phi_tilde`; at least [`hoeffding_bound`].
pub fn b_tilde(pair: &StatePair, r: f64) -> Result<f64> {
    Ok(Legendre::golden_thompson(pair)?.hoeffding(r)?.value)
}

pub fn xi(pair: &StatePair, t: f64) -> Result<f64> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::domain(format!("t must be finite and >= 0, got {t}")));
    }
    Ok((t + 1.0) * phi(pair, t / (t + 1.0))?)
}

/// Residual of rebuilding `phi` from `b(r)` on the given grids (full-rank pairs only).
pub fn conversion_check(pair: &StatePair, s_grid: &[f64], r_grid: &[f64]) -> Result<f64> {
    pair.require_full_rank("conversion check")?;
    let leg = Legendre::quantum(pair)?;
    if leg.d_forward() <= 0.0 {
        return Err(Error::domain(
            "degenerate pair: D(rho||sigma) = 0, the rate range (0, D] is empty",
        ));
    }
    leg.conversion_residual(s_grid, r_grid)
}

/// `phi` sampled on a grid of `s` values.
#[derive(Debug, Clone)]
pub struct ExponentProfile {
    pub s_grid: Vec<f64>,
    pub phi_values: Vec<f64>,
    /// One-sided second-order slope estimates at `s = 0` and `s = 1`.
    pub slope_at_zero: f64,
    pub slope_at_one: f64,
}

impl ExponentProfile {
    pub fn sample(pair: &StatePair, s_grid: &[f64]) -> Result<Self> {
        let phi_values = s_grid
            .iter()
            .map(|&s| phi(pair, s))
            .collect::<Result<Vec<_>>>()?;
        let curve = PhiCurve::new(pair);
        let h = 1e-4;
        let f = |s: f64| curve.log_overlap(s);
        let slope_at_zero = (-3.0 * f(0.0) + 4.0 * f(h) - f(2.0 * h)) / (2.0 * h);
        let slope_at_one = (3.0 * f(1.0) - 4.0 * f(1.0 - h) + f(1.0 - 2.0 * h)) / (2.0 * h);
        Ok(Self {
            s_grid: s_grid.to_vec(),
            phi_values,
            slope_at_zero,
            slope_at_one,
        })
    }

    /// Largest violation of midpoint convexity over consecutive grid triples.
    pub fn max_convexity_violation(&self) -> f64 {
        self.phi_values
            .windows(3)
            .zip(self.s_grid.windows(3))
            .map(|(v, s)| {
                let w = (s[1] - s[0]) / (s[2] - s[0]);
                v[1] - ((1.0 - w) * v[0] + w * v[2])
            })
            .fold(f64::NEG_INFINITY, f64::max)
    }
}
