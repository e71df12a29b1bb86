//! Quantum channels in Kraus form and the data-processing checks.

use rand::Rng;

use crate::error::{Error, Result};
use crate::functionals::{relative_entropy, PhiCurve};
use crate::linalg::{max_abs_diff, CMatrix, HermitianMatrix};
use crate::random::complex_gaussian;
use crate::state::{DensityOperator, StatePair};

/// Completeness tolerance `max |sum K^dagger K - I|`.
pub const COMPLETENESS_TOL: f64 = 1e-10;
/// Identity weight mixed into channel outputs that are not full rank.
pub const REGULARIZATION: f64 = 1e-9;

const OUTPUT_TRACE_TOL: f64 = 1e-10;

/// A CPTP map `rho -> sum_k K_k rho K_k^dagger`.
#[derive(Debug, Clone)]
pub struct KrausChannel {
    d_in: usize,
    d_out: usize,
    kraus: Vec<CMatrix>,
}

impl KrausChannel {
    pub fn new(kraus: Vec<CMatrix>) -> Result<Self> {
        let Some(first) = kraus.first() else {
            return Err(Error::validation(
                "channel needs at least one Kraus operator",
                0.0,
            ));
        };
        let (d_out, d_in) = first.shape();
        if d_in == 0 || d_out == 0 {
            return Err(Error::validation("Kraus operators must be nonempty", 0.0));
        }
        if let Some(k) = kraus.iter().find(|k| k.shape() != (d_out, d_in)) {
            return Err(Error::validation(
                format!(
                    "Kraus operators must share one shape: {d_out}x{d_in} vs {}x{}",
                    k.nrows(),
                    k.ncols()
                ),
                0.0,
            ));
        }
        if kraus
            .iter()
            .any(|k| k.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())))
        {
            return Err(Error::validation("Kraus entries must be finite", f64::NAN));
        }
        let ch = Self { d_in, d_out, kraus };
        let residual = ch.completeness_residual();
        if residual.is_nan() || residual > COMPLETENESS_TOL {
            return Err(Error::validation(
                "trace preservation: max |sum K^dagger K - I|",
                residual,
            ));
        }
        Ok(ch)
    }

    pub fn d_in(&self) -> usize {
        self.d_in
    }

    pub fn d_out(&self) -> usize {
        self.d_out
    }

    pub fn kraus(&self) -> &[CMatrix] {
        &self.kraus
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            d_in: dim,
            d_out: dim,
            kraus: vec![CMatrix::identity(dim, dim)],
        }
    }

    /// Qubit channel with Kraus set `{I/2, X/2, Y/2, Z/2}`; maps every state to `I/2`.
    pub fn fully_depolarizing_qubit() -> Self {
        use num_complex::Complex64 as C;
        let z = C::new(0.0, 0.0);
        let h = C::new(0.5, 0.0);
        let ih = C::new(0.0, 0.5);
        let ops = vec![
            CMatrix::from_row_slice(2, 2, &[h, z, z, h]),
            CMatrix::from_row_slice(2, 2, &[z, h, h, z]),
            CMatrix::from_row_slice(2, 2, &[z, -ih, ih, z]),
            CMatrix::from_row_slice(2, 2, &[h, z, z, -h]),
        ];
        Self::new(ops).expect("Pauli Kraus set is complete")
    }

    /// `max |sum K^dagger K - I|`.
    pub fn completeness_residual(&self) -> f64 {
        let mut acc = CMatrix::zeros(self.d_in, self.d_in);
        for k in &self.kraus {
            acc += k.adjoint() * k;
        }
        max_abs_diff(&acc, &CMatrix::identity(self.d_in, self.d_in))
    }

    pub fn apply(&self, rho: &DensityOperator) -> Result<DensityOperator> {
        if rho.dim() != self.d_in {
            return Err(Error::validation(
                format!(
                    "channel input dimension {} vs state dimension {}",
                    self.d_in,
                    rho.dim()
                ),
                0.0,
            ));
        }
        let mut out = CMatrix::zeros(self.d_out, self.d_out);
        let r = rho.matrix().matrix();
        for k in &self.kraus {
            out += k * r * k.adjoint();
        }
        DensityOperator::with_trace_tol(HermitianMatrix::new(out)?, OUTPUT_TRACE_TOL)
    }

    pub fn apply_pair(&self, pair: &StatePair) -> Result<StatePair> {
        StatePair::new(self.apply(pair.rho())?, self.apply(pair.sigma())?)
    }
}

/// Random channel from a Haar-like isometry `V` of shape `(k d_out) x d_in`,
/// sliced into `k` Kraus blocks.
pub fn random_channel<R: Rng>(
    d_in: usize,
    d_out: usize,
    k: usize,
    rng: &mut R,
) -> Result<KrausChannel> {
    if d_in == 0 || d_out == 0 || k == 0 || k * d_out < d_in {
        return Err(Error::validation(
            format!("no isometry from dimension {d_in} into {k} x {d_out}"),
            (k * d_out) as f64 - d_in as f64,
        ));
    }
    let mut v = complex_gaussian(k * d_out, d_in, rng);
    orthonormalize_columns(&mut v);
    let kraus = (0..k)
        .map(|b| v.rows(b * d_out, d_out).into_owned())
        .collect();
    KrausChannel::new(kraus)
}

/// [`random_channel`] from a seed.
pub fn random_channel_seeded(
    d_in: usize,
    d_out: usize,
    k: usize,
    seed: u64,
) -> Result<KrausChannel> {
    random_channel(d_in, d_out, k, &mut crate::random::rng_from_seed(seed))
}

/// Modified Gram–Schmidt, applied twice.
fn orthonormalize_columns(v: &mut CMatrix) {
    for _ in 0..2 {
        for j in 0..v.ncols() {
            for i in 0..j {
                let proj = v.column(i).dotc(&v.column(j));
                let ci = v.column(i).into_owned();
                v.column_mut(j)
                    .axpy(-proj, &ci, num_complex::Complex64::new(1.0, 0.0));
            }
            let norm = v.column(j).norm();
            v.column_mut(j).unscale_mut(norm);
        }
    }
}

/// `max_s (Tr[rho^{1-s} sigma^s] - Tr[E(rho)^{1-s} E(sigma)^s])`; nonpositive
/// when the overlap is monotone under the channel.
pub fn renyi_monotonicity_check(
    pair: &StatePair,
    ch: &KrausChannel,
    s_grid: &[f64],
) -> Result<f64> {
    let out = ch.apply_pair(pair)?;
    let before = PhiCurve::new(pair);
    let after = PhiCurve::new(&out);
    let mut worst = f64::NEG_INFINITY;
    for &s in s_grid {
        if !(0.0..=1.0).contains(&s) {
            return Err(Error::domain(format!("s must lie in [0, 1], got {s}")));
        }
        worst = worst.max(before.overlap(s) - after.overlap(s));
    }
    Ok(worst)
}

/// Result of the relative-entropy data-processing check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelEntCheck {
    /// `D(E(rho)||E(sigma)) - D(rho||sigma)`.
    pub violation: f64,
    /// Identity weight mixed into the outputs, if any.
    pub regularization: Option<f64>,
}

pub fn relent_monotonicity_check(pair: &StatePair, ch: &KrausChannel) -> Result<RelEntCheck> {
    let before = relative_entropy(pair)?;
    let mut out = ch.apply_pair(pair)?;
    let mut regularization = None;
    if !out.sigma().is_full_rank() {
        out = StatePair::new(
            out.rho().mix_with_identity(REGULARIZATION)?,
            out.sigma().mix_with_identity(REGULARIZATION)?,
        )?;
        regularization = Some(REGULARIZATION);
    }
    let after = relative_entropy(&out)?;
    Ok(RelEntCheck {
        violation: after - before,
        regularization,
    })
}
