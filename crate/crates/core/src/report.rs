//! Tabular reports behind the command line front end.
//!
//! Every table renders to CSV with a `#`-prefixed metadata header and to a
//! JSON mirror. Numbers are printed with ten significant digits so that
//! outputs are byte-stable across runs and platforms.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::channel::{relent_monotonicity_check, renyi_monotonicity_check, KrausChannel};
use crate::error::{Error, Result};
use crate::functionals::{phi, GoldenThompsonCurve, Legendre, OverlapCurve, PhiCurve};
use crate::helstrom::{conjecture_probe, lemma_check, NFoldPair};
use crate::iid::iid_tails;
use crate::ns::{classical_phi, ns_distributions, ClassicalPair};
use crate::state::StatePair;

pub const TOOL_NAME: &str = "hoeffding";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Tolerance of the Nussbaum–Szkola identity check.
pub const NS_IDENTITY_TOL: f64 = 1e-9;
/// Allowed excess of `phi_tilde` over `phi`.
pub const GOLDEN_THOMPSON_TOL: f64 = 1e-10;
/// Allowed gap between `D(rho||sigma)` and the slope estimate `-phi'(0)`.
pub const SLOPE_TOL: f64 = 1e-5;
pub const RENYI_MONOTONE_TOL: f64 = 1e-10;
pub const RELENT_MONOTONE_TOL: f64 = 1e-8;

/// Run parameters echoed into every output header.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunMeta {
    pub command: String,
    pub seed: Option<u64>,
    pub tol: f64,
    pub cap: usize,
    pub base2: bool,
}

impl RunMeta {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            seed: None,
            tol: 1e-10,
            cap: crate::linalg::DEFAULT_DIM_CAP,
            base2: false,
        }
    }

    /// Converts an exponent in nats to the display unit.
    pub fn unit(&self, nats: f64) -> f64 {
        if self.base2 {
            nats / std::f64::consts::LN_2
        } else {
            nats
        }
    }

    fn units(&self) -> &'static str {
        if self.base2 {
            "bits"
        } else {
            "nats"
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Text(String),
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Int(x as u64)
    }
}

impl From<&str> for Cell {
    fn from(x: &str) -> Self {
        Cell::Text(x.to_string())
    }
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Num(x) => fmt_num(*x),
            Cell::Int(i) => i.to_string(),
            Cell::Text(t) => t.clone(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Num(x) if x.is_finite() => json!(x),
            Cell::Num(x) => json!(fmt_num(*x)),
            Cell::Int(i) => json!(i),
            Cell::Text(t) => json!(t),
        }
    }
}

/// Ten significant digits in scientific notation; `inf`, `-inf`, `nan` otherwise.
pub fn fmt_num(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        }
    } else if x == 0.0 {
        "0".into()
    } else {
        format!("{x:.9e}")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub meta: RunMeta,
    pub tolerances: Vec<(&'static str, f64)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(meta: &RunMeta, columns: Vec<&'static str>) -> Self {
        Self {
            meta: meta.clone(),
            tolerances: Vec::new(),
            columns,
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn header_lines(&self) -> Vec<String> {
        let m = &self.meta;
        let mut out = vec![
            format!("# tool={TOOL_NAME} version={TOOL_VERSION}"),
            format!("# command={}", m.command),
            format!(
                "# seed={}",
                m.seed.map_or_else(|| "none".to_string(), |s| s.to_string())
            ),
            format!("# tol={} cap={} units={}", fmt_num(m.tol), m.cap, m.units()),
        ];
        for (name, v) in &self.tolerances {
            out.push(format!("# tolerance.{name}={}", fmt_num(*v)));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.header_lines().join("\n");
        out.push('\n');
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::render).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let tolerances: serde_json::Map<String, Value> = self
            .tolerances
            .iter()
            .map(|(k, v)| (k.to_string(), json!(v)))
            .collect();
        json!({
            "metadata": {
                "tool": TOOL_NAME,
                "version": TOOL_VERSION,
                "run": self.meta,
                "tolerances": tolerances,
            },
            "columns": self.columns,
            "rows": self.rows.iter().map(|r| r.iter().map(Cell::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }

    /// Rendered cells of one column.
    pub fn column(&self, name: &str) -> Option<Vec<String>> {
        let idx = self.columns.iter().position(|c| *c == name)?;
        Some(self.rows.iter().map(|r| r[idx].render()).collect())
    }
}

/// `b(r)`, `b_tilde(r)` and the duality data on a grid of rates. `r = 0`
/// rows report the `r -> 0+` limits.
pub fn bounds_table(pair: &StatePair, r_grid: &[f64], meta: &RunMeta) -> Result<Table> {
    let leg = Legendre::quantum(pair)?;
    let d_fwd = leg.d_forward();
    if d_fwd <= 0.0 {
        return Err(Error::domain(
            "degenerate pair: D(rho||sigma) = 0, the rate range (0, D] is empty",
        ));
    }
    let gt = if pair.is_full_rank() {
        Some(Legendre::golden_thompson(pair)?)
    } else {
        None
    };
    let rows = r_grid
        .par_iter()
        .map(|&r| -> Result<Vec<f64>> {
            let (b, a_star) = if r == 0.0 {
                (leg.hoeffding_at_zero()?, leg.d_backward())
            } else {
                let h = leg.hoeffding(r)?;
                (h.value, h.a_star)
            };
            let b_tilde = match &gt {
                Some(g) if r == 0.0 => g.hoeffding_at_zero()?,
                Some(g) => g.hoeffding(r)?.value,
                None => f64::NAN,
            };
            let big_phi = leg.capital_phi(a_star)?;
            Ok(vec![r, b, b_tilde, a_star, big_phi, big_phi - a_star])
        })
        .collect::<Result<Vec<_>>>()?;
    let mut t = Table::new(
        meta,
        vec![
            "r",
            "b",
            "b_tilde",
            "a_star",
            "Phi",
            "Psi",
            "D_rho_sigma",
            "D_sigma_rho",
        ],
    );
    t.tolerances = vec![
        ("hoeffding_agree", crate::functionals::HOEFFDING_AGREE_TOL),
        ("hoeffding_fail", crate::functionals::HOEFFDING_FAIL_TOL),
    ];
    for v in rows {
        let mut row: Vec<Cell> = v.iter().map(|&x| meta.unit(x).into()).collect();
        row.push(meta.unit(d_fwd).into());
        row.push(meta.unit(leg.d_backward()).into());
        t.push(row);
    }
    Ok(t)
}

/// Long-format sweep of `phi`, its Nussbaum–Szkola and Golden–Thompson
/// counterparts, `xi` and the endpoint slope check.
pub fn phi_sweep_table(pair: &StatePair, s_grid: &[f64], meta: &RunMeta) -> Result<Table> {
    let cp = ns_distributions(pair)?;
    let gt = if pair.is_full_rank() {
        Some(GoldenThompsonCurve::new(pair)?)
    } else {
        None
    };
    let mut t = Table::new(
        meta,
        vec!["quantity", "parameter", "value", "method", "tolerance_flag"],
    );
    t.tolerances = vec![
        ("ns_identity", NS_IDENTITY_TOL),
        ("golden_thompson", GOLDEN_THOMPSON_TOL),
        ("slope", SLOPE_TOL),
    ];
    let flag = |ok: bool| Cell::from(if ok { "ok" } else { "exceeded" });
    for &s in s_grid {
        let q = phi(pair, s)?;
        t.push(vec![
            "phi".into(),
            s.into(),
            meta.unit(q).into(),
            "matrix-power".into(),
            "".into(),
        ]);
        let c = classical_phi(&cp, s)?;
        t.push(vec![
            "phi".into(),
            s.into(),
            meta.unit(c).into(),
            "nussbaum-szkola".into(),
            flag((c - q).abs() < NS_IDENTITY_TOL || c == q),
        ]);
        if let Some(g) = &gt {
            let v = g.log_overlap(s);
            t.push(vec![
                "phi_tilde".into(),
                s.into(),
                meta.unit(v).into(),
                "golden-thompson".into(),
                flag(v <= q + GOLDEN_THOMPSON_TOL),
            ]);
        }
        if s < 1.0 {
            let tt = s / (1.0 - s);
            let x = (tt + 1.0) * q;
            t.push(vec![
                "xi".into(),
                tt.into(),
                meta.unit(x).into(),
                "phi-rescaled".into(),
                "".into(),
            ]);
        }
    }
    if let Ok(leg) = Legendre::quantum(pair) {
        let curve = PhiCurve::new(pair);
        let h = 1e-4;
        let slope = (-3.0 * curve.log_overlap(0.0) + 4.0 * curve.log_overlap(h)
            - curve.log_overlap(2.0 * h))
            / (2.0 * h);
        t.push(vec![
            "D_rho_sigma".into(),
            "".into(),
            meta.unit(leg.d_forward()).into(),
            "spectral".into(),
            "".into(),
        ]);
        t.push(vec![
            "D_rho_sigma".into(),
            "".into(),
            meta.unit(-slope).into(),
            "phi-slope".into(),
            flag((leg.d_forward() + slope).abs() < SLOPE_TOL),
        ]);
    }
    Ok(t)
}

/// Exact classical tails for each `n` at a fixed threshold `b`.
pub fn tails_table(
    cp: &ClassicalPair,
    n_values: &[usize],
    b: f64,
    type_cap: u128,
    meta: &RunMeta,
) -> Result<Table> {
    let leg = cp.legendre()?;
    let (lo, hi) = leg.domain();
    let (target_phi, target_psi) = if b > lo && b < hi {
        let p = leg.capital_phi(b)?;
        (p, p - b)
    } else {
        (f64::NAN, f64::NAN)
    };
    let mut t = Table::new(
        meta,
        vec![
            "n",
            "b",
            "f_n",
            "g_n",
            "rate_f",
            "rate_g",
            "target_phi",
            "target_psi",
            "gap_f",
            "gap_g",
        ],
    );
    t.tolerances = vec![("llr_guard", crate::iid::LLR_GUARD)];
    for &n in n_values {
        let tails = iid_tails(cp, n, b, type_cap)?;
        let (rf, rg) = (tails.rate_f(), tails.rate_g());
        t.push(vec![
            n.into(),
            meta.unit(b).into(),
            tails.f().into(),
            tails.g().into(),
            meta.unit(rf).into(),
            meta.unit(rg).into(),
            meta.unit(target_phi).into(),
            meta.unit(target_psi).into(),
            meta.unit(rf - target_phi).into(),
            meta.unit(rg - target_psi).into(),
        ]);
    }
    Ok(t)
}

/// Helstrom tests on the n-fold pair: errors, risk and the classical lower bound.
pub fn simulate_table(pair: &StatePair, n: usize, deltas: &[f64], meta: &RunMeta) -> Result<Table> {
    let nfold = NFoldPair::new(pair, n, meta.cap)?;
    let mut t = Table::new(
        meta,
        vec![
            "n",
            "delta",
            "alpha",
            "beta",
            "risk",
            "lower_bound",
            "slack",
        ],
    );
    for &delta in deltas {
        let test = nfold.helstrom_test(delta)?;
        let chk = lemma_check(pair, n, &test, delta, meta.cap)?;
        t.push(vec![
            n.into(),
            delta.into(),
            chk.alpha.into(),
            chk.beta.into(),
            chk.risk.into(),
            chk.lower_bound.into(),
            chk.slack.into(),
        ]);
    }
    Ok(t)
}

/// Finite-n spectral tail rates against `Phi(a)` and `Psi(a)`.
pub fn probe_table(pair: &StatePair, a: f64, n_max: usize, meta: &RunMeta) -> Result<Table> {
    let rows = conjecture_probe(pair, a, n_max, meta.cap)?;
    let mut t = Table::new(
        meta,
        vec!["n", "a", "rateF", "rateG", "Phi", "Psi", "gapF", "gapG"],
    );
    for r in rows {
        t.push(vec![
            r.n.into(),
            meta.unit(r.a).into(),
            meta.unit(r.rate_f).into(),
            meta.unit(r.rate_g).into(),
            meta.unit(r.phi).into(),
            meta.unit(r.psi).into(),
            meta.unit(r.gap_f()).into(),
            meta.unit(r.gap_g()).into(),
        ]);
    }
    Ok(t)
}

/// Data-processing checks of the overlap and of relative entropy, one row per channel.
pub fn channel_check_table(
    pair: &StatePair,
    channels: &[KrausChannel],
    s_grid: &[f64],
    meta: &RunMeta,
) -> Result<Table> {
    let rows = channels
        .par_iter()
        .map(|ch| -> Result<(f64, f64, Option<f64>)> {
            let renyi = renyi_monotonicity_check(pair, ch, s_grid)?;
            let rel = relent_monotonicity_check(pair, ch)?;
            Ok((renyi, rel.violation, rel.regularization))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut t = Table::new(
        meta,
        vec![
            "channel",
            "renyi_violation",
            "relent_violation",
            "regularization",
            "renyi_ok",
            "relent_ok",
        ],
    );
    t.tolerances = vec![
        ("renyi", RENYI_MONOTONE_TOL),
        ("relent", RELENT_MONOTONE_TOL),
    ];
    for (i, (renyi, rel, reg)) in rows.into_iter().enumerate() {
        t.push(vec![
            i.into(),
            renyi.into(),
            meta.unit(rel).into(),
            reg.unwrap_or(0.0).into(),
            (if renyi <= RENYI_MONOTONE_TOL {
                "ok"
            } else {
                "violated"
            })
            .into(),
            (if rel <= RELENT_MONOTONE_TOL {
                "ok"
            } else {
                "violated"
            })
            .into(),
        ]);
    }
    Ok(t)
}

/// Counts rows of a channel-check table that exceed either tolerance.
pub fn channel_violations(t: &Table) -> usize {
    let renyi = t.column("renyi_ok").unwrap_or_default();
    let relent = t.column("relent_ok").unwrap_or_default();
    renyi
        .iter()
        .zip(&relent)
        .filter(|(a, b)| *a != "ok" || *b != "ok")
        .count()
}

/// Nussbaum–Szkola distributions and the worst `|phi_quantum - phi_classical|` on a grid.
#[derive(Debug, Clone, Serialize)]
pub struct NsReport {
    pub classical_pair: ClassicalPair,
    pub s_grid: Vec<f64>,
    pub phi_identity_residual: f64,
    pub tolerance: f64,
}

pub fn ns_report(pair: &StatePair, s_grid: &[f64]) -> Result<NsReport> {
    let cp = ns_distributions(pair)?;
    let mut residual = 0.0_f64;
    for &s in s_grid {
        let q = phi(pair, s)?;
        let c = classical_phi(&cp, s)?;
        if q != c {
            residual = residual.max((q - c).abs());
        }
    }
    Ok(NsReport {
        classical_pair: cp,
        s_grid: s_grid.to_vec(),
        phi_identity_residual: residual,
        tolerance: NS_IDENTITY_TOL,
    })
}

/// `k` evenly spaced points on `[lo, hi]`.
pub fn linspace(lo: f64, hi: f64, k: usize) -> Vec<f64> {
    match k {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..k)
            .map(|i| lo + (hi - lo) * i as f64 / (k - 1) as f64)
            .collect(),
    }
}
