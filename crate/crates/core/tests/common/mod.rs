#![allow(dead_code)]

//! Test-only oracles, written independently of the library's numerical paths.

use hoeffding::linalg::CMatrix;
use hoeffding::{ClassicalPair, DensityOperator, HermitianMatrix, StatePair};
use num_complex::Complex64;

/// `diag(0.75, 0.25)`.
pub fn rho_star() -> DensityOperator {
    DensityOperator::diagonal(&[0.75, 0.25]).unwrap()
}

/// `0.6 |+><+| + 0.4 |-><-| = [[0.5, 0.1], [0.1, 0.5]]`.
pub fn sigma_star() -> DensityOperator {
    let m = HermitianMatrix::from_rows(&[vec![0.5, 0.1], vec![0.1, 0.5]], &[]).unwrap();
    DensityOperator::new(m).unwrap()
}

pub fn star_pair() -> StatePair {
    StatePair::new(rho_star(), sigma_star()).unwrap()
}

pub fn bernoulli() -> ClassicalPair {
    ClassicalPair::from_probabilities(vec![0.5, 0.5], vec![0.25, 0.75]).unwrap()
}

pub fn bernoulli_states() -> StatePair {
    StatePair::new(
        DensityOperator::diagonal(&[0.5, 0.5]).unwrap(),
        DensityOperator::diagonal(&[0.25, 0.75]).unwrap(),
    )
    .unwrap()
}

/// Real symmetric 2x2 `[[a, b], [b, d]]`: eigenvalues from the characteristic
/// polynomial and unit eigenvectors `(b, l - a)` (or the axes when `b = 0`).
pub fn sym2_eig(a: f64, b: f64, d: f64) -> [(f64, [f64; 2]); 2] {
    let mean = 0.5 * (a + d);
    let rad = (0.25 * (a - d) * (a - d) + b * b).sqrt();
    let l1 = mean + rad;
    let l2 = mean - rad;
    if b == 0.0 {
        return if a >= d {
            [(a, [1.0, 0.0]), (d, [0.0, 1.0])]
        } else {
            [(d, [0.0, 1.0]), (a, [1.0, 0.0])]
        };
    }
    let v = |l: f64| {
        let (x, y) = (b, l - a);
        let n = (x * x + y * y).sqrt();
        [x / n, y / n]
    };
    [(l1, v(l1)), (l2, v(l2))]
}

/// `f([[a, b], [b, d]])` for a real symmetric 2x2 matrix, entries `[m00, m01, m11]`.
pub fn sym2_fn(a: f64, b: f64, d: f64, f: impl Fn(f64) -> f64) -> [f64; 3] {
    let mut out = [0.0; 3];
    for (l, v) in sym2_eig(a, b, d) {
        let w = f(l);
        out[0] += w * v[0] * v[0];
        out[1] += w * v[0] * v[1];
        out[2] += w * v[1] * v[1];
    }
    out
}

fn sym2_trace_product(x: [f64; 3], y: [f64; 3]) -> f64 {
    x[0] * y[0] + 2.0 * x[1] * y[1] + x[2] * y[2]
}

/// `phi(s)` for the reference pair from closed-form 2x2 powers.
pub fn star_phi_oracle(s: f64) -> f64 {
    let r = sym2_fn(0.75, 0.0, 0.25, |l| l.powf(1.0 - s));
    let g = sym2_fn(0.5, 0.1, 0.5, |l| l.powf(s));
    sym2_trace_product(r, g).ln()
}

/// `phi_tilde(s)` for the reference pair via a 2x2 exponential of the log combination.
pub fn star_phi_tilde_oracle(s: f64) -> f64 {
    let lr = sym2_fn(0.75, 0.0, 0.25, f64::ln);
    let ls = sym2_fn(0.5, 0.1, 0.5, f64::ln);
    let h = [
        (1.0 - s) * lr[0] + s * ls[0],
        (1.0 - s) * lr[1] + s * ls[1],
        (1.0 - s) * lr[2] + s * ls[2],
    ];
    let e = sym2_fn(h[0], h[1], h[2], f64::exp);
    (e[0] + e[2]).ln()
}

/// Closed-form classical log-overlap on plain vectors.
pub fn classical_phi_oracle(p: &[f64], q: &[f64], s: f64) -> f64 {
    p.iter()
        .zip(q)
        .filter(|(&a, &b)| a > 0.0 && b > 0.0)
        .map(|(&a, &b)| a.powf(1.0 - s) * b.powf(s))
        .sum::<f64>()
        .ln()
}

/// `max` of `f` over `k + 1` evenly spaced points of `[lo, hi]`.
pub fn grid_max(f: impl Fn(f64) -> f64, lo: f64, hi: f64, k: usize) -> (f64, f64) {
    let mut best = (lo, f64::NEG_INFINITY);
    for i in 0..=k {
        let x = lo + (hi - lo) * i as f64 / k as f64;
        let v = f(x);
        if v > best.1 {
            best = (x, v);
        }
    }
    best
}

/// Naive Kronecker product by explicit index arithmetic.
pub fn kron_oracle(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (ar, ac) = a.shape();
    let (br, bc) = b.shape();
    let mut out = CMatrix::zeros(ar * br, ac * bc);
    for i in 0..ar * br {
        for j in 0..ac * bc {
            out[(i, j)] = a[(i / br, j / bc)] * b[(i % br, j % bc)];
        }
    }
    out
}

/// Exact i.i.d. masses by summing over all `m^n` sequences.
/// Returns `(f, g)` with the same event convention as the library.
pub fn brute_force_tails(p: &[f64], q: &[f64], n: usize, b: f64) -> (f64, f64) {
    let m = p.len();
    let total = m.pow(n as u32);
    let (mut f, mut g) = (0.0, 0.0);
    for code in 0..total {
        let mut c = code;
        let (mut pn, mut qn) = (1.0, 1.0);
        for _ in 0..n {
            let k = c % m;
            c /= m;
            pn *= p[k];
            qn *= q[k];
        }
        if pn == 0.0 && qn == 0.0 {
            continue;
        }
        // p^n <= e^{-nb} q^n, compared in logs with a tiny guard
        let llr = qn.ln() - pn.ln();
        if llr >= n as f64 * b - 1e-12 * (1.0 + (n as f64 * b).abs()) {
            f += pn;
        } else {
            g += qn;
        }
    }
    (f, g)
}

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}
