//! Exact i.i.d. tail probabilities by the method of types.
//!
//! For a pair `(p, q)` on `m` symbols and a threshold `b`, the sequences of
//! length `n` split into
//!
//! ```text
//! f-event: (1/n) log(q^n / p^n) >= b        (equivalently p^n <= e^{-nb} q^n)
//! g-event: (1/n) log(q^n / p^n) <  b
//! ```
//!
//! `f_n(b)` is the `p^n`-mass of the first and `g_n(b)` the `q^n`-mass of the
//! second. Both events are unions of type classes, so the sums run over the
//! `C(n+m-1, m-1)` count vectors instead of the `m^n` sequences, accumulated
//! in log space.

use crate::error::{Error, Result};
use crate::ns::ClassicalPair;

/// Default cap on the number of type classes enumerated.
pub const DEFAULT_TYPE_CAP: u128 = 2_000_000;

/// Relative guard band for log-likelihood-ratio comparisons; boundary types
/// within the band go to the f-event.
pub const LLR_GUARD: f64 = 1e-12;

/// A count vector over the alphabet with its log multinomial coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct TypeClass {
    pub counts: Vec<usize>,
    /// `log(n! / prod counts!)`.
    pub log_multinomial: f64,
}

/// Number of count vectors of `n` over `m` symbols, `C(n+m-1, m-1)`, saturating.
pub fn type_count(n: usize, m: usize) -> u128 {
    if m == 0 {
        return u128::from(n == 0);
    }
    let k = (m - 1) as u128;
    let top = (n + m - 1) as u128;
    let mut acc: u128 = 1;
    for i in 1..=k {
        // acc * (top - k + i) / i stays integral at every step
        acc = match acc.checked_mul(top - k + i) {
            Some(v) => v / i,
            None => return u128::MAX,
        };
    }
    acc
}

/// Lexicographic enumeration of count vectors summing to `n`.
///
/// Starts at `(n, 0, ..., 0)` and walks down to `(0, ..., 0, n)`.
#[derive(Debug, Clone)]
pub struct TypeEnumerator {
    counts: Vec<usize>,
    log_fact: Vec<f64>,
    done: bool,
}

impl TypeEnumerator {
    pub fn new(n: usize, m: usize) -> Self {
        let mut counts = vec![0; m];
        if m > 0 {
            counts[0] = n;
        }
        Self {
            counts,
            log_fact: log_factorials(n),
            done: m == 0,
        }
    }

    fn advance(&mut self) {
        let m = self.counts.len();
        // rightmost position before the tail that still has mass to move right
        let Some(i) = (0..m.saturating_sub(1)).rev().find(|&i| self.counts[i] > 0) else {
            self.done = true;
            return;
        };
        let tail: usize = self.counts[i + 1..].iter().sum();
        self.counts[i] -= 1;
        for c in &mut self.counts[i + 1..] {
            *c = 0;
        }
        self.counts[i + 1] = tail + 1;
    }
}

impl Iterator for TypeEnumerator {
    type Item = TypeClass;

    fn next(&mut self) -> Option<TypeClass> {
        if self.done {
            return None;
        }
        let n = self.log_fact.len() - 1;
        let log_multinomial =
            self.log_fact[n] - self.counts.iter().map(|&c| self.log_fact[c]).sum::<f64>();
        let out = TypeClass {
            counts: self.counts.clone(),
            log_multinomial,
        };
        self.advance();
        Some(out)
    }
}

/// `log k!` for `k = 0..=n`.
pub fn log_factorials(n: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = 0.0;
    out.push(0.0);
    for k in 1..=n {
        acc += (k as f64).ln();
        out.push(acc);
    }
    out
}

/// Streaming log-sum-exp.
#[derive(Debug, Clone, Copy)]
pub(crate) struct LogSum {
    max: f64,
    scaled: f64,
}

impl LogSum {
    pub(crate) fn new() -> Self {
        Self {
            max: f64::NEG_INFINITY,
            scaled: 0.0,
        }
    }

    pub(crate) fn add(&mut self, log_x: f64) {
        if log_x == f64::NEG_INFINITY {
            return;
        }
        if log_x <= self.max {
            self.scaled += (log_x - self.max).exp();
        } else {
            self.scaled = self.scaled * (self.max - log_x).exp() + 1.0;
            self.max = log_x;
        }
    }

    pub(crate) fn ln(&self) -> f64 {
        if self.max == f64::NEG_INFINITY {
            f64::NEG_INFINITY
        } else {
            self.max + self.scaled.ln()
        }
    }
}

/// Exact tail masses of the f/g split at one `(n, b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IidTails {
    pub n: usize,
    pub b: f64,
    /// `log f_n(b)`, the log `p^n`-mass of the f-event.
    pub log_f: f64,
    /// `log g_n(b)`, the log `q^n`-mass of the g-event.
    pub log_g: f64,
    /// `p^n`-mass of the g-event; `f + p_mass_g = 1`.
    pub p_mass_g: f64,
    /// `q^n`-mass of the f-event; `g + q_mass_f = 1`.
    pub q_mass_f: f64,
    /// Relative guard band used on the boundary.
    pub guard: f64,
    pub types_enumerated: u128,
}

impl IidTails {
    pub fn f(&self) -> f64 {
        self.log_f.exp()
    }

    pub fn g(&self) -> f64 {
        self.log_g.exp()
    }

    /// `-(1/n) log f_n(b)`.
    pub fn rate_f(&self) -> f64 {
        -self.log_f / self.n as f64
    }

    /// `-(1/n) log g_n(b)`.
    pub fn rate_g(&self) -> f64 {
        -self.log_g / self.n as f64
    }
}

fn checked_types(cp: &ClassicalPair, n: usize, cap: u128) -> Result<u128> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    let count = type_count(n, cp.len());
    if count > cap {
        return Err(Error::Resource {
            what: "type classes",
            required: count,
            cap,
        });
    }
    Ok(count)
}

/// Enumerates all type classes once and accumulates the four event masses.
pub fn iid_tails(cp: &ClassicalPair, n: usize, b: f64, cap: u128) -> Result<IidTails> {
    if !b.is_finite() {
        return Err(Error::domain(format!(
            "threshold b must be finite, got {b}"
        )));
    }
    let types_enumerated = checked_types(cp, n, cap)?;
    let log_p: Vec<f64> = cp.p().iter().map(|&x| x.ln()).collect();
    let log_q: Vec<f64> = cp.q().iter().map(|&x| x.ln()).collect();
    let threshold = n as f64 * b;

    let (mut f_p, mut g_p, mut f_q, mut g_q) =
        (LogSum::new(), LogSum::new(), LogSum::new(), LogSum::new());
    for t in TypeEnumerator::new(n, cp.len()) {
        let mut lp = t.log_multinomial;
        let mut lq = t.log_multinomial;
        let mut llr = 0.0;
        let mut magnitude = threshold.abs();
        for (k, &c) in t.counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let c = c as f64;
            lp += c * log_p[k];
            lq += c * log_q[k];
            let r = c * (log_q[k] - log_p[k]);
            if r.is_finite() {
                magnitude += r.abs();
            }
            llr += r;
        }
        if lp == f64::NEG_INFINITY && lq == f64::NEG_INFINITY {
            continue;
        }
        // p = 0 symbols push llr to +inf (f-event), q = 0 symbols to -inf (g-event)
        let in_f = llr >= threshold - LLR_GUARD * magnitude.max(1.0);
        if in_f {
            f_p.add(lp);
            f_q.add(lq);
        } else {
            g_p.add(lp);
            g_q.add(lq);
        }
    }
    Ok(IidTails {
        n,
        b,
        log_f: f_p.ln(),
        log_g: g_q.ln(),
        p_mass_g: g_p.ln().exp(),
        q_mass_f: f_q.ln().exp(),
        guard: LLR_GUARD,
        types_enumerated,
    })
}

/// `f_n(b) = p^n{p^n <= e^{-nb} q^n}`.
pub fn iid_tail_f(cp: &ClassicalPair, n: usize, b: f64) -> Result<f64> {
    Ok(iid_tails(cp, n, b, DEFAULT_TYPE_CAP)?.f())
}

/// `g_n(b) = q^n{p^n > e^{-nb} q^n}`.
pub fn iid_tail_g(cp: &ClassicalPair, n: usize, b: f64) -> Result<f64> {
    Ok(iid_tails(cp, n, b, DEFAULT_TYPE_CAP)?.g())
}

/// `(1/2) [f_n(b) + e^{-nb} g_n(b)]`, the i.i.d. lower bound on `alpha + e^{-nb} beta`.
pub fn iid_lower_bound(cp: &ClassicalPair, n: usize, b: f64) -> Result<f64> {
    lower_bound_from_tails(&iid_tails(cp, n, b, DEFAULT_TYPE_CAP)?)
}

pub(crate) fn lower_bound_from_tails(t: &IidTails) -> Result<f64> {
    let scaled_g = (t.log_g - t.n as f64 * t.b).exp();
    Ok(0.5 * (t.f() + scaled_g))
}

/// Large-deviation target of `-(1/n) log f_n(b)`: the classical `Phi(b)`,
/// for `b` strictly inside `(-D(p||q), D(q||p))`.
pub fn cramer_rate_upper(cp: &ClassicalPair, b: f64) -> Result<f64> {
    let leg = cp.legendre()?;
    let (lo, hi) = leg.domain();
    if !(b > lo && b < hi) {
        return Err(Error::domain(format!(
            "b = {b} outside the open interval ({lo}, {hi})"
        )));
    }
    leg.capital_phi(b)
}

/// Large-deviation target of `-(1/n) log g_n(b)`: `Psi(b) = Phi(b) - b`.
pub fn cramer_rate_lower(cp: &ClassicalPair, b: f64) -> Result<f64> {
    Ok(cramer_rate_upper(cp, b)? - b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bernoulli() -> ClassicalPair {
        ClassicalPair::from_probabilities(vec![0.5, 0.5], vec![0.25, 0.75]).unwrap()
    }

    #[test]
    fn enumerates_compositions_lexicographically() {
        let all: Vec<Vec<usize>> = TypeEnumerator::new(2, 3).map(|t| t.counts).collect();
        assert_eq!(
            all,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
        assert_eq!(type_count(2, 3), 6);
        assert_eq!(TypeEnumerator::new(7, 4).count() as u128, type_count(7, 4));
        assert_eq!(TypeEnumerator::new(5, 1).count(), 1);
    }

    #[test]
    fn log_multinomial_matches_factorials() {
        let t = TypeEnumerator::new(5, 3)
            .find(|t| t.counts == vec![2, 2, 1])
            .unwrap();
        assert!((t.log_multinomial - 30.0_f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn single_draw_reduces_to_one_sum() {
        let cp = bernoulli();
        // log(q/p) = (ln 1/2, ln 3/2)
        assert!((iid_tail_f(&cp, 1, 0.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((iid_tail_f(&cp, 1, -1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((iid_tail_g(&cp, 1, 0.0).unwrap() - 0.25).abs() < 1e-15);
        assert!((iid_tail_g(&cp, 1, 1.0).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn bernoulli_pair_of_length_two() {
        let cp = bernoulli();
        assert!((iid_tail_f(&cp, 2, 0.0).unwrap() - 0.25).abs() < 1e-15);
        assert!((iid_tail_g(&cp, 2, 0.0).unwrap() - 7.0 / 16.0).abs() < 1e-15);
        assert!((iid_lower_bound(&cp, 2, 0.0).unwrap() - 11.0 / 32.0).abs() < 1e-15);
    }

    #[test]
    fn identical_distributions() {
        let cp = ClassicalPair::from_probabilities(vec![0.3, 0.7], vec![0.3, 0.7]).unwrap();
        for n in 1..6 {
            assert!((iid_tail_f(&cp, n, 0.0).unwrap() - 1.0).abs() < 1e-14);
            assert_eq!(iid_tail_g(&cp, n, 0.0).unwrap(), 0.0);
            assert!((iid_lower_bound(&cp, n, 0.0).unwrap() - 0.5).abs() < 1e-14);
        }
        assert!(cramer_rate_upper(&cp, 0.0).is_err());
    }

    #[test]
    fn disjoint_supports() {
        let cp = ClassicalPair::from_probabilities(vec![1.0, 0.0], vec![0.0, 1.0]).unwrap();
        for b in [-2.0, 0.0, 3.0] {
            let t = iid_tails(&cp, 3, b, DEFAULT_TYPE_CAP).unwrap();
            // p-typical sequences have log-ratio -inf, never in the f-event
            assert_eq!(t.f(), 0.0);
            // q-typical sequences have +inf, never in the g-event
            assert_eq!(t.g(), 0.0);
            assert_eq!(iid_lower_bound(&cp, 3, b).unwrap(), 0.0);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let cp = bernoulli();
        match iid_tails(&cp, 10, 0.0, 5) {
            Err(Error::Resource { required, cap, .. }) => {
                assert_eq!(required, 11);
                assert_eq!(cap, 5);
            }
            other => panic!("{other:?}"),
        }
        assert!(iid_tails(&cp, 0, 0.0, 5).is_err());
    }

    #[test]
    fn phi_at_lower_endpoint_is_zero() {
        let cp = bernoulli();
        let leg = cp.legendre().unwrap();
        assert!(leg.capital_phi(-leg.d_forward()).unwrap().abs() < 1e-12);
        let near = cramer_rate_upper(&cp, -leg.d_forward() + 1e-9).unwrap();
        assert!(near.abs() < 1e-8);
    }

    #[test]
    fn log_sum_accumulates() {
        let mut acc = LogSum::new();
        assert_eq!(acc.ln(), f64::NEG_INFINITY);
        for x in [0.1_f64, 0.2, 0.3] {
            acc.add(x.ln());
        }
        assert!((acc.ln() - 0.6_f64.ln()).abs() < 1e-15);
    }
}
