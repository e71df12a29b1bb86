//! Error exponents for binary quantum hypothesis testing.
//!
//! Given density operators `rho` (null) and `sigma` (alternative) this crate
//! computes the Rényi log-overlap `phi(s) = log Tr[rho^{1-s} sigma^s]`, its
//! Legendre pair `(Phi, Psi)`, the Hoeffding bound `b(r)` and the
//! Golden–Thompson variant `b_tilde(r)`. It reduces a quantum pair to the
//! Nussbaum–Szkola classical pair with the same `phi`, evaluates classical
//! i.i.d. tail probabilities exactly by the method of types, simulates
//! optimal (Helstrom) tests on `rho^{(x)n}` versus `sigma^{(x)n}`, and checks
//! data-processing inequalities under random CPTP channels.
//!
//! All exponents are in nats.

#![forbid(unsafe_code)]

pub mod channel;
pub mod error;
pub mod format;
pub mod functionals;
pub mod helstrom;
pub mod iid;
pub mod linalg;
pub mod ns;
pub mod optimize;
pub mod random;
pub mod report;
pub mod state;

pub use channel::{
    random_channel, random_channel_seeded, relent_monotonicity_check, renyi_monotonicity_check,
    KrausChannel,
};
pub use error::{Error, Result};
pub use functionals::{
    b_tilde, capital_phi, capital_psi, conversion_check, hoeffding_bound, invert_psi, phi,
    phi_tilde, relative_entropy, xi, ExponentProfile, HoeffdingBound, Legendre,
};
pub use helstrom::{
    conjecture_probe, error_probabilities, helstrom_test, lemma_check, spectral_tails,
    ErrorProbabilities, NFoldPair, ProbeRow, SpectralTails, TestOperator,
};
pub use iid::{cramer_rate_upper, iid_lower_bound, iid_tail_f, iid_tail_g, iid_tails, IidTails};
pub use linalg::{
    matrix_exp, matrix_log, matrix_power, positive_part_projection, spectral_decompose,
    tensor_power, HermitianMatrix, SpectralDecomposition,
};
pub use ns::{
    classical_phi, classical_relative_entropy, min_overlap, ns_distributions, ClassicalPair,
};
pub use state::{DensityOperator, StatePair};
