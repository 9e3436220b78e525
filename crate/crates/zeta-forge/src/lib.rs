//! Exact values of ζ(2k) and the machinery behind them.
//!
//! The crate has two halves. The exact half computes tangent numbers,
//! cotangent (Taylor) numbers and Bernoulli numbers by integer/rational
//! recurrences and turns them into closed forms `q_k · π^{2k}` for `ζ(2k)`,
//! cross-validated over four independent routes. The numerical half is a lab
//! for the series and integral representations that lead to those closed
//! forms: bracketed partial sums, a tanh-sinh quadrature engine for the
//! digamma-difference integrals, principal values, boundary-value (`±iε`)
//! limits, and a first-order ODE check for `φ(x) = ψ(x) − ψ(1−x)`.
//!
//! The examples directory is the front door; each example is a runnable tour
//! of one capability:
//!
//! | example | shows |
//! |---|---|
//! | `zeta_even_values` | four-route exact `ζ(2k)` table |
//! | `sequence_tables` | tangent/cotangent/Bernoulli tables, cot-derivative polynomials |
//! | `basel_coulomb` | the charged-grid story: force/potential sums with tail brackets |
//! | `digamma_reflection` | series vs. integral digamma, polygamma reflection on a grid |
//! | `principal_value_phi` | `φ(x)` as unit-interval integral, principal value, closed form |
//! | `plemelj_limit` | `∓iε` regularization sweep, imaginary part → `π` |
//! | `ode_verification` | `φ′ = π² + φ²`, the log-kernel product identity, Fubini inner integral |
//!
//! Run one with `cargo run --release --example zeta_even_values`.
//!
//! A thin CLI (`zeta-forge`) wraps the same operations as subcommands; see the
//! [`cli`] module or `zeta-forge --help`.

pub mod cli;
pub mod error;
pub mod exact_kernel;
pub mod quadrature_lab;
pub mod report;
pub mod sequences;
pub mod series_lab;
pub mod zeta_engine;

mod kahan;
mod par;

pub use error::{Error, Result};
pub use report::GridReport;
