//! Life-cycle maintenance optimization for multi-component infrastructure
//! systems exposed to stochastic hazards and nonstationary deterioration.
//!
//! The library assembles a factored finite-horizon Markov decision process
//! from three physical layers — site hazard curves, gamma-process
//! corrosion, and state-dependent seismic fragility — and solves it
//! exactly with Kronecker-factored tensor value iteration. A Monte Carlo
//! simulator evaluates the resulting policies (and rule-based baselines)
//! over the system life-cycle.
//!
//! Module map:
//! - [`hazard`]: hazard curves, event probabilities, correlated intensity
//!   fields across sites.
//! - [`deterioration`]: nonstationary gamma process and exact
//!   exposure-time-indexed corrosion-state transition matrices.
//! - [`damage`]: Park-Ang damage index, seismic damage states, and the
//!   synthetic response generator used to produce fragility training data.
//! - [`fragility`]: softmax transition models conditioned on prior damage
//!   and corrosion, fitted by maximum likelihood, marginalized over the
//!   annual hazard.
//! - [`mdp`]: component state indexing, action semantics, structured cost
//!   model, factored MDP assembly.
//! - [`solver`]: tensor value iteration via mode-k products, the dense
//!   oracle, and complexity accounting.
//! - [`simulator`]: life-cycle Monte Carlo under optimal, rule-based, or
//!   no-action policies.
//! - [`config`] / [`bundle`]: file-driven model assembly for the CLI.

pub mod damage;
pub mod deterioration;
pub mod error;
pub mod hazard;
pub mod numerics;

pub use error::{Error, Result};
