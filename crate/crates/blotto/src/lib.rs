//! Solver and sampler for continuous Colonel Blotto games.
//!
//! A Blotto game is a two-player resource-allocation contest: each player
//! spreads a fixed budget over `n` battlefields, the higher bid wins each
//! battlefield, and mixed strategies must respect the budget *almost surely*.
//! Closed-form equilibria are known only for the relaxed Lotto variant, where
//! the budget binds in expectation. This crate turns those Lotto solutions
//! into Blotto strategies by coupling the per-battlefield marginals so that
//! the total spend is constant, and lets you sample from the result.
//!
//! The pipeline, end to end:
//!
//! 1. [`game`] — validate and normalize the game datum.
//! 2. [`lotto`] — solve the equilibrium system for `(gamma, lambda)` and the
//!    per-battlefield mixture marginals `(1-p)·δ0 + p·Unif[0,b]`.
//! 3. [`mixability`] — decide whether those marginals admit a constant-sum
//!    coupling at all.
//! 4. [`decomposition`] — split the weight vector into extreme points of the
//!    budget slice of the hypercube (Carathéodory step).
//! 5. [`reduction`] — merge each component down to at most three uniforms
//!    plus one strict mixture.
//! 6. [`discretization`] — quantize the four reduced marginals on an `h`-grid.
//! 7. [`sinkhorn`] — find a feasible coupling tensor in factored form by
//!    iterative scaling against three axis marginals and one anti-diagonal
//!    marginal.
//! 8. [`sampler`] — draw discrete tuples, smooth them back to continuous
//!    budget-saturating allocations, and pick `(h, eta)` from a target
//!    accuracy `epsilon`.
//!
//! [`evaluation`] estimates expected utilities and best-response gaps by
//! Monte Carlo, and [`discrete`] builds exact rational joint mixes of
//! discrete uniform variables for the integer-valued variant of the game.
//!
//! The `blotto` binary exposes the `solve`, `check`, `sample`, `evaluate`
//! and `mix-discrete` subcommands; the `examples/` directory has one
//! runnable program per capability.

pub mod decomposition;
pub mod discrete;
pub mod discretization;
pub mod error;
pub mod evaluation;
pub mod game;
pub mod io;
pub mod lotto;
pub mod mixability;
mod poly;
pub mod reduction;
pub mod rng;
pub mod sampler;
pub mod sinkhorn;

pub use error::BlottoError;
pub use game::{chi_squared, validate_game, GameDatum, Player, PlayerRole};
pub use lotto::{f_gamma, lotto_marginals, solve_gamma, EquilibriumParams, MarginalSpec};
pub use mixability::{check_blotto_condition, is_jointly_mixable, sufficient_condition_balanced};
pub use sampler::{build_pipeline, sample_allocation, select_parameters, Allocation, PipelineArtifact};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, BlottoError>;
