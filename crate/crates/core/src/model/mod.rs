//! Model data types, observation/transition densities, priors, and the exact
//! and case-control log-likelihoods.

mod controls;
mod latent;
mod likelihood;
mod network;
mod params;

pub use controls::{sample_controls, ControlSet, Stratum};
pub use latent::LatentTrajectories;
pub use likelihood::{
    edge_prob, eta, log_likelihood_case_control, log_likelihood_exact, log_prior_latent,
    log_prior_params,
};
pub use network::{Cell, CellId, DynamicNetwork, Imputation};
pub use params::{ModelParams, PriorConfig};

use thiserror::Error;

/// Tolerance on the radii simplex constraint when evaluating densities.
pub const SIMPLEX_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("network needs at least 2 actors, got {0}")]
    TooFewActors(usize),
    #[error("network needs at least 1 time step")]
    NoTimeSteps,
    #[error("actor index {i} out of range for n = {n}")]
    ActorOutOfRange { i: usize, n: usize },
    #[error("time index {t} out of range for T = {t_len}")]
    TimeOutOfRange { t: usize, t_len: usize },
    #[error("self-dyad ({0}, {0}) is structurally excluded")]
    SelfDyad(usize),
    #[error("actor label count {labels} does not match actor count {n}")]
    LabelMismatch { labels: usize, n: usize },
    #[error("tau2 must be positive and finite, got {0}")]
    BadTau2(f64),
    #[error("sigma2 must be positive and finite, got {0}")]
    BadSigma2(f64),
    #[error("beta coefficients must be finite")]
    BadBeta,
    #[error("radii must have length {want}, got {got}")]
    RadiiLength { want: usize, got: usize },
    #[error("radii must be positive and sum to 1 (deviation {0:e})")]
    RadiiOffSimplex(f64),
    #[error("prior hyperparameter `{name}` must be strictly positive, got {value}")]
    BadHyper { name: &'static str, value: f64 },
    #[error("positions must all be finite")]
    NonFinitePositions,
    #[error("latent dimensions (n = {xn}, T = {xt}) do not match the network (n = {yn}, T = {yt})")]
    ShapeMismatch { xn: usize, xt: usize, yn: usize, yt: usize },
    #[error("imputation state does not match the network shape")]
    ImputationMismatch,
    #[error("control set does not match the network shape")]
    ControlsMismatch,
    #[error("stratum for sender {i} at time {t} records size {size} but holds no samples")]
    EmptyStratum { i: usize, t: usize, size: usize },
}
