//! Dynamic latent space models for longitudinal binary network data.
//!
//! Actors move through a low-dimensional Euclidean space over time, and the
//! probability of an edge between two actors at a given time decays with the
//! distance between them, scaled by each actor's social reach. The crate
//! provides:
//!
//! - [`model`]: the network/trajectory/parameter types, the observation and
//!   transition densities, priors, and exact and case-control log-likelihoods;
//! - [`sampler`]: a Metropolis-Hastings-within-Gibbs sampler with missing-edge
//!   imputation, Procrustes reorientation of the stored draws, and adaptive
//!   proposal tuning during burn-in;
//! - [`predict`]: one-step-ahead latent and edge prediction from a fitted
//!   chain, plus a naive time-averaging baseline and hard thresholding;
//! - [`attraction`]: detection and quantification of edge attraction (one
//!   actor drifting toward another) from the same posterior draws;
//! - [`synth`]: forward simulation of networks from the model, with optional
//!   planted attraction and MCAR masking;
//! - [`eval`]: AUC, distance-ratio diagnostics, detection scores, MSE, and a
//!   joint-distribution (Geweke-style) sampler validation test.

pub mod attraction;
pub mod eval;
pub mod matrix;
pub mod model;
pub mod numeric;
pub mod predict;
pub mod sampler;
pub mod synth;
