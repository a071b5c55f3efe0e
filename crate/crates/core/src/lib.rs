//! Numerical laboratory for parametric spectral statistics of quantum
//! chaotic spectra.
//!
//! The crate computes the number covariance `Sigma11(r; Lambda)`, the
//! number variance `Sigma2(r)`, the parametric number variance
//! `V(r; Lambda)` and the spectral cross-form factor `K(k; Lambda)`
//! three independent ways and cross-validates them:
//!
//! * Monte Carlo over parametric Gaussian ensembles ([`ensembles`] +
//!   [`counting`]),
//! * quantum kicked rotors on the torus ([`rotor`]),
//! * theory engines: compact binary-correlation closed forms
//!   ([`theory`]) and adaptive quadrature of the exact integral
//!   formulas ([`exact`]).
//!
//! The [`acceptance`] module bundles the cross-validation criteria; the
//! `paramcov` binary exposes every engine as a subcommand.

pub mod acceptance;
pub mod cache;
pub mod config;
pub mod counting;
pub mod ensembles;
pub mod error;
pub mod exact;
pub mod quadrature;
pub mod report;
pub mod rotor;
pub mod runner;
pub mod theory;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
