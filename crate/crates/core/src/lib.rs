//! Survival tree and forest models for right-censored data.
//!
//! The crate fits recursive partitions whose terminal nodes carry
//! nonparametric cumulative-hazard estimates, with a choice of splitting
//! statistics: two-sample log-rank, random splits, the sup-norm difference
//! of within-child Nelson-Aalen curves, and an IPCW-weighted version of
//! that difference which removes the bias that covariate-dependent
//! censoring injects into curve comparisons. A simulation module provides
//! closed-form generative scenarios with truth oracles, and the
//! `evaluation` module hosts the benchmark harnesses exposed by the CLI.
//!
//! Curve and estimator kernels are generic over the scalar type through
//! `num_traits::Float`; the model layer (trees, forests, scenarios, IO)
//! is pinned to [`Real`].

pub mod censoring;
pub mod error;
pub mod estimators;
pub mod evaluation;
pub mod forest;
pub mod io;
pub mod laws;
pub mod rngutil;
pub mod scenarios;
pub mod splitting;
pub mod stepfn;
pub mod tree;

/// Scalar type used by the model layer.
pub type Real = f64;

/// Cumulative hazard curve over [`Real`] time.
pub type Hazard = stepfn::HazardCurve<Real>;

/// Survival curve over [`Real`] time.
pub type Survival = stepfn::SurvivalCurve<Real>;

pub use error::{Error, Result};
pub use estimators::{SurvivalRecord, TauPolicy};
// pub use forest::{Forest, ForestConfig};
// pub use io::Dataset;
