//! Distance-regular graph toolkit: generators, parameter feasibility,
//! spectra, clique geometry, quotient structure, symmetry bounds, and a
//! structural classifier for putative intersection arrays.

pub mod classifier;
pub mod dual;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod motion;
pub mod params;
pub mod report;
pub mod scalar;
pub mod spectral;

pub use dual::DualGraph;
pub use error::{Error, Result};
pub use geometry::{CliqueGeometryReport, MetschReport, NeighborhoodKind};
pub use classifier::{CaseTag, ClassificationOutcome, ClassifierConfig, Label};
pub use graph::Graph;
pub use motion::{Automorphism, MotionReport};
pub use params::IntersectionArray;
pub use report::InequalityReport;
pub use spectral::SpectralProfile;

/// Default floating-point scalar for the spectral recurrences.
pub type Float = f64;
/// Exact scalar for integral-eigenvalue paths.
pub type Rational = num_rational::BigRational;
