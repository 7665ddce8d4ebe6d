//! Exact analysis of rational line arrangements in the projective plane.
//!
//! The crate computes, with arbitrary-precision rational arithmetic
//! throughout:
//!
//! - intersection combinatorics of a line arrangement (singular points,
//!   multiplicity profiles, per-line profiles);
//! - the graded module of Jacobian syzygies of the defining polynomial,
//!   its minimal generator degrees, the Milnor algebra Hilbert function,
//!   and the total Tjurina number by two independent routes;
//! - freeness and plus-one-generated classification via the du Plessis-Wall
//!   and Dimca-Sticlaru criteria;
//! - the classical real-arrangement inequalities (Melchior, Shnurnikov),
//!   per-multiplicity point-count bounds, and the resulting boundedness
//!   certificates: free arrangements with intersection multiplicity at most
//!   five have at most 522 lines, and plus-one generated arrangements with
//!   multiplicity at most four have at most 47;
//! - an integer feasibility engine over multiplicity profiles that produces
//!   witnesses or infeasibility certificates for those necessary conditions.
//!
//! See the `examples/` directory for one runnable example per capability,
//! and the `linarr` binary for the file-driven command-line interface.

pub mod arrangement;
pub mod bounds;
pub mod classify;
pub mod cli;
pub mod envelope;
pub mod error;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod syzygy;

pub use arrangement::{Arrangement, MultiplicityProfile, ProjectiveLine, SingularPoint};
pub use classify::ClassificationReport;
pub use envelope::{ConstraintSet, FeasibilityResult};
pub use error::{Error, Result};
pub use rational::Rat;
pub use syzygy::SyzygyAnalysis;
