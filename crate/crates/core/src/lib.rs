//! Numerical laboratory for Hadamard-type integral inequalities on
//! r-convex and coordinated r-convex functions.
//!
//! Functions are parsed from text ([`funcmodel`]), checked for r-convexity
//! on sample grids ([`convexity`]), and fed to evaluators that integrate both
//! sides of each bound with composite Gauss–Legendre rules ([`bounds`],
//! [`quadrature`]). [`cli`] drives everything from the command line.

pub mod bounds;
pub mod cli;
pub mod convexity;
pub mod corpus;
pub mod error;
pub mod funcmodel;
pub mod means;
pub mod numfmt;
pub mod quadrature;

pub use bounds::{BoundReport, TheoremId, Variant};
pub use error::{Error, Result};
pub use funcmodel::{Axis, Domain, Expr, Interval, PositiveFunction, Rectangle};
pub use means::RParam;
pub use quadrature::QuadratureConfig;
