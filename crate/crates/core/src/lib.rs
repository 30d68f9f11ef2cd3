//! Topological classification of cyclic actions of order `N` on compact bordered
//! surfaces of algebraic genus `p` with `N > p - 1`.
//!
//! The closed-form counts live in [`classify`]; [`oracle`] recomputes them by brute force.

pub mod bsk;
pub mod classify;
pub mod cli;
pub mod error;
pub mod extremal;
pub mod oracle;
pub mod report;
pub mod signature;
pub mod surface;
pub mod zmod;

pub use bsk::{BskMap, Presentation, Violation};
pub use error::{Error, Result};
pub use signature::{Family, NecSignature, QuotientType, Sign};
pub use surface::{ActionSense, SurfaceTopology};
