//! Exact and asymptotic computations for the random cluster model on small
//! regular graphs.
//!
//! The crate has three layers:
//!
//! * exact enumeration: [`partition`] computes `Z_G(q,w)` by edge-subset
//!   sums, by an exact big-integer Tutte polynomial, and by spin-configuration
//!   sums, together with the rank-1 and rank-2 approximants `Z1`/`Z2`;
//! * rank-2 analysis: [`rank2`] decomposes a positive definite 2x2 edge
//!   matrix into rotation frames and locates the two special rotations
//!   `t0` (growth-rate maximizer) and `t1` (centered root circle), while
//!   [`subgraph_poly`] builds the subgraph counting polynomial those
//!   rotations feed into and [`roots`] extracts and audits its zeros;
//! * limit values: [`bethe`] evaluates the per-vertex growth rate
//!   `Phi_{d,q,w}` through the trigonometric maximum and independently
//!   through fixed points of the degree-(d-1) recursion, classifies the
//!   phase against the critical curve `w_c(d,q)`, and maps the result onto
//!   the Tutte plane.
//!
//! Everything is deterministic: seeded sampling, fixed summation order, and
//! caps that refuse oversized instances instead of approximating.

pub mod bethe;
pub mod bipoly;
pub mod config;
pub mod error;
pub mod graphs;
pub mod partition;
pub mod rank2;
pub mod roots;
pub mod subgraph_poly;
pub(crate) mod util;
pub mod verify;

pub use bethe::{PhaseReport, Regime};
pub use bipoly::BivariatePolyZZ;
pub use config::{Caps, Tolerances};
pub use error::{Error, Result};
pub use graphs::{EdgeSubset, Graph};
pub use partition::{RcParams, SpinModel};
pub use rank2::{Rank2Frame, SpinModel2};
pub use roots::RootReport;
pub use subgraph_poly::{EvenPolyZ, SubgraphVector};
