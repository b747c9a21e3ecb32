//! (k,l)-center clustering of polygonal curves under the discrete and
//! continuous Fréchet distance.
//!
//! The crate provides:
//! - Fréchet distance computation and decision ([`frechet`]),
//! - minimum enclosing balls and basic geometry ([`geometry`]),
//! - curve simplification, minimum-size and minimum-error ([`simplify`]),
//! - a Gonzalez-style (c+2)-approximation, an approximate decision
//!   procedure and a 3-approximate radius search for the (k,l)-center
//!   problem ([`cluster`]),
//! - generators, center builders, extractors and verifiers for the
//!   hard instances obtained by reduction from Shortest Common
//!   Supersequence ([`hardness`]),
//! - small brute-force reference implementations used to audit the fast
//!   paths ([`oracle`]), and
//! - file formats for curves and instances ([`io`]).
//!
//! See the `examples/` directory for one runnable walk-through per
//! capability, and the `klcenter` binary for a command-line front end.

pub mod cluster;
pub mod error;
pub mod frechet;
pub mod geometry;
pub mod hardness;
pub mod io;
pub mod oracle;
pub mod simplify;

pub use cluster::{gonzalez_kl_center, kl_center_decide, kl_center_search, ClusterParams};
pub use error::{Error, Result};
pub use frechet::{continuous_frechet, discrete_frechet, Metric, PolyCurve};
pub use geometry::{min_enclosing_ball, Ball, Point};
pub use hardness::{HardInstance, ScsInstance, Variant};

/// Default numerical tolerance used by deciders and verifiers.
pub const DEFAULT_TOL: f64 = 1e-9;
