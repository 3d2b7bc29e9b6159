//! Differential geometry of wave fronts from truncated Taylor jets.
//!
//! A surface is given as `f(u, v) = (X, Y, Z)` in a small expression language
//! ([`dsl`]). At a point, [`frontal::build_frame`] assembles jets of the unit
//! normal, the signed area density and the adapted frame; everything else
//! (invariants of cuspidal edges, principal curvatures, ridge orders, Gauss map
//! and height function singularities) is read from those jets.

pub mod config;
pub mod corpus;
pub mod dsl;
pub mod error;
pub mod frontal;
pub mod gauss;
pub mod height;
pub mod jet;
pub mod report;
pub mod trace;

pub use config::{Config, Tolerances};
pub use dsl::{eval_jets, parse_surface, print_surface, DeclaredKind, Domain, Expr, SurfaceDef};
pub use error::{Category, Error, Result};
pub use jet::{Jet1, Jet2, JetVec3};
pub use report::{run_report, Report, Stage};
