//! Frames, fundamentals and invariants at regular and singular points.

mod christoffel;
mod classify;
mod frame;
mod fundamentals;
mod invariants;
mod principal;
mod ridge;

pub use christoffel::{christoffel_decompose, ModifiedChristoffel};
pub use classify::{classify_front_point, SingularityClass, SingularityReport, SingularityWitness};
pub use frame::{build_frame, Chart, FrameData, PointKind};
pub use fundamentals::{fundamentals, FundVariant, Fundamentals};
pub use invariants::{edge_invariants, EdgeInvariants, InvariantSet, InvariantValues};
pub use principal::{classical_curvatures, principal_data, PrincipalData};
pub use ridge::{ridge_order, ridge_threshold, v_derivatives, RidgeOrder, RidgeReport};

use crate::config::Tolerances;
use crate::dsl::SurfaceDef;
use crate::error::{Error, Result};

/// Everything computed at one point, for callers that need the whole chain.
#[derive(Clone, Debug)]
pub struct PointGeometry {
    pub frame: FrameData,
    pub fund: Fundamentals,
    pub principal: PrincipalData,
}

impl PointGeometry {
    pub fn at(def: &SurfaceDef, p: [f64; 2], order: usize, tol: &Tolerances) -> Result<Self> {
        let frame = build_frame(def, p, order, tol)?;
        let fund = fundamentals(&frame)?;
        let principal = principal_data(&frame, &fund)?;
        Ok(PointGeometry {
            frame,
            fund,
            principal,
        })
    }
}

/// Result of comparing the closed-form bounded branch with the classical pair
/// at the offset points `(u₀, ±δ)`.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct BranchCheck {
    pub delta: f64,
    pub kappa_nu: f64,
    /// `(closed-form κ, classical root nearest κ_ν)` at `v = +δ` and `v = −δ`.
    pub samples: [(f64, f64); 2],
    pub agrees: bool,
}

/// Selects the bounded branch numerically by limit matching to `κ_ν(u₀)` and
/// checks that the closed form picked the same root.
pub fn verify_branch(def: &SurfaceDef, u0: f64, order: usize, tol: &Tolerances) -> Result<BranchCheck> {
    let delta = tol.branch_offset * def.domain.scale();
    let axis = PointGeometry::at(def, [u0, 0.0], order, tol)?;
    let kappa_nu = axis.principal.kappa.value();
    let mut samples = [(0.0, 0.0); 2];
    let mut agrees = true;
    for (i, v) in [delta, -delta].into_iter().enumerate() {
        let g = PointGeometry::at(def, [u0, v], order, tol)?;
        let (_, _, k1, k2) = classical_curvatures(&g.frame)?;
        let (d1, d2) = ((k1 - kappa_nu).abs(), (k2 - kappa_nu).abs());
        if (d1 - d2).abs() <= tol.classify * (k1.abs() + k2.abs()) {
            return Err(Error::BranchAmbiguity(format!(
                "both roots equally close to κ_ν at v = {v}"
            )));
        }
        let pick = if d1 < d2 { k1 } else { k2 };
        let closed = g.principal.kappa.value();
        samples[i] = (closed, pick);
        agrees &= (closed - pick).abs() <= 1e-6 * (1.0 + pick.abs());
    }
    Ok(BranchCheck {
        delta,
        kappa_nu,
        samples,
        agrees,
    })
}
