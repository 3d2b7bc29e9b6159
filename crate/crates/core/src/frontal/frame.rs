use serde::Serialize;

use crate::config::Tolerances;
use crate::dsl::{eval_jets, DeclaredKind, SurfaceDef};
use crate::error::{Error, Result};
use crate::jet::{Jet1, Jet2, JetVec3};

/// Coordinate chart the frame was built in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Chart {
    /// Regular point, frame `{f_u, f_v}`.
    Plain,
    /// Adapted coordinates with `f_v = v h`, frame `{f_u, h}`.
    FirstKind,
    /// Adapted coordinates with `f_u + ε(u) f_v = v h`, frame `{h, f_v}`.
    SecondKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointKind {
    Regular,
    FirstKind,
    SecondKind,
    Degenerate,
}

/// Jets of the frame of `f` at one point.
///
/// Orders for a surface evaluated at order `N`: `f` is `N`, `f_u, f_v` are
/// `N−1`, `h, ν, λ` are `N−2`.
#[derive(Clone, Debug)]
pub struct FrameData {
    pub point: [f64; 2],
    pub chart: Chart,
    pub f: JetVec3,
    pub f_u: JetVec3,
    pub f_v: JetVec3,
    pub h: JetVec3,
    /// `ε(u)` along the u-axis through the point (zero outside the second-kind chart).
    pub eps: Jet1,
    pub nu: JetVec3,
    /// `λ = det(f_u, f_v, ν)`.
    pub lambda: Jet2,
    /// `det(e₁, e₂, ν) = |e₁ × e₂|`; `λ = v · λ_frame` in adapted charts.
    pub lambda_frame: Jet2,
    pub kind: PointKind,
    pub is_front: bool,
    /// Smallest singular value of d(f, ν) at the point, relative to the largest.
    pub front_sigma: f64,
    pub orientation_sign: f64,
    /// Sign of the principal-curvature discriminant root, fixed on the u-axis.
    pub axis_branch_sign: Option<f64>,
}

impl FrameData {
    pub fn order(&self) -> usize {
        self.nu.order()
    }

    /// First frame vector: `f_u`, `f_u` or `h`.
    pub fn e1(&self) -> &JetVec3 {
        match self.chart {
            Chart::Plain | Chart::FirstKind => &self.f_u,
            Chart::SecondKind => &self.h,
        }
    }

    /// Second frame vector: `f_v`, `h` or `f_v`.
    pub fn e2(&self) -> &JetVec3 {
        match self.chart {
            Chart::Plain | Chart::SecondKind => &self.f_v,
            Chart::FirstKind => &self.h,
        }
    }

    /// Jet of the coordinate `v` at the base point.
    pub fn v_jet(&self) -> Jet2 {
        Jet2::var_v(self.point, self.order())
    }

    pub fn eps_jet(&self) -> Jet2 {
        Jet2::lift(&self.eps, self.point[1]).truncate(self.order())
    }

    /// Null vector field `η` of the adapted chart, as component jets.
    pub fn eta(&self) -> Option<(Jet2, Jet2)> {
        let n = self.order();
        let b = self.point;
        match self.chart {
            Chart::Plain => None,
            Chart::FirstKind => Some((Jet2::zero(b, n), Jet2::constant(1.0, b, n))),
            Chart::SecondKind => Some((Jet2::constant(1.0, b, n), self.eps_jet())),
        }
    }

    pub fn is_singular(&self) -> bool {
        matches!(
            self.kind,
            PointKind::FirstKind | PointKind::SecondKind | PointKind::Degenerate
        )
    }

    pub fn require_singular(&self) -> Result<()> {
        if self.is_singular() {
            Ok(())
        } else {
            Err(Error::NotSingular(self.lambda.value()))
        }
    }
}

fn norm(x: [f64; 3]) -> f64 {
    (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt()
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Smallest over largest singular value of the 6×2 matrix with columns `a`, `b`.
fn sigma_ratio(a: [f64; 6], b: [f64; 6]) -> f64 {
    let aa: f64 = a.iter().map(|x| x * x).sum();
    let bb: f64 = b.iter().map(|x| x * x).sum();
    let ab: f64 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
    // Gram determinant via Cauchy–Binet, free of cancellation.
    let mut det = 0.0;
    for i in 0..6 {
        for j in i + 1..6 {
            let m = a[i] * b[j] - a[j] * b[i];
            det += m * m;
        }
    }
    let half = 0.5 * (aa + bb);
    let smax2 = half + (0.25 * (aa - bb) * (aa - bb) + ab * ab).sqrt();
    if smax2 == 0.0 {
        return 0.0;
    }
    det.sqrt() / smax2
}

fn unit_normal(n: &JetVec3, e1: &JetVec3, e2: &JetVec3) -> Result<JetVec3> {
    let scale = norm(e1.value()) * norm(e2.value());
    if !(norm(n.value()) > 1e-12 * scale) {
        return Err(Error::DegenerateFrame("frame vectors are parallel".into()));
    }
    n.normalized()
}

/// Builds the frame at `p` using jets of order `order`.
pub fn build_frame(def: &SurfaceDef, p: [f64; 2], order: usize, tol: &Tolerances) -> Result<FrameData> {
    if order < 4 {
        return Err(Error::OrderExceeded {
            requested: 4,
            order,
        });
    }
    let f = eval_jets(def, p, order)?;
    let f_u = f.d_u();
    let f_v = f.d_v();
    let (fu0, fv0) = (f_u.value(), f_v.value());
    let area = norm(cross(fu0, fv0));
    let regular = area > tol.classify * norm(fu0) * norm(fv0) && area > 0.0;

    let chart = match def.declared_kind {
        DeclaredKind::FirstKindAdapted => Chart::FirstKind,
        DeclaredKind::SecondKindAdapted => Chart::SecondKind,
        DeclaredKind::Regular if regular => Chart::Plain,
        DeclaredKind::Regular => {
            return Err(Error::AdaptedCoordinateViolation(format!(
                "declared regular but f is singular at ({}, {})",
                p[0], p[1]
            )))
        }
        DeclaredKind::Unknown if regular => Chart::Plain,
        DeclaredKind::Unknown => {
            if p[1] != 0.0 {
                return Err(Error::AdaptedCoordinateViolation(format!(
                    "singular point ({}, {}) off the u-axis",
                    p[0], p[1]
                )));
            }
            if f_v.try_map(|c| c.divide_out_v(tol.divide)).is_ok() {
                Chart::FirstKind
            } else {
                Chart::SecondKind
            }
        }
    };

    let n = order;
    let (h, eps) = match chart {
        Chart::Plain => (f_v.truncate(n - 2), Jet1::constant(0.0, p[0], n - 1)),
        Chart::FirstKind => {
            let h = f_v
                .try_map(|c| c.divide_by_v(tol.divide))
                .map_err(|e| violation(e, "f_v is not divisible by v"))?;
            (h, Jet1::constant(0.0, p[0], n - 1))
        }
        Chart::SecondKind => {
            let eps = second_kind_eps(def, p, n)?;
            let w = f_u.add(&f_v.scale(&Jet2::lift(&eps, p[1])));
            let h = if p[1] == 0.0 {
                w.try_map(|c| c.divide_out_v(tol.divide))
            } else {
                w.try_map(|c| c.divide_by_v(tol.divide))
            }
            .map_err(|e| violation(e, "f_u + ε f_v is not divisible by v"))?;
            (h, eps)
        }
    };

    let (e1, e2) = match chart {
        Chart::Plain => (&f_u, &f_v),
        Chart::FirstKind => (&f_u, &h),
        Chart::SecondKind => (&h, &f_v),
    };
    let cross_j = e1.cross(e2);
    let nu = unit_normal(&cross_j, e1, e2)?;
    let lambda = JetVec3::det(&f_u, &f_v, &nu);
    let lambda_frame = JetVec3::det(e1, e2, &nu);

    let nu_u = nu.d_u().value();
    let nu_v = nu.d_v().value();
    let col = |a: [f64; 3], b: [f64; 3]| [a[0], a[1], a[2], b[0], b[1], b[2]];
    let front_sigma = sigma_ratio(col(fu0, nu_u), col(fv0, nu_v));
    let is_front = front_sigma > tol.front;

    let lf0 = lambda_frame.value();
    let kind = match chart {
        Chart::Plain => PointKind::Regular,
        _ if p[1] != 0.0 => PointKind::Regular,
        Chart::FirstKind => PointKind::FirstKind,
        Chart::SecondKind => {
            // ηλ = λ_u + ε λ_v = ε(u₀) λ_frame on the axis
            let eta_lambda = eps.value() * lf0;
            if eta_lambda.abs() <= tol.classify * lf0.abs() {
                PointKind::SecondKind
            } else {
                PointKind::FirstKind
            }
        }
    };

    if chart != Chart::Plain && p[1] == 0.0 {
        let axis = lambda.restrict_to_axis();
        if axis.max_abs() > 1e-8 * lambda.max_abs().max(lf0.abs()) {
            return Err(Error::AdaptedCoordinateViolation(format!(
                "λ does not vanish along the u-axis (max coefficient {:e})",
                axis.max_abs()
            )));
        }
    }

    let mut fr = FrameData {
        point: p,
        chart,
        f,
        f_u,
        f_v,
        h,
        eps,
        nu,
        lambda,
        lambda_frame,
        kind,
        is_front,
        front_sigma,
        orientation_sign: lf0.signum(),
        axis_branch_sign: None,
    };
    fr.axis_branch_sign = match chart {
        Chart::Plain => None,
        _ if p[1] == 0.0 => super::principal::local_branch_sign(&fr).ok(),
        _ => build_frame(def, [p[0], 0.0], order, tol)
            .ok()
            .and_then(|foot| super::principal::local_branch_sign(&foot).ok()),
    };
    Ok(fr)
}

fn violation(e: Error, what: &str) -> Error {
    match e {
        Error::NotDivisibleByV { residual } => {
            Error::AdaptedCoordinateViolation(format!("{what} (residual {residual:e})"))
        }
        other => other,
    }
}

/// `ε(u) = −⟨f_u, f_v⟩ / |f_v|²` on the u-axis through `p`.
fn second_kind_eps(def: &SurfaceDef, p: [f64; 2], n: usize) -> Result<Jet1> {
    let foot = if p[1] == 0.0 {
        None
    } else {
        Some(eval_jets(def, [p[0], 0.0], n)?)
    };
    let f = match &foot {
        Some(f) => f.clone(),
        None => eval_jets(def, p, n)?,
    };
    let (fu, fv) = (f.d_u(), f.d_v());
    let gg = fv.norm_sq();
    if !(gg.value() > 0.0) {
        return Err(Error::DegenerateFrame("f_v vanishes at a second-kind point".into()));
    }
    let eps = -(fu.dot(&fv).div(&gg)?);
    Ok(eps.restrict_to_axis())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_surface;

    fn frame(src: &str, p: [f64; 2]) -> Result<FrameData> {
        build_frame(&parse_surface(src).unwrap(), p, 6, &Tolerances::default())
    }

    #[test]
    fn plane_is_regular() {
        let fr = frame("f = (u, v, 0)", [0.1, 0.2]).unwrap();
        assert_eq!(fr.kind, PointKind::Regular);
        assert_eq!(fr.chart, Chart::Plain);
        assert_eq!(fr.nu.value(), [0.0, 0.0, 1.0]);
        assert!((fr.lambda.value() - 1.0).abs() < 1e-15);
        assert!(fr.lambda.coeffs()[1..].iter().all(|c| c.abs() < 1e-15));
    }

    #[test]
    fn cuspidal_edge_model() {
        let fr = frame("f = (u, v^2, v^3)", [0.0, 0.0]).unwrap();
        assert_eq!(fr.chart, Chart::FirstKind);
        assert_eq!(fr.kind, PointKind::FirstKind);
        assert!(fr.is_front);
        assert_eq!(fr.h.value(), [0.0, 2.0, 0.0]);
        assert!((fr.lambda.partial(0, 1).unwrap() - 2.0).abs() < 1e-14);
    }

    #[test]
    fn adapted_swallowtail_frame() {
        let fr = frame("kind = second\nf = (v - 6*u^2, u^2*v - 3*u^4, 2*u*v - 8*u^3)", [0.0, 0.0]).unwrap();
        assert_eq!(fr.kind, PointKind::SecondKind);
        assert!(fr.is_front);
        let e = fr.eps.coeffs();
        assert!(e[0].abs() < 1e-12 && (e[1] - 12.0).abs() < 1e-10);
        assert!(e[2..].iter().all(|c| c.abs() < 1e-10));
        assert_eq!(fr.h.value(), [0.0, 0.0, 2.0]);
        let nu = fr.nu.value();
        assert!(nu[0].abs() < 1e-15 && (nu[1] - 1.0).abs() < 1e-15 && nu[2].abs() < 1e-15);
    }

    #[test]
    fn flat_frontal_is_not_a_front() {
        let fr = frame("f = (u, v^2/2, 0)", [0.0, 0.0]).unwrap();
        assert_eq!(fr.kind, PointKind::FirstKind);
        assert!(!fr.is_front);
    }

    #[test]
    fn violations() {
        assert!(matches!(
            frame("kind = first\nf = (u, v, u*v)", [0.0, 0.0]),
            Err(Error::AdaptedCoordinateViolation(_))
        ));
        assert!(matches!(
            frame("kind = regular\nf = (u, v^2, v^3)", [0.0, 0.0]),
            Err(Error::AdaptedCoordinateViolation(_))
        ));
        assert!(matches!(
            frame("f = (u, (v - 0.5)^2, (v - 0.5)^3)", [0.0, 0.5]),
            Err(Error::AdaptedCoordinateViolation(_))
        ));
        assert!(matches!(
            frame("kind = first\nf = (u + v^2, u + v^2, v^3)", [0.0, 0.0]),
            Err(Error::DegenerateFrame(_))
        ));
    }

    #[test]
    fn nu_is_unit_and_normal() {
        let fr = frame("kind = first\nf = (u, u^2/2 + v^2/2, v^3/3 + u^4)", [0.1, 0.0]).unwrap();
        let one = fr.nu.norm_sq();
        assert!((one.value() - 1.0).abs() < 1e-12);
        assert!(one.coeffs()[1..].iter().all(|c| c.abs() < 1e-10));
        assert!(fr.nu.dot(&fr.f_u).max_abs() < 1e-10);
        assert!(fr.nu.dot(&fr.f_v).max_abs() < 1e-10);
        // f_v − v h ≡ 0
        let r = fr.f_v.sub(&fr.h.scale(&fr.v_jet()));
        assert!(r.max_abs() < 1e-14);
    }
}
