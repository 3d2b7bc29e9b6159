//! Extended height functions at singular points of the second kind.

use serde::Serialize;

use crate::config::Tolerances;
use crate::dsl::{eval_jets, SurfaceDef};
use crate::error::{Error, Result};
use crate::frontal::{FrameData, FundVariant, Fundamentals, PointKind, PrincipalData};
use crate::gauss::{gauss_classify, GermTag};
use crate::jet::Jet2;

/// Zero tolerance for the singular-point identities of `φ`.
pub const HEIGHT_IDENTITY_TOL: f64 = 1e-10;

#[derive(Clone, Debug)]
pub struct HeightContext {
    pub point: [f64; 2],
    /// Unit direction, `ν(p)` unless given explicitly.
    pub direction: [f64; 3],
    /// `⟨f(p), direction⟩`.
    pub offset: f64,
    /// `φ = ⟨f, direction⟩ − offset`.
    pub phi: Jet2,
    /// `⟨f_uv(p), f_v(p)⟩ = 0`.
    pub strongly_adapted: bool,
    /// `⟨f_uv(p), f_v(p)⟩`.
    pub adaptedness: f64,
}

impl HeightContext {
    /// `(φ_uuu, φ_uuv, φ_uvv, φ_vvv)` at the point.
    pub fn third_partials(&self) -> Result<[f64; 4]> {
        Ok([
            self.phi.partial(3, 0)?,
            self.phi.partial(2, 1)?,
            self.phi.partial(1, 2)?,
            self.phi.partial(0, 3)?,
        ])
    }

    pub fn hessian(&self) -> [[f64; 2]; 2] {
        let p = &self.phi;
        let b = p.coeff(1, 1);
        [[2.0 * p.coeff(2, 0), b], [b, 2.0 * p.coeff(0, 2)]]
    }
}

/// Height function of `def` in a fixed direction, in whatever coordinates
/// `def` uses. No adaptedness is assumed.
pub fn extended_height_with_direction(
    def: &SurfaceDef,
    p: [f64; 2],
    direction: [f64; 3],
    order: usize,
) -> Result<HeightContext> {
    let f = eval_jets(def, p, order)?;
    let offset = f.dot_const(direction).value();
    let phi = f.dot_const(direction).add_scalar(-offset);
    let fv = f.d_v();
    let fuv = fv.d_u().value();
    let fv = fv.value();
    let adaptedness = fuv[0] * fv[0] + fuv[1] * fv[1] + fuv[2] * fv[2];
    let scale = norm(fuv) * norm(fv);
    Ok(HeightContext {
        point: p,
        direction,
        offset,
        phi,
        strongly_adapted: adaptedness.abs() <= HEIGHT_IDENTITY_TOL * scale.max(1.0),
        adaptedness,
    })
}

fn norm(x: [f64; 3]) -> f64 {
    (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt()
}

/// Height function in the normal direction at a second-kind point on the u-axis.
pub fn extended_height(fr: &FrameData) -> Result<HeightContext> {
    if fr.kind != PointKind::SecondKind || fr.point[1] != 0.0 {
        return Err(Error::KindMismatch(format!(
            "extended height functions need a second-kind point on the u-axis, got {:?} at ({}, {})",
            fr.kind, fr.point[0], fr.point[1]
        )));
    }
    let n = fr.nu.value();
    let offset = fr.f.dot_const(n).value();
    let phi = fr.f.dot_const(n).add_scalar(-offset);
    let fuv = fr.f_u.d_v().value();
    let fv = fr.f_v.value();
    let adaptedness = fuv[0] * fv[0] + fuv[1] * fv[1] + fuv[2] * fv[2];
    let scale = (norm(fuv) * norm(fv)).max(1.0);
    let first = [phi.value(), phi.coeff(1, 0), phi.coeff(0, 1)];
    let bound = HEIGHT_IDENTITY_TOL * scale.max(norm(fr.f.value())).max(norm(fr.f_u.value()));
    if first.iter().any(|x| x.abs() > bound) {
        return Err(Error::ConsistencyViolation {
            check: "singular-height".into(),
            detail: format!("φ, φ_u, φ_v = {first:?} at a point where the direction is ν(p)"),
        });
    }
    Ok(HeightContext {
        point: fr.point,
        direction: n,
        offset,
        phi,
        strongly_adapted: adaptedness.abs() <= HEIGHT_IDENTITY_TOL * scale,
        adaptedness,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum D4Tag {
    #[serde(rename = "D4plus")]
    D4Plus,
    #[serde(rename = "D4minus")]
    D4Minus,
    #[serde(rename = "NotD4-degenerate")]
    NotD4Degenerate,
    #[serde(rename = "NotApplicable")]
    NotApplicable,
}

impl D4Tag {
    pub fn name(self) -> &'static str {
        match self {
            D4Tag::D4Plus => "D4plus",
            D4Tag::D4Minus => "D4minus",
            D4Tag::NotD4Degenerate => "NotD4-degenerate",
            D4Tag::NotApplicable => "NotApplicable",
        }
    }

    pub fn is_d4(self) -> bool {
        matches!(self, D4Tag::D4Plus | D4Tag::D4Minus)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HeightReport {
    pub corank: usize,
    pub hessian: [[f64; 2]; 2],
    /// `N̂(p)`, which the Hessian must equal in its `vv` slot.
    pub n_hat: f64,
    pub parabolic: bool,
    pub third_partials: Option<[f64; 4]>,
    pub delta_phi: Option<f64>,
    pub delta_phi_closed_form: Option<f64>,
    /// `4L̂(p)²Ĝ(p)·Vκ(p)`.
    pub delta_phi_ridge_form: Option<f64>,
    pub v_kappa: f64,
    pub d4_tag: D4Tag,
    pub fold_link: Option<bool>,
    pub strongly_adapted: bool,
    pub notes: Vec<String>,
}

/// Rank test of `hess φ(p)` against the parabolicity of `p`.
pub fn height_corank(
    hc: &HeightContext,
    fund: &Fundamentals,
    pd: &PrincipalData,
    tol: &Tolerances,
) -> Result<HeightReport> {
    if fund.variant != FundVariant::SecondKind {
        return Err(Error::KindMismatch("height corank needs second-kind fundamentals".into()));
    }
    let h = hc.hessian();
    let n_hat = fund.n.value();
    // Scale of second derivatives: the frame norms times |N̂|, floored by the
    // other second fundamental coefficients.
    let scale = [fund.l.value(), fund.m.value(), n_hat, fund.e.value(), fund.g.value()]
        .iter()
        .fold(f64::MIN_POSITIVE, |m, x| m.max(x.abs()));
    let tr = h[0][0] + h[1][1];
    let det = h[0][0] * h[1][1] - h[0][1] * h[0][1];
    let disc = (0.25 * tr * tr - det).max(0.0).sqrt();
    let eig = [0.5 * tr + disc, 0.5 * tr - disc];
    let rank = eig.iter().filter(|x| x.abs() > tol.classify * scale).count();
    let corank = 2 - rank;

    let k = pd.kappa.value();
    let parabolic = k.abs() <= tol.classify * pd.curvature_scale();
    let n_zero = n_hat.abs() <= tol.classify * scale;
    if (corank == 2) != parabolic || n_zero != parabolic {
        return Err(Error::CorankPropositionViolated(format!(
            "corank {corank}, κ(p) = {k:e}, N̂(p) = {n_hat:e}"
        )));
    }
    let mut notes = Vec::new();
    let display = [h[0][0], h[0][1], h[1][1] - n_hat];
    if display.iter().any(|x| x.abs() > 1e-9 * scale) {
        notes.push(format!(
            "Hessian differs from N̂·diag(0,1) by {display:?}"
        ));
    }
    Ok(HeightReport {
        corank,
        hessian: h,
        n_hat,
        parabolic,
        third_partials: None,
        delta_phi: None,
        delta_phi_closed_form: None,
        delta_phi_ridge_form: None,
        v_kappa: pd.along_v(&pd.kappa).value(),
        d4_tag: D4Tag::NotApplicable,
        fold_link: None,
        strongly_adapted: hc.strongly_adapted,
        notes,
    })
}

/// Discriminant of the binary cubic with coefficients `(a, b, c, d)` given as
/// the third partials `(φ_uuu, φ_uuv, φ_uvv, φ_vvv)`.
pub fn cubic_discriminant(t: [f64; 4]) -> f64 {
    let [a, b, c, d] = t;
    a * a * d * d - 6.0 * a * b * c * d - 3.0 * b * b * c * c + 4.0 * b * b * b * d + 4.0 * a * c * c * c
}

/// `4L̂²(L̂N̂_v − M̂(N̂_u + M̂))` at the base point.
pub fn delta_closed_form(fund: &Fundamentals) -> f64 {
    let (l, m) = (fund.l.value(), fund.m.value());
    let nu = fund.n.coeff(1, 0);
    let nv = fund.n.coeff(0, 1);
    4.0 * l * l * (l * nv - m * (nu + m))
}

fn delta_scale(t: [f64; 4]) -> f64 {
    t.iter().fold(0.0f64, |m, x| m.max(x.abs())).powi(4)
}

fn agree(a: f64, b: f64, rel: f64, floor: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(floor)
}

/// `(Δ_φ from third partials, closed form when strongly adapted)`.
pub fn delta_phi(hc: &HeightContext, fund: Option<&Fundamentals>, tol: &Tolerances) -> Result<(f64, Option<f64>)> {
    let h = hc.hessian();
    let t = hc.third_partials()?;
    let scale = t
        .iter()
        .chain(h.iter().flatten())
        .fold(f64::MIN_POSITIVE, |m, x| m.max(x.abs()));
    if h.iter().flatten().any(|x| x.abs() > tol.classify * scale) {
        return Err(Error::NotCorank2(format!("hess φ(p) = {h:?}")));
    }
    let raw = cubic_discriminant(t);
    let closed = match fund {
        Some(fd) if hc.strongly_adapted && fd.variant == FundVariant::SecondKind => {
            let c = delta_closed_form(fd);
            if !agree(raw, c, tol.closed_form, tol.closed_form.sqrt() * delta_scale(t)) {
                return Err(Error::ClosedFormMismatch { raw, closed: c });
            }
            Some(c)
        }
        _ => None,
    };
    Ok((raw, closed))
}

fn violation(check: &str, detail: String) -> Error {
    Error::ConsistencyViolation {
        check: check.into(),
        detail,
    }
}

/// D4± type of the height function, with the ridge and Gauss-map links checked.
pub fn d4_classify(
    hc: &HeightContext,
    fr: &FrameData,
    fund: &Fundamentals,
    pd: &PrincipalData,
    tol: &Tolerances,
) -> Result<HeightReport> {
    let mut rep = height_corank(hc, fund, pd, tol)?;
    if rep.corank < 2 {
        rep.notes.push("corank 1: not a D4 point".into());
        return Ok(rep);
    }
    let (delta, closed) = delta_phi(hc, Some(fund), tol)?;
    let t = hc.third_partials()?;
    rep.third_partials = Some(t);
    rep.delta_phi = Some(delta);
    rep.delta_phi_closed_form = closed;
    if !hc.strongly_adapted {
        rep.notes.push("coordinates not strongly adapted: closed forms skipped".into());
    }
    let zero_bound = tol.classify * delta_scale(t).max(f64::MIN_POSITIVE);
    rep.d4_tag = if delta > zero_bound {
        D4Tag::D4Plus
    } else if delta < -zero_bound {
        D4Tag::D4Minus
    } else {
        D4Tag::NotD4Degenerate
    };

    // (i) Δ_φ ≠ 0 ⇔ parabolic and not a ridge point.
    let vk = rep.v_kappa;
    let ridge_free = vk.abs() > crate::frontal::ridge_threshold(pd, 1, tol);
    if rep.d4_tag.is_d4() != ridge_free {
        return Err(violation(
            "delta-vs-ridge",
            format!("Δ_φ = {delta:e} but Vκ(p) = {vk:e}"),
        ));
    }
    // (ii) Δ_φ = 4L̂²Ĝ·Vκ in strongly adapted coordinates.
    if hc.strongly_adapted {
        let l = fund.l.value();
        let ridge_form = 4.0 * l * l * fund.g.value() * vk;
        rep.delta_phi_ridge_form = Some(ridge_form);
        if !agree(delta, ridge_form, tol.closed_form, tol.closed_form.sqrt() * delta_scale(t)) {
            return Err(violation(
                "delta-vs-ridge-form",
                format!("Δ_φ = {delta:e}, 4L̂²Ĝ·Vκ = {ridge_form:e}"),
            ));
        }
    }
    // (iii) D4 ⇔ the Gauss map is a fold.
    let g = gauss_classify(fr, pd, tol)?;
    let fold = g.tag == GermTag::Fold;
    rep.fold_link = Some(fold);
    if rep.d4_tag.is_d4() != fold {
        return Err(violation(
            "d4-vs-fold",
            format!("{} but the Gauss map is {}", rep.d4_tag.name(), g.tag.name()),
        ));
    }
    Ok(rep)
}
