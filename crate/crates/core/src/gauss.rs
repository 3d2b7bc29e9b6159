//! Singularities of the Gauss map, contact of the singular and parabolic
//! curves, and boundedness of the Gaussian curvature along a cuspidal edge.

use serde::Serialize;

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::frontal::{
    ridge_order, ridge_threshold, v_derivatives, EdgeInvariants, FrameData, InvariantSet,
    PrincipalData, RidgeOrder, RidgeReport,
};
use crate::jet::{Jet2, JetVec3};

/// Whitney types of a plane-to-plane germ, plus the regular case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GermTag {
    Fold,
    Cusp,
    SwallowtailPlane,
    Lips,
    Beaks,
    Degenerate,
    /// The map is a local diffeomorphism at the point.
    Regular,
}

impl GermTag {
    pub fn name(self) -> &'static str {
        match self {
            GermTag::Fold => "fold",
            GermTag::Cusp => "cusp",
            GermTag::SwallowtailPlane => "swallowtail",
            GermTag::Lips => "lips",
            GermTag::Beaks => "beaks",
            GermTag::Degenerate => "degenerate",
            GermTag::Regular => "regular",
        }
    }

    /// Whether a criterion actually fired.
    pub fn is_decided(self) -> bool {
        !matches!(self, GermTag::Degenerate)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PlaneWitnesses {
    pub identifier: f64,
    pub d_identifier: [f64; 2],
    pub det_hess: f64,
    pub null_vector: [f64; 2],
    pub eta: f64,
    pub eta_eta: Option<f64>,
    pub eta_eta_eta: Option<f64>,
    pub scale: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PlaneGermClass {
    pub tag: GermTag,
    pub witnesses: PlaneWitnesses,
}

/// Identifier `Λ = det(dF)` and an extended null field of a plane map `F`.
pub fn plane_map_jets(f1: &Jet2, f2: &Jet2) -> (Jet2, (Jet2, Jet2)) {
    let (a, b) = (f1.d_u(), f1.d_v());
    let (c, d) = (f2.d_u(), f2.d_v());
    let lambda = &(&a * &d) - &(&b * &c);
    // Kernel of whichever row of dF is larger at the point.
    let eta = if a.value().hypot(b.value()) >= c.value().hypot(d.value()) {
        (-&b, a)
    } else {
        (-&d, c)
    };
    (lambda, eta)
}

fn hess(g: &Jet2) -> [f64; 3] {
    [2.0 * g.coeff(2, 0), g.coeff(1, 1), 2.0 * g.coeff(0, 2)]
}

fn det_hess(g: &Jet2) -> f64 {
    let h = hess(g);
    h[0] * h[2] - h[1] * h[1]
}

fn lower(g: &Jet2, a: &Jet2, b: &Jet2) -> Option<Jet2> {
    (g.order() >= 1).then(|| g.directional(a, b))
}

/// Whitney criteria for a plane germ given an identifier and a null field.
pub fn plane_map_classify(identifier: &Jet2, null_field: (&Jet2, &Jet2), tol: f64) -> Result<PlaneGermClass> {
    let l = identifier;
    if l.order() < 2 {
        return Err(Error::OrderExceeded {
            requested: 2,
            order: l.order(),
        });
    }
    let d = [l.coeff(1, 0), l.coeff(0, 1)];
    let dn = d[0].hypot(d[1]);
    let h = hess(l);
    let dh = det_hess(l);
    let scale = h
        .iter()
        .fold(dn, |m, x| m.max(x.abs()))
        .max(f64::MIN_POSITIVE);
    if l.value().abs() > tol * scale {
        return Err(Error::NotSingular(l.value()));
    }
    let (a, b) = null_field;
    let en = a.value().hypot(b.value());
    let e1 = l.directional(a, b);
    let e2 = lower(&e1, a, b);
    let e3 = e2.as_ref().and_then(|g| lower(g, a, b));
    let mut w = PlaneWitnesses {
        identifier: l.value(),
        d_identifier: d,
        det_hess: dh,
        null_vector: [a.value(), b.value()],
        eta: e1.value(),
        eta_eta: e2.as_ref().map(Jet2::value),
        eta_eta_eta: e3.as_ref().map(Jet2::value),
        scale,
    };
    let nz = |x: Option<f64>, m: i32| -> Result<bool> {
        match x {
            Some(x) => Ok(x.abs() > tol * scale * en.powi(m)),
            None => Err(Error::OrderExceeded {
                requested: m as usize + 1,
                order: l.order(),
            }),
        }
    };
    let tag = if en == 0.0 {
        GermTag::Degenerate
    } else if nz(Some(w.eta), 1)? {
        GermTag::Fold
    } else if dn > tol * scale {
        if nz(w.eta_eta, 2)? {
            GermTag::Cusp
        } else if nz(w.eta_eta_eta, 3)? {
            GermTag::SwallowtailPlane
        } else {
            GermTag::Degenerate
        }
    } else if dh > tol * scale * scale {
        GermTag::Lips
    } else if dh < -tol * scale * scale && nz(w.eta_eta, 2)? {
        GermTag::Beaks
    } else {
        GermTag::Degenerate
    };
    if en == 0.0 {
        w.eta = 0.0;
    }
    Ok(PlaneGermClass { tag, witnesses: w })
}

#[derive(Clone, Debug)]
pub struct GaussIdentifier {
    /// `Λ = det(ν_u, ν_v, ν)`.
    pub lambda: Jet2,
    /// `Λ̃ = κ`.
    pub lambda_tilde: Jet2,
    /// Principal vector `V` of κ, a null field of ν on the parabolic set.
    pub null_field: (Jet2, Jet2),
    /// `(−⟨ν_v, e⟩, ⟨ν_u, e⟩)` for a fixed unit vector `e`; null for ν wherever Λ = 0.
    pub direct_null_field: (Jet2, Jet2),
    /// `max |Λ − κκ̂|` over the jet coefficients.
    pub residual: f64,
    pub bound: f64,
}

/// `det(ν_u, ν_v, ν)`; needs no principal data, so it also covers umbilic planes.
pub fn gauss_lambda(fr: &FrameData) -> Jet2 {
    let nu = &fr.nu;
    JetVec3::det(&nu.d_u(), &nu.d_v(), nu)
}

fn direct_null_field(fr: &FrameData) -> (Jet2, Jet2) {
    let nu_u = fr.nu.d_u();
    let nu_v = fr.nu.d_v();
    let norm = |x: [f64; 3]| (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
    let (pu, pv) = (nu_u.value(), nu_v.value());
    let (w, n) = if norm(pu) >= norm(pv) { (pu, norm(pu)) } else { (pv, norm(pv)) };
    let e = if n > 0.0 { w.map(|x| x / n) } else { [0.0, 0.0, 1.0] };
    (-&nu_v.dot_const(e), nu_u.dot_const(e))
}

pub fn gauss_identifier(fr: &FrameData, pd: &PrincipalData, tol: &Tolerances) -> Result<GaussIdentifier> {
    if !fr.is_front {
        return Err(Error::PreconditionNotMet("the Gauss map identifier needs a front".into()));
    }
    let lambda = gauss_lambda(fr);
    let kk = &pd.kappa * &pd.kappa_hat;
    let residual = (&lambda - &kk).max_abs();
    let bound = tol.identifier * lambda.max_abs().max(kk.max_abs()).max(f64::MIN_POSITIVE);
    if residual > bound {
        return Err(Error::InconsistentIdentifier { residual, bound });
    }
    Ok(GaussIdentifier {
        lambda,
        lambda_tilde: pd.kappa.clone(),
        null_field: (pd.v1.clone(), pd.v2.clone()),
        direct_null_field: direct_null_field(fr),
        residual,
        bound,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremWitnesses {
    pub kappa: f64,
    pub d_kappa: [f64; 2],
    pub curvature_scale: f64,
    pub ridge: Option<RidgeReport>,
    pub det_hess_kappa: Option<f64>,
    /// `V⁽²⁾κ(p)`, used for beaks.
    pub v2_kappa: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GaussReport {
    pub tag: GermTag,
    pub theorem: TheoremWitnesses,
    /// Whitney criteria applied to `Λ̃ = κ` with null field `V`.
    pub whitney: Option<PlaneGermClass>,
    /// Whitney criteria applied to `Λ = det(ν_u, ν_v, ν)`.
    pub direct: Option<PlaneGermClass>,
    pub identifier_residual: f64,
}

impl GaussReport {
    /// Tags of the two dual routes that fired alongside the ridge route.
    pub fn dual_tags(&self) -> impl Iterator<Item = GermTag> + '_ {
        self.whitney.iter().chain(&self.direct).map(|c| c.tag)
    }
}

fn theorem_route(pd: &PrincipalData, tol: &Tolerances) -> Result<(GermTag, TheoremWitnesses)> {
    let k = &pd.kappa;
    let cs = pd.curvature_scale();
    let d = [k.coeff(1, 0), k.coeff(0, 1)];
    let mut w = TheoremWitnesses {
        kappa: k.value(),
        d_kappa: d,
        curvature_scale: cs,
        ridge: None,
        det_hess_kappa: None,
        v2_kappa: None,
    };
    if k.value().abs() > tol.classify * cs {
        return Ok((GermTag::Regular, w));
    }
    if d[0].hypot(d[1]) > tol.classify * cs {
        let r = ridge_order(pd, 2, tol)?;
        let tag = match r.order {
            RidgeOrder::NotRidge => GermTag::Fold,
            RidgeOrder::Order(1) => GermTag::Cusp,
            RidgeOrder::Order(2) => GermTag::SwallowtailPlane,
            _ => GermTag::Degenerate,
        };
        w.ridge = Some(r);
        return Ok((tag, w));
    }
    let h = hess(k);
    let hs = h.iter().fold(cs, |m, x| m.max(x.abs()));
    let dh = det_hess(k);
    w.det_hess_kappa = Some(dh);
    let v2 = v_derivatives(pd, 2).get(1).copied();
    w.v2_kappa = v2;
    let tag = if dh > tol.classify * hs * hs {
        GermTag::Lips
    } else if dh < -tol.classify * hs * hs {
        match v2 {
            Some(x) if x.abs() > ridge_threshold(pd, 2, tol) => GermTag::Beaks,
            Some(_) => GermTag::Degenerate,
            None => {
                return Err(Error::OrderExceeded {
                    requested: 2,
                    order: k.order(),
                })
            }
        }
    } else {
        GermTag::Degenerate
    };
    Ok((tag, w))
}

/// Type of the Gauss map at a point, by ridge order of κ and cross-checked
/// against the Whitney criteria on both identifiers.
pub fn gauss_classify(fr: &FrameData, pd: &PrincipalData, tol: &Tolerances) -> Result<GaussReport> {
    let id = gauss_identifier(fr, pd, tol)?;
    let (tag, theorem) = theorem_route(pd, tol)?;
    let mut report = GaussReport {
        tag,
        theorem,
        whitney: None,
        direct: None,
        identifier_residual: id.residual,
    };
    if tag == GermTag::Regular {
        return Ok(report);
    }
    let (v1, v2) = &id.null_field;
    report.whitney = Some(plane_map_classify(&id.lambda_tilde, (v1, v2), tol.classify)?);
    let (x1, x2) = &id.direct_null_field;
    // The direct identifier carries the extra factor κ̂; a borderline value
    // test there is recorded as absent rather than failing the point.
    report.direct = match plane_map_classify(&id.lambda, (x1, x2), tol.classify) {
        Ok(c) => Some(c),
        Err(Error::NotSingular(_)) => None,
        Err(e) => return Err(e),
    };
    if tag.is_decided() {
        for other in report.dual_tags() {
            if other.is_decided() && other != tag {
                return Err(Error::ClassifierDisagreement(format!(
                    "ridge route says {}, Whitney criteria say {}",
                    tag.name(),
                    other.name()
                )));
            }
        }
    }
    Ok(report)
}

/// Scale for invariant zero tests; `κ_c ≠ 0` on a front so this is never zero there.
fn axis_scale(e: &EdgeInvariants) -> f64 {
    e.kappa_c
        .value()
        .abs()
        .max(e.kappa_s.value().abs())
        .max(f64::MIN_POSITIVE)
}

/// Tolerance for "vanishes identically along the u-axis".
pub const AXIS_IDENTITY_TOL: f64 = 1e-10;

fn vanishes_on_axis(j: &crate::jet::Jet1, scale: f64) -> bool {
    j.max_abs() <= AXIS_IDENTITY_TOL * scale
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ContactReport {
    pub parabolic_regular: bool,
    /// `k + 1` for (k+1)-point contact.
    pub points: usize,
    pub first_nonzero_derivative_index: usize,
    /// `4κ_t² + κ_sκ_c²` at the point.
    pub precondition_4kt2: f64,
    /// `κ_ν⁽ʲ⁾(p)` for `j = 0..`.
    pub kappa_nu_derivatives: Vec<f64>,
}

impl ContactReport {
    pub fn label(&self) -> String {
        format!("{}-point contact", self.points)
    }
}

/// Contact order of the singular curve with the parabolic curve at a
/// cuspidal edge, read from the jet of `κ_ν`.
pub fn contact_order(invs: &InvariantSet, maxk: usize, tol: &Tolerances) -> Result<ContactReport> {
    let e = invs.edge()?;
    let s = axis_scale(e);
    let kn = &e.kappa_nu;
    let derivs: Vec<f64> = (0..=maxk.min(kn.order()))
        .map(|j| kn.derivative(j))
        .collect::<Result<_>>()?;
    let zero = |x: f64| x.abs() <= tol.classify * s;
    if !zero(derivs[0]) {
        return Err(Error::NotParabolic(derivs[0]));
    }
    let (kt, ks, kc) = (e.kappa_t.value(), e.kappa_s.value(), e.kappa_c.value());
    let pre = 4.0 * kt * kt + ks * kc * kc;
    let parabolic_regular = derivs.get(1).is_some_and(|d| !zero(*d)) || !zero(pre / s);
    if !parabolic_regular {
        return Err(Error::PreconditionNotMet(
            "the parabolic curve is not regular here (κ_ν′ = 0 and 4κ_t² + κ_sκ_c² = 0)".into(),
        ));
    }
    let first = derivs
        .iter()
        .position(|d| !zero(*d))
        .ok_or(Error::Exceeded(maxk))?;
    Ok(ContactReport {
        parabolic_regular,
        points: first,
        first_nonzero_derivative_index: first,
        precondition_4kt2: pre,
        kappa_nu_derivatives: derivs,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RationalK {
    NotRationallyBounded,
    RationallyBounded,
    RationallyContinuous,
    Bounded,
}

impl RationalK {
    pub fn name(self) -> &'static str {
        match self {
            RationalK::NotRationallyBounded => "not-rationally-bounded",
            RationalK::RationallyBounded => "rationally-bounded",
            RationalK::RationallyContinuous => "rationally-continuous",
            RationalK::Bounded => "bounded",
        }
    }
}

pub fn rational_k_status(invs: &InvariantSet, tol: &Tolerances) -> Result<RationalK> {
    let e = invs.edge()?;
    let s = axis_scale(e);
    let kn = &e.kappa_nu;
    let zero = |x: f64| x.abs() <= tol.classify * s;
    Ok(if vanishes_on_axis(kn, s) {
        RationalK::Bounded
    } else if !zero(kn.value()) {
        RationalK::NotRationallyBounded
    } else if zero(kn.derivative(1)?) {
        RationalK::RationallyContinuous
    } else {
        RationalK::RationallyBounded
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecialRule {
    Godron,
    CurvatureLine,
    BoundedK,
}

impl SpecialRule {
    pub fn name(self) -> &'static str {
        match self {
            SpecialRule::Godron => "godron",
            SpecialRule::CurvatureLine => "curvature-line",
            SpecialRule::BoundedK => "bounded-k",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "godron" => Some(SpecialRule::Godron),
            "curvature-line" => Some(SpecialRule::CurvatureLine),
            "bounded-k" | "bounded-K" => Some(SpecialRule::BoundedK),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpecialRuleReport {
    pub rule: SpecialRule,
    pub tag: GermTag,
    /// Tag from [`gauss_classify`] at the same point.
    pub gauss: GermTag,
    /// Invariant values the rule read, by name.
    pub witnesses: Vec<(&'static str, f64)>,
}

/// Gauss-map type from the invariants of a cuspidal edge under one of the
/// special hypotheses. `Degenerate` means the rule does not decide.
pub fn special_rule_classify(
    fr: &FrameData,
    pd: &PrincipalData,
    invs: &InvariantSet,
    rule: SpecialRule,
    tol: &Tolerances,
) -> Result<SpecialRuleReport> {
    let e = invs.edge()?;
    let s = axis_scale(e);
    let nz = |x: f64| x.abs() > tol.classify * s;
    let kn = &e.kappa_nu;
    let ks = e.kappa_s.value();
    let kc = e.kappa_c.value();
    let kt = e.kappa_t.value();
    let pre = 4.0 * kt * kt + ks * kc * kc;
    let mut witnesses = vec![("kappa_s", ks), ("kappa_t", kt), ("kappa_c", kc)];
    let tag = match rule {
        SpecialRule::Godron => {
            if nz(kn.value()) || nz(kn.derivative(1)?) {
                return Err(Error::PreconditionNotMet(
                    "godron rule needs κ_ν = κ_ν′ = 0 (rationally continuous K)".into(),
                ));
            }
            let ki1 = e.kappa_i.derivative(1)?;
            witnesses.push(("kappa_i'", ki1));
            witnesses.push(("4kt2+ks*kc2", pre));
            if !nz(kt) && nz(ks * ki1) {
                GermTag::Cusp
            } else if nz(kt) && nz(pre / s) {
                GermTag::Fold
            } else {
                GermTag::Degenerate
            }
        }
        SpecialRule::CurvatureLine => {
            if !vanishes_on_axis(&e.kappa_t, s) {
                return Err(Error::PreconditionNotMet(format!(
                    "curvature-line rule needs κ_t ≡ 0 on the u-axis (max |κ_t| coefficient {:e})",
                    e.kappa_t.max_abs()
                )));
            }
            if nz(kn.value()) {
                return Err(Error::NotParabolic(kn.value()));
            }
            let d: Vec<f64> = (1..=3).map(|j| kn.derivative(j)).collect::<Result<_>>()?;
            witnesses.extend([("kappa_nu'", d[0]), ("kappa_nu''", d[1]), ("kappa_nu'''", d[2])]);
            if nz(d[0]) {
                GermTag::Fold
            } else if nz(d[1]) && nz(ks) {
                GermTag::Cusp
            } else if !nz(d[1]) && nz(d[2]) && nz(ks) {
                GermTag::SwallowtailPlane
            } else {
                GermTag::Degenerate
            }
        }
        SpecialRule::BoundedK => {
            if !vanishes_on_axis(kn, s) {
                return Err(Error::PreconditionNotMet(format!(
                    "bounded-K rule needs κ_ν ≡ 0 on the u-axis (max |κ_ν| coefficient {:e})",
                    kn.max_abs()
                )));
            }
            let kt1 = e.kappa_t.derivative(1)?;
            witnesses.push(("kappa_t'", kt1));
            witnesses.push(("4kt2+ks*kc2", pre));
            if nz(kt) && nz(pre / s) {
                GermTag::Fold
            } else if !nz(kt) && nz(kt1) && nz(ks) {
                GermTag::Cusp
            } else {
                GermTag::Degenerate
            }
        }
    };
    let gauss = gauss_classify(fr, pd, tol)?.tag;
    if tag.is_decided() && gauss.is_decided() && tag != gauss {
        return Err(Error::ClassifierDisagreement(format!(
            "{} rule says {}, Gauss-map classification says {}",
            rule.name(),
            tag.name(),
            gauss.name()
        )));
    }
    Ok(SpecialRuleReport {
        rule,
        tag,
        gauss,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::{parse_expr, parse_surface};
    use crate::frontal::{edge_invariants, PointGeometry};

    fn model(f2: &str) -> PlaneGermClass {
        let u = parse_expr("u").unwrap().jet([0.0, 0.0], 6).unwrap();
        let g = parse_expr(f2).unwrap().jet([0.0, 0.0], 6).unwrap();
        let (l, (a, b)) = plane_map_jets(&u, &g);
        plane_map_classify(&l, (&a, &b), 1e-8).unwrap()
    }

    #[test]
    fn whitney_models() {
        assert_eq!(model("v^2").tag, GermTag::Fold);
        assert_eq!(model("v^2").witnesses.eta, 2.0);
        assert_eq!(model("v^3 + u*v").tag, GermTag::Cusp);
        assert_eq!(model("v^4 + u*v").tag, GermTag::SwallowtailPlane);
        assert_eq!(model("v^3 + u^2*v").tag, GermTag::Lips);
        assert_eq!(model("v^3 - u^2*v").tag, GermTag::Beaks);
        assert_eq!(model("v^5 + u*v").tag, GermTag::Degenerate);
    }

    #[test]
    fn regular_model_is_not_singular() {
        let u = parse_expr("u").unwrap().jet([0.0, 0.0], 4).unwrap();
        let v = parse_expr("v").unwrap().jet([0.0, 0.0], 4).unwrap();
        let (l, (a, b)) = plane_map_jets(&u, &v);
        assert!(matches!(plane_map_classify(&l, (&a, &b), 1e-8), Err(Error::NotSingular(_))));
    }

    const QUARTIC: &str = "kind = first\nf = (u, u^2/2 + v^2/2, v^3/3 + u^4)";

    #[test]
    fn quartic_edge() {
        let d = parse_surface(QUARTIC).unwrap();
        let tol = Tolerances::default();
        let g = PointGeometry::at(&d, [0.0, 0.0], 6, &tol).unwrap();
        let r = gauss_classify(&g.frame, &g.principal, &tol).unwrap();
        assert_eq!(r.tag, GermTag::Cusp);
        assert_eq!(r.whitney.unwrap().tag, GermTag::Cusp);
        let invs = edge_invariants(&g.frame, &g.fund).unwrap();
        let c = contact_order(&invs, 3, &tol).unwrap();
        assert_eq!(c.label(), "2-point contact");
        assert!((c.kappa_nu_derivatives[2] - 24.0).abs() < 1e-9);
        assert_eq!(rational_k_status(&invs, &tol).unwrap(), RationalK::RationallyContinuous);
        let s = special_rule_classify(&g.frame, &g.principal, &invs, SpecialRule::Godron, &tol).unwrap();
        assert_eq!(s.tag, GermTag::Cusp);

        let g = PointGeometry::at(&d, [0.2, 0.48], 6, &tol).unwrap();
        let r = gauss_classify(&g.frame, &g.principal, &tol).unwrap();
        assert_eq!(r.tag, GermTag::Fold);
    }

    #[test]
    fn flat_cuspidal_edge() {
        let d = parse_surface("kind = first\nf = (u, v^2, v^3)").unwrap();
        let tol = Tolerances::default();
        let g = PointGeometry::at(&d, [0.0, 0.0], 6, &tol).unwrap();
        let invs = edge_invariants(&g.frame, &g.fund).unwrap();
        assert_eq!(rational_k_status(&invs, &tol).unwrap(), RationalK::Bounded);
        let s = special_rule_classify(&g.frame, &g.principal, &invs, SpecialRule::BoundedK, &tol).unwrap();
        assert_eq!(s.tag, GermTag::Degenerate);
        assert!(matches!(contact_order(&invs, 3, &tol), Err(Error::PreconditionNotMet(_))));
    }

    #[test]
    fn plane_gauss_map_is_constant() {
        let d = parse_surface("f = (u, v, 0)").unwrap();
        let fr = crate::frontal::build_frame(&d, [0.1, 0.2], 6, &Tolerances::default()).unwrap();
        assert_eq!(gauss_lambda(&fr).max_abs(), 0.0);
    }
}
