//! End-to-end report at one point of one surface.

use serde::Serialize;

use crate::config::{Config, Tolerances};
use crate::dsl::SurfaceDef;
use crate::error::{Error, Result};
use crate::frontal::{
    build_frame, classify_front_point, edge_invariants, fundamentals, principal_data, ridge_order,
    verify_branch, BranchCheck, Chart, FrameData, InvariantSet, InvariantValues, PointKind,
    PrincipalData, RidgeReport, SingularityReport,
};
use crate::gauss::{
    contact_order, gauss_classify, gauss_lambda, rational_k_status, special_rule_classify, ContactReport,
    GaussReport, RationalK, SpecialRule, SpecialRuleReport,
};
use crate::height::{d4_classify, extended_height, HeightReport};

pub const SCHEMA: u32 = 1;

/// Outcome of one pipeline stage.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Stage<T> {
    Ok { value: T },
    NotApplicable { reason: String },
    Failed { kind: &'static str, message: String },
}

impl<T> Stage<T> {
    pub fn ok(&self) -> Option<&T> {
        match self {
            Stage::Ok { value } => Some(value),
            _ => None,
        }
    }

    fn na(reason: impl Into<String>) -> Self {
        Stage::NotApplicable { reason: reason.into() }
    }

    fn from_result(r: Result<T>) -> Self {
        match r {
            Ok(value) => Stage::Ok { value },
            Err(e) => Stage::Failed {
                kind: e.kind_name(),
                message: e.to_string(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FrameSummary {
    pub chart: Chart,
    pub kind: PointKind,
    pub is_front: bool,
    pub front_sigma: f64,
    pub lambda: f64,
    pub nu: [f64; 3],
    pub eps: Option<Vec<f64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PrincipalSummary {
    pub kappa: f64,
    pub kappa_unbounded: Option<f64>,
    pub kappa_hat: f64,
    pub h_hat: f64,
    pub principal_vector: [f64; 2],
    pub branch_sign: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub version: &'static str,
    pub surface: String,
    pub point: [f64; 2],
    pub order: usize,
    pub tolerances: Tolerances,
    pub frame: FrameSummary,
    pub singularity: Stage<SingularityReport>,
    pub invariants: Stage<InvariantValues>,
    pub principal: Stage<PrincipalSummary>,
    pub branch_check: Stage<BranchCheck>,
    pub ridge: Stage<RidgeReport>,
    pub gauss: Stage<GaussReport>,
    pub contact: Stage<ContactReport>,
    pub rational_k: Stage<RationalK>,
    pub special_rules: Vec<(SpecialRule, Stage<SpecialRuleReport>)>,
    pub height: Stage<HeightReport>,
}

fn frame_summary(fr: &FrameData) -> FrameSummary {
    FrameSummary {
        chart: fr.chart,
        kind: fr.kind,
        is_front: fr.is_front,
        front_sigma: fr.front_sigma,
        lambda: fr.lambda.value(),
        nu: fr.nu.value(),
        eps: (fr.chart == Chart::SecondKind).then(|| fr.eps.coeffs().to_vec()),
    }
}

fn principal_summary(pd: &PrincipalData) -> PrincipalSummary {
    PrincipalSummary {
        kappa: pd.kappa.value(),
        kappa_unbounded: pd.kappa_unbounded(),
        kappa_hat: pd.kappa_hat.value(),
        h_hat: pd.h_hat.value(),
        principal_vector: pd.v_at(),
        branch_sign: pd.branch_sign,
    }
}

/// Runs every stage that applies at `p`. Only a failure to build the frame is
/// fatal; later stages record their own errors.
pub fn run_report(def: &SurfaceDef, p: [f64; 2], cfg: &Config) -> Result<Report> {
    let tol = &cfg.tol;
    let fr = build_frame(def, p, cfg.order, tol)?;
    let singularity = Stage::from_result(classify_front_point(&fr, tol));
    let fund = fundamentals(&fr);
    let on_axis_singular = fr.is_singular() && p[1] == 0.0;

    let invs: Option<Result<InvariantSet>> = match (&fund, on_axis_singular) {
        (Ok(fd), true) => Some(edge_invariants(&fr, fd)),
        (Err(e), true) => Some(Err(e.clone())),
        _ => None,
    };
    let invariants = match &invs {
        None => Stage::na("invariants are defined at singular points on the u-axis"),
        Some(r) => Stage::from_result(r.as_ref().map(|i| i.values()).map_err(Clone::clone)),
    };

    let pd = fund.clone().and_then(|fd| principal_data(&fr, &fd));
    let principal = Stage::from_result(pd.as_ref().map(principal_summary).map_err(Clone::clone));

    let branch_check = if fr.kind == PointKind::FirstKind && p[1] == 0.0 {
        Stage::from_result(verify_branch(def, p[0], cfg.order, tol))
    } else {
        Stage::na("branch check runs at first-kind points on the u-axis")
    };

    let (ridge, gauss) = match &pd {
        Ok(pd) => {
            let ridge = match ridge_order(pd, cfg.max_ridge, tol) {
                Err(Error::NotParabolic(k)) => Stage::na(format!("not parabolic (κ = {k:e})")),
                r => Stage::from_result(r),
            };
            (ridge, Stage::from_result(gauss_classify(&fr, pd, tol)))
        }
        Err(e) => {
            let reason = if gauss_lambda(&fr).max_abs() == 0.0 {
                "Λ ≡ 0: the Gauss map is constant".to_string()
            } else {
                format!("no principal data: {e}")
            };
            (Stage::na(reason.clone()), Stage::na(reason))
        }
    };

    let edge = matches!(&invs, Some(Ok(InvariantSet::Edge(_))));
    let (contact, rational_k, special_rules) = match (&invs, edge) {
        (Some(Ok(i)), true) => {
            let contact = match contact_order(i, cfg.max_contact, tol) {
                Err(Error::NotParabolic(k)) => Stage::na(format!("κ_ν(p) = {k:e} ≠ 0")),
                r => Stage::from_result(r),
            };
            let rk = Stage::from_result(rational_k_status(i, tol));
            let rules = match &pd {
                Ok(pd) => [SpecialRule::Godron, SpecialRule::CurvatureLine, SpecialRule::BoundedK]
                    .into_iter()
                    .map(|r| {
                        let s = match special_rule_classify(&fr, pd, i, r, tol) {
                            Err(Error::PreconditionNotMet(m)) => Stage::na(m),
                            Err(Error::NotParabolic(k)) => Stage::na(format!("κ_ν(p) = {k:e} ≠ 0")),
                            x => Stage::from_result(x),
                        };
                        (r, s)
                    })
                    .collect(),
                Err(_) => Vec::new(),
            };
            (contact, rk, rules)
        }
        _ => (
            Stage::na("contact order is defined at cuspidal edges"),
            Stage::na("rational boundedness is defined at cuspidal edges"),
            Vec::new(),
        ),
    };

    let height = if fr.kind == PointKind::SecondKind && p[1] == 0.0 {
        match (&fund, &pd) {
            (Ok(fd), Ok(pd)) => Stage::from_result(
                extended_height(&fr).and_then(|hc| d4_classify(&hc, &fr, fd, pd, tol)),
            ),
            (Err(e), _) | (_, Err(e)) => Stage::from_result(Err(e.clone())),
        }
    } else {
        Stage::na("height functions are analysed at second-kind points")
    };

    Ok(Report {
        schema: SCHEMA,
        version: env!("CARGO_PKG_VERSION"),
        surface: def.name.clone(),
        point: p,
        order: cfg.order,
        tolerances: *tol,
        frame: frame_summary(&fr),
        singularity,
        invariants,
        principal,
        branch_check,
        ridge,
        gauss,
        contact,
        rational_k,
        special_rules,
        height,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_surface;
    use crate::frontal::SingularityClass;
    use crate::gauss::GermTag;
    use crate::height::D4Tag;

    #[test]
    fn quartic_edge_report() {
        let d = parse_surface("kind = first\nf = (u, u^2/2 + v^2/2, v^3/3 + u^4)").unwrap();
        let r = run_report(&d, [0.0, 0.0], &Config::default()).unwrap();
        assert_eq!(r.singularity.ok().unwrap().class, SingularityClass::CuspidalEdge);
        assert_eq!(r.gauss.ok().unwrap().tag, GermTag::Cusp);
        assert_eq!(r.contact.ok().unwrap().points, 2);
        assert_eq!(*r.rational_k.ok().unwrap(), RationalK::RationallyContinuous);
        assert!(r.branch_check.ok().unwrap().agrees);
    }

    #[test]
    fn d4_plus_report() {
        let d = parse_surface("kind = second\nf = (v - 6*u^2, u^2*v - 3*u^4 + v^3, 2*u*v - 8*u^3)").unwrap();
        let r = run_report(&d, [0.0, 0.0], &Config::default()).unwrap();
        assert_eq!(r.singularity.ok().unwrap().class, SingularityClass::Swallowtail);
        assert_eq!(r.height.ok().unwrap().d4_tag, D4Tag::D4Plus);
        assert_eq!(r.gauss.ok().unwrap().tag, GermTag::Fold);
    }

    #[test]
    fn plane_report() {
        let d = parse_surface("f = (u, v, 0)").unwrap();
        let r = run_report(&d, [0.0, 0.0], &Config::default()).unwrap();
        assert_eq!(r.singularity.ok().unwrap().class, SingularityClass::Regular);
        assert!(matches!(r.gauss, Stage::NotApplicable { .. }));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["schema"], 1);
    }
}
