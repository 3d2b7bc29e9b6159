use serde::Serialize;

use super::frame::{FrameData, PointKind};
use crate::config::Tolerances;
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SingularityClass {
    CuspidalEdge,
    Swallowtail,
    NonDegFirstKind,
    NonDegSecondKind,
    DegenerateSingularity,
    Regular,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingularityWitness {
    pub lambda: f64,
    pub d_lambda: [f64; 2],
    pub eta: Option<[f64; 2]>,
    pub eta_lambda: Option<f64>,
    pub eta_eta_lambda: Option<f64>,
    pub is_front: bool,
    pub front_sigma: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingularityReport {
    pub class: SingularityClass,
    pub witness: SingularityWitness,
}

pub fn classify_front_point(fr: &FrameData, tol: &Tolerances) -> Result<SingularityReport> {
    let lam = &fr.lambda;
    let d_lambda = [lam.coeff(1, 0), lam.coeff(0, 1)];
    let mut witness = SingularityWitness {
        lambda: lam.value(),
        d_lambda,
        eta: None,
        eta_lambda: None,
        eta_eta_lambda: None,
        is_front: fr.is_front,
        front_sigma: fr.front_sigma,
    };
    if let Some((a, b)) = fr.eta() {
        let el = lam.directional(&a, &b);
        let eel = el.directional(&a, &b);
        witness.eta = Some([a.value(), b.value()]);
        witness.eta_lambda = Some(el.value());
        witness.eta_eta_lambda = Some(eel.value());
    }
    let scale = fr.lambda_frame.value().abs();
    let zero = |x: f64| x.abs() <= tol.classify * scale;
    let class = match fr.kind {
        PointKind::Regular => SingularityClass::Regular,
        PointKind::Degenerate => SingularityClass::DegenerateSingularity,
        _ if zero(d_lambda[0].hypot(d_lambda[1])) => SingularityClass::DegenerateSingularity,
        PointKind::FirstKind if fr.is_front => SingularityClass::CuspidalEdge,
        PointKind::FirstKind => SingularityClass::NonDegFirstKind,
        PointKind::SecondKind => match witness.eta_eta_lambda {
            Some(x) if fr.is_front && !zero(x) => SingularityClass::Swallowtail,
            _ => SingularityClass::NonDegSecondKind,
        },
    };
    Ok(SingularityReport { class, witness })
}
