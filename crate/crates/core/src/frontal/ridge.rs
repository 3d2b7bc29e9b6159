use serde::Serialize;

use super::principal::PrincipalData;
use crate::config::Tolerances;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "status", content = "order")]
pub enum RidgeOrder {
    NotRidge,
    Order(usize),
    Exceeded,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RidgeReport {
    pub order: RidgeOrder,
    /// `Vκ(p), V²κ(p), …` as far as they were evaluated.
    pub witnesses: Vec<f64>,
    /// Zero thresholds used for each witness.
    pub thresholds: Vec<f64>,
}

/// Iterated derivatives `Vᵐκ(p)` for `m = 1..=count`, limited by the jet order.
pub fn v_derivatives(pd: &PrincipalData, count: usize) -> Vec<f64> {
    let mut out = Vec::new();
    let mut g = pd.kappa.clone();
    for _ in 0..count {
        if g.order() == 0 {
            break;
        }
        g = pd.along_v(&g);
        out.push(g.value());
    }
    out
}

/// Zero threshold for `Vᵐκ(p)`.
pub fn ridge_threshold(pd: &PrincipalData, m: usize, tol: &Tolerances) -> f64 {
    let vn = pd.v1.value().hypot(pd.v2.value());
    tol.ridge * pd.curvature_scale() * vn.powi(m as i32)
}

pub fn ridge_order(pd: &PrincipalData, maxk: usize, tol: &Tolerances) -> Result<RidgeReport> {
    let k0 = pd.kappa.value();
    if k0.abs() > tol.classify * pd.curvature_scale() {
        return Err(Error::NotParabolic(k0));
    }
    let witnesses = v_derivatives(pd, maxk + 1);
    let thresholds: Vec<f64> = (1..=witnesses.len())
        .map(|m| ridge_threshold(pd, m, tol))
        .collect();
    let first = witnesses
        .iter()
        .zip(&thresholds)
        .position(|(w, t)| w.abs() > *t);
    let order = match first {
        Some(0) => RidgeOrder::NotRidge,
        Some(i) => RidgeOrder::Order(i),
        // The jet ran out before every witness up to maxk + 1 was evaluated.
        None if witnesses.len() <= maxk => {
            return Err(Error::OrderExceeded {
                requested: maxk + 1,
                order: witnesses.len(),
            })
        }
        None => RidgeOrder::Exceeded,
    };
    Ok(RidgeReport {
        order,
        witnesses,
        thresholds,
    })
}
