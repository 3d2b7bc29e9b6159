use serde::Serialize;

use super::frame::{FrameData, PointKind};
use super::fundamentals::{FundVariant, Fundamentals};
use crate::error::{Error, Result};
use crate::jet::Jet1;

/// Invariants of a cuspidal edge along the u-axis.
#[derive(Clone, Debug)]
pub struct EdgeInvariants {
    pub kappa_s: Jet1,
    pub kappa_nu: Jet1,
    pub kappa_c: Jet1,
    pub kappa_t: Jet1,
    pub kappa_i: Jet1,
    /// `√Ẽ(u, 0)`.
    pub sqrt_e: Jet1,
}

#[derive(Clone, Debug)]
pub enum InvariantSet {
    Edge(EdgeInvariants),
    SecondKind {
        mu_c: f64,
        /// `N̂/Ĝ` at the point, recorded next to `κ(p)`.
        n_over_g: f64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct InvariantValues {
    pub kappa_s: Option<f64>,
    pub kappa_nu: Option<f64>,
    pub kappa_c: Option<f64>,
    pub kappa_c_abs: Option<f64>,
    pub kappa_t: Option<f64>,
    pub kappa_i: Option<f64>,
    pub mu_c: Option<f64>,
    pub n_over_g: Option<f64>,
}

impl InvariantSet {
    pub fn edge(&self) -> Result<&EdgeInvariants> {
        match self {
            InvariantSet::Edge(e) => Ok(e),
            _ => Err(Error::KindMismatch("cuspidal-edge invariants need a first-kind point".into())),
        }
    }

    pub fn mu_c(&self) -> Option<f64> {
        match self {
            InvariantSet::SecondKind { mu_c, .. } => Some(*mu_c),
            _ => None,
        }
    }

    pub fn values(&self) -> InvariantValues {
        match self {
            InvariantSet::Edge(e) => InvariantValues {
                kappa_s: Some(e.kappa_s.value()),
                kappa_nu: Some(e.kappa_nu.value()),
                kappa_c: Some(e.kappa_c.value()),
                kappa_c_abs: Some(e.kappa_c.value().abs()),
                kappa_t: Some(e.kappa_t.value()),
                kappa_i: Some(e.kappa_i.value()),
                mu_c: None,
                n_over_g: None,
            },
            InvariantSet::SecondKind { mu_c, n_over_g } => InvariantValues {
                kappa_s: None,
                kappa_nu: None,
                kappa_c: None,
                kappa_c_abs: None,
                kappa_t: None,
                kappa_i: None,
                mu_c: Some(*mu_c),
                n_over_g: Some(*n_over_g),
            },
        }
    }
}

pub fn edge_invariants(fr: &FrameData, fd: &Fundamentals) -> Result<InvariantSet> {
    if fr.point[1] != 0.0 {
        return Err(Error::NotSingular(fr.lambda.value()));
    }
    match (fr.kind, fd.variant) {
        (PointKind::FirstKind, FundVariant::FirstKind) => first_kind(fd).map(InvariantSet::Edge),
        (PointKind::SecondKind, FundVariant::SecondKind) => {
            let d = fd.det().value();
            let a = fd.g.value() * (fd.l.value() + fr.eps.value() * fd.m.value());
            Ok(InvariantSet::SecondKind {
                mu_c: a / d,
                n_over_g: fd.n.value() / fd.g.value(),
            })
        }
        (k, v) => Err(Error::KindMismatch(format!(
            "point kind {k:?} with {v:?} fundamentals has no edge invariants"
        ))),
    }
}

fn first_kind(fd: &Fundamentals) -> Result<EdgeInvariants> {
    let (e, f, l, m, n) = (&fd.e, &fd.f, &fd.l, &fd.m, &fd.n);
    let d = fd.det();
    let sqrt_d = d.sqrt()?;
    let e_u = e.d_u();
    let e_vv = e.d_v().d_v();
    let f_u = f.d_u();

    // 2F̃_uẼ − ẼẼ_vv − Ẽ_uF̃
    let geo = &(&(&f_u * e).scale(2.0) - &(e * &e_vv)) - &(&e_u * f);
    let e32 = e.pow_dyadic(3, 1)?;
    let e52 = e.pow_dyadic(5, 1)?;
    let kappa_s = geo.div(&(&e32 * &sqrt_d).scale(2.0))?;
    let kappa_nu = l.div(e)?;
    let kappa_c = &n.scale(2.0) * &e.div(&d)?.pow_dyadic(3, 2)?;
    let tors = &(e * m) - &(f * l);
    let kappa_t = tors.div(&(e * &sqrt_d))?;
    let kappa_i = &(&tors * &geo).div(&(&e52 * &d).scale(2.0))?
        + &(&(e * &l.d_u()) - &(&e_u * l)).div(&e52)?;

    Ok(EdgeInvariants {
        kappa_s: kappa_s.restrict_to_axis(),
        kappa_nu: kappa_nu.restrict_to_axis(),
        kappa_c: kappa_c.restrict_to_axis(),
        kappa_t: kappa_t.restrict_to_axis(),
        kappa_i: kappa_i.restrict_to_axis(),
        sqrt_e: e.sqrt()?.restrict_to_axis(),
    })
}
