//! Bounded and unbounded principal curvatures as jets.
//!
//! In every chart the principal equation reduces to `a k² − A k + C = 0`:
//!
//! | chart  | a    | A                                   | C              |
//! |--------|------|-------------------------------------|----------------|
//! | first  | v D  | ẼÑ + v(G̃L̃ − 2F̃M̃)                  | L̃Ñ − vM̃²       |
//! | second | v D  | Ĝ(L̂+εM̂) − 2vF̂M̂ + vÊN̂             | (L̂+εM̂)N̂ − vM̂² |
//! | plain  | D    | EN − 2FM + GL                       | LN − M²        |
//!
//! with `D` the frame Gram determinant. The bounded root is
//! `κ = 2C / (A + sB)`, `B = √(A² − 4aC)`, `s = sign A` on the u-axis.

use super::frame::{Chart, FrameData};
use super::fundamentals::{fundamentals, FundVariant, Fundamentals};
use crate::error::{Error, Result};
use crate::jet::Jet2;

#[derive(Clone, Debug)]
pub struct PrincipalData {
    /// Bounded principal curvature κ.
    pub kappa: Jet2,
    /// `κ̂ = λ κ̃`.
    pub kappa_hat: Jet2,
    /// `K λ = κ κ̂`.
    pub k_lambda: Jet2,
    /// `Ĥ = v H` in adapted charts, `H` in the plain chart.
    pub h_hat: Jet2,
    pub a_hat: Jet2,
    pub b_hat: Jet2,
    pub c_hat: Jet2,
    /// Leading coefficient `a` of the reduced quadratic.
    pub lead: Jet2,
    pub v1: Jet2,
    pub v2: Jet2,
    pub branch_sign: f64,
    /// True when the branch sign was read on the u-axis rather than locally.
    pub branch_from_axis: bool,
}

impl PrincipalData {
    /// Unbounded principal curvature at the base point, when finite.
    pub fn kappa_unbounded(&self) -> Option<f64> {
        let a = self.lead.value();
        if a == 0.0 {
            None
        } else {
            Some((self.a_hat.value() + self.branch_sign * self.b_hat.value()) / (2.0 * a))
        }
    }

    pub fn v_at(&self) -> [f64; 2] {
        [self.v1.value(), self.v2.value()]
    }

    /// Derivative of a jet along the principal vector field.
    pub fn along_v(&self, g: &Jet2) -> Jet2 {
        g.directional(&self.v1, &self.v2)
    }

    /// Magnitude used to judge whether κ-derived quantities vanish.
    pub fn curvature_scale(&self) -> f64 {
        let k = &self.kappa;
        let grad = if k.order() >= 1 {
            k.coeff(1, 0).hypot(k.coeff(0, 1))
        } else {
            0.0
        };
        [self.h_hat.value().abs(), k.value().abs(), grad]
            .into_iter()
            .fold(f64::MIN_POSITIVE, f64::max)
    }
}

struct Quadratic {
    lead: Jet2,
    a: Jet2,
    c: Jet2,
}

fn quadratic(fr: &FrameData, fd: &Fundamentals) -> Quadratic {
    let d = fd.det();
    let v = fr.v_jet();
    let (e, f, g, l, m, n) = (&fd.e, &fd.f, &fd.g, &fd.l, &fd.m, &fd.n);
    match fd.variant {
        FundVariant::FirstKind => Quadratic {
            lead: &v * &d,
            a: &(e * n) + &(&v * &(&(g * l) - &(f * m).scale(2.0))),
            c: &(l * n) - &(&v * &(m * m)),
        },
        FundVariant::SecondKind => {
            let le = l + &(&fr.eps_jet() * m);
            Quadratic {
                lead: &v * &d,
                a: &(&(g * &le) - &(&v * &(f * m)).scale(2.0)) + &(&v * &(e * n)),
                c: &(&le * n) - &(&v * &(m * m)),
            }
        }
        FundVariant::Regular => Quadratic {
            lead: d,
            a: &(&(e * n) - &(f * m).scale(2.0)) + &(g * l),
            c: &(l * n) - &(m * m),
        },
    }
}

fn sign_of(a: f64, fd: &Fundamentals) -> Result<f64> {
    let [e, f, g, l, m, n] = fd.values().map(f64::abs);
    let scale = e * n + g * l + 2.0 * f * m;
    if !(a.abs() > 1e-12 * scale) || scale == 0.0 {
        return Err(Error::BranchAmbiguity(format!(
            "A = {a:e} does not separate the two principal curvatures"
        )));
    }
    Ok(a.signum())
}

/// Sign of `A` at the frame's own base point.
pub(crate) fn local_branch_sign(fr: &FrameData) -> Result<f64> {
    let fd = fundamentals(fr)?;
    let q = quadratic(fr, &fd);
    sign_of(q.a.value(), &fd)
}

pub fn principal_data(fr: &FrameData, fd: &Fundamentals) -> Result<PrincipalData> {
    if fr.chart != Chart::Plain && !fr.is_front {
        return Err(Error::PreconditionNotMet(
            "principal curvatures need a front (d(f, ν) has rank 2)".into(),
        ));
    }
    let q = quadratic(fr, fd);
    let (s, from_axis) = match (fr.chart, fr.axis_branch_sign) {
        (Chart::Plain, _) => (sign_of(q.a.value(), fd)?, false),
        (_, Some(s)) => (s, fr.point[1] != 0.0),
        (_, None) => (sign_of(q.a.value(), fd)?, false),
    };
    let disc = &(&q.a * &q.a) - &(&q.lead * &q.c).scale(4.0);
    let b = disc.sqrt().map_err(|_| {
        Error::BranchAmbiguity(format!(
            "principal curvatures coincide (discriminant {:e})",
            disc.value()
        ))
    })?;
    let denom = &q.a + &b.scale(s);
    let kappa = q.c.scale(2.0).div(&denom).map_err(|_| {
        Error::BranchAmbiguity("A + sB vanishes; the bounded branch is undefined".into())
    })?;
    let dinv = fd.det().recip()?;
    let kappa_hat = &(&fr.lambda_frame * &denom) * &dinv.scale(0.5);
    let k_lambda = &(&q.c * &fr.lambda_frame) * &dinv;
    let h_hat = &q.a * &dinv.scale(0.5);

    let (e, f, g, l, m, n) = (&fd.e, &fd.f, &fd.g, &fd.l, &fd.m, &fd.n);
    let v = fr.v_jet();
    let (v1, v2) = match fd.variant {
        FundVariant::FirstKind => (n - &(&(&v * &kappa) * g), &(&kappa * f) - m),
        FundVariant::SecondKind => {
            let eps = fr.eps_jet();
            (
                &(&kappa * f) - m,
                l - &(&kappa * &(&(&v * e) - &(&eps * f))),
            )
        }
        FundVariant::Regular => {
            let a = (&(&kappa * f) - m, l - &(&kappa * e));
            let b = (n - &(&kappa * g), &(&kappa * f) - m);
            let na = a.0.value().hypot(a.1.value());
            let nb = b.0.value().hypot(b.1.value());
            if na >= nb {
                a
            } else {
                b
            }
        }
    };
    Ok(PrincipalData {
        kappa,
        kappa_hat,
        k_lambda,
        h_hat,
        a_hat: q.a,
        b_hat: b,
        c_hat: q.c,
        lead: q.lead,
        v1,
        v2,
        branch_sign: s,
        branch_from_axis: from_axis,
    })
}

/// Principal curvatures from the classical forms of `f` at a regular point,
/// returned as `(H, K, H + √(H²−K), H − √(H²−K))`.
pub fn classical_curvatures(fr: &FrameData) -> Result<(f64, f64, f64, f64)> {
    let fu = fr.f_u.value();
    let fv = fr.f_v.value();
    let fuu = fr.f_u.d_u().value();
    let fuv = fr.f_u.d_v().value();
    let fvv = fr.f_v.d_v().value();
    let dot = |a: [f64; 3], b: [f64; 3]| a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    let n = [
        fu[1] * fv[2] - fu[2] * fv[1],
        fu[2] * fv[0] - fu[0] * fv[2],
        fu[0] * fv[1] - fu[1] * fv[0],
    ];
    let nn = dot(n, n).sqrt();
    if nn == 0.0 {
        return Err(Error::NotSingular(0.0));
    }
    let nu = fr.nu.value();
    let sgn = dot(n, nu).signum();
    let n = n.map(|x| sgn * x / nn);
    let (e, f, g) = (dot(fu, fu), dot(fu, fv), dot(fv, fv));
    let (l, m, nn2) = (dot(fuu, n), dot(fuv, n), dot(fvv, n));
    let d = e * g - f * f;
    let k = (l * nn2 - m * m) / d;
    let h = (e * nn2 - 2.0 * f * m + g * l) / (2.0 * d);
    let r = (h * h - k).max(0.0).sqrt();
    Ok((h, k, h + r, h - r))
}
