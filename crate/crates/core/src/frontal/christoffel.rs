use super::frame::{Chart, FrameData};
use super::fundamentals::Fundamentals;
use crate::error::{Error, Result};
use crate::jet::{Jet2, JetVec3};

/// Modified Christoffel symbols of a first-kind frame and the residuals of
/// the decomposition of `f_uu`, `f_uv`, `f_vv` in `{f_u, h, ν}`.
#[derive(Clone, Debug)]
pub struct ModifiedChristoffel {
    pub g111: Jet2,
    pub g211: Jet2,
    pub g112: Jet2,
    pub g212: Jet2,
    pub g122: Jet2,
    pub g222: Jet2,
    pub r1: JetVec3,
    pub r2: JetVec3,
    pub r3: JetVec3,
    /// `Ẽ_v − 2v⟨f_u, h_u⟩`.
    pub e_v_residual: Jet2,
}

impl ModifiedChristoffel {
    /// Largest residual magnitude at the base point.
    pub fn residual_at_base(&self) -> f64 {
        [&self.r1, &self.r2, &self.r3]
            .iter()
            .flat_map(|r| r.value())
            .fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Largest residual coefficient up to total degree `d`.
    pub fn residual_up_to(&self, d: usize) -> f64 {
        let mut m: f64 = 0.0;
        for r in [&self.r1, &self.r2, &self.r3] {
            for c in &r.0 {
                let t = c.truncate(d);
                m = m.max(t.max_abs());
            }
        }
        m
    }
}

pub fn christoffel_decompose(fr: &FrameData, fd: &Fundamentals) -> Result<ModifiedChristoffel> {
    if fr.chart != Chart::FirstKind {
        return Err(Error::KindMismatch("modified Christoffel symbols need a first-kind chart".into()));
    }
    let (e, f, g) = (&fd.e, &fd.f, &fd.g);
    let (fu, h, nu) = (&fr.f_u, &fr.h, &fr.nu);
    let v = fr.v_jet();
    let q = fu.dot(&h.d_u());
    let (e_u, f_u, g_u) = (e.d_u(), f.d_u(), g.d_u());
    let (f_v, g_v) = (f.d_v(), g.d_v());
    let inv2d = fd.det().recip()?.scale(0.5);

    let g111 = &(&(&(g * &e_u) - &(f * &f_u).scale(2.0)) + &(f * &q).scale(2.0)) * &inv2d;
    let g211 = &(&(&(e * &f_u).scale(2.0) - &(e * &q).scale(2.0)) - &(f * &e_u)) * &inv2d;
    let g112 = &(&(g * &q).scale(2.0) - &(f * &g_u)) * &inv2d;
    let g212 = &(&(e * &g_u) - &(f * &q).scale(2.0)) * &inv2d;
    let g122 = &(&(&(g * &f_v).scale(2.0) - &(&v * &(g * &g_u))) - &(f * &g_v)) * &inv2d;
    let g222 = &(&(&(e * &g_v) - &(f * &f_v).scale(2.0)) + &(&v * &(f * &g_u))) * &inv2d;

    let comb = |a: &Jet2, b: &Jet2, c: &Jet2| fu.scale(a).add(&h.scale(b)).add(&nu.scale(c));
    let f_uu = fu.d_u();
    let f_uv = fu.d_v();
    let f_vv = fr.f_v.d_v();
    let r1 = f_uu.sub(&comb(&g111, &g211, &fd.l));
    let r2 = f_uv.sub(&comb(&(&v * &g112), &(&v * &g212), &(&v * &fd.m)));
    let r3 = f_vv.sub(&comb(
        &(&v * &g122),
        &(&v * &g222).add_scalar(1.0),
        &(&v * &fd.n),
    ));
    let e_v_residual = &e.d_v() - &(&v * &q).scale(2.0);
    Ok(ModifiedChristoffel {
        g111,
        g211,
        g112,
        g212,
        g122,
        g222,
        r1,
        r2,
        r3,
        e_v_residual,
    })
}
