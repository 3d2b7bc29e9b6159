//! Predictor–corrector tracing of zero sets of jet-backed fields.

use serde::Serialize;

use crate::config::Tolerances;
use crate::dsl::SurfaceDef;
use crate::error::{Error, Result};
use crate::frontal::{build_frame, PointGeometry};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FieldTag {
    /// Singular set `λ = 0`.
    LambdaZero,
    /// Parabolic set `κ = 0`.
    KappaZero,
}

impl FieldTag {
    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "lambda" | "lambda-zero" => Some(FieldTag::LambdaZero),
            "kappa" | "kappa-zero" => Some(FieldTag::KappaZero),
            _ => None,
        }
    }
}

/// A scalar field with its gradient.
pub trait ZeroField {
    fn tag(&self) -> FieldTag;
    fn eval(&self, p: [f64; 2]) -> Result<(f64, [f64; 2])>;
}

/// `λ` or `κ` of a surface, read from the frame jets at each point.
pub struct SurfaceField<'a> {
    pub def: &'a SurfaceDef,
    pub tag: FieldTag,
    pub order: usize,
    pub tol: Tolerances,
}

impl ZeroField for SurfaceField<'_> {
    fn tag(&self) -> FieldTag {
        self.tag
    }

    fn eval(&self, p: [f64; 2]) -> Result<(f64, [f64; 2])> {
        let j = match self.tag {
            FieldTag::LambdaZero => build_frame(self.def, p, self.order, &self.tol)?.lambda,
            FieldTag::KappaZero => PointGeometry::at(self.def, p, self.order, &self.tol)?.principal.kappa,
        };
        Ok((j.value(), [j.coeff(1, 0), j.coeff(0, 1)]))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Polyline {
    pub field: FieldTag,
    pub points: Vec<[f64; 2]>,
    pub residuals: Vec<f64>,
    /// Index of the seed in `points`.
    pub seed_index: usize,
}

impl Polyline {
    /// CSV with header `u,v,residual`.
    pub fn rows(&self) -> impl Iterator<Item = [f64; 3]> + '_ {
        self.points
            .iter()
            .zip(&self.residuals)
            .map(|(p, r)| [p[0], p[1], *r])
    }
}

const MAX_NEWTON: usize = 30;
const MAX_HALVINGS: usize = 6;

fn gradient_norm(g: [f64; 2]) -> f64 {
    g[0].hypot(g[1])
}

/// Minimum-norm Newton iteration onto the zero set.
fn correct(field: &dyn ZeroField, mut p: [f64; 2], bound: f64) -> Result<([f64; 2], f64)> {
    for _ in 0..MAX_NEWTON {
        let (f, g) = field.eval(p)?;
        if f.abs() <= bound {
            return Ok((p, f.abs()));
        }
        let n2 = g[0] * g[0] + g[1] * g[1];
        if n2 == 0.0 {
            return Err(Error::SingularGradient { u: p[0], v: p[1] });
        }
        p = [p[0] - f * g[0] / n2, p[1] - f * g[1] / n2];
    }
    let (f, _) = field.eval(p)?;
    Err(Error::SeedNotOnCurve(format!(
        "Newton did not converge near ({}, {}), residual {f:e}",
        p[0], p[1]
    )))
}

fn march(
    field: &dyn ZeroField,
    start: [f64; 2],
    mut dir: [f64; 2],
    step: f64,
    count: usize,
    bound: f64,
    grad_floor: f64,
) -> Result<Vec<([f64; 2], f64)>> {
    let mut out = Vec::new();
    let mut p = start;
    'steps: for _ in 0..count {
        let (_, g) = field.eval(p)?;
        let gn = gradient_norm(g);
        if gn <= grad_floor {
            return Err(Error::SingularGradient { u: p[0], v: p[1] });
        }
        let mut t = [-g[1] / gn, g[0] / gn];
        if t[0] * dir[0] + t[1] * dir[1] < 0.0 {
            t = [-t[0], -t[1]];
        }
        let mut h = step;
        for _ in 0..MAX_HALVINGS {
            let q = [p[0] + h * t[0], p[1] + h * t[1]];
            match correct(field, q, bound) {
                Ok((q, r)) if (q[0] - p[0]).hypot(q[1] - p[1]) <= 2.0 * h => {
                    out.push((q, r));
                    dir = t;
                    p = q;
                    continue 'steps;
                }
                Ok(_) | Err(Error::SeedNotOnCurve(_)) => h *= 0.5,
                // Leaving the domain ends this branch of the curve.
                Err(Error::DomainError(_)) => break 'steps,
                Err(e) => return Err(e),
            }
        }
        break;
    }
    Ok(out)
}

/// Traces the zero set through `seed`, taking up to `count` steps of length
/// `step` in each direction. Residuals are bounded by `tol · |∇F(seed)|`.
pub fn trace_zero_curve(field: &dyn ZeroField, seed: [f64; 2], step: f64, count: usize, tol: f64) -> Result<Polyline> {
    let (f0, g0) = field
        .eval(seed)
        .map_err(|e| Error::SeedNotOnCurve(format!("field undefined at the seed: {e}")))?;
    let scale = gradient_norm(g0).max(f0.abs());
    if scale == 0.0 {
        return Err(Error::SeedNotOnCurve("field and gradient vanish at the seed".into()));
    }
    let bound = tol * scale;
    let grad_floor = 1e-14 * scale;
    if gradient_norm(g0) <= grad_floor {
        return Err(Error::SingularGradient { u: seed[0], v: seed[1] });
    }
    // One Newton step, then the seed must already be close.
    let n2 = g0[0] * g0[0] + g0[1] * g0[1];
    let p1 = [seed[0] - f0 * g0[0] / n2, seed[1] - f0 * g0[1] / n2];
    let (f1, _) = field.eval(p1).map_err(|e| Error::SeedNotOnCurve(e.to_string()))?;
    if f1.abs() > 10.0 * bound {
        return Err(Error::SeedNotOnCurve(format!(
            "|field| = {:e} after one correction step at ({}, {})",
            f1.abs(),
            seed[0],
            seed[1]
        )));
    }
    let (p, r) = correct(field, p1, bound)?;
    let (_, g) = field.eval(p)?;
    let gn = gradient_norm(g);
    let t = [-g[1] / gn, g[0] / gn];
    let fwd = march(field, p, t, step, count, bound, grad_floor)?;
    let back = march(field, p, [-t[0], -t[1]], step, count, bound, grad_floor)?;
    let seed_index = back.len();
    let all: Vec<([f64; 2], f64)> = back
        .into_iter()
        .rev()
        .chain(std::iter::once((p, r)))
        .chain(fwd)
        .collect();
    Ok(Polyline {
        field: field.tag(),
        points: all.iter().map(|x| x.0).collect(),
        residuals: all.iter().map(|x| x.1).collect(),
        seed_index,
    })
}

/// Least-squares slope of `ln|v|` against `ln|u − u₀|` over polyline points
/// with `r_min ≤ |u − u₀| ≤ r_max`: the tangency order of the curve with the
/// u-axis at `(u₀, 0)`.
pub fn growth_exponent(poly: &Polyline, u0: f64, r_min: f64, r_max: f64) -> Option<f64> {
    let pts: Vec<(f64, f64)> = poly
        .points
        .iter()
        .filter_map(|p| {
            let du = (p[0] - u0).abs();
            (du >= r_min && du <= r_max && p[1] != 0.0).then(|| (du.ln(), p[1].abs().ln()))
        })
        .collect();
    if pts.len() < 3 {
        return None;
    }
    let n = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |a, p| (a.0 + p.0, a.1 + p.1));
    let (mx, my) = (sx / n, sy / n);
    let (num, den) = pts.iter().fold((0.0, 0.0), |a, p| {
        (a.0 + (p.0 - mx) * (p.1 - my), a.1 + (p.0 - mx) * (p.0 - mx))
    });
    (den > 0.0).then(|| num / den)
}
