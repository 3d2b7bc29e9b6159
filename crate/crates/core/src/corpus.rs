//! Deterministic random families of fronts with known singular structure.
//!
//! First kind: `f = α(u) + (v²/2)β(u) + (v³/3)γ(u) + v⁴δ(u)`, so `f_v` is
//! divisible by `v` and the u-axis is the singular curve.
//!
//! Second kind: `(v − 6u² + v²x(u), u²v − 3u⁴ + a v³ + b v⁴ + c u v², 2uv − 8u³ + v²z(u))`
//! with `x, z` linear. The v² terms leave `ε = 12u`, `ν(p)` and the strong
//! adaptedness at the origin unchanged.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::Tolerances;
use crate::dsl::{DeclaredKind, Domain, Expr, SurfaceDef};
use crate::error::{Error, Result};
use crate::frontal::{build_frame, classify_front_point, PointKind, SingularityClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorpusKind {
    First,
    Second,
}

impl CorpusKind {
    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "first" => Some(CorpusKind::First),
            "second" => Some(CorpusKind::Second),
            _ => None,
        }
    }
}

/// Rejected candidates allowed per accepted surface.
const ATTEMPTS_PER_SURFACE: usize = 200;
/// Lower bound for `|α′×β|` and `|det(α′, β, γ)|` on the probe grid.
const PROBE_FLOOR: f64 = 0.1;
const PROBES: [f64; 5] = [-0.5, -0.25, 0.0, 0.25, 0.5];
const HALF_DOMAIN: Domain = Domain {
    u: [-0.5, 0.5],
    v: [-0.5, 0.5],
};

fn coef(rng: &mut ChaCha8Rng, r: f64) -> f64 {
    (rng.gen_range(-r..=r) * 100.0).round() / 100.0
}

/// `Σ c_k u^k` with zero terms dropped.
fn poly_u(c: &[f64]) -> Expr {
    let mut terms = c
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != 0.0)
        .map(|(k, c)| match k {
            0 => Expr::num(*c),
            1 => Expr::mul(Expr::num(*c), Expr::u()),
            _ => Expr::mul(Expr::num(*c), Expr::pow(Expr::u(), k as i32)),
        });
    match terms.next() {
        None => Expr::num(0.0),
        Some(first) => terms.fold(first, Expr::add),
    }
}

fn eval_poly(c: &[f64], u: f64) -> f64 {
    c.iter().rev().fold(0.0, |s, k| s * u + k)
}

fn deriv(c: &[f64]) -> Vec<f64> {
    c.iter().enumerate().skip(1).map(|(k, x)| k as f64 * x).collect()
}

fn plus(a: Expr, b: Expr) -> Expr {
    match (&a, &b) {
        (Expr::Const(x), _) if *x == 0.0 => b,
        (_, Expr::Const(y)) if *y == 0.0 => a,
        _ => Expr::add(a, b),
    }
}

fn times_v(k: i32, scale: f64, p: Expr) -> Expr {
    match p {
        Expr::Const(x) if x == 0.0 => p,
        p => Expr::mul(Expr::mul(Expr::num(scale), Expr::pow(Expr::v(), k)), p),
    }
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

struct FirstCoeffs {
    alpha: [Vec<f64>; 3],
    beta: [Vec<f64>; 3],
    gamma: [Vec<f64>; 3],
    delta: [Vec<f64>; 3],
}

impl FirstCoeffs {
    fn random(rng: &mut ChaCha8Rng) -> Self {
        let mut alpha: [Vec<f64>; 3] = std::array::from_fn(|_| vec![0.0, 0.0, coef(rng, 1.0), coef(rng, 1.0)]);
        alpha[0][1] = 1.0;
        let beta = std::array::from_fn(|i| {
            let mut c = vec![coef(rng, 0.5), coef(rng, 0.5), coef(rng, 0.5)];
            if i == 1 {
                c[0] += 1.0;
            }
            c
        });
        let gamma = std::array::from_fn(|i| {
            let mut c = vec![coef(rng, 0.5), coef(rng, 0.5)];
            if i == 2 {
                c[0] += 1.0;
            }
            c
        });
        let delta = std::array::from_fn(|_| vec![coef(rng, 0.3), coef(rng, 0.3)]);
        FirstCoeffs {
            alpha,
            beta,
            gamma,
            delta,
        }
    }

    fn passes_probes(&self) -> bool {
        PROBES.iter().all(|&u| {
            let da: [f64; 3] = std::array::from_fn(|i| eval_poly(&deriv(&self.alpha[i]), u));
            let b: [f64; 3] = std::array::from_fn(|i| eval_poly(&self.beta[i], u));
            let g: [f64; 3] = std::array::from_fn(|i| eval_poly(&self.gamma[i], u));
            let n = cross(da, b);
            let nn = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
            let det = n[0] * g[0] + n[1] * g[1] + n[2] * g[2];
            nn >= PROBE_FLOOR && det.abs() >= PROBE_FLOOR
        })
    }

    fn surface(&self, name: String) -> SurfaceDef {
        let comps = std::array::from_fn(|i| {
            let mut e = poly_u(&self.alpha[i]);
            e = plus(e, times_v(2, 0.5, poly_u(&self.beta[i])));
            e = plus(e, times_v(3, 1.0 / 3.0, poly_u(&self.gamma[i])));
            plus(e, times_v(4, 1.0, poly_u(&self.delta[i])))
        });
        SurfaceDef::new(&name, comps, DeclaredKind::FirstKindAdapted, HALF_DOMAIN)
    }
}

fn second_surface(rng: &mut ChaCha8Rng, name: String) -> SurfaceDef {
    let (a, b, c) = (coef(rng, 1.0), coef(rng, 0.5), coef(rng, 0.5));
    let x = [coef(rng, 0.5), coef(rng, 0.5)];
    let z = [coef(rng, 0.5), coef(rng, 0.5)];
    let u = Expr::u;
    let v = Expr::v;
    let n = Expr::num;
    let base_x = Expr::sub(v(), Expr::mul(n(6.0), Expr::pow(u(), 2)));
    let base_y = Expr::sub(Expr::mul(Expr::pow(u(), 2), v()), Expr::mul(n(3.0), Expr::pow(u(), 4)));
    let base_z = Expr::sub(Expr::mul(n(2.0), Expr::mul(u(), v())), Expr::mul(n(8.0), Expr::pow(u(), 3)));
    let y = plus(
        plus(base_y, times_v(3, 1.0, poly_u(&[a]))),
        plus(times_v(4, 1.0, poly_u(&[b])), times_v(2, 1.0, poly_u(&[0.0, c]))),
    );
    let comps = [
        plus(base_x, times_v(2, 1.0, poly_u(&x))),
        y,
        plus(base_z, times_v(2, 1.0, poly_u(&z))),
    ];
    SurfaceDef::new(&name, comps, DeclaredKind::SecondKindAdapted, HALF_DOMAIN)
}

fn validate(def: &SurfaceDef, kind: CorpusKind, tol: &Tolerances) -> bool {
    let Ok(fr) = build_frame(def, [0.0, 0.0], def.order, tol) else {
        return false;
    };
    let Ok(rep) = classify_front_point(&fr, tol) else {
        return false;
    };
    match kind {
        CorpusKind::First => fr.kind == PointKind::FirstKind && rep.class == SingularityClass::CuspidalEdge,
        CorpusKind::Second => {
            let eps_ok = (fr.eps.coeff(1) - 12.0).abs() <= 1e-10 && fr.eps.value().abs() <= 1e-10;
            fr.kind == PointKind::SecondKind && rep.class == SingularityClass::Swallowtail && eps_ok
        }
    }
}

/// `count` validated surfaces of the given kind; the same seed gives the same list.
pub fn generate_corpus(seed: u64, count: usize, kind: CorpusKind) -> Result<Vec<SurfaceDef>> {
    if count == 0 {
        return Err(Error::Usage("corpus count must be at least 1".into()));
    }
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut tried = 0;
    while out.len() < count {
        if tried >= ATTEMPTS_PER_SURFACE * count {
            return Err(Error::GenerationExhausted(tried));
        }
        tried += 1;
        let name = match kind {
            CorpusKind::First => format!("first-{seed}-{}", out.len()),
            CorpusKind::Second => format!("second-{seed}-{}", out.len()),
        };
        let def = match kind {
            CorpusKind::First => {
                let c = FirstCoeffs::random(&mut rng);
                if !c.passes_probes() {
                    continue;
                }
                c.surface(name)
            }
            CorpusKind::Second => second_surface(&mut rng, name),
        };
        if validate(&def, kind, &tol) {
            out.push(def);
        }
    }
    Ok(out)
}
