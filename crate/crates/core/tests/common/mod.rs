#![allow(dead_code)]

use front_atlas::corpus::{generate_corpus, CorpusKind};
use front_atlas::{parse_surface, SurfaceDef, Tolerances};

macro_rules! surface {
    ($name:literal) => {
        include_str!(concat!("../../../../surfaces/", $name, ".surf"))
    };
}

pub const QUARTIC: &str = surface!("quartic_edge");
pub const CUSPIDAL_EDGE: &str = surface!("cuspidal_edge");
pub const TRANSVERSE: &str = surface!("transverse_edge");
pub const LINE_CUSP: &str = surface!("curvature_line_cusp");
pub const LINE_SWALLOWTAIL: &str = surface!("curvature_line_swallowtail");
pub const SWALLOWTAIL: &str = surface!("swallowtail");
pub const D4_PLUS: &str = surface!("swallowtail_d4_plus");
pub const D4_MINUS: &str = surface!("swallowtail_d4_minus");
pub const MIXED: &str = surface!("swallowtail_mixed");
pub const CORANK_ONE: &str = surface!("swallowtail_corank_one");
pub const PLANE: &str = surface!("plane");
pub const GRAPH_FOLD: &str = surface!("graph_fold");
pub const GRAPH_CUSP: &str = surface!("graph_cusp");
pub const GRAPH_LIPS: &str = surface!("graph_lips");
pub const GRAPH_BEAKS: &str = surface!("graph_beaks");

pub fn load(src: &str) -> SurfaceDef {
    parse_surface(src).expect("bundled surface parses")
}

pub fn tol() -> Tolerances {
    Tolerances::default()
}

pub fn first_corpus(n: usize) -> Vec<SurfaceDef> {
    generate_corpus(7, n, CorpusKind::First).expect("first-kind corpus")
}

pub fn second_corpus(n: usize) -> Vec<SurfaceDef> {
    generate_corpus(7, n, CorpusKind::Second).expect("second-kind corpus")
}

pub fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

/// Rotation matrix of the unit quaternion `q / |q|`.
pub fn rotation(q: [f64; 4]) -> [[f64; 3]; 3] {
    let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
    let [w, x, y, z] = q.map(|c| c / n);
    [
        [1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - w * z), 2.0 * (x * z + w * y)],
        [2.0 * (x * y + w * z), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - w * x)],
        [2.0 * (x * z - w * y), 2.0 * (y * z + w * x), 1.0 - 2.0 * (x * x + y * y)],
    ]
}

use front_atlas::frontal::PointGeometry;
use front_atlas::Expr;
use proptest::prelude::*;

/// Random expression trees in u and v that are defined everywhere.
pub fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        Just(Expr::u()),
        Just(Expr::v()),
        (-2.0f64..2.0).prop_map(|c| Expr::num((c * 100.0).round() / 100.0)),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::add(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::sub(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::mul(a, b)),
            (inner.clone(), 0i32..4).prop_map(|(a, k)| Expr::pow(a, k)),
            inner.clone().prop_map(|a| Expr::func(front_atlas::dsl::Func::Sin, a)),
            inner.clone().prop_map(|a| Expr::func(front_atlas::dsl::Func::Cos, a)),
            inner.clone().prop_map(|a| Expr::func(front_atlas::dsl::Func::Exp, Expr::mul(Expr::num(0.5), a))),
            inner.prop_map(|a| Expr::div(Expr::num(1.0), Expr::add(Expr::num(2.0), Expr::func(front_atlas::dsl::Func::Sin, a)))),
        ]
    })
}

/// Central finite difference of `∂^{i+j} e / ∂uⁱ∂vʲ` for `i + j ≤ 2`.
pub fn finite_difference(e: &Expr, p: [f64; 2], i: usize, j: usize, h: f64) -> f64 {
    let f = |du: f64, dv: f64| e.eval(p[0] + du, p[1] + dv).unwrap();
    match (i, j) {
        (0, 0) => f(0.0, 0.0),
        (1, 0) => (f(h, 0.0) - f(-h, 0.0)) / (2.0 * h),
        (0, 1) => (f(0.0, h) - f(0.0, -h)) / (2.0 * h),
        (2, 0) => (f(h, 0.0) - 2.0 * f(0.0, 0.0) + f(-h, 0.0)) / (h * h),
        (0, 2) => (f(0.0, h) - 2.0 * f(0.0, 0.0) + f(0.0, -h)) / (h * h),
        (1, 1) => (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4.0 * h * h),
        _ => panic!("finite differences only up to order 2"),
    }
}

/// Newton in one coordinate for `κ = 0`, holding the other fixed.
pub fn solve_kappa(def: &SurfaceDef, mut p: [f64; 2], along_v: bool) -> Option<[f64; 2]> {
    let t = tol();
    let k = if along_v { 1 } else { 0 };
    for _ in 0..40 {
        let g = PointGeometry::at(def, p, 6, &t).ok()?;
        let j = &g.principal.kappa;
        let d = if along_v { j.coeff(0, 1) } else { j.coeff(1, 0) };
        if j.value().abs() <= 1e-14 * g.principal.curvature_scale() {
            return Some(p);
        }
        if d == 0.0 {
            return None;
        }
        p[k] -= j.value() / d;
        if !def.domain.contains(p) {
            return None;
        }
    }
    None
}

/// Parabolic points found from a few starting points: off the axis by
/// moving in v, and on the axis by moving in u.
pub fn parabolic_points(def: &SurfaceDef) -> Vec<[f64; 2]> {
    let mut out = Vec::new();
    for u in [-0.3, -0.1, 0.1, 0.3] {
        for v in [0.05, 0.25, -0.05, -0.25] {
            if let Some(p) = solve_kappa(def, [u, v], true) {
                if p[1].abs() > 1e-6 {
                    out.push(p);
                }
            }
        }
        if let Some(p) = solve_kappa(def, [u, 0.0], false) {
            out.push(p);
        }
    }
    out
}
