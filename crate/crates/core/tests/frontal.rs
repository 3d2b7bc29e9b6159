mod common;

use common::*;
use front_atlas::frontal::{
    build_frame, christoffel_decompose, classical_curvatures, edge_invariants, fundamentals, ridge_order,
    verify_branch, PointGeometry, PointKind, RidgeOrder,
};
use front_atlas::SurfaceDef;
use proptest::prelude::*;

fn geometry(def: &SurfaceDef, p: [f64; 2]) -> PointGeometry {
    PointGeometry::at(def, p, 6, &tol()).unwrap()
}

fn quartic_nu(u: f64, v: f64) -> [f64; 3] {
    let a = -4.0 * u * u * u + u * v;
    let n = (1.0 + v * v + a * a).sqrt();
    [a / n, -v / n, 1.0 / n]
}

#[test]
fn quartic_normal_matches_closed_form() {
    let d = load(QUARTIC);
    let pts = (0..20).map(|i| {
        let t = i as f64 / 19.0;
        [-0.45 + 0.9 * t, 0.4 * (5.0 * t).sin()]
    });
    for p in pts {
        let fr = build_frame(&d, p, 6, &tol()).unwrap();
        let got = fr.nu.value();
        let want = quartic_nu(p[0], p[1]);
        let s = got.iter().zip(&want).map(|(a, b)| a * b).sum::<f64>().signum();
        for k in 0..3 {
            assert!((got[k] - s * want[k]).abs() < 1e-12, "{p:?}");
        }
    }
}

#[test]
fn quartic_edge_invariants() {
    let d = load(QUARTIC);
    let g = geometry(&d, [0.0, 0.0]);
    let e = edge_invariants(&g.frame, &g.fund).unwrap();
    let e = e.edge().unwrap();
    assert!((e.kappa_s.value() - 1.0).abs() < 1e-12);
    assert!((e.kappa_c.value().abs() - 2.0).abs() < 1e-12);
    // κ_i ≈ 24u near the origin.
    assert!((e.kappa_i.derivative(1).unwrap().abs() - 24.0).abs() < 1e-9);
    for u in [-0.3, -0.1, 0.1, 0.3] {
        let g = geometry(&d, [u, 0.0]);
        let e = edge_invariants(&g.frame, &g.fund).unwrap();
        let e = e.edge().unwrap();
        let u6 = u.powi(6);
        let kn = 12.0 * u * u / ((1.0 + 16.0 * u6).sqrt() * (1.0 + u * u + 16.0 * u6));
        assert!(rel_close(e.kappa_nu.value(), kn, 1e-10), "u = {u}");
        // Symbolic oracle for the torsion; it does not vanish off the origin.
        let kt = -12.0 * u.powi(3) / ((1.0 + 16.0 * u6) * (1.0 + u * u + 16.0 * u6));
        assert!(rel_close(e.kappa_t.value().abs(), kt.abs(), 1e-10), "u = {u}");
    }
}

#[test]
fn standard_cuspidal_edge() {
    let d = load(CUSPIDAL_EDGE);
    let g = geometry(&d, [0.0, 0.0]);
    let [e, f, gg, l, m, n] = g.fund.values();
    assert_eq!([e, f, gg, l, m, n.abs()], [1.0, 0.0, 4.0, 0.0, 0.0, 3.0]);
    let e = edge_invariants(&g.frame, &g.fund).unwrap();
    let e = e.edge().unwrap();
    assert!((e.kappa_c.value().abs() - 3.0 / 2f64.sqrt()).abs() < 1e-12);
    assert!(e.kappa_nu.max_abs() == 0.0);
}

#[test]
fn transverse_edge_has_linear_kappa_nu() {
    let d = load(TRANSVERSE);
    let g = geometry(&d, [0.0, 0.0]);
    let e = edge_invariants(&g.frame, &g.fund).unwrap();
    let e = e.edge().unwrap();
    assert_eq!(e.kappa_nu.value(), 0.0);
    assert!((e.kappa_nu.derivative(1).unwrap().abs() - 6.0).abs() < 1e-12);
}

#[test]
fn principal_vector_second_component_is_torsion() {
    let d = load(QUARTIC);
    for u in [-0.4, -0.2, 0.0, 0.15, 0.35] {
        let g = geometry(&d, [u, 0.0]);
        let e = edge_invariants(&g.frame, &g.fund).unwrap();
        let e = e.edge().unwrap();
        let sqrt_d = g.fund.det().value().sqrt();
        let want = -e.kappa_t.value() * sqrt_d;
        assert!((g.principal.v2.value() - want).abs() < 1e-12, "u = {u}");
        assert!((g.principal.v1.value() - g.fund.n.value()).abs() < 1e-14);
    }
}

#[test]
fn quartic_ridge_orders() {
    let d = load(QUARTIC);
    let g = geometry(&d, [0.0, 0.0]);
    let r = ridge_order(&g.principal, 3, &tol()).unwrap();
    assert_eq!(r.order, RidgeOrder::Order(1));
    let g = geometry(&d, [0.2, 0.48]);
    let r = ridge_order(&g.principal, 3, &tol()).unwrap();
    assert_eq!(r.order, RidgeOrder::NotRidge);
    assert!((r.witnesses[0].abs() - 3.735001738969002).abs() < 1e-9);
    let g = geometry(&d, [0.2, 0.1]);
    assert!(ridge_order(&g.principal, 3, &tol()).is_err());
    // Too short a jet cannot certify that the witnesses vanish.
    let g = PointGeometry::at(&d, [0.0, 0.0], 4, &tol()).unwrap();
    assert!(matches!(ridge_order(&g.principal, 3, &tol()), Err(front_atlas::Error::OrderExceeded { .. })));
}

#[test]
fn christoffel_and_e_v_residuals_vanish() {
    for def in first_corpus(10).iter().chain([load(QUARTIC)].iter()) {
        for p in [[0.0, 0.0], [0.2, 0.0], [-0.1, 0.15]] {
            let fr = build_frame(def, p, 6, &tol()).unwrap();
            let fd = fundamentals(&fr).unwrap();
            let c = christoffel_decompose(&fr, &fd).unwrap();
            assert!(c.residual_up_to(2) <= 1e-9, "{} at {p:?}", def.name);
            assert!(c.e_v_residual.max_abs() <= 1e-10, "{} at {p:?}", def.name);
        }
    }
}

#[test]
fn inflection_identity_on_corpus() {
    for def in first_corpus(20) {
        for u in [-0.3, 0.0, 0.25] {
            let g = geometry(&def, [u, 0.0]);
            let e = edge_invariants(&g.frame, &g.fund).unwrap();
            let e = e.edge().unwrap();
            let rhs = e.kappa_t.value() * e.kappa_s.value() + e.kappa_nu.derivative(1).unwrap() / e.sqrt_e.value();
            assert!((e.kappa_i.value() - rhs).abs() <= 1e-8, "{} at u = {u}", def.name);
        }
    }
}

#[test]
fn unbounded_branch_flips_across_the_edge() {
    let d = load(QUARTIC);
    for u in [-0.4, -0.3, -0.2, -0.1, 0.05, 0.1, 0.2, 0.3, 0.4, 0.45] {
        let plus = geometry(&d, [u, 1e-3]).principal.kappa_unbounded().unwrap();
        let minus = geometry(&d, [u, -1e-3]).principal.kappa_unbounded().unwrap();
        assert_eq!(plus.signum(), -minus.signum(), "u = {u}");
        assert!(verify_branch(&d, u, 6, &tol()).unwrap().agrees, "u = {u}");
    }
}

#[test]
fn kappa_hat_nonzero_at_singular_points() {
    for src in [QUARTIC, CUSPIDAL_EDGE, TRANSVERSE, SWALLOWTAIL, D4_PLUS, MIXED] {
        let d = load(src);
        let g = geometry(&d, [0.0, 0.0]);
        assert!(g.frame.is_singular());
        assert!(g.principal.kappa_hat.value().abs() > 1e-6, "{}", d.name);
    }
}

#[test]
fn second_kind_cuspidal_curvature() {
    let d = load(SWALLOWTAIL);
    let g = geometry(&d, [0.0, 0.0]);
    assert_eq!(g.frame.kind, PointKind::SecondKind);
    let i = edge_invariants(&g.frame, &g.fund).unwrap();
    assert!((i.mu_c().unwrap().abs() - 0.5).abs() < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn classical_pair_at_regular_points(idx in 0usize..6, u in -0.2f64..0.2, v in 0.05f64..0.2, side in any::<bool>()) {
        let def = &first_corpus(6)[idx];
        let p = [u, if side { v } else { -v }];
        let g = geometry(def, p);
        let (h, k, _, _) = classical_curvatures(&g.frame).unwrap();
        let kk = g.principal.kappa.value();
        let kt = g.principal.kappa_unbounded().unwrap();
        prop_assert!(rel_close(kk * kt, k, 1e-8) || (kk * kt - k).abs() < 1e-10);
        prop_assert!(rel_close(kk + kt, 2.0 * h, 1e-8) || (kk + kt - 2.0 * h).abs() < 1e-10);
    }

    #[test]
    fn invariants_survive_rigid_motions(
        idx in 0usize..5,
        q in prop::array::uniform4(-1.0f64..1.0),
        t in prop::array::uniform3(-2.0f64..2.0),
    ) {
        prop_assume!(q.iter().map(|x| x * x).sum::<f64>() > 1e-2);
        let def = &first_corpus(5)[idx];
        let moved = def.rigid_motion(rotation(q), t);
        for u in [0.0, 0.2] {
            let a = geometry(def, [u, 0.0]);
            let b = geometry(&moved, [u, 0.0]);
            let a = edge_invariants(&a.frame, &a.fund).unwrap().values();
            let b = edge_invariants(&b.frame, &b.fund).unwrap().values();
            prop_assert!((a.kappa_s.unwrap() - b.kappa_s.unwrap()).abs() < 1e-8);
            prop_assert!((a.kappa_nu.unwrap() - b.kappa_nu.unwrap()).abs() < 1e-8);
            prop_assert!((a.kappa_c_abs.unwrap() - b.kappa_c_abs.unwrap()).abs() < 1e-8);
            prop_assert!((a.kappa_t.unwrap().abs() - b.kappa_t.unwrap().abs()).abs() < 1e-8);
        }
    }
}
