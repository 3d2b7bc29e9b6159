use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use front_atlas::frontal::{build_frame, edge_invariants, PointGeometry};
use front_atlas::gauss::gauss_classify;
use front_atlas::height::{d4_classify, extended_height};
use front_atlas::trace::{trace_zero_curve, FieldTag, SurfaceField};
use front_atlas::{parse_surface, run_report, Config, Tolerances};

const QUARTIC: &str = include_str!("../../../surfaces/quartic_edge.surf");
const D4_PLUS: &str = include_str!("../../../surfaces/swallowtail_d4_plus.surf");

fn jets_and_frames(c: &mut Criterion) {
    let mut def = parse_surface(QUARTIC).unwrap();
    def.order = 8;
    let tol = Tolerances::default();
    for order in [4, 6, 8] {
        c.bench_function(&format!("frame/order{order}"), |b| {
            b.iter(|| build_frame(black_box(&def), [0.1, 0.0], order, &tol).unwrap())
        });
    }
    c.bench_function("edge_invariants", |b| {
        b.iter(|| {
            let g = PointGeometry::at(&def, [0.1, 0.0], 6, &tol).unwrap();
            edge_invariants(&g.frame, &g.fund).unwrap()
        })
    });
}

fn classifiers(c: &mut Criterion) {
    let tol = Tolerances::default();
    let quartic = parse_surface(QUARTIC).unwrap();
    let g = PointGeometry::at(&quartic, [0.0, 0.0], 6, &tol).unwrap();
    c.bench_function("gauss_classify", |b| b.iter(|| gauss_classify(&g.frame, &g.principal, &tol).unwrap()));
    let d4 = parse_surface(D4_PLUS).unwrap();
    let g = PointGeometry::at(&d4, [0.0, 0.0], 6, &tol).unwrap();
    c.bench_function("d4_classify", |b| {
        b.iter(|| {
            let hc = extended_height(&g.frame).unwrap();
            d4_classify(&hc, &g.frame, &g.fund, &g.principal, &tol).unwrap()
        })
    });
}

fn pipeline(c: &mut Criterion) {
    let def = parse_surface(QUARTIC).unwrap();
    let cfg = Config::default();
    c.bench_function("report", |b| b.iter(|| run_report(black_box(&def), [0.0, 0.0], &cfg).unwrap()));
    let field = SurfaceField {
        def: &def,
        tag: FieldTag::KappaZero,
        order: 6,
        tol: cfg.tol,
    };
    c.bench_function("trace/kappa", |b| b.iter(|| trace_zero_curve(&field, [0.0, 0.0], 0.02, 10, 1e-10).unwrap()));
}

criterion_group!(benches, jets_and_frames, classifiers, pipeline);
criterion_main!(benches);
