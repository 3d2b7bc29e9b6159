mod common;

use common::*;
use front_atlas::{Error, Expr, Jet1, Jet2};
use proptest::prelude::*;

fn arb_jet(order: usize) -> impl Strategy<Value = Jet2> {
    let n = (order + 1) * (order + 2) / 2;
    prop::collection::vec(-2.0f64..2.0, n).prop_map(move |c| {
        let mut it = c.into_iter();
        Jet2::from_fn([0.1, -0.2], order, |_, _| it.next().unwrap())
    })
}

fn close(a: &Jet2, b: &Jet2, tol: f64) -> bool {
    a.order() == b.order()
        && a.coeffs().iter().zip(b.coeffs()).all(|(x, y)| (x - y).abs() <= tol * (1.0 + x.abs().max(y.abs())))
}

/// `1 + (small jet)`, safe to divide by and take the square root of.
fn unit_like(j: &Jet2) -> Jet2 {
    j.scale(0.1).add_scalar(1.0 - 0.1 * j.value())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in arb_jet(4), b in arb_jet(4), c in arb_jet(4)) {
        prop_assert!(close(&(&a + &b), &(&b + &a), 1e-14));
        prop_assert!(close(&(&a * &b), &(&b * &a), 1e-13));
        prop_assert!(close(&(&(&a * &b) * &c), &(&a * &(&b * &c)), 1e-12));
        prop_assert!(close(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c)), 1e-12));
    }

    #[test]
    fn division_inverts_multiplication(a in arb_jet(5), b in arb_jet(5)) {
        let b = unit_like(&b);
        let q = a.div(&b).unwrap();
        prop_assert!(close(&(&q * &b), &a, 1e-11));
    }

    #[test]
    fn sqrt_squares_back(a in arb_jet(5)) {
        let a = unit_like(&a);
        let s = a.sqrt().unwrap();
        prop_assert!(close(&(&s * &s), &a, 1e-12));
    }

    #[test]
    fn exp_log_identities(a in arb_jet(4), b in arb_jet(4)) {
        let (a, b) = (a.scale(0.3), b.scale(0.3));
        prop_assert!(close(&(&a + &b).exp(), &(&a.exp() * &b.exp()), 1e-11));
        let s = a.sin();
        let c = a.cos();
        prop_assert!(close(&(&(&s * &s) + &(&c * &c)), &Jet2::constant(1.0, a.base(), 4), 1e-12));
    }

    #[test]
    fn leibniz_rule(a in arb_jet(5), b in arb_jet(5)) {
        let lhs = (&a * &b).d_u();
        let rhs = &(&a.d_u() * &b.truncate(4)) + &(&a.truncate(4) * &b.d_u());
        prop_assert!(close(&lhs, &rhs, 1e-12));
        prop_assert_eq!(a.d_v().order(), 4);
    }

    #[test]
    fn mixed_partials_commute(a in arb_jet(5)) {
        prop_assert!(close(&a.d_u().d_v(), &a.d_v().d_u(), 1e-13));
    }

    #[test]
    fn truncation_to_minimum_order(a in arb_jet(3), b in arb_jet(5)) {
        prop_assert_eq!((&a * &b).order(), 3);
        prop_assert_eq!((&a + &b).order(), 3);
    }

    #[test]
    fn axis_restriction_commutes_with_u_derivative(a in arb_jet(5)) {
        let a = Jet2::from_fn([0.3, 0.0], 5, |i, j| a.coeff(i, j));
        let x = a.d_u().restrict_to_axis();
        let y = a.restrict_to_axis().deriv();
        for k in 0..=4 {
            prop_assert!((x.coeff(k) - y.coeff(k)).abs() < 1e-13);
        }
    }

    #[test]
    fn v_division_inverts_v_multiplication(a in arb_jet(5)) {
        let base = [0.2, 0.0];
        let a = Jet2::from_fn(base, 5, |i, j| a.coeff(i, j));
        let av = &a * &Jet2::var_v(base, 5);
        let back = av.divide_by_v(1e-12).unwrap();
        prop_assert!(close(&back, &a.truncate(4), 1e-13));
    }

    #[test]
    fn jets_match_finite_differences(e in arb_expr(), u in -0.4f64..0.4, v in -0.4f64..0.4) {
        let j = e.jet([u, v], 3).unwrap();
        for (i, k) in [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)] {
            let got = j.partial(i, k).unwrap();
            let fd = finite_difference(&e, [u, v], i, k, 1e-4);
            let scale = got.abs().max(fd.abs()).max(1.0);
            prop_assert!((got - fd).abs() <= 1e-5 * scale, "∂({},{}) {} vs {}", i, k, got, fd);
        }
    }
}

#[test]
fn error_cases() {
    let z = Jet2::var_u([0.0, 0.0], 4);
    assert!(matches!(z.recip(), Err(Error::DivisionBySingularJet)));
    assert!(matches!(z.sqrt(), Err(Error::DomainError(_)) | Err(Error::DivisionBySingularJet)));
    assert!(matches!(z.partial(5, 0), Err(Error::OrderExceeded { requested: 5, order: 4 })));
    let not_v = Jet2::constant(1.0, [0.0, 0.0], 3);
    assert!(matches!(not_v.divide_by_v(1e-12), Err(Error::NotDivisibleByV { .. })));
    let other = Jet2::constant(1.0, [0.5, 0.0], 3);
    assert!(matches!(not_v.checked_add(&other), Err(Error::JetShapeMismatch(_))));
}

#[test]
fn one_variable_jets() {
    let x = Jet1::var(0.5, 4);
    let y = x.mul(&x).add(&Jet1::constant(1.0, 0.5, 4));
    // 1 + t² at t = 0.5: value 1.25, first derivative 1, second 2.
    assert_eq!(y.value(), 1.25);
    assert!((y.derivative(1).unwrap() - 1.0).abs() < 1e-15);
    assert!((y.derivative(2).unwrap() - 2.0).abs() < 1e-15);
    let r = y.recip().unwrap();
    assert!((r.derivative(1).unwrap() + 1.0 / 1.5625).abs() < 1e-14);
}

#[test]
fn polynomial_jets_are_exact() {
    let e = Expr::add(Expr::pow(Expr::u(), 3), Expr::mul(Expr::u(), Expr::pow(Expr::v(), 2)));
    let j = e.jet([0.5, -1.0], 4).unwrap();
    assert_eq!(j.partial(3, 0).unwrap(), 6.0);
    assert_eq!(j.partial(1, 2).unwrap(), 2.0);
    assert_eq!(j.partial(0, 1).unwrap(), -1.0);
}
