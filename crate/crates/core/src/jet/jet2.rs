use std::ops::{Add, Mul, Neg, Sub};

use super::{series, Jet1};
use crate::error::{Error, Result};

/// Truncated bivariate Taylor expansion at a base point.
///
/// Coefficients are stored normalized: `coeff(i, j)` is
/// `∂^{i+j} g / ∂uⁱ∂vʲ / (i! j!)` at the base point.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet2 {
    order: usize,
    base: [f64; 2],
    coeffs: Vec<f64>,
}

#[inline]
pub(crate) fn idx(i: usize, j: usize) -> usize {
    let d = i + j;
    d * (d + 1) / 2 + j
}

#[inline]
fn len(order: usize) -> usize {
    (order + 1) * (order + 2) / 2
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |a, k| a * k as f64)
}

impl Jet2 {
    pub fn zero(base: [f64; 2], order: usize) -> Self {
        Jet2 {
            order,
            base,
            coeffs: vec![0.0; len(order)],
        }
    }

    pub fn constant(c: f64, base: [f64; 2], order: usize) -> Self {
        let mut j = Self::zero(base, order);
        j.coeffs[0] = c;
        j
    }

    /// Jet of the coordinate function `u`.
    pub fn var_u(base: [f64; 2], order: usize) -> Self {
        let mut j = Self::constant(base[0], base, order);
        if order >= 1 {
            j.coeffs[idx(1, 0)] = 1.0;
        }
        j
    }

    /// Jet of the coordinate function `v`.
    pub fn var_v(base: [f64; 2], order: usize) -> Self {
        let mut j = Self::constant(base[1], base, order);
        if order >= 1 {
            j.coeffs[idx(0, 1)] = 1.0;
        }
        j
    }

    /// Builds a jet from normalized coefficients given by `c(i, j)`.
    pub fn from_fn(base: [f64; 2], order: usize, mut c: impl FnMut(usize, usize) -> f64) -> Self {
        let mut j = Self::zero(base, order);
        for d in 0..=order {
            for jj in 0..=d {
                j.coeffs[idx(d - jj, jj)] = c(d - jj, jj);
            }
        }
        j
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn base(&self) -> [f64; 2] {
        self.base
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Normalized coefficient; zero beyond the truncation order.
    pub fn coeff(&self, i: usize, j: usize) -> f64 {
        if i + j > self.order {
            0.0
        } else {
            self.coeffs[idx(i, j)]
        }
    }

    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    /// Raw partial derivative `∂^{i+j}/∂uⁱ∂vʲ` at the base point.
    pub fn partial(&self, i: usize, j: usize) -> Result<f64> {
        if i + j > self.order {
            return Err(Error::OrderExceeded {
                requested: i + j,
                order: self.order,
            });
        }
        Ok(factorial(i) * factorial(j) * self.coeffs[idx(i, j)])
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_finite())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Jet2 {
            order,
            base: self.base,
            coeffs: self.coeffs[..len(order)].to_vec(),
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        Jet2 {
            order: self.order,
            base: self.base,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add_scalar(&self, s: f64) -> Self {
        let mut r = self.clone();
        r.coeffs[0] += s;
        r
    }

    fn check_shape(&self, other: &Jet2) -> Result<()> {
        if self.base != other.base {
            return Err(Error::JetShapeMismatch(format!(
                "base points {:?} and {:?}",
                self.base, other.base
            )));
        }
        if self.order != other.order {
            return Err(Error::JetShapeMismatch(format!(
                "orders {} and {}",
                self.order, other.order
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Jet2) -> Result<Jet2> {
        self.check_shape(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Jet2) -> Result<Jet2> {
        self.check_shape(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Jet2) -> Result<Jet2> {
        self.check_shape(other)?;
        Ok(self * other)
    }

    pub fn checked_div(&self, other: &Jet2) -> Result<Jet2> {
        self.check_shape(other)?;
        self.div(other)
    }

    /// Quotient, truncated to the smaller of the two orders.
    pub fn div(&self, other: &Jet2) -> Result<Jet2> {
        Ok(self * &other.recip()?)
    }

    fn binary(&self, other: &Jet2, f: impl Fn(f64, f64) -> f64) -> Jet2 {
        assert_eq!(self.base, other.base, "jets at different base points");
        let order = self.order.min(other.order);
        let n = len(order);
        Jet2 {
            order,
            base: self.base,
            coeffs: (0..n).map(|k| f(self.coeffs[k], other.coeffs[k])).collect(),
        }
    }

    fn product(&self, other: &Jet2) -> Jet2 {
        assert_eq!(self.base, other.base, "jets at different base points");
        let order = self.order.min(other.order);
        let mut out = Jet2::zero(self.base, order);
        for d1 in 0..=order {
            for j1 in 0..=d1 {
                let a = self.coeffs[idx(d1 - j1, j1)];
                if a == 0.0 {
                    continue;
                }
                for d2 in 0..=(order - d1) {
                    for j2 in 0..=d2 {
                        let b = other.coeffs[idx(d2 - j2, j2)];
                        out.coeffs[idx(d1 - j1 + d2 - j2, j1 + j2)] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Sum of `c[k] (g − g(p))^k`, evaluated by Horner.
    fn compose(&self, c: &[f64]) -> Jet2 {
        let mut delta = self.clone();
        delta.coeffs[0] = 0.0;
        let mut r = Jet2::constant(c[self.order], self.base, self.order);
        for k in (0..self.order).rev() {
            r = (&r * &delta).add_scalar(c[k]);
        }
        r
    }

    pub fn recip(&self) -> Result<Jet2> {
        let a = self.value();
        if a == 0.0 {
            return Err(Error::DivisionBySingularJet);
        }
        Ok(self.compose(&series::recip(a, self.order)))
    }

    pub fn sqrt(&self) -> Result<Jet2> {
        let a = self.value();
        if !(a > 0.0) {
            return Err(Error::DomainError(format!("sqrt of jet with constant term {a}")));
        }
        Ok(self.compose(&series::power(a, 0.5, self.order)))
    }

    pub fn exp(&self) -> Jet2 {
        self.compose(&series::exp(self.value(), self.order))
    }

    pub fn sin(&self) -> Jet2 {
        self.compose(&series::sin(self.value(), self.order))
    }

    pub fn cos(&self) -> Jet2 {
        self.compose(&series::cos(self.value(), self.order))
    }

    pub fn powi(&self, k: i32) -> Result<Jet2> {
        if k < 0 {
            return self.powi(-k)?.recip();
        }
        let mut result = Jet2::constant(1.0, self.base, self.order);
        let mut b = self.clone();
        let mut e = k as u32;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(result)
    }

    /// `g^(p / 2^k)` for a positive jet, as `k` square roots of `g^p`.
    pub fn pow_dyadic(&self, p: i32, k: u32) -> Result<Jet2> {
        let mut r = self.powi(p)?;
        for _ in 0..k {
            r = r.sqrt()?;
        }
        Ok(r)
    }

    /// Derivative in u; order drops by one.
    pub fn d_u(&self) -> Jet2 {
        assert!(self.order >= 1, "cannot differentiate an order-0 jet");
        Jet2::from_fn(self.base, self.order - 1, |i, j| {
            (i + 1) as f64 * self.coeffs[idx(i + 1, j)]
        })
    }

    /// Derivative in v; order drops by one.
    pub fn d_v(&self) -> Jet2 {
        assert!(self.order >= 1, "cannot differentiate an order-0 jet");
        Jet2::from_fn(self.base, self.order - 1, |i, j| {
            (j + 1) as f64 * self.coeffs[idx(i, j + 1)]
        })
    }

    /// Derivative along the field `a ∂_u + b ∂_v`.
    pub fn directional(&self, a: &Jet2, b: &Jet2) -> Jet2 {
        &(a * &self.d_u()) + &(b * &self.d_v())
    }

    /// Jet of `g / v` for a jet based on the u-axis, by coefficient shift.
    ///
    /// Coefficients with no factor of `v` must vanish to within
    /// `tol · max|coeff|`.
    pub fn divide_out_v(&self, tol: f64) -> Result<Jet2> {
        if self.base[1] != 0.0 {
            return Err(Error::JetShapeMismatch(format!(
                "divide_out_v needs a base point on the u-axis, got v = {}",
                self.base[1]
            )));
        }
        if self.order == 0 {
            return Err(Error::OrderExceeded {
                requested: 1,
                order: 0,
            });
        }
        let bound = tol * self.max_abs();
        let residual = (0..=self.order)
            .map(|i| self.coeffs[idx(i, 0)].abs())
            .fold(0.0, f64::max);
        if residual > bound {
            return Err(Error::NotDivisibleByV { residual });
        }
        Ok(Jet2::from_fn(self.base, self.order - 1, |i, j| {
            self.coeffs[idx(i, j + 1)]
        }))
    }

    /// Jet of `g / v` at any base point; order drops by one either way.
    pub fn divide_by_v(&self, tol: f64) -> Result<Jet2> {
        if self.base[1] == 0.0 {
            self.divide_out_v(tol)
        } else {
            let v = Jet2::var_v(self.base, self.order);
            Ok(self.div(&v)?.truncate(self.order - 1))
        }
    }

    /// Univariate jet of `u ↦ g(u, v₀)`.
    pub fn restrict_to_axis(&self) -> Jet1 {
        Jet1::from_coeffs(
            self.base[0],
            (0..=self.order).map(|i| self.coeffs[idx(i, 0)]).collect(),
        )
    }

    /// Bivariate jet of `(u, v) ↦ g(u)` at `(u₀, v₀)`.
    pub fn lift(g: &Jet1, v0: f64) -> Jet2 {
        let order = g.order();
        Jet2::from_fn([g.base(), v0], order, |i, j| if j == 0 { g.coeff(i) } else { 0.0 })
    }

    /// Truncated Taylor polynomial evaluated at the offset `(du, dv)`.
    pub fn eval_offset(&self, du: f64, dv: f64) -> f64 {
        let mut s = 0.0;
        for d in 0..=self.order {
            for j in 0..=d {
                s += self.coeffs[idx(d - j, j)] * du.powi((d - j) as i32) * dv.powi(j as i32);
            }
        }
        s
    }
}

impl Add for &Jet2 {
    type Output = Jet2;
    fn add(self, o: &Jet2) -> Jet2 {
        self.binary(o, |a, b| a + b)
    }
}

impl Sub for &Jet2 {
    type Output = Jet2;
    fn sub(self, o: &Jet2) -> Jet2 {
        self.binary(o, |a, b| a - b)
    }
}

impl Mul for &Jet2 {
    type Output = Jet2;
    fn mul(self, o: &Jet2) -> Jet2 {
        self.product(o)
    }
}

impl Mul<f64> for &Jet2 {
    type Output = Jet2;
    fn mul(self, s: f64) -> Jet2 {
        self.scale(s)
    }
}

impl Neg for &Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        self.scale(-1.0)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Jet2 {
            type Output = Jet2;
            fn $m(self, o: Jet2) -> Jet2 {
                (&self).$m(&o)
            }
        }
        impl $tr<&Jet2> for Jet2 {
            type Output = Jet2;
            fn $m(self, o: &Jet2) -> Jet2 {
                (&self).$m(o)
            }
        }
        impl $tr<Jet2> for &Jet2 {
            type Output = Jet2;
            fn $m(self, o: Jet2) -> Jet2 {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Mul<f64> for Jet2 {
    type Output = Jet2;
    fn mul(self, s: f64) -> Jet2 {
        self.scale(s)
    }
}

impl Neg for Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        self.scale(-1.0)
    }
}
