use super::series;
use crate::error::{Error, Result};

/// Truncated univariate Taylor expansion; `coeff(k) = g⁽ᵏ⁾(u₀)/k!`.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet1 {
    base: f64,
    coeffs: Vec<f64>,
}

impl Jet1 {
    pub fn from_coeffs(base: f64, coeffs: Vec<f64>) -> Self {
        assert!(!coeffs.is_empty(), "a jet has at least a constant term");
        Jet1 { base, coeffs }
    }

    pub fn constant(c: f64, base: f64, order: usize) -> Self {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = c;
        Jet1 { base, coeffs }
    }

    pub fn var(base: f64, order: usize) -> Self {
        let mut j = Self::constant(base, base, order);
        if order >= 1 {
            j.coeffs[1] = 1.0;
        }
        j
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn base(&self) -> f64 {
        self.base
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    /// Raw k-th derivative at the base point.
    pub fn derivative(&self, k: usize) -> Result<f64> {
        if k > self.order() {
            return Err(Error::OrderExceeded {
                requested: k,
                order: self.order(),
            });
        }
        Ok((1..=k).fold(self.coeffs[k], |a, m| a * m as f64))
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn truncate(&self, order: usize) -> Self {
        Jet1 {
            base: self.base,
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        Jet1 {
            base: self.base,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    fn zip(&self, o: &Jet1, f: impl Fn(f64, f64) -> f64) -> Jet1 {
        assert_eq!(self.base, o.base, "jets at different base points");
        let n = self.coeffs.len().min(o.coeffs.len());
        Jet1 {
            base: self.base,
            coeffs: (0..n).map(|k| f(self.coeffs[k], o.coeffs[k])).collect(),
        }
    }

    pub fn add(&self, o: &Jet1) -> Jet1 {
        self.zip(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &Jet1) -> Jet1 {
        self.zip(o, |a, b| a - b)
    }

    pub fn mul(&self, o: &Jet1) -> Jet1 {
        assert_eq!(self.base, o.base, "jets at different base points");
        let n = self.coeffs.len().min(o.coeffs.len());
        let mut c = vec![0.0; n];
        for i in 0..n {
            for j in 0..n - i {
                c[i + j] += self.coeffs[i] * o.coeffs[j];
            }
        }
        Jet1 {
            base: self.base,
            coeffs: c,
        }
    }

    pub fn recip(&self) -> Result<Jet1> {
        let a = self.value();
        if a == 0.0 {
            return Err(Error::DivisionBySingularJet);
        }
        Ok(self.compose(&series::recip(a, self.order())))
    }

    pub fn sqrt(&self) -> Result<Jet1> {
        let a = self.value();
        if !(a > 0.0) {
            return Err(Error::DomainError(format!("sqrt of jet with constant term {a}")));
        }
        Ok(self.compose(&series::power(a, 0.5, self.order())))
    }

    fn compose(&self, c: &[f64]) -> Jet1 {
        let mut delta = self.clone();
        delta.coeffs[0] = 0.0;
        let n = self.order();
        let mut r = Jet1::constant(c[n], self.base, n);
        for k in (0..n).rev() {
            r = r.mul(&delta);
            r.coeffs[0] += c[k];
        }
        r
    }

    /// Derivative jet; order drops by one.
    pub fn deriv(&self) -> Jet1 {
        if self.order() == 0 {
            return Jet1::constant(0.0, self.base, 0);
        }
        Jet1 {
            base: self.base,
            coeffs: (1..self.coeffs.len())
                .map(|k| k as f64 * self.coeffs[k])
                .collect(),
        }
    }

    pub fn eval_offset(&self, du: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * du + c)
    }
}
