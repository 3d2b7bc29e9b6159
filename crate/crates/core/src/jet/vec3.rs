use super::Jet2;
use crate::error::Result;

/// A vector-valued jet: three component jets sharing a base point.
#[derive(Clone, Debug, PartialEq)]
pub struct JetVec3(pub [Jet2; 3]);

impl JetVec3 {
    pub fn new(x: Jet2, y: Jet2, z: Jet2) -> Self {
        JetVec3([x, y, z])
    }

    pub fn order(&self) -> usize {
        self.0.iter().map(Jet2::order).min().unwrap_or(0)
    }

    pub fn base(&self) -> [f64; 2] {
        self.0[0].base()
    }

    pub fn value(&self) -> [f64; 3] {
        [self.0[0].value(), self.0[1].value(), self.0[2].value()]
    }

    pub fn map(&self, f: impl Fn(&Jet2) -> Jet2) -> JetVec3 {
        JetVec3([f(&self.0[0]), f(&self.0[1]), f(&self.0[2])])
    }

    pub fn try_map(&self, f: impl Fn(&Jet2) -> Result<Jet2>) -> Result<JetVec3> {
        Ok(JetVec3([f(&self.0[0])?, f(&self.0[1])?, f(&self.0[2])?]))
    }

    pub fn d_u(&self) -> JetVec3 {
        self.map(Jet2::d_u)
    }

    pub fn d_v(&self) -> JetVec3 {
        self.map(Jet2::d_v)
    }

    pub fn truncate(&self, order: usize) -> JetVec3 {
        self.map(|c| c.truncate(order))
    }

    pub fn add(&self, o: &JetVec3) -> JetVec3 {
        JetVec3([&self.0[0] + &o.0[0], &self.0[1] + &o.0[1], &self.0[2] + &o.0[2]])
    }

    pub fn sub(&self, o: &JetVec3) -> JetVec3 {
        JetVec3([&self.0[0] - &o.0[0], &self.0[1] - &o.0[1], &self.0[2] - &o.0[2]])
    }

    pub fn scale(&self, s: &Jet2) -> JetVec3 {
        self.map(|c| c * s)
    }

    pub fn scale_f(&self, s: f64) -> JetVec3 {
        self.map(|c| c.scale(s))
    }

    pub fn dot(&self, o: &JetVec3) -> Jet2 {
        &(&(&self.0[0] * &o.0[0]) + &(&self.0[1] * &o.0[1])) + &(&self.0[2] * &o.0[2])
    }

    /// Inner product with a constant vector.
    pub fn dot_const(&self, w: [f64; 3]) -> Jet2 {
        &(&self.0[0].scale(w[0]) + &self.0[1].scale(w[1])) + &self.0[2].scale(w[2])
    }

    pub fn cross(&self, o: &JetVec3) -> JetVec3 {
        let [a0, a1, a2] = &self.0;
        let [b0, b1, b2] = &o.0;
        JetVec3([
            &(a1 * b2) - &(a2 * b1),
            &(a2 * b0) - &(a0 * b2),
            &(a0 * b1) - &(a1 * b0),
        ])
    }

    pub fn norm_sq(&self) -> Jet2 {
        self.dot(self)
    }

    pub fn normalized(&self) -> Result<JetVec3> {
        let inv = self.norm_sq().sqrt()?.recip()?;
        Ok(self.scale(&inv))
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(Jet2::max_abs).fold(0.0, f64::max)
    }
}

/// `det(a, b, c) = ⟨a, b × c⟩`.
pub fn det3(a: &JetVec3, b: &JetVec3, c: &JetVec3) -> Jet2 {
    a.dot(&b.cross(c))
}

impl JetVec3 {
    pub fn det(a: &JetVec3, b: &JetVec3, c: &JetVec3) -> Jet2 {
        det3(a, b, c)
    }
}
