//! Surface definitions: a small expression language for maps `f(u,v) = (X, Y, Z)`.
//!
//! ```text
//! # comment
//! name = quartic edge
//! kind = first            # first | second | regular | unknown
//! domain = [-0.5,0.5]x[-0.5,0.5]
//! order = 6
//! f = (u, u^2/2 + v^2/2, v^3/3 + u^4)
//! ```
//!
//! Precedence, tightest first: `^` (integer literal exponent, non-associative),
//! unary `-`, `* /`, `+ -`. Functions: `sqrt sin cos exp`.

mod expr;
mod lexer;
mod parser;
mod printer;

use serde::Serialize;

pub use expr::{linear_combination, BinOp, Expr, Func, Var};
pub use parser::{parse_expr, parse_surface};
pub use printer::{print_expr, print_surface};

use crate::error::{Error, Result};
use crate::jet::{Jet2, JetVec3};

pub const DEFAULT_ORDER: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeclaredKind {
    FirstKindAdapted,
    SecondKindAdapted,
    Regular,
    Unknown,
}

impl DeclaredKind {
    pub fn name(self) -> &'static str {
        match self {
            DeclaredKind::FirstKindAdapted => "first",
            DeclaredKind::SecondKindAdapted => "second",
            DeclaredKind::Regular => "regular",
            DeclaredKind::Unknown => "unknown",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "first" => DeclaredKind::FirstKindAdapted,
            "second" => DeclaredKind::SecondKindAdapted,
            "regular" => DeclaredKind::Regular,
            "unknown" => DeclaredKind::Unknown,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Domain {
    pub u: [f64; 2],
    pub v: [f64; 2],
}

impl Default for Domain {
    fn default() -> Self {
        Domain {
            u: [-1.0, 1.0],
            v: [-1.0, 1.0],
        }
    }
}

impl Domain {
    pub fn contains(&self, p: [f64; 2]) -> bool {
        (self.u[0]..=self.u[1]).contains(&p[0]) && (self.v[0]..=self.v[1]).contains(&p[1])
    }

    /// Length of the longer side.
    pub fn scale(&self) -> f64 {
        (self.u[1] - self.u[0]).max(self.v[1] - self.v[0])
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceDef {
    pub name: String,
    pub components: [Expr; 3],
    pub declared_kind: DeclaredKind,
    pub domain: Domain,
    /// Maximum jet order used when evaluating this surface.
    pub order: usize,
}

impl SurfaceDef {
    pub fn new(name: &str, components: [Expr; 3], kind: DeclaredKind, domain: Domain) -> Self {
        SurfaceDef {
            name: name.into(),
            components,
            declared_kind: kind,
            domain,
            order: DEFAULT_ORDER,
        }
    }

    /// Pointwise value of `f`.
    pub fn eval(&self, p: [f64; 2]) -> Result<[f64; 3]> {
        let [x, y, z] = &self.components;
        Ok([x.eval(p[0], p[1])?, y.eval(p[0], p[1])?, z.eval(p[0], p[1])?])
    }

    /// Applies `x ↦ R x + t` to the image.
    pub fn rigid_motion(&self, r: [[f64; 3]; 3], t: [f64; 3]) -> SurfaceDef {
        let c = &self.components;
        let one = Expr::Const(1.0);
        let comps = std::array::from_fn(|i| {
            linear_combination(&[
                (r[i][0], &c[0]),
                (r[i][1], &c[1]),
                (r[i][2], &c[2]),
                (t[i], &one),
            ])
        });
        SurfaceDef {
            components: comps,
            ..self.clone()
        }
    }

    /// Precomposes with the linear parameter change `(u, v) ↦ (a u + b v, c u + d v)`.
    /// The domain becomes a box around the origin of half-width `half`.
    pub fn linear_reparam(&self, m: [[f64; 2]; 2], half: f64) -> SurfaceDef {
        let nu = linear_combination(&[(m[0][0], &Expr::u()), (m[0][1], &Expr::v())]);
        let nv = linear_combination(&[(m[1][0], &Expr::u()), (m[1][1], &Expr::v())]);
        SurfaceDef {
            components: std::array::from_fn(|i| self.components[i].substitute(&nu, &nv)),
            declared_kind: DeclaredKind::Unknown,
            domain: Domain {
                u: [-half, half],
                v: [-half, half],
            },
            ..self.clone()
        }
    }
}

/// Component jets of `f` at `p`.
pub fn eval_jets(def: &SurfaceDef, p: [f64; 2], order: usize) -> Result<JetVec3> {
    if !def.domain.contains(p) {
        return Err(Error::DomainError(format!(
            "point ({}, {}) outside domain [{},{}]x[{},{}]",
            p[0], p[1], def.domain.u[0], def.domain.u[1], def.domain.v[0], def.domain.v[1]
        )));
    }
    if order > def.order {
        return Err(Error::OrderExceeded {
            requested: order,
            order: def.order,
        });
    }
    let [x, y, z] = &def.components;
    let jets: [Jet2; 3] = [x.jet(p, order)?, y.jet(p, order)?, z.jet(p, order)?];
    if !jets.iter().all(Jet2::is_finite) {
        return Err(Error::DomainError(format!("non-finite jet at ({}, {})", p[0], p[1])));
    }
    Ok(JetVec3(jets))
}
