use crate::error::{Error, Result};
use crate::jet::Jet2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    U,
    V,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Func {
    Sqrt,
    Sin,
    Cos,
    Exp,
}

impl Func {
    pub fn name(self) -> &'static str {
        match self {
            Func::Sqrt => "sqrt",
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
        }
    }

    pub fn from_name(s: &str) -> Option<Func> {
        Some(match s {
            "sqrt" => Func::Sqrt,
            "sin" => Func::Sin,
            "cos" => Func::Cos,
            "exp" => Func::Exp,
            _ => return None,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Expression tree over the variables `u`, `v`.
///
/// Constants parsed from source are non-negative; a leading minus is a
/// `Neg` node. Use [`Expr::num`] to build constants of either sign.
#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Const(f64),
    Var(Var),
    Neg(Box<Expr>),
    Func(Func, Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i32),
}

impl Expr {
    pub fn num(c: f64) -> Expr {
        if c.is_sign_negative() && c != 0.0 {
            Expr::Neg(Box::new(Expr::Const(-c)))
        } else {
            Expr::Const(c.abs())
        }
    }

    pub fn u() -> Expr {
        Expr::Var(Var::U)
    }

    pub fn v() -> Expr {
        Expr::Var(Var::V)
    }

    pub fn bin(op: BinOp, a: Expr, b: Expr) -> Expr {
        Expr::Binary(op, Box::new(a), Box::new(b))
    }

    pub fn add(a: Expr, b: Expr) -> Expr {
        Expr::bin(BinOp::Add, a, b)
    }

    pub fn sub(a: Expr, b: Expr) -> Expr {
        Expr::bin(BinOp::Sub, a, b)
    }

    pub fn mul(a: Expr, b: Expr) -> Expr {
        Expr::bin(BinOp::Mul, a, b)
    }

    pub fn div(a: Expr, b: Expr) -> Expr {
        Expr::bin(BinOp::Div, a, b)
    }

    pub fn pow(a: Expr, k: i32) -> Expr {
        Expr::Pow(Box::new(a), k)
    }

    pub fn func(f: Func, a: Expr) -> Expr {
        Expr::Func(f, Box::new(a))
    }

    /// Direct pointwise evaluation.
    pub fn eval(&self, u: f64, v: f64) -> Result<f64> {
        Ok(match self {
            Expr::Const(c) => *c,
            Expr::Var(Var::U) => u,
            Expr::Var(Var::V) => v,
            Expr::Neg(a) => -a.eval(u, v)?,
            Expr::Func(f, a) => {
                let x = a.eval(u, v)?;
                match f {
                    Func::Sqrt if x < 0.0 => {
                        return Err(Error::DomainError(format!("sqrt of {x} at ({u}, {v})")))
                    }
                    Func::Sqrt => x.sqrt(),
                    Func::Sin => x.sin(),
                    Func::Cos => x.cos(),
                    Func::Exp => x.exp(),
                }
            }
            Expr::Binary(op, a, b) => {
                let (x, y) = (a.eval(u, v)?, b.eval(u, v)?);
                match op {
                    BinOp::Add => x + y,
                    BinOp::Sub => x - y,
                    BinOp::Mul => x * y,
                    BinOp::Div if y == 0.0 => {
                        return Err(Error::DomainError(format!("division by zero at ({u}, {v})")))
                    }
                    BinOp::Div => x / y,
                }
            }
            Expr::Pow(a, k) => {
                let x = a.eval(u, v)?;
                if *k < 0 && x == 0.0 {
                    return Err(Error::DomainError(format!("negative power of zero at ({u}, {v})")));
                }
                x.powi(*k)
            }
        })
    }

    /// Taylor jet of the expression at `base`.
    pub fn jet(&self, base: [f64; 2], order: usize) -> Result<Jet2> {
        let at = |e: Error| match e {
            Error::DivisionBySingularJet => Error::DomainError(format!(
                "division by zero at ({}, {})",
                base[0], base[1]
            )),
            Error::DomainError(m) => Error::DomainError(format!("{m} at ({}, {})", base[0], base[1])),
            other => other,
        };
        Ok(match self {
            Expr::Const(c) => Jet2::constant(*c, base, order),
            Expr::Var(Var::U) => Jet2::var_u(base, order),
            Expr::Var(Var::V) => Jet2::var_v(base, order),
            Expr::Neg(a) => -a.jet(base, order)?,
            Expr::Func(f, a) => {
                let x = a.jet(base, order)?;
                match f {
                    Func::Sqrt => x.sqrt().map_err(at)?,
                    Func::Sin => x.sin(),
                    Func::Cos => x.cos(),
                    Func::Exp => x.exp(),
                }
            }
            Expr::Binary(op, a, b) => {
                let (x, y) = (a.jet(base, order)?, b.jet(base, order)?);
                match op {
                    BinOp::Add => &x + &y,
                    BinOp::Sub => &x - &y,
                    BinOp::Mul => &x * &y,
                    BinOp::Div => x.div(&y).map_err(at)?,
                }
            }
            Expr::Pow(a, k) => a.jet(base, order)?.powi(*k).map_err(at)?,
        })
    }

    /// Replaces `u` and `v` by the given expressions.
    pub fn substitute(&self, u: &Expr, v: &Expr) -> Expr {
        match self {
            Expr::Const(_) => self.clone(),
            Expr::Var(Var::U) => u.clone(),
            Expr::Var(Var::V) => v.clone(),
            Expr::Neg(a) => Expr::Neg(Box::new(a.substitute(u, v))),
            Expr::Func(f, a) => Expr::Func(*f, Box::new(a.substitute(u, v))),
            Expr::Binary(op, a, b) => Expr::bin(*op, a.substitute(u, v), b.substitute(u, v)),
            Expr::Pow(a, k) => Expr::pow(a.substitute(u, v), *k),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            Expr::Const(_) | Expr::Var(_) => 1,
            Expr::Neg(a) | Expr::Func(_, a) | Expr::Pow(a, _) => 1 + a.node_count(),
            Expr::Binary(_, a, b) => 1 + a.node_count() + b.node_count(),
        }
    }
}

/// Sum of `c_k · e_k`, dropping zero coefficients.
pub fn linear_combination(terms: &[(f64, &Expr)]) -> Expr {
    let mut acc: Option<Expr> = None;
    for &(c, e) in terms {
        if c == 0.0 {
            continue;
        }
        let term = Expr::mul(Expr::num(c.abs()), e.clone());
        acc = Some(match acc {
            None if c < 0.0 => Expr::Neg(Box::new(term)),
            None => term,
            Some(a) if c < 0.0 => Expr::sub(a, term),
            Some(a) => Expr::add(a, term),
        });
    }
    acc.unwrap_or(Expr::Const(0.0))
}
