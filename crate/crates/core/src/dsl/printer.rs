use std::fmt::Write;

use super::expr::{BinOp, Expr, Var};
use super::SurfaceDef;

const ADD: u8 = 1;
const MUL: u8 = 2;
const NEG: u8 = 3;
const POW: u8 = 4;
const ATOM: u8 = 5;

fn write_expr(out: &mut String, e: &Expr, min: u8) {
    let (prec, body) = match e {
        Expr::Const(c) if *c < 0.0 => (ATOM, format!("(-{})", -c)),
        Expr::Const(c) => (ATOM, format!("{c}")),
        Expr::Var(Var::U) => (ATOM, "u".into()),
        Expr::Var(Var::V) => (ATOM, "v".into()),
        Expr::Func(f, a) => {
            let mut s = format!("{}(", f.name());
            write_expr(&mut s, a, 0);
            s.push(')');
            (ATOM, s)
        }
        Expr::Neg(a) => {
            let mut s = String::from("-");
            write_expr(&mut s, a, NEG);
            (NEG, s)
        }
        Expr::Pow(a, k) => {
            let mut s = String::new();
            write_expr(&mut s, a, ATOM);
            write!(s, "^{k}").unwrap();
            (POW, s)
        }
        Expr::Binary(op, a, b) => {
            let (p, sym) = match op {
                BinOp::Add => (ADD, " + "),
                BinOp::Sub => (ADD, " - "),
                BinOp::Mul => (MUL, "*"),
                BinOp::Div => (MUL, "/"),
            };
            let mut s = String::new();
            write_expr(&mut s, a, p);
            s.push_str(sym);
            write_expr(&mut s, b, p + 1);
            (p, s)
        }
    };
    if prec < min {
        out.push('(');
        out.push_str(&body);
        out.push(')');
    } else {
        out.push_str(&body);
    }
}

/// Renders an expression with the fewest parentheses that re-parse to the same tree.
pub fn print_expr(e: &Expr) -> String {
    let mut s = String::new();
    write_expr(&mut s, e, 0);
    s
}

pub fn print_surface(def: &SurfaceDef) -> String {
    let [x, y, z] = &def.components;
    format!(
        "name = {}\nkind = {}\ndomain = [{},{}]x[{},{}]\norder = {}\nf = ({}, {}, {})\n",
        def.name,
        def.declared_kind.name(),
        def.domain.u[0],
        def.domain.u[1],
        def.domain.v[0],
        def.domain.v[1],
        def.order,
        print_expr(x),
        print_expr(y),
        print_expr(z)
    )
}
