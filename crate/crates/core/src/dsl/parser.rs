use super::expr::{BinOp, Expr, Func, Var};
use super::lexer::{tokenize, Tok, Token};
use super::{DeclaredKind, Domain, SurfaceDef, DEFAULT_ORDER};
use crate::error::{Error, Pos, Result};

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T> {
        let t = self.peek();
        Err(Error::SyntaxError {
            pos: t.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: t.tok.describe(),
        })
    }

    fn expect(&mut self, tok: Tok, label: &str) -> Result<Token> {
        if self.peek().tok == tok {
            Ok(self.bump())
        } else {
            self.fail(&[label])
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek().tok {
                Tok::Plus => BinOp::Add,
                Tok::Minus => BinOp::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            lhs = Expr::bin(op, lhs, self.term()?);
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek().tok {
                Tok::Star => BinOp::Mul,
                Tok::Slash => BinOp::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            lhs = Expr::bin(op, lhs, self.unary()?);
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek().tok == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let k = self.exponent()?;
        if self.peek().tok == Tok::Caret {
            return self.fail(&["operator", "')'", "','"]);
        }
        Ok(Expr::pow(base, k))
    }

    fn exponent(&mut self) -> Result<i32> {
        let neg = if self.peek().tok == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let t = self.bump();
        match t.tok {
            Tok::Num { value, integer: true } if value <= i32::MAX as f64 => {
                let k = value as i32;
                Ok(if neg { -k } else { k })
            }
            Tok::Num { .. } | Tok::Ident(_) | Tok::LParen => {
                Err(Error::NonIntegerExponent { pos: t.pos })
            }
            other => Err(Error::SyntaxError {
                pos: t.pos,
                expected: vec!["integer exponent".into()],
                found: other.describe(),
            }),
        }
    }

    fn primary(&mut self) -> Result<Expr> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Num { value, .. } => {
                self.bump();
                Ok(Expr::Const(value))
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Tok::Ident(ref name) => {
                self.bump();
                match name.as_str() {
                    "u" => Ok(Expr::Var(Var::U)),
                    "v" => Ok(Expr::Var(Var::V)),
                    _ => match Func::from_name(name) {
                        Some(f) => {
                            self.expect(Tok::LParen, "'('")?;
                            let arg = self.expr()?;
                            self.expect(Tok::RParen, "')'")?;
                            Ok(Expr::Func(f, Box::new(arg)))
                        }
                        None => Err(Error::UnknownIdentifier {
                            pos: t.pos,
                            name: name.clone(),
                        }),
                    },
                }
            }
            _ => self.fail(&["expression"]),
        }
    }

    fn signed_number(&mut self) -> Result<f64> {
        let neg = if self.peek().tok == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.peek().tok {
            Tok::Num { value, .. } => {
                self.bump();
                Ok(if neg { -value } else { value })
            }
            _ => self.fail(&["number"]),
        }
    }
}

/// Parses a standalone expression in `u`, `v`.
pub fn parse_expr(src: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: tokenize(src, Pos { line: 1, col: 1 })?,
        at: 0,
    };
    let e = p.expr()?;
    p.expect(Tok::Eof, "end of input")?;
    Ok(e)
}

fn parse_body(src: &str, start: Pos) -> Result<[Expr; 3]> {
    let mut p = Parser {
        toks: tokenize(src, start)?,
        at: 0,
    };
    p.expect(Tok::Ident("f".into()), "'f'")?;
    p.expect(Tok::Eq, "'='")?;
    let open = p.expect(Tok::LParen, "'('")?;
    let mut comps = vec![p.expr()?];
    loop {
        match p.peek().tok {
            Tok::Comma => {
                p.bump();
                comps.push(p.expr()?);
            }
            Tok::RParen => {
                p.bump();
                break;
            }
            _ => return p.fail(&["','", "')'"]),
        }
    }
    p.expect(Tok::Eof, "end of input")?;
    let n = comps.len();
    comps.try_into().map_err(|_| Error::SyntaxError {
        pos: open.pos,
        expected: vec!["three components".into()],
        found: format!("{n} components"),
    })
}

fn parse_domain(text: &str, start: Pos) -> Result<Domain> {
    let mut p = Parser {
        toks: tokenize(text, start)?,
        at: 0,
    };
    let interval = |p: &mut Parser| -> Result<[f64; 2]> {
        p.expect(Tok::LBracket, "'['")?;
        let a = p.signed_number()?;
        p.expect(Tok::Comma, "','")?;
        let b = p.signed_number()?;
        p.expect(Tok::RBracket, "']'")?;
        Ok([a, b])
    };
    let u = interval(&mut p)?;
    p.expect(Tok::Ident("x".into()), "'x'")?;
    let v = interval(&mut p)?;
    p.expect(Tok::Eof, "end of line")?;
    if !(u[0] < u[1] && v[0] < v[1]) {
        return Err(Error::InvalidHeader {
            pos: start,
            msg: "domain must be a non-degenerate rectangle".into(),
        });
    }
    Ok(Domain { u, v })
}

pub fn parse_surface(text: &str) -> Result<SurfaceDef> {
    let mut name = None;
    let mut kind = DeclaredKind::Unknown;
    let mut domain = Domain::default();
    let mut order = DEFAULT_ORDER;
    let mut offset = 0;
    for (n, raw) in text.split_inclusive('\n').enumerate() {
        let line_no = n + 1;
        let line = raw.trim_end_matches(['\n', '\r']);
        let trimmed = line.trim_start();
        let indent = line.len() - trimmed.len();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            offset += raw.len();
            continue;
        }
        let key_len = trimmed
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(trimmed.len());
        let key = &trimmed[..key_len];
        let rest = trimmed[key_len..].trim_start();
        let key_pos = Pos {
            line: line_no,
            col: indent + 1,
        };
        if key == "f" {
            let comps = parse_body(&text[offset..], key_pos)?;
            return Ok(SurfaceDef {
                name: name.unwrap_or_else(|| "unnamed".into()),
                components: comps,
                declared_kind: kind,
                domain,
                order,
            });
        }
        let Some(value) = rest.strip_prefix('=') else {
            return Err(Error::SyntaxError {
                pos: key_pos,
                expected: vec!["header".into(), "'f ='".into()],
                found: format!("'{}'", trimmed),
            });
        };
        let value_col = indent + 1 + (trimmed.len() - value.len());
        let value_pos = Pos {
            line: line_no,
            col: value_col + (value.len() - value.trim_start().len()),
        };
        let value = value.trim();
        match key {
            "name" => name = Some(value.to_string()),
            "kind" => {
                kind = DeclaredKind::from_name(value).ok_or_else(|| Error::InvalidHeader {
                    pos: value_pos,
                    msg: format!("unknown kind '{value}' (first|second|regular|unknown)"),
                })?
            }
            "domain" => domain = parse_domain(value, value_pos)?,
            "order" => {
                order = value
                    .parse::<usize>()
                    .ok()
                    .filter(|&n| n >= 4)
                    .ok_or_else(|| Error::InvalidHeader {
                        pos: value_pos,
                        msg: format!("order must be an integer >= 4, got '{value}'"),
                    })?
            }
            other => {
                return Err(Error::InvalidHeader {
                    pos: key_pos,
                    msg: format!("unknown header '{other}'"),
                })
            }
        }
        offset += raw.len();
    }
    let end = Pos {
        line: text.split('\n').count(),
        col: text.rsplit('\n').next().map_or(0, |l| l.len()) + 1,
    };
    Err(Error::SyntaxError {
        pos: end,
        expected: vec!["'f ='".into()],
        found: "end of input".into(),
    })
}
