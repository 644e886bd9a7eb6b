//! A small expression language for polynomials in named variables:
//! `+`, `-`, `*`, `^`, parentheses, unary minus, and integer or rational
//! literals such as `3` and `2/5`. Multiplication is always explicit
//! (`2*X*Y^2`, not `2XY^2`). Expressions are parsed into polynomials with
//! rational coefficients; reduction to a finite field happens later.
//!
//! # Example
//! ```
//! use pencilbox::expr::parse_poly;
//! let p = parse_poly("Y^2*Z - X^3 - 2*X*Z^2", &["X", "Y", "Z"]).unwrap();
//! assert_eq!(p.homogeneous_degree(), Some(3));
//! ```

use num::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Rational;
use crate::poly::MultiPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Number(BigRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = input.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                tokens.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                tokens.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                tokens.push((i, Token::Star));
                i += 1;
            }
            '^' => {
                tokens.push((i, Token::Caret));
                i += 1;
            }
            '(' => {
                tokens.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((i, Token::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: num::BigInt = input[start..i].parse().expect("digits");
                // optional /denominator
                let denom = if i < bytes.len() && bytes[i] == b'/' {
                    let dstart = i + 1;
                    let mut j = dstart;
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    if j == dstart {
                        return Err(Error::Parse {
                            offset: i,
                            msg: "expected digits after '/'".to_string(),
                        });
                    }
                    let d: num::BigInt = input[dstart..j].parse().expect("digits");
                    if d.is_zero() {
                        return Err(Error::Parse {
                            offset: dstart,
                            msg: "zero denominator".to_string(),
                        });
                    }
                    i = j;
                    d
                } else {
                    num::BigInt::one()
                };
                tokens.push((start, Token::Number(BigRational::new(numer, denom))));
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                tokens.push((start, Token::Ident(input[start..i].to_string())));
            }
            _ => {
                return Err(Error::Parse {
                    offset: i,
                    msg: format!("unexpected character `{c}`"),
                });
            }
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    pos: usize,
    vars: &'a [&'a str],
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t);
        self.pos += 1;
        t
    }

    // expr := term (('+' | '-') term)*
    fn expr(&mut self) -> Result<MultiPoly<Rational>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc.add_ref(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc.sub_ref(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := factor ('*' factor)*
    fn term(&mut self) -> Result<MultiPoly<Rational>> {
        let mut acc = self.factor()?;
        while let Some(Token::Star) = self.peek() {
            self.pos += 1;
            acc = acc.mul_ref(&self.factor()?);
        }
        Ok(acc)
    }

    // factor := '-' factor | base ('^' exponent)?
    fn factor(&mut self) -> Result<MultiPoly<Rational>> {
        if let Some(Token::Minus) = self.peek() {
            self.pos += 1;
            return Ok(self.factor()?.neg_ref());
        }
        let base = self.base()?;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            let off = self.offset();
            match self.bump() {
                Some(Token::Number(r)) if r.is_integer() => {
                    let e: u32 = r.to_integer().try_into().map_err(|_| Error::Parse {
                        offset: off,
                        msg: "exponent too large".to_string(),
                    })?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::Parse {
                    offset: off,
                    msg: "expected a nonnegative integer exponent".to_string(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    // base := number | variable | '(' expr ')'
    fn base(&mut self) -> Result<MultiPoly<Rational>> {
        let off = self.offset();
        match self.bump().cloned() {
            Some(Token::Number(r)) => Ok(MultiPoly::constant(self.vars.len(), r)),
            Some(Token::Ident(name)) => match self.vars.iter().position(|v| *v == name) {
                Some(i) => Ok(MultiPoly::var(self.vars.len(), i)),
                None => Err(Error::Parse {
                    offset: off,
                    msg: format!("unknown variable `{name}`"),
                }),
            },
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(Error::Parse {
                        offset: off,
                        msg: "unclosed parenthesis".to_string(),
                    }),
                }
            }
            Some(t) => Err(Error::Parse {
                offset: off,
                msg: format!("unexpected token {t:?}"),
            }),
            None => Err(Error::Parse {
                offset: off,
                msg: "unexpected end of input".to_string(),
            }),
        }
    }
}

/// Parses an expression into a polynomial with rational coefficients in
/// the given variables. Errors carry the byte offset of the offending
/// token.
pub fn parse_poly(input: &str, vars: &[&str]) -> Result<MultiPoly<Rational>> {
    let tokens = tokenize(input)?;
    let mut p = Parser {
        tokens: &tokens,
        pos: 0,
        vars,
        end: input.len(),
    };
    let poly = p.expr()?;
    if p.pos < tokens.len() {
        return Err(Error::Parse {
            offset: p.offset(),
            msg: "trailing input".to_string(),
        });
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_standard_forms() {
        let vars = ["X", "Y", "Z"];
        let p = parse_poly("Y^2*Z - X^3", &vars).unwrap();
        assert_eq!(p.render(&vars), "-X^3 + Y^2*Z");
        let q = parse_poly("(X + Y)^2 - 2*X*Y", &vars).unwrap();
        assert_eq!(q.render(&vars), "X^2 + Y^2");
    }

    #[test]
    fn parses_rational_coefficients() {
        let vars = ["X", "Y"];
        let p = parse_poly("1/2*X^2 - 3/4*Y^2", &vars).unwrap();
        assert_eq!(p.render(&vars), "1/2*X^2 - 3/4*Y^2");
    }

    #[test]
    fn unary_minus_and_nesting() {
        let vars = ["X", "Y"];
        let p = parse_poly("-(X - Y)^3", &vars).unwrap();
        let q = parse_poly("(Y - X)^3", &vars).unwrap();
        assert_eq!(p, q);
        let r = parse_poly("--X", &vars).unwrap();
        assert_eq!(r.render(&vars), "X");
    }

    #[test]
    fn rejects_malformed_input() {
        let vars = ["X", "Y"];
        assert!(matches!(
            parse_poly("X + W", &vars),
            Err(Error::Parse { offset: 4, .. })
        ));
        assert!(parse_poly("X +", &vars).is_err());
        assert!(parse_poly("(X", &vars).is_err());
        assert!(parse_poly("X^Y", &vars).is_err());
        assert!(parse_poly("X Y", &vars).is_err());
        assert!(parse_poly("2/0", &vars).is_err());
        assert!(parse_poly("X?", &vars).is_err());
    }

    #[test]
    fn exponent_binds_tighter_than_minus() {
        let vars = ["X"];
        // -X^2 is -(X^2)
        let p = parse_poly("-X^2", &vars).unwrap();
        assert_eq!(p.render(&vars), "-X^2");
    }
}
