//! Recursive-descent parser for the polynomial text form.
//!
//! Grammar (whitespace insignificant, `*` required for products, `^` takes a
//! nonnegative integer exponent, unary minus allowed):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := primary ('^' nat)*
//! primary := rational | var | '(' expr ')'
//! rational := int ('/' int)?
//! ```

use super::{PolyError, Polynomial, Ring};
use crate::exact::Rat;
use num_bigint::BigInt;


#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn tokens(mut self) -> Result<Vec<(usize, Tok)>, PolyError> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let start = self.pos;
            let c = self.src[self.pos];
            match c {
                b' ' | b'\t' | b'\r' | b'\n' => {
                    self.pos += 1;
                }
                b'+' => {
                    out.push((start, Tok::Plus));
                    self.pos += 1;
                }
                b'-' => {
                    out.push((start, Tok::Minus));
                    self.pos += 1;
                }
                b'*' => {
                    out.push((start, Tok::Star));
                    self.pos += 1;
                }
                b'^' => {
                    out.push((start, Tok::Caret));
                    self.pos += 1;
                }
                b'/' => {
                    out.push((start, Tok::Slash));
                    self.pos += 1;
                }
                b'(' => {
                    out.push((start, Tok::LParen));
                    self.pos += 1;
                }
                b')' => {
                    out.push((start, Tok::RParen));
                    self.pos += 1;
                }
                b'0'..=b'9' => {
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    let n: BigInt = text.parse().unwrap();
                    out.push((start, Tok::Int(n)));
                }
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    while self.pos < self.src.len()
                        && (self.src[self.pos].is_ascii_alphanumeric()
                            || self.src[self.pos] == b'_')
                    {
                        self.pos += 1;
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    out.push((start, Tok::Ident(text.to_string())));
                }
                other => {
                    return Err(PolyError::Syntax {
                        pos: start,
                        message: format!("unexpected character `{}`", other as char),
                    });
                }
            }
        }
        Ok(out)
    }
}

struct Parser<'r> {
    toks: Vec<(usize, Tok)>,
    i: usize,
    ring: &'r Ring,
    end: usize,
}

impl<'r> Parser<'r> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.i).map(|(_, t)| t.clone());
        if t.is_some() {
            self.i += 1;
        }
        t
    }

    fn err(&self, message: impl Into<String>) -> PolyError {
        PolyError::Syntax {
            pos: self.pos(),
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.checked_add(&t).expect("same ring");
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.checked_sub(&t).expect("same ring");
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.bump();
            let f = self.factor()?;
            acc = acc.checked_mul(&f).expect("same ring");
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        let mut base = self.primary()?;
        while self.peek() == Some(&Tok::Caret) {
            self.bump();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let exp =
                        u32::try_from(&n).map_err(|_| self.err("exponent out of range"))?;
                    base = base.pow(exp);
                }
                _ => return Err(self.err("expected a nonnegative integer exponent after `^`")),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Polynomial, PolyError> {
        match self.bump() {
            Some(Tok::Int(n)) => {
                // Maybe a fraction: int '/' int.
                if self.peek() == Some(&Tok::Slash) {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Int(d)) => {
                            if d == BigInt::from(0) {
                                return Err(self.err("zero denominator"));
                            }
                            let c = Rat::from_bigint(n)
                                .checked_div(&Rat::from_bigint(d))
                                .expect("nonzero denominator");
                            Ok(Polynomial::constant(self.ring, c))
                        }
                        _ => Err(self.err("expected an integer denominator after `/`")),
                    }
                } else {
                    Ok(Polynomial::constant(self.ring, Rat::from_bigint(n)))
                }
            }
            Some(Tok::Ident(name)) => {
                Polynomial::variable(self.ring, &name).map_err(|_| PolyError::UnknownVariable {
                    name,
                })
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(self.err("expected `)`")),
                }
            }
            Some(tok) => Err(PolyError::Syntax {
                pos: self.toks[self.i - 1].0,
                message: format!("unexpected token {tok:?}"),
            }),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses the text form into a canonical polynomial of `ring`.
pub fn parse_poly(text: &str, ring: &Ring) -> Result<Polynomial, PolyError> {
    let toks = Lexer::new(text).tokens()?;
    if toks.is_empty() {
        return Err(PolyError::Syntax {
            pos: 0,
            message: "empty input".into(),
        });
    }
    let mut parser = Parser {
        toks,
        i: 0,
        ring,
        end: text.len(),
    };
    let poly = parser.expr()?;
    if parser.i != parser.toks.len() {
        return Err(parser.err("trailing input"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;

    fn ring() -> Ring {
        PolyRing::xyzw()
    }

    #[test]
    fn parses_the_stated_examples() {
        let r = ring();
        let f = parse_poly("X*Z - Y^2", &r).unwrap();
        assert_eq!(f.to_string(), "-Y^2 + X*Z");
        assert_eq!(f.leading().unwrap().mono.exps(), &[0, 2, 0, 0]);

        let sq = parse_poly("(X+Y)^2", &r).unwrap();
        assert_eq!(sq.to_string(), "X^2 + 2*X*Y + Y^2");

        let c = parse_poly("3/2*W", &r).unwrap();
        assert_eq!(c.terms().len(), 1);
        assert_eq!(c.terms()[0].coeff, Rat::new(3, 2));
    }

    #[test]
    fn parse_after_print_is_identity() {
        let r = ring();
        for s in [
            "X^2 + 2*X*Y + Y^2",
            "-Y^2 + X*Z",
            "3/2*W - 1",
            "0",
            "X^3 - 3*X^2*Y + 3*X*Y^2 - Y^3",
        ] {
            let f = parse_poly(s, &r).unwrap();
            let back = parse_poly(&f.to_string(), &r).unwrap();
            assert_eq!(f, back, "round trip of {s}");
        }
    }

    #[test]
    fn errors_carry_positions() {
        let r = ring();
        match parse_poly("X + $", &r) {
            Err(PolyError::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_poly("X + Q", &r) {
            Err(PolyError::UnknownVariable { name }) => assert_eq!(name, "Q"),
            other => panic!("expected unknown variable, got {other:?}"),
        }
        assert!(parse_poly("X ^ -1", &r).is_err());
        assert!(parse_poly("X Y", &r).is_err());
        assert!(parse_poly("(X + Y", &r).is_err());
        assert!(parse_poly("1/0", &r).is_err());
        assert!(parse_poly("", &r).is_err());
    }

    #[test]
    fn unary_minus_and_implicit_one() {
        let r = ring();
        assert_eq!(
            parse_poly("-X + 3", &r).unwrap().to_string(),
            "-X + 3"
        );
        assert_eq!(parse_poly("-(X - Y)", &r).unwrap().to_string(), "-X + Y");
    }
}
