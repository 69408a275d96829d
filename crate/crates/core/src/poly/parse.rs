//! Small expression reader for polynomial literals.
//!
//! Grammar: sums and differences of products; `*` or juxtaposition for
//! products, `/` only by constants, `^` with a non-negative integer exponent.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Poly, Var};
use crate::error::{Error, Result};
use crate::rational;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(String),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                i += 1;
            }
            out.push(Token::Num(chars[start..i].iter().collect()));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::Usage(format!("unexpected character {c:?} in {text:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Token::Num(_) | Token::Ident(_) | Token::Op('('))
        )
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                let d = d
                    .as_const()
                    .filter(|c| !num_traits::Zero::is_zero(*c))
                    .ok_or_else(|| Error::Usage("can only divide by a nonzero constant".into()))?;
                acc = acc.scale(&d.recip());
            } else if self.starts_atom() {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.tokens.get(self.pos) {
                Some(Token::Num(n)) => {
                    let k: u32 = n
                        .parse()
                        .map_err(|_| Error::Usage(format!("bad exponent {n}")))?;
                    self.pos += 1;
                    Ok(base.pow(k))
                }
                _ => Err(Error::Usage("exponent must be a non-negative integer".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        let tok = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Token::Num(n)) => Ok(Poly::constant(rational::parse(&n)?)),
            Some(Token::Ident(name)) => Var::from_name(&name)
                .map(Poly::var)
                .ok_or_else(|| Error::Usage(format!("unknown variable {name:?}"))),
            Some(Token::Op('(')) => {
                let inner = self.expr()?;
                if self.eat(')') {
                    Ok(inner)
                } else {
                    Err(Error::Usage("missing ')'".into()))
                }
            }
            other => Err(Error::Usage(format!("unexpected token {other:?}"))),
        }
    }
}

pub(super) fn parse(text: &str) -> Result<Poly> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
    };
    let p = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Usage(format!("trailing input in {text:?}")));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_garbage() {
        assert!(parse("E +").is_err());
        assert!(parse("q^2").is_err());
        assert!(parse("E/t").is_err());
        assert!(parse("(E").is_err());
        assert!(parse("E^t").is_err());
        assert!(parse("E $ 2").is_err());
    }

    #[test]
    fn juxtaposition_and_fractions() {
        assert_eq!(parse("3t E").unwrap(), parse("3*t*E").unwrap());
        assert_eq!(parse("1/2 E").unwrap(), parse("E/2").unwrap());
        assert_eq!(parse("-(E-1)^2").unwrap(), parse("-E^2 + 2E - 1").unwrap());
    }
}
