//! Text form of polynomials.
//!
//! The accepted syntax is ordinary infix notation over the context's
//! variables: `+`, `-`, `*`, `^`, parentheses, integer and rational
//! (`p/q`) literals.  Multiplication requires an explicit `*`.  Exponents
//! are nonnegative integer literals or parenthesized constant integer
//! expressions such as `x^(k+1)` after `k` has been substituted by a
//! number.  A leading `-` negates the whole first term.

use super::{Poly, VarContext};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// Parse `input` as a polynomial over `ctx`.
pub fn parse_poly(ctx: &VarContext, input: &str) -> Result<Poly> {
    let tokens = lex(input)?;
    let mut p = Parser { ctx, tokens, pos: 0 };
    let poly = p.expr()?;
    match p.peek() {
        None => Ok(poly),
        Some(t) => Err(syntax(t.at, "unexpected trailing input")),
    }
}

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

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    at: usize,
}

fn syntax(position: usize, message: &str) -> Error {
    Error::Syntax { position, message: message.to_string() }
}

fn lex(input: &str) -> Result<Vec<Token>> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let at = i;
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
            }
            b'+' => {
                out.push(Token { tok: Tok::Plus, at });
                i += 1;
            }
            b'-' => {
                out.push(Token { tok: Tok::Minus, at });
                i += 1;
            }
            b'*' => {
                out.push(Token { tok: Tok::Star, at });
                i += 1;
            }
            b'^' => {
                out.push(Token { tok: Tok::Caret, at });
                i += 1;
            }
            b'/' => {
                out.push(Token { tok: Tok::Slash, at });
                i += 1;
            }
            b'(' => {
                out.push(Token { tok: Tok::LParen, at });
                i += 1;
            }
            b')' => {
                out.push(Token { tok: Tok::RParen, at });
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &input[start..i];
                let n: BigInt = text.parse().expect("digit run parses");
                out.push(Token { tok: Tok::Int(n), at });
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push(Token { tok: Tok::Ident(input[start..i].to_string()), at });
            }
            _ => {
                return Err(syntax(at, &format!("unexpected character `{}`", &input[at..].chars().next().unwrap())));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ctx: &'a VarContext,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn end_position(&self) -> usize {
        self.tokens.last().map(|t| t.at + 1).unwrap_or(0)
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        match self.next() {
            Some(t) if t.tok == want => Ok(()),
            Some(t) => Err(syntax(t.at, &format!("expected {what}"))),
            None => Err(syntax(self.end_position(), &format!("expected {what}, found end of input"))),
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut negate_first = false;
        if let Some(t) = self.peek() {
            if t.tok == Tok::Minus {
                self.pos += 1;
                negate_first = true;
            } else if t.tok == Tok::Plus {
                self.pos += 1;
            }
        }
        let mut acc = self.term()?;
        if negate_first {
            acc = acc.neg();
        }
        loop {
            match self.peek().map(|t| t.tok.clone()) {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while let Some(t) = self.peek() {
            if t.tok == Tok::Star {
                self.pos += 1;
                let f = self.factor()?;
                acc = acc.mul(&f);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if let Some(t) = self.peek() {
            if t.tok == Tok::Caret {
                self.pos += 1;
                let e = self.exponent()?;
                return Ok(base.pow(e));
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.next() {
            Some(Token { tok: Tok::Int(n), .. }) => {
                // optional `/ int` makes a rational literal
                if let (Some(a), Some(b)) = (self.tokens.get(self.pos), self.tokens.get(self.pos + 1)) {
                    if a.tok == Tok::Slash {
                        if let Tok::Int(d) = &b.tok {
                            if d.is_zero() {
                                return Err(syntax(b.at, "division by zero in rational literal"));
                            }
                            let d = d.clone();
                            self.pos += 2;
                            return Ok(Poly::constant(
                                self.ctx,
                                BigRational::new(n, d),
                            ));
                        }
                        return Err(syntax(a.at, "expected integer denominator after `/`"));
                    }
                }
                Ok(Poly::constant(self.ctx, BigRational::from(n)))
            }
            Some(Token { tok: Tok::Ident(name), at }) => match self.ctx.index_of(&name) {
                Some(i) => Ok(Poly::var(self.ctx, i)),
                None => {
                    let _ = at;
                    Err(Error::UnknownVariable(name))
                }
            },
            Some(Token { tok: Tok::LParen, .. }) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "closing parenthesis")?;
                Ok(inner)
            }
            Some(t) => Err(syntax(t.at, "expected a number, variable, or parenthesized expression")),
            None => Err(syntax(self.end_position(), "unexpected end of input")),
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        let value = match self.next() {
            Some(Token { tok: Tok::Int(n), at }) => (n, at),
            Some(Token { tok: Tok::LParen, at }) => {
                let v = self.int_expr()?;
                self.expect(Tok::RParen, "closing parenthesis")?;
                (v, at)
            }
            Some(t) => return Err(syntax(t.at, "expected an integer exponent")),
            None => return Err(syntax(self.end_position(), "expected an exponent, found end of input")),
        };
        let (n, at) = value;
        if n.sign() == num_bigint::Sign::Minus {
            return Err(syntax(at, "negative exponent"));
        }
        n.to_u32().ok_or_else(|| syntax(at, "exponent too large"))
    }

    /// Constant integer expression inside `^( ... )`: `+ - *` and nesting.
    fn int_expr(&mut self) -> Result<BigInt> {
        let mut negate = false;
        if let Some(t) = self.peek() {
            if t.tok == Tok::Minus {
                self.pos += 1;
                negate = true;
            }
        }
        let mut acc = self.int_term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek().map(|t| t.tok.clone()) {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc += self.int_term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc -= self.int_term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn int_term(&mut self) -> Result<BigInt> {
        let mut acc = self.int_atom()?;
        while let Some(t) = self.peek() {
            if t.tok == Tok::Star {
                self.pos += 1;
                acc *= self.int_atom()?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn int_atom(&mut self) -> Result<BigInt> {
        match self.next() {
            Some(Token { tok: Tok::Int(n), .. }) => Ok(n),
            Some(Token { tok: Tok::LParen, .. }) => {
                let v = self.int_expr()?;
                self.expect(Tok::RParen, "closing parenthesis")?;
                Ok(v)
            }
            Some(Token { tok: Tok::Ident(_), at }) => {
                Err(syntax(at, "exponent must be a constant integer expression"))
            }
            Some(t) => Err(syntax(t.at, "expected an integer")),
            None => Err(syntax(self.end_position(), "unexpected end of input in exponent")),
        }
    }
}
