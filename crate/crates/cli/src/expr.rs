//! Expressions accepted by `dgla bch`.
//!
//! ```text
//! expr  := term (("+" | "-") term)*
//! term  := "-" term | rational ["*"] atom | atom
//! atom  := name | "bch(" expr ("," expr)* ")" | "(" expr ")"
//! ```

use std::sync::Arc;

use dgla_core::calculus::bch;
use dgla_core::lie::{gen, AlgebraContext, AlgebraElement};
use dgla_core::scalar::{int, parse_loose};
use dgla_core::Rational;

#[derive(Debug, PartialEq)]
pub struct ExprError {
    pub position: usize,
    pub message: String,
}

impl std::fmt::Display for ExprError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "at column {}: {}", self.position + 1, self.message)
    }
}

type Parsed<T> = Result<T, ExprError>;

pub fn parse(ctx: &Arc<AlgebraContext>, text: &str) -> Parsed<AlgebraElement> {
    let mut p = Parser { ctx, src: text.as_bytes(), pos: 0 };
    let x = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(x)
}

struct Parser<'a> {
    ctx: &'a Arc<AlgebraContext>,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ExprError {
        ExprError { position: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Parsed<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", c as char)))
        }
    }

    fn expr(&mut self) -> Parsed<AlgebraElement> {
        let mut acc = self.term()?;
        loop {
            let sign = match self.peek() {
                Some(b'+') => 1,
                Some(b'-') => -1,
                _ => return Ok(acc),
            };
            self.pos += 1;
            let at = self.pos;
            let t = self.term()?;
            acc = AlgebraElement::combine(&int(1), &acc, &int(sign), &t)
                .map_err(|e| ExprError { position: at, message: e.to_string() })?;
        }
    }

    fn term(&mut self) -> Parsed<AlgebraElement> {
        if self.eat(b'-') {
            return Ok(-self.term()?);
        }
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = self.rational()?;
            self.eat(b'*');
            return Ok(self.atom()?.scale(&c));
        }
        self.atom()
    }

    fn rational(&mut self) -> Parsed<Rational> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit() || *c == b'/') {
            self.pos += 1;
        }
        let lit = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        parse_loose(lit).map_err(|_| ExprError { position: start, message: format!("bad rational `{lit}`") })
    }

    fn ident(&mut self) -> Parsed<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a generator, `bch(` or `(`"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn atom(&mut self) -> Parsed<AlgebraElement> {
        if self.eat(b'(') {
            let x = self.expr()?;
            self.expect(b')')?;
            return Ok(x);
        }
        let start = self.pos;
        let name = self.ident()?.to_owned();
        if name == "bch" && self.eat(b'(') {
            let mut args = vec![self.expr()?];
            while self.eat(b',') {
                args.push(self.expr()?);
            }
            self.expect(b')')?;
            return bch(self.ctx, &args).map_err(|e| ExprError { position: start, message: e.to_string() });
        }
        gen(self.ctx, &name)
            .map_err(|_| ExprError { position: start, message: format!("unknown generator `{name}`") })
    }
}
