//! Parser for group-algebra element expressions.
//!
//! The grammar is a sum of terms, each term a `*`-product of factors, each
//! factor an atom with an optional `^` power:
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ['^' integer]
//! atom   := integer | symbol | '(' expr ')'
//! ```
//!
//! Symbols are the group's generator names (`a`, `b`, `x1`, ... and, for
//! table groups, the element labels `g1`, `g2`, ...); `w` is reserved for the
//! residue of the field modulus in proper extensions. Integers embed as
//! scalars mod p. Whitespace is insignificant. Products multiply in written
//! order, which matters for nonabelian groups.

use crate::algebra::AlgebraElement;
use crate::error::Error;
use crate::field::Field;
use crate::group::Group;

pub(crate) fn parse_element(
    field: &Field,
    group: &Group,
    src: &str,
) -> Result<AlgebraElement, Error> {
    let mut parser = Parser {
        field,
        group,
        src: src.as_bytes(),
        pos: 0,
    };
    let value = parser.expr()?;
    parser.skip_ws();
    if parser.pos != parser.src.len() {
        return Err(parser.err("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    field: &'a Field,
    group: &'a Group,
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<AlgebraElement, Error> {
        let negate = self.eat(b'-');
        let mut acc = self.term()?;
        if negate {
            acc = acc.negated();
        }
        loop {
            if self.eat(b'+') {
                let t = self.term()?;
                acc = acc.checked_add(&t)?;
            } else if self.eat(b'-') {
                let t = self.term()?;
                acc = acc.checked_sub(&t)?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<AlgebraElement, Error> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let f = self.factor()?;
            acc = acc.checked_mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<AlgebraElement, Error> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let exp = self.integer()?;
            return Ok(element_pow(&base, exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<AlgebraElement, Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let k = self.integer()?;
                let one = AlgebraElement::one(self.field, self.group);
                one.scale(&self.field.scalar(k))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let sym = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                if sym == "w" {
                    let w = self.field.generator().map_err(|_| Error::Parse {
                        pos: start,
                        msg: "symbol 'w' is only defined over extension fields".to_string(),
                    })?;
                    let one = AlgebraElement::one(self.field, self.group);
                    return one.scale(&w);
                }
                match self.group.generator_index(sym) {
                    Some(i) => Ok(AlgebraElement::basis(self.field, self.group, i)),
                    None => Err(Error::Parse {
                        pos: start,
                        msg: format!("unknown symbol '{sym}'"),
                    }),
                }
            }
            Some(c) => Err(self.err(format!("unexpected character '{}'", c as char))),
            None => Err(self.err("unexpected end of expression")),
        }
    }

    fn integer(&mut self) -> Result<u64, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .parse::<u64>()
            .map_err(|_| Error::Parse {
                pos: start,
                msg: "integer too large".to_string(),
            })
    }
}

fn element_pow(base: &AlgebraElement, mut exp: u64) -> AlgebraElement {
    let mut acc = AlgebraElement::one(base.field(), base.group());
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc.checked_mul(&sq).expect("same ambient");
        }
        sq = sq.checked_mul(&sq).expect("same ambient");
        exp >>= 1;
    }
    acc
}
