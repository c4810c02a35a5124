//! Text syntax for words.
//!
//! Free form: juxtaposition or `*` multiplies, `^n` (possibly negative)
//! powers, `[a, b, c]` is a left-normed commutator, parentheses group.
//! Variables are identifiers, numbered by first appearance. The family
//! literals `short(i,k)` and `long(i)` need the prime from context.

use super::word::{Term, Word};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: Vec<String>,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn starts_atom(c: u8) -> bool {
        c.is_ascii_alphabetic() || c == b'_' || c == b'[' || c == b'('
    }

    fn product(&mut self) -> Result<Term> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    factors.push(self.factor()?);
                }
                Some(c) if Self::starts_atom(c) => factors.push(self.factor()?),
                _ => break,
            }
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            Term::Prod(factors)
        })
    }

    fn factor(&mut self) -> Result<Term> {
        let mut t = self.atom()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.exponent()?;
            t = Term::Pow(Box::new(t), e);
        }
        Ok(t)
    }

    fn exponent(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let mut neg = false;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            neg = self.src[self.pos] == b'-';
            self.pos += 1;
        }
        let digits_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if digits_start == self.pos {
            return self.err("expected an integer exponent");
        }
        let text = std::str::from_utf8(&self.src[digits_start..self.pos]).expect("ascii digits");
        let v: i64 = match text.parse() {
            Ok(v) => v,
            Err(_) => {
                self.pos = start;
                return self.err("exponent out of range");
            }
        };
        if v == 0 {
            self.pos = start;
            return self.err("zero exponent");
        }
        Ok(if neg { -v } else { v })
    }

    fn atom(&mut self) -> Result<Term> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let t = self.product()?;
                self.expect(b')')?;
                Ok(t)
            }
            Some(b'[') => {
                self.pos += 1;
                let mut entries = vec![self.product()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    entries.push(self.product()?);
                }
                self.expect(b']')?;
                Ok(Term::Comm(entries))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let idx = match self.names.iter().position(|n| n == name) {
                    Some(i) => i,
                    None => {
                        self.names.push(name.to_string());
                        self.names.len() - 1
                    }
                };
                Ok(Term::Var(idx))
            }
            Some(_) => self.err("expected a variable, '[' or '('"),
            None => self.err("unexpected end of word"),
        }
    }
}

impl Word {
    /// Parses a free-form word such as `x^9 [y1,y2,y3]`.
    pub fn parse(text: &str) -> Result<Word> {
        let mut p = Parser {
            src: text.as_bytes(),
            pos: 0,
            names: Vec::new(),
        };
        let term = p.product()?;
        if p.peek().is_some() {
            return p.err("unexpected trailing input");
        }
        Word::new(p.names, term)
    }

    /// Parses `short(i,k)`, `long(i)` or a free-form word; `p` fixes the
    /// family literals.
    pub fn parse_with_prime(text: &str, p: u32) -> Result<Word> {
        let t = text.trim();
        let args = |prefix: &str| -> Option<Vec<&str>> {
            let inner = t.strip_prefix(prefix)?.trim_start().strip_prefix('(')?.strip_suffix(')')?;
            Some(inner.split(',').map(str::trim).collect())
        };
        let num = |s: &str| -> Result<u32> {
            s.parse().map_err(|_| Error::Parse {
                pos: text.find(s).unwrap_or(0),
                msg: format!("expected a nonnegative integer, got {s:?}"),
            })
        };
        if let Some(a) = args("short") {
            if a.len() != 2 {
                return Err(Error::Parse {
                    pos: 0,
                    msg: "short takes two arguments (i,k)".into(),
                });
            }
            return Word::short(p, num(a[0])?, num(a[1])?);
        }
        if let Some(a) = args("long") {
            if a.len() != 1 {
                return Err(Error::Parse {
                    pos: 0,
                    msg: "long takes one argument (i)".into(),
                });
            }
            return Word::long(p, num(a[0])?);
        }
        Word::parse(text)
    }
}
