//! Whitespace-insensitive character cursor shared by the text parsers.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;

pub(crate) struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    i: usize,
    len: usize,
    _src: &'a str,
}

impl<'a> Cursor<'a> {
    pub fn new(src: &'a str) -> Self {
        let chars: Vec<(usize, char)> =
            src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Cursor { chars, i: 0, len: src.len(), _src: src }
    }

    pub fn pos(&self) -> usize {
        self.chars.get(self.i).map(|c| c.0).unwrap_or(self.len)
    }

    pub fn peek(&self) -> Option<char> {
        self.chars.get(self.i).map(|c| c.1)
    }

    pub fn at_end(&self) -> bool {
        self.i >= self.chars.len()
    }

    pub fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.i += 1;
        }
        c
    }

    pub fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    pub fn eat_str(&mut self, s: &str) -> bool {
        let n = s.chars().count();
        let ok = self.chars.len() >= self.i + n
            && self.chars[self.i..self.i + n].iter().map(|c| c.1).eq(s.chars());
        if ok {
            self.i += n;
        }
        ok
    }

    pub fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    pub fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos(), msg: msg.into() }
    }

    pub fn digits(&mut self) -> Option<String> {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            s.push(c);
            self.i += 1;
        }
        (!s.is_empty()).then_some(s)
    }

    pub fn uint(&mut self) -> Result<u64> {
        let d = self.digits().ok_or_else(|| self.err("expected a number"))?;
        d.parse().map_err(|_| self.err("number out of range"))
    }

    pub fn int(&mut self) -> Result<i64> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let v = self.uint()? as i64;
        Ok(if neg { -v } else { v })
    }

    /// `a` or `a/b`, unsigned.
    pub fn rational(&mut self) -> Result<BigRational> {
        let n = self.digits().ok_or_else(|| self.err("expected a rational"))?;
        let n: BigInt = n.parse().map_err(|_| self.err("bad integer"))?;
        if self.eat('/') {
            let d = self.digits().ok_or_else(|| self.err("expected a denominator"))?;
            let d: BigInt = d.parse().map_err(|_| self.err("bad integer"))?;
            if d == BigInt::from(0) {
                return Err(self.err("zero denominator"));
            }
            Ok(BigRational::new(n, d))
        } else {
            Ok(BigRational::from_integer(n))
        }
    }

    pub fn finish(&self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.err("unexpected trailing input"))
        }
    }
}
