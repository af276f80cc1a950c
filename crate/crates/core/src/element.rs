//! Rational linear combinations of words.

use crate::arith::{fmt_lincomb, q, Q};
use crate::cursor::Cursor;
use crate::error::{Error, Result};
use crate::word::{parse_word, starts_factor, Symbol, Word};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Word, Q>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Word::empty())
    }

    pub fn scalar(c: Q) -> Self {
        let mut z = Self::zero();
        z.add_term(Word::empty(), c);
        z
    }

    pub fn word(w: Word) -> Self {
        let mut z = Self::zero();
        z.add_term(w, Q::one());
        z
    }

    pub fn symbol(s: Symbol) -> Self {
        Self::word(Word(vec![s]))
    }

    pub fn add_term(&mut self, w: Word, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Q)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn primes(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.terms.keys().flat_map(|w| w.primes()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut z = self.clone();
        for (w, c) in other.iter() {
            z.add_term(w.clone(), c.clone());
        }
        z
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&q(-1)))
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut z = Self::zero();
        for (w, x) in self.iter() {
            z.add_term(w.clone(), x * c);
        }
        z
    }

    /// Product `self · other`: `other` acts first.
    pub fn mul(&self, other: &Self) -> Self {
        let mut z = Self::zero();
        for (w1, c1) in self.iter() {
            for (w2, c2) in other.iter() {
                z.add_term(w1.concat(w2), c1 * c2);
            }
        }
        z
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }
}

impl From<Word> for AlgebraElement {
    fn from(w: Word) -> Self {
        Self::word(w)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = |w: &Word| if w.is_empty() { String::new() } else { w.to_string() };
        f.write_str(&fmt_lincomb(self.iter().map(|(w, c)| (body(w), c)), "0"))
    }
}

impl std::str::FromStr for AlgebraElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        let z = parse_element(&mut c)?;
        c.finish()?;
        Ok(z)
    }
}

/// `elem := ['-'] term (('+'|'-') term)*`, `term := rational ('*' word)? | word`.
pub(crate) fn parse_element(c: &mut Cursor) -> Result<AlgebraElement> {
    let mut z = AlgebraElement::zero();
    let mut neg = c.eat('-');
    loop {
        let (coeff, w) = if starts_factor(c) {
            (Q::one(), parse_word(c)?)
        } else {
            let r = c.rational()?;
            if c.eat('*') {
                (r, parse_word(c)?)
            } else {
                (r, Word::empty())
            }
        };
        z.add_term(w, if neg { -coeff } else { coeff });
        if c.eat('+') {
            neg = false;
        } else if c.eat('-') {
            neg = true;
        } else {
            break;
        }
    }
    Ok(z)
}
