//! Words in the restriction/induction generators.
//!
//! A word is stored as written; it acts right-to-left, so the last symbol
//! is applied first and "suffix" means a right factor.

use crate::arith::is_prime;
use crate::cursor::Cursor;
use crate::error::{Error, Result};
use crate::module::SimpleModule;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    Res,
    Ind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Symbol {
    pub kind: Kind,
    pub p: u32,
}

impl Symbol {
    pub fn res(p: u32) -> Symbol {
        Symbol { kind: Kind::Res, p }
    }

    pub fn ind(p: u32) -> Symbol {
        Symbol { kind: Kind::Ind, p }
    }

    /// +1 for ind, -1 for res.
    pub fn step(&self) -> i64 {
        match self.kind {
            Kind::Res => -1,
            Kind::Ind => 1,
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            Kind::Res => "res",
            Kind::Ind => "ind",
        };
        write!(f, "{k}{}", self.p)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Word(pub Vec<Symbol>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    /// `self` followed by `other` (so `other` acts first).
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn power(s: Symbol, e: u32) -> Word {
        Word(vec![s; e as usize])
    }

    /// Sorted, deduplicated primes occurring in the word.
    pub fn primes(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.0.iter().map(|s| s.p).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn count(&self, kind: Kind, p: u32) -> usize {
        self.0.iter().filter(|s| s.kind == kind && s.p == p).count()
    }

    /// The subsequence of symbols with prime `p`.
    pub fn restricted_to(&self, p: u32) -> Word {
        Word(self.0.iter().copied().filter(|s| s.p == p).collect())
    }

    pub fn suffix(&self, len: usize) -> Word {
        Word(self.0[self.0.len() - len..].to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.0.len() {
            let s = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == s {
                j += 1;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if j - i > 1 {
                write!(f, "{s}^{}", j - i)?;
            } else {
                write!(f, "{s}")?;
            }
            i = j;
        }
        Ok(())
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        if c.eat('1') && c.at_end() {
            return Ok(Word::empty());
        }
        let mut c = Cursor::new(s);
        let w = parse_word(&mut c)?;
        c.finish()?;
        Ok(w)
    }
}

pub(crate) fn starts_factor(c: &Cursor) -> bool {
    matches!(c.peek(), Some('r') | Some('i') | Some('('))
}

pub(crate) fn parse_word(c: &mut Cursor) -> Result<Word> {
    let mut out = Vec::new();
    loop {
        // parentheses only group, as in printed normal forms
        if c.eat('(') {
            out.extend(parse_word(c)?.0);
            c.expect(')')?;
        } else {
            parse_factor(c, &mut out)?;
        }
        if c.peek() == Some('*') {
            c.bump();
            if starts_factor(c) {
                continue;
            }
            return Err(c.err("expected a factor after '*'"));
        }
        break;
    }
    Ok(Word(out))
}

fn parse_factor(c: &mut Cursor, out: &mut Vec<Symbol>) -> Result<()> {
    let kind = if c.eat_str("res") {
        Kind::Res
    } else if c.eat_str("ind") {
        Kind::Ind
    } else {
        return Err(c.err("expected 'res' or 'ind'"));
    };
    let at = c.pos();
    let p = c.uint()?;
    if !is_prime(p) || p > u32::MAX as u64 {
        return Err(Error::Parse { pos: at, msg: format!("{p} is not prime") });
    }
    let e = if c.eat('^') {
        let e = c.uint()?;
        if e == 0 {
            return Err(c.err("exponent must be positive"));
        }
        e
    } else {
        1
    };
    out.extend(std::iter::repeat_n(Symbol { kind, p: p as u32 }, e as usize));
    Ok(())
}

/// Number of ind_p minus number of res_p.
pub fn terminus(w: &Word, p: u32) -> i64 {
    w.0.iter().filter(|s| s.p == p).map(Symbol::step).sum()
}

/// Per-prime counts of every suffix, indexed by suffix length `0..=len`.
fn suffix_counts(w: &Word, p: u32) -> Vec<i64> {
    let mut out = Vec::with_capacity(w.len() + 1);
    let mut c = 0;
    out.push(0);
    for s in w.0.iter().rev() {
        if s.p == p {
            c += s.step();
        }
        out.push(c);
    }
    out
}

/// Minimum suffix count with respect to `p`, and the suffix lengths attaining it.
pub fn nadir(w: &Word, p: u32) -> (i64, Vec<usize>) {
    let counts = suffix_counts(w, p);
    let d = *counts.iter().min().unwrap();
    let at = (0..counts.len()).filter(|&l| counts[l] == d).collect();
    (d, at)
}

pub fn nadir_value(w: &Word, p: u32) -> i64 {
    suffix_counts(w, p).into_iter().min().unwrap()
}

/// Suffix lengths that are nadirs for every prime in `primes`.
pub fn total_nadirs(w: &Word, primes: &[u32]) -> Vec<usize> {
    let mut ok = vec![true; w.len() + 1];
    for &p in primes {
        let counts = suffix_counts(w, p);
        let d = *counts.iter().min().unwrap();
        for (l, c) in counts.iter().enumerate() {
            if *c != d {
                ok[l] = false;
            }
        }
    }
    (0..ok.len()).filter(|&l| ok[l]).collect()
}

pub fn has_total_nadir(w: &Word, primes: &[u32]) -> bool {
    !total_nadirs(w, primes).is_empty()
}

/// Termini and nadirs over an ordered prime list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile {
    pub termini: Vec<i64>,
    pub nadirs: Vec<i64>,
    pub total_nadir: bool,
}

pub fn profile(w: &Word, primes: &[u32]) -> Profile {
    Profile {
        termini: primes.iter().map(|&p| terminus(w, p)).collect(),
        nadirs: primes.iter().map(|&p| nadir_value(w, p)).collect(),
        total_nadir: has_total_nadir(w, primes),
    }
}

/// Which critical value the annihilation criterion uses when a total nadir exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriticalReading {
    /// `n = 2 ∏ p^{-d_p}`, as printed.
    Doubled,
    /// `n = ∏ p^{-d_p}`.
    Plain,
}

/// The closed-form annihilation predicate for odd levels.
pub fn annihilates_closed_form(w: &Word, primes: &[u32], n: u64, reading: CriticalReading) -> bool {
    let mut prod: u64 = 1;
    for &p in primes {
        let d = nadir_value(w, p);
        let pk = (p as u64).pow((-d) as u32);
        if !n.is_multiple_of(pk) {
            return true;
        }
        prod *= pk;
    }
    if !has_total_nadir(w, primes) {
        return false;
    }
    match reading {
        CriticalReading::Doubled => n == 2 * prod,
        CriticalReading::Plain => n == prod,
    }
}

/// Ground truth: the word kills `m`.
pub fn annihilates_direct(w: &Word, m: SimpleModule) -> bool {
    crate::branching::apply_word_int(w, &crate::groth::IntGroth::single(m)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(w("ind5*res5*ind3*res3").len(), 4);
        assert_eq!(w("res3^2"), Word(vec![Symbol::res(3); 2]));
        assert_eq!(w("res3^2").to_string(), "res3^2");
        assert_eq!(w(" res3 * res3 ").to_string(), "res3^2");
        assert!("res4".parse::<Word>().is_err());
        assert_eq!(w("(res3*ind3)*ind3"), w("res3*ind3^2"));
        assert!("(res3".parse::<Word>().is_err());
        assert!("res3*".parse::<Word>().is_err());
        assert!("res3^0".parse::<Word>().is_err());
        assert_eq!(w("1"), Word::empty());
        assert_eq!(Word::empty().to_string(), "1");
    }

    #[test]
    fn termini_and_nadirs() {
        assert_eq!(terminus(&w("ind5*res5*ind3*res3"), 3), 0);
        assert_eq!(terminus(&Word::empty(), 3), 0);
        assert_eq!(terminus(&w("ind3*ind3*res3"), 3), 1);
        assert_eq!(nadir(&w("ind5*res5*ind3*res3"), 3), (-1, vec![1]));
        assert_eq!(nadir(&Word::empty(), 3), (0, vec![0]));
        assert_eq!(nadir(&w("ind3*ind5*res3*res5"), 3), (-1, vec![2, 3]));
    }

    #[test]
    fn total_nadir_examples() {
        assert!(!has_total_nadir(&w("ind5*res5*ind3*res3"), &[3, 5]));
        assert!(has_total_nadir(&w("ind3*ind5*res3*res5"), &[3, 5]));
        assert!(has_total_nadir(&Word::empty(), &[3, 5]));
    }

    #[test]
    fn closed_form_examples() {
        let z = w("ind3*ind5*res3*res5");
        assert!(annihilates_closed_form(&z, &[3, 5], 15, CriticalReading::Plain));
        assert!(!annihilates_closed_form(&z, &[3, 5], 15, CriticalReading::Doubled));
        assert!(annihilates_direct(&z, SimpleModule::v(15, 1, 1).unwrap()));
        assert!(annihilates_closed_form(&w("res3"), &[3], 10, CriticalReading::Plain));
        assert!(!annihilates_closed_form(&w("res3"), &[3], 45, CriticalReading::Plain));
    }
}
