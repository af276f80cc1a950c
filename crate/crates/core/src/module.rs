//! Canonical simple modules of the dihedral group of order 2n.

use crate::cursor::Cursor;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_i64(x: i64) -> Option<Sign> {
        match x {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    fn rank(self) -> u8 {
        match self {
            Sign::Plus => 0,
            Sign::Minus => 1,
        }
    }
}

/// `V { n, a, b }`: r acts by `a`, s by `b`. `W { n, k }`: the two-dimensional
/// module with `1 <= k < n/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SimpleModule {
    V { n: u64, a: Sign, b: Sign },
    W { n: u64, k: u64 },
}

use SimpleModule::{V, W};

impl SimpleModule {
    pub fn v(n: u64, a: i64, b: i64) -> Result<SimpleModule> {
        if n < 3 {
            return Err(Error::LevelTooSmall(n));
        }
        let (sa, sb) = match (Sign::from_i64(a), Sign::from_i64(b)) {
            (Some(x), Some(y)) => (x, y),
            _ => return Err(Error::NonCanonical(format!("V({a},{b};{n}): signs must be ±1"))),
        };
        if sa == Sign::Minus && n % 2 == 1 {
            return Err(Error::NonCanonical(format!("V({a},{b};{n}): a = -1 needs even n")));
        }
        Ok(V { n, a: sa, b: sb })
    }

    pub fn w(n: u64, k: u64) -> Result<SimpleModule> {
        if n < 3 {
            return Err(Error::LevelTooSmall(n));
        }
        if k == 0 || 2 * k >= n {
            return Err(Error::NonCanonical(format!("W({k};{n}): need 1 <= k < n/2")));
        }
        Ok(W { n, k })
    }

    pub fn level(&self) -> u64 {
        match *self {
            V { n, .. } | W { n, .. } => n,
        }
    }

    pub fn dim(&self) -> u32 {
        match self {
            V { .. } => 1,
            W { .. } => 2,
        }
    }

    fn key(&self) -> (u64, u8, u64, u8, u8) {
        match *self {
            V { n, a, b } => (n, 0, 0, a.rank(), b.rank()),
            W { n, k } => (n, 1, k, 0, 0),
        }
    }
}

impl Ord for SimpleModule {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for SimpleModule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SimpleModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            V { n, a, b } => write!(f, "V({},{};{})", a.value(), b.value(), n),
            W { n, k } => write!(f, "W({k};{n})"),
        }
    }
}

impl std::str::FromStr for SimpleModule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        let m = parse_module(&mut c)?;
        c.finish()?;
        Ok(m)
    }
}

pub(crate) fn parse_module(c: &mut Cursor) -> Result<SimpleModule> {
    if c.eat('V') {
        c.expect('(')?;
        let a = c.int()?;
        c.expect(',')?;
        let b = c.int()?;
        c.expect(';')?;
        let n = c.uint()?;
        c.expect(')')?;
        SimpleModule::v(n, a, b)
    } else if c.eat('W') {
        c.expect('(')?;
        let k = c.uint()?;
        c.expect(';')?;
        let n = c.uint()?;
        c.expect(')')?;
        SimpleModule::w(n, k)
    } else {
        Err(c.err("expected V(..) or W(..)"))
    }
}

/// All canonical simples at level `n`, in key order.
pub fn simples_at(n: u64) -> Vec<SimpleModule> {
    assert!(n >= 3);
    let mut out = vec![
        V { n, a: Sign::Plus, b: Sign::Plus },
        V { n, a: Sign::Plus, b: Sign::Minus },
    ];
    if n.is_multiple_of(2) {
        out.push(V { n, a: Sign::Minus, b: Sign::Plus });
        out.push(V { n, a: Sign::Minus, b: Sign::Minus });
    }
    out.extend((1..).take_while(|k| 2 * k < n).map(|k| W { n, k }));
    out
}
