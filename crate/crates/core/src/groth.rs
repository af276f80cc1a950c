//! Finite linear combinations of simple modules.

use crate::arith::{fmt_lincomb, Q};
use crate::cursor::Cursor;
use crate::error::{Error, Result};
use crate::module::{parse_module, SimpleModule};
use num_traits::{Num, One, Zero};
use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

/// Sparse vector of simples; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Groth<C> {
    terms: BTreeMap<SimpleModule, C>,
}

pub type GrothVector = Groth<Q>;
pub type IntGroth = Groth<i64>;

impl<C: Num + Clone> Default for Groth<C> {
    fn default() -> Self {
        Groth { terms: BTreeMap::new() }
    }
}

impl<C: Num + Clone> Groth<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(m: SimpleModule) -> Self {
        let mut g = Self::zero();
        g.add_term(m, C::one());
        g
    }

    pub fn add_term(&mut self, m: SimpleModule, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        for (m, x) in &other.terms {
            self.add_term(*m, x.clone() * c.clone());
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.add_scaled(other, &C::one());
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut g = Self::zero();
        g.add_scaled(self, c);
        g
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &SimpleModule) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SimpleModule, &C)> {
        self.terms.iter()
    }

    pub fn modules(&self) -> impl Iterator<Item = &SimpleModule> {
        self.terms.keys()
    }
}

impl<C: Num + Clone> FromIterator<(SimpleModule, C)> for Groth<C> {
    fn from_iter<T: IntoIterator<Item = (SimpleModule, C)>>(iter: T) -> Self {
        let mut g = Self::zero();
        for (m, c) in iter {
            g.add_term(m, c);
        }
        g
    }
}

impl IntGroth {
    pub fn to_rational(&self) -> GrothVector {
        self.iter().map(|(m, c)| (*m, crate::arith::q(*c))).collect()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.iter().all(|(_, c)| *c >= 0)
    }
}

/// Σ coefficient × dimension.
pub fn dim(v: &GrothVector) -> Q {
    v.iter()
        .fold(Q::zero(), |acc, (m, c)| acc + c * Q::from_integer(m.dim().into()))
}

impl fmt::Display for GrothVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_lincomb(self.iter().map(|(m, c)| (m.to_string(), c)), "0"))
    }
}

impl fmt::Display for IntGroth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_rational().fmt(f)
    }
}

impl std::str::FromStr for GrothVector {
    type Err = Error;

    /// Parses `c1*M1 + c2*M2 - ...` or `0`.
    fn from_str(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        let mut g = GrothVector::zero();
        if c.eat('0') {
            c.finish()?;
            return Ok(g);
        }
        let mut first = true;
        loop {
            let neg = if c.eat('-') {
                true
            } else {
                if !c.eat('+') && !first {
                    break;
                }
                false
            };
            first = false;
            let coeff = if c.peek().is_some_and(|x| x.is_ascii_digit()) {
                let r = c.rational()?;
                c.expect('*')?;
                r
            } else {
                Q::one()
            };
            let m = parse_module(&mut c)?;
            g.add_term(m, if neg { -coeff } else { coeff });
            if c.at_end() {
                break;
            }
        }
        c.finish()?;
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q;

    #[test]
    fn no_zero_terms() {
        let m = SimpleModule::w(5, 1).unwrap();
        let mut g = GrothVector::single(m);
        g.add_term(m, q(-1));
        assert!(g.is_zero());
        assert_eq!(g.to_string(), "0");
    }

    #[test]
    fn text_roundtrip() {
        for s in ["V(1,1;15) + W(1;15)", "-V(1,1;5) + V(1,-1;5)", "1/2*W(2;7) - 3*V(1,1;7)", "0"] {
            let g: GrothVector = s.parse().unwrap();
            let t = g.to_string();
            let h: GrothVector = t.parse().unwrap();
            assert_eq!(g, h);
            assert_eq!(h.to_string(), t);
        }
    }
}
