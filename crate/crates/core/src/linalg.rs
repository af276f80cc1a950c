//! Exact sparse Gaussian elimination over the rationals.

use crate::arith::Q;
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

pub type SparseRow = BTreeMap<usize, Q>;

/// Row echelon form built incrementally; every stored row has leading
/// coefficient 1 at its pivot column, and the pivot is the first nonzero
/// column of the reduced row.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &usize> {
        self.rows.keys()
    }

    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        let mut from = 0;
        loop {
            let next = row.range(from..).map(|(c, _)| *c).find(|c| self.rows.contains_key(c));
            let Some(c) = next else { return row };
            let f = row[&c].clone();
            for (j, v) in &self.rows[&c] {
                let e = row.entry(*j).or_insert_with(Q::zero);
                *e -= &f * v;
                if e.is_zero() {
                    row.remove(j);
                }
            }
            from = c + 1;
        }
    }

    /// Adds a row; returns its pivot column if the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> Option<usize> {
        let mut row = self.reduce(row);
        let (&c, lead) = row.iter().next()?;
        if !lead.is_one() {
            let inv = lead.recip();
            for v in row.values_mut() {
                *v *= &inv;
            }
        }
        self.rows.insert(c, row);
        Some(c)
    }
}

pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Rank after reversing the column order, as an independent pivot sequence.
pub fn rank_reversed(rows: impl IntoIterator<Item = SparseRow>, ncols: usize) -> usize {
    rank(rows.into_iter().map(|r| r.into_iter().map(|(c, v)| (ncols - 1 - c, v)).collect()))
}

/// Accumulates equations `Σ a_j x_j = b` over `n` unknowns.
#[derive(Debug, Clone)]
pub struct System {
    n: usize,
    ech: Echelon,
    inconsistent: bool,
}

impl System {
    pub fn new(n: usize) -> System {
        System { n, ech: Echelon::new(), inconsistent: false }
    }

    pub fn add_equation(&mut self, mut coeffs: SparseRow, rhs: Q) {
        if !rhs.is_zero() {
            coeffs.insert(self.n, rhs);
        }
        if coeffs.is_empty() {
            return;
        }
        if self.ech.insert(coeffs) == Some(self.n) {
            self.inconsistent = true;
        }
    }

    pub fn solve(&self) -> Result<Vec<Q>> {
        if self.inconsistent {
            return Err(Error::Linear("inconsistent system".into()));
        }
        if self.ech.rank() < self.n {
            return Err(Error::Linear(format!("rank {} below {} unknowns", self.ech.rank(), self.n)));
        }
        let mut x = vec![Q::zero(); self.n];
        for (&c, row) in self.ech.rows.iter().rev() {
            let mut v = row.get(&self.n).cloned().unwrap_or_else(Q::zero);
            for (j, a) in row.range(c + 1..self.n) {
                v -= a * &x[*j];
            }
            x[c] = v;
        }
        Ok(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{q, q_frac};

    fn row(v: &[i64]) -> SparseRow {
        v.iter().enumerate().filter(|(_, x)| **x != 0).map(|(i, x)| (i, q(*x))).collect()
    }

    #[test]
    fn ranks() {
        let rows = vec![row(&[1, 2, 3]), row(&[2, 4, 6]), row(&[0, 1, 1])];
        assert_eq!(rank(rows.clone()), 2);
        assert_eq!(rank_reversed(rows, 3), 2);
        assert_eq!(rank(vec![row(&[1, 0]), row(&[0, 1]), row(&[1, 1])]), 2);
    }

    #[test]
    fn solves() {
        let mut s = System::new(2);
        s.add_equation(row(&[1, 1]), q(3));
        s.add_equation(row(&[1, -1]), q(1));
        s.add_equation(row(&[2, 0]), q(4));
        assert_eq!(s.solve().unwrap(), vec![q(2), q(1)]);

        let mut s = System::new(2);
        s.add_equation(row(&[5, 0]), q(1));
        s.add_equation(row(&[0, 5]), q(4));
        assert_eq!(s.solve().unwrap(), vec![q_frac(1, 5), q_frac(4, 5)]);

        let mut s = System::new(1);
        s.add_equation(row(&[1]), q(1));
        s.add_equation(row(&[1]), q(2));
        assert!(s.solve().is_err());

        let mut s = System::new(2);
        s.add_equation(row(&[1, 1]), q(1));
        assert!(s.solve().is_err());
    }
}
