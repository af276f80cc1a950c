//! Small integer and rational helpers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Exponent of `p` in `n` (n > 0).
pub fn valuation(p: u64, mut n: u64) -> u32 {
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Renders `q` as `a` or `a/b`.
pub fn fmt_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Writes `terms` as `c1*t1 + c2*t2 - ...`, dropping unit coefficients.
/// An empty body is a bare scalar; an empty sum renders as `zero`.
pub fn fmt_lincomb<'a, I>(terms: I, zero: &str) -> String
where
    I: IntoIterator<Item = (String, &'a Q)>,
{
    let mut out = String::new();
    for (i, (body, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if body.is_empty() {
            out.push_str(&fmt_q(&a));
            continue;
        }
        if !a.is_one() {
            out.push_str(&fmt_q(&a));
            out.push('*');
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push_str(zero);
    }
    out
}

pub fn is_zero(x: &Q) -> bool {
    x.is_zero()
}
