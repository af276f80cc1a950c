//! Restriction and induction along D_{2n} -> D_{2pn}, r ↦ r^p, s ↦ s.

use crate::arith::Q;
use crate::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::groth::{GrothVector, IntGroth};
use crate::module::{Sign, SimpleModule};
use crate::word::{Kind, Word};

/// W_k(n) for arbitrary integer k, as canonical simples.
pub fn canonicalize_w(n: u64, k: i64) -> Result<GrothVector> {
    if n < 3 {
        return Err(Error::LevelTooSmall(n));
    }
    Ok(canon_w(n, k).to_rational())
}

pub(crate) fn canon_w(n: u64, k: i64) -> IntGroth {
    let r = k.rem_euclid(n as i64) as u64;
    let mut g = IntGroth::zero();
    if r == 0 {
        g.add_term(SimpleModule::V { n, a: Sign::Plus, b: Sign::Plus }, 1);
        g.add_term(SimpleModule::V { n, a: Sign::Plus, b: Sign::Minus }, 1);
    } else if 2 * r == n {
        g.add_term(SimpleModule::V { n, a: Sign::Minus, b: Sign::Plus }, 1);
        g.add_term(SimpleModule::V { n, a: Sign::Minus, b: Sign::Minus }, 1);
    } else {
        g.add_term(SimpleModule::W { n, k: r.min(n - r) }, 1);
    }
    g
}

/// Whether res_p is nonzero at level n.
pub fn restriction_defined(p: u32, n: u64) -> bool {
    let p = p as u64;
    n.is_multiple_of(p) && n / p >= 3
}

pub fn restrict(p: u32, m: SimpleModule) -> IntGroth {
    let n = m.level();
    if !restriction_defined(p, n) {
        return IntGroth::zero();
    }
    let low = n / p as u64;
    match m {
        SimpleModule::V { a, b, .. } => {
            let a = if p == 2 { Sign::Plus } else { a };
            IntGroth::single(SimpleModule::V { n: low, a, b })
        }
        SimpleModule::W { k, .. } => canon_w(low, k as i64),
    }
}

pub fn induce(p: u32, m: SimpleModule) -> IntGroth {
    let n = m.level() as i64;
    let pn = m.level() * p as u64;
    let half = (p as i64 - 1) / 2;
    let mut g = IntGroth::zero();
    match m {
        SimpleModule::V { a, b, .. } => {
            if p == 2 {
                match a {
                    Sign::Plus => {
                        g.add_term(SimpleModule::V { n: pn, a: Sign::Plus, b }, 1);
                        g.add_term(SimpleModule::V { n: pn, a: Sign::Minus, b }, 1);
                    }
                    Sign::Minus => g.add_assign(&canon_w(pn, n / 2)),
                }
            } else {
                g.add_term(SimpleModule::V { n: pn, a, b }, 1);
                for j in 1..=half {
                    let k = match a {
                        Sign::Plus => j * n,
                        Sign::Minus => (2 * j - 1) * n / 2,
                    };
                    g.add_assign(&canon_w(pn, k));
                }
            }
        }
        SimpleModule::W { k, .. } => {
            let k = k as i64;
            g.add_assign(&canon_w(pn, k));
            if p == 2 {
                g.add_assign(&canon_w(pn, n - k));
            } else {
                for j in 1..=half {
                    g.add_assign(&canon_w(pn, j * n - k));
                    g.add_assign(&canon_w(pn, j * n + k));
                }
            }
        }
    }
    g
}

fn apply_symbol(kind: Kind, p: u32, v: &IntGroth) -> IntGroth {
    let mut out = IntGroth::zero();
    for (m, c) in v.iter() {
        let img = match kind {
            Kind::Res => restrict(p, *m),
            Kind::Ind => induce(p, *m),
        };
        out.add_scaled(&img, c);
    }
    out
}

/// Integer fast path: the word's action on an integer vector.
pub fn apply_word_int(w: &Word, v: &IntGroth) -> IntGroth {
    let mut cur = v.clone();
    for s in w.symbols().iter().rev() {
        if cur.is_zero() {
            break;
        }
        cur = apply_symbol(s.kind, s.p, &cur);
    }
    cur
}

pub fn apply_word(w: &Word, v: &GrothVector) -> GrothVector {
    let mut cur = v.clone();
    for s in w.symbols().iter().rev() {
        if cur.is_zero() {
            break;
        }
        let mut out = GrothVector::zero();
        for (m, c) in cur.iter() {
            let img = match s.kind {
                Kind::Res => restrict(s.p, *m),
                Kind::Ind => induce(s.p, *m),
            };
            out.add_scaled(&img.to_rational(), c);
        }
        cur = out;
    }
    cur
}

pub fn apply_element(z: &AlgebraElement, v: &GrothVector) -> GrothVector {
    let mut out = GrothVector::zero();
    for (w, c) in z.iter() {
        out.add_scaled(&apply_word(w, v), c);
    }
    out
}

/// Action of an element on a single simple, with words evaluated on the integer path.
pub fn act_on_simple(z: &AlgebraElement, m: SimpleModule) -> GrothVector {
    let start = IntGroth::single(m);
    let mut out = GrothVector::zero();
    for (w, c) in z.iter() {
        let img = apply_word_int(w, &start);
        for (x, k) in img.iter() {
            out.add_term(*x, c * Q::from_integer((*k).into()));
        }
    }
    out
}
