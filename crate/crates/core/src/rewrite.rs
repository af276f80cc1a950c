//! Normal forms by rewriting with the defining relations.
//!
//! Moves used on a monomial `w` (all primes odd):
//! * reordering that keeps each prime's relative order, allowed when both
//!   words have a total nadir or neither does (always, without full support);
//! * extracting an adjacent `res_p ind_p`, which is central;
//! * `c_p = (p-1)/(p1-1) (c_{p1} - p1) + p` and `c_{p1}^2 = (p1+1) c_{p1} - p1`
//!   where `c_p = res_p ind_p`;
//! * for the straddling pair of a tag IV word,
//!   `res_a X ind_a = ((a/b) e1 + e2) res_b X ind_b` with the central
//!   idempotents `e1 = (c-1)/(p1-1)`, `e2 = (p1-c)/(p1-1)`. This follows from
//!   `c_b res_a X ind_a = c_a res_b X ind_b`, itself two pair extractions.

use crate::arith::{q, Q};
use crate::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::family::{FamilyConfig, Regime};
use crate::normal_form::{classify, NfEntry, NormalForm, Template};
use crate::word::{has_total_nadir, profile, Kind, Symbol, Word};
use num_traits::{One, Zero};

/// `a + b c` with `c = res_{p1} ind_{p1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralPoly {
    pub a: Q,
    pub b: Q,
    p1: u32,
}

impl CentralPoly {
    pub fn one(p1: u32) -> CentralPoly {
        CentralPoly { a: Q::one(), b: Q::zero(), p1 }
    }

    /// `res_p ind_p` in terms of `c`.
    pub fn central(p: u32, p1: u32) -> CentralPoly {
        let (p, p1q) = (q(p as i64), q(p1 as i64));
        let b = (&p - Q::one()) / (&p1q - Q::one());
        CentralPoly { a: p - &b * p1q, b, p1 }
    }

    /// `(a/b) e1 + e2`.
    pub fn idempotent_mix(ratio: Q, p1: u32) -> CentralPoly {
        let p1q = q(p1 as i64);
        let den = &p1q - Q::one();
        CentralPoly { a: (&p1q - &ratio) / &den, b: (ratio - Q::one()) / den, p1 }
    }

    pub fn mul(&self, o: &CentralPoly) -> CentralPoly {
        let p1 = q(self.p1 as i64);
        let bb = &self.b * &o.b;
        CentralPoly {
            a: &self.a * &o.a - &p1 * &bb,
            b: &self.a * &o.b + &o.a * &self.b + (p1 + Q::one()) * bb,
            p1: self.p1,
        }
    }
}

fn same_subsequences(w: &Word, v: &Word, primes: &[u32]) -> bool {
    primes.iter().all(|&p| w.restricted_to(p) == v.restricted_to(p))
}

fn interleavings(seqs: &[Vec<Symbol>], f: &mut dyn FnMut(&[Symbol]) -> bool) -> bool {
    fn go(
        seqs: &[Vec<Symbol>],
        pos: &mut Vec<usize>,
        buf: &mut Vec<Symbol>,
        total: usize,
        f: &mut dyn FnMut(&[Symbol]) -> bool,
    ) -> bool {
        if buf.len() == total {
            return f(buf);
        }
        for i in 0..seqs.len() {
            if pos[i] < seqs[i].len() {
                buf.push(seqs[i][pos[i]]);
                pos[i] += 1;
                let done = go(seqs, pos, buf, total, f);
                pos[i] -= 1;
                buf.pop();
                if done {
                    return true;
                }
            }
        }
        false
    }
    let total = seqs.iter().map(Vec::len).sum();
    go(seqs, &mut vec![0; seqs.len()], &mut Vec::with_capacity(total), total, f)
}

/// Finds `res_p ind_p`, adjacent within prime `p`, and a word `v` with the
/// pair removed such that inserting the pair somewhere in `v` gives a legal
/// reordering of `w`. Returns `p` and `v`.
fn extract_pair(w: &Word, primes: &[u32], regime: Regime) -> Option<(u32, Word)> {
    let s = w.symbols();
    let tn = has_total_nadir(w, primes);
    let legal = |v: &[Symbol], p: u32, r: usize| -> bool {
        if regime == Regime::NoFullSupport {
            return true;
        }
        // insertion points: after exactly r symbols of prime p
        let mut seen = 0;
        for cut in 0..=v.len() {
            if seen == r {
                let mut x = v[..cut].to_vec();
                x.push(Symbol::res(p));
                x.push(Symbol::ind(p));
                x.extend_from_slice(&v[cut..]);
                if has_total_nadir(&Word(x), primes) == tn {
                    return true;
                }
            }
            if cut < v.len() && v[cut].p == p {
                seen += 1;
            }
        }
        false
    };
    // pairs as they sit in w, with w itself as the reduced word
    let mut pairs = Vec::new();
    for i in 0..s.len() {
        if s[i].kind != Kind::Res {
            continue;
        }
        let p = s[i].p;
        if let Some(j) = (i + 1..s.len()).find(|&j| s[j].p == p) {
            if s[j].kind == Kind::Ind {
                let r = s[..i].iter().filter(|x| x.p == p).count();
                let mut v = s[..i].to_vec();
                v.extend_from_slice(&s[i + 1..j]);
                v.extend_from_slice(&s[j + 1..]);
                if legal(&v, p, r) {
                    return Some((p, Word(v)));
                }
                pairs.push((p, r, v));
            }
        }
    }
    // otherwise any interleaving of the reduced subsequences
    for (p, r, v) in pairs {
        let seqs: Vec<Vec<Symbol>> = primes
            .iter()
            .map(|&x| v.iter().copied().filter(|y| y.p == x).collect())
            .collect();
        let mut found = None;
        interleavings(&seqs, &mut |u| {
            if legal(u, p, r) {
                found = Some(Word(u.to_vec()));
                true
            } else {
                false
            }
        });
        if let Some(u) = found {
            return Some((p, u));
        }
    }
    None
}

/// Matches a word with no extractable pair against its template.
fn match_template(w: &Word, primes: &[u32], regime: Regime) -> Result<(Template, CentralPoly)> {
    let p1 = primes[0];
    let t = classify(&profile(w, primes), regime)
        .ok_or_else(|| Error::NormalForm(format!("no basis template matches {w}")))?;
    if same_subsequences(w, &t.word(primes), primes) {
        return Ok((t, CentralPoly::one(p1)));
    }
    if let Template::IV { i, k, l } = t {
        let q_to = primes[(i + 1) % primes.len()];
        for &q_from in primes.iter().filter(|&&x| x != primes[i] && x != q_to) {
            let mut v = vec![Symbol::res(q_from)];
            v.extend(std::iter::repeat_n(Symbol::ind(primes[i]), l as usize));
            v.extend(std::iter::repeat_n(Symbol::res(primes[i]), k as usize));
            v.push(Symbol::ind(q_from));
            if same_subsequences(w, &Word(v), primes) {
                let ratio = q(q_from as i64) / q(q_to as i64);
                return Ok((t, CentralPoly::idempotent_mix(ratio, p1)));
            }
        }
    }
    Err(Error::NormalForm(format!("{w} is irreducible but does not match {}", t.word(primes))))
}

/// Normal form of one monomial as `(template, a + b c)`.
pub fn rewrite_word(w: &Word, cfg: &FamilyConfig) -> Result<(Template, CentralPoly)> {
    let primes = cfg.primes();
    let p1 = primes[0];
    let mut poly = CentralPoly::one(p1);
    let mut cur = w.clone();
    while let Some((p, next)) = extract_pair(&cur, primes, cfg.regime()) {
        poly = poly.mul(&CentralPoly::central(p, p1));
        cur = next;
    }
    let (t, f) = match_template(&cur, primes, cfg.regime())?;
    Ok((t, poly.mul(&f)))
}

pub fn rewrite_syntactic(z: &AlgebraElement, cfg: &FamilyConfig) -> Result<NormalForm> {
    cfg.check_primes(z)?;
    if cfg.primes().contains(&2) {
        return Err(Error::Config("rewriting relations need odd primes".into()));
    }
    let mut entries = Vec::new();
    for (w, c) in z.iter() {
        let (t, poly) = rewrite_word(w, cfg)?;
        entries.push(NfEntry { template: t.clone(), t: 0, coeff: c * &poly.a });
        entries.push(NfEntry { template: t, t: 1, coeff: c * &poly.b });
    }
    Ok(NormalForm::new(cfg.primes(), entries))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Parity;

    fn e(s: &str) -> AlgebraElement {
        s.parse().unwrap()
    }

    #[test]
    fn central_arithmetic() {
        let c = CentralPoly::central(3, 3);
        assert_eq!((c.a.clone(), c.b.clone()), (Q::zero(), Q::one()));
        let c2 = c.mul(&c);
        assert_eq!((c2.a, c2.b), (q(-3), q(4)));
        let c5 = CentralPoly::central(5, 3);
        assert_eq!((c5.a, c5.b), (q(-1), q(2)));
    }

    #[test]
    fn worked_cases() {
        let cfg = FamilyConfig::new(&[3, 5, 7], &[1], Parity::OddOnly).unwrap();
        let nf = |s: &str| rewrite_syntactic(&e(s), &cfg).unwrap().to_string();
        assert_eq!(nf("ind3*res5^2*res3*ind5"), "2*(res3*ind3)*ind3*res3*res5 - ind3*res3*res5");
        assert_eq!(
            nf("ind3*res3*ind5*res3*ind3*res5*ind3*res3"),
            "4*(res3*ind3)*ind3*res3*ind5*res5 - 3*ind3*res3*ind5*res5"
        );
        assert_eq!(nf("res5*res7*res3*ind5*ind7*ind5"), "17*(res3*ind3)*res3*ind5 - 16*res3*ind5");
        assert_eq!(
            nf("res7*ind3*res3^2*ind7"),
            "1/5*(res3*ind3)*res5*ind3*res3^2*ind5 + 4/5*res5*ind3*res3^2*ind5"
        );
        assert_eq!(nf("res3*ind5*ind3*res5*ind3*res5"), "(res3*ind3)*ind5*res5^2*ind3");
        assert_eq!(nf("res3*ind5*res3*res5*ind3*res5"), "(res3*ind3)*res3*ind5*res5^2");
        assert_eq!(nf("1"), "1");
        assert_eq!(nf("0"), "0");
    }
}
