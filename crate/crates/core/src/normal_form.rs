//! Basis monomials of the operator algebra and normal forms over them.
//!
//! Prime indices refer to the ascending prime list of the family. With
//! `c = res_{p1} ind_{p1}` for the smallest prime `p1`, every basis monomial
//! is `c^t · T` where `T` is one of six templates.

use crate::arith::{fmt_lincomb, fmt_q, Q};
use crate::element::AlgebraElement;
use crate::family::Regime;
use crate::word::{profile, Profile, Symbol, Word};
use serde::Serialize;
use serde_json::{json, Map, Value};
use std::cmp::Reverse;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Tag {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Template {
    /// `∏ ind_i^{l_i} ∏ res_i^{k_i}`.
    I { l: Vec<u32>, k: Vec<u32> },
    /// `∏ ind_i^{l_i} res_i^{k_i}`; see [`Template::word`] for the block order.
    II { l: Vec<u32>, k: Vec<u32> },
    /// `res_i^k ind_j^l`, `i != j`.
    III { i: usize, j: usize, k: u32, l: u32 },
    /// `res_q ind_i^l res_i^k ind_q` with `q` the cyclic successor of `i`.
    IV { i: usize, k: u32, l: u32 },
    /// `ind_j^l res_j^k ∏ ind_i^{ls_i}`, `ls_j = 0`.
    V { j: usize, l: u32, k: u32, ls: Vec<u32> },
    /// `∏ res_i^{ks_i} ind_j^l res_j^k`, `ks_j = 0`.
    VI { j: usize, l: u32, k: u32, ks: Vec<u32> },
}

fn push(out: &mut Vec<Symbol>, s: Symbol, e: u32) {
    out.extend(std::iter::repeat_n(s, e as usize));
}

impl Template {
    pub fn tag(&self) -> Tag {
        match self {
            Template::I { .. } => Tag::I,
            Template::II { .. } => Tag::II,
            Template::III { .. } => Tag::III,
            Template::IV { .. } => Tag::IV,
            Template::V { .. } => Tag::V,
            Template::VI { .. } => Tag::VI,
        }
    }

    /// The identity monomial.
    pub fn unit(nprimes: usize) -> Template {
        Template::I { l: vec![0; nprimes], k: vec![0; nprimes] }
    }

    pub fn word(&self, primes: &[u32]) -> Word {
        let mut w = Vec::new();
        let r = primes.len();
        match self {
            Template::I { l, k } => {
                for i in 0..r {
                    push(&mut w, Symbol::ind(primes[i]), l[i]);
                }
                for i in 0..r {
                    push(&mut w, Symbol::res(primes[i]), k[i]);
                }
            }
            Template::II { l, k } => {
                let block = |w: &mut Vec<Symbol>, i: usize| {
                    push(w, Symbol::ind(primes[i]), l[i]);
                    push(w, Symbol::res(primes[i]), k[i]);
                };
                let mixed: Vec<usize> = (0..r).filter(|&i| l[i] > 0 && k[i] > 0).collect();
                if mixed.len() >= 2 {
                    (0..r).for_each(|i| block(&mut w, i));
                } else {
                    // Res-only blocks, then mixed, then ind-only: never a total nadir.
                    (0..r).filter(|&i| l[i] == 0).for_each(|i| block(&mut w, i));
                    mixed.iter().for_each(|&i| block(&mut w, i));
                    (0..r).filter(|&i| k[i] == 0 && l[i] > 0).for_each(|i| block(&mut w, i));
                }
            }
            Template::III { i, j, k, l } => {
                push(&mut w, Symbol::res(primes[*i]), *k);
                push(&mut w, Symbol::ind(primes[*j]), *l);
            }
            Template::IV { i, k, l } => {
                let q = primes[(i + 1) % r];
                w.push(Symbol::res(q));
                push(&mut w, Symbol::ind(primes[*i]), *l);
                push(&mut w, Symbol::res(primes[*i]), *k);
                w.push(Symbol::ind(q));
            }
            Template::V { j, l, k, ls } => {
                push(&mut w, Symbol::ind(primes[*j]), *l);
                push(&mut w, Symbol::res(primes[*j]), *k);
                for i in 0..r {
                    push(&mut w, Symbol::ind(primes[i]), ls[i]);
                }
            }
            Template::VI { j, l, k, ks } => {
                for i in 0..r {
                    push(&mut w, Symbol::res(primes[i]), ks[i]);
                }
                push(&mut w, Symbol::ind(primes[*j]), *l);
                push(&mut w, Symbol::res(primes[*j]), *k);
            }
        }
        Word(w)
    }

    /// `c^t · T`.
    pub fn monomial(&self, t: u8, primes: &[u32]) -> Word {
        let body = self.word(primes);
        if t == 0 {
            body
        } else {
            let p1 = primes[0];
            Word(vec![Symbol::res(p1), Symbol::ind(p1)]).concat(&body)
        }
    }

    pub fn exponents_json(&self, primes: &[u32]) -> Value {
        let per_prime = |v: &[u32]| -> Value {
            let m: Map<String, Value> =
                primes.iter().zip(v).map(|(p, e)| (p.to_string(), json!(e))).collect();
            Value::Object(m)
        };
        match self {
            Template::I { l, k } | Template::II { l, k } => json!({"ind": per_prime(l), "res": per_prime(k)}),
            Template::III { i, j, k, l } => {
                json!({"res_prime": primes[*i], "res": k, "ind_prime": primes[*j], "ind": l})
            }
            Template::IV { i, k, l } => json!({
                "prime": primes[*i], "outer": primes[(i + 1) % primes.len()], "ind": l, "res": k
            }),
            Template::V { j, l, k, ls } => json!({"prime": primes[*j], "ind": l, "res": k, "tail_ind": per_prime(ls)}),
            Template::VI { j, l, k, ks } => json!({"prime": primes[*j], "ind": l, "res": k, "head_res": per_prime(ks)}),
        }
    }
}

fn support(v: &[u32]) -> Vec<usize> {
    (0..v.len()).filter(|&i| v[i] > 0).collect()
}

/// The template sharing the given termini, nadirs and total-nadir flag.
pub fn classify(pr: &Profile, regime: Regime) -> Option<Template> {
    let r = pr.termini.len();
    let k: Vec<u32> = pr.nadirs.iter().map(|d| (-d) as u32).collect();
    let l: Vec<u32> = (0..r).map(|i| (pr.termini[i] - pr.nadirs[i]) as u32).collect();
    if regime == Regime::NoFullSupport || pr.total_nadir {
        return Some(Template::I { l, k });
    }
    let s = support(&k);
    let e = support(&l);
    if s.is_empty() || e.is_empty() {
        return None;
    }
    let drop = |v: &[u32], j: usize| -> Vec<u32> {
        let mut v = v.to_vec();
        v[j] = 0;
        v
    };
    Some(match (s.len(), e.len()) {
        (1, 1) if s[0] != e[0] => Template::III { i: s[0], j: e[0], k: k[s[0]], l: l[e[0]] },
        (1, 1) => {
            if r < 2 {
                return None;
            }
            Template::IV { i: s[0], k: k[s[0]], l: l[s[0]] }
        }
        (1, _) => Template::V { j: s[0], l: l[s[0]], k: k[s[0]], ls: drop(&l, s[0]) },
        (_, 1) => Template::VI { j: e[0], l: l[e[0]], k: k[e[0]], ks: drop(&k, e[0]) },
        _ => Template::II { l, k },
    })
}

/// The basis monomials with the given invariants: `c^t T` for `t ∈ {0,1}`.
pub fn candidate_basis(pr: &Profile, regime: Regime) -> Vec<(Template, u8)> {
    match classify(pr, regime) {
        Some(t) => vec![(t.clone(), 0), (t, 1)],
        None => Vec::new(),
    }
}

/// All templates valid for `regime` with every exponent at most `bound`.
pub fn enumerate_templates(nprimes: usize, bound: u32, regime: Regime) -> Vec<Template> {
    let vectors = |len: usize| -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|v| (0..=bound).map(move |x| [v.clone(), vec![x]].concat()))
                .collect();
        }
        out
    };
    let mut cands = Vec::new();
    for l in vectors(nprimes) {
        for k in vectors(nprimes) {
            cands.push(Template::I { l: l.clone(), k: k.clone() });
            if regime == Regime::FullSupport {
                cands.push(Template::II { l: l.clone(), k: k.clone() });
            }
        }
    }
    if regime == Regime::FullSupport {
        for a in 0..nprimes {
            for x in 0..=bound {
                for y in 0..=bound {
                    for b in 0..nprimes {
                        cands.push(Template::III { i: a, j: b, k: x, l: y });
                    }
                    cands.push(Template::IV { i: a, k: x, l: y });
                    for v in vectors(nprimes) {
                        cands.push(Template::V { j: a, l: y, k: x, ls: v.clone() });
                        cands.push(Template::VI { j: a, l: y, k: x, ks: v });
                    }
                }
            }
        }
    }
    let dummy: Vec<u32> = (0..nprimes).map(|i| [3, 5, 7, 11, 13, 17, 19, 23][i]).collect();
    let mut out: Vec<Template> = cands
        .into_iter()
        .filter(|t| classify(&profile(&t.word(&dummy), &dummy), regime).as_ref() == Some(t))
        .collect();
    out.sort();
    out.dedup();
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NfEntry {
    pub template: Template,
    pub t: u8,
    pub coeff: Q,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub primes: Vec<u32>,
    pub entries: Vec<NfEntry>,
}

impl NormalForm {
    /// Sorts entries and merges duplicates, dropping zero coefficients.
    pub fn new(primes: &[u32], entries: impl IntoIterator<Item = NfEntry>) -> NormalForm {
        let mut merged: std::collections::BTreeMap<(Word, Reverse<u8>, Template), Q> = Default::default();
        for e in entries {
            let key = (e.template.word(primes), Reverse(e.t), e.template.clone());
            *merged.entry(key).or_default() += e.coeff;
        }
        let entries = merged
            .into_iter()
            .filter(|(_, c)| !num_traits::Zero::is_zero(c))
            .map(|((_, t, template), coeff)| NfEntry { template, t: t.0, coeff })
            .collect();
        NormalForm { primes: primes.to_vec(), entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_element(&self) -> AlgebraElement {
        let mut z = AlgebraElement::zero();
        for e in &self.entries {
            z.add_term(e.template.monomial(e.t, &self.primes), e.coeff.clone());
        }
        z
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.entries
                .iter()
                .map(|e| {
                    json!({
                        "tag": e.template.tag(),
                        "t": e.t,
                        "exponents": e.template.exponents_json(&self.primes),
                        "coeff": fmt_q(&e.coeff),
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p1 = self.primes[0];
        let body = |e: &NfEntry| {
            let w = e.template.word(&self.primes);
            let mut s = String::new();
            if e.t == 1 {
                s.push_str(&format!("(res{p1}*ind{p1})"));
                if !w.is_empty() {
                    s.push('*');
                }
            }
            if !w.is_empty() {
                s.push_str(&w.to_string());
            }
            s
        };
        f.write_str(&fmt_lincomb(self.entries.iter().map(|e| (body(e), &e.coeff)), "0"))
    }
}
