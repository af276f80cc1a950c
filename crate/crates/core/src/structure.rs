//! Central idempotents, the two quotients, the bicyclic picture and the
//! relations specific to the prime 2.

use crate::arith::{q, Q};
use crate::branching::act_on_simple;
use crate::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::family::{FamilyConfig, Regime, TestSet};
use crate::module::simples_at;
use crate::normal_form::{NfEntry, NormalForm, Template};
use crate::rewrite::rewrite_syntactic;
use crate::semantic::{find_difference, Witness};
use crate::word::{Kind, Symbol, Word};
use crate::SimpleModule;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

fn c(p: u32) -> AlgebraElement {
    AlgebraElement::word(Word(vec![Symbol::res(p), Symbol::ind(p)]))
}

/// `((c_q - 1)/(q-1), (q - c_q)/(q-1))` with `c_q = res_q ind_q`.
pub fn idempotents(qp: u32) -> (AlgebraElement, AlgebraElement) {
    let inv = Q::one() / q(qp as i64 - 1);
    let e1 = c(qp).sub(&AlgebraElement::one()).scale(&inv);
    let e2 = AlgebraElement::scalar(q(qp as i64)).sub(&c(qp)).scale(&inv);
    (e1, e2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quotient {
    /// `res_p ind_p = p`
    T1,
    /// `res_p ind_p = 1`
    T2,
}

/// Normal form in the quotient where `res_p ind_p` acts as `p` or as `1`.
/// The quotient does not depend on `p`.
pub fn project_t(z: &AlgebraElement, which: Quotient, p: u32, cfg: &FamilyConfig) -> Result<NormalForm> {
    if !cfg.primes().contains(&p) {
        return Err(Error::PrimeNotInFamily(p));
    }
    let nf = rewrite_syntactic(z, cfg)?;
    let value = match which {
        Quotient::T1 => q(cfg.smallest_prime() as i64),
        Quotient::T2 => Q::one(),
    };
    let entries = nf.entries.iter().map(|e| NfEntry {
        template: e.template.clone(),
        t: 0,
        coeff: if e.t == 1 { &e.coeff * &value } else { e.coeff.clone() },
    });
    Ok(NormalForm::new(cfg.primes(), entries))
}

/// The isomorphism from the first quotient to the second,
/// `res_p -> res_p`, `ind_p -> p ind_p`.
pub fn t1_to_t2(nf: &NormalForm) -> Result<NormalForm> {
    let mut entries = Vec::new();
    for e in &nf.entries {
        if e.t != 0 {
            return Err(Error::Domain {
                term: e.template.word(&nf.primes).to_string(),
                why: "not in quotient normal form".into(),
            });
        }
        let w = e.template.word(&nf.primes);
        let factor = w
            .symbols()
            .iter()
            .filter(|s| s.kind == Kind::Ind)
            .fold(Q::one(), |acc, s| acc * q(s.p as i64));
        entries.push(NfEntry { template: e.template.clone(), t: 0, coeff: &e.coeff * factor });
    }
    Ok(NormalForm::new(&nf.primes, entries))
}

/// Per prime `(k, l)`: the basis element `b^l a^k` of a bicyclic factor,
/// `a = res`, `b = ind`.
pub type BicyclicKey = Vec<(u32, u32)>;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BicyclicCoords(pub BTreeMap<BicyclicKey, Q>);

impl BicyclicCoords {
    pub fn mul(&self, other: &BicyclicCoords) -> BicyclicCoords {
        let mut out: BTreeMap<BicyclicKey, Q> = BTreeMap::new();
        for (x, cx) in &self.0 {
            for (y, cy) in &other.0 {
                let key = x.iter().zip(y).map(|(&a, &b)| bicyclic_mul(a, b)).collect();
                *out.entry(key).or_insert_with(Q::zero) += cx * cy;
            }
        }
        out.retain(|_, v| !v.is_zero());
        BicyclicCoords(out)
    }
}

/// `(b^l a^k)(b^l' a^k')` in the bicyclic monoid.
pub fn bicyclic_mul((k, l): (u32, u32), (k2, l2): (u32, u32)) -> (u32, u32) {
    if k >= l2 {
        (k - l2 + k2, l)
    } else {
        (k2, l + l2 - k)
    }
}

/// Coordinates of the image in the second quotient, in the tensor power of
/// the bicyclic algebra. Needs a family without full support.
pub fn bicyclic_coords(z: &AlgebraElement, cfg: &FamilyConfig) -> Result<BicyclicCoords> {
    if cfg.regime() != Regime::NoFullSupport {
        return Err(Error::Config("bicyclic coordinates need a family without full support".into()));
    }
    let nf = project_t(z, Quotient::T2, cfg.smallest_prime(), cfg)?;
    let mut out = BTreeMap::new();
    for e in nf.entries {
        match e.template {
            Template::I { k, l } => {
                out.insert(k.iter().zip(&l).map(|(&k, &l)| (k, l)).collect(), e.coeff);
            }
            t => return Err(Error::NormalForm(format!("unexpected template {:?}", t.tag()))),
        }
    }
    Ok(BicyclicCoords(out))
}

#[derive(Debug, Clone, Serialize)]
pub struct P2Failure {
    pub identity: String,
    pub module: String,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct P2Report {
    pub identities: Vec<String>,
    pub modules_checked: usize,
    pub checks: usize,
    pub failures: Vec<P2Failure>,
    /// A module on which `res_2 ind_2` fails to commute with `res_2`.
    pub noncentral_witness: Option<String>,
}

impl P2Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.noncentral_witness.is_some()
    }
}

pub fn p2_identities() -> Vec<(String, AlgebraElement, AlgebraElement)> {
    let e = |s: &str| s.parse::<AlgebraElement>().expect("identity text");
    let x = e("res2^2*ind2^2");
    vec![
        ("res2^3*ind2^3 = 3*res2^2*ind2^2 - 2*res2*ind2".into(), e("res2^3*ind2^3"), e("3*res2^2*ind2^2 - 2*res2*ind2")),
        ("ind2*res2*ind2 = 2*ind2".into(), e("ind2*res2*ind2"), e("2*ind2")),
        ("res2*ind2*res2 = 2*res2".into(), e("res2*ind2*res2"), e("2*res2")),
        (
            "(res2^2*ind2^2)^4 = 6*(res2^2*ind2^2)^3 - 8*(res2^2*ind2^2)^2".into(),
            x.pow(4),
            x.pow(3).scale(&q(6)).sub(&x.pow(2).scale(&q(8))),
        ),
    ]
}

/// Checks the prime-2 identities on every simple of every even level
/// `n <= n_max` of the family, and looks for a module showing that
/// `res_2 ind_2` is not central.
pub fn verify_p2_relations(cfg: &FamilyConfig, n_max: u64) -> Result<P2Report> {
    let i2 = cfg.primes().iter().position(|&p| p == 2).ok_or(Error::PrimeNotInFamily(2))?;
    let mut caps = vec![0; cfg.primes().len()];
    caps[i2] = 64 - n_max.leading_zeros();
    let levels: Vec<u64> = cfg.levels(&caps).into_iter().filter(|n| n % 2 == 0 && *n <= n_max).collect();
    let modules: Vec<SimpleModule> = levels.iter().flat_map(|&n| simples_at(n)).collect();
    let ids = p2_identities();
    let mut failures = Vec::new();
    for &m in &modules {
        for (name, l, r) in &ids {
            let (lv, rv) = (act_on_simple(l, m), act_on_simple(r, m));
            if lv != rv {
                failures.push(P2Failure {
                    identity: name.clone(),
                    module: m.to_string(),
                    left: lv.to_string(),
                    right: rv.to_string(),
                });
            }
        }
    }
    let res2 = AlgebraElement::symbol(Symbol::res(2));
    let witness: Option<Witness> =
        find_difference(&res2.mul(&c(2)), &c(2).mul(&res2), &TestSet { modules: modules.clone() });
    Ok(P2Report {
        identities: ids.into_iter().map(|(n, _, _)| n).collect(),
        modules_checked: modules.len(),
        checks: modules.len() * 4,
        failures,
        noncentral_witness: witness.map(|w| format!("{}: {} != {}", w.module, w.left, w.right)),
    })
}
