//! Deciding identities of operators by their action on a family's test set.

use crate::arith::Q;
use crate::branching::{act_on_simple, apply_word_int};
use crate::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::family::{FamilyConfig, TestSet};
use crate::groth::{GrothVector, IntGroth};
use crate::linalg::{Echelon, SparseRow, System};
use crate::module::SimpleModule;
use crate::normal_form::{classify, NfEntry, NormalForm, Template};
use crate::word::{profile, Word};
use std::collections::{BTreeMap, BTreeSet};

/// A module on which two elements act differently.
#[derive(Debug, Clone)]
pub struct Witness {
    pub module: SimpleModule,
    pub left: GrothVector,
    pub right: GrothVector,
}

pub fn find_difference(z1: &AlgebraElement, z2: &AlgebraElement, tests: &TestSet) -> Option<Witness> {
    let diff = z1.sub(z2);
    tests.modules.iter().find_map(|&m| {
        if act_on_simple(&diff, m).is_zero() {
            None
        } else {
            Some(Witness { module: m, left: act_on_simple(z1, m), right: act_on_simple(z2, m) })
        }
    })
}

pub fn equals_on_family(z1: &AlgebraElement, z2: &AlgebraElement, cfg: &FamilyConfig) -> Result<bool> {
    Ok(difference_on_family(z1, z2, cfg)?.is_none())
}

pub fn difference_on_family(
    z1: &AlgebraElement,
    z2: &AlgebraElement,
    cfg: &FamilyConfig,
) -> Result<Option<Witness>> {
    cfg.check_primes(z1)?;
    cfg.check_primes(z2)?;
    let tests = TestSet::for_elements(cfg, &[z1, z2]);
    Ok(find_difference(z1, z2, &tests))
}

pub fn commutator_is_zero(z: &AlgebraElement, w: &AlgebraElement, cfg: &FamilyConfig) -> Result<bool> {
    equals_on_family(&z.mul(w), &w.mul(z), cfg)
}

fn word_of(primes: &[u32], m: &(Template, u8)) -> Word {
    m.0.monomial(m.1, primes)
}

/// Coefficients of `z` in the basis, solved from actions on the test set.
pub fn normal_form_semantic(z: &AlgebraElement, cfg: &FamilyConfig) -> Result<NormalForm> {
    cfg.check_primes(z)?;
    let primes = cfg.primes();
    let regime = cfg.regime();
    let mut unknowns: BTreeSet<(Template, u8)> = BTreeSet::new();
    for w in z.words() {
        let t = classify(&profile(w, primes), regime)
            .ok_or_else(|| Error::NormalForm(format!("no basis template matches {w}")))?;
        unknowns.insert((t.clone(), 0));
        unknowns.insert((t, 1));
    }
    let unknowns: Vec<(Template, u8)> = unknowns.into_iter().collect();
    let words: Vec<Word> = unknowns.iter().map(|u| word_of(primes, u)).collect();
    let caps = cfg.caps_for(z.words().chain(words.iter()));
    let tests = TestSet::reduced(cfg, &caps);
    let mut sys = System::new(unknowns.len());
    for &m in &tests.modules {
        let target = act_on_simple(z, m);
        let start = IntGroth::single(m);
        let acts: Vec<IntGroth> = words.iter().map(|w| apply_word_int(w, &start)).collect();
        let mut rows: BTreeMap<SimpleModule, SparseRow> = BTreeMap::new();
        for (j, a) in acts.iter().enumerate() {
            for (o, c) in a.iter() {
                rows.entry(*o).or_default().insert(j, Q::from_integer((*c).into()));
            }
        }
        for o in target.modules() {
            rows.entry(*o).or_default();
        }
        for (o, row) in rows {
            sys.add_equation(row, target.coeff(&o));
        }
    }
    let x = sys.solve()?;
    Ok(NormalForm::new(
        primes,
        unknowns.into_iter().zip(x).map(|((template, t), coeff)| NfEntry { template, t, coeff }),
    ))
}

/// Full column rank of the action matrix of the given monomials.
pub fn independence_check(monomials: &[(Template, u8)], cfg: &FamilyConfig) -> Result<bool> {
    Ok(action_rank(monomials, cfg, false)? == monomials.len())
}

/// Rank of the action matrix; `reversed` runs the elimination with columns
/// and test modules in reverse order.
pub fn action_rank(monomials: &[(Template, u8)], cfg: &FamilyConfig, reversed: bool) -> Result<usize> {
    let set: BTreeSet<&(Template, u8)> = monomials.iter().collect();
    if set.len() != monomials.len() {
        return Err(Error::NormalForm("repeated monomial".into()));
    }
    let primes = cfg.primes();
    let words: Vec<Word> = monomials.iter().map(|u| word_of(primes, u)).collect();
    let tests = TestSet::reduced(cfg, &cfg.caps_for(words.iter()));
    let ncols = words.len();
    let col = |j: usize| if reversed { ncols - 1 - j } else { j };
    let mut modules = tests.modules.clone();
    if reversed {
        modules.reverse();
    }
    let mut ech = Echelon::new();
    for m in modules {
        if ech.rank() == ncols {
            break;
        }
        let start = IntGroth::single(m);
        let mut rows: BTreeMap<SimpleModule, SparseRow> = BTreeMap::new();
        for (j, w) in words.iter().enumerate() {
            for (o, c) in apply_word_int(w, &start).iter() {
                rows.entry(*o).or_default().insert(col(j), Q::from_integer((*c).into()));
            }
        }
        for row in rows.into_values() {
            ech.insert(row);
        }
    }
    Ok(ech.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Parity;

    fn e(s: &str) -> AlgebraElement {
        s.parse().unwrap()
    }

    fn seeds1() -> FamilyConfig {
        FamilyConfig::new(&[3, 5], &[1], Parity::OddOnly).unwrap()
    }

    #[test]
    fn equality_examples() {
        let cfg = seeds1();
        assert!(equals_on_family(&e("ind5*res5*ind3*res3"), &e("ind3*res3*ind5*res5"), &cfg).unwrap());
        assert!(equals_on_family(&e("res3*ind5"), &e("res3*ind5"), &cfg).unwrap());
        assert!(!equals_on_family(&e("res3*ind3"), &e("3"), &cfg).unwrap());
        assert!(!equals_on_family(&e("ind3*ind5*res3*res5"), &e("ind5*res5*ind3*res3"), &cfg).unwrap());
        assert!(equals_on_family(&e("res7"), &e("res7"), &cfg).is_err());
    }

    #[test]
    fn semantic_examples() {
        let cfg = FamilyConfig::new(&[3, 5, 7], &[1], Parity::OddOnly).unwrap();
        let nf = |s: &str| normal_form_semantic(&e(s), &cfg).unwrap().to_string();
        assert_eq!(nf("ind3*res5^2*res3*ind5"), "2*(res3*ind3)*ind3*res3*res5 - ind3*res3*res5");
        assert_eq!(nf("1"), "1");
        assert_eq!(nf("0"), "0");
        assert_eq!(nf("res5*res7*res3*ind5*ind7*ind5"), "17*(res3*ind3)*res3*ind5 - 16*res3*ind5");
        assert_eq!(
            nf("res7*ind3*res3^2*ind7"),
            "1/5*(res3*ind3)*res5*ind3*res3^2*ind5 + 4/5*res5*ind3*res3^2*ind5"
        );
        assert_eq!(
            nf("ind3*res3*ind5*res3*ind3*res5*ind3*res3"),
            "4*(res3*ind3)*ind3*res3*ind5*res5 - 3*ind3*res3*ind5*res5"
        );
        assert_eq!(nf("res3*ind5*ind3*res5*ind3*res5"), "(res3*ind3)*ind5*res5^2*ind3");
        assert_eq!(nf("res3*ind5*res3*res5*ind3*res5"), "(res3*ind3)*res3*ind5*res5^2");
    }

    #[test]
    fn independence_examples() {
        let cfg = seeds1();
        let one = Template::unit(2);
        assert!(independence_check(&[(one.clone(), 0), (one.clone(), 1)], &cfg).unwrap());
        assert!(independence_check(&[(one.clone(), 0), (one, 0)], &cfg).is_err());
    }
}
