//! Module families closed under res_p/ind_p, and the finite test sets used
//! to decide equality of operators on them.

use crate::arith::{divisors, gcd, is_prime};
use crate::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::module::{simples_at, Sign, SimpleModule};
use crate::word::{Kind, Word};
use serde::{Deserialize, Serialize};

/// Largest prime set a family may use.
pub const MAX_PRIMES: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    OddOnly,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    /// Some seed is 1, so the family has levels built from P alone.
    FullSupport,
    NoFullSupport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyConfig {
    primes: Vec<u32>,
    seeds: Vec<u64>,
    parity: Parity,
    /// Fixed exponent cap `D + 1` for test sets; `None` sizes them per element.
    depth: Option<u32>,
}

impl FamilyConfig {
    pub fn new(primes: &[u32], seeds: &[u64], parity: Parity) -> Result<FamilyConfig> {
        let mut primes = primes.to_vec();
        primes.sort_unstable();
        primes.dedup();
        let mut seeds = seeds.to_vec();
        seeds.sort_unstable();
        seeds.dedup();
        if primes.is_empty() {
            return Err(Error::Config("empty prime set".into()));
        }
        if primes.len() > MAX_PRIMES {
            return Err(Error::Config(format!("at most {MAX_PRIMES} primes")));
        }
        if seeds.is_empty() {
            return Err(Error::Config("empty seed set".into()));
        }
        for &p in &primes {
            if !is_prime(p as u64) {
                return Err(Error::NotPrime(p as u64));
            }
            for &m in &seeds {
                if m == 0 || gcd(m, p as u64) != 1 {
                    return Err(Error::Config(format!("seed {m} is not coprime to {p}")));
                }
            }
        }
        if parity == Parity::OddOnly {
            if primes.contains(&2) {
                return Err(Error::Config("odd-only family cannot contain 2".into()));
            }
            if let Some(m) = seeds.iter().find(|m| *m % 2 == 0) {
                return Err(Error::Config(format!("odd-only family has even seed {m}")));
            }
        }
        Ok(FamilyConfig { primes, seeds, parity, depth: None })
    }

    /// P = {3,5}, seeds {1,7}, odd levels only.
    pub fn default_odd() -> FamilyConfig {
        FamilyConfig::new(&[3, 5], &[1, 7], Parity::OddOnly).unwrap()
    }

    /// P = {3,5}, seed 7 only.
    pub fn default_no_full_support() -> FamilyConfig {
        FamilyConfig::new(&[3, 5], &[7], Parity::OddOnly).unwrap()
    }

    pub fn with_depth(mut self, depth: Option<u32>) -> FamilyConfig {
        self.depth = depth;
        self
    }

    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    pub fn seeds(&self) -> &[u64] {
        &self.seeds
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn depth(&self) -> Option<u32> {
        self.depth
    }

    pub fn regime(&self) -> Regime {
        if self.seeds.contains(&1) {
            Regime::FullSupport
        } else {
            Regime::NoFullSupport
        }
    }

    pub fn smallest_prime(&self) -> u32 {
        self.primes[0]
    }

    pub fn check_primes(&self, z: &AlgebraElement) -> Result<()> {
        match z.primes().into_iter().find(|p| !self.primes.contains(p)) {
            Some(p) => Err(Error::PrimeNotInFamily(p)),
            None => Ok(()),
        }
    }

    /// Levels `m ∏ p^{e_p}` with `e_p <= caps[p]` and `n >= 3`, ascending.
    pub fn levels(&self, caps: &[u32]) -> Vec<u64> {
        let mut out = Vec::new();
        for &m in &self.seeds {
            let mut stack = vec![(0usize, m)];
            while let Some((i, n)) = stack.pop() {
                if i == self.primes.len() {
                    if n >= 3 {
                        out.push(n);
                    }
                    continue;
                }
                let mut x = n;
                for _ in 0..=caps[i] {
                    stack.push((i + 1, x));
                    x *= self.primes[i] as u64;
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Exponent caps for deciding identities among `words`.
    pub fn caps_for<'a>(&self, words: impl IntoIterator<Item = &'a Word>) -> Vec<u32> {
        if let Some(d) = self.depth {
            return vec![d + 1; self.primes.len()];
        }
        let mut max_len = 0;
        let mut res = vec![0u32; self.primes.len()];
        for w in words {
            max_len = max_len.max(w.len() as u32);
            for (i, &p) in self.primes.iter().enumerate() {
                res[i] = res[i].max(w.count(Kind::Res, p) as u32);
            }
        }
        res.iter().map(|r| (*r).min(max_len) + 1).collect()
    }
}

/// A finite set of simple modules of the family.
#[derive(Debug, Clone)]
pub struct TestSet {
    pub modules: Vec<SimpleModule>,
}

impl TestSet {
    /// Every simple at every level within `caps`.
    pub fn full(cfg: &FamilyConfig, caps: &[u32]) -> TestSet {
        let modules = cfg.levels(caps).into_iter().flat_map(simples_at).collect();
        TestSet { modules }
    }

    /// One representative per Galois orbit: the one-dimensional simples and
    /// `W_g(n)` for each divisor `g < n/2`. Every `W_k(n)` is the image of
    /// `W_{gcd(k,n)}(n)` under a Galois automorphism fixing all one-dimensional
    /// characters, and those automorphisms commute with res/ind, so linear
    /// identities among operators hold on the whole level iff they hold here.
    pub fn reduced(cfg: &FamilyConfig, caps: &[u32]) -> TestSet {
        let mut modules = Vec::new();
        for n in cfg.levels(caps) {
            modules.push(SimpleModule::V { n, a: Sign::Plus, b: Sign::Plus });
            modules.push(SimpleModule::V { n, a: Sign::Plus, b: Sign::Minus });
            if n % 2 == 0 {
                modules.push(SimpleModule::V { n, a: Sign::Minus, b: Sign::Plus });
                modules.push(SimpleModule::V { n, a: Sign::Minus, b: Sign::Minus });
            }
            modules.extend(divisors(n).into_iter().filter(|g| 2 * g < n).map(|k| SimpleModule::W { n, k }));
        }
        TestSet { modules }
    }

    pub fn for_elements(cfg: &FamilyConfig, zs: &[&AlgebraElement]) -> TestSet {
        let caps = cfg.caps_for(zs.iter().flat_map(|z| z.words()));
        TestSet::reduced(cfg, &caps)
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }
}
