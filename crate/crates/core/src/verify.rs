//! Verification suites with JSON reports.

use crate::arith::Q;
use crate::branching::{act_on_simple, induce, restrict, restriction_defined};
use crate::diagram::Diagram;
use crate::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::family::{FamilyConfig, Parity, Regime, TestSet};
use crate::module::{simples_at, SimpleModule};
use crate::normal_form::enumerate_templates;
use crate::oracle::{oracle_induce, oracle_restrict};
use crate::rewrite::rewrite_syntactic;
use crate::semantic::{action_rank, difference_on_family, equals_on_family, find_difference, normal_form_semantic};
use crate::structure::{bicyclic_coords, idempotents, project_t, verify_p2_relations, BicyclicCoords, Quotient};
use crate::word::{has_total_nadir, Kind, Symbol, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;

pub const SUITES: &[&str] =
    &["oracle", "relations", "reorder", "basis", "idempotents", "center", "p2", "bicyclic", "agreement", "diagram"];

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: &str, checks: Vec<Check>) -> SuiteReport {
        SuiteReport { suite: suite.into(), passed: checks.iter().all(|c| c.passed), checks }
    }
}

fn check(name: impl Into<String>, count: usize, counterexample: Option<String>) -> Check {
    Check { name: name.into(), passed: counterexample.is_none(), count, counterexample }
}

/// First failure of `f` over `items`, sharded across threads.
fn par_find<T: Sync, F>(items: &[T], f: F) -> Option<String>
where
    F: Fn(&T) -> Option<String> + Sync,
{
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(16);
    let chunk = items.len().div_ceil(threads).max(1);
    std::thread::scope(|s| {
        let handles: Vec<_> = items.chunks(chunk).map(|c| s.spawn(|| c.iter().find_map(&f))).collect();
        handles.into_iter().find_map(|h| h.join().expect("worker panicked"))
    })
}

pub fn random_word(rng: &mut impl Rng, primes: &[u32], max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word(
        (0..len)
            .map(|_| {
                let p = primes[rng.gen_range(0..primes.len())];
                if rng.gen_bool(0.5) { Symbol::res(p) } else { Symbol::ind(p) }
            })
            .collect(),
    )
}

pub fn random_element(rng: &mut impl Rng, primes: &[u32], max_len: usize) -> AlgebraElement {
    let mut z = AlgebraElement::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let c = Q::new(rng.gen_range(-5..=5).into(), rng.gen_range(1..=3).into());
        z.add_term(random_word(rng, primes, max_len), c);
    }
    z
}

/// Every word of length at most `max_len`.
pub fn all_words(primes: &[u32], max_len: usize) -> Vec<Word> {
    let syms: Vec<Symbol> = primes.iter().flat_map(|&p| [Symbol::res(p), Symbol::ind(p)]).collect();
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| syms.iter().map(move |s| w.concat(&Word(vec![*s]))))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Branching rules against characters, for every simple with `3 <= n <= n_max`.
pub fn suite_oracle(n_max: u64, primes: &[u32]) -> Result<SuiteReport> {
    let modules: Vec<SimpleModule> = (3..=n_max).flat_map(simples_at).collect();
    let mut checks = Vec::new();
    for &p in primes {
        let res = par_find(&modules, |&m| {
            let ours = restrict(p, m);
            match oracle_restrict(p, m) {
                Ok(o) if o == ours => None,
                Ok(o) => Some(format!("res{p} {m}: {ours} vs oracle {o}")),
                Err(e) => Some(format!("res{p} {m}: {e}")),
            }
        });
        let n_res = modules.iter().filter(|m| restriction_defined(p, m.level())).count();
        checks.push(check(format!("restrict p={p}"), n_res, res));
        let ind = par_find(&modules, |&m| {
            let ours = induce(p, m);
            match oracle_induce(p, m) {
                Ok(o) if o == ours => None,
                Ok(o) => Some(format!("ind{p} {m}: {ours} vs oracle {o}")),
                Err(e) => Some(format!("ind{p} {m}: {e}")),
            }
        });
        checks.push(check(format!("induce p={p}"), modules.len(), ind));
    }
    Ok(SuiteReport::new("oracle", checks))
}

fn e(s: &str) -> AlgebraElement {
    s.parse().expect("built-in element text")
}

fn operator_check(name: String, l: &AlgebraElement, r: &AlgebraElement, modules: &[SimpleModule]) -> Check {
    let bad = par_find(modules, |&m| {
        let (a, b) = (act_on_simple(l, m), act_on_simple(r, m));
        (a != b).then(|| format!("{m}: {a} != {b}"))
    });
    check(name, modules.len(), bad)
}

/// Operator identities on every simple of the test set with exponent cap `depth + 1`.
pub fn suite_relations(cfg: &FamilyConfig, depth: u32) -> Result<SuiteReport> {
    let dcfg = cfg.clone().with_depth(Some(depth));
    let caps = dcfg.caps_for(std::iter::empty());
    let modules = TestSet::full(&dcfg, &caps).modules;
    let mut checks = Vec::new();
    let primes = cfg.primes();
    for &p in primes {
        for &r in primes.iter().filter(|&&r| r > p) {
            checks.push(operator_check(
                format!("res{p}*res{r} = res{r}*res{p}"),
                &e(&format!("res{p}*res{r}")),
                &e(&format!("res{r}*res{p}")),
                &modules,
            ));
            checks.push(operator_check(
                format!("ind{p}*ind{r} = ind{r}*ind{p}"),
                &e(&format!("ind{p}*ind{r}")),
                &e(&format!("ind{r}*ind{p}")),
                &modules,
            ));
        }
        for &r in primes.iter().filter(|&&r| r != p) {
            let domain: Vec<SimpleModule> =
                modules.iter().copied().filter(|&m| !restrict(p, m).is_zero()).collect();
            checks.push(operator_check(
                format!("res{p}*ind{r} = ind{r}*res{p} where res{p} is nonzero"),
                &e(&format!("res{p}*ind{r}")),
                &e(&format!("ind{r}*res{p}")),
                &domain,
            ));
        }
        checks.push(operator_check(
            format!("res{p}^2*ind{p}^2 = {}*res{p}*ind{p} - {p}", p + 1),
            &e(&format!("res{p}^2*ind{p}^2")),
            &e(&format!("{}*res{p}*ind{p} - {p}", p + 1)),
            &modules,
        ));
        for &r in primes.iter().filter(|&&r| r > p) {
            let side = |x: u32| e(&format!("1/{}*res{x}*ind{x} - {x}/{}", x - 1, x - 1));
            checks.push(operator_check(
                format!("(res{p}*ind{p} - {p})/{} = (res{r}*ind{r} - {r})/{}", p - 1, r - 1),
                &side(p),
                &side(r),
                &modules,
            ));
        }
    }
    Ok(SuiteReport::new("relations", checks))
}

/// Words with equal per-prime subsequences and equal total-nadir status act alike.
pub fn suite_reorder(cfg: &FamilyConfig, max_len: usize) -> Result<SuiteReport> {
    let primes = cfg.primes();
    let mut classes: BTreeMap<(Vec<Word>, bool), Vec<Word>> = BTreeMap::new();
    for w in all_words(primes, max_len) {
        let key = (primes.iter().map(|&p| w.restricted_to(p)).collect(), has_total_nadir(&w, primes));
        classes.entry(key).or_default().push(w);
    }
    let pairs: Vec<(Word, Word)> = classes
        .values()
        .flat_map(|ws| ws[1..].iter().map(|w| (ws[0].clone(), w.clone())))
        .collect();
    let bad = par_find(&pairs, |(a, b)| {
        match difference_on_family(&AlgebraElement::word(a.clone()), &AlgebraElement::word(b.clone()), cfg) {
            Ok(None) => None,
            Ok(Some(w)) => Some(format!("{a} vs {b} on {}: {} != {}", w.module, w.left, w.right)),
            Err(e) => Some(e.to_string()),
        }
    });
    Ok(SuiteReport::new("reorder", vec![check(format!("reorderings up to length {max_len}"), pairs.len(), bad)]))
}

/// Basis monomials with exponents up to `bound` act independently, in both
/// elimination orders; `{z, res_p1 ind_p1 z}` is independent for sampled `z`.
pub fn suite_basis(cfg: &FamilyConfig, bound: u32, samples: usize, seed: u64) -> Result<SuiteReport> {
    let templates = enumerate_templates(cfg.primes().len(), bound, cfg.regime());
    let monomials: Vec<_> = templates.iter().flat_map(|t| [(t.clone(), 0u8), (t.clone(), 1u8)]).collect();
    let n = monomials.len();
    let mut checks = Vec::new();
    for reversed in [false, true] {
        let r = action_rank(&monomials, cfg, reversed)?;
        let name = format!("rank of {n} monomials, {} order", if reversed { "reversed" } else { "forward" });
        checks.push(check(name, n, (r != n).then(|| format!("rank {r} < {n}"))));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = None;
    for _ in 0..samples {
        let t = &templates[rng.gen_range(0..templates.len())];
        if action_rank(&[(t.clone(), 0), (t.clone(), 1)], cfg, false)? != 2 {
            bad = Some(t.word(cfg.primes()).to_string());
            break;
        }
    }
    checks.push(check("z and res_p1*ind_p1*z independent", samples, bad));
    Ok(SuiteReport::new("basis", checks))
}

pub fn suite_idempotents(cfg: &FamilyConfig, samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let one = AlgebraElement::one();
    let zero = AlgebraElement::zero();
    for &qp in cfg.primes() {
        let (e1, e2) = idempotents(qp);
        let eq = |a: &AlgebraElement, b: &AlgebraElement| -> Result<Option<String>> {
            Ok(difference_on_family(a, b, cfg)?.map(|w| format!("{}: {} != {}", w.module, w.left, w.right)))
        };
        checks.push(check(format!("e1^2 = e1 (q={qp})"), 1, eq(&e1.mul(&e1), &e1)?));
        checks.push(check(format!("e2^2 = e2 (q={qp})"), 1, eq(&e2.mul(&e2), &e2)?));
        checks.push(check(format!("e1*e2 = 0 (q={qp})"), 1, eq(&e1.mul(&e2), &zero)?));
        let sum = e1.add(&e2);
        checks.push(check(format!("e1 + e2 = 1 (q={qp})"), 1, (sum != one).then(|| sum.to_string())));
    }
    let (e1, e2) = idempotents(cfg.smallest_prime());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut split, mut recombine) = (None, None);
    for _ in 0..samples {
        let z = random_element(&mut rng, cfg.primes(), 4);
        if split.is_none() && !equals_on_family(&z.mul(&e1).add(&z.mul(&e2)), &z, cfg)? {
            split = Some(z.to_string());
        }
        let p = cfg.smallest_prime();
        let pi1 = project_t(&z, Quotient::T1, p, cfg)?.to_element();
        let pi2 = project_t(&z, Quotient::T2, p, cfg)?.to_element();
        if recombine.is_none() && !equals_on_family(&pi1.mul(&e1).add(&pi2.mul(&e2)), &z, cfg)? {
            recombine = Some(z.to_string());
        }
    }
    checks.push(check("z = z*e1 + z*e2", samples, split));
    checks.push(check("z = pi1(z)*e1 + pi2(z)*e2", samples, recombine));
    Ok(SuiteReport::new("idempotents", checks))
}

pub fn p2_config() -> FamilyConfig {
    FamilyConfig::new(&[2], &[1, 3], Parity::All).expect("valid config")
}

/// `res_q ind_q` commutes with each generator on every simple of the test
/// set; `res_2 ind_2` does not on the even family.
pub fn suite_center(cfg: &FamilyConfig, depth: u32) -> Result<SuiteReport> {
    let dcfg = cfg.clone().with_depth(Some(depth));
    let modules = TestSet::full(&dcfg, &dcfg.caps_for(std::iter::empty())).modules;
    let mut checks = Vec::new();
    for &qp in cfg.primes() {
        let c = e(&format!("res{qp}*ind{qp}"));
        for &p in cfg.primes() {
            for g in [AlgebraElement::symbol(Symbol::res(p)), AlgebraElement::symbol(Symbol::ind(p))] {
                checks.push(operator_check(format!("res{qp}*ind{qp} commutes with {g}"), &c.mul(&g), &g.mul(&c), &modules));
            }
        }
    }
    let pcfg = p2_config();
    let c2 = e("res2*ind2");
    let r2 = e("res2");
    let even = TestSet::reduced(&pcfg, &pcfg.caps_for(c2.mul(&r2).words()));
    let witness = find_difference(&r2.mul(&c2), &c2.mul(&r2), &even);
    checks.push(Check {
        name: "res2*ind2 is not central".into(),
        passed: witness.is_some(),
        count: even.len(),
        counterexample: witness.map(|w| format!("{}: res2*res2*ind2 -> {}, res2*ind2*res2 -> {}", w.module, w.left, w.right)),
    });
    Ok(SuiteReport::new("center", checks))
}

pub fn suite_p2(n_max: u64) -> Result<SuiteReport> {
    let rep = verify_p2_relations(&p2_config(), n_max)?;
    let mut checks: Vec<Check> = rep
        .identities
        .iter()
        .map(|id| {
            let bad = rep.failures.iter().find(|f| &f.identity == id);
            check(id.clone(), rep.modules_checked, bad.map(|f| format!("{}: {} != {}", f.module, f.left, f.right)))
        })
        .collect();
    checks.push(Check {
        name: "res2*ind2 is not central".into(),
        passed: rep.noncentral_witness.is_some(),
        count: rep.modules_checked,
        counterexample: rep.noncentral_witness.clone(),
    });
    Ok(SuiteReport::new("p2", checks))
}

/// Reduction in the tensor power of the bicyclic monoid, `res_p ind_p = 1`.
pub fn bicyclic_reduce(w: &Word, primes: &[u32]) -> BicyclicCoords {
    let key = primes
        .iter()
        .map(|&p| {
            let mut stack: Vec<Kind> = Vec::new();
            for s in w.symbols().iter().filter(|s| s.p == p) {
                if s.kind == Kind::Ind && stack.last() == Some(&Kind::Res) {
                    stack.pop();
                } else {
                    stack.push(s.kind);
                }
            }
            let l = stack.iter().filter(|k| **k == Kind::Ind).count() as u32;
            (stack.len() as u32 - l, l)
        })
        .collect();
    BicyclicCoords(BTreeMap::from([(key, Q::from_integer(1.into()))]))
}

pub fn suite_bicyclic(cfg: &FamilyConfig, samples: usize, seed: u64) -> Result<SuiteReport> {
    if cfg.regime() != Regime::NoFullSupport {
        return Err(Error::Config("the bicyclic suite needs a family without full support".into()));
    }
    let primes = cfg.primes();
    let (_, e2) = idempotents(cfg.smallest_prime());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut bad_mul, mut bad_brute, mut bad_action) = (None, None, None);
    for i in 0..samples {
        let (u, v) = (random_word(&mut rng, primes, 4), random_word(&mut rng, primes, 4));
        let uv = u.concat(&v);
        let prod = bicyclic_coords(&AlgebraElement::word(uv.clone()), cfg)?;
        let cu = bicyclic_coords(&AlgebraElement::word(u.clone()), cfg)?;
        let cv = bicyclic_coords(&AlgebraElement::word(v.clone()), cfg)?;
        if bad_mul.is_none() && cu.mul(&cv) != prod {
            bad_mul = Some(format!("{u} * {v}"));
        }
        if bad_brute.is_none() && bicyclic_reduce(&uv, primes) != prod {
            bad_brute = Some(format!("{uv}"));
        }
        // the coordinates name an element acting like uv on the second summand
        if i < 20 && bad_action.is_none() {
            let mut back = AlgebraElement::zero();
            for (key, c) in &prod.0 {
                let mut w = Vec::new();
                for (j, &(_, l)) in key.iter().enumerate() {
                    w.extend(std::iter::repeat_n(Symbol::ind(primes[j]), l as usize));
                }
                for (j, &(k, _)) in key.iter().enumerate() {
                    w.extend(std::iter::repeat_n(Symbol::res(primes[j]), k as usize));
                }
                back.add_term(Word(w), c.clone());
            }
            if !equals_on_family(&back.mul(&e2), &AlgebraElement::word(uv.clone()).mul(&e2), cfg)? {
                bad_action = Some(format!("{uv}"));
            }
        }
    }
    Ok(SuiteReport::new(
        "bicyclic",
        vec![
            check("coordinates are multiplicative", samples, bad_mul),
            check("coordinates match bicyclic reduction", samples, bad_brute),
            check("coordinates act like the product on the second summand", samples.min(20), bad_action),
        ],
    ))
}

/// Rewriting and solving give identical normal forms on every short word.
pub fn suite_agreement(cfg: &FamilyConfig, max_len: usize) -> Result<SuiteReport> {
    let words = all_words(cfg.primes(), max_len);
    let bad = par_find(&words, |w| {
        let z = AlgebraElement::word(w.clone());
        match (rewrite_syntactic(&z, cfg), normal_form_semantic(&z, cfg)) {
            (Ok(a), Ok(b)) if a == b => None,
            (Ok(a), Ok(b)) => Some(format!("{w}: rewriting {a}, solving {b}")),
            (a, b) => Some(format!("{w}: {:?} / {:?}", a.err(), b.err())),
        }
    });
    Ok(SuiteReport::new("agreement", vec![check(format!("words up to length {max_len}"), words.len(), bad)]))
}

/// Component count of the diagram of a single tower `m, mp, ..., mp^(levels-1)`.
pub fn suite_diagram(m: u64, p: u32, levels: u32) -> Result<SuiteReport> {
    let lv: Vec<u64> = (0..levels).map(|i| m * (p as u64).pow(i)).collect();
    let d = Diagram::from_levels(&lv, &[p]);
    let got = d.component_count();
    let want = (m as usize).div_ceil(2);
    Ok(SuiteReport::new(
        "diagram",
        vec![check(
            format!("m={m}, p={p}, {levels} levels has {want} components"),
            d.vertices.len(),
            (got != want).then(|| format!("{got} components")),
        )],
    ))
}

/// Runs a suite by name with its default parameters.
pub fn run_suite(name: &str, cfg: &FamilyConfig) -> Result<SuiteReport> {
    let seed = 0x5eed;
    match name {
        "oracle" => suite_oracle(200, &[2, 3, 5, 7, 11]),
        "relations" => suite_relations(cfg, cfg.depth().unwrap_or(3)),
        "reorder" => suite_reorder(cfg, 5),
        "basis" => suite_basis(cfg, 2, 20, seed),
        "idempotents" => suite_idempotents(cfg, 50, seed),
        "center" => suite_center(cfg, cfg.depth().unwrap_or(3)),
        "p2" => suite_p2(192),
        "bicyclic" => {
            let nfs = FamilyConfig::new(cfg.primes(), &[7], Parity::OddOnly)?;
            suite_bicyclic(if cfg.regime() == Regime::NoFullSupport { cfg } else { &nfs }, 100, seed)
        }
        "agreement" => suite_agreement(cfg, 5),
        "diagram" => suite_diagram(5, 3, 3),
        _ => Err(Error::Config(format!("unknown suite {name}; expected one of {}", SUITES.join(", ")))),
    }
}
