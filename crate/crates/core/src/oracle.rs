//! Character-theoretic cross-check of the branching rules, in floating point.

use crate::branching::restriction_defined;
use crate::error::{Error, Result};
use crate::groth::IntGroth;
use crate::module::{simples_at, Sign, SimpleModule};
use num_complex::Complex64;
use rustfft::FftPlanner;
use std::cell::RefCell;
use std::f64::consts::PI;

pub const TOLERANCE: f64 = 1e-6;

/// `r^rot s^refl` in D_{2n}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Elem {
    pub rot: u64,
    pub refl: bool,
}

impl Elem {
    /// `r^{-i} g r^i`.
    fn conj_by_rotation(self, i: u64, n: u64) -> Elem {
        if self.refl {
            let rot = (self.rot + 2 * (n - i % n)) % n;
            Elem { rot, refl: true }
        } else {
            self
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClassTable {
    pub n: u64,
    pub classes: Vec<(Elem, u64)>,
}

impl ConjClassTable {
    pub fn new(n: u64) -> ConjClassTable {
        assert!(n >= 3);
        let mut classes = vec![(Elem { rot: 0, refl: false }, 1)];
        for j in 1..=(n - 1) / 2 {
            classes.push((Elem { rot: j, refl: false }, 2));
        }
        if n.is_multiple_of(2) {
            classes.push((Elem { rot: n / 2, refl: false }, 1));
            classes.push((Elem { rot: 0, refl: true }, n / 2));
            classes.push((Elem { rot: 1, refl: true }, n / 2));
        } else {
            classes.push((Elem { rot: 0, refl: true }, n));
        }
        ConjClassTable { n, classes }
    }

    pub fn class_of(&self, g: Elem) -> usize {
        let n = self.n;
        let a = g.rot % n;
        if !g.refl {
            return a.min(n - a) as usize;
        }
        let rotations = (n / 2 + 1) as usize;
        if n % 2 == 1 {
            rotations
        } else {
            rotations + (a % 2) as usize
        }
    }
}

#[derive(Debug, Clone)]
pub struct ClassFunction {
    pub table: ConjClassTable,
    pub values: Vec<Complex64>,
}

impl ClassFunction {
    pub fn eval(&self, g: Elem) -> Complex64 {
        self.values[self.table.class_of(g)]
    }

    fn from_fn(n: u64, f: impl Fn(Elem) -> Complex64) -> ClassFunction {
        let table = ConjClassTable::new(n);
        let values = table.classes.iter().map(|(g, _)| f(*g)).collect();
        ClassFunction { table, values }
    }
}

fn sign_pow(s: Sign, e: u64) -> f64 {
    if s == Sign::Minus && e % 2 == 1 {
        -1.0
    } else {
        1.0
    }
}

pub fn character_of(m: SimpleModule) -> ClassFunction {
    match m {
        SimpleModule::V { n, a, b } => ClassFunction::from_fn(n, |g| {
            let refl = if g.refl { b.value() as f64 } else { 1.0 };
            Complex64::new(sign_pow(a, g.rot) * refl, 0.0)
        }),
        SimpleModule::W { n, k } => ClassFunction::from_fn(n, |g| {
            if g.refl {
                Complex64::new(0.0, 0.0)
            } else {
                let t = 2.0 * PI * ((g.rot * k) % n) as f64 / n as f64;
                Complex64::new(2.0 * t.cos(), 0.0)
            }
        }),
    }
}

/// Sum over the transversal `{r^i : 0 <= i < p}` of the subgroup `<r^p, s>`.
pub fn induce_char(p: u32, chi: &ClassFunction) -> ClassFunction {
    let n = chi.table.n;
    let p = p as u64;
    let big = n * p;
    ClassFunction::from_fn(big, |g| {
        (0..p)
            .map(|i| g.conj_by_rotation(i, big))
            .filter(|h| h.rot % p == 0)
            .map(|h| chi.eval(Elem { rot: h.rot / p, refl: h.refl }))
            .sum()
    })
}

pub fn restrict_char(p: u32, chi: &ClassFunction) -> Result<ClassFunction> {
    let big = chi.table.n;
    if !restriction_defined(p, big) {
        return Err(Error::Oracle(format!("no subgroup of index {p} at level {big}")));
    }
    let p = p as u64;
    Ok(ClassFunction::from_fn(big / p, |g| chi.eval(Elem { rot: g.rot * p, refl: g.refl })))
}

pub fn inner_product(chi: &ClassFunction, psi: &ClassFunction) -> Complex64 {
    assert_eq!(chi.table.n, psi.table.n);
    let order = 2.0 * chi.table.n as f64;
    let s: Complex64 = chi
        .table
        .classes
        .iter()
        .zip(chi.values.iter().zip(&psi.values))
        .map(|((_, size), (x, y))| *size as f64 * x * y.conj())
        .sum();
    s / order
}

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

fn round_multiplicity(m: SimpleModule, x: Complex64) -> Result<i64> {
    let r = x.re.round();
    if (x.re - r).abs() > TOLERANCE || x.im.abs() > TOLERANCE || r < 0.0 {
        return Err(Error::Oracle(format!("multiplicity of {m} is {x}")));
    }
    Ok(r as i64)
}

/// Multiplicities of every simple, via one DFT of the rotation values.
pub fn decompose(chi: &ClassFunction) -> Result<IntGroth> {
    let n = chi.table.n;
    let nn = n as usize;
    let mut buf: Vec<Complex64> =
        (0..n).map(|x| chi.eval(Elem { rot: x, refl: false })).collect();
    PLANNER.with(|pl| pl.borrow_mut().plan_fft_forward(nn).process(&mut buf));
    let order = 2.0 * n as f64;
    let refl_sum = |a: Sign| -> Complex64 {
        if n % 2 == 1 {
            chi.eval(Elem { rot: 0, refl: true }) * n as f64
        } else {
            let c0 = chi.eval(Elem { rot: 0, refl: true });
            let c1 = chi.eval(Elem { rot: 1, refl: true });
            (c0 + c1 * a.value() as f64) * (n / 2) as f64
        }
    };
    let mut out = IntGroth::zero();
    for m in simples_at(n) {
        let x = match m {
            SimpleModule::V { a, b, .. } => {
                let rot = if a == Sign::Plus { buf[0] } else { buf[nn / 2] };
                (rot + refl_sum(a) * b.value() as f64) / order
            }
            SimpleModule::W { k, .. } => (buf[k as usize] + buf[nn - k as usize]) / order,
        };
        out.add_term(m, round_multiplicity(m, x)?);
    }
    Ok(out)
}

/// Same multiplicities through explicit inner products; quadratic in n.
pub fn decompose_by_inner_products(chi: &ClassFunction) -> Result<IntGroth> {
    let mut out = IntGroth::zero();
    for m in simples_at(chi.table.n) {
        out.add_term(m, round_multiplicity(m, inner_product(chi, &character_of(m)))?);
    }
    Ok(out)
}

pub fn oracle_restrict(p: u32, m: SimpleModule) -> Result<IntGroth> {
    if !restriction_defined(p, m.level()) {
        return Ok(IntGroth::zero());
    }
    decompose(&restrict_char(p, &character_of(m))?)
}

pub fn oracle_induce(p: u32, m: SimpleModule) -> Result<IntGroth> {
    decompose(&induce_char(p, &character_of(m)))
}
