//! Translation maps between levels of a p-tower, and tower addresses.

use crate::arith::is_prime;
use crate::branching::{canon_w, restrict, restriction_defined};
use crate::error::{Error, Result};
use crate::groth::{GrothVector, IntGroth};
use crate::module::SimpleModule;

fn check_base(p: u32, m: u64) -> Result<()> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if m.is_multiple_of(2) || !(m == p as u64 || !m.is_multiple_of(p as u64)) {
        return Err(Error::Domain {
            term: format!("m = {m}"),
            why: format!("base must be odd and equal to {p} or coprime to it"),
        });
    }
    Ok(())
}

/// `J` with `n = m p^J`, if any.
fn tower_height(p: u32, m: u64, n: u64) -> Option<u32> {
    if !n.is_multiple_of(m) {
        return None;
    }
    let mut r = n / m;
    let mut j = 0;
    while r.is_multiple_of(p as u64) {
        r /= p as u64;
        j += 1;
    }
    (r == 1).then_some(j)
}

/// Writes `n = m p^J` with `m = p` or `p ∤ m`.
pub fn tower_base(p: u32, n: u64) -> (u64, u32) {
    let p64 = p as u64;
    let mut m = n;
    let mut j = 0;
    while m.is_multiple_of(p64) && m != p64 {
        m /= p64;
        j += 1;
    }
    (m, j)
}

/// Lifts every term from level `m p^J'` to `m p^{J'+J}`: V keeps its signs,
/// `W_k` becomes `W_{k p^J}`.
pub fn phi_translate(p: u32, m: u64, j: u32, v: &GrothVector) -> Result<GrothVector> {
    check_base(p, m)?;
    let f = (p as u64).pow(j);
    let mut out = GrothVector::zero();
    for (x, c) in v.iter() {
        let n = x.level();
        if tower_height(p, m, n).is_none() {
            return Err(Error::Domain {
                term: x.to_string(),
                why: format!("level is not {m}·{p}^J"),
            });
        }
        let img = match *x {
            SimpleModule::V { a, b, .. } => IntGroth::single(SimpleModule::V { n: n * f, a, b }),
            SimpleModule::W { k, .. } => canon_w(n * f, (k * f) as i64),
        };
        out.add_scaled(&img.to_rational(), c);
    }
    Ok(out)
}

pub fn phi_inverse(p: u32, m: u64, j: u32, v: &GrothVector) -> Result<GrothVector> {
    check_base(p, m)?;
    let f = (p as u64).pow(j);
    let mut out = GrothVector::zero();
    for (x, c) in v.iter() {
        let n = x.level();
        let ok = tower_height(p, m, n).is_some_and(|h| h >= j) && n / f >= 3;
        if !ok {
            return Err(Error::NotInImage(x.to_string()));
        }
        let pre = match *x {
            SimpleModule::V { a, b, .. } => SimpleModule::V { n: n / f, a, b },
            SimpleModule::W { k, .. } if k % f == 0 => SimpleModule::W { n: n / f, k: k / f },
            _ => return Err(Error::NotInImage(x.to_string())),
        };
        out.add_term(pre, c.clone());
    }
    Ok(out)
}

/// Sorted `k'` in `[1, pn/2)` with `res_p W_{k'}(pn) = M`, for `M` at level `n`.
pub fn k_set(p: u32, m: SimpleModule) -> Vec<u64> {
    let up = m.level() * p as u64;
    let target = IntGroth::single(m);
    (1..)
        .take_while(|k| 2 * k < up)
        .filter(|&k| restrict(p, SimpleModule::W { n: up, k }) == target)
        .collect()
}

fn single_w(g: &IntGroth) -> Option<SimpleModule> {
    match g.iter().next() {
        Some((w @ SimpleModule::W { .. }, 1)) if g.len() == 1 => Some(*w),
        _ => None,
    }
}

/// Restricts `M` by `p` while the result stays a single two-dimensional
/// simple; returns the bottom module and the branch indices read upward.
pub fn tower_address(p: u32, m: SimpleModule) -> Result<(SimpleModule, Vec<u32>)> {
    if !matches!(m, SimpleModule::W { .. }) {
        return Err(Error::NoAddress(format!("{m} is one-dimensional")));
    }
    let mut cur = m;
    let mut addr = Vec::new();
    while restriction_defined(p, cur.level()) {
        let Some(parent) = single_w(&restrict(p, cur)) else { break };
        addr.push(branch_index(p, parent, cur));
        cur = parent;
    }
    addr.reverse();
    Ok((cur, addr))
}

fn branch_index(p: u32, parent: SimpleModule, child: SimpleModule) -> u32 {
    let SimpleModule::W { k, .. } = child else { unreachable!() };
    let ks = k_set(p, parent);
    let i = ks.iter().position(|&x| x == k);
    assert!(i.is_some(), "{child} restricts to {parent} but is missing from its K-set");
    i.unwrap() as u32 + 1
}

/// Follows an address upward from `base`.
pub fn resolve_address(p: u32, base: SimpleModule, addr: &[u32]) -> Result<SimpleModule> {
    let mut cur = base;
    for &j in addr {
        let ks = k_set(p, cur);
        let Some(&k) = ks.get(j as usize - 1).filter(|_| j >= 1) else {
            return Err(Error::NoAddress(format!("branch {j} does not exist above {cur}")));
        };
        cur = SimpleModule::W { n: cur.level() * p as u64, k };
    }
    Ok(cur)
}

/// Moves `W_k^I(m)` to `W_{k'}^I(m p^J)`.
pub fn psi_translate(
    p: u32,
    k: u64,
    m: u64,
    k2: i64,
    j: u32,
    module: SimpleModule,
) -> Result<SimpleModule> {
    check_base(p, m)?;
    if k == 0 || 2 * k >= m {
        return Err(Error::Domain { term: format!("k = {k}"), why: format!("need 1 <= k <= {}", (m - 1) / 2) });
    }
    let SimpleModule::W { n, .. } = module else {
        return Err(Error::NoAddress(format!("{module} is one-dimensional")));
    };
    let Some(height) = tower_height(p, m, n) else {
        return Err(Error::NoAddress(format!("{module} is not above level {m}")));
    };
    let mut cur = module;
    let mut addr = Vec::new();
    for _ in 0..height {
        let Some(parent) = single_w(&restrict(p, cur)) else {
            return Err(Error::NoAddress(format!("{cur} does not restrict to a single W")));
        };
        addr.push(branch_index(p, parent, cur));
        cur = parent;
    }
    if cur != (SimpleModule::W { n: m, k }) {
        return Err(Error::NoAddress(format!("{module} lies over {cur}, not W({k};{m})")));
    }
    addr.reverse();
    let top = m * (p as u64).pow(j);
    let Some(base) = single_w(&canon_w(top, k2)) else {
        return Err(Error::Domain { term: format!("k' = {k2}"), why: format!("W_{k2} is not simple at level {top}") });
    };
    resolve_address(p, base, &addr)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> SimpleModule {
        s.parse().unwrap()
    }

    fn g(s: &str) -> GrothVector {
        s.parse().unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_translate(3, 5, 1, &g("V(1,1;15)")).unwrap(), g("V(1,1;45)"));
        assert_eq!(phi_translate(3, 5, 1, &g("W(3;15)")).unwrap(), g("W(9;45)"));
        assert_eq!(phi_translate(3, 5, 0, &g("W(2;5) + V(1,-1;15)")).unwrap(), g("W(2;5) + V(1,-1;15)"));
        assert!(phi_translate(3, 5, 1, &g("W(1;7)")).is_err());
        assert!(phi_translate(3, 15, 1, &g("W(1;15)")).is_err());
    }

    #[test]
    fn phi_inverse_examples() {
        assert_eq!(phi_inverse(3, 5, 1, &g("V(1,1;45)")).unwrap(), g("V(1,1;15)"));
        assert_eq!(phi_inverse(3, 5, 1, &g("W(15;45)")).unwrap(), g("W(5;15)"));
        assert!(matches!(phi_inverse(3, 5, 1, &g("W(1;45)")), Err(Error::NotInImage(_))));
        let x = g("V(1,1;45) + W(3;45) + W(15;45)");
        let back = phi_translate(3, 5, 1, &phi_inverse(3, 5, 1, &x).unwrap()).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn k_sets() {
        assert_eq!(k_set(3, m("W(1;5)")), vec![1, 4, 6]);
        assert_eq!(k_set(3, m("W(5;15)")), vec![5, 10, 20]);
    }

    #[test]
    fn address_examples() {
        assert_eq!(tower_address(3, m("W(4;15)")).unwrap(), (m("W(1;5)"), vec![2]));
        assert_eq!(tower_address(3, m("W(1;5)")).unwrap(), (m("W(1;5)"), vec![]));
        assert_eq!(tower_address(3, m("W(10;45)")).unwrap(), (m("W(5;15)"), vec![2]));
        assert!(tower_address(3, m("V(1,1;15)")).is_err());
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi_translate(3, 1, 5, 5, 1, m("W(4;15)")).unwrap(), m("W(10;45)"));
        assert_eq!(psi_translate(3, 2, 5, 2, 0, m("W(2;5)")).unwrap(), m("W(2;5)"));
        assert_eq!(psi_translate(3, 1, 5, 2, 1, m("W(1;5)")).unwrap(), m("W(2;15)"));
        assert!(psi_translate(3, 1, 5, 15, 1, m("W(4;15)")).is_err());
        assert!(psi_translate(3, 1, 5, 5, 1, m("W(5;15)")).is_err());
    }

    #[test]
    fn restriction_fibres() {
        // W_5, W_10, W_20 at level 45 all restrict to W_5(15).
        for k in [5, 10, 20] {
            assert_eq!(restrict(3, SimpleModule::W { n: 45, k }).to_rational(), g("W(5;15)"));
        }
    }
}
