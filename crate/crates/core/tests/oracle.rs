use dihedral_core::branching::{induce, restrict, restriction_defined};
use dihedral_core::module::simples_at;
use dihedral_core::oracle::{
    character_of, decompose, decompose_by_inner_products, induce_char, inner_product, oracle_induce, oracle_restrict,
    restrict_char,
};

#[test]
fn characters_are_orthonormal() {
    for n in 3..=200u64 {
        let chars: Vec<_> = simples_at(n).into_iter().map(character_of).collect();
        for (i, a) in chars.iter().enumerate() {
            for (j, b) in chars.iter().enumerate() {
                let ip = inner_product(a, b);
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((ip.re - want).abs() < 1e-9 && ip.im.abs() < 1e-9, "n={n} ({i},{j}): {ip}");
            }
        }
    }
}

#[test]
fn frobenius_reciprocity_on_characters() {
    for n in 3..=60u64 {
        for p in [2u32, 3, 5, 7] {
            let big: Vec<_> = simples_at(n * p as u64).into_iter().map(character_of).collect();
            for b in simples_at(n) {
                let ind = induce_char(p, &character_of(b));
                for a in &big {
                    let lhs = inner_product(&ind, a);
                    let rhs = inner_product(&character_of(b), &restrict_char(p, a).unwrap());
                    assert!((lhs - rhs).norm() < 1e-9, "n={n} p={p} {b}");
                }
            }
        }
    }
}

#[test]
fn both_decompositions_agree() {
    for n in 3..=40u64 {
        for m in simples_at(n) {
            for p in [2u32, 3, 5] {
                let chi = induce_char(p, &character_of(m));
                assert_eq!(decompose(&chi).unwrap(), decompose_by_inner_products(&chi).unwrap(), "ind{p} {m}");
            }
        }
    }
}

#[test]
fn branching_matches_characters_small_levels() {
    for n in 3..=60u64 {
        for m in simples_at(n) {
            for p in [2u32, 3, 5, 7, 11] {
                assert_eq!(induce(p, m), oracle_induce(p, m).unwrap(), "ind{p} {m}");
                if restriction_defined(p, n) {
                    assert_eq!(restrict(p, m), oracle_restrict(p, m).unwrap(), "res{p} {m}");
                } else {
                    assert!(restrict(p, m).is_zero(), "res{p} {m}");
                }
            }
        }
    }
}
