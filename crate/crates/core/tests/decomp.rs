mod common;

use common::mat2;
use loopnr::decomp::{
    corner_ring, decompose_regular, enumerate_complete_primitive_families, is_primitive,
    is_strongly_indecomposable_corner, retract_matching, verify_ks_uniqueness, IdempotentFamily,
};
use loopnr::generators::{cyclic_ring, matrix_ring, product_rings};
use loopnr::rings::idempotents_isomorphic;
use loopnr::{Bounds, Error, FiniteRing};

fn b() -> Bounds {
    Bounds::default()
}

fn m2z2() -> FiniteRing {
    matrix_ring(&cyclic_ring(2), 2, &b()).unwrap()
}

/// Complete orthogonal families of primitive idempotents, by brute force
/// over sorted tuples of nonzero idempotents.
fn brute_families(r: &FiniteRing) -> Vec<Vec<usize>> {
    let idem: Vec<usize> = (1..r.n()).filter(|&e| r.mul(e, e) == e).collect();
    let primitive = |e: usize| {
        let corner: Vec<usize> = (0..r.n()).map(|x| r.mul(r.mul(e, x), e)).collect();
        corner.iter().filter(|&&x| r.mul(x, x) == x).collect::<std::collections::BTreeSet<_>>().len() == 2
    };
    let prims: Vec<usize> = idem.into_iter().filter(|&e| primitive(e)).collect();
    let mut out = Vec::new();
    fn rec(r: &FiniteRing, prims: &[usize], start: usize, cur: &mut Vec<usize>, sum: usize, out: &mut Vec<Vec<usize>>) {
        if sum == r.one() && !cur.is_empty() {
            out.push(cur.clone());
        }
        for i in start..prims.len() {
            let e = prims[i];
            if cur.iter().all(|&f| r.mul(e, f) == 0 && r.mul(f, e) == 0) {
                cur.push(e);
                rec(r, prims, i + 1, cur, r.add(sum, e), out);
                cur.pop();
            }
        }
    }
    rec(r, &prims, 0, &mut Vec::new(), 0, &mut out);
    out
}

#[test]
fn corner_examples() {
    let z6 = cyclic_ring(6);
    assert_eq!(corner_ring(&z6, 1).unwrap().ring, z6);
    assert!(corner_ring(&z6, 0).unwrap().ring.is_zero_ring());
    let m = m2z2();
    let e11 = mat2(2, 1, 0, 0, 0);
    let c = corner_ring(&m, e11).unwrap();
    assert_eq!(c.carrier, vec![0, e11]);
    assert_eq!(c.ring, cyclic_ring(2));
    assert!(matches!(corner_ring(&z6, 2), Err(Error::NotIdempotent(2))));
}

#[test]
fn primitivity_examples() {
    let z4 = cyclic_ring(4);
    assert!(is_primitive(&z4, 1).unwrap());
    assert!(is_strongly_indecomposable_corner(&z4, 1).unwrap());
    assert!(!is_primitive(&cyclic_ring(6), 1).unwrap());
    let m = m2z2();
    let e11 = mat2(2, 1, 0, 0, 0);
    assert!(is_primitive(&m, e11).unwrap());
    assert!(is_strongly_indecomposable_corner(&m, e11).unwrap());
    assert!(matches!(is_primitive(&z4, 0), Err(Error::ZeroIdempotent)));
}

#[test]
fn canonical_family_examples() {
    let fam = |r: &FiniteRing| decompose_regular(r, &b()).unwrap().members().to_vec();
    assert_eq!(fam(&cyclic_ring(4)), vec![1]);
    assert_eq!(fam(&cyclic_ring(6)), vec![3, 4]);
    let m = m2z2();
    let f = fam(&m);
    assert_eq!(f.len(), 2);
    assert!(idempotents_isomorphic(&m, f[0], f[1]).unwrap());
    assert!(IdempotentFamily::new(&m, vec![mat2(2, 1, 0, 0, 0), mat2(2, 0, 0, 0, 1)]).is_ok());
    assert!(IdempotentFamily::new(&cyclic_ring(6), vec![3]).is_err());
}

#[test]
fn family_enumeration_matches_brute_force() {
    let rings = [
        cyclic_ring(4),
        cyclic_ring(6),
        cyclic_ring(12),
        cyclic_ring(30),
        m2z2(),
        product_rings(&[&cyclic_ring(4), &cyclic_ring(2)], &b()).unwrap(),
        product_rings(&[&cyclic_ring(2), &cyclic_ring(2)], &b()).unwrap(),
    ];
    for r in &rings {
        let got = enumerate_complete_primitive_families(r, usize::MAX, &b()).unwrap();
        assert!(!got.truncated);
        let mut found: Vec<Vec<usize>> = got.families.iter().map(|f| f.members().to_vec()).collect();
        found.sort();
        let mut brute = brute_families(r);
        brute.sort();
        assert_eq!(found, brute);
    }
    let z4 = enumerate_complete_primitive_families(&cyclic_ring(4), usize::MAX, &b()).unwrap();
    assert_eq!(z4.families.len(), 1);
    let z6 = enumerate_complete_primitive_families(&cyclic_ring(6), usize::MAX, &b()).unwrap();
    assert_eq!(z6.families[0].members(), &[3, 4]);
    let m = enumerate_complete_primitive_families(&m2z2(), usize::MAX, &b()).unwrap();
    assert!(m.families.len() > 1);
    let capped = enumerate_complete_primitive_families(&m2z2(), 1, &b()).unwrap();
    assert!(capped.truncated && capped.families.len() == 1);
}

#[test]
fn uniqueness_examples() {
    let ks = verify_ks_uniqueness(&cyclic_ring(6), &b()).unwrap();
    assert_eq!(ks.families.len(), 1);
    assert!(ks.lengths_equal && ks.all_matched);

    let m = m2z2();
    let ks = verify_ks_uniqueness(&m, &b()).unwrap();
    assert!(ks.families.len() > 1);
    assert!(ks.lengths_equal && ks.all_matched && !ks.truncated);
    for fam in &ks.families {
        let (e, f) = (fam.members()[0], fam.members()[1]);
        assert!(idempotents_isomorphic(&m, e, f).unwrap());
    }

    let r = product_rings(&[&cyclic_ring(4), &cyclic_ring(2)], &b()).unwrap();
    let ks = verify_ks_uniqueness(&r, &b()).unwrap();
    assert_eq!(ks.families.len(), 1);
    // (1, 0) and (0, 1) have indices 2 and 1.
    assert_eq!(ks.canonical.members(), &[1, 2]);
    assert!(!idempotents_isomorphic(&r, 1, 2).unwrap());
    assert_eq!(corner_ring(&r, 2).unwrap().ring, cyclic_ring(4));
    assert_eq!(corner_ring(&r, 1).unwrap().ring, cyclic_ring(2));
}

#[test]
fn uniqueness_bound() {
    let big = matrix_ring(&cyclic_ring(3), 2, &b()).unwrap();
    assert!(matches!(verify_ks_uniqueness(&big, &b()), Err(Error::BoundExceeded { .. })));
}

#[test]
fn retracts_match_canonical_members() {
    for r in [cyclic_ring(12), m2z2(), product_rings(&[&cyclic_ring(4), &cyclic_ring(2)], &b()).unwrap()] {
        let canonical = decompose_regular(&r, &b()).unwrap();
        for (f, e) in retract_matching(&r, &b()).unwrap() {
            let e = e.expect("every primitive idempotent is matched");
            assert!(canonical.members().contains(&e));
            assert!(idempotents_isomorphic(&r, f, e).unwrap());
        }
    }
}
