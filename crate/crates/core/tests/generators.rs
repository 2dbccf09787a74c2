mod common;

use loopnr::decomp::decompose_regular;
use loopnr::generators::{
    catalog, cyclic_loop, cyclic_ring, map_near_ring, matrix_ring, opposite, product_rings, random_loop,
    reduced_loops, resolve, smallest_nonassociative_loop, CorpusSpec, Structure,
};
use loopnr::rings::{is_local_ring, jacobson_radical, validate_ring};
use loopnr::{Bounds, Error, ValidationError};
use proptest::prelude::*;

fn b() -> Bounds {
    Bounds::default()
}

#[test]
fn cyclic_examples() {
    assert!(cyclic_ring(1).is_zero_ring());
    assert!(is_local_ring(&cyclic_ring(4)));
    assert!(!is_local_ring(&cyclic_ring(6)));
}

#[test]
fn matrix_examples() {
    let z2 = cyclic_ring(2);
    assert_eq!(matrix_ring(&z2, 1, &b()).unwrap(), z2);
    let m = matrix_ring(&z2, 2, &b()).unwrap();
    assert_eq!(m.n(), 16);
    assert_eq!(jacobson_radical(&m, &b()).unwrap().len(), 1);
    let m4 = matrix_ring(&cyclic_ring(4), 2, &b()).unwrap();
    assert_eq!(m4.n(), 256);
    assert_eq!(jacobson_radical(&m4, &b()).unwrap().len(), 16);
    assert!(matches!(matrix_ring(&cyclic_ring(4), 3, &b()), Err(Error::BoundExceeded { .. })));
}

#[test]
fn map_near_ring_examples() {
    let mz2 = map_near_ring(&cyclic_loop(2), false, &b()).unwrap();
    assert_eq!(mz2.n(), 4);
    assert!(!mz2.is_zero_symmetric());
    let m0z2 = map_near_ring(&cyclic_loop(2), true, &b()).unwrap();
    assert_eq!(validate_ring(m0z2).unwrap(), cyclic_ring(2));
    let big = map_near_ring(&smallest_nonassociative_loop(), true, &b()).unwrap();
    assert_eq!(big.n(), 625);
    assert!(!big.additive().is_associative());
    assert!(matches!(map_near_ring(&cyclic_loop(6), false, &b()), Err(Error::BoundExceeded { .. })));
}

#[test]
fn product_and_opposite_examples() {
    let p = product_rings(&[&cyclic_ring(2), &cyclic_ring(3)], &b()).unwrap();
    // (1, 0) ↦ 3 and (0, 1) ↦ 4 under the isomorphism with Z/6.
    let fam = decompose_regular(&p, &b()).unwrap();
    let to_z6 = |x: usize| {
        let (a, c) = (x / 3, x % 3);
        (0..6).find(|y| y % 2 == a && y % 3 == c).unwrap()
    };
    let mut images: Vec<usize> = fam.members().iter().map(|&e| to_z6(e)).collect();
    images.sort_unstable();
    assert_eq!(images, vec![3, 4]);

    let z6 = cyclic_ring(6);
    assert_eq!(&opposite(z6.lnr()).unwrap(), z6.lnr());
    let m0z3 = map_near_ring(&cyclic_loop(3), true, &b()).unwrap();
    assert!(matches!(opposite(&m0z3), Err(ValidationError::RightDistributivityFails(..))));
}

#[test]
fn reduced_loop_counts() {
    let counts: Vec<usize> = (1..=6).map(|n| reduced_loops(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 1, 4, 56, 9408]);
}

#[test]
fn random_loop_examples() {
    for s in 0..20 {
        assert_eq!(random_loop(3, s), cyclic_loop(3));
    }
    assert_eq!(random_loop(5, 1), random_loop(5, 1));
    assert!((0..100).any(|s| !random_loop(5, s).is_associative()));
}

#[test]
fn catalog_builds_and_round_trips_specs() {
    let cat = catalog();
    assert!(cat.len() > 20);
    for e in &cat {
        let text = e.spec.to_string();
        assert_eq!(text.parse::<CorpusSpec>().unwrap(), e.spec);
        let s = e.spec.build(&b()).unwrap();
        if let Structure::Ring(r) = &s {
            assert!(validate_ring(r.lnr().clone()).is_ok());
        }
    }
}

#[test]
fn names_resolve_to_catalog_specs() {
    for e in catalog() {
        assert_eq!(resolve(&e.name).unwrap(), e.spec);
    }
    assert_eq!(resolve("cyclic:7").unwrap(), CorpusSpec::Cyclic(7));
    assert!(matches!(resolve("z99"), Err(Error::Parse(_))));
}

#[test]
fn spec_errors() {
    for bad in ["", "cyclic", "cyclic:0", "cyclic:x", "matrix:cyclic:2", "random:13,1", "latin:4,9", "what:1"] {
        let parsed = bad.parse::<CorpusSpec>();
        let built = parsed.clone().and_then(|s| s.build(&b()));
        assert!(matches!(built, Err(Error::Parse(_))), "{bad}: {parsed:?}");
    }
    assert!(matches!("matrix:m0:cyclic:3,2".parse::<CorpusSpec>().unwrap().build(&b()), Err(Error::Parse(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_loops_are_loops(n in 1usize..=12, seed in any::<u64>()) {
        let l = random_loop(n, seed);
        prop_assert_eq!(l.n(), n);
        for a in 0..n {
            let mut row: Vec<usize> = (0..n).map(|x| l.add(a, x)).collect();
            let mut col: Vec<usize> = (0..n).map(|x| l.add(x, a)).collect();
            row.sort_unstable();
            col.sort_unstable();
            prop_assert_eq!(&row, &(0..n).collect::<Vec<_>>());
            prop_assert_eq!(&col, &(0..n).collect::<Vec<_>>());
            prop_assert_eq!(l.add(0, a), a);
            prop_assert_eq!(l.add(a, 0), a);
        }
    }

    #[test]
    fn product_rings_are_componentwise(a in 1usize..=6, c in 1usize..=6, x in 0usize..36, y in 0usize..36) {
        let p = product_rings(&[&cyclic_ring(a), &cyclic_ring(c)], &Bounds::default()).unwrap();
        let (x, y) = (x % p.n(), y % p.n());
        let split = |v: usize| (v / c, v % c);
        let ((x1, x2), (y1, y2)) = (split(x), split(y));
        prop_assert_eq!(split(p.add(x, y)), ((x1 + y1) % a, (x2 + y2) % c));
        prop_assert_eq!(split(p.mul(x, y)), (x1 * y1 % a, x2 * y2 % c));
    }
}
