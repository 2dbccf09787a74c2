//! Finite associative unital rings.
//!
//! A [`FiniteRing`] is a loop near-ring whose addition is an abelian group
//! and whose multiplication distributes on both sides. Left ideals are the
//! N-subloops of the underlying near-ring, so the lattice machinery is shared.

use rayon::prelude::*;

use crate::axioms;
use crate::bounds::Bounds;
use crate::closure::ClosureOps;
use crate::error::{Error, Result, ValidationError};
use crate::loops::CayleyLoop;
use crate::nearrings::{LoopNearRing, Units};
use crate::subset::ElementSubset;
use crate::table::Table;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteRing {
    lnr: LoopNearRing,
    neg: Vec<u16>,
}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteRing").field("n", &self.n()).field("one", &self.one()).finish()
    }
}

/// Checks the extra ring axioms on a validated loop near-ring.
pub fn check_ring_axioms(lnr: &LoopNearRing) -> std::result::Result<(), ValidationError> {
    let add = lnr.additive().add_table();
    match axioms::addition_commutative(add)
        .or_else(|| axioms::addition_associative(add))
        .or_else(|| axioms::left_distributive(add, lnr.mul_table()))
    {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

pub fn validate_ring(lnr: LoopNearRing) -> std::result::Result<FiniteRing, ValidationError> {
    check_ring_axioms(&lnr)?;
    let neg = (0..lnr.n()).map(|a| lnr.additive().ldiff(a, 0) as u16).collect();
    Ok(FiniteRing { lnr, neg })
}

impl FiniteRing {
    pub fn from_tables(add: Table, mul: Table, one: usize) -> std::result::Result<Self, ValidationError> {
        validate_ring(LoopNearRing::new(CayleyLoop::new(add)?, mul, one)?)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.lnr.n()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.lnr.add(a, b)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.lnr.mul(a, b)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn one(&self) -> usize {
        self.lnr.one()
    }

    pub fn lnr(&self) -> &LoopNearRing {
        &self.lnr
    }

    pub fn into_lnr(self) -> LoopNearRing {
        self.lnr
    }

    pub fn units(&self) -> Units {
        self.lnr.units()
    }

    pub fn idempotents(&self) -> ElementSubset {
        self.lnr.idempotents()
    }

    pub fn is_zero_ring(&self) -> bool {
        self.n() == 1
    }

    /// `a·x·b` for all `x`.
    pub fn sandwich(&self, a: usize, b: usize) -> ElementSubset {
        ElementSubset::from_members(self.n(), (0..self.n()).map(|x| self.mul(self.mul(a, x), b)))
    }

    /// The ring on a closed subset `carrier` (sorted, containing `0`) with
    /// identity `one`, re-indexed by position in `carrier`.
    pub fn restrict(&self, carrier: &[usize], one: usize) -> std::result::Result<FiniteRing, ValidationError> {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &x) in carrier.iter().enumerate() {
            index[x] = i;
        }
        let m = carrier.len();
        let lookup = |v: usize| {
            let i = index[v];
            assert!(i != usize::MAX, "carrier is not closed: {v} escapes");
            i
        };
        let add = Table::from_fn(m, |a, b| lookup(self.add(carrier[a], carrier[b])));
        let mul = Table::from_fn(m, |a, b| lookup(self.mul(carrier[a], carrier[b])));
        FiniteRing::from_tables(add, mul, lookup(one))
    }

    pub fn is_division_ring(&self) -> bool {
        let units = self.units();
        self.n() > 1 && (1..self.n()).all(|a| units.contains(a))
    }
}

/// Closure under `+`, `−` and `·` (both orders).
pub struct SubringOps<'a>(pub &'a FiniteRing);

impl ClosureOps for SubringOps<'_> {
    fn n(&self) -> usize {
        self.0.n()
    }

    fn pair(&self, a: usize, b: usize, emit: &mut dyn FnMut(usize)) {
        emit(self.0.add(a, b));
        emit(self.0.sub(a, b));
        emit(self.0.mul(a, b));
    }
}

/// Additive subgroup absorbing multiplication on both sides.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoSidedIdeal {
    members: ElementSubset,
}

impl TwoSidedIdeal {
    pub fn new(ring: &FiniteRing, members: ElementSubset) -> Result<Self> {
        if !is_two_sided_ideal(ring, &members) {
            return Err(Error::NotAnIdeal);
        }
        Ok(TwoSidedIdeal { members })
    }

    pub fn zero(ring: &FiniteRing) -> Self {
        TwoSidedIdeal { members: ElementSubset::from_members(ring.n(), [0]) }
    }

    pub fn members(&self) -> &ElementSubset {
        &self.members
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn is_left_ideal(ring: &FiniteRing, s: &ElementSubset) -> bool {
    ring.lnr().is_n_subloop(s)
}

pub fn is_two_sided_ideal(ring: &FiniteRing, s: &ElementSubset) -> bool {
    is_left_ideal(ring, s) && s.iter().all(|a| (0..ring.n()).all(|x| s.contains(ring.mul(a, x))))
}

/// `{a : 1 − x·a is left invertible for every x}`.
pub fn radical_by_quasi_regularity(ring: &FiniteRing) -> ElementSubset {
    let n = ring.n();
    let one = ring.one();
    let left_invertible: Vec<bool> =
        (0..n).into_par_iter().map(|y| (0..n).any(|k| ring.mul(k, y) == one)).collect();
    let members: Vec<usize> = (0..n)
        .into_par_iter()
        .filter(|&a| (0..n).all(|x| left_invertible[ring.sub(one, ring.mul(x, a))]))
        .collect();
    ElementSubset::from_members(n, members)
}

/// Intersection of all maximal left ideals.
pub fn radical_by_maximal_left_ideals(ring: &FiniteRing, bounds: &Bounds) -> Result<ElementSubset> {
    let maximal = ring.lnr().maximal_n_subloops(bounds)?;
    Ok(maximal.iter().fold(ElementSubset::full(ring.n()), |acc, m| acc.intersection(m)))
}

/// The Jacobson radical, computed by both routes; they must agree.
pub fn jacobson_radical(ring: &FiniteRing, bounds: &Bounds) -> Result<TwoSidedIdeal> {
    let by_maximal = radical_by_maximal_left_ideals(ring, bounds)?;
    let by_quasi = radical_by_quasi_regularity(ring);
    assert_eq!(by_quasi, by_maximal, "Jacobson radical routes disagree");
    assert!(is_two_sided_ideal(ring, &by_quasi), "Jacobson radical is not two-sided");
    Ok(TwoSidedIdeal { members: by_quasi })
}

fn quasi_radical_ideal(ring: &FiniteRing) -> TwoSidedIdeal {
    TwoSidedIdeal { members: radical_by_quasi_regularity(ring) }
}

/// `A / I` on cosets indexed by their least member, with the projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub ring: FiniteRing,
    pub projection: Vec<usize>,
    /// Least element of each coset, by quotient index.
    pub representatives: Vec<usize>,
}

pub fn quotient_ring(ring: &FiniteRing, ideal: &TwoSidedIdeal) -> Result<Quotient> {
    if !is_two_sided_ideal(ring, ideal.members()) {
        return Err(Error::NotAnIdeal);
    }
    let n = ring.n();
    let mut projection = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for a in 0..n {
        if projection[a] != usize::MAX {
            continue;
        }
        let idx = representatives.len();
        representatives.push(a);
        for i in ideal.members().iter() {
            projection[ring.add(a, i)] = idx;
        }
    }
    let m = representatives.len();
    let reps = &representatives;
    let add = Table::from_fn(m, |a, b| projection[ring.add(reps[a], reps[b])]);
    let mul = Table::from_fn(m, |a, b| projection[ring.mul(reps[a], reps[b])]);
    let quotient = FiniteRing::from_tables(add, mul, projection[ring.one()])?;
    Ok(Quotient { ring: quotient, projection, representatives })
}

/// Local iff the non-units form a left ideal; cross-checked against
/// `A / J(A)` being a division ring.
pub fn is_local_ring(ring: &FiniteRing) -> bool {
    let non_units = ring.units().set.complement();
    let local = is_left_ideal(ring, &non_units);
    let j = quasi_radical_ideal(ring);
    let quotient = quotient_ring(ring, &j).expect("radical is an ideal");
    assert_eq!(
        local,
        quotient.ring.is_division_ring(),
        "locality via non-units disagrees with A/J being a division ring"
    );
    local
}

pub fn is_semisimple(ring: &FiniteRing) -> bool {
    radical_by_quasi_regularity(ring).len() == 1
}

/// `A/J` semisimple and every idempotent of `A/J` lifts to `A`.
pub fn is_semiperfect(ring: &FiniteRing) -> bool {
    let j = quasi_radical_ideal(ring);
    let q = quotient_ring(ring, &j).expect("radical is an ideal");
    if !is_semisimple(&q.ring) {
        return false;
    }
    let lifted: ElementSubset =
        ElementSubset::from_members(q.ring.n(), ring.idempotents().iter().map(|e| q.projection[e]));
    q.ring.idempotents().is_subset(&lifted)
}

/// Idempotents in the coset `x + J`.
pub fn idempotents_in_coset(ring: &FiniteRing, ideal: &TwoSidedIdeal, x: usize) -> Vec<usize> {
    let mut out: Vec<usize> = ideal
        .members()
        .iter()
        .map(|j| ring.add(x, j))
        .filter(|&e| ring.mul(e, e) == e)
        .collect();
    out.sort_unstable();
    out
}

/// Lifts `x` with `x² − x ∈ J` to an idempotent `e ≡ x (mod J)`.
///
/// Iterates `x ↦ 3x² − 2x³`, which converges because `J` is nilpotent in a
/// finite ring. When the coset is small enough to scan, the result is checked
/// against the idempotents found there; if the iteration does not settle the
/// least idempotent of the coset is returned.
pub fn lift_idempotent(ring: &FiniteRing, ideal: &TwoSidedIdeal, x: usize) -> Result<usize> {
    let defect = ring.sub(ring.mul(x, x), x);
    if !ideal.contains(defect) {
        return Err(Error::NotApproximatelyIdempotent(x));
    }
    let iterated = iterate_lift(ring, x);
    let scan = if ideal.len() <= 1 << 16 { Some(idempotents_in_coset(ring, ideal, x)) } else { None };
    match (iterated, scan) {
        (Some(e), Some(found)) => {
            assert!(found.contains(&e), "iterated lift {e} of {x} not found by coset search");
            Ok(e)
        }
        (Some(e), None) => Ok(e),
        (None, Some(found)) if !found.is_empty() => Ok(found[0]),
        _ => Err(Error::NotApproximatelyIdempotent(x)),
    }
}

fn iterate_lift(ring: &FiniteRing, mut x: usize) -> Option<usize> {
    for _ in 0..64 {
        let x2 = ring.mul(x, x);
        if x2 == x {
            return Some(x);
        }
        let x3 = ring.mul(x2, x);
        let three_x2 = ring.add(ring.add(x2, x2), x2);
        x = ring.sub(three_x2, ring.add(x3, x3));
    }
    None
}

fn require_idempotent(ring: &FiniteRing, e: usize) -> Result<()> {
    if e >= ring.n() || ring.mul(e, e) != e {
        return Err(Error::NotIdempotent(e));
    }
    Ok(())
}

/// `(a, b)` with `a ∈ eAf`, `b ∈ fAe`, `ab = e` and `ba = f`, if any.
/// Such a pair exists exactly when `eA ≅ fA` as right modules.
pub fn isomorphism_witness(ring: &FiniteRing, e: usize, f: usize) -> Result<Option<(usize, usize)>> {
    require_idempotent(ring, e)?;
    require_idempotent(ring, f)?;
    let eaf = ring.sandwich(e, f);
    let fae = ring.sandwich(f, e);
    for a in eaf.iter() {
        for b in fae.iter() {
            if ring.mul(a, b) == e && ring.mul(b, a) == f {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

pub fn idempotents_isomorphic(ring: &FiniteRing, e: usize, f: usize) -> Result<bool> {
    Ok(isomorphism_witness(ring, e, f)?.is_some())
}

/// A unit `u` with `f = u⁻¹·e·u`, if any.
pub fn conjugacy_witness(ring: &FiniteRing, e: usize, f: usize) -> Result<Option<usize>> {
    require_idempotent(ring, e)?;
    require_idempotent(ring, f)?;
    let units = ring.units();
    let found = units.set.iter().find(|&u| {
        let inv = units.inverse_of(u).expect("unit has an inverse");
        ring.mul(ring.mul(inv, e), u) == f
    });
    Ok(found)
}

pub fn idempotents_conjugate(ring: &FiniteRing, e: usize, f: usize) -> Result<bool> {
    Ok(conjugacy_witness(ring, e, f)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: usize) -> FiniteRing {
        FiniteRing::from_tables(
            Table::from_fn(n, |a, b| (a + b) % n),
            Table::from_fn(n, |a, b| (a * b) % n),
            1 % n,
        )
        .unwrap()
    }

    #[test]
    fn cyclic_radicals() {
        let b = Bounds::default();
        assert_eq!(jacobson_radical(&zn(4), &b).unwrap().members().members(), vec![0, 2]);
        assert_eq!(jacobson_radical(&zn(6), &b).unwrap().members().members(), vec![0]);
        assert_eq!(jacobson_radical(&zn(8), &b).unwrap().members().members(), vec![0, 2, 4, 6]);
        assert_eq!(jacobson_radical(&zn(1), &b).unwrap().len(), 1);
    }

    #[test]
    fn quotients() {
        let z4 = zn(4);
        let j = TwoSidedIdeal::new(&z4, ElementSubset::from_members(4, [0, 2])).unwrap();
        let q = quotient_ring(&z4, &j).unwrap();
        assert_eq!(q.ring.n(), 2);
        assert_eq!(q.projection, vec![0, 1, 0, 1]);
        let same = quotient_ring(&z4, &TwoSidedIdeal::zero(&z4)).unwrap();
        assert_eq!(same.ring, z4);
        assert_eq!(
            TwoSidedIdeal::new(&z4, ElementSubset::from_members(4, [0, 1])),
            Err(Error::NotAnIdeal)
        );
    }

    #[test]
    fn locality_and_semisimplicity() {
        assert!(is_local_ring(&zn(8)));
        assert!(!is_local_ring(&zn(6)));
        assert!(!is_local_ring(&zn(1)));
        assert!(is_semisimple(&zn(6)));
        assert!(!is_semisimple(&zn(4)));
        assert!(is_semiperfect(&zn(4)));
        assert!(is_semiperfect(&zn(12)));
    }

    #[test]
    fn lifting_in_z4() {
        let z4 = zn(4);
        let j = TwoSidedIdeal::new(&z4, ElementSubset::from_members(4, [0, 2])).unwrap();
        assert_eq!(lift_idempotent(&z4, &j, 3).unwrap(), 1);
        assert_eq!(lift_idempotent(&z4, &j, 1).unwrap(), 1);
        assert_eq!(lift_idempotent(&z4, &j, 2).unwrap(), 0);
        let z6 = zn(6);
        assert_eq!(
            lift_idempotent(&z6, &TwoSidedIdeal::zero(&z6), 2),
            Err(Error::NotApproximatelyIdempotent(2))
        );
    }

    #[test]
    fn idempotent_relations_in_z4() {
        let z4 = zn(4);
        assert!(idempotents_isomorphic(&z4, 1, 1).unwrap());
        assert!(idempotents_conjugate(&z4, 1, 1).unwrap());
        assert!(!idempotents_isomorphic(&z4, 1, 0).unwrap());
        assert!(!idempotents_conjugate(&z4, 1, 0).unwrap());
        assert_eq!(idempotents_isomorphic(&z4, 1, 2), Err(Error::NotIdempotent(2)));
    }
}
