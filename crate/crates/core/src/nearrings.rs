//! Finite right loop near-rings.
//!
//! A loop near-ring is a loop `(N, +)` with a monoid multiplication that is
//! right distributive: `(a + b)·c = a·c + b·c`. It is zero-symmetric when
//! `n·0 = 0` for every `n`. Full map near-rings `M(G)` are not, so the flag
//! is recorded rather than required; only the locality procedures demand it.

use rayon::prelude::*;

use crate::axioms;
use crate::bounds::Bounds;
use crate::closure::{self, ClosureOps};
use crate::error::{Error, Result, ValidationError};
use crate::loops::CayleyLoop;
use crate::subset::ElementSubset;
use crate::table::Table;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LoopNearRing {
    additive: CayleyLoop,
    mul: Table,
    one: usize,
    zero_symmetric: bool,
}

impl std::fmt::Debug for LoopNearRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LoopNearRing")
            .field("n", &self.n())
            .field("one", &self.one)
            .field("zero_symmetric", &self.zero_symmetric)
            .finish()
    }
}

/// Validates raw addition and multiplication tables.
pub fn validate_lnr(
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
    one: usize,
) -> std::result::Result<LoopNearRing, ValidationError> {
    let additive = crate::loops::validate_loop(add)?;
    let mul = Table::from_rows(mul)?;
    LoopNearRing::new(additive, mul, one)
}

impl LoopNearRing {
    /// Checks every axiom exhaustively; witnesses are the least failing
    /// tuples in lexicographic order.
    pub fn new(
        additive: CayleyLoop,
        mul: Table,
        one: usize,
    ) -> std::result::Result<Self, ValidationError> {
        let n = additive.n();
        if mul.n() != n {
            return Err(ValidationError::SizeMismatch(n, mul.n()));
        }
        if let Some(e) = axioms::identity(&mul, one)
            .or_else(|| axioms::mul_associative(&mul))
            .or_else(|| axioms::right_distributive(additive.add_table(), &mul))
            .or_else(|| axioms::zero_left_absorbing(&mul))
        {
            return Err(e);
        }
        let zero_symmetric = (0..n).all(|a| mul.get(a, 0) == 0);
        Ok(LoopNearRing { additive, mul, one, zero_symmetric })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.additive.n()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.additive.add(a, b)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.get(a, b)
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn additive(&self) -> &CayleyLoop {
        &self.additive
    }

    pub fn mul_table(&self) -> &Table {
        &self.mul
    }

    pub fn is_zero_symmetric(&self) -> bool {
        self.zero_symmetric
    }

    /// Whether the structure satisfies `n·0 = 0` as well as the other axioms;
    /// otherwise it is a loop near-ring only in the weaker sense.
    pub fn meets_strict_definition(&self) -> bool {
        self.zero_symmetric
    }

    pub fn units(&self) -> Units {
        let n = self.n();
        let inverse: Vec<Option<usize>> = (0..n)
            .into_par_iter()
            .map(|u| (0..n).find(|&v| self.mul(u, v) == self.one && self.mul(v, u) == self.one))
            .collect();
        let set = ElementSubset::from_members(n, (0..n).filter(|&u| inverse[u].is_some()));
        Units { set, inverse }
    }

    pub fn idempotents(&self) -> ElementSubset {
        ElementSubset::from_members(self.n(), (0..self.n()).filter(|&e| self.mul(e, e) == e))
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        self.mul(e, e) == e
    }

    /// A subloop of `(N, +)` with `N·I ⊆ I`.
    pub fn is_n_subloop(&self, i: &ElementSubset) -> bool {
        i.ambient_n() == self.n() && closure::is_closed(&NSubloopOps(self), i)
    }

    pub fn n_subloop_closure(&self, seed: &ElementSubset) -> ElementSubset {
        closure::close(&NSubloopOps(self), seed.iter())
    }

    pub fn enumerate_n_subloops(&self, bounds: &Bounds) -> Result<Vec<ElementSubset>> {
        Bounds::check("N-subloop lattice order", bounds.lattice_order, self.n())?;
        closure::enumerate_closed(&NSubloopOps(self), bounds.max_closed_sets)
    }

    pub fn maximal_n_subloops(&self, bounds: &Bounds) -> Result<Vec<ElementSubset>> {
        Ok(closure::maximal_proper(&self.enumerate_n_subloops(bounds)?))
    }

    /// `Ann(e) = {y : y·e = 0}` for an idempotent `e`.
    pub fn annihilator(&self, e: usize) -> Result<ElementSubset> {
        if !self.is_idempotent(e) {
            return Err(Error::NotIdempotent(e));
        }
        Ok(ElementSubset::from_members(self.n(), (0..self.n()).filter(|&y| self.mul(y, e) == 0)))
    }

    /// `N·e = {m·e : m ∈ N}`.
    pub fn left_multiples(&self, e: usize) -> ElementSubset {
        ElementSubset::from_members(self.n(), (0..self.n()).map(|m| self.mul(m, e)))
    }

    /// Whether every element is `a + m·e` with `a ∈ Ann(e)`.
    pub fn annihilator_splitting_covers(&self, e: usize) -> Result<bool> {
        let ann = self.annihilator(e)?;
        let ne = self.left_multiples(e);
        let mut hit = ElementSubset::empty(self.n());
        for a in ann.iter() {
            for m in ne.iter() {
                hit.insert(self.add(a, m));
            }
        }
        Ok(hit.is_full())
    }

    /// Decides locality twice: by counting maximal N-subloops and by testing
    /// whether the non-units form an N-subloop. The two must agree.
    pub fn is_local_lnr(&self, bounds: &Bounds) -> Result<LocalityReport> {
        if !self.zero_symmetric {
            return Err(Error::NotZeroSymmetric);
        }
        let lattice = self.enumerate_n_subloops(bounds)?;
        let maximal = closure::maximal_proper(&lattice);
        let via_maximal = maximal.len() == 1;

        let units = self.units();
        let non_units = units.set.complement();
        let via_units = self.is_n_subloop(&non_units);

        assert_eq!(
            via_maximal, via_units,
            "locality procedures disagree: {} maximal N-subloops, non-units closed = {}",
            maximal.len(),
            via_units
        );
        let unique_maximal = if via_maximal {
            assert_eq!(maximal[0], non_units, "unique maximal N-subloop differs from the non-units");
            Some(maximal[0].clone())
        } else {
            None
        };
        Ok(LocalityReport {
            local: via_maximal,
            via_maximal,
            via_units,
            n_subloop_count: lattice.len(),
            maximal,
            non_units,
            unique_maximal,
        })
    }
}

/// The unit group with its inverse map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Units {
    pub set: ElementSubset,
    pub inverse: Vec<Option<usize>>,
}

impl Units {
    pub fn contains(&self, u: usize) -> bool {
        self.set.contains(u)
    }

    pub fn inverse_of(&self, u: usize) -> Option<usize> {
        self.inverse[u]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalityReport {
    pub local: bool,
    /// Exactly one maximal N-subloop exists.
    pub via_maximal: bool,
    /// `N ∖ U(N)` is an N-subloop.
    pub via_units: bool,
    pub n_subloop_count: usize,
    pub maximal: Vec<ElementSubset>,
    pub non_units: ElementSubset,
    pub unique_maximal: Option<ElementSubset>,
}

/// Closure under addition, both differences and left multiplication.
///
/// As for subloops, sums suffice to generate; see
/// [`SubloopOps`](crate::loops::SubloopOps).
pub struct NSubloopOps<'a>(pub &'a LoopNearRing);

impl ClosureOps for NSubloopOps<'_> {
    fn n(&self) -> usize {
        self.0.n()
    }

    fn pair(&self, a: usize, b: usize, emit: &mut dyn FnMut(usize)) {
        emit(self.0.add(a, b));
    }

    fn check_pair(&self, a: usize, b: usize, emit: &mut dyn FnMut(usize)) {
        let l = &self.0.additive;
        emit(l.add(a, b));
        emit(l.ldiff(a, b));
        emit(l.rdiff(a, b));
    }

    /// `x` and `u·x` generate the same N-subloop for a unit `u`.
    fn generator_keys(&self) -> Option<Vec<usize>> {
        let units = self.0.units();
        Some(
            (0..self.0.n())
                .map(|x| units.set.iter().map(|u| self.0.mul(u, x)).min().unwrap_or(x))
                .collect(),
        )
    }

    fn single(&self, a: usize, emit: &mut dyn FnMut(usize)) {
        for m in 0..self.0.n() {
            emit(self.0.mul(m, a));
        }
    }
}
