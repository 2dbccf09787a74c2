//! Finite algebraic loops as validated Cayley tables.
//!
//! The carrier is always `0..n` and the additive zero is element `0`.
//! Both difference operations are tabulated when a loop is validated:
//! `ldiff(a, b)` is the unique `x` with `a + x = b`, and `rdiff(b, a)` is
//! the unique `y` with `y + a = b`.

use crate::axioms;
use crate::bounds::Bounds;
use crate::closure::{self, ClosureOps};
use crate::error::{Error, Result, ValidationError};
use crate::subset::ElementSubset;
use crate::table::Table;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CayleyLoop {
    add: Table,
    ldiff: Table,
    rdiff: Table,
}

impl std::fmt::Debug for CayleyLoop {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CayleyLoop").field("add", &self.add).finish()
    }
}

/// Validates an addition table and derives the difference tables.
pub fn validate_loop(rows: &[Vec<usize>]) -> std::result::Result<CayleyLoop, ValidationError> {
    CayleyLoop::new(Table::from_rows(rows)?)
}

impl CayleyLoop {
    pub fn new(add: Table) -> std::result::Result<Self, ValidationError> {
        let n = add.n();
        if let Some(e) = axioms::latin_rows(&add)
            .or_else(|| axioms::latin_columns(&add))
            .or_else(|| axioms::two_sided_zero(&add))
        {
            return Err(e);
        }

        let mut ldiff = vec![0usize; n * n];
        let mut rdiff = vec![0usize; n * n];
        for a in 0..n {
            for x in 0..n {
                let s = add.get(a, x);
                ldiff[a * n + s] = x;
                rdiff[s * n + x] = a;
            }
        }
        Ok(CayleyLoop {
            ldiff: Table::from_fn(n, |a, b| ldiff[a * n + b]),
            rdiff: Table::from_fn(n, |b, a| rdiff[b * n + a]),
            add,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.add.n()
    }

    #[inline]
    pub fn zero(&self) -> usize {
        0
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.get(a, b)
    }

    /// `a ⧵ b`: the unique `x` with `a + x = b`.
    #[inline]
    pub fn ldiff(&self, a: usize, b: usize) -> usize {
        self.ldiff.get(a, b)
    }

    /// `b ⌿ a`: the unique `y` with `y + a = b`.
    #[inline]
    pub fn rdiff(&self, b: usize, a: usize) -> usize {
        self.rdiff.get(b, a)
    }

    pub fn add_table(&self) -> &Table {
        &self.add
    }

    /// First triple (in lexicographic order) with `(a+b)+c != a+(b+c)`.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.n();
        for a in 0..n {
            for b in 0..n {
                let ab = self.add(a, b);
                for c in 0..n {
                    if self.add(ab, c) != self.add(a, self.add(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.n();
        (0..n).all(|a| (a + 1..n).all(|b| self.add(a, b) == self.add(b, a)))
    }

    pub fn subloop_closure(&self, seed: &ElementSubset) -> ElementSubset {
        closure::close(&SubloopOps(self), seed.iter())
    }

    pub fn is_subloop(&self, s: &ElementSubset) -> bool {
        s.ambient_n() == self.n() && closure::is_closed(&SubloopOps(self), s)
    }

    /// Every subloop, sorted by (size, members).
    pub fn enumerate_subloops(&self, bounds: &Bounds) -> Result<Vec<ElementSubset>> {
        Bounds::check("subloop enumeration order", bounds.subloop_order, self.n())?;
        closure::enumerate_closed(&SubloopOps(self), bounds.max_closed_sets)
    }

    /// Checks `a+K = K+a`, `(a+b)+K = a+(b+K)` and `(K+a)+b = K+(a+b)`.
    pub fn is_normal_subloop(&self, k: &ElementSubset) -> Result<bool> {
        if !self.is_subloop(k) {
            return Err(Error::NotASubloop);
        }
        let n = self.n();
        let members = k.members();
        let mut scratch = ElementSubset::empty(n);
        let mut same = |lhs: &dyn Fn(usize) -> usize, rhs: &dyn Fn(usize) -> usize| {
            for &x in &members {
                scratch.insert(lhs(x));
            }
            let eq = members.iter().all(|&x| scratch.contains(rhs(x)));
            for &x in &members {
                scratch.remove(lhs(x));
            }
            eq
        };
        for a in 0..n {
            if !same(&|x| self.add(a, x), &|x| self.add(x, a)) {
                return Ok(false);
            }
            for b in 0..n {
                let ab = self.add(a, b);
                if !same(&|x| self.add(ab, x), &|x| self.add(a, self.add(b, x))) {
                    return Ok(false);
                }
                if !same(&|x| self.add(self.add(x, a), b), &|x| self.add(x, ab)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Direct product with mixed-radix indexing: the first factor is the
    /// most significant digit.
    pub fn product(factors: &[&CayleyLoop]) -> CayleyLoop {
        let sizes: Vec<usize> = factors.iter().map(|l| l.n()).collect();
        let n: usize = sizes.iter().product();
        let table = Table::from_fn(n, |a, b| {
            let (da, db) = (mixed_radix_digits(a, &sizes), mixed_radix_digits(b, &sizes));
            let digits: Vec<usize> =
                factors.iter().enumerate().map(|(i, l)| l.add(da[i], db[i])).collect();
            mixed_radix_index(&digits, &sizes)
        });
        CayleyLoop::new(table).expect("product of loops is a loop")
    }
}

pub(crate) fn mixed_radix_digits(mut x: usize, sizes: &[usize]) -> Vec<usize> {
    let mut digits = vec![0; sizes.len()];
    for i in (0..sizes.len()).rev() {
        digits[i] = x % sizes[i];
        x /= sizes[i];
    }
    digits
}

pub(crate) fn mixed_radix_index(digits: &[usize], sizes: &[usize]) -> usize {
    digits.iter().zip(sizes).fold(0, |acc, (&d, &s)| acc * s + d)
}

/// Closure under addition and both differences.
///
/// In a finite loop a subset closed under `+` is already closed under both
/// differences (translations are injective, hence onto the subset), so
/// generation only emits sums; `is_closed` still checks all three.
pub struct SubloopOps<'a>(pub &'a CayleyLoop);

impl ClosureOps for SubloopOps<'_> {
    fn n(&self) -> usize {
        self.0.n()
    }

    fn pair(&self, a: usize, b: usize, emit: &mut dyn FnMut(usize)) {
        emit(self.0.add(a, b));
    }

    fn check_pair(&self, a: usize, b: usize, emit: &mut dyn FnMut(usize)) {
        emit(self.0.add(a, b));
        emit(self.0.ldiff(a, b));
        emit(self.0.rdiff(a, b));
    }
}

/// A validated loop homomorphism `G → H`.
#[derive(Debug, Clone)]
pub struct LoopHom<'a> {
    source: &'a CayleyLoop,
    target: &'a CayleyLoop,
    map: Vec<usize>,
}

pub fn validate_loop_hom<'a>(
    map: &[usize],
    source: &'a CayleyLoop,
    target: &'a CayleyLoop,
) -> std::result::Result<LoopHom<'a>, ValidationError> {
    check_map_shape(map, source.n(), target.n())?;
    let n = source.n();
    for a in 0..n {
        for b in 0..n {
            if map[source.add(a, b)] != target.add(map[a], map[b]) {
                return Err(ValidationError::NotAHomomorphism(crate::error::HomWitness::Add(a, b)));
            }
        }
    }
    Ok(LoopHom { source, target, map: map.to_vec() })
}

pub(crate) fn check_map_shape(
    map: &[usize],
    source_n: usize,
    target_n: usize,
) -> std::result::Result<(), ValidationError> {
    if map.len() != source_n {
        return Err(ValidationError::MapNotTotal { expected: source_n, got: map.len() });
    }
    if let Some((element, &image)) = map.iter().enumerate().find(|(_, &v)| v >= target_n) {
        return Err(ValidationError::MapOutOfRange { element, image, n: target_n });
    }
    Ok(())
}

impl<'a> LoopHom<'a> {
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn source(&self) -> &'a CayleyLoop {
        self.source
    }

    pub fn target(&self) -> &'a CayleyLoop {
        self.target
    }

    pub fn kernel(&self) -> ElementSubset {
        ElementSubset::from_members(self.source.n(), (0..self.source.n()).filter(|&a| self.map[a] == 0))
    }

    pub fn image(&self) -> ElementSubset {
        ElementSubset::from_members(self.target.n(), self.map.iter().copied())
    }
}
