//! Closure under finitary operations, and enumeration of closed subsets.
//!
//! Subloops, N-subloops, left ideals and subrings are all the fixed points
//! of some closure operator on the carrier. Each is described by a
//! [`ClosureOps`] impl; this module computes closures incrementally and
//! enumerates the whole lattice as joins of principal closures.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::subset::ElementSubset;

/// Generating operations of a closure system on `0..n()`.
///
/// Element `0` is always part of every closed set.
pub trait ClosureOps: Sync {
    fn n(&self) -> usize;

    /// Emits everything forced by the ordered pair `(a, b)`.
    fn pair(&self, a: usize, b: usize, emit: &mut dyn FnMut(usize));

    /// Emits everything forced by `a` alone.
    fn single(&self, _a: usize, _emit: &mut dyn FnMut(usize)) {}

    /// Extra elements the membership check must cover beyond `pair`.
    ///
    /// Generation may use a smaller set of operations than the definition
    /// when both have the same fixed points; `is_closed` checks these too.
    fn check_pair(&self, a: usize, b: usize, emit: &mut dyn FnMut(usize)) {
        self.pair(a, b, emit);
    }

    /// Canonical generator for `x`: elements with the same key have the same
    /// principal closure. Defaults to `x` itself.
    fn generator_keys(&self) -> Option<Vec<usize>> {
        None
    }
}

/// Closes `base ∪ extra`, assuming `base` is already closed.
pub fn extend<O: ClosureOps + ?Sized>(
    ops: &O,
    base: &ElementSubset,
    extra: impl IntoIterator<Item = usize>,
) -> ElementSubset {
    let mut set = base.clone();
    let mut members: Vec<usize> = base.members();
    let mut done = members.len();
    for x in extra {
        if set.insert(x) {
            members.push(x);
        }
    }
    if set.insert(0) {
        members.push(0);
    }
    let mut pending = Vec::new();
    while done < members.len() {
        let a = members[done];
        {
            let mut emit = |v: usize| pending.push(v);
            ops.single(a, &mut emit);
            for &b in &members[..=done] {
                ops.pair(a, b, &mut emit);
                if a != b {
                    ops.pair(b, a, &mut emit);
                }
            }
        }
        for v in pending.drain(..) {
            if set.insert(v) {
                members.push(v);
            }
        }
        done += 1;
    }
    set
}

/// Smallest closed set containing `seed` (and `0`).
pub fn close<O: ClosureOps + ?Sized>(
    ops: &O,
    seed: impl IntoIterator<Item = usize>,
) -> ElementSubset {
    extend(ops, &ElementSubset::empty(ops.n()), seed)
}

/// True iff `set` contains `0` and is closed under `ops`.
pub fn is_closed<O: ClosureOps + ?Sized>(ops: &O, set: &ElementSubset) -> bool {
    if !set.contains(0) {
        return false;
    }
    let members = set.members();
    let mut ok = true;
    let mut check = |v: usize| ok &= set.contains(v);
    for &a in &members {
        ops.single(a, &mut check);
        for &b in &members {
            ops.check_pair(a, b, &mut check);
        }
    }
    ok
}

/// All closed subsets, sorted by (size, members).
///
/// Every closed set is a join of principal closures, so a breadth-first
/// search from `{0}` that joins one principal closure at a time reaches all
/// of them.
pub fn enumerate_closed<O: ClosureOps + ?Sized>(
    ops: &O,
    max_sets: usize,
) -> Result<Vec<ElementSubset>> {
    let n = ops.n();
    let bottom = close(ops, []);

    let generators: Vec<usize> = match ops.generator_keys() {
        Some(keys) => {
            let mut g = keys;
            g.sort_unstable();
            g.dedup();
            g
        }
        None => (0..n).collect(),
    };
    let mut principals: Vec<ElementSubset> =
        generators.into_par_iter().map(|x| close(ops, [x])).collect();
    principals.sort();
    principals.dedup();

    let mut seen: HashSet<ElementSubset> = HashSet::new();
    seen.insert(bottom.clone());
    let mut frontier = vec![bottom];
    while !frontier.is_empty() {
        let joins: Vec<Vec<ElementSubset>> = frontier
            .par_iter()
            .map(|s| {
                principals
                    .iter()
                    .filter(|p| !p.is_subset(s))
                    .map(|p| extend(ops, s, p.iter().filter(|&x| !s.contains(x))))
                    .collect()
            })
            .collect();
        let mut next = Vec::new();
        for t in joins.into_iter().flatten() {
            if !seen.contains(&t) {
                seen.insert(t.clone());
                next.push(t);
                if seen.len() > max_sets {
                    return Err(Error::BoundExceeded {
                        what: "closed subsets",
                        limit: max_sets,
                        actual: seen.len(),
                    });
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<ElementSubset> = seen.into_iter().collect();
    all.sort();
    Ok(all)
}

/// Proper members of `sets` not strictly contained in another proper member.
pub fn maximal_proper(sets: &[ElementSubset]) -> Vec<ElementSubset> {
    let proper: Vec<&ElementSubset> = sets.iter().filter(|s| !s.is_full()).collect();
    let mut out: Vec<ElementSubset> = proper
        .iter()
        .filter(|s| !proper.iter().any(|t| s.is_proper_subset(t)))
        .map(|s| (*s).clone())
        .collect();
    out.sort();
    out
}
