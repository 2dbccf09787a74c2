//! Decomposition of the regular right module `A_A` into indecomposable
//! summands `eA`, and certification that the decomposition is unique up to
//! permutation and isomorphism.
//!
//! Modules are only ever represented as corners: a summand is `eA` for an
//! idempotent `e`, its endomorphism ring is `eAe`, and `eA ≅ fA` is decided
//! by searching for `a ∈ eAf`, `b ∈ fAe` with `ab = e`, `ba = f`.

use std::fmt;

use sha2::{Digest, Sha256};

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::rings::{self, FiniteRing};

/// `eAe` with identity `e`, re-indexed by position in `carrier`.
#[derive(Debug, Clone)]
pub struct CornerRing {
    pub idempotent: usize,
    /// Parent elements of `eAe`, sorted.
    pub carrier: Vec<usize>,
    pub ring: FiniteRing,
}

pub fn corner_ring(ring: &FiniteRing, e: usize) -> Result<CornerRing> {
    require_idempotent(ring, e)?;
    let carrier = ring.sandwich(e, e).members();
    let corner = ring.restrict(&carrier, e)?;
    Ok(CornerRing { idempotent: e, carrier, ring: corner })
}

fn require_idempotent(ring: &FiniteRing, e: usize) -> Result<()> {
    if e >= ring.n() || ring.mul(e, e) != e {
        return Err(Error::NotIdempotent(e));
    }
    Ok(())
}

/// Idempotents of `A` lying in `eAe`, i.e. the idempotents of the corner.
fn corner_idempotents(ring: &FiniteRing, e: usize) -> Vec<usize> {
    ring.sandwich(e, e).iter().filter(|&g| ring.mul(g, g) == g).collect()
}

/// `e ≠ 0` is primitive iff `eAe` has no idempotents besides `0` and `e`.
pub fn is_primitive(ring: &FiniteRing, e: usize) -> Result<bool> {
    require_idempotent(ring, e)?;
    if e == 0 {
        return Err(Error::ZeroIdempotent);
    }
    Ok(corner_idempotents(ring, e).len() == 2)
}

/// `eA` has a local endomorphism ring.
pub fn is_strongly_indecomposable_corner(ring: &FiniteRing, e: usize) -> Result<bool> {
    require_idempotent(ring, e)?;
    if e == 0 {
        return Err(Error::ZeroIdempotent);
    }
    Ok(rings::is_local_ring(&corner_ring(ring, e)?.ring))
}

/// Pairwise orthogonal idempotents summing to `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdempotentFamily {
    members: Vec<usize>,
}

impl IdempotentFamily {
    /// Checks idempotence, orthogonality and completeness; members are sorted.
    pub fn new(ring: &FiniteRing, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        for &e in &members {
            require_idempotent(ring, e)?;
        }
        let orthogonal = members.iter().enumerate().all(|(i, &e)| {
            members.iter().enumerate().all(|(j, &f)| i == j || ring.mul(e, f) == 0)
        });
        let sum = members.iter().fold(0, |acc, &e| ring.add(acc, e));
        if !orthogonal || sum != ring.one() {
            return Err(Error::PreconditionFailed(format!(
                "{members:?} is not a complete orthogonal family"
            )));
        }
        Ok(IdempotentFamily { members })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// The canonical complete family of primitive idempotents.
///
/// Starting from `1`, any member whose corner has a nontrivial idempotent is
/// split at the least such idempotent `g` into `g` and `e − g`.
pub fn decompose_regular(ring: &FiniteRing, bounds: &Bounds) -> Result<IdempotentFamily> {
    Bounds::check("decomposition ring order", bounds.structure_order, ring.n())?;
    let mut done = Vec::new();
    let mut stack = if ring.is_zero_ring() { vec![] } else { vec![ring.one()] };
    while let Some(e) = stack.pop() {
        match corner_idempotents(ring, e).into_iter().find(|&g| g != 0 && g != e) {
            Some(g) => {
                stack.push(ring.sub(e, g));
                stack.push(g);
            }
            None => done.push(e),
        }
    }
    IdempotentFamily::new(ring, done)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyEnumeration {
    pub families: Vec<IdempotentFamily>,
    /// The limit was reached before the search finished.
    pub truncated: bool,
}

/// All complete orthogonal families of primitive idempotents, each sorted,
/// listed in lexicographic order.
pub fn enumerate_complete_primitive_families(
    ring: &FiniteRing,
    limit: usize,
    bounds: &Bounds,
) -> Result<FamilyEnumeration> {
    Bounds::check("family enumeration ring order", bounds.family_ring_order, ring.n())?;
    let primitives: Vec<usize> = ring
        .idempotents()
        .iter()
        .filter(|&e| e != 0 && corner_idempotents(ring, e).len() == 2)
        .collect();

    struct Search<'a> {
        ring: &'a FiniteRing,
        primitives: &'a [usize],
        limit: usize,
        chosen: Vec<usize>,
        out: Vec<IdempotentFamily>,
        truncated: bool,
    }

    impl Search<'_> {
        fn go(&mut self, start: usize, sum: usize) {
            if sum == self.ring.one() && !self.chosen.is_empty() {
                if self.out.len() == self.limit {
                    self.truncated = true;
                } else {
                    self.out.push(IdempotentFamily { members: self.chosen.clone() });
                }
                return;
            }
            for i in start..self.primitives.len() {
                if self.truncated {
                    return;
                }
                let p = self.primitives[i];
                let r = self.ring;
                if self.chosen.iter().all(|&c| r.mul(c, p) == 0 && r.mul(p, c) == 0) {
                    self.chosen.push(p);
                    self.go(i + 1, r.add(sum, p));
                    self.chosen.pop();
                }
            }
        }
    }

    if ring.is_zero_ring() {
        return Ok(FamilyEnumeration { families: vec![IdempotentFamily { members: vec![] }], truncated: false });
    }
    let mut search = Search {
        ring,
        primitives: &primitives,
        limit,
        chosen: Vec::new(),
        out: Vec::new(),
        truncated: false,
    };
    search.go(0, 0);
    Ok(FamilyEnumeration { families: search.out, truncated: search.truncated })
}

/// Isomorphism invariants of a corner ring, used to skip pairs that cannot
/// be isomorphic before running the exact search.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CornerSignature {
    pub size: usize,
    pub units: usize,
    pub idempotents: usize,
    pub table_hash: String,
}

impl fmt::Display for CornerSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}:{}", self.size, self.units, self.idempotents, self.table_hash)
    }
}

pub fn corner_signature(ring: &FiniteRing, e: usize) -> Result<CornerSignature> {
    let corner = corner_ring(ring, e)?.ring;
    Ok(ring_signature(&corner))
}

/// Sorted per-element invariants, hashed.
pub fn ring_signature(ring: &FiniteRing) -> CornerSignature {
    let n = ring.n();
    let units = ring.units();
    let mut rows: Vec<[usize; 6]> = (0..n)
        .map(|x| {
            let mut order = 1;
            let mut acc = x;
            while acc != 0 {
                acc = ring.add(acc, x);
                order += 1;
            }
            let left_zero = (0..n).filter(|&y| ring.mul(x, y) == 0).count();
            let right_zero = (0..n).filter(|&y| ring.mul(y, x) == 0).count();
            let sq = ring.mul(x, x);
            [
                order,
                units.contains(x) as usize,
                (sq == x) as usize,
                (sq == 0) as usize,
                left_zero,
                right_zero,
            ]
        })
        .collect();
    rows.sort_unstable();
    let mut hasher = Sha256::new();
    for row in &rows {
        for v in row {
            hasher.update((*v as u64).to_le_bytes());
        }
    }
    let digest = hasher.finalize();
    let table_hash = digest[..8].iter().map(|b| format!("{b:02x}")).collect();
    CornerSignature {
        size: n,
        units: units.set.len(),
        idempotents: ring.idempotents().len(),
        table_hash,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KsReport {
    pub canonical: IdempotentFamily,
    pub families: Vec<IdempotentFamily>,
    pub truncated: bool,
    pub lengths_equal: bool,
    pub all_matched: bool,
    /// For each family, `matching[i]` is the index of the member matched to
    /// canonical member `i`.
    pub matchings: Vec<Vec<usize>>,
    /// Sorted corner signatures of the canonical family.
    pub signatures: Vec<CornerSignature>,
    /// Every matched pair is also conjugate by a unit.
    pub matched_pairs_conjugate: bool,
}

/// Certifies that every complete primitive family matches the canonical one
/// member-by-member up to isomorphism. Requires every canonical summand to
/// have a local endomorphism ring.
pub fn verify_ks_uniqueness(ring: &FiniteRing, bounds: &Bounds) -> Result<KsReport> {
    let canonical = decompose_regular(ring, bounds)?;
    for &e in canonical.members() {
        if !is_strongly_indecomposable_corner(ring, e)? {
            return Err(Error::HypothesisFailed { witness: e });
        }
    }
    let enumeration = enumerate_complete_primitive_families(ring, bounds.max_families, bounds)?;

    let sig = |e: usize| corner_signature(ring, e);
    let canon_sigs: Vec<CornerSignature> =
        canonical.members().iter().map(|&e| sig(e)).collect::<Result<_>>()?;

    let mut lengths_equal = true;
    let mut all_matched = true;
    let mut conjugate = true;
    let mut matchings = Vec::new();
    for family in &enumeration.families {
        if family.len() != canonical.len() {
            lengths_equal = false;
            all_matched = false;
            matchings.push(vec![]);
            continue;
        }
        let fam_sigs: Vec<CornerSignature> =
            family.members().iter().map(|&e| sig(e)).collect::<Result<_>>()?;
        let mut adj = vec![Vec::new(); canonical.len()];
        for (i, &e) in canonical.members().iter().enumerate() {
            for (j, &f) in family.members().iter().enumerate() {
                if canon_sigs[i] == fam_sigs[j] && rings::idempotents_isomorphic(ring, e, f)? {
                    adj[i].push(j);
                }
            }
        }
        match perfect_matching(&adj, family.len()) {
            Some(m) => {
                for (i, &j) in m.iter().enumerate() {
                    let (e, f) = (canonical.members()[i], family.members()[j]);
                    conjugate &= rings::idempotents_conjugate(ring, e, f)?;
                }
                matchings.push(m);
            }
            None => {
                all_matched = false;
                matchings.push(vec![]);
            }
        }
    }
    let mut signatures = canon_sigs;
    signatures.sort();
    Ok(KsReport {
        canonical,
        families: enumeration.families,
        truncated: enumeration.truncated,
        lengths_equal,
        all_matched,
        matchings,
        signatures,
        matched_pairs_conjugate: conjugate,
    })
}

/// Kuhn's augmenting paths; `adj[i]` lists right vertices for left vertex `i`.
fn perfect_matching(adj: &[Vec<usize>], right: usize) -> Option<Vec<usize>> {
    fn augment(i: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                if owner[j].is_none_or(|k| augment(k, adj, seen, owner)) {
                    owner[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    let mut owner = vec![None; right];
    for i in 0..adj.len() {
        let mut seen = vec![false; right];
        if !augment(i, adj, &mut seen, &mut owner) {
            return None;
        }
    }
    let mut m = vec![0; adj.len()];
    for (j, o) in owner.iter().enumerate() {
        if let Some(i) = o {
            m[*i] = j;
        }
    }
    Some(m)
}

/// For every primitive idempotent `f`, the canonical member it is
/// isomorphic to, if any.
pub fn retract_matching(ring: &FiniteRing, bounds: &Bounds) -> Result<Vec<(usize, Option<usize>)>> {
    let canonical = decompose_regular(ring, bounds)?;
    ring.idempotents()
        .iter()
        .filter(|&f| f != 0 && corner_idempotents(ring, f).len() == 2)
        .map(|f| {
            for &e in canonical.members() {
                if rings::idempotents_isomorphic(ring, f, e)? {
                    return Ok((f, Some(e)));
                }
            }
            Ok((f, None))
        })
        .collect()
}
