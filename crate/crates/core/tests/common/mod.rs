//! Brute-force oracles. Nothing here uses the library's closure engine,
//! difference tables or unit/idempotent routines.
#![allow(dead_code)]

use loopnr::{CayleyLoop, FiniteRing, LoopNearRing};

/// The unique `x` with `a + x = b`, by scanning.
pub fn ldiff(l: &CayleyLoop, a: usize, b: usize) -> usize {
    let xs: Vec<usize> = (0..l.n()).filter(|&x| l.add(a, x) == b).collect();
    assert_eq!(xs.len(), 1);
    xs[0]
}

/// The unique `y` with `y + a = b`, by scanning.
pub fn rdiff(l: &CayleyLoop, b: usize, a: usize) -> usize {
    let ys: Vec<usize> = (0..l.n()).filter(|&y| l.add(y, a) == b).collect();
    assert_eq!(ys.len(), 1);
    ys[0]
}

fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

/// All subsets containing 0, as sorted member lists.
fn subsets_with_zero(n: usize) -> impl Iterator<Item = Vec<usize>> {
    assert!(n <= 20, "oracle enumerates all subsets");
    (0..1u64 << n).filter(|m| m & 1 == 1).map(move |m| members(m, n))
}

pub fn is_subloop(l: &CayleyLoop, s: &[usize]) -> bool {
    s.contains(&0)
        && s.iter().all(|&a| {
            s.iter().all(|&b| s.contains(&l.add(a, b)) && s.contains(&ldiff(l, a, b)) && s.contains(&rdiff(l, a, b)))
        })
}

/// Subloops sorted by (size, members), like the library.
pub fn subloops(l: &CayleyLoop) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = subsets_with_zero(l.n()).filter(|s| is_subloop(l, s)).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

fn coset<I: IntoIterator<Item = usize>>(it: I) -> Vec<usize> {
    let mut v: Vec<usize> = it.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// The three coset identities, checked with explicit element sets.
pub fn is_normal(l: &CayleyLoop, k: &[usize]) -> bool {
    let n = l.n();
    (0..n).all(|a| {
        let left = coset(k.iter().map(|&x| l.add(a, x)));
        let right = coset(k.iter().map(|&x| l.add(x, a)));
        left == right
            && (0..n).all(|b| {
                coset(k.iter().map(|&x| l.add(l.add(a, b), x))) == coset(k.iter().map(|&x| l.add(a, l.add(b, x))))
                    && coset(k.iter().map(|&x| l.add(l.add(x, a), b)))
                        == coset(k.iter().map(|&x| l.add(x, l.add(a, b))))
            })
    })
}

pub fn units(r: &LoopNearRing) -> Vec<usize> {
    let n = r.n();
    (0..n).filter(|&u| (0..n).any(|v| r.mul(u, v) == r.one() && r.mul(v, u) == r.one())).collect()
}

pub fn idempotents(r: &LoopNearRing) -> Vec<usize> {
    (0..r.n()).filter(|&e| r.mul(e, e) == e).collect()
}

pub fn n_subloops(r: &LoopNearRing) -> Vec<Vec<usize>> {
    let n = r.n();
    let mut out: Vec<Vec<usize>> = subsets_with_zero(n)
        .filter(|s| is_subloop(r.additive(), s) && (0..n).all(|m| s.iter().all(|&x| s.contains(&r.mul(m, x)))))
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

pub fn maximal_proper(sets: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    let proper: Vec<&Vec<usize>> = sets.iter().filter(|s| s.len() < n).collect();
    proper
        .iter()
        .filter(|s| !proper.iter().any(|t| t.len() > s.len() && s.iter().all(|x| t.contains(x))))
        .map(|s| (*s).clone())
        .collect()
}

/// Intersection of the maximal left ideals, by subset enumeration.
pub fn radical(r: &FiniteRing) -> Vec<usize> {
    let ideals = n_subloops(r.lnr());
    let maximal = maximal_proper(&ideals, r.n());
    (0..r.n()).filter(|x| maximal.iter().all(|m| m.contains(x))).collect()
}

/// Index of a 2×2 matrix `[[a, b], [c, d]]` over a ring of order `q`.
pub fn mat2(q: usize, a: usize, b: usize, c: usize, d: usize) -> usize {
    ((a * q + b) * q + c) * q + d
}
