//! Individual axiom checks on raw operation tables.
//!
//! Each check returns the least failing witness in lexicographic order, or
//! `None`. Validators chain them and stop at the first failure; [`audit`]
//! runs every check that applies and collects all failures.

use rayon::prelude::*;

use crate::error::{Line, ValidationError};
use crate::table::Table;

pub fn latin_rows(add: &Table) -> Option<ValidationError> {
    let n = add.n();
    let mut seen = vec![usize::MAX; n];
    for a in 0..n {
        for v in add.row(a) {
            if seen[v] == a {
                return Some(ValidationError::NotLatinSquare { line: Line::Row, index: a, value: v });
            }
            seen[v] = a;
        }
    }
    None
}

pub fn latin_columns(add: &Table) -> Option<ValidationError> {
    let n = add.n();
    let mut seen = vec![usize::MAX; n];
    for b in 0..n {
        for a in 0..n {
            let v = add.get(a, b);
            if seen[v] == b {
                return Some(ValidationError::NotLatinSquare { line: Line::Column, index: b, value: v });
            }
            seen[v] = b;
        }
    }
    None
}

pub fn two_sided_zero(add: &Table) -> Option<ValidationError> {
    (0..add.n())
        .find(|&a| add.get(0, a) != a || add.get(a, 0) != a)
        .map(|w| ValidationError::NoTwoSidedZero { witness: w })
}

pub fn identity(mul: &Table, one: usize) -> Option<ValidationError> {
    let n = mul.n();
    if one >= n {
        return Some(ValidationError::EntryOutOfRange { row: 0, col: 0, value: one, n });
    }
    (0..n)
        .find(|&a| mul.get(one, a) != a || mul.get(a, one) != a)
        .map(|w| ValidationError::NotIdentity { one, witness: w })
}

/// First `(a, b, c)` with `pred` false, scanning `a` in parallel.
fn first_triple(n: usize, pred: impl Fn(usize, usize, usize) -> bool + Sync) -> Option<(usize, usize, usize)> {
    (0..n).into_par_iter().find_map_first(|a| {
        for b in 0..n {
            for c in 0..n {
                if !pred(a, b, c) {
                    return Some((a, b, c));
                }
            }
        }
        None
    })
}

pub fn mul_associative(mul: &Table) -> Option<ValidationError> {
    first_triple(mul.n(), |a, b, c| mul.get(mul.get(a, b), c) == mul.get(a, mul.get(b, c)))
        .map(|(a, b, c)| ValidationError::MulNotAssociative(a, b, c))
}

/// `(a+b)·c = a·c + b·c`.
pub fn right_distributive(add: &Table, mul: &Table) -> Option<ValidationError> {
    first_triple(add.n(), |a, b, c| mul.get(add.get(a, b), c) == add.get(mul.get(a, c), mul.get(b, c)))
        .map(|(a, b, c)| ValidationError::RightDistributivityFails(a, b, c))
}

/// `a·(b+c) = a·b + a·c`.
pub fn left_distributive(add: &Table, mul: &Table) -> Option<ValidationError> {
    first_triple(add.n(), |a, b, c| mul.get(a, add.get(b, c)) == add.get(mul.get(a, b), mul.get(a, c)))
        .map(|(a, b, c)| ValidationError::LeftDistributivityFails(a, b, c))
}

/// `0·a = 0`.
pub fn zero_left_absorbing(mul: &Table) -> Option<ValidationError> {
    (0..mul.n()).find(|&a| mul.get(0, a) != 0).map(ValidationError::ZeroNotLeftAbsorbing)
}

pub fn addition_commutative(add: &Table) -> Option<ValidationError> {
    let n = add.n();
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .find(|&(a, b)| add.get(a, b) != add.get(b, a))
        .map(|(a, b)| ValidationError::AdditionNotAbelianGroup(format!("{a}+{b} != {b}+{a}")))
}

pub fn addition_associative(add: &Table) -> Option<ValidationError> {
    first_triple(add.n(), |a, b, c| add.get(add.get(a, b), c) == add.get(a, add.get(b, c))).map(|(a, b, c)| {
        ValidationError::AdditionNotAbelianGroup(format!("({a}+{b})+{c} != {a}+({b}+{c})"))
    })
}

/// Every failed axiom for the given kind: `loop` checks the Latin square and
/// zero, near-rings add the monoid and distributivity axioms, rings add the
/// abelian group and left distributivity.
pub fn audit(kind: &str, add: &Table, mul: Option<&Table>, one: Option<usize>) -> Vec<ValidationError> {
    let mut out: Vec<ValidationError> =
        [latin_rows(add), latin_columns(add), two_sided_zero(add)].into_iter().flatten().collect();
    if kind == "loop" {
        return out;
    }
    let (Some(mul), Some(one)) = (mul, one) else {
        return out;
    };
    if mul.n() != add.n() {
        out.push(ValidationError::SizeMismatch(add.n(), mul.n()));
        return out;
    }
    out.extend(
        [identity(mul, one), mul_associative(mul), right_distributive(add, mul), zero_left_absorbing(mul)]
            .into_iter()
            .flatten(),
    );
    if kind == "ring" {
        out.extend(
            [addition_commutative(add), addition_associative(add), left_distributive(add, mul)]
                .into_iter()
                .flatten(),
        );
    }
    out
}
