//! Constructors for the structure corpus and the `family:args` spec grammar.
//!
//! Indexing conventions (fixed, so that files and reports are portable):
//!
//! * products and matrices use mixed radix with the first factor (or the
//!   first matrix entry in row-major order) as the most significant digit;
//! * upper-triangular matrices list the entries on and above the diagonal in
//!   row-major order;
//! * a map `f: G → G` in `M(G)` is the digit string `f(0) f(1) … f(n-1)`,
//!   and in `M₀(G)` the string `f(1) … f(n-1)`, again most significant first;
//! * `f4` is `F₂[x]/(x² + x + 1)` with `b₀ + b₁x` at index `b₀ + 2b₁`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bounds::Bounds;
use crate::error::{Error, Result, ValidationError};
use crate::loops::{mixed_radix_digits, mixed_radix_index, CayleyLoop};
use crate::nearrings::LoopNearRing;
use crate::rings::{validate_ring, FiniteRing};
use crate::table::Table;

/// Any of the three structure kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Loop(CayleyLoop),
    NearRing(LoopNearRing),
    Ring(FiniteRing),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Loop(_) => "loop",
            Structure::NearRing(_) => "lnr",
            Structure::Ring(_) => "ring",
        }
    }

    pub fn n(&self) -> usize {
        self.additive().n()
    }

    pub fn additive(&self) -> &CayleyLoop {
        match self {
            Structure::Loop(l) => l,
            Structure::NearRing(n) => n.additive(),
            Structure::Ring(r) => r.lnr().additive(),
        }
    }

    pub fn as_lnr(&self) -> Option<&LoopNearRing> {
        match self {
            Structure::Loop(_) => None,
            Structure::NearRing(n) => Some(n),
            Structure::Ring(r) => Some(r.lnr()),
        }
    }

    pub fn as_ring(&self) -> Option<&FiniteRing> {
        match self {
            Structure::Ring(r) => Some(r),
            _ => None,
        }
    }

    /// Promotes a loop near-ring to a ring when the ring axioms hold.
    pub fn from_lnr(lnr: LoopNearRing) -> Structure {
        if crate::rings::check_ring_axioms(&lnr).is_ok() {
            Structure::Ring(validate_ring(lnr).expect("ring axioms were checked"))
        } else {
            Structure::NearRing(lnr)
        }
    }
}

pub fn cyclic_ring(n: usize) -> FiniteRing {
    assert!(n >= 1, "Z/n needs n >= 1");
    FiniteRing::from_tables(
        Table::from_fn(n, |a, b| (a + b) % n),
        Table::from_fn(n, |a, b| (a * b) % n),
        1 % n,
    )
    .expect("Z/n is a ring")
}

pub fn cyclic_loop(n: usize) -> CayleyLoop {
    CayleyLoop::new(Table::from_fn(n, |a, b| (a + b) % n)).expect("Z/n is a loop")
}

/// The field with four elements.
pub fn field4() -> FiniteRing {
    let mul = |a: usize, b: usize| {
        let (a0, a1, b0, b1) = (a & 1, a >> 1, b & 1, b >> 1);
        // x² = x + 1
        let c0 = (a0 & b0) ^ (a1 & b1);
        let c1 = (a0 & b1) ^ (a1 & b0) ^ (a1 & b1);
        c0 | c1 << 1
    };
    FiniteRing::from_tables(Table::from_fn(4, |a, b| a ^ b), Table::from_fn(4, mul), 1)
        .expect("F4 is a ring")
}

/// The symmetric group on three letters as a loop, permutations in
/// lexicographic order (identity first).
pub fn symmetric3_loop() -> CayleyLoop {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("permutation");
    CayleyLoop::new(Table::from_fn(6, |a, b| {
        let (p, q) = (perms[a], perms[b]);
        idx([p[q[0]], p[q[1]], p[q[2]]])
    }))
    .expect("S3 is a loop")
}

/// Rings of `k × k` matrices whose entries are restricted to `positions`.
fn matrix_like(
    base: &FiniteRing,
    k: usize,
    positions: &[(usize, usize)],
) -> std::result::Result<FiniteRing, ValidationError> {
    let b = base.n();
    let sizes = vec![b; positions.len()];
    let n: usize = sizes.iter().product();
    let slot = |i: usize, j: usize| positions.iter().position(|&p| p == (i, j));
    let to_matrix = |x: usize| {
        let digits = mixed_radix_digits(x, &sizes);
        let mut m = vec![0; k * k];
        for (d, &(i, j)) in digits.iter().zip(positions) {
            m[i * k + j] = *d;
        }
        m
    };
    let to_index = |m: &[usize]| {
        let digits: Vec<usize> = positions.iter().map(|&(i, j)| m[i * k + j]).collect();
        mixed_radix_index(&digits, &sizes)
    };
    let mats: Vec<Vec<usize>> = (0..n).map(to_matrix).collect();
    let add = Table::from_fn(n, |x, y| {
        let m: Vec<usize> = mats[x].iter().zip(&mats[y]).map(|(&p, &q)| base.add(p, q)).collect();
        to_index(&m)
    });
    let mul = Table::from_fn(n, |x, y| {
        let (p, q) = (&mats[x], &mats[y]);
        let mut m = vec![0; k * k];
        for i in 0..k {
            for j in 0..k {
                m[i * k + j] = (0..k).fold(0, |acc, l| base.add(acc, base.mul(p[i * k + l], q[l * k + j])));
            }
        }
        debug_assert!((0..k).all(|i| (0..k).all(|j| m[i * k + j] == 0 || slot(i, j).is_some())));
        to_index(&m)
    });
    let mut identity = vec![0; k * k];
    for i in 0..k {
        identity[i * k + i] = base.one();
    }
    FiniteRing::from_tables(add, mul, to_index(&identity))
}

pub fn matrix_ring(base: &FiniteRing, k: usize, bounds: &Bounds) -> Result<FiniteRing> {
    let size = checked_pow(base.n(), k * k);
    Bounds::check("matrix ring order", bounds.matrix_order, size)?;
    let positions: Vec<(usize, usize)> = (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect();
    Ok(matrix_like(base, k, &positions)?)
}

pub fn upper_triangular_ring(base: &FiniteRing, k: usize, bounds: &Bounds) -> Result<FiniteRing> {
    let size = checked_pow(base.n(), k * (k + 1) / 2);
    Bounds::check("upper-triangular ring order", bounds.matrix_order, size)?;
    let positions: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    Ok(matrix_like(base, k, &positions)?)
}

fn checked_pow(base: usize, exp: usize) -> usize {
    (base as u128).checked_pow(exp as u32).map_or(usize::MAX, |v| v.min(usize::MAX as u128) as usize)
}

/// Componentwise product of loop near-rings.
pub fn product_lnr(factors: &[&LoopNearRing], bounds: &Bounds) -> Result<LoopNearRing> {
    let sizes: Vec<usize> = factors.iter().map(|f| f.n()).collect();
    let n = sizes.iter().fold(1usize, |acc, &s| acc.saturating_mul(s));
    Bounds::check("product order", bounds.structure_order, n)?;
    let loops: Vec<&CayleyLoop> = factors.iter().map(|f| f.additive()).collect();
    let additive = CayleyLoop::product(&loops);
    let mul = Table::from_fn(n, |a, b| {
        let (da, db) = (mixed_radix_digits(a, &sizes), mixed_radix_digits(b, &sizes));
        let d: Vec<usize> = factors.iter().enumerate().map(|(i, f)| f.mul(da[i], db[i])).collect();
        mixed_radix_index(&d, &sizes)
    });
    let ones: Vec<usize> = factors.iter().map(|f| f.one()).collect();
    Ok(LoopNearRing::new(additive, mul, mixed_radix_index(&ones, &sizes))?)
}

pub fn product_rings(factors: &[&FiniteRing], bounds: &Bounds) -> Result<FiniteRing> {
    let lnrs: Vec<&LoopNearRing> = factors.iter().map(|f| f.lnr()).collect();
    Ok(validate_ring(product_lnr(&lnrs, bounds)?)?)
}

/// Reverses multiplication. Fails with the right-distributivity witness
/// when the opposite is not a right loop near-ring.
pub fn opposite(lnr: &LoopNearRing) -> std::result::Result<LoopNearRing, ValidationError> {
    let mul = Table::from_fn(lnr.n(), |a, b| lnr.mul(b, a));
    LoopNearRing::new(lnr.additive().clone(), mul, lnr.one())
}

/// `M(G)` (all self-maps) or `M₀(G)` (maps fixing `0`) under pointwise
/// addition and composition.
pub fn map_near_ring(g: &CayleyLoop, zero_fixing: bool, bounds: &Bounds) -> Result<LoopNearRing> {
    let n = g.n();
    let free = if zero_fixing { n - 1 } else { n };
    let size = checked_pow(n, free);
    Bounds::check("map near-ring order", bounds.structure_order, size)?;
    let offset = n - free;
    let sizes = vec![n; free];
    let maps: Vec<Vec<usize>> = (0..size)
        .map(|x| {
            let mut f = vec![0; offset];
            f.extend(mixed_radix_digits(x, &sizes));
            f
        })
        .collect();
    let index = |f: &[usize]| mixed_radix_index(&f[offset..], &sizes);
    let add = Table::from_fn(size, |a, b| {
        let f: Vec<usize> = (0..n).map(|x| g.add(maps[a][x], maps[b][x])).collect();
        index(&f)
    });
    let mul = Table::from_fn(size, |a, b| {
        let f: Vec<usize> = (0..n).map(|x| maps[a][maps[b][x]]).collect();
        index(&f)
    });
    let identity: Vec<usize> = (0..n).collect();
    Ok(LoopNearRing::new(CayleyLoop::new(add)?, mul, index(&identity))?)
}

/// All loops on `0..n` with `0` as zero (reduced Latin squares), in
/// lexicographic order of their row-major tables.
pub fn reduced_loops(n: usize) -> Vec<CayleyLoop> {
    assert!((1..=6).contains(&n), "reduced loop enumeration supports orders 1..=6");
    let mut out = Vec::new();
    let mut grid = vec![vec![0usize; n]; n];
    for i in 0..n {
        grid[0][i] = i;
        grid[i][0] = i;
    }
    let full: u32 = (1 << n) - 1;
    let mut rows = vec![0u32; n];
    let mut cols = vec![0u32; n];
    for i in 0..n {
        rows[i] |= 1 << i;
        cols[i] |= 1 << i;
    }
    fn fill(
        cell: usize,
        n: usize,
        grid: &mut Vec<Vec<usize>>,
        rows: &mut [u32],
        cols: &mut [u32],
        full: u32,
        out: &mut Vec<CayleyLoop>,
    ) {
        let m = n - 1;
        if cell == m * m {
            out.push(CayleyLoop::new(Table::from_fn(n, |a, b| grid[a][b])).expect("reduced Latin square"));
            return;
        }
        let (r, c) = (1 + cell / m, 1 + cell % m);
        let free = full & !rows[r] & !cols[c];
        for v in 0..n {
            if free >> v & 1 == 1 {
                grid[r][c] = v;
                rows[r] |= 1 << v;
                cols[c] |= 1 << v;
                fill(cell + 1, n, grid, rows, cols, full, out);
                rows[r] &= !(1 << v);
                cols[c] &= !(1 << v);
            }
        }
    }
    fill(0, n, &mut grid, &mut rows, &mut cols, full, &mut out);
    out
}

/// The lexicographically least nonassociative loop of order 5 whose only
/// subloops are `{0}` and itself.
///
/// Loops of order at most 4 are groups. The least nonassociative order-5
/// table overall has the subloop `{0, 1}`, so it is skipped.
pub fn smallest_nonassociative_loop() -> CayleyLoop {
    static CACHE: OnceLock<CayleyLoop> = OnceLock::new();
    CACHE
        .get_or_init(|| {
            reduced_loops(5)
                .into_iter()
                .find(|l| {
                    !l.is_associative()
                        && l.enumerate_subloops(&Bounds::default()).map(|s| s.len()) == Ok(2)
                })
                .expect("a nonassociative loop of order 5 without proper subloops exists")
        })
        .clone()
}

/// A random loop of order `n` (at most 12), deterministic in `seed`.
///
/// Cells are filled in row-major order by backtracking with a shuffled
/// value order; row and column `0` are the identity.
pub fn random_loop(n: usize, seed: u64) -> CayleyLoop {
    assert!((1..=12).contains(&n), "random loops support orders 1..=12");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = n - 1;
    loop {
        let mut grid = vec![vec![0usize; n]; n];
        let mut rows = vec![0u32; n];
        let mut cols = vec![0u32; n];
        for i in 0..n {
            grid[0][i] = i;
            grid[i][0] = i;
            rows[i] |= 1 << i;
            cols[i] |= 1 << i;
        }
        // per cell: shuffled candidates and the position tried next
        let mut stack: Vec<(Vec<usize>, usize)> = Vec::with_capacity(m * m);
        let mut steps = 0usize;
        let mut cell = 0;
        while cell < m * m {
            let (r, c) = (1 + cell / m, 1 + cell % m);
            if stack.len() == cell {
                let mut cand: Vec<usize> =
                    (0..n).filter(|&v| (rows[r] | cols[c]) >> v & 1 == 0).collect();
                cand.shuffle(&mut rng);
                stack.push((cand, 0));
            }
            let (cand, next) = stack.last_mut().expect("frame");
            if *next < cand.len() {
                let v = cand[*next];
                *next += 1;
                grid[r][c] = v;
                rows[r] |= 1 << v;
                cols[c] |= 1 << v;
                cell += 1;
            } else {
                stack.pop();
                if cell == 0 {
                    unreachable!("a Latin square always exists");
                }
                cell -= 1;
                let (r, c) = (1 + cell / m, 1 + cell % m);
                let v = grid[r][c];
                rows[r] &= !(1 << v);
                cols[c] &= !(1 << v);
            }
            steps += 1;
            if steps > 200_000 {
                break;
            }
        }
        if cell == m * m {
            return CayleyLoop::new(Table::from_fn(n, |a, b| grid[a][b])).expect("Latin square");
        }
    }
}

/// A parsed corpus description, e.g. `product:cyclic:4+cyclic:2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CorpusSpec {
    Cyclic(usize),
    Field4,
    Matrix(Box<CorpusSpec>, usize),
    Upper(Box<CorpusSpec>, usize),
    Product(Vec<CorpusSpec>),
    Map { over: Box<CorpusSpec>, zero_fixing: bool },
    Opposite(Box<CorpusSpec>),
    AdditiveLoop(Box<CorpusSpec>),
    NonAssoc5,
    Sym3,
    RandomLoop { n: usize, seed: u64 },
    /// The `index`-th reduced loop of order `n`.
    Latin { n: usize, index: usize },
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            CorpusSpec::Field4 => f.write_str("f4"),
            CorpusSpec::Matrix(b, k) => write!(f, "matrix:{b},{k}"),
            CorpusSpec::Upper(b, k) => write!(f, "upper:{b},{k}"),
            CorpusSpec::Product(parts) => {
                f.write_str("product:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            CorpusSpec::Map { over, zero_fixing } => {
                write!(f, "{}:{over}", if *zero_fixing { "m0" } else { "m" })
            }
            CorpusSpec::Opposite(s) => write!(f, "opposite:{s}"),
            CorpusSpec::AdditiveLoop(s) => write!(f, "loop:{s}"),
            CorpusSpec::NonAssoc5 => f.write_str("nonassoc5"),
            CorpusSpec::Sym3 => f.write_str("s3"),
            CorpusSpec::RandomLoop { n, seed } => write!(f, "random:{n},{seed}"),
            CorpusSpec::Latin { n, index } => write!(f, "latin:{n},{index}"),
        }
    }
}

fn parse_num<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim().parse().map_err(|_| Error::Parse(format!("bad {what} '{s}'")))
}

fn split_last_comma<'a>(s: &'a str, family: &str) -> Result<(&'a str, &'a str)> {
    s.rsplit_once(',').ok_or_else(|| Error::Parse(format!("{family} needs '<spec>,<k>'")))
}

impl FromStr for CorpusSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, rest) = match s.split_once(':') {
            Some((h, r)) => (h, Some(r)),
            None => (s, None),
        };
        let need = |family: &str| rest.ok_or_else(|| Error::Parse(format!("'{family}' needs arguments")));
        let boxed = |r: &str| -> Result<Box<CorpusSpec>> { Ok(Box::new(r.parse()?)) };
        Ok(match head {
            "cyclic" => {
                let n: usize = parse_num(need(head)?, "order")?;
                if n == 0 {
                    return Err(Error::Parse("cyclic order must be >= 1".into()));
                }
                CorpusSpec::Cyclic(n)
            }
            "f4" => CorpusSpec::Field4,
            "nonassoc5" => CorpusSpec::NonAssoc5,
            "s3" => CorpusSpec::Sym3,
            "matrix" | "upper" => {
                let (base, k) = split_last_comma(need(head)?, head)?;
                let k: usize = parse_num(k, "dimension")?;
                if k == 0 {
                    return Err(Error::Parse("matrix dimension must be >= 1".into()));
                }
                if head == "matrix" {
                    CorpusSpec::Matrix(boxed(base)?, k)
                } else {
                    CorpusSpec::Upper(boxed(base)?, k)
                }
            }
            "product" => {
                let parts = need(head)?
                    .split('+')
                    .map(str::parse)
                    .collect::<Result<Vec<CorpusSpec>>>()?;
                CorpusSpec::Product(parts)
            }
            "m" | "m0" => CorpusSpec::Map { over: boxed(need(head)?)?, zero_fixing: head == "m0" },
            "opposite" => CorpusSpec::Opposite(boxed(need(head)?)?),
            "loop" => CorpusSpec::AdditiveLoop(boxed(need(head)?)?),
            "random" | "latin" => {
                let (a, b) = split_last_comma(need(head)?, head)?;
                let n: usize = parse_num(a, "order")?;
                if head == "random" {
                    if !(1..=12).contains(&n) {
                        return Err(Error::Parse("random loop order must be in 1..=12".into()));
                    }
                    CorpusSpec::RandomLoop { n, seed: parse_num(b, "seed")? }
                } else {
                    if !(1..=6).contains(&n) {
                        return Err(Error::Parse("latin order must be in 1..=6".into()));
                    }
                    CorpusSpec::Latin { n, index: parse_num(b, "index")? }
                }
            }
            other => return Err(Error::Parse(format!("unknown structure family '{other}'"))),
        })
    }
}

impl CorpusSpec {
    pub fn build(&self, bounds: &Bounds) -> Result<Structure> {
        let ring_of = |s: &CorpusSpec| -> Result<FiniteRing> {
            match s.build(bounds)? {
                Structure::Ring(r) => Ok(r),
                other => Err(Error::Parse(format!("'{s}' is a {}, expected a ring", other.kind()))),
            }
        };
        Ok(match self {
            CorpusSpec::Cyclic(n) => {
                Bounds::check("cyclic ring order", bounds.structure_order, *n)?;
                Structure::Ring(cyclic_ring(*n))
            }
            CorpusSpec::Field4 => Structure::Ring(field4()),
            CorpusSpec::Matrix(b, k) => Structure::Ring(matrix_ring(&ring_of(b)?, *k, bounds)?),
            CorpusSpec::Upper(b, k) => Structure::Ring(upper_triangular_ring(&ring_of(b)?, *k, bounds)?),
            CorpusSpec::Product(parts) => {
                let built = parts.iter().map(|p| p.build(bounds)).collect::<Result<Vec<_>>>()?;
                if built.iter().all(|s| matches!(s, Structure::Loop(_))) {
                    let loops: Vec<&CayleyLoop> = built.iter().map(|s| s.additive()).collect();
                    let n = loops.iter().fold(1usize, |acc, l| acc.saturating_mul(l.n()));
                    Bounds::check("product order", bounds.structure_order, n)?;
                    Structure::Loop(CayleyLoop::product(&loops))
                } else {
                    let lnrs = built
                        .iter()
                        .map(|s| s.as_lnr().ok_or_else(|| Error::Parse("cannot mix loops and near-rings in a product".into())))
                        .collect::<Result<Vec<_>>>()?;
                    Structure::from_lnr(product_lnr(&lnrs, bounds)?)
                }
            }
            CorpusSpec::Map { over, zero_fixing } => {
                let g = over.build(bounds)?;
                Structure::from_lnr(map_near_ring(g.additive(), *zero_fixing, bounds)?)
            }
            CorpusSpec::Opposite(s) => match s.build(bounds)? {
                Structure::Loop(_) => return Err(Error::Parse("opposite needs a near-ring".into())),
                other => Structure::from_lnr(opposite(other.as_lnr().expect("near-ring"))?),
            },
            CorpusSpec::AdditiveLoop(s) => Structure::Loop(s.build(bounds)?.additive().clone()),
            CorpusSpec::NonAssoc5 => Structure::Loop(smallest_nonassociative_loop()),
            CorpusSpec::Sym3 => Structure::Loop(symmetric3_loop()),
            CorpusSpec::RandomLoop { n, seed } => Structure::Loop(random_loop(*n, *seed)),
            CorpusSpec::Latin { n, index } => {
                let all = reduced_loops(*n);
                let l = all.get(*index).ok_or_else(|| {
                    Error::Parse(format!("there are only {} reduced loops of order {n}", all.len()))
                })?;
                Structure::Loop(l.clone())
            }
        })
    }
}

/// A named corpus structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub spec: CorpusSpec,
}

/// The bundled named corpus, in a fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    let mut push = |name: String, spec: &str| {
        out.push(CatalogEntry { name, spec: spec.parse().expect("catalog spec parses") });
    };
    for n in 1..=16 {
        push(format!("z{n}"), &format!("cyclic:{n}"));
    }
    push("f4".into(), "f4");
    push("z2xz2".into(), "product:cyclic:2+cyclic:2");
    push("z2xz3".into(), "product:cyclic:2+cyclic:3");
    push("z4xz2".into(), "product:cyclic:4+cyclic:2");
    push("m2z2".into(), "matrix:cyclic:2,2");
    push("m2z3".into(), "matrix:cyclic:3,2");
    push("m2z4".into(), "matrix:cyclic:4,2");
    push("ut2z2".into(), "upper:cyclic:2,2");
    push("ut2z3".into(), "upper:cyclic:3,2");
    push("mz2".into(), "m:cyclic:2");
    push("m0z2".into(), "m0:cyclic:2");
    push("m0z3".into(), "m0:cyclic:3");
    push("m0z4".into(), "m0:cyclic:4");
    push("m0klein".into(), "m0:product:cyclic:2+cyclic:2");
    push("nonassoc5".into(), "nonassoc5");
    push("m0nonassoc5".into(), "m0:nonassoc5");
    push("s3".into(), "s3");
    out
}

/// A catalog name or a spec.
pub fn resolve(name_or_spec: &str) -> Result<CorpusSpec> {
    match catalog().into_iter().find(|e| e.name == name_or_spec.trim()) {
        Some(e) => Ok(e.spec),
        None => name_or_spec.parse(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_loop_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| reduced_loops(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 4, 56, 9408]);
    }

    #[test]
    fn spec_round_trip() {
        for s in [
            "cyclic:6",
            "matrix:cyclic:2,2",
            "m0:nonassoc5",
            "product:cyclic:4+cyclic:2",
            "upper:cyclic:3,2",
            "opposite:m0:cyclic:3",
            "random:5,17",
            "latin:4,3",
            "loop:f4",
            "m:s3",
        ] {
            assert_eq!(s.parse::<CorpusSpec>().unwrap().to_string(), s);
        }
        for bad in ["", "cyclic", "cyclic:0", "cyclic:x", "matrix:cyclic:2", "nope:3", "random:13,1"] {
            assert!(bad.parse::<CorpusSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn field4_is_a_field() {
        let f = field4();
        assert!(f.is_division_ring());
    }

    #[test]
    fn random_loop_of_order_three_is_z3() {
        for seed in 0..20 {
            assert_eq!(random_loop(3, seed), cyclic_loop(3));
        }
    }

    #[test]
    fn random_loop_is_deterministic() {
        assert_eq!(random_loop(5, 1), random_loop(5, 1));
        assert_eq!(random_loop(12, 9), random_loop(12, 9));
    }
}
