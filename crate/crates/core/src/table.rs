//! Dense square operation tables.

use crate::error::ValidationError;

/// Largest supported carrier; elements are stored as `u16`.
pub const MAX_CARRIER: usize = 1 << 16;

/// An `n × n` table of carrier elements, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Table {
    n: usize,
    data: Vec<u16>,
}

impl Table {
    /// Builds a table from `f(row, col)`. Panics if an entry is out of range.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        assert!(n <= MAX_CARRIER, "carrier of size {n} is too large");
        let mut data = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let v = f(a, b);
                assert!(v < n, "table entry {v} out of range for n = {n}");
                data.push(v as u16);
            }
        }
        Table { n, data }
    }

    /// Checks shape and entry range of a nested table.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, ValidationError> {
        let n = rows.len();
        if n == 0 {
            return Err(ValidationError::EmptyCarrier);
        }
        if n > MAX_CARRIER {
            return Err(ValidationError::CarrierTooLarge(n));
        }
        let mut data = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(ValidationError::NotSquare { row: r, len: row.len(), n });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(ValidationError::EntryOutOfRange { row: r, col: c, value: v, n });
                }
                data.push(v as u16);
            }
        }
        Ok(Table { n, data })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> usize {
        self.data[a * self.n + b] as usize
    }

    pub fn row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.data[a * self.n..(a + 1) * self.n].iter().map(|&v| v as usize)
    }

    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| self.row(a).collect()).collect()
    }
}

impl std::fmt::Debug for Table {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries((0..self.n).map(|a| self.row(a).collect::<Vec<_>>())).finish()
    }
}
