/// Size limits for the exhaustive procedures.
///
/// Every enumeration checks its limit up front and returns
/// [`Error::BoundExceeded`](crate::Error::BoundExceeded) instead of running
/// for an unbounded amount of time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest loop order for which all subloops are enumerated.
    pub subloop_order: usize,
    /// Largest carrier for N-subloop and left-ideal lattices.
    pub lattice_order: usize,
    /// Largest number of closed subsets any single enumeration may produce.
    pub max_closed_sets: usize,
    /// Largest structure the generators will build.
    pub structure_order: usize,
    /// Largest matrix ring the generators will build.
    pub matrix_order: usize,
    /// Largest ring on which complete primitive families are enumerated.
    pub family_ring_order: usize,
    /// Cap on the number of families returned.
    pub max_families: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            subloop_order: 24,
            lattice_order: 4096,
            max_closed_sets: 200_000,
            structure_order: 4096,
            matrix_order: 6561,
            family_ring_order: 64,
            max_families: 100_000,
        }
    }
}

impl Bounds {
    pub(crate) fn check(what: &'static str, limit: usize, actual: usize) -> crate::Result<()> {
        if actual > limit {
            Err(crate::Error::BoundExceeded { what, limit, actual })
        } else {
            Ok(())
        }
    }
}
