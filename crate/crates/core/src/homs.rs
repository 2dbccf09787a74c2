//! Homomorphisms of loop near-rings, unit reflection and idempotent lifting.

use crate::bounds::Bounds;
use crate::closure;
use crate::error::{Error, HomWitness, Result, ValidationError};
use crate::loops::check_map_shape;
use crate::nearrings::LoopNearRing;
use crate::rings::{self, FiniteRing, SubringOps};
use crate::subset::ElementSubset;

/// A validated homomorphism: preserves `1`, `+` and `·`.
#[derive(Debug, Clone)]
pub struct LnrHom<'a> {
    source: &'a LoopNearRing,
    target: &'a LoopNearRing,
    map: Vec<usize>,
    nontrivial: bool,
}

pub fn validate_lnr_hom<'a>(
    map: &[usize],
    source: &'a LoopNearRing,
    target: &'a LoopNearRing,
) -> std::result::Result<LnrHom<'a>, ValidationError> {
    check_map_shape(map, source.n(), target.n())?;
    if map[source.one()] != target.one() {
        return Err(ValidationError::NotAHomomorphism(HomWitness::One { image: map[source.one()] }));
    }
    let n = source.n();
    for a in 0..n {
        for b in 0..n {
            if map[source.add(a, b)] != target.add(map[a], map[b]) {
                return Err(ValidationError::NotAHomomorphism(HomWitness::Add(a, b)));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                return Err(ValidationError::NotAHomomorphism(HomWitness::Mul(a, b)));
            }
        }
    }
    let nontrivial = map.iter().any(|&v| v != 0);
    Ok(LnrHom { source, target, map: map.to_vec(), nontrivial })
}

/// The image of a homomorphism into a ring, as a ring in its own right.
#[derive(Debug, Clone)]
pub struct ImageRing {
    pub ring: FiniteRing,
    /// Target elements, sorted; index `i` of `ring` is `carrier[i]`.
    pub carrier: Vec<usize>,
    /// Source element to image index.
    pub surjection: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferReport {
    pub source_local: bool,
    pub image_local: bool,
    pub target_local: bool,
    pub unit_reflecting_into_target: bool,
    pub unit_reflecting_onto_image: bool,
    pub image_size: usize,
    pub image_units: usize,
    /// Target units that lie in the image.
    pub target_units_in_image: usize,
}

impl<'a> LnrHom<'a> {
    pub fn source(&self) -> &'a LoopNearRing {
        self.source
    }

    pub fn target(&self) -> &'a LoopNearRing {
        self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// Image is not `{0}`.
    pub fn is_nontrivial(&self) -> bool {
        self.nontrivial
    }

    pub fn kernel(&self) -> ElementSubset {
        ElementSubset::from_members(self.source.n(), (0..self.source.n()).filter(|&a| self.map[a] == 0))
    }

    pub fn image(&self) -> ElementSubset {
        ElementSubset::from_members(self.target.n(), self.map.iter().copied())
    }

    fn target_ring(&self) -> Result<FiniteRing> {
        rings::validate_ring(self.target.clone()).map_err(|_| Error::TargetNotARing)
    }

    /// The image, closed under `+`, `−`, `·`, as a re-indexed ring.
    pub fn image_subring(&self) -> Result<ImageRing> {
        let target = self.target_ring()?;
        let seed = self.map.iter().copied().chain([0, target.one()]);
        let closed = closure::close(&SubringOps(&target), seed);
        let carrier = closed.members();
        let ring = target.restrict(&carrier, target.one())?;
        let mut index = vec![usize::MAX; target.n()];
        for (i, &x) in carrier.iter().enumerate() {
            index[x] = i;
        }
        let surjection = self.map.iter().map(|&v| index[v]).collect();
        Ok(ImageRing { ring, carrier, surjection })
    }

    /// Least `n` with `f(n)` a unit of the target but `n` not a unit.
    pub fn unit_reflection_witness(&self) -> Option<usize> {
        let su = self.source.units();
        let tu = self.target.units();
        (0..self.source.n()).find(|&a| tu.contains(self.map[a]) && !su.contains(a))
    }

    pub fn is_unit_reflecting(&self) -> bool {
        self.unit_reflection_witness().is_none()
    }

    /// Unit reflection measured against the units of the image ring.
    pub fn unit_reflection_onto_image_witness(&self) -> Result<Option<usize>> {
        let image = self.image_subring()?;
        let iu = image.ring.units();
        let su = self.source.units();
        Ok((0..self.source.n()).find(|&a| iu.contains(image.surjection[a]) && !su.contains(a)))
    }

    /// Least `n` whose image is idempotent but not the image of an idempotent.
    pub fn idempotent_lifting_witness(&self) -> Option<usize> {
        let lifted = ElementSubset::from_members(
            self.target.n(),
            self.source.idempotents().iter().map(|e| self.map[e]),
        );
        (0..self.source.n()).find(|&a| {
            let v = self.map[a];
            self.target.is_idempotent(v) && !lifted.contains(v)
        })
    }

    pub fn is_idempotent_lifting(&self) -> bool {
        self.idempotent_lifting_witness().is_none()
    }

    /// For a nontrivial unit-reflecting hom from a zero-symmetric loop
    /// near-ring into a ring, locality of the source and of the image ring
    /// are decided independently and must coincide.
    pub fn verify_local_transfer(&self, bounds: &Bounds) -> Result<TransferReport> {
        if !self.nontrivial {
            return Err(Error::PreconditionFailed("homomorphism is trivial".into()));
        }
        if let Some(w) = self.unit_reflection_witness() {
            return Err(Error::PreconditionFailed(format!("not unit-reflecting (witness {w})")));
        }
        if !self.source.is_zero_symmetric() {
            return Err(Error::PreconditionFailed("source is not zero-symmetric".into()));
        }
        let target = self
            .target_ring()
            .map_err(|_| Error::PreconditionFailed("target is not a ring".into()))?;

        let source_local = self.source.is_local_lnr(bounds)?.local;
        let image = self.image_subring()?;
        let image_local = rings::is_local_ring(&image.ring);
        let target_local = rings::is_local_ring(&target);
        let onto_image = self.unit_reflection_onto_image_witness()?.is_none();
        assert_eq!(source_local, image_local, "source and image locality disagree");

        let tu = target.units();
        Ok(TransferReport {
            source_local,
            image_local,
            target_local,
            unit_reflecting_into_target: true,
            unit_reflecting_onto_image: onto_image,
            image_size: image.ring.n(),
            image_units: image.ring.units().set.len(),
            target_units_in_image: image.carrier.iter().filter(|&&x| tu.contains(x)).count(),
        })
    }

    /// No nonzero idempotent of the source maps to zero. Requires unit
    /// reflection, under which this always holds.
    pub fn idempotent_kill_check(&self) -> Result<bool> {
        if let Some(w) = self.unit_reflection_witness() {
            return Err(Error::PreconditionFailed(format!("not unit-reflecting (witness {w})")));
        }
        let holds = self.source.idempotents().iter().all(|e| e == 0 || self.map[e] != 0);
        assert!(holds, "a nonzero idempotent is killed by a unit-reflecting homomorphism");
        Ok(holds)
    }
}
