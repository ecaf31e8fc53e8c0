//! Canonical projective presentations and iterated syzygies.
//!
//! The free cover is always taken on the module's own generator set, so the
//! whole tower is a deterministic function of the input presentation.

use crate::constructions::kernel;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::morphism::Morphism;
use crate::presentation::{CanonicalQuotient, Presentation};
use crate::sequence::NExactSequence;

/// The short exact sequence `0 -> syzygy -> cover -> module -> 0` with a free
/// cover on the module's generators.
#[derive(Clone, Debug)]
pub struct ProjectivePresentation {
    pub module: Presentation,
    pub cover: Presentation,
    /// `cover -> module`, the identity matrix on generators
    pub projection: Morphism,
    pub syzygy: Presentation,
    /// `syzygy -> cover`, a monomorphism with Hermite-canonical columns
    pub inclusion: Morphism,
    pub sequence: NExactSequence,
}

pub fn projective_presentation(x: &Presentation) -> ProjectivePresentation {
    let ring = x.ring().clone();
    let cover = Presentation::free(ring.clone(), x.generators());
    let projection = Morphism::unchecked(
        cover.clone(),
        x.clone(),
        Matrix::identity(ring.clone(), x.generators()),
    );
    let k = kernel(&projection);
    // drop trivial syzygy generators so iterated towers stay lean
    let cq = CanonicalQuotient::new(&k.object);
    let syzygy = cq.minimal_presentation();
    let mut incl = Matrix::zero(ring.clone(), cover.generators(), syzygy.generators());
    for p in 0..syzygy.generators() {
        let mut unit = Matrix::zero(ring.clone(), syzygy.generators(), 1);
        unit.set(p, 0, num_bigint::BigInt::from(1));
        let col = k.inclusion.matrix().mul(&cq.expand_coords(&unit));
        for i in 0..cover.generators() {
            incl.set(i, p, col.get(i, 0).clone());
        }
    }
    let inclusion = Morphism::unchecked(syzygy.clone(), cover.clone(), incl);
    let sequence = NExactSequence::verify(vec![inclusion.clone(), projection.clone()])
        .expect("free presentation is exact by construction");
    ProjectivePresentation {
        module: x.clone(),
        cover,
        projection,
        syzygy,
        inclusion,
        sequence,
    }
}

/// Iterated syzygies `κ^1, ..., κ^n` of a module, with the spliced free
/// resolution `0 -> κ^n -> P_n -> ... -> P_1 -> X -> 0` at every depth.
#[derive(Clone, Debug)]
pub struct SyzygyTower {
    pub module: Presentation,
    /// `stages[k]` is the projective presentation of `κ^k` (`κ^0` = module)
    pub stages: Vec<ProjectivePresentation>,
    /// `resolutions[k-1]` is the spliced resolution of depth `k`
    resolutions: Vec<NExactSequence>,
}

pub fn syzygy_tower(x: &Presentation, n: usize) -> Result<SyzygyTower> {
    if n == 0 {
        return Err(Error::IndexOutOfRange("tower depth must be >= 1".into()));
    }
    let mut stages = Vec::with_capacity(n);
    let mut resolutions = Vec::with_capacity(n);
    let mut current = x.clone();
    for k in 0..n {
        let pp = projective_presentation(&current);
        current = pp.syzygy.clone();
        let res = if k == 0 {
            pp.sequence.clone()
        } else {
            pp.sequence.splice(&resolutions[k - 1])?
        };
        resolutions.push(res);
        stages.push(pp);
    }
    Ok(SyzygyTower {
        module: x.clone(),
        stages,
        resolutions,
    })
}

impl SyzygyTower {
    pub fn depth(&self) -> usize {
        self.stages.len()
    }

    /// `κ^k` for `1 <= k <= depth`.
    pub fn syzygy(&self, k: usize) -> &Presentation {
        assert!(k >= 1 && k <= self.depth());
        &self.stages[k - 1].syzygy
    }

    /// The free cover `P_k`.
    pub fn cover(&self, k: usize) -> &Presentation {
        assert!(k >= 1 && k <= self.depth());
        &self.stages[k - 1].cover
    }

    /// The spliced resolution `0 -> κ^k -> P_k -> ... -> P_1 -> X -> 0`.
    pub fn resolution_to(&self, k: usize) -> &NExactSequence {
        assert!(k >= 1 && k <= self.depth());
        &self.resolutions[k - 1]
    }

    pub fn resolution(&self) -> &NExactSequence {
        self.resolution_to(self.depth())
    }
}
