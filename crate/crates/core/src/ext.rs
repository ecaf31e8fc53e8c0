//! Ext modules and Ext classes.
//!
//! `Ext^n(X, Y)` is computed as the quotient of `Hom(κ^n X, Y)` by the
//! restrictions of morphisms defined on the n-th free cover; the class of a
//! concrete n-exact sequence is extracted by lifting the free resolution of
//! `X` down the sequence, one projective stage at a time. Equivalence of
//! sequences is decided by class equality in this quotient.

use crate::constructions::{kernel, lift_through_epi, lift_through_mono};
use crate::error::{Error, Result};
use crate::hom::HomModule;
use crate::matrix::Matrix;
use crate::morphism::Morphism;
use crate::presentation::{canonical_relations, CanonicalQuotient, InvariantFactors, Presentation};
use crate::resolution::{syzygy_tower, SyzygyTower};
use crate::ring::RingSpec;
use crate::sequence::{pushout_sequence, NExactSequence};
use crate::solve::{solve_matrix_constraints, MatrixConstraint};
use num_bigint::BigInt;

/// The computed `Ext^degree(source, target)` with explicit generator
/// representatives `κ^degree(source) -> target` (plain morphisms
/// `source -> target` in degree 0).
#[derive(Clone)]
pub struct ExtModule {
    degree: usize,
    source: Presentation,
    target: Presentation,
    tower: Option<SyzygyTower>,
    hom: HomModule,
    vq: CanonicalQuotient,
    value: Presentation,
    reps: Vec<Morphism>,
}

/// Compute `Ext^n(x, y)`; degree 0 is the hom module.
pub fn ext_module(n: usize, x: &Presentation, y: &Presentation) -> Result<ExtModule> {
    x.ring().same_ring(y.ring())?;
    if n == 0 {
        let hom = HomModule::new(x, y)?;
        return ExtModule::from_hom(0, x.clone(), y.clone(), None, hom);
    }
    let tower = syzygy_tower(x, n)?;
    ext_module_with_tower(&tower, n, y)
}

/// Compute `Ext^n(x, y)` reusing an already-built tower of `x` (depth >= n).
pub fn ext_module_with_tower(tower: &SyzygyTower, n: usize, y: &Presentation) -> Result<ExtModule> {
    assert!(n >= 1 && n <= tower.depth(), "tower too shallow");
    tower.module.ring().same_ring(y.ring())?;
    let hom = HomModule::new(tower.syzygy(n), y)?;
    ExtModule::from_hom(n, tower.module.clone(), y.clone(), Some(tower.clone()), hom)
}

impl ExtModule {
    fn from_hom(
        degree: usize,
        source: Presentation,
        target: Presentation,
        tower: Option<SyzygyTower>,
        hom: HomModule,
    ) -> Result<ExtModule> {
        let ring = source.ring().clone();
        let gens = hom.reps().len();
        let mut restriction_rows: Vec<Vec<BigInt>> = Vec::new();
        if let Some(t) = &tower {
            let stage = &t.stages[degree - 1];
            let iota = &stage.inclusion;
            for u in 0..target.generators() {
                for v in 0..stage.cover.generators() {
                    let mut m =
                        Matrix::zero(ring.clone(), target.generators(), stage.cover.generators());
                    m.set(u, v, BigInt::from(1));
                    let rep = Morphism::unchecked(stage.cover.clone(), target.clone(), m);
                    let restricted = rep.compose(iota);
                    let coords = hom.coords_of(&restricted)?;
                    restriction_rows.push((0..gens).map(|i| coords.get(i, 0).clone()).collect());
                }
            }
        }
        let extra = if restriction_rows.is_empty() {
            Matrix::zero(ring.clone(), 0, gens)
        } else {
            Matrix::from_rows(ring.clone(), restriction_rows)
        };
        let rows = hom.presentation().relations().vstack(&extra);
        let raw = Presentation::new(ring.clone(), gens, canonical_relations(&ring, &rows))?;
        let vq = CanonicalQuotient::new(&raw);
        let value = vq.minimal_presentation();
        let mut reps = Vec::with_capacity(vq.kept.len());
        for p in 0..vq.kept.len() {
            let mut unit = Matrix::zero(ring.clone(), vq.kept.len(), 1);
            unit.set(p, 0, BigInt::from(1));
            reps.push(hom.morphism_from_coords(&vq.expand_coords(&unit)));
        }
        Ok(ExtModule {
            degree,
            source,
            target,
            tower,
            hom,
            vq,
            value,
            reps,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    /// Minimal presentation of the Ext module.
    pub fn value(&self) -> &Presentation {
        &self.value
    }

    /// Witnesses for the generators: morphisms `κ^degree(source) -> target`.
    pub fn reps(&self) -> &[Morphism] {
        &self.reps
    }

    pub fn tower(&self) -> Option<&SyzygyTower> {
        self.tower.as_ref()
    }

    pub fn decomposition(&self) -> InvariantFactors {
        self.vq.invariant_factors()
    }

    pub fn order(&self) -> Option<BigInt> {
        self.decomposition().order()
    }

    pub fn is_zero(&self) -> bool {
        self.decomposition().is_trivial()
    }

    /// Canonical coordinates of a witness morphism in the value generators.
    pub fn reduce_witness(&self, u: &Morphism) -> Result<Matrix> {
        let coords = self.hom.coords_of(u)?;
        Ok(self.vq.reduce_coords(&coords))
    }

    /// A witness morphism representing the given value coordinates.
    pub fn witness_from_coords(&self, coords: &Matrix) -> Morphism {
        self.hom
            .morphism_from_coords(&self.vq.expand_coords(coords))
    }

    /// Class of a sequence with matching ends and length, reduced into this
    /// module (the ladder runs against this module's own tower).
    pub fn class_of_sequence(&self, e: &NExactSequence) -> Result<ExtClass> {
        let tower = self.tower.as_ref().ok_or_else(|| {
            Error::IndexOutOfRange("degree-0 modules classify morphisms, not sequences".into())
        })?;
        if e.length() != self.degree {
            return Err(Error::LengthMismatch(e.length(), self.degree));
        }
        if e.left_end() != &self.target || e.right_end() != &self.source {
            return Err(Error::EndMismatch(
                "sequence ends do not match the Ext module".into(),
            ));
        }
        let u = ladder_witness(tower, e, None)?;
        self.class_from_witness(&u)
    }

    pub fn class_from_witness(&self, u: &Morphism) -> Result<ExtClass> {
        let element = self.reduce_witness(u)?;
        Ok(ExtClass {
            module: self.clone(),
            element,
            witness: u.clone(),
        })
    }

    pub fn class_from_coords(&self, coords: &Matrix) -> ExtClass {
        let witness = self.witness_from_coords(coords);
        let element = self.vq.reduce_coords(&self.vq.expand_coords(coords));
        ExtClass {
            module: self.clone(),
            element,
            witness,
        }
    }

    pub fn zero_class(&self) -> ExtClass {
        let coords = Matrix::zero(self.source.ring().clone(), self.value.generators(), 1);
        self.class_from_coords(&coords)
    }

    /// Structural compatibility: same degree, ends and computed value.
    pub fn compatible_with(&self, other: &ExtModule) -> bool {
        self.degree == other.degree
            && self.source == other.source
            && self.target == other.target
            && self.value == other.value
    }
}

impl std::fmt::Debug for ExtModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ExtModule(degree {}, value {})",
            self.degree,
            self.decomposition()
        )
    }
}

/// An element of an [`ExtModule`], with its canonical coordinates and a
/// concrete witness morphism.
#[derive(Clone, Debug)]
pub struct ExtClass {
    pub module: ExtModule,
    /// canonical coordinates in the value generators
    pub element: Matrix,
    /// morphism `κ^n X -> Y` reducing to `element`
    pub witness: Morphism,
}

impl ExtClass {
    pub fn is_zero(&self) -> bool {
        self.element.is_zero()
    }

    pub fn equals(&self, other: &ExtClass) -> Result<bool> {
        if !self.module.compatible_with(&other.module) {
            return Err(Error::EndMismatch(
                "classes live in different Ext modules".into(),
            ));
        }
        Ok(self.element == other.element)
    }
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Lift the canonical resolution of the right end down the sequence and
/// return the induced morphism `κ^n X -> Y`. With `seed` set, every lift is
/// perturbed by a seeded combination of homogeneous solutions; the reduced
/// class must not depend on it.
fn ladder_witness(tower: &SyzygyTower, e: &NExactSequence, seed: Option<u64>) -> Result<Morphism> {
    let n = e.length();
    assert!(tower.depth() >= n);
    if e.right_end() != &tower.module {
        return Err(Error::EndMismatch(
            "sequence right end does not match the tower".into(),
        ));
    }
    let mut state = seed;
    let perturb = |h: Morphism, hom: Vec<Matrix>, state: &mut Option<u64>| -> Morphism {
        let Some(s) = state else { return h };
        let mut m = h.matrix().clone();
        for g in &hom {
            let c = (splitmix(s) % 5) as i64 - 2;
            m = m.add(&g.scale(&BigInt::from(c)));
        }
        Morphism::unchecked(h.source().clone(), h.target().clone(), m)
    };

    // stage 1 lifts the cover projection through the final epimorphism
    let mut epi = e.arrows()[n].clone();
    let mut g = tower.stages[0].projection.clone();
    for j in 1..=n {
        let (h, hom) = lift_through_epi(&epi, &g)
            .ok_or_else(|| Error::InternalConsistency("projective cover failed to lift".into()))?;
        let h = perturb(h, hom, &mut state);
        let phi = h.compose(&tower.stages[j - 1].inclusion);
        if j == n {
            return lift_through_mono(&e.arrows()[0], &phi).ok_or_else(|| {
                Error::InternalConsistency("final restriction does not land in Y".into())
            });
        }
        let ker = kernel(&e.arrows()[n - j + 1]);
        let v = lift_through_mono(&ker.inclusion, &phi).ok_or_else(|| {
            Error::InternalConsistency("restriction does not land in the kernel".into())
        })?;
        let onto = lift_through_mono(&ker.inclusion, &e.arrows()[n - j]).ok_or_else(|| {
            Error::InternalConsistency("image does not land in the kernel".into())
        })?;
        epi = onto;
        g = v.compose(&tower.stages[j].projection);
    }
    unreachable!("loop returns at j == n")
}

/// The Ext class of a validated sequence, computed against the canonical
/// resolution of its right end.
pub fn class_of(e: &NExactSequence) -> Result<ExtClass> {
    class_of_seeded(e, None)
}

/// Same as [`class_of`] but with seeded perturbations of every intermediate
/// lift; the result must agree with the unperturbed run.
pub fn class_of_seeded(e: &NExactSequence, seed: Option<u64>) -> Result<ExtClass> {
    let n = e.length();
    let tower = syzygy_tower(e.right_end(), n)?;
    let module = ext_module_with_tower(&tower, n, e.left_end())?;
    let u = ladder_witness(&tower, e, seed)?;
    module.class_from_witness(&u)
}

pub fn is_zero_class(e: &NExactSequence) -> Result<bool> {
    Ok(class_of(e)?.is_zero())
}

/// Class equality of two sequences with the same ends and length.
pub fn are_equivalent(e: &NExactSequence, f: &NExactSequence) -> Result<bool> {
    if e.length() != f.length() {
        return Err(Error::LengthMismatch(e.length(), f.length()));
    }
    if e.left_end() != f.left_end() || e.right_end() != f.right_end() {
        return Err(Error::EndMismatch(
            "sequences must share both end presentations".into(),
        ));
    }
    let ce = class_of(e)?;
    let cf = class_of(f)?;
    ce.equals(&cf)
}

/// Realize a class of degree >= 1 as a concrete sequence: push the canonical
/// resolution out along the witness.
pub fn realize_class(c: &ExtClass) -> Result<NExactSequence> {
    let tower = c.module.tower().ok_or_else(|| {
        Error::IndexOutOfRange("degree-0 classes are morphisms, not sequences".into())
    })?;
    let res = tower.resolution_to(c.module.degree());
    Ok(pushout_sequence(&c.witness, res)?.0)
}

#[derive(Clone, Debug)]
pub struct Splitting {
    /// `E_1 -> Y` with `retraction ∘ ι = id`
    pub retraction: Morphism,
    /// `X -> E_1` with `π ∘ section = id`
    pub section: Morphism,
}

/// Decide splitting of a short exact sequence by solving the retraction and
/// section equations independently; the two verdicts must agree.
pub fn splitting(e: &NExactSequence) -> Result<Option<Splitting>> {
    if e.length() != 1 {
        return Err(Error::LengthMismatch(e.length(), 1));
    }
    let z = RingSpec::Integers;
    let iota = &e.arrows()[0];
    let pi = &e.arrows()[1];
    let y = e.left_end();
    let m = &e.middles()[0];
    let x = e.right_end();
    let wd = |src: &Presentation, tgt: &Presentation| MatrixConstraint {
        left: Matrix::identity(z.clone(), tgt.generators()),
        right: src.relation_columns(),
        rhs: Matrix::zero(z.clone(), tgt.generators(), src.relation_columns().cols()),
        modulus: tgt.relation_columns(),
    };
    let retraction_eq = MatrixConstraint {
        left: Matrix::identity(z.clone(), y.generators()),
        right: iota.matrix().lift(),
        rhs: Matrix::identity(z.clone(), y.generators()),
        modulus: y.relation_columns(),
    };
    let r = solve_matrix_constraints(
        e.ring(),
        y.generators(),
        m.generators(),
        &[wd(m, y), retraction_eq],
    );
    let section_eq = MatrixConstraint {
        left: pi.matrix().lift(),
        right: Matrix::identity(z.clone(), x.generators()),
        rhs: Matrix::identity(z.clone(), x.generators()),
        modulus: x.relation_columns(),
    };
    let s = solve_matrix_constraints(
        e.ring(),
        m.generators(),
        x.generators(),
        &[wd(x, m), section_eq],
    );
    match (r, s) {
        (Some(r), Some(s)) => Ok(Some(Splitting {
            retraction: Morphism::unchecked(m.clone(), y.clone(), r.particular),
            section: Morphism::unchecked(x.clone(), m.clone(), s.particular),
        })),
        (None, None) => Ok(None),
        _ => Err(Error::InternalConsistency(
            "a retraction exists iff a section exists".into(),
        )),
    }
}
