//! The module of all morphisms `M -> N`, presented so that its elements are
//! in bijective correspondence with the morphisms.
//!
//! A matrix `G` is a morphism iff `G * r` lies in the target relation span
//! for every source relation `r`; two matrices agree as morphisms iff their
//! difference has all columns in that span. Vectorizing turns both statements
//! into integer lattice conditions, and the quotient lattice is presented on
//! a minimal canonical generator set.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::morphism::Morphism;
use crate::presentation::{canonical_relations, CanonicalQuotient, InvariantFactors, Presentation};
use crate::ring::RingSpec;
use crate::snf::column_hermite_basis;
use crate::solve::LinearSystem;
use num_bigint::BigInt;

#[derive(Clone)]
pub struct HomModule {
    source: Presentation,
    target: Presentation,
    /// canonical basis of the lattice of well-defined matrices (columns are
    /// vectorized matrices, over Z)
    basis: Matrix,
    basis_system: LinearSystem,
    /// minimizing coordinate change on the raw quotient presentation
    cq: CanonicalQuotient,
    presentation: Presentation,
    reps: Vec<Morphism>,
}

/// Present the module of morphisms `M -> N` together with explicit morphism
/// representatives for its generators.
pub fn hom_module(m: &Presentation, n: &Presentation) -> Result<HomModule> {
    HomModule::new(m, n)
}

impl HomModule {
    pub fn new(m: &Presentation, n: &Presentation) -> Result<Self> {
        m.ring().same_ring(n.ring())?;
        let ring = m.ring().clone();
        let z = RingSpec::Integers;
        let gm = m.generators();
        let gn = n.generators();
        let dim = gm * gn;
        let rm = m.relation_columns(); // gm x a
        let rn = n.relation_columns(); // gn x b
        let a = rm.cols();

        // lattice of well-defined matrices: v with (RM^T ⊗ I) v in the span
        // of (I_a ⊗ RN), computed as a projected null space
        let coeff = rm.transpose().kronecker(&Matrix::identity(z.clone(), gn));
        let aux = Matrix::identity(z.clone(), a).kronecker(&rn);
        let stacked = coeff.hstack(&aux);
        let null = LinearSystem::new(&stacked).null_space_matrix();
        let raw_gens = null.select_rows(&(0..dim).collect::<Vec<_>>());
        let basis = column_hermite_basis(&raw_gens);
        let s = basis.cols();
        let basis_system = LinearSystem::new(&basis);

        // trivial matrices: columns of I_{gm} ⊗ RN, rewritten in the basis
        let trivial = Matrix::identity(z.clone(), gm).kronecker(&rn);
        let coords = basis_system.solve_matrix(&trivial).ok_or_else(|| {
            Error::InternalConsistency("trivial matrices must be morphisms".into())
        })?;
        let relations = canonical_relations(&ring, &coords.transpose().with_ring(ring.clone()));
        let raw = Presentation::new(ring.clone(), s, relations)?;
        let cq = CanonicalQuotient::new(&raw);
        let presentation = cq.minimal_presentation();

        let mut reps = Vec::with_capacity(cq.kept.len());
        for p in 0..cq.kept.len() {
            let mut unit = Matrix::zero(ring.clone(), cq.kept.len(), 1);
            unit.set(p, 0, BigInt::from(1));
            let matrix = Self::matrix_from_raw(&basis, &cq, &ring, gn, gm, &unit);
            let rep = Morphism::new(m.clone(), n.clone(), matrix).map_err(|e| {
                Error::InternalConsistency(format!("hom generator is not a morphism: {e}"))
            })?;
            reps.push(rep);
        }

        Ok(HomModule {
            source: m.clone(),
            target: n.clone(),
            basis,
            basis_system,
            cq,
            presentation,
            reps,
        })
    }

    fn matrix_from_raw(
        basis: &Matrix,
        cq: &CanonicalQuotient,
        ring: &RingSpec,
        gn: usize,
        gm: usize,
        coords: &Matrix,
    ) -> Matrix {
        let raw = cq.expand_coords(coords);
        let vec = basis.mul(&raw.lift());
        Matrix::unvectorize(ring.clone(), gn, gm, &vec.with_ring(ring.clone()))
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    /// Minimal presentation of the hom module; its generators correspond to
    /// [`HomModule::reps`].
    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn reps(&self) -> &[Morphism] {
        &self.reps
    }

    pub fn decomposition(&self) -> InvariantFactors {
        self.cq.invariant_factors()
    }

    pub fn order(&self) -> Option<BigInt> {
        self.decomposition().order()
    }

    /// Canonical coordinates of a morphism `M -> N` in the generators of the
    /// presentation. Errors if the endpoints do not match.
    pub fn coords_of(&self, f: &Morphism) -> Result<Matrix> {
        if f.source() != &self.source || f.target() != &self.target {
            return Err(Error::EndMismatch(
                "morphism endpoints do not match the hom module".into(),
            ));
        }
        let vec = f.matrix().vectorize().lift();
        let raw = self.basis_system.solve(&vec).ok_or_else(|| {
            Error::InternalConsistency("a well-defined morphism must lie in the hom lattice".into())
        })?;
        Ok(self
            .cq
            .reduce_coords(&raw.with_ring(self.source.ring().clone())))
    }

    /// The morphism represented by the given generator coordinates.
    pub fn morphism_from_coords(&self, coords: &Matrix) -> Morphism {
        let matrix = Self::matrix_from_raw(
            &self.basis,
            &self.cq,
            self.source.ring(),
            self.target.generators(),
            self.source.generators(),
            coords,
        );
        Morphism::unchecked(self.source.clone(), self.target.clone(), matrix)
    }

    /// Do two morphisms define the same element (i.e. are they equal)?
    pub fn same_element(&self, f: &Morphism, g: &Morphism) -> Result<bool> {
        Ok(self.coords_of(f)? == self.coords_of(g)?)
    }
}
