//! Morphisms of finitely presented modules: matrices on generators that
//! respect the relations. Equality is equality modulo the target relations,
//! since presentation-level matrices are not unique.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::presentation::Presentation;
use crate::solve::LinearSystem;
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    source: Presentation,
    target: Presentation,
    matrix: Matrix,
}

impl Morphism {
    /// Validating constructor: checks shapes, rings, and that every source
    /// relation maps into the target relation span.
    pub fn new(source: Presentation, target: Presentation, matrix: Matrix) -> Result<Self> {
        source.ring().same_ring(target.ring())?;
        source.ring().same_ring(matrix.ring())?;
        if matrix.rows() != target.generators() || matrix.cols() != source.generators() {
            return Err(Error::ShapeMismatch(format!(
                "matrix is {}x{}, expected {}x{} (target gens x source gens)",
                matrix.rows(),
                matrix.cols(),
                target.generators(),
                source.generators()
            )));
        }
        let span = LinearSystem::new(&target.relation_columns());
        let rel = source.relations();
        for i in 0..rel.rows() {
            let r = Matrix::from_rows(source.ring().clone(), vec![rel.row_vec(i)]).transpose();
            let image = matrix.mul(&r);
            if !span.contains(&image.lift()) {
                return Err(Error::IllDefinedMorphism { relation: i });
            }
        }
        Ok(Morphism {
            source,
            target,
            matrix,
        })
    }

    /// Constructor for matrices known to be well-defined by construction.
    pub(crate) fn unchecked(source: Presentation, target: Presentation, matrix: Matrix) -> Self {
        debug_assert_eq!(matrix.rows(), target.generators());
        debug_assert_eq!(matrix.cols(), source.generators());
        Morphism {
            source,
            target,
            matrix,
        }
    }

    pub fn identity(p: &Presentation) -> Self {
        Morphism::unchecked(
            p.clone(),
            p.clone(),
            Matrix::identity(p.ring().clone(), p.generators()),
        )
    }

    pub fn zero(source: &Presentation, target: &Presentation) -> Self {
        Morphism::unchecked(
            source.clone(),
            target.clone(),
            Matrix::zero(
                source.ring().clone(),
                target.generators(),
                source.generators(),
            ),
        )
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `self ∘ rhs` (apply `rhs` first).
    pub fn compose(&self, rhs: &Morphism) -> Morphism {
        assert_eq!(
            rhs.target, self.source,
            "composition endpoints do not match"
        );
        Morphism::unchecked(
            rhs.source.clone(),
            self.target.clone(),
            self.matrix.mul(&rhs.matrix),
        )
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        Morphism::unchecked(
            self.source.clone(),
            self.target.clone(),
            self.matrix.add(&other.matrix),
        )
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Morphism {
        Morphism::unchecked(self.source.clone(), self.target.clone(), self.matrix.neg())
    }

    pub fn scale(&self, s: &BigInt) -> Morphism {
        Morphism::unchecked(
            self.source.clone(),
            self.target.clone(),
            self.matrix.scale(s),
        )
    }

    /// Image of an element given by source-generator coordinates.
    pub fn apply(&self, coords: &Matrix) -> Matrix {
        self.matrix.mul(coords)
    }

    /// Equality as morphisms: same endpoints and the difference matrix has
    /// all columns in the target relation span.
    pub fn equals(&self, other: &Morphism) -> bool {
        if self.source != other.source || self.target != other.target {
            return false;
        }
        let diff = self.matrix.sub(&other.matrix);
        if diff.is_zero() {
            return true;
        }
        LinearSystem::new(&self.target.relation_columns())
            .solve_matrix(&diff.lift())
            .is_some()
    }

    pub fn is_zero_morphism(&self) -> bool {
        self.equals(&Morphism::zero(&self.source, &self.target))
    }

    /// Generators of the kernel lattice `{x : matrix*x ∈ target relations}`
    /// as integer columns (not yet canonicalized).
    pub(crate) fn kernel_lattice_generators(&self) -> Matrix {
        let stacked = self.matrix.lift().hstack(&self.target.relation_columns());
        let sys = LinearSystem::new(&stacked.with_ring(crate::ring::RingSpec::Integers));
        let null = sys.null_space_matrix();
        null.select_rows(&(0..self.source.generators()).collect::<Vec<_>>())
    }

    pub fn is_mono(&self) -> bool {
        let gens = self.kernel_lattice_generators();
        if gens.cols() == 0 {
            return true;
        }
        let span = LinearSystem::new(&self.source.relation_columns());
        (0..gens.cols()).all(|j| span.contains(&gens.column(j)))
    }

    pub fn is_epi(&self) -> bool {
        let reach = self.matrix.lift().hstack(&self.target.relation_columns());
        let sys = LinearSystem::new(&reach);
        let g = self.target.generators();
        (0..g).all(|i| {
            let mut e = Matrix::zero(crate::ring::RingSpec::Integers, g, 1);
            e.set(i, 0, BigInt::from(1));
            sys.contains(&e)
        })
    }

    pub fn is_iso(&self) -> bool {
        self.is_mono() && self.is_epi()
    }
}
