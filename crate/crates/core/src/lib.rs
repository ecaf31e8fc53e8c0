//! Exact homological algebra over finitely presented modules.
//!
//! The base rings are the integers and the integers modulo n; every module
//! is a finitely presented module given by generators and relation rows,
//! every map is a matrix on generators, and every claim (exactness,
//! splitting, vanishing of Ext, dimension verdicts) is decided by exact
//! integer linear algebra built on Smith normal form.
//!
//! ```
//! use fpext_core::{ext_module, projective_dimension, Presentation, RingSpec};
//! use num_bigint::BigInt;
//!
//! // Z/2 as a module over Z/4: one generator, one relation
//! let ring = RingSpec::integers_mod(4).unwrap();
//! let m = Presentation::cyclic(ring, 2);
//!
//! // its self-extensions never die out
//! for n in 1..=4 {
//!     let e = ext_module(n, &m, &m).unwrap();
//!     assert_eq!(e.order(), Some(BigInt::from(2)));
//! }
//! assert!(projective_dimension(&m, 16).is_infinite());
//! ```

pub mod constructions;
pub mod dimension;
pub mod error;
pub mod ext;
pub mod hom;
pub mod io;
pub mod les;
pub mod matrix;
pub mod morphism;
pub mod presentation;
pub mod projinj;
pub mod resolution;
pub mod ring;
pub mod sequence;
pub mod snf;
pub mod solve;

pub use constructions::{
    cokernel, direct_sum, image, is_exact_at, kernel, lift_through_epi, lift_through_mono,
    pullback, pullback_mediator, pushout, pushout_mediator, Cokernel, DirectSum, Image, Kernel,
    Pullback, Pushout,
};
pub use dimension::{flat_dimension, injective_dimension, projective_dimension, Dimension};
pub use error::{Error, Result};
pub use ext::{
    are_equivalent, class_of, class_of_seeded, ext_module, ext_module_with_tower, is_zero_class,
    realize_class, splitting, ExtClass, ExtModule, Splitting,
};
pub use hom::{hom_module, HomModule};
pub use les::{
    les_contravariant, les_covariant, LesCertificate, LesNode, LesVariance, LongExactSequence,
};
pub use matrix::Matrix;
pub use morphism::Morphism;
pub use presentation::{canonical_relations, CanonicalQuotient, InvariantFactors, Presentation};
pub use projinj::{embed_into_injective, is_injective, is_projective, InjectiveEnvelope};
pub use resolution::{projective_presentation, syzygy_tower, ProjectivePresentation, SyzygyTower};
pub use ring::{RingElement, RingSpec};
pub use sequence::{
    pullback_sequence, pushout_sequence, short_exact, NExactSequence, SequenceMorphism,
};
pub use snf::{column_hermite_basis, row_hermite_basis, smith_normal_form, SmithDecomposition};
pub use solve::{
    column_span_contains, solve_linear, solve_matrix_constraints, ConstraintSolution, LinearSystem,
    MatrixConstraint,
};
