//! Projectivity and injectivity tests.
//!
//! A module is projective iff its free presentation splits, decided by
//! solving the section equation as a linear system. Injectives only exist in
//! the finitely generated world over the self-injective rings Z/n, where
//! every module embeds into a finite power of the ring.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::morphism::Morphism;
use crate::presentation::{CanonicalQuotient, Presentation};
use crate::ring::RingSpec;
use crate::solve::{solve_matrix_constraints, MatrixConstraint};
use num_integer::Integer;
use num_traits::Zero;

/// True iff the canonical free presentation `0 -> κ(M) -> F -> M -> 0`
/// splits, i.e. a section `M -> F` of the projection exists.
pub fn is_projective(m: &Presentation) -> bool {
    let g = m.generators();
    let free = Presentation::free(m.ring().clone(), g);
    let z = RingSpec::Integers;
    let well_defined = MatrixConstraint {
        left: Matrix::identity(z.clone(), g),
        right: m.relation_columns(),
        rhs: Matrix::zero(z.clone(), g, m.relation_columns().cols()),
        modulus: free.relation_columns(),
    };
    // the projection F -> M is the identity on generators, so a section is a
    // well-defined S with S ≡ I modulo the relations of M
    let section = MatrixConstraint {
        left: Matrix::identity(z.clone(), g),
        right: Matrix::identity(z.clone(), g),
        rhs: Matrix::identity(z, g),
        modulus: m.relation_columns(),
    };
    solve_matrix_constraints(m.ring(), g, g, &[well_defined, section]).is_some()
}

#[derive(Clone, Debug)]
pub struct InjectiveEnvelope {
    /// a finite power of the ring
    pub envelope: Presentation,
    /// monomorphism `M -> envelope`
    pub embedding: Morphism,
}

/// Embed a module over Z/n into a finite direct sum of copies of the ring:
/// each invariant factor Z/d goes in via multiplication by n/d.
pub fn embed_into_injective(m: &Presentation) -> Result<InjectiveEnvelope> {
    let n = match m.ring().modulus() {
        Some(n) => n.clone(),
        None => {
            return Err(Error::UnsupportedRing(
                "finitely generated injective modules only exist over Z/n".into(),
            ))
        }
    };
    let cq = CanonicalQuotient::new(m);
    let keep = &cq.kept;
    let mut scaled = Matrix::zero(RingSpec::Integers, keep.len(), m.generators());
    for (p, &i) in keep.iter().enumerate() {
        let d = &cq.factors[i];
        debug_assert!(!d.is_zero(), "factors over Z/n divide n");
        let scale = n.div_floor(d);
        for j in 0..m.generators() {
            scaled.set(p, j, cq.u.get(i, j) * &scale);
        }
    }
    let envelope = Presentation::free(m.ring().clone(), keep.len());
    let embedding = Morphism::new(
        m.clone(),
        envelope.clone(),
        scaled.with_ring(m.ring().clone()),
    )
    .map_err(|e| Error::InternalConsistency(format!("injective embedding ill-defined: {e}")))?;
    debug_assert!(embedding.is_mono());
    Ok(InjectiveEnvelope {
        envelope,
        embedding,
    })
}

/// True iff the canonical embedding into an injective splits (Z/n only).
pub fn is_injective(m: &Presentation) -> Result<bool> {
    let env = embed_into_injective(m)?;
    let g = m.generators();
    let ge = env.envelope.generators();
    let z = RingSpec::Integers;
    let well_defined = MatrixConstraint {
        left: Matrix::identity(z.clone(), g),
        right: env.envelope.relation_columns(),
        rhs: Matrix::zero(z.clone(), g, env.envelope.relation_columns().cols()),
        modulus: m.relation_columns(),
    };
    let retraction = MatrixConstraint {
        left: Matrix::identity(z.clone(), g),
        right: env.embedding.matrix().lift(),
        rhs: Matrix::identity(z, g),
        modulus: m.relation_columns(),
    };
    Ok(solve_matrix_constraints(m.ring(), g, ge, &[well_defined, retraction]).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn z() -> RingSpec {
        RingSpec::Integers
    }

    fn z4() -> RingSpec {
        RingSpec::integers_mod(4).unwrap()
    }

    fn z6() -> RingSpec {
        RingSpec::integers_mod(6).unwrap()
    }

    #[test]
    fn free_modules_are_projective() {
        assert!(is_projective(&Presentation::free(z(), 3)));
        assert!(is_projective(&Presentation::free(z4(), 2)));
        assert!(is_projective(&Presentation::zero(z())));
    }

    #[test]
    fn z2_is_not_projective_over_z() {
        assert!(!is_projective(&Presentation::cyclic(z(), 2)));
    }

    #[test]
    fn z2_not_projective_over_z4_but_z4_is() {
        assert!(!is_projective(&Presentation::cyclic(z4(), 2)));
        assert!(is_projective(&Presentation::free(z4(), 1)));
    }

    #[test]
    fn projectivity_matches_invariant_factor_criterion() {
        // over Z/n a module is projective iff every invariant factor d has,
        // at each prime p dividing n, p-valuation 0 or the full valuation of n
        fn valuation(mut v: BigInt, p: &BigInt) -> u32 {
            let mut count = 0;
            while (&v % p) == BigInt::from(0) && v != BigInt::from(0) {
                v /= p;
                count += 1;
            }
            count
        }
        for n in [4i64, 6, 8, 9, 12] {
            let ring = RingSpec::integers_mod(n).unwrap();
            let nb = BigInt::from(n);
            let primes: Vec<BigInt> = (2..=n)
                .filter(|p| (2..*p).all(|q| p % q != 0) && n % p == 0)
                .map(BigInt::from)
                .collect();
            for d in 2..=n {
                if n % d != 0 {
                    continue;
                }
                let m = Presentation::cyclic(ring.clone(), d);
                let by_factors = primes.iter().all(|p| {
                    let vd = valuation(BigInt::from(d), p);
                    vd == 0 || vd == valuation(nb.clone(), p)
                });
                assert_eq!(is_projective(&m), by_factors, "Z/{d} over Z/{n}");
            }
        }
        // in particular Z/2 is projective over Z/6
        assert!(is_projective(&Presentation::cyclic(z6(), 2)));
    }

    #[test]
    fn injective_side_requires_modular_ring() {
        let m = Presentation::cyclic(z(), 2);
        assert!(matches!(
            embed_into_injective(&m),
            Err(Error::UnsupportedRing(_))
        ));
        assert!(matches!(is_injective(&m), Err(Error::UnsupportedRing(_))));
    }

    #[test]
    fn ring_is_injective_over_itself() {
        let r = Presentation::free(z4(), 1);
        let env = embed_into_injective(&r).unwrap();
        assert_eq!(env.envelope.generators(), 1);
        assert!(env.embedding.matrix().is_identity());
        assert!(is_injective(&r).unwrap());
    }

    #[test]
    fn z2_over_z4_embeds_by_mult_2_and_is_not_injective() {
        let m = Presentation::cyclic(z4(), 2);
        let env = embed_into_injective(&m).unwrap();
        assert_eq!(env.envelope.generators(), 1);
        assert_eq!(env.embedding.matrix().get(0, 0), &BigInt::from(2));
        assert!(env.embedding.is_mono());
        assert!(!is_injective(&m).unwrap());
    }

    #[test]
    fn zero_module_is_injective() {
        let m = Presentation::zero(z4());
        let env = embed_into_injective(&m).unwrap();
        assert_eq!(env.envelope.generators(), 0);
        assert!(is_injective(&m).unwrap());
    }

    #[test]
    fn self_injectivity_aligns_with_projectivity() {
        // over Z/n injectives and projectives coincide
        for n in [4i64, 6, 8, 9] {
            let ring = RingSpec::integers_mod(n).unwrap();
            for d in 2..=n {
                if n % d != 0 {
                    continue;
                }
                let m = Presentation::cyclic(ring.clone(), d);
                assert_eq!(
                    is_projective(&m),
                    is_injective(&m).unwrap(),
                    "Z/{d} over Z/{n}"
                );
            }
        }
    }
}
