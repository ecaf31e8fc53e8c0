//! Kernels, cokernels, images, direct sums, pushouts and pullbacks, plus the
//! factorization helpers everything downstream leans on.
//!
//! Kernel objects are canonicalized: the kernel lattice gets its column
//! Hermite basis as generator set and the relation rows get their Hermite
//! basis too, so derived objects are reproducible bit for bit.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::morphism::Morphism;
use crate::presentation::{canonical_relations, Presentation};
use crate::ring::RingSpec;
use crate::snf::column_hermite_basis;
use crate::solve::{solve_matrix_constraints, LinearSystem, MatrixConstraint};

#[derive(Clone, Debug)]
pub struct Kernel {
    pub object: Presentation,
    /// monomorphism `object -> source(f)`
    pub inclusion: Morphism,
}

/// Kernel of a morphism, with its universal monomorphism.
pub fn kernel(f: &Morphism) -> Kernel {
    let ring = f.source().ring().clone();
    let raw = f.kernel_lattice_generators();
    let basis = column_hermite_basis(&raw.lift());
    let rows: Vec<usize> = (0..basis.rows()).collect();
    debug_assert_eq!(rows.len(), f.source().generators());
    let gens = basis.cols();
    let stacked = basis.hstack(&f.source().relation_columns());
    let null = LinearSystem::new(&stacked).null_space_matrix();
    let rel_rows = null.select_rows(&(0..gens).collect::<Vec<_>>()).transpose();
    let relations = canonical_relations(&ring, &rel_rows.with_ring(ring.clone()));
    let object = Presentation::new(ring.clone(), gens, relations).expect("kernel shape");
    let inclusion = Morphism::unchecked(object.clone(), f.source().clone(), basis.with_ring(ring));
    Kernel { object, inclusion }
}

#[derive(Clone, Debug)]
pub struct Cokernel {
    pub object: Presentation,
    /// epimorphism `target(f) -> object`
    pub projection: Morphism,
}

pub fn cokernel(f: &Morphism) -> Cokernel {
    let ring = f.target().ring().clone();
    let rows = f.target().relations().vstack(&f.matrix().transpose());
    let relations = canonical_relations(&ring, &rows);
    let object =
        Presentation::new(ring.clone(), f.target().generators(), relations).expect("coker shape");
    let projection = Morphism::unchecked(
        f.target().clone(),
        object.clone(),
        Matrix::identity(ring, f.target().generators()),
    );
    Cokernel { object, projection }
}

#[derive(Clone, Debug)]
pub struct Image {
    pub object: Presentation,
    /// monomorphism `object -> target(f)`
    pub inclusion: Morphism,
    /// epimorphism `source(f) -> object` with `inclusion ∘ onto = f` on the nose
    pub onto: Morphism,
}

/// Image of `f`, realized as the kernel of the cokernel projection.
pub fn image(f: &Morphism) -> Image {
    let coker = cokernel(f);
    let k = kernel(&coker.projection);
    let onto_matrix = LinearSystem::new(k.inclusion.matrix())
        .solve_matrix(f.matrix())
        .expect("columns of f lie in the image lattice");
    let onto = Morphism::unchecked(f.source().clone(), k.object.clone(), onto_matrix);
    Image {
        object: k.object,
        inclusion: k.inclusion,
        onto,
    }
}

#[derive(Clone, Debug)]
pub struct DirectSum {
    pub object: Presentation,
    pub include_left: Morphism,
    pub include_right: Morphism,
    pub project_left: Morphism,
    pub project_right: Morphism,
}

pub fn direct_sum(left: &Presentation, right: &Presentation) -> Result<DirectSum> {
    left.ring().same_ring(right.ring())?;
    let ring = left.ring().clone();
    let gl = left.generators();
    let gr = right.generators();
    let relations = left.relations().block_diag(right.relations());
    let object = Presentation::new(ring.clone(), gl + gr, relations)?;
    let il = Matrix::identity(ring.clone(), gl).vstack(&Matrix::zero(ring.clone(), gr, gl));
    let ir = Matrix::zero(ring.clone(), gl, gr).vstack(&Matrix::identity(ring.clone(), gr));
    let pl = Matrix::identity(ring.clone(), gl).hstack(&Matrix::zero(ring.clone(), gl, gr));
    let pr = Matrix::zero(ring.clone(), gr, gl).hstack(&Matrix::identity(ring, gr));
    Ok(DirectSum {
        include_left: Morphism::unchecked(left.clone(), object.clone(), il),
        include_right: Morphism::unchecked(right.clone(), object.clone(), ir),
        project_left: Morphism::unchecked(object.clone(), left.clone(), pl),
        project_right: Morphism::unchecked(object.clone(), right.clone(), pr),
        object,
    })
}

#[derive(Clone, Debug)]
pub struct Pushout {
    pub object: Presentation,
    /// `codomain(alpha) -> PO`
    pub from_alpha_target: Morphism,
    /// `codomain(beta) -> PO`
    pub from_beta_target: Morphism,
    /// the span the square was built from
    pub alpha: Morphism,
    pub beta: Morphism,
}

/// Pushout of `alpha: Y -> A` and `beta: Y -> B`: the quotient of `A ⊕ B` by
/// the span of `(alpha y, -beta y)`.
pub fn pushout(alpha: &Morphism, beta: &Morphism) -> Result<Pushout> {
    if alpha.source() != beta.source() {
        return Err(Error::EndMismatch(
            "pushout legs must share their source".into(),
        ));
    }
    let ring = alpha.source().ring().clone();
    let a = alpha.target();
    let b = beta.target();
    let glue = alpha
        .matrix()
        .transpose()
        .hstack(&beta.matrix().neg().transpose());
    let rows = a.relations().block_diag(b.relations()).vstack(&glue);
    let relations = canonical_relations(&ring, &rows);
    let object = Presentation::new(ring.clone(), a.generators() + b.generators(), relations)?;
    let ia = Matrix::identity(ring.clone(), a.generators()).vstack(&Matrix::zero(
        ring.clone(),
        b.generators(),
        a.generators(),
    ));
    let ib = Matrix::zero(ring.clone(), a.generators(), b.generators())
        .vstack(&Matrix::identity(ring, b.generators()));
    Ok(Pushout {
        from_alpha_target: Morphism::unchecked(a.clone(), object.clone(), ia),
        from_beta_target: Morphism::unchecked(b.clone(), object.clone(), ib),
        object,
        alpha: alpha.clone(),
        beta: beta.clone(),
    })
}

/// The unique mediating morphism out of a pushout: given a commuting cocone
/// `beta_prime: A -> C`, `alpha_prime: B -> C`, returns `γ: PO -> C` with
/// `γ ∘ from_alpha_target = beta_prime` and `γ ∘ from_beta_target = alpha_prime`.
pub fn pushout_mediator(
    po: &Pushout,
    beta_prime: &Morphism,
    alpha_prime: &Morphism,
) -> Result<Morphism> {
    if !beta_prime
        .compose(&po.alpha)
        .equals(&alpha_prime.compose(&po.beta))
    {
        return Err(Error::Malformed(
            "pushout mediator: the cocone does not commute".into(),
        ));
    }
    let matrix = beta_prime.matrix().hstack(alpha_prime.matrix());
    Morphism::new(po.object.clone(), beta_prime.target().clone(), matrix)
        .map_err(|e| Error::InternalConsistency(format!("pushout mediator ill-defined: {e}")))
}

#[derive(Clone, Debug)]
pub struct Pullback {
    pub object: Presentation,
    /// `PB -> source(beta)` (projection to the B slot)
    pub to_beta_source: Morphism,
    /// `PB -> source(alpha)` (projection to the A slot)
    pub to_alpha_source: Morphism,
    /// the cospan the square was built from
    pub alpha: Morphism,
    pub beta: Morphism,
}

/// Pullback of `alpha: A -> X` and `beta: B -> X`: the kernel of
/// `(beta, -alpha): B ⊕ A -> X`.
pub fn pullback(alpha: &Morphism, beta: &Morphism) -> Result<Pullback> {
    if alpha.target() != beta.target() {
        return Err(Error::EndMismatch(
            "pullback legs must share their target".into(),
        ));
    }
    let a = alpha.source();
    let b = beta.source();
    let ds = direct_sum(b, a)?;
    let matrix = beta.matrix().hstack(&alpha.matrix().neg());
    let h = Morphism::unchecked(ds.object.clone(), alpha.target().clone(), matrix);
    let k = kernel(&h);
    let to_b = ds.project_left.compose(&k.inclusion);
    let to_a = ds.project_right.compose(&k.inclusion);
    Ok(Pullback {
        object: k.object,
        to_beta_source: to_b,
        to_alpha_source: to_a,
        alpha: alpha.clone(),
        beta: beta.clone(),
    })
}

/// The unique mediating morphism into a pullback: given a commuting cone
/// `alpha_prime: C -> B`, `beta_prime: C -> A`, returns `γ: C -> PB` with
/// `to_beta_source ∘ γ = alpha_prime` and `to_alpha_source ∘ γ = beta_prime`.
pub fn pullback_mediator(
    pb: &Pullback,
    alpha_prime: &Morphism,
    beta_prime: &Morphism,
) -> Result<Morphism> {
    if !pb
        .beta
        .compose(alpha_prime)
        .equals(&pb.alpha.compose(beta_prime))
    {
        return Err(Error::Malformed(
            "pullback mediator: the cone does not commute".into(),
        ));
    }
    let stacked_target = direct_sum(pb.beta.source(), pb.alpha.source())?;
    let stacked = Morphism::unchecked(
        alpha_prime.source().clone(),
        stacked_target.object,
        alpha_prime.matrix().vstack(beta_prime.matrix()),
    );
    // PB -> B ⊕ A is the kernel inclusion; recover it from the two legs.
    let incl = Morphism::unchecked(
        pb.object.clone(),
        stacked.target().clone(),
        pb.to_beta_source
            .matrix()
            .vstack(pb.to_alpha_source.matrix()),
    );
    lift_through_mono(&incl, &stacked)
        .ok_or_else(|| Error::InternalConsistency("pullback mediator: cone does not factor".into()))
}

/// Exactness at the joint: the composite vanishes and every kernel
/// generator of `outgoing` lies in the image lattice of `incoming`.
pub fn is_exact_at(incoming: &Morphism, outgoing: &Morphism) -> bool {
    debug_assert_eq!(incoming.target(), outgoing.source());
    if !outgoing.compose(incoming).is_zero_morphism() {
        return false;
    }
    let node = incoming.target();
    let ker = kernel(outgoing);
    let image_lattice = incoming.matrix().lift().hstack(&node.relation_columns());
    let span = LinearSystem::new(&image_lattice);
    let gens = ker.inclusion.matrix();
    (0..gens.cols()).all(|j| span.contains(&gens.column(j).lift()))
}

/// Factor `g: C -> B` through a monomorphism `mono: A -> B`; the result is
/// the unique `h: C -> A` with `mono ∘ h = g`, when the image of `g` lies in
/// the image of `mono`.
pub fn lift_through_mono(mono: &Morphism, g: &Morphism) -> Option<Morphism> {
    debug_assert_eq!(mono.target(), g.target());
    let ring = mono.source().ring();
    let constraint = MatrixConstraint {
        left: mono.matrix().lift(),
        right: Matrix::identity(RingSpec::Integers, g.source().generators()),
        rhs: g.matrix().lift(),
        modulus: mono.target().relation_columns(),
    };
    let sol = solve_matrix_constraints(
        ring,
        mono.source().generators(),
        g.source().generators(),
        &[constraint],
    )?;
    Some(Morphism::unchecked(
        g.source().clone(),
        mono.source().clone(),
        sol.particular,
    ))
}

/// Lift `g: P -> C` through an epimorphism `epi: B -> C`: a morphism
/// `h: P -> B` with `epi ∘ h = g`, together with well-defined homogeneous
/// perturbations of the lift. Exists whenever `P` is projective.
pub fn lift_through_epi(epi: &Morphism, g: &Morphism) -> Option<(Morphism, Vec<Matrix>)> {
    debug_assert_eq!(epi.target(), g.target());
    let ring = g.source().ring();
    let p = g.source();
    let b = epi.source();
    let well_defined = MatrixConstraint {
        left: Matrix::identity(RingSpec::Integers, b.generators()),
        right: p.relation_columns(),
        rhs: Matrix::zero(
            RingSpec::Integers,
            b.generators(),
            p.relation_columns().cols(),
        ),
        modulus: b.relation_columns(),
    };
    let equation = MatrixConstraint {
        left: epi.matrix().lift(),
        right: Matrix::identity(RingSpec::Integers, p.generators()),
        rhs: g.matrix().lift(),
        modulus: g.target().relation_columns(),
    };
    let sol = solve_matrix_constraints(
        ring,
        b.generators(),
        p.generators(),
        &[well_defined, equation],
    )?;
    let h = Morphism::unchecked(p.clone(), b.clone(), sol.particular);
    Some((h, sol.homogeneous))
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

    fn decomp(p: &Presentation) -> String {
        p.canonical_decomposition().to_string()
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let p = Presentation::cyclic(z(), 6);
        let k = kernel(&Morphism::identity(&p));
        assert!(k.object.is_zero_module());
    }

    #[test]
    fn kernel_of_zero_map_is_source() {
        let m = Presentation::cyclic(z(), 6);
        let n = Presentation::cyclic(z(), 4);
        let k = kernel(&Morphism::zero(&m, &n));
        assert_eq!(
            k.object.canonical_decomposition(),
            m.canonical_decomposition()
        );
        assert!(k.inclusion.is_mono());
    }

    #[test]
    fn kernel_of_mult_2_on_z_is_zero() {
        let zz = Presentation::free(z(), 1);
        let f = Morphism::new(zz.clone(), zz, Matrix::from_i64(z(), vec![vec![2]])).unwrap();
        assert!(kernel(&f).object.is_zero_module());
    }

    #[test]
    fn cokernel_of_identity_is_zero() {
        let p = Presentation::cyclic(z4(), 2);
        assert!(cokernel(&Morphism::identity(&p)).object.is_zero_module());
    }

    #[test]
    fn cokernel_of_mult_6() {
        let zz = Presentation::free(z(), 1);
        let f = Morphism::new(zz.clone(), zz, Matrix::from_i64(z(), vec![vec![6]])).unwrap();
        let c = cokernel(&f);
        assert_eq!(decomp(&c.object), "Z/6");
        assert!(c.projection.is_epi());
        assert!(c.projection.compose(&f).is_zero_morphism());
    }

    #[test]
    fn cokernel_of_zero_is_target() {
        let m = Presentation::free(z(), 1);
        let n = Presentation::cyclic(z(), 4);
        let c = cokernel(&Morphism::zero(&m, &n));
        assert_eq!(decomp(&c.object), "Z/4");
    }

    #[test]
    fn image_of_epi_is_target() {
        let zz = Presentation::free(z(), 1);
        let t = Presentation::cyclic(z(), 2);
        let f = Morphism::new(zz, t.clone(), Matrix::from_i64(z(), vec![vec![1]])).unwrap();
        let i = image(&f);
        assert_eq!(
            i.object.canonical_decomposition(),
            t.canonical_decomposition()
        );
        assert!(i.onto.is_epi());
        assert!(i.inclusion.is_mono());
        assert!(i.inclusion.compose(&i.onto).equals(&f));
    }

    #[test]
    fn image_of_zero_is_zero() {
        let m = Presentation::cyclic(z(), 2);
        let n = Presentation::cyclic(z(), 4);
        assert!(image(&Morphism::zero(&m, &n)).object.is_zero_module());
    }

    #[test]
    fn image_of_mult_2_into_z4() {
        // Z/4 -> Z/4 multiplication by 2 over Z/4 has image Z/2
        let r = Presentation::free(z4(), 1);
        let f = Morphism::new(r.clone(), r, Matrix::from_i64(z4(), vec![vec![2]])).unwrap();
        let i = image(&f);
        assert_eq!(decomp(&i.object), "Z/2");
        // enumerate the images of all 4 ring elements: {0, 2}, order 2
        let images: std::collections::BTreeSet<i64> = (0..4).map(|x| (2 * x) % 4).collect();
        assert_eq!(images.len(), 2);
        // factorization is on the nose
        assert_eq!(
            i.inclusion.matrix().mul(i.onto.matrix()),
            f.matrix().clone()
        );
    }

    #[test]
    fn direct_sum_identities() {
        let m = Presentation::cyclic(z(), 2);
        let n = Presentation::cyclic(z(), 3);
        let s = direct_sum(&m, &n).unwrap();
        assert_eq!(decomp(&s.object), "Z/6");
        assert!(s
            .project_left
            .compose(&s.include_left)
            .equals(&Morphism::identity(&m)));
        assert!(s
            .project_right
            .compose(&s.include_right)
            .equals(&Morphism::identity(&n)));
        assert!(s.project_left.compose(&s.include_right).is_zero_morphism());
        let recomposed = s
            .include_left
            .compose(&s.project_left)
            .add(&s.include_right.compose(&s.project_right));
        assert!(recomposed.equals(&Morphism::identity(&s.object)));
        // M ⊕ 0 ≅ M
        let zero = Presentation::zero(z());
        let s2 = direct_sum(&m, &zero).unwrap();
        assert_eq!(
            s2.object.canonical_decomposition(),
            m.canonical_decomposition()
        );
    }

    #[test]
    fn pushout_along_identity_is_iso() {
        let y = Presentation::cyclic(z(), 2);
        let a = Presentation::cyclic(z(), 4);
        let alpha = Morphism::new(y.clone(), a, Matrix::from_i64(z(), vec![vec![2]])).unwrap();
        let beta = Morphism::identity(&y);
        let po = pushout(&alpha, &beta).unwrap();
        assert!(po.from_alpha_target.is_iso());
        assert_eq!(decomp(&po.object), "Z/4");
    }

    #[test]
    fn pushout_of_zero_maps_is_sum() {
        let y = Presentation::cyclic(z(), 2);
        let a = Presentation::cyclic(z(), 4);
        let b = Presentation::free(z(), 1);
        let po = pushout(&Morphism::zero(&y, &a), &Morphism::zero(&y, &b)).unwrap();
        assert_eq!(decomp(&po.object), "Z + Z/4");
    }

    #[test]
    fn pushout_frozen_example() {
        // Y = Z, A = Z (alpha = mult 2), B = Z/2 (beta = quotient): PO ≅ Z/4
        let y = Presentation::free(z(), 1);
        let a = Presentation::free(z(), 1);
        let b = Presentation::cyclic(z(), 2);
        let alpha = Morphism::new(y.clone(), a, Matrix::from_i64(z(), vec![vec![2]])).unwrap();
        let beta = Morphism::new(y, b, Matrix::from_i64(z(), vec![vec![1]])).unwrap();
        let po = pushout(&alpha, &beta).unwrap();
        assert_eq!(decomp(&po.object), "Z/4");
        assert!(po
            .from_alpha_target
            .compose(&alpha)
            .equals(&po.from_beta_target.compose(&beta)));
    }

    #[test]
    fn pushout_mediator_exists_and_is_unique() {
        let y = Presentation::free(z(), 1);
        let a = Presentation::free(z(), 1);
        let b = Presentation::cyclic(z(), 2);
        let alpha =
            Morphism::new(y.clone(), a.clone(), Matrix::from_i64(z(), vec![vec![2]])).unwrap();
        let beta =
            Morphism::new(y.clone(), b.clone(), Matrix::from_i64(z(), vec![vec![1]])).unwrap();
        let po = pushout(&alpha, &beta).unwrap();
        // cocone through C = Z/8: beta' : Z -> Z/8 mult 2, alpha': Z/2 -> Z/8 mult 4
        let c = Presentation::cyclic(z(), 8);
        let beta_prime =
            Morphism::new(a.clone(), c.clone(), Matrix::from_i64(z(), vec![vec![2]])).unwrap();
        let alpha_prime =
            Morphism::new(b.clone(), c.clone(), Matrix::from_i64(z(), vec![vec![4]])).unwrap();
        let gamma = pushout_mediator(&po, &beta_prime, &alpha_prime).unwrap();
        assert!(gamma.compose(&po.from_alpha_target).equals(&beta_prime));
        assert!(gamma.compose(&po.from_beta_target).equals(&alpha_prime));
        // uniqueness: any solution of the same equations equals gamma
        let wd = MatrixConstraint {
            left: Matrix::identity(z(), 1),
            right: po.object.relation_columns(),
            rhs: Matrix::zero(z(), 1, po.object.relation_columns().cols()),
            modulus: c.relation_columns(),
        };
        let eq_a = MatrixConstraint {
            left: Matrix::identity(z(), 1),
            right: po.from_alpha_target.matrix().lift(),
            rhs: beta_prime.matrix().lift(),
            modulus: c.relation_columns(),
        };
        let eq_b = MatrixConstraint {
            left: Matrix::identity(z(), 1),
            right: po.from_beta_target.matrix().lift(),
            rhs: alpha_prime.matrix().lift(),
            modulus: c.relation_columns(),
        };
        let sol = solve_matrix_constraints(&z(), 1, 2, &[wd, eq_a, eq_b]).unwrap();
        let alt = Morphism::unchecked(po.object.clone(), c.clone(), sol.particular.clone());
        assert!(alt.equals(&gamma));
        for h in &sol.homogeneous {
            let perturbed =
                Morphism::unchecked(po.object.clone(), c.clone(), sol.particular.add(h));
            assert!(perturbed.equals(&gamma), "mediator must be unique");
        }
    }

    #[test]
    fn pullback_along_identity_is_iso() {
        let b = Presentation::cyclic(z(), 4);
        let x = Presentation::cyclic(z(), 2);
        let beta = Morphism::new(b, x.clone(), Matrix::from_i64(z(), vec![vec![1]])).unwrap();
        let alpha = Morphism::identity(&x);
        let pb = pullback(&alpha, &beta).unwrap();
        // projection to the B slot is an isomorphism
        assert!(pb.to_beta_source.is_iso());
    }

    #[test]
    fn pullback_over_zero_is_sum() {
        let a = Presentation::cyclic(z(), 2);
        let b = Presentation::free(z(), 1);
        let x = Presentation::zero(z());
        let pb = pullback(&Morphism::zero(&a, &x), &Morphism::zero(&b, &x)).unwrap();
        assert_eq!(decomp(&pb.object), "Z + Z/2");
    }

    #[test]
    fn pullback_frozen_example() {
        // A = B = Z, X = Z/2, both maps the quotient: PB = {(a,b): a ≡ b mod 2}
        let zz = Presentation::free(z(), 1);
        let x = Presentation::cyclic(z(), 2);
        let q = Matrix::from_i64(z(), vec![vec![1]]);
        let alpha = Morphism::new(zz.clone(), x.clone(), q.clone()).unwrap();
        let beta = Morphism::new(zz.clone(), x.clone(), q).unwrap();
        let pb = pullback(&alpha, &beta).unwrap();
        let inv = pb.object.canonical_decomposition();
        assert_eq!(inv.free_rank, 2);
        assert!(inv.torsion.is_empty());
        assert!(beta
            .compose(&pb.to_beta_source)
            .equals(&alpha.compose(&pb.to_alpha_source)));
    }

    #[test]
    fn pullback_mediator_round_trip() {
        let zz = Presentation::free(z(), 1);
        let x = Presentation::cyclic(z(), 2);
        let q = Matrix::from_i64(z(), vec![vec![1]]);
        let alpha = Morphism::new(zz.clone(), x.clone(), q.clone()).unwrap();
        let beta = Morphism::new(zz.clone(), x.clone(), q).unwrap();
        let pb = pullback(&alpha, &beta).unwrap();
        // cone from C = Z: (mult 2 into B, mult 4 into A): 2 ≡ 4 mod 2
        let c = Presentation::free(z(), 1);
        let a_prime =
            Morphism::new(c.clone(), zz.clone(), Matrix::from_i64(z(), vec![vec![2]])).unwrap();
        let b_prime =
            Morphism::new(c.clone(), zz.clone(), Matrix::from_i64(z(), vec![vec![4]])).unwrap();
        let gamma = pullback_mediator(&pb, &a_prime, &b_prime).unwrap();
        assert!(pb.to_beta_source.compose(&gamma).equals(&a_prime));
        assert!(pb.to_alpha_source.compose(&gamma).equals(&b_prime));
    }

    #[test]
    fn functoriality_image_equals_kernel_of_cokernel() {
        // spelled out for a couple of maps over both rings
        for (ring, entries) in [
            (z(), vec![vec![2, 0], vec![0, 3]]),
            (z4(), vec![vec![2, 1], vec![0, 2]]),
        ] {
            let src = Presentation::free(ring.clone(), 2);
            let tgt = Presentation::free(ring.clone(), 2);
            let f = Morphism::new(src, tgt, Matrix::from_i64(ring.clone(), entries)).unwrap();
            let im = image(&f);
            let k = kernel(&cokernel(&f).projection);
            assert_eq!(im.object, k.object);
            assert_eq!(im.inclusion.matrix(), k.inclusion.matrix());
        }
    }

    #[test]
    fn lift_helpers() {
        // factor mult-4 through mult-2 on Z
        let zz = Presentation::free(z(), 1);
        let two =
            Morphism::new(zz.clone(), zz.clone(), Matrix::from_i64(z(), vec![vec![2]])).unwrap();
        let four =
            Morphism::new(zz.clone(), zz.clone(), Matrix::from_i64(z(), vec![vec![4]])).unwrap();
        let h = lift_through_mono(&two, &four).unwrap();
        assert_eq!(h.matrix().get(0, 0), &BigInt::from(2));
        // lift the quotient Z -> Z/2 through the epi Z -> Z/2 (identity works)
        let t = Presentation::cyclic(z(), 2);
        let q = Morphism::new(zz.clone(), t.clone(), Matrix::from_i64(z(), vec![vec![1]])).unwrap();
        let (lift, _) = lift_through_epi(&q, &q).unwrap();
        assert!(q.compose(&lift).equals(&q));
    }
}
