//! Seeded random generation of presentations, morphisms and exact sequences
//! for property tests and the gallery.
//!
//! Sizes follow the desk-scale defaults: at most 4 generators and 4
//! relations, entries in [-5, 5] over Z and [0, n) over Z/n. Everything is
//! driven by a caller-provided ChaCha RNG so runs are reproducible from a
//! seed flag.

use fpext_core::{
    ext_module, realize_class, Matrix, Morphism, NExactSequence, Presentation, RingSpec,
};
use num_bigint::BigInt;
use rand::Rng;

#[derive(Clone, Copy, Debug)]
pub struct GenConfig {
    pub max_gens: usize,
    pub max_rels: usize,
    pub entry_bound: i64,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            max_gens: 4,
            max_rels: 4,
            entry_bound: 5,
        }
    }
}

pub fn random_modulus(rng: &mut impl Rng) -> u32 {
    *[2u32, 3, 4, 5, 6, 8, 9, 12]
        .get(rng.gen_range(0..8))
        .unwrap()
}

pub fn random_ring(rng: &mut impl Rng) -> RingSpec {
    if rng.gen_bool(0.5) {
        RingSpec::Integers
    } else {
        RingSpec::integers_mod(random_modulus(rng)).unwrap()
    }
}

fn random_entry(rng: &mut impl Rng, ring: &RingSpec, bound: i64) -> BigInt {
    match ring.modulus() {
        None => BigInt::from(rng.gen_range(-bound..=bound)),
        Some(n) => {
            let n: i64 = n.try_into().unwrap_or(i64::MAX);
            BigInt::from(rng.gen_range(0..n))
        }
    }
}

pub fn random_presentation(rng: &mut impl Rng, ring: &RingSpec, cfg: &GenConfig) -> Presentation {
    let g = rng.gen_range(1..=cfg.max_gens);
    let r = rng.gen_range(0..=cfg.max_rels);
    let entries: Vec<BigInt> = (0..r * g)
        .map(|_| random_entry(rng, ring, cfg.entry_bound))
        .collect();
    let relations = Matrix::new(ring.clone(), r, g, entries);
    Presentation::new(ring.clone(), g, relations).expect("shape by construction")
}

/// A presentation with finitely many elements (always true over Z/n; over Z
/// a diagonal row per generator is superimposed to kill the free part).
pub fn random_finite_presentation(
    rng: &mut impl Rng,
    ring: &RingSpec,
    cfg: &GenConfig,
) -> Presentation {
    let p = random_presentation(rng, ring, cfg);
    if p.order().is_some() {
        return p;
    }
    let g = p.generators();
    let mut diag = Matrix::zero(ring.clone(), g, g);
    for i in 0..g {
        diag.set(i, i, BigInt::from(rng.gen_range(2..=6)));
    }
    let relations = p.relations().vstack(&diag);
    Presentation::new(ring.clone(), g, relations).expect("shape by construction")
}

/// A uniformly seeded element of `Hom(m, n)`, as a morphism.
pub fn random_morphism(rng: &mut impl Rng, m: &Presentation, n: &Presentation) -> Morphism {
    let h = fpext_core::hom_module(m, n).expect("same ring");
    let gens = h.presentation().generators();
    let coords = Matrix::new(
        m.ring().clone(),
        gens,
        1,
        (0..gens)
            .map(|_| BigInt::from(rng.gen_range(0..=24i64)))
            .collect(),
    );
    h.morphism_from_coords(&coords)
}

/// A short exact sequence `0 -> y -> E -> x -> 0` with a uniformly seeded
/// class: realize a random element of `Ext^1(x, y)`.
pub fn random_short_exact(
    rng: &mut impl Rng,
    y: &Presentation,
    x: &Presentation,
) -> NExactSequence {
    let m = ext_module(1, x, y).expect("same ring");
    let gens = m.value().generators();
    let coords = Matrix::new(
        x.ring().clone(),
        gens,
        1,
        (0..gens)
            .map(|_| BigInt::from(rng.gen_range(0..=24i64)))
            .collect(),
    );
    let class = m.class_from_coords(&coords);
    realize_class(&class).expect("realization of a degree-1 class")
}

/// An n-exact sequence assembled by splicing random short ones along a
/// random chain of modules.
pub fn random_n_exact(
    rng: &mut impl Rng,
    ring: &RingSpec,
    n: usize,
    cfg: &GenConfig,
) -> NExactSequence {
    assert!(n >= 1);
    let chain: Vec<Presentation> = (0..=n)
        .map(|_| random_presentation(rng, ring, cfg))
        .collect();
    let mut seq = random_short_exact(rng, &chain[0], &chain[1]);
    for link in chain.iter().skip(2) {
        let next = random_short_exact(rng, seq.right_end(), link);
        seq = seq.splice(&next).expect("ends match by construction");
    }
    seq
}
