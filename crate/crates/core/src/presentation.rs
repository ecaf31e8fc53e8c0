//! Finitely presented modules.
//!
//! A [`Presentation`] is `R^g` modulo the row span of a relations matrix.
//! Over `IntegersMod(n)` all computations lift to the integers by adjoining
//! the rows `n*I`, so the Smith-normal-form engine decides everything.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::RingSpec;
use crate::snf::{row_hermite_basis, smith_normal_form};
use crate::solve::LinearSystem;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    ring: RingSpec,
    generators: usize,
    relations: Matrix,
}

impl Presentation {
    pub fn new(ring: RingSpec, generators: usize, relations: Matrix) -> Result<Self> {
        if relations.cols() != generators {
            return Err(Error::ShapeMismatch(format!(
                "relations have {} columns for {} generators",
                relations.cols(),
                generators
            )));
        }
        ring.same_ring(relations.ring())?;
        Ok(Presentation {
            ring,
            generators,
            relations,
        })
    }

    /// The zero module.
    pub fn zero(ring: RingSpec) -> Self {
        Presentation {
            relations: Matrix::zero(ring.clone(), 0, 0),
            ring,
            generators: 0,
        }
    }

    /// Free module on `g` generators (over Z/n: free means no relation rows).
    pub fn free(ring: RingSpec, g: usize) -> Self {
        Presentation {
            relations: Matrix::zero(ring.clone(), 0, g),
            ring,
            generators: g,
        }
    }

    /// Cyclic module `R / (d)`.
    pub fn cyclic(ring: RingSpec, d: impl Into<BigInt>) -> Self {
        let relations = Matrix::new(ring.clone(), 1, 1, vec![d.into()]);
        Presentation {
            ring,
            generators: 1,
            relations,
        }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relations(&self) -> &Matrix {
        &self.relations
    }

    /// Relations lifted to the integers; over Z/n the rows `n*I` are adjoined
    /// so the integer row span presents the same abelian group.
    pub fn lifted_relations(&self) -> Matrix {
        match self.ring.modulus() {
            None => self.relations.lift(),
            Some(n) => self.relations.lift().vstack(&Matrix::scalar(
                RingSpec::Integers,
                self.generators,
                n,
            )),
        }
    }

    /// Lifted relation vectors as columns (the lattice of elements that are
    /// zero in the module).
    pub fn relation_columns(&self) -> Matrix {
        self.lifted_relations().transpose()
    }

    /// Is the element with the given generator coordinates zero?
    pub fn element_is_zero(&self, coords: &Matrix) -> bool {
        assert_eq!(coords.cols(), 1);
        assert_eq!(coords.rows(), self.generators);
        LinearSystem::new(&self.relation_columns()).contains(&coords.lift())
    }

    pub fn elements_equal(&self, a: &Matrix, b: &Matrix) -> bool {
        self.element_is_zero(&a.sub(b))
    }

    pub fn canonical_decomposition(&self) -> InvariantFactors {
        CanonicalQuotient::new(self).invariant_factors()
    }

    pub fn is_zero_module(&self) -> bool {
        self.canonical_decomposition().is_trivial()
    }

    /// Number of elements, when finite.
    pub fn order(&self) -> Option<BigInt> {
        self.canonical_decomposition().order()
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "<{} gens, {} relations over {}>",
            self.generators,
            self.relations.rows(),
            self.ring
        )
    }
}

/// Canonical relation rows for a given relation lattice: the Hermite basis of
/// the lifted row span, reduced back into the ring, zero rows dropped.
pub fn canonical_relations(ring: &RingSpec, rows: &Matrix) -> Matrix {
    let lifted = match ring.modulus() {
        None => rows.lift(),
        Some(n) => rows
            .lift()
            .vstack(&Matrix::scalar(RingSpec::Integers, rows.cols(), n)),
    };
    let h = row_hermite_basis(&lifted).with_ring(ring.clone());
    let keep: Vec<usize> = (0..h.rows())
        .filter(|&i| (0..h.cols()).any(|j| !h.get(i, j).is_zero()))
        .collect();
    h.select_rows(&keep)
}

/// The invariant-factor decomposition `R^free_rank ⊕ R/d1 ⊕ R/d2 ⊕ ...` with
/// `d1 | d2 | ...`, each `di >= 2`. Complete isomorphism invariant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantFactors {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl InvariantFactors {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        let mut o = BigInt::one();
        for d in &self.torsion {
            o *= d;
        }
        Some(o)
    }
}

impl fmt::Display for InvariantFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            k => parts.push(format!("Z^{k}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Change of coordinates diagonalizing a presentation: `u * x` maps
/// generator coordinates to coordinates in `⊕ Z/d_i` (`d_i = 0` meaning a
/// free summand, `d_i = 1` a trivial one).
#[derive(Clone, Debug)]
pub struct CanonicalQuotient {
    ring: RingSpec,
    generators: usize,
    pub u: Matrix,
    pub u_inv: Matrix,
    /// one factor per generator coordinate, in SNF order
    pub factors: Vec<BigInt>,
    /// coordinate positions with factor != 1 (the surviving generators)
    pub kept: Vec<usize>,
}

impl CanonicalQuotient {
    pub fn new(p: &Presentation) -> Self {
        let rc = p.relation_columns();
        let snf = smith_normal_form(&rc);
        let g = p.generators();
        let k = g.min(rc.cols());
        let mut factors = Vec::with_capacity(g);
        for i in 0..g {
            if i < k {
                factors.push(snf.d.get(i, i).clone());
            } else {
                factors.push(BigInt::zero());
            }
        }
        let kept: Vec<usize> = (0..g).filter(|&i| !factors[i].is_one()).collect();
        let u_inv = LinearSystem::new(&snf.u)
            .solve_matrix(&Matrix::identity(RingSpec::Integers, g))
            .expect("unimodular matrices are invertible over Z");
        CanonicalQuotient {
            ring: p.ring().clone(),
            generators: g,
            u: snf.u,
            u_inv,
            factors,
            kept,
        }
    }

    pub fn invariant_factors(&self) -> InvariantFactors {
        let torsion: Vec<BigInt> = self
            .factors
            .iter()
            .filter(|d| **d >= BigInt::from(2))
            .cloned()
            .collect();
        let free_rank = self.factors.iter().filter(|d| d.is_zero()).count();
        InvariantFactors { free_rank, torsion }
    }

    /// Minimal presentation on the surviving generators: relation `d*e_p`
    /// for each torsion factor (factors equal to the modulus are implicit
    /// over Z/n and get no row).
    pub fn minimal_presentation(&self) -> Presentation {
        let k = self.kept.len();
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for (p, &i) in self.kept.iter().enumerate() {
            let d = &self.factors[i];
            if d.is_zero() {
                continue;
            }
            if let Some(n) = self.ring.modulus() {
                if d == n {
                    continue;
                }
            }
            let mut row = vec![BigInt::zero(); k];
            row[p] = d.clone();
            rows.push(row);
        }
        let relations = if rows.is_empty() {
            Matrix::zero(self.ring.clone(), 0, k)
        } else {
            Matrix::from_rows(self.ring.clone(), rows)
        };
        Presentation::new(self.ring.clone(), k, relations).expect("shape by construction")
    }

    /// Map full generator coordinates to canonical coordinates on the
    /// surviving generators, reduced mod the factor.
    pub fn reduce_coords(&self, full: &Matrix) -> Matrix {
        assert_eq!(full.rows(), self.generators);
        assert_eq!(full.cols(), 1);
        let diag = self.u.mul(&full.lift());
        let mut out = Matrix::zero(self.ring.clone(), self.kept.len(), 1);
        for (p, &i) in self.kept.iter().enumerate() {
            let d = &self.factors[i];
            let v = diag.get(i, 0);
            let v = if d.is_zero() {
                v.clone()
            } else {
                v.mod_floor(d)
            };
            out.set(p, 0, v);
        }
        out
    }

    /// Inverse of [`CanonicalQuotient::reduce_coords`] on representatives.
    pub fn expand_coords(&self, reduced: &Matrix) -> Matrix {
        assert_eq!(reduced.rows(), self.kept.len());
        assert_eq!(reduced.cols(), 1);
        let mut diag = Matrix::zero(RingSpec::Integers, self.generators, 1);
        for (p, &i) in self.kept.iter().enumerate() {
            diag.set(i, 0, reduced.get(p, 0).clone());
        }
        self.u_inv.mul(&diag).with_ring(self.ring.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> RingSpec {
        RingSpec::Integers
    }

    fn z4() -> RingSpec {
        RingSpec::integers_mod(4).unwrap()
    }

    fn factors(free: usize, torsion: Vec<i64>) -> InvariantFactors {
        InvariantFactors {
            free_rank: free,
            torsion: torsion.into_iter().map(BigInt::from).collect(),
        }
    }

    #[test]
    fn diag_2_3_gives_z6() {
        let p =
            Presentation::new(z(), 2, Matrix::from_i64(z(), vec![vec![2, 0], vec![0, 3]])).unwrap();
        assert_eq!(p.canonical_decomposition(), factors(0, vec![6]));
    }

    #[test]
    fn free_module_of_rank_3() {
        let p = Presentation::free(z(), 3);
        assert_eq!(p.canonical_decomposition(), factors(3, vec![]));
        assert_eq!(p.order(), None);
    }

    #[test]
    fn z2_over_z4() {
        let p = Presentation::cyclic(z4(), 2);
        assert_eq!(p.canonical_decomposition(), factors(0, vec![2]));
        // enumerate the cokernel: generator coordinates 0..4, exactly two
        // distinct classes (0 and 1), since 2 and 3 collapse to 0 and 1
        let mut classes = 0;
        for v in 0..4i64 {
            let coords = Matrix::from_i64(z4(), vec![vec![v]]);
            let is_new =
                (0..v).all(|w| !p.elements_equal(&coords, &Matrix::from_i64(z4(), vec![vec![w]])));
            if is_new {
                classes += 1;
            }
        }
        assert_eq!(classes, 2);
        assert_eq!(p.order(), Some(BigInt::from(2)));
    }

    #[test]
    fn ring_as_module_over_zn() {
        let p = Presentation::free(z4(), 1);
        assert_eq!(p.canonical_decomposition(), factors(0, vec![4]));
        assert_eq!(p.order(), Some(BigInt::from(4)));
    }

    #[test]
    fn zero_module() {
        let p = Presentation::zero(z());
        assert!(p.is_zero_module());
        assert_eq!(p.order(), Some(BigInt::one()));
        assert_eq!(p.canonical_decomposition().to_string(), "0");
    }

    #[test]
    fn element_zero_test() {
        let p = Presentation::cyclic(z(), 6);
        let six = Matrix::from_i64(z(), vec![vec![6]]);
        let four = Matrix::from_i64(z(), vec![vec![4]]);
        assert!(p.element_is_zero(&six));
        assert!(!p.element_is_zero(&four));
    }

    #[test]
    fn display_forms() {
        assert_eq!(factors(0, vec![2]).to_string(), "Z/2");
        assert_eq!(factors(1, vec![]).to_string(), "Z");
        assert_eq!(factors(2, vec![2, 4]).to_string(), "Z^2 + Z/2 + Z/4");
    }

    #[test]
    fn canonical_relations_tidy() {
        // redundant and unordered rows collapse to a hermite basis
        let rows = Matrix::from_i64(z(), vec![vec![4, 0], vec![2, 0], vec![6, 0]]);
        let c = canonical_relations(&z(), &rows);
        assert_eq!(c, Matrix::from_i64(z(), vec![vec![2, 0]]));
        // over Z/4 the lift rows are implicit and vanish again
        let rows4 = Matrix::from_i64(z4(), vec![vec![2]]);
        let c4 = canonical_relations(&z4(), &rows4);
        assert_eq!(c4, Matrix::from_i64(z4(), vec![vec![2]]));
        // a free Z/4 generator needs no rows at all
        let none = canonical_relations(&z4(), &Matrix::zero(z4(), 0, 1));
        assert_eq!(none.rows(), 0);
    }

    #[test]
    fn reduce_expand_round_trip() {
        let p =
            Presentation::new(z(), 2, Matrix::from_i64(z(), vec![vec![2, 0], vec![0, 3]])).unwrap();
        let cq = CanonicalQuotient::new(&p);
        assert_eq!(cq.invariant_factors(), factors(0, vec![6]));
        for a in -3..3i64 {
            for b in -3..3i64 {
                let full = Matrix::from_i64(z(), vec![vec![a], vec![b]]);
                let red = cq.reduce_coords(&full);
                let back = cq.expand_coords(&red);
                assert!(p.elements_equal(&full, &back), "a={a} b={b}");
            }
        }
        // canonical coordinates decide equality on the nose
        let x = Matrix::from_i64(z(), vec![vec![1], vec![1]]);
        let y = Matrix::from_i64(z(), vec![vec![3], vec![4]]);
        assert_eq!(
            p.elements_equal(&x, &y),
            cq.reduce_coords(&x) == cq.reduce_coords(&y)
        );
    }

    #[test]
    fn minimal_presentation_shapes() {
        let p = Presentation::new(
            z(),
            3,
            Matrix::from_i64(z(), vec![vec![2, 0, 0], vec![0, 1, 0]]),
        )
        .unwrap();
        let cq = CanonicalQuotient::new(&p);
        let m = cq.minimal_presentation();
        // Z/2 + Z: two surviving generators, one relation row
        assert_eq!(m.generators(), 2);
        assert_eq!(m.relations().rows(), 1);
        assert_eq!(m.canonical_decomposition(), p.canonical_decomposition());
    }
}
