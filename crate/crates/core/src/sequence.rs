//! Exact sequences with n middle objects between fixed ends, and their
//! calculus: verification, zero sequences, splice and cut, and pushout /
//! pullback of sequences along a morphism at either end.

use crate::constructions::{image, pullback, pullback_mediator, pushout, pushout_mediator};
use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::presentation::Presentation;
use crate::ring::RingSpec;

/// A verified exact sequence `0 -> Y -> E_1 -> ... -> E_n -> X -> 0`.
#[derive(Clone, Debug)]
pub struct NExactSequence {
    left: Presentation,
    middles: Vec<Presentation>,
    right: Presentation,
    arrows: Vec<Morphism>,
}

impl NExactSequence {
    /// Validate a candidate chain of arrows `f_0: Y -> E_1, ..., f_n: E_n -> X`.
    /// Fails with the first violated condition.
    pub fn verify(arrows: Vec<Morphism>) -> Result<Self> {
        if arrows.len() < 2 {
            return Err(Error::Malformed(
                "a sequence needs at least one middle object (two arrows)".into(),
            ));
        }
        for w in arrows.windows(2) {
            if w[0].target() != w[1].source() {
                return Err(Error::EndMismatch("adjacent arrows do not compose".into()));
            }
        }
        if !arrows[0].is_mono() {
            return Err(Error::NotMono);
        }
        if !arrows[arrows.len() - 1].is_epi() {
            return Err(Error::NotEpi);
        }
        for i in 0..arrows.len() - 1 {
            if !crate::constructions::is_exact_at(&arrows[i], &arrows[i + 1]) {
                return Err(Error::NotExactAt(i + 1));
            }
        }
        let left = arrows[0].source().clone();
        let right = arrows[arrows.len() - 1].target().clone();
        let middles = arrows[..arrows.len() - 1]
            .iter()
            .map(|f| f.target().clone())
            .collect();
        Ok(NExactSequence {
            left,
            middles,
            right,
            arrows,
        })
    }

    pub fn left_end(&self) -> &Presentation {
        &self.left
    }

    pub fn right_end(&self) -> &Presentation {
        &self.right
    }

    pub fn middles(&self) -> &[Presentation] {
        &self.middles
    }

    pub fn arrows(&self) -> &[Morphism] {
        &self.arrows
    }

    /// Number of middle objects.
    pub fn length(&self) -> usize {
        self.middles.len()
    }

    pub fn ring(&self) -> &RingSpec {
        self.left.ring()
    }

    /// The zero element of Ext^n(X, Y) as a sequence: the direct-sum sequence
    /// for n = 1, and for n >= 2 the chain `Y = Y -> 0 -> ... -> 0 -> X = X`
    /// padded with zero modules so the length is exactly n.
    pub fn zero_sequence(n: usize, y: &Presentation, x: &Presentation) -> Result<Self> {
        y.ring().same_ring(x.ring())?;
        if n == 0 {
            return Err(Error::IndexOutOfRange(
                "sequence length must be >= 1".into(),
            ));
        }
        if n == 1 {
            let ds = crate::constructions::direct_sum(y, x)?;
            return NExactSequence::verify(vec![ds.include_left, ds.project_right]);
        }
        let ring = y.ring().clone();
        let mut middles: Vec<Presentation> = Vec::with_capacity(n);
        middles.push(y.clone());
        for _ in 0..n.saturating_sub(2) {
            middles.push(Presentation::zero(ring.clone()));
        }
        middles.push(x.clone());
        let mut arrows = Vec::with_capacity(n + 1);
        arrows.push(Morphism::identity(y));
        for k in 0..n - 1 {
            arrows.push(Morphism::zero(&middles[k], &middles[k + 1]));
        }
        arrows.push(Morphism::identity(x));
        NExactSequence::verify(arrows)
    }

    /// Splice `self` (ending at Z) with `other` (starting at Z); lengths add
    /// and the connecting arrow is the composite through Z.
    pub fn splice(&self, other: &NExactSequence) -> Result<NExactSequence> {
        if self.right != other.left {
            return Err(Error::EndMismatch(
                "splice needs identical end presentations".into(),
            ));
        }
        let mut arrows: Vec<Morphism> =
            Vec::with_capacity(self.arrows.len() + other.arrows.len() - 1);
        arrows.extend_from_slice(&self.arrows[..self.arrows.len() - 1]);
        arrows.push(other.arrows[0].compose(&self.arrows[self.arrows.len() - 1]));
        arrows.extend_from_slice(&other.arrows[1..]);
        NExactSequence::verify(arrows)
    }

    /// Cut at `1 < i <= n`: the shared object is `Z = im(f_{i-1}) = ker(f_i)`
    /// computed explicitly; `splice(cut(F, i))` reproduces `F` arrow by arrow.
    pub fn cut(&self, i: usize) -> Result<(NExactSequence, NExactSequence)> {
        let n = self.length();
        if !(1 < i && i <= n) {
            return Err(Error::IndexOutOfRange(format!(
                "cut index must satisfy 1 < i <= {n}, got {i}"
            )));
        }
        let im = image(&self.arrows[i - 1]);
        let mut left_arrows: Vec<Morphism> = self.arrows[..i - 1].to_vec();
        left_arrows.push(im.onto);
        let left = NExactSequence::verify(left_arrows)?;
        let mut right_arrows: Vec<Morphism> = vec![im.inclusion];
        right_arrows.extend_from_slice(&self.arrows[i..]);
        let right = NExactSequence::verify(right_arrows)?;
        Ok((left, right))
    }

    /// Replace the left end along an isomorphism `iso: Y' -> Y`.
    pub fn reglue_left(&self, iso: &Morphism) -> Result<NExactSequence> {
        if !iso.is_iso() {
            return Err(Error::Malformed("reglue needs an isomorphism".into()));
        }
        let mut arrows = self.arrows.clone();
        arrows[0] = arrows[0].compose(iso);
        NExactSequence::verify(arrows)
    }

    /// Replace the right end along an isomorphism `iso: X -> X'`.
    pub fn reglue_right(&self, iso: &Morphism) -> Result<NExactSequence> {
        if !iso.is_iso() {
            return Err(Error::Malformed("reglue needs an isomorphism".into()));
        }
        let mut arrows = self.arrows.clone();
        let last = arrows.len() - 1;
        arrows[last] = iso.compose(&arrows[last]);
        NExactSequence::verify(arrows)
    }
}

/// A commuting ladder between two sequences of the same length.
#[derive(Clone, Debug)]
pub struct SequenceMorphism {
    pub left: Morphism,
    pub middles: Vec<Morphism>,
    pub right: Morphism,
}

impl SequenceMorphism {
    /// Validate that all squares of the ladder commute.
    pub fn new(
        source: &NExactSequence,
        target: &NExactSequence,
        left: Morphism,
        middles: Vec<Morphism>,
        right: Morphism,
    ) -> Result<Self> {
        if source.length() != target.length() {
            return Err(Error::LengthMismatch(source.length(), target.length()));
        }
        if middles.len() != source.length() {
            return Err(Error::LengthMismatch(middles.len(), source.length()));
        }
        let mut components = vec![&left];
        components.extend(middles.iter());
        components.push(&right);
        for k in 0..source.arrows().len() {
            let lhs = components[k + 1].compose(&source.arrows()[k]);
            let rhs = target.arrows()[k].compose(components[k]);
            if !lhs.equals(&rhs) {
                return Err(Error::Malformed(format!(
                    "sequence morphism square {k} does not commute"
                )));
            }
        }
        Ok(SequenceMorphism {
            left,
            middles,
            right,
        })
    }
}

/// Pushout of a sequence along `beta: Y -> B`: the left end becomes `B`, the
/// first middle becomes the pushout, everything else is unchanged. Returns
/// the new sequence together with the canonical ladder `F -> beta F`.
pub fn pushout_sequence(
    beta: &Morphism,
    f: &NExactSequence,
) -> Result<(NExactSequence, SequenceMorphism)> {
    if beta.source() != f.left_end() {
        return Err(Error::EndMismatch(
            "pushout_sequence: beta must start at the left end".into(),
        ));
    }
    let po = pushout(&f.arrows()[0], beta)?;
    let next_target = f.arrows()[1].target().clone();
    let mediator = pushout_mediator(
        &po,
        &f.arrows()[1],
        &Morphism::zero(beta.target(), &next_target),
    )?;
    let mut arrows = vec![po.from_beta_target.clone(), mediator];
    arrows.extend_from_slice(&f.arrows()[2..]);
    let pushed = NExactSequence::verify(arrows)?;
    let mut ladder_middles = vec![po.from_alpha_target.clone()];
    for m in &f.middles()[1..] {
        ladder_middles.push(Morphism::identity(m));
    }
    let ladder = SequenceMorphism::new(
        f,
        &pushed,
        beta.clone(),
        ladder_middles,
        Morphism::identity(f.right_end()),
    )?;
    Ok((pushed, ladder))
}

/// Pullback of a sequence along `alpha: A -> X`: the right end becomes `A`,
/// the last middle becomes the pullback. Returns the new sequence together
/// with the canonical ladder `F alpha -> F`.
pub fn pullback_sequence(
    f: &NExactSequence,
    alpha: &Morphism,
) -> Result<(NExactSequence, SequenceMorphism)> {
    if alpha.target() != f.right_end() {
        return Err(Error::EndMismatch(
            "pullback_sequence: alpha must land in the right end".into(),
        ));
    }
    let n = f.length();
    let pb = pullback(alpha, &f.arrows()[n])?;
    let prev_source = f.arrows()[n - 1].source().clone();
    let mediator = pullback_mediator(
        &pb,
        &f.arrows()[n - 1],
        &Morphism::zero(&prev_source, alpha.source()),
    )?;
    let mut arrows: Vec<Morphism> = f.arrows()[..n - 1].to_vec();
    arrows.push(mediator);
    arrows.push(pb.to_alpha_source.clone());
    let pulled = NExactSequence::verify(arrows)?;
    let mut ladder_middles: Vec<Morphism> = f.middles()[..n - 1]
        .iter()
        .map(Morphism::identity)
        .collect();
    ladder_middles.push(pb.to_beta_source.clone());
    let ladder = SequenceMorphism::new(
        &pulled,
        f,
        Morphism::identity(f.left_end()),
        ladder_middles,
        alpha.clone(),
    )?;
    Ok((pulled, ladder))
}

/// Convenience: the short exact sequence `0 -> Y -> E -> X -> 0`.
pub fn short_exact(iota: Morphism, pi: Morphism) -> Result<NExactSequence> {
    NExactSequence::verify(vec![iota, pi])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::Matrix;

    fn z() -> RingSpec {
        RingSpec::Integers
    }

    fn z4() -> RingSpec {
        RingSpec::integers_mod(4).unwrap()
    }

    fn mult2_z2_sequence() -> NExactSequence {
        // 0 -> Z --2--> Z -> Z/2 -> 0
        let zz = Presentation::free(z(), 1);
        let x = Presentation::cyclic(z(), 2);
        let f0 =
            Morphism::new(zz.clone(), zz.clone(), Matrix::from_i64(z(), vec![vec![2]])).unwrap();
        let f1 = Morphism::new(zz.clone(), x, Matrix::from_i64(z(), vec![vec![1]])).unwrap();
        NExactSequence::verify(vec![f0, f1]).unwrap()
    }

    fn z4_extension() -> NExactSequence {
        // 0 -> Z/2 --2--> Z/4 -> Z/2 -> 0 over Z/4
        let y = Presentation::cyclic(z4(), 2);
        let e = Presentation::free(z4(), 1);
        let x = Presentation::cyclic(z4(), 2);
        let f0 = Morphism::new(y, e.clone(), Matrix::from_i64(z4(), vec![vec![2]])).unwrap();
        let f1 = Morphism::new(e, x, Matrix::from_i64(z4(), vec![vec![1]])).unwrap();
        NExactSequence::verify(vec![f0, f1]).unwrap()
    }

    #[test]
    fn direct_sum_sequence_is_valid() {
        let y = Presentation::cyclic(z(), 2);
        let x = Presentation::cyclic(z(), 3);
        let s = NExactSequence::zero_sequence(1, &y, &x).unwrap();
        assert_eq!(s.length(), 1);
        assert_eq!(s.middles()[0].canonical_decomposition().to_string(), "Z/6");
    }

    #[test]
    fn mult2_sequence_is_valid() {
        let s = mult2_z2_sequence();
        assert_eq!(s.length(), 1);
    }

    #[test]
    fn wrong_cokernel_is_rejected() {
        // 0 -> Z --2--> Z -> Z/4 -> 0 is not exact
        let zz = Presentation::free(z(), 1);
        let x = Presentation::cyclic(z(), 4);
        let f0 =
            Morphism::new(zz.clone(), zz.clone(), Matrix::from_i64(z(), vec![vec![2]])).unwrap();
        let f1 = Morphism::new(zz.clone(), x, Matrix::from_i64(z(), vec![vec![1]])).unwrap();
        let err = NExactSequence::verify(vec![f0, f1]);
        assert!(matches!(err, Err(Error::NotExactAt(1))), "{err:?}");
    }

    #[test]
    fn non_mono_rejected() {
        let x = Presentation::cyclic(z(), 2);
        let zz = Presentation::free(z(), 1);
        let f0 =
            Morphism::new(zz.clone(), x.clone(), Matrix::from_i64(z(), vec![vec![1]])).unwrap();
        let f1 = Morphism::new(x.clone(), x.clone(), Matrix::from_i64(z(), vec![vec![0]])).unwrap();
        assert!(matches!(
            NExactSequence::verify(vec![f0, f1]),
            Err(Error::NotMono)
        ));
    }

    #[test]
    fn non_epi_rejected() {
        // 0 -> 0 -> Z --2--> Z -> 0 fails at the right end
        let zero = Presentation::zero(z());
        let zz = Presentation::free(z(), 1);
        let f0 = Morphism::zero(&zero, &zz);
        let f1 = Morphism::new(zz.clone(), zz.clone(), Matrix::from_i64(z(), vec![vec![2]]))
            .unwrap();
        assert!(matches!(
            NExactSequence::verify(vec![f0, f1]),
            Err(Error::NotEpi)
        ));
    }

    #[test]
    fn zero_sequence_shapes() {
        let y = Presentation::cyclic(z4(), 2);
        let x = Presentation::free(z4(), 1);
        let s2 = NExactSequence::zero_sequence(2, &y, &x).unwrap();
        assert_eq!(s2.length(), 2);
        assert_eq!(s2.middles()[0], y);
        assert_eq!(s2.middles()[1], x);
        assert!(s2.arrows()[1].is_zero_morphism());
        let s4 = NExactSequence::zero_sequence(4, &y, &x).unwrap();
        assert_eq!(s4.length(), 4);
        assert!(s4.middles()[1].is_zero_module());
        assert!(s4.middles()[2].is_zero_module());
    }

    #[test]
    fn splice_lengths_add() {
        let e = mult2_z2_sequence(); // ends at Z/2
        let f = {
            // 0 -> Z/2 -> Z/2 ⊕ Z -> Z -> 0 ... easier: zero_sequence(1, Z/2, Z)
            let y = Presentation::cyclic(z(), 2);
            let x = Presentation::free(z(), 1);
            NExactSequence::zero_sequence(1, &y, &x).unwrap()
        };
        // e ends at Z/2, f starts at Z/2
        let s = e.splice(&f).unwrap();
        assert_eq!(s.length(), 2);
        assert_eq!(s.left_end(), e.left_end());
        assert_eq!(s.right_end(), f.right_end());
    }

    #[test]
    fn splice_end_mismatch() {
        let e = mult2_z2_sequence();
        let f = mult2_z2_sequence(); // starts at Z, e ends at Z/2
        assert!(matches!(e.splice(&f), Err(Error::EndMismatch(_))));
    }

    #[test]
    fn cut_then_splice_reproduces_arrows() {
        let e = mult2_z2_sequence();
        let f =
            NExactSequence::zero_sequence(1, e.right_end(), &Presentation::free(z(), 1)).unwrap();
        let s = e.splice(&f).unwrap();
        let (l, r) = s.cut(2).unwrap();
        let resliced = l.splice(&r).unwrap();
        assert_eq!(resliced.arrows().len(), s.arrows().len());
        for (a, b) in resliced.arrows().iter().zip(s.arrows()) {
            assert_eq!(a.matrix(), b.matrix(), "arrow-by-arrow reproduction");
            assert_eq!(a.source(), b.source());
            assert_eq!(a.target(), b.target());
        }
    }

    #[test]
    fn cut_shapes_on_two_exact() {
        let y = Presentation::cyclic(z4(), 2);
        let x = Presentation::cyclic(z4(), 2);
        let s = NExactSequence::zero_sequence(2, &y, &x).unwrap();
        let (l, r) = s.cut(2).unwrap();
        assert_eq!(l.length(), 1);
        assert_eq!(r.length(), 1);
        assert_eq!(l.left_end(), s.left_end());
        assert_eq!(r.right_end(), s.right_end());
        assert_eq!(l.right_end(), r.left_end());
    }

    #[test]
    fn cut_index_validation() {
        let s = {
            let y = Presentation::cyclic(z4(), 2);
            NExactSequence::zero_sequence(3, &y, &y).unwrap()
        };
        assert!(s.cut(1).is_err());
        assert!(s.cut(4).is_err());
        assert!(s.cut(2).is_ok());
        assert!(s.cut(3).is_ok());
    }

    #[test]
    fn pushout_sequence_along_identity() {
        let s = z4_extension();
        let beta = Morphism::identity(s.left_end());
        let (pushed, ladder) = pushout_sequence(&beta, &s).unwrap();
        assert_eq!(pushed.length(), 1);
        assert!(ladder.middles[0].is_iso());
        assert_eq!(
            pushed.middles()[0].canonical_decomposition(),
            s.middles()[0].canonical_decomposition()
        );
    }

    #[test]
    fn pullback_sequence_along_identity() {
        let s = z4_extension();
        let alpha = Morphism::identity(s.right_end());
        let (pulled, ladder) = pullback_sequence(&s, &alpha).unwrap();
        assert_eq!(pulled.length(), 1);
        assert!(ladder.middles[0].is_iso());
    }

    #[test]
    fn pushout_sequence_on_longer_chain() {
        let e = mult2_z2_sequence();
        let f =
            NExactSequence::zero_sequence(1, e.right_end(), &Presentation::cyclic(z(), 3)).unwrap();
        let s = e.splice(&f).unwrap(); // 2-exact, left end Z
        let b = Presentation::cyclic(z(), 5);
        let beta = Morphism::new(
            s.left_end().clone(),
            b,
            Matrix::from_i64(z(), vec![vec![1]]),
        )
        .unwrap();
        let (pushed, _ladder) = pushout_sequence(&beta, &s).unwrap();
        assert_eq!(pushed.length(), 2);
        assert_eq!(
            pushed.left_end().canonical_decomposition().to_string(),
            "Z/5"
        );
        assert_eq!(pushed.right_end(), s.right_end());
    }

    #[test]
    fn three_lemma_middle_iso() {
        // a ladder between short exact sequences with identity ends has an
        // isomorphism in the middle
        let s = z4_extension();
        let t = z4_extension();
        let mid = Morphism::identity(&s.middles()[0]);
        let ladder = SequenceMorphism::new(
            &s,
            &t,
            Morphism::identity(s.left_end()),
            vec![mid],
            Morphism::identity(s.right_end()),
        )
        .unwrap();
        assert!(ladder.middles[0].is_iso());
    }

    #[test]
    fn sequence_morphism_rejects_non_commuting() {
        let s = z4_extension();
        let bad_mid = Morphism::zero(&s.middles()[0], &s.middles()[0]);
        let err = SequenceMorphism::new(
            &s,
            &s,
            Morphism::identity(s.left_end()),
            vec![bad_mid],
            Morphism::identity(s.right_end()),
        );
        assert!(err.is_err());
    }

    #[test]
    fn reglue_left_along_iso() {
        let s = z4_extension();
        // Z/2 presented with a redundant generator, isomorphic to the left end
        let y2 = Presentation::new(
            z4(),
            2,
            Matrix::from_i64(z4(), vec![vec![2, 0], vec![0, 1]]),
        )
        .unwrap();
        let iso = Morphism::new(
            y2.clone(),
            s.left_end().clone(),
            Matrix::from_i64(z4(), vec![vec![1, 0]]),
        )
        .unwrap();
        assert!(iso.is_iso());
        let reglued = s.reglue_left(&iso).unwrap();
        assert_eq!(reglued.left_end(), &y2);
        assert_eq!(reglued.right_end(), s.right_end());
    }
}
