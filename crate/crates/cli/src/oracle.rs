//! The independent brute-force oracle: exhaustive element enumeration for
//! exactness, morphism counting by generator-image filtering, Ext^1 counting
//! by enumerating candidate middles up to equivalence, and splice/cut
//! coherence, everything recomputed without the engine's lifting machinery.

use fpext_core::{
    are_equivalent, ext_module, hom_module, is_zero_class, lift_through_mono, CanonicalQuotient,
    Matrix, Morphism, NExactSequence, Presentation,
};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeSet;

pub const DEFAULT_BOUND: usize = 10_000;

#[derive(Debug, thiserror::Error)]
pub enum OracleError {
    #[error("size bound exceeded: needed {needed}, bound {bound}")]
    SizeBound { needed: String, bound: usize },
    #[error("module is not finite")]
    NotFinite,
    #[error(transparent)]
    Core(#[from] fpext_core::Error),
}

pub type OracleResult<T> = std::result::Result<T, OracleError>;

/// A finite module with all its elements listed explicitly.
pub struct EnumeratedModule {
    pub presentation: Presentation,
    cq: CanonicalQuotient,
    factors: Vec<BigInt>,
    elements: Vec<Matrix>,
}

impl EnumeratedModule {
    pub fn new(p: &Presentation, bound: usize) -> OracleResult<Self> {
        let cq = CanonicalQuotient::new(p);
        let mut factors = Vec::new();
        let mut count = BigInt::from(1);
        for &i in &cq.kept {
            let d = cq.factors[i].clone();
            if d.is_zero() {
                return Err(OracleError::NotFinite);
            }
            count *= &d;
            factors.push(d);
        }
        let count: usize = count
            .clone()
            .try_into()
            .map_err(|_| OracleError::SizeBound {
                needed: count.to_string(),
                bound,
            })?;
        if count > bound {
            return Err(OracleError::SizeBound {
                needed: count.to_string(),
                bound,
            });
        }
        let mut elements = Vec::with_capacity(count);
        let mut digits = vec![BigInt::zero(); factors.len()];
        loop {
            let reduced = Matrix::new(p.ring().clone(), factors.len(), 1, digits.clone());
            elements.push(cq.expand_coords(&reduced));
            let mut k = 0;
            while k < digits.len() {
                digits[k] += 1;
                if digits[k] < factors[k] {
                    break;
                }
                digits[k] = BigInt::zero();
                k += 1;
            }
            if k == digits.len() {
                break;
            }
        }
        debug_assert_eq!(elements.len(), count);
        Ok(EnumeratedModule {
            presentation: p.clone(),
            cq,
            factors,
            elements,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements as generator-coordinate columns.
    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    /// Canonical key of an element given by generator coordinates.
    pub fn key(&self, coords: &Matrix) -> Vec<BigInt> {
        let reduced = self.cq.reduce_coords(coords);
        (0..reduced.rows())
            .map(|i| reduced.get(i, 0).clone())
            .collect()
    }

    pub fn zero_key(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.factors.len()]
    }

    pub fn all_keys(&self) -> BTreeSet<Vec<BigInt>> {
        self.elements.iter().map(|e| self.key(e)).collect()
    }
}

fn checked_pow(base: usize, exp: usize, bound: usize) -> OracleResult<usize> {
    let mut acc: usize = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base).ok_or(OracleError::SizeBound {
            needed: format!("{base}^{exp}"),
            bound,
        })?;
        if acc > bound {
            return Err(OracleError::SizeBound {
                needed: format!("{base}^{exp}"),
                bound,
            });
        }
    }
    Ok(acc)
}

/// All additive maps `src -> tgt` respecting the relations, listed as
/// matrices; distinct matrices in the list are distinct morphisms.
pub fn enumerate_morphisms(
    src: &Presentation,
    tgt: &EnumeratedModule,
    bound: usize,
) -> OracleResult<Vec<Matrix>> {
    let g = src.generators();
    let total = checked_pow(tgt.len(), g, bound)?;
    let ring = src.ring().clone();
    let mut out = Vec::new();
    let mut idx = vec![0usize; g];
    let zero = tgt.zero_key();
    for _ in 0..total.max(1) {
        // build the candidate matrix from the chosen generator images
        let tgt_gens = tgt.presentation.generators();
        let mut m = Matrix::zero(ring.clone(), tgt_gens, g);
        for (j, &e) in idx.iter().enumerate() {
            let col = &tgt.elements[e];
            for i in 0..tgt_gens {
                m.set(i, j, col.get(i, 0).clone());
            }
        }
        let rel = src.relations();
        let ok = (0..rel.rows()).all(|r| {
            let row = Matrix::from_rows(ring.clone(), vec![rel.row_vec(r)]).transpose();
            tgt.key(&m.mul(&row)) == zero
        });
        if ok {
            out.push(m);
        }
        let mut k = 0;
        while k < idx.len() {
            idx[k] += 1;
            if idx[k] < tgt.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            break;
        }
    }
    Ok(out)
}

fn image_keys(f: &Matrix, src: &EnumeratedModule, tgt: &EnumeratedModule) -> BTreeSet<Vec<BigInt>> {
    src.elements().iter().map(|e| tgt.key(&f.mul(e))).collect()
}

fn kernel_keys(
    f: &Matrix,
    src: &EnumeratedModule,
    tgt: &EnumeratedModule,
) -> BTreeSet<Vec<BigInt>> {
    let zero = tgt.zero_key();
    src.elements()
        .iter()
        .filter(|e| tgt.key(&f.mul(e)) == zero)
        .map(|e| src.key(e))
        .collect()
}

/// Verify exactness of a sequence by exhaustive element chasing.
pub fn check_exactness(seq: &NExactSequence, bound: usize) -> OracleResult<bool> {
    let mut mods = vec![seq.left_end().clone()];
    mods.extend_from_slice(seq.middles());
    mods.push(seq.right_end().clone());
    let enums: Vec<EnumeratedModule> = mods
        .iter()
        .map(|m| EnumeratedModule::new(m, bound))
        .collect::<OracleResult<_>>()?;
    // monomorphism at the left
    let ker0 = kernel_keys(seq.arrows()[0].matrix(), &enums[0], &enums[1]);
    if ker0.len() != 1 {
        return Ok(false);
    }
    // epimorphism at the right
    let n = seq.arrows().len();
    let im_last = image_keys(seq.arrows()[n - 1].matrix(), &enums[n - 1], &enums[n]);
    if im_last.len() != enums[n].len() {
        return Ok(false);
    }
    // image = kernel at every middle node
    for i in 0..n - 1 {
        let im = image_keys(seq.arrows()[i].matrix(), &enums[i], &enums[i + 1]);
        let ker = kernel_keys(seq.arrows()[i + 1].matrix(), &enums[i + 1], &enums[i + 2]);
        if im != ker {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `|Hom(m, n)|` by exhaustive generator-image filtering.
pub fn hom_count(m: &Presentation, n: &Presentation, bound: usize) -> OracleResult<BigInt> {
    let tgt = EnumeratedModule::new(n, bound)?;
    let morphisms = enumerate_morphisms(m, &tgt, bound)?;
    Ok(BigInt::from(morphisms.len()))
}

/// Ascending divisor chains `d1 | d2 | ...` with product `n`, each `di >= 2`
/// and (over Z/m) each `di | m`.
fn divisor_chains(n: u128, min: u128, modulus: Option<u128>) -> Vec<Vec<u128>> {
    if n == 1 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut d = min.max(2);
    while d <= n {
        if n.is_multiple_of(d)
            && d.is_multiple_of(min)
            && modulus.is_none_or(|m| m.is_multiple_of(d))
        {
            for mut rest in divisor_chains(n / d, d, modulus) {
                let mut chain = vec![d];
                chain.append(&mut rest);
                out.push(chain);
            }
        }
        d += 1;
    }
    out
}

/// `|Ext^1(x, y)|` by enumerating all candidate middles of the right order
/// up to equivalence; equivalence of two extensions is decided by exhaustive
/// search for a connecting isomorphism.
pub fn ext1_count(x: &Presentation, y: &Presentation, bound: usize) -> OracleResult<BigInt> {
    let ring = x.ring().clone();
    let ey = EnumeratedModule::new(y, bound)?;
    let ex = EnumeratedModule::new(x, bound)?;
    let order = (ey.len() as u128) * (ex.len() as u128);
    let modulus: Option<u128> = ring
        .modulus()
        .map(|n| n.try_into().expect("desk-scale modulus"));
    let mut total = BigInt::zero();
    for chain in divisor_chains(order, 1, modulus) {
        let g = chain.len();
        let mut rel = Matrix::zero(ring.clone(), g, g);
        for (i, d) in chain.iter().enumerate() {
            rel.set(i, i, BigInt::from(*d));
        }
        let middle = Presentation::new(ring.clone(), g, rel)?;
        let em = EnumeratedModule::new(&middle, bound)?;
        if em.len() != order as usize {
            continue;
        }
        let monos: Vec<Matrix> = enumerate_morphisms(y, &em, bound)?
            .into_iter()
            .filter(|f| image_keys(f, &ey, &em).len() == ey.len())
            .collect();
        let epis: Vec<Matrix> = enumerate_morphisms(&middle, &ex, bound)?
            .into_iter()
            .filter(|f| image_keys(f, &em, &ex).len() == ex.len())
            .collect();
        let mut pairs: Vec<(Matrix, Matrix)> = Vec::new();
        for i in &monos {
            let im = image_keys(i, &ey, &em);
            for p in &epis {
                let ker = kernel_keys(p, &em, &ex);
                if im == ker {
                    pairs.push((i.clone(), p.clone()));
                }
            }
        }
        if pairs.is_empty() {
            continue;
        }
        let autos: Vec<Matrix> = enumerate_morphisms(&middle, &em, bound)?
            .into_iter()
            .filter(|f| image_keys(f, &em, &em).len() == em.len())
            .collect();
        // group pairs under (iota, pi) ~ (phi∘iota, pi∘phi^{-1});
        // equivalently (iota', pi') with phi∘iota = iota', pi'∘phi = pi
        let mut classes: Vec<(Matrix, Matrix)> = Vec::new();
        'next_pair: for (i, p) in &pairs {
            for (ci, cp) in &classes {
                for phi in &autos {
                    let conn_i = phi.mul(ci);
                    let eq_i = (0..conn_i.cols())
                        .all(|j| em.key(&conn_i.column(j)) == em.key(&i.column(j)));
                    if !eq_i {
                        continue;
                    }
                    let conn_p = p.mul(phi);
                    let eq_p = (0..conn_p.cols())
                        .all(|j| ex.key(&conn_p.column(j)) == ex.key(&cp.column(j)));
                    if eq_p {
                        continue 'next_pair;
                    }
                }
            }
            classes.push((i.clone(), p.clone()));
        }
        total += BigInt::from(classes.len());
    }
    Ok(total)
}

/// Equivalence of two short exact sequences with identical ends, decided by
/// exhaustive search for a commuting isomorphism of the middles.
pub fn equivalent_short_by_iso(
    e: &NExactSequence,
    f: &NExactSequence,
    bound: usize,
) -> OracleResult<bool> {
    assert_eq!(e.length(), 1);
    assert_eq!(f.length(), 1);
    assert_eq!(e.left_end(), f.left_end());
    assert_eq!(e.right_end(), f.right_end());
    let ey = EnumeratedModule::new(e.left_end(), bound)?;
    let ex = EnumeratedModule::new(e.right_end(), bound)?;
    let em = EnumeratedModule::new(&e.middles()[0], bound)?;
    let fm = EnumeratedModule::new(&f.middles()[0], bound)?;
    let (i1, p1) = (e.arrows()[0].matrix(), e.arrows()[1].matrix());
    let (i2, p2) = (f.arrows()[0].matrix(), f.arrows()[1].matrix());
    for phi in enumerate_morphisms(&e.middles()[0], &fm, bound)? {
        if image_keys(&phi, &em, &fm).len() != em.len() || em.len() != fm.len() {
            continue;
        }
        let left = phi.mul(i1);
        let left_ok = (0..left.cols()).all(|j| fm.key(&left.column(j)) == fm.key(&i2.column(j)));
        if !left_ok {
            continue;
        }
        let right = p2.mul(&phi);
        let right_ok = (0..right.cols()).all(|j| ex.key(&right.column(j)) == ex.key(&p1.column(j)));
        if right_ok {
            let _ = &ey;
            return Ok(true);
        }
    }
    Ok(false)
}

/// Does a short exact sequence split? Decided by exhaustive retraction
/// search.
pub fn splits_by_enumeration(e: &NExactSequence, bound: usize) -> OracleResult<bool> {
    assert_eq!(e.length(), 1);
    let ey = EnumeratedModule::new(e.left_end(), bound)?;
    let iota = e.arrows()[0].matrix();
    for rho in enumerate_morphisms(&e.middles()[0], &ey, bound)? {
        let comp = rho.mul(iota);
        let id = Matrix::identity(e.ring().clone(), e.left_end().generators());
        let ok = (0..comp.cols()).all(|j| ey.key(&comp.column(j)) == ey.key(&id.column(j)));
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

#[derive(Debug)]
pub enum OracleTarget {
    Exactness(Box<NExactSequence>),
    HomCount(Presentation, Presentation),
    ExtCount(Presentation, Presentation),
    /// two short sequences spliced through a shared end
    SpliceClass(Box<NExactSequence>, Box<NExactSequence>),
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct OracleReport {
    pub target: String,
    pub engine: String,
    pub oracle: String,
    pub agrees: bool,
}

/// Recompute a target by exhaustive enumeration and compare with the engine.
pub fn oracle_check(target: &OracleTarget, bound: usize) -> OracleResult<OracleReport> {
    match target {
        OracleTarget::Exactness(seq) => {
            // the engine vouched for the sequence when it was constructed
            let oracle = check_exactness(seq, bound)?;
            Ok(OracleReport {
                target: format!("exactness of a {}-exact sequence", seq.length()),
                engine: "exact".into(),
                oracle: if oracle { "exact" } else { "not exact" }.into(),
                agrees: oracle,
            })
        }
        OracleTarget::HomCount(m, n) => {
            let engine = hom_module(m, n)?.order().ok_or(OracleError::NotFinite)?;
            let oracle = hom_count(m, n, bound)?;
            Ok(OracleReport {
                target: "morphism count".into(),
                engine: engine.to_string(),
                oracle: oracle.to_string(),
                agrees: engine == oracle,
            })
        }
        OracleTarget::ExtCount(x, y) => {
            let engine = ext_module(1, x, y)?.order().ok_or(OracleError::NotFinite)?;
            let oracle = ext1_count(x, y, bound)?;
            Ok(OracleReport {
                target: "Ext^1 class count".into(),
                engine: engine.to_string(),
                oracle: oracle.to_string(),
                agrees: engine == oracle,
            })
        }
        OracleTarget::SpliceClass(e, f) => {
            let spliced = e.splice(f)?;
            let exact = check_exactness(&spliced, bound)?;
            let cut_at = e.length() + 1;
            let (l, r) = spliced.cut(cut_at)?;
            // reglue the cut pieces back onto the original shared end
            let shared = e.right_end();
            let psi = lift_through_mono(&r.arrows()[0], &f.arrows()[0]).ok_or_else(|| {
                OracleError::Core(fpext_core::Error::InternalConsistency(
                    "shared end does not factor through the cut object".into(),
                ))
            })?;
            let r_back = r.reglue_left(&psi)?;
            let psi_inv =
                lift_through_mono(&psi, &Morphism::identity(psi.target())).ok_or_else(|| {
                    OracleError::Core(fpext_core::Error::InternalConsistency(
                        "cut iso is not invertible".into(),
                    ))
                })?;
            let l_back = l.reglue_right(&psi_inv)?;
            let _ = shared;
            let mut agrees = exact;
            let mut notes = Vec::new();
            if e.length() == 1 {
                let engine_eq = are_equivalent(&l_back, e)?;
                let oracle_eq = equivalent_short_by_iso(&l_back, e, bound)?;
                notes.push(format!(
                    "left piece: engine {engine_eq}, oracle {oracle_eq}"
                ));
                agrees &= engine_eq == oracle_eq && engine_eq;
                let engine_zero = is_zero_class(e)?;
                let oracle_zero = splits_by_enumeration(e, bound)?;
                notes.push(format!(
                    "left zero-class: engine {engine_zero}, oracle {oracle_zero}"
                ));
                agrees &= engine_zero == oracle_zero;
            }
            if f.length() == 1 {
                let engine_eq = are_equivalent(&r_back, f)?;
                let oracle_eq = equivalent_short_by_iso(&r_back, f, bound)?;
                notes.push(format!(
                    "right piece: engine {engine_eq}, oracle {oracle_eq}"
                ));
                agrees &= engine_eq == oracle_eq && engine_eq;
                let engine_zero = is_zero_class(f)?;
                let oracle_zero = splits_by_enumeration(f, bound)?;
                notes.push(format!(
                    "right zero-class: engine {engine_zero}, oracle {oracle_zero}"
                ));
                agrees &= engine_zero == oracle_zero;
            }
            Ok(OracleReport {
                target: "splice/cut class coherence".into(),
                engine: "cut pieces equivalent to the inputs".into(),
                oracle: notes.join("; "),
                agrees,
            })
        }
    }
}
