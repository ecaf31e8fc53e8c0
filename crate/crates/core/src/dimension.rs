//! Projective, injective and flat dimensions.
//!
//! The walk is an honest semi-decision: a `Finite` verdict carries the first
//! projective (resp. injective) stage, an `Infinite` verdict carries a
//! recurrence witness (two tower stages with equal canonical decompositions,
//! neither projective/injective, so the tower is eventually periodic and
//! never terminates), and otherwise the walk gives up at `max_steps`.

use crate::constructions::cokernel;
use crate::error::Result;
use crate::presentation::{InvariantFactors, Presentation};
use crate::projinj::{embed_into_injective, is_injective, is_projective};
use crate::resolution::projective_presentation;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dimension {
    Finite(usize),
    Infinite {
        /// first stage of the recurrence witness (κ^first ≅ κ^{first+period})
        first: usize,
        period: usize,
        witness: InvariantFactors,
    },
    AtLeast(usize),
}

impl Dimension {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Dimension::Infinite { .. })
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(k) => write!(f, "{k}"),
            Dimension::Infinite { period, .. } => write!(f, "infinite (period {period})"),
            Dimension::AtLeast(k) => write!(f, "at least {k}"),
        }
    }
}

/// Projective dimension: the smallest `k` with `κ^k` projective (`k = 0`
/// when the module itself is), walking at most `max_steps` syzygies.
pub fn projective_dimension(x: &Presentation, max_steps: usize) -> Dimension {
    assert!(max_steps >= 1, "max_steps must be >= 1");
    if is_projective(x) {
        return Dimension::Finite(0);
    }
    let mut seen: Vec<(usize, InvariantFactors)> = Vec::new();
    let mut current = x.clone();
    for k in 1..=max_steps {
        current = projective_presentation(&current).syzygy;
        if is_projective(&current) {
            return Dimension::Finite(k);
        }
        let canon = current.canonical_decomposition();
        if let Some((first, _)) = seen.iter().find(|(_, c)| *c == canon) {
            return Dimension::Infinite {
                first: *first,
                period: k - first,
                witness: canon,
            };
        }
        seen.push((k, canon));
    }
    Dimension::AtLeast(max_steps)
}

/// Injective dimension over Z/n: the dual walk along cosyzygies (cokernels
/// of the canonical injective embeddings).
pub fn injective_dimension(y: &Presentation, max_steps: usize) -> Result<Dimension> {
    assert!(max_steps >= 1, "max_steps must be >= 1");
    if is_injective(y)? {
        return Ok(Dimension::Finite(0));
    }
    let mut seen: Vec<(usize, InvariantFactors)> = Vec::new();
    let mut current = y.clone();
    for k in 1..=max_steps {
        let env = embed_into_injective(&current)?;
        current = cokernel(&env.embedding).object;
        if is_injective(&current)? {
            return Ok(Dimension::Finite(k));
        }
        let canon = current.canonical_decomposition();
        if let Some((first, _)) = seen.iter().find(|(_, c)| *c == canon) {
            return Ok(Dimension::Infinite {
                first: *first,
                period: k - first,
                witness: canon,
            });
        }
        seen.push((k, canon));
    }
    Ok(Dimension::AtLeast(max_steps))
}

/// Flat dimension. Over these Noetherian rings every finitely presented flat
/// module is projective, so this coincides with the projective dimension.
pub fn flat_dimension(x: &Presentation, max_steps: usize) -> Dimension {
    projective_dimension(x, max_steps)
}
