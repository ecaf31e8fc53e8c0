//! Base rings: the integers and the integers modulo n.
//!
//! Every scalar in the library is an arbitrary-precision integer tagged with
//! one of these rings. Over `IntegersMod(n)` the canonical representative
//! lives in `[0, n)`.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integers,
    IntegersMod(BigInt),
}

impl RingSpec {
    pub fn integers() -> Self {
        RingSpec::Integers
    }

    /// The ring of integers modulo `n`, `n >= 2`.
    pub fn integers_mod(n: impl Into<BigInt>) -> Result<Self> {
        let n = n.into();
        if n < BigInt::from(2) {
            return Err(Error::Malformed(format!(
                "modulus must be at least 2, got {n}"
            )));
        }
        Ok(RingSpec::IntegersMod(n))
    }

    pub fn modulus(&self) -> Option<&BigInt> {
        match self {
            RingSpec::Integers => None,
            RingSpec::IntegersMod(n) => Some(n),
        }
    }

    pub fn is_modular(&self) -> bool {
        matches!(self, RingSpec::IntegersMod(_))
    }

    /// Canonical representative of `v` in this ring.
    pub fn normalize(&self, v: BigInt) -> BigInt {
        match self {
            RingSpec::Integers => v,
            RingSpec::IntegersMod(n) => v.mod_floor(n),
        }
    }

    pub fn same_ring(&self, other: &RingSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{self} vs {other}")))
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::IntegersMod(n) => write!(f, "Z/{n}"),
        }
    }
}

/// A scalar together with its ring. Arithmetic stays canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    value: BigInt,
    ring: RingSpec,
}

impl RingElement {
    pub fn new(ring: RingSpec, value: impl Into<BigInt>) -> Self {
        let value = ring.normalize(value.into());
        RingElement { value, ring }
    }

    pub fn zero(ring: RingSpec) -> Self {
        RingElement::new(ring, 0)
    }

    pub fn one(ring: RingSpec) -> Self {
        RingElement::new(ring, 1)
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        debug_assert_eq!(self.ring, other.ring);
        RingElement::new(self.ring.clone(), &self.value + &other.value)
    }

    pub fn sub(&self, other: &RingElement) -> RingElement {
        debug_assert_eq!(self.ring, other.ring);
        RingElement::new(self.ring.clone(), &self.value - &other.value)
    }

    pub fn mul(&self, other: &RingElement) -> RingElement {
        debug_assert_eq!(self.ring, other.ring);
        RingElement::new(self.ring.clone(), &self.value * &other.value)
    }

    pub fn neg(&self) -> RingElement {
        RingElement::new(self.ring.clone(), -&self.value)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// True when `v` is a unit of the ring (±1 over Z, coprime to n over Z/n).
pub fn is_unit(ring: &RingSpec, v: &BigInt) -> bool {
    match ring {
        RingSpec::Integers => v.abs().is_one(),
        RingSpec::IntegersMod(n) => v.gcd(n).is_one(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_validation() {
        assert!(RingSpec::integers_mod(1).is_err());
        assert!(RingSpec::integers_mod(0).is_err());
        assert!(RingSpec::integers_mod(2).is_ok());
    }

    #[test]
    fn canonical_representatives() {
        let z4 = RingSpec::integers_mod(4).unwrap();
        assert_eq!(z4.normalize(BigInt::from(-1)), BigInt::from(3));
        assert_eq!(z4.normalize(BigInt::from(9)), BigInt::from(1));
        assert_eq!(
            RingSpec::Integers.normalize(BigInt::from(-7)),
            BigInt::from(-7)
        );
    }

    #[test]
    fn element_arithmetic_stays_canonical() {
        let z4 = RingSpec::integers_mod(4).unwrap();
        let a = RingElement::new(z4.clone(), 3);
        let b = RingElement::new(z4.clone(), 2);
        assert_eq!(a.add(&b).value(), &BigInt::from(1));
        assert_eq!(a.mul(&b).value(), &BigInt::from(2));
        assert_eq!(a.neg().value(), &BigInt::from(1));
    }

    #[test]
    fn units() {
        let z6 = RingSpec::integers_mod(6).unwrap();
        assert!(is_unit(&z6, &BigInt::from(5)));
        assert!(!is_unit(&z6, &BigInt::from(2)));
        assert!(is_unit(&RingSpec::Integers, &BigInt::from(-1)));
        assert!(!is_unit(&RingSpec::Integers, &BigInt::from(2)));
    }
}
