//! Combinatorial addresses of main-molecule components.
//!
//! Every component of the main molecule is reached from the main cardioid by
//! a finite chain of satellite attachments; each link is an internal angle
//! `p/q` in lowest terms. A [`SatelliteAddress`] records that chain read from
//! the cardioid outward, and its period is the product of the denominators.
//! There are exactly `phi(q)` choices of angle per denominator `q`, so the
//! addresses of period `n` are in bijection with the `M(n)` components
//! counted by the ordered-factorization sum in [`crate::count`].

use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::count::{self, BigCount, CountError, DEFAULT_ENUMERATION_BUDGET};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("invalid rotation number {numer}/{denom}: need 0 < p < q, q >= 2, gcd(p, q) = 1")]
pub struct InvalidRotation {
    pub numer: u32,
    pub denom: u32,
}

/// Internal angle `p/q` of a satellite attachment: a reduced fraction with
/// `0 < p < q` and `q >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RotationNumber {
    numer: u32,
    denom: u32,
}

impl RotationNumber {
    pub fn new(numer: u32, denom: u32) -> Result<Self, InvalidRotation> {
        if denom < 2 || numer == 0 || numer >= denom || numer.gcd(&denom) != 1 {
            return Err(InvalidRotation { numer, denom });
        }
        Ok(Self { numer, denom })
    }

    pub fn numer(&self) -> u32 {
        self.numer
    }

    pub fn denom(&self) -> u32 {
        self.denom
    }

    /// The angle as a fraction of a full turn.
    pub fn turns(&self) -> f64 {
        self.numer as f64 / self.denom as f64
    }

    /// Mirror angle `(q - p)/q`, the complex-conjugate attachment.
    pub fn conjugate(&self) -> Self {
        Self { numer: self.denom - self.numer, denom: self.denom }
    }
}

impl fmt::Display for RotationNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

impl Serialize for RotationNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(2))?;
        seq.serialize_element(&self.numer)?;
        seq.serialize_element(&self.denom)?;
        seq.end()
    }
}

/// Chain of rotation numbers from the main cardioid outward. The empty chain
/// is the main cardioid itself (period 1).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SatelliteAddress {
    rotations: Vec<RotationNumber>,
}

impl SatelliteAddress {
    pub fn new(rotations: Vec<RotationNumber>) -> Self {
        Self { rotations }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn rotations(&self) -> &[RotationNumber] {
        &self.rotations
    }

    pub fn len(&self) -> usize {
        self.rotations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rotations.is_empty()
    }

    /// Product of the denominators along the chain; 1 for the empty chain.
    pub fn period(&self) -> u64 {
        self.rotations.iter().map(|r| r.denom as u64).product()
    }

    /// Address of the complex-conjugate component.
    pub fn conjugate(&self) -> Self {
        Self { rotations: self.rotations.iter().map(|r| r.conjugate()).collect() }
    }
}

impl fmt::Display for SatelliteAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, r) in self.rotations.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ">")
    }
}

/// Period of an address: the product of its denominators.
pub fn address_period(address: &SatelliteAddress) -> u64 {
    address.period()
}

/// `M(n)` computed as the cardinality of the address set, via the divisor
/// recursion rather than materializing the addresses.
pub fn address_count(n: u64) -> Result<BigCount, CountError> {
    count::molecule_count_recursive(n)
}

/// Enumerate every satellite address of period `n`, one per molecule
/// component, in lexicographic order of the flattened key
/// `(q_1, p_1, q_2, p_2, ...)`. For `n = 1` the single empty address.
pub fn enumerate_addresses(n: u64) -> Result<Vec<SatelliteAddress>, CountError> {
    enumerate_addresses_with_budget(n, DEFAULT_ENUMERATION_BUDGET)
}

pub fn enumerate_addresses_with_budget(
    n: u64,
    budget: u64,
) -> Result<Vec<SatelliteAddress>, CountError> {
    let total = address_count(n)?;
    if total > BigCount::from(budget) {
        let required = total.to_u128().unwrap_or(u128::MAX);
        return Err(CountError::BudgetExceeded { n, required, budget });
    }
    // any n passing the budget has phi(n) <= M(n) <= budget, so denominators
    // (divisors of n) stay well inside u32 for practical budgets
    let mut out = Vec::with_capacity(total.to_usize().unwrap_or(0));
    let mut chain = Vec::new();
    emit_addresses(n, &mut chain, &mut out);
    Ok(out)
}

fn emit_addresses(m: u64, chain: &mut Vec<RotationNumber>, out: &mut Vec<SatelliteAddress>) {
    if m == 1 {
        out.push(SatelliteAddress::new(chain.clone()));
        return;
    }
    for q in count::divisors(m).expect("m >= 1") {
        if q < 2 {
            continue;
        }
        let q = u32::try_from(q).expect("budget keeps denominators small");
        for p in 1..q {
            if p.gcd(&q) == 1 {
                chain.push(RotationNumber { numer: p, denom: q });
                emit_addresses(m / q as u64, chain, out);
                chain.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rot(p: u32, q: u32) -> RotationNumber {
        RotationNumber::new(p, q).unwrap()
    }

    fn addr(rs: &[(u32, u32)]) -> SatelliteAddress {
        SatelliteAddress::new(rs.iter().map(|&(p, q)| rot(p, q)).collect())
    }

    #[test]
    fn rotation_invariants() {
        assert!(RotationNumber::new(1, 2).is_ok());
        assert!(RotationNumber::new(0, 2).is_err());
        assert!(RotationNumber::new(2, 2).is_err());
        assert!(RotationNumber::new(3, 2).is_err());
        assert!(RotationNumber::new(2, 4).is_err());
        assert!(RotationNumber::new(1, 1).is_err());
        assert_eq!(rot(1, 3).conjugate(), rot(2, 3));
    }

    #[test]
    fn period_examples() {
        assert_eq!(address_period(&SatelliteAddress::empty()), 1);
        assert_eq!(address_period(&addr(&[(1, 2), (1, 3)])), 6);
        assert_eq!(address_period(&addr(&[(2, 5), (1, 2), (1, 2)])), 20);
    }

    #[test]
    fn enumerate_small_periods() {
        assert_eq!(enumerate_addresses(1).unwrap(), vec![SatelliteAddress::empty()]);
        assert_eq!(enumerate_addresses(2).unwrap(), vec![addr(&[(1, 2)])]);
        assert_eq!(
            enumerate_addresses(3).unwrap(),
            vec![addr(&[(1, 3)]), addr(&[(2, 3)])]
        );
        // canonical order: lexicographic in (q1, p1, q2, p2, ...)
        assert_eq!(
            enumerate_addresses(6).unwrap(),
            vec![
                addr(&[(1, 2), (1, 3)]),
                addr(&[(1, 2), (2, 3)]),
                addr(&[(1, 3), (1, 2)]),
                addr(&[(2, 3), (1, 2)]),
                addr(&[(1, 6)]),
                addr(&[(5, 6)]),
            ]
        );
        assert_eq!(enumerate_addresses(0), Err(CountError::ZeroInput));
    }

    #[test]
    fn count_examples() {
        use num_bigint::BigUint;
        assert_eq!(address_count(12).unwrap(), BigUint::from(22u8));
        assert_eq!(address_count(2).unwrap(), BigUint::from(1u8));
        assert_eq!(address_count(9).unwrap(), BigUint::from(10u8));
        assert_eq!(
            enumerate_addresses(9).unwrap().len(),
            10,
            "enumeration agrees with the closed form for 3^2"
        );
    }

    #[test]
    fn budget_applies() {
        match enumerate_addresses_with_budget(12, 5) {
            Err(CountError::BudgetExceeded { n: 12, required: 22, budget: 5 }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn serialization_shape() {
        let a = addr(&[(1, 2), (1, 3)]);
        assert_eq!(serde_json::to_string(&a).unwrap(), "[[1,2],[1,3]]");
    }
}
