//! Structural properties of the satellite-address enumeration.

use std::collections::{HashMap, HashSet};

use num_traits::ToPrimitive;
use proptest::prelude::*;

use molecule::{
    address_count, enumerate_addresses, euler_phi, molecule_count_direct, ordered_factorizations,
    RotationNumber, SatelliteAddress,
};

#[test]
fn cardinality_matches_the_count() {
    for n in 1..=120u64 {
        let addresses = enumerate_addresses(n).unwrap();
        let expected = molecule_count_direct(n).unwrap().to_usize().unwrap();
        assert_eq!(addresses.len(), expected, "cardinality at n = {n}");
        for a in &addresses {
            assert_eq!(a.period(), n, "period of {a}");
        }
    }
}

#[test]
fn no_duplicate_addresses() {
    for n in 1..=200u64 {
        let addresses = enumerate_addresses(n).unwrap();
        let unique: HashSet<_> = addresses.iter().collect();
        assert_eq!(unique.len(), addresses.len(), "duplicates at n = {n}");
    }
}

#[test]
fn denominator_projection_recovers_ordered_factorizations() {
    // stripping numerators must hit each tuple (d1, ..., dk) exactly
    // phi(d1) * ... * phi(dk) times
    for n in 1..=60u64 {
        let mut projected: HashMap<Vec<u64>, u64> = HashMap::new();
        for a in enumerate_addresses(n).unwrap() {
            let denoms: Vec<u64> = a.rotations().iter().map(|r| r.denom() as u64).collect();
            *projected.entry(denoms).or_insert(0) += 1;
        }
        let mut expected: HashMap<Vec<u64>, u64> = HashMap::new();
        for f in ordered_factorizations(n).unwrap() {
            let weight: u64 = f
                .parts()
                .iter()
                .map(|&d| euler_phi(d).unwrap().to_u64().unwrap())
                .product();
            expected.insert(f.parts().to_vec(), weight);
        }
        assert_eq!(projected, expected, "projection at n = {n}");
    }
}

#[test]
fn prefixes_are_addresses_of_their_own_period() {
    let mut by_period: HashMap<u64, HashSet<SatelliteAddress>> = HashMap::new();
    let mut addresses_of = |period: u64| -> HashSet<SatelliteAddress> {
        by_period
            .entry(period)
            .or_insert_with(|| enumerate_addresses(period).unwrap().into_iter().collect())
            .clone()
    };
    for n in 1..=60u64 {
        for a in enumerate_addresses(n).unwrap() {
            for cut in 0..a.len() {
                let prefix = SatelliteAddress::new(a.rotations()[..cut].to_vec());
                let set = addresses_of(prefix.period());
                assert!(set.contains(&prefix), "prefix {prefix} of {a} missing at n = {n}");
            }
        }
    }
}

#[test]
fn enumeration_is_lexicographic_in_flattened_keys() {
    for n in [12u64, 24, 30, 36] {
        let keys: Vec<Vec<u32>> = enumerate_addresses(n)
            .unwrap()
            .iter()
            .map(|a| {
                a.rotations().iter().flat_map(|r| [r.denom(), r.numer()]).collect()
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted, "order at n = {n}");
    }
}

#[test]
fn address_count_agrees_with_enumeration() {
    for n in 1..=120u64 {
        assert_eq!(
            address_count(n).unwrap().to_usize().unwrap(),
            enumerate_addresses(n).unwrap().len(),
            "count at n = {n}"
        );
    }
}

proptest! {
    #[test]
    fn rotation_constructor_enforces_the_invariants(p in 0u32..200, q in 0u32..200) {
        let valid = q >= 2 && p > 0 && p < q && num_integer::gcd(p, q) == 1;
        prop_assert_eq!(RotationNumber::new(p, q).is_ok(), valid);
    }

    #[test]
    fn conjugation_is_an_involution_preserving_period(n in 1u64..=40) {
        for a in enumerate_addresses(n).unwrap() {
            let conj = a.conjugate();
            prop_assert_eq!(conj.period(), a.period());
            prop_assert_eq!(conj.conjugate(), a);
        }
    }
}
