//! Parameter-plane invariants tying located centers to the sweep oracle.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use molecule::{
    all_centers_sweep, cardioid_boundary_point, enumerate_addresses, follow_to_root,
    locate_addresses, locate_center, molecule_count_direct, total_component_count, Center,
    PathFollowConfig, RotationNumber, SweepConfig,
};

fn rot(p: u32, q: u32) -> RotationNumber {
    RotationNumber::new(p, q).unwrap()
}

#[test]
fn conjugate_addresses_land_on_conjugate_centers() {
    let cfg = PathFollowConfig::default();
    for n in 2..=8u64 {
        for address in enumerate_addresses(n).unwrap() {
            let center = locate_center(&address, &cfg).unwrap();
            let mirror = locate_center(&address.conjugate(), &cfg).unwrap();
            let reflected = Complex64::new(mirror.c.re, -mirror.c.im);
            assert!(
                (center.c - reflected).norm() <= cfg.match_tol,
                "conjugation symmetry broken for {address}"
            );
        }
    }
}

#[test]
fn multiplier_continuation_agrees_with_the_cardioid_formula() {
    let cfg = PathFollowConfig::default();
    let cardioid = Center {
        c: Complex64::new(0.0, 0.0),
        period: 1,
        address: None,
        residual: 0.0,
    };
    for (p, q) in [(1, 2), (1, 3), (2, 3), (2, 5), (3, 7), (1, 8)] {
        let followed = follow_to_root(&cardioid, rot(p, q), &cfg).unwrap();
        let algebraic = cardioid_boundary_point(rot(p, q));
        assert!(
            (followed - algebraic).norm() < 1e-10,
            "root disagreement at angle {p}/{q}: {followed} vs {algebraic}"
        );
    }
}

/// One pass over n <= 12: the sweep count equals the Mobius-inversion total,
/// and the located molecule count equals that total exactly at n in {1, 2}.
#[test]
fn sweep_complete_and_molecule_exhausts_the_plane_only_at_low_periods() {
    let sweep_cfg = SweepConfig::default();
    let path_cfg = PathFollowConfig::default();
    for n in 1..=12u64 {
        let sweep = all_centers_sweep(n, &sweep_cfg).unwrap();
        let nu = total_component_count(n).unwrap().to_usize().unwrap();
        assert_eq!(sweep.len(), nu, "sweep completeness at n = {n}");

        let addresses = enumerate_addresses(n).unwrap();
        let located = locate_addresses(&addresses, &path_cfg).unwrap();
        assert_eq!(
            located.len(),
            molecule_count_direct(n).unwrap().to_usize().unwrap(),
            "located count at n = {n}"
        );
        if n <= 2 {
            assert_eq!(located.len(), sweep.len(), "every component is on the molecule at n = {n}");
        } else {
            assert!(located.len() < sweep.len(), "off-molecule components expected at n = {n}");
        }
        // every located center coincides with exactly one sweep root
        for center in &located {
            let hits = sweep
                .iter()
                .filter(|root| (root.c - center.c).norm() <= path_cfg.match_tol)
                .count();
            assert_eq!(hits, 1, "center {} at n = {n}", center.c);
        }
    }
}

#[test]
fn located_centers_are_pairwise_separated() {
    let cfg = PathFollowConfig::default();
    for n in [6u64, 9, 10] {
        let centers = locate_addresses(&enumerate_addresses(n).unwrap(), &cfg).unwrap();
        for (i, a) in centers.iter().enumerate() {
            for b in &centers[i + 1..] {
                assert!(
                    (a.c - b.c).norm() > cfg.distinct_tol,
                    "indistinct centers at n = {n}"
                );
            }
        }
    }
}

#[test]
fn residuals_and_primitive_periods_hold_after_location() {
    let cfg = PathFollowConfig::default();
    for n in [4u64, 6, 8] {
        for center in locate_addresses(&enumerate_addresses(n).unwrap(), &cfg).unwrap() {
            assert!(center.residual <= cfg.newton_tol);
            assert_eq!(center.period, n);
            assert_eq!(molecule::primitive_period(center.c, n, cfg.newton_tol), n);
        }
    }
}
