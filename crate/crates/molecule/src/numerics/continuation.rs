//! Multiplier path-following from the main cardioid out along a satellite
//! address.
//!
//! One chain link works in three moves. First, with the parent component's
//! period-`m` cycle pinned by the two-unknown system, the multiplier target
//! is walked from 0 out to `e^{2 pi i p/q}`; the endpoint parameter is the
//! attachment root of the child. Second, the parameter steps off the root by
//! `entry_offset` along the ray from the parent center through the root,
//! which lands just inside the child component, and the critical orbit is
//! iterated until it settles on the child's attracting period-`mq` cycle.
//! Third, the child multiplier is walked straight down to 0, ending at the
//! child's superattracting center. The last center is Newton-polished on
//! `Q_n` and its primitive period checked.

use num_complex::Complex64;

use super::cycles::{
    cycle_point_and_multiplier, orbit, orbit_and_dz, solve_multiplier_system, unit_root,
};
use super::{poly, Center, NumericsError, PathFollowConfig};
use crate::address::{RotationNumber, SatelliteAddress};

/// Orbit blocks allowed for the critical orbit to settle on the child cycle;
/// near-parabolic entry makes the contraction rate roughly
/// `1 - O(entry_offset)` per block.
const ATTRACTION_BLOCKS: usize = 200_000;
const ATTRACTION_TOL: f64 = 1e-9;

/// Separation below which a candidate cycle is judged to be the parent cycle
/// continued through the root rather than the child cycle.
const PARENT_CYCLE_GUARD: f64 = 1e-6;

/// Follow the parent cycle's multiplier from 0 at the verified center out to
/// `e^{2 pi i p/q}`; the returned parameter is the root of the satellite
/// attached at internal angle `r`.
pub fn follow_to_root(
    parent: &Center,
    r: RotationNumber,
    cfg: &PathFollowConfig,
) -> Result<Complex64, NumericsError> {
    cfg.validate()?;
    follow_link_to_root(parent.c, parent.period, r, cfg, 0).map(|(_, c)| c)
}

fn follow_link_to_root(
    parent_c: Complex64,
    parent_period: u64,
    r: RotationNumber,
    cfg: &PathFollowConfig,
    depth: usize,
) -> Result<(Complex64, Complex64), NumericsError> {
    let lambda = unit_root(r);
    // the critical point lies on the superattracting cycle, multiplier 0
    let (mut z, mut c) = (Complex64::new(0.0, 0.0), parent_c);
    for i in 1..=cfg.multiplier_steps {
        let t = i as f64 / cfg.multiplier_steps as f64;
        (z, c) = solve_multiplier_system(parent_period, z, c, t * lambda, cfg).map_err(|_| {
            NumericsError::ContinuationFailure { depth, step: i, steps: cfg.multiplier_steps }
        })?;
    }
    Ok((z, c))
}

/// Walk a full satellite address from the main cardioid and land on the
/// superattracting center of the component it names.
pub fn locate_center(
    address: &SatelliteAddress,
    cfg: &PathFollowConfig,
) -> Result<Center, NumericsError> {
    cfg.validate()?;
    if address.is_empty() {
        return Ok(Center::main_cardioid());
    }
    let mut parent_c = Complex64::new(0.0, 0.0);
    let mut period: u64 = 1;
    for (depth, &r) in address.rotations().iter().enumerate() {
        let (_, c_root) = follow_link_to_root(parent_c, period, r, cfg, depth)?;
        let child_period = period * r.denom() as u64;
        parent_c = enter_and_descend(parent_c, c_root, period, child_period, cfg, depth)?;
        period = child_period;
    }
    let c = poly::polish_center(period, parent_c, cfg.newton_tol, cfg.newton_max_iter)?;
    let (q, _) = poly::critical_poly(period, c)?;
    let residual = q.norm();
    let found = poly::primitive_period(c, period, cfg.newton_tol);
    if found != period {
        return Err(NumericsError::WrongComponent { expected: period, found });
    }
    Ok(Center { c, period, address: Some(address.clone()), residual })
}

/// Step off the attachment root into the child component, settle on its
/// attracting cycle, and continue the child multiplier down to 0.
///
/// Components deep in a chain can be narrower than the configured entry
/// step; when the settle fails the step is halved (down to a floor) and the
/// entry retried, deterministically.
fn enter_and_descend(
    parent_c: Complex64,
    c_root: Complex64,
    parent_period: u64,
    child_period: u64,
    cfg: &PathFollowConfig,
    depth: usize,
) -> Result<Complex64, NumericsError> {
    let outward = c_root - parent_c;
    let direction = outward / outward.norm();
    let floor = (10.0 * cfg.newton_tol).max(cfg.entry_offset / 64.0);

    let mut entry = cfg.entry_offset;
    let (c_in, z_child, mu0) = loop {
        let c_in = c_root + entry * direction;
        match settle_on_child_cycle(c_in, parent_period, child_period, cfg, depth) {
            Ok((z_child, mu0)) => break (c_in, z_child, mu0),
            Err(e) => {
                entry *= 0.5;
                if entry < floor {
                    return Err(e);
                }
            }
        }
    };

    // drive the child multiplier straight down to the superattracting value
    let mut state = (z_child, c_in);
    for i in 1..=cfg.multiplier_steps {
        let frac = 1.0 - i as f64 / cfg.multiplier_steps as f64;
        state = solve_multiplier_system(child_period, state.0, state.1, mu0 * frac, cfg)
            .map_err(|_| NumericsError::ContinuationFailure {
                depth,
                step: i,
                steps: cfg.multiplier_steps,
            })?;
    }
    Ok(state.1)
}

/// Inside the child component the critical orbit converges to the child
/// cycle and to nothing else, which separates it from the parent cycle.
fn settle_on_child_cycle(
    c_in: Complex64,
    parent_period: u64,
    child_period: u64,
    cfg: &PathFollowConfig,
    depth: usize,
) -> Result<(Complex64, Complex64), NumericsError> {
    let mut z = Complex64::new(0.0, 0.0);
    let mut settled = false;
    for _ in 0..ATTRACTION_BLOCKS {
        let w = orbit(child_period, z, c_in);
        // an escaping orbit means the entry point missed the component
        if !w.is_finite() || w.norm_sqr() > 16.0 {
            break;
        }
        if (w - z).norm() <= ATTRACTION_TOL {
            z = w;
            settled = true;
            break;
        }
        z = w;
    }
    if !settled {
        return Err(NumericsError::NonConvergence {
            stage: "child cycle attraction",
            max_iter: ATTRACTION_BLOCKS,
        });
    }

    let (z_child, mu0) = cycle_point_and_multiplier(c_in, child_period, z, cfg)?;
    let (wp, _) = orbit_and_dz(parent_period, z_child, c_in);
    if (wp - z_child).norm() <= PARENT_CYCLE_GUARD {
        return Err(NumericsError::WrongComponent {
            expected: child_period,
            found: parent_period,
        });
    }
    if mu0.norm() >= 1.0 {
        return Err(NumericsError::ContinuationFailure {
            depth,
            step: 0,
            steps: cfg.multiplier_steps,
        });
    }
    Ok((z_child, mu0))
}

#[cfg(test)]
mod tests {
    use super::super::cardioid_boundary_point;
    use super::*;

    fn rot(p: u32, q: u32) -> RotationNumber {
        RotationNumber::new(p, q).unwrap()
    }

    fn addr(rs: &[(u32, u32)]) -> SatelliteAddress {
        SatelliteAddress::new(rs.iter().map(|&(p, q)| rot(p, q)).collect())
    }

    #[test]
    fn follow_to_root_reaches_cardioid_boundary_points() {
        let cfg = PathFollowConfig::default();
        let cardioid = Center::main_cardioid();

        let half = follow_to_root(&cardioid, rot(1, 2), &cfg).unwrap();
        assert!((half - cardioid_boundary_point(rot(1, 2))).norm() < 1e-10);
        assert!((half - Complex64::new(-0.75, 0.0)).norm() < 1e-10);

        let third = follow_to_root(&cardioid, rot(1, 3), &cfg).unwrap();
        assert!((third - cardioid_boundary_point(rot(1, 3))).norm() < 1e-10);
    }

    #[test]
    fn follow_to_root_from_the_period_two_center() {
        let cfg = PathFollowConfig::default();
        let parent = Center {
            c: Complex64::new(-1.0, 0.0),
            period: 2,
            address: Some(addr(&[(1, 2)])),
            residual: 0.0,
        };
        // period-2 multiplier is 4(c + 1); it equals -1 at c = -5/4
        let root = follow_to_root(&parent, rot(1, 2), &cfg).unwrap();
        assert!((root - Complex64::new(-1.25, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn locate_center_examples() {
        let cfg = PathFollowConfig::default();

        let c2 = locate_center(&addr(&[(1, 2)]), &cfg).unwrap();
        assert!((c2.c - Complex64::new(-1.0, 0.0)).norm() < 1e-10);
        assert_eq!(c2.period, 2);

        // the period-3 center off the cardioid: the root of the primitive
        // factor c^3 + 2c^2 + c + 1 with positive imaginary part
        let c3 = locate_center(&addr(&[(1, 3)]), &cfg).unwrap();
        assert!((c3.c - Complex64::new(-0.122561, 0.744862)).norm() < 1e-5);
        let c = c3.c;
        assert!((c * c * c + 2.0 * c * c + c + 1.0).norm() < 1e-9);
        assert_eq!(c3.period, 3);

        let c4 = locate_center(&addr(&[(1, 2), (1, 2)]), &cfg).unwrap();
        assert!(c4.c.im.abs() < 1e-10);
        assert!(c4.c.re > -1.4 && c4.c.re < -1.25);
        assert!((c4.c.re - -1.310703).abs() < 1e-5);
        assert_eq!(c4.period, 4);
    }

    #[test]
    fn empty_address_is_the_main_cardioid() {
        let cfg = PathFollowConfig::default();
        let c = locate_center(&SatelliteAddress::empty(), &cfg).unwrap();
        assert_eq!(c.c, Complex64::new(0.0, 0.0));
        assert_eq!(c.period, 1);
        assert_eq!(c.residual, 0.0);
    }
}
