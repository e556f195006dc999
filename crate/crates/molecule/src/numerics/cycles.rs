//! Periodic cycles of `f_c(z) = z^2 + c` and their multipliers.

use num_complex::Complex64;

use super::{NumericsError, PathFollowConfig};
use crate::address::RotationNumber;

/// `e^{2 pi i p/q}`.
pub(crate) fn unit_root(r: RotationNumber) -> Complex64 {
    Complex64::from_polar(1.0, std::f64::consts::TAU * r.turns())
}

/// Boundary point of the main cardioid at internal angle `p/q`: the
/// parameter whose fixed point has multiplier `L = e^{2 pi i p/q}`, from
/// `z^2 + c = z` and `2z = L`, i.e. `c = L/2 - L^2/4`.
pub fn cardioid_boundary_point(r: RotationNumber) -> Complex64 {
    let l = unit_root(r);
    0.5 * l - 0.25 * l * l
}

/// `f_c^period(z)` alone.
pub(crate) fn orbit(period: u64, z: Complex64, c: Complex64) -> Complex64 {
    let mut w = z;
    for _ in 0..period {
        w = w * w + c;
    }
    w
}

/// `f_c^period(z)` and its z-derivative `prod 2 z_i` over the orbit.
pub(crate) fn orbit_and_dz(period: u64, z: Complex64, c: Complex64) -> (Complex64, Complex64) {
    let mut w = z;
    let mut u = Complex64::new(1.0, 0.0);
    for _ in 0..period {
        u = 2.0 * w * u;
        w = w * w + c;
    }
    (w, u)
}

/// Locate a period-`period` point of `f_c` by Newton iteration on
/// `f_c^period(z) - z` from `seed`, returning the point and the cycle
/// multiplier. The seed must lie in the Newton basin of the intended cycle;
/// continuation callers arrange that.
pub fn cycle_point_and_multiplier(
    c: Complex64,
    period: u64,
    seed: Complex64,
    cfg: &PathFollowConfig,
) -> Result<(Complex64, Complex64), NumericsError> {
    if period == 0 {
        return Err(NumericsError::ZeroPeriod);
    }
    let mut z = seed;
    for _ in 0..cfg.newton_max_iter {
        let (w, u) = orbit_and_dz(period, z, c);
        let g = w - z;
        if g.norm() <= cfg.newton_tol {
            return Ok((z, u));
        }
        let gp = u - 1.0;
        if gp.norm_sqr() < 1e-28 {
            // derivative of f^p - id vanishes at this z; move along the orbit
            z = w;
            continue;
        }
        z -= g / gp;
        if !z.is_finite() {
            break;
        }
    }
    Err(NumericsError::NonConvergence { stage: "cycle point", max_iter: cfg.newton_max_iter })
}

/// Value and first/second partials of `f_c^period` at `z`, for the
/// two-unknown multiplier system.
pub(crate) struct OrbitJet {
    /// `f^m(z)`
    pub w: Complex64,
    /// `d/dz f^m`
    pub u: Complex64,
    /// `d/dc f^m`
    pub v: Complex64,
    /// `d2/dz2 f^m`
    pub s: Complex64,
    /// `d2/dz dc f^m`
    pub t: Complex64,
}

pub(crate) fn orbit_jet(period: u64, z: Complex64, c: Complex64) -> OrbitJet {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let (mut w, mut u, mut v, mut s, mut t) = (z, one, zero, zero, zero);
    for _ in 0..period {
        let (w0, u0, v0, s0, t0) = (w, u, v, s, t);
        s = 2.0 * (u0 * u0 + w0 * s0);
        t = 2.0 * (u0 * v0 + w0 * t0);
        u = 2.0 * w0 * u0;
        v = 2.0 * w0 * v0 + 1.0;
        w = w0 * w0 + c;
    }
    OrbitJet { w, u, v, s, t }
}

/// Newton solve of the two-complex-unknown system
/// `f_c^period(z) - z = 0`, `(f_c^period)'(z) - target = 0` in `(z, c)`.
pub(crate) fn solve_multiplier_system(
    period: u64,
    z0: Complex64,
    c0: Complex64,
    target: Complex64,
    cfg: &PathFollowConfig,
) -> Result<(Complex64, Complex64), NumericsError> {
    let (mut z, mut c) = (z0, c0);
    for _ in 0..cfg.newton_max_iter {
        let jet = orbit_jet(period, z, c);
        let a = jet.w - z;
        let b = jet.u - target;
        if a.norm() <= cfg.newton_tol && b.norm() <= cfg.newton_tol {
            return Ok((z, c));
        }
        let az = jet.u - 1.0;
        let det = az * jet.t - jet.v * jet.s;
        if det.norm_sqr() < 1e-60 {
            break;
        }
        let dz = (a * jet.t - jet.v * b) / det;
        let dc = (az * b - a * jet.s) / det;
        z -= dz;
        c -= dc;
        if !z.is_finite() || !c.is_finite() {
            break;
        }
    }
    Err(NumericsError::NonConvergence { stage: "multiplier system", max_iter: cfg.newton_max_iter })
}
