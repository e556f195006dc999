//! Numerical verification in the parameter plane of `z -> z^2 + c`.
//!
//! The combinatorial count `M(n)` is confirmed by actually finding the
//! superattracting center of every period-`n` molecule component:
//!
//! * [`locate_center`] walks a satellite address link by link, following the
//!   parent cycle's multiplier out to the attachment root, stepping into the
//!   child component, and driving the child multiplier down to zero;
//! * [`all_centers_sweep`] independently finds every root of the
//!   critical-orbit polynomial `Q_n` by simultaneous (Aberth-Ehrlich style)
//!   iteration and classifies them by primitive period;
//! * [`verify_molecule_count`] checks that the two agree and that the located
//!   centers are distinct, residual-small, and of the right primitive period.

mod continuation;
mod cycles;
mod poly;
mod sweep;
mod verify;

pub use continuation::{follow_to_root, locate_center};
pub use cycles::{cardioid_boundary_point, cycle_point_and_multiplier};
pub use poly::{critical_poly, primitive_period, ORBIT_OVERFLOW_LIMIT};
pub use sweep::{all_centers_sweep, all_centers_sweep_seq, SweepConfig};
pub use verify::{
    locate_addresses, locate_addresses_seq, verify_molecule_count, VerifyOptions, VerifyReport,
};

use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::address::SatelliteAddress;
use crate::count::CountError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("period must be positive")]
    ZeroPeriod,
    #[error("orbit magnitude exceeded the overflow limit at iterate {step}")]
    Overflow { step: u64 },
    #[error("newton iteration did not converge within {max_iter} steps ({stage})")]
    NonConvergence { stage: &'static str, max_iter: usize },
    #[error("multiplier continuation stalled at step {step}/{steps}, chain depth {depth}")]
    ContinuationFailure { depth: usize, step: usize, steps: usize },
    #[error("landed on a component of primitive period {found}, expected {expected}")]
    WrongComponent { expected: u64, found: u64 },
    #[error("sweep period {n} exceeds the configured limit {limit}")]
    SweepLimit { n: u64, limit: u64 },
    #[error("simultaneous iteration did not settle within {rounds} rounds")]
    SweepNonConvergence { rounds: usize },
    #[error("sweep found {found} period-{n} centers, expected {expected}")]
    SweepCountMismatch { n: u64, expected: u64, found: u64 },
    #[error("sweep roots closer than the distinctness tolerance {tol:e}")]
    SweepIndistinct { tol: f64 },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Count(#[from] CountError),
}

/// Tolerances and step counts for multiplier path-following.
#[derive(Debug, Clone)]
pub struct PathFollowConfig {
    /// Continuation increments per multiplier leg.
    pub multiplier_steps: usize,
    /// Residual tolerance for every Newton solve.
    pub newton_tol: f64,
    /// Iteration cap per Newton solve.
    pub newton_max_iter: usize,
    /// Step past an attachment root into the child component.
    pub entry_offset: f64,
    /// Radius for matching a located center to a sweep root.
    pub match_tol: f64,
    /// Minimum separation between distinct centers.
    pub distinct_tol: f64,
}

impl Default for PathFollowConfig {
    fn default() -> Self {
        Self {
            multiplier_steps: 64,
            newton_tol: 1e-12,
            newton_max_iter: 64,
            entry_offset: 1e-3,
            match_tol: 1e-8,
            distinct_tol: 1e-6,
        }
    }
}

impl PathFollowConfig {
    pub fn validate(&self) -> Result<(), NumericsError> {
        let bad = |msg: &str| Err(NumericsError::InvalidConfig(msg.to_string()));
        if self.multiplier_steps == 0 || self.newton_max_iter == 0 {
            return bad("step and iteration counts must be positive");
        }
        if !(self.newton_tol > 0.0 && self.newton_tol < self.entry_offset && self.entry_offset < 1.0)
        {
            return bad("need 0 < newton_tol < entry_offset < 1");
        }
        if !(self.match_tol > 0.0 && self.distinct_tol > 2.0 * self.match_tol) {
            return bad("need distinct_tol > 2 * match_tol > 0");
        }
        Ok(())
    }
}

/// A located superattracting parameter.
#[derive(Debug, Clone, PartialEq)]
pub struct Center {
    pub c: Complex64,
    /// Primitive period of the critical orbit at `c`.
    pub period: u64,
    /// Chain that produced this center; `None` for sweep-found roots.
    pub address: Option<SatelliteAddress>,
    /// `|Q_period(c)|` at acceptance.
    pub residual: f64,
}

impl Center {
    pub(crate) fn main_cardioid() -> Self {
        Self {
            c: Complex64::new(0.0, 0.0),
            period: 1,
            address: Some(SatelliteAddress::empty()),
            residual: 0.0,
        }
    }
}

impl Serialize for Center {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut row = serializer.serialize_struct("Center", 5)?;
        row.serialize_field("re", &self.c.re)?;
        row.serialize_field("im", &self.c.im)?;
        row.serialize_field("period", &self.period)?;
        row.serialize_field("address", &self.address)?;
        row.serialize_field("residual", &self.residual)?;
        row.end()
    }
}
