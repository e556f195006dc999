//! End-to-end check that the combinatorial count matches the plane.
//!
//! For a period `n`, every satellite address is walked to its center; the
//! centers must be pairwise distinct, carry residuals within tolerance, have
//! primitive period `n`, and (when the sweep cross-check is on) each match
//! exactly one root of the full `Q_n` sweep. The verdict is true only if all
//! checks pass and the located count equals `M(n)`.

use num_traits::ToPrimitive;
use serde::Serialize;

use super::sweep::{all_centers_sweep, SweepConfig};
use super::{continuation, Center, NumericsError, PathFollowConfig};
use crate::address::{self, SatelliteAddress};
use crate::count;
use crate::exec;

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub n: u64,
    /// `M(n)` from the divisor recursion.
    pub expected: u64,
    /// Number of centers actually located.
    pub located: u64,
    pub verdict: bool,
    /// Located centers in canonical (re, im) order.
    pub centers: Vec<Center>,
    /// Human-readable descriptions of every failed check.
    pub failures: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub path: PathFollowConfig,
    /// Sweep cross-check configuration; `None` disables the sweep.
    pub sweep: Option<SweepConfig>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { path: PathFollowConfig::default(), sweep: Some(SweepConfig::default()) }
    }
}

/// Locate the centers of many addresses; independent walks, run in parallel
/// when the `parallel` feature is enabled. The first failure (in address
/// order) is returned.
pub fn locate_addresses(
    addresses: &[SatelliteAddress],
    cfg: &PathFollowConfig,
) -> Result<Vec<Center>, NumericsError> {
    exec::map_indices(addresses.len(), |i| continuation::locate_center(&addresses[i], cfg))
        .into_iter()
        .collect()
}

/// Sequential twin of [`locate_addresses`]; same results bit for bit.
pub fn locate_addresses_seq(
    addresses: &[SatelliteAddress],
    cfg: &PathFollowConfig,
) -> Result<Vec<Center>, NumericsError> {
    exec::map_indices_seq(addresses.len(), |i| continuation::locate_center(&addresses[i], cfg))
        .into_iter()
        .collect()
}

pub fn verify_molecule_count(
    n: u64,
    opts: &VerifyOptions,
) -> Result<VerifyReport, NumericsError> {
    opts.path.validate()?;
    if let Some(sweep_cfg) = &opts.sweep {
        if n > sweep_cfg.max_period {
            return Err(NumericsError::SweepLimit { n, limit: sweep_cfg.max_period });
        }
    }
    let expected = count::molecule_count_recursive(n)?
        .to_u64()
        .ok_or_else(|| NumericsError::InvalidConfig("molecule count exceeds u64".into()))?;
    let addresses = address::enumerate_addresses(n)?;
    let mut centers = locate_addresses(&addresses, &opts.path)?;

    let mut failures = Vec::new();
    for center in &centers {
        if center.residual > opts.path.newton_tol {
            failures.push(format!(
                "residual {:.3e} above tolerance {:.3e} for address {}",
                center.residual,
                opts.path.newton_tol,
                center.address.as_ref().expect("located centers carry addresses"),
            ));
        }
    }
    for (i, a) in centers.iter().enumerate() {
        for b in &centers[i + 1..] {
            let dist = (a.c - b.c).norm();
            if dist <= opts.path.distinct_tol {
                failures.push(format!(
                    "centers of {} and {} only {dist:.3e} apart",
                    a.address.as_ref().expect("located"),
                    b.address.as_ref().expect("located"),
                ));
            }
        }
    }
    if let Some(sweep_cfg) = &opts.sweep {
        match all_centers_sweep(n, sweep_cfg) {
            Ok(roots) => {
                for center in &centers {
                    let hits = roots
                        .iter()
                        .filter(|r| (r.c - center.c).norm() <= opts.path.match_tol)
                        .count();
                    if hits != 1 {
                        failures.push(format!(
                            "center of {} matches {hits} sweep roots, expected exactly 1",
                            center.address.as_ref().expect("located"),
                        ));
                    }
                }
            }
            Err(NumericsError::SweepCountMismatch { n, expected, found }) => {
                failures.push(format!(
                    "sweep found {found} period-{n} centers, expected {expected}"
                ));
            }
            Err(other) => return Err(other),
        }
    }

    centers.sort_by(|a, b| a.c.re.total_cmp(&b.c.re).then_with(|| a.c.im.total_cmp(&b.c.im)));
    let located = centers.len() as u64;
    let verdict = failures.is_empty() && located == expected;
    Ok(VerifyReport { n, expected, located, verdict, centers, failures })
}
