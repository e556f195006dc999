//! Full sweep for period-`n` centers: all `2^(n-1)` roots of `Q_n` by
//! simultaneous Aberth-Ehrlich iteration, classified by primitive period.
//!
//! Updates are synchronous (every root steps from the same previous vector),
//! so rounds may be partitioned across worker threads without changing a
//! single bit of the result.

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::{poly, Center, NumericsError};
use crate::count;
use crate::exec;

#[derive(Debug, Clone)]
pub struct SweepConfig {
    /// Largest period the sweep will attempt (degree is `2^(n-1)`).
    pub max_period: u64,
    /// Cap on simultaneous-iteration rounds.
    pub max_rounds: usize,
    /// Convergence: every correction step below this.
    pub step_tol: f64,
    /// Residual threshold for primitive-period classification.
    pub period_tol: f64,
    /// Required pairwise separation of retained centers.
    pub distinct_tol: f64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            max_period: 14,
            max_rounds: 3000,
            step_tol: 1e-13,
            period_tol: 1e-9,
            distinct_tol: 1e-6,
        }
    }
}

/// Below this degree the per-round work is too small to pay for the
/// parallel dispatch.
const MIN_PARALLEL_DEGREE: usize = 1 << 8;

/// Sweep with the default execution mode (parallel when the `parallel`
/// feature is enabled and the degree is large enough to benefit).
pub fn all_centers_sweep(n: u64, cfg: &SweepConfig) -> Result<Vec<Center>, NumericsError> {
    run_sweep(n, cfg, true)
}

/// Sweep forced onto the sequential path; same results bit for bit.
pub fn all_centers_sweep_seq(n: u64, cfg: &SweepConfig) -> Result<Vec<Center>, NumericsError> {
    run_sweep(n, cfg, false)
}

fn run_sweep(n: u64, cfg: &SweepConfig, parallel: bool) -> Result<Vec<Center>, NumericsError> {
    if n == 0 {
        return Err(NumericsError::ZeroPeriod);
    }
    if n > cfg.max_period {
        return Err(NumericsError::SweepLimit { n, limit: cfg.max_period });
    }
    if n == 1 {
        return Ok(vec![Center {
            c: Complex64::new(0.0, 0.0),
            period: 1,
            address: None,
            residual: 0.0,
        }]);
    }

    let degree = 1usize << (n - 1);
    // equally spaced on |c| = 2 plus a fixed irrational offset so the start
    // never shares the symmetries of the root set
    let offset = 0.5 * (5f64.sqrt() - 1.0);
    let mut roots: Vec<Complex64> = (0..degree)
        .map(|k| {
            Complex64::from_polar(
                2.0,
                std::f64::consts::TAU * k as f64 / degree as f64 + offset,
            )
        })
        .collect();

    let parallel = parallel && degree >= MIN_PARALLEL_DEGREE;
    let mut converged = false;
    for _ in 0..cfg.max_rounds {
        let updates: Vec<(Complex64, f64)> = if parallel {
            exec::map_indices(degree, |i| aberth_step(i, &roots, n))
        } else {
            exec::map_indices_seq(degree, |i| aberth_step(i, &roots, n))
        };
        let mut max_step: f64 = 0.0;
        for (i, &(next, step)) in updates.iter().enumerate() {
            if !next.is_finite() {
                return Err(NumericsError::SweepNonConvergence { rounds: cfg.max_rounds });
            }
            roots[i] = next;
            max_step = max_step.max(step);
        }
        if max_step <= cfg.step_tol {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(NumericsError::SweepNonConvergence { rounds: cfg.max_rounds });
    }

    // polish, classify by primitive period, keep exact period n
    let mut retained = Vec::new();
    for &root in &roots {
        let c = poly::polish_center(n, root, cfg.period_tol, 16)?;
        if poly::primitive_period(c, n, cfg.period_tol) == n {
            let (q, _) = poly::critical_poly(n, c)?;
            retained.push(Center { c, period: n, address: None, residual: q.norm() });
        }
    }
    retained.sort_by(|a, b| {
        a.c.re.total_cmp(&b.c.re).then_with(|| a.c.im.total_cmp(&b.c.im))
    });

    for (i, a) in retained.iter().enumerate() {
        for b in &retained[i + 1..] {
            if (a.c - b.c).norm() <= cfg.distinct_tol {
                return Err(NumericsError::SweepIndistinct { tol: cfg.distinct_tol });
            }
        }
    }
    let expected = count::total_component_count(n)?
        .to_u64()
        .ok_or_else(|| NumericsError::InvalidConfig("component count exceeds u64".into()))?;
    if retained.len() as u64 != expected {
        return Err(NumericsError::SweepCountMismatch {
            n,
            expected,
            found: retained.len() as u64,
        });
    }
    Ok(retained)
}

/// One synchronous Aberth-Ehrlich correction for root `i`.
fn aberth_step(i: usize, roots: &[Complex64], n: u64) -> (Complex64, f64) {
    let c = roots[i];
    let ratio = poly::newton_ratio(n, c);
    let mut repulsion = Complex64::new(0.0, 0.0);
    for (j, &other) in roots.iter().enumerate() {
        if j != i {
            repulsion += 1.0 / (c - other);
        }
    }
    let denom = 1.0 - ratio * repulsion;
    let step = if denom.norm_sqr() < 1e-24 { ratio } else { ratio / denom };
    (c - step, step.norm())
}
