//! The critical-orbit polynomial `Q_n(c) = f_c^n(0)`.
//!
//! `Q_1 = c` and `Q_{j+1} = Q_j^2 + c`; its roots are exactly the
//! superattracting centers of period dividing `n`.

use num_complex::Complex64;

use super::NumericsError;
use crate::count;

/// Orbit magnitudes past this are reported as overflow.
pub const ORBIT_OVERFLOW_LIMIT: f64 = 1e150;

/// `Q_n(c)` together with `dQ_n/dc`, by the recursion
/// `dQ_{j+1} = 2 Q_j dQ_j + 1`.
pub fn critical_poly(n: u64, c: Complex64) -> Result<(Complex64, Complex64), NumericsError> {
    if n == 0 {
        return Err(NumericsError::ZeroPeriod);
    }
    let mut q = c;
    let mut dq = Complex64::new(1.0, 0.0);
    for step in 1..n {
        dq = 2.0 * q * dq + 1.0;
        q = q * q + c;
        if q.norm_sqr() > ORBIT_OVERFLOW_LIMIT * ORBIT_OVERFLOW_LIMIT {
            return Err(NumericsError::Overflow { step: step + 1 });
        }
    }
    Ok((q, dq))
}

/// Newton ratio `Q_n(c) / Q_n'(c)` with an escape shortcut: once the orbit
/// passes the escape threshold, every further squaring halves the ratio, so
/// the tail is folded in as a power of one half. Keeps the sweep finite on
/// far-out starting points whose orbit values would overflow `f64`.
pub(crate) fn newton_ratio(n: u64, c: Complex64) -> Complex64 {
    const ESCAPE_SQR: f64 = 1e20;
    let mut q = c;
    let mut dq = Complex64::new(1.0, 0.0);
    for step in 1..n {
        dq = 2.0 * q * dq + 1.0;
        q = q * q + c;
        if q.norm_sqr() > ESCAPE_SQR {
            let remaining = (n - 1 - step) as i32;
            return (q / dq) * 0.5f64.powi(remaining);
        }
    }
    q / dq
}

/// Smallest divisor `d` of `n` with `|Q_d(c)| <= tol`.
///
/// Meaningful when `|Q_n(c)| <= tol`, which guarantees `d = n` qualifies;
/// distinguishes exact period `n` from proper divisors, since `Q_n` vanishes
/// at every center of period dividing `n`.
pub fn primitive_period(c: Complex64, n: u64, tol: f64) -> u64 {
    for d in count::divisors(n).unwrap_or_default() {
        if let Ok((q, _)) = critical_poly(d, c) {
            if q.norm() <= tol {
                return d;
            }
        }
    }
    n
}

/// Newton-polish `c` onto the nearby root of `Q_n`.
pub(crate) fn polish_center(
    n: u64,
    start: Complex64,
    tol: f64,
    max_iter: usize,
) -> Result<Complex64, NumericsError> {
    let mut c = start;
    for _ in 0..max_iter {
        let (q, dq) = critical_poly(n, c)?;
        if dq.norm_sqr() == 0.0 {
            break;
        }
        let step = q / dq;
        c -= step;
        if !c.is_finite() {
            return Err(NumericsError::NonConvergence { stage: "center polish", max_iter });
        }
        if step.norm() <= 1e-16 * (1.0 + c.norm()) {
            break;
        }
    }
    let (q, _) = critical_poly(n, c)?;
    if q.norm() <= tol {
        Ok(c)
    } else {
        Err(NumericsError::NonConvergence { stage: "center polish", max_iter })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn critical_poly_examples() {
        assert_eq!(critical_poly(3, c(0.0, 0.0)).unwrap(), (c(0.0, 0.0), c(1.0, 0.0)));
        // Q_2 = c^2 + c, Q_2' = 2c + 1, by hand at c = -1
        assert_eq!(critical_poly(2, c(-1.0, 0.0)).unwrap(), (c(0.0, 0.0), c(-1.0, 0.0)));
        assert_eq!(critical_poly(1, c(0.25, 0.0)).unwrap(), (c(0.25, 0.0), c(1.0, 0.0)));
        assert_eq!(critical_poly(0, c(0.0, 0.0)), Err(NumericsError::ZeroPeriod));
    }

    #[test]
    fn overflow_is_reported() {
        match critical_poly(64, c(3.0, 0.0)) {
            Err(NumericsError::Overflow { step }) => assert!(step >= 2),
            other => panic!("expected overflow, got {other:?}"),
        }
    }

    #[test]
    fn primitive_period_examples() {
        assert_eq!(primitive_period(c(0.0, 0.0), 6, 1e-12), 1);
        assert_eq!(primitive_period(c(-1.0, 0.0), 4, 1e-12), 2);
        assert_eq!(primitive_period(c(-0.122561, 0.744862), 3, 1e-5), 3);
    }

    #[test]
    fn escape_guarded_ratio_matches_exact_ratio_inside() {
        // where no escape happens the two evaluations agree exactly
        for n in [2u64, 5, 8] {
            for &(re, im) in &[(-1.0, 0.0), (0.1, 0.2), (-0.5, 0.5)] {
                let (q, dq) = critical_poly(n, c(re, im)).unwrap();
                let ratio = newton_ratio(n, c(re, im));
                assert!((ratio - q / dq).norm() < 1e-15);
            }
        }
    }
}
