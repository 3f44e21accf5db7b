//! Bracketed bisection used for every implicitly defined threshold.

use thiserror::Error;

/// Absolute tolerance used for all thresholds.
pub const DEFAULT_TOL: f64 = 1e-10;

const MAX_ITER: usize = 200;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BisectError {
    #[error("degenerate bracket [{0}, {0}]")]
    DegenerateBracket(f64),
    #[error("bracket [{lo}, {hi}] is reversed or not finite")]
    InvalidBracket { lo: f64, hi: f64 },
    #[error("tolerance {0} must be positive and finite")]
    InvalidTolerance(f64),
    #[error("difference does not change sign on [{lo}, {hi}] (f = {f_lo}, {f_hi})")]
    NotBracketed { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },
    #[error("difference is not monotone on [{lo}, {hi}]: samples {samples:?}")]
    NonMonotone { lo: f64, hi: f64, samples: [f64; 3] },
    #[error("difference is not finite at {0}")]
    NonFinite(f64),
}

fn eval<F: Fn(f64) -> f64>(f: &F, x: f64) -> Result<f64, BisectError> {
    let y = f(x);
    if y.is_finite() {
        Ok(y)
    } else {
        Err(BisectError::NonFinite(x))
    }
}

/// Root of a monotone `difference` on `bracket` to within `tol`.
///
/// The endpoints must straddle zero. Before iterating, the difference is
/// sampled at both ends and the midpoint, and a non-monotone pattern is
/// rejected. An exact zero at either endpoint is returned as is.
pub fn bisect_threshold<F>(difference: F, bracket: (f64, f64), tol: f64) -> Result<f64, BisectError>
where
    F: Fn(f64) -> f64,
{
    let (mut lo, mut hi) = bracket;
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(BisectError::InvalidTolerance(tol));
    }
    if lo == hi {
        return Err(BisectError::DegenerateBracket(lo));
    }
    if !(lo < hi && lo.is_finite() && hi.is_finite()) {
        return Err(BisectError::InvalidBracket { lo, hi });
    }
    let f_lo = eval(&difference, lo)?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    let f_hi = eval(&difference, hi)?;
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(BisectError::NotBracketed { lo, hi, f_lo, f_hi });
    }
    let f_mid = eval(&difference, 0.5 * (lo + hi))?;
    let rising = f_lo <= f_mid && f_mid <= f_hi;
    let falling = f_lo >= f_mid && f_mid >= f_hi;
    if !(rising || falling) {
        return Err(BisectError::NonMonotone {
            lo,
            hi,
            samples: [f_lo, f_mid, f_hi],
        });
    }

    let lo_negative = f_lo < 0.0;
    for _ in 0..MAX_ITER {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = eval(&difference, mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Like [`bisect_threshold`], but a difference that keeps one sign over the
/// bracket means the threshold does not exist there and yields `Ok(None)`.
pub fn find_threshold<F>(difference: F, bracket: (f64, f64), tol: f64) -> Result<Option<f64>, BisectError>
where
    F: Fn(f64) -> f64,
{
    match bisect_threshold(difference, bracket, tol) {
        Ok(x) => Ok(Some(x)),
        Err(BisectError::NotBracketed { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_linear_root() {
        let r = bisect_threshold(|x| x - 0.3, (0.0, 1.0), DEFAULT_TOL).unwrap();
        assert!((r - 0.3).abs() <= DEFAULT_TOL);
    }

    #[test]
    fn decreasing_difference() {
        let r = bisect_threshold(|x| 2.0_f64.sqrt() - x, (1.0, 2.0), 1e-12).unwrap();
        assert!((r - 2.0_f64.sqrt()).abs() <= 1e-12);
    }

    #[test]
    fn degenerate_bracket_is_an_error() {
        assert_eq!(
            bisect_threshold(|x| x, (0.4, 0.4), DEFAULT_TOL),
            Err(BisectError::DegenerateBracket(0.4))
        );
        assert!(matches!(
            bisect_threshold(|x| x, (1.0, 0.0), DEFAULT_TOL),
            Err(BisectError::InvalidBracket { .. })
        ));
        assert!(matches!(
            bisect_threshold(|x| x, (0.0, 1.0), 0.0),
            Err(BisectError::InvalidTolerance(_))
        ));
    }

    #[test]
    fn missing_sign_change_is_absent() {
        assert_eq!(find_threshold(|x| x + 1.0, (0.0, 1.0), DEFAULT_TOL), Ok(None));
        assert!(matches!(
            bisect_threshold(|x| x + 1.0, (0.0, 1.0), DEFAULT_TOL),
            Err(BisectError::NotBracketed { .. })
        ));
    }

    #[test]
    fn non_monotone_pattern_is_diagnosed() {
        // Changes sign but dips below both endpoints at the midpoint.
        let f = |x: f64| x - 0.25 - 2.0 * (std::f64::consts::PI * x).sin();
        assert!(matches!(
            bisect_threshold(f, (0.0, 1.0), DEFAULT_TOL),
            Err(BisectError::NonMonotone { .. })
        ));
    }

    #[test]
    fn exact_endpoint_roots() {
        assert_eq!(bisect_threshold(|x| x, (0.0, 1.0), DEFAULT_TOL), Ok(0.0));
        assert_eq!(bisect_threshold(|x| x - 1.0, (0.0, 1.0), DEFAULT_TOL), Ok(1.0));
    }

    #[test]
    fn non_finite_difference() {
        assert!(matches!(
            bisect_threshold(|x| if x > 0.7 { f64::NAN } else { x - 0.9 }, (0.0, 1.0), DEFAULT_TOL),
            Err(BisectError::NonFinite(_))
        ));
    }
}
