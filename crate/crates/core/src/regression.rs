//! Ordinary least squares on a line, and the log-log power-law fit built on it.

use crate::error::{Error, Result};
use crate::math::ln;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    /// Coefficient of determination (1 when every point lies on the line).
    pub r2: f64,
}

/// OLS fit of `y = slope * x + intercept`.
pub fn least_squares<I>(points: I) -> Result<LineFit>
where
    I: IntoIterator<Item = (f64, f64)> + Clone,
{
    let (mut n, mut sx, mut sy) = (0.0, 0.0, 0.0);
    for (x, y) in points.clone() {
        n += 1.0;
        sx += x;
        sy += y;
    }
    if n < 2.0 {
        return Err(Error::Fit { reason: "need at least two points" });
    }
    let (mx, my) = (sx / n, sy / n);
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in points {
        let (dx, dy) = (x - mx, y - my);
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if sxx == 0.0 {
        return Err(Error::Fit { reason: "all x values coincide" });
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let r2 = if syy == 0.0 { 1.0 } else { (sxy * sxy) / (sxx * syy) };
    Ok(LineFit { slope, intercept, r2 })
}

/// Fits `y ≈ C x^k` by OLS on `(ln x, ln y)`. Non-positive points are an error.
pub fn power_law<I>(points: I) -> Result<LineFit>
where
    I: IntoIterator<Item = (f64, f64)> + Clone,
{
    if points.clone().into_iter().any(|(x, y)| !(x > 0.0 && y > 0.0)) {
        return Err(Error::Fit { reason: "log-log fit needs positive coordinates" });
    }
    least_squares(points.into_iter().map(|(x, y)| (ln(x), ln(y))).collect::<alloc::vec::Vec<_>>())
}
