//! Thin float helpers so the rest of the crate reads like `std` code.

#[inline]
pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub(crate) fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

#[inline]
pub(crate) fn ceil(x: f64) -> f64 {
    libm::ceil(x)
}

#[inline]
pub(crate) fn round(x: f64) -> f64 {
    libm::round(x)
}

/// `⌈x⌉` that ignores representation noise just above an integer, so
/// `0.01 * 1000.0` counts as 10 rather than 11.
pub(crate) fn ceil_count(x: f64) -> usize {
    let r = round(x);
    if (x - r).abs() <= 1e-9 * r.abs().max(1.0) {
        r as usize
    } else {
        ceil(x) as usize
    }
}
