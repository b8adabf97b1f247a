//! Complex scalars and the tolerance helpers used throughout the crate.

use num_complex::Complex64;

/// Coefficient field element. Real algebras use zero imaginary parts.
pub type Scalar = Complex64;

/// Default relative tolerance for equality tests.
pub const DEFAULT_TOL: f64 = 1e-9;

pub const ZERO: Scalar = Scalar::new(0.0, 0.0);
pub const ONE: Scalar = Scalar::new(1.0, 0.0);
pub const I: Scalar = Scalar::new(0.0, 1.0);

pub fn real(x: f64) -> Scalar {
    Scalar::new(x, 0.0)
}

/// Principal square root with the cut on the negative real axis.
///
/// A negative zero imaginary part is treated as `+0`, so `sqrt(-1) = i`
/// regardless of how the `-1` was produced.
pub fn principal_sqrt(z: Scalar) -> Scalar {
    let im = if z.im == 0.0 { 0.0 } else { z.im };
    Scalar::new(z.re, im).sqrt()
}

/// `z^w` with the principal logarithm. `0^w` is `0` except `0^0 = 1`.
pub fn principal_pow(z: Scalar, w: Scalar) -> Scalar {
    if z == ZERO {
        return if w == ZERO { ONE } else { ZERO };
    }
    (w * z.ln()).exp()
}

pub fn is_finite(z: Scalar) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// `|a − b| ≤ tol · max(1, |a|, |b|)`.
pub fn approx_eq(a: Scalar, b: Scalar, tol: f64) -> bool {
    (a - b).norm() <= tol * 1f64.max(a.norm()).max(b.norm())
}

/// Treats `z` as real when `|im| < tol · (1 + |re|)`.
pub fn is_real(z: Scalar, tol: f64) -> bool {
    z.im.abs() < tol * (1.0 + z.re.abs())
}

/// Rounds to 12 significant digits and flushes magnitudes below `1e-12`
/// to zero, so rendered output is stable against last-bit noise.
fn tidy(x: f64) -> f64 {
    if x.abs() < 1e-12 {
        return 0.0;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// Renders `z` as `a`, `bi` or `a+bi` (`i` and `-i` for unit imaginary parts).
pub fn format_scalar(z: Scalar) -> String {
    let (re, im) = (tidy(z.re), tidy(z.im));
    let imag = |v: f64| match v {
        1.0 => "i".to_string(),
        -1.0 => "-i".to_string(),
        _ => format!("{v}i"),
    };
    match (re == 0.0, im == 0.0) {
        (_, true) => format!("{re}"),
        (true, false) => imag(im),
        (false, false) if im > 0.0 => format!("{re}+{}", imag(im)),
        (false, false) => format!("{re}{}", imag(im)),
    }
}
