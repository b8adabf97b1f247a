//! Linear maps between pair coordinates `(a₁, a₂)` and unit coordinates.
//!
//! For a doubled algebra of dimension `2n` the pair `(a₁, a₂)` stands for
//! `a₁ + a₂·e_n`. Expanding `a₂·e_n` with the unit products gives, with
//! `s = √(−D)` and `Σ = a₂[1] + … + a₂[n−1]`:
//!
//! ```text
//! x_0     = a₁[0] + (p/2)(s − p/2)·Σ
//! x_i     = a₁[i] − (p/2)·a₂[i]          (1 ≤ i < n)
//! x_n     = a₂[0] − (p/2)·Σ
//! x_{n+i} = s·a₂[i]                       (1 ≤ i < n)
//! ```
//!
//! which is the quaternion map for `n = 2`, the octonion map for `n = 4` and
//! the identity for `n = 1`. Dimension 16 has no formula-driven unit basis;
//! its coordinates are the pair coordinates, so the map is the identity
//! there and only defined at `p = 0`.

use super::{AlgebraSpec, Element, PairView};
use crate::error::{AlgebraError, Result};
use crate::scalar::ZERO;

fn check_shape(spec: &AlgebraSpec, half_dim: usize) -> Result<()> {
    if spec.dim() < 2 {
        return Err(AlgebraError::UnsupportedDimension(spec.dim()));
    }
    if spec.dim() != 2 * half_dim {
        return Err(AlgebraError::DimensionMismatch {
            expected: spec.dim() / 2,
            found: half_dim,
        });
    }
    if spec.dim() == 16 && spec.p().norm() > spec.tol() {
        return Err(AlgebraError::UnsupportedTransform);
    }
    Ok(())
}

/// Unit coordinates of the pair `(a₁, a₂)`.
pub fn pair_to_units(spec: &AlgebraSpec, pair: &PairView) -> Result<Element> {
    let n = pair.half_dim();
    check_shape(spec, n)?;
    if spec.dim() == 16 {
        return Ok(pair.to_coords());
    }
    let (a, b) = (pair.first.coeffs(), pair.second.coeffs());
    let half_p = spec.p() / 2.0;
    let s = spec.sqrt_neg_d();
    let sigma = b[1..].iter().fold(ZERO, |acc, c| acc + c);

    let mut x = vec![ZERO; 2 * n];
    x[0] = a[0] + half_p * (s - half_p) * sigma;
    for i in 1..n {
        x[i] = a[i] - half_p * b[i];
        x[n + i] = s * b[i];
    }
    x[n] = b[0] - half_p * sigma;
    Ok(Element::from_vec(x))
}

/// Inverse of [`pair_to_units`]; fails when `√(−D)` vanishes.
pub fn units_to_pair(spec: &AlgebraSpec, x: &Element) -> Result<PairView> {
    super::product::expect_dim(spec, x)?;
    check_shape(spec, x.dim() / 2)?;
    if spec.dim() == 16 {
        return PairView::from_coords(x);
    }
    let n = x.dim() / 2;
    let xs = x.coeffs();
    let half_p = spec.p() / 2.0;
    let s = spec.sqrt_neg_d();
    if n > 1 && s.norm() <= spec.tol() {
        return Err(AlgebraError::SingularParameter {
            magnitude: s.norm(),
        });
    }

    let mut a = vec![ZERO; n];
    let mut b = vec![ZERO; n];
    for i in 1..n {
        b[i] = xs[n + i] / s;
        a[i] = xs[i] + half_p * b[i];
    }
    let sigma = b[1..].iter().fold(ZERO, |acc, c| acc + c);
    b[0] = xs[n] + half_p * sigma;
    a[0] = xs[0] - half_p * (s - half_p) * sigma;
    Ok(PairView {
        first: Element::from_vec(a),
        second: Element::from_vec(b),
    })
}
