use crate::algebra::{expect_dim, levi_civita, mul_unchecked, AlgebraSpec, Element};
use crate::error::{AlgebraError, Result};
use crate::scalar::{Scalar, ZERO};

/// Commutator and anticommutator of two imaginary units.
#[derive(Debug, Clone, PartialEq)]
pub struct Bracket {
    pub commutator: Element,
    pub anticommutator: Element,
}

fn check_imaginary(spec: &AlgebraSpec, indices: &[usize]) -> Result<()> {
    let dim = spec.dim();
    if !matches!(dim, 2 | 4 | 8) {
        return Err(AlgebraError::UnsupportedDimension(dim));
    }
    for &index in indices {
        if index == 0 || index >= dim {
            return Err(AlgebraError::IndexOutOfRange { index, dim });
        }
    }
    Ok(())
}

fn delta(i: usize, j: usize) -> f64 {
    if i == j {
        1.0
    } else {
        0.0
    }
}

/// Closed forms for imaginary units `e_i`, `e_j`:
///
/// ```text
/// [e_i, e_j] = 2 ε_ijk √(−D) ((p/2) e_0 + e_k)
/// {e_i, e_j} = 2 ((δ_ij D − p²/4) e_0 − (p/2)(e_i + e_j))
/// ```
pub fn bracket(spec: &AlgebraSpec, i: usize, j: usize) -> Result<Bracket> {
    check_imaginary(spec, &[i, j])?;
    let dim = spec.dim();
    let (p, d, s) = (spec.p(), spec.d(), spec.sqrt_neg_d());

    let mut commutator = vec![ZERO; dim];
    if let Some((k, eps)) = (1..dim)
        .map(|k| (k, f64::from(levi_civita(i, j, k, dim))))
        .find(|&(_, eps)| eps != 0.0)
    {
        commutator[0] = eps * s * p;
        commutator[k] = 2.0 * eps * s;
    }

    let mut anticommutator = vec![ZERO; dim];
    anticommutator[0] = 2.0 * (d * delta(i, j) - p * p / 4.0);
    anticommutator[i] -= p;
    anticommutator[j] -= p;

    Ok(Bracket {
        commutator: Element::new(commutator)?,
        anticommutator: Element::new(anticommutator)?,
    })
}

/// `(X, Y, Z) = (XY)Z − X(YZ)`.
pub fn associator(spec: &AlgebraSpec, x: &Element, y: &Element, z: &Element) -> Result<Element> {
    for e in [x, y, z] {
        expect_dim(spec, e)?;
    }
    Ok(associator_unchecked(spec, x, y, z))
}

pub(crate) fn associator_unchecked(
    spec: &AlgebraSpec,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Element {
    let xy_z = mul_unchecked(spec, &mul_unchecked(spec, x, y), z);
    let x_yz = mul_unchecked(spec, x, &mul_unchecked(spec, y, z));
    &xy_z - &x_yz
}

/// The contracted closed form of `(e_i, e_j, e_k)`:
///
/// ```text
/// −D ( −(p/2)(δ_ij − δ_jk − Σ ε_ijm ε_mkr + Σ ε_jkm ε_imr) e_0
///      + δ_jk e_i − δ_ij e_k + Σ_r (Σ_m ε_ijm ε_mkr − ε_jkm ε_imr) e_r )
/// ```
///
/// The `e_0` sums run over both `m` and `r`.
pub fn associator_formula(spec: &AlgebraSpec, i: usize, j: usize, k: usize) -> Result<Element> {
    if !matches!(spec.dim(), 4 | 8) {
        return Err(AlgebraError::UnsupportedDimension(spec.dim()));
    }
    check_imaginary(spec, &[i, j, k])?;
    let dim = spec.dim();
    let eps = |a, b, c| f64::from(levi_civita(a, b, c, dim));

    let mut out = vec![ZERO; dim];
    let mut eps_total = 0.0;
    for (r, slot) in out.iter_mut().enumerate().skip(1) {
        let contraction: f64 = (1..dim)
            .map(|m| eps(i, j, m) * eps(m, k, r) - eps(j, k, m) * eps(i, m, r))
            .sum();
        eps_total += contraction;
        *slot = Scalar::from(delta(j, k) * delta(i, r) - delta(i, j) * delta(k, r) + contraction);
    }
    out[0] = -spec.p() / 2.0 * (delta(i, j) - delta(j, k) - eps_total);
    let factor = -spec.d();
    Element::new(out.into_iter().map(|c| c * factor).collect())
}
