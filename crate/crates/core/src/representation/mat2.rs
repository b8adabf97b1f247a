use serde::{Deserialize, Serialize};

use crate::algebra::{expect_dim, mul_unchecked, AlgebraSpec, Element, PairView};
use crate::error::{AlgebraError, Result};
use crate::scalar::{Scalar, ONE};

/// A 2×2 matrix whose entries lie in a common coefficient algebra.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Mat2Repr", into = "Mat2Repr")]
pub struct Mat2 {
    entries: [[Element; 2]; 2],
}

#[derive(Serialize, Deserialize)]
struct Mat2Repr {
    coeff_dim: usize,
    entries: [[Element; 2]; 2],
}

impl TryFrom<Mat2Repr> for Mat2 {
    type Error = AlgebraError;

    fn try_from(r: Mat2Repr) -> Result<Self> {
        let m = Mat2::new(r.entries)?;
        if m.coeff_dim() != r.coeff_dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: r.coeff_dim,
                found: m.coeff_dim(),
            });
        }
        Ok(m)
    }
}

impl From<Mat2> for Mat2Repr {
    fn from(m: Mat2) -> Self {
        Mat2Repr {
            coeff_dim: m.coeff_dim(),
            entries: m.entries,
        }
    }
}

impl Mat2 {
    pub fn new(entries: [[Element; 2]; 2]) -> Result<Self> {
        let dim = entries[0][0].dim();
        for e in entries.iter().flatten() {
            if e.dim() != dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: dim,
                    found: e.dim(),
                });
            }
        }
        Ok(Mat2 { entries })
    }

    /// Matrix of scalars over the one-dimensional coefficient algebra.
    pub fn from_scalars(m: [[Scalar; 2]; 2]) -> Self {
        let e = |s: Scalar| Element::scalar(1, s);
        Mat2 {
            entries: [[e(m[0][0]), e(m[0][1])], [e(m[1][0]), e(m[1][1])]],
        }
    }

    pub fn identity(coeff_dim: usize) -> Self {
        let one = Element::scalar(coeff_dim, ONE);
        let zero = Element::zero(coeff_dim);
        Mat2 {
            entries: [[one.clone(), zero.clone()], [zero, one]],
        }
    }

    pub fn zero(coeff_dim: usize) -> Self {
        let z = Element::zero(coeff_dim);
        Mat2 {
            entries: [[z.clone(), z.clone()], [z.clone(), z]],
        }
    }

    /// `diag(u, −u)`.
    pub fn diagonal(u: &Element) -> Self {
        let z = Element::zero(u.dim());
        Mat2 {
            entries: [[u.clone(), z.clone()], [z, -u]],
        }
    }

    /// `(0 u; v 0)`.
    pub fn anti_diagonal(u: &Element, v: &Element) -> Self {
        let z = Element::zero(u.dim());
        Mat2 {
            entries: [[z.clone(), u.clone()], [v.clone(), z]],
        }
    }

    pub fn coeff_dim(&self) -> usize {
        self.entries[0][0].dim()
    }

    pub fn entries(&self) -> &[[Element; 2]; 2] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> &Element {
        &self.entries[row][col]
    }

    /// Entry `(row, col)` of a scalar matrix.
    pub fn scalar_entry(&self, row: usize, col: usize) -> Scalar {
        self.entries[row][col].coeff(0)
    }

    pub fn scale(&self, s: Scalar) -> Mat2 {
        self.map(|e| e.scale(s))
    }

    pub fn add(&self, other: &Mat2) -> Mat2 {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Mat2) -> Mat2 {
        self.zip(other, |a, b| a - b)
    }

    /// Largest entry residual, relative as in [`Element::residual`].
    pub fn residual(&self, other: &Mat2) -> f64 {
        self.entries
            .iter()
            .flatten()
            .zip(other.entries.iter().flatten())
            .map(|(a, b)| a.residual(b))
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Mat2, tol: f64) -> bool {
        self.coeff_dim() == other.coeff_dim() && self.residual(other) <= tol
    }

    /// Ordinary row-by-column product, each term ordered `a_ik · b_kj`.
    pub fn mul_standard(&self, other: &Mat2, coeff_spec: &AlgebraSpec) -> Result<Mat2> {
        self.check(coeff_spec)?;
        other.check(coeff_spec)?;
        let m = |x: &Element, y: &Element| mul_unchecked(coeff_spec, x, y);
        let (a, b) = (&self.entries, &other.entries);
        let c = |i: usize, j: usize| &m(&a[i][0], &b[0][j]) + &m(&a[i][1], &b[1][j]);
        Ok(Mat2 {
            entries: [[c(0, 0), c(0, 1)], [c(1, 0), c(1, 1)]],
        })
    }

    fn check(&self, coeff_spec: &AlgebraSpec) -> Result<()> {
        self.entries
            .iter()
            .flatten()
            .try_for_each(|e| expect_dim(coeff_spec, e))
    }

    fn map(&self, f: impl Fn(&Element) -> Element) -> Mat2 {
        let [[a, b], [c, d]] = &self.entries;
        Mat2 {
            entries: [[f(a), f(b)], [f(c), f(d)]],
        }
    }

    fn zip(&self, other: &Mat2, f: impl Fn(&Element, &Element) -> Element) -> Mat2 {
        let [[a, b], [c, d]] = &self.entries;
        let [[w, x], [y, z]] = &other.entries;
        Mat2 {
            entries: [[f(a, w), f(b, x)], [f(c, y), f(d, z)]],
        }
    }
}

/// The product with the factor orders
///
/// ```text
/// c11 = a11·b11 + b21·a12    c12 = b12·a11 + a12·b22
/// c21 = b11·a21 + a22·b21    c22 = a21·b12 + b22·a22
/// ```
///
/// which reduces to the ordinary product when entries commute.
pub fn mat_mul_nonstandard(a: &Mat2, b: &Mat2, coeff_spec: &AlgebraSpec) -> Result<Mat2> {
    a.check(coeff_spec)?;
    b.check(coeff_spec)?;
    let m = |x: &Element, y: &Element| mul_unchecked(coeff_spec, x, y);
    let [[a11, a12], [a21, a22]] = &a.entries;
    let [[b11, b12], [b21, b22]] = &b.entries;
    Ok(Mat2 {
        entries: [
            [&m(a11, b11) + &m(b21, a12), &m(b12, a11) + &m(a12, b22)],
            [&m(b11, a21) + &m(a22, b21), &m(a21, b12) + &m(b22, a22)],
        ],
    })
}

/// Acts on the row `(a₁, a₂)` from the right: `(a₁m₁₁ + m₂₁a₂, m₁₂a₁ + a₂m₂₂)`.
pub fn act_row(pair: &PairView, m: &Mat2, coeff_spec: &AlgebraSpec) -> Result<PairView> {
    expect_dim(coeff_spec, &pair.first)?;
    expect_dim(coeff_spec, &pair.second)?;
    m.check(coeff_spec)?;
    let mul = |x: &Element, y: &Element| mul_unchecked(coeff_spec, x, y);
    let (a1, a2) = (&pair.first, &pair.second);
    let [[m11, m12], [m21, m22]] = &m.entries;
    PairView::new(&mul(a1, m11) + &mul(m21, a2), &mul(m12, a1) + &mul(a2, m22))
}
