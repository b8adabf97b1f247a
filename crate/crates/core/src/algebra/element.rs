use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::scalar::{is_finite, Scalar, ZERO};

/// An algebra element as its coefficient vector in the unit basis `e₀..e_{d−1}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ElementRepr", into = "ElementRepr")]
pub struct Element {
    coeffs: Vec<Scalar>,
}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    match dim {
        1 | 2 | 4 | 8 | 16 => Ok(()),
        other => Err(AlgebraError::UnsupportedDimension(other)),
    }
}

impl Element {
    pub fn new(coeffs: Vec<Scalar>) -> Result<Self> {
        check_dim(coeffs.len())?;
        if !coeffs.iter().copied().all(is_finite) {
            return Err(AlgebraError::NonFinite("element coefficients"));
        }
        Ok(Element { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&x| Scalar::new(x, 0.0)).collect())
    }

    pub(crate) fn from_vec(coeffs: Vec<Scalar>) -> Self {
        debug_assert!(check_dim(coeffs.len()).is_ok());
        Element { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        Element::from_vec(vec![ZERO; dim])
    }

    /// The unit `e_index` of a `dim`-dimensional algebra.
    pub fn unit(dim: usize, index: usize) -> Result<Self> {
        check_dim(dim)?;
        if index >= dim {
            return Err(AlgebraError::IndexOutOfRange { index, dim });
        }
        let mut coeffs = vec![ZERO; dim];
        coeffs[index] = Scalar::new(1.0, 0.0);
        Ok(Element { coeffs })
    }

    /// `s·e₀`.
    pub fn scalar(dim: usize, s: Scalar) -> Self {
        let mut e = Element::zero(dim);
        e.coeffs[0] = s;
        e
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs[i]
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn scale(&self, s: Scalar) -> Element {
        Element::from_vec(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == ZERO)
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// `max|a_i − b_i| / max(1, max|a_i|, max|b_i|)`.
    pub fn residual(&self, other: &Element) -> f64 {
        assert_eq!(self.dim(), other.dim(), "residual of mismatched dimensions");
        let diff = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        diff / 1f64.max(self.max_abs()).max(other.max_abs())
    }

    pub fn approx_eq(&self, other: &Element, tol: f64) -> bool {
        self.dim() == other.dim() && self.residual(other) <= tol
    }

    /// Embeds into a larger algebra as the first half coordinates.
    pub fn embed(&self, dim: usize) -> Element {
        debug_assert!(dim >= self.dim());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(dim, ZERO);
        Element::from_vec(coeffs)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Element> for &Element {
            type Output = Element;

            fn $method(self, rhs: &Element) -> Element {
                assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
                Element::from_vec(
                    self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a $op b).collect(),
                )
            }
        }

        impl $trait for Element {
            type Output = Element;

            fn $method(self, rhs: Element) -> Element {
                &self $op &rhs
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element::from_vec(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for Element {
    type Output = Element;

    fn neg(self) -> Element {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    dim: usize,
    coeffs: Vec<[f64; 2]>,
}

impl From<Element> for ElementRepr {
    fn from(e: Element) -> Self {
        ElementRepr {
            dim: e.dim(),
            coeffs: e.coeffs.iter().map(|c| [c.re, c.im]).collect(),
        }
    }
}

impl TryFrom<ElementRepr> for Element {
    type Error = AlgebraError;

    fn try_from(r: ElementRepr) -> Result<Self> {
        if r.coeffs.len() != r.dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: r.dim,
                found: r.coeffs.len(),
            });
        }
        Element::new(
            r.coeffs
                .into_iter()
                .map(|[re, im]| Scalar::new(re, im))
                .collect(),
        )
    }
}

/// An element of a `2n`-dimensional algebra seen as the ordered pair
/// `(a₁, a₂)` of `n`-dimensional elements, i.e. `a₁ + a₂·ẽ` with `ẽ = (0, e₀)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairView {
    pub first: Element,
    pub second: Element,
}

impl PairView {
    pub fn new(first: Element, second: Element) -> Result<Self> {
        if first.dim() != second.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: first.dim(),
                found: second.dim(),
            });
        }
        Ok(PairView { first, second })
    }

    pub fn half_dim(&self) -> usize {
        self.first.dim()
    }

    /// `(e₀, 0)`.
    pub fn identity(half_dim: usize) -> Self {
        PairView {
            first: Element::scalar(half_dim, Scalar::new(1.0, 0.0)),
            second: Element::zero(half_dim),
        }
    }

    /// The adjoined unit `ẽ = (0, e₀)`.
    pub fn adjoined(half_dim: usize) -> Self {
        PairView {
            first: Element::zero(half_dim),
            second: Element::scalar(half_dim, Scalar::new(1.0, 0.0)),
        }
    }

    /// Concatenated coordinates `(a₁ | a₂)`.
    pub fn to_coords(&self) -> Element {
        let mut coeffs = self.first.coeffs.clone();
        coeffs.extend_from_slice(&self.second.coeffs);
        Element::from_vec(coeffs)
    }

    /// Splits `x` into its first and second halves.
    pub fn from_coords(x: &Element) -> Result<Self> {
        let dim = x.dim();
        if dim < 2 {
            return Err(AlgebraError::UnsupportedDimension(dim));
        }
        let (a, b) = x.coeffs.split_at(dim / 2);
        Ok(PairView {
            first: Element::from_vec(a.to_vec()),
            second: Element::from_vec(b.to_vec()),
        })
    }

    pub fn residual(&self, other: &PairView) -> f64 {
        self.to_coords().residual(&other.to_coords())
    }
}
