use serde::{Deserialize, Serialize};

use super::conjugation::conj_unchecked;
use crate::algebra::{expect_dim, mul_unchecked, AlgebraSpec, Element, PairView};
use crate::error::{AlgebraError, Result};
use crate::scalar::{Scalar, ONE, ZERO};

/// Symmetric coefficient matrix of the norm, `N(X) = Σ C_ij x_i x_j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormForm {
    dim: usize,
    c: Vec<Scalar>,
}

impl NormForm {
    /// The form of `family(p, q)` in unit coordinates:
    /// `C₀₀ = 1`, `Cᵢᵢ = q`, `C₀ᵢ = −p/2`, `Cᵢⱼ = p²/4` (i ≠ j, both ≥ 1).
    ///
    /// Dimension 16 is in pair coordinates, where the form is
    /// `N(a₁ − (p/2)a₂) − D·N(a₂)`, i.e. `C₂ ⊗ C₈`.
    pub fn for_params(p: Scalar, q: Scalar, dim: usize) -> Result<Self> {
        crate::algebra::Family::from_dim(dim)?;
        if dim == 16 {
            let outer = Self::for_params(p, q, 2)?;
            let inner = Self::for_params(p, q, 8)?;
            let mut c = vec![ZERO; 256];
            for (a, b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                for i in 0..8 {
                    for j in 0..8 {
                        c[(8 * a + i) * 16 + 8 * b + j] = outer.get(a, b) * inner.get(i, j);
                    }
                }
            }
            return Ok(NormForm { dim, c });
        }
        let mut c = vec![p * p / 4.0; dim * dim];
        for i in 0..dim {
            c[i * dim + i] = q;
            c[i] = -p / 2.0;
            c[i * dim] = -p / 2.0;
        }
        c[0] = ONE;
        Ok(NormForm { dim, c })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.c[i * self.dim + j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// `Σ C_ij x_i x_j`.
    pub fn eval(&self, x: &Element) -> Scalar {
        assert_eq!(x.dim(), self.dim, "norm form dimension mismatch");
        let xs = x.coeffs();
        let mut acc = ZERO;
        for i in 0..self.dim {
            for j in 0..self.dim {
                acc += self.get(i, j) * xs[i] * xs[j];
            }
        }
        acc
    }

    /// Leading `m × m` block.
    pub fn leading(&self, m: usize) -> Vec<Vec<Scalar>> {
        (0..m)
            .map(|i| (0..m).map(|j| self.get(i, j)).collect())
            .collect()
    }
}

pub fn norm_form(spec: &AlgebraSpec) -> NormForm {
    NormForm::for_params(spec.p(), spec.q(), spec.dim()).expect("spec dimension is valid")
}

/// `N(X)`, evaluated in closed form from the norm coefficients.
pub fn norm(spec: &AlgebraSpec, x: &Element) -> Result<Scalar> {
    expect_dim(spec, x)?;
    Ok(norm_unchecked(spec, x))
}

pub(crate) fn norm_unchecked(spec: &AlgebraSpec, x: &Element) -> Scalar {
    let (p, q) = (spec.p(), spec.q());
    match spec.dim() {
        16 => {
            let half = spec.half().expect("sedenion spec has a half");
            let pair = PairView::from_coords(x).expect("even dimension");
            let shifted = &pair.first - &pair.second.scale(p / 2.0);
            norm_unchecked(half, &shifted) - spec.d() * norm_unchecked(half, &pair.second)
        }
        _ => {
            let xs = x.coeffs();
            let sum = xs[1..].iter().fold(ZERO, |a, c| a + c);
            let squares = xs[1..].iter().fold(ZERO, |a, c| a + c * c);
            xs[0] * xs[0] - p * xs[0] * sum + q * squares + p * p / 4.0 * (sum * sum - squares)
        }
    }
}

fn checked_norm(spec: &AlgebraSpec, x: &Element) -> Result<Scalar> {
    let n = norm(spec, x)?;
    if n.norm() <= spec.tol() {
        return Err(AlgebraError::DegenerateNorm {
            magnitude: n.norm(),
        });
    }
    Ok(n)
}

/// `X⁻¹ = X̄ / N(X)`.
pub fn inverse(spec: &AlgebraSpec, x: &Element) -> Result<Element> {
    let n = checked_norm(spec, x)?;
    Ok(conj_unchecked(spec, x).scale(n.inv()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Solve `B·X = A`.
    Left,
    /// Solve `Y·B = A`.
    Right,
}

/// `X = B̄A / N(B)` for [`Side::Left`], `Y = AB̄ / N(B)` for [`Side::Right`].
pub fn solve(spec: &AlgebraSpec, b: &Element, a: &Element, side: Side) -> Result<Element> {
    expect_dim(spec, a)?;
    let n = checked_norm(spec, b)?;
    let b_bar = conj_unchecked(spec, b);
    let prod = match side {
        Side::Left => mul_unchecked(spec, &b_bar, a),
        Side::Right => mul_unchecked(spec, a, &b_bar),
    };
    Ok(prod.scale(n.inv()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_spec, multiply, Branch, Family};
    use crate::scalar::real;

    fn spec(f: Family, p: f64, q: f64) -> AlgebraSpec {
        make_spec(f, real(p), real(q), Branch::Upper).unwrap()
    }

    #[test]
    fn form_blocks() {
        let (p, q) = (Scalar::new(0.6, 0.1), Scalar::new(-0.3, 2.0));
        let f = NormForm::for_params(p, q, 8).unwrap();
        assert!(f.is_symmetric());
        assert_eq!(f.get(0, 0), ONE);
        assert_eq!(f.get(3, 3), q);
        assert_eq!(f.get(0, 5), -p / 2.0);
        assert_eq!(f.get(6, 2), p * p / 4.0);
        assert!(NormForm::for_params(p, q, 16).unwrap().is_symmetric());
    }

    #[test]
    fn closed_form_matches_matrix() {
        for family in [
            Family::Quadratic,
            Family::Quaternion,
            Family::Octonion,
            Family::Sedenion,
        ] {
            let s = make_spec(
                family,
                Scalar::new(0.45, -0.2),
                Scalar::new(0.8, 0.6),
                Branch::Upper,
            )
            .unwrap();
            let x = Element::new(
                (0..s.dim())
                    .map(|i| Scalar::new((i as f64).sin(), (1.5 * i as f64).cos()))
                    .collect(),
            )
            .unwrap();
            let a = norm(&s, &x).unwrap();
            let b = norm_form(&s).eval(&x);
            assert!((a - b).norm() < 1e-12, "{family:?}");
        }
    }

    #[test]
    fn unit_norm_and_quadratic_formula() {
        let (p, q) = (0.35, 1.7);
        let s = spec(Family::Quadratic, p, q);
        assert_eq!(norm(&s, &Element::unit(2, 0).unwrap()).unwrap(), ONE);
        let (x0, x1) = (1.25, -0.5);
        let n = norm(&s, &Element::from_real(&[x0, x1]).unwrap()).unwrap();
        assert!((n.re - (x0 * x0 - p * x0 * x1 + q * x1 * x1)).abs() < 1e-15);
    }

    #[test]
    fn hamilton_norm_is_sum_of_squares() {
        let s = spec(Family::Quaternion, 0.0, 1.0);
        let n = norm(&s, &Element::from_real(&[1.0, 2.0, 3.0, 4.0]).unwrap()).unwrap();
        assert_eq!(n, real(30.0));
    }

    #[test]
    fn inverse_cases() {
        let s = spec(Family::Quadratic, 0.0, 1.0);
        let e0 = Element::unit(2, 0).unwrap();
        assert_eq!(inverse(&s, &e0).unwrap(), e0);
        let e1 = Element::unit(2, 1).unwrap();
        assert_eq!(inverse(&s, &e1).unwrap(), -&e1);
        let dual = spec(Family::Quadratic, 0.0, 0.0);
        assert!(matches!(
            inverse(&dual, &e1),
            Err(AlgebraError::DegenerateNorm { .. })
        ));
    }

    #[test]
    fn solve_both_sides() {
        let s = spec(Family::Quaternion, 0.0, 1.0);
        let e1 = Element::unit(4, 1).unwrap();
        let e3 = Element::unit(4, 3).unwrap();
        let x = solve(&s, &e1, &e3, Side::Left).unwrap();
        assert!(multiply(&s, &e1, &x).unwrap().approx_eq(&e3, 1e-15));
        let y = solve(&s, &e1, &e3, Side::Right).unwrap();
        assert!(multiply(&s, &y, &e1).unwrap().approx_eq(&e3, 1e-15));
        let a = Element::from_real(&[0.5, -1.0, 2.0, 0.25]).unwrap();
        assert_eq!(
            solve(&s, &Element::unit(4, 0).unwrap(), &a, Side::Left).unwrap(),
            a
        );
    }

    #[test]
    fn solve_degenerate() {
        let s = spec(Family::Octonion, 0.0, 0.0);
        let r = solve(
            &s,
            &Element::unit(8, 1).unwrap(),
            &Element::unit(8, 0).unwrap(),
            Side::Left,
        );
        assert!(matches!(r, Err(AlgebraError::DegenerateNorm { .. })));
    }
}
