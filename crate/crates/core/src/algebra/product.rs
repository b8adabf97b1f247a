use super::{AlgebraSpec, Element, PairView};
use crate::analysis::conjugation::conj_unchecked;
use crate::error::{AlgebraError, Result};

/// `e_i·e_j` read from the structure table.
pub fn basis_product(spec: &AlgebraSpec, i: usize, j: usize) -> Result<Element> {
    let dim = spec.dim();
    for index in [i, j] {
        if index >= dim {
            return Err(AlgebraError::IndexOutOfRange { index, dim });
        }
    }
    Ok(spec.table().entry(i, j))
}

pub(crate) fn expect_dim(spec: &AlgebraSpec, x: &Element) -> Result<()> {
    if x.dim() != spec.dim() {
        return Err(AlgebraError::DimensionMismatch {
            expected: spec.dim(),
            found: x.dim(),
        });
    }
    Ok(())
}

/// `X·Y`, the bilinear extension of the unit products. Dimension 16 goes
/// through the doubling product on octonion halves.
pub fn multiply(spec: &AlgebraSpec, x: &Element, y: &Element) -> Result<Element> {
    expect_dim(spec, x)?;
    expect_dim(spec, y)?;
    Ok(mul_unchecked(spec, x, y))
}

pub(crate) fn mul_unchecked(spec: &AlgebraSpec, x: &Element, y: &Element) -> Element {
    match spec.half() {
        Some(half) if spec.dim() == 16 => {
            let a = PairView::from_coords(x).expect("even dimension");
            let b = PairView::from_coords(y).expect("even dimension");
            double_product(half, &a, &b).to_coords()
        }
        _ => spec.table().contract(x, y),
    }
}

/// The generalized Cayley-Dickson product on pairs over `parent.half()`:
///
/// ```text
/// (a₁, a₂)(a₃, a₄) = ( a₁a₃ − (p/2)[a₁,a₄] − (p/2)a₂(a₃ − ā₃) − q ā₄a₂ + (p²/2)[a₂,a₄],
///                      a₄a₁ + a₂ā₃ − (p/2)(a₂ā₄ + a₄a₂) )
/// ```
pub fn cd_product(parent: &AlgebraSpec, a: &PairView, b: &PairView) -> Result<PairView> {
    let half = parent
        .half()
        .ok_or(AlgebraError::UnsupportedDimension(parent.dim()))?;
    for pair in [a, b] {
        expect_dim(half, &pair.first)?;
        expect_dim(half, &pair.second)?;
    }
    Ok(double_product(half, a, b))
}

pub(crate) fn double_product(half: &AlgebraSpec, a: &PairView, b: &PairView) -> PairView {
    let (p, q) = (half.p(), half.q());
    let mul = |x: &Element, y: &Element| mul_unchecked(half, x, y);
    let conj = |x: &Element| conj_unchecked(half, x);
    let commutator = |x: &Element, y: &Element| &mul(x, y) - &mul(y, x);

    let (a1, a2) = (&a.first, &a.second);
    let (a3, a4) = (&b.first, &b.second);
    let a3_bar = conj(a3);
    let a4_bar = conj(a4);
    let half_p = p / 2.0;

    let first = &(&(&(&mul(a1, a3) - &commutator(a1, a4).scale(half_p))
        - &mul(a2, &(a3 - &a3_bar)).scale(half_p))
        - &mul(&a4_bar, a2).scale(q))
        + &commutator(a2, a4).scale(p * p / 2.0);
    let second =
        &(&mul(a4, a1) + &mul(a2, &a3_bar)) - &(&mul(a2, &a4_bar) + &mul(a4, a2)).scale(half_p);
    PairView { first, second }
}
