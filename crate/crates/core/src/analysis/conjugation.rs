use crate::algebra::{expect_dim, AlgebraSpec, Element, PairView};
use crate::error::{AlgebraError, Result};
use crate::scalar::ZERO;

/// `X̄ = x₀e₀ + Σ xᵢ(−p e₀ − eᵢ)`; dimension 16 uses the pair form recursively.
pub fn conjugate(spec: &AlgebraSpec, x: &Element) -> Result<Element> {
    expect_dim(spec, x)?;
    Ok(conj_unchecked(spec, x))
}

pub(crate) fn conj_unchecked(spec: &AlgebraSpec, x: &Element) -> Element {
    match spec.dim() {
        1 => x.clone(),
        16 => {
            let half = spec.half().expect("sedenion spec has a half");
            let pair = PairView::from_coords(x).expect("even dimension");
            pair_conj(half, &pair).to_coords()
        }
        _ => {
            let xs = x.coeffs();
            let sum = xs[1..].iter().fold(ZERO, |acc, c| acc + c);
            let mut out: Vec<_> = xs.iter().map(|c| -c).collect();
            out[0] = xs[0] - spec.p() * sum;
            Element::new(out).expect("finite")
        }
    }
}

fn pair_conj(half: &AlgebraSpec, pair: &PairView) -> PairView {
    let (a1, a2) = (&pair.first, &pair.second);
    let a2_bar = conj_unchecked(half, a2);
    PairView {
        first: &conj_unchecked(half, a1) - &(a2 + &a2_bar).scale(half.p() / 2.0),
        second: -a2,
    }
}

/// Pair-form involution `b̄ = ā₁ − (p/2)(a₂ + ā₂) − a₂ẽ` over `parent.half()`.
pub fn conjugate_pair(parent: &AlgebraSpec, pair: &PairView) -> Result<PairView> {
    let half = parent
        .half()
        .ok_or(AlgebraError::UnsupportedDimension(parent.dim()))?;
    for e in [&pair.first, &pair.second] {
        if e.dim() != half.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: half.dim(),
                found: e.dim(),
            });
        }
    }
    Ok(pair_conj(half, pair))
}
