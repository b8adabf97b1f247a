use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use super::norm::{norm_form, NormForm};
use crate::algebra::AlgebraSpec;
use crate::error::{AlgebraError, Result};
use crate::scalar::{is_real, Scalar, ONE, ZERO};

/// Band for "real" parameters and "positive" `−D`.
pub const CLASSIFY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassKind {
    /// Real parameters with `−D > 0`: positive definite norm.
    Division,
    /// Nondegenerate but indefinite (or complex-parameter) norm.
    Split,
    /// `−D = 0`: the norm degenerates and a nilideal appears.
    NilDegenerate,
}

impl ClassKind {
    pub fn name(self) -> &'static str {
        match self {
            ClassKind::Division => "division",
            ClassKind::Split => "split",
            ClassKind::NilDegenerate => "nil-degenerate",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub kind: ClassKind,
    /// Leading principal minors of the norm coefficient matrix.
    pub minors: Vec<Scalar>,
}

/// Classifies `(p, q)` using the octonion-size norm form.
pub fn classify(p: Scalar, q: Scalar) -> Classification {
    classify_in(p, q, 8).expect("dimension 8 is valid")
}

/// Classifies `(p, q)` with the minors of the `dim`-dimensional norm form.
pub fn classify_in(p: Scalar, q: Scalar, dim: usize) -> Result<Classification> {
    let form = NormForm::for_params(p, q, dim)?;
    let neg_d = q - p * p / 4.0;
    let real_params = is_real(p, CLASSIFY_TOL) && is_real(q, CLASSIFY_TOL);
    let kind = if neg_d.norm() <= CLASSIFY_TOL {
        ClassKind::NilDegenerate
    } else if real_params && neg_d.re > CLASSIFY_TOL {
        ClassKind::Division
    } else {
        ClassKind::Split
    };
    Ok(Classification {
        kind,
        minors: leading_minors(&form),
    })
}

/// Determinants of the leading `1×1, …, d×d` blocks.
pub fn leading_minors(form: &NormForm) -> Vec<Scalar> {
    (1..=form.dim())
        .map(|m| determinant(form.leading(m)))
        .collect()
}

fn determinant(mut a: Vec<Vec<Scalar>>) -> Scalar {
    let n = a.len();
    let mut det = ONE;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))
            .expect("non-empty range");
        if a[pivot][col] == ZERO {
            return ZERO;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            let (top, bottom) = a.split_at_mut(row);
            for (target, v) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *target -= factor * v;
            }
        }
    }
    det
}

/// Inertia of a real symmetric form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Signature of the norm form of a real-parameter spec.
pub fn signature(spec: &AlgebraSpec) -> Result<Signature> {
    if !is_real(spec.p(), CLASSIFY_TOL) || !is_real(spec.q(), CLASSIFY_TOL) {
        return Err(AlgebraError::ComplexParameters);
    }
    let form = norm_form(spec);
    let n = form.dim();
    let m = DMatrix::from_fn(n, n, |i, j| form.get(i, j).re);
    let eigen = SymmetricEigen::new(m).eigenvalues;
    let scale = eigen.iter().fold(1.0f64, |acc, v| acc.max(v.abs()));
    let band = CLASSIFY_TOL * scale;
    let mut sig = Signature {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    for &v in eigen.iter() {
        if v > band {
            sig.positive += 1;
        } else if v < -band {
            sig.negative += 1;
        } else {
            sig.zero += 1;
        }
    }
    Ok(sig)
}

/// Norm-equivalence test: two real forms of the same size are congruent
/// exactly when their signatures agree.
pub fn norms_equivalent(a: &AlgebraSpec, b: &AlgebraSpec) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(AlgebraError::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(signature(a)? == signature(b)?)
}
