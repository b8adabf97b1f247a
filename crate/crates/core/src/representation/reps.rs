use crate::algebra::{make_spec, AlgebraSpec, Branch, Element, Family, PairView};
use crate::error::Result;
use crate::scalar::{Scalar, I, ONE, ZERO};

use super::Mat2;

/// How a pair of half-dimension elements becomes a row of matrix entries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Embedding {
    /// The halves are the entries themselves.
    Halves,
    /// Each half `c₀ + c₁e₁ ∈ C(p,q)` maps to the complex number `c₀ + c₁λ`,
    /// where `λ` is a root of `λ² + pλ + q = 0`.
    QuadraticRoot { lambda: Scalar },
}

/// One matrix per unit `e₀..e_{d−1}` of a represented algebra.
#[derive(Debug, Clone)]
pub struct RepSet {
    pub coeff_spec: AlgebraSpec,
    pub mats: Vec<Mat2>,
    pub labels: Vec<String>,
    pub embedding: Embedding,
}

impl RepSet {
    pub fn dim(&self) -> usize {
        self.mats.len()
    }

    /// Maps a pair of the represented algebra to a row of matrix entries.
    pub fn embed_pair(&self, pair: &PairView) -> Result<PairView> {
        match self.embedding {
            Embedding::Halves => Ok(pair.clone()),
            Embedding::QuadraticRoot { lambda } => {
                let phi = |c: &Element| Element::scalar(1, c.coeff(0) + c.coeff(1) * lambda);
                PairView::new(phi(&pair.first), phi(&pair.second))
            }
        }
    }

    /// `Σ_m x_m R(e_m)`.
    pub fn linear(&self, x: &Element) -> Mat2 {
        x.coeffs()
            .iter()
            .zip(&self.mats)
            .filter(|(c, _)| **c != ZERO)
            .fold(Mat2::zero(self.coeff_spec.dim()), |acc, (c, m)| {
                acc.add(&m.scale(*c))
            })
    }
}

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("e{i}")).collect()
}

fn scalar_spec() -> AlgebraSpec {
    make_spec(Family::Real, ZERO, ONE, Branch::Upper).expect("finite parameters")
}

/// Representation of `Q(p,q)` by complex 2×2 matrices with `√D`, `√(−D)`
/// on the principal branch.
pub fn rep_quadratic_quaternion(p: Scalar, q: Scalar, branch: Branch) -> Result<RepSet> {
    Ok(quaternion_rep_for(&make_spec(
        Family::Quaternion,
        p,
        q,
        branch,
    )?))
}

/// Representation of `Q(p,q)` using the roots and branch carried by `spec`.
///
/// `σ` is the branch sign. `u₁` and the embedding use `λ = −p/2 + σ√D`;
/// the `±i` slots of `u₃` use `σ·(i√D/√(−D))`, which equals `σ` exactly
/// when `√D = −i√(−D)`. For `D = 0` that ratio is undefined and `σ` is used.
pub fn quaternion_rep_for(spec: &AlgebraSpec) -> RepSet {
    let (p, q) = (spec.p(), spec.q());
    let (sqrt_d, sqrt_neg_d) = (spec.sqrt_d(), spec.sqrt_neg_d());
    let sigma = spec.branch().sign();
    let sigma3 = if sqrt_neg_d.norm() > spec.tol() {
        sigma * (I * sqrt_d / sqrt_neg_d).re.signum()
    } else {
        sigma
    };
    let half_p = p / 2.0;
    let lambda = -half_p + sigma * sqrt_d;

    let u1 = Mat2::from_scalars([
        [lambda, ZERO],
        [-sigma * p * sqrt_d, -half_p - sigma * sqrt_d],
    ]);
    let u2 = Mat2::from_scalars([[ZERO, ONE], [-q, -p]]);
    let s3i = sigma3 * I;
    let u3 = Mat2::from_scalars([
        [(-ONE - s3i) * half_p, -s3i],
        [s3i * (p * p / 2.0 - q), (-ONE + s3i) * half_p],
    ]);
    RepSet {
        coeff_spec: scalar_spec(),
        mats: vec![Mat2::identity(1), u1, u2, u3],
        labels: labels(4),
        embedding: Embedding::QuadraticRoot { lambda },
    }
}

/// `diag(u, −u)` for the imaginary units of the half, `(0 1; −1 0)` for the
/// adjoined unit, `(0 u; u 0)` for its products.
fn doubled_rep(half: Family) -> RepSet {
    let coeff_spec = make_spec(half, ZERO, ONE, Branch::Upper).expect("finite parameters");
    let n = half.dim();
    let unit = |i| Element::unit(n, i).expect("index below dimension");
    let one = unit(0);
    let mut mats = vec![Mat2::identity(n)];
    mats.extend((1..n).map(|i| Mat2::diagonal(&unit(i))));
    mats.push(Mat2::anti_diagonal(&one, &-&one));
    mats.extend((1..n).map(|i| Mat2::anti_diagonal(&unit(i), &unit(i))));
    RepSet {
        coeff_spec,
        mats,
        labels: labels(2 * n),
        embedding: Embedding::Halves,
    }
}

/// Representation of `O(0,1)` over the quaternions.
pub fn rep_octonion() -> RepSet {
    doubled_rep(Family::Quaternion)
}

/// Representation of `S(0,1)` over the octonions.
pub fn rep_sedenion() -> RepSet {
    doubled_rep(Family::Octonion)
}

/// `1, i, j, k, l, m, n, o` for the units of a coefficient algebra.
pub fn coefficient_unit_name(index: usize) -> Option<&'static str> {
    ["1", "i", "j", "k", "l", "m", "n", "o"].get(index).copied()
}
