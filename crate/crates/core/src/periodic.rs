//! Periodic algebras `C(−2ρ^k cos(πk/2), ρ^{2k})` for `ρ ∈ {1, i}`, the
//! continuous power law of `e₁`, and the matrix unit sets built from them.

use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{make_spec, AlgebraSpec, Branch, Element, Family, Roots};
use crate::error::{AlgebraError, Result};
use crate::representation::{Embedding, Mat2, RepSet};
use crate::scalar::{principal_pow, real, Scalar, I, ONE, ZERO};

/// Distance from an even integer below which `k` counts as a pole.
pub const POLE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rho {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "i")]
    I,
}

impl Rho {
    pub fn value(self) -> Scalar {
        match self {
            Rho::One => ONE,
            Rho::I => I,
        }
    }
}

impl fmt::Display for Rho {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rho::One => "1",
            Rho::I => "i",
        })
    }
}

impl FromStr for Rho {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "1" => Ok(Rho::One),
            "i" => Ok(Rho::I),
            _ => Err(format!("rho must be `1` or `i`, got `{s}`")),
        }
    }
}

/// Fails with [`AlgebraError::PoleAtEvenK`] when `k` is within
/// [`POLE_TOL`] of an even integer.
pub fn check_pole(k: f64) -> Result<()> {
    let r = k.rem_euclid(2.0);
    if r.min(2.0 - r) < POLE_TOL || !k.is_finite() {
        return Err(AlgebraError::PoleAtEvenK {
            k,
            tolerance: POLE_TOL,
        });
    }
    Ok(())
}

fn rho_pow(rho: Rho, x: f64) -> Scalar {
    principal_pow(rho.value(), real(x))
}

/// `(p, q) = (−2ρ^k cos(πk/2), ρ^{2k})`.
pub fn periodic_params(rho: Rho, k: f64) -> (Scalar, Scalar) {
    let p = -2.0 * rho_pow(rho, k) * (FRAC_PI_2 * k).cos();
    (p, rho_pow(rho, 2.0 * k))
}

/// The periodic algebra of the given family (`C` or `Q` in practice).
///
/// The roots are fixed analytically rather than on the principal branch:
/// `√(−D) = sin(πk/2)` for `ρ = 1`, `√(−D) = −i^k sin(πk/2)` for `ρ = i`,
/// and `√D = −i√(−D)`. With the lower branch these reproduce the closed-form
/// periodic representation matrices for every `k`.
pub fn periodic_spec(rho: Rho, k: f64, family: Family) -> Result<AlgebraSpec> {
    let (p, q) = periodic_params(rho, k);
    let s = real((FRAC_PI_2 * k).sin());
    let sqrt_neg_d = match rho {
        Rho::One => s,
        Rho::I => -rho_pow(rho, k) * s,
    };
    AlgebraSpec::with_roots(
        family,
        p,
        q,
        Roots::from_sqrt_neg_d(sqrt_neg_d),
        Branch::Lower,
    )
}

/// Coefficients `(a, b)` with `ω^θ = a + ω·b` for `ω = i^k`:
/// `a = cos(πkθ/2) − cot(πk/2)·sin(πkθ/2)`, `b = csc(πk/2)·sin(πkθ/2)`.
pub fn power_law(k: f64, theta: f64) -> Result<(Scalar, Scalar)> {
    check_pole(k)?;
    let (sk, ck) = (FRAC_PI_2 * k).sin_cos();
    let (st, ct) = (FRAC_PI_2 * k * theta).sin_cos();
    Ok((real(ct - ck / sk * st), real(st / sk)))
}

/// `e₁^θ` in `periodic_spec(rho, k)`:
/// `ρ^{kθ}[a·e₀ + ρ^{−k}·b·e₁]` with `(a, b)` from [`power_law`].
pub fn unit_power(rho: Rho, k: f64, theta: f64) -> Result<Element> {
    let (a, b) = power_law(k, theta)?;
    let scale = rho_pow(rho, k * theta);
    Element::new(vec![scale * a, scale * rho_pow(rho, -k) * b])
}

/// The two orthogonal forms of the periodic quaternion classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orthogonal {
    /// In `Q(0,1)`: `e_n^θ = e₀cos(πθ/2) + e_n sin(πθ/2)`.
    Q1,
    /// In `Q(0,−1)`: `e_n^θ = (cos(πθ/2) + i sin(πθ/2))(e₀cos(πθ/2) − i e_n sin(πθ/2))`.
    Qm1,
}

pub fn orthogonal_unit_power(n: usize, theta: f64, variant: Orthogonal) -> Result<Element> {
    if !(1..=3).contains(&n) {
        return Err(AlgebraError::IndexOutOfRange { index: n, dim: 4 });
    }
    let (s, c) = (FRAC_PI_2 * theta).sin_cos();
    let (a0, an) = match variant {
        Orthogonal::Q1 => (real(c), real(s)),
        Orthogonal::Qm1 => {
            let w = Scalar::new(c, s);
            (w * c, -I * s * w)
        }
    };
    let mut coeffs = vec![ZERO; 4];
    coeffs[0] = a0;
    coeffs[n] = an;
    Element::new(coeffs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PeriodicVariant {
    /// `Q(−2cos(πk/2), 1)`.
    U1,
    /// `Q(−1 − i^{2k}, i^{2k})`.
    Ui,
}

impl PeriodicVariant {
    pub fn rho(self) -> Rho {
        match self {
            PeriodicVariant::U1 => Rho::One,
            PeriodicVariant::Ui => Rho::I,
        }
    }
}

fn scalar_set(mats: [[[Scalar; 2]; 2]; 3], embedding: Embedding) -> RepSet {
    let coeff_spec = make_spec(Family::Real, ZERO, ONE, Branch::Upper).expect("finite parameters");
    let mut all = vec![Mat2::identity(1)];
    all.extend(mats.into_iter().map(Mat2::from_scalars));
    RepSet {
        coeff_spec,
        mats: all,
        labels: (0..4).map(|i| format!("e{i}")).collect(),
        embedding,
    }
}

/// The lower-branch representation matrices of the periodic quaternion
/// class, in closed form.
pub fn periodic_rep(variant: PeriodicVariant, k: f64) -> RepSet {
    match variant {
        PeriodicVariant::U1 => {
            let (s, c) = (FRAC_PI_2 * k).sin_cos();
            let (s, c) = (real(s), real(c));
            let lambda = c + I * s;
            scalar_set(
                [
                    [[lambda, ZERO], [2.0 * I * c * s, c - I * s]],
                    [[ZERO, ONE], [-ONE, 2.0 * c]],
                    [[(ONE - I) * c, I], [-I * (c * c - s * s), (ONE + I) * c]],
                ],
                Embedding::QuadraticRoot { lambda },
            )
        }
        PeriodicVariant::Ui => {
            let w = principal_pow(I, real(2.0 * k));
            let w_i = principal_pow(I, real(2.0 * k - 1.0));
            let pk = std::f64::consts::PI * k;
            scalar_set(
                [
                    [[ONE, ZERO], [w_i * pk.sin(), w]],
                    [[ZERO, ONE], [-w, ONE + w]],
                    [
                        [0.5 * (ONE - I) * (ONE + w), I],
                        [w_i * pk.cos(), 0.5 * (ONE + I) * (ONE + w)],
                    ],
                ],
                Embedding::QuadraticRoot { lambda: ONE },
            )
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Substituted {
    E1,
    Ei,
}

/// The unit matrices obtained from the periodic representations under
/// `k = θ = τ`.
pub fn substituted_units(variant: Substituted, tau: f64) -> Result<RepSet> {
    check_pole(tau)?;
    let (s, c) = (FRAC_PI_2 * tau).sin_cos();
    let (cot, csc) = (real(c / s), real(1.0 / s));
    let (s, c) = (real(s), real(c));
    let mats = match variant {
        Substituted::E1 => [
            [[I, ZERO], [2.0 * I * c, -I]],
            [[-cot, csc], [-csc, cot]],
            [[-I * cot, I * csc], [-I * csc + 2.0 * I * s, I * cot]],
        ],
        Substituted::Ei => {
            let i_tau = principal_pow(I, real(tau));
            [
                [[ONE, ZERO], [2.0 * i_tau * c, -ONE]],
                [[-I * cot, ONE + I * cot], [ONE - I * cot, I * cot]],
                [[-cot, -I + cot], [(-ONE + 2.0 * s * s) * (I + cot), cot]],
            ]
        }
    };
    Ok(scalar_set(mats, Embedding::Halves))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Derived {
    /// `e′_n = (e₍₁₎)_n ∨ i(e₍ᵢ₎)_n`.
    Hamilton,
    /// `σ_n = (e₍ᵢ₎)_n ∨ −i(e₍₁₎)_n`.
    Pauli,
}

/// The two candidate unit sets joined by "or" in the definitions.
#[derive(Debug, Clone)]
pub struct DerivedUnits {
    pub primary: RepSet,
    pub alternate: RepSet,
}

/// Multiplies `e₁..e₃` of a set by `s`, leaving `e₀ = I`.
pub fn scale_units(set: &RepSet, s: Scalar) -> RepSet {
    let mut out = set.clone();
    for m in out.mats.iter_mut().skip(1) {
        *m = m.scale(s);
    }
    out
}

pub fn derived_units(which: Derived, tau: f64) -> Result<DerivedUnits> {
    let e1 = substituted_units(Substituted::E1, tau)?;
    let ei = substituted_units(Substituted::Ei, tau)?;
    Ok(match which {
        Derived::Hamilton => DerivedUnits {
            alternate: scale_units(&ei, I),
            primary: e1,
        },
        Derived::Pauli => DerivedUnits {
            alternate: scale_units(&e1, -I),
            primary: ei,
        },
    })
}

fn mul(a: &Mat2, b: &Mat2, spec: &AlgebraSpec) -> Mat2 {
    a.mul_standard(b, spec).expect("scalar matrices")
}

/// Largest residual of `e₁² = e₂² = e₃² = e₁e₂e₃ = −I` under the ordinary
/// matrix product.
pub fn hamilton_residual(set: &RepSet) -> f64 {
    let spec = &set.coeff_spec;
    let minus_id = Mat2::identity(spec.dim()).scale(-ONE);
    let e = &set.mats;
    let triple = mul(&mul(&e[1], &e[2], spec), &e[3], spec);
    (1..4)
        .map(|n| mul(&e[n], &e[n], spec).residual(&minus_id))
        .chain(std::iter::once(triple.residual(&minus_id)))
        .fold(0.0, f64::max)
}

/// Largest residual of `σ_xσ_y − σ_yσ_x = 2iσ_z` and `σ_xσ_y + σ_yσ_x = 0`
/// over the cyclic triples of `(1, 2, 3)`.
pub fn pauli_residual(set: &RepSet) -> f64 {
    let spec = &set.coeff_spec;
    let s = &set.mats;
    let zero = Mat2::zero(spec.dim());
    [(1, 2, 3), (2, 3, 1), (3, 1, 2)]
        .into_iter()
        .flat_map(|(x, y, z)| {
            let xy = mul(&s[x], &s[y], spec);
            let yx = mul(&s[y], &s[x], spec);
            [
                xy.sub(&yx).residual(&s[z].scale(2.0 * I)),
                xy.add(&yx).residual(&zero),
            ]
        })
        .fold(0.0, f64::max)
}
