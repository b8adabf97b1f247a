use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::product::double_product;
use super::table::StructureTable;
use crate::error::{AlgebraError, Result};
use crate::scalar::{approx_eq, is_finite, principal_sqrt, Scalar, DEFAULT_TOL, I};

/// Algebra family, named by its dimension over the coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// The coefficient field itself; the base of the doubling chain.
    Real,
    /// `C(p,q)`, dimension 2.
    Quadratic,
    /// `Q(p,q)`, dimension 4.
    Quaternion,
    /// `O(p,q)`, dimension 8.
    Octonion,
    /// `S(p,q)`, dimension 16, defined only by doubling `O(p,q)`.
    Sedenion,
}

impl Family {
    pub fn dim(self) -> usize {
        match self {
            Family::Real => 1,
            Family::Quadratic => 2,
            Family::Quaternion => 4,
            Family::Octonion => 8,
            Family::Sedenion => 16,
        }
    }

    pub fn from_dim(dim: usize) -> Result<Self> {
        Ok(match dim {
            1 => Family::Real,
            2 => Family::Quadratic,
            4 => Family::Quaternion,
            8 => Family::Octonion,
            16 => Family::Sedenion,
            other => return Err(AlgebraError::UnsupportedDimension(other)),
        })
    }

    pub fn letter(self) -> char {
        match self {
            Family::Real => 'R',
            Family::Quadratic => 'C',
            Family::Quaternion => 'Q',
            Family::Octonion => 'O',
            Family::Sedenion => 'S',
        }
    }

    /// The family one doubling step down.
    pub fn half(self) -> Option<Family> {
        match self {
            Family::Real => None,
            Family::Quadratic => Some(Family::Real),
            Family::Quaternion => Some(Family::Quadratic),
            Family::Octonion => Some(Family::Quaternion),
            Family::Sedenion => Some(Family::Octonion),
        }
    }
}

/// Which root of `e² + p·e + q = 0` is taken where a `±` appears.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    #[default]
    Upper,
    Lower,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Upper => 1.0,
            Branch::Lower => -1.0,
        }
    }
}

/// A determination of `√D` and `√(−D)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Roots {
    pub sqrt_d: Scalar,
    pub sqrt_neg_d: Scalar,
}

impl Roots {
    /// Both roots on the principal branch.
    pub fn principal(d: Scalar) -> Self {
        Roots {
            sqrt_d: principal_sqrt(d),
            sqrt_neg_d: principal_sqrt(-d),
        }
    }

    /// Takes `√(−D)` as given and pairs it with `√D = −i·√(−D)`.
    pub fn from_sqrt_neg_d(sqrt_neg_d: Scalar) -> Self {
        Roots {
            sqrt_d: -I * sqrt_neg_d,
            sqrt_neg_d,
        }
    }

    fn validate(self, d: Scalar, tol: f64) -> Result<Self> {
        if !is_finite(self.sqrt_d) || !is_finite(self.sqrt_neg_d) {
            return Err(AlgebraError::NonFinite("roots"));
        }
        if !approx_eq(self.sqrt_d * self.sqrt_d, d, tol) {
            return Err(AlgebraError::InconsistentRoot {
                which: "sqrt_d",
                target: "D",
            });
        }
        if !approx_eq(self.sqrt_neg_d * self.sqrt_neg_d, -d, tol) {
            return Err(AlgebraError::InconsistentRoot {
                which: "sqrt_neg_d",
                target: "-D",
            });
        }
        Ok(self)
    }
}

/// A parameterized algebra together with its precomputed structure table.
///
/// Cloning is cheap: the table and the half-dimension spec are shared.
#[derive(Debug, Clone)]
pub struct AlgebraSpec {
    family: Family,
    p: Scalar,
    q: Scalar,
    d: Scalar,
    roots: Roots,
    branch: Branch,
    tol: f64,
    table: Arc<StructureTable>,
    half: Option<Arc<AlgebraSpec>>,
}

/// Builds `family(p, q)` with principal square roots.
pub fn make_spec(family: Family, p: Scalar, q: Scalar, branch: Branch) -> Result<AlgebraSpec> {
    let d = discriminant(p, q);
    AlgebraSpec::with_roots(family, p, q, Roots::principal(d), branch)
}

fn discriminant(p: Scalar, q: Scalar) -> Scalar {
    p * p / 4.0 - q
}

impl AlgebraSpec {
    /// Builds `family(p, q)` with an explicit root determination, which must
    /// square back to `D` and `−D` within the default tolerance.
    pub fn with_roots(
        family: Family,
        p: Scalar,
        q: Scalar,
        roots: Roots,
        branch: Branch,
    ) -> Result<AlgebraSpec> {
        if !is_finite(p) || !is_finite(q) {
            return Err(AlgebraError::NonFinite("parameters p, q"));
        }
        let d = discriminant(p, q);
        let roots = roots.validate(d, DEFAULT_TOL)?;
        Ok(Self::build(family, p, q, d, roots, branch, DEFAULT_TOL))
    }

    fn build(
        family: Family,
        p: Scalar,
        q: Scalar,
        d: Scalar,
        roots: Roots,
        branch: Branch,
        tol: f64,
    ) -> AlgebraSpec {
        let half = family
            .half()
            .map(|h| Arc::new(Self::build(h, p, q, d, roots, branch, tol)));
        let dim = family.dim();
        let table = match (&half, family) {
            (Some(h), Family::Sedenion) => StructureTable::from_products(dim, |i, j| {
                let a =
                    super::PairView::from_coords(&crate::Element::unit(dim, i).unwrap()).unwrap();
                let b =
                    super::PairView::from_coords(&crate::Element::unit(dim, j).unwrap()).unwrap();
                double_product(h, &a, &b).to_coords()
            }),
            _ => StructureTable::from_formula(p, q, roots.sqrt_neg_d, dim),
        };
        AlgebraSpec {
            family,
            p,
            q,
            d,
            roots,
            branch,
            tol,
            table: Arc::new(table),
            half,
        }
    }

    /// Same algebra with a different equality tolerance.
    pub fn with_tol(&self, tol: f64) -> AlgebraSpec {
        assert!(tol > 0.0, "tolerance must be positive");
        let mut spec = self.clone();
        spec.tol = tol;
        spec.half = self.half.as_ref().map(|h| Arc::new(h.with_tol(tol)));
        spec
    }

    /// Same parameters and roots, different family.
    pub fn with_family(&self, family: Family) -> AlgebraSpec {
        Self::build(
            family,
            self.p,
            self.q,
            self.d,
            self.roots,
            self.branch,
            self.tol,
        )
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn dim(&self) -> usize {
        self.family.dim()
    }

    pub fn p(&self) -> Scalar {
        self.p
    }

    pub fn q(&self) -> Scalar {
        self.q
    }

    /// `D = p²/4 − q`.
    pub fn d(&self) -> Scalar {
        self.d
    }

    pub fn sqrt_d(&self) -> Scalar {
        self.roots.sqrt_d
    }

    pub fn sqrt_neg_d(&self) -> Scalar {
        self.roots.sqrt_neg_d
    }

    pub fn roots(&self) -> Roots {
        self.roots
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn table(&self) -> &StructureTable {
        &self.table
    }

    /// The half-dimension algebra with the same parameters.
    pub fn half(&self) -> Option<&AlgebraSpec> {
        self.half.as_deref()
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}, {})",
            self.family.letter(),
            crate::scalar::format_scalar(self.p),
            crate::scalar::format_scalar(self.q)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::real;

    #[test]
    fn hamilton_parameters() {
        let s = make_spec(Family::Quaternion, real(0.0), real(1.0), Branch::Upper).unwrap();
        assert_eq!(s.d(), real(-1.0));
        assert_eq!(s.sqrt_neg_d(), real(1.0));
        assert_eq!(s.sqrt_d(), I);
        assert_eq!(s.dim(), 4);
        assert_eq!(s.half().unwrap().family(), Family::Quadratic);
        assert_eq!(s.to_string(), "Q(0, 1)");
    }

    #[test]
    fn roots_square_back() {
        for (p, q) in [(0.3, -2.0), (1.0, 0.25), (-1.5, 3.0)] {
            let s = make_spec(Family::Octonion, real(p), real(q), Branch::Upper).unwrap();
            assert!(approx_eq(s.sqrt_d() * s.sqrt_d(), s.d(), 1e-12));
            assert!(approx_eq(s.sqrt_neg_d() * s.sqrt_neg_d(), -s.d(), 1e-12));
        }
    }

    #[test]
    fn degenerate_discriminant_is_constructible() {
        let s = make_spec(Family::Quaternion, real(2.0), real(1.0), Branch::Upper).unwrap();
        assert_eq!(s.d(), real(0.0));
        assert_eq!(s.sqrt_neg_d(), real(0.0));
    }

    #[test]
    fn rejects_non_finite_and_bad_roots() {
        assert!(make_spec(
            Family::Quadratic,
            real(f64::INFINITY),
            real(1.0),
            Branch::Upper
        )
        .is_err());
        let bad = Roots {
            sqrt_d: real(1.0),
            sqrt_neg_d: real(1.0),
        };
        assert!(matches!(
            AlgebraSpec::with_roots(Family::Quaternion, real(0.0), real(1.0), bad, Branch::Upper),
            Err(AlgebraError::InconsistentRoot { .. })
        ));
    }

    #[test]
    fn analytic_root_pairing() {
        let r = Roots::from_sqrt_neg_d(real(-1.0));
        let s = AlgebraSpec::with_roots(Family::Quaternion, real(0.0), real(1.0), r, Branch::Lower)
            .unwrap();
        assert_eq!(s.sqrt_d(), I);
    }

    #[test]
    fn tolerance_propagates_to_half() {
        let s = make_spec(Family::Sedenion, real(0.0), real(1.0), Branch::Upper)
            .unwrap()
            .with_tol(1e-6);
        assert_eq!(s.half().unwrap().tol(), 1e-6);
        assert_eq!(s.half().unwrap().half().unwrap().tol(), 1e-6);
    }
}
