use crate::algebra::Element;
use crate::scalar::{Scalar, ONE, ZERO};

/// Cyclic triples `ijk` with `ε_ijk = +1`. The quaternion subalgebra uses the first.
pub const OCTONION_TRIPLES: [[usize; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 7, 6],
    [2, 4, 6],
    [2, 5, 7],
    [3, 4, 7],
    [3, 6, 5],
];

fn triples_for(dim: usize) -> &'static [[usize; 3]] {
    match dim {
        8 => &OCTONION_TRIPLES,
        4 => &OCTONION_TRIPLES[..1],
        _ => &[],
    }
}

/// `ε_ijk` for the imaginary units of a `dim`-dimensional algebra: `+1` on
/// even permutations of a stored cycle, `−1` on odd ones, `0` otherwise.
pub fn levi_civita(i: usize, j: usize, k: usize, dim: usize) -> i8 {
    let t = (i, j, k);
    for &[a, b, c] in triples_for(dim) {
        if t == (a, b, c) || t == (b, c, a) || t == (c, a, b) {
            return 1;
        }
        if t == (b, a, c) || t == (a, c, b) || t == (c, b, a) {
            return -1;
        }
    }
    0
}

/// `e_i·e_j` from the defining rules:
///
/// ```text
/// e_0 e_j = e_j,  e_i e_0 = e_i,  e_i² = −q e_0 − p e_i,
/// e_i e_j = (δ_ij D + ε_ijk (p/2)√(−D) − p²/4) e_0 − (p/2) e_i − (p/2) e_j + ε_ijk √(−D) e_k.
/// ```
pub fn unit_product_formula(
    p: Scalar,
    q: Scalar,
    sqrt_neg_d: Scalar,
    dim: usize,
    i: usize,
    j: usize,
) -> Element {
    let mut out = vec![ZERO; dim];
    if i == 0 {
        out[j] = ONE;
    } else if j == 0 {
        out[i] = ONE;
    } else if i == j {
        out[0] = -q;
        out[i] = -p;
    } else {
        let half_p = p / 2.0;
        out[0] = -p * p / 4.0;
        out[i] -= half_p;
        out[j] -= half_p;
        // at most one k closes a triple with i ≠ j
        if let Some((k, eps)) = (1..dim)
            .map(|k| (k, levi_civita(i, j, k, dim)))
            .find(|&(_, eps)| eps != 0)
        {
            let s = sqrt_neg_d * f64::from(eps);
            out[0] += half_p * s;
            out[k] += s;
        }
    }
    Element::from_vec(out)
}

/// Dense `dim × dim` table of unit products, `e_i·e_j = Σ_k T[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureTable {
    dim: usize,
    entries: Vec<Scalar>,
    nonzero: Vec<(usize, usize, usize, Scalar)>,
}

impl StructureTable {
    pub fn from_formula(p: Scalar, q: Scalar, sqrt_neg_d: Scalar, dim: usize) -> Self {
        Self::from_products(dim, |i, j| {
            unit_product_formula(p, q, sqrt_neg_d, dim, i, j)
        })
    }

    pub(crate) fn from_products(dim: usize, product: impl Fn(usize, usize) -> Element) -> Self {
        let mut entries = Vec::with_capacity(dim * dim * dim);
        let mut nonzero = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                let e = product(i, j);
                for (k, &c) in e.coeffs().iter().enumerate() {
                    if c != ZERO {
                        nonzero.push((i, j, k, c));
                    }
                }
                entries.extend_from_slice(e.coeffs());
            }
        }
        StructureTable {
            dim,
            entries,
            nonzero,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The product `e_i·e_j`. Panics when an index is out of range.
    pub fn entry(&self, i: usize, j: usize) -> Element {
        assert!(i < self.dim && j < self.dim, "unit index out of range");
        let start = (i * self.dim + j) * self.dim;
        Element::from_vec(self.entries[start..start + self.dim].to_vec())
    }

    /// Bilinear extension of the table.
    pub(crate) fn contract(&self, x: &Element, y: &Element) -> Element {
        let (xs, ys) = (x.coeffs(), y.coeffs());
        let mut out = vec![ZERO; self.dim];
        for &(i, j, k, c) in &self.nonzero {
            out[k] += xs[i] * ys[j] * c;
        }
        Element::from_vec(out)
    }
}
