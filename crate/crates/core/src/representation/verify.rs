use serde::{Deserialize, Serialize};

use crate::algebra::{cd_product, multiply, units_to_pair, AlgebraSpec, Element, PairView};
use crate::error::{AlgebraError, Result};
use crate::sampling::{random_element, trial_rng};

use super::{act_row, mat_mul_nonstandard, RepSet};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepReport {
    pub trials: usize,
    pub seed: u64,
    pub tol: f64,
    /// False when `D ≈ 0`, where the closed-form matrices were derived by
    /// dividing by `√(−D)`.
    pub trusted: bool,
    pub action_max_residual: f64,
    /// `(trial, unit)` pairs whose row action missed the doubling product.
    pub action_failures: Vec<(usize, usize)>,
    /// Units whose pair coordinates could not be formed (singular transform).
    pub skipped_units: Vec<usize>,
    pub product_max_residual: f64,
    /// `(a, b)` with `R(e_a)·R(e_b) ≠ R(e_a e_b)`.
    pub product_mismatches: Vec<(usize, usize)>,
}

impl RepReport {
    pub fn holds(&self) -> bool {
        self.action_failures.is_empty() && self.product_mismatches.is_empty()
    }
}

/// Checks `repset` against `target`:
///
/// - on `trials` random pairs `P`, the row action of each `R(e_m)` must equal
///   the doubling product `P·e_m`;
/// - for every unit pair, `R(e_a)·R(e_b)` under the nonstandard product must
///   equal `Σ_m (e_a e_b)_m R(e_m)`.
pub fn verify_rep(
    repset: &RepSet,
    target: &AlgebraSpec,
    trials: usize,
    seed: u64,
    tol: f64,
) -> Result<RepReport> {
    let dim = target.dim();
    if repset.dim() != dim {
        return Err(AlgebraError::DimensionMismatch {
            expected: dim,
            found: repset.dim(),
        });
    }
    let half = dim / 2;
    let coeff = &repset.coeff_spec;

    let mut skipped_units = Vec::new();
    let mut unit_pairs = Vec::new();
    for m in 0..dim {
        // e_m for m < n is (e_m, 0) and e_n is (0, e₀) whatever the parameters;
        // the remaining units need the inverse transform.
        let direct = match m.cmp(&half) {
            std::cmp::Ordering::Less => {
                Some(PairView::new(Element::unit(half, m)?, Element::zero(half))?)
            }
            std::cmp::Ordering::Equal => Some(PairView::adjoined(half)),
            std::cmp::Ordering::Greater => None,
        };
        if let Some(pair) = direct {
            unit_pairs.push((m, pair));
            continue;
        }
        match units_to_pair(target, &Element::unit(dim, m)?) {
            Ok(pair) => unit_pairs.push((m, pair)),
            Err(AlgebraError::SingularParameter { .. }) => skipped_units.push(m),
            Err(e) => return Err(e),
        }
    }

    let mut action_max_residual = 0.0f64;
    let mut action_failures = Vec::new();
    for t in 0..trials {
        let mut rng = trial_rng(seed, t as u64);
        let pair = PairView::new(
            random_element(&mut rng, half),
            random_element(&mut rng, half),
        )?;
        let row = repset.embed_pair(&pair)?;
        for (m, unit) in &unit_pairs {
            let expected = repset.embed_pair(&cd_product(target, &pair, unit)?)?;
            let got = act_row(&row, &repset.mats[*m], coeff)?;
            let r = got.residual(&expected);
            action_max_residual = action_max_residual.max(r);
            if r > tol {
                action_failures.push((t, *m));
            }
        }
    }

    let mut product_max_residual = 0.0f64;
    let mut product_mismatches = Vec::new();
    for a in 0..dim {
        for b in 0..dim {
            let got = mat_mul_nonstandard(&repset.mats[a], &repset.mats[b], coeff)?;
            let ab = multiply(target, &Element::unit(dim, a)?, &Element::unit(dim, b)?)?;
            let r = got.residual(&repset.linear(&ab));
            product_max_residual = product_max_residual.max(r);
            if r > tol {
                product_mismatches.push((a, b));
            }
        }
    }

    Ok(RepReport {
        trials,
        seed,
        tol,
        trusted: target.d().norm() > target.tol(),
        action_max_residual,
        action_failures,
        skipped_units,
        product_max_residual,
        product_mismatches,
    })
}
