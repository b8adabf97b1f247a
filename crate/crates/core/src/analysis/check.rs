use std::fmt;
use std::str::FromStr;
use std::thread;

use serde::{Deserialize, Serialize};

use super::identities::associator_unchecked;
use super::norm::norm_unchecked;
use crate::algebra::{mul_unchecked, AlgebraSpec, Element};
use crate::sampling::{random_element, trial_rng};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `XY = YX`
    Commutativity,
    /// `(XY)Z = X(YZ)`
    Associativity,
    /// `X(XY) = (XX)Y`
    LeftAlternative,
    /// `(YX)X = Y(XX)`
    RightAlternative,
    /// `X(YX) = (XY)X`
    Flexible,
    /// `N(XY) = N(X)N(Y)`
    NormComposition,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::Commutativity,
        Identity::Associativity,
        Identity::LeftAlternative,
        Identity::RightAlternative,
        Identity::Flexible,
        Identity::NormComposition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Commutativity => "commutativity",
            Identity::Associativity => "associativity",
            Identity::LeftAlternative => "left-alt",
            Identity::RightAlternative => "right-alt",
            Identity::Flexible => "flexible",
            Identity::NormComposition => "norm-composition",
        }
    }

    fn uses_z(self) -> bool {
        self == Identity::Associativity
    }

    /// Relative residual of the identity on one sample.
    fn residual(self, spec: &AlgebraSpec, x: &Element, y: &Element, z: &Element) -> f64 {
        let mul = |a: &Element, b: &Element| mul_unchecked(spec, a, b);
        match self {
            Identity::Commutativity => mul(x, y).residual(&mul(y, x)),
            Identity::Associativity => {
                let lhs = mul(&mul(x, y), z);
                let diff = associator_unchecked(spec, x, y, z);
                diff.max_abs() / 1f64.max(lhs.max_abs()).max((&lhs - &diff).max_abs())
            }
            Identity::LeftAlternative => mul(x, &mul(x, y)).residual(&mul(&mul(x, x), y)),
            Identity::RightAlternative => mul(&mul(y, x), x).residual(&mul(y, &mul(x, x))),
            Identity::Flexible => mul(x, &mul(y, x)).residual(&mul(&mul(x, y), x)),
            Identity::NormComposition => {
                let lhs = norm_unchecked(spec, &mul(x, y));
                let rhs = norm_unchecked(spec, x) * norm_unchecked(spec, y);
                (lhs - rhs).norm() / 1f64.max(lhs.norm()).max(rhs.norm())
            }
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| format!("unknown identity `{s}`"))
    }
}

impl Serialize for Identity {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Identity {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    #[serde(rename = "X")]
    pub x: Element,
    #[serde(rename = "Y")]
    pub y: Element,
    #[serde(rename = "Z", default, skip_serializing_if = "Option::is_none")]
    pub z: Option<Element>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity: Identity,
    pub trials: usize,
    pub max_residual: f64,
    /// First sample (lowest trial index) whose residual exceeds the tolerance.
    pub counterexample: Option<Counterexample>,
    pub seed: u64,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Samples `trials` random triples and records the worst residual and the
/// first counterexample. Deterministic in `seed`.
pub fn check_identity(
    spec: &AlgebraSpec,
    identity: Identity,
    trials: usize,
    seed: u64,
    tol: f64,
) -> IdentityReport {
    let workers = thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(8);
    check_identity_with_workers(spec, identity, trials, seed, tol, workers)
}

/// [`check_identity`] with an explicit worker count; the report is the same
/// for every count.
pub fn check_identity_with_workers(
    spec: &AlgebraSpec,
    identity: Identity,
    trials: usize,
    seed: u64,
    tol: f64,
    workers: usize,
) -> IdentityReport {
    let workers = workers.clamp(1, trials.max(1));
    let chunk = trials.div_ceil(workers);

    let run = |range: std::ops::Range<usize>| {
        let mut worst = 0.0f64;
        let mut first: Option<(usize, Counterexample)> = None;
        for t in range {
            let mut rng = trial_rng(seed, t as u64);
            let x = random_element(&mut rng, spec.dim());
            let y = random_element(&mut rng, spec.dim());
            let z = random_element(&mut rng, spec.dim());
            let r = identity.residual(spec, &x, &y, &z);
            worst = worst.max(r);
            if r > tol && first.is_none() {
                let z = identity.uses_z().then_some(z);
                first = Some((t, Counterexample { x, y, z }));
            }
        }
        (worst, first)
    };

    let parts: Vec<_> = if workers == 1 {
        vec![run(0..trials)]
    } else {
        thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let range = (w * chunk).min(trials)..((w + 1) * chunk).min(trials);
                    scope.spawn(move || run(range))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        })
    };

    let max_residual = parts.iter().map(|p| p.0).fold(0.0, f64::max);
    let counterexample = parts
        .into_iter()
        .filter_map(|p| p.1)
        .min_by_key(|(t, _)| *t)
        .map(|(_, c)| c);
    IdentityReport {
        identity,
        trials,
        max_residual,
        counterexample,
        seed,
    }
}
