//! Seeded random sampling. Every trial draws from its own ChaCha stream,
//! so results do not depend on how trials are split across workers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Element;
use crate::scalar::Scalar;

/// Generator for `stream` under `seed`.
pub fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Real and imaginary parts uniform on `[−1, 1]`.
pub fn random_scalar<R: Rng>(rng: &mut R) -> Scalar {
    Scalar::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0))
}

pub fn random_element<R: Rng>(rng: &mut R, dim: usize) -> Element {
    Element::new((0..dim).map(|_| random_scalar(rng)).collect()).expect("valid dimension")
}

/// Real coefficients on `[−1, 1]`.
pub fn random_real_element<R: Rng>(rng: &mut R, dim: usize) -> Element {
    Element::from_real(
        &(0..dim)
            .map(|_| rng.gen_range(-1.0..=1.0))
            .collect::<Vec<_>>(),
    )
    .expect("valid dimension")
}

/// Complex `(p, q)` with parts on `[−scale, scale]` and `|D| > min_abs_d`.
pub fn random_params<R: Rng>(rng: &mut R, scale: f64, min_abs_d: f64) -> (Scalar, Scalar) {
    loop {
        let p = random_scalar(rng) * scale;
        let q = random_scalar(rng) * scale;
        if (p * p / 4.0 - q).norm() > min_abs_d {
            return (p, q);
        }
    }
}
