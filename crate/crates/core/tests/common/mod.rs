#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, PI};

use fagnano::{Point, Triangle};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Angles `(alpha, beta)` of an acute triangle with every angle in
/// `[margin, π/2 − margin]`, uniform over that region.
pub fn acute_angles(rng: &mut impl Rng, margin: f64) -> (f64, f64) {
    loop {
        let alpha = rng.gen_range(margin..FRAC_PI_2 - margin);
        let beta = rng.gen_range(margin..FRAC_PI_2 - margin);
        let gamma = PI - alpha - beta;
        if gamma >= margin && gamma <= FRAC_PI_2 - margin {
            return (alpha, beta);
        }
    }
}

/// A random acute triangle, placed by a random similarity.
pub fn acute_triangle(rng: &mut impl Rng, margin: f64) -> Triangle {
    let (alpha, beta) = acute_angles(rng, margin);
    let base = Triangle::from_angles(alpha, beta).unwrap();
    let theta = rng.gen_range(0.0..2.0 * PI);
    let scale = rng.gen_range(0.1..10.0);
    let shift = Point::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0));
    base.transformed(theta, scale, shift).unwrap()
}

pub fn equilateral() -> Triangle {
    Triangle::from_coords([0.0, 0.0, 1.0, 0.0, 0.5, 3f64.sqrt() / 2.0]).unwrap()
}

pub fn golden_bfc() -> Triangle {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    Triangle::from_coords([1.0, 0.0, 0.0, 1.0, 1.0, phi]).unwrap()
}
