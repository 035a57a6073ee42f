//! Shared fixtures for the integration suites.

#![allow(dead_code)]

use henox_core::chaos::{CipherKey, HenonParams, Modulus};
use henox_core::permute::{PermutationPlan, ShapeKind};
use henox_core::GrayImage;
use rand::Rng;

/// Deterministic key used across the suites, inside the chaotic regime.
pub fn default_test_key() -> CipherKey {
    CipherKey {
        seed_orbit: HenonParams::classic(0.1, 0.1),
        select_orbit: HenonParams::classic(0.2, 0.3),
        modulus: Modulus::M256,
    }
}

/// A 256x256 stand-in for the usual photographic test images: smooth
/// shading, one bright and one dark blob, and a gentle horizontal gradient.
/// Statistically it behaves like a natural image (entropy around 7.3,
/// adjacent correlation above 0.99).
pub fn synthetic_scene() -> GrayImage {
    GrayImage::from_fn(256, 256, |r, c| {
        let (rf, cf) = (r as f64, c as f64);
        let base = 110.0 + 70.0 * (cf / 41.0).sin() * (rf / 29.0).cos();
        let blob = 90.0 * (-((cf - 170.0).powi(2) + (rf - 60.0).powi(2)) / 1800.0).exp();
        let dip = -70.0 * (-((cf - 70.0).powi(2) + (rf - 180.0).powi(2)) / 3800.0).exp();
        let value = base + blob + dip + 0.05 * cf;
        value.round().clamp(0.0, 255.0) as u8
    })
    .unwrap()
}

/// Uniformly random pixels.
pub fn random_image(rng: &mut impl Rng, rows: usize, cols: usize) -> GrayImage {
    GrayImage::from_fn(rows, cols, |_, _| rng.random()).unwrap()
}

/// A key drawn from the Henon basin, with a random modulus.
pub fn random_basin_key(rng: &mut impl Rng) -> CipherKey {
    let x0 = rng.random_range(-0.1..=0.1);
    let y0 = rng.random_range(-0.1..=0.1);
    let u0 = rng.random_range(-0.1..=0.1);
    let v0 = rng.random_range(-0.1..=0.1);
    CipherKey {
        seed_orbit: HenonParams::classic(x0, y0),
        select_orbit: HenonParams::classic(u0, v0),
        modulus: if rng.random() {
            Modulus::M256
        } else {
            Modulus::M255
        },
    }
}

/// A random shape assignment in row-major quadrant order.
pub fn random_plan(rng: &mut impl Rng) -> PermutationPlan {
    let mut pick = || ShapeKind::ALL[rng.random_range(0..ShapeKind::ALL.len())];
    let shapes = [pick(), pick(), pick(), pick()];
    PermutationPlan::from_shapes(shapes, rng.random())
}
