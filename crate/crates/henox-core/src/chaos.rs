//! Keystream generation from the two-dimensional Henon map
//!
//! ```text
//! x[n+1] = 1 - a * x[n]^2 + y[n]
//! y[n+1] = b * x[n]
//! ```
//!
//! Two independent orbits drive the cipher: one fills the byte matrix XORed
//! with the permuted image, the other picks which S-box substitutes each
//! pixel. Orbit arithmetic follows a fixed evaluation order so the same key
//! produces bit-identical keystreams on every platform.

use alloc::vec::Vec;

use crate::math;
use crate::Error;

/// Iterates whose magnitude exceeds this are treated as divergent.
pub const DIVERGENCE_LIMIT: f64 = 1e6;

/// Scale applied to the fractional part before rounding to an integer.
const QUANT_SCALE: f64 = 1e5;

/// Control parameters and initial conditions for one Henon orbit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HenonParams {
    pub a: f64,
    pub b: f64,
    pub x0: f64,
    pub y0: f64,
    /// Iterations discarded before the first emitted value.
    pub burn_in: u32,
}

impl HenonParams {
    /// The classic chaotic regime (a = 1.4, b = 0.3) with a 1000-step burn-in.
    pub fn classic(x0: f64, y0: f64) -> Self {
        Self {
            a: 1.4,
            b: 0.3,
            x0,
            y0,
            burn_in: 1000,
        }
    }
}

/// Modulus reducing quantized orbit values to seed-matrix bytes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Modulus {
    /// Entries span 0..=254; the byte 255 never appears in the keystream.
    M255,
    /// Entries cover the full byte range.
    M256,
}

impl Modulus {
    pub fn value(self) -> u32 {
        match self {
            Modulus::M255 => 255,
            Modulus::M256 => 256,
        }
    }
}

impl TryFrom<u32> for Modulus {
    type Error = Error;

    fn try_from(value: u32) -> Result<Self, Error> {
        match value {
            255 => Ok(Modulus::M255),
            256 => Ok(Modulus::M256),
            other => Err(Error::InvalidModulus(other)),
        }
    }
}

/// The whole secret: two orbit parameter sets plus the seed modulus.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CipherKey {
    /// Orbit feeding the XOR seed matrix.
    pub seed_orbit: HenonParams,
    /// Orbit feeding the per-pixel S-box selection.
    pub select_orbit: HenonParams,
    pub modulus: Modulus,
}

/// Keystream bytes XORed with the permuted image, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedMatrix {
    rows: usize,
    cols: usize,
    values: Vec<u8>,
}

impl SeedMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn get(&self, row: usize, col: usize) -> u8 {
        assert!(row < self.rows && col < self.cols, "entry out of bounds");
        self.values[row * self.cols + col]
    }
}

/// Per-pixel S-box choices, each in 0..=2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectionSequence {
    values: Vec<u8>,
}

impl SelectionSequence {
    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

struct Orbit {
    a: f64,
    b: f64,
    x: f64,
    y: f64,
    step: usize,
}

impl Orbit {
    fn new(params: &HenonParams) -> Result<Self, Error> {
        let mut orbit = Self {
            a: params.a,
            b: params.b,
            x: params.x0,
            y: params.y0,
            step: 0,
        };
        for _ in 0..params.burn_in {
            orbit.advance()?;
        }
        Ok(orbit)
    }

    // One map application. The operation order is pinned: squaring, scaling
    // by a, then (1 - a*x^2) + y, so results never depend on how the
    // expression might otherwise be associated.
    fn advance(&mut self) -> Result<f64, Error> {
        let x_sq = self.x * self.x;
        let scaled = self.a * x_sq;
        let next_x = (1.0 - scaled) + self.y;
        let next_y = self.b * self.x;
        self.x = next_x;
        self.y = next_y;
        self.step += 1;
        let magnitude = math::abs(next_x);
        // NaN (possible once the iterates overflow) also counts as divergent.
        if magnitude > DIVERGENCE_LIMIT || magnitude.is_nan() {
            return Err(Error::DivergentOrbit {
                step: self.step,
                value: next_x,
            });
        }
        Ok(next_x)
    }
}

/// Emits `count` successive x iterates after the configured burn-in.
pub fn iterate_orbit(params: &HenonParams, count: usize) -> Result<Vec<f64>, Error> {
    assert!(count >= 1, "count must be at least 1");
    let mut orbit = Orbit::new(params)?;
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(orbit.advance()?);
    }
    Ok(out)
}

/// Maps one orbit value to an integer in `[0, modulus)`: the fractional part
/// of the magnitude is scaled by 1e5, rounded half away from zero, and
/// reduced modulo `modulus`.
pub fn quantize(x: f64, modulus: u32) -> u32 {
    assert!(modulus > 0, "modulus must be positive");
    let magnitude = math::abs(x);
    let fractional = magnitude - math::floor(magnitude);
    let scaled = math::round(fractional * QUANT_SCALE);
    (scaled as u32) % modulus
}

/// Fills a `rows x cols` seed matrix from the key's seed orbit, row-major.
pub fn gen_seed_matrix(key: &CipherKey, rows: usize, cols: usize) -> Result<SeedMatrix, Error> {
    assert!(rows >= 1 && cols >= 1, "matrix must be at least 1x1");
    let modulus = key.modulus.value();
    let iterates = iterate_orbit(&key.seed_orbit, rows * cols)?;
    let values = iterates
        .iter()
        .map(|&x| quantize(x, modulus) as u8)
        .collect();
    Ok(SeedMatrix { rows, cols, values })
}

/// Draws one S-box selector per pixel from the key's selection orbit.
pub fn gen_selection_sequence(
    key: &CipherKey,
    pixel_count: usize,
) -> Result<SelectionSequence, Error> {
    assert!(pixel_count >= 1, "pixel count must be at least 1");
    let iterates = iterate_orbit(&key.select_orbit, pixel_count)?;
    let values = iterates.iter().map(|&x| quantize(x, 3) as u8).collect();
    Ok(SelectionSequence { values })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(a: f64, b: f64, x0: f64, y0: f64) -> HenonParams {
        HenonParams {
            a,
            b,
            x0,
            y0,
            burn_in: 0,
        }
    }

    #[test]
    fn first_iterates_from_origin() {
        // One step from (0, 0): x1 = 1, then x2 = 1 - 1.4 = -0.4 up to
        // representation error.
        let xs = iterate_orbit(&raw(1.4, 0.3, 0.0, 0.0), 2).unwrap();
        assert_eq!(xs[0], 1.0);
        assert!((xs[1] + 0.4).abs() < 1e-15);
    }

    #[test]
    fn classic_orbit_prefix_is_pinned() {
        // First ten iterates from (0.1, 0.1) with no burn-in; any change to
        // the arithmetic order shows up here as a bit-level mismatch.
        let expected = [
            1.086,
            -0.6211544,
            0.7856340959048962,
            -0.05045562570762499,
            1.2321261505397016,
            -1.1405254788935846,
            -0.45147987004570606,
            0.372474654052842,
            0.6703237239097901,
            0.4826749434450487,
        ];
        let xs = iterate_orbit(&raw(1.4, 0.3, 0.1, 0.1), 10).unwrap();
        assert_eq!(xs, expected);
    }

    #[test]
    fn burn_in_drops_a_prefix() {
        let long = iterate_orbit(&raw(1.4, 0.3, 0.1, 0.1), 10).unwrap();
        let params = HenonParams {
            burn_in: 4,
            ..raw(1.4, 0.3, 0.1, 0.1)
        };
        let tail = iterate_orbit(&params, 6).unwrap();
        assert_eq!(tail, long[4..]);
    }

    #[test]
    fn degenerate_parameters_hit_a_fixed_point() {
        // a = b = 0 collapses the map to x -> 1.
        let xs = iterate_orbit(&raw(0.0, 0.0, 0.5, 0.0), 3).unwrap();
        assert_eq!(xs, [1.0, 1.0, 1.0]);
    }

    #[test]
    fn far_initial_point_diverges() {
        // From x0 = 10 the iterates run 10 -> -139 -> -27045.4 -> -1.02e9,
        // so the guard fires on the third map application.
        let err = iterate_orbit(&raw(1.4, 0.3, 10.0, 0.0), 4).unwrap_err();
        match err {
            Error::DivergentOrbit { step, value } => {
                assert_eq!(step, 3);
                assert!(value.abs() > DIVERGENCE_LIMIT);
            }
            other => panic!("expected DivergentOrbit, got {other:?}"),
        }
    }

    #[test]
    fn divergence_check_applies_during_burn_in() {
        let params = HenonParams {
            burn_in: 100,
            ..raw(1.4, 0.3, 10.0, 0.0)
        };
        assert!(matches!(
            iterate_orbit(&params, 1),
            Err(Error::DivergentOrbit { step: 3, .. })
        ));
    }

    #[test]
    fn quantize_known_values() {
        // 0.123456 -> frac 0.123456 -> round(12345.6) = 12346 -> 12346 % 256.
        assert_eq!(quantize(0.123456, 256), 58);
        assert_eq!(quantize(0.0, 255), 0);
        // Sign is dropped before taking the fractional part:
        // |-1.25| -> frac 0.25 -> 25000 % 256 = 168.
        assert_eq!(quantize(-1.25, 256), 168);
    }

    #[test]
    fn quantize_stays_below_modulus() {
        for i in 0..1000 {
            let x = -2.0 + (i as f64) * 0.004321;
            assert!(quantize(x, 3) < 3);
            assert!(quantize(x, 255) < 255);
            assert!(quantize(x, 256) < 256);
        }
    }

    fn classic_key() -> CipherKey {
        CipherKey {
            seed_orbit: HenonParams::classic(0.1, 0.1),
            select_orbit: HenonParams::classic(0.2, 0.3),
            modulus: Modulus::M256,
        }
    }

    #[test]
    fn seed_matrix_2x2_is_pinned() {
        let seed = gen_seed_matrix(&classic_key(), 2, 2).unwrap();
        assert_eq!(seed.values(), &[33, 53, 72, 210]);
        assert_eq!((seed.rows(), seed.cols()), (2, 2));
        assert_eq!(seed.get(1, 1), 210);
    }

    #[test]
    fn seed_matrix_2x2_mod_255_is_pinned() {
        let key = CipherKey {
            modulus: Modulus::M255,
            ..classic_key()
        };
        let seed = gen_seed_matrix(&key, 2, 2).unwrap();
        assert_eq!(seed.values(), &[172, 92, 130, 122]);
    }

    #[test]
    fn selection_prefix_is_pinned_and_bounded() {
        let sel = gen_selection_sequence(&classic_key(), 8).unwrap();
        assert_eq!(sel.values(), &[1, 1, 2, 1, 0, 0, 2, 1]);

        let long = gen_selection_sequence(&classic_key(), 4096).unwrap();
        assert!(long.values().iter().all(|&s| s < 3));
    }

    #[test]
    fn selection_frequencies_are_roughly_uniform() {
        let sel = gen_selection_sequence(&classic_key(), 65536).unwrap();
        let mut counts = [0usize; 3];
        for &s in sel.values() {
            counts[s as usize] += 1;
        }
        for &c in &counts {
            let freq = c as f64 / 65536.0;
            assert!((freq - 1.0 / 3.0).abs() < 0.02, "skewed selector: {freq}");
        }
    }

    #[test]
    fn modulus_conversion() {
        assert_eq!(Modulus::try_from(255), Ok(Modulus::M255));
        assert_eq!(Modulus::try_from(256), Ok(Modulus::M256));
        assert_eq!(Modulus::try_from(128), Err(Error::InvalidModulus(128)));
    }
}
