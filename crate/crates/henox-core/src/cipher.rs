//! The full cipher: block permutation, keystream XOR, dynamic substitution,
//! and the exact inverse of that composition.

use crate::chaos::{self, CipherKey, SeedMatrix, SelectionSequence};
use crate::image::GrayImage;
use crate::permute::{self, PermutationPlan};
use crate::sbox::{self, SBoxSet};
use crate::Error;

/// Everything needed to run the pipeline in either direction.
#[derive(Clone, Debug)]
pub struct CipherConfig {
    pub key: CipherKey,
    pub plan: PermutationPlan,
    pub sbox_set: SBoxSet,
}

impl CipherConfig {
    /// The given key with the default plan and standard S-boxes.
    pub fn new(key: CipherKey) -> Self {
        Self {
            key,
            plan: PermutationPlan::default(),
            sbox_set: SBoxSet::standard(),
        }
    }
}

/// XORs an image with a same-shape seed matrix. The operation is its own
/// inverse.
pub fn xor_with_seed(img: &GrayImage, seed: &SeedMatrix) -> Result<GrayImage, Error> {
    if (seed.rows(), seed.cols()) != img.dims() {
        return Err(Error::SizeMismatch {
            expected: img.pixel_count(),
            actual: seed.rows() * seed.cols(),
        });
    }
    let pixels = img
        .as_bytes()
        .iter()
        .zip(seed.values())
        .map(|(&p, &s)| p ^ s)
        .collect();
    GrayImage::new(img.rows(), img.cols(), pixels)
}

/// Substitutes every pixel through the S-box its selector picks.
pub fn substitute_image(
    img: &GrayImage,
    selection: &SelectionSequence,
    set: &SBoxSet,
) -> Result<GrayImage, Error> {
    if selection.len() != img.pixel_count() {
        return Err(Error::SizeMismatch {
            expected: img.pixel_count(),
            actual: selection.len(),
        });
    }
    let pixels = img
        .as_bytes()
        .iter()
        .zip(selection.values())
        .map(|(&p, &s)| sbox::substitute(p, s, set))
        .collect();
    GrayImage::new(img.rows(), img.cols(), pixels)
}

/// Inverse of [`substitute_image`] for the same selection sequence.
pub fn inverse_substitute_image(
    img: &GrayImage,
    selection: &SelectionSequence,
    set: &SBoxSet,
) -> Result<GrayImage, Error> {
    if selection.len() != img.pixel_count() {
        return Err(Error::SizeMismatch {
            expected: img.pixel_count(),
            actual: selection.len(),
        });
    }
    let pixels = img
        .as_bytes()
        .iter()
        .zip(selection.values())
        .map(|(&p, &s)| sbox::inverse_substitute(p, s, set))
        .collect();
    GrayImage::new(img.rows(), img.cols(), pixels)
}

/// Encrypts: permute, XOR with the seed matrix, then substitute. Selectors
/// index pixels by their post-permutation position.
pub fn encrypt(img: &GrayImage, config: &CipherConfig) -> Result<GrayImage, Error> {
    let (rows, cols) = img.dims();
    let map = permute::build_index_map(rows, cols, &config.plan)?;
    let permuted = permute::apply_permutation(img, &map)?;
    let seed = chaos::gen_seed_matrix(&config.key, rows, cols)?;
    let xored = xor_with_seed(&permuted, &seed)?;
    let selection = chaos::gen_selection_sequence(&config.key, rows * cols)?;
    substitute_image(&xored, &selection, &config.sbox_set)
}

/// Decrypts by running the three stages backwards.
pub fn decrypt(img: &GrayImage, config: &CipherConfig) -> Result<GrayImage, Error> {
    let (rows, cols) = img.dims();
    let map = permute::build_index_map(rows, cols, &config.plan)?;
    let selection = chaos::gen_selection_sequence(&config.key, rows * cols)?;
    let unsubstituted = inverse_substitute_image(img, &selection, &config.sbox_set)?;
    let seed = chaos::gen_seed_matrix(&config.key, rows, cols)?;
    let xored = xor_with_seed(&unsubstituted, &seed)?;
    permute::apply_permutation(&xored, &permute::invert_index_map(&map))
}

/// Fraction of pixel positions where the two images differ.
pub fn difference_ratio(a: &GrayImage, b: &GrayImage) -> Result<f64, Error> {
    if a.dims() != b.dims() {
        return Err(Error::SizeMismatch {
            expected: a.pixel_count(),
            actual: b.pixel_count(),
        });
    }
    let differing = a
        .as_bytes()
        .iter()
        .zip(b.as_bytes())
        .filter(|(x, y)| x != y)
        .count();
    Ok(differing as f64 / a.pixel_count() as f64)
}
