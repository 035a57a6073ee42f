//! Chaotic grayscale-image cipher built from three keyed stages: a geometric
//! block permutation, a Henon-map keystream XOR, and a per-pixel dynamic
//! substitution over three S-boxes. The [`analysis`] module measures how well
//! a ciphertext hides the statistics of its plaintext.
//!
//! The crate is `no_std` compatible (`alloc` required); disable the default
//! `std` feature and enable `libm` to build for targets without a standard
//! library.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("henox-core needs either the `std` (default) or `libm` feature");

pub mod analysis;
pub mod chaos;
pub mod cipher;
pub mod image;
mod math;
pub mod permute;
pub mod sbox;

pub use chaos::{CipherKey, HenonParams, Modulus};
pub use cipher::{decrypt, encrypt, CipherConfig};
pub use image::GrayImage;
pub use permute::{PermutationPlan, ShapeKind};

use core::fmt;

/// Errors shared by the cipher and analysis modules.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// An orbit iterate left the guard band, so the key is unusable.
    DivergentOrbit { step: usize, value: f64 },
    /// The quadrant split needs even dimensions of at least 2x2.
    OddDimensions { rows: usize, cols: usize },
    /// Two lengths that must agree do not.
    SizeMismatch { expected: usize, actual: usize },
    /// An index map or substitution table is not a bijection.
    NotAPermutation,
    /// A co-occurrence offset at least as large as the image.
    OffsetTooLarge {
        offset: (isize, isize),
        rows: usize,
        cols: usize,
    },
    /// A correlation is undefined because one marginal has zero variance.
    DegenerateDistribution,
    /// A permutation plan that does not describe four distinct quadrants.
    InvalidPlan(&'static str),
    /// The seed modulus must be 255 or 256.
    InvalidModulus(u32),
    /// Images must contain at least one pixel.
    EmptyImage,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivergentOrbit { step, value } => write!(
                f,
                "orbit diverged at step {step} (x = {value:e}); pick a key inside the chaotic regime"
            ),
            Error::OddDimensions { rows, cols } => write!(
                f,
                "image is {rows}x{cols}; the quadrant split needs even dimensions of at least 2x2"
            ),
            Error::SizeMismatch { expected, actual } => {
                write!(f, "length mismatch: expected {expected}, got {actual}")
            }
            Error::NotAPermutation => write!(f, "indices do not form a permutation"),
            Error::OffsetTooLarge { offset, rows, cols } => write!(
                f,
                "offset ({}, {}) does not fit a {rows}x{cols} image",
                offset.0, offset.1
            ),
            Error::DegenerateDistribution => {
                write!(f, "correlation undefined: a marginal has zero variance")
            }
            Error::InvalidPlan(msg) => write!(f, "invalid permutation plan: {msg}"),
            Error::InvalidModulus(m) => write!(f, "seed modulus must be 255 or 256, got {m}"),
            Error::EmptyImage => write!(f, "image must contain at least one pixel"),
        }
    }
}

impl core::error::Error for Error {}
