//! Row-major 8-bit grayscale image buffer shared by every pipeline stage.

use alloc::vec;
use alloc::vec::Vec;

use crate::Error;

/// An 8-bit grayscale image stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrayImage {
    rows: usize,
    cols: usize,
    pixels: Vec<u8>,
}

impl GrayImage {
    /// Wraps a row-major pixel buffer; `pixels.len()` must equal `rows * cols`.
    pub fn new(rows: usize, cols: usize, pixels: Vec<u8>) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyImage);
        }
        let expected = rows * cols;
        if pixels.len() != expected {
            return Err(Error::SizeMismatch {
                expected,
                actual: pixels.len(),
            });
        }
        Ok(Self { rows, cols, pixels })
    }

    /// An image with every pixel set to `value`.
    pub fn constant(rows: usize, cols: usize, value: u8) -> Result<Self, Error> {
        Self::new(rows, cols, vec![value; rows.checked_mul(cols).unwrap_or(0)])
    }

    /// Builds an image by evaluating `f(row, col)` at every position.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u8,
    ) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyImage);
        }
        let mut pixels = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                pixels.push(f(r, c));
            }
        }
        Self::new(rows, cols, pixels)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn pixel_count(&self) -> usize {
        self.pixels.len()
    }

    /// Pixel at `(row, col)`; panics when out of bounds.
    pub fn get(&self, row: usize, col: usize) -> u8 {
        assert!(row < self.rows && col < self.cols, "pixel out of bounds");
        self.pixels[row * self.cols + col]
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.pixels
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.pixels
    }
}
