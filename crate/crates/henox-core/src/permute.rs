//! Geometric block permutation.
//!
//! The image splits into four equal quadrants. Each quadrant is rotated 180
//! degrees in place, then peeled layer by layer along one of five shape
//! patterns; the peeled pixels are concatenated, quadrant after quadrant, and
//! reshaped into the scrambled image. Peeling works on an inclusive active
//! rectangle `(r0, r1, c0, c1)` that shrinks after every layer, and every
//! rule is total: each cell of the rectangle is emitted exactly once, so the
//! whole construction is a permutation with a well-defined inverse.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::image::GrayImage;
use crate::Error;

/// Peeling pattern used to traverse a rectangle layer by layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeKind {
    /// Left column top-down, then bottom row rightward.
    L,
    /// Right column top-down, then bottom row leftward.
    InvertedL,
    /// Left column down, bottom row rightward, right column up.
    U,
    /// Left column up, top row rightward, right column down.
    InvertedU,
    /// Full boundary ring, clockwise from the top-left corner.
    Ring,
}

impl ShapeKind {
    pub const ALL: [ShapeKind; 5] = [
        ShapeKind::L,
        ShapeKind::InvertedL,
        ShapeKind::U,
        ShapeKind::InvertedU,
        ShapeKind::Ring,
    ];

    /// One-letter code used in plan strings.
    pub fn code(self) -> char {
        match self {
            ShapeKind::L => 'L',
            ShapeKind::InvertedL => 'J',
            ShapeKind::U => 'U',
            ShapeKind::InvertedU => 'V',
            ShapeKind::Ring => 'R',
        }
    }

    pub fn from_code(code: char) -> Option<Self> {
        match code.to_ascii_uppercase() {
            'L' => Some(ShapeKind::L),
            'J' => Some(ShapeKind::InvertedL),
            'U' => Some(ShapeKind::U),
            'V' => Some(ShapeKind::InvertedU),
            'R' => Some(ShapeKind::Ring),
            _ => None,
        }
    }
}

/// Image quadrant, named by position.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quadrant {
    TopLeft,
    TopRight,
    BottomLeft,
    BottomRight,
}

impl Quadrant {
    /// Row-major order: the order quadrant pixels appear in the plain image.
    pub const ALL: [Quadrant; 4] = [
        Quadrant::TopLeft,
        Quadrant::TopRight,
        Quadrant::BottomLeft,
        Quadrant::BottomRight,
    ];
}

/// Which shape peels which quadrant, in extraction order, plus whether each
/// block is rotated 180 degrees before extraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationPlan {
    assignment: [(Quadrant, ShapeKind); 4],
    flip: bool,
}

impl PermutationPlan {
    /// Builds a plan from an explicit extraction order. Every quadrant must
    /// appear exactly once.
    pub fn new(assignment: [(Quadrant, ShapeKind); 4], flip: bool) -> Result<Self, Error> {
        let mut seen = [false; 4];
        for (quadrant, _) in &assignment {
            let slot = *quadrant as usize;
            if seen[slot] {
                return Err(Error::InvalidPlan("each quadrant must appear exactly once"));
            }
            seen[slot] = true;
        }
        Ok(Self { assignment, flip })
    }

    /// Shapes listed for the quadrants in row-major order (top-left,
    /// top-right, bottom-left, bottom-right), extracted in that order.
    pub fn from_shapes(shapes: [ShapeKind; 4], flip: bool) -> Self {
        let mut assignment = [(Quadrant::TopLeft, ShapeKind::L); 4];
        for (slot, (quadrant, shape)) in Quadrant::ALL.iter().zip(shapes).enumerate() {
            assignment[slot] = (*quadrant, shape);
        }
        Self { assignment, flip }
    }

    pub fn with_flip(mut self, flip: bool) -> Self {
        self.flip = flip;
        self
    }

    pub fn assignment(&self) -> &[(Quadrant, ShapeKind); 4] {
        &self.assignment
    }

    pub fn flip(&self) -> bool {
        self.flip
    }
}

/// L, U, Ring, inverted U over the quadrants in row-major order, with the
/// 180-degree block flip enabled.
impl Default for PermutationPlan {
    fn default() -> Self {
        Self::from_shapes(
            [
                ShapeKind::L,
                ShapeKind::U,
                ShapeKind::Ring,
                ShapeKind::InvertedU,
            ],
            true,
        )
    }
}

impl FromStr for PermutationPlan {
    type Err = Error;

    /// Parses four shape codes (for example `LURV`), one per quadrant in
    /// row-major order. The flip defaults to on.
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut shapes = [ShapeKind::L; 4];
        let mut count = 0;
        for ch in s.chars() {
            if count == 4 {
                return Err(Error::InvalidPlan("plan must have exactly four shape codes"));
            }
            shapes[count] = ShapeKind::from_code(ch)
                .ok_or(Error::InvalidPlan("shape codes are L, J, U, V, R"))?;
            count += 1;
        }
        if count != 4 {
            return Err(Error::InvalidPlan("plan must have exactly four shape codes"));
        }
        Ok(Self::from_shapes(shapes, true))
    }
}

impl fmt::Display for PermutationPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (_, shape) in &self.assignment {
            write!(f, "{}", shape.code())?;
        }
        Ok(())
    }
}

/// A bijection on pixel indices: `forward()[k]` is the plain-image index of
/// the pixel placed at scrambled position `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexMap {
    forward: Vec<usize>,
}

impl IndexMap {
    /// Validates that `forward` is a permutation of `0..forward.len()`.
    pub fn from_vec(forward: Vec<usize>) -> Result<Self, Error> {
        let mut seen = vec![false; forward.len()];
        for &index in &forward {
            if index >= forward.len() || seen[index] {
                return Err(Error::NotAPermutation);
            }
            seen[index] = true;
        }
        Ok(Self { forward })
    }

    pub fn forward(&self) -> &[usize] {
        &self.forward
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }
}

/// Emits every cell of an `m x n` rectangle exactly once by layer peeling.
pub fn peel_shape(kind: ShapeKind, m: usize, n: usize) -> Vec<(usize, usize)> {
    assert!(m >= 1 && n >= 1, "rectangle must be at least 1x1");
    let mut out = Vec::with_capacity(m * n);
    let emit = |out: &mut Vec<(usize, usize)>, r: i64, c: i64| {
        out.push((r as usize, c as usize));
    };

    // Inclusive active rectangle; i64 so shrinking past zero is harmless.
    let (mut r0, mut r1, mut c0, mut c1) = (0i64, m as i64 - 1, 0i64, n as i64 - 1);
    while r0 <= r1 && c0 <= c1 {
        match kind {
            ShapeKind::L => {
                for r in r0..=r1 {
                    emit(&mut out, r, c0);
                }
                for c in c0 + 1..=c1 {
                    emit(&mut out, r1, c);
                }
                c0 += 1;
                r1 -= 1;
            }
            ShapeKind::InvertedL => {
                for r in r0..=r1 {
                    emit(&mut out, r, c1);
                }
                for c in (c0..c1).rev() {
                    emit(&mut out, r1, c);
                }
                c1 -= 1;
                r1 -= 1;
            }
            ShapeKind::U => {
                for r in r0..=r1 {
                    emit(&mut out, r, c0);
                }
                if c1 > c0 {
                    for c in c0 + 1..c1 {
                        emit(&mut out, r1, c);
                    }
                    for r in (r0..=r1).rev() {
                        emit(&mut out, r, c1);
                    }
                }
                c0 += 1;
                c1 -= 1;
                r1 -= 1;
            }
            ShapeKind::InvertedU => {
                for r in (r0..=r1).rev() {
                    emit(&mut out, r, c0);
                }
                if c1 > c0 {
                    for c in c0 + 1..c1 {
                        emit(&mut out, r0, c);
                    }
                    for r in r0..=r1 {
                        emit(&mut out, r, c1);
                    }
                }
                c0 += 1;
                c1 -= 1;
                r0 += 1;
            }
            ShapeKind::Ring => {
                for c in c0..=c1 {
                    emit(&mut out, r0, c);
                }
                for r in r0 + 1..=r1 {
                    emit(&mut out, r, c1);
                }
                if r1 > r0 {
                    for c in (c0..c1).rev() {
                        emit(&mut out, r1, c);
                    }
                }
                if c1 > c0 {
                    for r in (r0 + 1..r1).rev() {
                        emit(&mut out, r, c0);
                    }
                }
                r0 += 1;
                r1 -= 1;
                c0 += 1;
                c1 -= 1;
            }
        }
    }
    debug_assert_eq!(out.len(), m * n);
    out
}

/// Builds the full-image permutation for a plan. The image must have even
/// dimensions of at least 2x2 so the quadrant split is exact.
pub fn build_index_map(rows: usize, cols: usize, plan: &PermutationPlan) -> Result<IndexMap, Error> {
    if rows < 2 || cols < 2 || !rows.is_multiple_of(2) || !cols.is_multiple_of(2) {
        return Err(Error::OddDimensions { rows, cols });
    }
    let (block_rows, block_cols) = (rows / 2, cols / 2);
    let mut forward = Vec::with_capacity(rows * cols);
    for (quadrant, shape) in plan.assignment() {
        let (origin_r, origin_c) = match quadrant {
            Quadrant::TopLeft => (0, 0),
            Quadrant::TopRight => (0, block_cols),
            Quadrant::BottomLeft => (block_rows, 0),
            Quadrant::BottomRight => (block_rows, block_cols),
        };
        for (i, j) in peel_shape(*shape, block_rows, block_cols) {
            // The block is rotated 180 degrees before extraction, so the
            // traversal coordinate (i, j) reads the mirrored source cell.
            let (src_i, src_j) = if plan.flip() {
                (block_rows - 1 - i, block_cols - 1 - j)
            } else {
                (i, j)
            };
            forward.push((origin_r + src_i) * cols + (origin_c + src_j));
        }
    }
    Ok(IndexMap { forward })
}

/// Gathers pixels through the map: output position `k` takes the input pixel
/// at `map.forward()[k]`.
pub fn apply_permutation(img: &GrayImage, map: &IndexMap) -> Result<GrayImage, Error> {
    if map.len() != img.pixel_count() {
        return Err(Error::SizeMismatch {
            expected: img.pixel_count(),
            actual: map.len(),
        });
    }
    let src = img.as_bytes();
    let pixels = map.forward.iter().map(|&i| src[i]).collect();
    GrayImage::new(img.rows(), img.cols(), pixels)
}

/// The inverse bijection: applying both maps in either order is the identity.
pub fn invert_index_map(map: &IndexMap) -> IndexMap {
    let mut inverse = vec![0usize; map.len()];
    for (k, &src) in map.forward.iter().enumerate() {
        inverse[src] = k;
    }
    IndexMap { forward: inverse }
}
