//! Statistical security metrics: histogram, Shannon entropy, gray-level
//! co-occurrence (GLCM) texture measures, adjacent-pixel correlation, and a
//! chi-square uniformity statistic.
//!
//! Every metric is a pure function of the image, computed over all pixels or
//! all pairs (no sampling), with a fixed summation order, so repeated
//! analyses are bit-identical.

use alloc::vec;
use alloc::vec::Vec;

use crate::image::GrayImage;
use crate::math;
use crate::Error;

/// Pixel-value counts of one image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Histogram {
    counts: [u64; 256],
}

impl Histogram {
    pub fn counts(&self) -> &[u64; 256] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Normalized gray-level co-occurrence matrix for one neighbor offset.
#[derive(Clone, Debug, PartialEq)]
pub struct Glcm {
    /// 256x256 pair probabilities, row-major; sums to 1.
    probs: Vec<f64>,
    offset: (isize, isize),
}

impl Glcm {
    /// Probability of the pair (first pixel `i`, neighbor `j`).
    pub fn prob(&self, i: usize, j: usize) -> f64 {
        assert!(i < 256 && j < 256, "gray levels are 0..=255");
        self.probs[i * 256 + j]
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn offset(&self) -> (isize, isize) {
        self.offset
    }
}

/// Texture measures of a [`Glcm`]. Correlation is `None` when a marginal has
/// zero variance (a constant image), where the quotient is undefined.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GlcmMetrics {
    pub contrast: f64,
    pub energy: f64,
    pub homogeneity: f64,
    pub correlation: Option<f64>,
}

/// Direction of an adjacent-pixel pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Horizontal,
    Vertical,
    Diagonal,
}

impl Direction {
    pub const ALL: [Direction; 3] = [
        Direction::Horizontal,
        Direction::Vertical,
        Direction::Diagonal,
    ];

    fn offset(self) -> (usize, usize) {
        match self {
            Direction::Horizontal => (0, 1),
            Direction::Vertical => (1, 0),
            Direction::Diagonal => (1, 1),
        }
    }
}

/// Per-direction adjacent-pixel correlations; `None` where undefined.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AdjacentCorrelation {
    pub horizontal: Option<f64>,
    pub vertical: Option<f64>,
    pub diagonal: Option<f64>,
}

/// Everything the analyzer measures on one image.
#[derive(Clone, Debug, PartialEq)]
pub struct AnalysisReport {
    pub histogram: Histogram,
    /// Shannon entropy in bits, in [0, 8].
    pub entropy: f64,
    pub glcm: GlcmMetrics,
    pub adjacent_correlation: AdjacentCorrelation,
    pub chi_square: f64,
}

/// Counts how often each gray level occurs.
pub fn compute_histogram(img: &GrayImage) -> Histogram {
    let mut counts = [0u64; 256];
    for &p in img.as_bytes() {
        counts[p as usize] += 1;
    }
    Histogram { counts }
}

/// Shannon entropy in bits: `-sum f(v) log2 f(v)` over occurring values.
pub fn compute_entropy(img: &GrayImage) -> f64 {
    let histogram = compute_histogram(img);
    let total = histogram.total() as f64;
    let mut entropy = 0.0;
    for &count in histogram.counts() {
        if count > 0 {
            let f = count as f64 / total;
            entropy -= f * math::log2(f);
        }
    }
    entropy
}

/// Builds the non-symmetric GLCM: pairs `(I(i, j), I(i + dr, j + dc))` over
/// every position where the neighbor stays inside the image, normalized by
/// the pair count `(rows - |dr|) * (cols - |dc|)`.
pub fn compute_glcm(img: &GrayImage, offset: (isize, isize)) -> Result<Glcm, Error> {
    let (rows, cols) = img.dims();
    let (dr, dc) = offset;
    if dr.unsigned_abs() >= rows || dc.unsigned_abs() >= cols {
        return Err(Error::OffsetTooLarge { offset, rows, cols });
    }

    let mut counts = vec![0u64; 256 * 256];
    for i in 0..rows {
        let ni = i as isize + dr;
        if ni < 0 || ni as usize >= rows {
            continue;
        }
        for j in 0..cols {
            let nj = j as isize + dc;
            if nj < 0 || nj as usize >= cols {
                continue;
            }
            let a = img.get(i, j) as usize;
            let b = img.get(ni as usize, nj as usize) as usize;
            counts[a * 256 + b] += 1;
        }
    }

    let pairs = (rows - dr.unsigned_abs()) * (cols - dc.unsigned_abs());
    debug_assert_eq!(counts.iter().sum::<u64>(), pairs as u64);
    let probs = counts.iter().map(|&c| c as f64 / pairs as f64).collect();
    Ok(Glcm { probs, offset })
}

/// Contrast, energy, homogeneity and correlation of a GLCM.
pub fn glcm_metrics(glcm: &Glcm) -> GlcmMetrics {
    let mut contrast = 0.0;
    let mut energy = 0.0;
    let mut homogeneity = 0.0;
    let mut row_marginal = [0.0f64; 256];
    let mut col_marginal = [0.0f64; 256];
    for (i, row_p) in row_marginal.iter_mut().enumerate() {
        for (j, col_p) in col_marginal.iter_mut().enumerate() {
            let p = glcm.probs[i * 256 + j];
            if p == 0.0 {
                continue;
            }
            let d = i as f64 - j as f64;
            contrast += p * d * d;
            energy += p * p;
            homogeneity += p / (1.0 + math::abs(d));
            *row_p += p;
            *col_p += p;
        }
    }

    let moments = |marginal: &[f64; 256]| {
        let mut mean = 0.0;
        for (level, &p) in marginal.iter().enumerate() {
            mean += level as f64 * p;
        }
        let mut variance = 0.0;
        for (level, &p) in marginal.iter().enumerate() {
            let d = level as f64 - mean;
            variance += d * d * p;
        }
        (mean, variance)
    };
    let (row_mean, row_var) = moments(&row_marginal);
    let (col_mean, col_var) = moments(&col_marginal);

    let denominator = math::sqrt(row_var) * math::sqrt(col_var);
    let correlation = if denominator == 0.0 {
        None
    } else {
        let mut covariance = 0.0;
        for i in 0..256 {
            for j in 0..256 {
                let p = glcm.probs[i * 256 + j];
                if p != 0.0 {
                    covariance += (i as f64 - row_mean) * (j as f64 - col_mean) * p;
                }
            }
        }
        Some((covariance / denominator).clamp(-1.0, 1.0))
    };

    GlcmMetrics {
        contrast,
        energy,
        homogeneity,
        correlation,
    }
}

/// Pearson correlation over every adjacent pixel pair in one direction.
/// Errors with `DegenerateDistribution` when either marginal has zero
/// variance, where the coefficient is undefined.
pub fn adjacent_correlation(img: &GrayImage, direction: Direction) -> Result<f64, Error> {
    let (rows, cols) = img.dims();
    let (dr, dc) = direction.offset();
    if rows <= dr || cols <= dc {
        return Err(Error::DegenerateDistribution);
    }
    let pair_rows = rows - dr;
    let pair_cols = cols - dc;
    let n = (pair_rows * pair_cols) as f64;

    let mut sum_x = 0.0;
    let mut sum_y = 0.0;
    for i in 0..pair_rows {
        for j in 0..pair_cols {
            sum_x += img.get(i, j) as f64;
            sum_y += img.get(i + dr, j + dc) as f64;
        }
    }
    let mean_x = sum_x / n;
    let mean_y = sum_y / n;

    let mut var_x = 0.0;
    let mut var_y = 0.0;
    let mut cov = 0.0;
    for i in 0..pair_rows {
        for j in 0..pair_cols {
            let dx = img.get(i, j) as f64 - mean_x;
            let dy = img.get(i + dr, j + dc) as f64 - mean_y;
            var_x += dx * dx;
            var_y += dy * dy;
            cov += dx * dy;
        }
    }
    if var_x == 0.0 || var_y == 0.0 {
        return Err(Error::DegenerateDistribution);
    }
    Ok((cov / (math::sqrt(var_x) * math::sqrt(var_y))).clamp(-1.0, 1.0))
}

/// Chi-square statistic against the uniform 256-level distribution.
pub fn chi_square_uniformity(histogram: &Histogram) -> f64 {
    let total = histogram.total();
    assert!(total > 0, "histogram must not be empty");
    let expected = total as f64 / 256.0;
    let mut chi = 0.0;
    for &count in histogram.counts() {
        let d = count as f64 - expected;
        chi += d * d / expected;
    }
    chi
}

/// Runs every metric on one image with the given GLCM offset. Undefined
/// correlations are reported as `None` rather than failing the analysis.
pub fn analyze(img: &GrayImage, offset: (isize, isize)) -> Result<AnalysisReport, Error> {
    let histogram = compute_histogram(img);
    let entropy = compute_entropy(img);
    let chi_square = chi_square_uniformity(&histogram);
    let glcm = glcm_metrics(&compute_glcm(img, offset)?);
    let adjacent_correlation = AdjacentCorrelation {
        horizontal: adjacent_correlation(img, Direction::Horizontal).ok(),
        vertical: adjacent_correlation(img, Direction::Vertical).ok(),
        diagonal: adjacent_correlation(img, Direction::Diagonal).ok(),
    };
    Ok(AnalysisReport {
        histogram,
        entropy,
        glcm,
        adjacent_correlation,
        chi_square,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        let scale = if b.abs() > 1.0 { b.abs() } else { 1.0 };
        (a - b).abs() <= tol * scale
    }

    #[test]
    fn histogram_counts_and_total() {
        let img = GrayImage::constant(4, 4, 7).unwrap();
        let h = compute_histogram(&img);
        assert_eq!(h.counts()[7], 16);
        assert_eq!(h.counts().iter().filter(|&&c| c > 0).count(), 1);
        assert_eq!(h.total(), 16);
    }

    #[test]
    fn histogram_is_permutation_invariant() {
        use crate::permute::{apply_permutation, build_index_map, PermutationPlan};
        let img = GrayImage::from_fn(6, 8, |r, c| (r * 41 + c * 13) as u8).unwrap();
        let map = build_index_map(6, 8, &PermutationPlan::default()).unwrap();
        let scrambled = apply_permutation(&img, &map).unwrap();
        assert_eq!(compute_histogram(&img), compute_histogram(&scrambled));
    }

    #[test]
    fn entropy_extremes() {
        let constant = GrayImage::constant(4, 4, 9).unwrap();
        assert_eq!(compute_entropy(&constant), 0.0);

        let uniform = GrayImage::from_fn(16, 16, |r, c| (r * 16 + c) as u8).unwrap();
        assert_eq!(compute_entropy(&uniform), 8.0);
    }

    #[test]
    fn entropy_of_two_symbols() {
        let img = GrayImage::from_fn(2, 2, |r, c| ((r + c) % 2) as u8 * 255).unwrap();
        assert!(close(compute_entropy(&img), 1.0, 1e-12));
    }

    #[test]
    fn glcm_of_single_pair() {
        let img = GrayImage::new(1, 2, vec![0, 255]).unwrap();
        let glcm = compute_glcm(&img, (0, 1)).unwrap();
        assert_eq!(glcm.prob(0, 255), 1.0);
        assert_eq!(glcm.prob(255, 0), 0.0);
    }

    #[test]
    fn glcm_of_constant_image_is_one_cell() {
        let img = GrayImage::constant(3, 5, 42).unwrap();
        let glcm = compute_glcm(&img, (0, 1)).unwrap();
        assert_eq!(glcm.prob(42, 42), 1.0);

        let metrics = glcm_metrics(&glcm);
        assert_eq!(metrics.contrast, 0.0);
        assert_eq!(metrics.energy, 1.0);
        assert_eq!(metrics.homogeneity, 1.0);
        assert_eq!(metrics.correlation, None);
    }

    #[test]
    fn glcm_probabilities_sum_to_one() {
        let img = GrayImage::from_fn(9, 7, |r, c| (r * 89 + c * 57 + 3) as u8).unwrap();
        for offset in [(0, 1), (1, 0), (1, 1), (0, -1), (-2, 3)] {
            let glcm = compute_glcm(&img, offset).unwrap();
            let sum: f64 = glcm.probs().iter().sum();
            assert!(close(sum, 1.0, 1e-9), "offset {offset:?}: sum {sum}");
        }
    }

    #[test]
    fn glcm_negative_offset_mirrors_positive() {
        // Swapping the offset sign transposes the pair distribution.
        let img = GrayImage::from_fn(5, 6, |r, c| (r * 50 + c * 29) as u8).unwrap();
        let fwd = compute_glcm(&img, (0, 1)).unwrap();
        let bwd = compute_glcm(&img, (0, -1)).unwrap();
        for i in 0..256 {
            for j in 0..256 {
                assert_eq!(fwd.prob(i, j), bwd.prob(j, i));
            }
        }
    }

    #[test]
    fn oversized_offsets_are_rejected() {
        let img = GrayImage::constant(3, 4, 0).unwrap();
        assert!(matches!(
            compute_glcm(&img, (3, 0)),
            Err(Error::OffsetTooLarge { .. })
        ));
        assert!(matches!(
            compute_glcm(&img, (0, -4)),
            Err(Error::OffsetTooLarge { .. })
        ));
        assert!(compute_glcm(&img, (2, 3)).is_ok());
    }

    #[test]
    fn checkerboard_metrics_match_hand_computation() {
        // Horizontal neighbors always differ by 255 and the two pair kinds
        // are equiprobable: contrast 255^2, energy 0.5, homogeneity 1/256,
        // correlation -1.
        let img = GrayImage::from_fn(16, 16, |r, c| ((r + c) % 2) as u8 * 255).unwrap();
        let metrics = glcm_metrics(&compute_glcm(&img, (0, 1)).unwrap());
        assert!(close(metrics.contrast, 255.0 * 255.0, 1e-9));
        assert!(close(metrics.energy, 0.5, 1e-9));
        assert!(close(metrics.homogeneity, 1.0 / 256.0, 1e-9));
        assert!(close(metrics.correlation.unwrap(), -1.0, 1e-9));
    }

    #[test]
    fn ramp_rows_have_unit_horizontal_correlation() {
        let img = GrayImage::from_fn(16, 16, |_, c| c as u8).unwrap();
        let r = adjacent_correlation(&img, Direction::Horizontal).unwrap();
        assert!(close(r, 1.0, 1e-9));

        // Negating both members of every pair leaves r unchanged.
        let neg = GrayImage::from_fn(16, 16, |_, c| 255 - c as u8).unwrap();
        let rn = adjacent_correlation(&neg, Direction::Horizontal).unwrap();
        assert!(close(rn, 1.0, 1e-9));

        // A ramp against its reverse is anti-correlated between rows.
        let alt = GrayImage::from_fn(16, 16, |r, c| {
            if r % 2 == 0 {
                c as u8
            } else {
                (15 - c) as u8
            }
        })
        .unwrap();
        let rv = adjacent_correlation(&alt, Direction::Vertical).unwrap();
        assert!(close(rv, -1.0, 1e-9));
    }

    #[test]
    fn constant_image_correlation_is_degenerate() {
        let img = GrayImage::constant(4, 4, 128).unwrap();
        for direction in Direction::ALL {
            assert_eq!(
                adjacent_correlation(&img, direction),
                Err(Error::DegenerateDistribution)
            );
        }
    }

    #[test]
    fn too_thin_images_are_degenerate_in_that_direction() {
        let img = GrayImage::from_fn(1, 4, |_, c| c as u8).unwrap();
        assert!(adjacent_correlation(&img, Direction::Horizontal).is_ok());
        assert_eq!(
            adjacent_correlation(&img, Direction::Vertical),
            Err(Error::DegenerateDistribution)
        );
        assert_eq!(
            adjacent_correlation(&img, Direction::Diagonal),
            Err(Error::DegenerateDistribution)
        );
    }

    #[test]
    fn chi_square_extremes() {
        let uniform = GrayImage::from_fn(16, 16, |r, c| (r * 16 + c) as u8).unwrap();
        assert_eq!(chi_square_uniformity(&compute_histogram(&uniform)), 0.0);

        // Constant image, total T: one bin holds T, the rest hold 0.
        let constant = GrayImage::constant(16, 16, 3).unwrap();
        let t = 256.0;
        let expected = 255.0 * t / 256.0 + (t - t / 256.0) * (t - t / 256.0) / (t / 256.0);
        assert!(close(
            chi_square_uniformity(&compute_histogram(&constant)),
            expected,
            1e-12
        ));
    }

    #[test]
    fn analyze_reports_all_metrics_and_tolerates_degeneracy() {
        let constant = GrayImage::constant(4, 4, 7).unwrap();
        let report = analyze(&constant, (0, 1)).unwrap();
        assert_eq!(report.entropy, 0.0);
        assert_eq!(report.glcm.correlation, None);
        assert_eq!(report.adjacent_correlation.horizontal, None);
        assert_eq!(report.histogram.counts()[7], 16);

        let textured = GrayImage::from_fn(8, 8, |r, c| (r * 37 + c * 11) as u8).unwrap();
        let report = analyze(&textured, (0, 1)).unwrap();
        assert!(report.entropy > 0.0);
        assert!(report.adjacent_correlation.horizontal.is_some());
        assert!(report.chi_square > 0.0);

        assert!(matches!(
            analyze(&textured, (8, 0)),
            Err(Error::OffsetTooLarge { .. })
        ));
    }

    #[test]
    fn analyze_is_deterministic() {
        let img = GrayImage::from_fn(32, 32, |r, c| (r * 101 + c * 59 + 17) as u8).unwrap();
        let a = analyze(&img, (0, 1)).unwrap();
        let b = analyze(&img, (0, 1)).unwrap();
        assert_eq!(a, b);
    }
}
