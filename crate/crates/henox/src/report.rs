//! JSON rendering of analysis reports. Undefined correlations become null.

use henox_core::analysis::AnalysisReport;
use serde::Serialize;

#[derive(Serialize)]
struct ReportDoc<'a> {
    entropy: f64,
    glcm: GlcmDoc,
    adjacent_correlation: AdjacentDoc,
    chi_square: f64,
    histogram: &'a [u64],
}

#[derive(Serialize)]
struct GlcmDoc {
    contrast: f64,
    energy: f64,
    homogeneity: f64,
    correlation: Option<f64>,
}

#[derive(Serialize)]
struct AdjacentDoc {
    horizontal: Option<f64>,
    vertical: Option<f64>,
    diagonal: Option<f64>,
}

pub fn to_json(report: &AnalysisReport) -> String {
    let doc = ReportDoc {
        entropy: report.entropy,
        glcm: GlcmDoc {
            contrast: report.glcm.contrast,
            energy: report.glcm.energy,
            homogeneity: report.glcm.homogeneity,
            correlation: report.glcm.correlation,
        },
        adjacent_correlation: AdjacentDoc {
            horizontal: report.adjacent_correlation.horizontal,
            vertical: report.adjacent_correlation.vertical,
            diagonal: report.adjacent_correlation.diagonal,
        },
        chi_square: report.chi_square,
        histogram: report.histogram.counts(),
    };
    let mut json = serde_json::to_string_pretty(&doc).expect("report fields always serialize");
    json.push('\n');
    json
}
