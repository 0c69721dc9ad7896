//! Markdown, CSV and JSON renderings of quality and compression results.

use clap::ValueEnum;
use multiscale::compress::CompressionReport;
use multiscale::io::report_json;
use multiscale::metrics::QualityRecord;
use multiscale::filters::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Md,
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Md => "md",
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

fn db(v: f64) -> String {
    if v.is_infinite() {
        "inf".into()
    } else {
        format!("{v:.4}")
    }
}

fn render(format: Format, header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    match format {
        Format::Md => {
            out += &format!("| {} |\n", header.join(" | "));
            out += &format!("|{}\n", "---|".repeat(header.len()));
            for r in rows {
                out += &format!("| {} |\n", r.join(" | "));
            }
        }
        _ => {
            out += &header.join(",");
            out.push('\n');
            for r in rows {
                out += &r.join(",");
                out.push('\n');
            }
        }
    }
    out
}

pub fn quality_table(records: &[QualityRecord], format: Format) -> String {
    if format == Format::Json {
        return report_json(&records);
    }
    let header: &[&str] = match format {
        Format::Md => &["Wavelet", "Levels", "SNR (dB)", "MSE", "Entropy (bits)", "PSNR (dB)", "Histogram mean"],
        _ => &["wavelet", "levels", "snr_db", "mse", "entropy_bits", "psnr_db", "histogram_mean"],
    };
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            vec![
                r.wavelet.clone(),
                r.levels.to_string(),
                db(r.report.snr_db),
                format!("{:.6e}", r.report.mse),
                format!("{:.4}", r.report.entropy_bits),
                db(r.report.psnr_db),
                format!("{:.4}", r.report.histogram_mean),
            ]
        })
        .collect();
    render(format, header, &rows)
}

pub fn compression_table(reports: &[CompressionReport], format: Format) -> String {
    if format == Format::Json {
        return report_json(&reports);
    }
    let header: &[&str] = match format {
        Format::Md => &[
            "Wavelet",
            "Levels",
            "Threshold",
            "Compression (%)",
            "Zero count",
            "Coefficients",
            "PSNR (dB)",
            "Retained energy (%)",
        ],
        _ => &[
            "wavelet",
            "levels",
            "threshold",
            "zero_percentage",
            "zero_count",
            "coefficient_count",
            "psnr_db",
            "retained_energy_percent",
        ],
    };
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            vec![
                r.wavelet.to_string(),
                r.levels.to_string(),
                r.threshold.to_string(),
                format!("{:.4}", r.zero_percentage),
                r.zero_count.to_string(),
                r.coefficient_count.to_string(),
                db(r.psnr_db),
                format!("{:.4}", r.retained_energy_percent),
            ]
        })
        .collect();
    render(format, header, &rows)
}

fn family_label(f: Family) -> &'static str {
    match f {
        Family::Haar => "Haar",
        Family::Daubechies => "Daubechies",
        Family::Symlet => "Symmlet",
        Family::Coiflet => "Coiflet",
        Family::Biorthogonal => "Biorthogonal",
    }
}

/// Wavelets across, one `Compression` row, percentages to two places.
pub fn sweep_csv(reports: &[CompressionReport]) -> String {
    let families: Vec<Family> = reports.iter().map(|r| r.wavelet.family()).collect();
    let label = match families.first() {
        Some(&f) if families.iter().all(|&g| g == f) => family_label(f),
        _ => "Wavelet",
    };
    let mut head = vec![label.to_string()];
    let mut row = vec!["Compression".to_string()];
    for r in reports {
        head.push(r.wavelet.to_string());
        row.push(format!("{:.2}", r.zero_percentage));
    }
    format!("{}\n{}\n", head.join(","), row.join(","))
}
