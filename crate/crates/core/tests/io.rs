use multiscale::io::{
    coeff_csv, read_coeff_csv, read_pgm, read_wav, write_pgm, write_report, write_wav,
    write_coeff_csv, AudioBuffer, CoeffTable, GrayImage,
};
use multiscale::metrics::{quality_report, QualityConfig, QualityRecord};
use multiscale::{decompose, decompose2d, ExtensionMode, WaveletId};
use proptest::prelude::*;

#[test]
fn csv_of_two_level_haar_has_eight_rows() {
    let x: Vec<f64> = (0..8).map(|k| k as f64 * 0.5 - 1.0).collect();
    let d = decompose(&x, WaveletId::Haar, 2, ExtensionMode::Periodic).unwrap();
    let text = coeff_csv(&d.coeff_rows());
    assert_eq!(text.lines().count(), 1 + 8);
    let rows = read_coeff_csv(&text).unwrap();
    let detail1: Vec<f64> = rows
        .iter()
        .filter(|r| r.level == 1 && r.band == "detail")
        .map(|r| r.value)
        .collect();
    assert_eq!(detail1, d.details[0]);
    let approx: Vec<f64> = rows.iter().filter(|r| r.band == "approx").map(|r| r.value).collect();
    assert_eq!(approx, d.approx);
}

#[test]
fn csv_round_trips_2d_coefficients_exactly() {
    let img = ndarray::Array2::from_shape_fn((16, 16), |(r, c)| ((r * 37 + c * 11) % 23) as f64 / 7.0);
    let d = decompose2d(&img, WaveletId::Symlet(4), 2, ExtensionMode::Periodic).unwrap();
    let rows = d.coeff_rows();
    assert_eq!(rows.len(), 256);
    let back = read_coeff_csv(&coeff_csv(&rows)).unwrap();
    assert_eq!(back, rows);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.csv");
    write_coeff_csv(&d, &path).unwrap();
    assert_eq!(read_coeff_csv(&std::fs::read_to_string(&path).unwrap()).unwrap(), rows);
}

#[test]
fn report_file_marks_infinite_snr() {
    let x = vec![0.25, -0.5, 0.75];
    let rec = QualityRecord {
        wavelet: "db4".into(),
        levels: 4,
        report: quality_report(&x, &x, &QualityConfig::default()).unwrap(),
    };
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    write_report(&rec, &path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["infinite_snr"], true);
    assert!(v.get("snr_db").is_none());
    for key in ["wavelet", "levels", "mse", "entropy_bits", "histogram_mean"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

proptest! {
    #[test]
    fn pgm_round_trip(rows in 1usize..20, cols in 1usize..20, seed in any::<u8>()) {
        let pixels = (0..rows * cols).map(|k| (k as u8).wrapping_mul(31).wrapping_add(seed)).collect();
        let img = GrayImage::new(rows, cols, pixels).unwrap();
        let bytes = write_pgm(&img);
        prop_assert_eq!(read_pgm(&bytes).unwrap(), img);
        let header = format!("P5\n{cols} {rows}\n255\n");
        prop_assert!(bytes.starts_with(header.as_bytes()));
        prop_assert_eq!(bytes.len(), header.len() + rows * cols);
    }

    #[test]
    fn wav_round_trip(samples in prop::collection::vec(any::<i16>(), 1..200), rate in 1u32..96000) {
        let buf = AudioBuffer {
            samples: samples.iter().map(|&s| s as f64 / 32768.0).collect(),
            sample_rate: rate,
            source_bit_depth: 16,
        };
        let back = read_wav(&write_wav(&buf)).unwrap();
        prop_assert_eq!(back, buf.clone());
        prop_assert_eq!(write_wav(&read_wav(&write_wav(&buf)).unwrap()), write_wav(&buf));
    }

    #[test]
    fn csv_values_survive(values in prop::collection::vec(any::<f64>().prop_filter("finite", |v| v.is_finite()), 1..50)) {
        let d = multiscale::io::CoeffRow { level: 1, band: "detail".into(), index: 0, col: None, value: 0.0 };
        let rows: Vec<_> = values.iter().enumerate()
            .map(|(i, &v)| multiscale::io::CoeffRow { index: i, value: v, ..d.clone() })
            .collect();
        let back = read_coeff_csv(&coeff_csv(&rows)).unwrap();
        for (a, b) in back.iter().zip(&rows) {
            prop_assert_eq!(a.value.to_bits(), b.value.to_bits());
        }
    }

    #[test]
    fn garbage_never_panics(bytes in prop::collection::vec(any::<u8>(), 0..200)) {
        let _ = read_wav(&bytes);
        let _ = read_pgm(&bytes);
        let _ = read_coeff_csv(&String::from_utf8_lossy(&bytes));
        let mut riff = b"RIFF\xff\x00\x00\x00WAVE".to_vec();
        riff.extend_from_slice(&bytes);
        let _ = read_wav(&riff);
        let mut pgm = b"P5 ".to_vec();
        pgm.extend_from_slice(&bytes);
        let _ = read_pgm(&pgm);
    }
}
