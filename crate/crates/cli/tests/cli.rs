use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use multiscale::io::{read_coeff_csv, read_pgm, write_wav, AudioBuffer};
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_multiscale"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn tone_wav(dir: &Path) -> std::path::PathBuf {
    let samples = (0..2000)
        .map(|k| (0.4 * (k as f64 * 0.07).sin() + 0.1 * (k as f64 * 1.9).cos() * 0.5).clamp(-1.0, 1.0))
        .map(|v| (v * 32768.0).round() / 32768.0)
        .collect();
    let path = dir.join("voice.wav");
    fs::write(
        &path,
        write_wav(&AudioBuffer {
            samples,
            sample_rate: 8000,
            source_bit_depth: 16,
        }),
    )
    .unwrap();
    path
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn analyze1d_haar_is_lossless() {
    let dir = tempfile::tempdir().unwrap();
    let wav = tone_wav(dir.path());
    let out = dir.path().join("out");
    let o = run(&["analyze1d", p(&wav), "--wavelet", "haar", "--levels", "4", "--out", p(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let r = json(&out.join("report.json"));
    assert!(r["mse"].as_f64().unwrap() < 1e-16);
    assert_eq!(r["infinite_snr"], true);
    let rows = read_coeff_csv(&fs::read_to_string(out.join("coefficients.csv")).unwrap()).unwrap();
    assert_eq!(rows.len(), 2000);
    assert_eq!(fs::read(out.join("reconstruction.wav")).unwrap(), fs::read(&wav).unwrap());
}

#[test]
fn analyze1d_morlet_takes_the_continuous_path() {
    let dir = tempfile::tempdir().unwrap();
    let wav = tone_wav(dir.path());
    let out = dir.path().join("out");
    let o = run(&["analyze1d", p(&wav), "--wavelet", "morlet", "--out", p(&out)]);
    assert!(o.status.success());
    let r = json(&out.join("report.json"));
    assert_eq!(r["wavelet"], "morlet");
    assert!(r["mse"].as_f64().unwrap().is_finite());
    let rows = read_coeff_csv(&fs::read_to_string(out.join("coefficients.csv")).unwrap()).unwrap();
    assert_eq!(rows.len(), 5 * 2000);
    assert!(rows.iter().any(|r| r.band == "residual"));
}

#[test]
fn unknown_wavelet_exits_3_and_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let wav = tone_wav(dir.path());
    let out = dir.path().join("out");
    let o = run(&["analyze1d", p(&wav), "--wavelet", "nosuch", "--out", p(&out)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("nosuch"));
    assert!(o.stdout.is_empty());
    assert!(!out.exists());
}

#[test]
fn missing_or_bad_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let bad = dir.path().join("bad.pgm");
    fs::write(&bad, b"P6\n1 1\n255\n\0\0\0").unwrap();
    assert_eq!(run(&["analyze2d", p(&bad), "--out", p(&out)]).status.code(), Some(2));
    let gone = dir.path().join("gone.wav");
    assert_eq!(run(&["analyze1d", p(&gone), "--out", p(&out)]).status.code(), Some(2));
    assert_eq!(run(&["compress", "--levels", "9", "--out", p(&out)]).status.code(), Some(2));
}

#[test]
fn analyze2d_writes_mosaic_bands_and_lossless_report() {
    let dir = tempfile::tempdir().unwrap();
    let fp = dir.path().join("fp");
    assert!(run(&["fingerprint", "--rows", "100", "--cols", "90", "--out", p(&fp)]).status.success());
    let out = dir.path().join("out");
    let img = fp.join("fingerprint.pgm");
    let o = run(&["analyze2d", p(&img), "--wavelet", "db2", "--levels", "3", "--out", p(&out)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let mosaic = read_pgm(&fs::read(out.join("mosaic.pgm")).unwrap()).unwrap();
    assert_eq!(mosaic.dims(), (104, 96));
    assert_eq!(fs::read(out.join("reconstruction.pgm")).unwrap(), fs::read(&img).unwrap());
    assert_eq!(json(&out.join("report.json"))["infinite_psnr"], true);
    let csvs = fs::read_dir(&out)
        .unwrap()
        .filter(|e| e.as_ref().unwrap().path().extension().is_some_and(|x| x == "csv"))
        .count();
    assert_eq!(csvs, 3 * 3 + 1);
    let ll = read_coeff_csv(&fs::read_to_string(out.join("level3_ll.csv")).unwrap()).unwrap();
    assert_eq!(ll.len(), 13 * 12);
}

#[test]
fn compress_reports_zero_threshold_as_infinite_psnr() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let o = run(&["compress", "--threshold", "0", "--wavelet", "haar", "--out", p(&out)]);
    assert!(o.status.success());
    let r = json(&out.join("compression.json"));
    assert_eq!(r["infinite_psnr"], true);
    assert!(r.get("psnr_db").is_none());
    assert!(out.join("compressed.pgm").exists());
}

#[test]
fn sweep_csv_has_table_shape() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    assert!(run(&["compress", "--sweep-wavelets", "db4,db6,db8,db10", "--out", p(&out)]).status.success());
    let text = fs::read_to_string(out.join("sweep.csv")).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], "Daubechies,db4,db6,db8,db10");
    assert!(lines[1].starts_with("Compression,"));
    assert_eq!(lines[1].split(',').count(), 5);
}

#[test]
fn table_rows_follow_input_order() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let o = run(&["table", "--wavelets", "sym4,haar", "--format", "csv", "--out", p(&out)]);
    assert!(o.status.success());
    let text = fs::read_to_string(out.join("table.csv")).unwrap();
    assert_eq!(String::from_utf8(o.stdout).unwrap(), text);
    let names: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(names, ["sym4", "haar"]);
}

#[test]
fn table_json_flags_lossless_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    assert!(run(&["table", "--wavelets", "db4,shannon,dct", "--format", "json", "--out", p(&out)]).status.success());
    let v = json(&out.join("table.json"));
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["infinite_snr"], true);
    assert_eq!(rows[2]["wavelet"], "dct");
}

#[test]
fn empty_or_continuous_lists_are_rejected_where_needed() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    assert_eq!(run(&["table", "--wavelets", "", "--out", p(&out)]).status.code(), Some(3));
    assert_eq!(run(&["table", "--wavelets", " , ", "--out", p(&out)]).status.code(), Some(3));
    let o = run(&["table", "--kind", "compression", "--wavelets", "db4,morlet", "--out", p(&out)]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(run(&["compress", "--sweep-wavelets", "db4,db99", "--out", p(&out)]).status.code(), Some(3));
}

#[test]
fn levels_outside_one_to_eight_are_refused() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    assert_eq!(run(&["compress", "--levels", "0", "--out", p(&out)]).status.code(), Some(2));
    assert!(run(&["stages", "--levels", "8", "--format", "csv", "--out", p(&out)]).status.success());
    let text = fs::read_to_string(out.join("stages.csv")).unwrap();
    assert_eq!(text.lines().count(), 9);
}

#[test]
fn writes_stay_inside_out() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("nested").join("out");
    let o = bin()
        .current_dir(dir.path())
        .args(["compress", "--sweep-wavelets", "haar,db2", "--out", p(&out)])
        .output()
        .unwrap();
    assert!(o.status.success());
    let top: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(top, ["nested"]);
    let mut inside: Vec<String> = fs::read_dir(&out)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    inside.sort();
    assert_eq!(
        inside,
        [
            "compressed-db2.pgm",
            "compressed-haar.pgm",
            "compression-db2.json",
            "compression-haar.json",
            "sweep.csv"
        ]
    );
}
