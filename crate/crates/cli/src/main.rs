//! `multiscale`: file-in, file-out front end for the wavelet toolkit.

mod method;
mod tables;

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use multiscale::compress::{compress2d_with, CompressConfig, ThresholdPolicy};
use multiscale::continuous::dyadic_cwt_analyze;
use multiscale::io::{
    coeff_csv, read_pgm, read_wav, write_pgm, write_report, write_wav, AudioBuffer, CoeffRow,
    CoeffTable,
};
use multiscale::metrics::{quality_report, QualityConfig, QualityRecord};
use multiscale::synth::{bundled_fingerprint, fingerprint, FINGERPRINT_SEED};
use multiscale::transform2d::{render_mosaic, Normalization};
use multiscale::{decompose, decompose2d, ExtensionMode, GrayImage, WaveletId};
use rayon::prelude::*;

use method::{parse_list, process_image, process_signal, Method, Settings};
use tables::Format;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] multiscale::Error),
    #[error("{path}: {source}")]
    File {
        path: PathBuf,
        source: multiscale::Error,
    },
    #[error("{0}")]
    Unsupported(String),
    #[error("input is neither a RIFF/WAVE file nor a binary PGM")]
    UnknownInput,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(multiscale::Error::UnsupportedWavelet(_)) | CliError::Unsupported(_) => 3,
            _ => 2,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "multiscale", version, about = "Wavelet analysis, synthesis and compression of WAV and PGM files")]
struct Cli {
    /// Worker threads; outputs do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=8), default_value_t = 4)]
    levels: u8,
    #[arg(long, default_value = "periodic")]
    extension: ExtensionMode,
    #[arg(long, default_value = "details")]
    policy: ThresholdPolicy,
    /// Output directory; created if missing. Nothing is written elsewhere.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Quality,
    Compression,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose a WAV file, dump coefficients, reconstruct and report.
    Analyze1d {
        input: PathBuf,
        #[arg(long, default_value = "haar")]
        wavelet: String,
        /// Zero detail coefficients at or below this magnitude first.
        #[arg(long)]
        threshold: Option<f64>,
        #[arg(long, default_value_t = 256)]
        bins: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Decompose a PGM image into a mosaic and per-band CSVs, reconstruct and report.
    Analyze2d {
        input: PathBuf,
        #[arg(long, default_value = "haar")]
        wavelet: String,
        #[arg(long)]
        threshold: Option<f64>,
        #[arg(long, default_value_t = 256)]
        bins: usize,
        /// Stretch each band separately (per-band) or all with one map.
        #[arg(long, default_value = "per-band")]
        normalization: MosaicScale,
        #[command(flatten)]
        common: Common,
    },
    /// Hard-threshold compression of a PGM image (the bundled fingerprint by default).
    Compress {
        input: Option<PathBuf>,
        #[arg(long, default_value = "db4")]
        wavelet: String,
        #[arg(long, default_value_t = 30.0)]
        threshold: f64,
        /// Comma-separated wavelets; writes sweep.csv with one column each.
        #[arg(long)]
        sweep_wavelets: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// One row per wavelet comparing quality or compression.
    Table {
        /// WAV or PGM; the bundled fingerprint when omitted.
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "quality")]
        kind: TableKind,
        #[arg(long, default_value = "haar,db4,sym8,coif2,bior4.4")]
        wavelets: String,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
        /// Defaults to none for quality and 30 for compression.
        #[arg(long)]
        threshold: Option<f64>,
        #[arg(long, default_value_t = 256)]
        bins: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Quality after thresholding at every stage count from 1 up to --levels.
    Stages {
        input: Option<PathBuf>,
        #[arg(long, default_value = "db4")]
        wavelet: String,
        #[arg(long, default_value_t = 30.0)]
        threshold: f64,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
        #[arg(long, default_value_t = 256)]
        bins: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Write the synthetic fingerprint test image.
    Fingerprint {
        #[arg(long, default_value_t = 256)]
        rows: usize,
        #[arg(long, default_value_t = 256)]
        cols: usize,
        #[arg(long, default_value_t = FINGERPRINT_SEED)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MosaicScale {
    PerBand,
    Global,
}

enum Input {
    Signal(AudioBuffer),
    Image(GrayImage),
}

fn read_bytes(path: &Path) -> CliResult<Vec<u8>> {
    fs::read(path).map_err(|e| CliError::File {
        path: path.into(),
        source: e.into(),
    })
}

fn load_wav(path: &Path) -> CliResult<AudioBuffer> {
    read_wav(&read_bytes(path)?).map_err(|source| CliError::File { path: path.into(), source })
}

fn load_pgm(path: &Path) -> CliResult<GrayImage> {
    read_pgm(&read_bytes(path)?).map_err(|source| CliError::File { path: path.into(), source })
}

fn load_any(path: Option<&Path>) -> CliResult<Input> {
    let Some(path) = path else {
        return Ok(Input::Image(bundled_fingerprint()));
    };
    let bytes = read_bytes(path)?;
    let wrap = |source| CliError::File { path: path.into(), source };
    if bytes.starts_with(b"RIFF") {
        Ok(Input::Signal(read_wav(&bytes).map_err(wrap)?))
    } else if bytes.starts_with(b"P5") {
        Ok(Input::Image(read_pgm(&bytes).map_err(wrap)?))
    } else {
        Err(CliError::UnknownInput)
    }
}

fn load_image(path: Option<&Path>) -> CliResult<GrayImage> {
    match path {
        Some(p) => load_pgm(p),
        None => Ok(bundled_fingerprint()),
    }
}

struct Out(PathBuf);

impl Out {
    fn new(dir: &Path) -> CliResult<Self> {
        fs::create_dir_all(dir).map_err(|e| CliError::File {
            path: dir.into(),
            source: e.into(),
        })?;
        Ok(Out(dir.into()))
    }

    fn write(&self, name: &str, bytes: impl AsRef<[u8]>) -> CliResult<()> {
        let path = self.0.join(name);
        fs::write(&path, bytes).map_err(|e| CliError::File {
            path,
            source: e.into(),
        })
    }
}

fn parse_method(name: &str) -> CliResult<Method> {
    Ok(name.parse()?)
}

fn parse_methods(list: &str) -> CliResult<Vec<Method>> {
    let methods = parse_list(list)?;
    if methods.is_empty() {
        return Err(CliError::Unsupported("the wavelet list is empty".into()));
    }
    Ok(methods)
}

fn discrete(m: Method, what: &str) -> CliResult<WaveletId> {
    match m {
        Method::Discrete(w) => Ok(w),
        other => Err(CliError::Unsupported(format!("{what} needs a discrete wavelet, got `{other}`"))),
    }
}

fn settings(common: &Common, threshold: Option<f64>) -> Settings {
    Settings {
        levels: common.levels as usize,
        threshold,
        policy: common.policy,
        extension: common.extension,
    }
}

fn quantize_audio(samples: Vec<f64>, like: &AudioBuffer) -> CliResult<AudioBuffer> {
    let buf = AudioBuffer {
        samples,
        sample_rate: like.sample_rate,
        source_bit_depth: 16,
    };
    Ok(read_wav(&write_wav(&buf))?)
}

fn signal_quality(input: &AudioBuffer, processed: &AudioBuffer, bins: usize) -> CliResult<multiscale::metrics::QualityReport> {
    let config = QualityConfig {
        bins,
        ..QualityConfig::default()
    };
    Ok(quality_report(&input.samples, &processed.samples, &config)?)
}

fn image_quality(input: &GrayImage, processed: &GrayImage, bins: usize) -> CliResult<multiscale::metrics::QualityReport> {
    let config = QualityConfig {
        bins,
        ..QualityConfig::eight_bit()
    };
    Ok(quality_report(input, processed, &config)?)
}

fn analyze1d(input: &Path, wavelet: &str, threshold: Option<f64>, bins: usize, common: &Common) -> CliResult<()> {
    let method = parse_method(wavelet)?;
    let s = settings(common, threshold);
    let audio = load_wav(input)?;
    let rows = match method {
        Method::Discrete(w) => decompose(&audio.samples, w, s.levels, s.extension)?.coeff_rows(),
        Method::Continuous(w) => dyadic_cwt_analyze(&audio.samples, w, s.levels)?.coeff_rows(),
        Method::Spectral(_) => {
            return Err(CliError::Unsupported(format!(
                "analyze1d needs a wavelet, got `{method}`; spectral baselines are available in `table`"
            )))
        }
    };
    let out = Out::new(&common.out)?;
    let restored = quantize_audio(process_signal(method, &audio.samples, &s)?, &audio)?;
    let record = QualityRecord {
        wavelet: method.to_string(),
        levels: s.levels,
        report: signal_quality(&audio, &restored, bins)?,
    };
    out.write("coefficients.csv", coeff_csv(&rows))?;
    out.write("reconstruction.wav", write_wav(&restored))?;
    write_report(&record, out.0.join("report.json"))?;
    Ok(())
}

fn analyze2d(
    input: &Path,
    wavelet: &str,
    threshold: Option<f64>,
    bins: usize,
    scale: MosaicScale,
    common: &Common,
) -> CliResult<()> {
    let method = parse_method(wavelet)?;
    let w = discrete(method, "analyze2d")?;
    let s = settings(common, threshold);
    let image = load_pgm(input)?;
    let matrix = image.to_matrix();
    let d = decompose2d(&matrix, w, s.levels, s.extension)?;
    let out = Out::new(&common.out)?;
    let normalization = match scale {
        MosaicScale::PerBand => Normalization::PerBand,
        MosaicScale::Global => Normalization::Global,
    };
    out.write("mosaic.pgm", write_pgm(&render_mosaic(&d, normalization)))?;

    let mut bands: BTreeMap<(usize, String), Vec<CoeffRow>> = BTreeMap::new();
    for row in d.coeff_rows() {
        bands.entry((row.level, row.band.clone())).or_default().push(row);
    }
    for ((level, band), rows) in &bands {
        out.write(&format!("level{level}_{band}.csv"), coeff_csv(rows))?;
    }

    let restored = GrayImage::from_matrix(&process_image(method, &matrix, &s)?)?;
    let record = QualityRecord {
        wavelet: method.to_string(),
        levels: s.levels,
        report: image_quality(&image, &restored, bins)?,
    };
    out.write("reconstruction.pgm", write_pgm(&restored))?;
    write_report(&record, out.0.join("report.json"))?;
    Ok(())
}

fn compress(input: Option<&Path>, wavelet: &str, threshold: f64, sweep: Option<&str>, common: &Common) -> CliResult<()> {
    let image = load_image(input)?;
    let config = |w| CompressConfig {
        wavelet: w,
        levels: common.levels as usize,
        threshold,
        policy: common.policy,
        extension: common.extension,
    };
    let Some(list) = sweep else {
        let w = discrete(parse_method(wavelet)?, "compress")?;
        let report = compress2d_with(&image, &config(w))?;
        let out = Out::new(&common.out)?;
        out.write("compressed.pgm", write_pgm(&report.output))?;
        write_report(&report, out.0.join("compression.json"))?;
        return Ok(());
    };
    let wavelets = parse_methods(list)?
        .into_iter()
        .map(|m| discrete(m, "compress"))
        .collect::<CliResult<Vec<_>>>()?;
    let reports = wavelets
        .par_iter()
        .map(|&w| compress2d_with(&image, &config(w)))
        .collect::<Result<Vec<_>, _>>()?;
    let out = Out::new(&common.out)?;
    for r in &reports {
        out.write(&format!("compressed-{}.pgm", r.wavelet), write_pgm(&r.output))?;
        write_report(r, out.0.join(format!("compression-{}.json", r.wavelet)))?;
    }
    out.write("sweep.csv", tables::sweep_csv(&reports))?;
    Ok(())
}

fn quality_rows(input: &Input, methods: &[(Method, Settings)], bins: usize) -> CliResult<Vec<QualityRecord>> {
    methods
        .par_iter()
        .map(|(m, s)| {
            let report = match input {
                Input::Signal(a) => {
                    let y = quantize_audio(process_signal(*m, &a.samples, s)?, a)?;
                    signal_quality(a, &y, bins)?
                }
                Input::Image(img) => {
                    let y = GrayImage::from_matrix(&process_image(*m, &img.to_matrix(), s)?)?;
                    image_quality(img, &y, bins)?
                }
            };
            Ok(QualityRecord {
                wavelet: m.to_string(),
                levels: s.levels,
                report,
            })
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn table(
    input: Option<&Path>,
    kind: TableKind,
    wavelets: &str,
    format: Format,
    threshold: Option<f64>,
    bins: usize,
    common: &Common,
) -> CliResult<()> {
    let methods = parse_methods(wavelets)?;
    let text = match kind {
        TableKind::Quality => {
            let input = load_any(input)?;
            let s = settings(common, threshold);
            let jobs: Vec<_> = methods.into_iter().map(|m| (m, s)).collect();
            tables::quality_table(&quality_rows(&input, &jobs, bins)?, format)
        }
        TableKind::Compression => {
            let wavelets = methods
                .into_iter()
                .map(|m| discrete(m, "a compression table"))
                .collect::<CliResult<Vec<_>>>()?;
            let image = load_image(input)?;
            let reports = wavelets
                .par_iter()
                .map(|&w| {
                    compress2d_with(
                        &image,
                        &CompressConfig {
                            wavelet: w,
                            levels: common.levels as usize,
                            threshold: threshold.unwrap_or(30.0),
                            policy: common.policy,
                            extension: common.extension,
                        },
                    )
                })
                .collect::<Result<Vec<_>, _>>()?;
            tables::compression_table(&reports, format)
        }
    };
    let out = Out::new(&common.out)?;
    out.write(&format!("table.{}", format.extension()), &text)?;
    print!("{text}");
    Ok(())
}

fn stages(input: Option<&Path>, wavelet: &str, threshold: f64, format: Format, bins: usize, common: &Common) -> CliResult<()> {
    let method = parse_method(wavelet)?;
    let input = load_any(input)?;
    let jobs: Vec<_> = (1..=common.levels as usize)
        .map(|levels| {
            (
                method,
                Settings {
                    levels,
                    ..settings(common, Some(threshold))
                },
            )
        })
        .collect();
    let text = tables::quality_table(&quality_rows(&input, &jobs, bins)?, format);
    let out = Out::new(&common.out)?;
    out.write(&format!("stages.{}", format.extension()), &text)?;
    print!("{text}");
    Ok(())
}

fn write_fingerprint(rows: usize, cols: usize, seed: u64, dir: &Path) -> CliResult<()> {
    let image = if (rows, cols, seed) == (256, 256, FINGERPRINT_SEED) {
        bundled_fingerprint()
    } else {
        if rows == 0 || cols == 0 {
            return Err(multiscale::Error::InvalidParameter("image dimensions must be positive".into()).into());
        }
        fingerprint(rows, cols, seed)
    };
    Out::new(dir)?.write("fingerprint.pgm", write_pgm(&image))
}

fn run(cli: Cli) -> CliResult<()> {
    match &cli.command {
        Command::Analyze1d { input, wavelet, threshold, bins, common } => {
            analyze1d(input, wavelet, *threshold, *bins, common)
        }
        Command::Analyze2d { input, wavelet, threshold, bins, normalization, common } => {
            analyze2d(input, wavelet, *threshold, *bins, *normalization, common)
        }
        Command::Compress { input, wavelet, threshold, sweep_wavelets, common } => {
            compress(input.as_deref(), wavelet, *threshold, sweep_wavelets.as_deref(), common)
        }
        Command::Table { input, kind, wavelets, format, threshold, bins, common } => {
            table(input.as_deref(), *kind, wavelets, *format, *threshold, *bins, common)
        }
        Command::Stages { input, wavelet, threshold, format, bins, common } => {
            stages(input.as_deref(), wavelet, *threshold, *format, *bins, common)
        }
        Command::Fingerprint { rows, cols, seed, out } => write_fingerprint(*rows, *cols, *seed, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("multiscale: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("multiscale: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
