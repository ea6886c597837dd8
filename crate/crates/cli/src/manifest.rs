//! Experiment manifest: a TOML file naming the corpus, the pipeline
//! configuration and the experiment parameters. Relative paths are resolved
//! against the manifest's directory.
//!
//! ```toml
//! corpus_root = "corpus"
//! pipeline_config = "split.conf"
//! bpe_merges = 1000
//! seed = 42
//! output_dir = "out/split"
//!
//! [lm]
//! order = 6
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use codevocab::corpus::{DEFAULT_EXTENSIONS, DEFAULT_RATIOS};
use codevocab::ngram::{DEFAULT_CUTOFF, DEFAULT_GAMMA, DEFAULT_LAMBDA, DEFAULT_ORDER};
use codevocab::PipelineConfig;
use serde::Deserialize;

use crate::error::CliError;

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_GROWTH_POINTS: [f64; 10] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0];

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawManifest {
    corpus_root: PathBuf,
    pipeline_config: Option<PathBuf>,
    #[serde(default)]
    bpe_merges: usize,
    seed: Option<u64>,
    output_dir: Option<PathBuf>,
    extensions: Option<Vec<String>>,
    ratios: Option<[f64; 3]>,
    growth_points: Option<Vec<f64>>,
    #[serde(default)]
    lm: LmSection,
}

#[derive(Debug, Clone, Deserialize, PartialEq)]
#[serde(deny_unknown_fields, default)]
pub struct LmSection {
    pub order: usize,
    pub lambda: f64,
    pub gamma: f64,
    pub cutoff: usize,
}

impl Default for LmSection {
    fn default() -> Self {
        LmSection {
            order: DEFAULT_ORDER,
            lambda: DEFAULT_LAMBDA,
            gamma: DEFAULT_GAMMA,
            cutoff: DEFAULT_CUTOFF,
        }
    }
}

/// A manifest with every path resolved and every default filled in.
#[derive(Debug, Clone)]
pub struct Experiment {
    pub name: String,
    pub corpus_root: PathBuf,
    pub pipeline: PipelineConfig,
    pub bpe_merges: usize,
    pub seed: u64,
    pub out: PathBuf,
    pub extensions: Vec<String>,
    pub ratios: (f64, f64, f64),
    pub growth_points: Vec<f64>,
    pub lm: LmSection,
}

impl Experiment {
    pub fn load(path: &Path, seed: Option<u64>, out: Option<PathBuf>) -> Result<Self, CliError> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let raw: RawManifest = toml::from_str(&text)
            .map_err(|e| CliError::Config(format!("{}: {}", path.display(), e.message())))?;
        let base = path.parent().unwrap_or(Path::new("."));
        let resolve = |p: &Path| if p.is_absolute() { p.to_path_buf() } else { base.join(p) };

        let pipeline = match &raw.pipeline_config {
            Some(p) => {
                let p = resolve(p);
                let text = fs::read_to_string(&p).map_err(|e| CliError::io(&p, e))?;
                PipelineConfig::parse(&text)
                    .map_err(|e| CliError::Config(format!("{}: {e}", p.display())))?
            }
            None => PipelineConfig::default(),
        };
        let out = match (out, &raw.output_dir) {
            (Some(o), _) => o,
            (None, Some(o)) => resolve(o),
            (None, None) => {
                return Err(CliError::Config(
                    "key `output_dir` is missing and no --out was given".into(),
                ))
            }
        };
        let ratios = raw.ratios.map_or(DEFAULT_RATIOS, |[a, b, c]| (a, b, c));
        if raw.lm.order == 0 {
            return Err(CliError::Config("key `lm.order` must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&raw.lm.lambda) {
            return Err(CliError::Config("key `lm.lambda` must lie in [0, 1]".into()));
        }
        if !(0.0..=1.0).contains(&raw.lm.gamma) {
            return Err(CliError::Config("key `lm.gamma` must lie in [0, 1]".into()));
        }
        Ok(Experiment {
            name: path
                .file_stem()
                .map_or_else(|| "experiment".into(), |s| s.to_string_lossy().into_owned()),
            corpus_root: resolve(&raw.corpus_root),
            pipeline,
            bpe_merges: raw.bpe_merges,
            seed: seed.or(raw.seed).unwrap_or(DEFAULT_SEED),
            out,
            extensions: raw
                .extensions
                .unwrap_or_else(|| DEFAULT_EXTENSIONS.iter().map(|e| e.to_string()).collect()),
            ratios,
            growth_points: raw.growth_points.unwrap_or_else(|| DEFAULT_GROWTH_POINTS.to_vec()),
            lm: raw.lm,
        })
    }
}
