//! Shared inputs for the benchmarks: the bundled Java fixture, loaded once.

use std::fs;
use std::path::PathBuf;

use codevocab::corpus;
use codevocab::pipeline::CorpusWord;
use codevocab::{lex, PipelineConfig, Processed};

pub fn fixture_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/corpus")
}

/// Source text of every deduplicated fixture file.
pub fn fixture_sources() -> Vec<String> {
    let ps = corpus::ingest(&fixture_root(), corpus::DEFAULT_EXTENSIONS).expect("fixture exists");
    let (ps, _) = corpus::dedup(&ps);
    ps.files()
        .map(|(_, path)| fs::read_to_string(path).expect("fixture is readable"))
        .collect()
}

pub fn process_all(sources: &[String], config: &PipelineConfig) -> Vec<Vec<CorpusWord>> {
    sources
        .iter()
        .filter_map(|s| match codevocab::apply(&lex(s), config) {
            Processed::Words(w) => Some(w),
            Processed::Filtered { .. } => None,
        })
        .collect()
}

pub fn split_config() -> PipelineConfig {
    let text = fs::read_to_string(fixture_root().join("../experiments/split.conf")).expect("split.conf");
    PipelineConfig::parse(&text).expect("valid config")
}
