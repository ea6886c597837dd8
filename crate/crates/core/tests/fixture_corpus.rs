//! Whole-corpus checks on the bundled Java fixture.

use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::path::{Path, PathBuf};

use codevocab::corpus::{self, ProjectSet};
use codevocab::pipeline::words::{read_corpus, write_corpus};
use codevocab::pipeline::{self, SplitPolicy, TextPolicy, WhitespacePolicy};
use codevocab::stats::{self, VocabStats};
use codevocab::{lex, PipelineConfig, Processed};

fn fixture_root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/corpus")
}

fn deduped() -> ProjectSet {
    let ps = corpus::ingest(&fixture_root(), corpus::DEFAULT_EXTENSIONS).unwrap();
    corpus::dedup(&ps).0
}

fn process(ps: &ProjectSet, config: &PipelineConfig) -> Vec<(String, String)> {
    ps.projects
        .iter()
        .flat_map(|p| p.files.iter().map(move |f| (p, f)))
        .filter_map(|(p, f)| {
            let text = fs::read_to_string(ps.path_of(p, f)).unwrap();
            match pipeline::apply(&lex(&text), config) {
                Processed::Words(w) => Some((corpus::corpus_path(&p.id, f), write_corpus(&w))),
                Processed::Filtered { .. } => None,
            }
        })
        .collect()
}

fn list_java(dir: &Path, out: &mut Vec<PathBuf>) {
    for entry in fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.is_dir() {
            list_java(&path, out);
        } else if path.extension().is_some_and(|e| e == "java") {
            out.push(path);
        }
    }
}

#[test]
fn ingest_matches_directory_listing() {
    let root = fixture_root();
    let ps = corpus::ingest(&root, corpus::DEFAULT_EXTENSIONS).unwrap();
    let mut expected: Vec<String> = Vec::new();
    for entry in fs::read_dir(&root).unwrap() {
        let dir = entry.unwrap().path();
        if dir.is_dir() {
            let mut files = Vec::new();
            list_java(&dir, &mut files);
            expected.extend(
                files
                    .iter()
                    .map(|f| f.strip_prefix(&root).unwrap().to_string_lossy().replace('\\', "/")),
            );
        }
    }
    expected.sort();
    let got: Vec<String> = ps.files().map(|(name, _)| name).collect();
    assert_eq!(got, expected);
    assert_eq!(ps.projects.len(), 10);
}

#[test]
fn fixture_clones_are_removed() {
    let ps = corpus::ingest(&fixture_root(), corpus::DEFAULT_EXTENSIONS).unwrap();
    let (d, index) = corpus::dedup(&ps);
    // Helper.java in four projects (one CRLF copy) and one vendored file.
    assert_eq!(index.duplicates, 4);
    assert_eq!(d.file_count(), ps.file_count() - 4);
    assert_eq!(corpus::dedup(&d).0, d);
}

#[test]
fn default_pipeline_is_lossless_on_every_fixture_file() {
    let ps = deduped();
    let config = PipelineConfig::default();
    for p in &ps.projects {
        for f in &p.files {
            let text = fs::read_to_string(ps.path_of(p, f)).unwrap();
            let Processed::Words(words) = pipeline::apply(&lex(&text), &config) else {
                panic!("default config never filters files");
            };
            let reread = read_corpus(&write_corpus(&words), "x").unwrap();
            assert_eq!(pipeline::reconstruct(&reread).unwrap(), text, "{}/{}", p.id, f.display());
        }
    }
}

#[test]
fn stats_match_sorted_word_list() {
    let ps = deduped();
    let files = process(&ps, &PipelineConfig::default());
    let stats = stats::build_stats(files.iter().map(|(n, t)| (n.as_str(), t.as_str()))).unwrap();

    // sort | uniq -c over one word per line.
    let mut all: Vec<&str> = files
        .iter()
        .flat_map(|(_, t)| t.split(['\n', ' ']).filter(|w| !w.is_empty()))
        .collect();
    all.sort_unstable();
    let mut runs: BTreeMap<&str, u64> = BTreeMap::new();
    let mut i = 0;
    while i < all.len() {
        let j = all[i..].iter().position(|w| *w != all[i]).map_or(all.len(), |k| i + k);
        runs.insert(all[i], (j - i) as u64);
        i = j;
    }
    assert_eq!(stats.total_tokens, all.len() as u64);
    assert_eq!(stats.vocab_size, runs.len());
    for (w, c) in runs {
        assert_eq!(stats.frequency[w], c, "{w}");
    }
}

#[test]
fn splitting_shrinks_vocabulary_and_grows_tokens() {
    let ps = deduped();
    let base = PipelineConfig {
        whitespace_policy: WhitespacePolicy::Drop,
        comment_policy: TextPolicy::Placeholder,
        ..Default::default()
    };
    let split = PipelineConfig {
        split_policy: SplitPolicy::SplitCaseEncoded,
        ..base.clone()
    };
    let stats_of = |c: &PipelineConfig| -> VocabStats {
        let files = process(&ps, c);
        stats::build_stats(files.iter().map(|(n, t)| (n.as_str(), t.as_str()))).unwrap()
    };
    let (u, s) = (stats_of(&base), stats_of(&split));
    assert!(s.vocab(true) < u.vocab(true));
    assert!(s.total_tokens > u.total_tokens);
    let row = stats::compare_configs("split", &u, &s, true).unwrap();
    assert!((row.vocab_ratio - s.vocab_size as f64 / u.vocab_size as f64).abs() < 1e-12);
    assert!((row.tokens_ratio - s.total_tokens as f64 / u.total_tokens as f64).abs() < 1e-12);
}

#[test]
fn growth_matches_prefix_recount() {
    let ps = deduped();
    let files = process(&ps, &PipelineConfig::default());
    let mut per_project: BTreeMap<&str, Vec<String>> = BTreeMap::new();
    for (name, text) in &files {
        let project = name.split('/').next().unwrap();
        per_project
            .entry(project)
            .or_default()
            .extend(text.split_whitespace().map(String::from));
    }
    let lists: Vec<Vec<String>> = per_project.into_values().collect();
    let sets: Vec<HashSet<String>> = lists.iter().map(|l| l.iter().cloned().collect()).collect();
    let points = [0.25, 0.5, 0.75, 1.0];
    let curve = stats::growth_curve(&sets, &points, 7).unwrap();
    let order = stats::shuffled_order(lists.len(), 7);
    for &(n, vocab) in &curve.samples {
        let mut words: Vec<&String> = order[..n].iter().flat_map(|&p| &lists[p]).collect();
        words.sort();
        words.dedup();
        assert_eq!(vocab, words.len());
    }
    assert!(curve.samples.windows(2).all(|w| w[0].1 <= w[1].1));
}
