//! The experiment stages. Each stage reads the artifacts of the previous one
//! from the output directory and overwrites its own outputs.
//!
//! ```text
//! out/
//!   splits.tsv            <split>\t<project-id>
//!   ingest.json
//!   config.echo           effective pipeline configuration
//!   preprocess.json
//!   corpus/index.tsv      <split>\t<project-id>\t<file>
//!   corpus/<split>/<project>/<path>.tok
//!   bpe/merges.txt
//!   bpe/vocab.tsv
//!   bpe/corpus/...        same layout as corpus/
//!   reports/stats[-bpe].{csv,json}, frequencies[-bpe].tsv
//!   reports/growth.csv, compare.{csv,json}
//!   lm/model[-bpe].txt, lm/eval-<level>-<scenario>[-cache].json
//! ```

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use codevocab::bpe::{self, BpeModel};
use codevocab::corpus::{self, Split};
use codevocab::ngram::{self, EvalOptions, NgramConfig, NgramModel, Scenario, Unit};
use codevocab::pipeline::words::{read_corpus, write_corpus};
use codevocab::pipeline::{self, Processed};
use codevocab::stats::{self, ReportRow, VocabStats};
use codevocab::{lex, CorpusWord};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::CliError;
use crate::manifest::Experiment;

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Level {
    Word,
    Bpe,
}

impl Level {
    fn suffix(self) -> &'static str {
        match self {
            Level::Word => "",
            Level::Bpe => "-bpe",
        }
    }

    fn name(self) -> &'static str {
        match self {
            Level::Word => "word",
            Level::Bpe => "bpe",
        }
    }
}

fn corpus_dir(out: &Path, level: Level) -> PathBuf {
    match level {
        Level::Word => out.join("corpus"),
        Level::Bpe => out.join("bpe").join("corpus"),
    }
}

fn write_file(path: &Path, contents: impl AsRef<[u8]>) -> Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent).map_err(|e| CliError::io(parent, e))?;
    }
    fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

fn read_artifact(path: &Path) -> Result<String> {
    match fs::read_to_string(path) {
        Ok(text) => Ok(text),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            Err(CliError::MissingArtifact(path.to_path_buf()))
        }
        Err(e) => Err(CliError::io(path, e)),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn log_throughput(stage: &str, files: usize, started: Instant) {
    let secs = started.elapsed().as_secs_f64();
    let rate = if secs > 0.0 { files as f64 / secs } else { f64::INFINITY };
    log::info!("{stage}: {files} files in {secs:.2}s ({rate:.0} files/s)");
}

#[derive(Debug, Clone)]
struct CorpusFile {
    split: Split,
    project: String,
    /// Path below the corpus directory.
    path: String,
}

fn write_corpus_dir(dir: &Path, files: &[(CorpusFile, String)]) -> Result<()> {
    if dir.exists() {
        fs::remove_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    let mut index = String::new();
    for (f, text) in files {
        write_file(&dir.join(&f.path), text)?;
        let _ = writeln!(index, "{}\t{}\t{}", f.split, f.project, f.path);
    }
    write_file(&dir.join("index.tsv"), index)
}

fn load_index(dir: &Path) -> Result<Vec<CorpusFile>> {
    let path = dir.join("index.tsv");
    let text = read_artifact(&path)?;
    text.lines()
        .enumerate()
        .map(|(i, line)| {
            let bad = || {
                CliError::Core(codevocab::Error::Parse {
                    path: path.display().to_string(),
                    line: i + 1,
                    reason: "expected `<split>\\t<project>\\t<file>`".into(),
                })
            };
            let mut parts = line.split('\t');
            match (parts.next(), parts.next(), parts.next(), parts.next()) {
                (Some(split), Some(project), Some(file), None) => Ok(CorpusFile {
                    split: split.parse().map_err(|_| bad())?,
                    project: project.to_string(),
                    path: file.to_string(),
                }),
                _ => Err(bad()),
            }
        })
        .collect()
}

/// Reads and parses every corpus file, keeping index order.
fn load_corpus(dir: &Path, only: Option<Split>) -> Result<Vec<(CorpusFile, Vec<CorpusWord>)>> {
    let index: Vec<CorpusFile> = load_index(dir)?
        .into_iter()
        .filter(|f| only.map_or(true, |s| f.split == s))
        .collect();
    index
        .into_par_iter()
        .map(|f| {
            let path = dir.join(&f.path);
            let text = read_artifact(&path)?;
            let words = read_corpus(&text, &path.display().to_string())?;
            Ok((f, words))
        })
        .collect()
}

fn load_corpus_text(dir: &Path) -> Result<Vec<(CorpusFile, String)>> {
    load_index(dir)?
        .into_par_iter()
        .map(|f| {
            let text = read_artifact(&dir.join(&f.path))?;
            Ok((f, text))
        })
        .collect()
}

#[derive(Serialize)]
struct IngestSummary {
    projects: usize,
    files_found: usize,
    files_retained: usize,
    duplicates: usize,
    splits: BTreeMap<String, usize>,
    warnings: Vec<String>,
}

/// Lists, deduplicates and splits the corpus; writes `splits.tsv`.
pub fn ingest(exp: &Experiment) -> Result<corpus::ProjectSet> {
    let started = Instant::now();
    let found = corpus::ingest(&exp.corpus_root, &exp.extensions)?;
    let (deduped, index) = corpus::dedup(&found);
    let split = corpus::split(&deduped, exp.ratios, exp.seed)?;
    let summary = IngestSummary {
        projects: split.projects.len(),
        files_found: found.file_count(),
        files_retained: split.file_count(),
        duplicates: index.duplicates,
        splits: Split::ALL
            .iter()
            .map(|&s| (s.to_string(), split.in_split(s).count()))
            .collect(),
        warnings: split.warnings.clone(),
    };
    write_file(&exp.out.join("splits.tsv"), split.manifest())?;
    write_file(&exp.out.join("ingest.json"), to_json(&summary))?;
    log_throughput("ingest", summary.files_found, started);
    log::info!(
        "ingest: {} projects, {} files kept, {} duplicates dropped",
        summary.projects,
        summary.files_retained,
        summary.duplicates
    );
    Ok(split)
}

#[derive(Serialize)]
struct PreprocessSummary {
    files: usize,
    files_written: usize,
    files_filtered: usize,
    files_skipped: Vec<String>,
    words: usize,
}

enum FileOutcome {
    Words(Vec<CorpusWord>),
    Filtered,
    Skipped(String),
}

/// Runs the pipeline over every retained file and writes the word corpus.
pub fn preprocess(exp: &Experiment) -> Result<()> {
    let ps = ingest(exp)?;
    let started = Instant::now();
    let config = &exp.pipeline;
    let ps = &ps;
    let jobs: Vec<(Split, String, PathBuf, PathBuf)> = ps
        .projects
        .iter()
        .flat_map(|p| {
            let split = p.split.expect("split assigned");
            p.files
                .iter()
                .map(move |f| (split, p.id.clone(), f.clone(), ps.path_of(p, f)))
        })
        .collect();
    let outcomes: Vec<FileOutcome> = jobs
        .par_iter()
        .map(|(_, _, _, path)| match fs::read(path) {
            Err(e) => FileOutcome::Skipped(format!("{}: {e}", path.display())),
            Ok(bytes) => match String::from_utf8(bytes) {
                Err(_) => FileOutcome::Skipped(format!("{}: not valid UTF-8", path.display())),
                Ok(text) => match pipeline::apply(&lex(&text), config) {
                    Processed::Words(w) => FileOutcome::Words(w),
                    Processed::Filtered { .. } => FileOutcome::Filtered,
                },
            },
        })
        .collect();

    let mut files_filtered = 0;
    let mut files_skipped = Vec::new();
    let mut kept: Vec<(CorpusFile, Vec<CorpusWord>)> = Vec::new();
    for ((split, project, file, _), outcome) in jobs.into_iter().zip(outcomes) {
        match outcome {
            FileOutcome::Words(words) => {
                let mut path = format!("{split}/{}", corpus::corpus_path(&project, &file));
                path.push_str(".tok");
                kept.push((CorpusFile { split, project, path }, words));
            }
            FileOutcome::Filtered => files_filtered += 1,
            FileOutcome::Skipped(w) => {
                log::warn!("skipped {w}");
                files_skipped.push(w);
            }
        }
    }

    if config.needs_frequency_filter() {
        let freq = pipeline::word_frequencies(
            kept.iter()
                .filter(|(f, _)| f.split == Split::Train)
                .map(|(_, w)| w.as_slice()),
        );
        kept.par_iter_mut().for_each(|(_, words)| {
            *words = pipeline::filter_infrequent(words, &freq, 1, &config.min_frequency);
        });
    }

    let words: usize = kept.iter().map(|(_, w)| w.len()).sum();
    let rendered: Vec<(CorpusFile, String)> = kept
        .into_par_iter()
        .map(|(f, w)| (f, write_corpus(&w)))
        .collect();
    write_corpus_dir(&corpus_dir(&exp.out, Level::Word), &rendered)?;
    write_file(&exp.out.join("config.echo"), config.to_text())?;
    let summary = PreprocessSummary {
        files: rendered.len() + files_filtered + files_skipped.len(),
        files_written: rendered.len(),
        files_filtered,
        files_skipped,
        words,
    };
    write_file(&exp.out.join("preprocess.json"), to_json(&summary))?;
    log_throughput("preprocess", summary.files, started);
    Ok(())
}

/// Source-word frequencies of the training split, in decoded form.
fn training_words(exp: &Experiment) -> Result<HashMap<String, u64>> {
    let train = load_corpus(&corpus_dir(&exp.out, Level::Word), Some(Split::Train))?;
    Ok(pipeline::word_frequencies(train.iter().map(|(_, w)| w.as_slice())))
}

pub fn bpe_train(exp: &Experiment, merges: Option<usize>) -> Result<BpeModel> {
    let started = Instant::now();
    let n = merges.unwrap_or(exp.bpe_merges);
    let freq = training_words(exp)?;
    let model = bpe::train(&freq, n);
    if model.merges.len() < n {
        log::info!("bpe-train: stopped after {} of {n} merges (no pair occurs twice)", model.merges.len());
    }
    let mut entries: Vec<(&str, u64)> = freq.iter().map(|(w, &c)| (w.as_str(), c)).collect();
    entries.sort_unstable();
    let vocab = bpe::vocab_of(&model, entries);
    write_file(&exp.out.join("bpe").join("merges.txt"), model.save_merges())?;
    write_file(&exp.out.join("bpe").join("vocab.tsv"), bpe::write_vocab(&vocab))?;
    log::info!(
        "bpe-train: {} merges, alphabet {}, subword vocabulary {}",
        model.merges.len(),
        model.alphabet.len(),
        vocab.len()
    );
    log_throughput("bpe-train", freq.len(), started);
    Ok(model)
}

fn load_bpe(exp: &Experiment) -> Result<BpeModel> {
    let path = exp.out.join("bpe").join("merges.txt");
    let text = read_artifact(&path)?;
    Ok(BpeModel::load_merges(&text, &path.display().to_string())?)
}

pub fn bpe_apply(exp: &Experiment) -> Result<()> {
    let started = Instant::now();
    let model = load_bpe(exp)?;
    let files = load_corpus(&corpus_dir(&exp.out, Level::Word), None)?;
    let encoded: Vec<(CorpusFile, String)> = files
        .into_par_iter()
        .map_init(HashMap::new, |cache, (f, words)| {
            let pieces = bpe::encode_corpus(&model, &words, cache);
            (f, write_corpus(&pieces))
        })
        .collect();
    write_corpus_dir(&corpus_dir(&exp.out, Level::Bpe), &encoded)?;
    log_throughput("bpe-apply", encoded.len(), started);
    Ok(())
}

#[derive(Serialize)]
struct StatsReport {
    row: ReportRow,
    files: usize,
    marker_types: usize,
    marker_tokens: u64,
    include_markers: bool,
}

fn frequency_table(stats: &VocabStats) -> String {
    let mut rows: Vec<(&String, &u64)> = stats.frequency.iter().collect();
    rows.sort_unstable_by(|a, b| b.1.cmp(a.1).then_with(|| a.0.cmp(b.0)));
    let mut out = String::new();
    for (w, c) in rows {
        let _ = writeln!(out, "{w}\t{c}");
    }
    out
}

fn parse_frequency_table(text: &str, path: &Path) -> Result<VocabStats> {
    let mut stats = VocabStats::new();
    for (i, line) in text.lines().enumerate() {
        let parsed = line
            .split_once('\t')
            .and_then(|(w, c)| Some((w, c.parse::<u64>().ok()?)));
        let Some((word, count)) = parsed else {
            return Err(CliError::Core(codevocab::Error::Parse {
                path: path.display().to_string(),
                line: i + 1,
                reason: "expected `word<TAB>count`".into(),
            }));
        };
        stats.add_count(word, count);
    }
    Ok(stats)
}

/// Vocabulary and token counts over every split.
pub fn stats(exp: &Experiment, level: Level, include_markers: bool) -> Result<VocabStats> {
    let started = Instant::now();
    let dir = corpus_dir(&exp.out, level);
    let files = load_corpus_text(&dir)?;
    let merged = files
        .par_iter()
        .map(|(f, text)| {
            let mut s = VocabStats::new();
            s.add_corpus_text(text, &dir.join(&f.path).display().to_string())?;
            Ok(s)
        })
        .try_reduce(VocabStats::new, |a, b| Ok(a.merge(b)))
        .map_err(|e: codevocab::Error| CliError::Core(e))?;
    let name = format!("{}{}", exp.name, level.suffix());
    let report = StatsReport {
        row: ReportRow::for_stats(&name, &merged, include_markers)?,
        files: files.len(),
        marker_types: merged.marker_types(),
        marker_tokens: merged.marker_tokens(),
        include_markers,
    };
    let reports = exp.out.join("reports");
    let suffix = level.suffix();
    write_file(
        &reports.join(format!("stats{suffix}.csv")),
        stats::report_csv(std::slice::from_ref(&report.row)),
    )?;
    write_file(&reports.join(format!("stats{suffix}.json")), to_json(&report))?;
    write_file(&reports.join(format!("frequencies{suffix}.tsv")), frequency_table(&merged))?;
    log_throughput("stats", files.len(), started);
    Ok(merged)
}

/// Compares this experiment's word-level statistics with other experiments'.
pub fn compare(baseline: &Experiment, variants: &[Experiment], include_markers: bool) -> Result<Vec<ReportRow>> {
    let load = |exp: &Experiment| -> Result<VocabStats> {
        let path = exp.out.join("reports").join("frequencies.tsv");
        parse_frequency_table(&read_artifact(&path)?, &path)
    };
    let base = load(baseline)?;
    let mut rows = vec![stats::compare_configs(&baseline.name, &base, &base, include_markers)?];
    for v in variants {
        rows.push(stats::compare_configs(&v.name, &base, &load(v)?, include_markers)?);
    }
    let reports = baseline.out.join("reports");
    write_file(&reports.join("compare.csv"), stats::report_csv(&rows))?;
    write_file(&reports.join("compare.json"), to_json(&rows))?;
    Ok(rows)
}

/// Vocabulary growth as projects are added in seeded random order.
pub fn growth(exp: &Experiment) -> Result<stats::GrowthCurve> {
    let files = load_corpus_text(&corpus_dir(&exp.out, Level::Word))?;
    let mut projects: BTreeMap<&str, HashSet<String>> = BTreeMap::new();
    for (f, text) in &files {
        let set = projects.entry(f.project.as_str()).or_default();
        codevocab::pipeline::words::for_each_encoded_word(text, &f.path, |w| {
            if !VocabStats::is_marker(w) {
                set.insert(w.to_string());
            }
        })?;
    }
    let sets: Vec<HashSet<String>> = projects.into_values().collect();
    let curve = stats::growth_curve(&sets, &exp.growth_points, exp.seed)?;
    write_file(&exp.out.join("reports").join("growth.csv"), curve.to_csv())?;
    Ok(curve)
}

fn encoded_split(exp: &Experiment, level: Level, split: Split) -> Result<Vec<Vec<String>>> {
    let files = load_corpus(&corpus_dir(&exp.out, level), Some(split))?;
    Ok(files
        .into_iter()
        .map(|(_, words)| words.iter().map(CorpusWord::encoded).collect())
        .collect())
}

fn model_path(exp: &Experiment, level: Level) -> PathBuf {
    exp.out.join("lm").join(format!("model{}.txt", level.suffix()))
}

pub fn lm_train(exp: &Experiment, level: Level) -> Result<NgramModel> {
    let started = Instant::now();
    let train = encoded_split(exp, level, Split::Train)?;
    let config = NgramConfig {
        order: exp.lm.order,
        lambdas: vec![exp.lm.lambda],
    };
    let model = ngram::fit(&train, &config)?;
    write_file(&model_path(exp, level), model.save())?;
    log::info!("lm-train: order {}, vocabulary {}", model.order(), model.vocab_size());
    log_throughput("lm-train", train.len(), started);
    Ok(model)
}

pub fn lm_eval(exp: &Experiment, level: Level, scenario: Scenario, cache: bool) -> Result<ngram::EvalResult> {
    let started = Instant::now();
    let path = model_path(exp, level);
    let model = NgramModel::load(&read_artifact(&path)?, &path.display().to_string())?;
    let test = encoded_split(exp, level, Split::Test)?;
    let options = EvalOptions {
        scenario,
        cache_gamma: cache.then_some(exp.lm.gamma),
        cutoff: exp.lm.cutoff,
        unit: match level {
            Level::Word => Unit::Token,
            Level::Bpe => Unit::Subtoken,
        },
    };
    let result = ngram::entropy(&model, &test, &options);
    let scenario_name = match scenario {
        Scenario::Static => "static",
        Scenario::Dynamic => "dynamic",
    };
    let name = format!(
        "eval-{}-{scenario_name}{}.json",
        level.name(),
        if cache { "-cache" } else { "" }
    );
    write_file(&exp.out.join("lm").join(name), to_json(&result))?;
    log::info!(
        "lm-eval: {scenario_name}{} {:.3} bits/{:?}, MRR {:.3} over {} units",
        if cache { "+cache" } else { "" },
        result.entropy_bits,
        result.unit,
        result.mrr,
        result.n_units
    );
    if level == Level::Bpe {
        if let Ok(words) = encoded_split(exp, Level::Word, Split::Test) {
            let n_words = words.iter().map(Vec::len).sum::<usize>() as u64;
            if let Ok(h) = ngram::word_entropy(result.entropy_bits, result.n_units as u64, n_words) {
                log::info!("lm-eval: {h:.3} bits per word-level unit");
            }
        }
    }
    log_throughput("lm-eval", test.len(), started);
    Ok(result)
}

/// Every stage in order, with all four evaluation scenarios.
pub fn run_all(exp: &Experiment) -> Result<()> {
    let started = Instant::now();
    preprocess(exp)?;
    stats(exp, Level::Word, true)?;
    growth(exp)?;
    let mut levels = vec![Level::Word];
    if exp.bpe_merges > 0 {
        bpe_train(exp, None)?;
        bpe_apply(exp)?;
        stats(exp, Level::Bpe, true)?;
        levels.push(Level::Bpe);
    }
    for level in levels {
        lm_train(exp, level)?;
        for scenario in [Scenario::Static, Scenario::Dynamic] {
            for cache in [false, true] {
                lm_eval(exp, level, scenario, cache)?;
            }
        }
    }
    log::info!("run: finished in {:.2}s", started.elapsed().as_secs_f64());
    Ok(())
}

