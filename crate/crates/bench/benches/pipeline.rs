use std::hint::black_box;

use codevocab::ngram::{self, EvalOptions, NgramConfig, Scenario};
use codevocab::pipeline::{self, words::write_corpus};
use codevocab::{bpe, lex, PipelineConfig};
use codevocab_bench::{fixture_sources, process_all, split_config};
use criterion::{criterion_group, criterion_main, Criterion, Throughput};

fn lexing(c: &mut Criterion) {
    let sources = fixture_sources();
    let bytes: usize = sources.iter().map(String::len).sum();
    let mut g = c.benchmark_group("lexer");
    g.throughput(Throughput::Bytes(bytes as u64));
    g.bench_function("lex fixture", |b| {
        b.iter(|| sources.iter().map(|s| lex(black_box(s)).len()).sum::<usize>())
    });
    g.finish();
}

fn preprocessing(c: &mut Criterion) {
    let sources = fixture_sources();
    let mut g = c.benchmark_group("pipeline");
    g.throughput(Throughput::Elements(sources.len() as u64));
    for (name, config) in [("lossless", PipelineConfig::default()), ("split", split_config())] {
        g.bench_function(name, |b| {
            b.iter(|| {
                process_all(black_box(&sources), &config)
                    .iter()
                    .map(|w| write_corpus(w).len())
                    .sum::<usize>()
            })
        });
    }
    g.finish();
}

fn byte_pair(c: &mut Criterion) {
    let files = process_all(&fixture_sources(), &split_config());
    let freq = pipeline::word_frequencies(files.iter().map(Vec::as_slice));
    let model = bpe::train(&freq, 1000);
    let mut g = c.benchmark_group("bpe");
    g.sample_size(20);
    for n in [100, 1000] {
        g.bench_function(format!("train {n}"), |b| b.iter(|| bpe::train(black_box(&freq), n)));
    }
    g.throughput(Throughput::Elements(freq.len() as u64));
    g.bench_function("encode vocabulary", |b| {
        b.iter(|| freq.keys().map(|w| model.encode(black_box(w)).pieces.len()).sum::<usize>())
    });
    g.finish();
}

fn language_model(c: &mut Criterion) {
    let files: Vec<Vec<String>> = process_all(&fixture_sources(), &split_config())
        .iter()
        .map(|w| write_corpus(w).split_whitespace().map(String::from).collect())
        .collect();
    let cut = files.len() * 4 / 5;
    let (train, test) = files.split_at(cut);
    let config = NgramConfig::default();
    let model = ngram::fit(train, &config).expect("non-empty training set");
    let mut g = c.benchmark_group("ngram");
    g.sample_size(10);
    g.bench_function("fit order 6", |b| b.iter(|| ngram::fit(black_box(train), &config)));
    for (name, options) in [
        ("eval static", EvalOptions::default()),
        (
            "eval dynamic cache",
            EvalOptions {
                scenario: Scenario::Dynamic,
                cache_gamma: Some(ngram::DEFAULT_GAMMA),
                ..Default::default()
            },
        ),
    ] {
        g.bench_function(name, |b| b.iter(|| ngram::entropy(&model, black_box(test), &options)));
    }
    g.finish();
}

criterion_group!(benches, lexing, preprocessing, byte_pair, language_model);
criterion_main!(benches);
