//! Acceptance checks. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fs;
use std::panic;
use std::time::{Duration, Instant};

use codevocab::corpus::{self, ProjectSet};
use codevocab::ngram::{self, EvalOptions, NgramConfig, Scenario, DEFAULT_GAMMA};
use codevocab::pipeline::words::write_corpus;
use codevocab::pipeline::{self, split_identifier, unsplit_identifier};
use codevocab::stats::{self, VocabStats};
use codevocab::{bpe, lex, CorpusWord, PipelineConfig, Processed};
use rand::distributions::{Distribution, Uniform};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{codevocab, fixtures, manifest, snapshot};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const REFERENCE_SPLITS: [(&str, bool, &str); 3] = [
    ("MalformedURLException", false, "<w> <Upper> malformed <UPPER> url <Upper> exception </w>"),
    ("LAYOUT_INFLATER_SERVICE", false, "<w> <UPPER> layout <_> <UPPER> inflater <_> <UPPER> service </w>"),
    ("MalformedURLException", true, "<w> Malformed URL Exception </w>"),
];

fn rendered(words: &[CorpusWord]) -> String {
    words.iter().map(|w| w.text.as_str()).collect::<Vec<_>>().join(" ")
}

fn identifier(rng: &mut ChaCha8Rng) -> String {
    const CHARS: &[u8] = b"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_";
    let len = rng.gen_range(1..=24);
    (0..len).map(|_| CHARS[rng.gen_range(0..CHARS.len())] as char).collect()
}

fn c1_round_trip() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut words: Vec<String> = (0..10_000).map(|_| identifier(&mut rng)).collect();
    words.extend(REFERENCE_SPLITS.iter().map(|(w, _, _)| w.to_string()));
    let mut checked = 0;
    for w in &words {
        for keep_case in [false, true] {
            let back = unsplit_identifier(&split_identifier(w, keep_case)).map_err(|e| format!("{w}: {e}"))?;
            ensure!(&back == w, "{w} (keep_case={keep_case}) came back as {back}");
            checked += 1;
        }
    }
    let elapsed = started.elapsed();
    ensure!(elapsed < Duration::from_secs(5), "took {elapsed:.2?}");
    Ok(format!("{checked} round trips in {elapsed:.2?}"))
}

fn c2_reference_splits() -> Outcome {
    for (input, keep_case, expected) in REFERENCE_SPLITS {
        let got = rendered(&split_identifier(input, keep_case));
        ensure!(got == expected, "{input}: got `{got}`, expected `{expected}`");
    }
    Ok("3/3 exact".into())
}

mod naive_bpe {
    use std::collections::{BTreeMap, HashMap};

    fn symbols(word: &str) -> Vec<String> {
        let mut s: Vec<String> = word.chars().map(String::from).collect();
        s.push("</t>".to_string());
        s
    }

    fn merge(seq: &[String], left: &str, right: &str) -> Vec<String> {
        let mut out = Vec::with_capacity(seq.len());
        let mut i = 0;
        while i < seq.len() {
            if i + 1 < seq.len() && seq[i] == left && seq[i + 1] == right {
                out.push(format!("{left}{right}"));
                i += 2;
            } else {
                out.push(seq[i].clone());
                i += 1;
            }
        }
        out
    }

    /// Recounts every adjacent pair before each merge; ties go to the
    /// lexicographically smallest pair; stops when no pair occurs twice.
    pub fn train(freq: &HashMap<String, u64>, n: usize) -> Vec<(String, String)> {
        let mut corpus: Vec<(Vec<String>, u64)> = freq.iter().map(|(w, &c)| (symbols(w), c)).collect();
        let mut merges = Vec::new();
        for _ in 0..n {
            let mut counts: BTreeMap<(String, String), u64> = BTreeMap::new();
            for (seq, c) in &corpus {
                for p in seq.windows(2) {
                    *counts.entry((p[0].clone(), p[1].clone())).or_insert(0) += c;
                }
            }
            let mut best: Option<(&(String, String), u64)> = None;
            for (pair, &c) in &counts {
                if best.map_or(true, |(_, b)| c > b) {
                    best = Some((pair, c));
                }
            }
            let Some((pair, count)) = best else { break };
            if count < 2 {
                break;
            }
            let pair = pair.clone();
            for (seq, _) in corpus.iter_mut() {
                *seq = merge(seq, &pair.0, &pair.1);
            }
            merges.push(pair);
        }
        merges
    }
}

fn random_corpora() -> Vec<HashMap<String, u64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let letters = Uniform::from(b'a'..=b'f');
    (0..50)
        .map(|_| {
            let n_words = rng.gen_range(1..=50);
            let mut freq = HashMap::new();
            for _ in 0..n_words {
                let len = rng.gen_range(1..=8);
                let w: String = (0..len).map(|_| letters.sample(&mut rng) as char).collect();
                *freq.entry(w).or_insert(0) += rng.gen_range(1..=5);
            }
            freq
        })
        .collect()
}

fn c3_bpe_oracle() -> Outcome {
    let started = Instant::now();
    let corpora = random_corpora();
    for (i, freq) in corpora.iter().enumerate() {
        for n in [1, 5, 20] {
            let got = bpe::train(freq, n).merges;
            let expected = naive_bpe::train(freq, n);
            ensure!(got == expected, "corpus {i}, n={n}: {got:?} != {expected:?}");
        }
    }
    let elapsed = started.elapsed();
    ensure!(elapsed < Duration::from_secs(30), "took {elapsed:.2?}");
    Ok(format!("{} corpora x 3 merge counts in {elapsed:.2?}", corpora.len()))
}

fn c4_bpe_bounds() -> Outcome {
    let corpora = random_corpora();
    let mut models = Vec::new();
    for (i, freq) in corpora.iter().enumerate() {
        for n in [1, 5, 20] {
            let model = bpe::train(freq, n);
            let vocab = bpe::vocab_of(&model, freq.iter().map(|(w, &c)| (w.as_str(), c)));
            ensure!(
                vocab.len() <= model.alphabet.len() + n,
                "corpus {i}, n={n}: vocab {} > alphabet {} + {n}",
                vocab.len(),
                model.alphabet.len()
            );
            models.push(model);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let pool: Vec<char> = "abcdefgh_XY09<>/\\ é€".chars().collect();
    for i in 0..10_000 {
        let len = rng.gen_range(1..=16);
        let s: String = (0..len).map(|_| pool[rng.gen_range(0..pool.len())]).collect();
        let model = &models[i % models.len()];
        let back = bpe::decode(&model.encode(&s)).map_err(|e| e.to_string())?;
        ensure!(back == s, "{s:?} decoded as {back:?}");
    }
    Ok(format!("{} models within bound, 10000/10000 codec round trips", models.len()))
}

fn exhaustive_threshold(freq: &BTreeMap<String, u64>, target: usize) -> (u64, f64) {
    let total: u64 = freq.values().sum();
    let max = freq.values().copied().max().unwrap_or(0);
    for k in 1..=max + 1 {
        if freq.values().filter(|&&c| c >= k).count() <= target {
            let oov: u64 = freq.values().filter(|&&c| c < k).sum();
            return (k, if total == 0 { 0.0 } else { oov as f64 / total as f64 });
        }
    }
    unreachable!("k = max + 1 leaves no words")
}

fn c5_oov_threshold() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for t in 0..100 {
        let n = rng.gen_range(1..=60);
        let freq: BTreeMap<String, u64> = (0..n).map(|i| (format!("w{i}"), rng.gen_range(1..=30))).collect();
        let target = rng.gen_range(1..=n + 5);
        let mut s = VocabStats::new();
        for (w, &c) in &freq {
            s.add_count(w, c);
        }
        let got = stats::oov_threshold(&s, target).map_err(|e| e.to_string())?;
        let expected = exhaustive_threshold(&freq, target);
        ensure!(got == expected, "table {t} target {target}: {got:?} != {expected:?}");
    }
    let mut s = VocabStats::new();
    for (w, c) in [("a", 10), ("b", 5), ("c", 5), ("d", 1)] {
        s.add_count(w, c);
    }
    let (k, frac) = stats::oov_threshold(&s, 2).map_err(|e| e.to_string())?;
    ensure!(k == 6 && frac == 11.0 / 21.0, "worked example gave k={k}, oov={frac}");
    Ok("100/100 tables match; worked example k=6, OOV 11/21".into())
}

fn fixture_set() -> ProjectSet {
    let ps = corpus::ingest(&fixtures().join("corpus"), corpus::DEFAULT_EXTENSIONS).unwrap();
    corpus::dedup(&ps).0
}

/// (project id, words) for every file the configuration keeps.
fn process(ps: &ProjectSet, config: &PipelineConfig) -> Vec<(String, Vec<CorpusWord>)> {
    let mut out = Vec::new();
    for p in &ps.projects {
        for f in &p.files {
            let text = fs::read_to_string(ps.path_of(p, f)).unwrap();
            if let Processed::Words(w) = pipeline::apply(&lex(&text), config) {
                out.push((p.id.clone(), w));
            }
        }
    }
    out
}

fn stats_of(files: &[(String, Vec<CorpusWord>)]) -> VocabStats {
    let texts: Vec<(String, String)> = files
        .iter()
        .enumerate()
        .map(|(i, (_, w))| (i.to_string(), write_corpus(w)))
        .collect();
    stats::build_stats(texts.iter().map(|(n, t)| (n.as_str(), t.as_str()))).unwrap()
}

fn config(name: &str) -> PipelineConfig {
    let text = fs::read_to_string(fixtures().join("experiments").join(name)).unwrap();
    PipelineConfig::parse(&text).unwrap()
}

fn c6_configuration_direction() -> Outcome {
    let ps = fixture_set();
    let unsplit = stats_of(&process(&ps, &config("unsplit.conf")));
    let split_files = process(&ps, &config("split.conf"));
    let split = stats_of(&split_files);
    let splitnum = stats_of(&process(&ps, &config("splitnum.conf")));
    let (vu, vs, vn) = (unsplit.vocab(true), split.vocab(true), splitnum.vocab(true));
    let (tu, ts, tn) = (unsplit.total_tokens, split.total_tokens, splitnum.total_tokens);
    ensure!(vs < vu, "vocab split {vs} !< unsplit {vu}");
    ensure!(ts > tu, "tokens split {ts} !> unsplit {tu}");
    ensure!(vn < vs, "vocab splitnum {vn} !< split {vs}");
    let inflation = tn as f64 / ts as f64 - 1.0;
    ensure!(inflation <= 0.05, "splitnum token inflation {:.2}% > 5%", inflation * 100.0);

    let freq = pipeline::word_frequencies(split_files.iter().map(|(_, w)| w.as_slice()));
    let model = bpe::train(&freq, 1000);
    let vocab = bpe::vocab_of(&model, freq.iter().map(|(w, &c)| (w.as_str(), c)));
    ensure!(
        vocab.len() <= 1000 + model.alphabet.len(),
        "BPE-1000 vocab {} > 1000 + alphabet {}",
        vocab.len(),
        model.alphabet.len()
    );
    Ok(format!(
        "vocab {vu} > {vs} > {vn}, tokens {tu} < {ts}, number inflation {:.1}%, BPE-1000 vocab {} <= 1000 + {}",
        inflation * 100.0,
        vocab.len(),
        model.alphabet.len()
    ))
}

fn c7_growth() -> Outcome {
    let ps = fixture_set();
    let files = process(&ps, &PipelineConfig::default());
    let mut per_project: BTreeMap<&str, Vec<String>> = BTreeMap::new();
    for (project, words) in &files {
        per_project
            .entry(project)
            .or_default()
            .extend(write_corpus(words).split_whitespace().map(String::from));
    }
    let lists: Vec<Vec<String>> = per_project.into_values().collect();
    let sets: Vec<HashSet<String>> = lists.iter().map(|l| l.iter().cloned().collect()).collect();
    let points: Vec<f64> = (1..=10).map(|i| i as f64 / 10.0).collect();
    let curve = stats::growth_curve(&sets, &points, 42).map_err(|e| e.to_string())?;
    ensure!(
        curve.samples.windows(2).all(|w| w[0].1 <= w[1].1),
        "not monotone: {:?}",
        curve.samples
    );
    let order = stats::shuffled_order(lists.len(), 42);
    for &(n, vocab) in &curve.samples {
        let mut words: Vec<&String> = order[..n].iter().flat_map(|&p| &lists[p]).collect();
        words.sort();
        words.dedup();
        ensure!(vocab == words.len(), "{n} projects: curve {vocab}, recount {}", words.len());
    }
    let last = curve.samples.last().unwrap();
    Ok(format!("{} samples, monotone, up to {} words at {} projects", curve.samples.len(), last.1, last.0))
}

fn words(s: &str) -> Vec<String> {
    s.split_whitespace().map(String::from).collect()
}

fn c8_lm_sanity() -> Outcome {
    let ab = vec![words(&"a b ".repeat(1000))];
    let model = ngram::fit(&ab, &NgramConfig::mle(2)).map_err(|e| e.to_string())?;
    let h_ab = ngram::entropy(&model, &ab, &EvalOptions::default()).entropy_bits;
    ensure!(h_ab < 0.01, "bigram entropy {h_ab}");

    let eight = vec![words("a b c d e f g h")];
    let model = ngram::fit(&eight, &NgramConfig::mle(1)).map_err(|e| e.to_string())?;
    let h_uniform = ngram::entropy(&model, &eight, &EvalOptions::default()).entropy_bits;
    ensure!((h_uniform - 3.0).abs() <= 0.001, "uniform unigram entropy {h_uniform}");

    let train = vec![words("int x = 1 ; int y = 2 ; return x ;")];
    let test = vec![words(&"foo = foo ; ".repeat(20))];
    let model = ngram::fit(&train, &NgramConfig::default()).map_err(|e| e.to_string())?;
    let plain = ngram::entropy(&model, &test, &EvalOptions::default()).entropy_bits;
    let cached = ngram::entropy(
        &model,
        &test,
        &EvalOptions {
            cache_gamma: Some(DEFAULT_GAMMA),
            ..Default::default()
        },
    )
    .entropy_bits;
    ensure!(cached < plain, "cached {cached} !< uncached {plain}");

    let train = vec![words("p q r s")];
    let test = vec![words("u v w u v w"), words("u v w u v w"), words("u v w")];
    let model = ngram::fit(&train, &NgramConfig::with_order(3)).map_err(|e| e.to_string())?;
    let st = ngram::entropy(&model, &test, &EvalOptions::default()).entropy_bits;
    let dy = ngram::entropy(
        &model,
        &test,
        &EvalOptions {
            scenario: Scenario::Dynamic,
            ..Default::default()
        },
    )
    .entropy_bits;
    ensure!(dy <= st, "dynamic {dy} !<= static {st}");
    Ok(format!(
        "bigram {h_ab:.5}, uniform {h_uniform:.4}, cache {cached:.3} < {plain:.3}, dynamic {dy:.3} <= static {st:.3}"
    ))
}

fn c9_metrics() -> Outcome {
    let h = ngram::word_entropy(1.82, 197, 100).map_err(|e| e.to_string())?;
    ensure!((h - 3.5854).abs() <= 1e-4, "word_entropy = {h}");
    let preds = vec![vec!["t", "x"], vec!["x", "t"], vec!["x", "y", "z", "t"]];
    let truths = vec!["t", "t", "t"];
    let m = ngram::mrr(&preds, &truths, 10).map_err(|e| e.to_string())?;
    ensure!((m - 0.58333).abs() <= 1e-5, "mrr = {m}");
    Ok(format!("word_entropy {h:.4}, mrr {m:.5}"))
}

fn c10_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let f = fixtures();
    let body = format!(
        "corpus_root = {:?}\nbpe_merges = 1000\nseed = 42\noutput_dir = \"out\"\n\n[lm]\norder = 6\nlambda = 0.5\ngamma = 0.1\n",
        f.join("corpus")
    );
    let mut trees = Vec::new();
    let mut slowest = Duration::ZERO;
    for run in ["a", "b"] {
        let m = manifest(&dir.path().join(run), "full", &body);
        let started = Instant::now();
        let r = codevocab(&["--manifest", &m, "run"]);
        let elapsed = started.elapsed();
        ensure!(r.code == 0, "run {run} exited {}: {}", r.code, r.stderr);
        slowest = slowest.max(elapsed);
        trees.push(snapshot(&dir.path().join(run).join("out")));
    }
    ensure!(slowest < Duration::from_secs(60), "a full run took {slowest:.2?}");
    let (a, b) = (&trees[0], &trees[1]);
    ensure!(
        a.keys().eq(b.keys()),
        "file sets differ: {:?} vs {:?}",
        a.keys().collect::<Vec<_>>(),
        b.keys().collect::<Vec<_>>()
    );
    if let Some((name, _)) = a.iter().find(|(k, v)| b[*k] != **v) {
        return Err(format!("{name} differs between runs"));
    }
    Ok(format!("{} files byte-identical, slowest run {slowest:.2?}", a.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 lossless identifier round trip", c1_round_trip),
        ("2 reference identifier encodings", c2_reference_splits),
        ("3 BPE oracle equivalence", c3_bpe_oracle),
        ("4 BPE bounds and codec", c4_bpe_bounds),
        ("5 OOV threshold", c5_oov_threshold),
        ("6 configuration direction on fixture", c6_configuration_direction),
        ("7 growth monotonicity", c7_growth),
        ("8 LM sanity", c8_lm_sanity),
        ("9 metric formulas", c9_metrics),
        ("10 end-to-end determinism", c10_determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, check) in criteria {
        let outcome = panic::catch_unwind(check).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(reason) => {
                failed += 1;
                println!("FAIL  {name}: {reason}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
