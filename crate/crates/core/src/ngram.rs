//! Interpolated n-gram language model with an optional file-scoped cache.
//!
//! Probabilities are Jelinek-Mercer interpolations from the highest order
//! with an observed context down to the unigram, which itself backs off to a
//! uniform floor over the training vocabulary plus `<unk>`:
//!
//! ```text
//! p0(w)      = 1 / |V ∪ {<unk>}|
//! pk(w | h)  = λk · c(h w) / c(h ·) + (1 − λk) · pk−1(w | h')
//! ```
//!
//! where `h'` drops the oldest word of `h`. Orders whose context was never
//! seen are skipped. With a cache, the model probability is mixed with the
//! relative frequency of `w` among the words already seen in the current
//! file: `p = (1 − γ) · p_model + γ · p_cache`.
//!
//! Words are handled in corpus-file encoding, so markers and escaped source
//! words stay distinct.

use std::borrow::Cow;
use std::collections::HashMap;
use std::hash::Hash;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pipeline::words::UNKNOWN;

pub const MODEL_HEADER: &str = "#ngram-counts v1";
pub const DEFAULT_ORDER: usize = 6;
pub const DEFAULT_LAMBDA: f64 = 0.5;
pub const DEFAULT_GAMMA: f64 = 0.1;
pub const DEFAULT_CUTOFF: usize = 10;

const UNK: u32 = 0;

#[derive(Debug, Clone, Default, PartialEq)]
struct ContextCounts {
    total: u64,
    next: HashMap<u32, u64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NgramModel {
    order: usize,
    /// Interpolation weight for each order, index 0 being the unigram.
    lambdas: Vec<f64>,
    words: Vec<String>,
    ids: HashMap<String, u32>,
    /// `counts[k]` maps contexts of length `k` to their continuations.
    counts: Vec<HashMap<Vec<u32>, ContextCounts>>,
}

impl NgramModel {
    fn empty(order: usize, lambdas: Vec<f64>) -> Self {
        let mut model = NgramModel {
            order,
            lambdas,
            words: Vec::new(),
            ids: HashMap::new(),
            counts: vec![HashMap::new(); order],
        };
        model.intern(UNKNOWN);
        model
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    /// Training vocabulary size, including `<unk>`.
    pub fn vocab_size(&self) -> usize {
        self.words.len()
    }

    fn intern(&mut self, word: &str) -> u32 {
        if let Some(&id) = self.ids.get(word) {
            return id;
        }
        let id = self.words.len() as u32;
        self.words.push(word.to_string());
        self.ids.insert(word.to_string(), id);
        id
    }

    fn id(&self, word: &str) -> u32 {
        self.ids.get(word).copied().unwrap_or(UNK)
    }

    /// Records the n-grams ending at `history[pos]`.
    fn observe(&mut self, history: &[u32], pos: usize) {
        let w = history[pos];
        for k in 0..self.order.min(pos + 1) {
            let context = history[pos - k..pos].to_vec();
            let cc = self.counts[k].entry(context).or_default();
            cc.total += 1;
            *cc.next.entry(w).or_insert(0) += 1;
        }
    }

    fn prob_with(&self, contexts: &[(usize, &ContextCounts)], w: u32) -> f64 {
        let mut p = 1.0 / self.words.len() as f64;
        for &(k, cc) in contexts {
            let c = cc.next.get(&w).copied().unwrap_or(0);
            let lambda = self.lambdas[k];
            p = lambda * c as f64 / cc.total as f64 + (1.0 - lambda) * p;
        }
        p
    }

    fn context_stack<'m>(&'m self, history: &[u32]) -> Vec<(usize, &'m ContextCounts)> {
        let mut found = Vec::with_capacity(self.order);
        for k in 0..self.order.min(history.len() + 1) {
            let context = &history[history.len() - k..];
            if let Some(cc) = self.counts[k].get(context) {
                if cc.total > 0 {
                    found.push((k, cc));
                }
            }
        }
        found
    }

    /// Probability of `word` after `history` (both in corpus encoding).
    pub fn prob(&self, history: &[&str], word: &str) -> f64 {
        let ids: Vec<u32> = history.iter().map(|w| self.id(w)).collect();
        self.prob_with(&self.context_stack(&ids), self.id(word))
    }

    /// Full distribution after `history`, indexed like [`Self::vocabulary`].
    pub fn distribution(&self, history: &[&str]) -> Vec<f64> {
        let ids: Vec<u32> = history.iter().map(|w| self.id(w)).collect();
        let stack = self.context_stack(&ids);
        (0..self.words.len() as u32)
            .map(|w| self.prob_with(&stack, w))
            .collect()
    }

    /// Words known to the model; index 0 is `<unk>`.
    pub fn vocabulary(&self) -> &[String] {
        &self.words
    }

    /// Raw count of an n-gram (context words followed by the last word).
    pub fn ngram_count(&self, ngram: &[&str]) -> u64 {
        if ngram.is_empty() || ngram.len() > self.order {
            return 0;
        }
        let Some(ids) = ngram
            .iter()
            .map(|w| self.ids.get(*w).copied())
            .collect::<Option<Vec<u32>>>()
        else {
            return 0;
        };
        self.counts[ids.len() - 1]
            .get(&ids[..ids.len() - 1])
            .and_then(|cc| cc.next.get(&ids[ids.len() - 1]))
            .copied()
            .unwrap_or(0)
    }

    /// Text dump: header, order, lambdas, then `k<TAB>words<TAB>count` for
    /// every n-gram, sorted.
    pub fn save(&self) -> String {
        let mut lines = Vec::new();
        for (k, table) in self.counts.iter().enumerate() {
            for (context, cc) in table {
                let ctx: Vec<&str> = context.iter().map(|&i| self.words[i as usize].as_str()).collect();
                for (&w, &c) in &cc.next {
                    let mut gram = ctx.clone();
                    gram.push(&self.words[w as usize]);
                    lines.push((k + 1, gram.join(" "), c));
                }
            }
        }
        lines.sort();
        let mut out = String::new();
        let _ = writeln!(out, "{MODEL_HEADER}");
        let _ = writeln!(out, "order\t{}", self.order);
        let lambdas: Vec<String> = self.lambdas.iter().map(f64::to_string).collect();
        let _ = writeln!(out, "lambdas\t{}", lambdas.join(" "));
        for (k, gram, c) in lines {
            let _ = writeln!(out, "{k}\t{gram}\t{c}");
        }
        out
    }

    pub fn load(text: &str, path: &str) -> Result<Self> {
        let err = |line: usize, reason: &str| Error::Parse {
            path: path.to_string(),
            line,
            reason: reason.to_string(),
        };
        let mut lines = text.lines().enumerate();
        if lines.next().map(|(_, l)| l) != Some(MODEL_HEADER) {
            return Err(err(1, "missing `#ngram-counts v1` header"));
        }
        let order: usize = lines
            .next()
            .and_then(|(_, l)| l.strip_prefix("order\t"))
            .and_then(|v| v.parse().ok())
            .filter(|&o| o >= 1)
            .ok_or_else(|| err(2, "expected `order<TAB>n`"))?;
        let lambdas: Vec<f64> = lines
            .next()
            .and_then(|(_, l)| l.strip_prefix("lambdas\t"))
            .and_then(|v| v.split(' ').map(|x| x.parse().ok()).collect::<Option<Vec<f64>>>())
            .filter(|l| l.len() == order)
            .ok_or_else(|| err(3, "expected one lambda per order"))?;
        let mut model = NgramModel::empty(order, lambdas);
        for (i, line) in lines {
            let mut parts = line.split('\t');
            let (Some(k), Some(gram), Some(count), None) =
                (parts.next(), parts.next(), parts.next(), parts.next())
            else {
                return Err(err(i + 1, "expected `k<TAB>words<TAB>count`"));
            };
            let k: usize = k.parse().map_err(|_| err(i + 1, "bad order"))?;
            let count: u64 = count.parse().map_err(|_| err(i + 1, "bad count"))?;
            let words: Vec<&str> = gram.split(' ').collect();
            if k == 0 || k > order || words.len() != k {
                return Err(err(i + 1, "n-gram length does not match its order"));
            }
            let ids: Vec<u32> = words.iter().map(|w| model.intern(w)).collect();
            let (&w, context) = ids.split_last().expect("k >= 1");
            let cc = model.counts[k - 1].entry(context.to_vec()).or_default();
            cc.total += count;
            *cc.next.entry(w).or_insert(0) += count;
        }
        Ok(model)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NgramConfig {
    pub order: usize,
    /// One weight per order (unigram first); a single value applies to all.
    pub lambdas: Vec<f64>,
}

impl Default for NgramConfig {
    fn default() -> Self {
        NgramConfig {
            order: DEFAULT_ORDER,
            lambdas: vec![DEFAULT_LAMBDA],
        }
    }
}

impl NgramConfig {
    pub fn with_order(order: usize) -> Self {
        NgramConfig {
            order,
            ..Default::default()
        }
    }

    /// Maximum-likelihood estimates at every order (no smoothing).
    pub fn mle(order: usize) -> Self {
        NgramConfig {
            order,
            lambdas: vec![1.0],
        }
    }

    fn resolved_lambdas(&self) -> Result<Vec<f64>> {
        let lambdas = match self.lambdas.len() {
            1 => vec![self.lambdas[0]; self.order],
            n if n == self.order => self.lambdas.clone(),
            n => {
                return Err(Error::InvalidArgument(format!(
                    "expected 1 or {} interpolation weights, got {n}",
                    self.order
                )))
            }
        };
        if lambdas.iter().any(|l| !(0.0..=1.0).contains(l)) {
            return Err(Error::InvalidArgument("interpolation weights must lie in [0, 1]".into()));
        }
        Ok(lambdas)
    }
}

/// Counts every k-gram (k up to the order) of the training files. Files
/// are independent sequences: no n-gram spans two files.
pub fn fit<S: AsRef<str> + Sync>(files: &[Vec<S>], config: &NgramConfig) -> Result<NgramModel> {
    if config.order == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    if files.iter().all(|f| f.is_empty()) {
        return Err(Error::Empty("training corpus has no words"));
    }
    let mut model = NgramModel::empty(config.order, config.resolved_lambdas()?);
    let encoded: Vec<Vec<u32>> = files
        .iter()
        .map(|f| f.iter().map(|w| model.intern(w.as_ref())).collect())
        .collect();

    let order = config.order;
    let tables = encoded
        .par_iter()
        .fold(
            || vec![HashMap::<Vec<u32>, ContextCounts>::new(); order],
            |mut tables, ids| {
                for pos in 0..ids.len() {
                    for k in 0..order.min(pos + 1) {
                        let cc = tables[k].entry(ids[pos - k..pos].to_vec()).or_default();
                        cc.total += 1;
                        *cc.next.entry(ids[pos]).or_insert(0) += 1;
                    }
                }
                tables
            },
        )
        .reduce(
            || vec![HashMap::new(); order],
            |mut a, b| {
                for (ta, tb) in a.iter_mut().zip(b) {
                    for (ctx, cb) in tb {
                        let ca = ta.entry(ctx).or_default();
                        ca.total += cb.total;
                        for (w, c) in cb.next {
                            *ca.next.entry(w).or_insert(0) += c;
                        }
                    }
                }
                a
            },
        );
    model.counts = tables;
    Ok(model)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scenario {
    /// Counts are frozen during evaluation.
    Static,
    /// Each test word is added to the counts right after it is scored.
    Dynamic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Unit {
    Subtoken,
    Token,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalOptions {
    pub scenario: Scenario,
    /// Cache mixing weight; `None` disables the cache.
    pub cache_gamma: Option<f64>,
    pub cutoff: usize,
    pub unit: Unit,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            scenario: Scenario::Static,
            cache_gamma: None,
            cutoff: DEFAULT_CUTOFF,
            unit: Unit::Token,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub entropy_bits: f64,
    pub unit: Unit,
    pub mrr: f64,
    pub n_units: usize,
}

/// Recent words of the current file. Cleared at every file boundary.
#[derive(Debug, Clone)]
pub struct CacheState<K = String> {
    counts: HashMap<K, u64>,
    total: u64,
    pub gamma: f64,
}

impl<K: Hash + Eq> CacheState<K> {
    pub fn new(gamma: f64) -> Self {
        CacheState {
            counts: HashMap::new(),
            total: 0,
            gamma,
        }
    }

    pub fn clear(&mut self) {
        self.counts.clear();
        self.total = 0;
    }

    pub fn add(&mut self, word: K) {
        *self.counts.entry(word).or_insert(0) += 1;
        self.total += 1;
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn prob(&self, word: &K) -> f64 {
        if self.total == 0 {
            0.0
        } else {
            self.counts.get(word).copied().unwrap_or(0) as f64 / self.total as f64
        }
    }

    /// `(1 − γ) · p_model + γ · p_cache`, or `p_model` while the cache is empty.
    pub fn mix(&self, p_model: f64, word: &K) -> f64 {
        if self.total == 0 {
            p_model
        } else {
            (1.0 - self.gamma) * p_model + self.gamma * self.prob(word)
        }
    }
}

#[derive(Default)]
struct Totals {
    bits: f64,
    reciprocal_ranks: f64,
    units: usize,
}

impl Totals {
    fn merge(mut self, other: Totals) -> Totals {
        self.bits += other.bits;
        self.reciprocal_ranks += other.reciprocal_ranks;
        self.units += other.units;
        self
    }
}

/// Cache keys for words the model has never seen start here.
const LOCAL_BASE: u32 = 1 << 31;

/// Scores one file, updating `model` as it goes in the dynamic scenario.
fn score_file<S: AsRef<str>>(
    model: &mut Cow<'_, NgramModel>,
    file: &[S],
    options: &EvalOptions,
) -> Totals {
    let mut totals = Totals::default();
    let mut cache = options.cache_gamma.map(CacheState::<u32>::new);
    let mut unseen: Vec<String> = Vec::new();
    let mut unseen_keys: HashMap<String, u32> = HashMap::new();
    let mut history: Vec<u32> = Vec::with_capacity(file.len());
    for word in file {
        let word = word.as_ref();
        let m: &NgramModel = model;
        let known = m.ids.get(word).copied();
        let key = known.unwrap_or_else(|| {
            *unseen_keys.entry(word.to_string()).or_insert_with(|| {
                unseen.push(word.to_string());
                LOCAL_BASE + unseen.len() as u32 - 1
            })
        });
        let start = history.len().saturating_sub(m.order - 1);
        let stack = m.context_stack(&history[start..]);
        let p_model = m.prob_with(&stack, known.unwrap_or(UNK));
        let p = cache.as_ref().map_or(p_model, |c| c.mix(p_model, &key));
        totals.bits -= p.log2();
        totals.units += 1;
        let name = |k: u32| {
            if k >= LOCAL_BASE {
                unseen[(k - LOCAL_BASE) as usize].as_str()
            } else {
                m.words[k as usize].as_str()
            }
        };
        if let Some(rank) = rank_of(m, &stack, cache.as_ref(), key, &name, options.cutoff) {
            totals.reciprocal_ranks += 1.0 / rank as f64;
        }

        match options.scenario {
            Scenario::Static => {
                history.push(known.unwrap_or(UNK));
                if let Some(c) = cache.as_mut() {
                    c.add(key);
                }
            }
            Scenario::Dynamic => {
                let m = model.to_mut();
                let id = m.intern(word);
                if key >= LOCAL_BASE {
                    // Now part of the model: move earlier cache hits to the real id.
                    if let Some(c) = cache.as_mut() {
                        if let Some(n) = c.counts.remove(&key) {
                            c.counts.insert(id, n);
                        }
                    }
                    unseen_keys.remove(word);
                }
                if let Some(c) = cache.as_mut() {
                    c.add(id);
                }
                history.push(id);
                let start = history.len().saturating_sub(m.order);
                let window = history[start..].to_vec();
                m.observe(&window, window.len() - 1);
            }
        }
    }
    totals
}

/// 1-based rank of `truth` among all completions ordered by probability
/// (ties by word), or `None` past `cutoff`. `<unk>` is never a completion.
fn rank_of<'n>(
    model: &NgramModel,
    stack: &[(usize, &ContextCounts)],
    cache: Option<&CacheState<u32>>,
    truth: u32,
    name: &dyn Fn(u32) -> &'n str,
    cutoff: usize,
) -> Option<usize> {
    if cutoff == 0 || truth == UNK {
        return None;
    }
    // Same arithmetic as `prob_with`, one order at a time over the whole
    // vocabulary, so scores agree bit for bit.
    let v = model.words.len();
    let mut scores = vec![1.0 / v as f64; v];
    for &(k, cc) in stack {
        let lambda = model.lambdas[k];
        for s in scores.iter_mut() {
            *s *= 1.0 - lambda;
        }
        for (&w, &c) in &cc.next {
            let s = &mut scores[w as usize];
            *s = lambda * c as f64 / cc.total as f64 + *s;
        }
    }
    let unk_score = scores[UNK as usize];
    let mut extra: Vec<(u32, f64)> = Vec::new();
    if let Some(c) = cache.filter(|c| !c.is_empty()) {
        // Words outside the cache get `(1 − γ) · p`; cached ones add their
        // share exactly as `CacheState::mix` does.
        for s in scores.iter_mut() {
            *s *= 1.0 - c.gamma;
        }
        for (&k, &n) in &c.counts {
            let boost = c.gamma * (n as f64 / c.total as f64);
            if k >= LOCAL_BASE {
                extra.push((k, (1.0 - c.gamma) * unk_score + boost));
            } else {
                scores[k as usize] += boost;
            }
        }
    }
    let truth_score = if truth >= LOCAL_BASE {
        extra.iter().find(|&&(k, _)| k == truth)?.1
    } else {
        scores[truth as usize]
    };
    let truth_name = name(truth);
    let mut rank = 1;
    let candidates = (1..v as u32)
        .map(|w| (w, scores[w as usize]))
        .chain(extra.iter().copied());
    for (w, s) in candidates {
        if w == truth {
            continue;
        }
        if s > truth_score || (s == truth_score && name(w) < truth_name) {
            rank += 1;
            if rank > cutoff {
                return None;
            }
        }
    }
    Some(rank)
}

/// Mean negative log2 probability per unit over the test files, together
/// with the MRR of next-word completion.
pub fn entropy<S: AsRef<str> + Sync>(
    model: &NgramModel,
    test_files: &[Vec<S>],
    options: &EvalOptions,
) -> EvalResult {
    let totals = match options.scenario {
        Scenario::Static => test_files
            .par_iter()
            .map(|f| score_file(&mut Cow::Borrowed(model), f, options))
            .reduce(Totals::default, Totals::merge),
        Scenario::Dynamic => {
            let mut working = Cow::Borrowed(model);
            test_files
                .iter()
                .map(|f| score_file(&mut working, f, options))
                .fold(Totals::default(), Totals::merge)
        }
    };
    let n = totals.units.max(1) as f64;
    EvalResult {
        entropy_bits: totals.bits / n,
        unit: options.unit,
        mrr: totals.reciprocal_ranks / n,
        n_units: totals.units,
    }
}

/// Converts a per-subtoken entropy into a per-token entropy.
pub fn word_entropy(subword_entropy: f64, n_subtokens: u64, n_tokens: u64) -> Result<f64> {
    if n_tokens == 0 {
        return Err(Error::InvalidArgument("n_tokens must be at least 1".into()));
    }
    Ok(subword_entropy * n_subtokens as f64 / n_tokens as f64)
}

/// Mean reciprocal rank; a truth missing from its list or ranked past
/// `cutoff` scores 0.
pub fn mrr<S: AsRef<str>>(predictions: &[Vec<S>], truths: &[S], cutoff: usize) -> Result<f64> {
    if predictions.is_empty() {
        return Err(Error::Empty("no predictions"));
    }
    if predictions.len() != truths.len() {
        return Err(Error::InvalidArgument(format!(
            "{} prediction lists but {} truths",
            predictions.len(),
            truths.len()
        )));
    }
    let total: f64 = predictions
        .iter()
        .zip(truths)
        .map(|(ranked, truth)| {
            ranked
                .iter()
                .take(cutoff)
                .position(|c| c.as_ref() == truth.as_ref())
                .map_or(0.0, |p| 1.0 / (p + 1) as f64)
        })
        .sum();
    Ok(total / predictions.len() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn words(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn mle_bigram_is_deterministic() {
        let model = fit(&[words("a b a b a b")], &NgramConfig::mle(2)).unwrap();
        assert_eq!(model.prob(&["a"], "b"), 1.0);
        assert_eq!(model.prob(&["b"], "a"), 1.0);
    }

    #[test]
    fn trigram_counts_match_sliding_window() {
        let text = "x y z x y w x y z z x y z x y w q x y z";
        let corpus = words(text);
        assert_eq!(corpus.len(), 20);
        let model = fit(&[corpus.clone()], &NgramConfig::with_order(3)).unwrap();
        let mut oracle: HashMap<Vec<&str>, u64> = HashMap::new();
        for n in 1..=3 {
            for window in corpus.windows(n) {
                *oracle
                    .entry(window.iter().map(String::as_str).collect())
                    .or_insert(0) += 1;
            }
        }
        for (gram, count) in &oracle {
            assert_eq!(model.ngram_count(gram), *count, "{gram:?}");
        }
        assert_eq!(model.ngram_count(&["x", "y", "z"]), 4);
        assert_eq!(model.ngram_count(&["z", "z", "z"]), 0);
    }

    #[test]
    fn empty_corpus_is_an_error() {
        assert!(fit::<String>(&[], &NgramConfig::default()).is_err());
        assert!(fit(&[Vec::<String>::new()], &NgramConfig::default()).is_err());
        assert!(fit(&[words("a")], &NgramConfig::with_order(0)).is_err());
        let bad = NgramConfig {
            order: 3,
            lambdas: vec![0.5, 0.5],
        };
        assert!(fit(&[words("a")], &bad).is_err());
    }

    #[test]
    fn distributions_sum_to_one() {
        let corpus = vec![words("a b c a b d a b c e f a"), words("b c d e")];
        let model = fit(&corpus, &NgramConfig::with_order(4)).unwrap();
        for history in [vec![], vec!["a"], vec!["a", "b"], vec!["c", "a", "b"], vec!["zz", "b"]] {
            let sum: f64 = model.distribution(&history).iter().sum();
            assert!((sum - 1.0).abs() < 1e-9, "{history:?}: {sum}");
        }
    }

    #[test]
    fn unseen_words_have_nonzero_probability() {
        let model = fit(&[words("a b a b")], &NgramConfig::default()).unwrap();
        assert!(model.prob(&["a"], "never-seen") > 0.0);
    }

    #[test]
    fn deterministic_corpus_has_near_zero_entropy() {
        let text = "a b ".repeat(1000);
        let corpus = vec![words(&text)];
        let model = fit(&corpus, &NgramConfig::mle(2)).unwrap();
        let result = entropy(&model, &corpus, &EvalOptions::default());
        assert!(result.entropy_bits < 0.01, "{}", result.entropy_bits);
        assert_eq!(result.n_units, 2000);
    }

    #[test]
    fn uniform_unigram_over_eight_words() {
        let corpus = vec![words("a b c d e f g h")];
        let model = fit(&corpus, &NgramConfig::mle(1)).unwrap();
        let result = entropy(&model, &corpus, &EvalOptions::default());
        assert!((result.entropy_bits - 3.0).abs() < 1e-12);
    }

    #[test]
    fn cache_helps_on_repeated_unseen_word() {
        let train = vec![words("int x = 1 ; int y = 2 ; return x ;")];
        let mut test = Vec::new();
        for _ in 0..20 {
            test.extend(words("foo = foo ;"));
        }
        let test = vec![test];
        let model = fit(&train, &NgramConfig::default()).unwrap();
        let plain = entropy(&model, &test, &EvalOptions::default());
        let cached = entropy(
            &model,
            &test,
            &EvalOptions {
                cache_gamma: Some(DEFAULT_GAMMA),
                ..Default::default()
            },
        );
        assert!(cached.entropy_bits < plain.entropy_bits);
    }

    #[test]
    fn cache_is_cleared_between_files() {
        let model = fit(&[words("a b c")], &NgramConfig::default()).unwrap();
        let options = EvalOptions {
            cache_gamma: Some(0.5),
            ..Default::default()
        };
        let one = entropy(&model, &[words("z")], &options);
        let two = entropy(&model, &[words("z"), words("z")], &options);
        assert!((one.entropy_bits - two.entropy_bits).abs() < 1e-12);
    }

    #[test]
    fn dynamic_learns_cross_file_repetition() {
        let train = vec![words("p q r s")];
        let test = vec![words("u v w u v w"), words("u v w u v w"), words("u v w")];
        let model = fit(&train, &NgramConfig::with_order(3)).unwrap();
        let st = entropy(&model, &test, &EvalOptions::default());
        let dy = entropy(
            &model,
            &test,
            &EvalOptions {
                scenario: Scenario::Dynamic,
                ..Default::default()
            },
        );
        assert!(dy.entropy_bits <= st.entropy_bits);
        assert!(dy.mrr >= st.mrr);
        // Evaluation never mutates the caller's model.
        assert_eq!(model.vocab_size(), 5);
    }

    #[test]
    fn mrr_formula() {
        let preds = vec![
            vec!["a", "b", "c"],
            vec!["x", "a", "y"],
            vec!["p", "q", "r", "a"],
        ];
        let truths = vec!["a", "a", "a"];
        let m = mrr(&preds, &truths, DEFAULT_CUTOFF).unwrap();
        assert!((m - (1.0 + 0.5 + 0.25) / 3.0).abs() < 1e-12);
        assert_eq!(mrr(&[vec!["a"]], &["a"], 10).unwrap(), 1.0);
        assert_eq!(mrr(&[vec!["b", "a"]], &["a"], 1).unwrap(), 0.0);
        assert!(mrr::<&str>(&[], &[], 10).is_err());
        assert!(mrr(&[vec!["a"]], &[], 10).is_err());
    }

    #[test]
    fn model_mrr_on_deterministic_sequence() {
        let corpus = vec![words(&"a b c ".repeat(50))];
        let model = fit(&corpus, &NgramConfig::with_order(3)).unwrap();
        let r = entropy(&model, &corpus, &EvalOptions::default());
        // Only the very first word lacks a context; it still ranks among the
        // three equally frequent unigrams.
        assert!(r.mrr > 0.99);
        assert!((0.0..=1.0).contains(&r.mrr));
    }

    #[test]
    fn word_entropy_conversion() {
        assert_eq!(word_entropy(2.0, 100, 100).unwrap(), 2.0);
        assert!((word_entropy(1.82, 197, 100).unwrap() - 3.5854).abs() < 1e-9);
        assert_eq!(word_entropy(0.0, 37, 12).unwrap(), 0.0);
        assert!(word_entropy(1.0, 1, 0).is_err());
    }

    #[test]
    fn save_load_round_trip() {
        let corpus = vec![words("a b c a b \\<w> <nl>"), words("b c d")];
        let model = fit(&corpus, &NgramConfig::with_order(3)).unwrap();
        let text = model.save();
        let loaded = NgramModel::load(&text, "m").unwrap();
        assert_eq!(loaded.save(), text);
        for (h, w) in [(vec!["a"], "b"), (vec!["a", "b"], "c"), (vec![], "zz")] {
            assert!((loaded.prob(&h, w) - model.prob(&h, w)).abs() < 1e-15);
        }
        assert!(NgramModel::load("nope", "m").is_err());
        assert!(NgramModel::load("#ngram-counts v1\norder\t2\nlambdas\t0.5 0.5\n3\ta b c\t1\n", "m").is_err());
    }

    #[test]
    fn eval_result_json_shape() {
        let r = EvalResult {
            entropy_bits: 1.5,
            unit: Unit::Subtoken,
            mrr: 0.25,
            n_units: 4,
        };
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"entropy_bits":1.5,"unit":"subtoken","mrr":0.25,"n_units":4}"#
        );
    }

    proptest! {
        #[test]
        fn normalization_everywhere(
            corpus in prop::collection::vec(prop::collection::vec("[a-e]", 1..30), 1..4),
            history in prop::collection::vec("[a-f]", 0..5),
            order in 1usize..5,
            lambda in 0.05f64..0.95,
        ) {
            let config = NgramConfig { order, lambdas: vec![lambda] };
            let model = fit(&corpus, &config).unwrap();
            let h: Vec<&str> = history.iter().map(String::as_str).collect();
            let sum: f64 = model.distribution(&h).iter().sum();
            prop_assert!((sum - 1.0).abs() < 1e-9);
        }

        #[test]
        fn ranked_completions_agree_with_brute_force(
            corpus in prop::collection::vec("[a-f]", 5..60),
            history in prop::collection::vec("[a-f]", 0..3),
            cutoff in 1usize..6,
        ) {
            let model = fit(&[corpus], &NgramConfig::with_order(3)).unwrap();
            let ids: Vec<u32> = history.iter().map(|w| model.id(w)).collect();
            let stack = model.context_stack(&ids);
            let mut all: Vec<(f64, &str)> = model.words.iter().enumerate().skip(1)
                .map(|(i, w)| (model.prob_with(&stack, i as u32), w.as_str()))
                .collect();
            all.sort_by(|a, b| b.0.total_cmp(&a.0).then_with(|| a.1.cmp(b.1)));
            for (pos, &(_, w)) in all.iter().enumerate() {
                let expected = (pos < cutoff).then_some(pos + 1);
                let name = |k: u32| model.words[k as usize].as_str();
                prop_assert_eq!(rank_of(&model, &stack, None, model.id(w), &name, cutoff), expected);
            }
        }

        #[test]
        fn mrr_with_cache_matches_naive_ranking(
            train in prop::collection::vec("[a-d]", 3..40),
            test in prop::collection::vec("[a-g]", 1..25),
            gamma in 0.05f64..0.5,
        ) {
            let model = fit(&[train], &NgramConfig::with_order(3)).unwrap();
            let options = EvalOptions { cache_gamma: Some(gamma), cutoff: 3, ..Default::default() };
            let got = entropy(&model, &[test.clone()], &options);

            let mut cache = CacheState::<String>::new(gamma);
            let mut total = 0.0;
            for (i, truth) in test.iter().enumerate() {
                let history: Vec<&str> = test[i.saturating_sub(2)..i].iter().map(String::as_str).collect();
                let mut names: Vec<String> = model.vocabulary()[1..].to_vec();
                for w in &test[..i] {
                    if !names.contains(w) {
                        names.push(w.clone());
                    }
                }
                let mut scored: Vec<(f64, String)> = names
                    .into_iter()
                    .map(|w| (cache.mix(model.prob(&history, &w), &w), w))
                    .collect();
                scored.sort_by(|a, b| b.0.total_cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
                if let Some(pos) = scored.iter().take(3).position(|(_, w)| w == truth) {
                    total += 1.0 / (pos + 1) as f64;
                }
                cache.add(truth.clone());
            }
            prop_assert!((got.mrr - total / test.len() as f64).abs() < 1e-12);
        }
    }
}
