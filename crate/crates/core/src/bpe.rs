//! Byte-pair encoding over corpus words.
//!
//! Training starts from the characters of every word plus the end-of-word
//! symbol `</t>` and repeatedly merges the most frequent adjacent pair. Ties
//! go to the lexicographically smallest `(left, right)` pair, so training is
//! deterministic. Pairs never span two words, and markers are never part of
//! the training data, so they stay atomic.
//!
//! The trainer keeps pair counts up to date incrementally: after a merge only
//! the words that contained the merged pair are recounted.

use std::cmp::{Ordering, Reverse};
use std::collections::{BTreeMap, BTreeSet, BinaryHeap, HashMap, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pipeline::words::{escape_symbol, unescape_symbol, CorpusWord, END_OF_WORD};

pub const MERGES_HEADER: &str = "#bpe-merges v1";

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BpeModel {
    /// Merges in training order.
    pub merges: Vec<(String, String)>,
    /// Initial symbols: every character seen in training, plus `</t>`.
    pub alphabet: BTreeSet<String>,
    /// Pair frequency at the time each merge was selected; empty for models
    /// loaded from a merges file.
    pub merge_counts: Vec<u64>,
    ranks: HashMap<String, HashMap<String, usize>>,
}

/// A word and its segmentation. The last piece always ends with `</t>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubwordSequence {
    pub word: String,
    pub pieces: Vec<String>,
}

impl BpeModel {
    pub fn from_merges(merges: Vec<(String, String)>, alphabet: BTreeSet<String>) -> Self {
        let mut model = BpeModel {
            merges,
            alphabet,
            merge_counts: Vec::new(),
            ranks: HashMap::new(),
        };
        model.index();
        model
    }

    fn index(&mut self) {
        self.ranks.clear();
        for (rank, (l, r)) in self.merges.iter().enumerate() {
            self.ranks
                .entry(l.clone())
                .or_default()
                .entry(r.clone())
                .or_insert(rank);
        }
    }

    fn rank(&self, left: &str, right: &str) -> Option<usize> {
        self.ranks.get(left)?.get(right).copied()
    }

    /// Alphabet plus every symbol produced by a merge.
    pub fn vocabulary(&self) -> BTreeSet<String> {
        let mut vocab = self.alphabet.clone();
        vocab.extend(self.merges.iter().map(|(l, r)| format!("{l}{r}")));
        vocab
    }

    /// Segments one word. Characters outside the alphabet stay single pieces.
    pub fn encode(&self, word: &str) -> SubwordSequence {
        let mut symbols: Vec<String> = word.chars().map(String::from).collect();
        symbols.push(END_OF_WORD.to_string());
        // Applying the merges in training order, each one exhaustively, is
        // the same as repeatedly applying the lowest-ranked merge present
        // whose rank exceeds the last one applied.
        let mut last: Option<usize> = None;
        loop {
            let next = symbols
                .windows(2)
                .filter_map(|p| self.rank(&p[0], &p[1]))
                .filter(|&r| last.map_or(true, |l| r > l))
                .min();
            let Some(rank) = next else { break };
            let (left, right) = &self.merges[rank];
            symbols = merge_symbols(&symbols, left, right);
            last = Some(rank);
        }
        SubwordSequence {
            word: word.to_string(),
            pieces: symbols,
        }
    }

    /// Writes the merges file: a header line, then `left right` per merge.
    pub fn save_merges(&self) -> String {
        let mut out = String::new();
        out.push_str(MERGES_HEADER);
        out.push('\n');
        for (l, r) in &self.merges {
            let _ = writeln!(out, "{} {}", escape_symbol(l), escape_symbol(r));
        }
        out
    }

    /// Parses a merges file. The alphabet is rebuilt from the characters
    /// appearing in the merges.
    pub fn load_merges(text: &str, path: &str) -> Result<Self> {
        let mut lines = text.lines();
        let parse_err = |line: usize, reason: &str| Error::Parse {
            path: path.to_string(),
            line,
            reason: reason.to_string(),
        };
        if lines.next() != Some(MERGES_HEADER) {
            return Err(parse_err(1, "missing `#bpe-merges v1` header"));
        }
        let mut merges = Vec::new();
        let mut alphabet: BTreeSet<String> = [END_OF_WORD.to_string()].into();
        for (i, line) in lines.enumerate() {
            let line_no = i + 2;
            let (l, r) = line
                .split_once(' ')
                .ok_or_else(|| parse_err(line_no, "expected `left right`"))?;
            let l = unescape_symbol(l).ok_or_else(|| parse_err(line_no, "bad escape"))?;
            let r = unescape_symbol(r).ok_or_else(|| parse_err(line_no, "bad escape"))?;
            if l.is_empty() || r.is_empty() {
                return Err(parse_err(line_no, "empty symbol"));
            }
            for s in [&l, &r] {
                let stripped = s.strip_suffix(END_OF_WORD).unwrap_or(s);
                alphabet.extend(stripped.chars().map(String::from));
            }
            merges.push((l, r));
        }
        Ok(BpeModel::from_merges(merges, alphabet))
    }
}

fn merge_symbols(symbols: &[String], left: &str, right: &str) -> Vec<String> {
    let mut out = Vec::with_capacity(symbols.len());
    let mut i = 0;
    while i < symbols.len() {
        if i + 1 < symbols.len() && symbols[i] == left && symbols[i + 1] == right {
            out.push(format!("{left}{right}"));
            i += 2;
        } else {
            out.push(symbols[i].clone());
            i += 1;
        }
    }
    out
}

pub fn decode(seq: &SubwordSequence) -> Result<String> {
    let joined: String = seq.pieces.concat();
    match seq.pieces.last() {
        Some(last) if last.ends_with(END_OF_WORD) => {
            Ok(joined[..joined.len() - END_OF_WORD.len()].to_string())
        }
        _ => Err(Error::MissingEndMarker(seq.word.clone())),
    }
}

#[derive(Debug, PartialEq, Eq)]
struct Candidate {
    count: u64,
    left: String,
    right: String,
    pair: (u32, u32),
}

impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> Ordering {
        self.count
            .cmp(&other.count)
            .then_with(|| Reverse((&self.left, &self.right)).cmp(&Reverse((&other.left, &other.right))))
    }
}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Trainer {
    symbols: Vec<String>,
    ids: HashMap<String, u32>,
    words: Vec<(Vec<u32>, u64)>,
    pair_counts: HashMap<(u32, u32), u64>,
    occurrences: HashMap<(u32, u32), HashSet<usize>>,
    heap: BinaryHeap<Candidate>,
}

impl Trainer {
    fn intern(&mut self, s: &str) -> u32 {
        if let Some(&id) = self.ids.get(s) {
            return id;
        }
        let id = self.symbols.len() as u32;
        self.symbols.push(s.to_string());
        self.ids.insert(s.to_string(), id);
        id
    }

    fn push_candidate(&mut self, pair: (u32, u32)) {
        let count = self.pair_counts.get(&pair).copied().unwrap_or(0);
        if count > 0 {
            self.heap.push(Candidate {
                count,
                left: self.symbols[pair.0 as usize].clone(),
                right: self.symbols[pair.1 as usize].clone(),
                pair,
            });
        }
    }

    fn pop_best(&mut self) -> Option<Candidate> {
        while let Some(c) = self.heap.pop() {
            if self.pair_counts.get(&c.pair).copied() == Some(c.count) {
                return Some(c);
            }
        }
        None
    }

    fn apply_merge(&mut self, pair: (u32, u32), merged: u32) {
        let Some(word_ids) = self.occurrences.remove(&pair) else {
            return;
        };
        let mut word_ids: Vec<usize> = word_ids.into_iter().collect();
        word_ids.sort_unstable();
        let mut touched = HashSet::new();
        for wi in word_ids {
            let (old, freq) = (self.words[wi].0.clone(), self.words[wi].1);
            if !old.windows(2).any(|p| (p[0], p[1]) == pair) {
                continue;
            }
            for p in old.windows(2) {
                let key = (p[0], p[1]);
                let c = self.pair_counts.get_mut(&key).expect("pair counted");
                *c -= freq;
                touched.insert(key);
            }
            let mut new = Vec::with_capacity(old.len());
            let mut i = 0;
            while i < old.len() {
                if i + 1 < old.len() && (old[i], old[i + 1]) == pair {
                    new.push(merged);
                    i += 2;
                } else {
                    new.push(old[i]);
                    i += 1;
                }
            }
            for p in new.windows(2) {
                let key = (p[0], p[1]);
                *self.pair_counts.entry(key).or_insert(0) += freq;
                self.occurrences.entry(key).or_default().insert(wi);
                touched.insert(key);
            }
            self.words[wi].0 = new;
        }
        let mut touched: Vec<_> = touched.into_iter().collect();
        touched.sort_unstable();
        for key in touched {
            if self.pair_counts.get(&key) == Some(&0) {
                self.pair_counts.remove(&key);
            } else {
                self.push_candidate(key);
            }
        }
    }
}

/// Learns up to `n_merges` merges from word frequencies. Training stops early
/// when no adjacent pair occurs at least twice.
pub fn train(word_frequencies: &HashMap<String, u64>, n_merges: usize) -> BpeModel {
    let mut entries: Vec<(&String, &u64)> = word_frequencies.iter().filter(|(_, &c)| c > 0).collect();
    entries.sort();

    let mut trainer = Trainer {
        symbols: Vec::new(),
        ids: HashMap::new(),
        words: Vec::with_capacity(entries.len()),
        pair_counts: HashMap::new(),
        occurrences: HashMap::new(),
        heap: BinaryHeap::new(),
    };
    let mut alphabet = BTreeSet::new();
    alphabet.insert(END_OF_WORD.to_string());
    for (word, &freq) in &entries {
        let mut ids: Vec<u32> = Vec::with_capacity(word.len() + 1);
        for c in word.chars() {
            let s = c.to_string();
            ids.push(trainer.intern(&s));
            alphabet.insert(s);
        }
        ids.push(trainer.intern(END_OF_WORD));
        trainer.words.push((ids, freq));
    }

    // Initial pair counts: per-word maps reduced in parallel.
    let (counts, occurrences) = trainer
        .words
        .par_iter()
        .enumerate()
        .fold(
            || (HashMap::new(), HashMap::new()),
            |(mut counts, mut occ): (HashMap<(u32, u32), u64>, HashMap<(u32, u32), HashSet<usize>>),
             (wi, (ids, freq))| {
                for p in ids.windows(2) {
                    *counts.entry((p[0], p[1])).or_insert(0) += freq;
                    occ.entry((p[0], p[1])).or_insert_with(HashSet::new).insert(wi);
                }
                (counts, occ)
            },
        )
        .reduce(
            || (HashMap::new(), HashMap::new()),
            |(mut ca, mut oa), (cb, ob)| {
                for (k, v) in cb {
                    *ca.entry(k).or_insert(0) += v;
                }
                for (k, v) in ob {
                    oa.entry(k).or_insert_with(HashSet::new).extend(v);
                }
                (ca, oa)
            },
        );
    trainer.pair_counts = counts;
    trainer.occurrences = occurrences;
    let mut initial: Vec<(u32, u32)> = trainer.pair_counts.keys().copied().collect();
    initial.sort_unstable();
    for pair in initial {
        trainer.push_candidate(pair);
    }

    let mut merges = Vec::with_capacity(n_merges);
    let mut merge_counts = Vec::with_capacity(n_merges);
    while merges.len() < n_merges {
        let Some(best) = trainer.pop_best() else { break };
        if best.count < 2 {
            break;
        }
        let merged_text = format!("{}{}", best.left, best.right);
        let merged = trainer.intern(&merged_text);
        trainer.apply_merge(best.pair, merged);
        merge_counts.push(best.count);
        merges.push((best.left, best.right));
    }

    let mut model = BpeModel::from_merges(merges, alphabet);
    model.merge_counts = merge_counts;
    model
}

/// Subword frequencies after encoding every (word, count) pair.
pub fn vocab_of<'a, I>(model: &BpeModel, words: I) -> BTreeMap<String, u64>
where
    I: IntoIterator<Item = (&'a str, u64)>,
{
    let mut cache: HashMap<&str, Vec<String>> = HashMap::new();
    let mut vocab = BTreeMap::new();
    for (word, count) in words {
        let pieces = cache
            .entry(word)
            .or_insert_with(|| model.encode(word).pieces);
        for p in pieces.iter() {
            *vocab.entry(p.clone()).or_insert(0) += count;
        }
    }
    vocab
}

/// Fraction of subwords whose count is at least `min_count`.
pub fn coverage(vocab: &BTreeMap<String, u64>, min_count: u64) -> f64 {
    if vocab.is_empty() {
        return 0.0;
    }
    vocab.values().filter(|&&c| c >= min_count).count() as f64 / vocab.len() as f64
}

/// Vocabulary file: `subword<TAB>count`, by descending count then subword.
pub fn write_vocab(vocab: &BTreeMap<String, u64>) -> String {
    let mut rows: Vec<(&String, &u64)> = vocab.iter().collect();
    rows.sort_by(|a, b| b.1.cmp(a.1).then_with(|| a.0.cmp(b.0)));
    let mut out = String::new();
    for (s, c) in rows {
        let _ = writeln!(out, "{}\t{c}", escape_symbol(s));
    }
    out
}

/// Pieces in `vocab` that the model cannot produce (characters unseen in
/// training).
pub fn unknown_pieces<'v>(model: &BpeModel, vocab: &'v BTreeMap<String, u64>) -> Vec<&'v str> {
    let known = model.vocabulary();
    vocab
        .keys()
        .filter(|p| !known.contains(*p))
        .map(String::as_str)
        .collect()
}

/// Rewrites a corpus at subword granularity. Markers pass through unchanged;
/// each source word becomes its pieces, with a bare `</t>` piece emitted as a
/// marker.
pub fn encode_corpus(model: &BpeModel, words: &[CorpusWord], cache: &mut HashMap<String, Vec<String>>) -> Vec<CorpusWord> {
    let mut out = Vec::with_capacity(words.len() * 2);
    for w in words {
        if w.is_marker {
            out.push(w.clone());
            continue;
        }
        let pieces = cache
            .entry(w.text.clone())
            .or_insert_with(|| model.encode(&w.text).pieces);
        for p in pieces.iter() {
            if p == END_OF_WORD {
                out.push(CorpusWord::marker(END_OF_WORD));
            } else {
                out.push(CorpusWord {
                    text: p.clone(),
                    is_marker: false,
                    kind: w.kind,
                });
            }
        }
    }
    out
}

/// Inverse of [`encode_corpus`].
pub fn decode_corpus(words: &[CorpusWord]) -> Result<Vec<CorpusWord>> {
    let mut out = Vec::new();
    let mut current: Option<String> = None;
    for w in words {
        if w.is(END_OF_WORD) {
            out.push(CorpusWord::plain(current.take().unwrap_or_default()));
        } else if w.is_marker {
            if let Some(partial) = current {
                return Err(Error::MissingEndMarker(partial));
            }
            out.push(w.clone());
        } else if let Some(stripped) = w.text.strip_suffix(END_OF_WORD) {
            let mut text = current.take().unwrap_or_default();
            text.push_str(stripped);
            out.push(CorpusWord::plain(text));
        } else {
            current.get_or_insert_with(String::new).push_str(&w.text);
        }
    }
    if let Some(partial) = current {
        return Err(Error::MissingEndMarker(partial));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn freqs(pairs: &[(&str, u64)]) -> HashMap<String, u64> {
        pairs.iter().map(|&(w, c)| (w.to_string(), c)).collect()
    }

    fn pair(l: &str, r: &str) -> (String, String) {
        (l.to_string(), r.to_string())
    }

    #[test]
    fn first_merge_breaks_ties_lexicographically() {
        let model = train(&freqs(&[("ab", 2), ("ac", 1)]), 1);
        assert_eq!(model.merges, vec![pair("a", "b")]);
        assert_eq!(model.merge_counts, vec![2]);
    }

    #[test]
    fn zero_merges_is_character_segmentation() {
        let model = train(&freqs(&[("hello", 3), ("help", 2)]), 0);
        assert!(model.merges.is_empty());
        assert_eq!(model.encode("help").pieces, ["h", "e", "l", "p", "</t>"]);
    }

    #[test]
    fn empty_frequency_map() {
        let model = train(&HashMap::new(), 10);
        assert!(model.merges.is_empty());
        assert_eq!(model.alphabet.len(), 1);
    }

    #[test]
    fn early_stop_when_every_pair_is_unique() {
        let model = train(&freqs(&[("abc", 1)]), 10);
        assert!(model.merges.is_empty());
    }

    #[test]
    fn single_rule_encoding() {
        let model = BpeModel::from_merges(vec![pair("a", "b")], BTreeSet::new());
        assert_eq!(model.encode("abc").pieces, ["ab", "c", "</t>"]);
        let empty = BpeModel::default();
        assert_eq!(empty.encode("hi").pieces, ["h", "i", "</t>"]);
    }

    #[test]
    fn merges_apply_left_to_right() {
        let model = BpeModel::from_merges(vec![pair("a", "a")], BTreeSet::new());
        assert_eq!(model.encode("aaa").pieces, ["aa", "a", "</t>"]);
    }

    #[test]
    fn training_order_is_respected_with_duplicate_symbols() {
        // (abc, d) ranks before (a, bc), the merge that creates abc in this
        // word, so it must not fire afterwards.
        let merges = vec![pair("b", "c"), pair("abc", "d"), pair("a", "bc")];
        let model = BpeModel::from_merges(merges.clone(), BTreeSet::new());
        let mut sequential: Vec<String> = ["a", "b", "c", "d", END_OF_WORD]
            .iter()
            .map(|s| s.to_string())
            .collect();
        for (l, r) in &merges {
            sequential = merge_symbols(&sequential, l, r);
        }
        assert_eq!(sequential, ["abc", "d", "</t>"]);
        assert_eq!(model.encode("abcd").pieces, sequential);
    }

    #[test]
    fn decode_examples() {
        let seq = |p: &[&str]| SubwordSequence {
            word: "w".into(),
            pieces: p.iter().map(|s| s.to_string()).collect(),
        };
        assert_eq!(decode(&seq(&["ab", "c", "</t>"])).unwrap(), "abc");
        assert_eq!(decode(&seq(&["</t>"])).unwrap(), "");
        assert_eq!(decode(&seq(&["ab", "c</t>"])).unwrap(), "abc");
        assert!(matches!(decode(&seq(&["ab", "c"])), Err(Error::MissingEndMarker(_))));
        assert!(decode(&seq(&[])).is_err());
    }

    #[test]
    fn vocab_of_without_merges() {
        let model = train(&freqs(&[("ab", 2)]), 0);
        let vocab = vocab_of(&model, [("ab", 1), ("ab", 1)]);
        let expected: BTreeMap<String, u64> =
            [("a".into(), 2), ("b".into(), 2), ("</t>".into(), 2)].into();
        assert_eq!(vocab, expected);
    }

    #[test]
    fn coverage_hand_count() {
        // toy corpus: "low" x3, "lot" x1; one merge (l, o) count 4.
        let model = train(&freqs(&[("low", 3), ("lot", 1)]), 1);
        assert_eq!(model.merges, vec![pair("l", "o")]);
        let vocab = vocab_of(&model, [("low", 3), ("lot", 1)]);
        // lo:4 w:3 t:1 </t>:4 -> 3 of 4 subwords occur at least twice.
        assert_eq!(vocab["lo"], 4);
        assert_eq!(vocab["t"], 1);
        assert!((coverage(&vocab, 2) - 0.75).abs() < 1e-12);
        assert_eq!(coverage(&BTreeMap::new(), 2), 0.0);
    }

    #[test]
    fn vocab_file_ordering() {
        let vocab: BTreeMap<String, u64> =
            [("b".into(), 2), ("a".into(), 2), ("c d".into(), 5)].into();
        assert_eq!(write_vocab(&vocab), "c\\sd\t5\na\t2\nb\t2\n");
    }

    #[test]
    fn merges_file_round_trip() {
        let model = train(
            &freqs(&[("lower", 5), ("newest", 6), ("widest", 3), ("a b\\", 2)]),
            12,
        );
        let text = model.save_merges();
        assert!(text.starts_with("#bpe-merges v1\n"));
        let loaded = BpeModel::load_merges(&text, "m").unwrap();
        assert_eq!(loaded.merges, model.merges);
        assert_eq!(loaded.save_merges(), text);
        for w in ["lowest", "newer", "a b\\"] {
            assert_eq!(loaded.encode(w), model.encode(w));
        }
        assert!(BpeModel::load_merges("a b\n", "m").is_err());
        assert!(BpeModel::load_merges("#bpe-merges v1\nab\n", "m").is_err());
    }

    #[test]
    fn unknown_characters_stay_single() {
        let model = train(&freqs(&[("aa", 5)]), 5);
        let seq = model.encode("aaz");
        assert_eq!(seq.pieces[seq.pieces.len() - 2..], ["z", "</t>"]);
        let vocab = vocab_of(&model, [("aaz", 1)]);
        assert_eq!(unknown_pieces(&model, &vocab), vec!["z"]);
    }

    #[test]
    fn corpus_encode_decode() {
        let words = vec![
            CorpusWord::marker("<w>"),
            CorpusWord::plain("lower"),
            CorpusWord::plain("newest"),
            CorpusWord::marker("</w>"),
            CorpusWord::plain("x"),
        ];
        let model = train(&freqs(&[("lower", 5), ("newest", 6)]), 20);
        let encoded = encode_corpus(&model, &words, &mut HashMap::new());
        assert!(encoded.len() > words.len());
        assert_eq!(encoded[0], words[0]);
        assert_eq!(decode_corpus(&encoded).unwrap(), words);
    }

    proptest! {
        #[test]
        fn encode_decode_identity(word in "\\PC{0,16}", corpus in prop::collection::vec("[a-e]{1,6}", 1..20)) {
            let mut f = HashMap::new();
            for w in &corpus {
                *f.entry(w.clone()).or_insert(0) += 1;
            }
            let model = train(&f, 15);
            prop_assert_eq!(decode(&model.encode(&word)).unwrap(), word);
        }

        #[test]
        fn vocabulary_bound_and_determinism(corpus in prop::collection::vec(("[a-f]{1,7}", 1u64..5), 1..30), n in 0usize..25) {
            let f: HashMap<String, u64> = corpus.into_iter().collect();
            let model = train(&f, n);
            prop_assert!(model.vocabulary().len() <= model.alphabet.len() + n);
            prop_assert_eq!(train(&f, n).merges, model.merges);
        }

        #[test]
        fn more_merges_never_lengthen_segmentation(corpus in prop::collection::vec(("[a-d]{1,8}", 1u64..4), 1..25), n in 0usize..15, extra in 1usize..10) {
            let f: HashMap<String, u64> = corpus.into_iter().collect();
            let small = train(&f, n);
            let large = train(&f, n + extra);
            prop_assert_eq!(&large.merges[..small.merges.len()], &small.merges[..]);
            for w in f.keys() {
                prop_assert!(large.encode(w).pieces.len() <= small.encode(w).pieces.len());
            }
        }
    }
}
