//! The incremental BPE trainer against a reference that recounts every pair
//! from scratch before each merge.

use std::collections::{BTreeMap, HashMap};

use codevocab::bpe;
use proptest::prelude::*;

const END: &str = "</t>";

fn symbols(word: &str) -> Vec<String> {
    let mut s: Vec<String> = word.chars().map(String::from).collect();
    s.push(END.to_string());
    s
}

fn pair_counts(corpus: &[(Vec<String>, u64)]) -> BTreeMap<(String, String), u64> {
    let mut counts = BTreeMap::new();
    for (seq, freq) in corpus {
        for w in seq.windows(2) {
            *counts.entry((w[0].clone(), w[1].clone())).or_insert(0) += freq;
        }
    }
    counts
}

fn merge_seq(seq: &[String], left: &str, right: &str) -> Vec<String> {
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

/// Returns the merges and the count of each merged pair at the time it was
/// chosen.
fn naive_train(freq: &HashMap<String, u64>, n: usize) -> Vec<((String, String), u64)> {
    let mut corpus: Vec<(Vec<String>, u64)> = freq.iter().map(|(w, &c)| (symbols(w), c)).collect();
    let mut merges = Vec::new();
    for _ in 0..n {
        let counts = pair_counts(&corpus);
        // BTreeMap order gives the lexicographically smallest pair among ties.
        let Some((pair, best)) = counts
            .iter()
            .fold(None::<(&(String, String), u64)>, |acc, (p, &c)| match acc {
                Some((_, b)) if b >= c => acc,
                _ => Some((p, c)),
            })
        else {
            break;
        };
        if best < 2 {
            break;
        }
        let pair = pair.clone();
        for (seq, _) in corpus.iter_mut() {
            *seq = merge_seq(seq, &pair.0, &pair.1);
        }
        merges.push((pair, best));
    }
    merges
}

fn corpus_strategy() -> impl Strategy<Value = HashMap<String, u64>> {
    prop::collection::hash_map("[a-e]{1,8}", 1u64..6, 1..50)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn merges_match_full_recount(freq in corpus_strategy(), n in 0usize..30) {
        let model = bpe::train(&freq, n);
        let expected = naive_train(&freq, n);
        let got: Vec<((String, String), u64)> = model
            .merges
            .iter()
            .cloned()
            .zip(model.merge_counts.iter().copied())
            .collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn replaying_merges_reproduces_recorded_counts(freq in corpus_strategy(), n in 1usize..20) {
        let model = bpe::train(&freq, n);
        let mut corpus: Vec<(Vec<String>, u64)> = freq.iter().map(|(w, &c)| (symbols(w), c)).collect();
        for ((left, right), &recorded) in model.merges.iter().zip(&model.merge_counts) {
            let counts = pair_counts(&corpus);
            prop_assert_eq!(counts.get(&(left.clone(), right.clone())).copied(), Some(recorded));
            for (seq, _) in corpus.iter_mut() {
                *seq = merge_seq(seq, left, right);
            }
        }
    }

    #[test]
    fn encoding_training_words_matches_replayed_segmentation(freq in corpus_strategy(), n in 0usize..25) {
        let model = bpe::train(&freq, n);
        for word in freq.keys() {
            let mut seq = symbols(word);
            for (left, right) in &model.merges {
                seq = merge_seq(&seq, left, right);
            }
            prop_assert_eq!(&model.encode(word).pieces, &seq);
        }
    }
}

#[test]
fn worked_tie_break() {
    let freq: HashMap<String, u64> = [("ab".to_string(), 2), ("ac".to_string(), 1)].into();
    let model = bpe::train(&freq, 1);
    assert_eq!(model.merges, vec![("a".to_string(), "b".to_string())]);
    assert_eq!(naive_train(&freq, 1)[0].0, ("a".to_string(), "b".to_string()));
}
