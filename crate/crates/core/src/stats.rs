//! Vocabulary statistics over processed corpora.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pipeline::words::{for_each_encoded_word, looks_like_marker};

/// Word frequency table. Keys are words in corpus-file encoding, so markers
/// (unescaped `<...>`) and source words never collide.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VocabStats {
    pub frequency: HashMap<String, u64>,
    pub vocab_size: usize,
    pub total_tokens: u64,
}

impl VocabStats {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, encoded_word: &str) {
        self.add_count(encoded_word, 1);
    }

    pub fn add_count(&mut self, encoded_word: &str, count: u64) {
        match self.frequency.get_mut(encoded_word) {
            Some(c) => *c += count,
            None => {
                self.frequency.insert(encoded_word.to_string(), count);
                self.vocab_size += 1;
            }
        }
        self.total_tokens += count;
    }

    /// Adds every word of one corpus file.
    pub fn add_corpus_text(&mut self, text: &str, file: &str) -> Result<()> {
        for_each_encoded_word(text, file, |w| self.add(w))
    }

    /// Monoidal merge: stats of two disjoint shards combine into the stats of
    /// their concatenation.
    pub fn merge(mut self, other: VocabStats) -> VocabStats {
        if self.frequency.len() < other.frequency.len() {
            return other.merge(self);
        }
        for (w, c) in other.frequency {
            self.add_count(&w, c);
        }
        self
    }

    pub fn is_marker(encoded_word: &str) -> bool {
        looks_like_marker(encoded_word)
    }

    pub fn marker_types(&self) -> usize {
        self.frequency.keys().filter(|w| Self::is_marker(w)).count()
    }

    pub fn marker_tokens(&self) -> u64 {
        self.frequency
            .iter()
            .filter(|(w, _)| Self::is_marker(w))
            .map(|(_, c)| c)
            .sum()
    }

    /// Vocabulary size, optionally leaving out markers. Markers always count
    /// toward token totals.
    pub fn vocab(&self, include_markers: bool) -> usize {
        if include_markers {
            self.vocab_size
        } else {
            self.vocab_size - self.marker_types()
        }
    }
}

/// Builds stats from corpus file contents: `(name, text)` pairs.
pub fn build_stats<'a, I>(files: I) -> Result<VocabStats>
where
    I: IntoIterator<Item = (&'a str, &'a str)>,
{
    let mut stats = VocabStats::new();
    for (name, text) in files {
        stats.add_corpus_text(text, name)?;
    }
    Ok(stats)
}

/// Smallest frequency threshold `k` that leaves at most `target_vocab` words
/// with count `>= k`, and the fraction of tokens that fall below it.
pub fn oov_threshold(stats: &VocabStats, target_vocab: usize) -> Result<(u64, f64)> {
    if target_vocab == 0 {
        return Err(Error::InvalidArgument("target vocabulary must be at least 1".into()));
    }
    if stats.frequency.len() <= target_vocab {
        return Ok((1, 0.0));
    }
    let mut counts: Vec<u64> = stats.frequency.values().copied().collect();
    counts.sort_unstable_by(|a, b| b.cmp(a));
    // Everything tied with the first word past the target must go.
    let k = counts[target_vocab] + 1;
    let oov: u64 = counts.iter().filter(|&&c| c < k).sum();
    let fraction = if stats.total_tokens == 0 {
        0.0
    } else {
        oov as f64 / stats.total_tokens as f64
    };
    Ok((k, fraction))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthCurve {
    pub samples: Vec<(usize, usize)>,
    pub order_seed: u64,
}

impl GrowthCurve {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n_projects,vocab\n");
        for (n, v) in &self.samples {
            let _ = writeln!(out, "{n},{v}");
        }
        out
    }
}

/// Number of projects to include for each sample fraction.
pub fn sample_sizes(n_projects: usize, fractions: &[f64]) -> Result<Vec<usize>> {
    fractions
        .iter()
        .map(|&f| {
            if !(f > 0.0 && f <= 1.0) {
                return Err(Error::InvalidArgument(format!(
                    "sample point {f} is outside (0, 1]"
                )));
            }
            Ok(((f * n_projects as f64).ceil() as usize).clamp(1.min(n_projects), n_projects))
        })
        .collect()
}

/// Seeded permutation of `0..n`.
pub fn shuffled_order(n: usize, seed: u64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    order
}

/// Cumulative distinct-word counts as projects are added in a seeded random
/// order. Each project is given as the set of words it uses.
pub fn growth_curve(
    projects: &[HashSet<String>],
    sample_points: &[f64],
    seed: u64,
) -> Result<GrowthCurve> {
    let sizes = sample_sizes(projects.len(), sample_points)?;
    let order = shuffled_order(projects.len(), seed);
    let mut prefix_vocab = Vec::with_capacity(projects.len() + 1);
    prefix_vocab.push(0);
    let mut seen: HashSet<&str> = HashSet::new();
    for &p in &order {
        seen.extend(projects[p].iter().map(String::as_str));
        prefix_vocab.push(seen.len());
    }
    Ok(GrowthCurve {
        samples: sizes.into_iter().map(|n| (n, prefix_vocab[n])).collect(),
        order_seed: seed,
    })
}

/// One row of a configuration comparison table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub config: String,
    pub vocab: usize,
    pub vocab_ratio: f64,
    pub tokens: u64,
    pub tokens_ratio: f64,
    pub k_100k: u64,
    pub oov_pct: f64,
}

pub const REPORT_HEADER: &str = "config,vocab,vocab_ratio,tokens,tokens_ratio,k_100k,oov_pct";

impl ReportRow {
    /// Row for `stats` on its own (ratios of 1 against itself).
    pub fn for_stats(config: &str, stats: &VocabStats, include_markers: bool) -> Result<Self> {
        let (k, oov) = oov_threshold(stats, 100_000)?;
        Ok(ReportRow {
            config: config.to_string(),
            vocab: stats.vocab(include_markers),
            vocab_ratio: 1.0,
            tokens: stats.total_tokens,
            tokens_ratio: 1.0,
            k_100k: k,
            oov_pct: oov * 100.0,
        })
    }

    pub fn to_csv_line(&self) -> String {
        format!(
            "{},{},{:.2},{},{:.2},{},{:.2}",
            self.config,
            self.vocab,
            self.vocab_ratio,
            self.tokens,
            self.tokens_ratio,
            self.k_100k,
            self.oov_pct
        )
    }
}

/// Ratios of `variant` to `baseline` for vocabulary and token counts.
pub fn compare_configs(
    name: &str,
    baseline: &VocabStats,
    variant: &VocabStats,
    include_markers: bool,
) -> Result<ReportRow> {
    if baseline.total_tokens == 0 {
        return Err(Error::InvalidArgument("baseline has zero tokens".into()));
    }
    let mut row = ReportRow::for_stats(name, variant, include_markers)?;
    let base_vocab = baseline.vocab(include_markers);
    row.vocab_ratio = if base_vocab == 0 {
        0.0
    } else {
        row.vocab as f64 / base_vocab as f64
    };
    row.tokens_ratio = variant.total_tokens as f64 / baseline.total_tokens as f64;
    Ok(row)
}

pub fn report_csv(rows: &[ReportRow]) -> String {
    let mut out = String::from(REPORT_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.to_csv_line());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn stats_of(counts: &[(&str, u64)]) -> VocabStats {
        let mut s = VocabStats::new();
        for &(w, c) in counts {
            s.add_count(w, c);
        }
        s
    }

    /// Exhaustive scan over every candidate threshold.
    fn scan_threshold(stats: &VocabStats, target: usize) -> (u64, f64) {
        let max = stats.frequency.values().copied().max().unwrap_or(0);
        for k in 1..=max + 1 {
            let kept = stats.frequency.values().filter(|&&c| c >= k).count();
            if kept <= target {
                let oov: u64 = stats.frequency.values().filter(|&&c| c < k).sum();
                let frac = if stats.total_tokens == 0 {
                    0.0
                } else {
                    oov as f64 / stats.total_tokens as f64
                };
                return (k, frac);
            }
        }
        unreachable!("k = max + 1 keeps nothing")
    }

    #[test]
    fn small_corpus_counts() {
        let s = build_stats([("f", "a b a\n")]).unwrap();
        assert_eq!(s.vocab_size, 2);
        assert_eq!(s.total_tokens, 3);
    }

    #[test]
    fn malformed_escape_reports_location() {
        let err = build_stats([("good", "a\n"), ("bad.tok", "a\nb \\q\n")]).unwrap_err();
        assert_eq!(err.to_string(), "bad.tok:2: malformed escape in corpus word `\\q`");
    }

    #[test]
    fn markers_reported_separately() {
        let s = build_stats([("f", "<w> a b </w> \\<w> <nl>\n")]).unwrap();
        assert_eq!(s.vocab(true), 6);
        assert_eq!(s.vocab(false), 3);
        assert_eq!(s.marker_types(), 3);
        assert_eq!(s.total_tokens, 6);
        assert_eq!(s.marker_tokens(), 3);
    }

    #[test]
    fn worked_threshold_example() {
        let s = stats_of(&[("a", 10), ("b", 5), ("c", 5), ("d", 1)]);
        let (k, oov) = oov_threshold(&s, 2).unwrap();
        assert_eq!(k, 6);
        assert!((oov - 11.0 / 21.0).abs() < 1e-12);
        assert_eq!((k, oov), scan_threshold(&s, 2));
    }

    #[test]
    fn threshold_below_target() {
        let s = stats_of(&[("a", 10), ("b", 5)]);
        assert_eq!(oov_threshold(&s, 100_000).unwrap(), (1, 0.0));
        assert!(oov_threshold(&s, 0).is_err());
    }

    #[test]
    fn growth_single_and_duplicated_projects() {
        let p: HashSet<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let curve = growth_curve(std::slice::from_ref(&p), &[1.0], 7).unwrap();
        assert_eq!(curve.samples, vec![(1, 3)]);
        let copies = vec![p.clone(), p.clone(), p.clone(), p];
        let curve = growth_curve(&copies, &[0.25, 0.5, 0.75, 1.0], 7).unwrap();
        assert!(curve.samples.iter().all(|&(_, v)| v == 3));
        assert!(growth_curve(&copies, &[0.0], 7).is_err());
        assert!(growth_curve(&copies, &[1.5], 7).is_err());
    }

    #[test]
    fn compare_identical_and_fixture_pair() {
        let base = stats_of(&[("a", 4), ("b", 4), ("c", 2)]);
        let row = compare_configs("same", &base, &base, true).unwrap();
        assert_eq!(row.to_csv_line(), "same,3,1.00,10,1.00,1,0.00");
        // 2 / 3 = 0.67 and 18 / 10 = 1.80
        let variant = stats_of(&[("x", 9), ("y", 9)]);
        let row = compare_configs("v", &base, &variant, true).unwrap();
        assert_eq!(row.to_csv_line(), "v,2,0.67,18,1.80,1,0.00");
        assert!(compare_configs("z", &VocabStats::new(), &variant, true).is_err());
    }

    proptest! {
        #[test]
        fn threshold_matches_exhaustive_scan(
            counts in prop::collection::vec(1u64..50, 1..60),
            target in 1usize..40,
        ) {
            let mut s = VocabStats::new();
            for (i, c) in counts.iter().enumerate() {
                s.add_count(&format!("w{i}"), *c);
            }
            let (k, oov) = oov_threshold(&s, target).unwrap();
            let (k2, oov2) = scan_threshold(&s, target);
            prop_assert_eq!(k, k2);
            prop_assert!((oov - oov2).abs() < 1e-12);
        }

        #[test]
        fn merge_is_commutative_and_associative(
            a in prop::collection::vec("[a-e]{1,2}", 0..20),
            b in prop::collection::vec("[a-e]{1,2}", 0..20),
            c in prop::collection::vec("[a-e]{1,2}", 0..20),
        ) {
            let mk = |ws: &Vec<String>| {
                let mut s = VocabStats::new();
                ws.iter().for_each(|w| s.add(w));
                s
            };
            let (sa, sb, sc) = (mk(&a), mk(&b), mk(&c));
            prop_assert_eq!(sa.clone().merge(sb.clone()), sb.clone().merge(sa.clone()));
            prop_assert_eq!(
                sa.clone().merge(sb.clone()).merge(sc.clone()),
                sa.clone().merge(sb.clone().merge(sc.clone()))
            );
            let all: Vec<String> = a.iter().chain(&b).cloned().collect();
            prop_assert_eq!(sa.merge(sb), mk(&all));
        }

        #[test]
        fn growth_is_monotone(
            projects in prop::collection::vec(prop::collection::hash_set("[a-h]{1,2}", 0..10), 1..15),
            seed in any::<u64>(),
        ) {
            let curve = growth_curve(&projects, &[0.1, 0.3, 0.5, 0.7, 1.0], seed).unwrap();
            prop_assert!(curve.samples.windows(2).all(|w| w[0].1 <= w[1].1));
        }
    }
}
