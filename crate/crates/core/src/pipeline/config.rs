//! Modeling choices applied by [`super::apply`], and their flat `key = value`
//! text form.
//!
//! ```text
//! whitespace_policy = MergeRuns
//! comment_policy = Placeholder
//! string_policy = KeepAsWords
//! number_policy = KeepSmall(100)
//! nonenglish_policy = ReplaceTokenAndFilterFiles(0.006, 0.019)
//! split_policy = SplitCaseEncoded
//! min_frequency = NumberLiteral:5, Identifier:2
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lexer::TokenKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WhitespacePolicy {
    /// Every whitespace character becomes its own marker.
    #[default]
    KeepEach,
    /// Runs of one character collapse into a counted marker (`<tab3>`).
    MergeRuns,
    Drop,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TextPolicy {
    #[default]
    KeepAsWords,
    Placeholder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NumberPolicy {
    #[default]
    Keep,
    PlaceholderAll,
    /// Keep integer literals below the threshold, replace the rest.
    KeepSmall(u64),
    SplitDigits,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum NonEnglishPolicy {
    #[default]
    Keep,
    ReplaceToken,
    ReplaceTokenAndFilterFiles {
        code_threshold: f64,
        code_and_strings_threshold: f64,
    },
}

impl NonEnglishPolicy {
    pub const DEFAULT_CODE_THRESHOLD: f64 = 0.006;
    pub const DEFAULT_CODE_AND_STRINGS_THRESHOLD: f64 = 0.019;

    pub fn filter_files() -> Self {
        NonEnglishPolicy::ReplaceTokenAndFilterFiles {
            code_threshold: Self::DEFAULT_CODE_THRESHOLD,
            code_and_strings_threshold: Self::DEFAULT_CODE_AND_STRINGS_THRESHOLD,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SplitPolicy {
    #[default]
    Unsplit,
    SplitCaseEncoded,
    SplitKeepCase,
}

/// The full set of vocabulary modeling choices. The default is lossless.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PipelineConfig {
    pub whitespace_policy: WhitespacePolicy,
    pub comment_policy: TextPolicy,
    pub string_policy: TextPolicy,
    pub number_policy: NumberPolicy,
    pub nonenglish_policy: NonEnglishPolicy,
    pub split_policy: SplitPolicy,
    /// Minimum training frequency per token kind; kinds not listed use 1.
    pub min_frequency: BTreeMap<TokenKind, u64>,
}

pub const KEYS: [&str; 7] = [
    "whitespace_policy",
    "comment_policy",
    "string_policy",
    "number_policy",
    "nonenglish_policy",
    "split_policy",
    "min_frequency",
];

impl PipelineConfig {
    pub fn needs_frequency_filter(&self) -> bool {
        self.min_frequency.values().any(|&k| k > 1)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let ws = match self.whitespace_policy {
            WhitespacePolicy::KeepEach => "KeepEach",
            WhitespacePolicy::MergeRuns => "MergeRuns",
            WhitespacePolicy::Drop => "Drop",
        };
        let text = |p: TextPolicy| match p {
            TextPolicy::KeepAsWords => "KeepAsWords",
            TextPolicy::Placeholder => "Placeholder",
        };
        let number = match self.number_policy {
            NumberPolicy::Keep => "Keep".to_string(),
            NumberPolicy::PlaceholderAll => "PlaceholderAll".to_string(),
            NumberPolicy::KeepSmall(t) => format!("KeepSmall({t})"),
            NumberPolicy::SplitDigits => "SplitDigits".to_string(),
        };
        let nonenglish = match self.nonenglish_policy {
            NonEnglishPolicy::Keep => "Keep".to_string(),
            NonEnglishPolicy::ReplaceToken => "ReplaceToken".to_string(),
            NonEnglishPolicy::ReplaceTokenAndFilterFiles {
                code_threshold,
                code_and_strings_threshold,
            } => format!(
                "ReplaceTokenAndFilterFiles({code_threshold}, {code_and_strings_threshold})"
            ),
        };
        let split = match self.split_policy {
            SplitPolicy::Unsplit => "Unsplit",
            SplitPolicy::SplitCaseEncoded => "SplitCaseEncoded",
            SplitPolicy::SplitKeepCase => "SplitKeepCase",
        };
        let min_frequency = self
            .min_frequency
            .iter()
            .map(|(kind, k)| format!("{kind}:{k}"))
            .collect::<Vec<_>>()
            .join(", ");
        let _ = writeln!(out, "whitespace_policy = {ws}");
        let _ = writeln!(out, "comment_policy = {}", text(self.comment_policy));
        let _ = writeln!(out, "string_policy = {}", text(self.string_policy));
        let _ = writeln!(out, "number_policy = {number}");
        let _ = writeln!(out, "nonenglish_policy = {nonenglish}");
        let _ = writeln!(out, "split_policy = {split}");
        let _ = writeln!(out, "min_frequency = {min_frequency}");
        out
    }

    /// Parses the `key = value` form. Missing keys keep their default; blank
    /// lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut config = PipelineConfig::default();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::config(line, "expected `key = value`"))?;
            let key = key.trim();
            let value = value.trim();
            let bad = |reason: &str| Error::config(key, format!("{reason}, got `{value}`"));
            match key {
                "whitespace_policy" => {
                    config.whitespace_policy = match value {
                        "KeepEach" => WhitespacePolicy::KeepEach,
                        "MergeRuns" => WhitespacePolicy::MergeRuns,
                        "Drop" => WhitespacePolicy::Drop,
                        _ => return Err(bad("expected KeepEach, MergeRuns or Drop")),
                    }
                }
                "comment_policy" | "string_policy" => {
                    let policy = match value {
                        "KeepAsWords" => TextPolicy::KeepAsWords,
                        "Placeholder" => TextPolicy::Placeholder,
                        _ => return Err(bad("expected KeepAsWords or Placeholder")),
                    };
                    if key == "comment_policy" {
                        config.comment_policy = policy;
                    } else {
                        config.string_policy = policy;
                    }
                }
                "number_policy" => {
                    config.number_policy = match call(value) {
                        ("Keep", None) => NumberPolicy::Keep,
                        ("PlaceholderAll", None) => NumberPolicy::PlaceholderAll,
                        ("SplitDigits", None) => NumberPolicy::SplitDigits,
                        ("KeepSmall", None) => NumberPolicy::KeepSmall(100),
                        ("KeepSmall", Some(args)) => NumberPolicy::KeepSmall(
                            args.trim()
                                .parse()
                                .map_err(|_| bad("KeepSmall threshold must be an integer"))?,
                        ),
                        _ => {
                            return Err(bad(
                                "expected Keep, PlaceholderAll, KeepSmall(n) or SplitDigits",
                            ))
                        }
                    }
                }
                "nonenglish_policy" => {
                    config.nonenglish_policy = match call(value) {
                        ("Keep", None) => NonEnglishPolicy::Keep,
                        ("ReplaceToken", None) => NonEnglishPolicy::ReplaceToken,
                        ("ReplaceTokenAndFilterFiles", None) => NonEnglishPolicy::filter_files(),
                        ("ReplaceTokenAndFilterFiles", Some(args)) => {
                            let parts: Vec<f64> = args
                                .split(',')
                                .map(|a| a.trim().parse::<f64>())
                                .collect::<std::result::Result<_, _>>()
                                .map_err(|_| bad("thresholds must be numbers"))?;
                            let [code, code_and_strings] = parts[..] else {
                                return Err(bad("expected two thresholds"));
                            };
                            if !(0.0..=1.0).contains(&code)
                                || !(0.0..=1.0).contains(&code_and_strings)
                            {
                                return Err(bad("thresholds must be fractions in [0, 1]"));
                            }
                            NonEnglishPolicy::ReplaceTokenAndFilterFiles {
                                code_threshold: code,
                                code_and_strings_threshold: code_and_strings,
                            }
                        }
                        _ => {
                            return Err(bad(
                                "expected Keep, ReplaceToken or ReplaceTokenAndFilterFiles(a, b)",
                            ))
                        }
                    }
                }
                "split_policy" => {
                    config.split_policy = match value {
                        "Unsplit" => SplitPolicy::Unsplit,
                        "SplitCaseEncoded" => SplitPolicy::SplitCaseEncoded,
                        "SplitKeepCase" => SplitPolicy::SplitKeepCase,
                        _ => return Err(bad("expected Unsplit, SplitCaseEncoded or SplitKeepCase")),
                    }
                }
                "min_frequency" => {
                    config.min_frequency.clear();
                    for entry in value.split(',').map(str::trim).filter(|e| !e.is_empty()) {
                        let (kind, k) = entry
                            .split_once(':')
                            .ok_or_else(|| bad("expected Kind:count entries"))?;
                        let kind = TokenKind::parse(kind.trim())
                            .ok_or_else(|| bad("unknown token kind"))?;
                        let k: u64 = k
                            .trim()
                            .parse()
                            .map_err(|_| bad("minimum frequency must be an integer"))?;
                        if k == 0 {
                            return Err(bad("minimum frequency must be at least 1"));
                        }
                        config.min_frequency.insert(kind, k);
                    }
                }
                _ => return Err(Error::config(key, "unknown key")),
            }
        }
        Ok(config)
    }
}

/// Splits `Name(args)` into its name and argument text.
fn call(value: &str) -> (&str, Option<&str>) {
    match value.split_once('(') {
        Some((name, rest)) => match rest.strip_suffix(')') {
            Some(args) => (name.trim(), Some(args)),
            None => (value, None),
        },
        None => (value, None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_round_trips() {
        let c = PipelineConfig::default();
        assert_eq!(PipelineConfig::parse(&c.to_text()).unwrap(), c);
    }

    #[test]
    fn every_key_is_written() {
        let text = PipelineConfig::default().to_text();
        for key in KEYS {
            assert!(text.contains(&format!("{key} = ")), "{key}");
        }
    }

    #[test]
    fn full_config_round_trips() {
        let c = PipelineConfig {
            whitespace_policy: WhitespacePolicy::MergeRuns,
            comment_policy: TextPolicy::Placeholder,
            string_policy: TextPolicy::Placeholder,
            number_policy: NumberPolicy::KeepSmall(50),
            nonenglish_policy: NonEnglishPolicy::filter_files(),
            split_policy: SplitPolicy::SplitCaseEncoded,
            min_frequency: [(TokenKind::NumberLiteral, 5), (TokenKind::Identifier, 2)]
                .into_iter()
                .collect(),
        };
        let text = c.to_text();
        assert!(text.contains("nonenglish_policy = ReplaceTokenAndFilterFiles(0.006, 0.019)"));
        assert_eq!(PipelineConfig::parse(&text).unwrap(), c);
    }

    #[test]
    fn partial_config_with_comments() {
        let c = PipelineConfig::parse("# x\n\nsplit_policy = SplitKeepCase\nnumber_policy = KeepSmall\n")
            .unwrap();
        assert_eq!(c.split_policy, SplitPolicy::SplitKeepCase);
        assert_eq!(c.number_policy, NumberPolicy::KeepSmall(100));
        assert_eq!(c.whitespace_policy, WhitespacePolicy::KeepEach);
    }

    #[test]
    fn errors_name_the_key() {
        for (text, key) in [
            ("colour = red", "colour"),
            ("split_policy = Sideways", "split_policy"),
            ("number_policy = KeepSmall(x)", "number_policy"),
            ("min_frequency = Banana:3", "min_frequency"),
            ("min_frequency = Identifier:0", "min_frequency"),
            ("nonenglish_policy = ReplaceTokenAndFilterFiles(0.1)", "nonenglish_policy"),
        ] {
            match PipelineConfig::parse(text) {
                Err(Error::Config { key: got, .. }) => assert_eq!(got, key),
                other => panic!("{text}: {other:?}"),
            }
        }
    }
}
