//! Applies vocabulary modeling choices to a lexed file, producing the flat
//! word sequence written to the corpus.
//!
//! Policies run in a fixed order: the file-level non-English filter sees the
//! raw tokens, then comments and strings, token-level non-English
//! replacement, numbers, whitespace and finally identifier splitting. The
//! non-English replacement is applied to subtokens when identifiers are
//! split.
//!
//! Comments and strings kept as words become a `<w> ... </w>` group: the
//! opening delimiter, the whitespace-separated body words and the closing
//! delimiter. A single space between two body words is implicit; any other
//! whitespace inside the literal is spelled out with whitespace markers, so
//! the default configuration can be decoded back to the exact source text
//! with [`reconstruct`].

mod config;
mod identifier;
pub mod words;

use std::collections::{BTreeMap, HashMap};

pub use config::{
    NonEnglishPolicy, NumberPolicy, PipelineConfig, SplitPolicy, TextPolicy, WhitespacePolicy,
    KEYS as CONFIG_KEYS,
};
pub use identifier::{split_identifier, unsplit_identifier};
pub use words::CorpusWord;

use crate::error::{Error, Result};
use crate::lexer::{Token, TokenKind};
use words::*;

/// Outcome of running the pipeline on one file.
#[derive(Debug, Clone, PartialEq)]
pub enum Processed {
    Words(Vec<CorpusWord>),
    /// Dropped by the file-level non-English filter.
    Filtered {
        code_ratio: f64,
        code_and_strings_ratio: f64,
    },
}

impl Processed {
    pub fn words(&self) -> Option<&[CorpusWord]> {
        match self {
            Processed::Words(w) => Some(w),
            Processed::Filtered { .. } => None,
        }
    }
}

/// A word is considered non-English when it contains any non-ASCII character.
pub fn is_nonenglish(word: &str) -> bool {
    !word.is_ascii()
}

/// Fractions of non-English identifiers, and of non-English words among
/// identifiers plus string-literal words.
pub fn file_nonenglish_ratio(tokens: &[Token<'_>]) -> (f64, f64) {
    let mut identifiers = 0usize;
    let mut identifiers_nonen = 0usize;
    let mut string_words = 0usize;
    let mut string_words_nonen = 0usize;
    for t in tokens {
        match t.kind {
            TokenKind::Identifier => {
                identifiers += 1;
                identifiers_nonen += usize::from(is_nonenglish(t.text));
            }
            TokenKind::StringLiteral => {
                let (_, body, _) = literal_parts(t.text, t.kind);
                for w in body.split(is_ws).filter(|w| !w.is_empty()) {
                    string_words += 1;
                    string_words_nonen += usize::from(is_nonenglish(w));
                }
            }
            _ => {}
        }
    }
    let ratio = |num: usize, den: usize| if den == 0 { 0.0 } else { num as f64 / den as f64 };
    (
        ratio(identifiers_nonen, identifiers),
        ratio(identifiers_nonen + string_words_nonen, identifiers + string_words),
    )
}

/// One word per character of a numeric literal, wrapped when longer than one.
pub fn split_number(literal: &str) -> Vec<CorpusWord> {
    let mut chars: Vec<CorpusWord> = literal
        .chars()
        .map(|c| CorpusWord::source(c.to_string(), TokenKind::NumberLiteral))
        .collect();
    if chars.len() > 1 {
        chars.insert(0, CorpusWord::marker(WORD_START));
        chars.push(CorpusWord::marker(WORD_END));
    }
    chars
}

/// Integer value of a literal, if it is an integer literal at all.
fn integer_value(literal: &str) -> Option<u128> {
    let digits: String = literal.chars().filter(|&c| c != '_').collect();
    let digits = digits
        .strip_suffix(['l', 'L'])
        .unwrap_or(&digits)
        .to_string();
    let (radix, body) = if let Some(rest) = digits.strip_prefix("0x").or(digits.strip_prefix("0X"))
    {
        (16, rest)
    } else if let Some(rest) = digits.strip_prefix("0b").or(digits.strip_prefix("0B")) {
        (2, rest)
    } else if digits.len() > 1 && digits.starts_with('0') {
        (8, &digits[1..])
    } else {
        (10, digits.as_str())
    };
    if body.is_empty() {
        return None;
    }
    u128::from_str_radix(body, radix).ok()
}

fn is_ws(c: char) -> bool {
    matches!(c, ' ' | '\t' | '\n' | '\r' | '\x0c')
}

fn whitespace_name(c: char) -> &'static str {
    match c {
        ' ' => "sp",
        '\t' => "tab",
        '\n' => "nl",
        '\r' => "cr",
        _ => "ff",
    }
}

fn encode_whitespace(text: &str, policy: WhitespacePolicy, out: &mut Vec<CorpusWord>) {
    if policy == WhitespacePolicy::Drop {
        return;
    }
    let chars: Vec<char> = text.chars().collect();
    for run in chars.chunk_by(|a, b| a == b) {
        let name = whitespace_name(run[0]);
        match policy {
            WhitespacePolicy::KeepEach => {
                let marker = format!("<{name}>");
                out.extend(std::iter::repeat_with(|| CorpusWord::marker(&marker)).take(run.len()));
            }
            WhitespacePolicy::MergeRuns => {
                let marker = match run.len() {
                    1 => format!("<{name}>"),
                    n @ 2..=7 => format!("<{name}{n}>"),
                    _ => format!("<{name}8+>"),
                };
                out.push(CorpusWord::marker(&marker));
            }
            WhitespacePolicy::Drop => unreachable!(),
        }
    }
}

/// Whitespace text of a whitespace marker, `None` for other words or for the
/// lossy `<x8+>` form.
fn decode_whitespace(marker: &str) -> Option<String> {
    let inner = marker.strip_prefix('<')?.strip_suffix('>')?;
    let (c, count) = [("sp", ' '), ("tab", '\t'), ("nl", '\n'), ("cr", '\r'), ("ff", '\x0c')]
        .into_iter()
        .find_map(|(name, c)| {
            let rest = inner.strip_prefix(name)?;
            if rest.is_empty() {
                Some((c, 1))
            } else {
                let n: usize = rest.parse().ok()?;
                (2..=7).contains(&n).then_some((c, n))
            }
        })?;
    Some(std::iter::repeat(c).take(count).collect())
}

/// Opening delimiter, body and closing delimiter (empty when unterminated).
fn literal_parts(text: &str, kind: TokenKind) -> (&str, &str, &str) {
    match kind {
        TokenKind::Comment if text.starts_with("//") => ("//", &text[2..], ""),
        TokenKind::Comment => {
            if text.len() >= 4 && text.ends_with("*/") {
                ("/*", &text[2..text.len() - 2], "*/")
            } else {
                ("/*", &text[2..], "")
            }
        }
        _ => {
            if string_terminated(text) {
                ("\"", &text[1..text.len() - 1], "\"")
            } else {
                ("\"", &text[1..], "")
            }
        }
    }
}

fn string_terminated(text: &str) -> bool {
    let mut chars = text.char_indices().skip(1);
    while let Some((i, c)) = chars.next() {
        match c {
            '\\' => {
                chars.next();
            }
            '"' => return i + 1 == text.len(),
            _ => {}
        }
    }
    false
}

fn closer_for(opener: &str) -> Option<&'static str> {
    match opener {
        "\"" => Some("\""),
        "/*" => Some("*/"),
        "//" => Some(""),
        _ => None,
    }
}

struct Emitter<'c> {
    config: &'c PipelineConfig,
    out: Vec<CorpusWord>,
}

impl Emitter<'_> {
    fn replace_nonenglish(&self) -> bool {
        !matches!(self.config.nonenglish_policy, NonEnglishPolicy::Keep)
    }

    fn source(&mut self, text: &str, kind: TokenKind) {
        if self.replace_nonenglish() && is_nonenglish(text) {
            self.out.push(CorpusWord::marker(NON_ENGLISH));
        } else {
            self.out.push(CorpusWord::source(text, kind));
        }
    }

    fn literal_group(&mut self, text: &str, kind: TokenKind) {
        let (opener, body, closer) = literal_parts(text, kind);
        self.out.push(CorpusWord::marker(WORD_START));
        self.out.push(CorpusWord::source(opener, kind));
        let runs: Vec<&str> = split_runs(body);
        for (i, run) in runs.iter().enumerate() {
            if run.starts_with(is_ws) {
                let between_words = i > 0 && i + 1 < runs.len();
                if !(between_words && *run == " ") {
                    encode_whitespace(run, self.config.whitespace_policy, &mut self.out);
                }
            } else {
                self.source(run, kind);
            }
        }
        if !closer.is_empty() {
            self.out.push(CorpusWord::source(closer, kind));
        }
        self.out.push(CorpusWord::marker(WORD_END));
    }

    fn number(&mut self, text: &str) {
        match self.config.number_policy {
            NumberPolicy::Keep => self.source(text, TokenKind::NumberLiteral),
            NumberPolicy::PlaceholderAll => self.out.push(CorpusWord::marker(NUMBER)),
            NumberPolicy::KeepSmall(threshold) => match integer_value(text) {
                Some(v) if v < u128::from(threshold) => {
                    self.source(text, TokenKind::NumberLiteral)
                }
                _ => self.out.push(CorpusWord::marker(NUMBER)),
            },
            NumberPolicy::SplitDigits => self.out.extend(split_number(text)),
        }
    }

    fn identifier(&mut self, text: &str, kind: TokenKind) {
        let keep_case = match self.config.split_policy {
            SplitPolicy::Unsplit => return self.source(text, kind),
            SplitPolicy::SplitCaseEncoded => false,
            SplitPolicy::SplitKeepCase => true,
        };
        for w in identifier::split_identifier_as(text, keep_case, kind) {
            if w.is_marker {
                self.out.push(w);
            } else {
                self.source(&w.text, kind);
            }
        }
    }
}

/// Splits text into maximal runs of whitespace and non-whitespace.
fn split_runs(text: &str) -> Vec<&str> {
    let mut runs = Vec::new();
    let mut start = 0;
    let mut prev_ws = None;
    for (i, c) in text.char_indices() {
        let ws = is_ws(c);
        if prev_ws.is_some_and(|p| p != ws) {
            runs.push(&text[start..i]);
            start = i;
        }
        prev_ws = Some(ws);
    }
    if start < text.len() {
        runs.push(&text[start..]);
    }
    runs
}

/// Runs every policy of `config` over the tokens of one file.
pub fn apply(tokens: &[Token<'_>], config: &PipelineConfig) -> Processed {
    if let NonEnglishPolicy::ReplaceTokenAndFilterFiles {
        code_threshold,
        code_and_strings_threshold,
    } = config.nonenglish_policy
    {
        let (code_ratio, code_and_strings_ratio) = file_nonenglish_ratio(tokens);
        if code_ratio > code_threshold || code_and_strings_ratio > code_and_strings_threshold {
            return Processed::Filtered {
                code_ratio,
                code_and_strings_ratio,
            };
        }
    }

    let mut em = Emitter {
        config,
        out: Vec::with_capacity(tokens.len()),
    };
    let mut pending_ws = String::new();
    for t in tokens {
        if t.kind == TokenKind::Whitespace {
            pending_ws.push_str(t.text);
            continue;
        }
        if !pending_ws.is_empty() {
            encode_whitespace(&pending_ws, config.whitespace_policy, &mut em.out);
            pending_ws.clear();
        }
        match t.kind {
            TokenKind::Comment => match config.comment_policy {
                TextPolicy::Placeholder => em.out.push(CorpusWord::marker(COMMENT)),
                TextPolicy::KeepAsWords => em.literal_group(t.text, t.kind),
            },
            TokenKind::StringLiteral => match config.string_policy {
                TextPolicy::Placeholder => em.out.push(CorpusWord::marker(STRING)),
                TextPolicy::KeepAsWords => em.literal_group(t.text, t.kind),
            },
            TokenKind::NumberLiteral => em.number(t.text),
            TokenKind::Identifier | TokenKind::Keyword => em.identifier(t.text, t.kind),
            _ => em.source(t.text, t.kind),
        }
    }
    if !pending_ws.is_empty() {
        encode_whitespace(&pending_ws, config.whitespace_policy, &mut em.out);
    }
    Processed::Words(em.out)
}

/// Counts source-derived words (markers excluded).
pub fn word_frequencies<'a, I>(files: I) -> HashMap<String, u64>
where
    I: IntoIterator<Item = &'a [CorpusWord]>,
{
    let mut freq = HashMap::new();
    for words in files {
        for w in words.iter().filter(|w| !w.is_marker) {
            *freq.entry(w.text.clone()).or_insert(0) += 1;
        }
    }
    freq
}

/// Replaces every source word whose training frequency is below its
/// threshold with `<unk>`. The threshold is `per_kind[kind]` when present,
/// `k` otherwise. Markers are never replaced.
pub fn filter_infrequent(
    words: &[CorpusWord],
    training_frequency: &HashMap<String, u64>,
    k: u64,
    per_kind: &BTreeMap<TokenKind, u64>,
) -> Vec<CorpusWord> {
    words
        .iter()
        .map(|w| {
            if w.is_marker {
                return w.clone();
            }
            let threshold = w
                .kind
                .and_then(|kind| per_kind.get(&kind).copied())
                .unwrap_or(k);
            let count = training_frequency.get(&w.text).copied().unwrap_or(0);
            if count < threshold {
                CorpusWord::marker(UNKNOWN)
            } else {
                w.clone()
            }
        })
        .collect()
}

/// Rebuilds the source text from words produced with lossless settings.
pub fn reconstruct(words: &[CorpusWord]) -> Result<String> {
    let lossy = |w: &CorpusWord| Error::MalformedMarkers {
        marker: w.text.clone(),
        reason: "marker cannot be decoded back to source text".into(),
    };
    let mut out = String::new();
    let mut i = 0;
    while i < words.len() {
        let w = &words[i];
        if !w.is_marker {
            out.push_str(&w.text);
            i += 1;
            continue;
        }
        match w.text.as_str() {
            WORD_START => {
                let end = words[i + 1..]
                    .iter()
                    .position(|w| w.is(WORD_END))
                    .map(|p| i + 1 + p)
                    .ok_or_else(|| Error::MalformedMarkers {
                        marker: WORD_START.into(),
                        reason: "unclosed group".into(),
                    })?;
                let group = &words[i + 1..end];
                match group.first() {
                    Some(first) if !first.is_marker && closer_for(&first.text).is_some() => {
                        out.push_str(&decode_literal(group)?);
                    }
                    _ => out.push_str(&identifier::decode_subtokens(group)?),
                }
                i = end + 1;
            }
            UPPER | ALL_CAPS => {
                let end = (i + 2).min(words.len());
                out.push_str(&identifier::decode_subtokens(&words[i..end])?);
                i = end;
            }
            UNDERSCORE => {
                out.push('_');
                i += 1;
            }
            marker => {
                out.push_str(&decode_whitespace(marker).ok_or_else(|| lossy(w))?);
                i += 1;
            }
        }
    }
    Ok(out)
}

fn decode_literal(group: &[CorpusWord]) -> Result<String> {
    let opener = &group[0].text;
    let closer = closer_for(opener).unwrap_or("");
    let mut body = &group[1..];
    let mut close = "";
    if let Some(last) = body.last() {
        if !closer.is_empty() && !last.is_marker && last.text == closer {
            body = &body[..body.len() - 1];
            close = closer;
        }
    }
    let mut out = opener.clone();
    let mut prev_word = false;
    for w in body {
        if w.is_marker {
            let ws = decode_whitespace(&w.text).ok_or_else(|| Error::MalformedMarkers {
                marker: w.text.clone(),
                reason: "marker cannot be decoded back to source text".into(),
            })?;
            out.push_str(&ws);
            prev_word = false;
        } else {
            if prev_word {
                out.push(' ');
            }
            out.push_str(&w.text);
            prev_word = true;
        }
    }
    out.push_str(close);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexer::lex;
    use proptest::prelude::*;

    fn run(src: &str, config: &PipelineConfig) -> String {
        let words = apply(&lex(src), config).words().unwrap().to_vec();
        words.iter().map(|w| w.encoded()).collect::<Vec<_>>().join(" ")
    }

    fn unsplit_drop() -> PipelineConfig {
        PipelineConfig {
            whitespace_policy: WhitespacePolicy::Drop,
            ..Default::default()
        }
    }

    #[test]
    fn nonenglish_detection() {
        assert!(is_nonenglish("café"));
        assert!(is_nonenglish("naïve"));
        assert!(!is_nonenglish("hello_world42"));
        assert!(!is_nonenglish(""));
    }

    #[test]
    fn ratio_of_clean_file_is_zero() {
        assert_eq!(file_nonenglish_ratio(&lex("int x = \"hi there\";")), (0.0, 0.0));
        assert_eq!(file_nonenglish_ratio(&[]), (0.0, 0.0));
    }

    #[test]
    fn ratio_with_two_percent_nonenglish_identifiers_filters() {
        let mut src = String::new();
        for i in 0..98 {
            src.push_str(&format!("v{i} "));
        }
        src.push_str("café naïve");
        let tokens = lex(&src);
        let (code, both) = file_nonenglish_ratio(&tokens);
        assert!((code - 0.02).abs() < 1e-12);
        assert!((both - 0.02).abs() < 1e-12);
        let config = PipelineConfig {
            nonenglish_policy: NonEnglishPolicy::filter_files(),
            ..Default::default()
        };
        assert!(matches!(apply(&tokens, &config), Processed::Filtered { .. }));
    }

    #[test]
    fn ratio_mixed_file_hand_count() {
        // identifiers: a, größe, b, println -> 1/4 non-English
        // string words: "héllo", "world", "ok" -> 1 more out of 3
        let src = "a = größe + b; println(\"héllo world\", \"ok\");";
        let (code, both) = file_nonenglish_ratio(&lex(src));
        assert!((code - 0.25).abs() < 1e-12);
        assert!((both - 2.0 / 7.0).abs() < 1e-12);
    }

    #[test]
    fn number_splitting() {
        let text = |ws: Vec<CorpusWord>| {
            ws.iter().map(|w| w.text.clone()).collect::<Vec<_>>().join(" ")
        };
        assert_eq!(text(split_number("123")), "<w> 1 2 3 </w>");
        assert_eq!(text(split_number("7")), "7");
        let hex = split_number("0xFF");
        assert_eq!(text(hex.clone()), "<w> 0 x F F </w>");
        let inner: String = hex[1..hex.len() - 1].iter().map(|w| w.text.as_str()).collect();
        assert_eq!(inner, "0xFF");
    }

    #[test]
    fn integer_values() {
        assert_eq!(integer_value("42"), Some(42));
        assert_eq!(integer_value("1_000L"), Some(1000));
        assert_eq!(integer_value("0x1F"), Some(31));
        assert_eq!(integer_value("0b101"), Some(5));
        assert_eq!(integer_value("017"), Some(15));
        assert_eq!(integer_value("0"), Some(0));
        assert_eq!(integer_value("1.5"), None);
        assert_eq!(integer_value("2f"), None);
    }

    #[test]
    fn comment_placeholder() {
        let config = PipelineConfig {
            comment_policy: TextPolicy::Placeholder,
            ..unsplit_drop()
        };
        assert_eq!(run("/* hi */", &config), "<comment>");
    }

    #[test]
    fn string_as_words() {
        assert_eq!(run("\"two words\"", &unsplit_drop()), "<w> \" two words \" </w>");
        let config = PipelineConfig {
            string_policy: TextPolicy::Placeholder,
            ..unsplit_drop()
        };
        assert_eq!(run("f(\"two words\")", &config), "f ( <string> )");
    }

    #[test]
    fn string_words_match_whitespace_split() {
        let body = "alpha  beta\tgamma delta";
        let src = format!("\"{body}\"");
        let words = apply(&lex(&src), &unsplit_drop()).words().unwrap().to_vec();
        let inner: Vec<&str> = words[2..words.len() - 2].iter().map(|w| w.text.as_str()).collect();
        let oracle: Vec<&str> = body.split_whitespace().collect();
        assert_eq!(inner, oracle);
    }

    #[test]
    fn whitespace_drop_on_declaration() {
        assert_eq!(run("int x = 1;", &unsplit_drop()), "int x = 1 ;");
    }

    #[test]
    fn whitespace_keep_each_and_merge() {
        let keep = PipelineConfig::default();
        assert_eq!(run("a\t\tb  c\n", &keep), "a <tab> <tab> b <sp> <sp> c <nl>");
        let merge = PipelineConfig {
            whitespace_policy: WhitespacePolicy::MergeRuns,
            ..Default::default()
        };
        assert_eq!(run("a\t\tb  c\n", &merge), "a <tab2> b <sp2> c <nl>");
        let long = format!("a{}b", "\t".repeat(12));
        assert_eq!(run(&long, &merge), "a <tab8+> b");
        assert_eq!(run(&format!("a{}b", " ".repeat(7)), &merge), "a <sp7> b");
    }

    #[test]
    fn number_policies() {
        let with = |number_policy| PipelineConfig {
            number_policy,
            ..unsplit_drop()
        };
        let src = "f(7, 250, 3.5, 0x10)";
        assert_eq!(run(src, &with(NumberPolicy::Keep)), "f ( 7 , 250 , 3.5 , 0x10 )");
        assert_eq!(
            run(src, &with(NumberPolicy::PlaceholderAll)),
            "f ( <num> , <num> , <num> , <num> )"
        );
        assert_eq!(
            run(src, &with(NumberPolicy::KeepSmall(100))),
            "f ( 7 , <num> , <num> , 0x10 )"
        );
        assert_eq!(
            run(src, &with(NumberPolicy::SplitDigits)),
            "f ( 7 , <w> 2 5 0 </w> , <w> 3 . 5 </w> , <w> 0 x 1 0 </w> )"
        );
    }

    #[test]
    fn nonenglish_replacement_targets_subtokens() {
        let config = PipelineConfig {
            nonenglish_policy: NonEnglishPolicy::ReplaceToken,
            split_policy: SplitPolicy::SplitCaseEncoded,
            ..unsplit_drop()
        };
        assert_eq!(
            run("getCafé(); // très bien", &config),
            "<w> get <Upper> <non-en> </w> ( ) ; <w> // <non-en> bien </w>"
        );
        let unsplit = PipelineConfig {
            nonenglish_policy: NonEnglishPolicy::ReplaceToken,
            ..unsplit_drop()
        };
        assert_eq!(run("getCafé();", &unsplit), "<non-en> ( ) ;");
    }

    #[test]
    fn identifier_splitting_in_stream() {
        let config = PipelineConfig {
            split_policy: SplitPolicy::SplitCaseEncoded,
            ..unsplit_drop()
        };
        assert_eq!(
            run("throw new MalformedURLException();", &config),
            "throw new <w> <Upper> malformed <UPPER> url <Upper> exception </w> ( ) ;"
        );
    }

    #[test]
    fn marker_like_source_words_are_escaped_in_stream() {
        assert_eq!(run("// see <w> here", &unsplit_drop()), "<w> // see \\<w> here </w>");
    }

    #[test]
    fn infrequent_filtering() {
        let words: Vec<CorpusWord> = ["a", "b", "a", "a", "c"]
            .into_iter()
            .map(|w| CorpusWord::source(w, TokenKind::Identifier))
            .collect();
        let freq: HashMap<String, u64> = [("a".to_string(), 3), ("b".to_string(), 1)].into();
        let per_kind = BTreeMap::new();
        assert_eq!(filter_infrequent(&words[..4], &freq, 1, &per_kind), words[..4].to_vec());
        let filtered = filter_infrequent(&words, &freq, 2, &per_kind);
        let text: Vec<&str> = filtered.iter().map(|w| w.text.as_str()).collect();
        assert_eq!(text, ["a", "<unk>", "a", "a", "<unk>"]);
        // c is unseen in training: replaced even with k = 1.
        assert!(filter_infrequent(&words, &freq, 1, &per_kind)[4].is(UNKNOWN));

        let per_kind: BTreeMap<_, _> = [(TokenKind::NumberLiteral, 5)].into();
        let mixed = vec![
            CorpusWord::source("a", TokenKind::Identifier),
            CorpusWord::source("a", TokenKind::NumberLiteral),
            CorpusWord::marker(NEWLINE),
        ];
        let out = filter_infrequent(&mixed, &freq, 2, &per_kind);
        assert_eq!(out[0].text, "a");
        assert!(out[1].is(UNKNOWN));
        assert!(out[2].is(NEWLINE));
    }

    #[test]
    fn reconstruct_default_config_examples() {
        let config = PipelineConfig::default();
        for src in [
            "int x = 1;",
            "/* hi */\n// c\r\n\"a  b\" '\\n' \"\" \"x",
            "/** Doc\n *  line\n */\nclass A {}",
            "/*",
            "//",
            "\"\\\"\" /*/ x",
            "\x0c\t  \n",
        ] {
            let words = apply(&lex(src), &config).words().unwrap().to_vec();
            assert_eq!(reconstruct(&words).unwrap(), src, "{src:?}");
        }
    }

    #[test]
    fn reconstruct_rejects_lossy_markers() {
        let config = PipelineConfig {
            comment_policy: TextPolicy::Placeholder,
            ..Default::default()
        };
        let words = apply(&lex("/* x */ a"), &config).words().unwrap().to_vec();
        assert!(reconstruct(&words).is_err());
    }

    fn lossless_configs() -> Vec<PipelineConfig> {
        vec![
            PipelineConfig::default(),
            PipelineConfig {
                split_policy: SplitPolicy::SplitCaseEncoded,
                ..Default::default()
            },
            PipelineConfig {
                split_policy: SplitPolicy::SplitKeepCase,
                number_policy: NumberPolicy::SplitDigits,
                ..Default::default()
            },
        ]
    }

    proptest! {
        #[test]
        fn lossless_on_java_like_text(src in "[a-zA-Z0-9_$ \t\n\"'\\\\/*.+<>=(){};é]{0,200}") {
            for config in lossless_configs() {
                let words = apply(&lex(&src), &config).words().unwrap().to_vec();
                prop_assert_eq!(reconstruct(&words).unwrap(), src.clone());
                let text = write_corpus(&words);
                let back = read_corpus(&text, "mem").unwrap();
                prop_assert_eq!(reconstruct(&back).unwrap(), src.clone());
            }
        }

        #[test]
        fn splitting_never_shrinks_word_count(src in "[a-zA-Z0-9_ ;.()]{0,120}") {
            let tokens = lex(&src);
            let unsplit = apply(&tokens, &PipelineConfig::default());
            let split = apply(&tokens, &lossless_configs()[1]);
            prop_assert!(split.words().unwrap().len() >= unsplit.words().unwrap().len());
        }
    }
}
