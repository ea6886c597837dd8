//! Corpus words, structural markers and the on-disk corpus file format.
//!
//! A corpus file holds the words of one source file separated by single
//! spaces. When whitespace is modeled, every newline marker is followed by a
//! real line break so that the corpus keeps the line structure of the source.
//!
//! Source-derived words are escaped so they can never be confused with
//! markers: a backslash is doubled, whitespace characters become `\s`, `\t`,
//! `\n`, `\r` and `\f`, and a word shaped like `<...>` gets a leading `\`.

use std::fmt;

use crate::error::{Error, Result};
use crate::lexer::TokenKind;

pub const WORD_START: &str = "<w>";
pub const WORD_END: &str = "</w>";
pub const UPPER: &str = "<Upper>";
pub const ALL_CAPS: &str = "<UPPER>";
pub const UNDERSCORE: &str = "<_>";
pub const COMMENT: &str = "<comment>";
pub const STRING: &str = "<string>";
pub const NON_ENGLISH: &str = "<non-en>";
pub const NUMBER: &str = "<num>";
pub const UNKNOWN: &str = "<unk>";
pub const TAB: &str = "<tab>";
pub const NEWLINE: &str = "<nl>";
pub const SPACE: &str = "<sp>";
pub const CARRIAGE_RETURN: &str = "<cr>";
pub const FORM_FEED: &str = "<ff>";
/// Word-end symbol appended by BPE segmentation.
pub const END_OF_WORD: &str = "</t>";

/// One word of a processed corpus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CorpusWord {
    pub text: String,
    pub is_marker: bool,
    /// Kind of the source token this word came from; `None` for markers.
    pub kind: Option<TokenKind>,
}

impl CorpusWord {
    pub fn marker(text: &str) -> Self {
        CorpusWord {
            text: text.to_string(),
            is_marker: true,
            kind: None,
        }
    }

    pub fn source(text: impl Into<String>, kind: TokenKind) -> Self {
        CorpusWord {
            text: text.into(),
            is_marker: false,
            kind: Some(kind),
        }
    }

    /// A source word whose originating token kind is not known (e.g. read back
    /// from a corpus file).
    pub fn plain(text: impl Into<String>) -> Self {
        CorpusWord {
            text: text.into(),
            is_marker: false,
            kind: None,
        }
    }

    pub fn is(&self, marker: &str) -> bool {
        self.is_marker && self.text == marker
    }

    /// The word as it appears in a corpus file.
    pub fn encoded(&self) -> String {
        if self.is_marker {
            self.text.clone()
        } else {
            escape_word(&self.text)
        }
    }
}

impl fmt::Display for CorpusWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encoded())
    }
}

pub(crate) fn looks_like_marker(word: &str) -> bool {
    word.len() >= 2 && word.starts_with('<') && word.ends_with('>')
}

/// True for markers that stand for a newline (`<nl>`, `<nl2>`, ...).
pub fn is_newline_marker(word: &CorpusWord) -> bool {
    word.is_marker && word.text.starts_with("<nl")
}

pub fn escape_word(word: &str) -> String {
    let mut out = String::with_capacity(word.len() + 1);
    if looks_like_marker(word) {
        out.push('\\');
    }
    push_escaped(&mut out, word);
    out
}

/// Escapes backslashes and whitespace only; used by the BPE merges and
/// vocabulary files, where marker-shaped symbols need no protection.
pub fn escape_symbol(symbol: &str) -> String {
    let mut out = String::with_capacity(symbol.len());
    push_escaped(&mut out, symbol);
    out
}

pub fn unescape_symbol(raw: &str) -> Option<String> {
    let mut out = String::with_capacity(raw.len());
    let mut chars = raw.chars();
    while let Some(c) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        out.push(match chars.next()? {
            '\\' => '\\',
            's' => ' ',
            't' => '\t',
            'n' => '\n',
            'r' => '\r',
            'f' => '\x0c',
            _ => return None,
        });
    }
    Some(out)
}

fn push_escaped(out: &mut String, word: &str) {
    for c in word.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            ' ' => out.push_str("\\s"),
            '\t' => out.push_str("\\t"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\x0c' => out.push_str("\\f"),
            c => out.push(c),
        }
    }
}

/// Parses one word of a corpus file. `None` means the escape is malformed.
pub fn decode_word(raw: &str) -> Option<CorpusWord> {
    if !raw.contains('\\') {
        return Some(if looks_like_marker(raw) {
            CorpusWord::marker(raw)
        } else {
            CorpusWord::plain(raw)
        });
    }
    let mut out = String::with_capacity(raw.len());
    let mut chars = raw.chars().enumerate();
    while let Some((i, c)) = chars.next() {
        if c != '\\' {
            out.push(c);
            continue;
        }
        match chars.next()?.1 {
            '\\' => out.push('\\'),
            's' => out.push(' '),
            't' => out.push('\t'),
            'n' => out.push('\n'),
            'r' => out.push('\r'),
            'f' => out.push('\x0c'),
            '<' if i == 0 => out.push('<'),
            _ => return None,
        }
    }
    if looks_like_marker(raw) && !raw.starts_with('\\') {
        // `<a\sb>`: marker-shaped but unescaped.
        return None;
    }
    if raw.starts_with("\\<") != looks_like_marker(&out) {
        return None;
    }
    Some(CorpusWord::plain(out))
}

/// Renders the words of one source file in corpus file format.
pub fn write_corpus(words: &[CorpusWord]) -> String {
    let mut out = String::new();
    for (i, w) in words.iter().enumerate() {
        if i > 0 && !out.ends_with('\n') {
            out.push(' ');
        }
        out.push_str(&w.encoded());
        if is_newline_marker(w) {
            out.push('\n');
        }
    }
    if !out.is_empty() && !out.ends_with('\n') {
        out.push('\n');
    }
    out
}

/// Parses a corpus file. `file` is only used for error messages.
pub fn read_corpus(text: &str, file: &str) -> Result<Vec<CorpusWord>> {
    let mut words = Vec::new();
    for (line_no, line) in text.lines().enumerate() {
        for raw in line.split(' ').filter(|w| !w.is_empty()) {
            let word = decode_word(raw).ok_or_else(|| Error::MalformedEscape {
                file: file.to_string(),
                line: line_no + 1,
                word: raw.to_string(),
            })?;
            words.push(word);
        }
    }
    Ok(words)
}

/// Visits every encoded word of a corpus file without building a vector.
pub fn for_each_encoded_word(text: &str, file: &str, mut f: impl FnMut(&str)) -> Result<()> {
    for (line_no, line) in text.lines().enumerate() {
        for raw in line.split(' ').filter(|w| !w.is_empty()) {
            if raw.contains('\\') && decode_word(raw).is_none() {
                return Err(Error::MalformedEscape {
                    file: file.to_string(),
                    line: line_no + 1,
                    word: raw.to_string(),
                });
            }
            f(raw);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn markers_round_trip_unescaped() {
        let w = CorpusWord::marker(UPPER);
        assert_eq!(w.encoded(), "<Upper>");
        assert_eq!(decode_word("<Upper>"), Some(w));
    }

    #[test]
    fn marker_shaped_source_words_are_escaped() {
        let w = CorpusWord::plain("<w>");
        assert_eq!(w.encoded(), "\\<w>");
        let back = decode_word("\\<w>").unwrap();
        assert_eq!(back.text, "<w>");
        assert!(!back.is_marker);
    }

    #[test]
    fn backslashes_and_whitespace() {
        assert_eq!(escape_word(r"a\b"), r"a\\b");
        assert_eq!(escape_word("' '"), r"'\s'");
        assert_eq!(escape_word("<a b>"), r"\<a\sb>");
        assert_eq!(escape_word(r"\<x>"), r"\\<x>");
        assert_eq!(decode_word(r"\\<x>").unwrap().text, r"\<x>");
    }

    #[test]
    fn escaping_is_idempotent_on_decode() {
        for w in ["<w>", r"\<w>", r"\\", "plain", "<", ">", "<>"] {
            let once = escape_word(w);
            assert_eq!(decode_word(&once).unwrap().text, w);
        }
    }

    #[test]
    fn malformed_escapes_are_rejected() {
        assert!(decode_word(r"a\q").is_none());
        assert!(decode_word("a\\").is_none());
        assert!(decode_word(r"x\<y").is_none());
        assert!(decode_word(r"<a\sb>").is_none());
        let err = read_corpus("ok\nbad\\z", "f.tok").unwrap_err();
        match err {
            Error::MalformedEscape { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn newline_markers_break_lines() {
        let words = vec![
            CorpusWord::plain("a"),
            CorpusWord::marker(NEWLINE),
            CorpusWord::plain("b"),
        ];
        let text = write_corpus(&words);
        assert_eq!(text, "a <nl>\nb\n");
        assert_eq!(read_corpus(&text, "x").unwrap(), words);
    }

    proptest! {
        #[test]
        fn escape_decode_identity(s in "\\PC{1,12}|[<>\\\\ a]{1,6}") {
            let decoded = decode_word(&escape_word(&s)).unwrap();
            prop_assert_eq!(decoded.text, s);
            prop_assert!(!decoded.is_marker);
        }
    }
}
