//! Convention-based identifier splitting with reversible case encoding.
//!
//! Identifiers split at underscores, at lowercase-to-uppercase transitions and
//! before the last capital of an uppercase run that is followed by lowercase
//! letters (`URLException` becomes `URL` + `Exception`). Only ASCII letters
//! carry case; digits, `$` and non-ASCII characters are caseless and stay
//! attached to the subtoken they follow.
//!
//! In case-encoded mode every subtoken is lowercased and prefixed with
//! `<Upper>` (capitalized) or `<UPPER>` (all caps, two or more letters), which
//! makes the transformation exactly invertible.

use crate::error::{Error, Result};
use crate::lexer::TokenKind;

use super::words::{CorpusWord, ALL_CAPS, UNDERSCORE, UPPER, WORD_END, WORD_START};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Case {
    Lower,
    Capitalized,
    AllCaps,
}

#[derive(Debug, PartialEq, Eq)]
enum Piece<'a> {
    Underscore,
    Sub(&'a str, Case),
}

fn segments(word: &str) -> Vec<Piece<'_>> {
    fn close<'a>(pieces: &mut Vec<Piece<'a>>, s: &'a str, caps: usize) {
        if !s.is_empty() {
            let case = match caps {
                0 => Case::Lower,
                1 => Case::Capitalized,
                _ => Case::AllCaps,
            };
            pieces.push(Piece::Sub(s, case));
        }
    }

    let mut pieces = Vec::new();
    let mut start = 0;
    // The current segment is `caps` uppercase letters followed by a tail of
    // other characters; `tail` is set once anything but a capital is seen.
    let mut caps = 0usize;
    let mut tail = false;
    let mut prev = 0;

    for (i, c) in word.char_indices() {
        if c == '_' {
            close(&mut pieces, &word[start..i], caps);
            pieces.push(Piece::Underscore);
            start = i + 1;
            caps = 0;
            tail = false;
        } else if c.is_ascii_uppercase() {
            if tail {
                close(&mut pieces, &word[start..i], caps);
                start = i;
                caps = 1;
                tail = false;
            } else {
                caps += 1;
            }
        } else {
            if c.is_ascii_lowercase() && caps >= 2 {
                if tail {
                    // URL2x: an all-caps segment cannot take lowercase letters.
                    close(&mut pieces, &word[start..i], caps);
                    start = i;
                    caps = 0;
                } else {
                    // URLException: the last capital starts the next word.
                    close(&mut pieces, &word[start..prev], caps - 1);
                    start = prev;
                    caps = 1;
                }
            }
            tail = true;
        }
        prev = i;
    }
    close(&mut pieces, &word[start..], caps);
    pieces
}

/// Splits an identifier or keyword into subtokens.
///
/// With `keep_case` the subtokens are emitted verbatim; otherwise they are
/// lowercased and preceded by case markers. Results with more than one
/// element (not counting a leading case marker) are wrapped in `<w> ... </w>`.
pub fn split_identifier(word: &str, keep_case: bool) -> Vec<CorpusWord> {
    split_identifier_as(word, keep_case, TokenKind::Identifier)
}

pub(crate) fn split_identifier_as(word: &str, keep_case: bool, kind: TokenKind) -> Vec<CorpusWord> {
    let pieces = segments(word);
    let mut inner = Vec::with_capacity(pieces.len() * 2);
    for piece in &pieces {
        match *piece {
            Piece::Underscore => inner.push(CorpusWord::marker(UNDERSCORE)),
            Piece::Sub(s, _) if keep_case => inner.push(CorpusWord::source(s, kind)),
            Piece::Sub(s, case) => {
                match case {
                    Case::Lower => {}
                    Case::Capitalized => inner.push(CorpusWord::marker(UPPER)),
                    Case::AllCaps => inner.push(CorpusWord::marker(ALL_CAPS)),
                }
                inner.push(CorpusWord::source(s.to_ascii_lowercase(), kind));
            }
        }
    }
    if pieces.len() <= 1 {
        return inner;
    }
    let mut out = Vec::with_capacity(inner.len() + 2);
    out.push(CorpusWord::marker(WORD_START));
    out.extend(inner);
    out.push(CorpusWord::marker(WORD_END));
    out
}

fn malformed(marker: &str, reason: &str) -> Error {
    Error::MalformedMarkers {
        marker: marker.to_string(),
        reason: reason.to_string(),
    }
}

/// Inverse of [`split_identifier`] for either casing mode.
pub fn unsplit_identifier(words: &[CorpusWord]) -> Result<String> {
    let body = match words {
        [] => return Err(malformed("", "empty word sequence")),
        [first, inner @ .., last] if first.is(WORD_START) => {
            if !last.is(WORD_END) {
                return Err(malformed(&last.text, "expected </w> closing the group"));
            }
            if inner.is_empty() {
                return Err(malformed(WORD_END, "empty group"));
            }
            inner
        }
        [.., last] if last.is(WORD_END) => {
            return Err(malformed(WORD_END, "closing </w> without <w>"))
        }
        _ => {
            let subtokens = words.iter().filter(|w| !w.is(UPPER) && !w.is(ALL_CAPS));
            if subtokens.count() > 1 {
                return Err(malformed(&words[1].text, "multiple subtokens outside <w> group"));
            }
            words
        }
    };
    decode_subtokens(body)
}

/// Concatenates subtokens, applying case markers and `<_>`.
pub(crate) fn decode_subtokens(words: &[CorpusWord]) -> Result<String> {
    let mut out = String::new();
    let mut pending: Option<&str> = None;
    for w in words {
        if w.is_marker {
            match w.text.as_str() {
                UNDERSCORE if pending.is_none() => out.push('_'),
                UPPER | ALL_CAPS if pending.is_none() => pending = Some(&w.text),
                UNDERSCORE | UPPER | ALL_CAPS => {
                    return Err(malformed(&w.text, "case marker must precede a subtoken"))
                }
                other => return Err(malformed(other, "unexpected marker in identifier")),
            }
            continue;
        }
        match pending.take() {
            None => out.push_str(&w.text),
            Some(marker) => {
                if w.text.bytes().any(|b| b.is_ascii_uppercase()) {
                    return Err(malformed(marker, "case marker before a non-lowercase subtoken"));
                }
                if marker == UPPER {
                    let mut chars = w.text.chars();
                    if let Some(first) = chars.next() {
                        out.push(first.to_ascii_uppercase());
                        out.push_str(chars.as_str());
                    }
                } else {
                    out.push_str(&w.text.to_ascii_uppercase());
                }
            }
        }
    }
    if let Some(marker) = pending {
        return Err(malformed(marker, "dangling case marker"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn render(words: &[CorpusWord]) -> String {
        words.iter().map(|w| w.text.as_str()).collect::<Vec<_>>().join(" ")
    }

    fn subtokens(word: &str) -> Vec<&str> {
        segments(word)
            .into_iter()
            .map(|p| match p {
                Piece::Underscore => "_",
                Piece::Sub(s, _) => s,
            })
            .collect()
    }

    #[test]
    fn segmentation_rules() {
        assert_eq!(subtokens("MalformedURLException"), ["Malformed", "URL", "Exception"]);
        assert_eq!(subtokens("getValue"), ["get", "Value"]);
        assert_eq!(subtokens("HTML5Parser"), ["HTML5", "Parser"]);
        assert_eq!(subtokens("utf8String"), ["utf8", "String"]);
        assert_eq!(subtokens("x86_64"), ["x86", "_", "64"]);
        assert_eq!(subtokens("URL2x"), ["URL2", "x"]);
        assert_eq!(subtokens("A2x"), ["A2x"]);
        assert_eq!(subtokens("ABc"), ["A", "Bc"]);
        assert_eq!(subtokens("__init__"), ["_", "_", "init", "_", "_"]);
        assert_eq!(subtokens("$jacocoData"), ["$jacoco", "Data"]);
        assert_eq!(subtokens("a1B"), ["a1", "B"]);
        assert_eq!(subtokens("1A"), ["1", "A"]);
    }

    #[test]
    fn table_examples_lowercase() {
        assert_eq!(
            render(&split_identifier("MalformedURLException", false)),
            "<w> <Upper> malformed <UPPER> url <Upper> exception </w>"
        );
        assert_eq!(
            render(&split_identifier("LAYOUT_INFLATER_SERVICE", false)),
            "<w> <UPPER> layout <_> <UPPER> inflater <_> <UPPER> service </w>"
        );
        assert_eq!(
            render(&split_identifier("Tokenbreakingconventions", false)),
            "<Upper> tokenbreakingconventions"
        );
    }

    #[test]
    fn table_examples_case_preserving() {
        assert_eq!(
            render(&split_identifier("MalformedURLException", true)),
            "<w> Malformed URL Exception </w>"
        );
        assert_eq!(
            render(&split_identifier("LAYOUT_INFLATER_SERVICE", true)),
            "<w> LAYOUT <_> INFLATER <_> SERVICE </w>"
        );
        assert_eq!(
            render(&split_identifier("Tokenbreakingconventions", true)),
            "Tokenbreakingconventions"
        );
    }

    #[test]
    fn single_words() {
        assert_eq!(render(&split_identifier("value", false)), "value");
        assert_eq!(render(&split_identifier("VALUE", false)), "<UPPER> value");
        assert_eq!(render(&split_identifier("X", false)), "<Upper> x");
        assert_eq!(render(&split_identifier("_", false)), "<_>");
    }

    #[test]
    fn unsplit_examples() {
        let words = split_identifier("MalformedURLException", false);
        assert_eq!(unsplit_identifier(&words).unwrap(), "MalformedURLException");
        assert_eq!(unsplit_identifier(&[CorpusWord::plain("value")]).unwrap(), "value");
    }

    #[test]
    fn malformed_sequences_name_the_marker() {
        let m = CorpusWord::marker;
        let p = CorpusWord::plain;
        let cases: Vec<(Vec<CorpusWord>, &str)> = vec![
            (vec![m(WORD_START), p("a"), p("b")], "b"),
            (vec![m(WORD_START), p("a"), m(UPPER), m(WORD_END)], UPPER),
            (vec![m(UPPER), m(ALL_CAPS), p("a")], ALL_CAPS),
            (vec![m(WORD_START), m(WORD_END)], WORD_END),
            (vec![m(UPPER), p("Abc")], UPPER),
            (vec![m(WORD_START), p("a"), m("<num>"), m(WORD_END)], "<num>"),
            (vec![p("a"), m(WORD_END)], WORD_END),
        ];
        for (words, marker) in cases {
            match unsplit_identifier(&words) {
                Err(Error::MalformedMarkers { marker: got, .. }) => assert_eq!(got, marker),
                other => panic!("{words:?}: unexpected {other:?}"),
            }
        }
        assert!(unsplit_identifier(&[]).is_err());
    }

    #[test]
    fn non_ascii_is_caseless() {
        for w in ["naïveÉtat", "ÉTAT_x", "straße", "İstanbulCity", "caféBar"] {
            for keep in [true, false] {
                assert_eq!(unsplit_identifier(&split_identifier(w, keep)).unwrap(), w);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn round_trip(word in "[A-Za-z0-9_]{1,24}", keep in any::<bool>()) {
            let words = split_identifier(&word, keep);
            prop_assert_eq!(unsplit_identifier(&words).unwrap(), word);
        }

        #[test]
        fn lowercase_mode_has_no_uppercase_subtokens(word in "[A-Za-z0-9_]{1,24}") {
            for w in split_identifier(&word, false) {
                if !w.is_marker {
                    prop_assert!(!w.text.bytes().any(|b| b.is_ascii_uppercase()));
                }
            }
        }
    }
}
